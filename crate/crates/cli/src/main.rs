fn main() {
    std::process::exit(cprep_cli::main_with_args(std::env::args_os()));
}
