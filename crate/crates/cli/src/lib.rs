//! Command-line front end: group-spec parsing, commands and reports.

pub mod config;
pub mod dsl;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cprep_core::analysis::{center_context, cp_existence, gaschutz, omega_chi, AnalysisError, GroupContext, Pair};
use cprep_core::central_ext::{
    extension_from_cocycle, has_c_faithful_irreducible, k_c, reduce_order, splits_over_subgroup, z_c, CentralExtension,
    Cocycle, CocycleJson, ExtError,
};
use cprep_core::chartab::{CharError, CharacterTable};
use cprep_core::group::{FiniteGroup, GroupError, SubgroupRef};
use cprep_core::scan::{scan, Verdict};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::Config;
use crate::dsl::{parse_spec, parse_word_list, subgroup_from_words, BuildError, SyntaxError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Ext(#[from] ExtError),
    #[error("config: {0}")]
    Config(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Syntax(_) => "syntax",
            CliError::Build(_) | CliError::Group(_) => "group",
            CliError::Analysis(_) | CliError::Char(_) => "analysis",
            CliError::Ext(_) => "extension",
            CliError::Config(_) => "config",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": { "kind": self.kind(), "message": self.to_string() } });
        if let CliError::Syntax(e) = self {
            v["error"]["line"] = json!(e.line);
            v["error"]["col"] = json!(e.col);
            v["error"]["expected"] = json!(e.expected);
        }
        v
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cprep", version, about = "Character tables, center-preserving representations and central extensions of finite groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Accepted for compatibility; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table.
    Table { spec: String },
    /// Minimal normal subgroups and the socle.
    Socle { spec: String },
    /// The four equivalent conditions for a faithful irreducible character.
    Gaschutz { spec: String },
    /// Decompose Ind_H^G of every irreducible of H.
    Induce {
        spec: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Center-preserving constituents of Ind_H^G for faithful irreducibles of H.
    CpCheck {
        spec: String,
        #[arg(long)]
        subgroup: String,
    },
    /// The map omega_chi for every character of the center.
    Omega { spec: String },
    /// Run the checks over a catalog.
    Scan {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Worker threads (0: all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Scan every subgroup rather than one per conjugacy class.
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Central extensions and cocycles.
    #[command(subcommand)]
    Ext(ExtCommand),
}

#[derive(Debug, Args)]
pub struct CocycleSource {
    /// Base group of the cocycle.
    #[arg(long)]
    pub base: String,
    /// Cocycle JSON file.
    #[arg(long)]
    pub cocycle: PathBuf,
}

#[derive(Debug, Args)]
pub struct ExtSource {
    #[arg(long, requires = "cocycle", conflicts_with_all = ["total", "mu"])]
    pub base: Option<String>,
    #[arg(long)]
    pub cocycle: Option<PathBuf>,
    /// Total group, with `--mu` a cyclic central subgroup.
    #[arg(long, requires = "mu")]
    pub total: Option<String>,
    #[arg(long)]
    pub mu: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ExtCommand {
    /// Build the extension of a cocycle.
    Build(CocycleSource),
    /// A cohomologous cocycle of order dividing |G|.
    Reduce(CocycleSource),
    /// Z_c and K_c of an extension.
    Zc(ExtSource),
    /// An irreducible of the total group faithful on mu with center Z(total).
    Cfaithful(ExtSource),
    /// A complement to mu over a subgroup of the base.
    Split {
        #[command(flatten)]
        source: ExtSource,
        #[arg(long)]
        subgroup: String,
    },
}

/// A finished command: JSON and text renderings and an exit code.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, code: EXIT_OK }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
            Format::Text => self.text.clone(),
        }
    }
}

pub fn build_group(spec: &str) -> Result<FiniteGroup, CliError> {
    Ok(parse_spec(spec)?.build()?)
}

pub fn subgroup_of(g: &FiniteGroup, words: &str) -> Result<SubgroupRef, CliError> {
    Ok(subgroup_from_words(g, &parse_word_list(words)?)?)
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

#[derive(Serialize)]
struct SubgroupJson {
    order: usize,
    elements: Vec<usize>,
    labels: Vec<String>,
}

fn subgroup_json(s: &SubgroupRef) -> SubgroupJson {
    SubgroupJson {
        order: s.order(),
        elements: s.elements().to_vec(),
        labels: s.elements().iter().map(|&x| s.group().label(x).to_string()).collect(),
    }
}

fn subgroup_text(s: &SubgroupRef) -> String {
    let labels: Vec<&str> = s.elements().iter().map(|&x| s.group().label(x)).collect();
    format!("order {} {{{}}}", s.order(), labels.join(", "))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Table { spec } => table(spec),
        Command::Socle { spec } => socle(spec),
        Command::Gaschutz { spec } => gaschutz_cmd(spec),
        Command::Induce { spec, subgroup } => induce(spec, subgroup),
        Command::CpCheck { spec, subgroup } => cp_check(spec, subgroup),
        Command::Omega { spec } => omega(spec),
        Command::Scan { config, jobs, all_subgroups } => scan_cmd(config.as_ref(), *jobs, *all_subgroups),
        Command::Ext(e) => ext(e),
    }
}

/// Parse arguments, run, print; returns the process exit code.
pub fn main_with_args(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = run(&cli).and_then(|out| {
        let text = out.render(cli.format);
        match &cli.out {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?,
            None => print!("{text}"),
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            match cli.format {
                Format::Json => eprintln!("{}", e.to_json()),
                Format::Text => eprintln!("error: {e}"),
            }
            EXIT_INPUT
        }
    }
}

fn table(spec: &str) -> Result<Output, CliError> {
    let g = build_group(spec)?;
    let t = CharacterTable::compute(&g)?;
    let cl = t.classes();
    let mut text = format!("{spec}: order {}, {} classes\n", g.order(), cl.len());
    let head: Vec<String> = (0..cl.len()).map(|k| format!("{}[{}]", g.label(cl.rep(k)), cl.size(k))).collect();
    let _ = writeln!(text, "classes: {}", head.join("  "));
    for (i, r) in t.rows().iter().enumerate() {
        let vals: Vec<String> = r.values().iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "X.{i} (deg {}): {}", r.degree(), vals.join("  "));
    }
    Ok(Output::ok(serde_json::to_value(t.to_json()).expect("serializable"), text))
}

fn socle(spec: &str) -> Result<Output, CliError> {
    let g = build_group(spec)?;
    let mins = g.minimal_normal_subgroups()?;
    let (soc, soca, socn) = (g.socle()?, g.socle_abelian()?, g.socle_nonabelian()?);
    let mut text = format!("{spec}: order {}\n", g.order());
    for m in &mins {
        let _ = writeln!(text, "minimal normal: {}", subgroup_text(m));
    }
    let _ = writeln!(text, "socle: {}\nabelian part: {}\nnon-abelian part: {}", subgroup_text(&soc), subgroup_text(&soca), subgroup_text(&socn));
    let json = json!({
        "order": g.order(),
        "minimal_normal_subgroups": mins.iter().map(subgroup_json).collect::<Vec<_>>(),
        "socle": subgroup_json(&soc),
        "socle_abelian": subgroup_json(&soca),
        "socle_nonabelian": subgroup_json(&socn),
    });
    Ok(Output::ok(json, text))
}

fn gaschutz_cmd(spec: &str) -> Result<Output, CliError> {
    let g = build_group(spec)?;
    let r = gaschutz(&GroupContext::new(&g)?)?;
    let text = format!(
        "{spec}: faithful irreducible {}, socle one class {}, abelian socle one class {}, every normal in abelian socle one class {}; agree {}\n",
        r.faithful_irreducible, r.socle_single_class, r.socle_abelian_single_class, r.every_normal_in_socle_abelian_single_class, r.agree
    );
    Ok(Output::ok(serde_json::to_value(r).expect("serializable"), text))
}

fn induce(spec: &str, words: &str) -> Result<Output, CliError> {
    let g = build_group(spec)?;
    let h = subgroup_of(&g, words)?;
    let ctx = GroupContext::new(&g)?;
    let pair = Pair::new(&ctx, &h)?;
    let hc = pair.h().context();
    let mut text = format!("{spec}: |G| = {}, |H| = {}\n", g.order(), h.order());
    let mut rows = Vec::new();
    for rho in 0..hc.table().len() {
        let cons = pair.constituents(rho)?;
        let parts: Vec<String> = cons.iter().map(|&(s, m)| format!("{m}*X.{s}(deg {})", ctx.table().row(s).degree())).collect();
        let _ = writeln!(text, "Ind rho.{rho} (deg {}) = {}", hc.table().row(rho).degree(), parts.join(" + "));
        rows.push(json!({
            "rho": rho,
            "degree": hc.table().row(rho).degree(),
            "constituents": cons.iter().map(|&(s, m)| json!({"row": s, "multiplicity": m, "degree": ctx.table().row(s).degree()})).collect::<Vec<_>>(),
        }));
    }
    Ok(Output::ok(json!({ "order": g.order(), "subgroup": subgroup_json(&h), "induced": rows }), text))
}

fn cp_check(spec: &str, words: &str) -> Result<Output, CliError> {
    let g = build_group(spec)?;
    let h = subgroup_of(&g, words)?;
    let ctx = GroupContext::new(&g)?;
    let pair = Pair::new(&ctx, &h)?;
    let report = pair.report()?;
    let n = ctx.table().len();
    let cp_rows: Vec<usize> = (0..n).filter(|&i| pair.center_preserving_on_h(i)).collect();
    let faithful_rows: Vec<usize> = (0..n).filter(|&i| pair.faithful_on_h(i)).collect();
    let mut text = format!("{spec}: |G| = {}, H = {}\n", g.order(), subgroup_text(&h));
    let _ = writeln!(text, "irreducibles of G center-preserving on H: {cp_rows:?}");
    let _ = writeln!(text, "irreducibles of G faithful on H: {faithful_rows:?}");
    let _ = writeln!(text, "faithful irreducibles of H: {:?}", report.faithful_rows_of_h);
    for e in &report.entries {
        let good: Vec<usize> = e.constituents.iter().filter(|c| c.center_preserving_on_h).map(|c| c.row).collect();
        let _ = writeln!(text, "rho.{}: {} constituents, center-preserving on H: {good:?}", e.rho, e.constituents.len());
    }
    let _ = writeln!(text, "verdict: {}", if report.verdict { "pass" } else { "fail" });
    let code = if report.verdict { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    let json = json!({
        "order": g.order(),
        "subgroup": subgroup_json(&h),
        "center_preserving_rows": cp_rows,
        "faithful_on_h_rows": faithful_rows,
        "report": report,
    });
    Ok(Output { json, text, code })
}

fn omega(spec: &str) -> Result<Output, CliError> {
    let g = build_group(spec)?;
    let ctx = GroupContext::new(&g)?;
    let zctx = center_context(&ctx)?;
    let mut reports = Vec::new();
    let mut text = format!("{spec}: |Z(G)| = {}\n", g.center().order());
    for row in 0..zctx.table().len() {
        let r = omega_chi(&ctx, &zctx, row)?;
        let _ = writeln!(text, "chi.{row}: omega injective {}, G -> G/ker chi center-preserving {}", r.is_injective, r.quotient_center_preserving);
        reports.push(r);
    }
    let cp = cp_existence(&ctx)?;
    let _ = writeln!(text, "center-preserving irreducible exists: {} (routes agree: {})", cp.exists, cp.agree);
    Ok(Output::ok(json!({ "omega": reports, "cp_existence": cp }), text))
}

fn scan_cmd(config: Option<&PathBuf>, jobs: usize, all_subgroups: bool) -> Result<Output, CliError> {
    let mut cfg = match config {
        Some(p) => Config::parse(&read(p)?)?,
        None => Config::default_catalog(),
    };
    if all_subgroups {
        cfg.scan.dedup_conjugates = false;
    }
    let catalog = cfg.catalog()?;
    let report = scan(&catalog, &cfg.options(jobs));
    let mut text = format!(
        "groups {}, subgroups {}, pairs {}, failures {}\n",
        report.groups_checked,
        report.subgroups_checked,
        report.pairs_checked,
        report.failures.len()
    );
    for (k, v) in &report.checks_run {
        let _ = writeln!(text, "  {k}: {v} run, {} skipped", report.skipped.get(k).copied().unwrap_or(0));
    }
    for f in &report.failures {
        let _ = writeln!(text, "FAIL {} [{}] rho {:?}: {}", f.group, f.kind, f.rho, f.detail);
    }
    let _ = writeln!(text, "verdict: {}", if report.verdict == Verdict::Pass { "pass" } else { "fail" });
    let code = if report.verdict == Verdict::Pass { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    Ok(Output { json: serde_json::to_value(&report).expect("serializable"), text, code })
}

fn load_cocycle(base: &str, path: &PathBuf) -> Result<Cocycle, CliError> {
    let g = build_group(base)?;
    let json: CocycleJson = serde_json::from_str(&read(path)?).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    Ok(Cocycle::from_json(&g, &json)?)
}

fn load_extension(src: &ExtSource) -> Result<CentralExtension, CliError> {
    match (&src.base, &src.cocycle, &src.total, &src.mu) {
        (Some(b), Some(c), None, None) => Ok(extension_from_cocycle(&load_cocycle(b, c)?)?),
        (None, None, Some(t), Some(m)) => {
            let total = build_group(t)?;
            let mu = subgroup_of(&total, m)?;
            Ok(CentralExtension::from_central_subgroup(&total, &mu)?)
        }
        _ => Err(CliError::Usage("give either --base and --cocycle, or --total and --mu".into())),
    }
}

fn ext(cmd: &ExtCommand) -> Result<Output, CliError> {
    match cmd {
        ExtCommand::Build(src) => {
            let e = extension_from_cocycle(&load_cocycle(&src.base, &src.cocycle)?)?;
            let text = format!("total order {}, |mu| = {}, base order {}\n", e.total.order(), e.mu.order(), e.base().order());
            Ok(Output::ok(serde_json::to_value(e.to_json()).expect("serializable"), text))
        }
        ExtCommand::Reduce(src) => {
            let z = load_cocycle(&src.base, &src.cocycle)?;
            let r = reduce_order(&z)?;
            let text = format!("order {} -> {} (|G| = {})\n", z.order(), r.order(), z.base().order());
            Ok(Output::ok(json!({ "input_order": z.order(), "order": r.order(), "cocycle": r.to_json() }), text))
        }
        ExtCommand::Zc(src) => {
            let e = load_extension(src)?;
            let zc = z_c(&e);
            let kc = k_c(&e)?;
            let agree = zc.elements() == kc.elements();
            let text = format!("Z_c: {}\nK_c: {}\nequal: {agree}\n", subgroup_text(&zc), subgroup_text(&kc));
            Ok(Output::ok(json!({ "z_c": subgroup_json(&zc), "k_c": subgroup_json(&kc), "equal": agree }), text))
        }
        ExtCommand::Cfaithful(src) => {
            let e = load_extension(src)?;
            let row = has_c_faithful_irreducible(&e)?;
            let text = match row {
                Some(r) => format!("yes: row {r} of the total group\n"),
                None => "no\n".to_string(),
            };
            Ok(Output::ok(json!({ "exists": row.is_some(), "row": row }), text))
        }
        ExtCommand::Split { source, subgroup } => {
            let e = load_extension(source)?;
            let h = subgroup_of(e.base(), subgroup)?;
            let c = splits_over_subgroup(&e, &h)?;
            let text = match &c {
                Some(c) => format!("splits: complement {}\n", subgroup_text(c)),
                None => "does not split\n".to_string(),
            };
            Ok(Output::ok(json!({ "splits": c.is_some(), "complement": c.as_ref().map(subgroup_json) }), text))
        }
    }
}
