//! Group-spec expressions, e.g. `quot(D(8) x D(8) x D(8), [z1*z2*z3])`.
//! The grammar is in `docs/spec-grammar.md`.

use std::fmt;
use std::path::PathBuf;

use cprep_core::group::{Action, FiniteGroup, GroupError, NamedGroup, SubgroupRef, Word};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Atom(NamedGroup),
    /// Flattened chain `A x B x ...`; names of factor `i` get suffix `i`.
    Product(Vec<GroupSpec>),
    /// Quotient by the normal closure of the words.
    Quot(Box<GroupSpec>, Vec<Word>),
    Sdp(Box<GroupSpec>, Box<GroupSpec>, ActionName),
    Subgroup(Box<GroupSpec>, Vec<Word>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionName {
    Trivial,
    Inversion,
    DiagonalInversion,
    Power(i64),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {line}:{col}: expected {expected}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("action file {path}: {message}")]
    ActionFile { path: String, message: String },
}

/// Contents of an action file for `sdp(.., .., file("path"))`.
#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum ActionFile {
    /// One permutation of `N` per generator of `H`.
    GeneratorImages(Vec<Vec<usize>>),
    /// One permutation of `N` per element of `H`.
    Table(Vec<Vec<usize>>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, SyntaxError> {
    let mut p = Parser { src: text, pos: 0 };
    let spec = p.spec()?;
    p.ws();
    if p.pos < p.src.len() {
        return Err(p.error("end of input"));
    }
    Ok(spec)
}

/// A bracketed word list such as `[a^2, c]`.
pub fn parse_word_list(text: &str) -> Result<Vec<Word>, SyntaxError> {
    let mut p = Parser { src: text, pos: 0 };
    let words = p.word_list()?;
    p.ws();
    if p.pos < p.src.len() {
        return Err(p.error("end of input"));
    }
    Ok(words)
}

impl Parser<'_> {
    fn error(&self, expected: &str) -> SyntaxError {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        SyntaxError { line, col, expected: expected.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn ident(&mut self) -> Option<&str> {
        self.ws();
        let start = self.pos;
        let rest = self.rest();
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        if len == 0 || rest.starts_with(|c: char| c.is_ascii_digit()) {
            return None;
        }
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    fn integer(&mut self) -> Result<i64, SyntaxError> {
        self.ws();
        let rest = self.rest();
        let neg = rest.starts_with('-');
        let digits = rest[neg as usize..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - neg as usize);
        if digits == 0 {
            return Err(self.error("integer"));
        }
        let len = neg as usize + digits;
        let v = rest[..len].parse().map_err(|_| self.error("integer in range"))?;
        self.pos += len;
        Ok(v)
    }

    fn unsigned(&mut self) -> Result<usize, SyntaxError> {
        self.ws();
        if self.peek() == Some('-') {
            return Err(self.error("non-negative integer"));
        }
        Ok(self.integer()? as usize)
    }

    fn spec(&mut self) -> Result<GroupSpec, SyntaxError> {
        let first = self.term()?;
        let mut factors = vec![first];
        loop {
            self.ws();
            let rest = self.rest();
            let is_x = rest.starts_with('x') && rest[1..].starts_with(|c: char| c.is_whitespace() || c == '(');
            if !is_x {
                break;
            }
            self.pos += 1;
            factors.push(self.term()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { GroupSpec::Product(factors) })
    }

    fn term(&mut self) -> Result<GroupSpec, SyntaxError> {
        if self.eat('(') {
            let s = self.spec()?;
            self.expect(')')?;
            return Ok(s);
        }
        let start = self.pos;
        let Some(name) = self.ident().map(str::to_string) else {
            return Err(self.error("group expression"));
        };
        let one = |p: &mut Self, f: fn(usize) -> NamedGroup| -> Result<GroupSpec, SyntaxError> {
            p.expect('(')?;
            let n = p.unsigned()?;
            p.expect(')')?;
            Ok(GroupSpec::Atom(f(n)))
        };
        match name.as_str() {
            "C" => one(self, NamedGroup::Cyclic),
            "D" => one(self, NamedGroup::Dihedral),
            "Q" => one(self, NamedGroup::Quaternion),
            "S" => one(self, NamedGroup::Symmetric),
            "A" => one(self, NamedGroup::Alternating),
            "Heis" => one(self, NamedGroup::Heisenberg),
            "EA" => {
                self.expect('(')?;
                let p = self.unsigned()?;
                self.expect(',')?;
                let k = self.unsigned()?;
                self.expect(')')?;
                Ok(GroupSpec::Atom(NamedGroup::ElementaryAbelian(p, k)))
            }
            "paper" => {
                self.expect(':')?;
                let rest = self.rest();
                let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '-')).unwrap_or(rest.len());
                let atom = match &rest[..len] {
                    "ex-heis-pair" => NamedGroup::HeisPair,
                    "ex-d8cube" => NamedGroup::D8Cube,
                    "ex-d8xc4" => NamedGroup::D8xC4,
                    _ => return Err(self.error("ex-heis-pair, ex-d8cube or ex-d8xc4")),
                };
                self.pos += len;
                Ok(GroupSpec::Atom(atom))
            }
            "quot" | "subgroup" => {
                self.expect('(')?;
                let g = self.spec()?;
                self.expect(',')?;
                let words = self.word_list()?;
                self.expect(')')?;
                Ok(if name == "quot" {
                    GroupSpec::Quot(Box::new(g), words)
                } else {
                    GroupSpec::Subgroup(Box::new(g), words)
                })
            }
            "sdp" => {
                self.expect('(')?;
                let n = self.spec()?;
                self.expect(',')?;
                let h = self.spec()?;
                self.expect(',')?;
                let action = self.action()?;
                self.expect(')')?;
                Ok(GroupSpec::Sdp(Box::new(n), Box::new(h), action))
            }
            _ => {
                self.pos = start;
                self.ws();
                Err(self.error("group expression"))
            }
        }
    }

    fn action(&mut self) -> Result<ActionName, SyntaxError> {
        self.ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '-')).unwrap_or(rest.len());
        let word = rest[..len].to_string();
        let action = match word.as_str() {
            "trivial" => ActionName::Trivial,
            "inversion" => ActionName::Inversion,
            "diagonal-inversion" => ActionName::DiagonalInversion,
            "power" | "file" => {
                self.pos += len;
                self.expect('(')?;
                let a = if word == "power" { ActionName::Power(self.integer()?) } else { ActionName::File(self.string()?) };
                self.expect(')')?;
                return Ok(a);
            }
            _ => return Err(self.error("action (trivial, inversion, diagonal-inversion, power(k), file(\"path\"))")),
        };
        self.pos += len;
        Ok(action)
    }

    fn string(&mut self) -> Result<String, SyntaxError> {
        self.ws();
        if self.peek() != Some('"') {
            return Err(self.error("string"));
        }
        let body = &self.rest()[1..];
        let Some(end) = body.find('"') else {
            self.pos = self.src.len();
            return Err(self.error("closing '\"'"));
        };
        let s = body[..end].to_string();
        self.pos += end + 2;
        Ok(s)
    }

    fn word_list(&mut self) -> Result<Vec<Word>, SyntaxError> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(self.word()?);
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn word(&mut self) -> Result<Word, SyntaxError> {
        self.ws();
        if self.peek() == Some('1') && !self.rest()[1..].starts_with(|c: char| c.is_ascii_alphanumeric()) {
            self.pos += 1;
            return Ok(Word::default());
        }
        let mut out = Vec::new();
        loop {
            let Some(name) = self.ident().map(str::to_string) else {
                return Err(self.error("generator name"));
            };
            let exp = if self.eat('^') { self.integer()? } else { 1 };
            out.push((name, exp));
            if !self.eat('*') {
                return Ok(Word(out));
            }
        }
    }
}

impl fmt::Display for ActionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionName::Trivial => f.write_str("trivial"),
            ActionName::Inversion => f.write_str("inversion"),
            ActionName::DiagonalInversion => f.write_str("diagonal-inversion"),
            ActionName::Power(k) => write!(f, "power({k})"),
            ActionName::File(p) => write!(f, "file(\"{p}\")"),
        }
    }
}

fn write_words(f: &mut fmt::Formatter<'_>, words: &[Word]) -> fmt::Result {
    f.write_str("[")?;
    for (i, w) in words.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{w}")?;
    }
    f.write_str("]")
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Atom(n) => write!(f, "{n}"),
            GroupSpec::Product(factors) => {
                for (i, s) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    if matches!(s, GroupSpec::Product(_)) {
                        write!(f, "({s})")?;
                    } else {
                        write!(f, "{s}")?;
                    }
                }
                Ok(())
            }
            GroupSpec::Quot(g, w) => {
                write!(f, "quot({g}, ")?;
                write_words(f, w)?;
                f.write_str(")")
            }
            GroupSpec::Subgroup(g, w) => {
                write!(f, "subgroup({g}, ")?;
                write_words(f, w)?;
                f.write_str(")")
            }
            GroupSpec::Sdp(n, h, a) => write!(f, "sdp({n}, {h}, {a})"),
        }
    }
}

fn suffixed(g: &FiniteGroup, suffix: usize) -> Vec<(String, usize)> {
    g.names().iter().map(|(s, x)| (format!("{s}{suffix}"), *x)).collect()
}

/// The subgroup generated by the words.
pub fn subgroup_from_words(g: &FiniteGroup, words: &[Word]) -> Result<SubgroupRef, GroupError> {
    let elems = words.iter().map(|w| g.eval_word(w)).collect::<Result<Vec<_>, _>>()?;
    Ok(g.subgroup_generated(&elems))
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, BuildError> {
        match self {
            GroupSpec::Atom(n) => Ok(n.build()?),
            GroupSpec::Product(factors) => {
                let groups = factors.iter().map(GroupSpec::build).collect::<Result<Vec<_>, _>>()?;
                Ok(cprep_core::group::direct_product_many(&groups)?.0)
            }
            GroupSpec::Quot(g, words) => {
                let g = g.build()?;
                let elems = words.iter().map(|w| g.eval_word(w)).collect::<Result<Vec<_>, _>>()?;
                Ok(g.quotient(&g.normal_closure(&elems))?.0)
            }
            GroupSpec::Subgroup(g, words) => {
                let g = g.build()?;
                Ok(subgroup_from_words(&g, words)?.as_group().0)
            }
            GroupSpec::Sdp(n, h, a) => {
                let (n, h) = (n.build()?, h.build()?);
                let action = match a {
                    ActionName::Trivial => Action::Trivial,
                    ActionName::Inversion => Action::Inversion,
                    ActionName::DiagonalInversion => Action::DiagonalInversion,
                    ActionName::Power(k) => Action::Power(*k),
                    ActionName::File(path) => read_action(path)?,
                };
                let g = FiniteGroup::semidirect_product(&n, &h, &action)?;
                // names of N first, then H, as in the element order
                let (nn, hn) = (n.order(), h.order());
                let mut names: Vec<(String, usize)> = suffixed(&n, 1).into_iter().map(|(s, a)| (s, a * hn + h.identity())).collect();
                names.extend(suffixed(&h, 2).into_iter().map(|(s, b)| (s, n.identity() * hn + b)));
                debug_assert_eq!(g.order(), nn * hn);
                Ok(g.with_names(names))
            }
        }
    }
}

fn read_action(path: &str) -> Result<Action, BuildError> {
    let err = |message: String| BuildError::ActionFile { path: path.to_string(), message };
    let text = std::fs::read_to_string(PathBuf::from(path)).map_err(|e| err(e.to_string()))?;
    let file: ActionFile = serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
    Ok(match file {
        ActionFile::GeneratorImages(v) => Action::GeneratorImages(v),
        ActionFile::Table(v) => Action::Table(v),
    })
}
