//! Scan configuration (TOML) and catalog construction.

use std::collections::BTreeSet;

use cprep_core::group::NamedGroup;
use cprep_core::scan::{CatalogEntry, Checks, ScanOptions};
use serde::{Deserialize, Serialize};

use crate::dsl::{parse_spec, ActionName, GroupSpec};
use crate::CliError;

/// The catalog used by `scan` when no other config is given.
pub const DEFAULT_CONFIG: &str = include_str!("../../../configs/default.toml");

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub catalog: CatalogConfig,
    #[serde(default)]
    pub scan: ScanConfig,
    #[serde(default)]
    pub checks: ChecksConfig,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct CatalogConfig {
    /// Group specs taken as they are.
    pub atoms: Vec<String>,
    /// Add `A x B` for atoms with `|A||B| <= max_order`.
    pub direct_products: bool,
    /// Add `sdp(N, H, a)` for atoms and each listed action where it is
    /// defined, nontrivial and of order at most `max_order`.
    pub semidirect_actions: Vec<String>,
    pub max_order: usize,
    /// Add the three named example groups.
    pub examples: bool,
}

impl Default for CatalogConfig {
    fn default() -> Self {
        CatalogConfig { atoms: Vec::new(), direct_products: false, semidirect_actions: Vec::new(), max_order: 64, examples: false }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanConfig {
    pub dedup_conjugates: bool,
    pub subgroup_cap: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        let o = ScanOptions::default();
        ScanConfig { dedup_conjugates: o.dedup_conjugates, subgroup_cap: o.subgroup_cap }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct ChecksConfig {
    pub main_theorem: bool,
    pub remark: bool,
    pub corollary_z2: bool,
    pub prop_section: bool,
    pub main_tech: bool,
    pub gaschutz: bool,
    pub omega: bool,
    pub quasikernel: bool,
}

impl Default for ChecksConfig {
    fn default() -> Self {
        let c = Checks::default();
        ChecksConfig {
            main_theorem: c.main_theorem,
            remark: c.remark,
            corollary_z2: c.corollary_z2,
            prop_section: c.prop_section,
            main_tech: c.main_tech,
            gaschutz: c.gaschutz,
            omega: c.omega,
            quasikernel: c.quasikernel,
        }
    }
}

fn action_name(s: &str) -> Result<ActionName, CliError> {
    match s {
        "trivial" => Ok(ActionName::Trivial),
        "inversion" => Ok(ActionName::Inversion),
        "diagonal-inversion" => Ok(ActionName::DiagonalInversion),
        _ => Err(CliError::Config(format!("unknown semidirect action {s:?}"))),
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn default_catalog() -> Self {
        Config::parse(DEFAULT_CONFIG).expect("default config parses")
    }

    pub fn options(&self, jobs: usize) -> ScanOptions {
        let c = &self.checks;
        ScanOptions {
            dedup_conjugates: self.scan.dedup_conjugates,
            jobs,
            subgroup_cap: self.scan.subgroup_cap,
            checks: Checks {
                main_theorem: c.main_theorem,
                remark: c.remark,
                corollary_z2: c.corollary_z2,
                prop_section: c.prop_section,
                main_tech: c.main_tech,
                gaschutz: c.gaschutz,
                omega: c.omega,
                quasikernel: c.quasikernel,
            },
        }
    }

    /// The catalog specs in a fixed order: atoms, direct products,
    /// semidirect products, examples.
    pub fn specs(&self) -> Result<Vec<GroupSpec>, CliError> {
        let cat = &self.catalog;
        let atoms = cat.atoms.iter().map(|s| parse_spec(s).map_err(CliError::from)).collect::<Result<Vec<_>, _>>()?;
        let orders = atoms
            .iter()
            .map(|a| a.build().map(|g| (g.order(), g.is_abelian(), g.exponent())).map_err(CliError::from))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out: Vec<GroupSpec> = atoms.clone();
        let mut seen: BTreeSet<String> = out.iter().map(ToString::to_string).collect();
        let mut push = |s: GroupSpec, out: &mut Vec<GroupSpec>| {
            if seen.insert(s.to_string()) {
                out.push(s);
            }
        };
        if cat.direct_products {
            for i in 0..atoms.len() {
                for j in i..atoms.len() {
                    if orders[i].0 > 1 && orders[j].0 > 1 && orders[i].0 * orders[j].0 <= cat.max_order {
                        push(GroupSpec::Product(vec![atoms[i].clone(), atoms[j].clone()]), &mut out);
                    }
                }
            }
        }
        for a in &cat.semidirect_actions {
            let action = action_name(a)?;
            for (i, n) in atoms.iter().enumerate() {
                // inversion is an automorphism only of abelian groups, and trivial on exponent 2
                let (no, abelian, exp) = orders[i];
                if !abelian || exp <= 2 {
                    continue;
                }
                for (j, h) in atoms.iter().enumerate() {
                    if orders[j].0 == 1 || no * orders[j].0 > cat.max_order {
                        continue;
                    }
                    let s = GroupSpec::Sdp(Box::new(n.clone()), Box::new(h.clone()), action.clone());
                    if s.build().is_ok_and(|g| !g.is_abelian()) {
                        push(s, &mut out);
                    }
                }
            }
        }
        if cat.examples {
            for n in [NamedGroup::HeisPair, NamedGroup::D8Cube, NamedGroup::D8xC4] {
                push(GroupSpec::Atom(n), &mut out);
            }
        }
        Ok(out)
    }

    pub fn catalog(&self) -> Result<Vec<CatalogEntry>, CliError> {
        self.specs()?
            .into_iter()
            .map(|s| {
                let g = s.build()?;
                let mut e = CatalogEntry::new(s.to_string(), g.clone());
                if let GroupSpec::Atom(n) = &s {
                    e.designated = n.designated_in(&g).transpose()?;
                }
                Ok(e)
            })
            .collect()
    }
}
