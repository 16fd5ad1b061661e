//! Exhaustive verification over a catalog of groups and their subgroups.

use std::collections::{BTreeMap, HashSet};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    cp_existence, center_context, gaschutz, omega_chi, quasikernel_intersection, AnalysisError, GroupContext, Pair,
};
use crate::group::{is_prime_power, FiniteGroup, SubgroupRef, DEFAULT_SUBGROUP_CAP};

/// A catalog group, with the subgroup of interest for the built-in examples.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
    pub designated: Option<SubgroupRef>,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Self {
        CatalogEntry { name: name.into(), group, designated: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub main_theorem: bool,
    pub remark: bool,
    pub corollary_z2: bool,
    pub prop_section: bool,
    pub main_tech: bool,
    pub gaschutz: bool,
    pub omega: bool,
    pub quasikernel: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            main_theorem: true,
            remark: true,
            corollary_z2: true,
            prop_section: true,
            main_tech: true,
            gaschutz: true,
            omega: true,
            quasikernel: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Scan one subgroup per conjugacy class.
    pub dedup_conjugates: bool,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub checks: Checks,
    /// Largest group order whose subgroups are enumerated.
    pub subgroup_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { dedup_conjugates: true, jobs: 0, checks: Checks::default(), subgroup_cap: DEFAULT_SUBGROUP_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub group: String,
    pub group_index: usize,
    pub subgroup: Option<Vec<usize>>,
    pub rho: Option<usize>,
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub pairs_checked: usize,
    pub failures: Vec<Failure>,
    pub verdict: Verdict,
    pub groups_checked: usize,
    pub subgroups_checked: usize,
    /// How many times each check ran.
    pub checks_run: BTreeMap<String, usize>,
    /// Instances where a check could not be decided within its caps.
    pub skipped: BTreeMap<String, usize>,
}

impl ScanReport {
    pub fn failures_of(&self, kind: &str) -> impl Iterator<Item = &Failure> + '_ {
        let kind = kind.to_string();
        self.failures.iter().filter(move |f| f.kind == kind)
    }

    pub fn runs_of(&self, kind: &str) -> usize {
        self.checks_run.get(kind).copied().unwrap_or(0)
    }
}

#[derive(Default)]
struct Tally {
    pairs: usize,
    subgroups: usize,
    failures: Vec<Failure>,
    runs: BTreeMap<String, usize>,
    skipped: BTreeMap<String, usize>,
}

impl Tally {
    fn run(&mut self, kind: &str) {
        *self.runs.entry(kind.to_string()).or_default() += 1;
    }

    fn skip(&mut self, kind: &str) {
        *self.skipped.entry(kind.to_string()).or_default() += 1;
    }

    fn merge(&mut self, other: Tally) {
        self.pairs += other.pairs;
        self.subgroups += other.subgroups;
        self.failures.extend(other.failures);
        for (k, v) in other.runs {
            *self.runs.entry(k).or_default() += v;
        }
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_default() += v;
        }
    }
}

struct Ctx<'a> {
    name: &'a str,
    index: usize,
}

impl Ctx<'_> {
    fn fail(&self, t: &mut Tally, kind: &str, h: Option<&SubgroupRef>, rho: Option<usize>, detail: impl Into<String>) {
        t.failures.push(Failure {
            group: self.name.to_string(),
            group_index: self.index,
            subgroup: h.map(|h| h.elements().to_vec()),
            rho,
            kind: kind.to_string(),
            detail: detail.into(),
        });
    }
}

pub fn scan(catalog: &[CatalogEntry], options: &ScanOptions) -> ScanReport {
    let run = || {
        catalog
            .par_iter()
            .enumerate()
            .map(|(i, e)| scan_group(Ctx { name: &e.name, index: i }, &e.group, options))
            .collect::<Vec<_>>()
    };
    let tallies = if options.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build().expect("thread pool").install(run)
    };
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t);
    }
    total.failures.sort();
    let verdict = if total.failures.is_empty() { Verdict::Pass } else { Verdict::Fail };
    ScanReport {
        pairs_checked: total.pairs,
        failures: total.failures,
        verdict,
        groups_checked: catalog.len(),
        subgroups_checked: total.subgroups,
        checks_run: total.runs,
        skipped: total.skipped,
    }
}

fn scan_group(c: Ctx<'_>, g: &FiniteGroup, options: &ScanOptions) -> Tally {
    let mut t = Tally::default();
    if g.order() == 1 {
        return t;
    }
    let ctx = match GroupContext::new(g) {
        Ok(ctx) => ctx,
        Err(e) => {
            c.fail(&mut t, "error", None, None, e.to_string());
            return t;
        }
    };
    if let Err(e) = group_checks(&c, &ctx, options, &mut t) {
        c.fail(&mut t, "error", None, None, e.to_string());
    }
    if g.order() > options.subgroup_cap {
        t.skip("subgroups");
        return t;
    }
    let subs = match candidate_subgroups(g, options) {
        Ok(s) => s,
        Err(e) => {
            c.fail(&mut t, "error", None, None, e.to_string());
            return t;
        }
    };
    let parts: Vec<Tally> = subs
        .par_iter()
        .map(|h| {
            let mut t = Tally { subgroups: 1, ..Tally::default() };
            if let Err(e) = pair_checks(&c, &ctx, h, options, &mut t) {
                c.fail(&mut t, "error", Some(h), None, e.to_string());
            }
            t
        })
        .collect();
    for p in parts {
        t.merge(p);
    }
    t
}

fn group_checks(c: &Ctx<'_>, ctx: &GroupContext, options: &ScanOptions, t: &mut Tally) -> Result<(), AnalysisError> {
    let g = ctx.group();
    if options.checks.gaschutz {
        t.run("gaschutz");
        let r = gaschutz(ctx)?;
        if !r.agree {
            c.fail(t, "gaschutz", None, None, format!("{r:?}"));
        }
    }
    if options.checks.omega {
        let zctx = center_context(ctx)?;
        for row in 0..zctx.table().len() {
            t.run("omega");
            let om = omega_chi(ctx, &zctx, row)?;
            if om.is_injective != om.quotient_center_preserving {
                c.fail(t, "omega", None, Some(row), format!("injective {} vs center-preserving quotient {}", om.is_injective, om.quotient_center_preserving));
            }
        }
        t.run("cp_existence");
        let cp = cp_existence(ctx)?;
        if !cp.agree {
            c.fail(t, "cp_existence", None, None, format!("{cp:?}"));
        }
    }
    if options.checks.quasikernel {
        t.run("quasikernel");
        let k = quasikernel_intersection(ctx)?;
        if k.elements() != g.center().elements() {
            c.fail(t, "quasikernel", None, None, format!("K1 has order {}, Z(G) has order {}", k.order(), g.center().order()));
        }
    }
    Ok(())
}

fn has_cyclic_center(h: &SubgroupRef) -> bool {
    let g = h.group();
    let gens = h.generators();
    let z: Vec<usize> = h.elements().iter().copied().filter(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x))).collect();
    z.iter().any(|&x| g.element_order(x) == z.len())
}

/// Subgroups that can have a faithful irreducible character (cyclic
/// center), one per conjugacy class unless disabled.
fn candidate_subgroups(g: &FiniteGroup, options: &ScanOptions) -> Result<Vec<SubgroupRef>, AnalysisError> {
    let all = g.all_subgroups(options.subgroup_cap)?;
    let mut out = Vec::new();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    for h in all {
        if !has_cyclic_center(&h) {
            continue;
        }
        if options.dedup_conjugates {
            if seen.contains(h.bits()) {
                continue;
            }
            for x in g.elements() {
                seen.insert(h.conjugate(x).bits().clone());
            }
        }
        out.push(h);
    }
    Ok(out)
}

fn pair_checks(c: &Ctx<'_>, ctx: &GroupContext, h: &SubgroupRef, options: &ScanOptions, t: &mut Tally) -> Result<(), AnalysisError> {
    let pair = Pair::new(ctx, h)?;
    let hctx = pair.h().context();
    let faithful = hctx.faithful_rows();
    let zh = pair.h().group().center().order();
    let h_lists = if options.checks.main_tech {
        let mut l = pair.h_lists();
        l.push(pair.proof_h_list());
        l.push(Vec::new());
        l.sort();
        l.dedup();
        l
    } else {
        Vec::new()
    };
    for rho in faithful {
        t.pairs += 1;
        let fail = |t: &mut Tally, kind: &str, detail: String| c.fail(t, kind, Some(h), Some(rho), detail);
        if options.checks.main_theorem {
            t.run("main_theorem");
            let entry = pair.find_cp_constituents(rho)?;
            if !entry.has_center_preserving() {
                fail(t, "main_theorem", format!("{:?}", entry.constituents));
            }
            t.run("restriction_faithful");
            if !entry.all_faithful_on_h() {
                fail(t, "restriction_faithful", format!("{:?}", entry.constituents));
            }
        }
        if options.checks.remark && (zh == 1 || is_prime_power(zh)) {
            t.run("remark");
            if !pair.remark_minimizer_check(rho)? {
                fail(t, "remark", format!("|Z(H)| = {zh}"));
            }
        }
        if options.checks.corollary_z2 && pair.second_center_condition() {
            t.run("corollary_z2");
            if !pair.corollary_z2_check(rho)? {
                fail(t, "corollary_z2", String::new());
            }
        }
        if options.checks.prop_section {
            let r = pair.prop_section_check(rho)?;
            match r.hypothesis {
                Some(true) => {
                    t.run("prop_section");
                    if !r.conclusion {
                        fail(t, "prop_section", "hypothesis holds, conclusion fails".into());
                    }
                }
                Some(false) => t.run("prop_section"),
                None => t.skip("prop_section"),
            }
        }
        for l in &h_lists {
            t.run("main_tech");
            if !pair.main_tech_check(rho, l)? {
                fail(t, "main_tech", format!("h_list {l:?}"));
            }
        }
    }
    Ok(())
}
