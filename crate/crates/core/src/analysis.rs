//! Kernels, centers and center-preservation of irreducible characters, and
//! the checks built on them for pairs `H ≤ G`.

use serde::Serialize;
use thiserror::Error;

use crate::chartab::{CharError, Character, CharacterTable, DEFAULT_TABLE_CAP};
use crate::cyclotomic::CycNum;
use crate::gmodule::{GModule, ModuleError, DEFAULT_MODULE_CAP};
use crate::group::{is_prime_power, prime_factors, FiniteGroup, GroupError, GroupHom, SubgroupRef};

/// Largest number of candidate modules for the exhaustive subset search in
/// [`Pair::prop_section_check`].
pub const MAX_SECTION_FAMILY: usize = 12;

/// Largest module order whose submodule lattice is enumerated there.
pub const MAX_SECTION_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("class function is not irreducible")]
    NotIrreducible,
    #[error("subgroup is not contained in the character's group")]
    SubgroupNotContained,
    #[error("character {row} of H is not faithful")]
    NotFaithful { row: usize },
    #[error("Z(H) has order {order}, not a prime power")]
    CenterNotPrimePower { order: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a linear character of the center")]
    NotCharacterOfCenter,
    #[error("operation is undefined on the trivial group")]
    TrivialGroup,
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;

pub fn is_irreducible(chi: &Character) -> Result<bool> {
    Ok(chi.inner_product(chi)?.is_one())
}

/// `{g : χ(g) = χ(1)}`
pub fn kernel(chi: &Character) -> SubgroupRef {
    chi.kernel()
}

/// Elements acting as scalars: `{g : |χ(g)|² = χ(1)²}`.
pub fn char_center(chi: &Character) -> Result<SubgroupRef> {
    if !is_irreducible(chi)? {
        return Err(AnalysisError::NotIrreducible);
    }
    Ok(chi.scalar_center())
}

pub fn is_center_preserving(chi: &Character) -> Result<bool> {
    Ok(char_center(chi)?.order() == chi.group().center().order())
}

pub fn is_center_preserving_on(chi: &Character, h: &SubgroupRef) -> Result<bool> {
    if h.group() != chi.group() {
        return Err(AnalysisError::SubgroupNotContained);
    }
    let c = char_center(chi)?;
    Ok(cp_on(&c, h, &chi.group().center()))
}

fn cp_on(center: &SubgroupRef, h: &SubgroupRef, z: &SubgroupRef) -> bool {
    h.elements().iter().all(|&x| !center.contains(x) || z.contains(x))
}

/// A group with its character table and the kernel and center of each row.
pub struct GroupContext {
    group: FiniteGroup,
    table: CharacterTable,
    kernels: Vec<SubgroupRef>,
    centers: Vec<SubgroupRef>,
}

impl GroupContext {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        Self::with_cap(group, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(group: &FiniteGroup, cap: usize) -> Result<Self> {
        let table = CharacterTable::compute_with_cap(group, cap)?;
        let kernels = table.rows().iter().map(Character::kernel).collect();
        let centers = table.rows().iter().map(Character::scalar_center).collect();
        Ok(GroupContext { group: group.clone(), table, kernels, centers })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn kernel(&self, row: usize) -> &SubgroupRef {
        &self.kernels[row]
    }

    pub fn char_center(&self, row: usize) -> &SubgroupRef {
        &self.centers[row]
    }

    pub fn is_center_preserving(&self, row: usize) -> bool {
        self.centers[row].order() == self.group.center().order()
    }

    pub fn is_center_preserving_on(&self, row: usize, h: &SubgroupRef) -> bool {
        cp_on(&self.centers[row], h, &self.group.center())
    }

    pub fn faithful_rows(&self) -> Vec<usize> {
        (0..self.table.len()).filter(|&i| self.kernels[i].is_trivial()).collect()
    }
}

/// A subgroup as a standalone group, with its embedding and table.
pub struct SubgroupContext {
    sub: SubgroupRef,
    embed: GroupHom,
    inner: GroupContext,
}

impl SubgroupContext {
    pub fn new(sub: &SubgroupRef) -> Result<Self> {
        let (h, embed) = sub.as_group();
        Ok(SubgroupContext { sub: sub.clone(), embed, inner: GroupContext::new(&h)? })
    }

    pub fn sub(&self) -> &SubgroupRef {
        &self.sub
    }

    /// The standalone group; element `i` is `sub().elements()[i]`.
    pub fn group(&self) -> &FiniteGroup {
        self.inner.group()
    }

    pub fn embedding(&self) -> &GroupHom {
        &self.embed
    }

    pub fn context(&self) -> &GroupContext {
        &self.inner
    }

    pub fn table(&self) -> &CharacterTable {
        self.inner.table()
    }

    pub fn restrict(&self, chi: &Character) -> Result<Character> {
        if chi.group() != self.sub.group() {
            return Err(AnalysisError::SubgroupNotContained);
        }
        Ok(chi.restrict(&self.embed)?)
    }

    pub fn induce(&self, rho: &Character) -> Result<Character> {
        if rho.group() != self.group() {
            return Err(AnalysisError::SubgroupNotContained);
        }
        Ok(rho.induce(&self.embed)?)
    }

    /// Image in the parent of a subgroup of the standalone group.
    pub fn to_parent(&self, s: &SubgroupRef) -> SubgroupRef {
        self.embed.map_subgroup(s)
    }

    /// Parent index of a standalone element.
    pub fn parent_element(&self, h: usize) -> usize {
        self.embed.apply(h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaschutzReport {
    pub faithful_irreducible: bool,
    pub socle_single_class: bool,
    pub socle_abelian_single_class: bool,
    pub every_normal_in_socle_abelian_single_class: bool,
    pub agree: bool,
}

/// The four conditions of Gaschütz's criterion, each computed separately.
pub fn gaschutz(ctx: &GroupContext) -> Result<GaschutzReport> {
    let g = ctx.group();
    if g.order() == 1 {
        return Err(AnalysisError::TrivialGroup);
    }
    let faithful_irreducible = !ctx.faithful_rows().is_empty();
    let soc = g.socle()?;
    let socle_single_class = g.is_generated_by_single_class(&soc)?.is_some();
    let soca = g.socle_abelian()?;
    let socle_abelian_single_class = g.is_generated_by_single_class(&soca)?.is_some();
    let module = GModule::from_normal_subgroup(g, &soca)?;
    let mut every = true;
    for s in module.all_submodules(DEFAULT_MODULE_CAP)? {
        let elems: Vec<usize> = s.elements().iter().map(|&i| soca.elements()[i]).collect();
        let n = SubgroupRef::new(g, elems)?;
        if g.is_generated_by_single_class(&n)?.is_none() {
            every = false;
            break;
        }
    }
    let all = [faithful_irreducible, socle_single_class, socle_abelian_single_class, every];
    Ok(GaschutzReport {
        faithful_irreducible,
        socle_single_class,
        socle_abelian_single_class,
        every_normal_in_socle_abelian_single_class: every,
        agree: all.iter().all(|&b| b == all[0]),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constituent {
    pub row: usize,
    pub multiplicity: usize,
    pub degree: usize,
    pub faithful_on_h: bool,
    pub center_preserving_on_h: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CpEntry {
    pub rho: usize,
    pub constituents: Vec<Constituent>,
}

impl CpEntry {
    pub fn has_center_preserving(&self) -> bool {
        self.constituents.iter().any(|c| c.center_preserving_on_h)
    }

    pub fn all_faithful_on_h(&self) -> bool {
        self.constituents.iter().all(|c| c.faithful_on_h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CpReport {
    pub faithful_rows_of_h: Vec<usize>,
    pub entries: Vec<CpEntry>,
    /// Every faithful `ρ` has a constituent that is center-preserving on `H`.
    pub verdict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropSection {
    /// `None` when the family of candidate modules is too large to search.
    pub hypothesis: Option<bool>,
    pub conclusion: bool,
}

/// `H ≤ G` with the restrictions of all irreducibles of `G` to `H`.
pub struct Pair<'a> {
    g: &'a GroupContext,
    h: SubgroupContext,
    restricted: Vec<Character>,
}

impl<'a> Pair<'a> {
    pub fn new(g: &'a GroupContext, sub: &SubgroupRef) -> Result<Self> {
        if sub.group() != g.group() {
            return Err(AnalysisError::SubgroupNotContained);
        }
        let h = SubgroupContext::new(sub)?;
        let restricted = g.table().rows().iter().map(|r| h.restrict(r)).collect::<Result<_>>()?;
        Ok(Pair { g, h, restricted })
    }

    pub fn g(&self) -> &GroupContext {
        self.g
    }

    pub fn h(&self) -> &SubgroupContext {
        &self.h
    }

    pub fn restricted(&self, row: usize) -> &Character {
        &self.restricted[row]
    }

    fn rho(&self, rho: usize) -> &Character {
        self.h.table().row(rho)
    }

    fn check_faithful(&self, rho: usize) -> Result<()> {
        if self.h.context().kernel(rho).is_trivial() {
            Ok(())
        } else {
            Err(AnalysisError::NotFaithful { row: rho })
        }
    }

    /// Multiplicities of the rows of `G` in `Ind ρ`, by Frobenius
    /// reciprocity.
    pub fn constituents(&self, rho: usize) -> Result<Vec<(usize, usize)>> {
        let r = self.rho(rho);
        let mut out = Vec::new();
        for (i, res) in self.restricted.iter().enumerate() {
            let m = res.inner_product(r)?.to_integer().expect("multiplicities are integers");
            if m > 0 {
                out.push((i, m as usize));
            }
        }
        Ok(out)
    }

    pub fn faithful_on_h(&self, row: usize) -> bool {
        self.g.kernel(row).intersection(self.h.sub()).is_trivial()
    }

    pub fn center_preserving_on_h(&self, row: usize) -> bool {
        self.g.is_center_preserving_on(row, self.h.sub())
    }

    pub fn find_cp_constituents(&self, rho: usize) -> Result<CpEntry> {
        self.check_faithful(rho)?;
        let constituents = self
            .constituents(rho)?
            .into_iter()
            .map(|(row, multiplicity)| Constituent {
                row,
                multiplicity,
                degree: self.g.table().row(row).degree(),
                faithful_on_h: self.faithful_on_h(row),
                center_preserving_on_h: self.center_preserving_on_h(row),
            })
            .collect();
        Ok(CpEntry { rho, constituents })
    }

    pub fn report(&self) -> Result<CpReport> {
        let faithful = self.h.context().faithful_rows();
        let entries = faithful.iter().map(|&r| self.find_cp_constituents(r)).collect::<Result<Vec<_>>>()?;
        let verdict = entries.iter().all(CpEntry::has_center_preserving);
        Ok(CpReport { faithful_rows_of_h: faithful, entries, verdict })
    }

    /// Every constituent of `Ind ρ` minimizing `|Z(σ) ∩ H|` is
    /// center-preserving on `H`.
    pub fn remark_minimizer_check(&self, rho: usize) -> Result<bool> {
        self.check_faithful(rho)?;
        let zh = self.h.group().center().order();
        if zh > 1 && !is_prime_power(zh) {
            return Err(AnalysisError::CenterNotPrimePower { order: zh });
        }
        let cons = self.constituents(rho)?;
        let size = |row: usize| self.g.char_center(row).intersection(self.h.sub()).order();
        let min = cons.iter().map(|&(r, _)| size(r)).min().expect("Ind ρ is nonzero");
        Ok(cons.iter().filter(|&&(r, _)| size(r) == min).all(|&(r, _)| self.center_preserving_on_h(r)))
    }

    /// Whether `Z₂(G) ∩ H = Z(G) ∩ H`.
    pub fn second_center_condition(&self) -> bool {
        let g = self.g.group();
        let h = self.h.sub();
        g.second_center().intersection(h).order() == g.center().intersection(h).order()
    }

    /// Some constituent `σ` of `Ind ρ` is center-preserving on `H` and has
    /// `ker(Res σ) = ker ρ`.
    pub fn corollary_z2_check(&self, rho: usize) -> Result<bool> {
        let g = self.g.group();
        let k = self.h.to_parent(self.h.context().kernel(rho));
        if !k.is_subgroup_of(&g.center()) {
            return Err(AnalysisError::HypothesisViolated("ker ρ is not contained in Z(G)".into()));
        }
        if !self.second_center_condition() {
            return Err(AnalysisError::HypothesisViolated("Z₂(G) ∩ H differs from Z(G) ∩ H".into()));
        }
        Ok(self.constituents(rho)?.iter().any(|&(r, _)| {
            self.center_preserving_on_h(r) && self.g.kernel(r).intersection(self.h.sub()).elements() == k.elements()
        }))
    }

    /// Some irreducible `σ` with `⟨Res σ, ρ⟩ > 0` has no `ι(h_i)` in its
    /// center. `h_list` holds elements of the standalone `H`.
    pub fn main_tech_check(&self, rho: usize, h_list: &[usize]) -> Result<bool> {
        if !self.h.context().kernel(rho).is_trivial() {
            return Err(AnalysisError::HypothesisViolated(format!("row {rho} of H is not faithful")));
        }
        let h = self.h.group();
        let zh = h.center();
        let zg = self.g.group().center();
        let mut primes = Vec::new();
        for &x in h_list {
            let o = h.element_order(x);
            if !zh.contains(x) {
                return Err(AnalysisError::HypothesisViolated(format!("{} is not central in H", h.label(x))));
            }
            if o == 1 || !is_prime_power(o) {
                return Err(AnalysisError::HypothesisViolated(format!("{} does not have prime-power order", h.label(x))));
            }
            let p = prime_factors(o)[0];
            if primes.contains(&p) {
                return Err(AnalysisError::HypothesisViolated(format!("prime {p} is repeated")));
            }
            primes.push(p);
            if zg.contains(self.h.parent_element(x)) {
                return Err(AnalysisError::HypothesisViolated(format!("{} is central in G", h.label(x))));
            }
        }
        let images: Vec<usize> = h_list.iter().map(|&x| self.h.parent_element(x)).collect();
        Ok(self
            .constituents(rho)?
            .iter()
            .any(|&(r, _)| images.iter().all(|&y| !self.g.char_center(r).contains(y))))
    }

    /// Maximal valid `h_list`s: for every prime `p` whose Sylow subgroup
    /// `P` of `Z(H)` is not inside `Z(G)`, pick the least generator of one
    /// cyclic subgroup of `P` not inside `Z(G)`; all combinations.
    pub fn h_lists(&self) -> Vec<Vec<usize>> {
        let h = self.h.group();
        let zh = h.center();
        let zg = self.g.group().center();
        let outside = |x: usize| !zg.contains(self.h.parent_element(x));
        let mut options: Vec<Vec<usize>> = Vec::new();
        for p in prime_factors(zh.order()) {
            let sylow: Vec<usize> = zh.elements().iter().copied().filter(|&x| is_p_power(h.element_order(x), p)).collect();
            if sylow.iter().all(|&x| !outside(x)) {
                continue;
            }
            let mut gens: Vec<usize> = Vec::new();
            let mut seen: Vec<SubgroupRef> = Vec::new();
            for &x in &sylow {
                if x == h.identity() || !outside(x) {
                    continue;
                }
                let c = h.subgroup_generated(&[x]);
                if !seen.contains(&c) {
                    seen.push(c);
                    gens.push(x);
                }
            }
            options.push(gens);
        }
        let mut lists = vec![Vec::new()];
        for opts in options {
            lists = lists
                .into_iter()
                .flat_map(|l| {
                    opts.iter().map(move |&x| {
                        let mut l = l.clone();
                        l.push(x);
                        l
                    })
                })
                .collect();
        }
        lists
    }

    /// The subgroup choice from the proof: per prime, a generator of the
    /// smallest subgroup of the Sylow subgroup of `Z(H)` not inside `Z(G)`.
    pub fn proof_h_list(&self) -> Vec<usize> {
        let h = self.h.group();
        let mut out = Vec::new();
        for p in prime_factors(h.center().order()) {
            let best = self
                .h_lists()
                .iter()
                .flatten()
                .copied()
                .filter(|&x| is_p_power(h.element_order(x), p))
                .min_by_key(|&x| (h.element_order(x), x));
            out.extend(best);
        }
        out
    }

    /// Abelian minimal normal subgroups of `G` meeting `H` trivially.
    pub fn abelian_minimal_normals_avoiding_h(&self) -> Result<Vec<SubgroupRef>> {
        let g = self.g.group();
        Ok(g.minimal_normal_subgroups()?
            .into_iter()
            .filter(|m| m.is_abelian() && m.intersection(self.h.sub()).is_trivial())
            .collect())
    }

    /// `hypothesis`: every non-empty family `W` of abelian minimal normals
    /// meeting `H` trivially has a member not isomorphic, as a `Z[H]`-module,
    /// to a section of the join of the others. `conclusion`: some faithful
    /// irreducible `σ` of `G` has `⟨Res σ, ρ⟩ > 0`.
    pub fn prop_section_check(&self, rho: usize) -> Result<PropSection> {
        self.check_faithful(rho)?;
        let conclusion = self.constituents(rho)?.iter().any(|&(r, _)| self.g.kernel(r).is_trivial());
        let family = self.abelian_minimal_normals_avoiding_h()?;
        let hypothesis = self.section_hypothesis(&family)?;
        Ok(PropSection { hypothesis, conclusion })
    }

    fn h_module(&self, a: &SubgroupRef) -> Result<GModule> {
        Ok(GModule::from_normal_subgroup(self.g.group(), a)?.restrict(self.h.embedding())?)
    }

    fn section_hypothesis(&self, family: &[SubgroupRef]) -> Result<Option<bool>> {
        let g = self.g.group();
        let modules = family.iter().map(|m| self.h_module(m)).collect::<Result<Vec<_>>>()?;
        let join = |mask: usize| -> SubgroupRef {
            let elems: Vec<usize> = (0..family.len()).filter(|i| mask >> i & 1 == 1).flat_map(|i| family[i].elements().to_vec()).collect();
            g.subgroup_generated(&elems)
        };
        // V_i is isomorphic to a section of the join of mask
        let mut memo = std::collections::HashMap::new();
        let mut embeds = |i: usize, mask: usize| -> Result<Option<bool>> {
            if let Some(&r) = memo.get(&(i, mask)) {
                return Ok(r);
            }
            let j = join(mask);
            let r = if j.order() > MAX_SECTION_ORDER {
                None
            } else {
                Some(self.h_module(&j)?.has_section_isomorphic_to(&modules[i], DEFAULT_MODULE_CAP)?)
            };
            memo.insert((i, mask), r);
            Ok(r)
        };
        let n = family.len();
        if n > MAX_SECTION_FAMILY {
            // look for a violating pair only
            for i in 0..n {
                for j in i + 1..n {
                    if embeds(i, 1 << j)? == Some(true) && embeds(j, 1 << i)? == Some(true) {
                        return Ok(Some(false));
                    }
                }
            }
            return Ok(None);
        }
        let mut unknown = false;
        for w in 1usize..1 << n {
            let mut some_free = false;
            let mut undecided = false;
            for i in (0..n).filter(|i| w >> i & 1 == 1) {
                match embeds(i, w & !(1 << i))? {
                    Some(false) => {
                        some_free = true;
                        break;
                    }
                    Some(true) => {}
                    None => undecided = true,
                }
            }
            if !some_free {
                if undecided {
                    unknown = true;
                } else {
                    return Ok(Some(false));
                }
            }
        }
        Ok(if unknown { None } else { Some(true) })
    }
}

fn is_p_power(n: usize, p: usize) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// One coset `z₂Z(G)` of `Z₂(G)/Z(G)` and the values `χ([z₂, g])` on
/// coset representatives `g` of `G/[G,G]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaCoset {
    pub z2: usize,
    pub values: Vec<(usize, CycNum)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub chi_row: usize,
    pub cosets: Vec<OmegaCoset>,
    pub is_injective: bool,
    /// Whether `G -> G/ker χ` is center-preserving, computed directly.
    pub quotient_center_preserving: bool,
}

/// Least representatives of the cosets of `n`.
fn coset_reps(g: &FiniteGroup, n: &SubgroupRef) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if !seen[x] {
            reps.push(x);
            for &y in n.elements() {
                seen[g.mul(x, y)] = true;
            }
        }
    }
    reps
}

/// Context for the center of `G`, used for [`omega_chi`].
pub fn center_context(ctx: &GroupContext) -> Result<SubgroupContext> {
    SubgroupContext::new(&ctx.group().center())
}

/// `ω_χ: Z₂(G)/Z(G) -> dual of G/[G,G]` for the row `chi_row` of the
/// center's table.
pub fn omega_chi(ctx: &GroupContext, zctx: &SubgroupContext, chi_row: usize) -> Result<OmegaReport> {
    let g = ctx.group();
    let z = g.center();
    if zctx.sub().group() != g || zctx.sub().elements() != z.elements() || chi_row >= zctx.table().len() {
        return Err(AnalysisError::NotCharacterOfCenter);
    }
    let chi = zctx.table().row(chi_row);
    if chi.degree() != 1 {
        return Err(AnalysisError::NotCharacterOfCenter);
    }
    let local = |x: usize| z.elements().binary_search(&x).expect("commutator lies in the center");
    let z2 = g.second_center();
    let derived = g.derived_subgroup();
    let g_reps = coset_reps(g, &derived);
    let mut cosets = Vec::new();
    let mut is_injective = true;
    let mut seen = vec![false; g.order()];
    for &x in z2.elements() {
        if seen[x] {
            continue;
        }
        for &y in z.elements() {
            seen[g.mul(x, y)] = true;
        }
        let values: Vec<(usize, CycNum)> = g_reps.iter().map(|&t| (t, chi.at(local(g.commutator(x, t))).clone())).collect();
        if !z.contains(x) && values.iter().all(|(_, v)| v.is_one()) {
            is_injective = false;
        }
        cosets.push(OmegaCoset { z2: x, values });
    }
    let k = zctx.to_parent(zctx.context().kernel(chi_row));
    let gens = g.generators();
    let preimage = g.elements().filter(|&x| gens.iter().all(|&t| k.contains(g.commutator(x, t)))).count();
    Ok(OmegaReport { chi_row, cosets, is_injective, quotient_center_preserving: preimage == z.order() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CpExistence {
    pub exists: bool,
    /// A row of `G` with `Z(σ) = Z(G)`.
    pub via_table: Option<usize>,
    /// A row of the center's table satisfying both conditions.
    pub via_criterion: Option<usize>,
    /// For nilpotent `G`: whether some `χ` has `ω_χ` injective.
    pub condition_one_alone: Option<bool>,
    pub agree: bool,
}

/// Existence of a center-preserving irreducible, by table scan and by the
/// `ω_χ` criterion.
pub fn cp_existence(ctx: &GroupContext) -> Result<CpExistence> {
    let g = ctx.group();
    if g.order() == 1 {
        return Err(AnalysisError::TrivialGroup);
    }
    let via_table = (0..ctx.table().len()).find(|&i| ctx.is_center_preserving(i));
    let zctx = center_context(ctx)?;
    let mut via_criterion = None;
    let mut any_injective = false;
    for row in 0..zctx.table().len() {
        let om = omega_chi(ctx, &zctx, row)?;
        if !om.is_injective {
            continue;
        }
        any_injective = true;
        let k = zctx.to_parent(zctx.context().kernel(row));
        let (q, _) = g.quotient(&k)?;
        // the trivial quotient has a faithful irreducible
        if q.order() == 1 || q.is_generated_by_single_class(&q.socle_abelian()?)?.is_some() {
            via_criterion = Some(row);
            break;
        }
    }
    let exists = via_table.is_some();
    let condition_one_alone = g.is_nilpotent().then_some(any_injective);
    let agree = exists == via_criterion.is_some() && condition_one_alone.is_none_or(|c| c == exists);
    Ok(CpExistence { exists, via_table, via_criterion, condition_one_alone, agree })
}

/// Intersection of the centers of all irreducible characters.
pub fn quasikernel_intersection(ctx: &GroupContext) -> Result<SubgroupRef> {
    let g = ctx.group();
    if g.order() == 1 {
        return Err(AnalysisError::TrivialGroup);
    }
    Ok((0..ctx.table().len()).fold(g.whole(), |acc, i| acc.intersection(ctx.char_center(i))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::NamedGroup;

    fn ctx(n: NamedGroup) -> GroupContext {
        GroupContext::new(&n.build().unwrap()).unwrap()
    }

    #[test]
    fn d8_degree_two() {
        let c = ctx(NamedGroup::Dihedral(8));
        let g = c.group();
        let row = (0..c.table().len()).find(|&i| c.table().row(i).degree() == 2).unwrap();
        let chi = c.table().row(row);
        assert!(kernel(chi).is_trivial());
        assert_eq!(char_center(chi).unwrap().elements(), g.center().elements());
        assert!(is_center_preserving(chi).unwrap());
        let reg = Character::regular(g);
        assert_eq!(char_center(&reg), Err(AnalysisError::NotIrreducible));
    }

    #[test]
    fn gaschutz_small() {
        let q8 = gaschutz(&ctx(NamedGroup::Quaternion(8))).unwrap();
        assert!(q8.agree && q8.faithful_irreducible);
        let v4 = gaschutz(&ctx(NamedGroup::ElementaryAbelian(2, 2))).unwrap();
        assert!(v4.agree && !v4.faithful_irreducible);
        assert_eq!(gaschutz(&ctx(NamedGroup::Cyclic(1))), Err(AnalysisError::TrivialGroup));
    }

    #[test]
    fn omega_on_d8() {
        let c = ctx(NamedGroup::Dihedral(8));
        let z = center_context(&c).unwrap();
        let faithful = (0..2).find(|&i| z.context().kernel(i).is_trivial()).unwrap();
        let om = omega_chi(&c, &z, faithful).unwrap();
        assert!(om.is_injective && om.quotient_center_preserving);
        let om = omega_chi(&c, &z, 0).unwrap();
        assert!(!om.is_injective && !om.quotient_center_preserving);
    }

    #[test]
    fn quasikernel_is_center() {
        for n in [NamedGroup::Dihedral(8), NamedGroup::Cyclic(6), NamedGroup::Symmetric(4)] {
            let c = ctx(n);
            assert_eq!(quasikernel_intersection(&c).unwrap().elements(), c.group().center().elements());
        }
    }
}
