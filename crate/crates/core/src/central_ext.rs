//! Normalized 2-cocycles with values in `Q/Z` and the central extensions
//! they define.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{AnalysisError, GroupContext, Pair};
use crate::chartab::CharError;
use crate::group::{FiniteGroup, GroupError, GroupHom, GroupJson, SubgroupRef};
use crate::smith::solve_mod;

pub type Q = Ratio<i64>;

/// Largest number of lifts tried by [`splits_over_subgroup`].
pub const SPLIT_SEARCH_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error("cocycle identity fails on ({g}, {h}, {k})")]
    CocycleIdentityFails { g: usize, h: usize, k: usize },
    #[error("cocycle is not normalized at {g}")]
    NotNormalized { g: usize },
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("mu is not central")]
    MuNotCentral,
    #[error("mu is not the kernel of the projection")]
    MuNotKernel,
    #[error("mu is not cyclic")]
    MuNotCyclic,
    #[error("no irreducible character is faithful on mu")]
    NoFaithfulCentralCharacter,
    #[error("search exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("order reduction failed: {0}")]
    ReductionFailed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl From<CharError> for ExtError {
    fn from(e: CharError) -> Self {
        ExtError::Analysis(e.into())
    }
}

pub type Result<T> = std::result::Result<T, ExtError>;

fn frac(x: Q) -> Q {
    x - x.floor()
}

/// A function `G × G -> Q/Z`, stored by representatives in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    base: FiniteGroup,
    values: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub order_base: usize,
    /// Row-major `[numerator, denominator]` pairs as decimal strings.
    pub values: Vec<[String; 2]>,
}

impl Cocycle {
    /// Values are reduced mod 1; nothing else is checked.
    pub fn new(base: &FiniteGroup, values: Vec<Q>) -> Result<Self> {
        let n = base.order();
        if values.len() != n * n {
            return Err(ExtError::InvalidCocycle(format!("expected {} values, got {}", n * n, values.len())));
        }
        Ok(Cocycle { base: base.clone(), values: values.into_iter().map(frac).collect() })
    }

    pub fn zero(base: &FiniteGroup) -> Self {
        let n = base.order();
        Cocycle { base: base.clone(), values: vec![Q::zero(); n * n] }
    }

    pub fn from_fn(base: &FiniteGroup, f: impl Fn(usize, usize) -> Q) -> Self {
        let values = base.elements().flat_map(|g| base.elements().map(move |h| (g, h))).map(|(g, h)| frac(f(g, h))).collect();
        Cocycle { base: base.clone(), values }
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn get(&self, g: usize, h: usize) -> Q {
        self.values[g * self.base.order() + h]
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// Checks normalization and the cocycle identity
    /// `z(g,h) + z(gh,k) = z(h,k) + z(g,hk)`.
    pub fn validate(&self) -> Result<()> {
        let g = &self.base;
        let e = g.identity();
        for x in g.elements() {
            if !self.get(e, x).is_zero() || !self.get(x, e).is_zero() {
                return Err(ExtError::NotNormalized { g: x });
            }
        }
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for c in g.elements() {
                    let lhs = self.get(a, b) + self.get(ab, c);
                    let rhs = self.get(b, c) + self.get(a, g.mul(b, c));
                    if !frac(lhs - rhs).is_zero() {
                        return Err(ExtError::CocycleIdentityFails { g: a, h: b, k: c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Least common multiple of the denominators.
    pub fn order(&self) -> usize {
        self.values.iter().fold(1i64, |acc, v| acc.lcm(v.denom())) as usize
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        assert!(self.base == other.base, "cocycles on different groups");
        Cocycle { base: self.base.clone(), values: self.values.iter().zip(&other.values).map(|(a, b)| frac(a + b)).collect() }
    }

    pub fn sub(&self, other: &Cocycle) -> Cocycle {
        assert!(self.base == other.base, "cocycles on different groups");
        Cocycle { base: self.base.clone(), values: self.values.iter().zip(&other.values).map(|(a, b)| frac(a - b)).collect() }
    }

    pub fn scale(&self, k: i64) -> Cocycle {
        Cocycle { base: self.base.clone(), values: self.values.iter().map(|a| frac(a * k)).collect() }
    }

    pub fn to_json(&self) -> CocycleJson {
        CocycleJson {
            order_base: self.base.order(),
            values: self.values.iter().map(|v| [v.numer().to_string(), v.denom().to_string()]).collect(),
        }
    }

    pub fn from_json(base: &FiniteGroup, json: &CocycleJson) -> Result<Self> {
        if json.order_base != base.order() {
            return Err(ExtError::InvalidCocycle(format!("base order {} does not match {}", json.order_base, base.order())));
        }
        let values = json
            .values
            .iter()
            .map(|[n, d]| {
                let n: i64 = n.parse().map_err(|_| ExtError::InvalidCocycle(format!("bad numerator {n:?}")))?;
                let d: i64 = d.parse().map_err(|_| ExtError::InvalidCocycle(format!("bad denominator {d:?}")))?;
                if d <= 0 {
                    return Err(ExtError::InvalidCocycle(format!("bad denominator {d}")));
                }
                Ok(Q::new(n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Cocycle::new(base, values)
    }
}

/// `δf(g,h) = f(h) − f(gh) + f(g)` for `f` with `f(1) = 0`.
pub fn coboundary(base: &FiniteGroup, f: &[Q]) -> Result<Cocycle> {
    if f.len() != base.order() {
        return Err(ExtError::InvalidCocycle(format!("expected {} values of f", base.order())));
    }
    if !frac(f[base.identity()]).is_zero() {
        return Err(ExtError::NotNormalized { g: base.identity() });
    }
    Ok(Cocycle::from_fn(base, |g, h| f[h] - f[base.mul(g, h)] + f[g]))
}

/// Some `f` with `z1 − z2 = δf`, if the cocycles are cohomologous.
pub fn is_cohomologous(z1: &Cocycle, z2: &Cocycle) -> Option<Vec<Q>> {
    let g = &z1.base;
    assert!(*g == z2.base, "cocycles on different groups");
    let n = g.order();
    // f takes values in (1/m)Z/Z with m = lcm(orders)·|G|
    let m = (z1.order().lcm(&z2.order()) * n) as i64;
    let d = z1.sub(z2);
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let mut row = vec![0i64; n];
            row[b] += 1;
            row[g.mul(a, b)] -= 1;
            row[a] += 1;
            rows.push(row);
            let v = d.get(a, b) * m;
            rhs.push(*v.numer() / *v.denom());
        }
    }
    let x = solve_mod(&rows, &rhs, m)?;
    Some(x.into_iter().map(|v| frac(Q::new(v, m))).collect())
}

/// A cohomologous cocycle of order dividing `|G|`: with `f(g) = Σ_h z(g,h)`
/// and `ḟ(g)` the representative of `f(g)` in `[0,1)` divided by `|G|`,
/// `z'(g,h) = z(g,h) + ḟ(gh) − ḟ(g) − ḟ(h)`.
pub fn reduce_order(z: &Cocycle) -> Result<Cocycle> {
    z.validate().map_err(|e| ExtError::InvalidCocycle(e.to_string()))?;
    let g = &z.base;
    let n = g.order() as i64;
    let fdot: Vec<Q> = g.elements().map(|x| frac(g.elements().map(|h| z.get(x, h)).sum::<Q>()) / n).collect();
    let zp = Cocycle::from_fn(g, |a, b| z.get(a, b) + fdot[g.mul(a, b)] - fdot[a] - fdot[b]);
    if !zp.scale(n).values.iter().all(Q::is_zero) {
        return Err(ExtError::ReductionFailed("|G|·z' is not zero".into()));
    }
    if is_cohomologous(z, &zp).is_none() {
        return Err(ExtError::ReductionFailed("z' is not cohomologous to z".into()));
    }
    Ok(zp)
}

/// `1 -> mu -> total -> base -> 1` with `mu` cyclic and central.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub total: FiniteGroup,
    pub mu: SubgroupRef,
    pub projection: GroupHom,
    /// `projection(section[g]) = g`
    pub section: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    #[serde(flatten)]
    pub total: GroupJson,
    pub mu: Vec<usize>,
    pub projection: Vec<usize>,
    pub base: GroupJson,
}

impl CentralExtension {
    pub fn base(&self) -> &FiniteGroup {
        &self.projection.target
    }

    pub fn to_json(&self) -> ExtensionJson {
        ExtensionJson {
            total: self.total.to_json(),
            mu: self.mu.elements().to_vec(),
            projection: self.projection.image_of().to_vec(),
            base: self.base().to_json(),
        }
    }

    /// Checks `mu = ker(projection)`, centrality and cyclicity; the section
    /// picks the least preimage of each element (the identity for `1`).
    pub fn new(total: &FiniteGroup, mu: &SubgroupRef, projection: &GroupHom) -> Result<Self> {
        if projection.source != *total || mu.group() != total {
            return Err(GroupError::GroupMismatch.into());
        }
        if !mu.is_subgroup_of(&total.center()) {
            return Err(ExtError::MuNotCentral);
        }
        if projection.kernel().elements() != mu.elements() || !projection.is_surjective() {
            return Err(ExtError::MuNotKernel);
        }
        if !mu.elements().iter().any(|&x| total.element_order(x) == mu.order()) {
            return Err(ExtError::MuNotCyclic);
        }
        let base = &projection.target;
        let mut section = vec![usize::MAX; base.order()];
        for x in total.elements() {
            let g = projection.apply(x);
            if section[g] == usize::MAX {
                section[g] = x;
            }
        }
        section[base.identity()] = total.identity();
        Ok(CentralExtension { total: total.clone(), mu: mu.clone(), projection: projection.clone(), section })
    }

    /// `total -> total/mu` for a cyclic central `mu`.
    pub fn from_central_subgroup(total: &FiniteGroup, mu: &SubgroupRef) -> Result<Self> {
        if mu.group() != total {
            return Err(GroupError::GroupMismatch.into());
        }
        if !mu.is_subgroup_of(&total.center()) {
            return Err(ExtError::MuNotCentral);
        }
        let (_, projection) = total.quotient(mu)?;
        CentralExtension::new(total, mu, &projection)
    }

    /// The least element generating `mu`.
    pub fn mu_generator(&self) -> usize {
        *self.mu.elements().iter().find(|&&x| self.total.element_order(x) == self.mu.order()).expect("mu is cyclic")
    }
}

/// The group on pairs `(k mod n, g)`, index `k·|G| + g`, with
/// `(k,g)(l,h) = (k + l + n·z(g,h), gh)`.
pub fn extension_from_cocycle(z: &Cocycle) -> Result<CentralExtension> {
    z.validate().map_err(|e| ExtError::InvalidCocycle(e.to_string()))?;
    let g = &z.base;
    let m = g.order();
    let n = z.order();
    let lift = |v: Q| -> usize { (*(v * n as i64).numer()) as usize };
    let mut table = vec![vec![0usize; n * m]; n * m];
    for (x, row) in table.iter_mut().enumerate() {
        let (k, a) = (x / m, x % m);
        for (y, cell) in row.iter_mut().enumerate() {
            let (l, b) = (y / m, y % m);
            *cell = ((k + l + lift(z.get(a, b))) % n) * m + g.mul(a, b);
        }
    }
    let labels = (0..n * m).map(|x| format!("({},{})", x / m, g.label(x % m))).collect();
    let total = FiniteGroup::from_multiplication_table(table, labels)?;
    let mu = total.subgroup_generated(&[m % (n * m)]);
    let projection = GroupHom::new(total.clone(), g.clone(), (0..n * m).map(|x| x % m).collect())?;
    let section = g.elements().collect();
    Ok(CentralExtension { total, mu, projection, section })
}

/// `z(g,h)` with `s(g)s(h) = u^{n·z(g,h)} s(gh)`, `s` the least-index
/// section and `u` the least generator of `mu`.
pub fn cocycle_from_extension(ext: &CentralExtension) -> Result<Cocycle> {
    let t = &ext.total;
    let n = ext.mu.order();
    let u = ext.mu_generator();
    let mut exponent = vec![usize::MAX; t.order()];
    let mut x = t.identity();
    for k in 0..n {
        exponent[x] = k;
        x = t.mul(x, u);
    }
    let s = &ext.section;
    let base = ext.base();
    let z = Cocycle::from_fn(base, |g, h| {
        let w = t.mul(t.mul(s[g], s[h]), t.inv(s[base.mul(g, h)]));
        Q::new(exponent[w] as i64, n as i64)
    });
    z.validate()?;
    Ok(z)
}

/// Image of `Z(total)` in the base.
pub fn z_c(ext: &CentralExtension) -> SubgroupRef {
    ext.projection.map_subgroup(&ext.total.center())
}

fn mu_faithful_rows(ext: &CentralExtension, ctx: &GroupContext) -> Vec<usize> {
    (0..ctx.table().len()).filter(|&i| ctx.kernel(i).intersection(&ext.mu).is_trivial()).collect()
}

/// Image of the intersection of the centers of the irreducibles of `total`
/// that are faithful on `mu`.
pub fn k_c(ext: &CentralExtension) -> Result<SubgroupRef> {
    k_c_with(ext, &GroupContext::new(&ext.total)?)
}

pub fn k_c_with(ext: &CentralExtension, ctx: &GroupContext) -> Result<SubgroupRef> {
    let rows = mu_faithful_rows(ext, ctx);
    if rows.is_empty() {
        return Err(ExtError::NoFaithfulCentralCharacter);
    }
    let inter = rows.iter().fold(ext.total.whole(), |acc, &i| acc.intersection(ctx.char_center(i)));
    Ok(ext.projection.map_subgroup(&inter))
}

/// A row of `total`, faithful on `mu`, whose center is `Z(total)`.
pub fn has_c_faithful_irreducible(ext: &CentralExtension) -> Result<Option<usize>> {
    let ctx = GroupContext::new(&ext.total)?;
    let rows = mu_faithful_rows(ext, &ctx);
    if rows.is_empty() {
        return Err(ExtError::NoFaithfulCentralCharacter);
    }
    Ok(rows.into_iter().find(|&i| ctx.is_center_preserving(i)))
}

/// A subgroup of the preimage of `h` mapping isomorphically onto `h`.
pub fn splits_over_subgroup(ext: &CentralExtension, h: &SubgroupRef) -> Result<Option<SubgroupRef>> {
    if h.group() != ext.base() {
        return Err(GroupError::GroupMismatch.into());
    }
    let t = &ext.total;
    let gens = h.generators();
    let n = ext.mu.order();
    let tries = (n as f64).powi(gens.len() as i32);
    if tries > SPLIT_SEARCH_CAP as f64 {
        return Err(ExtError::CapExceeded { cap: SPLIT_SEARCH_CAP });
    }
    let mut choice = vec![0usize; gens.len()];
    loop {
        let lifts: Vec<usize> = gens.iter().zip(&choice).map(|(&g, &c)| t.mul(ext.section[g], ext.mu.elements()[c])).collect();
        let c = t.subgroup_generated(&lifts);
        if c.order() == h.order() {
            return Ok(Some(c));
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < n {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return Ok(None);
        }
    }
}

/// Relative lifting check for `h` in the base. Requires an irreducible
/// `ρ` of the preimage `H_d` of `h` that is faithful on `mu` with
/// `Z(ρ) = mu`, i.e. a faithful irreducible projective representation of
/// `h`. Returns `ρ` (an `H_d` row) and the first constituent `σ` of the
/// induced character that is faithful on `mu` with `Z(σ) ∩ H_d ⊆ mu`, or
/// `None` if no constituent qualifies.
pub fn relative_fpr_check(ext: &CentralExtension, h: &SubgroupRef) -> Result<Option<(usize, usize)>> {
    if h.group() != ext.base() {
        return Err(GroupError::GroupMismatch.into());
    }
    let ctx = GroupContext::new(&ext.total)?;
    let hd = ext.projection.preimage(h);
    let pair = Pair::new(&ctx, &hd)?;
    let sub = pair.h();
    let hc = sub.context();
    let rho = (0..hc.table().len()).find(|&r| {
        sub.to_parent(hc.kernel(r)).intersection(&ext.mu).is_trivial() && sub.to_parent(hc.char_center(r)).elements() == ext.mu.elements()
    });
    let Some(rho) = rho else {
        return Err(ExtError::HypothesisViolated("the preimage of H has no irreducible with center equal to mu".into()));
    };
    for (s, _) in pair.constituents(rho)? {
        let faithful_on_mu = ctx.kernel(s).intersection(&ext.mu).is_trivial();
        if faithful_on_mu && ctx.char_center(s).intersection(&hd).is_subgroup_of(&ext.mu) {
            return Ok(Some((rho, s)));
        }
    }
    Ok(None)
}
