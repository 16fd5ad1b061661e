//! Finite abelian groups with a group action, viewed as `Z[G]`-modules.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use thiserror::Error;

use crate::group::{closure_of, FiniteGroup, GroupError, GroupHom, SubgroupRef, DEFAULT_CLOSURE_CAP};

/// Default cap on carrier sizes for enumerative operations.
pub const DEFAULT_MODULE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("carrier is not abelian")]
    NotAbelian,
    #[error("carrier size exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("module is not semisimple: no complement exists")]
    NotSemisimple,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("modules have different acting groups")]
    ActorMismatch,
    #[error("action of {g} is not an automorphism of the carrier")]
    NotAutomorphism { g: usize },
    #[error("action is not a homomorphism: fails on ({g}, {h})")]
    NotHomomorphism { g: usize, h: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T> = std::result::Result<T, ModuleError>;

/// A finite abelian group (elements `0..n`, written additively) with a left
/// action of `actor` by automorphisms.
#[derive(Clone, Debug)]
pub struct GModule {
    actor: FiniteGroup,
    n: usize,
    zero: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    /// `act[g*n + a] = g·a`
    act: Vec<u32>,
    labels: Vec<String>,
}

/// A submodule of a specific module, as a sorted element set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    elements: Vec<usize>,
    bits: FixedBitSet,
}

impl Submodule {
    fn from_bits(bits: FixedBitSet) -> Self {
        Submodule { elements: bits.ones().collect(), bits }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.bits.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        let mut b = self.bits.clone();
        b.intersect_with(&other.bits);
        Submodule::from_bits(b)
    }
}

impl GModule {
    /// Validates that `act[g]` is an automorphism of the abelian `carrier` for
    /// every `g`, and that `g -> act[g]` is a homomorphism.
    pub fn new(actor: &FiniteGroup, carrier: &FiniteGroup, act: Vec<Vec<usize>>) -> Result<Self> {
        if !carrier.is_abelian() {
            return Err(ModuleError::NotAbelian);
        }
        let n = carrier.order();
        if act.len() != actor.order() {
            return Err(ModuleError::PreconditionViolated(format!("{} action rows for {} actor elements", act.len(), actor.order())));
        }
        for (g, p) in act.iter().enumerate() {
            let mut seen = vec![false; n];
            let perm = p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true));
            if !perm || carrier.elements().any(|a| carrier.elements().any(|b| p[carrier.mul(a, b)] != carrier.mul(p[a], p[b]))) {
                return Err(ModuleError::NotAutomorphism { g });
            }
        }
        for g in actor.elements() {
            for h in actor.elements() {
                let gh = &act[actor.mul(g, h)];
                if carrier.elements().any(|a| gh[a] != act[g][act[h][a]]) {
                    return Err(ModuleError::NotHomomorphism { g, h });
                }
            }
        }
        Ok(Self::from_group_unchecked(actor, carrier, act.into_iter().flatten().map(|x| x as u32).collect()))
    }

    fn from_group_unchecked(actor: &FiniteGroup, carrier: &FiniteGroup, act: Vec<u32>) -> Self {
        let n = carrier.order();
        let mut add = Vec::with_capacity(n * n);
        for a in carrier.elements() {
            for b in carrier.elements() {
                add.push(carrier.mul(a, b) as u32);
            }
        }
        let neg = carrier.elements().map(|a| carrier.inv(a) as u32).collect();
        GModule { actor: actor.clone(), n, zero: carrier.identity(), add, neg, act, labels: carrier.labels().to_vec() }
    }

    /// An abelian normal subgroup under conjugation, `g·a = g a g^-1`.
    pub fn from_normal_subgroup(g: &FiniteGroup, a: &SubgroupRef) -> Result<Self> {
        if a.group() != g {
            return Err(GroupError::GroupMismatch.into());
        }
        a.check_normal()?;
        if !a.is_abelian() {
            return Err(ModuleError::NotAbelian);
        }
        let (carrier, embed) = a.as_group();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in embed.image_of().iter().enumerate() {
            local[x] = i;
        }
        let mut act = Vec::with_capacity(g.order() * carrier.order());
        for x in g.elements() {
            for &y in a.elements() {
                act.push(local[g.conj(y, g.inv(x))] as u32);
            }
        }
        Ok(Self::from_group_unchecked(g, &carrier, act))
    }

    /// `F_p^d` with the actor acting through one `d x d` matrix per element
    /// (on column vectors). Vectors are encoded in base `p`, first coordinate
    /// least significant.
    pub fn from_matrices(actor: &FiniteGroup, p: usize, dim: usize, matrices: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n = p.checked_pow(dim as u32).filter(|&n| n <= DEFAULT_MODULE_CAP).ok_or(ModuleError::CapExceeded { cap: DEFAULT_MODULE_CAP })?;
        if matrices.len() != actor.order() {
            return Err(ModuleError::PreconditionViolated("one matrix per actor element is required".into()));
        }
        let decode = |mut x: usize| -> Vec<usize> {
            (0..dim)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
        let vecs: Vec<Vec<usize>> = (0..n).map(decode).collect();
        let mut add = Vec::with_capacity(n * n);
        for a in &vecs {
            for b in &vecs {
                let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(encode(&s) as u32);
            }
        }
        let neg = vecs.iter().map(|a| encode(&a.iter().map(|x| (p - x) % p).collect::<Vec<_>>()) as u32).collect();
        let mut act = Vec::with_capacity(actor.order() * n);
        for m in matrices {
            for v in &vecs {
                let w: Vec<usize> = (0..dim).map(|i| (0..dim).map(|j| m[i][j] * v[j]).sum::<usize>() % p).collect();
                act.push(encode(&w) as u32);
            }
        }
        let labels = vecs.iter().map(|v| format!("{v:?}")).collect();
        let m = GModule { actor: actor.clone(), n, zero: 0, add, neg, act, labels };
        m.check_action()?;
        Ok(m)
    }

    fn check_action(&self) -> Result<()> {
        let a = &self.actor;
        for g in a.elements() {
            for x in 0..self.n {
                for y in 0..self.n {
                    if self.act(g, self.add(x, y)) != self.add(self.act(g, x), self.act(g, y)) {
                        return Err(ModuleError::NotAutomorphism { g });
                    }
                }
            }
        }
        for g in a.elements() {
            for h in a.elements() {
                if (0..self.n).any(|x| self.act(a.mul(g, h), x) != self.act(g, self.act(h, x))) {
                    return Err(ModuleError::NotHomomorphism { g, h });
                }
            }
        }
        Ok(())
    }

    /// The same carrier with the actor pulled back along `iota`.
    pub fn restrict(&self, iota: &GroupHom) -> Result<Self> {
        if iota.target != self.actor {
            return Err(ModuleError::ActorMismatch);
        }
        let mut act = Vec::with_capacity(iota.source.order() * self.n);
        for h in iota.source.elements() {
            let g = iota.apply(h);
            act.extend_from_slice(&self.act[g * self.n..(g + 1) * self.n]);
        }
        Ok(GModule { actor: iota.source.clone(), act, ..self.clone() })
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<Self> {
        if self.actor != other.actor {
            return Err(ModuleError::ActorMismatch);
        }
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        if n > DEFAULT_MODULE_CAP {
            return Err(ModuleError::CapExceeded { cap: DEFAULT_MODULE_CAP });
        }
        let mut add = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((self.add(a / n2, b / n2) * n2 + other.add(a % n2, b % n2)) as u32);
            }
        }
        let neg = (0..n).map(|a| (self.neg(a / n2) * n2 + other.neg(a % n2)) as u32).collect();
        let mut act = Vec::with_capacity(self.actor.order() * n);
        for g in self.actor.elements() {
            for a in 0..n {
                act.push((self.act(g, a / n2) * n2 + other.act(g, a % n2)) as u32);
            }
        }
        let labels = (0..n).map(|a| format!("({},{})", self.labels[a / n2], other.labels[a % n2])).collect();
        Ok(GModule { actor: self.actor.clone(), n, zero: self.zero * n2 + other.zero, add, neg, act, labels })
    }

    /// `M ⊕ ... ⊕ M` (`k >= 1` copies).
    pub fn power(&self, k: usize) -> Result<Self> {
        assert!(k >= 1, "need at least one summand");
        (1..k).try_fold(self.clone(), |acc, _| acc.direct_sum(self))
    }

    pub fn actor(&self) -> &FiniteGroup {
        &self.actor
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn act(&self, g: usize, a: usize) -> usize {
        self.act[g * self.n + a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_trivial_action(&self) -> bool {
        self.actor.elements().all(|g| (0..self.n).all(|a| self.act(g, a) == a))
    }

    pub fn orbit(&self, a: usize) -> Vec<usize> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(a);
        let mut orbit = vec![a];
        let mut i = 0;
        while i < orbit.len() {
            for &g in self.actor.generators() {
                let b = self.act(g, orbit[i]);
                if !seen.contains(b) {
                    seen.insert(b);
                    orbit.push(b);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Subgroup generated by a set of elements (no action applied).
    fn span(&self, start: &FixedBitSet, gens: &[usize]) -> FixedBitSet {
        let mut members = start.clone();
        for &s in gens {
            if members.contains(s) {
                continue;
            }
            let base: Vec<usize> = members.ones().collect();
            let mut m = s;
            while !members.contains(m) {
                for &b in &base {
                    members.insert(self.add(b, m));
                }
                m = self.add(m, s);
            }
        }
        members
    }

    fn zero_bits(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.n);
        b.insert(self.zero);
        b
    }

    /// Smallest submodule containing `subset`.
    pub fn submodule_generated(&self, subset: &[usize]) -> Submodule {
        let mut gens = Vec::new();
        let mut seen = FixedBitSet::with_capacity(self.n);
        for &a in subset {
            if !seen.contains(a) {
                for b in self.orbit(a) {
                    seen.insert(b);
                    gens.push(b);
                }
            }
        }
        Submodule::from_bits(self.span(&self.zero_bits(), &gens))
    }

    pub fn whole(&self) -> Submodule {
        let mut b = FixedBitSet::with_capacity(self.n);
        b.insert_range(..);
        Submodule::from_bits(b)
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::from_bits(self.zero_bits())
    }

    pub fn sum(&self, s: &Submodule, t: &Submodule) -> Submodule {
        Submodule::from_bits(self.span(&s.bits, t.elements()))
    }

    /// A generator of the module, if it is cyclic.
    pub fn is_cyclic_module(&self) -> Option<usize> {
        (0..self.n).find(|&a| self.submodule_generated(&[a]).order() == self.n)
    }

    /// Same test as [`is_cyclic_module`](Self::is_cyclic_module): one orbit
    /// generates the carrier.
    pub fn single_orbit_generates(&self) -> bool {
        self.is_cyclic_module().is_some()
    }

    /// Every submodule, sorted by (order, elements).
    pub fn all_submodules(&self, cap: usize) -> Result<Vec<Submodule>> {
        if self.n > cap {
            return Err(ModuleError::CapExceeded { cap });
        }
        let mut cyclic: Vec<(usize, FixedBitSet)> = Vec::new();
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
        for a in 0..self.n {
            let c = self.submodule_generated(&[a]).bits;
            if a != self.zero && seen.insert(c.clone(), ()).is_none() {
                cyclic.push((a, c));
            }
        }
        let mut index: HashMap<FixedBitSet, ()> = HashMap::new();
        let mut found = vec![self.zero_bits()];
        index.insert(found[0].clone(), ());
        let mut i = 0;
        while i < found.len() {
            for (_, c) in &cyclic {
                if c.is_subset(&found[i]) {
                    continue;
                }
                let next = self.span(&found[i], &c.ones().collect::<Vec<_>>());
                if index.insert(next.clone(), ()).is_none() {
                    found.push(next);
                }
            }
            i += 1;
        }
        let mut subs: Vec<Submodule> = found.into_iter().map(Submodule::from_bits).collect();
        subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        Ok(subs)
    }

    /// Nonzero submodules with no proper nonzero submodule, in order of
    /// their least nonzero element.
    pub fn simple_submodules(&self) -> Vec<Submodule> {
        let mut out: Vec<Submodule> = Vec::new();
        for a in 0..self.n {
            if a == self.zero || out.iter().any(|s| s.contains(a)) {
                continue;
            }
            let u = self.submodule_generated(&[a]);
            let simple = u.elements().iter().all(|&b| b == self.zero || self.submodule_generated(&[b]).order() == u.order());
            if simple {
                out.push(u);
            }
        }
        out
    }

    /// A submodule `T` with `S ∩ T = 0` and `S + T = M`, built greedily from
    /// simple submodules.
    pub fn complement_in_semisimple(&self, s: &Submodule) -> Result<Submodule> {
        let mut t = self.zero_submodule();
        let mut covered = s.clone();
        for u in self.simple_submodules() {
            if u.intersection(&covered).is_zero() {
                t = self.sum(&t, &u);
                covered = self.sum(&covered, &u);
            }
        }
        if covered.order() != self.n || !s.intersection(&t).is_zero() {
            return Err(ModuleError::NotSemisimple);
        }
        Ok(t)
    }

    /// The submodule as a module in its own right, with its inclusion.
    pub fn submodule_as_module(&self, b: &Submodule) -> (GModule, Vec<usize>) {
        let z = self.zero_submodule();
        self.section(b, &z)
    }

    /// `B/C` for submodules `C ≤ B`. Cosets are indexed in order of their
    /// least element; the second component maps each coset to that element.
    pub fn section(&self, b: &Submodule, c: &Submodule) -> (GModule, Vec<usize>) {
        debug_assert!(c.is_subset(b));
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for &x in b.elements() {
            if coset[x] != usize::MAX {
                continue;
            }
            for &y in c.elements() {
                coset[self.add(x, y)] = reps.len();
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut add = Vec::with_capacity(q * q);
        for &x in &reps {
            for &y in &reps {
                add.push(coset[self.add(x, y)] as u32);
            }
        }
        let neg = reps.iter().map(|&x| coset[self.neg(x)] as u32).collect();
        let mut act = Vec::with_capacity(self.actor.order() * q);
        for g in self.actor.elements() {
            for &x in &reps {
                act.push(coset[self.act(g, x)] as u32);
            }
        }
        let labels = reps.iter().map(|&x| self.labels[x].clone()).collect();
        let m = GModule { actor: self.actor.clone(), n: q, zero: coset[self.zero], add, neg, act, labels };
        (m, reps)
    }

    /// A minimal list of elements whose orbits generate the module.
    fn module_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.zero_submodule();
        for a in 0..self.n {
            if !cur.contains(a) {
                gens.push(a);
                cur = self.sum(&cur, &self.submodule_generated(&[a]));
            }
        }
        gens
    }

    fn profile(&self) -> Vec<(usize, usize)> {
        let mut p: Vec<(usize, usize)> = (0..self.n).map(|a| (self.element_order(a), self.orbit(a).len())).collect();
        p.sort_unstable();
        p
    }

    /// An equivariant group isomorphism `self -> other`, if one exists.
    pub fn find_isomorphism(&self, other: &GModule) -> Result<Option<Vec<usize>>> {
        if self.actor != other.actor {
            return Err(ModuleError::ActorMismatch);
        }
        if self.n != other.n || self.profile() != other.profile() {
            return Ok(None);
        }
        let gens = self.module_generators();
        let mut images = Vec::with_capacity(gens.len());
        Ok(self.iso_search(other, &gens, &mut images))
    }

    pub fn is_isomorphic(&self, other: &GModule) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    fn iso_search(&self, other: &GModule, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            return self.extend_hom(other, gens, images).filter(|m| {
                let mut seen = vec![false; other.n];
                m.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            });
        }
        let a = gens[images.len()];
        let (ord, orb) = (self.element_order(a), self.orbit(a).len());
        for b in 0..other.n {
            if other.element_order(b) != ord || other.orbit(b).len() != orb {
                continue;
            }
            images.push(b);
            if let Some(m) = self.iso_search(other, gens, images) {
                return Some(m);
            }
            images.pop();
        }
        None
    }

    /// The equivariant homomorphism with `gens[i] -> images[i]`, if it exists.
    fn extend_hom(&self, other: &GModule, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        // orbit elements first: g·a -> g·φ(a)
        let mut spanning = Vec::new();
        for (&a, &b) in gens.iter().zip(images) {
            for g in self.actor.elements() {
                let (x, y) = (self.act(g, a), other.act(g, b));
                if map[x] == usize::MAX {
                    map[x] = y;
                    spanning.push(x);
                } else if map[x] != y {
                    return None;
                }
            }
        }
        let mut full = vec![usize::MAX; self.n];
        full[self.zero] = other.zero;
        let mut queue = vec![self.zero];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &s in &spanning {
                let y = self.add(x, s);
                let img = other.add(full[x], map[s]);
                if full[y] == usize::MAX {
                    full[y] = img;
                    queue.push(y);
                } else if full[y] != img {
                    return None;
                }
            }
            i += 1;
        }
        if queue.len() != self.n {
            return None;
        }
        Some(full)
    }

    /// Whether some section `B/C` of `self` is isomorphic to `v`.
    pub fn has_section_isomorphic_to(&self, v: &GModule, cap: usize) -> Result<bool> {
        if self.actor != v.actor {
            return Err(ModuleError::ActorMismatch);
        }
        if v.n == 1 {
            return Ok(true);
        }
        if self.n % v.n != 0 {
            return Ok(false);
        }
        let subs = self.all_submodules(cap)?;
        for b in &subs {
            if b.order() % v.n != 0 {
                continue;
            }
            for c in &subs {
                if c.order() * v.n != b.order() || !c.is_subset(b) {
                    continue;
                }
                let (q, _) = self.section(b, c);
                if q.is_isomorphic(v)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// `Hom(M, Q/Z)` with `(g·φ)(a) = φ(g^-1·a)`. A character `φ` is stored
    /// by its values `n·φ(a) mod n`, `n` the exponent of the carrier; labels
    /// list the values on the carrier's elements.
    pub fn dual(&self) -> Result<GModule> {
        if self.n > DEFAULT_MODULE_CAP {
            return Err(ModuleError::CapExceeded { cap: DEFAULT_MODULE_CAP });
        }
        let e = self.exponent();
        // group generators of the carrier
        let mut gens = Vec::new();
        let mut span = self.zero_bits();
        for a in 0..self.n {
            if !span.contains(a) {
                gens.push(a);
                span = self.span(&span, &[a]);
            }
        }
        let orders: Vec<usize> = gens.iter().map(|&a| self.element_order(a)).collect();
        let mut homs: Vec<Vec<usize>> = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let vals: Vec<usize> = choice.iter().zip(&orders).map(|(&c, &o)| c * (e / o)).collect();
            if let Some(h) = self.extend_to_qz(&gens, &vals, e) {
                homs.push(h);
            }
            let mut i = 0;
            while i < choice.len() {
                choice[i] += 1;
                if choice[i] < orders[i] {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
        homs.sort();
        let index: HashMap<Vec<usize>, usize> = homs.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect();
        let m = homs.len();
        let mut add = Vec::with_capacity(m * m);
        for a in &homs {
            for b in &homs {
                let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % e).collect();
                add.push(index[&s] as u32);
            }
        }
        let neg = homs.iter().map(|a| index[&a.iter().map(|x| (e - x) % e).collect::<Vec<_>>()] as u32).collect();
        let mut act = Vec::with_capacity(self.actor.order() * m);
        for g in self.actor.elements() {
            let gi = self.actor.inv(g);
            for h in &homs {
                let moved: Vec<usize> = (0..self.n).map(|a| h[self.act(gi, a)]).collect();
                act.push(index[&moved] as u32);
            }
        }
        let zero = index[&vec![0; self.n]];
        let labels = homs.iter().map(|h| format!("{h:?}/{e}")).collect();
        Ok(GModule { actor: self.actor.clone(), n: m, zero, add, neg, act, labels })
    }

    fn extend_to_qz(&self, gens: &[usize], vals: &[usize], e: usize) -> Option<Vec<usize>> {
        let mut h = vec![usize::MAX; self.n];
        h[self.zero] = 0;
        let mut queue = vec![self.zero];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&s, &v) in gens.iter().zip(vals) {
                let y = self.add(x, s);
                let img = (h[x] + v) % e;
                if h[y] == usize::MAX {
                    h[y] = img;
                    queue.push(y);
                } else if h[y] != img {
                    return None;
                }
            }
            i += 1;
        }
        Some(h)
    }
}

/// `SL(2, p)` as a group of matrices, generated by `u = [[1,1],[0,1]]` and
/// `l = [[1,0],[1,1]]`, with its natural module `F_p^2`.
pub fn sl2_natural_module(p: usize) -> Result<GModule> {
    type Mat = [[usize; 2]; 2];
    let mul = move |a: &Mat, b: &Mat| -> Mat {
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % p;
            }
        }
        c
    };
    let id: Mat = [[1, 0], [0, 1]];
    let (g, mats) = closure_of(id, &[[[1, 1], [0, 1]], [[1, 0], [1, 1]]], &["u", "l"], mul, DEFAULT_CLOSURE_CAP)?;
    let mats: Vec<Vec<Vec<usize>>> = mats.iter().map(|m| m.iter().map(|r| r.to_vec()).collect()).collect();
    GModule::from_matrices(&g, p, 2, &mats)
}

/// An `H`-equivariant injective homomorphism `M -> N`, as `(m, φ(m))` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoursatMap {
    pub pairs: Vec<(usize, usize)>,
}

/// Writes `m = h·n` with `h ∈ H`, `n ∈ N` and sends `m` to `n^-1`.
pub fn goursat_witness(g: &FiniteGroup, h: &SubgroupRef, m: &SubgroupRef, n: &SubgroupRef) -> Result<GoursatMap> {
    for s in [h, m, n] {
        if s.group() != g {
            return Err(GroupError::GroupMismatch.into());
        }
    }
    let fail = |what: &str| Err(ModuleError::PreconditionViolated(what.into()));
    if !m.is_normal() {
        return fail("M is not normal in G");
    }
    if !n.is_normal() {
        return fail("N is not normal in G");
    }
    if !m.intersection(h).is_trivial() {
        return fail("M ∩ H is not trivial");
    }
    if !n.intersection(h).is_trivial() {
        return fail("N ∩ H is not trivial");
    }
    if !m.intersection(n).is_trivial() {
        return fail("M ∩ N is not trivial");
    }
    if h.order() * n.order() != g.order() {
        return fail("G is not HN");
    }
    let mut pairs = Vec::with_capacity(m.order());
    for &x in m.elements() {
        // x = y·z with y in H, z in N
        let z = h
            .elements()
            .iter()
            .find_map(|&y| {
                let z = g.mul(g.inv(y), x);
                n.contains(z).then_some(z)
            })
            .expect("G = HN");
        pairs.push((x, g.inv(z)));
    }
    Ok(GoursatMap { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::NamedGroup;

    #[test]
    fn conjugation_modules() {
        let d8 = NamedGroup::Dihedral(8).build().unwrap();
        let z = GModule::from_normal_subgroup(&d8, &d8.center()).unwrap();
        assert!(z.is_trivial_action());
        let r = d8.name_of("r").unwrap();
        let s = d8.name_of("s").unwrap();
        let rot = d8.subgroup_generated(&[r]);
        let m = GModule::from_normal_subgroup(&d8, &rot).unwrap();
        let local_r = rot.elements().iter().position(|&x| x == r).unwrap();
        let local_rinv = rot.elements().iter().position(|&x| x == d8.inv(r)).unwrap();
        assert_eq!(m.act(s, local_r), local_rinv);
        let v4 = d8.subgroup_generated(&[s]);
        assert!(matches!(GModule::from_normal_subgroup(&d8, &v4), Err(ModuleError::Group(GroupError::NotNormal { .. }))));
    }

    #[test]
    fn sl2_three_cyclicity() {
        let v = sl2_natural_module(3).unwrap();
        assert_eq!(v.actor().order(), 24);
        assert!(v.is_cyclic_module().is_some());
        assert!(v.power(2).unwrap().is_cyclic_module().is_some());
        assert!(v.power(3).unwrap().is_cyclic_module().is_none());
    }

    #[test]
    fn submodules() {
        let v = sl2_natural_module(3).unwrap();
        let v3 = v.power(3).unwrap();
        assert!(v3.submodule_generated(&[]).is_zero());
        let x = (1..v3.order()).next().unwrap();
        assert_eq!(v3.submodule_generated(&[x]).order(), 9);
        let c2 = NamedGroup::Cyclic(2).build().unwrap();
        let v4 = NamedGroup::ElementaryAbelian(2, 2).build().unwrap();
        let triv = GModule::new(&c2, &v4, vec![(0..4).collect(), (0..4).collect()]).unwrap();
        assert_eq!(triv.all_submodules(DEFAULT_MODULE_CAP).unwrap().len(), 5);
    }

    #[test]
    fn complements() {
        let v = sl2_natural_module(3).unwrap();
        let v2 = v.power(2).unwrap();
        let first = v2.submodule_generated(&[v2.order() / 9 * 1]);
        let zero = v2.zero_submodule();
        assert_eq!(v2.complement_in_semisimple(&zero).unwrap().order(), 81);
        assert!(v2.complement_in_semisimple(&v2.whole()).unwrap().is_zero());
        let t = v2.complement_in_semisimple(&first).unwrap();
        assert!(t.intersection(&first).is_zero());
        assert_eq!(v2.sum(&t, &first).order(), 81);
        // C4 with trivial action is not semisimple
        let c1 = NamedGroup::Cyclic(1).build().unwrap();
        let c4 = NamedGroup::Cyclic(4).build().unwrap();
        let m = GModule::new(&c1, &c4, vec![(0..4).collect()]).unwrap();
        let two = m.submodule_generated(&[2]);
        assert_eq!(m.complement_in_semisimple(&two), Err(ModuleError::NotSemisimple));
    }

    #[test]
    fn duals() {
        let c1 = NamedGroup::Cyclic(1).build().unwrap();
        let c2 = NamedGroup::Cyclic(2).build().unwrap();
        let m = GModule::new(&c1, &c2, vec![vec![0, 1]]).unwrap();
        let d = m.dual().unwrap();
        assert_eq!(d.order(), 2);
        assert!(d.single_orbit_generates());
        let v4 = NamedGroup::ElementaryAbelian(2, 2).build().unwrap();
        let m = GModule::new(&c1, &v4, vec![(0..4).collect()]).unwrap();
        let d = m.dual().unwrap();
        assert_eq!(d.order(), 4);
        assert!(!d.single_orbit_generates());
        let v = sl2_natural_module(3).unwrap();
        for k in 1..=3 {
            let w = v.power(k).unwrap();
            assert_eq!(w.single_orbit_generates(), w.dual().unwrap().single_orbit_generates());
        }
    }

    #[test]
    fn goursat_on_klein_four() {
        let v4 = NamedGroup::ElementaryAbelian(2, 2).build().unwrap();
        let e1 = v4.name_of("e1").unwrap();
        let e2 = v4.name_of("e2").unwrap();
        let h = v4.subgroup_generated(&[e1]);
        let n = v4.subgroup_generated(&[e2]);
        let diag = v4.subgroup_generated(&[v4.mul(e1, e2)]);
        let w = goursat_witness(&v4, &h, &diag, &n).unwrap();
        assert!(w.pairs.contains(&(v4.mul(e1, e2), e2)));
        assert!(matches!(goursat_witness(&v4, &h, &n, &n), Err(ModuleError::PreconditionViolated(_))));
        let triv = v4.trivial_subgroup();
        assert_eq!(goursat_witness(&v4, &h, &triv, &n).unwrap().pairs, vec![(v4.identity(), v4.identity())]);
    }
}
