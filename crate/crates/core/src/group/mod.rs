//! Finite groups stored as full multiplication tables.
//!
//! A [`FiniteGroup`] is an immutable, cheaply clonable handle. Element
//! identity is the element index; nothing is ever compared "up to
//! isomorphism" except by the explicit brute-force search in [`iso`].

mod build;
mod classes;
pub mod iso;
mod named;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use build::{closure_of, direct_product_many, Action};
pub use classes::ConjugacyClasses;
pub use named::NamedGroup;
pub use subgroup::SubgroupRef;

/// Default cap on the size of a group produced by generator closure.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Default cap on the group order accepted by [`FiniteGroup::all_subgroups`].
pub const DEFAULT_SUBGROUP_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is malformed: {0}")]
    Malformed(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("labels are not pairwise distinct: {0:?}")]
    DuplicateLabel(String),
    #[error("generator {generator} is not a permutation of 0..{degree}")]
    NotAPermutation { generator: usize, degree: usize },
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("unknown group specification: {0}")]
    UnknownSpec(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("action of {h} is not an automorphism: fails on the pair ({a}, {b})")]
    ActionNotAutomorphism { h: usize, a: usize, b: usize },
    #[error("action is not a homomorphism: fails on the pair ({h1}, {h2})")]
    ActionNotHomomorphism { h1: usize, h2: usize },
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves it")]
    NotNormal { conjugator: usize, element: usize },
    #[error("operation is undefined on the trivial group")]
    TrivialGroup,
    #[error("map is not a homomorphism: fails on the pair ({g}, {h})")]
    NotHomomorphism { g: usize, h: usize },
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("unknown element name {0:?}")]
    UnknownName(String),
    #[error("subgroup belongs to a different group")]
    GroupMismatch,
}

pub type Result<T> = std::result::Result<T, GroupError>;

/// A word in named elements, e.g. `a^2*c^-1`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(String, i64)>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (name, exp)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(name)?;
            if *exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = GroupError;

    /// Parses `a^2*c^-1`; `1` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::default());
        }
        let bad = || GroupError::Malformed(format!("bad word {s:?}"));
        let mut out = Vec::new();
        for tok in s.split('*') {
            let (name, exp) = match tok.trim().split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<i64>().map_err(|_| bad())?),
                None => (tok.trim(), 1),
            };
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(bad());
            }
            out.push((name.to_string(), exp));
        }
        Ok(Word(out))
    }
}

/// Serialized form of a group: `mul[g][h] = g*h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

struct GroupData {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    labels: Vec<String>,
    names: Vec<(String, usize)>,
    generators: Vec<usize>,
    cache: GroupCache,
}

#[derive(Default)]
struct GroupCache {
    generating_set: OnceLock<Vec<usize>>,
    element_orders: OnceLock<Vec<usize>>,
    classes: OnceLock<Arc<ConjugacyClasses>>,
    center: OnceLock<Vec<usize>>,
    second_center: OnceLock<Vec<usize>>,
    class_closures: OnceLock<Vec<FixedBitSet>>,
    minimal_normals: OnceLock<Vec<Vec<usize>>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("generators", &self.data.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a multiplication table `table[g][h] = g*h`.
    pub fn from_multiplication_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Malformed("empty table".into()));
        }
        if labels.len() != n {
            return Err(GroupError::Malformed(format!("{} labels for order {n}", labels.len())));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Malformed(format!("row {g} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::Malformed(format!("entry {x} in row {g} is out of range")));
                }
                mul.push(x as u32);
            }
        }
        let m = |a: usize, b: usize| mul[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| m(e, g) == g && m(g, e) == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| m(g, h) == identity && m(h, g) == identity)
                .ok_or(GroupError::NoInverse { element: g })?;
            inv[g] = h as u32;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(GroupError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self::from_raw(mul, inv, identity, labels, Vec::new(), Vec::new()))
    }

    pub fn from_json(json: GroupJson) -> Result<Self> {
        if json.mul.len() != json.order {
            return Err(GroupError::Malformed(format!("order {} but {} rows", json.order, json.mul.len())));
        }
        Self::from_multiplication_table(json.mul, json.labels)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.order(), mul: self.table(), labels: self.labels().to_vec() }
    }

    /// Assembles a group from a table already known to be a group table.
    pub(crate) fn from_raw(
        mul: Vec<u32>,
        inv: Vec<u32>,
        identity: usize,
        labels: Vec<String>,
        names: Vec<(String, usize)>,
        generators: Vec<usize>,
    ) -> Self {
        let order = inv.len();
        debug_assert_eq!(mul.len(), order * order);
        FiniteGroup {
            data: Arc::new(GroupData {
                order,
                mul,
                inv,
                identity,
                labels,
                names,
                generators,
                cache: GroupCache::default(),
            }),
        }
    }

    /// Builds the inverse table and identity from a raw table.
    pub(crate) fn from_table_trusted(
        mul: Vec<u32>,
        labels: Vec<String>,
        names: Vec<(String, usize)>,
        generators: Vec<usize>,
    ) -> Self {
        let n = labels.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e * n + g] as usize == g))
            .expect("trusted table has an identity");
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let row = &mul[g * n..(g + 1) * n];
            inv[g] = row.iter().position(|&x| x as usize == identity).expect("trusted table has inverses") as u32;
        }
        Self::from_raw(mul, inv, identity, labels, names, generators)
    }

    /// Returns a copy of this group with different element names.
    pub fn with_names(&self, names: Vec<(String, usize)>) -> Self {
        let d = &self.data;
        let generators = if d.generators.is_empty() { Vec::new() } else { d.generators.clone() };
        Self::from_raw(d.mul.clone(), d.inv.clone(), d.identity, d.labels.clone(), names, generators)
    }

    /// Returns a copy with different generators (used after renaming).
    pub fn with_generators(&self, generators: Vec<usize>) -> Self {
        let d = &self.data;
        Self::from_raw(d.mul.clone(), d.inv.clone(), d.identity, d.labels.clone(), d.names.clone(), generators)
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn identity(&self) -> usize {
        self.data.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data.mul[a * self.data.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.data.inv[a] as usize
    }

    pub fn label(&self, g: usize) -> &str {
        &self.data.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn names(&self) -> &[(String, usize)] {
        &self.data.names
    }

    pub fn name_of(&self, name: &str) -> Option<usize> {
        self.data.names.iter().find(|(n, _)| n == name).map(|&(_, g)| g)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Row-major table as nested vectors.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|g| (0..n).map(|h| self.mul(g, h)).collect()).collect()
    }

    /// `x^-1 * g * x`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.inv(x), self.mul(g, x))
    }

    /// Commutator `[g, h] = g^-1 h^-1 g h`.
    #[inline]
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn pow(&self, g: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(g) } else { g };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn eval_word(&self, word: &Word) -> Result<usize> {
        let mut acc = self.identity();
        for (name, exp) in &word.0 {
            let g = self.name_of(name).ok_or_else(|| GroupError::UnknownName(name.clone()))?;
            acc = self.mul(acc, self.pow(g, *exp));
        }
        Ok(acc)
    }

    /// Generators recorded at construction, or a greedily computed generating set.
    pub fn generators(&self) -> &[usize] {
        if !self.data.generators.is_empty() || self.order() == 1 {
            return &self.data.generators;
        }
        self.data.cache.generating_set.get_or_init(|| {
            let mut gens = Vec::new();
            let mut members = self.singleton_set(self.identity());
            for g in self.elements() {
                if !members.contains(g) {
                    gens.push(g);
                    members = self.closure_bits(&gens);
                }
            }
            gens
        })
    }

    pub fn element_orders(&self) -> &[usize] {
        self.data.cache.element_orders.get_or_init(|| {
            self.elements()
                .map(|g| {
                    let mut k = 1;
                    let mut x = g;
                    while x != self.identity() {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders()[g]
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn singleton_set(&self, g: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.order());
        s.insert(g);
        s
    }

    /// Members of the subgroup generated by `gens`.
    pub(crate) fn closure_bits(&self, gens: &[usize]) -> FixedBitSet {
        let mut members = self.singleton_set(self.identity());
        let mut list = vec![self.identity()];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !members.contains(y) {
                    members.insert(y);
                    list.push(y);
                }
            }
            i += 1;
        }
        members
    }

    /// Enlarges a subgroup (given by members and generators) by one element,
    /// adding whole right cosets at a time.
    pub(crate) fn extend_subgroup(&self, members: &FixedBitSet, gens: &[usize], g: usize) -> FixedBitSet {
        if members.contains(g) {
            return members.clone();
        }
        let base: Vec<usize> = members.ones().collect();
        let mut all_gens = gens.to_vec();
        all_gens.push(g);
        let mut result = members.clone();
        let mut reps = vec![self.identity()];
        let mut i = 0;
        while i < reps.len() {
            let b = reps[i];
            for &t in &all_gens {
                let c = self.mul(b, t);
                if !result.contains(c) {
                    for &a in &base {
                        result.insert(self.mul(a, c));
                    }
                    reps.push(c);
                }
            }
            i += 1;
        }
        result
    }

    pub fn subgroup_from_bits(&self, members: FixedBitSet) -> SubgroupRef {
        SubgroupRef::from_bits(self.clone(), members)
    }

    pub fn whole(&self) -> SubgroupRef {
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.insert_range(..);
        self.subgroup_from_bits(bits)
    }

    pub fn trivial_subgroup(&self) -> SubgroupRef {
        self.subgroup_from_bits(self.singleton_set(self.identity()))
    }

    /// Smallest subgroup containing `subset`.
    pub fn subgroup_generated(&self, subset: &[usize]) -> SubgroupRef {
        self.subgroup_from_bits(self.closure_bits(subset))
    }

    /// Smallest normal subgroup containing `subset`.
    pub fn normal_closure(&self, subset: &[usize]) -> SubgroupRef {
        let classes = self.conjugacy_classes();
        let mut gens: Vec<usize> = Vec::new();
        let mut members = self.singleton_set(self.identity());
        let mut done = vec![false; classes.len()];
        for &s in subset {
            let k = classes.class_of(s);
            if done[k] {
                continue;
            }
            done[k] = true;
            for &c in classes.class(k) {
                if !members.contains(c) {
                    members = self.extend_subgroup(&members, &gens, c);
                    gens.push(c);
                }
            }
        }
        self.subgroup_from_bits(members)
    }

    /// `<<[h, g] : h in subset, g in G>>`
    pub fn commutator_closure(&self, subset: &[usize]) -> SubgroupRef {
        let comms: Vec<usize> = subset
            .iter()
            .flat_map(|&h| self.elements().map(move |g| (h, g)))
            .map(|(h, g)| self.commutator(h, g))
            .collect();
        self.normal_closure(&comms)
    }

    /// Derived subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> SubgroupRef {
        let gens: Vec<usize> = self.generators().to_vec();
        let comms: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure(&comms)
    }

    pub fn center(&self) -> SubgroupRef {
        let elems = self.data.cache.center.get_or_init(|| {
            let gens = self.generators().to_vec();
            self.elements()
                .filter(|&g| gens.iter().all(|&t| self.mul(g, t) == self.mul(t, g)))
                .collect()
        });
        SubgroupRef::from_sorted(self.clone(), elems.clone())
    }

    /// Preimage of the center of `G/Z(G)`.
    pub fn second_center(&self) -> SubgroupRef {
        let elems = self.data.cache.second_center.get_or_init(|| {
            let z = self.center();
            let gens = self.generators().to_vec();
            self.elements()
                .filter(|&g| gens.iter().all(|&t| z.contains(self.commutator(g, t))))
                .collect()
        });
        SubgroupRef::from_sorted(self.clone(), elems.clone())
    }

    /// Upper central series terminates at the whole group.
    pub fn is_nilpotent(&self) -> bool {
        let mut current = self.trivial_subgroup();
        loop {
            if current.order() == self.order() {
                return true;
            }
            let gens = self.generators().to_vec();
            let next: Vec<usize> = self
                .elements()
                .filter(|&g| gens.iter().all(|&t| current.contains(self.commutator(g, t))))
                .collect();
            if next.len() == current.order() {
                return false;
            }
            current = SubgroupRef::from_sorted(self.clone(), next);
        }
    }

    pub fn conjugacy_classes(&self) -> Arc<ConjugacyClasses> {
        self.data.cache.classes.get_or_init(|| Arc::new(ConjugacyClasses::compute(self))).clone()
    }

    /// Normal closure of each conjugacy class, indexed like the classes.
    pub(crate) fn class_closures(&self) -> &[FixedBitSet] {
        self.data.cache.class_closures.get_or_init(|| {
            let classes = self.conjugacy_classes();
            (0..classes.len()).map(|k| self.normal_closure(&[classes.rep(k)]).into_bits()).collect()
        })
    }

    /// Every subgroup exactly once, sorted by (order, element set).
    pub fn all_subgroups(&self, order_cap: usize) -> Result<Vec<SubgroupRef>> {
        if self.order() > order_cap {
            return Err(GroupError::OrderCapExceeded { cap: order_cap });
        }
        let orders = self.element_orders();
        // every subgroup is generated by its elements of prime-power order
        let mut cyclic_gens: Vec<usize> = Vec::new();
        let mut seen_cyclic: HashMap<FixedBitSet, ()> = HashMap::new();
        for g in self.elements() {
            if g == self.identity() || !is_prime_power(orders[g]) {
                continue;
            }
            let bits = self.closure_bits(&[g]);
            if seen_cyclic.insert(bits, ()).is_none() {
                cyclic_gens.push(g);
            }
        }
        let trivial = self.singleton_set(self.identity());
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut found: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
        index.insert(trivial.clone(), 0);
        found.push((trivial, Vec::new()));
        let mut i = 0;
        while i < found.len() {
            for &g in &cyclic_gens {
                let (members, gens) = &found[i];
                if members.contains(g) {
                    continue;
                }
                let next = self.extend_subgroup(members, gens, g);
                if !index.contains_key(&next) {
                    let mut next_gens = gens.clone();
                    next_gens.push(g);
                    index.insert(next.clone(), found.len());
                    found.push((next, next_gens));
                }
            }
            i += 1;
        }
        let mut subs: Vec<SubgroupRef> = found.into_iter().map(|(b, _)| self.subgroup_from_bits(b)).collect();
        subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
        Ok(subs)
    }

    /// Inclusion-minimal nontrivial normal subgroups.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<SubgroupRef>> {
        if self.order() == 1 {
            return Err(GroupError::TrivialGroup);
        }
        let elems = self.data.cache.minimal_normals.get_or_init(|| {
            let closures = self.class_closures();
            let mut distinct: Vec<&FixedBitSet> = Vec::new();
            for c in closures.iter().skip(1) {
                if !distinct.contains(&c) {
                    distinct.push(c);
                }
            }
            let mut minimal: Vec<Vec<usize>> = distinct
                .iter()
                .filter(|&&a| !distinct.iter().any(|&b| b != a && b.is_subset(a)))
                .map(|b| b.ones().collect())
                .collect();
            minimal.sort();
            minimal
        });
        Ok(elems.iter().map(|e| SubgroupRef::from_sorted(self.clone(), e.clone())).collect())
    }

    fn join_all(&self, subs: &[SubgroupRef]) -> SubgroupRef {
        let mut members = self.singleton_set(self.identity());
        let mut gens = Vec::new();
        for s in subs {
            for &g in s.elements() {
                if !members.contains(g) {
                    members = self.extend_subgroup(&members, &gens, g);
                    gens.push(g);
                }
            }
        }
        self.subgroup_from_bits(members)
    }

    pub fn socle(&self) -> Result<SubgroupRef> {
        Ok(self.join_all(&self.minimal_normal_subgroups()?))
    }

    /// Join of the abelian minimal normal subgroups.
    pub fn socle_abelian(&self) -> Result<SubgroupRef> {
        let mins: Vec<SubgroupRef> = self.minimal_normal_subgroups()?.into_iter().filter(|m| m.is_abelian()).collect();
        Ok(self.join_all(&mins))
    }

    /// Join of the non-abelian minimal normal subgroups.
    pub fn socle_nonabelian(&self) -> Result<SubgroupRef> {
        let mins: Vec<SubgroupRef> = self.minimal_normal_subgroups()?.into_iter().filter(|m| !m.is_abelian()).collect();
        Ok(self.join_all(&mins))
    }

    /// Some `g` in `n` whose conjugacy class generates `n`, if one exists.
    pub fn is_generated_by_single_class(&self, n: &SubgroupRef) -> Result<Option<usize>> {
        self.check_same(n)?;
        n.check_normal()?;
        if n.order() == 1 {
            return Ok(Some(self.identity()));
        }
        let classes = self.conjugacy_classes();
        let closures = self.class_closures();
        for k in 0..classes.len() {
            let r = classes.rep(k);
            if n.contains(r) && closures[k].count_ones(..) == n.order() {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    pub(crate) fn check_same(&self, s: &SubgroupRef) -> Result<()> {
        if s.group() == self {
            Ok(())
        } else {
            Err(GroupError::GroupMismatch)
        }
    }
}

pub fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

pub(crate) fn smallest_prime_factor(n: usize) -> usize {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n % p == 0 {
            n /= p;
        }
    }
    out
}

/// A homomorphism between two finite groups given elementwise.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    image_of: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FiniteGroup, target: FiniteGroup, image_of: Vec<usize>) -> Result<Self> {
        if image_of.len() != source.order() {
            return Err(GroupError::Malformed("image map has the wrong length".into()));
        }
        if let Some(&bad) = image_of.iter().find(|&&x| x >= target.order()) {
            return Err(GroupError::ElementOutOfRange(bad));
        }
        for g in source.elements() {
            for h in source.elements() {
                if image_of[source.mul(g, h)] != target.mul(image_of[g], image_of[h]) {
                    return Err(GroupError::NotHomomorphism { g, h });
                }
            }
        }
        Ok(GroupHom { source, target, image_of })
    }

    pub(crate) fn new_unchecked(source: FiniteGroup, target: FiniteGroup, image_of: Vec<usize>) -> Self {
        GroupHom { source, target, image_of }
    }

    pub fn apply(&self, g: usize) -> usize {
        self.image_of[g]
    }

    pub fn image_of(&self) -> &[usize] {
        &self.image_of
    }

    pub fn kernel(&self) -> SubgroupRef {
        let e = self.target.identity();
        let elems = self.source.elements().filter(|&g| self.image_of[g] == e).collect();
        SubgroupRef::from_sorted(self.source.clone(), elems)
    }

    pub fn image(&self) -> SubgroupRef {
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for &x in &self.image_of {
            bits.insert(x);
        }
        self.target.subgroup_from_bits(bits)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    /// Image of a subgroup of the source.
    pub fn map_subgroup(&self, s: &SubgroupRef) -> SubgroupRef {
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for &g in s.elements() {
            bits.insert(self.image_of[g]);
        }
        self.target.subgroup_from_bits(bits)
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage(&self, s: &SubgroupRef) -> SubgroupRef {
        let elems = self.source.elements().filter(|&g| s.contains(self.image_of[g])).collect();
        SubgroupRef::from_sorted(self.source.clone(), elems)
    }
}

#[cfg(test)]
mod tests;
