//! Irreducible character tables by the Dixon–Schneider method.
//!
//! Class sums act on the centre of the group algebra; their common
//! eigenvectors over a suitable prime field are the central characters
//! `ω_χ`. From those, each `χ` is recovered mod `p`, and exact cyclotomic
//! values come from counting eigenvalue multiplicities of `ρ(g)` with a
//! discrete Fourier sum over the powers of `g`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{CycError, CycNum, Rational};
use crate::group::{ConjugacyClasses, FiniteGroup, GroupError, GroupHom, SubgroupRef};

/// Default cap on the group order for [`CharacterTable::compute`].
pub const DEFAULT_TABLE_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("group order exceeds the character table cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("eigenspace splitting did not separate all characters")]
    InternalSplitFailure,
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("class function is not a character: multiplicity of row {row} is {value}")]
    NotACharacter { row: usize, value: String },
    #[error("expected {expected} class values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("embedding is not injective")]
    NotInjective,
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T> = std::result::Result<T, CharError>;

/// A class function with cyclotomic values, indexed by conjugacy class.
#[derive(Clone)]
pub struct Character {
    group: FiniteGroup,
    classes: Arc<ConjugacyClasses>,
    values: Vec<CycNum>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.values == other.values
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Character {
    pub fn new(group: &FiniteGroup, values: Vec<CycNum>) -> Result<Self> {
        let classes = group.conjugacy_classes();
        if values.len() != classes.len() {
            return Err(CharError::WrongLength { expected: classes.len(), got: values.len() });
        }
        Ok(Character { group: group.clone(), classes, values })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        let r = group.conjugacy_classes().len();
        Self::new(group, vec![CycNum::from_int(1); r]).expect("length matches")
    }

    /// `|G|` on the identity, zero elsewhere.
    pub fn regular(group: &FiniteGroup) -> Self {
        let classes = group.conjugacy_classes();
        let values = (0..classes.len())
            .map(|k| CycNum::from_int(if k == 0 { group.order() as i128 } else { 0 }))
            .collect();
        Self::new(group, values).expect("length matches")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }

    /// Value at an element.
    pub fn at(&self, g: usize) -> &CycNum {
        &self.values[self.classes.class_of(g)]
    }

    /// Value at the identity, which for a character is its degree.
    pub fn degree(&self) -> usize {
        let d = self.values[0].to_integer().expect("degree of a character is an integer");
        usize::try_from(d).expect("degree of a character is non-negative")
    }

    /// `(1/|G|) Σ_g χ(g) conj(ψ(g))`
    pub fn inner_product(&self, other: &Character) -> Result<CycNum> {
        if self.group != other.group {
            return Err(CharError::GroupMismatch);
        }
        let mut acc = CycNum::zero(1)?;
        for k in 0..self.values.len() {
            let term = self.values[k].try_mul(&other.values[k].conj())?;
            acc = acc.try_add(&term.scale(Rational::from_integer(self.classes.size(k) as i128)))?;
        }
        Ok(acc.scale(Rational::new(1, self.group.order() as i128)))
    }

    pub fn try_add(&self, other: &Character) -> Result<Character> {
        self.zip(other, |a, b| a.try_add(b))
    }

    pub fn try_sub(&self, other: &Character) -> Result<Character> {
        self.zip(other, |a, b| a.try_sub(b))
    }

    /// Pointwise product (tensor product of representations).
    pub fn try_mul(&self, other: &Character) -> Result<Character> {
        self.zip(other, |a, b| a.try_mul(b))
    }

    fn zip(
        &self,
        other: &Character,
        f: impl Fn(&CycNum, &CycNum) -> std::result::Result<CycNum, CycError>,
    ) -> Result<Character> {
        if self.group != other.group {
            return Err(CharError::GroupMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect::<std::result::Result<_, _>>()?;
        Ok(Character { values, ..self.clone() })
    }

    pub fn scale(&self, r: Rational) -> Character {
        Character { values: self.values.iter().map(|v| v.scale(r)).collect(), ..self.clone() }
    }

    pub fn conj(&self) -> Character {
        Character { values: self.values.iter().map(CycNum::conj).collect(), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }

    /// `{g : χ(g) = χ(1)}`
    pub fn kernel(&self) -> SubgroupRef {
        let d = &self.values[0];
        let keep: Vec<bool> = self.values.iter().map(|v| v == d).collect();
        self.union_of_classes(&keep)
    }

    /// `{g : |χ(g)|^2 = χ(1)^2}`, the elements acting as scalars when `χ` is
    /// irreducible.
    pub fn scalar_center(&self) -> SubgroupRef {
        let d2 = self.values[0].abs_square();
        let keep: Vec<bool> = self.values.iter().map(|v| v.abs_square() == d2).collect();
        self.union_of_classes(&keep)
    }

    fn union_of_classes(&self, keep: &[bool]) -> SubgroupRef {
        let mut elems: Vec<usize> = (0..keep.len()).filter(|&k| keep[k]).flat_map(|k| self.classes.class(k).iter().copied()).collect();
        elems.sort_unstable();
        SubgroupRef::from_sorted(self.group.clone(), elems)
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_trivial()
    }

    /// Class function `χ∘ι` on the source of an injective homomorphism.
    pub fn restrict(&self, iota: &GroupHom) -> Result<Character> {
        if iota.target != self.group {
            return Err(CharError::GroupMismatch);
        }
        let src = &iota.source;
        let cs = src.conjugacy_classes();
        let values = (0..cs.len()).map(|k| self.at(iota.apply(cs.rep(k))).clone()).collect();
        Character::new(src, values)
    }

    /// Induction along an injective homomorphism `ι: H -> G`:
    /// `Ind(g) = |C_G(g)|/|H| · Σ_{h : ι(h) ~ g} ρ(h)`.
    pub fn induce(&self, iota: &GroupHom) -> Result<Character> {
        if iota.source != self.group {
            return Err(CharError::GroupMismatch);
        }
        if !iota.is_injective() {
            return Err(CharError::NotInjective);
        }
        let g = &iota.target;
        let gc = g.conjugacy_classes();
        let mut sums = vec![CycNum::zero(1)?; gc.len()];
        for h in self.group.elements() {
            let k = gc.class_of(iota.apply(h));
            sums[k] = sums[k].try_add(self.at(h))?;
        }
        let hn = self.group.order() as i128;
        let values = sums
            .iter()
            .enumerate()
            .map(|(k, s)| s.scale(Rational::new((g.order() / gc.size(k)) as i128, hn)))
            .collect();
        Character::new(g, values)
    }
}

/// Multiplicities of table rows in a character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// `(row index, multiplicity)`, multiplicities positive.
    pub components: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.iter().map(|&(i, _)| i)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.components.iter().map(|&(_, m)| m).sum()
    }
}

/// The irreducible characters of a group, rows sorted by degree with the
/// trivial character first.
#[derive(Clone)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: Arc<ConjugacyClasses>,
    rows: Vec<Character>,
}

impl fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterTable").field("order", &self.group.order()).field("rows", &self.rows).finish()
    }
}

impl CharacterTable {
    pub fn compute(group: &FiniteGroup) -> Result<Self> {
        Self::compute_with_cap(group, DEFAULT_TABLE_CAP)
    }

    pub fn compute_with_cap(group: &FiniteGroup, cap: usize) -> Result<Self> {
        if group.order() > cap {
            return Err(CharError::OrderCapExceeded { cap });
        }
        let classes = group.conjugacy_classes();
        let raw = dixon_schneider(group, &classes)?;
        let mut rows: Vec<Character> = raw
            .into_iter()
            .map(|values| Character { group: group.clone(), classes: classes.clone(), values })
            .collect();
        rows.sort_by(row_order);
        Ok(CharacterTable { group: group.clone(), classes, rows })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Character {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Multiplicities `⟨f, χ_i⟩`; fails unless all are non-negative integers.
    pub fn decompose(&self, f: &Character) -> Result<Decomposition> {
        let mut components = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let m = f.inner_product(row)?;
            match m.to_integer() {
                Some(k) if k >= 0 => {
                    if k > 0 {
                        components.push((i, k as usize));
                    }
                }
                _ => return Err(CharError::NotACharacter { row: i, value: m.to_string() }),
            }
        }
        Ok(Decomposition { components })
    }

    /// `Σ m_i χ_i`
    pub fn reassemble(&self, d: &Decomposition) -> Result<Character> {
        let zero = Character::new(&self.group, vec![CycNum::zero(1)?; self.classes.len()])?;
        d.components.iter().try_fold(zero, |acc, &(i, m)| acc.try_add(&self.rows[i].scale(Rational::from_integer(m as i128))))
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            group: self.group.to_json(),
            classes: self.classes.classes().to_vec(),
            rows: self.rows.iter().map(|r| RowJson { degree: r.degree(), values: r.values.clone() }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub group: crate::group::GroupJson,
    pub classes: Vec<Vec<usize>>,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowJson {
    pub degree: usize,
    pub values: Vec<CycNum>,
}

/// Degree first, then the trivial character, then descending lexicographic
/// order of canonical coefficient vectors.
fn row_order(a: &Character, b: &Character) -> Ordering {
    let triv = |c: &Character| c.values.iter().all(CycNum::is_one);
    a.degree()
        .cmp(&b.degree())
        .then_with(|| triv(b).cmp(&triv(a)))
        .then_with(|| {
            let ka: Vec<Vec<Rational>> = a.values.iter().map(CycNum::key).collect();
            let kb: Vec<Vec<Rational>> = b.values.iter().map(CycNum::key).collect();
            kb.cmp(&ka)
        })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Least prime `p ≡ 1 (mod e)` with `p > 2√n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if p * p > 4 * n && is_prime(p) {
            return p;
        }
        p += e;
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut m = p - 1;
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&a| factors.iter().all(|&q| pow_mod(a, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Row-reduced basis of the span of `vecs`.
fn rref(mut vecs: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = vecs.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..vecs.len()).find(|&r| vecs[r][col] != 0) else {
            continue;
        };
        vecs.swap(rank, piv);
        let s = inv_mod(vecs[rank][col], p);
        vecs[rank].iter_mut().for_each(|x| *x = *x * s % p);
        for r in 0..vecs.len() {
            if r != rank && vecs[r][col] != 0 {
                let f = vecs[r][col];
                for c in 0..n {
                    vecs[r][c] = (vecs[r][c] + p - f * vecs[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    vecs.truncate(rank);
    vecs
}

/// Basis of the null space of a square matrix.
fn null_space(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let s = inv_mod(a[rank][col], p);
        a[rank].iter_mut().for_each(|x| *x = *x * s % p);
        for r in 0..n {
            if r != rank && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..n {
                    a[r][c] = (a[r][c] + p - f * a[rank][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

fn dixon_schneider(group: &FiniteGroup, classes: &ConjugacyClasses) -> Result<Vec<Vec<CycNum>>> {
    let n = group.order();
    let r = classes.len();
    let e = group.exponent();
    let p = dixon_prime(e as u64, n as u64);

    // a[(i*r + j)*r + k] = #{(x, y) in C_i x C_j : xy = rep_k}
    let mut a = vec![0u32; r * r * r];
    for k in 0..r {
        let z = classes.rep(k);
        for x in group.elements() {
            let y = group.mul(group.inv(x), z);
            let (i, j) = (classes.class_of(x), classes.class_of(y));
            a[(i * r + j) * r + k] += 1;
        }
    }
    let apply = |i: usize, v: &[u64]| -> Vec<u64> {
        (0..r)
            .map(|j| {
                let row = &a[(i * r + j) * r..(i * r + j + 1) * r];
                row.iter().zip(v).fold(0u64, |acc, (&c, &x)| (acc + c as u64 * x) % p)
            })
            .collect()
    };

    let identity_basis: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces = vec![identity_basis];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).expect("nonzero")).collect();
            let images: Vec<Vec<u64>> = basis.iter().map(|b| apply(i, b)).collect();
            // restricted[s][t] = coordinate s of M_i b_t
            let restricted: Vec<Vec<u64>> = (0..d).map(|s| (0..d).map(|t| images[t][pivots[s]]).collect()).collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|s| (0..d).map(|t| if s == t { (restricted[s][t] + p - lambda) % p } else { restricted[s][t] }).collect())
                    .collect();
                let null = null_space(shifted, p);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                let vecs = null
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (s, &cs) in c.iter().enumerate() {
                            for (x, &b) in v.iter_mut().zip(&basis[s]) {
                                *x = (*x + cs * b) % p;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(rref(vecs, p));
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(CharError::InternalSplitFailure);
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(CharError::InternalSplitFailure);
    }

    let inv_class: Vec<usize> = (0..r).map(|k| classes.class_of(group.inv(classes.rep(k)))).collect();
    let sizes: Vec<u64> = (0..r).map(|k| classes.size(k) as u64).collect();
    let omega = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let max_degree = (n as f64).sqrt().floor() as u64 + 1;
    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        let s0 = inv_mod(v[0], p);
        // θ_k = χ(g_k)/χ(1)
        let theta: Vec<u64> = (0..r).map(|k| v[k] * s0 % p * inv_mod(sizes[k] % p, p) % p).collect();
        let sum = (0..r).fold(0u64, |acc, k| (acc + sizes[k] % p * theta[k] % p * theta[inv_class[k]]) % p);
        let target = n as u64 % p * inv_mod(sum, p) % p;
        let degree = (1..=max_degree)
            .find(|d| d * d <= n as u64 && d * d % p == target)
            .ok_or(CharError::InternalSplitFailure)?;
        let chi_p: Vec<u64> = theta.iter().map(|t| t * degree % p).collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let g = classes.rep(k);
            let m = group.element_order(g);
            let step = e / m;
            let wm = pow_mod(omega, step as u64, p);
            let mut powers = Vec::with_capacity(m);
            let mut x = group.identity();
            for _ in 0..m {
                powers.push(chi_p[classes.class_of(x)]);
                x = group.mul(x, g);
            }
            let inv_m = inv_mod(m as u64, p);
            let mut counts = vec![0i128; e];
            for l in 0..m {
                let wl_inv = inv_mod(pow_mod(wm, l as u64, p), p);
                let mut acc = 0u64;
                let mut w = 1u64;
                for &cp in &powers {
                    acc = (acc + cp * w) % p;
                    w = w * wl_inv % p;
                }
                let mu = acc * inv_m % p;
                if mu > degree {
                    return Err(CharError::InternalSplitFailure);
                }
                counts[l * step] += mu as i128;
            }
            values.push(CycNum::from_root_counts(e as u32, &counts)?);
        }
        rows.push(values);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::NamedGroup;

    fn table(spec: NamedGroup) -> CharacterTable {
        CharacterTable::compute(&spec.build().unwrap()).unwrap()
    }

    fn z(e: u32, k: i64) -> CycNum {
        CycNum::root(e, k).unwrap()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(4, 8), 13);
        assert_eq!(dixon_prime(1, 1), 3);
        assert_eq!(dixon_prime(4, 256), 37);
    }

    #[test]
    fn trivial_group() {
        let t = table(NamedGroup::Cyclic(1));
        assert_eq!(t.len(), 1);
        assert!(t.row(0).value(0).is_one());
    }

    #[test]
    fn cyclic_three() {
        let t = table(NamedGroup::Cyclic(3));
        let g = t.group();
        let a = g.name_of("a").unwrap();
        let mut rows: Vec<Vec<CycNum>> = t.rows().iter().map(|r| vec![r.at(0).clone(), r.at(a).clone(), r.at(g.mul(a, a)).clone()]).collect();
        let one = CycNum::from_int(1);
        assert_eq!(rows.remove(0), vec![one.clone(), one.clone(), one.clone()]);
        assert!(rows.contains(&vec![one.clone(), z(3, 1), z(3, 2)]));
        assert!(rows.contains(&vec![one, z(3, 2), z(3, 1)]));
    }

    #[test]
    fn dihedral_degrees() {
        let t = table(NamedGroup::Dihedral(8));
        let degrees: Vec<usize> = t.rows().iter().map(Character::degree).collect();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees.iter().map(|d| d * d).sum::<usize>(), 8);
    }

    #[test]
    fn inner_products() {
        let g = NamedGroup::Cyclic(2).build().unwrap();
        let triv = Character::trivial(&g);
        assert!(triv.inner_product(&triv).unwrap().is_one());
        let reg = Character::regular(&g);
        assert_eq!(reg.values(), &[CycNum::from_int(2), CycNum::from_int(0)]);
        assert!(reg.inner_product(&triv).unwrap().is_one());
        assert_eq!(reg.inner_product(&reg).unwrap(), CycNum::from_int(2));
        let other = NamedGroup::Cyclic(2).build().unwrap();
        assert_eq!(triv.inner_product(&Character::trivial(&other)), Err(CharError::GroupMismatch));
    }

    #[test]
    fn decompose_rows_and_regular() {
        let t = table(NamedGroup::Quaternion(8));
        for (i, row) in t.rows().iter().enumerate() {
            assert_eq!(t.decompose(row).unwrap().components, vec![(i, 1)]);
        }
        let reg = t.decompose(&Character::regular(t.group())).unwrap();
        let expected: Vec<(usize, usize)> = t.rows().iter().enumerate().map(|(i, r)| (i, r.degree())).collect();
        assert_eq!(reg.components, expected);
        let half = t.row(1).scale(Rational::new(1, 2));
        assert!(matches!(t.decompose(&half), Err(CharError::NotACharacter { .. })));
    }

    #[test]
    fn cap() {
        let g = NamedGroup::Cyclic(20).build().unwrap();
        assert_eq!(CharacterTable::compute_with_cap(&g, 10).unwrap_err(), CharError::OrderCapExceeded { cap: 10 });
    }
}
