//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(ζ_e)` is stored as a polynomial in `ζ_e` of degree
//! below `φ(e)`, reduced modulo `Φ_e`, with integer numerators over one
//! positive common denominator. Both parts are kept coprime, so for a fixed
//! conductor two numbers are equal exactly when their representations are.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = Ratio<i128>;

/// Largest conductor the arithmetic accepts.
pub const MAX_CONDUCTOR: u32 = 2520;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("conductor {e} exceeds the bound {max}")]
    ConductorOverflow { e: u64, max: u32 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("malformed coefficient vector: {0}")]
    Malformed(String),
}

/// Reduction data for one conductor.
#[derive(Debug)]
struct Field {
    e: u32,
    /// `φ(e)`
    degree: usize,
    /// `reduce[j]` = coefficients of `x^j mod Φ_e`, for `j < e`.
    reduce: Vec<Vec<i128>>,
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients of `Φ_e`, lowest degree first.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i128> {
    let e = e as usize;
    // x^e - 1
    let mut p = vec![0i128; e + 1];
    p[0] = -1;
    p[e] = 1;
    for d in 1..e {
        if e % d == 0 {
            p = div_exact(&p, &cyclotomic_polynomial(d as u32));
        }
    }
    p
}

/// Exact division by a monic polynomial.
fn div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut q = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn field(e: u32) -> Result<Arc<Field>, CycError> {
    if e == 0 {
        return Err(CycError::ZeroConductor);
    }
    if e > MAX_CONDUCTOR {
        return Err(CycError::ConductorOverflow { e: e as u64, max: MAX_CONDUCTOR });
    }
    if let Some(f) = field_cache().read().expect("cache lock").get(&e) {
        return Ok(f.clone());
    }
    let phi = cyclotomic_polynomial(e);
    let degree = phi.len() - 1;
    let mut reduce = Vec::with_capacity(e as usize);
    for j in 0..e as usize {
        if j < degree {
            let mut v = vec![0i128; degree];
            v[j] = 1;
            reduce.push(v);
        } else {
            // x * (x^(j-1) mod Φ), then eliminate x^degree
            let prev: &Vec<i128> = &reduce[j - 1];
            let top = prev[degree - 1];
            let mut v = vec![0i128; degree];
            for k in (1..degree).rev() {
                v[k] = prev[k - 1];
            }
            for (k, vk) in v.iter_mut().enumerate() {
                *vk -= top * phi[k];
            }
            reduce.push(v);
        }
    }
    let f = Arc::new(Field { e, degree, reduce });
    field_cache().write().expect("cache lock").entry(e).or_insert(f.clone());
    Ok(f)
}

/// An exact element of `Q(ζ_e)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<Field>,
    num: Vec<i128>,
    den: i128,
}

impl CycNum {
    fn from_parts(field: Arc<Field>, mut num: Vec<i128>, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            den = -den;
            num.iter_mut().for_each(|x| *x = -*x);
        }
        let g = num.iter().fold(den, |acc, &x| acc.gcd(&x));
        if g > 1 {
            num.iter_mut().for_each(|x| *x /= g);
            den /= g;
        }
        CycNum { field, num, den }
    }

    /// Reduces a vector indexed by exponents modulo `e`.
    fn from_exponent_vector(field: Arc<Field>, by_exp: &[i128], den: i128) -> Self {
        let mut num = vec![0i128; field.degree];
        for (j, &c) in by_exp.iter().enumerate() {
            if c != 0 {
                for (k, &r) in field.reduce[j].iter().enumerate() {
                    num[k] += c * r;
                }
            }
        }
        Self::from_parts(field, num, den)
    }

    pub fn zero(e: u32) -> Result<Self, CycError> {
        let f = field(e)?;
        let d = f.degree;
        Ok(CycNum { field: f, num: vec![0; d], den: 1 })
    }

    pub fn from_rational_in(r: Rational, e: u32) -> Result<Self, CycError> {
        let f = field(e)?;
        let mut num = vec![0; f.degree];
        num[0] = *r.numer();
        Ok(Self::from_parts(f, num, *r.denom()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_rational_in(r, 1).expect("conductor 1")
    }

    pub fn from_int(n: i128) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// `ζ_e^k`
    pub fn root(e: u32, k: i64) -> Result<Self, CycError> {
        let f = field(e)?;
        let j = k.rem_euclid(e as i64) as usize;
        let num = f.reduce[j].clone();
        Ok(CycNum { field: f, num, den: 1 })
    }

    /// Builds `Σ c_j ζ_e^j` from exponent-indexed integer counts.
    pub fn from_root_counts(e: u32, counts: &[i128]) -> Result<Self, CycError> {
        let f = field(e)?;
        Ok(Self::from_exponent_vector(f, counts, 1))
    }

    /// From canonical coefficients (length `φ(e)`).
    pub fn from_coeffs(e: u32, coeffs: &[Rational]) -> Result<Self, CycError> {
        let f = field(e)?;
        if coeffs.len() != f.degree {
            return Err(CycError::Malformed(format!("{} coefficients for conductor {e}", coeffs.len())));
        }
        let den = coeffs.iter().fold(1i128, |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (den / c.denom())).collect();
        Ok(Self::from_parts(f, num, den))
    }

    pub fn conductor(&self) -> u32 {
        self.field.e
    }

    /// Canonical coefficients of `1, ζ, ..., ζ^(φ(e)-1)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|&n| Rational::new(n, self.den)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    /// The value, when it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num.iter().skip(1).all(|&x| x == 0) {
            Some(Rational::new(self.num[0], self.den))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn is_one(&self) -> bool {
        self.to_rational() == Some(Rational::one())
    }

    /// Whether all canonical coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// Image in `Q(ζ_f)`; `f` must be a multiple of the conductor.
    pub fn embed(&self, f: u32) -> Result<Self, CycError> {
        let e = self.field.e;
        if f == e {
            return Ok(self.clone());
        }
        if f % e != 0 {
            return Err(CycError::Malformed(format!("{f} is not a multiple of {e}")));
        }
        let target = field(f)?;
        let k = (f / e) as usize;
        let mut by_exp = vec![0i128; f as usize];
        for (i, &c) in self.num.iter().enumerate() {
            by_exp[i * k] = c;
        }
        Ok(Self::from_exponent_vector(target, &by_exp, self.den))
    }

    fn common(&self, other: &Self) -> Result<(Self, Self), CycError> {
        let e = self.field.e;
        let f = other.field.e;
        if e == f {
            return Ok((self.clone(), other.clone()));
        }
        let l = (e as u64).lcm(&(f as u64));
        if l > MAX_CONDUCTOR as u64 {
            return Err(CycError::ConductorOverflow { e: l, max: MAX_CONDUCTOR });
        }
        Ok((self.embed(l as u32)?, other.embed(l as u32)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycError> {
        if self.field.e == other.field.e {
            return Ok(self.add_same(other, 1));
        }
        let (a, b) = self.common(other)?;
        Ok(a.add_same(&b, 1))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycError> {
        if self.field.e == other.field.e {
            return Ok(self.add_same(other, -1));
        }
        let (a, b) = self.common(other)?;
        Ok(a.add_same(&b, -1))
    }

    fn add_same(&self, other: &Self, sign: i128) -> Self {
        let l = self.den.lcm(&other.den);
        let (sa, sb) = (l / self.den, sign * (l / other.den));
        let num = self.num.iter().zip(&other.num).map(|(&a, &b)| a * sa + b * sb).collect();
        Self::from_parts(self.field.clone(), num, l)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycError> {
        if self.field.e != other.field.e {
            let (a, b) = self.common(other)?;
            return a.try_mul(&b);
        }
        if let Some(r) = other.to_rational() {
            return Ok(self.scale(r));
        }
        if let Some(r) = self.to_rational() {
            return Ok(other.scale(r));
        }
        let e = self.field.e as usize;
        let mut by_exp = vec![0i128; e];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                by_exp[(i + j) % e] += a * b;
            }
        }
        Ok(Self::from_exponent_vector(self.field.clone(), &by_exp, self.den * other.den))
    }

    pub fn scale(&self, r: Rational) -> Self {
        let num = self.num.iter().map(|&x| x * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, self.den * r.denom())
    }

    /// Complex conjugation `ζ -> ζ^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism `ζ -> ζ^k`, `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.field.e as i64;
        debug_assert_eq!(k.rem_euclid(e).gcd(&e), 1);
        let mut by_exp = vec![0i128; e as usize];
        for (i, &c) in self.num.iter().enumerate() {
            by_exp[(i as i64 * k).rem_euclid(e) as usize] += c;
        }
        Self::from_exponent_vector(self.field.clone(), &by_exp, self.den)
    }

    pub fn abs_square(&self) -> Self {
        self * &self.conj()
    }

    /// Sort key: canonical coefficients at the current conductor.
    pub fn key(&self) -> Vec<Rational> {
        self.coeffs()
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.field.e == other.field.e {
            return self.den == other.den && self.num == other.num;
        }
        match self.common(other) {
            Ok((a, b)) => a == b,
            Err(_) => false,
        }
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self} in Q(z{}))", self.field.e)
    }
}

/// Prints `2 + z4 - (1/2)*z4^3` style sums over canonical coefficients.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.field.e;
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let a = if neg { -*c } else { *c };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if a.is_integer() { a.to_integer().to_string() } else { format!("({a})") };
            match i {
                0 => f.write_str(&coef)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if i == 1 {
                        write!(f, "z{e}")?;
                    } else {
                        write!(f, "z{e}^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            e: u32,
            coeffs: Vec<[String; 2]>,
        }
        let coeffs = self.coeffs().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect();
        Repr { e: self.field.e, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            e: u32,
            coeffs: Vec<[String; 2]>,
        }
        let r = Repr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|[n, m]| {
                let n: i128 = n.parse().map_err(D::Error::custom)?;
                let m: i128 = m.parse().map_err(D::Error::custom)?;
                if m == 0 {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::new(n, m))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CycNum::from_coeffs(r.e, &coeffs).map_err(D::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic conductor overflow")
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.scale(-Rational::one())
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}
