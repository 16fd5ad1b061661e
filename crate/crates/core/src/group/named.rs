use std::fmt;

use super::{closure_of, direct_product_many, Action, FiniteGroup, GroupError, Result, SubgroupRef, DEFAULT_CLOSURE_CAP};

/// Catalog constructions. Parameters follow the usual order convention:
/// `Dihedral(8)` has order 8, `Quaternion(8)` is Q8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
    Heisenberg(usize),
    /// `<x, y^2>` inside `Heisenberg(4)`, order 16.
    HeisPair,
    /// `(D8 x D8 x D8) / <z1 z2 z3>`, order 256.
    D8Cube,
    /// `D8 ⋉ C4` with both generators of D8 inverting C4, order 32.
    D8xC4,
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Cyclic(n) => write!(f, "C({n})"),
            NamedGroup::Dihedral(n) => write!(f, "D({n})"),
            NamedGroup::Quaternion(n) => write!(f, "Q({n})"),
            NamedGroup::Symmetric(n) => write!(f, "S({n})"),
            NamedGroup::Alternating(n) => write!(f, "A({n})"),
            NamedGroup::ElementaryAbelian(p, k) => write!(f, "EA({p},{k})"),
            NamedGroup::Heisenberg(m) => write!(f, "Heis({m})"),
            NamedGroup::HeisPair => f.write_str("paper:ex-heis-pair"),
            NamedGroup::D8Cube => f.write_str("paper:ex-d8cube"),
            NamedGroup::D8xC4 => f.write_str("paper:ex-d8xc4"),
        }
    }
}

fn out_of_range(msg: impl Into<String>) -> GroupError {
    GroupError::ParameterOutOfRange(msg.into())
}

fn is_prime(p: usize) -> bool {
    p >= 2 && super::smallest_prime_factor(p) == p
}

impl NamedGroup {
    pub fn build(&self) -> Result<FiniteGroup> {
        let cap = DEFAULT_CLOSURE_CAP;
        match *self {
            NamedGroup::Cyclic(n) => {
                if n == 0 || n > cap {
                    return Err(out_of_range(format!("cyclic order {n}")));
                }
                Ok(closure_of(0usize, &[1 % n], &["a"], |a, b| (a + b) % n, cap)?.0)
            }
            NamedGroup::Dihedral(order) => {
                if order == 0 || order % 2 != 0 || order > cap {
                    return Err(out_of_range(format!("dihedral order {order}")));
                }
                Ok(dihedral(order / 2))
            }
            NamedGroup::Quaternion(order) => {
                if order < 8 || order % 4 != 0 || order > cap {
                    return Err(out_of_range(format!("quaternion order {order}")));
                }
                Ok(quaternion(order / 2))
            }
            NamedGroup::Symmetric(n) => {
                if n == 0 || n > 6 {
                    return Err(out_of_range(format!("symmetric degree {n}")));
                }
                let mut gens = Vec::new();
                if n >= 2 {
                    if n >= 3 {
                        gens.push((0..n).map(|i| (i + 1) % n).collect());
                    }
                    let mut t: Vec<usize> = (0..n).collect();
                    t.swap(0, 1);
                    gens.push(t);
                }
                FiniteGroup::from_permutation_generators(n, &gens, cap)
            }
            NamedGroup::Alternating(n) => {
                if n == 0 || n > 6 {
                    return Err(out_of_range(format!("alternating degree {n}")));
                }
                let gens: Vec<Vec<usize>> = (2..n)
                    .map(|k| {
                        let mut p: Vec<usize> = (0..n).collect();
                        p[0] = 1;
                        p[1] = k;
                        p[k] = 0;
                        p
                    })
                    .collect();
                FiniteGroup::from_permutation_generators(n, &gens, cap)
            }
            NamedGroup::ElementaryAbelian(p, k) => {
                if !is_prime(p) || (p as f64).powi(k as i32) > cap as f64 {
                    return Err(out_of_range(format!("elementary abelian ({p},{k})")));
                }
                let gens: Vec<Vec<usize>> = (0..k)
                    .map(|i| {
                        let mut v = vec![0; k];
                        v[i] = 1;
                        v
                    })
                    .collect();
                let names: Vec<String> = (1..=k).map(|i| format!("e{i}")).collect();
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                let add = |a: &Vec<usize>, b: &Vec<usize>| a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                Ok(closure_of(vec![0; k], &gens, &names, add, cap)?.0)
            }
            NamedGroup::Heisenberg(m) => {
                if m == 0 || m.saturating_mul(m).saturating_mul(m) > cap {
                    return Err(out_of_range(format!("heisenberg modulus {m}")));
                }
                let gens = [(1 % m, 0, 0), (0, 1 % m, 0), (0, 0, 1 % m)];
                Ok(closure_of((0, 0, 0), &gens, &["x", "y", "z"], heis_mul(m), cap)?.0)
            }
            NamedGroup::HeisPair => {
                let gens = [(1, 0, 0), (0, 2, 0)];
                let (g, elems) = closure_of((0, 0, 0), &gens, &["x", "y2"], heis_mul(4), cap)?;
                let z2 = elems.iter().position(|&e| e == (0, 0, 2)).expect("z^2 lies in <x, y^2>");
                let mut names = g.names().to_vec();
                names.push(("z2".into(), z2));
                Ok(g.with_names(names))
            }
            NamedGroup::D8Cube => {
                let d8 = dihedral(4);
                let (cube, _) = direct_product_many(&[d8.clone(), d8.clone(), d8])?;
                let z = ["z1", "z2", "z3"].iter().map(|s| cube.name_of(s).expect("named centre")).fold(
                    cube.identity(),
                    |acc, x| cube.mul(acc, x),
                );
                let n = cube.subgroup_generated(&[z]);
                Ok(cube.quotient(&n)?.0)
            }
            NamedGroup::D8xC4 => {
                let c4 = NamedGroup::Cyclic(4).build()?;
                let d8 = dihedral(4);
                let g = FiniteGroup::semidirect_product(&c4, &d8, &Action::DiagonalInversion)?;
                let h = d8.order();
                let r = d8.name_of("r").expect("named");
                let s = d8.name_of("s").expect("named");
                let c = c4.name_of("a").expect("named");
                let a = c4.identity() * h + r;
                let b = c4.identity() * h + s;
                let c = c * h + d8.identity();
                Ok(g.with_names(vec![("a".into(), a), ("b".into(), b), ("c".into(), c)]).with_generators(vec![a, b, c]))
            }
        }
    }

    /// The subgroup `H` the built-in examples are about, as generator words.
    pub fn designated_subgroup(&self) -> Option<&'static [&'static str]> {
        match self {
            NamedGroup::HeisPair => Some(&["x"]),
            NamedGroup::D8Cube => Some(&["s1", "s2", "s3"]),
            NamedGroup::D8xC4 => Some(&["a^2", "c"]),
            _ => None,
        }
    }
}

impl NamedGroup {
    /// The designated subgroup of a built-in example, inside `g = self.build()`.
    pub fn designated_in(&self, g: &FiniteGroup) -> Option<Result<SubgroupRef>> {
        let words = self.designated_subgroup()?;
        Some(
            words
                .iter()
                .map(|w| g.eval_word(&w.parse()?))
                .collect::<Result<Vec<_>>>()
                .map(|gens| g.subgroup_generated(&gens)),
        )
    }
}

fn heis_mul(m: usize) -> impl Fn(&(usize, usize, usize), &(usize, usize, usize)) -> (usize, usize, usize) {
    move |&(a, b, c), &(x, y, z)| ((a + x) % m, (b + y) % m, (c + z + a * y) % m)
}

/// Dihedral group of order `2n`, generators `r` (rotation) and `s`, and
/// `z = r^(n/2)` when `n` is even.
fn dihedral(n: usize) -> FiniteGroup {
    let mul = move |&(i, f): &(usize, bool), &(j, g): &(usize, bool)| {
        let j = if f { (n - j) % n } else { j };
        ((i + j) % n, f ^ g)
    };
    let (g, elems) = closure_of((0, false), &[(1 % n, false), (0, true)], &["r", "s"], mul, DEFAULT_CLOSURE_CAP)
        .expect("dihedral order is within the cap");
    if n % 2 == 0 {
        let z = elems.iter().position(|&e| e == (n / 2, false)).expect("central rotation");
        let mut names = g.names().to_vec();
        names.push(("z".into(), z));
        g.with_names(names)
    } else {
        g
    }
}

/// Generalized quaternion group with `a` of order `m`, `b^2 = a^(m/2) = z`.
fn quaternion(m: usize) -> FiniteGroup {
    let half = m / 2;
    let mul = move |&(i, f): &(usize, bool), &(j, g): &(usize, bool)| match (f, g) {
        (false, _) => ((i + j) % m, g),
        (true, false) => ((i + m - j) % m, true),
        (true, true) => ((i + m - j + half) % m, false),
    };
    let (g, elems) = closure_of((0, false), &[(1, false), (0, true)], &["a", "b"], mul, DEFAULT_CLOSURE_CAP)
        .expect("quaternion order is within the cap");
    let z = elems.iter().position(|&e| e == (half, false)).expect("central involution");
    let mut names = g.names().to_vec();
    names.push(("z".into(), z));
    g.with_names(names)
}
