use std::collections::HashMap;
use std::hash::Hash;

use super::{FiniteGroup, GroupError, GroupHom, Result, SubgroupRef, Word};

/// Closes `gens` under `mul`, returning the group and the concrete element
/// behind each index. Elements appear in BFS discovery order from the
/// identity, generators applied in the given order. Labels are words in
/// `names`, which also become the group's element names.
pub fn closure_of<T, F>(identity: T, gens: &[T], names: &[&str], mul: F, cap: usize) -> Result<(FiniteGroup, Vec<T>)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    assert_eq!(gens.len(), names.len(), "one name per generator");
    let k = gens.len();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    // parent[x] = (y, i) with x = y * gens[i]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        for (j, s) in gens.iter().enumerate() {
            let y = mul(&elems[i], s);
            let idx = match index.get(&y) {
                Some(&idx) => idx,
                None => {
                    if elems.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    let idx = elems.len();
                    index.insert(y.clone(), idx);
                    elems.push(y);
                    parent.push(Some((i, j)));
                    idx
                }
            };
            right.push(idx);
        }
        i += 1;
    }
    let n = elems.len();
    let mut mul_tab = vec![0u32; n * n];
    for a in 0..n {
        mul_tab[a * n] = a as u32;
        for b in 1..n {
            let (pb, j) = parent[b].expect("non-identity has a parent");
            let ap = mul_tab[a * n + pb] as usize;
            mul_tab[a * n + b] = right[ap * k + j] as u32;
        }
    }
    let words: Vec<Word> = (0..n).map(|x| word_of(x, &parent, names)).collect();
    let labels = words.iter().map(|w| w.to_string()).collect();
    let mut gen_idx = Vec::new();
    let mut named = Vec::new();
    for (j, s) in gens.iter().enumerate() {
        let g = index[s];
        named.push((names[j].to_string(), g));
        if g != 0 && !gen_idx.contains(&g) {
            gen_idx.push(g);
        }
    }
    let group = FiniteGroup::from_table_trusted(mul_tab, labels, named, gen_idx);
    Ok((group, elems))
}

fn word_of(mut x: usize, parent: &[Option<(usize, usize)>], names: &[&str]) -> Word {
    let mut letters = Vec::new();
    while let Some((p, j)) = parent[x] {
        letters.push(j);
        x = p;
    }
    letters.reverse();
    let mut word: Vec<(String, i64)> = Vec::new();
    for j in letters {
        match word.last_mut() {
            Some((name, e)) if name == names[j] => *e += 1,
            _ => word.push((names[j].to_string(), 1)),
        }
    }
    Word(word)
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

impl FiniteGroup {
    /// Permutations given as image vectors; the product `g*h` applies `g` first.
    /// Generator `i` is named `g{i+1}`; labels are in cycle notation.
    pub fn from_permutation_generators(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        for (i, p) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = p.len() == degree
                && p.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(GroupError::NotAPermutation { generator: i, degree });
            }
        }
        let names: Vec<String> = (1..=generators.len()).map(|i| format!("g{i}")).collect();
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let id: Vec<usize> = (0..degree).collect();
        let (g, perms) = closure_of(id, generators, &name_refs, |a, b| a.iter().map(|&x| b[x]).collect(), cap)?;
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Ok(g.relabel(labels))
    }

    pub(crate) fn relabel(&self, labels: Vec<String>) -> Self {
        let n = self.order();
        let mut mul = Vec::with_capacity(n * n);
        for a in self.elements() {
            for b in self.elements() {
                mul.push(self.mul(a, b) as u32);
            }
        }
        let inv = self.elements().map(|a| self.inv(a) as u32).collect();
        FiniteGroup::from_raw(mul, inv, self.identity(), labels, self.names().to_vec(), self.generators().to_vec())
    }

    /// Direct product with both embeddings. Element `(a, b)` has index `a*|other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<(FiniteGroup, GroupHom, GroupHom)> {
        let (p, mut embeds) = direct_product_many(&[self.clone(), other.clone()])?;
        let e2 = embeds.pop().expect("two embeddings");
        let e1 = embeds.pop().expect("two embeddings");
        Ok((p, e1, e2))
    }

    /// `N ⋊ H` with `(n1,h1)(n2,h2) = (n1·φ_{h1}(n2), h1h2)`. Element `(n, h)`
    /// has index `n*|H| + h`.
    pub fn semidirect_product(n: &FiniteGroup, h: &FiniteGroup, action: &Action) -> Result<FiniteGroup> {
        let phi = action.resolve(n, h)?;
        for (x, p) in phi.iter().enumerate() {
            for a in n.elements() {
                for b in n.elements() {
                    if p[n.mul(a, b)] != n.mul(p[a], p[b]) {
                        return Err(GroupError::ActionNotAutomorphism { h: x, a, b });
                    }
                }
            }
        }
        for h1 in h.elements() {
            for h2 in h.elements() {
                let p12 = &phi[h.mul(h1, h2)];
                if n.elements().any(|a| p12[a] != phi[h1][phi[h2][a]]) {
                    return Err(GroupError::ActionNotHomomorphism { h1, h2 });
                }
            }
        }
        let (nn, hn) = (n.order(), h.order());
        let order = nn * hn;
        check_cap(order)?;
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (n1, h1) = (x / hn, x % hn);
            for y in 0..order {
                let (n2, h2) = (y / hn, y % hn);
                let nz = n.mul(n1, phi[h1][n2]);
                mul.push((nz * hn + h.mul(h1, h2)) as u32);
            }
        }
        let labels = (0..order).map(|x| format!("({},{})", n.label(x / hn), h.label(x % hn))).collect();
        let mut names: Vec<(String, usize)> =
            n.names().iter().map(|(s, a)| (s.clone(), a * hn + h.identity())).collect();
        names.extend(h.names().iter().map(|(s, b)| (s.clone(), n.identity() * hn + b)));
        let mut gens: Vec<usize> = n.generators().iter().map(|&a| a * hn + h.identity()).collect();
        gens.extend(h.generators().iter().map(|&b| n.identity() * hn + b));
        Ok(FiniteGroup::from_table_trusted(mul, labels, names, gens))
    }

    /// Quotient by a normal subgroup. Cosets are ordered by their least
    /// element, which also serves as the coset's label source.
    pub fn quotient(&self, n: &SubgroupRef) -> Result<(FiniteGroup, GroupHom)> {
        self.check_same(n)?;
        n.check_normal()?;
        let order = self.order();
        let mut coset = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &m in n.elements() {
                coset[self.mul(g, m)] = idx;
            }
        }
        let q = reps.len();
        let mut mul = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset[self.mul(a, b)] as u32);
            }
        }
        let inv = reps.iter().map(|&a| coset[self.inv(a)] as u32).collect();
        let labels = reps.iter().map(|&a| self.label(a).to_string()).collect();
        let names = self.names().iter().map(|(s, g)| (s.clone(), coset[*g])).collect();
        let mut gens = Vec::new();
        for &g in self.generators() {
            let c = coset[g];
            if c != coset[self.identity()] && !gens.contains(&c) {
                gens.push(c);
            }
        }
        let quot = FiniteGroup::from_raw(mul, inv, coset[self.identity()], labels, names, gens);
        let proj = GroupHom::new_unchecked(self.clone(), quot.clone(), coset);
        Ok((quot, proj))
    }
}

fn check_cap(order: usize) -> Result<()> {
    if order > super::DEFAULT_CLOSURE_CAP {
        return Err(GroupError::OrderCapExceeded { cap: super::DEFAULT_CLOSURE_CAP });
    }
    Ok(())
}

/// Iterated direct product in mixed radix (first factor most significant).
/// Names of factor `i` get the suffix `i+1`.
pub fn direct_product_many(factors: &[FiniteGroup]) -> Result<(FiniteGroup, Vec<GroupHom>)> {
    let sizes: Vec<usize> = factors.iter().map(FiniteGroup::order).collect();
    let order: usize = sizes.iter().product();
    check_cap(order)?;
    let k = factors.len();
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| x / strides[i] % sizes[i]).collect() };
    let all_digits: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut mul = Vec::with_capacity(order * order);
    for a in &all_digits {
        for b in &all_digits {
            let idx: usize = (0..k).map(|i| factors[i].mul(a[i], b[i]) * strides[i]).sum();
            mul.push(idx as u32);
        }
    }
    let identity: usize = (0..k).map(|i| factors[i].identity() * strides[i]).sum();
    let embed_at = |i: usize, g: usize| identity - factors[i].identity() * strides[i] + g * strides[i];
    let labels = all_digits
        .iter()
        .map(|d| {
            let parts: Vec<&str> = (0..k).map(|i| factors[i].label(d[i])).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mut names = Vec::new();
    let mut gens = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        names.extend(f.names().iter().map(|(s, g)| (format!("{s}{}", i + 1), embed_at(i, *g))));
        gens.extend(f.generators().iter().map(|&g| embed_at(i, g)));
    }
    let product = FiniteGroup::from_table_trusted(mul, labels, names, gens);
    let embeds = factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let image = f.elements().map(|g| embed_at(i, g)).collect();
            GroupHom::new_unchecked(f.clone(), product.clone(), image)
        })
        .collect();
    Ok((product, embeds))
}

/// How `H` acts on `N` in a semidirect product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Trivial,
    /// The first generator of `H` inverts `N`, the rest act trivially.
    Inversion,
    /// Every generator of `H` inverts `N`.
    DiagonalInversion,
    /// Every generator of `H` acts by `n -> n^k`.
    Power(i64),
    /// One permutation of `N` per generator of `H`.
    GeneratorImages(Vec<Vec<usize>>),
    /// One permutation of `N` per element of `H`.
    Table(Vec<Vec<usize>>),
}

impl Action {
    /// The permutation of `N` for every element of `H`.
    fn resolve(&self, n: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
        let id: Vec<usize> = n.elements().collect();
        let inversion: Vec<usize> = n.elements().map(|a| n.inv(a)).collect();
        let hgens = h.generators();
        let images: Vec<Vec<usize>> = match self {
            Action::Table(t) => {
                if t.len() != h.order() {
                    return Err(GroupError::Malformed(format!("action table has {} rows, |H| = {}", t.len(), h.order())));
                }
                check_perms(t, n.order())?;
                return Ok(t.clone());
            }
            Action::Trivial => vec![id.clone(); hgens.len()],
            Action::Inversion => (0..hgens.len()).map(|i| if i == 0 { inversion.clone() } else { id.clone() }).collect(),
            Action::DiagonalInversion => vec![inversion; hgens.len()],
            Action::Power(k) => vec![n.elements().map(|a| n.pow(a, *k)).collect(); hgens.len()],
            Action::GeneratorImages(imgs) => {
                if imgs.len() != hgens.len() {
                    return Err(GroupError::Malformed(format!(
                        "{} generator images for {} generators",
                        imgs.len(),
                        hgens.len()
                    )));
                }
                imgs.clone()
            }
        };
        check_perms(&images, n.order())?;
        // phi_{x s} = phi_x ∘ phi_s, by BFS over H
        let mut phi: Vec<Option<Vec<usize>>> = vec![None; h.order()];
        phi[h.identity()] = Some(id);
        let mut queue = vec![h.identity()];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (j, &s) in hgens.iter().enumerate() {
                let y = h.mul(x, s);
                if phi[y].is_none() {
                    let px = phi[x].as_ref().expect("visited");
                    phi[y] = Some(images[j].iter().map(|&a| px[a]).collect());
                    queue.push(y);
                }
            }
            i += 1;
        }
        Ok(phi.into_iter().map(|p| p.expect("generators generate H")).collect())
    }
}

fn check_perms(perms: &[Vec<usize>], degree: usize) -> Result<()> {
    for (i, p) in perms.iter().enumerate() {
        let mut seen = vec![false; degree];
        if p.len() != degree || !p.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true)) {
            return Err(GroupError::NotAPermutation { generator: i, degree });
        }
    }
    Ok(())
}
