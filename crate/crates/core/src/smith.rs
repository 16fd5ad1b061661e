//! Linear systems over `Z/n` by diagonalization with unimodular row and
//! column operations (Smith-style elimination).

use num_integer::Integer;

/// A solution `x` of `a·x ≡ b (mod n)`, if one exists. `a` is row-major
/// with `rows = b.len()`; entries may be any integers.
pub fn solve_mod(a: &[Vec<i64>], b: &[i64], n: i64) -> Option<Vec<i64>> {
    assert!(n >= 1, "modulus must be positive");
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let m = |x: i128| x.rem_euclid(n as i128);
    let mut a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| m(x as i128)).collect()).collect();
    let mut b: Vec<i128> = b.iter().map(|&x| m(x as i128)).collect();
    // column operations are recorded in v: x = v·y
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()).collect();
    let nn = n as i128;
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot with the smallest gcd with n
        let mut best: Option<(i128, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let g = x.gcd(&nn);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        b.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    dirty = true;
                    let (p, q) = (a[t][t], a[i][t]);
                    let e = p.extended_gcd(&q);
                    let (s, u, g) = (e.x, e.y, e.gcd);
                    let (c1, c2) = (q / g, p / g);
                    for j in 0..cols {
                        let (x, y) = (a[t][j], a[i][j]);
                        a[t][j] = m(s * x + u * y);
                        a[i][j] = m(c1 * x - c2 * y);
                    }
                    let (x, y) = (b[t], b[i]);
                    b[t] = m(s * x + u * y);
                    b[i] = m(c1 * x - c2 * y);
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    dirty = true;
                    let (p, q) = (a[t][t], a[t][j]);
                    let e = p.extended_gcd(&q);
                    let (s, u, g) = (e.x, e.y, e.gcd);
                    let (c1, c2) = (q / g, p / g);
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        let (x, y) = (row[t], row[j]);
                        row[t] = m(s * x + u * y);
                        row[j] = m(c1 * x - c2 * y);
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        t += 1;
    }
    // diagonal system d_i y_i = b_i
    let mut y = vec![0i128; cols];
    for i in 0..rows {
        let d = if i < cols { a[i][i] } else { 0 };
        if d == 0 {
            if b[i] != 0 {
                return None;
            }
            continue;
        }
        let g = d.gcd(&nn);
        if b[i] % g != 0 {
            return None;
        }
        let modulus = nn / g;
        let inv = (d / g).extended_gcd(&modulus).x;
        y[i] = m((b[i] / g) * inv.rem_euclid(modulus));
    }
    Some((0..cols).map(|i| m((0..cols).map(|j| v[i][j] * y[j]).sum::<i128>()) as i64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &[Vec<i64>], b: &[i64], n: i64, x: &[i64]) -> bool {
        a.iter().zip(b).all(|(row, &bi)| (row.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() - bi).rem_euclid(n) == 0)
    }

    #[test]
    fn small_systems() {
        let a = vec![vec![2, 0], vec![0, 3]];
        let x = solve_mod(&a, &[4, 3], 6).unwrap();
        assert!(check(&a, &[4, 3], 6, &x));
        assert!(solve_mod(&[vec![2]], &[1], 4).is_none());
        assert!(solve_mod(&[vec![0, 0]], &[1], 5).is_none());
        let a = vec![vec![4, 6], vec![6, 9], vec![1, 1]];
        let b = [2, 3, 5];
        if let Some(x) = solve_mod(&a, &b, 12) {
            assert!(check(&a, &b, 12, &x));
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let n = 6;
        let a = vec![vec![2, 3, 1], vec![4, 0, 2], vec![0, 3, 3]];
        for b0 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    let b = [b0, b1, b2];
                    let brute = (0..n * n * n).any(|k| check(&a, &b, n, &[k % n, k / n % n, k / (n * n)]));
                    let got = solve_mod(&a, &b, n);
                    assert_eq!(brute, got.is_some(), "b = {b:?}");
                    if let Some(x) = got {
                        assert!(check(&a, &b, n, &x));
                    }
                }
            }
        }
    }
}
