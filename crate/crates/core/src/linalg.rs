//! Dense linear algebra over `F_p`, sized for class-matrix eigenproblems.

use crate::field::FieldContext;

pub type Matrix = Vec<Vec<u64>>;

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(f: &FieldContext, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for a square or rectangular `A`.
pub fn nullspace(f: &FieldContext, a: &Matrix) -> Vec<Vec<u64>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rows = a.clone();
    let pivots = rref(f, &mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, coefficients low degree first.
pub fn charpoly(f: &FieldContext, a: &Matrix) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    // Reduce to upper Hessenberg form by similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let t_inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], t_inv);
            if u == 0 {
                continue;
            }
            let (top, bottom) = h.split_at_mut(i);
            for (x, &y) in bottom[0].iter_mut().zip(&top[m]) {
                *x = f.sub(*x, f.mul(u, y));
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut pm = vec![0; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            pm[k + 1] = f.add(pm[k + 1], c);
            pm[k] = f.sub(pm[k], f.mul(h[m - 1][m - 1], c));
        }
        let mut t = 1;
        for i in (1..m).rev() {
            t = f.mul(t, h[i][i - 1]);
            let coef = f.mul(t, h[i - 1][m - 1]);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                pm[k] = f.sub(pm[k], f.mul(coef, c));
            }
        }
        polys.push(pm);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(f: &FieldContext, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Distinct roots in `F_p`, ascending, by exhaustive evaluation.
pub fn roots(f: &FieldContext, poly: &[u64]) -> Vec<u64> {
    let deg = poly.len().saturating_sub(1);
    let mut out = Vec::new();
    for x in 0..f.p {
        if eval_poly(f, poly, x) == 0 {
            out.push(x);
            if out.len() == deg {
                break;
            }
        }
    }
    out
}

pub fn mat_vec(f: &FieldContext, a: &Matrix, v: &[u64]) -> Vec<u64> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldContext {
        FieldContext::for_group(4, 50).unwrap()
    }

    fn det_by_expansion(f: &FieldContext, a: &Matrix) -> u64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0;
        for c in 0..n {
            let minor: Matrix = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = f.mul(a[0][c], det_by_expansion(f, &minor));
            acc = if c % 2 == 0 {
                f.add(acc, term)
            } else {
                f.sub(acc, term)
            };
        }
        acc
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = ctx();
        let a: Matrix = vec![
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ];
        let poly = charpoly(&f, &a);
        assert_eq!(poly.len(), 5);
        assert_eq!(poly[4], 1);
        for x in [0u64, 1, 2, 7, 40] {
            let shifted: Matrix = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let d = if i == j { x } else { 0 };
                            f.sub(d, a[i][j] % f.p)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(eval_poly(&f, &poly, x), det_by_expansion(&f, &shifted));
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = ctx();
        let a: Matrix = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&f, &a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(mat_vec(&f, &a, &v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn roots_of_product() {
        let f = ctx();
        // (x-2)(x-5) = x^2 - 7x + 10
        let poly = vec![10, f.from_int(-7), 1];
        assert_eq!(roots(&f, &poly), vec![2, 5]);
    }
}
