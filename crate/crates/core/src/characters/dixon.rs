//! Dixon–Schneider: irreducible characters as simultaneous eigenvectors of the
//! class-sum multiplication matrices, computed over `F_p`.

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::group::FiniteGroup;
use crate::linalg::{self, Matrix};

/// `m[k][j][l]` = number of `x ∈ C_k` with `x⁻¹ z_l ∈ C_j`, where `z_l` is the
/// representative of class `l`. Central characters `ω` satisfy
/// `Σ_l m[k][j][l] ω(C_l) = ω(C_k) ω(C_j)`.
pub(crate) fn class_matrices(g: &FiniteGroup, f: &FieldContext) -> Vec<Matrix> {
    let r = g.class_count();
    let mut m = vec![vec![vec![0u64; r]; r]; r];
    for (l, class) in g.classes().iter().enumerate() {
        let z = class.representative;
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            let slot = &mut m[g.class_of(x)][g.class_of(y)][l];
            *slot = f.add(*slot, 1);
        }
    }
    m
}

/// Character values (per class) of all irreducible characters, unordered.
pub(crate) fn irreducible_values(g: &FiniteGroup, f: &FieldContext) -> Result<Vec<Vec<u64>>> {
    let r = g.class_count();
    let mats = class_matrices(g, f);
    let identity: Matrix = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Matrix> = vec![identity];
    for mk in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(f, mk, space)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::internal(
            "class matrices do not separate the irreducible characters",
        ));
    }

    let order = f.from_int(g.order() as i64);
    let mut chars = Vec::with_capacity(r);
    for space in spaces {
        let mut v = space.into_iter().next().unwrap();
        if v[0] == 0 {
            return Err(Error::internal(
                "central character vanishes at the identity",
            ));
        }
        let scale = f.inv(v[0]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, scale));
        // Σ_l ω_l ω_{l*} / |C_l| = |G| / χ(1)²
        let mut s = 0;
        for l in 0..r {
            let term = f.mul(
                f.mul(v[l], v[g.inverse_class(l)]),
                f.inv(g.class_size(l) as u64),
            );
            s = f.add(s, term);
        }
        if s == 0 {
            return Err(Error::internal("degenerate norm in degree recovery"));
        }
        let deg_sq = f.lift(f.mul(order, f.inv(s)));
        let deg = integer_sqrt(deg_sq)
            .filter(|&d| (g.order() as i64) % d == 0)
            .ok_or_else(|| Error::internal(format!("non-square degree² {deg_sq}")))?;
        let d = f.from_int(deg);
        let values = (0..r)
            .map(|l| f.mul(f.mul(v[l], d), f.inv(g.class_size(l) as u64)))
            .collect();
        chars.push(values);
    }
    Ok(chars)
}

fn integer_sqrt(x: i64) -> Option<i64> {
    if x <= 0 {
        return None;
    }
    let mut s = (x as f64).sqrt() as i64;
    while s * s > x {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= x {
        s += 1;
    }
    (s * s == x).then_some(s)
}

/// Splits an invariant subspace (rows in reduced echelon form) into eigenspaces
/// of `mk`.
fn split_space(f: &FieldContext, mk: &Matrix, space: Matrix) -> Result<Vec<Matrix>> {
    let d = space.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    // restricted[i][j] = coefficient of b_i in M b_j
    let images: Vec<Vec<u64>> = space.iter().map(|b| linalg::mat_vec(f, mk, b)).collect();
    let restricted: Matrix = (0..d)
        .map(|i| (0..d).map(|j| images[j][pivots[i]]).collect())
        .collect();
    let poly = linalg::charpoly(f, &restricted);
    let eigenvalues = linalg::roots(f, &poly);
    if eigenvalues.len() == 1 {
        return Ok(vec![space]);
    }
    let mut out = Vec::with_capacity(eigenvalues.len());
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Matrix = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let kernel = linalg::nullspace(f, &shifted);
        let mut sub: Matrix = kernel
            .iter()
            .map(|coeffs| {
                let mut w = vec![0u64; space[0].len()];
                for (c, b) in coeffs.iter().zip(&space) {
                    if *c == 0 {
                        continue;
                    }
                    for (x, &y) in w.iter_mut().zip(b) {
                        *x = f.add(*x, f.mul(*c, y));
                    }
                }
                w
            })
            .collect();
        linalg::rref(f, &mut sub);
        total += sub.len();
        out.push(sub);
    }
    if total != d {
        return Err(Error::internal(
            "class matrix is not diagonalizable over the chosen field",
        ));
    }
    Ok(out)
}
