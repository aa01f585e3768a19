//! Small named groups used by examples, self-checks and benchmarks.

use std::sync::Arc;

use crate::error::Result;
use crate::group::{FiniteGroup, Permutation};

fn cycle_perm(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut images: Vec<usize> = (1..=degree).collect();
    for cyc in cycles {
        for (k, &x) in cyc.iter().enumerate() {
            images[x - 1] = cyc[(k + 1) % cyc.len()];
        }
    }
    images
}

/// `Z/n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    let n = n.max(1);
    let cyc: Vec<usize> = (1..=n).collect();
    FiniteGroup::from_generators(n, &[cycle_perm(n, &[&cyc])]).expect("valid cyclic generator")
}

/// Generators of the dihedral group of order `2n`: for `n ≥ 3` the rotation
/// and a reflection of the `n`-gon; `Z/2` for `n = 1`; the Klein group for `n = 2`.
pub fn dihedral_generators(n: usize) -> (usize, Vec<Vec<usize>>) {
    match n {
        0 | 1 => (2, vec![vec![2, 1]]),
        2 => (
            4,
            vec![
                cycle_perm(4, &[&[1, 2], &[3, 4]]),
                cycle_perm(4, &[&[1, 3], &[2, 4]]),
            ],
        ),
        _ => {
            let rot: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
            let refl: Vec<usize> = (1..=n).map(|i| (n + 1 - i) % n + 1).collect();
            (n, vec![rot, refl])
        }
    }
}

pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    let (deg, gens) = dihedral_generators(n);
    FiniteGroup::from_generators(deg, &gens).expect("valid dihedral generators")
}

/// Regular-representation generators `a, x` of the dicyclic group of order
/// `4m`: `a^{2m} = 1`, `x² = a^m`, `x a x⁻¹ = a⁻¹`. `m = 2` is `Q₈`.
pub fn dicyclic_generators(m: usize) -> (usize, Vec<Vec<usize>>) {
    let two_m = 2 * m;
    let degree = 2 * two_m;
    // element a^k x^eps has index k + 2m·eps
    let mul = |(k, e1): (usize, usize), (l, e2): (usize, usize)| -> (usize, usize) {
        if e1 == 0 {
            ((k + l) % two_m, e2)
        } else {
            let base = (k + two_m - l) % two_m;
            if e2 == 0 {
                (base, 1)
            } else {
                ((base + m) % two_m, 0)
            }
        }
    };
    let decode = |i: usize| (i % two_m, i / two_m);
    let encode = |(k, e): (usize, usize)| k + two_m * e;
    let left = |g: (usize, usize)| -> Vec<usize> {
        (0..degree).map(|y| encode(mul(g, decode(y))) + 1).collect()
    };
    (degree, vec![left((1, 0)), left((0, 1))])
}

pub fn dicyclic(m: usize) -> Arc<FiniteGroup> {
    let (deg, gens) = dicyclic_generators(m);
    FiniteGroup::from_generators(deg, &gens).expect("valid dicyclic generators")
}

pub fn quaternion() -> Arc<FiniteGroup> {
    dicyclic(2)
}

pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    match n {
        0 | 1 => FiniteGroup::from_generators(1, &[]).unwrap(),
        2 => cyclic(2),
        _ => {
            let cyc: Vec<usize> = (1..=n).collect();
            FiniteGroup::from_generators(n, &[cycle_perm(n, &[&cyc]), cycle_perm(n, &[&[1, 2]])])
                .unwrap()
        }
    }
}

pub fn alternating4() -> Arc<FiniteGroup> {
    FiniteGroup::from_generators(
        4,
        &[
            cycle_perm(4, &[&[1, 2, 3]]),
            cycle_perm(4, &[&[1, 2], &[3, 4]]),
        ],
    )
    .unwrap()
}

pub fn alternating5() -> Arc<FiniteGroup> {
    FiniteGroup::from_generators(
        5,
        &[
            cycle_perm(5, &[&[1, 2, 3, 4, 5]]),
            cycle_perm(5, &[&[1, 2, 3]]),
        ],
    )
    .unwrap()
}

/// Direct product of cyclic groups acting on disjoint blocks.
pub fn abelian(orders: &[usize]) -> Arc<FiniteGroup> {
    let degree: usize = orders.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &n in orders {
        let cyc: Vec<usize> = (offset + 1..=offset + n).collect();
        gens.push(cycle_perm(degree, &[&cyc]));
        offset += n;
    }
    FiniteGroup::from_generators(degree.max(1), &gens).unwrap()
}

/// `SL(2, 3)` acting on the eight nonzero vectors of `F_3²`.
pub fn sl2_3() -> Arc<FiniteGroup> {
    let points: Vec<(i64, i64)> = (0..9)
        .map(|i| (i / 3, i % 3))
        .filter(|&(a, b)| (a, b) != (0, 0))
        .collect();
    let act = |m: [[i64; 2]; 2]| -> Permutation {
        let images: Vec<usize> = points
            .iter()
            .map(|&(x, y)| {
                let nx = (m[0][0] * x + m[0][1] * y).rem_euclid(3);
                let ny = (m[1][0] * x + m[1][1] * y).rem_euclid(3);
                points.iter().position(|&p| p == (nx, ny)).unwrap() + 1
            })
            .collect();
        Permutation::from_one_based(&images).unwrap()
    };
    FiniteGroup::from_permutations(8, &[act([[1, 1], [0, 1]]), act([[0, -1], [1, 0]])]).unwrap()
}

/// `S₄ × Z/2` on six points.
pub fn s4_times_z2() -> Arc<FiniteGroup> {
    FiniteGroup::from_generators(
        6,
        &[
            cycle_perm(6, &[&[1, 2, 3, 4]]),
            cycle_perm(6, &[&[1, 2]]),
            cycle_perm(6, &[&[5, 6]]),
        ],
    )
    .unwrap()
}

pub fn trivial() -> Arc<FiniteGroup> {
    FiniteGroup::from_generators(1, &[]).unwrap()
}

/// Groups checked by the fast self-check: cyclic up to 12, dihedral up to 6,
/// `Q₈`, `A₄`, `S₄`, `Z/4 × Z/2`.
pub fn fast_suite() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut out = vec![("trivial".to_string(), trivial())];
    for n in 2..=12 {
        out.push((format!("Z{n}"), cyclic(n)));
    }
    for n in 2..=6 {
        out.push((format!("D{n}"), dihedral(n)));
    }
    out.push(("Q8".into(), quaternion()));
    out.push(("A4".into(), alternating4()));
    out.push(("S4".into(), symmetric(4)));
    out.push(("Z4xZ2".into(), abelian(&[4, 2])));
    out
}

/// The fast suite plus groups of order up to 64.
pub fn full_suite() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut out = fast_suite();
    for n in [7, 8, 9, 10, 12, 16] {
        out.push((format!("D{n}"), dihedral(n)));
    }
    out.push(("Dic3".into(), dicyclic(3)));
    out.push(("Q16".into(), dicyclic(4)));
    out.push(("Dic5".into(), dicyclic(5)));
    out.push(("SL(2,3)".into(), sl2_3()));
    out.push(("Z2^3".into(), abelian(&[2, 2, 2])));
    out.push(("Z4xZ4".into(), abelian(&[4, 4])));
    out.push(("S4xZ2".into(), s4_times_z2()));
    out.push(("A5".into(), alternating5()));
    out
}

/// Looks up a catalog group by the names used in the suites.
pub fn by_name(name: &str) -> Result<Arc<FiniteGroup>> {
    full_suite()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g)
        .ok_or_else(|| crate::error::Error::InvalidArgument(format!("unknown group {name}")))
}
