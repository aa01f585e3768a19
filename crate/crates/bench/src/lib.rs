//! Workloads shared by the benchmarks under `benches/`.

use std::sync::Arc;

use circlebundles::{catalog, FiniteGroup, OrthogonalElement};

pub fn table_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    vec![
        ("S4".into(), catalog::symmetric(4)),
        ("SL(2,3)".into(), catalog::sl2_3()),
        ("D16".into(), catalog::dihedral(16)),
        ("S4xZ2".into(), catalog::s4_times_z2()),
        ("A5".into(), catalog::alternating5()),
    ]
}

fn rot(p: i64, q: i64) -> OrthogonalElement {
    OrthogonalElement::rotation(p, q).expect("nonzero denominator")
}

fn refl(p: i64, q: i64) -> OrthogonalElement {
    OrthogonalElement::reflection(p, q).expect("nonzero denominator")
}

/// Groups with an O(2) image per generator.
pub fn actions() -> Vec<(String, Arc<FiniteGroup>, Vec<OrthogonalElement>)> {
    vec![
        (
            "S3 standard".into(),
            catalog::symmetric(3),
            vec![rot(1, 3), refl(0, 1)],
        ),
        (
            "Q8 over D2".into(),
            catalog::quaternion(),
            vec![rot(1, 2), refl(0, 1)],
        ),
        (
            "D12 square".into(),
            catalog::dihedral(12),
            vec![rot(1, 4), refl(0, 1)],
        ),
        (
            "S4 by sign".into(),
            catalog::symmetric(4),
            vec![refl(0, 1), refl(0, 1)],
        ),
        (
            "Dic5 over D5".into(),
            catalog::dicyclic(5),
            vec![rot(1, 5), refl(1, 3)],
        ),
    ]
}
