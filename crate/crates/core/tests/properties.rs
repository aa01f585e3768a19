use std::collections::BTreeSet;

use circlebundles::characters::{induce, inner_product, restrict};
use circlebundles::circle::Image;
use circlebundles::{
    catalog, Angle, CharacterTable, CircleAction, FiniteGroup, ImageKind, OrthogonalElement,
    Subgroup,
};
use proptest::prelude::*;

fn small_angles() -> Vec<Angle> {
    let mut set = BTreeSet::new();
    for q in 1..=12 {
        for p in 0..q {
            set.insert(Angle::new(p, q).unwrap());
        }
    }
    set.into_iter().collect()
}

#[test]
fn o2_is_a_group_on_small_denominators() {
    let angles = small_angles();
    let elems: Vec<OrthogonalElement> = angles
        .iter()
        .flat_map(|&a| {
            [
                OrthogonalElement::Rotation(a),
                OrthogonalElement::Reflection(a),
            ]
        })
        .collect();
    for &a in &elems {
        assert!(a.compose(a.inverse()).is_identity());
        assert_eq!(a.compose(OrthogonalElement::IDENTITY), a);
        for &b in &elems {
            let ab = a.compose(b);
            for &c in elems.iter().step_by(7) {
                assert_eq!(ab.compose(c), a.compose(b.compose(c)));
            }
        }
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

fn random_group() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (2usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(permutation(n), 1..=2)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tables_of_random_permutation_groups((n, gens) in random_group(), seed in any::<u64>()) {
        let g = FiniteGroup::from_generators(n, &gens).unwrap();
        let ord = g.order();
        let (a, b, c) = ((seed % ord as u64) as usize, ((seed >> 16) % ord as u64) as usize, ((seed >> 32) % ord as u64) as usize);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);

        let t = CharacterTable::compute(&g).unwrap();
        prop_assert_eq!(t.len(), g.class_count());
        let deg2: usize = t.characters().iter().map(|c| c.degree * c.degree).sum();
        prop_assert_eq!(deg2, ord);
        let real_dim: usize = t.real_irreducibles().iter().map(|r| r.real_degree * r.real_degree / r.schur_dim()).sum();
        prop_assert_eq!(real_dim, ord);

        let h = Subgroup::generated(&g, &[a]).unwrap();
        let ht = CharacterTable::compute_in(h.group(), *t.field()).unwrap();
        for j in 0..ht.len() {
            let ind = induce(&ht.character(j), &h).unwrap();
            prop_assert_eq!(ind.degree() as usize, ht.characters()[j].degree * g.order() / h.order());
            for i in 0..t.len() {
                let chi = t.character(i);
                let lhs = inner_product(&ind, &chi).unwrap();
                let rhs = inner_product(&ht.character(j), &restrict(&chi, &h).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                prop_assert!(lhs >= 0);
            }
        }
    }

    #[test]
    fn dihedral_actions_are_consistent(n in 2usize..=8, k in 0i64..8, s in 0i64..8) {
        let g = catalog::dihedral(n);
        let rot = OrthogonalElement::Rotation(Angle::new(k, n as i64).unwrap());
        let refl = OrthogonalElement::Reflection(Angle::new(s, 8).unwrap());
        let Ok(action) = CircleAction::build(&g, &[rot, refl]) else {
            return Ok(());
        };
        prop_assert!(action.is_homomorphism());
        let h = action.kernel();
        prop_assert!(h.is_normal());
        let image = action.image_elements();
        let Image { kind, n: m } = action.image();
        match kind {
            ImageKind::Cyclic => prop_assert_eq!(image.len(), m),
            ImageKind::Dihedral => {
                prop_assert_eq!(image.len(), 2 * m);
                prop_assert!(image.contains(&OrthogonalElement::Reflection(Angle::ZERO)));
                prop_assert!(image.contains(&OrthogonalElement::Rotation(Angle::new(1, m as i64).unwrap())));
                let (k1, kmu) = (action.stab_one(), action.stab_mu().unwrap());
                prop_assert!(h.is_subset_of(k1) && h.is_subset_of(kmu));
                if m >= 2 {
                    let meet: Vec<usize> = k1.members().iter().copied().filter(|&x| kmu.contains(x)).collect();
                    prop_assert_eq!(meet.as_slice(), h.members());
                }
            }
        }
        prop_assert_eq!(g.order(), h.order() * image.len());
    }
}

#[test]
fn restriction_to_isotropy_keeps_kernel_structure() {
    let q = catalog::quaternion();
    let a = CircleAction::build(
        &q,
        &[
            OrthogonalElement::rotation(1, 2).unwrap(),
            OrthogonalElement::reflection(1, 3).unwrap(),
        ],
    )
    .unwrap();
    let k1 = a.stab_one().clone();
    let r = a.restrict_to(&k1).unwrap();
    assert_eq!(r.image().kind, ImageKind::Dihedral);
    assert_eq!(r.image().n, 1);
    assert!(r.kernel().group().same_as(a.kernel().group()));
    let p = a.rotation_subgroup().unwrap();
    let rp = a.restrict_to(&p).unwrap();
    assert_eq!(
        rp.image(),
        Image {
            kind: ImageKind::Cyclic,
            n: 2
        }
    );
}
