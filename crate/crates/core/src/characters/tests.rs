use super::*;
use crate::catalog;
use crate::group::Subgroup;

fn sorted_degrees(t: &CharacterTable) -> Vec<usize> {
    t.characters().iter().map(|c| c.degree).collect()
}

#[test]
fn s3_table() {
    let g = catalog::symmetric(3);
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(sorted_degrees(&t), vec![1, 1, 2]);
    let two = t.character(2);
    let by_order: Vec<(usize, i64)> = g
        .classes()
        .iter()
        .enumerate()
        .map(|(c, cl)| (g.element_order(cl.representative), two.lifted()[c]))
        .collect();
    for (order, v) in by_order {
        let want = match order {
            1 => 2,
            2 => 0,
            3 => -1,
            _ => unreachable!(),
        };
        assert_eq!(v, want);
    }
    assert_eq!(t.frobenius_schur(2), 1);
}

#[test]
fn quaternion_table() {
    let q = catalog::quaternion();
    let t = CharacterTable::compute(&q).unwrap();
    assert_eq!(sorted_degrees(&t), vec![1, 1, 1, 1, 2]);
    assert_eq!(t.frobenius_schur(4), -1);
    let real = t.real_irreducibles();
    assert_eq!(real.len(), 5);
    assert!(real[..4]
        .iter()
        .all(|r| r.kind == RealType::Real && r.real_degree == 1));
    let h = &real[4];
    assert_eq!(h.kind, RealType::Quaternionic);
    assert_eq!(h.real_degree, 4);
    let central = q
        .classes()
        .iter()
        .position(|c| q.element_order(c.representative) == 2)
        .unwrap();
    for (c, v) in h.character.lifted().into_iter().enumerate() {
        let want = if c == q.class_of(0) {
            4
        } else if c == central {
            -4
        } else {
            0
        };
        assert_eq!(v, want);
    }
}

#[test]
fn cyclic_indicators() {
    let z4 = catalog::cyclic(4);
    let t = CharacterTable::compute(&z4).unwrap();
    let fs: Vec<i8> = (0..4).map(|i| t.frobenius_schur(i)).collect();
    assert_eq!(fs.iter().filter(|&&x| x == 0).count(), 2);
    assert_eq!(fs.iter().filter(|&&x| x == 1).count(), 2);

    let z3 = catalog::cyclic(3);
    let t = CharacterTable::compute(&z3).unwrap();
    let real = t.real_irreducibles();
    assert_eq!(real.len(), 2);
    assert_eq!(real[0].character, ClassFunction::trivial(&z3, *t.field()));
    assert_eq!(real[1].kind, RealType::Complex);
    let mut vals = real[1].character.lifted();
    vals.sort();
    assert_eq!(vals, vec![-1, -1, 2]);
}

#[test]
fn trivial_group_table() {
    let g = catalog::trivial();
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.real_irreducibles().len(), 1);
    assert_eq!(t.trivial_real(), 0);
}

#[test]
fn lift_renders_roots() {
    let z3 = catalog::cyclic(3);
    let t = CharacterTable::compute(&z3).unwrap();
    let g = z3.generators()[0];
    let rendered: Vec<String> = (0..t.len())
        .map(|i| {
            let c = &t.characters()[i];
            t.render_value(&c.values, &c.lift[z3.class_of(g)], z3.class_of(g))
        })
        .collect();
    assert_eq!(rendered[0], "1");
    let mut rest = rendered[1..].to_vec();
    rest.sort();
    assert_eq!(rest, vec!["E(3)", "E(3)^2"]);
    let cv = CyclotomicValue {
        modulus: 4,
        terms: vec![(2, 2)],
    };
    assert_eq!(cv.render_roots(), "2*-1");
}

#[test]
fn restrict_induce_s3() {
    let g = catalog::symmetric(3);
    let cache = TableCache::for_group(&g).unwrap();
    let t = cache.table(&g).unwrap();
    let f = *t.field();
    let three = g.generators()[0];
    let a3 = Subgroup::generated(&g, &[three]).unwrap();
    let res = restrict(&t.character(2), &a3).unwrap();
    let mut vals = res.lifted();
    vals.sort();
    assert_eq!(vals, vec![-1, -1, 2]);

    let triv_a3 = ClassFunction::trivial(a3.group(), f);
    let ind = induce(&triv_a3, &a3).unwrap();
    // ind of trivial from A3 = trivial + sign
    assert_eq!(ind, t.character(0).add(&t.character(1)).unwrap());
    assert_eq!(inner_product(&ind, &t.character(0)).unwrap(), 1);
    assert_eq!(inner_product(&t.character(2), &t.character(2)).unwrap(), 1);

    let reg = ClassFunction::regular(&g, f);
    assert_eq!(decompose(&reg, &t).unwrap(), vec![(0, 1), (1, 1), (2, 2)]);
    let bad = t.character(0).sub(&t.character(1)).unwrap();
    assert!(matches!(
        decompose(&bad, &t),
        Err(Error::NotACharacter {
            index: 1,
            multiplicity: -1
        })
    ));
}

#[test]
fn conjugation_on_normal_subgroup() {
    let g = catalog::symmetric(3);
    let t = CharacterTable::compute(&g).unwrap();
    let f = *t.field();
    let (three, swap) = (g.generators()[0], g.generators()[1]);
    let a3 = Subgroup::generated(&g, &[three]).unwrap();
    let ta3 = CharacterTable::compute_in(a3.group(), f).unwrap();
    let omega = ta3.character(1);
    let moved = conjugate_by(&omega, &a3, swap).unwrap();
    assert_eq!(moved, omega.conjugate());
    assert_eq!(conjugate_by(&omega, &a3, three).unwrap(), omega);
    let c2 = Subgroup::generated(&g, &[swap]).unwrap();
    let triv = ClassFunction::trivial(c2.group(), f);
    assert_eq!(
        conjugate_by(&triv, &c2, three).unwrap_err(),
        Error::NotNormal
    );
}

#[test]
fn extension_counts() {
    // H trivial in Z/2: trivial character has two extensions
    let z2 = catalog::cyclic(2);
    let cache = TableCache::for_group(&z2).unwrap();
    let h = Subgroup::generated(&z2, &[]).unwrap();
    let th = cache.table(h.group()).unwrap();
    let ext = count_extensions(&cache.table(&z2).unwrap(), &h, &th.real_irreducibles()[0]).unwrap();
    assert_eq!(ext.e, 2);

    // sign of Z/2 inside Z/4 does not extend; induced is complex type
    let z4 = catalog::cyclic(4);
    let cache = TableCache::for_group(&z4).unwrap();
    let a = z4.generators()[0];
    let h = Subgroup::generated(&z4, &[z4.mul(a, a)]).unwrap();
    let th = cache.table(h.group()).unwrap();
    let k = cache.table(&z4).unwrap();
    let ext = count_extensions(&k, &h, &th.real_irreducibles()[1]).unwrap();
    assert_eq!(ext.e, 0);
    let ind = &k.real_irreducibles()[ext.induced_class.unwrap()];
    assert_eq!(ind.kind, RealType::Complex);
    let vals: Vec<i64> = (0..4).map(|x| f_lift(&ext.induced, x)).collect();
    let want: Vec<i64> = (0..4)
        .map(|x| match (0..4).find(|&t| z4.pow(a, t) == x).unwrap() {
            0 => 2,
            2 => -2,
            _ => 0,
        })
        .collect();
    assert_eq!(vals, want);

    // the complex-type 2-dim real irreducible of A3 extends uniquely to S3
    let s3 = catalog::symmetric(3);
    let cache = TableCache::for_group(&s3).unwrap();
    let a3 = Subgroup::generated(&s3, &[s3.generators()[0]]).unwrap();
    let ta3 = cache.table(a3.group()).unwrap();
    let ext =
        count_extensions(&cache.table(&s3).unwrap(), &a3, &ta3.real_irreducibles()[1]).unwrap();
    assert_eq!(ext.e, 1);
}

fn f_lift(chi: &ClassFunction, element: usize) -> i64 {
    chi.field().lift(chi.at_element(element))
}

#[test]
fn count_extensions_rejects_bad_input() {
    let s3 = catalog::symmetric(3);
    let cache = TableCache::for_group(&s3).unwrap();
    let c2 = Subgroup::generated(&s3, &[s3.generators()[1]]).unwrap();
    let t = cache.table(c2.group()).unwrap();
    let err =
        count_extensions(&cache.table(&s3).unwrap(), &c2, &t.real_irreducibles()[0]).unwrap_err();
    assert_eq!(err, Error::IndexNotTwo(3));
}

#[test]
fn restriction_solver() {
    let q = catalog::quaternion();
    let cache = TableCache::for_group(&q).unwrap();
    let z = Subgroup::generated(&q, &[(0..8).find(|&x| q.element_order(x) == 2).unwrap()]).unwrap();
    let tz = cache.table(z.group()).unwrap();
    let sign = tz.real_irreducibles()[1].character.scale(2);
    assert!(solve_restriction_system(&cache, &q, &[(z.clone(), sign)])
        .unwrap()
        .is_empty());
    let four_sign = tz.real_irreducibles()[1].character.scale(4);
    let sols = solve_restriction_system(&cache, &q, &[(z, four_sign)]).unwrap();
    assert_eq!(sols, vec![vec![0, 0, 0, 0, 1]]);

    let s3 = catalog::symmetric(3);
    let cache = TableCache::for_group(&s3).unwrap();
    let (three, swap) = (s3.generators()[0], s3.generators()[1]);
    let k1 = Subgroup::generated(&s3, &[swap]).unwrap();
    let kmu = Subgroup::generated(&s3, &[s3.mul(three, swap)]).unwrap();
    let t1 = cache.table(k1.group()).unwrap();
    let tmu = cache.table(kmu.group()).unwrap();
    let plus = |t: &CharacterTable| t.real_irreducibles()[0].character.clone();
    let minus = |t: &CharacterTable| t.real_irreducibles()[1].character.clone();
    let one =
        |a, b| solve_restriction_system(&cache, &s3, &[(k1.clone(), a), (kmu.clone(), b)]).unwrap();
    assert_eq!(one(plus(&t1), plus(&tmu)).len(), 1);
    assert_eq!(one(minus(&t1), minus(&tmu)).len(), 1);
    assert!(one(plus(&t1), minus(&tmu)).is_empty());
    assert!(one(minus(&t1), plus(&tmu)).is_empty());
    assert_eq!(
        solve_restriction_system(&cache, &s3, &[]).unwrap(),
        vec![vec![0, 0, 0]]
    );
}
