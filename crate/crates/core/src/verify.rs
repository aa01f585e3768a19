//! Invariant suites over lists of groups. Each suite counts checks, counts
//! failures and keeps the first counterexample.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::characters::{
    conjugate_by, count_extensions, induce, inner_product_raw, restrict, solve_restriction_system,
    CharacterTable, ClassFunction, RealType, TableCache,
};
use crate::circle::{Angle, CircleAction, ImageKind, OrthogonalElement};
use crate::classifier::{
    check_tensor_action, classify_with, count_classes, enumerate_classes, enumerate_fiber_data,
    model_presentation, Case,
};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Fast,
    Full,
}

impl Scope {
    pub fn groups(self) -> Vec<(String, Arc<FiniteGroup>)> {
        match self {
            Scope::Fast => catalog::fast_suite(),
            Scope::Full => catalog::full_suite(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            checks: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(what());
            }
        }
    }

    fn record<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} checks, {} failures",
            self.name, self.checks, self.failures
        )?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "; first counterexample: {c}")?;
        }
        Ok(())
    }
}

/// A cell of the feasibility tables: image kind, type of `χ`, `(e₁, e_μ)`.
pub type Cell = (ImageKind, RealType, usize, usize);

#[derive(Debug, Clone)]
pub struct CheckSummary {
    pub suites: Vec<SuiteReport>,
    pub cells: BTreeSet<Cell>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

pub fn run(scope: Scope) -> CheckSummary {
    let groups = scope.groups();
    let mut suites = vec![
        character_table_suite(&groups),
        reciprocity_suite(&groups, 0x5eed, &|t| t),
        trichotomy_suite(&groups),
        extension_existence_suite(&groups),
    ];
    let actions = action_suites(&groups, 10);
    suites.extend(actions.suites);
    CheckSummary {
        suites,
        cells: actions.cells,
    }
}

/// Orthogonality, `Σ deg² = |G|`, indicator range and cyclotomic lift round-trip.
pub fn character_table_suite(groups: &[(String, Arc<FiniteGroup>)]) -> SuiteReport {
    let mut rep = SuiteReport::new("character tables");
    for (name, g) in groups {
        let Some(t) = rep.record(CharacterTable::compute(g), || format!("{name}: table")) else {
            continue;
        };
        let f = *t.field();
        let k = t.len();
        rep.check(k == g.class_count(), || {
            format!("{name}: {k} characters for {} classes", g.class_count())
        });
        let deg2: usize = t.characters().iter().map(|c| c.degree * c.degree).sum();
        rep.check(deg2 == g.order(), || {
            format!("{name}: sum of squared degrees {deg2}")
        });
        for i in 0..k {
            for j in 0..k {
                let ip = inner_product_raw(&t.character(i), &t.character(j)).unwrap_or(u64::MAX);
                rep.check(ip == u64::from(i == j), || {
                    format!("{name}: <chi_{i}, chi_{j}> = {ip}")
                });
            }
        }
        for c in 0..g.class_count() {
            for d in 0..g.class_count() {
                let dc = g.inverse_class(d);
                let sum = (0..k).fold(0, |acc, i| {
                    let v = &t.characters()[i].values;
                    f.add(acc, f.mul(v[c], v[dc]))
                });
                let want = if c == d {
                    (g.order() / g.class_size(c)) as u64 % f.p
                } else {
                    0
                };
                rep.check(sum == want, || {
                    format!("{name}: column sum for classes {c}, {d}")
                });
            }
        }
        for (i, ch) in t.characters().iter().enumerate() {
            rep.check((-1..=1).contains(&ch.fs_indicator), || {
                format!("{name}: indicator {} of chi_{i}", ch.fs_indicator)
            });
            for (c, lift) in ch.lift.iter().enumerate() {
                rep.check(lift.evaluate(&f) == ch.values[c], || {
                    format!("{name}: lift of chi_{i} at class {c} does not evaluate back")
                });
            }
        }
    }
    rep
}

/// `<ind ψ, χ>_G = <ψ, res χ>_H` for irreducible `ψ`, `χ` over random
/// subgroups, and `ind ψ` is rebuilt from those multiplicities. `tamper` is
/// applied to each table of `G` before checking.
pub fn reciprocity_suite(
    groups: &[(String, Arc<FiniteGroup>)],
    seed: u64,
    tamper: &dyn Fn(CharacterTable) -> CharacterTable,
) -> SuiteReport {
    let mut rep = SuiteReport::new("Frobenius reciprocity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in groups {
        let Some(cache) = rep.record(TableCache::for_group(g), || format!("{name}: field")) else {
            continue;
        };
        let Some(gt) = rep.record(cache.table(g), || format!("{name}: table")) else {
            continue;
        };
        let gt = tamper((*gt).clone());
        for _ in 0..3 {
            let n = g.order();
            let seeds: Vec<usize> = (0..rng.gen_range(1..=2))
                .map(|_| rng.gen_range(0..n))
                .collect();
            let Some(h) = rep.record(Subgroup::generated(g, &seeds), || {
                format!("{name}: subgroup")
            }) else {
                continue;
            };
            let Some(ht) = rep.record(cache.table(h.group()), || format!("{name}: subgroup table"))
            else {
                continue;
            };
            for j in 0..ht.len() {
                let psi = ht.character(j);
                let Some(ind) = rep.record(induce(&psi, &h), || format!("{name}: induce")) else {
                    continue;
                };
                let f = *gt.field();
                let mut rebuilt = ind.scale(0);
                for i in 0..gt.len() {
                    let chi = gt.character(i);
                    let a = inner_product_raw(&ind, &chi);
                    let b = restrict(&chi, &h).and_then(|r| inner_product_raw(&psi, &r));
                    let ok = matches!((&a, &b), (Ok(x), Ok(y)) if x == y);
                    rep.check(ok, || {
                        format!(
                            "{name}: reciprocity fails for subgroup of order {}, psi_{j}, chi_{i}",
                            h.order()
                        )
                    });
                    if let Ok(a) = a {
                        let term = ClassFunction::new(
                            g,
                            f,
                            chi.values().iter().map(|&v| f.mul(v, a)).collect(),
                        );
                        if let Ok(sum) = term.and_then(|t| rebuilt.add(&t)) {
                            rebuilt = sum;
                        }
                    }
                }
                rep.check(rebuilt == ind, || {
                    format!(
                        "{name}: induced character of psi_{j} from a subgroup of order {} is not rebuilt from the table",
                        h.order()
                    )
                });
            }
        }
    }
    rep
}

/// Distinct subgroups generated by at most two elements, plus the group itself.
fn small_subgroups(g: &Arc<FiniteGroup>, cap: usize) -> Vec<Subgroup> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let n = g.order();
    let candidates = std::iter::once(Subgroup::whole(g)).chain(
        (0..n).flat_map(|a| (a..n).filter_map(move |b| Subgroup::generated(g, &[a, b]).ok())),
    );
    for s in candidates {
        if seen.insert(s.members().to_vec()) {
            out.push(s);
            if out.len() >= cap {
                break;
            }
        }
    }
    out
}

/// Index-2 subgroups as kernels of the real linear characters with values ±1.
fn index_two_subgroups(k: &Arc<FiniteGroup>, table: &CharacterTable) -> Vec<Subgroup> {
    let f = table.field();
    table
        .real_irreducibles()
        .iter()
        .filter(|r| r.real_degree == 1 && r.kind == RealType::Real)
        .filter_map(|r| {
            let kernel: Vec<usize> = (0..k.order())
                .filter(|&x| f.lift(r.character.at_element(x)) == 1)
                .collect();
            (kernel.len() * 2 == k.order()).then(|| Subgroup::from_members(k, &kernel).ok())?
        })
        .collect()
}

/// Every index-2 pair `H ⊂ K` and every `K`-invariant real irreducible of `H`:
/// the extension count satisfies all trichotomy constraints.
pub fn trichotomy_suite(groups: &[(String, Arc<FiniteGroup>)]) -> SuiteReport {
    let mut rep = SuiteReport::new("index-2 extension trichotomy");
    for (name, g) in groups {
        let Some(cache) = rep.record(TableCache::for_group(g), || format!("{name}: field")) else {
            continue;
        };
        for k in small_subgroups(g, 64) {
            let kg = k.group();
            let Some(kt) = rep.record(cache.table(kg), || format!("{name}: table")) else {
                continue;
            };
            for h in index_two_subgroups(kg, &kt) {
                let Some(ht) = rep.record(cache.table(h.group()), || format!("{name}: table"))
                else {
                    continue;
                };
                let outside = h.props().coset_reps[1];
                for (i, u) in ht.real_irreducibles().iter().enumerate() {
                    let u = crate::characters::RealIrreducible {
                        character: u.character.rehome(h.group()).expect("same structure"),
                        ..u.clone()
                    };
                    match conjugate_by(&u.character, &h, outside) {
                        Ok(c) if c == u.character => {}
                        _ => continue,
                    }
                    let r = count_extensions(&kt, &h, &u);
                    rep.check(r.is_ok(), || {
                        format!(
                            "{name}: subgroup of order {} in one of order {}, U_{i}: {}",
                            h.order(),
                            k.order(),
                            r.as_ref().err().map(|e| e.to_string()).unwrap_or_default()
                        )
                    });
                }
            }
        }
    }
    rep
}

/// All normal subgroups, as intersections of kernels of irreducible characters.
pub fn normal_subgroups(g: &Arc<FiniteGroup>, table: &CharacterTable) -> Vec<Subgroup> {
    let kernels: Vec<BTreeSet<usize>> = table
        .characters()
        .iter()
        .map(|c| {
            let d = c.values[g.class_of(0)];
            (0..g.order())
                .filter(|&x| c.values[g.class_of(x)] == d)
                .collect()
        })
        .collect();
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    all.insert((0..g.order()).collect());
    for k in &kernels {
        let current: Vec<Vec<usize>> = all.iter().cloned().collect();
        for s in current {
            let meet: Vec<usize> = s.into_iter().filter(|x| k.contains(x)).collect();
            all.insert(meet);
        }
    }
    all.into_iter()
        .filter_map(|m| Subgroup::from_members(g, &m).ok())
        .collect()
}

/// Order of `xN` in `G/N`.
fn coset_order(g: &FiniteGroup, n: &Subgroup, x: usize) -> usize {
    let mut y = x;
    let mut t = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        t += 1;
    }
    t
}

enum Quotient {
    CyclicOdd,
    /// Dihedral of order `2n`, `n` odd, with the preimage of the rotations.
    DihedralOdd(Subgroup),
    Other,
}

fn quotient_shape(g: &Arc<FiniteGroup>, n: &Subgroup) -> Quotient {
    let q = g.order() / n.order();
    if q % 2 == 1 {
        if (0..g.order()).any(|x| coset_order(g, n, x) == q) {
            return Quotient::CyclicOdd;
        }
        return Quotient::Other;
    }
    let half = q / 2;
    if half.is_multiple_of(2) {
        return Quotient::Other;
    }
    let Some(r) = (0..g.order()).find(|&x| coset_order(g, n, x) == half) else {
        return Quotient::Other;
    };
    let mut seeds = n.members().to_vec();
    seeds.push(r);
    let Ok(p) = Subgroup::generated(g, &seeds) else {
        return Quotient::Other;
    };
    let dihedral = (0..g.order())
        .filter(|&s| !p.contains(s))
        .all(|s| n.contains(g.mul(s, s)) && n.contains(g.mul(g.mul(s, r), g.mul(s, r))));
    if dihedral {
        Quotient::DihedralOdd(p)
    } else {
        Quotient::Other
    }
}

/// Normal pairs `N ◁ G` with odd cyclic quotient: every `G`-invariant real
/// irreducible of `N` extends, uniquely when of real type. Dihedral quotients
/// of order `2n`, `n` odd: the doubled module always extends, and the module
/// itself extends exactly when it extends to some index-2 overgroup of `N`.
pub fn extension_existence_suite(groups: &[(String, Arc<FiniteGroup>)]) -> SuiteReport {
    let mut rep = SuiteReport::new("extension existence and uniqueness");
    for (name, g) in groups {
        let Some(cache) = rep.record(TableCache::for_group(g), || format!("{name}: field")) else {
            continue;
        };
        let Some(gt) = rep.record(cache.table(g), || format!("{name}: table")) else {
            continue;
        };
        for n in normal_subgroups(g, &gt) {
            let shape = quotient_shape(g, &n);
            if matches!(shape, Quotient::Other) {
                continue;
            }
            let Some(nt) = rep.record(cache.table(n.group()), || format!("{name}: table")) else {
                continue;
            };
            let reps = n.props().coset_reps;
            for (i, u) in nt.real_irreducibles().iter().enumerate() {
                let chi = u.character.rehome(n.group()).expect("same structure");
                let invariant = reps
                    .iter()
                    .all(|&r| matches!(conjugate_by(&chi, &n, r), Ok(c) if c == chi));
                if !invariant {
                    continue;
                }
                let solutions = |target: &ClassFunction| {
                    solve_restriction_system(&cache, g, &[(n.clone(), target.clone())])
                };
                let ctx = || format!("{name}: normal subgroup of order {}, U_{i}", n.order());
                match &shape {
                    Quotient::CyclicOdd => {
                        let Some(sols) = rep.record(solutions(&chi), ctx) else {
                            continue;
                        };
                        let ok = !sols.is_empty() && (u.kind != RealType::Real || sols.len() == 1);
                        rep.check(ok, || {
                            format!(
                                "{}: {} extensions over an odd cyclic quotient",
                                ctx(),
                                sols.len()
                            )
                        });
                    }
                    Quotient::DihedralOdd(p) => {
                        let Some(doubled) = rep.record(solutions(&chi.scale(2)), ctx) else {
                            continue;
                        };
                        rep.check(!doubled.is_empty(), || {
                            format!("{}: doubled module does not extend", ctx())
                        });
                        let Some(single) = rep.record(solutions(&chi), ctx) else {
                            continue;
                        };
                        let mut via_overgroup = false;
                        for s in (0..g.order()).filter(|&s| !p.contains(s)) {
                            let mut seeds = n.members().to_vec();
                            seeds.push(s);
                            let Ok(k) = Subgroup::generated(g, &seeds) else {
                                continue;
                            };
                            let Ok(n_in_k) = n.relative_to(&k) else {
                                continue;
                            };
                            let target = chi.rehome(n_in_k.group()).expect("same structure");
                            if let Ok(sols) =
                                solve_restriction_system(&cache, k.group(), &[(n_in_k, target)])
                            {
                                if !sols.is_empty() {
                                    via_overgroup = true;
                                    break;
                                }
                            }
                        }
                        rep.check(via_overgroup == !single.is_empty(), || {
                            format!("{}: extendibility disagrees with index-2 overgroups", ctx())
                        });
                    }
                    Quotient::Other => {}
                }
            }
        }
    }
    rep
}

/// Distinct canonical actions obtained by sending each generator to a
/// rotation or reflection through a multiple of `1/exponent`.
pub fn enumerate_actions(g: &Arc<FiniteGroup>) -> Vec<CircleAction> {
    let e = g.exponent() as i64;
    let gens = g.generators();
    let choices: Vec<Vec<OrthogonalElement>> = gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x) as i64;
            let mut c: Vec<OrthogonalElement> = (0..o)
                .map(|k| OrthogonalElement::Rotation(Angle::new(k, o).expect("nonzero order")))
                .collect();
            if o % 2 == 0 {
                c.extend((0..e).map(|k| {
                    OrthogonalElement::Reflection(Angle::new(k, e).expect("nonzero exponent"))
                }));
            }
            c
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    loop {
        let assignment: Vec<OrthogonalElement> =
            idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Ok(a) = CircleAction::build(g, &assignment) {
            let key: Vec<OrthogonalElement> = (0..g.order()).map(|x| a.rho(x)).collect();
            if seen.insert(key) {
                out.push(a);
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

pub struct ActionSuites {
    pub suites: Vec<SuiteReport>,
    pub cells: BTreeSet<Cell>,
}

/// Classifies every enumerated action: feasibility of every class, counts
/// against enumeration for `m ≤ m_max`, and triviality conformance (asserted
/// inside the classifier), plus the sign-twist action on generators.
pub fn action_suites(groups: &[(String, Arc<FiniteGroup>)], m_max: usize) -> ActionSuites {
    let mut feas = SuiteReport::new("feasibility tables");
    let mut counting = SuiteReport::new("counts versus enumeration");
    let mut triv = SuiteReport::new("triviality conformance");
    let mut cells = BTreeSet::new();
    for (name, g) in groups {
        let Some(cache) = feas.record(TableCache::for_group(g), || format!("{name}: field")) else {
            continue;
        };
        let cache = Arc::new(cache);
        for action in enumerate_actions(g) {
            let desc = || {
                let imgs: Vec<String> = g
                    .generators()
                    .iter()
                    .map(|&x| action.rho(x).to_string())
                    .collect();
                format!("{name} with generators sent to [{}]", imgs.join(", "))
            };
            let report = match classify_with(&action, m_max, cache.clone()) {
                Ok(r) => r,
                Err(e) => {
                    let suite = if e.to_string().contains("triviality") {
                        &mut triv
                    } else {
                        &mut feas
                    };
                    suite.check(false, || format!("{}: {e}", desc()));
                    continue;
                }
            };
            for class in &report.classes {
                let kind = class.action.image().kind;
                cells.insert((kind, class.chi.kind, class.e_one, class.e_mu));
                feas.check(
                    crate::classifier::feasibility_check(
                        kind,
                        class.chi.kind,
                        class.e_one,
                        class.e_mu,
                    ),
                    || format!("{}: class {} infeasible", desc(), class.chi_index),
                );
                let pres = &class.presentation;
                for m in 1..=m_max {
                    let n = count_classes(class.case, class.e_one, class.e_mu, m);
                    let n_enum = enumerate_classes(pres, m);
                    let data = enumerate_fiber_data(pres, m);
                    counting.check(n == n_enum, || {
                        format!(
                            "{}: class {}, m = {m}: formula {n}, enumeration {n_enum}",
                            desc(),
                            class.chi_index
                        )
                    });
                    counting.check(data * class.gamma_multiplicity() == n, || {
                        format!(
                            "{}: class {}, m = {m}: {data} fiber data for N = {n}",
                            desc(),
                            class.chi_index
                        )
                    });
                }
                let tensor = check_tensor_action(class, &cache);
                counting.check(matches!(tensor, Ok(true)), || {
                    format!(
                        "{}: class {}: sign twists do not permute the generators",
                        desc(),
                        class.chi_index
                    )
                });
                let count = class.trivial.iter().filter(|&&t| t).count();
                if class.image_n() % 2 == 1 && class.case != Case::Generic {
                    triv.check(class.trivial == [true, false], || {
                        format!(
                            "{}: class {}: {count} trivial doubled generators",
                            desc(),
                            class.chi_index
                        )
                    });
                } else {
                    triv.check(true, String::new);
                }
            }
        }
    }
    for (e1, e2) in (0..=2).flat_map(|a| (0..=2).map(move |b| (a, b))) {
        if let Some(p) =
            counting.record(model_presentation(e1, e2), || format!("model ({e1}, {e2})"))
        {
            for m in 1..=m_max {
                let n = count_classes(Case::Generic, e1, e2, m);
                let got = enumerate_classes(&p, m);
                counting.check(n == got, || {
                    format!("model ({e1}, {e2}), m = {m}: formula {n}, enumeration {got}")
                });
            }
        }
    }
    ActionSuites {
        suites: vec![feas, counting, triv],
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn few() -> Vec<(String, Arc<FiniteGroup>)> {
        vec![
            ("S3".into(), catalog::symmetric(3)),
            ("Q8".into(), catalog::quaternion()),
            ("Z4".into(), catalog::cyclic(4)),
        ]
    }

    #[test]
    fn suites_pass_on_small_groups() {
        let groups = few();
        for rep in [
            character_table_suite(&groups),
            reciprocity_suite(&groups, 1, &|t| t),
            trichotomy_suite(&groups),
            extension_existence_suite(&groups),
        ] {
            assert!(rep.passed(), "{rep}");
            assert!(rep.checks > 0, "{rep}");
        }
        let a = action_suites(&groups, 6);
        for rep in &a.suites {
            assert!(rep.passed(), "{rep}");
        }
        assert!(a
            .cells
            .contains(&(ImageKind::Dihedral, RealType::Real, 0, 0)));
    }

    #[test]
    fn tampered_table_fails_reciprocity() {
        let groups = few();
        let rep = reciprocity_suite(&groups, 1, &|t| t.perturbed(1, 1));
        assert!(!rep.passed());
        assert!(rep.first_counterexample.is_some());
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = catalog::symmetric(3);
        let t = CharacterTable::compute(&g).unwrap();
        let mut orders: Vec<usize> = normal_subgroups(&g, &t).iter().map(|s| s.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn actions_of_z2() {
        let acts = enumerate_actions(&catalog::cyclic(2));
        // trivial, half turn, and two reflections
        assert_eq!(acts.len(), 3);
    }
}
