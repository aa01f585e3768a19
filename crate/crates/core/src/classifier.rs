//! Per-orbit classification of real `G`-vector bundles over `S(ρ)`.
//!
//! For each `G`-orbit of real irreducible characters `χ` of `H = ker ρ` the
//! pipeline restricts the action to the isotropy group `G_χ`, counts the
//! extensions of `χ` to the two special isotropy groups, builds the semigroup
//! presentation, counts isomorphism classes by fiber dimension and decides
//! which generators are trivial bundles.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::characters::{
    conjugate_by, inner_product, rep_semigroup_generators, solve_restriction_system,
    CharacterTable, ClassFunction, RealIrreducible, RealType, RepGenerator, RepGeneratorKind,
    TableCache,
};
use crate::circle::{CircleAction, ImageKind, OrthogonalElement};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Generic,
    CaseA,
    CaseB,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Generic => "generic",
            Case::CaseA => "A",
            Case::CaseB => "B",
        }
    }

    /// Number of bundle classes sharing one fiber datum.
    pub fn gamma_multiplicity(self) -> usize {
        match self {
            Case::Generic => 1,
            _ => 2,
        }
    }
}

/// Which of the five generator shapes a presentation has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    /// One generator `L`.
    Single,
    /// `L±`, no relation.
    Pair,
    /// `L~0, L~±` with `2 L~0 = L~+ + L~-`.
    Triple,
    /// `L±±` with `L++ + L-- = L+- + L-+`.
    Quadruple,
    /// `N±` or `M±` with `2X+ = 2X-`.
    Doubled,
}

/// A basic module at a special point: `χ` itself for a cyclic image, or an
/// extension `R`, `R±` of `χ`, or the induced module `R~`.
#[derive(Debug, Clone)]
pub struct BasicModule {
    pub label: &'static str,
    /// Multiple of `χ` in its restriction to `H`.
    pub mult: usize,
    pub character: ClassFunction,
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    /// Multiple of `χ` in the fiber `H`-module.
    pub fiber_mult: usize,
    /// Real dimension of the fiber.
    pub real_dim: usize,
    /// Fiber at `z = 1` as multiplicities of the basic modules there.
    pub at_one: Vec<usize>,
    /// Fiber at `z = μ` likewise, for a dihedral image.
    pub at_mu: Option<Vec<usize>>,
    /// Fiber module at `z = 1` as a character of `K₁` (of `H` for a cyclic image).
    pub fiber_at_one: ClassFunction,
    /// Fiber module at `z = μ` as a character of `K_μ`.
    pub fiber_at_mu: Option<ClassFunction>,
}

/// `Σ lhs_i g_i = Σ rhs_i g_i`, coefficients indexed like the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SemigroupPresentation {
    pub structure: Structure,
    pub basis_one: Vec<BasicModule>,
    pub basis_mu: Option<Vec<BasicModule>>,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

fn combine(basis: &[BasicModule], coeffs: &[usize]) -> Result<ClassFunction> {
    let mut acc = basis[0].character.scale(0);
    for (b, &c) in basis.iter().zip(coeffs) {
        acc = acc.add(&b.character.scale(c as i64))?;
    }
    Ok(acc)
}

fn weight(basis: &[BasicModule], coeffs: &[usize]) -> usize {
    basis.iter().zip(coeffs).map(|(b, &c)| b.mult * c).sum()
}

/// Name and coefficient vectors at `1` and `μ` of a generator to assemble.
type GeneratorSpec<'a> = (&'a str, Vec<usize>, Option<Vec<usize>>);

impl SemigroupPresentation {
    fn assemble(
        structure: Structure,
        chi: &RealIrreducible,
        basis_one: Vec<BasicModule>,
        basis_mu: Option<Vec<BasicModule>>,
        gens: Vec<GeneratorSpec>,
        relations: Vec<Relation>,
    ) -> Result<SemigroupPresentation> {
        let mut generators = Vec::new();
        for (name, at_one, at_mu) in gens {
            let fiber_mult = weight(&basis_one, &at_one);
            let fiber_at_mu = match (&basis_mu, &at_mu) {
                (Some(b), Some(c)) => Some(combine(b, c)?),
                _ => None,
            };
            generators.push(Generator {
                name: name.to_string(),
                fiber_mult,
                real_dim: fiber_mult * chi.real_degree,
                fiber_at_one: combine(&basis_one, &at_one)?,
                fiber_at_mu,
                at_one,
                at_mu,
            });
        }
        Ok(SemigroupPresentation {
            structure,
            basis_one,
            basis_mu,
            generators,
            relations,
        })
    }

    /// Each generator has the same multiple of `χ` at both points, and both
    /// sides of every relation carry the same fiber data.
    pub fn check_balance(&self) -> Result<()> {
        for g in &self.generators {
            if let (Some(b), Some(c)) = (&self.basis_mu, &g.at_mu) {
                if weight(b, c) != g.fiber_mult {
                    return Err(Error::internal(format!(
                        "generator {} has unequal fibers",
                        g.name
                    )));
                }
            }
        }
        for rel in &self.relations {
            let side = |coeffs: &[usize]| -> Result<(usize, FiberSum, Vec<u64>)> {
                let mult = coeffs
                    .iter()
                    .zip(&self.generators)
                    .map(|(&c, g)| c * g.fiber_mult)
                    .sum();
                let mut one = self.generators[0].fiber_at_one.scale(0);
                for (&c, g) in coeffs.iter().zip(&self.generators) {
                    one = one.add(&g.fiber_at_one.scale(c as i64))?;
                }
                Ok((mult, self.fiber_sum(coeffs), one.values().to_vec()))
            };
            if side(&rel.lhs)? != side(&rel.rhs)? {
                return Err(Error::internal("relation sides have different fiber data"));
            }
        }
        Ok(())
    }

    /// Fiber data of `Σ coeffs_i g_i` as multiplicities of the basic modules.
    pub fn fiber_sum(&self, coeffs: &[usize]) -> FiberSum {
        let mut one = vec![0; self.basis_one.len()];
        let mut mu = self.basis_mu.as_ref().map(|b| vec![0; b.len()]);
        for (&c, g) in coeffs.iter().zip(&self.generators) {
            for (acc, &x) in one.iter_mut().zip(&g.at_one) {
                *acc += c * x;
            }
            if let (Some(acc), Some(at)) = (mu.as_mut(), g.at_mu.as_ref()) {
                for (a, &x) in acc.iter_mut().zip(at) {
                    *a += c * x;
                }
            }
        }
        (one, mu)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }
}

/// Fiber data at `1` and at `μ` as multiplicities of the basic modules.
pub type FiberSum = (Vec<usize>, Option<Vec<usize>>);

#[derive(Debug, Clone)]
pub struct IsotypicalClass {
    /// Index of the orbit representative among the real irreducibles of `H`.
    pub chi_index: usize,
    pub chi: RealIrreducible,
    /// Indices of the whole orbit, ascending.
    pub orbit: Vec<usize>,
    /// `G_χ` as a subgroup of `G`.
    pub isotropy: Subgroup,
    /// The action of `G_χ`, in its own canonical coordinates.
    pub action: CircleAction,
    pub e_one: usize,
    pub e_mu: usize,
    pub case: Case,
    pub presentation: SemigroupPresentation,
    pub trivial: Vec<bool>,
    /// `counts[m - 1] = N(m)`.
    pub counts: Vec<usize>,
}

impl IsotypicalClass {
    pub fn gamma_multiplicity(&self) -> usize {
        self.case.gamma_multiplicity()
    }

    pub fn image_n(&self) -> usize {
        self.action.image().n
    }
}

#[derive(Debug, Clone)]
pub struct LineBundle {
    pub name: String,
    pub trivial: bool,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub action: CircleAction,
    pub tables: Arc<TableCache>,
    pub h_table: Arc<CharacterTable>,
    pub line_bundles: Vec<LineBundle>,
    pub classes: Vec<IsotypicalClass>,
    pub m_bound: usize,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.action.group()
    }
}

/// Builds the action from per-generator images and classifies it.
pub fn classify(
    group: &Arc<FiniteGroup>,
    assignment: &[OrthogonalElement],
    m_bound: usize,
) -> Result<Report> {
    let action = CircleAction::build(group, assignment)?;
    classify_action(&action, m_bound)
}

pub fn classify_action(action: &CircleAction, m_bound: usize) -> Result<Report> {
    let cache = Arc::new(TableCache::for_group(action.group())?);
    classify_with(action, m_bound, cache)
}

/// Classification sharing a table cache with the caller.
pub fn classify_with(
    action: &CircleAction,
    m_bound: usize,
    cache: Arc<TableCache>,
) -> Result<Report> {
    let h_table = cache.table(action.kernel().group())?;
    let mut classes = Vec::new();
    for (chi_index, orbit, isotropy) in real_irr_orbits(action, &h_table)? {
        classes.push(classify_orbit(
            action, &cache, &h_table, chi_index, orbit, isotropy, m_bound,
        )?);
    }
    let trivial_index = h_table.trivial_real();
    let line = classes
        .iter()
        .find(|c| c.chi_index == trivial_index)
        .ok_or_else(|| Error::internal("no class for the trivial character"))?;
    let line_bundles = line_bundle_table(line)?;
    let warnings = classes
        .iter()
        .filter(|c| c.case == Case::CaseB)
        .map(|c| {
            format!(
                "class {}: case B fibers are 2k copies of the character, so N(m) = 0 is reported for odd m",
                c.chi_index
            )
        })
        .collect();
    Ok(Report {
        action: action.clone(),
        tables: cache,
        h_table,
        line_bundles,
        classes,
        m_bound,
        warnings,
    })
}

/// Orbits of `G` on the real irreducibles of `H` by conjugation. Each entry is
/// (least index in the orbit, the orbit, isotropy subgroup of that member).
pub fn real_irr_orbits(
    action: &CircleAction,
    h_table: &CharacterTable,
) -> Result<Vec<(usize, Vec<usize>, Subgroup)>> {
    let g = action.group();
    let h = action.kernel();
    let reps = h.props().coset_reps;
    let real = h_table.real_irreducibles();
    let mut seen = vec![false; real.len()];
    let mut out = Vec::new();
    for i in 0..real.len() {
        if seen[i] {
            continue;
        }
        let chi = &real[i].character;
        let mut orbit = BTreeSet::new();
        let mut fixing = Vec::new();
        for &r in &reps {
            let moved = conjugate_by(chi, h, r)?;
            let j = h_table.find_real(&moved).ok_or_else(|| {
                Error::internal("conjugate of a real irreducible is not irreducible")
            })?;
            orbit.insert(j);
            if j == i {
                fixing.push(r);
            }
        }
        let members: Vec<usize> = fixing
            .iter()
            .flat_map(|&r| h.members().iter().map(move |&x| g.mul(r, x)))
            .collect();
        let isotropy = Subgroup::from_members(g, &members)?;
        for &j in &orbit {
            seen[j] = true;
        }
        out.push((i, orbit.into_iter().collect(), isotropy));
    }
    Ok(out)
}

fn classify_orbit(
    action: &CircleAction,
    cache: &TableCache,
    h_table: &CharacterTable,
    chi_index: usize,
    orbit: Vec<usize>,
    isotropy: Subgroup,
    m_bound: usize,
) -> Result<IsotypicalClass> {
    let chi = h_table.real_irreducibles()[chi_index].clone();
    let restricted = action.restrict_to(&isotropy)?;
    let h_local = restricted.kernel();
    if !h_local.group().same_as(action.kernel().group()) {
        return Err(Error::internal(
            "kernel changed under restriction to the isotropy group",
        ));
    }
    let points = special_points(&restricted, cache, &chi)?;
    let (e_one, e_mu) = match &points {
        Points::Cyclic => (1, 1),
        Points::Dihedral { one, mu } => (one.0.e, mu.0.e),
    };
    let kind = restricted.image().kind;
    if !feasibility_check(kind, chi.kind, e_one, e_mu) {
        return Err(Error::internal(format!(
            "infeasible extension numbers ({e_one}, {e_mu}) for a {} character over a {} image",
            chi.kind.name(),
            kind.name()
        )));
    }
    let case = detect_case(kind, chi.kind, e_one, e_mu);
    let presentation = vect_presentation(case, &chi, &points)?;
    presentation.check_balance()?;
    let trivial = generator_triviality(cache, &restricted, &presentation, case)?;
    let counts = (1..=m_bound)
        .map(|m| count_classes(case, e_one, e_mu, m))
        .collect();
    Ok(IsotypicalClass {
        chi_index,
        chi,
        orbit,
        isotropy,
        action: restricted,
        e_one,
        e_mu,
        case,
        presentation,
        trivial,
        counts,
    })
}

type PointData = (crate::characters::ExtensionCount, Vec<RepGenerator>);

enum Points {
    Cyclic,
    Dihedral {
        one: Box<PointData>,
        mu: Box<PointData>,
    },
}

fn special_points(
    action: &CircleAction,
    cache: &TableCache,
    chi: &RealIrreducible,
) -> Result<Points> {
    if action.image().kind == ImageKind::Cyclic {
        return Ok(Points::Cyclic);
    }
    let at = |k: &Subgroup| -> Result<PointData> {
        let h_in_k = action.kernel().relative_to(k)?;
        let k_table = cache.table(k.group())?;
        let u = RealIrreducible {
            character: chi.character.rehome(h_in_k.group())?,
            ..chi.clone()
        };
        rep_semigroup_generators(&k_table, &h_in_k, &u)
    };
    let one = at(action.stab_one())?;
    let mu = at(action
        .stab_mu()
        .expect("dihedral action has a μ stabilizer"))?;
    Ok(Points::Dihedral {
        one: Box::new(one),
        mu: Box::new(mu),
    })
}

/// Extension numbers `(e₁, e_μ)` of the class; `(1, 1)` for a cyclic image.
pub fn extension_numbers(
    action: &CircleAction,
    cache: &TableCache,
    chi: &RealIrreducible,
) -> Result<(usize, usize)> {
    Ok(match special_points(action, cache, chi)? {
        Points::Cyclic => (1, 1),
        Points::Dihedral { one, mu } => (one.0.e, mu.0.e),
    })
}

pub fn detect_case(kind: ImageKind, chi_type: RealType, e_one: usize, e_mu: usize) -> Case {
    match (kind, chi_type) {
        (ImageKind::Cyclic, RealType::Real) => Case::CaseA,
        (ImageKind::Dihedral, RealType::Real) if e_one == 0 && e_mu == 0 => Case::CaseB,
        _ => Case::Generic,
    }
}

/// Whether `(e₁, e_μ)` can occur for the given image kind and type of `χ`.
pub fn feasibility_check(kind: ImageKind, chi_type: RealType, e_one: usize, e_mu: usize) -> bool {
    if e_one > 2 || e_mu > 2 {
        return false;
    }
    match kind {
        ImageKind::Cyclic => (e_one, e_mu) == (1, 1),
        ImageKind::Dihedral => match chi_type {
            RealType::Real => e_one != 1 && e_mu != 1,
            RealType::Complex => true,
            RealType::Quaternionic => e_one != 0 && e_mu != 0,
        },
    }
}

fn basis_of(gens: &[RepGenerator]) -> Vec<BasicModule> {
    gens.iter()
        .map(|g| {
            let (label, mult) = match g.kind {
                RepGeneratorKind::Induced => ("R~", 2),
                RepGeneratorKind::Unique => ("R", 1),
                RepGeneratorKind::Plus => ("R+", 1),
                RepGeneratorKind::Minus => ("R-", 1),
            };
            BasicModule {
                label,
                mult,
                character: g.character.clone(),
            }
        })
        .collect()
}

/// Generators and relations of the pairs of `K₁`- and `K_μ`-modules of equal
/// dimension restricting to multiples of `χ`, named as bundle generators.
pub fn pair_presentation(
    chi: &RealIrreducible,
    one: &[RepGenerator],
    mu: &[RepGenerator],
) -> Result<SemigroupPresentation> {
    let (b1, b2) = (basis_of(one), basis_of(mu));
    let shape = (b1.len(), b1[0].mult, b2.len(), b2[0].mult);
    let v = |x: &[usize]| x.to_vec();
    let triple_rel = || Relation {
        lhs: vec![2, 0, 0],
        rhs: vec![0, 1, 1],
    };
    let (structure, gens, relations) = match shape {
        (1, m1, 1, m2) => {
            let mult = m1.max(m2);
            (
                Structure::Single,
                vec![("L", vec![mult / m1], Some(vec![mult / m2]))],
                vec![],
            )
        }
        (2, _, 1, 1) => (
            Structure::Pair,
            vec![
                ("L+", v(&[1, 0]), Some(v(&[1]))),
                ("L-", v(&[0, 1]), Some(v(&[1]))),
            ],
            vec![],
        ),
        (1, 1, 2, _) => (
            Structure::Pair,
            vec![
                ("L+", v(&[1]), Some(v(&[1, 0]))),
                ("L-", v(&[1]), Some(v(&[0, 1]))),
            ],
            vec![],
        ),
        (2, _, 1, 2) => (
            Structure::Triple,
            vec![
                ("L~0", v(&[1, 1]), Some(v(&[1]))),
                ("L~+", v(&[2, 0]), Some(v(&[1]))),
                ("L~-", v(&[0, 2]), Some(v(&[1]))),
            ],
            vec![triple_rel()],
        ),
        (1, 2, 2, _) => (
            Structure::Triple,
            vec![
                ("L~0", v(&[1]), Some(v(&[1, 1]))),
                ("L~+", v(&[1]), Some(v(&[2, 0]))),
                ("L~-", v(&[1]), Some(v(&[0, 2]))),
            ],
            vec![triple_rel()],
        ),
        (2, _, 2, _) => (
            Structure::Quadruple,
            vec![
                ("L++", v(&[1, 0]), Some(v(&[1, 0]))),
                ("L+-", v(&[1, 0]), Some(v(&[0, 1]))),
                ("L-+", v(&[0, 1]), Some(v(&[1, 0]))),
                ("L--", v(&[0, 1]), Some(v(&[0, 1]))),
            ],
            vec![Relation {
                lhs: vec![1, 0, 0, 1],
                rhs: vec![0, 1, 1, 0],
            }],
        ),
        _ => {
            return Err(Error::internal(format!(
                "unexpected generator shape {shape:?}"
            )))
        }
    };
    SemigroupPresentation::assemble(structure, chi, b1, Some(b2), gens, relations)
}

/// A presentation of the shape belonging to `(e₁, e_μ)` whose fiber data are
/// placeholder integers on the trivial group, chosen so that distinct
/// extensions stay distinguishable. Meant for counting only.
pub fn model_presentation(e_one: usize, e_mu: usize) -> Result<SemigroupPresentation> {
    if e_one > 2 || e_mu > 2 {
        return Err(Error::InvalidArgument(format!(
            "extension numbers ({e_one}, {e_mu}) out of range"
        )));
    }
    let g = crate::catalog::trivial();
    let field = crate::field::FieldContext::for_group(1, 1 << 20)?;
    let cf = |v: i64| ClassFunction::from_ints(&g, field, &[v]);
    let point = |e: usize, base: i64| -> Result<Vec<RepGenerator>> {
        let rg = |kind, v: i64, real_dim| -> Result<RepGenerator> {
            Ok(RepGenerator {
                kind,
                character: cf(v)?,
                real_dim,
            })
        };
        Ok(match e {
            0 => vec![rg(RepGeneratorKind::Induced, base + base * 1000, 2)?],
            1 => vec![rg(RepGeneratorKind::Unique, base, 1)?],
            _ => vec![
                rg(RepGeneratorKind::Plus, base, 1)?,
                rg(RepGeneratorKind::Minus, base * 1000, 1)?,
            ],
        })
    };
    let table = CharacterTable::compute_in(&g, field)?;
    let chi = table.real_irreducibles()[0].clone();
    pair_presentation(&chi, &point(e_one, 1)?, &point(e_mu, 7)?)
}

fn doubled(
    names: [&str; 2],
    chi: &RealIrreducible,
    one: BasicModule,
    mu: Option<BasicModule>,
) -> Result<SemigroupPresentation> {
    let at_mu = mu.as_ref().map(|_| vec![1]);
    SemigroupPresentation::assemble(
        Structure::Doubled,
        chi,
        vec![one],
        mu.map(|m| vec![m]),
        vec![
            (names[0], vec![1], at_mu.clone()),
            (names[1], vec![1], at_mu),
        ],
        vec![Relation {
            lhs: vec![2, 0],
            rhs: vec![0, 2],
        }],
    )
}

fn vect_presentation(
    case: Case,
    chi: &RealIrreducible,
    points: &Points,
) -> Result<SemigroupPresentation> {
    let own = || BasicModule {
        label: "U",
        mult: 1,
        character: chi.character.clone(),
    };
    let induced = |d: &PointData| BasicModule {
        label: "R~",
        mult: 2,
        character: d.0.induced.clone(),
    };
    match (case, points) {
        (Case::CaseA, Points::Cyclic) => doubled(["N+", "N-"], chi, own(), None),
        (Case::Generic, Points::Cyclic) => SemigroupPresentation::assemble(
            Structure::Single,
            chi,
            vec![own()],
            None,
            vec![("L", vec![1], None)],
            vec![],
        ),
        (Case::CaseB, Points::Dihedral { one, mu }) => {
            doubled(["M+", "M-"], chi, induced(one), Some(induced(mu)))
        }
        (Case::Generic, Points::Dihedral { one, mu }) => pair_presentation(chi, &one.1, &mu.1),
        _ => Err(Error::internal("case does not match the image kind")),
    }
}

/// `N(m)`: isomorphism classes with `mχ` as fiber character.
pub fn count_classes(case: Case, e_one: usize, e_mu: usize, m: usize) -> usize {
    let odd = m % 2 == 1;
    match case {
        Case::CaseA => 2,
        Case::CaseB => {
            if odd {
                0
            } else {
                2
            }
        }
        Case::Generic => {
            if odd && e_one * e_mu == 0 {
                return 0;
            }
            match (e_one, e_mu) {
                (2, 2) => (m + 1) * (m + 1),
                (2, 0) | (0, 2) | (2, 1) | (1, 2) => m + 1,
                _ => 1,
            }
        }
    }
}

/// Coefficient vectors `a` with `Σ a_i · fiber_mult_i = m`.
fn combinations(pres: &SemigroupPresentation, m: usize) -> Vec<Vec<usize>> {
    fn rec(w: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left / w[i] {
            cur.push(a);
            rec(w, i + 1, left - a * w[i], cur, out);
            cur.pop();
        }
    }
    let w: Vec<usize> = pres.generators.iter().map(|g| g.fiber_mult).collect();
    let mut out = Vec::new();
    rec(&w, 0, m, &mut Vec::new(), &mut out);
    out
}

/// Elements of total fiber multiplicity `m` modulo the congruence generated by
/// the relations, counted by union-find.
pub fn enumerate_classes(pres: &SemigroupPresentation, m: usize) -> usize {
    let elems = combinations(pres, m);
    let index: HashMap<&[usize], usize> = elems
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let mut parent: Vec<usize> = (0..elems.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, v) in elems.iter().enumerate() {
        for rel in &pres.relations {
            for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                if v.iter().zip(from.iter()).all(|(a, b)| a >= b) {
                    let w: Vec<usize> = v
                        .iter()
                        .zip(from)
                        .zip(to)
                        .map(|((a, b), c)| a - b + c)
                        .collect();
                    let j = index[w.as_slice()];
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    (0..elems.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// Distinct fiber data among elements of total fiber multiplicity `m`.
pub fn enumerate_fiber_data(pres: &SemigroupPresentation, m: usize) -> usize {
    combinations(pres, m)
        .iter()
        .map(|v| pres.fiber_sum(v))
        .collect::<BTreeSet<_>>()
        .len()
}

/// The restriction constraints a `G_χ`-module must satisfy to realize a
/// generator as a product bundle.
fn constraints(action: &CircleAction, g: &Generator) -> Vec<(Subgroup, ClassFunction)> {
    let mut out = vec![(action.stab_one().clone(), g.fiber_at_one.clone())];
    if let (Some(k), Some(f)) = (action.stab_mu(), g.fiber_at_mu.as_ref()) {
        out.push((k.clone(), f.clone()));
    }
    out
}

/// Triviality of each generator, decided by the existence of a `G_χ`-module
/// with the generator's fiber data, then checked against the known counts.
pub fn generator_triviality(
    cache: &TableCache,
    action: &CircleAction,
    pres: &SemigroupPresentation,
    case: Case,
) -> Result<Vec<bool>> {
    let mut out = Vec::with_capacity(pres.generators.len());
    for g in &pres.generators {
        let sols = solve_restriction_system(cache, action.group(), &constraints(action, g))?;
        out.push(!sols.is_empty());
    }
    let n_odd = action.image().n % 2 == 1;
    let fail = |msg: &str| Err(Error::internal(format!("triviality conformance: {msg}")));
    if case != Case::Generic {
        // Both generators share their fiber data; at most one is a product
        // bundle when n is odd, and then it is labeled "+".
        if n_odd {
            if !out[0] {
                return fail("no module extends the fiber for odd n");
            }
            out[1] = false;
        }
        return Ok(out);
    }
    let count = out.iter().filter(|&&t| t).count();
    if n_odd {
        let ok = match pres.structure {
            Structure::Quadruple => count == 2,
            _ => count == out.len(),
        };
        if !ok {
            return fail(&format!(
                "{count} of {} generators trivial for odd n",
                out.len()
            ));
        }
    } else {
        let uniform: Vec<bool> = pres
            .generators
            .iter()
            .zip(&out)
            .filter(|(g, _)| g.name != "L~0")
            .map(|(_, &t)| t)
            .collect();
        if uniform.iter().any(|&t| t != uniform[0]) {
            return fail("generators not uniformly trivial for even n");
        }
    }
    Ok(out)
}

/// Triviality of the line bundles with trivial fiber `H`-module.
pub fn line_bundle_table(trivial_class: &IsotypicalClass) -> Result<Vec<LineBundle>> {
    let out: Vec<LineBundle> = trivial_class
        .presentation
        .generators
        .iter()
        .zip(&trivial_class.trivial)
        .map(|(g, &trivial)| LineBundle {
            name: g.name.clone(),
            trivial,
        })
        .collect();
    let n_even = trivial_class.image_n().is_multiple_of(2);
    let want: Vec<bool> = match (trivial_class.action.image().kind, n_even) {
        (_, true) => vec![true; out.len()],
        (ImageKind::Cyclic, false) => vec![true, false],
        (ImageKind::Dihedral, false) => out
            .iter()
            .map(|l| l.name == "L++" || l.name == "L--")
            .collect(),
    };
    if out.iter().map(|l| l.trivial).collect::<Vec<_>>() != want {
        return Err(Error::internal(
            "line-bundle triviality disagrees with the expected pattern",
        ));
    }
    Ok(out)
}

/// Checks that twisting fibers by the sign characters of `K₁/H` and `K_μ/H`
/// permutes the generators transitively, with `L~0` fixed.
pub fn check_tensor_action(class: &IsotypicalClass, cache: &TableCache) -> Result<bool> {
    let action = &class.action;
    let (Some(kmu), ImageKind::Dihedral) = (action.stab_mu(), action.image().kind) else {
        return Ok(true);
    };
    if class.case != Case::Generic {
        return Ok(true);
    }
    let field = *cache.field();
    let sign = |k: &Subgroup| -> Result<ClassFunction> {
        let h = action.kernel().relative_to(k)?;
        Ok(crate::characters::quotient_sign(&h, field))
    };
    let (s1, s2) = (sign(action.stab_one())?, sign(kmu)?);
    let pres = &class.presentation;
    let key = |a: &ClassFunction, b: &ClassFunction| (a.values().to_vec(), b.values().to_vec());
    let keys: Vec<_> = pres
        .generators
        .iter()
        .map(|g| key(&g.fiber_at_one, g.fiber_at_mu.as_ref().unwrap()))
        .collect();
    let mut moving = BTreeSet::new();
    for (g, k) in pres.generators.iter().zip(&keys) {
        let mu = g.fiber_at_mu.as_ref().unwrap();
        let mut orbit = BTreeSet::new();
        for (t1, t2) in [(false, false), (true, false), (false, true), (true, true)] {
            let a = if t1 {
                g.fiber_at_one.mul(&s1.rehome(g.fiber_at_one.group())?)?
            } else {
                g.fiber_at_one.clone()
            };
            let b = if t2 {
                mu.mul(&s2.rehome(mu.group())?)?
            } else {
                mu.clone()
            };
            let image = key(&a, &b);
            match keys.iter().position(|x| *x == image) {
                Some(j) => orbit.insert(j),
                None => return Ok(false),
            };
        }
        if g.name == "L~0" {
            if orbit.len() != 1 || !orbit.contains(&keys.iter().position(|x| x == k).unwrap()) {
                return Ok(false);
            }
        } else {
            moving.insert(orbit);
        }
    }
    let expected = pres.generators.iter().filter(|g| g.name != "L~0").count();
    Ok(moving.len() == 1 && moving.iter().next().unwrap().len() == expected)
}

/// Multiplicities of the real irreducibles of `table` in a real character.
pub fn real_constituents(
    chi: &ClassFunction,
    table: &CharacterTable,
) -> Result<Vec<(usize, usize)>> {
    let chi = chi.rehome(table.group())?;
    let mut out = Vec::new();
    let mut rebuilt = chi.scale(0);
    for (i, r) in table.real_irreducibles().iter().enumerate() {
        let ip = inner_product(&chi, &r.character)?;
        let d = r.schur_dim() as i64;
        if ip < 0 || ip % d != 0 {
            return Err(Error::InvalidArgument(
                "not the character of a real module".into(),
            ));
        }
        if ip > 0 {
            out.push((i, (ip / d) as usize));
            rebuilt = rebuilt.add(&r.character.scale(ip / d))?;
        }
    }
    if rebuilt != chi {
        return Err(Error::InvalidArgument(
            "not the character of a real module".into(),
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexStructureCounts {
    /// Components of the space of complex structures on `ℂᵏ` viewed as `ℝ^{2k}`
    /// with a fixed invariant complex structure.
    pub cplx_components: usize,
    pub real_components: usize,
    /// How the complex components fall into the two real ones.
    pub distribution: (usize, usize),
    pub cs_values: Vec<usize>,
}

pub fn complex_structure_counts(k: i64) -> Result<ComplexStructureCounts> {
    if k <= 0 {
        return Err(Error::InvalidArgument(format!(
            "k must be positive, got {k}"
        )));
    }
    let k = k as usize;
    let (distribution, cs_values) = if k % 2 == 1 {
        ((k.div_ceil(2), k.div_ceil(2)), vec![(k + 1) * (k + 1) / 2])
    } else {
        let base = k * (k / 2 + 1);
        ((k / 2, k / 2 + 1), vec![base, base + 1])
    };
    Ok(ComplexStructureCounts {
        cplx_components: k + 1,
        real_components: 2,
        distribution,
        cs_values,
    })
}
