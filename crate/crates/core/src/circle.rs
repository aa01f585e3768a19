//! Exact arithmetic in `O(2)` on rational angles, and circle actions
//! `ρ: G → O(2)` of finite groups.
//!
//! `Rotation(q)` is rotation by `2πq`. `Reflection(q)` is the matrix
//! `[[cos 2πq, sin 2πq], [sin 2πq, −cos 2πq]]`, i.e. `z ↦ e^{2πiq} z̄`, the
//! reflection across the line at angle `πq`. `Reflection(0)` fixes `z = 1` and
//! `Reflection(1/n)` fixes `μ = e^{πi/n}`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// A rational angle measured in full turns, reduced into `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Ratio<i64>);

impl Angle {
    pub const ZERO: Angle = Angle(Ratio::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Angle> {
        if denom == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Angle::reduce(Ratio::new(numer, denom)))
    }

    fn reduce(r: Ratio<i64>) -> Angle {
        let floor = r.floor();
        Angle(r - floor)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// `self / 2` taken in `[0, 1/2)`.
    pub fn half(self) -> Angle {
        Angle::reduce(self.0 / 2)
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }
}

impl ops::Add for Angle {
    type Output = Angle;

    fn add(self, other: Angle) -> Angle {
        Angle::reduce(self.0 + other.0)
    }
}

impl ops::Sub for Angle {
    type Output = Angle;

    fn sub(self, other: Angle) -> Angle {
        Angle::reduce(self.0 - other.0)
    }
}

impl ops::Neg for Angle {
    type Output = Angle;

    fn neg(self) -> Angle {
        Angle::reduce(-self.0)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts `"p/q"` or `"p"` with decimal integers; reduces mod 1.
    fn from_str(s: &str) -> Result<Angle> {
        let bad = || Error::InvalidArgument(format!("malformed rational {s:?}"));
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Angle::new(p, q)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum OrthogonalElement {
    Rotation(Angle),
    Reflection(Angle),
}

impl OrthogonalElement {
    pub const IDENTITY: OrthogonalElement = OrthogonalElement::Rotation(Angle::ZERO);

    pub fn rotation(numer: i64, denom: i64) -> Result<Self> {
        Ok(OrthogonalElement::Rotation(Angle::new(numer, denom)?))
    }

    pub fn reflection(numer: i64, denom: i64) -> Result<Self> {
        Ok(OrthogonalElement::Reflection(Angle::new(numer, denom)?))
    }

    /// Group law: `self · other` (apply `other` first).
    pub fn compose(self, other: OrthogonalElement) -> OrthogonalElement {
        use OrthogonalElement::*;
        match (self, other) {
            (Rotation(a), Rotation(b)) => Rotation(a + b),
            (Rotation(a), Reflection(s)) => Reflection(a + s),
            (Reflection(s), Rotation(a)) => Reflection(s - a),
            (Reflection(s), Reflection(t)) => Rotation(s - t),
        }
    }

    pub fn inverse(self) -> OrthogonalElement {
        match self {
            OrthogonalElement::Rotation(a) => OrthogonalElement::Rotation(-a),
            r @ OrthogonalElement::Reflection(_) => r,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn is_reflection(&self) -> bool {
        matches!(self, OrthogonalElement::Reflection(_))
    }

    pub fn angle(&self) -> Angle {
        match self {
            OrthogonalElement::Rotation(a) | OrthogonalElement::Reflection(a) => *a,
        }
    }

    /// `Rot(a) · self · Rot(-a)`.
    pub fn conjugate_by_rotation(self, a: Angle) -> OrthogonalElement {
        OrthogonalElement::Rotation(a)
            .compose(self)
            .compose(OrthogonalElement::Rotation(-a))
    }
}

impl fmt::Display for OrthogonalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthogonalElement::Rotation(a) => write!(f, "Rot({a})"),
            OrthogonalElement::Reflection(a) => write!(f, "Refl({a})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ImageKind {
    Cyclic,
    Dihedral,
}

impl ImageKind {
    pub fn name(self) -> &'static str {
        match self {
            ImageKind::Cyclic => "cyclic",
            ImageKind::Dihedral => "dihedral",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Image {
    pub kind: ImageKind,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialPoint {
    One,
    Mu,
}

/// A homomorphism `ρ: G → O(2)` in canonical coordinates, with its kernel and
/// the isotropy subgroups of the special points.
#[derive(Debug, Clone)]
pub struct CircleAction {
    group: Arc<FiniteGroup>,
    rho: Vec<OrthogonalElement>,
    kernel: Subgroup,
    image: Image,
    offset: Angle,
    stab_one: Subgroup,
    stab_mu: Option<Subgroup>,
}

impl CircleAction {
    /// Extends a per-generator assignment along the closure words and
    /// canonicalizes the result.
    pub fn build(
        group: &Arc<FiniteGroup>,
        assignment: &[OrthogonalElement],
    ) -> Result<CircleAction> {
        let gens = group.generators();
        if assignment.len() != gens.len() {
            return Err(Error::GeneratorCountMismatch {
                expected: gens.len(),
                got: assignment.len(),
            });
        }
        let n = group.order();
        let mut rho = vec![OrthogonalElement::IDENTITY; n];
        for k in 1..n {
            let (par, g) = group.route(k).expect("non-identity element has a route");
            rho[k] = rho[par].compose(assignment[g]);
        }
        // Every edge x -> x∘g must agree; this makes rho a homomorphism.
        for x in 0..n {
            for (g, &ge) in gens.iter().enumerate() {
                let y = group.mul(x, ge);
                if rho[y] != rho[x].compose(assignment[g]) {
                    return Err(Error::InconsistentAction { element: y });
                }
            }
        }
        Self::from_images(group, rho, Angle::ZERO)
    }

    /// Builds from a full element → O(2) map already known to be a homomorphism.
    fn from_images(
        group: &Arc<FiniteGroup>,
        rho: Vec<OrthogonalElement>,
        offset: Angle,
    ) -> Result<CircleAction> {
        let kernel_members: Vec<usize> = (0..group.order())
            .filter(|&i| rho[i].is_identity())
            .collect();
        let kernel = Subgroup::from_members(group, &kernel_members)?;
        Self::assemble(group, rho, kernel, offset)
    }

    fn assemble(
        group: &Arc<FiniteGroup>,
        rho: Vec<OrthogonalElement>,
        kernel: Subgroup,
        offset: Angle,
    ) -> Result<CircleAction> {
        let distinct: BTreeSet<OrthogonalElement> = rho.iter().copied().collect();
        let rotations = distinct.iter().filter(|e| !e.is_reflection()).count();
        let has_reflection = distinct.iter().any(|e| e.is_reflection());
        let image = if has_reflection {
            Image {
                kind: ImageKind::Dihedral,
                n: rotations,
            }
        } else {
            Image {
                kind: ImageKind::Cyclic,
                n: rotations,
            }
        };
        // Canonical coordinates: conjugate so the smallest reflection becomes Refl(0).
        let (rho, offset) = match image.kind {
            ImageKind::Cyclic => (rho, offset),
            ImageKind::Dihedral => {
                let s0 = distinct
                    .iter()
                    .filter(|e| e.is_reflection())
                    .map(|e| e.angle())
                    .min()
                    .expect("dihedral image has a reflection");
                let a = -s0.half();
                let rho: Vec<_> = rho
                    .into_iter()
                    .map(|e| e.conjugate_by_rotation(a))
                    .collect();
                (rho, offset + a)
            }
        };
        let pick = |allowed: &[OrthogonalElement]| -> Result<Subgroup> {
            let members: Vec<usize> = (0..group.order())
                .filter(|&i| allowed.contains(&rho[i]))
                .collect();
            Subgroup::from_members(group, &members)
        };
        let (stab_one, stab_mu) = match image.kind {
            ImageKind::Cyclic => (kernel.clone(), None),
            ImageKind::Dihedral => {
                let mu_refl = OrthogonalElement::Reflection(Angle::new(1, image.n as i64)?);
                let one = pick(&[
                    OrthogonalElement::IDENTITY,
                    OrthogonalElement::Reflection(Angle::ZERO),
                ])?;
                let mu = pick(&[OrthogonalElement::IDENTITY, mu_refl])?;
                (one, Some(mu))
            }
        };
        let action = CircleAction {
            group: group.clone(),
            rho,
            kernel,
            image,
            offset,
            stab_one,
            stab_mu,
        };
        action.check_canonical()?;
        Ok(action)
    }

    fn check_canonical(&self) -> Result<()> {
        let h = self.kernel.order();
        match self.image.kind {
            ImageKind::Cyclic => {
                if self.group.order() != h * self.image.n {
                    return Err(Error::internal("G/H does not match the cyclic image"));
                }
            }
            ImageKind::Dihedral => {
                let mu = self.stab_mu.as_ref().unwrap();
                if self.group.order() != 2 * h * self.image.n
                    || self.stab_one.order() != 2 * h
                    || mu.order() != 2 * h
                {
                    return Err(Error::internal(
                        "isotropy subgroups are not of index 2 over H",
                    ));
                }
            }
        }
        Ok(())
    }

    /// Idempotent: a built action is already canonical.
    pub fn canonical_form(&self) -> CircleAction {
        self.clone()
    }

    /// The action restricted to a subgroup, re-canonicalized. The kernel of
    /// the restriction shares its group structure with `H` when `H ⊆ sub`.
    pub fn restrict_to(&self, sub: &Subgroup) -> Result<CircleAction> {
        if !sub.parent().same_as(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let rho: Vec<OrthogonalElement> = sub.members().iter().map(|&m| self.rho[m]).collect();
        let own = sub.group();
        if self.kernel.is_subset_of(sub) {
            let kernel = self.kernel.relative_to(sub)?;
            Self::assemble(own, rho, kernel, self.offset)
        } else {
            Self::from_images(own, rho, self.offset)
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rho(&self, element: usize) -> OrthogonalElement {
        self.rho[element]
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> Image {
        self.image
    }

    pub fn offset(&self) -> Angle {
        self.offset
    }

    pub fn point_stabilizer(&self, which: SpecialPoint) -> Result<&Subgroup> {
        match which {
            SpecialPoint::One => Ok(&self.stab_one),
            SpecialPoint::Mu => self.stab_mu.as_ref().ok_or(Error::NoMuPoint),
        }
    }

    pub fn stab_one(&self) -> &Subgroup {
        &self.stab_one
    }

    pub fn stab_mu(&self) -> Option<&Subgroup> {
        self.stab_mu.as_ref()
    }

    /// Distinct image elements.
    pub fn image_elements(&self) -> BTreeSet<OrthogonalElement> {
        self.rho.iter().copied().collect()
    }

    /// Checks `ρ(gh) = ρ(g)ρ(h)` on the whole Cayley table.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|i| {
            (0..n).all(|j| self.rho[self.group.mul(i, j)] == self.rho[i].compose(self.rho[j]))
        })
    }

    /// Subgroup `ρ⁻¹(Z_n)` of elements acting by rotations.
    pub fn rotation_subgroup(&self) -> Result<Subgroup> {
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&i| !self.rho[i].is_reflection())
            .collect();
        Subgroup::from_members(&self.group, &members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn rot(p: i64, q: i64) -> OrthogonalElement {
        OrthogonalElement::rotation(p, q).unwrap()
    }

    fn refl(p: i64, q: i64) -> OrthogonalElement {
        OrthogonalElement::reflection(p, q).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert!(rot(1, 3).compose(rot(2, 3)).is_identity());
        assert!(refl(0, 1).compose(refl(0, 1)).is_identity());
        assert_eq!(refl(1, 3).compose(refl(0, 1)), rot(1, 3));
    }

    #[test]
    fn compose_matches_matrices() {
        fn mat(e: OrthogonalElement) -> [[f64; 2]; 2] {
            let t =
                2.0 * std::f64::consts::PI * e.angle().numer() as f64 / e.angle().denom() as f64;
            match e {
                OrthogonalElement::Rotation(_) => [[t.cos(), -t.sin()], [t.sin(), t.cos()]],
                OrthogonalElement::Reflection(_) => [[t.cos(), t.sin()], [t.sin(), -t.cos()]],
            }
        }
        let samples = [rot(1, 5), rot(3, 7), refl(1, 4), refl(2, 9), refl(0, 1)];
        for &a in &samples {
            for &b in &samples {
                let (ma, mb, mc) = (mat(a), mat(b), mat(a.compose(b)));
                for i in 0..2 {
                    for j in 0..2 {
                        let prod = ma[i][0] * mb[0][j] + ma[i][1] * mb[1][j];
                        assert!((prod - mc[i][j]).abs() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn angle_parsing() {
        assert_eq!("2/4".parse::<Angle>().unwrap(), Angle::new(1, 2).unwrap());
        assert_eq!("-1/3".parse::<Angle>().unwrap(), Angle::new(2, 3).unwrap());
        assert_eq!("3/2".parse::<Angle>().unwrap().to_string(), "1/2");
        assert_eq!("-4/2".parse::<Angle>().unwrap().to_string(), "0");
        assert_eq!("0".parse::<Angle>().unwrap(), Angle::ZERO);
        assert!("1/0".parse::<Angle>().is_err());
        assert!("x/2".parse::<Angle>().is_err());
    }

    #[test]
    fn s3_standard_action() {
        let g = catalog::symmetric(3);
        let a = CircleAction::build(&g, &[rot(1, 3), refl(0, 1)]).unwrap();
        assert_eq!(a.kernel().order(), 1);
        assert_eq!(
            a.image(),
            Image {
                kind: ImageKind::Dihedral,
                n: 3
            }
        );
        assert_eq!(a.offset(), Angle::ZERO);
        let k1 = a.point_stabilizer(SpecialPoint::One).unwrap();
        assert_eq!(k1.order(), 2);
        assert!(k1.contains(g.generators()[1]));
        let kmu = a.point_stabilizer(SpecialPoint::Mu).unwrap();
        assert_eq!(kmu.order(), 2);
        assert_ne!(k1, kmu);
        assert!(a.is_homomorphism());
    }

    #[test]
    fn cyclic_kernel() {
        let g = catalog::cyclic(4);
        let a = CircleAction::build(&g, &[rot(1, 2)]).unwrap();
        assert_eq!(a.kernel().order(), 2);
        assert_eq!(
            a.image(),
            Image {
                kind: ImageKind::Cyclic,
                n: 2
            }
        );
        assert_eq!(a.point_stabilizer(SpecialPoint::One).unwrap(), a.kernel());
        assert_eq!(
            a.point_stabilizer(SpecialPoint::Mu).unwrap_err(),
            Error::NoMuPoint
        );
        let t = CircleAction::build(&g, &[rot(0, 1)]).unwrap();
        assert_eq!(t.kernel().order(), 4);
        assert_eq!(t.image().n, 1);
    }

    #[test]
    fn inconsistent_assignment() {
        let g = catalog::cyclic(4);
        assert!(matches!(
            CircleAction::build(&g, &[rot(1, 3)]),
            Err(Error::InconsistentAction { .. })
        ));
        assert!(matches!(
            CircleAction::build(&g, &[]),
            Err(Error::GeneratorCountMismatch {
                expected: 1,
                got: 0
            })
        ));
    }

    #[test]
    fn canonicalizes_single_reflection() {
        let g = catalog::cyclic(2);
        let a = CircleAction::build(&g, &[refl(1, 2)]).unwrap();
        assert_eq!(
            a.image(),
            Image {
                kind: ImageKind::Dihedral,
                n: 1
            }
        );
        assert_eq!(a.rho(g.generators()[0]), refl(0, 1));
        assert_eq!(a.offset(), Angle::new(3, 4).unwrap());
        // μ = -1 is fixed by the same reflection when n = 1
        assert_eq!(a.stab_one(), a.stab_mu().unwrap());
    }

    #[test]
    fn quaternion_over_d2() {
        let q = catalog::quaternion();
        let a = CircleAction::build(&q, &[rot(1, 2), refl(0, 1)]).unwrap();
        assert_eq!(a.kernel().order(), 2);
        assert_eq!(
            a.image(),
            Image {
                kind: ImageKind::Dihedral,
                n: 2
            }
        );
        let k1 = a.stab_one();
        let kmu = a.stab_mu().unwrap();
        assert_eq!(k1.order(), 4);
        assert_eq!(kmu.order(), 4);
        let j = q.generators()[1];
        let ij = q.mul(q.generators()[0], j);
        assert!(k1.contains(j));
        assert!(kmu.contains(ij));
        // both are cyclic of order 4
        assert!(k1.members().iter().any(|&x| q.element_order(x) == 4));
        assert!(kmu.members().iter().any(|&x| q.element_order(x) == 4));
    }
}
