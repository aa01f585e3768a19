//! Exact complex and real character theory of explicit finite groups.
//!
//! All values live in a prime field `F_p` with `p ≡ 1 (mod exponent)` and
//! `p > 2|G|`, so every integer quantity (degrees, multiplicities, indicators,
//! inner products) is recovered exactly by a symmetric lift.

mod cache;
mod dixon;
mod extensions;
mod ops;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::group::FiniteGroup;

pub use cache::TableCache;
pub use extensions::{
    count_extensions, quotient_sign, rep_semigroup_generators, solve_restriction_system,
    ExtensionCount, RepGenerator, RepGeneratorKind,
};
pub use ops::{conjugate_by, decompose, induce, inner_product, inner_product_raw, restrict};

/// A value `Σ_j m_j ζ^j` with `ζ = exp(2πi / modulus)`; terms sorted by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicValue {
    pub modulus: usize,
    pub terms: Vec<(usize, usize)>,
}

impl CyclotomicValue {
    /// Exponent multiset, ascending, with repetition.
    pub fn exponents(&self) -> Vec<usize> {
        self.terms
            .iter()
            .flat_map(|&(j, m)| std::iter::repeat_n(j, m))
            .collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.terms.iter().map(|&(_, m)| m).sum()
    }

    pub fn evaluate(&self, f: &FieldContext) -> u64 {
        let zeta = f.root_of_unity(self.modulus);
        self.terms.iter().fold(0, |acc, &(j, m)| {
            f.add(acc, f.mul(f.from_int(m as i64), f.pow(zeta, j as u64)))
        })
    }

    pub fn merged(&self, other: &CyclotomicValue) -> CyclotomicValue {
        debug_assert_eq!(self.modulus, other.modulus);
        let mut counts = std::collections::BTreeMap::new();
        for &(j, m) in self.terms.iter().chain(&other.terms) {
            *counts.entry(j).or_insert(0) += m;
        }
        CyclotomicValue {
            modulus: self.modulus,
            terms: counts.into_iter().collect(),
        }
    }

    pub fn conjugate(&self) -> CyclotomicValue {
        let mut terms: Vec<(usize, usize)> = self
            .terms
            .iter()
            .map(|&(j, m)| ((self.modulus - j) % self.modulus, m))
            .collect();
        terms.sort_unstable();
        CyclotomicValue {
            modulus: self.modulus,
            terms,
        }
    }

    /// Renders the sum of roots of unity, reducing each root to lowest terms:
    /// `E(n)^k` stands for `exp(2πik/n)`.
    pub fn render_roots(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for &(j, m) in &self.terms {
            let g = num_integer::gcd(j, self.modulus);
            let (k, n) = (j / g, self.modulus / g);
            let root = match (k, n) {
                (0, _) => "1".to_string(),
                (1, 2) => "-1".to_string(),
                (1, _) => format!("E({n})"),
                _ => format!("E({n})^{k}"),
            };
            parts.push(if m == 1 { root } else { format!("{m}*{root}") });
        }
        parts.join("+")
    }
}

/// A class function on an explicit group with values in `F_p`.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    field: FieldContext,
    values: Vec<u64>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lifted: Vec<i64> = self.values.iter().map(|&v| self.field.lift(v)).collect();
        f.debug_struct("ClassFunction")
            .field("order", &self.group.order())
            .field("values", &lifted)
            .finish()
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.values == other.values && self.group.same_as(&other.group)
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(group: &Arc<FiniteGroup>, field: FieldContext, values: Vec<u64>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::InvalidArgument(format!(
                "class function needs {} values, got {}",
                group.class_count(),
                values.len()
            )));
        }
        Ok(ClassFunction {
            group: group.clone(),
            field,
            values: values.into_iter().map(|v| v % field.p).collect(),
        })
    }

    pub fn from_ints(
        group: &Arc<FiniteGroup>,
        field: FieldContext,
        values: &[i64],
    ) -> Result<Self> {
        Self::new(
            group,
            field,
            values.iter().map(|&v| field.from_int(v)).collect(),
        )
    }

    pub fn trivial(group: &Arc<FiniteGroup>, field: FieldContext) -> Self {
        ClassFunction {
            group: group.clone(),
            field,
            values: vec![1; group.class_count()],
        }
    }

    /// Character of the regular representation.
    pub fn regular(group: &Arc<FiniteGroup>, field: FieldContext) -> Self {
        let mut values = vec![0; group.class_count()];
        values[group.class_of(0)] = field.from_int(group.order() as i64);
        ClassFunction {
            group: group.clone(),
            field,
            values,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, class: usize) -> u64 {
        self.values[class]
    }

    /// Value at the element with the given index.
    pub fn at_element(&self, element: usize) -> u64 {
        self.values[self.group.class_of(element)]
    }

    /// Value at the identity, as an integer.
    pub fn degree(&self) -> i64 {
        self.field.lift(self.values[self.group.class_of(0)])
    }

    pub fn lifted(&self) -> Vec<i64> {
        self.values.iter().map(|&v| self.field.lift(v)).collect()
    }

    fn check_compatible(&self, other: &ClassFunction) -> Result<()> {
        if self.field != other.field || !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |f, a, b| f.add(a, b)))
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |f, a, b| f.sub(a, b)))
    }

    /// Pointwise product (tensor product of characters).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |f, a, b| f.mul(a, b)))
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let f = self.field;
        let k = f.from_int(k);
        ClassFunction {
            group: self.group.clone(),
            field: f,
            values: self.values.iter().map(|&v| f.mul(v, k)).collect(),
        }
    }

    /// `g ↦ χ(g⁻¹)`, i.e. complex conjugation for characters.
    pub fn conjugate(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            field: self.field,
            values: (0..self.values.len())
                .map(|c| self.values[self.group.inverse_class(c)])
                .collect(),
        }
    }

    /// Moves the values onto a structurally identical group.
    pub fn rehome(&self, group: &Arc<FiniteGroup>) -> Result<ClassFunction> {
        if !self.group.same_as(group) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            group: group.clone(),
            field: self.field,
            values: self.values.clone(),
        })
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        op: impl Fn(&FieldContext, u64, u64) -> u64,
    ) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            field: self.field,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| op(&self.field, a, b))
                .collect(),
        }
    }
}

/// Frobenius–Schur type of a real irreducible module: its endomorphism algebra
/// is ℝ, ℂ or ℍ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealType {
    Real,
    Complex,
    Quaternionic,
}

impl RealType {
    /// `dim_ℝ End(U)`.
    pub fn schur_dim(self) -> usize {
        match self {
            RealType::Real => 1,
            RealType::Complex => 2,
            RealType::Quaternionic => 4,
        }
    }

    pub fn from_indicator(fs: i8) -> RealType {
        match fs {
            1 => RealType::Real,
            0 => RealType::Complex,
            _ => RealType::Quaternionic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RealType::Real => "real",
            RealType::Complex => "complex",
            RealType::Quaternionic => "quaternionic",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComplexCharacter {
    pub values: Vec<u64>,
    pub degree: usize,
    pub fs_indicator: i8,
    /// Per class: the eigenvalue multiset of a representative, as exponents of
    /// a primitive `exponent`-th root of unity.
    pub lift: Vec<CyclotomicValue>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constituents {
    Single(usize),
    Pair(usize, usize),
}

#[derive(Debug, Clone)]
pub struct RealIrreducible {
    pub character: ClassFunction,
    pub kind: RealType,
    pub real_degree: usize,
    pub constituents: Constituents,
    pub lift: Vec<CyclotomicValue>,
}

impl RealIrreducible {
    pub fn schur_dim(&self) -> usize {
        self.kind.schur_dim()
    }
}

/// Complex character table plus the derived real irreducibles.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    field: FieldContext,
    chars: Vec<ComplexCharacter>,
    real: Vec<RealIrreducible>,
    /// `power_classes[c][t]` = class of `g_c^t` for `t < order(g_c)`.
    power_classes: Vec<Vec<usize>>,
}

impl CharacterTable {
    /// Computes the table in a freshly chosen field.
    pub fn compute(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
        let field = FieldContext::for_group(group.exponent(), group.order())?;
        Self::compute_in(group, field)
    }

    /// Computes the table in a given field, which must support the group.
    pub fn compute_in(group: &Arc<FiniteGroup>, field: FieldContext) -> Result<CharacterTable> {
        if !field.supports(group.exponent(), group.order()) {
            return Err(Error::InvalidArgument(format!(
                "field F_{} with exponent {} cannot hold characters of a group of exponent {} and order {}",
                field.p,
                field.exponent,
                group.exponent(),
                group.order()
            )));
        }
        let f = field;
        let power_classes: Vec<Vec<usize>> = group
            .classes()
            .iter()
            .map(|c| {
                let g = c.representative;
                let mut x = 0;
                (0..group.element_order(g))
                    .map(|_| {
                        let cls = group.class_of(x);
                        x = group.mul(x, g);
                        cls
                    })
                    .collect()
            })
            .collect();
        let square = group.power_class_map(2);
        let order_inv = f.inv(group.order() as u64);

        let mut chars = Vec::new();
        for values in dixon::irreducible_values(group, &f)? {
            let degree = f.lift(values[group.class_of(0)]);
            if degree <= 0 {
                return Err(Error::internal("non-positive character degree"));
            }
            let lift = cyclotomic_lift(group, &f, &power_classes, &values, degree as usize)?;
            let fs_sum = (0..group.class_count()).fold(0, |acc, c| {
                f.add(acc, f.mul(group.class_size(c) as u64, values[square[c]]))
            });
            let fs = f.lift(f.mul(fs_sum, order_inv));
            if !(-1..=1).contains(&fs) {
                return Err(Error::internal(format!("Frobenius–Schur indicator {fs}")));
            }
            chars.push(ComplexCharacter {
                values,
                degree: degree as usize,
                fs_indicator: fs as i8,
                lift,
            });
        }
        chars.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| lift_cmp(&a.lift, &b.lift))
        });
        let real = real_irreducibles_of(group, &f, &chars)?;
        Ok(CharacterTable {
            group: group.clone(),
            field: f,
            chars,
            real,
            power_classes,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn characters(&self) -> &[ComplexCharacter] {
        &self.chars
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            field: self.field,
            values: self.chars[i].values.clone(),
        }
    }

    pub fn frobenius_schur(&self, i: usize) -> i8 {
        self.chars[i].fs_indicator
    }

    /// Real irreducibles in canonical order: by real degree, then type
    /// (ℝ < ℂ < ℍ), then lifted values.
    pub fn real_irreducibles(&self) -> &[RealIrreducible] {
        &self.real
    }

    pub fn trivial_real(&self) -> usize {
        self.real
            .iter()
            .position(|r| r.character == ClassFunction::trivial(&self.group, self.field))
            .expect("the trivial character is a real irreducible")
    }

    /// Index of the real irreducible with exactly this character.
    pub fn find_real(&self, chi: &ClassFunction) -> Option<usize> {
        self.real.iter().position(|r| &r.character == chi)
    }

    /// Whether the value at class `c` is a rational integer, i.e. fixed by
    /// every Galois automorphism `ζ ↦ ζ^k`.
    pub fn is_rational_at(&self, values: &[u64], c: usize) -> bool {
        let powers = &self.power_classes[c];
        let o = powers.len();
        (1..o)
            .filter(|&k| num_integer::gcd(k, o) == 1)
            .all(|k| values[powers[k]] == values[c])
    }

    /// Exact textual value of a character at a class: an integer when rational,
    /// otherwise the eigenvalue sum in terms of roots of unity.
    pub fn render_value(&self, values: &[u64], lift: &CyclotomicValue, c: usize) -> String {
        if self.is_rational_at(values, c) {
            self.field.lift(values[c]).to_string()
        } else {
            lift.render_roots()
        }
    }

    /// A copy with one value of one complex character shifted by one. Used as a
    /// negative control by the verification suites.
    #[doc(hidden)]
    pub fn perturbed(&self, character: usize, class: usize) -> CharacterTable {
        let mut t = self.clone();
        let v = &mut t.chars[character].values[class];
        *v = self.field.add(*v, 1);
        t
    }

    /// Cyclotomic lift of an arbitrary character of this group.
    pub fn lift_of(&self, chi: &ClassFunction) -> Result<Vec<CyclotomicValue>> {
        let degree = chi.degree();
        if degree < 0 {
            return Err(Error::InvalidArgument("negative degree".into()));
        }
        cyclotomic_lift(
            &self.group,
            &self.field,
            &self.power_classes,
            &chi.values,
            degree as usize,
        )
    }

    pub fn render_character(&self, chi: &ClassFunction) -> Result<Vec<String>> {
        let lift = self.lift_of(chi)?;
        Ok((0..chi.values.len())
            .map(|c| self.render_value(&chi.values, &lift[c], c))
            .collect())
    }
}

fn lift_cmp(a: &[CyclotomicValue], b: &[CyclotomicValue]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.exponents().cmp(&y.exponents());
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// `m_j = (1/o) Σ_t χ(g^t) θ_o^{-st}` at exponents `j = s·(e/o)`.
fn cyclotomic_lift(
    group: &FiniteGroup,
    f: &FieldContext,
    power_classes: &[Vec<usize>],
    values: &[u64],
    degree: usize,
) -> Result<Vec<CyclotomicValue>> {
    let e = group.exponent();
    let root = f.root_of_unity(e);
    power_classes
        .iter()
        .map(|powers| {
            let o = powers.len();
            let step = e / o;
            let theta_o = f.pow(root, step as u64);
            let theta_inv = f.inv(theta_o);
            let o_inv = f.inv(o as u64);
            let mut terms = Vec::new();
            for s in 0..o {
                let w = f.pow(theta_inv, s as u64);
                let mut acc = 0;
                let mut wt = 1;
                for &cls in powers {
                    acc = f.add(acc, f.mul(values[cls], wt));
                    wt = f.mul(wt, w);
                }
                let m = f.lift(f.mul(acc, o_inv));
                if m < 0 || m as usize > degree {
                    return Err(Error::internal(format!(
                        "cyclotomic multiplicity {m} out of range"
                    )));
                }
                if m > 0 {
                    terms.push((s * step, m as usize));
                }
            }
            let v = CyclotomicValue { modulus: e, terms };
            if v.total_multiplicity() != degree {
                return Err(Error::internal(
                    "cyclotomic lift does not sum to the degree",
                ));
            }
            Ok(v)
        })
        .collect()
}

fn real_irreducibles_of(
    group: &Arc<FiniteGroup>,
    f: &FieldContext,
    chars: &[ComplexCharacter],
) -> Result<Vec<RealIrreducible>> {
    let mut used = vec![false; chars.len()];
    let mut out = Vec::new();
    let conj_values = |c: &ComplexCharacter| -> Vec<u64> {
        (0..c.values.len())
            .map(|k| c.values[group.inverse_class(k)])
            .collect()
    };
    for (i, c) in chars.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let cf = ClassFunction {
            group: group.clone(),
            field: *f,
            values: c.values.clone(),
        };
        let real = match c.fs_indicator {
            1 => RealIrreducible {
                character: cf,
                kind: RealType::Real,
                real_degree: c.degree,
                constituents: Constituents::Single(i),
                lift: c.lift.clone(),
            },
            -1 => RealIrreducible {
                character: cf.scale(2),
                kind: RealType::Quaternionic,
                real_degree: 2 * c.degree,
                constituents: Constituents::Single(i),
                lift: c.lift.iter().map(|v| v.merged(v)).collect(),
            },
            _ => {
                let target = conj_values(c);
                let j = chars
                    .iter()
                    .enumerate()
                    .position(|(j, d)| !used[j] && d.values == target)
                    .ok_or_else(|| {
                        Error::internal("complex character without a conjugate partner")
                    })?;
                used[j] = true;
                let partner = ClassFunction {
                    group: group.clone(),
                    field: *f,
                    values: target,
                };
                RealIrreducible {
                    character: cf.add(&partner)?,
                    kind: RealType::Complex,
                    real_degree: 2 * c.degree,
                    constituents: Constituents::Pair(i, j),
                    lift: c.lift.iter().map(|v| v.merged(&v.conjugate())).collect(),
                }
            }
        };
        out.push(real);
    }
    out.sort_by(|a, b| {
        a.real_degree
            .cmp(&b.real_degree)
            .then(a.kind.cmp(&b.kind))
            .then_with(|| lift_cmp(&a.lift, &b.lift))
    });
    Ok(out)
}

#[cfg(test)]
mod tests;
