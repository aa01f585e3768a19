//! Extensions of real irreducibles across index-2 subgroups, and the bounded
//! search for modules with prescribed restrictions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

use super::ops::{conjugate_by, decompose, induce, restrict};
use super::{CharacterTable, ClassFunction, RealIrreducible, RealType, TableCache};

/// How a real irreducible `U` of an index-2 subgroup `H` extends to `K`.
#[derive(Debug, Clone)]
pub struct ExtensionCount {
    /// Number of real irreducibles of `K` restricting to `U`.
    pub e: usize,
    /// Indices into the real irreducibles of `K`, in canonical order.
    pub extensions: Vec<usize>,
    /// When `e = 0`: the real irreducible of `K` equal to `ind_H^K U`.
    pub induced_class: Option<usize>,
    /// Character of `ind_H^K U`.
    pub induced: ClassFunction,
    /// The sign character of `K/H`.
    pub sign: ClassFunction,
}

/// Sign character of `K/H` for an index-2 subgroup.
pub fn quotient_sign(h: &Subgroup, field: crate::field::FieldContext) -> ClassFunction {
    let k = h.parent();
    let values = k
        .classes()
        .iter()
        .map(|c| {
            if h.contains(c.representative) {
                1
            } else {
                field.from_int(-1)
            }
        })
        .collect();
    ClassFunction::new(k, field, values).expect("one value per class")
}

pub fn count_extensions(
    k_table: &CharacterTable,
    h: &Subgroup,
    u: &RealIrreducible,
) -> Result<ExtensionCount> {
    if !h.parent().same_as(k_table.group()) || !u.character.group().same_as(h.group()) {
        return Err(Error::GroupMismatch);
    }
    let props = h.props();
    if props.index != 2 {
        return Err(Error::IndexNotTwo(props.index));
    }
    let outside = props.coset_reps[1];
    if conjugate_by(&u.character, h, outside)? != u.character {
        return Err(Error::NotInvariant);
    }
    let field = *k_table.field();
    let extensions: Vec<usize> = k_table
        .real_irreducibles()
        .iter()
        .enumerate()
        .filter_map(|(i, psi)| match restrict(&psi.character, h) {
            Ok(r) if r == u.character => Some(i),
            _ => None,
        })
        .collect();
    let induced = induce(&u.character, h)?;
    let sign = quotient_sign(h, field);
    let e = extensions.len();
    let induced_class = if e == 0 {
        k_table.find_real(&induced)
    } else {
        None
    };
    let out = ExtensionCount {
        e,
        extensions,
        induced_class,
        induced,
        sign,
    };
    check_trichotomy(k_table, h, u, &out)?;
    Ok(out)
}

/// Asserts every case constraint of the extension trichotomy for index 2.
fn check_trichotomy(
    k_table: &CharacterTable,
    h: &Subgroup,
    u: &RealIrreducible,
    ext: &ExtensionCount,
) -> Result<()> {
    let real = k_table.real_irreducibles();
    let fail = |msg: &str| Err(Error::internal(format!("extension trichotomy: {msg}")));
    if restrict(&ext.induced, h)? != u.character.scale(2) {
        return fail("res ind U is not 2U");
    }
    match ext.e {
        0 => {
            if u.kind == RealType::Quaternionic {
                return fail("non-extendible quaternionic module");
            }
            let Some(idx) = ext.induced_class else {
                return fail("induced module is reducible without extensions");
            };
            let want = match u.kind {
                RealType::Real => RealType::Complex,
                _ => RealType::Quaternionic,
            };
            if real[idx].kind != want {
                return fail("induced module has the wrong type");
            }
        }
        1 => {
            let w = &real[ext.extensions[0]];
            let want = match u.kind {
                RealType::Real => return fail("unique extension of a real-type module"),
                RealType::Complex => RealType::Real,
                RealType::Quaternionic => RealType::Complex,
            };
            if w.kind != want {
                return fail("unique extension has the wrong type");
            }
            if ext.induced != w.character.scale(2) {
                return fail("ind U is not twice the unique extension");
            }
        }
        2 => {
            let (a, b) = (&real[ext.extensions[0]], &real[ext.extensions[1]]);
            if a.kind != u.kind || b.kind != u.kind {
                return fail("extensions differ in type from U");
            }
            if a.character.mul(&ext.sign)? != b.character {
                return fail("extensions are not related by the sign character");
            }
            if ext.induced != a.character.add(&b.character)? {
                return fail("ind U is not the sum of the two extensions");
            }
        }
        _ => return fail("more than two extensions"),
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepGeneratorKind {
    /// `ind_H^K U`, when `U` does not extend.
    Induced,
    /// The unique extension.
    Unique,
    Plus,
    Minus,
}

#[derive(Debug, Clone)]
pub struct RepGenerator {
    pub kind: RepGeneratorKind,
    pub character: ClassFunction,
    pub real_dim: usize,
}

/// Generators of the semigroup of `K`-modules restricting to multiples of `U`.
pub fn rep_semigroup_generators(
    k_table: &CharacterTable,
    h: &Subgroup,
    u: &RealIrreducible,
) -> Result<(ExtensionCount, Vec<RepGenerator>)> {
    let ext = count_extensions(k_table, h, u)?;
    let real = k_table.real_irreducibles();
    let gens = match ext.e {
        0 => vec![RepGenerator {
            kind: RepGeneratorKind::Induced,
            character: ext.induced.clone(),
            real_dim: 2 * u.real_degree,
        }],
        1 => vec![RepGenerator {
            kind: RepGeneratorKind::Unique,
            character: real[ext.extensions[0]].character.clone(),
            real_dim: u.real_degree,
        }],
        _ => vec![
            RepGenerator {
                kind: RepGeneratorKind::Plus,
                character: real[ext.extensions[0]].character.clone(),
                real_dim: u.real_degree,
            },
            RepGenerator {
                kind: RepGeneratorKind::Minus,
                character: real[ext.extensions[1]].character.clone(),
                real_dim: u.real_degree,
            },
        ],
    };
    Ok((ext, gens))
}

/// All multiplicity vectors `m` over the real irreducibles of `group` such
/// that `Σ m_i res(ψ_i)` equals every target. An empty constraint list admits
/// only the zero module.
pub fn solve_restriction_system(
    cache: &TableCache,
    group: &Arc<FiniteGroup>,
    constraints: &[(Subgroup, ClassFunction)],
) -> Result<Vec<Vec<usize>>> {
    let table = cache.table(group)?;
    let real = table.real_irreducibles();
    if constraints.is_empty() {
        return Ok(vec![vec![0; real.len()]]);
    }
    let dims: Vec<i64> = constraints.iter().map(|(_, t)| t.degree()).collect();
    if dims.iter().any(|&d| d != dims[0]) {
        return Ok(Vec::new());
    }
    // Decompose everything into complex irreducibles of each constraint subgroup.
    let mut targets: Vec<i64> = Vec::new();
    let mut columns: Vec<Vec<i64>> = vec![Vec::new(); real.len()];
    for (s, target) in constraints {
        if !s.parent().same_as(group) {
            return Err(Error::GroupMismatch);
        }
        let s_table = cache.table(s.group())?;
        let target = target.rehome(s_table.group())?;
        let dense = |chi: &ClassFunction| -> Result<Vec<i64>> {
            let mut v = vec![0i64; s_table.len()];
            for (i, m) in decompose(chi, &s_table)? {
                v[i] = m as i64;
            }
            Ok(v)
        };
        targets.extend(
            dense(&target).map_err(|_| {
                Error::InvalidArgument("restriction target is not a character".into())
            })?,
        );
        for (col, psi) in columns.iter_mut().zip(real) {
            let r = restrict(&psi.character.rehome(group)?, s)?.rehome(s_table.group())?;
            col.extend(dense(&r)?);
        }
    }
    let mut solutions = Vec::new();
    let mut current = vec![0usize; real.len()];
    search(&columns, &mut targets, 0, &mut current, &mut solutions);
    Ok(solutions)
}

fn search(
    columns: &[Vec<i64>],
    remaining: &mut [i64],
    i: usize,
    current: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if i == columns.len() {
        if remaining.iter().all(|&r| r == 0) {
            out.push(current.to_vec());
        }
        return;
    }
    let col = &columns[i];
    // Largest multiplicity that keeps every coordinate nonnegative.
    let max = col
        .iter()
        .zip(remaining.iter())
        .filter(|(&c, _)| c > 0)
        .map(|(&c, &r)| r / c)
        .min()
        .unwrap_or(0)
        .max(0);
    for m in 0..=max {
        if m > 0 {
            for (r, &c) in remaining.iter_mut().zip(col) {
                *r -= c;
            }
        }
        current[i] = m as usize;
        search(columns, remaining, i + 1, current, out);
    }
    for (r, &c) in remaining.iter_mut().zip(col) {
        *r += c * max;
    }
    current[i] = 0;
}
