use crate::error::{Error, Result};
use crate::group::Subgroup;

use super::{CharacterTable, ClassFunction};

/// Restriction to a subgroup of the character's group.
pub fn restrict(chi: &ClassFunction, s: &Subgroup) -> Result<ClassFunction> {
    if !chi.group.same_as(s.parent()) {
        return Err(Error::GroupMismatch);
    }
    let own = s.group();
    let values = own
        .classes()
        .iter()
        .map(|c| chi.at_element(s.embed(c.representative)))
        .collect();
    ClassFunction::new(own, chi.field, values)
}

/// Induction from `h` to its parent: `(ind χ)(k) = Σ_r χ°(r⁻¹kr)` over a left
/// transversal, where `χ°` vanishes off `h`.
pub fn induce(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    if !chi.group.same_as(h.group()) {
        return Err(Error::GroupMismatch);
    }
    let k = h.parent();
    let f = chi.field;
    let reps = h.props().coset_reps;
    let values = k
        .classes()
        .iter()
        .map(|c| {
            reps.iter().fold(0, |acc, &r| {
                let x = k.conjugate(c.representative, r);
                match h.local_index(x) {
                    Some(local) => f.add(acc, chi.at_element(local)),
                    None => acc,
                }
            })
        })
        .collect();
    ClassFunction::new(k, f, values)
}

/// `(ᵍχ)(h) = χ(g⁻¹hg)` for a class function on a normal subgroup.
pub fn conjugate_by(chi: &ClassFunction, s: &Subgroup, g: usize) -> Result<ClassFunction> {
    if !chi.group.same_as(s.group()) {
        return Err(Error::GroupMismatch);
    }
    let parent = s.parent();
    if g >= parent.order() {
        return Err(Error::ElementOutOfRange(g));
    }
    if !s.is_normal() {
        return Err(Error::NotNormal);
    }
    let own = s.group();
    let values = own
        .classes()
        .iter()
        .map(|c| {
            let x = parent.conjugate(s.embed(c.representative), g);
            let local = s
                .local_index(x)
                .expect("normal subgroup is closed under conjugation");
            chi.at_element(local)
        })
        .collect();
    ClassFunction::new(own, chi.field, values)
}

/// `(1/|G|) Σ_g a(g) b(g⁻¹)` as a field element.
pub fn inner_product_raw(a: &ClassFunction, b: &ClassFunction) -> Result<u64> {
    a.check_compatible(b)?;
    let g = &a.group;
    let f = a.field;
    let sum = (0..g.class_count()).fold(0, |acc, c| {
        let term = f.mul(
            g.class_size(c) as u64 % f.p,
            f.mul(a.values[c], b.values[g.inverse_class(c)]),
        );
        f.add(acc, term)
    });
    Ok(f.mul(sum, f.inv(g.order() as u64)))
}

/// The character inner product, recovered as an integer. Exact whenever the
/// true value lies in `(-p/2, p/2]`, which holds for all pairings of
/// characters of degree product below `p/2`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<i64> {
    Ok(a.field.lift(inner_product_raw(a, b)?))
}

/// Multiplicities of the irreducible characters of `table` in `chi`, listing
/// only nonzero entries.
pub fn decompose(chi: &ClassFunction, table: &CharacterTable) -> Result<Vec<(usize, usize)>> {
    if !chi.group.same_as(table.group()) {
        return Err(Error::GroupMismatch);
    }
    let mut out = Vec::new();
    let mut rebuilt = chi.scale(0);
    for i in 0..table.len() {
        let irr = table.character(i);
        let m = inner_product(chi, &irr)?;
        if m < 0 {
            return Err(Error::NotACharacter {
                index: i,
                multiplicity: m,
            });
        }
        if m > 0 {
            out.push((i, m as usize));
            rebuilt = rebuilt.add(&irr.scale(m))?;
        }
    }
    if &rebuilt != chi {
        return Err(Error::internal(
            "decomposition does not reconstruct the class function",
        ));
    }
    Ok(out)
}
