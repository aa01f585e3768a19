//! Explicit finite permutation groups.
//!
//! A group is expanded from its generators into a full element list with a
//! Cayley table. Element 0 is always the identity. Top-level groups order their
//! elements breadth-first over generator words; subgroups keep the ordering of
//! their parent, so an element index map between a subgroup and its parent is
//! monotone.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest group the library will expand.
pub const MAX_GROUP_ORDER: usize = 4096;

/// A permutation of `{0, .., degree-1}` (stored 0-based, presented 1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images. On failure returns the
    /// 1-based position of the first offending entry.
    pub fn from_one_based(images: &[usize]) -> std::result::Result<Self, usize> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for (pos, &img) in images.iter().enumerate() {
            if img == 0 || img > degree || seen[img - 1] {
                return Err(pos + 1);
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// An explicit finite group with a full Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    /// `route[k] = Some((i, g))` means `elements[k] = elements[i] ∘ elements[generators[g]]`.
    route: Vec<Option<(usize, usize)>>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    orders: Vec<usize>,
    exponent: usize,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl FiniteGroup {
    /// Closes `gens` under composition. Generators are 1-based image lists.
    pub fn from_generators(degree: usize, gens: &[Vec<usize>]) -> Result<Arc<FiniteGroup>> {
        let mut perms = Vec::with_capacity(gens.len());
        for (g, images) in gens.iter().enumerate() {
            if images.len() != degree {
                return Err(Error::InvalidPermutation {
                    generator: g,
                    position: images.len().min(degree) + 1,
                    degree,
                });
            }
            let p = Permutation::from_one_based(images).map_err(|position| {
                Error::InvalidPermutation {
                    generator: g,
                    position,
                    degree,
                }
            })?;
            perms.push(p);
        }
        Self::from_permutations(degree, &perms)
    }

    pub fn from_permutations(degree: usize, gens: &[Permutation]) -> Result<Arc<FiniteGroup>> {
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut route = vec![None];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            for (g, gen) in gens.iter().enumerate() {
                let next = elements[head].compose(gen);
                if !index.contains_key(&next) {
                    if elements.len() == MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge {
                            cap: MAX_GROUP_ORDER,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    route.push(Some((head, g)));
                }
            }
            head += 1;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(Arc::new(Self::assemble(
            degree, elements, generators, route, &index,
        )))
    }

    fn assemble(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<usize>,
        route: Vec<Option<(usize, usize)>>,
        index: &HashMap<Permutation, usize>,
    ) -> FiniteGroup {
        let n = elements.len();
        // Right multiplication by each generator, as an index map.
        let right: Vec<Vec<u32>> = generators
            .iter()
            .map(|&g| {
                elements
                    .iter()
                    .map(|x| index[&x.compose(&elements[g])] as u32)
                    .collect()
            })
            .collect();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
        }
        // Columns are filled in route order, which is a topological order.
        let mut order: Vec<usize> = (1..n).collect();
        order.sort_by_key(|&k| depth(&route, k));
        for &j in &order {
            let (par, g) = route[j].expect("non-identity element has a route");
            for i in 0..n {
                let ip = table[i * n + par] as usize;
                table[i * n + j] = right[g][ip];
            }
        }
        let mut inverse = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inverse[i] = j as u32;
                    break;
                }
            }
        }
        let mut group = FiniteGroup {
            degree,
            elements,
            table,
            inverse,
            generators,
            route,
            classes: Vec::new(),
            class_of: Vec::new(),
            orders: Vec::new(),
            exponent: 1,
        };
        group.compute_orders();
        group.compute_classes();
        group
    }

    fn compute_orders(&mut self) {
        let n = self.order();
        let mut orders = vec![0; n];
        for (i, slot) in orders.iter_mut().enumerate() {
            let mut x = i;
            let mut k = 1;
            while x != 0 {
                x = self.mul(x, i);
                k += 1;
            }
            *slot = k;
        }
        orders[0] = 1;
        self.exponent = orders.iter().fold(1, |acc: usize, &o| acc.lcm(&o));
        self.orders = orders;
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        let conjugators: Vec<usize> = if self.generators.is_empty() {
            Vec::new()
        } else {
            self.generators.clone()
        };
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                for &g in &conjugators {
                    let y = self.conjugate(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                head += 1;
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: start,
                members,
            });
        }
        self.class_of = class_of;
        self.classes = classes;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Index of `element_i ∘ element_j`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x^t`; negative exponents allowed.
    pub fn pow(&self, x: usize, t: i64) -> usize {
        let ord = self.orders[x] as i64;
        let mut e = t.rem_euclid(ord);
        let mut acc = 0;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The breadth-first spanning tree used to build the element list.
    pub fn route(&self, k: usize) -> Option<(usize, usize)> {
        self.route[k]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].size()
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of(self.inv(self.classes[c].representative))
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }

    /// Structural equality: same degree and the same element sequence.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other)
            || (self.degree == other.degree && self.elements == other.elements)
    }

    /// Maps the class of `g` to the class of `gᵗ`.
    pub fn power_class_map(&self, t: i64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of(self.pow(c.representative, t)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }
}

fn depth(route: &[Option<(usize, usize)>], mut k: usize) -> usize {
    let mut d = 0;
    while let Some((par, _)) = route[k] {
        k = par;
        d += 1;
    }
    d
}

/// A subgroup of an explicit parent group, carrying its own group structure.
///
/// The own structure lists the members in increasing parent-index order, so
/// local index `i` corresponds to parent index `members[i]`.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    group: Arc<FiniteGroup>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.members.len())
            .field("parent_order", &self.parent.order())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupProps {
    pub normal: bool,
    pub index: usize,
    /// One representative per left coset `gS`, identity first.
    pub coset_reps: Vec<usize>,
}

impl Subgroup {
    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            members: (0..parent.order()).collect(),
            group: parent.clone(),
        }
    }

    /// Smallest subgroup containing `seeds`.
    pub fn generated(parent: &Arc<FiniteGroup>, seeds: &[usize]) -> Result<Subgroup> {
        let n = parent.order();
        if let Some(&bad) = seeds.iter().find(|&&s| s >= n) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &s in seeds {
                let y = parent.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        Ok(Self::from_sorted_closed(parent, members))
    }

    /// Builds a subgroup from an explicit member set, checking closure.
    pub fn from_members(parent: &Arc<FiniteGroup>, members: &[usize]) -> Result<Subgroup> {
        let n = parent.order();
        let mut inside = vec![false; n];
        for &m in members {
            if m >= n {
                return Err(Error::ElementOutOfRange(m));
            }
            inside[m] = true;
        }
        if !inside[0] {
            return Err(Error::NotSubgroup);
        }
        let mut sorted: Vec<usize> = (0..n).filter(|&i| inside[i]).collect();
        sorted.dedup();
        for &a in &sorted {
            for &b in &sorted {
                if !inside[parent.mul(a, b)] {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        Ok(Self::from_sorted_closed(parent, sorted))
    }

    fn from_sorted_closed(parent: &Arc<FiniteGroup>, members: Vec<usize>) -> Subgroup {
        if members.len() == parent.order() {
            return Subgroup::whole(parent);
        }
        let n = parent.order();
        let mut local = vec![u32::MAX; n];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i as u32;
        }
        // Greedy generating set: smallest member outside the current closure.
        let mut generators: Vec<usize> = Vec::new();
        let mut covered = vec![false; members.len()];
        covered[0] = true;
        let mut closure = vec![0usize];
        let mut route: Vec<Option<(usize, usize)>> = vec![None; members.len()];
        while let Some(next) = covered.iter().position(|&c| !c) {
            generators.push(next);
            // Re-close from scratch over all generators so far, recording routes.
            covered.iter_mut().for_each(|c| *c = false);
            covered[0] = true;
            closure.clear();
            closure.push(0);
            let mut head = 0;
            while head < closure.len() {
                let x = closure[head];
                for (g, &gl) in generators.iter().enumerate() {
                    let y = local[parent.mul(members[x], members[gl])] as usize;
                    if !covered[y] {
                        covered[y] = true;
                        route[y] = Some((x, g));
                        closure.push(y);
                    }
                }
                head += 1;
            }
        }
        let elements: Vec<Permutation> =
            members.iter().map(|&m| parent.element(m).clone()).collect();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let group = FiniteGroup::assemble(parent.degree(), elements, generators, route, &index);
        Subgroup {
            parent: parent.clone(),
            members,
            group: Arc::new(group),
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// The subgroup's own group structure.
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Sorted parent indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, parent_index: usize) -> bool {
        self.members.binary_search(&parent_index).is_ok()
    }

    /// Local index of a parent element, if it is a member.
    pub fn local_index(&self, parent_index: usize) -> Option<usize> {
        self.members.binary_search(&parent_index).ok()
    }

    pub fn embed(&self, local: usize) -> usize {
        self.members[local]
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent) && self.members.iter().all(|&m| other.contains(m))
    }

    /// Re-expresses `self` as a subgroup of `outer`'s own group. Both must share
    /// a parent and `self ⊆ outer`. The own structure is shared, not rebuilt.
    pub fn relative_to(&self, outer: &Subgroup) -> Result<Subgroup> {
        if !self.parent.same_as(&outer.parent) {
            return Err(Error::GroupMismatch);
        }
        let members = self
            .members
            .iter()
            .map(|&m| outer.local_index(m).ok_or(Error::NotSubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup {
            parent: outer.group.clone(),
            members,
            group: self.group.clone(),
        })
    }

    /// Re-expresses a subgroup of `inner`'s own group as a subgroup of
    /// `inner`'s parent.
    pub fn lift_through(&self, inner: &Subgroup) -> Result<Subgroup> {
        if !self.parent.same_as(&inner.group) {
            return Err(Error::GroupMismatch);
        }
        let members = self.members.iter().map(|&m| inner.embed(m)).collect();
        Ok(Subgroup {
            parent: inner.parent.clone(),
            members,
            group: self.group.clone(),
        })
    }

    pub fn props(&self) -> SubgroupProps {
        let g = &self.parent;
        let normal = g.generators().iter().all(|&x| {
            self.members
                .iter()
                .all(|&s| self.contains(g.conjugate(s, x)))
        });
        let mut seen = vec![false; g.order()];
        let mut coset_reps = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            coset_reps.push(x);
            for &s in &self.members {
                seen[g.mul(x, s)] = true;
            }
        }
        SubgroupProps {
            normal,
            index: g.order() / self.order(),
            coset_reps,
        }
    }

    pub fn is_normal(&self) -> bool {
        self.props().normal
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::from_generators(3, &[vec![2, 3, 1], vec![2, 1, 3]]).unwrap()
    }

    #[test]
    fn s3_closure_and_classes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let mut sizes: Vec<_> = g.classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.exponent(), 6);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.class_count(), 1);
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn rejects_non_bijection() {
        let err = FiniteGroup::from_generators(3, &[vec![1, 1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidPermutation {
                generator: 0,
                position: 2,
                degree: 3
            }
        );
        assert!(FiniteGroup::from_generators(3, &[vec![1, 2]]).is_err());
    }

    #[test]
    fn size_cap() {
        // S_8 has order 40320.
        let err = FiniteGroup::from_generators(
            8,
            &[vec![2, 3, 4, 5, 6, 7, 8, 1], vec![2, 1, 3, 4, 5, 6, 7, 8]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::GroupTooLarge {
                cap: MAX_GROUP_ORDER
            }
        );
    }

    #[test]
    fn inverse_and_table() {
        let g = s3();
        for i in 0..g.order() {
            assert_eq!(g.mul(i, g.inv(i)), 0);
            for j in 0..g.order() {
                let p = g.element(i).compose(g.element(j));
                assert_eq!(g.element(g.mul(i, j)), &p);
            }
        }
    }

    #[test]
    fn subgroup_props_s3() {
        let g = s3();
        let three = (0..6).find(|&i| g.element_order(i) == 3).unwrap();
        let two = (0..6).find(|&i| g.element_order(i) == 2).unwrap();
        let c3 = Subgroup::generated(&g, &[three]).unwrap();
        assert_eq!(c3.order(), 3);
        let p = c3.props();
        assert!(p.normal);
        assert_eq!(p.index, 2);
        assert_eq!(p.coset_reps[0], 0);
        let c2 = Subgroup::generated(&g, &[two]).unwrap();
        let p = c2.props();
        assert!(!p.normal);
        assert_eq!(p.index, 3);
        assert_eq!(p.coset_reps.len(), 3);
        let whole = Subgroup::whole(&g);
        assert_eq!(whole.props().index, 1);
        assert!(whole.props().normal);
        let triv = Subgroup::generated(&g, &[]).unwrap();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn power_map_s3() {
        let g = s3();
        assert_eq!(g.power_class_map(1), (0..3).collect::<Vec<_>>());
        let sq = g.power_class_map(2);
        for (c, class) in g.classes().iter().enumerate() {
            let o = g.element_order(class.representative);
            if o == 2 {
                assert_eq!(sq[c], g.class_of(0));
            }
            if o == 3 {
                assert_eq!(sq[c], c);
            }
        }
    }

    #[test]
    fn subgroup_own_structure() {
        let g = s3();
        let three = (0..6).find(|&i| g.element_order(i) == 3).unwrap();
        let c3 = Subgroup::generated(&g, &[three]).unwrap();
        let own = c3.group();
        assert_eq!(own.order(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c3.embed(own.mul(i, j)), g.mul(c3.embed(i), c3.embed(j)));
            }
        }
        let rel = Subgroup::generated(&g, &[])
            .unwrap()
            .relative_to(&c3)
            .unwrap();
        assert_eq!(rel.order(), 1);
        assert!(c3
            .relative_to(&Subgroup::generated(&g, &[]).unwrap())
            .is_err());
        assert!(Subgroup::from_members(&g, &[0, three]).is_err());
    }
}
