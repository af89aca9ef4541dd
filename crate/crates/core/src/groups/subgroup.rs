//! Subgroups, closures, quotients and homomorphisms inside a [`FiniteGroup`].

use std::collections::VecDeque;

use super::error::GroupError;
use super::group::{Elem, FiniteGroup};

/// A subgroup of some parent group, stored as its sorted member list.
///
/// Equality is member-set equality; the parent is not stored, so callers keep
/// track of which group a subgroup lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup {
            members: group.elements().collect(),
        }
    }

    /// Wraps a member list after checking closure; `None` if it is not a subgroup.
    pub fn from_members(group: &FiniteGroup, mut members: Vec<Elem>) -> Option<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) || members.iter().any(|&x| x >= group.order()) {
            return None;
        }
        let mut mask = vec![false; group.order()];
        members.iter().for_each(|&x| mask[x] = true);
        let closed = members
            .iter()
            .all(|&a| mask[group.inv(a)] && members.iter().all(|&b| mask[group.mul(a, b)]));
        closed.then_some(Subgroup { members })
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Membership mask over the parent's elements.
    pub fn mask(&self, parent_order: usize) -> Vec<bool> {
        let mut mask = vec![false; parent_order];
        self.members.iter().for_each(|&x| mask[x] = true);
        mask
    }

    pub fn index_in(&self, group: &FiniteGroup) -> usize {
        group.order() / self.order()
    }

    /// The subgroup as a standalone group. Local element `i` is `members[i]`,
    /// so the identity stays at 0. Returns the group and the local-to-parent map.
    pub fn as_group(&self, parent: &FiniteGroup) -> (FiniteGroup, Vec<Elem>) {
        let n = self.order();
        let mut local = vec![usize::MAX; parent.order()];
        for (i, &x) in self.members.iter().enumerate() {
            local[x] = i;
        }
        let mut table = vec![0u32; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i * n + j] = local[parent.mul(a, b)] as u32;
            }
        }
        (
            FiniteGroup::from_table_unchecked(n, table),
            self.members.clone(),
        )
    }

    /// Image of this subgroup under an element map, re-sorted.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Subgroup {
        let mut members: Vec<Elem> = self.members.iter().map(|&x| f(x)).collect();
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }
}

/// A homomorphism stored as the full image table of its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    image: Vec<Elem>,
}

impl GroupHom {
    pub fn from_images(image: Vec<Elem>) -> Self {
        GroupHom { image }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            image: group.elements().collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.image
    }

    pub fn is_homomorphism(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> bool {
        self.image.len() == domain.order()
            && self.image.iter().all(|&y| y < codomain.order())
            && domain.elements().all(|a| {
                domain.elements().all(|b| {
                    self.apply(domain.mul(a, b)) == codomain.mul(self.apply(a), self.apply(b))
                })
            })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.image.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn image_subgroup(&self) -> Subgroup {
        let mut members = self.image.clone();
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup {
            members: (0..self.image.len())
                .filter(|&x| self.image[x] == 0)
                .collect(),
        }
    }
}

/// Smallest subgroup containing `generators`.
pub fn subgroup_generated(group: &FiniteGroup, generators: &[Elem]) -> Subgroup {
    let mut mask = vec![false; group.order()];
    mask[0] = true;
    let gens: Vec<Elem> = generators.iter().copied().filter(|&g| g != 0).collect();
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = group.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup {
        members: (0..group.order()).filter(|&x| mask[x]).collect(),
    }
}

/// Smallest normal subgroup of `group` containing `generators`, by alternating
/// generation and conjugation until nothing new appears.
pub fn normal_closure(group: &FiniteGroup, generators: &[Elem]) -> Subgroup {
    let mut current = subgroup_generated(group, generators);
    loop {
        let mut mask = current.mask(group.order());
        let mut grew = false;
        for &h in current.members() {
            for g in group.elements() {
                let c = group.conj(g, h);
                if !mask[c] {
                    mask[c] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return current;
        }
        let gens: Vec<Elem> = (0..group.order()).filter(|&x| mask[x]).collect();
        current = subgroup_generated(group, &gens);
    }
}

/// `[H, H]`, generated by all commutators of elements of `h`.
pub fn commutator_subgroup(group: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms: Vec<Elem> = Vec::new();
    let mut seen = vec![false; group.order()];
    for &a in h.members() {
        for &b in h.members() {
            let c = group.commutator(a, b);
            if !seen[c] {
                seen[c] = true;
                comms.push(c);
            }
        }
    }
    subgroup_generated(group, &comms)
}

pub fn center(group: &FiniteGroup) -> Subgroup {
    let members = group
        .elements()
        .filter(|&z| group.elements().all(|g| group.mul(z, g) == group.mul(g, z)))
        .collect();
    Subgroup { members }
}

pub fn is_normal(group: &FiniteGroup, h: &Subgroup) -> bool {
    let mask = h.mask(group.order());
    h.members()
        .iter()
        .all(|&x| group.elements().all(|g| mask[group.conj(g, x)]))
}

pub fn is_abelian_subgroup(group: &FiniteGroup, h: &Subgroup) -> bool {
    let m = h.members();
    m.iter()
        .all(|&a| m.iter().all(|&b| group.mul(a, b) == group.mul(b, a)))
}

/// Quotient by a normal subgroup together with the projection.
///
/// Cosets are numbered by their smallest element, so `N` itself is coset 0.
pub fn quotient_group(
    group: &FiniteGroup,
    normal: &Subgroup,
) -> Result<(FiniteGroup, GroupHom), GroupError> {
    if !is_normal(group, normal) {
        return Err(GroupError::NotNormal);
    }
    let n = group.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in group.elements() {
        if coset[a] == usize::MAX {
            let id = reps.len();
            reps.push(a);
            for &k in normal.members() {
                coset[group.mul(a, k)] = id;
            }
        }
    }
    let m = reps.len();
    let mut table = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = coset[group.mul(reps[i], reps[j])] as u32;
        }
    }
    Ok((
        FiniteGroup::from_table_unchecked(m, table),
        GroupHom { image: coset },
    ))
}

/// True iff `group ≅ D(a)`: `a` is abelian of index 2, the outer coset acts on
/// it by inversion, and the extension splits (outer elements are involutions).
///
/// Once one outer `t` inverts `a`, every outer element squares to `t²`, so
/// checking a single representative suffices.
pub fn is_generalized_dihedral(group: &FiniteGroup, a: &Subgroup) -> Result<bool, GroupError> {
    let index = a.index_in(group);
    if index != 2 || a.order() * 2 != group.order() {
        return Err(GroupError::IndexNotTwo { index });
    }
    if !is_abelian_subgroup(group, a) {
        return Ok(false);
    }
    let t = group
        .elements()
        .find(|&x| !a.contains(x))
        .expect("index two subgroup has an outer element");
    Ok(group.mul(t, t) == 0
        && a.members()
            .iter()
            .all(|&x| group.conj(t, x) == group.inv(x)))
}

/// `D(A) = A ⋊ Z/2` with the involution acting by inversion.
///
/// Element `(a, e)` has index `e * |A| + a`; the returned subgroup is `A x {0}`.
pub fn generalized_dihedral(a: &FiniteGroup) -> Result<(FiniteGroup, Subgroup), GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let m = a.order();
    let n = 2 * m;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xe) = (x % m, x / m);
        for y in 0..n {
            let (ya, ye) = (y % m, y / m);
            // (xa, xe)(ya, ye) = (xa * s^xe(ya), xe + ye)
            let moved = if xe == 1 { a.inv(ya) } else { ya };
            table[x * n + y] = (((xe + ye) % 2) * m + a.mul(xa, moved)) as u32;
        }
    }
    Ok((
        FiniteGroup::from_table_unchecked(n, table),
        Subgroup {
            members: (0..m).collect(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group::DEFAULT_ORDER_CAP;

    /// D4 acting on the square; returns (group, r, s).
    fn d4() -> (FiniteGroup, Elem, Elem) {
        let g = FiniteGroup::from_permutations(
            4,
            &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]],
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        (g, 1, 2)
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![0, 2, 1]], DEFAULT_ORDER_CAP)
            .unwrap()
    }

    #[test]
    fn generated_in_z6() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(subgroup_generated(&z6, &[2]).members(), &[0, 2, 4]);
        assert_eq!(subgroup_generated(&z6, &[]).members(), &[0]);
    }

    #[test]
    fn d4_rotation_subgroup() {
        let (g, r, _) = d4();
        let h = subgroup_generated(&g, &[r]);
        assert_eq!(h.order(), 4);
        assert!(h.members().iter().all(|&x| g.element_order(x) <= 4));
    }

    #[test]
    fn normal_closures() {
        let (g, r, s) = d4();
        assert_eq!(normal_closure(&g, &[0]), Subgroup::trivial());
        let k = normal_closure(&g, &[s]);
        let r2 = g.mul(r, r);
        let expected = Subgroup::from_members(&g, vec![0, r2, s, g.mul(r2, s)]).unwrap();
        assert_eq!(k, expected);
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(normal_closure(&z6, &[3]), subgroup_generated(&z6, &[3]));
    }

    #[test]
    fn commutators() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(
            commutator_subgroup(&z6, &Subgroup::whole(&z6)),
            Subgroup::trivial()
        );
        let s3 = s3();
        let c = commutator_subgroup(&s3, &Subgroup::whole(&s3));
        assert_eq!(c.order(), 3);
        let (g, r, _) = d4();
        let c = commutator_subgroup(&g, &Subgroup::whole(&g));
        assert_eq!(c, Subgroup::from_members(&g, vec![0, g.mul(r, r)]).unwrap());
    }

    #[test]
    fn centers() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(center(&z6).order(), 6);
        let (g, r, _) = d4();
        let z = center(&g);
        assert_eq!(z.order(), 2);
        assert!(z.contains(g.mul(r, r)));
        assert_eq!(center(&s3()), Subgroup::trivial());
    }

    #[test]
    fn quotients() {
        let z6 = FiniteGroup::cyclic(6);
        let (q, p) = quotient_group(&z6, &Subgroup::trivial()).unwrap();
        assert!(q.same_table(&z6));
        assert_eq!(p, GroupHom::identity(&z6));
        let (q, p) = quotient_group(&z6, &subgroup_generated(&z6, &[3])).unwrap();
        assert_eq!(q.order(), 3);
        assert!(p.is_homomorphism(&z6, &q));
        let (g, _, _) = d4();
        let (q, p) = quotient_group(&g, &center(&g)).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!(q.elements().all(|x| q.element_order(x) <= 2));
        assert_eq!(p.kernel(), center(&g));
    }

    #[test]
    fn quotient_requires_normality() {
        let s3 = s3();
        let h = subgroup_generated(&s3, &[1]);
        assert_eq!(h.order(), 2);
        assert_eq!(quotient_group(&s3, &h).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn generalized_dihedral_recognition() {
        let v4 = FiniteGroup::abelian(&[2, 2]);
        for x in 1..4 {
            let a = subgroup_generated(&v4, &[x]);
            assert!(is_generalized_dihedral(&v4, &a).unwrap());
        }
        let (g, r, _) = d4();
        assert!(is_generalized_dihedral(&g, &subgroup_generated(&g, &[r])).unwrap());
        let z4 = FiniteGroup::cyclic(4);
        assert!(!is_generalized_dihedral(&z4, &subgroup_generated(&z4, &[2])).unwrap());
        assert_eq!(
            is_generalized_dihedral(&z4, &Subgroup::trivial()).unwrap_err(),
            GroupError::IndexNotTwo { index: 4 }
        );
    }

    #[test]
    fn dihedral_construction() {
        let (d, a) = generalized_dihedral(&FiniteGroup::cyclic(4)).unwrap();
        assert_eq!(d.order(), 8);
        assert_eq!(d.associativity_violation(), None);
        assert!(is_generalized_dihedral(&d, &a).unwrap());
        assert_eq!(
            generalized_dihedral(&s3()).unwrap_err(),
            GroupError::NotAbelian
        );
    }
}
