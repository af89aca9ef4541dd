//! Brute-force isomorphism search. Meant for groups of order at most 16.

use std::collections::VecDeque;

use super::group::{Elem, FiniteGroup};
use super::subgroup::{subgroup_generated, GroupHom};

/// An isomorphism `a -> b` if one exists.
///
/// Generators of `a` are picked greedily by decreasing element order; every
/// assignment of order-compatible images is extended along a Schreier tree and
/// tested for bijectivity and the homomorphism law.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    let order_profile = |g: &FiniteGroup| {
        let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    };
    if order_profile(a) != order_profile(b) || a.is_abelian() != b.is_abelian() {
        return None;
    }

    let mut by_order: Vec<Elem> = a.elements().collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(a.element_order(x)), x));
    let mut gens: Vec<Elem> = Vec::new();
    let mut span = subgroup_generated(a, &[]);
    for x in by_order {
        if span.order() == a.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = subgroup_generated(a, &gens);
        }
    }

    // Schreier tree: tree[x] = (parent, generator index)
    let mut tree = vec![(usize::MAX, usize::MAX); a.order()];
    let mut bfs = vec![0];
    tree[0] = (0, usize::MAX);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (k, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if tree[y].0 == usize::MAX {
                tree[y] = (x, k);
                bfs.push(y);
                queue.push_back(y);
            }
        }
    }

    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            b.elements()
                .filter(|&y| b.element_order(y) == a.element_order(g))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<Elem> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(hom) = extend(a, b, &bfs, &tree, &images) {
            return Some(hom);
        }
        // odometer over candidate lists
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend(
    a: &FiniteGroup,
    b: &FiniteGroup,
    bfs: &[Elem],
    tree: &[(Elem, usize)],
    images: &[Elem],
) -> Option<GroupHom> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = 0;
    used[0] = true;
    for &x in &bfs[1..] {
        let (p, k) = tree[x];
        let y = b.mul(map[p], images[k]);
        if used[y] {
            return None;
        }
        used[y] = true;
        map[x] = y;
    }
    let hom = GroupHom::from_images(map);
    hom.is_homomorphism(a, b).then_some(hom)
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::subgroup::generalized_dihedral;

    #[test]
    fn cyclic_products() {
        assert!(is_isomorphic(
            &FiniteGroup::cyclic(6),
            &FiniteGroup::abelian(&[2, 3])
        ));
        assert!(!is_isomorphic(
            &FiniteGroup::cyclic(4),
            &FiniteGroup::abelian(&[2, 2])
        ));
        assert!(is_isomorphic(
            &FiniteGroup::abelian(&[2, 4]),
            &FiniteGroup::abelian(&[4, 2])
        ));
    }

    #[test]
    fn dihedral_vs_quaternion() {
        let (d4, _) = generalized_dihedral(&FiniteGroup::cyclic(4)).unwrap();
        let perm_d4 =
            FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]], 100).unwrap();
        let hom = find_isomorphism(&d4, &perm_d4).unwrap();
        assert!(hom.is_injective());
        // quaternions in the regular representation: i and j acting on the left
        let q8 = FiniteGroup::from_permutations(
            8,
            &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
            100,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!is_isomorphic(&d4, &q8));
        let (s3, _) = generalized_dihedral(&FiniteGroup::cyclic(3)).unwrap();
        assert!(!is_isomorphic(&s3, &FiniteGroup::cyclic(6)));
    }
}
