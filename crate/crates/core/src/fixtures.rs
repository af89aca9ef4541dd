//! Small mixed actions shared by unit tests.

use crate::cover::{make_generating_vector, make_mixed_action, MixedAction};
use crate::groups::{subgroup_generated, Elem, FiniteGroup, DEFAULT_ORDER_CAP};

/// One-line 0-based permutation from 1-based cycles.
pub fn perm(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for c in cycles {
        for i in 0..c.len() {
            p[c[i] - 1] = c[(i + 1) % c.len()] - 1;
        }
    }
    p
}

/// Builds a free action with `G⁰ = <g0_gens>` and hyperbolic pairs `(a,b),(b,a)`
/// padded with identities up to `base_genus`.
pub fn free_action(
    g: FiniteGroup,
    g0_gens: &[Elem],
    tau_prime: Elem,
    pairs: &[(Elem, Elem)],
    base_genus: usize,
) -> MixedAction {
    let g0 = subgroup_generated(&g, g0_gens);
    let (g0_group, members) = g0.as_group(&g);
    let local = |x: Elem| {
        members
            .iter()
            .position(|&m| m == x)
            .expect("pair element in G0")
    };
    let mut hyp: Vec<(Elem, Elem)> = pairs.iter().map(|&(a, b)| (local(a), local(b))).collect();
    hyp.resize(base_genus, (0, 0));
    let gv = make_generating_vector(g0_group, base_genus, hyp, vec![], None).unwrap();
    make_mixed_action(g, g0.members(), tau_prime, gv).unwrap()
}

fn perm_group(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    FiniteGroup::from_permutations(degree, gens, DEFAULT_ORDER_CAP).unwrap()
}

/// G = Z/6, G⁰ = Z/3, τ′ = 1.
pub fn z6() -> MixedAction {
    let g = FiniteGroup::cyclic(6);
    free_action(g, &[2], 1, &[(2, 0)], 2)
}

/// G = D4 = <r, s>, G⁰ = {1, r², s, r²s}, τ′ = r. Returns (action, r, s).
pub fn d4_klein() -> (MixedAction, Elem, Elem) {
    let g = perm_group(4, &[perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3]])]);
    let (r, s) = (1, 2);
    let r2 = g.mul(r, r);
    let a = free_action(g, &[r2, s], r, &[(r2, s), (s, r2)], 2);
    (a, r, s)
}

/// G = Z/2 x Z/4, G⁰ = {0} x Z/4, τ′ = (1, 0).
pub fn z2z4() -> MixedAction {
    let g = perm_group(6, &[perm(6, &[&[1, 2]]), perm(6, &[&[3, 4, 5, 6]])]);
    free_action(g, &[2], 1, &[(2, 0)], 2)
}

/// G = D6, G⁰ = <r², s> ≅ S3, τ′ = r.
pub fn d6_s3() -> MixedAction {
    let g = perm_group(
        6,
        &[
            perm(6, &[&[1, 2, 3, 4, 5, 6]]),
            perm(6, &[&[2, 6], &[3, 5]]),
        ],
    );
    let (r, s) = (1, 2);
    let r2 = g.mul(r, r);
    free_action(g, &[r2, s], r, &[(r2, s), (s, r2)], 2)
}

/// G = D4 x Z/2, G⁰ = D4 x {0}, τ′ = z.
pub fn d4z2() -> MixedAction {
    let g = perm_group(
        6,
        &[
            perm(6, &[&[1, 2, 3, 4]]),
            perm(6, &[&[1, 3]]),
            perm(6, &[&[5, 6]]),
        ],
    );
    free_action(g, &[1, 2], 3, &[(1, 2), (2, 1)], 2)
}

/// Central product Q8 ∘ Z/4: left multiplication by i, j and right multiplication by i.
pub fn pauli() -> MixedAction {
    let li = vec![2, 3, 1, 0, 6, 7, 5, 4];
    let lj = vec![4, 5, 7, 6, 1, 0, 2, 3];
    let ri = vec![2, 3, 1, 0, 7, 6, 4, 5];
    let g = perm_group(8, &[li, lj, ri]);
    assert_eq!(g.order(), 16);
    free_action(g, &[1, 2], 3, &[(1, 2), (2, 1)], 2)
}

/// G = Z/2 x Z/2, G⁰ = Z/2, q = 3.
pub fn q3_dihedral() -> MixedAction {
    let g = FiniteGroup::abelian(&[2, 2]);
    free_action(g, &[1], 2, &[(1, 0)], 3)
}

/// G = Z/4, G⁰ = Z/2, τ′ = 1: normal G_K at K = {1} without a split quotient.
pub fn z4_over_z2() -> MixedAction {
    free_action(FiniteGroup::cyclic(4), &[2], 1, &[(2, 0)], 2)
}

/// Z/3 with a branched vector (g′ = 1, elliptic [1, 2]) inside Z/6.
pub fn z6_branched() -> MixedAction {
    let g = FiniteGroup::cyclic(6);
    let g0 = subgroup_generated(&g, &[2]);
    let (g0_group, _) = g0.as_group(&g);
    let gv = make_generating_vector(g0_group, 1, vec![(0, 0)], vec![1, 2], None).unwrap();
    make_mixed_action(g, g0.members(), 1, gv).unwrap()
}
