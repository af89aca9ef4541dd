use proptest::prelude::*;

use mixsurf::albanese::{albanese_report, canonical_kernel, polarization_type};
use mixsurf::cli::search_free;
use mixsurf::cover::{make_generating_vector, make_mixed_action, MixedAction};
use mixsurf::groups::{
    abelian_invariants_of, embed_mixed, generalized_dihedral, normal_closure, quotient_group, Elem,
    FiniteGroup, SquareExtension, Subgroup,
};
use mixsurf::lattice::{admissible_kernels, LatticeOptions};
use mixsurf::ramification::ramification_report;

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

fn perm_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=5)
        .prop_flat_map(|d| {
            prop::collection::vec(permutation(d), 1..=3).prop_map(move |gens| (d, gens))
        })
        .prop_map(|(d, gens)| FiniteGroup::from_permutations(d, &gens, 200).unwrap())
}

fn small_abelian() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=6, 0..=3)
        .prop_filter("order at most 24", |f| f.iter().product::<usize>() <= 24)
}

/// `D(A)` acting with `G⁰ = A` freely over a base of genus `base_genus`.
fn dihedral_action(factors: &[usize], base_genus: usize) -> MixedAction {
    let a = FiniteGroup::abelian(factors);
    let (d, sub) = generalized_dihedral(&a).unwrap();
    let mut gens: Vec<Elem> = Vec::new();
    for x in a.elements() {
        if !mixsurf::groups::subgroup_generated(&a, &gens).contains(x) {
            gens.push(x);
        }
    }
    gens.resize(2 * base_genus.max(gens.len().div_ceil(2)), 0);
    let base = gens.len() / 2;
    let hyp = gens.chunks(2).map(|c| (c[0], c[1])).collect();
    let gv = make_generating_vector(a.clone(), base, hyp, vec![], None).unwrap();
    make_mixed_action(d, sub.members(), a.order(), gv).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_tables_satisfy_group_axioms(g in perm_group()) {
        prop_assert_eq!(g.associativity_violation(), None);
        for a in g.elements() {
            prop_assert_eq!(g.mul(a, 0), a);
            prop_assert_eq!(g.mul(0, a), a);
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        let rows: Vec<Vec<usize>> = g.elements().map(|a| g.row(a).collect()).collect();
        prop_assert!(FiniteGroup::from_cayley(&rows).unwrap().same_table(&g));
    }

    #[test]
    fn quotient_map_is_a_homomorphism(g in perm_group(), seed in any::<prop::sample::Index>()) {
        let x = seed.index(g.order());
        let n = normal_closure(&g, &[x]);
        let (q, proj) = quotient_group(&g, &n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert!(proj.is_homomorphism(&g, &q));
        prop_assert_eq!(proj.kernel(), n);
    }

    #[test]
    fn invariant_factors_match_element_counts(factors in small_abelian()) {
        let g = FiniteGroup::abelian(&factors);
        let inv = abelian_invariants_of(&g).unwrap();
        prop_assert_eq!(inv.iter().product::<u64>(), g.order() as u64);
        prop_assert!(inv.windows(2).all(|w| w[1] % w[0] == 0));
        // number of solutions of d*x = 0 determines the group
        for d in 1..=g.order() {
            let solutions = g.elements().filter(|&x| g.pow(x, d as u64) == 0).count() as u64;
            let predicted: u64 = inv.iter().map(|&f| num_integer::gcd(d as u64, f)).product();
            prop_assert_eq!(solutions, predicted);
        }
    }

    #[test]
    fn polarization_rebuilds_chain(chain in prop::collection::vec(1u64..=4, 0..=4), extra in 0usize..=2) {
        // turn arbitrary entries into a divisor chain f_1 | f_2 | ...
        let mut f = Vec::new();
        let mut acc = 1;
        for c in chain.iter().map(|&c| c + 1) {
            acc *= c;
            f.push(acc);
        }
        let q = f.len() + extra;
        let p = polarization_type(&f, q).unwrap();
        prop_assert_eq!(p.len(), q);
        if q > 0 {
            prop_assert_eq!(p[0], 1);
        }
        let top: u64 = p.iter().product();
        let first = if extra > 0 { 1 } else { f.first().copied().unwrap_or(1) };
        prop_assert_eq!(top * first, f.last().copied().unwrap_or(1));
        if !f.is_empty() {
            prop_assert!(polarization_type(&f, f.len() - 1).is_err());
        }
    }

    #[test]
    fn dihedral_surfaces_have_trivial_kernel(factors in small_abelian(), base_genus in 2usize..=3) {
        let action = dihedral_action(&factors, base_genus);
        let k = canonical_kernel(&action);
        prop_assert_eq!(k.order(), 1);
        let map = albanese_report(&action).unwrap().map.unwrap();
        prop_assert_eq!(map.degree, 1);
        prop_assert_eq!(map.kernel_invariants, abelian_invariants_of(action.g0_group()).unwrap());
    }

    #[test]
    fn ramification_partitions_outer_elements(factors in small_abelian()) {
        let action = dihedral_action(&factors, 2);
        for k in admissible_kernels(&action, &LatticeOptions::default()).unwrap() {
            let r = ramification_report(&action, &k).unwrap();
            prop_assert_eq!(r.quotient_ramification.len() + r.pi_k.len() + r.rho_k.len(), action.order_g0());
        }
        let whole = ramification_report(&action, &Subgroup::whole(action.g0_group())).unwrap();
        prop_assert!(whole.rho_k.is_empty());
    }

    #[test]
    fn embedding_is_injective(factors in small_abelian().prop_filter("square fits", |f| f.iter().product::<usize>() <= 8)) {
        let action = dihedral_action(&factors, 2);
        let sq = SquareExtension::new(action.g0_group(), 20_000).unwrap();
        let e = embed_mixed(&sq, &action).unwrap();
        prop_assert!(e.is_injective());
        prop_assert!(e.is_homomorphism(action.group(), sq.group()));
    }

    #[test]
    fn canonical_kernel_ignores_tau_prime_shift(factors in small_abelian(), shift in any::<prop::sample::Index>()) {
        let action = dihedral_action(&factors, 2);
        let h = shift.index(action.order_g0());
        let shifted = action.with_tau_prime_shifted(h).unwrap();
        prop_assert_eq!(canonical_kernel(&shifted), canonical_kernel(&action));
    }
}

#[test]
fn search_ignores_generator_order() {
    let r = vec![1, 2, 3, 0];
    let s = vec![2, 1, 0, 3];
    let a = FiniteGroup::from_permutations(4, &[r.clone(), s.clone()], 100).unwrap();
    let b = FiniteGroup::from_permutations(4, &[s, r], 100).unwrap();
    assert!(!a.same_table(&b));
    let sa = search_free(&a, 2, 1 << 20).unwrap();
    let sb = search_free(&b, 2, 1 << 20).unwrap();
    assert_eq!(sa.total, sb.total);
    assert_eq!(sa.orbits(), sb.orbits());
}

#[test]
fn normal_gk_gives_dihedral_quotient_on_catalog() {
    for e in mixsurf::cli::catalog::entries() {
        let action = e.analysis_config().unwrap().action;
        let lattice =
            mixsurf::lattice::quotient_lattice(&action, &LatticeOptions::default()).unwrap();
        for fq in lattice.quotients.iter().filter(|fq| fq.normal_in_square) {
            assert!(
                fq.is_dihedral_target,
                "{}: |K| = {}",
                e.family,
                fq.kernel.order()
            );
        }
    }
}
