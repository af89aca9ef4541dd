//! The canonical kernel `K` and the Albanese data it determines.

use thiserror::Error;

use crate::cover::MixedAction;
use crate::groups::{
    abelian_invariants_of, is_abelian_subgroup, is_generalized_dihedral, is_normal, normal_closure,
    quotient_group, Elem, GroupError, Subgroup,
};
use crate::ramification::ramification_report;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AlbaneseError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
}

/// `G⁰/K` needs more invariant factors than `q` allows.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("invariant factor chain {chain:?} is longer than q = {q}")]
pub struct ChainTooLong {
    pub chain: Vec<u64>,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbaneseReport {
    /// Local `G⁰` indices.
    pub kernel: Subgroup,
    /// The same subgroup inside `G`.
    pub kernel_in_g: Subgroup,
    pub q: usize,
    /// `None` when `q = 0`.
    pub map: Option<AlbaneseMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbaneseMap {
    pub degree: usize,
    /// Invariant factors of `G⁰/K`, which is also the isogeny kernel.
    pub kernel_invariants: Vec<u64>,
    pub polarization: Result<Vec<u64>, ChainTooLong>,
    pub target_genus: u64,
    pub target_order: usize,
    pub dihedral_ok: bool,
    pub max_albanese_dimension: bool,
    pub fibres_rational: bool,
}

/// Normal closure in `G` of `Σ ∪ [G⁰,G⁰] ∪ {g² : g ∈ G ∖ G⁰}`, as a local subgroup.
pub fn canonical_kernel(action: &MixedAction) -> Subgroup {
    let g = action.group();
    let g0 = action.g0_group();
    let mut seeds: Vec<Elem> = action.sigma().iter().map(|&s| action.to_g(s)).collect();
    for a in g0.elements() {
        for b in g0.elements() {
            seeds.push(action.to_g(g0.commutator(a, b)));
        }
    }
    seeds.extend(action.outer_elements().into_iter().map(|x| g.mul(x, x)));
    seeds.sort_unstable();
    seeds.dedup();
    let k = normal_closure(g, &seeds);
    let local = k
        .members()
        .iter()
        .map(|&x| action.to_local(x).expect("generated inside G0"))
        .collect();
    let k = Subgroup::from_members(g0, local).expect("image of a subgroup");

    let lifted = action.lift(&k);
    debug_assert!(seeds.iter().all(|&s| lifted.contains(s)) && is_normal(g, &lifted));
    k
}

/// `(1, f₂/f₁, …, f_q/f_{q−1})` for the chain left-padded with 1s to length `q`.
pub fn polarization_type(chain: &[u64], q: usize) -> Result<Vec<u64>, ChainTooLong> {
    if chain.len() > q {
        return Err(ChainTooLong {
            chain: chain.to_vec(),
            q,
        });
    }
    let mut padded = vec![1; q - chain.len()];
    padded.extend_from_slice(chain);
    let mut out = Vec::with_capacity(q);
    if q > 0 {
        out.push(1);
    }
    out.extend(padded.windows(2).map(|w| w[1] / w[0]));
    Ok(out)
}

pub fn albanese_report(action: &MixedAction) -> Result<AlbaneseReport, AlbaneseError> {
    let kernel = canonical_kernel(action);
    let kernel_in_g = action.lift(&kernel);
    let q = action.irregularity();
    if q == 0 {
        return Ok(AlbaneseReport {
            kernel,
            kernel_in_g,
            q,
            map: None,
        });
    }
    let g = action.group();
    let (target, _) = quotient_group(action.g0_group(), &kernel)?;
    let kernel_invariants = abelian_invariants_of(&target)
        .map_err(|_| AlbaneseError::TheoremViolation("G0/K is not abelian".into()))?;
    let polarization = polarization_type(&kernel_invariants, q);

    let (gk, proj) = quotient_group(g, &kernel_in_g)?;
    let g0_image = action.g0().map(|x| proj.apply(x));
    let free = action.sigma().iter().all(|&s| kernel.contains(s));
    let dihedral_ok =
        free && is_abelian_subgroup(&gk, &g0_image) && is_generalized_dihedral(&gk, &g0_image)?;
    if !dihedral_ok {
        return Err(AlbaneseError::TheoremViolation(
            "G/K is not D(G0/K) with G0/K acting freely".into(),
        ));
    }
    if action.is_semi_isogenous() {
        let ram = ramification_report(action, &kernel)
            .map_err(|e| AlbaneseError::TheoremViolation(format!("ramification at K: {e}")))?;
        if !ram.rho_k.is_empty() {
            return Err(AlbaneseError::TheoremViolation(
                "rho_K ramifies at the canonical kernel".into(),
            ));
        }
    }
    let index = target.order();
    Ok(AlbaneseReport {
        kernel,
        kernel_in_g,
        q,
        map: Some(AlbaneseMap {
            degree: action.order_g0() / index,
            kernel_invariants,
            polarization,
            target_genus: (index * (q - 1) + 1) as u64,
            target_order: index,
            dihedral_ok,
            max_albanese_dimension: q >= 2,
            fibres_rational: q == 1,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::groups::{center, is_isomorphic, FiniteGroup};

    #[test]
    fn polarizations() {
        assert_eq!(polarization_type(&[2], 2).unwrap(), vec![1, 2]);
        assert_eq!(polarization_type(&[2, 2], 2).unwrap(), vec![1, 1]);
        assert_eq!(polarization_type(&[2], 3).unwrap(), vec![1, 1, 2]);
        assert_eq!(polarization_type(&[], 4).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(polarization_type(&[2, 6, 12], 3).unwrap(), vec![1, 3, 2]);
        assert_eq!(
            polarization_type(&[2, 2, 2], 2).unwrap_err(),
            ChainTooLong {
                chain: vec![2, 2, 2],
                q: 2
            }
        );
    }

    #[test]
    fn z6_kernel_is_g0() {
        let a = fixtures::z6();
        assert_eq!(canonical_kernel(&a), Subgroup::whole(a.g0_group()));
        let rep = albanese_report(&a).unwrap();
        let map = rep.map.unwrap();
        assert_eq!(
            (
                map.degree,
                map.kernel_invariants.clone(),
                map.polarization.clone()
            ),
            (3, vec![], Ok(vec![1, 1]))
        );
        assert_eq!(map.target_genus, 2);
        assert!(map.max_albanese_dimension && !map.fibres_rational);
    }

    #[test]
    fn d4_kernel_is_center() {
        let (a, _, _) = fixtures::d4_klein();
        let rep = albanese_report(&a).unwrap();
        assert_eq!(rep.kernel_in_g, center(a.group()));
        let map = rep.map.unwrap();
        assert_eq!(
            (map.degree, map.kernel_invariants, map.polarization),
            (2, vec![2], Ok(vec![1, 2]))
        );
        assert_eq!(map.target_genus, 3);
    }

    #[test]
    fn other_catalog_kernels() {
        let a = fixtures::z2z4();
        let k = canonical_kernel(&a);
        assert_eq!(k.order(), 2);
        let order_two: Vec<Elem> = a
            .g0_group()
            .elements()
            .filter(|&x| a.g0_group().element_order(x) == 2)
            .collect();
        assert_eq!(order_two.len(), 1);
        assert!(k.contains(order_two[0]));

        let a = fixtures::d6_s3();
        let k = canonical_kernel(&a);
        let (kg, _) = k.as_group(a.g0_group());
        assert!(is_isomorphic(&kg, &FiniteGroup::cyclic(3)));
        assert_eq!(
            albanese_report(&a).unwrap().map.unwrap().kernel_invariants,
            vec![2]
        );

        for a in [fixtures::d4z2(), fixtures::pauli()] {
            let rep = albanese_report(&a).unwrap();
            assert_eq!(rep.kernel, center(a.g0_group()));
            let map = rep.map.unwrap();
            assert_eq!(
                (map.degree, map.kernel_invariants, map.polarization),
                (2, vec![2, 2], Ok(vec![1, 1]))
            );
        }

        let a = fixtures::q3_dihedral();
        let rep = albanese_report(&a).unwrap();
        assert_eq!(rep.kernel, Subgroup::trivial());
        assert_eq!(rep.map.unwrap().polarization, Ok(vec![1, 1, 2]));
    }

    #[test]
    fn branched_kernel_contains_sigma() {
        let a = fixtures::z6_branched();
        let k = canonical_kernel(&a);
        assert!(a.sigma().iter().all(|&s| k.contains(s)));
        let map = albanese_report(&a).unwrap().map.unwrap();
        assert!(map.fibres_rational);
        assert_eq!(map.target_genus, 1);
    }

    #[test]
    fn rational_base_is_degenerate() {
        let g0 = FiniteGroup::cyclic(2);
        let gv = crate::cover::make_generating_vector(g0, 0, vec![], vec![1, 1, 1, 1, 1, 1], None)
            .unwrap();
        let a = crate::cover::make_mixed_action(FiniteGroup::cyclic(4), &[0, 2], 1, gv).unwrap();
        let rep = albanese_report(&a).unwrap();
        assert_eq!(rep.q, 0);
        assert!(rep.map.is_none());
    }
}
