//! Ramification of `C × C → X` and of the further quotient maps, read off from
//! squares of outer elements.

use thiserror::Error;

use crate::cover::MixedAction;
use crate::groups::{Elem, Subgroup};
use crate::lattice::is_admissible;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RamificationError {
    #[error("G0 does not act freely on C")]
    NotSemiIsogenous,
    #[error("kernel is not a subgroup of G0 normal in G")]
    KernelNotAdmissible,
}

/// The curve `R_g`, also known as the graph `Γ_h` with `h = τ′g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveLabel {
    pub g: Elem,
    pub h: Elem,
    pub genus: u64,
}

/// All element sets are ascending lists of `G` indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub o2: Vec<Elem>,
    pub curve_labels: Vec<CurveLabel>,
    pub quotient_ramification: Vec<Elem>,
    pub pi_k: Vec<Elem>,
    pub rho_k: Vec<Elem>,
    pub simple: bool,
}

/// `O₂ = {g ∈ G ∖ G⁰ : g² = 1}`.
pub fn order_two_outer(action: &MixedAction) -> Vec<Elem> {
    let g = action.group();
    action
        .outer_elements()
        .into_iter()
        .filter(|&x| g.mul(x, x) == 0)
        .collect()
}

/// Partition of `G ∖ G⁰` by where `g²` falls relative to `K` (local).
pub fn ramification_report(
    action: &MixedAction,
    k: &Subgroup,
) -> Result<RamificationReport, RamificationError> {
    if !action.is_semi_isogenous() {
        return Err(RamificationError::NotSemiIsogenous);
    }
    if !is_admissible(action, k) {
        return Err(RamificationError::KernelNotAdmissible);
    }
    let g = action.group();
    let k_in_g = action.lift(k);
    let outer = action.outer_elements();
    let curve_labels = outer
        .iter()
        .map(|&x| CurveLabel {
            g: x,
            h: g.mul(action.tau_prime(), x),
            genus: action.genus_c(),
        })
        .collect();
    let (mut pi_k, mut rho_k) = (Vec::new(), Vec::new());
    for &x in &outer {
        let sq = g.mul(x, x);
        if sq == 0 {
            continue;
        }
        if k_in_g.contains(sq) {
            pi_k.push(x);
        } else {
            rho_k.push(x);
        }
    }
    let o2 = order_two_outer(action);
    Ok(RamificationReport {
        quotient_ramification: o2.clone(),
        o2,
        curve_labels,
        pi_k,
        rho_k,
        simple: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn order_two_counts() {
        assert_eq!(order_two_outer(&fixtures::z6()), vec![3]);
        let (d4, r, s) = fixtures::d4_klein();
        let g = d4.group();
        let rs = g.mul(r, s);
        let r3s = g.mul(g.pow(r, 3), s);
        let mut expected = vec![rs, r3s];
        expected.sort();
        assert_eq!(order_two_outer(&d4), expected);
        assert_eq!(order_two_outer(&fixtures::q3_dihedral()).len(), 2);
        assert_eq!(order_two_outer(&fixtures::d6_s3()).len(), 4);
        assert_eq!(order_two_outer(&fixtures::d4z2()).len(), 6);
        assert_eq!(order_two_outer(&fixtures::pauli()).len(), 6);
    }

    #[test]
    fn z6_partition() {
        let a = fixtures::z6();
        let rep = ramification_report(&a, &Subgroup::whole(a.g0_group())).unwrap();
        assert_eq!(rep.pi_k, vec![1, 5]);
        assert!(rep.rho_k.is_empty());
        assert_eq!(rep.quotient_ramification, vec![3]);
        assert_eq!(
            rep.curve_labels.iter().map(|c| c.h).collect::<Vec<_>>(),
            vec![2, 4, 0]
        );
        let rep = ramification_report(&a, &Subgroup::trivial()).unwrap();
        assert!(rep.pi_k.is_empty());
        assert_eq!(rep.rho_k, vec![1, 5]);
    }

    #[test]
    fn d4_center_partition() {
        let (d4, r, s) = fixtures::d4_klein();
        let g = d4.group();
        let r2 = d4.to_local(g.mul(r, r)).unwrap();
        let k = Subgroup::from_members(d4.g0_group(), vec![0, r2]).unwrap();
        let rep = ramification_report(&d4, &k).unwrap();
        let mut expected = vec![r, g.pow(r, 3)];
        expected.sort();
        assert_eq!(rep.pi_k, expected);
        assert!(rep.rho_k.is_empty());
        let ls = d4.to_local(s).unwrap();
        let bad = Subgroup::from_members(d4.g0_group(), vec![0, ls]).unwrap();
        assert_eq!(
            ramification_report(&d4, &bad).unwrap_err(),
            RamificationError::KernelNotAdmissible
        );
    }

    #[test]
    fn branched_actions_rejected() {
        let a = fixtures::z6_branched();
        assert_eq!(
            ramification_report(&a, &Subgroup::trivial()).unwrap_err(),
            RamificationError::NotSemiIsogenous
        );
    }
}
