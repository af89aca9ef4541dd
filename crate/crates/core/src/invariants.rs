//! Numerical invariants of semi-isogenous mixed quotients and dihedral surfaces.

use thiserror::Error;

use crate::cover::MixedAction;
use crate::ramification::order_two_outer;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InvariantsError {
    #[error("|G0| = {order_g0} does not divide g(C) - 1 = {g_minus_one}")]
    NonIntegralData { order_g0: u64, g_minus_one: i64 },
    #[error("G0 does not act freely on C")]
    NotSemiIsogenous,
    #[error("K^2 numerator {numerator} is not divisible by |G| = {order}")]
    NonIntegralResult { numerator: i64, order: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralInvariants {
    pub q: i64,
    pub chi: i64,
    pub ksq: i64,
}

impl DihedralInvariants {
    /// `p_g = χ − 1 + q`.
    pub fn pg(&self) -> i64 {
        self.chi - 1 + self.q
    }
}

/// Invariants of `(C × C)/D(G⁰)` for abelian `G⁰` acting freely on `C`.
pub fn dihedral_invariants(order_g0: u64, g_c: u64) -> Result<DihedralInvariants, InvariantsError> {
    let n = order_g0 as i64;
    let g_minus_one = g_c as i64 - 1;
    if n == 0 || g_minus_one % n != 0 {
        return Err(InvariantsError::NonIntegralData {
            order_g0,
            g_minus_one,
        });
    }
    let q = g_minus_one / n + 1;
    Ok(DihedralInvariants {
        q,
        chi: n * (q - 1) * (q - 2) / 2,
        ksq: n * (q - 1) * (4 * q - 9),
    })
}

/// `K²_X = [8(g−1)² − 10·|O₂|·(g−1)] / |G|`.
pub fn semi_isogenous_ksq(action: &MixedAction) -> Result<i64, InvariantsError> {
    if !action.is_semi_isogenous() {
        return Err(InvariantsError::NotSemiIsogenous);
    }
    let g1 = action.genus_c() as i64 - 1;
    let n = order_two_outer(action).len() as i64;
    let order = action.group().order() as u64;
    let numerator = 8 * g1 * g1 - 10 * n * g1;
    if numerator % order as i64 != 0 {
        return Err(InvariantsError::NonIntegralResult { numerator, order });
    }
    Ok(numerator / order as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dihedral_formulas() {
        assert_eq!(
            dihedral_invariants(2, 5).unwrap(),
            DihedralInvariants {
                q: 3,
                chi: 2,
                ksq: 12
            }
        );
        assert_eq!(dihedral_invariants(2, 5).unwrap().pg(), 4);
        assert_eq!(
            dihedral_invariants(2, 3).unwrap(),
            DihedralInvariants {
                q: 2,
                chi: 0,
                ksq: -2
            }
        );
        for g in 1..12u64 {
            let gi = g as i64;
            let d = dihedral_invariants(1, g).unwrap();
            assert_eq!(
                d,
                DihedralInvariants {
                    q: gi,
                    chi: (gi - 1) * (gi - 2) / 2,
                    ksq: (gi - 1) * (4 * gi - 9)
                }
            );
        }
        assert_eq!(
            dihedral_invariants(3, 5).unwrap_err(),
            InvariantsError::NonIntegralData {
                order_g0: 3,
                g_minus_one: 4
            }
        );
    }

    #[test]
    fn catalog_self_intersections() {
        assert_eq!(semi_isogenous_ksq(&fixtures::z6()).unwrap(), 7);
        assert_eq!(semi_isogenous_ksq(&fixtures::d4_klein().0).unwrap(), 6);
        assert_eq!(semi_isogenous_ksq(&fixtures::z2z4()).unwrap(), 6);
        assert_eq!(semi_isogenous_ksq(&fixtures::d6_s3()).unwrap(), 4);
        assert_eq!(semi_isogenous_ksq(&fixtures::d4z2()).unwrap(), 2);
        assert_eq!(semi_isogenous_ksq(&fixtures::pauli()).unwrap(), 2);
        assert_eq!(semi_isogenous_ksq(&fixtures::q3_dihedral()).unwrap(), 12);
        assert_eq!(
            semi_isogenous_ksq(&fixtures::z6_branched()).unwrap_err(),
            InvariantsError::NotSemiIsogenous
        );
    }
}
