//! Exhaustive search for free generating vectors `(a₁, b₁, …, a_g′, b_g′)`.

use std::collections::BTreeSet;

use super::CliError;
use crate::groups::{subgroup_generated, Elem, FiniteGroup};

pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    /// Tuples with `∏[aᵢ, bᵢ] = 1` generating the group.
    pub total: u64,
    /// Least element of each simultaneous-conjugation orbit, ascending.
    pub representatives: Vec<Vec<Elem>>,
}

impl SearchSummary {
    pub fn orbits(&self) -> usize {
        self.representatives.len()
    }
}

pub fn search_free(
    group: &FiniteGroup,
    base_genus: usize,
    budget: u128,
) -> Result<SearchSummary, CliError> {
    if base_genus < 2 {
        return Err(CliError::BaseGenusTooSmall(base_genus));
    }
    let n = group.order();
    let len = 2 * base_genus;
    let needed = (n as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(CliError::BudgetExceeded { needed, budget });
    }
    let mut tuple = vec![0; len];
    let mut total = 0u64;
    let mut reps = BTreeSet::new();
    loop {
        let relation = group.product(tuple.chunks(2).map(|p| group.commutator(p[0], p[1])));
        if relation == 0 && subgroup_generated(group, &tuple).order() == n {
            total += 1;
            let canonical = group
                .elements()
                .map(|x| tuple.iter().map(|&t| group.conj(x, t)).collect::<Vec<_>>())
                .min()
                .expect("nonempty group");
            reps.insert(canonical);
        }
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(SearchSummary {
                    total,
                    representatives: reps.into_iter().collect(),
                });
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < n {
                break;
            }
            tuple[k] = 0;
        }
    }
}
