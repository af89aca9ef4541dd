//! Invariant factors of finite abelian groups via Smith normal form over the integers.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::error::GroupError;
use super::group::{Elem, FiniteGroup};
use super::subgroup::{is_abelian_subgroup, subgroup_generated, Subgroup};

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_nonzero(&a, t) else {
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut dirty = false;
            for i in t + 1..rows {
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    for j in t..cols {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest; otherwise fold an offending row in and retry
            let pivot = a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Invariant factors `f_1 | f_2 | ... | f_k` (all `> 1`) of an abelian subgroup.
///
/// The relation matrix comes from a Schreier tree of a greedy generating set:
/// every edge `x -> x * g_i` of the Cayley graph yields `v(x) + e_i - v(x g_i)`.
pub fn abelian_invariants(group: &FiniteGroup, a: &Subgroup) -> Result<Vec<u64>, GroupError> {
    if !is_abelian_subgroup(group, a) {
        return Err(GroupError::NotAbelian);
    }
    let mut gens: Vec<Elem> = Vec::new();
    let mut span = Subgroup::trivial();
    for &x in a.members() {
        if !span.contains(x) {
            gens.push(x);
            span = subgroup_generated(group, &gens);
        }
    }
    let k = gens.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut coords: Vec<Option<Vec<i64>>> = vec![None; group.order()];
    coords[0] = Some(vec![0; k]);
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let vx = coords[x].clone().expect("visited");
        for (i, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            let mut step = vx.clone();
            step[i] += 1;
            match &coords[y] {
                None => {
                    coords[y] = Some(step);
                    queue.push_back(y);
                }
                Some(vy) => {
                    let rel: Vec<i64> = step.iter().zip(vy).map(|(s, t)| s - t).collect();
                    if rel.iter().any(|&c| c != 0) {
                        relations.push(rel.into_iter().map(BigInt::from).collect());
                    }
                }
            }
        }
    }
    let diag = smith_diagonal(relations);
    assert_eq!(
        diag.len(),
        k,
        "relation lattice of a finite group has full rank"
    );
    Ok(diag
        .into_iter()
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .filter(|&d| d > 1)
        .collect())
}

/// Invariant factors of a whole abelian group.
pub fn abelian_invariants_of(group: &FiniteGroup) -> Result<Vec<u64>, GroupError> {
    abelian_invariants(group, &Subgroup::whole(group))
}
