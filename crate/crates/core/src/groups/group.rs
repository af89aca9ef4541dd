//! Dense finite groups backed by a full Cayley table.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::error::{GroupError, NotAGroupReason};

/// Element of a [`FiniteGroup`]: an index into its Cayley table.
pub type Elem = usize;

/// Default cap on the order of any group built by closure.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Orders up to this bound get an exhaustive associativity scan.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
const SAMPLED_ASSOC_TRIPLES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<Elem>,
    /// Permutation (0-based images) for each element, when built from permutations.
    labels: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Builds a group from a trusted multiplication table with identity at 0.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row
                .iter()
                .position(|&x| x == 0)
                .expect("row without identity");
        }
        FiniteGroup {
            order,
            table,
            inverse,
            labels: None,
        }
    }

    /// Validates a Cayley table and relabels its identity to index 0.
    ///
    /// Every group axiom is checked; associativity is scanned exhaustively up
    /// to order 512 and sampled with a fixed seed above that.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NotAGroup(NotAGroupReason::Empty));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(NotAGroupReason::NotSquare {
                    row: i,
                    len: row.len(),
                }));
            }
            if let Some(col) = row.iter().position(|&x| x >= n) {
                return Err(GroupError::NotAGroup(NotAGroupReason::EntryOutOfRange {
                    row: i,
                    col,
                }));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if seen[x] == i {
                    return Err(GroupError::NotAGroup(NotAGroupReason::RowNotPermutation {
                        row: i,
                        col: j,
                    }));
                }
                seen[x] = i;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for j in 0..n {
            for (i, row) in rows.iter().enumerate() {
                let x = row[j];
                if seen[x] == j {
                    return Err(GroupError::NotAGroup(
                        NotAGroupReason::ColumnNotPermutation { row: i, col: j },
                    ));
                }
                seen[x] = j;
            }
        }
        if let Some((a, b, c)) = find_non_associative(n, |a, b| rows[a][b]) {
            return Err(GroupError::NotAGroup(NotAGroupReason::NotAssociative {
                a,
                b,
                c,
            }));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or(GroupError::NotAGroup(NotAGroupReason::NoIdentity))?;

        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| table[a * n + b] == 0 && table[b * n + a] == 0) {
                return Err(GroupError::NotAGroup(NotAGroupReason::MissingInverse {
                    element: relabel(a),
                }));
            }
        }
        let group = FiniteGroup::from_table_unchecked(n, table);
        Ok(group)
    }

    /// Closure of a set of permutations of `{0..degree-1}` (0-based one-line images).
    ///
    /// Product convention is composition: `(p * q)(x) = p(q(x))`.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            let mut hit = vec![false; degree];
            let ok = g.len() == degree
                && g.iter()
                    .all(|&x| x < degree && !std::mem::replace(&mut hit[x], true));
            if !ok {
                return Err(GroupError::NotAPermutation { index, degree });
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut index: HashMap<Vec<usize>, Elem> = HashMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        // right_mul[x][k] = x * gen_k; parent/via give a Schreier tree from the identity
        let mut right_mul: Vec<Vec<Elem>> = Vec::new();
        let mut parent = vec![(0usize, usize::MAX)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for (k, g) in generators.iter().enumerate() {
                let prod: Vec<usize> = g.iter().map(|&i| elems[x][i]).collect();
                let id = match index.get(&prod) {
                    Some(&id) => id,
                    None => {
                        let id = elems.len();
                        if id >= cap {
                            return Err(GroupError::GroupTooLarge { order: id + 1, cap });
                        }
                        index.insert(prod.clone(), id);
                        elems.push(prod);
                        parent.push((x, k));
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            if right_mul.len() <= x {
                right_mul.resize(x + 1, Vec::new());
            }
            right_mul[x] = row;
        }
        let n = elems.len();
        // BFS order guarantees parent(b) < b, so rows fill left to right.
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
            for b in 1..n {
                let (p, k) = parent[b];
                let ap = table[a * n + p] as usize;
                table[a * n + b] = right_mul[ap][k] as u32;
            }
        }
        let mut group = FiniteGroup::from_table_unchecked(n, table);
        group.labels = Some(elems);
        Ok(group)
    }

    /// Integers mod `n` under addition; element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        FiniteGroup::from_table_unchecked(n, table)
    }

    /// Direct product; element `(a, b)` has index `a * |right| + b`.
    pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Self {
        let (m, k) = (left.order, right.order);
        let n = m * k;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let a = left.mul(x / k, y / k);
                let b = right.mul(x % k, y % k);
                table[x * n + y] = (a * k + b) as u32;
            }
        }
        FiniteGroup::from_table_unchecked(n, table)
    }

    /// `Z/f_1 x ... x Z/f_k` for the given cyclic factors.
    pub fn abelian(factors: &[usize]) -> Self {
        factors.iter().fold(FiniteGroup::cyclic(1), |acc, &f| {
            FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(f))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// `g a g^-1`
    pub fn conj(&self, g: Elem, a: Elem) -> Elem {
        self.mul(self.mul(g, a), self.inverse[g])
    }

    /// `a b a^-1 b^-1`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inverse[a], self.inverse[b]))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut acc, mut base) = (0, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn permutation_labels(&self) -> Option<&[Vec<usize>]> {
        self.labels.as_deref()
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    /// Same multiplication law, ignoring any permutation labels.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    /// First triple `(a, b, c)` with `(ab)c != a(bc)`, if any.
    pub fn associativity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        find_non_associative(self.order, |a, b| self.mul(a, b))
    }
}

/// Exhaustive scan up to order 512, fixed-seed sampling above.
fn find_non_associative(
    n: usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Option<(usize, usize, usize)> {
    let bad = |a: usize, b: usize, c: usize| mul(mul(a, b), c) != mul(a, mul(b, c));
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if bad(a, b, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_7873);
        (0..SAMPLED_ASSOC_TRIPLES)
            .map(|_| {
                (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )
            })
            .find(|&(a, b, c)| bad(a, b, c))
    }
}
