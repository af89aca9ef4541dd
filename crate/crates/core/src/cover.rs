//! The mixed-action datum: a Galois cover `C -> C/G⁰` given by a generating
//! vector, a degree-two extension `G ⊃ G⁰`, and a chosen outer element `τ′`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::groups::{subgroup_generated, Elem, FiniteGroup, GroupError, GroupHom, Subgroup};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("element {0} is out of range")]
    ElementOutOfRange(Elem),
    #[error("expected {expected} hyperbolic pairs, got {got}")]
    HyperbolicCount { expected: usize, got: usize },
    #[error("long relation fails: product is {product}, not the identity")]
    RelationFailure { product: Elem },
    #[error("generating vector spans a subgroup of order {spans} in a group of order {order}")]
    NotGenerating { spans: usize, order: usize },
    #[error("elliptic element {index} is the identity")]
    BadEllipticOrder { index: usize },
    #[error("elliptic element {index} has order {actual}, declared {declared}")]
    EllipticOrderMismatch {
        index: usize,
        declared: usize,
        actual: usize,
    },
    #[error("Riemann-Hurwitz gives non-integral genus (2g-2 = {twice_minus_two})")]
    NonIntegralGenus { twice_minus_two: i64 },
    #[error("G0 members do not form a subgroup")]
    NotASubgroup,
    #[error("G0 has index {index} in G, expected 2")]
    IndexNotTwo { index: usize },
    #[error("tau' = {0} lies inside G0")]
    TauPrimeInsideG0(Elem),
    #[error("generating vector group does not match the subgroup G0")]
    GroupMismatch,
}

/// Combinatorial datum of a `G⁰`-Galois cover of a genus-`g′` curve.
#[derive(Clone, Debug)]
pub struct GeneratingVector {
    group: FiniteGroup,
    base_genus: usize,
    hyperbolic: Vec<(Elem, Elem)>,
    elliptic: Vec<Elem>,
    orders: Vec<usize>,
}

/// Validates `∏[aᵢ,bᵢ]·∏cⱼ = 1`, generation, and the branch orders.
///
/// Branch orders are always recomputed from the table; `declared_orders`, when
/// given, must agree with them.
pub fn make_generating_vector(
    group: FiniteGroup,
    base_genus: usize,
    hyperbolic: Vec<(Elem, Elem)>,
    elliptic: Vec<Elem>,
    declared_orders: Option<&[usize]>,
) -> Result<GeneratingVector, CoverError> {
    if hyperbolic.len() != base_genus {
        return Err(CoverError::HyperbolicCount {
            expected: base_genus,
            got: hyperbolic.len(),
        });
    }
    let n = group.order();
    let flat = hyperbolic
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .chain(elliptic.iter().copied());
    if let Some(bad) = flat.clone().find(|&x| x >= n) {
        return Err(CoverError::ElementOutOfRange(bad));
    }
    let mut orders = Vec::with_capacity(elliptic.len());
    for (index, &c) in elliptic.iter().enumerate() {
        if c == 0 {
            return Err(CoverError::BadEllipticOrder { index });
        }
        let actual = group.element_order(c);
        if let Some(&declared) = declared_orders.and_then(|d| d.get(index)) {
            if declared != actual {
                return Err(CoverError::EllipticOrderMismatch {
                    index,
                    declared,
                    actual,
                });
            }
        }
        orders.push(actual);
    }
    let product = group.product(
        hyperbolic
            .iter()
            .map(|&(a, b)| group.commutator(a, b))
            .chain(elliptic.iter().copied()),
    );
    if product != 0 {
        return Err(CoverError::RelationFailure { product });
    }
    let span = subgroup_generated(&group, &flat.collect::<Vec<_>>());
    if span.order() != n {
        return Err(CoverError::NotGenerating {
            spans: span.order(),
            order: n,
        });
    }
    Ok(GeneratingVector {
        group,
        base_genus,
        hyperbolic,
        elliptic,
        orders,
    })
}

impl GeneratingVector {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn hyperbolic(&self) -> &[(Elem, Elem)] {
        &self.hyperbolic
    }

    pub fn elliptic(&self) -> &[Elem] {
        &self.elliptic
    }

    pub fn branch_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn is_free(&self) -> bool {
        self.elliptic.is_empty()
    }

    /// Riemann–Hurwitz: `2g − 2 = |G⁰|(2g′ − 2) + Σⱼ (|G⁰|/mⱼ)(mⱼ − 1)`.
    pub fn genus_of_c(&self) -> Result<u64, CoverError> {
        let n = self.group.order() as i64;
        let branch: i64 = self
            .orders
            .iter()
            .map(|&m| (n / m as i64) * (m as i64 - 1))
            .sum();
        let twice_minus_two = n * (2 * self.base_genus as i64 - 2) + branch;
        if twice_minus_two % 2 != 0 || twice_minus_two < -2 {
            return Err(CoverError::NonIntegralGenus { twice_minus_two });
        }
        Ok((twice_minus_two / 2 + 1) as u64)
    }

    /// Non-identity elements with a fixed point: every `G⁰`-conjugate of every
    /// nontrivial power of an elliptic generator.
    pub fn sigma_set(&self) -> BTreeSet<Elem> {
        let g = &self.group;
        let mut sigma = BTreeSet::new();
        for (&c, &m) in self.elliptic.iter().zip(&self.orders) {
            for k in 1..m as u64 {
                let p = g.pow(c, k);
                for x in g.elements() {
                    sigma.insert(g.conj(x, p));
                }
            }
        }
        sigma
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityVerdict {
    Minimal(String),
    Unknown(String),
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityVerdict::Minimal(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            MinimalityVerdict::Minimal(_) => "Minimal",
            MinimalityVerdict::Unknown(_) => "Unknown",
        }
    }

    pub fn justification(&self) -> &str {
        match self {
            MinimalityVerdict::Minimal(s) | MinimalityVerdict::Unknown(s) => s,
        }
    }
}

/// A minimal mixed action of `G` on `C × C`.
///
/// `G⁰` is held twice: as a subgroup of `G` and as the standalone group the
/// generating vector lives on, whose element `i` is `g0().members()[i]`.
/// Elements called "local" are indices into the standalone `G⁰`.
#[derive(Clone, Debug)]
pub struct MixedAction {
    group: FiniteGroup,
    g0: Subgroup,
    local_of: Vec<Option<Elem>>,
    tau_prime: Elem,
    tau: Elem,
    phi: GroupHom,
    gv: GeneratingVector,
    genus_c: u64,
    sigma: BTreeSet<Elem>,
}

pub fn make_mixed_action(
    group: FiniteGroup,
    g0_members: &[Elem],
    tau_prime: Elem,
    gv: GeneratingVector,
) -> Result<MixedAction, CoverError> {
    if let Some(&bad) = g0_members
        .iter()
        .chain([&tau_prime])
        .find(|&&x| x >= group.order())
    {
        return Err(CoverError::ElementOutOfRange(bad));
    }
    let g0 = Subgroup::from_members(&group, g0_members.to_vec()).ok_or(CoverError::NotASubgroup)?;
    if g0.order() * 2 != group.order() {
        return Err(CoverError::IndexNotTwo {
            index: group.order() / g0.order(),
        });
    }
    if g0.contains(tau_prime) {
        return Err(CoverError::TauPrimeInsideG0(tau_prime));
    }
    let (g0_group, _) = g0.as_group(&group);
    if !g0_group.same_table(gv.group()) {
        return Err(CoverError::GroupMismatch);
    }
    let mut local_of = vec![None; group.order()];
    for (i, &x) in g0.members().iter().enumerate() {
        local_of[x] = Some(i);
    }
    let local = |x: Elem| local_of[x].expect("element of G0");
    let tau = local(group.mul(tau_prime, tau_prime));
    let phi = GroupHom::from_images(
        g0.members()
            .iter()
            .map(|&h| local(group.conj(tau_prime, h)))
            .collect(),
    );
    // Index two makes G0 normal, so conjugation by tau' is an automorphism.
    assert!(
        phi.is_injective() && phi.is_homomorphism(gv.group(), gv.group()),
        "Ad(tau') is not an automorphism of G0"
    );
    let genus_c = gv.genus_of_c()?;
    let sigma = gv.sigma_set();
    Ok(MixedAction {
        group,
        g0,
        local_of,
        tau_prime,
        tau,
        phi,
        gv,
        genus_c,
        sigma,
    })
}

impl MixedAction {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// `G⁰` as a subgroup of `G`.
    pub fn g0(&self) -> &Subgroup {
        &self.g0
    }

    /// `G⁰` as a standalone group.
    pub fn g0_group(&self) -> &FiniteGroup {
        self.gv.group()
    }

    pub fn order_g0(&self) -> usize {
        self.g0.order()
    }

    /// Local `G⁰` element to its index in `G`.
    pub fn to_g(&self, local: Elem) -> Elem {
        self.g0.members()[local]
    }

    /// Element of `G` to its local `G⁰` index, if it lies in `G⁰`.
    pub fn to_local(&self, x: Elem) -> Option<Elem> {
        self.local_of[x]
    }

    /// A subgroup of local `G⁰` as a subgroup of `G`.
    pub fn lift(&self, k: &Subgroup) -> Subgroup {
        k.map(|x| self.to_g(x))
    }

    pub fn tau_prime(&self) -> Elem {
        self.tau_prime
    }

    /// `τ = τ′²`, local.
    pub fn tau(&self) -> Elem {
        self.tau
    }

    /// `φ = Ad(τ′)` on local `G⁰`.
    pub fn phi(&self) -> &GroupHom {
        &self.phi
    }

    pub fn gv(&self) -> &GeneratingVector {
        &self.gv
    }

    pub fn genus_c(&self) -> u64 {
        self.genus_c
    }

    /// `Σ`, local and without the identity.
    pub fn sigma(&self) -> &BTreeSet<Elem> {
        &self.sigma
    }

    /// `G ∖ G⁰`, ascending.
    pub fn outer_elements(&self) -> Vec<Elem> {
        self.group
            .elements()
            .filter(|&x| self.local_of[x].is_none())
            .collect()
    }

    /// `q(S) = g(C/G⁰)`.
    pub fn irregularity(&self) -> usize {
        self.gv.base_genus()
    }

    pub fn is_semi_isogenous(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn minimality_verdict(&self) -> MinimalityVerdict {
        let q = self.irregularity();
        if q >= 3 {
            MinimalityVerdict::Minimal(format!(
                "irregularity {q} >= 3: every mixed surface with q >= 3 is minimal"
            ))
        } else {
            MinimalityVerdict::Unknown(format!(
                "irregularity {q} < 3: non-minimal mixed surfaces exist with q = 0, 1, 2"
            ))
        }
    }

    /// The same datum with `τ′` replaced by `τ′·h` (`h` local).
    pub fn with_tau_prime_shifted(&self, h: Elem) -> Result<MixedAction, CoverError> {
        let tp = self.group.mul(self.tau_prime, self.to_g(h));
        make_mixed_action(self.group.clone(), self.g0.members(), tp, self.gv.clone())
    }
}
