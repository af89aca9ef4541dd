//! Further quotients: the `G`-normal subgroups `K ≤ G⁰`, the intermediate
//! groups `G ⊆ G_K ⊆ G⁰(2)`, and their minimal realizations.

use std::collections::HashSet;

use thiserror::Error;

use crate::cover::MixedAction;
use crate::groups::{
    embed_mixed, find_isomorphism, is_abelian_subgroup, is_generalized_dihedral, is_normal,
    quotient_group, subgroup_generated, Elem, FiniteGroup, GroupError, GroupHom, SquareExtension,
    Subgroup, DEFAULT_ORDER_CAP,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("|G0| = {order} exceeds the subgroup enumeration limit {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("kernel is not a subgroup of G0 normal in G")]
    KernelNotAdmissible,
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
}

/// When to run the exhaustive overgroup audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Audit {
    /// On for `|G⁰| ≤ 8`.
    #[default]
    Auto,
    On,
    Off,
}

#[derive(Clone, Copy, Debug)]
pub struct LatticeOptions {
    pub max_g0_order: usize,
    pub square_cap: usize,
    pub audit: Audit,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions {
            max_g0_order: 64,
            square_cap: DEFAULT_ORDER_CAP,
            audit: Audit::Auto,
        }
    }
}

const AUTO_AUDIT_LIMIT: usize = 8;
/// Coset unions are enumerated over `2^(|G⁰|-1)` subsets; beyond this it is refused.
const HARD_AUDIT_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientGenus {
    Known(u64),
    NotComputed,
}

/// `(C/K × C/K)/(G/K)`: the minimal realization of the further quotient by `K`.
#[derive(Clone, Debug)]
pub struct MinimalRealization {
    pub group: FiniteGroup,
    pub g0: Subgroup,
    pub genus: QuotientGenus,
}

#[derive(Clone, Debug)]
pub struct FurtherQuotient {
    /// `K`, in local `G⁰` indices.
    pub kernel: Subgroup,
    /// `G_K` inside the square extension.
    pub gk: Subgroup,
    pub normal_in_square: bool,
    pub is_dihedral_target: bool,
    pub realization: MinimalRealization,
    /// `deg π_K = |K|`.
    pub pi_degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BijectionAudit {
    /// Subgroups of `G⁰(2)` containing the embedded `G`.
    pub overgroups: usize,
    pub kernels: usize,
}

#[derive(Clone, Debug)]
pub struct QuotientLattice {
    pub square: SquareExtension,
    pub embedding: GroupHom,
    pub quotients: Vec<FurtherQuotient>,
    pub audit: Option<BijectionAudit>,
}

/// `K` (local) is a subgroup of `G⁰` normal in `G`: normal in `G⁰` and `φ(K) = K`.
pub fn is_admissible(action: &MixedAction, k: &Subgroup) -> bool {
    let g0 = action.g0_group();
    Subgroup::from_members(g0, k.members().to_vec()).as_ref() == Some(k)
        && is_normal(g0, k)
        && k.members()
            .iter()
            .all(|&x| k.contains(action.phi().apply(x)))
}

/// Every subgroup, by closure over `<H, x>` with `x` the least element of its coset `xH`.
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut frontier = vec![Subgroup::trivial()];
    seen.insert(Subgroup::trivial());
    while let Some(h) = frontier.pop() {
        let mut covered = h.mask(group.order());
        for x in group.elements() {
            if covered[x] {
                continue;
            }
            for &m in h.members() {
                covered[group.mul(x, m)] = true;
            }
            let mut gens = h.members().to_vec();
            gens.push(x);
            let bigger = subgroup_generated(group, &gens);
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut all: Vec<Subgroup> = seen.into_iter().collect();
    all.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    all
}

/// All subgroups of `G⁰` normal in `G`, sorted by order then members.
pub fn admissible_kernels(
    action: &MixedAction,
    opts: &LatticeOptions,
) -> Result<Vec<Subgroup>, LatticeError> {
    let order = action.order_g0();
    if order > opts.max_g0_order {
        return Err(LatticeError::GroupTooLarge {
            order,
            limit: opts.max_g0_order,
        });
    }
    Ok(all_subgroups(action.g0_group())
        .into_iter()
        .filter(|k| is_admissible(action, k))
        .collect())
}

/// `[G⁰,G⁰] ⊆ K` and `g·φ(g) ∈ K` for all `g ∈ G⁰`.
pub fn normality_criterion(action: &MixedAction, k: &Subgroup) -> bool {
    let g0 = action.g0_group();
    let phi = action.phi();
    g0.elements().all(|g| {
        k.contains(g0.mul(g, phi.apply(g)))
            && g0.elements().all(|h| k.contains(g0.commutator(g, h)))
    })
}

pub fn is_gk_normal(action: &MixedAction, fq: &FurtherQuotient) -> bool {
    normality_criterion(action, &fq.kernel)
}

/// Direct normality test of `G_K` in the square extension.
pub fn gk_normal_direct(sq: &SquareExtension, fq: &FurtherQuotient) -> bool {
    is_normal(sq.group(), &fq.gk)
}

/// `G/K`, the image of `G⁰` in it, and `g(C/K)` when it follows from étaleness.
pub fn minimal_realization(action: &MixedAction, k: &Subgroup) -> MinimalRealization {
    let (group, proj) =
        quotient_group(action.group(), &action.lift(k)).expect("admissible K is normal in G");
    let g0 = action.g0().map(|x| proj.apply(x));
    let genus = if action.gv().is_free() {
        QuotientGenus::Known((action.genus_c() - 1) / k.order() as u64 + 1)
    } else if action.sigma().iter().all(|&s| k.contains(s)) {
        let index = (action.order_g0() / k.order()) as i64;
        let genus = index * (action.irregularity() as i64 - 1) + 1;
        assert!(genus >= 0, "unramified quotient has negative genus");
        QuotientGenus::Known(genus as u64)
    } else {
        QuotientGenus::NotComputed
    };
    MinimalRealization { group, g0, genus }
}

/// `G_K = G⁰_K ∪ τ′G⁰_K` with `G⁰_K = {(g, h) : h·φ(g)⁻¹ ∈ K}`.
pub fn build_gk(
    action: &MixedAction,
    sq: &SquareExtension,
    k: &Subgroup,
) -> Result<FurtherQuotient, LatticeError> {
    if !is_admissible(action, k) {
        return Err(LatticeError::KernelNotAdmissible);
    }
    let g0 = action.g0_group();
    let phi = action.phi();
    let tau_prime = sq.encode(0, action.tau(), true);
    let mut members = Vec::with_capacity(2 * g0.order() * k.order());
    for g in g0.elements() {
        let pg_inv = g0.inv(phi.apply(g));
        for h in g0.elements() {
            if k.contains(g0.mul(h, pg_inv)) {
                let x = sq.encode(g, h, false);
                members.push(x);
                members.push(sq.group().mul(tau_prime, x));
            }
        }
    }
    members.sort_unstable();
    let gk = Subgroup::from_sorted_unchecked(members);

    if gk.order() != k.order() * action.group().order() {
        return Err(LatticeError::TheoremViolation(format!(
            "|G_K| = {} but |K||G| = {}",
            gk.order(),
            k.order() * action.group().order()
        )));
    }
    let slice: Vec<Elem> = g0
        .elements()
        .filter(|&g| gk.contains(sq.encode(g, 0, false)))
        .collect();
    if slice != k.members() {
        return Err(LatticeError::TheoremViolation(
            "G_K ∩ (G0 × {1}) differs from K × {1}".into(),
        ));
    }
    if Subgroup::from_members(sq.group(), gk.members().to_vec()).is_none() {
        return Err(LatticeError::TheoremViolation("G_K is not closed".into()));
    }

    let realization = minimal_realization(action, k);
    let criterion = normality_criterion(action, k);
    let mut fq = FurtherQuotient {
        kernel: k.clone(),
        gk,
        normal_in_square: criterion,
        is_dihedral_target: false,
        pi_degree: k.order(),
        realization,
    };
    if criterion != gk_normal_direct(sq, &fq) {
        return Err(LatticeError::TheoremViolation(
            "normality criterion disagrees with direct test".into(),
        ));
    }
    let r = &fq.realization;
    fq.is_dihedral_target =
        is_abelian_subgroup(&r.group, &r.g0) && is_generalized_dihedral(&r.group, &r.g0)?;
    Ok(fq)
}

/// Every subgroup of `G⁰(2)` containing the embedded `G`, found as unions of
/// left cosets `(h,1)·G`; returned with the coset set `{h}` that builds it.
pub fn overgroups_of_embedded(
    sq: &SquareExtension,
    embedding: &GroupHom,
) -> Vec<(Vec<Elem>, Subgroup)> {
    let n = sq.base().order();
    let group = sq.group();
    let image = embedding.images();
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let reps: Vec<Elem> = std::iter::once(0)
            .chain((1..n).filter(|&h| mask >> (h - 1) & 1 == 1))
            .collect();
        let mut member = vec![false; group.order()];
        let mut members = Vec::with_capacity(reps.len() * image.len());
        for &h in &reps {
            let left = sq.encode(h, 0, false);
            for &x in image {
                let y = group.mul(left, x);
                member[y] = true;
                members.push(y);
            }
        }
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| member[group.mul(a, b)]));
        if closed {
            members.sort_unstable();
            found.push((reps, Subgroup::from_sorted_unchecked(members)));
        }
    }
    found
}

/// `K × K` is normal in `G_K` and `G_K/(K × K) ≅ G/K`.
pub fn kxk_holds(sq: &SquareExtension, fq: &FurtherQuotient) -> bool {
    let k = fq.kernel.members();
    let (gk_group, to_parent) = fq.gk.as_group(sq.group());
    let kk_parent: Vec<Elem> = k
        .iter()
        .flat_map(|&a| k.iter().map(move |&b| sq.encode(a, b, false)))
        .collect();
    let kk_local: Vec<Elem> = kk_parent
        .iter()
        .filter_map(|x| to_parent.binary_search(x).ok())
        .collect();
    if kk_local.len() != kk_parent.len() {
        return false;
    }
    let Some(kk) = Subgroup::from_members(&gk_group, kk_local) else {
        return false;
    };
    match quotient_group(&gk_group, &kk) {
        Ok((q, _)) => find_isomorphism(&q, &fq.realization.group).is_some(),
        Err(_) => false,
    }
}

/// Builds every further quotient; runs the bijection audit when enabled.
pub fn quotient_lattice(
    action: &MixedAction,
    opts: &LatticeOptions,
) -> Result<QuotientLattice, LatticeError> {
    let kernels = admissible_kernels(action, opts)?;
    let square = SquareExtension::new(action.g0_group(), opts.square_cap)?;
    let embedding = embed_mixed(&square, action)?;
    let quotients = kernels
        .iter()
        .map(|k| build_gk(action, &square, k))
        .collect::<Result<Vec<_>, _>>()?;

    let n = action.order_g0();
    let run_audit = match opts.audit {
        Audit::On => true,
        Audit::Off => false,
        Audit::Auto => n <= AUTO_AUDIT_LIMIT,
    };
    let audit = if run_audit {
        if n > HARD_AUDIT_LIMIT {
            return Err(LatticeError::GroupTooLarge {
                order: n,
                limit: HARD_AUDIT_LIMIT,
            });
        }
        let overgroups = overgroups_of_embedded(&square, &embedding);
        for (reps, g_prime) in &overgroups {
            let k = Subgroup::from_sorted_unchecked(reps.clone());
            let matched = quotients.iter().find(|fq| fq.kernel == k);
            if matched.map(|fq| &fq.gk) != Some(g_prime) {
                return Err(LatticeError::TheoremViolation(format!(
                    "overgroup with slice {reps:?} is not G_K for an admissible K"
                )));
            }
        }
        if overgroups.len() != quotients.len() {
            return Err(LatticeError::TheoremViolation(format!(
                "{} overgroups of G but {} admissible kernels",
                overgroups.len(),
                quotients.len()
            )));
        }
        Some(BijectionAudit {
            overgroups: overgroups.len(),
            kernels: quotients.len(),
        })
    } else {
        None
    };
    Ok(QuotientLattice {
        square,
        embedding,
        quotients,
        audit,
    })
}
