//! The group `H(2) = (H x H) ⋊ Z/2` generated by `H x H` and the factor swap.

use super::error::GroupError;
use super::group::{Elem, FiniteGroup};
use super::subgroup::GroupHom;
use crate::cover::MixedAction;

/// `(H x H) ⋊ <σ>` with `σ (a, b) σ = (b, a)`.
///
/// Element `(a, b; e)` stands for `(a, b) ∘ σ^e` and has index
/// `e·|H|² + a·|H| + b`.
#[derive(Clone, Debug)]
pub struct SquareExtension {
    base: FiniteGroup,
    group: FiniteGroup,
}

impl SquareExtension {
    pub fn new(base: &FiniteGroup, cap: usize) -> Result<Self, GroupError> {
        let h = base.order();
        let n = 2 * h * h;
        if n > cap {
            return Err(GroupError::GroupTooLarge { order: n, cap });
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let (a, b, e) = decode_with(h, x);
            for y in 0..n {
                let (c, d, f) = decode_with(h, y);
                // (a,b)σ^e (c,d) = (a,b)(c,d) if e = 0, (a,b)(d,c)σ if e = 1
                let (l, r) = if e == 0 {
                    (base.mul(a, c), base.mul(b, d))
                } else {
                    (base.mul(a, d), base.mul(b, c))
                };
                table[x * n + y] = (((e + f) % 2) * h * h + l * h + r) as u32;
            }
        }
        Ok(SquareExtension {
            base: base.clone(),
            group: FiniteGroup::from_table_unchecked(n, table),
        })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn encode(&self, a: Elem, b: Elem, swapped: bool) -> Elem {
        let h = self.base.order();
        (swapped as usize) * h * h + a * h + b
    }

    pub fn decode(&self, x: Elem) -> (Elem, Elem, bool) {
        let (a, b, e) = decode_with(self.base.order(), x);
        (a, b, e == 1)
    }

    /// The factor swap `σ = (1, 1; 1)`.
    pub fn sigma(&self) -> Elem {
        self.encode(0, 0, true)
    }
}

/// The canonical embedding of `G` into `G⁰(2)`:
/// `g ↦ (g, φ(g))` and `τ′g ↦ σ∘(τg, φ(g)) = (φ(g), τg; 1)`.
pub fn embed_mixed(sq: &SquareExtension, action: &MixedAction) -> Result<GroupHom, GroupError> {
    let g0 = action.g0_group();
    if !sq.base().same_table(g0) {
        return Err(GroupError::EmbeddingFailure(
            "square extension not built on this G0".into(),
        ));
    }
    let g = action.group();
    let phi = action.phi();
    let tp_inv = g.inv(action.tau_prime());
    let image = g
        .elements()
        .map(|x| match action.to_local(x) {
            Some(l) => sq.encode(l, phi.apply(l), false),
            None => {
                let h = action
                    .to_local(g.mul(tp_inv, x))
                    .expect("tau'^-1 x lies in G0");
                sq.encode(phi.apply(h), g0.mul(action.tau(), h), true)
            }
        })
        .collect();
    let hom = GroupHom::from_images(image);
    if !hom.is_injective() {
        return Err(GroupError::EmbeddingFailure(
            "embedding is not injective".into(),
        ));
    }
    if !hom.is_homomorphism(g, sq.group()) {
        return Err(GroupError::EmbeddingFailure(
            "embedding is not a homomorphism".into(),
        ));
    }
    Ok(hom)
}

fn decode_with(h: usize, x: usize) -> (usize, usize, usize) {
    let e = x / (h * h);
    let rest = x % (h * h);
    (rest / h, rest % h, e)
}
