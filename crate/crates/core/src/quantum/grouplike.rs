//! Group-like projections and their Fourier transforms.

use super::{build_dual, tensors_equal, Element, FiniteQuantumGroup, Functional};
use crate::error::{Error, Result};
use crate::scalar::{vectors_equal, Scalar};

impl<S: Scalar> FiniteQuantumGroup<S> {
    /// `None` when `h` is a group-like projection, otherwise the first
    /// condition that fails.
    pub fn group_like_witness(&self, h: &Element<S>) -> Result<Option<String>> {
        self.owns(h)?;
        let h = h.coords();
        if h.iter().all(Scalar::is_zero) {
            return Ok(Some("h = 0".into()));
        }
        if !vectors_equal(&self.mul_vec(h, h), h) {
            return Ok(Some("h² ≠ h".into()));
        }
        if !vectors_equal(&self.star_vec(h)?, h) {
            return Ok(Some("h* ≠ h".into()));
        }
        let lhs = self.tensor_mul(&self.coproduct_vec(h), &self.outer(self.unit(), h));
        if !tensors_equal(&lhs, &self.outer(h, h)) {
            return Ok(Some("Δ(h)(1⊗h) ≠ h⊗h".into()));
        }
        Ok(None)
    }

    pub fn is_group_like_projection(&self, h: &Element<S>) -> Result<bool> {
        Ok(self.group_like_witness(h)?.is_none())
    }
}

#[derive(Clone, Debug)]
pub struct GroupLikeFourier<S: Scalar> {
    /// `φ(h)` for the original left integral.
    pub phi_h: S,
    /// `ĥ = φ′(· h)` with `φ′ = φ / φ(h)`.
    pub transform: Functional<S>,
    /// Failure of the group-like conditions for `ĥ` in the dual built from
    /// `φ′`; `None` when they all hold.
    pub dual_witness: Option<String>,
}

/// Normalises `φ(h) = 1`, transforms `h` and checks that the result is a
/// group-like projection of the dual.
pub fn fourier_group_like<S: Scalar>(a: &FiniteQuantumGroup<S>, h: &Element<S>) -> Result<GroupLikeFourier<S>> {
    if let Some(w) = a.group_like_witness(h)? {
        return Err(Error::Precondition(format!("not a group-like projection: {w}")));
    }
    let phi_h = a.phi(h)?;
    let factor = phi_h
        .inverse()
        .ok_or_else(|| Error::Precondition("φ(h) = 0".into()))?;
    let scaled = a.with_scaled_left_integral(&factor);
    let transform = scaled.fourier(h)?;
    // in the basis φ′(· a_j) of the dual, 𝓕(h) has the coordinates of h
    let dual = build_dual(&scaled)?.dual;
    let dual_witness = dual.group_like_witness(&dual.element(h.coords().to_vec())?)?;
    Ok(GroupLikeFourier {
        phi_h,
        transform,
        dual_witness,
    })
}
