//! JSON exchange format for quantum groups, elements and functionals.

use serde::{Deserialize, Serialize};

use super::{Element, FiniteQuantumGroup, Functional, QuantumGroupParts};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{format_vector, Cyclotomic, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumGroupFile<S = Cyclotomic> {
    #[serde(default)]
    pub id: Option<String>,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `[i, j, k, c]`: `a_i a_j` has coefficient `c` on `a_k`.
    pub mult: Vec<(usize, usize, usize, S)>,
    /// `[i, j, k, c]`: `Δ(a_i)` has coefficient `c` on `a_j ⊗ a_k`.
    pub comult: Vec<(usize, usize, usize, S)>,
    pub counit: Vec<S>,
    pub antipode: Matrix<S>,
    #[serde(default)]
    pub star: Option<Matrix<S>>,
    pub unit: Vec<S>,
    pub phi: Vec<S>,
    pub psi: Vec<S>,
}

impl<S: Scalar> From<&FiniteQuantumGroup<S>> for QuantumGroupFile<S> {
    fn from(a: &FiniteQuantumGroup<S>) -> Self {
        let p = a.parts();
        QuantumGroupFile {
            id: Some(p.id),
            dim: p.labels.len(),
            labels: p.labels,
            mult: p.mult,
            comult: p.comult,
            counit: p.counit,
            antipode: p.antipode,
            star: p.star,
            unit: p.unit,
            phi: p.left_integral,
            psi: p.right_integral,
        }
    }
}

impl<S: Scalar> QuantumGroupFile<S> {
    /// Builds the quantum group; `default_id` is used when the file has none.
    pub fn into_quantum_group(self, default_id: &str) -> Result<FiniteQuantumGroup<S>> {
        if self.labels.len() != self.dim {
            return Err(Error::Format(format!(
                "dim is {} but {} labels were given",
                self.dim,
                self.labels.len()
            )));
        }
        FiniteQuantumGroup::new(QuantumGroupParts {
            id: self.id.unwrap_or_else(|| default_id.to_string()),
            labels: self.labels,
            mult: self.mult,
            comult: self.comult,
            counit: self.counit,
            antipode: self.antipode,
            star: self.star,
            unit: self.unit,
            left_integral: self.phi,
            right_integral: self.psi,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    Element,
    Functional,
}

/// An element or functional together with the id of its quantum group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementFile<S = Cyclotomic> {
    pub owner: String,
    pub kind: VectorKind,
    pub coords: Vec<S>,
    /// Human-readable rendering; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl<S: Scalar> ElementFile<S> {
    pub fn from_element(x: &Element<S>) -> Self {
        ElementFile {
            owner: x.owner().to_string(),
            kind: VectorKind::Element,
            coords: x.coords().to_vec(),
            text: Some(format_vector(x.coords())),
        }
    }

    pub fn from_functional(w: &Functional<S>) -> Self {
        ElementFile {
            owner: w.owner().to_string(),
            kind: VectorKind::Functional,
            coords: w.coords().to_vec(),
            text: Some(format_vector(w.coords())),
        }
    }

    pub fn to_element(&self, a: &FiniteQuantumGroup<S>) -> Result<Element<S>> {
        self.expect(a, VectorKind::Element)?;
        a.element(self.coords.clone())
    }

    pub fn to_functional(&self, a: &FiniteQuantumGroup<S>) -> Result<Functional<S>> {
        self.expect(a, VectorKind::Functional)?;
        a.functional(self.coords.clone())
    }

    fn expect(&self, a: &FiniteQuantumGroup<S>, kind: VectorKind) -> Result<()> {
        if self.owner != a.id() {
            return Err(Error::OwnerMismatch {
                left: a.id().to_string(),
                right: self.owner.clone(),
            });
        }
        if self.kind != kind {
            return Err(Error::Format(format!("expected {kind:?}, found {:?}", self.kind)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{function_algebra, FiniteGroupTable};

    #[test]
    fn quantum_group_round_trip() {
        let a = function_algebra::<Cyclotomic>(&FiniteGroupTable::builtin("S3").unwrap());
        let file = QuantumGroupFile::from(&a);
        let text = serde_json::to_string(&file).unwrap();
        let back: QuantumGroupFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let b = back.into_quantum_group("x").unwrap();
        assert_eq!(b.parts(), a.parts());
    }

    #[test]
    fn element_file_checks_owner_and_kind() {
        let a = function_algebra::<Cyclotomic>(&FiniteGroupTable::builtin("Z2").unwrap());
        let f = ElementFile::from_element(&a.basis(1));
        assert_eq!(f.to_element(&a).unwrap(), a.basis(1));
        assert!(f.to_functional(&a).is_err());
        let other = a.with_id("other");
        assert!(matches!(f.to_element(&other), Err(Error::OwnerMismatch { .. })));
    }
}
