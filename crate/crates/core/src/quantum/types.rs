//! Compact and discrete type, cointegrals and the modular element.

use serde::{Deserialize, Serialize};

use super::{unit_vector, Element, FiniteQuantumGroup};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::report::{CheckRecord, CheckReport};
use crate::scalar::{dot, vectors_equal, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeClass {
    /// The algebra has an identity.
    pub compact: bool,
    /// The algebra has a nonzero left cointegral.
    pub discrete: bool,
}

impl<S: Scalar> FiniteQuantumGroup<S> {
    /// Basis of the left cointegrals `{h : a_i h = ε(a_i) h for all i}`.
    pub fn find_cointegral(&self) -> Vec<Element<S>> {
        let d = self.dim();
        let mut rows: Matrix<S> = Vec::with_capacity(d * d);
        for i in 0..d {
            // coefficient of a_k in a_i h − ε(a_i) h, as a linear form in h
            let mut block = vec![vec![S::zero(); d]; d];
            for j in 0..d {
                for (k, c) in self.mult_terms(i, j) {
                    block[*k][j] = block[*k][j].plus(c);
                }
                block[j][j] = block[j][j].minus(&self.counit()[i]);
            }
            rows.extend(block);
        }
        linalg::nullspace(&rows, d)
            .into_iter()
            .map(|v| self.wrap(v))
            .collect()
    }

    /// The modular element `δ` with `(φ ⊗ id)Δ(a) = φ(a) δ` for all `a`.
    pub fn modular_element(&self) -> Result<Element<S>> {
        let d = self.dim();
        let phi = self.left_integral();
        let mut rows: Matrix<S> = Vec::with_capacity(d * d);
        let mut rhs = Vec::with_capacity(d * d);
        for i in 0..d {
            let mut target = vec![S::zero(); d];
            for (j, k, c) in self.comult_terms(i) {
                target[*k] = target[*k].plus(&c.times(&phi[*j]));
            }
            for (k, t) in target.into_iter().enumerate() {
                let mut row = vec![S::zero(); d];
                row[k] = phi[i].clone();
                rows.push(row);
                rhs.push(t);
            }
        }
        linalg::solve(&rows, &rhs)
            .map(|v| self.wrap(v))
            .ok_or_else(|| Error::Structure("no modular element solves (φ⊗id)Δ(a) = φ(a)δ".into()))
    }

    fn unit_acts_as_identity(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            let e = unit_vector::<S>(d, i);
            vectors_equal(&self.mul_vec(self.unit(), &e), &e)
                && vectors_equal(&self.mul_vec(&e, self.unit()), &e)
        })
    }
}

pub fn classify_type<S: Scalar>(a: &FiniteQuantumGroup<S>) -> TypeClass {
    TypeClass {
        compact: a.unit_acts_as_identity(),
        discrete: !a.find_cointegral().is_empty(),
    }
}

/// For compact `A`, `φ` is a left cointegral of the dual: `ω φ = ε̂(ω) φ`
/// for every dual basis functional `ω`. For discrete `A`, the counit is the
/// unit of the dual and `φ(h) ≠ 0` for the cointegral `h`.
pub fn dual_type_check<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Result<CheckReport> {
    let class = classify_type(a);
    if !class.compact {
        return Err(Error::Precondition(format!("{} is not of compact type", a.id())));
    }
    let d = a.dim();
    let p = a.gram_matrix();
    let basis: Vec<Vec<S>> = (0..d)
        .map(|j| p.iter().map(|row| row[j].clone()).collect())
        .collect();
    let phi = a.left_integral();
    let mut report = CheckReport::new();

    let cointegral = basis.iter().enumerate().find_map(|(j, w)| {
        let lhs = a.dual_mul_vec(w, phi);
        let eps_hat = dot(w, a.unit());
        let rhs: Vec<S> = phi.iter().map(|x| x.times(&eps_hat)).collect();
        (!vectors_equal(&lhs, &rhs)).then(|| format!("omega={j}"))
    });
    report.push(CheckRecord::from_witness(
        "types",
        format!("{}/phi-dual-cointegral", a.id()),
        cointegral,
    ));

    match a.find_cointegral().first() {
        None => report.push(CheckRecord::skip(
            "types",
            format!("{}/counit-dual-unit", a.id()),
            "no cointegral",
        )),
        Some(h) => {
            let eps = a.counit();
            let unit = basis.iter().enumerate().find_map(|(j, w)| {
                let ok = vectors_equal(&a.dual_mul_vec(eps, w), w)
                    && vectors_equal(&a.dual_mul_vec(w, eps), w);
                (!ok).then(|| format!("omega={j}"))
            });
            let unit = unit.or_else(|| {
                dot(phi, h.coords())
                    .is_zero()
                    .then(|| "φ(h) = 0 for the cointegral h".to_string())
            });
            report.push(CheckRecord::from_witness(
                "types",
                format!("{}/counit-dual-unit", a.id()),
                unit,
            ));
        }
    }
    Ok(report)
}
