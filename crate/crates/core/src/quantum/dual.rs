//! The dual quantum group, realised on the basis `ω_j = φ(· a_j)`.
//!
//! In that basis the Fourier transform is the identity on coordinates, and
//! the pairing `⟨a_i, ω_j⟩ = φ(a_i a_j)` is the Gram matrix `P`. A
//! functional with values `v_i = ω(a_i)` has dual coordinates `P⁻¹ v`.

use super::{tensors_equal, FiniteQuantumGroup, QuantumGroupParts};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{dot, vectors_equal, Scalar};

#[derive(Clone, Debug)]
pub struct DualResult<S: Scalar> {
    pub dual: FiniteQuantumGroup<S>,
    /// `pairing[i][j] = ⟨a_i, ω_j⟩ = φ(a_i a_j)`.
    pub pairing: Matrix<S>,
}

/// Builds `(Â, Δ̂)`: the product is dual to `Δ`, the coproduct dual to the
/// product, `ε̂(ω) = ω(1)`, `Ŝ(ω) = ω ∘ S`, and the integrals are
/// `ψ̂(φ(· a)) = ε(a)` and `φ̂(ψ(a ·)) = ε(a)`. For *-quantum groups the
/// involution is `ω*(a) = conj(ω(S(a)*))`.
pub fn build_dual<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Result<DualResult<S>> {
    let d = a.dim();
    let p = a.gram_matrix();
    let pinv = a.gram_inverse()?.clone();
    let to_dual = |values: &[S]| linalg::mat_vec(&pinv, values);
    let col = |k: usize| -> Vec<S> { p.iter().map(|row| row[k].clone()).collect() };

    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            // (ω_i ω_j)(a_k) = Σ c P[p][i] P[q][j] over Δ(a_k) ∋ c a_p ⊗ a_q
            let values: Vec<S> = (0..d)
                .map(|k| {
                    a.comult_terms(k).iter().fold(S::zero(), |acc, (pp, q, c)| {
                        acc.plus(&c.times(&p[*pp][i]).times(&p[*q][j]))
                    })
                })
                .collect();
            for (k, c) in to_dual(&values).into_iter().enumerate() {
                if !c.is_zero() {
                    mult.push((i, j, k, c));
                }
            }
        }
    }

    let pinv_t = linalg::transpose(&pinv);
    let mut comult = Vec::new();
    for k in 0..d {
        // Δ̂(ω_k)(a_p ⊗ a_q) = ω_k(a_p a_q); coefficients are P⁻¹ T P⁻ᵀ
        let t: Matrix<S> = (0..d)
            .map(|pp| {
                (0..d)
                    .map(|q| {
                        a.mult_terms(pp, q)
                            .iter()
                            .fold(S::zero(), |acc, (r, c)| acc.plus(&c.times(&p[*r][k])))
                    })
                    .collect()
            })
            .collect();
        let coeffs = linalg::mat_mul(&linalg::mat_mul(&pinv, &t), &pinv_t);
        for (i, row) in coeffs.into_iter().enumerate() {
            for (j, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    comult.push((k, i, j, c));
                }
            }
        }
    }

    let counit: Vec<S> = (0..d).map(|k| dot(a.unit(), &col(k))).collect();

    let antipode: Matrix<S> = (0..d)
        .map(|k| {
            let values: Vec<S> = (0..d).map(|i| dot(&a.antipode_matrix()[i], &col(k))).collect();
            to_dual(&values)
        })
        .collect();

    let star = if a.is_star() {
        let mut rows = Vec::with_capacity(d);
        for k in 0..d {
            rows.push(to_dual(&a.dual_star_vec(&col(k))?));
        }
        Some(rows)
    } else {
        None
    };

    let unit = to_dual(a.counit());

    let right_integral = a.counit().to_vec();
    let r = a.right_gram_transposed();
    let left_integral = (0..d)
        .map(|k| {
            linalg::solve(&r, &col(k))
                .map(|b| dot(a.counit(), &b))
                .ok_or(Error::Faithfulness)
        })
        .collect::<Result<Vec<S>>>()?;

    let parts = QuantumGroupParts {
        id: format!("dual({})", a.id()),
        labels: a.labels().iter().map(|l| format!("F({l})")).collect(),
        mult,
        comult,
        counit,
        antipode,
        star,
        unit,
        left_integral,
        right_integral,
    };
    Ok(DualResult {
        dual: FiniteQuantumGroup::new(parts)?,
        pairing: p,
    })
}

/// Expresses `b` in the basis `e_j = Σ_k t[k][j] b_k`.
pub(crate) fn change_basis<S: Scalar>(
    b: &FiniteQuantumGroup<S>,
    t: &Matrix<S>,
    id: &str,
    labels: Vec<String>,
) -> Result<FiniteQuantumGroup<S>> {
    let d = b.dim();
    let tinv = linalg::inverse(t)
        .ok_or_else(|| Error::Structure("basis change matrix is singular".into()))?;
    // columns of t are the new basis vectors in old coordinates
    let new_basis = linalg::transpose(t);
    let to_new = |old: &[S]| linalg::mat_vec(&tinv, old);

    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let prod = b.mul_vec(&new_basis[i], &new_basis[j]);
            for (k, c) in to_new(&prod).into_iter().enumerate() {
                if !c.is_zero() {
                    mult.push((i, j, k, c));
                }
            }
        }
    }
    let tinv_t = linalg::transpose(&tinv);
    let mut comult = Vec::new();
    for i in 0..d {
        let old = b.coproduct_vec(&new_basis[i]);
        let coeffs = linalg::mat_mul(&linalg::mat_mul(&tinv, &old), &tinv_t);
        for (p, row) in coeffs.into_iter().enumerate() {
            for (q, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    comult.push((i, p, q, c));
                }
            }
        }
    }
    let counit = new_basis.iter().map(|v| dot(b.counit(), v)).collect();
    let antipode = new_basis
        .iter()
        .map(|v| to_new(&b.antipode_vec(v)))
        .collect();
    let star = if b.is_star() {
        Some(
            new_basis
                .iter()
                .map(|v| b.star_vec(v).map(|s| to_new(&s)))
                .collect::<Result<Matrix<S>>>()?,
        )
    } else {
        None
    };
    let unit = to_new(b.unit());
    let left_integral = new_basis.iter().map(|v| dot(b.left_integral(), v)).collect();
    let right_integral = new_basis.iter().map(|v| dot(b.right_integral(), v)).collect();
    FiniteQuantumGroup::new(QuantumGroupParts {
        id: id.to_string(),
        labels,
        mult,
        comult,
        counit,
        antipode,
        star,
        unit,
        left_integral,
        right_integral,
    })
}

/// Dualises twice and rewrites the result in the basis of `a`, using the
/// canonical identification `a ↦ (ω ↦ ω(a))` of `A` with the dual of `Â`.
pub fn bidual_in_original_basis<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Result<FiniteQuantumGroup<S>> {
    let first = build_dual(a)?;
    let second = build_dual(&first.dual)?;
    // ev_{a_j}(ω_i) = P[j][i]; the double-dual basis Ω_k has Ω_k(ω_i) = P̂[i][k].
    // Hence ev_{a_j} = Σ_k T[k][j] Ω_k with P̂ T = Pᵀ.
    let t = linalg::solve_columns(&second.pairing, &first.pairing)
        .ok_or(Error::Faithfulness)?;
    let t = linalg::transpose(&t);
    change_basis(&second.dual, &t, a.id(), a.labels().to_vec())
}

/// Names of the structure tensors in which two quantum groups of equal
/// dimension differ. Integrals are compared separately (see
/// [`integral_differences`]).
pub fn structure_differences<S: Scalar>(
    x: &FiniteQuantumGroup<S>,
    y: &FiniteQuantumGroup<S>,
) -> Vec<&'static str> {
    let mut out = Vec::new();
    if x.dim() != y.dim() {
        out.push("dim");
        return out;
    }
    let d = x.dim();
    let mult_same = (0..d).all(|i| {
        (0..d).all(|j| (0..d).all(|k| x.mult_coefficient(i, j, k).same_value(&y.mult_coefficient(i, j, k))))
    });
    if !mult_same {
        out.push("mult");
    }
    if !(0..d).all(|i| tensors_equal(&x.comult_tensor(i), &y.comult_tensor(i))) {
        out.push("comult");
    }
    if !vectors_equal(x.counit(), y.counit()) {
        out.push("counit");
    }
    if !tensors_equal(x.antipode_matrix(), y.antipode_matrix()) {
        out.push("antipode");
    }
    match (x.star_matrix(), y.star_matrix()) {
        (Some(s), Some(t)) if tensors_equal(s, t) => {}
        (None, None) => {}
        _ => out.push("star"),
    }
    if !vectors_equal(x.unit(), y.unit()) {
        out.push("unit");
    }
    out
}

/// Names of the integrals (`phi`, `psi`) in which two quantum groups differ.
pub fn integral_differences<S: Scalar>(
    x: &FiniteQuantumGroup<S>,
    y: &FiniteQuantumGroup<S>,
) -> Vec<&'static str> {
    let mut out = Vec::new();
    if !vectors_equal(x.left_integral(), y.left_integral()) {
        out.push("phi");
    }
    if !vectors_equal(x.right_integral(), y.right_integral()) {
        out.push("psi");
    }
    out
}

/// Permutes the basis: new basis vector `i` is old basis vector `perm[i]`.
pub fn permute_basis<S: Scalar>(
    b: &FiniteQuantumGroup<S>,
    perm: &[usize],
    id: &str,
    labels: Vec<String>,
) -> Result<FiniteQuantumGroup<S>> {
    let d = b.dim();
    let t: Matrix<S> = (0..d)
        .map(|k| {
            (0..d)
                .map(|j| if perm[j] == k { S::one() } else { S::zero() })
                .collect()
        })
        .collect();
    change_basis(b, &t, id, labels)
}
