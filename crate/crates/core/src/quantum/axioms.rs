use std::collections::BTreeMap;

use super::{tensors_equal, unit_vector, FiniteQuantumGroup, Tensor};
use crate::linalg;
use crate::report::{CheckRecord, CheckReport};
use crate::scalar::{dot, first_difference, vectors_equal, Scalar};

const SUITE: &str = "axioms";

/// Evaluates every structural identity of a finite algebraic quantum group
/// by tensor contraction. Failures are reported with the first offending
/// basis index, never raised as errors.
pub fn verify_axioms<S: Scalar>(a: &FiniteQuantumGroup<S>) -> CheckReport {
    let mut report = CheckReport::new();
    let mut record = |name: &str, witness: Option<String>| {
        report.push(CheckRecord::from_witness(
            SUITE,
            format!("{}/{}", a.id(), name),
            witness,
        ));
    };

    record("unit", unit_law(a));
    record("associativity", associativity(a));
    record("coassociativity", coassociativity(a));
    record("coproduct-multiplicative", coproduct_multiplicative(a));
    record("counit", counit_law(a));
    record("antipode", antipode_law(a));
    record(
        "antipode-invertible",
        a.antipode_inverse_matrix()
            .is_none()
            .then(|| "antipode matrix is singular".to_string()),
    );
    record("left-invariance", left_invariance(a));
    record("right-invariance", right_invariance(a));
    record(
        "faithfulness-left",
        a.gram_inverse()
            .is_err()
            .then(|| "Gram matrix φ(a_i a_j) is singular".to_string()),
    );
    record(
        "faithfulness-right",
        (linalg::rank(&a.right_gram_transposed()) < a.dim())
            .then(|| "Gram matrix ψ(a_i a_j) is singular".to_string()),
    );
    if a.is_star() {
        record("star-involutive", star_involutive(a));
        record("star-antimultiplicative", star_antimultiplicative(a));
        record("coproduct-star", coproduct_star(a));
        record("antipode-star", antipode_star(a));
    }
    report
}

fn unit_law<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let one = a.unit();
    (0..a.dim()).find_map(|i| {
        let e = unit_vector::<S>(a.dim(), i);
        let left = a.mul_vec(one, &e);
        let right = a.mul_vec(&e, one);
        (!vectors_equal(&left, &e) || !vectors_equal(&right, &e)).then(|| format!("i={i}"))
    })
}

fn associativity<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    let basis: Vec<Vec<S>> = (0..d).map(|i| unit_vector(d, i)).collect();
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul_vec(&basis[i], &basis[j]);
            for k in 0..d {
                let left = a.mul_vec(&ij, &basis[k]);
                let jk = a.mul_vec(&basis[j], &basis[k]);
                let right = a.mul_vec(&basis[i], &jk);
                if let Some(c) = first_difference(&left, &right) {
                    return Some(format!("i={i},j={j},k={k},component={c}"));
                }
            }
        }
    }
    None
}

type Triple<S> = BTreeMap<(usize, usize, usize), S>;

fn add_entry<S: Scalar>(m: &mut Triple<S>, key: (usize, usize, usize), c: S) {
    let e = m.entry(key).or_insert_with(S::zero);
    *e = e.plus(&c);
}

fn triples_equal<S: Scalar>(x: &Triple<S>, y: &Triple<S>) -> bool {
    let zero = S::zero();
    x.keys()
        .chain(y.keys())
        .all(|k| x.get(k).unwrap_or(&zero).same_value(y.get(k).unwrap_or(&zero)))
}

fn coassociativity<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    (0..a.dim()).find_map(|i| {
        let mut left = Triple::new();
        let mut right = Triple::new();
        for (j, k, c) in a.comult_terms(i) {
            for (p, q, c2) in a.comult_terms(*j) {
                add_entry(&mut left, (*p, *q, *k), c.times(c2));
            }
            for (p, q, c2) in a.comult_terms(*k) {
                add_entry(&mut right, (*j, *p, *q), c.times(c2));
            }
        }
        (!triples_equal(&left, &right)).then(|| format!("i={i}"))
    })
}

fn coproduct_multiplicative<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    let unit_t = a.outer(a.unit(), a.unit());
    if !tensors_equal(&a.coproduct_vec(a.unit()), &unit_t) {
        return Some("Δ(1) ≠ 1⊗1".into());
    }
    for i in 0..d {
        let di = a.comult_tensor(i);
        for j in 0..d {
            let prod = a.mul_vec(&unit_vector(d, i), &unit_vector(d, j));
            let lhs = a.coproduct_vec(&prod);
            let rhs = a.tensor_mul(&di, &a.comult_tensor(j));
            if !tensors_equal(&lhs, &rhs) {
                return Some(format!("i={i},j={j}"));
            }
        }
    }
    None
}

fn counit_law<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    let eps = a.counit();
    for i in 0..d {
        let mut left = vec![S::zero(); d];
        let mut right = vec![S::zero(); d];
        for (j, k, c) in a.comult_terms(i) {
            left[*k] = left[*k].plus(&c.times(&eps[*j]));
            right[*j] = right[*j].plus(&c.times(&eps[*k]));
        }
        let e = unit_vector::<S>(d, i);
        if !vectors_equal(&left, &e) || !vectors_equal(&right, &e) {
            return Some(format!("i={i}"));
        }
    }
    if !dot(eps, a.unit()).is_one() {
        return Some("ε(1) ≠ 1".into());
    }
    for i in 0..d {
        for j in 0..d {
            let prod = a.mul_vec(&unit_vector(d, i), &unit_vector(d, j));
            if !dot(eps, &prod).same_value(&eps[i].times(&eps[j])) {
                return Some(format!("ε not multiplicative at i={i},j={j}"));
            }
        }
    }
    None
}

fn antipode_law<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    (0..d).find_map(|i| {
        let mut left = vec![S::zero(); d];
        let mut right = vec![S::zero(); d];
        for (j, k, c) in a.comult_terms(i) {
            let sj = a.antipode_vec(&unit_vector(d, *j));
            let sk = a.antipode_vec(&unit_vector(d, *k));
            let l = a.mul_vec(&sj, &unit_vector(d, *k));
            let r = a.mul_vec(&unit_vector(d, *j), &sk);
            for t in 0..d {
                left[t] = left[t].plus(&c.times(&l[t]));
                right[t] = right[t].plus(&c.times(&r[t]));
            }
        }
        let expected: Vec<S> = a.unit().iter().map(|u| u.times(&a.counit()[i])).collect();
        (!vectors_equal(&left, &expected) || !vectors_equal(&right, &expected))
            .then(|| format!("i={i}"))
    })
}

fn left_invariance<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    let phi = a.left_integral();
    (0..d).find_map(|i| {
        let mut lhs = vec![S::zero(); d];
        for (j, k, c) in a.comult_terms(i) {
            lhs[*j] = lhs[*j].plus(&c.times(&phi[*k]));
        }
        let rhs: Vec<S> = a.unit().iter().map(|u| u.times(&phi[i])).collect();
        (!vectors_equal(&lhs, &rhs)).then(|| format!("i={i}"))
    })
}

fn right_invariance<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    let psi = a.right_integral();
    (0..d).find_map(|i| {
        let mut lhs = vec![S::zero(); d];
        for (j, k, c) in a.comult_terms(i) {
            lhs[*k] = lhs[*k].plus(&c.times(&psi[*j]));
        }
        let rhs: Vec<S> = a.unit().iter().map(|u| u.times(&psi[i])).collect();
        (!vectors_equal(&lhs, &rhs)).then(|| format!("i={i}"))
    })
}

fn star_involutive<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    (0..d).find_map(|i| {
        let e = unit_vector::<S>(d, i);
        let back = a.star_vec(&a.star_vec(&e).ok()?).ok()?;
        (!vectors_equal(&back, &e)).then(|| format!("i={i}"))
    })
}

fn star_antimultiplicative<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let (ei, ej) = (unit_vector::<S>(d, i), unit_vector::<S>(d, j));
            let lhs = a.star_vec(&a.mul_vec(&ei, &ej)).ok()?;
            let rhs = a.mul_vec(&a.star_vec(&ej).ok()?, &a.star_vec(&ei).ok()?);
            if !vectors_equal(&lhs, &rhs) {
                return Some(format!("i={i},j={j}"));
            }
        }
    }
    None
}

fn star_tensor<S: Scalar>(a: &FiniteQuantumGroup<S>, t: &Tensor<S>) -> Tensor<S> {
    let conj: Tensor<S> = t
        .iter()
        .map(|row| row.iter().map(Scalar::conjugate).collect())
        .collect();
    let star = a.star_matrix().expect("caller checked is_star");
    a.tensor_map(&conj, star, star)
}

fn coproduct_star<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    (0..d).find_map(|i| {
        let lhs = a.coproduct_vec(&a.star_vec(&unit_vector(d, i)).ok()?);
        let rhs = star_tensor(a, &a.comult_tensor(i));
        (!tensors_equal(&lhs, &rhs)).then(|| format!("i={i}"))
    })
}

fn antipode_star<S: Scalar>(a: &FiniteQuantumGroup<S>) -> Option<String> {
    let d = a.dim();
    (0..d).find_map(|i| {
        let e = unit_vector::<S>(d, i);
        let x = a.star_vec(&e).ok()?;
        let x = a.antipode_vec(&x);
        let x = a.star_vec(&x).ok()?;
        let x = a.antipode_vec(&x);
        (!vectors_equal(&x, &e)).then(|| format!("i={i}"))
    })
}
