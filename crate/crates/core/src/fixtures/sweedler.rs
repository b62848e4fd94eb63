//! Sweedler's four-dimensional Hopf algebra, a non-unimodular fixture.

use crate::quantum::{invariant_functionals, FiniteQuantumGroup, QuantumGroupParts};
use crate::scalar::Scalar;

/// Basis `[1, g, x, gx]`; index `a + 2b` stands for `g^a x^b`.
fn index(a: usize, b: usize) -> usize {
    a + 2 * b
}

/// Generated by `g` and `x` with `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δg = g ⊗ g` and `Δx = x ⊗ 1 + g ⊗ x`. The integrals are obtained by
/// solving the invariance equations and normalised so that their single
/// nonzero value is 1.
pub fn sweedler_fixture<S: Scalar>() -> FiniteQuantumGroup<S> {
    let one = S::one;
    let mut mult = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    // g^a x^b g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}
                    if b + d >= 2 {
                        continue;
                    }
                    let sign = if b * c == 1 { one().negated() } else { one() };
                    mult.push((index(a, b), index(c, d), index((a + c) % 2, b + d), sign));
                }
            }
        }
    }
    let comult = vec![
        (0, 0, 0, one()),
        (1, 1, 1, one()),
        (2, 2, 0, one()),
        (2, 1, 2, one()),
        (3, 3, 1, one()),
        (3, 0, 3, one()),
    ];
    let z = S::zero;
    let antipode = vec![
        vec![one(), z(), z(), z()],
        vec![z(), one(), z(), z()],
        vec![z(), z(), z(), one().negated()],
        vec![z(), z(), one(), z()],
    ];
    let mut parts = QuantumGroupParts {
        id: "sweedler".to_string(),
        labels: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        mult,
        comult,
        counit: vec![one(), one(), z(), z()],
        antipode,
        star: None,
        unit: vec![one(), z(), z(), z()],
        left_integral: vec![z(); 4],
        right_integral: vec![z(); 4],
    };
    parts.left_integral = normalized_solution(invariant_functionals(&parts, true));
    parts.right_integral = normalized_solution(invariant_functionals(&parts, false));
    FiniteQuantumGroup::new(parts).expect("well-formed by construction")
}

fn normalized_solution<S: Scalar>(space: Vec<Vec<S>>) -> Vec<S> {
    assert_eq!(space.len(), 1, "integrals are unique up to scaling");
    let v = &space[0];
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero basis vector");
    let inv = lead.inverse().expect("nonzero");
    v.iter().map(|c| c.times(&inv)).collect()
}
