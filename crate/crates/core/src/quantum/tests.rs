use super::*;
use crate::fixtures::{function_algebra, group_algebra, sweedler_fixture, FiniteGroupTable};
use crate::scalar::{ApproxComplex, Cyclotomic};

type C = Cyclotomic;

fn group(name: &str) -> FiniteGroupTable {
    FiniteGroupTable::builtin(name).unwrap()
}

fn ints(v: &[i64]) -> Vec<C> {
    v.iter().map(|&x| C::integer(x)).collect()
}

fn fixtures() -> Vec<FiniteQuantumGroup<C>> {
    let mut out = Vec::new();
    for name in ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        out.push(function_algebra(&group(name)));
        out.push(group_algebra(&group(name)));
    }
    out.push(sweedler_fixture());
    out
}

#[test]
fn corrupted_multiplication_fails_associativity() {
    let a = function_algebra::<C>(&group("Z3"));
    let mut parts = a.parts();
    parts.mult.push((0, 1, 2, C::one()));
    let bad = FiniteQuantumGroup::new(parts).unwrap();
    let r = verify_axioms(&bad);
    let rec = r.find("function-algebra:Z3/associativity").unwrap();
    assert!(!rec.passed());
    assert!(rec.witness.as_deref().unwrap().starts_with("i="));
}

#[test]
fn dual_of_functions_on_z2_is_group_algebra() {
    let a = function_algebra::<C>(&group("Z2"));
    let d = build_dual(&a).unwrap();
    assert!(verify_axioms(&d.dual).all_passed());
    let g = group_algebra::<C>(&group("Z2"));
    // with counting measure the pairing is the identity, ω_j = ev_j
    assert_eq!(d.pairing, crate::linalg::identity(2));
    assert!(structure_differences(&d.dual, &g).is_empty());
}

#[test]
fn dual_of_group_algebra_s3_is_commutative_not_cocommutative() {
    let a = group_algebra::<C>(&group("S3"));
    let d = build_dual(&a).unwrap().dual;
    assert!(verify_axioms(&d).all_passed());
    let n = d.dim();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(d.mult_terms(i, j), d.mult_terms(j, i));
        }
    }
    let cocommutative = (0..n).all(|i| {
        let t = d.comult_tensor(i);
        (0..n).all(|p| (0..n).all(|q| t[p][q] == t[q][p]))
    });
    assert!(!cocommutative);
}

#[test]
fn dual_of_group_algebra_matches_function_algebra() {
    for name in ["Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        let g = group(name);
        let dual = build_dual(&group_algebra::<C>(&g)).unwrap().dual;
        // ω_j = φ(· λ_j) is the indicator of j⁻¹
        let perm: Vec<usize> = (0..g.order()).map(|x| g.inverse(x)).collect();
        let matched = permute_basis(&dual, &perm, "m", g.labels().to_vec()).unwrap();
        let f = function_algebra::<C>(&g);
        assert!(structure_differences(&matched, &f).is_empty(), "{name}");
        assert!(integral_differences(&matched, &f).is_empty(), "{name}");
    }
}

#[test]
fn biduality_for_all_fixtures() {
    for a in fixtures() {
        let b = bidual_in_original_basis(&a).unwrap();
        assert!(structure_differences(&a, &b).is_empty(), "{}", a.id());
    }
}

#[test]
fn duals_satisfy_axioms() {
    for a in fixtures() {
        let d = build_dual(&a).unwrap().dual;
        let r = verify_axioms(&d);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn fourier_of_delta_is_evaluation() {
    let a = function_algebra::<C>(&group("Z2"));
    for j in 0..2 {
        let w = a.fourier(&a.basis(j)).unwrap();
        assert_eq!(w.coords(), a.basis(j).coords());
    }
    assert!(a.fourier(&a.zero()).unwrap().is_zero());
}

#[test]
fn inverse_fourier_examples() {
    let a = function_algebra::<C>(&group("Z2"));
    let d0 = a.basis(0);
    assert_eq!(a.inverse_fourier(&a.fourier(&d0).unwrap()).unwrap(), d0);
    assert!(a.inverse_fourier(&a.zero_functional()).unwrap().is_zero());

    let z3 = function_algebra::<C>(&group("Z3"));
    let ev1 = z3.functional(ints(&[0, 1, 0])).unwrap();
    assert_eq!(z3.inverse_fourier(&ev1).unwrap(), z3.basis(1));
}

#[test]
fn convolution_examples() {
    let a = function_algebra::<C>(&group("Z2"));
    assert_eq!(a.convolve(&a.basis(0), &a.basis(0)).unwrap(), a.basis(0));
    assert!(a.convolve(&a.basis(1), &a.zero()).unwrap().is_zero());
    let z3 = function_algebra::<C>(&group("Z3"));
    assert_eq!(z3.convolve(&z3.basis(1), &z3.basis(1)).unwrap(), z3.basis(2));
}

#[test]
fn convolution_matches_classical_formula_on_s3() {
    // (f * g)(t) = Σ_s f(s) g(s⁻¹ t)
    let g = group("S3");
    let a = function_algebra::<C>(&g);
    for i in 0..6 {
        for j in 0..6 {
            let got = a.convolve(&a.basis(i), &a.basis(j)).unwrap();
            let t = g.mul(i, j);
            assert_eq!(got, a.basis(t));
        }
    }
}

#[test]
fn identities_hold_on_every_fixture() {
    for a in fixtures() {
        for r in [lemma_inversion_check(&a), convolution_check(&a)] {
            assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
        let samples: Vec<_> = (0..a.dim()).map(|i| a.basis(i)).collect();
        assert!(round_trip_check(&a, &samples).all_passed());
    }
}

#[test]
fn plancherel_examples() {
    let a = function_algebra::<C>(&group("Z2"));
    let r = plancherel_check(&a, &a.basis(0));
    assert!(r.all_passed());
    let r = plancherel_check(&a, &a.zero());
    assert!(r.all_passed());
    let z4 = group_algebra::<C>(&group("Z4"));
    let x = z4
        .element(vec![C::gaussian(1, 2), C::gaussian(-3, 0), C::gaussian(0, 1), C::gaussian(2, -2)])
        .unwrap();
    assert!(plancherel_check(&z4, &x).all_passed());
    let r = plancherel_check(&sweedler_fixture::<C>(), &a.basis(0).reowned("sweedler"));
    assert_eq!(r.records[0].status, crate::report::Status::Skip);
}

#[test]
fn cointegrals() {
    let g = group("S3");
    let f = function_algebra::<C>(&g);
    let h = f.find_cointegral();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0], f.basis(g.identity()));
    let z2 = group_algebra::<C>(&group("Z2"));
    let h = z2.find_cointegral();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].coords(), &ints(&[1, 1])[..]);
}

#[test]
fn types_and_dual_type_check() {
    for a in fixtures() {
        assert_eq!(classify_type(&a), TypeClass { compact: true, discrete: true });
        assert!(dual_type_check(&a).unwrap().all_passed(), "{}", a.id());
    }
    let a = group_algebra::<C>(&group("Z2"));
    let mut parts = a.parts();
    parts.left_integral = ints(&[1, 2]);
    let bad = FiniteQuantumGroup::new(parts).unwrap();
    let r = dual_type_check(&bad).unwrap();
    assert!(!r.all_passed());
    assert!(r.failures().next().unwrap().witness.as_deref().unwrap().starts_with("omega="));
}

#[test]
fn modular_elements() {
    let f = function_algebra::<C>(&group("S3"));
    assert_eq!(f.modular_element().unwrap(), f.one());
    let g = group_algebra::<C>(&group("Z4"));
    assert_eq!(g.modular_element().unwrap(), g.one());
    let s = sweedler_fixture::<C>();
    let delta = s.modular_element().unwrap();
    assert_ne!(delta, s.one());
}

#[test]
fn group_like_projections_in_s3() {
    let g = group("S3");
    let a = function_algebra::<C>(&g);
    let indicator = |set: &[usize]| {
        a.element((0..6).map(|i| if set.contains(&i) { C::one() } else { C::zero() }).collect())
            .unwrap()
    };
    for sub in g.subgroups() {
        let h = indicator(&sub);
        assert!(a.is_group_like_projection(&h).unwrap(), "{sub:?}");
        let out = fourier_group_like(&a, &h).unwrap();
        assert_eq!(out.dual_witness, None, "{sub:?}");
    }
    assert!(a.is_group_like_projection(&a.one()).unwrap());
    // δ_g for g ≠ e is idempotent but not group-like
    let h = a.basis(1);
    assert_eq!(a.group_like_witness(&h).unwrap().as_deref(), Some("Δ(h)(1⊗h) ≠ h⊗h"));
    // a coset of a subgroup of order 2
    let coset = indicator(&[4, 2]);
    assert!(!a.is_group_like_projection(&coset).unwrap());
    assert!(fourier_group_like(&a, &coset).is_err());
}

#[test]
fn fourier_group_like_on_z2() {
    let a = function_algebra::<C>(&group("Z2"));
    let out = fourier_group_like(&a, &a.basis(0)).unwrap();
    assert_eq!(out.transform.coords(), &ints(&[1, 0])[..]);
    let out = fourier_group_like(&a, &a.one()).unwrap();
    assert_eq!(out.transform.coords(), &[C::fraction(1, 2), C::fraction(1, 2)][..]);
    assert!(out.dual_witness.is_none());
}

#[test]
fn mixed_owners_are_rejected() {
    let a = function_algebra::<C>(&group("Z2"));
    let b = group_algebra::<C>(&group("Z2"));
    assert!(matches!(a.mul(&a.basis(0), &b.basis(0)), Err(Error::OwnerMismatch { .. })));
    assert!(a.basis(0).plus(&b.basis(0)).is_err());
}

#[test]
fn float_backend_round_trip() {
    let a = group_algebra::<C>(&group("S3")).map_scalars(|c| c.numeric_value());
    let x = a
        .element((0..6).map(|i| ApproxComplex::new(i as f64 - 2.5, 0.5)).collect())
        .unwrap();
    let back = a.inverse_fourier(&a.fourier(&x).unwrap()).unwrap();
    assert!(back.same_value(&x));
    assert!(verify_axioms(&a).all_passed());
}

#[test]
fn dimension_one() {
    let a = function_algebra::<C>(&group("trivial"));
    assert!(verify_axioms(&a).all_passed());
    let d = build_dual(&a).unwrap().dual;
    assert_eq!(d.dim(), 1);
    assert_eq!(a.convolve(&a.one(), &a.one()).unwrap(), a.one());
}
