//! Fourier transform `a ↦ φ(· a)`, its inverse, convolution and the
//! identities relating them.

use super::{Element, FiniteQuantumGroup, Functional};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{CheckRecord, CheckReport};
use crate::scalar::{dot, first_difference, format_vector, Scalar};

impl<S: Scalar> FiniteQuantumGroup<S> {
    /// `𝓕(a) = φ(· a)`, returned through its values `φ(a_i a)`.
    pub fn fourier(&self, a: &Element<S>) -> Result<Functional<S>> {
        self.owns(a)?;
        Ok(self.wrap_functional(linalg::mat_vec(&self.gram_matrix(), a.coords())))
    }

    /// The unique `a` with `𝓕(a) = ω`, by solving `P a = ω`.
    pub fn inverse_fourier(&self, w: &Functional<S>) -> Result<Element<S>> {
        self.owns(w)?;
        let pinv = self.gram_inverse()?;
        Ok(self.wrap(linalg::mat_vec(pinv, w.coords())))
    }

    /// `a * b = Σ φ(S⁻¹(b₍₁₎) a) b₍₂₎`.
    pub fn convolve(&self, a: &Element<S>, b: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        self.owns(b)?;
        let d = self.dim();
        let phi = self.left_integral();
        let sinv = self
            .antipode_inverse_matrix()
            .ok_or_else(|| Error::Structure("antipode is not invertible".into()))?;
        // φ(S⁻¹(a_p) a) for every basis index p
        let weights: Vec<S> = (0..d)
            .map(|p| dot(phi, &self.mul_vec(&sinv[p], a.coords())))
            .collect();
        let delta_b = self.coproduct_vec(b.coords());
        let mut out = vec![S::zero(); d];
        for (p, row) in delta_b.iter().enumerate() {
            if weights[p].is_zero() {
                continue;
            }
            for (q, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out[q] = out[q].plus(&c.times(&weights[p]));
                }
            }
        }
        Ok(self.wrap(out))
    }

    /// The second expression `a * b = Σ φ(S⁻¹(b) a₍₂₎) a₍₁₎`.
    pub fn convolve_alt(&self, a: &Element<S>, b: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        self.owns(b)?;
        let d = self.dim();
        let phi = self.left_integral();
        let sinv_b = self.antipode_inverse_vec(b.coords())?;
        let weights: Vec<S> = (0..d)
            .map(|q| dot(phi, &self.mul_vec(&sinv_b, &super::unit_vector(d, q))))
            .collect();
        let delta_a = self.coproduct_vec(a.coords());
        let mut out = vec![S::zero(); d];
        for (p, row) in delta_a.iter().enumerate() {
            for (q, c) in row.iter().enumerate() {
                if !c.is_zero() && !weights[q].is_zero() {
                    out[p] = out[p].plus(&c.times(&weights[q]));
                }
            }
        }
        Ok(self.wrap(out))
    }
}

/// `ψ̂(ω′ · 𝓕(a)) = ω′(S⁻¹(a))` for every basis functional `ω′ = ω_j` of
/// the dual and every basis element `a = a_i`.
pub fn lemma_inversion_check<S: Scalar>(a: &FiniteQuantumGroup<S>) -> CheckReport {
    let d = a.dim();
    let p = a.gram_matrix();
    let witness = (|| -> Result<Option<String>> {
        for j in 0..d {
            // ω_j = φ(· a_j) has values column j of P
            let wj: Vec<S> = p.iter().map(|row| row[j].clone()).collect();
            let wj = a.functional(wj)?;
            for i in 0..d {
                let fa = a.fourier(&a.basis(i))?;
                let lhs = a.dual_right_integral(&a.dual_mul(&wj, &fa)?)?;
                let rhs = a.eval(&wj, &a.antipode_inverse_of(&a.basis(i))?)?;
                if !lhs.same_value(&rhs) {
                    return Ok(Some(format!("omega={j},a={i}: {lhs} != {rhs}")));
                }
            }
        }
        Ok(None)
    })()
    .unwrap_or_else(|e| Some(e.to_string()));
    std::iter::once(CheckRecord::from_witness(
        "inversion",
        format!("{}/lemma-identity", a.id()),
        witness,
    ))
    .collect()
}

/// Round trip `𝓕⁻¹(𝓕(x)) = x` on the basis and on the supplied elements.
pub fn round_trip_check<S: Scalar>(a: &FiniteQuantumGroup<S>, samples: &[Element<S>]) -> CheckReport {
    let check = |x: &Element<S>| -> Option<String> {
        match a.fourier(x).and_then(|w| a.inverse_fourier(&w)) {
            Ok(back) if back.same_value(x) => None,
            Ok(back) => Some(format!("{x} -> {back}")),
            Err(e) => Some(e.to_string()),
        }
    };
    let basis = (0..a.dim()).find_map(|i| check(&a.basis(i)).map(|w| format!("basis {i}: {w}")));
    let random = samples
        .iter()
        .enumerate()
        .find_map(|(n, x)| check(x).map(|w| format!("sample {n}: {w}")));
    [
        CheckRecord::from_witness("inversion", format!("{}/round-trip-basis", a.id()), basis),
        CheckRecord::from_witness("inversion", format!("{}/round-trip-random", a.id()), random),
    ]
    .into_iter()
    .collect()
}

/// `𝓕(a * b) = 𝓕(a) 𝓕(b)` and agreement of the two convolution formulas on
/// all basis pairs.
pub fn convolution_check<S: Scalar>(a: &FiniteQuantumGroup<S>) -> CheckReport {
    let d = a.dim();
    let mut theorem = None;
    let mut formulas = None;
    'outer: for i in 0..d {
        for j in 0..d {
            let (x, y) = (a.basis(i), a.basis(j));
            let result = (|| -> Result<(Option<String>, Option<String>)> {
                let conv = a.convolve(&x, &y)?;
                let alt = a.convolve_alt(&x, &y)?;
                let lhs = a.fourier(&conv)?;
                let rhs = a.dual_mul(&a.fourier(&x)?, &a.fourier(&y)?)?;
                let t = first_difference(lhs.coords(), rhs.coords())
                    .map(|c| format!("a={i},b={j},component={c}"));
                let f = first_difference(conv.coords(), alt.coords()).map(|c| {
                    format!("a={i},b={j},component={c}: {conv} vs {}", format_vector(alt.coords()))
                });
                Ok((t, f))
            })();
            match result {
                Ok((t, f)) => {
                    theorem = theorem.or(t);
                    formulas = formulas.or(f);
                }
                Err(e) => {
                    theorem = theorem.or(Some(e.to_string()));
                    formulas = formulas.or(Some(e.to_string()));
                }
            }
            if theorem.is_some() && formulas.is_some() {
                break 'outer;
            }
        }
    }
    [
        CheckRecord::from_witness("convolution", format!("{}/convolution-theorem", a.id()), theorem),
        CheckRecord::from_witness("convolution", format!("{}/formulas-agree", a.id()), formulas),
    ]
    .into_iter()
    .collect()
}

/// `ψ̂(ω* ω) = φ(a* a)` for `ω = 𝓕(a)`, plus the numeric positivity of
/// `φ(a* a)`.
pub fn plancherel_check<S: Scalar>(a: &FiniteQuantumGroup<S>, x: &Element<S>) -> CheckReport {
    let case = |name: &str| format!("{}/{}", a.id(), name);
    if !a.is_star() {
        return std::iter::once(CheckRecord::skip("plancherel", case("identity"), "no *-structure")).collect();
    }
    let sides = (|| -> Result<(S, S)> {
        let w = a.fourier(x)?;
        let lhs = a.dual_right_integral(&a.dual_mul(&a.dual_star(&w)?, &w)?)?;
        let rhs = a.phi(&a.mul(&a.star_of(x)?, x)?)?;
        Ok((lhs, rhs))
    })();
    match sides {
        Err(e) => [
            CheckRecord::fail("plancherel", case("identity"), e.to_string()),
            CheckRecord::fail("plancherel", case("positivity"), e.to_string()),
        ]
        .into_iter()
        .collect(),
        Ok((lhs, rhs)) => {
            let n = rhs.numeric();
            [
                CheckRecord::from_witness(
                    "plancherel",
                    case("identity"),
                    (!lhs.same_value(&rhs)).then(|| format!("a={x}: {lhs} != {rhs}")),
                ),
                CheckRecord::from_witness(
                    "plancherel",
                    case("positivity"),
                    (n.re < -n.tolerance || n.im.abs() > n.tolerance)
                        .then(|| format!("a={x}: φ(a*a) ≈ {n}")),
                ),
            ]
            .into_iter()
            .collect()
        }
    }
}
