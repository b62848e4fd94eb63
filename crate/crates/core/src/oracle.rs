//! Classical discrete Fourier transform on finite abelian groups, computed
//! by direct character sums.

use crate::fixtures::{function_algebra, FiniteGroupTable};
use crate::quantum::FiniteQuantumGroup;
use crate::report::{CheckRecord, CheckReport};
use crate::scalar::{Cyclotomic, RootOfUnity};
use crate::Element;

/// Every homomorphism `G → μ_N` with `N = |G|`, as exponent tables
/// `χ(g) = ζ_N^{k_g}`. Found by brute force over the images of a generating
/// set; `None` unless `G` is abelian.
pub fn group_characters(g: &FiniteGroupTable) -> Option<Vec<Vec<RootOfUnity>>> {
    if !g.is_abelian() {
        return None;
    }
    let n = g.order();
    let e = g.identity();
    let mut generators = Vec::new();
    let mut span = vec![e];
    for x in 0..n {
        if !span.contains(&x) {
            generators.push(x);
            span = closure(g, &generators);
        }
    }
    let mut out = Vec::new();
    let total = (n as u64).pow(generators.len() as u32);
    for code in 0..total {
        let images: Vec<u64> = (0..generators.len())
            .map(|i| code / (n as u64).pow(i as u32) % n as u64)
            .collect();
        if let Some(table) = extend(g, &generators, &images) {
            out.push(
                table
                    .into_iter()
                    .map(|k| RootOfUnity {
                        order: n as u64,
                        exponent: k,
                    })
                    .collect(),
            );
        }
    }
    Some(out)
}

fn closure(g: &FiniteGroupTable, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![g.identity()];
    let mut i = 0;
    while i < seen.len() {
        for &s in gens {
            let y = g.mul(seen[i], s);
            if !seen.contains(&y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    seen
}

/// Propagates `χ(x s_i) = χ(x) + k_i` from `χ(e) = 0`; `None` on conflict.
fn extend(g: &FiniteGroupTable, gens: &[usize], images: &[u64]) -> Option<Vec<u64>> {
    let n = g.order() as u64;
    let mut chi: Vec<Option<u64>> = vec![None; g.order()];
    chi[g.identity()] = Some(0);
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        let kx = chi[x].unwrap();
        for (&s, &k) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let ky = (kx + k) % n;
            match chi[y] {
                None => {
                    chi[y] = Some(ky);
                    queue.push(y);
                }
                Some(old) if old != ky => return None,
                Some(_) => {}
            }
        }
    }
    chi.into_iter().collect()
}

/// `â(χ) = Σ_g a(g) conj χ(g)`.
pub fn direct_dft(values: &[Cyclotomic], chi: &[RootOfUnity]) -> Cyclotomic {
    values
        .iter()
        .zip(chi)
        .fold(Cyclotomic::zero(), |acc, (a, c)| &acc + &(a * &c.conjugate().value()))
}

/// For `A = K(G)` with counting measure, `𝓕(a)` evaluated at the element
/// `conj χ` is the classical transform `â(χ)`. Compares both on the basis
/// and the supplied samples, and checks `(a*b)^ = â b̂` on basis pairs.
pub fn dft_oracle_check(g: &FiniteGroupTable, samples: &[Vec<Cyclotomic>]) -> CheckReport {
    let a: FiniteQuantumGroup<Cyclotomic> = function_algebra(g);
    let id = a.id().to_string();
    let mut report = CheckReport::new();
    let Some(chars) = group_characters(g) else {
        report.push(CheckRecord::skip("oracle", format!("{id}/dft"), "group is not abelian"));
        return report;
    };
    let count = (chars.len() != g.order())
        .then(|| format!("found {} characters for a group of order {}", chars.len(), g.order()));
    report.push(CheckRecord::from_witness("oracle", format!("{id}/character-count"), count));

    let conj_elements: Vec<Element<Cyclotomic>> = chars
        .iter()
        .map(|chi| {
            a.element(chi.iter().map(|c| c.conjugate().value()).collect())
                .expect("dimension matches")
        })
        .collect();
    let transform_at = |x: &Element<Cyclotomic>, k: usize| -> crate::Result<Cyclotomic> {
        a.eval(&a.fourier(x)?, &conj_elements[k])
    };

    let mut inputs: Vec<Vec<Cyclotomic>> = (0..a.dim()).map(|i| a.basis(i).into_coords()).collect();
    inputs.extend(samples.iter().cloned());
    let mut dft = None;
    'outer: for (n, v) in inputs.iter().enumerate() {
        let x = match a.element(v.clone()) {
            Ok(x) => x,
            Err(e) => {
                dft = Some(e.to_string());
                break;
            }
        };
        for (k, chi) in chars.iter().enumerate() {
            let want = direct_dft(v, chi);
            match transform_at(&x, k) {
                Ok(got) if got == want => {}
                Ok(got) => {
                    dft = Some(format!("input {n}, character {k}: 𝓕 gives {got}, sum gives {want}"));
                    break 'outer;
                }
                Err(e) => {
                    dft = Some(e.to_string());
                    break 'outer;
                }
            }
        }
    }
    report.push(CheckRecord::from_witness("oracle", format!("{id}/dft"), dft));

    let mut conv = None;
    'pairs: for i in 0..a.dim() {
        for j in 0..a.dim() {
            let prod = match a.convolve(&a.basis(i), &a.basis(j)) {
                Ok(p) => p,
                Err(e) => {
                    conv = Some(e.to_string());
                    break 'pairs;
                }
            };
            for chi in &chars {
                let lhs = direct_dft(prod.coords(), chi);
                let rhs = &direct_dft(a.basis(i).coords(), chi) * &direct_dft(a.basis(j).coords(), chi);
                if lhs != rhs {
                    conv = Some(format!("a={i}, b={j}: {lhs} != {rhs}"));
                    break 'pairs;
                }
            }
        }
    }
    report.push(CheckRecord::from_witness("oracle", format!("{id}/dft-convolution"), conv));
    report
}
