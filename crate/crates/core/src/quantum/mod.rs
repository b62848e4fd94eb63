//! Finite-dimensional algebraic quantum groups given by structure tensors.
//!
//! A quantum group of dimension `d` is described on a basis `a_0 … a_{d−1}`:
//!
//! * `a_i · a_j = Σ_k m[i][j][k] a_k`
//! * `Δ(a_i) = Σ c a_j ⊗ a_k` over the sparse triples `(j, k, c)`
//! * `ε(a_i)`, `S(a_i)` (row `i` of the antipode matrix), `a_i*` (row `i`
//!   of the star matrix, extended antilinearly), the unit, and the values
//!   `φ(a_i)`, `ψ(a_i)` of a left and a right integral.
//!
//! Elements and functionals are coordinate vectors tagged with the id of
//! the quantum group they belong to; mixing owners is an error.

mod axioms;
mod dual;
mod exchange;
mod fourier;
mod grouplike;
mod types;

use std::marker::PhantomData;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{dot, format_vector, vectors_equal, Scalar};

pub use axioms::verify_axioms;
pub use dual::{
    bidual_in_original_basis, build_dual, integral_differences, permute_basis,
    structure_differences, DualResult,
};
pub use exchange::{ElementFile, QuantumGroupFile, VectorKind};
pub use fourier::{convolution_check, lemma_inversion_check, plancherel_check, round_trip_check};
pub use grouplike::{fourier_group_like, GroupLikeFourier};
pub use types::{classify_type, dual_type_check, TypeClass};

/// Coefficients of a tensor `Σ t[p][q] a_p ⊗ a_q`.
pub type Tensor<S> = Matrix<S>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Primal;
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dual;

/// Coordinates tagged with their owning quantum group. `K` distinguishes
/// elements of `A` from functionals on `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coords<S, K> {
    owner: Arc<str>,
    coords: Vec<S>,
    kind: PhantomData<K>,
}

/// An element `Σ x_i a_i` of the algebra.
pub type Element<S> = Coords<S, Primal>;
/// A functional `ω`, stored through its values `ω(a_i)`.
pub type Functional<S> = Coords<S, Dual>;

impl<S: Scalar, K> Coords<S, K> {
    fn new(owner: Arc<str>, coords: Vec<S>) -> Self {
        Coords {
            owner,
            coords,
            kind: PhantomData,
        }
    }

    pub fn owner(&self) -> &str {
        &self.owner
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn same_owner(&self, other: &Self) -> Result<()> {
        if self.owner != other.owner {
            return Err(Error::OwnerMismatch {
                left: self.owner.to_string(),
                right: other.owner.to_string(),
            });
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.plus(b))
            .collect();
        Ok(Self::new(self.owner.clone(), coords))
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.minus(b))
            .collect();
        Ok(Self::new(self.owner.clone(), coords))
    }

    pub fn scaled(&self, s: &S) -> Self {
        Self::new(self.owner.clone(), self.coords.iter().map(|c| c.times(s)).collect())
    }

    /// Same owner and equal coordinates (up to tolerance for float backends).
    pub fn same_value(&self, other: &Self) -> bool {
        self.owner == other.owner && vectors_equal(&self.coords, &other.coords)
    }

    /// Moves the vector to another owner of the same dimension. Used when a
    /// quantum group is rebuilt (rescaled integral, reloaded from file).
    pub fn reowned(&self, owner: &str) -> Self {
        Self::new(owner.into(), self.coords.clone())
    }
}

impl<S: Scalar, K> std::fmt::Display for Coords<S, K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_vector(&self.coords))
    }
}

/// Sparse, owner-free description of a quantum group; the constructor input
/// and the exchange-format payload.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumGroupParts<S> {
    pub id: String,
    pub labels: Vec<String>,
    /// `(i, j, k, c)`: `a_i a_j` has coefficient `c` on `a_k`.
    pub mult: Vec<(usize, usize, usize, S)>,
    /// `(i, j, k, c)`: `Δ(a_i)` has coefficient `c` on `a_j ⊗ a_k`.
    pub comult: Vec<(usize, usize, usize, S)>,
    pub counit: Vec<S>,
    /// Row `i` holds the coordinates of `S(a_i)`.
    pub antipode: Matrix<S>,
    /// Row `i` holds the coordinates of `a_i*`; `None` when there is no
    /// *-structure.
    pub star: Option<Matrix<S>>,
    pub unit: Vec<S>,
    pub left_integral: Vec<S>,
    pub right_integral: Vec<S>,
}

#[derive(Clone, Debug)]
pub struct FiniteQuantumGroup<S: Scalar> {
    id: Arc<str>,
    labels: Vec<String>,
    dim: usize,
    /// Indexed by `i * dim + j`; nonzero `(k, c)` only.
    mult: Vec<Vec<(usize, S)>>,
    comult: Vec<Vec<(usize, usize, S)>>,
    counit: Vec<S>,
    antipode: Matrix<S>,
    star: Option<Matrix<S>>,
    unit: Vec<S>,
    left_integral: Vec<S>,
    right_integral: Vec<S>,
    antipode_inverse: OnceLock<Option<Matrix<S>>>,
    gram_inverse: OnceLock<Option<Matrix<S>>>,
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn check_square<S>(d: usize, m: &Matrix<S>) -> Result<()> {
    check_len(d, m.len())?;
    m.iter().try_for_each(|row| check_len(d, row.len()))
}

fn merge_sparse<S: Scalar>(entries: &mut Vec<(usize, S)>, k: usize, c: &S) {
    match entries.iter_mut().find(|(kk, _)| *kk == k) {
        Some((_, v)) => *v = v.plus(c),
        None => entries.push((k, c.clone())),
    }
}

impl<S: Scalar> FiniteQuantumGroup<S> {
    /// Validates shapes (not axioms; see [`verify_axioms`]) and builds the
    /// dense lookup tables.
    pub fn new(parts: QuantumGroupParts<S>) -> Result<Self> {
        let d = parts.labels.len();
        if d == 0 {
            return Err(Error::Structure("dimension must be positive".into()));
        }
        for v in [
            &parts.counit,
            &parts.unit,
            &parts.left_integral,
            &parts.right_integral,
        ] {
            check_len(d, v.len())?;
        }
        check_square(d, &parts.antipode)?;
        if let Some(star) = &parts.star {
            check_square(d, star)?;
        }

        let index_ok = |i: usize, j: usize, k: usize| i < d && j < d && k < d;
        let mut mult: Vec<Vec<(usize, S)>> = vec![Vec::new(); d * d];
        for (i, j, k, c) in &parts.mult {
            if !index_ok(*i, *j, *k) {
                return Err(Error::Structure(format!("mult index ({i},{j},{k}) out of range")));
            }
            merge_sparse(&mut mult[i * d + j], *k, c);
        }
        for e in &mut mult {
            e.retain(|(_, c)| !c.is_zero());
            e.sort_by_key(|(k, _)| *k);
        }

        let mut comult: Vec<Vec<(usize, usize, S)>> = vec![Vec::new(); d];
        for (i, j, k, c) in &parts.comult {
            if !index_ok(*i, *j, *k) {
                return Err(Error::Structure(format!("comult index ({i},{j},{k}) out of range")));
            }
            match comult[*i].iter_mut().find(|(a, b, _)| a == j && b == k) {
                Some((_, _, v)) => *v = v.plus(c),
                None => comult[*i].push((*j, *k, c.clone())),
            }
        }
        for e in &mut comult {
            e.retain(|(_, _, c)| !c.is_zero());
            e.sort_by_key(|(a, b, _)| (*a, *b));
        }

        Ok(FiniteQuantumGroup {
            id: parts.id.into(),
            labels: parts.labels,
            dim: d,
            mult,
            comult,
            counit: parts.counit,
            antipode: parts.antipode,
            star: parts.star,
            unit: parts.unit,
            left_integral: parts.left_integral,
            right_integral: parts.right_integral,
            antipode_inverse: OnceLock::new(),
            gram_inverse: OnceLock::new(),
        })
    }

    pub fn parts(&self) -> QuantumGroupParts<S> {
        let d = self.dim;
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &self.mult[i * d + j] {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        let comult = self
            .comult
            .iter()
            .enumerate()
            .flat_map(|(i, terms)| terms.iter().map(move |(j, k, c)| (i, *j, *k, c.clone())))
            .collect();
        QuantumGroupParts {
            id: self.id.to_string(),
            labels: self.labels.clone(),
            mult,
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            star: self.star.clone(),
            unit: self.unit.clone(),
            left_integral: self.left_integral.clone(),
            right_integral: self.right_integral.clone(),
        }
    }

    /// Converts every structure constant, e.g. to the float backend.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FiniteQuantumGroup<T> {
        let p = self.parts();
        let vmap = |v: &Vec<S>| v.iter().map(&f).collect::<Vec<T>>();
        let mmap = |m: &Matrix<S>| m.iter().map(vmap).collect::<Matrix<T>>();
        let parts = QuantumGroupParts {
            id: p.id,
            labels: p.labels,
            mult: p.mult.iter().map(|(i, j, k, c)| (*i, *j, *k, f(c))).collect(),
            comult: p.comult.iter().map(|(i, j, k, c)| (*i, *j, *k, f(c))).collect(),
            counit: vmap(&p.counit),
            antipode: mmap(&p.antipode),
            star: p.star.as_ref().map(mmap),
            unit: vmap(&p.unit),
            left_integral: vmap(&p.left_integral),
            right_integral: vmap(&p.right_integral),
        };
        FiniteQuantumGroup::new(parts).expect("shapes are preserved")
    }

    pub fn with_id(&self, id: &str) -> Self {
        let mut p = self.parts();
        p.id = id.to_string();
        Self::new(p).expect("shapes are preserved")
    }

    /// Same structure with the left integral multiplied by `factor`.
    pub fn with_scaled_left_integral(&self, factor: &S) -> Self {
        let mut p = self.parts();
        p.left_integral = p.left_integral.iter().map(|c| c.times(factor)).collect();
        Self::new(p).expect("shapes are preserved")
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn counit(&self) -> &[S] {
        &self.counit
    }

    pub fn unit(&self) -> &[S] {
        &self.unit
    }

    pub fn left_integral(&self) -> &[S] {
        &self.left_integral
    }

    pub fn right_integral(&self) -> &[S] {
        &self.right_integral
    }

    pub fn antipode_matrix(&self) -> &Matrix<S> {
        &self.antipode
    }

    pub fn star_matrix(&self) -> Option<&Matrix<S>> {
        self.star.as_ref()
    }

    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, S)] {
        &self.comult[i]
    }

    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.mult[i * self.dim + j]
    }

    /// Dense `m[i][j][k]`.
    pub fn mult_coefficient(&self, i: usize, j: usize, k: usize) -> S {
        self.mult_terms(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(S::zero, |(_, c)| c.clone())
    }

    /// Dense `Δ(a_i)` as a `d × d` tensor.
    pub fn comult_tensor(&self, i: usize) -> Tensor<S> {
        let mut t = zero_tensor::<S>(self.dim);
        for (j, k, c) in &self.comult[i] {
            t[*j][*k] = c.clone();
        }
        t
    }

    // ---- elements -------------------------------------------------------

    pub fn element(&self, coords: Vec<S>) -> Result<Element<S>> {
        check_len(self.dim, coords.len())?;
        Ok(Element::new(self.id.clone(), coords))
    }

    pub fn functional(&self, coords: Vec<S>) -> Result<Functional<S>> {
        check_len(self.dim, coords.len())?;
        Ok(Functional::new(self.id.clone(), coords))
    }

    pub fn basis(&self, i: usize) -> Element<S> {
        Element::new(self.id.clone(), unit_vector(self.dim, i))
    }

    pub fn zero(&self) -> Element<S> {
        Element::new(self.id.clone(), vec![S::zero(); self.dim])
    }

    pub fn one(&self) -> Element<S> {
        Element::new(self.id.clone(), self.unit.clone())
    }

    pub fn zero_functional(&self) -> Functional<S> {
        Functional::new(self.id.clone(), vec![S::zero(); self.dim])
    }

    pub fn counit_functional(&self) -> Functional<S> {
        Functional::new(self.id.clone(), self.counit.clone())
    }

    pub fn left_integral_functional(&self) -> Functional<S> {
        Functional::new(self.id.clone(), self.left_integral.clone())
    }

    pub(crate) fn owns<K>(&self, v: &Coords<S, K>) -> Result<()> {
        if *v.owner != *self.id {
            return Err(Error::OwnerMismatch {
                left: self.id.to_string(),
                right: v.owner.to_string(),
            });
        }
        check_len(self.dim, v.coords.len())
    }

    fn wrap(&self, coords: Vec<S>) -> Element<S> {
        Element::new(self.id.clone(), coords)
    }

    fn wrap_functional(&self, coords: Vec<S>) -> Functional<S> {
        Functional::new(self.id.clone(), coords)
    }

    // ---- coordinate-level structure maps -------------------------------

    pub(crate) fn mul_vec(&self, a: &[S], b: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut out = vec![S::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.times(y);
                for (k, c) in &self.mult[i * d + j] {
                    out[*k] = out[*k].plus(&xy.times(c));
                }
            }
        }
        out
    }

    pub(crate) fn coproduct_vec(&self, a: &[S]) -> Tensor<S> {
        let mut t = zero_tensor::<S>(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                t[*j][*k] = t[*j][*k].plus(&x.times(c));
            }
        }
        t
    }

    pub(crate) fn antipode_vec(&self, a: &[S]) -> Vec<S> {
        row_combination(&self.antipode, a)
    }

    pub(crate) fn antipode_inverse_matrix(&self) -> Option<&Matrix<S>> {
        self.antipode_inverse
            .get_or_init(|| linalg::inverse(&self.antipode))
            .as_ref()
    }

    pub(crate) fn antipode_inverse_vec(&self, a: &[S]) -> Result<Vec<S>> {
        let inv = self
            .antipode_inverse_matrix()
            .ok_or_else(|| Error::Structure("antipode is not invertible".into()))?;
        Ok(row_combination(inv, a))
    }

    pub(crate) fn star_vec(&self, a: &[S]) -> Result<Vec<S>> {
        let star = self
            .star
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{} has no *-structure", self.id)))?;
        let conj: Vec<S> = a.iter().map(Scalar::conjugate).collect();
        Ok(row_combination(star, &conj))
    }

    /// Product in `A ⊗ A`: `(x ⊗ y)(u ⊗ v) = xu ⊗ yv`.
    pub(crate) fn tensor_mul(&self, s: &Tensor<S>, t: &Tensor<S>) -> Tensor<S> {
        let d = self.dim;
        let mut out = zero_tensor::<S>(d);
        for p in 0..d {
            for q in 0..d {
                if s[p][q].is_zero() {
                    continue;
                }
                for r in 0..d {
                    for u in 0..d {
                        if t[r][u].is_zero() {
                            continue;
                        }
                        let c = s[p][q].times(&t[r][u]);
                        for (k1, c1) in &self.mult[p * d + r] {
                            let c1 = c.times(c1);
                            for (k2, c2) in &self.mult[q * d + u] {
                                out[*k1][*k2] = out[*k1][*k2].plus(&c1.times(c2));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `Σ t[p][q] (x_p ⊗ y_q)` where `x_p = f(a_p)`, `y_q = g(a_q)` for
    /// linear maps given as matrices (row `p` = image of `a_p`).
    pub(crate) fn tensor_map(&self, t: &Tensor<S>, f: &Matrix<S>, g: &Matrix<S>) -> Tensor<S> {
        let d = self.dim;
        let mut out = zero_tensor::<S>(d);
        for p in 0..d {
            for q in 0..d {
                if t[p][q].is_zero() {
                    continue;
                }
                for r in 0..d {
                    if f[p][r].is_zero() {
                        continue;
                    }
                    let c = t[p][q].times(&f[p][r]);
                    for u in 0..d {
                        if !g[q][u].is_zero() {
                            out[r][u] = out[r][u].plus(&c.times(&g[q][u]));
                        }
                    }
                }
            }
        }
        out
    }

    /// `(a ⊗ b)` as a tensor.
    pub(crate) fn outer(&self, a: &[S], b: &[S]) -> Tensor<S> {
        a.iter()
            .map(|x| b.iter().map(|y| x.times(y)).collect())
            .collect()
    }

    /// `φ(a_i a_j)`: the pairing between `A` and its Fourier image.
    pub fn gram_matrix(&self) -> Matrix<S> {
        self.integral_gram(&self.left_integral, false)
    }

    /// `ψ(a_j a_i)`, the matrix of `b ↦ ψ(b ·)` on coordinates.
    pub(crate) fn right_gram_transposed(&self) -> Matrix<S> {
        self.integral_gram(&self.right_integral, true)
    }

    fn integral_gram(&self, integral: &[S], transposed: bool) -> Matrix<S> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let (x, y) = if transposed { (j, i) } else { (i, j) };
                        self.mult[x * d + y]
                            .iter()
                            .fold(S::zero(), |acc, (k, c)| acc.plus(&c.times(&integral[*k])))
                    })
                    .collect()
            })
            .collect()
    }

    pub(crate) fn gram_inverse(&self) -> Result<&Matrix<S>> {
        self.gram_inverse
            .get_or_init(|| linalg::inverse(&self.gram_matrix()))
            .as_ref()
            .ok_or(Error::Faithfulness)
    }

    // ---- public element operations --------------------------------------

    pub fn mul(&self, a: &Element<S>, b: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(self.wrap(self.mul_vec(&a.coords, &b.coords)))
    }

    pub fn coproduct(&self, a: &Element<S>) -> Result<Tensor<S>> {
        self.owns(a)?;
        Ok(self.coproduct_vec(&a.coords))
    }

    pub fn counit_of(&self, a: &Element<S>) -> Result<S> {
        self.owns(a)?;
        Ok(dot(&self.counit, &a.coords))
    }

    pub fn antipode_of(&self, a: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        Ok(self.wrap(self.antipode_vec(&a.coords)))
    }

    pub fn antipode_inverse_of(&self, a: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        Ok(self.wrap(self.antipode_inverse_vec(&a.coords)?))
    }

    pub fn star_of(&self, a: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        Ok(self.wrap(self.star_vec(&a.coords)?))
    }

    pub fn phi(&self, a: &Element<S>) -> Result<S> {
        self.owns(a)?;
        Ok(dot(&self.left_integral, &a.coords))
    }

    pub fn psi(&self, a: &Element<S>) -> Result<S> {
        self.owns(a)?;
        Ok(dot(&self.right_integral, &a.coords))
    }

    /// `ω(a)`.
    pub fn eval(&self, omega: &Functional<S>, a: &Element<S>) -> Result<S> {
        self.owns(omega)?;
        self.owns(a)?;
        Ok(dot(&omega.coords, &a.coords))
    }

    /// Product in the dual, `(ω ω′)(x) = (ω ⊗ ω′)Δ(x)`.
    pub fn dual_mul(&self, w1: &Functional<S>, w2: &Functional<S>) -> Result<Functional<S>> {
        self.owns(w1)?;
        self.owns(w2)?;
        Ok(self.wrap_functional(self.dual_mul_vec(&w1.coords, &w2.coords)))
    }

    pub(crate) fn dual_mul_vec(&self, w1: &[S], w2: &[S]) -> Vec<S> {
        self.comult
            .iter()
            .map(|terms| {
                terms.iter().fold(S::zero(), |acc, (j, k, c)| {
                    acc.plus(&c.times(&w1[*j]).times(&w2[*k]))
                })
            })
            .collect()
    }

    /// Dual counit `ε̂(ω) = ω(1)`.
    pub fn dual_counit(&self, w: &Functional<S>) -> Result<S> {
        self.owns(w)?;
        Ok(dot(&w.coords, &self.unit))
    }

    /// Dual antipode `Ŝ(ω) = ω ∘ S`.
    pub fn dual_antipode(&self, w: &Functional<S>) -> Result<Functional<S>> {
        self.owns(w)?;
        Ok(self.wrap_functional(linalg::mat_vec(&self.antipode, &w.coords)))
    }

    /// Dual involution `ω*(a) = conj(ω(S(a)*))`.
    pub fn dual_star(&self, w: &Functional<S>) -> Result<Functional<S>> {
        self.owns(w)?;
        Ok(self.wrap_functional(self.dual_star_vec(&w.coords)?))
    }

    pub(crate) fn dual_star_vec(&self, w: &[S]) -> Result<Vec<S>> {
        (0..self.dim)
            .map(|i| {
                let s = self.star_vec(&self.antipode[i])?;
                Ok(dot(w, &s).conjugate())
            })
            .collect()
    }

    /// Dual coproduct as a functional on `A ⊗ A`: `Δ̂(ω)(a_p ⊗ a_q) = ω(a_p a_q)`.
    pub fn dual_coproduct(&self, w: &Functional<S>) -> Result<Tensor<S>> {
        self.owns(w)?;
        let d = self.dim;
        Ok((0..d)
            .map(|p| {
                (0..d)
                    .map(|q| {
                        self.mult[p * d + q]
                            .iter()
                            .fold(S::zero(), |acc, (k, c)| acc.plus(&c.times(&w.coords[*k])))
                    })
                    .collect()
            })
            .collect())
    }

    /// Right integral on the dual: `ψ̂(φ(· a)) = ε(a)`.
    pub fn dual_right_integral(&self, w: &Functional<S>) -> Result<S> {
        let a = self.inverse_fourier(w)?;
        Ok(dot(&self.counit, &a.coords))
    }

    /// Left integral on the dual: `φ̂(ψ(b ·)) = ε(b)`.
    pub fn dual_left_integral(&self, w: &Functional<S>) -> Result<S> {
        self.owns(w)?;
        let b = linalg::solve(&self.right_gram_transposed(), &w.coords).ok_or(Error::Faithfulness)?;
        Ok(dot(&self.counit, &b))
    }
}

pub(crate) fn zero_tensor<S: Scalar>(d: usize) -> Tensor<S> {
    vec![vec![S::zero(); d]; d]
}

pub(crate) fn unit_vector<S: Scalar>(d: usize, i: usize) -> Vec<S> {
    (0..d).map(|j| if i == j { S::one() } else { S::zero() }).collect()
}

/// `Σ_i a_i · rows[i]`.
pub(crate) fn row_combination<S: Scalar>(rows: &Matrix<S>, a: &[S]) -> Vec<S> {
    let d = rows.first().map_or(0, Vec::len);
    let mut out = vec![S::zero(); d];
    for (x, row) in a.iter().zip(rows) {
        if x.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            if !r.is_zero() {
                *o = o.plus(&x.times(r));
            }
        }
    }
    out
}

pub(crate) fn tensors_equal<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| vectors_equal(x, y))
}

/// Solves the invariance equations for integrals: the left integrals are
/// the functionals with `(id ⊗ φ)Δ(a) = φ(a)1`, the right ones satisfy
/// `(ψ ⊗ id)Δ(a) = ψ(a)1`. Returns a basis of the solution space.
pub fn invariant_functionals<S: Scalar>(parts: &QuantumGroupParts<S>, left: bool) -> Vec<Vec<S>> {
    let d = parts.labels.len();
    // unknowns: φ_0..φ_{d−1}; one equation per (i, k)
    let mut rows = vec![vec![S::zero(); d]; d * d];
    for (i, j, k, c) in &parts.comult {
        // left: Δ(a_i) ∋ c a_j ⊗ a_k contributes c φ_k to component j
        let (component, var) = if left { (*j, *k) } else { (*k, *j) };
        let row = &mut rows[i * d + component];
        row[var] = row[var].plus(c);
    }
    for i in 0..d {
        for k in 0..d {
            let row = &mut rows[i * d + k];
            row[i] = row[i].minus(&parts.unit[k]);
        }
    }
    linalg::nullspace(&rows, d)
}

#[cfg(test)]
mod tests;
