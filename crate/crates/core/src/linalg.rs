//! Exact linear algebra over a [`Scalar`] field.
//!
//! Elimination is fraction-free (Bareiss): each update is
//! `(p·a_ij − a_ic·a_rj) / p_prev`, and the division is exact. Pivots are
//! chosen as the first nonzero entry in row order, so results are
//! deterministic.

use crate::scalar::Scalar;

pub type Matrix<S> = Vec<Vec<S>>;

/// Row echelon form together with the pivot column of each leading row.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    pub rows: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Fraction-free echelon form. Only the first `pivot_cols` columns are
/// eligible as pivots; trailing columns (right-hand sides) are carried
/// along.
pub fn echelon<S: Scalar>(mut m: Matrix<S>, pivot_cols: usize) -> Echelon<S> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = S::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols.min(ncols) {
        if r == nrows {
            break;
        }
        let Some(found) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let pivot = m[r][c].clone();
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let num = pivot.times(&row[j]).minus(&lead.times(&pivot_row[j]));
                row[j] = num.divide(&prev).expect("Bareiss divisor is a previous pivot");
            }
            row[c] = S::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: m, pivots }
}

/// Back-substitutes one right-hand-side column (index `rhs`) with free
/// variables set by `free`.
fn back_substitute<S: Scalar>(
    e: &Echelon<S>,
    n: usize,
    rhs: Option<usize>,
    free: &[(usize, S)],
) -> Vec<S> {
    let mut x = vec![S::zero(); n];
    for (j, v) in free {
        x[*j] = v.clone();
    }
    for (r, &pc) in e.pivots.iter().enumerate().rev() {
        let row = &e.rows[r];
        let mut acc = match rhs {
            Some(k) => row[k].clone(),
            None => S::zero(),
        };
        for j in pc + 1..n {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc = acc.minus(&row[j].times(&x[j]));
            }
        }
        x[pc] = acc.divide(&row[pc]).expect("pivot is nonzero");
    }
    x
}

/// Solves `A·X = B` for every column of `B` (given as a list of columns).
///
/// `A` may be rectangular. Returns `None` when the system is inconsistent
/// or the solution is not unique.
pub fn solve_columns<S: Scalar>(a: &Matrix<S>, columns: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = a.first().map_or(0, Vec::len);
    let k = columns.len();
    let aug: Matrix<S> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(columns.iter().map(|c| c[i].clone()));
            r
        })
        .collect();
    let e = echelon(aug, n);
    if e.rank() < n {
        return None;
    }
    let consistent = e.rows[e.rank()..]
        .iter()
        .all(|row| row[n..n + k].iter().all(Scalar::is_zero));
    if !consistent {
        return None;
    }
    Some((0..k).map(|c| back_substitute(&e, n, Some(n + c), &[])).collect())
}

pub fn solve<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    solve_columns(a, &[b.to_vec()]).map(|mut v| v.pop().unwrap())
}

pub fn identity<S: Scalar>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

pub fn transpose<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn inverse<S: Scalar>(a: &Matrix<S>) -> Option<Matrix<S>> {
    if a.len() != a.first().map_or(0, Vec::len) {
        return None;
    }
    let cols = solve_columns(a, &identity(a.len()))?;
    Some(transpose(&cols))
}

pub fn mat_vec<S: Scalar>(m: &Matrix<S>, v: &[S]) -> Vec<S> {
    m.iter().map(|row| crate::scalar::dot(row, v)).collect()
}

pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let bt = transpose(b);
    a.iter()
        .map(|row| bt.iter().map(|col| crate::scalar::dot(row, col)).collect())
        .collect()
}

/// Basis of `{x : A·x = 0}`, one vector per free column with that
/// coordinate set to 1.
pub fn nullspace<S: Scalar>(a: &Matrix<S>, ncols: usize) -> Vec<Vec<S>> {
    let e = echelon(a.clone(), ncols);
    (0..ncols)
        .filter(|c| !e.pivots.contains(c))
        .map(|f| back_substitute(&e, ncols, None, &[(f, S::one())]))
        .collect()
}

pub fn rank<S: Scalar>(a: &Matrix<S>) -> usize {
    let n = a.first().map_or(0, Vec::len);
    echelon(a.clone(), n).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ApproxComplex, Cyclotomic};

    fn m(rows: &[&[i64]]) -> Matrix<Cyclotomic> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Cyclotomic::integer(x)).collect())
            .collect()
    }

    #[test]
    fn solves_three_by_three() {
        let a = m(&[&[2, 1, -1], &[-3, -1, 2], &[-2, 1, 2]]);
        let b: Vec<_> = [8, -11, -3].iter().map(|&x| Cyclotomic::integer(x)).collect();
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![2.into(), 3.into(), (-1).into()]);
    }

    #[test]
    fn singular_system_has_no_unique_solution() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(solve(&a, &[1.into(), 2.into()]).is_none());
        assert!(inverse(&a).is_none());
    }

    #[test]
    fn rectangular_consistent_and_inconsistent() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let ok = solve(&a, &[1.into(), 2.into(), 3.into()]).unwrap();
        assert_eq!(ok, vec![1.into(), 2.into()]);
        assert!(solve(&a, &[1.into(), 2.into(), 4.into()]).is_none());
    }

    #[test]
    fn inverse_with_zero_leading_pivot() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(inverse(&a).unwrap(), a);
        let b = m(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        let inv = inverse(&b).unwrap();
        assert_eq!(mat_mul(&b, &inv), identity(3));
    }

    #[test]
    fn complex_entries() {
        let i = Cyclotomic::zeta(4);
        let one = Cyclotomic::integer(1);
        let a = vec![vec![one.clone(), i.clone()], vec![i.clone(), one.clone()]];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
    }

    #[test]
    fn nullspace_basis() {
        let a = m(&[&[1, -1, 0], &[0, 1, -1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns, vec![vec![1.into(), 1.into(), 1.into()]]);
        let full = m(&[&[1, 0], &[0, 1]]);
        assert!(nullspace(&full, 2).is_empty());
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn float_backend() {
        let a: Matrix<ApproxComplex> = vec![
            vec![ApproxComplex::new(4.0, 0.0), ApproxComplex::new(1.0, 1.0)],
            vec![ApproxComplex::new(1.0, -1.0), ApproxComplex::new(3.0, 0.0)],
        ];
        let inv = inverse(&a).unwrap();
        let p = mat_mul(&a, &inv);
        assert!(crate::scalar::vectors_equal(&p[0], &identity::<ApproxComplex>(2)[0]));
        assert!(crate::scalar::vectors_equal(&p[1], &identity::<ApproxComplex>(2)[1]));
    }
}
