//! Exact rational matrices: rank, nullspace, and linear solving by
//! fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::rational::Rational;

/// Rectangular matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<Rational>>,
    cols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Shape("matrix must have at least one row".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::Shape("matrix must have at least one column".into()));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have differing lengths".into()));
        }
        Ok(RatMatrix { rows, cols })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Clears denominators row by row.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = bareiss_echelon(self.integer_rows());
        pivots.len()
    }

    /// Exact basis of the right nullspace {v : Mv = 0}.
    ///
    /// Basis vectors are integer-valued with content 1 and first nonzero
    /// entry positive; one vector per free column of the reduced echelon
    /// form, in ascending free-column order.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (ech, pivots) = bareiss_echelon(self.integer_rows());
        let pivot_of_row: Vec<usize> = pivots.clone();
        let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();

        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot(free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            // back-substitute pivot variables, bottom row first
            for (k, &pc) in pivot_of_row.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in (pc + 1)..self.cols {
                    if ech[k][j].is_zero() || v[j].is_zero() {
                        continue;
                    }
                    acc += &(Rational::from_bigint(ech[k][j].clone()) * &v[j]);
                }
                if acc.is_zero() {
                    v[pc] = Rational::zero();
                } else {
                    v[pc] = -acc / Rational::from_bigint(ech[k][pc].clone());
                }
            }
            basis.push(primitive_normalize_sign(&v));
        }
        basis
    }

    /// Solves Mx = rhs, requiring a unique solution.
    pub fn solve_unique(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        if rhs.len() != self.rows.len() {
            return Err(Error::Shape("rhs length does not match row count".into()));
        }
        let mut aug_rows = self.rows.clone();
        for (row, b) in aug_rows.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        let aug = RatMatrix { rows: aug_rows, cols: self.cols + 1 };
        let (ech, pivots) = bareiss_echelon(aug.integer_rows());
        if pivots.iter().any(|&c| c == self.cols) {
            return Err(Error::RankDeficient("inconsistent linear system".into()));
        }
        if pivots.len() < self.cols {
            return Err(Error::RankDeficient(
                "linear system does not have a unique solution".into(),
            ));
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::from_bigint(ech[k][self.cols].clone());
            for j in (pc + 1)..self.cols {
                if ech[k][j].is_zero() || x[j].is_zero() {
                    continue;
                }
                acc -= &(Rational::from_bigint(ech[k][j].clone()) * &x[j]);
            }
            x[pc] = acc / Rational::from_bigint(ech[k][pc].clone());
        }
        Ok(x)
    }
}

/// Fraction-free Gaussian elimination. Pivot choice is the first nonzero
/// entry in row-major order, so the echelon form (and everything derived
/// from it) is deterministic. Returns the echelon matrix and pivot columns.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = m.len();
    if rows == 0 {
        return (m, vec![]);
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = t / &prev; // exact by Bareiss
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Scales a rational vector to integer entries with content 1 and first
/// nonzero entry positive. Zero vectors are returned unchanged.
pub fn primitive_normalize_sign(v: &[Rational]) -> Vec<Rational> {
    match primitive_positive_scale(v) {
        None => v.to_vec(),
        Some(p) => {
            if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                p.iter().map(|x| -x).collect()
            } else {
                p
            }
        }
    }
}

/// Scales a rational vector by a positive rational so entries are integers
/// with content 1, preserving orientation. Returns None for zero vectors.
pub fn primitive_positive_scale(v: &[Rational]) -> Option<Vec<Rational>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(
        ints.into_iter()
            .map(|x| Rational::from_bigint(x / &content))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_has_empty_nullspace() {
        let id = m(&[&[1, 0], &[0, 1]]);
        assert_eq!(id.rank(), 2);
        assert!(id.nullspace().is_empty());
    }

    #[test]
    fn single_relation_nullspace() {
        let a = m(&[&[1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![Rational::from(1), Rational::from(-1)]]);
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(a.rank() + ns.len(), a.num_cols());
        for v in &ns {
            for row in a.rows() {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_unique_small() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let x = a
            .solve_unique(&[Rational::from(5), Rational::from(-2)])
            .unwrap();
        assert_eq!(x, vec![Rational::from(1), Rational::from(3)]);
        // inconsistent
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b
            .solve_unique(&[Rational::from(1), Rational::from(2)])
            .is_err());
        // underdetermined
        assert!(m(&[&[1, 1]]).solve_unique(&[Rational::from(1)]).is_err());
    }

    #[test]
    fn nullspace_entries_are_primitive_integers() {
        let a = RatMatrix::from_rows(vec![vec![
            Rational::new(1, 2),
            Rational::new(1, 3),
            Rational::new(1, 6),
        ]])
        .unwrap();
        for v in a.nullspace() {
            assert!(v.iter().all(|x| x.is_integer()));
            let g = v
                .iter()
                .fold(num_bigint::BigInt::from(0), |acc, x| {
                    num_integer::Integer::gcd(&acc, x.numer())
                });
            assert_eq!(g, num_bigint::BigInt::from(1));
            assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_positive());
        }
    }
}
