//! Exact rational scalars, vectors, and matrices, plus the regular
//! simplex-circuit geometry in the hyperplane H0 = {x : sum x_i = 0} that
//! the rest of the crate builds on.
//!
//! The regular simplex with vertices u_1..u_n is modeled by
//! delta_i = e_i - (1/n)(e_1+...+e_n), which keeps every coordinate
//! rational; an isometric embedding into R^(n-1) would need square roots.

mod matrix;
mod rational;

pub use matrix::{primitive_normalize_sign, primitive_positive_scale, RatMatrix};
pub use rational::{parse_decimal, parse_rational_flexible, Rational};

use crate::error::{Error, Result};

/// A point of the hyperplane H0 (coordinates sum to zero).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HPoint {
    coords: Vec<Rational>,
}

impl HPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Domain("H0 point needs at least one coordinate".into()));
        }
        let sum: Rational = coords.iter().sum();
        if !sum.is_zero() {
            return Err(Error::Domain(format!(
                "H0 point coordinates must sum to zero, got {sum}"
            )));
        }
        Ok(HPoint { coords })
    }

    pub fn zero(n: usize) -> Self {
        HPoint { coords: vec![Rational::zero(); n] }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &HPoint) -> Rational {
        dot(&self.coords, &other.coords)
    }

    pub fn neg(&self) -> HPoint {
        HPoint { coords: self.coords.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, s: &Rational) -> HPoint {
        HPoint { coords: self.coords.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &HPoint) -> HPoint {
        HPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Standard dot product of two equal-length slices.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Vertices delta_1..delta_n of the centered regular simplex circuit:
/// delta_i = e_i - (1/n) * (e_1 + ... + e_n). They sum to zero, and this
/// is (up to scaling) their only linear dependence.
pub fn simplex_vertices(n: usize) -> Result<Vec<HPoint>> {
    if n < 2 {
        return Err(Error::Domain(format!("simplex circuit needs n >= 2, got {n}")));
    }
    let diag = Rational::new(n as i64 - 1, n as i64);
    let off = Rational::new(-1, n as i64);
    Ok((0..n)
        .map(|i| HPoint {
            coords: (0..n)
                .map(|j| if i == j { diag.clone() } else { off.clone() })
                .collect(),
        })
        .collect())
}

/// Given linearly independent u_1..u_{n-1} in H0, returns the dual basis
/// v_1..v_{n-1} in H0 with <u_i, v_j> = 1 if i = j else 0.
pub fn dual_basis(us: &[HPoint]) -> Result<Vec<HPoint>> {
    if us.is_empty() {
        return Err(Error::Domain("dual basis of empty family".into()));
    }
    let n = us[0].n();
    if us.len() != n - 1 || us.iter().any(|u| u.n() != n) {
        return Err(Error::Domain(format!(
            "expected n-1 = {} points in H0 of R^{n}, got {}",
            n - 1,
            us.len()
        )));
    }
    // rows: <u_i, v> = delta_{ij} plus the H0 constraint sum(v) = 0
    let mut rows: Vec<Vec<Rational>> = us.iter().map(|u| u.coords().to_vec()).collect();
    rows.push(vec![Rational::one(); n]);
    let mat = RatMatrix::from_rows(rows)?;
    let mut out = Vec::with_capacity(n - 1);
    for j in 0..(n - 1) {
        let mut rhs = vec![Rational::zero(); n];
        rhs[j] = Rational::one();
        let v = mat.solve_unique(&rhs).map_err(|_| {
            Error::RankDeficient("dual basis input is linearly dependent in H0".into())
        })?;
        out.push(HPoint { coords: v });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_vertices_small_cases() {
        let d3 = simplex_vertices(3).unwrap();
        assert_eq!(
            d3[0].coords(),
            &[Rational::new(2, 3), Rational::new(-1, 3), Rational::new(-1, 3)]
        );
        assert_eq!(
            d3[1].coords(),
            &[Rational::new(-1, 3), Rational::new(2, 3), Rational::new(-1, 3)]
        );
        let d2 = simplex_vertices(2).unwrap();
        assert_eq!(d2[0].coords(), &[Rational::new(1, 2), Rational::new(-1, 2)]);
        assert_eq!(d2[1].coords(), &[Rational::new(-1, 2), Rational::new(1, 2)]);
        assert!(simplex_vertices(1).is_err());
    }

    #[test]
    fn simplex_vertices_sum_to_zero_and_are_equidistant() {
        for n in 2..=8usize {
            let ds = simplex_vertices(n).unwrap();
            let mut sum = HPoint::zero(n);
            for d in &ds {
                sum = sum.add(d);
            }
            assert_eq!(sum, HPoint::zero(n));
            let self_dot = ds[0].dot(&ds[0]);
            let cross_dot = ds[0].dot(&ds[1]);
            for i in 0..n {
                for j in 0..n {
                    let d = ds[i].dot(&ds[j]);
                    if i == j {
                        assert_eq!(d, self_dot);
                    } else {
                        assert_eq!(d, cross_dot);
                    }
                }
            }
        }
    }

    #[test]
    fn dual_basis_n2() {
        let u = HPoint::new(vec![Rational::new(1, 2), Rational::new(-1, 2)]).unwrap();
        let vs = dual_basis(&[u]).unwrap();
        assert_eq!(vs[0].coords(), &[Rational::from(1), Rational::from(-1)]);
    }

    #[test]
    fn dual_basis_repairing_exact() {
        for n in [3usize, 4, 5] {
            let ds = simplex_vertices(n).unwrap();
            let us = &ds[..n - 1];
            let vs = dual_basis(us).unwrap();
            for (i, u) in us.iter().enumerate() {
                for (j, v) in vs.iter().enumerate() {
                    let expect = if i == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(u.dot(v), expect, "pairing ({i},{j}) for n={n}");
                }
            }
            // pairing condition is involutive: dual(dual(u)) pairs with dual(u)
            let ws = dual_basis(&vs).unwrap();
            for (i, w) in ws.iter().enumerate() {
                for (j, v) in vs.iter().enumerate() {
                    let expect = if i == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(w.dot(v), expect);
                }
            }
        }
    }

    #[test]
    fn dual_basis_rejects_dependent_input() {
        let ds = simplex_vertices(4).unwrap();
        // delta_1, delta_2, and their sum scaled: dependent within H0
        let dep = vec![ds[0].clone(), ds[1].clone(), ds[0].add(&ds[1])];
        assert!(dual_basis(&dep).is_err());
    }

    #[test]
    fn hpoint_rejects_nonzero_sum() {
        assert!(HPoint::new(vec![Rational::one(), Rational::one()]).is_err());
    }
}
