use std::fmt;

use crate::field::Field;

use super::{LinalgError, Matrix};

/// A subspace of `F^ambient`, stored as the nonzero rows of the RREF of any
/// spanning set. The basis is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// Row span of `m`.
    pub fn from_spanning_matrix(m: &Matrix<F>) -> Self {
        let r = m.rref();
        let keep = r.rank * m.cols();
        let data = r.matrix.into_entries().into_iter().take(keep).collect();
        Subspace { ambient: m.cols(), basis: Matrix::from_vec(r.rank, m.cols(), data) }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::AmbientMismatch { left: ambient, right: bad.len() });
        }
        let rows = vectors.len();
        let m = Matrix::from_vec(rows, ambient, vectors.into_iter().flatten().collect());
        Ok(Self::from_spanning_matrix(&m))
    }

    pub fn span_of(v: &[F]) -> Self {
        Self::from_spanning_matrix(&Matrix::from_vec(1, v.len(), v.to_vec()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient })
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(Self::from_spanning_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Zassenhaus: echelonize `[[U, U], [W, 0]]`; the rows with a zero left
    /// half carry a basis of `U ∩ W` in their right half.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let n = self.ambient;
        let (du, dw) = (self.dim(), other.dim());
        let block = Matrix::from_fn(du + dw, 2 * n, |i, j| {
            if i < du {
                self.basis.get(i, j % n).clone()
            } else if j < n {
                other.basis.get(i - du, j).clone()
            } else {
                F::zero()
            }
        });
        let r = block.rref();
        let first = r.pivots.iter().position(|&p| p >= n).unwrap_or(r.rank);
        let rows: Vec<Vec<F>> = (first..r.rank).map(|i| r.matrix.row(i)[n..].to_vec()).collect();
        Self::from_vectors(n, rows)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        // Reduce against the RREF basis using its pivots.
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            let c = w[p].clone();
            if !c.is_zero() {
                for (wj, bj) in w.iter_mut().zip(row) {
                    if !bj.is_zero() {
                        *wj = wj.sub(&c.mul(bj));
                    }
                }
            }
        }
        w.iter().all(F::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Image of this subspace under `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix<F>) -> Self {
        let images: Vec<Vec<F>> = (0..self.dim()).map(|i| m.mul_vec(self.basis.row(i))).collect();
        Self::from_vectors(m.rows(), images).expect("image vectors have length rows(m)")
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        f.debug_list().entries((0..self.dim()).map(|i| self.basis.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn e(n: usize, i: usize) -> Vec<Q> {
        (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
    }

    fn span(n: usize, idx: &[usize]) -> Subspace<Q> {
        Subspace::from_vectors(n, idx.iter().map(|&i| e(n, i)).collect()).unwrap()
    }

    #[test]
    fn lattice_examples() {
        assert!(span(3, &[0]).intersect(&span(3, &[1])).unwrap().is_zero());
        let u = span(3, &[0, 1]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(span(3, &[0, 1]).intersect(&span(3, &[1, 2])).unwrap(), span(3, &[1]));
        assert_eq!(span(3, &[0]).sum(&span(3, &[2])).unwrap(), span(3, &[2, 0]));
    }

    #[test]
    fn canonical_basis_equality() {
        let a =
            Subspace::from_vectors(3, vec![vec![Q::from_integer(2), Q::from_integer(2), Q::zero()], e(3, 2)])
                .unwrap();
        let b = Subspace::from_vectors(
            3,
            vec![
                vec![Q::one(), Q::one(), Q::from_integer(5)],
                vec![Q::from_integer(-3), Q::from_integer(-3), Q::from_integer(1)],
            ],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert_eq!(
            span(3, &[0]).intersect(&span(4, &[0])),
            Err(LinalgError::AmbientMismatch { left: 3, right: 4 })
        );
        assert!(span(3, &[0]).sum(&span(2, &[0])).is_err());
    }

    #[test]
    fn contains_and_map() {
        let u = span(3, &[0, 1]);
        assert!(u.contains(&[Q::from_integer(4), Q::from_integer(-1), Q::zero()]));
        assert!(!u.contains(&e(3, 2)));
        let swap = Matrix::<Q>::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(u.map(&swap), span(3, &[1, 2]));
    }
}
