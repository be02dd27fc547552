use crate::field::{Field, RatFunc};
use crate::linalg::Matrix;

use super::{BraidError, BraidRep};

fn check_n(n: usize) -> Result<(), BraidError> {
    if n < 3 {
        Err(BraidError::TooFewStrands(n))
    } else {
        Ok(())
    }
}

/// Identity except `block` placed at rows/columns `(i, i+1)` (0-based `i`).
fn with_block<F: Field>(r: usize, i: usize, block: [[F; 2]; 2]) -> Matrix<F> {
    let mut m = Matrix::identity(r);
    for (a, row) in block.into_iter().enumerate() {
        for (b, v) in row.into_iter().enumerate() {
            m.set(i + a, i + b, v);
        }
    }
    m
}

/// Burau representation over `Q(t)`; `reduced` gives dimension `n - 1`.
pub fn burau(n: usize, reduced: bool) -> Result<BraidRep<RatFunc>, BraidError> {
    burau_with(n, reduced, RatFunc::t())
}

/// Burau representation with the parameter set to `t`.
pub fn burau_with<F: Field>(n: usize, reduced: bool, t: F) -> Result<BraidRep<F>, BraidError> {
    check_n(n)?;
    let (zero, one) = (F::zero(), F::one());
    let gens = if !reduced {
        (0..n - 1)
            .map(|i| with_block(n, i, [[one.sub(&t), t.clone()], [one.clone(), zero.clone()]]))
            .collect()
    } else {
        let r = n - 1;
        (1..n)
            .map(|i| {
                // σ_i touches rows/cols i-1..=i+1 (1-based), clipped at the ends
                let mut m = Matrix::identity(r);
                let row = i - 1;
                m.set(row, row, t.neg());
                if i > 1 {
                    m.set(row, row - 1, t.clone());
                }
                if i < r {
                    m.set(row, row + 1, one.clone());
                }
                m
            })
            .collect()
    };
    BraidRep::new(n, gens)
}

/// Standard representation over `Q(t)`: dimension `n`, block `[[0, t], [1, 0]]`.
pub fn tym_standard(n: usize) -> Result<BraidRep<RatFunc>, BraidError> {
    tym_with(n, RatFunc::t())
}

pub fn tym_with<F: Field>(n: usize, t: F) -> Result<BraidRep<F>, BraidError> {
    check_n(n)?;
    let gens =
        (0..n - 1).map(|i| with_block(n, i, [[F::zero(), t.clone()], [F::one(), F::zero()]])).collect();
    BraidRep::new(n, gens)
}

/// One-dimensional representation `σ_i ↦ y`.
pub fn chi<F: Field>(y: F, n: usize) -> Result<BraidRep<F>, BraidError> {
    check_n(n)?;
    if y.is_zero() {
        return Err(BraidError::ZeroScalar);
    }
    BraidRep::new(n, vec![Matrix::scalar(1, y); n - 1])
}

/// `chi ⊗ rho` for one-dimensional `chi`: every generator scaled by its value.
pub fn tensor<F: Field>(chi: &BraidRep<F>, rho: &BraidRep<F>) -> Result<BraidRep<F>, BraidError> {
    if chi.dim() != 1 {
        return Err(BraidError::NotOneDimensional(chi.dim()));
    }
    if chi.n() != rho.n() {
        return Err(BraidError::StrandMismatch(chi.n(), rho.n()));
    }
    let gens = chi.generators().iter().zip(rho.generators()).map(|(y, c)| c.scale(y.get(0, 0))).collect();
    BraidRep::new(rho.n(), gens)
}

/// Block-diagonal `a ⊕ b`.
pub fn direct_sum<F: Field>(a: &BraidRep<F>, b: &BraidRep<F>) -> Result<BraidRep<F>, BraidError> {
    if a.n() != b.n() {
        return Err(BraidError::StrandMismatch(a.n(), b.n()));
    }
    let gens = a.generators().iter().zip(b.generators()).map(|(x, y)| x.direct_sum(y)).collect();
    BraidRep::new(a.n(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    #[test]
    fn reduced_burau_shape() {
        let rep = burau_with(4, true, Q::from_integer(2)).unwrap();
        assert_eq!(rep.dim(), 3);
        assert_eq!(rep.c(1), &Matrix::from_i64(&[&[-2, 1, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(rep.c(2), &Matrix::from_i64(&[&[1, 0, 0], &[2, -2, 1], &[0, 0, 1]]));
        assert_eq!(rep.c(3), &Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 2, -2]]));
    }

    #[test]
    fn tensor_identities() {
        let rho = tym_standard(5).unwrap();
        let one = chi(RatFunc::one(), 5).unwrap();
        assert_eq!(tensor(&one, &rho).unwrap(), rho);
        let y = RatFunc::t().add(&RatFunc::one());
        let twisted = tensor(&chi(y.clone(), 5).unwrap(), &rho).unwrap();
        let back = tensor(&chi(y.inv().unwrap(), 5).unwrap(), &twisted).unwrap();
        assert_eq!(back, rho);
        assert_eq!(tensor(&rho, &rho).unwrap_err(), BraidError::NotOneDimensional(5));
        assert_eq!(tensor(&one, &tym_standard(4).unwrap()).unwrap_err(), BraidError::StrandMismatch(5, 4));
    }

    #[test]
    fn twisted_tym_corank() {
        let tym = tym_standard(10).unwrap();
        let rep = tensor(&chi(RatFunc::from_i64(2), 10).unwrap(), &tym).unwrap();
        let rep = rep.verify().unwrap();
        // oracle: rank(2 C_1 - I) from the untwisted generator
        let two = RatFunc::from_i64(2);
        let oracle = tym.c(1).scale(&two).sub(&Matrix::identity(10)).rank();
        assert_eq!(rep.corank().unwrap(), oracle);
        assert!(oracle >= 8);
    }

    #[test]
    fn specialization_commutes_with_construction() {
        for n in 3..=6 {
            for reduced in [false, true] {
                let p = Q::new_i64(-3, 2).unwrap();
                let direct = burau_with(n, reduced, p.clone()).unwrap();
                let via = burau(n, reduced).unwrap().specialize(&p).unwrap();
                assert_eq!(direct, via);
            }
        }
    }
}
