use crate::field::{Field, Poly};

use super::Matrix;

/// `det(λI - m)` by Faddeev-LeVerrier. Monic of degree `rows(m)`.
pub fn charpoly<F: Field>(m: &Matrix<F>) -> Poly<F> {
    assert!(m.is_square(), "charpoly needs a square matrix");
    let n = m.rows();
    // coeffs[k] is the coefficient of λ^k
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut mk = Matrix::<F>::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
        mk = m.mul(&mk).add(&Matrix::scalar(n, coeffs[n + 1 - k].clone()));
        let am = m.mul(&mk);
        let trace = (0..n).fold(F::zero(), |acc, i| acc.add(am.get(i, i)));
        let ck = trace.neg().div(&F::from_i64(k as i64)).expect("k is nonzero");
        coeffs[n - k] = ck;
    }
    Poly::new(coeffs)
}

/// Eigenvalues of `m` lying in `F`, each listed once.
pub fn eigenvalues_in_field<F: Field>(m: &Matrix<F>) -> Vec<F> {
    F::roots_in_field(&charpoly(m))
}

/// `d_k = dim Ker (c - λI)^k` for `k = 1..=rows(c)`. Nondecreasing; the number
/// of Jordan blocks of size at least `k` is `d_k - d_{k-1}`.
pub fn gen_eigenspace_dims<F: Field>(c: &Matrix<F>, lambda: &F) -> Vec<usize> {
    assert!(c.is_square(), "gen_eigenspace_dims needs a square matrix");
    let n = c.rows();
    let shifted = c.sub_scalar(lambda);
    let mut power = Matrix::identity(n);
    let mut dims = Vec::with_capacity(n);
    for _ in 0..n {
        power = power.mul(&shifted);
        let d = n - power.rank();
        dims.push(d);
        if dims.len() >= 2 && dims[dims.len() - 2] == d {
            // stabilized: the rest are equal
            dims.resize(n, d);
            break;
        }
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatFunc, Rational};

    type Q = Rational;

    #[test]
    fn filtration_examples() {
        assert_eq!(gen_eigenspace_dims(&Matrix::<Q>::identity(3), &Q::one()), vec![3, 3, 3]);
        let j = Matrix::<Q>::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(gen_eigenspace_dims(&j, &Q::zero()), vec![1, 2]);
        let d = Matrix::<Q>::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert_eq!(gen_eigenspace_dims(&d, &Q::one()), vec![2, 2, 2]);
    }

    #[test]
    fn charpoly_matches_determinant_at_points() {
        let m = Matrix::<Q>::from_i64(&[&[2, -1, 0, 3], &[1, 0, 4, -2], &[0, 5, 1, 1], &[-3, 2, 2, 0]]);
        let p = charpoly(&m);
        assert_eq!(p.degree(), Some(4));
        for x in -3..=3 {
            let lambda = Q::from_integer(x);
            let oracle = Matrix::scalar(4, lambda.clone()).sub(&m).det();
            assert_eq!(p.eval(&lambda), oracle, "at {x}");
        }
    }

    #[test]
    fn eigenvalues_over_qt() {
        let t = RatFunc::t();
        let c = Matrix::from_rows(vec![
            vec![RatFunc::one().sub(&t), t.clone()],
            vec![RatFunc::one(), RatFunc::zero()],
        ])
        .unwrap();
        let mut ev = eigenvalues_in_field(&c);
        ev.sort_by_key(ToString::to_string);
        assert_eq!(ev, vec![t.neg(), RatFunc::one()]);
    }
}
