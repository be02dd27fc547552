use crate::field::Field;

use super::Matrix;

/// Whether the closure ran to a fixed point or was cut off at the cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureStatus {
    Stabilized,
    ReachedCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureResult {
    pub dim: usize,
    pub status: ClosureStatus,
}

/// Echelon basis of flattened matrices, each row normalized at its pivot.
struct Echelon<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    /// Reduce `v` against the basis; keep it if it is independent.
    fn insert(&mut self, mut v: Vec<F>) -> bool {
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.sub(&c.mul(b));
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        self.rows.push((p, v));
        true
    }
}

/// Dimension of the unital algebra generated by `gens`, capped at `cap`
/// (default `r^2`). Every element inserted into the span is multiplied on the
/// left by each generator until nothing new appears.
pub fn algebra_closure_dim<F: Field>(gens: &[Matrix<F>], r: usize, cap: Option<usize>) -> ClosureResult {
    let cap = cap.unwrap_or(r * r).min(r * r);
    let mut span = Echelon { rows: Vec::new() };
    let mut work: Vec<Matrix<F>> = Vec::new();
    let seeds = std::iter::once(Matrix::identity(r)).chain(gens.iter().cloned());
    for m in seeds {
        assert_eq!((m.rows(), m.cols()), (r, r), "generators must be r x r");
        if span.rows.len() >= cap {
            break;
        }
        if span.insert(m.entries().to_vec()) {
            work.push(m);
        }
    }
    while let Some(m) = work.pop() {
        if span.rows.len() >= cap {
            break;
        }
        for g in gens {
            let prod = g.mul(&m);
            if span.insert(prod.entries().to_vec()) {
                work.push(prod);
                if span.rows.len() >= cap {
                    break;
                }
            }
        }
    }
    let dim = span.rows.len().min(cap);
    let status = if dim >= cap { ClosureStatus::ReachedCap } else { ClosureStatus::Stabilized };
    ClosureResult { dim, status }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    #[test]
    fn identity_only() {
        let r = algebra_closure_dim::<Q>(&[Matrix::identity(3)], 3, None);
        assert_eq!(r, ClosureResult { dim: 1, status: ClosureStatus::Stabilized });
        assert_eq!(algebra_closure_dim::<Q>(&[], 3, None).dim, 1);
    }

    #[test]
    fn matrix_units_fill_everything() {
        let units: Vec<Matrix<Q>> = (0..4)
            .map(|k| Matrix::from_fn(2, 2, |i, j| if i * 2 + j == k { Q::one() } else { Q::zero() }))
            .collect();
        let r = algebra_closure_dim(&units, 2, None);
        assert_eq!(r, ClosureResult { dim: 4, status: ClosureStatus::ReachedCap });
    }

    #[test]
    fn diagonal_algebra_and_cap() {
        let d = Matrix::<Q>::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(algebra_closure_dim(std::slice::from_ref(&d), 3, None).dim, 3);
        let capped = algebra_closure_dim(&[d], 3, Some(2));
        assert_eq!(capped, ClosureResult { dim: 2, status: ClosureStatus::ReachedCap });
    }
}
