//! Matrix representations of `B_n`: construction, derived elements and
//! relation checking.
//!
//! Generators are indexed by `Z_n`. `C_1..C_{n-1}` are the images of the
//! standard generators, `C_0 = T C_{n-1} T^{-1}` with `T = C_1 ... C_{n-1}`,
//! and `A_i = C_i - I`. Matrices act on column vectors.

mod families;
mod irreducible;
mod probes;
mod relations;

use std::ops::Deref;

use thiserror::Error;

use crate::field::{Field, FieldError, Rational};
use crate::linalg::Matrix;

pub use families::{burau, burau_with, chi, direct_sum, tensor, tym_standard, tym_with};
pub use irreducible::{irreducibility, Irreducibility, SPECIALIZATION_POINTS};
pub use probes::{common_eigenlines, orbit_independence, Eigenline, OrbitReport, Window};
pub use relations::{ClauseCheck, RelationCheck, RelationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("need at least 3 strands, got {0}")]
    TooFewStrands(usize),
    #[error("expected {expected} generators, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("generator C_{index} is {rows}x{cols}, expected {expected}x{expected}")]
    Shape { index: usize, rows: usize, cols: usize, expected: usize },
    #[error("generator C_{0} is not invertible")]
    NotInvertible(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("twist must be one-dimensional, got dimension {0}")]
    NotOneDimensional(usize),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("braid relations fail: {}", .0.failures().join("; "))]
    RelationsFailed(Box<RelationReport>),
    #[error("the zero vector does not span a line")]
    ZeroVector,
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("rank(A_i) differs across i: {0:?}")]
    InconsistentCorank(Vec<usize>),
}

/// A candidate representation: invertible generators with the derived
/// elements precomputed. Relations are not yet known to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidRep<F: Field> {
    n: usize,
    r: usize,
    c: Vec<Matrix<F>>,
    a: Vec<Matrix<F>>,
    t: Matrix<F>,
    t_inv: Matrix<F>,
    d: Matrix<F>,
}

impl<F: Field> BraidRep<F> {
    /// `gens` are `C_1..C_{n-1}`.
    pub fn new(n: usize, gens: Vec<Matrix<F>>) -> Result<Self, BraidError> {
        if n < 3 {
            return Err(BraidError::TooFewStrands(n));
        }
        if gens.len() != n - 1 {
            return Err(BraidError::GeneratorCount { expected: n - 1, found: gens.len() });
        }
        let r = gens[0].rows();
        for (k, g) in gens.iter().enumerate() {
            if g.rows() != r || g.cols() != r {
                return Err(BraidError::Shape { index: k + 1, rows: g.rows(), cols: g.cols(), expected: r });
            }
        }
        let mut invs = Vec::with_capacity(n - 1);
        for (k, g) in gens.iter().enumerate() {
            invs.push(g.inverse().ok_or(BraidError::NotInvertible(k + 1))?);
        }
        let t = gens.iter().fold(Matrix::identity(r), |acc, g| acc.mul(g));
        let t_inv = invs.iter().rev().fold(Matrix::identity(r), |acc, g| acc.mul(g));
        let c0 = t.mul(&gens[n - 2]).mul(&t_inv);

        // (σ_{n-1}…σ_1)(σ_{n-1}…σ_2)…(σ_{n-1})
        let mut d = Matrix::identity(r);
        for k in 1..n {
            for i in (k..n).rev() {
                d = d.mul(&gens[i - 1]);
            }
        }

        let mut c = Vec::with_capacity(n);
        c.push(c0);
        c.extend(gens);
        let id = Matrix::identity(r);
        let a = c.iter().map(|ci| ci.sub(&id)).collect();
        Ok(BraidRep { n, r, c, a, t, t_inv, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the representation space.
    pub fn dim(&self) -> usize {
        self.r
    }

    /// `C_i` for `i` in `Z_n` (taken mod `n`).
    pub fn c(&self, i: usize) -> &Matrix<F> {
        &self.c[i % self.n]
    }

    /// `A_i = C_i - I` for `i` in `Z_n`.
    pub fn a(&self, i: usize) -> &Matrix<F> {
        &self.a[i % self.n]
    }

    /// `C_1..C_{n-1}`.
    pub fn generators(&self) -> &[Matrix<F>] {
        &self.c[1..]
    }

    pub fn t(&self) -> &Matrix<F> {
        &self.t
    }

    pub fn t_inv(&self) -> &Matrix<F> {
        &self.t_inv
    }

    /// Image of the positive half-twist.
    pub fn d(&self) -> &Matrix<F> {
        &self.d
    }

    /// `||i - j||` in `Z_n`.
    pub fn dist(&self, i: usize, j: usize) -> usize {
        let m = (i + self.n - j % self.n) % self.n;
        m.min(self.n - m)
    }

    pub fn verify_relations(&self) -> RelationReport {
        relations::verify(self)
    }

    pub fn verify(self) -> Result<VerifiedRep<F>, BraidError> {
        let report = self.verify_relations();
        if report.passes() {
            Ok(VerifiedRep(self))
        } else {
            Err(BraidError::RelationsFailed(Box::new(report)))
        }
    }

    /// Substitute `t = point` in every generator. Poles abort.
    pub fn specialize(&self, point: &Rational) -> Result<BraidRep<Rational>, BraidError> {
        let gens = self.generators().iter().map(|g| g.specialize(point)).collect::<Result<Vec<_>, _>>()?;
        BraidRep::new(self.n, gens)
    }
}

/// A representation whose relations have all been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedRep<F: Field>(BraidRep<F>);

impl<F: Field> Deref for VerifiedRep<F> {
    type Target = BraidRep<F>;
    fn deref(&self) -> &BraidRep<F> {
        &self.0
    }
}

impl<F: Field> VerifiedRep<F> {
    pub fn into_inner(self) -> BraidRep<F> {
        self.0
    }

    /// `rank(A_1)`, checked to agree with every `rank(A_i)`.
    pub fn corank(&self) -> Result<usize, BraidError> {
        let ranks: Vec<usize> = (0..self.n).map(|i| self.a(i).rank()).collect();
        if ranks.iter().all(|&k| k == ranks[1]) {
            Ok(ranks[1])
        } else {
            Err(BraidError::InconsistentCorank(ranks))
        }
    }

    /// Specialization of a verified representation is again one.
    pub fn specialize_verified(&self, point: &Rational) -> Result<VerifiedRep<Rational>, BraidError> {
        self.specialize(point)?.verify()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatFunc, Rational};

    type Q = Rational;

    #[test]
    fn construction_errors() {
        assert_eq!(burau(2, false).unwrap_err(), BraidError::TooFewStrands(2));
        let id = Matrix::<Q>::identity(2);
        assert_eq!(
            BraidRep::new(4, vec![id.clone(), id.clone()]).unwrap_err(),
            BraidError::GeneratorCount { expected: 3, found: 2 }
        );
        let sing = Matrix::<Q>::zeros(2, 2);
        assert_eq!(BraidRep::new(3, vec![id.clone(), sing]).unwrap_err(), BraidError::NotInvertible(2));
        let wide = Matrix::<Q>::zeros(2, 3);
        assert!(matches!(BraidRep::new(3, vec![id, wide]), Err(BraidError::Shape { index: 2, .. })));
    }

    #[test]
    fn burau3_braid_relation_by_hand() {
        let rep = burau(3, false).unwrap();
        let (c1, c2) = (rep.c(1), rep.c(2));
        assert_eq!(c1.mul(c2).mul(c1), c2.mul(c1).mul(c2));
        assert!(rep.verify_relations().passes());
        let t = RatFunc::t();
        assert_eq!(c1.get(0, 0), &RatFunc::one().sub(&t));
        assert_eq!(c1.get(0, 1), &t);
        assert_eq!(c1.get(1, 0), &RatFunc::one());
    }

    #[test]
    fn chi_half_twist() {
        let rep = chi(Q::from_integer(2), 4).unwrap();
        assert_eq!(rep.t().get(0, 0), &Q::from_integer(8));
        assert_eq!(rep.d().get(0, 0), &Q::from_integer(64));
        assert_eq!(rep.t().pow(4), rep.d().pow(2));
        assert_eq!(rep.t().pow(4).get(0, 0), &Q::from_integer(4096));
        assert_eq!(chi(Q::zero(), 4).unwrap_err(), BraidError::ZeroScalar);
    }

    #[test]
    fn perturbed_generator_breaks_triples_at_one() {
        let rep = burau_with(4, false, Q::from_integer(3)).unwrap();
        let mut gens = rep.generators().to_vec();
        let v = gens[0].get(0, 0).add(&Q::one());
        gens[0].set(0, 0, v);
        let bad = BraidRep::new(4, gens).unwrap();
        let report = bad.verify_relations();
        assert!(!report.passes());
        let failing: Vec<usize> =
            report.braid_triples.iter().filter(|c| !c.pass).map(|c| c.indices[0]).collect();
        assert!(failing.contains(&1));
        assert!(matches!(bad.verify(), Err(BraidError::RelationsFailed(_))));
    }

    #[test]
    fn n3_far_commutation_is_vacuous() {
        let report = tym_standard(3).unwrap().verify_relations();
        assert!(report.far_commutation.is_empty());
        assert!(report.passes());
    }

    #[test]
    fn coranks_of_families() {
        let corank = |rep: BraidRep<RatFunc>| rep.verify().unwrap().corank().unwrap();
        assert_eq!(corank(burau(6, true).unwrap()), 1);
        assert_eq!(corank(tym_standard(7).unwrap()), 2);
        assert_eq!(corank(tym_standard(5).unwrap()), 2);
        let tym5_at_1 = tym_standard(5).unwrap().specialize(&Q::one()).unwrap();
        assert_eq!(tym5_at_1.verify().unwrap().corank().unwrap(), 1);
        assert_eq!(chi(Q::from_integer(2), 5).unwrap().verify().unwrap().corank().unwrap(), 1);
        assert_eq!(chi(Q::one(), 5).unwrap().verify().unwrap().corank().unwrap(), 0);
        let b4 = burau(4, true).unwrap().specialize(&Q::one()).unwrap();
        assert_eq!(b4.verify().unwrap().corank().unwrap(), 1);
    }

    #[test]
    fn dist_is_cyclic() {
        let rep = tym_standard(7).unwrap();
        assert_eq!(rep.dist(1, 6), 2);
        assert_eq!(rep.dist(0, 4), 3);
        assert_eq!(rep.dist(3, 3), 0);
    }
}
