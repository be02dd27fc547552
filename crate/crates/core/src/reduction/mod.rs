//! Scalar twists `χ(y^{-1}) ⊗ ρ` that minimize the corank.
//!
//! For `y != 0`, the twisted generators are `y^{-1} C_i`, so the corank of the
//! twist is `rank(y^{-1} C_1 - I) = rank(C_1 - y I)`. Only eigenvalues of
//! `C_1` can lower the corank below `r`, so the search runs over the
//! eigenvalues of `C_1` that lie in the field.

use rayon::prelude::*;
use thiserror::Error;

use crate::braid::{chi, tensor, BraidError, Irreducibility, VerifiedRep};
use crate::field::Field;
use crate::linalg::eigenvalues_in_field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("twist scalar must be nonzero")]
    ZeroScalar,
    #[error("C_1 has no eigenvalue in the field")]
    NoCandidates,
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// `corank_after` against `r - n + 2`, meaningful when `r >= n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCheck {
    Within { bound: usize },
    Exceeds { bound: usize },
    OutOfRegime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome<F: Field> {
    pub y: F,
    /// `χ(y^{-1}) ⊗ ρ`.
    pub reduced: VerifiedRep<F>,
    pub corank_before: usize,
    pub corank_after: usize,
    pub bound_check: BoundCheck,
}

/// Eigenvalues of `C_1` in the field, without repeats, in root-finder order.
pub fn candidate_scalars<F: Field>(rep: &VerifiedRep<F>) -> Vec<F> {
    let mut out: Vec<F> = Vec::new();
    for y in eigenvalues_in_field(rep.c(1)) {
        if !y.is_zero() && !out.contains(&y) {
            out.push(y);
        }
    }
    out
}

pub fn reduce<F: Field>(rep: &VerifiedRep<F>, y: &F) -> Result<ReductionOutcome<F>, ReductionError> {
    let y_inv = y.inv().map_err(|_| ReductionError::ZeroScalar)?;
    let twist = chi(y_inv, rep.n())?;
    let reduced = tensor(&twist, rep)?.verify()?;
    let corank_before = rep.corank()?;
    let corank_after = reduced.corank()?;
    let (n, r) = (rep.n(), rep.dim());
    let bound_check = if r > n {
        let bound = r + 2 - n;
        if corank_after <= bound {
            BoundCheck::Within { bound }
        } else {
            BoundCheck::Exceeds { bound }
        }
    } else {
        BoundCheck::OutOfRegime
    };
    Ok(ReductionOutcome { y: y.clone(), reduced, corank_before, corank_after, bound_check })
}

/// Minimal-corank twist over the field-rational candidates. Ties prefer
/// `y = 1`, then the earlier candidate.
pub fn best_reduction<F: Field>(rep: &VerifiedRep<F>) -> Result<ReductionOutcome<F>, ReductionError> {
    let candidates = candidate_scalars(rep);
    if candidates.is_empty() {
        return Err(ReductionError::NoCandidates);
    }
    let outcomes = candidates.par_iter().map(|y| reduce(rep, y)).collect::<Result<Vec<_>, _>>()?;
    let best = outcomes
        .into_iter()
        .enumerate()
        .min_by_key(|(idx, o)| (o.corank_after, !o.y.is_one(), *idx))
        .map(|(_, o)| o)
        .expect("nonempty");
    Ok(best)
}

/// One hypothesis of the reduction theorem and whether it holds here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
}

/// The theorem's hypotheses (`n >= 10`, `n + 1 <= r <= 2n - 9`,
/// irreducibility) evaluated on `rep`.
pub fn reduction_hypotheses<F: Field>(rep: &VerifiedRep<F>, irr: &Irreducibility) -> Vec<Hypothesis> {
    let (n, r) = (rep.n(), rep.dim());
    vec![
        Hypothesis { name: "n >= 10", holds: n >= 10 },
        Hypothesis { name: "n + 1 <= r <= 2n - 9", holds: r > n && r + 9 <= 2 * n },
        Hypothesis { name: "irreducible", holds: irr.holds() },
    ]
}
