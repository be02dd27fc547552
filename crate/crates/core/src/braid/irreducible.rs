use crate::field::{Field, FieldTag, Rational};
use crate::linalg::{algebra_closure_dim, ClosureStatus};

use super::BraidRep;

/// Points tried, in order, when a `Q(t)` representation is specialized for
/// the closure test.
pub const SPECIALIZATION_POINTS: [i64; 6] = [2, 3, 5, 7, 11, -2];

/// Evidence about absolute irreducibility from the generated matrix algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    /// The algebra has dimension `r^2` at `point` (for `Q`, `point` is
    /// irrelevant and reported as 0). Full dimension at one point implies
    /// full dimension generically.
    Certified { point: Rational },
    /// The algebra stays below `r^2` at every point tried. Over `Q` this
    /// proves the representation is not absolutely irreducible; over `Q(t)`
    /// it is only evidence.
    NotCertified { best_dim: usize, points: Vec<Rational> },
    /// Irreducibility was supplied by the caller, not computed.
    Assumed,
}

impl Irreducibility {
    /// Whether the hypothesis "irreducible" may be used.
    pub fn holds(&self) -> bool {
        !matches!(self, Irreducibility::NotCertified { .. })
    }

    pub fn caveat(&self) -> &'static str {
        match self {
            Irreducibility::Certified { .. } => {
                "irreducibility certified as algebra closure = r^2 at a specialization"
            }
            Irreducibility::NotCertified { .. } => "algebra closure below r^2 at every tried specialization",
            Irreducibility::Assumed => "irreducibility assumed by the caller, not checked",
        }
    }
}

/// Closure dimension test at exact specializations.
pub fn irreducibility<F: Field>(rep: &BraidRep<F>) -> Irreducibility {
    let r = rep.dim();
    let points: Vec<Rational> = match F::TAG {
        FieldTag::Rational => vec![Rational::zero()],
        FieldTag::RatFunc => SPECIALIZATION_POINTS.iter().map(|&p| Rational::from_integer(p)).collect(),
    };
    let mut best_dim = 0;
    let mut tried = Vec::new();
    for p in points {
        let Ok(spec) = rep.specialize(&p) else { continue };
        let closure = algebra_closure_dim(spec.generators(), r, None);
        if closure.status == ClosureStatus::ReachedCap {
            return Irreducibility::Certified { point: p };
        }
        best_dim = best_dim.max(closure.dim);
        tried.push(p);
    }
    Irreducibility::NotCertified { best_dim, points: tried }
}
