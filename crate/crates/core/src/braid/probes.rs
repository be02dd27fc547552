use crate::field::Field;
use crate::linalg::{eigenvalues_in_field, Matrix, Subspace};

use super::{BraidError, BraidRep};

/// A family of lines stable under `<σ_1..σ_{n-3}> × <σ_{n-1}>`: every
/// nonzero `v` in `space` has `C_i v = y v` for `i <= n-3` and
/// `C_{n-1} v = x v`. `y` is `None` for `n = 3`, where the first factor is
/// trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenline<F: Field> {
    pub y: Option<F>,
    pub x: F,
    pub space: Subspace<F>,
}

impl<F: Field> Eigenline<F> {
    /// Canonical representative: the first basis row of `space`.
    pub fn v(&self) -> Vec<F> {
        self.space.basis().row(0).to_vec()
    }
}

/// All common eigenline families with eigenvalues in the field.
///
/// A line stable under two adjacent generators has the same eigenvalue for
/// both (the braid relation gives `y_1^2 y_2 = y_1 y_2^2`), so intersecting
/// the `y`-eigenspaces of `C_1..C_{n-3}` already enforces invariance under
/// that whole factor.
pub fn common_eigenlines<F: Field>(rep: &BraidRep<F>) -> Vec<Eigenline<F>> {
    let n = rep.n();
    let r = rep.dim();
    let last = rep.c(n - 1);
    let xs = eigenvalues_in_field(last);
    let ys: Vec<Option<F>> =
        if n >= 4 { eigenvalues_in_field(rep.c(1)).into_iter().map(Some).collect() } else { vec![None] };
    let mut out = Vec::new();
    for y in ys {
        let mut base = Subspace::full(r);
        if let Some(y) = &y {
            for i in 1..=n - 3 {
                base = base.intersect(&rep.c(i).sub_scalar(y).kernel()).expect("same ambient");
                if base.is_zero() {
                    break;
                }
            }
        }
        if base.is_zero() {
            continue;
        }
        for x in &xs {
            let space = base.intersect(&last.sub_scalar(x).kernel()).expect("same ambient");
            if !space.is_zero() {
                out.push(Eigenline { y: y.clone(), x: x.clone(), space });
            }
        }
    }
    out
}

/// Rank check on one cyclic window `T^s v, ..., T^{s+n-3} v` (exponents mod `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub start: usize,
    pub independent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport<F: Field> {
    /// Line invariant under `<σ_1..σ_{n-3}> × <σ_{n-1}>` and `r >= n + 1`.
    pub applicable: bool,
    pub reason: Option<String>,
    /// Eigenvalues on the line when it is invariant.
    pub y: Option<F>,
    pub x: Option<F>,
    /// Rank of the rows `v, Tv, ..., T^{n-3} v`.
    pub rank: usize,
    /// `Some(rank == n - 2)` when applicable.
    pub holds: Option<bool>,
    /// Coefficients `c_k` with `sum c_k T^k v = 0`, when dependent.
    pub dependency: Option<Vec<F>>,
    pub windows: Vec<Window>,
}

/// Eigenvalue of `m` on `v` if `m v` is a multiple of `v` (`v != 0`).
fn eigenvalue_on<F: Field>(m: &Matrix<F>, v: &[F]) -> Option<F> {
    let mv = m.mul_vec(v);
    let p = v.iter().position(|x| !x.is_zero())?;
    let lambda = mv[p].div(&v[p]).ok()?;
    mv.iter().zip(v).all(|(a, b)| *a == b.mul(&lambda)).then_some(lambda)
}

/// Linear independence of `v, Tv, ..., T^{n-3} v` for a line `span{v}`.
pub fn orbit_independence<F: Field>(rep: &BraidRep<F>, v: &[F]) -> Result<OrbitReport<F>, BraidError> {
    let (n, r) = (rep.n(), rep.dim());
    if v.len() != r {
        return Err(BraidError::VectorLength { expected: r, found: v.len() });
    }
    if v.iter().all(F::is_zero) {
        return Err(BraidError::ZeroVector);
    }

    let mut reason = None;
    let y = if n >= 4 {
        let ys: Option<Vec<F>> = (1..=n - 3).map(|i| eigenvalue_on(rep.c(i), v)).collect();
        match ys {
            Some(ys) if ys.iter().all(|y| *y == ys[0]) => Some(ys[0].clone()),
            _ => {
                reason = Some("span{v} is not invariant under C_1..C_{n-3}".to_string());
                None
            }
        }
    } else {
        None
    };
    let x = eigenvalue_on(rep.c(n - 1), v);
    if x.is_none() && reason.is_none() {
        reason = Some("span{v} is not invariant under C_{n-1}".to_string());
    }
    if reason.is_none() && r < n + 1 {
        reason = Some(format!("dimension {r} is below n + 1 = {}", n + 1));
    }
    let applicable = reason.is_none();

    let mut orbit = vec![v.to_vec()];
    for k in 1..n {
        let next = rep.t().mul_vec(&orbit[k - 1]);
        orbit.push(next);
    }
    let len = n - 2;
    let rows_of = |start: usize| -> Matrix<F> {
        let rows = (0..len).map(|k| orbit[(start + k) % n].clone()).collect();
        Matrix::from_rows(rows).expect("orbit vectors share a length")
    };
    let head = rows_of(0);
    let rank = head.rank();
    let dependency = (rank < len).then(|| head.transpose().kernel().basis().row(0).to_vec());
    let windows = (0..n).map(|start| Window { start, independent: rows_of(start).rank() == len }).collect();

    Ok(OrbitReport {
        applicable,
        reason,
        y,
        x,
        rank,
        holds: applicable.then_some(rank == len),
        dependency,
        windows,
    })
}
