//! Friendship graphs: `f(i, j) = dim(Im A_i ∩ Im A_j)` and the "true
//! friendship" `tf`, their distance profiles, the case classification and a
//! catalog of checkable lemmas.

mod lemmas;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::braid::{BraidRep, VerifiedRep};
use crate::field::Field;
use crate::linalg::Subspace;

pub use lemmas::{check_lemma, LemmaContext, LemmaId, LemmaVerdict, ALL_LEMMAS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriendshipError {
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
}

/// Shape of the friendship graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    /// No two vertices are friends.
    Disconnected,
    /// `f(1) >= 1`.
    CaseI,
    /// `f(1) = 0` and `f(k) >= 1` for `k = 2..n-2`.
    CaseII,
    /// None of the above.
    Mixed,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Disconnected => "disconnected",
            Classification::CaseI => "case_I",
            Classification::CaseII => "case_II",
            Classification::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `dim Im(A_i A_j)` for non-neighbours, `dim Im(A + A^2 + A B A)` with
/// `A = A_i`, `B = A_j` for neighbours.
fn tf_raw<F: Field>(rep: &BraidRep<F>, i: usize, j: usize) -> usize {
    let (a, b) = (rep.a(i), rep.a(j));
    if rep.dist(i, j) == 1 {
        a.add(&a.mul(a)).add(&a.mul(b).mul(a)).rank()
    } else {
        a.mul(b).rank()
    }
}

fn distinct(rep: &BraidRep<impl Field>, i: usize, j: usize) -> Result<(usize, usize), FriendshipError> {
    let (i, j) = (i % rep.n(), j % rep.n());
    if i == j {
        Err(FriendshipError::SameVertex(i))
    } else {
        Ok((i, j))
    }
}

pub fn f_pair<F: Field>(rep: &VerifiedRep<F>, i: usize, j: usize) -> Result<usize, FriendshipError> {
    let (i, j) = distinct(rep, i, j)?;
    Ok(rep.a(i).image().intersect(&rep.a(j).image()).expect("same ambient").dim())
}

pub fn tf_pair<F: Field>(rep: &VerifiedRep<F>, i: usize, j: usize) -> Result<usize, FriendshipError> {
    let (i, j) = distinct(rep, i, j)?;
    Ok(tf_raw(rep, i, j))
}

/// All images and pairwise intersections of a representation, computed once.
#[derive(Debug, Clone)]
pub struct Analysis<F: Field> {
    n: usize,
    images: Vec<Subspace<F>>,
    /// Keyed by `(i, j)` with `i < j`.
    intersections: BTreeMap<(usize, usize), Subspace<F>>,
    graph: FriendshipGraph,
}

impl<F: Field> Analysis<F> {
    pub fn new(rep: &VerifiedRep<F>) -> Self {
        let n = rep.n();
        let images: Vec<Subspace<F>> = (0..n).into_par_iter().map(|i| rep.a(i).image()).collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let computed: Vec<((usize, usize), Subspace<F>, usize)> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let inter = images[i].intersect(&images[j]).expect("same ambient");
                ((i, j), inter, tf_raw(rep, i, j))
            })
            .collect();

        let mut f = vec![vec![None; n]; n];
        let mut tf = vec![vec![None; n]; n];
        let mut intersections = BTreeMap::new();
        for ((i, j), inter, t) in computed {
            f[i][j] = Some(inter.dim());
            f[j][i] = Some(inter.dim());
            tf[i][j] = Some(t);
            tf[j][i] = Some(t);
            intersections.insert((i, j), inter);
        }
        let graph = FriendshipGraph::from_tables(n, f, tf);
        Analysis { n, images, intersections, graph }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn image(&self, i: usize) -> &Subspace<F> {
        &self.images[i % self.n]
    }

    /// `Im A_i ∩ Im A_j` for `i != j`.
    pub fn intersection(&self, i: usize, j: usize) -> &Subspace<F> {
        let (i, j) = (i % self.n, j % self.n);
        assert_ne!(i, j, "intersection of a vertex with itself");
        &self.intersections[&(i.min(j), i.max(j))]
    }

    pub fn graph(&self) -> &FriendshipGraph {
        &self.graph
    }

    /// Canonical representatives `v_{i,j}` of the one-dimensional
    /// intersections between non-neighbours.
    pub fn diagonals(&self) -> DiagonalSet<F> {
        let mut map = BTreeMap::new();
        for (&(i, j), inter) in &self.intersections {
            if dist(self.n, i, j) >= 2 && inter.dim() == 1 {
                map.insert((i, j), inter.basis().row(0).to_vec());
            }
        }
        DiagonalSet { map }
    }
}

/// `||i - j||` in `Z_n`.
pub fn dist(n: usize, i: usize, j: usize) -> usize {
    let m = (i % n + n - j % n) % n;
    m.min(n - m)
}

/// Diagonal representatives, keyed by `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSet<F> {
    map: BTreeMap<(usize, usize), Vec<F>>,
}

impl<F: Field> DiagonalSet<F> {
    /// `v_{i,j} = v_{j,i}`.
    pub fn get(&self, i: usize, j: usize) -> Option<&Vec<F>> {
        self.map.get(&(i.min(j), i.max(j)))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<F>)> {
        self.map.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriendshipGraph {
    pub n: usize,
    /// Symmetric, `None` on the diagonal.
    pub f: Vec<Vec<Option<usize>>>,
    pub tf: Vec<Vec<Option<usize>>>,
    /// `f(k) = f(1, 1 + k)` for `k = 1..n-1` (index `k - 1`).
    pub f_of_k: Vec<usize>,
    pub tf_of_k: Vec<usize>,
    pub classification: Classification,
}

impl FriendshipGraph {
    fn from_tables(n: usize, f: Vec<Vec<Option<usize>>>, tf: Vec<Vec<Option<usize>>>) -> Self {
        let profile = |t: &Vec<Vec<Option<usize>>>| -> Vec<usize> {
            (1..n).map(|k| t[1][(1 + k) % n].expect("off-diagonal")).collect()
        };
        let f_of_k = profile(&f);
        let tf_of_k = profile(&tf);
        let all_zero = f.iter().flatten().all(|v| v.unwrap_or(0) == 0);
        let classification = if all_zero {
            Classification::Disconnected
        } else if f_of_k[0] >= 1 {
            Classification::CaseI
        } else if (2..=n - 2).all(|k| f_of_k[k - 1] >= 1) {
            Classification::CaseII
        } else {
            Classification::Mixed
        };
        FriendshipGraph { n, f, tf, f_of_k, tf_of_k, classification }
    }

    pub fn f(&self, i: usize, j: usize) -> usize {
        self.f[i % self.n][j % self.n].expect("distinct vertices")
    }

    pub fn tf(&self, i: usize, j: usize) -> usize {
        self.tf[i % self.n][j % self.n].expect("distinct vertices")
    }

    /// `f(k)` for `1 <= k <= n - 1`.
    pub fn f_k(&self, k: usize) -> usize {
        self.f_of_k[k - 1]
    }

    pub fn tf_k(&self, k: usize) -> usize {
        self.tf_of_k[k - 1]
    }

    /// Edges `(i, j, f, tf)` with `i < j` and `f >= 1`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let f = self.f(i, j);
                if f >= 1 {
                    out.push((i, j, f, self.tf(i, j)));
                }
            }
        }
        out
    }

    /// Violations of properties every representation has: symmetry,
    /// `f >= tf`, dependence on `||i - j||` only, and a non-mixed shape.
    /// Nonempty output means the input is not a representation (or a bug).
    pub fn anomalies(&self) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.f[i][j] != self.f[j][i] || self.tf[i][j] != self.tf[j][i] {
                    out.push(format!("asymmetric tables at ({i}, {j})"));
                }
                if self.f(i, j) < self.tf(i, j) {
                    out.push(format!("f < tf at ({i}, {j})"));
                }
                let k = (j + n - i) % n;
                if self.f(i, j) != self.f_k(k) || self.tf(i, j) != self.tf_k(k) {
                    out.push(format!("({i}, {j}) differs from the distance-{k} profile"));
                }
            }
        }
        if self.classification == Classification::Mixed {
            out.push("friendship graph fits none of the three shapes".to_string());
        }
        out
    }
}
