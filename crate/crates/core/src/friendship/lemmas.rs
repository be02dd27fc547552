use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use crate::braid::{irreducibility, Irreducibility, VerifiedRep};
use crate::field::Field;
use crate::linalg::Subspace;

use super::{dist, Analysis, FriendshipError};

/// Lemmas that can be checked mechanically on a concrete representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// `f >= tf`.
    L4_5,
    /// `f(B, C) <= tf(A, B) + tf(A, C)` for `A, B` neighbours, `A, C` not.
    L4_6,
    /// `f` and `tf` are invariant under `i ↦ i + k`.
    L4_7,
    /// `tf(2) = ... = tf(n-2)`.
    L4_12,
    /// `f(1) = 0` forces `f(k) = tf(k)` constant for `k = 2..n-2`.
    L4_13,
    /// Irreducible, `r >= n+1`, `n >= 5`, `3 <= k <= r-1`: `f(j) < k`.
    L4_14,
    /// Three pairwise one-dimensional edges: two equal forces all equal.
    L4_16,
    /// Consecutive `j`-fold image intersections differ.
    L5_1_1,
    /// Corank 3 and `f(1) = 2` for every edge: triple intersections are nonzero.
    L5_1_2,
    /// `x_i` and `x_{i+1}` are independent when every `f(i, i+1) = 1`.
    L5_1_6,
    /// `v_{i,j}` and `v_{i,j+1}` are independent in case II with unit diagonals.
    L5_2_2,
}

pub const ALL_LEMMAS: [LemmaId; 11] = [
    LemmaId::L4_5,
    LemmaId::L4_6,
    LemmaId::L4_7,
    LemmaId::L4_12,
    LemmaId::L4_13,
    LemmaId::L4_14,
    LemmaId::L4_16,
    LemmaId::L5_1_1,
    LemmaId::L5_1_2,
    LemmaId::L5_1_6,
    LemmaId::L5_2_2,
];

impl LemmaId {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::L4_5 => "4.5",
            LemmaId::L4_6 => "4.6",
            LemmaId::L4_7 => "4.7",
            LemmaId::L4_12 => "4.12",
            LemmaId::L4_13 => "4.13",
            LemmaId::L4_14 => "4.14",
            LemmaId::L4_16 => "4.16",
            LemmaId::L5_1_1 => "5.1.1",
            LemmaId::L5_1_2 => "5.1.2",
            LemmaId::L5_1_6 => "5.1.6(1)",
            LemmaId::L5_2_2 => "5.2.2",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = FriendshipError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "5.1.6" {
            return Ok(LemmaId::L5_1_6);
        }
        ALL_LEMMAS
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| FriendshipError::UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub id: LemmaId,
    /// All hypotheses hold.
    pub applicable: bool,
    /// Conclusion holds; `None` when not applicable.
    pub holds: Option<bool>,
    /// First counterexample to the conclusion.
    pub witness: Option<String>,
    /// Hypotheses that failed.
    pub unmet: Vec<String>,
    /// How irreducibility was established, when it is a hypothesis.
    pub caveat: Option<String>,
}

/// Shared inputs for lemma checks. Irreducibility is only computed if a
/// lemma needs it and its cheaper hypotheses already hold.
pub struct LemmaContext<'a, F: Field> {
    rep: &'a VerifiedRep<F>,
    analysis: &'a Analysis<F>,
    assume_irreducible: bool,
    irreducible: OnceCell<Irreducibility>,
    corank: OnceCell<usize>,
}

impl<'a, F: Field> LemmaContext<'a, F> {
    pub fn new(rep: &'a VerifiedRep<F>, analysis: &'a Analysis<F>, assume_irreducible: bool) -> Self {
        LemmaContext {
            rep,
            analysis,
            assume_irreducible,
            irreducible: OnceCell::new(),
            corank: OnceCell::new(),
        }
    }

    pub fn irreducibility(&self) -> &Irreducibility {
        self.irreducible.get_or_init(|| {
            if self.assume_irreducible {
                Irreducibility::Assumed
            } else {
                irreducibility(self.rep)
            }
        })
    }

    fn corank(&self) -> usize {
        *self.corank.get_or_init(|| self.analysis.image(1).dim())
    }
}

/// Accumulates hypotheses, then runs the conclusion only if all hold.
struct Check<'c, 'a, F: Field> {
    ctx: &'c LemmaContext<'a, F>,
    id: LemmaId,
    unmet: Vec<String>,
    caveat: Option<String>,
}

impl<'c, 'a, F: Field> Check<'c, 'a, F> {
    fn new(ctx: &'c LemmaContext<'a, F>, id: LemmaId) -> Self {
        Check { ctx, id, unmet: Vec::new(), caveat: None }
    }

    fn require(mut self, ok: bool, what: impl Into<String>) -> Self {
        if !ok {
            self.unmet.push(what.into());
        }
        self
    }

    fn require_irreducible(mut self) -> Self {
        if self.unmet.is_empty() {
            let irr = self.ctx.irreducibility();
            self.caveat = Some(irr.caveat().to_string());
            if !irr.holds() {
                self.unmet.push("irreducible".to_string());
            }
        } else {
            self.unmet.push("irreducible (not evaluated)".to_string());
        }
        self
    }

    /// `conclusion` returns the first counterexample, if any.
    fn conclude(self, conclusion: impl FnOnce() -> Option<String>) -> LemmaVerdict {
        let applicable = self.unmet.is_empty();
        let witness = if applicable { conclusion() } else { None };
        LemmaVerdict {
            id: self.id,
            applicable,
            holds: applicable.then_some(witness.is_none()),
            witness,
            unmet: self.unmet,
            caveat: self.caveat,
        }
    }
}

/// Intersection of `Im A_i, Im A_{i+1}, ..., Im A_{i+len-1}`.
fn run_intersection<F: Field>(a: &Analysis<F>, i: usize, len: usize) -> Subspace<F> {
    let mut acc = a.image(i).clone();
    for m in 1..len {
        acc = acc.intersect(a.image(i + m)).expect("same ambient");
    }
    acc
}

pub fn check_lemma<F: Field>(ctx: &LemmaContext<'_, F>, id: LemmaId) -> LemmaVerdict {
    let a = ctx.analysis;
    let g = a.graph();
    let n = g.n;
    let r = ctx.rep.dim();
    let pairs = || (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    let neighbours_f = |v: usize| (0..n).all(|i| g.f(i, i + 1) == v);
    let check = Check::new(ctx, id);

    match id {
        LemmaId::L4_5 => check.conclude(|| {
            pairs()
                .find(|&(i, j)| g.f(i, j) < g.tf(i, j))
                .map(|(i, j)| format!("f({i},{j}) = {} < tf = {}", g.f(i, j), g.tf(i, j)))
        }),
        LemmaId::L4_6 => check.conclude(|| {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if x == y || x == z || y == z || dist(n, x, y) != 1 || dist(n, x, z) < 2 {
                            continue;
                        }
                        let bound = g.tf(x, y) + g.tf(x, z);
                        if g.f(y, z) > bound {
                            return Some(format!(
                                "A={x}, B={y}, C={z}: f(B,C) = {} > tf(A,B) + tf(A,C) = {bound}",
                                g.f(y, z)
                            ));
                        }
                    }
                }
            }
            None
        }),
        LemmaId::L4_7 => check.conclude(|| {
            for (i, j) in pairs() {
                for k in 1..n {
                    let (p, q) = ((i + k) % n, (j + k) % n);
                    if g.f(i, j) != g.f(p, q) || g.tf(i, j) != g.tf(p, q) {
                        return Some(format!("({i},{j}) and shift by {k} differ"));
                    }
                }
            }
            None
        }),
        LemmaId::L4_12 => check.conclude(|| {
            (3..=n.saturating_sub(2))
                .find(|&k| g.tf_k(k) != g.tf_k(2))
                .map(|k| format!("tf({k}) = {} but tf(2) = {}", g.tf_k(k), g.tf_k(2)))
        }),
        LemmaId::L4_13 => check.require(neighbours_f(0), "f(1) = 0").conclude(|| {
            if n < 4 {
                return None;
            }
            let v = g.f_k(2);
            (2..=n - 2)
                .find(|&k| g.f_k(k) != v || g.tf_k(k) != v)
                .map(|k| format!("f({k}) = {}, tf({k}) = {}, f(2) = {v}", g.f_k(k), g.tf_k(k)))
        }),
        LemmaId::L4_14 => {
            let k = ctx.corank();
            check
                .require(n >= 5, "n >= 5")
                .require(r > n, "r >= n + 1")
                .require(k >= 3 && k < r, "3 <= corank <= r - 1")
                .require_irreducible()
                .conclude(|| {
                    (1..n).find(|&j| g.f_k(j) >= k).map(|j| format!("f({j}) = {} >= corank {k}", g.f_k(j)))
                })
        }
        LemmaId::L4_16 => check.conclude(|| {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if g.f(i, j) != 1 || g.f(i, k) != 1 || g.f(j, k) != 1 {
                            continue;
                        }
                        let (ij, ik, jk) = (a.intersection(i, j), a.intersection(i, k), a.intersection(j, k));
                        let equal = [ij == ik, ij == jk, ik == jk];
                        if equal.iter().any(|&e| e) && !equal.iter().all(|&e| e) {
                            return Some(format!(
                                "vertices {i}, {j}, {k}: two edges coincide, the third differs"
                            ));
                        }
                    }
                }
            }
            None
        }),
        LemmaId::L5_1_1 => {
            let k = ctx.corank();
            let hyp_js: Vec<usize> = if n >= 5 {
                (2..=n - 3).filter(|&j| !run_intersection(a, 1, j).is_zero()).collect()
            } else {
                Vec::new()
            };
            check
                .require(n >= 5, "n >= 5")
                .require(r > n, "r >= n + 1")
                .require(k >= 3 && k < r, "3 <= corank <= r - 1")
                .require(!hyp_js.is_empty(), "Im A_1 ∩ ... ∩ Im A_j != 0 for some j in 2..n-3")
                .require_irreducible()
                .conclude(|| {
                    for &j in &hyp_js {
                        let runs: Vec<Subspace<F>> = (0..n).map(|i| run_intersection(a, i, j)).collect();
                        if let Some(i) = (0..n).find(|&i| runs[i] == runs[(i + 1) % n]) {
                            return Some(format!(
                                "j = {j}: runs starting at {i} and {} coincide",
                                (i + 1) % n
                            ));
                        }
                    }
                    None
                })
        }
        LemmaId::L5_1_2 => check
            .require(ctx.corank() == 3, "corank = 3")
            .require(neighbours_f(2), "f(i, i+1) = 2 for all i")
            .conclude(|| {
                (0..n)
                    .find(|&i| run_intersection(a, i, 3).is_zero())
                    .map(|i| format!("Im A_{i} ∩ Im A_{} ∩ Im A_{} = 0", (i + 1) % n, (i + 2) % n))
            }),
        LemmaId::L5_1_6 => check
            .require(n >= 5, "n >= 5")
            .require(r > n, "r >= n + 1")
            .require(neighbours_f(1), "f(i, i+1) = 1 for all i")
            .require_irreducible()
            .conclude(|| {
                (0..n)
                    .find(|&i| a.intersection(i, i + 1) == a.intersection(i + 1, i + 2))
                    .map(|i| format!("x_{i} and x_{} are dependent", (i + 1) % n))
            }),
        LemmaId::L5_2_2 => {
            let diagonals_one = pairs().all(|(i, j)| dist(n, i, j) < 2 || g.f(i, j) == 1);
            check
                .require(n >= 5, "n >= 5")
                .require(neighbours_f(0), "f(i, i+1) = 0 for all i")
                .require(diagonals_one, "f(i, j) = 1 for all ||i-j|| >= 2")
                .conclude(|| {
                    for i in 0..n {
                        for j in 0..n {
                            if [n - 2, n - 1, 0, 1].iter().any(|&d| (i + d) % n == j) {
                                continue;
                            }
                            if a.intersection(i, j) == a.intersection(i, j + 1) {
                                return Some(format!(
                                    "v_({i},{j}) and v_({i},{}) are dependent",
                                    (j + 1) % n
                                ));
                            }
                        }
                    }
                    None
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{burau, chi, tym_standard};
    use crate::field::Rational;

    #[test]
    fn parse_ids() {
        for id in ALL_LEMMAS {
            assert_eq!(id.as_str().parse::<LemmaId>().unwrap(), id);
        }
        assert_eq!("5.1.6".parse::<LemmaId>().unwrap(), LemmaId::L5_1_6);
        assert_eq!("9.9".parse::<LemmaId>(), Err(FriendshipError::UnknownLemma("9.9".into())));
    }

    #[test]
    fn trivial_rep_satisfies_4_5() {
        let rep = chi(Rational::one(), 5).unwrap().verify().unwrap();
        let a = Analysis::new(&rep);
        let ctx = LemmaContext::new(&rep, &a, false);
        let v = check_lemma(&ctx, LemmaId::L4_5);
        assert!(v.applicable);
        assert_eq!(v.holds, Some(true));
    }

    #[test]
    fn tym8_satisfies_4_12_by_direct_profile() {
        let rep = tym_standard(8).unwrap().verify().unwrap();
        let a = Analysis::new(&rep);
        let ctx = LemmaContext::new(&rep, &a, false);
        let v = check_lemma(&ctx, LemmaId::L4_12);
        assert_eq!((v.applicable, v.holds), (true, Some(true)));
        // oracle: recompute tf(1, 1+k) for k = 2..6 from the matrices
        let tfs: Vec<usize> = (2..=6).map(|k| rep.a(1).mul(rep.a(1 + k)).rank()).collect();
        assert!(tfs.iter().all(|&x| x == tfs[0]));
    }

    #[test]
    fn burau6_reduced_4_13() {
        let rep = burau(6, true).unwrap().verify().unwrap();
        let a = Analysis::new(&rep);
        let ctx = LemmaContext::new(&rep, &a, false);
        let v = check_lemma(&ctx, LemmaId::L4_13);
        let f1_zero = (0..6).all(|i| a.graph().f(i, i + 1) == 0);
        assert_eq!(v.applicable, f1_zero);
        if v.applicable {
            assert_eq!(v.holds, Some(true));
        }
    }

    #[test]
    fn irreducibility_hypothesis_not_evaluated_when_others_fail() {
        let rep = tym_standard(5).unwrap().verify().unwrap();
        let a = Analysis::new(&rep);
        let ctx = LemmaContext::new(&rep, &a, false);
        let v = check_lemma(&ctx, LemmaId::L4_14);
        assert!(!v.applicable);
        assert_eq!(v.holds, None);
        assert!(v.unmet.iter().any(|u| u.contains("not evaluated")));
        assert!(ctx.irreducible.get().is_none());
    }
}
