use crate::field::Field;
use crate::linalg::Matrix;

use super::BraidRep;

/// One instance of a relation, identified by its generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub indices: Vec<usize>,
    pub pass: bool,
}

/// One of the conjugation identities (a)-(f), with every failing index tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    pub clause: char,
    pub statement: &'static str,
    pub failures: Vec<Vec<usize>>,
}

impl ClauseCheck {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    /// `C_i C_j = C_j C_i` for `i < j` in `Z_n` with `||i - j|| >= 2`.
    pub far_commutation: Vec<RelationCheck>,
    /// `C_i C_{i+1} C_i = C_{i+1} C_i C_{i+1}` for `i` in `Z_n`.
    pub braid_triples: Vec<RelationCheck>,
    pub clauses: Vec<ClauseCheck>,
    /// `T^n = D^2`.
    pub tau_delta_central: bool,
}

impl RelationReport {
    pub fn passes(&self) -> bool {
        self.far_commutation.iter().all(|c| c.pass)
            && self.braid_triples.iter().all(|c| c.pass)
            && self.clauses.iter().all(ClauseCheck::pass)
            && self.tau_delta_central
    }

    /// Human-readable description of each failure.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in self.far_commutation.iter().filter(|c| !c.pass) {
            out.push(format!("far commutation fails for ({}, {})", c.indices[0], c.indices[1]));
        }
        for c in self.braid_triples.iter().filter(|c| !c.pass) {
            out.push(format!("braid relation fails at i = {}", c.indices[0]));
        }
        for c in self.clauses.iter().filter(|c| !c.pass()) {
            out.push(format!("clause ({}) {} fails at {:?}", c.clause, c.statement, c.failures));
        }
        if !self.tau_delta_central {
            out.push("T^n != D^2".to_string());
        }
        out
    }
}

pub(super) fn verify<F: Field>(rep: &BraidRep<F>) -> RelationReport {
    let n = rep.n();
    let mut far_commutation = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rep.dist(i, j) >= 2 {
                let pass = rep.c(i).mul(rep.c(j)) == rep.c(j).mul(rep.c(i));
                far_commutation.push(RelationCheck { indices: vec![i, j], pass });
            }
        }
    }
    let braid_triples = (0..n)
        .map(|i| {
            let (x, y) = (rep.c(i), rep.c(i + 1));
            let pass = x.mul(y).mul(x) == y.mul(x).mul(y);
            RelationCheck { indices: vec![i, i + 1], pass }
        })
        .collect();

    let t = rep.t();
    let mut t_pow = vec![Matrix::identity(rep.dim())];
    for m in 1..n {
        t_pow.push(t_pow[m - 1].mul(t));
    }
    let prev = |i: usize, k: usize| (i + n - k % n) % n;

    let mut clauses = Vec::new();
    clauses.push(clause(
        'a',
        "T C_{i-1} = C_i T",
        (0..n).filter(|&i| t.mul(rep.c(prev(i, 1))) != rep.c(i).mul(t)).map(|i| vec![i]),
    ));
    let mut fail_b = Vec::new();
    for i in 0..n {
        for (m, tm) in t_pow.iter().enumerate() {
            if rep.c(i).mul(tm) != tm.mul(rep.c(prev(i, m))) {
                fail_b.push(vec![i, m]);
            }
        }
    }
    clauses.push(clause('b', "C_i T^m = T^m C_{i-m}", fail_b));
    clauses.push(clause(
        'c',
        "T A_i = A_{i+1} T",
        (0..n).filter(|&i| t.mul(rep.a(i)) != rep.a(i + 1).mul(t)).map(|i| vec![i]),
    ));
    let d = rep.d();
    clauses.push(clause(
        'd',
        "D A_i = A_{n-i} D",
        (1..n).filter(|&i| d.mul(rep.a(i)) != rep.a(n - i).mul(d)).map(|i| vec![i]),
    ));
    let mut fail_e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rep.dist(i, j) >= 2 && rep.a(i).mul(rep.a(j)) != rep.a(j).mul(rep.a(i)) {
                fail_e.push(vec![i, j]);
            }
        }
    }
    clauses.push(clause('e', "A_i A_j = A_j A_i for ||i-j|| >= 2", fail_e));
    clauses.push(clause(
        'f',
        "A_i + A_i^2 + A_i A_{i+1} A_i = A_{i+1} + A_{i+1}^2 + A_{i+1} A_i A_{i+1}",
        (0..n).filter_map(|i| {
            let (x, y) = (rep.a(i), rep.a(i + 1));
            let lhs = x.add(&x.mul(x)).add(&x.mul(y).mul(x));
            let rhs = y.add(&y.mul(y)).add(&y.mul(x).mul(y));
            (lhs != rhs).then(|| vec![i])
        }),
    ));

    let tau_delta_central = t_pow[n - 1].mul(t) == d.mul(d);
    RelationReport { far_commutation, braid_triples, clauses, tau_delta_central }
}

fn clause(
    clause: char,
    statement: &'static str,
    failures: impl IntoIterator<Item = Vec<usize>>,
) -> ClauseCheck {
    ClauseCheck { clause, statement, failures: failures.into_iter().collect() }
}
