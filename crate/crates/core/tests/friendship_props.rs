use braidrep_core::braid::{burau_with, chi, direct_sum, tensor, tym_with, BraidRep};
use braidrep_core::field::Rational;
use braidrep_core::friendship::{dist, Analysis};
use proptest::prelude::*;

type Q = Rational;

fn rep(which: usize, n: usize, t: i64, y: i64) -> BraidRep<Q> {
    let t = Q::from_integer(t);
    let y = Q::from_integer(y);
    match which {
        0 => burau_with(n, false, t),
        1 => burau_with(n, true, t),
        2 => tym_with(n, t),
        3 => direct_sum(&tym_with(n, t.clone()).unwrap(), &chi(y, n).unwrap()),
        4 => direct_sum(&tym_with(n, t.clone()).unwrap(), &burau_with(n, true, t).unwrap()),
        _ => tensor(&chi(y, n).unwrap(), &tym_with(n, t).unwrap()),
    }
    .unwrap()
}

fn params() -> impl Strategy<Value = (usize, usize, i64, i64)> {
    (0usize..6, 3usize..=8, prop::sample::select(vec![-3i64, -2, 2, 3, 5, 7]), 1i64..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn table_invariants((which, n, t, y) in params()) {
        let v = rep(which, n, t, y).verify().unwrap();
        let a = Analysis::new(&v);
        let g = a.graph();
        prop_assert!(g.anomalies().is_empty(), "{:?}", g.anomalies());
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for k in 0..n {
                    prop_assert_eq!(g.f(i, j), g.f(i + k, j + k));
                    prop_assert_eq!(g.tf(i, j), g.tf(i + k, j + k));
                }
                prop_assert!(g.f(i, j) >= g.tf(i, j));
                prop_assert_eq!(g.f(i, j), a.intersection(i, j).dim());
            }
        }
        for k in 1..n {
            prop_assert_eq!(g.f_k(k), g.f_k(n - k));
            prop_assert_eq!(g.tf_k(k), g.tf_k(n - k));
        }
        for k in 2..n.saturating_sub(2) {
            prop_assert_eq!(g.tf_k(k), g.tf_k(2));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if x != y && x != z && y != z && dist(n, x, y) == 1 && dist(n, x, z) >= 2 {
                        prop_assert!(g.f(y, z) <= g.tf(x, y) + g.tf(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn equal_lines_propagate((which, n, t, y) in params()) {
        let v = rep(which, n, t, y).verify().unwrap();
        let a = Analysis::new(&v);
        let g = a.graph();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if g.f(i, j) != 1 || g.f(j, k) != 1 || g.f(i, k) != 1 {
                        continue;
                    }
                    let (x, y, z) = (a.intersection(i, j), a.intersection(j, k), a.intersection(i, k));
                    let equal = [x == y, y == z, x == z];
                    if equal.iter().any(|&e| e) {
                        prop_assert!(equal.iter().all(|&e| e), "({}, {}, {})", i, j, k);
                    }
                }
            }
        }
    }
}
