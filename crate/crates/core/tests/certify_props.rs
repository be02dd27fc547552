use std::path::PathBuf;

use braidrep_core::braid::{burau, burau_with, chi, direct_sum, tym_standard, tym_with};
use braidrep_core::certify::{
    chain_profile, coprime_witness, corank3_gate, nonexistence_certificate, CertificateStatus,
};
use braidrep_core::field::{Field, Rational};
use num_integer::Integer;
use proptest::prelude::*;

fn golden_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/certificate_{n}.jsonl"))
}

#[test]
fn golden_narratives() {
    for n in [9, 10, 11, 12, 16] {
        let got = nonexistence_certificate(n).to_json_lines();
        let path = golden_path(n);
        if std::env::var_os("BRAIDREP_BLESS").is_some() {
            std::fs::write(&path, &got).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn certificate_regimes() {
    for n in 3..=400 {
        let c = nonexistence_certificate(n);
        let expected = match n {
            ..=9 => CertificateStatus::OutOfRange,
            10 => CertificateStatus::CertifiedSpecialCase,
            _ => CertificateStatus::Certified,
        };
        assert_eq!(c.status, expected, "n = {n}");
        // 2(n+1) > n+12 iff n > 10
        assert_eq!(c.case_ii_generic, n > 10);
        assert_eq!(c.case_ii_n10, n == 10);
        assert_eq!(c, nonexistence_certificate(n));
    }
}

proptest! {
    #[test]
    fn coprime_witness_matches_scan(n in 3usize..5000) {
        let oracle = (2..n).find(|&k| 2 * k < n && n.gcd(&k) == 1);
        prop_assert_eq!(coprime_witness(n), oracle);
        if n >= 7 {
            let k = coprime_witness(n).unwrap();
            prop_assert!(1 < k && 2 * k < n && k.gcd(&n) == 1);
        }
    }

    #[test]
    fn chain_growth_bounded_by_corank(n in 3usize..8, t in -6i64..7, which in 0usize..4, y in 1i64..4) {
        prop_assume!(t != 0 && t != -1);
        let t = Rational::from_integer(t);
        let rep = match which {
            0 => burau_with(n, false, t),
            1 => burau_with(n, true, t),
            2 => tym_with(n, t),
            _ => direct_sum(&tym_with(n, t).unwrap(), &chi(Rational::from_integer(y), n).unwrap()),
        };
        let rep = rep.unwrap().verify().unwrap();
        let p = chain_profile(&rep);
        prop_assert_eq!(p.dims.len(), n - 1);
        prop_assert_eq!(p.dims[0], p.corank);
        prop_assert_eq!(p.corank, rep.corank().unwrap());
        prop_assert!(p.final_dim <= rep.dim());
        for w in p.dims.windows(2) {
            prop_assert!(w[0] <= w[1] && w[1] <= w[0] + p.corank);
        }
    }
}

#[test]
fn gate_passes_on_constructors() {
    for n in 10..=12 {
        for rep in [burau(n, false), burau(n, true), tym_standard(n)] {
            let rep = rep.unwrap().verify().unwrap();
            assert!(!corank3_gate(&rep).is_alarm(), "n = {n}");
        }
        let two = Rational::from_integer(2);
        let tym = tym_with(n, two.clone()).unwrap();
        let sum = direct_sum(&tym, &chi(two.clone(), n).unwrap()).unwrap().verify().unwrap();
        assert_eq!(sum.corank().unwrap(), 3);
        assert!(!corank3_gate(&sum).is_alarm());
        let b = burau_with(n, true, Rational::one().add(&two)).unwrap();
        let sum = direct_sum(
            &b,
            &direct_sum(&chi(two.clone(), n).unwrap(), &chi(two.clone(), n).unwrap()).unwrap(),
        )
        .unwrap()
        .verify()
        .unwrap();
        assert_eq!(sum.corank().unwrap(), 3);
        assert!(!corank3_gate(&sum).is_alarm());
    }
}
