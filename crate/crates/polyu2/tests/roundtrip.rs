use polyu2::config::{Cli, RunConfig};
use polyu2::formats::{CoherentDoc, Document, OperatorDoc, RepDoc, SectorReportDoc, VerifyDoc};
use polyu2::{run, Carrier};
use polyu2_core::bargmann::CoherentState;
use polyu2_core::higgs::{build_higgs_ops, build_two_mode};
use polyu2_core::repu2::{build_rep, verify_structure};
use polyu2_core::{HalfInt, KappaVector, Rational, Scalar, VerificationReport};
use clap::Parser;
use proptest::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn reparse<T: Serialize + DeserializeOwned>(value: &T) -> T {
    serde_json::from_str(&serde_json::to_string(value).unwrap()).unwrap()
}

fn run_args<T: DeserializeOwned>(args: &[&str]) -> Document<T> {
    let cli = Cli::try_parse_from(std::iter::once("polyu2").chain(args.iter().copied())).unwrap();
    let out = run(&RunConfig::from_cli(&cli).unwrap()).unwrap();
    serde_json::from_str(&out.body).unwrap()
}

fn operators_round_trip<S: Carrier>(j: HalfInt, kappa: KappaVector<S>) {
    let rep = build_rep(j, &kappa).unwrap();
    for op in rep.operators() {
        let doc = reparse(&OperatorDoc::encode::<S>(op));
        assert_eq!(&doc.decode::<S>().unwrap(), op);
    }
}

#[test]
fn exact_operators_survive_json() {
    let q = |n, d| Rational::from_ratio(n, d);
    for twice_j in 0..=7 {
        operators_round_trip(HalfInt::from_twice(twice_j), KappaVector::new(vec![q(1, 3), q(-1, 5)]));
    }
}

#[test]
fn float_operators_survive_json() {
    for twice_j in 0..=7 {
        operators_round_trip(HalfInt::from_twice(twice_j), KappaVector::new(vec![0.3, 1.0 / 7.0]));
    }
}

#[test]
fn two_mode_operators_survive_json() {
    let space = build_two_mode(Rational::from_ratio(-1, 3), 4).unwrap();
    let ops = build_higgs_ops(&space);
    for op in [&ops.jplus, &ops.jminus, &ops.j3, &ops.j0] {
        let doc = reparse(&OperatorDoc::encode::<Rational>(op));
        assert_eq!(&doc.decode::<Rational>().unwrap(), op);
    }
}

#[test]
fn reports_survive_json() {
    let rep = build_rep(HalfInt::from_twice(5), &KappaVector::new(vec![0.5, -0.2])).unwrap();
    let report = verify_structure(&rep);
    let doc: Document<VerifyDoc> = run_args(&["verify", "--j", "5/2", "--kappa", "1/2,-1/5", "--mode", "float"]);
    let back = VerificationReport::try_from(&doc.results[0].report).unwrap();
    assert_eq!(back, report);
}

#[test]
fn documents_reparse_to_equal_values() {
    let rep: Document<RepDoc> = run_args(&["rep", "--j", "0..3", "--kappa", "1/2", "--kappa", "-1/3,1"]);
    assert_eq!(reparse(&rep), rep);
    let higgs: Document<SectorReportDoc> = run_args(&["higgs", "--kappa", "1", "--kappa", "0", "--cap", "4"]);
    assert_eq!(reparse(&higgs), higgs);
    let coherent: Document<CoherentDoc> =
        run_args(&["coherent", "--j", "0..2", "--kappa", "1/3", "--z", "1/2,-2"]);
    assert_eq!(reparse(&coherent), coherent);
}

#[test]
fn coherent_states_decode() {
    let q = |n, d| Rational::from_ratio(n, d);
    let state = CoherentState::new(HalfInt::from_twice(6), q(1, 3), q(2, 3), q(-1, 2)).unwrap();
    let doc = reparse(&CoherentDoc::encode(&state));
    assert_eq!(doc.decode::<Rational>().unwrap(), state);
    let state = CoherentState::new(HalfInt::from_twice(5), 0.5, 0.25, 1.5).unwrap();
    assert_eq!(reparse(&CoherentDoc::encode(&state)).decode::<f64>().unwrap(), state);
}

proptest! {
    #[test]
    fn float_text_is_lossless(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
        prop_assert_eq!(f64::parse_value(&x.to_text()), Ok(x));
    }

    #[test]
    fn rational_text_is_lossless(n in -10_000i64..10_000, d in 1i64..10_000) {
        let x = Rational::from_ratio(n, d);
        prop_assert_eq!(Rational::parse_value(&x.to_text()), Ok(x));
    }
}
