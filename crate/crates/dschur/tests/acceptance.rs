//! Acceptance suite: one test per criterion, each printing a pass line.
//! Exact identities throughout; the randomized suites run at their full
//! case counts and share one computation via OnceLock.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use dschur::braid::{parse_braid, BraidWord};
use dschur::coeff::{qint, Beta, LaurentPoly2, RationalFn, ShiftedInt};
use dschur::invariants::{alexander, homfly_framed, reduced_homfly, sl_invariant, Variables};
use dschur::oracle::{burau_alexander, calibrate, hecke_homfly};
use dschur::selftest::{suite_markov, suite_relations, table_braids, Budget, Check};
use dschur::Params;

const SEED: u64 = 20260808;

fn markov_checks() -> &'static (Vec<Check>, Duration) {
    static CHECKS: OnceLock<(Vec<Check>, Duration)> = OnceLock::new();
    CHECKS.get_or_init(|| {
        let t0 = Instant::now();
        let checks = suite_markov(SEED, &Budget::full());
        (checks, t0.elapsed())
    })
}

fn relations_checks() -> &'static Vec<Check> {
    static CHECKS: OnceLock<Vec<Check>> = OnceLock::new();
    CHECKS.get_or_init(|| suite_relations(SEED, &Budget::full(), false))
}

fn assert_check(checks: &[Check], name: &str) {
    let c = checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("missing check {name}"));
    assert!(c.ok, "{name} failed: {}", c.detail);
}

#[test]
fn criterion_01_unknot_circle_value() {
    let t0 = Instant::now();
    let v = homfly_framed(&BraidWord::empty(1), &Params::default()).unwrap();
    let expect = qint(ShiftedInt::beta(), Beta::Generic);
    assert_eq!(
        v.value, expect,
        "framed unknot must be (Q - Q^-1)/(q - q^-1)"
    );
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 (unknot circle value, < 1 s): PASS ({elapsed:?})");
}

#[test]
fn criterion_02_crossing_inverses_and_r3() {
    let (checks, elapsed) = markov_checks();
    assert_check(checks, "crossing-inverses");
    assert_check(checks, "r3");
    assert!(
        *elapsed < Duration::from_secs(300),
        "markov suite took {elapsed:?}, over the 5 min budget"
    );
    println!("criterion 2 (crossing inverses + R3, >= 200 cases, < 5 min): PASS");
}

#[test]
fn criterion_03_markov_one() {
    let (checks, _) = markov_checks();
    assert_check(checks, "markov1");
    println!("criterion 3 (Markov I, >= 100 conjugation pairs): PASS");
}

#[test]
fn criterion_04_markov_two() {
    let (checks, _) = markov_checks();
    assert_check(checks, "markov2");
    println!("criterion 4 (Markov II scales by q^(-+beta), >= 50 cases): PASS");
}

#[test]
fn criterion_05_skein() {
    let (checks, _) = markov_checks();
    assert_check(checks, "skein");
    println!("criterion 5 (skein P+ - P- = (q^-1 - q) P0, >= 50 sites): PASS");
}

#[test]
fn criterion_06_oracle_match() {
    let params = Params::default();
    let map = calibrate(&params).expect("calibration succeeds");
    for (name, b) in table_braids() {
        let t0 = Instant::now();
        let pipeline = reduced_homfly(&b, &params)
            .unwrap_or_else(|e| panic!("{name}: {e}"))
            .value;
        let oracle = map.apply(&hecke_homfly(&b));
        assert_eq!(pipeline, oracle, "oracle mismatch on {name}");
        let elapsed = t0.elapsed();
        assert!(elapsed < Duration::from_secs(60), "{name} took {elapsed:?}");
    }
    println!("criterion 6 (calibrated reduced Homfly-Pt = Hecke-Ocneanu oracle on the table, < 60 s/link): PASS");
}

#[test]
fn criterion_07_alexander() {
    let params = Params::default();
    for (name, b) in table_braids() {
        // route agreement (beta=0 direct vs Q -> 1) is enforced inside
        let ours = alexander(&b, &params).unwrap_or_else(|e| panic!("{name}: {e}"));
        let oracle = burau_alexander(&b).unwrap_or_else(|e| panic!("{name}: {e}"));
        if b.components() == 1 {
            assert_eq!(ours.variables, Variables::T, "{name} should normalize");
            assert!(ours.unit_normalized, "{name} should reach Delta(1) = 1");
            // Delta(t) = Delta(t^-1): the normalized support is palindromic
            let p = ours.value.as_poly().unwrap();
            let mirrored =
                LaurentPoly2::from_terms(p.terms().map(|(e, ecq, c)| (-e, ecq, c.clone())));
            assert_eq!(&mirrored, p, "{name}: Delta not symmetric");
            assert_eq!(
                ours.value,
                RationalFn::from_poly(oracle.value.clone()),
                "Burau mismatch on {name}"
            );
        } else {
            // links: agreement up to a +-q^j unit
            let oracle_q = RationalFn::from_poly(LaurentPoly2::from_terms(
                oracle.value.terms().map(|(e, _, c)| (-2 * e, 0, c.clone())),
            ));
            if ours.value.is_zero() || oracle_q.is_zero() {
                assert!(ours.value.is_zero() && oracle_q.is_zero(), "{name}");
            } else {
                let ratio = ours.value.div(&oracle_q).unwrap();
                let p = ratio
                    .as_poly()
                    .cloned()
                    .unwrap_or_else(|| panic!("{name}: ratio {ratio} is not a unit"));
                assert_eq!(p.nterms(), 1, "{name}: ratio {ratio} is not a unit");
                let (_, ecq, c) = p.terms().next().map(|(a, b, c)| (a, b, c.clone())).unwrap();
                assert_eq!(ecq, 0, "{name}");
                assert!(
                    c == 1.into() || c == (-1).into(),
                    "{name}: unit coefficient {c}"
                );
            }
        }
    }
    // frozen classical fixtures
    let t_poly = |terms: &[(i64, i64)]| {
        RationalFn::from_poly(LaurentPoly2::from_terms(
            terms.iter().map(|&(e, c)| (e, 0, c.into())),
        ))
    };
    let tre = alexander(&parse_braid("s1 s1 s1").unwrap(), &params).unwrap();
    assert_eq!(tre.value, t_poly(&[(-1, 1), (0, -1), (1, 1)]));
    let f8 = alexander(&parse_braid("s1 s2^-1 s1 s2^-1").unwrap(), &params).unwrap();
    assert_eq!(f8.value, t_poly(&[(-1, -1), (0, 3), (1, -1)]));
    println!(
        "criterion 7 (Alexander: beta=0 = Q->1 = Burau; trefoil and figure-eight fixtures): PASS"
    );
}

#[test]
fn criterion_08_sl_m_consistency() {
    let params = Params::default();
    for (name, b) in table_braids() {
        for m in [2i64, 3] {
            // the route-agreement trap inside sl_invariant is the criterion:
            // truncated evaluation must equal Q -> q^m substitution exactly
            sl_invariant(&b, m, &params).unwrap_or_else(|e| panic!("{name} m={m}: {e}"));
        }
    }
    println!("criterion 8 (sl_m truncated = substituted for m in {{2,3}}, truncation-active cases included): PASS");
}

#[test]
fn criterion_09_relation_suites() {
    let checks = relations_checks();
    for name in [
        "pascal",
        "alternating-sum",
        "negative-top",
        "roundtrip-convolution",
        "serre-probe",
    ] {
        assert_check(checks, name);
    }
    println!("criterion 9 (Pascal, alternating-sum, negative-top, round-trip convolution, higher-Serre probing): PASS");
}

#[test]
fn criterion_10_rotation_and_padding() {
    let (checks, _) = markov_checks();
    assert_check(checks, "rotation-padding-invariance");
    println!("criterion 10 (rotation and padding invariance of all closed evaluations): PASS");
}

#[test]
fn criterion_11_determinism_confluence() {
    let (checks, _) = markov_checks();
    assert_check(checks, "confluence-determinism");
    println!("criterion 11 (>= 50 rewrite-order seeds and parallel runs bit-identical on the table): PASS");
}
