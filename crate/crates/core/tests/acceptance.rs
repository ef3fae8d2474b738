//! Acceptance suite: every closed form the library asserts, checked against
//! its independent oracle at the stated grid and tolerance (all equalities
//! are exact). One test per criterion; each prints a PASS line on success.

use std::time::{Duration, Instant};

use congruing_core::bernoulli;
use congruing_core::catalog::FieldCatalog;
use congruing_core::congruing::{global_ext1, minimal_congruing, IntegerCasePolicy};
use congruing_core::equivalence::{cross_check_equivalences, Verdict};
use congruing_core::exact::primes::primes_up_to;
use congruing_core::exact::{factor_integer, FactoredInteger};
use congruing_core::lfunction::{
    gd_inverse, gd_transform, hecke_euler, s_transform, DedekindTypeFunction, EulerProduct,
};
use congruing_core::numberfield::{FieldDocument, NumberFieldData, PrimeSplitting, UnramifiedRule};
use congruing_core::verify;
use std::sync::Arc;

fn fi(pairs: &[(u64, u64)]) -> FactoredInteger {
    FactoredInteger::from_pairs(pairs.iter().copied()).unwrap()
}

fn assert_within(elapsed: Duration, budget: Duration, what: &str) {
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, over the {budget:?} budget"
    );
}

#[test]
fn criterion_1_zeta_denominator_identity() {
    let start = Instant::now();
    let zeta = EulerProduct::riemann_zeta();
    for n in (2..=120u64).step_by(2) {
        let denom = bernoulli::zeta_denominator(n).unwrap();
        let s = s_transform(&zeta, n).unwrap();
        let gd = gd_transform(&zeta, n).unwrap();
        assert_eq!(denom, s, "n = {n}");
        assert_eq!(s, gd, "n = {n}");
    }
    for (n, expected) in [(2u64, 12u64), (4, 120), (12, 32760)] {
        assert_eq!(
            bernoulli::zeta_denominator(n).unwrap().value(),
            expected.into()
        );
    }
    assert_within(start.elapsed(), Duration::from_secs(5), "criterion 1");
    println!("criterion 1 (zeta-denominator identity): PASS");
}

#[test]
fn criterion_2_binomial_minimum_lemma() {
    let start = Instant::now();
    let report = verify::binomial_minimum_grid().unwrap();
    assert!(report.all_passed(), "failures: {:?}", report.failures);
    assert_eq!(report.passed, 4 * 10 * 200);
    assert_within(start.elapsed(), Duration::from_secs(30), "criterion 2");
    println!(
        "criterion 2 (binomial-minimum lemma): PASS ({} cells)",
        report.passed
    );
}

#[test]
fn criterion_3_local_valuation_formulas() {
    let start = Instant::now();
    let report = verify::local_valuation_grid().unwrap();
    assert!(report.all_passed(), "failures: {:?}", report.failures);
    assert_within(start.elapsed(), Duration::from_secs(120), "criterion 3");
    println!(
        "criterion 3 (local valuation formulas): PASS ({} cells)",
        report.passed
    );
}

#[test]
fn criterion_4_dvr_structure_lemma() {
    let report = verify::dvr_structure_grid().unwrap();
    assert!(report.all_passed(), "failures: {:?}", report.failures);
    println!(
        "criterion 4 (DVR structure lemma): PASS ({} cells)",
        report.passed
    );
}

#[test]
fn criterion_5_global_equals_transform() {
    let catalog = FieldCatalog::builtin();
    let mut cells = 0u64;
    for name in catalog.names() {
        let field = catalog.get(&name).unwrap();
        let ppr = field.ppr_discriminant().unwrap();
        let gd_product = hecke_euler(&field, &ppr).unwrap();
        let two_disc = {
            let disc = field.polynomial_discriminant().unwrap();
            factor_integer(&(disc.magnitude() * 2u32)).unwrap()
        };
        let s_product = hecke_euler(&field, &two_disc).unwrap();
        for n in 1..=100u64 {
            let with_ppr = global_ext1(&field, n as i64, &ppr).unwrap();
            assert_eq!(
                with_ppr.order,
                gd_transform(&gd_product, n).unwrap(),
                "GD identity fails for {name} at n = {n}"
            );
            let with_2disc = global_ext1(&field, n as i64, &two_disc).unwrap();
            assert_eq!(
                with_2disc.order,
                s_transform(&s_product, n).unwrap(),
                "S identity fails for {name} at n = {n}"
            );
            cells += 2;
        }
    }
    println!("criterion 5 (global = transform): PASS ({cells} identities)");
}

#[test]
fn criterion_6_ppr_discriminant_examples() {
    let catalog = FieldCatalog::builtin();
    let expect = [
        ("q", fi(&[(2, 1)])),
        ("omega3", fi(&[(2, 1), (3, 1)])), // quadratic, 3 ramified
        ("gaussian", fi(&[(2, 1)])),       // quadratic, 3 unramified
        ("sqrt2", fi(&[(2, 1)])),
        ("x5px2", FactoredInteger::one()),
    ];
    for (name, want) in expect {
        let got = catalog.get(name).unwrap().ppr_discriminant().unwrap();
        assert_eq!(got, want, "ppr({name})");
    }
    println!("criterion 6 (ppr-discriminant examples): PASS");
}

#[test]
fn criterion_7_inverse_round_trip() {
    let catalog = FieldCatalog::builtin();
    for name in catalog.names() {
        let field = catalog.get(&name).unwrap();
        let ppr = field.ppr_discriminant().unwrap();
        let product = hecke_euler(&field, &ppr).unwrap();
        let h = DedekindTypeFunction::GdTransformOf {
            product: product.clone(),
            search_bound: 200,
        };
        let primes: Vec<u64> = primes_up_to(100);
        let inverse = gd_inverse(&h, &primes).unwrap();
        for p in primes {
            assert_eq!(
                product.factor_at(p).unwrap(),
                inverse.factor_at(p).unwrap(),
                "round trip fails for {name} at p = {p}"
            );
        }
    }
    println!("criterion 7 (inverse round-trip): PASS");
}

#[test]
fn criterion_8_classical_j_numbers() {
    let catalog = FieldCatalog::builtin();
    let q = catalog.get("q").unwrap();
    let one = FactoredInteger::one();
    let j2 = minimal_congruing(&q, 2, &one, IntegerCasePolicy::Oracle).unwrap();
    assert_eq!(j2.order.value(), 24u32.into());
    let j1 = minimal_congruing(&q, 1, &one, IntegerCasePolicy::Oracle).unwrap();
    assert_eq!(j1.order.value(), 2u32.into());
    println!("criterion 8 (classical j-numbers via oracle path): PASS");
}

fn swapped_gaussian(catalog: &FieldCatalog, prime_bound: u64) -> Arc<NumberFieldData> {
    let gauss = catalog.get("gaussian").unwrap();
    let mut splittings = vec![PrimeSplitting {
        p: 2,
        e: 2,
        f: 1,
        g: 1,
    }];
    for p in primes_up_to(prime_bound).into_iter().skip(1) {
        let s = gauss.split_prime(p).unwrap();
        splittings.push(if s.f == 1 {
            PrimeSplitting {
                p,
                e: 1,
                f: 2,
                g: 1,
            }
        } else {
            s
        });
    }
    Arc::new(
        NumberFieldData::from_document(&FieldDocument {
            name: "gaussian-swapped".into(),
            polynomial: None,
            degree: 2,
            galois: true,
            splittings,
            unramified_rule: UnramifiedRule::None,
        })
        .unwrap(),
    )
}

#[test]
fn criterion_9_equivalence_theorem_instance() {
    let start = Instant::now();
    let catalog = FieldCatalog::builtin();
    let q = catalog.get("q").unwrap();
    let gaussian = catalog.get("gaussian").unwrap();
    let omega3 = catalog.get("omega3").unwrap();
    let sqrt2 = catalog.get("sqrt2").unwrap();
    let x5px2 = catalog.get("x5px2").unwrap();
    let swapped = swapped_gaussian(&catalog, 600);

    let m2 = fi(&[(2, 1)]);
    let m6 = fi(&[(2, 1), (3, 1)]);
    let one = FactoredInteger::one();
    let n_bound = 200;
    let prime_bound = 500;

    let equal_pairs = [
        (&q, &q, &m2),
        (&gaussian, &gaussian, &m2),
        (&x5px2, &x5px2, &one),
    ];
    for (f1, f2, m) in equal_pairs {
        let r = cross_check_equivalences(f1, f2, m, n_bound, prime_bound).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "{}/{}", f1.name, f2.name);
        assert!(
            r.conditions.iter().all(|c| c.equal),
            "conditions disagree for {}/{}: {:?}",
            f1.name,
            f2.name,
            r.conditions
        );
        assert_eq!(r.conditions.len(), 7);
    }

    let distinct_pairs = [
        (&gaussian, &omega3, &m6),
        (&gaussian, &swapped, &m2),
        (&sqrt2, &omega3, &m6),
    ];
    for (f1, f2, m) in distinct_pairs {
        let r = cross_check_equivalences(f1, f2, m, n_bound, prime_bound).unwrap();
        assert_eq!(r.verdict, Verdict::Distinct, "{}/{}", f1.name, f2.name);
        assert!(
            r.conditions.iter().all(|c| !c.equal),
            "conditions disagree for {}/{}: {:?}",
            f1.name,
            f2.name,
            r.conditions
        );
    }
    assert_within(start.elapsed(), Duration::from_secs(120), "criterion 9");
    println!("criterion 9 (equivalence theorem instance): PASS");
}
