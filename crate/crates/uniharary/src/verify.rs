//! Exhaustive extremal scans over all unicyclic isomorphism classes and the
//! structured bound checks built on them.

use crate::canon::{canonical_certificate, CanonicalCertificate};
use crate::enumerate::{enumerate_unicyclic, EnumerateError};
use crate::family::{make_cp, make_cs, make_cycle};
use crate::graph::Graph;
use crate::indices::{additively_weighted_harary, cp3_closed_form, cs3_closed_form};
use crate::rational::Rational;

/// Known class counts for small `n`, cross-checked against an independent
/// exhaustive enumeration in the test suite.
pub const KNOWN_CLASS_COUNTS: [(usize, usize); 7] =
    [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33), (8, 89), (9, 240)];

/// One extremal-value witness: its isomorphism class and the canonical
/// representative graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attainer {
    pub certificate: CanonicalCertificate,
    pub graph: Graph,
}

/// Result of scanning every isomorphism class on `n` vertices.
///
/// Attainer lists carry every class reaching the extreme value; ties are
/// never collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub class_count: usize,
    pub max_value: Rational,
    pub max_attainers: Vec<Attainer>,
    pub min_value: Rational,
    pub min_attainers: Vec<Attainer>,
}

/// Enumerates all classes on `n` vertices and reports the exact minimum and
/// maximum of the additively weighted Harary index with all attainers.
pub fn extremal_scan(n: usize) -> Result<ExtremalReport, EnumerateError> {
    let reps = enumerate_unicyclic(n)?;
    let mut scored: Vec<(Rational, Graph)> = Vec::with_capacity(reps.len());
    for g in reps {
        let value = additively_weighted_harary(&g).expect("class representatives are connected");
        scored.push((value, g));
    }
    let max_value = scored.iter().map(|(v, _)| v).max().expect("n >= 3 has classes").clone();
    let min_value = scored.iter().map(|(v, _)| v).min().expect("n >= 3 has classes").clone();
    let attainers = |target: &Rational| -> Vec<Attainer> {
        scored
            .iter()
            .filter(|(v, _)| v == target)
            .map(|(_, g)| Attainer {
                certificate: canonical_certificate(g).expect("representatives fit the cap"),
                graph: g.clone(),
            })
            .collect()
    };
    Ok(ExtremalReport {
        n,
        class_count: scored.len(),
        max_attainers: attainers(&max_value),
        min_attainers: attainers(&min_value),
        max_value,
        min_value,
    })
}

/// One named check inside a [`VerifyReport`]. Only `asserted` checks count
/// toward overall failure; informational checks report what was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub asserted: bool,
    pub detail: String,
}

/// Pass/fail report for the extremal bounds on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub scan: ExtremalReport,
    pub max_expected: Rational,
    pub min_expected: Rational,
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    /// True iff every asserted check passed.
    pub fn all_asserted_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.asserted)
    }
}

/// Verifies, by exhaustive scan, that `CS_{3,n-3}` uniquely attains the
/// maximum `3(n^2-n+2)/2` and that the minimum matches `CP_{3,n-3}`'s
/// closed form (`C_4`'s value 20 at `n = 4`).
///
/// Uniqueness of the minimizer is asserted for `n = 4` and `n >= 6`. At
/// `n = 5` the cycle `C_5` ties `CP_{3,2}` at exactly 30, so the attainer
/// set is reported as found without a uniqueness assertion.
pub fn verify_extremal(n: usize) -> Result<VerifyReport, EnumerateError> {
    let scan = extremal_scan(n)?;
    let mut checks = Vec::new();

    if let Some(&(_, expected)) = KNOWN_CLASS_COUNTS.iter().find(|&&(m, _)| m == n) {
        checks.push(VerifyCheck {
            name: "class_count_expected",
            passed: scan.class_count == expected,
            asserted: true,
            detail: format!("found {} classes, expected {}", scan.class_count, expected),
        });
    }

    let max_expected = cs3_closed_form(n).expect("n >= 3");
    let min_expected = if n >= 5 {
        cp3_closed_form(n).expect("n >= 5")
    } else {
        additively_weighted_harary(&make_cycle(4).expect("C_4 exists"))
            .expect("C_4 is connected")
    };

    // every class value lies in [scan.min, scan.max], so checking the two
    // extremes checks all classes
    checks.push(VerifyCheck {
        name: "bounds_hold_for_all_classes",
        passed: scan.max_value <= max_expected && scan.min_value >= min_expected,
        asserted: true,
        detail: format!(
            "all {} class values within [{}, {}]",
            scan.class_count, min_expected, max_expected
        ),
    });

    checks.push(VerifyCheck {
        name: "max_equals_cs3_closed_form",
        passed: scan.max_value == max_expected,
        asserted: true,
        detail: format!("scan max {} vs closed form {}", scan.max_value, max_expected),
    });

    let cs_cert = canonical_certificate(&make_cs(3, n - 3).expect("n >= 3"))
        .expect("family graph fits the cap");
    let max_is_cs = scan.max_attainers.len() == 1 && scan.max_attainers[0].certificate == cs_cert;
    checks.push(VerifyCheck {
        name: "max_attained_uniquely_by_cs3",
        passed: max_is_cs,
        asserted: true,
        detail: format!("{} attainer(s) at the maximum", scan.max_attainers.len()),
    });

    checks.push(VerifyCheck {
        name: "min_equals_closed_form",
        passed: scan.min_value == min_expected,
        asserted: true,
        detail: format!("scan min {} vs expected {}", scan.min_value, min_expected),
    });

    let min_witness_cert = if n >= 5 {
        canonical_certificate(&make_cp(3, n - 3).expect("n >= 5")).expect("fits the cap")
    } else {
        canonical_certificate(&make_cycle(4).expect("C_4 exists")).expect("fits the cap")
    };
    checks.push(VerifyCheck {
        name: if n >= 5 { "min_attained_by_cp3" } else { "min_attained_by_c4" },
        passed: scan
            .min_attainers
            .iter()
            .any(|a| a.certificate == min_witness_cert),
        asserted: true,
        detail: "expected witness present in the attainer set".to_string(),
    });

    let unique_min = scan.min_attainers.len() == 1;
    checks.push(VerifyCheck {
        name: "min_attainer_unique",
        passed: unique_min,
        // C_5 ties CP_{3,2} at n = 5; the tie is reported, not asserted away
        asserted: n != 5,
        detail: format!("{} attainer(s) at the minimum", scan.min_attainers.len()),
    });

    Ok(VerifyReport { n, scan, max_expected, min_expected, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_n4_matches_reference_values() {
        let report = extremal_scan(4).unwrap();
        assert_eq!(report.class_count, 2);
        assert_eq!(report.max_value, Rational::integer(21));
        assert_eq!(report.min_value, Rational::integer(20));
        let cs31 = canonical_certificate(&make_cs(3, 1).unwrap()).unwrap();
        let c4 = canonical_certificate(&make_cycle(4).unwrap()).unwrap();
        assert_eq!(report.max_attainers.len(), 1);
        assert_eq!(report.max_attainers[0].certificate, cs31);
        assert_eq!(report.min_attainers.len(), 1);
        assert_eq!(report.min_attainers[0].certificate, c4);
    }

    #[test]
    fn verify_small_n() {
        for n in 4..=6 {
            let report = verify_extremal(n).unwrap();
            assert!(report.all_asserted_passed(), "n = {n}: {:?}", report.checks);
        }
    }

    #[test]
    fn n5_minimum_is_tied() {
        let report = verify_extremal(5).unwrap();
        assert!(report.all_asserted_passed());
        assert_eq!(report.scan.min_attainers.len(), 2);
        let tie = report
            .checks
            .iter()
            .find(|c| c.name == "min_attainer_unique")
            .unwrap();
        assert!(!tie.asserted);
        assert!(!tie.passed);
    }
}
