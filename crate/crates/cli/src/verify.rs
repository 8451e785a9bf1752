//! Identity suites behind `harmlike verify`.
//!
//! Every check carries an expected outcome. The Staver `from_p1` variant is
//! expected to fail; everything else is expected to hold. A run is clean when
//! every observed outcome matches its expectation.

use harmlike_core::coefficients::FunctionId;
use harmlike_core::series::{evaluate_series, reference_value, SeriesOptions};
use harmlike_core::{
    cauchy_product_oracle, exact_coefficients, harmonic_like_exact, integral_eq2_exact, ratio,
    verify_staver, ComplexScalar, ExactRational, SeriesCoefficients, SumVariant,
};
use num_complex::Complex64;

use crate::output::{format_float, format_rational, Record};

/// Test points for the `series_values` suite.
pub const SERIES_POINTS: [(f64, f64); 6] = [
    (0.5, 0.0),
    (1.0, 0.0),
    (2.0, 0.0),
    (5.0, 0.0),
    (10.0, 0.0),
    (1.0, 2.0),
];

/// Relative agreement required between a series and its reference product.
pub const SERIES_VALUE_TOLERANCE: f64 = 1e-12;

/// Term budget within which the series must converge on [`SERIES_POINTS`].
pub const SERIES_TERM_BUDGET: usize = 80;

/// Parameters of the exact recurrence suite.
pub fn recurrence_params() -> [ExactRational; 5] {
    [
        ratio(0, 1),
        ratio(1, 2),
        ratio(1, 1),
        ratio(2, 1),
        ratio(-1, 3),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Staver,
    Recurrence,
    Eq2,
    SeriesCoeffs,
    SeriesValues,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Staver,
        Suite::Recurrence,
        Suite::Eq2,
        Suite::SeriesCoeffs,
        Suite::SeriesValues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Staver => "staver",
            Suite::Recurrence => "recurrence",
            Suite::Eq2 => "eq2",
            Suite::SeriesCoeffs => "series_coeffs",
            Suite::SeriesValues => "series_values",
        }
    }
}

/// Supplies the `H_n(1/2)`-weighted coefficient tables checked by the
/// `series_coeffs` suite. Swappable so a deliberately broken table can
/// prove that the suite notices.
pub trait CoefficientSource {
    fn coefficients(
        &self,
        function_id: FunctionId,
        n_max: u32,
    ) -> harmlike_core::Result<SeriesCoefficients>;
}

/// The real tables from [`exact_coefficients`].
#[derive(Debug, Clone, Copy, Default)]
pub struct HarmonicCoefficients;

impl CoefficientSource for HarmonicCoefficients {
    fn coefficients(
        &self,
        function_id: FunctionId,
        n_max: u32,
    ) -> harmlike_core::Result<SeriesCoefficients> {
        exact_coefficients(function_id, n_max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub label: String,
    pub n: Option<u32>,
    pub lhs: String,
    pub rhs: String,
    pub expect_pass: bool,
    pub passed: bool,
}

impl Check {
    pub fn as_expected(&self) -> bool {
        self.passed == self.expect_pass
    }

    pub fn record(&self) -> Record {
        let word = |b: bool| if b { "pass" } else { "fail" };
        Record::new()
            .with("suite", self.suite.name())
            .with("check", self.label.as_str())
            .with("n", self.n)
            .with("lhs", self.lhs.as_str())
            .with("rhs", self.rhs.as_str())
            .with("expected", word(self.expect_pass))
            .with("observed", word(self.passed))
            .with(
                "status",
                if self.as_expected() {
                    "ok"
                } else {
                    "DEVIATION"
                },
            )
    }
}

pub const CHECK_COLUMNS: [&str; 8] = [
    "suite", "check", "n", "lhs", "rhs", "expected", "observed", "status",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn deviations(&self) -> usize {
        self.checks.iter().filter(|c| !c.as_expected()).count()
    }

    pub fn expected_failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| !c.expect_pass && !c.passed)
            .count()
    }

    /// 0 when every check behaved as expected, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.deviations() > 0)
    }

    pub fn summary(&self) -> String {
        format!(
            "verify: {} checks, {} as expected ({} expected failures), {} deviations",
            self.checks.len(),
            self.checks.len() - self.deviations(),
            self.expected_failures(),
            self.deviations()
        )
    }
}

fn complex_text(z: Complex64) -> String {
    let im = format_float(z.im, 17);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}i", format_float(z.re, 17))
}

fn staver(n_max: u32, out: &mut Vec<Check>) {
    for report in verify_staver(n_max) {
        out.push(Check {
            suite: Suite::Staver,
            label: format!("staver_{}", report.variant),
            n: Some(report.n),
            lhs: format_rational(&report.lhs),
            rhs: format_rational(&report.rhs),
            expect_pass: report.variant == SumVariant::FromP0,
            passed: report.holds,
        });
    }
}

fn recurrence(n_max: u32, out: &mut Vec<Check>) {
    for a in recurrence_params() {
        for n in 1..=n_max {
            let lhs = harmonic_like_exact(&a, n);
            let rhs = &a * harmonic_like_exact(&a, n - 1) + ratio(1, n.into());
            out.push(Check {
                suite: Suite::Recurrence,
                label: format!("recurrence_a={}", format_rational(&a)),
                n: Some(n),
                passed: lhs == rhs,
                lhs: format_rational(&lhs),
                rhs: format_rational(&rhs),
                expect_pass: true,
            });
        }
    }
}

fn eq2(n_max: u32, out: &mut Vec<Check>) {
    let half = ratio(1, 2);
    for n in 1..=n_max {
        let (lhs, passed) = match integral_eq2_exact(n) {
            Ok(q) => {
                let ok = q == harmonic_like_exact(&half, n);
                (format_rational(&q), ok)
            }
            Err(e) => (e.to_string(), false),
        };
        out.push(Check {
            suite: Suite::Eq2,
            label: "eq2_vs_sum".into(),
            n: Some(n),
            lhs,
            rhs: format_rational(&harmonic_like_exact(&half, n)),
            expect_pass: true,
            passed,
        });
    }
}

fn series_coeffs(n_max: u32, source: &dyn CoefficientSource, out: &mut Vec<Check>) {
    for id in FunctionId::HARMONIC_WEIGHTED {
        let oracle = cauchy_product_oracle(id, n_max).expect("n_max >= 1");
        let table = source.coefficients(id, n_max);
        for (k, (power, want)) in oracle.coefficients.iter().enumerate() {
            let got = table
                .as_ref()
                .ok()
                .and_then(|t| t.coefficients.get(k))
                .filter(|(p, _)| p == power)
                .map(|(_, c)| c);
            out.push(Check {
                suite: Suite::SeriesCoeffs,
                label: format!("{id}_z^{power}"),
                n: Some(k as u32 + 1),
                lhs: got.map_or_else(|| "missing".into(), format_rational),
                rhs: format_rational(want),
                expect_pass: true,
                passed: got == Some(want),
            });
        }
    }
}

fn series_values(tol: f64, out: &mut Vec<Check>) {
    let options = SeriesOptions::with_tol(tol);
    for id in FunctionId::HARMONIC_WEIGHTED {
        for (re, im) in SERIES_POINTS {
            let z = ComplexScalar::new(re, im);
            let label = format!("{id}_at_{}", complex_text(z));
            let reference = reference_value(id, z).expect("finite point");
            let (lhs, passed) = match evaluate_series(id, z, &options) {
                Ok(r) => {
                    let err = (r.value - reference).norm();
                    let ok = r.converged
                        && r.terms_used <= SERIES_TERM_BUDGET
                        && err <= SERIES_VALUE_TOLERANCE * reference.norm().max(1.0);
                    (complex_text(r.value), ok)
                }
                Err(e) => (e.to_string(), false),
            };
            out.push(Check {
                suite: Suite::SeriesValues,
                label,
                n: None,
                lhs,
                rhs: complex_text(reference),
                expect_pass: true,
                passed,
            });
        }
    }
}

/// Runs `suite` (or every suite) with indices up to `n_max`.
///
/// `tol` is the truncation tolerance handed to the series evaluations.
pub fn run_verify(
    suite: Suite,
    n_max: u32,
    tol: f64,
    source: &dyn CoefficientSource,
) -> VerifyReport {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut checks = Vec::new();
    for s in suites {
        match s {
            Suite::Staver => staver(n_max, &mut checks),
            Suite::Recurrence => recurrence(n_max, &mut checks),
            Suite::Eq2 => eq2(n_max, &mut checks),
            Suite::SeriesCoeffs if n_max > 0 => series_coeffs(n_max, source, &mut checks),
            Suite::SeriesCoeffs => {}
            Suite::SeriesValues => series_values(tol, &mut checks),
            Suite::All => unreachable!("expanded above"),
        }
    }
    VerifyReport { checks }
}
