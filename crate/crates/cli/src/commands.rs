//! Record producers for `table`, `compare` and `coeffs`.

use harmlike_core::coefficients::FunctionId;
use harmlike_core::series::{evaluate_series, reference_value, SeriesOptions};
use harmlike_core::{exact_coefficients, harmonic_like_sequence, ComplexScalar, Method};
use num_traits::ToPrimitive;

use crate::output::{format_rational, Record};

pub const TABLE_COLUMNS: [&str; 6] = ["n", "a_re", "a_im", "method", "value_re", "value_im"];

pub const COMPARE_COLUMNS: [&str; 11] = [
    "function_id",
    "z_re",
    "z_im",
    "value_re",
    "value_im",
    "reference_re",
    "reference_im",
    "abs_error",
    "terms_used",
    "converged",
    "last_term",
];

pub const COEFFS_COLUMNS: [&str; 4] = ["function_id", "power", "exact", "value"];

/// `H_1(a) … H_{n_max}(a)` by the recurrence.
pub fn table(a: ComplexScalar, n_max: u32) -> harmlike_core::Result<Vec<Record>> {
    let values = harmonic_like_sequence(a, n_max)?;
    Ok(values
        .into_iter()
        .zip(1u32..)
        .map(|(h, n)| {
            Record::new()
                .with("n", n)
                .with("a_re", a.re)
                .with("a_im", a.im)
                .with("method", Method::Recurrence.to_string())
                .with("value_re", h.re)
                .with("value_im", h.im)
        })
        .collect())
}

/// `steps` equally spaced points of `[lo, hi]`, endpoints included.
pub fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let last = steps - 1;
            (0..steps)
                .map(|i| {
                    if i == last {
                        hi
                    } else {
                        lo + (hi - lo) * i as f64 / last as f64
                    }
                })
                .collect()
        }
    }
}

/// Series value against its reference product on a real grid.
pub fn compare(
    function_id: FunctionId,
    lo: f64,
    hi: f64,
    steps: usize,
    options: &SeriesOptions,
) -> harmlike_core::Result<Vec<Record>> {
    grid(lo, hi, steps)
        .into_iter()
        .map(|x| {
            let z = ComplexScalar::new(x, 0.0);
            let r = evaluate_series(function_id, z, options)?;
            let reference = reference_value(function_id, z)?;
            Ok(Record::new()
                .with("function_id", function_id.name())
                .with("z_re", z.re)
                .with("z_im", z.im)
                .with("value_re", r.value.re)
                .with("value_im", r.value.im)
                .with("reference_re", reference.re)
                .with("reference_im", reference.im)
                .with("abs_error", (r.value - reference).norm())
                .with("terms_used", r.terms_used)
                .with("converged", r.converged)
                .with("last_term", r.last_term_magnitude))
        })
        .collect()
}

/// Exact coefficients with their nearest doubles.
pub fn coeffs(function_id: FunctionId, n_max: u32) -> harmlike_core::Result<Vec<Record>> {
    let table = exact_coefficients(function_id, n_max)?;
    Ok(table
        .coefficients
        .iter()
        .map(|(power, c)| {
            Record::new()
                .with("function_id", function_id.name())
                .with("power", *power)
                .with("exact", format_rational(c))
                .with("value", c.to_f64().unwrap_or(f64::NAN))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::output::Field;

    #[test]
    fn grid_endpoints() {
        assert_eq!(grid(0.0, 1.0, 1), vec![0.0]);
        assert_eq!(grid(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        let g = grid(0.1, 0.7, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[6], 0.7);
    }

    #[test]
    fn table_rows() {
        let rows = table(ComplexScalar::new(1.0, 0.0), 2).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].get("value_re"), Some(&Field::Float(1.5)));
    }

    #[test]
    fn coefficient_rows() {
        let rows = coeffs(FunctionId::SiRef, 2).unwrap();
        assert_eq!(rows[1].get("exact"), Some(&Field::Text("-1/18".into())));
        assert!(coeffs(FunctionId::Si2, 0).is_err());
    }

    #[test]
    fn compare_rejects_reference_ids() {
        assert!(compare(FunctionId::SiRef, 0.0, 1.0, 2, &SeriesOptions::default()).is_err());
    }
}
