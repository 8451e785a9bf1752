use num_complex::Complex64;

/// Parses `RE`, `RE+IMi` or `RE-IMi` (no spaces). Both parts must be finite.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("malformed complex literal {s:?}; expected RE, RE+IMi or RE-IMi");
    let finite = |x: f64| if x.is_finite() { Ok(x) } else { Err(bad()) };
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        let re = s.parse::<f64>().map_err(|_| bad())?;
        return Ok(Complex64::new(finite(re)?, 0.0));
    };
    // split at the last sign that is neither leading nor an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let re = body[..split].parse::<f64>().map_err(|_| bad())?;
    let im_text = &body[split..];
    if im_text.len() < 2 {
        return Err(bad());
    }
    let im = im_text.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(finite(re)?, finite(im)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_complex("0.5"), Ok(Complex64::new(0.5, 0.0)));
        assert_eq!(parse_complex("-2"), Ok(Complex64::new(-2.0, 0.0)));
        assert_eq!(parse_complex("1+1i"), Ok(Complex64::new(1.0, 1.0)));
        assert_eq!(parse_complex("1-2.5i"), Ok(Complex64::new(1.0, -2.5)));
        assert_eq!(
            parse_complex("-1e-3+2E+1i"),
            Ok(Complex64::new(-1e-3, 20.0))
        );
        assert_eq!(parse_complex("1e5-1e-2i"), Ok(Complex64::new(1e5, -1e-2)));
    }

    #[test]
    fn rejected_forms() {
        for s in [
            "", "i", "1+i", "2i", "1 + 2i", "1+2j", "abc", "1+2i3", "inf", "nan", "1+infi", "--1",
        ] {
            assert!(parse_complex(s).is_err(), "{s:?}");
        }
    }
}
