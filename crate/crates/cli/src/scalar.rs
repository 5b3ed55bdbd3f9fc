//! Parsing and formatting of CLI scalars.
//!
//! Complex scalars are written `RE` or `RE±IMi` (`2.5`, `1.0-0.3i`, `0.7+0.2i`);
//! vectors are comma-separated; progressions are `start:stop:step`. Floats are
//! emitted with 17 significant digits so output round-trips bit-exactly.

use f1zeta::Complex64;
use f1zeta::Rational;

/// Parse `RE`, `RE±IMi`, or a pure-imaginary `IMi`. Whitespace is ignored,
/// so the output of [`format_complex`] parses back exactly.
pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let stripped: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let text = stripped.as_str();
    if text.is_empty() {
        return Err("empty scalar".to_owned());
    }
    if !text.ends_with('i') {
        let re: f64 = text
            .parse()
            .map_err(|_| format!("`{text}` is not a real number"))?;
        return Ok(Complex64::new(re, 0.0));
    }
    let body = &text[..text.len() - 1];
    // Split at the last sign that is not a leading sign or an exponent sign.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(idx, ch)| {
            (ch == '+' || ch == '-') && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
        })
        .map(|(idx, _)| idx)
        .last();
    let (re_text, im_text) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("", body),
    };
    let re: f64 = if re_text.is_empty() {
        0.0
    } else {
        re_text
            .parse()
            .map_err(|_| format!("`{re_text}` is not a real number in `{text}`"))?
    };
    let im: f64 = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse()
            .map_err(|_| format!("`{other}` is not a real number in `{text}`"))?,
    };
    Ok(Complex64::new(re, im))
}

/// Parse a comma-separated list of complex scalars.
pub fn parse_complex_list(input: &str) -> Result<Vec<Complex64>, String> {
    input.split(',').map(parse_complex).collect()
}

/// Parse `start:stop:step` into the samples `start, start+step, … ≤ stop`
/// (with a half-ulp slack on the endpoint).
pub fn parse_progression(input: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = input.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("`{input}` is not of the form start:stop:step"));
    }
    let parse = |t: &str| -> Result<f64, String> {
        t.trim()
            .parse()
            .map_err(|_| format!("`{t}` is not a real number in `{input}`"))
    };
    let (start, stop, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if !step.is_finite() || step <= 0.0 {
        return Err(format!("step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("stop {stop} is below start {start}"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| start + k as f64 * step).collect())
}

/// 17 significant digits; round-trips any f64 bit-exactly.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// `re ± im·i` with full precision.
pub fn format_complex(z: Complex64) -> String {
    if z.im >= 0.0 || z.im.is_nan() {
        format!("{} + {}i", format_f64(z.re), format_f64(z.im))
    } else {
        format!("{} - {}i", format_f64(z.re), format_f64(-z.im))
    }
}

/// Reduced `p/q` with the sign on the numerator (`-3/2`, `2/1`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse comma-separated positive moduli, e.g. `2,4`.
pub fn parse_moduli(input: &str) -> Result<Vec<u64>, String> {
    input
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u64>()
                .map_err(|_| format!("`{t}` is not a nonnegative integer"))
        })
        .collect()
}
