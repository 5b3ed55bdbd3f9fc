//! CSV grid evaluation of `ζ^HI` over a rectangle of `s` values (r = 1).
//!
//! Rows are emitted in grid order (outer loop over `Re s`, inner over `Im s`)
//! with 17-significant-digit floats, so output is byte-identical run to run.
//! Samples are independent, which keeps the output identical for any worker
//! count; workers only partition the index range.

use std::io::Write;

use f1zeta::abelian::F1Scheme;
use f1zeta::zeta::{hurwitz_igusa, EvalParams};
use f1zeta::{Complex64, ZetaError};

use crate::scalar::format_f64;

/// Cap on the number of grid samples.
pub const MAX_GRID_SAMPLES: usize = 1_000_000;

/// Environment variable selecting the worker count for grid evaluation.
pub const WORKERS_ENV: &str = "F1ZETA_WORKERS";

#[derive(Clone, Debug)]
pub struct GridSpec {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
    pub a: Complex64,
    pub w: Complex64,
    pub tolerance: f64,
}

pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn evaluate(scheme: &F1Scheme, spec: &GridSpec, s: Complex64) -> Result<Complex64, ZetaError> {
    let params = EvalParams::new(vec![s], vec![spec.a], spec.w, spec.tolerance)?;
    hurwitz_igusa(&params, scheme)
}

fn sanitize_note(text: &str) -> String {
    text.replace(',', ";").replace('\n', " ")
}

/// Evaluate the grid and stream CSV rows; returns the number of samples that
/// produced a value.
pub fn run(scheme: &F1Scheme, spec: &GridSpec, out: &mut dyn Write) -> std::io::Result<usize> {
    let im_len = spec.im.len();
    let total = spec.re.len() * im_len;
    let mut results: Vec<Option<Result<Complex64, ZetaError>>> = vec![None; total];

    let workers = worker_count().max(1).min(total.max(1));
    let chunk = total.div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        for (t, slice) in results.chunks_mut(chunk).enumerate() {
            let offset = t * chunk;
            scope.spawn(move || {
                for (i, cell) in slice.iter_mut().enumerate() {
                    let idx = offset + i;
                    let s = Complex64::new(spec.re[idx / im_len], spec.im[idx % im_len]);
                    *cell = Some(evaluate(scheme, spec, s));
                }
            });
        }
    });

    writeln!(out, "re_s,im_s,re_val,im_val,note")?;
    let mut evaluated = 0usize;
    for (idx, cell) in results.into_iter().enumerate() {
        let re = spec.re[idx / im_len];
        let im = spec.im[idx % im_len];
        match cell.expect("every sample visited") {
            Ok(v) => {
                evaluated += 1;
                writeln!(
                    out,
                    "{},{},{},{},",
                    format_f64(re),
                    format_f64(im),
                    format_f64(v.re),
                    format_f64(v.im)
                )?;
            }
            Err(e) => {
                writeln!(
                    out,
                    "{},{},,,{}",
                    format_f64(re),
                    format_f64(im),
                    sanitize_note(&e.to_string())
                )?;
            }
        }
    }
    Ok(evaluated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use f1zeta::abelian::{FgAbelianGroup, SchemePoint};

    fn gm() -> F1Scheme {
        F1Scheme::new(vec![SchemePoint::new("p0", FgAbelianGroup::free(1))]).unwrap()
    }

    #[test]
    fn pole_rows_have_note_and_empty_values() {
        let spec = GridSpec {
            re: vec![1.5, 2.0, 2.5],
            im: vec![0.0],
            a: Complex64::new(1.0, 0.0),
            w: Complex64::new(1.0, 0.0),
            tolerance: 1e-12,
        };
        let mut buf = Vec::new();
        let evaluated = run(&gm(), &spec, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "re_s,im_s,re_val,im_val,note");
        assert_eq!(lines.len(), 4);
        // s = 2 hits the shifted pole s - n·w = 1 for G_m.
        assert!(
            lines[2].contains(",,,"),
            "expected a note row: {}",
            lines[2]
        );
        assert_eq!(evaluated, 2);
    }

    #[test]
    fn output_is_identical_for_any_worker_count() {
        let spec = GridSpec {
            re: vec![1.2, 1.8, 2.4, 3.0, 3.6],
            im: vec![-0.5, 0.0, 0.5],
            a: Complex64::new(2.0, 0.0),
            w: Complex64::new(1.0, 0.0),
            tolerance: 1e-12,
        };
        let scheme = gm();
        let render = |workers: &str| {
            std::env::set_var(WORKERS_ENV, workers);
            let mut buf = Vec::new();
            run(&scheme, &spec, &mut buf).unwrap();
            std::env::remove_var(WORKERS_ENV);
            buf
        };
        let one = render("1");
        let four = render("4");
        assert_eq!(one, four);
    }
}
