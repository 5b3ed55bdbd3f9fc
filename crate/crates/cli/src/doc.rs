//! Scheme documents: the on-disk JSON description of an F₁-scheme.
//!
//! ```json
//! {
//!   "name": "Gm",
//!   "points": [
//!     { "name": "p0", "rank": 1, "torsion": [] }
//!   ]
//! }
//! ```
//!
//! Torsion moduli must be positive; factors of 1 are dropped silently and the
//! rest are normalized to invariant factors on load. The canonical emitter is
//! deterministic, so `parse → emit → parse` is the identity on canonical
//! documents.

use serde::{Deserialize, Serialize};

use f1zeta::abelian::{F1Scheme, FgAbelianGroup, FiniteAbelianGroup, SchemePoint};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeDocument {
    pub name: String,
    pub points: Vec<PointDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDocument {
    pub name: String,
    pub rank: u32,
    pub torsion: Vec<i64>,
}

impl SchemeDocument {
    /// Parse a document, reporting the position of any syntax error.
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| {
            format!(
                "parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            )
        })
    }

    /// Validate and convert into an [`F1Scheme`] (torsion normalized,
    /// point names checked for uniqueness).
    pub fn to_scheme(&self) -> Result<F1Scheme, String> {
        let mut points = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let mut moduli = Vec::with_capacity(p.torsion.len());
            for &m in &p.torsion {
                if m < 1 {
                    return Err(format!(
                        "point `{}`: torsion entry {m} is not a positive integer",
                        p.name
                    ));
                }
                moduli.push(m as u64);
            }
            let torsion = FiniteAbelianGroup::from_moduli(&moduli)
                .map_err(|e| format!("point `{}`: {e}", p.name))?;
            points.push(SchemePoint::new(
                p.name.clone(),
                FgAbelianGroup::new(p.rank, torsion),
            ));
        }
        F1Scheme::new(points).map_err(|e| e.to_string())
    }

    /// The canonical form: same names and ranks, torsion in invariant-factor
    /// form.
    pub fn canonical(&self) -> Result<SchemeDocument, String> {
        let scheme = self.to_scheme()?;
        Ok(SchemeDocument {
            name: self.name.clone(),
            points: scheme
                .points()
                .iter()
                .map(|p| PointDocument {
                    name: p.name.clone(),
                    rank: p.units.rank(),
                    torsion: p
                        .units
                        .torsion()
                        .moduli()
                        .iter()
                        .map(|&m| m as i64)
                        .collect(),
                })
                .collect(),
        })
    }

    /// Deterministic canonical serialization (pretty JSON, trailing newline).
    pub fn canonical_json(&self) -> Result<String, String> {
        let canonical = self.canonical()?;
        let mut text = serde_json::to_string_pretty(&canonical).map_err(|e| e.to_string())?;
        text.push('\n');
        Ok(text)
    }
}

/// Read and validate a scheme file.
pub fn load_scheme(path: &std::path::Path) -> Result<F1Scheme, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    SchemeDocument::parse(&text)?.to_scheme()
}

#[cfg(test)]
mod tests {
    use super::*;

    const GM: &str = r#"{"name":"Gm","points":[{"name":"p0","rank":1,"torsion":[]}]}"#;

    #[test]
    fn parses_minimal_document() {
        let doc = SchemeDocument::parse(GM).unwrap();
        let scheme = doc.to_scheme().unwrap();
        assert_eq!(scheme.points().len(), 1);
        assert_eq!(scheme.points()[0].units.rank(), 1);
        assert!(scheme.points()[0].units.torsion().is_trivial());
    }

    #[test]
    fn unit_torsion_factors_are_dropped() {
        let doc = SchemeDocument::parse(
            r#"{"name":"x","points":[{"name":"p0","rank":0,"torsion":[1,6]}]}"#,
        )
        .unwrap();
        let canonical = doc.canonical().unwrap();
        assert_eq!(canonical.points[0].torsion, vec![6]);
    }

    #[test]
    fn torsion_is_normalized_on_load() {
        let doc = SchemeDocument::parse(
            r#"{"name":"x","points":[{"name":"p0","rank":0,"torsion":[4,6]}]}"#,
        )
        .unwrap();
        assert_eq!(doc.canonical().unwrap().points[0].torsion, vec![2, 12]);
    }

    #[test]
    fn duplicate_point_names_rejected() {
        let doc = SchemeDocument::parse(
            r#"{"name":"x","points":[{"name":"p0","rank":0,"torsion":[]},{"name":"p0","rank":1,"torsion":[]}]}"#,
        )
        .unwrap();
        let err = doc.to_scheme().unwrap_err();
        assert!(err.contains("duplicate"), "got: {err}");
    }

    #[test]
    fn nonpositive_torsion_rejected() {
        let doc = SchemeDocument::parse(
            r#"{"name":"x","points":[{"name":"p0","rank":0,"torsion":[0]}]}"#,
        )
        .unwrap();
        assert!(doc.to_scheme().is_err());
        let doc = SchemeDocument::parse(
            r#"{"name":"x","points":[{"name":"p0","rank":0,"torsion":[-2]}]}"#,
        )
        .unwrap();
        assert!(doc.to_scheme().is_err());
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = SchemeDocument::parse("{\"name\": \"x\",\n  oops").unwrap_err();
        assert!(err.contains("line 2"), "got: {err}");
    }

    #[test]
    fn canonical_emit_is_idempotent() {
        let doc = SchemeDocument::parse(
            r#"{"name":"x","points":[{"name":"p0","rank":2,"torsion":[6,1,4]}]}"#,
        )
        .unwrap();
        let once = doc.canonical_json().unwrap();
        let twice = SchemeDocument::parse(&once)
            .unwrap()
            .canonical_json()
            .unwrap();
        assert_eq!(once, twice);
    }
}
