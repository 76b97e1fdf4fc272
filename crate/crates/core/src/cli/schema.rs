//! JSON document and CSV row layouts.

use serde::{Deserialize, Serialize};

use crate::enumerate::EnumerationReport;
use crate::fpdata::{DataError, FixedPoint, FixedPointDatum};

/// On-disk form of a [`FixedPointDatum`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDocument {
    pub dim: usize,
    pub fixed_points: Vec<PointRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointRecord {
    pub weights: Vec<i64>,
}

impl From<FixedPointDatum> for DatumDocument {
    fn from(d: FixedPointDatum) -> Self {
        Self {
            dim: d.dim(),
            fixed_points: d
                .points()
                .iter()
                .map(|p| PointRecord {
                    weights: p.weights().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<DatumDocument> for FixedPointDatum {
    type Error = DataError;

    fn try_from(doc: DatumDocument) -> Result<Self, DataError> {
        if !doc.dim.is_multiple_of(2) {
            return Err(DataError::InvalidParameter(format!(
                "dim must be even, got {}",
                doc.dim
            )));
        }
        FixedPointDatum::new(
            doc.dim / 2,
            doc.fixed_points.into_iter().map(|p| p.weights).collect(),
        )
    }
}

impl DatumDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parses a datum, naming the offending field on failure.
pub fn parse_datum(text: &str) -> Result<FixedPointDatum, String> {
    let doc: DatumDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
    FixedPointDatum::try_from(doc).map_err(|e| match e {
        DataError::WrongArity {
            point,
            expected,
            found,
        } => format!(
            "fixed_points[{point}].weights: expected {expected} weights, found {found} (WrongArity)"
        ),
        DataError::ZeroWeight { point } => {
            format!("fixed_points[{point}].weights: weight 0 is not allowed (ZeroWeight)")
        }
        other => format!("dim: {other}"),
    })
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub const CSV_HEADER: [&str; 13] = [
    "dim",
    "k",
    "weights",
    "weight_types",
    "n_vector",
    "chi",
    "weight_pairing",
    "smallest_weight_pairing",
    "rigidity",
    "kosniowski",
    "crowded",
    "middle_range",
    "dim6_crowding",
];

/// One row per admissible datum. Lists inside a cell are `;`-joined; the
/// weights cell separates points with `|`.
pub fn report_csv(report: &EnumerationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for (d, g) in report.admissible.iter().zip(&report.diagnostics) {
        let weights = d
            .points()
            .iter()
            .map(|p: &FixedPoint| join(p.weights()))
            .collect::<Vec<_>>()
            .join("|");
        w.write_record([
            d.dim().to_string(),
            d.len().to_string(),
            weights,
            join(&g.weight_types),
            join(&g.n_vector.0),
            join(&g.chi.0),
            g.weight_pairing.to_string(),
            g.smallest_weight_pairing.to_string(),
            g.rigidity.to_string(),
            g.kosniowski.to_string(),
            g.crowded.to_string(),
            g.middle_range.to_string(),
            g.dim6_crowding.map(|b| b.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpdata::{gen_cpn, gen_s6};

    #[test]
    fn document_shape() {
        let d = gen_s6(1, 2).unwrap();
        let v: serde_json::Value = serde_json::to_value(&d).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"dim": 6, "fixed_points": [
                {"weights": [-3, 1, 2]}, {"weights": [-2, -1, 3]}]})
        );
        let back: FixedPointDatum = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let e = parse_datum(r#"{"dim":6,"fixed_points":[{"weights":[1,2]}]}"#).unwrap_err();
        assert!(e.contains("fixed_points[0].weights") && e.contains("WrongArity"), "{e}");
        let e = parse_datum(r#"{"dim":2,"fixed_points":[{"weights":[1]},{"weights":[0]}]}"#)
            .unwrap_err();
        assert!(e.contains("fixed_points[1]") && e.contains("ZeroWeight"), "{e}");
        let e = parse_datum(r#"{"dim":3,"fixed_points":[]}"#).unwrap_err();
        assert!(e.starts_with("dim"), "{e}");
        let e = parse_datum(r#"{"dim":2,"points":[]}"#).unwrap_err();
        assert!(e.contains("line 1"), "{e}");
    }

    #[test]
    fn unsorted_input_is_sorted() {
        let d = parse_datum(r#"{"dim":4,"fixed_points":[{"weights":[3,1]},{"weights":[2,-1]},{"weights":[-2,-3]}]}"#)
            .unwrap();
        assert_eq!(d, gen_cpn(&[0, 1, 3]).unwrap());
    }
}
