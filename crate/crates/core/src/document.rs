//! JSON documents for the three element kinds.
//!
//! ```text
//! {"kind":"ms","rank":n,"segments":[[start,end,mult],...]}
//! {"kind":"tab","rank":n,"rows":[[...],...]}
//! {"kind":"pbw","rank":n,"exponents":[a_1,...,a_N]}
//! ```
//!
//! Output is compact with keys in the order shown. Multisegment segments are
//! strictly sorted by `(start, end)` with `mult >= 1`; input that is not in
//! this canonical form is rejected, so printing and parsing are inverse.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::Rank;
use crate::error::{CrystalError, DocumentError};
use crate::multisegment::{Multisegment, Segment, SigmaTrace};
use crate::pbw::LusztigDatum;
use crate::tableau::Tableau;

/// Largest rank accepted in documents.
pub const MAX_RANK: u32 = 255;

/// Largest multiplicity or exponent accepted in documents, so that operators
/// can be applied without overflowing.
pub const MAX_MULTIPLICITY: u32 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DocumentKind {
    Ms,
    Tab,
    Pbw,
}

impl DocumentKind {
    pub fn name(self) -> &'static str {
        match self {
            DocumentKind::Ms => "ms",
            DocumentKind::Tab => "tab",
            DocumentKind::Pbw => "pbw",
        }
    }
}

impl fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for DocumentKind {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ms" => Ok(DocumentKind::Ms),
            "tab" => Ok(DocumentKind::Tab),
            "pbw" => Ok(DocumentKind::Pbw),
            other => Err(CrystalError::Usage(format!("unknown kind `{other}` (expected ms, tab or pbw)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Ms(Multisegment),
    Tab(Tableau),
    Pbw(LusztigDatum),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum Raw {
    #[serde(rename = "ms")]
    Ms { rank: i64, segments: Vec<(i64, i64, i64)> },
    #[serde(rename = "tab")]
    Tab { rank: i64, rows: Vec<Vec<i64>> },
    #[serde(rename = "pbw")]
    Pbw { rank: i64, exponents: Vec<i64> },
}

fn to_u32(v: i64, what: &str) -> Result<u32, CrystalError> {
    u32::try_from(v).map_err(|_| CrystalError::Usage(format!("{what} {v} out of range")))
}

fn to_count(v: i64, what: &str) -> Result<u32, CrystalError> {
    let k = to_u32(v, what)?;
    if k > MAX_MULTIPLICITY {
        return Err(CrystalError::Usage(format!("{what} {k} exceeds the supported maximum {MAX_MULTIPLICITY}")));
    }
    Ok(k)
}

fn to_rank(v: i64) -> Result<Rank, CrystalError> {
    if v < 1 {
        return Err(CrystalError::Usage(format!("rank {v} must be at least 1")));
    }
    if v > i64::from(MAX_RANK) {
        return Err(CrystalError::Usage(format!("rank {v} exceeds the supported maximum {MAX_RANK}")));
    }
    Rank::new(v as u32)
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Ms(_) => DocumentKind::Ms,
            Document::Tab(_) => DocumentKind::Tab,
            Document::Pbw(_) => DocumentKind::Pbw,
        }
    }

    pub fn rank(&self) -> Rank {
        match self {
            Document::Ms(m) => m.rank(),
            Document::Tab(t) => t.rank(),
            Document::Pbw(a) => a.rank(),
        }
    }

    pub fn from_json(text: &str) -> Result<Document, DocumentError> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))?;
        Ok(Document::from_raw(raw)?)
    }

    fn from_raw(raw: Raw) -> Result<Document, CrystalError> {
        match raw {
            Raw::Ms { rank, segments } => {
                let rank = to_rank(rank)?;
                let mut prev: Option<Segment> = None;
                let mut segs = Vec::with_capacity(segments.len());
                for (s, e, k) in segments {
                    let (s, e) = (to_u32(s, "segment start")?, to_u32(e, "segment end")?);
                    let seg = Segment::new(s, e)
                        .map_err(|_| CrystalError::InvalidSegment { start: s, end: e, rank: rank.get() })?;
                    let k = to_count(k, "multiplicity")?;
                    if k == 0 {
                        return Err(CrystalError::Usage(format!("segment {seg} has multiplicity 0")));
                    }
                    if prev.is_some_and(|p| p >= seg) {
                        return Err(CrystalError::Usage(format!(
                            "segments must be strictly sorted by (start, end); {seg} is out of place"
                        )));
                    }
                    prev = Some(seg);
                    segs.push((seg, k));
                }
                Ok(Document::Ms(Multisegment::from_segments(rank, segs)?))
            }
            Raw::Tab { rank, rows } => {
                let rank = to_rank(rank)?;
                if rows.len() > rank.as_usize() {
                    return Err(CrystalError::UnsupportedShape { rows: rows.len(), rank: rank.get() });
                }
                let rows = rows
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| to_u32(v, "entry")).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Document::Tab(Tableau::new(rank, rows)?))
            }
            Raw::Pbw { rank, exponents } => {
                let rank = to_rank(rank)?;
                let exps = exponents.into_iter().map(|v| to_count(v, "exponent")).collect::<Result<Vec<_>, _>>()?;
                Ok(Document::Pbw(LusztigDatum::new(rank, exps)?))
            }
        }
    }

    fn to_raw(&self) -> Raw {
        let rank = i64::from(self.rank().get());
        match self {
            Document::Ms(m) => Raw::Ms {
                rank,
                segments: m
                    .segments()
                    .map(|(s, k)| (i64::from(s.start()), i64::from(s.end()), i64::from(k)))
                    .collect(),
            },
            Document::Tab(t) => Raw::Tab {
                rank,
                rows: t.rows().iter().map(|r| r.iter().map(|&v| i64::from(v)).collect()).collect(),
            },
            Document::Pbw(a) => Raw::Pbw { rank, exponents: a.exponents().iter().map(|&v| i64::from(v)).collect() },
        }
    }

    /// Compact canonical JSON, without a trailing newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("documents always serialize")
    }

    /// Canonical text label of the element.
    pub fn label(&self) -> String {
        match self {
            Document::Ms(m) => m.label(),
            Document::Tab(t) => t.label(),
            Document::Pbw(a) => a.label(),
        }
    }
}

impl Serialize for Document {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

#[derive(Serialize)]
struct TraceStepJson {
    k: usize,
    a: u32,
    multisegment: Document,
}

#[derive(Serialize)]
struct TraceJson {
    trace: Vec<TraceStepJson>,
    result: Document,
}

/// `{"trace":[{"k":1,"a":..,"multisegment":{..}},...],"result":{..}}`.
pub fn trace_to_json(trace: &SigmaTrace) -> String {
    let json = TraceJson {
        trace: trace
            .steps
            .iter()
            .map(|s| TraceStepJson { k: s.index, a: s.a, multisegment: Document::Ms(s.intermediate.clone()) })
            .collect(),
        result: Document::Ms(trace.result.clone()),
    };
    serde_json::to_string(&json).expect("trace serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::tests::{ms, worked_example};
    use proptest::prelude::*;

    #[test]
    fn ms_format_is_exact() {
        let d = Document::Ms(ms(2, &[(2, 2, 2), (1, 1, 1)]));
        assert_eq!(d.to_json(), r#"{"kind":"ms","rank":2,"segments":[[1,1,1],[2,2,2]]}"#);
    }

    #[test]
    fn tab_and_pbw_formats() {
        let t = Tableau::new(Rank::new(2).unwrap(), vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(Document::Tab(t).to_json(), r#"{"kind":"tab","rank":2,"rows":[[0,1],[2]]}"#);
        let a = LusztigDatum::new(Rank::new(2).unwrap(), vec![1, 0, 2]).unwrap();
        assert_eq!(Document::Pbw(a).to_json(), r#"{"kind":"pbw","rank":2,"exponents":[1,0,2]}"#);
    }

    #[test]
    fn parse_errors_versus_validation_errors() {
        let parse = |s: &str| Document::from_json(s);
        assert!(matches!(parse("{"), Err(DocumentError::Parse(_))));
        assert!(matches!(parse(r#"{"kind":"xx","rank":2}"#), Err(DocumentError::Parse(_))));
        assert!(matches!(parse(r#"{"kind":"ms","rank":2,"segments":[],"extra":1}"#), Err(DocumentError::Parse(_))));
        assert!(matches!(parse(r#"{"kind":"ms","rank":2,"segments":[[1,1]]}"#), Err(DocumentError::Parse(_))));
        assert!(matches!(parse(r#"{"kind":"ms","rank":0,"segments":[]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(parse(r#"{"kind":"ms","rank":2,"segments":[[1,3,1]]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(parse(r#"{"kind":"ms","rank":2,"segments":[[1,1,0]]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(
            parse(r#"{"kind":"ms","rank":2,"segments":[[2,2,1],[1,1,1]]}"#),
            Err(DocumentError::Validation(_))
        ));
        assert!(matches!(
            parse(r#"{"kind":"ms","rank":2,"segments":[[1,1,1],[1,1,1]]}"#),
            Err(DocumentError::Validation(_))
        ));
        assert!(matches!(parse(r#"{"kind":"tab","rank":2,"rows":[[1,0]]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(parse(r#"{"kind":"pbw","rank":2,"exponents":[1,0]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(parse(r#"{"kind":"pbw","rank":2,"exponents":[1,0,-1]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(parse(r#"{"kind":"pbw","rank":9999,"exponents":[]}"#), Err(DocumentError::Validation(_))));
        assert!(matches!(
            parse(r#"{"kind":"ms","rank":1,"segments":[[1,1,4294967295]]}"#),
            Err(DocumentError::Validation(_))
        ));
        assert!(parse(r#"{"kind":"ms","rank":1,"segments":[[1,1,16777216]]}"#).is_ok());
    }

    #[test]
    fn worked_example_round_trip() {
        let d = Document::Ms(worked_example());
        assert_eq!(Document::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn trace_json_shape() {
        let trace = ms(1, &[(1, 1, 1)]).sigma_chain_trace();
        assert_eq!(
            trace_to_json(&trace),
            r#"{"trace":[{"k":1,"a":0,"multisegment":{"kind":"ms","rank":1,"segments":[[1,1,1]]}}],"result":{"kind":"ms","rank":1,"segments":[]}}"#
        );
    }

    fn arb_doc() -> impl Strategy<Value = Document> {
        let ms_doc = (1u32..=5).prop_flat_map(|n| {
            proptest::collection::vec((1u32..=n, 0u32..n, 1u32..4), 0..6).prop_map(move |v| {
                let segs = v.into_iter().map(|(s, h, k)| (Segment::new(s, (s + h).min(n)).unwrap(), k));
                Document::Ms(Multisegment::from_segments(Rank::new(n).unwrap(), segs).unwrap())
            })
        });
        let pbw_doc = (1u32..=5).prop_flat_map(|n| {
            proptest::collection::vec(0u32..5, (n * (n + 1) / 2) as usize)
                .prop_map(move |a| Document::Pbw(LusztigDatum::new(Rank::new(n).unwrap(), a).unwrap()))
        });
        prop_oneof![ms_doc, pbw_doc]
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(d in arb_doc()) {
            prop_assert_eq!(Document::from_json(&d.to_json()).unwrap(), d);
        }
    }
}
