use serde::Serialize;

use crate::crystal::Rank;
use crate::multisegment::Multisegment;
use crate::pbw::LusztigDatum;
use crate::tableau::{Partition, Tableau};

use super::AsDocument;

/// Stored counterexamples are truncated to this many per report.
pub const MAX_COUNTEREXAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub rank: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_shape")]
    pub shape: Option<Partition>,
}

fn ser_shape<S: serde::Serializer>(shape: &Option<Partition>, s: S) -> Result<S::Ok, S::Error> {
    match shape {
        Some(p) => s.collect_seq(p.parts()),
        None => s.serialize_none(),
    }
}

impl SuiteParams {
    pub fn sized(rank: u32, max_size: u64) -> Self {
        SuiteParams { rank, max_size: Some(max_size), shape: None }
    }

    pub fn shaped(rank: u32, shape: Partition) -> Self {
        SuiteParams { rank, max_size: None, shape: Some(shape) }
    }

    pub(crate) fn rank(&self) -> Result<Rank, crate::error::CrystalError> {
        Rank::new(self.rank)
    }

    /// Human-readable statement of the enumerated region.
    pub fn scope(&self) -> String {
        match (&self.shape, self.max_size) {
            (Some(p), _) => format!("all of SSYT_{}{}", self.rank, p),
            (None, Some(s)) => format!("all elements of rank {} with size <= {}", self.rank, s),
            (None, None) => format!("rank {}", self.rank),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    /// The failing element as a JSON document.
    pub element: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn order(a: &Self, b: &Self) -> std::cmp::Ordering {
        (&a.element, &a.check, a.index, &a.expected, &a.actual).cmp(&(&b.element, &b.check, b.index, &b.expected, &b.actual))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: SuiteParams,
    pub scope: String,
    pub elements: u64,
    pub checks: u64,
    pub passed: u64,
    pub failed: u64,
    pub status: &'static str,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub(crate) fn from_checker(suite: &str, params: SuiteParams, elements: u64, checker: Checker) -> Self {
        let Checker { checks, failed, mut counterexamples } = checker;
        counterexamples.sort_by(Counterexample::order);
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        SuiteReport {
            suite: suite.to_string(),
            scope: params.scope(),
            params,
            elements,
            checks,
            passed: checks - failed,
            failed,
            status: if failed == 0 { "pass" } else { "fail" },
            counterexamples,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Display form used in counterexamples.
pub trait Show {
    fn show(&self) -> String;
}

macro_rules! show_via_display {
    ($($t:ty),*) => {$(
        impl Show for $t {
            fn show(&self) -> String {
                self.to_string()
            }
        }
    )*};
}

show_via_display!(u32, u64, i64, usize, bool, String, Multisegment, Tableau, LusztigDatum);

impl<T: Show> Show for Option<T> {
    fn show(&self) -> String {
        match self {
            Some(v) => v.show(),
            None => "null".to_string(),
        }
    }
}

impl<T: Show> Show for Vec<T> {
    fn show(&self) -> String {
        let parts: Vec<String> = self.iter().map(Show::show).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Accumulates check outcomes for one suite run.
#[derive(Debug, Default)]
pub(crate) struct Checker {
    pub checks: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Checker {
    pub fn merge(mut self, other: Checker) -> Checker {
        self.checks += other.checks;
        self.failed += other.failed;
        self.counterexamples.extend(other.counterexamples);
        if self.counterexamples.len() > 4 * MAX_COUNTEREXAMPLES {
            self.counterexamples.sort_by(Counterexample::order);
            self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        }
        self
    }

    pub fn eq<T: PartialEq + Show>(
        &mut self,
        check: &str,
        element: &impl AsDocument,
        index: Option<usize>,
        expected: T,
        actual: T,
    ) {
        self.checks += 1;
        if expected != actual {
            self.fail(check, element, index, expected.show(), actual.show());
        }
    }

    pub fn holds(&mut self, check: &str, element: &impl AsDocument, index: Option<usize>, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(check, element, index, "true".into(), detail());
        }
    }

    pub fn fail(&mut self, check: &str, element: &impl AsDocument, index: Option<usize>, expected: String, actual: String) {
        self.failed += 1;
        self.counterexamples.push(Counterexample {
            check: check.to_string(),
            element: element.to_document().to_json(),
            index,
            expected,
            actual,
        });
    }
}
