//! Exhaustive verification over finite graded pieces.
//!
//! Every suite enumerates a bounded region (multisegments with `|M| <= s`,
//! Lusztig data of the same total height, or all tableaux of one shape) and
//! checks an identity on every element. Reports state the bound they ran
//! under; nothing here claims more than the enumerated region.

mod enumerate;
mod graph;
mod iso;
mod report;
mod suites;

pub use enumerate::{
    all_segments, count_multisegments, count_ssyt, enumerate_lusztig_data, enumerate_multisegments, f_closure,
    multisegment_closure, sort_canonical, tableau_closure,
};
pub use graph::{build_graph, CrystalGraph, EdgeKind, GraphEdge, GraphModel, GraphNode};
pub use iso::unique_isomorphism_check;
pub use report::{Counterexample, Show, SuiteParams, SuiteReport};
pub use suites::{default_battery, find_suite, run_battery, run_suite, Domain, Suite, SUITES};

pub use crate::tableau::enumerate_ssyt;

use crate::crystal::Rank;
use crate::document::Document;
use crate::error::CrystalError;
use crate::multisegment::Multisegment;
use crate::pbw::LusztigDatum;
use crate::tableau::{Partition, Tableau};

/// Name of the environment variable that caps enumeration size.
pub const BUDGET_ENV: &str = "CRYSTALKIT_BUDGET";

/// Limits on how much enumeration a request may trigger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest region (number of elements) that will be enumerated.
    pub max_elements: u128,
    /// When set, the largest `max_size` that will be accepted.
    pub max_size: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_elements: 1_000_000, max_size: None }
    }
}

impl Budget {
    /// Default budget, with the size cap taken from `CRYSTALKIT_BUDGET` when
    /// it holds an integer. A size cap replaces the element-count guard.
    pub fn from_env() -> Result<Self, CrystalError> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => {
                let cap = v
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| CrystalError::Usage(format!("{BUDGET_ENV} must be an integer, got `{v}`")))?;
                Ok(Budget { max_elements: u128::MAX, max_size: Some(cap) })
            }
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn check_size(&self, max_size: u64) -> Result<(), CrystalError> {
        if let Some(cap) = self.max_size {
            if max_size > cap {
                return Err(CrystalError::BudgetExceeded(format!("max size {max_size} exceeds the cap {cap}")));
            }
        }
        Ok(())
    }

    pub fn check_count(&self, what: &str, count: u128) -> Result<(), CrystalError> {
        if count > self.max_elements {
            return Err(CrystalError::BudgetExceeded(format!(
                "{what} has an estimated {count} elements, budget is {}",
                self.max_elements
            )));
        }
        Ok(())
    }

    /// Checks a multisegment region `|M| <= max_size` in rank `n`.
    pub fn check_multisegments(&self, rank: Rank, max_size: u64) -> Result<(), CrystalError> {
        self.check_size(max_size)?;
        self.check_count(&format!("MS_{rank} with |M| <= {max_size}"), count_multisegments(rank, max_size))
    }

    pub fn check_tableaux(&self, lambda: &Partition, rank: Rank) -> Result<(), CrystalError> {
        lambda.check_rank(rank)?;
        self.check_count(&format!("SSYT_{rank}{lambda}"), count_ssyt(lambda, rank))
    }
}

/// Elements that can be written out as a replayable document.
pub trait AsDocument {
    fn to_document(&self) -> Document;
}

impl AsDocument for Multisegment {
    fn to_document(&self) -> Document {
        Document::Ms(self.clone())
    }
}

impl AsDocument for Tableau {
    fn to_document(&self) -> Document {
        Document::Tab(self.clone())
    }
}

impl AsDocument for LusztigDatum {
    fn to_document(&self) -> Document {
        Document::Pbw(self.clone())
    }
}

/// Named elements used as regression fixtures.
pub mod fixtures {
    use crate::crystal::Rank;
    use crate::multisegment::Multisegment;
    use crate::tableau::Tableau;

    /// The rank-5 multisegment
    /// `[1,1] [2,2]^2 [3,3] [1,2]^2 [2,3] [3,4]^2 [2,4] [2,5]` whose σ-chain
    /// has jumps `(2,1,3,2,4)`.
    pub fn sigma_chain_example() -> Multisegment {
        Multisegment::from_triples(
            Rank::new(5).expect("nonzero"),
            &[(1, 1, 1), (2, 2, 2), (3, 3, 1), (1, 2, 2), (2, 3, 1), (3, 4, 2), (2, 4, 1), (2, 5, 1)],
        )
        .expect("valid fixture")
    }

    /// Shape `(9,7,3,1)` tableau in rank 4 with column string `)()((` at `i = 2`.
    pub fn bracket_tableau() -> Tableau {
        Tableau::new(
            Rank::new(4).expect("nonzero"),
            vec![vec![0, 0, 0, 1, 1, 2, 2, 3, 4], vec![1, 1, 2, 2, 3, 3, 4], vec![2, 3, 4], vec![4]],
        )
        .expect("valid fixture")
    }

    /// Rank-3 tableau `0123/123/23`, the source of the embedding square for `e_3`.
    pub fn embedding_tableau() -> Tableau {
        Tableau::new(Rank::new(3).expect("nonzero"), vec![vec![0, 1, 2, 3], vec![1, 2, 3], vec![2, 3]])
            .expect("valid fixture")
    }
}
