//! Exact counting and enumeration of dominating and accurate dominating
//! sets, the published closed forms and bounds for them, and an auditor
//! that checks the second against the first.
//!
//! ```
//! use accdom::{count_accurate, make_family, FamilySpec};
//!
//! let p7 = make_family(FamilySpec::Path(7)).unwrap();
//! assert_eq!(count_accurate(&p7, 4).unwrap().to_string(), "22");
//! ```

pub mod accurate;
pub mod audit;
pub mod bounds;
pub mod closed_forms;
pub mod count;
pub mod domination;
pub mod error;
pub mod family;
pub mod graph;
pub mod ops;
pub mod subsets;
pub mod table;

pub use accurate::{
    accurate_polynomial, count_accurate, enumerate_accurate, gamma_a, is_accurate,
    is_accurate_naive,
};
pub use audit::{AuditRecord, AuditReport, Auditor, Verdict};
pub use bounds::{AccurateCounts, BoundId, Direction, OracleCounts};
pub use closed_forms::{FormulaId, GammaSubject, Interpretation};
pub use count::{binomial, Count, CountPolynomial};
pub use domination::{
    count_dominating, domination_polynomial, enumerate_dominating, gamma, is_dominating, Sweep,
};
pub use error::{Error, Result};
pub use family::{make_family, parse_graph_spec, FamilySpec, GraphSpec};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use ops::{cartesian_product, corona_k1, join};
pub use table::{
    count_table, cycle_count_table, path_count_table, read_tables, write_tables, CountTable,
    TableFamily,
};

// The guide chapters are compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/domination.md")]
    mod domination {}
    #[doc = include_str!("../../../book/src/accurate.md")]
    mod accurate {}
    #[doc = include_str!("../../../book/src/closed_forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/auditing.md")]
    mod auditing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
