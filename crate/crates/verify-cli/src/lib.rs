//! Verification harness: runs the theorem, lemma and claim suites over
//! graph6 corpora and parameter grids, and answers single-instance decision
//! queries. The binary front end is `verify`; every suite is also callable as
//! a library function so integration tests can drive the same code paths.

pub mod claims;
pub mod config;
pub mod corpus;
pub mod decide;
pub mod lemmas;
pub mod report;
pub mod theorem4;
pub mod theorem8;

pub use claims::{check_claims, cubic_threshold, sample_join_comparisons};
pub use config::{parse_config_file, Settings};
pub use corpus::{load_corpora, load_graph6_file, CorpusEntry};
pub use decide::{resolve_input, run_decide, Task};
pub use lemmas::{check_lemmas, FACTOR_PAIRS};
pub use report::{FailureRecord, ReportBuilder, VerificationReport};
pub use theorem4::check_theorem4;
pub use theorem8::{check_theorem8_structure, StructureGrid};
