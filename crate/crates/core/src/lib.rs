//! Credit spaces and proportion indicators for co-authored publications.
//!
//! A set of articles `A` defines four credit spaces, one tuple per unit of
//! credit: articles (`P_A`), authorships (`cwP_A`), citations (`C_A`) and
//! author-citation pairs (`cwC_A`). Comparing a subfield's share of the plain
//! spaces with its share of the co-author weighted ones shows how much total
//! author counting and "authors times citations" credit shift credit toward
//! heavily collaborative subfields.
//!
//! ```
//! use coauthor_credit::{indicators, Article, CountingMethod, Corpus, Mode};
//!
//! let corpus = Corpus::validate([
//!     Article::new("solo", "X", ["s"], 10)?,
//!     Article::new("team", "Y", ["t1", "t2", "t3"], 10)?,
//! ])?;
//! let report = indicators::report(&corpus, Mode::Citation, &CountingMethod::Total)?;
//! let ratios: Vec<String> = report
//!     .rows
//!     .iter()
//!     .map(|row| row.ratio.as_ref().unwrap().to_string())
//!     .collect();
//! assert_eq!(ratios, ["1/2", "3/2"]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! All arithmetic is exact ([`num_rational::BigRational`]); decimals only
//! appear when a value is rendered with [`decimal::format_decimal`].
//!
//! The guide under `book/` walks through the concepts; its code listings are
//! compiled and run as doctests of this crate.

pub mod corpus;
pub mod counting;
pub mod credit;
pub mod decimal;
pub mod indicators;
pub mod ingest;

pub use corpus::{restrict_authors, Article, AuthorGroup, AuthorId, Corpus, CorpusError};
pub use counting::{CountingError, CountingMethod, Weight, WeightTable};
pub use credit::{build_space, CreditPoint, CreditSpace, CreditSpaceKind};
pub use indicators::{IndicatorError, IndicatorReport, Mode, Proportion, SubfieldRow};
pub use ingest::{GeneratorConfig, IngestError};

// The guide's listings run as doctests: each chapter is attached to an empty
// module so a failure points at its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/credit-spaces.md")]
    mod credit_spaces {}
    #[doc = include_str!("../../../book/src/counting-methods.md")]
    mod counting_methods {}
    #[doc = include_str!("../../../book/src/indicators.md")]
    mod indicators {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/departments.md")]
    mod departments {}
    #[doc = include_str!("../../../book/src/published-tables.md")]
    mod published_tables {}
    #[doc = include_str!("../../../book/src/file-formats.md")]
    mod file_formats {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
