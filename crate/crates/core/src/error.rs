use thiserror::Error;

use crate::complex::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("face {0} is not in the complex")]
    FaceNotInComplex(Face),

    #[error("face {0} is not a facet of the complex")]
    NotAFacet(Face),

    #[error("skeleton dimension {requested} out of range (-1..={max})")]
    SkeletonOutOfRange { requested: isize, max: isize },

    #[error("vertex universe too small: n = {n} but {needed} vertices are required")]
    UniverseTooSmall { n: usize, needed: usize },

    #[error("operation requires a pure complex")]
    NotPure,

    #[error("operation requires a non-void complex")]
    Void,

    #[error("complex is not Cohen-Macaulay over {0}")]
    NotCohenMacaulay(String),

    #[error("{0} is not a subcomplex generated by facets of the larger complex")]
    NotFacetSubcomplex(String),

    #[error("invalid field {0:?}: expected `q` or `gf<p>` with p prime")]
    InvalidField(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degenerate ideal: {0}")]
    DegenerateIdeal(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("catalog entry `{0}`: data not bundled; supply a facet file (plain-text format, one facet per line)")]
    DataNotBundled(String),

    #[error("catalog entry `{name}` failed verification: {reason}")]
    CatalogVerification { name: String, reason: String },

    #[error("search space too large: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
