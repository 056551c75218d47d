use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("leading form of the zero element")]
    ZeroElement,

    #[error("images violate the defining relation: [imgY, imgX] = {commutator}, expected {expected}")]
    InvalidRelation { commutator: String, expected: i64 },

    #[error("map is not an involution")]
    NotInvolutive,

    #[error("family constraint violated: a^2 - b^2 = {found}, expected {expected}")]
    ConstraintViolated { found: String, expected: i64 },

    #[error("map is not in family form: {0}")]
    NotFamilyForm(String),

    #[error("element does not commute with the generator")]
    NotCentralizing,

    #[error("element is not a polynomial in the generator (stuck at remainder {remainder})")]
    NotInPolynomialAlgebra { remainder: String },

    #[error("element is constant")]
    ConstantElement,

    #[error("selected image is not {parity} under the involution")]
    ParityViolated { parity: String },

    #[error("invalid image pair: [Q, P] = {commutator}, expected 1")]
    InvalidPair { commutator: String },

    #[error("Jacobian is not a nonzero constant: {jacobian}")]
    JacobianNotConstant { jacobian: String },

    #[error("degree peeling stuck: top forms {top_p} and {top_q}")]
    PeelingStuck { top_p: String, top_q: String },

    #[error("map is not an involution (order-2 automorphism)")]
    NotInvolution,

    #[error("involution classification failed: {0}")]
    ClassificationFailed(String),

    #[error("generator is not invertible: {0}")]
    NotInvertible(String),

    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("{0}")]
    Parse(#[from] ParseError),
}

impl Error {
    /// Stable kebab-case name of the variant, for machine-readable reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::ZeroElement => "zero-element",
            Error::InvalidRelation { .. } => "invalid-relation",
            Error::NotInvolutive => "not-involutive",
            Error::ConstraintViolated { .. } => "constraint-violated",
            Error::NotFamilyForm(_) => "not-family-form",
            Error::NotCentralizing => "not-centralizing",
            Error::NotInPolynomialAlgebra { .. } => "not-in-polynomial-algebra",
            Error::ConstantElement => "constant-element",
            Error::ParityViolated { .. } => "parity-violated",
            Error::InvalidPair { .. } => "invalid-pair",
            Error::JacobianNotConstant { .. } => "jacobian-not-constant",
            Error::PeelingStuck { .. } => "peeling-stuck",
            Error::NotInvolution => "not-involution",
            Error::ClassificationFailed(_) => "classification-failed",
            Error::NotInvertible(_) => "not-invertible",
            Error::DegreeCap { .. } => "degree-cap",
            Error::Parse(_) => "parse-error",
        }
    }
}

/// Parse failure with the byte offset and the set of tokens that would
/// have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
