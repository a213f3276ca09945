use thiserror::Error;

/// Every failure the engine can report.
///
/// Input errors (`Parse`, `Validity`, `ZeroDenominator`, `NotCoprime`,
/// `InvalidIndex`, `InvalidSurface`, `BadDeterminant`) describe malformed
/// data. The rest are precondition failures on well-formed data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid symbol: {0}")]
    Validity(String),
    #[error("oriented-fiber comparison needs orientable spaces")]
    Mode,
    #[error("symbol is not orientable")]
    NotOriented,
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("coset limit must be at least 1")]
    LimitTooSmall,
    #[error("triangle indices must be at least 2")]
    InvalidIndex,
    #[error("lens parameters ({p},{q}) are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("gluing matrix has determinant {0}, expected +1 or -1")]
    BadDeterminant(i64),
    #[error("gluing sends the fiber to a meridian; no Seifert fibering results")]
    DegenerateGluing,
    #[error("orbit surface is not S^2 (class {0})")]
    WrongBase(String),
    #[error("excluded space: {0}")]
    ExcludedSpace(String),
    #[error("symbol is not closed and orientable")]
    NotClosedOriented,
    #[error("symbol is already orientable")]
    AlreadyOrientable,
    #[error("fiber index {mu} does not divide {lambda}")]
    IndexNotDivisible { mu: i64, lambda: i64 },
    #[error("Fuchsian quotient is finite")]
    QuotientFinite,
    #[error("cover orbit Euler characteristic {0} is odd; no orientable orbit surface")]
    OddEulerCharacteristic(i64),
    #[error("{0}")]
    Precondition(String),
    #[error("integer overflow")]
    Overflow,
}

impl Error {
    /// True for malformed input, false for precondition failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::ZeroDenominator
                | Error::Parse { .. }
                | Error::Validity(_)
                | Error::InvalidSurface(_)
                | Error::InvalidIndex
                | Error::NotCoprime { .. }
                | Error::BadDeterminant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
