use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n={0} unsupported (see prior work)")]
    UnsupportedDegreeThree(i64),
    #[error("embedding degree n={0} is not supported here")]
    UnsupportedDegree(i64),
    #[error("quadratic numbers over different discriminants ({0} and {1})")]
    MixedDiscriminant(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("speciality is only meaningful for a degree-zero twist (degree {0})")]
    InvalidSpeciality(String),
    #[error("sign scan did not settle within {0} terms")]
    ScanBudgetExceeded(usize),
    #[error("charge ({0}, {1}) does not give a Koszul module")]
    NotKoszul(String, String),
    #[error("series has a pole at t = 0")]
    PoleAtZero,
    #[error("power series coefficient of t^{0} is not an integer")]
    NonIntegralCoefficient(usize),
    #[error("closed form does not evaluate to an integer at j={0}")]
    NonIntegralValue(i64),
    #[error("generator count {0} is odd")]
    OddGeneratorCount(String),
    #[error("the zero charge has no fundamental-domain representative")]
    ZeroCharge,
    #[error("orbit of ({0}, {1}) meets the fundamental domain {2} times")]
    DomainAmbiguity(String, String, usize),
    #[error("the Atiyah flag requires degree 0 in the fundamental domain (got degree {0})")]
    InvalidAtiyahFlag(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Gate used by every entry point that takes an embedding degree.
    pub(crate) fn unsupported(n: i64) -> Self {
        if n == 3 {
            Error::UnsupportedDegreeThree(n)
        } else {
            Error::UnsupportedDegree(n)
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
