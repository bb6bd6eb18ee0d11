use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document at {location}: {reason}")]
    Malformed { location: String, reason: String },

    #[error("unknown branch {branch:?} at {location}")]
    UnknownBranch { branch: String, location: String },

    #[error("duplicate branch {0:?}")]
    DuplicateBranch(String),

    #[error("zero covering degree at {location}")]
    ZeroDegree { location: String },

    #[error("surface needs at least one {0}")]
    Empty(&'static str),

    #[error("degree list is empty")]
    EmptyDegrees,

    #[error("degree p{index} = {value} must be at least 2")]
    DegreeTooSmall { index: usize, value: String },

    #[error("{name} = {value} must be greater than 1")]
    ArgumentTooSmall { name: &'static str, value: String },

    #[error("{name} = {value} must be at least 1")]
    NotPositive { name: &'static str, value: String },

    #[error("{name} = {value} exceeds the supported bound 2^31")]
    ArgumentTooLarge { name: &'static str, value: String },

    #[error("gcd(p1,p2,p3) = {0} > 1")]
    NotCoprime(String),

    #[error("ps - qr = {0}, expected +1 or -1")]
    NotUnimodular(String),

    #[error("slope (0, 0) is not a curve")]
    ZeroSlope,

    #[error("invalid braid token {0:?}")]
    BraidToken(String),

    #[error("braid generator s{generator} out of range for {strands} strands")]
    BraidGenerator { generator: usize, strands: usize },

    #[error("braid is not pure: its closure has fewer than 3 components")]
    NonPureBraid,
}
