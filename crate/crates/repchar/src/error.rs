use thiserror::Error;

use crate::weyl_b4::DynkinLabel;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not exactly divisible: {0}")]
    NotDivisible(String),

    #[error("antisymmetric-power sum is not integral after dividing by {0}")]
    NotIntegral(u32),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("polynomial is not symmetric under u -> 1/u")]
    NotUSymmetric,

    #[error("instance too large for brute-force enumeration: {0}")]
    SizeGuard(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("golden data: {0}")]
    Golden(String),

    #[error("character of {label} failed: {source}")]
    Character {
        label: DynkinLabel,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
