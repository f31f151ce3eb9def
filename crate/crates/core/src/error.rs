use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported characteristic {0}: this family is only defined in characteristic 0")]
    UnsupportedCharacteristic(u64),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("candidate basis must be verified before it can be used for reduction")]
    MustVerifyFirst,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
