use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty bitstring")]
    EmptyBitString,

    #[error("invalid binary digit {0:?}")]
    InvalidDigit(char),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("dictionary case undefined")]
    DictionaryCaseUndefined,

    #[error("invalid family parameter")]
    InvalidFamilyParam,

    #[error("kernel index {index} out of range [0, {max}]")]
    KernelIndexOutOfRange { index: u32, max: u32 },

    #[error("kernel classes not distinct: rows {first} and {second} coincide")]
    KernelClassesNotDistinct { first: usize, second: usize },

    #[error("kernel not closed: child of class {class} on input {bit} matches no class")]
    KernelNotClosed { class: usize, bit: u8 },

    #[error("kernel did not close within budget of {max_classes} classes")]
    KernelBudgetExceeded { max_classes: usize },

    #[error("invalid correspondence")]
    InvalidCorrespondence,

    #[error("invalid automaton: {0}")]
    InvalidDfao(String),

    #[error("theorem requires m >= 2")]
    TheoremRequiresMAtLeastTwo,

    #[error("walnut parse error: {0}")]
    WalnutParse(String),

    #[error("json parse error: {0}")]
    JsonParse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
