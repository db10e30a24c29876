use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by an identically zero field")]
    DivisionByZeroField,
    #[error("evaluation pole at t={t}, x={x}")]
    EvalPole { t: String, x: String },
    #[error("invalid spectral data: {0}")]
    InvalidSpectralData(String),
    #[error("tau function {0} vanishes identically (chain interrupted)")]
    TauZero(String),
    #[error("pivot field {0} vanishes identically")]
    PivotZero(String),
    #[error("transformation {transform} does not act on algebra {algebra}")]
    WrongAlgebra { transform: String, algebra: String },
    #[error("chain step {step}: {source}")]
    ChainStep { step: usize, source: Box<Error> },
    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    /// Process exit code: 2 for bad input, 3 for pivot/pole aborts.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidSpectralData(_) | Error::WrongAlgebra { .. } | Error::Input(_) => 2,
            Error::ChainStep { source, .. } => source.exit_code(),
            _ => 3,
        }
    }
}
