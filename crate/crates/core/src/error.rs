use thiserror::Error;

/// Errors produced while configuring or running an optimization experiment.
#[derive(Debug, Error)]
pub enum Error {
    #[error("population of size {n} is too small for {strategy} (needs at least {required})")]
    PopulationTooSmall {
        strategy: &'static str,
        n: usize,
        required: usize,
    },

    #[error("unknown parameter control method `{0}`")]
    UnknownPcm(String),

    #[error("unknown hyperparameter `{name}` for method `{method}`")]
    UnknownHyperparameter { method: String, name: String },

    #[error("hyperparameter `{name}` = {value} for `{method}` is outside {range}")]
    HyperparameterOutOfRange {
        method: String,
        name: String,
        value: f64,
        range: String,
    },

    #[error("unknown mutation strategy `{0}`")]
    UnknownMutation(String),

    #[error("unknown crossover method `{0}`")]
    UnknownCrossover(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("statistics error: {0}")]
    Stats(String),
}

pub type Result<T> = std::result::Result<T, Error>;
