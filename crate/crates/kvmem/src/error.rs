//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    #[error("{op}: expected a scalar, got shape {shape:?}")]
    NotScalar { op: &'static str, shape: Vec<usize> },

    #[error("invalid tensor: shape {shape:?} does not match {len} data values")]
    ShapeDataMismatch { shape: Vec<usize>, len: usize },

    #[error("invalid tensor: dimension of size zero in shape {shape:?}")]
    ZeroDim { shape: Vec<usize> },

    #[error("{op}: node {id} is not on the tape (len {len})")]
    NotOnTape { op: &'static str, id: usize, len: usize },

    #[error("target token {target} out of range for vocabulary of {vocab}")]
    TargetOutOfRange { target: usize, vocab: usize },

    #[error("token id {id} out of range for vocabulary of {vocab}")]
    TokenOutOfRange { id: usize, vocab: usize },

    #[error("sequence of length {len} exceeds max_seq {max_seq}")]
    SequenceTooLong { len: usize, max_seq: usize },

    #[error("empty token sequence")]
    EmptySequence,

    #[error("invalid model config: {reason}")]
    InvalidConfig { reason: String },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: String },

    #[error("non-finite gradient in parameter `{param}`")]
    NonFiniteGradient { param: String },

    #[error("unknown word `{word}` (closed vocabulary)")]
    UnknownWord { word: String },

    #[error("infeasible world counts: {reason}")]
    InfeasibleWorld { reason: String },

    #[error("triplet ({subject}, {relation}, {object}) not present in world")]
    TripletNotInWorld {
        subject: usize,
        relation: usize,
        object: usize,
    },

    #[error("vocabulary mismatch: model expects {model_vocab} tokens, world has {world_vocab}")]
    VocabMismatch {
        model_vocab: usize,
        world_vocab: usize,
    },

    #[error("training diverged at epoch {epoch}: loss is not finite")]
    Diverged { epoch: usize },

    #[error("invalid edit request: {reason}")]
    InvalidEditRequest { reason: String },

    #[error("edit precondition failed: {reason}")]
    EditPrecondition { reason: String },

    #[error("invalid lora spec: {reason}")]
    InvalidLoraSpec { reason: String },

    #[error("task `{task}` has an empty {split} split")]
    EmptyTaskSplit { task: String, split: &'static str },

    #[error("edit {edit} is missing a `{kind}` prompt in its outcomes")]
    MissingPromptKind { edit: usize, kind: &'static str },

    #[error("world file: {reason}")]
    WorldFormat { reason: String },

    #[error("checkpoint: {reason}")]
    CheckpointFormat { reason: String },

    #[error("invalid config field `{field}`: {reason}")]
    ConfigField { field: &'static str, reason: String },

    #[error("missing input artifact: {path}")]
    MissingArtifact { path: String },

    #[error("output artifact already exists: {path}")]
    ArtifactExists { path: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
