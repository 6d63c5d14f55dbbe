use thiserror::Error;

use crate::feasibility::ViolationCert;
use crate::mask::Mask;
use crate::matroid::AxiomViolation;
use crate::setfun::SupermodularViolation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ground set {0} is empty")]
    EmptySide(&'static str),
    #[error("node `{0}` appears more than once")]
    DuplicateNode(String),
    #[error("{size} nodes exceed the ground-set cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("edge ({0}, {1}) is out of range")]
    EdgeOutOfRange(usize, usize),
    #[error("bigraph is not simple")]
    NotSimple,
    #[error("mask {mask:#b} is not a subset of {side}")]
    NotASubset { mask: Mask, side: &'static str },
    #[error("ground-set mismatch: {0}")]
    GroundMismatch(String),
    #[error("degree totals differ: m_S(S) = {s}, m_T(T) = {t}")]
    DegreeTotals { s: i64, t: i64 },
    #[error("rank {k} out of range for a ground set of size {n}")]
    RankOutOfRange { k: usize, n: usize },
    #[error("invalid partition matroid: {0}")]
    InvalidPartition(String),
    #[error("rank table is not a matroid: {0}")]
    NotAMatroid(AxiomViolation),
    #[error("set-function table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("set function fails the {mode} supermodularity check: {violation}")]
    NotSupermodular {
        mode: &'static str,
        violation: SupermodularViolation,
    },
    #[error("this operation needs degrees on both S and T")]
    MissingDegreesT,
    #[error("this operation needs a matroid on T")]
    MissingMatroidT,
    #[error("target rank {ell} exceeds min(r_S(S), r_T(T)) = {max}")]
    TargetRankTooLarge { ell: usize, max: usize },
    #[error("rank hypothesis violated: r_S(S) = {rs}, r_T(T) = {rt}, target {ell}")]
    RankMismatch { rs: usize, rt: usize, ell: usize },
    #[error("no simple bigraph fits the degrees at all ({0})")]
    NoSimpleRealization(Box<ViolationCert>),
    #[error("two equivalent evaluations disagree: {0}")]
    Inconsistent(String),
    #[error("positive demand on {0:#b}, which no ST-arc enters")]
    UnboundedDemand(Mask),
    #[error("V_s coincides for two nodes with different degrees")]
    AmbiguousVs,
    #[error("min-max gap: cover {cover} vs dual {dual}")]
    MinMaxGap { cover: usize, dual: i64 },
    #[error("instance is infeasible ({0})")]
    Infeasible(Box<ViolationCert>),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
