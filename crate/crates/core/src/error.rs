use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Precondition failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Row lengths of a diagram must be positive and weakly decreasing.
    InvalidDiagram {
        index: usize,
    },
    /// Entries of a character must be weakly increasing.
    NotDominant {
        index: usize,
    },
    /// The diagram has more rows than the rank allows.
    TooManyRows {
        rows: usize,
        max: usize,
    },
    /// Only polynomial representations are handled.
    NegativeWeight {
        index: usize,
        value: i64,
    },
    /// A j-sequence must be weakly increasing, non-negative and fit its ambient length.
    InvalidSequence {
        index: usize,
    },
    SequenceTooLong {
        len: usize,
        ambient: usize,
    },
    AmbientMismatch {
        left: usize,
        right: usize,
    },
    /// A j-sequence entry exceeds the allowed top value.
    BoundExceeded {
        index: usize,
        value: i64,
        bound: i64,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// The strip transform needs a full first column.
    NotFullColumn {
        height: usize,
        rank: usize,
    },
    /// A dimension vector (or a difference of them) went negative.
    NegativeDimension {
        component: &'static str,
        value: i64,
    },
    /// Framing multiplicity must be 0 or 1.
    InvalidFraming {
        value: i64,
    },
    InvalidWallIndex {
        m: i64,
    },
    /// Grassmannian flip data needs `a >= b`.
    InvalidSetup {
        a: usize,
        b: usize,
    },
    /// Summands are only defined for `c >= b`.
    BlockBelowBase {
        c: usize,
        b: usize,
    },
    /// A character outside the block `B_c(d)`.
    OutsideBlock {
        index: usize,
        value: i64,
        bound: i64,
    },
    StratumOutOfRange {
        index: usize,
        count: usize,
    },
    WedgeDegreeTooLarge {
        k: usize,
        max: usize,
    },
    /// A series term with a negative exponent after a coordinate change.
    NegativeExponent {
        e0: u32,
        e1: u32,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDiagram { index } => {
                write!(
                    f,
                    "row {index} breaks the weakly decreasing positive row condition"
                )
            }
            Error::NotDominant { index } => {
                write!(f, "character entry {index} is smaller than its predecessor")
            }
            Error::TooManyRows { rows, max } => {
                write!(f, "diagram has {rows} rows but at most {max} are allowed")
            }
            Error::NegativeWeight { index, value } => {
                write!(
                    f,
                    "entry {index} is negative ({value}); only polynomial weights are supported"
                )
            }
            Error::InvalidSequence { index } => {
                write!(f, "sequence entry {index} is negative or decreasing")
            }
            Error::SequenceTooLong { len, ambient } => {
                write!(
                    f,
                    "sequence of length {len} does not fit ambient length {ambient}"
                )
            }
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient lengths differ ({left} vs {right})")
            }
            Error::BoundExceeded {
                index,
                value,
                bound,
            } => {
                write!(
                    f,
                    "sequence entry {index} is {value}, above the bound {bound}"
                )
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
            Error::NotFullColumn { height, rank } => {
                write!(
                    f,
                    "first column has height {height}, expected a full column of height {rank}"
                )
            }
            Error::NegativeDimension { component, value } => {
                write!(f, "component {component} is negative ({value})")
            }
            Error::InvalidFraming { value } => {
                write!(f, "framing dimension must be 0 or 1, got {value}")
            }
            Error::InvalidWallIndex { m } => write!(f, "wall index must be at least 1, got {m}"),
            Error::InvalidSetup { a, b } => write!(f, "flip data needs a >= b, got a={a}, b={b}"),
            Error::BlockBelowBase { c, b } => write!(f, "window width c={c} is below b={b}"),
            Error::OutsideBlock {
                index,
                value,
                bound,
            } => {
                write!(
                    f,
                    "character entry {index} is {value}, outside [0, {bound}]"
                )
            }
            Error::StratumOutOfRange { index, count } => {
                write!(f, "stratum index {index} out of range (there are {count})")
            }
            Error::WedgeDegreeTooLarge { k, max } => {
                write!(f, "exterior degree {k} exceeds dimension {max}")
            }
            Error::NegativeExponent { e0, e1 } => {
                write!(
                    f,
                    "term at ({e0}, {e1}) has no image under the coordinate change"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
