use core::fmt;

/// Errors produced by staircase arithmetic and family construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A checked exponent operation exceeded the effective ceiling.
    ExponentOverflow {
        /// The ceiling in force when the overflow happened.
        limit: u64,
    },
    /// The zero ideal has no degree.
    ZeroIdeal,
    /// The operation requires an ideal of finite colength (one containing a
    /// pure power of `x` and a pure power of `y`).
    NotMPrimary,
    /// A 1-based component index was outside `1..=m`.
    IndexOutOfRange { index: usize, len: usize },
    /// Family parameters violate one of their invariants.
    InvalidParams(ParamsError),
    /// An equigenerated generator description was malformed.
    BadEquigenerated(&'static str),
}

/// Which family-parameter invariant failed. Indices are 1-based to match
/// the `p_1, a_2, ...` naming used in messages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamsError {
    /// `m = 0`: a family needs at least one component.
    NoComponents,
    /// `a` must list exactly `m - 1` values (`a_2 ..= a_m`).
    LengthMismatch { p_len: usize, a_len: usize },
    /// Every `p_i` must be at least 2.
    PTooSmall { index: usize, value: u64 },
    /// Every `a_i` must be at least 2.
    ATooSmall { index: usize, value: u64 },
    /// `p_1 = (a_i + 1) * p_i` failed for this `i`.
    RatioBroken {
        index: usize,
        p1: u64,
        pi: u64,
        ai: u64,
    },
    /// `p_2 + ... + p_{m-1} < p_1` failed.
    MiddleSumTooLarge { sum: u64, p1: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ExponentOverflow { limit } => {
                write!(f, "exponent overflow: a result exceeds the ceiling {limit}")
            }
            Error::ZeroIdeal => write!(f, "the zero ideal has no degree"),
            Error::NotMPrimary => write!(
                f,
                "ideal is not (x, y)-primary: it must contain a pure power of x and a pure power of y"
            ),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "component index {index} out of range 1..={len}")
            }
            Error::InvalidParams(e) => write!(f, "invalid family parameters: {e}"),
            Error::BadEquigenerated(reason) => {
                write!(f, "invalid equigenerated description: {reason}")
            }
        }
    }
}

impl fmt::Display for ParamsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamsError::NoComponents => write!(f, "m must be at least 1"),
            ParamsError::LengthMismatch { p_len, a_len } => write!(
                f,
                "p has {p_len} entries so a must have {} (a_2..=a_m), got {a_len}",
                p_len - 1
            ),
            ParamsError::PTooSmall { index, value } => {
                write!(f, "p_{index} = {value} but every p_i must be >= 2")
            }
            ParamsError::ATooSmall { index, value } => {
                write!(f, "a_{index} = {value} but every a_i must be >= 2")
            }
            ParamsError::RatioBroken { index, p1, pi, ai } => write!(
                f,
                "p1 != (a_{index}+1)*p_{index} (p1={p1}, p_{index}={pi}, a_{index}={ai})"
            ),
            ParamsError::MiddleSumTooLarge { sum, p1 } => {
                write!(f, "p_2+...+p_(m-1) = {sum} must be < p1 = {p1}")
            }
        }
    }
}

impl core::error::Error for Error {}
impl core::error::Error for ParamsError {}
