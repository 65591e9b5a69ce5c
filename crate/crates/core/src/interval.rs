//! Half-open rational intervals with explicit endpoint flags.
//!
//! Window conditions ask that weights lie in `[m, m + eta)`. Offsets of the form
//! `m + epsilon` with `0 < epsilon << 1` are kept symbolic: shifting a half-open
//! interval by an infinitesimal turns `[m, m + eta)` into `(m, m + eta]`.

use core::fmt;

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
}

impl Interval {
    /// `[start, start + width)`.
    pub fn half_open(start: Rational, width: i64) -> Self {
        Interval {
            lo: start,
            lo_closed: true,
            hi: start + width,
            hi_closed: false,
        }
    }

    pub fn contains(&self, x: Rational) -> bool {
        let above = if self.lo_closed {
            x >= self.lo
        } else {
            x > self.lo
        };
        let below = if self.hi_closed {
            x <= self.hi
        } else {
            x < self.hi
        };
        above && below
    }

    pub fn contains_int(&self, x: i64) -> bool {
        self.contains(Rational::from_integer(x))
    }

    /// Signed distance `min(x - lo, hi - x)`; negative outside the closure.
    /// An open endpoint gives zero slack while not being contained, so callers
    /// ranking weights should order by `(contains, slack)`.
    pub fn slack(&self, x: Rational) -> Rational {
        let to_lo = x - self.lo;
        let to_hi = self.hi - x;
        if to_lo < to_hi {
            to_lo
        } else {
            to_hi
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.lo, self.hi)
    }
}

/// A window offset `m_i`, possibly with an infinitesimal `+ epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowOffset {
    pub value: Rational,
    pub plus_epsilon: bool,
}

impl WindowOffset {
    pub fn exact(value: Rational) -> Self {
        WindowOffset {
            value,
            plus_epsilon: false,
        }
    }

    pub fn with_epsilon(value: Rational) -> Self {
        WindowOffset {
            value,
            plus_epsilon: true,
        }
    }

    /// The window `[m_i, m_i + eta)` this offset defines.
    pub fn window(&self, eta: i64) -> Interval {
        let base = Interval::half_open(self.value, eta);
        if self.plus_epsilon {
            Interval {
                lo_closed: false,
                hi_closed: true,
                ..base
            }
        } else {
            base
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn half_open_membership() {
        let w = Interval::half_open(r(-19, 2), 8);
        assert!(!w.contains_int(-10));
        assert!(w.contains_int(-9));
        assert!(w.contains_int(-2));
        assert!(!w.contains_int(-1));
        assert!(w.contains(r(-5, 2)));
        assert!(!w.contains(r(-3, 2)));
    }

    #[test]
    fn epsilon_shift_flips_endpoints() {
        let w = WindowOffset::with_epsilon(r(-6, 1)).window(6);
        assert!(!w.contains_int(-6));
        assert!(w.contains_int(-5));
        assert!(w.contains_int(0));
        assert!(!w.contains_int(1));
        // a non-integral offset behaves the same with or without epsilon on integers
        let a = WindowOffset::with_epsilon(r(-7, 2)).window(3);
        let b = WindowOffset::exact(r(-7, 2)).window(3);
        for x in -6..4 {
            assert_eq!(a.contains_int(x), b.contains_int(x));
        }
    }

    #[test]
    fn slack_sign() {
        let w = Interval::half_open(r(0, 1), 3);
        assert!(w.slack(r(1, 1)) > r(0, 1));
        assert_eq!(w.slack(r(0, 1)), r(0, 1));
        assert_eq!(w.slack(r(3, 1)), r(0, 1));
        assert!(!w.contains(r(3, 1)));
        assert!(w.slack(r(5, 1)) < r(0, 1));
    }
}
