//! Exact combinatorics behind categorical wall-crossing for the resolved conifold.
//!
//! The crate is `no_std` (it needs `alloc`) and has no IO. It covers:
//!
//! * [`diagrams`]: Young diagrams in a box, dominant `GL(d)` weights, Schur-module
//!   weight multisets and the padded lexicographic order on j-sequences.
//! * [`quiver`]: numerics of the conifold quiver with a framing vertex (Euler
//!   pairing, walls, Ext-quiver dimensions, the stable pair dictionary).
//! * [`flip`]: Kempf-Ness strata of the Grassmannian flip stack, the resolution
//!   algorithm for Hall products and the semiorthogonal summand enumeration.
//! * [`windows`]: window offsets and Koszul weight checks at a conifold wall,
//!   Hall-product twists and the iterated summand count.
//! * [`series`]: truncated bivariate integer series for the DT and PT generating
//!   functions and the three-way coefficient crosscheck.
//!
//! Everything is exact: machine integers where values are small, `BigInt`
//! for series coefficients and `Ratio<i64>` for window endpoints.

#![no_std]

extern crate alloc;

pub mod diagrams;
mod error;
pub mod flip;
pub mod interval;
pub mod quiver;
pub mod series;
pub mod windows;

pub use error::{Error, Result};

/// Exact rational used for window endpoints and slopes.
pub type Rational = num_rational::Ratio<i64>;

/// `binomial(n, k)` in `u64`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(7, 6), 7);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
