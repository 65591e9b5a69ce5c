//! Combinatorics of the Grassmannian flip `[Hom(A, V) ⊕ Hom(V, B) / GL(V)]`.
//!
//! With `a = dim A`, `b = dim B` and `d = dim V`, the two GIT quotients are
//! separated by the determinant character. Cocharacters of `GL(V)` are
//! written as exponent vectors `(λ_1, ..., λ_d)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::diagrams::{
    self, enumerate_jseqs, jseq_compare, schur_weights, Character, JSequence, YoungDiagram,
};
use crate::interval::WindowOffset;
use crate::{binomial, Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlipSetup {
    pub a: usize,
    pub b: usize,
    pub d: usize,
}

impl FlipSetup {
    pub fn new(a: usize, b: usize, d: usize) -> Result<Self> {
        if a < b {
            return Err(Error::InvalidSetup { a, b });
        }
        Ok(FlipSetup { a, b, d })
    }
}

/// Which side of the flip, i.e. which GIT chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnStratum {
    pub index: usize,
    pub side: Side,
    /// Exponents of the destabilising cocharacter.
    pub lambda: Vec<i64>,
    /// Weight of the determinant of the conormal bundle.
    pub eta: i64,
    /// Signed square of the normalised slope, `sign(w)·w²/|λ|²`.
    pub slope: Rational,
}

/// `(1, ..., 1, t^-1, ..., t^-1)` with `i` ones.
pub fn plus_cocharacter(i: usize, d: usize) -> Vec<i64> {
    let mut l = vec![0; i];
    l.resize(d, -1);
    l
}

/// `(t, ..., t, 1, ..., 1)` with `i` ones at the end.
pub fn minus_cocharacter(i: usize, d: usize) -> Vec<i64> {
    let mut l = vec![1; d - i];
    l.resize(d, 0);
    l
}

/// Unit vector `e_k` in rank `d`, scaled.
fn unit(d: usize, k: usize, s: i64) -> Vec<i64> {
    let mut w = vec![0; d];
    w[k] = s;
    w
}

/// Weights `±e_k` of `V` (or `V^∨`), each repeated `copies` times.
pub(crate) fn standard_weights(d: usize, copies: usize, sign: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(d * copies);
    for k in 0..d {
        for _ in 0..copies {
            out.push(unit(d, k, sign));
        }
    }
    out
}

/// Roots `e_j - e_k` (`j != k`) and `d` zero weights of `gl(d)`.
pub fn gl_weights(d: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            let mut w = vec![0; d];
            w[j] += 1;
            w[k] -= 1;
            out.push(w);
        }
    }
    out
}

/// Weights of `Hom(A, V) ⊕ Hom(V, B)`.
pub fn flip_weights(setup: &FlipSetup) -> Vec<Vec<i64>> {
    let mut out = standard_weights(setup.d, setup.a, 1);
    out.extend(standard_weights(setup.d, setup.b, -1));
    out
}

/// `⟨λ, (Y^∨)^{λ>0}⟩ - ⟨λ, (g^∨)^{λ>0}⟩`.
pub fn generic_eta(lambda: &[i64], y_weights: &[Vec<i64>], g_weights: &[Vec<i64>]) -> i64 {
    let positive_dual = |ws: &[Vec<i64>]| -> i64 {
        ws.iter()
            .map(|w| -diagrams::pair_weight(w, lambda))
            .filter(|&p| p > 0)
            .sum()
    };
    positive_dual(y_weights) - positive_dual(g_weights)
}

/// Strata of the unstable locus on the given side, in order of decreasing slope.
pub fn kn_strata(setup: &FlipSetup, side: Side) -> Vec<KnStratum> {
    let d = setup.d;
    let (y, g) = (flip_weights(setup), gl_weights(d));
    (0..d)
        .map(|i| {
            let (lambda, eta) = match side {
                Side::Plus => (
                    plus_cocharacter(i, d),
                    (setup.a as i64 - i as i64) * (d - i) as i64,
                ),
                Side::Minus => {
                    let l = minus_cocharacter(i, d);
                    let eta = generic_eta(&l, &y, &g);
                    (l, eta)
                }
            };
            // the polarisation is det on the + side and det^-1 on the - side
            let det_sign = if side == Side::Plus { 1 } else { -1 };
            let wt: i64 = -det_sign * lambda.iter().sum::<i64>();
            let norm: i64 = lambda.iter().map(|x| x * x).sum();
            let slope = Rational::new(wt.signum() * wt * wt, norm);
            KnStratum {
                index: i,
                side,
                lambda,
                eta,
                slope,
            }
        })
        .collect()
}

/// The window `[m_i, m_i + η_i)` for which the block `B_a(d)` (side +) or
/// `B_b(d)` (side -) is exactly captured: `(-η, 0]` and `[0, η)` respectively.
pub fn flip_offset(stratum: &KnStratum) -> WindowOffset {
    match stratum.side {
        Side::Plus => WindowOffset::with_epsilon(Rational::from_integer(-stratum.eta)),
        Side::Minus => WindowOffset::exact(Rational::from_integer(0)),
    }
}

/// True iff every weight of `V(χ)` pairs with `λ_i` inside the window of `offset`.
pub fn window_weight_check(
    chi: &Character,
    stratum: &KnStratum,
    offset: WindowOffset,
) -> Result<bool> {
    let window = offset.window(stratum.eta);
    Ok(schur_weights(chi)?
        .keys()
        .all(|w| window.contains_int(diagrams::pair_weight(w, &stratum.lambda))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionStep {
    pub delta: YoungDiagram,
    /// Boxes added to the input diagram so far.
    pub added: usize,
    /// `dim ∧^added B`.
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    /// Smallest `c >= b` with the input in `B_c(d-1)`.
    pub c: usize,
    pub steps: Vec<ResolutionStep>,
}

/// Grows `δ` column by column: first column to height `d`, then column `i`
/// to one more than the original height of column `i-1`, until more than `b`
/// boxes have been added.
pub fn resolve(delta: &YoungDiagram, d: usize, b: usize) -> Result<Resolution> {
    if delta.num_rows() >= d {
        return Err(Error::TooManyRows {
            rows: delta.num_rows(),
            max: d.saturating_sub(1),
        });
    }
    let c = b.max(delta.width() + d - 1);
    let mu = delta.columns();
    let height = |j: usize| mu.get(j).copied().unwrap_or(0);
    let mut cols = mu.clone();
    let mut steps = Vec::new();
    for i in 0.. {
        // column i (0-based) grows to d, or to the old height of column i-1 plus one
        let target = if i == 0 { d } else { height(i - 1) + 1 };
        let added = d + i - height(i);
        if added > b {
            break;
        }
        if i < cols.len() {
            cols[i] = target;
        } else {
            cols.push(target);
        }
        steps.push(ResolutionStep {
            delta: YoungDiagram::from_columns(&cols)?,
            added,
            multiplicity: binomial(b as u64, added as u64),
        });
    }
    Ok(Resolution { c, steps })
}

/// The diagram with column heights `μ_2 - 1, μ_3 - 1, ...` of a diagram
/// whose first column is full.
pub fn strip_transform(delta: &YoungDiagram, d: usize) -> Result<YoungDiagram> {
    let mu = delta.columns();
    let first = mu.first().copied().unwrap_or(0);
    if first != d {
        return Err(Error::NotFullColumn {
            height: first,
            rank: d,
        });
    }
    let rest: Vec<usize> = mu.iter().skip(1).map(|h| h - 1).collect();
    YoungDiagram::from_columns(&rest)
}

/// A block `B_c(d)`, used as the label of a summand's factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockLabel {
    pub c: usize,
    pub d: usize,
}

impl BlockLabel {
    pub fn size(&self) -> u64 {
        binomial(self.c as u64, self.d as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SodSummand {
    pub l: usize,
    pub jseq: JSequence,
    pub child: BlockLabel,
}

/// Summands of the window `B_c(d)` relative to `B_b(d-l)`, ordered so that
/// Hom from a summand to any later one vanishes.
pub fn sod_summands(setup: &FlipSetup, c: usize) -> Result<Vec<SodSummand>> {
    let (b, d) = (setup.b, setup.d);
    if c < b {
        return Err(Error::BlockBelowBase { c, b });
    }
    let mut out = Vec::new();
    for l in 0..=d {
        let bound = c as i64 - b as i64 - l as i64;
        for jseq in enumerate_jseqs(l, bound, d)? {
            out.push(SodSummand {
                l,
                jseq,
                child: BlockLabel { c: b, d: d - l },
            });
        }
    }
    out.sort_by_key(|s| Reverse(s.jseq.padded()));
    Ok(out)
}

/// Hom from the summand labelled `first` to the one labelled `second` vanishes
/// when `first` is larger in the padded order.
pub fn hom_vanishes(first: &JSequence, second: &JSequence) -> Result<bool> {
    Ok(jseq_compare(first, second)? == Ordering::Greater)
}
