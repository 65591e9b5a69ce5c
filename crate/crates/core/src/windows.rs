//! Window subcategories at a conifold wall `W_m`.
//!
//! Near a polystable point `R_inf ⊕ (V ⊗ S_m)` with `dim V = d`, the moduli stack
//! is modelled by the Ext-quiver: `a` arrows into `V`, `b` arrows out of it and
//! `2(m² - m)` loops. Half of the loops form `W = End_0(V) ⊗ C^{m²-m}`, which
//! widens each window by a correction `γ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::diagrams::{
    enumerate_jseqs, pair_weight, weight_witnesses, Character, JSequence, Tableau,
};
use crate::flip::{gl_weights, minus_cocharacter, plus_cocharacter, standard_weights, Side};
use crate::interval::Interval;
use crate::quiver::{ext_quiver_data, max_multiple, DimVec, ExtQuiverData, Wall, WallFamily};
use crate::{Error, Rational, Result};

/// Multiplicity space dimension `m² - m` of `W`.
pub fn loop_scale(m: i64) -> i64 {
    m * m - m
}

/// `⟨λ, W^{λ>0}⟩` for `W = End_0(V) ⊗ C^{m²-m}`.
pub fn gamma(lambda: &[i64], m: i64) -> i64 {
    let mut roots = 0;
    for (j, x) in lambda.iter().enumerate() {
        for (k, y) in lambda.iter().enumerate() {
            if j != k && x > y {
                roots += x - y;
            }
        }
    }
    loop_scale(m) * roots
}

/// Pairings of `λ` with the weights of `W`, with multiplicity.
pub fn w_pairings(lambda: &[i64], m: i64) -> Vec<i64> {
    let scale = loop_scale(m).max(0) as usize;
    let d = lambda.len();
    let mut out = Vec::new();
    for j in 0..d {
        for k in 0..d {
            if j != k {
                out.extend(core::iter::repeat_n(lambda[j] - lambda[k], scale));
            }
        }
    }
    out.extend(core::iter::repeat_n(0, d.saturating_sub(1) * scale));
    out
}

/// All values of `⟨λ, w⟩` over weights `w` of `∧^k` of a representation whose
/// weights pair with `λ` to `pairings`.
pub fn wedge_pairings(pairings: &[i64], k: usize) -> Result<BTreeSet<i64>> {
    if k > pairings.len() {
        return Err(Error::WedgeDegreeTooLarge {
            k,
            max: pairings.len(),
        });
    }
    let mut groups: BTreeMap<i64, usize> = BTreeMap::new();
    for &p in pairings {
        *groups.entry(p).or_insert(0) += 1;
    }
    // reach[j] = sums attainable with j chosen weights
    let mut reach: Vec<BTreeSet<i64>> = (0..=k).map(|_| BTreeSet::new()).collect();
    reach[0].insert(0);
    for (&value, &count) in &groups {
        let mut next = reach.clone();
        for (j, sums) in reach.iter().enumerate() {
            for t in 1..=count.min(k - j) {
                for &s in sums {
                    next[j + t].insert(s + value * t as i64);
                }
            }
        }
        reach = next;
    }
    Ok(core::mem::take(&mut reach[k]))
}

/// A polystable point on `W_m` together with its Ext-quiver data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WallWindowSetup {
    pub v0: i64,
    pub v1: i64,
    pub m: i64,
    pub d: usize,
    pub data: ExtQuiverData,
}

impl WallWindowSetup {
    pub fn new(v0: i64, v1: i64, m: i64, d: usize) -> Result<Self> {
        let data = ext_quiver_data(v0, v1, m, d as i64)?;
        Ok(WallWindowSetup { v0, v1, m, d, data })
    }

    /// `dim W = (d² - 1)(m² - m)`.
    pub fn w_dim(&self) -> usize {
        (self.d * self.d).saturating_sub(1) * loop_scale(self.m) as usize
    }

    /// Weights of the local model `V^a ⊕ (V^∨)^b ⊕ End(V)^{2(m²-m)}`.
    pub fn local_weights(&self) -> Result<Vec<Vec<i64>>> {
        let count = |component: &'static str, value: i64| {
            usize::try_from(value).map_err(|_| Error::NegativeDimension { component, value })
        };
        let a = count("a", self.data.a)?;
        let b = count("b", self.data.b)?;
        let mut out = standard_weights(self.d, a, 1);
        out.extend(standard_weights(self.d, b, -1));
        for _ in 0..self.data.c {
            out.extend(gl_weights(self.d));
        }
        Ok(out)
    }
}

/// `m_i` for the window `[m_i, m_i + η)` on the given side.
pub fn window_offsets(
    setup: &WallWindowSetup,
    side: Side,
    eta: i64,
    chi0_pairing: i64,
) -> Rational {
    let base = setup.data.base;
    let slope = match side {
        Side::Plus => Rational::new(base + setup.m, 2),
        Side::Minus => Rational::new(base, 2),
    };
    Rational::new(-eta, 2) + slope * chi0_pairing
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallStratum {
    pub index: usize,
    pub side: Side,
    pub lambda: Vec<i64>,
    pub eta: i64,
    pub gamma: i64,
    /// `⟨λ, det⟩`.
    pub chi0_pairing: i64,
    pub window: Interval,
}

pub fn wall_strata(setup: &WallWindowSetup, side: Side) -> Result<Vec<WallStratum>> {
    let y = setup.local_weights()?;
    let g = gl_weights(setup.d);
    let d = setup.d;
    Ok((0..d)
        .map(|i| {
            let lambda = match side {
                Side::Plus => plus_cocharacter(i, d),
                Side::Minus => minus_cocharacter(i, d),
            };
            let eta = crate::flip::generic_eta(&lambda, &y, &g);
            let chi0_pairing = lambda.iter().sum();
            let start = window_offsets(setup, side, eta, chi0_pairing);
            WallStratum {
                index: i,
                side,
                gamma: gamma(&lambda, setup.m),
                lambda,
                eta,
                chi0_pairing,
                window: Interval::half_open(start, eta),
            }
        })
        .collect())
}

/// Outcome of checking one `(χ, k, i)` triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCertificate {
    pub chi: Character,
    pub k: usize,
    pub stratum: usize,
    pub interval: Interval,
    pub pass: bool,
    /// Whether `∧^k W` was enumerated exactly or replaced by `[-γ, γ]`.
    pub exact: bool,
    /// The checked weight closest to (or furthest beyond) the interval boundary.
    pub worst_weight: i64,
    /// A tableau of `V(χ)` realising the `V(χ)` part of `worst_weight`.
    pub witness_tableau: Tableau,
    /// Smallest and largest checked weights.
    pub range: (i64, i64),
    /// Extremes allowed by `0 <= x_j <= a - d` and `|w| <= γ` alone.
    pub bound_range: (i64, i64),
    pub bound_pass: bool,
}

/// Ranks weights so that the minimum is the worst one: outside before inside,
/// then by distance to the boundary.
fn badness(interval: &Interval, x: i64) -> (bool, Rational) {
    let x = Rational::from_integer(x);
    (interval.contains(x), interval.slack(x))
}

/// Checks that every `λ_i`-weight of `V(χ) ⊗ ∧^k W ⊗ det^{d(m²-m)}` lies in
/// the side-`+` window of stratum `i`.
pub fn verify_koszul_window(
    setup: &WallWindowSetup,
    chi: &Character,
    k: usize,
    i: usize,
) -> Result<WindowCertificate> {
    let d = setup.d;
    if chi.rank() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            found: chi.rank(),
        });
    }
    let a = usize::try_from(setup.data.a).map_err(|_| Error::NegativeDimension {
        component: "a",
        value: setup.data.a,
    })?;
    chi.check_block(a)?;
    if k > setup.w_dim() {
        return Err(Error::WedgeDegreeTooLarge {
            k,
            max: setup.w_dim(),
        });
    }
    if i >= d {
        return Err(Error::StratumOutOfRange { index: i, count: d });
    }
    let strata = wall_strata(setup, Side::Plus)?;
    let stratum = &strata[i];
    let interval = stratum.window;
    let shift = d as i64 * loop_scale(setup.m) * stratum.chi0_pairing;
    let g = stratum.gamma;

    let exact = d <= 3;
    let w_values: BTreeSet<i64> = if exact {
        wedge_pairings(&w_pairings(&stratum.lambda, setup.m), k)?
    } else {
        [-g, g].into_iter().collect()
    };

    let witnesses = weight_witnesses(chi)?;
    let mut worst: Option<(i64, &Tableau)> = None;
    let mut range = (i64::MAX, i64::MIN);
    for (weight, tableau) in &witnesses {
        let base = pair_weight(weight, &stratum.lambda) + shift;
        for &w in &w_values {
            let total = base + w;
            range = (range.0.min(total), range.1.max(total));
            let replace = match worst {
                None => true,
                Some((cur, _)) => badness(&interval, total) < badness(&interval, cur),
            };
            if replace {
                worst = Some((total, tableau));
            }
        }
    }
    let (worst_weight, witness) = worst.expect("a Schur module has at least one weight");
    let pass = interval.contains_int(range.0) && interval.contains_int(range.1);

    let bound_range = (-((d - i) as i64) * (a - d) as i64 - g + shift, g + shift);
    let bound_pass = interval.contains_int(bound_range.0) && interval.contains_int(bound_range.1);

    Ok(WindowCertificate {
        chi: chi.clone(),
        k,
        stratum: i,
        interval,
        pass,
        exact,
        worst_weight,
        witness_tableau: witness.clone(),
        range,
        bound_range,
        bound_pass,
    })
}

/// Certificates for every `χ` in `B_a(d)`, every `k <= dim W` and every stratum.
pub fn verify_block(setup: &WallWindowSetup) -> Result<Vec<WindowCertificate>> {
    let a = usize::try_from(setup.data.a).unwrap_or(0);
    let mut out = Vec::new();
    for chi in crate::diagrams::enumerate_block(a, setup.d) {
        for k in 0..=setup.w_dim() {
            for i in 0..setup.d {
                out.push(verify_koszul_window(setup, &chi, k, i)?);
            }
        }
    }
    Ok(out)
}

/// Weight and degree bookkeeping for one categorified Hall product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistDescriptor {
    pub l: usize,
    pub jseq: JSequence,
    /// `j_i + (2i - 1)(m² - m)` for `i = 1..l`.
    pub per_factor: Vec<i64>,
    /// `j_l + 2l(m² - m)`, the twist on the remaining factor.
    pub tail: i64,
    /// `(2i - d - 1)(m² - m)` for `i = 1..l`.
    pub knoerrer: Vec<i64>,
    /// `l(2d - l - 1)/2 · (m² - m)`.
    pub shift: i64,
}

pub fn hall_twists(l: usize, jseq: &JSequence, m: i64, d: usize) -> Result<TwistDescriptor> {
    if jseq.len() != l {
        return Err(Error::LengthMismatch {
            expected: l,
            found: jseq.len(),
        });
    }
    if l > d {
        return Err(Error::SequenceTooLong { len: l, ambient: d });
    }
    let bound = m - l as i64;
    if let Some((index, &value)) = jseq.values().iter().enumerate().find(|(_, &j)| j > bound) {
        return Err(Error::BoundExceeded {
            index,
            value,
            bound,
        });
    }
    let scale = loop_scale(m);
    let (li, di) = (l as i64, d as i64);
    let per_factor = jseq
        .values()
        .iter()
        .zip(1i64..)
        .map(|(j, i)| j + (2 * i - 1) * scale)
        .collect();
    let tail = jseq.top().map_or(0, |j| j + 2 * li * scale);
    let knoerrer = (1..=li).map(|i| (2 * i - di - 1) * scale).collect();
    let twice = li * (2 * di - li - 1);
    debug_assert_eq!(twice % 2, 0);
    Ok(TwistDescriptor {
        l,
        jseq: jseq.clone(),
        per_factor,
        tail,
        knoerrer,
        shift: twice / 2 * scale,
    })
}

/// One summand of the window across `W_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConifoldSummand {
    pub l: usize,
    pub jseq: JSequence,
    /// `v - l·s_m`.
    pub child: DimVec,
    pub twists: TwistDescriptor,
}

/// Summands obtained by crossing `W_m` at dimension vector `v`, largest `j`-sequence first.
///
/// Sequences live in ambient length `l_max`, the largest `l` with `v - l·s_m >= 0`.
pub fn conifold_sod(v0: i64, v1: i64, m: i64) -> Result<Vec<ConifoldSummand>> {
    let wall = Wall::new(WallFamily::W, m)?;
    DimVec::unframed(v0, v1).check_nonnegative()?;
    let l_max = max_multiple(v0, v1, m) as usize;
    let s = wall.stable_dimvec();
    let mut out = Vec::new();
    for l in 0..=l_max {
        let child = DimVec::unframed(v0, v1) - l as i64 * s;
        for jseq in enumerate_jseqs(l, m - l as i64, l_max)? {
            let twists = hall_twists(l, &jseq, m, l_max)?;
            out.push(ConifoldSummand {
                l,
                jseq,
                child,
                twists,
            });
        }
    }
    out.sort_by_key(|s| Reverse(s.jseq.padded()));
    Ok(out)
}

/// Number of point-like summands reached from `v` by crossing `W_M, ..., W_1`
/// down to the empty chamber.
pub fn sod_count(v0: i64, v1: i64, walls: i64) -> Result<BigUint> {
    let mut memo = BTreeMap::new();
    sod_count_memo(v0, v1, walls, &mut memo)
}

fn sod_count_memo(
    v0: i64,
    v1: i64,
    walls: i64,
    memo: &mut BTreeMap<(i64, i64, i64), BigUint>,
) -> Result<BigUint> {
    if walls == 0 {
        return Ok(if v0 == 0 && v1 == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    if let Some(n) = memo.get(&(v0, v1, walls)) {
        return Ok(n.clone());
    }
    let mut total = BigUint::zero();
    for summand in conifold_sod(v0, v1, walls)? {
        total += sod_count_memo(summand.child.v0, summand.child.v1, walls - 1, memo)?;
    }
    memo.insert((v0, v1, walls), total.clone());
    Ok(total)
}
