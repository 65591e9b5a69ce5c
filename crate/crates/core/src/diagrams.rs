//! Young diagrams, dominant weights and j-sequences.
//!
//! Characters of `GL(d)` are stored in the dominant chamber
//! `x_1 <= x_2 <= ... <= x_d`. The diagram attached to a character has
//! `x_{d-i+1}` boxes in its `i`-th row, so the largest entry is the first row.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::{Error, Result};

/// A partition, stored as positive weakly decreasing row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        for (i, &r) in rows.iter().enumerate() {
            if r == 0 || (i > 0 && r > rows[i - 1]) {
                return Err(Error::InvalidDiagram { index: i });
            }
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Builds the diagram whose `j`-th column has `cols[j]` boxes.
    /// Trailing zero columns are ignored.
    pub fn from_columns(cols: &[usize]) -> Result<Self> {
        let cols: Vec<usize> = cols.iter().copied().take_while(|&c| c > 0).collect();
        for i in 1..cols.len() {
            if cols[i] > cols[i - 1] {
                return Err(Error::InvalidDiagram { index: i });
            }
        }
        Ok(YoungDiagram {
            rows: transpose(&cols),
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column heights, weakly decreasing; `columns()[j]` is the height of column `j + 1`.
    pub fn columns(&self) -> Vec<usize> {
        transpose(&self.rows)
    }
}

fn transpose(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().take_while(|&&r| r >= j).count())
        .collect()
}

/// Column heights `mu_j = #{i : rows[i] >= j}`.
pub fn columns(diagram: &YoungDiagram) -> Vec<usize> {
    diagram.columns()
}

/// A weight `(x_1, ..., x_d)` of `GL(d)` in the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    entries: Vec<i64>,
}

impl Character {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        for i in 1..entries.len() {
            if entries[i] < entries[i - 1] {
                return Err(Error::NotDominant { index: i });
            }
        }
        Ok(Character { entries })
    }

    /// Sorts arbitrary entries into the dominant chamber.
    pub fn from_unsorted(mut entries: Vec<i64>) -> Self {
        entries.sort_unstable();
        Character { entries }
    }

    pub fn zero(rank: usize) -> Self {
        Character {
            entries: vec![0; rank],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_polynomial(&self) -> bool {
        self.entries.first().is_none_or(|&x| x >= 0)
    }

    /// Checks `0 <= x_i <= c - d`, reporting the first offending entry.
    pub fn check_block(&self, c: usize) -> Result<()> {
        let bound = c as i64 - self.rank() as i64;
        for (i, &x) in self.entries.iter().enumerate() {
            if x < 0 || x > bound {
                return Err(Error::OutsideBlock {
                    index: i,
                    value: x,
                    bound,
                });
            }
        }
        Ok(())
    }

    pub fn in_block(&self, c: usize) -> bool {
        self.check_block(c).is_ok()
    }

    /// Pairing with a cocharacter given by its exponents.
    pub fn pair(&self, lambda: &[i64]) -> i64 {
        pair_weight(&self.entries, lambda)
    }
}

/// `⟨weight, λ⟩` for a weight and cocharacter of the same rank.
pub fn pair_weight(weight: &[i64], lambda: &[i64]) -> i64 {
    weight.iter().zip(lambda).map(|(x, l)| x * l).sum()
}

pub fn diagram_to_char(diagram: &YoungDiagram, rank: usize) -> Result<Character> {
    if diagram.num_rows() > rank {
        return Err(Error::TooManyRows {
            rows: diagram.num_rows(),
            max: rank,
        });
    }
    let mut entries = vec![0i64; rank];
    for (i, &r) in diagram.rows().iter().enumerate() {
        entries[rank - 1 - i] = r as i64;
    }
    Ok(Character { entries })
}

pub fn char_to_diagram(chi: &Character) -> Result<YoungDiagram> {
    if let Some((index, &value)) = chi.entries.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::NegativeWeight { index, value });
    }
    let rows = chi
        .entries
        .iter()
        .rev()
        .take_while(|&&x| x > 0)
        .map(|&x| x as usize)
        .collect();
    Ok(YoungDiagram { rows })
}

/// All of `B_c(d)` in lexicographic order; empty when `c < d`.
pub fn enumerate_block(c: usize, d: usize) -> Vec<Character> {
    if c < d {
        return Vec::new();
    }
    let top = (c - d) as i64;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(cur: &mut Vec<i64>, d: usize, lo: i64, top: i64, out: &mut Vec<Character>) {
        if cur.len() == d {
            out.push(Character {
                entries: cur.clone(),
            });
            return;
        }
        for x in lo..=top {
            cur.push(x);
            rec(cur, d, x, top, out);
            cur.pop();
        }
    }
    rec(&mut cur, d, 0, top, &mut out);
    out
}

/// `chi + (j, ..., j)`, the weight of `V(chi) ⊗ det^j`.
pub fn tensor_det(chi: &Character, j: i64) -> Character {
    Character {
        entries: chi.entries.iter().map(|x| x + j).collect(),
    }
}

/// Rows of a semistandard tableau with entries in `1..=d`.
pub type Tableau = Vec<Vec<usize>>;

/// Weight vectors with multiplicities.
pub type WeightMultiset = BTreeMap<Vec<i64>, u64>;

/// Calls `f` on every semistandard tableau of the given shape with entries in `1..=d`.
pub fn for_each_tableau<F: FnMut(&Tableau)>(shape: &YoungDiagram, d: usize, mut f: F) {
    if shape.num_rows() > d {
        return;
    }
    let mut t: Tableau = shape.rows().iter().map(|&r| vec![0; r]).collect();
    let cells: Vec<(usize, usize)> = shape
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();

    fn fill<F: FnMut(&Tableau)>(
        t: &mut Tableau,
        cells: &[(usize, usize)],
        pos: usize,
        d: usize,
        f: &mut F,
    ) {
        let Some(&(i, j)) = cells.get(pos) else {
            f(t);
            return;
        };
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(t[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(t[i - 1][j] + 1);
        }
        // rows below still need strictly larger entries
        let below = t.len() - i - 1;
        let hi = d.saturating_sub(below.min(column_depth_below(t, i, j)));
        for v in lo..=hi {
            t[i][j] = v;
            fill(t, cells, pos + 1, d, f);
        }
        t[i][j] = 0;
    }

    fn column_depth_below(t: &Tableau, i: usize, j: usize) -> usize {
        t[i + 1..].iter().take_while(|row| row.len() > j).count()
    }

    fill(&mut t, &cells, 0, d, &mut f);
}

/// Weight of a tableau in the ascending convention: entry `k` adds to
/// coordinate `d - k + 1`, so the row-by-row filling `1, 2, ...` has weight `chi`.
pub fn tableau_weight(t: &Tableau, d: usize) -> Vec<i64> {
    let mut w = vec![0i64; d];
    for &k in t.iter().flatten() {
        w[d - k] += 1;
    }
    w
}

fn schur_tableaux(chi: &Character) -> Result<YoungDiagram> {
    if let Some((index, &value)) = chi.entries.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::NegativeWeight { index, value });
    }
    char_to_diagram(chi)
}

/// The weight multiset of the irreducible `GL(d)`-module with highest weight `chi`.
pub fn schur_weights(chi: &Character) -> Result<WeightMultiset> {
    let shape = schur_tableaux(chi)?;
    let d = chi.rank();
    let mut out = WeightMultiset::new();
    for_each_tableau(&shape, d, |t| {
        *out.entry(tableau_weight(t, d)).or_insert(0) += 1;
    });
    Ok(out)
}

/// One tableau per weight of `V(chi)`, the first in enumeration order.
pub fn weight_witnesses(chi: &Character) -> Result<BTreeMap<Vec<i64>, Tableau>> {
    let shape = schur_tableaux(chi)?;
    let d = chi.rank();
    let mut out = BTreeMap::new();
    for_each_tableau(&shape, d, |t| {
        out.entry(tableau_weight(t, d)).or_insert_with(|| t.clone());
    });
    Ok(out)
}

/// A weakly increasing sequence `0 <= j_1 <= ... <= j_l` with an ambient length `d >= l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JSequence {
    values: Vec<i64>,
    ambient: usize,
}

impl JSequence {
    pub fn new(values: Vec<i64>, ambient: usize) -> Result<Self> {
        if values.len() > ambient {
            return Err(Error::SequenceTooLong {
                len: values.len(),
                ambient,
            });
        }
        for (i, &v) in values.iter().enumerate() {
            if v < 0 || (i > 0 && v < values[i - 1]) {
                return Err(Error::InvalidSequence { index: i });
            }
        }
        Ok(JSequence { values, ambient })
    }

    pub fn empty(ambient: usize) -> Self {
        JSequence {
            values: Vec::new(),
            ambient,
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn top(&self) -> Option<i64> {
        self.values.last().copied()
    }

    /// `(j_1, ..., j_l, -1, ..., -1)` of length `ambient`.
    pub fn padded(&self) -> Vec<i64> {
        let mut p = self.values.clone();
        p.resize(self.ambient, -1);
        p
    }
}

/// Lexicographic comparison of the `-1`-padded tuples.
pub fn jseq_compare(a: &JSequence, b: &JSequence) -> Result<Ordering> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch {
            left: a.ambient,
            right: b.ambient,
        });
    }
    Ok(a.padded().cmp(&b.padded()))
}

/// All weakly increasing `0 <= j_1 <= ... <= j_len <= bound`, largest first.
pub fn enumerate_jseqs(len: usize, bound: i64, ambient: usize) -> Result<Vec<JSequence>> {
    if len > ambient {
        return Err(Error::SequenceTooLong { len, ambient });
    }
    if len == 0 {
        return Ok(vec![JSequence::empty(ambient)]);
    }
    if bound < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(
        cur: &mut Vec<i64>,
        len: usize,
        lo: i64,
        bound: i64,
        ambient: usize,
        out: &mut Vec<JSequence>,
    ) {
        if cur.len() == len {
            out.push(JSequence {
                values: cur.clone(),
                ambient,
            });
            return;
        }
        for j in lo..=bound {
            cur.push(j);
            rec(cur, len, j, bound, ambient, out);
            cur.pop();
        }
    }
    rec(&mut cur, len, 0, bound, ambient, &mut out);
    out.sort_by_key(|j| Reverse(j.padded()));
    Ok(out)
}
