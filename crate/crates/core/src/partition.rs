//! Integer partitions, skew shapes and single-box arithmetic.
//!
//! Everything uses English notation with 1-based row and column indices:
//! row 1 is the top row, column 1 the leftmost column.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Ferrers diagram, 1-based, English notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl TryFrom<[usize; 2]> for Cell {
    type Error = Error;

    fn try_from([row, col]: [usize; 2]) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::InvalidTableau(format!("cell ({row},{col}) is not 1-based")));
        }
        Ok(Cell { row, col })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers. No zero parts are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts`. Trailing zeros are dropped; any other zero or an
    /// increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based, with implicit trailing zeros.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition((1..=width).map(|c| self.0.iter().take_while(|&&p| p >= c).count()).collect())
    }

    /// Componentwise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.part(cell.row) >= cell.col
    }

    /// Rows `i` where `self + ε_i` is a partition, in increasing order.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.length() + 1).filter(move |&i| self.part(i) < self.part(i - 1))
    }

    /// Rows `i` where `self - ε_i` is a partition, in increasing order.
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.length()).filter(move |&i| self.part(i) > self.part(i + 1))
    }

    /// `self + ε_i`.
    pub fn add_eps(&self, i: usize) -> Result<Partition> {
        if i == 0 || self.part(i) >= self.part(i - 1) {
            return Err(Error::NotAPartition(format!("{self} + e_{i}")));
        }
        let mut parts = self.0.clone();
        if i > parts.len() {
            parts.push(0);
        }
        parts[i - 1] += 1;
        Ok(Partition(parts))
    }

    /// `self - ε_i`.
    pub fn sub_eps(&self, i: usize) -> Result<Partition> {
        if i == 0 || self.part(i) == 0 || self.part(i) <= self.part(i + 1) {
            return Err(Error::NotAPartition(format!("{self} - e_{i}")));
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Componentwise maximum.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.length().max(other.length());
        Partition((1..=n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// Componentwise minimum.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let n = self.length().min(other.length());
        Partition((1..=n).map(|i| self.part(i).min(other.part(i))).collect())
    }

    /// True iff every column has even length, and, if `max_col` is given,
    /// every column length is at most `max_col`.
    pub fn has_even_columns(&self, max_col: Option<usize>) -> bool {
        self.conjugate().0.iter().all(|&c| c % 2 == 0 && max_col.is_none_or(|m| c <= m))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell { row: i + 1, col: j }))
    }

    /// Distance between two partitions in Young's lattice, counted in
    /// single-box additions and removals.
    pub fn distance(&self, other: &Partition) -> usize {
        self.size() + other.size() - 2 * self.intersection(other).size()
    }
}

/// If `larger` is `smaller` plus one box, returns that box.
pub fn covers(smaller: &Partition, larger: &Partition) -> Option<Cell> {
    if larger.size() != smaller.size() + 1 || !smaller.is_contained_in(larger) {
        return None;
    }
    let row = (1..=larger.length()).find(|&i| larger.part(i) != smaller.part(i))?;
    Some(Cell { row, col: larger.part(row) })
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let sep = if self.0[0] >= 10 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` with at most `max_len` parts.
pub fn partitions_with_length(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.length() <= max_len).collect()
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of the skew shape, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(|c| !self.inner.contains_cell(*c))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}
