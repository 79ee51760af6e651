//! Young tableaux: partial, standard, semistandard, skew and King (symplectic)
//! fillings, with Robinson-Schensted row and column insertion.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{covers, Cell, Partition, SkewShape};
use crate::search::{Dfs, Step};

/// A filling of a straight shape by positive integers.
///
/// Values built with [`Tableau::new`] are partial tableaux: all entries are
/// distinct and increase along rows and down columns. [`Tableau::semistandard`]
/// relaxes rows to weak increase; such tableaux only arise as insertion
/// tableaux of words with repeated letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

fn check_straight(rows: &[Vec<usize>]) -> Result<()> {
    if rows.iter().any(|r| r.is_empty()) {
        return Err(Error::InvalidTableau("empty row".into()));
    }
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::InvalidTableau("row lengths increase".into()));
    }
    if rows.iter().flatten().any(|&x| x == 0) {
        return Err(Error::InvalidTableau("entries must be positive".into()));
    }
    Ok(())
}

fn check_columns_strict(rows: &[Vec<usize>]) -> Result<()> {
    for w in rows.windows(2) {
        if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
            return Err(Error::InvalidTableau("columns not strictly increasing".into()));
        }
    }
    Ok(())
}

impl Tableau {
    /// A partial tableau: distinct entries, strictly increasing rows and columns.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_straight(&rows)?;
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::InvalidTableau("rows not strictly increasing".into()));
        }
        check_columns_strict(&rows)?;
        let mut seen = BTreeSet::new();
        if let Some(&dup) = rows.iter().flatten().find(|&&x| !seen.insert(x)) {
            return Err(Error::DuplicateEntry(dup));
        }
        Ok(Tableau { rows })
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn semistandard(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_straight(&rows)?;
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::InvalidTableau("rows not weakly increasing".into()));
        }
        check_columns_strict(&rows)?;
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows have partition shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    /// The cell holding `x`, if any (first occurrence in row-major order).
    pub fn position(&self, x: usize) -> Option<Cell> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|&y| y == x).map(|j| Cell { row: i + 1, col: j + 1 }))
    }

    pub fn contains(&self, x: usize) -> bool {
        self.rows.iter().any(|r| r.contains(&x))
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Entry set is exactly `{1, …, size}`.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let entries = self.entries();
        entries.len() == n && entries.iter().copied().eq(1..=n)
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width).map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()).collect();
        Tableau { rows }
    }

    fn column_height(&self, col: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() >= col).count()
    }

    /// Is `cell` a corner that can be removed leaving a straight shape?
    pub fn is_corner(&self, cell: Cell) -> bool {
        match self.rows.get(cell.row - 1) {
            Some(row) => row.len() == cell.col && self.rows.get(cell.row).is_none_or(|below| below.len() < cell.col),
            None => false,
        }
    }

    /// Puts `x` into the outer corner `cell`. The caller guarantees that the
    /// result is still a straight shape.
    pub(crate) fn place(&mut self, cell: Cell, x: usize) {
        if cell.row > self.rows.len() {
            debug_assert_eq!(cell.row, self.rows.len() + 1);
            self.rows.push(Vec::new());
        }
        let row = &mut self.rows[cell.row - 1];
        debug_assert_eq!(row.len() + 1, cell.col);
        row.push(x);
    }

    fn remove_corner(&mut self, cell: Cell) -> Result<usize> {
        if !self.is_corner(cell) {
            return Err(Error::NotACorner(cell));
        }
        let x = self.rows[cell.row - 1].pop().expect("corner row is nonempty");
        if self.rows[cell.row - 1].is_empty() {
            self.rows.pop();
        }
        Ok(x)
    }

    /// Removes the entry `x` sitting in a corner.
    pub fn remove_entry(&mut self, x: usize) -> Result<Cell> {
        let cell = self.position(x).ok_or_else(|| Error::InvalidTableau(format!("entry {x} not present")))?;
        self.remove_corner(cell)?;
        Ok(cell)
    }

    /// Column insertion: `x` enters column 1 and bumps the smallest entry
    /// larger than it into the next column; when no entry of the current
    /// column exceeds it, it is placed at the bottom of that column.
    pub fn column_insert(&mut self, x: usize) -> Result<Cell> {
        if self.contains(x) {
            return Err(Error::DuplicateEntry(x));
        }
        let mut x = x;
        let mut col = 1;
        loop {
            let height = self.column_height(col);
            match (0..height).find(|&i| self.rows[i][col - 1] > x) {
                Some(i) => {
                    std::mem::swap(&mut self.rows[i][col - 1], &mut x);
                    col += 1;
                }
                None => {
                    let cell = Cell { row: height + 1, col };
                    self.place(cell, x);
                    return Ok(cell);
                }
            }
        }
    }

    /// Inverse of [`Tableau::column_insert`]: removes the corner `cell` and
    /// reverse-bumps towards column 1, returning the ejected entry.
    pub fn column_delete(&mut self, cell: Cell) -> Result<usize> {
        let mut y = self.remove_corner(cell)?;
        for col in (1..cell.col).rev() {
            let height = self.column_height(col);
            let i = (0..height)
                .rev()
                .find(|&i| self.rows[i][col - 1] < y)
                .expect("column holds an entry below the travelling value");
            std::mem::swap(&mut self.rows[i][col - 1], &mut y);
        }
        Ok(y)
    }

    /// Row insertion (Schensted bumping). Fails on a repeated entry.
    pub fn row_insert(&mut self, x: usize) -> Result<Cell> {
        if self.contains(x) {
            return Err(Error::DuplicateEntry(x));
        }
        Ok(self.row_bump(x))
    }

    /// Row insertion allowing repeated letters: `x` bumps the leftmost entry
    /// strictly greater than it.
    pub(crate) fn row_bump(&mut self, x: usize) -> Cell {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == self.rows.len() {
                self.rows.push(vec![x]);
                return Cell { row: row + 1, col: 1 };
            }
            match self.rows[row].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut self.rows[row][j], &mut x);
                    row += 1;
                }
                None => {
                    self.rows[row].push(x);
                    return Cell { row: row + 1, col: self.rows[row].len() };
                }
            }
        }
    }

    /// Inverse of row insertion at the corner `cell`.
    pub fn row_delete(&mut self, cell: Cell) -> Result<usize> {
        let mut y = self.remove_corner(cell)?;
        for row in (0..cell.row - 1).rev() {
            let j = self.rows[row].iter().rposition(|&v| v < y).expect("row holds an entry below the travelling value");
            std::mem::swap(&mut self.rows[row][j], &mut y);
        }
        Ok(y)
    }

    /// Rows from bottom to top, each read left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn reverse_reading_word(&self) -> Vec<usize> {
        let mut w = self.reading_word();
        w.reverse();
        w
    }

    /// `{k : k and k+1 are entries and k+1 lies in a lower row than k}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut row_of = std::collections::BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of.insert(x, i);
            }
        }
        row_of.iter().filter(|(&k, &r)| row_of.get(&(k + 1)).is_some_and(|&r1| r1 > r)).map(|(&k, _)| k).collect()
    }

    /// Reads a chain `∅ = ε₀, ε₁, …` in which each shape equals or covers the
    /// previous one; `k` sits in the box added at step `k`.
    pub fn from_chain(chain: &[Partition]) -> Result<Tableau> {
        if chain.first().is_some_and(|p| !p.is_empty()) {
            return Err(Error::InvalidTableau("chain must start at the empty shape".into()));
        }
        let mut t = Tableau::empty();
        for (k, w) in chain.windows(2).enumerate() {
            if w[0] == w[1] {
                continue;
            }
            let cell = covers(&w[0], &w[1])
                .ok_or_else(|| Error::InvalidTableau(format!("chain step {}: {} to {}", k + 1, w[0], w[1])))?;
            t.place(cell, k + 1);
        }
        Ok(t)
    }

    /// The chain of shapes of the subtableaux with entries `≤ k`, for `k = 0..=len`.
    pub fn to_chain(&self, len: usize) -> Vec<Partition> {
        (0..=len)
            .map(|k| {
                let parts = self.rows.iter().map(|r| r.iter().filter(|&&x| x <= k).count());
                Partition::new(parts.collect()).expect("subtableau has partition shape")
            })
            .collect()
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

/// A semistandard filling of a skew shape `outer / inner`.
///
/// `rows[i]` lists the entries of the skew cells of row `i + 1`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SkewJson", try_from = "SkewJson")]
pub struct SkewTableau {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SkewJson {
    inner: Partition,
    rows: Vec<Vec<Option<usize>>>,
}

impl SkewTableau {
    pub fn new(inner: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.len() > inner.length() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.len() < inner.length() {
            rows.resize(inner.length(), Vec::new());
        }
        let outer: Vec<usize> = rows.iter().enumerate().map(|(i, r)| inner.part(i + 1) + r.len()).collect();
        let outer =
            Partition::new(outer).map_err(|_| Error::InvalidTableau("skew rows do not form a skew shape".into()))?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::InvalidTableau("rows not weakly increasing".into()));
        }
        let t = SkewTableau { inner, rows };
        for cell in t.shape_cells(&outer) {
            let below = Cell { row: cell.row + 1, col: cell.col };
            if let (Some(a), Some(b)) = (t.get(cell), t.get(below)) {
                if b <= a {
                    return Err(Error::InvalidTableau("columns not strictly increasing".into()));
                }
            }
        }
        Ok(t)
    }

    fn shape_cells<'a>(&'a self, outer: &'a Partition) -> impl Iterator<Item = Cell> + 'a {
        outer.cells().filter(|c| !self.inner.contains_cell(*c))
    }

    pub fn empty(inner: Partition) -> Self {
        SkewTableau::new(inner, Vec::new()).expect("empty skew tableau")
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> Partition {
        Partition::new(self.rows.iter().enumerate().map(|(i, r)| self.inner.part(i + 1) + r.len()).collect())
            .expect("validated at construction")
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer(), self.inner.clone()).expect("validated at construction")
    }

    /// Skew entries of row `i` (1-based); empty past the last row.
    pub fn row(&self, i: usize) -> &[usize] {
        self.rows.get(i - 1).map_or(&[], Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry in `cell`, or `None` for inner cells and cells outside the shape.
    pub fn get(&self, cell: Cell) -> Option<usize> {
        let offset = self.inner.part(cell.row);
        if cell.col <= offset {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - offset - 1).copied()
    }

    /// Puts `x` in the cell directly right of row `row`'s current end.
    pub(crate) fn push(&mut self, row: usize, x: usize) {
        if self.rows.len() < row {
            self.rows.resize(row, Vec::new());
        }
        self.rows[row - 1].push(x);
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn reverse_reading_word(&self) -> Vec<usize> {
        let mut w = self.reading_word();
        w.reverse();
        w
    }

    /// Multiplicities: entry `i` of the result counts occurrences of `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }
}

impl From<SkewTableau> for SkewJson {
    fn from(s: SkewTableau) -> Self {
        let rows = s
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| std::iter::repeat_n(None, s.inner.part(i + 1)).chain(r.iter().map(|&x| Some(x))).collect())
            .collect();
        SkewJson { inner: s.inner, rows }
    }
}

impl TryFrom<SkewJson> for SkewTableau {
    type Error = Error;

    fn try_from(j: SkewJson) -> Result<Self> {
        let mut rows = Vec::with_capacity(j.rows.len());
        for (i, r) in j.rows.into_iter().enumerate() {
            let blanks = j.inner.part(i + 1);
            if r.len() < blanks || r[..blanks].iter().any(Option::is_some) {
                return Err(Error::InvalidTableau(format!("row {} needs {blanks} leading blanks", i + 1)));
            }
            let entries: Option<Vec<usize>> = r[blanks..].iter().copied().collect();
            rows.push(entries.ok_or_else(|| Error::InvalidTableau("blank after an entry".into()))?);
        }
        SkewTableau::new(j.inner, rows)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rows.len().max(self.inner.length());
        if n == 0 {
            return f.write_str("∅");
        }
        let rows: Vec<String> = (1..=n)
            .map(|i| {
                std::iter::repeat_n("·".to_string(), self.inner.part(i))
                    .chain(self.row(i).iter().map(|x| x.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Rank of a letter in the King order `1 < -1 < 2 < -2 < …`.
pub fn king_rank(letter: i32) -> usize {
    let i = letter.unsigned_abs() as usize;
    if letter > 0 {
        2 * i - 1
    } else {
        2 * i
    }
}

fn king_letter(rank: usize) -> i32 {
    let i = rank.div_ceil(2) as i32;
    if rank % 2 == 1 {
        i
    } else {
        -i
    }
}

/// An `n`-symplectic semistandard tableau over `1 < -1 < … < n < -n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KingTableau {
    rows: Vec<Vec<i32>>,
}

impl KingTableau {
    pub fn new(rows: Vec<Vec<i32>>, n: usize) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("not a straight shape".into()));
        }
        for &x in rows.iter().flatten() {
            if x == 0 || x.unsigned_abs() as usize > n {
                return Err(Error::LetterOutOfRange { letter: x, n });
            }
        }
        let ranked: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|&x| king_rank(x)).collect()).collect();
        if ranked.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::InvalidTableau("rows not weakly increasing".into()));
        }
        check_columns_strict(&ranked)?;
        for (i, r) in ranked.iter().enumerate() {
            if r.iter().any(|&x| x < 2 * i + 1) {
                return Err(Error::InvalidTableau(format!("row {} has an entry below {}", i + 1, i + 1)));
            }
        }
        Ok(KingTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    /// Exponent vector of `x^T` in `n` variables: `i` counts `+1`, `-i` counts `-1`.
    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut w = vec![0; n];
        for &x in self.rows.iter().flatten() {
            w[x.unsigned_abs() as usize - 1] += x.signum();
        }
        w
    }
}

/// Every prefix has at least as many `i` as `i + 1`.
pub fn is_yamanouchi(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// Letter multiplicities of `word` as a partition.
pub fn word_weight(word: &[usize]) -> Result<Partition> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0; max];
    for &x in word {
        if x == 0 {
            return Err(Error::NotAPartition("letter 0 in word".into()));
        }
        counts[x - 1] += 1;
    }
    Partition::new(counts)
}

/// Row-major fill positions with their left and upper neighbours.
struct Layout {
    shape: Partition,
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Layout {
    fn new(shape: &Partition) -> Self {
        let cells: Vec<Cell> = shape.cells().collect();
        let index = |c: Cell| cells.iter().position(|&d| d == c);
        let left = cells.iter().map(|c| (c.col > 1).then(|| index(Cell { col: c.col - 1, ..*c })).flatten()).collect();
        let above = cells.iter().map(|c| (c.row > 1).then(|| index(Cell { row: c.row - 1, ..*c })).flatten()).collect();
        Layout { shape: shape.clone(), cells, left, above }
    }

    fn rows<T: Copy>(&self, values: &[T]) -> Vec<Vec<T>> {
        let mut it = values.iter().copied();
        self.shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect()
    }
}

/// All standard Young tableaux of `shape`, in lexicographic order of their
/// row-major entry sequences.
pub fn standard_tableaux(shape: &Partition) -> impl Iterator<Item = Tableau> {
    let layout = Layout::new(shape);
    let r = shape.size();
    Dfs::new(Vec::<usize>::new(), move |filled| {
        let k = filled.len();
        if k == layout.cells.len() {
            return Step::Emit(Tableau { rows: layout.rows(&filled) });
        }
        let lo = [layout.left[k], layout.above[k]].into_iter().flatten().map(|i| filled[i] + 1).max().unwrap_or(1);
        Step::Branch(
            (lo..=r)
                .filter(|v| !filled.contains(v))
                .map(|v| {
                    let mut next = filled.clone();
                    next.push(v);
                    next
                })
                .collect(),
        )
    })
}

/// All semistandard tableaux of `shape` with entries in `1..=n`, in
/// lexicographic order of their row-major entry sequences.
pub fn semistandard_tableaux(shape: &Partition, n: usize) -> impl Iterator<Item = Tableau> {
    let layout = Layout::new(shape);
    ranked_fillings(layout, n, |_| 1).map(|rows| Tableau { rows })
}

/// All King tableaux of `shape` over `1 < -1 < … < n < -n`.
pub fn king_tableaux(shape: &Partition, n: usize) -> impl Iterator<Item = KingTableau> {
    let layout = Layout::new(shape);
    ranked_fillings(layout, 2 * n, |cell| 2 * cell.row - 1)
        .map(|rows| KingTableau { rows: rows.iter().map(|r| r.iter().map(|&x| king_letter(x)).collect()).collect() })
}

/// Semistandard fillings by ranks `1..=max`, with a per-cell lower bound.
fn ranked_fillings(
    layout: Layout,
    max: usize,
    min_rank: impl Fn(Cell) -> usize,
) -> impl Iterator<Item = Vec<Vec<usize>>> {
    Dfs::new(Vec::<usize>::new(), move |filled| {
        let k = filled.len();
        if k == layout.cells.len() {
            return Step::Emit(layout.rows(&filled));
        }
        let mut lo = min_rank(layout.cells[k]);
        if let Some(i) = layout.left[k] {
            lo = lo.max(filled[i]);
        }
        if let Some(i) = layout.above[k] {
            lo = lo.max(filled[i] + 1);
        }
        Step::Branch(
            (lo..=max)
                .map(|v| {
                    let mut next = filled.clone();
                    next.push(v);
                    next
                })
                .collect(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 1]]).is_err());
        assert!(Tableau::new(vec![vec![2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert_eq!(Tableau::new(vec![vec![1, 3], vec![3]]), Err(Error::DuplicateEntry(3)));
        assert!(Tableau::new(vec![vec![1, 3], vec![2, 3]]).is_err());
        assert!(Tableau::semistandard(vec![vec![1, 1], vec![2]]).is_ok());
    }

    #[test]
    fn column_insertion_examples() {
        let mut a = t(&[&[3, 6], &[7]]);
        assert_eq!(a.column_insert(8).unwrap(), Cell::new(3, 1));
        assert_eq!(a, t(&[&[3, 6], &[7], &[8]]));
        assert_eq!(a.column_insert(1).unwrap(), Cell::new(1, 3));
        assert_eq!(a, t(&[&[1, 3, 6], &[7], &[8]]));
        let mut e = Tableau::empty();
        assert_eq!(e.column_insert(1).unwrap(), Cell::new(1, 1));
        assert_eq!(e, t(&[&[1]]));
        assert_eq!(a.column_insert(3), Err(Error::DuplicateEntry(3)));
    }

    #[test]
    fn column_deletion_examples() {
        // Step 4 of the first Sundaram bijection on the running example.
        let mut a = t(&[&[1, 3], &[2]]);
        assert_eq!(a.column_delete(Cell::new(2, 1)).unwrap(), 2);
        assert_eq!(a, t(&[&[1, 3]]));
        assert_eq!(a.column_delete(Cell::new(1, 2)).unwrap(), 1);
        assert_eq!(a, t(&[&[3]]));
        let mut b = t(&[&[5]]);
        assert_eq!(b.column_delete(Cell::new(1, 1)).unwrap(), 5);
        assert!(b.is_empty());
        let mut c = t(&[&[1, 3], &[2]]);
        assert_eq!(c.column_delete(Cell::new(1, 1)), Err(Error::NotACorner(Cell::new(1, 1))));
    }

    #[test]
    fn row_insertion_examples() {
        let mut a = t(&[&[1, 3]]);
        assert_eq!(a.row_insert(2).unwrap(), Cell::new(2, 1));
        assert_eq!(a, t(&[&[1, 2], &[3]]));
        let mut b = t(&[&[1, 8], &[2]]);
        assert_eq!(b.row_insert(9).unwrap(), Cell::new(1, 3));
        assert_eq!(b, t(&[&[1, 8, 9], &[2]]));
        let mut e = Tableau::empty();
        e.row_insert(1).unwrap();
        assert_eq!(e, t(&[&[1]]));
    }

    #[test]
    fn row_insert_is_transposed_column_insert() {
        for x in 1..=9 {
            let base = t(&[&[2, 4, 8], &[3, 5], &[6]]);
            if base.contains(x) {
                continue;
            }
            let mut rowwise = base.clone();
            let cell = rowwise.row_insert(x).unwrap();
            let mut colwise = base.transpose();
            let ccell = colwise.column_insert(x).unwrap();
            assert_eq!(rowwise, colwise.transpose());
            assert_eq!(cell, ccell.transpose());
        }
    }

    #[test]
    fn reading_words() {
        let i = t(&[&[1, 8], &[2, 9], &[4], &[5]]);
        assert_eq!(i.reading_word(), vec![5, 4, 2, 9, 1, 8]);
        assert_eq!(i.reverse_reading_word(), vec![8, 1, 9, 2, 4, 5]);
        assert_eq!(t(&[&[1, 2]]).reading_word(), vec![1, 2]);
        let s = SkewTableau::new(p(&[2, 1]), vec![vec![1], vec![2], vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(s.reading_word(), vec![2, 4, 1, 3, 2, 1]);
        assert_eq!(s.reverse_reading_word(), vec![1, 2, 3, 1, 4, 2]);
        assert_eq!(s.outer(), p(&[3, 2, 2, 2]));
    }

    #[test]
    fn partial_descents() {
        assert_eq!(t(&[&[3, 6], &[7]]).descents(), BTreeSet::from([6]));
        assert_eq!(t(&[&[1, 3, 6], &[2, 7], &[4, 8], &[5, 9]]).descents(), BTreeSet::from([1, 3, 4, 6, 7, 8]));
        assert!(t(&[&[1, 2, 3]]).descents().is_empty());
    }

    #[test]
    fn lattice_words() {
        assert!(is_yamanouchi(&[1, 2, 1, 2]));
        assert_eq!(word_weight(&[1, 2, 1, 2]).unwrap(), p(&[2, 2]));
        assert!(!is_yamanouchi(&[2, 1]));
        assert!(is_yamanouchi(&[1, 2, 3, 1, 4, 2]));
        assert_eq!(word_weight(&[1, 2, 3, 1, 4, 2]).unwrap(), p(&[2, 2, 1, 1]));
        assert!(!is_yamanouchi(&[1, 1, 3]));
    }

    fn hook_length_count(shape: &Partition) -> usize {
        let conj = shape.conjugate();
        let hooks: usize = shape.cells().map(|c| shape.part(c.row) - c.col + conj.part(c.col) - c.row + 1).product();
        (1..=shape.size()).product::<usize>() / hooks
    }

    #[test]
    fn syt_counts_match_hook_length() {
        assert_eq!(standard_tableaux(&p(&[2, 1])).count(), 2);
        assert_eq!(standard_tableaux(&p(&[1, 1, 1])).count(), 1);
        assert_eq!(standard_tableaux(&p(&[3, 1])).count(), 3);
        for n in 0..=7 {
            for shape in crate::partition::partitions_of(n) {
                let all: Vec<Tableau> = standard_tableaux(&shape).collect();
                assert_eq!(all.len(), hook_length_count(&shape), "{shape}");
                assert!(all.iter().all(|t| t.is_standard() && t.shape() == shape));
                assert!(all.windows(2).all(|w| w[0].rows.concat() < w[1].rows.concat()));
            }
        }
    }

    #[test]
    fn ssyt_and_king_enumeration() {
        let ss: Vec<Tableau> = semistandard_tableaux(&p(&[1]), 2).collect();
        assert_eq!(ss, vec![t(&[&[1]]), t(&[&[2]])]);
        // Hook-content formula for shape 21 in 3 letters: 8.
        assert_eq!(semistandard_tableaux(&p(&[2, 1]), 3).count(), 8);
        assert_eq!(semistandard_tableaux(&p(&[1, 1, 1]), 2).count(), 0);

        let k1: Vec<Vec<Vec<i32>>> = king_tableaux(&p(&[1]), 1).map(|k| k.rows).collect();
        assert_eq!(k1, vec![vec![vec![1]], vec![vec![-1]]]);
        let k3: Vec<Vec<Vec<i32>>> = king_tableaux(&p(&[3]), 1).map(|k| k.rows).collect();
        assert_eq!(k3, vec![vec![vec![1, 1, 1]], vec![vec![1, 1, -1]], vec![vec![1, -1, -1]], vec![vec![-1, -1, -1]]]);
        // Row 2 needs entries ≥ 2 in King order, impossible for n = 1.
        assert_eq!(king_tableaux(&p(&[1, 1]), 1).count(), 0);
        for k in king_tableaux(&p(&[2, 1]), 2) {
            assert!(KingTableau::new(k.rows.clone(), 2).is_ok());
        }
    }

    #[test]
    fn skew_json_round_trip() {
        let s = SkewTableau::new(p(&[2, 1]), vec![vec![1], vec![2], vec![1, 3], vec![2, 4]]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"inner":[2,1],"rows":[[null,null,1],[null,2],[1,3],[2,4]]}"#);
        assert_eq!(serde_json::from_str::<SkewTableau>(&json).unwrap(), s);
        assert!(serde_json::from_str::<SkewTableau>(r#"{"inner":[1],"rows":[[2],[1]]}"#).is_err());
    }

    #[test]
    fn skew_validation() {
        // Column strictness is enforced only between skew cells.
        assert!(SkewTableau::new(p(&[1]), vec![vec![], vec![1]]).is_ok());
        assert!(SkewTableau::new(p(&[]), vec![vec![1], vec![1]]).is_err());
        assert!(SkewTableau::new(p(&[1]), vec![vec![], vec![], vec![1]]).is_err());
    }

    #[test]
    fn chains() {
        let q = t(&[&[1, 3, 6], &[2, 7], &[4, 8], &[5, 9]]);
        let chain = q.to_chain(9);
        assert_eq!(Tableau::from_chain(&chain).unwrap(), q);
        let partial = t(&[&[3, 6], &[7]]);
        let chain = partial.to_chain(9);
        assert_eq!(chain[2], Partition::empty());
        assert_eq!(Tableau::from_chain(&chain).unwrap(), partial);
    }
}
