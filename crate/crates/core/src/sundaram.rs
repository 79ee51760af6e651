//! Sundaram's bijection between `n`-symplectic oscillating tableaux and pairs
//! `(Q, S)` of a standard tableau and an `n`-symplectic Littlewood-Richardson
//! tableau, as the composite `Sun₂ ∘ RS ∘ Sun₁`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oscillating::{OscStep, OscillatingTableau, StepKind};
use crate::partition::{partitions_of, Cell, Partition};
use crate::rs::{involution_from_tableau, rs_involution, PartialInvolution};
use crate::search::{Dfs, Step};
use crate::tableau::{is_yamanouchi, SkewTableau, Tableau};

/// The pair `(ι, T)` produced by the first bijection. Entries of `ι` and `T`
/// are complementary in `{1, …, r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SunIntermediate {
    pub iota: PartialInvolution,
    pub tableau: Tableau,
}

/// State after step `k` of the first bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sun1Step {
    pub k: usize,
    pub kind: StepKind,
    #[serde(rename = "box")]
    pub cell: Cell,
    /// The transposition adjoined at a contraction.
    pub pair: Option<(usize, usize)>,
    pub iota: PartialInvolution,
    pub tableau: Tableau,
}

/// Runs the first bijection, recording every intermediate pair.
pub fn sun1_trace(t: &OscillatingTableau) -> Vec<Sun1Step> {
    let mut tableau = Tableau::empty();
    let mut iota = PartialInvolution::default();
    let mut trace = Vec::with_capacity(t.len());
    for (idx, OscStep { kind, cell }) in t.steps().into_iter().enumerate() {
        let k = idx + 1;
        let pair = match kind {
            StepKind::Expansion => {
                tableau.place(cell, k);
                None
            }
            StepKind::Contraction => {
                let x = tableau.column_delete(cell).expect("b_k is a corner of T_{k-1}");
                iota.insert_pair(x, k).expect("x and k are fresh");
                Some((x, k))
            }
        };
        trace.push(Sun1Step { k, kind, cell, pair, iota: iota.clone(), tableau: tableau.clone() });
    }
    trace
}

pub fn sun1(t: &OscillatingTableau) -> SunIntermediate {
    match sun1_trace(t).pop() {
        Some(last) => SunIntermediate { iota: last.iota, tableau: last.tableau },
        None => SunIntermediate { iota: PartialInvolution::default(), tableau: Tableau::empty() },
    }
}

fn check_set_partition(r: usize, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Result<()> {
    if let Some(x) = a.intersection(b).next() {
        return Err(Error::NotASetPartition { r, reason: format!("{x} occurs twice") });
    }
    let all: BTreeSet<usize> = a.union(b).copied().collect();
    if !all.iter().copied().eq(1..=r) {
        return Err(Error::NotASetPartition { r, reason: format!("entries are {all:?}") });
    }
    Ok(())
}

/// Inverse of [`sun1`]: undoes steps `r, r-1, …, 1`.
pub fn sun1_inverse(p: &SunIntermediate, r: usize) -> Result<OscillatingTableau> {
    check_set_partition(r, &p.iota.domain(), &p.tableau.entries())?;
    let mut tableau = p.tableau.clone();
    let mut shapes = vec![tableau.shape()];
    for k in (1..=r).rev() {
        if tableau.contains(k) {
            // k is the largest entry, so it sits in a corner.
            tableau.remove_entry(k)?;
        } else {
            match p.iota.get(k) {
                Some(x) if x < k => {
                    tableau.column_insert(x)?;
                }
                _ => {
                    return Err(Error::NotASetPartition {
                        r,
                        reason: format!("step {k} is neither in T nor the larger end of a pair"),
                    })
                }
            }
        }
        shapes.push(tableau.shape());
    }
    shapes.reverse();
    OscillatingTableau::new(shapes)
}

/// `Des(A/B) = {k : k ∈ A, k+1 ∈ B}`.
pub fn descents_between(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    a.iter().copied().filter(|k| b.contains(&(k + 1))).collect()
}

/// `Des(ι) ⊔ Des(T) ⊔ Des(T/ι)`.
pub fn descents_intermediate(p: &SunIntermediate) -> BTreeSet<usize> {
    let mut d = p.iota.descents();
    d.extend(p.tableau.descents());
    d.extend(descents_between(&p.tableau.entries(), &p.iota.domain()));
    d
}

/// Column-inserts the reverse reading word of `i` into `t`, recording in
/// each new box the row of the inserted letter in `i`.
pub fn sun2(i: &Tableau, t: &Tableau) -> Result<(Tableau, SkewTableau)> {
    let r = i.size() + t.size();
    check_set_partition(r, &i.entries(), &t.entries())?;
    let mut q = t.clone();
    let mut s = SkewTableau::empty(t.shape());
    for (row_idx, row) in i.rows().iter().enumerate() {
        for &x in row.iter().rev() {
            let cell = q.column_insert(x)?;
            debug_assert_eq!(cell.col, t.shape().part(cell.row) + s.row(cell.row).len() + 1);
            s.push(cell.row, row_idx + 1);
        }
    }
    Ok((q, s))
}

/// Inverse of [`sun2`]: deletes the boxes of `s` from `q` in reverse order of
/// creation (largest label first, right to left within a label) and rebuilds
/// the rows of `I` from the ejected letters.
pub fn sun2_inverse(q: &Tableau, s: &SkewTableau) -> Result<(Tableau, Tableau)> {
    if q.shape() != s.outer() {
        return Err(Error::InvalidTableau(format!("Q has shape {} but S has outer shape {}", q.shape(), s.outer())));
    }
    let mut q = q.clone();
    let mut cells: Vec<(usize, Cell)> =
        s.shape().cells().map(|c| (s.get(c).expect("skew cell is filled"), c)).collect();
    // Boxes with equal labels form a horizontal strip and were created left
    // to right, so undo them right to left.
    cells.sort_by(|(a, c), (b, d)| b.cmp(a).then(d.col.cmp(&c.col)));
    let rows_of_i = s.content().len();
    let mut i_rows: Vec<Vec<usize>> = vec![Vec::new(); rows_of_i];
    for (label, cell) in cells {
        let x = q.column_delete(cell)?;
        i_rows[label - 1].push(x);
    }
    let i = Tableau::new(i_rows)?;
    Ok((i, q))
}

/// Full output of the composite bijection with its intermediate objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SunResult {
    pub iota: PartialInvolution,
    pub t: Tableau,
    pub i: Tableau,
    pub q: Tableau,
    pub s: SkewTableau,
}

/// `Sun = Sun₂ ∘ RS ∘ Sun₁` on an `n`-symplectic oscillating tableau.
pub fn sun(t: &OscillatingTableau, n: usize) -> Result<SunResult> {
    if !t.is_symplectic(n) {
        let step = t.shapes().iter().position(|p| p.length() > n).unwrap_or(0);
        return Err(Error::NotSymplectic { n, step, rows: t.shapes()[step].length() });
    }
    let SunIntermediate { iota, tableau } = sun1(t);
    let i = rs_involution(&iota);
    let (q, s) = sun2(&i, &tableau)?;
    Ok(SunResult { iota, t: tableau, i, q, s })
}

/// Inverse of [`sun`]. `s` must be an `n`-symplectic Littlewood-Richardson
/// tableau of shape `sh(q) / mu`.
pub fn sun_inverse(q: &Tableau, s: &SkewTableau, n: usize, mu: &Partition) -> Result<OscillatingTableau> {
    if s.inner() != mu {
        return Err(Error::InvalidLrTableau { n, reason: format!("inner shape {} is not {mu}", s.inner()) });
    }
    if !q.is_standard() {
        return Err(Error::InvalidTableau(format!("{q} is not standard")));
    }
    check_symplectic_lr(s, n)?;
    let (i, t) = sun2_inverse(q, s)?;
    let iota = involution_from_tableau(&i)?;
    let osc = sun1_inverse(&SunIntermediate { iota, tableau: t }, q.size())?;
    if !osc.is_symplectic(n) {
        return Err(Error::InvalidLrTableau { n, reason: format!("preimage {osc} is not {n}-symplectic") });
    }
    Ok(osc)
}

fn check_symplectic_lr(s: &SkewTableau, n: usize) -> Result<()> {
    let fail = |reason: String| Err(Error::InvalidLrTableau { n, reason });
    let word = s.reverse_reading_word();
    if !is_yamanouchi(&word) {
        return fail(format!("reverse reading word {word:?} is not a lattice word"));
    }
    let beta = Partition::new(s.content()).expect("lattice words have partition weight");
    if !beta.has_even_columns(None) {
        return fail(format!("weight {beta} has an odd column"));
    }
    for row in n + 1..=s.rows().len() {
        let bound = 2 * (row - n);
        if let Some(&x) = s.row(row).iter().find(|&&x| x < bound) {
            return fail(format!("row {row} holds {x} < {bound}"));
        }
    }
    Ok(())
}

/// The three conditions for an `n`-symplectic Littlewood-Richardson tableau:
/// lattice reverse reading word, even-column weight, and entries in row
/// `n + i + 1` at least `2i + 2`.
pub fn is_symplectic_lr(s: &SkewTableau, n: usize) -> bool {
    check_symplectic_lr(s, n).is_ok()
}

/// Skew semistandard tableaux of shape `outer / inner` and content `beta`
/// with a lattice reverse reading word. With `rank = Some(n)` the row bound
/// of `n`-symplectic tableaux is imposed as well.
pub fn lr_tableaux(
    outer: &Partition,
    inner: &Partition,
    beta: &Partition,
    rank: Option<usize>,
) -> Box<dyn Iterator<Item = SkewTableau>> {
    if !inner.is_contained_in(outer) || outer.size() != inner.size() + beta.size() {
        return Box::new(std::iter::empty());
    }
    // Fill in reverse reading order: rows top to bottom, right to left, so
    // the lattice condition can be checked on every prefix.
    let order: Vec<Cell> = (1..=outer.length())
        .flat_map(|i| (inner.part(i) + 1..=outer.part(i)).rev().map(move |j| Cell { row: i, col: j }))
        .collect();
    let (outer, inner, beta) = (outer.clone(), inner.clone(), beta.clone());
    let letters = beta.length();
    Box::new(Dfs::new(Vec::<usize>::new(), move |filled: Vec<usize>| {
        let k = filled.len();
        let value_at = |c: Cell| order.iter().position(|&d| d == c).and_then(|i| filled.get(i).copied());
        if k == order.len() {
            let rows = (1..=outer.length())
                .map(|i| {
                    (inner.part(i) + 1..=outer.part(i)).map(|j| value_at(Cell { row: i, col: j }).unwrap()).collect()
                })
                .collect();
            return Step::Emit(SkewTableau::new(inner.clone(), rows).expect("filling is semistandard"));
        }
        let cell = order[k];
        let mut counts = vec![0; letters + 1];
        for &x in &filled {
            counts[x] += 1;
        }
        let right = value_at(Cell { col: cell.col + 1, ..cell });
        let above = (cell.row > 1).then(|| value_at(Cell { row: cell.row - 1, ..cell })).flatten();
        let lo = above.map_or(1, |a| a + 1).max(match rank {
            Some(n) if cell.row > n => 2 * (cell.row - n),
            _ => 1,
        });
        let hi = right.unwrap_or(letters).min(letters);
        let children = (lo..=hi)
            .filter(|&v| counts[v] < beta.part(v) && (v == 1 || counts[v] < counts[v - 1]))
            .map(|v| {
                let mut next = filled.clone();
                next.push(v);
                next
            })
            .collect();
        Step::Branch(children)
    }))
}

/// `c^λ_{μ,β}(n)`: number of `n`-symplectic Littlewood-Richardson tableaux of
/// shape `λ/μ` and weight `β`. Zero unless `β` has even columns.
pub fn count_c(lambda: &Partition, mu: &Partition, beta: &Partition, n: usize) -> usize {
    if !beta.has_even_columns(None) {
        return 0;
    }
    lr_tableaux(lambda, mu, beta, Some(n)).count()
}

/// The ordinary Littlewood-Richardson coefficient `c^λ_{μ,β}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, beta: &Partition) -> usize {
    lr_tableaux(lambda, mu, beta, None).count()
}

/// `a(λ, μ) = Σ_β c^λ_{μ,β}(n)` over even-column `β ⊢ |λ| - |μ|`.
pub fn coeff_a(lambda: &Partition, mu: &Partition, n: usize) -> usize {
    if lambda.size() < mu.size() {
        return 0;
    }
    partitions_of(lambda.size() - mu.size())
        .iter()
        .filter(|b| b.has_even_columns(None))
        .map(|b| count_c(lambda, mu, b, n))
        .sum()
}
