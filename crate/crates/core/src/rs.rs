//! Robinson-Schensted on words, partial permutations and fixed-point-free
//! involutions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// A fixed-point-free involution on a finite set of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<[usize; 2]>", try_from = "Vec<[usize; 2]>")]
pub struct PartialInvolution {
    map: BTreeMap<usize, usize>,
}

impl PartialInvolution {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut iota = PartialInvolution::default();
        for (a, b) in pairs {
            iota.insert_pair(a, b)?;
        }
        Ok(iota)
    }

    /// Adjoins the transposition `(a, b)`.
    pub fn insert_pair(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidInvolution(format!("fixed point {a}")));
        }
        if a == 0 || b == 0 {
            return Err(Error::InvalidInvolution("domain must be positive integers".into()));
        }
        if let Some(x) = [a, b].into_iter().find(|x| self.map.contains_key(x)) {
            return Err(Error::InvalidInvolution(format!("{x} is paired twice")));
        }
        self.map.insert(a, b);
        self.map.insert(b, a);
        Ok(())
    }

    pub fn get(&self, k: usize) -> Option<usize> {
        self.map.get(&k).copied()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.map.contains_key(&k)
    }

    /// The set `A` the involution acts on.
    pub fn domain(&self) -> BTreeSet<usize> {
        self.map.keys().copied().collect()
    }

    /// Number of points in the domain.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Transpositions `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect()
    }

    /// Sorted domain and the images in that order.
    pub fn one_line(&self) -> (Vec<usize>, Vec<usize>) {
        self.map.iter().map(|(&a, &b)| (a, b)).unzip()
    }

    /// `{k : k, k+1 ∈ A and ι(k) > ι(k+1)}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        self.map.iter().filter(|(&k, &v)| self.get(k + 1).is_some_and(|w| v > w)).map(|(&k, _)| k).collect()
    }
}

impl TryFrom<Vec<[usize; 2]>> for PartialInvolution {
    type Error = Error;

    fn try_from(pairs: Vec<[usize; 2]>) -> Result<Self> {
        PartialInvolution::new(pairs.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<PartialInvolution> for Vec<[usize; 2]> {
    fn from(iota: PartialInvolution) -> Self {
        iota.pairs().into_iter().map(|(a, b)| [a, b]).collect()
    }
}

impl fmt::Display for PartialInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        for (a, b) in self.pairs() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Row-inserts `word` letter by letter. The recording tableau holds the
/// positions `1..=len`.
pub fn rs_insert_word(word: &[usize]) -> (Tableau, Tableau) {
    let labels: Vec<usize> = (1..=word.len()).collect();
    rs_labelled(&labels, word)
}

/// Row-inserts `values` and records `labels[t]` in the box created at step `t`.
fn rs_labelled(labels: &[usize], values: &[usize]) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (&label, &x) in labels.iter().zip(values) {
        let cell = p.row_bump(x);
        q.place(cell, label);
    }
    (p, q)
}

/// RS for a partial permutation given as its sorted domain and one-line
/// values. The recording tableau carries the domain labels themselves.
pub fn rs_partial_permutation(domain: &[usize], values: &[usize]) -> (Tableau, Tableau) {
    assert_eq!(domain.len(), values.len());
    rs_labelled(domain, values)
}

/// The common insertion and recording tableau of a fixed-point-free involution.
pub fn rs_involution(iota: &PartialInvolution) -> Tableau {
    let (domain, values) = iota.one_line();
    let (p, q) = rs_partial_permutation(&domain, &values);
    debug_assert_eq!(p, q);
    p
}

/// Inverse RS: returns `(label, value)` pairs sorted by label.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Vec<(usize, usize)>> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!("shapes differ: {} vs {}", p.shape(), q.shape())));
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut out = Vec::with_capacity(p.size());
    while let Some(&label) = q.entries().last() {
        let cell = q.remove_entry(label)?;
        out.push((label, p.row_delete(cell)?));
    }
    out.reverse();
    Ok(out)
}

/// Recovers the involution `ι` with `rs_involution(ι) = tableau`.
///
/// Fails unless every column of `tableau` has even length.
pub fn involution_from_tableau(tableau: &Tableau) -> Result<PartialInvolution> {
    if !tableau.shape().has_even_columns(None) {
        return Err(Error::InvalidInvolution(format!("shape {} has an odd column", tableau.shape())));
    }
    let pairs = rs_inverse(tableau, tableau)?;
    let mut iota = PartialInvolution::default();
    for &(a, b) in &pairs {
        if a < b {
            iota.insert_pair(a, b)?;
        } else if a == b || iota.get(a) != Some(b) {
            return Err(Error::InvalidInvolution(format!("{a} maps to {b}")));
        }
    }
    Ok(iota)
}

/// `{k : w_k > w_{k+1}}`, 1-based.
pub fn descents_word(word: &[usize]) -> BTreeSet<usize> {
    word.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(k, _)| k + 1).collect()
}
