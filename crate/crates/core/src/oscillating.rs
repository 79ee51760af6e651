//! Oscillating (up-down) tableaux and highest weight words in the crystal of
//! tensor powers of the defining representation of `Sp(2n)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{covers, Cell, Partition};
use crate::search::{Dfs, Step};
use crate::tableau::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Expansion,
    Contraction,
}

/// One step of an oscillating tableau: the box `b_k` and whether it was
/// added or deleted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OscStep {
    pub kind: StepKind,
    pub cell: Cell,
}

/// A sequence of partitions `∅ = μ⁰, μ¹, …, μʳ` where consecutive shapes
/// differ by exactly one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Partition>", try_from = "Vec<Partition>")]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        match shapes.first() {
            None => return Err(Error::InvalidOscillating { step: 0, reason: "no shapes".into() }),
            Some(first) if !first.is_empty() => {
                return Err(Error::InvalidOscillating { step: 0, reason: format!("starts at {first}, not ∅") })
            }
            _ => {}
        }
        for (k, w) in shapes.windows(2).enumerate() {
            if covers(&w[0], &w[1]).is_none() && covers(&w[1], &w[0]).is_none() {
                return Err(Error::InvalidOscillating {
                    step: k + 1,
                    reason: format!("{} and {} do not differ by one box", w[0], w[1]),
                });
            }
        }
        Ok(OscillatingTableau { shapes })
    }

    /// The tableau of length 0.
    pub fn empty() -> Self {
        OscillatingTableau { shapes: vec![Partition::empty()] }
    }

    /// The all-expansion tableau adding the box of `k` at step `k`.
    pub fn from_standard(t: &Tableau) -> Result<Self> {
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{t} is not standard")));
        }
        Ok(OscillatingTableau { shapes: t.to_chain(t.size()) })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// The length `r`.
    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The final shape `μʳ`.
    pub fn shape(&self) -> &Partition {
        self.shapes.last().expect("at least the empty shape")
    }

    /// Steps `1..=r` in order.
    pub fn steps(&self) -> Vec<OscStep> {
        self.shapes
            .windows(2)
            .map(|w| match covers(&w[0], &w[1]) {
                Some(cell) => OscStep { kind: StepKind::Expansion, cell },
                None => OscStep {
                    kind: StepKind::Contraction,
                    cell: covers(&w[1], &w[0]).expect("validated at construction"),
                },
            })
            .collect()
    }

    /// Every shape has at most `n` rows.
    pub fn is_symplectic(&self, n: usize) -> bool {
        self.shapes.iter().all(|p| p.length() <= n)
    }

    /// Smallest `n` for which the tableau is `n`-symplectic.
    pub fn min_rank(&self) -> usize {
        self.shapes.iter().map(Partition::length).max().unwrap_or(0)
    }

    /// Descent set: `k` is a descent when step `k` expands and step `k+1`
    /// contracts, or both expand with `b_k` strictly above `b_{k+1}`, or both
    /// contract with `b_k` strictly below `b_{k+1}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        use StepKind::*;
        self.steps()
            .windows(2)
            .enumerate()
            .filter(|(_, s)| match (s[0].kind, s[1].kind) {
                (Expansion, Contraction) => true,
                (Expansion, Expansion) => s[0].cell.row < s[1].cell.row,
                (Contraction, Contraction) => s[0].cell.row > s[1].cell.row,
                (Contraction, Expansion) => false,
            })
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// The highest weight word: `+i` for a box added in row `i`, `-i` for a
    /// box deleted from row `i`.
    pub fn to_word(&self, n: usize) -> Result<CrystalWord> {
        if !self.is_symplectic(n) {
            let step = self.shapes.iter().position(|p| p.length() > n).unwrap_or(0);
            return Err(Error::NotSymplectic { n, step, rows: self.shapes[step].length() });
        }
        let letters = self
            .steps()
            .iter()
            .map(|s| {
                let i = s.cell.row as i32;
                match s.kind {
                    StepKind::Expansion => i,
                    StepKind::Contraction => -i,
                }
            })
            .collect();
        CrystalWord::new(letters, n)
    }

    /// The sequence of prefix weights of a highest weight word.
    pub fn from_word(word: &CrystalWord) -> Result<Self> {
        let mut shapes = vec![Partition::empty()];
        let mut weight = vec![0i64; word.n];
        for (k, &x) in word.letters.iter().enumerate() {
            weight[x.unsigned_abs() as usize - 1] += i64::from(x.signum());
            let parts: Option<Vec<usize>> = weight.iter().map(|&w| usize::try_from(w).ok()).collect();
            match parts.and_then(|p| Partition::new(p).ok()) {
                Some(p) => shapes.push(p),
                None => return Err(Error::NotHighestWeight { prefix: k + 1, weight }),
            }
        }
        Ok(OscillatingTableau { shapes })
    }
}

impl TryFrom<Vec<Partition>> for OscillatingTableau {
    type Error = Error;

    fn try_from(shapes: Vec<Partition>) -> Result<Self> {
        OscillatingTableau::new(shapes)
    }
}

impl From<OscillatingTableau> for Vec<Partition> {
    fn from(t: OscillatingTableau) -> Self {
        t.shapes
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shapes: Vec<String> = self.shapes.iter().map(Partition::to_string).collect();
        write!(f, "({})", shapes.join(","))
    }
}

/// A word over `{±1, …, ±n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordJson")]
pub struct CrystalWord {
    letters: Vec<i32>,
    n: usize,
}

#[derive(Deserialize)]
struct WordJson {
    letters: Vec<i32>,
    n: usize,
}

impl TryFrom<WordJson> for CrystalWord {
    type Error = Error;

    fn try_from(w: WordJson) -> Result<Self> {
        CrystalWord::new(w.letters, w.n)
    }
}

impl CrystalWord {
    pub fn new(letters: Vec<i32>, n: usize) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&x| x == 0 || x.unsigned_abs() as usize > n) {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        Ok(CrystalWord { letters, n })
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `wt(w)_i` = number of letters `i` minus number of letters `-i`.
    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0; self.n];
        for &x in &self.letters {
            w[x.unsigned_abs() as usize - 1] += i64::from(x.signum());
        }
        w
    }

    /// Every prefix has a partition as its weight.
    pub fn is_highest_weight(&self) -> bool {
        let mut w = vec![0i64; self.n];
        self.letters.iter().all(|&x| {
            let i = x.unsigned_abs() as usize - 1;
            w[i] += i64::from(x.signum());
            w[i] >= 0 && (i == 0 || w[i] <= w[i - 1]) && w.get(i + 1).is_none_or(|&next| next <= w[i])
        })
    }

    /// Position in the crystal chain `1 → 2 → … → n → -n → … → -1`.
    fn chain_rank(&self, x: i32) -> usize {
        if x > 0 {
            x as usize
        } else {
            2 * self.n + 1 - x.unsigned_abs() as usize
        }
    }

    /// `k` is a descent when the chain has a nontrivial directed path from
    /// `w_k` to `w_{k+1}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| self.chain_rank(w[0]) < self.chain_rank(w[1]))
            .map(|(k, _)| k + 1)
            .collect()
    }
}

impl fmt::Display for CrystalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        f.write_str(&letters.join(" "))
    }
}

/// All `n`-symplectic oscillating tableaux of length `r`, optionally with a
/// fixed final shape. Deterministic order: at each step, additions by
/// increasing row first, then deletions by increasing row.
pub fn oscillating_tableaux(r: usize, n: usize, shape: Option<&Partition>) -> impl Iterator<Item = OscillatingTableau> {
    let target = shape.cloned();
    Dfs::new(vec![Partition::empty()], move |shapes: Vec<Partition>| {
        let k = shapes.len() - 1;
        let cur = shapes.last().expect("nonempty");
        if k == r {
            return Step::Emit(OscillatingTableau { shapes });
        }
        let remaining = r - k - 1;
        let reachable = |p: &Partition| match &target {
            Some(t) => p.distance(t) <= remaining && (remaining - p.distance(t)).is_multiple_of(2),
            None => true,
        };
        let mut children = Vec::new();
        let adds = cur.addable_rows().filter(|&i| i <= n).map(|i| cur.add_eps(i));
        let dels = cur.removable_rows().map(|i| cur.sub_eps(i));
        for next in adds.chain(dels) {
            let next = next.expect("addable and removable rows give partitions");
            if reachable(&next) {
                let mut s = shapes.clone();
                s.push(next);
                children.push(s);
            }
        }
        Step::Branch(children)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn osc(shapes: &[&[usize]]) -> OscillatingTableau {
        OscillatingTableau::new(shapes.iter().map(|s| p(s)).collect()).unwrap()
    }

    fn running() -> OscillatingTableau {
        osc(&[&[], &[1], &[1, 1], &[2, 1], &[2], &[1], &[2], &[2, 1], &[2, 1, 1], &[2, 1]])
    }

    #[test]
    fn validation() {
        assert!(OscillatingTableau::new(vec![p(&[1])]).is_err());
        assert!(OscillatingTableau::new(vec![p(&[]), p(&[2])]).is_err());
        let err = OscillatingTableau::new(vec![p(&[]), p(&[1]), p(&[1]), p(&[2])]).unwrap_err();
        assert!(matches!(err, Error::InvalidOscillating { step: 2, .. }));
    }

    #[test]
    fn word_bijection_examples() {
        let t = running();
        let w = t.to_word(3).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, -2, -1, 1, 2, 3, -3]);
        assert_eq!(OscillatingTableau::from_word(&w).unwrap(), t);
        let t = osc(&[&[], &[1], &[], &[1]]);
        assert_eq!(t.to_word(1).unwrap().letters(), &[1, -1, 1]);
        let t = osc(&[&[], &[1]]);
        assert_eq!(t.to_word(1).unwrap().letters(), &[1]);
    }

    #[test]
    fn non_highest_weight_word_rejected() {
        let w = CrystalWord::new(vec![1, -1, -1], 1).unwrap();
        assert!(!w.is_highest_weight());
        assert!(matches!(OscillatingTableau::from_word(&w), Err(Error::NotHighestWeight { prefix: 3, .. })));
        let w = CrystalWord::new(vec![2], 2).unwrap();
        assert!(matches!(OscillatingTableau::from_word(&w), Err(Error::NotHighestWeight { prefix: 1, .. })));
        assert!(CrystalWord::new(vec![3], 2).is_err());
    }

    #[test]
    fn weights() {
        let w = CrystalWord::new(vec![1, 2, 1, -2, -1, 1, 2, 3, -3], 3).unwrap();
        assert_eq!(w.weight(), vec![2, 1, 0]);
        assert!(w.is_highest_weight());
        assert_eq!(CrystalWord::new(vec![], 2).unwrap().weight(), vec![0, 0]);
        assert_eq!(CrystalWord::new(vec![1, -1], 1).unwrap().weight(), vec![0]);
    }

    #[test]
    fn symplectic_predicate() {
        assert!(running().is_symplectic(3));
        assert!(!running().is_symplectic(2));
        assert!(osc(&[&[], &[1], &[2], &[3]]).is_symplectic(1));
        assert!(!osc(&[&[], &[1], &[1, 1]]).is_symplectic(1));
        assert!(running().to_word(2).is_err());
    }

    #[test]
    fn tableau_descents() {
        assert_eq!(running().descents(), BTreeSet::from([1, 3, 4, 6, 7, 8]));
        assert_eq!(osc(&[&[], &[1], &[2], &[1]]).descents(), BTreeSet::from([2]));
        let syt = Tableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        let t = OscillatingTableau::from_standard(&syt).unwrap();
        assert_eq!(t.descents(), BTreeSet::from([2]));
        assert_eq!(t.descents(), syt.descents());
    }

    #[test]
    fn word_descents() {
        let w = CrystalWord::new(vec![1, 2, 1, -2, -1, 1, 2, 3, -3], 3).unwrap();
        assert_eq!(w.descents(), BTreeSet::from([1, 3, 4, 6, 7, 8]));
        assert!(CrystalWord::new(vec![1, 1, 1], 1).unwrap().descents().is_empty());
        assert_eq!(CrystalWord::new(vec![1, -1, 1], 1).unwrap().descents(), BTreeSet::from([1]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(oscillating_tableaux(3, 1, Some(&p(&[1]))).count(), 2);
        assert_eq!(oscillating_tableaux(4, 1, Some(&p(&[]))).count(), 2);
        assert_eq!(oscillating_tableaux(4, 2, Some(&p(&[]))).count(), 3);
        assert_eq!(oscillating_tableaux(4, 3, Some(&p(&[]))).count(), 3);
        let all: Vec<_> = oscillating_tableaux(3, 1, None).collect();
        assert_eq!(
            all,
            vec![osc(&[&[], &[1], &[2], &[3]]), osc(&[&[], &[1], &[2], &[1]]), osc(&[&[], &[1], &[], &[1]]),]
        );
        assert_eq!(oscillating_tableaux(0, 1, None).collect::<Vec<_>>(), vec![OscillatingTableau::empty()]);
    }

    #[test]
    fn json_format() {
        let t = osc(&[&[], &[1], &[]]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[],[1],[]]");
        assert!(serde_json::from_str::<OscillatingTableau>("[[],[1,1]]").is_err());
    }
}
