//! Fomin growth diagrams and Roby's description of Sundaram's bijection.
//!
//! Corners are addressed `(i, j)` with `i` counted from the top border and
//! `j` from the left border, both starting at 0. Cells are addressed like
//! matrix entries, `(row, col)`, both starting at 1. Shapes grow towards the
//! top and towards the right, so in cell `(a, b)`:
//!
//! ```text
//!   μ = (a-1, b-1) ---- ρ = (a-1, b)
//!        |                  |
//!   λ = (a, b-1)   ---- ν = (a, b)
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oscillating::OscillatingTableau;
use crate::partition::{covers, Partition};
use crate::rs::PartialInvolution;
use crate::tableau::Tableau;

fn equal_or_covered(small: &Partition, big: &Partition) -> bool {
    small == big || covers(small, big).is_some()
}

/// Computes `ρ` from `λ`, `μ`, `ν` and the cell content.
pub fn forward_rule(lambda: &Partition, mu: &Partition, nu: &Partition, cross: bool) -> Result<Partition> {
    if !equal_or_covered(lambda, mu) || !equal_or_covered(lambda, nu) {
        return Err(Error::InconsistentCell(format!(
            "λ={lambda} μ={mu} ν={nu}: λ must equal or be covered by μ and ν"
        )));
    }
    if cross && (mu != lambda || nu != lambda) {
        return Err(Error::InconsistentCell(format!("cross needs λ=μ=ν, got λ={lambda} μ={mu} ν={nu}")));
    }
    if mu != nu {
        return Ok(mu.union(nu));
    }
    if let Some(cell) = covers(lambda, mu) {
        return mu.add_eps(cell.row + 1);
    }
    if cross {
        lambda.add_eps(1)
    } else {
        Ok(lambda.clone())
    }
}

/// Computes `λ` and whether the cell holds a cross from `μ`, `ν` and `ρ`.
pub fn backward_rule(mu: &Partition, nu: &Partition, rho: &Partition) -> Result<(Partition, bool)> {
    if !equal_or_covered(mu, rho) || !equal_or_covered(nu, rho) {
        return Err(Error::InconsistentCell(format!("μ={mu} ν={nu} ρ={rho}: ρ must equal or cover μ and ν")));
    }
    if mu != nu {
        return Ok((mu.intersection(nu), false));
    }
    match covers(mu, rho) {
        Some(cell) if cell.row == 1 => Ok((mu.clone(), true)),
        Some(cell) => Ok((mu.sub_eps(cell.row - 1)?, false)),
        None => Ok((mu.clone(), false)),
    }
}

/// A rectangular growth diagram with partition-labelled corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthDiagram {
    rows: usize,
    cols: usize,
    corners: Vec<Vec<Partition>>,
    crosses: BTreeSet<(usize, usize)>,
}

impl GrowthDiagram {
    /// Fills a diagram by forward rules from its lower and left borders.
    ///
    /// `bottom[j]` labels corner `(rows, j)` and `left[i]` labels corner
    /// `(i, 0)`; they must agree at the lower-left corner.
    pub fn grow(bottom: &[Partition], left: &[Partition], crosses: BTreeSet<(usize, usize)>) -> Result<Self> {
        let rows = left.len().checked_sub(1).ok_or_else(|| Error::InconsistentCell("empty left border".into()))?;
        let cols = bottom.len().checked_sub(1).ok_or_else(|| Error::InconsistentCell("empty lower border".into()))?;
        if bottom[0] != left[rows] {
            return Err(Error::InconsistentCell("borders disagree at the lower-left corner".into()));
        }
        check_crosses(rows, cols, &crosses)?;
        let mut corners = vec![vec![Partition::empty(); cols + 1]; rows + 1];
        corners[rows] = bottom.to_vec();
        for (i, p) in left.iter().enumerate() {
            corners[i][0] = p.clone();
        }
        for a in (1..=rows).rev() {
            for b in 1..=cols {
                corners[a - 1][b] = forward_rule(
                    &corners[a][b - 1],
                    &corners[a - 1][b - 1],
                    &corners[a][b],
                    crosses.contains(&(a, b)),
                )?;
            }
        }
        Ok(GrowthDiagram { rows, cols, corners, crosses })
    }

    /// Forward growth from all-empty lower and left borders.
    pub fn from_crosses(rows: usize, cols: usize, crosses: BTreeSet<(usize, usize)>) -> Result<Self> {
        GrowthDiagram::grow(&vec![Partition::empty(); cols + 1], &vec![Partition::empty(); rows + 1], crosses)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn corner(&self, i: usize, j: usize) -> &Partition {
        &self.corners[i][j]
    }

    pub fn corners(&self) -> &[Vec<Partition>] {
        &self.corners
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn has_cross(&self, row: usize, col: usize) -> bool {
        self.crosses.contains(&(row, col))
    }

    pub fn upper_border(&self) -> &[Partition] {
        &self.corners[0]
    }

    pub fn lower_border(&self) -> &[Partition] {
        &self.corners[self.rows]
    }

    /// Checks the edge conditions and the local rules in every cell.
    pub fn validate(&self) -> Result<()> {
        check_crosses(self.rows, self.cols, &self.crosses)?;
        for a in 1..=self.rows {
            for b in 1..=self.cols {
                let rho = forward_rule(
                    &self.corners[a][b - 1],
                    &self.corners[a - 1][b - 1],
                    &self.corners[a][b],
                    self.has_cross(a, b),
                )?;
                if rho != self.corners[a - 1][b] {
                    return Err(Error::InconsistentCell(format!(
                        "cell ({a},{b}) expects {rho}, found {}",
                        self.corners[a - 1][b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Corners as text with `X` marking crosses, top row first.
    pub fn render_ascii(&self) -> String {
        let width = self.corners.iter().flatten().map(|p| p.to_string().chars().count()).max().unwrap_or(1) + 2;
        let mut out = String::new();
        for i in 0..=self.rows {
            let mut line = String::new();
            for p in &self.corners[i] {
                let label = p.to_string();
                let pad = width - label.chars().count();
                let _ = write!(line, "{label}{}", " ".repeat(pad));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if i < self.rows {
                let mut line = String::new();
                for b in 1..=self.cols {
                    let mark = if self.has_cross(i + 1, b) { "X" } else { " " };
                    let _ = write!(line, "{}{mark}{}", " ".repeat(width / 2), " ".repeat(width - width / 2 - 1));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        out
    }
}

fn check_crosses(rows: usize, cols: usize, crosses: &BTreeSet<(usize, usize)>) -> Result<()> {
    let mut seen_rows = BTreeSet::new();
    let mut seen_cols = BTreeSet::new();
    for &(a, b) in crosses {
        if a == 0 || b == 0 || a > rows || b > cols {
            return Err(Error::InconsistentCell(format!("cross ({a},{b}) outside a {rows}×{cols} grid")));
        }
        if !seen_rows.insert(a) || !seen_cols.insert(b) {
            return Err(Error::InconsistentCell(format!("two crosses share a row or column at ({a},{b})")));
        }
    }
    Ok(())
}

/// In a diagram with empty left border, the left edge of a cell is constant
/// exactly when no cell strictly left of it in its row holds a cross.
pub fn lemma_left_cross(d: &GrowthDiagram, row: usize, col: usize) -> bool {
    debug_assert!((0..=d.rows).all(|i| d.corner(i, 0).is_empty()));
    let no_cross_left = (1..col).all(|c| !d.has_cross(row, c));
    (d.corner(row, col - 1) == d.corner(row - 1, col - 1)) == no_cross_left
}

/// Single-row growth: the lower border is the chain of `p`, the cross sits in
/// column `x`; returns the tableau of the upper border.
pub fn grow_row(p: &Tableau, x: usize) -> Result<Tableau> {
    let cols = p.entries().last().copied().unwrap_or(0).max(x);
    let bottom = p.to_chain(cols);
    let d = GrowthDiagram::grow(&bottom, &[Partition::empty(), Partition::empty()], BTreeSet::from([(1, x)]))?;
    Tableau::from_chain(d.upper_border())
}

/// Everything Roby's construction produces from an oscillating tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobyResult {
    pub diagram: GrowthDiagram,
    pub second: GrowthDiagram,
    pub a: BTreeSet<usize>,
    pub iota: PartialInvolution,
    pub t: Tableau,
    pub q: Tableau,
    pub i: Tableau,
}

fn conjugate_chain(chain: &[Partition]) -> Vec<Partition> {
    chain.iter().map(Partition::conjugate).collect()
}

/// Roby's growth-diagram computation.
///
/// The main diagonal carries the conjugated shapes of `t`; backward rules
/// fill the part below it and locate the crosses, which are mirrored across
/// the diagonal before forward rules fill the part above it.
pub fn roby(t: &OscillatingTableau) -> RobyResult {
    let r = t.len();
    let mut grid: Vec<Vec<Option<Partition>>> = vec![vec![None; r + 1]; r + 1];
    for (k, shape) in t.shapes().iter().enumerate() {
        grid[k][k] = Some(shape.conjugate());
    }
    let get = |grid: &Vec<Vec<Option<Partition>>>, i: usize, j: usize| -> Partition {
        grid[i][j].clone().expect("corner computed earlier")
    };
    let mut crosses = BTreeSet::new();
    // Below the diagonal: corner (j + d, j) is λ of cell (j + d, j + 1).
    for d in 1..=r {
        for j in 0..=r - d {
            let i = j + d;
            let mu = get(&grid, i - 1, j);
            let nu = get(&grid, i, j + 1);
            let lambda = if d == 1 {
                debug_assert_ne!(mu, nu);
                mu.intersection(&nu)
            } else {
                let (lambda, cross) =
                    backward_rule(&mu, &nu, &get(&grid, i - 1, j + 1)).expect("diagonal of an oscillating tableau");
                if cross {
                    crosses.insert((i, j + 1));
                }
                lambda
            };
            grid[i][j] = Some(lambda);
        }
    }
    let below: Vec<(usize, usize)> = crosses.iter().copied().collect();
    let mut iota = PartialInvolution::default();
    for &(a, b) in &below {
        crosses.insert((b, a));
        iota.insert_pair(b, a).expect("at most one cross per row and column");
    }
    // Above the diagonal: corner (i, i + d) is ρ of cell (i + 1, i + d).
    for d in 1..=r {
        for i in 0..=r - d {
            let j = i + d;
            let rho = forward_rule(
                &get(&grid, i + 1, j - 1),
                &get(&grid, i, j - 1),
                &get(&grid, i + 1, j),
                crosses.contains(&(i + 1, j)),
            )
            .expect("mirrored crosses are consistent");
            grid[i][j] = Some(rho);
        }
    }
    let corners: Vec<Vec<Partition>> =
        grid.into_iter().map(|row| row.into_iter().map(|p| p.expect("all corners filled")).collect()).collect();
    let diagram = GrowthDiagram { rows: r, cols: r, corners, crosses: crosses.clone() };
    debug_assert!(diagram.validate().is_ok());

    let tab = Tableau::from_chain(&conjugate_chain(diagram.lower_border())).expect("lower border is a chain");
    let q = Tableau::from_chain(&conjugate_chain(diagram.upper_border())).expect("upper border is a chain");
    let second = GrowthDiagram::from_crosses(r, r, crosses).expect("crosses are a partial permutation");
    let i = Tableau::from_chain(&conjugate_chain(second.upper_border())).expect("upper border is a chain");
    let a = iota.domain();
    RobyResult { diagram, second, a, iota, t: tab, q, i }
}

/// The stacked picture used to read off descents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentPicture {
    /// Growth diagram of the seed permutation, stacked below Roby's diagram.
    pub seed_diagram: GrowthDiagram,
    /// Row of the unique cross in each column `1..=r`, counted from the top of
    /// the stacked diagram.
    pub cross_rows: Vec<usize>,
    pub descents: BTreeSet<usize>,
}

/// Reads the descent set of `t` from the growth diagram stacked on top of the
/// growth diagram of `seed`.
///
/// `seed` lists the column of the cross in each row of the seed diagram from
/// the bottom row up, i.e. the word whose row-insertion tableau must be the
/// transpose of `T_Rob`.
pub fn descent_visualization(t: &OscillatingTableau, seed: &[usize]) -> Result<DescentPicture> {
    let roby = roby(t);
    let r = t.len();
    let m = seed.len();
    let expected = roby.t.entries();
    let letters: BTreeSet<usize> = seed.iter().copied().collect();
    if letters.len() != m || letters != expected {
        return Err(Error::WrongSeed(format!("letters {seed:?} must be the entries {expected:?} of T, each once")));
    }
    let crosses: BTreeSet<(usize, usize)> = seed.iter().enumerate().map(|(t, &x)| (m - t, x)).collect();
    let seed_diagram = GrowthDiagram::from_crosses(m, r, crosses)?;
    if seed_diagram.upper_border() != roby.diagram.lower_border() {
        let got = Tableau::from_chain(seed_diagram.upper_border())?;
        return Err(Error::WrongSeed(format!("seed inserts to {got}, expected {}", roby.t.transpose())));
    }
    let mut cross_rows = vec![0; r];
    for &(a, b) in roby.diagram.crosses() {
        cross_rows[b - 1] = a;
    }
    for &(a, b) in seed_diagram.crosses() {
        cross_rows[b - 1] = r + a;
    }
    debug_assert!(cross_rows.iter().all(|&a| a > 0));
    let descents = (1..r).filter(|&k| cross_rows[k - 1] > cross_rows[k]).collect();
    Ok(DescentPicture { seed_diagram, cross_rows, descents })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::standard_tableaux;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn running() -> OscillatingTableau {
        let shapes: [&[usize]; 10] = [&[], &[1], &[1, 1], &[2, 1], &[2], &[1], &[2], &[2, 1], &[2, 1, 1], &[2, 1]];
        OscillatingTableau::new(shapes.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(forward_rule(&p(&[1]), &p(&[2]), &p(&[1, 1]), false).unwrap(), p(&[2, 1]));
        assert_eq!(forward_rule(&p(&[1]), &p(&[2]), &p(&[2]), false).unwrap(), p(&[2, 1]));
        assert_eq!(forward_rule(&p(&[1]), &p(&[1]), &p(&[1]), true).unwrap(), p(&[2]));
        assert_eq!(forward_rule(&p(&[1]), &p(&[1]), &p(&[1]), false).unwrap(), p(&[1]));
        assert!(forward_rule(&p(&[1]), &p(&[2]), &p(&[1]), true).is_err());
        assert!(forward_rule(&p(&[1]), &p(&[3]), &p(&[1]), false).is_err());
    }

    #[test]
    fn backward_examples() {
        assert_eq!(backward_rule(&p(&[2]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), (p(&[1]), false));
        assert_eq!(backward_rule(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), (p(&[1]), true));
        assert_eq!(backward_rule(&p(&[3, 1]), &p(&[3, 1]), &p(&[3, 1])).unwrap(), (p(&[3, 1]), false));
        assert_eq!(backward_rule(&p(&[2]), &p(&[2]), &p(&[2, 1])).unwrap(), (p(&[1]), false));
        assert!(backward_rule(&p(&[2]), &p(&[2]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn single_row_growth() {
        assert_eq!(grow_row(&Tableau::empty(), 1).unwrap(), t(&[&[1]]));
        assert_eq!(grow_row(&t(&[&[1, 3]]), 2).unwrap(), t(&[&[1, 2], &[3]]));
        assert_eq!(grow_row(&t(&[&[1, 8], &[2, 9], &[4], &[5]]), 3).unwrap(), t(&[&[1, 3], &[2, 8], &[4, 9], &[5]]));
        assert!(grow_row(&t(&[&[1, 3]]), 3).is_err());
    }

    #[test]
    fn roby_running_example() {
        let out = roby(&running());
        let kappa: Vec<String> = out.diagram.upper_border().iter().map(|p| p.to_string()).collect();
        assert_eq!(kappa, ["∅", "1", "2", "21", "31", "41", "411", "421", "431", "441"]);
        let tau: Vec<String> = out.diagram.lower_border().iter().map(|p| p.to_string()).collect();
        assert_eq!(tau, ["∅", "∅", "∅", "1", "1", "1", "11", "21", "21", "21"]);
        let nu: Vec<String> = out.second.upper_border().iter().map(|p| p.to_string()).collect();
        assert_eq!(nu, ["∅", "1", "2", "2", "3", "4", "4", "4", "41", "42"]);
        assert_eq!(out.a, BTreeSet::from([1, 2, 4, 5, 8, 9]));
        assert_eq!(out.iota, PartialInvolution::new([(1, 5), (2, 4), (8, 9)]).unwrap());
        assert_eq!(out.t, t(&[&[3, 6], &[7]]));
        assert_eq!(out.q, t(&[&[1, 3, 6], &[2, 7], &[4, 8], &[5, 9]]));
        assert_eq!(out.i, t(&[&[1, 8], &[2, 9], &[4], &[5]]));
        out.diagram.validate().unwrap();
        out.second.validate().unwrap();
    }

    const RUNNING_CORNERS: &str = "\
        - 1 2 21 31 41 411 421 431 441
        - 1 2 21 31 31 311 321 331 431
        - 1 2 21 21 21 211 221 321 421
        - 1 2 21 21 21 211 221 321 421
        - 1 1 11 11 11 111 211 311 411
        - - - 1 1 1 11 21 31 41
        - - - 1 1 1 11 21 31 41
        - - - 1 1 1 11 21 31 41
        - - - 1 1 1 11 21 31 31
        - - - 1 1 1 11 21 21 21";

    #[test]
    fn roby_running_corners() {
        let out = roby(&running());
        let got: Vec<Vec<String>> = out
            .diagram
            .corners()
            .iter()
            .map(|row| row.iter().map(|p| if p.is_empty() { "-".to_string() } else { p.to_string() }).collect())
            .collect();
        let want: Vec<Vec<String>> =
            RUNNING_CORNERS.lines().map(|l| l.split_whitespace().map(str::to_string).collect()).collect();
        assert_eq!(got, want);
        let crosses: Vec<(usize, usize)> = out.diagram.crosses().iter().copied().collect();
        assert_eq!(crosses, [(1, 5), (2, 4), (4, 2), (5, 1), (8, 9), (9, 8)]);
    }

    #[test]
    fn left_cross_lemma() {
        let out = roby(&running());
        // Cells of the figure: (5,2) is right of the cross (5,1); (5,1) itself
        // and (1,3) have no cross to their left.
        assert!(out.diagram.corner(5, 1) != out.diagram.corner(4, 1));
        assert!(lemma_left_cross(&out.diagram, 5, 2));
        assert!(lemma_left_cross(&out.diagram, 5, 1));
        assert!(lemma_left_cross(&out.diagram, 1, 3));
        let empty = GrowthDiagram::from_crosses(3, 3, BTreeSet::new()).unwrap();
        assert!(lemma_left_cross(&empty, 2, 2));
        for a in 1..=9 {
            for b in 1..=9 {
                assert!(lemma_left_cross(&out.diagram, a, b));
                assert!(lemma_left_cross(&out.second, a, b));
            }
        }
    }

    #[test]
    fn visualized_descents() {
        let pic = descent_visualization(&running(), &[6, 3, 7]).unwrap();
        assert_eq!(pic.descents, BTreeSet::from([1, 3, 4, 6, 7, 8]));
        let other = descent_visualization(&running(), &[6, 7, 3]).unwrap();
        assert_eq!(other.descents, pic.descents);
        assert!(matches!(descent_visualization(&running(), &[3, 6, 7]), Err(Error::WrongSeed(_))));
        assert!(matches!(descent_visualization(&running(), &[3, 6]), Err(Error::WrongSeed(_))));

        let one = OscillatingTableau::new(vec![p(&[]), p(&[1])]).unwrap();
        assert!(descent_visualization(&one, &[1]).unwrap().descents.is_empty());

        for syt in standard_tableaux(&p(&[3, 2])) {
            let osc = OscillatingTableau::from_standard(&syt).unwrap();
            let seed = syt.transpose().reading_word();
            assert_eq!(descent_visualization(&osc, &seed).unwrap().descents, syt.descents());
        }
    }

    #[test]
    fn ascii_layout() {
        let d = GrowthDiagram::from_crosses(2, 2, BTreeSet::from([(2, 1), (1, 2)])).unwrap();
        let text = d.render_ascii();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "∅  1  2");
        assert_eq!(lines[1], "    X");
        assert_eq!(lines[2], "∅  1  1");
        assert_eq!(lines[3], " X");
        assert_eq!(lines[4], "∅  ∅  ∅");
    }
}
