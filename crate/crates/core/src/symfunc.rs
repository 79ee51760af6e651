//! Schur, fundamental quasisymmetric and symplectic characters as explicit
//! Laurent polynomials, and the character identities relating them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::oscillating::oscillating_tableaux;
use crate::partition::{partitions_of, Partition};
use crate::rs::descents_word;
use crate::sundaram::coeff_a;
use crate::tableau::{king_tableaux, semistandard_tableaux, standard_tableaux};

/// `s_μ(x_1, …, x_k)` as a sum over semistandard tableaux.
pub fn schur(mu: &Partition, k: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    if mu.length() > k {
        return out;
    }
    for t in semistandard_tableaux(mu, k) {
        let mut exps = vec![0; k];
        for &x in t.rows().iter().flatten() {
            exps[x - 1] += 1;
        }
        out.add_term(exps, 1);
    }
    out
}

/// `F_D(x_1, …, x_k)` for `D ⊆ {1, …, r-1}`.
pub fn fundamental_qsym(d: &BTreeSet<usize>, r: usize, k: usize) -> Result<LaurentPolynomial> {
    if d.iter().any(|&j| j == 0 || j >= r) {
        return Err(Error::DescentOutOfRange { set: d.iter().copied().collect(), r });
    }
    let strict: Vec<bool> = (0..r).map(|j| d.contains(&j)).collect();
    let mut out = LaurentPolynomial::zero();
    let mut exps = vec![0; k];
    // Position `j` (1-based) takes an index at least `lo`.
    fn fill(
        j: usize,
        lo: usize,
        r: usize,
        k: usize,
        strict: &[bool],
        exps: &mut Vec<i32>,
        out: &mut LaurentPolynomial,
    ) {
        if j > r {
            out.add_term(exps.clone(), 1);
            return;
        }
        for i in lo..=k {
            exps[i - 1] += 1;
            let next = if j < r && strict[j] { i + 1 } else { i };
            fill(j + 1, next, r, k, strict, exps, out);
            exps[i - 1] -= 1;
        }
    }
    fill(1, 1, r, k, &strict, &mut exps, &mut out);
    Ok(out)
}

/// The symplectic character `sp_μ(x_1^{±1}, …, x_n^{±1})` as a sum over King
/// tableaux.
pub fn symplectic_character(mu: &Partition, n: usize) -> Result<LaurentPolynomial> {
    if mu.length() > n {
        return Err(Error::TooManyRows { shape: mu.to_string(), n });
    }
    let mut out = LaurentPolynomial::zero();
    for t in king_tableaux(mu, n) {
        out.add_term(t.weight(n), 1);
    }
    Ok(out)
}

/// `Σ_{λ ⊢ r} a(λ, μ) s_λ(x_1, …, x_k)`.
pub fn frobenius_via_lr(r: usize, mu: &Partition, n: usize, k: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for lambda in partitions_of(r) {
        let a = coeff_a(&lambda, mu, n);
        if a > 0 {
            out += &schur(&lambda, k).scale(a as i64);
        }
    }
    out
}

/// How many `n`-symplectic oscillating tableaux of length `r` and shape `μ`
/// have each descent set.
pub fn descent_tally(r: usize, mu: &Partition, n: usize) -> BTreeMap<BTreeSet<usize>, usize> {
    let mut tally = BTreeMap::new();
    for t in oscillating_tableaux(r, n, Some(mu)) {
        *tally.entry(t.descents()).or_insert(0) += 1;
    }
    tally
}

fn sum_fundamentals<'a>(
    tally: impl IntoIterator<Item = (&'a BTreeSet<usize>, &'a usize)>,
    r: usize,
    k: usize,
) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for (d, &count) in tally {
        let f = fundamental_qsym(d, r, k).expect("descents lie in 1..r");
        out += &f.scale(count as i64);
    }
    out
}

/// `Σ F_{Des(T)}` over `n`-symplectic oscillating tableaux of length `r` and
/// shape `μ`.
pub fn frobenius_via_descents(r: usize, mu: &Partition, n: usize, k: usize) -> LaurentPolynomial {
    sum_fundamentals(&descent_tally(r, mu, n), r, k)
}

/// `Σ s_β` over `β ⊢ r` whose columns all have even length at most `2n`.
pub fn invariant_character(r: usize, n: usize, k: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for beta in partitions_of(r) {
        if beta.has_even_columns(Some(2 * n)) {
            out += &schur(&beta, k);
        }
    }
    out
}

/// Writes a symmetric polynomial in `k` variables as an integer combination
/// of Schur polynomials, largest shape first. `None` if the polynomial has
/// negative exponents or is not symmetric.
pub fn schur_expansion(p: &LaurentPolynomial, k: usize) -> Option<Vec<(Partition, i64)>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some((exps, c)) = rest.leading_term() {
        if exps.len() != k || exps.iter().any(|&e| e < 0) || exps.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let lambda = Partition::new(exps.iter().map(|&e| e as usize).collect()).ok()?;
        rest -= &schur(&lambda, k).scale(c);
        out.push((lambda, c));
    }
    Some(out)
}

/// Formats a Schur expansion as `s_21 + 2*s_3`.
pub fn format_schur_expansion(terms: &[(Partition, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (lambda, c)) in terms.iter().enumerate() {
        let abs = c.unsigned_abs();
        let sign = if *c < 0 { "-" } else { "+" };
        match idx {
            0 if *c < 0 => s.push('-'),
            0 => {}
            _ => s.push_str(&format!(" {sign} ")),
        }
        if abs != 1 {
            s.push_str(&format!("{abs}*"));
        }
        s.push_str(&format!("s_{lambda}"));
    }
    s
}

/// The two sides of a polynomial identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `lhs - rhs`.
    pub fn difference(&self) -> LaurentPolynomial {
        &self.lhs - &self.rhs
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lhs = {}\nrhs = {}", self.lhs, self.rhs)
    }
}

/// `s_μ` against `Σ_{Q ∈ SYT(μ)} F_{Des(Q)}`.
pub fn schur_qsym_identity(mu: &Partition, k: usize) -> Comparison {
    let r = mu.size();
    let mut tally: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    for q in standard_tableaux(mu) {
        *tally.entry(q.descents()).or_insert(0) += 1;
    }
    Comparison { lhs: schur(mu, k), rhs: sum_fundamentals(&tally, r, k) }
}

/// Words of weight `μ` in which every suffix has at least as many `i` as
/// `i + 1`; lexicographic order.
pub fn reverse_lattice_words(mu: &Partition) -> Vec<Vec<usize>> {
    fn extend(mu: &Partition, counts: &mut Vec<usize>, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == mu.size() {
            out.push(word.iter().rev().copied().collect());
            return;
        }
        for i in 1..=mu.length() {
            if counts[i - 1] < mu.part(i) && (i == 1 || counts[i - 1] < counts[i - 2]) {
                counts[i - 1] += 1;
                word.push(i);
                extend(mu, counts, word, out);
                word.pop();
                counts[i - 1] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    extend(mu, &mut vec![0; mu.length()], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `s_μ` against `Σ F_{Des(w)}` over reverse lattice words `w` of weight `μ`.
pub fn lattice_word_identity(mu: &Partition, k: usize) -> Comparison {
    let r = mu.size();
    let mut tally: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    for w in reverse_lattice_words(mu) {
        *tally.entry(descents_word(&w)).or_insert(0) += 1;
    }
    Comparison { lhs: schur(mu, k), rhs: sum_fundamentals(&tally, r, k) }
}

/// `(Σ_i x_i + x_i^{-1})^r` against `Σ_μ |Osc(r, n, μ)| sp_μ`.
pub fn berele_identity(r: usize, n: usize) -> Comparison {
    let mut base = LaurentPolynomial::zero();
    for i in 1..=n {
        base += &LaurentPolynomial::variable(i, n);
        base += &LaurentPolynomial::inverse_variable(i, n);
    }
    let lhs = base.pow(r as u32, n);
    let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
    for t in oscillating_tableaux(r, n, None) {
        *counts.entry(t.shape().clone()).or_insert(0) += 1;
    }
    let mut rhs = LaurentPolynomial::zero();
    for (mu, count) in counts {
        let sp = symplectic_character(&mu, n).expect("oscillating shapes have at most n rows");
        rhs += &sp.scale(count as i64);
    }
    Comparison { lhs, rhs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillating::OscillatingTableau;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(exps: &[i32]) -> LaurentPolynomial {
        LaurentPolynomial::monomial(exps.to_vec(), 1)
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1]), 2), mono(&[1, 0]) + mono(&[0, 1]));
        assert_eq!(schur(&p(&[2, 1]), 2), mono(&[2, 1]) + mono(&[1, 2]));
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
        assert_eq!(schur(&Partition::empty(), 3), LaurentPolynomial::one(3));
        assert_eq!(schur(&p(&[2, 1]), 3).len(), 7);
    }

    #[test]
    fn fundamental_examples() {
        let h2 = mono(&[2, 0]) + mono(&[1, 1]) + mono(&[0, 2]);
        assert_eq!(fundamental_qsym(&set(&[]), 2, 2).unwrap(), h2);
        assert_eq!(fundamental_qsym(&set(&[1]), 2, 2).unwrap(), mono(&[1, 1]));
        assert_eq!(fundamental_qsym(&set(&[2]), 3, 2).unwrap(), mono(&[2, 1]));
        assert!(matches!(fundamental_qsym(&set(&[3]), 3, 2), Err(Error::DescentOutOfRange { .. })));
        assert!(fundamental_qsym(&set(&[0]), 3, 2).is_err());
        assert_eq!(fundamental_qsym(&set(&[]), 0, 2).unwrap(), LaurentPolynomial::one(2));
    }

    #[test]
    fn symplectic_examples() {
        let x = |e: i32| mono(&[e]);
        assert_eq!(symplectic_character(&p(&[1]), 1).unwrap(), x(1) + x(-1));
        assert_eq!(symplectic_character(&p(&[3]), 1).unwrap(), x(3) + x(1) + x(-1) + x(-3));
        assert_eq!(symplectic_character(&Partition::empty(), 2).unwrap(), LaurentPolynomial::one(2));
        assert!(matches!(symplectic_character(&p(&[1, 1]), 1), Err(Error::TooManyRows { .. })));
        // sp_(1,1) in two variables is the 5-dimensional representation.
        let sp11 = symplectic_character(&p(&[1, 1]), 2).unwrap();
        assert_eq!(sp11.terms().map(|(_, c)| c).sum::<i64>(), 5);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_via_lr(3, &p(&[1]), 1, 3), schur(&p(&[2, 1]), 3));
        assert_eq!(frobenius_via_descents(3, &p(&[1]), 1, 3), schur(&p(&[2, 1]), 3));
        assert_eq!(descent_tally(3, &p(&[1]), 1), BTreeMap::from([(set(&[1]), 1), (set(&[2]), 1)]));
        let one = LaurentPolynomial::one(2);
        assert_eq!(frobenius_via_lr(0, &Partition::empty(), 1, 2), one);
        assert_eq!(frobenius_via_descents(0, &Partition::empty(), 1, 2), one);
        assert_eq!(frobenius_via_lr(2, &Partition::empty(), 1, 2), mono(&[1, 1]));
        let x1 = schur(&p(&[1]), 3);
        for n in 1..=3 {
            assert_eq!(frobenius_via_descents(1, &p(&[1]), n, 3), x1);
        }
    }

    #[test]
    fn running_example_descents_appear() {
        let shapes: [&[usize]; 10] = [&[], &[1], &[1, 1], &[2, 1], &[2], &[1], &[2], &[2, 1], &[2, 1, 1], &[2, 1]];
        let t = OscillatingTableau::new(shapes.iter().map(|s| p(s)).collect()).unwrap();
        let d = set(&[1, 3, 4, 6, 7, 8]);
        assert_eq!(t.descents(), d);
        assert!(descent_tally(9, &p(&[2, 1]), 3).contains_key(&d));
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(invariant_character(2, 1, 2), mono(&[1, 1]));
        for r in [1, 3, 5] {
            assert!(invariant_character(r, 2, r).is_zero());
        }
        assert_eq!(invariant_character(4, 1, 4), schur(&p(&[2, 2]), 4));
        assert_eq!(frobenius_via_descents(4, &Partition::empty(), 1, 4), schur(&p(&[2, 2]), 4));
        assert_eq!(invariant_character(4, 2, 4), schur(&p(&[2, 2]), 4) + schur(&p(&[1, 1, 1, 1]), 4));
    }

    #[test]
    fn expansions() {
        let poly = schur(&p(&[2, 1]), 3) + schur(&p(&[3]), 3).scale(2) - schur(&p(&[1, 1, 1]), 3);
        let exp = schur_expansion(&poly, 3).unwrap();
        assert_eq!(exp, vec![(p(&[3]), 2), (p(&[2, 1]), 1), (p(&[1, 1, 1]), -1)]);
        assert_eq!(format_schur_expansion(&exp), "2*s_3 + s_21 - s_111");
        assert_eq!(format_schur_expansion(&[]), "0");
        assert!(schur_expansion(&mono(&[1, 0]), 2).is_none());
        assert!(schur_expansion(&mono(&[-1, 0]), 2).is_none());
        assert_eq!(schur_expansion(&LaurentPolynomial::zero(), 2).unwrap(), vec![]);
    }

    #[test]
    fn identity_examples() {
        assert!(schur_qsym_identity(&p(&[2, 1]), 2).holds());
        for k in 1..=4 {
            assert!(lattice_word_identity(&p(&[1]), k).holds());
        }
        assert_eq!(reverse_lattice_words(&p(&[2, 1])), vec![vec![1, 2, 1], vec![2, 1, 1]]);
        let b = berele_identity(3, 1);
        assert!(b.holds());
        let x = |e: i32| mono(&[e]);
        let want = (x(3) + x(1) + x(-1) + x(-3)) + (x(1) + x(-1)).scale(2);
        assert_eq!(b.rhs, want);
    }

    #[test]
    fn identities_small_range() {
        for size in 0..=4 {
            for mu in partitions_of(size) {
                for k in [2, 3, size] {
                    assert!(schur_qsym_identity(&mu, k).holds(), "schur-qsym {mu} k={k}");
                    assert!(lattice_word_identity(&mu, k).holds(), "lattice words {mu} k={k}");
                }
            }
        }
        for n in 1..=2 {
            for r in 0..=4 {
                assert!(berele_identity(r, n).holds());
                for size in (0..=r).rev().step_by(2) {
                    for mu in partitions_of(size).into_iter().filter(|m| m.length() <= n) {
                        assert_eq!(frobenius_via_lr(r, &mu, n, r), frobenius_via_descents(r, &mu, n, r));
                    }
                }
            }
        }
    }
}
