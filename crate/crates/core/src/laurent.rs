//! Sparse multivariate Laurent polynomials with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A Laurent polynomial in `x_1, …, x_k`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Term>", from = "Vec<Term>")]
pub struct LaurentPolynomial {
    terms: BTreeMap<Vec<i32>, i64>,
}

/// One monomial with its coefficient, the serialized form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponents: Vec<i32>,
    pub coefficient: i64,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    /// The constant `1` in `k` variables.
    pub fn one(k: usize) -> Self {
        LaurentPolynomial::monomial(vec![0; k], 1)
    }

    pub fn monomial(exponents: Vec<i32>, coefficient: i64) -> Self {
        let mut p = LaurentPolynomial::zero();
        p.add_term(exponents, coefficient);
        p
    }

    /// `x_i` (1-based) among `k` variables.
    pub fn variable(i: usize, k: usize) -> Self {
        LaurentPolynomial::power_of_variable(i, k, 1)
    }

    /// `x_i^{-1}` (1-based) among `k` variables.
    pub fn inverse_variable(i: usize, k: usize) -> Self {
        LaurentPolynomial::power_of_variable(i, k, -1)
    }

    fn power_of_variable(i: usize, k: usize, e: i32) -> Self {
        assert!((1..=k).contains(&i), "variable index {i} out of 1..={k}");
        let mut exps = vec![0; k];
        exps[i - 1] = e;
        LaurentPolynomial::monomial(exps, 1)
    }

    /// Adds `coefficient · x^exponents` in place.
    pub fn add_term(&mut self, exponents: Vec<i32>, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[i32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Monomials in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lexicographically largest monomial.
    pub fn leading_term(&self) -> Option<(&[i32], i64)> {
        self.terms().next_back()
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(e, &x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32, k: usize) -> Self {
        let mut acc = LaurentPolynomial::one(k);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl From<LaurentPolynomial> for Vec<Term> {
    fn from(p: LaurentPolynomial) -> Self {
        p.terms.into_iter().map(|(exponents, coefficient)| Term { exponents, coefficient }).collect()
    }
}

impl From<Vec<Term>> for LaurentPolynomial {
    fn from(terms: Vec<Term>) -> Self {
        terms.into_iter().fold(LaurentPolynomial::zero(), |mut p, t| {
            p.add_term(t.exponents, t.coefficient);
            p
        })
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, &c) in &rhs.terms {
            *self.terms.entry(e.clone()).or_insert(0) += c;
        }
        self.terms.retain(|_, c| *c != 0);
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, &c) in &rhs.terms {
            *self.terms.entry(e.clone()).or_insert(0) -= c;
        }
        self.terms.retain(|_, c| *c != 0);
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut terms: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &rhs.terms {
                assert_eq!(a.len(), b.len(), "multiplying polynomials in different variable counts");
                let e: Vec<i32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *terms.entry(e).or_insert(0) += x * y;
            }
        }
        terms.retain(|_, c| *c != 0);
        LaurentPolynomial { terms }
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Leading term first, e.g. `x1^2*x2 + x1*x2^2 - 2*x1^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (exps, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match idx {
                0 if c < 0 => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let factors: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            let abs = c.unsigned_abs();
            match (factors.is_empty(), abs) {
                (true, _) => write!(f, "{abs}")?,
                (false, 1) => write!(f, "{}", factors.join("*"))?,
                (false, _) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPolynomial {
        LaurentPolynomial::variable(i, 2)
    }

    #[test]
    fn arithmetic() {
        let s = &x(1) + &x(2);
        let sq = &s * &s;
        assert_eq!(sq.coefficient(&[1, 1]), 2);
        assert_eq!(sq.len(), 3);
        assert_eq!(s.pow(2, 2), sq);
        assert!((&sq - &sq).is_zero());
        assert_eq!(s.pow(0, 2), LaurentPolynomial::one(2));
        let inv = &x(1) * &LaurentPolynomial::inverse_variable(1, 2);
        assert_eq!(inv, LaurentPolynomial::one(2));
        assert_eq!(-s.clone() + s, LaurentPolynomial::zero());
    }

    #[test]
    fn laurent_cube() {
        let t = &LaurentPolynomial::variable(1, 1) + &LaurentPolynomial::inverse_variable(1, 1);
        let cube = t.pow(3, 1);
        let want: Vec<(Vec<i32>, i64)> = vec![(vec![-3], 1), (vec![-1], 3), (vec![1], 3), (vec![3], 1)];
        let got: Vec<(Vec<i32>, i64)> = cube.terms().map(|(e, c)| (e.to_vec(), c)).collect();
        assert_eq!(got, want);
        assert_eq!(cube.to_string(), "x1^3 + 3*x1 + 3*x1^-1 + x1^-3");
    }

    #[test]
    fn display_and_json() {
        let p = LaurentPolynomial::monomial(vec![2, 1], 1) + LaurentPolynomial::monomial(vec![0, 0], -2);
        assert_eq!(p.to_string(), "x1^2*x2 - 2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[{"exponents":[0,0],"coefficient":-2},{"exponents":[2,1],"coefficient":1}]"#);
        let back: LaurentPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
