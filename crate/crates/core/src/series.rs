//! Exact multivariate integer power series truncated by total degree.
//!
//! A `TruncatedSeries` in `nvars` variables stores only terms of total degree
//! at most `cap`, with arbitrary-precision integer coefficients and no stored
//! zeros. Multiplication discards everything above the cap, so identities
//! verified term-by-term up to the cap are exact statements about the graded
//! pieces of degree <= cap.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Zero};

/// Exponent vector, one entry per variable.
pub type Expo = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Expo, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        TruncatedSeries { nvars, cap, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        TruncatedSeries::constant(nvars, cap, BigInt::one())
    }

    pub fn constant(nvars: usize, cap: u32, c: BigInt) -> Self {
        let mut s = TruncatedSeries::zero(nvars, cap);
        if !c.is_zero() {
            s.terms.insert(vec![0; nvars], c);
        }
        s
    }

    /// The monomial `c * x^expo` (dropped when its degree exceeds the cap).
    pub fn monomial(nvars: usize, cap: u32, expo: Expo, c: BigInt) -> Self {
        assert_eq!(expo.len(), nvars, "monomial: exponent length != nvars");
        let mut s = TruncatedSeries::zero(nvars, cap);
        if !c.is_zero() && total_degree(&expo) <= cap {
            s.terms.insert(expo, c);
        }
        s
    }

    /// The variable `x_i` (0-based).
    pub fn variable(nvars: usize, cap: u32, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut expo = vec![0; nvars];
        expo[i] = 1;
        TruncatedSeries::monomial(nvars, cap, expo, BigInt::one())
    }

    /// `1 - x^expo`, a factor of the character denominators.
    pub fn one_minus_monomial(nvars: usize, cap: u32, expo: Expo) -> Self {
        &TruncatedSeries::one(nvars, cap) - &TruncatedSeries::monomial(nvars, cap, expo, BigInt::one())
    }

    /// `1 + x^expo`.
    pub fn one_plus_monomial(nvars: usize, cap: u32, expo: Expo) -> Self {
        &TruncatedSeries::one(nvars, cap) + &TruncatedSeries::monomial(nvars, cap, expo, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expo: &[u32]) -> BigInt {
        self.terms.get(expo).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    /// Re-truncates to a (possibly smaller) cap.
    pub fn with_cap(&self, cap: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| total_degree(e) <= cap)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        TruncatedSeries { nvars: self.nvars, cap, terms }
    }

    /// Re-embeds into a series in `nvars` variables, shifting this series'
    /// variables by `offset`. Used to place an m-variable and an n-variable
    /// factor side by side in m+n variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= nvars, "embed: variables out of range");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut expo = vec![0u32; nvars];
                expo[offset..offset + self.nvars].copy_from_slice(e);
                (expo, c.clone())
            })
            .collect();
        TruncatedSeries { nvars, cap: self.cap, terms }
    }

    /// Multiplicative inverse, defined when the constant term is +1 or -1.
    /// Writes `self = c (1 + v)` with `v` of positive lowest degree and expands
    /// the geometric series of `-v` up to the cap.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.constant_term();
        let sign = if c0 == BigInt::one() {
            BigInt::one()
        } else if c0 == -BigInt::one() {
            -BigInt::one()
        } else {
            return Err(SeriesError::NonUnitConstantTerm(c0));
        };
        // v = sign*self - 1
        let mut v = self.clone();
        if sign == -BigInt::one() {
            v = -&v;
        }
        v.terms.remove(&vec![0; self.nvars]);
        let minus_v = -&v;
        let mut out = TruncatedSeries::one(self.nvars, self.cap);
        let mut term = TruncatedSeries::one(self.nvars, self.cap);
        for _ in 0..self.cap {
            term = &term * &minus_v;
            if term.is_zero() {
                break;
            }
            out = &out + &term;
        }
        if sign == -BigInt::one() {
            out = -&out;
        }
        Ok(out)
    }

    /// Collapses all variables to a single one (`x_i -> t`), yielding the
    /// coefficient of `t^d` for d = 0..=cap. This is the graded dimension view
    /// of a character.
    pub fn collapse_degrees(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.cap as usize + 1];
        for (e, c) in &self.terms {
            out[total_degree(e) as usize] += c;
        }
        out
    }

    /// The lexicographically smallest exponent vector at which two series
    /// differ, if any.
    pub fn first_discrepancy(&self, other: &Self) -> Option<Expo> {
        assert_eq!(self.nvars, other.nvars, "first_discrepancy: nvars mismatch");
        let mut keys: Vec<&Expo> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .find(|e| self.coeff(e) != other.coeff(e))
            .cloned()
    }

    /// Division with remainder by a single divisor with respect to the
    /// lexicographic monomial order (largest monomial = leading term).
    /// Returns `(quotient, remainder)`; when `self` lies in the ideal
    /// generated by `divisor` the remainder is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check_compatible(divisor, "div_rem");
        assert!(!divisor.is_zero(), "div_rem: division by zero series");
        let (lt_e, lt_c) = divisor.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = TruncatedSeries::zero(self.nvars, self.cap);
        let mut quo = TruncatedSeries::zero(self.nvars, self.cap);
        let mut cur = self.clone();
        while let Some((e, c)) = cur.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let divisible = e.iter().zip(&lt_e).all(|(a, b)| a >= b);
            if divisible {
                let (qc, rc) = num::Integer::div_rem(&c, &lt_c);
                assert!(rc.is_zero(), "div_rem: leading coefficient not divisible");
                let qe: Expo = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
                let qterm = TruncatedSeries::monomial(self.nvars, self.cap, qe, qc);
                cur = &cur - &(&qterm * divisor);
                quo = &quo + &qterm;
            } else {
                let t = TruncatedSeries::monomial(self.nvars, self.cap, e.clone(), c);
                rem = &rem + &t;
                cur.terms.remove(&e);
            }
        }
        (quo, rem)
    }

    fn check_compatible(&self, other: &Self, op: &str) {
        assert_eq!(self.nvars, other.nvars, "{op}: nvars mismatch");
        assert_eq!(self.cap, other.cap, "{op}: cap mismatch");
    }
}

fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    NonUnitConstantTerm(BigInt),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitConstantTerm(c) => {
                write!(f, "series inverse requires constant term +-1, got {c}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs, "add");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        TruncatedSeries { nvars: self.nvars, cap: self.cap, terms }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            nvars: self.nvars,
            cap: self.cap,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs, "mul");
        let mut terms: BTreeMap<Expo, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &rhs.terms {
                if da + total_degree(eb) > self.cap {
                    continue;
                }
                let e: Expo = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TruncatedSeries { nvars: self.nvars, cap: self.cap, terms }
    }
}

impl Add for TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self + &rhs
    }
}

impl Sub for TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self - &rhs
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self * &rhs
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // sorted by total degree, then lexicographically
        let mut keys: Vec<&Expo> = self.terms.keys().collect();
        keys.sort_by_key(|e| (total_degree(e), (*e).clone()));
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            if first {
                first = false;
                if c < &BigInt::zero() {
                    write!(f, "-")?;
                }
            } else if c < &BigInt::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = num::Signed::abs(c);
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(i, k)| if *k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}
