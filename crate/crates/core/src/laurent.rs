//! Integer Laurent polynomials in the single variable `q`, and exact fractions
//! of them.
//!
//! Coefficients are arbitrary-precision integers and every operation is exact.
//! Fractions are kept unreduced (no polynomial gcd); equality is decided by
//! cross-multiplication. The denominator is normalized so that its
//! lowest-exponent coefficient is positive and its lowest exponent is zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

/// An integer Laurent polynomial: a finite map exponent -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(0, BigInt::from(c))
    }

    /// The monomial `c * q^exp` (the zero polynomial when `c = 0`).
    pub fn monomial(exp: i64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, BigInt::one())
    }

    /// `q^{-1}`.
    pub fn q_inv() -> Self {
        LaurentPoly::monomial(-1, BigInt::one())
    }

    /// `q - q^{-1}`, the scalar of the Hecke quadratic relation.
    pub fn q_minus_q_inv() -> Self {
        LaurentPoly::q() - LaurentPoly::q_inv()
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &LaurentPoly::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent present, if nonzero.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent present, if nonzero.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by the monomial `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact evaluation at a rational point `q0 != 0`.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        assert!(!q0.is_zero(), "LaurentPoly::eval: q0 must be nonzero");
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let p = power(q0, *e);
            acc += BigRational::from(c.clone()) * p;
        }
        acc
    }

    /// Value at `q^{-1} = 0`, i.e. the coefficient of `q^0` provided no positive
    /// power of `q` occurs. `None` signals a pole.
    pub fn at_q_inv_zero(&self) -> Option<BigInt> {
        match self.max_exp() {
            Some(e) if e > 0 => None,
            _ => Some(self.coeff(0)),
        }
    }

    /// Quotient of `self / divisor` when the division is exact in Z[q, q^{-1}].
    ///
    /// Panics when the division is not exact; callers only invoke this in
    /// contexts (Bareiss elimination) where exactness is guaranteed.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> LaurentPoly {
        assert!(!divisor.is_zero(), "LaurentPoly::exact_div: division by zero");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        // Shift both operands to ordinary polynomials and long-divide.
        let a_min = self.min_exp().unwrap();
        let b_min = divisor.min_exp().unwrap();
        let mut rem = self.shift(-a_min);
        let b = divisor.shift(-b_min);
        let b_deg = b.max_exp().unwrap();
        let b_lead = b.coeff(b_deg);
        let mut quo = LaurentPoly::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap();
            assert!(r_deg >= b_deg, "LaurentPoly::exact_div: nonzero remainder");
            let r_lead = rem.coeff(r_deg);
            let (q_c, r_c) = r_lead.div_rem(&b_lead);
            assert!(r_c.is_zero(), "LaurentPoly::exact_div: leading coefficient not divisible");
            let term = LaurentPoly::monomial(r_deg - b_deg, q_c);
            rem = &rem - &(&term * &b);
            quo = &quo + &term;
        }
        quo.shift(a_min - b_min)
    }
}

fn power(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(x.clone(), (-e) as usize).recip()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                let entry = coeffs.entry(ea + eb).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $f:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $f(self, rhs: &$t) -> $t {
                (&self).$f(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(LaurentPoly, Add, add);
forward_binop!(LaurentPoly, Sub, sub);
forward_binop!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest exponent first
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{}", if show_coeff { "*" } else { "" }, e)?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// LaurentFraction
// ---------------------------------------------------------------------------

/// An exact ratio of integer Laurent polynomials, `den != 0`.
///
/// Unreduced: only the common monomial `q^k`, the common integer content and the
/// sign of the denominator's lowest coefficient are normalized away.
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    /// Builds `num / den`. Returns `None` when `den = 0`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let mut frac = LaurentFraction { num, den };
        frac.normalize();
        Some(frac)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentFraction { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        LaurentFraction::from_poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        LaurentFraction::from_int(0)
    }

    pub fn one() -> Self {
        LaurentFraction::from_int(1)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // common monomial: shift so that den starts at exponent 0
        let dmin = self.den.min_exp().unwrap();
        if dmin != 0 {
            self.den = self.den.shift(-dmin);
            self.num = self.num.shift(-dmin);
        }
        // common integer content
        let g = self.num.content().gcd(&self.den.content());
        if g > BigInt::one() {
            self.num = exact_scale_down(&self.num, &g);
            self.den = exact_scale_down(&self.den, &g);
        }
        // sign: lowest-exponent coefficient of den positive
        let low = self.den.min_exp().unwrap();
        if self.den.coeff(low).is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "LaurentFraction::inverse of zero");
        let mut f = LaurentFraction { num: self.den.clone(), den: self.num.clone() };
        f.normalize();
        f
    }

    /// Exact evaluation at a nonzero rational `q0`; `None` when the denominator
    /// vanishes there.
    pub fn eval(&self, q0: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q0) / d)
    }

    /// The limit as `q^{-1} -> 0` (i.e. `q -> infinity`); `None` on a pole.
    pub fn at_q_inv_zero(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let ndeg = self.num.max_exp().unwrap();
        let ddeg = self.den.max_exp().unwrap();
        if ndeg > ddeg {
            None
        } else if ndeg < ddeg {
            Some(BigRational::zero())
        } else {
            Some(BigRational::new(self.num.coeff(ndeg), self.den.coeff(ddeg)))
        }
    }
}

impl PartialEq for LaurentFraction {
    /// Cross-multiplication: `a/b == c/d` iff `a*d == c*b`.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for LaurentFraction {}

impl Add for &LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: &LaurentFraction) -> LaurentFraction {
        let mut f = LaurentFraction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        };
        f.normalize();
        f
    }
}

impl Sub for &LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: &LaurentFraction) -> LaurentFraction {
        self + &(-rhs)
    }
}

impl Neg for &LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        LaurentFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: &LaurentFraction) -> LaurentFraction {
        let mut f = LaurentFraction { num: &self.num * &rhs.num, den: &self.den * &rhs.den };
        f.normalize();
        f
    }
}

forward_binop!(LaurentFraction, Add, add);
forward_binop!(LaurentFraction, Sub, sub);
forward_binop!(LaurentFraction, Mul, mul);

impl Neg for LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        -&self
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn exact_scale_down(p: &LaurentPoly, g: &BigInt) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(e, c)| (*e, c / g)))
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn qm() -> LaurentPoly {
        LaurentPoly::q_inv()
    }

    #[test]
    fn mul_binomial_square() {
        // (q - q^-1)^2 = q^2 - 2 + q^-2
        let d = LaurentPoly::q_minus_q_inv();
        let got = &d * &d;
        let want = LaurentPoly::from_terms([
            (2, BigInt::from(1)),
            (0, BigInt::from(-2)),
            (-2, BigInt::from(1)),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn mul_identity() {
        let p = LaurentPoly::from_terms([(3, BigInt::from(5)), (-1, BigInt::from(-2))]);
        assert_eq!(&LaurentPoly::one() * &p, p);
    }

    #[test]
    fn mul_difference_of_squares() {
        // (q+1)(q-1) = q^2 - 1
        let a = &qp() + &LaurentPoly::one();
        let b = &qp() - &LaurentPoly::one();
        let want = LaurentPoly::from_terms([(2, BigInt::from(1)), (0, BigInt::from(-1))]);
        assert_eq!(&a * &b, want);
    }

    #[test]
    fn fraction_eq_by_factorization() {
        // (q^2 - q^-2)/(q - q^-1) == (q + q^-1)/1
        let a = LaurentFraction::new(
            LaurentPoly::from_terms([(2, BigInt::from(1)), (-2, BigInt::from(-1))]),
            LaurentPoly::q_minus_q_inv(),
        )
        .unwrap();
        let b = LaurentFraction::from_poly(&qp() + &qm());
        assert_eq!(a, b);
    }

    #[test]
    fn fraction_neq() {
        let a = LaurentFraction::from_poly(qp());
        let b = LaurentFraction::from_poly(qm());
        assert_ne!(a, b);
    }

    #[test]
    fn fraction_zero_eq() {
        // 0/(q+1) == 0/(q^-1 + 3)
        let a = LaurentFraction::new(LaurentPoly::zero(), &qp() + &LaurentPoly::one()).unwrap();
        let b = LaurentFraction::new(
            LaurentPoly::zero(),
            &qm() + &LaurentPoly::constant(3),
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.is_zero());
    }

    #[test]
    fn fraction_zero_denominator_rejected() {
        assert!(LaurentFraction::new(LaurentPoly::one(), LaurentPoly::zero()).is_none());
    }

    #[test]
    fn fraction_den_sign_normalized() {
        // 1/(-q + q^2): lowest coefficient of den must come out positive
        let f = LaurentFraction::new(
            LaurentPoly::one(),
            LaurentPoly::from_terms([(1, BigInt::from(-1)), (2, BigInt::from(1))]),
        )
        .unwrap();
        let low = f.den().min_exp().unwrap();
        assert!(f.den().coeff(low) > BigInt::zero());
    }

    #[test]
    fn exact_div_roundtrip() {
        let a = LaurentPoly::from_terms([(2, BigInt::from(3)), (0, BigInt::from(-1)), (-1, BigInt::from(7))]);
        let b = LaurentPoly::from_terms([(1, BigInt::from(2)), (-2, BigInt::from(5))]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), a);
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn eval_and_limit() {
        let p = LaurentPoly::q_minus_q_inv();
        let two = BigRational::from(BigInt::from(2));
        assert_eq!(p.eval(&two), BigRational::new(BigInt::from(3), BigInt::from(2)));
        // (q+1)/(q-1) -> 1 as q -> infinity
        let f = LaurentFraction::new(&qp() + &LaurentPoly::one(), &qp() - &LaurentPoly::one()).unwrap();
        assert_eq!(f.at_q_inv_zero(), Some(BigRational::one()));
        // q has a pole at q^-1 = 0
        assert_eq!(LaurentFraction::from_poly(qp()).at_q_inv_zero(), None);
        // q^-1 -> 0
        assert_eq!(
            LaurentFraction::from_poly(qm()).at_q_inv_zero(),
            Some(BigRational::zero())
        );
    }

    // small random polynomials for property tests
    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-4i64..5, -9i64..10), 0..5)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    fn arb_fraction() -> impl Strategy<Value = LaurentFraction> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| LaurentFraction::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn poly_mul_assoc_comm(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn fraction_eq_is_equivalence(a in arb_fraction(), b in arb_fraction(), c in arb_fraction()) {
            prop_assert_eq!(&a, &a);
            if a == b {
                prop_assert_eq!(&b, &a);
            }
            if a == b && b == c {
                prop_assert_eq!(&a, &c);
            }
        }

        #[test]
        fn fraction_field_laws(a in arb_fraction(), b in arb_fraction(), c in arb_fraction()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse(), LaurentFraction::one());
            }
        }
    }
}
