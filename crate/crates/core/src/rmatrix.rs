//! The GL_q(m|n) R-matrix, the sign permutation action of H_r(q) on tensor
//! powers, the relation module I_3(V) with its Gamma spanning elements, and
//! the q^{-1} -> 0 local basis.
//!
//! Letters are 1..=m+n with 1..=m even and m+1..=m+n odd. The operator follows
//! the detailed action display (the normative form; see `build_rmatrix`):
//!
//!   g(e_i e_j) = (-1)^{i^} q^{(-1)^{i^}} e_i e_j              for i = j,
//!   g(e_i e_j) = (-1)^{i^ j^} e_j e_i + (q - q^{-1}) e_i e_j  for i < j,
//!   g(e_i e_j) = (-1)^{i^ j^} e_j e_i                         for i > j.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::Serialize;

use crate::hecke::{balanced_qint3, eulerian_idempotent, gamma_basis, HeckeElement};
use crate::laurent::{LaurentFraction, LaurentPoly};
use crate::linalg;
use crate::partition::Partition;
use crate::tableau::{enumerate_ssyt, SignedLetter, SuperTableau};

/// Letter parity: 0 for 1..=m, 1 above.
fn parity(letter: u8, m: usize) -> u32 {
    (letter as usize > m) as u32
}

// ---------------------------------------------------------------------------
// RMatrixOperator
// ---------------------------------------------------------------------------

/// The R-matrix as a sparse operator on V (x) V: maps an output index pair and
/// an input index pair to a Laurent polynomial entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixOperator {
    m: usize,
    n: usize,
    entries: BTreeMap<((u8, u8), (u8, u8)), LaurentPoly>,
}

impl RMatrixOperator {
    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn entry(&self, out: (u8, u8), input: (u8, u8)) -> LaurentPoly {
        self.entries.get(&(out, input)).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&((u8, u8), (u8, u8)), &LaurentPoly)> {
        self.entries.iter()
    }

    /// Applies the operator to slots (s, s+1) of a word (s is 0-based).
    fn apply_word(&self, word: &[u8], s: usize) -> Vec<(Vec<u8>, LaurentPoly)> {
        let (i, j) = (word[s], word[s + 1]);
        let mut out = Vec::new();
        for (((oi, oj), (ii, ij)), c) in &self.entries {
            if (*ii, *ij) == (i, j) {
                let mut w = word.to_vec();
                w[s] = *oi;
                w[s + 1] = *oj;
                out.push((w, c.clone()));
            }
        }
        out
    }
}

/// Builds the (m+n)^2 x (m+n)^2 R-matrix from the action display.
pub fn build_rmatrix(m: usize, n: usize) -> RMatrixOperator {
    assert!(m + n >= 1, "need at least one letter");
    let d = (m + n) as u8;
    let mut entries = BTreeMap::new();
    let qq = LaurentPoly::q_minus_q_inv();
    for i in 1..=d {
        for j in 1..=d {
            let (hi, hj) = (parity(i, m), parity(j, m));
            if i == j {
                // (-1)^{i^} q^{(-1)^{i^}}
                let c = if hi == 0 { LaurentPoly::q() } else { -LaurentPoly::q_inv() };
                entries.insert(((i, i), (i, i)), c);
            } else {
                let sign = if hi * hj == 1 { -1 } else { 1 };
                entries.insert(((j, i), (i, j)), LaurentPoly::constant(sign));
                if i < j {
                    entries.insert(((i, j), (i, j)), qq.clone());
                }
            }
        }
    }
    RMatrixOperator { m, n, entries }
}

// ---------------------------------------------------------------------------
// TensorVector
// ---------------------------------------------------------------------------

/// A vector in V^{(x) r}: a map from length-r index words to Laurent-fraction
/// coefficients, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    r: usize,
    coeffs: BTreeMap<Vec<u8>, LaurentFraction>,
}

impl TensorVector {
    pub fn zero(r: usize) -> Self {
        TensorVector { r, coeffs: BTreeMap::new() }
    }

    /// The basis word a_{i_1} (x) ... (x) a_{i_r}.
    pub fn basis_word(word: Vec<u8>) -> Self {
        let r = word.len();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(word, LaurentFraction::one());
        TensorVector { r, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, word: &[u8]) -> LaurentFraction {
        self.coeffs.get(word).cloned().unwrap_or_else(LaurentFraction::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<u8>, &LaurentFraction)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        assert_eq!(self.r, other.r, "tensor degree mismatch");
        let mut coeffs = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            let cur = coeffs.entry(w.clone()).or_insert_with(LaurentFraction::zero);
            *cur = &*cur + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        TensorVector { r: self.r, coeffs }
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        self.add(&other.scale(&LaurentFraction::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentFraction) -> TensorVector {
        if c.is_zero() {
            return TensorVector::zero(self.r);
        }
        TensorVector {
            r: self.r,
            coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Tensor concatenation.
    pub fn tensor(&self, other: &TensorVector) -> TensorVector {
        let mut coeffs = BTreeMap::new();
        for (wa, ca) in &self.coeffs {
            for (wb, cb) in &other.coeffs {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                coeffs.insert(w, ca * cb);
            }
        }
        TensorVector { r: self.r + other.r, coeffs }
    }

    /// Coefficient vector over the standard word order.
    pub fn to_vector(&self, words: &[Vec<u8>]) -> Vec<LaurentFraction> {
        words.iter().map(|w| self.coeff(w)).collect()
    }

    /// Exact specialization at rational q0; `None` if some coefficient has a
    /// pole there.
    pub fn specialize(&self, q0: &BigRational) -> Option<BTreeMap<Vec<u8>, BigRational>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.coeffs {
            let v = c.eval(q0)?;
            if !v.is_zero() {
                out.insert(w.clone(), v);
            }
        }
        Some(out)
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<String> = w.iter().map(u8::to_string).collect();
            write!(f, "({c})*[{}]", word.join(","))?;
        }
        Ok(())
    }
}

/// All length-r index words over the m+n letters, lexicographically.
pub fn index_words(m: usize, n: usize, r: usize) -> Vec<Vec<u8>> {
    let d = (m + n) as u8;
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=d).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

// ---------------------------------------------------------------------------
// The sign permutation action pi_q
// ---------------------------------------------------------------------------

/// Applies the generator g_s (1-based slot) through the R-matrix.
pub fn apply_generator(rm: &RMatrixOperator, v: &TensorVector, s: usize) -> TensorVector {
    assert!(s >= 1 && s < v.r, "slot out of range");
    let mut out = TensorVector::zero(v.r);
    for (w, c) in &v.coeffs {
        for (nw, p) in rm.apply_word(w, s - 1) {
            let term = TensorVector::basis_word(nw).scale(&(c * &LaurentFraction::from_poly(p)));
            out = out.add(&term);
        }
    }
    out
}

/// The sign permutation action of a Hecke element: for T_sigma with reduced
/// word s_{k_1} ... s_{k_l} (left-to-right product) the operator is
/// pi(g_{k_1}) o ... o pi(g_{k_l}), so the rightmost generator acts first.
pub fn pi_q_apply(h: &HeckeElement, v: &TensorVector, m: usize, n: usize) -> TensorVector {
    assert_eq!(h.rank(), v.r, "rank mismatch between Hecke element and tensor degree");
    let rm = build_rmatrix(m, n);
    let mut out = TensorVector::zero(v.r);
    for (sigma, c) in h.coeffs() {
        let mut cur = v.clone();
        for k in sigma.reduced_word().into_iter().rev() {
            cur = apply_generator(&rm, &cur, k);
        }
        out = out.add(&cur.scale(c));
    }
    out
}

// ---------------------------------------------------------------------------
// Yang-Baxter / Hecke / eigenvalue checks
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct RMatrixReport {
    pub m: usize,
    pub n: usize,
    pub yang_baxter: bool,
    pub hecke_relation: bool,
}

/// Checks the Yang-Baxter equation R1 R2 R1 = R2 R1 R2 on V^{(x)3} and the
/// Hecke relation R^2 = 1 + (q - q^{-1}) R on V^{(x)2}, word by word, as exact
/// Laurent polynomial identities.
pub fn verify_ybe_hecke(m: usize, n: usize) -> RMatrixReport {
    let rm = build_rmatrix(m, n);
    let qq = LaurentFraction::from_poly(LaurentPoly::q_minus_q_inv());

    let mut yang_baxter = true;
    for w in index_words(m, n, 3) {
        let v = TensorVector::basis_word(w);
        let lhs = apply_generator(&rm, &apply_generator(&rm, &apply_generator(&rm, &v, 1), 2), 1);
        let rhs = apply_generator(&rm, &apply_generator(&rm, &apply_generator(&rm, &v, 2), 1), 2);
        if lhs != rhs {
            yang_baxter = false;
            break;
        }
    }

    let mut hecke_relation = true;
    for w in index_words(m, n, 2) {
        let v = TensorVector::basis_word(w);
        let rv = apply_generator(&rm, &v, 1);
        let lhs = apply_generator(&rm, &rv, 1);
        let rhs = v.add(&rv.scale(&qq));
        if lhs != rhs {
            hecke_relation = false;
            break;
        }
    }

    RMatrixReport { m, n, yang_baxter, hecke_relation }
}

/// Kernel dimensions of (R - q0) and (R + q0^{-1}) at an exact rational
/// specialization q0 (generic: q0 not in {0, +-1}), i.e. the multiplicities of
/// the eigenvalues q and -q^{-1}.
pub fn eigen_multiplicities(m: usize, n: usize, q0: &BigRational) -> (usize, usize) {
    assert!(
        !q0.is_zero() && q0.clone() != BigRational::one() && q0.clone() != -BigRational::one(),
        "q0 must be generic (not 0, 1, -1)"
    );
    let rm = build_rmatrix(m, n);
    let words = index_words(m, n, 2);
    let widx: BTreeMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let d = words.len();
    // columns of R at q0
    let mut mat = vec![vec![BigRational::zero(); d]; d];
    for (col, w) in words.iter().enumerate() {
        let v = TensorVector::basis_word(w.clone());
        let rv = apply_generator(&rm, &v, 1);
        for (out_w, c) in rv.coeffs() {
            mat[widx[out_w]][col] = c.eval(q0).expect("polynomial entries have no poles");
        }
    }
    let shift = |mu: &BigRational| -> Vec<Vec<BigRational>> {
        let mut s = mat.clone();
        for (i, row) in s.iter_mut().enumerate() {
            row[i] -= mu;
        }
        s
    };
    let mult_q = linalg::rational_kernel_dim(&shift(q0));
    let mult_negqinv = linalg::rational_kernel_dim(&shift(&-q0.recip()));
    (mult_q, mult_negqinv)
}

// ---------------------------------------------------------------------------
// I_3(V): the relation module
// ---------------------------------------------------------------------------

/// The raw spanning family {pi_q(Gamma^12_3) w, pi_q(Gamma^13_2) w} over all
/// basis words w of V^{(x)3}, in deterministic order, zero vectors dropped.
pub fn gamma_span_vectors(m: usize, n: usize) -> Vec<TensorVector> {
    let (g12_3, g13_2) = gamma_basis();
    let mut out = Vec::new();
    for w in index_words(m, n, 3) {
        for g in [&g12_3, &g13_2] {
            let v = pi_q_apply(g, &TensorVector::basis_word(w.clone()), m, n);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

/// The image family {pi_q(e(q)) w} over all basis words.
pub fn idempotent_image_vectors(m: usize, n: usize) -> Vec<TensorVector> {
    let e = eulerian_idempotent(&balanced_qint3());
    let mut out = Vec::new();
    for w in index_words(m, n, 3) {
        let v = pi_q_apply(&e, &TensorVector::basis_word(w.clone()), m, n);
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

fn rows_of(vectors: &[TensorVector], words: &[Vec<u8>]) -> Vec<Vec<LaurentPoly>> {
    vectors
        .iter()
        .map(|v| linalg::clear_row(&v.to_vector(words)))
        .collect()
}

/// An exact echelon basis of I_3(V) = span{pi_q(Gamma) w} over the fraction
/// field. Its length is the dimension.
pub fn compute_i3(m: usize, n: usize) -> Vec<TensorVector> {
    let words = index_words(m, n, 3);
    let raw = gamma_span_vectors(m, n);
    let rows: Vec<Vec<LaurentFraction>> = raw.iter().map(|v| v.to_vector(&words)).collect();
    linalg::echelon_basis(&rows)
        .into_iter()
        .map(|row| {
            let mut coeffs = BTreeMap::new();
            for (w, c) in words.iter().zip(row) {
                if !c.is_zero() {
                    coeffs.insert(w.clone(), c);
                }
            }
            TensorVector { r: 3, coeffs }
        })
        .collect()
}

/// Whether span{pi_q(Gamma) w} equals span{pi_q(e(q)) w} over the fraction field.
pub fn gamma_span_equals_idempotent_image(m: usize, n: usize) -> bool {
    let words = index_words(m, n, 3);
    linalg::spans_equal(
        &rows_of(&gamma_span_vectors(m, n), &words),
        &rows_of(&idempotent_image_vectors(m, n), &words),
    )
}

// ---------------------------------------------------------------------------
// The Gamma tensor elements and the local basis
// ---------------------------------------------------------------------------

/// The kappa-deformed superbracket
/// [[x, y]]_kappa = x (x) y - (-1)^{x^ y^} kappa y (x) x
/// on parity-homogeneous tensor vectors.
pub fn kappa_bracket(x: &TensorVector, y: &TensorVector, kappa: &LaurentPoly, m: usize) -> TensorVector {
    let px = vector_parity(x, m);
    let py = vector_parity(y, m);
    let sign = if px * py == 1 { -1 } else { 1 };
    let factor = LaurentFraction::from_poly(kappa.scale(&BigInt::from(sign)));
    x.tensor(y).sub(&y.tensor(x).scale(&factor))
}

/// The undeformed superbracket [[x, y]] = [[x, y]]_1.
pub fn super_bracket(x: &TensorVector, y: &TensorVector, m: usize) -> TensorVector {
    kappa_bracket(x, y, &LaurentPoly::one(), m)
}

fn vector_parity(v: &TensorVector, m: usize) -> u32 {
    let w = v.coeffs.keys().next().expect("parity of the zero vector is undefined");
    w.iter().map(|&l| parity(l, m)).sum::<u32>() % 2
}

/// Converts a shape-(2,1) tableau into its alphabet positions: top row
/// (t1, t2), bottom entry t3, each as a letter 1..=m+n.
fn tableau_letters(t: &SuperTableau, m: usize) -> (u8, u8, u8) {
    let to_pos = |l: SignedLetter| -> u8 { (l.weight_slot(m) + 1) as u8 };
    let rows = t.rows();
    (to_pos(rows[0][0]), to_pos(rows[0][1]), to_pos(rows[1][0]))
}

/// The spanning elements of I_3(V), one per (m,n)-SSYT of shape (2,1),
/// expressed through nested superbrackets with coefficients polynomial in
/// q^{-1}. The distinct-letter elements carry the correction factors
/// s = -(-1)^{i1^ i2^} and t = (-1)^{i2^} q^{-1} in front of the two bracket
/// summands; the equal-letter elements are single q^{-1}-brackets. Their span
/// equals `compute_i3` and their q^{-1} -> 0 limits are the local basis.
pub fn gamma_elements(m: usize, n: usize) -> Vec<(SuperTableau, TensorVector)> {
    let a = |i: u8| TensorVector::basis_word(vec![i]);
    let q_inv = LaurentPoly::q_inv();
    let q_inv2 = LaurentPoly::monomial(-2, BigInt::one());
    let mut out = Vec::new();
    for tab in enumerate_ssyt(&Partition::new(vec![2, 1]), m, n) {
        let (t1, t2, t3) = tableau_letters(&tab, m);
        let elem = if t1 == t2 {
            // content {a, a, b}, a < b, tableau (a,a;b): even a
            debug_assert_eq!(parity(t1, m), 0);
            kappa_bracket(&super_bracket(&a(t1), &a(t3), m), &a(t1), &q_inv, m)
        } else if t1 == t3 {
            // content {a, a, b}, tableau (a,b;a): odd a
            debug_assert_eq!(parity(t1, m), 1);
            kappa_bracket(&a(t1), &super_bracket(&a(t1), &a(t2), m), &q_inv, m)
        } else if t2 == t3 {
            // content {a, b, b}, tableau (a,b;b)
            if parity(t2, m) == 1 {
                kappa_bracket(&super_bracket(&a(t1), &a(t2), m), &a(t2), &q_inv, m)
            } else {
                kappa_bracket(&a(t2), &super_bracket(&a(t1), &a(t2), m), &q_inv, m)
            }
        } else {
            // distinct letters i1 < i2 < i3; the tableau is (i1,i3;i2) or (i1,i2;i3)
            let (i1, i2, i3) = if t2 > t3 { (t1, t3, t2) } else { (t1, t2, t3) };
            let (h1, h2) = (parity(i1, m), parity(i2, m));
            let s_coeff = LaurentPoly::constant(if h1 * h2 == 1 { 1 } else { -1 });
            let t_coeff = if h2 == 1 { -&q_inv } else { q_inv.clone() };
            let (first, second) = if t2 > t3 {
                // tableau (i1, i3; i2)
                (
                    kappa_bracket(&a(i2), &super_bracket(&a(i3), &a(i1), m), &q_inv2, m),
                    super_bracket(&a(i3), &super_bracket(&a(i1), &a(i2), m), m),
                )
            } else {
                // tableau (i1, i2; i3)
                (
                    kappa_bracket(&super_bracket(&a(i3), &a(i1), m), &a(i2), &q_inv2, m),
                    super_bracket(&super_bracket(&a(i2), &a(i3), m), &a(i1), m),
                )
            };
            first
                .scale(&LaurentFraction::from_poly(s_coeff))
                .add(&second.scale(&LaurentFraction::from_poly(t_coeff)))
        };
        out.push((tab, elem));
    }
    out
}

/// A coefficient with a pole at q^{-1} = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleAtQInvZero {
    pub word: Vec<u8>,
}

impl fmt::Display for PoleAtQInvZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient of word {:?} has a pole at q^-1 = 0", self.word)
    }
}

impl std::error::Error for PoleAtQInvZero {}

/// Coefficient-wise evaluation at q^{-1} = 0.
pub fn local_basis_limit(gammas: &[TensorVector]) -> Result<Vec<TensorVector>, PoleAtQInvZero> {
    gammas
        .iter()
        .map(|v| {
            let mut coeffs = BTreeMap::new();
            for (w, c) in &v.coeffs {
                let val = c
                    .at_q_inv_zero()
                    .ok_or_else(|| PoleAtQInvZero { word: w.clone() })?;
                if !val.is_zero() {
                    assert!(val.is_integer(), "local basis limits are integral");
                    let p = LaurentPoly::monomial(0, val.to_integer());
                    coeffs.insert(w.clone(), LaurentFraction::from_poly(p));
                }
            }
            Ok(TensorVector { r: v.r, coeffs })
        })
        .collect()
}

/// The two-term binomial patterns of the local basis:
///   a_{i1} a_{i3} a_{i2} - (-1)^{i1^ i3^} a_{i3} a_{i1} a_{i2}
///       for (i1 <= i2 < i3, i2^=0) or (i1 < i2 <= i3, i2^=1),
///   a_{i2} a_{i1} a_{i3} - (-1)^{i1^ i3^} a_{i2} a_{i3} a_{i1}
///       for (i1 < i2 <= i3, i2^=0) or (i1 <= i2 < i3, i2^=1).
pub fn local_basis_patterns(m: usize, n: usize) -> Vec<TensorVector> {
    let d = (m + n) as u8;
    let mut out = Vec::new();
    for i1 in 1..=d {
        for i2 in 1..=d {
            for i3 in 1..=d {
                let h2 = parity(i2, m);
                let sign = if parity(i1, m) * parity(i3, m) == 1 { 1 } else { -1 };
                let neg = LaurentFraction::from_int(sign);
                if (i1 <= i2 && i2 < i3 && h2 == 0) || (i1 < i2 && i2 <= i3 && h2 == 1) {
                    let v = TensorVector::basis_word(vec![i1, i3, i2])
                        .add(&TensorVector::basis_word(vec![i3, i1, i2]).scale(&neg));
                    out.push(v);
                }
                if (i1 < i2 && i2 <= i3 && h2 == 0) || (i1 <= i2 && i2 < i3 && h2 == 1) {
                    let v = TensorVector::basis_word(vec![i2, i1, i3])
                        .add(&TensorVector::basis_word(vec![i2, i3, i1]).scale(&neg));
                    out.push(v);
                }
            }
        }
    }
    out
}

/// The classical double superbrackets [[e_i, [[e_j, e_k]]]] at q = 1, as
/// rational row vectors over the standard word order. Their span is the
/// classical relation space that I_3 specializes to.
pub fn classical_double_bracket_rows(m: usize, n: usize) -> Vec<Vec<BigRational>> {
    let words = index_words(m, n, 3);
    let widx: BTreeMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let one = LaurentPoly::one();
    let a = |i: u8| TensorVector::basis_word(vec![i]);
    let d = (m + n) as u8;
    let mut out = Vec::new();
    let q1 = BigRational::one();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                let inner = super_bracket(&a(j), &a(k), m);
                if inner.is_zero() {
                    continue;
                }
                let v = kappa_bracket(&a(i), &inner, &one, m);
                if v.is_zero() {
                    continue;
                }
                let spec = v.specialize(&q1).expect("constant coefficients");
                if spec.is_empty() {
                    continue;
                }
                let mut row = vec![BigRational::zero(); words.len()];
                for (w, c) in spec {
                    row[widx[&w]] = c;
                }
                out.push(row);
            }
        }
    }
    out
}

/// Rational rows of a tensor-vector family at a regular specialization point.
pub fn specialized_rows(
    vectors: &[TensorVector],
    m: usize,
    n: usize,
    q0: &BigRational,
) -> Vec<Vec<BigRational>> {
    let words = index_words(m, n, 3);
    let widx: BTreeMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    vectors
        .iter()
        .filter_map(|v| {
            let spec = v.specialize(q0)?;
            let mut row = vec![BigRational::zero(); words.len()];
            for (w, c) in spec {
                row[widx[&w]] = c;
            }
            Some(row)
        })
        .collect()
}

/// Rank of a rational row family: the kernel dimension of the transpose
/// complements it to the number of rows.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let transpose: Vec<Vec<BigRational>> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    rows.len() - linalg::rational_kernel_dim(&transpose)
}
