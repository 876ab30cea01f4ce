//! Exact linear algebra over integral domains: fraction-free (Bareiss)
//! elimination for rank, span comparison and membership tests, with rows over
//! integer Laurent polynomials or big integers. Scaling a row by a nonzero
//! domain element does not change its span over the fraction field, so
//! fraction-valued rows are cleared to polynomial rows first.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::laurent::{LaurentFraction, LaurentPoly};

/// The operations Bareiss elimination needs: an integral domain with exact
/// division by earlier pivots.
pub trait ExactDomain: Clone + PartialEq + Zero + One {
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        assert!(r.is_zero(), "BigInt exact_div: nonzero remainder");
        q
    }
}

impl ExactDomain for LaurentPoly {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Self {
        LaurentPoly::exact_div(self, other)
    }
}

/// Rank of a matrix by Bareiss one-step fraction-free elimination.
pub fn rank<T: ExactDomain>(rows: &[Vec<T>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut rank = 0usize;
    let mut prev_pivot = T::one();
    let mut col = 0usize;
    while rank < m.len() && col < ncols {
        // find a pivot row
        let pivot_row = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let t = pivot.mul_ref(&m[r][c]).sub_ref(&m[r][col].mul_ref(&m[rank][c]));
                m[r][c] = t.exact_div(&prev_pivot);
            }
            m[r][col] = T::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Clears a fraction row to a Laurent-polynomial row (common denominator),
/// preserving its span over the fraction field.
pub fn clear_row(row: &[LaurentFraction]) -> Vec<LaurentPoly> {
    let mut common = LaurentPoly::one();
    for f in row {
        if !f.is_zero() {
            common = &common * f.den();
        }
    }
    row.iter()
        .map(|f| {
            if f.is_zero() {
                LaurentPoly::zero()
            } else {
                f.num() * &common.exact_div(f.den())
            }
        })
        .collect()
}

/// Rank of a matrix of Laurent fractions.
pub fn rank_fractions(rows: &[Vec<LaurentFraction>]) -> usize {
    let cleared: Vec<Vec<LaurentPoly>> = rows.iter().map(|r| clear_row(r)).collect();
    rank(&cleared)
}

/// Whether two row families span the same subspace over the fraction field.
pub fn spans_equal(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return false;
    }
    let mut joint = a.to_vec();
    joint.extend_from_slice(b);
    rank(&joint) == ra
}

/// Whether `v` lies in the row span of `rows` over the fraction field.
pub fn in_span(rows: &[Vec<LaurentPoly>], v: &[LaurentPoly]) -> bool {
    let r0 = rank(rows);
    let mut joint = rows.to_vec();
    joint.push(v.to_vec());
    rank(&joint) == r0
}

/// Kernel dimension of a rational matrix (columns - rank), after clearing
/// denominators row by row.
pub fn rational_kernel_dim(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let cleared: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for x in row {
                if !x.is_zero() {
                    lcm = lcm.lcm(x.denom());
                }
            }
            row.iter()
                .map(|x| (x * BigRational::from(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    ncols - rank(&cleared)
}

/// Deterministic reduced basis of the row span: Gauss-Jordan over the fraction
/// field with leading entries normalized to 1, rows ordered by pivot column.
pub fn echelon_basis(rows: &[Vec<LaurentFraction>]) -> Vec<Vec<LaurentFraction>> {
    let mut m: Vec<Vec<LaurentFraction>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<LaurentFraction>> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].inverse();
        for c in 0..ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in 0..ncols {
                row[c] = &row[c] - &(&factor * &pivot_row[c]);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    for row in m.into_iter().take(rank) {
        out.push(row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn integer_rank() {
        assert_eq!(rank(&bi(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&bi(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&bi(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&bi(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 1]])), 2);
    }

    #[test]
    fn poly_rank_and_span() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        // rows (1, q) and (q, q^2) are proportional over the fraction field
        let rows = vec![vec![one.clone(), q.clone()], vec![q.clone(), &q * &q]];
        assert_eq!(rank(&rows), 1);
        let other = vec![vec![&one + &q, &q + &(&q * &q)]];
        assert!(spans_equal(&rows, &other));
        assert!(in_span(&rows, &[&one + &q, &q + &(&q * &q)]));
        assert!(!in_span(&rows, &[one.clone(), LaurentPoly::zero()]));
    }

    #[test]
    fn fraction_rank() {
        // (1, 1/2) and (2, 1) are proportional
        let half = LaurentFraction::new(LaurentPoly::one(), LaurentPoly::constant(2)).unwrap();
        let two = LaurentFraction::from_poly(LaurentPoly::constant(2));
        let rows = vec![
            vec![LaurentFraction::one(), half.clone()],
            vec![two, LaurentFraction::one()],
        ];
        assert_eq!(rank_fractions(&rows), 1);
    }

    #[test]
    fn rational_kernel() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let two = BigRational::from(BigInt::from(2));
        let rows = vec![
            vec![BigRational::one(), half.clone()],
            vec![two, BigRational::one()],
        ];
        assert_eq!(rational_kernel_dim(&rows), 1);
    }

    #[test]
    fn echelon_is_deterministic_and_spans() {
        let q = LaurentFraction::from_poly(LaurentPoly::q());
        let rows = vec![
            vec![q.clone(), LaurentFraction::one(), LaurentFraction::zero()],
            vec![LaurentFraction::one(), LaurentFraction::one(), LaurentFraction::one()],
        ];
        let b1 = echelon_basis(&rows);
        let b2 = echelon_basis(&rows);
        assert_eq!(b1, b2);
        assert_eq!(b1.len(), 2);
        // leading entries are 1
        assert_eq!(b1[0][0], LaurentFraction::one());
    }
}
