//! Partitions, Frobenius coordinates, hooks, the self-conjugate family F_0, the
//! p-augmented family F_p, and the epsilon-configuration bijection with its
//! sign formula.

use std::fmt;

/// A partition: weakly decreasing sequence of positive integers (empty allowed).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Panics when the sequence
    /// is not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes |lambda|.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Row length, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self == &self.conjugate()
    }

    /// Containment of diagrams: `mu` fits inside `self` row by row.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.parts.iter().enumerate().all(|(i, &m)| self.part(i) >= m)
    }

    /// Number of diagonal boxes.
    pub fn diagonal_len(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    /// Frobenius coordinates: alpha_i = lambda_i - i, beta_i = lambda'_i - i
    /// for i up to the diagonal length (0-based arms/legs).
    pub fn to_frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.diagonal_len();
        let arms = (0..r).map(|i| self.parts[i] - (i as u32 + 1)).collect();
        let legs = (0..r).map(|i| conj.parts[i] - (i as u32 + 1)).collect();
        FrobeniusCoords { arms, legs }
    }

    /// Whether the diagram lies in the (m,n)-hook: lambda_j <= n for all j > m.
    pub fn in_hook(&self, m: usize, n: usize) -> bool {
        self.parts.iter().skip(m).all(|&p| p as usize <= n)
    }

    /// Augments a self-conjugate partition into F_p: Frobenius arms grow by p.
    /// Errs on a non-self-conjugate input.
    pub fn p_augment(&self, p: u32) -> Result<Partition, NotSelfConjugate> {
        if !self.is_self_conjugate() {
            return Err(NotSelfConjugate(self.clone()));
        }
        let fc = self.to_frobenius();
        let arms: Vec<u32> = fc.arms.iter().map(|a| a + p).collect();
        Ok(FrobeniusCoords { arms, legs: fc.legs.clone() }.to_partition())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSelfConjugate(pub Partition);

impl fmt::Display for NotSelfConjugate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "partition {} is not self-conjugate", self.0)
    }
}

impl std::error::Error for NotSelfConjugate {}

// ---------------------------------------------------------------------------
// Frobenius coordinates
// ---------------------------------------------------------------------------

/// Frobenius coordinates (arms | legs): strictly decreasing arm and leg lengths
/// measured from the diagonal boxes, equal length r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Self {
        assert_eq!(arms.len(), legs.len(), "arms and legs must have equal length");
        assert!(arms.windows(2).all(|w| w[0] > w[1]), "arms must strictly decrease");
        assert!(legs.windows(2).all(|w| w[0] > w[1]), "legs must strictly decrease");
        FrobeniusCoords { arms, legs }
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Rebuilds the partition: row i (0-based, i < r) has length arm_i + i + 1;
    /// below the diagonal, row i has length #{k : leg_k >= i - k}.
    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        let mut parts: Vec<u32> = (0..r).map(|i| self.arms[i] + i as u32 + 1).collect();
        let mut i = r;
        loop {
            let len = (0..r)
                .filter(|&k| self.legs[k] as usize >= i - k)
                .count() as u32;
            if len == 0 {
                break;
            }
            parts.push(len);
            i += 1;
        }
        Partition::new(parts)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_seq = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", fmt_seq(&self.arms), fmt_seq(&self.legs))
    }
}

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

/// All partitions of `r`, in descending lexicographic order.
pub fn enumerate_partitions(r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_parts(r, r, &mut stack, &mut out);
    out
}

fn gen_parts(rem: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: acc.clone() });
        return;
    }
    let hi = rem.min(max);
    for first in (1..=hi).rev() {
        acc.push(first);
        gen_parts(rem - first, first, acc, out);
        acc.pop();
    }
}

/// All partitions of `r` inside the (m,n)-hook, optionally with first row <= p,
/// in descending lexicographic order.
pub fn enumerate_hook(m: usize, n: usize, r: u32, p: Option<u32>) -> Vec<Partition> {
    enumerate_partitions(r)
        .into_iter()
        .filter(|lam| lam.in_hook(m, n) && p.is_none_or(|p| lam.part(0) <= p))
        .collect()
}

/// All self-conjugate partitions of size at most `max_size`, ordered by size
/// then descending lexicographically.
pub fn enumerate_self_conjugate(max_size: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for r in 0..=max_size {
        out.extend(
            enumerate_partitions(r)
                .into_iter()
                .filter(Partition::is_self_conjugate),
        );
    }
    out
}

// ---------------------------------------------------------------------------
// Epsilon configurations
// ---------------------------------------------------------------------------

/// A sign configuration (eps_1, ..., eps_n) in {+1,-1}^n together with the
/// parastatistics order p, indexing one F_p partition via the Weyl-vector
/// bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonConfig {
    signs: Vec<i8>,
    p: u32,
}

impl EpsilonConfig {
    pub fn new(signs: Vec<i8>, p: u32) -> Self {
        assert!(!signs.is_empty(), "epsilon configuration needs n >= 1");
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "signs must be +-1");
        EpsilonConfig { signs, p }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    /// All 2^n configurations for a given n and p, in a fixed order.
    pub fn all(n: usize, p: u32) -> Vec<EpsilonConfig> {
        assert!(n >= 1 && n <= 20, "epsilon enumeration limited to 1..=20");
        (0..(1usize << n))
            .map(|mask| {
                let signs = (0..n)
                    .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                    .collect();
                EpsilonConfig::new(signs, p)
            })
            .collect()
    }

    /// Maps the configuration to its partition, diagonal count and the
    /// signature of the sorting permutation.
    ///
    /// Works with doubled integers to avoid half-integer Weyl-vector entries:
    /// 2*nu_i = (n+1-2i) + (1-eps_{i'})*(2n+1-2i' + p) with i' = n+1-i. The
    /// shift by p enters only the eps = -1 entries; the resulting weight
    /// 2*lambda_i = 2*nu_{sigma(i)} - (n+1-2i) is always an even nonnegative
    /// integer and lambda lies in F_p (self-conjugate when p = 0).
    pub fn to_partition(&self) -> (Partition, usize, i32) {
        let n = self.n() as i64;
        let p = self.p as i64;
        // doubled nu entries, i = 1..=n
        let mut nu2: Vec<i64> = (1..=n)
            .map(|i| {
                let ip = n + 1 - i; // the involution i'
                let eps = self.signs[(ip - 1) as usize] as i64;
                let rho2 = 2 * n + 1 - 2 * ip;
                (n + 1 - 2 * i) + (1 - eps) / 2 * 2 * (rho2 + p)
            })
            .collect();
        // sort descending, counting inversions of the sorting permutation
        let mut sign = 1i32;
        for i in 1..nu2.len() {
            let mut j = i;
            while j > 0 && nu2[j - 1] < nu2[j] {
                nu2.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        let parts: Vec<u32> = (1..=n)
            .map(|i| {
                let lam2 = nu2[(i - 1) as usize] - (n + 1 - 2 * i);
                assert!(lam2 >= 0 && lam2 % 2 == 0, "epsilon weight must be an even nonnegative integer");
                (lam2 / 2) as u32
            })
            .collect();
        let r = self.signs.iter().filter(|s| **s == -1).count();
        (Partition::new(parts), r, sign)
    }
}
