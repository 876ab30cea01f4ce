//! The signed alphabet and super semistandard Young tableaux (SSYT).
//!
//! Letters come from {1, ..., m, 1bar, ..., nbar} with every even (unbarred)
//! letter below every odd (barred) one. Even letters are weakly increasing
//! along rows and strictly increasing down columns; odd letters strictly
//! increasing along rows and weakly increasing down columns.

use std::fmt;

use crate::partition::Partition;

/// A letter of the signed alphabet. `index` is 1-based within its parity block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignedLetter {
    Even(u32),
    Odd(u32),
}

impl SignedLetter {
    pub fn is_odd(self) -> bool {
        matches!(self, SignedLetter::Odd(_))
    }

    /// Z_2 degree: 0 for even letters, 1 for odd.
    pub fn parity(self) -> u32 {
        self.is_odd() as u32
    }

    pub fn index(self) -> u32 {
        match self {
            SignedLetter::Even(i) | SignedLetter::Odd(i) => i,
        }
    }

    /// Whether the letter belongs to the (m,n) alphabet.
    pub fn in_alphabet(self, m: usize, n: usize) -> bool {
        match self {
            SignedLetter::Even(i) => i >= 1 && (i as usize) <= m,
            SignedLetter::Odd(i) => i >= 1 && (i as usize) <= n,
        }
    }

    /// Position in the weight vector of length m+n: even letters first.
    pub fn weight_slot(self, m: usize) -> usize {
        match self {
            SignedLetter::Even(i) => i as usize - 1,
            SignedLetter::Odd(i) => m + i as usize - 1,
        }
    }

    /// The k-th letter of the (m,n) alphabet in increasing order, k = 0-based.
    pub fn nth(k: usize, m: usize) -> SignedLetter {
        if k < m {
            SignedLetter::Even(k as u32 + 1)
        } else {
            SignedLetter::Odd((k - m) as u32 + 1)
        }
    }
}

impl PartialOrd for SignedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedLetter {
    /// Total order 1 < 2 < ... < m < 1bar < ... < nbar.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.parity(), self.index()).cmp(&(other.parity(), other.index()))
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedLetter::Even(i) => write!(f, "{i}"),
            SignedLetter::Odd(i) => write!(f, "{i}b"),
        }
    }
}

/// Parses a comma-separated word, odd letters suffixed with `b` (e.g. "1,2b,2b").
pub fn parse_word(s: &str) -> Result<Vec<SignedLetter>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (digits, odd) = match tok.strip_suffix('b') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let idx: u32 = digits
                .parse()
                .map_err(|_| format!("bad letter token {tok:?}"))?;
            if idx == 0 {
                return Err(format!("letter index must be positive in {tok:?}"));
            }
            Ok(if odd { SignedLetter::Odd(idx) } else { SignedLetter::Even(idx) })
        })
        .collect()
}

pub fn format_word(w: &[SignedLetter]) -> String {
    w.iter().map(SignedLetter::to_string).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// SuperTableau
// ---------------------------------------------------------------------------

/// Row adjacency: `a` may sit immediately left of `b`.
fn row_ok(a: SignedLetter, b: SignedLetter) -> bool {
    a < b || (a == b && !a.is_odd())
}

/// Column adjacency: `a` may sit immediately above `b`.
fn col_ok(a: SignedLetter, b: SignedLetter) -> bool {
    a < b || (a == b && a.is_odd())
}

/// A filling of a Young diagram by signed letters; rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperTableau {
    rows: Vec<Vec<SignedLetter>>,
}

impl SuperTableau {
    /// Builds a tableau from rows without validating the filling rules (shape
    /// validity is asserted); call `is_valid` to check semistandardness.
    pub fn from_rows(rows: Vec<Vec<SignedLetter>>) -> Self {
        assert!(
            rows.windows(2).all(|w| w[0].len() >= w[1].len()) && rows.iter().all(|r| !r.is_empty()),
            "rows must have weakly decreasing positive lengths"
        );
        SuperTableau { rows }
    }

    pub fn empty() -> Self {
        SuperTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<SignedLetter>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Checks every row/column constraint and that all letters lie in the
    /// (m,n) alphabet.
    pub fn is_valid(&self, m: usize, n: usize) -> bool {
        for row in &self.rows {
            if !row.iter().all(|l| l.in_alphabet(m, n)) {
                return false;
            }
            if !row.windows(2).all(|w| row_ok(w[0], w[1])) {
                return false;
            }
        }
        for i in 0..self.rows.len().saturating_sub(1) {
            let (above, below) = (&self.rows[i], &self.rows[i + 1]);
            if !below.iter().enumerate().all(|(j, &b)| col_ok(above[j], b)) {
                return false;
            }
        }
        true
    }

    /// Exponent vector of length m+n counting letter occurrences.
    pub fn weight(&self, m: usize, n: usize) -> Vec<u32> {
        let mut w = vec![0u32; m + n];
        for row in &self.rows {
            for l in row {
                w[l.weight_slot(m)] += 1;
            }
        }
        w
    }

    /// Row reading word: rows left to right, bottom row first.
    pub fn row_reading_word(&self) -> Vec<SignedLetter> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", format_word(r)))
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

/// Enumerates all valid (m,n)-SSYT of the given shape, by backtracking fill in
/// row-major order. The output order is fixed by the letter order; the list is
/// empty exactly when the shape is outside the (m,n)-hook.
pub fn enumerate_ssyt(shape: &Partition, m: usize, n: usize) -> Vec<SuperTableau> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let alphabet: Vec<SignedLetter> = (0..m + n).map(|k| SignedLetter::nth(k, m)).collect();
    let mut rows: Vec<Vec<SignedLetter>> = shape
        .parts()
        .iter()
        .map(|&len| Vec::with_capacity(len as usize))
        .collect();
    let mut out = Vec::new();
    fill(&cells, 0, &alphabet, &mut rows, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    alphabet: &[SignedLetter],
    rows: &mut Vec<Vec<SignedLetter>>,
    out: &mut Vec<SuperTableau>,
) {
    if k == cells.len() {
        out.push(SuperTableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    for &l in alphabet {
        if c > 0 && !row_ok(rows[r][c - 1], l) {
            continue;
        }
        if r > 0 && !col_ok(rows[r - 1][c], l) {
            continue;
        }
        rows[r].push(l);
        fill(cells, k + 1, alphabet, rows, out);
        rows[r].pop();
    }
}

/// Counts the SSYT of a shape without materializing them.
pub fn count_ssyt(shape: &Partition, m: usize, n: usize) -> usize {
    enumerate_ssyt(shape, m, n).len()
}

/// Enumerates the weight vectors (in k even letters) of all skew semistandard
/// tableaux of shape lambda/mu: weakly increasing rows, strictly increasing
/// columns. Used by the skew Schur polynomial.
pub fn enumerate_skew_weights(lambda: &Partition, mu: &Partition, k: usize) -> Vec<Vec<u32>> {
    assert!(lambda.contains(mu), "mu must be contained in lambda");
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (mu.part(r) as usize..len as usize).map(move |c| (r, c)))
        .collect();
    let nrows = lambda.len();
    let ncols = lambda.part(0) as usize;
    let mut grid = vec![vec![0u32; ncols]; nrows]; // 0 = cell absent/unfilled
    let mut out = Vec::new();
    fn bt(
        cells: &[(usize, usize)],
        idx: usize,
        k: usize,
        mu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == cells.len() {
            let mut w = vec![0u32; k];
            for &(r, c) in cells {
                w[grid[r][c] as usize - 1] += 1;
            }
            out.push(w);
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=k as u32 {
            if c > 0 && c > mu.part(r) as usize && grid[r][c - 1] > v {
                continue; // weak rows
            }
            if r > 0 && c >= mu.part(r - 1) as usize && grid[r - 1][c] >= v {
                continue; // strict columns (only against cells present in the skew shape)
            }
            grid[r][c] = v;
            bt(cells, idx + 1, k, mu, grid, out);
            grid[r][c] = 0;
        }
    }
    bt(&cells, 0, k, mu, &mut grid, &mut out);
    out
}
