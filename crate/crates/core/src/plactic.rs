//! The signed super-plactic monoid: super-Knuth rewriting on the signed
//! alphabet, canonicalization of words to +-(tableau), the monoid product, and
//! the p-restriction modelling the Fock-space quotient.
//!
//! The rewriting relations, each carrying the sign (-1)^{x^ z^}:
//!
//!   x z y = (-1)^{x^ z^} z x y   for (x <= y < z, y^=0) or (x < y <= z, y^=1)
//!   y x z = (-1)^{x^ z^} y z x   for (x < y <= z, y^=0) or (x <= y < z, y^=1)
//!
//! The normative canonicalizer is the breadth-first closure of a word under
//! these moves: the unique class member that is the row reading word of a
//! valid tableau is the canonical representative. The closure also watches for
//! a word reachable with both signs, which would make the sign ill-defined.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::tableau::{format_word, SignedLetter, SuperTableau};

/// A word over the signed alphabet with an overall sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWord {
    pub letters: Vec<SignedLetter>,
    pub sign: i8,
}

impl SignedWord {
    pub fn new(letters: Vec<SignedLetter>, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +-1");
        SignedWord { letters, sign }
    }

    pub fn positive(letters: Vec<SignedLetter>) -> Self {
        SignedWord::new(letters, 1)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { "-" } else { "+" }, format_word(&self.letters))
    }
}

/// Canonical form of a word class: zero, or a sign together with the tableau
/// whose row reading word represents the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalForm {
    Zero,
    Tableau { sign: i8, tableau: SuperTableau },
}

impl CanonicalForm {
    pub fn unit() -> Self {
        CanonicalForm::Tableau { sign: 1, tableau: SuperTableau::empty() }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CanonicalForm::Zero)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::Zero => write!(f, "0"),
            CanonicalForm::Tableau { sign, tableau } => {
                write!(f, "{}{}", if *sign < 0 { "-" } else { "+" }, tableau)
            }
        }
    }
}

/// A word reachable with both signs, making the class sign ill-defined. Never
/// expected for genuine super-Knuth classes; reported rather than asserted so
/// the property can be tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignInconsistency {
    pub word: Vec<SignedLetter>,
}

impl fmt::Display for SignInconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "word {} reachable with both signs", format_word(&self.word))
    }
}

impl std::error::Error for SignInconsistency {}

fn parity(l: SignedLetter) -> u32 {
    l.parity()
}

/// One rewriting step: `(new letters, sign factor)`.
type Move = (Vec<SignedLetter>, i8);

/// All words reachable from `w` by one application of either relation, in
/// either direction, at any position.
pub fn knuth_moves(w: &SignedWord, m: usize, n: usize) -> Vec<SignedWord> {
    debug_assert!(w.letters.iter().all(|l| l.in_alphabet(m, n)));
    let _ = (m, n);
    raw_moves(&w.letters)
        .into_iter()
        .map(|(letters, factor)| SignedWord::new(letters, w.sign * factor))
        .collect()
}

fn raw_moves(letters: &[SignedLetter]) -> Vec<Move> {
    let mut out = Vec::new();
    for s in 0..letters.len().saturating_sub(2) {
        let (a, b, c) = (letters[s], letters[s + 1], letters[s + 2]);
        // first relation: the window is x z y or z x y; both directions swap
        // the first two letters and multiply by (-1)^{x^ z^}
        for (x, z) in [(a, b), (b, a)] {
            let y = c;
            let applies = (x <= y && y < z && parity(y) == 0) || (x < y && y <= z && parity(y) == 1);
            if applies {
                let mut nl = letters.to_vec();
                nl.swap(s, s + 1);
                let factor = if parity(x) * parity(z) == 1 { -1 } else { 1 };
                out.push((nl, factor));
                break;
            }
        }
        // second relation: the window is y x z or y z x; both directions swap
        // the last two letters
        for (x, z) in [(b, c), (c, b)] {
            let y = a;
            let applies = (x < y && y <= z && parity(y) == 0) || (x <= y && y < z && parity(y) == 1);
            if applies {
                let mut nl = letters.to_vec();
                nl.swap(s + 1, s + 2);
                let factor = if parity(x) * parity(z) == 1 { -1 } else { 1 };
                out.push((nl, factor));
                break;
            }
        }
    }
    out
}

/// The full equivalence class of a word: every reachable word with its sign
/// relative to the input. Errs when some word is reachable with both signs.
pub fn word_class(
    letters: &[SignedLetter],
) -> Result<BTreeMap<Vec<SignedLetter>, i8>, SignInconsistency> {
    let mut seen: BTreeMap<Vec<SignedLetter>, i8> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(letters.to_vec(), 1);
    queue.push_back(letters.to_vec());
    while let Some(u) = queue.pop_front() {
        let u_sign = seen[&u];
        for (v, factor) in raw_moves(&u) {
            let v_sign = u_sign * factor;
            match seen.get(&v) {
                Some(&s) if s != v_sign => return Err(SignInconsistency { word: v }),
                Some(_) => {}
                None => {
                    seen.insert(v.clone(), v_sign);
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(seen)
}

/// All tableaux whose row reading word equals `letters`, over all row splits.
/// A reading word determines at most one tableau; the Vec return lets tests
/// assert that.
pub fn tableaux_with_reading_word(letters: &[SignedLetter], m: usize, n: usize) -> Vec<SuperTableau> {
    if letters.is_empty() {
        return vec![SuperTableau::empty()];
    }
    let len = letters.len();
    let mut out = Vec::new();
    // cut points between positions: bit k set = cut after position k
    for mask in 0u32..(1 << (len - 1)) {
        let mut segs: Vec<Vec<SignedLetter>> = Vec::new();
        let mut cur = vec![letters[0]];
        for (k, &l) in letters.iter().enumerate().skip(1) {
            if mask & (1 << (k - 1)) != 0 {
                segs.push(std::mem::take(&mut cur));
            }
            cur.push(l);
        }
        segs.push(cur);
        // segments are bottom row first; rows of the tableau go top to bottom
        segs.reverse();
        if !segs.windows(2).all(|w| w[0].len() >= w[1].len()) {
            continue;
        }
        let t = SuperTableau::from_rows(segs);
        if t.is_valid(m, n) {
            out.push(t);
        }
    }
    out
}

/// Canonicalizes a signed word by breadth-first closure: returns the unique
/// (sign, tableau) with `w` equivalent to sign * reading word of the tableau.
pub fn canonicalize(w: &SignedWord, m: usize, n: usize) -> Result<CanonicalForm, SignInconsistency> {
    if w.is_empty() {
        return Ok(CanonicalForm::Tableau { sign: w.sign, tableau: SuperTableau::empty() });
    }
    let class = word_class(&w.letters)?;
    let mut hits: Vec<(i8, SuperTableau)> = Vec::new();
    for (u, rel_sign) in &class {
        for t in tableaux_with_reading_word(u, m, n) {
            hits.push((*rel_sign, t));
        }
    }
    assert_eq!(
        hits.len(),
        1,
        "class of {} must contain exactly one tableau reading word, found {}",
        format_word(&w.letters),
        hits.len()
    );
    let (rel_sign, tableau) = hits.pop().unwrap();
    // w ~ rel_sign * reading_word(tableau), so the overall sign multiplies
    Ok(CanonicalForm::Tableau { sign: w.sign * rel_sign, tableau })
}

/// The monoid product: juxtaposition of reading words, canonical form of the
/// result. Zero absorbs.
pub fn product(a: &CanonicalForm, b: &CanonicalForm, m: usize, n: usize) -> Result<CanonicalForm, SignInconsistency> {
    match (a, b) {
        (CanonicalForm::Zero, _) | (_, CanonicalForm::Zero) => Ok(CanonicalForm::Zero),
        (
            CanonicalForm::Tableau { sign: sa, tableau: ta },
            CanonicalForm::Tableau { sign: sb, tableau: tb },
        ) => {
            let mut letters = ta.row_reading_word();
            letters.extend(tb.row_reading_word());
            canonicalize(&SignedWord::new(letters, sa * sb), m, n)
        }
    }
}

/// The Fock-space quotient at order p: a canonical form dies exactly when its
/// tableau's first row is longer than p.
pub fn p_restrict(c: &CanonicalForm, p: u32) -> CanonicalForm {
    assert!(p >= 1, "p-restriction needs p >= 1");
    match c {
        CanonicalForm::Zero => CanonicalForm::Zero,
        CanonicalForm::Tableau { tableau, .. } => {
            let first_row = tableau.rows().first().map_or(0, Vec::len);
            if first_row as u32 > p {
                CanonicalForm::Zero
            } else {
                c.clone()
            }
        }
    }
}

/// All words of a given length over the (m,n) alphabet, lexicographically.
pub fn all_words(len: usize, m: usize, n: usize) -> Vec<Vec<SignedLetter>> {
    let alphabet: Vec<SignedLetter> = (0..m + n).map(|k| SignedLetter::nth(k, m)).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_hook;
    use crate::tableau::count_ssyt;

    fn ev(i: u32) -> SignedLetter {
        SignedLetter::Even(i)
    }

    fn od(i: u32) -> SignedLetter {
        SignedLetter::Odd(i)
    }

    #[test]
    fn move_examples() {
        // classical y x z = y z x with x=1 < y=2 <= z=3: (2,1,3) -> (2,3,1), sign +1
        let w = SignedWord::positive(vec![ev(2), ev(1), ev(3)]);
        let moves = knuth_moves(&w, 3, 0);
        assert!(moves.contains(&SignedWord::new(vec![ev(2), ev(3), ev(1)], 1)));

        // odd first relation: (1b,2b,2b) -> (2b,1b,2b) with sign -1
        let w = SignedWord::positive(vec![od(1), od(2), od(2)]);
        let moves = knuth_moves(&w, 0, 2);
        assert!(moves.contains(&SignedWord::new(vec![od(2), od(1), od(2)], -1)));

        // single letter: no moves
        let w = SignedWord::positive(vec![ev(1)]);
        assert!(knuth_moves(&w, 1, 0).is_empty());
    }

    #[test]
    fn canonicalize_examples() {
        // (2,1,3) -> +[1,3],[2] (matches Robinson-Schensted insertion)
        let w = SignedWord::positive(vec![ev(2), ev(1), ev(3)]);
        let c = canonicalize(&w, 3, 0).unwrap();
        let want = SuperTableau::from_rows(vec![vec![ev(1), ev(3)], vec![ev(2)]]);
        assert_eq!(c, CanonicalForm::Tableau { sign: 1, tableau: want });

        // single box
        let w = SignedWord::positive(vec![ev(1)]);
        let c = canonicalize(&w, 2, 0).unwrap();
        let want = SuperTableau::from_rows(vec![vec![ev(1)]]);
        assert_eq!(c, CanonicalForm::Tableau { sign: 1, tableau: want });

        // (1b,1b): the row [1b,1b] is not a valid SSYT row; the column is
        let w = SignedWord::positive(vec![od(1), od(1)]);
        let c = canonicalize(&w, 0, 1).unwrap();
        let want = SuperTableau::from_rows(vec![vec![od(1)], vec![od(1)]]);
        assert_eq!(c, CanonicalForm::Tableau { sign: 1, tableau: want });
    }

    #[test]
    fn product_examples() {
        let unit = CanonicalForm::unit();
        let x = canonicalize(&SignedWord::positive(vec![ev(1)]), 2, 0).unwrap();
        assert_eq!(product(&x, &unit, 2, 0).unwrap(), x);
        assert_eq!(product(&unit, &x, 2, 0).unwrap(), x);
        assert_eq!(product(&CanonicalForm::Zero, &x, 2, 0).unwrap(), CanonicalForm::Zero);

        // single boxes [1]*[2] juxtapose to the word (1,2) = the row [1,2]
        let y = canonicalize(&SignedWord::positive(vec![ev(2)]), 2, 0).unwrap();
        let got = product(&x, &y, 2, 0).unwrap();
        let want = SuperTableau::from_rows(vec![vec![ev(1), ev(2)]]);
        assert_eq!(got, CanonicalForm::Tableau { sign: 1, tableau: want });
    }

    #[test]
    fn p_restrict_examples() {
        let row = canonicalize(&SignedWord::positive(vec![ev(1), ev(1)]), 1, 0).unwrap();
        assert_eq!(p_restrict(&row, 1), CanonicalForm::Zero);
        assert_eq!(p_restrict(&row, 2), row);

        // a column survives p = 1
        let col = canonicalize(&SignedWord::positive(vec![od(1); 5]), 0, 1).unwrap();
        assert_eq!(p_restrict(&col, 1), col);
        assert_eq!(p_restrict(&CanonicalForm::Zero, 1), CanonicalForm::Zero);
        assert_eq!(p_restrict(&CanonicalForm::unit(), 1), CanonicalForm::unit());
    }

    /// Classical Robinson-Schensted row insertion, the n = 0 oracle.
    fn rsk_insert(word: &[SignedLetter]) -> SuperTableau {
        let mut rows: Vec<Vec<SignedLetter>> = Vec::new();
        for &l in word {
            let mut cur = l;
            let mut placed = false;
            for row in rows.iter_mut() {
                // first entry strictly greater than cur gets bumped
                match row.iter().position(|&x| x > cur) {
                    Some(j) => {
                        std::mem::swap(&mut row[j], &mut cur);
                    }
                    None => {
                        row.push(cur);
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                rows.push(vec![cur]);
            }
        }
        if rows.is_empty() {
            SuperTableau::empty()
        } else {
            SuperTableau::from_rows(rows)
        }
    }

    #[test]
    fn classical_words_agree_with_rsk() {
        for m in 1..=3usize {
            for len in 0..=4usize {
                for letters in all_words(len, m, 0) {
                    let c = canonicalize(&SignedWord::positive(letters.clone()), m, 0).unwrap();
                    let CanonicalForm::Tableau { sign, tableau } = c else {
                        panic!("unexpected zero")
                    };
                    assert_eq!(sign, 1, "classical words never pick up signs");
                    assert_eq!(tableau, rsk_insert(&letters), "word {letters:?}");
                }
            }
        }
    }

    #[test]
    fn exhaustive_class_properties_small() {
        // for every word of length <= 4 with m,n <= 2: sign-consistent closure,
        // exactly one tableau word per class, class count = sum of SSYT counts
        for (m, n) in [(1usize, 1usize), (2, 0), (0, 2), (2, 1), (2, 2)] {
            for len in 1..=4usize {
                let mut remaining: std::collections::BTreeSet<Vec<SignedLetter>> =
                    all_words(len, m, n).into_iter().collect();
                let mut classes = 0usize;
                while let Some(seed) = remaining.iter().next().cloned() {
                    let class = word_class(&seed).expect("signs must be consistent");
                    let tableau_words: Vec<_> = class
                        .keys()
                        .filter(|u| !tableaux_with_reading_word(u, m, n).is_empty())
                        .collect();
                    assert_eq!(
                        tableau_words.len(),
                        1,
                        "class of {seed:?} at ({m},{n}) has {} tableau words",
                        tableau_words.len()
                    );
                    for u in class.keys() {
                        remaining.remove(u);
                    }
                    classes += 1;
                }
                let expected: usize = enumerate_hook(m, n, len as u32, None)
                    .iter()
                    .map(|lam| count_ssyt(lam, m, n))
                    .sum();
                assert_eq!(classes, expected, "degree {len} at ({m},{n})");
            }
        }
    }

    #[test]
    fn product_associative_on_single_letters() {
        for (m, n) in [(2usize, 0usize), (1, 1), (0, 2), (2, 2)] {
            let letters: Vec<SignedLetter> = (0..m + n).map(|k| SignedLetter::nth(k, m)).collect();
            for &a in &letters {
                for &b in &letters {
                    for &c in &letters {
                        let ca = canonicalize(&SignedWord::positive(vec![a]), m, n).unwrap();
                        let cb = canonicalize(&SignedWord::positive(vec![b]), m, n).unwrap();
                        let cc = canonicalize(&SignedWord::positive(vec![c]), m, n).unwrap();
                        let left = product(&product(&ca, &cb, m, n).unwrap(), &cc, m, n).unwrap();
                        let right = product(&ca, &product(&cb, &cc, m, n).unwrap(), m, n).unwrap();
                        assert_eq!(left, right, "letters {a}{b}{c} at ({m},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn product_matches_word_concatenation() {
        // canonicalize(uv) == product(canonicalize(u), canonicalize(v)) on a
        // deterministic sweep of small words
        let (m, n) = (1usize, 1usize);
        for u in all_words(2, m, n) {
            for v in all_words(3, m, n) {
                let cu = canonicalize(&SignedWord::positive(u.clone()), m, n).unwrap();
                let cv = canonicalize(&SignedWord::positive(v.clone()), m, n).unwrap();
                let mut uv = u.clone();
                uv.extend(v.iter().copied());
                let direct = canonicalize(&SignedWord::positive(uv), m, n).unwrap();
                assert_eq!(product(&cu, &cv, m, n).unwrap(), direct);
            }
        }
    }
}
