//! Parastatistics Fock spaces F(m|n;p): states are p-restricted hook tableaux,
//! with graded dimensions and characters. The order p enters only through the
//! first-row bound on shapes.



use crate::partition::enumerate_hook;
use crate::series::TruncatedSeries;
use crate::symfunc::{hook_schur, hook_schur_sum, HookSchurMethod, VariableSplit};
use crate::tableau::{enumerate_ssyt, SuperTableau};

/// The Fock space parameters: alphabet sizes, parastatistics order, degree cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockSpec {
    pub m: usize,
    pub n: usize,
    pub p: u32,
    pub cap: u32,
}

impl FockSpec {
    pub fn new(m: usize, n: usize, p: u32, cap: u32) -> Self {
        assert!(p >= 1, "parastatistics order p must be >= 1");
        assert!(m + n >= 1, "need at least one mode");
        FockSpec { m, n, p, cap }
    }

    fn split(&self) -> VariableSplit {
        VariableSplit::new(self.m, self.n, self.cap)
    }
}

/// All degree-r basis states: SSYT of size r with shape in the hook and first
/// row at most p, in deterministic shape-major order.
pub fn basis_states(spec: &FockSpec, r: u32) -> Vec<SuperTableau> {
    assert!(r <= spec.cap, "degree exceeds the configured cap");
    let mut out = Vec::new();
    for lam in enumerate_hook(spec.m, spec.n, r, Some(spec.p)) {
        out.extend(enumerate_ssyt(&lam, spec.m, spec.n));
    }
    out
}

/// dim_r = sum over p-restricted hook shapes of the SSYT count, for r = 0..=cap.
pub fn graded_dimension(spec: &FockSpec) -> Vec<u64> {
    (0..=spec.cap).map(|r| basis_states(spec, r).len() as u64).collect()
}

/// The Fock character: the sum of hook Schur polynomials over p-restricted
/// hook shapes of size at most cap.
pub fn fock_character(spec: &FockSpec) -> TruncatedSeries {
    let vs = spec.split();
    let mut out = TruncatedSeries::zero(vs.nvars(), vs.cap);
    for r in 0..=spec.cap {
        for lam in enumerate_hook(spec.m, spec.n, r, Some(spec.p)) {
            out = &out + &hook_schur(&lam, vs, HookSchurMethod::Combinatorial);
        }
    }
    out
}

/// The p = 1 closed form: prod_even (1 + x_i) * prod_odd (1 - x_i)^{-1}.
pub fn single_column_character(m: usize, n: usize, cap: u32) -> TruncatedSeries {
    let nv = m + n;
    let mut out = TruncatedSeries::one(nv, cap);
    for i in 0..nv {
        let mut e = vec![0u32; nv];
        e[i] = 1;
        if i < m {
            out = &out * &TruncatedSeries::one_plus_monomial(nv, cap, e);
        } else {
            let inv = TruncatedSeries::one_minus_monomial(nv, cap, e)
                .inverse()
                .expect("unit constant term");
            out = &out * &inv;
        }
    }
    out
}

/// Convenience re-export of the p-restricted hook Schur sum used by identity
/// checks (identical to `fock_character` by construction).
pub fn restricted_hook_sum(spec: &FockSpec) -> TruncatedSeries {
    hook_schur_sum(spec.split(), Some(spec.p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plactic::{all_words, canonicalize, p_restrict, CanonicalForm, SignedWord};
    use num::bigint::BigInt;
    use crate::symfunc::ps_character;

    #[test]
    fn basis_state_examples() {
        // one even letter, p=1: no states of degree 2 (row capped, column of
        // even letters capped at height 1... the column [1],[1] is invalid)
        let spec = FockSpec::new(1, 0, 1, 4);
        assert!(basis_states(&spec, 2).is_empty());

        // m=1, n=1, p=1, degree 2: the two columns [1],[1b] and [1b],[1b]
        let spec = FockSpec::new(1, 1, 1, 4);
        assert_eq!(basis_states(&spec, 2).len(), 2);

        // p >= r: restriction inactive, same as the unrestricted degree-r basis
        let spec_big = FockSpec::new(2, 1, 4, 4);
        let spec_unrestricted = FockSpec::new(2, 1, 4, 4);
        for r in 0..=4u32 {
            let restricted = basis_states(&spec_big, r).len();
            let full: usize = crate::partition::enumerate_hook(2, 1, r, None)
                .iter()
                .map(|lam| enumerate_ssyt(lam, 2, 1).len())
                .sum();
            assert_eq!(restricted, full, "degree {r}");
            let _ = spec_unrestricted;
        }
    }

    #[test]
    fn graded_dimension_examples() {
        // vacuum + one fermion
        let spec = FockSpec::new(1, 0, 1, 5);
        assert_eq!(graded_dimension(&spec), vec![1, 1, 0, 0, 0, 0]);

        // m=1, n=1, p=1: 1, 2, 2, 2, ... (matches (1+x1)/(1-x2))
        let spec = FockSpec::new(1, 1, 1, 5);
        assert_eq!(graded_dimension(&spec), vec![1, 2, 2, 2, 2, 2]);

        // unrestricted single even letter: one state per degree
        let spec = FockSpec::new(1, 0, 5, 5);
        assert_eq!(graded_dimension(&spec), vec![1; 6]);
    }

    #[test]
    fn character_examples() {
        let spec = FockSpec::new(1, 0, 1, 6);
        let want = &TruncatedSeries::one(1, 6)
            + &TruncatedSeries::monomial(1, 6, vec![1], BigInt::from(1));
        assert_eq!(fock_character(&spec), want);

        // m=1, n=1, p=1 equals (1+x1)/(1-x2)
        let spec = FockSpec::new(1, 1, 1, 6);
        assert_eq!(fock_character(&spec), single_column_character(1, 1, 6));
    }

    #[test]
    fn character_collapses_to_graded_dimension() {
        for (m, n, p) in [(1usize, 1usize, 1u32), (2, 1, 2), (1, 2, 3), (2, 2, 1)] {
            let spec = FockSpec::new(m, n, p, 5);
            let collapsed = fock_character(&spec).collapse_degrees();
            let dims = graded_dimension(&spec);
            let got: Vec<u64> = collapsed
                .iter()
                .map(|c| u64::try_from(c).expect("nonnegative counts"))
                .collect();
            assert_eq!(got, dims, "({m},{n},{p})");
        }
    }

    #[test]
    fn p_one_character_factorizes() {
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (3, 0), (0, 3), (2, 2), (3, 3)] {
            if m + n == 0 {
                continue;
            }
            let spec = FockSpec::new(m, n, 1, 5);
            assert_eq!(
                fock_character(&spec),
                single_column_character(m, n, 5),
                "({m},{n})"
            );
        }
    }

    #[test]
    fn monotone_in_p_with_stabilization() {
        let (m, n, cap) = (2usize, 1usize, 5u32);
        let mut prev = graded_dimension(&FockSpec::new(m, n, 1, cap));
        for p in 2..=6u32 {
            let cur = graded_dimension(&FockSpec::new(m, n, p, cap));
            for (r, (a, b)) in prev.iter().zip(&cur).enumerate() {
                assert!(a <= b, "p={p}, degree {r}");
                if p > r as u32 {
                    assert_eq!(a, b, "stabilized at p={p}, degree {r}");
                }
            }
            prev = cur;
        }
    }

    #[test]
    fn unrestricted_limit_is_full_character() {
        // p >= cap: the Fock character equals the full parastatistics character
        for (m, n) in [(1usize, 1usize), (2, 0), (0, 2)] {
            let cap = 6u32;
            let spec = FockSpec::new(m, n, cap, cap);
            let vs = VariableSplit::new(m, n, cap);
            assert_eq!(fock_character(&spec), ps_character(vs), "({m},{n})");
        }
    }

    #[test]
    fn plactic_survivors_match_graded_dimension() {
        // canonical forms of degree r surviving p_restrict == dim_r
        for (m, n, p) in [(1usize, 1usize, 1u32), (2, 0, 1), (0, 2, 2), (1, 1, 2)] {
            let spec = FockSpec::new(m, n, p, 4);
            let dims = graded_dimension(&spec);
            for r in 0..=4usize {
                let mut survivors = std::collections::BTreeSet::new();
                for letters in all_words(r, m, n) {
                    let c = canonicalize(&SignedWord::positive(letters), m, n).unwrap();
                    if let CanonicalForm::Tableau { tableau, .. } = p_restrict(&c, p) {
                        survivors.insert(tableau);
                    }
                }
                assert_eq!(survivors.len() as u64, dims[r], "degree {r} at ({m},{n},{p})");
            }
        }
    }
}
