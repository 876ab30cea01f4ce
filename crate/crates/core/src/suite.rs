//! The verification registry: every acceptance-level check as a named,
//! individually runnable function returning a pass/fail result. The CLI's
//! `verify-all` and the acceptance test suite both run through this registry,
//! so they can never drift apart.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::fock::{fock_character, graded_dimension, single_column_character, FockSpec};
use crate::hecke::{
    balanced_qint3, eulerian_idempotent, gamma_basis, gamma_basis_from_generators,
    verify_ideal_action, HeckeElement, Permutation,
};
use crate::laurent::{LaurentFraction, LaurentPoly};
use crate::partition::{enumerate_hook, enumerate_partitions, enumerate_self_conjugate, Partition};
use crate::plactic::{all_words, tableaux_with_reading_word, word_class};
use crate::rmatrix::{
    compute_i3, eigen_multiplicities, gamma_elements, gamma_span_equals_idempotent_image,
    gamma_span_vectors, index_words, local_basis_limit, local_basis_patterns, verify_ybe_hecke,
    TensorVector,
};

use crate::symfunc::{
    hook_schur, ps_character, schur, schur_bialternant, verify_identity, HookSchurMethod,
    IdentityKind, VariableSplit,
};
use crate::tableau::count_ssyt;
use crate::linalg;

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, details: impl Into<String>) -> Self {
        CheckResult { name: name.to_string(), passed, details: details.into() }
    }
}

/// Shared configuration for a verification run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub cap: u32,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { cap: 8, seed: 0 }
    }
}

/// The registry order is fixed; reports list checks in this order.
pub const CHECK_NAMES: [&str; 12] = [
    "macdonald-p0",
    "hook-identity",
    "king-pschar",
    "sign-transport",
    "fock-identities",
    "schur-routes",
    "hook-schur-routes",
    "hecke",
    "rmatrix",
    "i3",
    "plactic",
    "fock-consistency",
];

/// Runs the named checks (all of them when `only` is empty), in registry order.
pub fn run_suite(cfg: SuiteConfig, only: Option<&str>) -> Vec<CheckResult> {
    CHECK_NAMES
        .iter()
        .filter(|name| only.is_none_or(|o| **name == o))
        .map(|name| run_check(name, cfg))
        .collect()
}

/// Dispatches one named check.
pub fn run_check(name: &str, cfg: SuiteConfig) -> CheckResult {
    match name {
        "macdonald-p0" => check_macdonald(cfg),
        "hook-identity" => check_hook_identity(cfg),
        "king-pschar" => check_king_pschar(cfg),
        "sign-transport" => check_sign_transport(cfg),
        "fock-identities" => check_fock_identities(cfg),
        "schur-routes" => check_schur_routes(),
        "hook-schur-routes" => check_hook_schur_routes(),
        "hecke" => check_hecke(cfg),
        "rmatrix" => check_rmatrix(),
        "i3" => check_i3(),
        "plactic" => check_plactic(),
        "fock-consistency" => check_fock_consistency(cfg),
        _ => CheckResult::new(name, false, "unknown check"),
    }
}

// ---------------------------------------------------------------------------
// identity checks
// ---------------------------------------------------------------------------

/// Signed F_0 Schur sum equals prod (1-x_i) prod (1-x_i x_j), n in 1..=4.
fn check_macdonald(cfg: SuiteConfig) -> CheckResult {
    let mut details = Vec::new();
    let mut passed = true;
    for k in 1..=4usize {
        let rep = verify_identity(IdentityKind::MacdonaldP0, VariableSplit::new(k, 0, cfg.cap), None);
        passed &= rep.equal;
        details.push(format!("n={k}:{}", if rep.equal { "ok" } else { "FAIL" }));
    }
    CheckResult::new("macdonald-p0", passed, details.join(" "))
}

/// The hook Schur identity (with the plain Schur sum as its n = 0 face) for
/// all 1 <= m+n <= 4.
fn check_hook_identity(cfg: SuiteConfig) -> CheckResult {
    let mut details = Vec::new();
    let mut passed = true;
    for m in 0..=4usize {
        for n in 0..=4usize {
            if m + n < 1 || m + n > 4 {
                continue;
            }
            let vs = VariableSplit::new(m, n, cfg.cap);
            let rep = verify_identity(IdentityKind::Hook, vs, None);
            passed &= rep.equal;
            if !rep.equal {
                details.push(format!("({m},{n}):FAIL at {:?}", rep.first_discrepancy));
            }
        }
    }
    // the schur-sum form of the same statement, even variables
    for k in 1..=4usize {
        let rep = verify_identity(IdentityKind::SchurSum, VariableSplit::new(k, 0, cfg.cap), None);
        passed &= rep.equal;
        if !rep.equal {
            details.push(format!("schur-sum k={k}:FAIL"));
        }
    }
    if details.is_empty() {
        details.push("all (m,n) with m+n<=4, plus schur-sum k<=4".to_string());
    }
    CheckResult::new("hook-identity", passed, details.join(" "))
}

/// King identity and its F_p form for n <= 4 variables, p in {1,2,3}.
fn check_king_pschar(cfg: SuiteConfig) -> CheckResult {
    let mut passed = true;
    let mut details = Vec::new();
    for k in 1..=4usize {
        for p in 1..=3u32 {
            let vs = VariableSplit::new(k, 0, cfg.cap);
            let king = verify_identity(IdentityKind::King, vs, Some(p));
            let pschar = verify_identity(IdentityKind::PsChar, vs, Some(p));
            passed &= king.equal && pschar.equal;
            if !king.equal || !pschar.equal {
                details.push(format!("n={k},p={p}: king {} pschar {}", king.equal, pschar.equal));
            }
        }
    }
    if details.is_empty() {
        details.push("n<=4, p in {1,2,3}".to_string());
    }
    CheckResult::new("king-pschar", passed, details.join(" "))
}

/// |eta_(p)| = |eta| + p r and equality of the F_0-form and F_p-form signs for
/// every self-conjugate eta with |eta| <= cap.
fn check_sign_transport(cfg: SuiteConfig) -> CheckResult {
    let mut passed = true;
    let mut count = 0usize;
    for eta in enumerate_self_conjugate(cfg.cap) {
        let r = eta.diagonal_len() as u32;
        let f0_exp = ((eta.size() + r) / 2) % 2;
        for p in 1..=3u32 {
            let aug = eta.p_augment(p).expect("self-conjugate");
            passed &= aug.size() == eta.size() + p * r;
            // F_p sign of the augmented partition: (-1)^{(|eta_(p)| - (p-1) r)/2}
            let fp_exp = (((aug.size() as i64 - (p as i64 - 1) * r as i64) / 2).rem_euclid(2)) as u32;
            passed &= fp_exp == f0_exp;
            count += 1;
        }
    }
    CheckResult::new("sign-transport", passed, format!("{count} (eta, p) pairs"))
}

/// The order-p Fock identities in super variables for m,n <= 2, p in {1,2,3},
/// plus the p = 1 single-column factorization.
fn check_fock_identities(cfg: SuiteConfig) -> CheckResult {
    let mut passed = true;
    let mut details = Vec::new();
    for m in 0..=2usize {
        for n in 0..=2usize {
            if m + n < 1 {
                continue;
            }
            let vs = VariableSplit::new(m, n, cfg.cap);
            for p in 1..=3u32 {
                let fock = verify_identity(IdentityKind::FockP, vs, Some(p));
                let ratio = verify_identity(IdentityKind::Ratio, vs, Some(p));
                passed &= fock.equal && ratio.equal;
                if !fock.equal || !ratio.equal {
                    details.push(format!("({m},{n}),p={p}: fock {} ratio {}", fock.equal, ratio.equal));
                }
            }
            // p=1 closed form
            let spec = FockSpec::new(m, n, 1, cfg.cap);
            let ok = fock_character(&spec) == single_column_character(m, n, cfg.cap);
            passed &= ok;
            if !ok {
                details.push(format!("({m},{n}): p=1 factorization FAIL"));
            }
        }
    }
    if details.is_empty() {
        details.push("m,n<=2, p in {1,2,3}, incl. p=1 factorization".to_string());
    }
    CheckResult::new("fock-identities", passed, details.join(" "))
}

// ---------------------------------------------------------------------------
// route-agreement checks
// ---------------------------------------------------------------------------

/// schur == schur_bialternant for all |lambda| <= 6, k <= 4.
fn check_schur_routes() -> CheckResult {
    let mut passed = true;
    let mut count = 0usize;
    for r in 0..=6u32 {
        for lam in enumerate_partitions(r) {
            for k in 1..=4usize {
                let a = schur_bialternant(&lam, k);
                let b = schur(&lam, k, r).with_cap(lam.size());
                passed &= a == b;
                count += 1;
            }
        }
    }
    CheckResult::new("schur-routes", passed, format!("{count} (lambda, k) pairs"))
}

/// hook_schur combinatorial == factorized for |lambda| <= 6, m,n <= 3, and
/// hs vanishes exactly off the hook.
fn check_hook_schur_routes() -> CheckResult {
    let mut passed = true;
    let mut count = 0usize;
    for r in 0..=6u32 {
        for lam in enumerate_partitions(r) {
            for m in 0..=3usize {
                for n in 0..=3usize {
                    if m + n < 1 {
                        continue;
                    }
                    let vs = VariableSplit::new(m, n, r.max(1));
                    let a = hook_schur(&lam, vs, HookSchurMethod::Combinatorial);
                    let b = hook_schur(&lam, vs, HookSchurMethod::Factorized);
                    passed &= a == b;
                    passed &= a.is_zero() == !lam.in_hook(m, n) || lam.is_empty();
                    count += 1;
                }
            }
        }
    }
    CheckResult::new("hook-schur-routes", passed, format!("{count} (lambda, m, n) triples"))
}

// ---------------------------------------------------------------------------
// Hecke / R-matrix / I3
// ---------------------------------------------------------------------------

/// e(q)^2 = e(q), omega e(q) = e(q), the q = 1 coefficients, the g-basis =
/// T-basis agreement, the four ideal action relations, dim I(3) = 2, and
/// seeded random associativity in ranks 3 and 4.
fn check_hecke(cfg: SuiteConfig) -> CheckResult {
    let e = eulerian_idempotent(&balanced_qint3());
    let idem = e.multiply(&e) == e;
    let omega = HeckeElement::basis(Permutation::from_one_line(vec![3, 2, 1]));
    let fixed = omega.multiply(&e) == e;

    let spec = e.specialize(&BigRational::one()).expect("regular at q=1");
    let third = BigRational::new(BigInt::from(1), BigInt::from(3));
    let sixth = BigRational::new(BigInt::from(-1), BigInt::from(6));
    let q1_ok = spec[&Permutation::from_one_line(vec![1, 2, 3])] == third
        && spec[&Permutation::from_one_line(vec![3, 2, 1])] == third
        && [[2u8, 3, 1], [2, 1, 3], [1, 3, 2], [3, 1, 2]]
            .iter()
            .all(|w| spec[&Permutation::from_one_line(w.to_vec())] == sixth);

    let bases_match = gamma_basis() == gamma_basis_from_generators();
    let action = verify_ideal_action();

    // seeded random associativity, ranks 3 and 4
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut assoc = true;
    for r in [3usize, 4] {
        let perms = Permutation::all(r);
        let random_elem = |rng: &mut StdRng| {
            let mut e = HeckeElement::zero(r);
            for _ in 0..3 {
                let p = perms[rng.random_range(0..perms.len())].clone();
                let c = LaurentFraction::from_poly(LaurentPoly::monomial(
                    rng.random_range(-2..3),
                    BigInt::from(rng.random_range(-3i64..4)),
                ));
                e = e.add(&HeckeElement::basis(p).scale(&c));
            }
            e
        };
        for _ in 0..4 {
            let (a, b, c) = (random_elem(&mut rng), random_elem(&mut rng), random_elem(&mut rng));
            assoc &= a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c));
        }
    }

    let passed = idem && fixed && q1_ok && bases_match && action.all_pass() && assoc;
    CheckResult::new(
        "hecke",
        passed,
        format!(
            "e^2=e:{idem} omega.e=e:{fixed} q=1 coeffs:{q1_ok} gamma bases:{bases_match} action+dim:{} assoc:{assoc}",
            action.all_pass()
        ),
    )
}

/// Yang-Baxter and Hecke relations for m+n <= 3 and (2,2); eigenvalue
/// multiplicities at q0 = 2 against the closed formulas.
fn check_rmatrix() -> CheckResult {
    let mut passed = true;
    let mut details = Vec::new();
    let pairs: &[(usize, usize)] =
        &[(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (3, 0), (0, 3), (2, 2)];
    for &(m, n) in pairs {
        let rep = verify_ybe_hecke(m, n);
        passed &= rep.yang_baxter && rep.hecke_relation;
        if !(rep.yang_baxter && rep.hecke_relation) {
            details.push(format!("({m},{n}): ybe {} hecke {}", rep.yang_baxter, rep.hecke_relation));
        }
    }
    let q0 = BigRational::from(BigInt::from(2));
    for &(m, n) in &[(1usize, 1usize), (2, 1), (1, 2), (2, 0), (0, 2)] {
        let (mq, mneg) = eigen_multiplicities(m, n, &q0);
        let plus = m * (m + 1) / 2 + n.saturating_sub(1) * n / 2 + m * n;
        let minus = m.saturating_sub(1) * m / 2 + n * (n + 1) / 2 + m * n;
        let ok = (mq, mneg) == (plus, minus) && mq + mneg == (m + n) * (m + n);
        passed &= ok;
        if !ok {
            details.push(format!("eigen ({m},{n}): got ({mq},{mneg}) want ({plus},{minus})"));
        }
    }
    if details.is_empty() {
        details.push("ybe+hecke m+n<=3 and (2,2); eigen at q0=2".to_string());
    }
    CheckResult::new("rmatrix", passed, details.join(" "))
}

/// dim I_3 = #SSYT((2,1)), Gamma-element span = idempotent image span, and the
/// q^{-1} -> 0 limits reproduce the binomial patterns, for m+n <= 3.
fn check_i3() -> CheckResult {
    let shape = Partition::new(vec![2, 1]);
    let mut passed = true;
    let mut details = Vec::new();
    let pairs: &[(usize, usize)] =
        &[(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (3, 0), (0, 3)];
    for &(m, n) in pairs {
        let basis = compute_i3(m, n);
        let dim_ok = basis.len() == count_ssyt(&shape, m, n);
        let image_ok = gamma_span_equals_idempotent_image(m, n);
        let gammas: Vec<TensorVector> = gamma_elements(m, n).into_iter().map(|(_, v)| v).collect();
        let words = index_words(m, n, 3);
        let rows_g: Vec<Vec<LaurentPoly>> = gammas
            .iter()
            .map(|v| linalg::clear_row(&v.to_vector(&words)))
            .collect();
        let rows_i3: Vec<Vec<LaurentPoly>> = gamma_span_vectors(m, n)
            .iter()
            .map(|v| linalg::clear_row(&v.to_vector(&words)))
            .collect();
        let span_ok = linalg::spans_equal(&rows_g, &rows_i3);
        let limits = local_basis_limit(&gammas);
        let limit_ok = match limits {
            Err(_) => false,
            Ok(lims) => {
                let mut got: Vec<String> = lims.iter().map(TensorVector::to_string).collect();
                let mut want: Vec<String> =
                    local_basis_patterns(m, n).iter().map(TensorVector::to_string).collect();
                got.sort();
                want.sort();
                got == want
            }
        };
        let ok = dim_ok && image_ok && span_ok && limit_ok;
        passed &= ok;
        if !ok {
            details.push(format!(
                "({m},{n}): dim {dim_ok} image {image_ok} span {span_ok} limits {limit_ok}"
            ));
        }
    }
    if details.is_empty() {
        details.push("m+n<=3: dim, span equality, local basis".to_string());
    }
    CheckResult::new("i3", passed, details.join(" "))
}

/// Exhaustive super-plactic properties for m,n <= 2 and word length <= 5:
/// sign-consistent classes, one tableau word per class, class counts per
/// degree, and p-restricted survivor counts against the Fock dimensions.
fn check_plactic() -> CheckResult {
    let mut passed = true;
    let mut details = Vec::new();
    let pairs: &[(usize, usize)] =
        &[(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (2, 2)];
    for &(m, n) in pairs {
        for len in 1..=5usize {
            let mut remaining: std::collections::BTreeSet<_> =
                all_words(len, m, n).into_iter().collect();
            let mut canonical_tableaux = Vec::new();
            let mut ok = true;
            while let Some(seed_word) = remaining.iter().next().cloned() {
                match word_class(&seed_word) {
                    Err(_) => {
                        ok = false;
                        details.push(format!("({m},{n}) len {len}: sign inconsistency"));
                        remaining.remove(&seed_word);
                    }
                    Ok(class) => {
                        let mut tabs = Vec::new();
                        for u in class.keys() {
                            tabs.extend(tableaux_with_reading_word(u, m, n));
                            remaining.remove(u);
                        }
                        if tabs.len() != 1 {
                            ok = false;
                            details.push(format!(
                                "({m},{n}) len {len}: class with {} tableau words",
                                tabs.len()
                            ));
                        } else {
                            canonical_tableaux.push(tabs.pop().unwrap());
                        }
                    }
                }
            }
            let expected: usize = enumerate_hook(m, n, len as u32, None)
                .iter()
                .map(|lam| count_ssyt(lam, m, n))
                .sum();
            if canonical_tableaux.len() != expected {
                ok = false;
                details.push(format!(
                    "({m},{n}) len {len}: {} classes, expected {expected}",
                    canonical_tableaux.len()
                ));
            }
            // p-restricted survivors against the Fock graded dimension
            for p in 1..=3u32 {
                let spec = FockSpec::new(m, n, p, len as u32);
                let dim = graded_dimension(&spec)[len] as usize;
                let survivors = canonical_tableaux
                    .iter()
                    .filter(|t| t.rows().first().map_or(0, Vec::len) as u32 <= p)
                    .count();
                if survivors != dim {
                    ok = false;
                    details.push(format!(
                        "({m},{n}) len {len} p={p}: {survivors} survivors, dim {dim}"
                    ));
                }
            }
            passed &= ok;
        }
    }
    if details.is_empty() {
        details.push("m,n<=2, length<=5, p<=3".to_string());
    }
    CheckResult::new("plactic", passed, details.join(" "))
}

/// fock_character at p >= cap equals ps_character for m,n <= 2.
fn check_fock_consistency(cfg: SuiteConfig) -> CheckResult {
    let mut passed = true;
    let mut details = Vec::new();
    for m in 0..=2usize {
        for n in 0..=2usize {
            if m + n < 1 {
                continue;
            }
            let spec = FockSpec::new(m, n, cfg.cap, cfg.cap);
            let vs = VariableSplit::new(m, n, cfg.cap);
            let ok = fock_character(&spec) == ps_character(vs);
            passed &= ok;
            if !ok {
                details.push(format!("({m},{n}): FAIL"));
            }
        }
    }
    if details.is_empty() {
        details.push("m,n<=2, p=cap".to_string());
    }
    CheckResult::new("fock-consistency", passed, details.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_dispatch() {
        let cfg = SuiteConfig { cap: 2, seed: 1 };
        let mut seen = std::collections::BTreeSet::new();
        for name in CHECK_NAMES {
            assert!(seen.insert(name));
            // dispatches without panicking at a tiny cap
            let res = run_check(name, cfg);
            assert_eq!(res.name, name);
        }
        assert!(run_check("nonsense", cfg).passed == false);
    }

    #[test]
    fn only_filter_selects_single_check() {
        let cfg = SuiteConfig { cap: 2, seed: 1 };
        let res = run_suite(cfg, Some("sign-transport"));
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].name, "sign-transport");
        assert!(res[0].passed);
    }
}
