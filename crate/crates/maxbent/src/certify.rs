//! Executable certificates: every inequality and counting identity the
//! toolkit relies on is evaluated in exact integer arithmetic and recorded
//! as a report with a first-class verdict. "Not applicable" is reported,
//! never silently skipped; a "violated" verdict on an in-scope instance
//! fails the certification suite.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::differential::diff_profile;
use crate::error::Result;
use crate::family::{analyze_shadow, gcd, ShadowAnalysis};
use crate::field::{FieldCtx, TowerCtx};
use crate::linpoly::{candidate, candidate_count, LinearizedPoly};
use crate::walsh::{component, plateau_level, sum_of_square, SpectrumProfile, VectorialFn};

/// Sorted (level-or-exponent, count) pairs, the common signature shape.
pub type Signature = Vec<(u32, u64)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Equality,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CertReport {
    pub claim: String,
    pub instance: String,
    pub lhs: i64,
    pub rhs: i64,
    pub verdict: Verdict,
    pub notes: String,
}

impl CertReport {
    pub fn line(&self) -> String {
        format!(
            "check {:<24} verdict={:<14} lhs={:<12} rhs={:<12} instance={} {}",
            self.claim,
            format!("{:?}", self.verdict).to_lowercase(),
            self.lhs,
            self.rhs,
            self.instance,
            if self.notes.is_empty() {
                String::new()
            } else {
                format!("({})", self.notes)
            }
        )
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

fn report(
    claim: &str,
    instance: &str,
    lhs: i64,
    rhs: i64,
    verdict: Verdict,
    notes: impl Into<String>,
) -> CertReport {
    CertReport {
        claim: claim.to_string(),
        instance: instance.to_string(),
        lhs,
        rhs,
        verdict,
        notes: notes.into(),
    }
}

/// sum_{i<k} (2^k - 2^i)|S_i| <= (2^k - 2)(2^n - 1) for a plateaued
/// function on GF(2^n) whose worst component level is k, with equality
/// exactly for APN functions.
pub fn check_plateau_level_bound(
    profile: &SpectrumProfile,
    n: u32,
    is_apn: bool,
    instance: &str,
) -> CertReport {
    let claim = "plateau-level-count-bound";
    if !profile.all_plateaued || profile.levels.is_empty() {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "needs a plateaued function with a non-bent component",
        );
    }
    let k = profile.max_level();
    let mut lhs: i64 = ((1i64 << k) - 1) * profile.bent_count as i64; // the i = 0 term
    for (&i, &cnt) in &profile.levels {
        if i < k {
            lhs += ((1i64 << k) - (1i64 << i)) * cnt as i64;
        }
    }
    let rhs = ((1i64 << k) - 2) * ((1i64 << n) - 1);
    let verdict = match (lhs == rhs, is_apn) {
        (true, true) => Verdict::Equality,
        (false, false) if lhs < rhs => Verdict::Holds,
        _ => Verdict::Violated,
    };
    report(
        claim,
        instance,
        lhs,
        rhs,
        verdict,
        format!("k={k}, apn={is_apn}"),
    )
}

/// Bent-count bounds: |S_0|(2^k - 1) <= (2^n - 1)(2^k - 2) for every
/// plateaued function, and 3|S_0| >= 2^(n+1) + 2^k - 6 when APN.
pub fn check_bent_count_bounds(
    profile: &SpectrumProfile,
    n: u32,
    is_apn: bool,
    instance: &str,
) -> CertReport {
    let claim = "bent-count-bounds";
    if !profile.all_plateaued || profile.levels.is_empty() {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "needs a plateaued function with a non-bent component",
        );
    }
    let k = profile.max_level();
    let s0 = profile.bent_count as i64;
    let upper_lhs = s0 * ((1i64 << k) - 1);
    let upper_rhs = ((1i64 << n) - 1) * ((1i64 << k) - 2);
    let mut notes = format!("k={k}");
    let mut ok = upper_lhs <= upper_rhs;
    if upper_lhs == upper_rhs {
        notes.push_str(", upper bound attained");
    }
    if is_apn {
        let lower_lhs = 3 * s0;
        let lower_rhs = (1i64 << (n + 1)) + (1i64 << k) - 6;
        ok &= lower_lhs >= lower_rhs;
        notes.push_str(&format!(", apn lower: 3|S_0|={lower_lhs} >= {lower_rhs}"));
    }
    // maximal bent count forces 2^k >= 2^(n/2) + 2
    if s0 as u64 == (1u64 << n) - (1u64 << (n / 2)) {
        let forced = (1i64 << k) >= (1i64 << (n / 2)) + 2;
        ok &= forced;
        notes.push_str(", max-bent forces 2^k >= 2^(n/2)+2");
    }
    let verdict = if ok {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    report(claim, instance, upper_lhs, upper_rhs, verdict, notes)
}

/// Nonlinearity of a plateaued function with the maximal bent count is at
/// most 2^(n-1) - 2^(floor((n+m)/2)); attainment is recorded as equality.
pub fn check_nonlinearity_cap(profile: &SpectrumProfile, n: u32, instance: &str) -> CertReport {
    let claim = "nonlinearity-cap";
    let m = n / 2;
    let max_bent = (1u64 << n) - (1u64 << m);
    if !profile.all_plateaued || profile.bent_count != max_bent {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "needs a plateaued max-bent function",
        );
    }
    let nl = (1i64 << (n - 1)) - profile.max_abs_walsh / 2;
    let cap = (1i64 << (n - 1)) - (1i64 << ((n + m) / 2));
    let verdict = if nl == cap {
        Verdict::Equality
    } else if nl < cap {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    report(claim, instance, nl, cap, verdict, "")
}

/// Exact moment identity tying the coset exponent tallies |A_s| to the
/// plateau level counts of a max-bent plateaued family member:
/// sum_s |A_s| 2^(m+s) = (2^m - 1) 2^k - sum_{j=2}^{k-2} (2^k - 2^j)|S_j|.
pub fn check_coset_moment_identity(
    walsh_sig: &[(u32, u64)],
    a_sets: &[(u32, u64)],
    m: u32,
    instance: &str,
) -> CertReport {
    let claim = "coset-moment-identity";
    let Some(&(k, _)) = walsh_sig.last() else {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "empty signature",
        );
    };
    let lhs: i64 = a_sets.iter().map(|&(s, c)| (c as i64) << (m + s)).sum();
    let mut rhs: i64 = ((1i64 << m) - 1) << k;
    for &(j, c) in walsh_sig {
        if 2 <= j && j + 2 <= k {
            rhs -= ((1i64 << k) - (1i64 << j)) * c as i64;
        }
    }
    let verdict = if lhs == rhs {
        Verdict::Equality
    } else {
        Verdict::Violated
    };
    report(claim, instance, lhs, rhs, verdict, format!("k={k}"))
}

/// For m even and maximal nonlinearity (levels within {m, m+2}):
/// 3|S_m| = sum_s |A_s| (4 - 2^s), and 3|S_m| = 2|A_1| when the exponents
/// stay within {1, 2}.
pub fn check_sm_balance(
    walsh_sig: &[(u32, u64)],
    a_sets: &[(u32, u64)],
    m: u32,
    instance: &str,
) -> CertReport {
    let claim = "s-m-balance";
    if !m.is_multiple_of(2) {
        return report(claim, instance, 0, 0, Verdict::NotApplicable, "m is odd");
    }
    if !walsh_sig.iter().all(|&(l, _)| l == m || l == m + 2) {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "levels exceed {m, m+2}",
        );
    }
    let s_m = walsh_sig
        .iter()
        .find(|&&(l, _)| l == m)
        .map_or(0, |&(_, c)| c) as i64;
    let lhs = 3 * s_m;
    let rhs: i64 = a_sets
        .iter()
        .map(|&(s, c)| (c as i64) * (4 - (1i64 << s)))
        .sum();
    let mut verdict = if lhs == rhs {
        Verdict::Equality
    } else {
        Verdict::Violated
    };
    let mut notes = String::new();
    if a_sets.iter().all(|&(s, _)| s <= 2) {
        let a1 = a_sets.iter().find(|&&(s, _)| s == 1).map_or(0, |&(_, c)| c) as i64;
        if lhs != 2 * a1 {
            verdict = Verdict::Violated;
        }
        notes = format!(
            "exponents within {{1,2}}: 3|S_m|={lhs} vs 2|A_1|={}",
            2 * a1
        );
    }
    report(claim, instance, lhs, rhs, verdict, notes)
}

/// For m even, levels within {m, m+2} and exponents within {1, 2}: the
/// number of off-subfield directions with delta in {0, 4} equals
/// 2^m (2^m - 1) - 3 * 2^(m-1) |S_m|, and it vanishes exactly when
/// |S_m| = 2(2^m - 1)/3.
pub fn check_four_uniform_count(
    walsh_sig: &[(u32, u64)],
    a_sets: &[(u32, u64)],
    m: u32,
    instance: &str,
) -> CertReport {
    let claim = "four-uniform-count";
    if !m.is_multiple_of(2)
        || !walsh_sig.iter().all(|&(l, _)| l == m || l == m + 2)
        || !a_sets.iter().all(|&(s, _)| s == 1 || s == 2)
    {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "needs m even, levels in {m, m+2}, exponents in {1, 2}",
        );
    }
    let s_m = walsh_sig
        .iter()
        .find(|&&(l, _)| l == m)
        .map_or(0, |&(_, c)| c) as i64;
    let a2 = a_sets.iter().find(|&&(s, _)| s == 2).map_or(0, |&(_, c)| c) as i64;
    let lhs = a2 << m; // off-subfield directions with exponent 2
    let rhs = ((1i64 << m) * ((1i64 << m) - 1)) - 3 * (1i64 << (m - 1)) * s_m;
    let zero_case_ok = (lhs == 0) == (3 * s_m == 2 * ((1i64 << m) - 1));
    let verdict = if lhs == rhs && zero_case_ok {
        Verdict::Equality
    } else {
        Verdict::Violated
    };
    report(claim, instance, lhs, rhs, verdict, format!("|S_m|={s_m}"))
}

/// Hasse-Weil style cap: for m even, maximal nonlinearity and sigma > 1,
/// 3|S_m| < 2(2^m - 1) - 2^(m/2)(2^(m/2) - deg^2) with deg = 2^r + 2^t the
/// polynomial degree of x^(2^r) L(x). The bound is flagged vacuous when it
/// exceeds the unconditional cap 2(2^m - 1)/3.
pub fn check_hasse_weil(
    walsh_sig: &[(u32, u64)],
    a_sets: &[(u32, u64)],
    m: u32,
    r: u32,
    lambda_degree_index: u32,
    instance: &str,
) -> CertReport {
    let claim = "hasse-weil-sm-cap";
    let sigma = a_sets.iter().map(|&(s, _)| s).max().unwrap_or(0);
    if !m.is_multiple_of(2) {
        return report(claim, instance, 0, 0, Verdict::NotApplicable, "m is odd");
    }
    if !walsh_sig.iter().all(|&(l, _)| l == m || l == m + 2) {
        return report(
            claim,
            instance,
            0,
            0,
            Verdict::NotApplicable,
            "not of maximal nonlinearity",
        );
    }
    if sigma <= 1 {
        return report(claim, instance, 0, 0, Verdict::NotApplicable, "sigma = 1");
    }
    let s_m = walsh_sig
        .iter()
        .find(|&&(l, _)| l == m)
        .map_or(0, |&(_, c)| c) as i64;
    let deg = (1i64 << (r % m)) + (1i64 << lambda_degree_index);
    let half = 1i64 << (m / 2);
    let lhs = 3 * s_m;
    let rhs = 2 * ((1i64 << m) - 1) - half * (half - deg * deg);
    let vacuous = rhs >= 2 * ((1i64 << m) - 1);
    let verdict = if lhs < rhs {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    report(
        claim,
        instance,
        lhs,
        rhs,
        verdict,
        format!(
            "deg={deg}{}",
            if vacuous {
                ", vacuous (bound exceeds 2(2^m-1)/3)"
            } else {
                ""
            }
        ),
    )
}

/// nu(f) <= 2^k max W^2 with equality exactly for plateaued f.
pub fn check_indicator_bound(f: &crate::walsh::BoolFn, instance: &str) -> CertReport {
    let claim = "indicator-bound";
    let nu = sum_of_square(f);
    let max_sq = crate::walsh::max_walsh_square(f);
    let bound = max_sq << f.k;
    let plateaued = plateau_level(f).is_some();
    let verdict = match (nu == bound, plateaued) {
        (true, true) => Verdict::Equality,
        (false, false) if nu < bound => Verdict::Holds,
        _ => Verdict::Violated,
    };
    report(
        claim,
        instance,
        nu,
        bound,
        verdict,
        format!("plateaued={plateaued}"),
    )
}

/// sum over nonzero v of nu(F_v) >= (2^k - 1) 2^(2k+1), equality exactly
/// for APN maps.
pub fn check_moment_apn_bound(fv: &VectorialFn, ctx: &FieldCtx, instance: &str) -> CertReport {
    let claim = "moment-apn-bound";
    let k = fv.k;
    let mut total: i64 = 0;
    for v in 1..1u32 << k {
        let f = component(fv, v, ctx).expect("v != 0");
        total += sum_of_square(&f);
    }
    let bound = ((1i64 << k) - 1) << (2 * k + 1);
    let apn = diff_profile(fv).is_apn();
    let verdict = match (total == bound, apn) {
        (true, true) => Verdict::Equality,
        (false, false) if total > bound => Verdict::Holds,
        _ => Verdict::Violated,
    };
    report(claim, instance, total, bound, verdict, format!("apn={apn}"))
}

/// Exhaustive three-way equivalence over (r, L) pairs: maximal
/// nonlinearity of F, all off-subfield exponents 1, and L a Frobenius
/// monomial x^(2^j) with gcd(r - j, m) = 1. For even m only the last two
/// clauses are equivalent and the nonlinearity clause is not asserted.
pub struct BestClassCheck {
    pub report: CertReport,
    pub attaining: Vec<(u32, LinearizedPoly)>,
}

pub fn check_best_nonlinearity_class(base: &FieldCtx, rs: &[u32]) -> BestClassCheck {
    let m = base.k();
    let odd = m % 2 == 1;
    let mut attaining = Vec::new();
    let mut consistent = true;
    let mut members = 0u64;
    for &r in rs {
        for idx in 0..candidate_count(m) {
            let lambda = candidate(m, idx);
            if !lambda.is_permutation(base) {
                continue;
            }
            members += 1;
            let shadow = analyze_shadow(base, r, &lambda);
            let best_levels = if odd {
                shadow.f_max_level() == m + 1
            } else {
                shadow.f_max_level() == m + 2
            };
            let all_exp_one = shadow.a_sets.len() == 1 && shadow.a_sets.contains_key(&1);
            let frobenius_class = is_frobenius_gold(&lambda, r, m);
            if odd && best_levels != all_exp_one {
                consistent = false;
            }
            if all_exp_one != frobenius_class {
                consistent = false;
            }
            if all_exp_one {
                attaining.push((r, lambda));
            }
        }
    }
    let verdict = if consistent {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    let report = report(
        "best-class-equivalence",
        &format!("m={m}, r in {rs:?}"),
        attaining.len() as i64,
        members as i64,
        verdict,
        format!("lhs = attaining members, rhs = members scanned, odd={odd}"),
    );
    BestClassCheck { report, attaining }
}

fn is_frobenius_gold(lambda: &LinearizedPoly, r: u32, m: u32) -> bool {
    let Some(j) = lambda.degree_index() else {
        return false;
    };
    let monomial = lambda
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, &c)| (i as u32 == j && c == 1) || (i as u32 != j && c == 0));
    monomial && gcd(((r % m + m - j) % m) as u64, m as u64) == 1
}

/// Aggregated per-claim verdict tallies for survey-wide certification.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct CertSummary {
    pub per_claim: BTreeMap<String, BTreeMap<String, u64>>,
    pub violations: Vec<CertReport>,
}

impl CertSummary {
    pub fn absorb(&mut self, r: CertReport) {
        let verdict = format!("{:?}", r.verdict).to_lowercase();
        *self
            .per_claim
            .entry(r.claim.clone())
            .or_default()
            .entry(verdict)
            .or_insert(0) += 1;
        if r.is_violated() && self.violations.len() < 32 {
            self.violations.push(r);
        }
    }

    pub fn merge(&mut self, other: CertSummary) {
        for (claim, verdicts) in other.per_claim {
            let slot = self.per_claim.entry(claim).or_default();
            for (v, c) in verdicts {
                *slot.entry(v).or_insert(0) += c;
            }
        }
        for v in other.violations {
            if self.violations.len() < 32 {
                self.violations.push(v);
            }
        }
    }

    pub fn violated(&self) -> u64 {
        self.per_claim
            .values()
            .flat_map(|m| m.get("violated"))
            .sum()
    }

    pub fn lines(&self) -> Vec<String> {
        self.per_claim
            .iter()
            .map(|(claim, verdicts)| {
                let parts: Vec<String> = verdicts.iter().map(|(v, c)| format!("{v}={c}")).collect();
                format!("check {:<24} {}", claim, parts.join(" "))
            })
            .collect()
    }
}

/// Every per-member identity that can be read off a shadow analysis. The
/// whole-function bounds run on a profile rebuilt from the signature
/// (|S_0| = 2^n - 2^m for a permutation composite), with APN = false:
/// subfield directions force delta >= 2^m, so no member is ever APN and
/// the count bound must be strict.
pub fn member_checks(
    shadow: &ShadowAnalysis,
    r: u32,
    lambda: &LinearizedPoly,
    instance: &str,
) -> Vec<CertReport> {
    let m = shadow.m;
    let n = 2 * m;
    let walsh_sig = shadow.f_walsh_signature();
    let a_sets: Vec<(u32, u64)> = shadow.a_sets.iter().map(|(&s, &c)| (s, c)).collect();
    let profile = SpectrumProfile {
        bent_count: (1u64 << n) - (1u64 << m),
        levels: walsh_sig.iter().copied().collect(),
        max_abs_walsh: 1i64 << ((n + shadow.f_max_level()) / 2),
        all_plateaued: true,
        non_plateaued: 0,
    };
    vec![
        check_coset_moment_identity(&walsh_sig, &a_sets, m, instance),
        check_sm_balance(&walsh_sig, &a_sets, m, instance),
        check_four_uniform_count(&walsh_sig, &a_sets, m, instance),
        check_hasse_weil(
            &walsh_sig,
            &a_sets,
            m,
            r,
            lambda.degree_index().unwrap_or(0),
            instance,
        ),
        check_plateau_level_bound(&profile, n, false, instance),
        check_bent_count_bounds(&profile, n, false, instance),
        check_nonlinearity_cap(&profile, n, instance),
    ]
}

// ---------------------------------------------------------------------------
// Reference examples in dimensions 12 and 6, instantiated by a witness
// search over generators (and, failing the canonical modulus, the other
// primitive moduli of degree 6).
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct WitnessInfo {
    pub modulus: u32,
    pub gamma_log: u64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct WitnessSearch {
    pub label: String,
    pub witness: Option<WitnessInfo>,
    pub finding: String,
}

/// Stated data of the dimension-12 pair: one Walsh signature shared by both
/// members and two differential signatures.
pub const DIM12_STATED_WALSH: [(u32, u64); 3] = [(6, 35), (8, 26), (10, 2)];
pub const DIM12_STATED_DIFF_1: [(u32, u64); 3] = [(1, 2624), (2, 960), (3, 448)];
pub const DIM12_STATED_DIFF_2: [(u32, u64); 2] = [(1, 1728), (2, 2304)];

/// Stated data of the dimension-6 shadow example: bent/semibent split and
/// per-direction exponent counts of H itself.
pub const H64_STATED_BENT: u64 = 16;
pub const H64_STATED_SEMIBENT: u64 = 47;
pub const H64_STATED_EXPONENTS: [(u32, u64); 3] = [(1, 38), (2, 18), (3, 7)];

fn dim12_lambdas(base: &FieldCtx, gamma_log: u64) -> (LinearizedPoly, LinearizedPoly) {
    let g = |e: u64| base.exp_g(gamma_log * e);
    let l1 = LinearizedPoly::new(6, vec![0, g(58), g(52), g(35), g(40), g(52)]);
    let l2 = LinearizedPoly::new(6, vec![g(30), g(40), g(14), g(26), g(49), g(10)]);
    (l1, l2)
}

fn h64_lambda(base: &FieldCtx, gamma_log: u64) -> LinearizedPoly {
    let g = |e: u64| base.exp_g(gamma_log * e);
    LinearizedPoly::new(6, vec![g(57), g(7), g(49), g(40), g(18), 1])
}

/// All primitive moduli of degree 6, canonical first.
pub fn primitive_moduli_deg6() -> Vec<u32> {
    (1u32 << 6..1 << 7)
        .filter(|&p| FieldCtx::with_modulus(6, p).is_ok())
        .collect()
}

fn generator_logs(base: &FieldCtx) -> Vec<u64> {
    let order = (1u64 << base.k()) - 1;
    (1..order).filter(|&e| gcd(e, order) == 1).collect()
}

/// Searches generators gamma of GF(2^6)^* for an instantiation of the
/// dimension-12 pair reproducing the stated spectra. Since the search may
/// come up empty, the finding also records the spectra actually computed
/// (which the two members must share), so a misprinted row is documented
/// rather than silently failed.
pub fn search_dim12(moduli: &[u32]) -> WitnessSearch {
    let stated_walsh = DIM12_STATED_WALSH.to_vec();
    let stated_d1 = DIM12_STATED_DIFF_1.to_vec();
    let stated_d2 = DIM12_STATED_DIFF_2.to_vec();
    let mut diff_only: Option<(WitnessInfo, Signature, Signature)> = None;

    for &p in moduli {
        let base = FieldCtx::with_modulus(6, p).expect("primitive modulus");
        for &e in &generator_logs(&base) {
            let (l1, l2) = dim12_lambdas(&base, e);
            // permutation status re-derived, never assumed
            if !l1.is_permutation(&base) || !l2.is_permutation(&base) {
                continue;
            }
            let s1 = analyze_shadow(&base, 1, &l1);
            let s2 = analyze_shadow(&base, 1, &l2);
            let diff_match =
                s1.f_diff_signature() == stated_d1 && s2.f_diff_signature() == stated_d2;
            let walsh_match =
                s1.f_walsh_signature() == stated_walsh && s2.f_walsh_signature() == stated_walsh;
            if diff_match && walsh_match {
                return WitnessSearch {
                    label: "dim12".into(),
                    witness: Some(WitnessInfo { modulus: p, gamma_log: e }),
                    finding: format!(
                        "witness gamma = g^{e} under modulus {p:#x} reproduces both spectra as stated"
                    ),
                };
            }
            if diff_match && diff_only.is_none() {
                diff_only = Some((
                    WitnessInfo {
                        modulus: p,
                        gamma_log: e,
                    },
                    s1.f_walsh_signature(),
                    s2.f_walsh_signature(),
                ));
            }
        }
    }

    match diff_only {
        Some((w, w1, w2)) => WitnessSearch {
            label: "dim12".into(),
            witness: Some(w.clone()),
            finding: format!(
                "no witness reproduces the stated Walsh signature {:?}; gamma = g^{} under \
                 modulus {:#x} reproduces both differential spectra, and both members then \
                 share the Walsh signature {:?} / {:?} - the printed Walsh row appears misstated",
                stated_walsh, w.gamma_log, w.modulus, w1, w2
            ),
        },
        None => WitnessSearch {
            label: "dim12".into(),
            witness: None,
            finding:
                "no witness under the canonical or any alternate primitive modulus of degree 6"
                    .into(),
        },
    }
}

/// Searches for the dimension-6 shadow example: 16 bent plus 47 semibent
/// components and per-direction exponent counts {1: 38, 2: 18, 3: 7}.
pub fn search_h64(moduli: &[u32]) -> WitnessSearch {
    for &p in moduli {
        let base = FieldCtx::with_modulus(6, p).expect("primitive modulus");
        for &e in &generator_logs(&base) {
            let lambda = h64_lambda(&base, e);
            if !lambda.is_permutation(&base) {
                continue;
            }
            let shadow = analyze_shadow(&base, 1, &lambda);
            let bent = shadow.h_bent_count();
            let semibent = shadow.h_levels.get(&2).copied().unwrap_or(0);
            let plain: Vec<(u32, u64)> = shadow.a_sets.iter().map(|(&s, &c)| (s, c)).collect();
            if bent == H64_STATED_BENT
                && semibent == H64_STATED_SEMIBENT
                && bent + semibent == 63
                && plain == H64_STATED_EXPONENTS
            {
                return WitnessSearch {
                    label: "h64".into(),
                    witness: Some(WitnessInfo { modulus: p, gamma_log: e }),
                    finding: format!(
                        "witness gamma = g^{e} under modulus {p:#x} reproduces the stated split and exponent counts"
                    ),
                };
            }
        }
    }
    WitnessSearch {
        label: "h64".into(),
        witness: None,
        finding: "no witness under the canonical or any alternate primitive modulus of degree 6"
            .into(),
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct NamedExamples {
    pub dim12: WitnessSearch,
    pub h64: WitnessSearch,
    pub reports: Vec<CertReport>,
}

/// Runs both reference-example searches. A documented no-witness finding is
/// a valid outcome and is recorded in the report notes; a silent failure is
/// not an option.
pub fn verify_named_examples() -> NamedExamples {
    let moduli = primitive_moduli_deg6();
    let dim12 = search_dim12(&moduli);
    let h64 = search_h64(&moduli);
    let mk = |label: &str, s: &WitnessSearch| {
        report(
            &format!("named-example-{label}"),
            "gamma search over degree-6 primitive moduli",
            s.witness.is_some() as i64,
            1,
            Verdict::Holds,
            s.finding.clone(),
        )
    };
    let reports = vec![mk("dim12", &dim12), mk("h64", &h64)];
    NamedExamples {
        dim12,
        h64,
        reports,
    }
}

/// Direct (full 2^12 table) spectra of the first dimension-12 member under
/// a witness, for cross-checking the shadow-computed signatures.
pub fn dim12_direct_verification(w: &WitnessInfo) -> Result<(Signature, Signature)> {
    let tower = Arc::new(TowerCtx::with_moduli(
        6,
        w.modulus,
        crate::field::canonical_modulus(12),
    )?);
    let (l1, _) = dim12_lambdas(tower.base(), w.gamma_log);
    let fm = crate::family::build(1, l1, &tower);
    let profile = crate::family::direct_profile(&fm);
    let coset = crate::family::direct_coset(&fm)?;
    Ok((profile.signature(), coset.signature()))
}

/// Deterministic reference points for the lemma suite: x^3 on GF(2^5) is
/// APN, x^5 on GF(2^6) is not.
pub fn lemma_suite() -> Vec<CertReport> {
    let mut out = Vec::new();

    let f32 = FieldCtx::new(5);
    let cube = VectorialFn::monomial(&f32, 3);
    out.push(check_moment_apn_bound(&cube, &f32, "x^3 on GF(2^5)"));

    let f64 = FieldCtx::new(6);
    let x5 = VectorialFn::monomial(&f64, 5);
    out.push(check_moment_apn_bound(&x5, &f64, "x^5 on GF(2^6)"));

    // plateaued and non-plateaued witnesses for the indicator bound
    let gold = VectorialFn::monomial(&f64, 3);
    let plateaued = component(&gold, 1, &f64).expect("nonzero v");
    out.push(check_indicator_bound(
        &plateaued,
        "component of x^3 on GF(2^6)",
    ));
    let cubic = VectorialFn::monomial(&f64, 7);
    let non_plateaued = (1..64)
        .map(|v| component(&cubic, v, &f64).expect("nonzero v"))
        .find(|f| plateau_level(f).is_none())
        .expect("x^7 on GF(2^6) has a non-plateaued component");
    out.push(check_indicator_bound(
        &non_plateaued,
        "non-plateaued component of x^7 on GF(2^6)",
    ));

    // APN plateaued instance attains the plateau-count bound with equality
    let profile = crate::walsh::spectrum_profile(&gold, &f64);
    let apn = diff_profile(&gold).is_apn();
    out.push(check_plateau_level_bound(
        &profile,
        6,
        apn,
        "x^3 on GF(2^6)",
    ));
    out.push(check_bent_count_bounds(&profile, 6, apn, "x^3 on GF(2^6)"));

    let x5_profile = crate::walsh::spectrum_profile(&x5, &f64);
    let x5_apn = diff_profile(&x5).is_apn();
    out.push(check_plateau_level_bound(
        &x5_profile,
        6,
        x5_apn,
        "x^5 on GF(2^6)",
    ));

    out
}
