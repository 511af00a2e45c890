//! Acceptance suite: one test per criterion, each printing a pass line with
//! its elapsed time (run with `cargo test --test acceptance -- --nocapture`
//! to see them). Every tolerance is exact-integer; there is no floating
//! point anywhere in these checks.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use maxbent::certify::{self, Verdict};
use maxbent::differential::{delta_quadratic, derivative_histogram};
use maxbent::family::{
    analyze_shadow, binomial_member, build, direct_coset, direct_profile, monomial_scan,
    verify_diff_reduction, verify_walsh_reduction, ScanMode,
};
use maxbent::field::{Elem, FieldCtx, TowerCtx};
use maxbent::linpoly::{candidate, candidate_count, LinearizedPoly, NormalizedPermutations};
use maxbent::survey::{run_survey, SurveyConfig, SurveyResult, TABLE_DIM8};
use maxbent::walsh::{walsh_all, BoolFn, VectorialFn};

fn survey_m4() -> &'static SurveyResult {
    static M4: OnceLock<SurveyResult> = OnceLock::new();
    M4.get_or_init(|| run_survey(&SurveyConfig::new(4, 1)).expect("m=4 survey"))
}

fn survey_m5() -> &'static SurveyResult {
    static M5: OnceLock<SurveyResult> = OnceLock::new();
    M5.get_or_init(|| run_survey(&SurveyConfig::new(5, 1)).expect("m=5 survey"))
}

fn pass(criterion: u32, elapsed: Instant, summary: &str) {
    println!(
        "criterion {criterion:02} PASS  {summary}  [{:.2?}]",
        elapsed.elapsed()
    );
}

/// Criterion 1: the m = 4, r = 1 survey yields exactly the eight categories
/// of the dimension-8 reference table, signatures and counts as integers.
#[test]
fn criterion_01_dim8_table_reproduction() {
    let t0 = Instant::now();
    let result = survey_m4();
    assert_eq!(result.categories.len(), 8);
    assert_eq!(result.enumerated, 1344);
    for row in TABLE_DIM8 {
        let cat = result
            .categories
            .iter()
            .find(|c| c.key_walsh == row.walsh)
            .unwrap_or_else(|| panic!("no category with walsh {:?}", row.walsh));
        assert_eq!(cat.count, row.count, "count of {:?}", row.walsh);
        let expected_diff: Vec<(u32, u64)> = row
            .diff
            .iter()
            .map(|&(s, c)| (s, c.expect("dim-8 counts all printed")))
            .collect();
        assert_eq!(cat.key_diff, expected_diff, "diff of {:?}", row.walsh);
    }
    let total: u64 = result.categories.iter().map(|c| c.count).sum();
    assert_eq!(total, 1344);
    let cmp = result.comparison.as_ref().expect("comparison present");
    assert_eq!(cmp.exact_rows, 8);
    assert!(cmp.flags.is_empty(), "unexpected flags: {:?}", cmp.flags);
    pass(
        1,
        t0,
        "dim-8 table: 8 categories, counts (2,180,750,15,280,11,105,1), sum 1344",
    );
}

/// Criterion 2: the m = 5, r = 1 survey yields exactly twelve categories;
/// the first and last reference rows match exactly (count 4 and 1); every
/// deviation from the printed table is flagged, never silently absorbed.
/// The printed table has three internally inconsistent entries whose
/// computed corrections are pinned here: cat 4's count (111600, a digit
/// transposition of the printed 116000 and exactly the 4400 by which the
/// printed total exceeds |GL(5,2)|/31), cat 8's differential column
/// ({0,2}_512, {0,4}_480 forced by the coset moment identity:
/// 2 a + 4 b = 92, a + b = 31), and cat 11's Walsh column ((6^22, 8^9);
/// the printed (8^9, 10^22) transposes levels and multiplicities).
#[test]
fn criterion_02_dim10_table_signatures() {
    let t0 = Instant::now();
    let result = survey_m5();
    assert_eq!(result.categories.len(), 12);
    assert_eq!(result.enumerated, 322560);
    assert_eq!(result.certificates.violated(), 0);

    let by_walsh = |w: &[(u32, u64)]| result.categories.iter().find(|c| c.key_walsh == w);

    let cat1 = by_walsh(&[(6, 31)]).expect("all-semibent shadow category");
    assert_eq!(cat1.count, 4);
    assert_eq!(cat1.key_diff, vec![(1, 992)]);

    let cat12 = by_walsh(&[(10, 31)]).expect("linear shadow category");
    assert_eq!(cat12.count, 1);
    assert_eq!(cat12.key_diff, vec![(5, 992)]);

    let cmp = result.comparison.as_ref().expect("comparison present");
    assert_eq!(cmp.computed_total, 322560);
    assert_eq!(cmp.reference_total, 326960);
    assert!(
        cmp.exact_rows >= 9,
        "expected at least 9 exact reference rows, got {}",
        cmp.exact_rows
    );

    // pinned corrections; each must be flagged in the comparison
    let cat4 = by_walsh(&[(6, 27), (8, 4)]).expect("cat 4 walsh");
    assert_eq!(cat4.count, 111600);
    assert_eq!(326960 - 322560, 116000 - cat4.count);

    let cat8 = by_walsh(&[(6, 30), (10, 1)]).expect("cat 8 walsh");
    assert_eq!(cat8.count, 4092);
    assert_eq!(cat8.key_diff, vec![(1, 512), (2, 480)]);

    let cat11 = by_walsh(&[(6, 22), (8, 9)]).expect("corrected cat 11 walsh");
    assert_eq!(cat11.count, 40920);
    assert_eq!(cat11.key_diff, vec![(1, 576), (2, 192), (3, 224)]);
    assert!(
        by_walsh(&[(8, 9), (10, 22)]).is_none(),
        "the printed cat 11 walsh must not occur"
    );

    for needle in [
        "cat 4: count differs",
        "cat 8: differential spectrum differs",
        "cat 11 walsh",
    ] {
        assert!(
            cmp.flags.iter().any(|f| f.contains(needle)),
            "missing flag {needle:?} in {:?}",
            cmp.flags
        );
    }
    pass(
        2,
        t0,
        "dim-10 table: 12 categories, cat1=4, cat12=1, 9/12 rows exact, 3 misprints flagged",
    );
}

/// Criterion 3: Walsh reduction through the shadow, exhaustively for
/// m = 3 and m = 4, every normalized permutation, every r in 0..m;
/// F side by fast transform, H side by direct summation; zero tolerance.
#[test]
fn criterion_03_walsh_reduction_exhaustive() {
    let t0 = Instant::now();
    let mut members = 0u64;
    for m in [3u32, 4] {
        let tower = Arc::new(TowerCtx::new(m));
        let perms: Vec<LinearizedPoly> = NormalizedPermutations::new(tower.base()).collect();
        let checked: u64 = perms
            .par_iter()
            .map(|lambda| {
                let mut n = 0;
                for r in 0..m {
                    let fm = build(r, lambda.clone(), &tower);
                    verify_walsh_reduction(&fm).expect("walsh reduction mismatch");
                    n += 1;
                }
                n
            })
            .sum();
        members += checked;
    }
    assert_eq!(members, 24 * 3 + 1344 * 4);
    pass(
        3,
        t0,
        "walsh reduction exact on 24*3 + 1344*4 = 5448 members",
    );
}

/// Criterion 4: differential reduction through the shadow, same exhaustive
/// scope as criterion 3; per-coset exponents must agree exactly.
#[test]
fn criterion_04_diff_reduction_exhaustive() {
    let t0 = Instant::now();
    let mut members = 0u64;
    for m in [3u32, 4] {
        let tower = Arc::new(TowerCtx::new(m));
        let perms: Vec<LinearizedPoly> = NormalizedPermutations::new(tower.base()).collect();
        let checked: u64 = perms
            .par_iter()
            .map(|lambda| {
                let mut n = 0;
                for r in 0..m {
                    let fm = build(r, lambda.clone(), &tower);
                    verify_diff_reduction(&fm).expect("diff reduction mismatch");
                    n += 1;
                }
                n
            })
            .sum();
        members += checked;
    }
    assert_eq!(members, 5448);
    pass(4, t0, "differential reduction exact on 5448 members");
}

/// Criterion 5: every surveyed member at m = 4, 5 satisfies the
/// nonlinearity cap 2^(n-1) - 2^(floor((n+m)/2)), with attainment exactly
/// in the three dim-8 categories of levels {4, 6} and the single dim-10
/// category (6^31).
#[test]
fn criterion_05_nonlinearity_cap() {
    let t0 = Instant::now();
    let m4 = survey_m4();
    let cap4 = (1i64 << 7) - (1i64 << 6);
    let mut attain4 = Vec::new();
    for c in &m4.categories {
        let k = c.key_walsh.last().unwrap().0;
        let nl = (1i64 << 7) - (1i64 << ((8 + k) / 2 - 1));
        assert!(nl <= cap4, "category {} exceeds the cap", c.index);
        if nl == cap4 {
            attain4.push(c.key_walsh.clone());
        }
    }
    let expected4: Vec<Vec<(u32, u64)>> = vec![
        vec![(4, 10), (6, 5)],
        vec![(4, 8), (6, 7)],
        vec![(4, 6), (6, 9)],
    ];
    assert_eq!(attain4.len(), 3);
    for sig in &expected4 {
        assert!(attain4.contains(sig));
    }

    let m5 = survey_m5();
    let cap5 = (1i64 << 9) - (1i64 << 7);
    let mut attain5 = Vec::new();
    for c in &m5.categories {
        let k = c.key_walsh.last().unwrap().0;
        let nl = (1i64 << 9) - (1i64 << ((10 + k) / 2 - 1));
        assert!(nl <= cap5, "category {} exceeds the cap", c.index);
        if nl == cap5 {
            attain5.push(c.key_walsh.clone());
        }
    }
    assert_eq!(attain5, vec![vec![(6, 31)]]);
    pass(
        5,
        t0,
        "cap 64 attained by 3 dim-8 categories; cap 384 attained only by (6^31)",
    );
}

/// Criterion 6: the counting identities hold exactly on every applicable
/// m = 4 member, with the spot four-counts 0 / 48 / 96 on the three
/// maximal-nonlinearity categories.
#[test]
fn criterion_06_counting_identities_m4() {
    let t0 = Instant::now();
    let result = survey_m4();
    let claims = &result.certificates.per_claim;
    assert_eq!(claims["coset-moment-identity"].get("equality"), Some(&1344));
    assert_eq!(claims["s-m-balance"].get("equality"), Some(&932));
    assert_eq!(claims["s-m-balance"].get("violated"), None);
    assert_eq!(claims["four-uniform-count"].get("equality"), Some(&932));
    assert_eq!(result.certificates.violated(), 0);

    // spot values: number of off-subfield directions with exponent 2
    let four_count = |walsh: &[(u32, u64)]| {
        let c = result
            .categories
            .iter()
            .find(|c| c.key_walsh == walsh)
            .unwrap();
        c.key_diff
            .iter()
            .find(|&&(s, _)| s == 2)
            .map_or(0, |&(_, cnt)| cnt)
    };
    assert_eq!(four_count(&[(4, 10), (6, 5)]), 0);
    assert_eq!(four_count(&[(4, 8), (6, 7)]), 48);
    assert_eq!(four_count(&[(4, 6), (6, 9)]), 96);
    pass(
        6,
        t0,
        "moment identity on 1344/1344, balance + four-count on 932/932, spots 0/48/96",
    );
}

/// Criterion 7: for m = 6, r = 1 every non-cube beta yields the maximal
/// bent count 4032 with levels {8: 63} and off-subfield delta in {0, 4},
/// verified on the full 2^12 tables; every cube beta is rejected.
#[test]
fn criterion_07_binomial_members_m6() {
    let t0 = Instant::now();
    let tower = Arc::new(TowerCtx::new(6));
    let mut rejected = 0u64;
    let mut betas = Vec::new();
    for beta in 1..64u32 {
        match binomial_member(&tower, 1, beta) {
            Ok(fm) => betas.push(fm),
            Err(maxbent::Error::BetaInPowerImage { .. }) => rejected += 1,
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
    assert_eq!(rejected, 21); // the cubes of GF(2^6)^*
    assert_eq!(betas.len(), 42);
    betas.par_iter().for_each(|fm| {
        let profile = direct_profile(fm);
        assert_eq!(profile.bent_count, 4032, "{}", fm.descriptor());
        assert_eq!(profile.signature(), vec![(8, 63)], "{}", fm.descriptor());
        assert!(profile.all_plateaued);
        // 2^11 - 2^9, the cap
        assert_eq!((1i64 << 11) - profile.max_abs_walsh / 2, 1536);
        let coset = direct_coset(fm).expect("coset profile");
        assert_eq!(coset.a_sets, std::collections::BTreeMap::from([(2, 63)]));
    });
    pass(
        7,
        t0,
        "42 non-cube betas verified on full tables (nonlinearity 1536), 21 cubes rejected",
    );
}

/// Criterion 8: the reference examples. The dimension-6 example is
/// reproduced exactly by a searched generator. For the dimension-12 pair
/// no generator under any degree-6 primitive modulus reproduces the
/// printed Walsh signature; the suite documents the finding: the searched
/// witness reproduces both printed differential spectra exactly, both
/// members share one Walsh signature, and that signature is
/// (6^26, 8^35, 10^2) - the printed (6^35, 8^26, 10^2) transposes the
/// multiplicities. The witness is re-verified on the full 2^12 table.
#[test]
fn criterion_08_named_examples() {
    let t0 = Instant::now();
    let named = certify::verify_named_examples();

    let h64 = &named.h64;
    assert!(h64.witness.is_some(), "h64: {}", h64.finding);

    let dim12 = &named.dim12;
    let witness = dim12
        .witness
        .as_ref()
        .expect("a differential witness exists");
    let corrected: Vec<(u32, u64)> = vec![(6, 26), (8, 35), (10, 2)];
    if !dim12.finding.contains("as stated") {
        // documented-finding path: flag present and the corrected signature named
        assert!(
            dim12.finding.contains("misstated"),
            "finding: {}",
            dim12.finding
        );
        assert!(
            dim12.finding.contains("(6, 26), (8, 35), (10, 2)"),
            "finding: {}",
            dim12.finding
        );
    }
    let (walsh_direct, diff_direct) =
        certify::dim12_direct_verification(witness).expect("direct verification");
    assert_eq!(walsh_direct, corrected);
    assert_eq!(diff_direct, certify::DIM12_STATED_DIFF_1.to_vec());

    println!("criterion 08 finding: {}", dim12.finding);
    pass(
        8,
        t0,
        "h64 reproduced; dim12 diff spectra reproduced, Walsh misprint documented + direct check",
    );
}

/// Criterion 9: monomial scan for n = 6 and n = 8; every exponent with the
/// maximal bent count factors as t (2^m + 1) with t coprime to 2^m - 1.
#[test]
fn criterion_09_monomial_scan() {
    let t0 = Instant::now();
    let f64 = FieldCtx::new(6);
    let scan6 = monomial_scan(&f64, ScanMode::Direct);
    assert!(scan6.factorization_ok);
    assert_eq!(scan6.attaining, vec![9, 18, 36]);

    let f256 = FieldCtx::new(8);
    let scan8 = monomial_scan(&f256, ScanMode::Direct);
    assert!(scan8.factorization_ok);
    assert_eq!(scan8.attaining, vec![17, 34, 68, 136]);
    assert!(scan8.attaining.contains(&17) && scan8.attaining.contains(&34));
    assert!(!scan8.attaining.contains(&3));

    // the orbit shortcut is a cross-check of the direct path
    let orbit8 = monomial_scan(&f256, ScanMode::Orbit);
    assert_eq!(scan8.counts, orbit8.counts);
    pass(
        9,
        t0,
        "attaining sets {9,18,36} and {17,34,68,136}, factorization holds, orbit agrees",
    );
}

fn xorshift(state: &mut u64) -> u64 {
    *state ^= *state << 13;
    *state ^= *state >> 7;
    *state ^= *state << 17;
    *state
}

/// Criterion 10: oracle equivalence. The fast transform equals the naive
/// double sum on 100 random Boolean functions per k in 4..=10, and the
/// kernel-based delta exponent equals the counting histogram on 100 random
/// (member, direction) pairs per m in {3, 4, 5}; exact.
#[test]
fn criterion_10_oracle_equivalence() {
    let t0 = Instant::now();
    let mut state = 0x5EED_1234_ABCDu64;

    for k in 4..=10u32 {
        let ctx = FieldCtx::new(k);
        for _ in 0..100 {
            let f = BoolFn::from_fn(k, |_| (xorshift(&mut state) & 1) as u32);
            let fast = walsh_all(&f, &ctx);
            // oracle: the O(4^k) double sum with the trace inner product
            for u in 0..1u32 << k {
                let naive: i64 = (0..1u32 << k)
                    .map(|x| {
                        let bit = f.tt[x as usize] as u32 ^ ctx.abs_trace(ctx.mul(u, x));
                        1 - 2 * bit as i64
                    })
                    .sum();
                assert_eq!(fast[u as usize], naive, "k={k} u={u}");
            }
        }
    }

    for m in [3u32, 4, 5] {
        let tower = Arc::new(TowerCtx::new(m));
        let n = 2 * m;
        let total = candidate_count(m);
        let mut done = 0;
        while done < 100 {
            let lambda = candidate(m, xorshift(&mut state) % total);
            if !lambda.is_permutation(tower.base()) {
                continue;
            }
            let r = (xorshift(&mut state) % m as u64) as u32;
            let fm = build(r, lambda, &tower);
            let a = (xorshift(&mut state) % ((1 << n) - 1) + 1) as Elem;
            let s = delta_quadratic(&fm.f, a).expect("family members are quadratic");
            let hist = derivative_histogram(&fm.f, a);
            let nonzero: Vec<u64> = hist.iter().copied().filter(|&c| c != 0).collect();
            assert!(nonzero.iter().all(|&c| c == 1 << s), "m={m} a={a}");
            assert_eq!(nonzero.len() as u64, 1u64 << (n - s));
            done += 1;
        }
    }
    pass(
        10,
        t0,
        "fast-vs-naive transform 700 functions; kernel-vs-counting delta 300 pairs",
    );
}

/// Criterion 11: the lemma suite. The indicator bound is tight exactly for
/// plateaued functions, the component-moment bound is tight exactly for
/// APN maps (witnessed by x^3 on GF(2^5), refuted by x^5 on GF(2^6)), and
/// the plateau-count bound is an equality on an APN plateaued instance.
#[test]
fn criterion_11_lemma_suite() {
    let t0 = Instant::now();
    let reports = certify::lemma_suite();
    for r in &reports {
        assert!(!r.is_violated(), "{}", r.line());
    }
    assert_eq!(
        reports[0].verdict,
        Verdict::Equality,
        "APN witness x^3 on GF(2^5)"
    );
    assert_eq!(
        reports[1].verdict,
        Verdict::Holds,
        "non-APN refuter x^5 on GF(2^6)"
    );
    assert_eq!(
        reports[2].verdict,
        Verdict::Equality,
        "plateaued indicator equality"
    );
    assert_eq!(
        reports[3].verdict,
        Verdict::Holds,
        "non-plateaued strict indicator"
    );
    assert_eq!(
        reports[4].verdict,
        Verdict::Equality,
        "APN plateau-count equality"
    );

    // double-checked from scratch: x^3 on GF(2^5) meets the moment bound
    let f32 = FieldCtx::new(5);
    let cube = VectorialFn::monomial(&f32, 3);
    let total: i64 = (1..32)
        .map(|v| {
            maxbent::walsh::sum_of_square(
                &maxbent::walsh::component(&cube, v, &f32).expect("nonzero"),
            )
        })
        .sum();
    assert_eq!(total, 31 << 11);
    pass(
        11,
        t0,
        "indicator and moment bounds tight exactly on plateaued / APN witnesses",
    );
}

/// Shadow-vs-direct consistency spot check at m = 5 beyond the survey's
/// sampled revalidation: the identity member and one five-term member,
/// plus the predicted Walsh value set of the L = x member.
#[test]
fn shadow_consistency_spot_check_m5() {
    let t0 = Instant::now();
    let tower = Arc::new(TowerCtx::new(5));
    for lambda in [
        LinearizedPoly::identity(5),
        LinearizedPoly::new(5, vec![3, 0, 7, 1, 1]),
    ] {
        if !lambda.is_permutation(tower.base()) {
            continue;
        }
        let fm = build(1, lambda.clone(), &tower);
        let shadow = analyze_shadow(tower.base(), 1, &lambda);
        let profile = direct_profile(&fm);
        assert_eq!(profile.signature(), shadow.f_walsh_signature());
        assert_eq!(direct_coset(&fm).unwrap().exponent, shadow.exponents);
        assert_eq!(profile.bent_count, 992);
    }
    // the canonical member attains nonlinearity 2^9 - 2^8/2 = 384 and its
    // subfield Walsh values stay within {0, +-2^8}
    let id = build(1, LinearizedPoly::identity(5), &tower);
    assert_eq!(maxbent::walsh::nonlinearity(&id.f, tower.ext()), 384);
    let gold = maxbent::family::gold_spectrum_check(&tower, 1).unwrap();
    assert!(
        gold.ok && gold.attains_max,
        "{:?} vs {:?}",
        gold.computed,
        gold.predicted
    );
    pass(
        0,
        t0,
        "m=5 shadow spot checks, nonlinearity 384, gold value set {0, +-256}",
    );
}

/// Maximal bent count if and only if L is a permutation, both directions,
/// for every candidate L (permutations and non-permutations alike) and
/// every r at m = 3 and m = 4. For permutations the full census is
/// confirmed (2^n - 2^m bent, non-bent set = the embedded subfield); for
/// non-permutations a non-bent component outside the subfield is exhibited.
#[test]
fn max_bent_iff_permutation_exhaustive() {
    let t0 = Instant::now();
    for m in [3u32, 4] {
        let tower = Arc::new(TowerCtx::new(m));
        let n = 2 * m;
        (0..candidate_count(m)).into_par_iter().for_each(|idx| {
            let lambda = candidate(m, idx);
            let perm = lambda.is_permutation(tower.base());
            for r in 0..m {
                let fm = build(r, lambda.clone(), &tower);
                if perm {
                    assert!(
                        maxbent::family::max_bent_census_is_subfield(&fm).unwrap(),
                        "{} should be max-bent with subfield complement",
                        fm.descriptor()
                    );
                } else {
                    // find an off-subfield non-bent component
                    let ext = tower.ext();
                    let witness = (1..1u32 << n)
                        .filter(|&v| !tower.in_subfield(v))
                        .find(|&v| {
                            let c = maxbent::walsh::component(&fm.f, v, ext).unwrap();
                            maxbent::walsh::plateau_level(&c) != Some(0)
                        });
                    assert!(
                        witness.is_some(),
                        "{} is max-bent although L is singular",
                        fm.descriptor()
                    );
                }
            }
        });
    }
    pass(
        0,
        t0,
        "max-bent <=> permutation over all candidates, m = 3, 4, all r",
    );
}

/// Both reductions on 100 random (r, L) permutation samples at m = 5 and
/// m = 6 each; coefficients are unconstrained (not necessarily monic),
/// exercising the general case beyond the normalized enumeration.
#[test]
fn reductions_on_random_members_m5_m6() {
    let t0 = Instant::now();
    let mut state = 0xC0FF_EE42_u64;
    for m in [5u32, 6] {
        let tower = Arc::new(TowerCtx::new(m));
        let mut done = 0;
        let samples: Vec<(u32, LinearizedPoly)> = std::iter::from_fn(|| loop {
            let coeffs: Vec<u32> = (0..m)
                .map(|_| (xorshift(&mut state) % (1 << m)) as u32)
                .collect();
            let lambda = LinearizedPoly::new(m, coeffs);
            if lambda.is_permutation(tower.base()) {
                let r = (xorshift(&mut state) % m as u64) as u32;
                return Some((r, lambda));
            }
        })
        .take_while(|_| {
            done += 1;
            done <= 100
        })
        .collect();
        samples.par_iter().for_each(|(r, lambda)| {
            let fm = build(*r, lambda.clone(), &tower);
            verify_walsh_reduction(&fm).expect("walsh reduction");
            verify_diff_reduction(&fm).expect("diff reduction");
        });
        assert_eq!(samples.len(), 100);
    }
    pass(
        0,
        t0,
        "walsh + diff reductions on 100 random members each at m = 5, 6",
    );
}

/// The m = 5, r = 1 members of maximal nonlinearity are exactly the four
/// Frobenius monomials x, x^4, x^8, x^16.
#[test]
fn best_class_m5_r1_attaining_set() {
    let t0 = Instant::now();
    let base = FieldCtx::new(5);
    let chk = certify::check_best_nonlinearity_class(&base, &[1]);
    assert_eq!(chk.report.verdict, Verdict::Holds, "{}", chk.report.line());
    let rendered: Vec<String> = chk.attaining.iter().map(|(_, l)| l.render(&base)).collect();
    assert_eq!(rendered, vec!["x", "x^4", "x^8", "x^16"]);
    pass(0, t0, "m=5 r=1 best class = {x, x^4, x^8, x^16}");
}
