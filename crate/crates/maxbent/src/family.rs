//! The trace family F(x) = x^(2^r) * Tr(L(x)) from GF(2^n) to itself and its
//! half-size shadow H(x) = x^(2^r) * L(x) on GF(2^m), together with the
//! named constructions (Frobenius binomials, trivial extensions, monomials)
//! and the dual-computation verifiers that tie F's spectra to H's.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::differential::{coset_profile, derivative_histogram};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, TowerCtx};
use crate::linpoly::{rank_gf2, LinearizedPoly};
use crate::walsh::{component, spectrum_profile, walsh_all, BoolFn, VectorialFn};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A family member with both value tables materialized.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub r: u32,
    pub lambda: LinearizedPoly,
    pub tower: Arc<TowerCtx>,
    /// F on GF(2^n).
    pub f: VectorialFn,
    /// H on GF(2^m).
    pub h: VectorialFn,
}

/// Shadow table H(x) = x^(2^r) * L(x) over the base field.
pub fn h_table(base: &FieldCtx, r: u32, lambda: &LinearizedPoly) -> VectorialFn {
    VectorialFn::from_fn(base.k(), |x| {
        base.mul(base.frob(x, r), lambda.eval_base(base, x))
    })
}

/// Materializes F and H for (r, L); r is canonicalized modulo m (the family
/// only depends on r mod m up to equivalence, and reports echo the
/// canonical value).
pub fn build(r: u32, lambda: LinearizedPoly, tower: &Arc<TowerCtx>) -> FamilyMember {
    let m = tower.m();
    assert_eq!(lambda.m(), m);
    let r = r % m;
    let ext = tower.ext();
    let f = VectorialFn::from_fn(tower.n(), |x| {
        ext.mul(ext.frob(x, r), tower.rel_trace(lambda.eval_ext(tower, x)))
    });
    let h = h_table(tower.base(), r, &lambda);
    FamilyMember {
        r,
        lambda,
        tower: Arc::clone(tower),
        f,
        h,
    }
}

impl FamilyMember {
    /// Compact witness descriptor, e.g. "r=1;L=x".
    pub fn descriptor(&self) -> String {
        format!("r={};L={}", self.r, self.lambda.render(self.tower.base()))
    }
}

/// Everything the half-size shadow determines about a member: F's subfield
/// component levels are m + (H component levels), and F's off-subfield
/// delta exponents per coset are the kernel dimensions of H's derivative
/// maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowAnalysis {
    pub m: u32,
    /// H component plateau level j -> count (j = 0 is bent).
    pub h_levels: BTreeMap<u32, u64>,
    /// z -> s with delta_F(a, .) in {0, 2^s} on the coset of z.
    pub exponents: BTreeMap<Elem, u32>,
    /// s -> |A_s|.
    pub a_sets: BTreeMap<u32, u64>,
    /// Subfield gammas whose F component is identically zero (equivalently,
    /// H components that vanish); reported as survey metadata, never mixed
    /// into a census.
    pub zero_components: u64,
}

impl ShadowAnalysis {
    /// F's non-bent Walsh signature: sorted (m + j, multiplicity).
    pub fn f_walsh_signature(&self) -> Vec<(u32, u64)> {
        self.h_levels
            .iter()
            .map(|(&j, &c)| (self.m + j, c))
            .collect()
    }

    /// F's off-subfield differential signature: sorted (s, 2^m * |A_s|).
    pub fn f_diff_signature(&self) -> Vec<(u32, u64)> {
        self.a_sets
            .iter()
            .map(|(&s, &c)| (s, c << self.m))
            .collect()
    }

    pub fn h_bent_count(&self) -> u64 {
        self.h_levels.get(&0).copied().unwrap_or(0)
    }

    /// Highest F level = m + highest H level.
    pub fn f_max_level(&self) -> u32 {
        self.m + self.h_levels.keys().last().copied().unwrap_or(0)
    }

    pub fn sigma(&self) -> u32 {
        self.a_sets.keys().last().copied().unwrap_or(0)
    }
}

/// Computes the shadow analysis from H alone (2^m points), without ever
/// touching a 2^n table. Panics if an H component fails to be plateaued,
/// which cannot happen for quadratic shadows.
pub fn analyze_shadow(base: &FieldCtx, r: u32, lambda: &LinearizedPoly) -> ShadowAnalysis {
    let m = base.k();
    let r = r % m;
    let h = h_table(base, r, lambda);

    let mut h_levels: BTreeMap<u32, u64> = BTreeMap::new();
    let mut zero_components = 0;
    for alpha in 1..1u32 << m {
        let tt: Vec<u8> = h
            .table
            .iter()
            .map(|&y| base.abs_trace(base.mul(alpha, y)) as u8)
            .collect();
        zero_components += tt.iter().all(|&b| b == 0) as u64;
        let level = crate::walsh::plateau_level(&BoolFn::new(m, tt))
            .expect("components of a quadratic shadow are plateaued");
        *h_levels.entry(level).or_insert(0) += 1;
    }

    let mut exponents = BTreeMap::new();
    let mut a_sets: BTreeMap<u32, u64> = BTreeMap::new();
    for z in 1..1u32 << m {
        let lz = lambda.eval_base(base, z);
        let zr = base.frob(z, r);
        // kernel of x -> x^(2^r) L(z) + z^(2^r) L(x)
        let mut cols: Vec<u32> = (0..m)
            .map(|j| {
                let e = 1u32 << j;
                base.mul(base.frob(e, r), lz) ^ base.mul(zr, lambda.eval_base(base, e))
            })
            .collect();
        let s = m - rank_gf2(&mut cols);
        exponents.insert(z, s);
        *a_sets.entry(s).or_insert(0) += 1;
    }

    ShadowAnalysis {
        m,
        h_levels,
        exponents,
        a_sets,
        zero_components,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub member: String,
    pub components: u64,
    pub points: u64,
}

/// Checks, for every nonzero subfield alpha: W_F(alpha, beta) vanishes for
/// beta outside the subfield and equals 2^m W_H(alpha, beta) inside, with
/// the F side computed by the fast transform and the H side by direct
/// summation. Any mismatch is a hard failure.
pub fn verify_walsh_reduction(fm: &FamilyMember) -> Result<ReductionReport> {
    let t = &fm.tower;
    let (base, ext) = (t.base(), t.ext());
    let m = t.m();
    let mut points = 0u64;
    for alpha in 1..1u32 << m {
        let f_alpha = component(&fm.f, t.embed(alpha), ext)?;
        let wf = walsh_all(&f_alpha, ext);
        for u in 0..ext.size() as Elem {
            let expect = match t.unembed(u) {
                None => 0,
                Some(beta) => {
                    let wh: i64 = (0..1u32 << m)
                        .map(|z| {
                            let bit = base.abs_trace(base.mul(alpha, fm.h.table[z as usize]))
                                ^ base.abs_trace(base.mul(beta, z));
                            1 - 2 * bit as i64
                        })
                        .sum();
                    wh << m
                }
            };
            if wf[u as usize] != expect {
                return Err(Error::ReductionMismatch(format!(
                    "walsh: member {} alpha={alpha:#x} u={u:#x}: F side {} vs H side {expect}",
                    fm.descriptor(),
                    wf[u as usize],
                )));
            }
            points += 1;
        }
    }
    Ok(ReductionReport {
        member: fm.descriptor(),
        components: (1 << m) - 1,
        points,
    })
}

/// Checks the per-coset delta exponents of F (measured from its table)
/// against the kernel dimensions computed from H, and the subfield rows
/// against {0, 2^m}.
pub fn verify_diff_reduction(fm: &FamilyMember) -> Result<ReductionReport> {
    let t = &fm.tower;
    let measured = coset_profile(&fm.f, t)?;
    if measured.subfield_exponent != t.m() {
        return Err(Error::ReductionMismatch(format!(
            "diff: member {}: subfield exponent {} != m",
            fm.descriptor(),
            measured.subfield_exponent
        )));
    }
    let shadow = analyze_shadow(t.base(), fm.r, &fm.lambda);
    if measured.exponent != shadow.exponents {
        return Err(Error::ReductionMismatch(format!(
            "diff: member {}: coset exponents disagree with the shadow kernels",
            fm.descriptor()
        )));
    }
    Ok(ReductionReport {
        member: fm.descriptor(),
        components: (1 << t.m()) - 1,
        points: (1u64 << t.n()) - 1,
    })
}

/// Predicted value set of W_F(alpha, .) over nonzero subfield alpha for the
/// member with L = x, in terms of d = gcd(m, r).
pub fn gold_walsh_value_set(m: u32, r: u32) -> std::collections::BTreeSet<i64> {
    let d = gcd(m as u64, r as u64) as u32;
    let n = 2 * m;
    let mut set = std::collections::BTreeSet::new();
    set.insert(0);
    if (m / d) % 2 == 1 {
        let v = 1i64 << ((n + m + d) / 2);
        set.insert(v);
        set.insert(-v);
    } else {
        for e in [(n + m) / 2, (n + m + 2 * d) / 2] {
            set.insert(1i64 << e);
            set.insert(-(1i64 << e));
        }
    }
    set
}

#[derive(Debug, Clone)]
pub struct GoldSpectrumCheck {
    pub predicted: std::collections::BTreeSet<i64>,
    pub computed: std::collections::BTreeSet<i64>,
    /// Every computed value lies in the predicted set.
    pub ok: bool,
    /// The largest predicted magnitude actually occurs.
    pub attains_max: bool,
}

/// Builds the L = x member and checks that every subfield Walsh value lies
/// in the predicted set (the prediction is a membership statement; the
/// negative of the full spike 2^n, say, can never occur because F(0) = 0).
pub fn gold_spectrum_check(tower: &Arc<TowerCtx>, r: u32) -> Result<GoldSpectrumCheck> {
    let m = tower.m();
    let fm = build(r, LinearizedPoly::identity(m), tower);
    let mut computed = std::collections::BTreeSet::new();
    for alpha in 1..1u32 << m {
        let f_alpha = component(&fm.f, tower.embed(alpha), tower.ext())?;
        for w in walsh_all(&f_alpha, tower.ext()) {
            computed.insert(w);
        }
    }
    let predicted = gold_walsh_value_set(m, r % m);
    let ok = computed.iter().all(|v| predicted.contains(v));
    let max_pred = predicted.iter().map(|v| v.abs()).max().unwrap_or(0);
    let attains_max = computed.iter().any(|v| v.abs() == max_pred);
    Ok(GoldSpectrumCheck {
        predicted,
        computed,
        ok,
        attains_max,
    })
}

/// Binomial construction L(x) = x^(2^(3r)) + beta x^(2^r) for m = 2 mod 4;
/// beta must not be a (2^(2r) - 1)-th power, otherwise L is singular and
/// the input is rejected. The built member is verified to have only bent
/// and (m+2)-plateaued components and off-subfield exponents all 2.
pub fn binomial_member(tower: &Arc<TowerCtx>, r: u32, beta: Elem) -> Result<FamilyMember> {
    let m = tower.m();
    assert!(m % 4 == 2, "the binomial construction needs m = 2 mod 4");
    assert!(beta != 0 && beta < (1 << m));
    let base = tower.base();
    let order = (1u64 << m) - 1;
    let e = (1u64 << (2 * r)) - 1;
    let g = gcd(e, order);
    let log_beta = base.log_of(beta).expect("beta != 0") as u64;
    if log_beta.is_multiple_of(g) {
        return Err(Error::BetaInPowerImage { beta, power: e });
    }

    let hi = (3 * r) % m;
    let lo = r % m;
    assert_ne!(hi, lo);
    let mut coeffs = vec![0 as Elem; m as usize];
    coeffs[hi as usize] = 1;
    coeffs[lo as usize] = beta;
    let lambda = LinearizedPoly::new(m, coeffs);
    if !lambda.is_permutation(base) {
        return Err(Error::NotPermutation(lambda.render(base)));
    }

    let fm = build(r, lambda, tower);
    let shadow = analyze_shadow(base, fm.r, &fm.lambda);
    let levels_ok = shadow.h_levels.keys().all(|&j| j == 2);
    let exps_ok = shadow.a_sets.keys().all(|&s| s == 2);
    if !levels_ok || !exps_ok {
        return Err(Error::ReductionMismatch(format!(
            "binomial member {} failed its spectrum guarantee",
            fm.descriptor()
        )));
    }
    Ok(fm)
}

/// Concatenates a vectorial bent map GF(2^n) -> GF(2^m) (given as a table of
/// base-field encodings) with affine coordinate functions into a function on
/// GF(2^n); a standard test fixture with known censuses.
///
/// Panics if a component of the bent part fails to be bent or an appended
/// coordinate fails to be affine.
pub fn trivial_extension(tower: &TowerCtx, bent_table: &[Elem], affines: &[BoolFn]) -> VectorialFn {
    let m = tower.m();
    let n = tower.n();
    assert_eq!(bent_table.len(), 1 << n);
    assert!(bent_table.iter().all(|&y| y < (1 << m)));
    assert_eq!(affines.len(), m as usize);

    let base = tower.base();
    for gamma in 1..1u32 << m {
        let tt: Vec<u8> = bent_table
            .iter()
            .map(|&y| base.abs_trace(base.mul(gamma, y)) as u8)
            .collect();
        assert_eq!(
            crate::walsh::plateau_level(&BoolFn::new(n, tt)),
            Some(0),
            "bent part has a non-bent component"
        );
    }
    for a in affines {
        assert_eq!(a.k, n);
        for j in 0..n {
            let e = 1usize << j;
            let d0 = a.tt[e] ^ a.tt[0];
            assert!(
                (0..1usize << n).all(|x| a.tt[x ^ e] ^ a.tt[x] == d0),
                "appended coordinate is not affine"
            );
        }
    }

    VectorialFn::from_fn(n, |x| {
        let mut y = bent_table[x as usize];
        for (i, a) in affines.iter().enumerate() {
            y |= (a.tt[x as usize] as Elem) << (m as usize + i);
        }
        y
    })
}

/// The norm map x -> x^(2^m + 1) as a GF(2^m)-valued table: the stock
/// vectorial bent function used to seed trivial extensions.
pub fn norm_vectorial_bent(tower: &TowerCtx) -> Vec<Elem> {
    let d = (1u64 << tower.m()) + 1;
    (0..1u32 << tower.n())
        .map(|x| {
            tower
                .unembed(tower.ext().pow(x, d))
                .expect("the norm lands in the subfield")
        })
        .collect()
}

/// How the per-exponent bent counts are computed in a monomial scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Walsh-test every nonzero component; the primary path for n <= 8.
    Direct,
    /// Test one component per coset of Im(x^d)^* and scale; used above
    /// n = 8 and as a cross-check below.
    Orbit,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct MonomialScan {
    pub n: u32,
    pub max_bent: u64,
    /// Exponents d with the maximal bent count, ascending.
    pub attaining: Vec<u64>,
    /// Every attaining d is t (2^m + 1) with gcd(t, 2^m - 1) = 1.
    pub factorization_ok: bool,
    /// d -> bent count, for every 1 <= d <= 2^n - 2.
    #[serde(skip)]
    pub counts: Vec<u64>,
}

fn bent_components_of_monomial(ctx: &FieldCtx, d: u64, mode: ScanMode) -> u64 {
    let n = ctx.k();
    let table: Vec<Elem> = (0..1u32 << n).map(|x| ctx.pow(x, d)).collect();
    let is_bent = |gamma: Elem| {
        let tt: Vec<u8> = table
            .iter()
            .map(|&y| ctx.abs_trace(ctx.mul(gamma, y)) as u8)
            .collect();
        crate::walsh::plateau_level(&BoolFn::new(n, tt)) == Some(0)
    };
    match mode {
        ScanMode::Direct => (1..1u32 << n).filter(|&g| is_bent(g)).count() as u64,
        ScanMode::Orbit => {
            // bentness of gamma depends only on gamma * Im(x^d)^*, a coset of
            // the subgroup of index e = gcd(2^n - 1, d)
            let order = (1u64 << n) - 1;
            let e = gcd(order, d);
            let orbit = order / e;
            (0..e).filter(|&j| is_bent(ctx.exp_g(j))).count() as u64 * orbit
        }
    }
}

/// Scans every exponent 1 <= d <= 2^n - 2, counts bent components of x^d,
/// and checks the factorization property of the attaining set.
pub fn monomial_scan(ctx: &FieldCtx, mode: ScanMode) -> MonomialScan {
    let n = ctx.k();
    assert!(n.is_multiple_of(2) && n <= 12);
    let m = n / 2;
    let order = (1u64 << n) - 1;
    let counts: Vec<u64> = (1..order)
        .into_par_iter()
        .map(|d| bent_components_of_monomial(ctx, d, mode))
        .collect();
    let max_bent = (1u64 << n) - (1u64 << m);
    let attaining: Vec<u64> = counts
        .iter()
        .enumerate()
        .filter_map(|(i, &c)| (c == max_bent).then_some(i as u64 + 1))
        .collect();
    let step = (1u64 << m) + 1;
    let factorization_ok = attaining
        .iter()
        .all(|&d| d % step == 0 && gcd(d / step, (1u64 << m) - 1) == 1);
    MonomialScan {
        n,
        max_bent,
        attaining,
        factorization_ok,
        counts,
    }
}

/// Direct bent census shortcut used by verifiers: the census count and the
/// claim that the non-bent set is exactly the embedded subfield.
pub fn max_bent_census_is_subfield(fm: &FamilyMember) -> Result<bool> {
    let census = crate::walsh::bent_census(&fm.f, fm.tower.ext())?;
    let t = &fm.tower;
    let subfield: std::collections::BTreeSet<Elem> =
        (1..1u32 << t.m()).map(|a| t.embed(a)).collect();
    let nonbent: std::collections::BTreeSet<Elem> = census.nonbent.iter().copied().collect();
    Ok(census.count == (1u64 << t.n()) - (1u64 << t.m()) && nonbent == subfield)
}

/// Full spectrum profile of F computed directly on GF(2^n).
pub fn direct_profile(fm: &FamilyMember) -> crate::walsh::SpectrumProfile {
    spectrum_profile(&fm.f, fm.tower.ext())
}

/// Direct per-coset differential profile of F.
pub fn direct_coset(fm: &FamilyMember) -> Result<crate::differential::CosetDiffProfile> {
    coset_profile(&fm.f, &fm.tower)
}

/// delta row of F in a single direction, for spot checks.
pub fn delta_row_shape(fm: &FamilyMember, a: Elem) -> (u64, u64) {
    let hist = derivative_histogram(&fm.f, a);
    let max = hist.iter().copied().max().unwrap_or(0);
    let hits = hist.iter().filter(|&&c| c != 0).count() as u64;
    (max, hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walsh::bent_census;

    fn tower(m: u32) -> Arc<TowerCtx> {
        Arc::new(TowerCtx::new(m))
    }

    #[test]
    fn canonical_member_profile_m4() {
        let t = tower(4);
        let fm = build(1, LinearizedPoly::identity(4), &t);
        let p = direct_profile(&fm);
        assert_eq!(p.bent_count, 240);
        assert_eq!(p.signature(), vec![(4, 10), (6, 5)]);
        assert_eq!(crate::walsh::nonlinearity(&fm.f, t.ext()), 64);
        // the non-bent set is exactly the embedded subfield
        assert!(max_bent_census_is_subfield(&fm).unwrap());
    }

    #[test]
    fn shadow_signature_matches_direct_m4() {
        let t = tower(4);
        for (r, lambda) in [
            (1, LinearizedPoly::identity(4)),
            (1, LinearizedPoly::monomial(4, 2)),
            (2, LinearizedPoly::new(4, vec![3, 1, 0, 1])),
        ] {
            if !lambda.is_permutation(t.base()) {
                continue;
            }
            let fm = build(r, lambda.clone(), &t);
            let p = direct_profile(&fm);
            let shadow = analyze_shadow(t.base(), r, &lambda);
            assert_eq!(p.signature(), shadow.f_walsh_signature());
            assert_eq!(p.bent_count, 240);
        }
    }

    #[test]
    fn linear_shadow_gives_the_trivial_category() {
        let t = tower(4);
        let fm = build(1, LinearizedPoly::monomial(4, 1), &t);
        let p = direct_profile(&fm);
        assert_eq!(p.signature(), vec![(8, 15)]);
        assert_eq!(crate::walsh::nonlinearity(&fm.f, t.ext()), 0);
    }

    #[test]
    fn gold_shadow_split_two_thirds_one_third() {
        // H = x^3 on GF(2^4): 10 bent, 5 semibent components drive the
        // (4^10, 6^5) profile of F.
        let t = tower(4);
        let shadow = analyze_shadow(t.base(), 1, &LinearizedPoly::identity(4));
        assert_eq!(shadow.h_levels, BTreeMap::from([(0, 10), (2, 5)]));
        assert_eq!(shadow.h_bent_count(), 10);
    }

    #[test]
    fn non_permutation_lambda_loses_bent_components() {
        let t = tower(4);
        let lambda = LinearizedPoly::new(4, vec![1, 1, 0, 0]); // x^2 + x
        assert!(!lambda.is_permutation(t.base()));
        let fm = build(1, lambda, &t);
        let census = bent_census(&fm.f, t.ext()).unwrap();
        assert!(census.count < 240);
    }

    #[test]
    fn walsh_reduction_exhaustive_m3_sample() {
        let t = tower(3);
        for r in 0..3 {
            let fm = build(r, LinearizedPoly::identity(3), &t);
            verify_walsh_reduction(&fm).unwrap();
        }
    }

    #[test]
    fn diff_reduction_m3_and_m4_samples() {
        let t3 = tower(3);
        verify_diff_reduction(&build(1, LinearizedPoly::identity(3), &t3)).unwrap();
        let t4 = tower(4);
        verify_diff_reduction(&build(1, LinearizedPoly::identity(4), &t4)).unwrap();
        verify_diff_reduction(&build(1, LinearizedPoly::monomial(4, 1), &t4)).unwrap();
    }

    #[test]
    fn gold_value_sets() {
        assert_eq!(
            gold_walsh_value_set(5, 1),
            std::collections::BTreeSet::from([0, 256, -256])
        );
        assert_eq!(
            gold_walsh_value_set(4, 2),
            std::collections::BTreeSet::from([0, 64, -64, 256, -256])
        );
        assert_eq!(
            gold_walsh_value_set(4, 1),
            std::collections::BTreeSet::from([0, 64, -64, 128, -128])
        );
    }

    #[test]
    fn gold_spectrum_checks_out_m4() {
        let t = tower(4);
        for r in [1, 2, 3] {
            let chk = gold_spectrum_check(&t, r).unwrap();
            assert!(
                chk.ok && chk.attains_max,
                "r = {r}: computed {:?} predicted {:?}",
                chk.computed,
                chk.predicted
            );
        }
    }

    #[test]
    fn subfield_gamma_components_come_from_h() {
        // the delta rows of subfield directions have shape {0, 2^m}
        let t = tower(4);
        let fm = build(1, LinearizedPoly::identity(4), &t);
        for a_base in 1..16 {
            let (max, hits) = delta_row_shape(&fm, t.embed(a_base));
            assert_eq!((max, hits), (16, 16));
        }
    }

    #[test]
    fn trivial_extension_censuses() {
        let t = TowerCtx::new(4);
        let bent = norm_vectorial_bent(&t);

        // m affine coordinates: maximal bent count
        let affines: Vec<BoolFn> = (0..4)
            .map(|i| BoolFn::from_fn(8, |x| (x >> i) & 1))
            .collect();
        let fv = trivial_extension(&t, &bent, &affines);
        let census = bent_census(&fv, t.ext()).unwrap();
        assert_eq!(census.count, 240);
        assert!(census.subspace_verified);

        // all-zero affine part: the bent complement is the zero function
        let zeros: Vec<BoolFn> = (0..4).map(|_| BoolFn::new(8, vec![0; 256])).collect();
        let fv0 = trivial_extension(&t, &bent, &zeros);
        let census0 = bent_census(&fv0, t.ext()).unwrap();
        assert_eq!(census0.count, 240);
        for &v in &census0.nonbent {
            let c = component(&fv0, v, t.ext()).unwrap();
            assert_eq!(crate::walsh::plateau_level(&c), Some(8));
        }
    }

    #[test]
    fn partial_extension_nonbent_set_is_the_affine_span() {
        // one affine coordinate and three zero coordinates: the non-bent
        // nonzero components are those pairing only the affine slots
        let t = TowerCtx::new(4);
        let bent = norm_vectorial_bent(&t);
        let mut affines: Vec<BoolFn> = vec![BoolFn::from_fn(8, |x| (x >> 2) & 1)];
        affines.extend((0..3).map(|_| BoolFn::new(8, vec![0; 256])));
        let fv = trivial_extension(&t, &bent, &affines);
        let census = bent_census(&fv, t.ext()).unwrap();
        assert_eq!(census.count, 240);
        // non-bent v: those whose dual mask selects no bent coordinate
        for &v in &census.nonbent {
            let mask = t.ext().dual_mask(v);
            assert_eq!(mask & 0x0F, 0, "v = {v:#x} pairs a bent coordinate");
        }
    }

    #[test]
    fn binomial_member_m6() {
        let t = tower(6);
        let base = t.base();
        // cubes have log divisible by 3
        let non_cube = base.exp_g(1);
        let fm = binomial_member(&t, 1, non_cube).unwrap();
        let shadow = analyze_shadow(base, 1, &fm.lambda);
        assert_eq!(shadow.f_walsh_signature(), vec![(8, 63)]);
        assert_eq!(shadow.f_diff_signature(), vec![(2, 63 << 6)]);

        let cube = base.exp_g(3);
        assert!(matches!(
            binomial_member(&t, 1, cube),
            Err(Error::BetaInPowerImage { .. })
        ));
    }

    #[test]
    fn monomial_scan_n6_attainers_factor() {
        let ctx = FieldCtx::new(6);
        let scan = monomial_scan(&ctx, ScanMode::Direct);
        assert!(scan.factorization_ok);
        assert!(scan.attaining.contains(&9)); // 2^3 + 1
        assert!(scan.attaining.contains(&18));
        assert!(!scan.attaining.contains(&3));

        let orbit = monomial_scan(&ctx, ScanMode::Orbit);
        assert_eq!(scan.counts, orbit.counts);
    }
}
