//! Survey pipeline: enumerate normalized linearized permutations at desk
//! scale, classify members by (Walsh spectrum, differential spectrum),
//! compare against the published reference tables for dimensions 8 and 10,
//! run the per-member certificates, and emit CSV / JSON / text reports.
//!
//! The per-member work runs entirely on the half-size shadow H; a
//! deterministic sample of members is revalidated with full 2^n-table
//! computations, and any disagreement aborts the survey.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;

use crate::certify::{self, CertSummary};
use crate::error::{Error, Result};
use crate::family::{analyze_shadow, build, direct_coset, direct_profile, ShadowAnalysis};
use crate::field::TowerCtx;
use crate::linpoly::{candidate, candidate_count, normalized_permutation_count, LinearizedPoly};
use crate::walsh::{render_walsh_signature, SpectrumProfile};

#[derive(Debug, Clone)]
pub struct SurveyConfig {
    pub m: u32,
    pub r: u32,
    pub base_modulus: Option<u32>,
    pub ext_modulus: Option<u32>,
    pub workers: Option<usize>,
    pub seed: u64,
    pub witness_cap: usize,
    pub revalidate_rate: f64,
    /// Explicit member list; the full normalized enumeration when None.
    pub lambdas: Option<Vec<LinearizedPoly>>,
}

impl SurveyConfig {
    pub fn new(m: u32, r: u32) -> SurveyConfig {
        SurveyConfig {
            m,
            r,
            base_modulus: None,
            ext_modulus: None,
            workers: None,
            seed: 0,
            witness_cap: 4,
            revalidate_rate: 0.01,
            lambdas: None,
        }
    }
}

/// Exact category identity: both signatures compared as integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct SignatureKey {
    /// Sorted (plateau level, multiplicity) of the non-bent components.
    pub walsh: Vec<(u32, u64)>,
    /// Sorted (exponent s, number of off-subfield directions with shape {0, 2^s}).
    pub diff: Vec<(u32, u64)>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Category {
    pub index: usize,
    pub walsh: String,
    pub diff: String,
    pub count: u64,
    pub witnesses: Vec<String>,
    #[serde(rename = "walsh_raw")]
    pub key_walsh: Vec<(u32, u64)>,
    #[serde(rename = "diff_raw")]
    pub key_diff: Vec<(u32, u64)>,
}

/// Deterministic category order: highest plateau level ascending, then the
/// Walsh signature lexicographically with (level ascending, multiplicity
/// descending) pair order, then the differential signature likewise.
pub fn category_order(a: &SignatureKey, b: &SignatureKey) -> Ordering {
    let max = |k: &SignatureKey| k.walsh.last().map_or(0, |&(l, _)| l);
    max(a)
        .cmp(&max(b))
        .then_with(|| lex_level_desc(&a.walsh, &b.walsh))
        .then_with(|| lex_level_desc(&a.diff, &b.diff))
}

fn lex_level_desc(a: &[(u32, u64)], b: &[(u32, u64)]) -> Ordering {
    for (&(la, ca), &(lb, cb)) in a.iter().zip(b.iter()) {
        let ord = la.cmp(&lb).then(cb.cmp(&ca));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

#[derive(Debug, Clone, Default)]
struct CatAcc {
    count: u64,
    /// (enumeration index, descriptor), kept sorted ascending, capped.
    witnesses: Vec<(u64, String)>,
}

impl CatAcc {
    fn add(&mut self, idx: u64, descriptor: impl FnOnce() -> String, cap: usize) {
        self.count += 1;
        if self.witnesses.len() < cap || self.witnesses.last().is_some_and(|&(i, _)| idx < i) {
            self.witnesses.push((idx, descriptor()));
            self.witnesses.sort_by_key(|&(i, _)| i);
            self.witnesses.truncate(cap);
        }
    }

    fn merge(mut self, other: CatAcc, cap: usize) -> CatAcc {
        self.count += other.count;
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort_by_key(|&(i, _)| i);
        self.witnesses.truncate(cap);
        self
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConfigEcho {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    pub base_modulus: String,
    pub base_generator: String,
    pub ext_modulus: String,
    pub ext_generator: String,
    pub embed_root: String,
    pub normalization: String,
    pub seed: u64,
    pub witness_cap: usize,
    pub revalidate_rate: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SurveyResult {
    pub tool: String,
    pub config: ConfigEcho,
    pub enumerated: u64,
    pub expected_enumerated: u64,
    /// Differential row shared by every member on subfield directions.
    pub subfield_diff_row: String,
    /// Identically-zero subfield components across all members (metadata;
    /// always zero when every shadow is a permutation composite).
    pub zero_components_total: u64,
    pub categories: Vec<Category>,
    pub revalidated: u64,
    pub certificates: CertSummary,
    pub comparison: Option<TableComparison>,
}

// ---------------------------------------------------------------------------
// Reference tables (dimensions 8 and 10) for the comparison report.
// ---------------------------------------------------------------------------

pub struct ReferenceRow {
    pub cat: usize,
    pub count: u64,
    pub walsh: &'static [(u32, u64)],
    /// (exponent, printed count); None where the reference omits the count.
    pub diff: &'static [(u32, Option<u64>)],
}

pub const TABLE_DIM8: &[ReferenceRow] = &[
    ReferenceRow {
        cat: 1,
        count: 2,
        walsh: &[(4, 10), (6, 5)],
        diff: &[(1, Some(240))],
    },
    ReferenceRow {
        cat: 2,
        count: 180,
        walsh: &[(4, 8), (6, 7)],
        diff: &[(1, Some(192)), (2, Some(48))],
    },
    ReferenceRow {
        cat: 3,
        count: 750,
        walsh: &[(4, 6), (6, 9)],
        diff: &[(1, Some(144)), (2, Some(96))],
    },
    ReferenceRow {
        cat: 4,
        count: 15,
        walsh: &[(4, 12), (6, 2), (8, 1)],
        diff: &[(1, Some(192)), (2, Some(48))],
    },
    ReferenceRow {
        cat: 5,
        count: 280,
        walsh: &[(4, 8), (6, 6), (8, 1)],
        diff: &[(1, Some(96)), (2, Some(144))],
    },
    ReferenceRow {
        cat: 6,
        count: 11,
        walsh: &[(4, 12), (8, 3)],
        diff: &[(2, Some(240))],
    },
    ReferenceRow {
        cat: 7,
        count: 105,
        walsh: &[(6, 14), (8, 1)],
        diff: &[(1, Some(128)), (3, Some(112))],
    },
    ReferenceRow {
        cat: 8,
        count: 1,
        walsh: &[(8, 15)],
        diff: &[(4, Some(240))],
    },
];

pub const TABLE_DIM10: &[ReferenceRow] = &[
    ReferenceRow {
        cat: 1,
        count: 4,
        walsh: &[(6, 31)],
        diff: &[(1, Some(992))],
    },
    ReferenceRow {
        cat: 2,
        count: 4650,
        walsh: &[(6, 29), (8, 2)],
        diff: &[(1, Some(800)), (2, Some(192))],
    },
    ReferenceRow {
        cat: 3,
        count: 43400,
        walsh: &[(6, 28), (8, 3)],
        diff: &[(1, Some(704)), (2, Some(288))],
    },
    ReferenceRow {
        cat: 4,
        count: 116000,
        walsh: &[(6, 27), (8, 4)],
        diff: &[(1, Some(608)), (2, Some(384))],
    },
    ReferenceRow {
        cat: 5,
        count: 77748,
        walsh: &[(6, 26), (8, 5)],
        diff: &[(1, Some(512)), (2, Some(480))],
    },
    ReferenceRow {
        cat: 6,
        count: 28210,
        walsh: &[(6, 25), (8, 6)],
        diff: &[(1, Some(416)), (2, Some(576))],
    },
    ReferenceRow {
        cat: 7,
        count: 2170,
        walsh: &[(6, 24), (8, 7)],
        diff: &[(1, Some(768)), (3, Some(224))],
    },
    ReferenceRow {
        cat: 8,
        count: 4092,
        walsh: &[(6, 30), (10, 1)],
        diff: &[(1, None), (4, Some(240))],
    },
    ReferenceRow {
        cat: 9,
        count: 9300,
        walsh: &[(6, 24), (8, 6), (10, 1)],
        diff: &[(1, Some(384)), (2, Some(384)), (3, Some(224))],
    },
    ReferenceRow {
        cat: 10,
        count: 465,
        walsh: &[(8, 30), (10, 1)],
        diff: &[(1, Some(512)), (4, Some(480))],
    },
    ReferenceRow {
        cat: 11,
        count: 40920,
        walsh: &[(8, 9), (10, 22)],
        diff: &[(1, Some(576)), (2, Some(192)), (3, Some(224))],
    },
    ReferenceRow {
        cat: 12,
        count: 1,
        walsh: &[(10, 31)],
        diff: &[(5, Some(992))],
    },
];

#[derive(Debug, Clone, serde::Serialize)]
pub struct RowComparison {
    pub reference_cat: usize,
    /// 1-based index of the computed category matched by Walsh signature.
    pub matched_index: Option<usize>,
    pub walsh_match: bool,
    pub diff_match: bool,
    pub count_delta: i64,
    pub notes: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct TableComparison {
    pub table: String,
    pub rows: Vec<RowComparison>,
    pub computed_total: u64,
    pub reference_total: u64,
    pub exact_rows: usize,
    pub flags: Vec<String>,
}

fn compare_with_reference(
    table_name: &str,
    reference: &[ReferenceRow],
    categories: &[Category],
) -> TableComparison {
    let mut rows = Vec::new();
    let mut flags = Vec::new();
    let mut exact_rows = 0;
    let mut matched_indices = vec![false; categories.len()];

    for r in reference {
        let hit = categories.iter().position(|c| c.key_walsh == r.walsh);
        match hit {
            None => {
                flags.push(format!(
                    "reference cat {} walsh {} has no computed counterpart",
                    r.cat,
                    render_walsh_signature(r.walsh)
                ));
                rows.push(RowComparison {
                    reference_cat: r.cat,
                    matched_index: None,
                    walsh_match: false,
                    diff_match: false,
                    count_delta: -(r.count as i64),
                    notes: "no computed category with this Walsh signature".into(),
                });
            }
            Some(pos) => {
                matched_indices[pos] = true;
                let c = &categories[pos];
                let exps_match = c.key_diff.len() == r.diff.len()
                    && c.key_diff
                        .iter()
                        .zip(r.diff.iter())
                        .all(|(a, b)| a.0 == b.0);
                let printed_counts_match = exps_match
                    && c.key_diff
                        .iter()
                        .zip(r.diff.iter())
                        .all(|(a, b)| match b.1 {
                            Some(cnt) => a.1 == cnt,
                            None => true,
                        });
                let omitted: Vec<String> = r
                    .diff
                    .iter()
                    .zip(c.key_diff.iter())
                    .filter(|(b, _)| b.1.is_none())
                    .map(|(b, a)| {
                        format!(
                            "{{0, {}}} count printed blank, computed {}",
                            1u64 << b.0,
                            a.1
                        )
                    })
                    .collect();
                let count_delta = c.count as i64 - r.count as i64;
                let mut notes = Vec::new();
                if !exps_match || !printed_counts_match {
                    notes.push(format!("computed differential spectrum {}", c.diff));
                    flags.push(format!(
                        "reference cat {}: differential spectrum differs (computed {})",
                        r.cat, c.diff
                    ));
                }
                for o in omitted {
                    flags.push(format!("reference cat {}: {}", r.cat, o));
                    notes.push(o);
                }
                if count_delta != 0 {
                    flags.push(format!(
                        "reference cat {}: count differs (computed {}, printed {})",
                        r.cat, c.count, r.count
                    ));
                }
                if printed_counts_match && count_delta == 0 {
                    exact_rows += 1;
                }
                rows.push(RowComparison {
                    reference_cat: r.cat,
                    matched_index: Some(c.index),
                    walsh_match: true,
                    diff_match: printed_counts_match,
                    count_delta,
                    notes: notes.join("; "),
                });
            }
        }
    }
    for (pos, seen) in matched_indices.iter().enumerate() {
        if !seen {
            flags.push(format!(
                "computed category {} ({}, {}) has no reference counterpart",
                categories[pos].index, categories[pos].walsh, categories[pos].diff
            ));
        }
    }
    TableComparison {
        table: table_name.to_string(),
        rows,
        computed_total: categories.iter().map(|c| c.count).sum(),
        reference_total: reference.iter().map(|r| r.count).sum(),
        exact_rows,
        flags,
    }
}

// ---------------------------------------------------------------------------
// The survey itself.
// ---------------------------------------------------------------------------

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn sampled(seed: u64, idx: u64, rate: f64) -> bool {
    let threshold = (rate.clamp(0.0, 1.0) * (u64::MAX as f64)) as u64;
    splitmix64(seed ^ idx.wrapping_mul(0xA24BAED4963EE407)) <= threshold
}

/// Full-table revalidation of one member against its shadow analysis.
fn revalidate_member(
    tower: &Arc<TowerCtx>,
    r: u32,
    lambda: &LinearizedPoly,
    shadow: &ShadowAnalysis,
) -> Result<()> {
    let fm = build(r, lambda.clone(), tower);
    let profile = direct_profile(&fm);
    let max_bent = (1u64 << tower.n()) - (1u64 << tower.m());
    if !profile.all_plateaued
        || profile.bent_count != max_bent
        || profile.signature() != shadow.f_walsh_signature()
    {
        return Err(Error::ReductionMismatch(format!(
            "revalidation: walsh profile of {} disagrees with the shadow",
            fm.descriptor()
        )));
    }
    let coset = direct_coset(&fm)?;
    if coset.exponent != shadow.exponents {
        return Err(Error::ReductionMismatch(format!(
            "revalidation: coset exponents of {} disagree with the shadow",
            fm.descriptor()
        )));
    }
    Ok(())
}

struct FoldState {
    cats: BTreeMap<SignatureKey, CatAcc>,
    certs: CertSummary,
    members: u64,
    revalidated: u64,
    zero_components: u64,
    error: Option<Error>,
}

impl FoldState {
    fn new() -> FoldState {
        FoldState {
            cats: BTreeMap::new(),
            certs: CertSummary::default(),
            members: 0,
            revalidated: 0,
            zero_components: 0,
            error: None,
        }
    }

    fn merge(mut self, other: FoldState, cap: usize) -> FoldState {
        for (key, acc) in other.cats {
            match self.cats.remove(&key) {
                None => {
                    self.cats.insert(key, acc);
                }
                Some(mine) => {
                    self.cats.insert(key, mine.merge(acc, cap));
                }
            }
        }
        self.certs.merge(other.certs);
        self.members += other.members;
        self.revalidated += other.revalidated;
        self.zero_components += other.zero_components;
        if self.error.is_none() {
            self.error = other.error;
        }
        self
    }
}

pub fn run_survey(cfg: &SurveyConfig) -> Result<SurveyResult> {
    match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(|| run_survey_inner(cfg)),
        None => run_survey_inner(cfg),
    }
}

fn run_survey_inner(cfg: &SurveyConfig) -> Result<SurveyResult> {
    let m = cfg.m;
    assert!(
        (2..=6).contains(&m),
        "full enumeration is supported for m <= 6"
    );
    let r = cfg.r % m;
    let base_mod = cfg
        .base_modulus
        .unwrap_or_else(|| crate::field::canonical_modulus(m));
    let ext_mod = cfg
        .ext_modulus
        .unwrap_or_else(|| crate::field::canonical_modulus(2 * m));
    let tower = Arc::new(TowerCtx::with_moduli(m, base_mod, ext_mod)?);
    let base = tower.base();

    let process = |idx: u64, lambda: LinearizedPoly, state: &mut FoldState| {
        if state.error.is_some() {
            return;
        }
        let shadow = analyze_shadow(base, r, &lambda);

        // plateaued functions with only bent and semibent shadow components
        // cannot exceed 2(2^m - 1)/3 bent shadow components
        if shadow.h_levels.keys().all(|&j| j <= 2)
            && 3 * shadow.h_bent_count() > 2 * ((1u64 << m) - 1)
        {
            state.error = Some(Error::ReductionMismatch(format!(
                "bent-count remark violated at idx {idx}"
            )));
            return;
        }

        state.zero_components += shadow.zero_components;
        let key = SignatureKey {
            walsh: shadow.f_walsh_signature(),
            diff: shadow.f_diff_signature(),
        };
        let instance = format!("m={m};r={r};idx={idx}");
        for rep in certify::member_checks(&shadow, r, &lambda, &instance) {
            state.certs.absorb(rep);
        }
        if sampled(cfg.seed, idx, cfg.revalidate_rate) {
            if let Err(e) = revalidate_member(&tower, r, &lambda, &shadow) {
                state.error = Some(e);
                return;
            }
            state.revalidated += 1;
        }
        let b = base;
        state.cats.entry(key).or_default().add(
            idx,
            || format!("r={r};L={}", lambda.render(b)),
            cfg.witness_cap,
        );
        state.members += 1;
    };

    let folded = match &cfg.lambdas {
        Some(list) => {
            let mut state = FoldState::new();
            for (idx, lambda) in list.iter().enumerate() {
                if !lambda.is_permutation(base) {
                    return Err(Error::NotPermutation(lambda.render(base)));
                }
                process(idx as u64, lambda.clone(), &mut state);
            }
            state
        }
        None => (0..candidate_count(m))
            .into_par_iter()
            .fold(FoldState::new, |mut state, idx| {
                let lambda = candidate(m, idx);
                if lambda.is_permutation(base) {
                    process(idx, lambda, &mut state);
                }
                state
            })
            .reduce(FoldState::new, |a, b| a.merge(b, cfg.witness_cap)),
    };
    if let Some(e) = folded.error {
        return Err(e);
    }

    let expected = if cfg.lambdas.is_none() {
        normalized_permutation_count(m)
    } else {
        folded.members
    };
    if folded.members != expected {
        return Err(Error::ReductionMismatch(format!(
            "conservation: enumerated {} members, expected {}",
            folded.members, expected
        )));
    }

    let mut keyed: Vec<(SignatureKey, CatAcc)> = folded.cats.into_iter().collect();
    keyed.sort_by(|a, b| category_order(&a.0, &b.0));
    let categories: Vec<Category> = keyed
        .into_iter()
        .enumerate()
        .map(|(i, (key, acc))| Category {
            index: i + 1,
            walsh: render_walsh_signature(&key.walsh),
            diff: crate::differential::render_diff_signature(&key.diff),
            count: acc.count,
            witnesses: acc.witnesses.into_iter().map(|(_, d)| d).collect(),
            key_walsh: key.walsh,
            key_diff: key.diff,
        })
        .collect();

    let comparison = match (m, cfg.lambdas.is_none()) {
        (4, true) => Some(compare_with_reference("dim-8", TABLE_DIM8, &categories)),
        (5, true) => Some(compare_with_reference("dim-10", TABLE_DIM10, &categories)),
        _ => None,
    };

    let config = ConfigEcho {
        m,
        n: 2 * m,
        r,
        base_modulus: format!("{:#x}", base.modulus()),
        base_generator: format!("{:#x}", base.generator()),
        ext_modulus: format!("{:#x}", tower.ext().modulus()),
        ext_generator: format!("{:#x}", tower.ext().generator()),
        embed_root: format!("{:#x}", tower.embed_root()),
        normalization: "monic (highest nonzero coefficient = 1)".into(),
        seed: cfg.seed,
        witness_cap: cfg.witness_cap,
        revalidate_rate: cfg.revalidate_rate,
    };

    Ok(SurveyResult {
        tool: format!("maxbent {}", env!("CARGO_PKG_VERSION")),
        config,
        enumerated: folded.members,
        expected_enumerated: expected,
        subfield_diff_row: format!("{{0, {}}}_{}", 1u64 << m, (1u64 << m) - 1),
        zero_components_total: folded.zero_components,
        categories,
        revalidated: folded.revalidated,
        certificates: folded.certs,
        comparison,
    })
}

// ---------------------------------------------------------------------------
// Single-member analysis (used by the member / bino subcommands).
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct MemberReport {
    pub descriptor: String,
    pub config: ConfigEcho,
    pub bent_count: u64,
    pub max_bent: u64,
    pub walsh: String,
    pub diff: String,
    pub subfield_diff_row: String,
    pub nonlinearity: i64,
    /// Whether L permutes the base field; only then is the member max-bent
    /// and the shadow reduction applicable.
    pub is_permutation: bool,
    pub shadow_agrees: bool,
    pub certificates: Vec<certify::CertReport>,
}

pub fn analyze_member(cfg: &SurveyConfig, lambda: &LinearizedPoly) -> Result<MemberReport> {
    let m = cfg.m;
    let r = cfg.r % m;
    let base_mod = cfg
        .base_modulus
        .unwrap_or_else(|| crate::field::canonical_modulus(m));
    let ext_mod = cfg
        .ext_modulus
        .unwrap_or_else(|| crate::field::canonical_modulus(2 * m));
    let tower = Arc::new(TowerCtx::with_moduli(m, base_mod, ext_mod)?);

    let fm = build(r, lambda.clone(), &tower);
    let is_permutation = lambda.is_permutation(tower.base());
    let profile: SpectrumProfile = direct_profile(&fm);
    let coset = direct_coset(&fm)?;

    // The shadow reduction describes the subfield components and coset
    // exponents only when L permutes; for a singular L the member is not
    // max-bent and the direct tables are the sole authority.
    let mut shadow_agrees = false;
    let mut certificates = Vec::new();
    if is_permutation {
        let shadow = analyze_shadow(tower.base(), r, lambda);
        shadow_agrees = profile.signature() == shadow.f_walsh_signature()
            && coset.exponent == shadow.exponents;
        if !shadow_agrees {
            return Err(Error::ReductionMismatch(format!(
                "member {}: direct and shadow computations disagree",
                fm.descriptor()
            )));
        }
        certificates = certify::member_checks(&shadow, r, lambda, &fm.descriptor());
    }
    certificates.push(certify::check_nonlinearity_cap(
        &profile,
        tower.n(),
        &fm.descriptor(),
    ));
    certificates.push(certify::check_plateau_level_bound(
        &profile,
        tower.n(),
        crate::differential::diff_profile(&fm.f).is_apn(),
        &fm.descriptor(),
    ));

    let config = ConfigEcho {
        m,
        n: 2 * m,
        r,
        base_modulus: format!("{:#x}", tower.base().modulus()),
        base_generator: format!("{:#x}", tower.base().generator()),
        ext_modulus: format!("{:#x}", tower.ext().modulus()),
        ext_generator: format!("{:#x}", tower.ext().generator()),
        embed_root: format!("{:#x}", tower.embed_root()),
        normalization: "as given".into(),
        seed: cfg.seed,
        witness_cap: cfg.witness_cap,
        revalidate_rate: cfg.revalidate_rate,
    };
    Ok(MemberReport {
        descriptor: fm.descriptor(),
        config,
        bent_count: profile.bent_count,
        max_bent: (1u64 << tower.n()) - (1u64 << m),
        walsh: profile.render(),
        diff: coset.render(),
        subfield_diff_row: coset.render_subfield_row(),
        nonlinearity: crate::walsh::nonlinearity(&fm.f, tower.ext()),
        is_permutation,
        shadow_agrees,
        certificates,
    })
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

pub fn render_csv(result: &SurveyResult) -> String {
    let mut out = String::from("cat,walsh,diff,count,witness\n");
    for c in &result.categories {
        let witness = c.witnesses.first().map(String::as_str).unwrap_or("");
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            c.index,
            csv_field(&c.walsh),
            csv_field(&c.diff),
            c.count,
            csv_field(witness)
        ));
    }
    out
}

pub fn render_json(result: &SurveyResult) -> String {
    serde_json::to_string_pretty(result).expect("survey results serialize") + "\n"
}

pub fn render_text(result: &SurveyResult) -> String {
    let mut out = String::new();
    let c = &result.config;
    out.push_str(&format!(
        "# maxbent survey  m={} n={} r={}\n",
        c.m, c.n, c.r
    ));
    out.push_str(&format!(
        "# base field GF(2^{}): modulus {} generator {}\n",
        c.m, c.base_modulus, c.base_generator
    ));
    out.push_str(&format!(
        "# ext field GF(2^{}): modulus {} generator {} embed-root {}\n",
        c.n, c.ext_modulus, c.ext_generator, c.embed_root
    ));
    out.push_str(&format!(
        "# normalization: {}; r canonicalized mod m\n",
        c.normalization
    ));
    out.push_str(&format!(
        "# members: {} (expected {}), revalidated directly: {}\n",
        result.enumerated, result.expected_enumerated, result.revalidated
    ));
    out.push_str(&format!(
        "# subfield differential row (every member): {}\n",
        result.subfield_diff_row
    ));
    if result.zero_components_total > 0 {
        out.push_str(&format!(
            "# identically-zero subfield components across members: {}\n",
            result.zero_components_total
        ));
    }
    out.push_str(&format!(
        "{:<4} {:<10} {:<28} {:<44} witness\n",
        "cat", "count", "walsh spectrum", "differential spectrum"
    ));
    for cat in &result.categories {
        out.push_str(&format!(
            "{:<4} {:<10} {:<28} {:<44} {}\n",
            cat.index,
            cat.count,
            cat.walsh,
            cat.diff,
            cat.witnesses.first().map(String::as_str).unwrap_or("")
        ));
    }
    if let Some(cmp) = &result.comparison {
        out.push_str(&format!(
            "# reference {}: {}/{} rows exact, computed total {}, reference total {}\n",
            cmp.table,
            cmp.exact_rows,
            cmp.rows.len(),
            cmp.computed_total,
            cmp.reference_total
        ));
        for flag in &cmp.flags {
            out.push_str(&format!("# flag: {flag}\n"));
        }
    }
    for line in result.certificates.lines() {
        out.push_str(&format!("# {line}\n"));
    }
    let violated = result.certificates.violated();
    out.push_str(&format!("# certificates violated: {violated}\n"));
    out
}

/// Writes survey.csv, survey.json and survey.txt under `dir`.
pub fn emit_reports(result: &SurveyResult, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (name, contents) in [
        ("survey.csv", render_csv(result)),
        ("survey.json", render_json(result)),
        ("survey.txt", render_text(result)),
    ] {
        let path = dir.join(name);
        let mut fh = std::fs::File::create(&path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        fh.write_all(contents.as_bytes())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}
