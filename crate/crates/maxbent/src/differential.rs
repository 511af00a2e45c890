//! Differential analytics: delta counts, differential uniformity and
//! spectrum, the per-direction frequency tables, and the per-coset exponent
//! profile of the trace family.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, TowerCtx};
use crate::linpoly::rank_gf2;
use crate::walsh::VectorialFn;

/// delta_F(a, b) = |{x : F(x+a) + F(x) = b}| by direct counting.
pub fn delta(fv: &VectorialFn, a: Elem, b: Elem) -> Result<u64> {
    if a == 0 {
        return Err(Error::ZeroDirection);
    }
    Ok(fv
        .table
        .iter()
        .enumerate()
        .filter(|&(x, &y)| y ^ fv.table[x ^ a as usize] == b)
        .count() as u64)
}

/// Histogram of b -> delta_F(a, b) in one pass over x.
pub fn derivative_histogram(fv: &VectorialFn, a: Elem) -> Vec<u64> {
    let mut hist = vec![0u64; fv.table.len()];
    for (x, &y) in fv.table.iter().enumerate() {
        hist[(y ^ fv.table[x ^ a as usize]) as usize] += 1;
    }
    debug_assert_eq!(hist.iter().sum::<u64>(), fv.table.len() as u64);
    hist
}

/// mu_F(a, i) = |{b : delta_F(a, b) = i}|, materialized on demand.
pub fn mu(fv: &VectorialFn, a: Elem) -> Result<BTreeMap<u64, u64>> {
    if a == 0 {
        return Err(Error::ZeroDirection);
    }
    let mut out = BTreeMap::new();
    for count in derivative_histogram(fv, a) {
        *out.entry(count).or_insert(0) += 1;
    }
    Ok(out)
}

/// For quadratic F, delta_F(a, .) takes values in {0, 2^s} where s is the
/// kernel dimension of the linear map x -> F(x+a) + F(x) + F(a).
///
/// The linearity of the derivative map is verified pointwise; non-quadratic
/// input is rejected rather than silently misclassified.
pub fn delta_quadratic(fv: &VectorialFn, a: Elem) -> Result<u32> {
    if a == 0 {
        return Err(Error::ZeroDirection);
    }
    let k = fv.k;
    let fa = fv.table[a as usize] ^ fv.table[0];
    let d = |x: Elem| fv.table[(x ^ a) as usize] ^ fv.table[x as usize] ^ fa;
    let mut cols: Vec<u32> = (0..k).map(|j| d(1 << j)).collect();
    for x in 0..1u32 << k {
        let mut expect = 0;
        for (j, &c) in cols.iter().enumerate() {
            if (x >> j) & 1 == 1 {
                expect ^= c;
            }
        }
        if expect != d(x) {
            return Err(Error::NotQuadratic);
        }
    }
    Ok(k - rank_gf2(&mut cols))
}

/// Differential uniformity and the frequency table of the delta multiset.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DiffProfile {
    pub uniformity: u64,
    /// value 2i -> frequency of 2i among all (a != 0, b) pairs; includes 0.
    pub spectrum: BTreeMap<u64, u64>,
}

impl DiffProfile {
    pub fn is_apn(&self) -> bool {
        self.uniformity == 2
    }
}

/// Full differential profile by per-direction histogram passes.
pub fn diff_profile(fv: &VectorialFn) -> DiffProfile {
    let spectrum = (1..fv.table.len() as Elem)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<u64, u64>, a| {
            for count in derivative_histogram(fv, a) {
                *acc.entry(count).or_insert(0) += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let uniformity = spectrum.keys().last().copied().unwrap_or(0);
    debug_assert!(spectrum.keys().all(|&v| v % 2 == 0));
    DiffProfile {
        uniformity,
        spectrum,
    }
}

/// Per-coset differential shape of a trace-family member F on GF(2^n):
/// for each z in GF(2^m)^* the exponent s with delta_F(a, .) in {0, 2^s}
/// on the whole coset {a : relative trace of a = z}, plus the tallies
/// |A_s| and the subfield row.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CosetDiffProfile {
    pub m: u32,
    /// z (base-field encoding) -> s.
    pub exponent: BTreeMap<Elem, u32>,
    /// s -> |A_s|.
    pub a_sets: BTreeMap<u32, u64>,
    /// Exponent on GF(2^m)^* directions; m for every family member.
    pub subfield_exponent: u32,
}

impl CosetDiffProfile {
    /// Largest off-subfield exponent; the uniformity of the shadow map is 2^sigma.
    pub fn sigma(&self) -> u32 {
        self.a_sets.keys().last().copied().unwrap_or(0)
    }

    /// Off-subfield signature as sorted (s, 2^m * |A_s|) pairs.
    pub fn signature(&self) -> Vec<(u32, u64)> {
        self.a_sets
            .iter()
            .map(|(&s, &c)| (s, c << self.m))
            .collect()
    }

    /// Table rendering of the off-subfield rows, e.g. "{0, 2}_192, {0, 4}_48".
    pub fn render(&self) -> String {
        render_diff_signature(&self.signature())
    }

    pub fn render_subfield_row(&self) -> String {
        format!(
            "{{0, {}}}_{}",
            1u64 << self.subfield_exponent,
            (1u64 << self.m) - 1
        )
    }
}

pub fn render_diff_signature(sig: &[(u32, u64)]) -> String {
    let parts: Vec<String> = sig
        .iter()
        .map(|(s, count)| format!("{{0, {}}}_{}", 1u64 << s, count))
        .collect();
    parts.join(", ")
}

/// Measures the per-coset profile of F directly from its table, validating
/// that the exponent is constant on every coset and that each delta row has
/// the {0, 2^s} shape with exactly 2^(n-s) nonzero entries.
pub fn coset_profile(fv: &VectorialFn, t: &TowerCtx) -> Result<CosetDiffProfile> {
    let m = t.m();
    let n = t.n();
    assert_eq!(fv.k, n);

    let subfield_exponent = row_exponent(fv, t.embed(1), n)?;
    for a_base in 1..(1u32 << m) {
        let s = row_exponent(fv, t.embed(a_base), n)?;
        if s != subfield_exponent {
            return Err(Error::CosetInconsistency { z: 0 });
        }
    }

    let per_z: Vec<Result<(Elem, u32)>> = (1..1u32 << m)
        .into_par_iter()
        .map(|z| {
            let mut coset_s = None;
            for a in 0..1u32 << n {
                if t.rel_trace_base(a) != z {
                    continue;
                }
                let s = row_exponent(fv, a, n)?;
                match coset_s {
                    None => coset_s = Some(s),
                    Some(prev) if prev != s => return Err(Error::CosetInconsistency { z }),
                    _ => {}
                }
            }
            Ok((z, coset_s.expect("every coset is nonempty")))
        })
        .collect();

    let mut exponent = BTreeMap::new();
    let mut a_sets: BTreeMap<u32, u64> = BTreeMap::new();
    for r in per_z {
        let (z, s) = r?;
        exponent.insert(z, s);
        *a_sets.entry(s).or_insert(0) += 1;
    }
    debug_assert_eq!(a_sets.values().sum::<u64>(), (1u64 << m) - 1);
    Ok(CosetDiffProfile {
        m,
        exponent,
        a_sets,
        subfield_exponent,
    })
}

/// Checks one delta row to have shape {0, 2^s} with 2^(n-s) hits and
/// returns s.
fn row_exponent(fv: &VectorialFn, a: Elem, n: u32) -> Result<u32> {
    let hist = derivative_histogram(fv, a);
    let mut nonzero = None;
    let mut hits = 0u64;
    for &c in &hist {
        if c == 0 {
            continue;
        }
        hits += 1;
        match nonzero {
            None => nonzero = Some(c),
            Some(prev) if prev != c => {
                return Err(Error::ReductionMismatch(format!(
                    "delta row of a = {a:#x} is not two-valued"
                )))
            }
            _ => {}
        }
    }
    let v = nonzero.expect("delta row sums to 2^n");
    if v.count_ones() != 1 || hits != (1u64 << n) / v {
        return Err(Error::ReductionMismatch(format!(
            "delta row of a = {a:#x} malformed"
        )));
    }
    Ok(v.trailing_zeros())
}

/// Reconstructs the full frequency table of a family member from its coset
/// profile: each z in A_s contributes 2^m directions whose rows hold
/// 2^(n-s) values 2^s, the subfield contributes 2^m - 1 directions of
/// exponent m, zeros fill the rest.
pub fn diff_profile_from_coset(c: &CosetDiffProfile) -> DiffProfile {
    let m = c.m;
    let n = 2 * m;
    let row = 1u64 << n;
    let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
    let mut nonzero_slots = 0u64;
    for (&s, &count_z) in &c.a_sets {
        let directions = count_z << m;
        let hits = 1u64 << (n - s);
        *spectrum.entry(1 << s).or_insert(0) += directions * hits;
        nonzero_slots += directions * hits;
    }
    let sub_dirs = (1u64 << m) - 1;
    let sub_hits = 1u64 << (n - c.subfield_exponent);
    *spectrum.entry(1 << c.subfield_exponent).or_insert(0) += sub_dirs * sub_hits;
    nonzero_slots += sub_dirs * sub_hits;
    let total_slots = (row - 1) * row;
    spectrum.insert(0, total_slots - nonzero_slots);
    let uniformity = spectrum.keys().last().copied().unwrap_or(0);
    DiffProfile {
        uniformity,
        spectrum,
    }
}
