//! Walsh-transform analytics: fast transform, plateau levels, bentness,
//! nonlinearity, the sum-of-square indicator and the bent-component census.
//!
//! All Walsh values are exact signed integers; spectra are compared with
//! integer equality only.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

/// Truth table of a Boolean function on GF(2^k), index = element encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolFn {
    pub k: u32,
    pub tt: Vec<u8>,
}

impl BoolFn {
    pub fn new(k: u32, tt: Vec<u8>) -> BoolFn {
        assert_eq!(tt.len(), 1 << k);
        assert!(tt.iter().all(|&b| b <= 1));
        BoolFn { k, tt }
    }

    pub fn from_fn(k: u32, mut f: impl FnMut(Elem) -> u32) -> BoolFn {
        BoolFn::new(k, (0..1u32 << k).map(|x| (f(x) & 1) as u8).collect())
    }
}

/// Value table of a function GF(2^k) -> GF(2^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorialFn {
    pub k: u32,
    pub table: Vec<Elem>,
}

impl VectorialFn {
    pub fn new(k: u32, table: Vec<Elem>) -> VectorialFn {
        assert_eq!(table.len(), 1 << k);
        assert!(table.iter().all(|&y| y < (1u32 << k) || k == 32));
        VectorialFn { k, table }
    }

    pub fn from_fn(k: u32, f: impl FnMut(Elem) -> Elem) -> VectorialFn {
        VectorialFn::new(k, (0..1u32 << k).map(f).collect())
    }

    /// The monomial map x -> x^d.
    pub fn monomial(ctx: &FieldCtx, d: u64) -> VectorialFn {
        VectorialFn::from_fn(ctx.k(), |x| ctx.pow(x, d))
    }
}

/// In-place Walsh-Hadamard butterfly over the bitwise hypercube.
fn fwht_in_place(v: &mut [i64]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        let mut i = 0;
        while i < n {
            for j in i..i + h {
                let a = v[j];
                let b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
            i += h * 2;
        }
        h *= 2;
    }
}

/// Transform of the sign vector of `tt`, indexed by bit masks w:
/// out[w] = sum_x (-1)^(tt[x] + popcount(w & x)).
fn fwht_signs(tt: &[u8]) -> Vec<i64> {
    let mut v: Vec<i64> = tt.iter().map(|&b| 1 - 2 * b as i64).collect();
    fwht_in_place(&mut v);
    v
}

/// Full Walsh transform W_f(u) = sum_x (-1)^(f(x) + Tr(u x)) for every u.
///
/// The fast transform works over the bitwise inner product; the trace form
/// is recovered by reindexing through the dual-basis mask, which is a
/// bijection on inputs.
pub fn walsh_all(f: &BoolFn, ctx: &FieldCtx) -> Vec<i64> {
    assert_eq!(f.k, ctx.k());
    let raw = fwht_signs(&f.tt);
    (0..f.tt.len())
        .map(|u| raw[ctx.dual_mask(u as Elem) as usize])
        .collect()
}

/// Truth table of the component x -> Tr(v F(x)); v = 0 is rejected.
pub fn component(fv: &VectorialFn, v: Elem, ctx: &FieldCtx) -> Result<BoolFn> {
    if v == 0 {
        return Err(Error::ZeroComponent);
    }
    assert_eq!(fv.k, ctx.k());
    Ok(BoolFn::new(
        fv.k,
        fv.table
            .iter()
            .map(|&y| ctx.abs_trace(ctx.mul(v, y)) as u8)
            .collect(),
    ))
}

/// Plateau level from a Walsh value multiset: Some(s) when the values are
/// contained in {0, +-2^((k+s)/2)}, with bent reported as s = 0.
fn plateau_level_of(walsh: &[i64], k: u32) -> Option<u32> {
    let max = walsh.iter().map(|w| w.abs()).max().unwrap_or(0);
    if max == 0 || max.count_ones() != 1 {
        return None;
    }
    let log2 = max.trailing_zeros();
    if 2 * log2 < k {
        return None;
    }
    let s = 2 * log2 - k;
    walsh.iter().all(|&w| w == 0 || w.abs() == max).then_some(s)
}

/// Plateau test for a Boolean function; the zero function on GF(2^k) is
/// k-plateaued (single spike 2^k at u = 0).
pub fn plateau_level(f: &BoolFn) -> Option<u32> {
    plateau_level_of(&fwht_signs(&f.tt), f.k)
}

/// Classification of all 2^k - 1 nonzero components by plateau level.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SpectrumProfile {
    /// |S_0|, the number of bent components.
    pub bent_count: u64,
    /// i -> |S_i| for i >= 1.
    pub levels: BTreeMap<u32, u64>,
    pub max_abs_walsh: i64,
    pub all_plateaued: bool,
    pub non_plateaued: u64,
}

impl SpectrumProfile {
    /// Non-bent level signature as sorted (level, multiplicity) pairs.
    pub fn signature(&self) -> Vec<(u32, u64)> {
        self.levels.iter().map(|(&l, &c)| (l, c)).collect()
    }

    /// Highest plateau level present (0 when everything is bent).
    pub fn max_level(&self) -> u32 {
        self.levels.keys().last().copied().unwrap_or(0)
    }

    /// Renders the non-bent levels in table notation, e.g. "(4^10, 6^5)".
    pub fn render(&self) -> String {
        render_walsh_signature(&self.signature())
    }
}

pub fn render_walsh_signature(sig: &[(u32, u64)]) -> String {
    let inner: Vec<String> = sig.iter().map(|(l, c)| format!("{l}^{c}")).collect();
    format!("({})", inner.join(", "))
}

pub fn spectrum_profile(fv: &VectorialFn, ctx: &FieldCtx) -> SpectrumProfile {
    assert_eq!(fv.k, ctx.k());
    let k = fv.k;
    let per_component: Vec<(Option<u32>, i64)> = (1..1u32 << k)
        .into_par_iter()
        .map(|v| {
            let tt: Vec<u8> = fv
                .table
                .iter()
                .map(|&y| ctx.abs_trace(ctx.mul(v, y)) as u8)
                .collect();
            let w = fwht_signs(&tt);
            let max = w.iter().map(|x| x.abs()).max().unwrap();
            (plateau_level_of(&w, k), max)
        })
        .collect();

    let mut profile = SpectrumProfile {
        bent_count: 0,
        levels: BTreeMap::new(),
        max_abs_walsh: 0,
        all_plateaued: true,
        non_plateaued: 0,
    };
    for (level, max) in per_component {
        profile.max_abs_walsh = profile.max_abs_walsh.max(max);
        match level {
            Some(0) => profile.bent_count += 1,
            Some(s) => *profile.levels.entry(s).or_insert(0) += 1,
            None => {
                profile.all_plateaued = false;
                profile.non_plateaued += 1;
            }
        }
    }
    debug_assert_eq!(
        profile.bent_count + profile.levels.values().sum::<u64>() + profile.non_plateaued,
        (1u64 << k) - 1
    );
    if profile.all_plateaued {
        debug_assert!(profile.levels.keys().all(|&i| i % 2 == k % 2));
    }
    profile
}

/// 2^(k-1) - max |W_F(u,v)| / 2 over nonzero v.
pub fn nonlinearity(fv: &VectorialFn, ctx: &FieldCtx) -> i64 {
    let max = spectrum_profile(fv, ctx).max_abs_walsh;
    (1i64 << (fv.k - 1)) - max / 2
}

/// Largest squared Walsh value of f.
pub fn max_walsh_square(f: &BoolFn) -> i64 {
    fwht_signs(&f.tt).iter().map(|&x| x * x).max().unwrap_or(0)
}

/// Sum-of-square indicator nu(f) = 2^-k sum_u W_f(u)^4.
pub fn sum_of_square(f: &BoolFn) -> i64 {
    let w = fwht_signs(&f.tt);
    let total: i64 = w.iter().map(|&x| x * x * x * x).sum();
    debug_assert_eq!(total % (1i64 << f.k), 0);
    total >> f.k
}

/// Bent census of a vectorial function on GF(2^k), k even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BentCensus {
    pub count: u64,
    /// Nonzero v whose component is not bent, ascending.
    pub nonbent: Vec<Elem>,
    /// True when the count is maximal and the non-bent set plus zero was
    /// verified closed under addition.
    pub subspace_verified: bool,
}

/// Counts bent components; at the maximal count 2^k - 2^(k/2) the non-bent
/// set united with zero is verified to be an (k/2)-dimensional subspace.
pub fn bent_census(fv: &VectorialFn, ctx: &FieldCtx) -> Result<BentCensus> {
    let k = fv.k;
    assert!(k.is_multiple_of(2), "bent census needs an even dimension");
    let nonbent: Vec<Elem> = (1..1u32 << k)
        .into_par_iter()
        .filter(|&v| {
            let tt: Vec<u8> = fv
                .table
                .iter()
                .map(|&y| ctx.abs_trace(ctx.mul(v, y)) as u8)
                .collect();
            plateau_level_of(&fwht_signs(&tt), k) != Some(0)
        })
        .collect();
    let count = ((1u64 << k) - 1) - nonbent.len() as u64;
    let maximal = count == (1u64 << k) - (1u64 << (k / 2));
    let mut subspace_verified = false;
    if maximal {
        let set: std::collections::BTreeSet<Elem> = nonbent.iter().copied().collect();
        for &a in &nonbent {
            for &b in &nonbent {
                let s = a ^ b;
                if s != 0 && !set.contains(&s) {
                    return Err(Error::SubspaceClosure);
                }
            }
        }
        subspace_verified = true;
    }
    Ok(BentCensus {
        count,
        nonbent,
        subspace_verified,
    })
}
