//! Linearized polynomials L(x) = sum c_i x^(2^i) over GF(2^m): evaluation,
//! permutation testing, normalization and exhaustive enumeration of the
//! normalized linearized permutations.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, TowerCtx};

/// Coefficient vector (c_0, ..., c_{m-1}) of sum c_i x^(2^i) over GF(2^m);
/// exponents are reduced modulo x^(2^m) - x, so the length is exactly m.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearizedPoly {
    m: u32,
    coeffs: Vec<Elem>,
}

impl LinearizedPoly {
    pub fn new(m: u32, coeffs: Vec<Elem>) -> LinearizedPoly {
        assert_eq!(
            coeffs.len(),
            m as usize,
            "coefficient vector must have length m"
        );
        assert!(coeffs.iter().all(|&c| c < (1 << m)));
        LinearizedPoly { m, coeffs }
    }

    /// The identity polynomial x.
    pub fn identity(m: u32) -> LinearizedPoly {
        Self::monomial(m, 0)
    }

    /// The monomial x^(2^i).
    pub fn monomial(m: u32, i: u32) -> LinearizedPoly {
        let mut coeffs = vec![0; m as usize];
        coeffs[(i % m) as usize] = 1;
        LinearizedPoly { m, coeffs }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Index of the highest nonzero coefficient, None for the zero polynomial.
    pub fn degree_index(&self) -> Option<u32> {
        (0..self.m).rev().find(|&i| self.coeffs[i as usize] != 0)
    }

    /// Polynomial degree 2^t, used for curve-degree bounds.
    pub fn poly_degree(&self) -> u64 {
        self.degree_index().map_or(0, |t| 1u64 << t)
    }

    /// Normalized means the highest nonzero coefficient equals 1.
    pub fn is_normalized(&self) -> bool {
        self.degree_index()
            .is_some_and(|t| self.coeffs[t as usize] == 1)
    }

    pub fn eval_base(&self, ctx: &FieldCtx, a: Elem) -> Elem {
        debug_assert_eq!(ctx.k(), self.m);
        let mut acc = 0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                acc ^= ctx.mul(c, ctx.frob(a, i as u32));
            }
        }
        acc
    }

    /// Evaluation over GF(2^n) with the coefficients embedded first.
    pub fn eval_ext(&self, t: &TowerCtx, a: Elem) -> Elem {
        debug_assert_eq!(t.m(), self.m);
        let mut acc = 0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                acc ^= t.ext().mul(t.embed(c), t.ext().frob(a, i as u32));
            }
        }
        acc
    }

    /// Matrix of the GF(2)-linear map x -> L(x) in the polynomial basis,
    /// one u32 per basis image.
    pub fn to_matrix(&self, ctx: &FieldCtx) -> Vec<u32> {
        (0..self.m).map(|j| self.eval_base(ctx, 1 << j)).collect()
    }

    pub fn is_permutation(&self, ctx: &FieldCtx) -> bool {
        let mut rows = self.to_matrix(ctx);
        rank_gf2(&mut rows) == self.m
    }

    /// Renders in the gamma-power notation, highest degree first, e.g.
    /// "g^52*x^32 + g^40*x^16 + x^2"; the identity renders as "x".
    pub fn render(&self, ctx: &FieldCtx) -> String {
        let mut parts = Vec::new();
        for i in (0..self.m).rev() {
            let c = self.coeffs[i as usize];
            if c == 0 {
                continue;
            }
            let xpow = if i == 0 {
                "x".to_string()
            } else {
                format!("x^{}", 1u64 << i)
            };
            if c == 1 {
                parts.push(xpow);
            } else {
                parts.push(format!("{}*{}", ctx.render_gpow(c), xpow));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Parses "coeff:index" pairs separated by commas, e.g.
    /// "g^52:5,g^40:4,1:0" or "0x2a:3"; index i selects the x^(2^i) term.
    pub fn parse(m: u32, s: &str, ctx: &FieldCtx) -> Result<LinearizedPoly> {
        let mut coeffs = vec![0 as Elem; m as usize];
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let (c_str, i_str) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected coeff:index, got {tok:?}")))?;
            let idx: u32 = i_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad term index {i_str:?}")))?;
            if idx >= m {
                return Err(Error::Parse(format!(
                    "term index {idx} out of range for m = {m}"
                )));
            }
            let c = parse_elem(c_str.trim(), ctx)?;
            coeffs[idx as usize] ^= c;
        }
        Ok(LinearizedPoly::new(m, coeffs))
    }
}

/// Parses an element as a generator power ("g^52", "g", "1", "0"),
/// hex ("0x2a") or decimal.
pub fn parse_elem(s: &str, ctx: &FieldCtx) -> Result<Elem> {
    let v = if let Some(e_str) = s.strip_prefix("g^") {
        let e: u64 = e_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {e_str:?}")))?;
        ctx.exp_g(e)
    } else if s == "g" {
        ctx.generator()
    } else if let Some(h) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u32::from_str_radix(h, 16).map_err(|_| Error::Parse(format!("bad hex {s:?}")))?
    } else {
        s.parse()
            .map_err(|_| Error::Parse(format!("bad element {s:?}")))?
    };
    if v >= (1 << ctx.k()) {
        return Err(Error::Parse(format!(
            "element {s:?} out of range for GF(2^{})",
            ctx.k()
        )));
    }
    Ok(v)
}

/// Rank of a set of GF(2) row vectors, destructively.
pub fn rank_gf2(rows: &mut [u32]) -> u32 {
    let mut rank = 0usize;
    for bit in (0..32).rev() {
        let Some(pivot) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && (*row >> bit) & 1 == 1 {
                *row ^= p;
            }
        }
        rank += 1;
    }
    rank as u32
}

/// |GL(m,2)|, the number of linearized permutations of GF(2^m).
pub fn gl_order(m: u32) -> u64 {
    let size = 1u64 << m;
    (0..m).map(|i| size - (1 << i)).product()
}

/// Expected number of normalized linearized permutations,
/// |GL(m,2)| / (2^m - 1): each scalar orbit contains exactly one monic member.
pub fn normalized_permutation_count(m: u32) -> u64 {
    gl_order(m) / ((1 << m) - 1)
}

/// Number of normalized candidates (monic leading term, free lower terms).
pub fn candidate_count(m: u32) -> u64 {
    (0..m).map(|t| 1u64 << (m * t)).sum()
}

/// The idx-th normalized candidate in the enumeration order: leading degree
/// index ascending, then the tuple (c_0, ..., c_{t-1}) lexicographically.
pub fn candidate(m: u32, idx: u64) -> LinearizedPoly {
    let mut base = 0u64;
    for t in 0..m {
        let block = 1u64 << (m * t);
        if idx < base + block {
            let mut combo = idx - base;
            let mut coeffs = vec![0 as Elem; m as usize];
            coeffs[t as usize] = 1;
            for i in (0..t).rev() {
                coeffs[i as usize] = (combo & ((1 << m) - 1)) as Elem;
                combo >>= m;
            }
            debug_assert_eq!(combo, 0);
            return LinearizedPoly { m, coeffs };
        }
        base += block;
    }
    panic!("candidate index {idx} out of range for m = {m}");
}

/// Deterministic stream of every normalized linearized permutation of
/// GF(2^m), each exactly once, in candidate order.
pub struct NormalizedPermutations<'a> {
    ctx: &'a FieldCtx,
    next: u64,
    total: u64,
}

impl<'a> NormalizedPermutations<'a> {
    pub fn new(ctx: &'a FieldCtx) -> NormalizedPermutations<'a> {
        NormalizedPermutations {
            ctx,
            next: 0,
            total: candidate_count(ctx.k()),
        }
    }
}

impl Iterator for NormalizedPermutations<'_> {
    type Item = LinearizedPoly;

    fn next(&mut self) -> Option<LinearizedPoly> {
        while self.next < self.total {
            let cand = candidate(self.ctx.k(), self.next);
            self.next += 1;
            if cand.is_permutation(self.ctx) {
                return Some(cand);
            }
        }
        None
    }
}
