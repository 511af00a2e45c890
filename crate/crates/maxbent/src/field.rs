//! Exact arithmetic in GF(2^k), k <= 16, in a polynomial basis.
//!
//! Elements are k-bit integers, bit i holding the coefficient of x^i.
//! Every context fixes the lexicographically smallest primitive modulus of
//! its degree and the smallest full-order generator, so results are
//! reproducible bit for bit; both conventions are echoed in report headers.

use crate::error::{Error, Result};

pub type Elem = u32;

/// Carry-less product of `a` and `b` reduced modulo `modulus` (degree `k`).
///
/// Table-free; used during context construction and by the tests as an
/// independent oracle for the table-driven multiply.
pub fn clmul_reduce(a: Elem, b: Elem, modulus: u32, k: u32) -> Elem {
    let mut acc: u64 = 0;
    let a = a as u64;
    for j in 0..32 {
        if (b >> j) & 1 == 1 {
            acc ^= a << j;
        }
    }
    for i in (k..64).rev() {
        if (acc >> i) & 1 == 1 {
            acc ^= (modulus as u64) << (i - k);
        }
    }
    acc as Elem
}

fn poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

/// Remainder of polynomial division over GF(2).
fn poly_mod(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial-division irreducibility test for degree-k candidates, k <= 16.
fn is_irreducible(p: u64, k: u32) -> bool {
    if p & 1 == 0 {
        return false; // divisible by x
    }
    if (p.count_ones() & 1) == 0 {
        return false; // p(1) = 0, divisible by x + 1
    }
    for d in 2..=k / 2 {
        for low in 0..1u64 << d {
            let q = (1u64 << d) | low;
            if poly_mod(p, q) == 0 {
                return false;
            }
        }
    }
    k >= 1
}

/// Multiplicative order of `a` by stepping; `a` must be nonzero.
fn order_by_stepping(a: Elem, modulus: u32, k: u32) -> u64 {
    let mut acc = a;
    let mut ord = 1u64;
    while acc != 1 {
        acc = clmul_reduce(acc, a, modulus, k);
        ord += 1;
        debug_assert!(ord <= (1u64 << k));
    }
    ord
}

fn is_primitive(p: u64, k: u32) -> bool {
    is_irreducible(p, k) && order_by_stepping(2, p as u32, k) == (1u64 << k) - 1
}

/// Smallest primitive polynomial of degree k, as a (k+1)-bit mask.
pub fn canonical_modulus(k: u32) -> u32 {
    assert!((1..=16).contains(&k), "only degrees 1..=16 are supported");
    if k == 1 {
        return 0b11; // x + 1; GF(2) itself
    }
    for low in 0..1u64 << k {
        let p = (1u64 << k) | low;
        if is_primitive(p, k) {
            return p as u32;
        }
    }
    unreachable!("a primitive polynomial exists for every degree")
}

/// A finite field GF(2^k) with log/antilog tables and trace machinery.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    k: u32,
    modulus: u32,
    generator: Elem,
    log: Vec<u32>,
    antilog: Vec<Elem>,
    trace_mask: u32,
    dual_mask: Vec<u32>,
}

impl FieldCtx {
    /// Field under the canonical (lexicographically smallest primitive) modulus.
    pub fn new(k: u32) -> FieldCtx {
        Self::with_modulus(k, canonical_modulus(k)).expect("canonical modulus is primitive")
    }

    /// Field under an explicit modulus, which must be primitive of degree k.
    pub fn with_modulus(k: u32, modulus: u32) -> Result<FieldCtx> {
        if !(2..=16).contains(&k) {
            return Err(Error::BadModulus {
                k,
                modulus,
                reason: "degree out of range 2..=16",
            });
        }
        if modulus >> k != 1 {
            return Err(Error::BadModulus {
                k,
                modulus,
                reason: "wrong degree",
            });
        }
        if !is_irreducible(modulus as u64, k) {
            return Err(Error::BadModulus {
                k,
                modulus,
                reason: "not irreducible",
            });
        }
        let order = (1u64 << k) - 1;
        if order_by_stepping(2, modulus, k) != order {
            return Err(Error::BadModulus {
                k,
                modulus,
                reason: "not primitive",
            });
        }

        // Smallest element of full multiplicative order. With a primitive
        // modulus that is always x itself, but the search keeps the
        // convention honest under any accepted modulus.
        let mut generator = 0;
        for g in 2..1u32 << k {
            if order_by_stepping(g, modulus, k) == order {
                generator = g;
                break;
            }
        }
        debug_assert_ne!(generator, 0);

        let size = 1usize << k;
        let mut antilog = vec![0 as Elem; size - 1];
        let mut log = vec![u32::MAX; size];
        let mut acc: Elem = 1;
        for (i, slot) in antilog.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = clmul_reduce(acc, generator, modulus, k);
        }
        debug_assert_eq!(acc, 1);

        let mut ctx = FieldCtx {
            k,
            modulus,
            generator,
            log,
            antilog,
            trace_mask: 0,
            dual_mask: Vec::new(),
        };

        let mut trace_mask = 0u32;
        for i in 0..k {
            if ctx.trace_by_squaring(1 << i) == 1 {
                trace_mask |= 1 << i;
            }
        }
        ctx.trace_mask = trace_mask;

        // dual_mask[u] has bit i = Tr(u * x^i); it linearizes the trace
        // inner product onto the bitwise dot product.
        let mut single = vec![0u32; k as usize];
        for (j, slot) in single.iter_mut().enumerate() {
            let mut mask = 0u32;
            for i in 0..k {
                if ctx.abs_trace(ctx.mul(1 << j, 1 << i)) == 1 {
                    mask |= 1 << i;
                }
            }
            *slot = mask;
        }
        let mut dual_mask = vec![0u32; size];
        for u in 1..size {
            let top = 31 - (u as u32).leading_zeros();
            dual_mask[u] = dual_mask[u & !(1 << top)] ^ single[top as usize];
        }
        ctx.dual_mask = dual_mask;
        Ok(ctx)
    }

    fn trace_by_squaring(&self, a: Elem) -> u32 {
        let mut acc = a;
        let mut s = a;
        for _ in 1..self.k {
            s = self.mul(s, s);
            acc ^= s;
        }
        debug_assert!(acc <= 1);
        acc
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// 2^k, the number of field elements.
    pub fn size(&self) -> usize {
        1usize << self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = (1u64 << self.k) - 1;
        let idx = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order;
        self.antilog[idx as usize]
    }

    /// a^e, with a^0 = 1 for every a.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (1u64 << self.k) - 1;
        let idx = (self.log[a as usize] as u64 * (e % order)) % order;
        self.antilog[idx as usize]
    }

    /// Frobenius power a^(2^j).
    pub fn frob(&self, a: Elem, j: u32) -> Elem {
        if a == 0 {
            return 0;
        }
        let order = (1u64 << self.k) - 1;
        let shift = (j % self.k) as u64;
        let idx = ((self.log[a as usize] as u64) << shift) % order;
        self.antilog[idx as usize]
    }

    /// Absolute trace to GF(2), returned as 0 or 1.
    pub fn abs_trace(&self, a: Elem) -> u32 {
        (a & self.trace_mask).count_ones() & 1
    }

    /// Mask m(u) with Tr(u*x) = popcount(m(u) & x) mod 2 for all x.
    pub fn dual_mask(&self, u: Elem) -> u32 {
        self.dual_mask[u as usize]
    }

    /// Discrete log of a nonzero element to the generator base.
    pub fn log_of(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize])
        }
    }

    pub fn exp_g(&self, i: u64) -> Elem {
        let order = (1u64 << self.k) - 1;
        self.antilog[(i % order) as usize]
    }

    /// Renders an element as a generator power: "0", "1", "g", "g^5".
    pub fn render_gpow(&self, a: Elem) -> String {
        match self.log_of(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(1) => "g".to_string(),
            Some(e) => format!("g^{e}"),
        }
    }
}

/// The pair GF(2^m) inside GF(2^n), n = 2m, with the embedding table and
/// the relative trace.
#[derive(Debug)]
pub struct TowerCtx {
    base: FieldCtx,
    ext: FieldCtx,
    root: Elem,
    embed_tab: Vec<Elem>,
    unembed_tab: Vec<Elem>,
}

const NOT_IN_SUBFIELD: Elem = Elem::MAX;

impl TowerCtx {
    pub fn new(m: u32) -> TowerCtx {
        Self::with_moduli(m, canonical_modulus(m), canonical_modulus(2 * m))
            .expect("canonical moduli are primitive")
    }

    pub fn with_moduli(m: u32, base_modulus: u32, ext_modulus: u32) -> Result<TowerCtx> {
        let base = FieldCtx::with_modulus(m, base_modulus)?;
        let ext = FieldCtx::with_modulus(2 * m, ext_modulus)?;

        // Smallest root of the base modulus inside the extension; evaluating
        // polynomial coordinates at that root is then a field embedding.
        let mut root = 0;
        for cand in 1..ext.size() as Elem {
            let mut val = 0;
            for i in 0..=m {
                if (base_modulus >> i) & 1 == 1 {
                    val ^= ext.pow(cand, i as u64);
                }
            }
            if val == 0 {
                root = cand;
                break;
            }
        }
        debug_assert_ne!(root, 0, "the base modulus splits in the extension");

        let mut rho_pow = vec![1 as Elem; m as usize];
        for i in 1..m as usize {
            rho_pow[i] = ext.mul(rho_pow[i - 1], root);
        }
        let mut embed_tab = vec![0 as Elem; base.size()];
        for a in 1..base.size() {
            let top = 31 - (a as u32).leading_zeros();
            embed_tab[a] = embed_tab[a & !(1 << top)] ^ rho_pow[top as usize];
        }
        let mut unembed_tab = vec![NOT_IN_SUBFIELD; ext.size()];
        for (a, &y) in embed_tab.iter().enumerate() {
            if unembed_tab[y as usize] != NOT_IN_SUBFIELD {
                return Err(Error::ReductionMismatch(
                    "embedding is not injective".into(),
                ));
            }
            unembed_tab[y as usize] = a as Elem;
        }

        let t = TowerCtx {
            base,
            ext,
            root,
            embed_tab,
            unembed_tab,
        };
        // Multiplicativity spot-check; the exhaustive test lives in the suite.
        debug_assert!({
            let g = t.base.generator();
            t.embed(t.base.mul(g, g)) == t.ext.mul(t.embed(g), t.embed(g))
        });
        Ok(t)
    }

    pub fn m(&self) -> u32 {
        self.base.k
    }

    pub fn n(&self) -> u32 {
        self.ext.k
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    /// The chosen root of the base modulus in the extension field.
    pub fn embed_root(&self) -> Elem {
        self.root
    }

    pub fn embed(&self, a: Elem) -> Elem {
        self.embed_tab[a as usize]
    }

    /// Base-field encoding of an embedded element, None outside the subfield.
    pub fn unembed(&self, y: Elem) -> Option<Elem> {
        let v = self.unembed_tab[y as usize];
        (v != NOT_IN_SUBFIELD).then_some(v)
    }

    pub fn in_subfield(&self, y: Elem) -> bool {
        self.unembed_tab[y as usize] != NOT_IN_SUBFIELD
    }

    /// Relative trace y + y^(2^m); the result lies in the embedded subfield.
    pub fn rel_trace(&self, y: Elem) -> Elem {
        y ^ self.ext.frob(y, self.m())
    }

    /// Relative trace mapped back to its base-field encoding.
    pub fn rel_trace_base(&self, y: Elem) -> Elem {
        self.unembed(self.rel_trace(y))
            .expect("relative trace lands in the subfield")
    }
}
