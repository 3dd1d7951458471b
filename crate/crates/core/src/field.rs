//! Finite fields `F_p` and `F_{p^m}` in polynomial basis.
//!
//! An element is stored as the base-`p` integer `c0 + c1 p + ... + c_{m-1} p^{m-1}`
//! of its coefficient vector over the basis `1, x, ..., x^{m-1}`. That integer
//! is also the canonical enumeration order of the field, which the
//! interpolation and embedding code rely on.
//!
//! Fields of order at most 2^16 use log/antilog tables for multiplication.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

const TABLE_LIMIT: u64 = 1 << 16;
const ORDER_LIMIT: u128 = 1 << 62;

/// An element of some [`FieldCtx`]. Carries no reference to its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Position of this element in the field's canonical enumeration.
    #[inline]
    pub fn index(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow(u64),
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldCtx {
    p: u64,
    m: u32,
    modulus: Vec<u64>,
    order: u64,
    tables: Option<LogTables>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({})", self)
    }
}

impl fmt::Display for FieldCtx {
    /// Writes the field spec string, always with the explicit modulus for
    /// extension fields so the output can be parsed back unambiguously.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "gf:{}", self.p)
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(u64::to_string).collect();
            write!(f, "gf:{}^{}:{}", self.p, self.m, coeffs.join(","))
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// Builds `F_{p^m}`. Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree `m` is used (coefficients compared
    /// low-to-high, so `c0` is the most significant).
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::FieldTooLarge { p, m });
        }
        if m < 1 {
            return Err(Error::BadDegree(m));
        }
        let order = (p as u128).checked_pow(m).filter(|&q| q <= ORDER_LIMIT);
        let Some(order) = order else {
            return Err(Error::FieldTooLarge { p, m });
        };
        let order = order as u64;
        let modulus = match modulus {
            Some(given) => {
                let reduced: Vec<u64> = given.iter().map(|&c| c % p).collect();
                if given.len() != m as usize + 1
                    || given.iter().any(|&c| c >= p)
                    || reduced[m as usize] != 1
                {
                    return Err(Error::NotMonic(given.to_vec()));
                }
                if !fp::is_irreducible(&reduced, p) {
                    return Err(Error::Reducible(given.to_vec()));
                }
                reduced
            }
            None => default_modulus(p, m),
        };
        let mut ctx = FieldCtx {
            p,
            m,
            modulus,
            order,
            tables: None,
        };
        if m > 1 && order <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(Arc::new(ctx))
    }

    pub fn prime(p: u64) -> Result<Arc<Self>> {
        Self::new(p, 1, None)
    }

    /// Parses `gf:p`, `gf:p^m` or `gf:p^m:c0,c1,...,cm`.
    pub fn from_spec(spec: &str) -> Result<Arc<Self>> {
        let bad = |msg: &str| Error::FieldSpec(spec.to_string(), msg.to_string());
        let body = spec
            .trim()
            .strip_prefix("gf:")
            .ok_or_else(|| bad("expected prefix `gf:`"))?;
        let (size, modulus) = match body.split_once(':') {
            Some((s, m)) => (s, Some(m)),
            None => (body, None),
        };
        let (p, m) = match size.split_once('^') {
            Some((p, m)) => (p, m.parse::<u32>().map_err(|_| bad("bad exponent"))?),
            None => (size, 1),
        };
        let p = p.parse::<u64>().map_err(|_| bad("bad characteristic"))?;
        let modulus = modulus
            .map(|s| {
                s.split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad("bad modulus coefficient")))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Self::new(p, m, modulus.as_deref())
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Modulus coefficients, low to high, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// The `i`-th element in canonical order.
    pub fn elem(&self, i: u64) -> Result<FieldElem> {
        if i < self.order {
            Ok(FieldElem(i))
        } else {
            Err(Error::ForeignElement(i))
        }
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(FieldElem)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p as i64) as u64)
    }

    /// Element with the given polynomial-basis coefficients (low to high).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ElementSyntax(
                format!("{coeffs:?}"),
                format!("needs at most {} coefficients below {}", self.m, self.p),
            ));
        }
        Ok(FieldElem(self.pack(coeffs)))
    }

    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        self.unpack(a.0)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(0..self.order))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(1..self.order))
    }

    fn pack(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    fn unpack(&self, mut v: u64) -> Vec<u64> {
        let mut out = vec![0; self.m as usize];
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.m == 1 {
            let s = a.0 + b.0;
            return FieldElem(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut place, mut out) = (a.0, b.0, 1u64, 0u64);
        while x != 0 || y != 0 {
            let mut s = x % self.p + y % self.p;
            if s >= self.p {
                s -= self.p;
            }
            out += s * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElem(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return FieldElem(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let (mut x, mut place, mut out) = (a.0, 1u64, 0u64);
        while x != 0 {
            let d = x % self.p;
            if d != 0 {
                out += (self.p - d) * place;
            }
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElem(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        if self.m == 1 {
            return FieldElem(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64);
        }
        if let Some(t) = &self.tables {
            let s = t.log[a.0 as usize] + t.log[b.0 as usize];
            return FieldElem(t.exp[s as usize] as u64);
        }
        self.poly_mul(a, b)
    }

    fn poly_mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let m = self.m as usize;
        let p = self.p as u128;
        let (x, y) = (self.unpack(a.0), self.unpack(b.0));
        let mut prod = vec![0u128; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u128 * yj as u128) % p;
            }
        }
        for deg in (m..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &mc) in self.modulus[..m].iter().enumerate() {
                let t = deg - m + i;
                prod[t] = (prod[t] + (p - c) * mc as u128) % p;
            }
        }
        let low: Vec<u64> = prod[..m].iter().map(|&c| c as u64).collect();
        FieldElem(self.pack(&low))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        if let Some(t) = &self.tables {
            if a.0 == 0 {
                return if e == 0 { FieldElem::ONE } else { FieldElem::ZERO };
            }
            let l = (t.log[a.0 as usize] as u128 * e as u128) % (self.order - 1) as u128;
            return FieldElem(t.exp[l as usize] as u64);
        }
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: FieldElem) -> FieldElem {
        debug_assert!(!a.is_zero());
        if self.m == 1 {
            return FieldElem(mod_inverse(a.0, self.p));
        }
        if let Some(t) = &self.tables {
            let l = (self.order - 1) as u32 - t.log[a.0 as usize];
            return FieldElem(t.exp[l as usize] as u64);
        }
        self.pow(a, self.order - 2)
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Checked arithmetic entry point; `b` is ignored for unary operations.
    pub fn apply(&self, op: FieldOp, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        for x in [a, b] {
            if !self.contains(x) {
                return Err(Error::ForeignElement(x.0));
            }
        }
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Div => self.div(a, b)?,
            FieldOp::Inv => self.inv(a)?,
            FieldOp::Pow(e) => self.pow(a, e),
        })
    }

    /// Formats an element: an integer for prime fields, otherwise the
    /// comma-separated coefficient list.
    pub fn format_elem(&self, a: FieldElem) -> String {
        if self.m == 1 {
            a.0.to_string()
        } else {
            let c: Vec<String> = self.unpack(a.0).iter().map(u64::to_string).collect();
            c.join(",")
        }
    }

    /// Inverse of [`format_elem`](Self::format_elem). Prime fields also accept
    /// negative integers.
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        let bad = |msg: &str| Error::ElementSyntax(s.to_string(), msg.to_string());
        if self.m == 1 || !s.contains(',') {
            let v: i128 = s.parse().map_err(|_| bad("expected an integer"))?;
            return Ok(FieldElem(v.rem_euclid(self.p as i128) as u64));
        }
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i128>()
                    .map(|v| v.rem_euclid(self.p as i128) as u64)
                    .map_err(|_| bad("expected comma-separated integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
    }

    fn build_tables(&self) -> LogTables {
        let q = self.order;
        let factors = prime_factors(q - 1);
        let one = FieldElem::ONE;
        // x (index p) is tried first; it is primitive for most default moduli
        let candidates = std::iter::once(self.p).chain((2..q).filter(|&i| i != self.p));
        let gen = candidates
            .map(FieldElem)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, (q - 1) / r) != one))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = one;
        for i in 0..(q - 1) as usize {
            exp[i] = cur.0 as u32;
            exp[i + q as usize - 1] = cur.0 as u32;
            log[cur.0 as usize] = i as u32;
            cur = self.poly_mul(cur, gen);
        }
        LogTables { exp, log }
    }

    fn pow_slow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            base = self.poly_mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates a polynomial with prime-subfield coefficients (low to high)
    /// at `a`.
    fn eval_prime_poly(&self, coeffs: &[u64], a: FieldElem) -> FieldElem {
        coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| self.add(self.mul(acc, a), FieldElem(c)))
    }

    /// Smallest extension of `base` with at least `min_order` elements; `base`
    /// itself when it is already large enough, otherwise a field with the
    /// default modulus.
    pub fn extension_with_order(base: &Arc<FieldCtx>, min_order: u128) -> Result<Arc<FieldCtx>> {
        if base.order as u128 >= min_order {
            return Ok(base.clone());
        }
        let this = base.as_ref();
        let mut t = 1u32;
        loop {
            let q = (this.order as u128).checked_pow(t);
            match q {
                Some(q) if q >= min_order => break,
                Some(q) if q <= ORDER_LIMIT => t += 1,
                _ => {
                    return Err(Error::FieldTooLarge {
                        p: this.p,
                        m: this.m * t,
                    })
                }
            }
        }
        FieldCtx::new(this.p, this.m * t, None)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i128) as u64
}

fn default_modulus(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    let m = m as usize;
    // enumerate (c0, ..., c_{m-1}) lexicographically with c0 most significant
    let mut digits = vec![0u64; m];
    loop {
        let mut cand = digits.clone();
        cand.push(1);
        if cand[0] != 0 && fp::is_irreducible(&cand, p) {
            return cand;
        }
        let mut i = m;
        loop {
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            assert!(i > 0, "irreducible polynomials exist in every degree");
        }
    }
}

/// Dense polynomials over `F_p` as residue vectors, used only for
/// irreducibility testing.
mod fp {
    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let pp = p as u128;
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % pp) as u64;
            }
        }
        rem(prod, f, p)
    }

    fn rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
        trim(&mut a);
        let df = f.len() - 1;
        let lead_inv = super::mod_inverse(f[df], p) as u128;
        let pp = p as u128;
        while a.len() > df {
            let top = a.len() - 1;
            let c = (a[top] as u128 * lead_inv) % pp;
            for (i, &fc) in f.iter().enumerate() {
                let t = top - df + i;
                a[t] = ((a[t] as u128 + (pp - c) * fc as u128) % pp) as u64;
            }
            trim(&mut a);
        }
        a
    }

    fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base.to_vec(), f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, f, p);
            }
            b = mulmod(&b, &b, f, p);
            e >>= 1;
        }
        acc
    }

    /// Ben-Or: a monic `f` of degree `d` is irreducible iff
    /// `gcd(x^{p^i} - x, f) = 1` for `1 <= i <= d/2`.
    pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
        let d = f.len() - 1;
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        let mut h = x.clone();
        for _ in 0..d / 2 {
            h = powmod(&h, p, f, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(f.to_vec(), diff, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }

}

/// Ring embedding of a field into an extension of it.
#[derive(Clone)]
pub struct Embedding {
    src: Arc<FieldCtx>,
    dst: Arc<FieldCtx>,
    /// Images of `1, y, ..., y^{m-1}` where `y` generates `src`.
    basis_images: Vec<FieldElem>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Embedding")
            .field("src", &self.src)
            .field("dst", &self.dst)
            .field("root", &self.root())
            .finish()
    }
}

impl Embedding {
    /// Sends the generator of `src` to the smallest root (in canonical order)
    /// of `src`'s modulus inside `dst`.
    pub fn new(src: &Arc<FieldCtx>, dst: &Arc<FieldCtx>) -> Result<Self> {
        if src.p != dst.p || !dst.m.is_multiple_of(src.m) {
            return Err(Error::NotAnExtension {
                src: src.to_string(),
                dst: dst.to_string(),
            });
        }
        let root = if src.m == 1 {
            FieldElem::ZERO
        } else {
            dst.elements()
                .find(|&r| dst.eval_prime_poly(&src.modulus, r).is_zero())
                .ok_or(Error::NoEmbedding)?
        };
        let mut basis_images = Vec::with_capacity(src.m as usize);
        let mut cur = FieldElem::ONE;
        for _ in 0..src.m {
            basis_images.push(cur);
            cur = dst.mul(cur, root);
        }
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            basis_images,
        })
    }

    pub fn source(&self) -> &Arc<FieldCtx> {
        &self.src
    }

    pub fn target(&self) -> &Arc<FieldCtx> {
        &self.dst
    }

    /// Image of the source generator.
    pub fn root(&self) -> FieldElem {
        self.basis_images.get(1).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn apply(&self, a: FieldElem) -> FieldElem {
        if self.src.m == 1 {
            // prime subfield elements share their encoding
            return a;
        }
        let mut acc = FieldElem::ZERO;
        for (c, &img) in self.src.coeffs(a).into_iter().zip(&self.basis_images) {
            if c != 0 {
                acc = self.dst.add(acc, self.dst.mul(FieldElem(c), img));
            }
        }
        acc
    }

    /// The source element mapping to `b`, if `b` lies in the image.
    pub fn preimage(&self, b: FieldElem) -> Option<FieldElem> {
        let p = self.src.p;
        if self.src.m == 1 {
            return (b.0 < p).then_some(b);
        }
        // solve sum_i c_i * basis_images[i] = b over F_p, coordinatewise
        let rows = self.dst.m as usize;
        let cols = self.src.m as usize;
        let img_coeffs: Vec<Vec<u64>> =
            self.basis_images.iter().map(|&e| self.dst.coeffs(e)).collect();
        let target = self.dst.coeffs(b);
        let mut aug: Vec<Vec<u64>> = (0..rows)
            .map(|r| {
                let mut row: Vec<u64> = (0..cols).map(|c| img_coeffs[c][r]).collect();
                row.push(target[r]);
                row
            })
            .collect();
        let mulp = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| aug[r][col] != 0) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = mod_inverse(aug[pivot_row][col], p);
            for v in aug[pivot_row].iter_mut() {
                *v = mulp(*v, inv);
            }
            for r2 in 0..rows {
                if r2 != pivot_row && aug[r2][col] != 0 {
                    let f = aug[r2][col];
                    let pivot = aug[pivot_row].clone();
                    for (v, &pv) in aug[r2].iter_mut().zip(&pivot) {
                        *v = (*v + p - mulp(f, pv)) % p;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if aug[pivot_row..].iter().any(|row| row[cols] != 0) {
            return None;
        }
        let mut sol = vec![0u64; cols];
        for (r, &c) in pivots.iter().enumerate() {
            sol[c] = aug[r][cols];
        }
        Some(FieldElem(self.src.pack(&sol)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_basics() {
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f5.order(), 5);
        assert_eq!(f5.modulus(), &[0, 1]);
        assert_eq!(f5.inv(FieldElem(2)).unwrap(), FieldElem(3));
        // e = 3f scaling used by the idempotent example
        assert_eq!(f5.mul(f5.from_int(3), FieldElem::ONE), FieldElem(3));
        assert_eq!(f5.from_int(-1), FieldElem(4));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FieldCtx::new(4, 1, None), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::new(2, 0, None), Err(Error::BadDegree(0))));
        assert!(matches!(
            FieldCtx::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::Reducible(_))
        ));
        assert!(matches!(
            FieldCtx::new(2, 2, Some(&[1, 1, 0])),
            Err(Error::NotMonic(_))
        ));
        let f5 = FieldCtx::prime(5).unwrap();
        assert!(matches!(f5.inv(FieldElem::ZERO), Err(Error::DivisionByZero)));
        assert!(matches!(
            f5.apply(FieldOp::Add, FieldElem(7), FieldElem::ONE),
            Err(Error::ForeignElement(7))
        ));
    }

    #[test]
    fn f8_with_explicit_modulus() {
        let f8 = FieldCtx::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        assert_eq!(f8.order(), 8);
        let x = f8.from_coeffs(&[0, 1]).unwrap();
        let x2 = f8.from_coeffs(&[0, 0, 1]).unwrap();
        // x^3 = 1 + x
        assert_eq!(f8.coeffs(f8.mul(x, x2)), vec![1, 1, 0]);
    }

    #[test]
    fn default_moduli_are_lex_smallest() {
        assert_eq!(FieldCtx::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        // 1 + x^3 factors, 1 + x^2 + x^3 comes next in lex order
        assert_eq!(FieldCtx::new(2, 3, None).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FieldCtx::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn spec_strings() {
        let f = FieldCtx::from_spec("gf:2^3:1,1,0,1").unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldCtx::from_spec(&f.to_string()).unwrap(), f);
        assert_eq!(FieldCtx::from_spec("gf:7").unwrap().order(), 7);
        assert_eq!(FieldCtx::from_spec("gf:3^2").unwrap().order(), 9);
        assert!(matches!(FieldCtx::from_spec("gf:4"), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::from_spec("f:5"), Err(Error::FieldSpec(..))));
        assert!(matches!(FieldCtx::from_spec("gf:2^x"), Err(Error::FieldSpec(..))));
    }

    fn check_axioms(ctx: &FieldCtx, samples: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.order());
        for _ in 0..samples {
            let (a, b, c) = (ctx.random(&mut rng), ctx.random(&mut rng), ctx.random(&mut rng));
            assert_eq!(ctx.add(a, b), ctx.add(b, a));
            assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
            assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
            assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
            assert_eq!(
                ctx.mul(a, ctx.add(b, c)),
                ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            );
            assert_eq!(ctx.sub(ctx.add(a, b), b), a);
            assert_eq!(ctx.pow(a, ctx.order()), a);
            if !a.is_zero() {
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElem::ONE);
                assert_eq!(ctx.pow(a, ctx.order() - 1), FieldElem::ONE);
            }
        }
    }

    #[test]
    fn axioms_hold() {
        for (p, m) in [(2, 1), (5, 1), (7, 1), (2, 4), (3, 3), (2, 8), (5, 2), (2, 16), (3, 2)] {
            check_axioms(&FieldCtx::new(p, m, None).unwrap(), 300);
        }
        // large enough to bypass the log tables
        check_axioms(&FieldCtx::new(2, 20, None).unwrap(), 100);
        check_axioms(&FieldCtx::new(65_537, 1, None).unwrap(), 300);
    }

    #[test]
    fn tables_agree_with_schoolbook() {
        let ctx = FieldCtx::new(3, 4, None).unwrap();
        for a in ctx.elements().step_by(7) {
            for b in ctx.elements().step_by(5) {
                assert_eq!(ctx.mul(a, b), ctx.poly_mul(a, b));
            }
        }
    }

    #[test]
    fn prime_field_embeds_trivially() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f16 = FieldCtx::new(2, 4, None).unwrap();
        let e = Embedding::new(&f2, &f16).unwrap();
        assert_eq!(e.apply(FieldElem::ONE), FieldElem::ONE);
        assert_eq!(e.apply(FieldElem::ZERO), FieldElem::ZERO);
    }

    #[test]
    fn embeddings_are_injective_homomorphisms() {
        for (p, a, b) in [(2, 2, 4), (2, 1, 4), (3, 1, 2), (2, 2, 2), (3, 2, 4), (2, 3, 6)] {
            let src = FieldCtx::new(p, a, None).unwrap();
            let dst = FieldCtx::new(p, b, None).unwrap();
            let e = Embedding::new(&src, &dst).unwrap();
            assert!(dst.eval_prime_poly(src.modulus(), e.root()).is_zero() || a == 1);
            let mut seen = std::collections::HashSet::new();
            for x in src.elements() {
                assert!(seen.insert(e.apply(x)));
                assert_eq!(e.preimage(e.apply(x)), Some(x));
                for y in src.elements() {
                    assert_eq!(e.apply(src.add(x, y)), dst.add(e.apply(x), e.apply(y)));
                    assert_eq!(e.apply(src.mul(x, y)), dst.mul(e.apply(x), e.apply(y)));
                }
            }
            assert_eq!(e.apply(FieldElem::ONE), FieldElem::ONE);
        }
    }

    #[test]
    fn f4_into_f16_root() {
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        let f16 = FieldCtx::new(2, 4, None).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        // brute force: the smallest root of 1 + y + y^2 among the 16 elements
        let root = f16
            .elements()
            .find(|&r| {
                let r2 = f16.mul(r, r);
                f16.add(f16.add(FieldElem::ONE, r), r2).is_zero()
            })
            .unwrap();
        assert_eq!(e.root(), root);
        let outside = f16.elements().find(|&z| e.preimage(z).is_none());
        assert!(outside.is_some());
    }

    #[test]
    fn embedding_rejects_non_extensions() {
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        let f8 = FieldCtx::new(2, 3, None).unwrap();
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        assert!(matches!(Embedding::new(&f4, &f8), Err(Error::NotAnExtension { .. })));
        assert!(matches!(Embedding::new(&f4, &f9), Err(Error::NotAnExtension { .. })));
    }

    #[test]
    fn element_text_roundtrip() {
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.parse_elem(&f9.format_elem(a)).unwrap(), a);
        }
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.parse_elem("-2").unwrap(), FieldElem(3));
        assert!(f5.parse_elem("x").is_err());
    }
}
