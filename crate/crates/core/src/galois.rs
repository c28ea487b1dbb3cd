//! Exact arithmetic in prime fields F_p and extension fields F_{p^e}.
//!
//! A [`Field`] is a cheaply cloneable handle around an immutable table set.
//! Elements are stored base-p packed into a `u32`; construction precomputes
//! exp/log tables over a designated primitive element `zeta`, so products,
//! inverses and discrete logs are lookups. Fields are capped at q <= 2^20.
//!
//! Construction is deterministic: for e > 1 the modulus defaults to the
//! lexicographically smallest monic irreducible of degree e over F_p
//! (coefficients compared constant term first), and `zeta` to the generator
//! with the lexicographically smallest coefficient vector. Both can be
//! overridden to match an external convention.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const MAX_Q: u64 = 1 << 20;

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    e: u32,
    q: u64,
    /// Monic, ascending coefficients over F_p, length e+1. None when e = 1.
    modulus: Option<Vec<u64>>,
    zeta: u32,
    /// exp[i] = zeta^i for 0 <= i < 2(q-1); the doubled range removes a
    /// modular reduction from the multiply path.
    exp: Vec<u32>,
    /// log[v] for 1 <= v < q; log[0] is a sentinel.
    log: Vec<u32>,
}

/// Handle on F_{p^e}. Clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(q={})", self.0.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.e == other.0.e
                && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

/// One element of a [`Field`], stored as the base-p packed value of its
/// coefficient vector.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    val: u32,
}

/// Operation selector for [`FieldElement::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Field {
    /// F_{p^e} with the deterministic default modulus and primitive element.
    pub fn new(p: u64, e: u32) -> Result<Field> {
        Self::build(p, e, None, None)
    }

    /// Shorthand for prime powers: decomposes q and delegates to [`Field::new`].
    pub fn from_order(q: u64) -> Result<Field> {
        let (p, e) = split_prime_power(q).ok_or(Error::NonPrime(q))?;
        Self::new(p, e)
    }

    /// F_{p^e} with a caller-supplied modulus (monic, ascending coefficients
    /// over F_p, length e+1).
    pub fn with_modulus(p: u64, e: u32, modulus: &[u64]) -> Result<Field> {
        Self::build(p, e, Some(modulus.to_vec()), None)
    }

    /// Same field, different designated primitive element. Re-derives the
    /// exp/log tables so printing and `zeta^k` literals follow `zeta`.
    pub fn with_designated_zeta(&self, zeta: &FieldElement) -> Result<Field> {
        if zeta.field != *self {
            return Err(Error::MixedFields);
        }
        Self::build(
            self.0.p,
            self.0.e,
            self.0.modulus.clone(),
            Some(zeta.val),
        )
    }

    fn build(p: u64, e: u32, modulus: Option<Vec<u64>>, zeta: Option<u32>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::BadExtensionDegree);
        }
        let q = checked_pow(p, e).ok_or(Error::FieldTooLarge)?;
        if q > MAX_Q {
            return Err(Error::FieldTooLarge);
        }

        let modulus = match (e, modulus) {
            (1, None) => None,
            (1, Some(_)) => return Err(Error::BadModulus),
            (_, Some(m)) => {
                if m.len() != e as usize + 1
                    || m[e as usize] != 1
                    || m.iter().any(|&c| c >= p)
                    || !modp::is_irreducible(p, &m)
                {
                    return Err(Error::BadModulus);
                }
                Some(m)
            }
            (_, None) => Some(default_modulus(p, e)),
        };

        let raw = RawOps {
            p,
            e,
            q,
            modulus: modulus.clone(),
        };

        let zeta = match zeta {
            Some(z) => {
                if !raw.has_full_order(z) {
                    return Err(Error::BadPrimitiveElement);
                }
                z
            }
            None => raw.smallest_generator(),
        };

        // exp/log tables over zeta.
        let qm1 = (q - 1) as usize;
        let mut exp = Vec::with_capacity(2 * qm1);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur: u32 = 1;
        for i in 0..qm1 {
            exp.push(cur);
            log[cur as usize] = i as u32;
            cur = raw.mul(cur, zeta);
        }
        debug_assert_eq!(cur, 1, "designated zeta must have order q-1");
        for i in 0..qm1 {
            let v = exp[i];
            exp.push(v);
        }

        Ok(Field(Arc::new(FieldRepr {
            p,
            e,
            q,
            modulus,
            zeta,
            exp,
            log,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn e(&self) -> u32 {
        self.0.e
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }
    /// Modulus coefficients (ascending, length e+1); None for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }
    pub fn one(&self) -> FieldElement {
        self.element(1)
    }
    pub fn zeta(&self) -> FieldElement {
        self.element(self.0.zeta)
    }

    /// zeta^k (k may be any integer; reduced mod q-1).
    pub fn zeta_pow(&self, k: i64) -> FieldElement {
        let qm1 = (self.0.q - 1) as i64;
        let k = k.rem_euclid(qm1) as usize;
        self.element(self.0.exp[k])
    }

    /// Canonical embedding of an integer into the prime subfield.
    pub fn embed(&self, c: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.element(c.rem_euclid(p) as u32)
    }

    /// Element from basis coefficients (ascending powers of the residue class
    /// of x; length at most e, entries < p).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.e as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::CoefficientOutOfField(format!("{:?}", coeffs)));
        }
        let mut val = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            val += c * self.0.p.pow(i as u32);
        }
        Ok(self.element(val as u32))
    }

    /// Parses a scalar literal: an integer (prime subfield, negatives allowed)
    /// or a power of the designated primitive element written `z`, `z^k`,
    /// `ζ` or `ζ^k`.
    pub fn parse_literal(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::BadToken(String::new()));
        }
        if let Ok(n) = s.parse::<i64>() {
            // Integers denote prime-subfield elements; reject anything that
            // is not a canonical representative (or its negative).
            if n.unsigned_abs() >= self.0.p && n >= 0 {
                return Err(Error::CoefficientOutOfField(s.to_string()));
            }
            if n < 0 && n.unsigned_abs() > self.0.p {
                return Err(Error::CoefficientOutOfField(s.to_string()));
            }
            return Ok(self.embed(n));
        }
        let body = s.strip_prefix('ζ').or_else(|| s.strip_prefix('z'));
        if let Some(rest) = body {
            if rest.is_empty() {
                return Ok(self.zeta());
            }
            if let Some(expstr) = rest.strip_prefix('^') {
                let expstr = expstr.trim_start_matches('{').trim_end_matches('}');
                if let Ok(k) = expstr.parse::<i64>() {
                    return Ok(self.zeta_pow(k));
                }
            }
        }
        Err(Error::BadToken(s.to_string()))
    }

    /// All q elements in ascending packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q as u32).map(move |v| self.element(v))
    }

    /// All elements of multiplicative order q-1, ascending by coefficient
    /// vector (constant coefficient most significant).
    pub fn generators(&self) -> Vec<FieldElement> {
        let mut out = Vec::new();
        for i in 1..self.0.q {
            let v = lex_to_packed(self.0.p, self.0.e, i);
            if self.order_raw(v) == self.0.q - 1 {
                out.push(self.element(v));
            }
        }
        out
    }

    pub(crate) fn element(&self, val: u32) -> FieldElement {
        debug_assert!((val as u64) < self.0.q);
        FieldElement {
            field: self.clone(),
            val,
        }
    }

    // ---- raw (packed) arithmetic, used by the hot linear-algebra paths ----

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let r = &*self.0;
        if r.e == 1 {
            let s = a + b;
            let p = r.p as u32;
            if s >= p {
                s - p
            } else {
                s
            }
        } else if r.p == 2 {
            a ^ b
        } else {
            let p = r.p as u32;
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..r.e {
                let mut d = a % p + b % p;
                if d >= p {
                    d -= p;
                }
                out += d * place;
                place *= p;
                a /= p;
                b /= p;
            }
            out
        }
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let r = &*self.0;
        if r.e == 1 {
            if a == 0 {
                0
            } else {
                r.p as u32 - a
            }
        } else if r.p == 2 {
            a
        } else {
            let p = r.p as u32;
            let mut a = a;
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..r.e {
                let d = a % p;
                if d != 0 {
                    out += (p - d) * place;
                }
                place *= p;
                a /= p;
            }
            out
        }
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let r = &*self.0;
        r.exp[(r.log[a as usize] + r.log[b as usize]) as usize]
    }

    /// Multiplicative inverse of a nonzero element.
    #[inline]
    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        debug_assert_ne!(a, 0);
        let r = &*self.0;
        let qm1 = (r.q - 1) as u32;
        r.exp[(qm1 - r.log[a as usize]) as usize]
    }

    #[inline]
    pub(crate) fn div_raw(&self, a: u32, b: u32) -> u32 {
        debug_assert_ne!(b, 0);
        self.mul_raw(a, self.inv_raw(b))
    }

    pub(crate) fn pow_raw(&self, a: u32, n: i64) -> Result<u32> {
        if a == 0 {
            return if n < 0 {
                Err(Error::ZeroToNegativePower)
            } else if n == 0 {
                Ok(1)
            } else {
                Ok(0)
            };
        }
        let r = &*self.0;
        let qm1 = (r.q - 1) as i64;
        let k = (r.log[a as usize] as i64 * (n % qm1)).rem_euclid(qm1);
        Ok(r.exp[k as usize])
    }

    /// Discrete log base zeta; None for zero.
    pub(crate) fn dlog_raw(&self, a: u32) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.0.log[a as usize] as u64)
        }
    }

    /// Multiplicative order of a nonzero element.
    pub(crate) fn order_raw(&self, a: u32) -> u64 {
        debug_assert_ne!(a, 0);
        let qm1 = self.0.q - 1;
        if qm1 == 0 {
            return 1;
        }
        let k = self.0.log[a as usize] as u64;
        qm1 / gcd_u64(qm1, k)
    }

    /// p-th root (inverse Frobenius): a^(p^(e-1)).
    pub(crate) fn pth_root_raw(&self, a: u32) -> u32 {
        if self.0.e == 1 || a == 0 {
            return a;
        }
        let mut exp = 1u64;
        for _ in 0..self.0.e - 1 {
            exp *= self.0.p;
        }
        self.pow_raw(a, (exp % (self.0.q - 1).max(1)) as i64)
            .expect("nonzero base")
    }

    fn assert_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }
    pub fn is_one(&self) -> bool {
        self.val == 1
    }

    #[inline]
    pub(crate) fn raw(&self) -> u32 {
        self.val
    }

    /// Basis coefficients base p, ascending, length e.
    pub fn coeffs(&self) -> Vec<u64> {
        let p = self.field.p();
        let mut v = self.val as u64;
        (0..self.field.e())
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    /// True when the element lies in the prime subfield F_p.
    pub fn in_prime_subfield(&self) -> bool {
        (self.val as u64) < self.field.p()
    }

    /// Discrete log base the field's designated primitive element; None for 0.
    pub fn dlog(&self) -> Option<u64> {
        self.field.dlog_raw(self.val)
    }

    /// Multiplicative order; errors on zero.
    pub fn order(&self) -> Result<u64> {
        if self.val == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.order_raw(self.val))
    }

    /// The four field operations with full precondition checking.
    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.field.assert_same(&other.field)?;
        let v = match op {
            ArithOp::Add => self.field.add_raw(self.val, other.val),
            ArithOp::Sub => self.field.sub_raw(self.val, other.val),
            ArithOp::Mul => self.field.mul_raw(self.val, other.val),
            ArithOp::Div => {
                if other.val == 0 {
                    return Err(Error::DivisionByZero);
                }
                self.field.div_raw(self.val, other.val)
            }
        };
        Ok(self.field.element(v))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.val == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.element(self.field.inv_raw(self.val)))
    }

    /// Repeated-squaring power (via the log table); negative exponents invert.
    pub fn pow(&self, n: i64) -> Result<FieldElement> {
        Ok(self.field.element(self.field.pow_raw(self.val, n)?))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}
impl Eq for FieldElement {}

macro_rules! element_binop {
    ($trait:ident, $fn:ident, $op:expr) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $fn(self, rhs: &FieldElement) -> FieldElement {
                self.arith(rhs, $op).expect("field element arithmetic")
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $fn(self, rhs: FieldElement) -> FieldElement {
                (&self).$fn(&rhs)
            }
        }
    };
}
element_binop!(Add, add, ArithOp::Add);
element_binop!(Sub, sub, ArithOp::Sub);
element_binop!(Mul, mul, ArithOp::Mul);
element_binop!(Div, div, ArithOp::Div);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(self.field.neg_raw(self.val))
    }
}

impl fmt::Display for FieldElement {
    /// `0`, `1`, a prime-subfield integer, or `ζ^k` by discrete log.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.in_prime_subfield() {
            return write!(f, "{}", self.val);
        }
        match self.dlog() {
            Some(1) => write!(f, "ζ"),
            Some(k) => write!(f, "ζ^{}", k),
            None => write!(f, "0"),
        }
    }
}

/// Bootstrap arithmetic used before the exp/log tables exist.
struct RawOps {
    p: u64,
    e: u32,
    q: u64,
    modulus: Option<Vec<u64>>,
}

impl RawOps {
    fn decode(&self, a: u32) -> Vec<u64> {
        let mut v = a as u64;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u64]) -> u32 {
        let mut val = 0u64;
        for &d in digits.iter().rev() {
            val = val * self.p + d;
        }
        val as u32
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p) as u32;
        }
        let (da, db) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.e as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let m = self.modulus.as_ref().expect("extension field modulus");
        // reduce by the monic modulus
        for i in (self.e as usize..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..self.e as usize {
                let idx = i - self.e as usize + j;
                prod[idx] = (prod[idx] + (self.p - m[j] % self.p) % self.p * c) % self.p;
            }
        }
        prod.truncate(self.e as usize);
        self.encode(&prod)
    }

    fn pow(&self, a: u32, mut n: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    fn has_full_order(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        let qm1 = self.q - 1;
        if qm1 == 0 {
            return true;
        }
        if self.pow(a, qm1) != 1 {
            return false;
        }
        factorize_u64(qm1)
            .iter()
            .all(|&(r, _)| self.pow(a, qm1 / r) != 1)
    }

    /// Generator with the lexicographically smallest coefficient vector
    /// (constant coefficient compared first).
    fn smallest_generator(&self) -> u32 {
        for i in 1..self.q {
            let v = lex_to_packed(self.p, self.e, i);
            if self.has_full_order(v) {
                return v;
            }
        }
        unreachable!("every finite field has a generator")
    }
}

/// i-th coefficient vector in lexicographic order (constant term most
/// significant), returned base-p packed.
fn lex_to_packed(p: u64, e: u32, i: u64) -> u32 {
    let mut rem = i;
    let mut packed = 0u64;
    let mut div = p.pow(e - 1);
    let mut place = 1u64;
    for _ in 0..e {
        let c = rem / div;
        rem %= div;
        packed += c * place;
        place *= p;
        if div > 1 {
            div /= p;
        }
    }
    packed as u32
}

/// Lexicographically smallest monic irreducible of degree e over F_p.
fn default_modulus(p: u64, e: u32) -> Vec<u64> {
    let count = p.pow(e);
    for i in 0..count {
        let packed = lex_to_packed(p, e, i) as u64;
        let mut coeffs: Vec<u64> = {
            let mut v = packed;
            (0..e)
                .map(|_| {
                    let d = v % p;
                    v /= p;
                    d
                })
                .collect()
        };
        coeffs.push(1);
        if modp::is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducibles of every degree exist over F_p")
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut q = 1u64;
    for _ in 0..e {
        q = q.checked_mul(p)?;
        if q > MAX_Q {
            return None;
        }
    }
    Some(q)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut m = 0;
            while n % d == 0 {
                n /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// q = p^e split; None when q is not a prime power.
pub fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize_u64(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Polynomial arithmetic over F_p on plain coefficient vectors, enough to
/// test modulus irreducibility (Rabin) during field construction.
mod modp {
    use super::factorize_u64;

    type P = Vec<u64>;

    fn trim(mut f: P) -> P {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    fn rem(p: u64, mut a: P, b: &P) -> P {
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while a.len() > db {
            let c = (a.last().copied().unwrap() * lead_inv) % p;
            let shift = a.len() - 1 - db;
            if c != 0 {
                for j in 0..=db {
                    let t = (b[j] * c) % p;
                    a[shift + j] = (a[shift + j] + p - t) % p;
                }
            }
            a.pop();
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    fn mulmod(p: u64, a: &P, b: &P, m: &P) -> P {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(p, trim(prod), m)
    }

    fn powmod(p: u64, a: &P, mut n: u64, m: &P) -> P {
        let mut base = a.clone();
        let mut acc = vec![1u64];
        while n > 0 {
            if n & 1 == 1 {
                acc = mulmod(p, &acc, &base, m);
            }
            base = mulmod(p, &base, &base, m);
            n >>= 1;
        }
        acc
    }

    fn gcd(p: u64, mut a: P, mut b: P) -> P {
        while !b.is_empty() {
            let r = rem(p, a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        // Fermat
        let mut acc = 1u64;
        let mut base = a % p;
        let mut n = p - 2;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            n >>= 1;
        }
        acc
    }

    /// x^(p^k) mod m via iterated p-th powers.
    fn frob(p: u64, k: u32, m: &P) -> P {
        let mut h = vec![0, 1];
        h = rem(p, h, m);
        for _ in 0..k {
            h = powmod(p, &h, p, m);
        }
        h
    }

    fn sub(p: u64, a: &P, b: &P) -> P {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + p - y) % p;
        }
        trim(out)
    }

    /// Rabin irreducibility test for a monic polynomial over F_p.
    pub fn is_irreducible(p: u64, f: &P) -> bool {
        let e = f.len() - 1;
        if e == 0 {
            return false;
        }
        if e == 1 {
            return true;
        }
        let x = rem(p, vec![0, 1], f);
        let xq = frob(p, e as u32, f);
        if sub(p, &xq, &x) != Vec::<u64>::new() {
            return false;
        }
        for (r, _) in factorize_u64(e as u64) {
            let h = frob(p, (e as u64 / r) as u32, f);
            let g = gcd(p, sub(p, &h, &x), f.clone());
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent order oracle: multiply out powers one by one.
    fn order_by_powers(a: &FieldElement) -> u64 {
        assert!(!a.is_zero());
        let mut acc = a.clone();
        let mut n = 1;
        while !acc.is_one() {
            acc = &acc * a;
            n += 1;
        }
        n
    }

    #[test]
    fn f5_zeta_is_two() {
        let f = Field::new(5, 1).unwrap();
        // 2 is the smallest generator of F_5^*: check by direct order computation.
        assert_eq!(order_by_powers(&f.embed(2)), 4);
        assert_eq!(order_by_powers(&f.embed(1)), 1);
        assert_eq!(f.zeta(), f.embed(2));
    }

    #[test]
    fn f2_zeta_is_one() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.zeta(), f.one());
    }

    #[test]
    fn f25_zeta_has_order_24() {
        let f = Field::new(5, 2).unwrap();
        let m = f.modulus().unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[2], 1);
        assert_eq!(order_by_powers(&f.zeta()), 24);
        assert_eq!(f.zeta().order().unwrap(), 24);
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(&f5.embed(2) * &f5.embed(4), f5.embed(3));
        let f17 = Field::new(17, 1).unwrap();
        assert_eq!(&f17.embed(8) + &f17.embed(13), f17.embed(4));
        let f25 = Field::new(5, 2).unwrap();
        assert_eq!(&f25.zeta() * &f25.zeta_pow(23), f25.one());
    }

    #[test]
    fn pow_examples() {
        let f49 = Field::new(7, 2).unwrap();
        assert_eq!(f49.zeta().pow(48).unwrap(), f49.one());
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.embed(3).pow(-1).unwrap(), f5.embed(2));
        let f25 = Field::new(5, 2).unwrap();
        let lhs = f25.zeta().pow(13).unwrap();
        let rhs = &f25.zeta().pow(6).unwrap() * &f25.zeta().pow(7).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(6, 1).unwrap_err(), Error::NonPrime(6));
        assert_eq!(Field::new(2, 21).unwrap_err(), Error::FieldTooLarge);
        assert_eq!(Field::new(5, 0).unwrap_err(), Error::BadExtensionDegree);
        // x^2 + 1 has roots over F_5
        assert_eq!(
            Field::with_modulus(5, 2, &[1, 0, 1]).unwrap_err(),
            Error::BadModulus
        );
    }

    #[test]
    fn arith_errors() {
        let f5 = Field::new(5, 1).unwrap();
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(
            f5.one().arith(&f7.one(), ArithOp::Add).unwrap_err(),
            Error::MixedFields
        );
        assert_eq!(
            f5.one().arith(&f5.zero(), ArithOp::Div).unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(f5.zero().pow(-1).unwrap_err(), Error::ZeroToNegativePower);
    }

    #[test]
    fn field_axioms_on_seeded_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in [5u64, 7, 11, 25, 49] {
            let (p, e) = split_prime_power(q).unwrap();
            let f = Field::new(p, e).unwrap();
            for _ in 0..1000 {
                let a = f.element(rng.random_range(0..q) as u32);
                let b = f.element(rng.random_range(0..q) as u32);
                let c = f.element(rng.random_range(0..q) as u32);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for q in [9u64, 25, 27, 49, 121] {
            let (p, e) = split_prime_power(q).unwrap();
            let f = Field::new(p, e).unwrap();
            for _ in 0..200 {
                let a = f.element(rng.random_range(0..q) as u32);
                let b = f.element(rng.random_range(0..q) as u32);
                let lhs = (&a + &b).pow(p as i64).unwrap();
                let rhs = &a.pow(p as i64).unwrap() + &b.pow(p as i64).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn zeta_passes_prime_order_checks() {
        for q in [5u64, 7, 25, 27, 49, 169, 289] {
            let (p, e) = split_prime_power(q).unwrap();
            let f = Field::new(p, e).unwrap();
            let z = f.zeta();
            for (r, _) in factorize_u64(q - 1) {
                assert_ne!(z.pow(((q - 1) / r) as i64).unwrap(), f.one());
            }
        }
    }

    #[test]
    fn designated_zeta_override() {
        let f = Field::new(5, 2).unwrap();
        let gens = f.generators();
        assert_eq!(gens.len(), 8); // phi(24)
        let alt = &gens[1];
        let f2 = f.with_designated_zeta(alt).unwrap();
        assert_eq!(f2.zeta().coeffs(), alt.coeffs());
        // same field, same packed representation
        assert_eq!(f, f2);
        assert_eq!(
            f.with_designated_zeta(&f.embed(1)).unwrap_err(),
            Error::BadPrimitiveElement
        );
    }

    #[test]
    fn display_forms() {
        let f25 = Field::new(5, 2).unwrap();
        assert_eq!(f25.zero().to_string(), "0");
        assert_eq!(f25.one().to_string(), "1");
        assert_eq!(f25.embed(4).to_string(), "4");
        assert_eq!(f25.zeta().to_string(), "ζ");
        let z13 = f25.zeta_pow(13);
        assert!(!z13.in_prime_subfield());
        assert_eq!(z13.to_string(), "ζ^13");
        assert_eq!(f25.parse_literal("ζ^13").unwrap(), z13);
        assert_eq!(f25.parse_literal("z^13").unwrap(), z13);
        assert_eq!(f25.parse_literal("-1").unwrap(), f25.embed(-1));
    }
}
