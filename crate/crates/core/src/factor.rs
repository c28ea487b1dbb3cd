//! Full factorization over F_q: squarefree decomposition with p-th-root
//! descent (so x^n - lambda with p | n is handled), distinct-degree splitting
//! by Frobenius powers, and randomized equal-degree splitting. The splitting
//! randomness is a seeded stream, and factors are sorted canonically, so the
//! output is a pure function of (input, seed).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::galois::FieldElement;
use crate::poly::Poly;

/// unit * product(factors^multiplicity) == the factored polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    /// Monic irreducible factors with multiplicities, sorted by
    /// (degree, coefficient vector).
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn reassemble(&self) -> Poly {
        let mut acc = Poly::constant(&self.unit);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u64);
        }
        acc
    }

    /// Irreducible factors of degree 1, as roots (alpha for factor x-alpha),
    /// with multiplicities.
    pub fn roots(&self) -> Vec<(FieldElement, usize)> {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (-&f.coeff(0), *m))
            .collect()
    }

    /// True when the polynomial splits into distinct linear factors.
    pub fn is_split_distinct(&self) -> bool {
        self.factors
            .iter()
            .all(|(f, m)| f.degree() == Some(1) && *m == 1)
    }

    /// Number of monic divisors, capped at `limit`.
    pub fn divisor_count(&self, limit: u128) -> u128 {
        let mut n: u128 = 1;
        for (_, m) in &self.factors {
            n = n.saturating_mul(*m as u128 + 1);
            if n > limit {
                return n;
            }
        }
        n
    }

    /// All monic divisors with degree <= max_deg, in deterministic
    /// (exponent-odometer) order.
    pub fn divisors(&self, max_deg: usize) -> Vec<Poly> {
        let field = self.unit.field().clone();
        let mut out = vec![Poly::one(&field)];
        for (f, m) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (m + 1));
            for d in &out {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..*m {
                    cur = &cur * f;
                    if cur.degree().unwrap_or(0) <= max_deg {
                        next.push(cur.clone());
                    } else {
                        break;
                    }
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.unit.is_one() {
            write!(f, "{}", self.unit)?;
        }
        if self.factors.is_empty() && self.unit.is_one() {
            return write!(f, "1");
        }
        for (p, m) in &self.factors {
            if *m == 1 {
                write!(f, "({})", p)?;
            } else {
                write!(f, "({})^{}", p, m)?;
            }
        }
        Ok(())
    }
}

fn cmp_poly(a: &Poly, b: &Poly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.raw_coeffs().cmp(b.raw_coeffs()))
}

/// Factors a nonzero polynomial into monic irreducibles.
pub fn factor(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading_coeff().unwrap();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic)? {
        for irr in factor_squarefree(&part, &mut rng)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    Ok(Factorization { unit, factors })
}

/// Pairwise-coprime squarefree parts with multiplicities. Handles
/// derivative-zero inputs (p-th powers) by coefficient-wise p-th roots.
fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    debug_assert!(f.is_monic());
    let field = f.field().clone();
    let p = field.p() as usize;
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        let root = pth_root(f)?;
        return Ok(squarefree_decomposition(&root)?
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect());
    }

    let mut out = Vec::new();
    let mut c = f.gcd(&deriv)?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1usize;
    while w.degree() != Some(0) {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y)?;
        if z.degree() != Some(0) {
            out.push((z, i));
        }
        c = c.div_exact(&y)?;
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        let root = pth_root(&c)?;
        for (g, m) in squarefree_decomposition(&root)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Inverse of the Frobenius on polynomials: g with g^p = f. Requires every
/// exponent with a nonzero coefficient to be a multiple of p.
fn pth_root(f: &Poly) -> Result<Poly> {
    let field = f.field().clone();
    let p = field.p() as usize;
    let coeffs = f.raw_coeffs();
    let mut out = Vec::with_capacity(coeffs.len() / p + 1);
    for (i, &c) in coeffs.iter().enumerate() {
        if i % p == 0 {
            out.push(field.pth_root_raw(c));
        } else if c != 0 {
            return Err(Error::ZeroPolynomial); // unreachable for true p-th powers
        }
    }
    Ok(Poly::from_raw(field, out))
}

/// x^(q^k) mod m via iterated q-power maps.
fn frobenius_power(x_q_prev: &Poly, m: &Poly) -> Result<Poly> {
    let q = m.field().q();
    x_q_prev.powmod(q, m)
}

/// Factors a squarefree monic polynomial: distinct-degree stage, then
/// equal-degree splitting per stage.
fn factor_squarefree(f: &Poly, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let field = f.field().clone();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut d = 0usize;
    let mut h = Poly::x(&field).rem(&rest)?;
    while rest.degree().map_or(false, |deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = frobenius_power(&h, &rest)?;
        let x = Poly::x(&field);
        let g = h.try_sub(&x)?.gcd(&rest)?;
        if g.degree() != Some(0) {
            equal_degree_split(&g, d, rng, &mut out)?;
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
        }
    }
    if rest.degree().map_or(false, |deg| deg > 0) {
        out.push(rest);
    }
    Ok(out)
}

/// Cantor-Zassenhaus split of a product of distinct irreducibles of degree d.
fn equal_degree_split(
    f: &Poly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly>,
) -> Result<()> {
    let field = f.field().clone();
    let deg = f.degree().unwrap();
    if deg == d {
        out.push(f.monic());
        return Ok(());
    }
    let q = field.q();
    loop {
        // random nonconstant polynomial of degree < deg
        let coeffs: Vec<u32> = (0..deg)
            .map(|_| rng.random_range(0..q) as u32)
            .collect();
        let r = Poly::from_raw(field.clone(), coeffs);
        if r.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g0 = r.gcd(f)?;
        if g0.degree() != Some(0) && g0.degree() != f.degree() {
            equal_degree_split(&g0, d, rng, out)?;
            equal_degree_split(&f.div_exact(&g0)?, d, rng, out)?;
            return Ok(());
        }
        let s = if field.p() == 2 {
            // trace map sum_{i < d*e} r^(2^i) mod f
            let reps = d as u32 * field.e();
            let mut acc = r.rem(f)?;
            let mut cur = r.rem(f)?;
            for _ in 1..reps {
                cur = cur.powmod(2, f)?;
                acc = acc.try_add(&cur)?;
            }
            acc
        } else {
            // r^((q^d-1)/2) - 1 mod f, with the exponent assembled as
            // (1 + q + ... + q^(d-1)) * (q-1)/2 to stay inside u64.
            let mut norm = r.rem(f)?;
            let mut cur = r.rem(f)?;
            for _ in 1..d {
                cur = cur.powmod(q, f)?;
                norm = norm.try_mul(&cur)?.rem(f)?;
            }
            let t = norm.powmod((q - 1) / 2, f)?;
            t.try_sub(&Poly::one(&field))?
        };
        let g = s.gcd(f)?;
        if g.degree() != Some(0) && g.degree() != f.degree() {
            equal_degree_split(&g, d, rng, out)?;
            equal_degree_split(&f.div_exact(&g)?, d, rng, out)?;
            return Ok(());
        }
    }
}

/// Rabin test over F_q, independent of the factorization path.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let field = f.field().clone();
    let f = f.monic();
    let x = Poly::x(&field);
    let mut h = x.rem(&f).unwrap();
    let mut frob_powers = Vec::with_capacity(n);
    for _ in 0..n {
        h = h.powmod(field.q(), &f).unwrap();
        frob_powers.push(h.clone());
    }
    if frob_powers[n - 1] != x.rem(&f).unwrap() {
        return false;
    }
    for (r, _) in crate::galois::factorize_u64(n as u64) {
        let k = n / r as usize;
        let diff = frob_powers[k - 1].try_sub(&x).unwrap();
        if diff.gcd(&f).unwrap().degree() != Some(0) {
            return false;
        }
    }
    true
}
