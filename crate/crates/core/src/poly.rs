//! Dense univariate polynomials over a [`Field`], ascending coefficients,
//! no trailing zeros. Degrees in scope stay in the hundreds, so all products
//! are schoolbook.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(&field.one())
    }

    pub fn constant(c: &FieldElement) -> Poly {
        Poly::from_raw(c.field().clone(), vec![c.raw()])
    }

    /// The monomial x.
    pub fn x(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), vec![0, 1])
    }

    /// c * x^deg.
    pub fn monomial(c: &FieldElement, deg: usize) -> Poly {
        let mut v = vec![0u32; deg + 1];
        v[deg] = c.raw();
        Poly::from_raw(c.field().clone(), v)
    }

    /// x^n - lambda, the modulus of a lambda-constacyclic code of length n.
    pub fn xn_minus(field: &Field, n: usize, lambda: &FieldElement) -> Poly {
        let mut v = vec![0u32; n + 1];
        v[0] = field.neg_raw(lambda.raw());
        v[n] = 1;
        Poly::from_raw(field.clone(), v)
    }

    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Poly> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field() != field {
                return Err(Error::MixedFields);
            }
            raw.push(c.raw());
        }
        Ok(Poly::from_raw(field.clone(), raw))
    }

    pub(crate) fn from_raw(field: Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub(crate) fn raw_coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.element(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&v| self.field.element(v)).collect()
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|&v| self.field.element(v))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => {
                let inv = self.field.inv_raw(lc);
                self.scale_raw(inv)
            }
        }
    }

    pub(crate) fn scale_raw(&self, c: u32) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&v| self.field.mul_raw(v, c))
            .collect();
        Poly::from_raw(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        assert_eq!(c.field(), &self.field, "mixed fields");
        self.scale_raw(c.raw())
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.add_raw(a, b);
        }
        Ok(Poly::from_raw(self.field.clone(), out))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.sub_raw(a, b);
        }
        Ok(Poly::from_raw(self.field.clone(), out))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let t = self.field.mul_raw(a, b);
                out[i + j] = self.field.add_raw(out[i + j], t);
            }
        }
        Ok(Poly::from_raw(self.field.clone(), out))
    }

    /// (quotient, remainder) with deg(remainder) < deg(divisor).
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let f = &self.field;
        let lead_inv = f.inv_raw(*divisor.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u32; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = f.mul_raw(rem[top], lead_inv);
            if c != 0 {
                quo[top - db] = c;
                for j in 0..=db {
                    let t = f.mul_raw(divisor.coeffs[j], c);
                    rem[top - db + j] = f.sub_raw(rem[top - db + j], t);
                }
            }
        }
        rem.truncate(db);
        Ok((
            Poly::from_raw(f.clone(), quo),
            Poly::from_raw(f.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor(
                divisor.to_string(),
                self.to_string(),
            ))
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        matches!(other.divmod(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic gcd; gcd(f, 0) = monic(f) and gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| {
                let k = f.embed(i as i64).raw();
                f.mul_raw(c, k)
            })
            .collect();
        Poly::from_raw(f.clone(), coeffs)
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        assert_eq!(at.field(), &self.field, "mixed fields");
        self.field.element(self.eval_raw(at.raw()))
    }

    pub(crate) fn eval_raw(&self, at: u32) -> u32 {
        let f = &self.field;
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = f.add_raw(f.mul_raw(acc, at), c);
        }
        acc
    }

    pub fn pow(&self, mut n: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// The normalized reciprocal f_0^{-1} (f_r + f_{r-1} x + ... + f_0 x^r).
    /// Requires f(0) != 0; monic output.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.coeffs.first().copied().unwrap_or(0) == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut rev = self.coeffs.clone();
        rev.reverse();
        let inv = self.field.inv_raw(self.coeffs[0]);
        Ok(Poly::from_raw(self.field.clone(), rev).scale_raw(inv))
    }

    /// self^n mod m by repeated squaring.
    pub fn powmod(&self, mut n: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?.rem(m)?;
            }
            base = base.try_mul(&base)?.rem(m)?;
            n >>= 1;
        }
        Ok(acc)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $fn:ident, $checked:ident) => {
        impl std::ops::$trait for &Poly {
            type Output = Poly;
            fn $fn(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomial arithmetic")
            }
        }
        impl std::ops::$trait for Poly {
            type Output = Poly;
            fn $fn(self, rhs: Poly) -> Poly {
                (&self).$fn(&rhs)
            }
        }
    };
}
poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| self.field.neg_raw(c))
            .collect();
        Poly::from_raw(self.field.clone(), coeffs)
    }
}

impl fmt::Display for Poly {
    /// Conventional descending form, e.g. `x^2+8x+16` or `x+ζ^42`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let elem = self.field.element(c);
            let cs = elem.to_string();
            if i == 0 {
                write!(f, "{}", cs)?;
            } else {
                if c != 1 {
                    if cs.contains('^') || cs.contains('ζ') {
                        write!(f, "({})", cs)?;
                    } else {
                        write!(f, "{}", cs)?;
                    }
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Monic generator of the dual code: with x^n - lambda = g * h and
/// h = h_0 + h_1 x + ... + h_{n-r} x^{n-r}, returns
/// h_0^{-1} (h_{n-r} + h_{n-r-1} x + ... + h_0 x^{n-r}).
///
/// `g` must be monic and divide x^n - lambda exactly; lambda must be nonzero,
/// which makes h_0 a unit.
pub fn reciprocal_dual(g: &Poly, n: usize, lambda: &FieldElement) -> Result<Poly> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = g.field().clone();
    let modulus = Poly::xn_minus(&field, n, lambda);
    let h = modulus.div_exact(g)?;
    let mut rev: Vec<u32> = h.raw_coeffs().to_vec();
    rev.reverse();
    let h0 = h.coeff(0);
    debug_assert!(!h0.is_zero(), "h(0) = -lambda / g(0) is a unit");
    let out = Poly::from_raw(field, rev).scale(&h0.inv()?);
    debug_assert!(out.is_monic());
    Ok(out)
}
