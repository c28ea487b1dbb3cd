//! The compressed coefficient notation used for generator polynomials in
//! configs and reports.
//!
//! A string is a sequence of coefficient tokens in ascending degree order
//! (constant term first). Tokens are single digits (`4`), parenthesized
//! multi-digit integers (`(16)`), the primitive element (`ζ` or `z`), or a
//! parenthesized power of it (`(ζ^42)`). So `ζ02(10)1` is
//! ζ + 0x + 2x² + 10x³ + x⁴, and `121` is (x+1)².
//!
//! Integers denote prime-subfield elements; ζ-powers resolve against the
//! field's designated primitive element. `parse` and `format` are exact
//! inverses on monic polynomials.

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::poly::Poly;

/// Parses a coefficient string into a polynomial over `field`.
pub fn parse_gpoly(s: &str, field: &Field) -> Result<Poly> {
    let mut coeffs: Vec<FieldElement> = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '0'..='9' => {
                let v = c.to_digit(10).unwrap() as u64;
                if v >= field.p() {
                    return Err(Error::CoefficientOutOfField(c.to_string()));
                }
                coeffs.push(field.embed(v as i64));
            }
            'ζ' | 'z' => coeffs.push(field.zeta()),
            '(' => {
                let mut body = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(ch) => body.push(ch),
                        None => return Err(Error::BadToken(format!("({}", body))),
                    }
                }
                coeffs.push(parse_token(&body, field)?);
            }
            _ => return Err(Error::BadToken(c.to_string())),
        }
    }
    if coeffs.is_empty() {
        return Err(Error::BadToken(String::new()));
    }
    Poly::from_elements(field, &coeffs)
}

fn parse_token(body: &str, field: &Field) -> Result<FieldElement> {
    let body = body.trim();
    if body.is_empty() {
        return Err(Error::BadToken("()".to_string()));
    }
    if body.chars().all(|c| c.is_ascii_digit()) {
        let v: u64 = body
            .parse()
            .map_err(|_| Error::BadToken(body.to_string()))?;
        if v >= field.p() {
            return Err(Error::CoefficientOutOfField(body.to_string()));
        }
        return Ok(field.embed(v as i64));
    }
    field.parse_literal(body)
}

/// Formats a polynomial in the coefficient notation (ascending degree).
pub fn format_gpoly(f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for c in f.coeffs() {
        out.push_str(&format_token(&c));
    }
    out
}

fn format_token(c: &FieldElement) -> String {
    if c.in_prime_subfield() {
        let v = c.coeffs()[0];
        if v < 10 {
            return v.to_string();
        }
        return format!("({})", v);
    }
    match c.dlog() {
        Some(1) => "ζ".to_string(),
        Some(k) => format!("(ζ^{})", k),
        None => "0".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    #[test]
    fn ascending_order_example() {
        // ζ02(10)1 = ζ + 0x + 2x^2 + 10x^3 + x^4
        let f = Field::new(11, 1).unwrap();
        let p = parse_gpoly("ζ02(10)1", &f).unwrap();
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.coeff(0), f.zeta());
        assert_eq!(p.coeff(1), f.zero());
        assert_eq!(p.coeff(2), f.embed(2));
        assert_eq!(p.coeff(3), f.embed(10));
        assert_eq!(p.coeff(4), f.one());
        assert_eq!(format_gpoly(&p), "ζ02(10)1");
    }

    #[test]
    fn cube_of_x_minus_one_over_f11() {
        // (10)381 = 10 + 3x + 8x^2 + x^3; oracle: expand (x-1)^3 directly
        let f = Field::new(11, 1).unwrap();
        let p = parse_gpoly("(10)381", &f).unwrap();
        let x_minus_1 =
            Poly::from_elements(&f, &[f.embed(-1), f.one()]).unwrap();
        assert_eq!(p, x_minus_1.pow(3));
        assert_eq!(format_gpoly(&p), "(10)381");
    }

    #[test]
    fn monic_root_factor_of_x8_minus_1() {
        // "21" reads ascending as x+2, a monic divisor of x^8-1 over F_5:
        // its root is -2 = 3 and 3^8 = 1 (oracle below). The decreasing-order
        // reading 2x+1 is not monic.
        let f = Field::new(5, 1).unwrap();
        let p = parse_gpoly("21", &f).unwrap();
        assert!(p.is_monic());
        assert_eq!(p.coeff(0), f.embed(2));
        let root = f.embed(3);
        let mut pow = f.one();
        for _ in 0..8 {
            pow = &pow * &root;
        }
        assert!(pow.is_one());
        assert!(p.divides(&Poly::xn_minus(&f, 8, &f.one())));
    }

    #[test]
    fn bad_tokens() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(
            parse_gpoly("2a1", &f).unwrap_err(),
            Error::BadToken("a".to_string())
        );
        assert_eq!(
            parse_gpoly("(12", &f).unwrap_err(),
            Error::BadToken("(12".to_string())
        );
        assert_eq!(
            parse_gpoly("71", &f).unwrap_err(),
            Error::CoefficientOutOfField("7".to_string())
        );
        assert_eq!(
            parse_gpoly("(12)1", &f).unwrap_err(),
            Error::CoefficientOutOfField("12".to_string())
        );
    }

    #[test]
    fn extension_field_tokens() {
        let f = Field::new(5, 2).unwrap();
        let p = parse_gpoly("4(ζ^13)(ζ^5)1", &f).unwrap();
        assert_eq!(p.coeff(0), f.embed(4));
        assert_eq!(p.coeff(1), f.zeta_pow(13));
        assert_eq!(p.coeff(2), f.zeta_pow(5));
        assert_eq!(format_gpoly(&p), "4(ζ^13)(ζ^5)1");
        // braces and ascii z accepted on input, never emitted
        assert_eq!(parse_gpoly("(z^{13})1", &f).unwrap().coeff(0), f.zeta_pow(13));
    }

    #[test]
    fn roundtrip_on_random_monic_polys() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for q in [5u64, 11, 25, 169] {
            let (p, e) = crate::galois::split_prime_power(q).unwrap();
            let field = Field::new(p, e).unwrap();
            for _ in 0..100 {
                let deg = rng.random_range(0..8usize);
                let mut coeffs: Vec<FieldElement> = (0..deg)
                    .map(|_| {
                        let v = rng.random_range(0..q) as i64;
                        // stay inside the renderable alphabet
                        field.embed(v % field.p() as i64)
                    })
                    .collect();
                // sprinkle zeta powers where the field has them
                if field.e() > 1 && deg > 0 {
                    let k = rng.random_range(1..(q - 1)) as i64;
                    coeffs[0] = field.zeta_pow(k);
                }
                coeffs.push(field.one());
                let f = Poly::from_elements(&field, &coeffs).unwrap();
                assert_eq!(parse_gpoly(&format_gpoly(&f), &field).unwrap(), f);
            }
        }
    }
}
