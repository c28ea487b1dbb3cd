//! Constacyclic codes over F_q and their assembly into lambda-constacyclic
//! codes over the split ring R.
//!
//! A component code is the ideal <g(x)> of F_q[x]/<x^n - lambda_s>; an
//! R-code is a tuple of component codes glued by the idempotents. All
//! R-linear algebra is realized componentwise through CRT coordinates — R is
//! semisimple by construction, so nothing is lost.

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::matrix::Matrix;
use crate::poly::{reciprocal_dual, Poly};
use crate::ringdec::{assemble_unit, MultiIndex, RingElement, SplitSpec};

/// The constacyclic shift (c_0,...,c_{n-1}) -> (lambda c_{n-1}, c_0,...,c_{n-2}).
pub fn sigma_shift(v: &[FieldElement], lambda: &FieldElement) -> Result<Vec<FieldElement>> {
    if v.is_empty() {
        return Err(Error::LengthMismatch);
    }
    let mut out = Vec::with_capacity(v.len());
    out.push(lambda * &v[v.len() - 1]);
    out.extend_from_slice(&v[..v.len() - 1]);
    Ok(out)
}

/// The constacyclic shift on ring vectors, componentwise in CRT coordinates.
pub fn sigma_shift_ring(v: &[RingElement], lambda: &RingElement) -> Result<Vec<RingElement>> {
    if v.is_empty() {
        return Err(Error::LengthMismatch);
    }
    let mut out = Vec::with_capacity(v.len());
    out.push(lambda.try_mul(&v[v.len() - 1])?);
    out.extend_from_slice(&v[..v.len() - 1]);
    Ok(out)
}

/// A lambda_s-constacyclic code over F_q with monic generator g | x^n - lambda_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCode {
    field: Field,
    n: usize,
    lambda: FieldElement,
    g: Poly,
    h: Poly,
    k_dim: usize,
}

impl ComponentCode {
    /// Checks the divisibility contract and stores the cofactor h.
    pub fn new(field: &Field, n: usize, lambda: &FieldElement, g: &Poly) -> Result<ComponentCode> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if lambda.field() != field || g.field() != field {
            return Err(Error::MixedFields);
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let modulus = Poly::xn_minus(field, n, lambda);
        let h = modulus.div_exact(g)?;
        let k_dim = n - g.degree().unwrap();
        Ok(ComponentCode {
            field: field.clone(),
            n,
            lambda: lambda.clone(),
            g: g.clone(),
            h,
            k_dim,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }
    pub fn generator(&self) -> &Poly {
        &self.g
    }
    pub fn cofactor(&self) -> &Poly {
        &self.h
    }
    /// Dimension over F_q: n - deg(g).
    pub fn dim(&self) -> usize {
        self.k_dim
    }

    /// Applies the code's shift to a word of length n.
    pub fn shift(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch);
        }
        sigma_shift(v, &self.lambda)
    }

    /// k x n matrix with rows x^j g(x), j = 0..k-1; full row rank by the
    /// staircase of leading terms.
    pub fn generator_matrix(&self) -> Matrix {
        let g = self.g.raw_coeffs();
        let rows: Vec<Vec<u32>> = (0..self.k_dim)
            .map(|j| {
                let mut row = vec![0u32; self.n];
                row[j..j + g.len()].copy_from_slice(g);
                row
            })
            .collect();
        Matrix::from_raw_rows(&self.field, rows, self.n)
    }

    /// Membership test: c(x) is in <g(x)> iff g divides the word polynomial.
    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch);
        }
        let p = Poly::from_elements(&self.field, v)?;
        Ok(p.rem(&self.g)?.is_zero())
    }

    /// The dual code: lambda^{-1}-constacyclic, generated by the normalized
    /// reciprocal of the cofactor.
    pub fn dual(&self) -> ComponentCode {
        let hp = reciprocal_dual(&self.g, self.n, &self.lambda)
            .expect("generator divides its modulus");
        let lambda_inv = self.lambda.inv().expect("lambda is a unit");
        ComponentCode::new(&self.field, self.n, &lambda_inv, &hp)
            .expect("dual generator divides x^n - lambda^{-1}")
    }

    /// Divisibility criterion for C-perp inside C: requires lambda in {1,-1}
    /// and holds iff g(x) g-perp(x) divides x^n - lambda, where g-perp is the
    /// normalized reciprocal of g.
    pub fn is_dual_containing(&self) -> Result<bool> {
        let minus_one = -&self.field.one();
        if !(self.lambda.is_one() || self.lambda == minus_one) {
            return Err(Error::LambdaNotInvolution);
        }
        let gperp = self.g.reciprocal()?;
        let prod = self.g.try_mul(&gperp)?;
        let modulus = Poly::xn_minus(&self.field, self.n, &self.lambda);
        Ok(prod.divides(&modulus))
    }

    /// Independent linear-algebra route to the same question: every dual
    /// basis row must lie in the primal row space.
    pub fn dual_containment_rank_check(&self) -> bool {
        let g = self.generator_matrix();
        let dual = self.dual().generator_matrix();
        (0..dual.rows()).all(|r| {
            g.row_space_contains(&dual.row(r))
                .expect("matching lengths")
        })
    }
}

/// (n - k) x n parity check of a full-row-rank generator matrix.
pub fn parity_check(g: &Matrix) -> Result<Matrix> {
    if g.rank() != g.rows() {
        return Err(Error::RankDeficient);
    }
    Ok(g.null_space())
}

/// Polynomial over R, held as a coefficient vector of ring elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPoly {
    spec: SplitSpec,
    coeffs: Vec<RingElement>,
}

impl RPoly {
    pub fn from_coeffs(spec: &SplitSpec, mut coeffs: Vec<RingElement>) -> RPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RPoly {
            spec: spec.clone(),
            coeffs,
        }
    }

    /// Glues component polynomials: coefficient j has CRT entry g_idx[j] at
    /// each position idx, i.e. the sum of eta_idx * g_idx(x).
    pub fn from_components(spec: &SplitSpec, polys: &[&Poly]) -> Result<RPoly> {
        if polys.len() != spec.size() {
            return Err(Error::IndexOutOfRange);
        }
        let deg = polys
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0);
        let coeffs = (0..=deg)
            .map(|j| {
                let comps: Vec<FieldElement> =
                    polys.iter().map(|p| p.coeff(j)).collect();
                RingElement::from_components(spec, &comps)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RPoly::from_coeffs(spec, coeffs))
    }

    pub fn xn_minus(spec: &SplitSpec, n: usize, lambda: &RingElement) -> RPoly {
        let mut coeffs = vec![RingElement::zero(spec); n + 1];
        coeffs[0] = -lambda;
        coeffs[n] = RingElement::one(spec);
        RPoly::from_coeffs(spec, coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> RingElement {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| RingElement::zero(&self.spec))
    }

    /// The component polynomial picked out by one CRT position.
    pub fn component_poly(&self, pos: usize) -> Poly {
        let field = self.spec.field().clone();
        let coeffs: Vec<u32> = self.coeffs.iter().map(|c| c.crt_raw()[pos]).collect();
        Poly::from_raw(field, coeffs)
    }

    pub fn try_mul(&self, other: &RPoly) -> Result<RPoly> {
        if self.spec != other.spec {
            return Err(Error::MixedSpecs);
        }
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(RPoly::from_coeffs(&self.spec, Vec::new()));
        }
        let mut out =
            vec![RingElement::zero(&self.spec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.try_mul(b)?;
                out[i + j] = out[i + j].try_add(&t)?;
            }
        }
        Ok(RPoly::from_coeffs(&self.spec, out))
    }
}

/// The ring generator data of an R-code (the existence statement made
/// executable): g(x) = sum eta_idx g_idx(x), its verified relation
/// g(x) h(x) = x^n - lambda, the cardinality exponent
/// m_1...m_k n - sum deg(g_idx), and the dual generator
/// h-perp(x) = sum eta_idx h-perp_idx(x).
#[derive(Clone, Debug)]
pub struct RingGenerator {
    pub g: RPoly,
    pub cardinality_exponent: u64,
    pub dual_generator: RPoly,
}

/// A lambda-constacyclic code over R: one component code per multi-index,
/// in canonical order, all sharing n and the field.
#[derive(Clone, Debug)]
pub struct RCode {
    spec: SplitSpec,
    n: usize,
    components: Vec<ComponentCode>,
    lambda: RingElement,
}

impl RCode {
    pub fn new(spec: &SplitSpec, n: usize, components: Vec<ComponentCode>) -> Result<RCode> {
        if components.len() != spec.size() {
            return Err(Error::IndexOutOfRange);
        }
        for c in &components {
            if c.field() != spec.field() {
                return Err(Error::MixedFields);
            }
            if c.n() != n {
                return Err(Error::LengthMismatch);
            }
        }
        let lambdas: Vec<FieldElement> =
            components.iter().map(|c| c.lambda().clone()).collect();
        let lambda = assemble_unit(spec, &lambdas)?;
        Ok(RCode {
            spec: spec.clone(),
            n,
            components,
            lambda,
        })
    }

    pub fn spec(&self) -> &SplitSpec {
        &self.spec
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn lambda(&self) -> &RingElement {
        &self.lambda
    }
    pub fn components(&self) -> &[ComponentCode] {
        &self.components
    }

    pub fn component(&self, idx: &MultiIndex) -> Result<&ComponentCode> {
        Ok(&self.components[idx.linear(&self.spec)?])
    }

    /// Sum of the component dimensions; |C| = q^(this).
    pub fn dimension_sum(&self) -> usize {
        self.components.iter().map(|c| c.dim()).sum()
    }

    /// The componentwise dual, which is lambda^{-1}-constacyclic.
    pub fn dual(&self) -> RCode {
        let comps = self.components.iter().map(|c| c.dual()).collect();
        RCode::new(&self.spec, self.n, comps).expect("duals share n and field")
    }

    /// Ring generator, verified cardinality exponent, and dual generator.
    /// The defining relation g(x) h(x) = x^n - lambda is checked by an
    /// actual R[x] multiplication.
    pub fn ring_generator(&self) -> Result<RingGenerator> {
        let gens: Vec<&Poly> = self.components.iter().map(|c| c.generator()).collect();
        let cofs: Vec<&Poly> = self.components.iter().map(|c| c.cofactor()).collect();
        let g = RPoly::from_components(&self.spec, &gens)?;
        let h = RPoly::from_components(&self.spec, &cofs)?;
        let product = g.try_mul(&h)?;
        let modulus = RPoly::xn_minus(&self.spec, self.n, &self.lambda);
        if product != modulus {
            // cannot happen for components built through ComponentCode::new
            return Err(Error::NotADivisor(
                "ring generator".to_string(),
                "x^n - lambda".to_string(),
            ));
        }
        let duals: Vec<Poly> = self
            .components
            .iter()
            .map(|c| reciprocal_dual(c.generator(), self.n, c.lambda()))
            .collect::<Result<Vec<_>>>()?;
        let dual_refs: Vec<&Poly> = duals.iter().collect();
        let dual_generator = RPoly::from_components(&self.spec, &dual_refs)?;
        let total_deg: usize = self
            .components
            .iter()
            .map(|c| c.generator().degree().unwrap())
            .sum();
        let cardinality_exponent = (self.spec.size() * self.n - total_deg) as u64;
        Ok(RingGenerator {
            g,
            cardinality_exponent,
            dual_generator,
        })
    }

    /// The stacked block generator matrix over R: for each multi-index in
    /// canonical order, the rows eta_idx * G_idx.
    pub fn ring_generator_matrix(&self) -> Vec<Vec<RingElement>> {
        let m = self.spec.size();
        let mut rows = Vec::with_capacity(self.dimension_sum());
        for (pos, comp) in self.components.iter().enumerate() {
            let gm = comp.generator_matrix();
            for r in 0..gm.rows() {
                let row: Vec<RingElement> = (0..self.n)
                    .map(|c| {
                        let mut crt = vec![0u32; m];
                        crt[pos] = gm.get_raw(r, c);
                        RingElement::from_raw(&self.spec, crt)
                    })
                    .collect();
                rows.push(row);
            }
        }
        rows
    }

    /// Membership of a ring vector, decided componentwise.
    pub fn contains(&self, v: &[RingElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch);
        }
        let field = self.spec.field().clone();
        for (pos, comp) in self.components.iter().enumerate() {
            let coeffs: Vec<u32> = v.iter().map(|c| c.crt_raw()[pos]).collect();
            let p = Poly::from_raw(field.clone(), coeffs);
            if !p.rem(comp.generator())?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Per-component dual-containment verdicts by the divisibility criterion.
    /// Errors when some lambda component is not an involution.
    pub fn certify_dual_containing(&self) -> Result<ContainmentReport> {
        let mut verdicts = Vec::with_capacity(self.components.len());
        for (pos, c) in self.components.iter().enumerate() {
            let idx = MultiIndex::from_linear(&self.spec, pos);
            verdicts.push((idx, c.is_dual_containing()?));
        }
        Ok(ContainmentReport { verdicts })
    }
}

/// Dual-containment certificate: the per-component verdicts.
#[derive(Clone, Debug)]
pub struct ContainmentReport {
    pub verdicts: Vec<(MultiIndex, bool)>,
}

impl ContainmentReport {
    pub fn all_contained(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v)
    }
}
