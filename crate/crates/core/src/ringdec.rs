//! The split non-chain ring R = F_q[u_1,...,u_k]/<f_i(u_i), u_i u_j - u_j u_i>
//! where every f_i splits into distinct linear factors, its primitive central
//! orthogonal idempotents, and the CRT isomorphism R ≅ ⊕ F_q.
//!
//! Ring elements are held in CRT (eta) coordinates: the vector of values at
//! the root tuples, listed in the canonical multi-index order where the first
//! index varies fastest. The polynomial form is derived on demand.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::poly::Poly;

const MAX_PROFILE: usize = 64;

#[derive(Debug)]
struct SplitRepr {
    field: Field,
    /// roots[i] = the ordered roots of f_i (order is semantic: it numbers
    /// the idempotents).
    roots: Vec<Vec<u32>>,
    m: Vec<usize>,
    size: usize,
    /// red[i][t] = coefficients of u_i^t mod f_i, for t < 2 m_i - 1.
    red: Vec<Vec<Vec<u32>>>,
    /// Cached eta coefficient vectors (dense monomial basis), canonical order.
    etas: OnceLock<Vec<Vec<u32>>>,
}

/// Handle on a split ring specification. Clones share the same tables.
#[derive(Clone)]
pub struct SplitSpec(Arc<SplitRepr>);

impl fmt::Debug for SplitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplitSpec(q={}, m={:?})", self.0.field.q(), self.0.m)
    }
}

impl PartialEq for SplitSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.roots == other.0.roots)
    }
}
impl Eq for SplitSpec {}

/// Index (s_1,...,s_k), 1 <= s_i <= m_i, naming one idempotent eta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    /// Canonical linear position: the first index varies fastest.
    pub fn linear(&self, spec: &SplitSpec) -> Result<usize> {
        if self.0.len() != spec.k() {
            return Err(Error::IndexOutOfRange);
        }
        let mut pos = 0usize;
        let mut stride = 1usize;
        for (i, &s) in self.0.iter().enumerate() {
            if s == 0 || s > spec.m()[i] {
                return Err(Error::IndexOutOfRange);
            }
            pos += (s - 1) * stride;
            stride *= spec.m()[i];
        }
        Ok(pos)
    }

    pub fn from_linear(spec: &SplitSpec, mut pos: usize) -> MultiIndex {
        let mut s = Vec::with_capacity(spec.k());
        for &mi in spec.m() {
            s.push(pos % mi + 1);
            pos /= mi;
        }
        MultiIndex(s)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s)?;
        }
        write!(f, ")")
    }
}

impl SplitSpec {
    /// Builds a spec from per-variable root lists. The given root order is
    /// kept verbatim; it determines the idempotent numbering.
    pub fn from_roots(field: &Field, roots: &[Vec<FieldElement>]) -> Result<SplitSpec> {
        if roots.is_empty() {
            return Err(Error::IndexOutOfRange);
        }
        let mut raw: Vec<Vec<u32>> = Vec::with_capacity(roots.len());
        let mut size = 1usize;
        for var in roots {
            if var.is_empty() {
                return Err(Error::NotSplit);
            }
            let mut rs = Vec::with_capacity(var.len());
            for r in var {
                if r.field() != field {
                    return Err(Error::MixedFields);
                }
                if rs.contains(&r.raw()) {
                    return Err(Error::NotSplit);
                }
                rs.push(r.raw());
            }
            size = size.saturating_mul(rs.len());
            if size > MAX_PROFILE {
                return Err(Error::ProfileTooLarge);
            }
            raw.push(rs);
        }

        let m: Vec<usize> = raw.iter().map(|r| r.len()).collect();
        let red = raw
            .iter()
            .map(|rs| reduction_table(field, rs))
            .collect();
        Ok(SplitSpec(Arc::new(SplitRepr {
            field: field.clone(),
            roots: raw,
            m,
            size,
            red,
            etas: OnceLock::new(),
        })))
    }

    /// Builds a spec from the defining polynomials f_i, which must split into
    /// distinct linear factors. Roots are ordered ascending by canonical
    /// representative (so u^2-1 orders its roots as (1, -1)).
    pub fn from_polys(field: &Field, polys: &[Poly]) -> Result<SplitSpec> {
        let mut roots = Vec::with_capacity(polys.len());
        for f in polys {
            if f.field() != field {
                return Err(Error::MixedFields);
            }
            let fac = crate::factor::factor(f, 0)?;
            if !fac.is_split_distinct() {
                return Err(Error::NotSplit);
            }
            let mut rs: Vec<FieldElement> =
                fac.roots().into_iter().map(|(r, _)| r).collect();
            rs.sort_by_key(|r| r.raw());
            roots.push(rs);
        }
        Self::from_roots(field, &roots)
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }
    /// Number of variables k.
    pub fn k(&self) -> usize {
        self.0.m.len()
    }
    /// Degree profile (m_1,...,m_k).
    pub fn m(&self) -> &[usize] {
        &self.0.m
    }
    /// m_1 m_2 ... m_k, the number of idempotents.
    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn root(&self, var: usize, s: usize) -> Result<FieldElement> {
        let rs = self.0.roots.get(var).ok_or(Error::IndexOutOfRange)?;
        if s == 0 || s > rs.len() {
            return Err(Error::IndexOutOfRange);
        }
        Ok(self.0.field.element(rs[s - 1]))
    }

    pub fn roots_of(&self, var: usize) -> Vec<FieldElement> {
        self.0.roots[var]
            .iter()
            .map(|&r| self.0.field.element(r))
            .collect()
    }

    /// The defining polynomial f_i = prod (u - alpha_is), reconstructed.
    pub fn defining_poly(&self, var: usize) -> Poly {
        let field = &self.0.field;
        let mut f = Poly::one(field);
        for &r in &self.0.roots[var] {
            let lin = Poly::from_raw(field.clone(), vec![field.neg_raw(r), 1]);
            f = &f * &lin;
        }
        f
    }

    /// All multi-indices in canonical order (first index fastest).
    pub fn multi_indices(&self) -> Vec<MultiIndex> {
        (0..self.0.size)
            .map(|t| MultiIndex::from_linear(self, t))
            .collect()
    }

    /// The root tuple of a linear position.
    fn root_tuple(&self, mut pos: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k());
        for (i, &mi) in self.0.m.iter().enumerate() {
            out.push(self.0.roots[i][pos % mi]);
            pos /= mi;
        }
        out
    }

    fn eta_coeff_tables(&self) -> &Vec<Vec<u32>> {
        self.0.etas.get_or_init(|| {
            (0..self.0.size)
                .map(|t| {
                    let idx = MultiIndex::from_linear(self, t);
                    eta_uncached(self, &idx).coeffs
                })
                .collect()
        })
    }
}

fn reduction_table(field: &Field, roots: &[u32]) -> Vec<Vec<u32>> {
    let m = roots.len();
    let mut f = Poly::one(field);
    for &r in roots {
        f = &f * &Poly::from_raw(field.clone(), vec![field.neg_raw(r), 1]);
    }
    (0..2 * m - 1)
        .map(|t| {
            let xt = Poly::monomial(&field.one(), t);
            let rem = xt.rem(&f).unwrap();
            let mut c = rem.raw_coeffs().to_vec();
            c.resize(m, 0);
            c
        })
        .collect()
}

/// Element of R in the dense monomial basis u_1^{a_1}...u_k^{a_k}, a_i < m_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivarPoly {
    spec: SplitSpec,
    /// Mixed-radix dense coefficients; slot t encodes exponents via the same
    /// radix as MultiIndex positions.
    coeffs: Vec<u32>,
}

impl MultivarPoly {
    pub fn zero(spec: &SplitSpec) -> MultivarPoly {
        MultivarPoly {
            spec: spec.clone(),
            coeffs: vec![0; spec.size()],
        }
    }

    pub fn constant(spec: &SplitSpec, c: &FieldElement) -> MultivarPoly {
        let mut p = Self::zero(spec);
        p.coeffs[0] = c.raw();
        p
    }

    pub fn one(spec: &SplitSpec) -> MultivarPoly {
        Self::constant(spec, &spec.field().one())
    }

    /// The variable u_i (errors when m_i = 1, where u_i is a constant).
    pub fn var(spec: &SplitSpec, i: usize) -> Result<MultivarPoly> {
        if i >= spec.k() {
            return Err(Error::IndexOutOfRange);
        }
        let mut p = Self::zero(spec);
        if spec.m()[i] == 1 {
            // u_i == alpha_i1 in R
            p.coeffs[0] = spec.0.roots[i][0];
            return Ok(p);
        }
        let stride: usize = spec.m()[..i].iter().product();
        p.coeffs[stride] = 1;
        Ok(p)
    }

    /// Coefficient at the exponent tuple (a_1,...,a_k), a_i < m_i.
    pub fn coeff(&self, exps: &[usize]) -> Result<FieldElement> {
        if exps.len() != self.spec.k() {
            return Err(Error::IndexOutOfRange);
        }
        let mut pos = 0usize;
        let mut stride = 1usize;
        for (i, &a) in exps.iter().enumerate() {
            if a >= self.spec.m()[i] {
                return Err(Error::IndexOutOfRange);
            }
            pos += a * stride;
            stride *= self.spec.m()[i];
        }
        Ok(self.spec.field().element(self.coeffs[pos]))
    }

    /// Nonzero terms as (exponent tuple, coefficient).
    pub fn terms(&self) -> Vec<(Vec<usize>, FieldElement)> {
        let mut out = Vec::new();
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let mut pos = t;
                let exps: Vec<usize> = self
                    .spec
                    .m()
                    .iter()
                    .map(|&mi| {
                        let a = pos % mi;
                        pos /= mi;
                        a
                    })
                    .collect();
                out.push((exps, self.spec.field().element(c)));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn spec(&self) -> &SplitSpec {
        &self.spec
    }

    fn same_spec(&self, other: &MultivarPoly) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::MixedSpecs)
        }
    }

    pub fn try_add(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        self.same_spec(other)?;
        let field = self.spec.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| field.add_raw(a, b))
            .collect();
        Ok(MultivarPoly {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        self.same_spec(other)?;
        let field = self.spec.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| field.sub_raw(a, b))
            .collect();
        Ok(MultivarPoly {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, c: &FieldElement) -> MultivarPoly {
        let field = self.spec.field();
        let coeffs = self.coeffs.iter().map(|&a| field.mul_raw(a, c.raw())).collect();
        MultivarPoly {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    /// Product reduced modulo all the relations f_i(u_i).
    pub fn try_mul(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        self.same_spec(other)?;
        let spec = &self.spec;
        let field = spec.field().clone();
        let k = spec.k();
        let m = spec.m();
        let mut out = vec![0u32; spec.size()];

        // exponent decompositions are cheap at size <= 64
        let decomp = |mut t: usize| -> Vec<usize> {
            m.iter()
                .map(|&mi| {
                    let a = t % mi;
                    t /= mi;
                    a
                })
                .collect()
        };

        for (s, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            let ea = decomp(s);
            for (t, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let eb = decomp(t);
                let c = field.mul_raw(ca, cb);
                // expand prod_i (u_i^(ea_i + eb_i) mod f_i) scaled by c
                let mut acc: Vec<(usize, u32)> = vec![(0, c)];
                let mut stride = 1usize;
                for i in 0..k {
                    let table = &spec.0.red[i][ea[i] + eb[i]];
                    let mut next = Vec::with_capacity(acc.len() * m[i]);
                    for &(pos, coef) in &acc {
                        for (a, &rc) in table.iter().enumerate() {
                            if rc == 0 {
                                continue;
                            }
                            next.push((pos + a * stride, field.mul_raw(coef, rc)));
                        }
                    }
                    acc = next;
                    stride *= m[i];
                }
                for (pos, coef) in acc {
                    out[pos] = field.add_raw(out[pos], coef);
                }
            }
        }
        Ok(MultivarPoly {
            spec: spec.clone(),
            coeffs: out,
        })
    }

    /// Evaluation at the root tuple of a canonical position — the CRT
    /// coordinate picked out by the matching idempotent.
    fn eval_at_position(&self, pos: usize) -> u32 {
        let spec = &self.spec;
        let field = spec.field();
        let tuple = spec.root_tuple(pos);
        let m = spec.m();
        let mut acc = 0u32;
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut term = c;
            let mut rest = t;
            for (i, &mi) in m.iter().enumerate() {
                let a = rest % mi;
                rest /= mi;
                if a > 0 {
                    let pw = field
                        .pow_raw(tuple[i], a as i64)
                        .expect("positive power");
                    term = field.mul_raw(term, pw);
                }
            }
            acc = field.add_raw(acc, term);
        }
        acc
    }

    /// CRT coordinates: evaluate at every root tuple.
    pub fn to_crt(&self) -> RingElement {
        let crt = (0..self.spec.size())
            .map(|pos| self.eval_at_position(pos))
            .collect();
        RingElement {
            spec: self.spec.clone(),
            crt,
        }
    }
}

macro_rules! mv_binop {
    ($trait:ident, $fn:ident, $checked:ident) => {
        impl std::ops::$trait for &MultivarPoly {
            type Output = MultivarPoly;
            fn $fn(self, rhs: &MultivarPoly) -> MultivarPoly {
                self.$checked(rhs).expect("ring polynomial arithmetic")
            }
        }
    };
}
mv_binop!(Add, add, try_add);
mv_binop!(Sub, sub, try_sub);
mv_binop!(Mul, mul, try_mul);

/// The Lagrange basis polynomial for variable `var` (0-based) and root
/// position `s` (1-based): degree m_i - 1, value 1 at alpha_{i,s} and 0 at
/// the other roots. Constant 1 when m_i = 1.
pub fn epsilon(spec: &SplitSpec, var: usize, s: usize) -> Result<Poly> {
    let field = spec.field().clone();
    if var >= spec.k() {
        return Err(Error::IndexOutOfRange);
    }
    let m = spec.m()[var];
    if s == 0 || s > m {
        return Err(Error::IndexOutOfRange);
    }
    if m == 1 {
        return Ok(Poly::one(&field));
    }
    let alpha_s = spec.root(var, s)?;
    let mut num = Poly::one(&field);
    let mut den = field.one();
    for r in 1..=m {
        if r == s {
            continue;
        }
        let alpha_r = spec.root(var, r)?;
        num = &num
            * &Poly::from_elements(&field, &[-&alpha_r, field.one()]).unwrap();
        den = &den * &(&alpha_s - &alpha_r);
    }
    Ok(num.scale(&den.inv()?))
}

fn eta_uncached(spec: &SplitSpec, idx: &MultiIndex) -> MultivarPoly {
    let mut acc = MultivarPoly::one(spec);
    for (i, &s) in idx.0.iter().enumerate() {
        let eps = epsilon(spec, i, s).expect("validated index");
        // embed the univariate epsilon into variable i and multiply
        let mut emb = MultivarPoly::zero(spec);
        let stride: usize = spec.m()[..i].iter().product();
        for (a, &c) in eps.raw_coeffs().iter().enumerate() {
            emb.coeffs[a * stride] = c;
        }
        acc = &acc * &emb;
    }
    acc
}

/// The primitive central idempotent eta_idx = prod_i epsilon^{(i)}_{s_i}.
pub fn eta(spec: &SplitSpec, idx: &MultiIndex) -> Result<MultivarPoly> {
    let pos = idx.linear(spec)?;
    let coeffs = spec.eta_coeff_tables()[pos].clone();
    Ok(MultivarPoly {
        spec: spec.clone(),
        coeffs,
    })
}

/// Element of R in CRT (eta) coordinates, canonical multi-index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    spec: SplitSpec,
    crt: Vec<u32>,
}

impl RingElement {
    pub fn zero(spec: &SplitSpec) -> RingElement {
        RingElement {
            spec: spec.clone(),
            crt: vec![0; spec.size()],
        }
    }

    pub fn one(spec: &SplitSpec) -> RingElement {
        RingElement {
            spec: spec.clone(),
            crt: vec![1; spec.size()],
        }
    }

    /// Embeds a field scalar (constant polynomials evaluate to themselves
    /// everywhere).
    pub fn scalar(spec: &SplitSpec, c: &FieldElement) -> RingElement {
        RingElement {
            spec: spec.clone(),
            crt: vec![c.raw(); spec.size()],
        }
    }

    pub fn from_components(spec: &SplitSpec, comps: &[FieldElement]) -> Result<RingElement> {
        if comps.len() != spec.size() {
            return Err(Error::IndexOutOfRange);
        }
        let mut crt = Vec::with_capacity(comps.len());
        for c in comps {
            if c.field() != spec.field() {
                return Err(Error::MixedFields);
            }
            crt.push(c.raw());
        }
        Ok(RingElement {
            spec: spec.clone(),
            crt,
        })
    }

    pub(crate) fn from_raw(spec: &SplitSpec, crt: Vec<u32>) -> RingElement {
        debug_assert_eq!(crt.len(), spec.size());
        RingElement {
            spec: spec.clone(),
            crt,
        }
    }

    pub fn spec(&self) -> &SplitSpec {
        &self.spec
    }

    pub(crate) fn crt_raw(&self) -> &[u32] {
        &self.crt
    }

    pub fn component(&self, idx: &MultiIndex) -> Result<FieldElement> {
        Ok(self.spec.field().element(self.crt[idx.linear(&self.spec)?]))
    }

    pub fn components(&self) -> Vec<FieldElement> {
        self.crt
            .iter()
            .map(|&c| self.spec.field().element(c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.crt.iter().all(|&c| c == 0)
    }

    /// Units are exactly the elements with every CRT entry nonzero.
    pub fn is_unit(&self) -> bool {
        self.crt.iter().all(|&c| c != 0)
    }

    /// lambda^2 = 1 iff every CRT entry is +1 or -1.
    pub fn is_involution(&self) -> bool {
        let field = self.spec.field();
        let minus_one = field.neg_raw(1);
        self.crt.iter().all(|&c| c == 1 || c == minus_one)
    }

    pub fn inv(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::DivisionByZero);
        }
        let field = self.spec.field();
        let crt = self.crt.iter().map(|&c| field.inv_raw(c)).collect();
        Ok(RingElement {
            spec: self.spec.clone(),
            crt,
        })
    }

    fn same_spec(&self, other: &RingElement) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::MixedSpecs)
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_spec(other)?;
        let field = self.spec.field();
        let crt = self
            .crt
            .iter()
            .zip(&other.crt)
            .map(|(&a, &b)| field.add_raw(a, b))
            .collect();
        Ok(RingElement {
            spec: self.spec.clone(),
            crt,
        })
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_spec(other)?;
        let field = self.spec.field();
        let crt = self
            .crt
            .iter()
            .zip(&other.crt)
            .map(|(&a, &b)| field.sub_raw(a, b))
            .collect();
        Ok(RingElement {
            spec: self.spec.clone(),
            crt,
        })
    }

    /// Multiplication is pointwise in CRT coordinates.
    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_spec(other)?;
        let field = self.spec.field();
        let crt = self
            .crt
            .iter()
            .zip(&other.crt)
            .map(|(&a, &b)| field.mul_raw(a, b))
            .collect();
        Ok(RingElement {
            spec: self.spec.clone(),
            crt,
        })
    }

    pub fn scale(&self, c: &FieldElement) -> RingElement {
        let field = self.spec.field();
        let crt = self.crt.iter().map(|&a| field.mul_raw(a, c.raw())).collect();
        RingElement {
            spec: self.spec.clone(),
            crt,
        }
    }

    /// Polynomial form: sum over idx of crt[idx] * eta_idx.
    pub fn to_multivar(&self) -> MultivarPoly {
        let tables = self.spec.eta_coeff_tables();
        let field = self.spec.field();
        let mut coeffs = vec![0u32; self.spec.size()];
        for (pos, &c) in self.crt.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, &ec) in tables[pos].iter().enumerate() {
                coeffs[t] = field.add_raw(coeffs[t], field.mul_raw(ec, c));
            }
        }
        MultivarPoly {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

macro_rules! ring_binop {
    ($trait:ident, $fn:ident, $checked:ident) => {
        impl std::ops::$trait for &RingElement {
            type Output = RingElement;
            fn $fn(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).expect("ring arithmetic")
            }
        }
    };
}
ring_binop!(Add, add, try_add);
ring_binop!(Sub, sub, try_sub);
ring_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        let field = self.spec.field();
        let crt = self.crt.iter().map(|&c| field.neg_raw(c)).collect();
        RingElement {
            spec: self.spec.clone(),
            crt,
        }
    }
}

/// Builds the unit lambda = ⊕ eta_idx * comps[idx]. Every component must be
/// nonzero; dual-containing constructions additionally need is_involution.
pub fn assemble_unit(spec: &SplitSpec, comps: &[FieldElement]) -> Result<RingElement> {
    let elem = RingElement::from_components(spec, comps)?;
    for (i, &c) in elem.crt.iter().enumerate() {
        if c == 0 {
            return Err(Error::ZeroComponent(i));
        }
    }
    Ok(elem)
}

/// One identity checked by [`verify_idempotents`].
#[derive(Clone, Debug)]
pub struct IdempotentCheck {
    pub label: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct IdempotentReport {
    pub checks: Vec<IdempotentCheck>,
}

impl IdempotentReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Confirms by exact arithmetic modulo the relations that the eta family is
/// a set of primitive central orthogonal idempotents: eta_a eta_b = 0 for
/// a != b, eta_a^2 = eta_a, and sum eta_a = 1.
pub fn verify_idempotents(spec: &SplitSpec) -> IdempotentReport {
    let idxs = spec.multi_indices();
    let etas: Vec<MultivarPoly> = idxs
        .iter()
        .map(|i| eta(spec, i).expect("valid index"))
        .collect();
    let mut checks = Vec::new();

    for a in 0..etas.len() {
        for b in a + 1..etas.len() {
            let prod = &etas[a] * &etas[b];
            checks.push(IdempotentCheck {
                label: format!("eta{}*eta{} = 0", idxs[a], idxs[b]),
                pass: prod.is_zero(),
            });
        }
    }
    for (i, e) in etas.iter().enumerate() {
        let sq = e * e;
        checks.push(IdempotentCheck {
            label: format!("eta{}^2 = eta{}", idxs[i], idxs[i]),
            pass: sq == *e,
        });
    }
    let mut sum = MultivarPoly::zero(spec);
    for e in &etas {
        sum = &sum + e;
    }
    checks.push(IdempotentCheck {
        label: "sum eta = 1".to_string(),
        pass: sum == MultivarPoly::one(spec),
    });
    IdempotentReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    fn spec_u2_minus_1(field: &Field, k: usize) -> SplitSpec {
        let roots: Vec<Vec<FieldElement>> = (0..k)
            .map(|_| vec![field.one(), field.embed(-1)])
            .collect();
        SplitSpec::from_roots(field, &roots).unwrap()
    }

    #[test]
    fn epsilon_for_u2_minus_1() {
        // eps_1 = (u+1)/2, eps_2 = (1-u)/2 over any odd field
        for q in [5u64, 7, 19] {
            let f = Field::new(q, 1).unwrap();
            let spec = spec_u2_minus_1(&f, 1);
            let half = f.embed(2).inv().unwrap();
            let e1 = epsilon(&spec, 0, 1).unwrap();
            let e2 = epsilon(&spec, 0, 2).unwrap();
            let expected1 =
                Poly::from_elements(&f, &[half.clone(), half.clone()]).unwrap();
            let expected2 =
                Poly::from_elements(&f, &[half.clone(), -&half]).unwrap();
            assert_eq!(e1, expected1);
            assert_eq!(e2, expected2);
        }
    }

    #[test]
    fn epsilon_constant_when_m_is_one() {
        let f = Field::new(5, 1).unwrap();
        let spec = SplitSpec::from_roots(&f, &[vec![f.embed(3)]]).unwrap();
        assert_eq!(epsilon(&spec, 0, 1).unwrap(), Poly::one(&f));
    }

    #[test]
    fn epsilon_lagrange_evaluations() {
        // f = u^2 - u over F_5 (roots 0, 1): the basis polynomial at root 0
        // is 1 - u; direct evaluation oracle at both roots.
        let f = Field::new(5, 1).unwrap();
        let spec =
            SplitSpec::from_roots(&f, &[vec![f.zero(), f.one()]]).unwrap();
        let e1 = epsilon(&spec, 0, 1).unwrap();
        assert_eq!(
            e1,
            Poly::from_elements(&f, &[f.one(), f.embed(-1)]).unwrap()
        );
        assert!(e1.eval(&f.zero()).is_one());
        assert!(e1.eval(&f.one()).is_zero());
    }

    #[test]
    fn eta_three_variable_example() {
        // k = 3, all f_i = u_i^2 - 1: eta_111 = (1/8)(1 + u1 + u2 + u3 +
        // u1u2 + u2u3 + u3u1 + u1u2u3)
        let f = Field::new(5, 1).unwrap();
        let spec = spec_u2_minus_1(&f, 3);
        let e = eta(&spec, &MultiIndex(vec![1, 1, 1])).unwrap();
        let eighth = f.embed(8).inv().unwrap();
        for (exps, c) in e.terms() {
            assert!(exps.iter().all(|&a| a <= 1));
            assert_eq!(c, eighth);
        }
        assert_eq!(e.terms().len(), 8);
    }

    #[test]
    fn eta_kronecker_property() {
        let f = Field::new(7, 1).unwrap();
        let spec = SplitSpec::from_roots(
            &f,
            &[
                vec![f.one(), f.embed(-1)],
                vec![f.zero(), f.embed(2), f.embed(3)],
            ],
        )
        .unwrap();
        for idx in spec.multi_indices() {
            let e = eta(&spec, &idx).unwrap();
            let crt = e.to_crt();
            for other in spec.multi_indices() {
                let v = crt.component(&other).unwrap();
                if other == idx {
                    assert!(v.is_one());
                } else {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn eta_pair_example() {
        // k = 2, both u^2 - 1 over F_5: eta_11 = (1/4)(1 + u1 + u2 + u1u2)
        let f = Field::new(5, 1).unwrap();
        let spec = spec_u2_minus_1(&f, 2);
        let e = eta(&spec, &MultiIndex(vec![1, 1])).unwrap();
        let quarter = f.embed(4).inv().unwrap();
        assert_eq!(e.terms().len(), 4);
        for (_, c) in e.terms() {
            assert_eq!(c, quarter);
        }
    }

    #[test]
    fn idempotent_identities() {
        let f = Field::new(5, 1).unwrap();
        for k in 1..=3usize {
            let spec = spec_u2_minus_1(&f, k);
            let report = verify_idempotents(&spec);
            assert!(report.all_pass());
        }
        // epsilon_1 + epsilon_2 = 1 exactly for k=1
        let spec = spec_u2_minus_1(&f, 1);
        let s = &epsilon(&spec, 0, 1).unwrap() + &epsilon(&spec, 0, 2).unwrap();
        assert_eq!(s, Poly::one(&f));
    }

    #[test]
    fn crt_roundtrip_and_multiplicativity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let f = Field::new(7, 1).unwrap();
        let spec = SplitSpec::from_roots(
            &f,
            &[
                vec![f.one(), f.embed(-1)],
                vec![f.zero(), f.embed(3)],
            ],
        )
        .unwrap();
        for _ in 0..200 {
            let ca: Vec<u32> = (0..spec.size())
                .map(|_| rng.random_range(0..7u32))
                .collect();
            let cb: Vec<u32> = (0..spec.size())
                .map(|_| rng.random_range(0..7u32))
                .collect();
            let a = RingElement::from_raw(&spec, ca);
            let b = RingElement::from_raw(&spec, cb);
            // roundtrip both ways
            assert_eq!(a.to_multivar().to_crt(), a);
            // multiplication commutes with CRT
            let pa = a.to_multivar();
            let pb = b.to_multivar();
            assert_eq!((&pa * &pb).to_crt(), &a * &b);
        }
        // polynomial-side roundtrip
        for _ in 0..200 {
            let coeffs: Vec<u32> = (0..spec.size())
                .map(|_| rng.random_range(0..7u32))
                .collect();
            let p = MultivarPoly {
                spec: spec.clone(),
                coeffs,
            };
            assert_eq!(p.to_crt().to_multivar(), p);
        }
    }

    #[test]
    fn crt_examples() {
        let f = Field::new(5, 1).unwrap();
        let spec = spec_u2_minus_1(&f, 1);
        // p = 1 -> all ones
        assert_eq!(
            MultivarPoly::one(&spec).to_crt(),
            RingElement::one(&spec)
        );
        // p = u -> (1, 4) under root order (1, -1)
        let u = MultivarPoly::var(&spec, 0).unwrap();
        assert_eq!(
            u.to_crt().components(),
            vec![f.one(), f.embed(4)]
        );
    }

    #[test]
    fn assemble_unit_examples() {
        let f = Field::new(19, 1).unwrap();
        let spec = spec_u2_minus_1(&f, 1);
        // all ones -> lambda = 1 (cyclic)
        let lam = assemble_unit(&spec, &[f.one(), f.one()]).unwrap();
        assert_eq!(lam, RingElement::one(&spec));
        // components (-1, +1) under root order (1, -1) -> lambda = -u
        let lam = assemble_unit(&spec, &[f.embed(-1), f.one()]).unwrap();
        assert!(lam.is_involution());
        let minus_u = {
            let u = MultivarPoly::var(&spec, 0).unwrap();
            (&MultivarPoly::zero(&spec) - &u).to_crt()
        };
        assert_eq!(lam, minus_u);
        // zero component refused
        assert_eq!(
            assemble_unit(&spec, &[f.zero(), f.one()]).unwrap_err(),
            Error::ZeroComponent(0)
        );
    }

    #[test]
    fn char_two_collision_rejected() {
        let f = Field::new(2, 1).unwrap();
        // u^2 - 1 = (u-1)^2 over F_2: repeated root
        let m = Poly::from_elements(&f, &[f.one(), f.zero(), f.one()]).unwrap();
        assert_eq!(
            SplitSpec::from_polys(&f, &[m]).unwrap_err(),
            Error::NotSplit
        );
    }

    #[test]
    fn profile_guard() {
        let f = Field::new(11, 1).unwrap();
        let var: Vec<FieldElement> = (0..9).map(|c| f.embed(c)).collect();
        let err = SplitSpec::from_roots(&f, &[var.clone(), var.clone()])
            .unwrap_err();
        assert_eq!(err, Error::ProfileTooLarge);
    }

    #[test]
    fn from_polys_orders_roots_ascending() {
        let f = Field::new(5, 1).unwrap();
        let u2m1 = Poly::from_elements(&f, &[f.embed(-1), f.zero(), f.one()]).unwrap();
        let spec = SplitSpec::from_polys(&f, &[u2m1]).unwrap();
        assert_eq!(spec.roots_of(0), vec![f.one(), f.embed(4)]);
        let u3mu =
            Poly::from_elements(&f, &[f.zero(), f.embed(-1), f.zero(), f.one()])
                .unwrap();
        let spec = SplitSpec::from_polys(&f, &[u3mu]).unwrap();
        assert_eq!(
            spec.roots_of(0),
            vec![f.zero(), f.one(), f.embed(4)]
        );
    }

    #[test]
    fn ring_size_matches_profile() {
        let f = Field::new(5, 1).unwrap();
        let spec = SplitSpec::from_roots(
            &f,
            &[
                vec![f.one(), f.embed(-1)],
                vec![f.zero(), f.one(), f.embed(2)],
            ],
        )
        .unwrap();
        // q^(m1 m2) elements: the CRT vector space has dimension m1*m2
        assert_eq!(spec.size(), 6);
        assert_eq!(spec.m(), &[2, 3]);
    }
}
