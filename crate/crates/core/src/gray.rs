//! The Gray map: CRT coordinate rows multiplied by a fixed nonsingular
//! matrix V, extended coordinatewise from R^n to F_q^{mn}. When V V^T is a
//! nonzero scalar multiple of the identity, the map exchanges duals.

use crate::codes::{parity_check, RCode};
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::matrix::Matrix;
use crate::ringdec::{RingElement, SplitSpec};

/// A nonsingular m x m matrix over F_q, with the orthogonality certificate
/// beta (V V^T = beta I) attached when it exists.
#[derive(Clone, Debug)]
pub struct GrayMap {
    field: Field,
    m: usize,
    v: Matrix,
    beta: Option<FieldElement>,
}

impl GrayMap {
    pub fn new(v: Matrix) -> Result<GrayMap> {
        if v.rows() != v.cols() {
            return Err(Error::DimensionMismatch);
        }
        if v.rank() != v.rows() {
            return Err(Error::SingularGrayMatrix);
        }
        let beta = v.scalar_gram();
        Ok(GrayMap {
            field: v.field().clone(),
            m: v.rows(),
            v,
            beta,
        })
    }

    /// The identity Gray map of order m (beta = 1).
    pub fn identity(field: &Field, m: usize) -> GrayMap {
        GrayMap::new(Matrix::identity(field, m)).expect("identity is orthogonal")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn order(&self) -> usize {
        self.m
    }
    pub fn matrix(&self) -> &Matrix {
        &self.v
    }
    /// Some(beta) iff V V^T = beta I with beta nonzero.
    pub fn beta(&self) -> Option<&FieldElement> {
        self.beta.as_ref()
    }

    fn check_spec(&self, spec: &SplitSpec) -> Result<()> {
        if spec.size() != self.m || spec.field() != &self.field {
            return Err(Error::DimensionMismatch);
        }
        Ok(())
    }

    pub(crate) fn apply_raw(&self, crt: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.m];
        for (i, &a) in crt.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let v = self.v.get_raw(i, j);
                if v != 0 {
                    *slot = f.add_raw(*slot, f.mul_raw(a, v));
                }
            }
        }
        out
    }
}

/// Image of one ring element: its CRT coordinate row times V.
pub fn gray_element(r: &RingElement, gm: &GrayMap) -> Result<Vec<FieldElement>> {
    gm.check_spec(r.spec())?;
    let raw = gm.apply_raw(r.crt_raw());
    Ok(raw.into_iter().map(|v| gm.field().element(v)).collect())
}

/// Coordinatewise extension to ring vectors; the image has length m * len.
pub fn gray_vector(v: &[RingElement], gm: &GrayMap) -> Result<Vec<FieldElement>> {
    let mut out = Vec::with_capacity(v.len() * gm.order());
    for r in v {
        out.extend(gray_element(r, gm)?);
    }
    Ok(out)
}

pub(crate) fn gray_vector_raw(v: &[RingElement], gm: &GrayMap) -> Vec<u32> {
    let mut out = Vec::with_capacity(v.len() * gm.order());
    for r in v {
        out.extend(gm.apply_raw(r.crt_raw()));
    }
    out
}

/// The Gray image of an R-code as an F_q-linear code: reduced generator,
/// parity check, and the (V-independent) dimension.
#[derive(Clone, Debug)]
pub struct GrayCode {
    g: Matrix,
    h: Matrix,
    length: usize,
    dim: usize,
    /// (n, m) of the source construction.
    provenance: (usize, usize),
}

impl GrayCode {
    pub fn generator(&self) -> &Matrix {
        &self.g
    }
    pub fn parity(&self) -> &Matrix {
        &self.h
    }
    pub fn length(&self) -> usize {
        self.length
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> &Field {
        self.g.field()
    }
    pub fn source_shape(&self) -> (usize, usize) {
        self.provenance
    }
}

/// Gray-maps every row of the block generator matrix and row-reduces.
pub fn gray_code(rc: &RCode, gm: &GrayMap) -> Result<GrayCode> {
    gm.check_spec(rc.spec())?;
    let field = gm.field().clone();
    let n_gray = rc.n() * gm.order();
    let rows: Vec<Vec<u32>> = rc
        .ring_generator_matrix()
        .iter()
        .map(|row| gray_vector_raw(row, gm))
        .collect();
    let raw = Matrix::from_raw_rows(&field, rows, n_gray);
    let g = raw.row_basis();
    let dim = g.rows();
    debug_assert_eq!(
        dim,
        rc.dimension_sum(),
        "the Gray map is injective, so dim = sum of component dims"
    );
    let h = parity_check(&g)?;
    Ok(GrayCode {
        g,
        h,
        length: n_gray,
        dim,
        provenance: (rc.n(), gm.order()),
    })
}

/// Row-space equality of Phi(C-dual) and the dual of Phi(C), for any
/// invertible V. This is the workhorse behind [`duality_check`].
pub fn gray_duality_holds(rc: &RCode, gm: &GrayMap) -> Result<bool> {
    let image = gray_code(rc, gm)?;
    let dual_image = gray_code(&rc.dual(), gm)?;
    Ok(dual_image.generator().row_space_eq(image.parity()))
}

/// Checks Phi(C-dual) = (Phi C)-dual as row spaces. Requires the
/// orthogonality certificate beta; returns the verdict of the exact
/// comparison.
pub fn duality_check(rc: &RCode, gm: &GrayMap) -> Result<bool> {
    if gm.beta().is_none() {
        return Err(Error::BetaMissing);
    }
    gray_duality_holds(rc, gm)
}

/// Builds the same component codes over two rings with equal degree
/// profiles, Gray-maps both with the same V, and compares the images as
/// row spaces.
pub fn irrelevance_check(
    spec_a: &SplitSpec,
    spec_b: &SplitSpec,
    components: &[crate::codes::ComponentCode],
    n: usize,
    gm: &GrayMap,
) -> Result<bool> {
    if spec_a.m() != spec_b.m() || spec_a.field() != spec_b.field() {
        return Err(Error::DegreeProfileMismatch);
    }
    let rc_a = RCode::new(spec_a, n, components.to_vec())?;
    let rc_b = RCode::new(spec_b, n, components.to_vec())?;
    let img_a = gray_code(&rc_a, gm)?;
    let img_b = gray_code(&rc_b, gm)?;
    Ok(img_a.generator().row_space_eq(img_b.generator()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::ComponentCode;
    use crate::poly::Poly;

    fn poly(field: &Field, coeffs: &[i64]) -> Poly {
        let elems: Vec<_> = coeffs.iter().map(|&c| field.embed(c)).collect();
        Poly::from_elements(field, &elems).unwrap()
    }

    fn pm1_spec(field: &Field, k: usize) -> SplitSpec {
        let roots: Vec<Vec<FieldElement>> = (0..k)
            .map(|_| vec![field.one(), field.embed(-1)])
            .collect();
        SplitSpec::from_roots(field, &roots).unwrap()
    }

    fn matrix(field: &Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.embed(c)).collect())
            .collect();
        Matrix::from_rows(field, &rows).unwrap()
    }

    #[test]
    fn gray_element_examples() {
        let f = Field::new(19, 1).unwrap();
        let spec = pm1_spec(&f, 1);
        // V_3 = [[1,18],[1,1]] over F_19, V V^T = 2 I
        let v3 = matrix(&f, &[&[1, 18], &[1, 1]]);
        let gm = GrayMap::new(v3).unwrap();
        assert_eq!(gm.beta(), Some(&f.embed(2)));

        let zero = RingElement::zero(&spec);
        assert_eq!(
            gray_element(&zero, &gm).unwrap(),
            vec![f.zero(), f.zero()]
        );

        // row (a, b) * V = (a + b, 18a + b)
        let a = f.embed(3);
        let b = f.embed(7);
        let r = RingElement::from_components(&spec, &[a.clone(), b.clone()]).unwrap();
        let img = gray_element(&r, &gm).unwrap();
        assert_eq!(img[0], &a + &b);
        assert_eq!(img[1], &(&f.embed(18) * &a) + &b);

        // identity V returns the raw CRT row
        let id = GrayMap::identity(&f, 2);
        assert_eq!(gray_element(&r, &id).unwrap(), r.components());
    }

    #[test]
    fn singular_v_rejected() {
        let f = Field::new(5, 1).unwrap();
        let v = matrix(&f, &[&[1, 2], &[2, 4]]);
        assert!(matches!(GrayMap::new(v), Err(Error::SingularGrayMatrix)));
    }

    #[test]
    fn gray_code_dimensions() {
        let f = Field::new(5, 1).unwrap();
        let spec = pm1_spec(&f, 2);
        // all components zero -> dimension 0
        let zero_comp = ComponentCode::new(
            &f,
            4,
            &f.one(),
            &Poly::xn_minus(&f, 4, &f.one()),
        )
        .unwrap();
        let rc = RCode::new(&spec, 4, vec![zero_comp.clone(); 4]).unwrap();
        let v1 = matrix(
            &f,
            &[
                &[1, 2, 1, 1],
                &[-2, 1, 1, -1],
                &[-1, -1, 1, 2],
                &[-1, 1, -2, 1],
            ],
        );
        let gm = GrayMap::new(v1).unwrap();
        let gc = gray_code(&rc, &gm).unwrap();
        assert_eq!((gc.length(), gc.dim()), (16, 0));
    }

    #[test]
    fn gray_linearity_and_injectivity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let f = Field::new(5, 1).unwrap();
        let spec = pm1_spec(&f, 2);
        let v1 = matrix(
            &f,
            &[
                &[1, 2, 1, 1],
                &[-2, 1, 1, -1],
                &[-1, -1, 1, 2],
                &[-1, 1, -2, 1],
            ],
        );
        let gm = GrayMap::new(v1).unwrap();
        for _ in 0..200 {
            let rand_elem = |rng: &mut rand_chacha::ChaCha8Rng| {
                let comps: Vec<FieldElement> = (0..4)
                    .map(|_| f.embed(rng.random_range(0..5)))
                    .collect();
                RingElement::from_components(&spec, &comps).unwrap()
            };
            let c1 = rand_elem(&mut rng);
            let c2 = rand_elem(&mut rng);
            let a = f.embed(rng.random_range(0..5));
            let lhs = gray_element(&c1.scale(&a).try_add(&c2).unwrap(), &gm).unwrap();
            let g1 = gray_element(&c1, &gm).unwrap();
            let g2 = gray_element(&c2, &gm).unwrap();
            let rhs: Vec<FieldElement> = g1
                .iter()
                .zip(g2.iter())
                .map(|(x, y)| &(&a * x) + y)
                .collect();
            assert_eq!(lhs, rhs);
            // injectivity: Phi(c) = 0 => c = 0
            if !c1.is_zero() {
                assert!(g1.iter().any(|x| !x.is_zero()));
            }
        }
    }

    #[test]
    fn duality_with_identity_v() {
        let f = Field::new(5, 1).unwrap();
        let spec = pm1_spec(&f, 1);
        let comps = vec![
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[4, 1])).unwrap(),
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[1, 1])).unwrap(),
        ];
        let rc = RCode::new(&spec, 4, comps).unwrap();
        let gm = GrayMap::identity(&f, 2);
        assert!(duality_check(&rc, &gm).unwrap());
    }

    #[test]
    fn duality_with_orthogonal_v_on_small_code() {
        // V_1 over F_5 (V V^T = 2 I_4) on an n=4 analogue of the worked
        // four-component construction: full row-space comparison.
        let f = Field::new(5, 1).unwrap();
        let spec = pm1_spec(&f, 2);
        let comps = vec![
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[1, 1])).unwrap(),
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[3, 1])).unwrap(),
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[2, 1])).unwrap(),
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[4, 1])).unwrap(),
        ];
        let rc = RCode::new(&spec, 4, comps).unwrap();
        let v1 = matrix(
            &f,
            &[
                &[1, 2, 1, 1],
                &[-2, 1, 1, -1],
                &[-1, -1, 1, 2],
                &[-1, 1, -2, 1],
            ],
        );
        let gm = GrayMap::new(v1).unwrap();
        assert!(duality_check(&rc, &gm).unwrap());
    }

    #[test]
    fn non_orthogonal_v_can_break_duality() {
        // search 2x2 invertible V over F_5 without a scalar Gram matrix and
        // exhibit one whose Gray image does not exchange duals
        let f = Field::new(5, 1).unwrap();
        let spec = pm1_spec(&f, 1);
        let comps = vec![
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[4, 1])).unwrap(),
            ComponentCode::new(&f, 4, &f.one(), &Poly::one(&f)).unwrap(),
        ];
        let rc = RCode::new(&spec, 4, comps).unwrap();
        let mut found = false;
        'outer: for a in 0..5i64 {
            for b in 0..5i64 {
                for c in 0..5i64 {
                    for d in 0..5i64 {
                        let v = matrix(&f, &[&[a, b], &[c, d]]);
                        let Ok(gm) = GrayMap::new(v) else { continue };
                        if gm.beta().is_some() {
                            assert!(gray_duality_holds(&rc, &gm).unwrap());
                            continue;
                        }
                        assert!(matches!(
                            duality_check(&rc, &gm),
                            Err(Error::BetaMissing)
                        ));
                        if !gray_duality_holds(&rc, &gm).unwrap() {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(found, "some non-orthogonal V must break duality");
    }

    #[test]
    fn irrelevance_examples() {
        let f = Field::new(5, 1).unwrap();
        // u^2-1 (roots 1,-1) vs u^2-u (roots 0,1): same degree profile
        let spec_a = pm1_spec(&f, 1);
        let spec_b =
            SplitSpec::from_roots(&f, &[vec![f.zero(), f.one()]]).unwrap();
        let comps = vec![
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[4, 1])).unwrap(),
            ComponentCode::new(&f, 4, &f.one(), &poly(&f, &[1, 1])).unwrap(),
        ];
        let v6 = matrix(&f, &[&[1, 4], &[1, 1]]);
        let gm = GrayMap::new(v6).unwrap();
        // identical specs: trivially equal
        assert!(irrelevance_check(&spec_a, &spec_a, &comps, 4, &gm).unwrap());
        // different split polynomials, same profile: images coincide
        assert!(irrelevance_check(&spec_a, &spec_b, &comps, 4, &gm).unwrap());
        // profile mismatch (2,2) vs (4,)
        let spec_c = pm1_spec(&f, 2);
        let spec_d = SplitSpec::from_roots(
            &f,
            &[vec![f.zero(), f.one(), f.embed(2), f.embed(3)]],
        )
        .unwrap();
        assert!(matches!(
            irrelevance_check(&spec_c, &spec_d, &comps, 4, &gm),
            Err(Error::DegreeProfileMismatch)
        ));
    }
}
