//! Quantum code parameters from dual-containing classical codes: an
//! [n, l, d] code with C-perp inside C yields [[n, 2l-n, d]]_q, and the
//! MDS / Almost MDS flags read off the singleton bound l + 2d <= n + 2.

use std::fmt;

use crate::codes::{ComponentCode, ContainmentReport, RCode};
use crate::distance::{min_distance, DistanceReport, DistanceStatus};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::gray::{gray_code, GrayCode, GrayMap};
use crate::ringdec::SplitSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u64,
    /// k + 2d = n + 2.
    pub is_mds: bool,
    /// k + 2d = n.
    pub is_almost_mds: bool,
    /// False when d is only a lower bound.
    pub d_exact: bool,
    /// Weight of the best upper-bound witness when d is not exact.
    pub d_upper: Option<usize>,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d_exact {
            write!(f, "[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
        } else {
            write!(f, "[[{},{},>={}]]_{}", self.n, self.k, self.d, self.q)
        }
    }
}

/// CSS parameters of the Gray image: requires the dual-containment
/// certificate, and an exact distance unless `allow_bounds` opts into
/// bound-tagged output.
pub fn css_params(
    gc: &GrayCode,
    dr: &DistanceReport,
    cert: &ContainmentReport,
    allow_bounds: bool,
) -> Result<QuantumParams> {
    if !cert.all_contained() {
        return Err(Error::NotDualContaining);
    }
    let exact = dr.status == DistanceStatus::Exact;
    if !exact && !allow_bounds {
        return Err(Error::UnresolvedDistance);
    }
    let n = gc.length();
    let l = gc.dim();
    if 2 * l < n {
        return Err(Error::NegativeQuantumDimension);
    }
    let k = 2 * l - n;
    let d = dr.d;
    let (is_mds, is_almost_mds) = if exact {
        debug_assert!(k + 2 * d <= n + 2, "singleton bound");
        (k + 2 * d == n + 2, k + 2 * d == n)
    } else {
        (false, false)
    };
    Ok(QuantumParams {
        n,
        k,
        d,
        q: gc.field().q(),
        is_mds,
        is_almost_mds,
        d_exact: exact,
        d_upper: if exact {
            None
        } else {
            dr.upper_witness.as_ref().map(|w| w.weight)
        },
    })
}

/// The always-available MDS family: for p | n, the even-weight-style code
/// <x-1> over F_q is dual-containing and its CSS image is [[n, n-2, 2]]_q.
pub fn mds_family(n: usize, field: &Field) -> Result<QuantumParams> {
    if n == 0 || n as u64 % field.p() != 0 {
        return Err(Error::GcdCoprime);
    }
    let g = crate::poly::Poly::from_elements(field, &[field.embed(-1), field.one()])?;
    let comp = ComponentCode::new(field, n, &field.one(), &g)?;
    debug_assert!(comp.is_dual_containing()?);
    let spec = SplitSpec::from_roots(field, &[vec![field.zero()]])?;
    let rc = RCode::new(&spec, n, vec![comp])?;
    let cert = rc.certify_dual_containing()?;
    let gc = gray_code(&rc, &GrayMap::identity(field, 1))?;
    let dr = min_distance(&gc, 2, 1 << 32, 0)?;
    let params = css_params(&gc, &dr, &cert, false)?;
    debug_assert!(params.is_mds);
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parity_check;

    #[test]
    fn mds_family_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let p = mds_family(60, &f5).unwrap();
        assert_eq!((p.n, p.k, p.d), (60, 58, 2));
        assert!(p.is_mds);
        assert_eq!(p.to_string(), "[[60,58,2]]_5");

        let p = mds_family(180, &f5).unwrap();
        assert_eq!((p.n, p.k, p.d), (180, 178, 2));

        assert!(matches!(mds_family(7, &f5), Err(Error::GcdCoprime)));
    }

    #[test]
    fn mds_family_independent_containment_check() {
        // rank route: the dual basis lies inside the primal row space
        for (n, q) in [(10usize, 5u64), (14, 7), (15, 25)] {
            let (p, e) = crate::galois::split_prime_power(q).unwrap();
            let field = Field::new(p, e).unwrap();
            let g = crate::poly::Poly::from_elements(
                &field,
                &[field.embed(-1), field.one()],
            )
            .unwrap();
            let comp = ComponentCode::new(&field, n, &field.one(), &g).unwrap();
            let gm = comp.generator_matrix();
            let dual = comp.dual().generator_matrix();
            for r in 0..dual.rows() {
                assert!(gm.row_space_contains(&dual.row(r)).unwrap());
            }
            assert!(mds_family(n, &field).unwrap().is_mds);
        }
    }

    #[test]
    fn css_refusals() {
        let f = Field::new(5, 1).unwrap();
        let spec = SplitSpec::from_roots(&f, &[vec![f.zero()]]).unwrap();
        // not dual-containing: the zero-dimension-deficient <x^n - 1> dual
        // is the full space
        let comp = ComponentCode::new(
            &f,
            4,
            &f.one(),
            &crate::poly::Poly::xn_minus(&f, 4, &f.one()),
        )
        .unwrap();
        let rc = RCode::new(&spec, 4, vec![comp]).unwrap();
        let cert = rc.certify_dual_containing().unwrap();
        assert!(!cert.all_contained());

        // a dual-containing code with an unresolved distance is refused
        // unless bounds are allowed
        let g = crate::poly::Poly::from_elements(&f, &[f.embed(-1), f.one()]).unwrap();
        let comp = ComponentCode::new(&f, 10, &f.one(), &g).unwrap();
        let rc = RCode::new(&spec, 10, vec![comp]).unwrap();
        let cert = rc.certify_dual_containing().unwrap();
        let gc = gray_code(&rc, &GrayMap::identity(&f, 1)).unwrap();
        let h = parity_check(gc.generator()).unwrap();
        assert_eq!(h.rows(), 1);
        let dr = min_distance(&gc, 1, 1 << 20, 0).unwrap();
        assert_eq!(dr.status, crate::distance::DistanceStatus::LowerBoundOnly);
        assert!(matches!(
            css_params(&gc, &dr, &cert, false),
            Err(Error::UnresolvedDistance)
        ));
        let tagged = css_params(&gc, &dr, &cert, true).unwrap();
        assert!(!tagged.d_exact);
        assert!(tagged.d_upper.is_some());
    }
}
