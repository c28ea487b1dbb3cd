//! Constacyclic codes over split non-chain rings
//! F_q[u_1,...,u_k]/<f_i(u_i), u_i u_j - u_j u_i>, their Gray images over
//! F_q, and the quantum code parameters obtained from dual-containing
//! constructions via the CSS recipe.
//!
//! The pipeline is: exact field arithmetic ([`galois`]) -> polynomial
//! factorization ([`poly`], [`factor`]) -> the split ring and its
//! idempotents ([`ringdec`]) -> component constacyclic codes glued over the
//! ring ([`codes`]) -> Gray images and minimum distances ([`gray`],
//! [`distance`]) -> quantum parameters ([`css`]). Everything is exact and
//! deterministic given a seed.

pub mod codes;
pub mod css;
pub mod distance;
pub mod error;
pub mod factor;
pub mod galois;
pub mod gray;
pub mod matrix;
pub mod notation;
pub mod oracle;
pub mod poly;
pub mod ringdec;

pub use codes::{
    parity_check, sigma_shift, sigma_shift_ring, ComponentCode, ContainmentReport, RCode,
    RPoly, RingGenerator,
};
pub use css::{css_params, mds_family, QuantumParams};
pub use distance::{min_distance, min_distance_of, DistanceReport, DistanceStatus, Witness};
pub use error::{Error, Result};
pub use factor::{factor, is_irreducible, Factorization};
pub use galois::{split_prime_power, ArithOp, Field, FieldElement};
pub use gray::{
    duality_check, gray_code, gray_duality_holds, gray_element, gray_vector,
    irrelevance_check, GrayCode, GrayMap,
};
pub use matrix::Matrix;
pub use notation::{format_gpoly, parse_gpoly};
pub use poly::{reciprocal_dual, Poly};
pub use ringdec::{
    assemble_unit, epsilon, eta, verify_idempotents, IdempotentCheck, IdempotentReport,
    MultiIndex, MultivarPoly, RingElement, SplitSpec,
};
