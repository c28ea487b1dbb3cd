//! Brute-force verification oracles, deliberately independent of the main
//! algorithm paths: codeword enumeration for distances and inner-product
//! scans for duality. Feasible only at small sizes; used by the test suites
//! and the self-check command.

use crate::galois::FieldElement;
use crate::matrix::Matrix;

/// Minimum Hamming weight over all q^k nonzero codewords of the row space
/// of `g`, by exhaustive message enumeration with incremental updates.
/// None when the code is zero-dimensional. Cost q^k * n; keep q^k small.
pub fn exhaustive_min_weight(g: &Matrix) -> Option<usize> {
    let k = g.rows();
    if k == 0 {
        return None;
    }
    let f = g.field().clone();
    let q = f.q() as usize;
    let n = g.cols();
    let mut message = vec![0usize; k];
    let mut word = vec![0u32; n];
    let mut best = usize::MAX;
    // odometer over messages; each step adds one generator row
    loop {
        // increment
        let mut i = 0;
        loop {
            if i == k {
                return if best == usize::MAX { None } else { Some(best) };
            }
            message[i] += 1;
            for (slot, &v) in word.iter_mut().zip(g.row_raw(i).iter()) {
                if v != 0 {
                    *slot = f.add_raw(*slot, v);
                }
            }
            if message[i] < q {
                break;
            }
            message[i] = 0;
            i += 1;
        }
        let w = word.iter().filter(|&&v| v != 0).count();
        if w > 0 && w < best {
            best = w;
            if best == 1 {
                return Some(1);
            }
        }
    }
}

/// All q^k codewords (including zero) of the row space of `g`, sorted.
/// For set-equality cross-checks at small sizes.
pub fn enumerate_codewords(g: &Matrix) -> Vec<Vec<u32>> {
    let k = g.rows();
    let f = g.field().clone();
    let q = f.q() as usize;
    let n = g.cols();
    let mut out = Vec::new();
    let mut message = vec![0usize; k];
    let mut word = vec![0u32; n];
    out.push(word.clone());
    'outer: loop {
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            message[i] += 1;
            for (slot, &v) in word.iter_mut().zip(g.row_raw(i).iter()) {
                if v != 0 {
                    *slot = f.add_raw(*slot, v);
                }
            }
            if message[i] < q {
                break;
            }
            message[i] = 0;
            i += 1;
        }
        out.push(word.clone());
    }
    out.sort();
    out.dedup();
    out
}

/// Every row of `a` orthogonal to every row of `b` under the Euclidean
/// inner product.
pub fn all_rows_orthogonal(a: &Matrix, b: &Matrix) -> bool {
    let f = a.field().clone();
    for i in 0..a.rows() {
        for j in 0..b.rows() {
            let mut acc = 0u32;
            for c in 0..a.cols() {
                acc = f.add_raw(acc, f.mul_raw(a.get_raw(i, c), b.get_raw(j, c)));
            }
            if acc != 0 {
                return false;
            }
        }
    }
    true
}

/// Inner product of two typed vectors.
pub fn inner_product(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    assert_eq!(a.len(), b.len());
    let f = a[0].field().clone();
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc = &acc + &(x * y);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    #[test]
    fn min_weight_of_small_code() {
        let f = Field::new(5, 1).unwrap();
        let rows = vec![
            vec![f.one(), f.one(), f.zero(), f.zero()],
            vec![f.zero(), f.zero(), f.one(), f.embed(2)],
        ];
        let g = Matrix::from_rows(&f, &rows).unwrap();
        assert_eq!(exhaustive_min_weight(&g), Some(2));
        assert_eq!(enumerate_codewords(&g).len(), 25);
    }
}
