//! Bit-packed Gauss-Jordan elimination for `p = 2`.

use super::matrix::FpMatrix;

/// Rows of the reduced matrix in the caller's column layout, plus pivots.
pub(super) fn rref_packed(m: &FpMatrix, order: &[usize]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let cols = m.cols();
    let words = cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .row_iter()
        .map(|row| {
            let mut packed = vec![0u64; words];
            for (j, &c) in order.iter().enumerate() {
                if row[c] & 1 == 1 {
                    packed[j / 64] |= 1 << (j % 64);
                }
            }
            packed
        })
        .collect();

    let mut pivots = Vec::new();
    let mut rank = 0;
    for j in 0..cols {
        if rank == rows.len() {
            break;
        }
        let (w, bit) = (j / 64, 1u64 << (j % 64));
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot, tail) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[w] & bit != 0 {
                // earlier words of the pivot row are already zero
                for k in w..words {
                    other[k] ^= pivot[k];
                }
            }
        }
        pivots.push(order[j]);
        rank += 1;
    }

    let out = rows[..rank]
        .iter()
        .map(|packed| {
            let mut row = vec![0u32; cols];
            for (j, &c) in order.iter().enumerate() {
                row[c] = ((packed[j / 64] >> (j % 64)) & 1) as u32;
            }
            row
        })
        .collect();
    (out, pivots)
}
