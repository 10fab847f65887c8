//! Exact Gaussian elimination, just enough for rank computations.

use crate::scalar::Scalar;

/// Rank of a dense row-major matrix over an exact field.
pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / head.clone();
            let (top, rest) = rows.split_at_mut(r);
            for (x, p) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
