//! Rank of a set of bit vectors over the two-element field.

/// Rank by Gaussian elimination. Each row is a little-endian word vector;
/// `width` is the number of meaningful columns.
pub(crate) fn rank(mut rows: Vec<Vec<u64>>, width: usize) -> usize {
    let words = width.div_ceil(64).max(1);
    debug_assert!(rows.iter().all(|r| r.len() == words));
    let mut rank = 0;
    for col in 0..width {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] >> b & 1 == 1 {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(bits: &[usize], width: usize) -> Vec<u64> {
        let mut r = vec![0u64; width.div_ceil(64).max(1)];
        for &b in bits {
            r[b / 64] |= 1 << (b % 64);
        }
        r
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![row(&[0, 1], 3), row(&[1, 2], 3), row(&[0, 2], 3)];
        assert_eq!(rank(rows, 3), 2);
    }

    #[test]
    fn rank_of_identity() {
        let rows = (0..5).map(|i| row(&[i], 5)).collect();
        assert_eq!(rank(rows, 5), 5);
    }

    #[test]
    fn zero_rows_and_wide_vectors() {
        assert_eq!(rank(vec![], 10), 0);
        let rows = vec![row(&[0, 100], 128), row(&[100], 128), row(&[0], 128)];
        assert_eq!(rank(rows, 128), 2);
    }
}
