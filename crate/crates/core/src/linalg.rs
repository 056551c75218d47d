//! Exact Gauss-Jordan elimination over Q(sqrt 2).

use crate::scalar::Scalar;

/// A consistent system's solution: free variables are set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<Scalar>,
    pub rank: usize,
    /// Columns without a pivot.
    pub free: Vec<usize>,
}

/// Solves `rows * v = rhs` where each row has `ncols` entries.
/// Returns `None` when the system is inconsistent.
pub fn solve(mut rows: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>, ncols: usize) -> Option<Solution> {
    debug_assert_eq!(rows.len(), rhs.len());
    let nrows = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for v in rows[r][col..].iter_mut() {
            *v = &*v * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        let (pivot_row, pivot_rhs) = (rows[r].clone(), rhs[r].clone());
        for i in 0..nrows {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    rows[i][c] -= &(&factor * pv);
                }
            }
            rhs[i] -= &(&factor * &pivot_rhs);
        }
        pivots.push((r, col));
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut values = vec![Scalar::zero(); ncols];
    let mut is_pivot = vec![false; ncols];
    for &(row, col) in &pivots {
        values[col] = rhs[row].clone();
        is_pivot[col] = true;
    }
    Some(Solution {
        values,
        rank: pivots.len(),
        free: (0..ncols).filter(|&c| !is_pivot[c]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let sol = solve(vec![vec![s(1), s(1)], vec![s(1), s(-1)]], vec![s(3), s(1)], 2).unwrap();
        assert_eq!(sol.values, vec![s(2), s(1)]);
        assert_eq!(sol.rank, 2);
        assert!(sol.free.is_empty());
    }

    #[test]
    fn inconsistent() {
        assert!(solve(vec![vec![s(1)], vec![s(2)]], vec![s(1), s(1)], 1).is_none());
    }

    #[test]
    fn free_variable_reported() {
        let sol = solve(vec![vec![s(1), s(1)]], vec![s(2)], 2).unwrap();
        assert_eq!(sol.free, vec![1]);
        assert_eq!(sol.values, vec![s(2), s(0)]);
    }
}
