//! Gaussian elimination over the prime field F_p.
//!
//! Only what the linearized-equation solver needs: given a square system
//! M x = b over F_p, produce one particular solution plus a kernel basis,
//! or report inconsistency.

use crate::util::modpow;

pub(crate) struct LinSolution {
    pub particular: Vec<u64>,
    /// Basis vectors of the kernel; the full solution set is the particular
    /// solution plus every F_p-combination of these.
    pub kernel: Vec<Vec<u64>>,
}

/// Solves M x = rhs over F_p for a square row-major matrix.
pub(crate) fn solve_mod_p(p: u64, matrix: &[Vec<u64>], rhs: &[u64]) -> Option<LinSolution> {
    let n = matrix.len();
    debug_assert!(matrix.iter().all(|row| row.len() == n) && rhs.len() == n);
    // Augmented matrix, reduced to row echelon form.
    let mut aug: Vec<Vec<u64>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r: Vec<u64> = row.iter().map(|&c| c % p).collect();
            r.push(b % p);
            r
        })
        .collect();

    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pivot) = (row..n).find(|&r| aug[r][col] != 0) else {
            continue;
        };
        aug.swap(row, pivot);
        let inv = modpow(aug[row][col], p - 2, p);
        for v in &mut aug[row][col..=n] {
            *v = *v * inv % p;
        }
        let pivot_row = aug[row].clone();
        for (r, other) in aug.iter_mut().enumerate() {
            if r != row && other[col] != 0 {
                let f = other[col];
                for (v, &pv) in other[col..=n].iter_mut().zip(&pivot_row[col..=n]) {
                    *v = (*v + (p - f) * pv) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }

    // A zero row with nonzero right-hand side means no solution.
    if aug[row..n].iter().any(|r| r[n] != 0) {
        return None;
    }

    let mut particular = vec![0u64; n];
    for (r, &col) in pivot_col_of_row.iter().enumerate() {
        particular[col] = aug[r][n];
    }

    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut kernel = Vec::new();
    for free_col in 0..n {
        if pivot_cols.contains(&free_col) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free_col] = 1;
        for (r, &col) in pivot_col_of_row.iter().enumerate() {
            // pivot variable = -coefficient of the free column.
            v[col] = (p - aug[r][free_col]) % p;
        }
        kernel.push(v);
    }

    Some(LinSolution { particular, kernel })
}
