//! Homogeneous linear systems over GF(3), solved by Gaussian elimination.

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row.
pub fn row_reduce(rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        // 2 is its own inverse mod 3
        if rows[r][col] == 2 {
            for x in rows[r].iter_mut() {
                *x = (*x * 2) % 3;
            }
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for c in 0..ncols {
                    rows[i][c] = (rows[i][c] + (3 - factor) * rows[r][c]) % 3;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// All solutions of the reduced homogeneous system, enumerated in
/// lexicographic order of the free-variable assignment. `rows` must be in
/// reduced row echelon form with the given pivot columns.
pub fn kernel_solutions(rows: &[Vec<u8>], pivots: &[usize], ncols: usize) -> Vec<Vec<u8>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let total = 3usize.pow(free.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut sol = vec![0u8; ncols];
        for &c in free.iter().rev() {
            sol[c] = (idx % 3) as u8;
            idx /= 3;
        }
        for (row, &p) in rows.iter().zip(pivots.iter()) {
            let mut acc = 0u8;
            for &c in &free {
                acc = (acc + row[c] * sol[c]) % 3;
            }
            sol[p] = (3 - acc) % 3;
        }
        out.push(sol);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_size() {
        // x + y + z = 0 over GF(3): rank 1, kernel 3^2
        let mut rows = vec![vec![1, 1, 1]];
        let pivots = row_reduce(&mut rows);
        assert_eq!(pivots, vec![0]);
        let sols = kernel_solutions(&rows, &pivots, 3);
        assert_eq!(sols.len(), 9);
        for s in &sols {
            assert_eq!((s[0] + s[1] + s[2]) % 3, 0);
        }
    }

    #[test]
    fn dependent_rows_collapse() {
        let mut rows = vec![vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 0]];
        let pivots = row_reduce(&mut rows);
        assert_eq!(pivots.len(), 1);
    }
}
