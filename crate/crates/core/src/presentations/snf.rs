use alloc::vec::Vec;

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) of an integer matrix.
pub fn smith_invariants(rows: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // Divisibility: fold any entry not divisible by the pivot into row t.
                let bad = (t + 1..m).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Bring the smallest remaining entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..m {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(smith_invariants(&[alloc::vec![2, 4], alloc::vec![4, 2]], 2), [2, 6]);
        assert_eq!(smith_invariants(&[alloc::vec![2]], 1), [2]);
        assert_eq!(smith_invariants(&[alloc::vec![0, 0]], 2), Vec::<i128>::new());
        assert_eq!(smith_invariants(&[alloc::vec![2, 0], alloc::vec![0, 3]], 2), [1, 6]);
    }
}
