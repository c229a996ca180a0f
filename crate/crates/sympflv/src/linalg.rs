//! Exact linear algebra over the rationals.
//!
//! Plain Gaussian elimination on [`Rat`] entries: every routine here is
//! deterministic (pivots are chosen in index order) and exact, which is what
//! the cone and kernel computations downstream rely on.

use num::{One, Zero};

use crate::rat::{primitive_scale, Rat};

/// Reduced row echelon form, in place.  Returns the pivot columns in order.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Rank of the matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of the right kernel `{x : A x = 0}`.
///
/// One primitive integer vector per free column, emitted in column order.
pub fn kernel_basis(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let is_pivot = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut x = vec![Rat::zero(); ncols];
        x[free] = Rat::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            // row reads: x[pc] + sum_{c > pc, non-pivot} row[c] * x[c] = 0
            x[pc] = -row[free].clone();
        }
        basis.push(primitive_scale(&x));
    }
    basis
}

/// Solves `A x = b` exactly.
///
/// Returns `None` when the system is inconsistent.  When the solution space
/// is positive-dimensional the free coordinates are set to zero, so the
/// output is still deterministic; callers that need uniqueness should check
/// `rank(a) == ncols` themselves.
pub fn solve(a: &[Vec<Rat>], b: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    assert_eq!(a.len(), b.len(), "solve: row count mismatch");
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&ncols) {
        return None; // a pivot in the augmented column: inconsistent
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &pc) in m.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// True if `v` lies in the row space of `rows`.
pub fn in_row_space(rows: &[Vec<Rat>], v: &[Rat]) -> bool {
    let base = rank(rows);
    let mut with = rows.to_vec();
    with.push(v.to_vec());
    rank(&with) == base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let id = m(&[&[1, 0], &[0, 1]]);
        assert!(kernel_basis(&id, 2).is_empty());
    }

    #[test]
    fn kernel_of_zero_row_is_full() {
        let z = m(&[&[0, 0, 0]]);
        let k = kernel_basis(&z, 3);
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            let mut e = vec![rat(0); 3];
            e[i] = rat(1);
            assert_eq!(*v, e);
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3, 0], &[0, 1, 1, -1], &[1, 3, 4, -1]]);
        let k = kernel_basis(&a, 4);
        assert_eq!(k.len(), 2); // rank 2
        for v in &k {
            for row in &a {
                assert!(crate::rat::dot(row, v).is_zero());
            }
        }
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let a = m(&[&[2, 0], &[1, 1]]);
        let x = solve(&a, &[rat(4), rat(5)], 2).unwrap();
        assert_eq!(x, vec![rat(2), rat(3)]);

        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &[rat(1), rat(3)], 2).is_none());
    }

    #[test]
    fn row_space_membership() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(in_row_space(&a, &[rat(2), rat(3), rat(5)]));
        assert!(!in_row_space(&a, &[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 2], &[0, 1]])), 2);
    }
}
