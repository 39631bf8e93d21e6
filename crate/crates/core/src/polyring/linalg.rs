//! Dense linear algebra over a field by Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::Field;

use super::PolyError;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = v.clone() * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(pivot_row.iter()) {
                if !pv.is_zero() {
                    *v -= &(f.clone() * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel {v : M v = 0}.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves M x = b. The system may be overdetermined but must be consistent
/// and have a unique solution.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Vec<F>, PolyError> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return Err(PolyError::InconsistentData);
    }
    if pivots.len() < cols {
        return Err(PolyError::SingularSystem);
    }
    Ok((0..cols).map(|i| aug[i][cols].clone()).collect())
}

/// Determinant by elimination.
pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].inv().expect("pivot is nonzero");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * &inv;
            for j in c..n {
                let t = f.clone() * &a[c][j];
                a[i][j] -= &t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), rat(-2, 1));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), rat(-1, 1));
        assert_eq!(determinant(&m(&[&[2, 0, 0], &[0, 3, 0], &[1, 1, 1]])), rat(6, 1));
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = nullspace(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let s: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert_eq!(s, rat(0, 1));
            }
        }
        let sys = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = solve(&sys, &[rat(3, 1), rat(1, 1), rat(4, 1)]).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(1, 1)]);
        assert_eq!(
            solve(&sys, &[rat(3, 1), rat(1, 1), rat(5, 1)]),
            Err(PolyError::InconsistentData)
        );
        assert_eq!(
            solve(&m(&[&[1, 1], &[2, 2]]), &[rat(1, 1), rat(2, 1)]),
            Err(PolyError::SingularSystem)
        );
    }
}
