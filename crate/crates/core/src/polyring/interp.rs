//! Dense interpolation, univariate and on a rectangular grid.

use alloc::vec::Vec;

use crate::exactfield::Field;

use super::bivariate::Poly2;
use super::{Poly, PolyError};

/// The unique polynomial of degree ≤ `n` through `points`. Extra points are
/// used as a consistency check.
pub fn interpolate<F: Field>(points: &[(F, F)], n: usize) -> Result<Poly<F>, PolyError> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(PolyError::DuplicateAbscissa);
        }
    }
    if points.len() < n + 1 {
        return Err(PolyError::NotEnoughPoints {
            needed: n + 1,
            got: points.len(),
        });
    }
    let used = &points[..n + 1];
    // Newton divided differences.
    let xs: Vec<F> = used.iter().map(|(x, _)| x.clone()).collect();
    let mut dd: Vec<F> = used.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..=n {
        for i in (level..=n).rev() {
            let num = dd[i].clone() - &dd[i - 1];
            let den = xs[i].clone() - &xs[i - level];
            dd[i] = num.checked_div(&den).expect("distinct abscissae");
        }
    }
    let mut p = Poly::constant(dd[n].clone());
    for i in (0..n).rev() {
        let lin = Poly::new(alloc::vec![-xs[i].clone(), F::one()]);
        p = &(&p * &lin) + &Poly::constant(dd[i].clone());
    }
    for (x, y) in &points[n + 1..] {
        if p.eval(x) != *y {
            return Err(PolyError::InconsistentData);
        }
    }
    Ok(p)
}

/// Interpolates values[i][j] = P(xs[i], ys[j]) with deg_x P ≤ dx and
/// deg_y P ≤ dy. Surplus grid lines act as a consistency check.
pub fn interpolate_grid<F: Field>(
    xs: &[F],
    ys: &[F],
    values: &[Vec<F>],
    dx: usize,
    dy: usize,
) -> Result<Poly2<F>, PolyError> {
    // First along x for every fixed y, then each x-coefficient along y.
    let mut by_y: Vec<Poly<F>> = Vec::with_capacity(ys.len());
    for (j, _) in ys.iter().enumerate() {
        let pts: Vec<(F, F)> = xs
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), values[i][j].clone()))
            .collect();
        by_y.push(interpolate(&pts, dx)?);
    }
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(dx + 1);
    for k in 0..=dx {
        let pts: Vec<(F, F)> = ys
            .iter()
            .zip(by_y.iter())
            .map(|(y, p)| (y.clone(), p.coeff(k)))
            .collect();
        let c = interpolate(&pts, dy)?;
        let mut row = c.into_coeffs();
        row.resize(dy + 1, F::zero());
        rows.push(row);
    }
    Ok(Poly2::new(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};
    use proptest::prelude::*;

    type P = Poly<Rational>;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(a, b)| (rat(a, 1), rat(b, 1))).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(interpolate(&pts(&[(0, 1), (1, 1)]), 1).unwrap(), P::from_i64s(&[1]));
        assert_eq!(
            interpolate(&pts(&[(0, 0), (1, 1), (2, 4)]), 2).unwrap(),
            P::from_i64s(&[0, 0, 1])
        );
        assert_eq!(
            interpolate(&pts(&[(0, 0), (0, 1)]), 1),
            Err(PolyError::DuplicateAbscissa)
        );
        assert_eq!(
            interpolate(&pts(&[(0, 0), (1, 1), (2, 4)]), 1),
            Err(PolyError::InconsistentData)
        );
    }

    #[test]
    fn grid() {
        // P(x, y) = 1 + 2xy − y²
        let f = |x: i64, y: i64| rat(1 + 2 * x * y - y * y, 1);
        let xs: Vec<Rational> = (0..4).map(|v| rat(v, 1)).collect();
        let ys: Vec<Rational> = (0..4).map(|v| rat(v, 1)).collect();
        let vals: Vec<Vec<Rational>> = (0..4).map(|i| (0..4).map(|j| f(i, j)).collect()).collect();
        let p = interpolate_grid(&xs, &ys, &vals, 2, 2).unwrap();
        assert_eq!(p.coeff(0, 0), rat(1, 1));
        assert_eq!(p.coeff(1, 1), rat(2, 1));
        assert_eq!(p.coeff(0, 2), rat(-1, 1));
        assert_eq!(p.eval(&rat(5, 1), &rat(-3, 1)), rat(1 - 30 - 9, 1));
    }

    proptest! {
        #[test]
        fn recovers_polynomial(c in proptest::collection::vec(-20i64..20, 1..8), extra in 1usize..4) {
            let p = P::from_i64s(&c);
            let n = c.len() - 1;
            let samples: Vec<(Rational, Rational)> = (0..(n + 1 + extra) as i64)
                .map(|x| (rat(x, 1), p.eval(&rat(x, 1))))
                .collect();
            prop_assert_eq!(interpolate(&samples, n).unwrap(), p);
        }
    }
}
