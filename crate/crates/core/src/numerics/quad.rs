use num_complex::Complex64;

use super::grid::Grid1D;
use crate::error::{Error, Result};

/// Composite Simpson quadrature of samples on a uniform grid. Requires an
/// odd sample count; the error is O(h^4) for smooth integrands and exact for
/// cubics.
pub fn quadrature(grid: &Grid1D, samples: &[Complex64]) -> Result<Complex64> {
    if samples.len() != grid.count() {
        return Err(Error::Domain(format!(
            "expected {} samples, got {}",
            grid.count(),
            samples.len()
        )));
    }
    if samples.len() % 2 == 0 {
        return Err(Error::Parity(samples.len()));
    }
    let mut acc = samples[0] + samples[samples.len() - 1];
    for (i, s) in samples.iter().enumerate().skip(1).take(samples.len() - 2) {
        acc += *s * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    Ok(acc * (grid.spacing() / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sample(grid: &Grid1D, f: impl Fn(f64) -> f64) -> Vec<Complex64> {
        grid.points().map(|x| Complex64::new(f(x), 0.0)).collect()
    }

    #[test]
    fn integral_of_sine() {
        let g = Grid1D::new(0.0, PI, 1001).unwrap();
        let v = quadrature(&g, &sample(&g, f64::sin)).unwrap();
        assert!((v.re - 2.0).abs() < 1e-8);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn truncated_gaussian() {
        let g = Grid1D::new(-12.0, 12.0, 4801).unwrap();
        let v = quadrature(&g, &sample(&g, |x| (-x * x).exp())).unwrap();
        assert!((v.re - PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn exact_on_cubics() {
        let g = Grid1D::new(-1.0, 2.0, 17).unwrap();
        let v = quadrature(&g, &sample(&g, |x| 3.0 * x * x * x - x * x + 2.0 * x - 5.0)).unwrap();
        // \int_{-1}^{2} = 3/4 x^4 - x^3/3 + x^2 - 5x
        let anti = |x: f64| 0.75 * x.powi(4) - x.powi(3) / 3.0 + x * x - 5.0 * x;
        assert!((v.re - (anti(2.0) - anti(-1.0))).abs() < 1e-12);
    }

    #[test]
    fn even_count_rejected() {
        let g = Grid1D::new(0.0, 1.0, 100).unwrap();
        let s = sample(&g, |_| 1.0);
        assert_eq!(quadrature(&g, &s), Err(Error::Parity(100)));
    }
}
