use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point at which an ODE residual is evaluated, together with the unit
/// direction along which finite differences are taken (1 on the real line,
/// the ray direction on a contour leg).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualPoint {
    pub x: Complex64,
    pub direction: Complex64,
}

impl ResidualPoint {
    pub fn on_real_axis(x: f64) -> Self {
        ResidualPoint {
            x: Complex64::new(x, 0.0),
            direction: Complex64::new(1.0, 0.0),
        }
    }

    pub fn along(x: Complex64, direction: Complex64) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::Domain("residual direction must be a nonzero vector".into()));
        }
        Ok(ResidualPoint {
            x,
            direction: direction / n,
        })
    }
}

type PairFn<'a> = &'a dyn Fn(Complex64) -> Result<(Complex64, Complex64)>;
type PotFn<'a> = &'a dyn Fn(Complex64) -> Result<Complex64>;

/// Maximum relative residual of -u''/2 + V u - E u over the given points,
/// normalized by max(|V u|, |E u|, 1e-300) pointwise. The second derivative
/// comes from 5-point central differences at steps h and 2h combined by
/// Richardson extrapolation (h = 1e-4 by default).
pub fn ode_residual(u: PairFn, v: PotFn, energy: f64, points: &[ResidualPoint]) -> Result<f64> {
    residual_impl(u, v, energy, points, 1e-4, true)
}

/// [`ode_residual`] with an explicit base step. The f64 rounding floor of
/// the stencil scales like eps/h^2, so residual bounds tighter than ~1e-7
/// need a step above the 1e-4 default.
pub fn ode_residual_with_step(
    u: PairFn,
    v: PotFn,
    energy: f64,
    points: &[ResidualPoint],
    h: f64,
) -> Result<f64> {
    residual_impl(u, v, energy, points, h, true)
}

/// Same residual with the raw 4th-order stencil at step `h` (no Richardson
/// extrapolation); used by the h-refinement convergence checks.
pub fn ode_residual_fd4(
    u: PairFn,
    v: PotFn,
    energy: f64,
    points: &[ResidualPoint],
    h: f64,
) -> Result<f64> {
    residual_impl(u, v, energy, points, h, false)
}

fn residual_impl(
    u: PairFn,
    v: PotFn,
    energy: f64,
    points: &[ResidualPoint],
    h: f64,
    richardson: bool,
) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::Domain("ode_residual needs at least one point".into()));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain(format!("invalid finite-difference step {h}")));
    }
    let mut worst = 0.0f64;
    for p in points {
        let val = |s: f64| -> Result<Complex64> { Ok(u(p.x + p.direction * s)?.0) };
        let u0 = val(0.0)?;
        let d2_s = if richardson {
            let dh = second_derivative_fd4(&val, h)?;
            let d2h = second_derivative_fd4(&val, 2.0 * h)?;
            (dh * 16.0 - d2h) / 15.0
        } else {
            second_derivative_fd4(&val, h)?
        };
        // d^2/dx^2 = (d^2/ds^2) / direction^2 for analytic u along the ray.
        let upp = d2_s / (p.direction * p.direction);
        let vu = v(p.x)? * u0;
        let eu = u0 * energy;
        let num = (-upp * 0.5 + vu - eu).norm();
        let den = vu.norm().max(eu.norm()).max(1e-300);
        worst = worst.max(num / den);
    }
    Ok(worst)
}

fn second_derivative_fd4(f: &dyn Fn(f64) -> Result<Complex64>, h: f64) -> Result<Complex64> {
    let m2 = f(-2.0 * h)?;
    let m1 = f(-h)?;
    let z0 = f(0.0)?;
    let p1 = f(h)?;
    let p2 = f(2.0 * h)?;
    Ok((-m2 + m1 * 16.0 - z0 * 30.0 + p1 * 16.0 - p2) / (12.0 * h * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_seed(x: Complex64) -> Result<(Complex64, Complex64)> {
        // u = e^{x^2/2} solves -u''/2 + (x^2/2) u = -(1/2) u.
        let u = (x * x * 0.5).exp();
        Ok((u, x * u))
    }

    fn harmonic_v(x: Complex64) -> Result<Complex64> {
        Ok(x * x * 0.5)
    }

    #[test]
    fn exact_seed_has_tiny_residual() {
        let pts: Vec<ResidualPoint> = [-3.0, -1.2, 0.4, 2.0, 3.5]
            .iter()
            .map(|&x| ResidualPoint::on_real_axis(x))
            .collect();
        let r = ode_residual(&gaussian_seed, &harmonic_v, -0.5, &pts).unwrap();
        assert!(r < 1e-7, "residual {r}");
    }

    #[test]
    fn perturbed_seed_detected() {
        let bad = |x: Complex64| -> Result<(Complex64, Complex64)> {
            let (u, up) = gaussian_seed(x)?;
            let w = Complex64::new(1.0, 0.0) + x * 1e-3;
            Ok((u * w, up * w + u * 1e-3))
        };
        let pts: Vec<ResidualPoint> = [-2.0, 1.0, 3.0]
            .iter()
            .map(|&x| ResidualPoint::on_real_axis(x))
            .collect();
        let r = ode_residual(&bad, &harmonic_v, -0.5, &pts).unwrap();
        assert!(r > 1e-4, "perturbation must be visible, got {r}");
    }

    #[test]
    fn fourth_order_refinement_ratio() {
        // In the truncation-dominated regime the raw stencil error drops
        // ~16x when h halves.
        let pts = [ResidualPoint::on_real_axis(1.5)];
        let exact = |x: Complex64| -> Result<(Complex64, Complex64)> {
            let u = (x * x * 0.5).exp();
            Ok((u, x * u))
        };
        let coarse = ode_residual_fd4(&exact, &harmonic_v, -0.5, &pts, 2e-2).unwrap();
        let fine = ode_residual_fd4(&exact, &harmonic_v, -0.5, &pts, 1e-2).unwrap();
        let ratio = coarse / fine;
        assert!(
            (12.0..=20.0).contains(&ratio),
            "expected ~16x drop, got {ratio} ({coarse} -> {fine})"
        );
    }

    #[test]
    fn complex_direction() {
        // u = e^{ikx} along direction e^{i pi/4} still satisfies u'' = -k^2 u.
        let k = 1.3;
        let dir = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let u = move |x: Complex64| -> Result<(Complex64, Complex64)> {
            let ik = Complex64::new(0.0, k);
            Ok(((ik * x).exp(), ik * (ik * x).exp()))
        };
        let v = |_x: Complex64| -> Result<Complex64> { Ok(Complex64::new(0.0, 0.0)) };
        let pts = [ResidualPoint::along(Complex64::new(0.3, -0.2), dir).unwrap()];
        let r = ode_residual(&u, &v, k * k / 2.0, &pts).unwrap();
        assert!(r < 1e-7, "residual {r}");
    }
}
