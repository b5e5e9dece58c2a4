//! The family-agnostic Darboux engine.
//!
//! Given a zero-free solution u of -u''/2 + V1 u = eps u, the first-order
//! intertwiner A = -d/dx + f with f = u'/u produces a partner potential
//! V2 = f^2 - V1 + 2 eps whose spectrum contains the whole spectrum of V1,
//! plus (when 1/u is square integrable) one extra level at eps. This module
//! builds f, V2, the mapped eigenfunctions C_n (-phi_n' + f phi_n) and the
//! extra state C/u, and provides the numerical intertwining check
//! ||(A H1 - H2 A) phi||.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{quadrature, Grid1D};

/// Provenance of a seed solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    Harmonic,
    BenderBoettcher,
    Custom,
}

/// A solution u of the seed equation -u''/2 + V1 u = eps u together with its
/// derivative, defined on the real line or on a contour in the complex
/// plane. Implementations must be zero-free on the domain they are used on;
/// [`check_zero_free`] verifies that numerically.
pub trait SeedSolution: Sync {
    /// The (real) integration constant eps of the seed equation.
    fn epsilon(&self) -> f64;

    fn family(&self) -> FamilyTag {
        FamilyTag::Custom
    }

    /// u and u' at a point.
    fn eval(&self, x: Complex64) -> Result<(Complex64, Complex64)>;

    /// u'' by analytic differentiation, when the family provides it.
    /// The default (None) makes verification paths fall back to high-order
    /// finite differences.
    fn eval_d2(&self, _x: Complex64) -> Result<Option<Complex64>> {
        Ok(None)
    }
}

/// A seed built from closures; mostly useful in tests and negative controls.
pub struct CustomSeed<F> {
    epsilon: f64,
    eval: F,
}

impl<F> CustomSeed<F>
where
    F: Fn(Complex64) -> Result<(Complex64, Complex64)> + Sync,
{
    pub fn new(epsilon: f64, eval: F) -> Self {
        CustomSeed { epsilon, eval }
    }
}

impl<F> SeedSolution for CustomSeed<F>
where
    F: Fn(Complex64) -> Result<(Complex64, Complex64)> + Sync,
{
    fn epsilon(&self) -> f64 {
        self.epsilon
    }

    fn eval(&self, x: Complex64) -> Result<(Complex64, Complex64)> {
        (self.eval)(x)
    }
}

/// Outcome of scanning |u| for zeros on a domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroFreeReport {
    pub min_abs_u: f64,
    pub argmin_point: Complex64,
    pub verdict: bool,
    pub scan_resolution: f64,
    /// Absolute threshold the minimum was compared against
    /// (1e-8 times the local scale of |u| near the minimum).
    pub threshold: f64,
}

/// The logarithmic derivative f = u'/u of a checked seed.
pub struct Superpotential<'a> {
    seed: &'a dyn SeedSolution,
}

impl<'a> Superpotential<'a> {
    pub fn eval(&self, x: Complex64) -> Result<Complex64> {
        let (u, up) = self.seed.eval(x)?;
        if u.norm() == 0.0 {
            return Err(Error::ZeroCrossing {
                location: x,
                min_abs: 0.0,
            });
        }
        Ok(up / u)
    }

    pub fn seed(&self) -> &dyn SeedSolution {
        self.seed
    }
}

/// Build the superpotential from a seed that passed the zero-free check.
pub fn superpotential<'a>(
    seed: &'a dyn SeedSolution,
    report: &ZeroFreeReport,
) -> Result<Superpotential<'a>> {
    if !report.verdict {
        return Err(Error::ZeroCrossing {
            location: report.argmin_point,
            min_abs: report.min_abs_u,
        });
    }
    Ok(Superpotential { seed })
}

/// Family parameters carried along with a sampled potential.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FamilyMeta {
    pub family: Option<FamilyTag>,
    pub epsilon: Option<f64>,
    pub beta: Option<Complex64>,
    pub alpha: Option<Complex64>,
    pub big_n: Option<f64>,
    pub sector_m: Option<u32>,
}

/// One sample of a partner potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSample {
    pub x: Complex64,
    pub v2: Complex64,
    /// Set when |V2| exceeded the reporting cap and was clamped.
    pub singular: bool,
}

/// A complex-valued partner potential sampled on a grid or contour.
#[derive(Debug, Clone, PartialEq)]
pub struct PartnerPotential {
    pub samples: Vec<PotentialSample>,
    pub meta: FamilyMeta,
}

impl PartnerPotential {
    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|s| s.v2.norm()).fold(0.0, f64::max)
    }

    /// Max over paired points of |conj(V2(-x)) - V2(x)|; zero for a
    /// PT-invariant potential sampled on a symmetric grid.
    pub fn pt_defect(&self) -> f64 {
        let n = self.samples.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            let a = &self.samples[i];
            let b = &self.samples[n - 1 - i];
            worst = worst.max((b.v2.conj() - a.v2).norm());
        }
        worst
    }
}

/// Reporting cap on |V2|: samples beyond it are clamped in magnitude and
/// flagged singular instead of erroring.
pub const V2_REPORT_CAP: f64 = 1e6;

fn cap_sample(x: Complex64, v2: Complex64) -> PotentialSample {
    let n = v2.norm();
    if n > V2_REPORT_CAP {
        PotentialSample {
            x,
            v2: v2 * (V2_REPORT_CAP / n),
            singular: true,
        }
    } else {
        PotentialSample {
            x,
            v2,
            singular: false,
        }
    }
}

/// Partner potential V2 = (u'/u)^2 - V1 + 2 eps sampled at `points`.
pub fn partner_potential(
    seed: &dyn SeedSolution,
    v1: &dyn Fn(Complex64) -> Result<Complex64>,
    points: &[Complex64],
    meta: FamilyMeta,
) -> Result<PartnerPotential> {
    if points.is_empty() {
        return Err(Error::Domain("partner potential needs a nonempty domain".into()));
    }
    let eps = seed.epsilon();
    let mut samples = Vec::with_capacity(points.len());
    for &x in points {
        let (u, up) = seed.eval(x)?;
        if u.norm() == 0.0 {
            return Err(Error::ZeroCrossing {
                location: x,
                min_abs: 0.0,
            });
        }
        let f = up / u;
        let v2 = f * f - v1(x)? + 2.0 * eps;
        samples.push(cap_sample(x, v2));
    }
    Ok(PartnerPotential { samples, meta })
}

/// The same potential through the SUSY-pair form V2 = f^2/2 - f'/2 + eps,
/// with f' = u''/u - (u'/u)^2 from the seed's analytic second derivative
/// when available and from central differences (step `fd_step`) otherwise.
/// Used as the independent route in the dual-formula consistency checks.
pub fn partner_potential_susy_form(
    seed: &dyn SeedSolution,
    points: &[Complex64],
    fd_step: f64,
    meta: FamilyMeta,
) -> Result<PartnerPotential> {
    if points.is_empty() {
        return Err(Error::Domain("partner potential needs a nonempty domain".into()));
    }
    let eps = seed.epsilon();
    let mut samples = Vec::with_capacity(points.len());
    for &x in points {
        let (u, up) = seed.eval(x)?;
        if u.norm() == 0.0 {
            return Err(Error::ZeroCrossing {
                location: x,
                min_abs: 0.0,
            });
        }
        let f = up / u;
        let fp = match seed.eval_d2(x)? {
            Some(upp) => upp / u - f * f,
            None => {
                // 4th-order central difference of f along the real direction.
                let h = fd_step;
                let fs: Result<Vec<Complex64>> = [-2.0, -1.0, 1.0, 2.0]
                    .iter()
                    .map(|&k| {
                        let (uu, uup) = seed.eval(x + Complex64::new(k * h, 0.0))?;
                        Ok(uup / uu)
                    })
                    .collect();
                let fs = fs?;
                (fs[0] - fs[1] * 8.0 + fs[2] * 8.0 - fs[3]) / (12.0 * h)
            }
        };
        let v2 = f * f * 0.5 - fp * 0.5 + eps;
        samples.push(cap_sample(x, v2));
    }
    Ok(PartnerPotential { samples, meta })
}

/// An eigenfunction of the partner Hamiltonian, sampled on a real grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub energy: f64,
    pub grid: Grid1D,
    pub wavefunction: Vec<Complex64>,
    pub normalization: Complex64,
}

/// Map a base eigenfunction phi_n (value and derivative) with energy E_n to
/// the partner eigenfunction psi_n = C_n (-phi_n' + f phi_n), sampled on
/// `grid`. The normalization constant follows the analytic-continuation
/// convention |C_n|^{-2} = 2 (E_n - eps), which for real admissible
/// parameters coincides with the literal L2 norm of A phi_n.
pub fn map_eigenfunction(
    seed: &dyn SeedSolution,
    phi: &dyn Fn(f64) -> Result<(Complex64, Complex64)>,
    energy: f64,
    grid: &Grid1D,
) -> Result<EigenPair> {
    let eps = seed.epsilon();
    if energy <= eps {
        return Err(Error::DegenerateMap);
    }
    let c = Complex64::new(1.0 / (2.0 * (energy - eps)).sqrt(), 0.0);
    let mut samples = Vec::with_capacity(grid.count());
    let mut max_abs = 0.0f64;
    for x in grid.points() {
        let xc = Complex64::new(x, 0.0);
        let (u, up) = seed.eval(xc)?;
        if u.norm() == 0.0 {
            return Err(Error::ZeroCrossing {
                location: xc,
                min_abs: 0.0,
            });
        }
        let (p, dp) = phi(x)?;
        let val = c * (-dp + (up / u) * p);
        max_abs = max_abs.max(val.norm());
        samples.push(val);
    }
    if max_abs < 1e-250 {
        return Err(Error::DegenerateMap);
    }
    Ok(EigenPair {
        energy,
        grid: *grid,
        wavefunction: samples,
        normalization: c,
    })
}

/// The literal L2 norm squared of A phi = -phi' + (u'/u) phi by quadrature
/// (odd grid count). For real admissible parameters this equals
/// 2 (E - eps), the value [`map_eigenfunction`] uses as |C|^{-2}; for
/// complex parameters the two generally differ, and callers that care about
/// the honest integral rather than the analytic-continuation convention
/// should use this.
pub fn mapped_norm_sqr(
    seed: &dyn SeedSolution,
    phi: &dyn Fn(f64) -> Result<(Complex64, Complex64)>,
    grid: &Grid1D,
) -> Result<f64> {
    let mut samples = Vec::with_capacity(grid.count());
    for x in grid.points() {
        let xc = Complex64::new(x, 0.0);
        let (u, up) = seed.eval(xc)?;
        if u.norm() == 0.0 {
            return Err(Error::ZeroCrossing {
                location: xc,
                min_abs: 0.0,
            });
        }
        let (p, dp) = phi(x)?;
        samples.push(Complex64::new((-dp + (up / u) * p).norm_sqr(), 0.0));
    }
    Ok(quadrature(grid, &samples)?.re)
}

/// The extra state psi_eps = C/u at energy eps, or `None` when 1/u fails the
/// square-integrability tail test (|psi| < 1e-10 at both endpoints after
/// unit normalization, and monotone decay over the outer 10% of the domain
/// on each side). The grid must have an odd point count for the
/// normalization quadrature.
pub fn extra_state(seed: &dyn SeedSolution, grid: &Grid1D) -> Result<Option<EigenPair>> {
    let mut vals = Vec::with_capacity(grid.count());
    for x in grid.points() {
        let xc = Complex64::new(x, 0.0);
        let (u, _) = seed.eval(xc)?;
        if u.norm() == 0.0 {
            return Err(Error::ZeroCrossing {
                location: xc,
                min_abs: 0.0,
            });
        }
        vals.push(u.inv());
    }
    let abs2: Vec<Complex64> = vals.iter().map(|v| Complex64::new(v.norm_sqr(), 0.0)).collect();
    let norm2 = quadrature(grid, &abs2)?.re;
    if !(norm2 > 0.0) || !norm2.is_finite() {
        return Ok(None);
    }
    let scale = norm2.sqrt();
    for v in vals.iter_mut() {
        *v /= scale;
    }

    let n = grid.count();
    let edge = (n / 10).max(2);
    let mags: Vec<f64> = vals.iter().map(|v| v.norm()).collect();
    if mags[0] >= 1e-10 || mags[n - 1] >= 1e-10 {
        return Ok(None);
    }
    // Monotone decay towards both endpoints over the outer 10%.
    for i in 0..edge {
        if mags[i] > mags[i + 1] + 1e-300 || mags[n - 1 - i] > mags[n - 2 - i] + 1e-300 {
            return Ok(None);
        }
    }
    Ok(Some(EigenPair {
        energy: seed.epsilon(),
        grid: *grid,
        wavefunction: vals,
        normalization: Complex64::new(1.0 / scale, 0.0),
    }))
}

/// Scan |u| over [lo, hi] at the given resolution, refining candidate cells
/// by bisection. The verdict is false when the refined minimum of |u| drops
/// below 1e-8 times the local scale of |u|, which survives seeds growing
/// like e^{x^2/2}.
pub fn check_zero_free(
    u: &dyn Fn(f64) -> Result<Complex64>,
    lo: f64,
    hi: f64,
    resolution: f64,
) -> Result<ZeroFreeReport> {
    if !(resolution > 0.0) || !resolution.is_finite() {
        return Err(Error::Domain(format!("scan resolution must be positive, got {resolution}")));
    }
    if !(lo < hi) {
        return Err(Error::Domain(format!("invalid scan interval [{lo}, {hi}]")));
    }
    let steps = (((hi - lo) / resolution).ceil() as usize).max(8);
    let h = (hi - lo) / steps as f64;

    let mut min_abs = f64::INFINITY;
    let mut argmin = lo;
    let mut threshold_at_min = 0.0f64;
    let mut verdict = true;

    let mut prev_x = lo;
    let mut prev_u = u(lo)?;
    for i in 1..=steps {
        let x = lo + h * i as f64;
        let cur_u = u(x)?;
        let local_scale = prev_u.norm().max(cur_u.norm()).max(1e-300);
        let threshold = 1e-8 * local_scale;

        for (xx, uu) in [(prev_x, prev_u), (x, cur_u)] {
            if uu.norm() < min_abs {
                min_abs = uu.norm();
                argmin = xx;
                threshold_at_min = threshold;
            }
        }

        if candidate_cell(prev_u, cur_u, local_scale) {
            let (bx, bu) = refine_cell(u, prev_x, prev_u, x, cur_u)?;
            if bu < min_abs {
                min_abs = bu;
                argmin = bx;
                threshold_at_min = threshold;
            }
            if bu < threshold {
                verdict = false;
            }
        }
        if cur_u.norm() < threshold {
            verdict = false;
            min_abs = min_abs.min(cur_u.norm());
        }

        prev_x = x;
        prev_u = cur_u;
    }

    Ok(ZeroFreeReport {
        min_abs_u: min_abs,
        argmin_point: Complex64::new(argmin, 0.0),
        verdict,
        scan_resolution: h,
        threshold: threshold_at_min,
    })
}

/// A cell can contain a zero only if both the real and the imaginary part
/// change sign inside it (a component that is negligible at both ends counts
/// as sign-changing).
fn candidate_cell(a: Complex64, b: Complex64, scale: f64) -> bool {
    let tiny = 1e-12 * scale;
    let re_flip = a.re.signum() != b.re.signum() || (a.re.abs() <= tiny && b.re.abs() <= tiny);
    let im_flip = a.im.signum() != b.im.signum() || (a.im.abs() <= tiny && b.im.abs() <= tiny);
    re_flip && im_flip
}

fn refine_cell(
    u: &dyn Fn(f64) -> Result<Complex64>,
    mut xa: f64,
    mut ua: Complex64,
    mut xb: f64,
    ub: Complex64,
) -> Result<(f64, f64)> {
    // Bisect on the dominant sign-changing component.
    let use_re = ua.re.abs().max(ub.re.abs()) >= ua.im.abs().max(ub.im.abs());
    let comp = |v: Complex64| if use_re { v.re } else { v.im };
    if comp(ua).signum() == comp(ub).signum() {
        // Both components nearly vanish at the ends; just probe the midpoint.
        let xm = 0.5 * (xa + xb);
        let um = u(xm)?;
        let best = [(xa, ua.norm()), (xm, um.norm()), (xb, ub.norm())]
            .into_iter()
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        return Ok(best);
    }
    let mut best = if ua.norm() <= ub.norm() {
        (xa, ua.norm())
    } else {
        (xb, ub.norm())
    };
    for _ in 0..80 {
        let xm = 0.5 * (xa + xb);
        let um = u(xm)?;
        if um.norm() < best.1 {
            best = (xm, um.norm());
        }
        if comp(um).signum() == comp(ua).signum() {
            xa = xm;
            ua = um;
        } else {
            xb = xm;
        }
        if (xb - xa).abs() < 1e-14 * (1.0 + xa.abs()) {
            break;
        }
    }
    Ok(best)
}

/// ||(A H1 - H2 A) phi||_2 on the grid interior, all derivatives by
/// 4th-order central differences of the sampled data. For a correct pair the
/// residual scales like h^2 in the grid spacing.
pub fn intertwining_residual(
    seed: &dyn SeedSolution,
    v1: &dyn Fn(f64) -> Result<Complex64>,
    v2: &dyn Fn(f64) -> Result<Complex64>,
    test_fn: &dyn Fn(f64) -> Complex64,
    grid: &Grid1D,
) -> Result<f64> {
    let n = grid.count();
    if n < 16 {
        return Err(Error::Domain("intertwining check needs at least 16 points".into()));
    }
    let h = grid.spacing();
    let xs: Vec<f64> = grid.points().collect();
    let phi: Vec<Complex64> = xs.iter().map(|&x| test_fn(x)).collect();
    let v1s: Vec<Complex64> = xs.iter().map(|&x| v1(x)).collect::<Result<_>>()?;
    let v2s: Vec<Complex64> = xs.iter().map(|&x| v2(x)).collect::<Result<_>>()?;
    let fs: Vec<Complex64> = xs
        .iter()
        .map(|&x| {
            let (u, up) = seed.eval(Complex64::new(x, 0.0))?;
            if u.norm() == 0.0 {
                return Err(Error::ZeroCrossing {
                    location: Complex64::new(x, 0.0),
                    min_abs: 0.0,
                });
            }
            Ok(up / u)
        })
        .collect::<Result<_>>()?;

    let d1 = |v: &[Complex64], i: usize| {
        (v[i - 2] - v[i - 1] * 8.0 + v[i + 1] * 8.0 - v[i + 2]) / (12.0 * h)
    };
    let d2 = |v: &[Complex64], i: usize| {
        (-v[i - 2] + v[i - 1] * 16.0 - v[i] * 30.0 + v[i + 1] * 16.0 - v[i + 2]) / (12.0 * h * h)
    };

    // H1 phi and A phi on the first interior layer.
    let mut h1_phi = vec![Complex64::new(0.0, 0.0); n];
    let mut a_phi = vec![Complex64::new(0.0, 0.0); n];
    for i in 2..n - 2 {
        h1_phi[i] = -d2(&phi, i) * 0.5 + v1s[i] * phi[i];
        a_phi[i] = -d1(&phi, i) + fs[i] * phi[i];
    }

    // (A H1 - H2 A) phi on the second interior layer.
    let mut sum = 0.0f64;
    for i in 4..n - 4 {
        let a_h1 = -d1(&h1_phi, i) + fs[i] * h1_phi[i];
        let h2_a = -d2(&a_phi, i) * 0.5 + v2s[i] * a_phi[i];
        sum += (a_h1 - h2_a).norm_sqr();
    }
    Ok((h * sum).sqrt())
}
