//! Complex deformations of the harmonic oscillator.
//!
//! With V1 = x^2/2 the seed equation has the two-parameter solution
//!
//! ```text
//! u(x) = e^{-x^2/2} [ 1F1((1-2e)/4, 1/2, x^2) + beta x 1F1((3-2e)/4, 3/2, x^2) ]
//! ```
//!
//! (the overall constant is fixed to one). For eps < 1/2 and beta off the
//! real cuts |Re beta| >= beta_c(eps) this u never vanishes on the real
//! line, and the partner potential V2 = (u'/u)^2 - x^2/2 + 2 eps is a
//! complex potential whose spectrum is {eps, 1/2, 3/2, 5/2, ...}. Purely
//! imaginary beta gives a PT-invariant V2; other complex beta give real
//! spectra without PT invariance.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::Grid1D;
use crate::specfun::{erf, gamma_real, hermite_h, kummer_1f1, kummer_1f1_scaled, ln_gamma_real};
use crate::transform::{self, FamilyMeta, FamilyTag, PartnerPotential, SeedSolution};

/// Parameters (eps, beta) of the deformed-oscillator family; the first seed
/// coefficient is fixed to unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicParams {
    epsilon: f64,
    beta: Complex64,
}

impl HarmonicParams {
    /// Requires eps < 1/2 (the base ground-state energy). Admissibility of
    /// beta is a separate question answered by [`admissible`].
    pub fn new(epsilon: f64, beta: Complex64) -> Result<Self> {
        if !epsilon.is_finite() || !(beta.re.is_finite() && beta.im.is_finite()) {
            return Err(Error::NonFinite(format!("harmonic parameters ({epsilon}, {beta})")));
        }
        if epsilon >= 0.5 {
            return Err(Error::Range(format!(
                "epsilon must stay below the base ground state 1/2, got {epsilon}"
            )));
        }
        Ok(HarmonicParams { epsilon, beta })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// First 1F1 parameter (1-2e)/4.
    fn a1(&self) -> f64 {
        (1.0 - 2.0 * self.epsilon) / 4.0
    }

    /// Second 1F1 parameter (3-2e)/4.
    fn a2(&self) -> f64 {
        (3.0 - 2.0 * self.epsilon) / 4.0
    }

    pub fn seed(&self) -> HarmonicSeed {
        HarmonicSeed { params: *self }
    }
}

/// The deformed-oscillator spectrum: the extra level eps plus the unchanged
/// oscillator ladder n + 1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSpectrum {
    pub extra_level: f64,
    pub oscillator_levels: Vec<f64>,
}

impl HarmonicSpectrum {
    /// All levels, ascending.
    pub fn levels(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.oscillator_levels.len() + 1);
        v.push(self.extra_level);
        v.extend_from_slice(&self.oscillator_levels);
        v
    }
}

/// Critical bound beta_c(eps) = 2 Gamma(3/4 - eps/2) / Gamma(1/4 - eps/2):
/// real beta beyond it produce zeros of u and singular partners.
pub fn beta_c(epsilon: f64) -> Result<f64> {
    if !(epsilon < 0.5) {
        return Err(Error::Range(format!("beta_c needs epsilon < 1/2, got {epsilon}")));
    }
    Ok(2.0 * gamma_real(0.75 - 0.5 * epsilon)? / gamma_real(0.25 - 0.5 * epsilon)?)
}

/// Whether (eps, beta) lies in the zero-free region: any beta off the real
/// axis, or real beta with |beta| < beta_c(eps).
pub fn admissible(params: &HarmonicParams) -> Result<bool> {
    if params.beta.im != 0.0 {
        return Ok(true);
    }
    Ok(params.beta.re.abs() < beta_c(params.epsilon)?)
}

fn require_admissible(params: &HarmonicParams) -> Result<()> {
    if admissible(params)? {
        Ok(())
    } else {
        Err(Error::Admissibility(format!(
            "real beta = {} reaches the cut |Re beta| >= beta_c = {:.10}",
            params.beta.re,
            beta_c(params.epsilon)?
        )))
    }
}

/// Base oscillator state: E_n = n + 1/2 with
/// phi_n = [sqrt(pi) 2^n n!]^{-1/2} H_n(x) e^{-x^2/2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseState {
    n: u32,
    energy: f64,
    log_norm: f64,
}

impl BaseState {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// (phi_n, phi_n') at x, with the prefactor kept in the log domain.
    pub fn eval(&self, x: f64) -> Result<(f64, f64)> {
        let hn = hermite_h(self.n, x)?;
        let hn_deriv = if self.n == 0 {
            0.0
        } else {
            2.0 * self.n as f64 * hermite_h(self.n - 1, x)?
        };
        let envelope = (self.log_norm - 0.5 * x * x).exp();
        Ok((hn * envelope, (hn_deriv - x * hn) * envelope))
    }
}

/// The exactly known eigensystem of the base oscillator, n <= 50.
pub fn base_eigensystem(n: u32) -> Result<BaseState> {
    if n > 50 {
        return Err(Error::Range(format!("base_eigensystem supports n <= 50, got {n}")));
    }
    // log of [sqrt(pi) 2^n n!]^{-1/2}
    let log_norm =
        -0.5 * (0.5 * PI.ln() + n as f64 * 2.0_f64.ln() + ln_gamma_real(n as f64 + 1.0)?);
    Ok(BaseState {
        n,
        energy: n as f64 + 0.5,
        log_norm,
    })
}

/// (u, u') of the seed at real x, by analytic differentiation of the 1F1
/// representation (d/dz 1F1(a,b,z) = (a/b) 1F1(a+1,b+1,z)).
pub fn seed_u(params: &HarmonicParams, x: f64) -> Result<(Complex64, Complex64)> {
    let (g, gp, _) = seed_g(params, x, false)?;
    let envelope = (-0.5 * x * x).exp();
    Ok((g * envelope, (gp - x * g) * envelope))
}

/// u(x) e^{-x^2/2}, evaluated through the scaled hypergeometric so it stays
/// finite for arbitrarily large |x|; zeros coincide with those of u.
pub fn seed_u_scaled(params: &HarmonicParams, x: f64) -> Result<Complex64> {
    let t = x * x;
    let m1 = kummer_1f1_scaled(params.a1(), 0.5, t)?;
    let m2 = kummer_1f1_scaled(params.a2(), 1.5, t)?;
    Ok(Complex64::new(m1, 0.0) + params.beta * x * m2)
}

/// g = u e^{x^2/2} and its first two derivatives (the second only on
/// request).
fn seed_g(params: &HarmonicParams, x: f64, second: bool) -> Result<(Complex64, Complex64, Complex64)> {
    let t = x * x;
    let (a1, a2) = (params.a1(), params.a2());
    let m1 = kummer_1f1(a1, 0.5, t)?;
    let m1p = a1 / 0.5 * kummer_1f1(a1 + 1.0, 1.5, t)?;
    let m2 = kummer_1f1(a2, 1.5, t)?;
    let m2p = a2 / 1.5 * kummer_1f1(a2 + 1.0, 2.5, t)?;

    let g = Complex64::new(m1, 0.0) + params.beta * x * m2;
    let gp = Complex64::new(2.0 * x * m1p, 0.0) + params.beta * (m2 + 2.0 * t * m2p);
    let gpp = if second {
        let m1pp = a1 * (a1 + 1.0) / (0.5 * 1.5) * kummer_1f1(a1 + 2.0, 2.5, t)?;
        let m2pp = a2 * (a2 + 1.0) / (1.5 * 2.5) * kummer_1f1(a2 + 2.0, 3.5, t)?;
        Complex64::new(2.0 * m1p + 4.0 * t * m1pp, 0.0)
            + params.beta * x * (6.0 * m2p + 4.0 * t * m2pp)
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok((g, gp, gpp))
}

/// The harmonic seed as a [`SeedSolution`] (real-line domain).
#[derive(Debug, Clone, Copy)]
pub struct HarmonicSeed {
    params: HarmonicParams,
}

impl HarmonicSeed {
    pub fn params(&self) -> &HarmonicParams {
        &self.params
    }
}

impl SeedSolution for HarmonicSeed {
    fn epsilon(&self) -> f64 {
        self.params.epsilon
    }

    fn family(&self) -> FamilyTag {
        FamilyTag::Harmonic
    }

    fn eval(&self, x: Complex64) -> Result<(Complex64, Complex64)> {
        if x.im != 0.0 {
            return Err(Error::Domain(
                "the harmonic seed is defined on the real line".into(),
            ));
        }
        seed_u(&self.params, x.re)
    }

    fn eval_d2(&self, x: Complex64) -> Result<Option<Complex64>> {
        if x.im != 0.0 {
            return Err(Error::Domain(
                "the harmonic seed is defined on the real line".into(),
            ));
        }
        let xr = x.re;
        let (g, gp, gpp) = seed_g(&self.params, xr, true)?;
        let envelope = (-0.5 * xr * xr).exp();
        Ok(Some(
            (gpp - 2.0 * xr * gp + (xr * xr - 1.0) * g) * envelope,
        ))
    }
}

fn meta(params: &HarmonicParams) -> FamilyMeta {
    FamilyMeta {
        family: Some(FamilyTag::Harmonic),
        epsilon: Some(params.epsilon),
        beta: Some(params.beta),
        alpha: Some(Complex64::new(1.0, 0.0)),
        ..FamilyMeta::default()
    }
}

/// Partner potential V2 = (u'/u)^2 - x^2/2 + 2 eps on a real grid. Samples
/// whose magnitude exceeds the reporting cap are clamped and flagged
/// singular (relevant only close to the real-beta cut).
pub fn partner_v2(params: &HarmonicParams, grid: &Grid1D) -> Result<PartnerPotential> {
    require_admissible(params)?;
    let seed = params.seed();
    let points: Vec<Complex64> = grid.points().map(|x| Complex64::new(x, 0.0)).collect();
    transform::partner_potential(
        &seed,
        &|x| Ok(x * x * 0.5),
        &points,
        meta(params),
    )
}

/// Closed form of the n-th partner eigenfunction,
/// psi_n = e^{-x^2/2} [sqrt(pi) 2^{n+1} n! (n+1/2-eps)]^{-1/2}
///         [H_{n+1} + (u'/u - x) H_n].
pub fn eigenfunction(params: &HarmonicParams, n: u32, x: f64) -> Result<Complex64> {
    require_admissible(params)?;
    if n > 50 {
        return Err(Error::Range(format!("eigenfunction supports n <= 50, got {n}")));
    }
    let (u, up) = seed_u(params, x)?;
    if u.norm() == 0.0 {
        return Err(Error::ZeroCrossing {
            location: Complex64::new(x, 0.0),
            min_abs: 0.0,
        });
    }
    let f = up / u;
    let log_pref = -0.5
        * (0.5 * PI.ln()
            + (n as f64 + 1.0) * 2.0_f64.ln()
            + ln_gamma_real(n as f64 + 1.0)?
            + (n as f64 + 0.5 - params.epsilon).ln());
    let bracket = Complex64::new(hermite_h(n + 1, x)?, 0.0)
        + (f - x) * hermite_h(n, x)?;
    Ok(bracket * (log_pref - 0.5 * x * x).exp())
}

/// Defect of the large-|x| form: |u e^{-x^2/2} |x|^{1/2+eps} - bracket|
/// where bracket = Gamma(1/2)/Gamma((1-2e)/4) + beta sign(x)
/// Gamma(3/2)/Gamma((3-2e)/4). Decays like 1/|x| as the asymptotics take
/// over; evaluated in the scaled domain so nothing overflows.
pub fn asymptotic_check(params: &HarmonicParams, x_large: f64) -> Result<f64> {
    if x_large.abs() < 6.0 {
        return Err(Error::Range(format!(
            "asymptotic_check expects |x| >= 6, got {x_large}"
        )));
    }
    let scaled = seed_u_scaled(params, x_large)?;
    let lhs = scaled * x_large.abs().powf(0.5 + params.epsilon);
    let bracket = Complex64::new(gamma_real(0.5)? / gamma_real(params.a1())?, 0.0)
        + params.beta * x_large.signum() * (gamma_real(1.5)? / gamma_real(params.a2())?);
    Ok((lhs - bracket).norm())
}

/// spec H2 = {eps} u {n + 1/2 : n = 0..levels-1}. The extra level eps is
/// present for every admissible parameter choice here (1/u inherits e^{-x^2/2}
/// decay from the seed's forced growth).
pub fn spectrum(params: &HarmonicParams, levels: usize) -> Result<HarmonicSpectrum> {
    require_admissible(params)?;
    Ok(HarmonicSpectrum {
        extra_level: params.epsilon,
        oscillator_levels: (0..levels).map(|n| n as f64 + 0.5).collect(),
    })
}

/// u at eps = -1/2 in closed error-function form,
/// u = e^{x^2/2} (1 + beta (sqrt(pi)/2) erf x); used by the equivalence
/// tests against the hypergeometric route.
pub fn seed_u_erf_form(beta: Complex64, x: f64) -> Complex64 {
    ((0.5 * x * x).exp()) * (Complex64::new(1.0, 0.0) + beta * (PI.sqrt() / 2.0 * erf(x)))
}
