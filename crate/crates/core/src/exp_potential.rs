//! The exactly solvable periodic potential V(x) = e^{2ix}/2.
//!
//! Solutions of psi'' + (2E - e^{2ix}) psi = 0 are cylinder functions of
//! e^{ix} with order nu = sqrt(2E). The lower half plane splits into
//! vertical stripes S_l = {Im x < 0, l pi <= Re x < (l+1) pi}, each with one
//! decaying solution; a contour starting in S_0 and ending in S_m quantizes
//! the spectrum through the analytic continuation of the Hankel function
//! across m half-turns, giving nu = (n+1)/(2l) with integer nu excluded (a
//! perforated ladder), for both m = 2l and m = 2l + 1. A WKB treatment of
//! the same contour reproduces the scale but misses the perforation and the
//! unbound m = 1 case.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::specfun::{bessel_derivative, bessel_j, bessel_y, hankel1, hankel2, BesselKind};

/// V(x) = e^{2ix}/2; periodic with period pi.
pub fn potential(x: Complex64) -> Complex64 {
    (Complex64::i() * 2.0 * x).exp() * 0.5
}

/// The four solution branches. For E >= 0 they are H1, H2, J and Y of order
/// sqrt(2E) at argument e^{ix}; for E < 0 the last branch switches to the
/// first-kind function of negative real order -sqrt(-2E) (and the others use
/// order sqrt(-2E)), so each branch solves the equation with |E| in place of
/// E there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionBranch {
    Hankel1,
    Hankel2,
    BesselJ,
    /// Y for E >= 0, J of negative order for E < 0.
    Second,
}

/// Evaluate a solution branch at energy E and (complex) position x.
pub fn solution(branch: SolutionBranch, energy: f64, x: Complex64) -> Result<Complex64> {
    if !energy.is_finite() {
        return Err(Error::NonFinite(format!("energy = {energy}")));
    }
    let z = (Complex64::i() * x).exp();
    let (kind, nu) = branch_order(branch, energy);
    cylinder(kind, nu, z)
}

fn branch_order(branch: SolutionBranch, energy: f64) -> (BesselKind, f64) {
    let nu = (2.0 * energy.abs()).sqrt();
    match branch {
        SolutionBranch::Hankel1 => (BesselKind::H1, nu),
        SolutionBranch::Hankel2 => (BesselKind::H2, nu),
        SolutionBranch::BesselJ => (BesselKind::J, nu),
        SolutionBranch::Second => {
            if energy >= 0.0 {
                (BesselKind::Y, nu)
            } else {
                (BesselKind::J, -nu)
            }
        }
    }
}

fn cylinder(kind: BesselKind, nu: f64, z: Complex64) -> Result<Complex64> {
    match kind {
        BesselKind::J => bessel_j(nu, z),
        BesselKind::Y => bessel_y(nu, z),
        BesselKind::H1 => hankel1(nu, z),
        BesselKind::H2 => hankel2(nu, z),
        _ => unreachable!("only first/second kind cylinder functions appear here"),
    }
}

/// Relative residual of psi'' + (2E - e^{2ix}) psi = 0 for a branch, with
/// the second derivative built from the order recurrences and the chain
/// rule (psi' = i w C'_nu(w), psi'' = -w^2 C''_nu - w C'_nu at w = e^{ix}),
/// normalized by the largest term. C'' comes from differentiating the
/// recurrence C'_nu = C_{nu-1} - (nu/w) C_nu, so the route is independent
/// of the differential equation it checks. For E < 0 the real-order
/// convention makes the branches solve the equation with |E| in place of E,
/// and the residual is taken against that equation.
pub fn solution_ode_residual(branch: SolutionBranch, energy: f64, x: Complex64) -> Result<f64> {
    if !energy.is_finite() {
        return Err(Error::NonFinite(format!("energy = {energy}")));
    }
    let w = (Complex64::i() * x).exp();
    let (kind, nu) = branch_order(branch, energy);
    let c0 = cylinder(kind, nu, w)?;
    let c1 = bessel_derivative(kind, nu, w)?;
    let c1_down = bessel_derivative(kind, nu - 1.0, w)?;
    let c2 = c1_down - (nu / w) * c1 + (nu / (w * w)) * c0;
    let psi_pp = -w * w * c2 - w * c1;
    let term = (nu * nu - w * w) * c0;
    let scale = psi_pp.norm().max(term.norm()).max(1e-300);
    Ok((psi_pp + term).norm() / scale)
}

/// Stripe assignment for a point of the lower half plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripeLocation {
    /// x lies inside S_l.
    Interior(i64),
    /// Re x is an integer multiple of pi (within 1e-12): both solutions are
    /// square integrable here.
    Boundary,
}

/// Which stripe S_l = {Im x < 0, l pi <= Re x < (l+1) pi} contains x.
pub fn stripe_of(x: Complex64) -> Result<StripeLocation> {
    if x.im >= 0.0 {
        return Err(Error::Domain(format!(
            "stripes cover only the lower half plane, got Im x = {}",
            x.im
        )));
    }
    let ratio = x.re / PI;
    let nearest = ratio.round();
    if (x.re - nearest * PI).abs() <= 1e-12 {
        return Ok(StripeLocation::Boundary);
    }
    Ok(StripeLocation::Interior(ratio.floor() as i64))
}

/// Coefficients (c1, c2) of the half-turn continuation
/// H1_nu(z e^{m pi i}) = c1 H1_nu(z) + c2 H2_nu(z):
/// c1 = -sin((m-1) nu pi)/sin(nu pi), c2 = -e^{-nu pi i} sin(m nu pi)/sin(nu pi).
/// For m = 1 this reduces exactly to (0, -e^{-nu pi i}).
pub fn continuation_coefficients(nu: f64, m: u32) -> Result<(Complex64, Complex64)> {
    if m < 1 {
        return Err(Error::Range(format!("continuation needs m >= 1, got {m}")));
    }
    if !nu.is_finite() {
        return Err(Error::NonFinite(format!("nu = {nu}")));
    }
    if (nu - nu.round()).abs() < 1e-12 {
        return Err(Error::IntegerOrder(nu));
    }
    if m == 1 {
        return Ok((
            Complex64::new(0.0, 0.0),
            -Complex64::new(0.0, -nu * PI).exp(),
        ));
    }
    let s = (nu * PI).sin();
    let c1 = -((m as f64 - 1.0) * nu * PI).sin() / s;
    let c2 = -Complex64::new(0.0, -nu * PI).exp() * ((m as f64 * nu * PI).sin() / s);
    Ok((Complex64::new(c1, 0.0), c2))
}

/// Target sector of the quantization contour: it starts in S_0 and ends in
/// S_m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectorSpec {
    m: u32,
}

impl SectorSpec {
    pub fn new(m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::Range("the ending sector index m must be >= 1".into()));
        }
        Ok(SectorSpec { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The half-turn count l entering the quantization condition
    /// (m = 2l or m = 2l + 1 give the same spectrum).
    pub fn l(&self) -> u32 {
        self.m / 2
    }
}

/// Kind of a quantization result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    Exact,
    Semiclassical,
    /// m = 1: the continuation puts no condition on nu and the spectrum is
    /// unbounded from below (no physical levels).
    Unbound,
}

/// Energies E = nu^2/2 together with their exact rational values and the
/// perforation (excluded index) set.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizationResult {
    pub kind: SpectrumKind,
    /// Orders nu, ascending.
    pub nu_values: Vec<f64>,
    /// Energies nu^2/2, ascending.
    pub energies: Vec<f64>,
    /// nu as exact rationals (empty for semiclassical results).
    pub nu_exact: Vec<Rational64>,
    /// Energies as exact rationals (empty for semiclassical results).
    pub energies_exact: Vec<Rational64>,
    /// Indices n with integer nu = (n+1)/(2l), i.e. {2l-1, 4l-1, ...}, below
    /// the largest index returned.
    pub excluded_indices: BTreeSet<u64>,
}

/// Exact spectrum for a contour ending in S_m: nu = (n+1)/(2l) over
/// n in N_0 with integer nu excluded, E_n = (n+1)^2/(8 l^2), all in exact
/// rational arithmetic. m = 1 yields the unbound verdict and empty lists.
pub fn exact_spectrum(spec: SectorSpec, count: usize) -> QuantizationResult {
    if spec.m() == 1 {
        return QuantizationResult {
            kind: SpectrumKind::Unbound,
            nu_values: Vec::new(),
            energies: Vec::new(),
            nu_exact: Vec::new(),
            energies_exact: Vec::new(),
            excluded_indices: BTreeSet::new(),
        };
    }
    let l = spec.l() as i64;
    let two_l = 2 * l;
    let mut nu_exact = Vec::with_capacity(count);
    let mut energies_exact = Vec::with_capacity(count);
    let mut excluded = BTreeSet::new();
    let mut n: i64 = 0;
    while nu_exact.len() < count {
        if (n + 1) % two_l == 0 {
            // nu would be the integer (n+1)/(2l): perforated away.
            excluded.insert(n as u64);
        } else {
            let nu = Rational64::new(n + 1, two_l);
            nu_exact.push(nu);
            energies_exact.push(nu * nu / 2);
        }
        n += 1;
    }
    let to_f = |r: &Rational64| *r.numer() as f64 / *r.denom() as f64;
    QuantizationResult {
        kind: SpectrumKind::Exact,
        nu_values: nu_exact.iter().map(to_f).collect(),
        energies: energies_exact.iter().map(to_f).collect(),
        nu_exact,
        energies_exact,
        excluded_indices: excluded,
    }
}

/// Semiclassical levels E_n = (n+1/2)^2/(2 m^2), n = 0..count-1. No
/// perforation appears, and m = 1 still produces a discrete list even
/// though the exact treatment is unbound there; both are known failures of
/// the approximation that callers should surface.
pub fn semiclassical_spectrum(m: u32, count: usize) -> Result<QuantizationResult> {
    if m < 1 {
        return Err(Error::Range("semiclassical spectrum needs m >= 1".into()));
    }
    let mf = m as f64;
    let nu_values: Vec<f64> = (0..count).map(|n| (n as f64 + 0.5) / mf).collect();
    let energies: Vec<f64> = nu_values.iter().map(|nu| 0.5 * nu * nu).collect();
    Ok(QuantizationResult {
        kind: SpectrumKind::Semiclassical,
        nu_values,
        energies,
        nu_exact: Vec::new(),
        energies_exact: Vec::new(),
        excluded_indices: BTreeSet::new(),
    })
}

/// The classical turning points x1 = -i ln k and x2 = m pi - i ln k of
/// k^2 - e^{2ix} = 0.
pub fn turning_points(k: f64, m: u32) -> (Complex64, Complex64) {
    let depth = -k.ln();
    (
        Complex64::new(0.0, depth),
        Complex64::new(m as f64 * PI, depth),
    )
}

/// Action integral between the turning points along the horizontal segment,
/// I = int sqrt(k^2 - e^{2ix}) dx, with the square-root branch kept
/// continuous by the sign of its real part starting from x1. The integrand
/// vanishes like a square root at every multiple of pi, so each pi-panel is
/// integrated with a tanh-sinh rule. Equals m pi k with a numerically real
/// value.
pub fn action_integral_complex(k: f64, m: u32) -> Result<Complex64> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Range(format!("action integral needs k > 0, got {k}")));
    }
    if m < 1 {
        return Err(Error::Range("action integral needs m >= 1".into()));
    }
    let depth = -k.ln();
    // g(s) = sqrt(k^2 - e^{2i(s + i depth)}) = k sqrt(1 - e^{2is}); the
    // continuous branch from x1 keeps Re >= 0 (the principal value flips
    // sign nowhere inside a panel, so enforcing the sign is the tracking).
    let integrand = |s: f64| -> Complex64 {
        let w = Complex64::new(k * k, 0.0)
            - (Complex64::i() * 2.0 * Complex64::new(s, depth)).exp();
        let root = w.sqrt();
        if root.re < 0.0 {
            -root
        } else {
            root
        }
    };
    let mut total = Complex64::new(0.0, 0.0);
    for panel in 0..m {
        let a = panel as f64 * PI;
        total += tanh_sinh(&integrand, a, a + PI);
    }
    Ok(total)
}

/// Real part of [`action_integral_complex`] (the quadrature's imaginary
/// part stays below 1e-8 by construction of the branch tracking).
pub fn action_integral(k: f64, m: u32) -> Result<f64> {
    Ok(action_integral_complex(k, m)?.re)
}

/// Tanh-sinh quadrature on [a, b]; handles the square-root endpoint
/// singularities of the action integrand. Fixed level, deterministic.
fn tanh_sinh(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> Complex64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let h = 1.0 / 64.0;
    let mut sum = f(mid) * (0.5 * PI); // j = 0 term: w = pi/2 cosh(0)/cosh^2(0)
    for j in 1..=(6.0 / h) as i32 {
        let t = h * j as f64;
        let u = 0.5 * PI * t.sinh();
        let x = u.tanh();
        let w = 0.5 * PI * t.cosh() / u.cosh().powi(2);
        if w < 1e-20 || 1.0 - x.abs() < 1e-17 {
            break;
        }
        sum += (f(mid + half * x) + f(mid - half * x)) * w;
    }
    sum * half * h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ode_residual, ResidualPoint};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn potential_is_periodic() {
        for &x in &[c(0.3, -1.0), c(-2.0, -0.5), c(7.0, -3.0)] {
            let shifted = potential(x + PI);
            assert!((potential(x) - shifted).norm() < 1e-12 * potential(x).norm().max(1e-300));
        }
    }

    #[test]
    fn branches_solve_the_equation() {
        let energies = [0.125, 1.0, 3.2];
        let points = [c(0.7, -0.8), c(1.0, -2.0), c(4.0, -1.3), c(8.2, -2.6)];
        for &e in &energies {
            for branch in [
                SolutionBranch::Hankel1,
                SolutionBranch::Hankel2,
                SolutionBranch::BesselJ,
                SolutionBranch::Second,
            ] {
                let u = |x: Complex64| -> crate::Result<(Complex64, Complex64)> {
                    Ok((solution(branch, e, x)?, c(0.0, 0.0)))
                };
                let pts: Vec<ResidualPoint> = points
                    .iter()
                    .map(|&x| ResidualPoint::along(x, c(1.0, 0.0)).unwrap())
                    .collect();
                let r = ode_residual(&u, &|x| Ok(potential(x)), e, &pts).unwrap();
                assert!(r <= 1e-7, "branch {branch:?}, E={e}: residual {r}");
            }
        }
    }

    #[test]
    fn branches_solve_the_equation_across_stripes() {
        // 100 pseudo-random points per stripe-set spread over S_0..S_3,
        // every branch, at two energies, with the recurrence-based residual
        // (finite differences would amplify the series rounding floor by
        // 1/h^2 at |z| = e^{|Im x|} ~ 20).
        let mut state: u64 = 0x0123_4567_89ab_cdef;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut pts = Vec::with_capacity(100);
        for stripe in 0..4i64 {
            for _ in 0..25 {
                let re = (stripe as f64 + 0.05 + 0.9 * next()) * PI;
                let im = -0.4 - 2.8 * next();
                let x = c(re, im);
                assert_eq!(stripe_of(x).unwrap(), StripeLocation::Interior(stripe));
                pts.push(x);
            }
        }
        for &e in &[0.6, 2.1, -0.35] {
            for branch in [
                SolutionBranch::Hankel1,
                SolutionBranch::Hankel2,
                SolutionBranch::BesselJ,
                SolutionBranch::Second,
            ] {
                for &x in &pts {
                    let r = solution_ode_residual(branch, e, x).unwrap();
                    assert!(r <= 1e-7, "branch {branch:?}, E={e}, x={x}: residual {r}");
                }
            }
        }
    }

    #[test]
    fn negative_energy_branches_solve_with_reflected_energy() {
        // With real order sqrt(-2E) the E < 0 branches satisfy the equation
        // at |E| (see the order-convention note in the module docs).
        let e = -0.32;
        for branch in [SolutionBranch::BesselJ, SolutionBranch::Second] {
            let u = |x: Complex64| -> crate::Result<(Complex64, Complex64)> {
                Ok((solution(branch, e, x)?, c(0.0, 0.0)))
            };
            let pts = [ResidualPoint::along(c(0.9, -1.1), c(1.0, 0.0)).unwrap()];
            let r = ode_residual(&u, &|x| Ok(potential(x)), e.abs(), &pts).unwrap();
            assert!(r <= 1e-7, "branch {branch:?}: residual {r}");
        }
    }

    #[test]
    fn hankel_pair_sums_to_j() {
        let e = 0.75;
        for &x in &[c(0.5, -0.5), c(2.0, -1.5)] {
            let lhs = solution(SolutionBranch::Hankel1, e, x).unwrap()
                + solution(SolutionBranch::Hankel2, e, x).unwrap();
            let rhs = solution(SolutionBranch::BesselJ, e, x).unwrap() * 2.0;
            assert!((lhs - rhs).norm() < 1e-10 * rhs.norm().max(1.0));
        }
    }

    #[test]
    fn first_branch_decays_in_even_stripes() {
        // In S_0 the first Hankel branch decays as Im x -> -infinity.
        let e = 0.5;
        let shallow = solution(SolutionBranch::Hankel1, e, c(1.2, -1.5)).unwrap();
        let deep = solution(SolutionBranch::Hankel1, e, c(1.2, -3.0)).unwrap();
        assert!(deep.norm() < shallow.norm() * 1e-3);
        // While the second branch grows there.
        let shallow2 = solution(SolutionBranch::Hankel2, e, c(1.2, -1.5)).unwrap();
        let deep2 = solution(SolutionBranch::Hankel2, e, c(1.2, -3.0)).unwrap();
        assert!(deep2.norm() > shallow2.norm() * 1e3);
    }

    #[test]
    fn stripe_assignment() {
        assert_eq!(stripe_of(c(0.5, -3.0)).unwrap(), StripeLocation::Interior(0));
        assert_eq!(stripe_of(c(PI, -3.0)).unwrap(), StripeLocation::Boundary);
        assert_eq!(
            stripe_of(c(2.5 * PI, -1.0)).unwrap(),
            StripeLocation::Interior(2)
        );
        assert_eq!(
            stripe_of(c(-0.5, -1.0)).unwrap(),
            StripeLocation::Interior(-1)
        );
        assert!(stripe_of(c(0.5, 0.0)).is_err());
        assert!(stripe_of(c(0.5, 1.0)).is_err());
    }

    #[test]
    fn continuation_reduces_to_half_turn_formula() {
        for &nu in &[0.3, 0.45, 1.7] {
            let (c1, c2) = continuation_coefficients(nu, 1).unwrap();
            assert_eq!(c1, c(0.0, 0.0));
            let expect = -Complex64::new(0.0, -nu * PI).exp();
            assert!((c2 - expect).norm() < 1e-15);
        }
        assert!(matches!(
            continuation_coefficients(2.0, 3),
            Err(Error::IntegerOrder(_))
        ));
        assert!(matches!(
            continuation_coefficients(0.3, 0),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn continuation_quantized_case_drops_growing_part() {
        // m=2, nu=1/2: c2 ~ sin(2 * pi/2) = 0, a pure H1 continuation.
        let (_c1, c2) = continuation_coefficients(0.5, 2).unwrap();
        assert!(c2.norm() < 1e-15);
    }

    #[test]
    fn continuation_identity_against_j_basis() {
        // Express both sides through J_{+-nu} with J_nu(z e^{i pi m}) =
        // e^{i nu pi m} J_nu(z): an independent oracle for the coefficients.
        for &(nu, m) in &[(0.3f64, 2u32), (0.45, 3), (0.3, 5)] {
            for &z in &[c(1.0, 0.0), c(2.0, 1.0)] {
                let (c1, c2) = continuation_coefficients(nu, m).unwrap();
                let jp = bessel_j(nu, z).unwrap();
                let jm = bessel_j(-nu, z).unwrap();
                let s = (nu * PI).sin();
                let i = Complex64::i();
                // H1 = (J_{-nu} - e^{-i nu pi} J_nu)/(i sin nu pi), H2 the
                // conjugate combination.
                let h1 = (jm - (-i * nu * PI).exp() * jp) / (i * s);
                let h2 = ((i * nu * PI).exp() * jp - jm) / (i * s);
                let rot = |order: f64| (i * order * PI * m as f64).exp();
                let lhs = (rot(-nu) * jm - (-i * nu * PI).exp() * rot(nu) * jp) / (i * s);
                let rhs = c1 * h1 + c2 * h2;
                assert!(
                    (lhs - rhs).norm() <= 1e-8 * lhs.norm().max(1.0),
                    "nu={nu}, m={m}, z={z}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn exact_spectrum_m2() {
        let q = exact_spectrum(SectorSpec::new(2).unwrap(), 4);
        assert_eq!(q.kind, SpectrumKind::Exact);
        assert_eq!(
            q.energies_exact,
            vec![rat(1, 8), rat(9, 8), rat(25, 8), rat(49, 8)]
        );
        assert_eq!(
            q.nu_exact,
            vec![rat(1, 2), rat(3, 2), rat(5, 2), rat(7, 2)]
        );
        // First excluded index is n = 1; no exclusions below nu = 1.
        assert_eq!(q.excluded_indices.iter().next(), Some(&1));
        assert!(q.nu_values.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exact_spectrum_m4_prefix() {
        let q = exact_spectrum(SectorSpec::new(4).unwrap(), 5);
        assert_eq!(
            q.nu_exact,
            vec![rat(1, 4), rat(1, 2), rat(3, 4), rat(5, 4), rat(3, 2)]
        );
        assert_eq!(q.excluded_indices.iter().collect::<Vec<_>>(), vec![&3]);
    }

    #[test]
    fn odd_m_matches_even_m() {
        for l in 1u32..=3 {
            let even = exact_spectrum(SectorSpec::new(2 * l).unwrap(), 8);
            let odd = exact_spectrum(SectorSpec::new(2 * l + 1).unwrap(), 8);
            assert_eq!(even, odd);
        }
    }

    #[test]
    fn m1_is_unbound() {
        let q = exact_spectrum(SectorSpec::new(1).unwrap(), 10);
        assert_eq!(q.kind, SpectrumKind::Unbound);
        assert!(q.energies.is_empty());
        assert!(SectorSpec::new(0).is_err());
    }

    #[test]
    fn integer_orders_never_appear() {
        for m in [2u32, 4, 6, 7] {
            let q = exact_spectrum(SectorSpec::new(m).unwrap(), 40);
            for nu in &q.nu_exact {
                assert!(!nu.is_integer(), "integer nu {nu} leaked into m={m}");
            }
        }
    }

    #[test]
    fn semiclassical_values() {
        let q = semiclassical_spectrum(2, 3).unwrap();
        assert_eq!(q.kind, SpectrumKind::Semiclassical);
        let expect = [1.0 / 32.0, 9.0 / 32.0, 25.0 / 32.0];
        for (a, b) in q.energies.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-15);
        }
        // m = 1 still yields a discrete list (a known failure of the
        // approximation that the exact result contradicts).
        let q1 = semiclassical_spectrum(1, 3).unwrap();
        assert_eq!(q1.energies.len(), 3);
        assert_eq!(
            exact_spectrum(SectorSpec::new(1).unwrap(), 3).kind,
            SpectrumKind::Unbound
        );
        // count=1, m=10 -> {1/800}.
        let q10 = semiclassical_spectrum(10, 1).unwrap();
        assert!((q10.energies[0] - 1.0 / 800.0).abs() < 1e-18);
    }

    #[test]
    fn semiclassical_tracks_exact_within_band() {
        for l in [1u32, 2, 3] {
            let m = 2 * l;
            let exact = exact_spectrum(SectorSpec::new(m).unwrap(), 11);
            let sc = semiclassical_spectrum(m, 11).unwrap();
            for j in 0..=10 {
                let ratio = sc.energies[j] / exact.energies[j];
                assert!(
                    (0.2..=1.3).contains(&ratio),
                    "m={m}, j={j}: ratio {ratio}"
                );
            }
        }
    }

    #[test]
    fn action_integral_closed_form() {
        for &(k, m, expect) in &[
            (1.0, 2u32, 2.0 * PI),
            (0.5, 1, 0.5 * PI),
            (2.0, 3, 6.0 * PI),
        ] {
            let v = action_integral_complex(k, m).unwrap();
            assert!(
                (v.re - expect).abs() < 1e-6,
                "k={k}, m={m}: {} vs {expect}",
                v.re
            );
            assert!(v.im.abs() <= 1e-8, "imaginary leak {}", v.im);
        }
        assert!(action_integral(0.0, 2).is_err());
    }

    #[test]
    fn turning_points_solve_defining_equation() {
        for &(k, m) in &[(1.0f64, 2u32), (0.5, 1), (2.0, 3)] {
            let (x1, x2) = turning_points(k, m);
            for x in [x1, x2] {
                let res = Complex64::new(k * k, 0.0) - (Complex64::i() * 2.0 * x).exp();
                assert!(res.norm() < 1e-12);
            }
        }
    }
}
