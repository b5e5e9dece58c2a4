//! Dense complex eigensolver: unitary Householder reduction to upper
//! Hessenberg form followed by single-shift QR iteration with Wilkinson
//! shifts, exceptional shifts, and deflation. Eigenvalues only; the
//! eigenfunction side of every verification goes through closed forms.

use num_complex::Complex64;

use super::matrix::DenseComplexMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Eigenvalues with per-value convergence flags and the total sweep count.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSet {
    eigenvalues: Vec<Complex64>,
    convergence_flags: Vec<bool>,
    iteration_count: usize,
}

impl EigenSet {
    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn convergence_flags(&self) -> &[bool] {
        &self.convergence_flags
    }

    pub fn iteration_count(&self) -> usize {
        self.iteration_count
    }

    pub fn all_converged(&self) -> bool {
        self.convergence_flags.iter().all(|&f| f)
    }

    /// Eigenvalues sorted by ascending real part (ties by imaginary part).
    pub fn sorted_by_re(&self) -> Vec<Complex64> {
        let mut v = self.eigenvalues.clone();
        v.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        v
    }
}

/// Compute all eigenvalues of a dense complex matrix.
///
/// Converged eigenvalues are stable to `tol` under one extra sweep; passing
/// `tol = 0` uses machine epsilon for deflation. Fails with
/// [`Error::Convergence`] (carrying partial results) after 50 * dimension
/// sweeps.
pub fn eigenvalues(m: &DenseComplexMatrix, tol: f64) -> Result<EigenSet> {
    let n = m.dim();
    if n > 4096 {
        return Err(Error::Range(format!(
            "dense eigensolver capped at dimension 4096, got {n}"
        )));
    }
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::Parameter(format!("tol must be finite and >= 0, got {tol}")));
    }
    let mut h = m.entries().to_vec();
    hessenberg_in_place(&mut h, n);
    qr_iterate(h, n, tol.max(f64::EPSILON))
}

/// Reduce to upper Hessenberg form by complex Householder similarity
/// transforms.
fn hessenberg_in_place(h: &mut [Complex64], n: usize) {
    if n < 3 {
        return;
    }
    let mut v = vec![ZERO; n];
    let mut w = vec![ZERO; n];
    for k in 0..n - 2 {
        let m = n - k - 1; // length of the column segment below the diagonal
        let mut norm_sqr = 0.0;
        for i in 0..m {
            norm_sqr += h[(k + 1 + i) * n + k].norm_sqr();
        }
        let x1 = h[(k + 1) * n + k];
        let norm = norm_sqr.sqrt();
        if norm <= f64::MIN_POSITIVE || norm_sqr - x1.norm_sqr() == 0.0 {
            // Column already in Hessenberg shape.
            continue;
        }
        let phase = if x1 == ZERO {
            Complex64::new(1.0, 0.0)
        } else {
            x1 / x1.norm()
        };
        let alpha = -phase * norm;
        v[0] = x1 - alpha;
        for i in 1..m {
            v[i] = h[(k + 1 + i) * n + k];
        }
        // ||v||^2 = 2 (||x||^2 + ||x|| |x1|), tau = 2/||v||^2
        let vnorm_sqr = 2.0 * (norm_sqr + norm * x1.norm());
        let tau = 2.0 / vnorm_sqr;

        // Column k directly: x -> alpha e1.
        h[(k + 1) * n + k] = alpha;
        for i in 1..m {
            h[(k + 1 + i) * n + k] = ZERO;
        }

        // Left update on columns k+1..n: A -= tau v (v^H A).
        for val in w[k + 1..n].iter_mut() {
            *val = ZERO;
        }
        for i in 0..m {
            let vi_conj = v[i].conj();
            let row = &h[(k + 1 + i) * n + (k + 1)..(k + 1 + i) * n + n];
            for (acc, &a) in w[k + 1..n].iter_mut().zip(row.iter()) {
                *acc += vi_conj * a;
            }
        }
        for i in 0..m {
            let tv = v[i] * tau;
            let row = &mut h[(k + 1 + i) * n + (k + 1)..(k + 1 + i) * n + n];
            for (a, &ww) in row.iter_mut().zip(w[k + 1..n].iter()) {
                *a -= tv * ww;
            }
        }

        // Right update on all rows: A -= tau (A v) v^H.
        for r in 0..n {
            let row = &mut h[r * n + (k + 1)..r * n + n];
            let mut s = ZERO;
            for (a, vi) in row.iter().zip(v[..m].iter()) {
                s += *a * vi;
            }
            let ts = s * tau;
            for (a, vi) in row.iter_mut().zip(v[..m].iter()) {
                *a -= ts * vi.conj();
            }
        }
    }
}

fn qr_iterate(mut h: Vec<Complex64>, n: usize, reltol: f64) -> Result<EigenSet> {
    let mut eigs = vec![ZERO; n];
    let mut flags = vec![true; n];
    let mut total = 0usize;
    let budget = 50 * n.max(1);
    let mut hi = n;
    let mut block_iters = 0usize;
    let frob = h.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();

    while hi > 0 {
        // Deflation scan from the bottom of the active block.
        let mut lo = 0;
        for i in (1..hi).rev() {
            let scale = h[(i - 1) * n + (i - 1)].norm() + h[i * n + i].norm();
            let scale = if scale == 0.0 { frob.max(f64::MIN_POSITIVE) } else { scale };
            if h[i * n + (i - 1)].norm() <= reltol * scale {
                h[i * n + (i - 1)] = ZERO;
                lo = i;
                break;
            }
        }
        if lo == hi - 1 {
            eigs[hi - 1] = h[(hi - 1) * n + (hi - 1)];
            hi -= 1;
            block_iters = 0;
            continue;
        }
        if lo + 2 == hi {
            let (e1, e2) = eig_2x2(
                h[lo * n + lo],
                h[lo * n + lo + 1],
                h[(lo + 1) * n + lo],
                h[(lo + 1) * n + lo + 1],
            );
            eigs[lo] = e1;
            eigs[lo + 1] = e2;
            hi -= 2;
            block_iters = 0;
            continue;
        }
        if total >= budget {
            for i in 0..hi {
                eigs[i] = h[i * n + i];
                flags[i] = false;
            }
            return Err(Error::Convergence {
                iterations: total,
                partial: EigenSet {
                    eigenvalues: eigs,
                    convergence_flags: flags,
                    iteration_count: total,
                },
            });
        }

        let shift = if block_iters > 0 && block_iters % 12 == 0 {
            // Deterministic exceptional shift to break symmetry stalls.
            let nudge = h[(hi - 1) * n + (hi - 2)].norm()
                + if hi >= 3 { h[(hi - 2) * n + (hi - 3)].norm() } else { 0.0 };
            h[(hi - 1) * n + (hi - 1)] + Complex64::new(0.75 * nudge, 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 2) * n + (hi - 2)],
                h[(hi - 2) * n + (hi - 1)],
                h[(hi - 1) * n + (hi - 2)],
                h[(hi - 1) * n + (hi - 1)],
            )
        };
        qr_sweep(&mut h, n, lo, hi, shift);
        total += 1;
        block_iters += 1;
    }

    Ok(EigenSet {
        eigenvalues: eigs,
        convergence_flags: flags,
        iteration_count: total,
    })
}

/// Eigenvalues of [[a, b], [c, d]].
fn eig_2x2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let mean = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (mean * mean - det).sqrt();
    (mean + disc, mean - disc)
}

/// The eigenvalue of the trailing 2x2 block closer to its bottom-right entry.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let (e1, e2) = eig_2x2(a, b, c, d);
    if (e1 - d).norm() <= (e2 - d).norm() {
        e1
    } else {
        e2
    }
}

/// One explicit single-shift QR step on the active block [lo, hi):
/// H - sI = QR (Givens), H <- RQ + sI.
fn qr_sweep(h: &mut [Complex64], n: usize, lo: usize, hi: usize, shift: Complex64) {
    for i in lo..hi {
        h[i * n + i] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo - 1);
    for i in lo..hi - 1 {
        let f = h[i * n + i];
        let g = h[(i + 1) * n + i];
        let (c, s) = givens(f, g);
        let (top, bot) = h.split_at_mut((i + 1) * n);
        let row_a = &mut top[i * n + i..i * n + hi];
        let row_b = &mut bot[i..hi];
        let s_conj = s.conj();
        for (a, b) in row_a.iter_mut().zip(row_b.iter_mut()) {
            let x = *a;
            let y = *b;
            *a = x * c + y * s;
            *b = y * c - x * s_conj;
        }
        h[(i + 1) * n + i] = ZERO;
        rotations.push((c, s));
    }
    for (t, i) in (lo..hi - 1).enumerate() {
        let (c, s) = rotations[t];
        let s_conj = s.conj();
        let rmax = (i + 2).min(hi);
        for r in lo..rmax {
            let a = h[r * n + i];
            let b = h[r * n + i + 1];
            h[r * n + i] = a * c + b * s_conj;
            h[r * n + i + 1] = b * c - a * s;
        }
    }
    for i in lo..hi {
        h[i * n + i] += shift;
    }
}

/// Complex Givens rotation mapping (f, g) to (r, 0) with real cosine:
/// G = [[c, s], [-conj(s), c]].
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64) {
    let fa = f.norm();
    let ga = g.norm();
    if ga == 0.0 {
        return (1.0, ZERO);
    }
    if fa == 0.0 {
        return (0.0, Complex64::new(1.0, 0.0));
    }
    let d = fa.hypot(ga);
    let c = fa / d;
    let s = (f / fa) * g.conj() / d;
    (c, s)
}
