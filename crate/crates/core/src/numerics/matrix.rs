use num_complex::Complex64;

use super::grid::Grid1D;
use crate::error::{Error, Result};

/// Dense complex matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("matrix dimension must be >= 1".into()));
        }
        Ok(DenseComplexMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Domain("matrix rows must form a square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v)?;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) -> Result<()> {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite(format!("matrix entry ({i},{j}) = {v}")));
        }
        self.entries[i * self.dim + j] = v;
        Ok(())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    pub(crate) fn entries(&self) -> &[Complex64] {
        &self.entries
    }
}

/// Discretize H = -(1/2) d^2/dx^2 + V(x) on the interior points of `grid`
/// with the 4th-order Laplacian stencil (-1/12, 4/3, -5/2, 4/3, -1/12)/h^2
/// and Dirichlet boundaries (the wavefunction is pinned to zero at and
/// beyond the grid endpoints). `potential` holds V at every grid point; the
/// two endpoint samples are unused. The resulting matrix has dimension
/// `grid.count() - 2`.
pub fn discretize_hamiltonian(
    grid: &Grid1D,
    potential: &[Complex64],
) -> Result<DenseComplexMatrix> {
    if grid.count() < 64 {
        return Err(Error::Domain(format!(
            "discretization needs at least 64 grid points, got {}",
            grid.count()
        )));
    }
    if potential.len() != grid.count() {
        return Err(Error::Domain(format!(
            "expected {} potential samples, got {}",
            grid.count(),
            potential.len()
        )));
    }
    let dim = grid.count() - 2;
    let h2 = grid.spacing() * grid.spacing();
    // -(1/2) * stencil / h^2
    let stencil = [
        1.0 / (24.0 * h2),
        -16.0 / (24.0 * h2),
        30.0 / (24.0 * h2),
        -16.0 / (24.0 * h2),
        1.0 / (24.0 * h2),
    ];
    let mut m = DenseComplexMatrix::zeros(dim)?;
    for r in 0..dim {
        for (k, &s) in stencil.iter().enumerate() {
            let off = k as isize - 2;
            let c = r as isize + off;
            if c < 0 || c >= dim as isize {
                continue;
            }
            let cur = m.get(r, c as usize);
            m.set(r, c as usize, cur + Complex64::new(s, 0.0))?;
        }
        let v = potential[r + 1];
        let cur = m.get(r, r);
        m.set(r, r, cur + v)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::eigenvalues;
    use std::f64::consts::PI;

    #[test]
    fn kinetic_stencil_annihilates_constants() {
        let g = Grid1D::new(0.0, 1.0, 64).unwrap();
        let zero_v = vec![Complex64::new(0.0, 0.0); 64];
        let m = discretize_hamiltonian(&g, &zero_v).unwrap();
        // Interior rows (two away from each edge) must sum to zero.
        for r in 2..m.dim() - 2 {
            let sum: Complex64 = (0..m.dim()).map(|c| m.get(r, c)).sum();
            assert!(sum.norm() < 1e-10 / (g.spacing() * g.spacing()) * 1e-6);
        }
    }

    #[test]
    fn infinite_well_ground_state() {
        // V = 0 on [0, pi] with walls at the endpoints: E_1 = pi^2/(2 L^2) = 1/2.
        let g = Grid1D::new(0.0, PI, 64).unwrap();
        let v = vec![Complex64::new(0.0, 0.0); 64];
        let m = discretize_hamiltonian(&g, &v).unwrap();
        let eig = eigenvalues(&m, 0.0).unwrap();
        let mut res: Vec<f64> = eig.eigenvalues().iter().map(|e| e.re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(
            (res[0] - 0.5).abs() < 5e-3,
            "ground state {} should be near 1/2",
            res[0]
        );
    }

    #[test]
    fn harmonic_oscillator_levels() {
        // V = x^2/2 on [-12, 12] with 2400 points: lowest five eigenvalues
        // are n + 1/2 to 1e-4.
        let g = Grid1D::new(-12.0, 12.0, 2400).unwrap();
        let v: Vec<Complex64> = g.points().map(|x| Complex64::new(0.5 * x * x, 0.0)).collect();
        let m = discretize_hamiltonian(&g, &v).unwrap();
        let eig = eigenvalues(&m, 0.0).unwrap();
        let mut res: Vec<f64> = eig.eigenvalues().iter().map(|e| e.re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for n in 0..5 {
            assert!(
                (res[n] - (n as f64 + 0.5)).abs() < 1e-4,
                "level {n}: {} vs {}",
                res[n],
                n as f64 + 0.5
            );
        }
    }

    #[test]
    fn oscillator_level_error_scales_quartically() {
        // The 4th-order stencil's eigenvalue error drops ~16x when the grid
        // is refined 2x.
        let level_error = |count: usize| -> f64 {
            let g = Grid1D::new(-10.0, 10.0, count).unwrap();
            let v: Vec<Complex64> =
                g.points().map(|x| Complex64::new(0.5 * x * x, 0.0)).collect();
            let m = discretize_hamiltonian(&g, &v).unwrap();
            let eig = eigenvalues(&m, 0.0).unwrap();
            let mut res: Vec<f64> = eig.eigenvalues().iter().map(|e| e.re).collect();
            res.sort_by(|a, b| a.partial_cmp(b).unwrap());
            (0..4)
                .map(|n| (res[n] - (n as f64 + 0.5)).abs())
                .fold(0.0, f64::max)
        };
        let coarse = level_error(201);
        let fine = level_error(401);
        let ratio = coarse / fine;
        assert!(
            (10.0..=24.0).contains(&ratio),
            "expected ~16x error drop, got {ratio} ({coarse} -> {fine})"
        );
    }

    #[test]
    fn verification_is_deterministic() {
        // Identical inputs give bit-identical eigenvalues within one build.
        let g = Grid1D::new(-6.0, 6.0, 128).unwrap();
        let v: Vec<Complex64> = g
            .points()
            .map(|x| Complex64::new(0.5 * x * x, (-x * x).exp()))
            .collect();
        let m = discretize_hamiltonian(&g, &v).unwrap();
        let a = eigenvalues(&m, 0.0).unwrap();
        let b = eigenvalues(&m, 0.0).unwrap();
        assert_eq!(a, b);
    }
}
