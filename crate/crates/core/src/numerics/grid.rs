use crate::error::{Error, Result};

/// Uniform one-dimensional grid with both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    lo: f64,
    hi: f64,
    count: usize,
    spacing: f64,
}

impl Grid1D {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Domain(format!("invalid grid bounds [{lo}, {hi}]")));
        }
        if count < 16 {
            return Err(Error::Domain(format!("grid needs count >= 16, got {count}")));
        }
        Ok(Grid1D {
            lo,
            hi,
            count,
            spacing: (hi - lo) / (count - 1) as f64,
        })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn point(&self, i: usize) -> f64 {
        self.lo + self.spacing * i as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_invariant() {
        let g = Grid1D::new(-2.0, 3.0, 101).unwrap();
        assert!((g.spacing() - 0.05).abs() < 1e-15);
        assert_eq!(g.points().count(), 101);
        assert!((g.point(100) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(Grid1D::new(1.0, 1.0, 32).is_err());
        assert!(Grid1D::new(0.0, 1.0, 15).is_err());
        assert!(Grid1D::new(f64::NAN, 1.0, 32).is_err());
    }
}
