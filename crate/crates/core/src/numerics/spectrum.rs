use num_complex::Complex64;

use super::eigen::EigenSet;

/// One analytic level and its (possibly missing) numerical partner.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelMatch {
    pub analytic: f64,
    pub matched: Option<Complex64>,
    /// |Re E_num - E_analytic| when matched.
    pub delta: Option<f64>,
    /// |Im E_num| when matched.
    pub imag: Option<f64>,
}

/// Result of pairing a numerical eigenvalue set against an analytic level
/// list.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub window: f64,
    pub entries: Vec<LevelMatch>,
}

impl SpectrumReport {
    pub fn all_matched(&self) -> bool {
        self.entries.iter().all(|e| e.matched.is_some())
    }

    pub fn max_delta(&self) -> Option<f64> {
        self.entries
            .iter()
            .filter_map(|e| e.delta)
            .fold(None, |acc, d| Some(acc.map_or(d, |a: f64| a.max(d))))
    }

    pub fn max_imag(&self) -> Option<f64> {
        self.entries
            .iter()
            .filter_map(|e| e.imag)
            .fold(None, |acc, d| Some(acc.map_or(d, |a: f64| a.max(d))))
    }

    pub fn unmatched(&self) -> Vec<f64> {
        self.entries
            .iter()
            .filter(|e| e.matched.is_none())
            .map(|e| e.analytic)
            .collect()
    }
}

/// Greedy nearest matching of numerical eigenvalues to a sorted analytic
/// list. Each numerical eigenvalue is used at most once; levels with no
/// eigenvalue within `window` (measured on the real part) stay unmatched.
pub fn match_spectrum(numerical: &EigenSet, analytic: &[f64], window: f64) -> SpectrumReport {
    let mut used = vec![false; numerical.eigenvalues().len()];
    let mut entries = Vec::with_capacity(analytic.len());
    for &level in analytic {
        let mut best: Option<(usize, f64)> = None;
        for (i, ev) in numerical.eigenvalues().iter().enumerate() {
            if used[i] {
                continue;
            }
            let d = (ev.re - level).abs();
            if d <= window && best.map_or(true, |(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
        match best {
            Some((i, d)) => {
                used[i] = true;
                let ev = numerical.eigenvalues()[i];
                entries.push(LevelMatch {
                    analytic: level,
                    matched: Some(ev),
                    delta: Some(d),
                    imag: Some(ev.im.abs()),
                });
            }
            None => entries.push(LevelMatch {
                analytic: level,
                matched: None,
                delta: None,
                imag: None,
            }),
        }
    }
    SpectrumReport { window, entries }
}
