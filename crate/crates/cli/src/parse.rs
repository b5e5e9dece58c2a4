//! Single-token parsers for command-line values: complex numbers as `a+bi`
//! / `a-bi` (no spaces) and grids as `lo:hi:count`.

use darboux::{Complex64, Grid1D};

/// Parse `a`, `bi`, `i`, `a+bi`, `a-bi` (also accepting `j` and a trailing
/// sign form like `-i`).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let t = t.replace('j', "i");
    if !t.contains('i') {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|e| format!("bad real part in {s:?}: {e}"));
    }
    // Split at the sign that separates real and imaginary parts, skipping a
    // leading sign and exponent signs.
    let bytes = t.as_bytes();
    let mut split = None;
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if (b == b'+' || b == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
        }
    }
    let (re_str, im_str) = match split {
        Some(k) => (&t[..k], &t[k..]),
        None => ("0", t.as_str()),
    };
    let im_str = im_str.strip_suffix('i').ok_or_else(|| {
        format!("imaginary part of {s:?} must end in 'i'")
    })?;
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse::<f64>()
            .map_err(|e| format!("bad imaginary part in {s:?}: {e}"))?,
    };
    let re = re_str
        .parse::<f64>()
        .map_err(|e| format!("bad real part in {s:?}: {e}"))?;
    Ok(Complex64::new(re, im))
}

#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

pub fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be lo:hi:count, got {s:?}"));
    }
    let lo = parts[0].parse::<f64>().map_err(|e| format!("bad lo: {e}"))?;
    let hi = parts[1].parse::<f64>().map_err(|e| format!("bad hi: {e}"))?;
    let count = parts[2]
        .parse::<usize>()
        .map_err(|e| format!("bad count: {e}"))?;
    // Fail fast with the library's own validation.
    Grid1D::new(lo, hi, count).map_err(|e| e.to_string())?;
    Ok(GridSpec { lo, hi, count })
}

impl GridSpec {
    pub fn build(&self) -> Grid1D {
        Grid1D::new(self.lo, self.hi, self.count).expect("validated at parse time")
    }
}
