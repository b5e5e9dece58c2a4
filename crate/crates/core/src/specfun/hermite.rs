use crate::error::{Error, Result};

/// Physicists' Hermite polynomial H_n(x) by the exact three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
pub fn hermite_h(n: u32, x: f64) -> Result<f64> {
    if n > 200 {
        return Err(Error::Range(format!("hermite_h supports n <= 200, got {n}")));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0_f64;
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
