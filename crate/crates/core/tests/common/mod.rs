//! Shared oracle machinery for the integration tests: double-double
//! arithmetic (~32 significant digits) and independent reference
//! implementations (Stirling gamma, Taylor erf, brute-force hypergeometric
//! and Bessel series). These deliberately share no code with the library
//! paths they check.

#![allow(dead_code)]
// The LN2/PI constants here are exact double-double pairs (the correctly
// rounded f64 plus its residual), not loose approximations of the constants.
#![allow(clippy::approx_constant)]

use darboux::Complex64;

/// Double-double number: value = hi + lo with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const LN2: Dd = Dd {
        hi: 0.693_147_180_559_945_3,
        lo: 2.319_046_813_846_299_6e-17,
    };
    pub const PI: Dd = Dd {
        hi: 3.141_592_653_589_793,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const TWO_PI: Dd = Dd {
        hi: 6.283_185_307_179_586,
        lo: 2.449_293_598_294_706_4e-16,
    };

    pub fn from_f64(a: f64) -> Dd {
        Dd { hi: a, lo: 0.0 }
    }

    pub fn from_ratio(n: i64, d: i64) -> Dd {
        Dd::from_f64(n as f64).div(Dd::from_f64(d as f64))
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul(Dd::from_f64(q2)));
        let q3 = r2.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    pub fn scale(self, k: f64) -> Dd {
        self.mul(Dd::from_f64(k))
    }

    /// Exact-dividend division by an f64 (unlike `scale(1.0/k)`, which
    /// injects the f64 rounding of the reciprocal).
    pub fn div_f64(self, k: f64) -> Dd {
        self.div(Dd::from_f64(k))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        // One dd Newton step on the f64 seed squares the accuracy.
        let s = Dd::from_f64(self.hi.sqrt());
        s.add(self.div(s)).scale(0.5)
    }

    /// exp by range reduction against ln 2 and a dd Taylor tail.
    pub fn exp(self) -> Dd {
        let n = (self.hi / Dd::LN2.hi).round();
        let r = self.sub(Dd::LN2.scale(n));
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 1..40 {
            term = term.mul(r).div_f64(k as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        // 2^n is exact in f64 for |n| < 1023.
        sum.scale(2.0f64.powi(n as i32))
    }

    /// ln by Newton iteration on exp (two steps from the f64 seed).
    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0);
        let mut l = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            // l <- l + a e^{-l} - 1
            let corr = self.mul(l.neg().exp()).sub(Dd::ONE);
            l = l.add(corr);
        }
        l
    }

    pub fn powi(self, mut n: u64) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }
}

/// Complex double-double.
#[derive(Debug, Clone, Copy)]
pub struct Ddc {
    pub re: Dd,
    pub im: Dd,
}

impl Ddc {
    pub const ZERO: Ddc = Ddc {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: Ddc = Ddc {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn from_c64(z: Complex64) -> Ddc {
        Ddc {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(self, o: Ddc) -> Ddc {
        Ddc {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn mul(self, o: Ddc) -> Ddc {
        Ddc {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub fn scale(self, k: Dd) -> Ddc {
        Ddc {
            re: self.re.mul(k),
            im: self.im.mul(k),
        }
    }

    pub fn norm_f64(self) -> f64 {
        self.to_c64().norm()
    }
}

// Bernoulli numbers B_2..B_20 as exact rationals.
const BERNOULLI: [(i64, i64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

/// ln Gamma(x) for x >= 60 by the Stirling series in dd arithmetic;
/// truncation error below 1e-36 there.
fn ln_gamma_stirling_dd(x: Dd) -> Dd {
    let lnx = x.ln();
    let mut acc = x
        .sub(Dd::from_ratio(1, 2))
        .mul(lnx)
        .sub(x)
        .add(Dd::TWO_PI.ln().scale(0.5));
    let x2 = x.mul(x);
    let mut xpow = x; // x^{2k-1}
    for (k, &(n, d)) in BERNOULLI.iter().enumerate() {
        let kk = (k + 1) as i64;
        let coef = Dd::from_ratio(n, d * (2 * kk) * (2 * kk - 1));
        acc = acc.add(coef.div(xpow));
        xpow = xpow.mul(x2);
    }
    acc
}

/// Gamma oracle for real x > 0: shift x upward by recurrence until the
/// Stirling series applies, entirely in dd arithmetic. Relative accuracy is
/// ~1e-30, far beyond anything the Lanczos path under test could borrow.
pub fn gamma_oracle(x: f64) -> f64 {
    assert!(x > 0.0, "gamma oracle only implemented for x > 0");
    let shift = (60.0 - x).ceil().max(0.0) as u64;
    let xd = Dd::from_f64(x);
    let mut prod = Dd::ONE;
    for k in 0..shift {
        prod = prod.mul(xd.add(Dd::from_f64(k as f64)));
    }
    let ln_big = ln_gamma_stirling_dd(xd.add(Dd::from_f64(shift as f64)));
    ln_big.exp().div(prod).to_f64()
}

/// erf oracle: Taylor series summed in dd arithmetic (usable to |x| ~ 5).
pub fn erf_oracle(x: f64) -> f64 {
    let xd = Dd::from_f64(x);
    let x2 = xd.mul(xd);
    let mut term = xd;
    let mut sum = xd;
    for n in 1..400 {
        term = term.mul(x2).neg().div_f64(n as f64);
        let contrib = term.div_f64((2 * n + 1) as f64);
        sum = sum.add(contrib);
        if contrib.hi.abs() < 1e-34 * sum.hi.abs().max(1e-300) {
            break;
        }
    }
    let sqrt_pi = Dd::PI.sqrt();
    sum.scale(2.0).div(sqrt_pi).to_f64()
}

/// 1F1 oracle: the plain power series, term by term in dd arithmetic
/// (200+ terms; no asymptotic switch, no Kummer transformation).
pub fn kummer_oracle(a: f64, b: f64, x: f64) -> f64 {
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for k in 0..2000u64 {
        let kf = k as f64;
        term = term
            .mul(Dd::from_f64(a + kf))
            .div(Dd::from_f64(b + kf))
            .mul(Dd::from_f64(x))
            .div_f64(kf + 1.0);
        sum = sum.add(term);
        if term.hi.abs() < 1e-34 * sum.hi.abs().max(1e-300) {
            break;
        }
    }
    sum.to_f64()
}

/// I_nu series oracle for complex argument: the ascending series summed in
/// complex dd arithmetic, with the (z/2)^nu / Gamma(nu+1) prefactor from the
/// dd gamma oracle and an f64 complex power (the prefactor is a single
/// rounding; the series is the part worth hardening).
pub fn bessel_i_series_oracle(nu: f64, z: Complex64) -> Complex64 {
    let w = Ddc::from_c64(z * z * 0.25);
    let mut term = Ddc::ONE;
    let mut sum = Ddc::ONE;
    for k in 0..500u64 {
        let kf = k as f64;
        let denom = Dd::from_f64(kf + 1.0).mul(Dd::from_f64(nu + kf + 1.0));
        term = Ddc {
            re: term.re.div(denom),
            im: term.im.div(denom),
        }
        .mul(w);
        sum = sum.add(term);
        if term.norm_f64() < 1e-32 * sum.norm_f64().max(1e-300) {
            break;
        }
    }
    let pref = (z * 0.5).powf(nu) / gamma_oracle(nu + 1.0);
    pref * sum.to_c64()
}

/// Composite Simpson in plain f64 over uniformly sampled values; the
/// independent quadrature oracle for normalization checks.
pub fn simpson_oracle(h: f64, samples: &[f64]) -> f64 {
    assert!(samples.len() % 2 == 1, "Simpson needs an odd count");
    let mut acc = samples[0] + samples[samples.len() - 1];
    for (i, s) in samples.iter().enumerate().skip(1).take(samples.len() - 2) {
        acc += s * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}
