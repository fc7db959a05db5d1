//! Piecewise-rational function machinery.
//!
//! Pieces are stored in factored form with exact integer coefficients. The
//! numerator polynomials reach degree 26 with ten-digit coefficients and
//! nearly cancel at the interval ends, so the double-precision path evaluates
//! them with a compensated (error-free transformation) Horner scheme;
//! denominators stay in factored form, which is
//! well conditioned on every interval. An exact big-rational evaluator backs
//! the unit tests.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// A polynomial factor with multiplicity: coefficients ascending in r.
pub(crate) struct F(pub &'static [i128], pub u32);

/// One rational piece: product of numerator factors over
/// `den_const * product of denominator factors`. The overall sign lives in
/// `den_const`.
pub(crate) struct Piece {
    pub num: &'static [F],
    pub den_const: i128,
    pub den: &'static [F],
}

/// Quadratic surd `(p + q*sqrt(d)) / s` with `s > 0`; rationals have `q = 0`.
#[derive(Copy, Clone, Debug)]
pub struct Surd {
    pub p: i64,
    pub q: i64,
    pub d: u64,
    pub s: i64,
}

impl Surd {
    pub const fn rational(p: i64, s: i64) -> Self {
        Surd { p, q: 0, d: 0, s }
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.s as f64
    }

    /// Exact comparison of this surd with a (dyadic-rational) f64.
    pub fn cmp_f64(&self, r: f64) -> Ordering {
        let approx = self.to_f64();
        if (approx - r).abs() > 1e-9 * approx.abs().max(1.0) {
            return approx.partial_cmp(&r).unwrap();
        }
        // sign of (p + q*sqrt(d))/s - r  =  sign of q*sqrt(d) - (r*s - p)
        let rs = BigRational::from_float(r).expect("finite r") * BigInt::from(self.s);
        let a = rs - BigInt::from(self.p);
        let q = BigInt::from(self.q);
        if self.q == 0 {
            return big_sign(&-a);
        }
        match (q.is_negative(), a.is_negative() || a.is_zero()) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            _ => {
                // both sides share a sign; compare squares
                let lhs = BigRational::from(&q * &q * BigInt::from(self.d));
                let rhs = &a * &a;
                let sq = lhs.cmp(&rhs);
                if q.is_negative() {
                    sq.reverse()
                } else {
                    sq
                }
            }
        }
    }
}

fn big_sign(x: &BigRational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Compensated Horner evaluation; coefficients are exactly representable.
fn horner(coeffs: &[i128], x: f64) -> f64 {
    debug_assert!(coeffs.iter().all(|&c| c.unsigned_abs() < (1u128 << 53)));
    let mut s = *coeffs.last().unwrap() as f64;
    let mut err = 0.0f64;
    for &c in coeffs.iter().rev().skip(1) {
        let (p, pe) = two_prod(s, x);
        let (t, se) = two_sum(p, c as f64);
        err = err.mul_add(x, pe + se);
        s = t;
    }
    s + err
}

fn eval_factors(fs: &[F], x: f64) -> f64 {
    fs.iter().map(|F(c, pow)| horner(c, x).powi(*pow as i32)).product()
}

impl Piece {
    pub fn eval(&self, r: f64) -> f64 {
        let num = eval_factors(self.num, r);
        let den = self.den_const as f64 * eval_factors(self.den, r);
        num / den
    }

    /// Exact evaluation at the rational number represented by the f64 `r`.
    pub fn eval_exact(&self, r: f64) -> BigRational {
        let x = BigRational::from_float(r).expect("finite r");
        let poly = |c: &[i128]| -> BigRational {
            let mut acc = BigRational::zero();
            for &k in c.iter().rev() {
                acc = acc * &x + BigRational::from(BigInt::from(k));
            }
            acc
        };
        let fold = |fs: &[F]| -> BigRational {
            fs.iter().fold(BigRational::from(BigInt::from(1)), |acc, F(c, pow)| {
                let mut v = BigRational::from(BigInt::from(1));
                for _ in 0..*pow {
                    v *= poly(c);
                }
                acc * v
            })
        };
        fold(self.num) / (fold(self.den) * BigInt::from(self.den_const))
    }
}

/// A piecewise-rational function of r on [1, inf): piece i applies on
/// `[breakpoints[i], breakpoints[i+1])`, the last piece on `[last, inf)`.
pub struct PiecewiseRational {
    pub breakpoints: &'static [Surd],
    pub(crate) pieces: &'static [Piece],
}

impl PiecewiseRational {
    /// Index of the piece containing `r`; exact comparisons at breakpoints.
    pub fn piece_index(&self, r: f64) -> usize {
        let mut idx = 0;
        for (i, b) in self.breakpoints.iter().enumerate().skip(1) {
            if b.cmp_f64(r) != Ordering::Greater {
                idx = i;
            } else {
                break;
            }
        }
        idx
    }

    /// Evaluate at finite r >= 1 (callers handle the r = inf limits).
    pub fn eval(&self, r: f64) -> f64 {
        debug_assert!(r.is_finite() && r >= 1.0);
        self.pieces[self.piece_index(r)].eval(r)
    }

    pub fn eval_exact(&self, r: f64) -> BigRational {
        self.pieces[self.piece_index(r)].eval_exact(r)
    }

    /// Exact evaluation as f64 (correct to a rounding of the exact value).
    pub fn eval_exact_f64(&self, r: f64) -> f64 {
        self.eval_exact(r).to_f64().unwrap()
    }
}
