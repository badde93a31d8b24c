//! Numbers of the form p + q·√d with rational p, q, and exact decimal output.

use crate::Q;
use num_integer::Roots;
use num_traits::Zero;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub p: Q,
    pub q: Q,
    pub d: i64,
}

impl Surd {
    pub fn rational(p: Q, d: i64) -> Self {
        Surd { p, q: Q::zero(), d }
    }

    pub fn new(p: Q, q: Q, d: i64) -> Self {
        Surd { p, q, d }
    }

    pub fn zero(d: i64) -> Self {
        Surd::rational(Q::zero(), d)
    }

    pub fn scale(self, k: Q) -> Self {
        Surd { p: self.p * k, q: self.q * k, d: self.d }
    }

    /// Value times `10^digits`, rounded half-to-even, computed exactly.
    pub fn round_scaled(&self, digits: u32) -> i128 {
        let s = 10i128.pow(digits);
        let (pn, pd) = (*self.p.numer() as i128, *self.p.denom() as i128);
        let (qn, qd) = (*self.q.numer() as i128, *self.q.denom() as i128);
        let den = pd * qd;
        // value * s = (a + b·√d) / den
        let a = pn * qd * s;
        let b = qn * pd * s;
        let d = self.d as i128;

        let approx = (a as f64 + b as f64 * (self.d as f64).sqrt()) / den as f64;
        let mut lo = approx.floor() as i128;
        while cmp_surd(a, b, d, lo * den) == Ordering::Less {
            lo -= 1;
        }
        while cmp_surd(a, b, d, (lo + 1) * den) != Ordering::Less {
            lo += 1;
        }
        match cmp_surd(2 * a, 2 * b, d, (2 * lo + 1) * den) {
            Ordering::Less => lo,
            Ordering::Greater => lo + 1,
            Ordering::Equal => {
                if lo % 2 == 0 {
                    lo
                } else {
                    lo + 1
                }
            }
        }
    }

    /// Decimal string with exactly `digits` fractional digits, round-half-even.
    pub fn to_decimal(&self, digits: u32) -> String {
        format_scaled(self.round_scaled(digits), digits)
    }
}

/// Sign of `a + b·√d − t`.
fn cmp_surd(a: i128, b: i128, d: i128, t: i128) -> Ordering {
    let x = t - a;
    // compare b·√d with x
    if b == 0 || d == 0 {
        return 0.cmp(&x);
    }
    let r = d.sqrt();
    if r * r == d {
        return (b * r).cmp(&x);
    }
    let lhs_sq = b * b * d;
    match (b > 0, x >= 0) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (true, true) => lhs_sq.cmp(&(x * x)),
        (false, false) => (x * x).cmp(&lhs_sq),
    }
}

pub fn format_scaled(v: i128, digits: u32) -> String {
    let s = 10i128.pow(digits);
    let sign = if v < 0 { "-" } else { "" };
    let a = v.abs();
    format!("{sign}{}.{:0width$}", a / s, a % s, width = digits as usize)
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        debug_assert!(self.q.is_zero() || o.q.is_zero() || self.d == o.d);
        Surd { p: self.p + o.p, q: self.q + o.q, d: self.d.max(o.d) }
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { p: -self.p, q: -self.q, d: self.d }
    }
}

impl Mul<Q> for Surd {
    type Output = Surd;
    fn mul(self, k: Q) -> Surd {
        self.scale(k)
    }
}
