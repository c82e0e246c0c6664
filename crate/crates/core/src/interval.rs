//! Closed intervals of `f64` with outward rounding.
//!
//! Every elementary operation is computed in round-to-nearest and then
//! widened by one ulp on each side. IEEE 754 guarantees the nearest result
//! for `+ - * /` and `sqrt`, so the widened interval contains the exact one.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

fn down(v: f64) -> f64 {
    if v == f64::NEG_INFINITY { v } else { v.next_down() }
}

fn up(v: f64) -> f64 {
    if v == f64::INFINITY { v } else { v.next_up() }
}

impl Interval {
    /// `[lo, hi]`; panics when `lo > hi` or either bound is NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "invalid interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn point(v: f64) -> Self {
        Self::new(v, v)
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn mid(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_finite(self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn hull(self, other: Self) -> Self {
        Self::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    pub fn min_hi(self, bound: f64) -> Option<Self> {
        (self.lo <= bound).then(|| Self::new(self.lo, self.hi.min(bound)))
    }

    /// `x^2`, tighter than `x * x` when `x` straddles zero.
    pub fn sqr(self) -> Self {
        if self.lo >= 0.0 {
            Self::new(down(self.lo * self.lo), up(self.hi * self.hi))
        } else if self.hi <= 0.0 {
            Self::new(down(self.hi * self.hi), up(self.lo * self.lo))
        } else {
            let m = self.lo.abs().max(self.hi);
            Self::new(0.0, up(m * m))
        }
    }

    /// `x^n` for small `n`; exact monotone cases for odd powers and
    /// nonnegative bases.
    pub fn powi(self, n: u32) -> Self {
        match n {
            0 => Self::point(1.0),
            1 => self,
            2 => self.sqr(),
            _ if n % 2 == 0 => self.powi(n / 2).sqr(),
            _ if self.lo >= 0.0 => self.sqr().powi((n - 1) / 2) * self,
            _ => self.powi(n - 1) * self,
        }
    }

    /// Square root of the part of `self` that is nonnegative; `None` when
    /// the whole interval is negative.
    pub fn sqrt_nonneg(self) -> Option<Self> {
        if self.hi < 0.0 {
            return None;
        }
        let lo = if self.lo <= 0.0 { 0.0 } else { down(self.lo.sqrt()).max(0.0) };
        Some(Self::new(lo, up(self.hi.sqrt())))
    }

    /// `1 / x`; the whole line when `x` contains zero.
    pub fn recip(self) -> Self {
        if self.lo > 0.0 || self.hi < 0.0 {
            Self::new(down(1.0 / self.hi), up(1.0 / self.lo))
        } else {
            Self::new(f64::NEG_INFINITY, f64::INFINITY)
        }
    }

    pub fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Self) -> Self::Output {
        Interval::new(down(self.lo + rhs.lo), up(self.hi + rhs.hi))
    }
}

impl Sub for Interval {
    type Output = Interval;

    fn sub(self, rhs: Self) -> Self::Output {
        Interval::new(down(self.lo - rhs.hi), up(self.hi - rhs.lo))
    }
}

impl Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Self::Output {
        Interval::new(-self.hi, -self.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;

    fn mul(self, rhs: Self) -> Self::Output {
        let products = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        // 0 * inf only arises from unbounded operands; treat the result as unbounded
        if products.iter().any(|p| p.is_nan()) {
            return Interval::new(f64::NEG_INFINITY, f64::INFINITY);
        }
        let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = products.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::new(down(lo), up(hi))
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;

    fn mul(self, rhs: f64) -> Self::Output {
        self * Interval::point(rhs)
    }
}

impl Add<f64> for Interval {
    type Output = Interval;

    fn add(self, rhs: f64) -> Self::Output {
        self + Interval::point(rhs)
    }
}

impl Sub<Interval> for f64 {
    type Output = Interval;

    fn sub(self, rhs: Interval) -> Self::Output {
        Interval::point(self) - rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqr_straddling_zero() {
        let x = Interval::new(-2.0, 1.0);
        let s = x.sqr();
        assert_eq!(s.lo(), 0.0);
        assert!(s.contains(4.0));
        assert!((x * x).lo() < 0.0);
    }

    #[test]
    fn sqrt_clips_negative_part() {
        let s = Interval::new(-1.0, 4.0).sqrt_nonneg().unwrap();
        assert_eq!(s.lo(), 0.0);
        assert!(s.contains(2.0));
        assert!(Interval::new(-3.0, -1.0).sqrt_nonneg().is_none());
    }

    #[test]
    fn constants_are_enclosed() {
        let inv_sqrt5 = Interval::point(5.0).sqrt_nonneg().unwrap().recip();
        let v = 1.0 / 5f64.sqrt();
        assert!(inv_sqrt5.contains(v));
        assert!(inv_sqrt5.width() < 1e-15);
    }

    #[test]
    fn recip_through_zero_is_unbounded() {
        let r = Interval::new(-1.0, 1.0).recip();
        assert!(!r.is_finite());
        assert!(!(r * Interval::new(0.0, 1.0)).is_finite());
    }

    proptest! {
        #[test]
        fn ops_contain_pointwise_results(
            a in -10.0f64..10.0, b in 0.0f64..5.0,
            c in -10.0f64..10.0, d in 0.0f64..5.0,
            s in 0.0f64..1.0, t in 0.0f64..1.0,
        ) {
            let x = Interval::new(a, a + b);
            let y = Interval::new(c, c + d);
            let px = a + s * b;
            let py = c + t * d;
            prop_assert!((x + y).contains(px + py));
            prop_assert!((x - y).contains(px - py));
            prop_assert!((x * y).contains(px * py));
            prop_assert!(x.sqr().contains(px * px));
            prop_assert!(x.powi(3).contains(px * px * px));
            prop_assert!(x.powi(4).contains(px * px * px * px));
            if px >= 0.0 {
                prop_assert!(x.sqrt_nonneg().unwrap().contains(px.sqrt()));
            }
        }
    }
}
