//! Truncated formal power series with exact rational coefficients.
//!
//! Two containers live here: [`TruncatedSeries`] for univariate series
//! `c_0 + c_1 z + ... + c_n z^n` and [`BivariateSeries`] for double series
//! `sum c_{p,q} t^p z^q` truncated by total degree `p + q <= cap`. Every
//! operation is exact on the coefficients it keeps; anything above the
//! truncation order is dropped, never approximated.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has a zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("constant term must be 1, found {0}")]
    ConstantTermNotOne(Rational),
    #[error("constant term must be 0, found {0}")]
    ConstantTermNotZero(Rational),
    #[error("function is not normalized: expected coefficients 0, 1, ... but found {a0}, {a1}")]
    NotNormalized { a0: Rational, a1: Rational },
    #[error("truncation cap {cap} exceeds the largest admissible value {max}")]
    CapTooLarge { cap: usize, max: usize },
    #[error("a truncated series needs at least one coefficient")]
    Empty,
}

/// Shorthand for the rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `c_0 + c_1 z + ... + c_order z^order`, exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self, SeriesError> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The monomial `z`, truncated at `order`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^n`; zero past the truncation order is *not* implied,
    /// so this returns `None` there.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<Rational> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect();
        Self { coeffs }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Quotient `self / divisor`, the unique `q` with `q * divisor = self`
    /// on every retained coefficient.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order().min(divisor.order());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &divisor.coeffs[k];
                if !b.is_zero() {
                    acc -= b * &q[n - k];
                }
            }
            q.push(acc / b0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * int(n as i64))
            .collect();
        Self { coeffs }
    }

    /// Antiderivative with zero constant term; order grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / int(n as i64 + 1)),
        );
        Self { coeffs }
    }

    /// `log(a)` for `a(0) = 1`, through `L' = a'/a`.
    pub fn log1(&self) -> Result<Self, SeriesError> {
        self.expect_constant_one()?;
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self.derivative().div(&self.truncate(self.order() - 1))?;
        Ok(quotient.integral())
    }

    /// `log(a)` for `a(0) = 1`, through `log(1+u) = u - u^2/2 + u^3/3 - ...`.
    ///
    /// Agrees with [`TruncatedSeries::log1`] coefficient for coefficient.
    pub fn log1_composed(&self) -> Result<Self, SeriesError> {
        self.expect_constant_one()?;
        let mut u = self.clone();
        u.coeffs[0] = Rational::zero();
        Ok(compose_log1p(&u, Self::zero(self.order()), |acc, term, k| {
            acc.add(&term.scale(&log1p_weight(k)))
        }))
    }

    /// `exp(a)` for `a(0) = 0`, through `E' = a' E`.
    pub fn exp0(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero(self.coeffs[0].clone()));
        }
        let order = self.order();
        let da = self.derivative();
        let mut e: Vec<Rational> = Vec::with_capacity(order + 1);
        e.push(Rational::one());
        // n e_n = sum_{k=1}^{n} k a_k e_{n-k}
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let ka = &da.coeffs[k - 1];
                if !ka.is_zero() {
                    acc += ka * &e[n - k];
                }
            }
            e.push(acc / int(n as i64));
        }
        Ok(Self { coeffs: e })
    }

    /// Principal square root of a series with constant term 1.
    pub fn sqrt1(&self) -> Result<Self, SeriesError> {
        self.expect_constant_one()?;
        let order = self.order();
        let two = int(2);
        let mut s: Vec<Rational> = Vec::with_capacity(order + 1);
        s.push(Rational::one());
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &s[k] * &s[n - k];
            }
            s.push(acc / &two);
        }
        Ok(Self { coeffs: s })
    }

    /// `f(z^k)`; the order is multiplied by `k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order() * k);
        for (n, c) in self.coeffs.iter().enumerate() {
            out.coeffs[n * k] = c.clone();
        }
        out
    }

    fn expect_constant_one(&self) -> Result<(), SeriesError> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(SeriesError::ConstantTermNotOne(self.coeffs[0].clone()))
        }
    }

    /// Checks `f(0) = 0` and `f'(0) = 1`.
    pub fn check_normalized(&self) -> Result<(), SeriesError> {
        let a0 = self.coeffs[0].clone();
        let a1 = self.coeffs.get(1).cloned().unwrap_or_else(Rational::zero);
        if a0.is_zero() && a1.is_one() {
            Ok(())
        } else {
            Err(SeriesError::NotNormalized { a0, a1 })
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// `(-1)^(k+1) / k`, the weight of `u^k` in `log(1+u)`.
fn log1p_weight(k: usize) -> Rational {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    ratio(sign, k as i64)
}

/// Folds the powers `u, u^2, ..., u^K` of a series without constant term,
/// where `K` is the largest power that can be nonzero below the truncation.
fn compose_log1p<S, F>(u: &S, init: S, mut fold: F) -> S
where
    S: PowerSeriesLike,
    F: FnMut(S, &S, usize) -> S,
{
    let mut acc = init;
    let mut power = u.clone();
    for k in 1..=u.max_degree() {
        if power.is_zero() {
            break;
        }
        acc = fold(acc, &power, k);
        power = power.mul_series(u);
    }
    acc
}

trait PowerSeriesLike: Clone {
    fn max_degree(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn mul_series(&self, other: &Self) -> Self;
}

impl PowerSeriesLike for TruncatedSeries {
    fn max_degree(&self) -> usize {
        self.order()
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn mul_series(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl PowerSeriesLike for BivariateSeries {
    fn max_degree(&self) -> usize {
        self.cap
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn mul_series(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// `f_2(z) = sqrt(f(z^2))` for a normalized `f`.
///
/// Writing `f(w) = w g(w)` with `g(0) = 1`, the result is `z sqrt(g(z^2))`,
/// an odd series whose order is twice that of `f`.
pub fn sqrt_transform(f: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    f.check_normalized()?;
    let order = f.order();
    let g = TruncatedSeries::new(f.coeffs[1..].to_vec())?;
    let root = g.sqrt1()?;
    let mut out = TruncatedSeries::zero(2 * order);
    for (k, c) in root.coeffs.iter().enumerate() {
        out.coeffs[2 * k + 1] = c.clone();
    }
    Ok(out)
}

/// Double series `sum c_{p,q} t^p z^q` kept for `p + q <= cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    cap: usize,
    // grouped by total degree d = p + q, then by q
    coeffs: Vec<Rational>,
}

fn tri_index(p: usize, q: usize) -> usize {
    let d = p + q;
    d * (d + 1) / 2 + q
}

impl BivariateSeries {
    pub fn zero(cap: usize) -> Self {
        Self {
            cap,
            coeffs: vec![Rational::zero(); tri_index(0, cap) + 1],
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&Rational> {
        (p + q <= self.cap).then(|| &self.coeffs[tri_index(p, q)])
    }

    pub fn set(&mut self, p: usize, q: usize, value: Rational) {
        assert!(p + q <= self.cap, "({p},{q}) is above the cap {}", self.cap);
        self.coeffs[tri_index(p, q)] = value;
    }

    /// All `(p, q, c_{p,q})`, ordered by total degree and then by `q`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        (0..=self.cap)
            .flat_map(|d| (0..=d).map(move |q| (d - q, q)))
            .map(|(p, q)| (p, q, &self.coeffs[tri_index(p, q)]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter()
            .all(|(p, q, c)| p <= q || self.get(q, p).is_some_and(|d| d == c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(cap);
        for (p1, q1, a) in self.iter() {
            if a.is_zero() || p1 + q1 > cap {
                continue;
            }
            let room = cap - p1 - q1;
            for d in 0..=room {
                for q2 in 0..=d {
                    let b = &other.coeffs[tri_index(d - q2, q2)];
                    if !b.is_zero() {
                        out.coeffs[tri_index(p1 + d - q2, q1 + q2)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `log(a)` for `a(0,0) = 1`, by composing `log(1+u)` with `u = a - 1`
    /// and truncating by total degree.
    pub fn log1(&self) -> Result<Self, SeriesError> {
        let c00 = &self.coeffs[0];
        if !c00.is_one() {
            return Err(SeriesError::ConstantTermNotOne(c00.clone()));
        }
        let mut u = self.clone();
        u.coeffs[0] = Rational::zero();
        Ok(compose_log1p(&u, Self::zero(self.cap), |mut acc, term, k| {
            let w = log1p_weight(k);
            for (slot, c) in acc.coeffs.iter_mut().zip(&term.coeffs) {
                if !c.is_zero() {
                    *slot += c * &w;
                }
            }
            acc
        }))
    }
}

/// `log((f(t) - f(z)) / (t - z))` truncated at total degree `cap`.
///
/// The quotient has the closed form `sum_n a_n sum_{i+j=n-1} t^i z^j`, so
/// its `(i, j)` entry is `a_{i+j+1}`; this needs `cap <= f.order() - 1`.
pub fn difference_quotient_log(
    f: &TruncatedSeries,
    cap: usize,
) -> Result<BivariateSeries, SeriesError> {
    f.check_normalized()?;
    let max = f.order() - 1;
    if cap > max {
        return Err(SeriesError::CapTooLarge { cap, max });
    }
    let mut quotient = BivariateSeries::zero(cap);
    for d in 0..=cap {
        let a = &f.coeffs[d + 1];
        for q in 0..=d {
            quotient.set(d - q, q, a.clone());
        }
    }
    quotient.log1()
}
