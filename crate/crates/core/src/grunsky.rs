//! Grunsky coefficients of the odd square-root transform `f_2(z) = sqrt(f(z^2))`.
//!
//! The table stores `omega_{p,q}` exactly as it appears in the expansion
//! `log((f_2(t) - f_2(z)) / (t - z)) = sum omega_{p,q} t^p z^q`. The entries
//! used for coefficient estimates are the odd-odd ones, `omega_{1,1}`,
//! `omega_{1,3}`, `omega_{3,3}` and so on; `omega(1, 3)` below means exactly
//! that entry. Because `f_2` is odd, entries with `p + q` odd vanish.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::power_series::{
    difference_quotient_log, int, ratio, sqrt_transform, BivariateSeries, Rational, SeriesError,
    TruncatedSeries,
};

/// Total-degree cap used for Grunsky tables; reaches `omega_{3,5}`.
pub const DEFAULT_CAP: usize = 8;

/// Smallest order of `f` for which a table with [`DEFAULT_CAP`] is exact.
pub const MIN_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrunskyError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("Grunsky entry omega[{p},{q}] is not available in this table")]
    MissingEntry { p: usize, q: usize },
    #[error("cap {cap} is too small, at least {min} is needed")]
    CapTooSmall { cap: usize, min: usize },
    #[error("coefficient a{0} is not available")]
    MissingCoefficient(usize),
}

/// Functions the identity checks run against.
///
/// `Custom` is an arbitrary normalized coefficient list; nothing checks
/// that it is univalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TestFunction {
    /// `z / (1 - z)^2`, `a_n = n`.
    Koebe,
    Identity,
    /// `z / (1 - z)`, `a_n = 1`.
    Geometric,
    Custom(Vec<Rational>),
}

impl TestFunction {
    pub const CATALOGUE: [TestFunction; 3] =
        [TestFunction::Koebe, TestFunction::Identity, TestFunction::Geometric];

    pub fn name(&self) -> &'static str {
        match self {
            TestFunction::Koebe => "koebe",
            TestFunction::Identity => "identity",
            TestFunction::Geometric => "geometric",
            TestFunction::Custom(_) => "custom",
        }
    }

    pub fn univalence_verified(&self) -> bool {
        !matches!(self, TestFunction::Custom(_))
    }

    /// Taylor prefix `a_0 + a_1 z + ... + a_order z^order`. Custom lists
    /// shorter than `order + 1` are padded with zeros and longer ones cut.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let coeffs = (0..=order)
            .map(|n| match self {
                TestFunction::Koebe => int(n as i64),
                TestFunction::Identity => int((n == 1) as i64),
                TestFunction::Geometric => int((n >= 1) as i64),
                TestFunction::Custom(c) => c.get(n).cloned().unwrap_or_else(Rational::zero),
            })
            .collect();
        TruncatedSeries::new(coeffs).expect("order + 1 >= 1 coefficients")
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Table of the odd transform `f_2`.
    Odd,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrunskyTable {
    omega: BivariateSeries,
    source: String,
    parity: Parity,
}

impl GrunskyTable {
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn cap(&self) -> usize {
        self.omega.cap()
    }

    pub fn omega(&self, p: usize, q: usize) -> Result<&Rational, GrunskyError> {
        if p == 0 || q == 0 {
            return Err(GrunskyError::MissingEntry { p, q });
        }
        self.omega.get(p, q).ok_or(GrunskyError::MissingEntry { p, q })
    }

    /// `omega_{2p-1, 2q-1}`, the odd view indexed from 1.
    pub fn odd(&self, p: usize, q: usize) -> Result<&Rational, GrunskyError> {
        if p == 0 || q == 0 {
            return Err(GrunskyError::MissingEntry { p, q });
        }
        self.omega(2 * p - 1, 2 * q - 1)
    }

    /// Entries with `p, q >= 1`, ordered by total degree then `q`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.omega.iter().filter(|(p, q, _)| *p >= 1 && *q >= 1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.omega.is_symmetric()
    }

    pub fn as_bivariate(&self) -> &BivariateSeries {
        &self.omega
    }
}

/// `a_0 = 0, a_1 = 1, a_2, a_3, ...`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector(Vec<Rational>);

impl CoefficientVector {
    pub fn from_series(f: &TruncatedSeries) -> Result<Self, GrunskyError> {
        f.check_normalized()?;
        Ok(Self(f.coeffs().to_vec()))
    }

    pub fn a(&self, n: usize) -> Result<&Rational, GrunskyError> {
        self.0.get(n).ok_or(GrunskyError::MissingCoefficient(n))
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }
}

/// Real weights `x_1, x_3, x_5, ...` for the odd-index quadratic form;
/// `self.0[k]` is the weight of index `2k + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticFormWeights(pub Vec<f64>);

/// Grunsky table of `sqrt(f(z^2))` up to total degree `cap`.
pub fn compute_odd_grunsky(f: &TruncatedSeries, cap: usize) -> Result<GrunskyTable, GrunskyError> {
    compute_odd_grunsky_named(f, cap, "series")
}

pub fn compute_odd_grunsky_named(
    f: &TruncatedSeries,
    cap: usize,
    source: &str,
) -> Result<GrunskyTable, GrunskyError> {
    if cap < DEFAULT_CAP {
        return Err(GrunskyError::CapTooSmall { cap, min: DEFAULT_CAP });
    }
    let f2 = sqrt_transform(f)?;
    let omega = difference_quotient_log(&f2, cap)?;
    Ok(GrunskyTable {
        omega,
        source: source.to_owned(),
        parity: Parity::Odd,
    })
}

/// Table for a catalogue or custom function at the given order of `f`.
pub fn table_for(function: &TestFunction, order: usize) -> Result<GrunskyTable, GrunskyError> {
    compute_odd_grunsky_named(&function.series(order), DEFAULT_CAP, function.name())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub name: &'static str,
    pub value: Rational,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Exact residuals of the four coefficient identities for `a_2 ... a_5` and
/// the constraint row linking `omega_{1,5}` and `omega_{3,3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LebedevReport {
    pub residuals: Vec<Residual>,
}

impl LebedevReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(Residual::is_zero)
    }
}

pub fn verify_lebedev_identities(f: &TruncatedSeries) -> Result<LebedevReport, GrunskyError> {
    let table = compute_odd_grunsky(f, DEFAULT_CAP)?;
    let a = CoefficientVector::from_series(f)?;
    lebedev_residuals(&a, &table)
}

pub fn lebedev_residuals(
    a: &CoefficientVector,
    table: &GrunskyTable,
) -> Result<LebedevReport, GrunskyError> {
    let w11 = table.omega(1, 1)?;
    let w13 = table.omega(1, 3)?;
    let w15 = table.omega(1, 5)?;
    let w33 = table.omega(3, 3)?;
    let w35 = table.omega(3, 5)?;
    let w11_2 = w11 * w11;
    let w11_3 = &w11_2 * w11;
    let w11_4 = &w11_3 * w11;

    let a2 = int(2) * w11;
    let a3 = int(2) * w13 + int(3) * &w11_2;
    let a4 = int(2) * w33 + int(8) * w11 * w13 + ratio(10, 3) * &w11_3;
    let a5 = int(2) * w35
        + int(8) * w11 * w33
        + int(5) * w13 * w13
        + int(18) * &w11_2 * w13
        + ratio(7, 3) * &w11_4;
    let constraint = int(3) * w15 - int(3) * w11 * w13 + &w11_3 - int(3) * w33;

    Ok(LebedevReport {
        residuals: vec![
            Residual { name: "a2", value: a.a(2)? - a2 },
            Residual { name: "a3", value: a.a(3)? - a3 },
            Residual { name: "a4", value: a.a(4)? - a4 },
            Residual { name: "a5", value: a.a(5)? - a5 },
            Residual { name: "constraint", value: constraint },
        ],
    })
}

/// `omega_{1,5} - omega_{1,1} omega_{1,3} + omega_{1,1}^3 / 3`, which equals
/// `omega_{3,3}` by the constraint row.
pub fn omega33_substitution(table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    let w11 = table.omega(1, 1)?;
    let w13 = table.omega(1, 3)?;
    let w15 = table.omega(1, 5)?;
    Ok(w15 - w11 * w13 + ratio(1, 3) * w11 * w11 * w11)
}

/// Right side minus the truncated left side of the odd-index Grunsky
/// inequality,
///
/// ```text
/// sum_{p} x_{2p-1}^2 / (2p-1)  -  sum_{q=1}^{qmax} (2q-1) |sum_p omega_{2p-1,2q-1} x_{2p-1}|^2
/// ```
///
/// Dropping the terms `q > qmax` only lowers the left side, so the value is
/// nonnegative for every univalent `f`.
pub fn grunsky_form_slack(
    table: &GrunskyTable,
    weights: &QuadraticFormWeights,
    qmax: usize,
) -> Result<f64, GrunskyError> {
    let to_f64 = |r: &Rational| r.to_f64().expect("finite rational");
    let mut lhs = 0.0;
    for q in 1..=qmax {
        let mut inner = 0.0;
        for (k, x) in weights.0.iter().enumerate() {
            inner += to_f64(table.odd(k + 1, q)?) * x;
        }
        lhs += (2 * q - 1) as f64 * inner * inner;
    }
    let rhs: f64 = weights
        .0
        .iter()
        .enumerate()
        .map(|(k, x)| x * x / (2 * k + 1) as f64)
        .sum();
    Ok(rhs - lhs)
}

/// Slack in the two moduli bounds obtained from the form with `x_1 = 1`:
/// `|omega_{1,3}| <= sqrt((1 - |omega_{1,1}|^2) / 3)` and
/// `|omega_{1,5}| <= sqrt((1 - |omega_{1,1}|^2 - 3|omega_{1,3}|^2) / 5)`.
///
/// Compared in squared form, so a negative value means a violated bound.
pub fn moduli_bound_slack(table: &GrunskyTable) -> Result<(f64, f64), GrunskyError> {
    let sq = |r: &Rational| {
        let v = r.to_f64().expect("finite rational");
        v * v
    };
    let w11 = sq(table.omega(1, 1)?);
    let w13 = sq(table.omega(1, 3)?);
    let w15 = sq(table.omega(1, 5)?);
    Ok(((1.0 - w11) / 3.0 - w13, (1.0 - w11 - 3.0 * w13) / 5.0 - w15))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(f: &TestFunction) -> GrunskyTable {
        table_for(f, 10).unwrap()
    }

    #[test]
    fn koebe_entries() {
        let t = table(&TestFunction::Koebe);
        assert_eq!(t.omega(1, 1).unwrap(), &int(1));
        assert_eq!(t.omega(1, 3).unwrap(), &int(0));
        assert_eq!(t.omega(1, 5).unwrap(), &int(0));
        assert_eq!(t.omega(3, 3).unwrap(), &ratio(1, 3));
        assert_eq!(t.omega(3, 5).unwrap(), &int(0));
    }

    #[test]
    fn identity_table_is_zero() {
        let t = table(&TestFunction::Identity);
        assert!(t.entries().all(|(_, _, c)| c.is_zero()));
    }

    #[test]
    fn geometric_omega11_is_half() {
        let t = table(&TestFunction::Geometric);
        assert_eq!(t.omega(1, 1).unwrap(), &ratio(1, 2));
    }

    #[test]
    fn geometric_table_by_brute_force() {
        // f2(z) = z (1 - z^2)^(-1/2). Expand the quotient directly from its
        // Taylor coefficients and take log(1+u) one power at a time.
        let f2_coeffs: Vec<Rational> = {
            let mut c = vec![int(0); 10];
            let mut binom = int(1);
            for k in 0..5usize {
                c[2 * k + 1] = binom.clone();
                // C(-1/2, k+1) (-1)^{k+1} = C(-1/2,k)(-1)^k * (2k+1)/(2k+2)
                binom = binom * ratio(2 * k as i64 + 1, 2 * k as i64 + 2);
            }
            c
        };
        let cap = 8;
        let mut u = BivariateSeries::zero(cap);
        for (n, a) in f2_coeffs.iter().enumerate().skip(2) {
            for i in 0..n {
                let j = n - 1 - i;
                if i + j <= cap {
                    u.set(i, j, a.clone());
                }
            }
        }
        let mut log = BivariateSeries::zero(cap);
        let mut power = u.clone();
        for k in 1..=cap {
            let w = ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            for (p, q, c) in power.iter() {
                let prev = log.get(p, q).unwrap().clone();
                log.set(p, q, prev + c * &w);
            }
            power = power.mul(&u);
        }
        let t = table(&TestFunction::Geometric);
        assert_eq!(t.as_bivariate(), &log);
    }

    #[test]
    fn tables_are_symmetric_with_vanishing_mixed_parity() {
        for f in TestFunction::CATALOGUE {
            let t = table(&f);
            assert!(t.is_symmetric(), "{f}");
            assert_eq!(t.parity(), Parity::Odd);
            for (p, q, c) in t.entries() {
                if (p + q) % 2 == 1 {
                    assert!(c.is_zero(), "{f}: omega[{p},{q}] = {c}");
                }
            }
        }
    }

    #[test]
    fn lebedev_identities_hold_on_catalogue() {
        for f in TestFunction::CATALOGUE {
            let report = verify_lebedev_identities(&f.series(10)).unwrap();
            assert_eq!(report.residuals.len(), 5);
            assert!(report.all_zero(), "{f}: {report:?}");
        }
    }

    #[test]
    fn koebe_a5_arithmetic() {
        // 2*0 + 8*1*(1/3) + 5*0 + 18*0 + (7/3)*1 = 5
        let t = table(&TestFunction::Koebe);
        let a = CoefficientVector::from_series(&TestFunction::Koebe.series(10)).unwrap();
        let r = lebedev_residuals(&a, &t).unwrap();
        assert_eq!(r.residuals[3].name, "a5");
        assert!(r.residuals[3].is_zero());
    }

    #[test]
    fn omega33_substitution_matches_table() {
        let t = table(&TestFunction::Koebe);
        assert_eq!(omega33_substitution(&t).unwrap(), ratio(1, 3));
        assert!(omega33_substitution(&table(&TestFunction::Identity)).unwrap().is_zero());
        let g = table(&TestFunction::Geometric);
        assert_eq!(&omega33_substitution(&g).unwrap(), g.omega(3, 3).unwrap());
    }

    #[test]
    fn koebe_is_extremal_for_the_form() {
        let t = table(&TestFunction::Koebe);
        let e1 = grunsky_form_slack(&t, &QuadraticFormWeights(vec![1.0, 0.0]), 3).unwrap();
        let e3 = grunsky_form_slack(&t, &QuadraticFormWeights(vec![0.0, 1.0]), 3).unwrap();
        assert!(e1.abs() <= 1e-12, "{e1}");
        assert!(e3.abs() <= 1e-12, "{e3}");
    }

    #[test]
    fn identity_slack_is_the_right_side() {
        let t = table(&TestFunction::Identity);
        let s = grunsky_form_slack(&t, &QuadraticFormWeights(vec![2.0, 3.0]), 2).unwrap();
        assert_eq!(s, 4.0 + 3.0);
    }

    #[test]
    fn slack_needs_entries_within_cap() {
        let t = table(&TestFunction::Koebe);
        let err = grunsky_form_slack(&t, &QuadraticFormWeights(vec![1.0, 1.0]), 5).unwrap_err();
        assert!(matches!(err, GrunskyError::MissingEntry { .. }));
    }

    #[test]
    fn moduli_bounds_hold_on_catalogue() {
        for f in TestFunction::CATALOGUE {
            let (s13, s15) = moduli_bound_slack(&table(&f)).unwrap();
            assert!(s13 >= -1e-12 && s15 >= -1e-12, "{f}: {s13} {s15}");
        }
    }

    #[test]
    fn small_cap_rejected() {
        let f = TestFunction::Koebe.series(10);
        assert_eq!(
            compute_odd_grunsky(&f, 6),
            Err(GrunskyError::CapTooSmall { cap: 6, min: 8 })
        );
    }

    #[test]
    fn order_five_is_enough() {
        let report = verify_lebedev_identities(&TestFunction::Koebe.series(MIN_ORDER)).unwrap();
        assert!(report.all_zero());
        assert!(verify_lebedev_identities(&TestFunction::Koebe.series(4)).is_err());
    }
}
