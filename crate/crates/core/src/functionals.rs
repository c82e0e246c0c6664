//! Coefficient functionals evaluated two ways: directly from `a_n` and from
//! the Grunsky entries of the odd transform. Agreement of the two routes on
//! concrete functions checks each algebraic rewrite the bounds rely on.

use num_traits::{Signed, Zero};

use crate::grunsky::{CoefficientVector, GrunskyError, GrunskyTable, TestFunction};
use crate::power_series::{int, ratio, Rational, TruncatedSeries};

/// `gamma_1, ..., gamma_n` with `log(f(z)/z) = 2 sum gamma_k z^k`.
/// `gamma[0]` holds `gamma_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogCoefficients {
    pub gamma: Vec<Rational>,
}

impl LogCoefficients {
    /// `gamma_n`, one-based.
    pub fn get(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.gamma.get(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Exact,
    /// Only `|direct| = |via_omega|` is claimed.
    Modulus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalReport {
    pub name: &'static str,
    pub direct: Rational,
    pub via_omega: Rational,
    pub comparison: Comparison,
}

impl FunctionalReport {
    pub fn agrees(&self) -> bool {
        match self.comparison {
            Comparison::Exact => self.direct == self.via_omega,
            Comparison::Modulus => self.direct.abs() == self.via_omega.abs(),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FunctionalError {
    #[error("series order {order} is too small for gamma_{n}, need at least {}", n + 1)]
    OrderTooSmall { order: usize, n: usize },
    #[error(transparent)]
    Grunsky(#[from] GrunskyError),
}

pub fn log_coefficients(f: &TruncatedSeries, n: usize) -> Result<LogCoefficients, FunctionalError> {
    f.check_normalized().map_err(GrunskyError::from)?;
    if f.order() < n + 1 {
        return Err(FunctionalError::OrderTooSmall { order: f.order(), n });
    }
    let f_over_z = TruncatedSeries::new(f.coeffs()[1..=n + 1].to_vec()).map_err(GrunskyError::from)?;
    let log = f_over_z.log1().map_err(GrunskyError::from)?;
    let half = ratio(1, 2);
    Ok(LogCoefficients {
        gamma: log.coeffs()[1..=n].iter().map(|c| c * &half).collect(),
    })
}

/// `gamma_3 = (a_4 - a_2 a_3 + a_2^3 / 3) / 2`.
pub fn gamma3(a: &CoefficientVector) -> Result<Rational, GrunskyError> {
    let (a2, a3, a4) = (a.a(2)?, a.a(3)?, a.a(4)?);
    Ok(ratio(1, 2) * (a4 - a2 * a3 + ratio(1, 3) * a2 * a2 * a2))
}

/// Both omega forms of `gamma_3`:
/// `omega_33 + 2 omega_11 omega_13` and `omega_15 + omega_11 omega_13 + omega_11^3 / 3`.
pub fn gamma3_omega(table: &GrunskyTable) -> Result<(Rational, Rational), GrunskyError> {
    let w = Omegas::read(table)?;
    let first = &w.w33 + int(2) * &w.w11 * &w.w13;
    let second = &w.w15 + &w.w11 * &w.w13 + ratio(1, 3) * w.w11.pow(3);
    Ok((first, second))
}

/// `H_2(2) = a_2 a_4 - a_3^2`.
pub fn hankel2(a: &CoefficientVector) -> Result<Rational, GrunskyError> {
    let (a2, a3, a4) = (a.a(2)?, a.a(3)?, a.a(4)?);
    Ok(a2 * a4 - a3 * a3)
}

/// `4 omega_11 omega_15 - 4 omega_13^2 - omega_11^4`.
pub fn hankel2_omega(table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    let w = Omegas::read(table)?;
    Ok(int(4) * &w.w11 * &w.w15 - int(4) * &w.w13 * &w.w13 - w.w11.pow(4))
}

/// `H_3(1) = a_3 (a_2 a_4 - a_3^2) - a_4 (a_4 - a_2 a_3) + a_5 (a_3 - a_2^2)`.
pub fn hankel3(a: &CoefficientVector) -> Result<Rational, GrunskyError> {
    let (a2, a3, a4, a5) = (a.a(2)?, a.a(3)?, a.a(4)?, a.a(5)?);
    Ok(a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2))
}

/// `(2 omega_13 - omega_11^2)(2 omega_35 + omega_13^2 - 2 omega_11^2 omega_13)
///  - (2 omega_33 - (2/3) omega_11^3)^2`.
pub fn hankel3_omega(table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    let w = Omegas::read(table)?;
    let w11_2 = &w.w11 * &w.w11;
    let first = int(2) * &w.w13 - &w11_2;
    let second = int(2) * &w.w35 + &w.w13 * &w.w13 - int(2) * &w11_2 * &w.w13;
    let third = int(2) * &w.w33 - ratio(2, 3) * w.w11.pow(3);
    Ok(first * second - &third * &third)
}

/// `a_2 a_3 - a_4`.
pub fn zalcman23(a: &CoefficientVector) -> Result<Rational, GrunskyError> {
    let (a2, a3, a4) = (a.a(2)?, a.a(3)?, a.a(4)?);
    Ok(a2 * a3 - a4)
}

/// `2 omega_15 + 2 omega_11 omega_13 - 2 omega_11^3`; equal to
/// `a_2 a_3 - a_4` up to sign.
pub fn zalcman23_omega(table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    let w = Omegas::read(table)?;
    Ok(int(2) * &w.w15 + int(2) * &w.w11 * &w.w13 - int(2) * w.w11.pow(3))
}

/// `|a_4| - |a_3|`.
pub fn diff43(a: &CoefficientVector) -> Result<Rational, GrunskyError> {
    Ok(a.a(4)?.abs() - a.a(3)?.abs())
}

/// `a_4 - omega_11 a_3`, the quantity that dominates `|a_4| - |a_3|` when
/// `|omega_11| <= 1`.
pub fn a4_minus_omega11_a3(a: &CoefficientVector, table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    Ok(a.a(4)? - table.omega(1, 1)? * a.a(3)?)
}

/// `2 omega_15 + 4 omega_11 omega_13 + omega_11^3`.
pub fn diff43_omega(table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    let w = Omegas::read(table)?;
    Ok(int(2) * &w.w15 + int(4) * &w.w11 * &w.w13 + w.w11.pow(3))
}

/// `4 |omega_15 - omega_11 omega_13|^2`, the rewritten second Hankel term.
pub fn b2_omega(table: &GrunskyTable) -> Result<Rational, GrunskyError> {
    let w = Omegas::read(table)?;
    let d = &w.w15 - &w.w11 * &w.w13;
    Ok(int(4) * &d * &d)
}

struct Omegas {
    w11: Rational,
    w13: Rational,
    w15: Rational,
    w33: Rational,
    w35: Rational,
}

impl Omegas {
    fn read(table: &GrunskyTable) -> Result<Self, GrunskyError> {
        Ok(Self {
            w11: table.omega(1, 1)?.clone(),
            w13: table.omega(1, 3)?.clone(),
            w15: table.omega(1, 5)?.clone(),
            w33: table.omega(3, 3)?.clone(),
            w35: table.omega(3, 5)?.clone(),
        })
    }
}

/// Every direct-versus-omega comparison for one function.
pub fn functional_reports(f: &TruncatedSeries, table: &GrunskyTable) -> Result<Vec<FunctionalReport>, FunctionalError> {
    let a = CoefficientVector::from_series(f)?;
    let gamma_log = log_coefficients(f, 3)?.gamma[2].clone();
    let (g_first, g_second) = gamma3_omega(table)?;
    let h3 = hankel3(&a)?;
    let second_hankel_term = {
        let t = int(2) * table.omega(3, 3)? - ratio(2, 3) * table.omega(1, 1)?.pow(3);
        &t * &t
    };
    let exact = |name, direct, via_omega| FunctionalReport {
        name,
        direct,
        via_omega,
        comparison: Comparison::Exact,
    };
    Ok(vec![
        exact("gamma3 (log series vs a_n)", gamma_log.clone(), gamma3(&a)?),
        exact("gamma3 (omega33 form)", gamma_log.clone(), g_first),
        exact("gamma3 (omega15 form)", gamma_log, g_second),
        exact("a4 - omega11 a3", a4_minus_omega11_a3(&a, table)?, diff43_omega(table)?),
        FunctionalReport {
            name: "a2 a3 - a4",
            direct: zalcman23(&a)?,
            via_omega: zalcman23_omega(table)?,
            comparison: Comparison::Modulus,
        },
        exact("H2(2)", hankel2(&a)?, hankel2_omega(table)?),
        exact("H3(1)", h3, hankel3_omega(table)?),
        exact("B2 rewrite", second_hankel_term, b2_omega(table)?),
    ])
}

/// `a_3 - a_2^2`, bounded by 1 in modulus on the class of univalent functions.
pub fn fekete_szego_unit(a: &CoefficientVector) -> Result<Rational, GrunskyError> {
    let (a2, a3) = (a.a(2)?, a.a(3)?);
    Ok(a3 - a2 * a2)
}

/// Functional values for one catalogue function, handy for domination checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalValues {
    pub gamma3: Rational,
    pub diff43: Rational,
    pub zalcman23: Rational,
    pub hankel2: Rational,
    pub hankel3: Rational,
}

pub fn functional_values(function: &TestFunction, order: usize) -> Result<FunctionalValues, FunctionalError> {
    let f = function.series(order);
    let a = CoefficientVector::from_series(&f)?;
    Ok(FunctionalValues {
        gamma3: gamma3(&a)?,
        diff43: diff43(&a)?,
        zalcman23: zalcman23(&a)?,
        hankel2: hankel2(&a)?,
        hankel3: hankel3(&a)?,
    })
}

impl FunctionalValues {
    pub fn is_zero(&self) -> bool {
        [&self.gamma3, &self.diff43, &self.zalcman23, &self.hankel2, &self.hankel3]
            .iter()
            .all(|v| v.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grunsky::table_for;

    fn coeffs(f: &TestFunction) -> CoefficientVector {
        CoefficientVector::from_series(&f.series(10)).unwrap()
    }

    #[test]
    fn koebe_log_coefficients_are_reciprocals() {
        let g = log_coefficients(&TestFunction::Koebe.series(10), 9).unwrap();
        for n in 1..=9 {
            assert_eq!(g.get(n).unwrap(), &ratio(1, n as i64));
        }
    }

    #[test]
    fn identity_and_geometric_log_coefficients() {
        let g = log_coefficients(&TestFunction::Identity.series(10), 5).unwrap();
        assert!(g.gamma.iter().all(Zero::is_zero));
        let g = log_coefficients(&TestFunction::Geometric.series(10), 5).unwrap();
        for n in 1..=5 {
            assert_eq!(g.get(n).unwrap(), &ratio(1, 2 * n as i64));
        }
        assert_eq!(g.get(3).unwrap(), &ratio(1, 6));
    }

    #[test]
    fn log_coefficients_need_order() {
        let f = TestFunction::Koebe.series(3);
        assert_eq!(
            log_coefficients(&f, 3),
            Err(FunctionalError::OrderTooSmall { order: 3, n: 3 })
        );
    }

    #[test]
    fn gamma3_forms() {
        let t = table_for(&TestFunction::Koebe, 10).unwrap();
        assert_eq!(gamma3_omega(&t).unwrap(), (ratio(1, 3), ratio(1, 3)));
        let t = table_for(&TestFunction::Identity, 10).unwrap();
        assert_eq!(gamma3_omega(&t).unwrap(), (int(0), int(0)));
        let t = table_for(&TestFunction::Geometric, 10).unwrap();
        assert_eq!(gamma3_omega(&t).unwrap(), (ratio(1, 6), ratio(1, 6)));
    }

    #[test]
    fn hankel_values_on_koebe() {
        let a = coeffs(&TestFunction::Koebe);
        let t = table_for(&TestFunction::Koebe, 10).unwrap();
        assert_eq!(hankel2(&a).unwrap(), int(-1));
        assert_eq!(hankel2_omega(&t).unwrap(), int(-1));
        assert_eq!(hankel3(&a).unwrap(), int(0));
        assert_eq!(hankel3_omega(&t).unwrap(), int(0));
    }

    #[test]
    fn zalcman_and_difference() {
        let k = coeffs(&TestFunction::Koebe);
        assert_eq!(zalcman23(&k).unwrap(), int(2));
        assert_eq!(diff43(&k).unwrap(), int(1));
        let g = coeffs(&TestFunction::Geometric);
        assert_eq!(zalcman23(&g).unwrap(), int(0));
        assert_eq!(diff43(&g).unwrap(), int(0));
        let t = table_for(&TestFunction::Koebe, 10).unwrap();
        assert_eq!(zalcman23_omega(&t).unwrap(), int(-2));
    }

    #[test]
    fn identity_functionals_vanish() {
        assert!(functional_values(&TestFunction::Identity, 10).unwrap().is_zero());
    }

    #[test]
    fn all_reports_agree_on_catalogue() {
        for f in TestFunction::CATALOGUE {
            let s = f.series(10);
            let t = table_for(&f, 10).unwrap();
            for r in functional_reports(&s, &t).unwrap() {
                assert!(r.agrees(), "{f}: {r:?}");
            }
        }
    }

    #[test]
    fn fekete_szego_unit_on_catalogue() {
        for f in TestFunction::CATALOGUE {
            let v = fekete_szego_unit(&coeffs(&f)).unwrap();
            assert!(v.abs() <= int(1), "{f}: {v}");
        }
    }

    #[test]
    fn missing_coefficient() {
        let a = CoefficientVector::from_series(&TestFunction::Koebe.series(3)).unwrap();
        assert_eq!(hankel3(&a), Err(GrunskyError::MissingCoefficient(4)));
    }
}
