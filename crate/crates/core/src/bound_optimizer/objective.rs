//! The six closed-form objectives and the region they live on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::interval::Interval;

use super::OptimizeError;

/// Radicands in `[-RADICAND_GUARD, 0)` are roundoff on the curve edge and
/// are treated as zero.
pub const RADICAND_GUARD: f64 = 1e-14;

/// `E = {(x, y) : 0 <= x <= 1, 0 <= y <= sqrt((1 - x^2) / 3)}`, the range of
/// `(|omega_11|, |omega_13|)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Region;

impl Region {
    /// `1 - x^2 - 3y^2`, nonnegative exactly on the closed ellipse.
    pub fn radicand(x: f64, y: f64) -> f64 {
        1.0 - x * x - 3.0 * y * y
    }

    pub fn y_max(x: f64) -> f64 {
        ((1.0 - x * x) / 3.0).max(0.0).sqrt()
    }

    pub fn contains(x: f64, y: f64) -> bool {
        (0.0..=1.0).contains(&x) && y >= 0.0 && Self::radicand(x, y) >= -RADICAND_GUARD
    }

    /// Strictly inside, at least `margin` away from every edge.
    pub fn is_interior(x: f64, y: f64, margin: f64) -> bool {
        x > margin && y > margin && x < 1.0 - margin && Self::radicand(x, y) > margin
    }
}

/// The four boundary pieces of `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    /// `y = 0`, `0 <= x <= 1`.
    Y0,
    /// `x = 0`, `0 <= y <= 1/sqrt(3)`.
    X0,
    /// The single point `(1, 0)`.
    X1,
    /// `y = sqrt((1 - x^2) / 3)`, `0 <= x <= 1`.
    Curve,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::Y0, Edge::X0, Edge::X1, Edge::Curve];

    pub fn name(self) -> &'static str {
        match self {
            Edge::Y0 => "y0",
            Edge::X0 => "x0",
            Edge::X1 => "x1",
            Edge::Curve => "curve",
        }
    }

    /// Parameter range of the edge.
    pub fn domain(self) -> (f64, f64) {
        match self {
            Edge::Y0 | Edge::Curve => (0.0, 1.0),
            Edge::X0 => (0.0, 1.0 / 3f64.sqrt()),
            Edge::X1 => (1.0, 1.0),
        }
    }

    pub fn point(self, t: f64) -> (f64, f64) {
        match self {
            Edge::Y0 => (t, 0.0),
            Edge::X0 => (0.0, t),
            Edge::X1 => (1.0, 0.0),
            Edge::Curve => (t, Region::y_max(t)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The objectives bounding the coefficient functionals on `E`:
///
/// | name | formula |
/// |------|---------|
/// | F1   | `x^3/3 + xy + sqrt(1 - x^2 - 3y^2)/sqrt(5)` |
/// | F2   | `x^3 + 4xy + 2 sqrt(1 - x^2 - 3y^2)/sqrt(5)` |
/// | F3   | `x + x^3 + 2 sqrt(1 - x^2 - 3y^2)/sqrt(5)` |
/// | F4   | `x^4 + 4y^2 + 4x sqrt(1 - x^2 - 3y^2)/sqrt(5)` |
/// | PHI1 | `2x^2 y + y^2 + 2 sqrt(1 - 3y^2)/sqrt(15)` |
/// | PHI2 | `xy + sqrt(1 - x^2 - 3y^2)/sqrt(5)` |
///
/// F3 carries `3y^2` under the root. A printed `3y^3` does not reproduce the
/// stated curve-edge value `x + x^3`, and neither does the printed
/// `d/dx` label on its y-derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundFunction {
    F1,
    F2,
    F3,
    F4,
    Phi1,
    Phi2,
}

impl BoundFunction {
    pub const ALL: [BoundFunction; 6] = [
        BoundFunction::F1,
        BoundFunction::F2,
        BoundFunction::F3,
        BoundFunction::F4,
        BoundFunction::Phi1,
        BoundFunction::Phi2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundFunction::F1 => "f1",
            BoundFunction::F2 => "f2",
            BoundFunction::F3 => "f3",
            BoundFunction::F4 => "f4",
            BoundFunction::Phi1 => "phi1",
            BoundFunction::Phi2 => "phi2",
        }
    }

    pub fn domain(self) -> Region {
        Region
    }

    /// PHI1 is the only objective whose root is `sqrt(1 - 3y^2)`.
    fn uses_y_only_root(self) -> bool {
        self == BoundFunction::Phi1
    }

    /// `(numerator, k)` of the root's coefficient `numerator / sqrt(k)`.
    fn root_coefficient(self) -> (f64, f64) {
        match self {
            BoundFunction::F1 | BoundFunction::Phi2 => (1.0, 5.0),
            BoundFunction::F2 | BoundFunction::F3 => (2.0, 5.0),
            BoundFunction::F4 => (4.0, 5.0),
            BoundFunction::Phi1 => (2.0, 15.0),
        }
    }

    fn radicand<T: Scalar>(self, x: T, y: T) -> T {
        let three_y2 = T::from_f64(3.0) * y.sqr();
        if self.uses_y_only_root() {
            T::from_f64(1.0) - three_y2
        } else {
            T::from_f64(1.0) - x.sqr() - three_y2
        }
    }

    fn check_domain(self, x: f64, y: f64) -> Result<f64, OptimizeError> {
        let r = self.radicand(x, y);
        let inside = (0.0..=1.0).contains(&x) && y >= 0.0 && Region::radicand(x, y) >= -RADICAND_GUARD;
        if !inside || r < -RADICAND_GUARD {
            return Err(OptimizeError::OutsideRegion { x, y });
        }
        Ok(r.max(0.0))
    }

    pub fn evaluate(self, x: f64, y: f64) -> Result<f64, OptimizeError> {
        let root = self.check_domain(x, y)?.sqrt();
        Ok(self.value_with(x, y, root, self.coefficient::<f64>()))
    }

    /// Value at `(x, y_max(x))` with the root taken as exactly zero (for
    /// PHI1, `sqrt(1 - 3y^2) = x` there). Evaluating through `y_max` instead
    /// leaves a radicand of order 1e-16 whose root is 1e-8.
    pub fn evaluate_on_curve(self, x: f64) -> Result<f64, OptimizeError> {
        if !(0.0..=1.0).contains(&x) {
            return Err(OptimizeError::OutsideRegion { x, y: Region::y_max(x) });
        }
        let y = Region::y_max(x);
        let root = if self.uses_y_only_root() { x } else { 0.0 };
        Ok(self.value_with(x, y, root, self.coefficient::<f64>()))
    }

    /// Value at a point of the given edge, parametrized as in [`Edge::point`].
    pub fn evaluate_on_edge(self, edge: Edge, t: f64) -> Result<f64, OptimizeError> {
        match edge {
            Edge::Curve => self.evaluate_on_curve(t),
            _ => {
                let (x, y) = edge.point(t);
                self.evaluate(x, y)
            }
        }
    }

    /// Analytic gradient; components are infinite where the root vanishes.
    pub fn gradient(self, x: f64, y: f64) -> Result<[f64; 2], OptimizeError> {
        let root = self.check_domain(x, y)?.sqrt();
        Ok(self.gradient_with(x, y, root, 1.0 / root, self.coefficient::<f64>()))
    }

    pub fn hessian(self, x: f64, y: f64) -> Result<[[f64; 2]; 2], OptimizeError> {
        let root = self.check_domain(x, y)?.sqrt();
        let c = self.coefficient::<f64>();
        let inv = 1.0 / root;
        let inv3 = inv * inv * inv;
        if self.uses_y_only_root() {
            // T = sqrt(1 - 3y^2): T'' = -3 / T^3
            return Ok([[4.0 * y, 4.0 * x], [4.0 * x, 2.0 - 3.0 * c * inv3]]);
        }
        // S = sqrt(1 - x^2 - 3y^2)
        let sx = -x * inv;
        let sy = -3.0 * y * inv;
        let sxx = -(1.0 - 3.0 * y * y) * inv3;
        let syy = -3.0 * (1.0 - x * x) * inv3;
        let sxy = -3.0 * x * y * inv3;
        let h = match self {
            BoundFunction::F1 => [[2.0 * x + c * sxx, 1.0 + c * sxy], [1.0 + c * sxy, c * syy]],
            BoundFunction::F2 => [[6.0 * x + c * sxx, 4.0 + c * sxy], [4.0 + c * sxy, c * syy]],
            BoundFunction::F3 => [[6.0 * x + c * sxx, c * sxy], [c * sxy, c * syy]],
            BoundFunction::F4 => {
                let hxy = c * (sy + x * sxy);
                [[12.0 * x * x + c * (2.0 * sx + x * sxx), hxy], [hxy, 8.0 + c * x * syy]]
            }
            BoundFunction::Phi2 => [[c * sxx, 1.0 + c * sxy], [1.0 + c * sxy, c * syy]],
            BoundFunction::Phi1 => unreachable!(),
        };
        Ok(h)
    }

    fn coefficient<T: Scalar>(self) -> T {
        let (num, k) = self.root_coefficient();
        T::over_sqrt(num, k)
    }

    fn value_with<T: Scalar>(self, x: T, y: T, root: T, c: T) -> T {
        let k = T::from_f64;
        match self {
            BoundFunction::F1 => x.powi(3) * k(1.0 / 3.0) + x * y + c * root,
            BoundFunction::F2 => x.powi(3) + k(4.0) * x * y + c * root,
            BoundFunction::F3 => x + x.powi(3) + c * root,
            BoundFunction::F4 => x.powi(4) + k(4.0) * y.sqr() + c * x * root,
            BoundFunction::Phi1 => k(2.0) * x.sqr() * y + y.sqr() + c * root,
            BoundFunction::Phi2 => x * y + c * root,
        }
    }

    fn gradient_with<T: Scalar>(self, x: T, y: T, root: T, inv_root: T, c: T) -> [T; 2] {
        let k = T::from_f64;
        if self.uses_y_only_root() {
            let ty = -(k(3.0) * y * inv_root);
            return [k(4.0) * x * y, k(2.0) * x.sqr() + k(2.0) * y + c * ty];
        }
        let sx = -(x * inv_root);
        let sy = -(k(3.0) * y * inv_root);
        match self {
            BoundFunction::F1 => [x.sqr() + y + c * sx, x + c * sy],
            BoundFunction::F2 => [k(3.0) * x.sqr() + k(4.0) * y + c * sx, k(4.0) * x + c * sy],
            BoundFunction::F3 => [k(1.0) + k(3.0) * x.sqr() + c * sx, c * sy],
            BoundFunction::F4 => [
                k(4.0) * x.powi(3) + c * (root + x * sx),
                k(8.0) * y + c * x * sy,
            ],
            BoundFunction::Phi2 => [y + c * sx, x + c * sy],
            BoundFunction::Phi1 => unreachable!(),
        }
    }

    /// Enclosure of the function over `B ∩ E` for the box `B = bx × by`.
    ///
    /// The radicand's enclosure is intersected with `[0, inf)` before the
    /// root is taken, so points of `B` outside `E` never widen the bound
    /// through an undefined root. `None` means `B` misses the domain.
    pub fn enclose(self, bx: Interval, by: Interval) -> Option<Interval> {
        let root = self.radicand(bx, by).sqrt_nonneg()?;
        Some(self.value_with(bx, by, root, self.coefficient::<Interval>()))
    }

    /// Enclosure of the gradient over `B`, available only when the root is
    /// bounded away from zero on all of `B`.
    pub fn enclose_gradient(self, bx: Interval, by: Interval) -> Option<[Interval; 2]> {
        let r = self.radicand(bx, by);
        if r.lo() <= 0.0 {
            return None;
        }
        let root = r.sqrt_nonneg()?;
        let g = self.gradient_with(bx, by, root, root.recip(), self.coefficient::<Interval>());
        (g[0].is_finite() && g[1].is_finite()).then_some(g)
    }
}

impl fmt::Display for BoundFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundFunction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundFunction::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown objective '{s}', expected one of f1, f2, f3, f4, phi1, phi2"))
    }
}

/// Arithmetic shared by point evaluation and interval enclosure.
trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_f64(v: f64) -> Self;
    fn sqr(self) -> Self;
    fn powi(self, n: u32) -> Self;
    /// `num / sqrt(k)`.
    fn over_sqrt(num: f64, k: f64) -> Self;
}

impl Scalar for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn sqr(self) -> Self {
        self * self
    }
    fn powi(self, n: u32) -> Self {
        f64::powi(self, n as i32)
    }
    fn over_sqrt(num: f64, k: f64) -> Self {
        num / k.sqrt()
    }
}

impl Scalar for Interval {
    fn from_f64(v: f64) -> Self {
        match v {
            // 1/3 is not representable; enclose it
            _ if v == 1.0 / 3.0 => Interval::point(1.0).div(Interval::point(3.0)),
            _ => Interval::point(v),
        }
    }
    fn sqr(self) -> Self {
        Interval::sqr(self)
    }
    fn powi(self, n: u32) -> Self {
        Interval::powi(self, n)
    }
    fn over_sqrt(num: f64, k: f64) -> Self {
        static CACHE: OnceLock<[(f64, f64, Interval); 4]> = OnceLock::new();
        let table = CACHE.get_or_init(|| {
            let make = |num: f64, k: f64| {
                let root = Interval::point(k).sqrt_nonneg().expect("positive");
                (num, k, Interval::point(num).div(root))
            };
            [make(1.0, 5.0), make(2.0, 5.0), make(4.0, 5.0), make(2.0, 15.0)]
        });
        table
            .iter()
            .find(|(n, kk, _)| *n == num && *kk == k)
            .map(|(_, _, c)| *c)
            .unwrap_or_else(|| Interval::point(num).div(Interval::point(k).sqrt_nonneg().expect("positive")))
    }
}
