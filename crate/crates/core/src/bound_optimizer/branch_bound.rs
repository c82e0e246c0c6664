//! Interval branch-and-bound over `E`.
//!
//! Boxes live in a max-heap keyed on their upper bound, ties resolved
//! first-in first-out. Each step pops the most promising box, bisects its
//! longest side and bounds both halves. Upper bounds come from the natural
//! interval extension, intersected with the mean-value form whenever the
//! gradient enclosure is finite. Lower bounds come from point evaluations
//! at verified members of `E`, evaluated in interval arithmetic so that the
//! lower end is rigorous.
//!
//! The stopping width only enters the termination test, so a run with a
//! smaller width replays a run with a larger one and continues from there:
//! `hi` never grows and `lo` never shrinks as the width is tightened.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::interval::Interval;

use super::{BoundFunction, Location, Method, OptimizationResult, OptimizeError, Region};

pub const DEFAULT_BOX_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedConfig {
    /// Requested enclosure width `hi - lo`.
    pub eps: f64,
    /// Maximum number of boxes bounded before giving up.
    pub box_cap: usize,
}

impl CertifiedConfig {
    pub fn new(eps: f64) -> Self {
        Self {
            eps,
            box_cap: DEFAULT_BOX_CAP,
        }
    }
}

pub fn certified_max(function: BoundFunction, eps: f64) -> Result<OptimizationResult, OptimizeError> {
    certified_max_with(function, &CertifiedConfig::new(eps))
}

struct Cell {
    ub: f64,
    seq: u64,
    x: Interval,
    y: Interval,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ub
            .total_cmp(&other.ub)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

struct Incumbent {
    lo: f64,
    point: (f64, f64),
}

struct Search {
    function: BoundFunction,
    heap: BinaryHeap<Cell>,
    best: Incumbent,
    seq: u64,
    bounded: usize,
}

impl Search {
    fn offer_point(&mut self, x: f64, y: f64) {
        let (px, py) = (Interval::point(x), Interval::point(y));
        let r = 1.0 - px.sqr() - Interval::point(3.0) * py.sqr();
        if !(0.0..=1.0).contains(&x) || y < 0.0 || r.lo() < 0.0 {
            return;
        }
        if let Some(v) = self.function.enclose(px, py) {
            let better = v.lo() > self.best.lo
                || (v.lo() == self.best.lo && (x, y) < self.best.point);
            if better {
                self.best = Incumbent { lo: v.lo(), point: (x, y) };
            }
        }
    }

    /// Feasible points worth trying inside a box: the centre and, where the
    /// box touches an edge of `E`, the nearest point on that edge.
    fn offer_candidates(&mut self, x: Interval, y: Interval) {
        let (mx, my) = (x.mid(), y.mid());
        self.offer_point(mx, my);
        if y.lo() == 0.0 {
            self.offer_point(mx, 0.0);
        }
        if x.lo() == 0.0 {
            self.offer_point(0.0, my);
        }
        let mut top = Region::y_max(mx);
        if y.contains(top) {
            // step inside until the point verifies as a member of E
            for _ in 0..4 {
                let r = 1.0 - Interval::point(mx).sqr() - Interval::point(3.0) * Interval::point(top).sqr();
                if r.lo() >= 0.0 {
                    break;
                }
                top = top.next_down();
            }
            self.offer_point(mx, top);
        }
        if x.contains(1.0) && y.lo() == 0.0 {
            self.offer_point(1.0, 0.0);
        }
    }

    /// Shrinks a box to a hull of its intersection with `E`; `None` when
    /// the box misses `E`.
    fn contract(x: Interval, y: Interval) -> Option<(Interval, Interval)> {
        let three = Interval::point(3.0);
        let y_cap = ((1.0 - Interval::point(x.lo()).sqr()).div(three)).sqrt_nonneg()?;
        let y = y.min_hi(y_cap.hi())?;
        let x_cap = (1.0 - three * Interval::point(y.lo()).sqr()).sqrt_nonneg()?;
        let x = x.min_hi(x_cap.hi())?;
        Some((x, y))
    }

    fn upper_bound(&self, x: Interval, y: Interval) -> Option<f64> {
        let natural = self.function.enclose(x, y)?.hi();
        let mean_value = self.function.enclose_gradient(x, y).and_then(|g| {
            let (cx, cy) = (Interval::point(x.mid()), Interval::point(y.mid()));
            let at_centre = self.function.enclose(cx, cy)?;
            let bound = at_centre + g[0] * (x - cx) + g[1] * (y - cy);
            bound.is_finite().then(|| bound.hi())
        });
        Some(mean_value.map_or(natural, |mv| mv.min(natural)))
    }

    fn push(&mut self, x: Interval, y: Interval, parent_ub: f64) {
        self.bounded += 1;
        let Some((x, y)) = Self::contract(x, y) else {
            return;
        };
        let Some(ub) = self.upper_bound(x, y) else {
            return;
        };
        self.offer_candidates(x, y);
        let ub = ub.min(parent_ub);
        if ub < self.best.lo {
            return;
        }
        self.seq += 1;
        self.heap.push(Cell { ub, seq: self.seq, x, y });
    }
}

pub fn certified_max_with(
    function: BoundFunction,
    config: &CertifiedConfig,
) -> Result<OptimizationResult, OptimizeError> {
    if !(config.eps > 0.0) {
        return Err(OptimizeError::InvalidTolerance(config.eps));
    }
    let y_top = Interval::point(1.0).div(Interval::point(3.0)).sqrt_nonneg().expect("positive").hi();
    let mut search = Search {
        function,
        heap: BinaryHeap::new(),
        best: Incumbent {
            lo: f64::NEG_INFINITY,
            point: (0.0, 0.0),
        },
        seq: 0,
        bounded: 0,
    };
    search.offer_point(0.0, 0.0);
    search.push(Interval::new(0.0, 1.0), Interval::new(0.0, y_top), f64::INFINITY);

    loop {
        let lo = search.best.lo;
        let hi = search.heap.peek().map_or(lo, |c| c.ub.max(lo));
        if hi - lo <= config.eps {
            let (x, y) = search.best.point;
            return Ok(OptimizationResult {
                function,
                value: function.evaluate(x, y)?,
                argmax: (x, y),
                location: Location::classify(x, y),
                method: Method::Certified,
                enclosure: Some((lo, hi)),
            });
        }
        if search.bounded >= config.box_cap {
            return Err(OptimizeError::BudgetExceeded {
                cap: config.box_cap,
                lo,
                hi,
            });
        }
        let cell = search.heap.pop().expect("hi > lo implies a live box");
        if cell.ub < search.best.lo {
            continue;
        }
        let (a, b) = if cell.x.width() >= cell.y.width() {
            let m = cell.x.mid();
            (
                (Interval::new(cell.x.lo(), m), cell.y),
                (Interval::new(m, cell.x.hi()), cell.y),
            )
        } else {
            let m = cell.y.mid();
            (
                (cell.x, Interval::new(cell.y.lo(), m)),
                (cell.x, Interval::new(m, cell.y.hi())),
            )
        };
        search.push(a.0, a.1, cell.ub);
        search.push(b.0, b.1, cell.ub);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_enclosure() {
        let r = certified_max(BoundFunction::F1, 1e-6).unwrap();
        let (lo, hi) = r.enclosure.unwrap();
        assert!(hi - lo <= 1e-6);
        assert!(lo <= 0.5566179 && hi >= 0.5566178, "[{lo}, {hi}]");
        assert!(lo <= r.value + 1e-15 && r.value <= hi);
    }

    #[test]
    fn phi2_tight_enclosure() {
        let r = certified_max(BoundFunction::Phi2, 1e-9).unwrap();
        let (lo, hi) = r.enclosure.unwrap();
        let exact = 4.0 / (5.0 * 3f64.sqrt());
        assert!(hi - lo <= 1e-9);
        assert!(lo <= exact && exact <= hi, "[{lo}, {hi}] vs {exact}");
    }

    #[test]
    fn f3_enclosure_on_edge() {
        let r = certified_max(BoundFunction::F3, 1e-6).unwrap();
        let (lo, hi) = r.enclosure.unwrap();
        assert!(lo <= 2.10065 && hi >= 2.10064, "[{lo}, {hi}]");
        assert_eq!(r.location, Location::Edge(super::super::Edge::Y0));
    }

    #[test]
    fn budget_exceeded() {
        let config = CertifiedConfig { eps: 1e-12, box_cap: 100 };
        assert!(matches!(
            certified_max_with(BoundFunction::F1, &config),
            Err(OptimizeError::BudgetExceeded { cap: 100, .. })
        ));
    }

    #[test]
    fn refinement_is_monotone() {
        for f in [BoundFunction::F4, BoundFunction::Phi1] {
            let mut prev: Option<(f64, f64)> = None;
            for eps in [1e-3, 5e-4, 2.5e-4, 1.25e-4, 6.25e-5] {
                let (lo, hi) = certified_max(f, eps).unwrap().enclosure.unwrap();
                if let Some((plo, phi)) = prev {
                    assert!(lo >= plo && hi <= phi, "{f} eps={eps}");
                }
                prev = Some((lo, hi));
            }
        }
    }

    #[test]
    fn rejects_non_positive_eps() {
        assert!(certified_max(BoundFunction::F1, -1.0).is_err());
    }
}
