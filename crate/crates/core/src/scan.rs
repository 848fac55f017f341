//! Violation intervals on sampled curves.
//!
//! A curve is sampled on a strictly increasing axis. Every sign change of
//! the violation predicate between neighbouring samples is refined by
//! bisection on the underlying function, so interval boundaries are exact
//! to [`BISECTION_TOL`] regardless of the grid spacing. Excursions that
//! start and end between two samples are not seen.

use rayon::prelude::*;
use serde::Serialize;

use crate::{Error, Result};

/// Width of the final bisection bracket.
pub const BISECTION_TOL: f64 = 1e-6;

/// What counts as a violation of the tested relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Violation {
    /// `value > threshold`, e.g. `F_N > 1`.
    Above(f64),
    /// `value < threshold`, e.g. a negative inequality margin.
    Below(f64),
}

impl Violation {
    pub fn holds(self, value: f64) -> bool {
        match self {
            Violation::Above(t) => value > t,
            Violation::Below(t) => value < t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanResult {
    pub axis: Vec<f64>,
    pub values: Vec<f64>,
    /// Closed intervals `(start, end)` on which the relation is violated.
    pub violation_intervals: Vec<(f64, f64)>,
}

impl ScanResult {
    pub fn is_violated_anywhere(&self) -> bool {
        !self.violation_intervals.is_empty()
    }

    pub fn first_violation(&self) -> Option<f64> {
        self.violation_intervals.first().map(|iv| iv.0)
    }

    /// Start of the violation interval that extends to the end of the axis.
    pub fn sustained_onset(&self) -> Option<f64> {
        let end = *self.axis.last()?;
        self.violation_intervals
            .last()
            .filter(|iv| iv.1 == end)
            .map(|iv| iv.0)
    }

    /// Largest sampled value with its axis position.
    pub fn max_sample(&self) -> Option<(f64, f64)> {
        self.axis
            .iter()
            .zip(&self.values)
            .map(|(&x, &v)| (x, v))
            .fold(None, |best, cur| match best {
                Some(b) if b.1 >= cur.1 => Some(b),
                _ => Some(cur),
            })
    }
}

/// `n_points` equally spaced values from `start` to `end` inclusive.
pub fn uniform_grid(start: f64, end: f64, n_points: usize) -> Result<Vec<f64>> {
    if n_points < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs at least 2 points, got {n_points}"
        )));
    }
    if !start.is_finite() || !end.is_finite() || !(end > start) {
        return Err(Error::InvalidParameter(format!(
            "grid range [{start}, {end}] is empty or not finite"
        )));
    }
    let step = (end - start) / (n_points - 1) as f64;
    let mut axis: Vec<f64> = (0..n_points).map(|i| start + step * i as f64).collect();
    axis[n_points - 1] = end;
    Ok(axis)
}

/// Samples `f` on `axis` (in parallel) and locates the intervals where
/// `rule` holds.
pub fn scan_curve<F>(axis: Vec<f64>, f: F, rule: Violation) -> Result<ScanResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    if axis.len() < 2 {
        return Err(Error::InvalidParameter(
            "scan axis needs at least 2 points".into(),
        ));
    }
    if axis.iter().any(|x| !x.is_finite()) || axis.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter(
            "scan axis must be finite and strictly increasing".into(),
        ));
    }
    let values: Vec<f64> = axis.par_iter().map(|&x| f(x)).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("scanned curve"));
    }

    let mut intervals = Vec::new();
    let mut open = rule.holds(values[0]).then_some(axis[0]);
    for i in 1..axis.len() {
        let (before, now) = (rule.holds(values[i - 1]), rule.holds(values[i]));
        if before == now {
            continue;
        }
        let edge = bisect(&f, rule, axis[i - 1], axis[i], before);
        match open.take() {
            Some(start) => intervals.push((start, edge)),
            None => open = Some(edge),
        }
    }
    if let Some(start) = open {
        intervals.push((start, axis[axis.len() - 1]));
    }
    Ok(ScanResult {
        axis,
        values,
        violation_intervals: intervals,
    })
}

fn bisect<F: Fn(f64) -> f64>(
    f: &F,
    rule: Violation,
    mut lo: f64,
    mut hi: f64,
    lo_state: bool,
) -> f64 {
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if rule.holds(f(mid)) == lo_state {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(uniform_grid(0.0, 1.0, 1).is_err());
        assert!(uniform_grid(1.0, 1.0, 5).is_err());
        let g = uniform_grid(0.0, 1.0, 5).unwrap();
        assert_eq!(g, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert!(scan_curve(vec![0.0, 0.0], |x| x, Violation::Above(0.0)).is_err());
    }

    #[test]
    fn sine_crossings() {
        let axis = uniform_grid(0.0, 10.0, 101).unwrap();
        let s = scan_curve(axis, f64::sin, Violation::Above(0.5)).unwrap();
        let pi = std::f64::consts::PI;
        let want = [
            (pi / 6.0, 5.0 * pi / 6.0),
            (2.0 * pi + pi / 6.0, 2.0 * pi + 5.0 * pi / 6.0),
        ];
        assert_eq!(s.violation_intervals.len(), 2);
        for (got, want) in s.violation_intervals.iter().zip(want) {
            assert!((got.0 - want.0).abs() <= BISECTION_TOL);
            assert!((got.1 - want.1).abs() <= BISECTION_TOL);
        }
        assert_eq!(s.sustained_onset(), None);
    }

    #[test]
    fn open_ends() {
        let axis = uniform_grid(-0.5, 2.0, 26).unwrap();
        let s = scan_curve(axis, |x| x * x - 1.0, Violation::Below(0.0)).unwrap();
        assert_eq!(s.violation_intervals.len(), 1);
        let (a, b) = s.violation_intervals[0];
        assert_eq!(a, -0.5);
        assert!((b - 1.0).abs() <= BISECTION_TOL);

        let axis = uniform_grid(0.0, 3.0, 7).unwrap();
        let s = scan_curve(axis, |x| x, Violation::Above(std::f64::consts::E)).unwrap();
        let onset = s.sustained_onset().unwrap();
        assert!((onset - std::f64::consts::E).abs() <= BISECTION_TOL);
        assert_eq!(s.max_sample(), Some((3.0, 3.0)));
    }
}
