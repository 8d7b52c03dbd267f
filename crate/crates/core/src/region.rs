//! Finite search regions: a closed box, an optional closed ball, and any number
//! of point predicates.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ball<const N: usize> {
    pub center: Point<N>,
    pub radius_squared: i64,
}

impl<const N: usize> Ball<N> {
    pub fn contains(&self, p: &Point<N>) -> bool {
        let mut s = 0i128;
        for (v, c) in p.iter().zip(&self.center) {
            let d = *v as i128 - *c as i128;
            match d.checked_mul(d).and_then(|sq| sq.checked_add(s)) {
                Some(v) => s = v,
                None => return false,
            }
        }
        s <= self.radius_squared as i128
    }
}

/// A decidable point property used to filter enumeration results.
#[derive(Clone)]
pub enum Predicate<const N: usize> {
    /// Every coordinate is strictly positive.
    Positive,
    /// Every coordinate is strictly less than the sum of the others: the
    /// strict triangle inequalities when `N == 3`.
    Triangle,
    Custom(Arc<dyn Fn(&Point<N>) -> bool + Send + Sync>),
}

impl<const N: usize> Predicate<N> {
    pub fn custom(f: impl Fn(&Point<N>) -> bool + Send + Sync + 'static) -> Self {
        Predicate::Custom(Arc::new(f))
    }

    pub fn holds(&self, p: &Point<N>) -> bool {
        match self {
            Predicate::Positive => p.iter().all(|&v| v > 0),
            Predicate::Triangle => {
                let total: i128 = p.iter().map(|&v| v as i128).sum();
                p.iter().all(|&v| 2 * (v as i128) < total)
            }
            Predicate::Custom(f) => f(p),
        }
    }
}

impl<const N: usize> fmt::Debug for Predicate<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Positive => f.write_str("Positive"),
            Predicate::Triangle => f.write_str("Triangle"),
            Predicate::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Region<const N: usize> {
    bounds: [(i64, i64); N],
    ball: Option<Ball<N>>,
    predicates: Vec<Predicate<N>>,
}

impl<const N: usize> Region<N> {
    /// Closed box `lo_i <= p_i <= hi_i`.
    pub fn new(bounds: [(i64, i64); N]) -> Result<Self> {
        if let Some(i) = bounds.iter().position(|&(lo, hi)| lo > hi) {
            return Err(Error::Region(format!(
                "axis {i} has lower bound {} above upper bound {}",
                bounds[i].0, bounds[i].1
            )));
        }
        Ok(Self {
            bounds,
            ball: None,
            predicates: Vec::new(),
        })
    }

    /// The cube `[lo, hi]^N`.
    pub fn cube(lo: i64, hi: i64) -> Result<Self> {
        Self::new([(lo, hi); N])
    }

    pub fn with_ball(mut self, center: Point<N>, radius_squared: i64) -> Result<Self> {
        if radius_squared < 0 {
            return Err(Error::Region(format!(
                "negative squared radius {radius_squared}"
            )));
        }
        self.ball = Some(Ball {
            center,
            radius_squared,
        });
        Ok(self)
    }

    pub fn with_predicate(mut self, predicate: Predicate<N>) -> Self {
        self.predicates.push(predicate);
        self
    }

    pub fn bounds(&self) -> &[(i64, i64); N] {
        &self.bounds
    }

    pub fn ball(&self) -> Option<&Ball<N>> {
        self.ball.as_ref()
    }

    pub fn predicates(&self) -> &[Predicate<N>] {
        &self.predicates
    }

    /// Number of integer points in the box, ignoring filters.
    pub fn volume(&self) -> u128 {
        self.bounds
            .iter()
            .map(|&(lo, hi)| (hi as i128 - lo as i128 + 1) as u128)
            .fold(1u128, |acc, w| acc.saturating_mul(w))
    }

    pub fn in_box(&self, p: &Point<N>) -> bool {
        p.iter()
            .zip(&self.bounds)
            .all(|(&v, &(lo, hi))| lo <= v && v <= hi)
    }

    /// Ball and predicate filters only; callers have already placed `p` in the box.
    pub fn passes_filters(&self, p: &Point<N>) -> bool {
        self.ball.as_ref().is_none_or(|b| b.contains(p))
            && self.predicates.iter().all(|f| f.holds(p))
    }

    pub fn admits(&self, p: &Point<N>) -> bool {
        self.in_box(p) && self.passes_filters(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_axis() {
        assert!(Region::<3>::new([(0, 1), (2, 1), (0, 0)]).is_err());
        assert!(Region::<3>::cube(0, 0)
            .unwrap()
            .with_ball([0; 3], -1)
            .is_err());
    }

    #[test]
    fn filters() {
        let r = Region::<3>::cube(-2, 2)
            .unwrap()
            .with_ball([0, 0, 0], 4)
            .unwrap();
        assert!(r.admits(&[1, -1, 1]));
        assert!(!r.admits(&[2, 2, -1]));
        assert!(!r.admits(&[3, 0, 0]));
        assert_eq!(r.volume(), 125);

        assert!(Predicate::<3>::Triangle.holds(&[37, 31, 17]));
        assert!(!Predicate::<3>::Triangle.holds(&[11, 23, 51]));
        assert!(!Predicate::<3>::Triangle.holds(&[1, 1, 2]));
        assert!(Predicate::<3>::Positive.holds(&[1, 1, 1]));
        assert!(!Predicate::<3>::Positive.holds(&[1, 0, 1]));
        let even = Predicate::<3>::custom(|p| p[0] % 2 == 0);
        assert!(even.holds(&[2, 1, 1]));
    }
}
