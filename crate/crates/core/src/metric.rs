//! Metric spaces with decidable closed-ball relations.
//!
//! A metric here is a computable distance function `dist : X × X → ℚ≥0`;
//! the closed-ball relation it induces, `ball(ε, a, b) ⇔ dist(a, b) ≤ ε`,
//! satisfies, for all points and positive radii:
//!
//! 1. reflexivity: `ball(ε, a, a)`;
//! 2. symmetry: `ball(ε, a, b) ⇒ ball(ε, b, a)`;
//! 3. triangle: `ball(ε₁, a, b) ∧ ball(ε₂, b, c) ⇒ ball(ε₁ + ε₂, a, c)`;
//! 4. closedness: if `ball(δ, a, b)` for every δ > ε, then `ball(ε, a, b)`
//!    — with an exact distance this is just the non-strict comparison in
//!    the definition of `ball`;
//! 5. identity of indiscernibles: if `ball(ε, a, b)` for every ε, the two
//!    points are equal (`dist(a, b) = 0 ⇔ a = b`).
//!
//! Because the distance is exact, every ball query is decidable, and a
//! metric can answer *locate* queries: given ε < δ, either certify the two
//! points are within δ or certify they are farther apart than ε.

use crate::rat::{PosRat, Rat};
use crate::Error;
use std::sync::Arc;

/// The answer to a locate query with bounds ε < δ.
///
/// `Within` certifies distance ≤ δ; `Beyond` certifies distance > ε. The
/// two certificates overlap on the band (ε, δ], which is what makes the
/// query answerable even for points whose distance sits exactly on a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocateResult {
    /// The points are within δ of each other.
    Within,
    /// The points are more than ε apart.
    Beyond,
}

/// A metric space structure on `X`: an exact, non-negative, symmetric
/// distance satisfying the triangle inequality, with `dist(a, b) = 0` iff
/// the two points are identified by the metric.
///
/// The struct is a shared handle; cloning is cheap and clones observe the
/// same distance function.
pub struct DecidableMetric<X> {
    dist: Arc<dyn Fn(&X, &X) -> Rat + Send + Sync>,
}

impl<X> Clone for DecidableMetric<X> {
    fn clone(&self) -> Self {
        DecidableMetric {
            dist: Arc::clone(&self.dist),
        }
    }
}

impl<X> DecidableMetric<X> {
    /// Wraps a distance function. The caller is responsible for the metric
    /// laws; the library's property suites exercise them for every metric
    /// constructed here.
    pub fn from_fn(dist: impl Fn(&X, &X) -> Rat + Send + Sync + 'static) -> Self {
        DecidableMetric {
            dist: Arc::new(dist),
        }
    }

    /// The exact distance between two points.
    pub fn dist(&self, a: &X, b: &X) -> Rat {
        (self.dist)(a, b)
    }

    /// The closed-ball relation: `dist(a, b) ≤ ε`.
    pub fn ball(&self, eps: &PosRat, a: &X, b: &X) -> bool {
        self.dist(a, b) <= *eps.get()
    }

    /// Locate query: requires ε < δ and answers [`LocateResult::Within`]
    /// when `dist(a, b) ≤ δ`, otherwise [`LocateResult::Beyond`] (which is
    /// then sound because the distance exceeds δ > ε).
    pub fn locate(
        &self,
        a: &X,
        b: &X,
        eps: &PosRat,
        delta: &PosRat,
    ) -> Result<LocateResult, Error> {
        check_precision_order(eps, delta)?;
        if self.dist(a, b) <= *delta.get() {
            Ok(LocateResult::Within)
        } else {
            Ok(LocateResult::Beyond)
        }
    }
}

/// Rejects locate bounds unless ε < δ.
pub(crate) fn check_precision_order(eps: &PosRat, delta: &PosRat) -> Result<(), Error> {
    if eps.get() < delta.get() {
        Ok(())
    } else {
        Err(Error::PrecisionOrder {
            eps: eps.get().clone(),
            delta: delta.get().clone(),
        })
    }
}

/// A point of ℚ².
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Rat,
    pub y: Rat,
}

impl Point2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point2 { x, y }
    }
}

/// The closed-ball relation on ℚ: `|a − b| ≤ ε`.
pub fn rat_ball(eps: &PosRat, a: &Rat, b: &Rat) -> bool {
    rat_dist(a, b) <= *eps.get()
}

/// `|a − b|` on ℚ.
pub fn rat_dist(a: &Rat, b: &Rat) -> Rat {
    let d = a - b;
    if d < crate::rat::zero() {
        -d
    } else {
        d
    }
}

/// The sup (chebyshev) distance on ℚ²: `max(|x₁ − x₂|, |y₁ − y₂|)`.
///
/// Balls for this metric are axis-aligned squares, which is exactly the
/// shape of a raster pixel; that choice is what lets pixel snapping be
/// certified by a per-axis bound.
pub fn sup_dist(p: &Point2, q: &Point2) -> Rat {
    let dx = rat_dist(&p.x, &q.x);
    let dy = rat_dist(&p.y, &q.y);
    if dx >= dy {
        dx
    } else {
        dy
    }
}

/// ℚ with the absolute-difference metric.
pub fn rational_metric() -> DecidableMetric<Rat> {
    DecidableMetric::from_fn(|a, b| rat_dist(a, b))
}

/// ℚ² with the sup metric.
pub fn sup_metric() -> DecidableMetric<Point2> {
    DecidableMetric::from_fn(|p, q| sup_dist(p, q))
}
