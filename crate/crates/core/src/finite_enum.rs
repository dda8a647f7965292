//! Non-empty finite enumerations of points, the exact Hausdorff metric on
//! them, and the finite-enumeration monad.
//!
//! For finite sets over a decidable metric, the one-sided Hausdorff
//! hemimetric `max_{x∈A} min_{y∈B} dist(x, y)` is computable exactly, and
//! the Hausdorff distance is the maximum of the two directions. Returning
//! the distance itself is strictly stronger than any ball relation derived
//! from it, so the relational and distance views coincide here and every
//! comparison against a radius is a single exact test.
//!
//! Enumerations are sequences: duplicates are permitted and order is
//! irrelevant to the semantics, so equality of meaning is the extensional
//! [`fe_equiv`] rather than structural equality.

use crate::metric::{check_precision_order, DecidableMetric, LocateResult, Point2};
use crate::rat::{parse_rat, PosRat, Rat};
use crate::Error;

/// A non-empty finite sequence of points, read as the finite set of its
/// members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteEnum<X> {
    points: Vec<X>,
}

impl<X> FiniteEnum<X> {
    /// Wraps a sequence of points, rejecting the empty one: the Hausdorff
    /// distance to an empty set would be infinite.
    pub fn new(points: Vec<X>) -> Result<Self, Error> {
        if points.is_empty() {
            Err(Error::EmptyEnumeration)
        } else {
            Ok(FiniteEnum { points })
        }
    }

    /// The singleton enumeration; the unit of the monad.
    pub fn singleton(x: X) -> Self {
        FiniteEnum { points: vec![x] }
    }

    /// The members, in representation order.
    pub fn points(&self) -> &[X] {
        &self.points
    }

    /// Number of listed points (duplicates counted).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false: enumerations are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Applies `f` to every member.
    pub fn map<Y>(&self, f: impl FnMut(&X) -> Y) -> FiniteEnum<Y> {
        FiniteEnum {
            points: self.points.iter().map(f).collect(),
        }
    }

    /// The monadic bind: applies `f` to every member and concatenates the
    /// results (multiset union).
    pub fn bind<Y>(&self, mut f: impl FnMut(&X) -> FiniteEnum<Y>) -> FiniteEnum<Y> {
        FiniteEnum {
            points: self
                .points
                .iter()
                .flat_map(|x| f(x).points.into_iter())
                .collect(),
        }
    }
}

/// One-sided Hausdorff hemimetric: how far must `from` travel to be covered
/// by `to`, i.e. `max_{x∈from} min_{y∈to} dist(x, y)`, exactly.
///
/// Its kernel captures containment: the result is 0 iff every point of
/// `from` occurs (at distance 0) in `to`.
pub fn hemi_dist<X>(metric: &DecidableMetric<X>, from: &FiniteEnum<X>, to: &FiniteEnum<X>) -> Rat {
    from.points()
        .iter()
        .map(|x| {
            to.points()
                .iter()
                .map(|y| metric.dist(x, y))
                .min()
                .expect("enumeration is non-empty")
        })
        .max()
        .expect("enumeration is non-empty")
}

/// The exact Hausdorff distance: the larger of the two hemimetric
/// directions.
pub fn hausdorff_dist<X>(metric: &DecidableMetric<X>, a: &FiniteEnum<X>, b: &FiniteEnum<X>) -> Rat {
    let ab = hemi_dist(metric, a, b);
    let ba = hemi_dist(metric, b, a);
    if ab >= ba {
        ab
    } else {
        ba
    }
}

/// The closed Hausdorff ball: `hausdorff_dist(a, b) ≤ ε`.
pub fn fe_ball<X>(
    metric: &DecidableMetric<X>,
    eps: &PosRat,
    a: &FiniteEnum<X>,
    b: &FiniteEnum<X>,
) -> bool {
    hausdorff_dist(metric, a, b) <= *eps.get()
}

/// Extensional equivalence: every point of each enumeration lies at
/// distance 0 from some point of the other. Duplicates and order are
/// irrelevant, and the relation coincides with `hausdorff_dist = 0`.
pub fn fe_equiv<X>(metric: &DecidableMetric<X>, a: &FiniteEnum<X>, b: &FiniteEnum<X>) -> bool {
    let zero = crate::rat::zero();
    let covered = |from: &FiniteEnum<X>, to: &FiniteEnum<X>| {
        from.points()
            .iter()
            .all(|x| to.points().iter().any(|y| metric.dist(x, y) == zero))
    };
    covered(a, b) && covered(b, a)
}

/// Locate query for the Hausdorff ball that uses *only* a locate procedure
/// on the underlying points — no exact distances.
///
/// For each point of one enumeration, the other is searched for a witness
/// whose per-pair locate at `(ε, δ)` answers `Within`; then symmetrically.
/// If every point finds a witness the Hausdorff distance is at most δ
/// (each witness certifies ≤ δ); if some point has none, every candidate
/// certified distance > ε, so the Hausdorff distance exceeds ε.
pub fn fe_locate<X, L>(
    a: &FiniteEnum<X>,
    b: &FiniteEnum<X>,
    eps: &PosRat,
    delta: &PosRat,
    locator: L,
) -> Result<LocateResult, Error>
where
    L: Fn(&X, &X, &PosRat, &PosRat) -> Result<LocateResult, Error>,
{
    check_precision_order(eps, delta)?;
    let covered = |from: &FiniteEnum<X>, to: &FiniteEnum<X>| -> Result<bool, Error> {
        'points: for x in from.points() {
            for y in to.points() {
                if locator(x, y, eps, delta)? == LocateResult::Within {
                    continue 'points;
                }
            }
            return Ok(false);
        }
        Ok(true)
    };
    if covered(a, b)? && covered(b, a)? {
        Ok(LocateResult::Within)
    } else {
        Ok(LocateResult::Beyond)
    }
}

/// The Hausdorff metric on finite enumerations over `inner`.
pub fn hausdorff_metric<X: 'static>(inner: &DecidableMetric<X>) -> DecidableMetric<FiniteEnum<X>> {
    let inner = inner.clone();
    DecidableMetric::from_fn(move |a, b| hausdorff_dist(&inner, a, b))
}

/// Parses a point set from its textual fixture form: one point per line,
/// two rationals separated by whitespace; surrounding braces are optional
/// and blank lines are skipped. Order and duplicates are preserved.
pub fn parse_point_set(text: &str) -> Result<FiniteEnum<Point2>, Error> {
    let mut points = Vec::new();
    for line in text.lines() {
        let stripped = line.trim().trim_matches(|c| c == '{' || c == '}');
        let stripped = stripped.trim();
        if stripped.is_empty() {
            continue;
        }
        let fields: Vec<&str> = stripped.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::ParsePoint(line.to_owned()));
        }
        points.push(Point2::new(parse_rat(fields[0])?, parse_rat(fields[1])?));
    }
    FiniteEnum::new(points)
}

/// Formats a point set in the fixture form accepted by
/// [`parse_point_set`]; the round trip is exact, preserving order and
/// duplicates.
pub fn format_point_set(set: &FiniteEnum<Point2>) -> String {
    let mut out = String::new();
    for p in set.points() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}
