//! The completion of a metric space as regular approximation functions.
//!
//! A point of the completion C(X) is a function from a requested precision
//! ε > 0 to an approximant in X, *regular* in the sense that any two
//! approximants are compatible:
//!
//! ```text
//! ∀ ε₁ ε₂.  dist(approx(ε₁), approx(ε₂)) ≤ ε₁ + ε₂
//! ```
//!
//! The real numbers arise as [`Real`] = C(ℚ). Uniformly continuous
//! functions lift through the completion ([`RegularFn::map`],
//! [`RegularFn::bind`]), pairs of completed points interchange with
//! completed pairs ([`couple`], [`proj_first`], [`proj_second`]), and —
//! because approximants can be drawn at any precision — closeness of two
//! completed points is *located*: [`RegularFn::locate_ball`] decides, for
//! any ε < δ, between "within δ" and "more than ε apart".

use crate::metric::{
    check_precision_order, rational_metric, sup_metric, DecidableMetric, LocateResult, Point2,
};
use crate::rat::{rat_int, PosRat, Rat};
use crate::Error;
use std::sync::Arc;

/// A point of the completion of `X`: a regular approximation function
/// together with the metric its regularity is measured in.
///
/// Approximation closures must be pure: calling `approx` twice at the same
/// precision returns equal values, so certificates may quote specific
/// approximants. Cloning is cheap and shares the underlying closure.
pub struct RegularFn<X> {
    approx: Arc<dyn Fn(&PosRat) -> X + Send + Sync>,
    metric: DecidableMetric<X>,
}

impl<X> Clone for RegularFn<X> {
    fn clone(&self) -> Self {
        RegularFn {
            approx: Arc::clone(&self.approx),
            metric: self.metric.clone(),
        }
    }
}

/// The completion of ℚ: exact real numbers as regular rational
/// approximation functions.
pub type Real = RegularFn<Rat>;

impl RegularFn<Rat> {
    /// The rational `q` as a real number (the unit of the completion monad
    /// at ℚ).
    pub fn from_rat(q: Rat) -> Real {
        RegularFn::constant(rational_metric(), q)
    }
}

impl<X: 'static> RegularFn<X> {
    /// Wraps an approximation function. The caller promises regularity;
    /// [`RegularFn::check_regularity`] probes it on sampled precision
    /// pairs.
    pub fn new(
        metric: DecidableMetric<X>,
        approx: impl Fn(&PosRat) -> X + Send + Sync + 'static,
    ) -> Self {
        RegularFn {
            approx: Arc::new(approx),
            metric,
        }
    }

    /// The constant approximation function at `value`: the unit of the
    /// completion monad. Trivially regular, since `dist(x, x) = 0`.
    pub fn constant(metric: DecidableMetric<X>, value: X) -> Self
    where
        X: Clone + Send + Sync,
    {
        RegularFn::new(metric, move |_| value.clone())
    }

    /// An approximant within `precision` of the ideal point.
    pub fn approx(&self, precision: &PosRat) -> X {
        (self.approx)(precision)
    }

    /// The metric of the underlying space.
    pub fn metric(&self) -> &DecidableMetric<X> {
        &self.metric
    }

    /// Lifts a uniformly continuous function through the completion:
    /// the result approximates `f(ideal point)`, drawing its input at the
    /// precision `f`'s modulus asks for.
    ///
    /// `result.approx(ε) = f(self.approx(μ_f(ε)))`.
    pub fn map<Y: 'static>(
        &self,
        f: &UniformFn<X, Y>,
        codomain: DecidableMetric<Y>,
    ) -> RegularFn<Y> {
        let f = f.clone();
        let inner = self.clone();
        RegularFn::new(codomain, move |eps| f.apply(&inner.approx(&f.modulus(eps))))
    }

    /// Lifts a uniformly continuous function *into* the completion: the
    /// precision budget is split in half between the outer approximation
    /// (the argument) and the inner one (the resulting completed point).
    ///
    /// `result.approx(ε) = f(self.approx(μ_f(ε/2))).approx(ε/2)`.
    pub fn bind<Y: 'static>(
        &self,
        f: &UniformFn<X, RegularFn<Y>>,
        codomain: DecidableMetric<Y>,
    ) -> RegularFn<Y> {
        let f = f.clone();
        let inner = self.clone();
        RegularFn::new(codomain, move |eps| {
            let half = eps.halve();
            f.apply(&inner.approx(&f.modulus(&half))).approx(&half)
        })
    }

    /// Locate query on the completion: requires ε < δ, answers `Within`
    /// only if the ideal points are within δ, `Beyond` only if they are
    /// more than ε apart.
    ///
    /// Both points are approximated at θ = (δ−ε)/4 and the approximant
    /// distance q is compared against ε + 2θ: if q ≤ ε + 2θ the true
    /// distance is at most ε + 4θ = δ, otherwise it is at least
    /// q − 2θ > ε.
    pub fn locate_ball(
        &self,
        other: &Self,
        eps: &PosRat,
        delta: &PosRat,
    ) -> Result<LocateResult, Error> {
        check_precision_order(eps, delta)?;
        let theta = PosRat::unchecked((delta.get() - eps.get()) / rat_int(4));
        let q = self
            .metric
            .dist(&self.approx(&theta), &other.approx(&theta));
        let threshold = eps.get() + theta.get() * rat_int(2);
        Ok(if q <= threshold {
            LocateResult::Within
        } else {
            LocateResult::Beyond
        })
    }

    /// Probes the regularity invariant on the given precision pairs:
    /// true iff `dist(approx(ε₁), approx(ε₂)) ≤ ε₁ + ε₂` for every pair.
    pub fn check_regularity(&self, samples: &[(PosRat, PosRat)]) -> bool {
        samples.iter().all(|(e1, e2)| {
            self.metric.dist(&self.approx(e1), &self.approx(e2)) <= e1.get() + e2.get()
        })
    }
}

/// A uniformly continuous function from `X` to `Y` with an explicit
/// modulus μ: whenever `dist(x₁, x₂) ≤ μ(ε)`, `dist(f(x₁), f(x₂)) ≤ ε`.
///
/// Moduli must be monotone non-decreasing and superadditive
/// (`μ(a) + μ(b) ≤ μ(a + b)`); both properties are preserved by
/// composition and pointwise minimum, and superadditivity is what makes
/// [`RegularFn::map`]'s output regular. Every modulus constructed in this
/// crate is of the form `ε ↦ ε/c` or a minimum of such, which satisfies
/// both.
pub struct UniformFn<X, Y> {
    map: Arc<dyn Fn(&X) -> Y + Send + Sync>,
    modulus: Arc<dyn Fn(&PosRat) -> PosRat + Send + Sync>,
}

impl<X, Y> Clone for UniformFn<X, Y> {
    fn clone(&self) -> Self {
        UniformFn {
            map: Arc::clone(&self.map),
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl<X: 'static, Y: 'static> UniformFn<X, Y> {
    pub fn new(
        map: impl Fn(&X) -> Y + Send + Sync + 'static,
        modulus: impl Fn(&PosRat) -> PosRat + Send + Sync + 'static,
    ) -> Self {
        UniformFn {
            map: Arc::new(map),
            modulus: Arc::new(modulus),
        }
    }

    /// Applies the function to a point.
    pub fn apply(&self, x: &X) -> Y {
        (self.map)(x)
    }

    /// How precisely the input must be known for the output to be within
    /// `eps`.
    pub fn modulus(&self, eps: &PosRat) -> PosRat {
        (self.modulus)(eps)
    }

    /// Composition `g ∘ self`, with modulus `μ_self ∘ μ_g`: to know the
    /// final output within ε, `g` needs its input within μ_g(ε), which
    /// `self` delivers from inputs within μ_self(μ_g(ε)).
    pub fn then<Z: 'static>(&self, g: &UniformFn<Y, Z>) -> UniformFn<X, Z> {
        let first = self.clone();
        let second = g.clone();
        let first_mod = self.clone();
        let second_mod = g.clone();
        UniformFn::new(
            move |x| second.apply(&first.apply(x)),
            move |eps| first_mod.modulus(&second_mod.modulus(eps)),
        )
    }
}

/// Pairs two completed rationals into a completed pair under the sup
/// metric: `couple(x, y).approx(ε) = (x.approx(ε), y.approx(ε))`.
pub fn couple(x: &RegularFn<Rat>, y: &RegularFn<Rat>) -> RegularFn<Point2> {
    let x = x.clone();
    let y = y.clone();
    RegularFn::new(sup_metric(), move |eps| {
        Point2::new(x.approx(eps), y.approx(eps))
    })
}

/// First projection of a completed pair (modulus: identity — under the sup
/// metric a projection never increases distance).
pub fn proj_first(z: &RegularFn<Point2>) -> RegularFn<Rat> {
    let f = UniformFn::new(|p: &Point2| p.x.clone(), |eps: &PosRat| eps.clone());
    z.map(&f, rational_metric())
}

/// Second projection of a completed pair.
pub fn proj_second(z: &RegularFn<Point2>) -> RegularFn<Rat> {
    let f = UniformFn::new(|p: &Point2| p.y.clone(), |eps: &PosRat| eps.clone());
    z.map(&f, rational_metric())
}
