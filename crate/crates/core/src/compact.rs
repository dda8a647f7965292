//! Compact sets as the completion of finite enumerations under the
//! Hausdorff metric: K(X) = C(F(X)).
//!
//! A compact set hands out, at every precision ε, a finite enumeration
//! within Hausdorff distance ε of the ideal set — an ε-net. Intervals are
//! compact ([`interval_compact`]), finite sets of completed points
//! distribute into compact sets ([`dist_fc`]), uniformly continuous
//! functions push compact sets forward ([`compact_image`]), and the graph
//! of a function over a compact domain is again compact ([`graph`]) — the
//! construction behind certified plotting: a plot is an ε-net of a graph,
//! snapped to pixels.

use crate::completion::{couple, Real, RegularFn, UniformFn};
use crate::finite_enum::{hausdorff_metric, FiniteEnum};
use crate::metric::{
    check_precision_order, rational_metric, sup_metric, DecidableMetric, LocateResult, Point2,
};
use crate::rat::{ceil_to_usize, rat_int, PosRat, Rat};
use crate::Error;

/// A compact subset of `X`: a regular function producing finite ε-nets,
/// measured in the Hausdorff metric.
pub type Compact<X> = RegularFn<FiniteEnum<X>>;

/// The closed interval [a, b] as a compact set.
///
/// The ε-approximation is the uniform grid `{a + k·s : k = 0…n}` with
/// `n = max(1, ⌈(b−a)/(2ε)⌉)` and step `s = (b−a)/n`: every point of the
/// interval is within `s/2 ≤ ε` of the grid, all grid points lie in the
/// interval, and two grids for ε₁, ε₂ are within `max(ε₁, ε₂) ≤ ε₁ + ε₂`
/// of each other, so regularity holds. A degenerate interval (a = b) is
/// the singleton `{a}`.
pub fn interval_compact(a: &Rat, b: &Rat) -> Result<Compact<Rat>, Error> {
    if a > b {
        return Err(Error::BadInterval {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let a = a.clone();
    let b = b.clone();
    Ok(RegularFn::new(
        hausdorff_metric(&rational_metric()),
        move |eps: &PosRat| {
            if a == b {
                return FiniteEnum::singleton(a.clone());
            }
            let width = &b - &a;
            let n = ceil_to_usize(&(&width / (eps.get() * rat_int(2)))).max(1);
            let step = width / rat_int(n as i64);
            FiniteEnum::new((0..=n).map(|k| &a + &step * rat_int(k as i64)).collect())
                .expect("grid has n+1 ≥ 2 points")
        },
    ))
}

/// The distribution function: reads a finite enumeration of completed
/// points as a compact set by approximating every element pointwise,
/// `result.approx(ε) = {x.approx(ε) : x ∈ l}`.
///
/// As a map F(C(X)) → K(X) it is non-expansive (modulus identity): moving
/// every input point by at most δ moves every output approximant by at
/// most δ too.
pub fn dist_fc<X: 'static>(l: &FiniteEnum<RegularFn<X>>) -> Compact<X> {
    let inner_metric = l.points()[0].metric().clone();
    let l = l.clone();
    RegularFn::new(hausdorff_metric(&inner_metric), move |eps: &PosRat| {
        l.map(|x| x.approx(eps))
    })
}

/// The image of a compact set under a uniformly continuous function into
/// the completion: the bind of `l ↦ dist_fc(map f l)` over `S`.
///
/// Concretely, `approx(ε) = {f(x).approx(ε/2) : x ∈ S.approx(μ_f(ε/2))}`:
/// half the budget buys the input net, half the image approximations.
pub fn compact_image<X: 'static, Y: 'static>(
    f: &UniformFn<X, RegularFn<Y>>,
    codomain: &DecidableMetric<Y>,
    s: &Compact<X>,
) -> Compact<Y> {
    let f_map = f.clone();
    let f_mod = f.clone();
    let lifted: UniformFn<FiniteEnum<X>, Compact<Y>> = UniformFn::new(
        move |l: &FiniteEnum<X>| dist_fc(&l.map(|x| f_map.apply(x))),
        move |eps: &PosRat| f_mod.modulus(eps),
    );
    s.bind(&lifted, hausdorff_metric(codomain))
}

/// The graph of `f` over a compact domain, as a compact subset of the
/// plane: the compact image of `x ↦ (unit(x), f(x))`.
///
/// Pairing with the identity costs nothing extra in the sup metric, so the
/// pairing's modulus is `min(ε, μ_f(ε))`. Every emitted pair's first
/// coordinate is literally a net point of the domain.
pub fn graph(f: &UniformFn<Rat, Real>, domain: &Compact<Rat>) -> Compact<Point2> {
    let f_map = f.clone();
    let f_mod = f.clone();
    let paired: UniformFn<Rat, RegularFn<Point2>> = UniformFn::new(
        move |x: &Rat| couple(&Real::from_rat(x.clone()), &f_map.apply(x)),
        move |eps: &PosRat| eps.clone().min(f_mod.modulus(eps)),
    );
    compact_image(&paired, &sup_metric(), domain)
}

/// Approximate membership: requires ε < δ, answers `Within` only if the
/// point is within δ of the compact set, `Beyond` only if it is farther
/// than ε from it.
///
/// With θ = (δ−ε)/4, both the point and the set are approximated at θ and
/// the least distance m from the point approximant to the net is compared
/// against ε + 2θ — the same slack accounting as the completion's ball
/// locate, with the minimum standing in for the point-to-point distance.
pub fn member_locate<X: 'static>(
    x: &RegularFn<X>,
    s: &Compact<X>,
    eps: &PosRat,
    delta: &PosRat,
) -> Result<LocateResult, Error> {
    check_precision_order(eps, delta)?;
    let theta = PosRat::unchecked((delta.get() - eps.get()) / rat_int(4));
    let p = x.approx(&theta);
    let net = s.approx(&theta);
    let nearest = net
        .points()
        .iter()
        .map(|y| x.metric().dist(&p, y))
        .min()
        .expect("net is non-empty");
    let threshold = eps.get() + theta.get() * rat_int(2);
    Ok(if nearest <= threshold {
        LocateResult::Within
    } else {
        LocateResult::Beyond
    })
}

/// An ε-net of the compact set: a finite enumeration with every point of
/// the ideal set within ε of it (the approximant at ε/2, whose Hausdorff
/// slack to the ideal set leaves ε/2 ≤ ε of covering margin).
///
/// Net points are approximants and need not be literal members of the
/// ideal set; only the covering property is promised.
pub fn epsilon_net<X: 'static>(s: &Compact<X>, eps: &PosRat) -> FiniteEnum<X> {
    s.approx(&eps.halve())
}
