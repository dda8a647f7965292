//! Certified real-number operations needed for plotting: the exponential on
//! (−∞, 1], clamping, and affine maps — each with an explicit modulus of
//! uniform continuity.
//!
//! The exponential is computed by direct Taylor summation in exact rational
//! arithmetic. For an argument q ≤ 1 the partial sum Σ_{k≤n} qᵏ/k! differs
//! from exp(q) by at most the geometric-series tail bound
//!
//! ```text
//! |q|ⁿ⁺¹/(n+1)! · 1/(1 − |q|/(n+2))        (valid when n + 2 > |q|)
//! ```
//!
//! so n is grown until that bound dips below the requested ε. No range
//! reduction is performed: on the plotting domain term counts stay small,
//! and exact arithmetic makes the alternating terms of negative arguments
//! cancel exactly rather than catastrophically.

use crate::completion::{Real, RegularFn, UniformFn};
use crate::metric::rational_metric;
use crate::rat::{rat_int, PosRat, Rat};
use crate::Error;
use num_traits::{One, Signed};

/// A rational within `eps` of exp(`q`), for `q ≤ 1`.
///
/// The certificate is unconditional: the returned value differs from the
/// true exponential by at most `eps`, with the tail of the series bounded
/// by the Lagrange/geometric estimate above.
pub fn exp_rat(q: &Rat, eps: &PosRat) -> Result<Rat, Error> {
    if *q > rat_int(1) {
        return Err(Error::ExpDomain(q.clone()));
    }
    let magnitude = q.abs();

    // Find the first n with n + 2 > |q| whose tail bound is within eps.
    let mut n: u32 = 0;
    let mut power = magnitude.clone(); // |q|^(n+1)
    let mut factorial = Rat::one(); // (n+1)!
    loop {
        let n_plus_2 = rat_int(i64::from(n) + 2);
        if n_plus_2 > magnitude {
            let tail = &power / &factorial * &n_plus_2 / (&n_plus_2 - &magnitude);
            if tail <= *eps.get() {
                break;
            }
        }
        n += 1;
        power *= &magnitude;
        factorial *= rat_int(i64::from(n) + 1);
    }

    // Partial sum Σ_{k≤n} q^k / k!.
    let mut sum = Rat::one();
    let mut term = Rat::one();
    for k in 1..=n {
        term = term * q / rat_int(i64::from(k));
        sum += &term;
    }
    Ok(sum)
}

/// The exponential as a uniformly continuous map from rational arguments
/// into completed reals, with modulus μ(ε) = ε/3 (the derivative of exp is
/// bounded by e < 3 on (−∞, 1]).
///
/// The domain restriction is enforced when approximations are drawn:
/// drawing an approximant of the image of some q > 1 panics. Plotting
/// always pre-composes with an interval domain, so the restriction is
/// structural there.
pub fn exp_lift() -> UniformFn<Rat, Real> {
    UniformFn::new(
        |q: &Rat| {
            let q = q.clone();
            RegularFn::new(rational_metric(), move |eps: &PosRat| {
                exp_rat(&q, eps).expect("exp argument must be <= 1")
            })
        },
        |eps: &PosRat| eps.div_int(3),
    )
}

/// The exponential on completed reals: the bind of [`exp_lift`].
///
/// The caller guarantees the ideal point is ≤ 1; approximants of the
/// argument are drawn at precision ε/6 and fed to [`exp_rat`].
pub fn exp_real(x: &Real) -> Real {
    x.bind(&exp_lift(), rational_metric())
}

/// Clamping to the interval [lo, hi]: `q ↦ max(lo, min(hi, q))`, exactly
/// 1-Lipschitz, so the modulus is the identity.
pub fn clamp_fn(lo: &Rat, hi: &Rat) -> Result<UniformFn<Rat, Rat>, Error> {
    if lo >= hi {
        return Err(Error::BadClampRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    let lo = lo.clone();
    let hi = hi.clone();
    Ok(UniformFn::new(
        move |q: &Rat| {
            if *q < lo {
                lo.clone()
            } else if *q > hi {
                hi.clone()
            } else {
                q.clone()
            }
        },
        |eps: &PosRat| eps.clone(),
    ))
}

/// The affine map `q ↦ a·q + b` with modulus μ(ε) = ε / max(|a|, 1).
pub fn affine_fn(a: &Rat, b: &Rat) -> UniformFn<Rat, Rat> {
    let slope = a.clone();
    let offset = b.clone();
    let scale = {
        let abs = a.abs();
        if abs > rat_int(1) {
            abs
        } else {
            rat_int(1)
        }
    };
    UniformFn::new(
        move |q: &Rat| &slope * q + &offset,
        move |eps: &PosRat| PosRat::unchecked(eps.get() / &scale),
    )
}

/// Lifts a uniformly continuous rational endomorphism to a real-valued
/// function: `q ↦ unit(f(q))`, same modulus. Plumbing for building plot
/// pipelines out of exact rational maps.
pub fn rat_lift(f: &UniformFn<Rat, Rat>) -> UniformFn<Rat, Real> {
    let map = f.clone();
    let modulus = f.clone();
    UniformFn::new(
        move |q: &Rat| Real::from_rat(map.apply(q)),
        move |eps: &PosRat| modulus.modulus(eps),
    )
}

/// Post-composes a real-valued lift with a rational endomorphism:
/// `q ↦ post(f(q))`, modulus `μ_f ∘ μ_post`.
pub fn postcompose(f: &UniformFn<Rat, Real>, post: &UniformFn<Rat, Rat>) -> UniformFn<Rat, Real> {
    let map_f = f.clone();
    let map_post = post.clone();
    let mod_f = f.clone();
    let mod_post = post.clone();
    UniformFn::new(
        move |q: &Rat| map_f.apply(q).map(&map_post, rational_metric()),
        move |eps: &PosRat| mod_f.modulus(&mod_post.modulus(eps)),
    )
}
