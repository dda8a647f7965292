//! Shared test oracles and generators, written independently of the
//! library's own algorithms so agreement is evidence rather than tautology.

#![allow(dead_code)] // each integration test binary uses a subset

use certiplot::metric::Point2;
use certiplot::rat::{rat_frac, rat_int, PosRat, Rat};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Independent exponential oracle: partial sums of the Taylor series with a
/// coarse geometric tail bound — once n + 2 ≥ 2|q|, each term at most
/// halves, so the tail after term n is at most twice term n + 1. Different
/// stopping rule and bookkeeping than the library's implementation.
///
/// Requires q ≤ 1 only for interpretation (the series itself converges for
/// all q); callers pass plot-range arguments.
pub fn exp_oracle(q: &Rat, eps: &Rat) -> Rat {
    let two = rat_int(2);
    let mut sum = Rat::one();
    let mut term = Rat::one();
    let mut n: i64 = 0;
    loop {
        let next = &term * q / rat_int(n + 1);
        if rat_int(n + 2) >= &two * q.abs() && next.abs() * &two <= *eps {
            return sum;
        }
        sum += &next;
        term = next;
        n += 1;
    }
}

/// 10⁻¹², the precision the acceptance criteria run the oracle at.
pub fn oracle_eps() -> Rat {
    rat_frac(1, 1_000_000_000_000)
}

/// Naive brute-force Hausdorff distance between point sets under the sup
/// metric: a plain double loop with its own abs/max arithmetic, sharing no
/// code with the library.
pub fn naive_hausdorff(a: &[Point2], b: &[Point2]) -> Rat {
    fn pair_dist(p: &Point2, q: &Point2) -> Rat {
        let dx = (&p.x - &q.x).abs();
        let dy = (&p.y - &q.y).abs();
        if dx > dy {
            dx
        } else {
            dy
        }
    }
    fn directed(from: &[Point2], to: &[Point2]) -> Rat {
        let mut worst = Rat::zero();
        for p in from {
            let mut best: Option<Rat> = None;
            for q in to {
                let d = pair_dist(p, q);
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
            let best = best.expect("non-empty target set");
            if best > worst {
                worst = best;
            }
        }
        worst
    }
    let ab = directed(a, b);
    let ba = directed(b, a);
    if ab > ba {
        ab
    } else {
        ba
    }
}

/// Rationals with numerator in [−max_num, max_num] and denominator in
/// [1, max_den].
pub fn rat_strategy(max_num: i64, max_den: i64) -> impl Strategy<Value = Rat> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(n, d)| rat_frac(n, d))
}

/// Strictly positive rationals with numerator in [1, max_num] and
/// denominator in [1, max_den].
pub fn pos_rat_strategy(max_num: i64, max_den: i64) -> impl Strategy<Value = PosRat> {
    (1..=max_num, 1..=max_den).prop_map(|(n, d)| PosRat::frac(n, d))
}

/// Points of ℚ² with both coordinates drawn from [`rat_strategy`].
pub fn point_strategy(max_num: i64, max_den: i64) -> impl Strategy<Value = Point2> {
    (
        rat_strategy(max_num, max_den),
        rat_strategy(max_num, max_den),
    )
        .prop_map(|(x, y)| Point2::new(x, y))
}

/// Non-empty point sets with at most `max_len` members.
pub fn point_set_strategy(
    max_len: usize,
    max_num: i64,
    max_den: i64,
) -> impl Strategy<Value = Vec<Point2>> {
    proptest::collection::vec(point_strategy(max_num, max_den), 1..=max_len)
}
