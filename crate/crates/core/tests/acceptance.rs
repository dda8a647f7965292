//! Acceptance gate: nine end-to-end criteria, one test (and thus one
//! pass/fail line) per criterion. Tolerances are pinned in code; every
//! comparison is exact rational arithmetic — no floating point anywhere.
//!
//! Randomized criteria draw their cases through proptest's `TestRunner`
//! so that each criterion still reports as a single test, with shrinking
//! available on failure. Reference values come from the independent
//! oracles in `common`, not from the library under test.

mod common;

use common::{
    exp_oracle, naive_hausdorff, oracle_eps, point_set_strategy, point_strategy, pos_rat_strategy,
    rat_strategy,
};

use certiplot::cli::{run_plot, FunctionSpec, OutputFormat, PlotRequest};
use certiplot::compact::{dist_fc, interval_compact, member_locate};
use certiplot::completion::{couple, proj_first, proj_second};
use certiplot::finite_enum::{fe_equiv, fe_locate, hausdorff_dist};
use certiplot::metric::{rational_metric, sup_dist, sup_metric};
use certiplot::raster::{raster_to_enum, snap_error_bound, snap_to_raster, Raster, Window};
use certiplot::rat::{rat_frac, rat_int};
use certiplot::real_ops::{affine_fn, exp_lift, exp_rat, exp_real, rat_lift};
use certiplot::{FiniteEnum, LocateResult, Point2, PosRat, Rat, Real, UniformFn};

use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

/// Runs `cases` randomized cases of `check` over `strategy` as part of a
/// single test, panicking (with proptest's shrunken counterexample) on
/// failure.
fn run_cases<S: Strategy>(
    label: &str,
    cases: u32,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) {
    let mut runner = TestRunner::new(Config::with_cases(cases));
    runner
        .run(&strategy, |value| check(value))
        .unwrap_or_else(|e| panic!("{label} failed:\n{e}"));
}

fn figure_request() -> PlotRequest {
    PlotRequest {
        function: FunctionSpec::Exp,
        domain: (rat_int(-6), rat_int(1)),
        window: Window::new(rat_int(-6), rat_int(3), rat_int(1), rat_int(0))
            .expect("figure window is well-formed"),
        width: 42,
        height: 18,
        epsilon: None,
        format: OutputFormat::Ascii,
    }
}

/// Criterion 1 — running the CLI on the exponential over [−6, 1] with the
/// default ε emits a certificate whose total bound is exactly 1/8 (the
/// canonical form of 324/2592), well inside the one-minute budget.
#[test]
fn criterion_1_figure_certificate() {
    let started = std::time::Instant::now();
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_certiplot"))
        .args([
            "--fn", "exp", "--domain", "-6", "1", "--window", "-6", "3", "1", "0", "--size", "42",
            "18",
        ])
        .output()
        .expect("plot binary runs");
    let elapsed = started.elapsed();
    assert!(
        output.status.success(),
        "plot binary exited with {:?}: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
    let stdout = String::from_utf8(output.stdout).expect("plot output is UTF-8");
    let mut lines = stdout.lines();
    let header = lines.next().expect("header line");
    assert_eq!(
        header,
        "window (-6, 3) to (1, 0)  certificate: eps=1/24 snap=1/12 total=1/8"
    );
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 18, "raster body must have 18 rows");
    for row in &body {
        assert_eq!(row.chars().count(), 42, "raster row must have 42 cells");
        assert!(row.chars().all(|c| c == '#' || c == '.'));
    }
    assert!(
        elapsed < std::time::Duration::from_secs(60),
        "plot took {elapsed:?}, budget is 60 s"
    );
    println!("criterion 1 PASS: total=1/8 (= 324/2592) in {elapsed:?}");
}

/// Criterion 2 — the produced raster is sound against an independent
/// high-precision exponential oracle: sampling the true graph at x-step
/// 1/100 over [−6, 1], the exact Hausdorff distance between the raster's
/// cell centers and the sample set is at most 1/8 + 1/100 (the
/// certificate's bound plus half the sampling step and the oracle's
/// Lipschitz-propagated error, both of which 1/100 generously covers).
#[test]
fn criterion_2_figure_soundness() {
    let (raster, certificate) = run_plot(&figure_request()).expect("figure plot succeeds");
    assert_eq!(*certificate.total_bound(), rat_frac(324, 2592));
    let centers = raster_to_enum(&raster).expect("figure raster is non-empty");

    let precision = oracle_eps();
    let samples: Vec<Point2> = (0..=700)
        .map(|k| {
            let x = rat_int(-6) + rat_frac(k, 100);
            let y = exp_oracle(&x, &precision);
            Point2::new(x, y)
        })
        .collect();

    let h = naive_hausdorff(centers.points(), &samples);
    let allowed = rat_frac(1, 8) + rat_frac(1, 100);
    assert!(
        h <= allowed,
        "exact Hausdorff distance {h} exceeds the allowance {allowed}"
    );
    println!("criterion 2 PASS: exact Hausdorff {h} ≤ 27/200");
}

/// Criterion 3 — metric axioms, 1,000 randomized cases per axiom on both
/// ℚ and ℚ²: reflexivity, symmetry, the triangle law, and identity of
/// indiscernibles hold exactly; closedness is asserted in its decidable
/// form `ball(ε) ⇔ dist ≤ ε` (the ball relation of a decidable metric is
/// closed because the distance itself decides every ball).
#[test]
fn criterion_3_metric_axioms() {
    let q = || rat_strategy(1000, 60);
    let e = || pos_rat_strategy(20, 10);

    run_cases(
        "criterion 3 (metric axioms on ℚ)",
        1000,
        (q(), q(), q(), e(), e()),
        |(a, b, c, e1, e2)| {
            let m = rational_metric();
            // Axiom 1: reflexivity of every ball.
            prop_assert!(m.ball(&e1, &a, &a));
            // Axiom 2: symmetry.
            prop_assert_eq!(m.dist(&a, &b), m.dist(&b, &a));
            prop_assert_eq!(m.ball(&e1, &a, &b), m.ball(&e1, &b, &a));
            // Axiom 3: triangle law, in both distance and ball form.
            prop_assert!(m.dist(&a, &c) <= m.dist(&a, &b) + m.dist(&b, &c));
            if m.ball(&e1, &a, &b) && m.ball(&e2, &b, &c) {
                prop_assert!(m.ball(&e1.add(&e2), &a, &c));
            }
            // Axiom 4 (closedness), decidable form: the distance decides
            // every ball, so infima of radii are attained.
            prop_assert_eq!(m.ball(&e1, &a, &b), m.dist(&a, &b) <= *e1.get());
            // Axiom 5: identity of indiscernibles.
            prop_assert_eq!(m.dist(&a, &b).is_zero(), a == b);
            Ok(())
        },
    );

    let p = || point_strategy(1000, 60);
    run_cases(
        "criterion 3 (metric axioms on ℚ²)",
        1000,
        (p(), p(), p(), e(), e()),
        |(a, b, c, e1, e2)| {
            let m = sup_metric();
            prop_assert!(m.ball(&e1, &a, &a));
            prop_assert_eq!(m.dist(&a, &b), m.dist(&b, &a));
            prop_assert_eq!(m.ball(&e1, &a, &b), m.ball(&e1, &b, &a));
            prop_assert!(m.dist(&a, &c) <= m.dist(&a, &b) + m.dist(&b, &c));
            if m.ball(&e1, &a, &b) && m.ball(&e2, &b, &c) {
                prop_assert!(m.ball(&e1.add(&e2), &a, &c));
            }
            prop_assert_eq!(m.ball(&e1, &a, &b), m.dist(&a, &b) <= *e1.get());
            prop_assert_eq!(m.dist(&a, &b).is_zero(), a == b);
            Ok(())
        },
    );

    println!("criterion 3 PASS: axioms 1-3 and 5 randomized, 4 asserted, on ℚ and ℚ²");
}

/// Criterion 4 — completion monad laws and the product isomorphism
/// ⟨π̄₁(z), π̄₂(z)⟩ ≍ z, checked at the balls ε ∈ {1, 10⁻², 10⁻⁴} (with
/// δ = 2ε) on 100 randomized regular values built from constants, affine
/// maps, and exp.
#[test]
fn criterion_4_monad_laws_and_product_iso() {
    let epsilons = [
        PosRat::frac(1, 1),
        PosRat::frac(1, 100),
        PosRat::frac(1, 10_000),
    ];
    // A regular value from a constant in [−6, 1], optionally pushed
    // through exp and/or an affine map.
    let value = |kind: usize, n: i64, a: i64, b: i64| -> Real {
        let base = Real::from_rat(rat_frac(n, 100));
        match kind {
            0 => base,
            1 => base.map(&affine_fn(&rat_int(a), &rat_int(b)), rational_metric()),
            2 => exp_real(&base),
            _ => exp_real(&base).map(&affine_fn(&rat_int(a), &rat_int(b)), rational_metric()),
        }
    };
    let strategy = (
        (0usize..4, -600i64..=100, -8i64..=8, -8i64..=8),
        (0usize..4, -600i64..=100, -8i64..=8, -8i64..=8),
        (-8i64..=8, -8i64..=8, -8i64..=8, -8i64..=8),
    );

    run_cases(
        "criterion 4 (monad laws and product isomorphism)",
        100,
        strategy,
        move |((kx, nx, ax, bx), (ky, ny, ay, by), (a1, b1, a2, b2))| {
            let x = value(kx, nx, ax, bx);
            let y = value(ky, ny, ay, by);
            let q = rat_frac(nx, 100);

            // Right unit: bind(unit, x) ≍ x.
            let unit_fn =
                UniformFn::new(|q: &Rat| Real::from_rat(q.clone()), |e: &PosRat| e.clone());
            let rebuilt = x.bind(&unit_fn, rational_metric());

            // Left unit: bind(f, unit q) ≍ f(q), with f = exp (q ≤ 1 by
            // construction).
            let f = exp_lift();
            let bound = Real::from_rat(q.clone()).bind(&f, rational_metric());
            let direct = f.apply(&q);

            // Associativity: bind(g, bind(f, x)) ≍ bind(bind(g) ∘ f, x)
            // with affine lifts f and g.
            let f1 = rat_lift(&affine_fn(&rat_int(a1), &rat_int(b1)));
            let g1 = rat_lift(&affine_fn(&rat_int(a2), &rat_int(b2)));
            let lhs = x.bind(&f1, rational_metric()).bind(&g1, rational_metric());
            let composite = {
                let (fm, gm) = (f1.clone(), g1.clone());
                let (fk, gk) = (f1.clone(), g1.clone());
                UniformFn::new(
                    move |q: &Rat| fk.apply(q).bind(&gk, rational_metric()),
                    move |e: &PosRat| fm.modulus(&gm.modulus(e)),
                )
            };
            let rhs = x.bind(&composite, rational_metric());

            // Product isomorphism: ⟨π̄₁(z), π̄₂(z)⟩ ≍ z, and the
            // projections of a couple recover its components.
            let z = couple(&x, &y);
            let z_rebuilt = couple(&proj_first(&z), &proj_second(&z));

            for eps in &epsilons {
                let delta = eps.add(eps);
                let within = |l: Result<LocateResult, _>| {
                    l.expect("ε < δ by construction") == LocateResult::Within
                };
                prop_assert!(within(rebuilt.locate_ball(&x, eps, &delta)));
                prop_assert!(within(bound.locate_ball(&direct, eps, &delta)));
                prop_assert!(within(lhs.locate_ball(&rhs, eps, &delta)));
                prop_assert!(within(z_rebuilt.locate_ball(&z, eps, &delta)));
                prop_assert!(within(proj_first(&z).locate_ball(&x, eps, &delta)));
                prop_assert!(within(proj_second(&z).locate_ball(&y, eps, &delta)));
            }
            Ok(())
        },
    );

    println!("criterion 4 PASS: monad laws and product isomorphism at ε ∈ {{1, 10⁻², 10⁻⁴}}");
}

/// Criterion 5 — `hausdorff_dist` agrees exactly (rational equality) with
/// the independently written naive max-min oracle on 500 random pairs of
/// sets in ℚ² with at most 8 points and numerators/denominators ≤ 100.
#[test]
fn criterion_5_hausdorff_oracle_equivalence() {
    run_cases(
        "criterion 5 (Hausdorff oracle equivalence)",
        500,
        (
            point_set_strategy(8, 100, 100),
            point_set_strategy(8, 100, 100),
        ),
        |(a, b)| {
            let ea = FiniteEnum::new(a.clone()).expect("generated sets are non-empty");
            let eb = FiniteEnum::new(b.clone()).expect("generated sets are non-empty");
            let ours = hausdorff_dist(&sup_metric(), &ea, &eb);
            let oracle = naive_hausdorff(&a, &b);
            prop_assert_eq!(ours, oracle);
            Ok(())
        },
    );
    println!("criterion 5 PASS: 500 random pairs match the naive oracle exactly");
}

/// Criterion 6 — exp certification: for q ∈ {−6, …, 0, 1/2, 1} and
/// ε ∈ {10⁻¹, …, 10⁻⁸}, |exp_rat(q, ε) − oracle(q)| ≤ ε + 10⁻¹² exactly,
/// where the oracle runs at 10⁻¹².
#[test]
fn criterion_6_exp_certification() {
    let mut arguments: Vec<Rat> = (-6..=0).map(rat_int).collect();
    arguments.push(rat_frac(1, 2));
    arguments.push(rat_int(1));

    let precision = oracle_eps();
    for q in &arguments {
        let reference = exp_oracle(q, &precision);
        let mut denom: i64 = 1;
        for _ in 1..=8 {
            denom *= 10;
            let eps = PosRat::frac(1, denom);
            let value = exp_rat(q, &eps).expect("q ≤ 1 throughout the grid");
            let error = (&value - &reference).abs();
            let allowed = eps.get() + &precision;
            assert!(
                error <= allowed,
                "exp_rat({q}, 1/{denom}) error {error} exceeds {allowed}"
            );
        }
    }
    println!("criterion 6 PASS: 9 arguments × 8 precisions within ε + 10⁻¹²");
}

/// Criterion 7 — locator soundness on brute-forceable compacts: 500
/// randomized `member_locate` and `fe_locate` calls agree with exact
/// distances (`Within` ⇒ dist ≤ δ, `Beyond` ⇒ dist > ε).
#[test]
fn criterion_7_locator_soundness() {
    let qs = || proptest::collection::vec(rat_strategy(50, 10), 1..=6);
    run_cases(
        "criterion 7 (locator soundness)",
        500,
        (
            qs(),
            qs(),
            rat_strategy(50, 10),
            pos_rat_strategy(20, 10),
            pos_rat_strategy(20, 10),
        ),
        |(set_a, set_b, x, eps, gap)| {
            let delta = eps.add(&gap);

            // member_locate against the compact set distributed over the
            // finite set of constants set_a.
            let constants = FiniteEnum::new(set_a.iter().cloned().map(Real::from_rat).collect())
                .expect("generated sets are non-empty");
            let compact = dist_fc(&constants);
            let exact_member = set_a
                .iter()
                .map(|p| (&x - p).abs())
                .min()
                .expect("generated sets are non-empty");
            match member_locate(&Real::from_rat(x.clone()), &compact, &eps, &delta)
                .expect("ε < δ by construction")
            {
                LocateResult::Within => prop_assert!(exact_member <= *delta.get()),
                LocateResult::Beyond => prop_assert!(exact_member > *eps.get()),
            }

            // fe_locate between two rational enumerations, driven only by
            // the per-pair locate of the rational metric.
            let ea = FiniteEnum::new(set_a.clone()).expect("non-empty");
            let eb = FiniteEnum::new(set_b.clone()).expect("non-empty");
            let embed = |qs: &[Rat]| -> Vec<Point2> {
                qs.iter()
                    .map(|q| Point2::new(q.clone(), Rat::zero()))
                    .collect()
            };
            let exact_h = naive_hausdorff(&embed(&set_a), &embed(&set_b));
            let m = rational_metric();
            match fe_locate(&ea, &eb, &eps, &delta, |a, b, e, d| m.locate(a, b, e, d))
                .expect("ε < δ by construction")
            {
                LocateResult::Within => prop_assert!(exact_h <= *delta.get()),
                LocateResult::Beyond => prop_assert!(exact_h > *eps.get()),
            }
            Ok(())
        },
    );
    println!("criterion 7 PASS: 500 member_locate and fe_locate calls sound");
}

/// Criterion 8 — interval net property: for 100 random (a, b, ε), the
/// exact Hausdorff distance between `interval_compact(a, b).approx(ε)`
/// and a fine sampling of [a, b] with step ≤ ε/10 is at most ε + ε/10,
/// and regularity holds on an ε-pair grid.
#[test]
fn criterion_8_interval_net_property() {
    run_cases(
        "criterion 8 (interval net property)",
        100,
        (
            rat_strategy(8, 2),
            (0i64..=6, 1i64..=2),
            pos_rat_strategy(16, 8),
        ),
        |(a, (wn, wd), eps)| {
            let b = &a + rat_frac(wn, wd);
            let compact = interval_compact(&a, &b).expect("a ≤ b by construction");
            let net = compact.approx(&eps);

            // Sample [a, b] with step ≤ ε/10 (degenerate interval: the
            // point itself).
            let width = &b - &a;
            let samples: Vec<Rat> = if width.is_zero() {
                vec![a.clone()]
            } else {
                let step_bound = eps.get() / rat_int(10);
                let count = (&width / step_bound)
                    .ceil()
                    .to_integer()
                    .to_usize()
                    .expect("sample count fits usize");
                let step = &width / rat_int(count as i64);
                (0..=count)
                    .map(|k| &a + &step * rat_int(k as i64))
                    .collect()
            };

            let embed = |qs: &[Rat]| -> Vec<Point2> {
                qs.iter()
                    .map(|q| Point2::new(q.clone(), Rat::zero()))
                    .collect()
            };
            let h = naive_hausdorff(&embed(net.points()), &embed(&samples));
            let allowed = eps.get() + eps.get() / rat_int(10);
            prop_assert!(
                h <= allowed,
                "net is {h} from the samples, allowed {allowed}"
            );

            // Regularity on an ε-pair grid.
            let pairs = [
                (eps.clone(), eps.clone()),
                (eps.clone(), eps.halve()),
                (eps.halve(), eps.halve().halve()),
                (eps.clone(), eps.add(&eps)),
                (eps.add(&eps), eps.halve().halve()),
            ];
            prop_assert!(compact.check_regularity(&pairs));
            Ok(())
        },
    );
    println!("criterion 8 PASS: 100 interval nets cover within ε + ε/10 and are regular");
}

/// Criterion 9 — rasterizer round-trip and snapping bound: randomized
/// in-window points move by at most `snap_error_bound` exactly, and
/// pixel-center inputs round-trip under `fe_equiv`.
#[test]
fn criterion_9_raster_round_trip() {
    let windows = (
        (-6i64..=6, 1i64..=2),
        (-6i64..=6, 1i64..=2),
        1i64..=5,
        1i64..=5,
        1usize..=12,
        1usize..=12,
    );
    let unit_fractions = proptest::collection::vec((0i64..=24, 0i64..=24), 1..=6);
    let cells = proptest::collection::vec((0usize..1000, 0usize..1000), 1..=8);

    run_cases(
        "criterion 9 (raster round-trip and snapping)",
        400,
        (windows, unit_fractions, cells),
        |(((ln, ld), (bn, bd), wspan, hspan, width, height), fractions, cells)| {
            let left = rat_frac(ln, ld);
            let bottom = rat_frac(bn, bd);
            let window = Window::new(
                left.clone(),
                &bottom + rat_int(hspan),
                &left + rat_int(wspan),
                bottom.clone(),
            )
            .expect("spans are positive");
            let bound = snap_error_bound(&window, width, height);

            // In-window points: each snapped point displaces by at most
            // the snapping bound (checked per point via singleton sets),
            // and the snapped set as a whole stays within the bound in
            // Hausdorff distance.
            let points: Vec<Point2> = fractions
                .iter()
                .map(|(u, v)| {
                    Point2::new(
                        &left + rat_frac(*u, 24) * rat_int(wspan),
                        &bottom + rat_frac(*v, 24) * rat_int(hspan),
                    )
                })
                .collect();
            for p in &points {
                let single = FiniteEnum::singleton(p.clone());
                let raster = snap_to_raster(&single, &window, width, height)
                    .expect("point lies in the window");
                let back = raster_to_enum(&raster).expect("one bit is set");
                prop_assert_eq!(back.len(), 1);
                prop_assert!(sup_dist(p, &back.points()[0]) <= bound);
            }
            let all = FiniteEnum::new(points.clone()).expect("non-empty");
            let snapped = snap_to_raster(&all, &window, width, height).expect("in-window");
            let back = raster_to_enum(&snapped).expect("bits are set");
            prop_assert!(naive_hausdorff(&points, back.points()) <= bound);

            // Pixel centers round-trip exactly.
            let blank = Raster::blank(window.clone(), width, height).expect("positive size");
            let centers: Vec<Point2> = cells
                .iter()
                .map(|(r, c)| {
                    blank
                        .pixel_center(r % height, c % width)
                        .expect("indices reduced into range")
                })
                .collect();
            let center_set = FiniteEnum::new(centers).expect("non-empty");
            let round_tripped = snap_to_raster(&center_set, &window, width, height)
                .expect("centers lie in the window");
            let recovered = raster_to_enum(&round_tripped).expect("bits are set");
            prop_assert!(fe_equiv(&sup_metric(), &center_set, &recovered));
            Ok(())
        },
    );
    println!("criterion 9 PASS: snapping bounded by snap_error_bound, centers round-trip");
}
