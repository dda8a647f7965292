//! Command-line front end: parse a plot request, run the certified
//! pipeline (interval domain → function graph → rasterized plot), and emit
//! ASCII art or PBM together with the exact error certificate.
//!
//! The function menu is a fixed registry — every entry carries a verified
//! modulus of uniform continuity, which an arbitrary expression parser
//! could not supply. All function values are pre-clamped into the window's
//! vertical range, so the plotted ideal set always lies inside the window
//! and the certificate stays two-sided.

use crate::compact::{graph, interval_compact};
use crate::completion::{Real, UniformFn};
use crate::raster::{plot, snap_error_bound, to_pbm, PlotCertificate, Raster, Window};
use crate::rat::{parse_rat, PosRat, Rat};
use crate::real_ops::{affine_fn, clamp_fn, exp_lift, postcompose, rat_lift};
use crate::Error;
use clap::error::ErrorKind;
use clap::Parser;

/// A function from the fixed registry, selected by `--fn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionSpec {
    /// `exp` — the exponential (domain upper bound must be ≤ 1).
    Exp,
    /// `id` — the identity.
    Identity,
    /// `affine:A,B` — the map `x ↦ A·x + B`.
    Affine { a: Rat, b: Rat },
    /// `clamp-exp:LO,HI` — the exponential clamped into [LO, HI].
    ClampExp { lo: Rat, hi: Rat },
}

impl FunctionSpec {
    /// Parses a `--fn` value. Unknown names and malformed rationals are
    /// usage errors; a degenerate clamp range is a precondition error.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        if text == "exp" {
            return Ok(FunctionSpec::Exp);
        }
        if text == "id" {
            return Ok(FunctionSpec::Identity);
        }
        if let Some(params) = text.strip_prefix("affine:") {
            let (a, b) = parse_rat_pair(params)?;
            return Ok(FunctionSpec::Affine { a, b });
        }
        if let Some(params) = text.strip_prefix("clamp-exp:") {
            let (lo, hi) = parse_rat_pair(params)?;
            if lo >= hi {
                return Err(CliError::from(Error::BadClampRange { lo, hi }));
            }
            return Ok(FunctionSpec::ClampExp { lo, hi });
        }
        Err(CliError::Usage(format!(
            "unknown function {text:?}: expected exp, id, affine:A,B, or clamp-exp:LO,HI"
        )))
    }

    /// The `--fn` value this spec round-trips through.
    pub fn to_flag(&self) -> String {
        match self {
            FunctionSpec::Exp => "exp".to_owned(),
            FunctionSpec::Identity => "id".to_owned(),
            FunctionSpec::Affine { a, b } => format!("affine:{a},{b}"),
            FunctionSpec::ClampExp { lo, hi } => format!("clamp-exp:{lo},{hi}"),
        }
    }

    /// Whether the registry entry is built on the exponential (and so
    /// restricted to domains with upper bound ≤ 1).
    fn uses_exp(&self) -> bool {
        matches!(self, FunctionSpec::Exp | FunctionSpec::ClampExp { .. })
    }
}

fn parse_rat_pair(params: &str) -> Result<(Rat, Rat), CliError> {
    let parts: Vec<&str> = params.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "expected two comma-separated rationals, got {params:?}"
        )));
    }
    Ok((cli_rat(parts[0])?, cli_rat(parts[1])?))
}

fn cli_rat(text: &str) -> Result<Rat, CliError> {
    parse_rat(text).map_err(CliError::from)
}

/// Output selected by `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Ascii,
    Pbm,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
            "ascii" => Ok(OutputFormat::Ascii),
            "pbm" => Ok(OutputFormat::Pbm),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?}: expected ascii or pbm"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Ascii => "ascii",
            OutputFormat::Pbm => "pbm",
        }
    }
}

/// A validated plot request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotRequest {
    pub function: FunctionSpec,
    pub domain: (Rat, Rat),
    pub window: Window,
    pub width: usize,
    pub height: usize,
    /// The approximation ε; `None` selects the default, a quarter pixel.
    pub epsilon: Option<PosRat>,
    pub format: OutputFormat,
}

impl PlotRequest {
    /// The ε actually fed to the compact set: the explicit one, or
    /// pixel/4 (pixel = the larger cell dimension), which together with
    /// the half-pixel snapping bound totals 3/4 of a pixel.
    pub fn effective_epsilon(&self) -> PosRat {
        match &self.epsilon {
            Some(eps) => eps.clone(),
            None => PosRat::unchecked(
                snap_error_bound(&self.window, self.width, self.height) / crate::rat::rat_int(2),
            ),
        }
    }

    /// The argv that parses back to this request (modulo canonical
    /// rational spelling).
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec![
            "--fn".to_owned(),
            self.function.to_flag(),
            "--domain".to_owned(),
            self.domain.0.to_string(),
            self.domain.1.to_string(),
            "--window".to_owned(),
            self.window.left().to_string(),
            self.window.top().to_string(),
            self.window.right().to_string(),
            self.window.bottom().to_string(),
            "--size".to_owned(),
            self.width.to_string(),
            self.height.to_string(),
        ];
        if let Some(eps) = &self.epsilon {
            args.push("--eps".to_owned());
            args.push(eps.to_string());
        }
        args.push("--format".to_owned());
        args.push(self.format.name().to_owned());
        args
    }
}

/// A CLI failure, split by exit status: usage errors (1) for malformed
/// invocations, domain errors (2) for well-formed requests that violate a
/// precondition. `--help` output travels as `Help` with status 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Help(String),
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Help(text) | CliError::Usage(text) | CliError::Domain(text) => text,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            // malformed literals are the caller misspeaking: usage
            Error::ParseRational { .. } | Error::ParsePoint(_) => CliError::Usage(err.to_string()),
            // everything else is a violated precondition of a well-formed
            // request
            _ => CliError::Domain(err.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "certiplot",
    about = "Certified raster plots of uniformly continuous functions",
    disable_version_flag = true
)]
struct RawArgs {
    /// Function to plot: exp, id, affine:A,B, or clamp-exp:LO,HI
    #[arg(long = "fn", value_name = "FUNCTION")]
    function: String,
    /// Domain interval: two rationals A B with A <= B
    #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["A", "B"])]
    domain: Vec<String>,
    /// Window corners: LEFT TOP RIGHT BOTTOM
    #[arg(long, num_args = 4, allow_hyphen_values = true, value_names = ["LEFT", "TOP", "RIGHT", "BOTTOM"])]
    window: Vec<String>,
    /// Raster size in pixels: WIDTH HEIGHT
    #[arg(long, num_args = 2, value_names = ["WIDTH", "HEIGHT"])]
    size: Vec<usize>,
    /// Approximation precision (rational); defaults to a quarter pixel
    #[arg(long, allow_hyphen_values = true, value_name = "EPS")]
    eps: Option<String>,
    /// Output format: ascii or pbm
    #[arg(long, default_value = "ascii", value_name = "FORMAT")]
    format: String,
}

/// Parses and validates an argument list (without the program name).
pub fn parse_request(args: &[String]) -> Result<PlotRequest, CliError> {
    let mut argv = vec!["certiplot".to_owned()];
    argv.extend_from_slice(args);
    let raw = RawArgs::try_parse_from(&argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            CliError::Help(e.render().to_string())
        }
        _ => CliError::Usage(e.render().to_string()),
    })?;

    let function = FunctionSpec::parse(&raw.function)?;

    if raw.domain.len() != 2 {
        return Err(CliError::Usage(format!(
            "--domain takes exactly 2 rationals, got {}",
            raw.domain.len()
        )));
    }
    let a = cli_rat(&raw.domain[0])?;
    let b = cli_rat(&raw.domain[1])?;
    if a > b {
        return Err(CliError::from(Error::BadInterval { a, b }));
    }

    if raw.window.len() != 4 {
        return Err(CliError::Usage(format!(
            "--window takes exactly 4 rationals, got {}",
            raw.window.len()
        )));
    }
    let window = Window::new(
        cli_rat(&raw.window[0])?,
        cli_rat(&raw.window[1])?,
        cli_rat(&raw.window[2])?,
        cli_rat(&raw.window[3])?,
    )
    .map_err(CliError::from)?;

    if raw.size.len() != 2 {
        return Err(CliError::Usage(format!(
            "--size takes exactly 2 integers, got {}",
            raw.size.len()
        )));
    }
    let (width, height) = (raw.size[0], raw.size[1]);
    if width == 0 || height == 0 {
        return Err(CliError::from(Error::BadRasterSize { width, height }));
    }

    let epsilon = match &raw.eps {
        Some(text) => Some(PosRat::new(cli_rat(text)?).map_err(CliError::from)?),
        None => None,
    };

    let format = OutputFormat::parse(&raw.format)?;

    if function.uses_exp() && b > crate::rat::rat_int(1) {
        return Err(CliError::from(Error::ExpDomain(b)));
    }

    Ok(PlotRequest {
        function,
        domain: (a, b),
        window,
        width,
        height,
        epsilon,
        format,
    })
}

/// Runs the certified pipeline for a validated request:
/// domain interval → graph of the range-clamped function → plot.
pub fn run_plot(req: &PlotRequest) -> Result<(Raster, PlotCertificate), Error> {
    let (a, b) = &req.domain;
    if req.function.uses_exp() && *b > crate::rat::rat_int(1) {
        return Err(Error::ExpDomain(b.clone()));
    }
    let domain = interval_compact(a, b)?;
    let range_clamp = clamp_fn(req.window.bottom(), req.window.top())?;
    let lift: UniformFn<Rat, Real> = match &req.function {
        FunctionSpec::Exp => postcompose(&exp_lift(), &range_clamp),
        FunctionSpec::Identity => rat_lift(
            &affine_fn(&crate::rat::rat_int(1), &crate::rat::rat_int(0)).then(&range_clamp),
        ),
        FunctionSpec::Affine { a, b } => rat_lift(&affine_fn(a, b).then(&range_clamp)),
        FunctionSpec::ClampExp { lo, hi } => {
            postcompose(&exp_lift(), &clamp_fn(lo, hi)?.then(&range_clamp))
        }
    };
    let g = graph(&lift, &domain);
    plot(
        &g,
        &req.window,
        req.width,
        req.height,
        &req.effective_epsilon(),
    )
}

/// Renders the raster as ASCII art: one header line with the window
/// corners and the certificate, then one line per pixel row, `#` for set
/// and `.` for clear.
pub fn render_ascii(raster: &Raster, certificate: &PlotCertificate) -> String {
    let w = raster.window();
    let mut out = format!(
        "window ({}, {}) to ({}, {})  {}\n",
        w.left(),
        w.top(),
        w.right(),
        w.bottom(),
        certificate
    );
    for row in 0..raster.height() {
        for col in 0..raster.width() {
            out.push(if raster.bit(row, col) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Full CLI behavior: parse, plot, format. The returned string is the
/// stdout payload.
pub fn run(args: &[String]) -> Result<String, CliError> {
    let req = parse_request(args)?;
    let (raster, certificate) = run_plot(&req).map_err(CliError::from)?;
    Ok(match req.format {
        OutputFormat::Ascii => render_ascii(&raster, &certificate),
        OutputFormat::Pbm => to_pbm(&raster, &certificate),
    })
}
