//! Python bindings for the certified plotting library.
//!
//! The module mirrors the Rust surface at the same exactness: every
//! rational crosses the boundary as a canonical `p/q` string (plain
//! integers for denominator 1), so nothing is ever rounded to a float.
//! `Real` wraps a point of the completion of ℚ, `Plot` wraps a finished
//! raster with its error certificate, and `hausdorff_distance` computes
//! the exact Hausdorff distance between finite point sets.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use certiplot::cli::{run_plot, FunctionSpec, OutputFormat, PlotRequest};
use certiplot::finite_enum::hausdorff_dist;
use certiplot::metric::sup_metric;
use certiplot::raster::{raster_to_enum, to_pbm, Window};
use certiplot::rat::{format_rat, parse_rat, rat_int};
use certiplot::real_ops::exp_real;
use certiplot::{FiniteEnum, LocateResult, PlotCertificate, Point2, PosRat, Raster, Rat};

fn value_error(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse(text: &str) -> PyResult<Rat> {
    parse_rat(text).map_err(value_error)
}

fn parse_positive(text: &str) -> PyResult<PosRat> {
    PosRat::new(parse(text)?).map_err(value_error)
}

fn locate_name(result: LocateResult) -> &'static str {
    match result {
        LocateResult::Within => "within",
        LocateResult::Beyond => "beyond",
    }
}

/// A point of the completion of the rationals: queryable at any positive
/// precision, with every answer within that precision of the ideal value.
#[pyclass(frozen)]
struct Real {
    inner: certiplot::Real,
}

#[pymethods]
impl Real {
    /// The exact rational `value`, e.g. `"-6"` or `"1/3"`.
    #[staticmethod]
    fn from_rational(value: &str) -> PyResult<Self> {
        Ok(Real {
            inner: certiplot::Real::from_rat(parse(value)?),
        })
    }

    /// The exponential of the rational `value`; requires `value` ≤ 1,
    /// the range on which the power series tail is certified.
    #[staticmethod]
    fn exp(value: &str) -> PyResult<Self> {
        let q = parse(value)?;
        if q > rat_int(1) {
            return Err(value_error(format!(
                "exp argument {} exceeds 1, outside the certified range",
                format_rat(&q)
            )));
        }
        Ok(Real {
            inner: exp_real(&certiplot::Real::from_rat(q)),
        })
    }

    /// A rational within `eps` of the ideal value, as a canonical string.
    fn approx(&self, eps: &str) -> PyResult<String> {
        let eps = parse_positive(eps)?;
        Ok(format_rat(&self.inner.approx(&eps)))
    }

    /// Locate query against another real: `"within"` certifies distance
    /// ≤ delta, `"beyond"` certifies distance > eps; requires eps < delta.
    fn locate_ball(&self, other: PyRef<'_, Real>, eps: &str, delta: &str) -> PyResult<String> {
        let eps = parse_positive(eps)?;
        let delta = parse_positive(delta)?;
        self.inner
            .locate_ball(&other.inner, &eps, &delta)
            .map(locate_name)
            .map(str::to_owned)
            .map_err(value_error)
    }

    fn __repr__(&self) -> String {
        let eps = PosRat::frac(1, 100);
        format!("Real({} ± 1/100)", format_rat(&self.inner.approx(&eps)))
    }
}

/// A finished raster plot with its exact error certificate.
#[pyclass(frozen)]
struct Plot {
    raster: Raster,
    certificate: PlotCertificate,
}

#[pymethods]
impl Plot {
    /// The plot as text: a header line with window and certificate, then
    /// one row per pixel line, `#` for set and `.` for clear.
    fn ascii(&self) -> String {
        certiplot::cli::render_ascii(&self.raster, &self.certificate)
    }

    /// The plot as a plain PBM (P1) image with the certificate in a
    /// comment line.
    fn pbm(&self) -> String {
        to_pbm(&self.raster, &self.certificate)
    }

    /// The set pixels as exact cell-center coordinates, row-major from
    /// the top, each a `(x, y)` pair of canonical rational strings.
    fn points(&self) -> PyResult<Vec<(String, String)>> {
        let centers = raster_to_enum(&self.raster).map_err(value_error)?;
        Ok(centers
            .points()
            .iter()
            .map(|p| (format_rat(&p.x), format_rat(&p.y)))
            .collect())
    }

    /// The bit at (row, col), top row first.
    fn bit(&self, row: usize, col: usize) -> PyResult<bool> {
        if row >= self.raster.height() || col >= self.raster.width() {
            return Err(value_error(format!(
                "pixel ({row}, {col}) outside a {}x{} raster",
                self.raster.width(),
                self.raster.height()
            )));
        }
        Ok(self.raster.bit(row, col))
    }

    /// The ε the ideal set was approximated at.
    #[getter]
    fn epsilon(&self) -> String {
        format_rat(self.certificate.approx_epsilon().get())
    }

    /// The worst-case displacement of pixel snapping (half a cell).
    #[getter]
    fn snap_bound(&self) -> String {
        format_rat(self.certificate.snap_bound())
    }

    /// The certified bound on the Hausdorff distance between the set
    /// pixel centers and the ideal set: ε + the snapping bound.
    #[getter]
    fn total_bound(&self) -> String {
        format_rat(self.certificate.total_bound())
    }

    #[getter]
    fn width(&self) -> usize {
        self.raster.width()
    }

    #[getter]
    fn height(&self) -> usize {
        self.raster.height()
    }

    fn __repr__(&self) -> String {
        format!(
            "Plot({}x{}, total_bound={})",
            self.raster.width(),
            self.raster.height(),
            format_rat(self.certificate.total_bound())
        )
    }
}

/// Plots `function` over `[a, b]` into the given window and raster size,
/// returning a [`Plot`] whose certificate bounds the error exactly.
///
/// * `function` — `"exp"`, `"id"`, `"affine:A,B"`, or `"clamp-exp:LO,HI"`.
/// * `domain` — `(a, b)` as rational strings, a ≤ b.
/// * `window` — `(left, top, right, bottom)` as rational strings.
/// * `size` — `(width, height)` in pixels.
/// * `eps` — optional approximation ε; defaults to a quarter pixel.
#[pyfunction]
#[pyo3(signature = (function, domain, window, size, eps = None))]
fn plot(
    function: &str,
    domain: (String, String),
    window: (String, String, String, String),
    size: (usize, usize),
    eps: Option<String>,
) -> PyResult<Plot> {
    let function = FunctionSpec::parse(function).map_err(|e| value_error(e.message()))?;
    let a = parse(&domain.0)?;
    let b = parse(&domain.1)?;
    if a > b {
        return Err(value_error(format!(
            "domain start {} exceeds end {}",
            format_rat(&a),
            format_rat(&b)
        )));
    }
    let window = Window::new(
        parse(&window.0)?,
        parse(&window.1)?,
        parse(&window.2)?,
        parse(&window.3)?,
    )
    .map_err(value_error)?;
    let epsilon = eps.as_deref().map(parse_positive).transpose()?;
    let request = PlotRequest {
        function,
        domain: (a, b),
        window,
        width: size.0,
        height: size.1,
        epsilon,
        format: OutputFormat::Ascii,
    };
    let (raster, certificate) = run_plot(&request).map_err(value_error)?;
    Ok(Plot {
        raster,
        certificate,
    })
}

/// The exact Hausdorff distance (sup metric) between two non-empty finite
/// point sets, each a list of `(x, y)` rational-string pairs, returned as
/// a canonical rational string.
#[pyfunction]
fn hausdorff_distance(a: Vec<(String, String)>, b: Vec<(String, String)>) -> PyResult<String> {
    let parse_set = |pts: &[(String, String)]| -> PyResult<FiniteEnum<Point2>> {
        let mut points = Vec::with_capacity(pts.len());
        for (x, y) in pts {
            points.push(Point2::new(parse(x)?, parse(y)?));
        }
        FiniteEnum::new(points).map_err(value_error)
    };
    let ea = parse_set(&a)?;
    let eb = parse_set(&b)?;
    Ok(format_rat(&hausdorff_dist(&sup_metric(), &ea, &eb)))
}

#[pymodule]
fn certiplot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Real>()?;
    m.add_class::<Plot>()?;
    m.add_function(wrap_pyfunction!(plot, m)?)?;
    m.add_function(wrap_pyfunction!(hausdorff_distance, m)?)?;
    Ok(())
}
