//! Rasterization of plane compact sets with exact error certificates.
//!
//! A raster is a Boolean pixel grid over a rational window; each set bit is
//! read back as the exact rational center of its cell. Snapping a point to
//! its cell center moves it by at most half a cell in the sup metric, so a
//! plot drawn from an ε-net of a compact set carries the certificate
//!
//! ```text
//! hausdorff_dist(raster points, ideal set) ≤ ε + snap_error_bound
//! ```
//!
//! computed exactly — an a-priori bound from the construction, never
//! tightened a posteriori.

use crate::compact::Compact;
use crate::finite_enum::FiniteEnum;
use crate::metric::Point2;
use crate::rat::{floor_to_usize, is_integer, rat_int, PosRat, Rat};
use crate::Error;
use std::fmt;

/// An axis-aligned rational view rectangle. The corners are the outer cell
/// edges of the raster laid over it — pixel centers sit half a cell inward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    left: Rat,
    top: Rat,
    right: Rat,
    bottom: Rat,
}

impl Window {
    /// Requires left < right and bottom < top.
    pub fn new(left: Rat, top: Rat, right: Rat, bottom: Rat) -> Result<Self, Error> {
        if left < right && bottom < top {
            Ok(Window {
                left,
                top,
                right,
                bottom,
            })
        } else {
            Err(Error::BadWindow)
        }
    }

    pub fn left(&self) -> &Rat {
        &self.left
    }

    pub fn top(&self) -> &Rat {
        &self.top
    }

    pub fn right(&self) -> &Rat {
        &self.right
    }

    pub fn bottom(&self) -> &Rat {
        &self.bottom
    }

    /// Membership in the closed rectangle.
    pub fn contains(&self, p: &Point2) -> bool {
        self.left <= p.x && p.x <= self.right && self.bottom <= p.y && p.y <= self.top
    }

    /// Componentwise clamp into the closed rectangle; 1-Lipschitz in the
    /// sup metric.
    pub fn clamp_point(&self, p: &Point2) -> Point2 {
        Point2::new(
            clamp_rat(&p.x, &self.left, &self.right),
            clamp_rat(&p.y, &self.bottom, &self.top),
        )
    }

    fn cell_width(&self, width: usize) -> Rat {
        (&self.right - &self.left) / rat_int(width as i64)
    }

    fn cell_height(&self, height: usize) -> Rat {
        (&self.top - &self.bottom) / rat_int(height as i64)
    }
}

fn clamp_rat(q: &Rat, lo: &Rat, hi: &Rat) -> Rat {
    if q < lo {
        lo.clone()
    } else if q > hi {
        hi.clone()
    } else {
        q.clone()
    }
}

/// A Boolean pixel grid over a window, row-major with the top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Raster {
    window: Window,
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl Raster {
    /// An all-clear raster. Dimensions must be at least 1×1.
    pub fn blank(window: Window, width: usize, height: usize) -> Result<Self, Error> {
        if width == 0 || height == 0 {
            return Err(Error::BadRasterSize { width, height });
        }
        Ok(Raster {
            window,
            width,
            height,
            bits: vec![false; width * height],
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// The bit at (row, col), top row first.
    ///
    /// # Panics
    /// Panics if the indices are out of range.
    pub fn bit(&self, row: usize, col: usize) -> bool {
        assert!(row < self.height && col < self.width, "pixel out of range");
        self.bits[row * self.width + col]
    }

    fn set_bit(&mut self, row: usize, col: usize) {
        self.bits[row * self.width + col] = true;
    }

    /// Number of set bits.
    pub fn set_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The exact center of the cell at (row, col):
    /// `x = left + (col + 1/2)·cellwidth`, `y = top − (row + 1/2)·cellheight`.
    pub fn pixel_center(&self, row: usize, col: usize) -> Result<Point2, Error> {
        if row >= self.height || col >= self.width {
            return Err(Error::PixelOutOfRange {
                row,
                col,
                width: self.width,
                height: self.height,
            });
        }
        let half = crate::rat::rat_frac(1, 2);
        let x =
            &self.window.left + (rat_int(col as i64) + &half) * self.window.cell_width(self.width);
        let y =
            &self.window.top - (rat_int(row as i64) + &half) * self.window.cell_height(self.height);
        Ok(Point2::new(x, y))
    }
}

/// Which cell (along one axis) contains a coordinate at `offset` cells from
/// the axis origin, for `offset ∈ [0, count]`: boundary ties go to the
/// lower index, and the outer far edge (offset = count) belongs to the last
/// cell.
fn cell_index(offset: &Rat, count: usize) -> usize {
    if is_integer(offset) {
        let k = floor_to_usize(offset);
        k.saturating_sub(1).min(count - 1)
    } else {
        floor_to_usize(offset)
    }
}

/// Snaps every point to the pixel whose cell contains it and sets that bit.
///
/// Every point must lie in the closed window. Each point moves by at most
/// [`snap_error_bound`] (half a cell in the sup metric); several points in
/// one cell set the bit once.
pub fn snap_to_raster(
    points: &FiniteEnum<Point2>,
    window: &Window,
    width: usize,
    height: usize,
) -> Result<Raster, Error> {
    let mut raster = Raster::blank(window.clone(), width, height)?;
    let cell_w = window.cell_width(width);
    let cell_h = window.cell_height(height);
    for p in points.points() {
        if !window.contains(p) {
            return Err(Error::PointOutsideWindow {
                x: p.x.clone(),
                y: p.y.clone(),
            });
        }
        let col = cell_index(&((&p.x - &window.left) / &cell_w), width);
        let row = cell_index(&((&window.top - &p.y) / &cell_h), height);
        raster.set_bit(row, col);
    }
    Ok(raster)
}

/// Reads the raster back as the finite enumeration of the centers of its
/// set bits (row-major order). Rejects an all-clear raster: the empty
/// enumeration is excluded by type.
pub fn raster_to_enum(raster: &Raster) -> Result<FiniteEnum<Point2>, Error> {
    let mut centers = Vec::with_capacity(raster.set_count());
    for row in 0..raster.height {
        for col in 0..raster.width {
            if raster.bit(row, col) {
                centers.push(raster.pixel_center(row, col).expect("indices in range"));
            }
        }
    }
    if centers.is_empty() {
        return Err(Error::EmptyRaster);
    }
    Ok(FiniteEnum::new(centers).expect("non-empty by the check above"))
}

/// The worst-case sup-metric displacement of snapping: half the larger
/// cell dimension, `max(cellwidth, cellheight)/2`, exact.
pub fn snap_error_bound(window: &Window, width: usize, height: usize) -> Rat {
    assert!(
        width > 0 && height > 0,
        "raster dimensions must be at least 1"
    );
    let cw = window.cell_width(width);
    let ch = window.cell_height(height);
    let larger = if cw >= ch { cw } else { ch };
    larger / rat_int(2)
}

/// The exact Hausdorff-error certificate attached to a plot:
/// `total_bound = approx_epsilon + snap_bound`, all exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotCertificate {
    approx_epsilon: PosRat,
    snap_bound: Rat,
    total_bound: Rat,
}

impl PlotCertificate {
    pub fn new(approx_epsilon: PosRat, snap_bound: Rat) -> Self {
        let total_bound = approx_epsilon.get() + &snap_bound;
        PlotCertificate {
            approx_epsilon,
            snap_bound,
            total_bound,
        }
    }

    /// The ε the compact set was approximated at.
    pub fn approx_epsilon(&self) -> &PosRat {
        &self.approx_epsilon
    }

    /// Half-pixel sup-metric snapping bound.
    pub fn snap_bound(&self) -> &Rat {
        &self.snap_bound
    }

    /// The full certified Hausdorff bound, `approx_epsilon + snap_bound`.
    pub fn total_bound(&self) -> &Rat {
        &self.total_bound
    }
}

impl fmt::Display for PlotCertificate {
    /// The canonical certificate line:
    /// `certificate: eps=<p/q> snap=<p/q> total=<p/q>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "certificate: eps={} snap={} total={}",
            self.approx_epsilon, self.snap_bound, self.total_bound
        )
    }
}

/// Plots a compact subset of the plane: draws its ε-net, clips into the
/// closed window, snaps to the pixel grid, and returns the raster with its
/// certificate.
///
/// The caller guarantees the ideal set lies within the window; then every
/// net point lies within ε of it, clipping moves nothing farther than the
/// net's own slack, and the raster's interpretation is within
/// `ε + snap_error_bound` (Hausdorff) of the ideal set. Net points straying
/// beyond the ε inflation around the window falsify that guarantee and are
/// rejected.
pub fn plot(
    s: &Compact<Point2>,
    window: &Window,
    width: usize,
    height: usize,
    eps: &PosRat,
) -> Result<(Raster, PlotCertificate), Error> {
    let net = s.approx(eps);
    let inflated = Window {
        left: &window.left - eps.get(),
        top: &window.top + eps.get(),
        right: &window.right + eps.get(),
        bottom: &window.bottom - eps.get(),
    };
    for p in net.points() {
        if !inflated.contains(p) {
            return Err(Error::PointOutsideWindow {
                x: p.x.clone(),
                y: p.y.clone(),
            });
        }
    }
    let clipped = net.map(|p| window.clamp_point(p));
    let raster = snap_to_raster(&clipped, window, width, height)?;
    let certificate = PlotCertificate::new(eps.clone(), snap_error_bound(window, width, height));
    Ok((raster, certificate))
}

/// Serializes the raster as a PBM (P1) image, bit-exact: `P1`, a comment
/// line carrying the certificate, `width height`, then one line per pixel
/// row of space-separated 0/1 digits, top row first, 1 = set.
pub fn to_pbm(raster: &Raster, certificate: &PlotCertificate) -> String {
    let mut out = String::new();
    out.push_str("P1\n");
    out.push_str(&format!("# {certificate}\n"));
    out.push_str(&format!("{} {}\n", raster.width, raster.height));
    for row in 0..raster.height {
        let digits: Vec<&str> = (0..raster.width)
            .map(|col| if raster.bit(row, col) { "1" } else { "0" })
            .collect();
        out.push_str(&digits.join(" "));
        out.push('\n');
    }
    out
}
