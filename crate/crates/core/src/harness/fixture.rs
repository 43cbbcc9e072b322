//! Synthetic square fixtures on a blank canvas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::LabelMap;

/// Axis-aligned rectangle in pixel units; covers `x..x+width`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub x: i64,
    pub y: i64,
    pub width: usize,
    pub height: usize,
}

impl Rect {
    pub const fn new(x: i64, y: i64, width: usize, height: usize) -> Self {
        Rect { x, y, width, height }
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    fn center(&self) -> (f64, f64) {
        (self.x as f64 + self.width as f64 / 2.0, self.y as f64 + self.height as f64 / 2.0)
    }

    pub fn translated(self, dx: i64, dy: i64) -> Self {
        Rect { x: self.x + dx, y: self.y + dy, ..self }
    }
}

/// Canvas, reference rectangle and automatic rectangle, the latter
/// optionally rotated about its own centre.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixtureSpec {
    pub width: usize,
    pub height: usize,
    pub gt: Rect,
    pub auto: Rect,
    /// Counter-clockwise rotation of `auto`, in degrees.
    pub angle_deg: f64,
}

/// Maximum relative difference between rasterised and declared area.
pub const MAX_AREA_DRIFT: f64 = 0.01;

impl FixtureSpec {
    /// 100x100 canvas, centred 70x70 reference, 35x35 prediction inside it.
    pub fn s1() -> Self {
        FixtureSpec {
            width: 100,
            height: 100,
            gt: Rect::new(15, 15, 70, 70),
            auto: Rect::new(32, 32, 35, 35),
            angle_deg: 0.0,
        }
    }

    /// As [`FixtureSpec::s1`], with the prediction tucked into the
    /// reference's top-left corner so the two boundaries share pixels.
    pub fn s3() -> Self {
        FixtureSpec { auto: Rect::new(15, 15, 35, 35), ..Self::s1() }
    }

    /// Equal 40x40 squares, prediction shifted 4 px right so the two
    /// partially overlap. Base geometry for rotation sweeps.
    pub fn rotation_base() -> Self {
        FixtureSpec {
            width: 100,
            height: 100,
            gt: Rect::new(30, 30, 40, 40),
            auto: Rect::new(34, 30, 40, 40),
            angle_deg: 0.0,
        }
    }

    /// Prediction identical to the reference. Base geometry for
    /// translation sweeps.
    pub fn translation_base() -> Self {
        FixtureSpec {
            width: 100,
            height: 100,
            gt: Rect::new(20, 30, 40, 40),
            auto: Rect::new(20, 30, 40, 40),
            angle_deg: 0.0,
        }
    }

    pub fn rotated(self, angle_deg: f64) -> Self {
        FixtureSpec { angle_deg, ..self }
    }

    /// Signed distance from a sample point to the nearest edge of the
    /// rotated prediction, positive inside.
    fn auto_depth(&self, px: f64, py: f64) -> f64 {
        let (cx, cy) = self.auto.center();
        let (sin, cos) = self.angle_deg.to_radians().sin_cos();
        let (dx, dy) = (px - cx, py - cy);
        let u = cos * dx + sin * dy;
        let v = -sin * dx + cos * dy;
        (self.auto.width as f64 / 2.0 - u.abs()).min(self.auto.height as f64 / 2.0 - v.abs())
    }

    fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidFixture("empty canvas".into()));
        }
        for (name, r) in [("gt", self.gt), ("auto", self.auto)] {
            if r.width == 0 || r.height == 0 {
                return Err(Error::InvalidFixture(format!("{name} rectangle has zero size")));
            }
        }
        let fits = |x0: f64, y0: f64, x1: f64, y1: f64| {
            x0 >= 0.0 && y0 >= 0.0 && x1 <= self.width as f64 && y1 <= self.height as f64
        };
        let gt = self.gt;
        if !fits(gt.x as f64, gt.y as f64, (gt.x + gt.width as i64) as f64, (gt.y + gt.height as i64) as f64) {
            return Err(Error::InvalidFixture("gt rectangle exceeds the canvas".into()));
        }
        let (cx, cy) = self.auto.center();
        let (sin, cos) = self.angle_deg.to_radians().sin_cos();
        let (hw, hh) = (self.auto.width as f64 / 2.0, self.auto.height as f64 / 2.0);
        let ex = hw * cos.abs() + hh * sin.abs();
        let ey = hw * sin.abs() + hh * cos.abs();
        let eps = 1e-9;
        if !fits(cx - ex + eps, cy - ey + eps, cx + ex - eps, cy + ey - eps) {
            return Err(Error::InvalidFixture("auto shape exceeds the canvas".into()));
        }
        Ok(())
    }
}

/// A generated prediction/reference pair. Foreground is label 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub spec: FixtureSpec,
    pub auto: LabelMap,
    pub gt: LabelMap,
    pub auto_area: usize,
}

impl Fixture {
    /// Relative difference between the rasterised and declared auto area.
    pub fn area_drift(&self) -> f64 {
        let declared = self.spec.auto.area() as f64;
        (self.auto_area as f64 - declared) / declared
    }
}

/// Rasterises a spec. The prediction takes the `width * height` pixels
/// whose centres lie deepest inside the (possibly rotated) rectangle, ties
/// broken in raster order, so rotation does not change its area. Without
/// rotation this is exactly the set of pixels with centres inside.
pub fn generate_fixture(spec: &FixtureSpec) -> Result<Fixture> {
    spec.validate()?;
    let gt = LabelMap::from_fn(spec.width, spec.height, |x, y| {
        let (x, y) = (x as i64, y as i64);
        let r = spec.gt;
        u32::from(x >= r.x && x < r.x + r.width as i64 && y >= r.y && y < r.y + r.height as i64)
    })?;
    let mut ranked: Vec<(f64, usize)> = (0..spec.width * spec.height)
        .map(|i| {
            let (x, y) = (i % spec.width, i / spec.width);
            (spec.auto_depth(x as f64 + 0.5, y as f64 + 0.5), i)
        })
        .filter(|&(d, _)| d > -1.0)
        .collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut labels = vec![0u32; spec.width * spec.height];
    for &(_, i) in ranked.iter().take(spec.auto.area()) {
        labels[i] = 1;
    }
    let auto = LabelMap::new(spec.width, spec.height, labels)?;
    let auto_area = auto.labels().iter().filter(|&&l| l == 1).count();
    let fixture = Fixture { spec: *spec, auto, gt, auto_area };
    if fixture.area_drift().abs() > MAX_AREA_DRIFT {
        return Err(Error::InvalidFixture(format!(
            "rasterised area {} drifts more than 1% from {}",
            fixture.auto_area,
            spec.auto.area()
        )));
    }
    Ok(fixture)
}
