//! Radial lineouts, square images, and the spinning map between them.
//!
//! "Spinning" turns a 1D radial profile of length N into a rotationally
//! symmetric (2N-1)x(2N-1) image: pixel (i, j) takes the profile value at
//! radius r = sqrt((i-c)^2 + (j-c)^2) with c = N-1, linearly interpolated
//! between the two neighbouring integer radii, and 0 outside r = N-1.
//! `spin_adjoint` is the exact transpose of that linear map (scatter with
//! the same weights); `unspin` is the weight-normalized adjoint, i.e. a
//! radial average that inverts `spin` exactly on profiles affine in radius.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// 1D density-vs-radius vector; sample k sits at radius k pixels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RadialProfile {
    values: Vec<f64>,
}

impl RadialProfile {
    /// Requires length >= 2 and finite entries.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::ProfileTooShort(values.len()));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("radial profile"));
        }
        Ok(RadialProfile { values })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Row-major real matrix; spun images are square with side 2N-1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Image2D {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl Image2D {
    pub fn zeros(height: usize, width: usize) -> Self {
        Image2D {
            height,
            width,
            data: vec![0.0; height * width],
        }
    }

    pub fn from_raw(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != height * width {
            return Err(Error::LengthMismatch {
                expected: height * width,
                actual: data.len(),
            });
        }
        Ok(Image2D {
            height,
            width,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.width + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.data[i * self.width + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    /// Checks this is a (2N-1)x(2N-1) spun-image shape and returns N.
    pub fn profile_len(&self) -> Result<usize> {
        if self.height != self.width || self.height % 2 == 0 || self.height < 3 {
            return Err(Error::BadImageShape {
                height: self.height,
                width: self.width,
            });
        }
        Ok((self.height + 1) / 2)
    }
}

/// Interpolation footprint of one pixel: bins (k0, k1) with weights (1-w, w).
/// Returns None for pixels outside radius N-1.
#[inline]
fn pixel_bins(i: usize, j: usize, n: usize) -> Option<(usize, usize, f64)> {
    let c = (n - 1) as f64;
    let di = i as f64 - c;
    let dj = j as f64 - c;
    let r = (di * di + dj * dj).sqrt();
    if r > c {
        return None;
    }
    let k0 = r.floor() as usize;
    let w = r - k0 as f64;
    let k1 = (k0 + 1).min(n - 1);
    Some((k0, k1, w))
}

/// Spin a lineout into a rotationally symmetric (2N-1)x(2N-1) image.
pub fn spin(lineout: &RadialProfile) -> Image2D {
    let n = lineout.len();
    let x = lineout.values();
    let side = 2 * n - 1;
    let mut img = Image2D::zeros(side, side);
    for i in 0..side {
        for j in 0..side {
            if let Some((k0, k1, w)) = pixel_bins(i, j, n) {
                *img.at_mut(i, j) = (1.0 - w) * x[k0] + w * x[k1];
            }
        }
    }
    img
}

/// Exact adjoint of `spin`: scatters each pixel into its two radial bins.
///
/// Satisfies `<spin(x), y> = <x, spin_adjoint(y)>` for all x, y.
pub fn spin_adjoint(image: &Image2D) -> Result<RadialProfile> {
    let n = image.profile_len()?;
    let side = image.height();
    let mut out = vec![0.0; n];
    for i in 0..side {
        for j in 0..side {
            if let Some((k0, k1, w)) = pixel_bins(i, j, n) {
                let v = image.at(i, j);
                out[k0] += (1.0 - w) * v;
                out[k1] += w * v;
            }
        }
    }
    RadialProfile::new(out)
}

/// Weight-normalized adjoint: the radial average of the image.
///
/// Bins that receive zero total weight return 0.
pub fn unspin(image: &Image2D) -> Result<RadialProfile> {
    let n = image.profile_len()?;
    let side = image.height();
    let mut num = vec![0.0; n];
    let mut den = vec![0.0; n];
    for i in 0..side {
        for j in 0..side {
            if let Some((k0, k1, w)) = pixel_bins(i, j, n) {
                let v = image.at(i, j);
                num[k0] += (1.0 - w) * v;
                den[k0] += 1.0 - w;
                num[k1] += w * v;
                den[k1] += w;
            }
        }
    }
    let out = num
        .iter()
        .zip(&den)
        .map(|(&s, &d)| if d > 0.0 { s / d } else { 0.0 })
        .collect();
    RadialProfile::new(out)
}

/// The center row of the image from the center pixel rightward (length N).
///
/// For a spun image the extracted values are exact (axis pixels sit at
/// integer radii), making this the noise-sensitive alternative to `unspin`.
pub fn center_lineout(image: &Image2D) -> Result<RadialProfile> {
    let n = image.profile_len()?;
    let c = n - 1;
    let out = (0..n).map(|k| image.at(c, c + k)).collect();
    RadialProfile::new(out)
}
