use serde::{Deserialize, Serialize};

use super::{ImageBuffer, ImagingError, Result};

/// Axis-aligned pixel rectangle, top-left anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x: u32,
    pub y: u32,
    pub w: u32,
    pub h: u32,
}

impl Rect {
    pub fn area(&self) -> u64 {
        self.w as u64 * self.h as u64
    }

    pub fn fits_within(&self, width: u32, height: u32) -> bool {
        self.w > 0
            && self.h > 0
            && (self.x as u64 + self.w as u64) <= width as u64
            && (self.y as u64 + self.h as u64) <= height as u64
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        x >= self.x && x < self.x + self.w && y >= self.y && y < self.y + self.h
    }
}

const DET_TOLERANCE: f64 = 1e-9;

/// 3x3 projective transform, normalised so `m[2][2] == 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Homography {
    m: [[f64; 3]; 3],
}

impl Homography {
    /// Wraps a raw matrix, normalising the bottom-right entry to 1.
    pub fn new(m: [[f64; 3]; 3]) -> Result<Self> {
        let w = m[2][2];
        if w.abs() < 1e-12 {
            return Err(ImagingError::SingularHomography { det: 0.0 });
        }
        let mut n = m;
        for row in &mut n {
            for v in row {
                *v /= w;
            }
        }
        Ok(Self { m: n })
    }

    pub fn identity() -> Self {
        Self { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] }
    }

    pub fn translation(dx: f64, dy: f64) -> Self {
        Self { m: [[1.0, 0.0, dx], [0.0, 1.0, dy], [0.0, 0.0, 1.0]] }
    }

    pub fn scale(sx: f64, sy: f64) -> Self {
        Self { m: [[sx, 0.0, 0.0], [0.0, sy, 0.0], [0.0, 0.0, 1.0]] }
    }

    pub fn matrix(&self) -> &[[f64; 3]; 3] {
        &self.m
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse transform via the adjugate.
    pub fn invert(&self) -> Result<Homography> {
        let det = self.determinant();
        if det.abs() < DET_TOLERANCE {
            return Err(ImagingError::SingularHomography { det });
        }
        let m = &self.m;
        let adj = [
            [
                m[1][1] * m[2][2] - m[1][2] * m[2][1],
                m[0][2] * m[2][1] - m[0][1] * m[2][2],
                m[0][1] * m[1][2] - m[0][2] * m[1][1],
            ],
            [
                m[1][2] * m[2][0] - m[1][0] * m[2][2],
                m[0][0] * m[2][2] - m[0][2] * m[2][0],
                m[0][2] * m[1][0] - m[0][0] * m[1][2],
            ],
            [
                m[1][0] * m[2][1] - m[1][1] * m[2][0],
                m[0][1] * m[2][0] - m[0][0] * m[2][1],
                m[0][0] * m[1][1] - m[0][1] * m[1][0],
            ],
        ];
        let mut inv = [[0.0; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                inv[r][c] = adj[r][c] / det;
            }
        }
        Homography::new(inv)
    }

    /// Maps a point; `None` when it lands on the line at infinity.
    pub fn apply(&self, x: f64, y: f64) -> Option<(f64, f64)> {
        let m = &self.m;
        let w = m[2][0] * x + m[2][1] * y + m[2][2];
        if w.abs() < 1e-12 {
            return None;
        }
        Some((
            (m[0][0] * x + m[0][1] * y + m[0][2]) / w,
            (m[1][0] * x + m[1][1] * y + m[1][2]) / w,
        ))
    }

    /// Composition: `self` applied after `other`.
    pub fn compose(&self, other: &Homography) -> Result<Homography> {
        let mut out = [[0.0; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                out[r][c] = (0..3).map(|k| self.m[r][k] * other.m[k][c]).sum();
            }
        }
        Homography::new(out)
    }

    /// Direct linear transform mapping four source points onto four
    /// destination points.
    pub fn quad_to_quad(src: [(f64, f64); 4], dst: [(f64, f64); 4]) -> Result<Homography> {
        let mut a = nalgebra::DMatrix::<f64>::zeros(8, 8);
        let mut b = nalgebra::DVector::<f64>::zeros(8);
        for i in 0..4 {
            let (x, y) = src[i];
            let (u, v) = dst[i];
            a.set_row(
                2 * i,
                &nalgebra::RowDVector::from_row_slice(&[x, y, 1.0, 0.0, 0.0, 0.0, -x * u, -y * u]),
            );
            a.set_row(
                2 * i + 1,
                &nalgebra::RowDVector::from_row_slice(&[0.0, 0.0, 0.0, x, y, 1.0, -x * v, -y * v]),
            );
            b[2 * i] = u;
            b[2 * i + 1] = v;
        }
        let sol = a
            .lu()
            .solve(&b)
            .ok_or(ImagingError::SingularHomography { det: 0.0 })?;
        Homography::new([
            [sol[0], sol[1], sol[2]],
            [sol[3], sol[4], sol[5]],
            [sol[6], sol[7], 1.0],
        ])
    }
}

/// Sampling method for [`warp_projective_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolation {
    #[default]
    Bilinear,
    Nearest,
}

/// Projective warp with bilinear sampling (see [`warp_projective_with`]).
pub fn warp_projective(
    img: &ImageBuffer,
    h: &Homography,
    out_size: (u32, u32),
) -> Result<ImageBuffer> {
    warp_projective_with(img, h, out_size, Interpolation::Bilinear)
}

/// Inverse-mapped projective warp.
///
/// `h` maps source coordinates to destination coordinates; each output pixel
/// samples the source at `h⁻¹ (x, y)`. Source locations outside the image
/// fill with exact black.
pub fn warp_projective_with(
    img: &ImageBuffer,
    h: &Homography,
    out_size: (u32, u32),
    interp: Interpolation,
) -> Result<ImageBuffer> {
    let inv = h.invert()?;
    let (ow, oh) = out_size;
    let (sw, sh) = (img.width() as f64 - 1.0, img.height() as f64 - 1.0);
    let mut out = ImageBuffer::new(ow, oh);
    for y in 0..oh {
        for x in 0..ow {
            let Some((sx, sy)) = inv.apply(x as f64, y as f64) else { continue };
            if sx < 0.0 || sx > sw || sy < 0.0 || sy > sh {
                continue; // stays black
            }
            let rgb = match interp {
                Interpolation::Nearest => img.pixel(sx.round() as u32, sy.round() as u32),
                Interpolation::Bilinear => sample_bilinear(img, sx, sy),
            };
            out.set_pixel(x, y, rgb);
        }
    }
    Ok(out)
}

#[inline]
pub(crate) fn sample_bilinear(img: &ImageBuffer, sx: f64, sy: f64) -> [u8; 3] {
    let x0 = sx.floor() as u32;
    let y0 = sy.floor() as u32;
    let x1 = (x0 + 1).min(img.width() - 1);
    let y1 = (y0 + 1).min(img.height() - 1);
    let fx = sx - x0 as f64;
    let fy = sy - y0 as f64;
    let p00 = img.pixel(x0, y0);
    let p10 = img.pixel(x1, y0);
    let p01 = img.pixel(x0, y1);
    let p11 = img.pixel(x1, y1);
    let mut rgb = [0u8; 3];
    for c in 0..3 {
        let top = p00[c] as f64 * (1.0 - fx) + p10[c] as f64 * fx;
        let bot = p01[c] as f64 * (1.0 - fx) + p11[c] as f64 * fx;
        rgb[c] = (top * (1.0 - fy) + bot * fy).round().clamp(0.0, 255.0) as u8;
    }
    rgb
}

/// Bilinear resampling to a new size. Identity when the size is unchanged.
pub fn resize_bilinear(img: &ImageBuffer, width: u32, height: u32) -> ImageBuffer {
    assert!(width > 0 && height > 0);
    if (width, height) == img.dimensions() {
        return img.clone();
    }
    let sx_scale = img.width() as f64 / width as f64;
    let sy_scale = img.height() as f64 / height as f64;
    let max_x = img.width() as f64 - 1.0;
    let max_y = img.height() as f64 - 1.0;
    ImageBuffer::from_fn(width, height, |x, y| {
        let sx = ((x as f64 + 0.5) * sx_scale - 0.5).clamp(0.0, max_x);
        let sy = ((y as f64 + 0.5) * sy_scale - 0.5).clamp(0.0, max_y);
        sample_bilinear(img, sx, sy)
    })
}
