//! Raster types and the geometric/morphological primitives the rest of the
//! toolkit builds on.
//!
//! Everything here is a pure function of its inputs: buffers own their pixels,
//! there is no interior mutability, and all types are `Send + Sync`.

mod buffer;
mod color;
mod geometry;
mod mask;

pub use buffer::ImageBuffer;
pub use color::{hsv_to_rgb, hue_distance, rgb_to_hsv, HsvPixel};
pub use geometry::{
    resize_bilinear, warp_projective, warp_projective_with, Homography, Interpolation, Rect,
};
pub use mask::{largest_inscribed_rect, morphological_close, BinaryMask};

/// Errors raised by the imaging primitives.
#[derive(Debug, thiserror::Error)]
pub enum ImagingError {
    #[error("image dimensions must be positive and match the pixel data (got {width}x{height}, {len} samples)")]
    InvalidDimensions { width: u32, height: u32, len: usize },

    #[error("homography is singular within tolerance (|det| = {det:.3e})")]
    SingularHomography { det: f64 },

    #[error("mask contains no true pixel")]
    EmptyMask,

    #[error("rectangle {rect:?} exceeds the {width}x{height} image bounds")]
    OutOfBounds { rect: Rect, width: u32, height: u32 },

    #[error("image is {width}x{height} but at least {min_width}x{min_height} is required")]
    ImageTooSmall { width: u32, height: u32, min_width: u32, min_height: u32 },

    #[error("i/o error for {path}: {source}")]
    Io { path: std::path::PathBuf, source: std::io::Error },

    #[error("failed to decode or encode {path}: {source}")]
    Codec { path: std::path::PathBuf, source: image::ImageError },
}

pub type Result<T> = std::result::Result<T, ImagingError>;
