use std::path::Path;

use super::{ImagingError, Rect, Result};

/// 8-bit RGB raster, row-major, exactly three channels.
///
/// The universal pixel container for the toolkit; invariant
/// `data.len() == width * height * 3` is enforced by every constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageBuffer {
    width: u32,
    height: u32,
    data: Vec<u8>,
}

impl ImageBuffer {
    /// All-black image of the given size. Panics if either dimension is zero.
    pub fn new(width: u32, height: u32) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        Self { width, height, data: vec![0; width as usize * height as usize * 3] }
    }

    /// Uniform fill of the given color.
    pub fn filled(width: u32, height: u32, rgb: [u8; 3]) -> Self {
        let mut img = Self::new(width, height);
        for px in img.data.chunks_exact_mut(3) {
            px.copy_from_slice(&rgb);
        }
        img
    }

    /// Wraps raw interleaved RGB samples.
    pub fn from_raw(width: u32, height: u32, data: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 || data.len() != width as usize * height as usize * 3 {
            return Err(ImagingError::InvalidDimensions { width, height, len: data.len() });
        }
        Ok(Self { width, height, data })
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> [u8; 3]) -> Self {
        let mut img = Self::new(width, height);
        for y in 0..height {
            for x in 0..width {
                img.set_pixel(x, y, f(x, y));
            }
        }
        img
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn dimensions(&self) -> (u32, u32) {
        (self.width, self.height)
    }

    pub fn as_raw(&self) -> &[u8] {
        &self.data
    }

    pub fn as_raw_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    #[inline]
    fn offset(&self, x: u32, y: u32) -> usize {
        debug_assert!(x < self.width && y < self.height);
        (y as usize * self.width as usize + x as usize) * 3
    }

    #[inline]
    pub fn pixel(&self, x: u32, y: u32) -> [u8; 3] {
        let o = self.offset(x, y);
        [self.data[o], self.data[o + 1], self.data[o + 2]]
    }

    #[inline]
    pub fn set_pixel(&mut self, x: u32, y: u32, rgb: [u8; 3]) {
        let o = self.offset(x, y);
        self.data[o..o + 3].copy_from_slice(&rgb);
    }

    /// Copies the rectangular region into a new image.
    pub fn crop(&self, r: Rect) -> Result<ImageBuffer> {
        if !r.fits_within(self.width, self.height) {
            return Err(ImagingError::OutOfBounds { rect: r, width: self.width, height: self.height });
        }
        let mut out = ImageBuffer::new(r.w, r.h);
        for y in 0..r.h {
            let src = self.offset(r.x, r.y + y);
            let dst = out.offset(0, y);
            let n = r.w as usize * 3;
            out.data[dst..dst + n].copy_from_slice(&self.data[src..src + n]);
        }
        Ok(out)
    }

    /// Pastes `src` with its top-left corner at `(x, y)`, clipping at the
    /// destination bounds.
    pub fn blit(&mut self, src: &ImageBuffer, x: u32, y: u32) {
        let w = src.width.min(self.width.saturating_sub(x));
        let h = src.height.min(self.height.saturating_sub(y));
        for row in 0..h {
            let s = src.offset(0, row);
            let d = self.offset(x, y + row);
            let n = w as usize * 3;
            self.data[d..d + n].copy_from_slice(&src.data[s..s + n]);
        }
    }

    /// Reads an 8-bit PNG. Alpha, when present, is flattened over black.
    pub fn read_png(path: impl AsRef<Path>) -> Result<ImageBuffer> {
        let path = path.as_ref();
        let reader = image::ImageReader::open(path)
            .map_err(|source| ImagingError::Io { path: path.to_owned(), source })?;
        let decoded = reader
            .decode()
            .map_err(|source| ImagingError::Codec { path: path.to_owned(), source })?;
        Ok(match decoded {
            image::DynamicImage::ImageRgb8(rgb) => {
                let (w, h) = rgb.dimensions();
                ImageBuffer::from_raw(w, h, rgb.into_raw())?
            }
            other => {
                let rgba = other.to_rgba8();
                let (w, h) = rgba.dimensions();
                let mut data = Vec::with_capacity(w as usize * h as usize * 3);
                for px in rgba.pixels() {
                    let a = px.0[3] as u16;
                    for c in 0..3 {
                        data.push(((px.0[c] as u16 * a + 127) / 255) as u8);
                    }
                }
                ImageBuffer::from_raw(w, h, data)?
            }
        })
    }

    /// Writes the image as an 8-bit RGB PNG (no alpha).
    pub fn write_png(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let rgb = image::RgbImage::from_raw(self.width, self.height, self.data.clone())
            .expect("buffer length invariant");
        rgb.save_with_format(path, image::ImageFormat::Png)
            .map_err(|source| ImagingError::Codec { path: path.to_owned(), source })
    }
}
