use super::{ImagingError, Rect, Result};

/// One boolean per pixel, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMask {
    width: u32,
    height: u32,
    bits: Vec<bool>,
}

impl BinaryMask {
    pub fn new(width: u32, height: u32, value: bool) -> Self {
        assert!(width > 0 && height > 0, "mask dimensions must be positive");
        Self { width, height, bits: vec![value; width as usize * height as usize] }
    }

    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> bool) -> Self {
        let mut m = Self::new(width, height, false);
        for y in 0..height {
            for x in 0..width {
                m.set(x, y, f(x, y));
            }
        }
        m
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> bool {
        debug_assert!(x < self.width && y < self.height);
        self.bits[y as usize * self.width as usize + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: bool) {
        debug_assert!(x < self.width && y < self.height);
        self.bits[y as usize * self.width as usize + x as usize] = value;
    }

    pub fn count_true(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    /// True iff every true pixel of `self` is true in `other`.
    pub fn subset_of(&self, other: &BinaryMask) -> bool {
        self.width == other.width
            && self.height == other.height
            && self.bits.iter().zip(&other.bits).all(|(a, b)| !*a || *b)
    }
}

/// Dilation with a rectangular structuring element. Out-of-bounds neighbours
/// are treated as false.
fn dilate(mask: &BinaryMask, kw: u32, kh: u32) -> BinaryMask {
    let (rx, ry) = (kw as i64 / 2, kh as i64 / 2);
    let (w, h) = (mask.width as i64, mask.height as i64);
    BinaryMask::from_fn(mask.width, mask.height, |x, y| {
        let (x, y) = (x as i64, y as i64);
        for ny in (y - ry).max(0)..=(y + ry).min(h - 1) {
            for nx in (x - rx).max(0)..=(x + rx).min(w - 1) {
                if mask.get(nx as u32, ny as u32) {
                    return true;
                }
            }
        }
        false
    })
}

/// Erosion with a rectangular structuring element. Out-of-bounds neighbours
/// are treated as true, making erosion adjoint to [`dilate`] so the closing
/// below is extensive and idempotent.
fn erode(mask: &BinaryMask, kw: u32, kh: u32) -> BinaryMask {
    let (rx, ry) = (kw as i64 / 2, kh as i64 / 2);
    let (w, h) = (mask.width as i64, mask.height as i64);
    BinaryMask::from_fn(mask.width, mask.height, |x, y| {
        let (x, y) = (x as i64, y as i64);
        for ny in (y - ry).max(0)..=(y + ry).min(h - 1) {
            for nx in (x - rx).max(0)..=(x + rx).min(w - 1) {
                if !mask.get(nx as u32, ny as u32) {
                    return false;
                }
            }
        }
        true
    })
}

/// Morphological closing (dilation then erosion) with a rectangular
/// structuring element. Kernel dimensions must be odd and at least 1.
pub fn morphological_close(mask: &BinaryMask, kernel: (u32, u32)) -> BinaryMask {
    let (kw, kh) = kernel;
    assert!(kw >= 1 && kh >= 1 && kw % 2 == 1 && kh % 2 == 1, "kernel must be odd and >= 1");
    erode(&dilate(mask, kw, kh), kw, kh)
}

/// Maximum-area axis-aligned all-true rectangle.
///
/// Per-row histogram of column heights plus a monotonic stack, O(W·H). Ties
/// on area break towards the smallest `(y, x, w)`.
pub fn largest_inscribed_rect(mask: &BinaryMask) -> Result<Rect> {
    let (w, h) = (mask.width as usize, mask.height as usize);
    let mut hist = vec![0u32; w];
    let mut best: Option<Rect> = None;

    let mut consider = |cand: Rect| {
        let better = match &best {
            None => true,
            Some(b) => {
                let ka = (cand.area(), std::cmp::Reverse((cand.y, cand.x, cand.w)));
                let kb = (b.area(), std::cmp::Reverse((b.y, b.x, b.w)));
                ka > kb
            }
        };
        if better {
            best = Some(cand);
        }
    };

    let mut stack: Vec<(usize, u32)> = Vec::with_capacity(w + 1);
    for row in 0..h {
        for col in 0..w {
            hist[col] = if mask.get(col as u32, row as u32) { hist[col] + 1 } else { 0 };
        }
        stack.clear();
        for col in 0..=w {
            let cur = if col < w { hist[col] } else { 0 };
            let mut start = col;
            while let Some(&(s, height)) = stack.last() {
                if height <= cur {
                    break;
                }
                stack.pop();
                consider(Rect {
                    x: s as u32,
                    y: (row + 1) as u32 - height,
                    w: (col - s) as u32,
                    h: height,
                });
                start = s;
            }
            if cur > 0 && stack.last().map_or(true, |&(_, height)| height < cur) {
                stack.push((start, cur));
            }
        }
    }
    best.ok_or(ImagingError::EmptyMask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    /// Independent oracle: enumerate every (x, y, w) with incremental height
    /// growth over per-row run lengths, same tie-break ordering.
    fn brute_force_rect(mask: &BinaryMask) -> Option<Rect> {
        let (w, h) = (mask.width() as usize, mask.height() as usize);
        let mut runs = vec![0u32; w * h];
        for y in 0..h {
            for x in (0..w).rev() {
                runs[y * w + x] = if mask.get(x as u32, y as u32) {
                    1 + if x + 1 < w { runs[y * w + x + 1] } else { 0 }
                } else {
                    0
                };
            }
        }
        let mut best: Option<Rect> = None;
        for y in 0..h {
            for x in 0..w {
                let max_w = runs[y * w + x];
                for rect_w in 1..=max_w {
                    let mut rect_h = 0u32;
                    while y + (rect_h as usize) < h && runs[(y + rect_h as usize) * w + x] >= rect_w
                    {
                        rect_h += 1;
                    }
                    let cand =
                        Rect { x: x as u32, y: y as u32, w: rect_w, h: rect_h };
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            (cand.area(), std::cmp::Reverse((cand.y, cand.x, cand.w)))
                                > (b.area(), std::cmp::Reverse((b.y, b.x, b.w)))
                        }
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
        }
        best
    }

    fn rect_inside_mask(mask: &BinaryMask, r: Rect) -> bool {
        (r.y..r.y + r.h).all(|y| (r.x..r.x + r.w).all(|x| mask.get(x, y)))
    }

    #[test]
    fn close_all_true_stays_all_true() {
        let m = BinaryMask::new(16, 16, true);
        assert_eq!(morphological_close(&m, (3, 3)), m);
    }

    #[test]
    fn close_fills_single_gap() {
        let mut m = BinaryMask::new(9, 9, true);
        m.set(4, 4, false);
        let closed = morphological_close(&m, (3, 3));
        assert_eq!(closed.count_true(), 81);
    }

    #[test]
    fn close_is_idempotent_and_extensive() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let m = BinaryMask::from_fn(64, 64, |_, _| rng.random_bool(0.5));
            let once = morphological_close(&m, (5, 5));
            let twice = morphological_close(&once, (5, 5));
            assert_eq!(once, twice, "closing must be idempotent");
            assert!(m.subset_of(&once), "closing must be extensive");
        }
    }

    #[test]
    fn inscribed_rect_all_true() {
        let m = BinaryMask::new(10, 10, true);
        assert_eq!(largest_inscribed_rect(&m).unwrap(), Rect { x: 0, y: 0, w: 10, h: 10 });
    }

    #[test]
    fn inscribed_rect_block() {
        let m = BinaryMask::from_fn(12, 12, |x, y| (2..7).contains(&x) && (4..7).contains(&y));
        assert_eq!(largest_inscribed_rect(&m).unwrap(), Rect { x: 2, y: 4, w: 5, h: 3 });
    }

    #[test]
    fn inscribed_rect_empty_mask_errors() {
        let m = BinaryMask::new(5, 5, false);
        assert!(matches!(largest_inscribed_rect(&m), Err(ImagingError::EmptyMask)));
    }

    #[test]
    fn inscribed_rect_matches_brute_force_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for round in 0..200 {
            let w = rng.random_range(1..=24u32);
            let h = rng.random_range(1..=24u32);
            let density = rng.random_range(0.2..0.95);
            let m = BinaryMask::from_fn(w, h, |_, _| rng.random_bool(density));
            match brute_force_rect(&m) {
                None => assert!(largest_inscribed_rect(&m).is_err()),
                Some(expected) => {
                    let got = largest_inscribed_rect(&m).unwrap();
                    assert_eq!(got, expected, "round {round}, mask {w}x{h}");
                    assert!(rect_inside_mask(&m, got));
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn inscribed_rect_matches_brute_force(
            w in 1u32..12, h in 1u32..12, seed in 0u64..1000
        ) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = BinaryMask::from_fn(w, h, |_, _| rng.random_bool(0.6));
            match brute_force_rect(&m) {
                None => prop_assert!(largest_inscribed_rect(&m).is_err()),
                Some(expected) => {
                    let got = largest_inscribed_rect(&m).unwrap();
                    prop_assert_eq!(got, expected);
                    prop_assert!(rect_inside_mask(&m, got));
                }
            }
        }
    }
}
