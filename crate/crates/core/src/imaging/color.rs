/// Hexcone HSV colour: hue in degrees `[0, 360)` (circular), saturation and
/// value as fractions in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HsvPixel {
    pub h: f64,
    pub s: f64,
    pub v: f64,
}

/// Standard hexcone RGB→HSV conversion. Total: gray pixels get hue 0.
pub fn rgb_to_hsv(rgb: [u8; 3]) -> HsvPixel {
    let r = rgb[0] as f64 / 255.0;
    let g = rgb[1] as f64 / 255.0;
    let b = rgb[2] as f64 / 255.0;
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let delta = max - min;

    let h = if delta == 0.0 {
        0.0
    } else if max == r {
        60.0 * ((g - b) / delta).rem_euclid(6.0)
    } else if max == g {
        60.0 * ((b - r) / delta + 2.0)
    } else {
        60.0 * ((r - g) / delta + 4.0)
    };
    let s = if max == 0.0 { 0.0 } else { delta / max };
    HsvPixel { h: h.rem_euclid(360.0), s, v: max }
}

/// Inverse hexcone conversion, quantised to 8 bits at the boundary.
pub fn hsv_to_rgb(p: HsvPixel) -> [u8; 3] {
    let h = p.h.rem_euclid(360.0) / 60.0;
    let c = p.v * p.s;
    let x = c * (1.0 - (h.rem_euclid(2.0) - 1.0).abs());
    let (r1, g1, b1) = match h as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = p.v - c;
    let q = |f: f64| ((f + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    [q(r1), q(g1), q(b1)]
}

/// Circular hue distance in degrees, in `[0, 180]`.
pub fn hue_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(360.0);
    d.min(360.0 - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn black_is_origin() {
        let hsv = rgb_to_hsv([0, 0, 0]);
        assert_eq!((hsv.h, hsv.s, hsv.v), (0.0, 0.0, 0.0));
        assert_eq!(hsv_to_rgb(HsvPixel { h: 0.0, s: 0.0, v: 0.0 }), [0, 0, 0]);
    }

    #[test]
    fn pure_red() {
        let hsv = rgb_to_hsv([255, 0, 0]);
        assert_eq!((hsv.h, hsv.s, hsv.v), (0.0, 1.0, 1.0));
    }

    #[test]
    fn pure_green_from_hsv() {
        assert_eq!(hsv_to_rgb(HsvPixel { h: 120.0, s: 1.0, v: 1.0 }), [0, 255, 0]);
    }

    #[test]
    fn mid_gray_value() {
        let hsv = rgb_to_hsv([128, 128, 128]);
        assert_eq!(hsv.h, 0.0);
        assert_eq!(hsv.s, 0.0);
        assert!((hsv.v - 128.0 / 255.0).abs() < 1e-12);
    }

    #[test]
    fn hue_distance_wraps() {
        assert_eq!(hue_distance(350.0, 10.0), 20.0);
        assert_eq!(hue_distance(10.0, 350.0), 20.0);
        assert_eq!(hue_distance(180.0, 0.0), 180.0);
    }

    proptest! {
        // Round trip differs by at most one 8-bit step per channel.
        #[test]
        fn round_trip_within_one(r in 0u8.., g in 0u8.., b in 0u8..) {
            let back = hsv_to_rgb(rgb_to_hsv([r, g, b]));
            for (orig, rt) in [r, g, b].iter().zip(back.iter()) {
                prop_assert!((*orig as i16 - *rt as i16).abs() <= 1,
                    "({r},{g},{b}) -> {back:?}");
            }
        }
    }
}
