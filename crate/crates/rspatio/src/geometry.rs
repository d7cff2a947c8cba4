//! Axis-aligned bounding boxes in image coordinates.
//!
//! Boxes use integer top-left corners and positive integer extents. The
//! corner may sit outside the frame (search windows near borders do); every
//! consumer that walks pixels first intersects with the frame rectangle.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundingBox {
    pub x: i32,
    pub y: i32,
    pub w: u32,
    pub h: u32,
}

impl BoundingBox {
    pub fn new(x: i32, y: i32, w: u32, h: u32) -> Result<Self> {
        if w == 0 || h == 0 {
            return Err(Error::DegenerateBox);
        }
        Ok(Self { x, y, w, h })
    }

    /// Box of size `w`x`h` whose continuous center is nearest `(cx, cy)`.
    pub fn from_center(cx: f64, cy: f64, w: u32, h: u32) -> Result<Self> {
        Self::new(
            (cx - w as f64 / 2.0).round() as i32,
            (cy - h as f64 / 2.0).round() as i32,
            w,
            h,
        )
    }

    /// Continuous center in frame coordinates.
    pub fn center(&self) -> (f64, f64) {
        (
            self.x as f64 + self.w as f64 / 2.0,
            self.y as f64 + self.h as f64 / 2.0,
        )
    }

    pub fn right(&self) -> i64 {
        self.x as i64 + self.w as i64
    }

    pub fn bottom(&self) -> i64 {
        self.y as i64 + self.h as i64
    }

    pub fn area(&self) -> u64 {
        self.w as u64 * self.h as u64
    }

    pub fn diagonal(&self) -> f64 {
        ((self.w as f64).powi(2) + (self.h as f64).powi(2)).sqrt()
    }

    pub fn contains_point(&self, px: i32, py: i32) -> bool {
        px >= self.x
            && py >= self.y
            && (px as i64) < self.right()
            && (py as i64) < self.bottom()
    }

    pub fn contains_box(&self, other: &BoundingBox) -> bool {
        self.x <= other.x
            && self.y <= other.y
            && self.right() >= other.right()
            && self.bottom() >= other.bottom()
    }

    pub fn intersect(&self, other: &BoundingBox) -> Option<BoundingBox> {
        let x0 = self.x.max(other.x);
        let y0 = self.y.max(other.y);
        let x1 = self.right().min(other.right());
        let y1 = self.bottom().min(other.bottom());
        if x1 > x0 as i64 && y1 > y0 as i64 {
            Some(BoundingBox {
                x: x0,
                y: y0,
                w: (x1 - x0 as i64) as u32,
                h: (y1 - y0 as i64) as u32,
            })
        } else {
            None
        }
    }

    pub fn intersection_area(&self, other: &BoundingBox) -> u64 {
        self.intersect(other).map_or(0, |b| b.area())
    }

    /// Intersection over union of two boxes.
    pub fn iou(&self, other: &BoundingBox) -> f64 {
        let inter = self.intersection_area(other);
        let union = self.area() + other.area() - inter;
        if union == 0 {
            0.0
        } else {
            inter as f64 / union as f64
        }
    }

    /// Grow both extents by `factor`, keeping the center fixed.
    pub fn inflate(&self, factor: f64) -> BoundingBox {
        let (cx, cy) = self.center();
        let w = ((self.w as f64 * factor).round() as u32).max(1);
        let h = ((self.h as f64 * factor).round() as u32).max(1);
        BoundingBox::from_center(cx, cy, w, h).expect("nonzero extents")
    }

    /// Translate (and if necessary shrink) the box so it lies inside a
    /// `frame_w` x `frame_h` frame.
    pub fn clamp_into(&self, frame_w: u32, frame_h: u32) -> BoundingBox {
        let w = self.w.min(frame_w).max(1);
        let h = self.h.min(frame_h).max(1);
        let x = self.x.clamp(0, (frame_w - w) as i32);
        let y = self.y.clamp(0, (frame_h - h) as i32);
        BoundingBox { x, y, w, h }
    }

    /// Crop to the frame rectangle without moving the origin.
    pub fn clip_to_frame(&self, frame_w: u32, frame_h: u32) -> Option<BoundingBox> {
        self.intersect(&BoundingBox {
            x: 0,
            y: 0,
            w: frame_w,
            h: frame_h,
        })
    }

    pub fn is_inside_frame(&self, frame_w: u32, frame_h: u32) -> bool {
        self.x >= 0
            && self.y >= 0
            && self.right() <= frame_w as i64
            && self.bottom() <= frame_h as i64
    }
}

impl std::fmt::Display for BoundingBox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{},{}", self.x, self.y, self.w, self.h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_extent_rejected() {
        assert!(matches!(BoundingBox::new(0, 0, 0, 5), Err(Error::DegenerateBox)));
        assert!(matches!(BoundingBox::new(0, 0, 5, 0), Err(Error::DegenerateBox)));
    }

    #[test]
    fn center_uses_continuous_offsets() {
        let b = BoundingBox::new(0, 0, 10, 10).unwrap();
        assert_eq!(b.center(), (5.0, 5.0));
        let b = BoundingBox::new(3, 4, 5, 7).unwrap();
        assert_eq!(b.center(), (5.5, 7.5));
    }

    #[test]
    fn intersect_disjoint_is_none() {
        let a = BoundingBox::new(0, 0, 10, 10).unwrap();
        let b = BoundingBox::new(10, 0, 10, 10).unwrap();
        assert!(a.intersect(&b).is_none());
    }

    #[test]
    fn iou_half_overlap() {
        let a = BoundingBox::new(0, 0, 10, 10).unwrap();
        let b = BoundingBox::new(5, 0, 10, 10).unwrap();
        let iou = a.iou(&b);
        assert!((iou - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn clamp_into_keeps_extent_when_possible() {
        let b = BoundingBox::new(-5, 195, 30, 30).unwrap();
        let c = b.clamp_into(200, 200);
        assert_eq!((c.x, c.y, c.w, c.h), (0, 170, 30, 30));
    }

    #[test]
    fn inflate_preserves_center() {
        let b = BoundingBox::new(10, 10, 30, 20).unwrap();
        let big = b.inflate(1.5);
        assert_eq!(big.center(), b.center());
        assert_eq!((big.w, big.h), (45, 30));
    }

    #[test]
    fn from_center_round_trips() {
        let b = BoundingBox::from_center(25.0, 25.0, 30, 30).unwrap();
        assert_eq!((b.x, b.y), (10, 10));
        assert_eq!(b.center(), (25.0, 25.0));
    }
}
