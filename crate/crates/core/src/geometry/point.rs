use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{quad_sign, QuadVal, Rational};

/// A point with coordinates in Q(sqrt D).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: QuadVal,
    pub y: QuadVal,
}

impl Point2 {
    pub fn new(x: QuadVal, y: QuadVal) -> Result<Self> {
        if !x.is_rational() && !y.is_rational() && x.disc() != y.disc() {
            return Err(Error::MixedDiscriminant(x.disc(), y.disc()));
        }
        Ok(Point2 { x, y })
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        Point2 {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point2::rational(x.into(), y.into())
    }

    pub fn origin() -> Self {
        Point2::ints(0, 0)
    }

    /// Discriminant shared by the coordinates, 1 when both are rational.
    pub fn disc(&self) -> u64 {
        self.x.disc().max(self.y.disc())
    }

    pub fn fits_disc(&self, d: u64) -> bool {
        self.x.fits_disc(d) && self.y.fits_disc(d)
    }

    pub fn add(&self, v: &Vec2) -> Point2 {
        Point2 {
            x: &self.x + &v.x,
            y: &self.y + &v.y,
        }
    }

    pub fn sub(&self, other: &Point2) -> Vec2 {
        Vec2 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point2, t: &Rational) -> Point2 {
        self.add(&other.sub(self).scale(t))
    }

    pub fn translate(&self, dx: &QuadVal, dy: &QuadVal) -> Point2 {
        Point2 {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }

    /// `(x, y) -> (-x, y)`
    pub fn reflect_x(&self) -> Point2 {
        Point2 {
            x: -&self.x,
            y: self.y.clone(),
        }
    }

    /// Rotation about `center` by the angle with the given cosine and sine.
    pub fn rotate(&self, center: &Point2, cos: &QuadVal, sin: &QuadVal) -> Point2 {
        let d = self.sub(center);
        center.add(&Vec2 {
            x: cos * &d.x - sin * &d.y,
            y: sin * &d.x + cos * &d.y,
        })
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vec2 {
    pub x: QuadVal,
    pub y: QuadVal,
}

impl Vec2 {
    pub fn scale(&self, t: &Rational) -> Vec2 {
        Vec2 {
            x: self.x.scale(t),
            y: self.y.scale(t),
        }
    }

    pub fn cross(&self, o: &Vec2) -> QuadVal {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Vec2) -> QuadVal {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm_sq(&self) -> QuadVal {
        self.dot(self)
    }

    /// Rotation by +90 degrees.
    pub fn perp(&self) -> Vec2 {
        Vec2 {
            x: -&self.y,
            y: self.x.clone(),
        }
    }
}

/// Sign of the turn `a -> b -> c`: +1 counterclockwise, -1 clockwise, 0 collinear.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> i32 {
    quad_sign(&b.sub(a).cross(&c.sub(a)))
}
