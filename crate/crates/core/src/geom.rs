//! Planar points, similarities of the plane and circles.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A point (or vector) of the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2<F> {
    pub x: F,
    pub y: F,
}

impl<F: Scalar> Point2<F> {
    #[inline]
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(F::zero(), F::zero())
    }

    #[inline]
    pub fn from_polar(r: F, theta: F) -> Self {
        Self::new(r * theta.cos(), r * theta.sin())
    }

    #[inline]
    pub fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product; positive when `o` is counterclockwise of `self`.
    #[inline]
    pub fn cross(self, o: Self) -> F {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm_sq(self) -> F {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> F {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, o: Self) -> F {
        (self - o).norm()
    }

    #[inline]
    pub fn distance_sq(self, o: Self) -> F {
        (self - o).norm_sq()
    }

    #[inline]
    pub fn midpoint(self, o: Self) -> Self {
        (self + o) * F::half()
    }

    /// Counterclockwise rotation by a quarter turn.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn lerp(self, o: Self, t: F) -> Self {
        self + (o - self) * t
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n > F::zero() && n.is_finite()).then(|| self / n)
    }

    #[inline]
    pub fn to_complex(self) -> Complex<F> {
        Complex::new(self.x, self.y)
    }

    #[inline]
    pub fn from_complex(z: Complex<F>) -> Self {
        Self::new(z.re, z.im)
    }

    pub fn cast<G: Scalar>(self) -> Point2<G> {
        Point2::new(G::lit(self.x.to_f64_lossy()), G::lit(self.y.to_f64_lossy()))
    }
}

impl<F: Scalar> Add for Point2<F> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<F: Scalar> AddAssign for Point2<F> {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl<F: Scalar> Sub for Point2<F> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<F: Scalar> SubAssign for Point2<F> {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        self.x -= o.x;
        self.y -= o.y;
    }
}

impl<F: Scalar> Mul<F> for Point2<F> {
    type Output = Self;
    #[inline]
    fn mul(self, s: F) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl<F: Scalar> Div<F> for Point2<F> {
    type Output = Self;
    #[inline]
    fn div(self, s: F) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

impl<F: Scalar> Neg for Point2<F> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<F: Scalar> From<[F; 2]> for Point2<F> {
    fn from(a: [F; 2]) -> Self {
        Self::new(a[0], a[1])
    }
}

/// A similarity of the plane, `g(x) = scale · ρ(x) + translation`.
///
/// The orthogonal part `ρ` is the rotation by `angle`, preceded by the
/// reflection `(x, y) ↦ (x, −y)` when `reflect` is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Similarity<F> {
    pub scale: F,
    pub angle: F,
    pub reflect: bool,
    pub translation: Point2<F>,
}

impl<F: Scalar> Default for Similarity<F> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<F: Scalar> Similarity<F> {
    /// Panics if `scale` is not a positive finite number.
    pub fn new(scale: F, angle: F, reflect: bool, translation: Point2<F>) -> Self {
        assert!(
            scale > F::zero() && scale.is_finite(),
            "similarity scale must be positive and finite"
        );
        Self {
            scale,
            angle,
            reflect,
            translation,
        }
    }

    pub fn identity() -> Self {
        Self::new(F::one(), F::zero(), false, Point2::origin())
    }

    pub fn translation(b: Point2<F>) -> Self {
        Self::new(F::one(), F::zero(), false, b)
    }

    pub fn dilation(s: F) -> Self {
        Self::new(s, F::zero(), false, Point2::origin())
    }

    pub fn rotation(angle: F) -> Self {
        Self::new(F::one(), angle, false, Point2::origin())
    }

    /// Reflection across the line through the origin at angle `axis_angle`.
    pub fn reflection(axis_angle: F) -> Self {
        Self::new(F::one(), F::two() * axis_angle, true, Point2::origin())
    }

    /// Whether the orthogonal part preserves orientation.
    pub fn preserves_orientation(&self) -> bool {
        !self.reflect
    }

    /// Applies only the linear part `scale · ρ`.
    #[inline]
    pub fn apply_linear(&self, v: Point2<F>) -> Point2<F> {
        let v = if self.reflect { Point2::new(v.x, -v.y) } else { v };
        let (s, c) = self.angle.sin_cos();
        Point2::new(c * v.x - s * v.y, s * v.x + c * v.y) * self.scale
    }

    #[inline]
    pub fn apply(&self, p: Point2<F>) -> Point2<F> {
        self.apply_linear(p) + self.translation
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let angle = if self.reflect {
            self.angle - other.angle
        } else {
            self.angle + other.angle
        };
        Self {
            scale: self.scale * other.scale,
            angle,
            reflect: self.reflect ^ other.reflect,
            translation: self.apply(other.translation),
        }
    }

    pub fn inverse(&self) -> Self {
        let angle = if self.reflect { self.angle } else { -self.angle };
        let lin = Self {
            scale: F::one() / self.scale,
            angle,
            reflect: self.reflect,
            translation: Point2::origin(),
        };
        Self {
            translation: -lin.apply_linear(self.translation),
            ..lin
        }
    }

    pub fn apply_circle(&self, c: &Circle<F>) -> Circle<F> {
        Circle::new(self.apply(c.center), c.radius * self.scale)
    }
}

/// A circle in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle<F> {
    pub center: Point2<F>,
    pub radius: F,
}

impl<F: Scalar> Circle<F> {
    pub fn new(center: Point2<F>, radius: F) -> Self {
        debug_assert!(radius >= F::zero());
        Self { center, radius }
    }

    pub fn contains(&self, p: Point2<F>, eps: F) -> bool {
        self.center.distance(p) <= self.radius + eps
    }

    pub fn point_at(&self, theta: F) -> Point2<F> {
        self.center + Point2::from_polar(self.radius, theta)
    }

    /// `n` points, counterclockwise, the first at angle zero.
    pub fn sample(&self, n: usize) -> Vec<Point2<F>> {
        (0..n)
            .map(|i| self.point_at(F::tau() * F::of_usize(i) / F::of_usize(n)))
            .collect()
    }

    pub fn area(&self) -> F {
        F::PI() * self.radius * self.radius
    }
}
