//! Minimum enclosing circle and the circumscribing-circle normalizer.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curve::JordanDomain;
use crate::geom::{Circle, Point2, Similarity};
use crate::scalar::Scalar;

/// Smallest circle containing every point (Welzl, move-to-front form).
///
/// The input is shuffled with a fixed seed so the expected running time is
/// linear; the circle itself does not depend on the order.
pub fn min_enclosing_circle<F: Scalar>(points: &[Point2<F>]) -> Circle<F> {
    match points.len() {
        0 => return Circle::new(Point2::origin(), F::zero()),
        1 => return Circle::new(points[0], F::zero()),
        _ => {}
    }
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed));

    let eps = |c: &Circle<F>| c.radius * F::lit(1e-12) + F::min_positive_value();
    let mut c = Circle::new(pts[0], F::zero());
    for i in 1..pts.len() {
        if c.contains(pts[i], eps(&c)) {
            continue;
        }
        c = Circle::new(pts[i], F::zero());
        for j in 0..i {
            if c.contains(pts[j], eps(&c)) {
                continue;
            }
            c = circle_from_two(pts[i], pts[j]);
            for k in 0..j {
                if c.contains(pts[k], eps(&c)) {
                    continue;
                }
                c = circle_from_three(pts[i], pts[j], pts[k]).unwrap_or_else(|| widest_pair(pts[i], pts[j], pts[k]));
            }
        }
    }
    c
}

pub(crate) fn circle_from_two<F: Scalar>(a: Point2<F>, b: Point2<F>) -> Circle<F> {
    let c = a.midpoint(b);
    Circle::new(c, c.distance(a).max(c.distance(b)))
}

/// Circumcircle of a triangle; `None` when the points are collinear.
pub(crate) fn circle_from_three<F: Scalar>(a: Point2<F>, b: Point2<F>, c: Point2<F>) -> Option<Circle<F>> {
    // Work relative to `a` to limit cancellation.
    let b = b - a;
    let c = c - a;
    let d = F::two() * b.cross(c);
    if d.abs() <= F::epsilon() * b.norm_sq().max(c.norm_sq()) {
        return None;
    }
    let b2 = b.norm_sq();
    let c2 = c.norm_sq();
    let ux = (c.y * b2 - b.y * c2) / d;
    let uy = (b.x * c2 - c.x * b2) / d;
    let center = Point2::new(ux, uy);
    let r = center.norm().max(center.distance(b)).max(center.distance(c));
    Some(Circle::new(center + a, r))
}

fn widest_pair<F: Scalar>(a: Point2<F>, b: Point2<F>, c: Point2<F>) -> Circle<F> {
    [circle_from_two(a, b), circle_from_two(a, c), circle_from_two(b, c)]
        .into_iter()
        .max_by(|x, y| x.radius.partial_cmp(&y.radius).unwrap())
        .unwrap()
}

/// Minimum enclosing circle of the boundary samples.
pub fn circumscribing_circle<F: Scalar>(d: &JordanDomain<F>) -> Circle<F> {
    min_enclosing_circle(d.boundary().samples())
}

/// The similarity `x ↦ (x − x₀) / R` sending the circumscribing circle to the unit circle.
pub fn normalizer<F: Scalar>(d: &JordanDomain<F>) -> Similarity<F> {
    normalizer_of_circle(&circumscribing_circle(d))
}

pub(crate) fn normalizer_of_circle<F: Scalar>(c: &Circle<F>) -> Similarity<F> {
    let s = F::one() / c.radius;
    Similarity::new(s, F::zero(), false, -c.center * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_and_three_point_circles() {
        let c = circle_from_two(Point2::new(0.0, 0.0), Point2::new(2.0, 0.0));
        assert_eq!(c.center, Point2::new(1.0, 0.0));
        assert_eq!(c.radius, 1.0);
        let c = circle_from_three(Point2::new(1.0f64, 0.0), Point2::new(0.0, 1.0), Point2::new(-1.0, 0.0)).unwrap();
        assert!(c.center.norm() < 1e-15 && (c.radius - 1.0).abs() < 1e-15);
        assert!(circle_from_three(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0), Point2::new(2.0, 2.0)).is_none());
    }

    #[test]
    fn collinear_points_give_diameter_circle() {
        let pts: Vec<_> = (0..10).map(|i| Point2::new(i as f64, 0.0)).collect();
        let c = min_enclosing_circle(&pts);
        assert!((c.center.x - 4.5).abs() < 1e-12 && c.center.y.abs() < 1e-12);
        assert!((c.radius - 4.5).abs() < 1e-12);
    }

    #[test]
    fn normalizer_of_offset_circle() {
        let g = normalizer_of_circle(&Circle::new(Point2::new(6.0f64, 0.0), 3.0));
        assert!((g.scale - 1.0 / 3.0).abs() < 1e-15);
        assert!(g.apply(Point2::new(6.0, 0.0)).norm() < 1e-15);
        assert!((g.apply(Point2::new(9.0, 0.0)).x - 1.0).abs() < 1e-15);
    }
}
