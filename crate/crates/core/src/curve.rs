//! Jordan curves with periodic C² interpolation, and the domains they bound.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point2, Similarity};
use crate::scalar::{gauss_legendre_8, Scalar};
use crate::spline::PeriodicSpline;

/// Knobs for [`JordanCurve::build`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveConfig<F> {
    pub min_samples: usize,
    /// Sub-points per spline segment in the refined simplicity pass.
    pub refine: usize,
    /// Allowed deviation of the total curvature from 2π.
    pub curvature_tol: F,
}

impl<F: Scalar> Default for CurveConfig<F> {
    fn default() -> Self {
        Self {
            min_samples: 16,
            refine: 4,
            curvature_tol: F::lit(1e-3),
        }
    }
}

/// A simple closed counterclockwise curve, interpolated by a periodic cubic
/// spline whose parameter is proportional to arc length of a first fit.
#[derive(Debug, Clone)]
pub struct JordanCurve<F> {
    samples: Vec<Point2<F>>,
    spline: PeriodicSpline<F>,
}

impl<F: Scalar> JordanCurve<F> {
    /// Validates `samples` and interpolates them.
    ///
    /// Clockwise input is reversed (keeping the first sample first). A
    /// trailing sample equal to the first one is dropped.
    pub fn build(samples: &[Point2<F>], config: &CurveConfig<F>) -> Result<Self> {
        let mut pts = samples.to_vec();
        if let Some(i) = pts.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index: i });
        }
        if pts.len() > 1 && pts[0] == pts[pts.len() - 1] {
            pts.pop();
        }
        if pts.len() < config.min_samples.max(3) {
            return Err(Error::TooFewSamples {
                min: config.min_samples.max(3),
                got: pts.len(),
            });
        }
        let n = pts.len();
        for i in 0..n {
            if pts[i] == pts[(i + 1) % n] {
                return Err(Error::DuplicateSample {
                    index: i,
                    next: (i + 1) % n,
                });
            }
        }
        if let Some((a, b)) = first_crossing(&pts) {
            return Err(Error::SelfIntersecting { first: a, second: b });
        }
        if polygon_signed_area(&pts) < F::zero() {
            pts[1..].reverse();
        }

        // First pass on chord length, second pass on the arc length of the first.
        let first = PeriodicSpline::fit_chord_length(&pts);
        let knots = arc_length_knots(&first);
        let spline = PeriodicSpline::fit(&pts, &knots);
        let curve = Self { samples: pts, spline };

        let refined = curve.polyline(config.refine.max(1));
        if let Some((a, b)) = first_crossing(&refined) {
            let k = config.refine.max(1);
            return Err(Error::SelfIntersecting {
                first: a / k,
                second: b / k,
            });
        }
        let total = curve.total_curvature();
        if (total - F::tau()).abs() > config.curvature_tol {
            return Err(Error::BadRotationIndex {
                total: total.to_f64_lossy(),
            });
        }
        Ok(curve)
    }

    pub(crate) fn from_parts(samples: Vec<Point2<F>>, spline: PeriodicSpline<F>) -> Self {
        Self { samples, spline }
    }

    pub fn samples(&self) -> &[Point2<F>] {
        &self.samples
    }

    pub fn spline(&self) -> &PeriodicSpline<F> {
        &self.spline
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn point(&self, t: F) -> Point2<F> {
        self.spline.eval(t)
    }

    pub fn derivative(&self, t: F) -> Point2<F> {
        self.spline.d1(t)
    }

    pub fn unit_tangent(&self, t: F) -> Point2<F> {
        let d = self.spline.d1(t);
        d / d.norm()
    }

    /// Unit normal pointing into the bounded component.
    pub fn inward_normal(&self, t: F) -> Point2<F> {
        self.unit_tangent(t).perp()
    }

    /// Signed curvature, positive where the curve bends toward the inward normal.
    pub fn curvature(&self, t: F) -> F {
        let (s, u) = self.spline.locate(t);
        self.curvature_local(s, u)
    }

    pub(crate) fn curvature_local(&self, seg: usize, u: F) -> F {
        let d1 = self.spline.d1_local(seg, u);
        let d2 = self.spline.d2_local(seg, u);
        let speed = d1.norm();
        d1.cross(d2) / (speed * speed * speed)
    }

    /// `k` points per spline segment, starting at each knot.
    pub fn polyline(&self, k: usize) -> Vec<Point2<F>> {
        let k = k.max(1);
        let mut out = Vec::with_capacity(self.spline.segment_count() * k);
        for s in 0..self.spline.segment_count() {
            for j in 0..k {
                out.push(self.spline.eval_local(s, F::of_usize(j) / F::of_usize(k)));
            }
        }
        out
    }

    /// `n` points at equally spaced parameter values, starting at `t = 0`.
    pub fn uniform_samples(&self, n: usize) -> Vec<Point2<F>> {
        (0..n).map(|i| self.point(F::of_usize(i) / F::of_usize(n))).collect()
    }

    /// Sums `f(segment, u) · w` over the 8-point Gauss rule of every segment,
    /// where `w` already includes the segment span in the global parameter.
    pub(crate) fn integrate<T, G>(&self, zero: T, mut f: G) -> T
    where
        T: std::ops::Add<Output = T> + std::ops::Mul<F, Output = T> + Copy,
        G: FnMut(usize, F) -> T,
    {
        let rule = gauss_legendre_8::<F>();
        let mut acc = zero;
        for s in 0..self.spline.segment_count() {
            let h = self.spline.segment_span(s);
            for &(u, w) in &rule {
                acc = acc + f(s, u) * (w * h);
            }
        }
        acc
    }

    pub fn perimeter(&self) -> F {
        self.integrate(F::zero(), |s, u| self.spline.d1_local(s, u).norm())
    }

    /// `∫ κ ds` over the whole curve.
    pub fn total_curvature(&self) -> F {
        self.integrate(F::zero(), |s, u| {
            let d1 = self.spline.d1_local(s, u);
            let d2 = self.spline.d2_local(s, u);
            d1.cross(d2) / d1.norm_sq()
        })
    }

    /// Whether `κ ≥ −1e-6 / diam` at every quadrature node.
    pub fn is_convex(&self) -> bool {
        let floor = -F::lit(1e-6) / self.diameter();
        let rule = gauss_legendre_8::<F>();
        (0..self.spline.segment_count()).all(|s| {
            rule.iter()
                .chain([(F::zero(), F::zero())].iter())
                .all(|&(u, _)| self.curvature_local(s, u) >= floor)
        })
    }

    /// Largest distance between two boundary samples.
    pub fn diameter(&self) -> F {
        let hull = convex_hull(&self.samples);
        let mut best = F::zero();
        for i in 0..hull.len() {
            for j in i + 1..hull.len() {
                best = best.max(hull[i].distance_sq(hull[j]));
            }
        }
        best.sqrt()
    }

    /// Applies a similarity to the curve. Reflections reverse the sample order
    /// after the first sample so the result stays counterclockwise; the
    /// parameterization is carried along so the spline maps exactly.
    pub fn transform(&self, g: &Similarity<F>) -> Self {
        let n = self.samples.len();
        let mapped: Vec<_> = self.samples.iter().map(|&p| g.apply(p)).collect();
        if g.preserves_orientation() {
            let spline = PeriodicSpline::fit(&mapped, self.spline.knots());
            return Self::from_parts(mapped, spline);
        }
        let mut pts = Vec::with_capacity(n);
        pts.push(mapped[0]);
        pts.extend(mapped[1..].iter().rev().copied());
        let old = self.spline.knots();
        let mut knots = Vec::with_capacity(n + 1);
        knots.push(F::zero());
        for i in (1..n).rev() {
            knots.push(F::one() - old[i]);
        }
        knots.push(F::one());
        let spline = PeriodicSpline::fit(&pts, &knots);
        Self::from_parts(pts, spline)
    }

    /// Closest point on the spline: `(distance, parameter, point)`.
    pub fn closest_point(&self, p: Point2<F>) -> (F, F, Point2<F>) {
        const K: usize = 4;
        let nseg = self.spline.segment_count();
        // Coarse search on the refined polyline.
        let mut best = (F::infinity(), 0usize, F::zero());
        for s in 0..nseg {
            for j in 0..K {
                let u0 = F::of_usize(j) / F::of_usize(K);
                let u1 = F::of_usize(j + 1) / F::of_usize(K);
                let a = self.spline.eval_local(s, u0);
                let b = self.spline.eval_local(s, u1);
                let (d2, lam) = segment_distance_sq(p, a, b);
                if d2 < best.0 {
                    best = (d2, s, u0 + lam * (u1 - u0));
                }
            }
        }
        let (d, t, q) = self.refine_closest(p, self.spline.param(best.1, best.2));
        // Never worse than the coarse estimate.
        if d * d <= best.0 {
            (d, t, q)
        } else {
            let t0 = self.spline.param(best.1, best.2);
            let q0 = self.point(t0);
            (q0.distance(p), t0, q0)
        }
    }

    /// Closest point found by Newton iteration from the parameter `t0`; only
    /// meaningful when `t0` is already near the answer.
    pub fn closest_point_near(&self, p: Point2<F>, t0: F) -> (F, F, Point2<F>) {
        self.refine_closest(p, t0)
    }

    fn refine_closest(&self, p: Point2<F>, t0: F) -> (F, F, Point2<F>) {
        let nseg = self.spline.segment_count();
        let step_cap = F::lit(2.0) / F::of_usize(nseg);
        let mut t = t0 - t0.floor();
        // Newton on (γ(t) − p)·γ'(t) = 0.
        for _ in 0..8 {
            let (s, u) = self.spline.locate(t);
            let g = self.spline.eval_local(s, u) - p;
            let d1 = self.spline.d1_local(s, u);
            let d2 = self.spline.d2_local(s, u);
            let f = g.dot(d1);
            let fp = d1.norm_sq() + g.dot(d2);
            if fp <= F::zero() {
                break;
            }
            let mut dt = f / fp;
            if dt.abs() > step_cap {
                dt = step_cap.copysign(dt);
            }
            t -= dt;
            t = t - t.floor();
            if dt.abs() < F::epsilon() * F::lit(4.0) {
                break;
            }
        }
        let q = self.point(t);
        (q.distance(p), t, q)
    }

    pub fn distance(&self, p: Point2<F>) -> F {
        self.closest_point(p).0
    }

    /// Winding number of the refined spline polyline around `p`.
    pub fn winding_number(&self, p: Point2<F>) -> i32 {
        winding_number(&self.polyline(4), p)
    }
}

/// The closed region bounded by a [`JordanCurve`].
#[derive(Debug, Clone)]
pub struct JordanDomain<F> {
    boundary: JordanCurve<F>,
    diameter: OnceLock<F>,
}

/// Where a point sits relative to a domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Location<F> {
    pub region: Region,
    /// Positive inside, negative outside; magnitude is the distance to the boundary.
    pub signed_distance: F,
}

impl<F: Scalar> JordanDomain<F> {
    pub fn new(boundary: JordanCurve<F>) -> Self {
        Self {
            boundary,
            diameter: OnceLock::new(),
        }
    }

    pub fn from_samples(samples: &[Point2<F>]) -> Result<Self> {
        Ok(Self::new(JordanCurve::build(samples, &CurveConfig::default())?))
    }

    pub fn boundary(&self) -> &JordanCurve<F> {
        &self.boundary
    }

    pub fn diameter(&self) -> F {
        *self.diameter.get_or_init(|| self.boundary.diameter())
    }

    pub fn curvature(&self, t: F) -> F {
        self.boundary.curvature(t)
    }

    pub fn is_convex(&self) -> bool {
        self.boundary.is_convex()
    }

    /// Area and centroid from Green's theorem on the spline.
    pub fn area_and_centroid(&self) -> (F, Point2<F>) {
        let sp = self.boundary.spline();
        let zero = Point3::default();
        let m = self.boundary.integrate(zero, |s, u| {
            let p = sp.eval_local(s, u);
            let d = sp.d1_local(s, u);
            Point3 {
                a: F::half() * (p.x * d.y - p.y * d.x),
                x: F::half() * p.x * p.x * d.y,
                y: -F::half() * p.y * p.y * d.x,
            }
        });
        (m.a, Point2::new(m.x / m.a, m.y / m.a))
    }

    pub fn area(&self) -> F {
        self.area_and_centroid().0
    }

    pub fn transform(&self, g: &Similarity<F>) -> Self {
        Self::new(self.boundary.transform(g))
    }

    /// Classifies `p` by winding number; `Boundary` when within `tol` of the curve.
    pub fn locate(&self, p: Point2<F>, tol: F) -> Location<F> {
        let (d, t, q) = self.boundary.closest_point(p);
        let inside = if d < self.diameter() * F::lit(1e-3) {
            // Too close for the polyline to be trusted; use the normal instead.
            (p - q).dot(self.boundary.inward_normal(t)) >= F::zero()
        } else {
            self.boundary.winding_number(p) != 0
        };
        let signed_distance = if inside { d } else { -d };
        let region = if d <= tol {
            Region::Boundary
        } else if inside {
            Region::Interior
        } else {
            Region::Exterior
        };
        Location {
            region,
            signed_distance,
        }
    }

    pub fn contains(&self, p: Point2<F>) -> bool {
        self.locate(p, F::zero()).region != Region::Exterior
    }

    /// Hausdorff distance between the two boundaries.
    ///
    /// This is a lower bound for the parametrization distance between the
    /// domains, not that distance itself.
    pub fn hausdorff(&self, other: &Self) -> F {
        one_sided(self, other).max(one_sided(other, self))
    }
}

/// Directed Hausdorff distance from `a`'s boundary to `b`'s boundary.
pub fn one_sided<F: Scalar>(a: &JordanDomain<F>, b: &JordanDomain<F>) -> F {
    a.boundary()
        .polyline(4)
        .into_iter()
        .map(|p| b.boundary().distance(p))
        .fold(F::zero(), F::max)
}

#[derive(Debug, Clone, Copy, Default)]
struct Point3<F> {
    a: F,
    x: F,
    y: F,
}

impl<F: Scalar> std::ops::Add for Point3<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            a: self.a + o.a,
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl<F: Scalar> std::ops::Mul<F> for Point3<F> {
    type Output = Self;
    fn mul(self, s: F) -> Self {
        Self {
            a: self.a * s,
            x: self.x * s,
            y: self.y * s,
        }
    }
}

fn arc_length_knots<F: Scalar>(spline: &PeriodicSpline<F>) -> Vec<F> {
    let rule = gauss_legendre_8::<F>();
    let n = spline.segment_count();
    let mut knots = Vec::with_capacity(n + 1);
    let mut acc = F::zero();
    knots.push(acc);
    for s in 0..n {
        let h = spline.segment_span(s);
        let len: F = rule
            .iter()
            .fold(F::zero(), |a, &(u, w)| a + spline.d1_local(s, u).norm() * w * h);
        acc += len;
        knots.push(acc);
    }
    for k in &mut knots {
        *k /= acc;
    }
    knots[n] = F::one();
    knots
}

/// Shoelace signed area of a closed polygon.
pub fn polygon_signed_area<F: Scalar>(pts: &[Point2<F>]) -> F {
    let n = pts.len();
    let mut acc = F::zero();
    for i in 0..n {
        acc += pts[i].cross(pts[(i + 1) % n]);
    }
    acc * F::half()
}

/// Winding number of a closed polygon around `p`.
pub fn winding_number<F: Scalar>(pts: &[Point2<F>], p: Point2<F>) -> i32 {
    let n = pts.len();
    let mut w = 0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && (b - a).cross(p - a) > F::zero() {
                w += 1;
            }
        } else if b.y <= p.y && (b - a).cross(p - a) < F::zero() {
            w -= 1;
        }
    }
    w
}

/// Squared distance from `p` to segment `ab` and the segment parameter of the foot.
pub fn segment_distance_sq<F: Scalar>(p: Point2<F>, a: Point2<F>, b: Point2<F>) -> (F, F) {
    let ab = b - a;
    let len2 = ab.norm_sq();
    let lam = if len2 > F::zero() {
        ((p - a).dot(ab) / len2).max(F::zero()).min(F::one())
    } else {
        F::zero()
    };
    ((a + ab * lam).distance_sq(p), lam)
}

fn orient<F: Scalar>(a: Point2<F>, b: Point2<F>, c: Point2<F>) -> F {
    (b - a).cross(c - a)
}

fn on_segment<F: Scalar>(a: Point2<F>, b: Point2<F>, p: Point2<F>) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed-segment intersection test.
pub fn segments_intersect<F: Scalar>(p1: Point2<F>, p2: Point2<F>, q1: Point2<F>, q2: Point2<F>) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    let z = F::zero();
    if ((d1 > z && d2 < z) || (d1 < z && d2 > z)) && ((d3 > z && d4 < z) || (d3 < z && d4 > z)) {
        return true;
    }
    (d1 == z && on_segment(q1, q2, p1))
        || (d2 == z && on_segment(q1, q2, p2))
        || (d3 == z && on_segment(p1, p2, q1))
        || (d4 == z && on_segment(p1, p2, q2))
}

/// First pair of non-adjacent intersecting edges of a closed polygon, if any.
///
/// Sweeps edges sorted by their left end so only x-overlapping pairs are tested.
pub fn first_crossing<F: Scalar>(pts: &[Point2<F>]) -> Option<(usize, usize)> {
    let n = pts.len();
    let mut edges: Vec<(F, F, usize)> = (0..n)
        .map(|i| {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            (a.x.min(b.x), a.x.max(b.x), i)
        })
        .collect();
    edges.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    for (k, &(_, hi, i)) in edges.iter().enumerate() {
        for &(lo2, _, j) in &edges[k + 1..] {
            if lo2 > hi {
                break;
            }
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if adjacent {
                continue;
            }
            if segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]) {
                return Some((i.min(j), i.max(j)));
            }
        }
    }
    None
}

/// Convex hull by the monotone chain, counterclockwise.
pub fn convex_hull<F: Scalar>(pts: &[Point2<F>]) -> Vec<Point2<F>> {
    let mut p = pts.to_vec();
    p.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.y.partial_cmp(&b.y).unwrap_or(std::cmp::Ordering::Equal))
    });
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut hull: Vec<Point2<F>> = Vec::with_capacity(2 * p.len());
    for &q in p.iter().chain(p.iter().rev().skip(1)) {
        while hull.len() >= 2 && orient(hull[hull.len() - 2], hull[hull.len() - 1], q) <= F::zero() {
            hull.pop();
        }
        hull.push(q);
    }
    hull.pop();
    hull
}
