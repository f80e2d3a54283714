//! Periodic interpolating cubic splines in the plane.

use crate::geom::Point2;
use crate::scalar::Scalar;

/// A closed C² cubic spline `[0, 1) → ℝ²` interpolating its knot values.
///
/// Segment `i` covers `[knots[i], knots[i + 1]]` and is stored as a cubic in
/// the local parameter `u ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicSpline<F> {
    knots: Vec<F>,
    coeffs: Vec<[Point2<F>; 4]>,
}

impl<F: Scalar> PeriodicSpline<F> {
    /// Fits the periodic spline through `points` with parameter values
    /// `knots[i]`; `knots` has one more entry than `points` and ends at the
    /// period `1`.
    pub fn fit(points: &[Point2<F>], knots: &[F]) -> Self {
        let n = points.len();
        assert!(n >= 3, "periodic spline needs at least three points");
        assert_eq!(knots.len(), n + 1);
        let h: Vec<F> = (0..n).map(|i| knots[i + 1] - knots[i]).collect();
        debug_assert!(h.iter().all(|&hi| hi > F::zero()));

        let six = F::lit(6.0);
        let mut sub = vec![F::zero(); n];
        let mut diag = vec![F::zero(); n];
        let mut sup = vec![F::zero(); n];
        let mut rhs = vec![Point2::origin(); n];
        for i in 0..n {
            let ip = (i + n - 1) % n;
            let inx = (i + 1) % n;
            sub[i] = h[ip];
            diag[i] = F::two() * (h[ip] + h[i]);
            sup[i] = h[i];
            let fwd = (points[inx] - points[i]) / h[i];
            let bwd = (points[i] - points[ip]) / h[ip];
            rhs[i] = (fwd - bwd) * six;
        }
        let m = solve_cyclic(&sub, &diag, &sup, &rhs);

        let coeffs = (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                let hi = h[i];
                let h2 = hi * hi;
                // Local cubic in u with S(0)=P_i, S(1)=P_j, S''(0)=M_i h², S''(1)=M_j h².
                let a = points[i];
                let c = m[i] * (h2 / F::two());
                let d = (m[j] - m[i]) * (h2 / six);
                let b = points[j] - points[i] - c - d;
                [a, b, c, d]
            })
            .collect();
        Self {
            knots: knots.to_vec(),
            coeffs,
        }
    }

    /// Fits with chord-length parameterization normalised to the unit period.
    pub fn fit_chord_length(points: &[Point2<F>]) -> Self {
        let knots = chord_length_knots(points);
        Self::fit(points, &knots)
    }

    pub fn segment_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn knots(&self) -> &[F] {
        &self.knots
    }

    /// Knot value at the start of `segment`.
    pub fn knot(&self, segment: usize) -> F {
        self.knots[segment]
    }

    pub fn segment_span(&self, segment: usize) -> F {
        self.knots[segment + 1] - self.knots[segment]
    }

    /// Reduces `t` to `[0, 1)` and returns `(segment, local u)`.
    pub fn locate(&self, t: F) -> (usize, F) {
        let mut t = t - t.floor();
        if t >= F::one() {
            t = F::zero();
        }
        // Largest i with knots[i] <= t.
        let n = self.coeffs.len();
        let i = match self
            .knots
            .binary_search_by(|k| k.partial_cmp(&t).unwrap_or(std::cmp::Ordering::Less))
        {
            Ok(i) => i.min(n - 1),
            Err(i) => i.saturating_sub(1).min(n - 1),
        };
        let u = (t - self.knots[i]) / self.segment_span(i);
        (i, u)
    }

    #[inline]
    pub fn eval_local(&self, seg: usize, u: F) -> Point2<F> {
        let [a, b, c, d] = self.coeffs[seg];
        a + (b + (c + d * u) * u) * u
    }

    /// First derivative with respect to the global parameter.
    #[inline]
    pub fn d1_local(&self, seg: usize, u: F) -> Point2<F> {
        let [_, b, c, d] = self.coeffs[seg];
        let three = F::lit(3.0);
        (b + (c * F::two() + d * (three * u)) * u) / self.segment_span(seg)
    }

    /// Second derivative with respect to the global parameter.
    #[inline]
    pub fn d2_local(&self, seg: usize, u: F) -> Point2<F> {
        let [_, _, c, d] = self.coeffs[seg];
        let h = self.segment_span(seg);
        (c * F::two() + d * (F::lit(6.0) * u)) / (h * h)
    }

    pub fn eval(&self, t: F) -> Point2<F> {
        let (s, u) = self.locate(t);
        self.eval_local(s, u)
    }

    pub fn d1(&self, t: F) -> Point2<F> {
        let (s, u) = self.locate(t);
        self.d1_local(s, u)
    }

    pub fn d2(&self, t: F) -> Point2<F> {
        let (s, u) = self.locate(t);
        self.d2_local(s, u)
    }

    /// Global parameter of a local position.
    pub fn param(&self, seg: usize, u: F) -> F {
        self.knots[seg] + u * self.segment_span(seg)
    }
}

/// Cumulative chord lengths normalised to `[0, 1]`, closing back to the first point.
pub fn chord_length_knots<F: Scalar>(points: &[Point2<F>]) -> Vec<F> {
    let n = points.len();
    let mut knots = Vec::with_capacity(n + 1);
    let mut acc = F::zero();
    knots.push(acc);
    for i in 0..n {
        acc += points[i].distance(points[(i + 1) % n]);
        knots.push(acc);
    }
    for k in &mut knots {
        *k /= acc;
    }
    knots[n] = F::one();
    knots
}

/// Solves a cyclic tridiagonal system with vector-valued right-hand side.
///
/// Row `i` reads `sub[i]·x[i−1] + diag[i]·x[i] + sup[i]·x[i+1] = rhs[i]`,
/// indices taken modulo `n`. Uses the Sherman–Morrison correction on top of
/// the Thomas algorithm; the matrix must be diagonally dominant.
pub(crate) fn solve_cyclic<F: Scalar>(sub: &[F], diag: &[F], sup: &[F], rhs: &[Point2<F>]) -> Vec<Point2<F>> {
    let n = diag.len();
    assert!(n >= 3);
    let alpha = sup[n - 1]; // couples row n-1 to x[0]
    let beta = sub[0]; // couples row 0 to x[n-1]
    let gamma = -diag[0];

    let mut b = diag.to_vec();
    b[0] = diag[0] - gamma;
    b[n - 1] = diag[n - 1] - alpha * beta / gamma;

    let x = thomas(sub, &b, sup, rhs);
    let mut u = vec![Point2::origin(); n];
    u[0] = Point2::new(gamma, gamma);
    u[n - 1] = Point2::new(alpha, alpha);
    let z = thomas(sub, &b, sup, &u);

    // v = (1, 0, …, 0, beta/gamma); both components of z are identical.
    let ratio = beta / gamma;
    let vz = z[0].x + ratio * z[n - 1].x;
    let vx = x[0] + x[n - 1] * ratio;
    let factor = vx / (F::one() + vz);
    x.iter().zip(&z).map(|(&xi, zi)| xi - factor * zi.x).collect()
}

fn thomas<F: Scalar>(sub: &[F], diag: &[F], sup: &[F], rhs: &[Point2<F>]) -> Vec<Point2<F>> {
    let n = diag.len();
    let mut c = vec![F::zero(); n];
    let mut d = vec![Point2::origin(); n];
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let denom = diag[i] - sub[i] * c[i - 1];
        c[i] = sup[i] / denom;
        d[i] = (rhs[i] - d[i - 1] * sub[i]) / denom;
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        let next = x[i + 1];
        x[i] -= next * c[i];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    fn circle(n: usize) -> Vec<Point2<f64>> {
        (0..n)
            .map(|i| Point2::from_polar(1.0, TAU * i as f64 / n as f64))
            .collect()
    }

    #[test]
    fn interpolates_knot_values() {
        let pts: Vec<_> = circle(13)
            .into_iter()
            .enumerate()
            .map(|(i, p)| p * (1.0 + 0.1 * (i % 3) as f64))
            .collect();
        let s = PeriodicSpline::fit_chord_length(&pts);
        for (i, p) in pts.iter().enumerate() {
            assert!(s.eval(s.knot(i)).distance(*p) < 1e-12);
        }
        assert!(s.eval(0.999_999_999_999).distance(pts[0]) < 1e-9);
    }

    #[test]
    fn c2_continuity_at_knots() {
        let pts = circle(20)
            .into_iter()
            .enumerate()
            .map(|(i, p)| p * (1.0 + 0.05 * ((i * 7) % 5) as f64))
            .collect::<Vec<_>>();
        let s = PeriodicSpline::fit_chord_length(&pts);
        for i in 0..s.segment_count() {
            let j = (i + 1) % s.segment_count();
            assert!(s.d1_local(i, 1.0).distance(s.d1_local(j, 0.0)) < 1e-9);
            assert!(s.d2_local(i, 1.0).distance(s.d2_local(j, 0.0)) < 1e-7);
        }
    }

    #[test]
    fn cyclic_solver_matches_dense_residual() {
        let n = 7;
        let sub: Vec<f64> = (0..n).map(|i| 0.3 + 0.1 * i as f64).collect();
        let sup: Vec<f64> = (0..n).map(|i| 0.5 - 0.05 * i as f64).collect();
        let diag: Vec<f64> = (0..n).map(|i| 3.0 + i as f64).collect();
        let rhs: Vec<Point2<f64>> = (0..n).map(|i| Point2::new(i as f64, (i * i) as f64 - 3.0)).collect();
        let x = solve_cyclic(&sub, &diag, &sup, &rhs);
        for i in 0..n {
            let lhs = x[(i + n - 1) % n] * sub[i] + x[i] * diag[i] + x[(i + 1) % n] * sup[i];
            assert!(lhs.distance(rhs[i]) < 1e-12, "row {i}");
        }
    }
}
