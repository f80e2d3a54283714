//! Interior and exterior conformal maps of Jordan domains.
//!
//! Both maps are built on one [`zipper::Zipper`] of the boundary. The
//! interior map `f: B² → D` is normalized by `f(o) = p` and `arg f'(0) = arg u`;
//! the exterior map `g: B² ∖ {o} → D*` sends `o` to ∞ and is gauged so that
//! `g(z) ≈ c/z` near `o` with `c > 0`.

pub mod zipper;

use num_complex::Complex;
use serde::Serialize;

use crate::curve::{JordanDomain, Region};
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::scalar::Scalar;
use zipper::{Side, Zipper};

/// Resolution and accuracy settings for map construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapConfig<F> {
    /// Boundary defect allowed, relative to the domain diameter.
    pub tol: F,
    /// Initial number of boundary samples.
    pub samples: usize,
    /// Refinement stops once doubling would exceed this.
    pub max_samples: usize,
}

impl<F: Scalar> Default for MapConfig<F> {
    fn default() -> Self {
        Self {
            tol: F::lit(1e-3),
            samples: 512,
            max_samples: 4096,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

/// A zipper of `∂D` at the first resolution whose boundary defect is small enough.
#[derive(Debug, Clone)]
struct Resolved<F> {
    zipper: Zipper<F>,
    defect: F,
}

fn resolve<F: Scalar>(d: &JordanDomain<F>, cfg: &MapConfig<F>) -> Result<Resolved<F>> {
    if cfg.samples < 16 || cfg.max_samples < cfg.samples {
        return Err(Error::InvalidArgument(format!(
            "map samples {} / max {} out of range",
            cfg.samples, cfg.max_samples
        )));
    }
    let limit = cfg.tol * d.diameter();
    let mut n = cfg.samples;
    loop {
        let pts: Vec<_> = d
            .boundary()
            .uniform_samples(n)
            .into_iter()
            .map(Point2::to_complex)
            .collect();
        let attempt = Zipper::build(&pts).ok().map(|z| {
            let defect = zipper_defect(&z, d, &pts);
            (z, defect)
        });
        let defect = match attempt {
            Some((zipper, defect)) if defect <= limit => return Ok(Resolved { zipper, defect }),
            Some((_, defect)) => defect,
            None => F::infinity(),
        };
        if n * 2 > cfg.max_samples {
            return Err(Error::DidNotConverge {
                defect: defect.to_f64_lossy(),
                tolerance: limit.to_f64_lossy(),
                samples: n,
            });
        }
        n *= 2;
    }
}

/// Largest distance from the zipper's interpolating curve to the spline,
/// probed at interior points of every piece between consecutive samples.
fn zipper_defect<F: Scalar>(z: &Zipper<F>, d: &JordanDomain<F>, pts: &[Complex<F>]) -> F {
    let n = pts.len();
    let curve = d.boundary();
    let nf = F::of_usize(n);
    let dist = |y: Complex<F>, k: usize, lam: F| {
        let t = (F::of_usize(k) + lam) / nf;
        curve.closest_point_near(Point2::from_complex(y), t).0
    };
    let lams = [F::lit(0.25), F::half(), F::lit(0.75)];
    let x = z.prevertices();
    let mut worst = F::zero();
    // z₀ → z₁ is a straight chord.
    for &lam in &lams {
        worst = worst.max(dist(pts[0] + (pts[1] - pts[0]) * lam, 0, lam));
    }
    for k in 1..n - 1 {
        for &lam in &lams {
            let w = Complex::new(x[k - 1] + (x[k] - x[k - 1]) * lam, F::zero());
            worst = worst.max(dist(z.inverse(w, Side::Interior), k, lam));
        }
    }
    // z_{n−1} → z₀ is the other half-axis, from 0 out to ∞; its scale is unknown,
    // so probe it geometrically.
    let scale = x[n.saturating_sub(3)].abs().max(F::min_positive_value());
    for j in -8i32..=8 {
        let s = scale * F::lit(10f64.powf(j as f64 / 2.0));
        let w = Complex::new(-z.sigma() * s, F::zero());
        worst = worst.max(dist(z.inverse(w, Side::Interior), n - 1, F::half()));
    }
    worst
}

/// `Φ(y)`, pushing `y` along the normal when it sits just on the wrong side
/// of the interpolating curve (`side` is `+1` for the interior, `−1` for the exterior).
fn nudged_forward<F: Scalar>(
    z: &Zipper<F>,
    d: &JordanDomain<F>,
    defect: F,
    y: Complex<F>,
    side: F,
) -> Option<Complex<F>> {
    let w = z.forward(y)?;
    if w.im * side > F::zero() {
        return Some(w);
    }
    let (_, t, q) = d.boundary().closest_point(Point2::from_complex(y));
    let step = F::two() * defect + F::lit(1e-9) * d.diameter();
    let y2 = q + d.boundary().inward_normal(t) * (step * side);
    let w2 = z.forward(y2.to_complex())?;
    Some(if w2.im * side > F::zero() {
        w2
    } else {
        Complex::new(w.re, F::zero())
    })
}

/// Conformal map of the closed unit disk onto a Jordan domain.
#[derive(Debug, Clone)]
pub struct ConformalMap<F> {
    zipper: Zipper<F>,
    domain: JordanDomain<F>,
    /// `Φ(p)`, in the upper half-plane.
    wp: Complex<F>,
    /// `e^{iα}` of the final disk rotation.
    rot: Complex<F>,
    center_value: Point2<F>,
    center_derivative: Complex<F>,
    defect: F,
    tol: F,
}

/// Builds `f` with `f(o) = p` and `f'(0)` pointing along `u`.
pub fn build_interior_map<F: Scalar>(
    d: &JordanDomain<F>,
    p: Point2<F>,
    u: Point2<F>,
    cfg: &MapConfig<F>,
) -> Result<ConformalMap<F>> {
    if !(u.norm() > F::zero()) {
        return Err(Error::ZeroDirection);
    }
    if d.locate(p, F::zero()).region != Region::Interior {
        return Err(Error::PointNotInterior);
    }
    let Resolved { zipper, defect } = resolve(d, cfg)?;
    let (wp, dwp) = zipper.forward_d(p.to_complex()).ok_or(Error::PointNotInterior)?;
    if !(wp.im > F::zero()) {
        return Err(Error::PointNotInterior);
    }
    let i = Complex::new(F::zero(), F::one());
    let k = dwp / (i * (F::two() * wp.im));
    let rot = Complex::from_polar(F::one(), -u.y.atan2(u.x) - k.arg());
    // F'(p) = e^{iα} Φ'(p) / (2i Im Φ(p)); f'(0) = 1 / F'(p).
    let center_derivative = Complex::new(F::one(), F::zero()) / (rot * k);
    Ok(ConformalMap {
        zipper,
        domain: d.clone(),
        wp,
        rot,
        center_value: p,
        center_derivative,
        defect,
        tol: cfg.tol * d.diameter(),
    })
}

impl<F: Scalar> ConformalMap<F> {
    /// `f(o)`.
    pub fn center_value(&self) -> Point2<F> {
        self.center_value
    }

    /// `f'(0)` as a complex number.
    pub fn center_derivative(&self) -> Complex<F> {
        self.center_derivative
    }

    pub fn domain(&self) -> &JordanDomain<F> {
        &self.domain
    }

    /// Sup distance from the interpolating boundary to `∂D`, measured at build time.
    pub fn boundary_defect(&self) -> F {
        self.defect
    }

    pub fn sample_count(&self) -> usize {
        self.zipper.sample_count()
    }

    pub fn evaluate(&self, z: Point2<F>, direction: Direction) -> Result<Point2<F>> {
        match direction {
            Direction::Forward => self.forward(z),
            Direction::Inverse => self.inverse(z),
        }
    }

    /// `f(z)` for `|z| ≤ 1`.
    pub fn forward(&self, z: Point2<F>) -> Result<Point2<F>> {
        if !z.is_finite() || z.norm() > F::one() + F::lit(1e-9) {
            return Err(Error::OutOfDomain);
        }
        Ok(Point2::from_complex(self.forward_c(z.to_complex())))
    }

    pub(crate) fn forward_c(&self, z: Complex<F>) -> Complex<F> {
        if z.norm_sqr() == F::zero() {
            return self.center_value.to_complex();
        }
        let zeta = z * self.rot.conj();
        let one = Complex::new(F::one(), F::zero());
        let gap = one - zeta;
        if gap.norm() <= F::epsilon() {
            return self
                .zipper
                .inverse(Complex::new(F::infinity(), F::zero()), Side::Interior);
        }
        let w = (self.wp - self.wp.conj() * zeta) / gap;
        self.zipper.inverse(w, Side::Interior)
    }

    /// `f⁻¹(y)` for `y` in the closed domain (up to the map tolerance).
    pub fn inverse(&self, y: Point2<F>) -> Result<Point2<F>> {
        if !y.is_finite() || self.domain.locate(y, self.tol).region == Region::Exterior {
            return Err(Error::OutOfDomain);
        }
        Ok(Point2::from_complex(self.inverse_c(y.to_complex())))
    }

    pub(crate) fn inverse_c(&self, y: Complex<F>) -> Complex<F> {
        let zeta = match nudged_forward(&self.zipper, &self.domain, self.defect, y, F::one()) {
            None => Complex::new(F::one(), F::zero()),
            Some(w) => (w - self.wp) / (w - self.wp.conj()),
        };
        let z = zeta * self.rot;
        let r = z.norm();
        if r > F::one() {
            z / r
        } else {
            z
        }
    }

    /// Sorted angles in `[0, 2π)` of the preimages of `m` points spaced
    /// evenly by arc length along `∂D`.
    pub fn boundary_angles(&self, m: usize) -> Vec<F> {
        let mut a: Vec<F> = self
            .domain
            .boundary()
            .uniform_samples(m)
            .into_iter()
            .map(|y| {
                let z = self.inverse_c(y.to_complex());
                let t = z.im.atan2(z.re);
                if t < F::zero() {
                    t + F::tau()
                } else {
                    t
                }
            })
            .collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
        a
    }

    /// Images of `m` equally spaced points of `∂B²`, starting at angle 0.
    pub fn boundary_image(&self, m: usize) -> Vec<Point2<F>> {
        (0..m)
            .map(|k| {
                let a = F::tau() * F::of_usize(k) / F::of_usize(m);
                Point2::from_complex(self.forward_c(Complex::from_polar(F::one(), a)))
            })
            .collect()
    }

    pub fn diagnostics(&self) -> MapDiagnostics {
        MapDiagnostics::new(
            &self.zipper,
            self.defect,
            [self.wp.re, self.wp.im],
            [self.rot.re, self.rot.im],
            [self.center_derivative.re, self.center_derivative.im],
        )
    }
}

/// Conformal map of `B² ∖ {o}` onto the closed complement of a normalized domain.
#[derive(Debug, Clone)]
pub struct ExteriorMap<F> {
    zipper: Zipper<F>,
    domain: JordanDomain<F>,
    /// `Φ(∞)`, in the lower half-plane.
    winf: Complex<F>,
    rot: Complex<F>,
    leading: F,
    defect: F,
    tol: F,
}

/// Builds the exterior map of a domain already normalized to circumradius 1
/// about the origin.
pub fn build_exterior_map<F: Scalar>(dn: &JordanDomain<F>, cfg: &MapConfig<F>) -> Result<ExteriorMap<F>> {
    let Resolved { zipper, defect } = resolve(dn, cfg)?;
    let (winf, dinf) = zipper.at_infinity();
    let i = Complex::new(F::zero(), F::one());
    // E(Φ(1/s)) ≈ e^{iβ} K s with K as below; g(z) ≈ e^{iβ}K / z.
    let k = dinf / (i * (F::two() * winf.im));
    let rot = Complex::from_polar(F::one(), -k.arg());
    Ok(ExteriorMap {
        zipper,
        domain: dn.clone(),
        winf,
        rot,
        leading: k.norm(),
        defect,
        tol: cfg.tol * dn.diameter(),
    })
}

impl<F: Scalar> ExteriorMap<F> {
    /// `c > 0` with `g(z) ≈ c / z` near the puncture.
    pub fn leading_coefficient(&self) -> F {
        self.leading
    }

    pub fn domain(&self) -> &JordanDomain<F> {
        &self.domain
    }

    pub fn boundary_defect(&self) -> F {
        self.defect
    }

    pub fn sample_count(&self) -> usize {
        self.zipper.sample_count()
    }

    pub fn evaluate(&self, z: Point2<F>, direction: Direction) -> Result<Point2<F>> {
        match direction {
            Direction::Forward => self.forward(z),
            Direction::Inverse => self.inverse(z),
        }
    }

    /// `g(z)` for `0 < |z| ≤ 1`.
    pub fn forward(&self, z: Point2<F>) -> Result<Point2<F>> {
        let r = z.norm();
        if !z.is_finite() || r > F::one() + F::lit(1e-9) || r == F::zero() {
            return Err(Error::OutOfDomain);
        }
        Ok(Point2::from_complex(self.forward_c(z.to_complex())))
    }

    pub(crate) fn forward_c(&self, z: Complex<F>) -> Complex<F> {
        let zeta = z * self.rot.conj();
        let gap = Complex::new(F::one(), F::zero()) - zeta;
        if gap.norm() <= F::epsilon() {
            return self
                .zipper
                .inverse(Complex::new(F::infinity(), F::zero()), Side::Exterior);
        }
        let w = (self.winf - self.winf.conj() * zeta) / gap;
        self.zipper.inverse(w, Side::Exterior)
    }

    /// `g⁻¹(y)` for `y` outside the domain or on its boundary.
    pub fn inverse(&self, y: Point2<F>) -> Result<Point2<F>> {
        if !y.is_finite() || self.domain.locate(y, self.tol).region == Region::Interior {
            return Err(Error::OutOfDomain);
        }
        Ok(Point2::from_complex(self.inverse_c(y.to_complex())))
    }

    pub(crate) fn inverse_c(&self, y: Complex<F>) -> Complex<F> {
        let zeta = match nudged_forward(&self.zipper, &self.domain, self.defect, y, -F::one()) {
            None => Complex::new(F::one(), F::zero()),
            Some(w) => (w - self.winf) / (w - self.winf.conj()),
        };
        let z = zeta * self.rot;
        let r = z.norm();
        if r > F::one() {
            z / r
        } else {
            z
        }
    }

    /// Images of `m` equally spaced points of the circle `|z| = radius`.
    pub fn circle_image(&self, radius: F, m: usize) -> Vec<Point2<F>> {
        (0..m)
            .map(|k| {
                let a = F::tau() * F::of_usize(k) / F::of_usize(m);
                Point2::from_complex(self.forward_c(Complex::from_polar(radius, a)))
            })
            .collect()
    }

    pub fn diagnostics(&self) -> MapDiagnostics {
        MapDiagnostics::new(
            &self.zipper,
            self.defect,
            [self.winf.re, self.winf.im],
            [self.rot.re, self.rot.im],
            [self.leading, F::zero()],
        )
    }
}

/// Stage parameters of a built map, for debugging dumps.
#[derive(Debug, Clone, Serialize)]
pub struct MapDiagnostics {
    pub samples: usize,
    pub boundary_defect: f64,
    /// `(b, h)` of each slit stage, in order of application.
    pub stages: Vec<[f64; 2]>,
    /// Real image of the first sample before the final stage, if finite.
    pub tail: Option<f64>,
    pub sigma: f64,
    /// Half-plane image of the normalization point (`p` or ∞).
    pub anchor: [f64; 2],
    pub rotation: [f64; 2],
    /// `f'(0)` for interior maps, `(c, 0)` for exterior maps.
    pub derivative: [f64; 2],
}

impl MapDiagnostics {
    fn new<F: Scalar>(z: &Zipper<F>, defect: F, anchor: [F; 2], rot: [F; 2], der: [F; 2]) -> Self {
        let f = |a: [F; 2]| [a[0].to_f64_lossy(), a[1].to_f64_lossy()];
        Self {
            samples: z.sample_count(),
            boundary_defect: defect.to_f64_lossy(),
            stages: z
                .slits()
                .iter()
                .map(|s| [s.b.to_f64_lossy(), s.h.to_f64_lossy()])
                .collect(),
            tail: z.tail().map(|t| t.to_f64_lossy()),
            sigma: z.sigma().to_f64_lossy(),
            anchor: f(anchor),
            rotation: f(rot),
            derivative: f(der),
        }
    }
}

/// Polar test grid of the closed disk: the origin plus `rings × spokes` points.
pub fn disk_grid<F: Scalar>(rings: usize, spokes: usize) -> Vec<Point2<F>> {
    let mut out = vec![Point2::origin()];
    for i in 1..=rings {
        let r = F::of_usize(i) / F::of_usize(rings);
        for j in 0..spokes {
            let a = F::tau() * F::of_usize(j) / F::of_usize(spokes);
            out.push(Point2::from_polar(r, a));
        }
    }
    out
}

/// Sup distance between two interior maps over [`disk_grid`]`(8, 64)`.
pub fn sup_difference<F: Scalar>(f: &ConformalMap<F>, g: &ConformalMap<F>) -> F {
    disk_grid::<F>(8, 64)
        .into_iter()
        .map(|z| {
            let z = z.to_complex();
            (f.forward_c(z) - g.forward_c(z)).norm()
        })
        .fold(F::zero(), F::max)
}

/// `sup |f_{Dᵢ,p,u} − f_{D,p,u}|` over the disk grid, for each perturbed domain.
pub fn convergence_probe<F: Scalar>(
    d: &JordanDomain<F>,
    perturbations: &[JordanDomain<F>],
    p: Point2<F>,
    u: Point2<F>,
    cfg: &MapConfig<F>,
) -> Result<Vec<F>> {
    let base = build_interior_map(d, p, u, cfg)?;
    perturbations
        .iter()
        .map(|di| Ok(sup_difference(&build_interior_map(di, p, u, cfg)?, &base)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Similarity;
    use crate::shapes::Shape;

    fn disk(r: f64, c: Point2<f64>) -> JordanDomain<f64> {
        Shape::Circle { r }.domain(c, 256).unwrap()
    }

    fn ellipse() -> JordanDomain<f64> {
        Shape::Ellipse { a: 2.0, b: 1.0 }.domain(Point2::origin(), 256).unwrap()
    }

    fn e1() -> Point2<f64> {
        Point2::new(1.0, 0.0)
    }

    #[test]
    fn unit_disk_map_is_the_identity() {
        let d = disk(1.0, Point2::origin());
        let f = build_interior_map(&d, Point2::origin(), e1(), &MapConfig::default()).unwrap();
        for z in f.boundary_image(256).iter().zip(0..) {
            let a = std::f64::consts::TAU * z.1 as f64 / 256.0;
            assert!(z.0.distance(Point2::from_polar(1.0, a)) < 1e-3);
        }
        let y = f.forward(Point2::new(0.3, 0.4)).unwrap();
        assert!(y.distance(Point2::new(0.3, 0.4)) < 1e-3);
    }

    #[test]
    fn offset_disk_is_a_similarity() {
        let q = Point2::new(1.0, 0.0);
        let d = disk(2.0, q);
        let f = build_interior_map(&d, q, e1(), &MapConfig::default()).unwrap();
        for z in disk_grid::<f64>(4, 16) {
            assert!(f.forward(z).unwrap().distance(q + z * 2.0) < 2e-3);
        }
        let back = f.inverse(Point2::new(1.0, 2.0)).unwrap();
        assert!(back.distance(Point2::new(0.0, 1.0)) < 1e-3);
        assert!((f.center_derivative() - Complex::new(2.0, 0.0)).norm() < 2e-3);
    }

    #[test]
    fn ellipse_normalization_and_conformality() {
        let d = ellipse();
        let p = Point2::new(0.5, 0.0);
        let u = Point2::new(0.0, 1.0);
        let f = build_interior_map(&d, p, u, &MapConfig::default()).unwrap();
        assert_eq!(f.forward(Point2::origin()).unwrap(), p);
        let fd = f.center_derivative();
        assert!((fd.arg() - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        // Cauchy–Riemann residual by centered differences.
        let h = 1e-5;
        for z in disk_grid::<f64>(6, 24).into_iter().filter(|z| z.norm() <= 0.95) {
            let ev = |x: f64, y: f64| f.forward(Point2::new(x, y)).unwrap();
            let fx = (ev(z.x + h, z.y) - ev(z.x - h, z.y)) / (2.0 * h);
            let fy = (ev(z.x, z.y + h) - ev(z.x, z.y - h)) / (2.0 * h);
            let res = ((fx.x - fy.y).powi(2) + (fx.y + fy.x).powi(2)).sqrt();
            assert!(res <= 1e-4 * fx.norm().max(1e-12), "residual {res} at {z:?}");
        }
    }

    #[test]
    fn ellipse_round_trip() {
        let d = ellipse();
        let f = build_interior_map(&d, Point2::new(0.5, 0.0), Point2::new(0.0, 1.0), &MapConfig::default()).unwrap();
        for z in disk_grid::<f64>(5, 20).into_iter().filter(|z| z.norm() < 0.99) {
            let y = f.forward(z).unwrap();
            let back = f.inverse(y).unwrap();
            assert!(back.distance(z) < 1e-6, "{z:?} -> {back:?}");
        }
    }

    #[test]
    fn ellipse_boundary_defect_is_small() {
        let d = ellipse();
        let f = build_interior_map(&d, Point2::origin(), e1(), &MapConfig::default()).unwrap();
        assert!(f.boundary_defect() <= 1e-3 * d.diameter());
        for y in f.boundary_image(500) {
            assert!(d.boundary().distance(y) <= 4e-3);
        }
    }

    #[test]
    fn build_rejects_bad_arguments() {
        let d = disk(1.0, Point2::origin());
        let cfg = MapConfig::default();
        assert_eq!(
            build_interior_map(&d, Point2::new(2.0, 0.0), e1(), &cfg).unwrap_err(),
            Error::PointNotInterior
        );
        assert_eq!(
            build_interior_map(&d, Point2::origin(), Point2::origin(), &cfg).unwrap_err(),
            Error::ZeroDirection
        );
        let f = build_interior_map(&d, Point2::origin(), e1(), &cfg).unwrap();
        assert_eq!(f.forward(Point2::new(1.5, 0.0)).unwrap_err(), Error::OutOfDomain);
        assert_eq!(f.inverse(Point2::new(1.5, 0.0)).unwrap_err(), Error::OutOfDomain);
    }

    #[test]
    fn exterior_map_of_the_disk_is_reciprocal() {
        let d = disk(1.0, Point2::origin());
        let g = build_exterior_map(&d, &MapConfig::default()).unwrap();
        let y = g.forward(Point2::new(0.5, 0.0)).unwrap();
        assert!(y.distance(Point2::new(2.0, 0.0)) < 1e-3, "{y:?}");
        let y = g.forward(Point2::new(0.0, 0.25)).unwrap();
        assert!(y.distance(Point2::new(0.0, -4.0)) < 2e-3, "{y:?}");
        assert!((g.leading_coefficient() - 1.0).abs() < 1e-3);
        let z = g.inverse(Point2::new(-3.0, 0.0)).unwrap();
        assert!(z.distance(Point2::new(-1.0 / 3.0, 0.0)) < 1e-3);
    }

    #[test]
    fn exterior_small_circle_winds_once() {
        let d = ellipse();
        let dn = d.transform(&crate::enclosing::normalizer(&d));
        let g = build_exterior_map(&dn, &MapConfig::default()).unwrap();
        let ring = g.circle_image(0.01, 256);
        // g ≈ c/z reverses orientation.
        assert_eq!(crate::curve::winding_number(&ring, Point2::origin()).abs(), 1);
        for y in g.circle_image(1.0, 400) {
            assert!(dn.boundary().distance(y) < 1e-3);
        }
    }

    #[test]
    fn interior_map_commutes_with_similarities() {
        let d = Shape::Blob.domain(Point2::origin(), 256).unwrap();
        let p = Point2::new(0.1, -0.05);
        let cfg = MapConfig::default();
        let f = build_interior_map(&d, p, e1(), &cfg).unwrap();
        let g = Similarity::new(1.7, 0.4, false, Point2::new(-2.0, 3.0));
        let gd = d.transform(&g);
        let u = g.apply_linear(e1());
        let fg = build_interior_map(&gd, g.apply(p), u, &cfg).unwrap();
        for z in disk_grid::<f64>(4, 16) {
            let a = g.apply(f.forward(z).unwrap());
            let b = fg.forward(z).unwrap();
            assert!(a.distance(b) < 2e-3 * gd.diameter());
        }
    }

    #[test]
    fn probe_of_the_domain_itself_is_zero() {
        let d = ellipse();
        let cfg = MapConfig::default();
        let s = convergence_probe(&d, std::slice::from_ref(&d), Point2::origin(), e1(), &cfg).unwrap();
        assert!(s[0] < 1e-12);
    }

    #[test]
    fn diagnostics_serialize() {
        let d = disk(1.0, Point2::origin());
        let f = build_interior_map(&d, Point2::origin(), e1(), &MapConfig::default()).unwrap();
        let v = serde_json::to_value(f.diagnostics()).unwrap();
        assert_eq!(v["samples"], 512);
        assert_eq!(v["stages"].as_array().unwrap().len(), 510);
    }
}
