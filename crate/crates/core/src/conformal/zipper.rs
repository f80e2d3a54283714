//! The geodesic zipper: a composition of elementary conformal maps that
//! unzips a closed polygonal boundary onto the real line.
//!
//! For boundary points `z₀ … z_{n−1}` the composition `Φ` maps the bounded
//! side of the (interpolated) curve onto the upper half-plane and the
//! unbounded side onto the lower half-plane. Between consecutive samples the
//! interpolating curve is the preimage of a circular arc orthogonal to the
//! real axis; the closing piece `z_{n−1} → z₀` is the preimage of the last
//! such arc and the piece `z₀ → z₁` is a straight segment.
//!
//! Every stage has a closed-form inverse, so `Φ⁻¹` is evaluated stage by
//! stage in reverse order.

use num_complex::Complex;
use serde::Serialize;

use crate::scalar::Scalar;

/// Which side of the boundary an inverse evaluation lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Interior,
    Exterior,
}

/// `z ↦ √((z/(1 − b z))² + h²)`: removes the arc from 0 to the current point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Slit<F> {
    pub b: F,
    pub h: F,
}

impl<F: Scalar> Slit<F> {
    /// The slit that sends `a ∈ ℍ` to the origin.
    fn through(a: Complex<F>) -> Self {
        let r2 = a.norm_sqr();
        Self {
            b: a.re / r2,
            h: r2 / a.im,
        }
    }

    #[inline]
    fn apply(&self, z: Complex<F>) -> Complex<F> {
        let m = z / (Complex::new(F::one(), F::zero()) - z * self.b);
        sqrt_slit(m, self.h)
    }

    #[inline]
    fn apply_d(&self, z: Complex<F>, dz: Complex<F>) -> (Complex<F>, Complex<F>) {
        let denom = Complex::new(F::one(), F::zero()) - z * self.b;
        let m = z / denom;
        let dm = dz / (denom * denom);
        let s = sqrt_slit(m, self.h);
        (s, dm * m / s)
    }

    #[inline]
    fn invert(&self, w: Complex<F>) -> Complex<F> {
        let s = unslit(w, self.h);
        s / (Complex::new(F::one(), F::zero()) + s * self.b)
    }

    /// Image of a real point; the origin, which is the base of the slit,
    /// goes to `tip · h` (`−1` for the left side of the slit, `+1` for the right).
    fn apply_boundary(&self, x: F, tip: F) -> F {
        let m = if !x.is_finite() {
            if self.b == F::zero() {
                return x;
            }
            -F::one() / self.b
        } else {
            let d = F::one() - self.b * x;
            if d == F::zero() {
                return F::infinity();
            }
            x / d
        };
        if m == F::zero() {
            return tip * self.h;
        }
        let r = (m * m + self.h * self.h).sqrt();
        if m < F::zero() {
            -r
        } else {
            r
        }
    }

    /// Image of a point of the extended real line (`None` is ∞).
    fn apply_real(&self, x: Option<F>) -> Option<F> {
        let m = match x {
            None if self.b == F::zero() => return None,
            None => -F::one() / self.b,
            Some(x) => {
                let d = F::one() - self.b * x;
                if d == F::zero() {
                    return None;
                }
                x / d
            }
        };
        let r = (m * m + self.h * self.h).sqrt();
        Some(if m < F::zero() { -r } else { r })
    }
}

/// `√(m² + h²)` continued analytically across the real axis; cut on `[−ih, ih]`.
#[inline]
fn sqrt_slit<F: Scalar>(m: Complex<F>, h: F) -> Complex<F> {
    if m.re == F::zero() && m.im == F::zero() {
        return Complex::new(h, F::zero());
    }
    let r = Complex::new(h, F::zero()) / m;
    m * (Complex::new(F::one(), F::zero()) + r * r).sqrt()
}

/// Inverse of [`sqrt_slit`] on the closed upper half-plane; real points of
/// `(−h, h)` land on the slit.
#[inline]
fn unslit<F: Scalar>(w: Complex<F>, h: F) -> Complex<F> {
    let i = Complex::new(F::zero(), F::one());
    if w.norm() < h {
        i * (Complex::new(h * h, F::zero()) - w * w).sqrt()
    } else {
        let r = Complex::new(h, F::zero()) / w;
        w * (Complex::new(F::one(), F::zero()) - r * r).sqrt()
    }
}

/// A built zipper map for one boundary sample sequence.
#[derive(Debug, Clone)]
pub struct Zipper<F> {
    z0: Complex<F>,
    z1: Complex<F>,
    slits: Vec<Slit<F>>,
    /// Real image of `z₀` before the final stage; `None` if still at ∞.
    tail: Option<F>,
    /// `±1` so that the interior quadrant squares onto the upper half-plane.
    sigma: F,
    /// Whether the interior lies in the first quadrant before squaring.
    interior_first_quadrant: bool,
    /// `Φ(∞)` and `d/ds Φ(1/s)` at `s = 0`.
    at_infinity: (Complex<F>, Complex<F>),
    /// Interior-side images of `z₁ … z_{n−1}` on the real axis.
    prevertices: Vec<F>,
}

/// Raised when rounding pushes a boundary point onto the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crowding {
    pub stage: usize,
}

impl<F: Scalar> Zipper<F> {
    pub fn build(points: &[Complex<F>]) -> Result<Self, Crowding> {
        let n = points.len();
        assert!(n >= 3, "zipper needs at least three boundary points");
        let z0 = points[0];
        let z1 = points[1];
        let i = Complex::new(F::zero(), F::one());

        let mut w: Vec<Complex<F>> = points[2..].iter().map(|&z| phi0(z0, z1, z)).collect();
        let mut tail: Option<F> = None;
        let mut inf = (i, i * (z0 - z1) * F::half());
        let mut slits = Vec::with_capacity(n - 2);
        // Both sides of every zipped sample, tracked along the real axis.
        let mut left = vec![F::zero()];
        let mut right = vec![F::zero()];
        for k in 0..w.len() {
            let a = w[k];
            if !(a.im > F::epsilon() * a.norm()) || !a.im.is_finite() {
                return Err(Crowding { stage: k + 2 });
            }
            let slit = Slit::through(a);
            for v in &mut w[k + 1..] {
                *v = slit.apply(*v);
            }
            for x in &mut left {
                *x = slit.apply_boundary(*x, -F::one());
            }
            for x in &mut right {
                *x = slit.apply_boundary(*x, F::one());
            }
            left.push(F::zero());
            right.push(F::zero());
            tail = slit.apply_real(tail);
            inf = slit.apply_d(inf.0, inf.1);
            slits.push(slit);
        }

        let mut zip = Self {
            z0,
            z1,
            slits,
            tail,
            sigma: F::one(),
            interior_first_quadrant: true,
            at_infinity: (Complex::new(F::zero(), F::zero()), Complex::new(F::zero(), F::zero())),
            prevertices: Vec::new(),
        };
        // ∞ is exterior; the interior is the other quadrant.
        let (u_inf, du_inf) = zip.final_mobius_d(inf.0, inf.1);
        zip.interior_first_quadrant = u_inf.re < F::zero();
        zip.sigma = if zip.interior_first_quadrant {
            F::one()
        } else {
            -F::one()
        };
        let two = F::two();
        zip.at_infinity = (u_inf * u_inf * zip.sigma, u_inf * du_inf * (two * zip.sigma));
        // The interior side is the one landing on the interior half-axis.
        let to_u = |x: F| match zip.tail {
            None => x,
            Some(t) => x / (F::one() - x / t),
        };
        let score = |v: &[F]| {
            v.iter()
                .filter(|&&x| {
                    let u = to_u(x);
                    (u > F::zero()) == zip.interior_first_quadrant && u != F::zero()
                })
                .count()
        };
        let side = if score(&left) >= score(&right) { left } else { right };
        zip.prevertices = side
            .into_iter()
            .map(|x| {
                let u = to_u(x);
                zip.sigma * u * u
            })
            .collect();
        Ok(zip)
    }

    pub fn sample_count(&self) -> usize {
        self.slits.len() + 2
    }

    /// Real `Φ`-images of `z₁ … z_{n−1}` seen from the interior; the last is 0.
    pub fn prevertices(&self) -> &[F] {
        &self.prevertices
    }

    pub fn slits(&self) -> &[Slit<F>] {
        &self.slits
    }

    pub fn tail(&self) -> Option<F> {
        self.tail
    }

    pub fn sigma(&self) -> F {
        self.sigma
    }

    /// `Φ(∞)` (in the lower half-plane) and the derivative of `s ↦ Φ(1/s)` at 0.
    pub fn at_infinity(&self) -> (Complex<F>, Complex<F>) {
        self.at_infinity
    }

    fn final_mobius_d(&self, w: Complex<F>, dw: Complex<F>) -> (Complex<F>, Complex<F>) {
        match self.tail {
            None => (w, dw),
            Some(t) => {
                let d = Complex::new(F::one(), F::zero()) - w / t;
                (w / d, dw / (d * d))
            }
        }
    }

    /// `Φ(z)`; `None` at the first sample, which maps to ∞.
    pub fn forward(&self, z: Complex<F>) -> Option<Complex<F>> {
        if z == self.z0 {
            return None;
        }
        let mut w = phi0(self.z0, self.z1, z);
        for s in &self.slits {
            w = s.apply(w);
        }
        let u = match self.tail {
            None => w,
            Some(t) => w / (Complex::new(F::one(), F::zero()) - w / t),
        };
        Some(u * u * self.sigma)
    }

    /// `Φ(z)` together with `Φ'(z)`.
    pub fn forward_d(&self, z: Complex<F>) -> Option<(Complex<F>, Complex<F>)> {
        if z == self.z0 {
            return None;
        }
        let q0 = z - self.z0;
        let q = (z - self.z1) / q0;
        let dq = (self.z0 - self.z1) * -F::one() / (q0 * q0);
        let sq = q.sqrt();
        let i = Complex::new(F::zero(), F::one());
        let mut w = i * sq;
        let mut dw = i * dq / (sq * F::two());
        for s in &self.slits {
            (w, dw) = s.apply_d(w, dw);
        }
        let (u, du) = self.final_mobius_d(w, dw);
        Some((u * u * self.sigma, u * du * (F::two() * self.sigma)))
    }

    /// `Φ⁻¹(w)` for `w` in the closed half-plane belonging to `side`.
    pub fn inverse(&self, w: Complex<F>, side: Side) -> Complex<F> {
        if !w.re.is_finite() || !w.im.is_finite() {
            return self.z0;
        }
        let r = (w * self.sigma).sqrt();
        let first = match side {
            Side::Interior => self.interior_first_quadrant,
            Side::Exterior => !self.interior_first_quadrant,
        };
        let u = if first {
            Complex::new(r.re.abs(), r.im.abs())
        } else {
            Complex::new(-r.re.abs(), r.im.abs())
        };
        let mut v = match self.tail {
            None => u,
            Some(t) => u / (Complex::new(F::one(), F::zero()) + u / t),
        };
        for s in self.slits.iter().rev() {
            v = s.invert(v);
        }
        // Undo the first stage: v = i √q.
        let q = -(v * v);
        let one = Complex::new(F::one(), F::zero());
        (self.z1 - q * self.z0) / (one - q)
    }
}

/// `i √((z − z₁)/(z − z₀))`: the plane minus the segment `[z₀, z₁]` onto ℍ.
#[inline]
fn phi0<F: Scalar>(z0: Complex<F>, z1: Complex<F>, z: Complex<F>) -> Complex<F> {
    let q = (z - z1) / (z - z0);
    Complex::new(F::zero(), F::one()) * q.sqrt()
}
