//! Independent oracles on dense polygons; nothing here calls the spline code.
#![allow(dead_code)]

use equicenter::{Point2, Shape};

pub type P = [f64; 2];

pub fn dense(shape: &str, n: usize) -> Vec<P> {
    Shape::fixture(shape)
        .unwrap()
        .samples::<f64>(Point2::origin(), n)
        .into_iter()
        .map(|p| [p.x, p.y])
        .collect()
}

/// Area and centroid of a closed polygon.
pub fn shoelace(poly: &[P]) -> (f64, P) {
    let n = poly.len();
    let (mut a, mut cx, mut cy) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let [x0, y0] = poly[i];
        let [x1, y1] = poly[(i + 1) % n];
        let c = x0 * y1 - x1 * y0;
        a += c;
        cx += (x0 + x1) * c;
        cy += (y0 + y1) * c;
    }
    let a = a / 2.0;
    (a, [cx / (6.0 * a), cy / (6.0 * a)])
}

/// Even-odd crossing test.
pub fn inside(poly: &[P], p: P) -> bool {
    let n = poly.len();
    let mut c = false;
    for i in 0..n {
        let [x0, y0] = poly[i];
        let [x1, y1] = poly[(i + 1) % n];
        if (y0 > p[1]) != (y1 > p[1]) {
            let x = x0 + (p[1] - y0) * (x1 - x0) / (y1 - y0);
            if x > p[0] {
                c = !c;
            }
        }
    }
    c
}

pub fn seg_dist(p: P, a: P, b: P) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let l2 = dx * dx + dy * dy;
    let t = if l2 > 0.0 {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / l2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    ((p[0] - a[0] - t * dx).powi(2) + (p[1] - a[1] - t * dy).powi(2)).sqrt()
}

pub fn poly_dist(poly: &[P], p: P) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| seg_dist(p, poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Positive inside, negative outside.
pub fn signed_dist(poly: &[P], p: P) -> f64 {
    let d = poly_dist(poly, p);
    if inside(poly, p) {
        d
    } else {
        -d
    }
}

/// Symmetric Hausdorff distance between two closed polylines, vertices against segments.
pub fn hausdorff(a: &[P], b: &[P]) -> f64 {
    let one = |a: &[P], b: &[P]| a.iter().map(|&p| poly_dist(b, p)).fold(0.0, f64::max);
    one(a, b).max(one(b, a))
}

/// Inward unit normal of a counterclockwise polygon at vertex `i`.
pub fn inward_normal(poly: &[P], i: usize) -> P {
    let n = poly.len();
    let a = poly[(i + n - 1) % n];
    let b = poly[(i + 1) % n];
    let (tx, ty) = (b[0] - a[0], b[1] - a[1]);
    let l = tx.hypot(ty);
    [-ty / l, tx / l]
}

/// Largest radius of a circle tangent at a vertex and containing no other
/// vertex in its interior, minimized over vertices.
pub fn tangent_circle_reach(poly: &[P]) -> f64 {
    let n = poly.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let nv = inward_normal(poly, i);
        let x = poly[i];
        for (j, y) in poly.iter().enumerate() {
            if j == i {
                continue;
            }
            let (dx, dy) = (y[0] - x[0], y[1] - x[1]);
            let h = dx * nv[0] + dy * nv[1];
            if h > 0.0 {
                best = best.min((dx * dx + dy * dy) / (2.0 * h));
            }
        }
    }
    best
}

/// Sorted `x` where the horizontal line at `y` crosses the polygon.
pub fn crossings(poly: &[P], y: f64) -> Vec<f64> {
    let n = poly.len();
    let mut xs = Vec::new();
    for i in 0..n {
        let [x0, y0] = poly[i];
        let [x1, y1] = poly[(i + 1) % n];
        if (y0 > y) != (y1 > y) {
            xs.push(x0 + (y - y0) * (x1 - x0) / (y1 - y0));
        }
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs
}

pub fn bbox(poly: &[P]) -> (P, P) {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in poly {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    (lo, hi)
}
