use equicenter::{canonical_center, reach, CenterKind, JordanDomain, Point2, Shape};

#[test]
fn ellipse_in_f32() {
    let d: JordanDomain<f32> = Shape::Ellipse { a: 2.0, b: 1.0 }
        .domain(Point2::new(1.0, -1.0), 256)
        .unwrap();
    assert!((d.area() - 2.0 * std::f32::consts::PI).abs() < 1e-3);
    assert!((reach(&d) - 0.5).abs() < 0.02);
    let c = canonical_center(&d, CenterKind::Steiner).unwrap();
    assert!(c.point.distance(Point2::new(1.0, -1.0)) < 1e-3, "{:?}", c.point);
}
