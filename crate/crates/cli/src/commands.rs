use equicenter::flow::{flow_frames, frames_to_csv, frames_to_svg, round_target};
use equicenter::io::{render_svg, CurveFile, SvgMarker, SvgPath};
use equicenter::medial::{half_reach_core, inner_offset_with_reach, minkowski_defect, reach_estimate};
use equicenter::*;
use serde_json::{json, Value};

use crate::args::{Command, DomainArgs, Kind};
use crate::input::{describe, domain, map_config};
use crate::output::{write_atomic, CliError, Envelope};
use crate::verify;

pub fn run(command: Command) -> Result<Envelope, CliError> {
    match command {
        Command::Center { domain, kind } => center(&domain, kind),
        Command::Map {
            domain,
            point,
            direction,
            eval,
            inverse,
            out,
        } => map(&domain, point, direction, &eval, inverse, out.as_deref()),
        Command::RetractPoint { domain, x, t } => retract(&domain, x, t),
        Command::Flow {
            domain,
            kind,
            frames,
            out,
        } => flow(&domain, kind, frames, out.as_deref()),
        Command::Reach { domain, out } => reach_cmd(&domain, out.as_deref()),
        Command::Offset { domain, s, out } => offset(&domain, s, out.as_deref()),
        Command::Verify {
            suite,
            trials,
            seed,
            n,
            tol,
        } => verify::run(suite, trials, seed, n, tol),
        Command::Render { domain, out } => render(&domain, &out),
    }
}

fn center_config(args: &DomainArgs) -> CenterConfig<f64> {
    CenterConfig {
        map: map_config(args),
        reach: ReachConfig::default(),
    }
}

fn center(args: &DomainArgs, kind: Option<Kind>) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let kinds: Vec<CenterKind> = match kind {
        Some(k) => vec![k.into()],
        None => CenterKind::ALL.to_vec(),
    };
    let reports = canonical_centers(&d, &kinds, &center_config(args))?;
    let residuals: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "kind": r.kind, "clearance_over_half_reach": r.clearance / (r.reach / 2.0) }))
        .collect();
    let result = match reports.as_slice() {
        [one] => serde_json::to_value(one),
        all => serde_json::to_value(all),
    }
    .map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Envelope {
        command: "center",
        result,
        residuals: Value::Array(residuals),
        config: json!({ "domain": describe(args), "kind": kind.map(CenterKind::from) }),
    })
}

fn map(
    args: &DomainArgs,
    point: Option<[f64; 2]>,
    direction: [f64; 2],
    eval: &[[f64; 2]],
    inverse: bool,
    out: Option<&std::path::Path>,
) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let p = match point {
        Some([x, y]) => Point::new(x, y),
        None => canonical_centers(&d, &[CenterKind::Centroid], &center_config(args))?[0].point,
    };
    let u = Point::new(direction[0], direction[1]);
    let f = build_interior_map(&d, p, u, &map_config(args))?;
    let dir = if inverse {
        Direction::Inverse
    } else {
        Direction::Forward
    };
    let values = eval
        .iter()
        .map(|&[x, y]| {
            let z = Point::new(x, y);
            Ok(json!({ "at": [x, y], "value": f.evaluate(z, dir)? }))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let diag = f.diagnostics();
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&diag).map_err(|e| CliError::Internal(e.to_string()))?;
        write_atomic(path, &text)?;
    }
    let dv = f.center_derivative();
    let angle = (dv.im.atan2(dv.re) - u.y.atan2(u.x)).rem_euclid(std::f64::consts::TAU);
    Ok(Envelope {
        command: "map",
        result: json!({
            "center_value": f.center_value(),
            "center_derivative": [dv.re, dv.im],
            "samples": f.sample_count(),
            "values": values,
        }),
        residuals: json!({
            "boundary_defect": f.boundary_defect(),
            "center_error": f.center_value().distance(p),
            "direction_error": angle.min(std::f64::consts::TAU - angle),
        }),
        config: json!({
            "domain": describe(args),
            "point": p,
            "direction": direction,
            "inverse": inverse,
        }),
    })
}

fn retract(args: &DomainArgs, x: [f64; 2], t: f64) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let ctx = RetractionContext::new(&d, &map_config(args))?;
    let y = ctx.retract_point(Point::new(x[0], x[1]), t)?;
    let at = d.locate(y, 1e-9 * d.diameter());
    Ok(Envelope {
        command: "retract-point",
        result: json!({ "point": y, "region": format!("{:?}", at.region).to_lowercase() }),
        residuals: json!({ "signed_distance": at.signed_distance }),
        config: json!({ "domain": describe(args), "x": x, "t": t }),
    })
}

fn flow(args: &DomainArgs, kind: Kind, n: usize, out: Option<&std::path::Path>) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let cfg = center_config(args);
    let frames = flow_frames(&d, kind.into(), n, &cfg)?;
    let c = canonical_centers(&d, &[kind.into()], &cfg)?[0].point;
    let target = round_target(&d, c);
    let last = frames.last().expect("at least four frames");
    let target_curve = JordanCurve::build(&target.sample(512), &CurveConfig::default())?;
    let gap = |a: &Curve, b: &Curve| JordanDomain::new(a.clone()).hausdorff(&JordanDomain::new(b.clone()));
    if let Some(path) = out {
        let is_svg = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("svg"));
        let text = if is_svg {
            frames_to_svg(&frames)
        } else {
            frames_to_csv(&frames)
        };
        write_atomic(path, &text)?;
    }
    let times: Vec<f64> = frames.iter().map(|f| f.time).collect();
    Ok(Envelope {
        command: "flow",
        result: json!({
            "frames": frames.len(),
            "center": c,
            "target_radius": target.radius,
            "times": times,
        }),
        residuals: json!({
            "first_frame_gap": gap(&frames[0].curve, d.boundary()) / d.diameter(),
            "last_frame_gap": gap(&last.curve, &target_curve) / d.diameter(),
        }),
        config: json!({ "domain": describe(args), "kind": CenterKind::from(kind), "frames": n }),
    })
}

fn reach_cmd(args: &DomainArgs, out: Option<&std::path::Path>) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let cfg = ReachConfig::default();
    let est = reach_estimate(&d, &cfg);
    let axis = medial_axis(&d, cfg.samples)?;
    if let Some(path) = out {
        write_atomic(path, &axis.to_csv())?;
    }
    Ok(Envelope {
        command: "reach",
        result: json!({
            "reach": est.reach,
            "medial_distance": est.medial_distance,
            "curvature_cap": est.curvature_cap,
            "medial_vertices": axis.vertices.len(),
        }),
        residuals: json!({}),
        config: json!({ "domain": describe(args), "medial_samples": cfg.samples }),
    })
}

fn offset(args: &DomainArgs, s: Option<f64>, out: Option<&std::path::Path>) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let r = reach(&d);
    let s = s.unwrap_or(r / 2.0);
    if !(s > 0.0 && s.is_finite()) {
        return Err(CliError::Invalid("--s must be positive".into()));
    }
    let inner = inner_offset_with_reach(&d, s, r)?;
    let defect = minkowski_defect(&d, &inner, s)?;
    if let Some(path) = out {
        let file = CurveFile::from_points(inner.boundary().samples());
        let text = serde_json::to_string(&file).map_err(|e| CliError::Internal(e.to_string()))?;
        write_atomic(path, &text)?;
    }
    Ok(Envelope {
        command: "offset",
        result: json!({
            "s": s,
            "reach": r,
            "area": inner.area(),
            "samples": inner.boundary().len(),
            "convex": inner.is_convex(),
        }),
        residuals: json!({ "reconstruction": defect / d.diameter() }),
        config: json!({ "domain": describe(args) }),
    })
}

fn render(args: &DomainArgs, out: &std::path::Path) -> Result<Envelope, CliError> {
    let d = domain(args)?;
    let cfg = center_config(args);
    let r = reach(&d);
    let core = half_reach_core(&d, r)?;
    let reports = canonical_centers(&d, &CenterKind::ALL, &cfg)?;
    let path = |c: &Curve, stroke: &str, opacity: f64| SvgPath {
        points: c.polyline(4),
        closed: true,
        stroke: stroke.into(),
        opacity,
    };
    let paths = [
        path(d.boundary(), "#000000", 1.0),
        path(core.boundary(), "#1f5fa8", 0.6),
    ];
    let mut markers = Vec::new();
    for rep in &reports {
        markers.push(SvgMarker {
            at: rep.classical,
            fill: "#b8451f".into(),
            label: Some(format!("f {}", rep.kind)),
        });
        markers.push(SvgMarker {
            at: rep.point,
            fill: "#2a8a3a".into(),
            label: Some(format!("c {}", rep.kind)),
        });
    }
    let frame = circumscribing_circle(&d);
    let all: Vec<Point> = d
        .boundary()
        .samples()
        .iter()
        .copied()
        .chain(markers.iter().map(|m| m.at))
        .collect();
    let view = if all.iter().all(|p| frame.contains(*p, 1e-12)) {
        frame
    } else {
        min_enclosing_circle(&all)
    };
    write_atomic(out, &render_svg(&view, &paths, &markers))?;
    Ok(Envelope {
        command: "render",
        result: json!({ "out": out.display().to_string(), "paths": paths.len(), "markers": markers.len() }),
        residuals: json!({}),
        config: json!({ "domain": describe(args) }),
    })
}
