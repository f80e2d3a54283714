use std::fs;

use equicenter::io::CurveFile;
use equicenter::{Domain, JordanDomain, MapConfig, Point, Shape};
use serde_json::{json, Value};

use crate::args::DomainArgs;
use crate::output::CliError;

/// The generator selected by `--shape` and its parameters.
pub fn shape(args: &DomainArgs) -> Result<Shape, CliError> {
    let name = args.shape.as_deref().unwrap_or_default();
    let base = Shape::fixture(name).ok_or_else(|| CliError::Invalid(format!("unknown shape {name:?}")))?;
    let given = [("r", args.r), ("a", args.a), ("b", args.b), ("k", args.k)];
    let allowed: &[&str] = match base {
        Shape::Circle { .. } => &["r"],
        Shape::Ellipse { .. } => &["a", "b"],
        Shape::Egg { .. } => &["a", "b", "k"],
        Shape::LuneSmoothed | Shape::Blob => &[],
    };
    for (flag, v) in given {
        if let Some(v) = v {
            if !allowed.contains(&flag) {
                return Err(CliError::Invalid(format!("--{flag} does not apply to {}", base.name())));
            }
            if !v.is_finite() || (flag != "k" && v <= 0.0) {
                return Err(CliError::Invalid(format!("--{flag} must be a positive number")));
            }
        }
    }
    Ok(match base {
        Shape::Circle { r } => Shape::Circle { r: args.r.unwrap_or(r) },
        Shape::Ellipse { a, b } => Shape::Ellipse {
            a: args.a.unwrap_or(a),
            b: args.b.unwrap_or(b),
        },
        Shape::Egg { a, b, k } => Shape::Egg {
            a: args.a.unwrap_or(a),
            b: args.b.unwrap_or(b),
            k: args.k.unwrap_or(k),
        },
        other => other,
    })
}

pub fn domain(args: &DomainArgs) -> Result<Domain, CliError> {
    if args.n < 16 {
        return Err(CliError::Invalid(format!("--n must be at least 16, got {}", args.n)));
    }
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(CliError::Invalid("--tol must be positive".into()));
    }
    match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let pts = CurveFile::parse(&text)?.points()?;
            Ok(JordanDomain::from_samples(&pts)?)
        }
        None => Ok(shape(args)?.domain(Point::new(args.at[0], args.at[1]), args.n)?),
    }
}

pub fn map_config(args: &DomainArgs) -> MapConfig<f64> {
    MapConfig {
        tol: args.tol,
        samples: args.n,
        max_samples: args.n.max(4096),
    }
}

/// The input part of the `config` block of the output.
pub fn describe(args: &DomainArgs) -> Value {
    let source = match (&args.input, shape(args)) {
        (Some(p), _) => json!({ "file": p.display().to_string() }),
        (None, Ok(s)) => json!({ "shape": s, "at": args.at }),
        (None, Err(_)) => Value::Null,
    };
    json!({ "input": source, "n": args.n, "tol": args.tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Cli;
    use clap::Parser;

    fn parse(extra: &[&str]) -> DomainArgs {
        let mut argv = vec!["equicenter", "reach"];
        argv.extend_from_slice(extra);
        match Cli::parse_from(argv).command {
            crate::args::Command::Reach { domain, .. } => domain,
            _ => unreachable!(),
        }
    }

    #[test]
    fn parameters_override_the_fixture() {
        assert_eq!(
            shape(&parse(&["--shape", "ellipse", "--b", "0.5"])).unwrap(),
            Shape::Ellipse { a: 2.0, b: 0.5 }
        );
        assert_eq!(shape(&parse(&["--shape", "circle"])).unwrap(), Shape::Circle { r: 1.0 });
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(shape(&parse(&["--shape", "blob", "--r", "2"])).is_err());
        assert!(shape(&parse(&["--shape", "circle", "--r", "-1"])).is_err());
        assert!(shape(&parse(&["--shape", "square"])).is_err());
        assert!(domain(&parse(&["--shape", "circle", "--n", "8"])).is_err());
    }
}
