//! JSON instance files, point files and builtin ids.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use gerstewitz::corpus;
use gerstewitz::parameters::{ADomain, KDomain, SweepSpec};
use gerstewitz::solver::{BuiltinCurve, DEFAULT_CURVE_DENSITY, DEFAULT_CURVE_RANGE};
use gerstewitz::{EvalOptions, FeasibleSet, GerstewitzFunctional, Halfspace, Point, ProblemInstance, SetRep};
use serde_json::Value;

/// A JSON value together with its field path, for addressed diagnostics.
struct Field<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Field<'a> {
    fn root(value: &'a Value, path: &str) -> Self {
        Field { value, path: path.to_string() }
    }

    fn get(&self, key: &str) -> Result<Field<'a>> {
        let path = join(&self.path, key);
        let value = self.value.get(key).ok_or_else(|| anyhow!("{path}: missing field"))?;
        Ok(Field { value, path })
    }

    fn opt(&self, key: &str) -> Option<Field<'a>> {
        let path = join(&self.path, key);
        self.value.get(key).filter(|v| !v.is_null()).map(|value| Field { value, path })
    }

    fn num(&self) -> Result<f64> {
        self.value.as_f64().ok_or_else(|| anyhow!("{}: expected a number", self.path))
    }

    fn count(&self) -> Result<usize> {
        self.value.as_u64().map(|n| n as usize).ok_or_else(|| anyhow!("{}: expected a nonnegative integer", self.path))
    }

    fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| anyhow!("{}: expected a string", self.path))
    }

    fn array(&self) -> Result<&'a Vec<Value>> {
        self.value.as_array().ok_or_else(|| anyhow!("{}: expected an array", self.path))
    }

    fn point(&self, dim: usize) -> Result<Point> {
        let coords = self
            .array()?
            .iter()
            .enumerate()
            .map(|(i, c)| c.as_f64().ok_or_else(|| anyhow!("{}[{i}]: expected a number", self.path)))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != dim {
            bail!("{}: expected {dim} coordinates, got {}", self.path, coords.len());
        }
        Point::new(coords).map_err(|e| anyhow!("{}: {e}", self.path))
    }

    fn points(&self, dim: usize) -> Result<Vec<Point>> {
        self.array()?
            .iter()
            .enumerate()
            .map(|(i, v)| Field { value: v, path: format!("{}[{i}]", self.path) }.point(dim))
            .collect()
    }
}

fn join(parent: &str, key: &str) -> String {
    if parent.is_empty() {
        key.to_string()
    } else {
        format!("{parent}.{key}")
    }
}

/// Options given on the command line; they override the file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub tol: Option<f64>,
    pub t_max: Option<f64>,
    pub resolution: Option<usize>,
}

impl Overrides {
    pub fn apply(&self, mut options: EvalOptions) -> EvalOptions {
        if let Some(tol) = self.tol {
            options.tol = tol;
        }
        if let Some(t_max) = self.t_max {
            options.t_max = t_max;
        }
        options
    }
}

/// Reads an instance from a JSON file, or builds a builtin example when
/// `arg` names one and no such file exists.
pub fn load_instance(arg: &str, ov: &Overrides) -> Result<ProblemInstance> {
    let path = Path::new(arg);
    let pr = if !path.exists() && corpus::ids().any(|id| id == arg) {
        corpus::instance(arg, ov.apply(EvalOptions::default()))?
    } else {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read instance file {arg}"))?;
        parse_instance(&text, ov)?
    };
    match ov.resolution {
        Some(n) => Ok(ProblemInstance::new(with_resolution(pr.f.clone(), n)?, pr.g.clone())?),
        None => Ok(pr),
    }
}

fn with_resolution(f: FeasibleSet, n: usize) -> Result<FeasibleSet> {
    Ok(match f {
        FeasibleSet::GridRegion { lo, hi, membership, .. } => FeasibleSet::grid(lo, hi, n, membership)?,
        FeasibleSet::BuiltinCurve { curve, range, .. } => FeasibleSet::curve(&curve.to_string(), range, n)?,
        other => other,
    })
}

pub fn parse_instance(text: &str, ov: &Overrides) -> Result<ProblemInstance> {
    let doc: Value = serde_json::from_str(text).context("instance is not valid JSON")?;
    let root = Field::root(&doc, "");
    let dim = root.get("dim")?.count()?;
    if dim == 0 {
        bail!("dim: must be positive");
    }
    let h = parse_set(root.get("H")?, dim)?;
    let mut options = EvalOptions::default();
    let mut grid = None;
    if let Some(o) = root.opt("options") {
        if let Some(t) = o.opt("tol") {
            options.tol = t.num()?;
        }
        if let Some(t) = o.opt("t_max") {
            options.t_max = t.num()?;
        }
        if let Some(g) = o.opt("grid") {
            grid = Some(g.count()?);
        }
    }
    let options = ov.apply(options);
    if !(options.tol > 0.0 && options.t_max > 0.0) {
        bail!("options: tol and t_max must be positive");
    }
    let f = parse_feasible(root.get("F")?, dim, grid)?;
    let a = root.get("a")?.point(dim)?;
    let k = root.get("k")?.point(dim)?;
    let g = GerstewitzFunctional::new(a, h, k)?.with_options(options);
    Ok(ProblemInstance::new(f, g)?)
}

/// An H-spec: `{kind, data}`.
fn parse_set(field: Field, dim: usize) -> Result<SetRep> {
    let kind = field.get("kind")?.str()?;
    let set = match kind {
        "orthant" => SetRep::orthant(dim),
        "halfspaces" => {
            let data = field.get("data")?;
            let rows = data
                .array()?
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let f = Field { value: row, path: format!("{}[{i}]", data.path) };
                    let normal = f.get("normal")?.point(dim)?;
                    let offset = f.get("offset")?.num()?;
                    Halfspace::new(normal, offset).map_err(|e| anyhow!("{}: {e}", f.path))
                })
                .collect::<Result<Vec<_>>>()?;
            SetRep::halfspaces(rows).map_err(|e| anyhow!("{}: {e}", data.path))?
        }
        "generators3d" => {
            if dim != 3 {
                bail!("{}: generators3d needs dim = 3", field.path);
            }
            let data = field.get("data")?;
            SetRep::generator_cone(data.points(3)?).map_err(|e| anyhow!("{}: {e}", data.path))?
        }
        "builtin" => {
            let data = field.get("data")?;
            let set = SetRep::builtin(data.str()?).map_err(|e| anyhow!("{}: {e}", data.path))?;
            if set.dim() != dim {
                bail!("{}: builtin set has dimension {}, instance has {dim}", data.path, set.dim());
            }
            set
        }
        other => {
            bail!("{}.kind: unknown kind '{other}' (expected halfspaces, orthant, generators3d or builtin)", field.path)
        }
    };
    Ok(set)
}

/// An F-spec: `{kind, data}`.
fn parse_feasible(field: Field, dim: usize, grid: Option<usize>) -> Result<FeasibleSet> {
    let kind = field.get("kind")?.str()?;
    let data = field.get("data")?;
    let f = match kind {
        "points" => FeasibleSet::finite(data.points(dim)?).map_err(|e| anyhow!("{}: {e}", data.path))?,
        "grid" => {
            let lo = data.get("lo")?.point(dim)?;
            let hi = data.get("hi")?.point(dim)?;
            let resolution = match data.opt("resolution") {
                Some(r) => r.count()?,
                None => grid.unwrap_or(20),
            };
            let membership = data.opt("membership").map(|m| parse_set(m, dim)).transpose()?;
            FeasibleSet::grid(lo, hi, resolution, membership).map_err(|e| anyhow!("{}: {e}", data.path))?
        }
        "curve" => {
            let name = data.get("name")?.str()?;
            let curve: BuiltinCurve = name.parse().map_err(|e| anyhow!("{}.name: {e}", data.path))?;
            let range = data.opt("range").map(|r| r.num()).transpose()?.unwrap_or(DEFAULT_CURVE_RANGE);
            let density = match data.opt("density") {
                Some(d) => d.count()?,
                None => grid.unwrap_or(DEFAULT_CURVE_DENSITY),
            };
            let f =
                FeasibleSet::curve(&curve.to_string(), range, density).map_err(|e| anyhow!("{}: {e}", data.path))?;
            if f.dim() != dim {
                bail!("{}.name: curve has dimension {}, instance has {dim}", data.path, f.dim());
            }
            f
        }
        other => bail!("{}.kind: unknown kind '{other}' (expected points, grid or curve)", field.path),
    };
    Ok(f)
}

/// A domination set for `eff`: `orthant`, a builtin name, or a JSON H-spec file.
pub fn load_domination(arg: &str, dim: usize) -> Result<SetRep> {
    if arg == "orthant" {
        return Ok(SetRep::orthant(dim));
    }
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(set) = SetRep::builtin(arg) {
            if set.dim() != dim {
                bail!("domination set has dimension {}, points have {dim}", set.dim());
            }
            return Ok(set);
        }
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read domination file {arg}"))?;
    let doc: Value = serde_json::from_str(&text).context("domination spec is not valid JSON")?;
    parse_set(Field::root(&doc, "D"), dim)
}

/// Points from a JSON array of arrays or from CSV rows (an optional
/// non-numeric header row is skipped).
pub fn load_points(path: &str) -> Result<Vec<Point>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read points file {path}"))?;
    if text.trim_start().starts_with('[') {
        let doc: Value = serde_json::from_str(&text).context("points file is not valid JSON")?;
        let rows = doc.as_array().ok_or_else(|| anyhow!("points: expected an array"))?;
        let dim = rows.first().and_then(|r| r.as_array()).map_or(0, |r| r.len());
        return Field::root(&doc, "points").points(dim);
    }
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut out: Vec<Point> = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.with_context(|| format!("points file line {}", line + 1))?;
        let coords: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match coords {
            Ok(c) => {
                if let Some(first) = out.first() {
                    if first.dim() != c.len() {
                        bail!("points file line {}: expected {} coordinates, got {}", line + 1, first.dim(), c.len());
                    }
                }
                out.push(Point::new(c).map_err(|e| anyhow!("points file line {}: {e}", line + 1))?);
            }
            Err(_) if line == 0 => continue,
            Err(e) => bail!("points file line {}: {e}", line + 1),
        }
    }
    Ok(out)
}

/// A point written as comma-separated coordinates.
pub fn parse_point_arg(s: &str) -> Result<Point> {
    let coords = s
        .split(',')
        .map(|c| c.trim().parse::<f64>().with_context(|| format!("--point {s}: bad coordinate '{c}'")))
        .collect::<Result<Vec<_>>>()?;
    Point::new(coords).map_err(|e| anyhow!("--point {s}: {e}"))
}

/// Sweep specification file: `{a: {...}, k: {...}}`.
pub fn load_sweep_spec(path: &str, dim: usize) -> Result<SweepSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read sweep spec {path}"))?;
    let doc: Value = serde_json::from_str(&text).context("sweep spec is not valid JSON")?;
    let root = Field::root(&doc, "");
    let a = root.get("a")?;
    let a_domain = match a.get("kind")?.str()? {
        "coordinate_zero" => ADomain::CoordinateZero {
            j: a.get("j")?.count()?,
            lo: a.get("lo")?.num()?,
            hi: a.get("hi")?.num()?,
            resolution: a.get("resolution")?.count()?,
        },
        "sum_zero" => ADomain::SumZero {
            lo: a.get("lo")?.num()?,
            hi: a.get("hi")?.num()?,
            resolution: a.get("resolution")?.count()?,
        },
        "explicit" => ADomain::Explicit(a.get("points")?.points(dim)?),
        other => bail!("a.kind: unknown kind '{other}' (expected coordinate_zero, sum_zero or explicit)"),
    };
    let k = root.get("k")?;
    let k_domain = match k.get("kind")?.str()? {
        "simplex" => KDomain::Simplex { resolution: k.get("resolution")?.count()? },
        "explicit" => KDomain::Explicit(k.get("directions")?.points(dim)?),
        other => bail!("k.kind: unknown kind '{other}' (expected simplex or explicit)"),
    };
    Ok(SweepSpec { a_domain, k_domain })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<ProblemInstance> {
        parse_instance(text, &Overrides::default())
    }

    #[test]
    fn orthant_points_instance() {
        let pr = parse(
            r#"{"dim": 2, "H": {"kind": "orthant"}, "F": {"kind": "points", "data": [[0, 0], [1, 1]]},
                "a": [-1, 0], "k": [1, 1], "options": {"tol": 1e-6}}"#,
        )
        .unwrap();
        assert_eq!(pr.g.options().tol, 1e-6);
        assert_eq!(pr.g.a(), &Point::from([-1.0, 0.0]));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let base = r#"{"dim": 2, "H": {"kind": "halfspaces", "data": [{"normal": [1, 0], "offset": 0}, {"normal": [1], "offset": 0}]},
                       "F": {"kind": "points", "data": [[0, 0]]}, "a": [0, 0], "k": [1, 1]}"#;
        let err = parse(base).unwrap_err().to_string();
        assert!(err.starts_with("H.data[1].normal: expected 2 coordinates"), "{err}");

        let err =
            parse(r#"{"dim": 2, "H": {"kind": "orthant"}, "F": {"kind": "points", "data": [[0, 0]]}, "a": [0, 0]}"#)
                .unwrap_err()
                .to_string();
        assert_eq!(err, "k: missing field");

        let err = parse(
            r#"{"dim": 2, "H": {"kind": "cube"}, "F": {"kind": "points", "data": [[0, 0]]}, "a": [0, 0], "k": [1, 1]}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.starts_with("H.kind: unknown kind 'cube'"), "{err}");
    }

    #[test]
    fn zero_direction_is_rejected() {
        let err = parse(r#"{"dim": 2, "H": {"kind": "orthant"}, "F": {"kind": "points", "data": [[0, 0]]}, "a": [0, 0], "k": [0, 0]}"#)
            .unwrap_err();
        assert_eq!(err.to_string(), "k must be nonzero");
    }

    #[test]
    fn grid_and_curve_sets() {
        let pr = parse(
            r#"{"dim": 2, "H": {"kind": "builtin", "data": "parabola_epi_2d"},
                "F": {"kind": "curve", "data": {"name": "parabola_arc_ex617", "range": 8}},
                "a": [0, 0], "k": [0, 1], "options": {"grid": 11}}"#,
        )
        .unwrap();
        assert!(matches!(pr.f, FeasibleSet::BuiltinCurve { range, density: 11, .. } if range == 8.0));

        let pr = parse(
            r#"{"dim": 2, "H": {"kind": "orthant"},
                "F": {"kind": "grid", "data": {"lo": [0, 0], "hi": [1, 1], "membership": {"kind": "halfspaces", "data": [{"normal": [-1, -1], "offset": -1}]}}},
                "a": [0, 0], "k": [1, 1], "options": {"grid": 5}}"#,
        )
        .unwrap();
        assert!(matches!(pr.f, FeasibleSet::GridRegion { resolution: 5, membership: Some(_), .. }));
    }

    #[test]
    fn cli_overrides_win() {
        let ov = Overrides { tol: Some(1e-3), t_max: None, resolution: None };
        let pr = parse_instance(
            r#"{"dim": 1, "H": {"kind": "orthant"}, "F": {"kind": "points", "data": [[2]]}, "a": [0], "k": [1], "options": {"tol": 1e-6}}"#,
            &ov,
        )
        .unwrap();
        assert_eq!(pr.g.options().tol, 1e-3);
    }
}
