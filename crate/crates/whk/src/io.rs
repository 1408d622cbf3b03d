//! JSON interchange: structure constants, coactions, actions, data and
//! modules, with exact scalar strings.
//!
//! Scalars are serialized as decimal-integer or `"p/q"` strings (lowest
//! terms, positive denominator); prime-field scalars are residue strings.
//! Coaction matrices are `(dim H · dim A) × dim A` with the H factor
//! major for left coactions (A major for right ones); action tensors are
//! `dim C × dim H × dim C` nested arrays. Components of composite files
//! may be given inline or as `{"path": "..."}` references.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use weakhopf::comodact::{ActionSide, CoactionSide, WeakAction, WeakCoaction};
use weakhopf::doihopf::{build_datum, DatumSide, DoiHopfDatum, DoiHopfModule};
use weakhopf::double::YetterDrinfeldModule;
use weakhopf::hopfcore::{StructureConstants, WeakBialgebra, WeakHopfAlgebra};
use weakhopf::kernel::{FieldSpec, LinMap, Scalar, Tensor};

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
pub struct FieldJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StructureJson {
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub comult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<String>>>,
}

/// A component given inline or as a file reference.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Component<T> {
    Path { path: String },
    Inline(T),
}

#[derive(Debug, Deserialize)]
pub struct CoactionJson {
    pub side: String,
    pub h: Component<StructureJson>,
    pub a: Component<StructureJson>,
    pub rho: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct ActionJson {
    pub side: String,
    pub h: Component<StructureJson>,
    pub c: Component<StructureJson>,
    pub act: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
pub struct DatumJson {
    pub side: String,
    pub h: Component<StructureJson>,
    pub a: Component<StructureJson>,
    pub c: Component<StructureJson>,
    pub rho: Vec<Vec<String>>,
    pub act: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
pub struct ModuleJson {
    pub datum: Component<DatumJson>,
    pub dim: usize,
    pub action: Vec<Vec<Vec<String>>>,
    pub coaction: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct YdJson {
    pub h: Component<StructureJson>,
    pub dim: usize,
    pub action: Vec<Vec<Vec<String>>>,
    pub coaction: Vec<Vec<String>>,
}

pub fn parse_field(f: &FieldJson) -> Result<FieldSpec, CliError> {
    match f.kind.as_str() {
        "rational" | "rationals" => Ok(FieldSpec::Rationals),
        "prime" => {
            let p = f.p.ok_or_else(|| CliError::input("prime field needs p"))?;
            FieldSpec::prime(p).map_err(|e| CliError::input(format!("{e}")))
        }
        other => Err(CliError::input(format!("unknown field kind {other:?}"))),
    }
}

pub fn field_to_json(field: FieldSpec) -> FieldJson {
    match field {
        FieldSpec::Rationals => FieldJson {
            kind: "rational".into(),
            p: None,
        },
        FieldSpec::Prime(p) => FieldJson {
            kind: "prime".into(),
            p: Some(p as u64),
        },
    }
}

fn parse_scalar(field: FieldSpec, s: &str) -> Result<Scalar, CliError> {
    Scalar::parse(field, s).map_err(|e| CliError::input(format!("{e}")))
}

fn parse_vector(field: FieldSpec, v: &[String], len: usize) -> Result<Vec<Scalar>, CliError> {
    if v.len() != len {
        return Err(CliError::input(format!(
            "vector of length {}, expected {len}",
            v.len()
        )));
    }
    v.iter().map(|s| parse_scalar(field, s)).collect()
}

fn parse_cube(
    field: FieldSpec,
    t: &[Vec<Vec<String>>],
    shape: [usize; 3],
) -> Result<Tensor, CliError> {
    let mut out = Tensor::zeros(field, &shape);
    if t.len() != shape[0] {
        return Err(CliError::input("tensor first axis has wrong length"));
    }
    for (i, plane) in t.iter().enumerate() {
        if plane.len() != shape[1] {
            return Err(CliError::input("tensor second axis has wrong length"));
        }
        for (j, row) in plane.iter().enumerate() {
            if row.len() != shape[2] {
                return Err(CliError::input("tensor third axis has wrong length"));
            }
            for (k, s) in row.iter().enumerate() {
                out.set(&[i, j, k], parse_scalar(field, s)?);
            }
        }
    }
    Ok(out)
}

fn parse_matrix(
    field: FieldSpec,
    m: &[Vec<String>],
    rows: usize,
    cols: usize,
) -> Result<LinMap, CliError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(CliError::input(format!(
            "matrix of shape {}x{:?}, expected {rows}x{cols}",
            m.len(),
            m.first().map(|r| r.len()).unwrap_or(0)
        )));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in m {
        for s in row {
            entries.push(parse_scalar(field, s)?);
        }
    }
    let t = Tensor::from_entries(field, &[rows, cols], entries)
        .map_err(|e| CliError::input(format!("{e}")))?;
    LinMap::from_matrix(t).map_err(|e| CliError::input(format!("{e}")))
}

fn cube_to_json(t: &Tensor) -> Vec<Vec<Vec<String>>> {
    let s = t.shape();
    (0..s[0])
        .map(|i| {
            (0..s[1])
                .map(|j| (0..s[2]).map(|k| t.get(&[i, j, k]).to_string()).collect())
                .collect()
        })
        .collect()
}

pub fn matrix_to_json(m: &LinMap) -> Vec<Vec<String>> {
    (0..m.codomain_dim())
        .map(|i| {
            (0..m.domain_dim())
                .map(|j| m.entry(i, j).to_string())
                .collect()
        })
        .collect()
}

pub fn constants_to_json(sc: &StructureConstants, basis: Option<Vec<String>>) -> StructureJson {
    StructureJson {
        field: field_to_json(sc.field),
        dim: sc.dim,
        basis: basis.unwrap_or_else(|| (0..sc.dim).map(|i| format!("e{i}")).collect()),
        unit: sc.unit.iter().map(|s| s.to_string()).collect(),
        mult: cube_to_json(&sc.mult),
        comult: cube_to_json(&sc.comult),
        counit: sc.counit.iter().map(|s| s.to_string()).collect(),
        antipode: sc.antipode.as_ref().map(matrix_to_json),
    }
}

pub fn json_to_constants(
    j: &StructureJson,
    max_dim: usize,
) -> Result<StructureConstants, CliError> {
    let field = parse_field(&j.field)?;
    let n = j.dim;
    if n > max_dim {
        return Err(CliError::input(format!(
            "dimension {n} exceeds --max-dim {max_dim}"
        )));
    }
    if j.basis.len() != n {
        return Err(CliError::input("basis names do not match dim"));
    }
    Ok(StructureConstants {
        field,
        dim: n,
        mult: parse_cube(field, &j.mult, [n, n, n])?,
        unit: parse_vector(field, &j.unit, n)?,
        comult: parse_cube(field, &j.comult, [n, n, n])?,
        counit: parse_vector(field, &j.counit, n)?,
        antipode: match &j.antipode {
            Some(m) => Some(parse_matrix(field, m, n, n)?),
            None => None,
        },
    })
}

/// Reads a JSON file of any deserializable shape, reporting parse errors
/// with their position.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: malformed JSON: {e}", path.display())))
}

pub fn resolve<T: for<'de> Deserialize<'de>>(
    c: Component<T>,
    base_dir: &Path,
) -> Result<T, CliError> {
    match c {
        Component::Inline(t) => Ok(t),
        Component::Path { path } => {
            let mut p = PathBuf::from(&path);
            if p.is_relative() {
                p = base_dir.join(p);
            }
            read_json(&p)
        }
    }
}

pub struct LoadedCoaction {
    pub coaction: WeakCoaction,
}

pub fn load_coaction(
    j: CoactionJson,
    base_dir: &Path,
    max_dim: usize,
) -> Result<LoadedCoaction, CliError> {
    let h_json = resolve(j.h, base_dir)?;
    let a_json = resolve(j.a, base_dir)?;
    let h = wba_from_json(&h_json, max_dim)?;
    let a_sc = json_to_constants(&a_json, max_dim)?;
    let algebra = weakhopf::hopfcore::AlgebraData::new(a_sc.field, a_sc.mult, a_sc.unit)
        .map_err(|e| CliError::input(format!("algebra part invalid: {e}")))?;
    let side = match j.side.as_str() {
        "left" => CoactionSide::Left,
        "right" => CoactionSide::Right,
        other => return Err(CliError::input(format!("unknown coaction side {other:?}"))),
    };
    let rho = parse_matrix(
        algebra.field(),
        &j.rho,
        h.dim() * algebra.dim(),
        algebra.dim(),
    )?;
    let coaction = WeakCoaction::new(side, h, algebra, rho)
        .map_err(|e| CliError::input(format!("{e}")))?;
    Ok(LoadedCoaction { coaction })
}

pub fn load_action(j: ActionJson, base_dir: &Path, max_dim: usize) -> Result<WeakAction, CliError> {
    let h_json = resolve(j.h, base_dir)?;
    let c_json = resolve(j.c, base_dir)?;
    let h = wba_from_json(&h_json, max_dim)?;
    let c_sc = json_to_constants(&c_json, max_dim)?;
    let coalgebra = weakhopf::hopfcore::CoalgebraData::new(c_sc.field, c_sc.comult, c_sc.counit)
        .map_err(|e| CliError::input(format!("coalgebra part invalid: {e}")))?;
    let side = match j.side.as_str() {
        "left" => ActionSide::Left,
        "right" => ActionSide::Right,
        other => return Err(CliError::input(format!("unknown action side {other:?}"))),
    };
    let act = parse_cube(
        coalgebra.field(),
        &j.act,
        [coalgebra.dim(), h.dim(), coalgebra.dim()],
    )?;
    WeakAction::new(side, h, coalgebra, act).map_err(|e| CliError::input(format!("{e}")))
}

pub fn load_datum(
    j: DatumJson,
    base_dir: &Path,
    max_dim: usize,
) -> Result<DoiHopfDatum, CliError> {
    let side = match j.side.as_str() {
        "right" => DatumSide::Right,
        "left" => DatumSide::Left,
        other => return Err(CliError::input(format!("unknown datum side {other:?}"))),
    };
    let (co_side, act_side) = match side {
        DatumSide::Right => ("left", "right"),
        DatumSide::Left => ("right", "left"),
    };
    let h_json = resolve(j.h, base_dir)?;
    let coaction = load_coaction(
        CoactionJson {
            side: co_side.into(),
            h: Component::Inline(reparse(&h_json)?),
            a: j.a,
            rho: j.rho,
        },
        base_dir,
        max_dim,
    )?
    .coaction;
    let action = load_action(
        ActionJson {
            side: act_side.into(),
            h: Component::Inline(h_json),
            c: j.c,
            act: j.act,
        },
        base_dir,
        max_dim,
    )?;
    build_datum(coaction, action, side).map_err(|e| CliError::check(format!("{e}")))
}

/// Clones a structure JSON through serialization (the type is not Clone
/// because of the untagged component enum it nests into).
fn reparse(j: &StructureJson) -> Result<StructureJson, CliError> {
    let text = serde_json::to_string(j).map_err(|e| CliError::input(format!("{e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{e}")))
}

pub fn load_module(
    j: ModuleJson,
    base_dir: &Path,
    max_dim: usize,
) -> Result<DoiHopfModule, CliError> {
    let datum_json = resolve(j.datum, base_dir)?;
    let datum = load_datum(datum_json, base_dir, max_dim)?;
    let field = datum.bialgebra().field();
    let action = parse_cube(field, &j.action, [j.dim, datum.algebra().dim(), j.dim])?;
    let coaction = parse_matrix(field, &j.coaction, datum.coalgebra().dim() * j.dim, j.dim)?;
    DoiHopfModule::new(datum, j.dim, action, coaction)
        .map_err(|e| CliError::input(format!("{e}")))
}

pub fn load_yd(
    j: YdJson,
    base_dir: &Path,
    max_dim: usize,
) -> Result<(YetterDrinfeldModule, Option<WeakHopfAlgebra>), CliError> {
    let h_json = resolve(j.h, base_dir)?;
    let sc = json_to_constants(&h_json, max_dim)?;
    let (wba, wha) = if sc.antipode.is_some() {
        let wha =
            WeakHopfAlgebra::from_constants(&sc).map_err(|e| CliError::check(format!("{e}")))?;
        (wha.wba().clone(), Some(wha))
    } else {
        (
            WeakBialgebra::from_constants(&sc).map_err(|e| CliError::check(format!("{e}")))?,
            None,
        )
    };
    let field = wba.field();
    let action = parse_cube(field, &j.action, [j.dim, wba.dim(), j.dim])?;
    let coaction = parse_matrix(field, &j.coaction, wba.dim() * j.dim, j.dim)?;
    Ok((
        YetterDrinfeldModule::new(wba, j.dim, action, coaction),
        wha,
    ))
}

pub fn wba_from_json(j: &StructureJson, max_dim: usize) -> Result<WeakBialgebra, CliError> {
    let sc = json_to_constants(j, max_dim)?;
    WeakBialgebra::from_constants(&sc).map_err(|e| CliError::check(format!("{e}")))
}

pub fn wha_from_json(j: &StructureJson, max_dim: usize) -> Result<WeakHopfAlgebra, CliError> {
    let sc = json_to_constants(j, max_dim)?;
    if sc.antipode.is_none() {
        return Err(CliError::input("structure has no antipode"));
    }
    WeakHopfAlgebra::from_constants(&sc).map_err(|e| CliError::check(format!("{e}")))
}

/// Emits a module (with its datum inline) as JSON.
pub fn module_to_json(m: &DoiHopfModule) -> serde_json::Value {
    let d = &m.datum;
    let side = match d.side() {
        DatumSide::Right => "right",
        DatumSide::Left => "left",
    };
    let h_sc = d.bialgebra().constants();
    serde_json::json!({
        "datum": {
            "side": side,
            "h": constants_to_json(&h_sc, None),
            "a": algebra_only_json(d.algebra()),
            "c": coalgebra_only_json(d.coalgebra()),
            "rho": matrix_to_json(&d.coaction().rho),
            "act": cube_to_json(&d.action().act),
        },
        "dim": m.dim,
        "action": cube_to_json(&m.action),
        "coaction": matrix_to_json(&m.coaction),
    })
}

/// A structure JSON carrying only algebra data (coalgebra tensors zero).
pub fn algebra_only_json(a: &weakhopf::hopfcore::AlgebraData) -> StructureJson {
    let n = a.dim();
    StructureJson {
        field: field_to_json(a.field()),
        dim: n,
        basis: (0..n).map(|i| format!("e{i}")).collect(),
        unit: a.unit().iter().map(|s| s.to_string()).collect(),
        mult: cube_to_json(a.mult()),
        comult: cube_to_json(&Tensor::zeros(a.field(), &[n, n, n])),
        counit: vec![Scalar::zero(a.field()).to_string(); n],
        antipode: None,
    }
}

/// A structure JSON carrying only coalgebra data (algebra tensors zero,
/// except a formal unit so the shape stays uniform).
pub fn coalgebra_only_json(c: &weakhopf::hopfcore::CoalgebraData) -> StructureJson {
    let n = c.dim();
    StructureJson {
        field: field_to_json(c.field()),
        dim: n,
        basis: (0..n).map(|i| format!("e{i}")).collect(),
        unit: vec![Scalar::zero(c.field()).to_string(); n],
        mult: cube_to_json(&Tensor::zeros(c.field(), &[n, n, n])),
        comult: cube_to_json(c.comult()),
        counit: c.counit().iter().map(|s| s.to_string()).collect(),
        antipode: None,
    }
}
