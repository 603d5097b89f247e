//! Canonical JSON forms for rings, coalgebras, algebras, maps, lattices and
//! simplicial sets.
//!
//! Canonical means: object keys sorted, sparse triples sorted by index,
//! coefficients as decimal strings in lowest terms (reduced into `[0, p)`
//! over `𝔽_p`), zero coefficients omitted, two-space indentation and a
//! trailing newline. Parsing a canonical file and serializing it again gives
//! the same bytes.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::coalgebra::{AlgebraPresentation, Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::ring::{parse_scalar, scalar_to_string, RingSpec, Scalar};
use crate::simplicial::{FiniteSimplicialSet, SimplicialMap};

fn perr(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| perr(format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

fn object<'a>(v: &'a Value, loc: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| perr(loc, "expected an object"))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, loc: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| perr(loc, format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, loc: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(loc, "expected an array"))
}

/// Accepts a JSON number or a decimal string.
fn uint(v: &Value, loc: &str) -> Result<u64> {
    match v {
        Value::Number(n) => n.as_u64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| perr(loc, "expected a non-negative integer"))
}

fn index(v: &Value, bound: usize, loc: &str) -> Result<usize> {
    let i = uint(v, loc)? as usize;
    if i >= bound {
        return Err(perr(loc, format!("index {i} out of range (rank {bound})")));
    }
    Ok(i)
}

fn string<'a>(v: &'a Value, loc: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| perr(loc, "expected a string"))
}

fn element(ring: &RingSpec, v: &Value, loc: &str) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(perr(loc, "expected a coefficient string")),
    };
    let x = parse_scalar(&text).ok_or_else(|| perr(loc, format!("cannot read \"{text}\" as a number")))?;
    ring.element(x).map_err(|e| perr(loc, e.to_string()))
}

fn element_json(x: &Scalar) -> Value {
    Value::String(scalar_to_string(x))
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(element_json).collect())
}

pub fn vectors_json(vs: &[Vec<Scalar>]) -> Value {
    Value::Array(vs.iter().map(|v| vector_json(v)).collect())
}

fn vector(ring: &RingSpec, v: &Value, len: usize, loc: &str) -> Result<Vec<Scalar>> {
    let a = array(v, loc)?;
    if a.len() != len {
        return Err(perr(loc, format!("expected {len} entries, found {}", a.len())));
    }
    a.iter().enumerate().map(|(i, x)| element(ring, x, &format!("{loc}[{i}]"))).collect()
}

fn names(v: Option<&Value>, len: usize, loc: &str) -> Result<Option<Vec<String>>> {
    let Some(v) = v else { return Ok(None) };
    let a = array(v, loc)?;
    if a.len() != len {
        return Err(perr(loc, format!("expected {len} names, found {}", a.len())));
    }
    a.iter().enumerate().map(|(i, x)| string(x, &format!("{loc}[{i}]")).map(str::to_string)).collect::<Result<_>>().map(Some)
}

pub fn ring_json(r: &RingSpec) -> Value {
    match r {
        RingSpec::Integers => json!({"kind": "Z"}),
        RingSpec::Rationals => json!({"kind": "Q"}),
        RingSpec::PrimeField { p } => json!({"kind": "Fp", "p": p}),
        RingSpec::Localized { inverted_primes } => json!({"kind": "ZS", "inverted_primes": inverted_primes}),
    }
}

pub fn parse_ring(v: &Value, loc: &str) -> Result<RingSpec> {
    let o = object(v, loc)?;
    let kind = string(field(o, "kind", loc)?, &format!("{loc}.kind"))?;
    let bad = |e: Error| perr(loc, e.to_string());
    match kind {
        "Z" => Ok(RingSpec::Integers),
        "Q" => Ok(RingSpec::Rationals),
        "Fp" => RingSpec::prime_field(uint(field(o, "p", loc)?, &format!("{loc}.p"))?).map_err(bad),
        "ZS" => {
            let ps = array(field(o, "inverted_primes", loc)?, &format!("{loc}.inverted_primes"))?
                .iter()
                .enumerate()
                .map(|(i, p)| uint(p, &format!("{loc}.inverted_primes[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            RingSpec::localized(&ps).map_err(bad)
        }
        other => Err(perr(format!("{loc}.kind"), format!("unknown ring kind \"{other}\""))),
    }
}

/// Parses a ring given on the command line: `Z`, `Q`, `F7`, `Fp:7`, `Z[1/2,1/3]`.
pub fn parse_ring_flag(s: &str) -> Result<RingSpec> {
    let s = s.trim();
    let bad = || perr("--ring", format!("unknown ring \"{s}\""));
    match s {
        "Z" => return Ok(RingSpec::Integers),
        "Q" => return Ok(RingSpec::Rationals),
        _ => {}
    }
    if let Some(p) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("F_")).or_else(|| s.strip_prefix('F')) {
        let p: u64 = p.parse().map_err(|_| bad())?;
        return RingSpec::prime_field(p).map_err(|e| perr("--ring", e.to_string()));
    }
    if let Some(inner) = s.strip_prefix("Z[").and_then(|r| r.strip_suffix(']')) {
        let ps = inner
            .split(',')
            .map(|t| t.trim().strip_prefix("1/").and_then(|p| p.parse::<u64>().ok()).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        return RingSpec::localized(&ps).map_err(|e| perr("--ring", e.to_string()));
    }
    Err(bad())
}

/// Sorted nonzero `[i, j, k, "c"]` entries of an `n × n²` or `n² × n` table.
fn triples(m: &Matrix, n: usize, rows_are_pairs: bool) -> Value {
    let mut out = BTreeMap::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let x = &m[(r, c)];
            if x.is_zero() {
                continue;
            }
            let key = if rows_are_pairs { (r / n, r % n, c) } else { (r, c / n, c % n) };
            out.insert(key, x.clone());
        }
    }
    Value::Array(out.into_iter().map(|((i, j, k), x)| json!([i, j, k, scalar_to_string(&x)])).collect())
}

fn parse_triples(ring: &RingSpec, v: &Value, n: usize, rows_are_pairs: bool, loc: &str) -> Result<Matrix> {
    let mut m = if rows_are_pairs { Matrix::zeros(n * n, n) } else { Matrix::zeros(n, n * n) };
    let mut seen = std::collections::HashSet::new();
    for (t, entry) in array(v, loc)?.iter().enumerate() {
        let at = format!("{loc}[{t}]");
        let e = array(entry, &at)?;
        if e.len() != 4 {
            return Err(perr(&at, "expected [i, j, k, \"coeff\"]"));
        }
        let i = index(&e[0], n, &format!("{at}[0]"))?;
        let j = index(&e[1], n, &format!("{at}[1]"))?;
        let k = index(&e[2], n, &format!("{at}[2]"))?;
        if !seen.insert((i, j, k)) {
            return Err(perr(&at, format!("duplicate entry ({i}, {j}, {k})")));
        }
        let x = element(ring, &e[3], &format!("{at}[3]"))?;
        if rows_are_pairs {
            m[(i * n + j, k)] = x;
        } else {
            m[(i, j * n + k)] = x;
        }
    }
    Ok(m)
}

fn with_names(mut o: Map<String, Value>, names: Option<&[String]>) -> Value {
    if let Some(ns) = names {
        o.insert("basis_names".into(), json!(ns));
    }
    Value::Object(o)
}

pub fn coalgebra_json(c: &Coalgebra) -> Value {
    let mut o = Map::new();
    o.insert("ring".into(), ring_json(c.ring()));
    o.insert("rank".into(), json!(c.rank()));
    o.insert("delta".into(), triples(c.delta(), c.rank(), false));
    o.insert("counit".into(), vector_json(c.counit()));
    with_names(o, c.basis_names())
}

pub fn serialize_coalgebra(c: &Coalgebra) -> String {
    to_canonical_string(&coalgebra_json(c))
}

/// Reads the documented format without checking the axioms.
pub fn coalgebra_from_json_unchecked(v: &Value, loc: &str) -> Result<Coalgebra> {
    let o = object(v, loc)?;
    let ring = parse_ring(field(o, "ring", loc)?, &format!("{loc}ring"))?;
    let n = uint(field(o, "rank", loc)?, &format!("{loc}rank"))? as usize;
    let delta = parse_triples(&ring, field(o, "delta", loc)?, n, false, &format!("{loc}delta"))?;
    let counit = vector(&ring, field(o, "counit", loc)?, n, &format!("{loc}counit"))?;
    let names = names(o.get("basis_names"), n, &format!("{loc}basis_names"))?;
    Coalgebra::new_unchecked(ring, delta, counit, names)
}

pub fn coalgebra_from_json(v: &Value, loc: &str) -> Result<Coalgebra> {
    let c = coalgebra_from_json_unchecked(v, loc)?;
    let report = crate::coalgebra::validate_coalgebra(&c);
    if report.overall() {
        Ok(c)
    } else {
        Err(Error::Validation(report))
    }
}

pub fn parse_coalgebra_unchecked(text: &str) -> Result<Coalgebra> {
    coalgebra_from_json_unchecked(&parse_json(text)?, "")
}

/// Parses and validates; axiom failures come back as `Error::Validation`.
pub fn parse_coalgebra(text: &str) -> Result<Coalgebra> {
    coalgebra_from_json(&parse_json(text)?, "")
}

pub fn algebra_json(a: &AlgebraPresentation) -> Value {
    let mut o = Map::new();
    o.insert("ring".into(), ring_json(a.ring()));
    o.insert("rank".into(), json!(a.rank()));
    o.insert("mult".into(), triples(a.mult(), a.rank(), true));
    o.insert("unit".into(), vector_json(a.unit()));
    with_names(o, a.basis_names())
}

pub fn serialize_algebra(a: &AlgebraPresentation) -> String {
    to_canonical_string(&algebra_json(a))
}

pub fn algebra_from_json(v: &Value, loc: &str) -> Result<AlgebraPresentation> {
    let o = object(v, loc)?;
    let ring = parse_ring(field(o, "ring", loc)?, &format!("{loc}ring"))?;
    let n = uint(field(o, "rank", loc)?, &format!("{loc}rank"))? as usize;
    let mult = parse_triples(&ring, field(o, "mult", loc)?, n, true, &format!("{loc}mult"))?;
    let unit = vector(&ring, field(o, "unit", loc)?, n, &format!("{loc}unit"))?;
    let names = names(o.get("basis_names"), n, &format!("{loc}basis_names"))?;
    AlgebraPresentation::new(ring, mult, unit, names)
}

pub fn parse_algebra(text: &str) -> Result<AlgebraPresentation> {
    algebra_from_json(&parse_json(text)?, "")
}

/// Whether a document is an algebra (`mult`) rather than a coalgebra (`delta`).
pub fn is_algebra_document(v: &Value) -> bool {
    v.get("mult").is_some() && v.get("delta").is_none()
}

pub fn lattice_json(l: &Lattice) -> Value {
    json!({
        "ring": ring_json(l.ring()),
        "ambient": l.ambient_rank(),
        "basis": vectors_json(&l.basis_vectors()),
    })
}

pub fn serialize_lattice(l: &Lattice) -> String {
    to_canonical_string(&lattice_json(l))
}

/// `{"ring", "ambient", "basis"}`; the stored basis is the canonical one of the span.
pub fn lattice_from_json(v: &Value, loc: &str) -> Result<Lattice> {
    let o = object(v, loc)?;
    let ring = parse_ring(field(o, "ring", loc)?, &format!("{loc}ring"))?;
    let n = uint(field(o, "ambient", loc)?, &format!("{loc}ambient"))? as usize;
    let rows = array(field(o, "basis", loc)?, &format!("{loc}basis"))?
        .iter()
        .enumerate()
        .map(|(i, r)| vector(&ring, r, n, &format!("{loc}basis[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Lattice::from_vectors(&ring, n, &rows)
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    lattice_from_json(&parse_json(text)?, "")
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

fn matrix_from_json(ring: &RingSpec, v: &Value, rows: usize, cols: usize, loc: &str) -> Result<Matrix> {
    let a = array(v, loc)?;
    if a.len() != rows {
        return Err(perr(loc, format!("expected {rows} rows, found {}", a.len())));
    }
    let rows = a.iter().enumerate().map(|(i, r)| vector(ring, r, cols, &format!("{loc}[{i}]"))).collect::<Result<_>>()?;
    Ok(Matrix::from_rows(cols, rows))
}

pub fn map_json(f: &CoalgebraMap) -> Value {
    json!({
        "domain": coalgebra_json(f.domain()),
        "codomain": coalgebra_json(f.codomain()),
        "matrix": matrix_json(f.matrix()),
    })
}

pub fn serialize_map(f: &CoalgebraMap) -> String {
    to_canonical_string(&map_json(f))
}

/// An inline document, or a string naming a file handed to `load`.
fn resolve(v: &Value, loc: &str, load: &dyn Fn(&str) -> Result<String>) -> Result<Value> {
    match v {
        Value::String(path) => parse_json(&load(path)?).map_err(|e| match e {
            Error::Parse { location, message } => perr(format!("{path}: {location}"), message),
            other => other,
        }),
        Value::Object(_) => Ok(v.clone()),
        _ => Err(perr(loc, "expected a file name or an inline document")),
    }
}

fn no_files(path: &str) -> Result<String> {
    Err(perr(path, "file references are not available here"))
}

pub fn map_from_json(v: &Value, load: &dyn Fn(&str) -> Result<String>) -> Result<CoalgebraMap> {
    let o = object(v, "")?;
    let dom = coalgebra_from_json(&resolve(field(o, "domain", "")?, "domain", load)?, "domain.")?;
    let cod = coalgebra_from_json(&resolve(field(o, "codomain", "")?, "codomain", load)?, "codomain.")?;
    let m = matrix_from_json(dom.ring(), field(o, "matrix", "")?, dom.rank(), cod.rank(), "matrix")?;
    CoalgebraMap::checked(dom, cod, m)
}

/// Domain and codomain must be inline.
pub fn parse_map(text: &str) -> Result<CoalgebraMap> {
    map_from_json(&parse_json(text)?, &no_files)
}

pub fn parse_map_with(text: &str, load: &dyn Fn(&str) -> Result<String>) -> Result<CoalgebraMap> {
    map_from_json(&parse_json(text)?, load)
}

pub fn sset_json(x: &FiniteSimplicialSet) -> Value {
    let name = |n: usize, k: usize| x.level(n).get(k).cloned().unwrap_or_else(|| "?".to_string());
    let table = |n: usize, m: &[usize], to: usize| -> Value {
        let mut o = Map::new();
        for (k, &y) in m.iter().enumerate() {
            o.insert(name(n, k), Value::String(name(to, y)));
        }
        Value::Object(o)
    };
    let d = x.dimension();
    let faces: Vec<Value> = (1..=d)
        .flat_map(|n| (0..=n).map(move |i| (n, i)))
        .map(|(n, i)| json!({"n": n, "i": i, "map": table(n, x.face(n, i), n - 1)}))
        .collect();
    let degens: Vec<Value> = (0..d)
        .flat_map(|n| (0..=n).map(move |j| (n, j)))
        .map(|(n, j)| json!({"n": n, "j": j, "map": table(n, x.degeneracy(n, j), n + 1)}))
        .collect();
    json!({
        "dimension": d,
        "levels": (0..=d).map(|n| x.level(n).to_vec()).collect::<Vec<_>>(),
        "faces": faces,
        "degeneracies": degens,
    })
}

pub fn serialize_sset(x: &FiniteSimplicialSet) -> String {
    to_canonical_string(&sset_json(x))
}

/// Reads the shape; names that do not resolve in the target level are kept
/// as out-of-range indices so that validation can locate them.
pub fn sset_from_json_unchecked(v: &Value, loc: &str) -> Result<FiniteSimplicialSet> {
    let o = object(v, loc)?;
    let d = uint(field(o, "dimension", loc)?, &format!("{loc}dimension"))? as usize;
    let lv = array(field(o, "levels", loc)?, &format!("{loc}levels"))?;
    if lv.len() != d + 1 {
        return Err(perr(format!("{loc}levels"), format!("expected {} levels", d + 1)));
    }
    let levels: Vec<Vec<String>> = lv
        .iter()
        .enumerate()
        .map(|(n, l)| {
            array(l, &format!("{loc}levels[{n}]"))?
                .iter()
                .enumerate()
                .map(|(k, s)| string(s, &format!("{loc}levels[{n}][{k}]")).map(str::to_string))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let lookup: Vec<HashMap<&str, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect()).collect();
    let read = |key: &str, idx: &str, count: &dyn Fn(usize) -> usize, step: isize| -> Result<Vec<Vec<Vec<usize>>>> {
        let mut out: Vec<Vec<Option<Vec<usize>>>> = (0..=d).map(|n| vec![None; count(n)]).collect();
        for (t, e) in array(field(o, key, loc)?, &format!("{loc}{key}"))?.iter().enumerate() {
            let at = format!("{loc}{key}[{t}]");
            let eo = object(e, &at)?;
            let n = uint(field(eo, "n", &at)?, &format!("{at}.n"))? as usize;
            let i = uint(field(eo, idx, &at)?, &format!("{at}.{idx}"))? as usize;
            if n > d || i >= count(n) {
                return Err(perr(&at, format!("no {key} map {idx}={i} on level {n}")));
            }
            if out[n][i].is_some() {
                return Err(perr(&at, "duplicate map"));
            }
            let to = (n as isize + step) as usize;
            let table = object(field(eo, "map", &at)?, &format!("{at}.map"))?;
            let mut m = Vec::with_capacity(levels[n].len());
            for s in &levels[n] {
                let target = string(
                    table.get(s).ok_or_else(|| perr(format!("{at}.map"), format!("no image for {s}")))?,
                    &format!("{at}.map.{s}"),
                )?;
                m.push(lookup[to].get(target).copied().unwrap_or(usize::MAX));
            }
            if table.len() != levels[n].len() {
                return Err(perr(format!("{at}.map"), "entries for simplices outside the level"));
            }
            out[n][i] = Some(m);
        }
        out.into_iter()
            .enumerate()
            .map(|(n, ms)| {
                ms.into_iter()
                    .enumerate()
                    .map(|(i, m)| m.ok_or_else(|| perr(format!("{loc}{key}"), format!("missing map {idx}={i} on level {n}"))))
                    .collect()
            })
            .collect()
    };
    let faces = read("faces", "i", &|n| if n == 0 { 0 } else { n + 1 }, -1)?;
    let degens = read("degeneracies", "j", &|n| if n == d { 0 } else { n + 1 }, 1)?;
    FiniteSimplicialSet::new(d, levels, faces, degens)
}

pub fn sset_from_json(v: &Value, loc: &str) -> Result<FiniteSimplicialSet> {
    let x = sset_from_json_unchecked(v, loc)?;
    let report = crate::simplicial::validate_sset(&x);
    if report.overall() {
        Ok(x)
    } else {
        Err(Error::Validation(report))
    }
}

pub fn parse_sset_unchecked(text: &str) -> Result<FiniteSimplicialSet> {
    sset_from_json_unchecked(&parse_json(text)?, "")
}

pub fn parse_sset(text: &str) -> Result<FiniteSimplicialSet> {
    sset_from_json(&parse_json(text)?, "")
}

pub fn smap_json(f: &SimplicialMap) -> Value {
    let levels: Vec<Value> = (0..=f.source().dimension())
        .map(|n| {
            let mut o = Map::new();
            for (k, &y) in f.level(n).iter().enumerate() {
                o.insert(f.source().level(n)[k].clone(), Value::String(f.target().level(n)[y].clone()));
            }
            Value::Object(o)
        })
        .collect();
    json!({"source": sset_json(f.source()), "target": sset_json(f.target()), "levels": levels})
}

pub fn serialize_smap(f: &SimplicialMap) -> String {
    to_canonical_string(&smap_json(f))
}

/// `{"source", "target", "levels": [{name: image}, …]}`; source and target
/// inline or as file names.
pub fn smap_from_json(v: &Value, load: &dyn Fn(&str) -> Result<String>) -> Result<SimplicialMap> {
    let o = object(v, "")?;
    let x = sset_from_json(&resolve(field(o, "source", "")?, "source", load)?, "source.")?;
    let y = sset_from_json(&resolve(field(o, "target", "")?, "target", load)?, "target.")?;
    let lv = array(field(o, "levels", "")?, "levels")?;
    if lv.len() != x.dimension() + 1 {
        return Err(perr("levels", format!("expected {} levels", x.dimension() + 1)));
    }
    let mut levels = Vec::with_capacity(lv.len());
    for (n, t) in lv.iter().enumerate() {
        let at = format!("levels[{n}]");
        let t = object(t, &at)?;
        let m = x
            .level(n)
            .iter()
            .map(|s| {
                let img = string(t.get(s).ok_or_else(|| perr(&at, format!("no image for {s}")))?, &format!("{at}.{s}"))?;
                y.index_of(n, img).ok_or_else(|| perr(format!("{at}.{s}"), format!("unknown simplex {img}")))
            })
            .collect::<Result<Vec<_>>>()?;
        levels.push(m);
    }
    SimplicialMap::new(x, y, levels)
}

pub fn parse_smap_with(text: &str, load: &dyn Fn(&str) -> Result<String>) -> Result<SimplicialMap> {
    smap_from_json(&parse_json(text)?, load)
}
