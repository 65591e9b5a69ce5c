//! JSON encodings of the library types.
//!
//! Integers that can grow without bound (series coefficients, counts) are
//! written as decimal strings. Rationals are written as strings like `"-19/2"`.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use wallcross_core::diagrams::{Character, JSequence, Tableau, YoungDiagram};
use wallcross_core::flip::{BlockLabel, ResolutionStep};
use wallcross_core::interval::Interval;
use wallcross_core::quiver::{DimVec, ExtQuiverData, Wall, WallFamily};
use wallcross_core::series::Series2;
use wallcross_core::windows::{TwistDescriptor, WindowCertificate};

pub fn diagram(d: &YoungDiagram) -> Value {
    json!(d.rows())
}

pub fn character(c: &Character) -> Value {
    json!(c.entries())
}

pub fn jseq(j: &JSequence) -> Value {
    json!({ "values": j.values(), "d": j.ambient() })
}

pub fn dimvec(v: &DimVec) -> Value {
    json!({ "vinf": v.vinf, "v0": v.v0, "v1": v.v1 })
}

pub fn wall(w: &Wall) -> Value {
    let family = match w.family {
        WallFamily::W => "W",
        WallFamily::WPrime => "Wp",
    };
    json!({ "family": family, "m": w.m })
}

pub fn block(b: &BlockLabel) -> Value {
    json!({ "c": b.c, "d": b.d, "size": b.size().to_string() })
}

pub fn ext_quiver(e: &ExtQuiverData) -> Value {
    json!({
        "C": e.base,
        "a": e.a,
        "b": e.b,
        "c": e.c,
        "loops_inf": e.loops_inf,
        "valid": e.valid,
    })
}

pub fn step(s: &ResolutionStep) -> Value {
    json!({ "delta": diagram(&s.delta), "s": s.added, "mult": s.multiplicity })
}

pub fn twists(t: &TwistDescriptor) -> Value {
    json!({
        "per_factor": t.per_factor,
        "tail": t.tail,
        "knoerrer": t.knoerrer,
        "shift": t.shift,
    })
}

pub fn interval(i: &Interval) -> Value {
    json!({
        "lo": i.lo.to_string(),
        "hi": i.hi.to_string(),
        "lo_closed": i.lo_closed,
        "hi_closed": i.hi_closed,
    })
}

pub fn tableau(t: &Tableau) -> Value {
    json!(t)
}

pub fn certificate(c: &WindowCertificate) -> Value {
    json!({
        "chi": character(&c.chi),
        "k": c.k,
        "stratum": c.stratum,
        "pass": c.pass,
        "exact": c.exact,
        "worst_weight": c.worst_weight,
        "interval": interval(&c.interval),
        "witness_tableau": tableau(&c.witness_tableau),
        "range": [c.range.0, c.range.1],
        "bound_range": [c.bound_range.0, c.bound_range.1],
        "bound_pass": c.bound_pass,
    })
}

/// Series as `{"vars", "trunc", "terms"}` with terms in increasing exponent order.
pub fn series(s: &Series2, vars: [&str; 2]) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .map(|((a, b), c)| json!({ "e": [a, b], "c": c.to_string() }))
        .collect();
    json!({ "vars": vars, "trunc": [s.trunc().0, s.trunc().1], "terms": terms })
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| anyhow!("missing field `{key}`"))
}

fn as_u32(v: &Value) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| anyhow!("expected a small non-negative integer, got {v}"))
}

fn pair_u32(v: &Value) -> Result<(u32, u32)> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok((as_u32(a)?, as_u32(b)?)),
        _ => bail!("expected a pair, got {v}"),
    }
}

/// Reads a series written by [`series`], returning it with its variable names.
pub fn parse_series(v: &Value) -> Result<(Series2, [String; 2])> {
    let obj = v.as_object().context("series must be an object")?;
    let vars = match field(obj, "vars")?.as_array().map(Vec::as_slice) {
        Some([Value::String(a), Value::String(b)]) => [a.clone(), b.clone()],
        _ => bail!("`vars` must be two strings"),
    };
    let trunc = pair_u32(field(obj, "trunc")?)?;
    let mut terms = Vec::new();
    for t in field(obj, "terms")?
        .as_array()
        .context("`terms` must be an array")?
    {
        let t = t.as_object().context("term must be an object")?;
        let e = pair_u32(field(t, "e")?)?;
        let c = field(t, "c")?
            .as_str()
            .context("coefficient must be a decimal string")?;
        let c: BigInt = c
            .parse()
            .with_context(|| format!("bad coefficient `{c}`"))?;
        if e.0 > trunc.0 || e.1 > trunc.1 {
            bail!("term {:?} lies outside truncation {:?}", e, trunc);
        }
        terms.push((e, c));
    }
    Ok((Series2::from_terms(terms, trunc), vars))
}

pub fn parse_diagram(v: &Value) -> Result<YoungDiagram> {
    let rows = v
        .as_array()
        .context("diagram must be an array")?
        .iter()
        .map(|r| {
            r.as_u64()
                .map(|x| x as usize)
                .context("row lengths must be non-negative integers")
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(YoungDiagram::new(rows)?)
}

pub fn parse_dimvec(v: &Value) -> Result<DimVec> {
    let obj = v
        .as_object()
        .context("dimension vector must be an object")?;
    let get = |k: &str| -> Result<i64> {
        field(obj, k)?
            .as_i64()
            .with_context(|| format!("`{k}` must be an integer"))
    };
    Ok(DimVec::new(get("vinf")?, get("v0")?, get("v1")?)?)
}

pub fn parse_jseq(v: &Value) -> Result<JSequence> {
    let obj = v.as_object().context("j-sequence must be an object")?;
    let values = field(obj, "values")?
        .as_array()
        .context("`values` must be an array")?
        .iter()
        .map(|x| x.as_i64().context("values must be integers"))
        .collect::<Result<Vec<_>>>()?;
    let d = field(obj, "d")?
        .as_u64()
        .context("`d` must be a non-negative integer")?;
    Ok(JSequence::new(values, d as usize)?)
}

pub fn parse_wall(v: &Value) -> Result<Wall> {
    let obj = v.as_object().context("wall must be an object")?;
    let family = match field(obj, "family")?.as_str() {
        Some("W") => WallFamily::W,
        Some("Wp") => WallFamily::WPrime,
        other => bail!("unknown wall family {other:?}"),
    };
    let m = field(obj, "m")?
        .as_i64()
        .context("`m` must be an integer")?;
    Ok(Wall::new(family, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use wallcross_core::series::pt_product;

    #[test]
    fn series_round_trip() {
        let s = pt_product((5, 3));
        let v = series(&s, ["q", "t"]);
        let (back, vars) = parse_series(&v).unwrap();
        assert_eq!(back, s);
        assert_eq!(vars, ["q".to_string(), "t".to_string()]);
    }

    #[test]
    fn series_rejects_out_of_box_terms() {
        let v =
            json!({ "vars": ["q0", "q1"], "trunc": [1, 1], "terms": [{ "e": [2, 0], "c": "1" }] });
        assert!(parse_series(&v).is_err());
        let v =
            json!({ "vars": ["q0", "q1"], "trunc": [1, 1], "terms": [{ "e": [0, 0], "c": 1 }] });
        assert!(parse_series(&v).is_err());
    }

    #[test]
    fn small_schemas_round_trip() {
        let d = YoungDiagram::new(vec![4, 2, 1]).unwrap();
        assert_eq!(parse_diagram(&diagram(&d)).unwrap(), d);
        assert!(parse_diagram(&json!([1, 2])).is_err());

        let v = DimVec::framed(3, 2);
        assert_eq!(dimvec(&v), json!({ "vinf": 1, "v0": 3, "v1": 2 }));
        assert_eq!(parse_dimvec(&dimvec(&v)).unwrap(), v);
        assert!(parse_dimvec(&json!({ "vinf": 2, "v0": 0, "v1": 0 })).is_err());

        let j = JSequence::new(vec![0, 1], 3).unwrap();
        assert_eq!(jseq(&j), json!({ "values": [0, 1], "d": 3 }));
        assert_eq!(parse_jseq(&jseq(&j)).unwrap(), j);

        let w = Wall::new(WallFamily::WPrime, 3).unwrap();
        assert_eq!(wall(&w), json!({ "family": "Wp", "m": 3 }));
        assert_eq!(parse_wall(&wall(&w)).unwrap(), w);
    }
}
