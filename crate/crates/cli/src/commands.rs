use anyhow::{Context, Result};
use serde_json::json;

use wallcross_core::diagrams::YoungDiagram;
use wallcross_core::flip::{resolve as resolve_diagram, sod_summands, FlipSetup};
use wallcross_core::quiver::{ext_quiver_data, relevant_walls, DimVec, Wall, WallFamily};
use wallcross_core::series::{self, crosscheck, pt_table, Pipeline};
use wallcross_core::windows::{conifold_sod, verify_block, WallWindowSetup};

use crate::{formats, join, Report};

/// Parses `"4,2,1"` (or the empty string) into a diagram.
pub fn parse_diagram_arg(s: &str) -> Result<YoungDiagram> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(YoungDiagram::empty());
    }
    let rows = s
        .split(',')
        .map(|r| {
            r.trim()
                .parse::<usize>()
                .with_context(|| format!("bad row length `{r}`"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(YoungDiagram::new(rows)?)
}

fn pipeline_name(p: Pipeline) -> &'static str {
    match p {
        Pipeline::ProductFormula => "product_formula",
        Pipeline::WallCrossing => "wall_crossing",
        Pipeline::SummandCount => "summand_count",
    }
}

pub fn pt_series(nmax: u32, bmax: u32) -> Result<Report> {
    let rows = pt_table(nmax, bmax);
    let check = crosscheck((nmax, bmax))?;
    let mismatch = check.first_mismatch.as_ref().map(|m| {
        json!({
            "n": m.n,
            "beta": m.beta,
            "pipeline": pipeline_name(m.pipeline),
            "expected": m.expected.to_string(),
            "found": m.found.to_string(),
        })
    });
    let json_rows: Vec<_> = rows
        .iter()
        .map(|r| json!({ "n": r.n, "beta": r.beta, "P": r.p.to_string(), "a": r.a.to_string() }))
        .collect();
    let mut report = Report::new(
        json!({
            "nmax": nmax,
            "bmax": bmax,
            "rows": json_rows,
            "crosscheck": { "pass": check.passed(), "checked": check.checked, "mismatch": mismatch },
        }),
        &["n", "beta", "P", "a"],
    );
    for r in &rows {
        report.row([
            r.n.to_string(),
            r.beta.to_string(),
            r.p.to_string(),
            r.a.to_string(),
        ]);
    }
    report.failed = !check.passed();
    report.summary = match &check.first_mismatch {
        None => format!("crosscheck passed ({} comparisons)", check.checked),
        Some(m) => format!(
            "crosscheck FAILED at (n,beta)=({},{}) in {}: expected {}, found {}",
            m.n,
            m.beta,
            pipeline_name(m.pipeline),
            m.expected,
            m.found
        ),
    };
    Ok(report)
}

pub fn resolve(diagram: &str, d: usize, b: usize) -> Result<Report> {
    let delta = parse_diagram_arg(diagram)?;
    let res = resolve_diagram(&delta, d, b)?;
    let steps: Vec<_> = res.steps.iter().map(formats::step).collect();
    let mut report = Report::new(
        json!({
            "c": res.c,
            "d": d,
            "b": b,
            "diagram": formats::diagram(&delta),
            "steps": steps,
        }),
        &["step", "delta", "s", "mult"],
    );
    for (i, s) in res.steps.iter().enumerate() {
        report.row([
            (i + 1).to_string(),
            join(s.delta.rows()),
            s.added.to_string(),
            s.multiplicity.to_string(),
        ]);
    }
    report.summary = format!("{} steps (minimal c = {})", res.steps.len(), res.c);
    Ok(report)
}

pub fn sod(a: usize, b: usize, d: usize, c: Option<usize>) -> Result<Report> {
    let setup = FlipSetup::new(a, b, d)?;
    let c = c.unwrap_or(a);
    let list = sod_summands(&setup, c)?;
    let summands: Vec<_> = list
        .iter()
        .enumerate()
        .map(|(i, s)| {
            json!({
                "index": i,
                "l": s.l,
                "jseq": formats::jseq(&s.jseq),
                "child": formats::block(&s.child),
            })
        })
        .collect();
    let total: u64 = list.iter().map(|s| s.child.size()).sum();
    let mut report = Report::new(
        json!({ "a": a, "b": b, "c": c, "d": d, "summands": summands, "rank": total.to_string() }),
        &["index", "l", "jseq", "child_c", "child_d", "child_size"],
    );
    for (i, s) in list.iter().enumerate() {
        report.row([
            i.to_string(),
            s.l.to_string(),
            join(s.jseq.values()),
            s.child.c.to_string(),
            s.child.d.to_string(),
            s.child.size().to_string(),
        ]);
    }
    report.summary = format!("{} summands, total rank {total}", list.len());
    Ok(report)
}

pub fn wallcross(v0: i64, v1: i64, m: i64) -> Result<Report> {
    let wall = Wall::new(WallFamily::W, m)?;
    let list = conifold_sod(v0, v1, m)?;
    let framed = |v: &DimVec| DimVec { vinf: 1, ..*v };
    let summands: Vec<_> = list
        .iter()
        .enumerate()
        .map(|(i, s)| {
            json!({
                "index": i,
                "l": s.l,
                "jseq": formats::jseq(&s.jseq),
                "child": formats::dimvec(&framed(&s.child)),
                "twists": formats::twists(&s.twists),
            })
        })
        .collect();
    let mut report = Report::new(
        json!({
            "v": formats::dimvec(&DimVec::framed(v0, v1)),
            "wall": formats::wall(&wall),
            "stable": formats::dimvec(&wall.stable_dimvec()),
            "summands": summands,
        }),
        &[
            "index",
            "l",
            "jseq",
            "child_v0",
            "child_v1",
            "per_factor",
            "tail",
            "knoerrer",
            "shift",
        ],
    );
    for (i, s) in list.iter().enumerate() {
        report.row([
            i.to_string(),
            s.l.to_string(),
            join(s.jseq.values()),
            s.child.v0.to_string(),
            s.child.v1.to_string(),
            join(&s.twists.per_factor),
            s.twists.tail.to_string(),
            join(&s.twists.knoerrer),
            s.twists.shift.to_string(),
        ]);
    }
    report.summary = format!("{} summands across W_{m}", list.len());
    Ok(report)
}

pub fn window_check(v0: i64, v1: i64, m: i64, d: usize) -> Result<Report> {
    let setup = WallWindowSetup::new(v0, v1, m, d)?;
    let certs = verify_block(&setup)?;
    let pass = certs.iter().all(|c| c.pass);
    let json_certs: Vec<_> = certs.iter().map(formats::certificate).collect();
    let mut report = Report::new(
        json!({
            "v": formats::dimvec(&DimVec::framed(v0, v1)),
            "m": m,
            "d": d,
            "ext_quiver": formats::ext_quiver(&setup.data),
            "pass": pass,
            "certificates": json_certs,
        }),
        &[
            "chi",
            "k",
            "stratum",
            "pass",
            "exact",
            "worst_weight",
            "lo",
            "hi",
            "bound_pass",
        ],
    );
    for c in &certs {
        report.row([
            join(c.chi.entries()),
            c.k.to_string(),
            c.stratum.to_string(),
            c.pass.to_string(),
            c.exact.to_string(),
            c.worst_weight.to_string(),
            c.interval.lo.to_string(),
            c.interval.hi.to_string(),
            c.bound_pass.to_string(),
        ]);
    }
    let failures = certs.iter().filter(|c| !c.pass).count();
    report.failed = !pass;
    report.summary = if certs.is_empty() {
        format!("block B_{}({d}) is empty; nothing to check", setup.data.a)
    } else if pass {
        format!("all {} certificates pass", certs.len())
    } else {
        format!("{failures} of {} certificates FAIL", certs.len())
    };
    Ok(report)
}

pub fn walls(v0: i64, v1: i64) -> Result<Report> {
    let list = relevant_walls(v0, v1)?;
    let json_walls: Vec<_> = list
        .iter()
        .map(|(w, l)| {
            let (x, y) = w.direction();
            json!({
                "wall": formats::wall(w),
                "direction": [x, y],
                "stable": formats::dimvec(&w.stable_dimvec()),
                "max_l": l,
            })
        })
        .collect();
    let mut report = Report::new(
        json!({ "v": formats::dimvec(&DimVec::framed(v0, v1)), "walls": json_walls }),
        &["family", "m", "direction", "max_l"],
    );
    for (w, l) in &list {
        let (x, y) = w.direction();
        report.row([
            "W".to_string(),
            w.m.to_string(),
            format!("{x},{y}"),
            l.to_string(),
        ]);
    }
    report.summary = format!("{} relevant walls", list.len());
    Ok(report)
}

pub fn ext_quiver(v0: i64, v1: i64, m: i64, d: i64) -> Result<Report> {
    let e = ext_quiver_data(v0, v1, m, d)?;
    let mut report = Report::new(
        formats::ext_quiver(&e),
        &["C", "a", "b", "c", "loops_inf", "valid"],
    );
    report.row([
        e.base.to_string(),
        e.a.to_string(),
        e.b.to_string(),
        e.c.to_string(),
        e.loops_inf.map_or_else(String::new, |x| x.to_string()),
        e.valid.to_string(),
    ]);
    Ok(report)
}

pub fn dt_series(walls: u32, nmax: u32) -> Result<Report> {
    let s = series::dt_series(walls, (nmax, nmax));
    let mut report = Report::new(formats::series(&s, ["q0", "q1"]), &["e0", "e1", "c"]);
    for ((a, b), c) in s.terms() {
        report.row([a.to_string(), b.to_string(), c.to_string()]);
    }
    report.summary = format!("{} nonzero terms", s.len());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn diagram_argument() {
        assert_eq!(parse_diagram_arg(" 4, 2,1").unwrap().rows(), &[4, 2, 1]);
        assert!(parse_diagram_arg("").unwrap().is_empty());
        assert!(parse_diagram_arg("1,2").is_err());
        assert!(parse_diagram_arg("a").is_err());
    }

    #[test]
    fn pt_series_rows() {
        let r = pt_series(3, 2).unwrap();
        let p = |n: u64, b: u64| -> String {
            r.json["rows"]
                .as_array()
                .unwrap()
                .iter()
                .find(|x| x["n"] == n && x["beta"] == b)
                .map(|x| x["P"].as_str().unwrap().to_string())
                .unwrap()
        };
        assert_eq!(p(1, 1), "1");
        assert_eq!(p(2, 1), "-2");
        assert_eq!(p(2, 2), "0");
        assert_eq!(p(3, 1), "3");
        assert!(!r.failed);
        let single = pt_series(0, 0).unwrap();
        assert_eq!(single.rows, vec![vec!["0", "0", "1", "1"]]);
    }

    #[test]
    fn ext_quiver_example() {
        let r = ext_quiver(4, 3, 2, 1).unwrap();
        assert_eq!(
            r.json,
            json!({ "C": 9, "a": 8, "b": 6, "c": 4, "loops_inf": null, "valid": true })
        );
    }

    #[test]
    fn sod_standard_flip() {
        let r = sod(3, 0, 1, None).unwrap();
        let summands = r.json["summands"].as_array().unwrap();
        assert_eq!(summands.len(), 4);
        let ones: Vec<&Value> = summands.iter().filter(|s| s["l"] == 1).collect();
        assert_eq!(ones.len(), 3);
        assert_eq!(r.json["rank"], "3");
    }

    #[test]
    fn empty_walls() {
        let r = walls(0, 0).unwrap();
        assert_eq!(r.json["walls"], json!([]));
    }
}
