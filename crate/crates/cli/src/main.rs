//! Command-line front end: Khovanov homology, Jones polynomials, surgeries,
//! splitting reports, double complexes and spectral sequence pages for the
//! built-in catalog or for diagram/cut files.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use khsplit_core::catalog;
use khsplit_core::dcomplex::{
    build_double_complex, check_convergence, compare_with_khovanov, e2_direct, spectral_sequence,
    DoubleComplex,
};
use khsplit_core::diagram::{CutPresentation, OrientedDiagram};
use khsplit_core::exact::{Matrix, RatFunc};
use khsplit_core::format::{parse_cut, parse_diagram, serialize_diagram};
use khsplit_core::khovanov::{jones, khovanov_complex, BigradedDims, JonesT, MinEdgeOrder};
use khsplit_core::ncpart::{distributivity_counterexamples, enumerate_nc};
use khsplit_core::selftest;
use khsplit_core::splitting::{build_splitting_matrix, jones_split, verify_decomposition};
use khsplit_core::surgery::{glue, surgery, SIDE1, SIDE2};

#[derive(Parser)]
#[command(
    name = "khsplit",
    version,
    about = "Exact Khovanov homology and Jones splitting along admissible cuts"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Jones polynomial of a diagram (catalog name, cut name, or file)
    Jones {
        name: String,
        /// Also print the polynomial in the classical parameter
        #[arg(long)]
        t_variable: bool,
    },
    /// Khovanov homology table of a diagram
    Kh { name: String },
    /// Emit every surgery of a cut in the diagram file format
    Surgeries {
        cut: String,
        /// Write one file per surgery into this directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Splitting report: matrices, surgery Jones polynomials, verdict
    Split { cut: String },
    /// Double complex summary and total-complex comparison
    Dc { cut: String },
    /// Spectral sequence pages and convergence report
    Ss {
        cut: String,
        /// Print only this page
        #[arg(long)]
        page: Option<usize>,
    },
    /// Non-crossing partitions and the splitting matrix
    Nc {
        #[arg(long)]
        n: usize,
        /// Print the connector matrix and its inverse
        #[arg(long)]
        matrix: bool,
    },
    /// Run the acceptance suite over the catalog
    Selftest,
}

struct InputError(String);

fn resolve_diagram(name: &str) -> Result<(OrientedDiagram, String), InputError> {
    if let Some(d) = catalog::diagram(name) {
        return Ok((d, format!("catalog diagram '{}'", name)));
    }
    if let Some(c) = catalog::cut(name) {
        let glued = glue(&c).map_err(|e| InputError(e.to_string()))?;
        return Ok((glued.diagram, format!("catalog cut '{}' (glued)", name)));
    }
    let path = PathBuf::from(name);
    if path.exists() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| InputError(format!("cannot read {}: {}", path.display(), e)))?;
        let first = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .unwrap_or("");
        if first == "cut" {
            let cp = parse_cut(&text).map_err(|e| InputError(e.to_string()))?;
            let glued = glue(&cp).map_err(|e| InputError(e.to_string()))?;
            return Ok((
                glued.diagram,
                format!("cut file {} (glued)", path.display()),
            ));
        }
        let d = parse_diagram(&text).map_err(|e| InputError(e.to_string()))?;
        return Ok((d, format!("diagram file {}", path.display())));
    }
    Err(InputError(format!(
        "'{}' is neither a catalog entry nor a readable file",
        name
    )))
}

fn resolve_cut(name: &str) -> Result<(CutPresentation, String), InputError> {
    if let Some(c) = catalog::cut(name) {
        return Ok((c, format!("catalog cut '{}'", name)));
    }
    let path = PathBuf::from(name);
    if path.exists() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| InputError(format!("cannot read {}: {}", path.display(), e)))?;
        let cp = parse_cut(&text).map_err(|e| InputError(e.to_string()))?;
        return Ok((cp, format!("cut file {}", path.display())));
    }
    Err(InputError(format!(
        "'{}' is neither a catalog cut nor a readable file",
        name
    )))
}

fn qdims_json(dims: &BTreeMap<i64, usize>) -> Value {
    Value::Array(
        dims.iter()
            .map(|(&q, &d)| json!({"q": q, "dim": d}))
            .collect(),
    )
}

fn bigraded_json(b: &BigradedDims) -> Value {
    Value::Array(
        b.dims
            .iter()
            .map(|(&(h, q), &d)| json!({"h": h, "q": q, "dim": d}))
            .collect(),
    )
}

fn matrix_json(m: &Matrix<RatFunc>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| Value::String(m.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

struct Report {
    text: String,
    json: Value,
    /// false means a computational verdict failed
    pass: bool,
}

fn cmd_jones(name: &str, t_variable: bool) -> Result<Report, InputError> {
    let (d, origin) = resolve_diagram(name)?;
    let j = jones(&d).map_err(|e| InputError(e.to_string()))?;
    let mut text = format!("input: {}\nJ(q) = {}\n", origin, j);
    let mut obj = json!({"input": origin, "jones_q": j.to_string()});
    if t_variable {
        let t = JonesT::from_q(&j);
        text.push_str(&format!("J(t) = {}\n", t));
        obj["jones_t"] = Value::String(t.to_string());
    }
    Ok(Report {
        text,
        json: obj,
        pass: true,
    })
}

fn cmd_kh(name: &str) -> Result<Report, InputError> {
    let (d, origin) = resolve_diagram(name)?;
    let complex = khovanov_complex(&d, &MinEdgeOrder);
    let kh = complex.homology().map_err(|e| InputError(e.to_string()))?;
    let text = format!(
        "input: {}\ncrossings: {} ({} positive, {} negative)\nhomology (h, q -> dim):\n{}",
        origin,
        d.crossing_count(),
        complex.pos_crossings,
        complex.neg_crossings,
        kh
    );
    let json = json!({
        "input": origin,
        "crossings": d.crossing_count(),
        "positive": complex.pos_crossings,
        "negative": complex.neg_crossings,
        "homology": bigraded_json(&kh),
    });
    Ok(Report {
        text,
        json,
        pass: true,
    })
}

fn partition_slug(p: &khsplit_core::ncpart::SetPartition) -> String {
    if p.ground_size() == 0 {
        return "empty".to_string();
    }
    p.rgs().iter().map(|b| b.to_string()).collect()
}

fn cmd_surgeries(cut: &str, out: Option<PathBuf>) -> Result<Report, InputError> {
    let (cp, origin) = resolve_cut(cut)?;
    let mut text = format!("input: {}\n", origin);
    let mut files = Vec::new();
    let mut items = Vec::new();
    for side in [SIDE1, SIDE2] {
        for p in enumerate_nc(cp.n) {
            let s = surgery(&cp, side, &p).map_err(|e| InputError(e.to_string()))?;
            let serialized = serialize_diagram(&s.diagram);
            let label = format!("side{}_{}", side, partition_slug(&p));
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)
                    .map_err(|e| InputError(format!("cannot create {}: {}", dir.display(), e)))?;
                let path = dir.join(format!("{}.khd", label));
                std::fs::write(&path, &serialized)
                    .map_err(|e| InputError(format!("cannot write {}: {}", path.display(), e)))?;
                files.push(path.display().to_string());
                text.push_str(&format!(
                    "wrote {} (partition {})\n",
                    files.last().unwrap(),
                    p
                ));
            } else {
                text.push_str(&format!("# side {} partition {}\n{}", side, p, serialized));
            }
            items.push(json!({
                "side": side,
                "partition": p.to_string(),
                "diagram": serialized,
            }));
        }
    }
    Ok(Report {
        text,
        json: json!({"input": origin, "surgeries": items, "files": files}),
        pass: true,
    })
}

fn cmd_split(cut: &str) -> Result<Report, InputError> {
    let (cp, origin) = resolve_cut(cut)?;
    let m = build_splitting_matrix(cp.n).map_err(|e| InputError(e.to_string()))?;
    let report = jones_split(&cp).map_err(|e| InputError(e.to_string()))?;
    let decomposition = verify_decomposition(&cp).map_err(|e| InputError(e.to_string()))?;
    let mut text = format!("input: {}\nindex (canonical order):\n", origin);
    for p in &m.index {
        text.push_str(&format!("  {}\n", p));
    }
    text.push_str(&format!("matrix c:\n{}", m.c));
    text.push_str(&format!("matrix b = c^-1:\n{}", m.b));
    text.push_str(&report.to_string());
    text.push_str("decomposition identities:\n");
    text.push_str(&decomposition.to_string());
    let pass = report.pass && decomposition.pass();
    let json = json!({
        "input": origin,
        "n": cp.n,
        "index": m.index.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "c": matrix_json(&m.c),
        "b": matrix_json(&m.b),
        "surgery_jones_side1": report.surgery_jones_1.iter()
            .map(|(p, j)| json!({"partition": p.to_string(), "jones": j.to_string()}))
            .collect::<Vec<_>>(),
        "surgery_jones_side2": report.surgery_jones_2.iter()
            .map(|(p, j)| json!({"partition": p.to_string(), "jones": j.to_string()}))
            .collect::<Vec<_>>(),
        "jones_glued": report.lhs.to_string(),
        "bilinear_side": report.rhs.to_string(),
        "splitting_pass": report.pass,
        "decomposition_pass": decomposition.pass(),
        "verdict": if pass { "PASS" } else { "FAIL" },
    });
    Ok(Report { text, json, pass })
}

fn grid_text(dc: &DoubleComplex) -> String {
    let (s_min, s_max) = dc.s_range();
    let (t_min, t_max) = dc.t_range();
    let mut out = String::new();
    for t in (t_min..=t_max).rev() {
        out.push_str(&format!("  t={:>2} |", t));
        for s in s_min..=s_max {
            let dims = dc.cell_qdims(s, t);
            let cell: Vec<String> = dims.iter().map(|(q, d)| format!("{}:{}", q, d)).collect();
            out.push_str(&format!(" {:<24}", format!("{{{}}}", cell.join(","))));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "        {}\n",
        (s_min..=s_max)
            .map(|s| format!("s={:<22}", s))
            .collect::<String>()
    ));
    out
}

fn cmd_dc(cut: &str) -> Result<Report, InputError> {
    let (cp, origin) = resolve_cut(cut)?;
    let dc = build_double_complex(&cp).map_err(|e| InputError(e.to_string()))?;
    let cmp = compare_with_khovanov(&dc).map_err(|e| InputError(e.to_string()))?;
    let mut text = format!(
        "input: {}\ncells (q-dims per bidegree):\n{}",
        origin,
        grid_text(&dc)
    );
    text.push_str(&cmp.to_string());
    let cells: Vec<Value> = dc
        .cells
        .keys()
        .map(|&(s, t)| json!({"s": s, "t": t, "dims": qdims_json(&dc.cell_qdims(s, t))}))
        .collect();
    let pass = cmp.homology_level;
    let json = json!({
        "input": origin,
        "cells": cells,
        "generator_level_equal": cmp.generator_level,
        "note": cmp.note,
        "homology_level_equal": cmp.homology_level,
        "homology": bigraded_json(&cmp.tot_homology),
    });
    Ok(Report { text, json, pass })
}

fn page_json(page: &khsplit_core::dcomplex::PageDims) -> Value {
    Value::Array(
        page.0
            .iter()
            .map(|(&(p, q, jq), &d)| json!({"p": p, "q": q, "qdeg": jq, "dim": d}))
            .collect(),
    )
}

fn cmd_ss(cut: &str, page: Option<usize>) -> Result<Report, InputError> {
    let (cp, origin) = resolve_cut(cut)?;
    let dc = build_double_complex(&cp).map_err(|e| InputError(e.to_string()))?;
    let ss = spectral_sequence(&dc);
    let kh = dc
        .glued_complex
        .homology()
        .map_err(|e| InputError(e.to_string()))?;
    let convergence = check_convergence(&ss, &kh);
    let direct2 = e2_direct(&dc);
    let direct_matches = &direct2 == ss.page(2);
    let mut text = format!("input: {}\n", origin);
    let render = |r: usize| -> String { format!("page {}:\n{}", r, ss.page(r)) };
    match page {
        Some(r) => {
            if r < 1 {
                return Err(InputError("pages are indexed from 1".into()));
            }
            text.push_str(&render(r));
        }
        None => {
            for r in 1..=ss.pages.len() {
                text.push_str(&render(r));
            }
        }
    }
    text.push_str(&format!("collapse page: {}\n", ss.collapse_page));
    text.push_str(&format!(
        "direct second page matches filtration page: {}\n",
        if direct_matches { "yes" } else { "NO" }
    ));
    text.push_str(&convergence.to_string());
    let pass = convergence.pass && direct_matches;
    let pages_json: Vec<Value> = match page {
        Some(r) => vec![json!({"r": r, "dims": page_json(ss.page(r))})],
        None => (1..=ss.pages.len())
            .map(|r| json!({"r": r, "dims": page_json(ss.page(r))}))
            .collect(),
    };
    let json = json!({
        "input": origin,
        "pages": pages_json,
        "collapse_page": ss.collapse_page,
        "direct_page2_matches": direct_matches,
        "convergence_pass": convergence.pass,
    });
    Ok(Report { text, json, pass })
}

fn cmd_nc(n: usize, matrix: bool) -> Result<Report, InputError> {
    let nc = enumerate_nc(n);
    let mut text = format!("non-crossing partitions of {{1..{}}}: {}\n", n, nc.len());
    for p in &nc {
        text.push_str(&format!("  {}\n", p));
    }
    let mut json = json!({
        "n": n,
        "count": nc.len(),
        "partitions": nc.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    if matrix {
        let m = build_splitting_matrix(n).map_err(|e| InputError(e.to_string()))?;
        text.push_str(&format!("matrix c:\n{}", m.c));
        text.push_str(&format!("matrix b = c^-1:\n{}", m.b));
        json["c"] = matrix_json(&m.c);
        json["b"] = matrix_json(&m.b);
    }
    if n <= 4 {
        let bad = distributivity_counterexamples(n);
        if bad.is_empty() {
            text.push_str("distributive laws: hold on this ground set\n");
            json["distributivity"] = json!({"holds": true});
        } else {
            let (a, b, c) = &bad[0];
            text.push_str(&format!(
                "distributive laws: fail on this ground set ({} triples), e.g. {} {} {}\n",
                bad.len(),
                a,
                b,
                c
            ));
            json["distributivity"] = json!({"holds": false, "counterexamples": bad.len(),
                       "example": [a.to_string(), b.to_string(), c.to_string()]});
        }
    }
    Ok(Report {
        text,
        json,
        pass: true,
    })
}

fn cmd_selftest() -> Report {
    let results = selftest::run_all();
    let mut text = String::new();
    let mut pass = true;
    for r in &results {
        text.push_str(&selftest::summary_line(r));
        text.push('\n');
        if !r.pass {
            pass = false;
            text.push_str(&r.detail);
        }
    }
    text.push_str(&format!(
        "selftest: {}\n",
        if pass { "PASS" } else { "FAIL" }
    ));
    let json = json!({
        "criteria": results.iter().map(|r| json!({
            "id": r.id,
            "name": r.name,
            "pass": r.pass,
            "detail": r.detail,
            "millis": r.millis as u64,
        })).collect::<Vec<_>>(),
        "pass": pass,
    });
    Report { text, json, pass }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let command_echo = std::env::args().collect::<Vec<_>>().join(" ");
    let result = match &cli.cmd {
        Cmd::Jones { name, t_variable } => cmd_jones(name, *t_variable),
        Cmd::Kh { name } => cmd_kh(name),
        Cmd::Surgeries { cut, out } => cmd_surgeries(cut, out.clone()),
        Cmd::Split { cut } => cmd_split(cut),
        Cmd::Dc { cut } => cmd_dc(cut),
        Cmd::Ss { cut, page } => cmd_ss(cut, *page),
        Cmd::Nc { n, matrix } => cmd_nc(*n, *matrix),
        Cmd::Selftest => Ok(cmd_selftest()),
    };
    match result {
        Ok(report) => {
            match cli.format {
                Format::Text => {
                    print!("{}", report.text);
                    println!("elapsed: {} ms", start.elapsed().as_millis());
                }
                Format::Json => {
                    let wrapped = json!({
                        "command": command_echo,
                        "report": report.json,
                        "pass": report.pass,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    });
                    println!("{}", serde_json::to_string_pretty(&wrapped).unwrap());
                }
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
