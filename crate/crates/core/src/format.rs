//! Human-writable text formats for diagrams and cut presentations.
//!
//! A diagram file:
//!
//! ```text
//! diagram
//! free_loops 0
//! crossing x0 [e4, e2, e3, e1]
//! crossing x1 [e2, e4, e1, e3]
//! edge e1 x1.2 x0.3
//! edge e2 x0.1 x1.0
//! edge e3 x0.2 x1.3
//! edge e4 x1.1 x0.0
//! end
//! ```
//!
//! Crossing slots are counterclockwise from the incoming under-strand; an
//! edge line gives the tail and head endpoints as `crossing.slot` or `@pos`
//! for a boundary point. A cut file wraps two tangle sections and a boundary
//! list:
//!
//! ```text
//! cut
//! n 2
//! tangle1
//! ...same lines as a diagram...
//! end
//! tangle2
//! ...
//! end
//! boundary 1 in e1 e3
//! boundary 2 out e6 e4
//! ...
//! end
//! ```

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{
    BoundaryRecord, Crossing, CutPresentation, EdgeId, EdgeRec, Endpoint, OrientedDiagram,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("validation: {0}")]
    Validation(String),
}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse(line, msg.into())
}

struct Names {
    crossings: BTreeMap<String, usize>,
    edges: BTreeMap<String, EdgeId>,
}

impl Names {
    fn new() -> Self {
        Names {
            crossings: BTreeMap::new(),
            edges: BTreeMap::new(),
        }
    }

    fn edge(&mut self, name: &str) -> EdgeId {
        let next = EdgeId(self.edges.len() as u32 + 1);
        *self.edges.entry(name.to_string()).or_insert(next)
    }
}

fn parse_endpoint(names: &Names, tok: &str, line: usize) -> Result<Endpoint, FormatError> {
    if let Some(pos) = tok.strip_prefix('@') {
        let pos: usize = pos
            .parse()
            .map_err(|_| err(line, format!("bad boundary position '{}'", tok)))?;
        return Ok(Endpoint::Boundary { pos });
    }
    let (c, s) = tok.split_once('.').ok_or_else(|| {
        err(
            line,
            format!("endpoint '{}' is not crossing.slot or @pos", tok),
        )
    })?;
    let crossing = *names
        .crossings
        .get(c)
        .ok_or_else(|| err(line, format!("unknown crossing '{}'", c)))?;
    let slot: u8 = s
        .parse()
        .map_err(|_| err(line, format!("bad slot in '{}'", tok)))?;
    if slot > 3 {
        return Err(err(line, format!("slot {} out of range 0..3", slot)));
    }
    Ok(Endpoint::Crossing { crossing, slot })
}

/// Parse the body lines of one diagram (between its header and `end`).
fn parse_diagram_lines(lines: &[(usize, &str)]) -> Result<OrientedDiagram, FormatError> {
    let mut names = Names::new();
    let mut crossing_slots: Vec<(usize, [String; 4])> = Vec::new();
    let mut edges: BTreeMap<EdgeId, EdgeRec> = BTreeMap::new();
    let mut free_loops = 0usize;
    for &(ln, line) in lines {
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("free_loops") => {
                let v = parts
                    .next()
                    .ok_or_else(|| err(ln, "free_loops needs a count"))?;
                free_loops = v
                    .parse()
                    .map_err(|_| err(ln, format!("bad free_loops count '{}'", v)))?;
            }
            Some("crossing") => {
                let name = parts
                    .next()
                    .ok_or_else(|| err(ln, "crossing needs a name"))?;
                if names.crossings.contains_key(name) {
                    return Err(err(ln, format!("crossing '{}' declared twice", name)));
                }
                let rest: String = parts.collect::<Vec<_>>().join(" ");
                let inner = rest
                    .trim()
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| err(ln, "crossing slots must be [a, b, c, d]"))?;
                let slot_names: Vec<String> =
                    inner.split(',').map(|s| s.trim().to_string()).collect();
                if slot_names.len() != 4 {
                    return Err(err(ln, "a crossing has exactly 4 slots"));
                }
                names
                    .crossings
                    .insert(name.to_string(), crossing_slots.len());
                crossing_slots.push((
                    ln,
                    [
                        slot_names[0].clone(),
                        slot_names[1].clone(),
                        slot_names[2].clone(),
                        slot_names[3].clone(),
                    ],
                ));
            }
            Some("edge") => {
                let name = parts.next().ok_or_else(|| err(ln, "edge needs a name"))?;
                let tail_tok = parts
                    .next()
                    .ok_or_else(|| err(ln, "edge needs tail and head endpoints"))?;
                let head_tok = parts
                    .next()
                    .ok_or_else(|| err(ln, "edge needs tail and head endpoints"))?;
                let id = names.edge(name);
                let tail = parse_endpoint(&names, tail_tok, ln)?;
                let head = parse_endpoint(&names, head_tok, ln)?;
                if edges.insert(id, EdgeRec { tail, head }).is_some() {
                    return Err(err(ln, format!("edge '{}' declared twice", name)));
                }
            }
            Some(other) => {
                return Err(err(ln, format!("unknown directive '{}'", other)));
            }
            None => {}
        }
    }
    let crossings: Vec<Crossing> = crossing_slots
        .iter()
        .map(|(ln, slots)| {
            let ids: Result<Vec<EdgeId>, FormatError> = slots
                .iter()
                .map(|s| {
                    names.edges.get(s).copied().ok_or_else(|| {
                        err(*ln, format!("crossing references unknown edge '{}'", s))
                    })
                })
                .collect();
            let ids = ids?;
            Ok(Crossing {
                slots: [ids[0], ids[1], ids[2], ids[3]],
            })
        })
        .collect::<Result<_, FormatError>>()?;

    // every edge endpoint must match the slot that names it, and each edge
    // must occur exactly twice across crossing slots and boundary points
    let mut occurrences: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (ci, c) in crossings.iter().enumerate() {
        for (si, id) in c.slots.iter().enumerate() {
            *occurrences.entry(*id).or_default() += 1;
            let rec = edges.get(id).ok_or_else(|| {
                FormatError::Validation(format!("crossing {} references undeclared edge", ci))
            })?;
            let here = Endpoint::Crossing {
                crossing: ci,
                slot: si as u8,
            };
            if rec.tail != here && rec.head != here {
                return Err(FormatError::Validation(format!(
                    "edge {} sits in crossing {} slot {} but its endpoints disagree",
                    id, ci, si
                )));
            }
        }
    }
    for (id, rec) in &edges {
        for p in [rec.tail, rec.head] {
            if matches!(p, Endpoint::Boundary { .. }) {
                *occurrences.entry(*id).or_default() += 1;
            }
        }
        if occurrences.get(id).copied().unwrap_or(0) != 2 {
            return Err(FormatError::Validation(format!(
                "edge {} must appear exactly twice, found {}",
                id,
                occurrences.get(id).copied().unwrap_or(0)
            )));
        }
    }

    let d = OrientedDiagram {
        crossings,
        edges,
        free_loops,
    };
    d.validate()
        .map_err(|e| FormatError::Validation(e.to_string()))?;
    Ok(d)
}

/// Parse a diagram file.
pub fn parse_diagram(text: &str) -> Result<OrientedDiagram, FormatError> {
    let lines = meaningful_lines(text);
    let Some(&(first_ln, first)) = lines.first() else {
        return Err(err(0, "empty input"));
    };
    if first.trim() != "diagram" {
        return Err(err(first_ln, "diagram files start with 'diagram'"));
    }
    let Some(&(_, last)) = lines.last() else {
        return Err(err(first_ln, "missing 'end'"));
    };
    if last.trim() != "end" {
        return Err(err(lines.last().unwrap().0, "diagram files end with 'end'"));
    }
    parse_diagram_lines(&lines[1..lines.len() - 1])
}

fn meaningful_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

/// Parse a cut file.
pub fn parse_cut(text: &str) -> Result<CutPresentation, FormatError> {
    let lines = meaningful_lines(text);
    let mut it = lines.iter().peekable();
    let &(ln0, first) = it.next().ok_or_else(|| err(0, "empty input"))?;
    if first != "cut" {
        return Err(err(ln0, "cut files start with 'cut'"));
    }
    let &(ln_n, n_line) = it.next().ok_or_else(|| err(ln0, "missing 'n' line"))?;
    let n: usize = n_line
        .strip_prefix("n ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| err(ln_n, "expected 'n <count>'"))?;

    fn section<'a>(
        expect: &str,
        start_line: usize,
        it: &mut std::iter::Peekable<std::slice::Iter<(usize, &'a str)>>,
    ) -> Result<Vec<(usize, &'a str)>, FormatError> {
        let &&(ln, head) = it
            .peek()
            .ok_or_else(|| err(start_line, format!("missing '{}' section", expect)))?;
        if head != expect {
            return Err(err(ln, format!("expected '{}' section", expect)));
        }
        it.next();
        let mut body = Vec::new();
        for &(ln, l) in it.by_ref() {
            if l == "end" {
                return Ok(body);
            }
            body.push((ln, l));
        }
        Err(err(ln, format!("section '{}' missing 'end'", expect)))
    }

    let t1_lines = section("tangle1", ln_n, &mut it)?;
    let tangle1 = parse_diagram_lines(&t1_lines)?;
    let t2_lines = section("tangle2", ln_n, &mut it)?;
    let tangle2 = parse_diagram_lines(&t2_lines)?;

    // rebuild the edge-name maps to resolve the boundary records
    let name_map = |lines: &[(usize, &str)]| -> BTreeMap<String, EdgeId> {
        let mut names = Names::new();
        for &(_, l) in lines {
            let mut parts = l.split_whitespace();
            if parts.next() == Some("edge") {
                if let Some(name) = parts.next() {
                    names.edge(name);
                }
            }
        }
        names.edges
    };
    let t1_names = name_map(&t1_lines);
    let t2_names = name_map(&t2_lines);

    let mut boundary = Vec::new();
    let mut saw_end = false;
    for &(ln, l) in it.by_ref() {
        if l == "end" {
            saw_end = true;
            break;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 5 || toks[0] != "boundary" {
            return Err(err(
                ln,
                "expected 'boundary <pos> <in|out> <t1edge> <t2edge>'",
            ));
        }
        let pos: usize = toks[1]
            .parse()
            .map_err(|_| err(ln, format!("bad position '{}'", toks[1])))?;
        let into_tangle1 = match toks[2] {
            "in" => true,
            "out" => false,
            other => return Err(err(ln, format!("direction '{}' is not in/out", other))),
        };
        let tangle1_edge = *t1_names
            .get(toks[3])
            .ok_or_else(|| err(ln, format!("unknown tangle1 edge '{}'", toks[3])))?;
        let tangle2_edge = *t2_names
            .get(toks[4])
            .ok_or_else(|| err(ln, format!("unknown tangle2 edge '{}'", toks[4])))?;
        boundary.push(BoundaryRecord {
            pos,
            into_tangle1,
            tangle1_edge,
            tangle2_edge,
        });
    }
    if !saw_end {
        return Err(err(ln_n, "boundary list missing 'end'"));
    }
    boundary.sort_by_key(|r| r.pos);
    let cp = CutPresentation {
        n,
        tangle1,
        tangle2,
        boundary,
    };
    let diag = cp.validate();
    if !diag.valid {
        return Err(FormatError::Validation(diag.failures.join("; ")));
    }
    Ok(cp)
}

fn endpoint_str(p: Endpoint) -> String {
    match p {
        Endpoint::Crossing { crossing, slot } => format!("x{}.{}", crossing, slot),
        Endpoint::Boundary { pos } => format!("@{}", pos),
    }
}

fn diagram_body(d: &OrientedDiagram, out: &mut String) {
    if d.free_loops > 0 {
        out.push_str(&format!("free_loops {}\n", d.free_loops));
    }
    for (i, c) in d.crossings.iter().enumerate() {
        out.push_str(&format!(
            "crossing x{} [e{}, e{}, e{}, e{}]\n",
            i, c.slots[0].0, c.slots[1].0, c.slots[2].0, c.slots[3].0
        ));
    }
    for (id, rec) in &d.edges {
        out.push_str(&format!(
            "edge e{} {} {}\n",
            id.0,
            endpoint_str(rec.tail),
            endpoint_str(rec.head)
        ));
    }
}

pub fn serialize_diagram(d: &OrientedDiagram) -> String {
    let mut out = String::from("diagram\n");
    diagram_body(d, &mut out);
    out.push_str("end\n");
    out
}

pub fn serialize_cut(cp: &CutPresentation) -> String {
    let mut out = String::from("cut\n");
    out.push_str(&format!("n {}\n", cp.n));
    out.push_str("tangle1\n");
    diagram_body(&cp.tangle1, &mut out);
    out.push_str("end\ntangle2\n");
    diagram_body(&cp.tangle2, &mut out);
    out.push_str("end\n");
    for rec in &cp.boundary {
        out.push_str(&format!(
            "boundary {} {} e{} e{}\n",
            rec.pos,
            if rec.into_tangle1 { "in" } else { "out" },
            rec.tangle1_edge.0,
            rec.tangle2_edge.0
        ));
    }
    out.push_str("end\n");
    out
}
