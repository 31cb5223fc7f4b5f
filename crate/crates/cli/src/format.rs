//! Instance files: a line-oriented edge list with an optional rotation
//! block and metadata, or a single graph6 string.
//!
//! ```text
//! # comment
//! %vertices 4
//! %meta source stellation
//! 0 1
//! 0 2
//! %rotation
//! 0: 1 2
//! ```
//!
//! `%vertices` is optional (the vertex count is otherwise inferred from
//! the largest id); it lets isolated vertices be written down.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use tutte_toughness::{Graph, PlanarEmbedding};

use crate::error::{CliError, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub embedding: Option<PlanarEmbedding>,
    pub meta: BTreeMap<String, String>,
}

impl Instance {
    pub fn new(graph: Graph) -> Self {
        Instance {
            graph,
            embedding: None,
            meta: BTreeMap::new(),
        }
    }

    pub fn with_embedding(mut self, embedding: PlanarEmbedding) -> Self {
        self.embedding = Some(embedding);
        self
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn is_graph6(text: &str) -> Option<&str> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let [line] = lines.as_slice() else {
        return None;
    };
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
    (!body.is_empty() && body.bytes().all(|b| (63..=126).contains(&b))).then_some(body)
}

/// Parses an instance, auto-detecting graph6. An embedding, when present,
/// is validated against the graph and must satisfy Euler's formula.
pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    if let Some(g6) = is_graph6(text) {
        return Ok(Instance::new(parse_graph6(g6)?));
    }
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut rotation: BTreeMap<usize, (usize, Vec<usize>)> = BTreeMap::new();
    let mut meta = BTreeMap::new();
    let mut in_rotation = false;
    let mut saw_rotation = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.len() - content.trim_start().len();
        let line = content.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('%') {
            let mut parts = rest.splitn(2, char::is_whitespace);
            let key = parts.next().unwrap_or("");
            let arg = parts.next().unwrap_or("").trim();
            in_rotation = false;
            match key {
                "vertices" => {
                    let n = arg
                        .parse()
                        .map_err(|_| err(lineno, indent + 10, format!("bad vertex count {arg:?}")))?;
                    declared = Some((n, lineno));
                }
                "rotation" => {
                    if saw_rotation {
                        return Err(err(lineno, indent + 1, "second %rotation block"));
                    }
                    in_rotation = true;
                    saw_rotation = true;
                }
                "meta" => {
                    let mut kv = arg.splitn(2, char::is_whitespace);
                    let k = kv.next().unwrap_or("");
                    if k.is_empty() {
                        return Err(err(lineno, indent + 6, "%meta needs a key"));
                    }
                    meta.insert(k.to_string(), kv.next().unwrap_or("").trim().to_string());
                }
                other => return Err(err(lineno, indent + 1, format!("unknown directive %{other}"))),
            }
            continue;
        }
        if in_rotation {
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| err(lineno, indent + 1, "rotation line must look like `v: n1 n2 ...`"))?;
            let v: usize = head
                .trim()
                .parse()
                .map_err(|_| err(lineno, indent + 1, format!("bad vertex {:?}", head.trim())))?;
            let mut cyc = Vec::new();
            let mut col = indent + head.len() + 2;
            for tok in tail.split_whitespace() {
                let at = tail.find(tok).map_or(col, |p| indent + head.len() + 2 + p);
                col = at;
                cyc.push(tok.parse().map_err(|_| err(lineno, at, format!("bad neighbor {tok:?}")))?);
            }
            if rotation.insert(v, (lineno, cyc)).is_some() {
                return Err(err(lineno, indent + 1, format!("vertex {v} has two rotation lines")));
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(lineno, indent + 1, format!("expected `u v`, found {line:?}")));
        }
        let second_col = indent + line.find(toks[1]).unwrap_or(0) + 1;
        let u = toks[0]
            .parse()
            .map_err(|_| err(lineno, indent + 1, format!("bad vertex {:?}", toks[0])))?;
        let v = toks[1]
            .parse()
            .map_err(|_| err(lineno, second_col, format!("bad vertex {:?}", toks[1])))?;
        edges.push((u, v, lineno));
    }

    let inferred = edges
        .iter()
        .flat_map(|&(u, v, _)| [u + 1, v + 1])
        .chain(rotation.keys().map(|&v| v + 1))
        .max()
        .unwrap_or(0);
    let n = match declared {
        Some((n, line)) if n < inferred => {
            return Err(err(line, 1, format!("%vertices {n} but vertex {} is used", inferred - 1)))
        }
        Some((n, _)) => n,
        None => inferred,
    };
    let mut graph = Graph::new(n);
    for &(u, v, line) in &edges {
        if u == v {
            return Err(err(line, 1, format!("loop at vertex {u}")));
        }
        if !graph.add_edge(u, v) {
            return Err(err(line, 1, format!("duplicate edge {u} {v}")));
        }
    }
    let embedding = if saw_rotation {
        let mut rot = vec![Vec::new(); n];
        for (&v, (line, cyc)) in &rotation {
            if let Some(&w) = cyc.iter().find(|&&w| w >= n) {
                return Err(err(*line, 1, format!("vertex {w} out of range")));
            }
            rot[v] = cyc.clone();
        }
        let emb = PlanarEmbedding::new(rot);
        emb.validate(&graph).map_err(|e| CliError::Embedding(e.to_string()))?;
        emb.check_plane(&graph).map_err(|e| CliError::Embedding(e.to_string()))?;
        Some(emb)
    } else {
        None
    };
    Ok(Instance {
        graph,
        embedding,
        meta,
    })
}

/// Canonical edge-list text: `%vertices`, metadata in key order, edges in
/// sorted order, then the rotation block.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "%vertices {}", inst.graph.vertex_count());
    for (k, v) in &inst.meta {
        if v.is_empty() {
            let _ = writeln!(out, "%meta {k}");
        } else {
            let _ = writeln!(out, "%meta {k} {v}");
        }
    }
    for (u, v) in inst.graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(emb) = &inst.embedding {
        out.push_str("%rotation\n");
        for (v, rot) in emb.rotation.iter().enumerate() {
            let list: Vec<String> = rot.iter().map(usize::to_string).collect();
            if list.is_empty() {
                let _ = writeln!(out, "{v}:");
            } else {
                let _ = writeln!(out, "{v}: {}", list.join(" "));
            }
        }
    }
    out
}

/// Decodes graph6 (`n <= 258047`).
pub fn parse_graph6(text: &str) -> Result<Graph, CliError> {
    let bytes: Vec<u8> = text.trim().bytes().collect();
    let bad = |pos: usize, msg: &str| err(1, pos + 1, msg.to_string());
    if let Some(p) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(p, "graph6 byte outside 63..=126"));
    }
    let (n, start) = match bytes.first() {
        None => return Err(bad(0, "empty graph6 string")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(bad(1, "graph6 orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(bad(bytes.len(), "truncated graph6 order"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() - start != need {
        return Err(bad(
            bytes.len().min(start + need),
            &format!("graph6 body has {} bytes, expected {need}", bytes.len() - start),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
