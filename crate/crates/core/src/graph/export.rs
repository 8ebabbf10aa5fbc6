//! planar_code, Graphviz dot and JSON output.
//!
//! planar_code: the header `>>planar_code<<`, then per graph the vertex
//! count followed by each vertex's neighbours (1-based, in rotation order)
//! and a 0 terminator. Entries are single bytes when `n <= 255`; otherwise
//! the graph starts with a 0 byte and every entry is a little-endian `u16`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::signature::Signature;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    PlanarCode,
    Dot,
    Structured,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "planar_code" | "planar-code" | "plc" => Ok(ExportFormat::PlanarCode),
            "dot" => Ok(ExportFormat::Dot),
            "structured" | "json" => Ok(ExportFormat::Structured),
            other => Err(format!("unknown graph format {other:?}")),
        }
    }
}

/// The planar_code entry stream of one graph, without header or width marker.
pub fn planar_code_entries(g: &EmbeddedGraph) -> Vec<usize> {
    let mut out = Vec::with_capacity(1 + 4 * g.vertex_count());
    out.push(g.vertex_count());
    for ns in g.rotation() {
        out.extend(ns.iter().map(|&u| u + 1));
        out.push(0);
    }
    out
}

/// Header plus every graph, in order.
pub fn write_planar_code<'a>(graphs: impl IntoIterator<Item = &'a EmbeddedGraph>) -> Vec<u8> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        let entries = planar_code_entries(g);
        if g.vertex_count() <= 255 {
            out.extend(entries.iter().map(|&e| e as u8));
        } else {
            out.push(0);
            for e in entries {
                let e = u16::try_from(e).expect("planar_code holds at most 65535 vertices");
                out.extend_from_slice(&e.to_le_bytes());
            }
        }
    }
    out
}

/// Decode planar_code into 0-based rotation lists, one per graph.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<Vec<Vec<usize>>>> {
    let bad = |what: &str| Error::MalformedPlanarCode(what.to_string());
    let mut rest = bytes
        .strip_prefix(PLANAR_CODE_HEADER)
        .ok_or_else(|| bad("missing header"))?;
    let mut graphs = Vec::new();
    while !rest.is_empty() {
        let wide = rest[0] == 0;
        if wide {
            rest = &rest[1..];
        }
        let mut next = || -> Result<usize> {
            if wide {
                let (word, tail) = rest
                    .split_first_chunk::<2>()
                    .ok_or_else(|| bad("truncated entry"))?;
                rest = tail;
                Ok(u16::from_le_bytes(*word) as usize)
            } else {
                let (&byte, tail) = rest.split_first().ok_or_else(|| bad("truncated entry"))?;
                rest = tail;
                Ok(byte as usize)
            }
        };
        let n = next()?;
        let mut rot = Vec::with_capacity(n);
        for _ in 0..n {
            let mut ns = Vec::new();
            loop {
                match next()? {
                    0 => break,
                    u if u > n => return Err(bad("neighbour out of range")),
                    u => ns.push(u - 1),
                }
            }
            rot.push(ns);
        }
        graphs.push(rot);
    }
    Ok(graphs)
}

/// Undirected edge list, one `u -- v;` line per edge.
pub fn dot(g: &EmbeddedGraph) -> String {
    let mut out = format!("graph trihex {{\n  // signature {}\n", g.source());
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct Structured<'a> {
    schema_version: u32,
    n: usize,
    rot: &'a [[usize; 3]],
    source: Signature,
    faces: BTreeMap<String, usize>,
}

pub fn structured(g: &EmbeddedGraph) -> String {
    let doc = Structured {
        schema_version: 1,
        n: g.vertex_count(),
        rot: g.rotation(),
        source: g.source(),
        faces: g
            .face_census()
            .into_iter()
            .map(|(len, count)| (len.to_string(), count))
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn export(g: &EmbeddedGraph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::PlanarCode => write_planar_code([g]),
        ExportFormat::Dot => dot(g).into_bytes(),
        ExportFormat::Structured => {
            let mut s = structured(g);
            s.push('\n');
            s.into_bytes()
        }
    }
}
