//! The JSON graph document, JSON-lines corpora and DOT output.
//!
//! ```text
//! {"colors":3,"format_version":1,"perms":{"1":[0],"2":[0],"3":[0]},"white":1}
//! ```
//!
//! `prop0` (a list of `[white, black]` pairs) marks an open graph; `components`
//! stores a disconnected graph as nested documents.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DisconnectedGraph, OpenFeynmanGraph};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the enumeration cache directory.
pub const CACHE_ENV: &str = "CTMGRAPH_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub colors: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<GraphDocument>>,
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    #[serde(default)]
    pub perms: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prop0: Option<Vec<[usize; 2]>>,
    pub white: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphValue {
    Closed(ColoredGraph),
    Open(OpenFeynmanGraph),
}

impl GraphValue {
    pub fn rank(&self) -> usize {
        match self {
            GraphValue::Closed(g) => g.rank(),
            GraphValue::Open(g) => g.rank(),
        }
    }

    /// The closed graph, or the colors-1..D residue of an open one.
    pub fn residue(&self) -> ColoredGraph {
        match self {
            GraphValue::Closed(g) => g.clone(),
            GraphValue::Open(g) => g.residue(),
        }
    }

    /// The open graph; a closed graph is coned.
    pub fn to_open(&self) -> OpenFeynmanGraph {
        match self {
            GraphValue::Closed(g) => crate::boundary::cone(g),
            GraphValue::Open(g) => g.clone(),
        }
    }
}

fn perms_map(perms: &[crate::perm::Perm]) -> BTreeMap<String, Vec<usize>> {
    perms
        .iter()
        .enumerate()
        .map(|(k, p)| ((k + 1).to_string(), p.images().to_vec()))
        .collect()
}

impl GraphDocument {
    pub fn from_closed(g: &ColoredGraph) -> Self {
        GraphDocument {
            colors: g.rank(),
            components: None,
            format_version: FORMAT_VERSION,
            metadata: BTreeMap::new(),
            perms: perms_map(g.perms()),
            prop0: None,
            white: g.half_order(),
        }
    }

    pub fn from_open(g: &OpenFeynmanGraph) -> Self {
        GraphDocument {
            prop0: Some(g.prop0_pairs()),
            perms: perms_map(g.perms()),
            white: g.half_order(),
            ..Self::from_closed(&ColoredGraph::empty(g.rank()))
        }
    }

    pub fn from_disconnected(d: &DisconnectedGraph) -> Self {
        GraphDocument {
            components: Some(d.components().iter().map(Self::from_closed).collect()),
            perms: BTreeMap::new(),
            white: d.half_order(),
            ..Self::from_closed(&ColoredGraph::empty(d.rank()))
        }
    }

    pub fn from_value(v: &GraphValue) -> Self {
        match v {
            GraphValue::Closed(g) => Self::from_closed(g),
            GraphValue::Open(g) => Self::from_open(g),
        }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.metadata.insert("name".into(), name.into());
        self
    }

    fn images(&self) -> Result<Vec<Vec<usize>>> {
        let mut images = Vec::with_capacity(self.colors);
        for c in 1..=self.colors {
            match self.perms.get(&c.to_string()) {
                Some(im) => images.push(im.clone()),
                None => return Err(Error::Document(format!("missing color {c} in perms"))),
            }
        }
        if let Some(extra) = self
            .perms
            .keys()
            .find(|k| k.parse::<usize>().map_or(true, |c| c == 0 || c > self.colors))
        {
            return Err(Error::Document(format!("unexpected color key {extra:?}")));
        }
        Ok(images)
    }

    pub fn to_value(&self) -> Result<GraphValue> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        if let Some(parts) = &self.components {
            if self.prop0.is_some() {
                return Err(Error::Document("components cannot carry prop0".into()));
            }
            if !(crate::graph::MIN_RANK..=crate::graph::MAX_RANK).contains(&self.colors) {
                return Err(Error::Document(format!("rank {} out of range", self.colors)));
            }
            let mut acc = ColoredGraph::empty(self.colors);
            for part in parts {
                match part.to_value()? {
                    GraphValue::Closed(g) => acc = acc.disjoint_union(&g)?,
                    GraphValue::Open(_) => {
                        return Err(Error::Document("components must be closed graphs".into()))
                    }
                }
            }
            if acc.half_order() != self.white {
                return Err(Error::Document(format!(
                    "white = {} but components hold {}",
                    self.white,
                    acc.half_order()
                )));
            }
            return Ok(GraphValue::Closed(acc));
        }
        let images = self.images()?;
        let report = match &self.prop0 {
            None => ColoredGraph::check(self.colors, self.white, &images),
            Some(pairs) => OpenFeynmanGraph::check(self.colors, self.white, &images, pairs),
        };
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(match &self.prop0 {
            None => GraphValue::Closed(ColoredGraph::from_images(images)?),
            Some(pairs) => GraphValue::Open(OpenFeynmanGraph::from_pairs(images, pairs)?),
        })
    }
}

pub fn parse_document(text: &str) -> Result<GraphDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse(text: &str) -> Result<GraphValue> {
    parse_document(text)?.to_value()
}

/// Validity report for a document without failing on invariant violations.
pub fn validate_document(doc: &GraphDocument) -> Result<crate::graph::ValidityReport> {
    if doc.components.is_some() {
        doc.to_value()?;
        return Ok(Default::default());
    }
    let images = doc.images()?;
    Ok(match &doc.prop0 {
        None => ColoredGraph::check(doc.colors, doc.white, &images),
        Some(pairs) => OpenFeynmanGraph::check(doc.colors, doc.white, &images, pairs),
    })
}

/// Canonical compact serialization: sorted keys, no whitespace.
pub fn serialize(doc: &GraphDocument) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

pub fn serialize_value(v: &GraphValue) -> String {
    serialize(&GraphDocument::from_value(v))
}

/// Writes one closed graph per line.
pub fn write_corpus(path: &Path, graphs: &[ColoredGraph]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
        for g in graphs {
            writeln!(f, "{}", serialize(&GraphDocument::from_closed(g)))?;
        }
        f.flush()?;
    }
    fs::rename(tmp, path)?;
    Ok(())
}

pub fn read_corpus(path: &Path) -> Result<Vec<ColoredGraph>> {
    let f = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for (k, line) in f.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match parse(&line) {
            Ok(GraphValue::Closed(g)) => out.push(g),
            Ok(GraphValue::Open(_)) => {
                return Err(Error::Document(format!("line {}: open graph in corpus", k + 1)))
            }
            Err(Error::Parse { column, message, .. }) => {
                return Err(Error::Parse {
                    line: k + 1,
                    column,
                    message,
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// The cache directory from the environment, if set and non-empty.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

/// DOT description: whites as circles, blacks as filled boxes, colors as edge
/// labels, color-0 propagators dashed and legs as points.
pub fn to_dot(v: &GraphValue) -> String {
    let (rank, n) = (v.rank(), v.residue().half_order());
    let g = v.residue();
    let mut s = String::from("graph G {\n");
    for i in 0..n {
        let _ = writeln!(s, "  w{i} [shape=circle, label=\"w{i}\"];");
    }
    for i in 0..n {
        let _ = writeln!(s, "  b{i} [shape=box, style=filled, fillcolor=black, fontcolor=white, label=\"b{i}\"];");
    }
    for c in 1..=rank {
        for i in 0..n {
            let _ = writeln!(s, "  w{i} -- b{} [label=\"{c}\"];", g.black_of(c, i));
        }
    }
    if let GraphValue::Open(o) = v {
        for [w, b] in o.prop0_pairs() {
            let _ = writeln!(s, "  w{w} -- b{b} [label=\"0\", style=dashed];");
        }
        for w in o.unmatched_whites() {
            let _ = writeln!(s, "  lw{w} [shape=point];\n  w{w} -- lw{w} [label=\"0\", style=dashed];");
        }
        for b in o.unmatched_blacks() {
            let _ = writeln!(s, "  lb{b} [shape=point];\n  b{b} -- lb{b} [label=\"0\", style=dashed];");
        }
    }
    s.push_str("}\n");
    s
}
