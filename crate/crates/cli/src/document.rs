//! On-disk graph format.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use pyrelab::{Graph, GraphError, VertexId};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// `{"version": 1, "name": "...", "vertices": [...], "edges": [[a, b], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

#[derive(Debug)]
pub enum LoadError {
    Io(io::Error),
    Parse(serde_json::Error),
    Version(u32),
    Graph(GraphError),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read graph: {e}"),
            LoadError::Parse(e) => write!(f, "malformed graph document: {e}"),
            LoadError::Version(v) => {
                write!(f, "unsupported graph document version {v} (expected {FORMAT_VERSION})")
            }
            LoadError::Graph(e) => write!(f, "invalid graph: {e}"),
        }
    }
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, name: Option<String>) -> Self {
        GraphDocument {
            version: FORMAT_VERSION,
            name,
            vertices: g.vertices().to_vec(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, LoadError> {
        if self.version != FORMAT_VERSION {
            return Err(LoadError::Version(self.version));
        }
        Graph::new(
            self.vertices.iter().copied(),
            self.edges.iter().map(|&[a, b]| (a, b)),
        )
        .map_err(LoadError::Graph)
    }

    /// Pretty form with one edge per line.
    pub fn to_text(&self) -> String {
        let join = |xs: &[VertexId]| {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        };
        let mut out = format!("{{\n  \"version\": {},\n", self.version);
        if let Some(name) = &self.name {
            let quoted = serde_json::to_string(name).expect("strings serialize");
            out += &format!("  \"name\": {quoted},\n");
        }
        out += &format!("  \"vertices\": [{}],\n", join(&self.vertices));
        if self.edges.is_empty() {
            out += "  \"edges\": []\n";
        } else {
            let rows: Vec<String> = self.edges.iter().map(|e| format!("    [{}]", join(e))).collect();
            out += &format!("  \"edges\": [\n{}\n  ]\n", rows.join(",\n"));
        }
        out + "}\n"
    }

    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(LoadError::Parse)
    }
}

/// Reads a document from `path`, or from stdin when `path` is `-`.
pub fn load(path: &Path) -> Result<(GraphDocument, Graph), LoadError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(LoadError::Io)?;
        s
    } else {
        fs::read_to_string(path).map_err(LoadError::Io)?
    };
    let doc = GraphDocument::parse(&text)?;
    let g = doc.to_graph()?;
    Ok((doc, g))
}
