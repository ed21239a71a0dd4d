use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use ldc_core::format::{from_edge_list, from_graph6};
use ldc_core::generators::Family;
use ldc_core::{Error, Graph, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum StdinFormat {
    #[default]
    Edges,
    Graph6,
}

/// Where the graph comes from. At most one of the flags may be given; with
/// none, the graph is read from stdin.
#[derive(Clone, Debug, Default, Args)]
pub struct GraphInput {
    /// Named family, e.g. `cycle:12`, `star:7`, `spider:3,2,2`
    #[arg(long, group = "source")]
    pub family: Option<String>,
    /// Graph in graph6 format
    #[arg(long, group = "source")]
    pub graph6: Option<String>,
    /// Edge-list file (`n <order>` header optional, one `u v` pair per line)
    #[arg(long, group = "source")]
    pub edges: Option<PathBuf>,
    /// Format of stdin when no source flag is given
    #[arg(long, value_enum, default_value_t = StdinFormat::Edges)]
    pub stdin_format: StdinFormat,
}

impl GraphInput {
    pub fn from_family(spec: &str) -> GraphInput {
        GraphInput { family: Some(spec.to_string()), ..GraphInput::default() }
    }

    pub fn load(&self) -> Result<Graph> {
        self.load_with(|| {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse { line: 0, message: format!("reading stdin: {e}") })?;
            Ok(s)
        })
    }

    pub fn load_with(&self, stdin: impl FnOnce() -> Result<String>) -> Result<Graph> {
        if let Some(spec) = &self.family {
            return spec.parse::<Family>()?.generate();
        }
        if let Some(code) = &self.graph6 {
            return from_graph6(code);
        }
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) })?;
            return from_edge_list(&text);
        }
        let text = stdin()?;
        match self.stdin_format {
            StdinFormat::Edges => from_edge_list(&text),
            StdinFormat::Graph6 => from_graph6(&text),
        }
    }
}
