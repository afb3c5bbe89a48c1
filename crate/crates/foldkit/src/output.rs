use std::fmt::Display;

use clap::ValueEnum;
use foldkit_core::foldings::Matching;
use foldkit_core::moves::{available_moves, apply_move, FoldGraph, MoveKind};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
    Dot,
}

/// Exact JSON number for any integer, however large.
pub fn num(x: impl Display) -> Value {
    Value::Number(x.to_string().parse().expect("integer literal"))
}

pub fn pairs_json(m: &Matching) -> Value {
    Value::Array(
        m.pairs()
            .into_iter()
            .map(|(i, j)| Value::Array(vec![num(i + 1), num(j + 1)]))
            .collect(),
    )
}

/// One command result, renderable in each format.
#[derive(Debug, Clone)]
pub struct Report {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// Replaces the aligned table in `table` format.
    pub text: Option<String>,
    pub dot: Option<String>,
}

impl Report {
    pub fn new(header: Vec<&'static str>, rows: Vec<Vec<String>>, json: Value) -> Report {
        Report { header, rows, json, text: None, dot: None }
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Report {
        self.text = Some(text.into());
        self
    }

    /// `None` when the format does not apply (`dot` outside graph commands).
    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Table => Some(match &self.text {
                Some(t) => format!("{t}\n"),
                None => table(&self.header, &self.rows),
            }),
            Format::Json => Some(format!("{}\n", self.json)),
            Format::Tsv => {
                let mut s = self.header.join("\t");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                Some(s)
            }
            Format::Dot => self.dot.clone(),
        }
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for row in rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}

/// The move turning node `u` into node `v`.
pub fn edge_move(graph: &FoldGraph, u: usize, v: usize) -> String {
    let from = &graph.nodes()[u];
    available_moves(graph.word(), from)
        .expect("nodes are foldings")
        .into_iter()
        .filter(|mv| mv.kind == MoveKind::Type1)
        .find(|mv| apply_move(from, mv).ok().as_ref() == Some(&graph.nodes()[v]))
        .map(|mv| mv.to_string())
        .unwrap_or_default()
}

/// Graphviz digraph with nodes labeled by their pair lists and one edge per
/// Type 1 move.
pub fn dot(graph: &FoldGraph) -> String {
    let mut s = format!("digraph folds {{\n  label=\"{}\";\n", graph.word());
    for (i, node) in graph.nodes().iter().enumerate() {
        s.push_str(&format!("  n{i} [label=\"{node}\"];\n"));
    }
    for &(u, v) in graph.edges() {
        s.push_str(&format!("  n{u} -> n{v} [label=\"{}\", kind=1];\n", edge_move(graph, u, v)));
    }
    s.push_str("}\n");
    s
}
