//! Local moves between foldings and the directed move graph of a word.
//!
//! A Type 1 move takes two sibling arcs `(p1,p2), (p3,p4)` hanging from the same
//! vertex to the nested pair `(p1,p4), (p2,p3)`; a Type 2 move undoes it. With
//! `w[p1] = w[p3]` the re-paired arcs are again complementary, so both moves stay
//! inside the foldings of `w`. Type 1 points away from the greedy folding, which is
//! the unique source of the graph.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::foldings::{enumerate_foldings, greedy_fold, Matching, MatchingError};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    Type1,
    Type2,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Type1 => f.write_str("1"),
            MoveKind::Type2 => f.write_str("2"),
        }
    }
}

/// A move at 0-based positions `p1 < p2 < p3 < p4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub positions: [usize; 4],
}

impl Move {
    pub fn new(kind: MoveKind, positions: [usize; 4]) -> Move {
        Move { kind, positions }
    }

    pub fn inverse(self) -> Move {
        let kind = match self.kind {
            MoveKind::Type1 => MoveKind::Type2,
            MoveKind::Type2 => MoveKind::Type1,
        };
        Move { kind, ..self }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.positions;
        write!(f, "type{}({},{},{},{})", self.kind, a + 1, b + 1, c + 1, d + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveError {
    NotAFolding(MatchingError),
    NotApplicable(Move),
    Unfoldable,
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::NotAFolding(e) => write!(f, "not a folding of the word: {e}"),
            MoveError::NotApplicable(mv) => write!(f, "move {mv} does not apply"),
            MoveError::Unfoldable => f.write_str("word is not foldable"),
        }
    }
}

impl core::error::Error for MoveError {}

/// Every arc touching the open interval `(lo, hi)` stays inside it.
fn closed_region(m: &Matching, lo: usize, hi: usize) -> bool {
    (lo + 1..hi).all(|k| {
        let j = m.partner(k);
        lo < j && j < hi
    })
}

fn applies(m: &Matching, mv: &Move) -> bool {
    let [p1, p2, p3, p4] = mv.positions;
    if !(p1 < p2 && p2 < p3 && p3 < p4 && p4 < m.len()) {
        return false;
    }
    match mv.kind {
        MoveKind::Type1 => m.contains_pair(p1, p2) && m.contains_pair(p3, p4) && closed_region(m, p2, p3),
        MoveKind::Type2 => m.contains_pair(p1, p4) && m.contains_pair(p2, p3) && closed_region(m, p1, p2),
    }
}

/// All moves available from folding `m` of `w`, Type 1 first, then by position.
pub fn available_moves(w: &Word, m: &Matching) -> Result<Vec<Move>, MoveError> {
    m.check_folding_of(w).map_err(MoveError::NotAFolding)?;
    let letters = w.letters();
    let pairs = m.pairs();
    let mut moves = Vec::new();
    for &(p1, p2) in &pairs {
        for &(p3, p4) in &pairs {
            if p3 > p2 && letters[p1] == letters[p3] && closed_region(m, p2, p3) {
                moves.push(Move::new(MoveKind::Type1, [p1, p2, p3, p4]));
            }
        }
    }
    for &(p1, p4) in &pairs {
        for &(p2, p3) in &pairs {
            if p1 < p2 && p3 < p4 && letters[p1] == letters[p3] && closed_region(m, p1, p2) {
                moves.push(Move::new(MoveKind::Type2, [p1, p2, p3, p4]));
            }
        }
    }
    moves.sort();
    Ok(moves)
}

/// Re-pairs the two arcs of `mv`. Letters are not consulted; take moves from
/// [`available_moves`] to stay within the foldings of a word.
pub fn apply_move(m: &Matching, mv: &Move) -> Result<Matching, MoveError> {
    if !applies(m, mv) {
        return Err(MoveError::NotApplicable(*mv));
    }
    let [p1, p2, p3, p4] = mv.positions;
    let mut partner = m.partners().to_vec();
    let new_pairs = match mv.kind {
        MoveKind::Type1 => [(p1, p4), (p2, p3)],
        MoveKind::Type2 => [(p1, p2), (p3, p4)],
    };
    for (a, b) in new_pairs {
        partner[a] = b;
        partner[b] = a;
    }
    Matching::from_partner(partner).map_err(|_| MoveError::NotApplicable(*mv))
}

/// The foldings of a word, with an edge `u → v` for each Type 1 move from `u`
/// to `v`. Nodes are in lexicographic order of partner arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldGraph {
    word: Word,
    nodes: Vec<Matching>,
    edges: Vec<(usize, usize)>,
}

impl FoldGraph {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn nodes(&self) -> &[Matching] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_index(&self, m: &Matching) -> Option<usize> {
        self.nodes.binary_search(m).ok()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(_, v) in &self.edges {
            deg[v] += 1;
        }
        deg
    }

    /// Nodes with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        self.in_degrees()
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d == 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn search(&self, start: usize, directed: bool) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            if !directed {
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Which nodes a directed path from `start` reaches.
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        self.search(start, true)
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.nodes.is_empty() || self.search(0, false).into_iter().all(|r| r)
    }

    /// The Type 2 moves of every node are exactly the reversed Type 1 edges.
    pub fn type2_reverses_type1(&self) -> bool {
        let mut reversed: Vec<(usize, usize)> = Vec::new();
        for (v, node) in self.nodes.iter().enumerate() {
            let moves = available_moves(&self.word, node).expect("nodes are foldings");
            for mv in moves.iter().filter(|mv| mv.kind == MoveKind::Type2) {
                let Ok(next) = apply_move(node, mv) else {
                    return false;
                };
                let Some(u) = self.node_index(&next) else {
                    return false;
                };
                reversed.push((u, v));
            }
        }
        reversed.sort_unstable();
        reversed == self.edges
    }
}

pub fn build_fold_graph(w: &Word) -> FoldGraph {
    let nodes = enumerate_foldings(w);
    let mut graph = FoldGraph {
        word: w.clone(),
        nodes,
        edges: Vec::new(),
    };
    let mut edges = Vec::new();
    for (u, node) in graph.nodes.iter().enumerate() {
        let moves = available_moves(w, node).expect("enumerated foldings are valid");
        for mv in moves.iter().filter(|mv| mv.kind == MoveKind::Type1) {
            let next = apply_move(node, mv).expect("available moves apply");
            let v = graph.node_index(&next).expect("moves stay among the foldings");
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    graph.edges = edges;
    graph
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceReport {
    pub unique_source: bool,
    pub source_is_greedy: bool,
    pub all_reachable: bool,
}

impl SourceReport {
    pub fn holds(&self) -> bool {
        self.unique_source && self.source_is_greedy && self.all_reachable
    }
}

/// Checks that the greedy folding is the only source of the move graph and that
/// every folding is reachable from it.
pub fn verify_source_theorem(w: &Word) -> Result<SourceReport, MoveError> {
    let greedy = greedy_fold(w).into_matching().ok_or(MoveError::Unfoldable)?;
    let graph = build_fold_graph(w);
    let sources = graph.sources();
    let g = graph.node_index(&greedy);
    let all_reachable = match g {
        Some(g) => graph.reachable_from(g).into_iter().all(|r| r),
        None => false,
    };
    Ok(SourceReport {
        unique_source: sources.len() == 1,
        source_is_greedy: g.is_some() && sources == [g.unwrap()],
        all_reachable,
    })
}
