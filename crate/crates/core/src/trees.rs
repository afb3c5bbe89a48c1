//! Plane trees as Dyck words, edge-colored trees, and the correspondence between
//! foldings of alternating words and edge colorings.
//!
//! Half edges are numbered along the counterclockwise perimeter starting at the
//! root, which is exactly the left-to-right order of Dyck steps: an edge opens on
//! its way down and closes on its way back up. Edges are indexed by the position
//! of their opening step.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::foldings::{greedy_fold, Matching};
use crate::words::{self, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    InvalidCharacter { ch: char, position: usize },
    Unbalanced { position: usize },
    LengthMismatch { word: usize, tree: usize },
    NotAlternating,
    /// The letters on this edge (0-based half-edge positions) are not complements.
    InvalidEdge { edge: (usize, usize) },
    ColorCount { edges: usize, colors: usize },
    ColorOutOfRange { edge: usize, color: u32, m: u32 },
    Word(WordError),
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::InvalidCharacter { ch, position } => {
                write!(f, "invalid character {ch:?} at position {} of Dyck word", position + 1)
            }
            TreeError::Unbalanced { position } => {
                write!(f, "unbalanced Dyck word at position {}", position + 1)
            }
            TreeError::LengthMismatch { word, tree } => {
                write!(f, "word has length {word} but tree has {tree} half edges")
            }
            TreeError::NotAlternating => f.write_str("word is not alternating"),
            TreeError::InvalidEdge { edge } => write!(
                f,
                "letters at half edges {} and {} are not complements",
                edge.0 + 1,
                edge.1 + 1
            ),
            TreeError::ColorCount { edges, colors } => {
                write!(f, "tree has {edges} edges but {colors} colors were given")
            }
            TreeError::ColorOutOfRange { edge, color, m } => {
                write!(f, "edge {} has color {color} outside 1..={m}", edge + 1)
            }
            TreeError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for TreeError {}

impl From<WordError> for TreeError {
    fn from(e: WordError) -> TreeError {
        TreeError::Word(e)
    }
}

/// A plane tree stored as its Dyck word: `true` is a step down an edge, `false`
/// a step back up.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    steps: Vec<bool>,
}

impl PlaneTree {
    pub fn from_steps(steps: Vec<bool>) -> Result<PlaneTree, TreeError> {
        let mut depth = 0usize;
        for (i, &down) in steps.iter().enumerate() {
            if down {
                depth += 1;
            } else if depth == 0 {
                return Err(TreeError::Unbalanced { position: i });
            } else {
                depth -= 1;
            }
        }
        if depth != 0 {
            return Err(TreeError::Unbalanced { position: steps.len() });
        }
        Ok(PlaneTree { steps })
    }

    /// Parses `(` / `)` strings; whitespace is ignored.
    pub fn from_dyck(text: &str) -> Result<PlaneTree, TreeError> {
        let mut steps = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            match ch {
                '(' => steps.push(true),
                ')' => steps.push(false),
                c if c.is_whitespace() => {}
                ch => return Err(TreeError::InvalidCharacter { ch, position }),
            }
        }
        PlaneTree::from_steps(steps)
    }

    /// The single-vertex tree.
    pub fn empty() -> PlaneTree {
        PlaneTree { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// Number of half edges.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.steps.len() / 2
    }

    /// Half-edge pairs `(open, close)`, ordered by opening position.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = vec![(0, 0); self.edge_count()];
        let mut stack = Vec::new();
        let mut next = 0;
        for (i, &down) in self.steps.iter().enumerate() {
            if down {
                stack.push((next, i));
                next += 1;
            } else {
                let (k, open) = stack.pop().expect("balanced");
                edges[k] = (open, i);
            }
        }
        edges
    }

    /// For each edge, the index of the edge directly above it (`None` at the root).
    pub fn parent_edges(&self) -> Vec<Option<usize>> {
        let mut parents = Vec::with_capacity(self.edge_count());
        let mut stack: Vec<usize> = Vec::new();
        for &down in &self.steps {
            if down {
                parents.push(stack.last().copied());
                stack.push(parents.len() - 1);
            } else {
                stack.pop();
            }
        }
        parents
    }

    /// Every plane tree with `n` edges, in lexicographic order with `(` before `)`.
    pub fn all(n: usize) -> Vec<PlaneTree> {
        fn extend(prefix: &mut Vec<bool>, opened: usize, depth: usize, n: usize, out: &mut Vec<PlaneTree>) {
            if prefix.len() == 2 * n {
                out.push(PlaneTree { steps: prefix.clone() });
                return;
            }
            if opened < n {
                prefix.push(true);
                extend(prefix, opened + 1, depth + 1, n, out);
                prefix.pop();
            }
            if depth > 0 {
                prefix.push(false);
                extend(prefix, opened, depth - 1, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
        out
    }

    pub fn to_matching(&self) -> Matching {
        tree_to_matching(self)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps.iter().map(|&d| if d { '(' } else { ')' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for PlaneTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<PlaneTree, TreeError> {
        PlaneTree::from_dyck(s)
    }
}

impl From<&Matching> for PlaneTree {
    fn from(m: &Matching) -> PlaneTree {
        matching_to_tree(m)
    }
}

/// Each pair `(i, j)` becomes an edge opening at `i` and closing at `j`.
pub fn matching_to_tree(m: &Matching) -> PlaneTree {
    let steps = m.partners().iter().enumerate().map(|(i, &j)| i < j).collect();
    PlaneTree { steps }
}

pub fn tree_to_matching(t: &PlaneTree) -> Matching {
    let mut partner = vec![0; t.len()];
    for (a, b) in t.edges() {
        partner[a] = b;
        partner[b] = a;
    }
    Matching::from_partner_unchecked(partner)
}

/// Whether `w` labels every edge of `t` with a complementary pair.
pub fn is_valid(w: &Word, t: &PlaneTree) -> Result<bool, TreeError> {
    if w.len() != t.len() {
        return Err(TreeError::LengthMismatch { word: w.len(), tree: t.len() });
    }
    let letters = w.letters();
    Ok(t.edges().into_iter().all(|(a, b)| letters[a].is_complement_of(letters[b])))
}

/// Vertex degree counts: `alpha()[i]` is the number of vertices of degree `i + 1`.
/// Trailing zeros are dropped, so equal multisets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeMultiset {
    alpha: Vec<u64>,
}

impl DegreeMultiset {
    pub fn new(mut alpha: Vec<u64>) -> DegreeMultiset {
        while alpha.last() == Some(&0) {
            alpha.pop();
        }
        DegreeMultiset { alpha }
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    /// Count of vertices of degree `degree` (`degree >= 1`).
    pub fn count(&self, degree: usize) -> u64 {
        degree
            .checked_sub(1)
            .and_then(|i| self.alpha.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn vertex_count(&self) -> u64 {
        self.alpha.iter().sum()
    }

    pub fn degree_sum(&self) -> u64 {
        (1u64..).zip(&self.alpha).map(|(i, &a)| i * a).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.alpha.len()
    }

    /// `α₁ = 2 + Σ_{i≥2} (i-2) α_i`.
    pub fn satisfies_leaf_identity(&self) -> bool {
        let rhs: i128 = 2 + (1i128..)
            .zip(&self.alpha)
            .skip(1)
            .map(|(i, &a)| (i - 2) * a as i128)
            .sum::<i128>();
        self.count(1) as i128 == rhs
    }
}

impl fmt::Display for DegreeMultiset {
    /// `{1^2, 2^1}`, omitting zero counts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (i, &a) in (1..).zip(&self.alpha) {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{i}^{a}")?;
        }
        f.write_str("}")
    }
}

/// Root degree is its number of children; every other vertex also counts the edge
/// to its parent. The single-vertex tree gives the empty multiset.
pub fn degree_multiset(t: &PlaneTree) -> DegreeMultiset {
    if t.is_empty() {
        return DegreeMultiset::new(Vec::new());
    }
    let parents = t.parent_edges();
    // vertex 0 is the root, vertex k + 1 the lower end of edge k
    let mut degree = vec![0u64; parents.len() + 1];
    for (k, p) in parents.iter().enumerate() {
        degree[k + 1] += 1;
        degree[p.map_or(0, |e| e + 1)] += 1;
    }
    let mut alpha = vec![0u64; *degree.iter().max().expect("non-empty") as usize];
    for d in degree {
        alpha[d as usize - 1] += 1;
    }
    DegreeMultiset::new(alpha)
}

/// A plane tree with one color in `1..=m` per edge, edges in opening order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoredTree {
    tree: PlaneTree,
    colors: Vec<u32>,
    m: u32,
}

impl EdgeColoredTree {
    pub fn new(tree: PlaneTree, colors: Vec<u32>, m: u32) -> Result<EdgeColoredTree, TreeError> {
        if colors.len() != tree.edge_count() {
            return Err(TreeError::ColorCount {
                edges: tree.edge_count(),
                colors: colors.len(),
            });
        }
        if let Some((edge, &color)) = colors.iter().enumerate().find(|&(_, &c)| c == 0 || c > m) {
            return Err(TreeError::ColorOutOfRange { edge, color, m });
        }
        Ok(EdgeColoredTree { tree, colors, m })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn alphabet_size(&self) -> u32 {
        self.m
    }
}

impl fmt::Display for EdgeColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.tree)?;
        for (k, c) in self.colors.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Colors each edge by the letter index shared by its two half edges.
pub fn fold_to_colored_tree(w: &Word, t: &PlaneTree) -> Result<EdgeColoredTree, TreeError> {
    if !words::is_alternating(w) {
        return Err(TreeError::NotAlternating);
    }
    if w.len() != t.len() {
        return Err(TreeError::LengthMismatch { word: w.len(), tree: t.len() });
    }
    let letters = w.letters();
    let mut colors = Vec::with_capacity(t.edge_count());
    for (a, b) in t.edges() {
        if !letters[a].is_complement_of(letters[b]) {
            return Err(TreeError::InvalidEdge { edge: (a, b) });
        }
        colors.push(letters[a].index());
    }
    EdgeColoredTree::new(t.clone(), colors, w.alphabet_size())
}

/// Inverse of [`fold_to_colored_tree`]: the half edge at an odd (1-based) position
/// carries `A_c`, the even one `Ā_c`.
pub fn colored_tree_to_fold(ct: &EdgeColoredTree) -> (Word, PlaneTree) {
    let tree = ct.tree();
    let mut letters = vec![Letter::unbarred(1); tree.len()];
    for ((a, b), &c) in tree.edges().into_iter().zip(ct.colors()) {
        for p in [a, b] {
            letters[p] = Letter::new(c, p % 2 == 1);
        }
    }
    let w = Word::new(letters, ct.alphabet_size()).expect("colors are within the alphabet");
    (w, tree.clone())
}

/// No two edges sharing a vertex have the same color.
pub fn is_proper(ct: &EdgeColoredTree) -> bool {
    let parents = ct.tree().parent_edges();
    let colors = ct.colors();
    // colors seen below each vertex, vertex 0 the root and k + 1 the end of edge k
    let mut seen: Vec<Vec<u32>> = vec![Vec::new(); parents.len() + 1];
    for (k, p) in parents.iter().enumerate() {
        let c = colors[k];
        let v = p.map_or(0, |e| e + 1);
        if seen[v].contains(&c) || p.is_some_and(|e| colors[e] == c) {
            return false;
        }
        seen[v].push(c);
    }
    true
}

/// Whether `w` has exactly one folding: it folds, and the greedy folding of its
/// doubled form is a properly colored tree.
pub fn classify_one_foldable(w: &Word) -> bool {
    if !w.is_foldable() {
        return false;
    }
    let hat = words::doubled(w).expect("foldable words have even length");
    let m = match greedy_fold(&hat).into_matching() {
        Some(m) => m,
        None => return false,
    };
    let t = matching_to_tree(&m);
    let ct = fold_to_colored_tree(&hat, &t).expect("greedy folding is valid on an alternating word");
    is_proper(&ct)
}
