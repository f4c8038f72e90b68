//! Graph data model, JSON format, BFS diameter, and the label quantizer.
//!
//! Graphs are simple and undirected with one label vector per node. Exact
//! graphs carry arbitrary-precision integer labels so every downstream
//! equality test is exact; numeric graphs carry `f64` labels and exist for
//! the differentiable network in [`crate::numeric`].

use std::collections::VecDeque;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;
use thiserror::Error;

pub type NodeId = usize;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("invalid graph document: {0}")]
    Parse(String),
    #[error("node id {0} out of range")]
    NodeOutOfRange(NodeId),
    #[error("duplicate node id {0}")]
    DuplicateNodeId(NodeId),
    #[error("node ids must cover exactly 0..{expected}")]
    NonContiguousIds { expected: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(NodeId, NodeId),
    #[error("label dimension mismatch: node {node} has dimension {found}, expected {expected}")]
    LabelDimension {
        node: NodeId,
        found: usize,
        expected: usize,
    },
    #[error("label vectors must have dimension >= 1")]
    EmptyLabel,
    #[error("label entry {0:?} is not an integer")]
    NonIntegerLabel(String),
    #[error("label entry {value} exceeds quantizer bound {bound}")]
    QuantizerBound { value: f64, bound: f64 },
    #[error("quantizer bound and interval width must be positive and finite")]
    BadQuantizer,
}

/// Simple undirected node-labeled graph. Node ids are `0..node_count`; edges
/// are stored normalized as `(min, max)` pairs; self-loops are allowed and
/// put a node into its own neighborhood.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph<T> {
    labels: Vec<Vec<T>>,
    edges: Vec<(NodeId, NodeId)>,
    adjacency: Vec<Vec<NodeId>>,
}

/// Graph with arbitrary-precision integer labels (the default mode).
pub type ExactGraph = Graph<BigInt>;
/// Graph with real labels, input to the differentiable network.
pub type NumericGraph = Graph<f64>;

impl<T> Graph<T> {
    /// Validates and builds a graph. Edge pairs are normalized to
    /// `(min, max)`; duplicates (in either orientation) are rejected.
    pub fn new(labels: Vec<Vec<T>>, edges: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        let n = labels.len();
        if n > 0 {
            let dim = labels[0].len();
            if dim == 0 {
                return Err(GraphError::EmptyLabel);
            }
            for (v, l) in labels.iter().enumerate() {
                if l.len() != dim {
                    return Err(GraphError::LabelDimension {
                        node: v,
                        found: l.len(),
                        expected: dim,
                    });
                }
            }
        }
        let mut normalized: Vec<(NodeId, NodeId)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::NodeOutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::NodeOutOfRange(b));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &normalized {
            adjacency[a].push(b);
            if a != b {
                adjacency[b].push(a);
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            labels,
            edges: normalized,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Label dimension; 0 only for the empty graph.
    pub fn label_dim(&self) -> usize {
        self.labels.first().map_or(0, Vec::len)
    }

    pub fn label(&self, v: NodeId) -> &[T] {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Vec<T>] {
        &self.labels
    }

    /// Normalized `(min, max)` edge pairs in ascending order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`; contains `v` itself iff a self-loop is
    /// present.
    pub fn neighbors(&self, v: NodeId) -> Result<&[NodeId], GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::NodeOutOfRange(v))
    }

    /// Unchecked neighbor access for internal loops over valid ids.
    pub(crate) fn neighbors_unchecked(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    /// Maximum eccentricity over all connected components (BFS from every
    /// node). A single node has diameter 0; so does the empty graph.
    pub fn diameter(&self) -> usize {
        let n = self.node_count();
        let mut best = 0usize;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for source in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[source] = 0;
            queue.clear();
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            let ecc = dist.iter().filter(|&&d| d != usize::MAX).max().copied().unwrap_or(0);
            best = best.max(ecc);
        }
        best
    }

    /// BFS distances from `source`; unreachable nodes get `None`.
    pub fn bfs_distances(&self, source: NodeId) -> Vec<Option<usize>> {
        let n = self.node_count();
        let mut dist = vec![None; n];
        dist[source] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = Some(dist[v].unwrap() + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

impl<T: Clone> Graph<T> {
    /// Relabels nodes: node `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..node_count`.
    pub fn permuted(&self, perm: &[NodeId]) -> Result<Self, GraphError> {
        let n = self.node_count();
        if perm.len() != n {
            return Err(GraphError::NonContiguousIds { expected: n });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n {
                return Err(GraphError::NodeOutOfRange(p));
            }
            if seen[p] {
                return Err(GraphError::DuplicateNodeId(p));
            }
            seen[p] = true;
        }
        let mut labels = vec![Vec::new(); n];
        for (v, l) in self.labels.iter().enumerate() {
            labels[perm[v]] = l.clone();
        }
        let edges: Vec<(NodeId, NodeId)> =
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::new(labels, &edges)
    }
}

impl ExactGraph {
    /// Lossy conversion of integer labels to `f64`, for feeding the numeric
    /// network with exact-mode corpora.
    pub fn to_numeric(&self) -> NumericGraph {
        let labels = self
            .labels
            .iter()
            .map(|l| l.iter().map(|z| z.to_f64().unwrap_or(f64::MAX)).collect())
            .collect();
        Graph {
            labels,
            edges: self.edges.clone(),
            adjacency: self.adjacency.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// JSON document format
//
// {"nodes":[{"id":0,"label":[0]},...],"edges":[[0,1],...]}
//
// Ids must cover 0..n exactly; edges are unordered pairs; duplicate edges are
// rejected. Exact mode requires integer label entries.
// ---------------------------------------------------------------------------

fn parse_document(text: &str) -> Result<(Vec<(usize, Vec<serde_json::Number>)>, Vec<(NodeId, NodeId)>), GraphError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| GraphError::Parse("top level must be an object".into()))?;
    let nodes = obj
        .get("nodes")
        .and_then(Value::as_array)
        .ok_or_else(|| GraphError::Parse("missing \"nodes\" array".into()))?;
    let edges = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| GraphError::Parse("missing \"edges\" array".into()))?;

    let mut parsed_nodes = Vec::with_capacity(nodes.len());
    for node in nodes {
        let node = node
            .as_object()
            .ok_or_else(|| GraphError::Parse("node entries must be objects".into()))?;
        let id = node
            .get("id")
            .and_then(Value::as_u64)
            .ok_or_else(|| GraphError::Parse("node id must be a non-negative integer".into()))?
            as usize;
        let label = node
            .get("label")
            .and_then(Value::as_array)
            .ok_or_else(|| GraphError::Parse("node label must be an array".into()))?;
        let mut entries = Vec::with_capacity(label.len());
        for entry in label {
            match entry {
                Value::Number(n) => entries.push(n.clone()),
                other => {
                    return Err(GraphError::Parse(format!(
                        "label entry {other} is not a number"
                    )))
                }
            }
        }
        parsed_nodes.push((id, entries));
    }

    let mut parsed_edges = Vec::with_capacity(edges.len());
    for edge in edges {
        let pair = edge
            .as_array()
            .ok_or_else(|| GraphError::Parse("edges must be [a, b] pairs".into()))?;
        if pair.len() != 2 {
            return Err(GraphError::Parse("edges must be [a, b] pairs".into()));
        }
        let a = pair[0]
            .as_u64()
            .ok_or_else(|| GraphError::Parse("edge endpoints must be non-negative integers".into()))?;
        let b = pair[1]
            .as_u64()
            .ok_or_else(|| GraphError::Parse("edge endpoints must be non-negative integers".into()))?;
        parsed_edges.push((a as usize, b as usize));
    }
    Ok((parsed_nodes, parsed_edges))
}

/// Orders parsed node entries by id, requiring ids to cover `0..n` exactly.
fn order_labels<L>(nodes: Vec<(usize, L)>) -> Result<Vec<L>, GraphError>
where
    L: Default,
{
    let n = nodes.len();
    let mut slots: Vec<Option<L>> = (0..n).map(|_| None).collect();
    for (id, label) in nodes {
        if id >= n {
            return Err(GraphError::NonContiguousIds { expected: n });
        }
        if slots[id].is_some() {
            return Err(GraphError::DuplicateNodeId(id));
        }
        slots[id] = Some(label);
    }
    Ok(slots.into_iter().map(Option::unwrap).collect())
}

fn number_to_bigint(n: &serde_json::Number) -> Result<BigInt, GraphError> {
    let text = n.to_string();
    let digits = text.strip_prefix('-').unwrap_or(&text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GraphError::NonIntegerLabel(text));
    }
    BigInt::from_str(&text).map_err(|_| GraphError::NonIntegerLabel(text))
}

/// Parses and validates an exact-mode graph document (integer labels).
pub fn load_graph(text: &str) -> Result<ExactGraph, GraphError> {
    let (nodes, edges) = parse_document(text)?;
    let nodes = nodes
        .into_iter()
        .map(|(id, entries)| {
            let label = entries
                .iter()
                .map(number_to_bigint)
                .collect::<Result<Vec<_>, _>>()?;
            Ok((id, label))
        })
        .collect::<Result<Vec<_>, GraphError>>()?;
    let labels = order_labels(nodes)?;
    Graph::new(labels, &edges)
}

/// Parses and validates a numeric-mode graph document (real labels).
pub fn load_numeric_graph(text: &str) -> Result<NumericGraph, GraphError> {
    let (nodes, edges) = parse_document(text)?;
    let nodes = nodes
        .into_iter()
        .map(|(id, entries)| {
            let label = entries
                .iter()
                .map(|n| {
                    n.as_f64()
                        .ok_or_else(|| GraphError::Parse(format!("label entry {n} is not a real")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((id, label))
        })
        .collect::<Result<Vec<_>, GraphError>>()?;
    let labels = order_labels(nodes)?;
    Graph::new(labels, &edges)
}

fn document_value<T, F: Fn(&T) -> Value>(g: &Graph<T>, entry: F) -> Value {
    let nodes: Vec<Value> = (0..g.node_count())
        .map(|v| {
            serde_json::json!({
                "id": v,
                "label": g.label(v).iter().map(&entry).collect::<Vec<_>>(),
            })
        })
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|&(a, b)| serde_json::json!([a, b]))
        .collect();
    serde_json::json!({ "nodes": nodes, "edges": edges })
}

/// Serializes to the normalized document form: nodes ascending by id, edges
/// as sorted `(min, max)` pairs. Loading the output reproduces the graph.
pub fn graph_to_json(g: &ExactGraph) -> String {
    let doc = document_value(g, |z: &BigInt| {
        Value::Number(
            serde_json::Number::from_str(&z.to_string()).expect("integer literal is a JSON number"),
        )
    });
    doc.to_string()
}

/// Numeric-mode counterpart of [`graph_to_json`]. Labels must be finite.
pub fn numeric_graph_to_json(g: &NumericGraph) -> String {
    let doc = document_value(g, |x: &f64| {
        Value::Number(serde_json::Number::from_f64(*x).expect("labels must be finite"))
    });
    doc.to_string()
}

// ---------------------------------------------------------------------------
// Label quantizer
// ---------------------------------------------------------------------------

/// Interval grid that encodes bounded reals into integers: the segment
/// `[-bound, bound]` is split into cells of width `interval_width` and each
/// entry maps to the index of its cell. Entries in the same cell get the
/// same code; entries in different cells get different codes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizerConfig {
    pub bound: f64,
    pub interval_width: f64,
}

impl QuantizerConfig {
    pub fn new(bound: f64, interval_width: f64) -> Result<Self, GraphError> {
        if !(bound > 0.0 && bound.is_finite() && interval_width > 0.0 && interval_width.is_finite())
        {
            return Err(GraphError::BadQuantizer);
        }
        Ok(QuantizerConfig {
            bound,
            interval_width,
        })
    }

    fn cell_count(&self) -> u64 {
        ((2.0 * self.bound) / self.interval_width).ceil().max(1.0) as u64
    }

    /// Cell index of `z`; errors when `|z| > bound`.
    pub fn index(&self, z: f64) -> Result<u64, GraphError> {
        if !z.is_finite() || z.abs() > self.bound {
            return Err(GraphError::QuantizerBound {
                value: z,
                bound: self.bound,
            });
        }
        let raw = ((z + self.bound) / self.interval_width).floor();
        let idx = if raw < 0.0 { 0 } else { raw as u64 };
        Ok(idx.min(self.cell_count() - 1))
    }
}

/// Replaces every real label entry with its interval index, producing an
/// exact graph. Deterministic; errors if any entry exceeds the bound.
pub fn quantize_labels(g: &NumericGraph, cfg: &QuantizerConfig) -> Result<ExactGraph, GraphError> {
    let labels = g
        .labels()
        .iter()
        .map(|l| {
            l.iter()
                .map(|&z| cfg.index(z).map(BigInt::from))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Graph::new(labels, g.edges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_labels(values: &[i64]) -> Vec<Vec<BigInt>> {
        values.iter().map(|&v| vec![BigInt::from(v)]).collect()
    }

    pub(crate) fn triangle() -> ExactGraph {
        Graph::new(int_labels(&[0, 0, 0]), &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn smallest_legal_document() {
        let g = load_graph(r#"{"nodes":[{"id":0,"label":[0]}],"edges":[]}"#).unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.label_dim(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn triangle_document() {
        let text = r#"{"nodes":[{"id":0,"label":[0]},{"id":1,"label":[0]},{"id":2,"label":[0]}],
                       "edges":[[0,1],[1,2],[2,0]]}"#;
        let g = load_graph(text).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, triangle());
    }

    #[test]
    fn edge_out_of_range_rejected() {
        let text = r#"{"nodes":[{"id":0,"label":[0]},{"id":1,"label":[0]},{"id":2,"label":[0]}],
                       "edges":[[0,5]]}"#;
        assert_eq!(load_graph(text).unwrap_err(), GraphError::NodeOutOfRange(5));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let text = r#"{"nodes":[{"id":0,"label":[0]},{"id":1,"label":[0]}],
                       "edges":[[0,1],[1,0]]}"#;
        assert_eq!(load_graph(text).unwrap_err(), GraphError::DuplicateEdge(0, 1));
    }

    #[test]
    fn inconsistent_label_dimension_rejected() {
        let text = r#"{"nodes":[{"id":0,"label":[0]},{"id":1,"label":[0,1]}],"edges":[]}"#;
        assert!(matches!(
            load_graph(text).unwrap_err(),
            GraphError::LabelDimension { node: 1, .. }
        ));
    }

    #[test]
    fn non_integer_label_rejected_in_exact_mode() {
        let text = r#"{"nodes":[{"id":0,"label":[0.5]}],"edges":[]}"#;
        assert!(matches!(
            load_graph(text).unwrap_err(),
            GraphError::NonIntegerLabel(_)
        ));
        assert!(load_numeric_graph(text).is_ok());
    }

    #[test]
    fn huge_integer_labels_survive_round_trip() {
        let text = r#"{"nodes":[{"id":0,"label":[123456789012345678901234567890]}],"edges":[]}"#;
        let g = load_graph(text).unwrap();
        assert_eq!(
            g.label(0)[0].to_string(),
            "123456789012345678901234567890"
        );
        let again = load_graph(&graph_to_json(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn round_trip_is_identity_on_normalized_form() {
        let text = r#"{"nodes":[{"id":2,"label":[1]},{"id":0,"label":[0]},{"id":1,"label":[0]}],
                       "edges":[[2,0],[1,0]]}"#;
        let g = load_graph(text).unwrap();
        let json = graph_to_json(&g);
        let g2 = load_graph(&json).unwrap();
        assert_eq!(g, g2);
        assert_eq!(json, graph_to_json(&g2));
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn neighbors_sorted_and_checked() {
        let g = triangle();
        assert_eq!(g.neighbors(0).unwrap(), &[1, 2]);
        assert!(matches!(g.neighbors(9), Err(GraphError::NodeOutOfRange(9))));
        let isolated = Graph::new(int_labels(&[0]), &[]).unwrap();
        assert_eq!(isolated.neighbors(0).unwrap(), &[] as &[NodeId]);
    }

    #[test]
    fn self_loop_puts_node_in_own_neighborhood() {
        let g = Graph::new(int_labels(&[0, 0]), &[(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.neighbors(0).unwrap(), &[0, 1]);
        assert_eq!(g.neighbors(1).unwrap(), &[0]);
    }

    #[test]
    fn six_cycle_neighbors() {
        let g = Graph::new(
            int_labels(&[0, 0, 0, 0, 0, 0]),
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        )
        .unwrap();
        assert_eq!(g.neighbors(3).unwrap(), &[2, 4]);
        assert_eq!(g.diameter(), 3);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(triangle().diameter(), 1);
        let path = Graph::new(int_labels(&[0, 0, 0]), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.diameter(), 2);
        let single = Graph::new(int_labels(&[0]), &[]).unwrap();
        assert_eq!(single.diameter(), 0);
        // Disconnected: max over components.
        let two_paths = Graph::new(int_labels(&[0, 0, 0, 0, 0]), &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(two_paths.diameter(), 2);
    }

    #[test]
    fn quantizer_rejects_out_of_bound() {
        let cfg = QuantizerConfig::new(1.0, 0.25).unwrap();
        assert!(matches!(
            cfg.index(1.5),
            Err(GraphError::QuantizerBound { .. })
        ));
        assert!(QuantizerConfig::new(0.0, 0.25).is_err());
        assert!(QuantizerConfig::new(1.0, -1.0).is_err());
    }

    #[test]
    fn quantizer_grid_separates_the_three_sample_entries() {
        // Grid over [-1, 1] with width 0.25: cells [-1,-0.75), [-0.75,-0.5),
        // ... so -0.9 -> 0, 0.1 -> 4, 0.9 -> 7. Worked out from the cell
        // boundaries directly.
        let cfg = QuantizerConfig::new(1.0, 0.25).unwrap();
        assert_eq!(cfg.index(-0.9).unwrap(), 0);
        assert_eq!(cfg.index(0.1).unwrap(), 4);
        assert_eq!(cfg.index(0.9).unwrap(), 7);
    }

    #[test]
    fn quantize_constant_labels_stay_constant() {
        let g = Graph::new(vec![vec![0.3], vec![0.3], vec![0.3]], &[(0, 1), (1, 2)]).unwrap();
        let cfg = QuantizerConfig::new(1.0, 0.5).unwrap();
        let q = quantize_labels(&g, &cfg).unwrap();
        assert_eq!(q.label(0), q.label(1));
        assert_eq!(q.label(1), q.label(2));
    }

    #[test]
    fn quantize_same_interval_same_code() {
        let g = Graph::new(vec![vec![0.26], vec![0.49]], &[]).unwrap();
        let cfg = QuantizerConfig::new(1.0, 0.25).unwrap();
        let q = quantize_labels(&g, &cfg).unwrap();
        assert_eq!(q.label(0), q.label(1));
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = triangle();
        let p = g.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(p.node_count(), 3);
        assert_eq!(p.edge_count(), 3);
        assert!(g.permuted(&[0, 0, 1]).is_err());
    }

    proptest! {
        // Diameter is invariant under node relabeling.
        #[test]
        fn diameter_invariant_under_permutation(seed in 0u64..1000) {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let n = 1 + rng.next_range(8) as usize;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in (a + 1)..n {
                    if rng.next_f64() < 0.4 {
                        edges.push((a, b));
                    }
                }
            }
            let labels = (0..n).map(|_| vec![BigInt::from(rng.next_range(3))]).collect();
            let g: ExactGraph = Graph::new(labels, &edges).unwrap();
            // Fisher-Yates over 0..n.
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.next_range((i + 1) as u64) as usize;
                perm.swap(i, j);
            }
            let h = g.permuted(&perm).unwrap();
            prop_assert_eq!(g.diameter(), h.diameter());
            prop_assert!(g.diameter() + 1 <= n || g.diameter() == 0 || n == 0);
        }

        // The quantizer is constant on cells and injective across cells.
        #[test]
        fn quantizer_constant_on_cells(
            bound in 0.5f64..10.0,
            width_frac in 0.05f64..0.9,
            cell_a in 0u64..40,
            cell_b in 0u64..40,
            offset in 0.1f64..0.9,
        ) {
            let width = bound * width_frac;
            let cfg = QuantizerConfig::new(bound, width).unwrap();
            let cells = cfg.cell_count();
            let a = cell_a % cells;
            let b = cell_b % cells;
            // Sample строго inside cells to stay clear of boundary rounding.
            let za = -bound + (a as f64 + offset) * width;
            let zb = -bound + (b as f64 + 0.5) * width;
            prop_assume!(za.abs() <= bound && zb.abs() <= bound);
            let ia = cfg.index(za).unwrap();
            let ib = cfg.index(zb).unwrap();
            prop_assert_eq!(ia == ib, a == b);
        }
    }
}
