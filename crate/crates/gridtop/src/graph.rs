//! Finite simple graphs on at most 64 labelled vertices, plus the grid-graph
//! families the rest of the crate studies.
//!
//! Vertices are indices `0..n`; adjacency is one `u64` bitmask per vertex.
//! Grid graphs use column-major indexing: in a 3×n grid the vertices of
//! column j are `a_j, b_j, c_j` (top to bottom) with indices
//! `3(j−1), 3(j−1)+1, 3(j−1)+2`, so the index order realises the total order
//! `a_1 < b_1 < c_1 < a_2 < …`. Labels are `"a1"`, `"b3"`, and so on.

use std::collections::VecDeque;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::bits;
use crate::error::{Error, Result};

/// A simple undirected graph with labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    /// Create an edgeless graph with the given vertex labels.
    ///
    /// # Errors
    /// Rejects more than 64 vertices and duplicate labels.
    pub fn new(labels: Vec<String>) -> Result<Graph> {
        if labels.len() > 64 {
            return Err(Error::capacity(format!(
                "graphs are limited to 64 vertices, got {}",
                labels.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::domain(format!("duplicate vertex label {a:?}")));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![0; n],
        })
    }

    /// Edgeless graph with labels `"1"`, `"2"`, …, `"n"`.
    pub fn numbered(n: usize) -> Result<Graph> {
        Graph::new((1..=n).map(|i| i.to_string()).collect())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Bitmask of all vertices.
    pub fn vertex_set(&self) -> u64 {
        bits::full(self.n())
    }

    /// Vertex labels, in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of vertex `v`.
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of the vertex with the given label.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v, self.n()))
        }
    }

    /// Add the edge `{u, v}`. Adding an existing edge is a no-op.
    ///
    /// # Errors
    /// Rejects loops and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::domain(format!("loop at vertex {u} rejected")));
        }
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
        Ok(())
    }

    /// Is `{u, v}` an edge?
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && bits::has(self.adj[u], v)
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in bits::iter(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Is `set` independent (no edge inside)? The empty set is independent.
    pub fn is_independent(&self, set: u64) -> bool {
        bits::iter(set).all(|v| self.adj[v] & set == 0)
    }

    /// All independent sets of size exactly `k`, in ascending bitmask order.
    pub fn enumerate_independent_sets(&self, k: usize) -> Vec<u64> {
        if k > self.n() {
            return Vec::new();
        }
        (0..self.n())
            .combinations(k)
            .map(|c| c.iter().fold(0u64, |m, &v| m | bits::bit(v)))
            .filter(|&m| self.is_independent(m))
            .sorted()
            .collect()
    }

    /// Does `set` induce a connected subgraph? Singletons are connected.
    ///
    /// # Errors
    /// The empty set has no well-defined answer here and is rejected.
    pub fn is_connected_subset(&self, set: u64) -> Result<bool> {
        if set == 0 {
            return Err(Error::domain(
                "connectivity of the empty vertex set is undefined",
            ));
        }
        if set & !self.vertex_set() != 0 {
            let v = bits::max(set & !self.vertex_set());
            return Err(Error::VertexOutOfRange(v, self.n()));
        }
        let start = set.trailing_zeros() as usize;
        let mut seen = bits::bit(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in bits::iter(self.adj[v] & set & !seen) {
                seen |= bits::bit(w);
                queue.push_back(w);
            }
        }
        Ok(seen == set)
    }

    /// All size-`k` subsets inducing a disconnected subgraph, ascending.
    pub fn enumerate_disconnected_sets(&self, k: usize) -> Vec<u64> {
        if k < 2 || k > self.n() {
            return Vec::new();
        }
        (0..self.n())
            .combinations(k)
            .map(|c| c.iter().fold(0u64, |m, &v| m | bits::bit(v)))
            .filter(|&m| !self.is_connected_subset(m).expect("nonempty set"))
            .sorted()
            .collect()
    }

    /// Is `v` a leaf (degree exactly 1)?
    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Is `v` simplicial, i.e. does its neighbourhood induce a clique?
    ///
    /// Isolated vertices and leaves are simplicial.
    pub fn is_simplicial_vertex(&self, v: usize) -> bool {
        let nb = self.adj[v];
        bits::iter(nb).all(|u| nb & !bits::bit(u) & !self.adj[u] == 0)
    }

    /// Subgraph induced on `keep`, with vertices reindexed contiguously from 0
    /// in their original order. Labels are preserved.
    pub fn induced_subgraph(&self, keep: u64) -> Result<Graph> {
        if keep & !self.vertex_set() != 0 {
            let v = bits::max(keep & !self.vertex_set());
            return Err(Error::VertexOutOfRange(v, self.n()));
        }
        let old: Vec<usize> = bits::to_vec(keep);
        let mut g = Graph::new(old.iter().map(|&v| self.labels[v].clone()).collect())?;
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph after removing the vertices with the given labels.
    pub fn delete_labeled(&self, labels: &[&str]) -> Result<Graph> {
        let mut drop = 0u64;
        for l in labels {
            drop |= bits::bit(self.index_of(l)?);
        }
        self.induced_subgraph(self.vertex_set() & !drop)
    }

    /// Graphviz rendering, one line per vertex and per edge.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph {\n");
        for l in &self.labels {
            let _ = writeln!(s, "  {l:?};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {:?} -- {:?};", self.labels[u], self.labels[v]);
        }
        s.push_str("}\n");
        s
    }
}

/// The `rows × cols` grid graph with column-major indexing.
///
/// Row r of column j is labelled with the r-th letter followed by j, so the
/// 2×n grid has vertices `a1, b1, a2, b2, …` and the 3×n grid `a1, b1, c1, …`.
///
/// # Errors
/// Rejects zero dimensions, more than 26 rows, and more than 64 vertices.
pub fn make_grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::domain("grid dimensions must be positive"));
    }
    if rows > 26 {
        return Err(Error::domain("grids are limited to 26 rows"));
    }
    if rows * cols > 64 {
        return Err(Error::capacity(format!(
            "{rows}x{cols} grid has {} vertices, limit is 64",
            rows * cols
        )));
    }
    let mut labels = Vec::with_capacity(rows * cols);
    for j in 1..=cols {
        for r in 0..rows {
            labels.push(format!("{}{}", (b'a' + r as u8) as char, j));
        }
    }
    let mut g = Graph::new(labels)?;
    let idx = |r: usize, c: usize| rows * c + r;
    for c in 0..cols {
        for r in 0..rows {
            if r + 1 < rows {
                g.add_edge(idx(r, c), idx(r + 1, c))?;
            }
            if c + 1 < cols {
                g.add_edge(idx(r, c), idx(r, c + 1))?;
            }
        }
    }
    Ok(g)
}

/// The named grid-graph families, all parametrised by a single integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridFamily {
    /// `G_{2×n}`: the 2×n grid (n ≥ 1).
    G2xn,
    /// `G'_{2×n}`: the 2×(n+1) grid minus `b_{n+1}` (n ≥ 1).
    G2xnPrime,
    /// `G_{3×n}`: the 3×n grid (n ≥ 1).
    G3xn,
    /// `G'_{3×m}`: the 3×(m+1) grid minus `a_{m+1}` (m ≥ 1).
    G3xnPrime,
    /// `G^(1)_{3×m}`: the 3×(m+1) grid minus `a_m, b_m, a_{m+1}, b_{m+1}` (m ≥ 2).
    G3xn1,
    /// `G^(2)_{3×n}`: the 3×n grid minus `a_n, b_n` (n ≥ 1).
    G3xn2,
    /// `H_1(m)`: the 3×m grid minus `b_m, c_m` (m ≥ 1).
    H1,
    /// `H_2(m) = H_1(m−1)` (m ≥ 2).
    H2,
    /// `H_3(m)`: the 3×m grid minus `b_{m−1}, c_{m−1}, b_m, c_m` (m ≥ 2).
    H3,
}

impl GridFamily {
    /// The smallest parameter the family is defined for.
    pub fn min_param(self) -> usize {
        match self {
            GridFamily::G2xn
            | GridFamily::G2xnPrime
            | GridFamily::G3xn
            | GridFamily::G3xnPrime
            | GridFamily::G3xn2
            | GridFamily::H1 => 1,
            GridFamily::G3xn1 | GridFamily::H2 | GridFamily::H3 => 2,
        }
    }

    /// The spelling accepted by [`parse_family_spec`].
    pub fn name(self) -> &'static str {
        match self {
            GridFamily::G2xn => "g2xn",
            GridFamily::G2xnPrime => "g2xn'",
            GridFamily::G3xn => "g3xn",
            GridFamily::G3xnPrime => "g3xn'",
            GridFamily::G3xn1 => "g3xn1",
            GridFamily::G3xn2 => "g3xn2",
            GridFamily::H1 => "h1",
            GridFamily::H2 => "h2",
            GridFamily::H3 => "h3",
        }
    }
}

/// Build the `n`-th member of a grid family.
///
/// # Errors
/// Rejects parameters below the family minimum and grids past 64 vertices.
pub fn make_family(family: GridFamily, n: usize) -> Result<Graph> {
    if n < family.min_param() {
        return Err(Error::domain(format!(
            "family {} requires parameter >= {}, got {n}",
            family.name(),
            family.min_param()
        )));
    }
    let col = |prefix: char, j: usize| format!("{prefix}{j}");
    match family {
        GridFamily::G2xn => make_grid(2, n),
        GridFamily::G2xnPrime => {
            let g = make_grid(2, n + 1)?;
            g.delete_labeled(&[&col('b', n + 1)])
        }
        GridFamily::G3xn => make_grid(3, n),
        GridFamily::G3xnPrime => {
            let g = make_grid(3, n + 1)?;
            g.delete_labeled(&[&col('a', n + 1)])
        }
        GridFamily::G3xn1 => {
            let g = make_grid(3, n + 1)?;
            g.delete_labeled(&[
                &col('a', n),
                &col('b', n),
                &col('a', n + 1),
                &col('b', n + 1),
            ])
        }
        GridFamily::G3xn2 => {
            let g = make_grid(3, n)?;
            g.delete_labeled(&[&col('a', n), &col('b', n)])
        }
        GridFamily::H1 => {
            let g = make_grid(3, n)?;
            g.delete_labeled(&[&col('b', n), &col('c', n)])
        }
        GridFamily::H2 => make_family(GridFamily::H1, n - 1),
        GridFamily::H3 => {
            let g = make_grid(3, n)?;
            g.delete_labeled(&[
                &col('b', n - 1),
                &col('c', n - 1),
                &col('b', n),
                &col('c', n),
            ])
        }
    }
}

/// Parse a graph spec like `g2xn:5`, `g3xn':3`, `h2:4`, or `grid:4x5`.
pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    let (name, param) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected `family:param`, got {spec:?}")))?;
    if name == "grid" {
        let (r, c) = param
            .split_once('x')
            .ok_or_else(|| Error::Parse(format!("expected `grid:RxC`, got {spec:?}")))?;
        let rows: usize = r
            .parse()
            .map_err(|_| Error::Parse(format!("bad row count {r:?}")))?;
        let cols: usize = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad column count {c:?}")))?;
        return make_grid(rows, cols);
    }
    let family = [
        GridFamily::G2xn,
        GridFamily::G2xnPrime,
        GridFamily::G3xn,
        GridFamily::G3xnPrime,
        GridFamily::G3xn1,
        GridFamily::G3xn2,
        GridFamily::H1,
        GridFamily::H2,
        GridFamily::H3,
    ]
    .into_iter()
    .find(|f| f.name() == name)
    .ok_or_else(|| Error::Parse(format!("unknown graph family {name:?}")))?;
    let n: usize = param
        .parse()
        .map_err(|_| Error::Parse(format!("bad family parameter {param:?}")))?;
    make_family(family, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{graph_g1, graph_g2, mask1 as mask};

    #[test]
    fn grid_2x3_shape() {
        let g = make_grid(2, 3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.labels(), &["a1", "b1", "a2", "b2", "a3", "b3"]);
        let a2 = g.index_of("a2").unwrap();
        assert_eq!(
            bits::to_vec(g.neighbors(a2)),
            vec![
                g.index_of("a1").unwrap(),
                g.index_of("b2").unwrap(),
                g.index_of("a3").unwrap()
            ]
        );
    }

    #[test]
    fn grid_2x3_independent_triples() {
        // Brute-force oracle: exactly the two diagonals survive.
        let g = make_grid(2, 3).unwrap();
        let mut expect = Vec::new();
        for s in 0..1u64 << 6 {
            if s.count_ones() == 3 && g.is_independent(s) {
                expect.push(s);
            }
        }
        assert_eq!(g.enumerate_independent_sets(3), expect);
        let diag1 = mask(&[1, 4, 5]); // a1, b2, a3
        let diag2 = mask(&[2, 3, 6]); // b1, a2, b3
        assert_eq!(expect, vec![diag1, diag2]);
    }

    #[test]
    fn g1_independent_triples() {
        let g = graph_g1();
        let got = g.enumerate_independent_sets(3);
        let expect: Vec<u64> = [[1, 3, 5], [1, 3, 6], [1, 4, 5], [2, 3, 5]]
            .iter()
            .map(|t| mask(t))
            .collect();
        assert_eq!(got, {
            let mut e = expect;
            e.sort();
            e
        });
    }

    #[test]
    fn g2_connectivity() {
        let g = graph_g2();
        assert!(!g.is_connected_subset(mask(&[1, 2, 3])).unwrap());
        assert!(g.is_connected_subset(mask(&[1, 3, 5])).unwrap());
        assert!(g.is_connected_subset(mask(&[2])).unwrap());
        assert!(g.is_connected_subset(0).is_err());
    }

    #[test]
    fn g2_disconnected_triples_match_brute_force() {
        let g = graph_g2();
        let mut expect = Vec::new();
        for s in 0..1u64 << 5 {
            if s.count_ones() == 3 && !g.is_connected_subset(s).unwrap() {
                expect.push(s);
            }
        }
        assert_eq!(g.enumerate_disconnected_sets(3), expect);
        assert_eq!(expect.len(), 5);
    }

    #[test]
    fn simplicial_and_leaf_predicates() {
        let g = make_grid(2, 3).unwrap();
        let a1 = g.index_of("a1").unwrap();
        assert!(!g.is_simplicial_vertex(a1)); // b1 and a2 are non-adjacent
        assert!(!g.is_leaf(a1));

        let mut h = Graph::numbered(3).unwrap();
        h.add_edge(0, 1).unwrap();
        assert!(h.is_leaf(0));
        assert!(h.is_simplicial_vertex(0));
        assert!(!h.is_leaf(2)); // isolated
        assert!(h.is_simplicial_vertex(2));
    }

    #[test]
    fn induced_subgraph_reindexes_and_keeps_labels() {
        let g = make_grid(2, 3).unwrap();
        let keep = ["a2", "b2", "a3", "b3"]
            .iter()
            .fold(0u64, |m, l| m | bits::bit(g.index_of(l).unwrap()));
        let h = g.induced_subgraph(keep).unwrap();
        assert_eq!(h.labels(), &["a2", "b2", "a3", "b3"]);
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge(0, 1)); // a2 -- b2 under new indices
    }

    #[test]
    fn family_shapes() {
        let g = make_family(GridFamily::G2xnPrime, 1).unwrap();
        assert_eq!(g.labels(), &["a1", "b1", "a2"]);
        assert_eq!(g.edge_count(), 2);

        let g = make_family(GridFamily::G3xn1, 2).unwrap();
        assert_eq!(g.labels(), &["a1", "b1", "c1", "c2", "c3"]);
        assert_eq!(g.edge_count(), 4); // the 5-vertex path

        let g = make_family(GridFamily::H1, 2).unwrap();
        assert_eq!(g.labels(), &["a1", "b1", "c1", "a2"]);
        assert_eq!(g.edge_count(), 3);

        let g = make_family(GridFamily::H1, 1).unwrap();
        assert_eq!(g.labels(), &["a1"]);
        assert_eq!(g.edge_count(), 0);

        let g = make_family(GridFamily::G3xnPrime, 1).unwrap();
        assert_eq!(g.labels(), &["a1", "b1", "c1", "b2", "c2"]);
        assert_eq!(g.edge_count(), 5);

        assert_eq!(
            make_family(GridFamily::H2, 3).unwrap(),
            make_family(GridFamily::H1, 2).unwrap()
        );
        assert_eq!(
            make_family(GridFamily::H3, 2).unwrap().labels(),
            &["a1", "a2"]
        );
    }

    #[test]
    fn family_counts_follow_closed_forms() {
        for m in 2..=6 {
            let g = make_family(GridFamily::G3xn1, m).unwrap();
            assert_eq!(g.n(), 3 * m - 1);
            assert_eq!(g.edge_count(), 5 * m - 6);
        }
        for m in 2..=6 {
            let g = make_family(GridFamily::H1, m).unwrap();
            assert_eq!(g.n(), 3 * m - 2);
            assert_eq!(g.edge_count(), 5 * m - 7);
        }
    }

    #[test]
    fn parse_specs() {
        assert_eq!(parse_family_spec("g2xn:5").unwrap().n(), 10);
        assert_eq!(parse_family_spec("g3xn':3").unwrap().n(), 11);
        assert_eq!(parse_family_spec("h2:3").unwrap().n(), 4);
        assert_eq!(parse_family_spec("grid:4x5").unwrap().n(), 20);
        assert!(parse_family_spec("g2xn:0").is_err());
        assert!(parse_family_spec("h2:1").is_err());
        assert!(parse_family_spec("grid:0x5").is_err());
        assert!(parse_family_spec("mystery:3").is_err());
        assert!(parse_family_spec("g2xn").is_err());
    }

    #[test]
    fn rejects_bad_edges_and_labels() {
        let mut g = Graph::numbered(3).unwrap();
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 7).is_err());
        assert!(Graph::new(vec!["x".into(), "x".into()]).is_err());
        assert!(g.index_of("zz").is_err());
    }

    #[test]
    fn dot_output_lists_all_edges() {
        let g = make_family(GridFamily::G2xnPrime, 1).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("\"a1\" -- \"b1\""));
        assert!(dot.contains("\"a1\" -- \"a2\""));
        assert_eq!(dot.matches("--").count(), 2);
    }
}
