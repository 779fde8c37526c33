//! Shared test fixtures: the two small reference graphs used across modules.

use crate::bits;
use crate::graph::Graph;

/// Six vertices, edges 12, 34, 56, 24, 26, 46 (1-based names "1".."6").
pub(crate) fn graph_g1() -> Graph {
    let mut g = Graph::numbered(6).unwrap();
    for (u, v) in [(1, 2), (3, 4), (5, 6), (2, 4), (2, 6), (4, 6)] {
        g.add_edge(u - 1, v - 1).unwrap();
    }
    g
}

/// Five vertices, edges 13, 14, 24, 25, 35 (1-based names "1".."5").
pub(crate) fn graph_g2() -> Graph {
    let mut g = Graph::numbered(5).unwrap();
    for (u, v) in [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)] {
        g.add_edge(u - 1, v - 1).unwrap();
    }
    g
}

/// Bitmask from 1-based vertex numbers.
pub(crate) fn mask1(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bits::bit(v - 1))
}
