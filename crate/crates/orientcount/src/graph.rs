//! Undirected labelled graphs on up to 64 vertices.
//!
//! One adjacency row is a single `u64` mask, so neighbourhood intersections,
//! degree counts and subset tests are word operations. Edges are kept as an
//! explicit list sorted lexicographically; the position of a pair in that
//! list is the edge index used by orientation bit vectors everywhere else.

use crate::error::{Error, Result};

/// Hard cap so an adjacency row fits one machine word.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(u8, u8)>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        check_vertex_count(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        })
    }

    /// Builds a graph from an edge list. Endpoint order within a pair is
    /// irrelevant; self-loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_vertex_count(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidArgument(format!("duplicate edge {u}-{v}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph {
            n,
            edges: edges_from_adj(&adj),
            adj,
        })
    }

    /// Builds a graph from adjacency rows, validating symmetry and the
    /// absence of self-loops and out-of-range bits.
    pub fn from_adj(adj: &[u64]) -> Result<Graph> {
        let n = adj.len();
        check_vertex_count(n)?;
        let mask = vertex_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidArgument(format!(
                    "adjacency row {v} has bits beyond vertex {}",
                    n - 1
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {v}")));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if (adj[u] >> v & 1) != (adj[v] >> u & 1) {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(Graph {
            n,
            edges: edges_from_adj(adj),
            adj: adj.to_vec(),
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_vertex_count(n)?;
        let mask = vertex_mask(n);
        let adj: Vec<u64> = (0..n).map(|v| mask & !(1 << v)).collect();
        Ok(Graph {
            n,
            edges: edges_from_adj(&adj),
            adj,
        })
    }

    /// Path v0 - v1 - ... - v(n-1).
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph with sides {0..a} and {a..a+b}.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidArgument(
                "bipartite sides must be non-empty".into(),
            ));
        }
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Balanced complete r-partite graph on n vertices. Vertex v goes to
    /// part v mod r, which makes the part sizes as equal as possible.
    pub fn turan(n: usize, r: usize) -> Result<Graph> {
        check_vertex_count(n)?;
        if r == 0 {
            return Err(Error::InvalidArgument("part count r must be >= 1".into()));
        }
        if r > n {
            return Err(Error::InvalidArgument(format!(
                "part count {r} exceeds vertex count {n}"
            )));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if u % r != v % r {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        debug_assert_eq!(g.edge_count() as u64, turan_number(n as u64, r as u64)?);
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list in lexicographic order; the slice index is the edge index.
    #[inline]
    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    /// Neighbour mask of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn adj_rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        vertex_mask(self.n)
    }

    /// Position of edge {u,v} in the lexicographic edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&(a as u8, b as u8)).ok()
    }

    /// Common-neighbour set of two distinct vertices, as a mask.
    pub fn common_neighbours(&self, u: usize, v: usize) -> Result<u64> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(Error::InvalidArgument(
                "common neighbours need two distinct vertices".into(),
            ));
        }
        Ok(self.adj[u] & self.adj[v])
    }

    /// Graph with vertex `v` removed; higher-numbered vertices shift down.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        check_vertex(v, self.n)?;
        if self.n == 1 {
            return Err(Error::InvalidArgument(
                "cannot delete the last vertex".into(),
            ));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a as usize != v && b as usize != v)
            .map(|&(a, b)| (shift(a as usize), shift(b as usize)))
            .collect();
        Graph::from_edges(self.n - 1, &edges)
    }

    /// Relabelled copy: old vertex v becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation length {} != vertex count {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            check_vertex(p, self.n)?;
            seen |= 1 << p;
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a as usize], perm[b as usize]))
            .collect();
        Graph::from_edges(self.n, &edges)
    }

    /// True iff an injective vertex map carries every edge of `h` to an
    /// edge of `self` (sub-copy, not induced).
    pub fn contains_subgraph(&self, h: &Graph) -> bool {
        if h.n > self.n || h.edge_count() > self.edge_count() {
            return false;
        }
        // Map the busiest pattern vertices first.
        let mut order: Vec<usize> = (0..h.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
        let mut assign = vec![usize::MAX; h.n];
        self.embed(h, &order, 0, &mut assign, 0)
    }

    fn embed(&self, h: &Graph, order: &[usize], depth: usize, assign: &mut [usize], used: u64) -> bool {
        if depth == order.len() {
            return true;
        }
        let pv = order[depth];
        // Candidates must be adjacent to the images of all previously
        // assigned pattern neighbours.
        let mut cand = self.vertex_mask() & !used;
        for &pu in &order[..depth] {
            if h.has_edge(pv, pu) {
                cand &= self.adj[assign[pu]];
            }
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            assign[pv] = v;
            if self.embed(h, order, depth + 1, assign, used | 1 << v) {
                return true;
            }
        }
        assign[pv] = usize::MAX;
        false
    }

    /// Exact chromatic number by iterative deepening; intended for the
    /// small graphs underlying forbidden patterns.
    pub fn chromatic_number(&self) -> usize {
        if self.edge_count() == 0 {
            return 1;
        }
        for k in 2..=self.n {
            if self.colourable(k) {
                return k;
            }
        }
        self.n
    }

    fn colourable(&self, k: usize) -> bool {
        let mut colours = vec![usize::MAX; self.n];
        self.colour_rec(0, k, &mut colours)
    }

    fn colour_rec(&self, v: usize, k: usize, colours: &mut [usize]) -> bool {
        if v == self.n {
            return true;
        }
        let mut banned = 0u64;
        let mut nb = self.adj[v] & ((1u64 << v) - 1).min(u64::MAX);
        if v == 0 {
            nb = 0;
        }
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            banned |= 1 << colours[u];
        }
        // Symmetry break: vertex v never uses a colour above v or above k-1.
        let limit = k.min(v + 1);
        for c in 0..limit {
            if banned >> c & 1 == 0 {
                colours[v] = c;
                if self.colour_rec(v + 1, k, colours) {
                    return true;
                }
            }
        }
        colours[v] = usize::MAX;
        false
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Edge count of the balanced complete r-partite graph on n vertices.
/// For r = 2 this is floor(n^2/4).
pub fn turan_number(n: u64, r: u64) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidArgument("part count r must be >= 1".into()));
    }
    // r parts: (n mod r) of size ceil(n/r), the rest of size floor(n/r).
    let big = n % r;
    let small_size = n / r;
    let big_size = small_size + 1;
    let inside = big * big_size * (big_size.saturating_sub(1)) / 2
        + (r - big) * small_size * (small_size.saturating_sub(1)) / 2;
    Ok(n * (n - 1) / 2 - inside)
}

#[inline]
pub(crate) fn vertex_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::VertexCount {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexRange { v, n })
    } else {
        Ok(())
    }
}

fn edges_from_adj(adj: &[u64]) -> Vec<(u8, u8)> {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        let mut higher = adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            edges.push((u as u8, v as u8));
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_graph_small_cases() {
        // K_{2,2}
        let g = Graph::turan(4, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        // K_{2,3}
        let g = Graph::turan(5, 2).unwrap();
        assert_eq!(g.edge_count(), 6);
        // K_{2,2,2}: every vertex pair across three parts of size two.
        let g = Graph::turan(6, 3).unwrap();
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn turan_graph_rejects_bad_args() {
        assert!(Graph::turan(4, 0).is_err());
        assert!(Graph::turan(3, 4).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn turan_number_values() {
        assert_eq!(turan_number(7, 2).unwrap(), 12); // floor(49/4)
        assert_eq!(turan_number(3, 3).unwrap(), 3); // complete graph
        assert_eq!(turan_number(6, 3).unwrap(), 12);
        assert!(turan_number(5, 0).is_err());
    }

    #[test]
    fn turan_number_matches_square_formula() {
        for n in 1..=1000u64 {
            assert_eq!(turan_number(n, 2).unwrap(), n * n / 4);
        }
        // Spot checks far beyond graph scale.
        for n in [10_000u64, 123_456, 1_000_000] {
            assert_eq!(turan_number(n, 2).unwrap(), n * n / 4);
        }
    }

    #[test]
    fn edges_sorted_lexicographically() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(1, 2), None);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn from_adj_validates() {
        assert!(Graph::from_adj(&[0b010, 0b001, 0b000]).is_ok());
        // asymmetric
        assert!(Graph::from_adj(&[0b010, 0b000, 0b000]).is_err());
        // self-loop
        assert!(Graph::from_adj(&[0b001]).is_err());
    }

    #[test]
    fn common_neighbours_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.common_neighbours(0, 1).unwrap(), 0b1100);

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.common_neighbours(0, 1).unwrap(), 0b11100);

        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.common_neighbours(0, 2).unwrap(), 0b010);

        assert!(p3.common_neighbours(0, 0).is_err());
        assert!(p3.common_neighbours(0, 5).is_err());
    }

    #[test]
    fn delete_vertex_relabels() {
        let k4 = Graph::complete(4).unwrap();
        let g = k4.delete_vertex(1).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn contains_subgraph_basics() {
        let k4 = Graph::complete(4).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert!(k4.contains_subgraph(&k3));
        assert!(!c5.contains_subgraph(&k3));
        assert!(c5.contains_subgraph(&Graph::path(4).unwrap()));
        // C4 contains no C3 even as a sub-copy.
        let c4 = Graph::cycle(4).unwrap();
        assert!(!c4.contains_subgraph(&k3));
    }

    #[test]
    fn chromatic_number_known_graphs() {
        assert_eq!(Graph::complete(4).unwrap().chromatic_number(), 4);
        assert_eq!(Graph::cycle(5).unwrap().chromatic_number(), 3);
        assert_eq!(Graph::cycle(6).unwrap().chromatic_number(), 2);
        assert_eq!(Graph::path(4).unwrap().chromatic_number(), 2);
        assert_eq!(Graph::empty(3).unwrap().chromatic_number(), 1);
    }
}
