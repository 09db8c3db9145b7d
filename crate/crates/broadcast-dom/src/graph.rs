//! Immutable simple graphs with precomputed metric data.
//!
//! Distances are stored as a dense matrix; instances stay small (a few
//! hundred vertices at most, solvers cap far lower) so O(1) lookups win.

use crate::error::{Error, Result};

/// Sentinel distance for unreachable vertex pairs.
pub const INF: u32 = u32::MAX;

/// A finite simple undirected graph with all-pairs distances, per-vertex
/// eccentricities (within the vertex's component) and the component
/// partition. Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    dist: Vec<Vec<u32>>,
    ecc: Vec<u32>,
    components: Vec<Vec<usize>>,
    comp_of: Vec<usize>,
}

impl Graph {
    /// Build a graph from an edge list. Edges are deduplicated; loops and
    /// out-of-range endpoints are rejected with the offending pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self::from_adj(adj))
    }

    fn from_adj(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let mut dist = vec![vec![INF; n]; n];
        for (s, row) in dist.iter_mut().enumerate() {
            bfs(&adj, s, row);
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if comp_of[v] == usize::MAX {
                let id = components.len();
                let members: Vec<usize> =
                    (0..n).filter(|&u| dist[v][u] != INF).collect();
                for &u in &members {
                    comp_of[u] = id;
                }
                components.push(members);
            }
        }
        let ecc = (0..n)
            .map(|v| {
                components[comp_of[v]]
                    .iter()
                    .map(|&u| dist[v][u])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Graph { n, adj, dist, ecc, components, comp_of }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Hop distance between `u` and `v`, or [`INF`] when in different components.
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    /// Eccentricity of `v` within its component.
    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.comp_of[v]
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Least-index isolated vertex, if any.
    pub fn trivial_component(&self) -> Option<usize> {
        self.components
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .min()
    }

    pub fn radius(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.ecc.iter().copied().min().unwrap_or(0))
    }

    pub fn diameter(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.ecc.iter().copied().max().unwrap_or(0))
    }

    /// Closed ball of radius `s` around `v`, sorted.
    pub fn ball(&self, v: usize, s: u32) -> Vec<usize> {
        (0..self.n).filter(|&u| self.dist[v][u] <= s).collect()
    }

    /// Subgraph induced by `vs`. Returns the subgraph together with the
    /// old-to-new index mapping (`None` for vertices outside `vs`).
    /// Distances and eccentricities are recomputed inside the subgraph.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<Option<usize>>)> {
        if vs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut sorted: Vec<usize> = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange(v));
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in sorted.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let adj = sorted
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| old_to_new[w])
                    .collect()
            })
            .collect();
        Ok((Self::from_adj(adj), old_to_new))
    }
}

fn bfs(adj: &[Vec<usize>], source: usize, dist: &mut [u32]) {
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Floyd-Warshall reference for the BFS distance matrix.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.vertex_count();
        let mut d = vec![vec![INF; n]; n];
        for v in 0..n {
            d[v][v] = 0;
            for &w in g.neighbors(v) {
                d[v][w] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                if d[i][k] == INF {
                    continue;
                }
                for j in 0..n {
                    if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    #[test]
    fn p3_metric() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.ecc(0), 2);
        assert_eq!(g.ecc(1), 1);
        assert_eq!(g.ecc(2), 2);
        assert_eq!(g.diameter().unwrap(), 2);
    }

    #[test]
    fn k1() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.ecc(0), 0);
        assert_eq!(g.trivial_component(), Some(0));
    }

    #[test]
    fn loop_rejected() {
        assert!(matches!(
            Graph::from_edges(1, &[(0, 0)]),
            Err(Error::LoopEdge(0))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 3)]),
            Err(Error::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn p5_radius_diameter() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.radius().unwrap(), 2);
        assert_eq!(g.diameter().unwrap(), 4);
    }

    #[test]
    fn k6_radius_diameter() {
        let edges: Vec<_> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(g.radius().unwrap(), 1);
        assert_eq!(g.diameter().unwrap(), 1);
    }

    #[test]
    fn disconnected_radius_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.radius(), Err(Error::Disconnected)));
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.dist(0, 2), INF);
        assert_eq!(g.ecc(0), 1);
    }

    #[test]
    fn induced_subgraph_basics() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (k2, map) = p4.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(map[0], Some(0));
        assert_eq!(map[2], None);

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (p3, _) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.diameter().unwrap(), 2);
        // Distances in the subgraph exceed the parent's restriction.
        assert_eq!(c5.dist(0, 2), 2);
        assert_eq!(p3.dist(0, 2), 2);

        let (copy, map) = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(copy.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(map[v], Some(v));
        }

        assert!(matches!(c5.induced_subgraph(&[]), Err(Error::EmptyVertexSet)));
    }

    #[test]
    fn bfs_matches_floyd_warshall() {
        let graphs = [
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap(),
            Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (5, 6)]).unwrap(),
        ];
        for g in &graphs {
            let fw = floyd_warshall(g);
            for u in 0..g.vertex_count() {
                for v in 0..g.vertex_count() {
                    assert_eq!(g.dist(u, v), fw[u][v]);
                }
            }
        }
    }
}
