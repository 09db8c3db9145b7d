//! Generators for the graph families used throughout the test corpus.
//!
//! Vertex numbering is canonical per family and documented on each variant;
//! tests and certificates rely on it.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path P_n, vertices 0..n in path order. Requires n >= 1.
    Path(usize),
    /// Cycle C_n, vertices 0..n in cyclic order. Requires n >= 3.
    Cycle(usize),
    /// Complete graph K_n. Requires n >= 1.
    Complete(usize),
    /// Grid P_m x P_n; vertex (i, j) is numbered i*n + j. Requires m, n >= 1.
    Grid(usize, usize),
    /// Star K_{1,n} with every edge subdivided once: center 0, midpoints
    /// 1..=n, leaves n+1..=2n with leaf n+i attached to midpoint i.
    /// Requires n >= 2.
    Spider(usize),
    /// Two copies of K_{r+1} joined by r independent edges: vertices 0..=r
    /// form clique A, r+1..=2r+1 form clique B, matching edges (i, r+1+i)
    /// for i = 1..=r. Vertices 0 and r+1 are the unmatched ones.
    /// Requires r >= 3.
    TwoRCliques(usize),
}

impl FamilySpec {
    pub fn generate(self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            FamilySpec::Path(n) => {
                if n < 1 {
                    return bad(format!("path requires n >= 1, got {n}"));
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            FamilySpec::Cycle(n) => {
                if n < 3 {
                    return bad(format!("cycle requires n >= 3, got {n}"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            FamilySpec::Complete(n) => {
                if n < 1 {
                    return bad(format!("complete requires n >= 1, got {n}"));
                }
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edges(n, &edges)
            }
            FamilySpec::Grid(m, n) => {
                if m < 1 || n < 1 {
                    return bad(format!("grid requires m, n >= 1, got {m}x{n}"));
                }
                let mut edges = Vec::new();
                for i in 0..m {
                    for j in 0..n {
                        let v = i * n + j;
                        if j + 1 < n {
                            edges.push((v, v + 1));
                        }
                        if i + 1 < m {
                            edges.push((v, v + n));
                        }
                    }
                }
                Graph::from_edges(m * n, &edges)
            }
            FamilySpec::Spider(n) => {
                if n < 2 {
                    return bad(format!("spider requires n >= 2, got {n}"));
                }
                let mut edges = Vec::new();
                for i in 1..=n {
                    edges.push((0, i));
                    edges.push((i, n + i));
                }
                Graph::from_edges(2 * n + 1, &edges)
            }
            FamilySpec::TwoRCliques(r) => {
                if r < 3 {
                    return bad(format!("tworcliques requires r >= 3, got {r}"));
                }
                let mut edges = Vec::new();
                for u in 0..=r {
                    for v in u + 1..=r {
                        edges.push((u, v));
                        edges.push((r + 1 + u, r + 1 + v));
                    }
                }
                for i in 1..=r {
                    edges.push((i, r + 1 + i));
                }
                Graph::from_edges(2 * r + 2, &edges)
            }
        }
    }

    /// Parse a `name:args` spec, e.g. `spider:3`, `grid:3,3`, `path:5`.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec `{s}` missing `:`")))?;
        let nums: Vec<usize> = args
            .split([',', 'x'])
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad family argument `{t}`")))
            })
            .collect::<Result<_>>()?;
        let one = |nums: &[usize]| -> Result<usize> {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(Error::Parse(format!("family `{name}` takes one argument")))
            }
        };
        match name {
            "path" => Ok(FamilySpec::Path(one(&nums)?)),
            "cycle" => Ok(FamilySpec::Cycle(one(&nums)?)),
            "complete" => Ok(FamilySpec::Complete(one(&nums)?)),
            "spider" => Ok(FamilySpec::Spider(one(&nums)?)),
            "tworcliques" => Ok(FamilySpec::TwoRCliques(one(&nums)?)),
            "grid" => {
                if nums.len() == 2 {
                    Ok(FamilySpec::Grid(nums[0], nums[1]))
                } else {
                    Err(Error::Parse("family `grid` takes two arguments".into()))
                }
            }
            _ => Err(Error::Parse(format!("unknown family `{name}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider3() {
        let g = FamilySpec::Spider(3).generate().unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.diameter().unwrap(), 4);
        assert_eq!(g.radius().unwrap(), 2);
    }

    #[test]
    fn spider4_radius_diameter() {
        let g = FamilySpec::Spider(4).generate().unwrap();
        assert_eq!(g.radius().unwrap(), 2);
        assert_eq!(g.diameter().unwrap(), 4);
    }

    #[test]
    fn tworcliques3() {
        let g = FamilySpec::TwoRCliques(3).generate().unwrap();
        assert_eq!(g.vertex_count(), 8);
        // two K_4's plus 3 matching edges
        assert_eq!(g.edge_count(), 2 * 6 + 3);
        // unmatched vertices 0 and r+1=4 are at distance 3
        assert_eq!(g.dist(0, 4), 3);
        assert!(g.has_edge(1, 5));
    }

    #[test]
    fn grid33() {
        let g = FamilySpec::Grid(3, 3).generate().unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.radius().unwrap(), 2);
        assert_eq!(g.diameter().unwrap(), 4);
    }

    #[test]
    fn path_cycle_metrics() {
        for n in 2..8 {
            let p = FamilySpec::Path(n).generate().unwrap();
            assert_eq!(p.diameter().unwrap(), (n - 1) as u32);
        }
        for n in 3..9 {
            let c = FamilySpec::Cycle(n).generate().unwrap();
            for v in 0..n {
                assert_eq!(c.ecc(v), (n / 2) as u32);
            }
        }
    }

    #[test]
    fn parse_specs() {
        assert_eq!(FamilySpec::parse("spider:3").unwrap(), FamilySpec::Spider(3));
        assert_eq!(FamilySpec::parse("grid:3,4").unwrap(), FamilySpec::Grid(3, 4));
        assert_eq!(FamilySpec::parse("grid:3x4").unwrap(), FamilySpec::Grid(3, 4));
        assert!(FamilySpec::parse("blob:1").is_err());
        assert!(FamilySpec::parse("spider").is_err());
        assert!(FamilySpec::Spider(1).generate().is_err());
        assert!(FamilySpec::TwoRCliques(2).generate().is_err());
    }
}
