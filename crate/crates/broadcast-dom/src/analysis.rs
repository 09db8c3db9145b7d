//! Derived per-broadcast sets and the domination / irredundance predicates.
//!
//! The private boundary is computed from the literal decrement definition
//! (vertices of `N_f[v]` left undominated when v's power drops by one); the
//! derived formulas `PB = PN` on `V_f^1` and `PB = B \cap PN` on `V_f^++`
//! are asserted by the test suite instead.

use std::collections::BTreeMap;

use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All derived sets for one broadcast. Pure data; `analyze` is a pure
/// function of (graph, broadcast).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BroadcastAnalysis {
    /// V_f^+ : positive vertices, increasing.
    pub vplus: Vec<usize>,
    /// V_f^1 : vertices with power exactly 1.
    pub vone: Vec<usize>,
    /// V_f^++ : vertices with power at least 2.
    pub vplusplus: Vec<usize>,
    /// U_f : vertices hearing no positive vertex.
    pub undominated: Vec<usize>,
    /// N_f[v] per positive v.
    pub fneigh: BTreeMap<usize, Vec<usize>>,
    /// B_f(v): vertices at distance exactly f(v) from v.
    pub boundary: BTreeMap<usize, Vec<usize>>,
    /// PN_f(v): vertices of N_f[v] in no other positive vertex's ball.
    pub pneigh: BTreeMap<usize, Vec<usize>>,
    /// PB_f(v): literal decrement definition.
    pub pbound: BTreeMap<usize, Vec<usize>>,
    /// EPB_f(v) = PB_f(v) - {v}.
    pub epbound: BTreeMap<usize, Vec<usize>>,
}

/// Check that `f` belongs to `g` (length and power caps); shared by every
/// predicate below so a broadcast built against another graph is caught.
fn check(g: &Graph, f: &Broadcast) -> Result<()> {
    if let Some(v) = g.trivial_component() {
        return Err(Error::TrivialComponent(v));
    }
    if f.len() != g.vertex_count() {
        return Err(Error::BroadcastLength { got: f.len(), want: g.vertex_count() });
    }
    for v in 0..g.vertex_count() {
        if f.power(v) > g.ecc(v) {
            return Err(Error::PowerExceedsEccentricity {
                vertex: v,
                power: f.power(v),
                ecc: g.ecc(v),
            });
        }
    }
    Ok(())
}

/// `u` hears some positive vertex of `pw`.
pub(crate) fn hears_raw(g: &Graph, pw: &[u32], u: usize) -> bool {
    pw.iter()
        .enumerate()
        .any(|(v, &p)| p >= 1 && g.dist(u, v) <= p)
}

/// U_f over a raw power slice.
pub(crate) fn undominated_raw(g: &Graph, pw: &[u32]) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&u| !hears_raw(g, pw, u))
        .collect()
}

pub(crate) fn dominating_raw(g: &Graph, pw: &[u32]) -> bool {
    (0..g.vertex_count()).all(|u| hears_raw(g, pw, u))
}

/// PB_f(v) via the decrement definition, over a raw power slice.
pub(crate) fn private_boundary_raw(g: &Graph, pw: &[u32], v: usize) -> Vec<usize> {
    debug_assert!(pw[v] >= 1);
    let mut dec = pw.to_vec();
    dec[v] -= 1;
    (0..g.vertex_count())
        .filter(|&u| g.dist(u, v) <= pw[v] && !hears_raw(g, &dec, u))
        .collect()
}

/// True iff every positive vertex has a nonempty private boundary.
/// Early-exits; used in solver inner loops.
pub(crate) fn irredundant_raw(g: &Graph, pw: &[u32]) -> bool {
    let mut dec = pw.to_vec();
    for v in 0..g.vertex_count() {
        if pw[v] == 0 {
            continue;
        }
        dec[v] -= 1;
        let empty = !(0..g.vertex_count())
            .any(|u| g.dist(u, v) <= pw[v] && !hears_raw(g, &dec, u));
        dec[v] += 1;
        if empty {
            return false;
        }
    }
    true
}

pub fn analyze(g: &Graph, f: &Broadcast) -> Result<BroadcastAnalysis> {
    check(g, f)?;
    let pw = f.powers();
    let vplus = f.positive();
    let vone: Vec<usize> = vplus.iter().copied().filter(|&v| pw[v] == 1).collect();
    let vplusplus: Vec<usize> = vplus.iter().copied().filter(|&v| pw[v] >= 2).collect();
    let undominated = undominated_raw(g, pw);

    let mut fneigh = BTreeMap::new();
    let mut boundary = BTreeMap::new();
    let mut pneigh = BTreeMap::new();
    let mut pbound = BTreeMap::new();
    let mut epbound = BTreeMap::new();
    for &v in &vplus {
        let ball = g.ball(v, pw[v]);
        let bdry: Vec<usize> = ball
            .iter()
            .copied()
            .filter(|&u| g.dist(u, v) == pw[v])
            .collect();
        let pn: Vec<usize> = ball
            .iter()
            .copied()
            .filter(|&u| {
                vplus
                    .iter()
                    .all(|&w| w == v || g.dist(u, w) > pw[w])
            })
            .collect();
        let pb = private_boundary_raw(g, pw, v);
        let epb: Vec<usize> = pb.iter().copied().filter(|&u| u != v).collect();
        fneigh.insert(v, ball);
        boundary.insert(v, bdry);
        pneigh.insert(v, pn);
        pbound.insert(v, pb);
        epbound.insert(v, epb);
    }
    Ok(BroadcastAnalysis {
        vplus,
        vone,
        vplusplus,
        undominated,
        fneigh,
        boundary,
        pneigh,
        pbound,
        epbound,
    })
}

/// True iff U_f is empty.
pub fn is_dominating(g: &Graph, f: &Broadcast) -> Result<bool> {
    check(g, f)?;
    Ok(dominating_raw(g, f.powers()))
}

/// True iff PB_f(v) is nonempty for every positive v. Vacuously true for
/// the all-zero broadcast.
pub fn is_irredundant(g: &Graph, f: &Broadcast) -> Result<bool> {
    check(g, f)?;
    Ok(irredundant_raw(g, f.powers()))
}

/// Dominating and irredundant: exactly the characterization of minimal
/// dominating broadcasts.
pub fn is_minimal_dominating(g: &Graph, f: &Broadcast) -> Result<bool> {
    Ok(is_dominating(g, f)? && is_irredundant(g, f)?)
}

/// True iff EPB_f(v) is nonempty for every positive v.
pub fn has_epb_everywhere(g: &Graph, f: &Broadcast) -> Result<bool> {
    check(g, f)?;
    let pw = f.powers();
    for v in f.positive() {
        let pb = private_boundary_raw(g, pw, v);
        if !pb.iter().any(|&u| u != v) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn path(n: usize) -> Graph {
        FamilySpec::Path(n).generate().unwrap()
    }

    fn bc(g: &Graph, pw: &[u32]) -> Broadcast {
        Broadcast::new(g, pw.to_vec()).unwrap()
    }

    #[test]
    fn p3_single_broadcaster() {
        let g = path(3);
        let f = bc(&g, &[1, 0, 0]);
        let a = analyze(&g, &f).unwrap();
        assert_eq!(a.vplus, vec![0]);
        assert_eq!(a.undominated, vec![2]);
        assert_eq!(a.pbound[&0], vec![0, 1]);
        assert!(!is_dominating(&g, &f).unwrap());
    }

    #[test]
    fn k4_sole_broadcaster_hears_everyone() {
        let g = FamilySpec::Complete(4).generate().unwrap();
        let f = bc(&g, &[1, 0, 0, 0]);
        let a = analyze(&g, &f).unwrap();
        assert!(a.undominated.is_empty());
        assert_eq!(a.pbound[&0], vec![0, 1, 2, 3]);
        assert!(is_minimal_dominating(&g, &f).unwrap());
    }

    #[test]
    fn p3_two_broadcasters_shared_middle() {
        let g = path(3);
        let f = bc(&g, &[1, 0, 1]);
        let a = analyze(&g, &f).unwrap();
        // vertex 1 is heard by both, so neither keeps it privately
        assert_eq!(a.pbound[&0], vec![0]);
        assert_eq!(a.pbound[&2], vec![2]);
        assert_eq!(a.pneigh[&0], vec![0]);
    }

    #[test]
    fn irredundance_examples() {
        let g = path(3);
        // f=(1,1,0): PB_f(0) is empty
        assert!(!is_irredundant(&g, &bc(&g, &[1, 1, 0])).unwrap());
        let k5 = FamilySpec::Complete(5).generate().unwrap();
        assert!(is_irredundant(&k5, &bc(&k5, &[1, 0, 0, 0, 0])).unwrap());
        let p4 = path(4);
        assert!(is_irredundant(&p4, &bc(&p4, &[1, 0, 0, 1])).unwrap());
        // all-zero is vacuously irredundant
        assert!(is_irredundant(&g, &Broadcast::zero(&g).unwrap()).unwrap());
    }

    #[test]
    fn minimal_dominating_examples() {
        let g = path(3);
        assert!(!is_minimal_dominating(&g, &bc(&g, &[1, 1, 1])).unwrap());
        let c6 = FamilySpec::Cycle(6).generate().unwrap();
        let f = bc(&c6, &[2, 0, 0, 0, 1, 0]);
        assert!(is_minimal_dominating(&c6, &f).unwrap());
        // the shifted variant loses vertex 0's private boundary
        assert!(!is_minimal_dominating(&c6, &bc(&c6, &[2, 0, 0, 1, 0, 0])).unwrap());
    }

    #[test]
    fn dominating_examples() {
        let sp = FamilySpec::Spider(3).generate().unwrap();
        let f = bc(&sp, &[2, 0, 0, 0, 0, 0, 0]);
        assert!(is_dominating(&sp, &f).unwrap());
        let g = path(3);
        assert!(!is_dominating(&g, &bc(&g, &[1, 0, 0])).unwrap());
        assert!(!is_dominating(&g, &Broadcast::zero(&g).unwrap()).unwrap());
    }

    #[test]
    fn epb_examples() {
        let p4 = path(4);
        assert!(has_epb_everywhere(&p4, &bc(&p4, &[1, 0, 0, 1])).unwrap());
        let p2 = path(2);
        let f = bc(&p2, &[1, 1]);
        assert!(!is_irredundant(&p2, &f).unwrap());
        assert!(!has_epb_everywhere(&p2, &f).unwrap());
        let k3 = FamilySpec::Complete(3).generate().unwrap();
        assert!(has_epb_everywhere(&k3, &bc(&k3, &[1, 0, 0])).unwrap());
    }

    #[test]
    fn partition_and_formula_invariants() {
        // PB = PN on V^1 and PB = B intersect PN on V^++, per broadcast.
        let g = FamilySpec::Cycle(6).generate().unwrap();
        for pw in [[2u32, 0, 0, 1, 0, 0], [1, 0, 1, 0, 1, 0], [0, 3, 0, 0, 0, 1]] {
            let f = bc(&g, &pw);
            let a = analyze(&g, &f).unwrap();
            let mut merged = a.vone.clone();
            merged.extend(&a.vplusplus);
            merged.sort_unstable();
            assert_eq!(merged, a.vplus);
            for &v in &a.vone {
                assert_eq!(a.pbound[&v], a.pneigh[&v]);
            }
            for &v in &a.vplusplus {
                let expect: Vec<usize> = a.boundary[&v]
                    .iter()
                    .copied()
                    .filter(|u| a.pneigh[&v].contains(u))
                    .collect();
                assert_eq!(a.pbound[&v], expect);
            }
        }
    }

    #[test]
    fn invalid_broadcast_rejected_by_analyze() {
        let g = path(3);
        let g5 = path(5);
        let f = bc(&g5, &[4, 0, 0, 0, 0]);
        assert!(analyze(&g, &f).is_err());
    }
}
