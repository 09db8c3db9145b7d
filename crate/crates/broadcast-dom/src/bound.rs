//! Constructive 5/4 bound: from a maximal irredundant broadcast f, build a
//! dominating broadcast g with 4·σ(g) ≤ 5·σ(f).
//!
//! The construction works on the overlap graph H over the positive vertices
//! (adjacent iff their balls intersect): H-components are classed by their
//! total power, special component classes B/C/D are chained through
//! annihilation links, and each territory receives a single-center broadcast.
//! Every structural assumption is asserted at runtime and surfaced as a
//! diagnostic, never silently patched.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::{analyze, BroadcastAnalysis};
use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::irredundance::{is_maximal_irredundant_with_budget, DEFAULT_MAX_STATES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AClass {
    A1,
    A2,
    A3,
    A4,
}

/// One component of the overlap graph.
#[derive(Debug, Clone, Serialize)]
pub struct OverlapComponent {
    pub vertices: Vec<usize>,
    pub class: AClass,
    pub sum_f: u32,
}

/// The overlap graph H on the positive vertices: u ~ v iff
/// N_f[u] ∩ N_f[v] ≠ ∅, equivalently d(u,v) ≤ f(u)+f(v).
#[derive(Debug, Clone, Serialize)]
pub struct OverlapGraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<OverlapComponent>,
    /// positive vertex -> component index
    pub comp_of: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EClass {
    B,
    C,
    D,
}

/// A component in one of the chained classes, with the vertex roles its
/// annihilation predicate needs.
#[derive(Debug, Clone, Serialize)]
pub struct EMember {
    pub component: usize,
    pub class: EClass,
    /// the power-1 partner for class B (absent for C/D)
    pub v: Option<usize>,
    /// the annihilated/escalating vertex (power 1 or 2 for B, 2 for C,
    /// 2 or 3 for D)
    pub w: usize,
}

/// Vertex sets and metric bounds for one component's territory. `core` is
/// the union of the members' balls; `extended` adds the undominated
/// vertices assigned to this component.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentTerritory {
    pub core: Vec<usize>,
    pub extended: Vec<usize>,
    pub sum_f: u32,
    pub core_diam: u32,
    pub core_rad: u32,
    pub diam: u32,
    pub rad: u32,
}

/// Components linked by annihilation, dominated together from one center.
#[derive(Debug, Clone, Serialize)]
pub struct ChainCluster {
    /// component indices in absorption order
    pub members: Vec<usize>,
    pub territory: Vec<usize>,
    pub sum_f: u32,
    pub diam: u32,
    pub rad: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Assignment {
    pub case: &'static str,
    pub components: Vec<usize>,
    pub center: usize,
    pub power: u32,
}

/// Full record of one construction run.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructionTrace {
    pub overlap: OverlapGraph,
    pub territories: Vec<ComponentTerritory>,
    pub e_members: Vec<EMember>,
    pub clusters: Vec<ChainCluster>,
    pub a4_prime: Vec<usize>,
    pub assignments: Vec<Assignment>,
    pub result: Broadcast,
    pub sigma_f: u32,
    pub sigma_g: u32,
    /// 4·σ(g) ≤ 5·σ(f)
    pub bound_ok: bool,
}

fn overlap_inner(g: &Graph, f: &Broadcast) -> OverlapGraph {
    let pw = f.powers();
    let vertices = f.positive();
    let adjacent = |u: usize, v: usize| {
        let d = g.dist(u, v);
        d != crate::graph::INF && d <= pw[u] + pw[v]
    };
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if adjacent(u, v) {
                edges.push((u, v));
            }
        }
    }
    // components by BFS, ordered by least member
    let mut comp_of = BTreeMap::new();
    let mut components = Vec::new();
    for &s in &vertices {
        if comp_of.contains_key(&s) {
            continue;
        }
        let id = components.len();
        let mut stack = vec![s];
        let mut members = vec![s];
        comp_of.insert(s, id);
        while let Some(u) = stack.pop() {
            for &v in &vertices {
                if !comp_of.contains_key(&v) && adjacent(u, v) {
                    comp_of.insert(v, id);
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        let sum_f: u32 = members.iter().map(|&x| pw[x]).sum();
        let class = match sum_f {
            1 => AClass::A1,
            2 => AClass::A2,
            3 => AClass::A3,
            _ => AClass::A4,
        };
        components.push(OverlapComponent { vertices: members, class, sum_f });
    }
    OverlapGraph { vertices, edges, components, comp_of }
}

/// Overlap graph of a maximal irredundant broadcast. Maximality is checked.
pub fn build_overlap_graph(g: &Graph, f: &Broadcast) -> Result<OverlapGraph> {
    let ev = is_maximal_irredundant_with_budget(g, f, DEFAULT_MAX_STATES)?;
    if !ev.maximal {
        return Err(Error::NotMaximalIrredundant);
    }
    Ok(overlap_inner(g, f))
}

/// u ∈ U_f annihilates positive x: PB_f(x) ⊆ N(u).
fn annihilated_by(g: &Graph, a: &BroadcastAnalysis, u: usize, x: usize) -> bool {
    a.pbound[&x].iter().all(|&p| g.has_edge(u, p))
}

fn annihilators_of(g: &Graph, a: &BroadcastAnalysis, x: usize) -> Vec<usize> {
    a.undominated
        .iter()
        .copied()
        .filter(|&u| annihilated_by(g, a, u, x))
        .collect()
}

fn nonadjacent_to_all(g: &Graph, u: usize, set: &[usize]) -> bool {
    set.iter().all(|&b| !g.has_edge(u, b))
}

/// d(w, U_f) must be exactly f(w)+1 for the escalated-annihilation
/// predicates of classes B, C and D.
fn assert_df_one(g: &Graph, a: &BroadcastAnalysis, pw: &[u32], w: usize) -> Result<()> {
    let d = a
        .undominated
        .iter()
        .map(|&u| g.dist(w, u))
        .min()
        .ok_or_else(|| Error::Construction("class member without undominated vertices".into()))?;
    if d != pw[w] + 1 {
        return Err(Error::Construction(format!(
            "vertex {w}: distance {d} to the undominated set, expected f+1 = {}",
            pw[w] + 1
        )));
    }
    Ok(())
}

/// Class assignment for the chained components. Classes are disjoint by
/// their distance conditions; each component gets at most one membership.
pub fn classify_bcd(
    g: &Graph,
    f: &Broadcast,
    og: &OverlapGraph,
) -> Result<Vec<EMember>> {
    let a = analyze(g, f)?;
    let pw = f.powers();
    let mut members = Vec::new();
    for (idx, comp) in og.components.iter().enumerate() {
        match (comp.class, comp.vertices.as_slice()) {
            (AClass::A2 | AClass::A3, &[p, q]) => {
                // class B: f(v)=1, f(w)∈{1,2}, d(v,w)=f(w), with crossed
                // annihilators avoiding the partner's boundary
                let mut placed = false;
                for (v, w) in [(p, q), (q, p)] {
                    if pw[v] != 1 || !(1..=2).contains(&pw[w]) || g.dist(v, w) != pw[w] {
                        continue;
                    }
                    let u_v = a.undominated.iter().copied().find(|&u| {
                        annihilated_by(g, &a, u, v) && nonadjacent_to_all(g, u, &a.boundary[&w])
                    });
                    let u_w = a.undominated.iter().copied().find(|&u| {
                        annihilated_by(g, &a, u, w) && nonadjacent_to_all(g, u, &a.boundary[&v])
                    });
                    if u_v.is_some() && u_w.is_some() {
                        assert_df_one(g, &a, pw, v)?;
                        assert_df_one(g, &a, pw, w)?;
                        members.push(EMember {
                            component: idx,
                            class: EClass::B,
                            v: Some(v),
                            w,
                        });
                        placed = true;
                        break;
                    }
                }
                if placed {
                    continue;
                }
                // class C: A3 pair at distance 3, the power-2 vertex
                // annihilated, with a private vertex of the power-1 vertex
                // clear of the other boundary
                if comp.class == AClass::A3 {
                    let (v, w) = if pw[p] == 1 { (p, q) } else { (q, p) };
                    if pw[v] == 1
                        && pw[w] == 2
                        && g.dist(v, w) == 3
                        && !annihilators_of(g, &a, w).is_empty()
                        && a.pbound[&v]
                            .iter()
                            .any(|&vp| nonadjacent_to_all(g, vp, &a.boundary[&w]))
                    {
                        assert_df_one(g, &a, pw, w)?;
                        members.push(EMember { component: idx, class: EClass::C, v: Some(v), w });
                    }
                }
            }
            (AClass::A2 | AClass::A3, &[w]) => {
                // class D: annihilated singleton whose private boundary is
                // not a clique
                let pb = &a.pbound[&w];
                let has_nonadjacent_pair = pb
                    .iter()
                    .enumerate()
                    .any(|(i, &x)| pb[i + 1..].iter().any(|&y| !g.has_edge(x, y)));
                if !annihilators_of(g, &a, w).is_empty() && has_nonadjacent_pair {
                    assert_df_one(g, &a, pw, w)?;
                    members.push(EMember { component: idx, class: EClass::D, v: None, w });
                }
            }
            _ => {}
        }
    }
    Ok(members)
}

/// The member's escalated-broadcast annihilation predicate against a
/// positive vertex z.
fn member_annihilates(
    g: &Graph,
    a: &BroadcastAnalysis,
    pw: &[u32],
    m: &EMember,
    z: usize,
) -> bool {
    let pb = &a.pbound[&z];
    match m.class {
        // both members escalated by one: PB_f(z) ⊆ B_{f2}(v) ∪ B_{f2}(w)
        EClass::B => {
            let v = m.v.expect("B member has a partner");
            pb.iter()
                .all(|&p| g.dist(p, v) == 2 || g.dist(p, m.w) == pw[m.w] + 1)
        }
        // w escalated by d_f(w) = 1: PB_f(z) ⊆ N_{f(w)+1}[w]
        EClass::C | EClass::D => pb.iter().all(|&p| g.dist(p, m.w) <= pw[m.w] + 1),
    }
}

/// Least annihilation target of an E-member outside its own component,
/// with the target's component. The target component may not be in A1.
pub fn find_annihilation_target(
    g: &Graph,
    f: &Broadcast,
    og: &OverlapGraph,
    m: &EMember,
) -> Result<(usize, usize)> {
    let a = analyze(g, f)?;
    target_inner(g, &a, f.powers(), og, m)
}

fn target_inner(
    g: &Graph,
    a: &BroadcastAnalysis,
    pw: &[u32],
    og: &OverlapGraph,
    m: &EMember,
) -> Result<(usize, usize)> {
    for &z in &og.vertices {
        let cz = og.comp_of[&z];
        if cz == m.component || !member_annihilates(g, a, pw, m, z) {
            continue;
        }
        if og.components[cz].class == AClass::A1 {
            return Err(Error::Construction(format!(
                "component {} ({:?}) annihilates {z} inside a weight-1 component",
                m.component, m.class
            )));
        }
        return Ok((z, cz));
    }
    Err(Error::Construction(format!(
        "component {} ({:?}) has no annihilation target",
        m.component, m.class
    )))
}

/// Subgraph metrics of a vertex set, with a connectivity diagnostic.
fn territory_metrics(g: &Graph, set: &[usize], what: &str) -> Result<(u32, u32)> {
    let (sub, _) = g.induced_subgraph(set)?;
    if !sub.is_connected() {
        return Err(Error::Construction(format!("{what} territory is disconnected")));
    }
    Ok((sub.diameter()?, sub.radius()?))
}

/// Center of the set's induced subgraph: least-index vertex minimizing
/// subgraph eccentricity.
fn territory_center(g: &Graph, set: &[usize]) -> Result<usize> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let (sub, _) = g.induced_subgraph(&sorted)?;
    if !sub.is_connected() {
        return Err(Error::Construction("territory is disconnected".into()));
    }
    let best = (0..sub.vertex_count())
        .min_by_key(|&i| sub.ecc(i))
        .expect("territory is nonempty");
    Ok(sorted[best])
}

fn check_bound(actual: u32, bound: u32, what: &str, idx: usize) -> Result<()> {
    if actual > bound {
        return Err(Error::Construction(format!(
            "{what} of component {idx} is {actual}, exceeding the bound {bound}"
        )));
    }
    Ok(())
}

/// Core and extended territory per component, with the metric bounds
/// asserted. Each undominated vertex is assigned to the least-index
/// component holding a vertex it annihilates; maximality guarantees one.
fn build_territories(
    g: &Graph,
    a: &BroadcastAnalysis,
    pw: &[u32],
    og: &OverlapGraph,
) -> Result<Vec<ComponentTerritory>> {
    let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); og.components.len()];
    for &u in &a.undominated {
        let comp = og
            .vertices
            .iter()
            .filter(|&&x| annihilated_by(g, a, u, x))
            .map(|&x| og.comp_of[&x])
            .min()
            .ok_or_else(|| {
                Error::Construction(format!(
                    "undominated vertex {u} annihilates no positive vertex"
                ))
            })?;
        assigned[comp].push(u);
    }
    og.components
        .iter()
        .enumerate()
        .map(|(idx, comp)| {
            let mut core: Vec<usize> = (0..g.vertex_count())
                .filter(|&y| comp.vertices.iter().any(|&x| g.dist(x, y) <= pw[x]))
                .collect();
            let mut extended = core.clone();
            extended.extend(&assigned[idx]);
            extended.sort_unstable();
            core.sort_unstable();
            let (core_diam, core_rad) = territory_metrics(g, &core, "core")?;
            let (diam, rad) = territory_metrics(g, &extended, "extended")?;
            check_bound(core_diam, 2 * comp.sum_f, "core diameter", idx)?;
            check_bound(core_rad, comp.sum_f, "core radius", idx)?;
            check_bound(diam, 2 * comp.sum_f + 2, "diameter", idx)?;
            check_bound(rad, comp.sum_f + 1, "radius", idx)?;
            Ok(ComponentTerritory {
                core,
                extended,
                sum_f: comp.sum_f,
                core_diam,
                core_rad,
                diam,
                rad,
            })
        })
        .collect()
}

/// Greedy chain construction: seed with the least unplaced member, pull in
/// its annihilation target, then absorb any unplaced member annihilating
/// into the cluster until a fixpoint. Returns the clusters and the
/// heavyweight components left outside them.
pub fn build_chains(
    g: &Graph,
    f: &Broadcast,
    og: &OverlapGraph,
    members: &[EMember],
) -> Result<(Vec<ChainCluster>, Vec<usize>)> {
    let a = analyze(g, f)?;
    let territories = build_territories(g, &a, f.powers(), og)?;
    chains_inner(g, &a, f.powers(), og, members, &territories)
}

fn chains_inner(
    g: &Graph,
    a: &BroadcastAnalysis,
    pw: &[u32],
    og: &OverlapGraph,
    members: &[EMember],
    territories: &[ComponentTerritory],
) -> Result<(Vec<ChainCluster>, Vec<usize>)> {
    let mut placed = vec![false; og.components.len()];
    let mut clusters = Vec::new();
    for seed in members {
        if placed[seed.component] {
            continue;
        }
        let (_, target_comp) = target_inner(g, a, pw, og, seed)?;
        if placed[target_comp] {
            // a member annihilating into a closed cluster would have been
            // absorbed at that cluster's fixpoint
            return Err(Error::Construction(format!(
                "seed component {} targets already-placed component {target_comp}",
                seed.component
            )));
        }
        let mut cluster = vec![seed.component, target_comp];
        placed[seed.component] = true;
        placed[target_comp] = true;
        loop {
            let absorbed = members.iter().find(|m| {
                !placed[m.component]
                    && cluster.iter().any(|&c| {
                        og.components[c]
                            .vertices
                            .iter()
                            .any(|&z| member_annihilates(g, a, pw, m, z))
                    })
            });
            match absorbed {
                Some(m) => {
                    placed[m.component] = true;
                    cluster.push(m.component);
                }
                None => break,
            }
        }
        let mut territory: Vec<usize> = cluster
            .iter()
            .flat_map(|&c| territories[c].extended.iter().copied())
            .collect();
        territory.sort_unstable();
        territory.dedup();
        let sum_f: u32 = cluster.iter().map(|&c| og.components[c].sum_f).sum();
        let (diam, rad) = territory_metrics(g, &territory, "cluster")?;
        check_bound(diam, 2 * sum_f + 2, "cluster diameter", cluster[0])?;
        check_bound(rad, sum_f + 1, "cluster radius", cluster[0])?;
        clusters.push(ChainCluster { members: cluster, territory, sum_f, diam, rad });
    }
    if let Some(m) = members.iter().find(|m| !placed[m.component]) {
        return Err(Error::Construction(format!(
            "chained component {} left unplaced",
            m.component
        )));
    }
    let a4_prime = og
        .components
        .iter()
        .enumerate()
        .filter(|(i, c)| c.class == AClass::A4 && !placed[*i])
        .map(|(i, _)| i)
        .collect();
    Ok((clusters, a4_prime))
}

pub fn construct_dominating(g: &Graph, f: &Broadcast) -> Result<ConstructionTrace> {
    construct_dominating_with_budget(g, f, DEFAULT_MAX_STATES)
}

pub fn construct_dominating_with_budget(
    g: &Graph,
    f: &Broadcast,
    max_states: u64,
) -> Result<ConstructionTrace> {
    let ev = is_maximal_irredundant_with_budget(g, f, max_states)?;
    if !ev.maximal {
        return Err(Error::NotMaximalIrredundant);
    }
    let a = analyze(g, f)?;
    let pw = f.powers();
    let og = overlap_inner(g, f);
    let territories = build_territories(g, &a, pw, &og)?;
    let e_members = classify_bcd(g, f, &og)?;
    let (clusters, a4_prime) =
        chains_inner(g, &a, pw, &og, &e_members, &territories)?;
    let in_cluster = {
        let mut v = vec![false; og.components.len()];
        for cl in &clusters {
            for &c in &cl.members {
                v[c] = true;
            }
        }
        v
    };
    let e_component: Vec<bool> = {
        let mut v = vec![false; og.components.len()];
        for m in &e_members {
            v[m.component] = true;
        }
        v
    };

    let mut gpw = vec![0u32; g.vertex_count()];
    let mut assignments = Vec::new();
    let mut assign = |gpw: &mut Vec<u32>,
                      case: &'static str,
                      comps: Vec<usize>,
                      center: usize,
                      power: u32,
                      territory: &[usize]|
     -> Result<()> {
        if gpw[center] != 0 {
            return Err(Error::Construction(format!(
                "case {case}: center {center} already carries a broadcast"
            )));
        }
        // clamping to the eccentricity keeps the broadcast valid; a ball of
        // radius ecc covers the vertex's whole graph component
        let p = power.min(g.ecc(center));
        if p < power {
            debug_assert!(territory
                .iter()
                .all(|&t| g.dist(center, t) != crate::graph::INF));
        }
        if let Some(&t) = territory.iter().find(|&&t| g.dist(center, t) > p) {
            return Err(Error::Construction(format!(
                "case {case}: vertex {t} is out of reach of center {center} (power {p})"
            )));
        }
        gpw[center] = p;
        assignments.push(Assignment { case, components: comps, center, power: p });
        Ok(())
    };

    // (1) heavyweight components outside the chains
    for &idx in &a4_prime {
        let t = &territories[idx];
        let c = territory_center(g, &t.extended)?;
        assign(&mut gpw, "A4'", vec![idx], c, 1 + t.sum_f, &t.extended)?;
    }
    // (3) chain clusters
    for cl in &clusters {
        let c = territory_center(g, &cl.territory)?;
        assign(&mut gpw, "cluster", cl.members.clone(), c, 1 + cl.sum_f, &cl.territory)?;
    }
    // (4) the remaining light components
    for (idx, comp) in og.components.iter().enumerate() {
        if comp.class == AClass::A4 || in_cluster[idx] || e_component[idx] {
            continue;
        }
        let t = &territories[idx];
        match (comp.class, comp.vertices.as_slice()) {
            (AClass::A1, &[x]) => {
                assign(&mut gpw, "4a", vec![idx], x, 1, &t.extended)?;
            }
            (AClass::A2 | AClass::A3, &[x]) => {
                let annis = annihilators_of(g, &a, x);
                match annis.first() {
                    Some(&u) => {
                        // least neighbor of x on an x-u geodesic
                        let c = g
                            .neighbors(x)
                            .iter()
                            .copied()
                            .find(|&c| g.dist(c, u) + 1 == g.dist(x, u))
                            .ok_or_else(|| {
                                Error::Construction(format!(
                                    "case 4b: no geodesic neighbor of {x} toward {u}"
                                ))
                            })?;
                        assign(&mut gpw, "4b", vec![idx], c, pw[x], &t.extended)?;
                    }
                    None => assign(&mut gpw, "4b", vec![idx], x, pw[x], &t.extended)?,
                }
            }
            (AClass::A2, &[_, _]) => {
                let c = territory_center(g, &t.extended)?;
                assign(&mut gpw, "4c", vec![idx], c, comp.sum_f, &t.extended)?;
            }
            (AClass::A3, &[p, q]) => {
                let (x, y) = if pw[p] == 1 { (p, q) } else { (q, p) };
                let annihilated = !annihilators_of(g, &a, y).is_empty();
                if g.dist(x, y) == 3 && annihilated {
                    // 4d: a private vertex of y adjacent to the boundary
                    // of x reaches both sides with power 3
                    let yp = a.pbound[&y]
                        .iter()
                        .copied()
                        .find(|&yp| a.boundary[&x].iter().any(|&xp| g.has_edge(yp, xp)))
                        .ok_or_else(|| {
                            Error::Construction(format!(
                                "case 4d: component {idx}: no vertex of PB_f({y}) \
                                 adjacent to B_f({x})"
                            ))
                        })?;
                    assign(&mut gpw, "4d", vec![idx], yp, 3, &t.extended)?;
                } else {
                    let c = territory_center(g, &t.extended)?;
                    assign(&mut gpw, "4c", vec![idx], c, comp.sum_f, &t.extended)?;
                }
            }
            (AClass::A3, &[_, _, _]) => {
                // middle vertex of the H-path (H-degree 2), least index
                let deg = |x: usize| {
                    comp.vertices
                        .iter()
                        .filter(|&&y| {
                            y != x && g.dist(x, y) <= pw[x] + pw[y]
                        })
                        .count()
                };
                let y = comp
                    .vertices
                    .iter()
                    .copied()
                    .find(|&x| deg(x) == 2)
                    .unwrap_or(comp.vertices[0]);
                assign(&mut gpw, "4e", vec![idx], y, 3, &t.extended)?;
            }
            _ => {
                return Err(Error::Construction(format!(
                    "component {idx}: unexpected shape {:?} with weight {}",
                    comp.vertices, comp.sum_f
                )))
            }
        }
    }

    let result = Broadcast::new(g, gpw)?;
    if !crate::analysis::is_dominating(g, &result)? {
        return Err(Error::Construction("constructed broadcast does not dominate".into()));
    }
    let sigma_f = f.cost();
    let sigma_g = result.cost();
    let bound_ok = 4 * sigma_g <= 5 * sigma_f;
    if !bound_ok {
        return Err(Error::Construction(format!(
            "cost bound violated: 4*{sigma_g} > 5*{sigma_f}"
        )));
    }
    Ok(ConstructionTrace {
        overlap: og,
        territories,
        e_members,
        clusters,
        a4_prime,
        assignments,
        result,
        sigma_f,
        sigma_g,
        bound_ok,
    })
}
