//! Blocked vertices, annihilation, escalation sequences and the maximality
//! decision procedure for irredundant broadcasts, plus a brute-force
//! maximality oracle for ground truth on small instances.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::analysis::{irredundant_raw, private_boundary_raw, undominated_raw};
use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on visited states in the condition-(ii) search.
pub const DEFAULT_MAX_STATES: u64 = 5_000_000;

/// Default cap on the number of extensions the oracle will enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 50_000_000;

/// Per-broadcast data for the maximality conditions: the blocked set, the
/// unblocked positive vertices, and for each dominated vertex the distance
/// d_f(v) from its boundary to the nearest undominated vertex together with
/// the set U_f(v) of nearest undominated vertices.
#[derive(Debug, Clone)]
pub struct MaximalityContext {
    pub blocked: Vec<usize>,
    pub vstar: Vec<usize>,
    /// d_f(v) for dominated v; None on U_f members.
    pub dfv: Vec<Option<u32>>,
    /// U_f(v) = undominated vertices at distance exactly f(v)+d_f(v).
    pub ufv: Vec<Vec<usize>>,
}

fn require_connected(g: &Graph) -> Result<()> {
    if let Some(v) = g.trivial_component() {
        return Err(Error::TrivialComponent(v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn check_broadcast(g: &Graph, f: &Broadcast) -> Result<()> {
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

/// First positive vertex with empty private boundary, if any.
fn first_redundant(g: &Graph, pw: &[u32]) -> Option<usize> {
    (0..g.vertex_count())
        .filter(|&v| pw[v] > 0)
        .find(|&v| private_boundary_raw(g, pw, v).is_empty())
}

/// v is blocked iff some shortest path from v to U_f contains a vertex of
/// V_f^+ - {v}; decided via the distance identity
/// d(v,w) + d(w,u) = d(v,u) = d(v, U_f).
fn blocked_raw(g: &Graph, pw: &[u32], undominated: &[usize], v: usize) -> bool {
    let d_to_u = undominated.iter().map(|&u| g.dist(v, u)).min().unwrap();
    undominated.iter().any(|&u| {
        g.dist(v, u) == d_to_u
            && (0..g.vertex_count()).any(|w| {
                w != v && pw[w] > 0 && g.dist(v, w) + g.dist(w, u) == d_to_u
            })
    })
}

fn blocked_set_raw(g: &Graph, pw: &[u32], undominated: &[usize]) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| blocked_raw(g, pw, undominated, v))
        .collect()
}

/// d_f(v) = d(v, U_f) - f(v), the smallest k with U_f meeting N_{f(v)+k}[v].
fn dfv_raw(g: &Graph, pw: &[u32], undominated: &[usize], v: usize) -> u32 {
    let d = undominated.iter().map(|&u| g.dist(v, u)).min().unwrap();
    debug_assert!(d > pw[v]);
    d - pw[v]
}

impl MaximalityContext {
    pub fn new(g: &Graph, f: &Broadcast) -> Result<MaximalityContext> {
        require_connected(g)?;
        check_broadcast(g, f)?;
        let pw = f.powers();
        let undominated = undominated_raw(g, pw);
        if undominated.is_empty() {
            return Err(Error::NoUndominatedVertex("the maximality context"));
        }
        let blocked = blocked_set_raw(g, pw, &undominated);
        let vstar = f
            .positive()
            .into_iter()
            .filter(|v| !blocked.contains(v))
            .collect();
        let mut dfv = vec![None; g.vertex_count()];
        let mut ufv = vec![Vec::new(); g.vertex_count()];
        for v in 0..g.vertex_count() {
            if undominated.contains(&v) {
                continue;
            }
            let d = dfv_raw(g, pw, &undominated, v);
            dfv[v] = Some(d);
            ufv[v] = undominated
                .iter()
                .copied()
                .filter(|&u| g.dist(u, v) == pw[v] + d)
                .collect();
        }
        Ok(MaximalityContext { blocked, vstar, dfv, ufv })
    }
}

/// The blocked set beta_f. Undefined (an error) when f is dominating.
pub fn blocked_set(g: &Graph, f: &Broadcast) -> Result<Vec<usize>> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let undominated = undominated_raw(g, f.powers());
    if undominated.is_empty() {
        return Err(Error::NoUndominatedVertex("blockedness"));
    }
    Ok(blocked_set_raw(g, f.powers(), &undominated))
}

/// Raise v's power by d_f(v), reaching the nearest undominated vertex.
pub fn escalate(g: &Graph, f: &Broadcast, v: usize) -> Result<Broadcast> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let undominated = undominated_raw(g, f.powers());
    if undominated.is_empty() {
        return Err(Error::NoUndominatedVertex("escalation"));
    }
    if undominated.contains(&v) {
        return Err(Error::UndominatedVertex(v));
    }
    let d = dfv_raw(g, f.powers(), &undominated, v);
    // f(v)+d_f(v) is the distance to a real vertex, so <= ecc(v)
    f.with_power(g, v, f.power(v) + d)
}

/// u in U_f annihilates w in V_f^+ when PB_f(w) lies inside u's open
/// neighborhood.
pub fn annihilates_from_undominated(
    g: &Graph,
    f: &Broadcast,
    u: usize,
    w: usize,
) -> Result<bool> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let pw = f.powers();
    if pw[w] == 0 {
        return Err(Error::NotPositive(w));
    }
    let undominated = undominated_raw(g, pw);
    if !undominated.contains(&u) {
        return Err(Error::DominatedVertex(u));
    }
    Ok(private_boundary_raw(g, pw, w)
        .iter()
        .all(|&b| g.dist(u, b) == 1))
}

/// Dominated v annihilates w in V_f^+ when PB_f(w) lies inside the ball of
/// radius f(v)+d_f(v) around v.
pub fn annihilates_from_dominated(
    g: &Graph,
    f: &Broadcast,
    v: usize,
    w: usize,
) -> Result<bool> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let pw = f.powers();
    if pw[w] == 0 {
        return Err(Error::NotPositive(w));
    }
    let undominated = undominated_raw(g, pw);
    if undominated.is_empty() {
        return Err(Error::NoUndominatedVertex("annihilation from a dominated vertex"));
    }
    if undominated.contains(&v) {
        return Err(Error::UndominatedVertex(v));
    }
    let radius = pw[v] + dfv_raw(g, pw, &undominated, v);
    Ok(private_boundary_raw(g, pw, w)
        .iter()
        .all(|&b| g.dist(v, b) <= radius))
}

/// Outcome of condition (i): a witness map w -> annihilated positive vertex,
/// or the first w without one.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionIReport {
    pub holds: bool,
    pub witnesses: BTreeMap<usize, usize>,
    pub failed_at: Option<usize>,
}

/// Condition (i) of the maximality theorem: each w outside beta_f and
/// V_f^+ annihilates some positive vertex. Vacuously true when f dominates.
pub fn check_condition_i(g: &Graph, f: &Broadcast) -> Result<ConditionIReport> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let pw = f.powers();
    if let Some(v) = first_redundant(g, pw) {
        return Err(Error::NotIrredundant(v));
    }
    let undominated = undominated_raw(g, pw);
    if undominated.is_empty() {
        return Ok(ConditionIReport { holds: true, witnesses: BTreeMap::new(), failed_at: None });
    }
    condition_i_inner(g, pw, &undominated)
}

fn condition_i_inner(
    g: &Graph,
    pw: &[u32],
    undominated: &[usize],
) -> Result<ConditionIReport> {
    let blocked = blocked_set_raw(g, pw, undominated);
    let vplus: Vec<usize> = (0..g.vertex_count()).filter(|&v| pw[v] > 0).collect();
    let pbs: BTreeMap<usize, Vec<usize>> = vplus
        .iter()
        .map(|&v| (v, private_boundary_raw(g, pw, v)))
        .collect();
    let mut witnesses = BTreeMap::new();
    for w in 0..g.vertex_count() {
        if pw[w] > 0 || blocked.contains(&w) {
            continue;
        }
        let annihilated = if undominated.contains(&w) {
            vplus
                .iter()
                .copied()
                .find(|v| pbs[v].iter().all(|&b| g.dist(w, b) == 1))
        } else {
            let radius = pw[w] + dfv_raw(g, pw, undominated, w);
            vplus
                .iter()
                .copied()
                .find(|v| pbs[v].iter().all(|&b| g.dist(w, b) <= radius))
        };
        match annihilated {
            Some(v) => {
                witnesses.insert(w, v);
            }
            None => {
                return Ok(ConditionIReport { holds: false, witnesses, failed_at: Some(w) })
            }
        }
    }
    Ok(ConditionIReport { holds: true, witnesses, failed_at: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Terminal {
    BlockedTerminal,
    DominatedTerminal,
}

/// A successful condition-(ii) escalation sequence: vertices v_0..v_t and
/// the broadcasts f_0..f_t, where f_{i+1} raises v_i by d_{f_i}(v_i).
#[derive(Debug, Clone, Serialize)]
pub struct EscalationSequence {
    pub vertices: Vec<usize>,
    pub broadcasts: Vec<Broadcast>,
    pub terminal: Terminal,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceOutcome {
    pub start: usize,
    pub found: bool,
    pub sequence: Option<EscalationSequence>,
}

struct SequenceSearch<'a> {
    g: &'a Graph,
    orig_vplus: Vec<usize>,
    visited: HashSet<(Vec<u32>, usize)>,
    states: u64,
    max_states: u64,
}

impl SequenceSearch<'_> {
    /// Depth-first search over (broadcast, current vertex) states. Terminal
    /// success: no undominated vertex remains, or the current vertex is
    /// blocked. Otherwise escalate the current vertex and branch on every
    /// original positive vertex whose private boundary the escalation
    /// annihilates.
    fn dfs(
        &mut self,
        pw: &[u32],
        v: usize,
        vertices: &mut Vec<usize>,
        broadcasts: &mut Vec<Vec<u32>>,
    ) -> Result<Option<Terminal>> {
        self.states += 1;
        if self.states > self.max_states {
            return Err(Error::Budget(format!(
                "condition-(ii) search exceeded {} states",
                self.max_states
            )));
        }
        let undominated = undominated_raw(self.g, pw);
        if undominated.is_empty() {
            return Ok(Some(Terminal::DominatedTerminal));
        }
        if blocked_raw(self.g, pw, &undominated, v) {
            return Ok(Some(Terminal::BlockedTerminal));
        }
        let d = dfv_raw(self.g, pw, &undominated, v);
        let mut next = pw.to_vec();
        next[v] += d;
        let candidates = self.orig_vplus.clone();
        for w in candidates {
            if w == v || !private_boundary_raw(self.g, &next, w).is_empty() {
                continue;
            }
            if !self.visited.insert((next.clone(), w)) {
                continue;
            }
            vertices.push(w);
            broadcasts.push(next.clone());
            if let Some(t) = self.dfs(&next, w, vertices, broadcasts)? {
                return Ok(Some(t));
            }
            vertices.pop();
            broadcasts.pop();
        }
        Ok(None)
    }
}

/// Condition (ii) of the maximality theorem for one start vertex
/// v0 in V_f^*.
pub fn check_condition_ii(g: &Graph, f: &Broadcast, v0: usize) -> Result<SequenceOutcome> {
    check_condition_ii_with_budget(g, f, v0, DEFAULT_MAX_STATES)
}

pub fn check_condition_ii_with_budget(
    g: &Graph,
    f: &Broadcast,
    v0: usize,
    max_states: u64,
) -> Result<SequenceOutcome> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let pw = f.powers();
    if let Some(v) = first_redundant(g, pw) {
        return Err(Error::NotIrredundant(v));
    }
    let undominated = undominated_raw(g, pw);
    if undominated.is_empty() {
        return Err(Error::NoUndominatedVertex("condition (ii)"));
    }
    if pw[v0] == 0 || blocked_raw(g, pw, &undominated, v0) {
        return Err(Error::NotUnblockedPositive(v0));
    }
    condition_ii_inner(g, pw, v0, max_states)
}

fn condition_ii_inner(
    g: &Graph,
    pw: &[u32],
    v0: usize,
    max_states: u64,
) -> Result<SequenceOutcome> {
    let mut search = SequenceSearch {
        g,
        orig_vplus: (0..g.vertex_count()).filter(|&v| pw[v] > 0).collect(),
        visited: HashSet::new(),
        states: 0,
        max_states,
    };
    let mut vertices = vec![v0];
    let mut broadcasts = vec![pw.to_vec()];
    search.visited.insert((pw.to_vec(), v0));
    match search.dfs(pw, v0, &mut vertices, &mut broadcasts)? {
        Some(terminal) => {
            let broadcasts = broadcasts
                .into_iter()
                .map(|p| Broadcast::new(g, p))
                .collect::<Result<_>>()?;
            Ok(SequenceOutcome {
                start: v0,
                found: true,
                sequence: Some(EscalationSequence { vertices, broadcasts, terminal }),
            })
        }
        None => Ok(SequenceOutcome { start: v0, found: false, sequence: None }),
    }
}

/// Full evidence for the maximality decision: the dominating fast path, the
/// condition-(i) witnesses and one escalation-sequence outcome per
/// unblocked positive start vertex.
#[derive(Debug, Clone, Serialize)]
pub struct MaximalityEvidence {
    pub maximal: bool,
    pub dominating: bool,
    pub condition_i: Option<ConditionIReport>,
    pub sequences: Vec<SequenceOutcome>,
}

/// Decide maximal irredundance via the characterization theorem. The input
/// must be irredundant. On disconnected graphs the decision is made per
/// component and the evidence is remapped to global vertex indices.
pub fn is_maximal_irredundant(g: &Graph, f: &Broadcast) -> Result<MaximalityEvidence> {
    is_maximal_irredundant_with_budget(g, f, DEFAULT_MAX_STATES)
}

pub fn is_maximal_irredundant_with_budget(
    g: &Graph,
    f: &Broadcast,
    max_states: u64,
) -> Result<MaximalityEvidence> {
    if let Some(v) = g.trivial_component() {
        return Err(Error::TrivialComponent(v));
    }
    check_broadcast(g, f)?;
    if g.is_connected() {
        return maximal_connected(g, f.powers(), max_states);
    }
    // Decompose: a broadcast on a disconnected graph is the union of
    // broadcasts on its components and maximality holds componentwise.
    let mut merged = MaximalityEvidence {
        maximal: true,
        dominating: true,
        condition_i: None,
        sequences: Vec::new(),
    };
    let mut all_witnesses = BTreeMap::new();
    let mut failed_at = None;
    let mut cond_i_holds = true;
    let mut any_undominated = false;
    for comp in g.components() {
        let (sub, old_to_new) = g.induced_subgraph(comp)?;
        let new_to_old: Vec<usize> = comp.clone();
        let sub_pw: Vec<u32> = comp.iter().map(|&v| f.power(v)).collect();
        let sub_f = Broadcast::new(&sub, sub_pw)?;
        let _ = old_to_new;
        let ev = maximal_connected(&sub, sub_f.powers(), max_states)?;
        merged.maximal &= ev.maximal;
        merged.dominating &= ev.dominating;
        if let Some(ci) = ev.condition_i {
            any_undominated = true;
            cond_i_holds &= ci.holds;
            for (w, v) in ci.witnesses {
                all_witnesses.insert(new_to_old[w], new_to_old[v]);
            }
            if failed_at.is_none() {
                failed_at = ci.failed_at.map(|w| new_to_old[w]);
            }
        }
        for so in ev.sequences {
            merged.sequences.push(SequenceOutcome {
                start: new_to_old[so.start],
                found: so.found,
                sequence: so.sequence.map(|seq| EscalationSequence {
                    vertices: seq.vertices.iter().map(|&v| new_to_old[v]).collect(),
                    broadcasts: seq
                        .broadcasts
                        .iter()
                        .map(|b| {
                            let mut pw = f.powers().to_vec();
                            for (i, &old) in new_to_old.iter().enumerate() {
                                pw[old] = b.power(i);
                            }
                            Broadcast::new(g, pw).expect("embedded broadcast is valid")
                        })
                        .collect(),
                    terminal: seq.terminal,
                }),
            });
        }
    }
    if any_undominated {
        merged.condition_i = Some(ConditionIReport {
            holds: cond_i_holds,
            witnesses: all_witnesses,
            failed_at,
        });
    }
    Ok(merged)
}

pub(crate) fn maximal_connected(
    g: &Graph,
    pw: &[u32],
    max_states: u64,
) -> Result<MaximalityEvidence> {
    if let Some(v) = first_redundant(g, pw) {
        return Err(Error::NotIrredundant(v));
    }
    let undominated = undominated_raw(g, pw);
    if undominated.is_empty() {
        // dominating irredundant broadcasts are maximal, nothing to prove
        return Ok(MaximalityEvidence {
            maximal: true,
            dominating: true,
            condition_i: None,
            sequences: Vec::new(),
        });
    }
    let cond_i = condition_i_inner(g, pw, &undominated)?;
    if !cond_i.holds {
        return Ok(MaximalityEvidence {
            maximal: false,
            dominating: false,
            condition_i: Some(cond_i),
            sequences: Vec::new(),
        });
    }
    let blocked = blocked_set_raw(g, pw, &undominated);
    let mut sequences = Vec::new();
    let mut maximal = true;
    for v0 in 0..g.vertex_count() {
        if pw[v0] == 0 || blocked.contains(&v0) {
            continue;
        }
        let outcome = condition_ii_inner(g, pw, v0, max_states)?;
        maximal &= outcome.found;
        sequences.push(outcome);
    }
    Ok(MaximalityEvidence {
        maximal,
        dominating: false,
        condition_i: Some(cond_i),
        sequences,
    })
}

/// Exhaustive ground truth: f is maximal irredundant iff no valid g > f is
/// irredundant. Exponential; refuses (with a budget error, never a wrong
/// answer) when the extension space exceeds the budget.
pub fn is_maximal_irredundant_oracle(g: &Graph, f: &Broadcast) -> Result<bool> {
    is_maximal_irredundant_oracle_with_budget(g, f, DEFAULT_ORACLE_BUDGET)
}

pub fn is_maximal_irredundant_oracle_with_budget(
    g: &Graph,
    f: &Broadcast,
    budget: u64,
) -> Result<bool> {
    if let Some(v) = g.trivial_component() {
        return Err(Error::TrivialComponent(v));
    }
    check_broadcast(g, f)?;
    let pw = f.powers();
    if let Some(v) = first_redundant(g, pw) {
        return Err(Error::NotIrredundant(v));
    }
    let n = g.vertex_count();
    let mut space: u64 = 1;
    for v in 0..n {
        let choices = (g.ecc(v) - pw[v] + 1) as u64;
        space = space.saturating_mul(choices);
        if space > budget {
            return Err(Error::Budget(format!(
                "oracle extension space exceeds {budget}"
            )));
        }
    }
    // odometer over all h >= f
    let mut h = pw.to_vec();
    loop {
        // advance to the next extension
        let mut v = 0;
        loop {
            if v == n {
                return Ok(true);
            }
            if h[v] < g.ecc(v) {
                h[v] += 1;
                break;
            }
            h[v] = pw[v];
            v += 1;
        }
        if irredundant_raw(g, &h) {
            return Ok(false);
        }
    }
}

/// Necessary condition on maximal irredundant broadcasts: every undominated
/// vertex is at distance exactly f(v)+1 from some positive vertex v.
/// The caller guarantees maximality; the check itself is literal.
pub fn check_ufdist_corollary(g: &Graph, f: &Broadcast) -> Result<bool> {
    if let Some(v) = g.trivial_component() {
        return Err(Error::TrivialComponent(v));
    }
    check_broadcast(g, f)?;
    let pw = f.powers();
    let vplus = f.positive();
    Ok(undominated_raw(g, pw)
        .iter()
        .all(|&u| vplus.iter().any(|&v| g.dist(u, v) == pw[v] + 1)))
}

/// Convenience: escalation and sequence machinery often needs d_f(v).
pub fn df(g: &Graph, f: &Broadcast, v: usize) -> Result<u32> {
    require_connected(g)?;
    check_broadcast(g, f)?;
    let undominated = undominated_raw(g, f.powers());
    if undominated.is_empty() {
        return Err(Error::NoUndominatedVertex("d_f"));
    }
    if undominated.contains(&v) {
        return Err(Error::UndominatedVertex(v));
    }
    Ok(dfv_raw(g, f.powers(), &undominated, v))
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

    /// Path-enumeration oracle for blockedness: enumerate every shortest
    /// path from v to a nearest undominated vertex and look for another
    /// positive vertex on it.
    fn blocked_oracle(g: &Graph, f: &Broadcast, v: usize) -> bool {
        let undominated = undominated_raw(g, f.powers());
        let d_min = undominated.iter().map(|&u| g.dist(v, u)).min().unwrap();
        let mut stack = vec![vec![v]];
        while let Some(p) = stack.pop() {
            let last = *p.last().unwrap();
            let len = (p.len() - 1) as u32;
            if len == d_min {
                if undominated.contains(&last)
                    && p.iter().any(|&w| w != v && f.power(w) > 0)
                {
                    return true;
                }
                continue;
            }
            for &w in g.neighbors(last) {
                // stay on a shortest path towards some nearest undominated vertex
                if undominated
                    .iter()
                    .any(|&u| g.dist(v, u) == d_min && g.dist(v, w) == len + 1 && g.dist(w, u) == d_min - len - 1)
                {
                    let mut q = p.clone();
                    q.push(w);
                    stack.push(q);
                }
            }
        }
        false
    }

    #[test]
    fn blocked_set_examples() {
        let p5 = path(5);
        assert!(matches!(
            blocked_set(&p5, &bc(&p5, &[0, 1, 0, 1, 0])),
            Err(Error::NoUndominatedVertex(_))
        ));
        assert!(matches!(
            blocked_set(&p5, &bc(&p5, &[1, 0, 0, 1, 0])),
            Err(Error::NoUndominatedVertex(_))
        ));
        let p6 = path(6);
        let f = bc(&p6, &[1, 0, 0, 1, 0, 0]);
        let blocked = blocked_set(&p6, &f).unwrap();
        assert!(blocked.contains(&0));
        assert!(!blocked.contains(&3));
        // cross-check every vertex against the path-enumeration oracle
        for v in 0..6 {
            assert_eq!(blocked.contains(&v), blocked_oracle(&p6, &f, v), "vertex {v}");
        }
    }

    #[test]
    fn escalate_examples() {
        let p6 = path(6);
        let f = bc(&p6, &[1, 0, 0, 1, 0, 0]);
        let f2 = escalate(&p6, &f, 3).unwrap();
        assert_eq!(f2.powers(), &[1, 0, 0, 2, 0, 0]);
        assert!(undominated_raw(&p6, f2.powers()).is_empty());

        let f0 = escalate(&p6, &f, 0).unwrap();
        assert_eq!(f0.powers(), &[5, 0, 0, 1, 0, 0]);

        let p3 = path(3);
        let f3 = escalate(&p3, &bc(&p3, &[1, 0, 0]), 0).unwrap();
        assert_eq!(f3.powers(), &[2, 0, 0]);

        assert!(matches!(
            escalate(&p6, &f, 5),
            Err(Error::UndominatedVertex(5))
        ));
        let dom = bc(&p6, &[1, 0, 0, 2, 0, 0]);
        assert!(matches!(
            escalate(&p6, &dom, 3),
            Err(Error::NoUndominatedVertex(_))
        ));
    }

    #[test]
    fn annihilation_from_undominated() {
        let p3 = path(3);
        let f = bc(&p3, &[1, 0, 0]);
        assert!(!annihilates_from_undominated(&p3, &f, 2, 0).unwrap());

        // star K_{1,3}: center 0, leaves 1..=3
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let f = bc(&star, &[0, 1, 0, 0]);
        let und = undominated_raw(&star, f.powers());
        assert_eq!(und, vec![2, 3]);
        assert_eq!(private_boundary_raw(&star, f.powers(), 1), vec![0, 1]);
        assert!(!annihilates_from_undominated(&star, &f, 2, 1).unwrap());

        let p4 = path(4);
        let f = bc(&p4, &[0, 1, 0, 0]);
        assert!(!annihilates_from_undominated(&p4, &f, 3, 1).unwrap());
        // precondition: u must be undominated
        let f2 = bc(&p4, &[0, 0, 1, 0]);
        assert!(matches!(
            annihilates_from_undominated(&p4, &f2, 1, 2),
            Err(Error::DominatedVertex(1))
        ));
    }

    #[test]
    fn annihilation_from_dominated() {
        let p6 = path(6);
        let f = bc(&p6, &[1, 0, 0, 1, 0, 0]);
        // self case is vacuous under ball containment
        assert!(annihilates_from_dominated(&p6, &f, 3, 3).unwrap());
        assert!(annihilates_from_dominated(&p6, &f, 0, 3).unwrap());
        assert!(annihilates_from_dominated(&p6, &f, 2, 0).unwrap());
    }

    #[test]
    fn condition_i_examples() {
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        let rep = check_condition_i(&k4, &bc(&k4, &[1, 0, 0, 0])).unwrap();
        assert!(rep.holds);
        assert!(rep.witnesses.is_empty());

        let p3 = path(3);
        let rep = check_condition_i(&p3, &bc(&p3, &[1, 0, 0])).unwrap();
        assert!(!rep.holds);

        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        let rep = check_condition_i(&c4, &bc(&c4, &[1, 0, 0, 0])).unwrap();
        assert!(!rep.holds);

        assert!(matches!(
            check_condition_i(&p3, &bc(&p3, &[1, 1, 0])),
            Err(Error::NotIrredundant(0))
        ));
    }

    #[test]
    fn condition_ii_examples() {
        let p3 = path(3);
        let out = check_condition_ii(&p3, &bc(&p3, &[1, 0, 0]), 0).unwrap();
        assert!(!out.found);

        let p6 = path(6);
        let out = check_condition_ii(&p6, &bc(&p6, &[1, 0, 0, 1, 0, 0]), 3).unwrap();
        assert!(!out.found);

        let dom = bc(&p6, &[1, 0, 0, 2, 0, 0]);
        assert!(matches!(
            check_condition_ii(&p6, &dom, 3),
            Err(Error::NoUndominatedVertex(_))
        ));
    }

    #[test]
    fn maximality_examples() {
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        let ev = is_maximal_irredundant(&k4, &bc(&k4, &[1, 0, 0, 0])).unwrap();
        assert!(ev.maximal && ev.dominating);

        let p3 = path(3);
        let ev = is_maximal_irredundant(&p3, &bc(&p3, &[1, 0, 0])).unwrap();
        assert!(!ev.maximal);
        assert!(!is_maximal_irredundant_oracle(&p3, &bc(&p3, &[1, 0, 0])).unwrap());

        let sp = FamilySpec::Spider(3).generate().unwrap();
        let f = bc(&sp, &[2, 0, 0, 0, 0, 0, 0]);
        assert!(is_maximal_irredundant(&sp, &f).unwrap().maximal);
    }

    #[test]
    fn oracle_examples() {
        let p2 = path(2);
        assert!(is_maximal_irredundant_oracle(&p2, &bc(&p2, &[1, 0])).unwrap());
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        assert!(is_maximal_irredundant_oracle(&k4, &bc(&k4, &[1, 0, 0, 0])).unwrap());
        // resource guard
        let p6 = path(6);
        assert!(matches!(
            is_maximal_irredundant_oracle_with_budget(&p6, &Broadcast::zero(&p6).unwrap(), 10),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn ufdist_corollary() {
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        // dominating: vacuously true
        assert!(check_ufdist_corollary(&k4, &bc(&k4, &[1, 0, 0, 0])).unwrap());
        // non-maximal broadcast satisfying the necessary condition anyway
        let p3 = path(3);
        let f = bc(&p3, &[1, 0, 0]);
        assert!(check_ufdist_corollary(&p3, &f).unwrap());
        assert!(!is_maximal_irredundant(&p3, &f).unwrap().maximal);
    }

    #[test]
    fn escalation_monotonicity() {
        // cost strictly increases along any escalation
        let p6 = path(6);
        let f = bc(&p6, &[1, 0, 0, 1, 0, 0]);
        for v in 0..5 {
            if undominated_raw(&p6, f.powers()).contains(&v) {
                continue;
            }
            let f2 = escalate(&p6, &f, v).unwrap();
            assert!(f2.cost() > f.cost());
            assert!(f.lt(&f2));
        }
    }
}
