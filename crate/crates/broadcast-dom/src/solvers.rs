//! Exact solvers for the broadcast parameters gamma_b, Gamma_b, ir_b, IR_b,
//! the multipacking number mp, and the classical set parameters, plus the
//! chain checker and the conjecture-scanning harness.
//!
//! Search strategy: iterative deepening on total cost for the minima,
//! branch-and-bound with an optimistic remaining-eccentricity bound for the
//! maxima. All searches assign powers vertex by vertex in increasing index
//! and increasing power, so the reported witness is the lexicographically
//! least optimum and results are reproducible.

use std::fmt;

use serde::Serialize;

use crate::analysis::{dominating_raw, irredundant_raw, private_boundary_raw};
use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::irredundance::{maximal_connected, DEFAULT_MAX_STATES};

/// Resource limits for the exhaustive solvers. Budget violations surface as
/// [`Error::Budget`], never as a wrong value.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Largest connected component the solvers accept.
    pub max_component_vertices: usize,
    /// Node cap for the branch-and-bound searches and the maximality
    /// decisions inside the ir_b solver.
    pub max_states: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_component_vertices: 12, max_states: DEFAULT_MAX_STATES }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParamName {
    #[serde(rename = "gamma_b")]
    GammaB,
    #[serde(rename = "Gamma_b")]
    UpperGammaB,
    #[serde(rename = "ir_b")]
    IrB,
    #[serde(rename = "IR_b")]
    UpperIrB,
    #[serde(rename = "mp")]
    Mp,
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "Gamma")]
    UpperGamma,
    #[serde(rename = "ir")]
    Ir,
    #[serde(rename = "IR")]
    UpperIr,
}

impl ParamName {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::GammaB => "gamma_b",
            ParamName::UpperGammaB => "Gamma_b",
            ParamName::IrB => "ir_b",
            ParamName::UpperIrB => "IR_b",
            ParamName::Mp => "mp",
            ParamName::Gamma => "gamma",
            ParamName::UpperGamma => "Gamma",
            ParamName::Ir => "ir",
            ParamName::UpperIr => "IR",
        }
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Vertex set satisfying the ball-counting condition: for every v and every
/// s with 1 <= s <= ecc(v), the ball N_s[v] holds at most s members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Multipacking {
    pub vertices: Vec<usize>,
}

/// A solver witness: either a broadcast (sparse JSON object) or a vertex
/// set (JSON array).
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Broadcast(Broadcast),
    Set(Vec<usize>),
}

/// One computed parameter with its verifying witness. For gamma_b the
/// certificate carries a maximum multipacking: when value and certificate
/// size agree the pair is a self-certifying optimum.
#[derive(Debug, Clone, Serialize)]
pub struct ParameterResult {
    #[serde(rename = "parameter")]
    pub name: ParamName,
    pub value: u32,
    pub witness: Witness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Multipacking>,
}

fn check_common(g: &Graph, budget: &Budget) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = g.trivial_component() {
        return Err(Error::TrivialComponent(v));
    }
    for comp in g.components() {
        if comp.len() > budget.max_component_vertices {
            return Err(Error::Budget(format!(
                "component with {} vertices exceeds the solver cap of {}",
                comp.len(),
                budget.max_component_vertices
            )));
        }
    }
    Ok(())
}

/// Connected components as standalone graphs with their global vertex
/// labels (ascending, so subgraph index i maps to labels[i]).
fn split(g: &Graph) -> Result<Vec<(Graph, Vec<usize>)>> {
    if g.is_connected() {
        return Ok(vec![(g.clone(), (0..g.vertex_count()).collect())]);
    }
    g.components()
        .iter()
        .map(|comp| Ok((g.induced_subgraph(comp)?.0, comp.clone())))
        .collect()
}

fn embed(global: &mut [u32], labels: &[usize], pw: &[u32]) {
    for (i, &old) in labels.iter().enumerate() {
        global[old] = pw[i];
    }
}

fn broadcast_result(
    name: ParamName,
    g: &Graph,
    pw: Vec<u32>,
    certificate: Option<Multipacking>,
) -> Result<ParameterResult> {
    let b = Broadcast::new(g, pw)?;
    Ok(ParameterResult { name, value: b.cost(), witness: Witness::Broadcast(b), certificate })
}

// ---------------------------------------------------------------------------
// exact-cost enumeration (minimization)

/// Visit every power vector with the given caps and total exactly `k`, in
/// lexicographic order, until `accept` takes one.
fn enumerate_cost(
    caps: &[u32],
    k: u32,
    accept: &mut dyn FnMut(&[u32]) -> bool,
) -> Option<Vec<u32>> {
    let n = caps.len();
    let mut suffix = vec![0u32; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + caps[i];
    }
    fn rec(
        caps: &[u32],
        suffix: &[u32],
        i: usize,
        rem: u32,
        cur: &mut Vec<u32>,
        accept: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if i == caps.len() {
            return rem == 0 && accept(cur);
        }
        if rem > suffix[i] {
            return false;
        }
        for p in 0..=caps[i].min(rem) {
            cur[i] = p;
            if rec(caps, suffix, i + 1, rem - p, cur, accept) {
                return true;
            }
        }
        cur[i] = 0;
        false
    }
    let mut cur = vec![0u32; n];
    if rec(caps, &suffix, 0, k, &mut cur, accept) { Some(cur) } else { None }
}

fn ecc_caps(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count()).map(|v| g.ecc(v)).collect()
}

// ---------------------------------------------------------------------------
// branch-and-bound maximization over irredundant broadcasts

struct MaxSearch<'a> {
    g: &'a Graph,
    caps: Vec<u32>,
    suffix: Vec<u32>,
    require_dominating: bool,
    cur: Vec<u32>,
    best: Option<(u32, Vec<u32>)>,
    states: u64,
    max_states: u64,
}

impl MaxSearch<'_> {
    fn dfs(&mut self, i: usize, cost: u32) -> Result<()> {
        self.states += 1;
        if self.states > self.max_states {
            return Err(Error::Budget(format!(
                "maximization search exceeded {} states",
                self.max_states
            )));
        }
        let n = self.g.vertex_count();
        if i == n {
            if (!self.require_dominating || dominating_raw(self.g, &self.cur))
                && self.best.as_ref().is_none_or(|(b, _)| cost > *b)
            {
                self.best = Some((cost, self.cur.clone()));
            }
            return Ok(());
        }
        // optimistic bound: even maxing out the suffix cannot beat the best
        if let Some((b, _)) = &self.best {
            if cost + self.suffix[i] <= *b {
                return Ok(());
            }
        }
        for p in 0..=self.caps[i] {
            self.cur[i] = p;
            // A positive prefix vertex whose private boundary is already
            // empty (suffix all zero) stays empty under any extension:
            // extra power only shrinks private boundaries.
            if p > 0 && !irredundant_raw(self.g, &self.cur) {
                continue;
            }
            self.dfs(i + 1, cost + p)?;
        }
        self.cur[i] = 0;
        Ok(())
    }
}

/// Lexicographically least maximum-cost irredundant (optionally also
/// dominating) power vector for a connected graph.
fn max_irredundant(
    g: &Graph,
    caps: Vec<u32>,
    require_dominating: bool,
    max_states: u64,
) -> Result<(u32, Vec<u32>)> {
    let n = g.vertex_count();
    let mut suffix = vec![0u32; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + caps[i];
    }
    let mut search = MaxSearch {
        g,
        caps,
        suffix,
        require_dominating,
        cur: vec![0; n],
        best: None,
        states: 0,
        max_states,
    };
    search.dfs(0, 0)?;
    search.best.ok_or_else(|| {
        Error::Construction("no irredundant broadcast found during maximization".into())
    })
}

// ---------------------------------------------------------------------------
// multipacking

/// Maximum multipacking of a connected graph by include/exclude subset
/// search with incremental per-ball counts. Include-first branching with
/// strict improvement yields the lexicographically least maximum set.
fn mp_component(g: &Graph) -> (u32, Vec<usize>) {
    let n = g.vertex_count();
    // counts[v][s] = |N_s[v] ∩ chosen| for 1 <= s <= ecc(v)
    let mut counts: Vec<Vec<u32>> = (0..n).map(|v| vec![0; g.ecc(v) as usize + 1]).collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut best: Vec<usize> = Vec::new();

    fn feasible(g: &Graph, counts: &[Vec<u32>], x: usize) -> bool {
        (0..g.vertex_count()).all(|v| {
            let d = g.dist(v, x);
            (d.max(1)..=g.ecc(v)).all(|s| counts[v][s as usize] + 1 <= s)
        })
    }
    fn apply(g: &Graph, counts: &mut [Vec<u32>], x: usize, delta: i32) {
        for v in 0..g.vertex_count() {
            let d = g.dist(v, x);
            for s in d.max(1)..=g.ecc(v) {
                let c = &mut counts[v][s as usize];
                *c = c.wrapping_add_signed(delta);
            }
        }
    }
    fn rec(
        g: &Graph,
        i: usize,
        counts: &mut [Vec<u32>],
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        let n = g.vertex_count();
        if chosen.len() + (n - i) <= best.len() {
            return;
        }
        if i == n {
            if chosen.len() > best.len() {
                *best = chosen.clone();
            }
            return;
        }
        if feasible(g, counts, i) {
            apply(g, counts, i, 1);
            chosen.push(i);
            rec(g, i + 1, counts, chosen, best);
            chosen.pop();
            apply(g, counts, i, -1);
        }
        rec(g, i + 1, counts, chosen, best);
    }
    rec(g, 0, &mut counts, &mut chosen, &mut best);
    (best.len() as u32, best)
}

/// Literal check of the multipacking condition; duplicate and out-of-range
/// members are rejected.
pub fn verify_multipacking(g: &Graph, m: &[usize]) -> Result<bool> {
    let mut seen = vec![false; g.vertex_count()];
    for &x in m {
        if x >= g.vertex_count() {
            return Err(Error::VertexOutOfRange(x));
        }
        if seen[x] {
            return Ok(false);
        }
        seen[x] = true;
    }
    for v in 0..g.vertex_count() {
        for s in 1..=g.ecc(v) {
            let inside = m.iter().filter(|&&x| g.dist(v, x) <= s).count() as u32;
            if inside > s {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn mp(g: &Graph) -> Result<ParameterResult> {
    mp_with_budget(g, &Budget::default())
}

pub fn mp_with_budget(g: &Graph, budget: &Budget) -> Result<ParameterResult> {
    check_common(g, budget)?;
    let mut value = 0;
    let mut witness = Vec::new();
    for (sub, labels) in split(g)? {
        let (v, set) = mp_component(&sub);
        value += v;
        witness.extend(set.into_iter().map(|i| labels[i]));
    }
    witness.sort_unstable();
    debug_assert!(verify_multipacking(g, &witness)?);
    Ok(ParameterResult {
        name: ParamName::Mp,
        value,
        witness: Witness::Set(witness),
        certificate: None,
    })
}

// ---------------------------------------------------------------------------
// the four broadcast parameters

fn gamma_b_component(g: &Graph, lower: u32) -> Result<(u32, Vec<u32>)> {
    let caps = ecc_caps(g);
    let rad = g.radius().expect("component is connected");
    for k in lower.min(rad)..=rad {
        if let Some(pw) = enumerate_cost(&caps, k, &mut |pw| dominating_raw(g, pw)) {
            return Ok((k, pw));
        }
    }
    // a central broadcast of power rad always dominates
    Err(Error::Construction("no dominating broadcast up to the radius".into()))
}

pub fn gamma_b(g: &Graph) -> Result<ParameterResult> {
    gamma_b_with_budget(g, &Budget::default())
}

pub fn gamma_b_with_budget(g: &Graph, budget: &Budget) -> Result<ParameterResult> {
    check_common(g, budget)?;
    let mut global = vec![0u32; g.vertex_count()];
    let mut mp_set = Vec::new();
    for (sub, labels) in split(g)? {
        let (mp_val, comp_mp) = mp_component(&sub);
        let (_, pw) = gamma_b_component(&sub, mp_val)?;
        embed(&mut global, &labels, &pw);
        mp_set.extend(comp_mp.into_iter().map(|i| labels[i]));
    }
    mp_set.sort_unstable();
    broadcast_result(ParamName::GammaB, g, global, Some(Multipacking { vertices: mp_set }))
}

pub fn upper_gamma_b(g: &Graph) -> Result<ParameterResult> {
    upper_gamma_b_with_budget(g, &Budget::default())
}

pub fn upper_gamma_b_with_budget(g: &Graph, budget: &Budget) -> Result<ParameterResult> {
    check_common(g, budget)?;
    let mut global = vec![0u32; g.vertex_count()];
    for (sub, labels) in split(g)? {
        let (_, pw) = max_irredundant(&sub, ecc_caps(&sub), true, budget.max_states)?;
        embed(&mut global, &labels, &pw);
    }
    broadcast_result(ParamName::UpperGammaB, g, global, None)
}

pub fn upper_ir_b(g: &Graph) -> Result<ParameterResult> {
    upper_ir_b_with_budget(g, &Budget::default())
}

pub fn upper_ir_b_with_budget(g: &Graph, budget: &Budget) -> Result<ParameterResult> {
    check_common(g, budget)?;
    let mut global = vec![0u32; g.vertex_count()];
    for (sub, labels) in split(g)? {
        let (_, pw) = max_irredundant(&sub, ecc_caps(&sub), false, budget.max_states)?;
        embed(&mut global, &labels, &pw);
    }
    broadcast_result(ParamName::UpperIrB, g, global, None)
}

fn ir_b_component(g: &Graph, max_states: u64) -> Result<(u32, Vec<u32>)> {
    let caps = ecc_caps(g);
    let rad = g.radius().expect("component is connected");
    for k in 1..=rad {
        let mut err = None;
        let found = enumerate_cost(&caps, k, &mut |pw| {
            if !irredundant_raw(g, pw) {
                return false;
            }
            match maximal_connected(g, pw, max_states) {
                Ok(ev) => ev.maximal,
                Err(e) => {
                    err = Some(e);
                    true // abort the enumeration; the error wins below
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if let Some(pw) = found {
            return Ok((k, pw));
        }
    }
    // some minimal dominating broadcast of cost <= rad is maximal irredundant
    Err(Error::Construction("no maximal irredundant broadcast up to the radius".into()))
}

pub fn ir_b(g: &Graph) -> Result<ParameterResult> {
    ir_b_with_budget(g, &Budget::default())
}

pub fn ir_b_with_budget(g: &Graph, budget: &Budget) -> Result<ParameterResult> {
    check_common(g, budget)?;
    let mut global = vec![0u32; g.vertex_count()];
    for (sub, labels) in split(g)? {
        let (_, pw) = ir_b_component(&sub, budget.max_states)?;
        embed(&mut global, &labels, &pw);
    }
    broadcast_result(ParamName::IrB, g, global, None)
}

/// A minimum-cost dominating broadcast in which every positive vertex keeps
/// an external private boundary. One always exists; not finding one is a
/// fatal invariant violation, not a budget condition.
pub fn gamma_b_broadcast_with_epb(g: &Graph) -> Result<Broadcast> {
    gamma_b_broadcast_with_epb_with_budget(g, &Budget::default())
}

pub fn gamma_b_broadcast_with_epb_with_budget(g: &Graph, budget: &Budget) -> Result<Broadcast> {
    check_common(g, budget)?;
    let mut global = vec![0u32; g.vertex_count()];
    for (sub, labels) in split(g)? {
        let (mp_val, _) = mp_component(&sub);
        let (k, _) = gamma_b_component(&sub, mp_val)?;
        let caps = ecc_caps(&sub);
        let found = enumerate_cost(&caps, k, &mut |pw| {
            dominating_raw(&sub, pw)
                && (0..sub.vertex_count()).all(|v| {
                    pw[v] == 0
                        || private_boundary_raw(&sub, pw, v).iter().any(|&u| u != v)
                })
        });
        match found {
            Some(pw) => embed(&mut global, &labels, &pw),
            None => {
                return Err(Error::Construction(
                    "no minimum dominating broadcast with external private \
                     boundaries everywhere"
                        .into(),
                ))
            }
        }
    }
    Broadcast::new(g, global)
}

// ---------------------------------------------------------------------------
// classical set parameters

/// gamma, Gamma, ir, IR with witness sets.
#[derive(Debug, Clone, Serialize)]
pub struct SetParams {
    pub gamma: ParameterResult,
    pub upper_gamma: ParameterResult,
    pub ir: ParameterResult,
    pub upper_ir: ParameterResult,
}

struct SetTables {
    closed: Vec<u64>,
    n: usize,
}

impl SetTables {
    fn new(g: &Graph) -> SetTables {
        let n = g.vertex_count();
        let closed = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .fold(1u64 << v, |acc, &w| acc | 1 << w)
            })
            .collect();
        SetTables { closed, n }
    }

    fn dominating(&self, mask: u64) -> bool {
        (0..self.n).all(|v| mask & self.closed[v] != 0)
    }

    fn irredundant(&self, mask: u64) -> bool {
        (0..self.n)
            .filter(|&s| mask >> s & 1 == 1)
            .all(|s| self.has_private_neighbor(mask, s))
    }

    fn has_private_neighbor(&self, mask: u64, s: usize) -> bool {
        (0..self.n)
            .any(|u| self.closed[u] >> s & 1 == 1 && self.closed[u] & mask == 1 << s)
    }

    fn maximal_irredundant(&self, mask: u64) -> bool {
        // irredundance is downward hereditary, so checking single-vertex
        // additions decides maximality against all supersets
        self.irredundant(mask)
            && (0..self.n)
                .filter(|&v| mask >> v & 1 == 0)
                .all(|v| !self.irredundant(mask | 1 << v))
    }
}

fn mask_to_set(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Track the best set under (cardinality, then lexicographically least
/// vertex list) with `minimize` deciding the cardinality direction.
fn better(minimize: bool, cand: &[usize], best: &Option<Vec<usize>>) -> bool {
    match best {
        None => true,
        Some(b) => {
            let (cl, bl) = (cand.len(), b.len());
            if cl != bl {
                if minimize { cl < bl } else { cl > bl }
            } else {
                cand < &b[..]
            }
        }
    }
}

fn set_params_component(g: &Graph) -> Result<[(u32, Vec<usize>); 4]> {
    let n = g.vertex_count();
    if n > 25 {
        return Err(Error::Budget(format!(
            "subset enumeration refuses {n} vertices"
        )));
    }
    let t = SetTables::new(g);
    let mut gamma: Option<Vec<usize>> = None;
    let mut upper_gamma: Option<Vec<usize>> = None;
    let mut ir: Option<Vec<usize>> = None;
    let mut upper_ir: Option<Vec<usize>> = None;
    for mask in 0u64..1 << n {
        let dom = t.dominating(mask);
        let irr = t.irredundant(mask);
        if !dom && !irr {
            continue;
        }
        let set = mask_to_set(mask, n);
        if dom && better(true, &set, &gamma) {
            gamma = Some(set.clone());
        }
        if dom && irr && better(false, &set, &upper_gamma) {
            upper_gamma = Some(set.clone());
        }
        if irr && better(false, &set, &upper_ir) {
            upper_ir = Some(set.clone());
        }
        if irr && t.maximal_irredundant(mask) && better(true, &set, &ir) {
            ir = Some(set);
        }
    }
    let unwrap = |o: Option<Vec<usize>>, what: &str| {
        o.ok_or_else(|| Error::Construction(format!("no {what} set found")))
    };
    let pack = |s: Vec<usize>| (s.len() as u32, s);
    Ok([
        pack(unwrap(gamma, "dominating")?),
        pack(unwrap(upper_gamma, "minimal dominating")?),
        pack(unwrap(ir, "maximal irredundant")?),
        pack(unwrap(upper_ir, "irredundant")?),
    ])
}

pub fn set_params(g: &Graph) -> Result<SetParams> {
    set_params_with_budget(g, &Budget::default())
}

pub fn set_params_with_budget(g: &Graph, budget: &Budget) -> Result<SetParams> {
    check_common(g, budget)?;
    let names = [ParamName::Gamma, ParamName::UpperGamma, ParamName::Ir, ParamName::UpperIr];
    let mut values = [0u32; 4];
    let mut sets: [Vec<usize>; 4] = Default::default();
    for (sub, labels) in split(g)? {
        let comp = set_params_component(&sub)?;
        for (i, (v, set)) in comp.into_iter().enumerate() {
            values[i] += v;
            sets[i].extend(set.into_iter().map(|x| labels[x]));
        }
    }
    let mut results = names.iter().zip(values).zip(sets).map(|((&name, value), mut set)| {
        set.sort_unstable();
        ParameterResult { name, value, witness: Witness::Set(set), certificate: None }
    });
    Ok(SetParams {
        gamma: results.next().unwrap(),
        upper_gamma: results.next().unwrap(),
        ir: results.next().unwrap(),
        upper_ir: results.next().unwrap(),
    })
}

/// The set parameters computed by restricting the broadcast solvers to 0/1
/// powers. Must agree in value with [`set_params`]; the witnesses may be
/// different optima because the tie-breaking orders differ.
pub fn set_params_via_broadcast(g: &Graph) -> Result<SetParams> {
    set_params_via_broadcast_with_budget(g, &Budget::default())
}

pub fn set_params_via_broadcast_with_budget(g: &Graph, budget: &Budget) -> Result<SetParams> {
    check_common(g, budget)?;
    let names = [ParamName::Gamma, ParamName::UpperGamma, ParamName::Ir, ParamName::UpperIr];
    let mut values = [0u32; 4];
    let mut sets: [Vec<usize>; 4] = Default::default();
    for (sub, labels) in split(g)? {
        let n = sub.vertex_count();
        let caps = vec![1u32; n];
        let gamma_pw = (0..=n as u32)
            .find_map(|k| enumerate_cost(&caps, k, &mut |pw| dominating_raw(&sub, pw)))
            .ok_or_else(|| Error::Construction("no dominating set".into()))?;
        let (_, upper_gamma_pw) =
            max_irredundant(&sub, caps.clone(), true, budget.max_states)?;
        let (_, upper_ir_pw) = max_irredundant(&sub, caps.clone(), false, budget.max_states)?;
        // ir: minimum 0/1 broadcast that is irredundant and whose every
        // single-vertex extension breaks irredundance
        let ir_pw = (1..=n as u32)
            .find_map(|k| {
                enumerate_cost(&caps, k, &mut |pw| {
                    if !irredundant_raw(&sub, pw) {
                        return false;
                    }
                    let mut ext = pw.to_vec();
                    (0..n).all(|v| {
                        if ext[v] > 0 {
                            return true;
                        }
                        ext[v] = 1;
                        let still = irredundant_raw(&sub, &ext);
                        ext[v] = 0;
                        !still
                    })
                })
            })
            .ok_or_else(|| Error::Construction("no maximal irredundant set".into()))?;
        for (i, pw) in [gamma_pw, upper_gamma_pw, ir_pw, upper_ir_pw].iter().enumerate() {
            values[i] += pw.iter().sum::<u32>();
            sets[i].extend(
                pw.iter()
                    .enumerate()
                    .filter(|&(_, &p)| p > 0)
                    .map(|(v, _)| labels[v]),
            );
        }
    }
    let mut results = names.iter().zip(values).zip(sets).map(|((&name, value), mut set)| {
        set.sort_unstable();
        ParameterResult { name, value, witness: Witness::Set(set), certificate: None }
    });
    Ok(SetParams {
        gamma: results.next().unwrap(),
        upper_gamma: results.next().unwrap(),
        ir: results.next().unwrap(),
        upper_ir: results.next().unwrap(),
    })
}

// ---------------------------------------------------------------------------
// chain checker

/// All seven parameter values plus every violated inequality. `ok` means
/// the full chain ir_b <= gamma_b <= gamma <= Gamma <= Gamma_b <= IR_b
/// holds together with 4*gamma_b <= 5*ir_b and gamma_b >= mp.
#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub ir_b: u32,
    pub gamma_b: u32,
    pub gamma: u32,
    pub upper_gamma: u32,
    pub upper_gamma_b: u32,
    pub upper_ir_b: u32,
    pub mp: u32,
    pub ok: bool,
    pub violations: Vec<String>,
}

pub fn chain_check(g: &Graph) -> Result<ChainReport> {
    chain_check_with_budget(g, &Budget::default())
}

pub fn chain_check_with_budget(g: &Graph, budget: &Budget) -> Result<ChainReport> {
    let sets = set_params_with_budget(g, budget)?;
    let r = ChainReportBuilder {
        ir_b: ir_b_with_budget(g, budget)?.value,
        gamma_b: gamma_b_with_budget(g, budget)?.value,
        gamma: sets.gamma.value,
        upper_gamma: sets.upper_gamma.value,
        upper_gamma_b: upper_gamma_b_with_budget(g, budget)?.value,
        upper_ir_b: upper_ir_b_with_budget(g, budget)?.value,
        mp: mp_with_budget(g, budget)?.value,
    };
    Ok(r.build())
}

struct ChainReportBuilder {
    ir_b: u32,
    gamma_b: u32,
    gamma: u32,
    upper_gamma: u32,
    upper_gamma_b: u32,
    upper_ir_b: u32,
    mp: u32,
}

impl ChainReportBuilder {
    fn build(self) -> ChainReport {
        let mut violations = Vec::new();
        let chain = [
            ("ir_b", self.ir_b, "gamma_b", self.gamma_b),
            ("gamma_b", self.gamma_b, "gamma", self.gamma),
            ("gamma", self.gamma, "Gamma", self.upper_gamma),
            ("Gamma", self.upper_gamma, "Gamma_b", self.upper_gamma_b),
            ("Gamma_b", self.upper_gamma_b, "IR_b", self.upper_ir_b),
        ];
        for (a, av, b, bv) in chain {
            if av > bv {
                violations.push(format!("{a} = {av} > {bv} = {b}"));
            }
        }
        if 4 * self.gamma_b > 5 * self.ir_b {
            violations.push(format!(
                "4*gamma_b = {} > {} = 5*ir_b",
                4 * self.gamma_b,
                5 * self.ir_b
            ));
        }
        if self.gamma_b < self.mp {
            violations.push(format!("gamma_b = {} < {} = mp", self.gamma_b, self.mp));
        }
        ChainReport {
            ir_b: self.ir_b,
            gamma_b: self.gamma_b,
            gamma: self.gamma,
            upper_gamma: self.upper_gamma,
            upper_gamma_b: self.upper_gamma_b,
            upper_ir_b: self.upper_ir_b,
            mp: self.mp,
            ok: violations.is_empty(),
            violations,
        }
    }
}

// ---------------------------------------------------------------------------
// conjecture scanning

/// Empirical evidence for the two open conjectures on one connected graph.
/// A counterexample is a reportable finding, never a solver error.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub gamma_b: u32,
    pub ir_b: u32,
    /// Number of minimum-cost maximal irredundant broadcasts.
    pub min_broadcast_count: usize,
    /// 4*gamma_b == 5*ir_b (the extreme ratio).
    pub ratio_extreme: bool,
    /// Every minimum broadcast uses only power 1 and its positive vertices
    /// induce a perfect matching.
    pub all_min_broadcasts_matchings: bool,
    /// Some minimum broadcast has every positive power >= 2.
    pub exists_all_powers_ge2: bool,
    /// The biconditional ratio_extreme <-> all_min_broadcasts_matchings fails.
    pub ratio_counterexample: bool,
    /// exists_all_powers_ge2 holds but ir_b != gamma_b.
    pub equality_counterexample: bool,
}

pub fn conjecture_check(g: &Graph) -> Result<ConjectureReport> {
    conjecture_check_with_budget(g, &Budget::default())
}

pub fn conjecture_check_with_budget(g: &Graph, budget: &Budget) -> Result<ConjectureReport> {
    check_common(g, budget)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma_b = gamma_b_with_budget(g, budget)?.value;
    let irb = ir_b_with_budget(g, budget)?.value;
    // all minimum-cost maximal irredundant broadcasts
    let caps = ecc_caps(g);
    let mut minima: Vec<Vec<u32>> = Vec::new();
    let mut err = None;
    enumerate_cost(&caps, irb, &mut |pw| {
        if irredundant_raw(g, pw) {
            match maximal_connected(g, pw, budget.max_states) {
                Ok(ev) if ev.maximal => minima.push(pw.to_vec()),
                Ok(_) => {}
                Err(e) => {
                    err = Some(e);
                    return true;
                }
            }
        }
        false
    });
    if let Some(e) = err {
        return Err(e);
    }
    let is_matching_broadcast = |pw: &[u32]| {
        let pos: Vec<usize> = (0..pw.len()).filter(|&v| pw[v] > 0).collect();
        !pos.is_empty()
            && pos.iter().all(|&v| pw[v] == 1)
            && pos
                .iter()
                .all(|&v| pos.iter().filter(|&&w| g.has_edge(v, w)).count() == 1)
    };
    let all_matchings = minima.iter().all(|pw| is_matching_broadcast(pw));
    let exists_ge2 = minima
        .iter()
        .any(|pw| pw.iter().all(|&p| p == 0 || p >= 2) && pw.iter().any(|&p| p > 0));
    let ratio_extreme = 4 * gamma_b == 5 * irb;
    Ok(ConjectureReport {
        gamma_b,
        ir_b: irb,
        min_broadcast_count: minima.len(),
        ratio_extreme,
        all_min_broadcasts_matchings: all_matchings,
        exists_all_powers_ge2: exists_ge2,
        ratio_counterexample: ratio_extreme != all_matchings,
        equality_counterexample: exists_ge2 && irb != gamma_b,
    })
}

/// Aggregate scan over a corpus; indexes refer to the input order.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub graphs_scanned: usize,
    pub ratio_counterexamples: Vec<usize>,
    pub equality_counterexamples: Vec<usize>,
    /// (gamma_b, ir_b) of the graph maximizing gamma_b / ir_b.
    pub max_ratio: Option<(u32, u32)>,
}

pub fn conjecture_scan<'a, I>(graphs: I, budget: &Budget) -> Result<ScanReport>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut report = ScanReport {
        graphs_scanned: 0,
        ratio_counterexamples: Vec::new(),
        equality_counterexamples: Vec::new(),
        max_ratio: None,
    };
    for g in graphs {
        let idx = report.graphs_scanned;
        let r = conjecture_check_with_budget(g, budget)?;
        report.graphs_scanned += 1;
        if r.ratio_counterexample {
            report.ratio_counterexamples.push(idx);
        }
        if r.equality_counterexample {
            report.equality_counterexamples.push(idx);
        }
        let dominates = match report.max_ratio {
            None => true,
            // compare gamma_b/ir_b as fractions
            Some((bg, bi)) => r.gamma_b * bi > bg * r.ir_b,
        };
        if dominates {
            report.max_ratio = Some((r.gamma_b, r.ir_b));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{is_dominating, is_irredundant, is_minimal_dominating};
    use crate::family::FamilySpec;
    use crate::irredundance::is_maximal_irredundant_oracle;

    fn fam(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn witness_broadcast(r: &ParameterResult) -> &Broadcast {
        match &r.witness {
            Witness::Broadcast(b) => b,
            Witness::Set(_) => panic!("expected broadcast witness"),
        }
    }

    fn witness_set(r: &ParameterResult) -> &[usize] {
        match &r.witness {
            Witness::Set(s) => s,
            Witness::Broadcast(_) => panic!("expected set witness"),
        }
    }

    #[test]
    fn gamma_b_values() {
        for n in 3..=5 {
            let g = fam(FamilySpec::Spider(n));
            assert_eq!(gamma_b(&g).unwrap().value, 2, "spider({n})");
        }
        assert_eq!(gamma_b(&fam(FamilySpec::Complete(4))).unwrap().value, 1);
        let p4 = fam(FamilySpec::Path(4));
        let r = gamma_b(&p4).unwrap();
        assert_eq!(r.value, 2);
        let w = witness_broadcast(&r);
        assert_eq!(w.cost(), 2);
        assert!(is_dominating(&p4, w).unwrap());
        // self-certifying: the attached multipacking matches the value
        assert_eq!(r.certificate.as_ref().unwrap().vertices.len(), 2);
    }

    #[test]
    fn gamma_b_brute_force_cross_check() {
        // every dominating broadcast of smaller cost is ruled out by
        // exhaustive enumeration
        let g = fam(FamilySpec::Cycle(7));
        let r = gamma_b(&g).unwrap();
        let caps = ecc_caps(&g);
        for k in 0..r.value {
            assert!(enumerate_cost(&caps, k, &mut |pw| dominating_raw(&g, pw)).is_none());
        }
    }

    #[test]
    fn gamma_b_disconnected_sums() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let r = gamma_b(&g).unwrap();
        assert_eq!(r.value, 2);
        assert!(is_dominating(&g, witness_broadcast(&r)).unwrap());
    }

    #[test]
    fn upper_gamma_b_values() {
        for r in 3..=4 {
            let g = fam(FamilySpec::TwoRCliques(r));
            assert_eq!(upper_gamma_b(&g).unwrap().value, 3, "tworcliques({r})");
        }
        assert_eq!(upper_gamma_b(&fam(FamilySpec::Complete(5))).unwrap().value, 1);
        let p4 = fam(FamilySpec::Path(4));
        let res = upper_gamma_b(&p4).unwrap();
        assert_eq!(res.value, 3);
        assert!(is_minimal_dominating(&p4, witness_broadcast(&res)).unwrap());
    }

    #[test]
    fn ir_b_values() {
        for n in 3..=5 {
            let g = fam(FamilySpec::Spider(n));
            let r = ir_b(&g).unwrap();
            assert_eq!(r.value, 2, "spider({n})");
            let w = witness_broadcast(&r);
            assert!(is_maximal_irredundant_oracle(&g, w).unwrap());
        }
        assert_eq!(ir_b(&fam(FamilySpec::Complete(4))).unwrap().value, 1);
    }

    #[test]
    fn ir_b_matches_oracle_minimum_on_c6() {
        let g = fam(FamilySpec::Cycle(6));
        let r = ir_b(&g).unwrap();
        // independent minimum via the exhaustive maximality oracle
        let caps = ecc_caps(&g);
        let mut oracle_min = None;
        'outer: for k in 1..=g.radius().unwrap() {
            let mut hit = false;
            enumerate_cost(&caps, k, &mut |pw| {
                if irredundant_raw(&g, pw) {
                    let f = Broadcast::new(&g, pw.to_vec()).unwrap();
                    if is_maximal_irredundant_oracle(&g, &f).unwrap() {
                        hit = true;
                        return true;
                    }
                }
                false
            });
            if hit {
                oracle_min = Some(k);
                break 'outer;
            }
        }
        assert_eq!(Some(r.value), oracle_min);
    }

    #[test]
    fn upper_ir_b_values() {
        for r in 3..=4 {
            let g = fam(FamilySpec::TwoRCliques(r));
            assert_eq!(upper_ir_b(&g).unwrap().value, r as u32, "tworcliques({r})");
        }
        assert_eq!(upper_ir_b(&fam(FamilySpec::Complete(4))).unwrap().value, 1);
        let p3 = fam(FamilySpec::Path(3));
        let r = upper_ir_b(&p3).unwrap();
        assert_eq!(r.value, 2);
        // lex-least among the maxima: the endpoint broadcast (0,0,2)
        assert_eq!(witness_broadcast(&r).powers(), &[0, 0, 2]);
    }

    #[test]
    fn mp_values() {
        let sp = fam(FamilySpec::Spider(3));
        let r = mp(&sp).unwrap();
        assert_eq!(r.value, 2);
        assert!(verify_multipacking(&sp, witness_set(&r)).unwrap());
        assert_eq!(mp(&fam(FamilySpec::Complete(6))).unwrap().value, 1);
        assert_eq!(mp(&fam(FamilySpec::Path(4))).unwrap().value, 2);
    }

    #[test]
    fn multipacking_verification() {
        let k3 = fam(FamilySpec::Complete(3));
        assert!(verify_multipacking(&k3, &[]).unwrap());
        assert!(!verify_multipacking(&k3, &[0, 1, 2]).unwrap());
        assert!(!verify_multipacking(&k3, &[0, 0]).unwrap());
        assert!(matches!(
            verify_multipacking(&k3, &[7]),
            Err(Error::VertexOutOfRange(7))
        ));
    }

    #[test]
    fn set_param_values() {
        for n in 3..=4 {
            let sp = fam(FamilySpec::Spider(n));
            let s = set_params(&sp).unwrap();
            assert_eq!(s.gamma.value, n as u32);
            assert_eq!(s.ir.value, n as u32);
        }
        let g4 = fam(FamilySpec::TwoRCliques(4));
        let s = set_params(&g4).unwrap();
        assert_eq!(s.upper_gamma.value, 2);
        assert_eq!(s.upper_ir.value, 4);
        let grid = fam(FamilySpec::Grid(3, 3));
        assert_eq!(set_params(&grid).unwrap().upper_ir.value, 5);
    }

    #[test]
    fn broadcast_route_reproduces_set_params() {
        let graphs = [
            fam(FamilySpec::Path(5)),
            fam(FamilySpec::Cycle(6)),
            fam(FamilySpec::Spider(3)),
            Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let a = set_params(g).unwrap();
            let b = set_params_via_broadcast(g).unwrap();
            assert_eq!(a.gamma.value, b.gamma.value);
            assert_eq!(a.upper_gamma.value, b.upper_gamma.value);
            assert_eq!(a.ir.value, b.ir.value);
            assert_eq!(a.upper_ir.value, b.upper_ir.value);
        }
    }

    #[test]
    fn chain_check_tworcliques() {
        let g = fam(FamilySpec::TwoRCliques(4));
        let r = chain_check(&g).unwrap();
        assert!(r.ok, "violations: {:?}", r.violations);
        assert_eq!(r.upper_gamma_b, 3);
        assert_eq!(r.upper_ir_b, 4);
    }

    #[test]
    fn chain_check_rejects_isolated_vertex() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(chain_check(&g), Err(Error::TrivialComponent(2))));
    }

    #[test]
    fn conjecture_reports() {
        let k4 = fam(FamilySpec::Complete(4));
        let r = conjecture_check(&k4).unwrap();
        assert_eq!(r.ir_b, r.gamma_b);
        assert!(!r.ratio_counterexample && !r.equality_counterexample);
        let sp = fam(FamilySpec::Spider(3));
        let r = conjecture_check(&sp).unwrap();
        assert_eq!((r.gamma_b, r.ir_b), (2, 2));
        assert!(!r.ratio_extreme);
        assert!(!r.ratio_counterexample && !r.equality_counterexample);
    }

    #[test]
    fn conjecture_scan_small_families() {
        let graphs = [
            fam(FamilySpec::Path(4)),
            fam(FamilySpec::Cycle(5)),
            fam(FamilySpec::Complete(3)),
        ];
        let r = conjecture_scan(graphs.iter(), &Budget::default()).unwrap();
        assert_eq!(r.graphs_scanned, 3);
        assert!(r.ratio_counterexamples.is_empty());
        assert!(r.equality_counterexamples.is_empty());
        assert!(r.max_ratio.is_some());
    }

    #[test]
    fn epb_broadcast_exists() {
        for g in [
            fam(FamilySpec::Complete(4)),
            fam(FamilySpec::Spider(3)),
            fam(FamilySpec::Path(4)),
        ] {
            let f = gamma_b_broadcast_with_epb(&g).unwrap();
            assert_eq!(f.cost(), gamma_b(&g).unwrap().value);
            assert!(is_dominating(&g, &f).unwrap());
            assert!(crate::analysis::has_epb_everywhere(&g, &f).unwrap());
            assert!(is_irredundant(&g, &f).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p4 = fam(FamilySpec::Path(4));
        let tight = Budget { max_component_vertices: 2, max_states: 10 };
        assert!(matches!(gamma_b_with_budget(&p4, &tight), Err(Error::Budget(_))));
    }

    #[test]
    fn json_shape() {
        let g = fam(FamilySpec::Path(3));
        let r = gamma_b(&g).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["parameter"], "gamma_b");
        assert!(v["witness"].is_object());
        assert!(v["certificate"].is_array());
        let s = mp(&g).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["parameter"], "mp");
        assert!(v["witness"].is_array());
        assert!(v.get("certificate").is_none());
    }
}
