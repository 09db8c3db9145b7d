//! The broadcast data model: per-vertex integer powers, cost, and the
//! pointwise order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A broadcast assigns every vertex a power `f(v)` with
/// `0 <= f(v) <= ecc(v)`. The all-zero broadcast is valid (it is the search
/// seed for the solvers). Graphs containing an isolated vertex are rejected:
/// such a vertex has eccentricity 0 and can never be dominated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Broadcast {
    powers: Vec<u32>,
}

impl serde::Serialize for Broadcast {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, u32> = self
            .powers
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p > 0)
            .map(|(v, &p)| (v.to_string(), p))
            .collect();
        map.serialize(serializer)
    }
}

impl Broadcast {
    pub fn new(g: &Graph, powers: Vec<u32>) -> Result<Broadcast> {
        if let Some(v) = g.trivial_component() {
            return Err(Error::TrivialComponent(v));
        }
        if powers.len() != g.vertex_count() {
            return Err(Error::BroadcastLength {
                got: powers.len(),
                want: g.vertex_count(),
            });
        }
        for (v, &p) in powers.iter().enumerate() {
            if p > g.ecc(v) {
                return Err(Error::PowerExceedsEccentricity {
                    vertex: v,
                    power: p,
                    ecc: g.ecc(v),
                });
            }
        }
        Ok(Broadcast { powers })
    }

    pub fn zero(g: &Graph) -> Result<Broadcast> {
        Broadcast::new(g, vec![0; g.vertex_count()])
    }

    pub fn power(&self, v: usize) -> u32 {
        self.powers[v]
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    /// Cost sigma(f): the sum of all powers.
    pub fn cost(&self) -> u32 {
        self.powers.iter().sum()
    }

    /// Positive vertices V_f^+ in increasing order.
    pub fn positive(&self) -> Vec<usize> {
        (0..self.powers.len())
            .filter(|&v| self.powers[v] > 0)
            .collect()
    }

    /// Copy with the power at `v` replaced. Validity is re-checked.
    pub fn with_power(&self, g: &Graph, v: usize, p: u32) -> Result<Broadcast> {
        let mut powers = self.powers.clone();
        powers[v] = p;
        Broadcast::new(g, powers)
    }

    /// Pointwise f <= g.
    pub fn leq(&self, other: &Broadcast) -> bool {
        self.powers.len() == other.powers.len()
            && self
                .powers
                .iter()
                .zip(&other.powers)
                .all(|(a, b)| a <= b)
    }

    /// Pointwise f < g: leq plus strict inequality somewhere.
    pub fn lt(&self, other: &Broadcast) -> bool {
        self.leq(other) && self.powers != other.powers
    }

    /// JSON object mapping vertex index (as string) to power; zero powers
    /// are omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, u32> = self
            .powers
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p > 0)
            .map(|(v, &p)| (v.to_string(), p))
            .collect();
        serde_json::to_value(map).expect("broadcast map serializes")
    }

    /// Parse the JSON form against a host graph; omitted vertices are 0.
    pub fn from_json(g: &Graph, value: &serde_json::Value) -> Result<Broadcast> {
        let map: BTreeMap<String, u32> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("broadcast JSON: {e}")))?;
        let mut powers = vec![0; g.vertex_count()];
        for (k, p) in map {
            let v: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("broadcast vertex key `{k}`")))?;
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange(v));
            }
            powers[v] = p;
        }
        Broadcast::new(g, powers)
    }
}
