//! Broadcast domination and irredundance on finite simple graphs.
//!
//! The crate computes and certifies the broadcast parameters gamma_b,
//! Gamma_b, ir_b, IR_b and the multipacking number mp, decides maximal
//! irredundance of a broadcast via an escalation-sequence procedure, and
//! runs the constructive routine that turns a maximal irredundant broadcast
//! into a dominating broadcast of at most 5/4 the cost.

pub mod analysis;
pub mod bound;
pub mod broadcast;
pub mod corpus;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod irredundance;
pub mod solvers;

pub use broadcast::Broadcast;
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::Graph;
