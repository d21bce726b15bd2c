//! hapsched: scheduling a wirelessly powered RSMA IoT network.
//!
//! A hybrid access point (HAP) serves N RF-harvesting devices over a horizon
//! of T slots. Each slot is wholly downlink (HAP transmits data + energy,
//! devices power-split) or wholly uplink (devices spend harvested energy to
//! transmit rate-split messages, HAP decodes with SIC). The crate provides:
//!
//! - [`model`]: domain types, channel generation, the physical-layer formulas
//!   and a schedule validator;
//! - [`linearize`]: piecewise-linear harvester approximation and McCormick
//!   envelopes for bilinear terms;
//! - [`lp`]: a dense bounded-variable simplex;
//! - [`milp`]: the full-horizon mixed-integer model and branch-and-bound;
//! - [`slotopt`]: per-slot downlink/uplink optimizers;
//! - [`rl`]: tabular Q-learning over the slot-mode decision;
//! - [`sim`]: episode engine, baseline policies, sweep harness and CLI.

pub mod linearize;
pub mod lp;
pub mod milp;
pub mod model;
pub mod rl;
pub mod sim;
pub mod slotopt;

pub use model::{ChannelRealization, NetworkConfig, Schedule, SlotDecision};
