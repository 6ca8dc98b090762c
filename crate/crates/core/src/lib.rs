//! Simulation and learning toolkit for the ergodic bounded-velocity follower.

pub mod cli;
pub mod config;
pub mod error;
pub mod learning;
pub mod model;
pub mod regret;
pub mod rng;
pub mod sim;
pub mod stationary;
pub mod stats;

pub use error::{Error, Result};
pub use model::{DerivedConstants, ModelParams};
pub use sim::{CoupledPathStats, PathStats, SimConfig, ThresholdSchedule};
pub use stationary::StationaryLaw;
