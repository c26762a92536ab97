//! Reliability-adjusted prioritized experience replay.
//!
//! This crate implements three transition-sampling strategies for off-policy
//! Q-learning — uniform, proportional PER, and reliability-adjusted PER
//! (ReaPER) — together with the machinery needed to study them:
//!
//! * [`env`] — exactly solvable environments (chain, gridworld) plus the
//!   classic cart-pole balancing task, and a value-iteration solver for
//!   ground-truth Q-values.
//! * [`replay`] — a fixed-capacity replay buffer with a sum tree for
//!   log-time proportional sampling and per-episode TD-error bookkeeping.
//! * [`priority`] — reliability scores, the sampling criterion, priority
//!   normalization and importance-sampling weights.
//! * [`learner`] — tabular Q-learning and linear double-DQN training loops.
//! * [`stylized`] — greedy single-episode transition selection benchmarked
//!   against an oracle under three target-reliability conditions.
//! * [`theory`] — numeric verification of the error-decomposition,
//!   bias-bound, convergence-hierarchy and variance-reduction results.
//! * [`harness`] — seeded multi-run campaigns with CSV and SVG reports.

pub mod env;
pub mod harness;
pub mod learner;
pub mod priority;
pub mod replay;
pub mod stats;
pub mod stylized;
pub mod theory;

pub use env::{EnvId, Environment, EnvSpec, GroundTruth, State, StepOutcome};
pub use learner::{RunLog, TrainConfig};
pub use priority::{PrioritizerConfig, Strategy};
pub use replay::ReplayBuffer;
