//! Environment interface and the three built-in environments.
//!
//! Enumerable environments (chain, gridworld) expose integer state ids so
//! tabular learners and the ground-truth solver can address them directly;
//! cart-pole exposes a 4-component feature vector for linear function
//! approximation. All environments are deterministic given (seed, actions).

mod cartpole;
mod chain;
mod gridworld;
mod solver;

pub use cartpole::CartPole;
pub use chain::Chain;
pub use gridworld::Gridworld;
pub use solver::{solve_ground_truth, GroundTruth, TabularModel};

use rand::RngCore;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnvError {
    #[error("invalid action {action} for environment with {action_count} actions")]
    InvalidAction { action: usize, action_count: usize },
    #[error("step called on a finished episode; reset the environment first")]
    EpisodeFinished,
    #[error("unknown environment id {0:?}")]
    UnknownId(String),
    #[error("ground truth unavailable: {0}")]
    UnsupportedGroundTruth(String),
}

/// Observation space of an environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObservationSpace {
    /// Enumerable state space with the given number of states.
    Discrete(usize),
    /// Real feature vector of the given dimension.
    Continuous(usize),
}

/// Static description of an environment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnvSpec {
    pub observation: ObservationSpace,
    pub action_count: usize,
    pub gamma: f64,
    pub max_episode_length: usize,
    pub reward_threshold: Option<f64>,
}

impl EnvSpec {
    fn validate(self) -> Self {
        assert!(self.action_count >= 2, "action_count must be at least 2");
        assert!(
            self.gamma > 0.0 && self.gamma < 1.0,
            "gamma must lie in (0, 1), got {}",
            self.gamma
        );
        assert!(self.max_episode_length >= 1);
        self
    }

    pub fn state_count(&self) -> Option<usize> {
        match self.observation {
            ObservationSpace::Discrete(n) => Some(n),
            ObservationSpace::Continuous(_) => None,
        }
    }

    pub fn feature_dim(&self) -> Option<usize> {
        match self.observation {
            ObservationSpace::Continuous(d) => Some(d),
            ObservationSpace::Discrete(_) => None,
        }
    }
}

/// A state observation: integer id for enumerable environments, feature
/// vector otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Index(usize),
    Features(Vec<f64>),
}

impl State {
    /// State id of an enumerable environment. Panics on feature states.
    pub fn index(&self) -> usize {
        match self {
            State::Index(i) => *i,
            State::Features(_) => panic!("feature state has no index"),
        }
    }

    pub fn features(&self) -> &[f64] {
        match self {
            State::Index(_) => panic!("discrete state has no feature vector"),
            State::Features(f) => f,
        }
    }
}

/// Result of one environment step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub next_state: State,
    pub reward: f64,
    pub terminated: bool,
}

/// A single-threaded episodic MDP. `reset` begins a new episode; `step`
/// advances the current one and reports termination exactly once, after
/// which the environment must be reset before stepping again.
pub trait Environment {
    fn spec(&self) -> &EnvSpec;
    fn reset(&mut self, rng: &mut dyn RngCore) -> State;
    fn step(&mut self, action: usize, rng: &mut dyn RngCore) -> Result<StepOutcome, EnvError>;

    /// Deterministic transition model for enumerable environments, used by
    /// the ground-truth solver. `None` for feature-based environments.
    fn model(&self) -> Option<TabularModel> {
        None
    }
}

/// Environment selector as used in harness configs: `chain:<n>`,
/// `grid:<w>x<h>` or `cartpole`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum EnvId {
    Chain { n: usize },
    Grid { width: usize, height: usize },
    CartPole,
}

impl EnvId {
    pub fn make(&self) -> Box<dyn Environment> {
        match *self {
            EnvId::Chain { n } => Box::new(Chain::new(n)),
            EnvId::Grid { width, height } => Box::new(Gridworld::new(width, height)),
            EnvId::CartPole => Box::new(CartPole::new()),
        }
    }

    /// Solve for ground-truth Q-values under the given discount. Available
    /// only for enumerable environments.
    pub fn ground_truth(&self, gamma: f64) -> Result<GroundTruth, EnvError> {
        let env = self.make();
        match env.model() {
            Some(model) => Ok(solve_ground_truth(&model, gamma)),
            None => Err(EnvError::UnsupportedGroundTruth(format!(
                "{self} has no enumerable state space"
            ))),
        }
    }
}

impl FromStr for EnvId {
    type Err = EnvError;

    fn from_str(s: &str) -> Result<Self, EnvError> {
        let unknown = || EnvError::UnknownId(s.to_string());
        if s == "cartpole" {
            return Ok(EnvId::CartPole);
        }
        if let Some(n) = s.strip_prefix("chain:") {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n < 2 {
                return Err(unknown());
            }
            return Ok(EnvId::Chain { n });
        }
        if let Some(dims) = s.strip_prefix("grid:") {
            let (w, h) = dims.split_once('x').ok_or_else(unknown)?;
            let width: usize = w.parse().map_err(|_| unknown())?;
            let height: usize = h.parse().map_err(|_| unknown())?;
            if width * height < 2 {
                return Err(unknown());
            }
            return Ok(EnvId::Grid { width, height });
        }
        Err(unknown())
    }
}

impl fmt::Display for EnvId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvId::Chain { n } => write!(f, "chain:{n}"),
            EnvId::Grid { width, height } => write!(f, "grid:{width}x{height}"),
            EnvId::CartPole => write!(f, "cartpole"),
        }
    }
}

impl TryFrom<String> for EnvId {
    type Error = EnvError;
    fn try_from(s: String) -> Result<Self, EnvError> {
        s.parse()
    }
}

impl From<EnvId> for String {
    fn from(id: EnvId) -> String {
        id.to_string()
    }
}
