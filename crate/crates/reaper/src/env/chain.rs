//! Deterministic corridor of `n` states with a single terminal reward.

use super::{EnvError, EnvSpec, Environment, ObservationSpace, State, StepOutcome, TabularModel};
use rand::RngCore;

pub const LEFT: usize = 0;
pub const RIGHT: usize = 1;

/// States `0..n-1`, start at 0, state `n-1` terminal. Moving RIGHT into the
/// terminal state yields reward 1; there are no intermediary rewards. LEFT
/// at state 0 stays in place.
pub struct Chain {
    spec: EnvSpec,
    n: usize,
    state: usize,
    steps: usize,
    finished: bool,
}

impl Chain {
    pub fn new(n: usize) -> Self {
        Self::with_limits(n, 50 * n, Some(0.9))
    }

    pub fn with_limits(n: usize, max_episode_length: usize, reward_threshold: Option<f64>) -> Self {
        assert!(n >= 2, "chain needs at least two states");
        let spec = EnvSpec {
            observation: ObservationSpace::Discrete(n),
            action_count: 2,
            gamma: 0.99,
            max_episode_length,
            reward_threshold,
        }
        .validate();
        Self { spec, n, state: 0, steps: 0, finished: true }
    }

    fn transition(&self, state: usize, action: usize) -> (usize, f64, bool) {
        debug_assert!(state < self.n - 1, "terminal state has no transitions");
        match action {
            LEFT => (state.saturating_sub(1), 0.0, false),
            RIGHT => {
                let next = state + 1;
                if next == self.n - 1 {
                    (next, 1.0, true)
                } else {
                    (next, 0.0, false)
                }
            }
            _ => unreachable!("validated by step"),
        }
    }
}

impl Environment for Chain {
    fn spec(&self) -> &EnvSpec {
        &self.spec
    }

    fn reset(&mut self, _rng: &mut dyn RngCore) -> State {
        self.state = 0;
        self.steps = 0;
        self.finished = false;
        State::Index(0)
    }

    fn step(&mut self, action: usize, _rng: &mut dyn RngCore) -> Result<StepOutcome, EnvError> {
        if self.finished {
            return Err(EnvError::EpisodeFinished);
        }
        if action >= self.spec.action_count {
            return Err(EnvError::InvalidAction { action, action_count: self.spec.action_count });
        }
        let (next, reward, reached_goal) = self.transition(self.state, action);
        self.state = next;
        self.steps += 1;
        let terminated = reached_goal || self.steps >= self.spec.max_episode_length;
        self.finished = terminated;
        Ok(StepOutcome { next_state: State::Index(next), reward, terminated })
    }

    fn model(&self) -> Option<TabularModel> {
        let mut model = TabularModel::new(self.n, 2);
        for s in 0..self.n - 1 {
            for a in 0..2 {
                let (next, reward, done) = self.transition(s, a);
                model.set(s, a, next, reward, done);
            }
        }
        model.mark_terminal(self.n - 1);
        Some(model)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn starts_at_leftmost_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut env = Chain::new(10);
        assert_eq!(env.reset(&mut rng), State::Index(0));
    }

    #[test]
    fn terminal_reward_at_chain_end() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut env = Chain::new(10);
        env.reset(&mut rng);
        env.state = 8;
        let out = env.step(RIGHT, &mut rng).unwrap();
        assert_eq!(out.next_state, State::Index(9));
        assert_eq!(out.reward, 1.0);
        assert!(out.terminated);
    }

    #[test]
    fn no_intermediary_rewards() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut env = Chain::new(10);
        env.reset(&mut rng);
        env.state = 3;
        let out = env.step(LEFT, &mut rng).unwrap();
        assert_eq!(out.next_state, State::Index(2));
        assert_eq!(out.reward, 0.0);
        assert!(!out.terminated);
    }

    #[test]
    fn invalid_action_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut env = Chain::new(4);
        env.reset(&mut rng);
        assert!(matches!(
            env.step(2, &mut rng),
            Err(EnvError::InvalidAction { action: 2, action_count: 2 })
        ));
    }

    #[test]
    fn episode_truncates_at_max_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut env = Chain::with_limits(10, 5, None);
        env.reset(&mut rng);
        for i in 0..5 {
            let out = env.step(LEFT, &mut rng).unwrap();
            assert_eq!(out.terminated, i == 4);
        }
        assert!(matches!(env.step(LEFT, &mut rng), Err(EnvError::EpisodeFinished)));
    }
}
