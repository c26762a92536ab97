//! Deterministic gridworld: start at the top-left cell, goal reward 1 at the
//! bottom-right cell, moves off the grid stay in place.

use super::{EnvError, EnvSpec, Environment, ObservationSpace, State, StepOutcome, TabularModel};
use rand::RngCore;

pub const UP: usize = 0;
pub const DOWN: usize = 1;
pub const LEFT: usize = 2;
pub const RIGHT: usize = 3;

pub struct Gridworld {
    spec: EnvSpec,
    width: usize,
    height: usize,
    state: usize,
    steps: usize,
    finished: bool,
}

impl Gridworld {
    pub fn new(width: usize, height: usize) -> Self {
        Self::with_limits(width, height, 16 * width * height, Some(0.8))
    }

    pub fn with_limits(
        width: usize,
        height: usize,
        max_episode_length: usize,
        reward_threshold: Option<f64>,
    ) -> Self {
        assert!(width * height >= 2, "gridworld needs at least two cells");
        let spec = EnvSpec {
            observation: ObservationSpace::Discrete(width * height),
            action_count: 4,
            gamma: 0.99,
            max_episode_length,
            reward_threshold,
        }
        .validate();
        Self { spec, width, height, state: 0, steps: 0, finished: true }
    }

    fn goal(&self) -> usize {
        self.width * self.height - 1
    }

    fn transition(&self, state: usize, action: usize) -> (usize, f64, bool) {
        debug_assert!(state != self.goal());
        let (x, y) = (state % self.width, state / self.width);
        let (nx, ny) = match action {
            UP => (x, y.saturating_sub(1)),
            DOWN => (x, (y + 1).min(self.height - 1)),
            LEFT => (x.saturating_sub(1), y),
            RIGHT => ((x + 1).min(self.width - 1), y),
            _ => unreachable!("validated by step"),
        };
        let next = ny * self.width + nx;
        if next == self.goal() {
            (next, 1.0, true)
        } else {
            (next, 0.0, false)
        }
    }
}

impl Environment for Gridworld {
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
        let n = self.width * self.height;
        let mut model = TabularModel::new(n, 4);
        for s in 0..n {
            if s == self.goal() {
                continue;
            }
            for a in 0..4 {
                let (next, reward, done) = self.transition(s, a);
                model.set(s, a, next, reward, done);
            }
        }
        model.mark_terminal(self.goal());
        Some(model)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_start_at_origin() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut env = Gridworld::new(5, 5);
        assert_eq!(env.reset(&mut rng), State::Index(0));
    }

    #[test]
    fn off_grid_moves_stay_in_place() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut env = Gridworld::new(3, 3);
        env.reset(&mut rng);
        let out = env.step(UP, &mut rng).unwrap();
        assert_eq!(out.next_state, State::Index(0));
        let out = env.step(LEFT, &mut rng).unwrap();
        assert_eq!(out.next_state, State::Index(0));
    }

    #[test]
    fn reaching_goal_terminates_with_reward() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut env = Gridworld::new(2, 2);
        env.reset(&mut rng);
        let out = env.step(RIGHT, &mut rng).unwrap();
        assert!(!out.terminated);
        let out = env.step(DOWN, &mut rng).unwrap();
        assert_eq!(out.next_state, State::Index(3));
        assert_eq!(out.reward, 1.0);
        assert!(out.terminated);
    }
}
