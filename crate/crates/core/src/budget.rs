use std::time::Duration;

/// Limits for an exact search. Absent fields mean unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub const UNBOUNDED: SearchBudget = SearchBudget {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

// `Instant::now` panics on wasm32-unknown-unknown, so the clock is optional.
#[cfg(not(target_arch = "wasm32"))]
#[derive(Clone, Copy)]
struct Clock(std::time::Instant);

#[cfg(not(target_arch = "wasm32"))]
impl Clock {
    fn start() -> Self {
        Clock(std::time::Instant::now())
    }

    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}

#[cfg(target_arch = "wasm32")]
#[derive(Clone, Copy)]
struct Clock;

#[cfg(target_arch = "wasm32")]
impl Clock {
    fn start() -> Self {
        Clock
    }

    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

/// Node counter shared by the searches of one solver call.
pub(crate) struct Meter {
    budget: SearchBudget,
    clock: Clock,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter {
            budget,
            clock: Clock::start(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one search node. Returns `false` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.exhausted = true;
                return false;
            }
        }
        if let Some(max) = self.budget.max_time {
            if self.nodes.is_multiple_of(1024) && self.clock.elapsed() > max {
                self.exhausted = true;
                return false;
            }
        }
        true
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.clock.elapsed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_budget_trips() {
        let mut m = Meter::new(SearchBudget::nodes(3));
        assert!(m.tick() && m.tick() && m.tick());
        assert!(!m.tick());
        assert!(m.exhausted());
        assert!(!m.tick());
    }

    #[test]
    fn unbounded_never_trips() {
        let mut m = Meter::new(SearchBudget::UNBOUNDED);
        assert!((0..10_000).all(|_| m.tick()));
        assert_eq!(m.nodes(), 10_000);
    }
}
