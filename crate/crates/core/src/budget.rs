//! Node and wall-clock limits shared by the exhaustive searches.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

/// Result of a bounded exhaustive search.
///
/// `NotFound` is a proof of non-existence; `BudgetExceeded` proves nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum Outcome<T> {
    Found(T),
    NotFound,
    BudgetExceeded,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_not_found(&self) -> bool {
        matches!(self, Outcome::NotFound)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::NotFound => Outcome::NotFound,
            Outcome::BudgetExceeded => Outcome::BudgetExceeded,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        nodes: None,
        time: None,
    };

    pub fn nodes(n: u64) -> Self {
        Budget {
            nodes: Some(n),
            time: None,
        }
    }

    pub fn meter(&self) -> Meter {
        Meter {
            limit: self.nodes,
            deadline: self.time.map(|t| Instant::now() + t),
            used: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }
}

/// Thread-safe counter against a [`Budget`].
#[derive(Debug)]
pub struct Meter {
    limit: Option<u64>,
    deadline: Option<Instant>,
    used: AtomicU64,
    tripped: AtomicBool,
}

impl Meter {
    /// Charges `n` nodes; returns false once the budget is exhausted.
    #[inline]
    pub fn charge(&self, n: u64) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        let over_nodes = self.limit.is_some_and(|l| used > l);
        // the clock is only consulted every 4096 nodes
        let over_time = self.deadline.is_some_and(|d| {
            (used & 0xfff) < n && Instant::now() >= d
        });
        if over_nodes || over_time {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn exceeded(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_trips() {
        let m = Budget::nodes(10).meter();
        assert!(m.charge(10));
        assert!(!m.charge(1));
        assert!(m.exceeded());
        assert!(!m.charge(0));
    }

    #[test]
    fn unlimited_never_trips() {
        let m = Budget::UNLIMITED.meter();
        for _ in 0..10_000 {
            assert!(m.charge(1000));
        }
    }
}
