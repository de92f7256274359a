use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance shared by a solve and everything it calls.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<(Instant, u64)>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            deadline: Some((Instant::now() + Duration::from_millis(ms), ms)),
        }
    }

    pub fn from_option(ms: Option<u64>) -> Self {
        ms.map_or_else(Budget::unlimited, Budget::millis)
    }

    /// The configured allowance in milliseconds, if any.
    pub fn limit_ms(&self) -> Option<u64> {
        self.deadline.map(|(_, ms)| ms)
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some((t, ms)) if Instant::now() >= t => Err(Error::BudgetExceeded(ms)),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
