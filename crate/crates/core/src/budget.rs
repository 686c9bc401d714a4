//! Cooperative time limits for long Gröbner computations.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// A wall-clock deadline checked between S-pair reductions.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { deadline: None }
    }

    pub fn with_timeout(limit: Duration) -> Budget {
        Budget {
            deadline: Some(Instant::now() + limit),
        }
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

/// True when `REPHOM_VERBOSE=1` is set.
pub(crate) fn verbose() -> bool {
    static FLAG: std::sync::OnceLock<bool> = std::sync::OnceLock::new();
    *FLAG.get_or_init(|| {
        std::env::var("REPHOM_VERBOSE")
            .map(|v| v == "1")
            .unwrap_or(false)
    })
}
