//! Wall-clock guard for long enumerations.
//!
//! `SPECNORM_BUDGET_MS` caps any single enumeration; callers poll
//! [`Deadline::check`] every few thousand iterations. Without the variable
//! the deadline is unlimited and checks are free.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

pub const BUDGET_ENV_VAR: &str = "SPECNORM_BUDGET_MS";

#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    deadline: Option<Instant>,
}

impl Deadline {
    pub fn unlimited() -> Self {
        Deadline { deadline: None }
    }

    pub fn after_ms(ms: u64) -> Self {
        Deadline {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV_VAR) {
            Ok(value) => {
                let ms: u64 = value.parse().map_err(|_| {
                    Error::InvalidConfig(format!(
                        "{BUDGET_ENV_VAR} must be a millisecond count, got {value:?}"
                    ))
                })?;
                Ok(Deadline::after_ms(ms))
            }
            Err(_) => Ok(Deadline::unlimited()),
        }
    }

    pub fn check(&self, what: &str) -> Result<()> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(Error::BudgetExceeded {
                    what: what.into(),
                    detail: format!("wall-clock budget {BUDGET_ENV_VAR} exhausted"),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlimited_never_trips() {
        let d = Deadline::unlimited();
        for _ in 0..10 {
            assert!(d.check("loop").is_ok());
        }
    }

    #[test]
    fn elapsed_deadline_trips() {
        let d = Deadline::after_ms(0);
        std::thread::sleep(Duration::from_millis(2));
        assert!(matches!(d.check("loop"), Err(Error::BudgetExceeded { .. })));
    }
}
