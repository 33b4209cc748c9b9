/// Upper bound on the number of elementary steps an enumeration may take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard(pub u64);

impl Guard {
    pub const DEFAULT: Guard = Guard(10_000_000);
    pub const ENV_VAR: &'static str = "CHORN_GUARD";

    /// Reads `CHORN_GUARD`, falling back to [`Guard::DEFAULT`] when unset or unparsable.
    pub fn from_env() -> Guard {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Guard)
            .unwrap_or(Self::DEFAULT)
    }

    pub fn check(self, what: &'static str, estimate: u128) -> crate::Result<()> {
        if estimate > self.0 as u128 {
            Err(crate::Error::GuardExceeded { what, estimate, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::DEFAULT
    }
}
