//! Enumeration caps shared by every exhaustive construction.

use crate::error::{Cap, Error, Result};

pub const DEFAULT_MAX_FACES: usize = 100_000_000;
pub const DEFAULT_MAX_FLATS: usize = 5_000_000;
/// Default basis cap for full ear-decomposition construction.
pub const DEFAULT_MAX_BASES: usize = 200;

pub const ENV_MAX_FACES: &str = "MATROID_EARS_MAX_FACES";
pub const ENV_MAX_FLATS: &str = "MATROID_EARS_MAX_FLATS";
pub const ENV_MAX_BASES: &str = "MATROID_EARS_MAX_BASES";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_faces: usize,
    pub max_flats: usize,
    pub max_bases: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_faces: DEFAULT_MAX_FACES,
            max_flats: DEFAULT_MAX_FLATS,
            max_bases: DEFAULT_MAX_BASES,
        }
    }
}

impl Limits {
    /// Defaults, overridden by the `MATROID_EARS_MAX_*` environment variables when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        for (var, slot) in [
            (ENV_MAX_FACES, &mut limits.max_faces),
            (ENV_MAX_FLATS, &mut limits.max_flats),
            (ENV_MAX_BASES, &mut limits.max_bases),
        ] {
            if let Ok(raw) = std::env::var(var) {
                *slot = raw
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{var}={raw:?} is not a count")))?;
            }
        }
        Ok(limits)
    }

    pub fn unlimited() -> Self {
        Limits {
            max_faces: usize::MAX,
            max_flats: usize::MAX,
            max_bases: usize::MAX,
        }
    }

    pub(crate) fn check(&self, cap: Cap, count: usize) -> Result<()> {
        let limit = match cap {
            Cap::Faces => self.max_faces,
            Cap::Flats => self.max_flats,
            Cap::Bases => self.max_bases,
        };
        if count > limit {
            Err(Error::CapExceeded { cap, limit })
        } else {
            Ok(())
        }
    }
}
