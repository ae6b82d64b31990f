//! Resource bounds and the shared character-table store.

use std::path::PathBuf;
use std::sync::Arc;

use crate::characters::{CharacterTable, TableStore, DEFAULT_TABLE_MAX_N};
use crate::error::Result;
use crate::partition::DEFAULT_ENUMERATION_CAP;
use crate::tableau::DEFAULT_TABLEAU_CAP;

/// Bounds that turn exponential blowups into capacity errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` with a full character table.
    pub max_n: usize,
    /// Number of variables the plethysm engine may use, hence the largest
    /// `ℓ(λ)` it can resolve.
    pub var_budget: usize,
    /// Largest `n` for partition enumeration.
    pub enumeration_cap: usize,
    /// Largest number of tableaux materialized by one call.
    pub tableau_cap: usize,
    /// Largest `n` for the polynomial Kronecker oracle.
    pub schur_weyl_max_n: usize,
    /// Kostka numbers are counted by enumeration up to this size.
    pub kostka_enumeration_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_TABLE_MAX_N,
            var_budget: 4,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            tableau_cap: DEFAULT_TABLEAU_CAP,
            schur_weyl_max_n: 6,
            kostka_enumeration_max: 12,
        }
    }
}

/// Entry point for computations that need character tables or configured
/// bounds. Cheap to share across threads.
pub struct Engine {
    limits: Limits,
    tables: TableStore,
}

impl Engine {
    pub fn new(limits: Limits, cache_dir: Option<PathBuf>) -> Self {
        let tables = TableStore::new(cache_dir, limits.max_n);
        Engine { limits, tables }
    }

    /// No disk cache, default limits.
    pub fn in_memory() -> Self {
        Self::new(Limits::default(), None)
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn tables(&self) -> &TableStore {
        &self.tables
    }

    pub fn character_table(&self, n: usize) -> Result<Arc<CharacterTable>> {
        self.tables.get(n)
    }
}

impl Default for Engine {
    fn default() -> Self {
        Self::in_memory()
    }
}
