pub mod characters;
pub mod conjectures;
pub mod constants;
pub mod engine;
pub mod error;
pub mod partition;
pub mod poly;
pub mod symfunc;
pub mod tableau;

pub use engine::{Engine, Limits};
pub use error::{Error, Result};
pub use partition::{Composition, Partition, SkewShape};
