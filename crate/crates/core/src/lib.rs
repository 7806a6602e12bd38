pub mod bitset;
pub mod config;
pub mod enumerated;
pub mod error;
pub mod group;
pub mod perm;

pub use bitset::Bitset;
pub use config::{limits, Limits};
pub use enumerated::ElementTable;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
pub mod constructors;
pub mod subgroups;
pub mod cyclotomic;
pub mod characters;
pub mod growth;

pub use constructors::GroupSpec;
pub use subgroups::{SubgroupClass, SubgroupLattice};
pub mod analysis;
pub mod verify;
pub mod cli;
