pub mod bsgs;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod fingerprint;
pub mod flags;
pub mod gf;
pub mod gl52;
pub mod group;
pub mod hall;
pub mod hom;
pub mod io;
pub mod perm;
pub mod reduction;
pub mod report;
pub mod search;
pub mod selector;
pub mod structure;
pub mod suites;
pub mod table;
pub mod zoo;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Perm;
