pub mod albanese;
pub mod cli;
pub mod cover;
#[cfg(test)]
mod fixtures;
pub mod groups;
pub mod invariants;
pub mod lattice;
pub mod ramification;
