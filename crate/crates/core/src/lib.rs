//! Plane bipolar orientations, plane posets and transversal structures,
//! encoded by tandem walks in the quadrant.

pub mod asymptotics;
pub mod cli;
pub mod counting;
pub mod kmsw;
pub mod maps;
pub mod permutations;
pub mod verify;
pub mod walks;
