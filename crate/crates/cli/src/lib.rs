//! Corpus loading and verification checks for the cyclic-subgroup census
//! toolkit, with machine-readable reports.

pub mod checks;
pub mod corpus;
pub mod report;
