//! File formats, parallel enumeration, verification sweeps and the command
//! line for the `strong-alliance` crate.

pub mod cli;
pub mod corpus;
pub mod edge_list;
pub mod graph6;
pub mod json;
pub mod parallel;
pub mod search;
pub mod verify;
