//! Purple-edge Ramsey colourings: graph primitives, (s,t)-free colourings,
//! constructions, graph catalogs and exact search.

pub mod graph;
pub mod colouring;
pub mod constructions;
pub mod catalog;
pub mod search;
