pub mod aut;
pub mod claims;
pub mod corpus;
pub mod error;
pub mod evolution;
pub mod field;
pub mod graph;
pub mod monoid;
pub mod partial_group;
pub mod perm;
pub mod poset;
pub mod realize;
pub mod report;
