//! Compiles every chapter of the guide, and the README, as doc-tests.

#[cfg(doctest)]
mod chapters {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/monoid.md")]
    pub mod monoid {}
    #[doc = include_str!("../../../book/src/partial-group.md")]
    pub mod partial_group {}
    #[doc = include_str!("../../../book/src/poset.md")]
    pub mod poset {}
    #[doc = include_str!("../../../book/src/evolution-algebra.md")]
    pub mod evolution_algebra {}
    #[doc = include_str!("../../../book/src/realization.md")]
    pub mod realization {}
    #[doc = include_str!("../../../book/src/claims.md")]
    pub mod claims {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
