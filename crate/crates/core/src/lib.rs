//! Exact computations with Schur complexes, two-sided complexes and the
//! linear strands they realize.

pub mod cli;
pub mod exactla;
pub mod general_linear;
pub mod lab;
pub mod partitions;
pub mod periplectic;
pub mod report;
pub mod suite;
pub mod superrep;
pub mod symfunc;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    pub mod partitions {}
    #[doc = include_str!("../../../book/src/exact_linear_algebra.md")]
    pub mod exact_linear_algebra {}
    #[doc = include_str!("../../../book/src/superspaces.md")]
    pub mod superspaces {}
    #[doc = include_str!("../../../book/src/two_sided_complexes.md")]
    pub mod two_sided_complexes {}
    #[doc = include_str!("../../../book/src/periplectic.md")]
    pub mod periplectic {}
    #[doc = include_str!("../../../book/src/general_linear.md")]
    pub mod general_linear {}
    #[doc = include_str!("../../../book/src/command_line.md")]
    pub mod command_line {}
}
