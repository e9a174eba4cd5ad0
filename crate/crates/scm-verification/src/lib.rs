//! Bounded verification tooling: the naive reference oracle, fixture
//! grammars, bounded-equivalence checks, and golden-trace/stuck-form suites.

pub mod caps;
pub mod equiv;
pub mod fixtures;
pub mod reference;

pub use equiv::{
    assert_bounded_equal, assert_bounded_equal_calibrated, enumerate_any, EquivalenceReport,
};
pub use reference::{naive_apply, reference_enumerate};
