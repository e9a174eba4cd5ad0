//! Encoders from the (5,2) block normal form into the four derived normal
//! forms, plus membership validators for the sentential-form families those
//! forms stay inside.

mod encode;
mod family;

pub use encode::{encode, encode_gnf32, encode_gnf42, encode_mm, EncodeError};
pub use family::{family_member, Family, FamilyError, FamilyValidator};
