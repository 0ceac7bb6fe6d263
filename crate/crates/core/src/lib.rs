//! Pfister forms, valuations on small field towers, local and global
//! isotropy deciders, the membership predicate they define, and the
//! first-order formula toolkit around it.

pub mod exactalg;

pub use exactalg::{Field, FieldDescriptor, FieldElement};
