//! Exact cyclic-subgroup censuses of finite p-groups.
//!
//! Groups are written as finite presentations ([`presentation`]), realised
//! as permutation groups by Todd–Coxeter coset enumeration ([`coset`]), and
//! examined element by element ([`group`], [`census`]). [`catalog`] builds
//! the standard families and evaluates their closed-form counts and bounds.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod census;
pub mod coset;
pub mod group;
pub mod presentation;
pub mod word;

pub use arith::Rational;
pub use catalog::{Family, FamilySpec};
pub use census::CyclicCensus;
pub use coset::{coset_enumerate, to_permutation_group, CosetTable};
pub use group::{direct_product, Group, Perm, Subgroup};
pub use presentation::{parse_presentation, Presentation};
pub use word::Word;
