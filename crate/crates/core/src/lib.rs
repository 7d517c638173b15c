//! Exact enumeration of ribbon (border-strip) tilings and tableaux of simple
//! diagrams, the permutation model that encodes them, and the closed-form and
//! polynomial counting formulas they satisfy.
//!
//! A simple diagram `(w, n)` is an `n x n` square to which one length-`n`
//! column (`c`) or row (`r`) is glued per letter of the word `w`. Tilings of
//! such a diagram by ribbons of size `n` are in bijection with permutations of
//! `1..=n+k` satisfying a pair condition per letter and having no `n`-descent.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod perm;
pub mod poly;
pub mod ribbon;
pub mod shape;
pub mod verify;

pub use enumerate::EnumerationBudget;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::{IntPolynomial, QPolynomial};
pub use ribbon::{Decomposition, Tableau};
pub use shape::{Cell, Letter, SimpleDiagram, Word};
