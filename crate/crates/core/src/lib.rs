//! Exact computation in free Zinbiel algebras.
//!
//! Elements are rational combinations of left-normed words; on top of the
//! Zinbiel and shuffle products the crate provides the commutator (Tortkara)
//! and anticommutator structures, the Lie and Jordan membership criteria,
//! the skew-right-commutative basis of the free special Tortkara algebra,
//! free-Tortkara consequence spans, Cohn-type ideal computations, and the
//! integration-operator algebras on truncated polynomials.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use zinbiel_core::criteria::{dim_st, is_lie};
//! use zinbiel_core::{commutator, gen, zin_mul, MultiDegree, ZinElement};
//!
//! let [x, y, z] = [1, 2, 3].map(|i| ZinElement::generator(gen(i)));
//! assert!(is_lie(&commutator(&commutator(&x, &y), &z)));
//! assert!(!is_lie(&zin_mul(&x, &y)));
//! assert_eq!(dim_st(&MultiDegree::from_counts(&[1, 1, 1])).unwrap(), 3);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analytic;
pub mod criteria;
pub mod element;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod product;
pub mod report;
pub mod scalar;
pub mod speciality;
pub mod tortkara;
pub mod word;

pub use element::{Grading, ZinElement};
pub use error::{Error, Result};
pub use maps::{bar, dynkin, p_map};
pub use product::{anticommutator, commutator, shuffle_mul, shuffle_words, word_zinbiel_mul, zin_mul};
pub use scalar::Scalar;
pub use word::{gen, Alphabet, GeneratorId, MultiDegree, Word};
