//! Bayes-theorem tests of the realism hypothesis.
//!
//! Realism (joint Kolmogorov probabilities for every observable at once)
//! implies two relations between conditional probabilities of three events
//! `S1`, `S2`, `S3`:
//!
//! ```text
//! static:   w(S1|S3) w(S2|S1∩S3) = w(S2|S3) w(S1|S2∩S3)
//! dynamic:  w(S1(t0)|S3) w(S2(t)|S1∩S3) <= w(S2(t)|S3)
//! ```
//!
//! Quantum mechanics evaluates the conditional probabilities with the
//! von Neumann (Lüders) rule and breaks both. This crate computes them for
//! two systems:
//!
//! - [`spin`]: an e⁺e⁻ singlet pair, optionally precessing in a constant
//!   magnetic field along `y`;
//! - [`mesons`]: flavour-entangled neutral pseudoscalar meson pairs
//!   (K, D, B_s) with mixing and CP violation.
//!
//! [`qlinalg`] and [`conditional`] hold the small dense linear algebra and
//! the probability rules they share, [`scan`] finds violation intervals on
//! sampled curves, [`config`] loads meson parameter files and [`cli`] is the
//! command-line front end used by the `bayes-realism` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod cli;
pub mod conditional;
pub mod config;
mod error;
pub mod mesons;
pub mod qlinalg;
pub mod scan;
pub mod spin;

pub use error::{Error, Result};
