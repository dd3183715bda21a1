//! Multi-sided fair recommendation toolkit.
//!
//! A platform recommends items to arriving users and wants to maximize
//! expected revenue while guaranteeing every item and every user type a
//! configurable fraction of the outcome it would receive under its own
//! within-group fair solution. This crate provides:
//!
//! - the problem instance model, outcome functions and user utility models
//!   ([`instance`]),
//! - a dense, deterministic simplex solver and a brute-force Hoffman
//!   constant ([`lp`]),
//! - single-sided fair solutions via social-welfare LPs ([`fair`]),
//! - the revenue-maximizing fair recommendation LP, its relaxation, and
//!   price-of-fairness analysis ([`fair_opt`]),
//! - an online learning loop that interleaves relaxed solves, randomized
//!   exploration and inverse-propensity estimation ([`online`]),
//! - an assortment extension under the MNL choice model ([`assortment`]),
//! - reference baseline policies ([`baselines`]), and
//! - a reproducible experiment harness with a CLI ([`harness`]).

pub mod assortment;
pub mod baselines;
mod error;
pub mod fair;
pub mod fair_opt;
pub mod harness;
pub mod instance;
pub mod lp;
pub mod online;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
