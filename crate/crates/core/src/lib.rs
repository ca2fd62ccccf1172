//! Generalized relational topic models over document networks.
//!
//! A relational topic model couples an LDA-style admixture over document
//! words with a discriminative classifier over inter-document links. This
//! crate implements the generalized family with a full (or diagonal)
//! topic-interaction weight matrix, trained by collapsed Gibbs sampling
//! with exact data augmentation for two loss functions:
//!
//! - logistic log-loss, augmented with Polya-Gamma variables;
//! - max-margin hinge loss, augmented with generalized inverse Gaussian
//!   variables.
//!
//! The crate covers the full pipeline: LINQS-format corpus ingestion
//! ([`corpus`]), the random-variate generators the chains need
//! ([`samplers`]), model state ([`state`]), the two Gibbs engines and the
//! training driver ([`gibbs`]), and held-out prediction plus the link
//! rank / word rank / AUC evaluation protocol ([`eval`]).
//!
//! All floating-point state is generic over [`Real`] (`f32` or `f64`);
//! counts are integral. The [`Scalar`] alias fixes the precision used by
//! the CLI and the serialized artifacts.

pub mod corpus;
pub mod eval;
pub mod gibbs;
pub mod real;
pub mod samplers;
pub mod state;
pub mod synth;

pub use real::Real;

/// Scalar type used by the CLI and all serialized artifacts.
pub type Scalar = f64;

/// [`state::Hyperparams`] at the default scalar.
pub type Hyperparams = state::Hyperparams<Scalar>;
/// [`state::PosteriorEstimate`] at the default scalar.
pub type PosteriorEstimate = state::PosteriorEstimate<Scalar>;
/// [`gibbs::TrainConfig`] at the default scalar.
pub type TrainConfig = gibbs::TrainConfig<Scalar>;
/// [`gibbs::TrainedModel`] at the default scalar.
pub type TrainedModel = gibbs::TrainedModel<Scalar>;
