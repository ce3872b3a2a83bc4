//! # steerfair
//!
//! A desk-scale laboratory for unsupervised debiasing of transformer
//! question answering by attention-head activation steering.
//!
//! The crate is self-contained: it generates synthetic multiple-choice and
//! yes/no datasets with a controllable golden-answer-position skew, trains a
//! small decoder-only transformer on them (inducing an option-order bias),
//! then identifies per-head bias directions from unlabeled data alone and
//! steers activations away from those directions at inference time.
//!
//! Module map:
//!
//! - [`numerics`] — dense linear-algebra primitives (first principal
//!   component, sequential orthonormal basis, direction combination,
//!   norm-matched rescaling).
//! - [`model`] — the toy transformer: per-head forward hooks, analytic
//!   backpropagation, SGD training, JSON checkpoints.
//! - [`taskgen`] — deterministic dataset generation, option permutations,
//!   prompt rendering, answer-moving attacks.
//! - [`steering`] — the identify-then-steer pipeline: bias rules,
//!   demonstrations, activation collection, direction banks, head
//!   selection, steering plans.
//! - [`eval`] — order-bias metrics, hyperparameter sweeps, sample-count and
//!   transfer studies, principal-component projection exports.
//! - [`cli`] — batch front end used by the `steerfair` binary.
//!
//! Start with the runnable examples (`cargo run --release --example
//! end_to_end`) for a tour of the full pipeline.

pub mod cli;
pub mod eval;
pub mod model;
pub mod numerics;
pub mod steering;
pub mod taskgen;
pub mod util;

pub use eval::EvalReport;
pub use model::{ModelConfig, ModelWeights};
pub use steering::{DirectionBank, SteeringPlan};
pub use taskgen::{DatasetSpec, Question, TaskKind, UnlabeledQuestion};
