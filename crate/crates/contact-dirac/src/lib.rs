//! Exact verification engine for metric connections, spinors and Dirac
//! operators on metric contact manifolds presented by invariant frames.

#![allow(clippy::needless_range_loop)]

pub mod connection;
pub mod contact;
pub mod fixture;
pub mod frame;
pub mod hermitian;
pub mod linalg;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod spinor;

pub use frame::{EndoField, Form, FrameSpec, Tensor3};
pub use linalg::Mat;
pub use scalar::Scalar;
