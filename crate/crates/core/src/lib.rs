//! Exact calculator for the tensor category of semifinite degree-0 vector
//! bundles on an elliptic curve over an algebraically closed field of
//! characteristic zero.
//!
//! - [`picard`]: the group `Pic^0` of degree-0 line-bundle classes.
//! - [`bundle`]: Krull–Schmidt normal forms, tensor/dual/det, `Hom` and `Γ`
//!   dimensions, and the unipotent/finite/semifinite classifiers.
//! - [`oracle`]: an independent model of the same category as
//!   representations of `μ_m × U`, with Jordan types computed by exact rank
//!   computations.
//! - [`kring`]: the representation ring `K(X)`, summand closures `S(E)` and
//!   Tannakian group labels.
//! - [`expr`], [`command`]: the expression grammar and verb dispatch used by
//!   the `ellbundle` binary.

pub mod bundle;
pub mod command;
pub mod error;
pub mod expr;
pub mod kring;
pub mod linalg;
pub mod oracle;
pub mod picard;

pub use bundle::{end_dim_projective_check, BundleObject, Indecomposable};
pub use error::{Error, Result};
pub use expr::{parse, parse_bundle, print_canonical, Expr, ExprError};
pub use kring::{
    closed_form_s, krull_dim_class, summand_closure, tannakian_label, ClosedForm, RingElement,
    SummandClosure, TannakianLabel,
};
pub use oracle::{jordan_tensor, phi_transport, product_tensor, Partition, ProductObject};
pub use picard::{LbOrder, LineBundleClass};
