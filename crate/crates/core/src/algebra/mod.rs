//! The diagram categories P(n), B(n) and BG(n): exact linear combinations
//! of diagrams with vertical composition and tensor product.

mod compose;
mod context;
pub mod jellyfish;
mod sum;

pub use compose::{compose, concatenate_count, identity_sum, tensor, Side, TensorLabels};
pub use context::{CategoryContext, ContextKind};
pub use jellyfish::{rule1_normalize, rule2_expand, JellyfishState, LegEnd, Rule1Outcome, Rule1Variant, Rule2Term};
pub use sum::{power_of, scalar, DiagramSum, Scalar};
