//! Truth evaluation over possible-world structures and belief pairs.

mod belief;
mod eval;
mod worlds;

pub use belief::{BeliefPair, BeliefPairDisplay};
pub(crate) use eval::extension_unchecked;
pub use eval::{
    eval, eval_modal_atom, eval_pws, extension, pws_extension, pws_models, theory_contains,
    Extension,
};
pub use worlds::{Interpretation, Limits, WorldSet, HARD_MAX_EXPLICIT_ATOMS};
