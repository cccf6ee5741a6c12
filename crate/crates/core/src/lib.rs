//! Finite-group TQFT on cospans of finitely presented groupoids.
//!
//! A cospan `X -> M <- Y` of presentations stands in for a homotopy
//! cobordism between the fundamental groupoids of `X` and `Y`. Given a finite
//! group `G`, [`cospan::fg_matrix`] evaluates it as an exact rational matrix
//! between the spaces spanned by natural-isomorphism classes of homs into
//! `G`. Composition of cospans is by pushout, and the evaluation is
//! functorial and monoidal.

pub mod builders;
pub mod cospan;
pub mod error;
pub mod group;
pub mod homs;
pub mod io;
pub mod matrix;
pub mod presentation;
pub mod random;
pub mod unionfind;
pub mod verify;

pub use cospan::{bbfg, bfg, compose, fg_matrix, identity_cospan, object_space, tensor, Cospan};
pub use error::{CospanError, FormatError, GroupError, HomError, PresentationError};
pub use group::{FiniteGroup, GroupDescriptor, GroupElement};
pub use homs::{
    count_homs, enumerate_homs, g_consistency_check, is_naturally_isomorphic, nat_classes, theta_extension, EnumConfig,
    GroupoidHom, NatClass, NatClasses,
};
pub use matrix::{Scalar, TqftMatrix};
pub use presentation::{
    add_basepoint, apply_map, compose_words, coproduct, invert_word, pushout, GenId, GroupoidPresentation, Letter,
    ObjectId, PresentationMap, Word,
};
