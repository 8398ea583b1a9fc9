//! Homogeneous forms: dense binary forms, sparse forms in any number of
//! variables, linear forms and points, the apolar action, the
//! Bombieri–Weyl product and the orthogonal group action.

mod binary;
mod json;
mod nform;
mod ortho;
mod parse;
mod points;
pub mod random;
mod univariate;

pub use binary::{falling as falling_weight, BForm};
pub use json::{form_from_json, form_to_json, FormJson, TermJson};
pub use nform::{alpha_factorial, exponents, multinomial, NForm};
pub use ortho::{ortho_act, ortho_act_point, random_ortho, OrthoMatrix};
pub use parse::{parse_form, parse_form_in};
pub use points::{fmt_complex, LinForm, NumPoint, ProjPoint};
pub use univariate::UPoly;

use crate::error::Result;
use crate::exactnum::GaussRat;

/// `G(∂) ∘ F`
pub fn apolar_apply(g: &NForm, f: &NForm) -> Result<NForm> {
    g.apolar_apply(f)
}

/// Bombieri–Weyl product; `apolar_apply(G, F) = d! · bw_inner(F, G)`.
pub fn bw_inner(f: &NForm, g: &NForm) -> Result<GaussRat> {
    f.bw_inner(g)
}
