//! Exact cohomology, regularity and Tate-resolution shapes for line bundles
//! `O_X(m)` on `X = P^{l_1} x ... x P^{l_r}`, embedded in `P^N` by the
//! Segre-Veronese map of `O_X(d_1, ..., d_r)`.
//!
//! Every closed form in [`regularity`] and [`tate`] has a brute-force
//! counterpart built on [`cohomology`], and [`verify`] runs them against each
//! other over parameter grids.

#![allow(clippy::int_plus_one)]

pub mod cli;
pub mod cohomology;
mod combinat;
mod decimal;
pub mod embedding;
pub mod error;
pub mod regularity;
pub mod tate;
pub mod verify;

pub use cohomology::{
    cohomology_degree, cohomology_x, euler_characteristic, factor_cohomology, serre_dual,
    CohomologyProfile,
};
pub use combinat::{binom, binomial_polynomial};
pub use embedding::{twist, Caps, EmbeddingData, MultiDegree};
pub use error::{Error, Result};
pub use regularity::{
    check_l_subadditivity, check_subadditivity, cm_regularity, cm_regularity_with_witness,
    ideal_sheaf_lambda, in_regularity_set, is_l_regular_formula, is_l_regular_oracle,
    regularity_corners, segre_regularity_r2, LSubadditivity, LambdaReport, RegularityCorner,
    RegularitySet, SubadditivityReport,
};
pub use tate::{
    balanced_endpoints, m_tilde, p_minus, p_plus, tate_term, tate_window, TateEntry, TateTerm,
    TateWindow,
};
