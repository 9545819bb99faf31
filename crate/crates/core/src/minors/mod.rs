//! Clique minors: exact Hadwiger numbers, grid-like minors and their lift to
//! `G □ K_2`, and fractional and `r`-integral Hadwiger numbers.

mod glm;
mod hadwiger;
mod weighted;

pub use glm::{glm_from_grid, model_in_product_from_glm, validate_glm, GridLikeMinorCert};
pub use hadwiger::hadwiger_number;
pub use weighted::{
    fractional_order, had_f_small, optimal_weights, validate_weighted_bramble, weighted_bramble_from_product_model,
    WeightedBramble,
};
