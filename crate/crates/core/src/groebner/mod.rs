//! Gröbner bases and the ideal operations built on them.

pub mod engine;
mod hilbert;
mod ideal;

pub use hilbert::{binomial, hilbert_numerator, hilbert_value};
pub(crate) use ideal::to_vector;
pub use ideal::{
    colon, groebner_basis, hilbert, ideal_equal, intersect, is_artinian, normal_form, HilbertData,
    Ideal,
};
