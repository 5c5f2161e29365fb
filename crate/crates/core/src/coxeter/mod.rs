//! Coxeter groups with a quasi-Cartan matrix: words, the word problem,
//! the reflection representation and Demazure operators.

mod group;
mod matrix;
mod presets;
mod word;

pub use group::{CoxeterSystem, GroupElement};
pub use matrix::{QuasiCartanMatrix, RootVector};
pub(crate) use matrix::order_product_ok;
pub use presets::{dihedral, matrix_from_json, preset, preset_with, PRESET_NAMES};
pub use word::{is_admissible_seq, subsets_of_size, subword_occurrences, Word};
