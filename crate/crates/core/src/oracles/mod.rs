//! Independent computations of the same coefficients.

mod billey;
mod bs;
mod crosscheck;
mod duan;
mod freeloc;
mod recursion;

pub use billey::billey_localization;
pub use bs::{bs_multiply, bs_structure_constant, BSClassVector};
pub use crosscheck::{crosscheck, CrosscheckCase, CrosscheckReport};
pub use duan::duan_coefficient;
pub use freeloc::{free_group_coefficient, free_group_p};
pub use recursion::{rel_coeff_free_path, rel_coeff_rec, rel_coeff_rec_uncached, rel_coeff_rec_words, DecoratedWord};
