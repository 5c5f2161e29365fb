//! Closed-form structure constants: sums over bounded maps.

mod coeff;
mod maps;

pub use coeff::{
    bs_coefficient, count_summands, deformed_p, embeddings, equivariant_lr, equivariant_on_word, equivariant_table,
    lr_coefficient, lr_trace, plus_truncation, plus_truncation_min, relative_coefficient, relative_trace,
    sum_over_embeddings, trace_over_embeddings, Filter, SummandCount, SummandTrace,
};
pub use maps::{enumerate_bounded_maps, is_iota_admissible, p_phi, BoundedMap};

#[cfg(test)]
mod tests;
