//! The monoidal functor from the partition category to the Heisenberg category.

mod functor;
mod young;

pub use functor::{
    check_faithful, generator_image, leading_term, psi, psi_diagram, reconstruct, t_of_perm, t_of_word, term_block_numbers,
    x_layers, y_layers, GeneratorImageTable, LeadingTermCheck,
};
pub use young::{
    as_par_morphism, d_idempotent, diagonal_image, filtration_congruence, interleave_inclusion, interleave_projection, psi_young,
    sign, young_symmetrizer, GroupAlgebraElement,
};

#[cfg(test)]
mod tests;
