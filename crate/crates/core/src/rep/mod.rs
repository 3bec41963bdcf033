//! Representation oracles: the action of the Heisenberg category on modules of symmetric groups.

mod actcom;
mod chain;
mod eval;
mod matrix;
mod perm_tensor;

pub use actcom::{check_actcom, heis_route};
pub use chain::{coset_rep, ChainBasis, ChainSpace, Perm};
pub use eval::{chain_dim, eval_heis, layer_matrix, word_matrix};
pub use matrix::{rank, RepMatrix};
pub use perm_tensor::{bee_rank, beta, beta_inv, equivariant_dim, phi, phi_diagram, PermTensorSpace};
