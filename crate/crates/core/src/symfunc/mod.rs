//! Symmetric functions, the Heisenberg double and the Kronecker coproduct.

mod character;
mod double;
mod elem;
mod k0;
mod partition;

pub use character::{character_table, cycle_type, mn_character, z};
pub use double::{
    heis_double_mul, independent, kdelta_embed, kdelta_multiplicative, kronecker_coproduct, power_pairs_mul, schur, stirling,
    stirling_normal_order_check, PowerPairs, RHeisElem,
};
pub use elem::{hopf_pairing, rational, Basis, Coeffs, SymFuncElem};
pub use k0::{alternating_class, diagonal_class, up_down_class, LeadingClassCheck};
pub use partition::Partition;
