//! The partition category over `Z[t]`.

mod diagram;
mod factor;
mod morphism;
mod presentation;
mod text;

pub use diagram::{set_partitions, PartitionDiagram, Vertex};
pub use factor::{compose_word, factorize, generator_word, layer_morphism, reduced_word, word_to_perm, Factorization, Layer};
pub use morphism::{Generator, ParMorphism};
pub use presentation::{relations, verify_presentation, Relation};
pub use text::{parse_arity, parse_diagram, parse_morphism};
