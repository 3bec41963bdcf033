//! The Heisenberg category in the basis of oriented matchings with clockwise bubbles.

mod line;
mod morphism;
mod object;
mod relations;
mod structure;
mod text;
mod word;

pub use morphism::{End, HeisMorphism, NormalHeisDiagram};
pub use object::{HeisObject, Orientation};
pub use relations::{relations, verify_relations, HeisRelation};
pub use structure::{
    block_number, degree_part, filtration_degree, is_direct_sum, mail_summands, matchings, sym_action, BiproductWitness,
};
pub use text::{parse_heis_morphism, parse_normal_diagram, parse_word};
pub use word::{apply_layer, apply_word, compose, word_from_normal, DiagramWord, HeisLayer, LayerKind, Strategy};
