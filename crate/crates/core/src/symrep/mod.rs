//! Representations of the symmetric groups over ℚ.

mod characters;
mod gn;
mod partition;
mod specht;
mod tableau;

pub use characters::{
    character_table, class_size, decompose_class_function, irreducible_character, young_permutation_character,
    CharacterTable, ClassFunction, RepDecomposition,
};
pub use gn::{gn_character, gn_dimension, kostka_reduction, padded_dimension, PaddedPartition};
pub use partition::{partitions_of, Partition};
pub use specht::specht_matrices;
pub use tableau::{
    count_standard_tableaux, hook_length_dimension, kostka, semistandard_tableaux, specht_dimension,
    standard_tableaux, Tableau,
};
