//! Symmetric group character theory and its use in decomposing the
//! generator words: Murnaghan–Nakayama character tables, central
//! idempotents of the wall group algebra, lifted idempotents, simple
//! dimension polynomials, and the alternating-sum nonvanishing test.

mod chartable;
mod partition;
mod simples;

pub use chartable::{character_table, class_size, count_syt, CharacterTable};
pub use partition::{cycle_type, factorial, partitions, permutations, Partition};
pub use simples::{
    alternating_sum_nonzero, central_idempotent, decompose_generator, lift_idempotent,
    parity_leading_check, wall_element_morphism, Decomposition, SimpleRecord, WallGroupElement,
};
