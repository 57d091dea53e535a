//! Seeds, the matrix recurrence, and the limit it defines.

pub mod cf;
pub mod seed;
pub mod sequence;
pub mod xi;

pub use cf::{convergents, fibonacci_word, fibonacci_word_cf, fibonacci_word_cf_to, CfExpansion};
pub use seed::{example_two_seed, fibonacci_seed, parse_matrix, parse_triple, validate_seed, Seed, SeedReport};
pub use sequence::ExtremalSequence;
pub use xi::{tail_constants, xi_best, xi_extending, xi_from_sequence, SequenceXi, TailConstants};
