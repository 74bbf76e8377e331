//! FPF-involution words, symplectic shifted insertion and queer crystals on
//! increasing factorizations.

pub mod crystal;
pub mod fpf;
pub mod insertion;
pub mod orthogonal;
pub mod relations;
pub mod tableau;
pub mod verify;
pub mod word;

pub use fpf::{enumerate_factorizations, enumerate_words, word_to_involution, FpfInvolution};
pub use insertion::{
    insert_factorization_sp, insert_letter_sp, insert_word_sp, reverse_factorization_sp,
    reverse_insert_sp, InsertionError, InsertionOutcome, InsertionPair, TerminalKind,
};
pub use tableau::{IncreasingShiftedTableau, PrimedEntry, PrimedTableau, ShiftedShape, StrictPartition};
pub use word::{Factorization, Letter, Word};
pub use orthogonal::Involution;
pub use crystal::Variant;
