//! Endomorphism algebras of the generator words over Q(t): structure
//! constants, trace pairings and Gram determinants, the factoring-ideal
//! splitting, group-algebra recognition, and replayable semisimplicity
//! certificates.

pub mod algebra;
mod cert;
mod gram;
mod split;

pub use algebra::{
    diagram_perm_pair, dickson_check, end_algebra, group_algebra_check, AlgebraPresentation,
    EndAlgebra,
};
pub use cert::{semisimplicity_certificate, CertStep, Certificate};
pub use gram::{
    cross_pairing, cross_pairing_nondegenerate, gram_det, gram_matrix, gram_of_end, gram_rank,
    twisted_pairing, CrossPairing, GramData, TwistedPairing,
};
pub use split::{perfss_split, quotient_gram, SplitData};
