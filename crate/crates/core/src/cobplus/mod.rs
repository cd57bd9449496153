//! Pointed extension of the cobordism calculus. Diagrams may carry
//! markers on top plus and bottom minus points; the marker count is a
//! grading, hom-sets are empty below defect zero, and killing all markers
//! is a functor back to the marker-free calculus.

mod subst;
mod window;

pub use subst::Substitution;
pub use window::{nilpotence_window_check, NilWindowReport};

use crate::cob::{enumerate_diagrams, Diagram, Morphism, SignedWord};

/// Basis diagrams with markers allowed; empty when the excess difference
/// (the defect) is negative.
pub fn enumerate_pointed_basis(source: &SignedWord, target: &SignedWord) -> Vec<Diagram> {
    enumerate_diagrams(source, target, true)
}

/// A marker-free morphism viewed in the pointed calculus. The embedding
/// is the identity on terms; this asserts the precondition.
pub fn embed_from_cob(f: &Morphism) -> Morphism {
    assert!(
        f.terms().all(|(d, _)| d.is_marker_free()),
        "embedding requires marker-free terms"
    );
    f.clone()
}

/// The functor killing markers: terms of positive grading are dropped.
pub fn project_p(f: &Morphism) -> Morphism {
    f.project_markers()
}

/// Quotient by the ideal of morphisms of grading >= k: terms with that
/// many markers or more are dropped. k = 1 recovers `project_p`.
pub fn ideal_truncate(f: &Morphism, k: usize) -> Morphism {
    f.truncate_grading(k)
}
