//! The degree-0 linearized oriented cobordism category: signed words,
//! orientation-compatible matchings with Q(t) coefficients, composition
//! with loop counting, tensor, duality, trace, and the additive envelope.

mod diagram;
mod morphism;
mod summatrix;
mod word;

pub use diagram::{enumerate_diagrams, Diagram, Point};
pub use morphism::{basis_morphisms, dimension, Morphism};
pub use summatrix::{block_permutation, MatrixMorphism, SumObject};
pub use word::{Sign, SignedWord};

/// A basis morphism of the plain (marker-free) calculus.
pub type BrauerDiagram = Diagram;

/// Enumerate the Brauer diagram basis of Hom(src, tgt); empty iff the
/// signed counts differ.
pub fn enumerate_diagram_basis(src: &SignedWord, tgt: &SignedWord) -> Vec<BrauerDiagram> {
    enumerate_diagrams(src, tgt, false)
}
