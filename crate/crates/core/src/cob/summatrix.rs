//! Formal direct sums of words and matrices of morphisms between them:
//! the additive envelope.

use super::diagram::Diagram;
use super::morphism::Morphism;
use super::word::SignedWord;
use crate::error::CobError;
use crate::exactalg::RatFunc;

/// A formal finite direct sum of signed words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumObject(Vec<SignedWord>);

impl SumObject {
    pub fn new(summands: Vec<SignedWord>) -> Self {
        SumObject(summands)
    }

    pub fn single(w: SignedWord) -> Self {
        SumObject(vec![w])
    }

    pub fn unit() -> Self {
        Self::single(SignedWord::unit())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn summand(&self, k: usize) -> &SignedWord {
        &self.0[k]
    }

    pub fn summands(&self) -> &[SignedWord] {
        &self.0
    }

    /// Tensor distributes over summands lexicographically (left index major).
    pub fn tensor(&self, other: &SumObject) -> SumObject {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a.tensor(b));
            }
        }
        SumObject(out)
    }

    pub fn dual(&self) -> SumObject {
        SumObject(self.0.iter().map(|w| w.dual()).collect())
    }
}

/// A morphism between formal direct sums: a grid of word morphisms,
/// block (r, c) mapping summand c of the source to summand r of the target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixMorphism {
    source: SumObject,
    target: SumObject,
    blocks: Vec<Vec<Morphism>>, // blocks[r][c]
}

impl MatrixMorphism {
    pub fn zero(source: SumObject, target: SumObject) -> Self {
        let blocks = (0..target.len())
            .map(|r| {
                (0..source.len())
                    .map(|c| Morphism::zero(source.summand(c).clone(), target.summand(r).clone()))
                    .collect()
            })
            .collect();
        MatrixMorphism {
            source,
            target,
            blocks,
        }
    }

    pub fn from_blocks(
        source: SumObject,
        target: SumObject,
        blocks: Vec<Vec<Morphism>>,
    ) -> Result<Self, CobError> {
        if blocks.len() != target.len() || blocks.iter().any(|row| row.len() != source.len()) {
            return Err(CobError::ShapeMismatch(format!(
                "expected {}x{} blocks",
                target.len(),
                source.len()
            )));
        }
        for (r, row) in blocks.iter().enumerate() {
            for (c, m) in row.iter().enumerate() {
                if m.source() != source.summand(c) || m.target() != target.summand(r) {
                    return Err(CobError::ShapeMismatch(format!(
                        "block ({}, {}) endpoints do not match the named summands",
                        r, c
                    )));
                }
            }
        }
        Ok(MatrixMorphism {
            source,
            target,
            blocks,
        })
    }

    pub fn from_single(m: Morphism) -> Self {
        let source = SumObject::single(m.source().clone());
        let target = SumObject::single(m.target().clone());
        MatrixMorphism {
            source,
            target,
            blocks: vec![vec![m]],
        }
    }

    pub fn identity(obj: &SumObject) -> Self {
        let mut out = Self::zero(obj.clone(), obj.clone());
        for k in 0..obj.len() {
            out.blocks[k][k] = Morphism::identity(obj.summand(k));
        }
        out
    }

    pub fn source(&self) -> &SumObject {
        &self.source
    }

    pub fn target(&self) -> &SumObject {
        &self.target
    }

    pub fn block(&self, r: usize, c: usize) -> &Morphism {
        &self.blocks[r][c]
    }

    pub fn set_block(&mut self, r: usize, c: usize, m: Morphism) {
        assert_eq!(m.source(), self.source.summand(c));
        assert_eq!(m.target(), self.target.summand(r));
        self.blocks[r][c] = m;
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().all(|m| m.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.blocks.iter().enumerate().all(|(r, row)| {
                row.iter()
                    .enumerate()
                    .all(|(c, m)| if r == c { m.is_identity() } else { m.is_zero() })
            })
    }

    pub fn add(&self, other: &MatrixMorphism) -> Result<MatrixMorphism, CobError> {
        if self.source != other.source || self.target != other.target {
            return Err(CobError::ShapeMismatch("add: endpoint mismatch".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a.add(b)).collect())
            .collect();
        Ok(MatrixMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        })
    }

    pub fn scale(&self, c: &RatFunc) -> MatrixMorphism {
        MatrixMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|row| row.iter().map(|m| m.scale(c)).collect())
                .collect(),
        }
    }

    /// Block-matrix composition with entry-level compose.
    pub fn compose(&self, f: &MatrixMorphism) -> Result<MatrixMorphism, CobError> {
        if f.target != self.source {
            return Err(CobError::ShapeMismatch(
                "compose: middle objects differ".into(),
            ));
        }
        let mut out = Self::zero(f.source.clone(), self.target.clone());
        for r in 0..self.target.len() {
            for c in 0..f.source.len() {
                let mut acc = Morphism::zero(
                    f.source.summand(c).clone(),
                    self.target.summand(r).clone(),
                );
                for k in 0..self.source.len() {
                    if self.blocks[r][k].is_zero() || f.blocks[k][c].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.blocks[r][k].compose(&f.blocks[k][c])?);
                }
                out.blocks[r][c] = acc;
            }
        }
        Ok(out)
    }

    /// Kronecker-style tensor, consistent with `SumObject::tensor` ordering.
    pub fn tensor(&self, other: &MatrixMorphism) -> MatrixMorphism {
        let source = self.source.tensor(&other.source);
        let target = self.target.tensor(&other.target);
        let mut out = Self::zero(source, target);
        for r1 in 0..self.target.len() {
            for c1 in 0..self.source.len() {
                for r2 in 0..other.target.len() {
                    for c2 in 0..other.source.len() {
                        let r = r1 * other.target.len() + r2;
                        let c = c1 * other.source.len() + c2;
                        out.blocks[r][c] = self.blocks[r1][c1].tensor(&other.blocks[r2][c2]);
                    }
                }
            }
        }
        out
    }

    /// Entry-wise mate: target^dual -> source^dual with transposed blocks.
    pub fn dual_mate(&self) -> MatrixMorphism {
        let source = self.target.dual();
        let target = self.source.dual();
        let mut out = Self::zero(source, target);
        for r in 0..self.target.len() {
            for c in 0..self.source.len() {
                out.blocks[c][r] = self.blocks[r][c].dual_mate();
            }
        }
        out
    }
}

/// The permutation morphism rearranging tensor slots: slot k (word
/// `words[k]`) of the source moves to position `perm[k]` of the target.
pub fn block_permutation(words: &[SignedWord], perm: &[usize]) -> Morphism {
    assert_eq!(words.len(), perm.len());
    let n = words.len();
    let mut source = SignedWord::unit();
    for w in words {
        source = source.tensor(w);
    }
    // letter offsets in source and target
    let mut src_off = vec![0usize; n];
    let mut acc = 0;
    for k in 0..n {
        src_off[k] = acc;
        acc += words[k].len();
    }
    let mut slot_at = vec![usize::MAX; n];
    for (k, &p) in perm.iter().enumerate() {
        assert!(slot_at[p] == usize::MAX, "not a permutation");
        slot_at[p] = k;
    }
    let mut tgt_off = vec![0usize; n];
    acc = 0;
    for p in 0..n {
        tgt_off[slot_at[p]] = acc;
        acc += words[slot_at[p]].len();
    }
    let mut mapping = vec![0usize; source.len()];
    for k in 0..n {
        for l in 0..words[k].len() {
            mapping[src_off[k] + l] = tgt_off[k] + l;
        }
    }
    Morphism::from_diagram(Diagram::permutation(&source, &mapping))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedWord {
        SignedWord::parse(s).unwrap()
    }

    #[test]
    fn one_by_one_blocks_reduce_to_plain_compose() {
        let f = Morphism::evaluation();
        let g = Morphism::coevaluation_prime();
        let mf = MatrixMorphism::from_single(f.clone());
        let mg = MatrixMorphism::from_single(g.clone());
        let c = mf.compose(&mg).unwrap();
        assert_eq!(c.block(0, 0), &f.compose(&g).unwrap());
    }

    #[test]
    fn projection_then_inclusion() {
        // 1 (+) X: include 1, project to 1 -> identity block on 1
        let obj = SumObject::new(vec![SignedWord::unit(), w("+")]);
        let unit = SumObject::unit();
        let mut incl = MatrixMorphism::zero(unit.clone(), obj.clone());
        incl.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
        let mut proj = MatrixMorphism::zero(obj.clone(), unit.clone());
        proj.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
        let retract = proj.compose(&incl).unwrap();
        assert!(retract.is_identity());
        let idem = incl.compose(&proj).unwrap();
        assert!(!idem.is_identity());
        assert!(idem.block(0, 0).is_identity());
        assert!(idem.block(1, 1).is_zero());
    }

    #[test]
    fn block_permutation_is_symmetry() {
        let m = block_permutation(&[w("+"), w("-")], &[1, 0]);
        assert_eq!(m, Morphism::symmetry(&w("+"), &w("-")));
    }

    #[test]
    fn matrix_identity_composes() {
        let obj = SumObject::new(vec![w("+"), w("+-")]);
        let id = MatrixMorphism::identity(&obj);
        assert!(id.compose(&id).unwrap().is_identity());
    }
}
