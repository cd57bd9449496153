//! Trace pairings on the diagram bases: Gram matrices of the
//! endomorphism algebras, the twisted pairing on the permutation basis,
//! and the cross pairing between complementary hom spaces together with
//! its identification, by bending a strand, with a smaller Gram matrix.

use super::algebra::{end_algebra, EndAlgebra};
use crate::cob::{enumerate_diagram_basis, Diagram, Morphism, Sign, SignedWord};
use crate::exactalg::{FieldMatrix, IntPoly, PolyMatrix, RatFunc};

pub struct GramData {
    pub trace_vector: Vec<IntPoly>,
    pub gram: PolyMatrix,
    pub det: IntPoly,
}

fn trace_poly(m: &Morphism) -> RatFunc {
    m.trace().expect("endomorphism has a trace")
}

/// Gram matrix of (a, b) -> trace(a·b) on the diagram basis of
/// End(X^{(i,j)}). Entries are t-powers, so everything stays in Z[t];
/// each entry is computed both through the structure constants and by
/// direct closure of the stacked diagram, and the two must agree.
pub fn gram_matrix(i: usize, j: usize) -> GramData {
    let end = end_algebra(i, j);
    gram_of_end(&end)
}

pub fn gram_of_end(end: &EndAlgebra) -> GramData {
    let dim = end.basis.len();
    let trace_vector: Vec<IntPoly> = end
        .basis
        .iter()
        .map(|d| {
            trace_poly(&Morphism::from_diagram(d.clone()))
                .to_int_poly()
                .expect("diagram trace is a power of t")
        })
        .collect();
    let gram = PolyMatrix::from_fn(dim, dim, |a, b| {
        // via structure constants
        let mut acc = RatFunc::zero();
        for (k, c) in end.pres.structure_constants(a, b).iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &RatFunc::from_poly(&trace_vector[k]));
            }
        }
        // via direct closure of the stacked diagram
        let (loops, d) = end.basis[a].compose(&end.basis[b]).unwrap();
        let direct = &RatFunc::t_pow(loops)
            * &trace_poly(&Morphism::from_diagram(d));
        assert_eq!(acc, direct, "trace routes disagree at ({}, {})", a, b);
        acc.to_int_poly().expect("gram entry is a power of t")
    });
    let det = gram.det_fraction_free().expect("square");
    GramData {
        trace_vector,
        gram,
        det,
    }
}

pub fn gram_det(i: usize, j: usize) -> IntPoly {
    gram_matrix(i, j).det
}

pub struct TwistedPairing {
    pub gram: PolyMatrix,
    pub det: IntPoly,
}

impl TwistedPairing {
    pub fn is_signed_monic(&self) -> bool {
        self.det
            .leading()
            .map(|c| c.magnitude() == &num::BigUint::from(1u32))
            .unwrap_or(false)
    }
}

/// The pairing (sigma, tau) -> trace(sigma^{-1}·tau) on the permutation
/// basis of End(X^{(i,0)}). Its matrix has t^i on the diagonal and
/// strictly smaller powers elsewhere, so the determinant is, up to sign,
/// monic of degree i·i!.
pub fn twisted_pairing(i: usize) -> TwistedPairing {
    let end = end_algebra(i, 0);
    let dim = end.basis.len();
    let inverses: Vec<Diagram> = end
        .basis
        .iter()
        .map(|d| {
            let p = d.as_permutation().expect("one-sided basis is permutations");
            let mut inv = vec![0usize; p.len()];
            for (k, &m) in p.iter().enumerate() {
                inv[m] = k;
            }
            Diagram::permutation(&end.word, &inv)
        })
        .collect();
    let gram = PolyMatrix::from_fn(dim, dim, |a, b| {
        let (loops, d) = inverses[a].compose(&end.basis[b]).unwrap();
        assert_eq!(loops, 0);
        trace_poly(&Morphism::from_diagram(d))
            .to_int_poly()
            .unwrap()
    });
    for a in 0..dim {
        for b in 0..dim {
            let deg = gram.at(a, b).degree().unwrap();
            if a == b {
                assert_eq!(deg, i, "diagonal entry is t^i");
            } else {
                assert!(deg < i, "off-diagonal degree dominates");
            }
        }
    }
    let det = gram.det_fraction_free().expect("square");
    TwistedPairing { gram, det }
}

pub struct CrossPairing {
    /// pairing[a][b] = trace(b ∘ a) over the hom bases
    /// a: X^{(i-1,j-1)} -> X^{(i,j)}, b the other way.
    pub pairing: PolyMatrix,
    pub det: IntPoly,
    /// Positions of the bent bases inside the End(X^{(i-1,j)}) basis:
    /// bend_up[a] and bend_down[b] index the images of a and b.
    pub bend_up: Vec<usize>,
    pub bend_down: Vec<usize>,
    /// Exact equality with the smaller Gram matrix under the bending
    /// bijections.
    pub matches_smaller_gram: bool,
}

/// Bends the extra plus strand of a hom element down to a minus at the
/// bottom, landing in End(X^{(i-1,j)}). Images are single diagrams with
/// coefficient one, and the construction is a bijection of bases.
fn bend_up(a: &Morphism, i: usize, j: usize) -> Diagram {
    // X^(i,j) = X (x) B with B = +^{i-1} -^j
    let b_word = SignedWord::generator(i - 1, j);
    let xdual = SignedWord::new(vec![Sign::Minus]);
    let step = Morphism::ev_left_word(&SignedWord::new(vec![Sign::Plus]))
        .tensor(&Morphism::identity(&b_word))
        .compose(&Morphism::identity(&xdual).tensor(a))
        .unwrap();
    let s = reorder_into(&b_word, a.source());
    let out = step.compose(&s).unwrap();
    single_diagram(out)
}

fn bend_down(b: &Morphism, i: usize, j: usize) -> Diagram {
    let b_word = SignedWord::generator(i - 1, j);
    let xdual = SignedWord::new(vec![Sign::Minus]);
    let step = Morphism::identity(&xdual)
        .tensor(b)
        .compose(&Morphism::coev_word(&SignedWord::new(vec![Sign::Plus])).tensor(&Morphism::identity(&b_word)))
        .unwrap();
    let s = reorder_into(&b_word, b.target());
    let out = invert_permutation(&s).compose(&step).unwrap();
    single_diagram(out)
}

fn invert_permutation(m: &Morphism) -> Morphism {
    assert_eq!(m.num_terms(), 1);
    let (d, c) = m.terms().next().unwrap();
    assert!(c.is_one());
    let p = d.as_permutation().expect("permutation morphism");
    let mut inv = vec![0usize; p.len()];
    for (k, &v) in p.iter().enumerate() {
        inv[v] = k;
    }
    Morphism::from_diagram(Diagram::permutation(d.target(), &inv))
}

/// The fixed symmetry M = +^{i-1} -^j  ->  (-) (+^{i-1}) (-^{j-1})
/// moving the first minus of M to the front.
fn reorder_into(m: &SignedWord, small: &SignedWord) -> Morphism {
    let i1 = m.plus_count();
    let j1 = small.minus_count(); // = j - 1
    let mut mapping = Vec::with_capacity(m.len());
    for k in 0..i1 {
        mapping.push(1 + k);
    }
    mapping.push(0);
    for l in 1..=j1 {
        mapping.push(i1 + l);
    }
    Morphism::from_diagram(Diagram::permutation(m, &mapping))
}

fn single_diagram(m: Morphism) -> Diagram {
    assert_eq!(m.num_terms(), 1, "bent basis element is a single diagram");
    let (d, c) = m.terms().next().unwrap();
    assert!(c.is_one(), "bent basis element has coefficient one");
    d.clone()
}

/// The trace pairing between Hom(X^{(i-1,j-1)}, X^{(i,j)}) and
/// Hom(X^{(i,j)}, X^{(i-1,j-1)}), verified equal to the Gram matrix of
/// End(X^{(i-1,j)}) under strand bending.
pub fn cross_pairing(i: usize, j: usize) -> CrossPairing {
    assert!(i >= 1 && j >= 1);
    let small = SignedWord::generator(i - 1, j - 1);
    let big = SignedWord::generator(i, j);
    let up: Vec<Morphism> = enumerate_diagram_basis(&small, &big)
        .into_iter()
        .map(Morphism::from_diagram)
        .collect();
    let down: Vec<Morphism> = enumerate_diagram_basis(&big, &small)
        .into_iter()
        .map(Morphism::from_diagram)
        .collect();
    assert_eq!(up.len(), down.len(), "complementary hom bases match in size");

    let pairing = PolyMatrix::from_fn(up.len(), down.len(), |a, b| {
        trace_poly(&down[b].compose(&up[a]).unwrap())
            .to_int_poly()
            .unwrap()
    });
    let det = pairing.det_fraction_free().expect("square");

    let mid = end_algebra(i - 1, j);
    let bend_up_idx: Vec<usize> = up
        .iter()
        .map(|a| mid.index_of(&bend_up(a, i, j)).expect("bent image in basis"))
        .collect();
    let bend_down_idx: Vec<usize> = down
        .iter()
        .map(|b| mid.index_of(&bend_down(b, i, j)).expect("bent image in basis"))
        .collect();
    // both bends are bijections onto the smaller endomorphism basis
    assert_eq!(up.len(), mid.basis.len(), "bending matches basis sizes");
    for idx in [&bend_up_idx, &bend_down_idx] {
        let mut seen = (*idx).clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), up.len(), "bending is injective on the basis");
    }

    let smaller = gram_of_end(&mid);
    let mut matches = true;
    'outer: for a in 0..up.len() {
        for b in 0..down.len() {
            if pairing.at(a, b) != smaller.gram.at(bend_up_idx[a], bend_down_idx[b]) {
                matches = false;
                break 'outer;
            }
        }
    }
    CrossPairing {
        pairing,
        det,
        bend_up: bend_up_idx,
        bend_down: bend_down_idx,
        matches_smaller_gram: matches,
    }
}

pub fn cross_pairing_nondegenerate(i: usize, j: usize) -> bool {
    let cp = cross_pairing(i, j);
    !cp.det.is_zero()
}

/// Rank over Q(t) of a polynomial Gram matrix.
pub fn gram_rank(g: &PolyMatrix) -> usize {
    FieldMatrix::from_fn(g.rows(), g.cols(), |r, c| RatFunc::from_poly(g.at(r, c))).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gram_examples() {
        let g10 = gram_matrix(1, 0);
        assert_eq!(g10.det, IntPoly::t_pow(1));
        let g20 = gram_matrix(2, 0);
        assert_eq!(g20.det.to_string(), "t^4 - t^2");
        let g11 = gram_matrix(1, 1);
        assert_eq!(g11.det.to_string(), "t^4 - t^2");
    }

    #[test]
    fn twisted_degrees() {
        for i in 1..=3usize {
            let tp = twisted_pairing(i);
            let fact: usize = (1..=i).product();
            assert_eq!(tp.det.degree().unwrap(), i * fact);
            assert!(tp.is_signed_monic());
        }
    }

    #[test]
    fn cross_pairing_one_one() {
        let cp = cross_pairing(1, 1);
        assert_eq!(cp.pairing.rows(), 1);
        assert_eq!(cp.pairing.at(0, 0), &IntPoly::t_pow(1));
        assert!(cp.matches_smaller_gram);
        assert!(!cp.det.is_zero());
    }

    #[test]
    fn cross_pairing_two_one() {
        let cp = cross_pairing(2, 1);
        assert!(cp.matches_smaller_gram);
        assert!(!cp.det.is_zero());
    }
}
