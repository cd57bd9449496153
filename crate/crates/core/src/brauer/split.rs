//! Splitting off the ideal of morphisms factoring through the smaller
//! generator: the ideal's unit z is found by a linear solve, checked
//! idempotent and central, and the complementary corner is presented as
//! an algebra on the residual permutation diagrams.

use super::algebra::{diagram_perm_pair, end_algebra, AlgebraPresentation, EndAlgebra};
use crate::cob::{enumerate_diagram_basis, Morphism, SignedWord};
use crate::error::AlgebraError;
use crate::exactalg::{FieldMatrix, RatFunc};

pub struct SplitData {
    pub end: EndAlgebra,
    /// Unit of the factoring ideal, as coordinates on the diagram basis.
    pub z_coords: Vec<RatFunc>,
    pub z: Morphism,
    /// Basis indices spanning the ideal (diagrams arising as a∘b).
    pub ideal: Vec<usize>,
    /// Basis indices of the residual permutation diagrams.
    pub residual: Vec<usize>,
    /// The corner algebra (1-z)·End·(1-z) on the residual labels.
    pub quotient: AlgebraPresentation,
    /// Permutation labels of the quotient basis, split at the wall.
    pub quotient_perms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl SplitData {
    pub fn corner_unit(&self) -> Morphism {
        Morphism::identity(&self.end.word).sub(&self.z)
    }
}

/// For i, j >= 1: computes J = span{a∘b} over the complementary hom
/// bases through X^{(i-1,j-1)}, solves for the unit z of J, verifies
/// z² = z and centrality, and presents the corner on (1-z)·σ·(1-z).
pub fn perfss_split(i: usize, j: usize) -> Result<SplitData, AlgebraError> {
    assert!(i >= 1 && j >= 1);
    let end = end_algebra(i, j);
    let dim = end.basis.len();
    let small = SignedWord::generator(i - 1, j - 1);
    let up = enumerate_diagram_basis(&small, &end.word);
    let down = enumerate_diagram_basis(&end.word, &small);

    // products a∘b are scaled basis diagrams, so the ideal has a
    // monomial basis: the set of diagrams that occur
    let mut ideal: Vec<usize> = Vec::new();
    for a in &up {
        for b in &down {
            let (_, d) = a.compose(b).expect("factoring pair composes");
            let k = end.index_of(&d).expect("product stays in the basis");
            if !ideal.contains(&k) {
                ideal.push(k);
            }
        }
    }
    ideal.sort();

    // solve z·u = u and u·z = u for all ideal basis elements u, with z
    // supported on the ideal
    let nj = ideal.len();
    let rows = 2 * nj * dim;
    let mut m = FieldMatrix::zero(rows, nj);
    let mut rhs = vec![RatFunc::zero(); rows];
    for (ui, &u) in ideal.iter().enumerate() {
        for (di, &d) in ideal.iter().enumerate() {
            let left = end.pres.structure_constants(d, u);
            let right = end.pres.structure_constants(u, d);
            for k in 0..dim {
                m.set(2 * ui * dim + k, di, left[k].clone());
                m.set((2 * ui + 1) * dim + k, di, right[k].clone());
            }
        }
        rhs[2 * ui * dim + u] = RatFunc::one();
        rhs[(2 * ui + 1) * dim + u] = RatFunc::one();
    }
    let x = m.solve(&rhs).ok_or(AlgebraError::IdealHasNoUnit)?;
    let mut z_coords = vec![RatFunc::zero(); dim];
    for (di, &d) in ideal.iter().enumerate() {
        z_coords[d] = x[di].clone();
    }

    // z is idempotent and central
    if end.pres.multiply(&z_coords, &z_coords) != z_coords {
        return Err(AlgebraError::NotIdempotent("unit of the factoring ideal".into()));
    }
    for g in 0..dim {
        let gv = end.pres.basis_vector(g);
        if end.pres.multiply(&z_coords, &gv) != end.pres.multiply(&gv, &z_coords) {
            return Err(AlgebraError::CertificateStep {
                i,
                j,
                step: format!("centrality of z against basis element {}", g),
            });
        }
    }
    let z = end.morphism_from(&z_coords);

    let residual: Vec<usize> = (0..dim).filter(|k| !ideal.contains(k)).collect();
    let quotient_perms: Vec<(Vec<usize>, Vec<usize>)> = residual
        .iter()
        .map(|&k| {
            diagram_perm_pair(&end.basis[k], i)
                .expect("residual basis diagrams are wall permutations")
        })
        .collect();

    // corner basis vectors v_σ = coords of (1-z)·σ·(1-z)
    let mut e_coords = end.pres.unit().to_vec();
    for k in 0..dim {
        e_coords[k] = &e_coords[k] - &z_coords[k];
    }
    let corner: Vec<Vec<RatFunc>> = residual
        .iter()
        .map(|&s| {
            let sv = end.pres.basis_vector(s);
            end.pres
                .multiply(&e_coords, &end.pres.multiply(&sv, &e_coords))
        })
        .collect();
    let v = FieldMatrix::from_fn(dim, residual.len(), |r, c| corner[c][r].clone());
    let in_corner_basis = |coords: &[RatFunc]| -> Result<Vec<RatFunc>, AlgebraError> {
        v.solve(coords).ok_or(AlgebraError::CertificateStep {
            i,
            j,
            step: "corner element outside the span of (1-z)·σ·(1-z)".into(),
        })
    };

    let nq = residual.len();
    let mut mult = vec![vec![vec![RatFunc::zero(); nq]; nq]; nq];
    for a in 0..nq {
        for b in 0..nq {
            mult[a][b] = in_corner_basis(&end.pres.multiply(&corner[a], &corner[b]))?;
        }
    }
    let unit = in_corner_basis(&e_coords)?;
    let labels = residual
        .iter()
        .map(|&k| end.basis[k].to_string())
        .collect();
    let quotient = AlgebraPresentation::new(labels, mult, unit)?;

    Ok(SplitData {
        end,
        z_coords,
        z,
        ideal,
        residual,
        quotient,
        quotient_perms,
    })
}

/// Gram matrix of the corner algebra under the categorical trace of
/// corner representatives in End(X^{(i,j)}).
pub fn quotient_gram(split: &SplitData) -> FieldMatrix {
    let e = split.corner_unit();
    let reps: Vec<Morphism> = split
        .residual
        .iter()
        .map(|&k| {
            let s = Morphism::from_diagram(split.end.basis[k].clone());
            e.compose(&s).unwrap().compose(&e).unwrap()
        })
        .collect();
    FieldMatrix::from_fn(reps.len(), reps.len(), |a, b| {
        reps[a].compose(&reps[b]).unwrap().trace().unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::algebra::group_algebra_check;

    #[test]
    fn one_one_split() {
        let s = perfss_split(1, 1).unwrap();
        assert_eq!(s.ideal.len(), 1);
        assert_eq!(s.quotient.dim(), 1);
        // z = t^{-1}·θ
        let theta = s.ideal[0];
        assert_eq!(s.z_coords[theta], RatFunc::t_pow(1).recip().unwrap());
        assert!(group_algebra_check(&s.quotient, &s.quotient_perms).is_ok());
    }

    #[test]
    fn two_one_split() {
        let s = perfss_split(2, 1).unwrap();
        assert_eq!(s.quotient.dim(), 2);
        assert!(group_algebra_check(&s.quotient, &s.quotient_perms).is_ok());
        let qg = quotient_gram(&s);
        assert!(!qg.det().unwrap().is_zero());
    }
}
