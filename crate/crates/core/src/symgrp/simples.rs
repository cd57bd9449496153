//! Central idempotents of the wall group algebra, their lifts into the
//! endomorphism algebras, and the recursive decomposition of a generator
//! word into simple summands with verified dimension and multiplicity
//! identities.

use super::chartable::{character_table, CharacterTable};
use super::partition::{cycle_type, factorial, partitions, permutations, Partition};
use crate::brauer::{perfss_split, SplitData};
use crate::cob::{enumerate_diagram_basis, Diagram, Morphism, SignedWord};
use crate::error::AlgebraError;
use crate::exactalg::{FieldMatrix, QPoly, RatFunc};
use num::{BigInt, BigRational, ToPrimitive, Zero};

/// An element of the group algebra of Sigma_i x Sigma_j, stored on the
/// full element list.
pub struct WallGroupElement {
    pub i: usize,
    pub j: usize,
    /// coefficient per (permutation of pluses, permutation of minuses)
    pub coeffs: Vec<((Vec<usize>, Vec<usize>), BigRational)>,
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; p.len()];
    for (k, &m) in p.iter().enumerate() {
        inv[m] = k;
    }
    inv
}

/// The classical central idempotent e = (d / |G|) Σ χ(g⁻¹)·g for the
/// irreducible of Sigma_i x Sigma_j labeled by the partition pair.
pub fn central_idempotent(lam: &Partition, mu: &Partition) -> WallGroupElement {
    let i = lam.size();
    let j = mu.size();
    let ti = character_table(i.max(1));
    let tj = character_table(j.max(1));
    let char_of = |t: &CharacterTable, label: &Partition, p: &[usize]| -> BigInt {
        if p.is_empty() {
            BigInt::from(1)
        } else {
            t.value(label, &cycle_type(p)).clone()
        }
    };
    let di = if i == 0 { BigInt::from(1) } else { ti.degree(lam) };
    let dj = if j == 0 { BigInt::from(1) } else { tj.degree(mu) };
    let order = BigInt::from(factorial(i) * factorial(j));
    let scale = BigRational::new(di * dj, order);
    let mut coeffs = Vec::new();
    for sigma in permutations(i) {
        for tau in permutations(j) {
            let chi = char_of(&ti, lam, &invert(&sigma)) * char_of(&tj, mu, &invert(&tau));
            coeffs.push(((sigma.clone(), tau), &scale * BigRational::from(chi)));
        }
    }
    WallGroupElement { i, j, coeffs }
}

/// The permutation-diagram preimage of a group algebra element in
/// End(X^{(i,j)}).
pub fn wall_element_morphism(e: &WallGroupElement) -> Morphism {
    let w = SignedWord::generator(e.i, e.j);
    let mut out = Morphism::zero(w.clone(), w.clone());
    for ((sigma, tau), c) in &e.coeffs {
        if c.is_zero() {
            continue;
        }
        let mut mapping = Vec::with_capacity(e.i + e.j);
        mapping.extend(sigma.iter().copied());
        mapping.extend(tau.iter().map(|&m| e.i + m));
        let d = Diagram::permutation(&w, &mapping);
        out = out.add(&Morphism::from_scaled_diagram(
            d,
            RatFunc::from_rational(c.clone()),
        ));
    }
    out
}

/// Lift into End(X^{(i,j)}): (1 - z)·ẽ with z the unit of the factoring
/// ideal (z = 0 on the one-sided levels, where the algebra is already a
/// group algebra). Idempotency is re-verified, not assumed.
pub fn lift_idempotent(
    e: &WallGroupElement,
    split: Option<&SplitData>,
) -> Result<Morphism, AlgebraError> {
    let tilde = wall_element_morphism(e);
    let lift = match split {
        Some(s) => s.corner_unit().compose(&tilde).expect("endomorphisms"),
        None => tilde,
    };
    let sq = lift.compose(&lift).expect("endomorphisms");
    if sq != lift {
        return Err(AlgebraError::NotIdempotent(format!(
            "lifted idempotent at level ({}, {})",
            e.i, e.j
        )));
    }
    Ok(lift)
}

pub struct SimpleRecord {
    pub lam: Partition,
    pub mu: Partition,
    /// Level (r, s) of first appearance; the idempotent lives in
    /// End(X^{(r,s)}).
    pub level: (usize, usize),
    pub idempotent: Morphism,
    pub dim_poly: QPoly,
    pub multiplicity: usize,
}

pub struct Decomposition {
    pub i: usize,
    pub j: usize,
    pub records: Vec<SimpleRecord>,
}

fn trace_qpoly(m: &Morphism) -> QPoly {
    let tr = m.trace().expect("endomorphism trace");
    assert!(tr.is_polynomial(), "idempotent trace is polynomial");
    tr.numer().clone()
}

fn qpoly_div_int(p: &QPoly, d: usize) -> QPoly {
    p.scale(&BigRational::new(BigInt::from(1), BigInt::from(d)))
}

/// Decomposes X^{(i,j)} into simples: new simples at level (i,j) from
/// lifted central idempotents, older simples with multiplicities read
/// off as ranks of idempotent-cut hom spaces. The identities
/// Σ mult·dim = t^{i+j} and Σ mult² = (i+j)! are verified exactly.
pub fn decompose_generator(i: usize, j: usize) -> Result<Decomposition, AlgebraError> {
    let word = SignedWord::generator(i, j);
    let hom_basis_cache = |r: usize, s: usize| -> Vec<Diagram> {
        enumerate_diagram_basis(&SignedWord::generator(r, s), &word)
    };
    let mut records = Vec::new();
    for k in 0..=i.min(j) {
        let (r, s) = (i - k, j - k);
        if r + s == 0 {
            // the unit appears when i = j; its multiplicity is the rank
            // of the hom space to the generator cut by the identity
            let hom = hom_basis_cache(0, 0);
            records.push(SimpleRecord {
                lam: Partition::new(vec![]),
                mu: Partition::new(vec![]),
                level: (0, 0),
                idempotent: Morphism::identity(&SignedWord::unit()),
                dim_poly: QPoly::one(),
                multiplicity: hom.len(),
            });
            continue;
        }
        let split = if r >= 1 && s >= 1 {
            Some(perfss_split(r, s)?)
        } else {
            None
        };
        for lam in partitions(r) {
            for mu in partitions(s) {
                let e = central_idempotent(&lam, &mu);
                let lift = lift_idempotent(&e, split.as_ref())?;
                let d = (BigRational::from(
                    character_degree(&lam) * character_degree(&mu),
                ))
                .to_integer()
                .to_usize()
                .unwrap();
                let dim_poly = qpoly_div_int(&trace_qpoly(&lift), d);
                let multiplicity = if k == 0 {
                    d
                } else {
                    let rank = idempotent_cut_rank(&lift, r, s, &word);
                    if rank % d != 0 {
                        return Err(AlgebraError::DecompositionIdentity(format!(
                            "hom rank {} not divisible by degree {}",
                            rank, d
                        )));
                    }
                    rank / d
                };
                if multiplicity > 0 {
                    records.push(SimpleRecord {
                        lam: lam.clone(),
                        mu: mu.clone(),
                        level: (r, s),
                        idempotent: lift,
                        dim_poly,
                        multiplicity,
                    });
                }
            }
        }
    }

    // verification identities
    let mut dim_sum = QPoly::zero();
    let mut sq_sum = 0usize;
    for rec in &records {
        let m = BigRational::from(BigInt::from(rec.multiplicity));
        dim_sum = &dim_sum + &rec.dim_poly.scale(&m);
        sq_sum += rec.multiplicity * rec.multiplicity;
    }
    let expect = QPoly::t_pow(i + j);
    if dim_sum != expect {
        return Err(AlgebraError::DecompositionIdentity(format!(
            "dimension sum {} differs from t^{}",
            dim_sum,
            i + j
        )));
    }
    if sq_sum != factorial(i + j) {
        return Err(AlgebraError::DecompositionIdentity(format!(
            "squared multiplicities {} differ from {}!",
            sq_sum,
            i + j
        )));
    }
    Ok(Decomposition { i, j, records })
}

fn character_degree(lam: &Partition) -> BigInt {
    if lam.is_empty() {
        BigInt::from(1)
    } else {
        character_table(lam.size()).degree(lam)
    }
}

/// Rank over Q(t) of h ↦ h∘e on Hom(X^{(r,s)}, target): the isotypic
/// multiplicity times the irreducible degree.
fn idempotent_cut_rank(e: &Morphism, r: usize, s: usize, target: &SignedWord) -> usize {
    let hom = enumerate_diagram_basis(&SignedWord::generator(r, s), target);
    if hom.is_empty() {
        return 0;
    }
    let cols: Vec<Vec<RatFunc>> = hom
        .iter()
        .map(|h| {
            let cut = Morphism::from_diagram(h.clone()).compose(e).unwrap();
            let mut v = vec![RatFunc::zero(); hom.len()];
            for (d, c) in cut.terms() {
                let idx = hom.binary_search(d).expect("cut stays in the hom basis");
                v[idx] = c.clone();
            }
            v
        })
        .collect();
    FieldMatrix::from_fn(hom.len(), hom.len(), |a, b| cols[b][a].clone()).rank()
}

/// Degree, leading coefficient, positivity, and parity constraints for a
/// simple first appearing at (i, j).
pub fn parity_leading_check(rec: &SimpleRecord, i: usize, j: usize) -> bool {
    if rec.level != (i, j) {
        return false;
    }
    let deg = match rec.dim_poly.degree() {
        Some(d) => d,
        None => return false,
    };
    let lead = rec.dim_poly.leading().unwrap();
    let d = character_degree(&rec.lam) * character_degree(&rec.mu);
    let expect = BigRational::new(d, BigInt::from(factorial(i) * factorial(j)));
    deg == i + j
        && *lead == expect
        && lead > &BigRational::zero()
        && (i + j) % 2 == (i as i64 - j as i64).rem_euclid(2) as usize
}

/// Σ (-1)^index · f_index, guaranteed nonzero by the parity constraint:
/// all top-degree terms carry the same sign, so they cannot cancel.
pub fn alternating_sum_nonzero(
    entries: &[(i64, QPoly)],
) -> Result<(QPoly, usize), AlgebraError> {
    assert!(!entries.is_empty());
    let mut parity: Option<i64> = None;
    for (idx, f) in entries {
        let deg = f.degree().ok_or_else(|| {
            AlgebraError::ParityConstraint("zero polynomial in the sum".into())
        })? as i64;
        if f.leading().unwrap() <= &BigRational::zero() {
            return Err(AlgebraError::ParityConstraint(
                "leading coefficient not positive".into(),
            ));
        }
        let p = (deg - idx).rem_euclid(2);
        if *parity.get_or_insert(p) != p {
            return Err(AlgebraError::ParityConstraint(
                "degree-minus-index parity is not constant".into(),
            ));
        }
    }
    let mut sum = QPoly::zero();
    for (idx, f) in entries {
        if idx.rem_euclid(2) == 0 {
            sum = &sum + f;
        } else {
            sum = &sum - f;
        }
    }
    let witness = entries
        .iter()
        .map(|(_, f)| f.degree().unwrap())
        .max()
        .unwrap();
    assert!(!sum.is_zero(), "top-degree terms reinforce");
    Ok((sum, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_two_idempotents() {
        let triv = central_idempotent(&Partition::new(vec![2]), &Partition::new(vec![]));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        for (_, c) in &triv.coeffs {
            assert_eq!(c, &half);
        }
        let sign = central_idempotent(&Partition::new(vec![1, 1]), &Partition::new(vec![]));
        let coeffs: Vec<_> = sign.coeffs.iter().map(|(_, c)| c.clone()).collect();
        assert!(coeffs.contains(&half) && coeffs.contains(&-&half));
    }

    #[test]
    fn idempotents_sum_to_identity() {
        // all labels of Sigma_3
        let mut total = Morphism::zero(SignedWord::generator(3, 0), SignedWord::generator(3, 0));
        for lam in partitions(3) {
            let e = central_idempotent(&lam, &Partition::new(vec![]));
            total = total.add(&wall_element_morphism(&e));
        }
        assert!(total.is_identity());
    }

    #[test]
    fn lift_examples() {
        // (1,1) trivial label: lift = id - t^{-1}θ, trace t² - 1
        let split = perfss_split(1, 1).unwrap();
        let e = central_idempotent(&Partition::new(vec![1]), &Partition::new(vec![1]));
        let lift = lift_idempotent(&e, Some(&split)).unwrap();
        assert_eq!(trace_qpoly(&lift).to_string(), "t^2 - 1");
        // (2,0) labels: traces (t²+t)/2 and (t²-t)/2
        let triv = central_idempotent(&Partition::new(vec![2]), &Partition::new(vec![]));
        let lift = lift_idempotent(&triv, None).unwrap();
        assert_eq!(qpoly_div_int(&trace_qpoly(&lift), 1).to_string(), "1/2*t^2 + 1/2*t");
        let sign = central_idempotent(&Partition::new(vec![1, 1]), &Partition::new(vec![]));
        let lift = lift_idempotent(&sign, None).unwrap();
        assert_eq!(trace_qpoly(&lift).to_string(), "1/2*t^2 - 1/2*t");
    }

    #[test]
    fn small_decompositions() {
        let d = decompose_generator(1, 0).unwrap();
        assert_eq!(d.records.len(), 1);
        assert_eq!(d.records[0].dim_poly, QPoly::t_pow(1));
        let d = decompose_generator(1, 1).unwrap();
        assert_eq!(d.records.len(), 2);
        let d = decompose_generator(2, 0).unwrap();
        assert_eq!(d.records.len(), 2);
    }

    #[test]
    fn parity_checks() {
        let d = decompose_generator(1, 1).unwrap();
        for rec in &d.records {
            if rec.level == (1, 1) {
                assert!(parity_leading_check(rec, 1, 1));
            }
        }
    }

    #[test]
    fn alternating_sums() {
        let ok = alternating_sum_nonzero(&[(0, QPoly::t_pow(2)), (1, QPoly::t_pow(1))]).unwrap();
        assert_eq!(ok.1, 2);
        let clash = alternating_sum_nonzero(&[(0, QPoly::t_pow(2)), (1, QPoly::t_pow(2))]);
        assert!(clash.is_err());
    }
}
