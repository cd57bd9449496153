//! Q(t)-linear combinations of diagrams, with the structural morphisms of
//! the rigid symmetric monoidal structure, traces and mates.

use super::diagram::{enumerate_diagrams, Diagram, Point};
use super::word::SignedWord;
use crate::error::CobError;
use crate::exactalg::RatFunc;
use std::collections::BTreeMap;
use std::fmt;

/// A morphism: finite linear combination of diagrams sharing the same
/// endpoints, with nonzero coefficients only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    source: SignedWord,
    target: SignedWord,
    terms: BTreeMap<Diagram, RatFunc>,
}

impl Morphism {
    pub fn zero(source: SignedWord, target: SignedWord) -> Self {
        Morphism {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::from_scaled_diagram(d, RatFunc::one())
    }

    pub fn from_scaled_diagram(d: Diagram, c: RatFunc) -> Self {
        let mut m = Morphism::zero(d.source().clone(), d.target().clone());
        if !c.is_zero() {
            m.terms.insert(d, c);
        }
        m
    }

    pub fn source(&self) -> &SignedWord {
        &self.source
    }

    pub fn target(&self) -> &SignedWord {
        &self.target
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, d: &Diagram) -> RatFunc {
        self.terms.get(d).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == Self::identity(&self.source)
    }

    fn insert(&mut self, d: Diagram, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert_eq!(self.source, other.source, "add: source mismatch");
        assert_eq!(self.target, other.target, "add: target mismatch");
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.insert(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.scale(&RatFunc::from_i64(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Morphism {
        if c.is_zero() {
            return Morphism::zero(self.source.clone(), self.target.clone());
        }
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self.terms.iter().map(|(d, a)| (d.clone(), a * c)).collect(),
        }
    }

    /// Bilinear diagram stacking; each closed loop becomes a factor of t.
    pub fn compose(&self, f: &Morphism) -> Result<Morphism, CobError> {
        if f.target != self.source {
            return Err(CobError::EndpointMismatch {
                f_target: f.target.to_string(),
                g_source: self.source.to_string(),
            });
        }
        let mut out = Morphism::zero(f.source.clone(), self.target.clone());
        for (dg, cg) in &self.terms {
            for (df, cf) in &f.terms {
                let (loops, d) = dg.compose(df)?;
                let c = &(cg * cf) * &RatFunc::t_pow(loops);
                out.insert(d, c);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Morphism) -> Morphism {
        let mut out = Morphism::zero(
            self.source.tensor(&other.source),
            self.target.tensor(&other.target),
        );
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                out.insert(da.tensor(db), ca * cb);
            }
        }
        out
    }

    // --- structural morphisms ---

    pub fn identity(w: &SignedWord) -> Morphism {
        Self::from_diagram(Diagram::identity(w))
    }

    /// The symmetry w1 (x) w2 -> w2 (x) w1.
    pub fn symmetry(w1: &SignedWord, w2: &SignedWord) -> Morphism {
        let n1 = w1.len();
        let n2 = w2.len();
        let src = w1.tensor(w2);
        let mapping: Vec<usize> = (0..n1 + n2)
            .map(|k| if k < n1 { k + n2 } else { k - n1 })
            .collect();
        Self::from_diagram(Diagram::permutation(&src, &mapping))
    }

    /// evaluation for X: "+-" -> 1.
    pub fn evaluation() -> Morphism {
        let src = SignedWord::parse("+-").unwrap();
        Self::from_diagram(Diagram::new(
            src,
            SignedWord::unit(),
            vec![(Point::Bot(0), Point::Bot(1))],
            vec![],
        ))
    }

    /// coevaluation for X: 1 -> "-+".
    pub fn coevaluation() -> Morphism {
        let tgt = SignedWord::parse("-+").unwrap();
        Self::from_diagram(Diagram::new(
            SignedWord::unit(),
            tgt,
            vec![(Point::Top(0), Point::Top(1))],
            vec![],
        ))
    }

    /// The mate coevaluation': 1 -> "+-".
    pub fn coevaluation_prime() -> Morphism {
        let tgt = SignedWord::parse("+-").unwrap();
        Self::from_diagram(Diagram::new(
            SignedWord::unit(),
            tgt,
            vec![(Point::Top(0), Point::Top(1))],
            vec![],
        ))
    }

    /// Nested evaluation w (x) w^dual -> 1.
    pub fn ev_word(w: &SignedWord) -> Morphism {
        let n = w.len();
        let src = w.tensor(&w.dual());
        let arcs = (0..n)
            .map(|k| (Point::Bot(k), Point::Bot(2 * n - 1 - k)))
            .collect();
        Self::from_diagram(Diagram::new(src, SignedWord::unit(), arcs, vec![]))
    }

    /// Nested evaluation w^dual (x) w -> 1.
    pub fn ev_left_word(w: &SignedWord) -> Morphism {
        let n = w.len();
        let src = w.dual().tensor(w);
        let arcs = (0..n)
            .map(|k| (Point::Bot(k), Point::Bot(2 * n - 1 - k)))
            .collect();
        Self::from_diagram(Diagram::new(src, SignedWord::unit(), arcs, vec![]))
    }

    /// Nested coevaluation 1 -> w^dual (x) w.
    pub fn coev_word(w: &SignedWord) -> Morphism {
        let n = w.len();
        let tgt = w.dual().tensor(w);
        let arcs = (0..n)
            .map(|k| (Point::Top(k), Point::Top(2 * n - 1 - k)))
            .collect();
        Self::from_diagram(Diagram::new(SignedWord::unit(), tgt, arcs, vec![]))
    }

    /// Nested coevaluation 1 -> w (x) w^dual.
    pub fn coev_prime_word(w: &SignedWord) -> Morphism {
        let n = w.len();
        let tgt = w.tensor(&w.dual());
        let arcs = (0..n)
            .map(|k| (Point::Top(k), Point::Top(2 * n - 1 - k)))
            .collect();
        Self::from_diagram(Diagram::new(SignedWord::unit(), tgt, arcs, vec![]))
    }

    /// The mate f^dual: target^dual -> source^dual, computed by bending
    /// with ev/coev.
    pub fn dual_mate(&self) -> Morphism {
        let a = &self.source;
        let b = &self.target;
        let bd = b.dual();
        let ad = a.dual();
        // B^dual -> B^dual (x) A (x) A^dual
        let s1 = Morphism::identity(&bd).tensor(&Self::coev_prime_word(a));
        // -> B^dual (x) B (x) A^dual
        let s2 = Morphism::identity(&bd)
            .tensor(self)
            .tensor(&Morphism::identity(&ad));
        // -> A^dual
        let s3 = Self::ev_left_word(b).tensor(&Morphism::identity(&ad));
        s3.compose(&s2.compose(&s1).expect("mate chain composes"))
            .expect("mate chain composes")
    }

    /// Categorical trace of an endomorphism: close each top point to the
    /// matching bottom point; each loop is a factor of t.
    pub fn trace(&self) -> Result<RatFunc, CobError> {
        if self.source != self.target {
            return Err(CobError::NotEndomorphism {
                from: self.source.to_string(),
                to: self.target.to_string(),
            });
        }
        let mut acc = RatFunc::zero();
        for (d, c) in &self.terms {
            let loops = d.closure_loops()?;
            acc = &acc + &(c * &RatFunc::t_pow(loops));
        }
        Ok(acc)
    }

    /// Trace computed through the categorical composite ev . (f (x) id) . coev'.
    pub fn trace_categorical(&self) -> Result<RatFunc, CobError> {
        if self.source != self.target {
            return Err(CobError::NotEndomorphism {
                from: self.source.to_string(),
                to: self.target.to_string(),
            });
        }
        let a = &self.source;
        let chain = Self::ev_word(a)
            .compose(&self.tensor(&Morphism::identity(&a.dual())))?
            .compose(&Self::coev_prime_word(a))?;
        // an endomorphism of the unit is a scalar
        let mut acc = RatFunc::zero();
        for (d, c) in &chain.terms {
            debug_assert!(d.arcs().is_empty() && d.markers().is_empty());
            acc = &acc + c;
        }
        Ok(acc)
    }

    /// All marker-bearing terms dropped (the functor p on the pointed model).
    pub fn project_markers(&self) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.is_marker_free())
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keep only terms of grading strictly below `k`.
    pub fn truncate_grading(&self, k: usize) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.grading() < k)
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }
}

/// The symmetric monoidal dimension of a word: trace of the identity, t^len.
pub fn dimension(w: &SignedWord) -> RatFunc {
    RatFunc::t_pow(w.len())
}

/// The basis of Hom(src, tgt) as morphisms.
pub fn basis_morphisms(src: &SignedWord, tgt: &SignedWord, pointed: bool) -> Vec<Morphism> {
    enumerate_diagrams(src, tgt, pointed)
        .into_iter()
        .map(Morphism::from_diagram)
        .collect()
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| format!("{} * [{}]", c, d))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedWord {
        SignedWord::parse(s).unwrap()
    }

    #[test]
    fn circle_is_t() {
        // ev . coev' : 1 -> 1 is t (one closed loop)
        let ev = Morphism::evaluation();
        let coevp = Morphism::coevaluation_prime();
        let c = ev.compose(&coevp).unwrap();
        let unit_id = Morphism::identity(&SignedWord::unit());
        assert_eq!(c, unit_id.scale(&RatFunc::t_pow(1)));
    }

    #[test]
    fn snake_identities() {
        let x = w("+");
        let idx = Morphism::identity(&x);
        // (ev (x) id) . (id (x) coev) = id
        let lhs = Morphism::evaluation()
            .tensor(&idx)
            .compose(&idx.tensor(&Morphism::coevaluation()))
            .unwrap();
        assert_eq!(lhs, idx);
        // (id (x) ev_left) . (coev' (x) id) = id
        let rhs = idx
            .tensor(&Morphism::ev_left_word(&x))
            .compose(&Morphism::coevaluation_prime().tensor(&idx))
            .unwrap();
        assert_eq!(rhs, idx);
    }

    #[test]
    fn symmetry_squares_to_identity() {
        let s = Morphism::symmetry(&w("+"), &w("+"));
        assert!(s.compose(&s).unwrap().is_identity());
        let s2 = Morphism::symmetry(&w("+-"), &w("+"));
        let s2back = Morphism::symmetry(&w("+"), &w("+-"));
        assert!(s2back.compose(&s2).unwrap().is_identity());
    }

    #[test]
    fn trace_of_identity_is_dimension() {
        for word in ["", "+", "+-", "++-"] {
            let ww = SignedWord::parse(if word.is_empty() { "1" } else { word }).unwrap();
            let id = Morphism::identity(&ww);
            assert_eq!(id.trace().unwrap(), dimension(&ww));
            assert_eq!(id.trace_categorical().unwrap(), dimension(&ww));
        }
    }

    #[test]
    fn dual_mate_involution() {
        for b in basis_morphisms(&w("++-"), &w("+"), false) {
            let m = b.dual_mate();
            assert_eq!(m.source(), &w("+").dual());
            assert_eq!(m.target(), &w("++-").dual());
            assert_eq!(m.dual_mate(), b);
        }
    }

    #[test]
    fn dual_of_identity() {
        let d = Morphism::identity(&w("+")).dual_mate();
        assert_eq!(d, Morphism::identity(&w("-")));
    }

    #[test]
    fn dual_of_evaluation_is_coevaluation_up_to_symmetry() {
        // ev: "+-" -> 1 has mate 1 -> "+-"; composing with the symmetry
        // gives coevaluation 1 -> "-+".
        let mate = Morphism::evaluation().dual_mate();
        let sym = Morphism::symmetry(&w("+"), &w("-"));
        assert_eq!(sym.compose(&mate).unwrap(), Morphism::coevaluation());
    }

    #[test]
    fn trace_of_three_cycle() {
        // sigma = (123) acting on X^{(4,0)}: cycles = one 3-cycle + one fixed
        // point, so the trace is t^2
        let src = SignedWord::generator(4, 0);
        let sigma = Morphism::from_diagram(Diagram::permutation(&src, &[1, 2, 0, 3]));
        assert_eq!(sigma.trace().unwrap(), RatFunc::t_pow(2));
    }
}
