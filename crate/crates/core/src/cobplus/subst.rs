//! Substitution functors out of the free pointed category: a choice of
//! pointed object (a direct sum with a morphism from the unit) determines
//! a symmetric monoidal functor sending each marker to the chosen point.
//! The zero point recovers the projection functor p.

use crate::cob::{
    block_permutation, Diagram, MatrixMorphism, Morphism, Point, Sign, SignedWord, SumObject,
};
use crate::error::CobError;
use crate::exactalg::{QPoly, RatFunc};

/// Decomposition of a diagram into permutation and elementary layers:
/// diagram = sigma_t . top . sigma_m . bottom . sigma_b, where `bottom`
/// tensors through strands with caps and bottom markers, and `top`
/// tensors through strands with cups and top markers.
struct Layers {
    sigma_b: Vec<usize>,       // source position -> arranged position
    arranged_source: SignedWord,
    bottom: Diagram,           // arranged_source -> u
    sigma_m: Vec<usize>,       // through rank (bottom order) -> through rank (top order)
    u: SignedWord,             // through letters, bottom order
    top: Diagram,              // u2 -> arranged_target
    arranged_target: SignedWord,
    sigma_t: Vec<usize>,       // arranged position -> target position
    caps: Vec<(usize, usize)>, // (plus, minus) bottom indices
    cups: Vec<(usize, usize)>, // (plus, minus) top indices
    mbots: Vec<usize>,
    mtops: Vec<usize>,
}

fn factorize(d: &Diagram) -> Layers {
    let src = d.source();
    let tgt = d.target();
    let mut throughs: Vec<(usize, usize)> = Vec::new();
    let mut caps: Vec<(usize, usize)> = Vec::new();
    let mut cups: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in d.arcs() {
        match (a, b) {
            (Point::Bot(i), Point::Top(j)) => throughs.push((i, j)),
            (Point::Bot(i), Point::Bot(j)) => {
                if src.sign(i) == Sign::Plus {
                    caps.push((i, j));
                } else {
                    caps.push((j, i));
                }
            }
            (Point::Top(i), Point::Top(j)) => {
                if tgt.sign(i) == Sign::Plus {
                    cups.push((i, j));
                } else {
                    cups.push((j, i));
                }
            }
            _ => unreachable!(),
        }
    }
    throughs.sort();
    caps.sort_by_key(|&(p, m)| p.min(m));
    cups.sort_by_key(|&(p, m)| p.min(m));
    let mut mbots = Vec::new();
    let mut mtops = Vec::new();
    for &m in d.markers() {
        match m {
            Point::Bot(i) => mbots.push(i),
            Point::Top(i) => mtops.push(i),
        }
    }
    mbots.sort();
    mtops.sort();

    let nthrough = throughs.len();
    // bottom arrangement: through bottoms, then cap pairs (+ then -), then markers
    let mut sigma_b = vec![0usize; src.len()];
    let mut arranged_src_signs = Vec::with_capacity(src.len());
    let mut pos = 0;
    for &(b, _) in &throughs {
        sigma_b[b] = pos;
        arranged_src_signs.push(src.sign(b));
        pos += 1;
    }
    for &(p, m) in &caps {
        sigma_b[p] = pos;
        arranged_src_signs.push(Sign::Plus);
        sigma_b[m] = pos + 1;
        arranged_src_signs.push(Sign::Minus);
        pos += 2;
    }
    for &b in &mbots {
        sigma_b[b] = pos;
        arranged_src_signs.push(Sign::Minus);
        pos += 1;
    }
    let arranged_source = SignedWord::new(arranged_src_signs);

    let u = SignedWord::new(throughs.iter().map(|&(b, _)| src.sign(b)).collect());
    let bottom_arcs: Vec<(Point, Point)> = (0..nthrough)
        .map(|k| (Point::Bot(k), Point::Top(k)))
        .chain((0..caps.len()).map(|c| {
            (
                Point::Bot(nthrough + 2 * c),
                Point::Bot(nthrough + 2 * c + 1),
            )
        }))
        .collect();
    let bottom_markers: Vec<Point> = (0..mbots.len())
        .map(|m| Point::Bot(nthrough + 2 * caps.len() + m))
        .collect();
    let bottom = Diagram::new(arranged_source.clone(), u.clone(), bottom_arcs, bottom_markers);

    // middle permutation: reorder through strands from bottom order to top order
    let mut by_top: Vec<usize> = (0..nthrough).collect();
    by_top.sort_by_key(|&k| throughs[k].1);
    let mut sigma_m = vec![0usize; nthrough];
    for (rank, &k) in by_top.iter().enumerate() {
        sigma_m[k] = rank;
    }
    let u2 = SignedWord::new(by_top.iter().map(|&k| u.sign(k)).collect());

    // top arrangement: through tops, then cup pairs (+ then -), then markers
    let mut arranged_tgt_signs: Vec<Sign> = u2.signs().to_vec();
    let mut sigma_t = Vec::with_capacity(tgt.len());
    for &k in &by_top {
        sigma_t.push(throughs[k].1);
    }
    for &(p, m) in &cups {
        arranged_tgt_signs.push(Sign::Plus);
        arranged_tgt_signs.push(Sign::Minus);
        sigma_t.push(p);
        sigma_t.push(m);
    }
    for &t in &mtops {
        arranged_tgt_signs.push(Sign::Plus);
        sigma_t.push(t);
    }
    let arranged_target = SignedWord::new(arranged_tgt_signs);
    let top_arcs: Vec<(Point, Point)> = (0..nthrough)
        .map(|k| (Point::Bot(k), Point::Top(k)))
        .chain((0..cups.len()).map(|c| {
            (
                Point::Top(nthrough + 2 * c),
                Point::Top(nthrough + 2 * c + 1),
            )
        }))
        .collect();
    let top_markers: Vec<Point> = (0..mtops.len())
        .map(|m| Point::Top(nthrough + 2 * cups.len() + m))
        .collect();
    let top = Diagram::new(u2, arranged_target.clone(), top_arcs, top_markers);

    Layers {
        sigma_b,
        arranged_source,
        bottom,
        sigma_m,
        u,
        top,
        arranged_target,
        sigma_t,
        caps,
        cups,
        mbots,
        mtops,
    }
}

/// Recompose the layers; used to validate the factorization.
#[cfg(test)]
fn recompose(d: &Diagram) -> Morphism {
    let l = factorize(d);
    let sb = Morphism::from_diagram(Diagram::permutation(d.source(), &l.sigma_b));
    let sm = Morphism::from_diagram(Diagram::permutation(&l.u, &l.sigma_m));
    let st = Morphism::from_diagram(Diagram::permutation(&l.arranged_target, &l.sigma_t));
    st.compose(&Morphism::from_diagram(l.top.clone()))
        .and_then(|m| m.compose(&sm))
        .and_then(|m| m.compose(&Morphism::from_diagram(l.bottom.clone())))
        .and_then(|m| m.compose(&sb))
        .expect("layers compose")
}

/// A symmetric monoidal functor determined by a pointed object of the
/// additive envelope: the generator letter goes to `target`, a marker to
/// `point` (its mate on bottom minus points).
pub struct Substitution {
    target: SumObject,
    point: MatrixMorphism,
    point_mate: MatrixMorphism,
    dim: QPoly,
}

impl Substitution {
    pub fn new(target: SumObject, point: MatrixMorphism) -> Result<Self, CobError> {
        if point.source() != &SumObject::unit() || point.target() != &target {
            return Err(CobError::ShapeMismatch(
                "point must be a morphism from the unit to the target object".into(),
            ));
        }
        let point_mate = point.dual_mate();
        // dim of the target object: a closed loop in the source evaluates
        // to t, its image closes to this, so scalars twist along t -> dim
        let mut dim = QPoly::zero();
        for s in target.summands() {
            dim = &dim + &QPoly::t_pow(s.len());
        }
        Ok(Substitution {
            target,
            point,
            point_mate,
            dim,
        })
    }

    /// The scalar field twist making the substitution functorial: loops in
    /// the source evaluate to t, their images to dim(target).
    fn twist(&self, c: &RatFunc) -> RatFunc {
        let num = c.numer().compose(&self.dim);
        let den = c.denom().compose(&self.dim);
        RatFunc::reduce(num, den).expect("coefficient denominator vanishes under substitution")
    }

    pub fn target(&self) -> &SumObject {
        &self.target
    }

    /// Image of an object: each + letter becomes `target`, each - letter
    /// its dual, tensored left to right.
    pub fn object(&self, w: &SignedWord) -> SumObject {
        let mut out = SumObject::unit();
        for &s in w.signs() {
            let factor = match s {
                Sign::Plus => self.target.clone(),
                Sign::Minus => self.target.dual(),
            };
            out = out.tensor(&factor);
        }
        out
    }

    fn letter_summand(&self, s: Sign, idx: usize) -> SignedWord {
        match s {
            Sign::Plus => self.target.summand(idx).clone(),
            Sign::Minus => self.target.summand(idx).dual(),
        }
    }

    /// Image of a permutation diagram: a summand-permutation matrix whose
    /// entries are the block symmetries of the substituted words.
    fn apply_permutation(&self, w: &SignedWord, mapping: &[usize]) -> MatrixMorphism {
        let n = w.len();
        let s = self.target.len();
        let src_obj = self.object(w);
        let tgt_word = {
            let mut signs = vec![Sign::Plus; n];
            for (k, &m) in mapping.iter().enumerate() {
                signs[m] = w.sign(k);
            }
            SignedWord::new(signs)
        };
        let tgt_obj = self.object(&tgt_word);
        let mut out = MatrixMorphism::zero(src_obj, tgt_obj);
        let count = s.checked_pow(n as u32).expect("summand count overflow");
        for c_idx in 0..count {
            // decode the source tuple (left letter major)
            let mut tuple = vec![0usize; n];
            let mut rest = c_idx;
            for k in (0..n).rev() {
                tuple[k] = rest % s;
                rest /= s;
            }
            let mut r_tuple = vec![0usize; n];
            for k in 0..n {
                r_tuple[mapping[k]] = tuple[k];
            }
            let r_idx = r_tuple.iter().fold(0usize, |acc, &x| acc * s + x);
            let words: Vec<SignedWord> = (0..n)
                .map(|k| self.letter_summand(w.sign(k), tuple[k]))
                .collect();
            out.set_block(r_idx, c_idx, block_permutation(&words, mapping));
        }
        out
    }

    /// Diagonal evaluation F(X) (x) F(X)^dual -> 1.
    fn ev_matrix(&self) -> MatrixMorphism {
        let s = self.target.len();
        let src = self.target.tensor(&self.target.dual());
        let mut out = MatrixMorphism::zero(src, SumObject::unit());
        for a in 0..s {
            out.set_block(0, a * s + a, Morphism::ev_word(self.target.summand(a)));
        }
        out
    }

    /// Diagonal coevaluation 1 -> F(X) (x) F(X)^dual.
    fn coev_prime_matrix(&self) -> MatrixMorphism {
        let s = self.target.len();
        let tgt = self.target.tensor(&self.target.dual());
        let mut out = MatrixMorphism::zero(SumObject::unit(), tgt);
        for a in 0..s {
            out.set_block(a * s + a, 0, Morphism::coev_prime_word(self.target.summand(a)));
        }
        out
    }

    fn apply_diagram(&self, d: &Diagram) -> MatrixMorphism {
        let l = factorize(d);
        let f_sb = self.apply_permutation(d.source(), &l.sigma_b);
        // bottom layer: id_u (x) caps (x) bottom markers
        let mut f_bottom = MatrixMorphism::identity(&self.object(l.bottom.target()));
        for _ in 0..l.caps.len() {
            f_bottom = f_bottom.tensor(&self.ev_matrix());
        }
        for _ in 0..l.mbots.len() {
            f_bottom = f_bottom.tensor(&self.point_mate);
        }
        debug_assert_eq!(f_bottom.source(), &self.object(&l.arranged_source));
        let f_sm = self.apply_permutation(&l.u, &l.sigma_m);
        // top layer: id_u2 (x) cups (x) top markers
        let mut f_top = MatrixMorphism::identity(&self.object(l.top.source()));
        for _ in 0..l.cups.len() {
            f_top = f_top.tensor(&self.coev_prime_matrix());
        }
        for _ in 0..l.mtops.len() {
            f_top = f_top.tensor(&self.point);
        }
        debug_assert_eq!(f_top.target(), &self.object(&l.arranged_target));
        let f_st = self.apply_permutation(&l.arranged_target, &l.sigma_t);
        f_st.compose(&f_top)
            .and_then(|m| m.compose(&f_sm))
            .and_then(|m| m.compose(&f_bottom))
            .and_then(|m| m.compose(&f_sb))
            .expect("functor layers compose")
    }

    /// Apply the functor to a morphism, linearly over terms.
    pub fn apply(&self, f: &Morphism) -> MatrixMorphism {
        let mut out = MatrixMorphism::zero(self.object(f.source()), self.object(f.target()));
        for (d, c) in f.terms() {
            out = out
                .add(&self.apply_diagram(d).scale(&self.twist(c)))
                .expect("uniform shape");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cob::enumerate_diagrams;

    fn w(s: &str) -> SignedWord {
        SignedWord::parse(s).unwrap()
    }

    #[test]
    fn factorization_recomposes() {
        for (src, tgt) in [("+-", "+-"), ("++-", "+"), ("-", "++"), ("+--", "-"), ("", "++")] {
            let src = SignedWord::parse(if src.is_empty() { "1" } else { src }).unwrap();
            let tgt = SignedWord::parse(if tgt.is_empty() { "1" } else { tgt }).unwrap();
            for d in enumerate_diagrams(&src, &tgt, true) {
                assert_eq!(recompose(&d), Morphism::from_diagram(d.clone()));
            }
        }
    }

    fn one_plus_x() -> (SumObject, MatrixMorphism) {
        let obj = SumObject::new(vec![SignedWord::unit(), w("+")]);
        let mut point = MatrixMorphism::zero(SumObject::unit(), obj.clone());
        point.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
        (obj, point)
    }

    #[test]
    fn substitution_on_marker_is_the_point() {
        let (obj, point) = one_plus_x();
        let sub = Substitution::new(obj, point.clone()).unwrap();
        let f = Morphism::from_diagram(Diagram::new(
            SignedWord::unit(),
            w("+"),
            vec![],
            vec![Point::Top(0)],
        ));
        assert_eq!(sub.apply(&f), point);
    }

    #[test]
    fn zero_point_kills_markers() {
        let obj = SumObject::single(w("+"));
        let zero_point = MatrixMorphism::zero(SumObject::unit(), obj.clone());
        let sub = Substitution::new(obj, zero_point).unwrap();
        let f = Morphism::from_diagram(Diagram::new(
            SignedWord::unit(),
            w("+"),
            vec![],
            vec![Point::Top(0)],
        ));
        assert!(sub.apply(&f).is_zero());
        // and a marker-free morphism maps to itself (single-summand target X)
        let id = Morphism::identity(&w("+"));
        assert_eq!(sub.apply(&id), MatrixMorphism::from_single(id.clone()));
    }

    #[test]
    fn functoriality_spot_check() {
        let (obj, point) = one_plus_x();
        let sub = Substitution::new(obj, point).unwrap();
        // compose two pointed basis morphisms and compare images
        let f = &enumerate_diagrams(&w("-"), &SignedWord::unit(), true)[0];
        let g = &enumerate_diagrams(&SignedWord::unit(), &w("+"), true)[0];
        let f = Morphism::from_diagram(f.clone());
        let g = Morphism::from_diagram(g.clone());
        let gf = g.compose(&f).unwrap();
        assert_eq!(
            sub.apply(&gf),
            sub.apply(&g).compose(&sub.apply(&f)).unwrap()
        );
        assert_eq!(sub.apply(&g.tensor(&f)), sub.apply(&g).tensor(&sub.apply(&f)));
    }

    #[test]
    fn loops_twist_to_target_dimension() {
        // cap . cup = t . id_1 in the source; the image closes a loop of
        // the target, worth dim(1 (+) X) = 1 + t
        let (obj, point) = one_plus_x();
        let sub = Substitution::new(obj, point).unwrap();
        let cap = Morphism::from_diagram(Diagram::new(
            w("+-"),
            SignedWord::unit(),
            vec![(Point::Bot(0), Point::Bot(1))],
            vec![],
        ));
        let cup = Morphism::from_diagram(Diagram::new(
            SignedWord::unit(),
            w("+-"),
            vec![(Point::Top(0), Point::Top(1))],
            vec![],
        ));
        let loop_scalar = cap.compose(&cup).unwrap();
        let image = sub.apply(&loop_scalar);
        assert_eq!(image, sub.apply(&cap).compose(&sub.apply(&cup)).unwrap());
        let expected = MatrixMorphism::identity(&SumObject::unit())
            .scale(&RatFunc::from_qpoly(&QPoly::one() + &QPoly::t_pow(1)));
        assert_eq!(image, expected);
    }

    #[test]
    fn split_point_certifies_nonnilpotence() {
        // substitute(f^{(x)n}, 1 (+) X, inclusion) followed by projection^{(x)n}
        // is the identity of the unit
        let (obj, point) = one_plus_x();
        let sub = Substitution::new(obj.clone(), point).unwrap();
        let f = Morphism::from_diagram(Diagram::new(
            SignedWord::unit(),
            w("+"),
            vec![],
            vec![Point::Top(0)],
        ));
        let mut proj = MatrixMorphism::zero(obj.clone(), SumObject::unit());
        proj.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
        for n in 1..=3usize {
            let mut fn_tensor = f.clone();
            let mut proj_n = proj.clone();
            for _ in 1..n {
                fn_tensor = fn_tensor.tensor(&f);
                proj_n = proj_n.tensor(&proj);
            }
            let image = sub.apply(&fn_tensor);
            let composite = proj_n.compose(&image).unwrap();
            assert!(composite.is_identity(), "retraction failed at n = {}", n);
        }
    }
}
