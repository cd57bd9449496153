//! End-to-end acceptance checks. Each test prints a single pass/fail
//! line for its criterion; the assertions make failures fatal.

use cobcat::brauer::{
    cross_pairing, dickson_check, end_algebra, gram_of_end, semisimplicity_certificate,
    twisted_pairing,
};
use cobcat::cob::{
    dimension, enumerate_diagram_basis, enumerate_diagrams, Diagram, MatrixMorphism, Morphism,
    Sign, SignedWord, SumObject,
};
use cobcat::cobplus::{nilpotence_window_check, Substitution};
use cobcat::exactalg::{IntPoly, PolyMatrix, RatFunc};
use cobcat::symgrp::{
    character_table, count_syt, cycle_type, decompose_generator, factorial, parity_leading_check,
    permutations,
};
use rand::prelude::*;
use rand_chacha::ChaCha20Rng;

fn verdict(n: usize, what: &str, pass: bool) {
    println!(
        "criterion {:2}: {} ... {}",
        n,
        what,
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {} failed", n);
}

#[test]
fn criterion_01_twisted_gram_degree_law() {
    let mut ok = true;
    for (i, want) in [(1usize, 1usize), (2, 4), (3, 18), (4, 96)] {
        let tw = twisted_pairing(i);
        ok &= tw.is_signed_monic() && tw.det.degree() == Some(want);
    }
    verdict(1, "twisted pairing determinants are signed-monic of degree i*i!", ok);
}

#[test]
fn criterion_02_semisimplicity_certificate() {
    let cert = semisimplicity_certificate(4).expect("certificate completes");
    let cells: Vec<(usize, usize)> = cert.steps.iter().map(|s| (s.i, s.j)).collect();
    let mut ok = true;
    for size in 1..=4usize {
        for i in 0..=size {
            ok &= cells.contains(&(i, size - i));
        }
    }
    // every recorded determinant witness is a nonzero polynomial
    ok &= cert
        .steps
        .iter()
        .filter(|s| s.name.ends_with("det"))
        .all(|s| s.witness != "0");
    verdict(2, "semisimplicity certified for all i+j <= 4", ok);
}

#[test]
fn criterion_03_cross_pairing_identification() {
    let mut ok = true;
    for i in 1..=3usize {
        for j in 1..=(4 - i).min(3) {
            if i + j > 4 {
                continue;
            }
            let cp = cross_pairing(i, j);
            ok &= cp.matches_smaller_gram && !cp.det.is_zero();
        }
    }
    verdict(3, "cross pairing equals the smaller Gram matrix after bending", ok);
}

#[test]
fn criterion_04_trace_formula() {
    let mut ok = true;
    let mut total = 0usize;
    for i in 1..=5usize {
        let w = SignedWord::generator(i, 0);
        for p in permutations(i) {
            let d = Diagram::permutation(&w, &p);
            let tr = Morphism::from_diagram(d).trace().unwrap();
            let cycles = cycle_type(&p).len();
            ok &= tr == RatFunc::t_pow(cycles);
            total += 1;
        }
    }
    ok &= total == (1..=5).map(factorial).sum::<usize>();
    verdict(4, "closure trace of every permutation is t^(cycle count)", ok);
}

#[test]
fn criterion_05_dimension_law() {
    let mut ok = true;
    for i in 0..=5usize {
        for j in 0..=(5 - i) {
            ok &= dimension(&SignedWord::generator(i, j)) == RatFunc::t_pow(i + j);
        }
    }
    verdict(5, "dimension of X^(i,j) is t^(i+j) for i+j <= 5", ok);
}

#[test]
fn criterion_06_decomposition_identities() {
    let mut ok = true;
    for i in 0..=4usize {
        for j in 0..=(4 - i) {
            if i + j == 0 {
                continue;
            }
            // identities are verified inside decompose_generator
            let dec = decompose_generator(i, j).expect("identities hold");
            for rec in dec.records.iter().filter(|r| r.level == (i, j)) {
                ok &= parity_leading_check(rec, i, j);
            }
        }
    }
    verdict(6, "decomposition identities and parity/leading checks for i+j <= 4", ok);
}

fn words_up_to(len: usize) -> Vec<SignedWord> {
    let mut out = vec![SignedWord::unit()];
    for n in 1..=len {
        for mask in 0..(1u32 << n) {
            let signs = (0..n)
                .map(|k| {
                    if mask >> k & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            out.push(SignedWord::new(signs));
        }
    }
    out
}

#[test]
fn criterion_07_hom_structure() {
    let words = words_up_to(3);
    let mut ok = true;
    for src in &words {
        for tgt in &words {
            let plain = enumerate_diagrams(src, tgt, false);
            let pointed = enumerate_diagrams(src, tgt, true);
            let defect = tgt.excess() - src.excess();
            ok &= plain.is_empty() == (defect != 0);
            ok &= pointed.is_empty() == (defect < 0);
            if defect == 0 {
                ok &= plain == pointed; // canonical bijection: marker-free lists agree
            }
        }
    }
    verdict(7, "hom emptiness and defect-zero bijection over words of length <= 3", ok);
}

#[test]
fn criterion_08_nilpotence_window() {
    let mut ok = true;
    for n in 1..=2usize {
        let rep = nilpotence_window_check(n);
        ok &= rep.window_holds() && rep.max_nonzero_chain >= 1;
    }
    verdict(8, "grading window: 2n+1 chains vanish, shorter nonzero chains exist", ok);
}

#[test]
fn criterion_09_enc_mechanics() {
    let f = {
        let b = enumerate_diagrams(&SignedWord::unit(), &SignedWord::generator(1, 0), true);
        Morphism::from_diagram(b[0].clone())
    };
    let obj = SumObject::new(vec![SignedWord::unit(), SignedWord::generator(1, 0)]);
    let mut point = MatrixMorphism::zero(SumObject::unit(), obj.clone());
    point.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
    let mut proj = MatrixMorphism::zero(obj.clone(), SumObject::unit());
    proj.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
    let sub = Substitution::new(obj, point).unwrap();

    let words = words_up_to(2);
    let mut ok = true;
    let mut fk = f.clone();
    let mut proj_k = proj.clone();
    for n in 1..=4usize {
        if n > 1 {
            fk = fk.tensor(&f);
            proj_k = proj_k.tensor(&proj);
        }
        for z in &words {
            let w = Morphism::identity(z).tensor(&fk);
            ok &= !w.is_zero() && w.num_terms() == 1;
        }
        ok &= proj_k.compose(&sub.apply(&fk)).unwrap().is_identity();
        ok &= fk.project_markers().is_zero();
    }
    verdict(9, "tensor powers of the universal map stay nonzero and split under substitution", ok);
}

#[test]
fn criterion_10_oracle_cross_checks() {
    let mut ok = true;
    // the regular-trace oracle agrees with the certified conclusion
    for i in 0..=3usize {
        for j in 0..=(3 - i) {
            if i + j == 0 {
                continue;
            }
            ok &= dickson_check(&end_algebra(i, j).pres);
        }
    }
    // fraction-free determinants match cofactor expansion on small matrices
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    let mut pool: Vec<PolyMatrix> = Vec::new();
    for n in 1..=4usize {
        for _ in 0..8 {
            pool.push(PolyMatrix::from_fn(n, n, |_, _| {
                let coeffs: Vec<i64> =
                    (0..=rng.gen_range(0..3)).map(|_| rng.gen_range(-3..=3)).collect();
                IntPoly::from_i64s(&coeffs)
            }));
        }
    }
    for m in &pool {
        ok &= m.det_fraction_free().unwrap() == m.det_cofactor().unwrap();
    }
    // gram matrices via structure constants agree with direct closure:
    // asserted inside gram_of_end for every entry
    for i in 0..=3usize {
        for j in 0..=(3 - i) {
            if i + j == 0 {
                continue;
            }
            let _ = gram_of_end(&end_algebra(i, j));
        }
    }
    // character tables: both orthogonality relations and tableau counts
    for n in 1..=5usize {
        let t = character_table(n);
        ok &= t.row_orthogonality() && t.column_orthogonality();
        for lam in &t.parts {
            ok &= t.degree(lam) == count_syt(lam);
        }
    }
    verdict(10, "independent oracles agree (regular trace, cofactor, tableaux)", ok);
}

// ---- criterion 11: seeded property suites ----

struct Sampler {
    rng: ChaCha20Rng,
    words: Vec<SignedWord>,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha20Rng::seed_from_u64(seed),
            words: words_up_to(2),
        }
    }

    fn word(&mut self) -> SignedWord {
        self.words[self.rng.gen_range(0..self.words.len())].clone()
    }

    /// Random pointed morphism: a small integer combination of basis
    /// diagrams (zero when the hom space is empty).
    fn morphism(&mut self, src: &SignedWord, tgt: &SignedWord) -> Morphism {
        let basis = enumerate_diagrams(src, tgt, true);
        let mut out = Morphism::zero(src.clone(), tgt.clone());
        for d in basis {
            let c = self.rng.gen_range(-2i64..=2);
            if c != 0 {
                out = out.add(&Morphism::from_scaled_diagram(d, RatFunc::from_i64(c)));
            }
        }
        out
    }

    /// A composable pair g∘f through a random middle word.
    fn pair(&mut self) -> (Morphism, Morphism) {
        let (a, b, c) = (self.word(), self.word(), self.word());
        (self.morphism(&a, &b), self.morphism(&b, &c))
    }
}

#[test]
fn criterion_11_property_suites() {
    const SAMPLES: usize = 200;
    let mut ok = true;

    // associativity and unitality
    let mut s = Sampler::new(11);
    for _ in 0..SAMPLES {
        let (f, g) = s.pair();
        let d = s.word();
        let h = s.morphism(&g.target().clone(), &d);
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        assert_eq!(left, right, "associativity");
        ok &= Morphism::identity(f.target()).compose(&f).unwrap() == f;
        ok &= f.compose(&Morphism::identity(f.source())).unwrap() == f;
    }

    // interchange law
    let mut s = Sampler::new(12);
    for _ in 0..SAMPLES {
        let (f1, g1) = s.pair();
        let (f2, g2) = s.pair();
        let lhs = g1.tensor(&g2).compose(&f1.tensor(&f2)).unwrap();
        let rhs = g1.compose(&f1).unwrap().tensor(&g2.compose(&f2).unwrap());
        assert_eq!(lhs, rhs, "interchange");
    }

    // trace cyclicity and closure vs categorical trace
    let mut s = Sampler::new(13);
    for _ in 0..SAMPLES {
        let (a, b) = (s.word(), s.word());
        let f = s.morphism(&a, &b);
        let g = s.morphism(&b, &a);
        let gf = g.compose(&f).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(gf.trace().unwrap(), fg.trace().unwrap(), "cyclicity");
        assert_eq!(gf.trace().unwrap(), gf.trace_categorical().unwrap(), "cat trace");
    }

    // snake identities for every sampled word
    let mut s = Sampler::new(14);
    for _ in 0..SAMPLES {
        let w = s.word();
        let d = w.dual();
        let tri1 = Morphism::ev_word(&w)
            .tensor(&Morphism::identity(&w))
            .compose(&Morphism::identity(&w).tensor(&Morphism::coev_word(&w)))
            .unwrap();
        assert!(tri1.is_identity(), "snake 1 at {}", w);
        let tri2 = Morphism::identity(&d)
            .tensor(&Morphism::ev_word(&w))
            .compose(&Morphism::coev_word(&w).tensor(&Morphism::identity(&d)))
            .unwrap();
        assert!(tri2.is_identity(), "snake 2 at {}", w);
    }

    // functoriality of the marker-killing projection
    let mut s = Sampler::new(15);
    for _ in 0..SAMPLES {
        let (f, g) = s.pair();
        let gf = g.compose(&f).unwrap();
        ok &= gf.project_markers()
            == g.project_markers().compose(&f.project_markers()).unwrap();
        ok &= f.tensor(&g).project_markers()
            == f.project_markers().tensor(&g.project_markers());
    }

    // functoriality of substitution at the split pointing
    let obj = SumObject::new(vec![SignedWord::unit(), SignedWord::generator(1, 0)]);
    let mut point = MatrixMorphism::zero(SumObject::unit(), obj.clone());
    point.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
    let sub = Substitution::new(obj, point).unwrap();
    let mut s = Sampler::new(16);
    for _ in 0..SAMPLES {
        let (f, g) = s.pair();
        let gf = g.compose(&f).unwrap();
        assert_eq!(sub.apply(&gf), sub.apply(&g).compose(&sub.apply(&f)).unwrap(), "subst compose");
        assert_eq!(sub.apply(&f.tensor(&g)), sub.apply(&f).tensor(&sub.apply(&g)), "subst tensor");
    }

    verdict(11, "seeded property suites (200 samples each), zero failures", ok);
}

#[test]
fn trace_matches_hom_count_under_duality() {
    // cross-check used while freezing oracles: End basis counts
    for i in 0..=2usize {
        for j in 0..=(2 - i) {
            if i + j == 0 {
                continue;
            }
            let w = SignedWord::generator(i, j);
            assert_eq!(enumerate_diagram_basis(&w, &w).len(), factorial(i + j));
        }
    }
}
