//! Report building for the command-line front end. Every subcommand
//! produces a `Report` with a fixed ordering of results and checks, so
//! identical invocations render byte-identically; wall-clock timing is
//! carried separately and only surfaces in the JSON format.

use crate::brauer::{
    cross_pairing, gram_matrix, semisimplicity_certificate, twisted_pairing,
    Certificate,
};
use crate::cob::{enumerate_diagrams, MatrixMorphism, Morphism, SignedWord, SumObject};
use crate::cobplus::{nilpotence_window_check, Substitution};
use crate::error::CobError;
use crate::symgrp::{
    character_table, count_syt, decompose_generator, factorial, parity_leading_check,
};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub timing_ms: u128,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: Vec::new(),
            results: Vec::new(),
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    fn param(&mut self, k: &str, v: impl ToString) {
        self.params.push((k.to_string(), v.to_string()));
    }

    fn result(&mut self, k: &str, v: impl ToString) {
        self.results.push((k.to_string(), v.to_string()));
    }

    fn check(&mut self, name: &str, pass: bool, witness: impl ToString) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness: witness.to_string(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain text, timing omitted so output is reproducible.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "param {} = {}", k, v).unwrap();
        }
        for (k, v) in &self.results {
            writeln!(out, "{}: {}", k, v).unwrap();
        }
        for c in &self.checks {
            writeln!(
                out,
                "check {} {} ({})",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.witness
            )
            .unwrap();
        }
        out
    }

    /// CSV: section,key,value rows; timing omitted.
    pub fn to_csv(&self) -> String {
        let esc = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("section,key,value\n");
        writeln!(out, "command,{},", esc(&self.command)).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "param,{},{}", esc(k), esc(v)).unwrap();
        }
        for (k, v) in &self.results {
            writeln!(out, "result,{},{}", esc(k), esc(v)).unwrap();
        }
        for c in &self.checks {
            writeln!(
                out,
                "check,{},{}",
                esc(&c.name),
                if c.pass { "pass" } else { "FAIL" }
            )
            .unwrap();
        }
        out
    }
}

pub fn cmd_hom(src: &str, tgt: &str, pointed: bool) -> Result<Report, CobError> {
    let src = SignedWord::parse(src)?;
    let tgt = SignedWord::parse(tgt)?;
    let mut r = Report::new("hom");
    r.param("source", &src);
    r.param("target", &tgt);
    r.param("pointed", pointed);
    let basis = enumerate_diagrams(&src, &tgt, pointed);
    for (k, d) in basis.iter().enumerate() {
        r.result(&format!("basis[{}]", k), d);
    }
    r.result("count", basis.len());
    let defect = tgt.excess() - src.excess();
    let expect_empty = if pointed { defect < 0 } else { defect != 0 };
    r.check(
        "emptiness-matches-defect-rule",
        basis.is_empty() == expect_empty,
        format!("defect {}", defect),
    );
    Ok(r)
}

pub fn cmd_gram(i: usize, j: usize) -> Report {
    let mut r = Report::new("gram");
    r.param("i", i);
    r.param("j", j);
    let g = gram_matrix(i, j);
    for a in 0..g.gram.rows() {
        let row: Vec<String> = (0..g.gram.cols())
            .map(|b| g.gram.at(a, b).to_string())
            .collect();
        r.result(&format!("gram[{}]", a), row.join(", "));
    }
    r.result("det", &g.det);
    r.result(
        "degree",
        g.det.degree().map(|d| d.to_string()).unwrap_or("-".into()),
    );
    r.check("gram-det-nonzero", !g.det.is_zero(), &g.det);
    if j == 0 {
        let tw = twisted_pairing(i);
        let want = i * factorial(i);
        r.result("twisted_det", &tw.det);
        r.check(
            "twisted-det-signed-monic",
            tw.is_signed_monic(),
            tw.det.leading().map(|c| c.to_string()).unwrap_or("-".into()),
        );
        r.check(
            "twisted-det-degree",
            tw.det.degree() == Some(want),
            format!("expected {}", want),
        );
    }
    if i >= 1 && j >= 1 {
        let cp = cross_pairing(i, j);
        r.result("cross_pairing_det", &cp.det);
        r.check("cross-pairing-nondegenerate", !cp.det.is_zero(), &cp.det);
        r.check(
            "cross-pairing-matches-smaller-gram",
            cp.matches_smaller_gram,
            format!("End at ({}, {})", i - 1, j),
        );
    }
    r
}

pub fn cmd_semisimple(max: usize, cached: Option<Certificate>) -> (Report, Option<Certificate>) {
    let mut r = Report::new("semisimple");
    r.param("max", max);
    r.param("cached", cached.is_some());
    let cert = match cached {
        Some(c) if c.max_size == max => Ok(c),
        _ => semisimplicity_certificate(max),
    };
    match cert {
        Ok(cert) => {
            for s in &cert.steps {
                r.result(&format!("({},{}) {}", s.i, s.j, s.name), &s.witness);
            }
            r.check(
                "certificate-complete",
                true,
                format!("{} steps", cert.steps.len()),
            );
            (r, Some(cert))
        }
        Err(e) => {
            r.check("certificate-complete", false, e);
            (r, None)
        }
    }
}

pub fn cmd_certify_replay(text: &str) -> Report {
    let mut r = Report::new("certify-replay");
    match Certificate::parse(text) {
        Ok(cert) => {
            r.param("max", cert.max_size);
            r.result("steps", cert.steps.len());
            match cert.replay() {
                Ok(()) => r.check("replay-identical", true, "recomputation matches"),
                Err(e) => r.check("replay-identical", false, e),
            }
        }
        Err(e) => r.check("parse", false, e),
    }
    r
}

pub fn cmd_simples(i: usize, j: usize) -> Report {
    let mut r = Report::new("simples");
    r.param("i", i);
    r.param("j", j);
    match decompose_generator(i, j) {
        Ok(dec) => {
            for rec in &dec.records {
                r.result(
                    &format!("simple {}x{} at ({},{})", rec.lam, rec.mu, rec.level.0, rec.level.1),
                    format!("multiplicity {}, dimension {}", rec.multiplicity, rec.dim_poly),
                );
            }
            r.check("decomposition-identities", true, format!("t^{} and {}!", i + j, i + j));
            let new_ok = dec
                .records
                .iter()
                .filter(|rec| rec.level == (i, j))
                .all(|rec| parity_leading_check(rec, i, j));
            r.check("parity-leading", new_ok, "degree, leading coefficient, parity");
        }
        Err(e) => r.check("decomposition-identities", false, e),
    }
    r
}

pub fn cmd_chartable(n: usize) -> Report {
    let mut r = Report::new("chartable");
    r.param("n", n);
    let t = character_table(n);
    let header: Vec<String> = t.parts.iter().map(|p| p.to_string()).collect();
    r.result("classes", header.join(", "));
    for (k, lam) in t.parts.iter().enumerate() {
        let row: Vec<String> = t.values[k].iter().map(|v| v.to_string()).collect();
        r.result(&format!("chi{}", lam), row.join(", "));
    }
    r.check("row-orthogonality", t.row_orthogonality(), "sum over classes");
    r.check("column-orthogonality", t.column_orthogonality(), "sum over irreducibles");
    let syt_ok = t
        .parts
        .iter()
        .all(|lam| t.degree(lam) == count_syt(lam));
    r.check("degrees-count-standard-tableaux", syt_ok, "identity column");
    r
}

fn universal_map() -> Morphism {
    let basis = enumerate_diagrams(&SignedWord::unit(), &SignedWord::parse("+").unwrap(), true);
    Morphism::from_diagram(basis[0].clone())
}

fn split_pointing() -> (SumObject, MatrixMorphism, MatrixMorphism) {
    let obj = SumObject::new(vec![SignedWord::unit(), SignedWord::parse("+").unwrap()]);
    let mut point = MatrixMorphism::zero(SumObject::unit(), obj.clone());
    point.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
    let mut proj = MatrixMorphism::zero(obj.clone(), SumObject::unit());
    proj.set_block(0, 0, Morphism::identity(&SignedWord::unit()));
    (obj, point, proj)
}

/// Non-nilpotence witnesses for the universal map: tensor powers stay
/// nonzero next to every small generator word, the split substitution
/// admits its retraction, and the zero substitution kills everything.
pub fn cmd_enc(n_max: usize, gen_bound: usize, corrupt_point: bool) -> Report {
    let mut r = Report::new("enc");
    r.param("N", n_max);
    r.param("gen_bound", gen_bound);
    if corrupt_point {
        r.param("corrupt_point", true);
    }
    let f = universal_map();
    let (obj, point, proj) = split_pointing();
    let point = if corrupt_point {
        MatrixMorphism::zero(SumObject::unit(), obj.clone())
    } else {
        point
    };
    let sub = Substitution::new(obj, point).expect("valid pointing");

    let mut words = vec![SignedWord::unit()];
    for i in 0..=gen_bound {
        for j in 0..=(gen_bound - i) {
            if i + j >= 1 {
                words.push(SignedWord::generator(i, j));
            }
        }
    }
    let mut fk = f.clone();
    let mut proj_k = proj.clone();
    for n in 1..=n_max {
        if n > 1 {
            fk = fk.tensor(&f);
            proj_k = proj_k.tensor(&proj);
        }
        for z in &words {
            let witness = Morphism::identity(z).tensor(&fk);
            r.check(
                &format!("nonzero n={} z={}", n, z),
                !witness.is_zero() && witness.num_terms() == 1,
                "single pointed basis element",
            );
        }
        let image = sub.apply(&fk);
        let retract = proj_k.compose(&image).expect("shapes agree");
        r.check(
            &format!("split-retraction n={}", n),
            retract.is_identity(),
            "projection composes to the identity",
        );
        r.check(
            &format!("projection-kills n={}", n),
            fk.project_markers().is_zero(),
            "all terms carry markers",
        );
    }
    r
}

pub fn cmd_nilwindow(n: usize) -> Report {
    let mut r = Report::new("nilwindow");
    r.param("n", n);
    let rep = nilpotence_window_check(n);
    r.result("vanishing_bound", rep.window);
    r.result("max_chain", rep.max_chain);
    r.result("max_nonzero_chain", rep.max_nonzero_chain);
    r.result("chains_checked", rep.chains_checked);
    r.check("window-holds", rep.window_holds(), format!("bound {}", rep.window));
    r.check(
        "nonzero-chain-exists",
        rep.max_nonzero_chain >= 1,
        format!("length {}", rep.max_nonzero_chain),
    );
    r
}

/// Used by tests: simples output rows in the decomposition-table CSV shape.
pub fn decomposition_csv(i: usize, j: usize) -> String {
    let dec = decompose_generator(i, j).expect("certified range");
    let mut out =
        String::from("label,multiplicity,dimension,degree,leading,parity_ok\n");
    for rec in &dec.records {
        let is_new = rec.level == (i, j);
        writeln!(
            out,
            "{}x{},{},{},{},{},{}",
            rec.lam,
            rec.mu,
            rec.multiplicity,
            rec.dim_poly,
            rec.dim_poly.degree().map(|d| d.to_string()).unwrap_or("-".into()),
            rec.dim_poly.leading().map(|c| c.to_string()).unwrap_or("-".into()),
            if is_new { parity_leading_check(rec, i, j) } else { true },
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_reports() {
        let r = cmd_hom("++", "+", false).unwrap();
        assert!(r.all_pass());
        assert!(r.results.iter().any(|(k, v)| k == "count" && v == "0"));
        let r = cmd_hom("1", "+", true).unwrap();
        assert!(r.results.iter().any(|(k, v)| k == "count" && v == "1"));
        let r = cmd_hom("+-", "1", false).unwrap();
        assert!(r.results.iter().any(|(k, v)| k == "count" && v == "1"));
    }

    #[test]
    fn gram_report_two_zero() {
        let r = cmd_gram(2, 0);
        assert!(r.all_pass());
        assert!(r.results.iter().any(|(k, v)| k == "det" && v == "t^4 - t^2"));
    }

    #[test]
    fn enc_smoke_and_negative_control() {
        assert!(cmd_enc(1, 1, false).all_pass());
        assert!(!cmd_enc(1, 1, true).all_pass());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = cmd_nilwindow(1).to_plain();
        let b = cmd_nilwindow(1).to_plain();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip() {
        let r = cmd_gram(1, 1);
        let text = r.to_json();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }
}
