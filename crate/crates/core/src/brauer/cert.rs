//! Semisimplicity certificates: a replayable transcript of the induction
//! over (i, j) — base group algebras, cross-pairing identification,
//! ideal splitting, quotient recognition, and the Gram determinants
//! witnessing nondegeneracy at every stage.

use super::algebra::{diagram_perm_pair, end_algebra, group_algebra_check};
use super::gram::{cross_pairing, gram_of_end, twisted_pairing};
use super::split::{perfss_split, quotient_gram};
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertStep {
    pub i: usize,
    pub j: usize,
    pub name: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub max_size: usize,
    pub steps: Vec<CertStep>,
}

const CERT_HEADER: &str = "semisimplicity certificate v1";

impl Certificate {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(CERT_HEADER);
        out.push('\n');
        out.push_str(&format!("max-size {}\n", self.max_size));
        for s in &self.steps {
            out.push_str(&format!(
                "step i={} j={} name={} witness={}\n",
                s.i, s.j, s.name, s.witness
            ));
        }
        out.push_str("end\n");
        out
    }

    pub fn parse(text: &str) -> Result<Certificate, AlgebraError> {
        let bad = |step: &str| AlgebraError::CertificateStep {
            i: 0,
            j: 0,
            step: step.to_string(),
        };
        let mut lines = text.lines();
        if lines.next() != Some(CERT_HEADER) {
            return Err(bad("unrecognized certificate header"));
        }
        let max_size = lines
            .next()
            .and_then(|l| l.strip_prefix("max-size "))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("missing max-size line"))?;
        let mut steps = Vec::new();
        for line in lines {
            if line == "end" {
                return Ok(Certificate { max_size, steps });
            }
            let rest = line.strip_prefix("step i=").ok_or_else(|| bad(line))?;
            let (i_str, rest) = rest.split_once(" j=").ok_or_else(|| bad(line))?;
            let (j_str, rest) = rest.split_once(" name=").ok_or_else(|| bad(line))?;
            let (name, witness) = rest.split_once(" witness=").ok_or_else(|| bad(line))?;
            steps.push(CertStep {
                i: i_str.parse().map_err(|_| bad(line))?,
                j: j_str.parse().map_err(|_| bad(line))?,
                name: name.to_string(),
                witness: witness.to_string(),
            });
        }
        Err(bad("missing end marker"))
    }

    /// Recomputes the whole certificate and demands byte-identical steps.
    pub fn replay(&self) -> Result<(), AlgebraError> {
        let fresh = semisimplicity_certificate(self.max_size)?;
        if fresh == *self {
            Ok(())
        } else {
            Err(AlgebraError::CertificateStep {
                i: 0,
                j: 0,
                step: "replay mismatch".into(),
            })
        }
    }
}

fn fail(i: usize, j: usize, step: &str) -> AlgebraError {
    AlgebraError::CertificateStep {
        i,
        j,
        step: step.to_string(),
    }
}

/// Certifies semisimplicity of End(X^{(i,j)}) for all i + j <= max_size
/// by induction on i + j, recording each verified fact with its witness.
pub fn semisimplicity_certificate(max_size: usize) -> Result<Certificate, AlgebraError> {
    assert!(max_size >= 1);
    let mut steps = Vec::new();
    for size in 1..=max_size {
        for i in (0..=size).rev() {
            let j = size - i;
            let end = end_algebra(i, j);
            let gram = gram_of_end(&end);
            if gram.det.is_zero() {
                return Err(fail(i, j, "gram determinant vanishes"));
            }
            steps.push(CertStep {
                i,
                j,
                name: "gram-det".into(),
                witness: gram.det.to_string(),
            });

            if i == 0 || j == 0 {
                let perms: Option<Vec<_>> = end
                    .basis
                    .iter()
                    .map(|d| diagram_perm_pair(d, i))
                    .collect();
                let perms = perms.ok_or_else(|| fail(i, j, "one-sided basis not a group"))?;
                group_algebra_check(&end.pres, &perms)
                    .map_err(|_| fail(i, j, "base group algebra table"))?;
                steps.push(CertStep {
                    i,
                    j,
                    name: "base-group-algebra".into(),
                    witness: format!("dimension {}", end.pres.dim()),
                });
                if j == 0 {
                    let tw = twisted_pairing(i);
                    let fact: usize = (1..=i).product();
                    if !tw.is_signed_monic() || tw.det.degree() != Some(i * fact) {
                        return Err(fail(i, j, "twisted pairing degree law"));
                    }
                    steps.push(CertStep {
                        i,
                        j,
                        name: "twisted-pairing-det".into(),
                        witness: tw.det.to_string(),
                    });
                }
            } else {
                let cp = cross_pairing(i, j);
                if !cp.matches_smaller_gram {
                    return Err(fail(i, j, "cross pairing differs from smaller gram"));
                }
                if cp.det.is_zero() {
                    return Err(fail(i, j, "cross pairing degenerate"));
                }
                steps.push(CertStep {
                    i,
                    j,
                    name: "cross-pairing-det".into(),
                    witness: cp.det.to_string(),
                });
                let split = perfss_split(i, j)?;
                steps.push(CertStep {
                    i,
                    j,
                    name: "ideal-split".into(),
                    witness: format!(
                        "ideal dimension {}, quotient dimension {}",
                        split.ideal.len(),
                        split.quotient.dim()
                    ),
                });
                group_algebra_check(&split.quotient, &split.quotient_perms)
                    .map_err(|_| fail(i, j, "quotient group algebra table"))?;
                steps.push(CertStep {
                    i,
                    j,
                    name: "quotient-group-algebra".into(),
                    witness: format!("Sigma_{} x Sigma_{}", i, j),
                });
                let qdet = quotient_gram(&split).det().expect("square");
                if qdet.is_zero() {
                    return Err(fail(i, j, "quotient gram degenerate"));
                }
                steps.push(CertStep {
                    i,
                    j,
                    name: "quotient-gram-det".into(),
                    witness: qdet.to_string(),
                });
            }
        }
    }
    Ok(Certificate { max_size, steps })
}
