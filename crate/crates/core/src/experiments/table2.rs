use std::fmt::{self, Write as _};

use serde::Serialize;

use super::{contraction_collapse, coslice_initial_check, verify_a_homotopy, ExperimentError};
use crate::algebra::Theory;
use crate::cube::CubeCategory;
use crate::language::{Language, Signature, StructuralRules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "t")]
    Test,
    #[serde(rename = "st")]
    StrictTest,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Test => "t",
            Verdict::StrictTest => "st",
        })
    }
}

/// Why a verdict holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleBasis {
    /// Every canonical cube category has a separated aspheric interval.
    AllTest,
    /// Cartesian cube categories are strict.
    CartesianStrict,
    /// A connection makes the category strict.
    ConnectionStrict,
    /// A non-aspheric obstruction poset rules out strictness.
    NonStrictObstruction,
}

impl fmt::Display for RuleBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleBasis::AllTest => "test: separated aspheric interval",
            RuleBasis::CartesianStrict => "strict: cartesian",
            RuleBasis::ConnectionStrict => "strict: has a connection",
            RuleBasis::NonStrictObstruction => "not strict: obstruction poset",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    SeparatedInterval { pass: bool },
    ObstructionHomology { homology: String, expected_betti: Vec<usize>, pass: bool },
    CosliceInitial { max_dim: usize, cases: usize, passed: usize, pass: bool },
    TerminalCollapse { terminal: Option<String>, acyclic: bool, pass: bool },
}

impl Evidence {
    pub fn pass(&self) -> bool {
        match *self {
            Evidence::SeparatedInterval { pass }
            | Evidence::ObstructionHomology { pass, .. }
            | Evidence::CosliceInitial { pass, .. }
            | Evidence::TerminalCollapse { pass, .. } => pass,
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass() { "ok" } else { "FAILED" };
        match self {
            Evidence::SeparatedInterval { .. } => write!(f, "0 ≠ 1 in [0]→[1] {mark}"),
            Evidence::ObstructionHomology { homology, .. } => write!(f, "A: {homology} {mark}"),
            Evidence::CosliceInitial { max_dim, cases, passed, .. } => {
                write!(f, "coslices n≤{max_dim}: {passed}/{cases} initial {mark}")
            }
            Evidence::TerminalCollapse { terminal, acyclic, .. } => write!(
                f,
                "A: terminal {}, {} {mark}",
                terminal.as_deref().unwrap_or("none"),
                if *acyclic { "acyclic" } else { "not acyclic" }
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table2Row {
    pub rules: StructuralRules,
    pub signature: Signature,
    pub theory: Theory,
    pub verdict: Verdict,
    pub published: Verdict,
    pub basis: Vec<RuleBasis>,
    pub evidence: Vec<Evidence>,
    pub pass: bool,
}

/// The published classification, row by row over the six signatures.
fn published(rules: StructuralRules, sig: Signature) -> Verdict {
    let row: [Verdict; 6] = if rules.contraction() {
        [Verdict::StrictTest; 6]
    } else {
        [Verdict::Test, Verdict::Test, Verdict::StrictTest, Verdict::StrictTest, Verdict::StrictTest, Verdict::StrictTest]
    };
    row[Signature::ALL.iter().position(|&s| s == sig).expect("known signature")]
}

fn classify(rules: StructuralRules, sig: Signature) -> (Verdict, Vec<RuleBasis>) {
    let mut basis = vec![RuleBasis::AllTest];
    if rules.contraction() {
        basis.push(RuleBasis::CartesianStrict);
    }
    if sig.has_connection() {
        basis.push(RuleBasis::ConnectionStrict);
    }
    if basis.len() == 1 {
        basis.push(RuleBasis::NonStrictObstruction);
        (Verdict::Test, basis)
    } else {
        (Verdict::StrictTest, basis)
    }
}

/// Cube categories with weakening, with the verdict derived from the rules
/// and evidence computed. `max_dim` bounds the coslice sweep.
pub fn table2_report_with(max_dim: usize) -> Result<Vec<Table2Row>, ExperimentError> {
    let mut rows = Vec::new();
    for rules in [StructuralRules::W, StructuralRules::WE, StructuralRules::WEC] {
        for sig in Signature::ALL {
            let lang = Language::new(rules, sig);
            let theories: &[Theory] = if lang.is_full() {
                &[Theory::DeMorgan, Theory::Canonical, Theory::Boolean]
            } else {
                &[Theory::Canonical]
            };
            for &theory in theories {
                let cat = CubeCategory::new(lang, theory)?;
                let (verdict, basis) = classify(rules, sig);
                let mut evidence = vec![Evidence::SeparatedInterval { pass: cat.interval_is_separated()? }];
                if basis.contains(&RuleBasis::NonStrictObstruction) {
                    let h = verify_a_homotopy(&cat)?;
                    evidence.push(Evidence::ObstructionHomology {
                        homology: h.homology.to_string(),
                        expected_betti: h.expected_betti,
                        pass: h.pass,
                    });
                    let c = coslice_initial_check(&cat, max_dim)?;
                    evidence.push(Evidence::CosliceInitial { max_dim, cases: c.total, passed: c.passed, pass: c.pass });
                }
                if rules.contraction() && !sig.has_connection() {
                    let c = contraction_collapse(&cat)?;
                    evidence.push(Evidence::TerminalCollapse {
                        terminal: c.terminal.map(|r| r.to_string()),
                        acyclic: c.acyclic,
                        pass: c.pass,
                    });
                }
                let published = published(rules, sig);
                rows.push(Table2Row {
                    rules,
                    signature: sig,
                    theory,
                    verdict,
                    published,
                    basis,
                    pass: verdict == published && evidence.iter().all(Evidence::pass),
                    evidence,
                });
            }
        }
    }
    Ok(rows)
}

pub fn table2_report() -> Result<Vec<Table2Row>, ExperimentError> {
    table2_report_with(3)
}

/// The grid of verdicts followed by one evidence line per cell.
pub fn render_table2(rows: &[Table2Row]) -> String {
    let mut s = String::new();
    let _ = write!(s, "{:<5}", "a\\b");
    for sig in Signature::ALL {
        let _ = write!(s, "{:<10}", sig.to_string());
    }
    s.push('\n');
    for rules in [StructuralRules::W, StructuralRules::WE, StructuralRules::WEC] {
        let _ = write!(s, "{:<5}", rules.to_string());
        for sig in Signature::ALL {
            let cell: Vec<String> = rows
                .iter()
                .filter(|r| r.rules == rules && r.signature == sig)
                .map(|r| r.verdict.to_string())
                .collect();
            let _ = write!(s, "{:<10}", cell.join("/"));
        }
        s.push('\n');
    }
    s.push('\n');
    for r in rows {
        let theory = if Language::new(r.rules, r.signature).is_full() { format!(" [{}]", r.theory) } else { String::new() };
        let evidence: Vec<String> = r.evidence.iter().map(ToString::to_string).collect();
        let basis: Vec<String> = r.basis.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "{} ({},{}){theory}: {} (published {}) | {} | {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.rules,
            r.signature,
            r.verdict,
            r.published,
            basis.join("; "),
            evidence.join("; "),
        );
    }
    s
}
