//! `cubical`: decide equalities, enumerate hom-sets and rerun the
//! strict-test experiments from the command line.
//!
//! Exit codes: 0 for equal / pass, 1 for unequal / fail, 2 for usage or
//! input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cubical::axioms::{axiom_soundness, AxiomResult, AXIOMS};
use cubical::cube::{CubeCategory, HomBounds, Morphism};
use cubical::experiments::{
    build_a, contraction_collapse, coslice_initial_check, render_table2, table2_report, verify_a_homotopy,
};
use cubical::generate::two_three_agreement;
use cubical::homotopy::{asphericity, homology, nerve, FinCat, FinCatData};
use cubical::term::{check_discipline, parse_term, Term};
use cubical::{free_algebra, FiniteAlgebra, Language, Signature, StructuralRules, Theory};

#[derive(Parser)]
#[command(name = "cubical", version, about = "Cube categories as substructural algebraic theories")]
struct Cli {
    /// Print a structured report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct CategoryArgs {
    /// Structural rules: a subset of `wec` (contraction needs exchange), or `∅`.
    #[arg(long)]
    rules: Option<StructuralRules>,
    /// Signature: a subset of `jmr` (∨, ∧, ′), or `∅`.
    #[arg(long)]
    sig: Option<Signature>,
    /// canonical (Kleene for the full language), demorgan or boolean.
    #[arg(long, default_value = "canonical")]
    theory: Theory,
}

impl CategoryArgs {
    fn language(&self) -> Result<Language> {
        let rules = self.rules.ok_or_else(|| anyhow!("--rules is required"))?;
        let sig = self.sig.ok_or_else(|| anyhow!("--sig is required"))?;
        Ok(Language::new(rules, sig))
    }

    fn category(&self) -> Result<CubeCategory> {
        Ok(CubeCategory::new(self.language()?, self.theory)?)
    }

    fn echo(&self) -> Value {
        json!({
            "rules": self.rules.map(|r| r.to_string()),
            "sig": self.sig.map(|s| s.to_string()),
            "theory": self.theory.to_string(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two terms are equal.
    TermEq {
        #[command(flatten)]
        cat: CategoryArgs,
        #[arg(long)]
        arity: usize,
        lhs: String,
        rhs: String,
        /// Decide over this algebra (JSON) instead of the theory's own.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Enumerate hom([m], [n]).
    Hom {
        #[command(flatten)]
        cat: CategoryArgs,
        m: usize,
        n: usize,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        /// Maximum number of morphisms to enumerate.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Check the axiom table against the decision algebra.
    Axioms {
        #[command(flatten)]
        cat: CategoryArgs,
        /// Check against this algebra (JSON) instead.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Factor a morphism into degeneracies, symmetry, reversals and faces.
    Factorize {
        #[command(flatten)]
        cat: CategoryArgs,
        /// Source arity.
        #[arg(long)]
        arity: usize,
        components: Vec<String>,
    },
    /// Elements of the free algebra on m generators (cartesian rules only).
    FreeAlgebra {
        #[command(flatten)]
        cat: CategoryArgs,
        generators: usize,
        #[arg(long)]
        list: bool,
    },
    /// Compare equality over TWO and THREE on random term pairs.
    Agreement {
        #[command(flatten)]
        cat: CategoryArgs,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 2)]
        max_arity: usize,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Homology of the nerve of a finite category given as JSON.
    Homology {
        input: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Rerun one of the strict-test experiments.
    Experiment {
        name: ExperimentName,
        #[command(flatten)]
        cat: CategoryArgs,
        /// Largest slice dimension for coslice-check.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Write the obstruction poset as Graphviz.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExperimentName {
    APoset,
    AHomology,
    CosliceCheck,
    ContractionCollapse,
    Table2,
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Value,
    claim: String,
    pass: bool,
    elapsed_ms: f64,
    results: Value,
}

struct Outcome {
    inputs: Value,
    claim: String,
    pass: bool,
    results: Value,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let report = Report {
                    command,
                    inputs: out.inputs,
                    claim: out.claim,
                    pass: out.pass,
                    elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
                    results: out.results,
                };
                let _ = writeln!(io::stdout(), "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                let _ = write!(io::stdout(), "{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::TermEq { cat, arity, lhs, rhs, algebra } => term_eq(cat, *arity, lhs, rhs, algebra.as_deref()),
        Command::Hom { cat, m, n, count, list, bound } => hom(cat, *m, *n, *list && !*count, *bound),
        Command::Axioms { cat, algebra } => axioms(cat, algebra.as_deref()),
        Command::Factorize { cat, arity, components } => factorize(cat, *arity, components),
        Command::FreeAlgebra { cat, generators, list } => free(cat, *generators, *list),
        Command::Agreement { cat, pairs, max_arity, max_depth, seed } => {
            agreement(cat, *pairs, *max_arity, *max_depth, *seed)
        }
        Command::Homology { input, max_dim, dot } => fincat_homology(input, *max_dim, dot.as_deref()),
        Command::Experiment { name, cat, max_dim, dot } => experiment(*name, cat, *max_dim, dot.as_deref()),
    }
}

fn parse_checked(text: &str, arity: usize, lang: Language) -> Result<Term> {
    let t = parse_term(text, arity, lang.signature).with_context(|| format!("parsing `{text}`"))?;
    if !check_discipline(std::slice::from_ref(&t), arity, lang.rules) {
        bail!("`{t}` violates the {} discipline over {arity} variables", lang.rules);
    }
    Ok(t)
}

fn term_eq(cat: &CategoryArgs, arity: usize, lhs: &str, rhs: &str, algebra: Option<&Path>) -> Result<Outcome> {
    let lang = cat.language()?;
    let (s, t) = (parse_checked(lhs, arity, lang)?, parse_checked(rhs, arity, lang)?);
    let alg = match algebra {
        Some(p) => FiniteAlgebra::load(p)?,
        None => cat.category()?.algebra().clone(),
    };
    let witness = alg.counterexample(&s, &t, arity)?;
    let equal = witness.is_none();
    let shown = witness.as_ref().map(|w| alg.format_assignment(w));
    let text = match &shown {
        None => format!("equal: {s} = {t} (decided over {})\n", alg.name()),
        Some(w) => format!("unequal: {s} ≠ {t} (decided over {}), witness {w}\n", alg.name()),
    };
    Ok(Outcome {
        inputs: json!({ "category": cat.echo(), "arity": arity, "lhs": lhs, "rhs": rhs, "algebra": algebra }),
        claim: "equality of terms is decidable by truth tables over a finite algebra".into(),
        pass: equal,
        results: json!({ "equal": equal, "algebra": alg.name(), "witness": shown }),
        text,
    })
}

fn hom(cat: &CategoryArgs, m: usize, n: usize, list: bool, bound: Option<usize>) -> Result<Outcome> {
    let c = cat.category()?;
    let mut bounds = HomBounds::default();
    if let Some(b) = bound {
        bounds.max_morphisms = b;
    }
    let set = c.enumerate_hom_bounded(m, n, bounds)?;
    let mut text = String::new();
    if list {
        for e in &set.entries {
            text.push_str(&format!("{}\n", e.witness));
        }
    } else {
        text = format!("{}\n", set.len());
    }
    let morphisms: Vec<&Morphism> = set.morphisms().collect();
    Ok(Outcome {
        inputs: json!({ "category": cat.echo(), "m": m, "n": n }),
        claim: "morphisms are identified by their function tables".into(),
        pass: true,
        results: if list { json!({ "count": set.len(), "morphisms": morphisms }) } else { json!({ "count": set.len() }) },
        text,
    })
}

fn axioms(cat: &CategoryArgs, algebra: Option<&Path>) -> Result<Outcome> {
    let lang = cat.language()?;
    let results: Vec<AxiomResult> = match algebra {
        Some(p) => {
            let alg = FiniteAlgebra::load(p)?;
            AXIOMS.iter().filter(|a| a.applies_to(lang)).map(|a| a.check(&alg)).collect::<Result<_, _>>()?
        }
        None => axiom_soundness(lang, cat.theory)?.results,
    };
    let pass = results.iter().all(|r| r.holds);
    let mut text = String::new();
    for r in &results {
        let mark = if r.holds { "holds" } else { "FAILS" };
        text.push_str(&format!("{mark:<6} {:<20} {}", r.name, r.equation));
        if let Some(w) = &r.witness {
            text.push_str(&format!("  [{w}]"));
        }
        text.push('\n');
    }
    Ok(Outcome {
        inputs: json!({ "category": cat.echo(), "algebra": algebra }),
        claim: "every axiom stated in a language holds in its decision algebra".into(),
        pass,
        results: serde_json::to_value(&results)?,
        text,
    })
}

fn factorize(cat: &CategoryArgs, arity: usize, components: &[String]) -> Result<Outcome> {
    let c = cat.category()?;
    let lang = c.language();
    let terms = components
        .iter()
        .map(|s| parse_term(s, arity, lang.signature).with_context(|| format!("parsing `{s}`")))
        .collect::<Result<Vec<_>>>()?;
    let f = c.morphism(arity, terms)?;
    let fac = c.factorize(&f)?;
    let ok = c.morphisms_equal(&fac.recompose(), &f)?;
    let text = format!(
        "{f}\n  degeneracy {}\n  symmetry   {}\n  reversal   {}\n  face       {}\n  iso: {}\n",
        fac.degeneracy(),
        fac.symmetry(),
        fac.reversal(),
        fac.face_map(),
        fac.is_iso()
    );
    Ok(Outcome {
        inputs: json!({ "category": cat.echo(), "arity": arity, "components": components }),
        claim: "degeneracies, then symmetries, then reversals, then faces".into(),
        pass: ok,
        results: json!({ "morphism": f, "factorization": fac, "is_iso": fac.is_iso(), "recomposes": ok }),
        text,
    })
}

fn free(cat: &CategoryArgs, generators: usize, list: bool) -> Result<Outcome> {
    let fa = free_algebra(cat.language()?, cat.theory, generators)?;
    let terms: Vec<String> = fa.elements.iter().map(|(_, t)| t.to_string()).collect();
    let text = if list { terms.iter().map(|t| format!("{t}\n")).collect() } else { format!("{}\n", fa.len()) };
    Ok(Outcome {
        inputs: json!({ "category": cat.echo(), "generators": generators }),
        claim: "free algebra as the closure of projections in the decision algebra".into(),
        pass: true,
        results: json!({ "count": fa.len(), "elements": if list { Some(terms) } else { None } }),
        text,
    })
}

fn agreement(cat: &CategoryArgs, pairs: usize, max_arity: usize, max_depth: usize, seed: u64) -> Result<Outcome> {
    let rep = two_three_agreement(cat.language()?, pairs, max_arity, max_depth, seed)?;
    let pass = rep.disagreements.is_empty();
    let mut text = format!(
        "{}: {} pairs, {} equal over TWO, {} disagreements\n",
        rep.language,
        rep.pairs,
        rep.equal_pairs,
        rep.disagreements.len()
    );
    for d in rep.disagreements.iter().take(5) {
        text.push_str(&format!("  {} vs {} over {} variables\n", d.lhs, d.rhs, d.arity));
    }
    Ok(Outcome {
        inputs: json!({ "category": cat.echo(), "pairs": pairs, "max_arity": max_arity, "max_depth": max_depth, "seed": seed }),
        claim: "below the full language, TWO and THREE decide the same equalities".into(),
        pass,
        results: serde_json::to_value(&rep)?,
        text,
    })
}

fn write_dot(path: Option<&Path>, dot: impl FnOnce() -> String) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, dot()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn fincat_homology(input: &Path, max_dim: Option<usize>, dot: Option<&Path>) -> Result<Outcome> {
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let data: FinCatData = serde_json::from_str(&text).with_context(|| format!("parsing {}", input.display()))?;
    let c = FinCat::build(data)?;
    write_dot(dot, || c.to_dot(&input.display().to_string()))?;
    let n = nerve(&c, max_dim)?;
    let h = homology(&n);
    let asph = asphericity(&c)?;
    let euler_ok = h.euler_from_betti() == n.euler_characteristic();
    let truncated = max_dim.is_some();
    let text = format!(
        "f-vector {:?}\n{h}\n{asph}\n{}",
        n.f_vector(),
        if truncated { "top degree of a truncated nerve is an upper bound\n" } else { "" }
    );
    Ok(Outcome {
        inputs: json!({ "input": input, "max_dim": max_dim }),
        claim: "integer homology of the nerve via Smith normal form".into(),
        pass: euler_ok && n.chain_complex().boundary_squares_to_zero(),
        results: json!({
            "f_vector": n.f_vector(),
            "homology": h,
            "asphericity": asph,
            "euler_consistent": euler_ok,
        }),
        text,
    })
}

fn experiment(name: ExperimentName, cat: &CategoryArgs, max_dim: usize, dot: Option<&Path>) -> Result<Outcome> {
    if let ExperimentName::Table2 = name {
        let rows = table2_report()?;
        let pass = rows.iter().all(|r| r.pass);
        return Ok(Outcome {
            inputs: json!({}),
            claim: "classification of cube categories with weakening into test and strict test".into(),
            pass,
            text: render_table2(&rows),
            results: serde_json::to_value(&rows)?,
        });
    }
    let c = cat.category()?;
    let inputs = json!({ "category": cat.echo(), "max_dim": max_dim });
    let out = match name {
        ExperimentName::APoset => {
            let a = build_a(&c)?;
            write_dot(dot, || a.to_dot(&c.to_string()))?;
            let covers: Vec<(String, String)> =
                a.covers().into_iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
            let mut text = format!(
                "A for {c}: {} objects, {}\n",
                a.category.object_count(),
                if a.category.is_poset() { "a poset" } else { "not a poset" }
            );
            for (x, y) in &covers {
                text.push_str(&format!("  {x} < {y}\n"));
            }
            Outcome {
                inputs,
                claim: "the obstruction poset is a full subcategory of the slice over the square".into(),
                pass: a.category.is_poset(),
                results: json!({ "objects": a.roles, "covers": covers, "is_poset": a.category.is_poset() }),
                text,
            }
        }
        ExperimentName::AHomology => {
            if dot.is_some() {
                let a = build_a(&c)?;
                write_dot(dot, || a.to_dot(&c.to_string()))?;
            }
            let r = verify_a_homotopy(&c)?;
            let text = format!(
                "A for {c}: f-vector {:?}, {}; expected Betti {:?}: {}\n{}\n",
                r.f_vector,
                r.homology,
                r.expected_betti,
                if r.pass { "PASS" } else { "FAIL" },
                r.asphericity
            );
            Outcome {
                inputs,
                claim: "the obstruction poset is not aspheric".into(),
                pass: r.pass,
                results: serde_json::to_value(&r)?,
                text,
            }
        }
        ExperimentName::CosliceCheck => {
            let r = coslice_initial_check(&c, max_dim)?;
            let mut text = format!(
                "{c}: {}/{} coslices with n ≤ {max_dim} have the expected initial object: {}\n",
                r.passed,
                r.total,
                if r.pass { "PASS" } else { "FAIL" }
            );
            for f in r.failures() {
                text.push_str(&format!(
                    "  {}: expected {}, found {}\n",
                    f.object,
                    f.expected.map_or("?".into(), |x| x.to_string()),
                    f.initial.map_or("no initial object".into(), |x| x.to_string())
                ));
            }
            Outcome {
                inputs,
                claim: "each coslice into the obstruction poset has an initial object".into(),
                pass: r.pass,
                results: serde_json::to_value(&r)?,
                text,
            }
        }
        ExperimentName::ContractionCollapse => {
            let r = contraction_collapse(&c)?;
            if dot.is_some() {
                let a = build_a(&c)?;
                write_dot(dot, || a.to_dot(&c.to_string()))?;
            }
            let text = format!(
                "A for {c}: terminal object {}, {}, {}: {}\n",
                r.terminal.map_or("none".into(), |t| t.to_string()),
                r.homology,
                if r.acyclic { "acyclic" } else { "not acyclic" },
                if r.pass { "PASS" } else { "FAIL" }
            );
            Outcome {
                inputs,
                claim: "with contraction the obstruction poset is contractible".into(),
                pass: r.pass,
                results: serde_json::to_value(&r)?,
                text,
            }
        }
        ExperimentName::Table2 => unreachable!(),
    };
    Ok(out)
}
