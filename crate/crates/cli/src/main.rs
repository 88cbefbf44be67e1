//! `crystals`: command-line front end for the crystal engine.
//!
//! Words are given in application order: `--word 2,1` applies `s2` first,
//! so it names the element `s1 s2`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crystals::demazure::Demazure;
use crystals::extremal::{
    find_violation, lowest_weight_elements, strong_atom_support, weak_atom_positivity,
};
use crystals::poly::{atom_polynomial, expand_in_atoms, key_polynomial};
use crystals::reproduce::{reproduce, TARGETS};
use crystals::tensor::{decompose, demazure_tensor_test, TensorCrystal};
use crystals::weyl::{min_coset_reps, min_rep_for_composition, ReducedWord, WeylElement};
use crystals::{Crystal, CrystalGraph, CrystalSubset, Partition, Polynomial, Tableau};

#[derive(Parser)]
#[command(
    name = "crystals",
    version,
    about = "Demazure crystals, atoms and extremal subsets in type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Partition, comma separated, e.g. 3,2,0
    #[arg(long)]
    shape: String,
    /// Number of variables; the shape is padded with zeros up to it
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate B(λ) and print it as a listing, DOT or JSON
    Crystal {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// The Demazure crystal B_w(λ) for a reduced word
    Demazure {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Reduced word in application order, e.g. 2,1 (empty for the identity)
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// A crystal Demazure atom, given by shape and word or by a weak composition
    Atom {
        #[arg(long, required_unless_present = "composition")]
        shape: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, conflicts_with_all = ["shape", "rank"])]
        composition: Option<String>,
    },
    /// The key polynomial of a weak composition
    Keypoly {
        #[arg(long)]
        composition: String,
    },
    /// Expand a polynomial (JSON term list, `-` for stdin) in Demazure atoms
    Expand {
        #[arg(long)]
        poly: String,
    },
    /// Test a subset of B(λ) (JSON list of tableaux, `-` for stdin) for extremality
    ExtremalCheck {
        /// Partition giving the ambient crystal
        #[arg(long)]
        crystal: String,
        #[arg(long)]
        subset: String,
    },
    /// Decompose B(λ) ⊗ B(μ), or test a product of Demazure crystals
    Tensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Words `V:W` for B_v(λ) ⊗ B_w(μ), e.g. 1:2,1
        #[arg(long)]
        demazure: Option<String>,
        /// Scan every pair v ∈ W^λ, w ∈ W^μ and compare the two criteria
        #[arg(long, conflicts_with = "demazure")]
        adg: bool,
    },
    /// Recompute a worked example and compare with the embedded data
    Reproduce {
        /// One of figure1, figure2, ex-weak-atom, ex-4.5, ex-4.8, ex-4.9, all
        target: String,
    },
}

/// Failures caused by the input rather than the computation.
#[derive(Debug)]
struct Usage(anyhow::Error);

enum Outcome {
    Ok,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(r: anyhow::Result<T>) -> Result<T, Usage> {
    r.map_err(Usage)
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> anyhow::Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| anyhow!("bad {what} entry '{p}'"))
        })
        .collect()
}

fn parse_shape(shape: &str, rank: Option<usize>) -> anyhow::Result<Partition> {
    let mut parts: Vec<u32> = parse_list(shape, "shape")?;
    if let Some(n) = rank {
        if parts.len() > n {
            bail!("shape {shape} has more than {n} parts");
        }
        parts.resize(n, 0);
    }
    if parts.len() > 9 {
        bail!("rank {} is beyond the supported range", parts.len());
    }
    Ok(Partition::new(parts)?)
}

fn parse_word(word: &str, n: usize) -> anyhow::Result<WeylElement> {
    let letters: Vec<usize> = parse_list(word, "word")?;
    Ok(ReducedWord::new(letters, n)?.product(n))
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

// A closed pipe is not an error for a command-line filter.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("json values serialize") + "\n"));
}

fn labels(subset: &CrystalSubset<'_, CrystalGraph>) -> Vec<String> {
    subset.tableaux().iter().map(|t| t.to_string()).collect()
}

fn expansion_json(expansion: &std::collections::BTreeMap<Vec<u32>, i64>) -> Value {
    Value::Array(
        expansion
            .iter()
            .map(|(b, c)| json!({"composition": b, "coeff": c}))
            .collect(),
    )
}

fn run(command: Command) -> Result<Outcome, Usage> {
    match command {
        Command::Crystal { shape, dot, json } => {
            let lambda = usage(parse_shape(&shape.shape, shape.rank))?;
            let g = CrystalGraph::generate(&lambda);
            if dot {
                emit(&g.to_dot());
            } else if json {
                print_json(&g.to_json());
            } else {
                let mut text = format!("B{lambda}: {} vertices\n", g.num_vertices());
                for v in 0..g.num_vertices() {
                    let edges: Vec<String> = g
                        .indices()
                        .filter_map(|i| g.lower(i, v).map(|u| format!("f{i}->{u}")))
                        .collect();
                    let _ = writeln!(
                        text,
                        "{v}\t{}\t{:?}\t{}",
                        g.tableau(v),
                        g.weight(v),
                        edges.join(" ")
                    );
                }
                emit(&text);
            }
        }
        Command::Demazure { shape, word } => {
            let lambda = usage(parse_shape(&shape.shape, shape.rank))?;
            let w = usage(parse_word(&word, lambda.len()))?;
            let g = CrystalGraph::generate(&lambda);
            let d = Demazure::new(&g);
            let b = usage(d.demazure_crystal(&w).map_err(Into::into))?;
            let rep = usage(crystals::weyl::min_rep(&w, &lambda).map_err(Into::into))?;
            print_json(&json!({
                "shape": lambda,
                "element": w,
                "min_rep": rep,
                "extremal_weight": rep.act_on_composition(lambda.parts()),
                "size": b.len(),
                "character": b.character(),
                "tableaux": labels(&b),
            }));
        }
        Command::Atom {
            shape,
            rank,
            word,
            composition,
        } => {
            let (lambda, w) = match composition {
                Some(c) => {
                    let beta: Vec<u32> = usage(parse_list(&c, "composition"))?;
                    if beta.is_empty() {
                        return Err(Usage(anyhow!("empty composition")));
                    }
                    min_rep_for_composition(&beta)
                }
                None => {
                    let lambda = usage(parse_shape(shape.as_deref().unwrap_or_default(), rank))?;
                    let w = usage(parse_word(&word, lambda.len()))?;
                    (lambda, w)
                }
            };
            let g = CrystalGraph::generate(&lambda);
            let atom = usage(Demazure::new(&g).atom_via_operators(&w).map_err(Into::into))?;
            let beta = w.act_on_composition(lambda.parts());
            print_json(&json!({
                "shape": lambda,
                "element": w,
                "composition": beta,
                "size": atom.len(),
                "character": atom.character(),
                "atom_polynomial": atom_polynomial(&beta),
                "tableaux": labels(&atom),
            }));
        }
        Command::Keypoly { composition } => {
            let beta: Vec<u32> = usage(parse_list(&composition, "composition"))?;
            if beta.is_empty() {
                return Err(Usage(anyhow!("empty composition")));
            }
            let k = key_polynomial(&beta);
            print_json(&json!({"composition": beta, "polynomial": k.to_string(), "terms": k}));
        }
        Command::Expand { poly } => {
            let text = usage(read_input(&poly))?;
            let f: Polynomial = usage(serde_json::from_str(&text).context("parsing polynomial"))?;
            let expansion = usage(expand_in_atoms(&f).map_err(Into::into))?;
            let positive = expansion.values().all(|&c| c >= 0);
            print_json(&json!({
                "expansion": expansion_json(&expansion),
                "verdict": if positive { "weakly atom-positive" } else { "not weakly atom-positive" },
            }));
        }
        Command::ExtremalCheck { crystal, subset } => {
            let lambda = usage(parse_shape(&crystal, None))?;
            let text = usage(read_input(&subset))?;
            let tableaux = usage(parse_tableaux(&text, lambda.len()))?;
            let g = CrystalGraph::generate(&lambda);
            let x = usage(g.subset_from_tableaux(&tableaux).map_err(Into::into))?;
            let d = Demazure::new(&g);
            let violation = find_violation(&x).map(|v| {
                json!({
                    "index": v.index,
                    "string": v.string.iter().map(|&u| g.tableau(u).to_string()).collect::<Vec<_>>(),
                    "present": v.present.iter().map(|&u| g.tableau(u).to_string()).collect::<Vec<_>>(),
                })
            });
            let lowest = lowest_weight_elements(&x).ok().map(|l| labels(&l));
            let weak = usage(weak_atom_positivity(&x.character()).map_err(Into::into))?;
            let strong = strong_atom_support(&x, &d);
            print_json(&json!({
                "shape": lambda,
                "size": x.len(),
                "extremal": violation.is_none(),
                "violation": violation,
                "lowest_weight_elements": lowest,
                "weakly_atom_positive": weak.positive,
                "atom_expansion": expansion_json(&weak.expansion),
                "strong_atom_support": strong,
            }));
        }
        Command::Tensor {
            left,
            right,
            demazure,
            adg,
        } => {
            let lambda = usage(parse_shape(&left, None))?;
            let mu = usage(parse_shape(&right, None))?;
            if lambda.len() != mu.len() {
                return Err(Usage(anyhow!(
                    "factors have ranks {} and {}",
                    lambda.len(),
                    mu.len()
                )));
            }
            let n = lambda.len();
            if let Some(spec) = demazure {
                let (v, w) = usage(
                    spec.split_once(':')
                        .ok_or_else(|| anyhow!("expected V:W, got '{spec}'")),
                )?;
                let v = usage(parse_word(v, n))?;
                let w = usage(parse_word(w, n))?;
                let verdict =
                    usage(demazure_tensor_test(&v, &lambda, &w, &mu).map_err(Into::into))?;
                print_json(&serde_json::to_value(&verdict).expect("verdict serializes"));
            } else if adg {
                let mut rows = Vec::new();
                let mut agree = true;
                for v in min_coset_reps(&lambda) {
                    for w in min_coset_reps(&mu) {
                        let verdict =
                            usage(demazure_tensor_test(&v, &lambda, &w, &mu).map_err(Into::into))?;
                        agree &= verdict.extremal == verdict.direct_sum_of_demazure;
                        rows.push(json!({
                            "left": v,
                            "right": w,
                            "extremal": verdict.extremal,
                            "direct_sum_of_demazure": verdict.direct_sum_of_demazure,
                        }));
                    }
                }
                print_json(
                    &json!({"left": lambda, "right": mu, "cases": rows, "criteria_agree": agree}),
                );
            } else {
                let t = usage(
                    TensorCrystal::new(
                        CrystalGraph::generate(&lambda),
                        CrystalGraph::generate(&mu),
                    )
                    .map_err(Into::into),
                )?;
                let d = usage(decompose(&t).map_err(Into::into))?;
                let table: Vec<Value> = d
                    .iter()
                    .map(|(nu, m)| json!({"shape": nu, "multiplicity": m}))
                    .collect();
                print_json(&json!({
                    "left": lambda,
                    "right": mu,
                    "vertices": t.num_vertices(),
                    "decomposition": table,
                }));
            }
        }
        Command::Reproduce { target } => {
            let targets: Vec<&str> = if target == "all" {
                TARGETS.to_vec()
            } else {
                vec![target.as_str()]
            };
            let mut ok = true;
            for t in targets {
                let report = usage(reproduce(t).map_err(Into::into))?;
                emit(&format!("{report}\n"));
                ok &= report.passed();
            }
            return Ok(if ok { Outcome::Ok } else { Outcome::Fail });
        }
    }
    Ok(Outcome::Ok)
}

/// Accepts a JSON list whose entries are either `{"shape", "rows"}` objects
/// or bare row lists (bottom row first).
fn parse_tableaux(text: &str, n: usize) -> anyhow::Result<Vec<Tableau>> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Full(Tableau),
        Rows(Vec<Vec<u8>>),
    }
    let entries: Vec<Entry> = serde_json::from_str(text).context("parsing subset")?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let t = match e {
            Entry::Full(t) => t,
            Entry::Rows(rows) => Tableau::from_rows(rows, n)?,
        };
        if seen.insert(t.clone()) {
            out.push(t);
        }
    }
    Ok(out)
}
