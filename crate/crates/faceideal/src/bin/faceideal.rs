//! Batch front end: read complexes, ideals, posets, and whisker specs as
//! JSON, run the constructions and theorem checks, and emit a JSON report.
//! Exit status is 0 exactly when every requested check passes.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use faceideal::complex::{ShellingOutcome, SimplicialComplex};
use faceideal::face_ideal::{self, face_order};
use faceideal::homology;
use faceideal::ideal::{MonomialIdeal, QuotientCertificate};
use faceideal::json::{
    faces_from_labels, BettiJson, ComplexJson, IdealJson, PosetJson, WhiskerSpecJson,
};
use faceideal::poset::Poset;
use faceideal::resolution::{self, build_resolution};
use faceideal::whisker::{build_hd_whisker, verify_generalized_theorem, WhiskerSpec};
use faceideal::Result;

#[derive(Parser)]
#[command(name = "faceideal", about = "Face ideals of simplicial complexes: constructions and theorem checks")]
struct Cli {
    /// Render monomials and faces as label strings like "x1*y2"
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators of the face ideal of a complex
    FaceIdeal { complex: String },
    /// Alexander dual of a squarefree monomial ideal
    Dual { ideal: String },
    /// Whisker complex W(Δ), or the higher version with --k/--d
    Whisker {
        complex: String,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        d: Vec<usize>,
    },
    /// Run a theorem check and report pass/fail with witnesses
    Verify {
        kind: VerifyKind,
        input: String,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        d: Vec<usize>,
    },
    /// Betti table of the face ideal by the closed formula
    Betti {
        complex: String,
        /// Cross-check against the homology oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Poset families and invariants
    Poset {
        query: PosetQuery,
        poset: String,
    },
    /// Check a proposed shelling order of the facets
    Shelling {
        complex: String,
        #[arg(long)]
        order: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    /// Alexander dual of the face ideal vs the whiskered nonface complex
    Duality,
    /// The explicit free resolution: ∂² = 0, ranks, degrees, augmentation
    Resolution,
    /// Linear quotients of the face ideal in the size-then-lex face order
    Quotients,
    /// Chain and antichain ideal duals vs whiskered (in)comparability graphs
    ChainTheorem,
    /// Cover ideal linear quotients and induced shelling of a higher whisker
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetQuery {
    Chains,
    Antichains,
    Ideals,
    Dilworth,
    Rank,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((report, pass)) => {
            let mut report = report;
            report["timing_ms"] = json!(start.elapsed().as_millis() as u64);
            report["pass"] = json!(pass);
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_complex(path: &str) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path)?;
    let parsed: ComplexJson = serde_json::from_str(&text)?;
    parsed.to_complex()
}

fn read_ideal(path: &str) -> Result<MonomialIdeal> {
    let text = fs::read_to_string(path)?;
    let parsed: IdealJson = serde_json::from_str(&text)?;
    parsed.to_ideal()
}

fn read_poset(path: &str) -> Result<Poset> {
    let text = fs::read_to_string(path)?;
    let parsed: PosetJson = serde_json::from_str(&text)?;
    parsed.to_poset()
}

fn ideal_value(ideal: &MonomialIdeal, pretty: bool) -> Value {
    if pretty {
        let rendered: Vec<String> =
            ideal.generators().iter().map(|g| ideal.universe().format_monomial(*g)).collect();
        json!(rendered)
    } else {
        serde_json::to_value(IdealJson::from_ideal(ideal)).expect("ideal serializes")
    }
}

fn complex_value(complex: &SimplicialComplex, pretty: bool) -> Value {
    if pretty {
        let rendered: Vec<String> =
            complex.facets().iter().map(|f| complex.universe().format_face(*f)).collect();
        json!(rendered)
    } else {
        serde_json::to_value(ComplexJson::from_complex(complex)).expect("complex serializes")
    }
}

fn spec_from_args(n: usize, k: &[usize], d: &[usize]) -> Result<Option<WhiskerSpec>> {
    if k.is_empty() && d.is_empty() {
        return Ok(None);
    }
    let spec = WhiskerSpec::new(k.to_vec(), d.to_vec());
    spec.validate(n)?;
    Ok(Some(spec))
}

fn run(cli: &Cli) -> Result<(Value, bool)> {
    match &cli.command {
        Command::FaceIdeal { complex } => {
            let c = read_complex(complex)?;
            let result = face_ideal::face_ideal(&c)?;
            let report = json!({
                "command": "face-ideal",
                "input": complex,
                "ideal": ideal_value(&result.ideal, cli.pretty),
            });
            Ok((report, true))
        }
        Command::Dual { ideal } => {
            let i = read_ideal(ideal)?;
            let dual = i.alexander_dual()?;
            let report = json!({
                "command": "dual",
                "input": ideal,
                "ideal": ideal_value(&dual, cli.pretty),
            });
            Ok((report, true))
        }
        Command::Whisker { complex, k, d } => {
            let c = read_complex(complex)?;
            let n = c.universe().size();
            let (w, spec) = match spec_from_args(n, k, d)? {
                Some(spec) => {
                    let hd = build_hd_whisker(&c, &spec)?;
                    (hd.complex().clone(), Some(spec))
                }
                None => (face_ideal::whisker_complex(&c)?, None),
            };
            let report = json!({
                "command": "whisker",
                "input": complex,
                "spec": spec.map(|s| WhiskerSpecJson::from_spec(&s)),
                "complex": complex_value(&w, cli.pretty),
            });
            Ok((report, true))
        }
        Command::Verify { kind, input, k, d } => run_verify(cli, *kind, input, k, d),
        Command::Betti { complex, oracle } => {
            let c = read_complex(complex)?;
            let table = face_ideal::betti_formula(&c);
            let mut report = json!({
                "command": "betti",
                "input": complex,
                "table": BettiJson::from_table(&table),
            });
            let mut pass = true;
            if *oracle {
                let ideal = face_ideal::face_ideal(&c)?.ideal;
                let oracle_table = homology::hochster_betti(&ideal)?;
                let agree = table == oracle_table;
                report["oracle"] = json!({
                    "table": BettiJson::from_table(&oracle_table),
                    "agrees": agree,
                });
                pass = agree;
            }
            Ok((report, pass))
        }
        Command::Poset { query, poset } => {
            let p = read_poset(poset)?;
            let render = |members: &[faceideal::subset::Subset]| -> Vec<Vec<String>> {
                members
                    .iter()
                    .map(|m| m.iter().map(|i| p.labels()[i].clone()).collect())
                    .collect()
            };
            let (key, value) = match query {
                PosetQuery::Chains => ("chains", json!(render(&p.chains()?.members))),
                PosetQuery::Antichains => ("antichains", json!(render(&p.antichains()?.members))),
                PosetQuery::Ideals => ("ideals", json!(render(&p.poset_ideals()?.members))),
                PosetQuery::Dilworth => ("dilworth", json!(p.dilworth_number()?)),
                PosetQuery::Rank => ("rank", json!(p.rank()?)),
            };
            let report = json!({
                "command": "poset",
                "input": poset,
                key: value,
            });
            Ok((report, true))
        }
        Command::Shelling { complex, order } => {
            let c = read_complex(complex)?;
            let text = fs::read_to_string(order)?;
            let faces: Vec<Vec<String>> = serde_json::from_str(&text)?;
            let order_sets = faces_from_labels(c.universe(), &faces)?;
            let outcome = c.verify_shelling(&order_sets)?;
            let (pass, witness) = match &outcome {
                ShellingOutcome::Valid => (true, Value::Null),
                ShellingOutcome::Violation { later, earlier } => (
                    false,
                    json!({ "later_position": later, "earlier_position": earlier }),
                ),
            };
            let report = json!({
                "command": "shelling",
                "input": complex,
                "accepted": pass,
                "witness": witness,
            });
            Ok((report, pass))
        }
    }
}

fn quotient_value(ideal: &MonomialIdeal, cert: &QuotientCertificate, pretty: bool) -> (Value, bool) {
    match cert {
        QuotientCertificate::Certificate(steps) => {
            let steps: Vec<Value> = steps
                .iter()
                .map(|s| {
                    json!({
                        "t": s.t,
                        "variables": if pretty {
                            json!(ideal.universe().format_monomial(s.variables))
                        } else {
                            json!(s.variables.iter().map(|i| ideal.universe().label(i)).collect::<Vec<_>>())
                        },
                    })
                })
                .collect();
            (json!({ "certificate": steps }), true)
        }
        QuotientCertificate::Violation { t, generator } => (
            json!({
                "violation": {
                    "t": t,
                    "generator": ideal.universe().format_monomial(*generator),
                }
            }),
            false,
        ),
    }
}

fn run_verify(
    cli: &Cli,
    kind: VerifyKind,
    input: &str,
    k: &[usize],
    d: &[usize],
) -> Result<(Value, bool)> {
    match kind {
        VerifyKind::Duality => {
            let c = read_complex(input)?;
            let report = face_ideal::verify_duality_theorem(&c)?;
            let value = json!({
                "command": "verify duality",
                "input": input,
                "lhs": ideal_value(&report.lhs, cli.pretty),
                "rhs": ideal_value(&report.rhs, cli.pretty),
                "equal": report.equal,
                "degenerate": report.degenerate,
            });
            Ok((value, report.equal))
        }
        VerifyKind::Resolution => {
            let c = read_complex(input)?;
            let r = build_resolution(&c)?;
            let complex_check = resolution::check_complex(&r);
            let rank_check = resolution::check_ranks_and_degrees(&r, &c);
            let augmentation_check = resolution::check_augmentation(&r, &c);
            let pass = complex_check.ok && rank_check.ok && augmentation_check.ok;
            let witnesses: Vec<String> =
                [complex_check.witness, rank_check.witness, augmentation_check.witness]
                    .into_iter()
                    .flatten()
                    .collect();
            let value = json!({
                "command": "verify resolution",
                "input": input,
                "ranks": r.ranks(),
                "checks": {
                    "differentials_compose_to_zero": complex_check.ok,
                    "ranks_and_degrees": rank_check.ok,
                    "augmentation": augmentation_check.ok,
                },
                "witness": witnesses,
            });
            Ok((value, pass))
        }
        VerifyKind::Quotients => {
            let c = read_complex(input)?;
            let result = face_ideal::face_ideal(&c)?;
            let order = face_order(&result);
            let cert = result.ideal.check_linear_quotients(&order)?;
            let (cert_value, pass) = quotient_value(&result.ideal, &cert, cli.pretty);
            let value = json!({
                "command": "verify quotients",
                "input": input,
                "ideal": ideal_value(&result.ideal, cli.pretty),
                "result": cert_value,
            });
            Ok((value, pass))
        }
        VerifyKind::ChainTheorem => {
            let p = read_poset(input)?;
            let report = faceideal::poset::verify_chain_theorem(&p)?;
            let side = |s: &faceideal::poset::DualSideReport| {
                json!({
                    "lhs": ideal_value(&s.lhs, cli.pretty),
                    "rhs": ideal_value(&s.rhs, cli.pretty),
                    "equal": s.equal,
                    "degenerate": s.degenerate,
                })
            };
            let pass = report.part_a.equal && report.part_b.equal;
            let value = json!({
                "command": "verify chain-theorem",
                "input": input,
                "chain_side": side(&report.part_a),
                "antichain_side": side(&report.part_b),
            });
            Ok((value, pass))
        }
        VerifyKind::Generalized => {
            let c = read_complex(input)?;
            let n = c.universe().size();
            let spec = spec_from_args(n, k, d)?.unwrap_or_else(|| WhiskerSpec::ones(n));
            let w = build_hd_whisker(&c, &spec)?;
            let report = verify_generalized_theorem(&w)?;
            let (ideal, _) = w.cover_ideal_order()?;
            let (cert_value, quotients_ok) = quotient_value(&ideal, &report.quotients, cli.pretty);
            let shelling_ok = report.shelling.as_ref().is_some_and(|s| s.is_valid());
            let pass = report.all_ok();
            let value = json!({
                "command": "verify generalized",
                "input": input,
                "spec": WhiskerSpecJson::from_spec(&spec),
                "cover_ideal": ideal_value(&ideal, cli.pretty),
                "quotients": cert_value,
                "quotients_ok": quotients_ok,
                "shelling_ok": shelling_ok,
                "complement_bijection": report.complement_bijection,
            });
            Ok((value, pass))
        }
    }
}
