use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rimhook::crystal::verify::{verify_theorem, THEOREMS};
use rimhook::crystal::{
    build_crystal, e_pow, epsilon, f_pow, phi, reduce, signature, to_dot, to_json, Model,
};
use rimhook::{
    compose_quintuple, core, decompose, is_generalized_l_partition, is_jm, is_l_partition,
    is_weak_l_partition, jm_witness, normalize_witness, regularization_class, regularize,
    removable_rim_hooks, Ell, Error, JmQuintuple, Partition,
};

/// Partition combinatorics of (ell,0)-JM partitions and the reg/ladd crystals.
///
/// Partitions are written `a,b,c` with `-` for the empty partition.
#[derive(Parser)]
#[command(name = "rimhook", version, about)]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Accepted for interface stability; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Plain,
}

#[derive(Args)]
struct Output {
    /// Plain text instead of JSON.
    #[arg(long)]
    plain: bool,

    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl Output {
    fn plain(&self) -> bool {
        self.plain || self.format == Some(Format::Plain)
    }
}

#[derive(Args)]
struct Query {
    #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
    partition: Partition,

    #[arg(long, value_parser = parse_ell)]
    ell: Ell,

    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Predicate {
    #[command(flatten)]
    query: Query,

    /// Exit with status 1 when the answer is false.
    #[arg(long = "assert")]
    assert_true: bool,
}

#[derive(Args)]
struct Operator {
    #[command(flatten)]
    query: Query,

    #[arg(long)]
    residue: usize,

    #[arg(long, default_value = "reg")]
    model: Model,

    /// Apply the operator this many times.
    #[arg(long, default_value_t = 1)]
    times: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Removable ell-rim hooks with their orientation (H, V or M).
    Hooks(Query),
    /// The ell-core.
    Core(Query),
    /// The ell-regularization.
    Regularize(Query),
    /// Every partition with the same regularization.
    Rc(Query),
    IsJm(Predicate),
    /// A hook-length triple showing the partition is not JM.
    Witness {
        #[command(flatten)]
        query: Query,

        /// Report a witness whose mates lie right of and below the pivot.
        #[arg(long)]
        normalized: bool,
    },
    /// The (mu, r, s, rho, sigma) coordinates of a JM partition.
    Decompose(Query),
    /// The JM partition with the given coordinates.
    Compose {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true, default_value = "-")]
        rho: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true, default_value = "-")]
        sigma: Partition,
        #[arg(long, value_parser = parse_ell)]
        ell: Ell,
        #[command(flatten)]
        output: Output,
    },
    IsLpartition(Predicate),
    IsGeneralized(Predicate),
    /// Whether an ell-regular partition is a weak ell-partition.
    IsWeak(Predicate),
    /// The i-signature in one of the two reading orders.
    Sig {
        #[command(flatten)]
        query: Query,
        #[arg(long)]
        residue: usize,
        #[arg(long, default_value = "reg")]
        model: Model,
        /// Cancel -+ pairs first.
        #[arg(long)]
        reduced: bool,
    },
    ApplyE(Operator),
    ApplyF(Operator),
    /// Everything above about one partition.
    Stats(Query),
    /// Export a crystal graph up to a maximum rank.
    Crystal {
        #[arg(long, default_value = "reg")]
        model: Model,
        #[arg(long, value_parser = parse_ell)]
        ell: Ell,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Annotate nodes with jm / l_partition / weak / regular flags (DOT).
        #[arg(long)]
        flag_nodes: bool,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run statement verifiers and print one JSON report per line.
    Verify {
        names: Vec<String>,
        #[arg(long, conflicts_with = "names")]
        all: bool,
        #[arg(long, value_delimiter = ',', default_value = "3", value_parser = parse_ell)]
        ell: Vec<Ell>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_ell(s: &str) -> Result<Ell, String> {
    let v: usize = s.parse().map_err(|_| format!("not a number: {s}"))?;
    Ell::new(v).map_err(|e| e.to_string())
}

/// Failure of a command: 1 for a false assertion or violation, 2 for bad input.
enum Failure {
    Check,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn partition_json(p: &Partition) -> Value {
    json!({ "parts": p.parts(), "text": p.to_string() })
}

fn emit(out: &Output, value: &Value, plain: impl FnOnce() -> String) {
    if out.plain() {
        println!("{}", plain());
    } else {
        println!("{value}");
    }
}

fn emit_partition(out: &Output, p: &Partition) {
    emit(out, &partition_json(p), || p.to_string());
}

fn emit_bool(pred: &Predicate, answer: bool) -> Outcome {
    println!("{answer}");
    if pred.assert_true && !answer {
        return Err(Failure::Check);
    }
    Ok(())
}

fn check_residue(ell: Ell, residue: usize) -> Outcome {
    ell.check_residue(residue).map_err(Failure::from)
}

fn run_operator(op: &Operator, raise: bool) -> Outcome {
    let q = &op.query;
    check_residue(q.ell, op.residue)?;
    let result = if raise {
        f_pow(&q.partition, op.residue, op.times, q.ell, op.model)
    } else {
        e_pow(&q.partition, op.residue, op.times, q.ell, op.model)
    };
    match result {
        Some(p) => emit_partition(&q.output, &p),
        None => emit(&q.output, &Value::Null, || "none".to_string()),
    }
    Ok(())
}

fn stats(q: &Query) -> Outcome {
    let (p, ell) = (&q.partition, q.ell);
    let regular = p.is_regular(ell);
    let weak = if regular {
        Some(is_weak_l_partition(p, ell)?)
    } else {
        None
    };
    let hooks = removable_rim_hooks(p, ell);
    let signatures: Vec<Value> = (0..ell.get())
        .map(|i| {
            json!({
                "residue": i,
                "reg": { "epsilon": epsilon(p, i, ell, Model::MisraMiwa), "phi": phi(p, i, ell, Model::MisraMiwa) },
                "ladd": { "epsilon": epsilon(p, i, ell, Model::Ladder), "phi": phi(p, i, ell, Model::Ladder) },
            })
        })
        .collect();
    let value = json!({
        "partition": partition_json(p),
        "ell": ell.get(),
        "rank": p.rank(),
        "regular": regular,
        "core": partition_json(&core(p, ell)),
        "regularization": partition_json(&regularize(p, ell)),
        "removable_hooks": hooks,
        "jm": is_jm(p, ell),
        "l_partition": is_l_partition(p, ell),
        "generalized": is_generalized_l_partition(p, ell),
        "weak": weak,
        "signatures": signatures,
    });
    emit(&q.output, &value, || {
        let weak = weak.map_or("n/a".to_string(), |w| w.to_string());
        format!(
            "partition {p}\nrank {}\nregular {regular}\ncore {}\nregularization {}\nhooks {}\njm {}\nl_partition {}\ngeneralized {}\nweak {weak}",
            p.rank(),
            core(p, ell),
            regularize(p, ell),
            hooks.len(),
            is_jm(p, ell),
            is_l_partition(p, ell),
            is_generalized_l_partition(p, ell),
        )
    });
    Ok(())
}

fn verify(names: &[String], all: bool, ells: &[Ell], max_n: usize) -> Outcome {
    let names: Vec<String> = if all || names.is_empty() {
        THEOREMS.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    if let Some(bad) = names.iter().find(|n| !THEOREMS.contains(&n.as_str())) {
        return Err(Failure::Usage(format!(
            "unknown theorem {bad:?}; known: {}",
            THEOREMS.join(", ")
        )));
    }
    let mut failed = false;
    let stdout = io::stdout();
    for name in &names {
        for &ell in ells {
            let start = Instant::now();
            let report = verify_theorem(name, ell, max_n)?;
            let elapsed = start.elapsed();
            failed |= !report.passed();
            let line = json!({
                "name": report.name,
                "ell": ell.get(),
                "max_n": max_n,
                "checked": report.checked,
                "violations": report.violations,
                "notes": report.notes,
                "passed": report.passed(),
                "elapsed_ms": elapsed.as_millis() as u64,
            });
            let mut lock = stdout.lock();
            writeln!(lock, "{line}")?;
            lock.flush()?;
        }
    }
    if failed {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Hooks(q) => {
            let hooks = removable_rim_hooks(&q.partition, q.ell);
            emit(&q.output, &json!(hooks), || {
                hooks
                    .iter()
                    .map(|h| {
                        let tag = serde_json::to_value(h.orientation).unwrap();
                        let boxes: Vec<String> = h.boxes.iter().map(ToString::to_string).collect();
                        format!("{} {}: {}", tag.as_str().unwrap(), h.head, boxes.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Core(q) => emit_partition(&q.output, &core(&q.partition, q.ell)),
        Command::Regularize(q) => emit_partition(&q.output, &regularize(&q.partition, q.ell)),
        Command::Rc(q) => {
            let class = regularization_class(&q.partition, q.ell);
            let value = Value::Array(class.iter().map(partition_json).collect());
            emit(&q.output, &value, || {
                class
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::IsJm(pred) => {
            let q = &pred.query;
            return emit_bool(&pred, is_jm(&q.partition, q.ell));
        }
        Command::Witness {
            query: q,
            normalized,
        } => {
            let w = if normalized {
                normalize_witness(&q.partition, q.ell)
            } else {
                jm_witness(&q.partition, q.ell)
            };
            emit(&q.output, &json!(w), || match w {
                Some(w) => format!(
                    "pivot {} row_mate {} col_mate {} normalized {}",
                    w.pivot, w.row_mate, w.col_mate, w.normalized
                ),
                None => "none".to_string(),
            });
        }
        Command::Decompose(q) => {
            let d = decompose(&q.partition, q.ell)?;
            emit(&q.output, &json!(d), || d.to_string());
        }
        Command::Compose {
            mu,
            r,
            s,
            rho,
            sigma,
            ell,
            output,
        } => {
            let p = compose_quintuple(&JmQuintuple::new(mu, r, s, rho, sigma), ell)?;
            emit_partition(&output, &p);
        }
        Command::IsLpartition(pred) => {
            let q = &pred.query;
            return emit_bool(&pred, is_l_partition(&q.partition, q.ell));
        }
        Command::IsGeneralized(pred) => {
            let q = &pred.query;
            return emit_bool(&pred, is_generalized_l_partition(&q.partition, q.ell));
        }
        Command::IsWeak(pred) => {
            let q = &pred.query;
            let answer = is_weak_l_partition(&q.partition, q.ell)?;
            return emit_bool(&pred, answer);
        }
        Command::Sig {
            query: q,
            residue,
            model,
            reduced,
        } => {
            check_residue(q.ell, residue)?;
            let mut w = signature(&q.partition, residue, q.ell, model);
            if reduced {
                w = reduce(&w);
            }
            emit(&q.output, &json!(w), || w.to_string());
        }
        Command::ApplyE(op) => return run_operator(&op, false),
        Command::ApplyF(op) => return run_operator(&op, true),
        Command::Stats(q) => return stats(&q),
        Command::Crystal {
            model,
            ell,
            max_n,
            format,
            flag_nodes,
            output,
        } => {
            let graph = build_crystal(ell, max_n, model);
            let text = match format {
                Format::Dot => to_dot(&graph, flag_nodes),
                Format::Json => to_json(&graph) + "\n",
                Format::Plain => {
                    return Err(Failure::Usage(
                        "crystal supports --format dot or json".into(),
                    ))
                }
            };
            match output {
                Some(path) => fs::write(path, text)?,
                None => io::stdout().write_all(text.as_bytes())?,
            }
        }
        Command::Verify {
            names,
            all,
            ell,
            max_n,
        } => return verify(&names, all, &ell, max_n),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("RIMHOOK_LOG")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
