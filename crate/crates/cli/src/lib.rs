//! The `symcoef` command line.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! with explicit arguments, environment and output buffers.

use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use symcoef::characters::{character_mn, TableStore};
use symcoef::conjectures::{self, VerificationReport};
use symcoef::constants::{self, TripleQuery};
use symcoef::partition::{enumerate_partitions, partition_count, Composition, Partition};
use symcoef::tableau::{count_syt_hlf, enumerate_syt, rsk, Permutation, Tableau};
use symcoef::{Engine, Error, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

pub const CACHE_ENV: &str = "SYMCOEF_CACHE_DIR";

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Json(_) => EXIT_USAGE,
        Error::Domain(_) => EXIT_DOMAIN,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Internal(_) | Error::Integrity(_) | Error::Io(_) => EXIT_INTERNAL,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) | Error::Json(_) => "usage",
        Error::Domain(_) => "domain",
        Error::Capacity(_) => "capacity",
        Error::Internal(_) | Error::Integrity(_) | Error::Io(_) => "internal",
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "symcoef",
    version,
    about = "Exact structure constants of symmetric functions and S_n characters"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    output: OutputFormat,
    /// Character-table cache directory (overrides SYMCOEF_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest n for character tables.
    #[arg(long, global = true, default_value_t = 18, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    /// Variables available to the plethysm engine.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    var_budget: u64,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Seed for sampled suites.
    #[arg(long, global = true, default_value_t = conjectures::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn composition_arg(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition data and enumeration.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Standard Young tableaux.
    #[command(subcommand)]
    Syt(SytCmd),
    /// RSK of a permutation in one-line notation, e.g. 3,1,2.
    Rsk { word: String },
    /// Kostka number K_{shape, content}.
    Kostka {
        #[arg(value_parser = partition_arg)]
        shape: Partition,
        #[arg(value_parser = composition_arg)]
        content: Composition,
    },
    /// Littlewood-Richardson coefficient c^outer_{inner, other}.
    Lr {
        #[arg(value_parser = partition_arg)]
        outer: Partition,
        #[arg(value_parser = partition_arg)]
        inner: Partition,
        #[arg(value_parser = partition_arg)]
        other: Partition,
    },
    /// Symmetric-group characters.
    #[command(subcommand)]
    Character(CharacterCmd),
    /// Kronecker coefficient g(a, b, c).
    Kron {
        #[arg(value_parser = partition_arg)]
        a: Partition,
        #[arg(value_parser = partition_arg)]
        b: Partition,
        #[arg(value_parser = partition_arg)]
        c: Partition,
    },
    /// Multiplicity of lambda in the symmetric square of mu.
    Sk {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// Coefficient of s_lambda in s_outer[s_inner].
    Pleth {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        inner: Partition,
        #[arg(value_parser = partition_arg)]
        outer: Partition,
    },
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Evaluate a JSON-lines query file.
    Batch { file: PathBuf },
    /// Character-table cache.
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Subcommand, Debug)]
enum PartitionCmd {
    Info {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
    },
    Enumerate {
        n: usize,
        #[arg(long)]
        max_part: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    Count {
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SytCmd {
    Count {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
    },
    List {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
    },
}

#[derive(Subcommand, Debug)]
enum CharacterCmd {
    Value {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = composition_arg)]
        alpha: Composition,
    },
    Table {
        n: usize,
    },
}

#[derive(Args, Debug)]
struct SizeArg {
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// g(δ_k, δ_k, μ) > 0 for every μ ⊢ k(k+1)/2
    Saxl {
        #[arg(long)]
        k: usize,
    },
    /// Self-conjugate λ ⊢ n whose tensor square contains every irreducible
    TensorSquare(SizeArg),
    /// g(λ, λ, μ) ≥ |χ^μ(λ̂)| for self-conjugate λ ⊢ n
    CharBound(SizeArg),
    /// a_λ(d[n]) ≥ a_λ(n[d]) for d > n
    Foulkes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// a_λ((n+1)[n]) = 1 + a_λ(n[n+1]) for λ = (n² - 2, n, 2)
    Dip(SizeArg),
    /// g(λ, n^d, n^d) ≥ a_λ(d[n]) for λ = (nd - |ρ|, ρ)
    KronPleth {
        #[arg(long, value_parser = partition_arg, requires_all = ["n", "d"])]
        rho: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Check every (rho, n, d) with nd up to this bound instead.
        #[arg(long, conflicts_with = "rho")]
        all: Option<usize>,
    },
    /// Sampled semigroup inequalities for positive Kronecker triples
    Semigroup {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 10)]
        size: usize,
    },
    /// sk(λ, μ) ≤ g(λ, μ, μ) for all λ, μ ⊢ n
    SkBound(SizeArg),
    /// Durfee-size threshold for full tensor squares, up to n
    Durfee(SizeArg),
}

#[derive(Subcommand, Debug)]
enum CacheCmd {
    /// List cached tables and whether each validates
    Status,
    /// Delete cached tables
    Clear,
}

/// What a command prints, in both formats.
struct Reply {
    text: String,
    json: Value,
    code: i32,
}

impl Reply {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Reply {
            text: text.into(),
            json,
            code: EXIT_OK,
        }
    }
}

fn number(v: impl ToString) -> Value {
    Value::Number(v.to_string().parse().expect("integers are JSON numbers"))
}

#[derive(Serialize)]
struct ValueRecord<'a> {
    value: Value,
    op: &'a str,
    args: Vec<String>,
}

/// Runs the CLI. `env_cache_dir` is the value of `SYMCOEF_CACHE_DIR`.
pub fn run<I, S>(
    argv: I,
    env_cache_dir: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    if let Some(t) = cli.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global();
    }
    let cache_dir = cli
        .cache_dir
        .clone()
        .or(env_cache_dir)
        .or_else(|| dirs::cache_dir().map(|d| d.join("symcoef")));
    let limits = Limits {
        max_n: cli.max_n as usize,
        var_budget: cli.var_budget as usize,
        ..Limits::default()
    };
    let engine = Engine::new(limits, cache_dir);
    if let Command::Batch { file } = &cli.command {
        return batch(&engine, file, out, err);
    }
    match dispatch(&engine, &cli) {
        Ok(reply) => {
            let body = match cli.output {
                OutputFormat::Text => reply.text,
                OutputFormat::Json => serde_json::to_string(&reply.json).expect("json"),
            };
            let _ = writeln!(out, "{}", body.trim_end_matches('\n'));
            reply.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn query(engine: &Engine, op: &str, args: Vec<String>) -> symcoef::Result<Reply> {
    let value = evaluate(engine, op, &args)?;
    let text = match &value {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    };
    let json = serde_json::to_value(ValueRecord { value, op, args }).expect("json");
    Ok(Reply::new(text, json))
}

fn dispatch(engine: &Engine, cli: &Cli) -> symcoef::Result<Reply> {
    let s = |p: &Partition| p.to_string();
    match &cli.command {
        Command::Partition(PartitionCmd::Info { lambda }) => Ok(partition_info(lambda)),
        Command::Partition(PartitionCmd::Enumerate {
            n,
            max_part,
            max_len,
        }) => {
            let parts =
                enumerate_partitions(*n, *max_part, *max_len, engine.limits().enumeration_cap)?;
            let text = parts
                .iter()
                .map(|p| p.to_string() + "\n")
                .collect::<String>();
            Ok(Reply::new(text, json!(parts)))
        }
        Command::Partition(PartitionCmd::Count { n }) => {
            query(engine, "partition_count", vec![n.to_string()])
        }
        Command::Syt(SytCmd::Count { lambda }) => query(engine, "syt_count", vec![s(lambda)]),
        Command::Syt(SytCmd::List { lambda }) => {
            let all = enumerate_syt(lambda, engine.limits().tableau_cap)?;
            let text = all
                .iter()
                .map(|t| tableau_text(t) + "\n")
                .collect::<String>();
            Ok(Reply::new(text, json!(all)))
        }
        Command::Rsk { word } => {
            let w = parse_word(word)?;
            let (p, q) = rsk(&w);
            let text = format!("P: {}\nQ: {}", tableau_text(&p), tableau_text(&q));
            Ok(Reply::new(text, json!({"word": w.word(), "p": p, "q": q})))
        }
        Command::Kostka { shape, content } => {
            query(engine, "kostka", vec![s(shape), content.to_string()])
        }
        Command::Lr {
            outer,
            inner,
            other,
        } => query(engine, "lr", vec![s(outer), s(inner), s(other)]),
        Command::Character(CharacterCmd::Value { lambda, alpha }) => {
            query(engine, "character", vec![s(lambda), alpha.to_string()])
        }
        Command::Character(CharacterCmd::Table { n }) => character_table(engine, *n),
        Command::Kron { a, b, c } => query(engine, "kronecker", vec![s(a), s(b), s(c)]),
        Command::Sk { lambda, mu } => query(engine, "sk", vec![s(lambda), s(mu)]),
        Command::Pleth {
            lambda,
            inner,
            outer,
        } => query(engine, "pleth", vec![s(lambda), s(inner), s(outer)]),
        Command::Verify(v) => verify(engine, v, cli.seed),
        Command::Cache(CacheCmd::Status) => cache_status(engine.tables()),
        Command::Cache(CacheCmd::Clear) => {
            let removed = engine.tables().clear()?;
            Ok(Reply::new(
                format!("removed {removed}"),
                json!({"removed": removed}),
            ))
        }
        Command::Batch { .. } => unreachable!("handled before dispatch"),
    }
}

fn parse_word(s: &str) -> symcoef::Result<Permutation> {
    let word = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("{s:?} is not a permutation word")))
        })
        .collect::<symcoef::Result<Vec<_>>>()?;
    Permutation::new(word).map_err(|e| match e {
        Error::Domain(m) => Error::Parse(m),
        e => e,
    })
}

fn tableau_text(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn partition_info(lambda: &Partition) -> Reply {
    let hooks = lambda.hook_lengths();
    let f = count_syt_hlf(lambda);
    let z = lambda.z_value();
    let mut text = String::new();
    let hooks_text = hooks
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" / ");
    let _ = writeln!(text, "partition: {lambda}");
    let _ = writeln!(text, "size: {}", lambda.size());
    let _ = writeln!(text, "length: {}", lambda.len());
    let _ = writeln!(text, "conjugate: {}", lambda.conjugate());
    let _ = writeln!(text, "durfee: {}", lambda.durfee());
    let _ = writeln!(text, "hooks: {hooks_text}");
    let _ = writeln!(text, "syt: {f}");
    let _ = write!(text, "z: {z}");
    let mut json = json!({
        "partition": lambda,
        "size": lambda.size(),
        "length": lambda.len(),
        "conjugate": lambda.conjugate(),
        "durfee": lambda.durfee(),
        "hooks": hooks,
        "syt": number(&f),
        "z": number(&z),
    });
    if let Ok(ph) = lambda.principal_hooks() {
        let _ = write!(text, "\nprincipal hooks: {ph}");
        json["principal_hooks"] = json!(ph);
    }
    Reply::new(text, json)
}

fn character_table(engine: &Engine, n: usize) -> symcoef::Result<Reply> {
    let table = engine.character_table(n)?;
    let header: Vec<String> = table.partitions().iter().map(|p| p.to_string()).collect();
    let mut grid = vec![std::iter::once(String::new())
        .chain(header.iter().cloned())
        .collect::<Vec<_>>()];
    for (p, row) in table.partitions().iter().zip(table.values()) {
        grid.push(
            std::iter::once(p.to_string())
                .chain(row.iter().map(i128::to_string))
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut text = String::new();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(j, (c, w))| {
                if j == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        let _ = writeln!(text, "{}", cells.join("  ").trim_end());
    }
    let values: Vec<Vec<Value>> = table
        .values()
        .iter()
        .map(|r| r.iter().map(number).collect())
        .collect();
    Ok(Reply::new(
        text,
        json!({"n": n, "partitions": table.partitions(), "values": values}),
    ))
}

fn cache_status(store: &TableStore) -> symcoef::Result<Reply> {
    let entries = store.status()?;
    let dir = store
        .dir()
        .map(|d| d.display().to_string())
        .unwrap_or_default();
    let mut text = format!("cache: {dir}\n");
    for e in &entries {
        let state = if e.valid { "ok" } else { "invalid" };
        let _ = writeln!(text, "n={} {} bytes {state}", e.n, e.bytes);
    }
    Ok(Reply::new(text, json!({"dir": dir, "tables": entries})))
}

fn verify(engine: &Engine, cmd: &VerifyCmd, seed: u64) -> symcoef::Result<Reply> {
    let report = match cmd {
        VerifyCmd::Saxl { k } => conjectures::saxl_check(engine, *k)?,
        VerifyCmd::TensorSquare(a) => conjectures::tensor_square_search(engine, a.n)?,
        VerifyCmd::CharBound(a) => conjectures::char_bound_check(engine, a.n)?,
        VerifyCmd::Foulkes { n, d } => conjectures::foulkes_check(engine, *n, *d)?,
        VerifyCmd::Dip(a) => conjectures::dip_identity_check(engine, a.n)?,
        VerifyCmd::KronPleth { rho, n, d, all } => match (rho, all) {
            (_, Some(bound)) => conjectures::kron_pleth_all(engine, *bound)?,
            (rho, None) => {
                let rho = rho.clone().unwrap_or_default();
                match (n, d) {
                    (Some(n), Some(d)) => conjectures::kron_pleth_check(engine, &rho, *n, *d)?,
                    _ => {
                        return Err(Error::Parse(
                            "kron-pleth needs --n and --d, or --all".into(),
                        ))
                    }
                }
            }
        },
        VerifyCmd::Semigroup { samples, size } => {
            conjectures::semigroup_check(engine, *samples, *size, seed)?
        }
        VerifyCmd::SkBound(a) => conjectures::sk_bound_check(engine, a.n)?,
        VerifyCmd::Durfee(a) => conjectures::durfee_threshold_report(engine, a.n)?,
    };
    Ok(report_reply(&report))
}

fn report_reply(report: &VerificationReport) -> Reply {
    let mut text = report.summary();
    for f in &report.failures {
        let inputs: Vec<String> = f.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = write!(
            text,
            "\n  counterexample {}: {} {} {} fails",
            inputs.join(" "),
            f.lhs,
            f.relation,
            f.rhs
        );
    }
    for w in &report.witnesses {
        let shown = match w {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let _ = write!(text, "\n  witness {shown}");
    }
    let mut reply = Reply::new(text, serde_json::to_value(report).expect("json"));
    if report.is_fatal() {
        reply.code = EXIT_INTERNAL;
    }
    reply
}

fn arg_partition(args: &[String], i: usize) -> symcoef::Result<Partition> {
    args[i].parse()
}

fn arg_usize(args: &[String], i: usize) -> symcoef::Result<usize> {
    args[i]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{:?} is not a nonnegative integer", args[i])))
}

/// Evaluates one query. Shared by single-query subcommands and batch lines.
pub fn evaluate(engine: &Engine, op: &str, args: &[String]) -> symcoef::Result<Value> {
    let arity = match op {
        "kronecker"
        | "kron"
        | "lr"
        | "pleth"
        | "plethysm_coefficient"
        | "pleth_a"
        | "kronecker_schur_weyl"
        | "two_row_rect"
        | "murnaghan" => 3,
        "kostka" | "kostka_via_lr" | "sk" | "symmetric_kronecker" | "character" => 2,
        "syt_count" | "partition_count" => 1,
        _ => return Err(Error::Parse(format!("unknown op {op:?}"))),
    };
    if args.len() != arity {
        return Err(Error::Parse(format!(
            "{op} takes {arity} arguments, got {}",
            args.len()
        )));
    }
    let p = |i| arg_partition(args, i);
    let triple = || -> symcoef::Result<TripleQuery> { Ok(TripleQuery::new(p(0)?, p(1)?, p(2)?)) };
    let value = match op {
        "kronecker" | "kron" => number(engine.kronecker(&triple()?)?),
        "kronecker_schur_weyl" => {
            let q = triple()?;
            let (r, s) = (q.second.len().max(1), q.third.len().max(1));
            number(engine.kronecker_schur_weyl(&q, r, s)?)
        }
        "lr" => number(constants::lr_coefficient(&p(0)?, &p(1)?, &p(2)?)?),
        "pleth" | "plethysm_coefficient" => {
            number(engine.plethysm_coefficient(&p(0)?, &p(1)?, &p(2)?)?)
        }
        "pleth_a" => number(engine.pleth_a(&p(0)?, arg_usize(args, 1)?, arg_usize(args, 2)?)?),
        "two_row_rect" => number(constants::kronecker_two_row_rect(
            &p(0)?,
            arg_usize(args, 1)?,
            arg_usize(args, 2)?,
        )?),
        "murnaghan" => Value::Bool(engine.murnaghan_stable_check(&p(0)?, &p(1)?, &p(2)?)?),
        "kostka" => number(engine.kostka(&p(0)?, &args[1].parse()?)?),
        "kostka_via_lr" => number(constants::kostka_via_lr(&p(0)?, &p(1)?)?),
        "sk" | "symmetric_kronecker" => number(engine.symmetric_kronecker(&p(0)?, &p(1)?)?),
        "character" => {
            let (lambda, alpha): (Partition, Composition) = (p(0)?, args[1].parse()?);
            let n = lambda.size();
            if alpha.size() == n && n <= engine.limits().max_n {
                number(
                    engine
                        .character_table(n)?
                        .value(&lambda, &alpha.to_partition())?,
                )
            } else {
                number(character_mn(&lambda, &alpha)?)
            }
        }
        "syt_count" => number(count_syt_hlf(&p(0)?)),
        "partition_count" => number(partition_count(arg_usize(args, 0)?)),
        _ => unreachable!(),
    };
    Ok(value)
}

#[derive(Deserialize)]
struct BatchLine {
    op: String,
    #[serde(default)]
    args: Vec<Value>,
}

#[derive(Serialize)]
struct BatchRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    op: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    args: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
}

fn batch_line(engine: &Engine, line: &str) -> BatchRecord {
    let fail = |op, args, e: &Error| BatchRecord {
        op,
        args,
        value: None,
        error: Some(json!({"kind": error_kind(e), "message": e.to_string()})),
    };
    let parsed: BatchLine = match serde_json::from_str(line) {
        Ok(p) => p,
        Err(e) => {
            return fail(
                None,
                None,
                &Error::Parse(format!("malformed query line: {e}")),
            )
        }
    };
    let args: Vec<String> = parsed
        .args
        .iter()
        .map(|a| match a {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect();
    match evaluate(engine, &parsed.op, &args) {
        Ok(v) => BatchRecord {
            op: Some(parsed.op),
            args: Some(parsed.args),
            value: Some(v),
            error: None,
        },
        Err(e) => fail(Some(parsed.op), Some(parsed.args), &e),
    }
}

/// One output line per nonblank input line, in input order.
fn batch(engine: &Engine, file: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let lines: Vec<String> =
        match std::fs::File::open(file).and_then(|f| BufReader::new(f).lines().collect()) {
            Ok(lines) => lines,
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", file.display());
                return EXIT_USAGE;
            }
        };
    let records: Vec<BatchRecord> = lines
        .par_iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| batch_line(engine, l))
        .collect();
    for r in records {
        let _ = writeln!(out, "{}", serde_json::to_string(&r).expect("json"));
    }
    EXIT_OK
}
