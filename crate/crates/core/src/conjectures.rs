//! Verification suites for identities, inequalities and conjecture
//! instances, each producing a [`VerificationReport`].
//!
//! A suite is a list of cells. Each cell names its inputs, evaluates a left
//! and a right side and compares them. Failed cells are stored with their
//! inputs so that [`reproduce`] can evaluate them again from the report
//! alone.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::constants::TripleQuery;
use crate::engine::Engine;
use crate::error::{capacity, domain, Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::plethysm::{plethysm, plethysm_schur_truncated};
use crate::symfunc::{Basis, SymFunc};

/// Largest degree for which suites expand `h_d[h_n]` symbolically; above it
/// they use the polynomial engine within the variable budget.
const SYMBOLIC_SUITE_DEGREE: usize = 16;

pub const DEFAULT_SEED: u64 = 20240917;

pub type Inputs = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "==")]
    Equal,
}

impl Relation {
    fn holds(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Greater => lhs > rhs,
            Relation::AtLeast => lhs >= rhs,
            Relation::Equal => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Greater => ">",
            Relation::AtLeast => ">=",
            Relation::Equal => "==",
        })
    }
}

/// Whether a failure refutes a theorem (a bug) or an open conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Theorem,
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: Inputs,
    #[serde(with = "big_number")]
    pub lhs: BigInt,
    #[serde(with = "big_number")]
    pub rhs: BigInt,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub level: Level,
    pub parameters: BTreeMap<String, Value>,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Value>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// A failed theorem-level suite; conjecture suites never count.
    pub fn is_fatal(&self) -> bool {
        self.level == Level::Theorem && !self.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "pass" } else { "FAIL" };
        format!(
            "{}: {status} ({} checked, {} failures, {} ms)",
            self.suite,
            self.checked,
            self.failures.len(),
            self.elapsed_ms
        )
    }
}

mod big_number {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n: Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
        serde::Serialize::serialize(&n, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = Number::deserialize(d)?;
        n.to_string().parse().map_err(D::Error::custom)
    }
}

/// An evaluated cell.
struct Cell {
    inputs: Inputs,
    lhs: BigInt,
    rhs: BigInt,
    relation: Relation,
}

impl Cell {
    fn failure(self) -> Option<Failure> {
        if self.relation.holds(&self.lhs, &self.rhs) {
            None
        } else {
            Some(Failure {
                inputs: self.inputs,
                lhs: self.lhs,
                rhs: self.rhs,
                relation: self.relation,
            })
        }
    }
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> Inputs {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn get_partition(inputs: &Inputs, key: &str) -> Result<Partition> {
    inputs
        .get(key)
        .ok_or_else(|| Error::Parse(format!("missing input {key}")))?
        .parse()
}

fn get_usize(inputs: &Inputs, key: &str) -> Result<usize> {
    inputs
        .get(key)
        .ok_or_else(|| Error::Parse(format!("missing input {key}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("input {key} is not a nonnegative integer")))
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

/// Evaluates cells for one engine, memoizing plethysm expansions.
pub struct Checker<'a> {
    engine: &'a Engine,
    pleth: Mutex<HashMap<(usize, usize, usize), Arc<BTreeMap<Partition, BigInt>>>>,
}

impl<'a> Checker<'a> {
    pub fn new(engine: &'a Engine) -> Self {
        Checker {
            engine,
            pleth: Mutex::default(),
        }
    }

    fn g(&self, a: &Partition, b: &Partition, c: &Partition) -> Result<BigInt> {
        let q = TripleQuery::new(a.clone(), b.clone(), c.clone());
        Ok(BigInt::from(self.engine.kronecker(&q)?))
    }

    /// `a_λ(d[n])`: symbolic at small degree, otherwise the polynomial engine
    /// in `ℓ(λ)` variables within the budget.
    fn pleth_a(&self, lambda: &Partition, d: usize, n: usize) -> Result<BigInt> {
        if lambda.size() != d * n {
            return domain(format!("|{lambda}| ≠ {d}·{n}"));
        }
        let degree = d * n;
        let nvars = if degree <= SYMBOLIC_SUITE_DEGREE {
            0
        } else {
            let budget = self.engine.limits().var_budget;
            if lambda.len() > budget {
                return capacity(format!(
                    "ℓ({lambda}) = {} exceeds the variable budget {budget}; raise --var-budget",
                    lambda.len()
                ));
            }
            lambda.len().max(1)
        };
        let key = (d, n, nvars);
        let cached = self.pleth.lock().unwrap().get(&key).cloned();
        let expansion = match cached {
            Some(e) => e,
            None => {
                let hd = SymFunc::element(Basis::Homogeneous, &Partition::row(d));
                let hn = SymFunc::element(Basis::Homogeneous, &Partition::row(n));
                let e = if nvars == 0 {
                    plethysm(&hd, &hn)?.integer_coeffs()?
                } else {
                    plethysm_schur_truncated(&hd, &hn, nvars)?
                };
                let e = Arc::new(e);
                self.pleth.lock().unwrap().insert(key, e.clone());
                e
            }
        };
        Ok(expansion.get(lambda).cloned().unwrap_or_default())
    }

    fn full_tensor_square(&self, lambda: &Partition) -> Result<bool> {
        for mu in partitions_of(lambda.size()) {
            if self.g(lambda, lambda, &mu)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Recomputes a cell of `suite` from its inputs.
    fn evaluate(&self, suite: &str, inputs: &Inputs) -> Result<Cell> {
        let p = |k: &str| get_partition(inputs, k);
        let (lhs, rhs, relation) = match suite {
            "saxl" => {
                let (lambda, mu) = (p("lambda")?, p("mu")?);
                (
                    self.g(&lambda, &lambda, &mu)?,
                    BigInt::zero(),
                    Relation::Greater,
                )
            }
            "tensor_square" => {
                let n = get_usize(inputs, "n")?;
                let witnesses = self_conjugate(n)
                    .iter()
                    .map(|l| self.full_tensor_square(l))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .filter(|&w| w)
                    .count();
                (big(witnesses), BigInt::one(), Relation::AtLeast)
            }
            "char_bound" => {
                let (lambda, mu) = (p("lambda")?, p("mu")?);
                let hooks = lambda.principal_hooks()?.to_partition();
                let chi = self
                    .engine
                    .character_table(lambda.size())?
                    .value(&mu, &hooks)?;
                (
                    self.g(&lambda, &lambda, &mu)?,
                    big(chi).magnitude().clone().into(),
                    Relation::AtLeast,
                )
            }
            "foulkes" => {
                let (lambda, n, d) = (
                    p("lambda")?,
                    get_usize(inputs, "n")?,
                    get_usize(inputs, "d")?,
                );
                (
                    self.pleth_a(&lambda, d, n)?,
                    self.pleth_a(&lambda, n, d)?,
                    Relation::AtLeast,
                )
            }
            "dip_identity" => {
                let (lambda, n) = (p("lambda")?, get_usize(inputs, "n")?);
                let lhs = self.pleth_a(&lambda, n + 1, n)?;
                let rhs = self.pleth_a(&lambda, n, n + 1)? + 1;
                (lhs, rhs, Relation::Equal)
            }
            "kron_pleth" => {
                let (lambda, n, d) = (
                    p("lambda")?,
                    get_usize(inputs, "n")?,
                    get_usize(inputs, "d")?,
                );
                let rect = Partition::rectangle(n, d);
                (
                    self.g(&lambda, &rect, &rect)?,
                    self.pleth_a(&lambda, d, n)?,
                    Relation::AtLeast,
                )
            }
            "semigroup" => {
                let (a1, b1, c1) = (p("a1")?, p("b1")?, p("c1")?);
                let (a2, b2, c2) = (p("a2")?, p("b2")?, p("c2")?);
                let g1 = self.g(&a1, &b1, &c1)?;
                let g2 = self.g(&a2, &b2, &c2)?;
                if g1.is_zero() || g2.is_zero() {
                    return domain("semigroup cells need two positive triples");
                }
                match inputs.get("variant").map(String::as_str) {
                    Some("vertical") => {
                        let g =
                            self.g(&a1.add(&a2), &b1.add_vertical(&b2), &c1.add_vertical(&c2))?;
                        (g, BigInt::zero(), Relation::Greater)
                    }
                    _ => {
                        let g = self.g(&a1.add(&a2), &b1.add(&b2), &c1.add(&c2))?;
                        (g, g1.max(g2), Relation::AtLeast)
                    }
                }
            }
            "sk_bound" => {
                let (lambda, mu) = (p("lambda")?, p("mu")?);
                let sk = self.engine.symmetric_kronecker(&lambda, &mu);
                let g = self.g(&lambda, &mu, &mu)?;
                // symmetric_kronecker itself refuses sk > g
                let sk = match sk {
                    Ok(v) => BigInt::from(v),
                    Err(Error::Internal(_)) => &g + 1,
                    Err(e) => return Err(e),
                };
                (g, sk, Relation::AtLeast)
            }
            other => return domain(format!("unknown suite {other}")),
        };
        Ok(Cell {
            inputs: inputs.clone(),
            lhs,
            rhs,
            relation,
        })
    }

    fn run_cells(&self, suite: &str, cells: Vec<Inputs>) -> Result<(u64, Vec<Failure>)> {
        let evaluated: Vec<Cell> = cells
            .par_iter()
            .map(|i| self.evaluate(suite, i))
            .collect::<Result<_>>()?;
        let checked = evaluated.len() as u64;
        Ok((
            checked,
            evaluated.into_iter().filter_map(Cell::failure).collect(),
        ))
    }
}

struct Timer {
    start: Instant,
}

impl Timer {
    fn start() -> Self {
        Timer {
            start: Instant::now(),
        }
    }

    fn ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

fn report(
    suite: &str,
    level: Level,
    parameters: BTreeMap<String, Value>,
    (checked, failures): (u64, Vec<Failure>),
    timer: Timer,
) -> VerificationReport {
    VerificationReport {
        suite: suite.to_string(),
        level,
        parameters,
        checked,
        failures,
        elapsed_ms: timer.ms(),
        seed: None,
        witnesses: Vec::new(),
    }
}

fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn self_conjugate(n: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(Partition::is_self_conjugate)
        .collect()
}

/// `g(δ_k, δ_k, μ) > 0` for every `μ ⊢ k(k+1)/2`.
pub fn saxl_check(engine: &Engine, k: usize) -> Result<VerificationReport> {
    let timer = Timer::start();
    let checker = Checker::new(engine);
    let delta = Partition::staircase(k);
    engine.character_table(delta.size())?;
    let cells = partitions_of(delta.size())
        .into_iter()
        .map(|mu| inputs([("lambda", delta.to_string()), ("mu", mu.to_string())]))
        .collect();
    let outcome = checker.run_cells("saxl", cells)?;
    Ok(report(
        "saxl",
        Level::Conjecture,
        params([("k", k.into())]),
        outcome,
        timer,
    ))
}

/// Self-conjugate `λ ⊢ n` whose tensor square contains every irreducible.
pub fn tensor_square_search(engine: &Engine, n: usize) -> Result<VerificationReport> {
    let timer = Timer::start();
    let checker = Checker::new(engine);
    engine.character_table(n)?;
    let candidates = self_conjugate(n);
    let full: Vec<bool> = candidates
        .par_iter()
        .map(|l| checker.full_tensor_square(l))
        .collect::<Result<_>>()?;
    let witnesses: Vec<Value> = candidates
        .iter()
        .zip(&full)
        .filter(|(_, &w)| w)
        .map(|(l, _)| Value::String(l.to_string()))
        .collect();
    let checked = (candidates.len() * partitions_of(n).len()) as u64;
    let mut failures = Vec::new();
    if n >= 9 && witnesses.is_empty() {
        failures.push(Failure {
            inputs: inputs([("n", n.to_string())]),
            lhs: BigInt::zero(),
            rhs: BigInt::one(),
            relation: Relation::AtLeast,
        });
    }
    let mut r = report(
        "tensor_square",
        Level::Conjecture,
        params([("n", n.into())]),
        (checked, failures),
        timer,
    );
    r.witnesses = witnesses;
    Ok(r)
}

/// `g(λ, λ, μ) ≥ |χ^μ(λ̂)|` for self-conjugate `λ ⊢ n` and all `μ ⊢ n`.
pub fn char_bound_check(engine: &Engine, n: usize) -> Result<VerificationReport> {
    let timer = Timer::start();
    let checker = Checker::new(engine);
    engine.character_table(n)?;
    let cells = self_conjugate(n)
        .into_iter()
        .flat_map(|l| {
            partitions_of(n)
                .into_iter()
                .map(move |mu| inputs([("lambda", l.to_string()), ("mu", mu.to_string())]))
        })
        .collect();
    let outcome = checker.run_cells("char_bound", cells)?;
    Ok(report(
        "char_bound",
        Level::Theorem,
        params([("n", n.into())]),
        outcome,
        timer,
    ))
}

/// `a_λ(d[n]) ≥ a_λ(n[d])` for `d > n` and every `λ ⊢ nd` within the
/// variable budget.
pub fn foulkes_check(engine: &Engine, n: usize, d: usize) -> Result<VerificationReport> {
    if d <= n || n == 0 {
        return domain(format!("Foulkes checks need d > n ≥ 1, got n={n}, d={d}"));
    }
    let timer = Timer::start();
    let checker = Checker::new(engine);
    let budget = engine.limits().var_budget;
    let cells = partitions_of(n * d)
        .into_iter()
        .filter(|l| l.len() <= budget)
        .map(|l| {
            inputs([
                ("lambda", l.to_string()),
                ("n", n.to_string()),
                ("d", d.to_string()),
            ])
        })
        .collect();
    let outcome = checker.run_cells("foulkes", cells)?;
    let parameters = params([
        ("n", n.into()),
        ("d", d.into()),
        ("var_budget", budget.into()),
    ]);
    Ok(report(
        "foulkes",
        Level::Conjecture,
        parameters,
        outcome,
        timer,
    ))
}

/// `a_λ((n+1)[n]) = 1 + a_λ(n[n+1])` for `λ = (n² - 2, n, 2)`.
pub fn dip_identity_check(engine: &Engine, n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return domain("the identity needs n ≥ 2");
    }
    let timer = Timer::start();
    let checker = Checker::new(engine);
    let lambda = Partition::new(vec![n * n - 2, n, 2])?;
    let cells = vec![inputs([
        ("lambda", lambda.to_string()),
        ("n", n.to_string()),
    ])];
    let outcome = checker.run_cells("dip_identity", cells)?;
    Ok(report(
        "dip_identity",
        Level::Theorem,
        params([("n", n.into())]),
        outcome,
        timer,
    ))
}

/// `g(λ, n^d, n^d) ≥ a_λ(d[n])` for `λ = (nd - |ρ|, ρ)`.
pub fn kron_pleth_check(
    engine: &Engine,
    rho: &Partition,
    n: usize,
    d: usize,
) -> Result<VerificationReport> {
    kron_pleth_sweep(
        engine,
        &[(rho.clone(), n, d)],
        params([
            ("rho", Value::String(rho.to_string())),
            ("n", n.into()),
            ("d", d.into()),
        ]),
    )
}

/// Every valid `(ρ, n, d)` with `d ≥ 2`, `n ≥ |ρ|` and `nd ≤ max_size`.
pub fn kron_pleth_all(engine: &Engine, max_size: usize) -> Result<VerificationReport> {
    let mut triples = Vec::new();
    for d in 2..=max_size / 2 {
        for n in 1..=max_size / d {
            for size in 0..=n {
                for rho in partitions_of(size) {
                    if n * d - size >= rho.part(0) {
                        triples.push((rho, n, d));
                    }
                }
            }
        }
    }
    kron_pleth_sweep(engine, &triples, params([("max_size", max_size.into())]))
}

fn kron_pleth_sweep(
    engine: &Engine,
    triples: &[(Partition, usize, usize)],
    parameters: BTreeMap<String, Value>,
) -> Result<VerificationReport> {
    let timer = Timer::start();
    let checker = Checker::new(engine);
    let mut cells = Vec::new();
    for (rho, n, d) in triples {
        let (n, d) = (*n, *d);
        if d < 2 || n < rho.size() {
            return domain(format!(
                "need d ≥ 2 and n ≥ |ρ|, got ρ=({rho}), n={n}, d={d}"
            ));
        }
        let lambda = rho.with_first_part(n * d - rho.size()).map_err(|_| {
            Error::Domain(format!(
                "({}, {rho}) is not a partition",
                n * d - rho.size()
            ))
        })?;
        engine.character_table(n * d)?;
        cells.push(inputs([
            ("lambda", lambda.to_string()),
            ("rho", rho.to_string()),
            ("n", n.to_string()),
            ("d", d.to_string()),
        ]));
    }
    let outcome = checker.run_cells("kron_pleth", cells)?;
    Ok(report(
        "kron_pleth",
        Level::Theorem,
        parameters,
        outcome,
        timer,
    ))
}

/// `sk(λ, μ) ≤ g(λ, μ, μ)` for all `λ, μ ⊢ n`.
pub fn sk_bound_check(engine: &Engine, n: usize) -> Result<VerificationReport> {
    let timer = Timer::start();
    let checker = Checker::new(engine);
    engine.character_table(n)?;
    let shapes = partitions_of(n);
    let cells = shapes
        .iter()
        .flat_map(|l| {
            shapes
                .iter()
                .map(move |m| inputs([("lambda", l.to_string()), ("mu", m.to_string())]))
        })
        .collect();
    let outcome = checker.run_cells("sk_bound", cells)?;
    Ok(report(
        "sk_bound",
        Level::Theorem,
        params([("n", n.into())]),
        outcome,
        timer,
    ))
}

/// Samples pairs of positive triples with `|α¹| + |α²| ≤ max_size` and checks
/// both the horizontal inequality and the mixed horizontal/vertical
/// positivity on each pair.
pub fn semigroup_check(
    engine: &Engine,
    samples: usize,
    max_size: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if max_size < 2 {
        return domain("semigroup sampling needs a size bound of at least 2");
    }
    engine.character_table(max_size)?;
    let timer = Timer::start();
    let checker = Checker::new(engine);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = Vec::with_capacity(2 * samples);
    let draw_positive = |n: usize, rng: &mut ChaCha8Rng| -> Result<[Partition; 3]> {
        let shapes = partitions_of(n);
        loop {
            let t: [Partition; 3] =
                std::array::from_fn(|_| shapes[rng.gen_range(0..shapes.len())].clone());
            if !checker.g(&t[0], &t[1], &t[2])?.is_zero() {
                return Ok(t);
            }
        }
    };
    for _ in 0..samples {
        let n1 = rng.gen_range(1..max_size);
        let n2 = rng.gen_range(1..=max_size - n1);
        let [a1, b1, c1] = draw_positive(n1, &mut rng)?;
        let [a2, b2, c2] = draw_positive(n2, &mut rng)?;
        for variant in ["horizontal", "vertical"] {
            cells.push(inputs([
                ("a1", a1.to_string()),
                ("b1", b1.to_string()),
                ("c1", c1.to_string()),
                ("a2", a2.to_string()),
                ("b2", b2.to_string()),
                ("c2", c2.to_string()),
                ("variant", variant.to_string()),
            ]));
        }
    }
    let outcome = checker.run_cells("semigroup", cells)?;
    let parameters = params([("samples", samples.into()), ("max_size", max_size.into())]);
    let mut r = report("semigroup", Level::Theorem, parameters, outcome, timer);
    r.seed = Some(seed);
    Ok(r)
}

/// For each `n ≤ max_n`, the least `k` such that every self-conjugate,
/// non-square `λ ⊢ n` with Durfee size above `k` has a full tensor square.
/// Recorded as witnesses; nothing is asserted.
pub fn durfee_threshold_report(engine: &Engine, max_n: usize) -> Result<VerificationReport> {
    let timer = Timer::start();
    let checker = Checker::new(engine);
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for n in 1..=max_n {
        engine.character_table(n)?;
        let mut threshold = 0;
        for lambda in self_conjugate(n) {
            checked += 1;
            let square = lambda.len() == lambda.part(0)
                && lambda.parts().iter().all(|&p| p == lambda.part(0));
            if !square && !checker.full_tensor_square(&lambda)? {
                threshold = threshold.max(lambda.durfee());
            }
        }
        witnesses.push(serde_json::json!({"n": n, "threshold": threshold}));
    }
    let mut r = report(
        "durfee_threshold",
        Level::Conjecture,
        params([("max_n", max_n.into())]),
        (checked, Vec::new()),
        timer,
    );
    r.witnesses = witnesses;
    Ok(r)
}

/// Re-evaluates every recorded failure and returns those that still fail.
/// For a well-formed report this equals `report.failures`.
pub fn reproduce(engine: &Engine, report: &VerificationReport) -> Result<Vec<Failure>> {
    let checker = Checker::new(engine);
    let mut out = Vec::new();
    for f in &report.failures {
        if let Some(again) = checker.evaluate(&report.suite, &f.inputs)?.failure() {
            out.push(again);
        }
    }
    Ok(out)
}

/// Re-evaluates one cell of a suite from explicit inputs, returning
/// `(lhs, rhs, holds)`.
pub fn evaluate_cell(
    engine: &Engine,
    suite: &str,
    inputs: &Inputs,
) -> Result<(BigInt, BigInt, bool)> {
    let cell = Checker::new(engine).evaluate(suite, inputs)?;
    let holds = cell.relation.holds(&cell.lhs, &cell.rhs);
    Ok((cell.lhs, cell.rhs, holds))
}
