//! Command definitions and their execution.
//!
//! [`run`] never prints; it returns the exit status and the report text so
//! the binary and the tests see identical bytes.

use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use wqo_core::ack_terms::{
    enumerate_ack, leq_k, term_value, w_check, w_search_min_m, wt_check, AckTerm, AtrWiring, DefaultSelection, LeqMode,
    Profile, WBound, WVerdict, WtVerdict,
};
use wqo_core::algebra::{
    is_graded_term, min_divisibility_order, phi_eval, Compat, FreeInterpretation, SumInterpretation,
};
use wqo_core::exp_terms::{enumerate_exp_capped, swo_check, swo_search_min_m, SwoVerdict};
use wqo_core::hl_dl::claims::{claim2_printed_length_bullet, run_all, ClaimBounds};
use wqo_core::hl_dl::{
    from_tuple, good_pair_via_dl, good_pair_via_hl, scan_dl, scan_hl, to_tuple, weight, BinaryString01,
};
use wqo_core::orders::{find_good_pair, find_good_pair_by, seq_embed, FiniteQo};
use wqo_core::ordinals::{
    descent_check, fundamental_seq, max_coefficient, natural_sum, slow_growing, CnfOrdinal, DescentVerdict,
};
use wqo_core::trees::{embeds, enumerate_trees, DegreeBound, Tree};
use wqo_core::SearchOutcome;

use crate::config::{OutputFormat, RunConfig};
use crate::formats::{
    parse_ack, parse_elements, parse_exp, parse_ord, parse_qo, parse_signature, parse_string01, parse_tree,
    parse_tuple, Names, ParseError, TreeText,
};

#[derive(Debug, Parser)]
#[command(name = "wqo", version, about = "Well-quasi-order laboratory")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalArgs {
    /// `key=value` configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// plain or tsv.
    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,
    #[arg(long, global = true)]
    pub max_bits: Option<u64>,
    #[arg(long, global = true)]
    pub max_steps: Option<u64>,
    #[arg(long, global = true)]
    pub max_nodes: Option<usize>,
    #[arg(long, global = true)]
    pub max_seq_len: Option<usize>,
}

impl GlobalArgs {
    /// Layers defaults, the environment value, the config file and flags.
    pub fn resolve(&self, env_bits: Option<&str>) -> Result<RunConfig, LabError> {
        let mut cfg = RunConfig::default().with_env(env_bits)?;
        if let Some(path) = &self.config {
            cfg = cfg.with_file(&read(path)?)?;
        }
        if let Some(f) = self.format {
            cfg.format = f;
        }
        if let Some(v) = self.max_bits {
            cfg.max_bits = v;
        }
        if let Some(v) = self.max_steps {
            cfg.max_steps = v;
        }
        if let Some(v) = self.max_nodes {
            cfg.max_nodes = v;
        }
        if let Some(v) = self.max_seq_len {
            cfg.max_seq_len = v;
        }
        if cfg.max_bits == 0 || cfg.max_steps == 0 || cfg.max_nodes == 0 || cfg.max_seq_len == 0 {
            return Err(LabError::Usage("budgets must be positive".into()));
        }
        Ok(cfg)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Higman embedding of two sequences of element names.
    SeqEmbed {
        #[arg(long)]
        qo: Option<PathBuf>,
        s: String,
        t: String,
    },
    /// Kruskal embedding `t ⪯ s`.
    TreeEmbed {
        #[arg(long)]
        qo: Option<PathBuf>,
        t: String,
        s: String,
    },
    /// Least good pair `i < j` of a sequence.
    GoodPair {
        #[arg(long, value_enum, default_value = "elem")]
        kind: ItemKind,
        #[arg(long)]
        qo: Option<PathBuf>,
        items: Vec<String>,
    },
    /// Binary strings to block tuples; with `--good-pair`, a subsequence
    /// good pair found through the Dickson side.
    Hl2dl {
        #[arg(long)]
        good_pair: bool,
        strings: Vec<String>,
    },
    /// Block tuples to binary strings; with `--good-pair`, a product-order
    /// good pair found through the subsequence side.
    Dl2hl {
        #[arg(long)]
        good_pair: bool,
        tuples: Vec<String>,
    },
    /// Exhaustive checks of the string/tuple translation lemmas.
    Claims {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_width: usize,
        #[arg(long, default_value_t = 4)]
        max_entry: u64,
    },
    /// Evaluates a graded term in an interpretation.
    PhiEval {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long, value_enum, default_value = "free")]
        interp: InterpKind,
        /// Generator values for `sum`, as `a=1,b=2`; missing ones are 1.
        #[arg(long)]
        values: Option<String>,
        term: String,
    },
    /// Least divisibility order on the graded terms of a signature,
    /// compared with tree embedding.
    MinOrder {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long, default_value_t = 5)]
        nodes: usize,
        #[arg(long, value_enum, default_value = "same-arity")]
        compat: CompatArg,
    },
    /// Ordinal arithmetic below ε₀.
    Ord {
        #[command(subcommand)]
        op: OrdOp,
    },
    /// Slow well-ordering checks on exponential terms.
    Swo {
        #[command(subcommand)]
        op: SwoOp,
    },
    /// Ackermannian terms and the `W` assertions.
    W {
        #[command(subcommand)]
        op: WOp,
    },
    /// Lists a bounded universe, one item per line.
    Enum {
        #[arg(value_enum)]
        kind: EnumKind,
        /// Node count, string length, or value at base 2 for `exp`.
        #[arg(long)]
        max: u64,
        #[arg(long)]
        qo: Option<PathBuf>,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrdOp {
    Cmp {
        a: String,
        b: String,
    },
    Natsum {
        a: String,
        b: String,
    },
    Fs {
        a: String,
        i: BigUint,
    },
    Slow {
        a: String,
        n: BigUint,
    },
    Maxcoef {
        a: String,
    },
    /// Bounded-coefficient descent check on `α_0…α_M`.
    Descent {
        #[arg(long = "K")]
        k: u32,
        alphas: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SwoOp {
    Check {
        #[arg(long = "K")]
        k: u32,
        terms: Vec<String>,
    },
    Search {
        #[arg(long = "K")]
        k: u32,
        #[arg(long = "max-M")]
        max_m: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct WArgs {
    /// `sigma:<d>`, `atr-diagonal` or `atr-slot`.
    #[arg(long, default_value = "sigma:1")]
    pub bound: BoundArg,
    #[arg(long = "K")]
    pub k: u32,
    #[arg(long, value_enum, default_value = "embedding")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "repaired")]
    pub profile: ProfileArg,
}

#[derive(Debug, Subcommand)]
pub enum WOp {
    Check {
        #[command(flatten)]
        w: WArgs,
        terms: Vec<String>,
    },
    Search {
        #[command(flatten)]
        w: WArgs,
        #[arg(long = "max-M")]
        max_m: usize,
        #[arg(long)]
        node_cap: Option<usize>,
    },
    /// `W(t, f)` with the left-nested selection `1+…+1`.
    Tcheck {
        #[command(flatten)]
        w: WArgs,
        values: Vec<BigUint>,
    },
    /// Value of a term at base `k`.
    Value {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "repaired")]
        profile: ProfileArg,
        term: String,
    },
    /// `s ≤_k t`.
    Leq {
        #[arg(long, value_enum, default_value = "embedding")]
        mode: ModeArg,
        s: String,
        t: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ItemKind {
    Elem,
    String,
    Tuple,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InterpKind {
    Free,
    Sum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CompatArg {
    SameArity,
    Subsequence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Literal,
    Embedding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Literal,
    Repaired,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Tree,
    Exp,
    Ack,
    String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundArg(pub WBound);

impl FromStr for BoundArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "atr-diagonal" => Ok(BoundArg(WBound::Atr(AtrWiring::Diagonal))),
            "atr-slot" => Ok(BoundArg(WBound::Atr(AtrWiring::ArgumentSlot))),
            _ => s
                .strip_prefix("sigma:")
                .and_then(|d| d.parse().ok())
                .map(|d| BoundArg(WBound::Sigma { d }))
                .ok_or_else(|| format!("unknown bound `{s}` (sigma:<d>|atr-diagonal|atr-slot)")),
        }
    }
}

impl From<ModeArg> for LeqMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Literal => LeqMode::Literal,
            ModeArg::Embedding => LeqMode::Embedding,
        }
    }
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Literal => Profile::Literal,
            ProfileArg::Repaired => Profile::Repaired,
        }
    }
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Affirmative = 0,
    Negative = 1,
    Usage = 2,
    Budget = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] wqo_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl LabError {
    pub fn exit(&self) -> Exit {
        match self {
            LabError::Core(wqo_core::Error::BudgetExceeded) => Exit::Budget,
            LabError::Core(wqo_core::Error::SearchExhausted) => Exit::Negative,
            _ => Exit::Usage,
        }
    }
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub exit: Exit,
    plain: Vec<String>,
    tsv: Vec<Vec<String>>,
}

impl Report {
    fn new(exit: Exit) -> Self {
        Report { exit, plain: Vec::new(), tsv: Vec::new() }
    }

    fn line(mut self, plain: impl Into<String>, row: &[&dyn ToString]) -> Self {
        self.push(plain, row);
        self
    }

    fn push(&mut self, plain: impl Into<String>, row: &[&dyn ToString]) {
        self.plain.push(plain.into());
        self.tsv.push(row.iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        match format {
            OutputFormat::Plain => self.plain.iter().for_each(|l| {
                out.push_str(l);
                out.push('\n');
            }),
            OutputFormat::Tsv => self.tsv.iter().for_each(|r| {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }),
        }
        out
    }
}

fn read(path: &Path) -> Result<String, LabError> {
    std::fs::read_to_string(path).map_err(|source| LabError::Io { path: path.to_owned(), source })
}

fn load_qo(path: Option<&PathBuf>) -> Result<Option<(Names, FiniteQo)>, LabError> {
    path.map(|p| Ok(parse_qo(&read(p)?)?)).transpose()
}

fn check_len(cfg: &RunConfig, n: usize) -> Result<(), LabError> {
    if n == 0 {
        return Err(LabError::Usage("sequence must be nonempty".into()));
    }
    if n > cfg.max_seq_len {
        return Err(LabError::Usage(format!("sequence of length {n} exceeds --max-seq-len {}", cfg.max_seq_len)));
    }
    Ok(())
}

fn pair_report(pair: Option<(usize, usize)>, len: usize) -> Report {
    match pair {
        Some((i, j)) => Report::new(Exit::Affirmative).line(format!("good pair ({i}, {j})"), &[&"good", &i, &j]),
        None => Report::new(Exit::Negative).line(format!("bad sequence of length {len}"), &[&"bad", &len]),
    }
}

fn verdict(holds: bool, yes: &str, no: &str) -> Report {
    if holds {
        Report::new(Exit::Affirmative).line(yes, &[&true])
    } else {
        Report::new(Exit::Negative).line(no, &[&false])
    }
}

/// Runs one command.
pub fn run(command: &Command, cfg: &RunConfig) -> Result<Report, LabError> {
    let budget = cfg.budget();
    match command {
        Command::SeqEmbed { qo, s, t } => {
            let loaded = load_qo(qo.as_ref())?;
            let mut names = loaded.as_ref().map_or_else(Names::new, |(n, _)| n.clone());
            let (s, t) = (parse_elements(s, &mut names)?, parse_elements(t, &mut names)?);
            let order = loaded.map_or_else(|| FiniteQo::antichain(names.len()), |(_, q)| q);
            Ok(verdict(seq_embed(&order, &s, &t)?, "embeds", "does not embed"))
        }
        Command::TreeEmbed { qo, t, s } => {
            let loaded = load_qo(qo.as_ref())?;
            let mut names = loaded.as_ref().map_or_else(Names::new, |(n, _)| n.clone());
            let (t, s) = (parse_tree(t, &mut names)?, parse_tree(s, &mut names)?);
            let order = loaded.map_or_else(|| FiniteQo::antichain(names.len()), |(_, q)| q);
            Ok(verdict(embeds(&order, &t, &s)?, "embeds", "does not embed"))
        }
        Command::GoodPair { kind, qo, items } => {
            check_len(cfg, items.len())?;
            let pair = match kind {
                ItemKind::Elem => {
                    let loaded = load_qo(qo.as_ref())?;
                    let mut names = loaded.as_ref().map_or_else(Names::new, |(n, _)| n.clone());
                    let xs = items
                        .iter()
                        .map(|i| {
                            let v = parse_elements(i, &mut names)?;
                            match v[..] {
                                [x] => Ok(x),
                                _ => Err(LabError::Usage(format!("expected one element, got `{i}`"))),
                            }
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let order = loaded.map_or_else(|| FiniteQo::antichain(names.len()), |(_, q)| q);
                    find_good_pair(&order, &xs)?
                }
                ItemKind::String => {
                    let xs = items.iter().map(|s| parse_string01(s)).collect::<Result<Vec<_>, _>>()?;
                    scan_hl(&xs)
                }
                ItemKind::Tuple => {
                    let ts = items.iter().map(|s| parse_tuple(s)).collect::<Result<Vec<_>, _>>()?;
                    scan_dl(&ts)
                }
                ItemKind::Tree => {
                    let loaded = load_qo(qo.as_ref())?;
                    let mut names = loaded.as_ref().map_or_else(Names::new, |(n, _)| n.clone());
                    let ts = items.iter().map(|s| parse_tree(s, &mut names)).collect::<Result<Vec<Tree>, _>>()?;
                    let order = loaded.map_or_else(|| FiniteQo::antichain(names.len()), |(_, q)| q);
                    find_good_pair_by(&ts, |a, b| embeds(&order, a, b).expect("labels come from the order"))
                }
            };
            Ok(pair_report(pair, items.len()))
        }
        Command::Hl2dl { good_pair, strings } => {
            check_len(cfg, strings.len())?;
            let xs = strings.iter().map(|s| parse_string01(s)).collect::<Result<Vec<_>, _>>()?;
            if *good_pair {
                return Ok(pair_report(Some(good_pair_via_dl(&xs, scan_dl)?), xs.len()));
            }
            let mut r = Report::new(Exit::Affirmative);
            for x in &xs {
                let (t, w) = (to_tuple(x), weight(x));
                r.push(format!("{x} -> {t} weight {w}"), &[x, &t, &w]);
            }
            Ok(r)
        }
        Command::Dl2hl { good_pair, tuples } => {
            check_len(cfg, tuples.len())?;
            let ts = tuples.iter().map(|s| parse_tuple(s)).collect::<Result<Vec<_>, _>>()?;
            if *good_pair {
                return Ok(pair_report(Some(good_pair_via_hl(&ts, scan_hl)?), ts.len()));
            }
            let mut r = Report::new(Exit::Affirmative);
            for t in &ts {
                let x = from_tuple(t);
                r.push(format!("{t} -> {x}"), &[t, &x]);
            }
            Ok(r)
        }
        Command::Claims { max_len, max_n, max_width, max_entry } => {
            let bounds = ClaimBounds { max_len: *max_len, max_n: *max_n, max_width: *max_width, max_entry: *max_entry };
            let (reports, _) = run_all(&bounds);
            let (bullet, witnesses) = claim2_printed_length_bullet(&bounds);
            let ok = reports.iter().all(|r| r.passed());
            let mut out = Report::new(if ok { Exit::Affirmative } else { Exit::Negative });
            for r in &reports {
                let status = if r.passed() { "pass" } else { "FAIL" };
                let first = r.first_failure.clone().unwrap_or_default();
                let detail = if r.passed() { String::new() } else { format!(", first failure: {first}") };
                out.push(
                    format!("{}: {status} ({} checked, {} failed{detail})", r.name, r.checked, r.failures),
                    &[&r.name, &status, &r.checked, &r.failures, &first],
                );
            }
            let first = witnesses.first().map(|(u, n, b)| format!("u={u} n={n} u!_n={b}")).unwrap_or_default();
            out.push(
                format!(
                    "{}: does not hold as stated ({} of {} instances fail), first: {first}",
                    bullet.name, bullet.failures, bullet.checked
                ),
                &[&bullet.name, &"discrepancy", &bullet.checked, &bullet.failures, &first],
            );
            Ok(out)
        }
        Command::PhiEval { sig, interp, values, term } => {
            let (names, sig) = parse_signature(&read(sig)?)?;
            let mut lookup = names.clone();
            let t = parse_tree(term, &mut lookup)?;
            match interp {
                InterpKind::Free => {
                    let v = phi_eval(&sig, &FreeInterpretation { sig: &sig }, &t)?;
                    let text = TreeText(&v, &names).to_string();
                    Ok(Report::new(Exit::Affirmative).line(text.clone(), &[&text]))
                }
                InterpKind::Sum => {
                    let mut generator_values = vec![1u64; sig.generators().len()];
                    for item in values.iter().flat_map(|v| v.split(',')).filter(|s| !s.trim().is_empty()) {
                        let (name, v) = item
                            .split_once('=')
                            .ok_or_else(|| LabError::Usage(format!("expected `name=value`, got `{item}`")))?;
                        let id = names
                            .get(name.trim())
                            .filter(|&id| id < generator_values.len())
                            .ok_or_else(|| LabError::Usage(format!("`{name}` is not a generator")))?;
                        generator_values[id] =
                            v.trim().parse().map_err(|_| LabError::Usage(format!("bad value in `{item}`")))?;
                    }
                    let v = phi_eval(&sig, &SumInterpretation { generator_values }, &t)?;
                    Ok(Report::new(Exit::Affirmative).line(v.to_string(), &[&v]))
                }
            }
        }
        Command::MinOrder { sig, nodes, compat } => {
            if nodes > &cfg.max_nodes {
                return Err(LabError::Usage(format!("--nodes {nodes} exceeds --max-nodes {}", cfg.max_nodes)));
            }
            let (names, sig) = parse_signature(&read(sig)?)?;
            let universe: Vec<Tree> = enumerate_trees(sig.label_order(), *nodes, None)
                .into_iter()
                .filter(|t| is_graded_term(&sig, t).unwrap_or(false))
                .collect();
            let mode = match compat {
                CompatArg::SameArity => Compat::SameArity,
                CompatArg::Subsequence => Compat::Subsequence,
            };
            let order = min_divisibility_order(&sig, &universe, mode)?;
            let mut out = Report::new(Exit::Affirmative);
            let mut mismatches = 0usize;
            let mut related = 0usize;
            for (i, s) in universe.iter().enumerate() {
                for (j, t) in universe.iter().enumerate() {
                    let (m, e) = (order.leq(i, j), embeds(sig.label_order(), s, t)?);
                    related += usize::from(m);
                    mismatches += usize::from(m != e);
                    if cfg.format == OutputFormat::Tsv {
                        out.tsv.push(vec![
                            TreeText(s, &names).to_string(),
                            TreeText(t, &names).to_string(),
                            m.to_string(),
                            e.to_string(),
                        ]);
                    }
                }
            }
            if mismatches > 0 {
                out.exit = Exit::Negative;
            }
            out.plain.push(format!(
                "{} graded terms, {related} related pairs, {mismatches} mismatches with embedding",
                universe.len()
            ));
            Ok(out)
        }
        Command::Ord { op } => run_ord(op, cfg),
        Command::Swo { op } => match op {
            SwoOp::Check { k, terms } => {
                check_len(cfg, terms.len())?;
                let terms = terms.iter().map(|t| parse_exp(t)).collect::<Result<Vec<_>, _>>()?;
                Ok(match swo_check(*k, &terms, &budget)? {
                    SwoVerdict::Witness { j } => {
                        Report::new(Exit::Affirmative).line(format!("witness j = {j}"), &[&"witness", &j])
                    }
                    SwoVerdict::Descending { len } => Report::new(Exit::Negative)
                        .line(format!("strictly descending sequence of length {len}"), &[&"descending", &len]),
                    SwoVerdict::HypothesisFailed { index } => Report::new(Exit::Negative)
                        .line(format!("hypothesis fails at index {index}"), &[&"hypothesis-failed", &index]),
                })
            }
            SwoOp::Search { k, max_m } => {
                let outcome = swo_search_min_m(*k, *max_m, &budget)?;
                Ok(search_report(outcome, *max_m, |t| t.to_string()))
            }
        },
        Command::W { op } => run_w(op, cfg),
        Command::Enum { kind, max, qo, degree } => {
            let mut out = Report::new(Exit::Affirmative);
            let max_usize = usize::try_from(*max).map_err(|_| LabError::Usage("--max too large".into()))?;
            let size_cap = |n: usize| {
                if n > cfg.max_nodes {
                    Err(LabError::Usage(format!("--max {n} exceeds --max-nodes {}", cfg.max_nodes)))
                } else {
                    Ok(())
                }
            };
            let items: Vec<String> = match kind {
                EnumKind::Tree => {
                    size_cap(max_usize)?;
                    let (names, order) =
                        load_qo(qo.as_ref())?.unwrap_or_else(|| (Names::frozen(["a"]), FiniteQo::chain(1)));
                    enumerate_trees(&order, max_usize, degree.map(DegreeBound))
                        .iter()
                        .map(|t| TreeText(t, &names).to_string())
                        .collect()
                }
                EnumKind::Ack => {
                    size_cap(max_usize)?;
                    enumerate_ack(max_usize).iter().map(ToString::to_string).collect()
                }
                EnumKind::Exp => {
                    let cap = usize::try_from(cfg.max_steps).unwrap_or(usize::MAX);
                    enumerate_exp_capped(*max, cap)?.iter().map(ToString::to_string).collect()
                }
                EnumKind::String => {
                    if max_usize > 24 {
                        return Err(LabError::Usage("string length is capped at 24".into()));
                    }
                    BinaryString01::all_up_to(max_usize).iter().map(ToString::to_string).collect()
                }
            };
            for (i, s) in items.iter().enumerate() {
                out.push(s.clone(), &[&i, s]);
            }
            Ok(out)
        }
    }
}

fn search_report<T>(outcome: SearchOutcome<Vec<T>>, max_m: usize, show: impl Fn(&T) -> String) -> Report {
    match outcome {
        SearchOutcome::Found(m) => Report::new(Exit::Affirmative).line(format!("M = {m}"), &[&"found", &m]),
        SearchOutcome::Exhausted { last_counterexample } => {
            let seq =
                last_counterexample.map(|s| s.iter().map(&show).collect::<Vec<_>>().join(" ")).unwrap_or_default();
            Report::new(Exit::Negative)
                .line(format!("exhausted up to M = {max_m}"), &[&"exhausted", &max_m])
                .line(format!("counterexample: {seq}"), &[&"counterexample", &seq])
        }
    }
}

fn ords(xs: &[&String]) -> Result<Vec<CnfOrdinal>, LabError> {
    xs.iter().map(|s| Ok(parse_ord(s)?)).collect()
}

fn run_ord(op: &OrdOp, cfg: &RunConfig) -> Result<Report, LabError> {
    let budget = cfg.budget();
    let value = |v: String| Report::new(Exit::Affirmative).line(v.clone(), &[&v]);
    Ok(match op {
        OrdOp::Cmp { a, b } => {
            let o = ords(&[a, b])?;
            let word = match o[0].cmp(&o[1]) {
                Ordering::Less => "less",
                Ordering::Equal => "equal",
                Ordering::Greater => "greater",
            };
            value(word.into())
        }
        OrdOp::Natsum { a, b } => {
            let o = ords(&[a, b])?;
            value(natural_sum(&o[0], &o[1]).to_string())
        }
        OrdOp::Fs { a, i } => value(fundamental_seq(&parse_ord(a)?, i)?.to_string()),
        OrdOp::Slow { a, n } => value(slow_growing(&parse_ord(a)?, n, &budget)?.to_string()),
        OrdOp::Maxcoef { a } => value(max_coefficient(&parse_ord(a)?).to_string()),
        OrdOp::Descent { k, alphas } => {
            check_len(cfg, alphas.len())?;
            let refs: Vec<&String> = alphas.iter().collect();
            match descent_check(*k, &ords(&refs)?, &budget)? {
                DescentVerdict::Witness { j } => {
                    Report::new(Exit::Affirmative).line(format!("witness j = {j}"), &[&"witness", &j])
                }
                DescentVerdict::BadSequence { len } => {
                    Report::new(Exit::Negative).line(format!("bad sequence of length {len}"), &[&"bad", &len])
                }
                DescentVerdict::HypothesisFailed { index } => Report::new(Exit::Negative)
                    .line(format!("hypothesis fails at index {index}"), &[&"hypothesis-failed", &index]),
            }
        }
    })
}

fn acks(xs: &[String]) -> Result<Vec<AckTerm>, LabError> {
    xs.iter().map(|s| Ok(parse_ack(s)?)).collect()
}

fn run_w(op: &WOp, cfg: &RunConfig) -> Result<Report, LabError> {
    let budget = cfg.budget();
    Ok(match op {
        WOp::Check { w, terms } => {
            check_len(cfg, terms.len())?;
            let terms = acks(terms)?;
            match w_check(w.bound.0, w.k, &terms, w.mode.into(), w.profile.into(), &budget)? {
                WVerdict::Witness { j } => {
                    Report::new(Exit::Affirmative).line(format!("witness j = {j}"), &[&"witness", &j])
                }
                WVerdict::Bad { len } => {
                    Report::new(Exit::Negative).line(format!("bad sequence of length {len}"), &[&"bad", &len])
                }
                WVerdict::HypothesisFailed { index } => Report::new(Exit::Negative)
                    .line(format!("hypothesis fails at index {index}"), &[&"hypothesis-failed", &index]),
            }
        }
        WOp::Search { w, max_m, node_cap } => {
            let outcome = w_search_min_m(w.bound.0, w.k, *max_m, w.mode.into(), w.profile.into(), *node_cap, &budget)?;
            search_report(outcome, *max_m, ToString::to_string)
        }
        WOp::Tcheck { w, values } => {
            check_len(cfg, values.len())?;
            match wt_check(&DefaultSelection, w.bound.0, w.k, values, w.mode.into(), w.profile.into(), &budget)? {
                WtVerdict::Witness { i, j } => {
                    Report::new(Exit::Affirmative).line(format!("witness ({i}, {j})"), &[&"witness", &i, &j])
                }
                WtVerdict::Bad { len } => {
                    Report::new(Exit::Negative).line(format!("bad sequence of length {len}"), &[&"bad", &len])
                }
                WtVerdict::HypothesisFailed { index } => Report::new(Exit::Negative)
                    .line(format!("hypothesis fails at index {index}"), &[&"hypothesis-failed", &index]),
            }
        }
        WOp::Value { k, profile, term } => {
            let v = term_value(&parse_ack(term)?, *k, (*profile).into(), &budget)?;
            Report::new(Exit::Affirmative).line(v.to_string(), &[&v])
        }
        WOp::Leq { mode, s, t } => {
            let (s, t) = (parse_ack(s)?, parse_ack(t)?);
            verdict(leq_k((*mode).into(), &s, &t), "related", "not related")
        }
    })
}
