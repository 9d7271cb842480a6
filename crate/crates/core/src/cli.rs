//! Command-line front end.
//!
//! Exit codes: 0 when every requested computation or check succeeded, 1 when
//! a cross-check or identity failed, 2 for invalid parameters.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::counting::{fbar_determinant, recursion_fbar};
use crate::error::{Error, Result};
use crate::genfun::{
    binomial_lemma_checks, f1_series_exp, f_r_series, fbar_series_multisection, identity_suite, q_series_exp,
    q_series_symmetric, Status,
};
use crate::paths::{count_weakly_below, f_r_count, fbar_count, q_count, LatticePath};
use crate::series::TruncatedSeries;
use crate::tableaux::{bijection_counts, count_tableaux, enumerate_tableaux, YoungBuilding};
use crate::tutte::{all_paths, tutte_polynomial, verify_append_recursion_exhaustive};

#[derive(Debug, Parser)]
#[command(name = "wallcount", version, about = "Exact counts of Young tableaux with walls and staircase lattice paths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a(0)..a(n_max) of one sequence by one method.
    Sequence(SequenceArgs),
    /// Compute a parameter grid by several methods and compare them.
    Crosscheck(CrosscheckArgs),
    /// Check the closed-form identities, binomial lemmas, Tutte recursion and tableau bijection.
    Identities(IdentityArgs),
    /// Print a generating function as JSON.
    Series(SeriesArgs),
    /// List the tableaux over a two-row building.
    Tableaux(TableauxArgs),
    /// Print the Tutte polynomial of a lattice path.
    Tutte(TutteArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Tableaux over the periodic building B_m^n (parameter m).
    Fbar,
    /// Paths below (N^k E^l)^(n-1) N^k E^(l-r) (parameters k, l, r).
    Fr,
    /// Paths below (N^k E^l)^n (parameters k, l).
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Brute-force enumeration of tableaux with walls.
    Tableaux,
    /// Dynamic programming over the bounded path region.
    Dp,
    /// Kreweras-type determinant.
    Determinant,
    /// Inclusion-exclusion recursion over first boundary contacts.
    Recursion,
    /// Elementary symmetric functions of the kernel roots.
    Genfun,
    /// Exponential formula.
    Exp,
    /// Product over roots of unity, via multisection of log C.
    Multisection,
    /// Tutte polynomial evaluated at (1, 1).
    Tutte,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Bfile,
    Json,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(short = 'm', long, default_value_t = 2)]
    pub m: usize,
    #[arg(short = 'k', long, default_value_t = 1)]
    pub k: usize,
    #[arg(short = 'l', long = "l", default_value_t = 1)]
    pub l: usize,
    #[arg(short = 'r', long, default_value_t = 1)]
    pub r: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SequenceArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    /// Defaults to dp.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum, default_value = "bfile")]
    pub format: Format,
    /// Index printed for a(0) in b-file and table output.
    #[arg(long, default_value_t = 0)]
    pub offset: i64,
}

#[derive(Debug, Clone, Args)]
pub struct CrosscheckArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Largest m for fbar, largest k and l for fr/q.
    #[arg(long, default_value_t = 3)]
    pub max_param: usize,
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    /// Comma-separated; defaults to every method applicable to the family.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub methods: Vec<Method>,
    /// Add 1 to the last value computed by this method (exercises mismatch reporting).
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Method>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityGroup {
    All,
    Genfun,
    Lemmas,
    Tutte,
    Bijection,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub only: IdentityGroup,
    /// Largest k and l for the generating-function identities.
    #[arg(long, default_value_t = 3)]
    pub max_kl: usize,
    #[arg(long, default_value_t = 6)]
    pub order: usize,
    /// Largest l and r for the binomial lemmas.
    #[arg(long, default_value_t = 8)]
    pub bound: usize,
    /// Longest path for the Tutte append recursion.
    #[arg(long, default_value_t = 8)]
    pub max_len: usize,
    /// Longest path for t(P;1,1) against the path DP.
    #[arg(long, default_value_t = 12)]
    pub max_count_len: usize,
    /// Largest building width for the tableau bijection.
    #[arg(short = 'm', long, default_value_t = 5)]
    pub m: usize,
    /// Wall sets sampled per width once 2^width exceeds this.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    /// genfun, exp or multisection.
    #[arg(long, value_enum, default_value = "genfun")]
    pub method: Method,
}

#[derive(Debug, Clone, Args)]
pub struct TableauxArgs {
    #[arg(short = 'm', long)]
    pub m: usize,
    /// Comma-separated wall columns (1-based).
    #[arg(long, value_delimiter = ',')]
    pub walls: Vec<usize>,
    /// Use the periodic building B_m^n instead of explicit walls.
    #[arg(long)]
    pub periodic: Option<usize>,
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TutteArgs {
    /// Path literal, e.g. N3E2N.
    pub path: String,
}

/// Validated parameters for one sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SequenceParams {
    Fbar { m: usize },
    Fr { k: usize, l: usize, r: usize },
    Q { k: usize, l: usize },
}

impl SequenceParams {
    pub fn new(family: Family, p: &ParamArgs) -> Result<Self> {
        let positive = |name: &str, v: usize| {
            if v == 0 {
                Err(Error::InvalidParameter(format!("{name} must be at least 1")))
            } else {
                Ok(v)
            }
        };
        Ok(match family {
            Family::Fbar => Self::Fbar { m: positive("m", p.m)? },
            Family::Fr => {
                let (k, l) = (positive("k", p.k)?, positive("l", p.l)?);
                if p.r == 0 || p.r > l {
                    return Err(Error::InvalidParameter(format!("r = {} must lie in 1..={l}", p.r)));
                }
                Self::Fr { k, l, r: p.r }
            }
            Family::Q => Self::Q { k: positive("k", p.k)?, l: positive("l", p.l)? },
        })
    }

    pub fn family(&self) -> Family {
        match self {
            Self::Fbar { .. } => Family::Fbar,
            Self::Fr { .. } => Family::Fr,
            Self::Q { .. } => Family::Q,
        }
    }

    /// Methods that can compute this sequence.
    pub fn methods(&self) -> Vec<Method> {
        use Method::*;
        match *self {
            Self::Fbar { m } if m >= 2 => vec![Tableaux, Dp, Determinant, Recursion, Genfun, Exp, Multisection],
            Self::Fbar { .. } => vec![Tableaux, Dp, Determinant, Genfun, Exp, Multisection],
            Self::Fr { r: 1, .. } => vec![Dp, Genfun, Exp],
            Self::Fr { .. } => vec![Dp, Genfun],
            Self::Q { .. } => vec![Dp, Genfun, Exp, Tutte],
        }
    }
}

impl fmt::Display for SequenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fbar { m } => write!(f, "m={m}"),
            Self::Fr { k, l, r } => write!(f, "k={k} l={l} r={r}"),
            Self::Q { k, l } => write!(f, "k={k} l={l}"),
        }
    }
}

fn series_values(s: TruncatedSeries) -> Result<Vec<BigInt>> {
    s.to_integers()
        .ok_or_else(|| Error::Inconsistent("generating function has a non-integer coefficient".into()))
}

fn per_term(n_max: usize, f: impl Fn(usize) -> Result<BigInt>) -> Result<Vec<BigInt>> {
    (0..=n_max).map(f).collect()
}

/// Terms `a(0)..=a(n_max)` of a sequence by one method.
pub fn compute_sequence(params: SequenceParams, method: Method, n_max: usize) -> Result<Vec<BigInt>> {
    use Method::*;
    if !params.methods().contains(&method) {
        return Err(Error::InvalidParameter(format!(
            "method {method} does not apply to {} with {params}",
            params.family()
        )));
    }
    match (params, method) {
        (SequenceParams::Fbar { m }, Tableaux) => per_term(n_max, |n| {
            if n == 0 {
                Ok(BigInt::from(1))
            } else {
                count_tableaux(&YoungBuilding::periodic(m, n))
            }
        }),
        (SequenceParams::Fbar { m }, Dp) => per_term(n_max, |n| fbar_count(m, n)),
        (SequenceParams::Fbar { m }, Determinant) => per_term(n_max, |n| fbar_determinant(m, n)),
        (SequenceParams::Fbar { m }, Recursion) => per_term(n_max, |n| recursion_fbar(m, n)),
        (SequenceParams::Fbar { m }, Genfun) => series_values(f_r_series(m, m, 1, n_max)?),
        (SequenceParams::Fbar { m }, Exp) => series_values(f1_series_exp(m, m, n_max)?),
        (SequenceParams::Fbar { m }, Multisection) => series_values(fbar_series_multisection(m, n_max)?),
        (SequenceParams::Fr { k, l, r }, Dp) => per_term(n_max, |n| f_r_count(k, l, r, n)),
        (SequenceParams::Fr { k, l, r }, Genfun) => series_values(f_r_series(k, l, r, n_max)?),
        (SequenceParams::Fr { k, l, .. }, Exp) => series_values(f1_series_exp(k, l, n_max)?),
        (SequenceParams::Q { k, l }, Dp) => per_term(n_max, |n| q_count(k, l, n)),
        (SequenceParams::Q { k, l }, Genfun) => series_values(q_series_symmetric(k, l, n_max)?),
        (SequenceParams::Q { k, l }, Exp) => series_values(q_series_exp(k, l, n_max)?),
        (SequenceParams::Q { k, l }, Tutte) => per_term(n_max, |n| {
            Ok(tutte_polynomial(&LatticePath::staircase(k, l, n))?.eval_at_ones())
        }),
        _ => unreachable!("filtered by SequenceParams::methods"),
    }
}

pub fn generating_function(params: SequenceParams, method: Method, order: usize) -> Result<TruncatedSeries> {
    match (params, method) {
        (SequenceParams::Fbar { m }, Method::Genfun) => f_r_series(m, m, 1, order),
        (SequenceParams::Fbar { m }, Method::Exp) => f1_series_exp(m, m, order),
        (SequenceParams::Fbar { m }, Method::Multisection) => fbar_series_multisection(m, order),
        (SequenceParams::Fr { k, l, r }, Method::Genfun) => f_r_series(k, l, r, order),
        (SequenceParams::Fr { k, l, r: 1 }, Method::Exp) => f1_series_exp(k, l, order),
        (SequenceParams::Q { k, l }, Method::Genfun) => q_series_symmetric(k, l, order),
        (SequenceParams::Q { k, l }, Method::Exp) => q_series_exp(k, l, order),
        _ => Err(Error::InvalidParameter(format!(
            "no generating function for {} by {method}",
            params.family()
        ))),
    }
}

#[derive(Serialize)]
struct SequenceJson {
    family: Family,
    params: SequenceParams,
    method: Method,
    values: Vec<String>,
}

pub fn format_sequence(
    params: SequenceParams,
    method: Method,
    values: &[BigInt],
    format: Format,
    offset: i64,
) -> String {
    match format {
        Format::Bfile => values
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{} {v}\n", n as i64 + offset))
            .collect(),
        Format::Table => {
            let width = values.iter().map(|v| v.to_string().len()).max().unwrap_or(1).max(4);
            let mut out = format!("# {} {params} method={method}\n", params.family());
            out += &format!("{:>4}  {:>width$}\n", "n", "a(n)");
            for (n, v) in values.iter().enumerate() {
                out += &format!("{:>4}  {:>width$}\n", n as i64 + offset, v.to_string());
            }
            out
        }
        Format::Json => {
            let doc = SequenceJson {
                family: params.family(),
                params,
                method,
                values: values.iter().map(|v| v.to_string()).collect(),
            };
            serde_json::to_string(&doc).expect("plain data serializes") + "\n"
        }
    }
}

/// One parameter cell of a cross-check grid.
#[derive(Debug, Clone)]
pub struct CrosscheckCell {
    pub params: SequenceParams,
    /// `(method, values)` in method order; `None` where the method does not apply.
    pub results: Vec<(Method, Option<Vec<BigInt>>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub params: SequenceParams,
    pub method: Method,
    pub reference: Method,
    pub n: usize,
    pub value: String,
    pub expected: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mismatch: {} {} n={} {}={} but {}={}",
            self.params.family(),
            self.params,
            self.n,
            self.method,
            self.value,
            self.reference,
            self.expected
        )
    }
}

impl CrosscheckCell {
    /// Differences against the first applicable method, in method order.
    pub fn mismatches(&self) -> Vec<Mismatch> {
        let mut present = self.results.iter().filter_map(|(m, v)| v.as_ref().map(|v| (*m, v)));
        let Some((reference, expected)) = present.next() else {
            return Vec::new();
        };
        present
            .filter_map(|(method, values)| {
                let n = (0..expected.len().max(values.len())).find(|&n| expected.get(n) != values.get(n))?;
                let show = |v: Option<&BigInt>| v.map_or("<missing>".to_string(), |v| v.to_string());
                Some(Mismatch {
                    params: self.params,
                    method,
                    reference,
                    n,
                    value: show(values.get(n)),
                    expected: show(expected.get(n)),
                })
            })
            .collect()
    }
}

pub fn crosscheck_grid(family: Family, max_param: usize) -> Vec<SequenceParams> {
    match family {
        Family::Fbar => (1..=max_param).map(|m| SequenceParams::Fbar { m }).collect(),
        Family::Fr => (1..=max_param)
            .flat_map(|k| (1..=max_param).flat_map(move |l| (1..=l).map(move |r| SequenceParams::Fr { k, l, r })))
            .collect(),
        Family::Q => (1..=max_param)
            .flat_map(|k| (1..=max_param).map(move |l| SequenceParams::Q { k, l }))
            .collect(),
    }
}

pub fn run_crosscheck(
    grid: &[SequenceParams],
    methods: &[Method],
    n_max: usize,
    inject_fault: Option<Method>,
) -> Result<Vec<CrosscheckCell>> {
    grid.iter()
        .map(|&params| {
            let applicable = params.methods();
            let results = methods
                .iter()
                .map(|&method| {
                    if !applicable.contains(&method) {
                        return Ok((method, None));
                    }
                    let mut values = compute_sequence(params, method, n_max)?;
                    if inject_fault == Some(method) {
                        if let Some(last) = values.last_mut() {
                            *last += 1;
                        }
                    }
                    Ok((method, Some(values)))
                })
                .collect::<Result<_>>()?;
            Ok(CrosscheckCell { params, results })
        })
        .collect()
}

fn all_methods_for(family: Family) -> Vec<Method> {
    let mut methods: Vec<Method> = crosscheck_grid(family, 2).iter().flat_map(|p| p.methods()).collect();
    methods.sort();
    methods.dedup();
    methods
}

fn cmd_sequence(args: &SequenceArgs, out: &mut dyn Write) -> Result<i32> {
    let params = SequenceParams::new(args.family, &args.params)?;
    let method = args.method.unwrap_or(Method::Dp);
    let values = compute_sequence(params, method, args.n_max)?;
    write!(out, "{}", format_sequence(params, method, &values, args.format, args.offset)).ok();
    Ok(0)
}

fn cmd_crosscheck(args: &CrosscheckArgs, out: &mut dyn Write) -> Result<i32> {
    if args.max_param == 0 {
        return Err(Error::InvalidParameter("--max-param must be at least 1".into()));
    }
    let methods = if args.methods.is_empty() { all_methods_for(args.family) } else { args.methods.clone() };
    let grid = crosscheck_grid(args.family, args.max_param);
    let cells = run_crosscheck(&grid, &methods, args.n_max, args.inject_fault)?;

    let label_width = cells.iter().map(|c| c.params.to_string().len()).max().unwrap_or(0);
    let header: Vec<String> = methods.iter().map(|m| m.to_string()).collect();
    writeln!(out, "# {} n=0..{}", args.family, args.n_max).ok();
    writeln!(out, "{:label_width$}  {}", "", header.join("  ")).ok();
    let mut mismatches = Vec::new();
    for cell in &cells {
        let bad = cell.mismatches();
        let marks: Vec<String> = cell
            .results
            .iter()
            .zip(&header)
            .map(|((method, values), h)| {
                let mark = match values {
                    None => "-",
                    Some(_) if bad.iter().any(|m| m.method == *method) => "✗",
                    Some(_) => "✓",
                };
                format!("{mark:^w$}", w = h.chars().count())
            })
            .collect();
        writeln!(out, "{:label_width$}  {}", cell.params.to_string(), marks.join("  ")).ok();
        mismatches.extend(bad);
    }
    for m in &mismatches {
        writeln!(out, "{m}").ok();
    }
    if mismatches.is_empty() {
        writeln!(out, "all methods agree on {} parameter sets", cells.len()).ok();
        Ok(0)
    } else {
        Ok(1)
    }
}

fn report(out: &mut dyn Write, ok: bool, name: &str, detail: &str) -> bool {
    writeln!(out, "{}  {name}  {detail}", if ok { "pass" } else { "FAIL" }).ok();
    ok
}

fn cmd_identities(args: &IdentityArgs, out: &mut dyn Write) -> Result<i32> {
    let wants = |g: IdentityGroup| args.only == IdentityGroup::All || args.only == g;
    let mut all_ok = true;

    if wants(IdentityGroup::Genfun) {
        for k in 1..=args.max_kl {
            for l in 1..=args.max_kl {
                for r in identity_suite(k, l, args.order, k + l + 1)? {
                    let detail = match r.first_mismatch_order {
                        Some(n) => format!("{}  first mismatch at x^{n}", r.params),
                        None => r.params.clone(),
                    };
                    match r.status {
                        Status::Skipped => {
                            writeln!(out, "skip  {}  {detail}", r.identity).ok();
                        }
                        s => all_ok &= report(out, s == Status::Pass, &r.identity, &detail),
                    }
                }
            }
        }
    }

    if wants(IdentityGroup::Lemmas) {
        for r in binomial_lemma_checks(args.bound) {
            let detail = match &r.first_failure {
                Some(t) => format!("bound={} first failure {t}", args.bound),
                None => format!("bound={} tuples={}", args.bound, r.checked),
            };
            all_ok &= report(out, r.holds(), &format!("binomial-lemma:{}", r.name), &detail);
        }
    }

    if wants(IdentityGroup::Tutte) {
        let (checked, failure) = verify_append_recursion_exhaustive(args.max_len)?;
        let detail = match &failure {
            Some(p) => format!("max-len={} fails at P={}", args.max_len, p.compact()),
            None => format!("max-len={} paths={checked}", args.max_len),
        };
        all_ok &= report(out, failure.is_none(), "tutte-append-recursion", &detail);

        let mut first_bad = None;
        let mut checked = 0;
        for p in all_paths(args.max_count_len) {
            checked += 1;
            if tutte_polynomial(&p)?.eval_at_ones() != count_weakly_below(&p, p.endpoint())? {
                first_bad = Some(p);
                break;
            }
        }
        let detail = match &first_bad {
            Some(p) => format!("max-len={} fails at P={}", args.max_count_len, p.compact()),
            None => format!("max-len={} paths={checked}", args.max_count_len),
        };
        all_ok &= report(out, first_bad.is_none(), "tutte-value-at-ones", &detail);
    }

    if wants(IdentityGroup::Bijection) {
        let mut rng = StdRng::seed_from_u64(args.seed);
        for width in 1..=args.m {
            let wall_sets: Vec<u64> = if width < 64 && (1u64 << width) as usize <= args.samples.max(1) {
                (0..1u64 << width).collect()
            } else {
                (0..args.samples).map(|_| rng.gen::<u64>() & (u64::MAX >> (64 - width.min(64)))).collect()
            };
            let mut failure = None;
            for mask in &wall_sets {
                let building = YoungBuilding::new(width, (1..=width).filter(|i| mask >> (i - 1) & 1 == 1))?;
                let counts = bijection_counts(&building)?;
                if !counts.agree() {
                    failure = Some((building, counts));
                    break;
                }
            }
            let detail = match &failure {
                Some((b, c)) => format!(
                    "m={width} walls={:?} tableaux={} paths={} partitions={}",
                    b.walls(),
                    c.tableaux,
                    c.paths_above,
                    c.partitions
                ),
                None => format!("m={width} wall-sets={}", wall_sets.len()),
            };
            all_ok &= report(out, failure.is_none(), "tableaux-paths-partitions", &detail);
        }
    }

    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_series(args: &SeriesArgs, out: &mut dyn Write) -> Result<i32> {
    let params = SequenceParams::new(args.family, &args.params)?;
    let s = generating_function(params, args.method, args.order)?;
    writeln!(out, "{}", serde_json::to_string(&s).expect("series serializes")).ok();
    Ok(0)
}

fn cmd_tableaux(args: &TableauxArgs, out: &mut dyn Write) -> Result<i32> {
    let building = match args.periodic {
        Some(n) => YoungBuilding::periodic(args.m, n),
        None => YoungBuilding::new(args.m, args.walls.iter().copied())?,
    };
    if args.count_only {
        writeln!(out, "{}", count_tableaux(&building)?).ok();
        return Ok(0);
    }
    let all = enumerate_tableaux(&building)?;
    for t in &all {
        writeln!(out, "{}\n  path {}  mu {:?}\n", t, t.path().compact(), t.reverse_partition().parts()).ok();
    }
    writeln!(out, "{} tableaux", all.len()).ok();
    Ok(0)
}

fn cmd_tutte(args: &TutteArgs, out: &mut dyn Write) -> Result<i32> {
    let path: LatticePath = args.path.parse()?;
    let t = tutte_polynomial(&path)?;
    writeln!(out, "{t}").ok();
    writeln!(out, "t(1,1) = {}", t.eval_at_ones()).ok();
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                write!(out, "{rendered}").ok();
            } else {
                write!(err, "{rendered}").ok();
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Sequence(a) => cmd_sequence(a, out),
        Command::Crosscheck(a) => cmd_crosscheck(a, out),
        Command::Identities(a) => cmd_identities(a, out),
        Command::Series(a) => cmd_series(a, out),
        Command::Tableaux(a) => cmd_tableaux(a, out),
        Command::Tutte(a) => cmd_tutte(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            match e {
                Error::Inconsistent(_) => 1,
                _ => 2,
            }
        }
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(args, &mut stdout.lock(), &mut stderr.lock());
    std::io::stdout().flush().ok();
    code
}
