use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oscgk::catalog::{catalog, catalog_jsonl, validate_hwv, Family, HwModuleSpec};
use oscgk::growth::{
    filtration_sweep, filtration_sweep_full, gk_formula, oracle_a_k, oracle_d_k, oracle_dprime_k,
    pointed_check, sweep_all, Budget, GrowthRecord, SweepOptions, Verdict, CSV_HEADER,
};
use oscgk::oscillator::{verify_brackets, verify_module_invariance};
use oscgk::{Error, ExecMode, GradedPair, Monomial, Poly, RepConfig};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "oscgk",
    version,
    about = "Oscillator representations of sl(n): verification, sweeps and GK dimensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the bracket relations and module invariance of the representation.
    VerifyRep(ConfigArgs),
    /// Validate one catalogued highest-weight vector.
    VerifyHwv {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[command(flatten)]
        pick: SpecArgs,
    },
    /// GK dimension: closed form, one sweep, or a full table.
    Gk {
        #[command(subcommand)]
        action: GkCommand,
    },
    /// Counting oracles for the spans used in the growth estimates.
    Oracle {
        #[arg(value_enum)]
        which: OracleWhich,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        n1: i64,
        /// Defaults to n1.
        #[arg(long, allow_hyphen_values = true)]
        n2: Option<i64>,
        #[arg(long)]
        k: usize,
    },
    /// Sweep to a depth and compare weight multiplicities with the pointedness list.
    Pointed {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[command(flatten)]
        pick: SpecArgs,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Export the catalogue for a configuration as JSON lines.
    Catalog {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long, default_value_t = 2)]
        param_bound: i64,
    },
}

#[derive(Subcommand)]
enum GkCommand {
    /// Print the closed-form value.
    Formula(ConfigArgs),
    /// Sweep one module and print its growth report.
    Estimate {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[command(flatten)]
        pick: SpecArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Close under every E_ij instead of the negative root vectors only.
        #[arg(long)]
        full: bool,
    },
    /// Sweep every catalogued module with n <= n-max and log the results.
    ///
    /// CSV columns: case,n,n1,n2,m1,m2,l1,l2,phi,degree_estimate,formula,verdict,elapsed_ms
    /// (phi is ';'-separated; an inconclusive degree is empty).
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        param_bound: i64,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Worker threads; defaults to the number of processors.
        #[arg(long)]
        jobs: Option<usize>,
        /// Re-run specs already present in the results log.
        #[arg(long)]
        force: bool,
        #[arg(long, env = "OSCGK_RESULTS", default_value = "results.jsonl")]
        results: PathBuf,
    },
}

#[derive(Args, Clone, Copy)]
struct ConfigArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    n1: i64,
    #[arg(long, allow_hyphen_values = true)]
    n2: i64,
}

impl ConfigArgs {
    fn config(&self) -> oscgk::Result<RepConfig> {
        RepConfig::from_signed(self.n, self.n1, self.n2)
    }
}

/// A module is chosen by family and parameters, or by its bidegree.
#[derive(Args, Clone)]
struct SpecArgs {
    /// Family label such as C1a, C5b, HOWE- or HOWE+.
    #[arg(long = "case")]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m2: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l2: Option<i64>,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    #[arg(long, default_value_t = 300.0)]
    budget_seconds: f64,
    #[arg(long, default_value_t = 500_000)]
    budget_rows: usize,
}

#[derive(Args, Clone, Copy)]
struct SweepArgs {
    /// Depth K; defaults to the expected GK dimension plus 4.
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long, default_value_t = oscgk::growth::DEFAULT_WINDOW)]
    window: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            max_k: self.max_k,
            window: self.window,
            budget: self.budget.budget(),
            mode: ExecMode::default(),
        }
    }
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_seconds: self.budget_seconds,
            max_rows: self.budget_rows,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleWhich {
    Ak,
    Dk,
    Dpk,
}

/// Either a usage problem or a failed check.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn check(ok: bool) -> CmdResult {
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn resolve_spec(cfg: RepConfig, pick: &SpecArgs) -> Result<HwModuleSpec, Failure> {
    let family = match &pick.family {
        Some(label) => Some(
            Family::parse(label).ok_or_else(|| Failure::Usage(format!("unknown case {label}")))?,
        ),
        None => None,
    };
    if let (Some(f), Some(m1)) = (family, pick.m1) {
        return Ok(HwModuleSpec::new(f, cfg, m1, pick.m2.unwrap_or(0))?);
    }
    let (Some(l1), Some(l2)) = (pick.l1, pick.l2) else {
        return Err(Failure::Usage(
            "give --case with --m1/--m2, or --l1 and --l2".into(),
        ));
    };
    let want = GradedPair::new(l1, l2);
    let bound = l1.abs().max(l2.abs()) + 1;
    catalog(&cfg, bound)?
        .into_iter()
        .find(|s| s.expected_grading == want && family.is_none_or(|f| s.family == f))
        .ok_or_else(|| {
            Failure::Usage(format!(
                "no catalogued module with bidegree {want} for {cfg}"
            ))
        })
}

fn invariance_samples(cfg: &RepConfig) -> oscgk::Result<Vec<Poly>> {
    let n = cfg.n();
    let mut samples = Vec::new();
    let vars = 2 * n;
    for a in 0..vars {
        for b in a..vars {
            let mut e = vec![0i32; vars];
            e[a] += 1;
            e[b] += 1;
            samples.push(Poly::monomial(
                Monomial::new(&e[..n], &e[n..]),
                oscgk::poly::rat(1),
            ));
        }
    }
    samples.push(Poly::one(n));
    samples.extend(
        catalog(cfg, 1)?
            .into_iter()
            .filter(|s| !s.family.is_howe())
            .map(|s| s.hwv),
    );
    Ok(samples)
}

fn cmd_verify_rep(args: ConfigArgs) -> CmdResult {
    let cfg = args.config()?;
    let brackets = verify_brackets(&cfg);
    let invariance = verify_module_invariance(&cfg, &invariance_samples(&cfg)?)?;
    #[derive(Serialize)]
    struct Out<'a> {
        brackets: &'a oscgk::oscillator::BracketReport,
        invariance: &'a oscgk::oscillator::InvarianceReport,
    }
    print_json(&Out {
        brackets: &brackets,
        invariance: &invariance,
    });
    check(brackets.passed() && invariance.passed())
}

fn cmd_verify_hwv(cfg: ConfigArgs, pick: &SpecArgs) -> CmdResult {
    let spec = resolve_spec(cfg.config()?, pick)?;
    let report = validate_hwv(&spec);
    print_json(&report);
    check(report.passed())
}

fn emit(record: &GrowthRecord, format: Format) {
    match format {
        Format::Json => print_json(record),
        Format::Csv => println!("{}", record.csv_row()),
    }
}

fn cmd_gk_estimate(cfg: ConfigArgs, pick: &SpecArgs, sweep: &SweepArgs, full: bool) -> CmdResult {
    let spec = resolve_spec(cfg.config()?, pick)?;
    let opts = sweep.options();
    let report = if full {
        filtration_sweep_full(&spec, &opts)?
    } else {
        filtration_sweep(&spec, &opts)?
    };
    if sweep.format == Format::Csv {
        println!("{CSV_HEADER}");
    }
    emit(&report.to_record(), sweep.format);
    check(report.verdict != Verdict::Mismatch)
}

type LogKey = (String, usize, usize, usize, i64, i64, usize);

fn log_key(r: &GrowthRecord) -> LogKey {
    (r.case.clone(), r.n, r.n1, r.n2, r.m1, r.m2, r.phi.len())
}

fn read_log(path: &Path) -> HashMap<LogKey, GrowthRecord> {
    let mut out = HashMap::new();
    let Ok(file) = std::fs::File::open(path) else {
        return out;
    };
    for line in BufReader::new(file).lines().map_while(Result::ok) {
        if let Ok(r) = serde_json::from_str::<GrowthRecord>(&line) {
            out.insert(log_key(&r), r);
        }
    }
    out
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
        {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

fn cmd_gk_table(
    n_max: usize,
    param_bound: i64,
    sweep: &SweepArgs,
    jobs: Option<usize>,
    force: bool,
    results: &Path,
) -> CmdResult {
    if n_max < 2 {
        return Err(Failure::Usage("--n-max must be at least 2".into()));
    }
    let opts = sweep.options();
    let logged = if force {
        HashMap::new()
    } else {
        read_log(results)
    };
    let mut todo = Vec::new();
    let mut reused = Vec::new();
    for n in 2..=n_max {
        for cfg in RepConfig::all_for(n) {
            for spec in catalog(&cfg, param_bound)? {
                let k = opts.max_k.unwrap_or(spec.expected_gk + 4);
                let key = (
                    spec.family.label().to_string(),
                    n,
                    cfg.n1(),
                    cfg.n2(),
                    spec.m1,
                    spec.m2,
                    k + 1,
                );
                match logged.get(&key) {
                    Some(r) => reused.push(r.clone()),
                    None => todo.push(spec),
                }
            }
        }
    }
    let reports = with_jobs(jobs, || sweep_all(&todo, &opts));
    let mut log = OpenOptions::new()
        .create(true)
        .append(true)
        .open(results)
        .map_err(|e| Failure::Usage(format!("cannot open {}: {e}", results.display())))?;
    let mut records = Vec::with_capacity(reports.len());
    for r in reports {
        let rec = r?.to_record();
        writeln!(
            log,
            "{}",
            serde_json::to_string(&rec).expect("serializable")
        )
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", results.display())))?;
        records.push(rec);
    }
    if sweep.format == Format::Csv {
        println!("{CSV_HEADER}");
    }
    for rec in &records {
        emit(rec, sweep.format);
    }
    let count = |v: Verdict| {
        records
            .iter()
            .chain(&reused)
            .filter(|r| r.verdict == v)
            .count()
    };
    #[derive(Serialize)]
    struct Summary {
        swept: usize,
        skipped: usize,
        #[serde(rename = "Match")]
        matched: usize,
        #[serde(rename = "Mismatch")]
        mismatched: usize,
        #[serde(rename = "Inconclusive")]
        inconclusive: usize,
    }
    let summary = Summary {
        swept: records.len(),
        skipped: reused.len(),
        matched: count(Verdict::Match),
        mismatched: count(Verdict::Mismatch),
        inconclusive: count(Verdict::Inconclusive),
    };
    eprintln!("{}", serde_json::to_string(&summary).expect("serializable"));
    check(summary.mismatched == 0)
}

fn cmd_oracle(which: OracleWhich, n: i64, n1: i64, n2: Option<i64>, k: usize) -> CmdResult {
    let cfg = RepConfig::from_signed(n, n1, n2.unwrap_or(n1))?;
    let report = match which {
        OracleWhich::Ak => oracle_a_k(&cfg, k)?,
        OracleWhich::Dk => oracle_d_k(&cfg, k)?,
        OracleWhich::Dpk => oracle_dprime_k(&cfg, k)?,
    };
    print_json(&report);
    check(report.agree || report.closed_value.is_none())
}

fn cmd_pointed(cfg: ConfigArgs, pick: &SpecArgs, depth: usize, budget: BudgetArgs) -> CmdResult {
    let spec = resolve_spec(cfg.config()?, pick)?;
    let opts = SweepOptions {
        budget: budget.budget(),
        ..SweepOptions::default()
    };
    let report = pointed_check(&spec, depth, &opts)?;
    print_json(&report);
    check(report.agree)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::VerifyRep(cfg) => cmd_verify_rep(cfg),
        Command::VerifyHwv { cfg, pick } => cmd_verify_hwv(cfg, &pick),
        Command::Gk { action } => match action {
            GkCommand::Formula(cfg) => {
                println!("{}", gk_formula(&cfg.config()?)?);
                Ok(())
            }
            GkCommand::Estimate {
                cfg,
                pick,
                sweep,
                full,
            } => cmd_gk_estimate(cfg, &pick, &sweep, full),
            GkCommand::Table {
                n_max,
                param_bound,
                sweep,
                jobs,
                force,
                results,
            } => cmd_gk_table(n_max, param_bound, &sweep, jobs, force, &results),
        },
        Command::Oracle {
            which,
            n,
            n1,
            n2,
            k,
        } => cmd_oracle(which, n, n1, n2, k),
        Command::Pointed {
            cfg,
            pick,
            depth,
            budget,
        } => cmd_pointed(cfg, &pick, depth, budget),
        Command::Catalog { cfg, param_bound } => {
            print!("{}", catalog_jsonl(&catalog(&cfg.config()?, param_bound)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
