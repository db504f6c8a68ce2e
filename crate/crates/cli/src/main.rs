use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use orthocodes::code::{Engine, DEFAULT_EXHAUSTIVE_CAP};
use orthocodes::construct::Provenance;
use orthocodes::extend::{self, ExtensionPattern};
use orthocodes::group::{self, GeneratorSet, DEFAULT_POINT_CAP};
use orthocodes::harness::{self, CodeRecord, Construction, SearchSpec};
use orthocodes::{Elem, Error, FqMatrix, LinearCode, PrimeField};

#[derive(Parser, Debug)]
#[command(name = "orthocodes", version, about = "Self-dual codes from orthogonal matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Best-of random search over one construction
    Search(SearchArgs),
    /// Try to reach the table target for a (q, 2n) cell
    Cell(CellArgs),
    /// Extend a self-dual code from a matrix file and complete it
    Extend(ExtendArgs),
    /// Orthogonal group tools
    #[command(subcommand)]
    Group(GroupCommand),
    /// Check a generator matrix file and report its parameters
    Verify(VerifyArgs),
    /// Archive maintenance
    #[command(subcommand)]
    Archive(ArchiveCommand),
}

#[derive(Args, Debug)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Cap on q^k for exhaustive enumeration
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    max_enum: u128,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Auto,
    Exhaustive,
    Bz,
    MdsCert,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Exhaustive => Engine::Exhaustive,
            EngineArg::Bz => Engine::Bz,
            EngineArg::MdsCert => Engine::MdsCert,
        }
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    q: u32,
    /// Half-length n of the [2n, n] code
    #[arg(long)]
    n: usize,
    #[arg(long)]
    construction: String,
    #[arg(long, default_value_t = 1000)]
    iters: u64,
    #[arg(long)]
    word_length: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stop once this distance is reached; exit 1 if it is not
    #[arg(long)]
    target: Option<usize>,
    /// How orthogonal factors are drawn: uniform, ku-words or whole-group
    #[arg(long, default_value = "uniform")]
    sampling: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args, Debug)]
struct CellArgs {
    #[arg(long)]
    q: u32,
    /// Half-length n of the [2n, n] code
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 100_000)]
    iters: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtensionKind {
    Two,
    Four,
    #[value(name = "2+2")]
    TwoPlusTwo,
    Split,
}

#[derive(Args, Debug)]
struct ExtendArgs {
    /// Generator matrix of a self-dual code
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ExtensionKind::Two)]
    kind: ExtensionKind,
    /// Number of random completions to compare
    #[arg(long, default_value_t = 16)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    /// Largest q^n the permutation action may have
    #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
    point_cap: u128,
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Order of K_u and of O_n(q)
    Order(GroupArgs),
    /// Orbit of a vector under K_u
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        /// Space-separated entries; defaults to e_1
        #[arg(long)]
        vector: Option<String>,
    },
    /// Index of K_u in O_n(q)
    Probe(GroupArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Subcommand, Debug)]
enum ArchiveCommand {
    /// Re-verify every record of an archive
    Check {
        #[arg(long)]
        out: PathBuf,
    },
}

/// Command failure carrying its exit status.
enum Failure {
    TargetNotMet,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } => 3,
        Error::NoCandidate => 1,
        _ => 2,
    }
}

fn field(q: u32) -> Result<PrimeField, Error> {
    PrimeField::new(q as u64)
}

fn read_matrix(path: &Path) -> Result<FqMatrix, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    text.parse()
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

fn print_record(record: &CodeRecord) {
    println!(
        "{:<16}[{}, {}, {}] over GF({})",
        "parameters",
        record.length(),
        record.half_length,
        record.d,
        record.q
    );
    println!("{:<16}{}", "class", record.classification.class);
    if let Some(w) = &record.enumerator {
        println!("{:<16}{}", "enumerator", w);
    } else if record.mds_certificate {
        println!("{:<16}MDS certificate", "evidence");
    }
    println!("{:<16}", "generator");
    print!("{}", record.generator.to_text());
    println!();
    print!("{}", record.to_key_values());
}

fn archive(record: &CodeRecord, out: &Option<PathBuf>) -> Result<(), Error> {
    if let Some(dir) = out {
        let mut record = record.clone();
        record.timestamp = Some(now());
        let path = harness::archive_write(&record, dir)?;
        println!("archived={}", path.display());
    }
    Ok(())
}

fn search(args: SearchArgs) -> Outcome {
    let construction: Construction = args.construction.parse()?;
    let mut spec = SearchSpec::new(args.q, args.n, construction);
    spec.iterations = args.iters;
    spec.word_length = args.word_length;
    spec.seed = args.seed;
    spec.engine = args.engine.engine.into();
    spec.max_enum = args.engine.max_enum;
    spec.stop_at = args.target;
    spec.sampling = args.sampling.parse()?;
    let out = harness::run_search_outcome(&spec)?;
    println!("{:<16}{}", "construction", construction);
    println!("{:<16}{}", "samples", out.samples);
    print_record(&out.record);
    archive(&out.record, &args.out)?;
    match args.target {
        Some(t) if out.record.d < t => Err(Failure::TargetNotMet),
        _ => Ok(()),
    }
}

fn cell(args: CellArgs) -> Outcome {
    let report = harness::reproduce_cell(args.q, 2 * args.n, args.iters, args.seed)?;
    for a in &report.attempts {
        println!(
            "{:<14}{:<14}samples {:<10}best {}",
            a.construction.name(),
            a.sampling.name(),
            a.samples,
            a.best.map_or("none".to_string(), |d| d.to_string())
        );
    }
    println!();
    print!("{}", report.to_key_values());
    if let Some(record) = &report.record {
        archive(record, &args.out)?;
    }
    if report.met {
        Ok(())
    } else {
        Err(Failure::TargetNotMet)
    }
}

fn extend_cmd(args: ExtendArgs) -> Outcome {
    let code = LinearCode::new(read_matrix(&args.input)?)?;
    let f = code.field();
    let k = code.dimension();
    let req = orthocodes::code::DistanceRequest {
        engine: args.engine.engine.into(),
        exhaustive_cap: args.engine.max_enum,
        ..Default::default()
    };
    let full = match args.kind {
        ExtensionKind::Two | ExtensionKind::Split => extend::extend_two_completed(
            &code,
            &ExtensionPattern::default_two(f, k)?,
            matches!(args.kind, ExtensionKind::Split),
            args.iters,
            args.seed,
            &req,
        )?,
        ExtensionKind::Four => extend::extend_four_completed(
            &code,
            &ExtensionPattern::default_four(f, k)?,
            args.iters,
            args.seed,
            &req,
        )?,
        ExtensionKind::TwoPlusTwo => extend::extend_two_plus_two_completed(
            &code,
            &ExtensionPattern::default_two_plus_two(f, k + 1)?,
            args.iters,
            args.seed,
            &req,
        )?,
    };
    let kind = match args.kind {
        ExtensionKind::Two => "extend-two",
        ExtensionKind::Four => "extend-four",
        ExtensionKind::TwoPlusTwo => "extend-2+2",
        ExtensionKind::Split => "split",
    };
    let provenance = Provenance::new(kind)
        .with("input", args.input.display())
        .with("trials", args.iters)
        .with("seed", args.seed);
    let record = CodeRecord::from_code(&full, req.engine, req.exhaustive_cap, req.bz_budget, provenance)?;
    print_record(&record);
    archive(&record, &args.out)?;
    Ok(())
}

fn group_cmd(cmd: GroupCommand) -> Outcome {
    match cmd {
        GroupCommand::Order(g) => {
            let f = field(g.q)?;
            let gens = GeneratorSet::ku(g.n, f, None)?;
            let ku = group::group_order_with_cap(&gens, g.point_cap)?;
            let on = group::orthogonal_group_order_formula(g.n, f)?;
            println!("{:<10}{}", "K_u", ku);
            println!("{:<10}{}", "O_n(q)", on);
            println!();
            println!("n={}\nq={}\nku_order={ku}\non_order={on}", g.n, g.q);
        }
        GroupCommand::Probe(g) => {
            let f = field(g.q)?;
            let report = group::conjecture_probe_with_cap(g.n, f, g.point_cap)?;
            println!("{:<10}{}", "index", report.index);
            println!();
            print!("{}", report.to_key_values());
        }
        GroupCommand::Orbit { group: g, vector } => {
            let f = field(g.q)?;
            let v: Vec<Elem> = match vector {
                Some(s) => s
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<i64>()
                            .map(|x| f.from_i64(x))
                            .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                    })
                    .collect::<Result<_, _>>()?,
                None => (0..g.n).map(|i| Elem::from(i == 0)).collect(),
            };
            let gens = GeneratorSet::ku(g.n, f, None)?;
            let cap = usize::try_from(g.point_cap).unwrap_or(usize::MAX);
            let orbit = group::orbit(&v, &gens, cap)?;
            let norm = f.dot(&v, &v);
            let points = (g.q as u128).checked_pow(g.n as u32).unwrap_or(u128::MAX);
            let sphere: Option<BTreeSet<Vec<Elem>>> = (points <= g.point_cap).then(|| {
                (0..points as u64)
                    .map(|mut c| {
                        (0..g.n)
                            .map(|_| {
                                let d = (c % g.q as u64) as Elem;
                                c /= g.q as u64;
                                d
                            })
                            .collect::<Vec<_>>()
                    })
                    .filter(|w| f.dot(w, w) == norm)
                    .collect()
            });
            println!("{:<14}{}", "orbit size", orbit.len());
            if let Some(s) = &sphere {
                println!("{:<14}{}", "norm class", s.len());
            }
            println!();
            println!("orbit_size={}\nnorm={norm}", orbit.len());
            if let Some(s) = sphere {
                println!("norm_class_size={}\nequal={}", s.len(), s == orbit);
            }
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Outcome {
    let code = LinearCode::new(read_matrix(&args.input)?)?;
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual.into());
    }
    let provenance = Provenance::new("verify").with("input", args.input.display());
    let engine: Engine = args.engine.engine.into();
    let record = CodeRecord::from_code(
        &code,
        engine,
        args.engine.max_enum,
        Some(orthocodes::code::DEFAULT_BZ_BUDGET),
        provenance,
    )?;
    print_record(&record);
    Ok(())
}

fn archive_cmd(cmd: ArchiveCommand) -> Outcome {
    let ArchiveCommand::Check { out } = cmd;
    let report = harness::archive_verify(&out)?;
    for issue in &report.issues {
        for p in &issue.problems {
            println!("{:<28}{}", issue.path, p);
        }
    }
    println!();
    println!(
        "records={}\nmismatches={}\nclean={}",
        report.records,
        report.issues.len(),
        report.is_clean()
    );
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::TargetNotMet)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Search(a) => search(a),
        Command::Cell(a) => cell(a),
        Command::Extend(a) => extend_cmd(a),
        Command::Group(c) => group_cmd(c),
        Command::Verify(a) => verify(a),
        Command::Archive(c) => archive_cmd(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::TargetNotMet) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
