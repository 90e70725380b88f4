//! Command-line front end. Every command is deterministic for a fixed seed;
//! exit codes are 0 (pass), 1 (a law failed) and 2 (bad input or config).

use crate::bicat::{
    validate_bicategory, IdentityPseudofunctor, Interval, PresentedBicategory, PresentedBicategoryDoc, Suspension,
    TwoGroupZ2,
};
use crate::bimonoid::{
    make_discrete_semiring, make_sym_sets, validate_bimonoidal, Additive, SemiringTables, StrictBimonoidal,
};
use crate::error::CatError;
use crate::gamma::verify_special;
use crate::matmod::{build_mod, validate_mod_smb, GlMonoidal, ModDoc, ModR};
use crate::nerve::{
    bar_equals_nerve, check_cylinder, check_icon_category, check_products, check_simplicial, enumerate_nerve,
    export_truncated, level_sizes, BlockShift, NerveLimits,
};
use crate::report::{export_report, CheckReport};
use crate::sampling::Budget;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "smbicat", version, about = "Coherence checks for finite symmetric monoidal bicategories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrix bicategories over a bimonoidal base.
    Modr {
        #[command(subcommand)]
        command: ModrCommand,
    },
    /// The Γ-bicategory of a serialized Mod_R.
    Gamma {
        #[command(subcommand)]
        command: GammaCommand,
    },
    /// Segal nerve of a presented bicategory.
    Nerve {
        #[command(subcommand)]
        command: NerveCommand,
    },
    /// Runs a named check suite.
    Check(CheckArgs),
}

#[derive(Debug, Subcommand)]
pub enum ModrCommand {
    /// Builds Mod_R and writes it as a document.
    Build {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum GammaCommand {
    /// Checks that Ĉ(n) is equivalent to Cⁿ through p_n, i_n and ξ.
    VerifySpecial {
        /// A document written by `modr build`.
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 80)]
        budget: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Cells generated per hom when building the universe.
        #[arg(long, default_value_t = 16)]
        per_hom: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum NerveCommand {
    /// Prints the number of simplices at each level up to `--dim`.
    Count {
        #[arg(long)]
        bicat: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Writes the truncated simplicial category: simplices, faces,
    /// degeneracies and icons.
    Export {
        #[arg(long)]
        bicat: PathBuf,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseKind {
    Symsets,
    Semiring,
}

#[derive(Debug, Clone, Args)]
pub struct BaseArgs {
    #[arg(long, value_enum, default_value_t = BaseKind::Symsets)]
    pub base: BaseKind,
    /// Largest set size for sym-sets; top element of the truncated naturals
    /// for a semiring without `--tables`.
    #[arg(long, default_value_t = 1)]
    pub bound: usize,
    /// Semiring tables document (`--base semiring` only).
    #[arg(long)]
    pub tables: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub maxdim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    BicatAxioms,
    Bimonoidal,
    ModSmb,
    GammaSpecial,
    Nerve,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::BicatAxioms => "bicat-axioms",
            Suite::Bimonoidal => "bimonoidal",
            Suite::ModSmb => "mod-smb",
            Suite::GammaSpecial => "gamma-special",
            Suite::Nerve => "nerve",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Instances per law before sampling kicks in.
    #[arg(long, default_value_t = 80)]
    pub budget: u64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// A presented bicategory added to `bicat-axioms` and `nerve`.
    #[arg(long)]
    pub bicat: Option<PathBuf>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

/// Everything a suite run depends on.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub base: StrictBimonoidal,
    pub maxdim: usize,
    pub n: usize,
    pub budget: Budget,
    pub presented: Option<PresentedBicategory>,
}

/// Input problems, reported with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, serde_json::Error),
    Cat(CatError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Parse(p, e) => write!(f, "{}: line {}, column {}: {e}", p.display(), e.line(), e.column()),
            CliError::Cat(e) => write!(f, "{e}"),
        }
    }
}

impl From<CatError> for CliError {
    fn from(e: CatError) -> Self {
        CliError::Cat(e)
    }
}

fn read_doc<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(path.into(), e))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.into(), e))
}

fn pretty<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn load_base(args: &BaseArgs) -> Result<StrictBimonoidal, CliError> {
    match (args.base, &args.tables) {
        (BaseKind::Symsets, None) => Ok(make_sym_sets(args.bound)?),
        (BaseKind::Symsets, Some(_)) => Err(CatError::Domain("--tables needs --base semiring".into()).into()),
        (BaseKind::Semiring, Some(p)) => Ok(make_discrete_semiring(read_doc(p)?)?),
        (BaseKind::Semiring, None) => Ok(make_discrete_semiring(SemiringTables::truncated_naturals(args.bound))?),
    }
}

fn sub(mut r: CheckReport, name: &str) -> CheckReport {
    r.suite = name.into();
    r
}

/// `Σ` of the permutation groupoid on `{0, 1, 2}` under `+`.
fn sigma_p() -> Result<Suspension<Additive>, CatError> {
    Ok(Suspension(Additive(make_sym_sets(2)?)))
}

fn nerve_suite(m: &ModR, budget: &Budget) -> Result<CheckReport, CatError> {
    let lim = NerveLimits::default();
    let s = sigma_p()?;
    let mut report = CheckReport::new("nerve");
    report.absorb(sub(check_simplicial(&s, 3, &lim)?, "sigma-p"));
    report.absorb(sub(check_simplicial(&Suspension(TwoGroupZ2 { twisted: true }), 3, &lim)?, "sigma-z2-twisted"));
    report.absorb(sub(check_icon_category(&s, &enumerate_nerve(&s, 2, &lim)?)?, "sigma-p-icons"));
    report.absorb(sub(check_products(&s, &Interval, 2, &lim)?, "sigma-p-times-interval"));
    report.absorb(sub(bar_equals_nerve(&crate::bicat::DiscreteMonoid::trivial(), 3, &lim)?, "bar-trivial"));
    report.absorb(sub(bar_equals_nerve(&GlMonoidal { m, n: 1 }, 3, &lim)?, "bar-gl1"));
    report.absorb(sub(bar_equals_nerve(&s.0, 2, &lim)?, "bar-permutations"));
    let id = IdentityPseudofunctor(&s);
    let eta = BlockShift { r: s.0 .0.clone(), k: 1 };
    report.absorb(sub(check_cylinder(&s, &s, &id, &id, &eta, budget), "cylinder-block-shift"));
    Ok(report)
}

/// Runs one suite, or all of them in a fixed order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<CheckReport, CatError> {
    let m = build_mod(cfg.base.clone(), cfg.maxdim)?;
    let b = &cfg.budget;
    let one = |s: Suite| -> Result<CheckReport, CatError> {
        Ok(match s {
            Suite::BicatAxioms => {
                let mut r = CheckReport::new("bicat-axioms");
                r.absorb(sub(validate_bicategory(&m, b), "mod-r"));
                r.absorb(sub(validate_bicategory(&Suspension(TwoGroupZ2 { twisted: true }), b), "sigma-z2-twisted"));
                if let Some(p) = &cfg.presented {
                    r.absorb(sub(validate_bicategory(p, b), "presented"));
                }
                r
            }
            Suite::Bimonoidal => validate_bimonoidal(&cfg.base, b),
            Suite::ModSmb => validate_mod_smb(&m, b),
            Suite::GammaSpecial => verify_special(&m, cfg.n, 16, b)?,
            Suite::Nerve => {
                let mut r = nerve_suite(&m, b)?;
                if let Some(p) = &cfg.presented {
                    r.absorb(sub(check_simplicial(p, 2, &NerveLimits::default())?, "presented"));
                }
                r
            }
            Suite::All => unreachable!(),
        })
    };
    if cfg.suite != Suite::All {
        return one(cfg.suite).map(|r| sub(r, cfg.suite.name()));
    }
    let mut all = CheckReport::new("all");
    for s in [Suite::Bimonoidal, Suite::BicatAxioms, Suite::ModSmb, Suite::GammaSpecial, Suite::Nerve] {
        all.absorb(sub(one(s)?, s.name()));
    }
    Ok(all)
}

fn finish(report: &CheckReport, path: Option<&Path>) -> Result<ExitCode, CliError> {
    print!("{}", report.summary());
    println!("verdict: {}", if report.passed() { "pass" } else { "fail" });
    if let Some(p) = path {
        export_report(report, p).map_err(|e| CliError::Io(p.into(), e))?;
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn load_presented(path: &Path) -> Result<PresentedBicategory, CliError> {
    let doc: PresentedBicategoryDoc = read_doc(path)?;
    PresentedBicategory::from_doc(&doc).map_err(CliError::Cat)
}

fn limits_for(dim: usize) -> NerveLimits {
    NerveLimits { max_dim: dim.max(3), ..NerveLimits::default() }
}

pub fn execute(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Modr { command: ModrCommand::Build { base, out } } => {
            let m = build_mod(load_base(&base)?, base.maxdim)?;
            write_text(&out, &pretty(&m.to_doc()))?;
            for n in 0..=base.maxdim {
                println!("GL_{n}: {}", m.gl(n).len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { command: GammaCommand::VerifySpecial { base, n, budget, seed, per_hom, report } } => {
            let doc: ModDoc = read_doc(&base)?;
            let m = ModR::from_doc(&doc)?;
            let rep = verify_special(&m, n, per_hom, &Budget::new(budget, seed))?;
            finish(&rep, report.as_deref())
        }
        Command::Nerve { command: NerveCommand::Count { bicat, dim } } => {
            let b = load_presented(&bicat)?;
            for (p, k) in level_sizes(&b, dim, &limits_for(dim))?.into_iter().enumerate() {
                println!("level {p}: {k}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nerve { command: NerveCommand::Export { bicat, dim, out } } => {
            if dim > 3 {
                return Err(CatError::Domain(format!("export is truncated at dimension 3, got {dim}")).into());
            }
            let b = load_presented(&bicat)?;
            write_text(&out, &pretty(&export_truncated(&b, dim, &NerveLimits::default())?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(args) => {
            let cfg = SuiteConfig {
                suite: args.suite,
                base: load_base(&args.base)?,
                maxdim: args.base.maxdim,
                n: args.n,
                budget: Budget::new(args.budget, args.seed),
                presented: args.bicat.as_deref().map(load_presented).transpose()?,
            };
            finish(&run_suite(&cfg)?, args.report.as_deref())
        }
    }
}

/// Parses arguments, runs, and maps errors to exit code 2.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
