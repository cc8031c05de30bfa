//! The `projrich` command-line driver.
//!
//! Exit codes: 0 when every selected check passes, 1 on a verification
//! failure, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coxeter::{verify_demazure_affine, verify_demazure_finite, Coxeter, NodeSet};
use crate::error::{Error, Result};
use crate::genfun::{
    a_brute, f_brute, two_rho_b, two_rho_d, type_a_f, type_b_series, type_c_count, type_d_series,
    verify_closed_forms, GenfunRow, QPoly,
};
use crate::localization::{
    graded_comparison, lemma_suite, matrix_identity_k, matrix_identity_k_with,
    reduced_word_independence, support_and_degree, verify_cmain, verify_kmain, BruhatMatrix,
    LaurentK, LocContext, PolyH, SuiteOptions,
};
use crate::report::Report;
use crate::richardson_poset::{
    poset_dump, verify_appendix, verify_diagnostics, verify_prop_equiv, verify_theorem_combin,
    Instance,
};
use crate::root_data::{CartanType, Coweight, RootSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Default seed of the randomized suites.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(
    name = "projrich",
    version,
    about = "Projected Richardson varieties and admissible sets, exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump Q_J, its Hasse diagram and diagnostics, and Adm.
    Poset(PosetArgs),
    /// Run verification suites and print a JSON report.
    Verify(VerifyArgs),
    /// Evaluate generating functions.
    Genfun(GenfunArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Cartan type.
    #[arg(long = "type", value_parser = parse_type)]
    pub cartan_type: CartanType,
    #[arg(long)]
    pub rank: usize,
    /// Coweight in fundamental-coweight coordinates, comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    pub coweight: Vec<i32>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub group: GroupArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Maximal length of affine elements in sampled and ball-enumerated checks.
    #[arg(long, default_value_t = 5)]
    pub max_len: usize,
    /// Number of random affine samples.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Negate the first root of every subword expansion.
    #[arg(long, hide = true)]
    pub inject_sign_flip: bool,
}

#[derive(Debug, Args)]
pub struct GenfunArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Print F(1) only.
    #[arg(long)]
    pub at_one: bool,
    /// Print the rank generating function A_J instead of F.
    #[arg(long)]
    pub rank_poly: bool,
    #[arg(long = "type", value_parser = parse_type)]
    pub cartan_type: Option<CartanType>,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub coweight: Option<Vec<i32>>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plain coefficient list when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Combinatorics,
    Demazure,
    Cohomology,
    Ktheory,
    Matrix,
    Genfun,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeB")]
    TypeB,
    #[value(name = "typeC")]
    TypeC,
    #[value(name = "typeD")]
    TypeD,
    Brute,
}

fn parse_type(s: &str) -> std::result::Result<CartanType, Error> {
    s.parse()
}

/// Validated group data shared by the subcommands.
pub struct RunConfig {
    pub instance: Instance,
}

impl RunConfig {
    pub fn new(ty: CartanType, rank: usize, coweight: Vec<i32>) -> Result<RunConfig> {
        let rs = RootSystem::new(ty, rank)?;
        let lambda = Coweight(coweight);
        rs.check_dominant(&lambda)?;
        Ok(RunConfig {
            instance: Instance::new(rs, lambda)?,
        })
    }

    fn from_group(g: &GroupArgs) -> Result<RunConfig> {
        RunConfig::new(g.cartan_type, g.rank, g.coweight.clone())
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Poset(a) => cmd_poset(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Genfun(a) => cmd_genfun(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                CliError::Input(Error::Verification(_) | Error::InexactDivision(_)) => EXIT_FAILED,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn emit(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    text: &str,
) -> std::result::Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn words(w: &[usize]) -> String {
    w.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_poset(a: &PosetArgs, stdout: &mut dyn Write) -> std::result::Result<i32, CliError> {
    let cfg = RunConfig::from_group(&a.group)?;
    let dump = poset_dump(&cfg.instance)?;
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&dump)? + "\n",
        Format::Csv => {
            let mut s = String::from("x_word,y_word,grade\n");
            for e in &dump.elements {
                s += &format!("{},{},{}\n", words(&e.x_word), words(&e.y_word), e.grade);
            }
            s
        }
    };
    emit(&a.output.out, stdout, &text)?;
    Ok(EXIT_OK)
}

fn combinatorics(inst: &Instance) -> Vec<Report> {
    let mut out = vec![
        verify_theorem_combin(inst),
        verify_prop_equiv(inst),
        verify_diagnostics(inst),
    ];
    let fin = inst.finite();
    for j in NodeSet::all_subsets(fin.nodes()) {
        out.push(verify_appendix(fin, &j));
    }
    out
}

fn demazure(inst: &Instance, opts: &SuiteOptions) -> Vec<Report> {
    vec![
        verify_demazure_finite(inst.finite()),
        verify_demazure_affine(inst.affine(), opts.samples, opts.max_len, opts.seed),
    ]
}

fn cohomology(ctx: &LocContext, inst: &Instance, opts: &SuiteOptions) -> Vec<Report> {
    let mut out = vec![verify_cmain(ctx, inst)];
    out.extend(lemma_suite::<PolyH>(ctx, std::slice::from_ref(inst), opts));
    out.push(support_and_degree(ctx, opts.max_len.min(4)));
    out.push(reduced_word_independence::<PolyH>(ctx, opts.max_len));
    out
}

fn ktheory(ctx: &LocContext, inst: &Instance, opts: &SuiteOptions) -> Vec<Report> {
    let mut out = vec![verify_kmain(ctx, inst)];
    out.extend(lemma_suite::<LaurentK>(
        ctx,
        std::slice::from_ref(inst),
        opts,
    ));
    out.push(graded_comparison(ctx, opts.max_len.min(4)));
    out.push(reduced_word_independence::<LaurentK>(ctx, opts.max_len));
    out
}

fn matrix(ctx: &LocContext) -> Vec<Report> {
    vec![
        matrix_identity_k(ctx),
        matrix_identity_k_with(ctx, BruhatMatrix::Mobius),
    ]
}

/// The reports of one suite, in a fixed order.
pub fn run_suite(
    suite: Suite,
    inst: &Instance,
    opts: &SuiteOptions,
    sign_flip: bool,
) -> Vec<Report> {
    let ctx = || LocContext::with_sign_flip(inst.affine(), sign_flip);
    match suite {
        Suite::Combinatorics => combinatorics(inst),
        Suite::Demazure => demazure(inst, opts),
        Suite::Cohomology => cohomology(&ctx(), inst, opts),
        Suite::Ktheory => ktheory(&ctx(), inst, opts),
        Suite::Matrix => matrix(&ctx()),
        Suite::Genfun => vec![verify_closed_forms(inst)],
        Suite::All => {
            let c = ctx();
            let mut out = combinatorics(inst);
            out.extend(demazure(inst, opts));
            out.extend(cohomology(&c, inst, opts));
            out.extend(ktheory(&c, inst, opts));
            out.extend(matrix(&c));
            out.push(verify_closed_forms(inst));
            out
        }
    }
}

fn cmd_verify(
    a: &VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::result::Result<i32, CliError> {
    let cfg = RunConfig::from_group(&a.group)?;
    if a.max_len == 0 || a.samples == 0 {
        return Err(Error::InvalidInput("--max-len and --samples must be positive".into()).into());
    }
    let opts = SuiteOptions {
        samples: a.samples,
        max_len: a.max_len,
        seed: a.seed,
    };
    let reports = run_suite(a.suite, &cfg.instance, &opts, a.inject_sign_flip);
    for r in &reports {
        writeln!(stderr, "{}", r.summary_line())?;
    }
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
        Format::Csv => {
            let mut s = String::from("theorem,instance,n_checked,n_failed\n");
            for r in &reports {
                s += &format!(
                    "\"{}\",\"{}\",{},{}\n",
                    r.theorem, r.instance, r.n_checked, r.n_failed
                );
            }
            s
        }
    };
    emit(&a.output.out, stdout, &text)?;
    Ok(if reports.iter().all(Report::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("--{flag} is required for {family}")))
}

/// Largest `n` accepted by the series families; coefficients stay in `i64`.
const MAX_SERIES_N: u32 = 30;

fn genfun_row(a: &GenfunArgs) -> Result<GenfunRow> {
    let row = |family: &str, params: String, f: QPoly, a: Option<QPoly>| GenfunRow {
        family: family.into(),
        f_at_one: f.eval_one(),
        params,
        f,
        a,
    };
    match a.family {
        Family::TypeA => {
            let (k, n) = (need(a.k, "k", "typeA")?, need(a.n, "n", "typeA")?);
            let f = type_a_f(k, n)?;
            let rank = f.reverse((k * (n - k)) as usize);
            Ok(row("typeA", format!("k={k};n={n}"), f, Some(rank)))
        }
        Family::TypeB | Family::TypeD => {
            let n = need(a.n, "n", "typeB/typeD")?;
            let (name, lo, series, d) = if a.family == Family::TypeB {
                ("typeB", 1, type_b_series(), two_rho_b(n))
            } else {
                ("typeD", 2, type_d_series(), two_rho_d(n))
            };
            if !(lo..=MAX_SERIES_N).contains(&n) {
                return Err(Error::InvalidInput(format!(
                    "{name} needs {lo} <= n <= {MAX_SERIES_N}"
                )));
            }
            let f = series.coefficient(n as usize);
            let rank = f.reverse(d);
            Ok(row(name, format!("n={n}"), f, Some(rank)))
        }
        Family::TypeC => {
            let n = need(a.n, "n", "typeC")?;
            if !a.at_one || n > 30 {
                return Err(Error::InvalidInput(
                    "typeC provides F(1) only, for n <= 30; pass --at-one".into(),
                ));
            }
            let count = type_c_count(n);
            let f_at_one =
                i64::try_from(count).map_err(|_| Error::InvalidInput("F(1) exceeds i64".into()))?;
            Ok(GenfunRow {
                family: "typeC".into(),
                params: format!("n={n}"),
                f: QPoly::zero(),
                a: None,
                f_at_one,
            })
        }
        Family::Brute => {
            let ty = need(a.cartan_type, "type", "brute")?;
            let rank = need(a.rank, "rank", "brute")?;
            let lambda = a
                .coweight
                .clone()
                .ok_or_else(|| Error::InvalidInput("--coweight is required for brute".into()))?;
            let cfg = RunConfig::new(ty, rank, lambda.clone())?;
            let f = f_brute(&cfg.instance);
            let params = format!(
                "{ty}{rank};lambda={}",
                lambda
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Ok(row("brute", params, f, Some(a_brute(&cfg.instance))))
        }
    }
}

fn cmd_genfun(a: &GenfunArgs, stdout: &mut dyn Write) -> std::result::Result<i32, CliError> {
    if a.at_one && a.rank_poly {
        return Err(Error::InvalidInput("--at-one and --rank-poly are exclusive".into()).into());
    }
    let row = genfun_row(a)?;
    let text = match a.format {
        None if a.at_one => format!("{}\n", row.f_at_one),
        None if a.rank_poly => format!("{}\n", row.a.clone().unwrap_or_else(QPoly::zero)),
        None => format!("{}\n", row.f),
        Some(Format::Csv) => format!("{}\n{}\n", GenfunRow::CSV_HEADER, row.to_csv()),
        Some(Format::Json) => serde_json::to_string_pretty(&row)? + "\n",
    };
    emit(&a.out, stdout, &text)?;
    Ok(EXIT_OK)
}
