//! Command-line surface: root systems and good Lyndon words, seeds,
//! exchange-graph enumeration, Newton-Okounkov simplices, and the
//! hook-identity verifier.
//!
//! Exit codes: 0 success (and verified), 1 verification failed, 2 usage
//! error, 3 unsupported configuration (exceptional type with a
//! non-natural order), 4 internal invariant violation.

mod json;
mod off;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use okbodies_core::cluster::{enumerate_seeds, initial_seed, mutate, SeedContext};
use okbodies_core::hookalg::{peterson_proctor_report, verify_corhook_psis, verify_prophook_psis};
use okbodies_core::lyndon::{compute_good_lyndon, AlphabetOrder};
use okbodies_core::okbody::{delta_seed, delta_total};
use okbodies_core::rootsys::{longest_element, CartanData, Family};
use okbodies_core::Error as CoreError;

const DEFAULT_CAP: usize = 20_000;

#[derive(Parser)]
#[command(
    name = "okbodies",
    about = "Good Lyndon words, cluster seeds, Newton-Okounkov simplices and hook identities for finite-type root systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the positive roots with their good Lyndon words; with
    /// --w, also the inversion set in the order-induced convex order.
    Roots(RootsArgs),
    /// Print the seed of a reduced word (optionally after mutations).
    Seed(SeedArgs),
    /// Enumerate the exchange graph breadth-first.
    Enumerate(EnumerateArgs),
    /// Emit the simplices of the enumerated seeds (JSON, optional OFF
    /// projection).
    Polytopes(PolytopesArgs),
    /// Check the hook identities over the full enumeration.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Root system, e.g. A3, B2, D4, E6.
    #[arg(long = "type", value_name = "TYPE")]
    type_: String,
    /// Alphabet order as a permutation, e.g. 2,1,3. Natural when
    /// omitted.
    #[arg(long, value_name = "PERM")]
    order: Option<String>,
    /// Output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    job: JobArgs,
    /// Reduced word (comma-separated letters) or "w0".
    #[arg(long, value_name = "WORD")]
    w: Option<String>,
}

#[derive(Args)]
struct SeedArgs {
    #[command(flatten)]
    job: JobArgs,
    /// Reduced word (comma-separated letters) or "w0".
    #[arg(long, value_name = "WORD")]
    w: String,
    /// Mutation directions (1-based vertices) applied in order.
    #[arg(long, value_name = "DIRS")]
    mutate: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    job: JobArgs,
    #[arg(long, value_name = "WORD")]
    w: String,
    /// Seed-count cap; the finiteness flag reports whether closure was
    /// reached.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct PolytopesArgs {
    #[command(flatten)]
    job: JobArgs,
    #[arg(long, value_name = "WORD")]
    w: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Coordinates (1-based) to delete for the OFF export; the
    /// projection must land in 3 dimensions. Requires --out.
    #[arg(long, value_name = "COORDS")]
    project: Option<String>,
    /// Add decimal renderings next to exact values.
    #[arg(long)]
    float: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    job: JobArgs,
    #[arg(long, value_name = "WORD")]
    w: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Verify against seeds from a JSON file (the `enumerate` output or
    /// a bare array of seed objects) instead of enumerating.
    #[arg(long, value_name = "PATH")]
    seeds: Option<PathBuf>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> CliError {
        let code = match err {
            CoreError::UnsupportedConfiguration { .. } => 3,
            CoreError::InvalidType { .. }
            | CoreError::InvalidLetter { .. }
            | CoreError::InvalidOrder
            | CoreError::EmptyWord
            | CoreError::NonReducedWord
            | CoreError::FrozenIndex(_)
            | CoreError::DimensionMismatch { .. }
            | CoreError::ZeroVector
            | CoreError::ShuffleBoundExceeded { .. }
            | CoreError::IncompleteEnumeration => 2,
            CoreError::NegativeValuation { .. } | CoreError::Internal(_) => 4,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Roots(args) => cmd_roots(args),
        Command::Seed(args) => cmd_seed(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Polytopes(args) => cmd_polytopes(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn parse_type(s: &str) -> Result<CartanData, CliError> {
    let mut chars = s.chars();
    let family = chars
        .next()
        .and_then(Family::from_letter)
        .ok_or_else(|| CliError::usage(format!("bad type {:?}; expected e.g. A3, B2, E6", s)))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| CliError::usage(format!("bad rank in type {:?}", s)))?;
    Ok(CartanData::new(family, rank)?)
}

fn parse_letters(s: &str, what: &str) -> Result<Vec<u8>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| CliError::usage(format!("bad {} entry {:?}", what, t)))
        })
        .collect()
}

fn parse_order(cartan: &CartanData, order: &Option<String>) -> Result<AlphabetOrder, CliError> {
    match order {
        None => Ok(AlphabetOrder::natural(cartan.rank)),
        Some(s) => {
            let perm = parse_letters(s, "order")?;
            if perm.len() != cartan.rank {
                return Err(CliError::usage(format!(
                    "order lists {} letters but the rank is {}",
                    perm.len(),
                    cartan.rank
                )));
            }
            Ok(AlphabetOrder::new(&perm)?)
        }
    }
}

/// Builds the working context: an explicit word is used as given, "w0"
/// resolves to the order-induced reduced word of the longest element.
fn build_context(
    cartan: &CartanData,
    order: &AlphabetOrder,
    w: &str,
) -> Result<SeedContext, CliError> {
    if w == "w0" {
        let w0 = longest_element(cartan);
        Ok(SeedContext::for_order(cartan, order, &w0)?)
    } else {
        let letters = parse_letters(w, "word")?;
        Ok(SeedContext::new(cartan, order, &letters)?)
    }
}

fn emit(out: &Option<PathBuf>, content: String) -> Result<(), CliError> {
    match out {
        None => {
            print!("{}", content);
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::usage(format!("cannot write {}: {}", path.display(), e))),
    }
}

fn cmd_roots(args: RootsArgs) -> Result<(), CliError> {
    let cartan = parse_type(&args.job.type_)?;
    let order = parse_order(&cartan, &args.job.order)?;
    let table = compute_good_lyndon(&cartan, &order)?;
    let roots: Vec<json::RootEntry> = (0..table.len())
        .map(|p| json::RootEntry {
            root: table.root(p).clone(),
            height: table.root(p).iter().sum(),
            word: json::word_str(cartan.rank, table.word(p)),
        })
        .collect();
    let (w_letters, inversion) = match &args.w {
        None => (None, None),
        Some(w) => {
            let ctx = build_context(&cartan, &order, w)?;
            let mut entries: Vec<(usize, json::RootEntry)> = ctx
                .betas
                .iter()
                .map(|beta| {
                    let p = table
                        .index_of_root(beta)
                        .expect("inversion roots are positive");
                    (
                        p,
                        json::RootEntry {
                            root: beta.clone(),
                            height: beta.iter().sum(),
                            word: json::word_str(cartan.rank, table.word(p)),
                        },
                    )
                })
                .collect();
            entries.sort_by_key(|(p, _)| *p);
            (
                Some(ctx.word.letters().to_vec()),
                Some(entries.into_iter().map(|(_, e)| e).collect()),
            )
        }
    };
    let doc = json::RootsDoc {
        type_: args.job.type_.to_uppercase(),
        order: order.permutation(),
        roots,
        w: w_letters,
        inversion_set: inversion,
    };
    emit(&args.job.out, json::to_pretty(&doc))
}

fn cmd_seed(args: SeedArgs) -> Result<(), CliError> {
    let cartan = parse_type(&args.job.type_)?;
    let order = parse_order(&cartan, &args.job.order)?;
    let ctx = build_context(&cartan, &order, &args.w)?;
    let mut seed = initial_seed(&ctx)?;
    if let Some(dirs) = &args.mutate {
        for dir in parse_letters(dirs, "mutation direction")? {
            let k = dir as usize;
            if k == 0 || k > ctx.len() {
                return Err(CliError::usage(format!(
                    "mutation direction {} outside 1..={}",
                    k,
                    ctx.len()
                )));
            }
            seed = mutate(&seed, &ctx, k - 1)?;
        }
    }
    emit(&args.job.out, json::to_pretty(&json::seed_doc(&seed, &ctx)))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    if args.cap == 0 {
        return Err(CliError::usage("--cap must be positive"));
    }
    let cartan = parse_type(&args.job.type_)?;
    let order = parse_order(&cartan, &args.job.order)?;
    let ctx = build_context(&cartan, &order, &args.w)?;
    let e = enumerate_seeds(&ctx, args.cap)?;
    let doc = json::EnumerateDoc {
        type_: args.job.type_.to_uppercase(),
        order: order.permutation(),
        word: ctx.word.letters().to_vec(),
        finite: e.finite,
        count: e.seeds.len(),
        seeds: e.seeds.iter().map(|s| json::seed_doc(s, &ctx)).collect(),
    };
    emit(&args.job.out, json::to_pretty(&doc))
}

fn parse_projection(ctx: &SeedContext, spec: &str) -> Result<Vec<usize>, CliError> {
    let mut drop: Vec<usize> = Vec::new();
    for c in parse_letters(spec, "projection coordinate")? {
        let c = c as usize;
        if c == 0 || c > ctx.len() {
            return Err(CliError::usage(format!(
                "projection coordinate {} outside 1..={}",
                c,
                ctx.len()
            )));
        }
        if !drop.contains(&(c - 1)) {
            drop.push(c - 1);
        }
    }
    if ctx.len() - drop.len() != 3 {
        return Err(CliError::usage(format!(
            "projection must land in 3 dimensions; {} - {} = {}",
            ctx.len(),
            drop.len(),
            ctx.len() - drop.len()
        )));
    }
    Ok(drop)
}

fn cmd_polytopes(args: PolytopesArgs) -> Result<(), CliError> {
    if args.cap == 0 {
        return Err(CliError::usage("--cap must be positive"));
    }
    let cartan = parse_type(&args.job.type_)?;
    let order = parse_order(&cartan, &args.job.order)?;
    let ctx = build_context(&cartan, &order, &args.w)?;
    let e = enumerate_seeds(&ctx, args.cap)?;
    let total = delta_total(&ctx);
    let mut simplices = Vec::with_capacity(e.seeds.len());
    for seed in &e.seeds {
        simplices.push(delta_seed(seed, &ctx)?);
    }
    let projection = match &args.project {
        None => None,
        Some(spec) => {
            if args.job.out.is_none() {
                return Err(CliError::usage("--project requires --out DIRECTORY"));
            }
            Some(parse_projection(&ctx, spec)?)
        }
    };
    match &args.job.out {
        None => {
            let doc = json::PolytopesDoc {
                type_: args.job.type_.to_uppercase(),
                order: order.permutation(),
                word: ctx.word.letters().to_vec(),
                finite: e.finite,
                total: json::polytope_doc(&total, &ctx, args.float),
                seeds: simplices
                    .iter()
                    .map(|s| json::polytope_doc(s, &ctx, args.float))
                    .collect(),
            };
            emit(&None, json::to_pretty(&doc))
        }
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|err| {
                CliError::usage(format!("cannot create {}: {}", dir.display(), err))
            })?;
            write_file(
                dir,
                "total.json",
                json::to_pretty(&json::polytope_doc(&total, &ctx, args.float)),
            )?;
            for (i, s) in simplices.iter().enumerate() {
                write_file(
                    dir,
                    &format!("seed_{:03}.json", i),
                    json::to_pretty(&json::polytope_doc(s, &ctx, args.float)),
                )?;
            }
            if let Some(drop) = projection {
                write_file(
                    dir,
                    "total.off",
                    off::off_document(&off::project(&total.vertices, &drop)),
                )?;
                for (i, s) in simplices.iter().enumerate() {
                    write_file(
                        dir,
                        &format!("seed_{:03}.off", i),
                        off::off_document(&off::project(&s.vertices, &drop)),
                    )?;
                }
            }
            Ok(())
        }
    }
}

fn write_file(dir: &Path, name: &str, content: String) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, content)
        .map_err(|e| CliError::usage(format!("cannot write {}: {}", path.display(), e)))
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.cap == 0 {
        return Err(CliError::usage("--cap must be positive"));
    }
    let cartan = parse_type(&args.job.type_)?;
    let order = parse_order(&cartan, &args.job.order)?;
    let ctx = build_context(&cartan, &order, &args.w)?;
    let psis: Vec<Vec<Vec<i64>>> = match &args.seeds {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {}", path.display(), e)))?;
            let file: json::SeedFile = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("bad seed file {}: {}", path.display(), e)))?;
            let psis = file.into_psis();
            for psi in &psis {
                if psi.len() != ctx.len() || psi.iter().any(|col| col.len() != ctx.len()) {
                    return Err(CliError::usage(format!(
                        "seed file psi dimensions do not match the word length {}",
                        ctx.len()
                    )));
                }
            }
            psis
        }
        None => {
            let e = enumerate_seeds(&ctx, args.cap)?;
            if !e.finite {
                return Err(CliError::usage(format!(
                    "enumeration exceeded --cap {}; raise the cap to verify",
                    args.cap
                )));
            }
            e.seeds.iter().map(|s| s.psi.clone()).collect()
        }
    };
    let psi_refs: Vec<&[Vec<i64>]> = psis.iter().map(|p| p.as_slice()).collect();
    let prophook = verify_prophook_psis(&ctx, &psi_refs)
        .map_err(|e| CliError::failed(format!("verification aborted: {}", e)))?;
    let corhook = verify_corhook_psis(&ctx, &psi_refs)
        .map_err(|e| CliError::failed(format!("verification aborted: {}", e)))?;
    let pp = peterson_proctor_report(&ctx);
    let doc = json::VerifyDoc {
        w: ctx.word.letters().to_vec(),
        order: order.permutation(),
        lhs_forms: ctx.betas.clone(),
        seeds: psis.len(),
        verdict: prophook.verified(),
        corhook: json::CorhookDoc {
            lhs: json::rational_str(&corhook.hook_side),
            rhs: json::rational_str(&corhook.seed_side),
        },
        peterson_proctor: json::PetersonProctorDoc {
            hook: json::rational_str(&pp.hook),
            reduced_words: pp.reduced_words.to_string(),
            matches: pp.matches,
        },
    };
    emit(&args.job.out, json::to_pretty(&doc))?;
    if prophook.verified() && corhook.verified() {
        Ok(())
    } else {
        Err(CliError::failed(
            "hook identities do not hold for the given seeds",
        ))
    }
}
