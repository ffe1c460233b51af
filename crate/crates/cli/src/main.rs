//! `dpt`: command-line front end for doubly periodic tableau computations.
//!
//! Every subcommand emits a single JSON document on standard output (or an
//! ASCII rendering with `--pretty`), deterministically: identical invocations
//! produce identical bytes. Results can be cached content-addressed by the
//! invocation in `--cache-dir` / `$DPT_CACHE_DIR`.
//!
//! Exit codes: 0 success, 1 invalid invocation or parameters, 2 a
//! verification subcommand found a failing identity.

mod cache;
mod pretty;

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dpt_core::counting::{
    count_summary, dyck_enumeration, enumerate_mod_dl, naruse_check, verify_group_identities,
};
use dpt_core::daha::{verify_relations, DahaContext};
use dpt_core::fusion::{intertwiner_dim, pieri_v, t_scalar_check, theta_exponent};
use dpt_core::tableaux::enumerate_fillings;
use dpt_core::weyl::{reconstruct_from_content, ContentFn};
use dpt_core::{AlcoveWeight, Dpt, Params};

const EXIT_OK: i32 = 0;
const EXIT_INVALID: i32 = 1;
const EXIT_VERIFICATION_FAILED: i32 = 2;

#[derive(Parser, Serialize)]
#[command(name = "dpt", about = "doubly periodic tableau computations", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Also write the output document to this file.
    #[arg(long, global = true)]
    #[serde(skip)]
    output: Option<PathBuf>,

    /// Cache directory (defaults to $DPT_CACHE_DIR when set).
    #[arg(long, global = true)]
    #[serde(skip)]
    cache_dir: Option<PathBuf>,

    /// Bypass the result cache.
    #[arg(long, global = true)]
    #[serde(skip)]
    no_cache: bool,

    /// Human-readable ASCII tableau grids instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Parallelism hint; output is byte-identical regardless.
    #[arg(long, global = true)]
    #[serde(skip)]
    parallel: Option<usize>,
}

#[derive(Args, Serialize, Clone, Copy)]
struct ParamArgs {
    #[arg(long = "K")]
    big_k: i64,
    #[arg(long = "N")]
    big_n: i64,
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
}

impl ParamArgs {
    fn build(&self) -> anyhow::Result<Params> {
        Ok(Params::new(self.big_k, self.big_n, self.a, self.b)?)
    }
}

#[derive(Subcommand, Serialize)]
enum Command {
    /// Enumerate the valid fillings of the fundamental domain of a weight.
    Enumerate {
        #[command(flatten)]
        params: ParamArgs,
        /// Alcove weight, comma-separated, e.g. 1,-1
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Count tableaux modulo `<D,L>` and modulo `<pi>` (and Dyck paths if coprime).
    Count {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check every defining relation of the double affine Hecke algebra on
    /// the requested graded pieces. Exit code 2 if any relation fails.
    VerifyDaha {
        #[command(flatten)]
        params: ParamArgs,
        /// Degrees of graded pieces, comma-separated, e.g. -1,0,1
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        degrees: String,
        /// Also check connectivity of each graded piece under allowed swaps.
        #[arg(long)]
        connectivity: bool,
    },
    /// Check the symmetry-group identities pi^m = D^-a L^b and D^K L^-N = id.
    VerifyGroup {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Fusion-ring queries.
    Fusion {
        #[command(subcommand)]
        query: FusionQuery,
    },
    /// Excited-diagram hook-length counts against direct enumeration.
    Naruse {
        #[command(flatten)]
        params: ParamArgs,
        /// Restrict to one weight; default: all shapes with lambda_N = 0.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Rebuild a tableau from a content function window.
    Reconstruct {
        /// Content modulus A = N + K.
        #[arg(long)]
        modulus: i64,
        /// Content drift B = a + b mod A.
        #[arg(long, allow_negative_numbers = true)]
        drift: i64,
        /// Window C(1),...,C(m), comma-separated residues.
        #[arg(long, allow_hyphen_values = true)]
        content: String,
    },
    /// Enumerate the quotient via rational Dyck paths (gcd(K,N) = 1).
    Dyck {
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Subcommand, Serialize)]
enum FusionQuery {
    /// Pieri rule: decompose `V (x) [lambda]`.
    Pieri {
        #[arg(long = "K")]
        big_k: i64,
        #[arg(long = "N")]
        big_n: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Intertwiner-space dimension, by chain and tableau enumeration.
    Dim {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Twist eigenvalue exponent <lambda, lambda + 2 rho>.
    Theta {
        #[arg(long = "K")]
        big_k: i64,
        #[arg(long = "N")]
        big_n: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The scalar identity v^exponent = q^(a+b) = t^-1.
    Tscalar {
        #[command(flatten)]
        params: ParamArgs,
    },
}

fn parse_weight(s: &str) -> anyhow::Result<AlcoveWeight> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("cannot parse weight {s:?}"))?;
    Ok(AlcoveWeight::new(parts)?)
}

fn parse_i64_list(s: &str) -> anyhow::Result<Vec<i64>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| anyhow!("bad integer {p:?}: {e}"))
        })
        .collect()
}

fn check_weight(weight: &AlcoveWeight, big_k: i64, big_n: i64) -> anyhow::Result<()> {
    if weight.len() as i64 != big_n {
        return Err(anyhow!("weight {weight} must have N = {big_n} parts"));
    }
    if !weight.fits_alcove(big_k) {
        return Err(anyhow!("weight {weight} leaves the alcove for K = {big_k}"));
    }
    Ok(())
}

#[derive(Serialize)]
struct EnumerateDoc {
    params: Params,
    lambda: Vec<i64>,
    count: usize,
    words: Vec<String>,
    fillings: Vec<Dpt>,
}

#[derive(Serialize)]
struct DahaDoc {
    #[serde(flatten)]
    report: dpt_core::daha::RelationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    connectivity: Option<std::collections::BTreeMap<i64, bool>>,
}

#[derive(Serialize)]
struct GroupDoc {
    params: Params,
    #[serde(flatten)]
    report: dpt_core::counting::GroupIdentityReport,
}

#[derive(Serialize)]
struct PieriDoc {
    #[serde(rename = "K")]
    big_k: i64,
    #[serde(rename = "N")]
    big_n: i64,
    lambda: Vec<i64>,
    summands: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct DimDoc {
    params: Params,
    lambda: Vec<i64>,
    dim: u64,
}

#[derive(Serialize)]
struct ThetaDoc {
    #[serde(rename = "K")]
    big_k: i64,
    #[serde(rename = "N")]
    big_n: i64,
    lambda: Vec<i64>,
    exponent: i64,
}

#[derive(Serialize)]
struct NaruseRow {
    lambda: Vec<i64>,
    hook_length_count: String,
    enumerated: usize,
    ok: bool,
}

#[derive(Serialize)]
struct NaruseDoc {
    params: Params,
    shapes: Vec<NaruseRow>,
    all_ok: bool,
}

#[derive(Serialize)]
struct ReconstructDoc {
    modulus: i64,
    drift: i64,
    window: Vec<i64>,
    params: Params,
    word: String,
    dpt: Dpt,
}

#[derive(Serialize)]
struct DyckRow {
    word: String,
    lambda: Vec<i64>,
    fillings: usize,
}

#[derive(Serialize)]
struct DyckDoc {
    params: Params,
    paths: Vec<DyckRow>,
    total: usize,
}

/// Render the output document and decide the exit code.
fn execute(cli: &Cli) -> anyhow::Result<(String, i32)> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Enumerate { params, lambda } => {
            let p = params.build()?;
            let lam = parse_weight(lambda)?;
            check_weight(&lam, p.big_k, p.big_n)?;
            let fillings = enumerate_fillings(&lam, &p)?;
            if pretty {
                let mut out = String::new();
                out.push_str(&format!(
                    "{} fillings of Delta{} at {}\n",
                    fillings.len(),
                    lam,
                    p
                ));
                for dpt in &fillings {
                    out.push('\n');
                    out.push_str(&pretty::render(dpt));
                }
                return Ok((out, EXIT_OK));
            }
            let doc = EnumerateDoc {
                params: p,
                lambda: lam.parts().to_vec(),
                count: fillings.len(),
                words: fillings.iter().map(|d| d.word_string()).collect(),
                fillings,
            };
            Ok((to_json(&doc)?, EXIT_OK))
        }
        Command::Count { params } => {
            let p = params.build()?;
            let doc = count_summary(&p);
            Ok((to_json(&doc)?, EXIT_OK))
        }
        Command::VerifyDaha {
            params,
            degrees,
            connectivity,
        } => {
            let p = params.build()?;
            let degrees = parse_i64_list(degrees)?;
            let report = verify_relations(&p, &degrees)?;
            let conn = if *connectivity {
                let ctx = DahaContext::new(p)?;
                Some(
                    degrees
                        .iter()
                        .map(|&d| (d, ctx.orbit_connectivity(d)))
                        .collect(),
                )
            } else {
                None
            };
            let code = if report.all_passed()
                && conn
                    .as_ref()
                    .is_none_or(|c: &std::collections::BTreeMap<i64, bool>| {
                        c.values().all(|&ok| ok)
                    }) {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            let doc = DahaDoc {
                report,
                connectivity: conn,
            };
            Ok((to_json(&doc)?, code))
        }
        Command::VerifyGroup { params } => {
            let p = params.build()?;
            let sample: Vec<Dpt> = enumerate_mod_dl(&p).into_iter().map(|(_, d)| d).collect();
            let report = verify_group_identities(&p, &sample);
            let code = if report.pi_m_identity_ok && report.dk_ln_identity_ok {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            Ok((to_json(&GroupDoc { params: p, report })?, code))
        }
        Command::Fusion { query } => run_fusion(query),
        Command::Naruse { params, lambda } => {
            let p = params.build()?;
            let shapes: Vec<AlcoveWeight> = match lambda {
                Some(s) => {
                    let lam = parse_weight(s)?;
                    check_weight(&lam, p.big_k, p.big_n)?;
                    vec![lam]
                }
                None => shapes_lambda_n_zero(&p),
            };
            let mut rows = Vec::new();
            let mut all_ok = true;
            for lam in shapes {
                if !lam.dominated_by(&lam.shifted(p.a, p.b, &p)) {
                    continue;
                }
                let (hook_length_count, enumerated, ok) = naruse_check(&lam, &p)?;
                all_ok &= ok;
                rows.push(NaruseRow {
                    lambda: lam.parts().to_vec(),
                    hook_length_count,
                    enumerated,
                    ok,
                });
            }
            let code = if all_ok {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            Ok((
                to_json(&NaruseDoc {
                    params: p,
                    shapes: rows,
                    all_ok,
                })?,
                code,
            ))
        }
        Command::Reconstruct {
            modulus,
            drift,
            content,
        } => {
            let window = parse_i64_list(content)?;
            let cf = ContentFn::new(*modulus, *drift, window.clone())?;
            let (p, dpt) = reconstruct_from_content(&cf)?;
            if pretty {
                let mut out = format!("reconstructed at {}:\n\n", p);
                out.push_str(&pretty::render(&dpt));
                return Ok((out, EXIT_OK));
            }
            let doc = ReconstructDoc {
                modulus: *modulus,
                drift: *drift,
                window,
                params: p,
                word: dpt.word_string(),
                dpt,
            };
            Ok((to_json(&doc)?, EXIT_OK))
        }
        Command::Dyck { params } => {
            let p = params.build()?;
            let pairs = dyck_enumeration(&p)?;
            let total = pairs.len();
            let mut rows: Vec<DyckRow> = Vec::new();
            for (path, _) in &pairs {
                match rows.last_mut() {
                    Some(last) if last.lambda == path.lambda => last.fillings += 1,
                    _ => rows.push(DyckRow {
                        word: path.word_string(),
                        lambda: path.lambda.clone(),
                        fillings: 1,
                    }),
                }
            }
            Ok((
                to_json(&DyckDoc {
                    params: p,
                    paths: rows,
                    total,
                })?,
                EXIT_OK,
            ))
        }
    }
}

fn run_fusion(query: &FusionQuery) -> anyhow::Result<(String, i32)> {
    match query {
        FusionQuery::Pieri {
            big_k,
            big_n,
            lambda,
        } => {
            let lam = parse_weight(lambda)?;
            check_weight(&lam, *big_k, *big_n)?;
            let summands = pieri_v(&lam, *big_k)
                .into_iter()
                .map(|w| w.parts().to_vec())
                .collect();
            let doc = PieriDoc {
                big_k: *big_k,
                big_n: *big_n,
                lambda: lam.parts().to_vec(),
                summands,
            };
            Ok((to_json(&doc)?, EXIT_OK))
        }
        FusionQuery::Dim { params, lambda } => {
            let p = params.build()?;
            let lam = parse_weight(lambda)?;
            check_weight(&lam, p.big_k, p.big_n)?;
            let dim = intertwiner_dim(&lam, &p)?;
            let doc = DimDoc {
                params: p,
                lambda: lam.parts().to_vec(),
                dim,
            };
            Ok((to_json(&doc)?, EXIT_OK))
        }
        FusionQuery::Theta {
            big_k,
            big_n,
            lambda,
        } => {
            let lam = parse_weight(lambda)?;
            check_weight(&lam, *big_k, *big_n)?;
            let doc = ThetaDoc {
                big_k: *big_k,
                big_n: *big_n,
                lambda: lam.parts().to_vec(),
                exponent: theta_exponent(&lam),
            };
            Ok((to_json(&doc)?, EXIT_OK))
        }
        FusionQuery::Tscalar { params } => {
            let p = params.build()?;
            let report = t_scalar_check(&p)?;
            let code = if report.holds {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            Ok((to_json(&report)?, code))
        }
    }
}

fn shapes_lambda_n_zero(p: &Params) -> Vec<AlcoveWeight> {
    let n = p.big_n as usize;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![vec![]];
    while let Some(cur) = stack.pop() {
        if cur.len() == n - 1 {
            let mut parts = cur;
            parts.push(0);
            out.push(AlcoveWeight::new(parts).expect("weakly decreasing"));
            continue;
        }
        let hi = cur.last().copied().unwrap_or(p.big_k);
        for v in 0..=hi {
            let mut next = cur.clone();
            next.push(v);
            stack.push(next);
        }
    }
    out.sort_by(|x, y| y.parts().cmp(x.parts()));
    out
}

fn to_json<T: Serialize>(doc: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string(doc)?;
    s.push('\n');
    Ok(s)
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let cache = cache::Cache::resolve(cli.cache_dir.clone(), cli.no_cache)?;
    let key = cache::invocation_digest(&cli)?;
    let body = match cache.lookup(&key) {
        Some(hit) => hit,
        None => {
            let (body, code) = execute(&cli)?;
            cache.store(&key, &body, code)?;
            emit(&cli, &body)?;
            return Ok(code);
        }
    };
    emit(&cli, &body.bytes)?;
    Ok(body.exit_code)
}

fn emit(cli: &Cli, body: &str) -> anyhow::Result<()> {
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(body.as_bytes())?;
    stdout.flush()?;
    if let Some(path) = &cli.output {
        std::fs::write(path, body.as_bytes())
            .with_context(|| format!("cannot write output file {}", path.display()))?;
    }
    Ok(())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit();
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(EXIT_INVALID);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(EXIT_INVALID);
        }
    }
}
