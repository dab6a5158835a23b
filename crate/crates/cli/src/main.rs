//! Command line driver for the trace-code library: constructs codes by
//! brute force, verifies every closed form against them, evaluates single
//! Weil sums and sweeps parameter grids.
//!
//! Exit codes: 0 on success, 1 when any verification disagrees, 2 for
//! usage or parameter errors.

use std::io::IsTerminal;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tracecode::{
    code_params, cwe_bruteforce, griesmer_classify, pless_checks, verify_with_ctx,
    weight_distribution, weil_sum, weil_sum_closed, CodeSpec, FieldCtx,
};

mod render;

use render::{ConstructOutcome, SweepRow, SweepStatus, WeilOutcome};

#[derive(Parser)]
#[command(
    name = "tracecode",
    version,
    about = "Construct and verify few-weight trace codes over odd prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code by brute force and report its parameters
    Construct(ParamArgs),
    /// Check every closed-form claim against brute force
    Verify(ParamArgs),
    /// Evaluate one Weil sum, optionally with its closed form
    Weilsum(WeilArgs),
    /// Verify a whole grid of parameter cells
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ParamArgs {
    /// Odd prime characteristic
    #[arg(long)]
    p: u64,
    /// Extension degree of F_q = F_{p^e}; must be even
    #[arg(long)]
    e: u32,
    /// Frobenius exponent in the defining power x^(p^l + 1)
    #[arg(long)]
    l: u32,
    /// Modulus coefficients, low degree first with the leading 1 (e.g. 1,0,1)
    #[arg(long)]
    modulus: Option<String>,
    /// Worker threads for the brute-force enumeration
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct WeilArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Enumeration index of alpha
    #[arg(long)]
    alpha_index: u64,
    /// Enumeration index of beta
    #[arg(long)]
    beta_index: u64,
    /// Also evaluate the closed form (requires a nonzero alpha)
    #[arg(long)]
    closed_form: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated characteristics, e.g. 3,5
    #[arg(long)]
    p: String,
    /// Comma-separated extension degrees, e.g. 2,4
    #[arg(long)]
    e: String,
    /// Comma-separated Frobenius exponents, e.g. 1,2,3
    #[arg(long)]
    l: String,
    /// Worker threads for each cell's brute-force enumeration
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Weilsum(args) => weilsum(args),
        Command::Sweep(args) => sweep(args),
    };
    // Timing goes to stderr only, keeping stdout byte-identical across runs.
    eprintln!("elapsed: {:?}", started.elapsed());
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn use_color() -> bool {
    std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none()
}

fn parse_u64_list(text: &str, what: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(str::trim)
        .map(|piece| {
            piece
                .parse::<u64>()
                .map_err(|_| format!("invalid {what} entry {piece:?}: expected an unsigned integer"))
        })
        .collect()
}

/// Builds the field context, honoring a --modulus override.
fn field_for(args: &ParamArgs) -> Result<(CodeSpec, FieldCtx), String> {
    if args.jobs == 0 {
        return Err("jobs must be at least 1".into());
    }
    let spec = CodeSpec::new(args.p, args.e, args.l).map_err(|e| e.to_string())?;
    let ctx = match &args.modulus {
        None => FieldCtx::new(args.p, args.e),
        Some(text) => {
            let coeffs = parse_u64_list(text, "modulus")?;
            FieldCtx::with_modulus(args.p, args.e, &coeffs)
        }
    }
    .map_err(|e| e.to_string())?;
    Ok((spec, ctx))
}

fn construct(args: ParamArgs) -> Result<ExitCode, String> {
    let (spec, ctx) = field_for(&args)?;
    let cwe = cwe_bruteforce(&ctx, spec.l, args.jobs);
    let wd = weight_distribution(&cwe);
    // A failure here contradicts the dimension claim: report it as a
    // verification failure, not a usage error.
    let params = match code_params(&wd, spec.p, spec.e) {
        Ok(params) => params,
        Err(e) => {
            eprintln!("verification failure: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let pless = pless_checks(&wd, &spec);
    let griesmer =
        griesmer_classify(params.n, params.k, params.d, spec.p).map_err(|e| e.to_string())?;
    let healthy = pless.passed();

    let outcome = ConstructOutcome {
        p: spec.p,
        e: spec.e,
        l: spec.l,
        modulus: ctx.modulus().to_vec(),
        params,
        wd,
        cwe,
        pless,
        griesmer,
    };
    match args.format {
        Format::Text => print!("{}", render::construct_text(&outcome, use_color())),
        Format::Json => println!("{:#}", render::construct_json(&outcome)),
        Format::Csv => print!("{}", render::construct_csv(&outcome.wd)),
    }
    Ok(if healthy { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify_cmd(args: ParamArgs) -> Result<ExitCode, String> {
    if args.format == Format::Csv {
        return Err("verify does not support csv output; use text or json".into());
    }
    let (spec, ctx) = field_for(&args)?;
    let report = verify_with_ctx(&ctx, &spec, args.jobs).map_err(|e| e.to_string())?;
    match args.format {
        Format::Text => print!("{}", render::verify_text(&report, use_color())),
        Format::Json => println!("{:#}", render::verify_json(&report)),
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(if report.all_match() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn weilsum(args: WeilArgs) -> Result<ExitCode, String> {
    if args.params.format == Format::Csv {
        return Err("weilsum does not support csv output; use text or json".into());
    }
    let (spec, ctx) = field_for(&args.params)?;
    let alpha = ctx.element(args.alpha_index).map_err(|e| e.to_string())?;
    let beta = ctx.element(args.beta_index).map_err(|e| e.to_string())?;

    let brute = weil_sum(&ctx, spec.l, &alpha, &beta);
    let closed = if args.closed_form {
        // A zero alpha has no closed form; asking for one is a usage error.
        Some(weil_sum_closed(&ctx, spec.l, &alpha, &beta).map_err(|e| e.to_string())?)
    } else {
        None
    };

    let outcome = WeilOutcome {
        p: spec.p,
        e: spec.e,
        l: spec.l,
        alpha_index: args.alpha_index,
        beta_index: args.beta_index,
        brute,
        closed,
    };
    match args.params.format {
        Format::Text => print!("{}", render::weil_text(&outcome, use_color())),
        Format::Json => println!("{:#}", render::weil_json(&outcome)),
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(if outcome.matches() == Some(false) { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn sweep(args: SweepArgs) -> Result<ExitCode, String> {
    if args.jobs == 0 {
        return Err("jobs must be at least 1".into());
    }
    let ps = parse_u64_list(&args.p, "p")?;
    let es = parse_u64_list(&args.e, "e")?;
    let ls = parse_u64_list(&args.l, "l")?;
    if ps.is_empty() || es.is_empty() || ls.is_empty() {
        return Err("sweep needs at least one value for each of p, e, l".into());
    }

    let mut rows = Vec::new();
    let mut valid_cells = 0u64;
    let mut mismatches = 0u64;
    for &p in &ps {
        for &e in &es {
            for &l in &ls {
                let (e, l) = match (u32::try_from(e), u32::try_from(l)) {
                    (Ok(e), Ok(l)) => (e, l),
                    _ => {
                        rows.push(SweepRow {
                            p,
                            e: 0,
                            l: 0,
                            status: SweepStatus::Skipped("e and l must fit in 32 bits".into()),
                            params: None,
                            wd: None,
                        });
                        continue;
                    }
                };
                match cell_report(p, e, l, args.jobs) {
                    Err(reason) => rows.push(SweepRow {
                        p,
                        e,
                        l,
                        status: SweepStatus::Skipped(reason),
                        params: None,
                        wd: None,
                    }),
                    Ok((params, wd, all_match)) => {
                        valid_cells += 1;
                        if !all_match {
                            mismatches += 1;
                        }
                        rows.push(SweepRow {
                            p,
                            e,
                            l,
                            status: if all_match { SweepStatus::Ok } else { SweepStatus::Mismatch },
                            params: Some(params),
                            wd: Some(wd),
                        });
                    }
                }
            }
        }
    }

    match args.format {
        Format::Text => print!("{}", render::sweep_text(&rows, use_color())),
        Format::Json => println!("{:#}", render::sweep_json(&rows)),
        Format::Csv => print!("{}", render::sweep_csv(&rows)),
    }
    if valid_cells == 0 {
        return Err("no sweep cell satisfies the parameter hypothesis".into());
    }
    Ok(if mismatches == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cell_report(
    p: u64,
    e: u32,
    l: u32,
    jobs: usize,
) -> Result<(tracecode::CodeParams, tracecode::WeightDistribution, bool), String> {
    let spec = CodeSpec::new(p, e, l).map_err(|e| e.to_string())?;
    let ctx = FieldCtx::new(p, e).map_err(|e| e.to_string())?;
    let report = verify_with_ctx(&ctx, &spec, jobs).map_err(|e| e.to_string())?;
    let params = code_params(&report.brute_wd, p, e).map_err(|e| e.to_string())?;
    Ok((params, report.brute_wd.clone(), report.all_match()))
}
