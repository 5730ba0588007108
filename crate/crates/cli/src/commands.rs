use std::fmt;
use std::path::Path;

use anyhow::{Context, Result};
use grldpc::alist::{read_alist, to_alist, write_alist};
use grldpc::code::{density_stats, girth_check, staircase_code, CheckMatrix, Origin};
use grldpc::cycles::conflict_free_columns;
use grldpc::search::{search_units, SearchConfig};
use grldpc::sim::{run_ber_sweep, BpAlgorithm, DecoderParams, Mode, SimCode, StopRule};
use grldpc::text::format_term;
use grldpc::{build_code, certify_girth_gt4, difference_collection, parse_element, Certification};
use grldpc::{Error, GroupRingElement, Selection};
use serde_json::json;

use crate::{
    AnalyzeArgs, ConstructArgs, DecoderArg, ExportArgs, ModeArg, SearchArgs, SimulateArgs,
};

/// Raised when `--require-girth` finds a 4-cycle.
#[derive(Debug)]
struct GirthFailure(String);

impl fmt::Display for GirthFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "girth check failed: {}", self.0)
    }
}

impl std::error::Error for GirthFailure {}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<GirthFailure>().is_some() {
        return 4;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::NotAUnit) => 3,
        Some(Error::Io(_)) => 1,
        Some(_) => 2,
        None => 1,
    }
}

/// Element text, or the contents of a file when `arg` names one.
fn load_element(arg: &str) -> Result<GroupRingElement> {
    let path = Path::new(arg);
    let text = if !arg.contains(':') && path.is_file() {
        std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    Ok(parse_element(&text)?)
}

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    Error::InvalidConfig(msg.into()).into()
}

pub fn analyze(args: AnalyzeArgs) -> Result<()> {
    let v = load_element(&args.element)?;
    let spec = v.spec();
    let diffs = difference_collection(&v);
    let repeated: Vec<String> = diffs
        .repeated()
        .iter()
        .map(|x| {
            format!(
                "{}x{}",
                format_term(spec, x.index()),
                diffs.multiplicity(*x)
            )
        })
        .collect();
    let cert = certify_girth_gt4(&v);
    let unit = v.is_unit();

    if !args.json {
        println!("element      {v}");
        println!(
            "group        {spec} (order {}, {})",
            spec.order(),
            if spec.is_abelian() {
                "abelian"
            } else {
                "non-abelian"
            }
        );
        println!("weight       {} (density {})", v.weight(), v.density());
        println!(
            "differences  {}, repeated: {}",
            diffs.total(),
            if repeated.is_empty() {
                "none".to_string()
            } else {
                repeated.join(" ")
            }
        );
        match &cert {
            Certification::Certified => println!("4-cycles     none (certified)"),
            Certification::Conflicts(report) => {
                println!(
                    "4-cycles     {} conflicting quadruple(s)",
                    report.quadruples.len()
                );
                for q in &report.quadruples {
                    println!(
                        "  {}·({})⁻¹ = {}·({})⁻¹ = {}",
                        format_term(spec, q.m.index()),
                        format_term(spec, q.r.index()),
                        format_term(spec, q.p.index()),
                        format_term(spec, q.q.index()),
                        format_term(spec, q.difference(spec).index())
                    );
                }
                let keep = conflict_free_columns(&v);
                println!(
                    "  {} of {} columns can be kept without 4-cycles",
                    keep.len(),
                    spec.order()
                );
            }
        }
        println!("unit         {}", if unit { "yes" } else { "no" });
    }

    let (quadruples, shifts) = match &cert {
        Certification::Certified => (0, Vec::new()),
        Certification::Conflicts(r) => (
            r.quadruples.len(),
            r.forbidden_shifts
                .iter()
                .map(|s| format_term(spec, s.index()))
                .collect(),
        ),
    };
    let record = json!({
        "element": v.to_string(),
        "group": spec.to_string(),
        "order": spec.order(),
        "weight": v.weight(),
        "density": v.density().to_string(),
        "certified": cert.is_certified(),
        "repeated_differences": repeated,
        "quadruples": quadruples,
        "forbidden_shifts": shifts,
        "unit": unit,
    });
    println!("{record}");
    Ok(())
}

pub fn search(args: SearchArgs) -> Result<()> {
    let cfg = SearchConfig {
        group: args.group.parse()?,
        support_sizes: args.min_support..=args.max_support,
        max_candidates: args.candidates,
        seed: args.seed,
        require_unit: args.require_unit,
    };
    let found = search_units(&cfg)?;
    for c in found.iter().take(args.limit.unwrap_or(usize::MAX)) {
        println!("{}", serde_json::to_string(c)?);
    }
    eprintln!(
        "{} distinct candidates kept, {} certified units",
        found.len(),
        found
            .iter()
            .filter(|c| c.certified && c.unit == Some(true))
            .count()
    );
    Ok(())
}

/// `"0,2,5-9"` to a list of indices.
fn parse_index_list(spec: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad column index '{s}'")))
        };
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(Error::Parse(format!("empty range '{part}'")).into());
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

/// Number of generator rows for rate `p/q` in a group of order `n`.
fn rows_for_rate(rate: &str, n: usize) -> Result<usize> {
    let bad = || Error::Parse(format!("rate '{rate}' must look like p/q with 0 < p < q"));
    let (p, q) = rate.split_once('/').ok_or_else(bad)?;
    let (p, q): (usize, usize) = (
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    );
    if p == 0 || p >= q {
        return Err(bad().into());
    }
    if !(n * p).is_multiple_of(q) {
        return Err(invalid(format!(
            "rate {p}/{q} does not divide the group order {n}"
        )));
    }
    Ok(n * p / q)
}

fn check_girth(h: &CheckMatrix, require: bool) -> Result<bool> {
    match girth_check(h) {
        None => Ok(true),
        Some(w) if require => Err(GirthFailure(format!(
            "rows {} and {} share columns {} and {}",
            w.rows.0, w.rows.1, w.cols.0, w.cols.1
        ))
        .into()),
        Some(_) => Ok(false),
    }
}

fn write_origin(h: &CheckMatrix, path: Option<&Path>) -> Result<()> {
    if let (Some(path), Some(origin)) = (path, &h.origin) {
        std::fs::write(path, origin.to_json()? + "\n").map_err(Error::from)?;
    }
    Ok(())
}

pub fn construct(args: ConstructArgs) -> Result<()> {
    let v = load_element(&args.element)?;
    let n = v.spec().order();

    if let Some(m) = args.staircase {
        if args.generator.is_some() {
            return Err(invalid("--generator is not available with --staircase"));
        }
        let h = staircase_code(&v, m)?;
        let girth_ok = check_girth(&h, args.require_girth)?;
        write_alist(&h.bits, &args.out)?;
        write_origin(&h, args.origin.as_deref())?;
        let stats = density_stats(&h);
        println!(
            "check {}x{}  rate {:.4}  rank {}  max row/col weight {}/{}  4-cycle free: {}",
            h.bits.rows(),
            h.bits.cols(),
            (h.bits.cols() - h.bits.rows()) as f64 / h.bits.cols() as f64,
            h.bits.rank(),
            stats.max_row_weight,
            stats.max_col_weight,
            girth_ok
        );
        return Ok(());
    }

    let selection = match (&args.rate, &args.delete_cols, args.avoid_conflicts) {
        (Some(rate), None, false) => {
            let count = rows_for_rate(rate, n)?;
            if args.random {
                Selection::Random {
                    count,
                    seed: args.seed,
                }
            } else {
                Selection::Interleaved { count }
            }
        }
        (None, Some(cols), false) => Selection::Explicit {
            rows: parse_index_list(cols)?,
        },
        (None, None, true) => Selection::ConflictAvoiding,
        _ => {
            return Err(invalid(
                "give exactly one of --rate, --delete-cols, --avoid-conflicts, --staircase",
            ))
        }
    };
    let code = build_code(&v, &selection)?;
    let girth_ok = check_girth(&code.check, args.require_girth)?;
    write_alist(&code.check.bits, &args.out)?;
    if let Some(path) = &args.generator {
        write_alist(&code.generator.bits, path)?;
    }
    write_origin(&code.check, args.origin.as_deref())?;
    let stats = density_stats(&code.check);
    println!(
        "code ({}, {})  rate {:.4}  check {}x{}  max row/col weight {}/{}  4-cycle free: {}",
        code.design.n(),
        code.design.k(),
        code.design.rate(),
        code.check.bits.rows(),
        code.check.bits.cols(),
        stats.max_row_weight,
        stats.max_col_weight,
        girth_ok
    );
    Ok(())
}

pub fn simulate(args: SimulateArgs) -> Result<()> {
    let h = read_alist(&args.alist)?;
    let code = SimCode::from_check(&h)?;
    let params = DecoderParams {
        algorithm: match args.decoder {
            DecoderArg::Sp => BpAlgorithm::SumProduct,
            DecoderArg::Ms => BpAlgorithm::MinSum,
        },
        max_iterations: args.max_iter,
        early_stop: true,
    };
    let stop = StopRule {
        min_block_errors: args.min_block_errors,
        max_blocks: args.max_blocks,
        max_bits: args.max_bits,
    };
    let mode = match args.mode {
        ModeArg::AllZero => Mode::AllZero,
        ModeArg::Random => Mode::RandomMessages,
    };
    let report = run_ber_sweep(&code, &args.ebno, &params, &stop, mode, args.seed)?;
    let json_path = grldpc::report::emit(&report, &args.out)?;
    println!(
        "({}, {}) code, seed {}",
        report.n, report.k, report.rng_seed
    );
    for p in &report.points {
        println!(
            "{:>6.2} dB  BER {:.3e}  BLER {:.3e}  blocks {}  avg iters {:.2}",
            p.ebno_db, p.ber, p.bler, p.blocks, p.avg_iters
        );
    }
    eprintln!("wrote {} and {}", args.out.display(), json_path.display());
    Ok(())
}

pub fn export(args: ExportArgs) -> Result<()> {
    let sources = [
        args.element.is_some(),
        args.origin.is_some(),
        args.alist.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(invalid("give exactly one of --element, --origin, --alist"));
    }
    let h = if let Some(e) = &args.element {
        load_element(e)?.to_matrix().into_bits()
    } else if let Some(path) = &args.origin {
        let text = std::fs::read_to_string(path).map_err(Error::from)?;
        Origin::from_json(&text)?.regenerate()?.bits
    } else if let Some(path) = &args.alist {
        read_alist(path)?
    } else {
        unreachable!("one source is present")
    };
    match &args.out {
        Some(path) => write_alist(&h, path)?,
        None => print!("{}", to_alist(&h)),
    }
    Ok(())
}
