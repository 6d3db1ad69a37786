//! `gcalc`: expansions, triangles, brute-force tables and identity checks.
//!
//! Exit status is 0 on success, 1 when a verification suite fails and 2 on
//! usage, parse or bound errors.

mod config;
mod emit;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use grammar_calculus::dsl::{parse_grammar, parse_polynomial};
use grammar_calculus::oracles::{
    cop_stat_table, enumerate_cops, Caps, OpenerStat, PermutationCensus,
};
use grammar_calculus::triangles::{TriangleKind, TriangleTable};
use grammar_calculus::verifier::{run_suites, SuiteId, VerifyContext};
use grammar_calculus::{builtin, Grammar, Letter, Style};
use num_bigint::BigInt;

use emit::{Format, Table};

#[derive(Parser)]
#[command(
    name = "gcalc",
    version,
    about = "Exact grammar calculus: D^n expansions, triangles and identity checks"
)]
struct Cli {
    /// Caps file with `key = value` lines (permutations, cops, signed, matchings, depth).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GrammarArgs {
    /// Grammar in the rule language, or a path to a file containing it.
    #[arg(long, conflicts_with = "builtin")]
    grammar: Option<String>,
    /// Built-in grammar: g1, g2, g3, g4, g5, gB, g6, stirling, eulerian.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print D^n(start).
    Derive {
        #[command(flatten)]
        grammar: GrammarArgs,
        /// Start polynomial (defaults to the built-in grammar's start, else x).
        #[arg(long)]
        start: Option<String>,
        #[arg(long = "n", visible_alias = "nmax")]
        n: usize,
        /// Emit every level D^0 .. D^n.
        #[arg(long)]
        all_levels: bool,
        /// Print monomials without `*` (text format only).
        #[arg(long)]
        juxtaposed: bool,
    },
    /// Print rows 0..=nmax of a triangle: stirling2, eulerian, type_b_eulerian,
    /// matching, whitney:m, left_peak, las.
    Triangle {
        name: String,
        #[arg(long = "nmax", visible_alias = "n")]
        nmax: usize,
    },
    /// List the cyclically ordered partitions of [n].
    Cops {
        #[arg(long = "n", visible_alias = "nmax")]
        n: usize,
    },
    /// Count cyclically ordered partitions of [n] by blocks and an opener statistic.
    Stats {
        /// descents, right_valleys, left_peaks or las.
        #[arg(long)]
        stat: String,
        #[arg(long = "n", visible_alias = "nmax")]
        n: usize,
    },
    /// Run identity suites.
    Verify {
        /// T1..T6, golden or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "nmax", visible_alias = "n", default_value_t = 6)]
        nmax: usize,
        /// Replace the suite's grammar (single suites only).
        #[command(flatten)]
        grammar: GrammarArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let caps = config::load_caps(cli.config.as_deref())?;
    let (text, code) = match &cli.command {
        Command::Derive {
            grammar,
            start,
            n,
            all_levels,
            juxtaposed,
        } => {
            let (g, name) = load_grammar(grammar)?
                .ok_or_else(|| anyhow!("derive needs --grammar or --builtin"))?;
            let start = start
                .clone()
                .unwrap_or_else(|| builtin::default_start(name.as_deref().unwrap_or("")).into());
            let style = if *juxtaposed {
                Style::Juxtaposed
            } else {
                Style::Explicit
            };
            (
                derive(&g, &start, *n, *all_levels, style, cli.format, &caps)?,
                ExitCode::SUCCESS,
            )
        }
        Command::Triangle { name, nmax } => {
            (triangle(name, *nmax, cli.format, &caps)?, ExitCode::SUCCESS)
        }
        Command::Cops { n } => (cops(*n, cli.format, &caps)?, ExitCode::SUCCESS),
        Command::Stats { stat, n } => (stats(stat, *n, cli.format, &caps)?, ExitCode::SUCCESS),
        Command::Verify {
            suite,
            nmax,
            grammar,
        } => verify(suite, *nmax, grammar, cli.format, caps)?,
    };
    write_output(cli.out.as_deref(), &text)?;
    Ok(code)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The grammar and, for built-ins, its name.
fn load_grammar(args: &GrammarArgs) -> Result<Option<(Grammar, Option<String>)>> {
    if let Some(name) = &args.builtin {
        let g = builtin::by_name(name).ok_or_else(|| {
            anyhow!(
                "unknown built-in grammar `{name}` (known: {})",
                builtin::NAMES.join(", ")
            )
        })?;
        return Ok(Some((g, Some(name.clone()))));
    }
    let Some(src) = &args.grammar else {
        return Ok(None);
    };
    let path = Path::new(src);
    let (text, origin) = if path.is_file() {
        (
            std::fs::read_to_string(path).with_context(|| format!("reading {src}"))?,
            src.as_str(),
        )
    } else {
        (src.clone(), "inline grammar")
    };
    let g = parse_grammar(&text).with_context(|| origin.to_string())?;
    Ok(Some((g, None)))
}

fn derive(
    g: &Grammar,
    start: &str,
    n: usize,
    all_levels: bool,
    style: Style,
    format: Format,
    caps: &Caps,
) -> Result<String> {
    if n > caps.depth {
        bail!(
            "derivation depth {n} exceeds the configured cap of {}; raise `depth` in the config",
            caps.depth
        );
    }
    let start_poly =
        parse_polynomial(start).with_context(|| format!("start polynomial `{start}`"))?;
    let levels = g.derive_levels(&start_poly, n)?;
    let shown: Vec<(usize, &grammar_calculus::Polynomial)> = levels
        .iter()
        .enumerate()
        .skip(if all_levels { 0 } else { n })
        .collect();
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for (k, p) in &shown {
                if all_levels {
                    s.push_str(&format!("D^{k}: {}\n", p.to_text(style)));
                } else {
                    s.push_str(&format!("{}\n", p.to_text(style)));
                }
            }
            s
        }
        Format::Json => {
            if all_levels {
                let ps: Vec<_> = shown.iter().map(|(_, p)| *p).collect();
                emit::json(&ps)?
            } else {
                emit::json(shown[0].1)?
            }
        }
        Format::Csv => {
            let mut letters: BTreeSet<Letter> = g.rules().map(|(l, _)| l.clone()).collect();
            letters.extend(g.constants().cloned());
            letters.extend(start_poly.letters());
            let mut header = vec!["n".to_string()];
            header.extend(letters.iter().map(|l| l.as_str().to_string()));
            header.push("value".into());
            let mut t = Table::new(header);
            for (k, p) in &shown {
                for (m, c) in p.terms() {
                    let mut row = vec![k.to_string()];
                    row.extend(letters.iter().map(|l| m.exponent(l).to_string()));
                    row.push(c.to_string());
                    t.push(row);
                }
            }
            t.to_csv()?
        }
    })
}

fn triangle(name: &str, nmax: usize, format: Format, caps: &Caps) -> Result<String> {
    let rows: Vec<Vec<BigInt>> = match name {
        "left_peak" | "las" => {
            let census = PermutationCensus::build(nmax, caps)?;
            (0..=nmax)
                .map(|n| {
                    if name == "las" {
                        census.las_row(n)
                    } else {
                        census.left_peak_row(n)
                    }
                })
                .collect()
        }
        _ => {
            let kind: TriangleKind = name.parse()?;
            let t = TriangleTable::build(kind, nmax)?;
            (0..=nmax).map(|n| t.row(n)).collect()
        }
    };
    Ok(match format {
        Format::Json => emit::number_rows(&rows)?,
        Format::Csv => {
            let mut t = Table::new(["n", "k", "value"]);
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    t.push([n.to_string(), k.to_string(), v.to_string()]);
                }
            }
            t.to_csv()?
        }
        Format::Text => rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                format!("{n}: {}\n", vals.join(" "))
            })
            .collect(),
    })
}

fn cops(n: usize, format: Format, caps: &Caps) -> Result<String> {
    let all: Vec<_> = enumerate_cops(n, caps)?.collect();
    Ok(match format {
        Format::Text => all.iter().map(|c| format!("{c}\n")).collect(),
        Format::Json => {
            let blocks: Vec<_> = all.iter().map(|c| c.blocks()).collect();
            emit::json(&blocks)?
        }
        Format::Csv => {
            let mut t = Table::new(["blocks", "partition", "openers"]);
            for c in &all {
                let openers: Vec<String> = c.openers().iter().map(|o| o.to_string()).collect();
                t.push([c.num_blocks().to_string(), c.to_string(), openers.join(" ")]);
            }
            t.to_csv()?
        }
    })
}

#[derive(serde::Serialize)]
struct StatCount {
    blocks: usize,
    value: usize,
    count: u64,
}

fn stats(stat: &str, n: usize, format: Format, caps: &Caps) -> Result<String> {
    let stat: OpenerStat = stat.parse()?;
    let table = cop_stat_table(n, stat, caps)?;
    Ok(match format {
        Format::Text => table
            .iter()
            .map(|(&(k, s), c)| format!("blocks={k} {stat}={s} count={c}\n"))
            .collect(),
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|(&(blocks, value), &count)| StatCount {
                    blocks,
                    value,
                    count,
                })
                .collect();
            emit::json(&rows)?
        }
        Format::Csv => {
            let mut t = Table::new(["n", "i", "j", "value"]);
            for (&(k, s), c) in &table {
                t.push([n.to_string(), k.to_string(), s.to_string(), c.to_string()]);
            }
            t.to_csv()?
        }
    })
}

fn verify(
    suite: &str,
    nmax: usize,
    grammar: &GrammarArgs,
    format: Format,
    caps: Caps,
) -> Result<(String, ExitCode)> {
    let ids: Vec<SuiteId> = if suite.eq_ignore_ascii_case("all") {
        SuiteId::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let g = load_grammar(grammar)?.map(|(g, _)| g);
    if g.is_some() && ids.len() > 1 {
        bail!("a replacement grammar needs a single --suite");
    }
    for id in &ids {
        let max = id.max_nmax(&caps);
        if nmax > max {
            bail!(grammar_calculus::verifier::VerifyError::BoundExceeded {
                suite: *id,
                nmax,
                max
            });
        }
    }
    let ctx = VerifyContext::new(caps, nmax)?;
    let reports = run_suites(&ids, nmax, &ctx, g.as_ref())?;
    let all_pass = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Json => emit::json(&reports)?,
        Format::Csv => {
            let mut t = Table::new(["suite", "nmax", "status", "checks_run", "failures"]);
            for r in &reports {
                let status = if r.passed() { "pass" } else { "fail" };
                t.push([
                    r.suite.clone(),
                    r.nmax.to_string(),
                    status.into(),
                    r.checks_run.to_string(),
                    r.failures.to_string(),
                ]);
            }
            t.to_csv()?
        }
        Format::Text => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            let failed = reports.iter().filter(|r| !r.passed()).count();
            s.push_str(&format!(
                "{} of {} suites passed\n",
                reports.len() - failed,
                reports.len()
            ));
            s
        }
    };
    Ok((
        text,
        if all_pass {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        },
    ))
}
