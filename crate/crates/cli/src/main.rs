use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use realchar_core::catalog::{build, parse};
use realchar_core::chartab::{character_table, class_labels};
use realchar_core::classes::{real_data, ClassSet};
use realchar_core::structure::solvable_radical;
use realchar_core::verify::{self, OracleFile, VerifyOptions};
use realchar_core::Error;

#[derive(Parser)]
#[command(name = "realchar", version, about = "Real classes, character tables and checks for permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, real classes, real element orders and G/Sol(G).
    Info {
        descriptor: String,
        #[arg(long)]
        json: bool,
    },
    /// Conjugacy classes with orders, sizes and reality flags.
    Classes {
        descriptor: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact character table.
    Chartab {
        descriptor: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run a named check, or `all`.
    Verify {
        check: String,
        /// Fail when regenerated oracle values differ from the pinned ones.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Cache directory; defaults to $REALCHAR_CACHE_DIR, then the platform cache.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Recompute the pinned oracle values with the brute-force oracles.
        #[arg(long)]
        regen_oracles: bool,
        /// Where --regen-oracles writes; defaults to the file in the source tree.
        #[arg(long)]
        oracles_out: Option<PathBuf>,
        /// Print the JSON reports instead of tables.
        #[arg(long)]
        json: bool,
        /// Also write the JSON reports to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

// `println!` panics when the reader goes away (`realchar ... | head`).
macro_rules! out {
    ($($t:tt)*) => {
        writeln!(std::io::stdout().lock(), $($t)*)?
    };
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::UnknownCheck(_) => EXIT_USAGE,
        e if e.is_cap() => EXIT_CAP,
        _ => EXIT_FAIL,
    }
}

#[derive(Serialize)]
struct Info {
    descriptor: String,
    degree: usize,
    order: u128,
    classes: usize,
    k_r: usize,
    k_q: usize,
    real_orders: Vec<u64>,
    c_group: bool,
    sol_order: u128,
    quotient: String,
}

fn info(descriptor: &str) -> Result<Info, Error> {
    let d = parse(descriptor)?;
    let g = build(&d)?.group;
    let classes = ClassSet::new(&g)?;
    let rd = real_data(&classes);
    let structure = solvable_radical(&g)?;
    Ok(Info {
        descriptor: d.to_string(),
        degree: g.degree(),
        order: g.order(),
        classes: classes.len(),
        k_r: rd.real_classes,
        k_q: rd.rational_classes,
        c_group: rd.is_c_group(),
        real_orders: rd.real_orders,
        sol_order: structure.sol_radical.order(),
        quotient: realchar_core::structure::identify(&structure.quotient_fingerprint)
            .unwrap_or_else(|| format!("unknown (order {})", structure.quotient.image().order())),
    })
}

fn print_info(i: &Info) -> Result<(), Error> {
    let orders: Vec<String> = i.real_orders.iter().map(u64::to_string).collect();
    out!("group        {}", i.descriptor);
    out!("degree       {}", i.degree);
    out!("order        {}", i.order);
    out!("classes      {}", i.classes);
    out!("k_R          {}", i.k_r);
    out!("k_Q          {}", i.k_q);
    out!("real orders  {{{}}}", orders.join(","));
    out!("(C)-group    {}", i.c_group);
    out!("|Sol(G)|     {}", i.sol_order);
    out!("G/Sol(G)     {}", i.quotient);
    Ok(())
}

#[derive(Serialize)]
struct ClassRow {
    label: String,
    order: u64,
    size: u64,
    real: bool,
    rational: bool,
    representative: String,
}

fn classes(descriptor: &str) -> Result<Vec<ClassRow>, Error> {
    let g = build(&parse(descriptor)?)?.group;
    let classes = ClassSet::new(&g)?;
    let orders: Vec<u64> = classes.classes().iter().map(|c| c.order).collect();
    Ok(classes
        .classes()
        .iter()
        .zip(class_labels(&orders))
        .map(|(c, label)| ClassRow {
            label,
            order: c.order,
            size: c.size,
            real: c.real,
            rational: c.rational,
            representative: format!("{:?}", c.representative),
        })
        .collect())
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Info { descriptor, json } => {
            let i = info(&descriptor)?;
            if json {
                out!("{}", serde_json::to_string_pretty(&i)?);
            } else {
                print_info(&i)?;
            }
        }
        Command::Classes { descriptor, json } => {
            let rows = classes(&descriptor)?;
            if json {
                out!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                out!("{:<6} {:>6} {:>8} {:>5} {:>8}  representative", "class", "order", "size", "real", "rational");
                for r in rows {
                    out!(
                        "{:<6} {:>6} {:>8} {:>5} {:>8}  {}",
                        r.label, r.order, r.size, r.real, r.rational, r.representative
                    );
                }
            }
        }
        Command::Chartab { descriptor, format, seed } => {
            let g = build(&parse(&descriptor)?)?.group;
            let table = character_table(&ClassSet::new(&g)?, seed)?;
            table.check()?;
            match format {
                Format::Csv => write!(std::io::stdout().lock(), "{}", table.to_csv())?,
                Format::Json => out!("{}", serde_json::to_string_pretty(&table)?),
            }
        }
        Command::Verify {
            check,
            strict,
            jobs,
            cache_dir,
            no_cache,
            seed,
            regen_oracles,
            oracles_out,
            json,
            report,
        } => {
            let opts = VerifyOptions {
                strict,
                jobs,
                cache_dir,
                no_cache,
                seed,
            };
            if regen_oracles {
                return regenerate(&opts, oracles_out);
            }
            let reports = verify::run(&check, &opts)?;
            if json {
                out!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    out!("{}", r.render_table());
                }
            }
            if let Some(path) = report {
                std::fs::write(path, serde_json::to_string_pretty(&reports)?)?;
            }
            if !reports.iter().all(|r| r.overall_pass) {
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(0)
}

fn regenerate(opts: &VerifyOptions, out: Option<PathBuf>) -> Result<u8, Error> {
    let ctx = opts.context()?;
    let fresh = verify::regenerate_oracles(&ctx)?;
    let pinned = OracleFile::pinned()?;
    let changed = pinned.differences(&fresh);
    for key in &changed {
        eprintln!(
            "changed: {key}: {} -> {}",
            pinned.get(key).map_or("(none)".into(), |v| v.to_string()),
            fresh.get(key).map_or("(none)".into(), |v| v.to_string())
        );
    }
    let path = out.unwrap_or_else(|| PathBuf::from(verify::PINNED_PATH));
    fresh.save(&path)?;
    out!("wrote {} oracle values to {} ({} changed)", fresh.values.len(), path.display(), changed.len());
    Ok(if opts.strict && !changed.is_empty() { EXIT_FAIL } else { 0 })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
