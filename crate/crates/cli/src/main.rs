use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use fpb_core::basket::{code_count, enumerate_codes};
use fpb_core::braid::{bound_fhk, bound_kim, closed_components, fhk_code, parse_braid};
use fpb_core::census::{
    emit_report, fpbk_lookup, run_census, CensusOptions, Classifier, ReportFormat,
};
use fpb_core::diagram::{build_arc_diagram, draw_svg, dt_from_gauss};
use fpb_core::invariants::{code_invariants, q_to_t, DEFAULT_CROSSING_BUDGET};
use fpb_core::reference::{build_table_cached, ReferenceTable};
use fpb_core::{parse_code, Error};

#[derive(Parser)]
#[command(name = "fpb", version, about = "Flat plumbing basket codes for knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every code with N bands.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Count and classify every code with N bands.
    Census {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        table: TableArgs,
        /// Report path; a .json extension writes JSON, anything else CSV.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "FPB_THREADS")]
        threads: Option<usize>,
        /// Append finished chunks here and skip chunks already listed.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Largest reduced diagram handed to the Jones engine.
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        budget: usize,
    },
    /// Name the knot bounded by a code.
    Classify {
        code: String,
        #[command(flatten)]
        table: TableArgs,
        /// Largest reduced diagram handed to the Jones engine.
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        budget: usize,
    },
    /// Print invariants of the boundary knot.
    Invariants {
        code: String,
        #[arg(long, group = "which")]
        alexander: bool,
        #[arg(long, group = "which")]
        jones: bool,
        #[arg(long, group = "which")]
        all: bool,
        /// Largest reduced diagram handed to the Jones engine.
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        budget: usize,
    },
    /// DT code of the boundary diagram.
    Dt {
        code: String,
        /// Foot at which the walk starts.
        #[arg(long, default_value_t = 0)]
        start: usize,
        /// Walk counterclockwise.
        #[arg(long)]
        ccw: bool,
    },
    /// Basket code of a closed braid.
    BraidToCode {
        word: String,
        #[arg(long)]
        strands: usize,
    },
    /// Upper bounds for the basket number of a closed braid.
    Bounds {
        word: String,
        #[arg(long)]
        strands: usize,
        #[arg(long, group = "bound")]
        fhk: bool,
        #[arg(long, group = "bound")]
        kim: bool,
    },
    /// Known basket number of a knot.
    Fpbk { name: String },
    /// Draw the basket surface as SVG.
    Draw {
        code: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Reference source file.
    #[arg(long)]
    table: PathBuf,
    /// Built table cache; defaults to the source path with `.cache.json`
    /// appended.
    #[arg(long)]
    cache: Option<PathBuf>,
}

impl TableArgs {
    fn load(&self) -> Result<ReferenceTable> {
        let text = fs::read_to_string(&self.table)
            .with_context(|| format!("reading {}", self.table.display()))?;
        let cache = self.cache.clone().unwrap_or_else(|| {
            let mut p = self.table.clone().into_os_string();
            p.push(".cache.json");
            PathBuf::from(p)
        });
        Ok(build_table_cached(&text, &cache)?)
    }
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Enumerate { n, count_only } => {
            if count_only {
                println!("{}", code_count(n));
            } else {
                let mut out = std::io::BufWriter::new(std::io::stdout().lock());
                for c in enumerate_codes(n)? {
                    use std::io::Write;
                    writeln!(out, "{c}")?;
                }
            }
        }
        Command::Census {
            n,
            table,
            out,
            threads,
            resume,
            budget,
        } => {
            let table = table.load()?;
            let options = CensusOptions {
                threads,
                resume,
                budget,
                ..Default::default()
            };
            let report = run_census(n, &table, &options)?;
            emit_report(&report, ReportFormat::from_path(&out), &out)?;
            let c = &report.counts;
            println!("total {}", c.total);
            println!("linkCodes {}", c.link_codes);
            println!("knotCodes {}", c.knot_codes);
            println!("typeOneReducible {}", c.type_one_reducible);
            println!("surviving {}", c.surviving);
            println!("composite {}", report.composite_total());
            println!("unknown {}", report.unknown());
            println!(
                "elapsed {} ms on {} threads",
                report.elapsed_ms, report.threads
            );
        }
        Command::Classify {
            code,
            table,
            budget,
        } => {
            let code = parse_code(&code)?;
            let table = table.load()?;
            let mu = code.component_count();
            if mu != 1 {
                return Err(Error::NotAKnot(mu).into());
            }
            println!("{}", Classifier::new(&table, budget).classify(&code)?);
        }
        Command::Invariants {
            code,
            alexander,
            jones,
            all,
            budget,
        } => {
            let code = parse_code(&code)?;
            let inv = code_invariants(&code, budget)?;
            let both = all || !(alexander || jones);
            if alexander || both {
                println!("alexander {}", inv.alexander);
            }
            if jones || both {
                match q_to_t(&inv.jones) {
                    Some(t) => println!("jones {t}"),
                    None => println!("jones {}", inv.jones.display_with("q")),
                }
            }
            if both {
                let fp = inv.fingerprint();
                println!("determinant {}", fp.determinant);
                println!("signature {}", inv.signature);
                println!("double_cover {:?}", inv.double_cover);
                println!("crossings {}", build_arc_diagram(&code).crossing_count());
            }
        }
        Command::Dt { code, start, ccw } => {
            let code = parse_code(&code)?;
            let gauss = build_arc_diagram(&code).gauss_code(start, ccw)?;
            println!("{}", dt_from_gauss(&gauss)?);
        }
        Command::BraidToCode { word, strands } => {
            let braid = parse_braid(&word, strands)?;
            let code = fhk_code(&braid)?;
            println!("{code}");
            eprintln!(
                "{} bands, {} components",
                code.n(),
                closed_components(&braid)
            );
        }
        Command::Bounds {
            word,
            strands,
            fhk,
            kim,
        } => {
            let braid = parse_braid(&word, strands)?;
            let both = !(fhk || kim);
            if fhk || both {
                println!("fhk {}", bound_fhk(&braid)?);
            }
            if kim || both {
                println!("kim {}", bound_kim(&braid));
            }
        }
        Command::Fpbk { name } => println!("{}", fpbk_lookup(&name)?),
        Command::Draw { code, out } => write_file(&out, &draw_svg(&parse_code(&code)?))?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::CrossingBudget { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
