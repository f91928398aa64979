use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use cyclic_census::checks::{self, Grid, Selector};
use cyclic_census::corpus::{self, Corpus};
use cyclic_census::report::Report;
use cyclic_census_core::census::{census_by_divisor, cyclic_subgroup_count};
use cyclic_census_core::coset::DEFAULT_MAX_COSETS;
use cyclic_census_core::Rational;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cyclic-census", version, about = "Cyclic-subgroup censuses of finite p-groups")]
struct Cli {
    /// Cap on live cosets during enumeration.
    #[arg(long, global = true, env = "CYCLIC_CENSUS_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a `.grp` file and print it in normal form.
    Parse { file: PathBuf },
    /// Build the group of a `.grp` file or family spec and print its basic data.
    Build { target: String },
    /// Print the cyclic-subgroup census of a `.grp` file or family spec.
    Census {
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Run verification checks over the corpus and the family grid.
    Verify {
        /// all, eq1, thm23, lemma22, thm31, p3 or global
        selector: Selector,
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        /// Family grid bounds `pmax,nmax`.
        #[arg(long, default_value_t = Grid::default())]
        grid: Grid,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let max = cli.max_cosets;
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Parse { file } => {
            let pres = corpus::read_presentation(&file)?;
            write!(out, "{pres}")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Build { target } => {
            let s = corpus::load_subject(&target, max)?;
            let g = &s.group;
            writeln!(out, "group {}", s.name)?;
            writeln!(out, "order {}", g.order())?;
            writeln!(out, "degree {}", g.degree())?;
            writeln!(out, "generators {}", g.generators().len())?;
            writeln!(out, "exponent {}", g.exponent())?;
            match s.p_n() {
                Some((p, n)) => writeln!(out, "p-group {p}^{n}")?,
                None => writeln!(out, "p-group no")?,
            }
            if !s.order_certified() {
                eprintln!("order {} differs from the declared order {}", g.order(), s.expected_order.unwrap_or(0));
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { target, json } => {
            let s = corpus::load_subject(&target, max)?;
            let value = match s.census() {
                Ok(c) => json!({
                    "name": s.name,
                    "order": s.group.order(),
                    "p": c.p,
                    "n": c.n,
                    "counts": c.counts,
                    "c1": c.c1(),
                    "total": c.total,
                    "alpha": c.alpha.to_string(),
                    "exponent": c.exponent(),
                }),
                Err(_) => {
                    let total = cyclic_subgroup_count(&s.group);
                    let by_order: serde_json::Map<String, serde_json::Value> =
                        census_by_divisor(&s.group).into_iter().map(|(o, c)| (o.to_string(), json!(c))).collect();
                    json!({
                        "name": s.name,
                        "order": s.group.order(),
                        "by_element_order": by_order,
                        "total": total,
                        "alpha": Rational::from_ratio(total, s.group.order()).to_string(),
                        "exponent": s.group.exponent(),
                    })
                }
            };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            } else {
                for (k, v) in value.as_object().expect("census is an object") {
                    writeln!(out, "{k}: {}", v.to_string().trim_matches('"'))?;
                }
            }
            if !s.order_certified() {
                eprintln!("order {} differs from the declared order {}", s.group.order(), s.expected_order.unwrap_or(0));
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { selector, corpus: dir, grid, json, csv } => {
            let corpus = if selector == Selector::Eq1 && !dir.exists() {
                Corpus::empty()
            } else {
                corpus::load_corpus(&dir, max)?
            };
            let grid_subjects = if matches!(selector, Selector::All | Selector::Eq1) {
                checks::build_grid(grid, max)?
            } else {
                Vec::new()
            };
            let results = checks::run(selector, &corpus, &grid_subjects);
            let report = Report::new(corpus.sha256.clone(), results);
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else if csv {
                report.write_csv(&mut out)?;
            } else {
                report.write_text(&mut out)?;
            }
            Ok(if report.has_failures() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
    }
}
