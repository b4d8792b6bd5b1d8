use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twocover::analysis::{
    conjecture_check, default_omega_set, milnor_minus_one, report_json, report_text, scan, scan_tsv, Analyzer,
    ConjectureVerdict, OmegaSet, Verification,
};
use twocover::geometry::{catalog, parse_file, ArrangementFile, CentralArrangement};
use twocover::homology::{homology, load_abstract_complex, AbstractComplex};
use twocover::salvetti::ZComplex;
use twocover::{FieldArrangement, OmegaClass};

#[derive(Parser)]
#[command(name = "twocover", version, about = "Double covers of complexified real line arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Aomoto ranks, twisted homology and 2-torsion for one class.
    Analyze {
        /// Arrangement file or `@name` of a built-in.
        source: String,
        /// `all`, a bit string, or comma-separated 1-based line positions.
        #[arg(long)]
        omega: String,
        #[arg(long)]
        json: bool,
    },
    /// Checks every identity; exit code 1 on the first failure.
    Verify {
        source: String,
        #[arg(long)]
        omega: String,
    },
    /// Runs the analysis over a set of classes.
    Scan {
        source: String,
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, conflicts_with = "json")]
        tsv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compares 2-torsion in the cover with a ℤ_4 summand in the twisted homology.
    Conjecture {
        source: String,
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        json: bool,
    },
    /// (−1)-eigenspace dimensions of the Milnor fiber homology of a central arrangement.
    Milnor {
        /// Central arrangement file or `@cone(NAME)`.
        source: String,
        /// 1-based plane sent to infinity; defaults to the last one.
        #[arg(long)]
        infinity: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Lists the built-in arrangements, or prints one in file format.
    Catalog { name: Option<String> },
    /// Homology of an abstract chain complex given as JSON.
    Homology { file: PathBuf },
}

#[derive(Args)]
struct SetArgs {
    /// Every nonzero class.
    #[arg(long, conflicts_with = "random")]
    all: bool,
    /// Number of random classes.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
}

impl SetArgs {
    fn omega_set(&self, n: usize) -> OmegaSet {
        match (self.all, self.random) {
            (true, _) => OmegaSet::All,
            (false, Some(count)) => OmegaSet::Random { count, seed: self.seed },
            (false, None) => default_omega_set(n),
        }
    }
}

fn read(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn load_affine(source: &str) -> Result<(String, FieldArrangement), String> {
    if let Some(name) = source.strip_prefix('@') {
        return catalog::catalog(name).map(|a| (name.to_string(), a)).map_err(|e| e.to_string());
    }
    match parse_file(&read(source)?).map_err(|e| format!("{source}: {e}"))? {
        ArrangementFile::Affine(a) => Ok((source.to_string(), a)),
        ArrangementFile::Central(_) => Err(format!("{source}: expected an affine arrangement; use `milnor` for central ones")),
    }
}

fn load_central(source: &str) -> Result<CentralArrangement, String> {
    if let Some(name) = source.strip_prefix('@') {
        return catalog::central_catalog(name).map_err(|e| e.to_string());
    }
    match parse_file(&read(source)?).map_err(|e| format!("{source}: {e}"))? {
        ArrangementFile::Central(c) => Ok(c),
        ArrangementFile::Affine(_) => Err(format!("{source}: expected a central arrangement (missing `central` header)")),
    }
}

fn analyzer(source: &str) -> Result<Analyzer, String> {
    let (name, arr) = load_affine(source)?;
    Analyzer::new(&name, &arr).map_err(|e| e.to_string())
}

fn json_string<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { source, omega, json } => {
            let a = analyzer(&source)?;
            let w = OmegaClass::parse(&omega, a.num_lines()).map_err(|e| e.to_string())?;
            let report = a.analyze(&w).map_err(|e| e.to_string())?;
            if json {
                println!("{}", json_string(&report_json(a.summary(), &report)));
            } else {
                print!("{}", report_text(a.summary(), &report));
            }
        }
        Command::Verify { source, omega } => {
            let a = analyzer(&source)?;
            let w = OmegaClass::parse(&omega, a.num_lines()).map_err(|e| e.to_string())?;
            match a.verify(&w).map_err(|e| e.to_string())? {
                Verification::Pass(r) => {
                    let alpha = [r.alpha(0), r.alpha(1), r.alpha(2)];
                    let rho = [r.rho(0), r.rho(1), r.rho(2)];
                    let tau = [r.tau(0), r.tau(1), r.tau(2)];
                    println!("pass: omega={} alpha={alpha:?} rho={rho:?} tau={tau:?}", r.omega);
                }
                Verification::Fail { failure, report } => {
                    println!(
                        "fail: identity `{}` does not hold at k={} for omega={} ({})",
                        failure.identity, failure.k, report.omega, failure.detail
                    );
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Scan { source, set, tsv: _, json } => {
            let a = analyzer(&source)?;
            let summary = scan(&a, &set.omega_set(a.num_lines())).map_err(|e| e.to_string())?;
            if json {
                println!("{}", json_string(&summary));
            } else {
                print!("{}", scan_tsv(&summary));
            }
            eprintln!(
                "{} classes, {} with 2-torsion in H_1 of the cover, {} with a Z_4 summand, {} identity failures",
                summary.total, summary.with_two_torsion, summary.with_z4, summary.identity_failures
            );
        }
        Command::Conjecture { source, set, json } => {
            let a = analyzer(&source)?;
            let report = conjecture_check(&a, &set.omega_set(a.num_lines())).map_err(|e| e.to_string())?;
            if json {
                println!("{}", json_string(&report));
            } else {
                println!("omega\ttwo_torsion\tz4");
                for r in report.rows.iter().filter(|r| r.two_torsion || r.z4) {
                    println!("{}\t{}\t{}", r.omega, r.two_torsion, r.z4);
                }
                match &report.verdict {
                    ConjectureVerdict::Consistent => println!("consistent ({} classes checked)", report.rows.len()),
                    ConjectureVerdict::Counterexamples(bad) => {
                        println!("counterexamples ({} of {} classes): {}", bad.len(), report.rows.len(), bad.join(" "))
                    }
                }
            }
        }
        Command::Milnor { source, infinity, json } => {
            let central = load_central(&source)?;
            let m = milnor_minus_one(&central, infinity).map_err(|e| e.to_string())?;
            if json {
                println!("{}", json_string(&m));
            } else {
                println!("planes {} (plane {} sent to infinity)", m.planes, m.infinity);
                for k in 0..3 {
                    println!("dim H_{k}(F, C)_(-1) = {}", m.eigenspace[k]);
                }
            }
        }
        Command::Catalog { name: None } => {
            for name in catalog::NAMES {
                println!("@{name}");
            }
            println!("@cone(NAME)  (central, for milnor)");
        }
        Command::Catalog { name: Some(name) } => {
            let name = name.trim_start_matches('@');
            if name.starts_with("cone(") {
                print!("{}", catalog::central_catalog(name).map_err(|e| e.to_string())?);
            } else {
                print!("{}", catalog::catalog(name).map_err(|e| e.to_string())?);
            }
        }
        Command::Homology { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let cx = load_abstract_complex(&text).map_err(|e| e.to_string())?;
            let (plain, extra) = match cx {
                AbstractComplex::Plain(c) => (c, None),
                AbstractComplex::Decorated(d) => (d.specialize(1), Some(d)),
            };
            let show = |title: &str, cx: &ZComplex| -> Result<(), String> {
                let h = homology(cx).map_err(|e| e.to_string())?;
                for k in 0..3 {
                    println!("{title}H_{k} = {}", h.group(k));
                }
                Ok(())
            };
            show("", &plain)?;
            if let Some(d) = extra {
                show("t=-1: ", &d.specialize(-1))?;
                show("cover: ", &d.double_cover())?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
