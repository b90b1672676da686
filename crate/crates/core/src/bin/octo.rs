use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use split_octonion::automorphism::{default_generators, orbit_partition, orbit_reports};
use split_octonion::classify::classify;
use split_octonion::enumerate::{census_report, enumerate_subalgebras, EnumerationOptions, DEFAULT_BUDGET};
use split_octonion::lattice::{build_lattice, emit_dot, emit_json};
use split_octonion::record::SubalgebraRecord;
use split_octonion::verify::{run_suite, Suite, VerifyOptions};
use split_octonion::{Error, PrimeField, Subspace};

#[derive(Parser)]
#[command(name = "octo", version, about = "Subalgebras of the split octonions over small prime fields")]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true, env = "OCT_THREADS")]
    threads: Option<usize>,
    /// Maximum number of subspaces an enumeration may scan.
    #[arg(long, global = true, env = "OCT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Maximum size of a generated automorphism group.
    #[arg(long, global = true, env = "OCT_GROUP_CAP", default_value_t = split_octonion::automorphism::DEFAULT_GROUP_CAP)]
    group_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every subalgebra of the given dimensions as JSON lines.
    Enumerate {
        #[arg(long, env = "OCT_FIELD", default_value_t = 2)]
        field: u64,
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Label the subalgebra spanned by a JSON list of coordinate rows.
    Classify {
        #[arg(long, env = "OCT_FIELD", default_value_t = 2)]
        field: u64,
        #[arg(long)]
        basis: String,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, env = "OCT_FIELD", default_value_t = 2)]
        field: u64,
        /// Random samples per identity in odd characteristic.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Orbit report per dimension and label.
    Orbits {
        #[arg(long, env = "OCT_FIELD", default_value_t = 2)]
        field: u64,
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
    },
    /// Inclusion lattice of orbit labels.
    Lattice {
        #[arg(long, env = "OCT_FIELD", default_value_t = 2)]
        field: u64,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Singular,
    Centralizers,
    Classification,
    Orbits,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Check,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = EnumerationOptions { budget: cli.budget };
    match cli.command {
        Command::Enumerate { field, dims, out } => {
            let f = PrimeField::new(field)?;
            let dims = dims.unwrap_or_else(|| split_octonion::verify::default_dims(f, cli.budget));
            let records = enumerate_subalgebras(f, &dims, &budget)?;
            let mut sink: Box<dyn Write> = match out {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            for r in &records {
                writeln!(sink, "{}", r.to_json_line())?;
            }
            sink.flush()?;
            let summary = census_report(f, &dims, &records);
            eprintln!("scanned {} subspaces, {} subalgebras", summary.total_scanned(), records.len());
            for ((d, l), n) in &summary.counts {
                eprintln!("  dim {d} {l}: {n}");
            }
            if let Some(r) = summary.unlabeled.first() {
                eprintln!("{} subalgebras could not be labeled, first: {}", summary.unlabeled.len(), r.space);
                return Err(Failure::Check);
            }
        }
        Command::Classify { field, basis } => {
            let f = PrimeField::new(field)?;
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(&basis).map_err(|e| Failure::Usage(format!("bad --basis: {e}")))?;
            let mut coords = Vec::with_capacity(rows.len());
            for r in rows {
                let r: [i64; 8] =
                    r.try_into().map_err(|_| Failure::Usage("each basis row needs 8 coordinates".into()))?;
                coords.push(std::array::from_fn(|i| f.reduce(r[i])));
            }
            let space = Subspace::span(f, coords);
            let label = classify(&space)?;
            let record = SubalgebraRecord::analyze(space);
            println!("{label}");
            eprintln!("{}", record.to_json_line());
        }
        Command::Verify { suite, field, samples, seed } => {
            let f = PrimeField::new(field)?;
            let opts = VerifyOptions { samples, seed, budget: cli.budget, group_cap: cli.group_cap };
            let suites: Vec<Suite> = match suite {
                SuiteArg::Identities => vec![Suite::Identities],
                SuiteArg::Singular => vec![Suite::Singular],
                SuiteArg::Centralizers => vec![Suite::Centralizers],
                SuiteArg::Classification => vec![Suite::Classification],
                SuiteArg::Orbits => vec![Suite::Orbits],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut ok = true;
            for s in suites {
                let report = run_suite(s, f, &opts)?;
                print!("{report}");
                ok &= report.passed();
            }
            if !ok {
                return Err(Failure::Check);
            }
        }
        Command::Orbits { field, dims } => {
            let f = PrimeField::new(field)?;
            let dims = dims.unwrap_or_else(|| split_octonion::verify::default_dims(f, cli.budget));
            let records = enumerate_subalgebras(f, &dims, &budget)?;
            let gens = default_generators(f)?;
            let orbits = orbit_partition(&records, &gens)?;
            for rep in orbit_reports(&records, &orbits) {
                println!("{}", serde_json::to_string(&rep).expect("orbit report serializes"));
            }
        }
        Command::Lattice { field, format } => {
            let f = PrimeField::new(field)?;
            let g = build_lattice(f)?;
            match format {
                Format::Dot => print!("{}", emit_dot(&g)),
                Format::Json => print!("{}", emit_json(&g)),
            }
        }
    }
    Ok(())
}
