use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use subcode::report::{classify_report, double_report, goursat_report, info_report};
use subcode::{
    builtin, codeword, codeword_labels, delta, exhaustive_weight, goursat_of, make_css_decoder, monte_carlo,
    parse_code_file, CodeFile, Error, Format, PauliVector, Report, SubsystemCode, Tally,
};

#[derive(Parser)]
#[command(name = "subcode", version, about = "Subsystem stabilizer and CSS code toolkit")]
struct Cli {
    /// Worker threads for parallel sections; 0 picks the number of cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Emit `key=value` lines instead of aligned text.
    #[arg(long, global = true)]
    kv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, distance, and CSS structure.
    Info {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Writes the doubled CSS code and compares parameters.
    Double {
        #[command(flatten)]
        source: Source,
        /// Output file; the code is printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "pauli")]
        format: Format,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// External and internal CSS codes and the pairing.
    Goursat {
        #[command(flatten)]
        source: Source,
    },
    /// Maximal/minimal stabilizer classification.
    Classify {
        #[command(flatten)]
        source: Source,
    },
    /// Minimum distance by weight-increasing search.
    Distance {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Steane-style recovery statistics as CSV; `--kv` does not apply.
    Decode {
        #[command(flatten)]
        source: Source,
        /// Site error probabilities, comma separated.
        #[arg(long, value_delimiter = ',')]
        q: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Recover every error of these symplectic weights.
        #[arg(long, value_delimiter = ',')]
        exhaustive_weight: Vec<usize>,
    },
    /// Basis codewords as coset states.
    Codewords {
        #[command(flatten)]
        source: Source,
        /// Also print explicit amplitudes.
        #[arg(long)]
        dense: bool,
    },
    /// Writes a built-in code as a code file.
    Gen {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "pauli")]
        format: Format,
    },
}

/// A code file path or `builtin:NAME` with
/// NAME in five_qubit, bacon_shor, trivial, random.
#[derive(Args)]
struct Source {
    #[arg(value_name = "CODE", required_unless_present = "code")]
    code_arg: Option<String>,
    #[arg(long = "code", value_name = "CODE", conflicts_with = "code_arg")]
    code: Option<String>,
    /// Bacon-Shor grid size.
    #[arg(long, default_value_t = 3)]
    l: usize,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Gauge dimension of a random code; defaults to n.
    #[arg(long)]
    dim: Option<usize>,
    /// Seed of a random code.
    #[arg(long, default_value_t = 0)]
    code_seed: u64,
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

impl Source {
    fn name(&self) -> &str {
        self.code_arg.as_deref().or(self.code.as_deref()).unwrap_or_default()
    }

    fn load(&self) -> CliResult<SubsystemCode> {
        let name = self.name();
        match name.strip_prefix("builtin:") {
            Some(name) => Ok(self.builtin(name)?),
            None => {
                let text = fs::read_to_string(name).map_err(|e| Failure::Io(format!("{name}: {e}")))?;
                Ok(parse_code_file(&text)?.to_code()?)
            }
        }
    }

    fn builtin(&self, name: &str) -> subcode::Result<SubsystemCode> {
        match name {
            "five_qubit" => Ok(builtin::five_qubit()),
            "bacon_shor" => builtin::bacon_shor(self.l),
            "trivial" => builtin::trivial(self.p, self.n),
            "random" => builtin::random(self.p, self.n, self.dim.unwrap_or(self.n), self.code_seed),
            other => Err(Error::InvalidParameter(format!("unknown built-in code `{other}`"))),
        }
    }
}

fn render(report: &Report, kv: bool) -> String {
    if kv {
        report.to_key_value()
    } else {
        report.to_string()
    }
}

fn write_or_print(file: &CodeFile, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, file.to_string()).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{file}");
            Ok(())
        }
    }
}

fn csv_row(label: impl std::fmt::Display, t: &Tally) -> String {
    format!(
        "{label},{},{},{},{},{}",
        t.trials,
        t.corrected,
        t.logical_failures,
        t.out_of_range,
        t.failure_rate()
    )
}

fn run(cli: &Cli) -> CliResult<String> {
    let kv = cli.kv;
    match &cli.command {
        Command::Info { source, budget } => Ok(render(&info_report(&source.load()?, *budget)?, kv)),
        Command::Double {
            source,
            out,
            format,
            budget,
        } => {
            let doubled = delta(&source.load()?);
            let report = render(&double_report(&doubled, *budget)?, kv);
            let file = CodeFile::from_code(&doubled.result, *format);
            if out.is_none() {
                // keep stdout a valid code file
                eprint!("{report}");
                write_or_print(&file, None)?;
                return Ok(String::new());
            }
            write_or_print(&file, out.as_ref())?;
            Ok(report)
        }
        Command::Goursat { source } => {
            let code = source.load()?;
            let mut out = render(&goursat_report(&code), kv);
            if !kv {
                out.push('\n');
                out.push_str(&goursat_of(&code).to_string());
            }
            Ok(out)
        }
        Command::Classify { source } => Ok(render(&classify_report(&source.load()?), kv)),
        Command::Distance { source, budget } => {
            let code = source.load()?;
            let mut r = Report::new();
            r.distance_result("d", code.distance(*budget))?;
            if let Ok(split) = code.css_split() {
                if code.parameters().k > 0 {
                    let ds = split.distances(*budget)?;
                    r.distance("d_x", ds.x).distance("d_z", ds.z);
                }
            }
            Ok(render(&r, kv))
        }
        Command::Decode {
            source,
            q,
            trials,
            seed,
            exhaustive_weight: weights,
        } => {
            let code = source.load()?;
            let decoder = make_css_decoder(&code.css_split()?);
            if q.is_empty() && weights.is_empty() {
                return Err(Error::InvalidParameter("give --q or --exhaustive-weight".into()).into());
            }
            let mut out = String::from("weight_or_q,trials,corrected,logical_failures,out_of_range,failure_rate\n");
            for &w in weights {
                writeln!(out, "{}", csv_row(format!("w={w}"), &exhaustive_weight(&decoder, w))).unwrap();
            }
            for &q in q {
                let mc = monte_carlo(&decoder, q, *trials, *seed)?;
                writeln!(out, "{}", csv_row(format!("q={q}"), &mc.tally)).unwrap();
            }
            Ok(out)
        }
        Command::Codewords { source, dense } => codewords(&source.load()?, *dense, kv),
        Command::Gen { source, out, format } => {
            if !source.name().starts_with("builtin:") {
                return Err(Error::InvalidParameter("gen expects builtin:NAME".into()).into());
            }
            write_or_print(&CodeFile::from_code(&source.load()?, *format), out.as_ref())?;
            Ok(String::new())
        }
    }
}

fn vector(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect()
}

fn codewords(code: &SubsystemCode, dense: bool, kv: bool) -> CliResult<String> {
    let split = code.css_split()?;
    let f = split.field();
    let stabilizers: Vec<PauliVector> = split
        .x_stabilizer()
        .basis_vectors()
        .map(|v| PauliVector::x_type(f, v.to_vec()))
        .chain(
            split
                .z_stabilizer()
                .basis_vectors()
                .map(|v| PauliVector::z_type(f, v.to_vec())),
        )
        .collect::<subcode::Result<_>>()?;
    let mut out = String::new();
    for (i, (l, g)) in codeword_labels(&split).iter().enumerate() {
        let state = codeword(&split, l, g)?;
        let fixed = stabilizers.iter().all(|s| state.is_fixed_by(s));
        if kv {
            writeln!(
                out,
                "codeword={i} l={} g={} support={} fixed={fixed}",
                vector(l),
                vector(g),
                state.support_size()
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "#{i}  l={}  g={}  support={}  fixed_by_stabilizers={fixed}",
                vector(l),
                vector(g),
                state.support_size()
            )
            .unwrap();
        }
        if dense {
            for (index, re, im) in state.dense_vector()?.amplitudes() {
                writeln!(out, "  {index}: {re:+.6} {im:+.6}i").unwrap();
            }
        }
    }
    Ok(out)
}

fn exit_code(e: &Failure) -> u8 {
    match e {
        Failure::Core(Error::Parse { .. } | Error::InvalidToken(_) | Error::InvalidParameter(_)) => 2,
        Failure::Core(Error::InstanceTooLarge(_) | Error::NotCss | Error::InvalidProbability(_)) => 3,
        Failure::Core(_) | Failure::Io(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("warning: {e}");
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                Failure::Core(err) => eprintln!("error: {err}"),
                Failure::Io(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
