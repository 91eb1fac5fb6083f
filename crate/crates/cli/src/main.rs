//! `mincm`: command-line reports on simplicial complexes.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mincm::io::{parse_auto, to_json, to_plain};
use mincm::shelling::CertificateDocument;
use mincm::{catalog, Error, FieldSpec, ShellingCertificate, SimplicialComplex};

use report::Outcome;

#[derive(Parser)]
#[command(name = "mincm", version, about = "Cohen-Macaulay, minimality and shelling checks for simplicial complexes")]
struct Cli {
    /// Coefficient field: `q` or `gf<p>` for a prime p.
    #[arg(long, global = true, default_value = "q")]
    field: FieldSpec,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Expect {
    /// Exit with status 1 when the checked property is false.
    #[arg(long)]
    expect: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: f/h-vectors, homology, depth, CM and minimality verdicts.
    Analyze {
        /// A facet file (plain or JSON) or `catalog:<name>`.
        input: String,
        /// Check minimality by removing every facet instead of trying the ridge-bound certificate first.
        #[arg(long)]
        brute: bool,
        /// Also search for a shelling order (exponential in the worst case).
        #[arg(long)]
        shell: bool,
        /// Exit with status 1 unless the named property holds; may repeat.
        #[arg(long, value_enum)]
        expect: Vec<report::Property>,
    },
    /// Reduce a CM complex to a minimal CM complex it is shelled over.
    Reduce {
        input: String,
        /// Where to write the minimal complex (plain text, or JSON with --json).
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Where to write the shelling certificate (JSON).
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check a certificate file produced by `reduce` or `shelled-over`.
    Replay { certificate: PathBuf },
    /// Search for a shelling order of a pure complex.
    Shellable {
        input: String,
        #[command(flatten)]
        expect: Expect,
    },
    /// Search for shelling moves that build INPUT from BASE.
    ShelledOver {
        input: String,
        base: String,
        /// Write the certificate (JSON) here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        expect: Expect,
    },
    /// Generators of the Alexander-dual ideal, with a linear-quotients order if one exists.
    Dual {
        input: String,
        /// Number of variables (defaults to the number of vertices).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Graded Betti numbers of the Alexander-dual ideal (Hochster's formula).
    Betti {
        input: String,
        #[arg(long)]
        n: Option<usize>,
        /// Use the Stanley-Reisner ideal of the complex itself.
        #[arg(long)]
        stanley_reisner: bool,
    },
    /// Minimal CM check, by brute force or by the ridge-bound certificate with brute-force fallback.
    MinimalCheck {
        input: String,
        #[arg(long, conflicts_with = "fast")]
        brute: bool,
        #[arg(long)]
        fast: bool,
        #[command(flatten)]
        expect: Expect,
    },
    /// Built-in complexes.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry names.
    List,
    /// Write an entry as a facet file (plain, or JSON with --json).
    Emit {
        name: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn load(input: &str) -> Result<SimplicialComplex, Error> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return catalog::get(name);
    }
    let text = std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?;
    parse_auto(&text)
}

fn write(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn certificate_json(cert: &ShellingCertificate) -> String {
    serde_json::to_string_pretty(&cert.to_document()).expect("certificate serializes") + "\n"
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let field = cli.field;
    let json = cli.json;
    match cli.command {
        Command::Analyze { input, brute, shell, expect } => {
            let c = load(&input)?;
            report::analyze(&input, &c, field, !brute, shell, &expect, json)
        }
        Command::Reduce { input, output, certificate } => {
            let c = load(&input)?;
            let (minimal, cert) = mincm::reduce_to_minimal(&c, field)?;
            cert.replay()?;
            if let Some(path) = &output {
                write(path, &if json { to_json(&minimal) } else { to_plain(&minimal) })?;
            }
            if let Some(path) = &certificate {
                write(path, &certificate_json(&cert))?;
            }
            Ok(report::reduced(&input, field, &minimal, &cert, json))
        }
        Command::Replay { certificate } => {
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| Error::Io(format!("{}: {e}", certificate.display())))?;
            let doc: CertificateDocument =
                serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("certificate: {e}")))?;
            let cert = ShellingCertificate::from_document(&doc)?;
            cert.replay()?;
            Ok(Outcome::ok(if json {
                format!("{{\"valid\":true,\"moves\":{}}}\n", cert.len())
            } else {
                format!("certificate valid: {} moves replay to the target\n", cert.len())
            }))
        }
        Command::Shellable { input, expect } => {
            let c = load(&input)?;
            let cert = mincm::is_shellable(&c)?;
            Ok(report::shelling(&input, None, cert.as_ref(), expect.expect, json))
        }
        Command::ShelledOver { input, base, certificate, expect } => {
            let c = load(&input)?;
            let b = load(&base)?;
            let cert = mincm::shelled_over(&c, &b)?;
            if let (Some(path), Some(cert)) = (&certificate, &cert) {
                write(path, &certificate_json(cert))?;
            }
            Ok(report::shelling(&input, Some(&base), cert.as_ref(), expect.expect, json))
        }
        Command::Dual { input, n } => {
            let c = load(&input)?;
            report::dual(&input, &c, n.unwrap_or(c.n()), json)
        }
        Command::Betti { input, n, stanley_reisner } => {
            let c = load(&input)?;
            report::betti(&input, &c, n.unwrap_or(c.n()), stanley_reisner, field, json)
        }
        Command::MinimalCheck { input, brute, fast, expect } => {
            let c = load(&input)?;
            let _ = fast;
            Ok(report::minimal_check(&input, &c, field, !brute, expect.expect, json))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => Ok(report::catalog_list(json)),
            CatalogAction::Emit { name, output } => {
                let c = catalog::get(&name)?;
                let text = if json { to_json(&c) } else { to_plain(&c) };
                match output {
                    Some(path) => {
                        write(&path, &text)?;
                        Ok(Outcome::ok(String::new()))
                    }
                    None => Ok(Outcome::ok(text)),
                }
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("mincm: cannot configure {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(if outcome.property_holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("mincm: {e}");
            ExitCode::from(2)
        }
    }
}
