//! `gprc`: generalized permutations, their Rauzy classes, and the
//! components of strata they represent.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 the input is
//! valid but the operation does not apply to it (reducible, empty stratum,
//! undefined move, ...).

use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gprc::class::{materialize, members_of, ClassError, Options, DEFAULT_SPILL_THRESHOLD};
use gprc::json;
use gprc::store::{write_class, ClassStore};
use gprc::verify::{self, Suite};
use gprc_core::components::{components_of, parse_component, representative, Classifier, ComponentId};
use gprc_core::rauzy::{self, ClassKind};
use gprc_core::spin::{omega_matrix, reduce, spin_parity};
use gprc_core::surface::stratum_of;
use gprc_core::{Error, GeneralizedPermutation};

#[derive(Parser)]
#[command(name = "gprc", version, about = "Rauzy classes of generalized permutations and components of strata")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singularity profile of a permutation, e.g. "0 1 2 3 / 3 2 1 0".
    Stratum { perm: String },
    /// Connected component represented by an irreducible permutation.
    Classify { perm: String },
    /// Cylindrical representative of a component, e.g. "H(4):odd".
    Rep { component: String },
    /// Cardinality of a Rauzy class, or an extended one.
    Class {
        perm: String,
        #[arg(long)]
        extended: bool,
        /// Do not read or write the class store.
        #[arg(long)]
        count_only: bool,
        /// Write the class file here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the search.
        #[arg(long)]
        jobs: Option<usize>,
        /// Keep classes above this size only on disk (needs GPRC_CACHE_DIR).
        #[arg(long, default_value_t = DEFAULT_SPILL_THRESHOLD)]
        spill_threshold: usize,
    },
    /// Whether TARGET lies in the class of SEED.
    Member {
        seed: String,
        target: String,
        #[arg(long)]
        extended: bool,
    },
    /// Parity of the spin structure (true permutations, even degrees).
    Spin { perm: String },
    /// Erase symbols (contract saddle connections), named as in the input.
    Contract {
        perm: String,
        #[arg(required = true)]
        symbols: Vec<String>,
    },
    /// Apply a Rauzy move.
    Op { op: Move, perm: String },
    /// Inverse permutation: the two lines exchanged.
    Inverse { perm: String },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Move {
    A,
    B,
    C,
}

/// Why a command failed, with its exit code.
enum Failure {
    Input(String),
    Math(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedInput(_)
            | Error::InvalidStratum(_)
            | Error::UnknownSymbol(_)
            | Error::IndexOutOfRange
            | Error::AlphabetTooLarge
            | Error::EmptyLine
            | Error::UnsupportedLabel => Failure::Input(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl From<ClassError> for Failure {
    fn from(e: ClassError) -> Self {
        match e {
            ClassError::Math(e) => e.into(),
            ClassError::Io(e) => Failure::Input(format!("class store: {e}")),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn perm(text: &str) -> Result<GeneralizedPermutation, Failure> {
    Ok(text.parse()?)
}

fn emit<T: Serialize>(as_json: bool, value: &T, text: impl FnOnce() -> String) {
    if as_json {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    } else {
        println!("{}", text());
    }
}

fn profile_lines(p: &json::Profile) -> String {
    let mut out = vec![
        format!("stratum: {}", p.stratum.as_deref().unwrap_or("(has marked points)")),
        format!("degrees: {:?}", p.degrees),
        format!("genus: {}", p.genus),
        format!("left degree: {}", p.left_degree),
    ];
    if let Some(r) = p.right_degree {
        out.push(format!("right degree: {r}"));
    }
    if p.marked_points > 0 {
        out.push(format!("marked points: {}", p.marked_points));
    }
    out.join("\n")
}

fn kind(extended: bool) -> ClassKind {
    if extended {
        ClassKind::Extended
    } else {
        ClassKind::Rauzy
    }
}

fn run(cli: Cli) -> Outcome {
    let js = cli.json;
    match cli.command {
        Command::Stratum { perm: text } => {
            let prof = json::Profile::from(&stratum_of(&perm(&text)?)?);
            emit(js, &prof, || profile_lines(&prof));
        }
        Command::Classify { perm: text } => {
            let p = perm(&text)?;
            let c = Classifier::with_enumerator(gprc::bfs::par_enumerate).classify(&p)?;
            emit(js, &json::Component::from(&c), || c.to_string());
        }
        Command::Rep { component } => {
            let (stratum, label) = parse_component(&component)?;
            let c = match label {
                Some(label) => ComponentId { stratum, label },
                None => {
                    let all = components_of(&stratum);
                    match all.len() {
                        0 => return Err(Error::EmptyStratum.into()),
                        1 => all.into_iter().next().expect("one component"),
                        _ => {
                            let names: Vec<String> = all.iter().map(|c| c.to_string()).collect();
                            return Err(Failure::Input(format!(
                                "{stratum} has several components, pick one of: {}",
                                names.join(", ")
                            )));
                        }
                    }
                }
            };
            let p = representative(&c)?;
            let out = json::Representative {
                component: c.to_string(),
                permutation: p.to_string(),
                profile: json::Profile::from(&stratum_of(&p)?),
            };
            emit(js, &out, || out.permutation.clone());
        }
        Command::Class { perm: text, extended, count_only, out, jobs, spill_threshold } => {
            let p = perm(&text)?;
            let store = ClassStore::from_env();
            let opts = Options { jobs, store: store.clone(), persist: !count_only, spill_threshold };
            let m = materialize(&p, kind(extended), &opts)?;
            let mut file = m.file.clone();
            if let Some(path) = out {
                let members = match &m.handle.members {
                    Some(members) => members.clone(),
                    None => members_of(&m, store.as_ref())?,
                };
                write_class(File::create(&path)?, m.handle.kind, &m.handle.seed, &members)?;
                file = Some(path);
            }
            let report = json::Class {
                kind: m.handle.kind.name().into(),
                seed: m.handle.seed.to_string(),
                count: m.handle.cardinality,
                file: file.map(|f| f.display().to_string()),
            };
            emit(js, &report, || report.count.to_string());
        }
        Command::Member { seed, target, extended } => {
            let (s, t) = (perm(&seed)?, perm(&target)?);
            let member = rauzy::contains(&s, &t, kind(extended))?;
            let out = json::Member {
                kind: kind(extended).name().into(),
                seed: s.canonical().to_string(),
                target: t.canonical().to_string(),
                member,
            };
            emit(js, &out, || member.to_string());
        }
        Command::Spin { perm: text } => {
            let p = perm(&text)?;
            let parity = spin_parity(&p)?;
            let pairs = reduce(&omega_matrix(&p)?).pairs;
            let out = json::Spin { permutation: p.canonical().to_string(), parity, pairs };
            emit(js, &out, || parity.to_string());
        }
        Command::Contract { perm: text, symbols } => {
            let (p, names) = GeneralizedPermutation::parse_named(&text)?;
            let mut victims = Vec::new();
            for s in &symbols {
                let key = s.parse::<u64>().map(|v| v.to_string()).unwrap_or_else(|_| s.clone());
                let id = names
                    .iter()
                    .position(|n| *n == key)
                    .ok_or_else(|| Failure::Input(format!("symbol {s:?} does not occur")))?;
                victims.push(id as gprc_core::Symbol);
            }
            let q = p.erase_symbols(&victims)?;
            let out = json::Permutation { permutation: q.to_string(), profile: stratum_of(&q).ok().map(|x| (&x).into()) };
            emit(js, &out, || out.permutation.clone());
        }
        Command::Op { op, perm: text } => {
            let p = perm(&text)?;
            let q = match op {
                Move::A => rauzy::op_a(&p),
                Move::B => rauzy::op_b(&p),
                Move::C => Ok(rauzy::op_c(&p)),
            }
            .map_err(|why| Failure::Math(format!("move undefined: {why}")))?;
            let out = json::Permutation { permutation: q.to_string(), profile: None };
            emit(js, &out, || out.permutation.clone());
        }
        Command::Inverse { perm: text } => {
            let q = perm(&text)?.inverse();
            let out = json::Permutation { permutation: q.to_string(), profile: None };
            emit(js, &out, || out.permutation.clone());
        }
        Command::Verify { suite, jobs } => {
            let report = verify::run(suite, jobs);
            emit(js, &report, || report.render().trim_end().to_string());
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("gprc: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("gprc: {msg}");
            ExitCode::from(3)
        }
    }
}
