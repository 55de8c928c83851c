//! `nv`: command-line access to block-pair arithmetic in nV.
//!
//! Exit codes: 0 success or true, 1 false, 2 parse error, 3 cap exceeded,
//! 4 invalid element or input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nv_core::io::{parse_element, parse_point, render_svg, serialize_element, ClosureCertificate};
use nv_core::random::{random_element, random_torsion};
use nv_core::torsion::{
    self, ClosureOptions, ClosureStatus, OrderResult, DEFAULT_GROUP_CAP, DEFAULT_ORDER_CAP,
    DEFAULT_SIZE_CAP,
};
use nv_core::{apply_point, compose, equal, inverse, power, reduce, roots, Element, NvError};

#[derive(Parser)]
#[command(
    name = "nv",
    version,
    about = "Exact arithmetic in the Brin-Thompson groups nV"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product applied left to right: A, then B, then C, ...
    Compose {
        #[arg(required = true, num_args = 2..)]
        elements: Vec<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    Inverse {
        element: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    Power {
        element: PathBuf,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Exit 0 when the two elements are equal maps, 1 otherwise.
    Equal { a: PathBuf, b: PathBuf },
    /// Torsion order, or exit 3 when no identity power is found within the caps.
    Order {
        element: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: u64,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: usize,
    },
    /// Writes the element as an identical block pair on an invariant block.
    InvariantBlock {
        element: PathBuf,
        /// Any multiple of the order; computed when omitted.
        #[arg(long)]
        order: Option<u64>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Finite closure of torsion generators, with a JSON certificate.
    Closure {
        #[arg(required = true)]
        generators: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: usize,
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        order_cap: usize,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// The i-th element of the square-root chain of the vertical shift in 2V.
    RootChain {
        i: u32,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Image of an eventually periodic point, e.g. `--point '(0);01(10)'`.
    Eval {
        element: PathBuf,
        #[arg(long)]
        point: String,
    },
    Reduce {
        element: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// SVG picture of a 2V element.
    Render {
        element: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        blocks: usize,
        #[arg(long)]
        seed: u64,
        /// Identical block pair (X, X, σ).
        #[arg(long)]
        torsion: bool,
        /// Conjugate the torsion element by a random element of this many pieces.
        #[arg(long, requires = "torsion")]
        conjugate: Option<usize>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

enum Failure {
    Parse(String),
    Cap(String),
    Invalid(String),
}

impl From<NvError> for Failure {
    fn from(e: NvError) -> Self {
        match e {
            NvError::Syntax { .. } | NvError::EmptyPeriod(_) => Failure::Parse(e.to_string()),
            NvError::Resource { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Element, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    parse_element(&text).map_err(|e| match Failure::from(e) {
        Failure::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
        Failure::Invalid(m) => Failure::Invalid(format!("{}: {m}", path.display())),
        f => f,
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Compose { elements, o } => {
            let mut acc = load(&elements[0])?;
            for p in &elements[1..] {
                acc = compose(&acc, &load(p)?)?;
            }
            emit(&o, &serialize_element(&acc))?;
        }
        Command::Inverse { element, o } => {
            emit(&o, &serialize_element(&inverse(&load(&element)?)))?;
        }
        Command::Power { element, k, o } => {
            emit(&o, &serialize_element(&power(&load(&element)?, k)))?;
        }
        Command::Equal { a, b } => {
            let same = equal(&load(&a)?, &load(&b)?)?;
            println!("{}", if same { "equal" } else { "distinct" });
            return Ok(if same { 0 } else { 1 });
        }
        Command::Order {
            element,
            cap,
            size_cap,
        } => match torsion::order(&load(&element)?, cap.max(1), size_cap) {
            OrderResult::Finite(p) => println!("order {p}"),
            OrderResult::ExceedsCap {
                cap,
                max_block_size,
            } => {
                return Err(Failure::Cap(format!(
                    "no identity power found (cap {cap}, largest block {max_block_size})"
                )))
            }
        },
        Command::InvariantBlock { element, order, o } => {
            let g = load(&element)?;
            let p = match order {
                Some(p) => p,
                None => torsion::order(&g, DEFAULT_ORDER_CAP, DEFAULT_SIZE_CAP)
                    .finite()
                    .ok_or_else(|| {
                        Failure::Cap("order not found within the default caps".into())
                    })?,
            };
            let b = torsion::invariant_block(&g, p)?;
            let pair = torsion::identical_pair(&g, &b)?;
            eprintln!("invariant block of {} pieces", b.len());
            emit(&o, &serialize_element(&pair))?;
        }
        Command::Closure {
            generators,
            size_cap,
            order_cap,
            certificate,
        } => {
            let gens = generators
                .iter()
                .map(|p| load(p))
                .collect::<Result<Vec<_>, _>>()?;
            let opts = ClosureOptions {
                size_cap,
                order_cap,
                ..ClosureOptions::default()
            };
            let r = torsion::closure(&gens, &opts)?;
            let cert = ClosureCertificate::from_result(&r);
            if let Some(path) = &certificate {
                emit(&Some(path.clone()), &(cert.to_json() + "\n"))?;
            }
            match r.status {
                ClosureStatus::Complete => println!(
                    "group order {} on an invariant block of {} pieces",
                    r.group_order,
                    r.invariant_block.as_ref().map_or(0, |b| b.len())
                ),
                ClosureStatus::CapExceeded => {
                    return Err(Failure::Cap(format!("closure stopped: {:?}", r.cap_reason)))
                }
            }
        }
        Command::RootChain { i, o } => {
            emit(&o, &serialize_element(&roots::root_chain(i)?))?;
        }
        Command::Eval { element, point } => {
            let g = load(&element)?;
            let p = parse_point(&point)?;
            println!("{}", apply_point(&g, &p)?);
        }
        Command::Reduce { element, o } => {
            emit(&o, &serialize_element(&reduce(&load(&element)?)))?;
        }
        Command::Render { element, o } => {
            emit(&o, &render_svg(&load(&element)?)?)?;
        }
        Command::Random {
            dim,
            blocks,
            seed,
            torsion,
            conjugate,
            o,
        } => {
            if dim == 0 || blocks == 0 || conjugate == Some(0) {
                return Err(Failure::Invalid(
                    "dimension and block counts must be positive".into(),
                ));
            }
            let g = if torsion {
                random_torsion(dim, blocks, seed, conjugate)
            } else {
                random_element(dim, blocks, seed)
            };
            emit(&o, &serialize_element(&g))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Parse(m)) => {
            eprintln!("parse error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("cap exceeded: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Invalid(m)) => {
            eprintln!("invalid: {m}");
            ExitCode::from(4)
        }
    }
}
