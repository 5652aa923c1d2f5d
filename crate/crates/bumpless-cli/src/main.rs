use std::io::{Read, Write};
use std::process::ExitCode;

use bumpless::asm::{Asm, CornerSum, IceConfig};
use bumpless::bpd::{mpipes, phi, phi_inv, pipes_with_limit, schubert_bpd, Bpd};
use bumpless::hecke::omega;
use bumpless::opd::grothendieck_opd;
use bumpless::perm::Permutation;
use bumpless::poly::{grothendieck_dd_with_limit, Polynomial};
use bumpless::transition::{grothendieck_transition_with_limit, transition_expand, Expansion};
use bumpless::vex::{fsyt_of, kmy_sum, svt_of};
use bumpless::{DEFAULT_ENUM_LIMIT, DEFAULT_POLY_LIMIT};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

mod verify;

#[derive(Parser)]
#[command(name = "bumpless", version, about = "Grothendieck polynomials and bumpless pipe dreams")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest size accepted by polynomial computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// β-double Grothendieck polynomial of a permutation.
    Groth {
        w: String,
        #[arg(long, value_enum, default_value_t = Method::Dd)]
        method: Method,
    },
    /// Double Schubert polynomial of a permutation.
    Schubert {
        w: String,
        #[arg(long, value_enum, default_value_t = SchubertMethod::Dd)]
        method: SchubertMethod,
    },
    /// Bumpless pipe dreams with a given Demazure product.
    Pipes {
        w: String,
        #[arg(long, conflicts_with = "marked")]
        reduced: bool,
        #[arg(long)]
        marked: bool,
        #[arg(long)]
        ascii_safe: bool,
    },
    /// Convert between matrix, pipe dream, ice and corner-sum encodings.
    Convert {
        from: Format,
        to: Format,
        /// JSON input, or `-` for stdin.
        input: String,
    },
    /// Key of an alternating sign matrix.
    Key { asm: String },
    /// One step of the transition recursion.
    Transition { w: String },
    /// Decreasing tableau of a Hecke pipe dream.
    Omega { bpd: String },
    /// Flagged tableaux of a vexillary permutation.
    Tableaux {
        v: String,
        #[arg(long)]
        set_valued: bool,
    },
    /// Draw a pipe dream.
    Render {
        bpd: String,
        #[arg(long)]
        ascii_safe: bool,
    },
    /// Run the property suite up to a given size.
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=6))]
        level: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dd,
    Bpd,
    Transition,
    Opd,
    Kmy,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchubertMethod {
    Dd,
    Bpd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Asm,
    Bpd,
    Ice,
    Csum,
}

enum Failure {
    Input(String),
    Verify,
}

impl From<bumpless::Error> for Failure {
    fn from(e: bumpless::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("invalid JSON: {e}"))
    }
}

type Out = Result<String, Failure>;

fn read_input(s: &str) -> Result<String, Failure> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(buf)
    } else {
        Ok(s.to_string())
    }
}

fn perm(s: &str) -> Result<Permutation, Failure> {
    Ok(s.parse::<Permutation>()?)
}

fn parse_bpd(s: &str) -> Result<Bpd, Failure> {
    Ok(serde_json::from_str(&read_input(s)?)?)
}

fn parse_asm(s: &str) -> Result<Asm, Failure> {
    Ok(serde_json::from_str(&read_input(s)?)?)
}

fn poly_out(p: &Polynomial, json: bool) -> String {
    if json {
        serde_json::to_string(&p.to_terms()).expect("terms serialize")
    } else {
        p.to_string()
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("library types serialize")
}

fn run(cli: Cli) -> Out {
    let poly_limit = cli.max_n.map_or(DEFAULT_POLY_LIMIT, |n| n as usize);
    let enum_limit = cli.max_n.map_or(DEFAULT_ENUM_LIMIT, |n| n as usize);
    let json = cli.json;
    match cli.command {
        Command::Groth { w, method } => {
            let w = perm(&w)?;
            let p = match method {
                Method::Dd => grothendieck_dd_with_limit(&w, poly_limit)?,
                Method::Bpd => {
                    let total: Polynomial = pipes_with_limit(&w, enum_limit)?.iter().map(Bpd::weight).sum();
                    total.div_beta_pow(w.length() as u32).expect("weights carry β^ℓ")
                }
                Method::Transition => grothendieck_transition_with_limit(&w, poly_limit)?,
                Method::Opd => grothendieck_opd(&w)?,
                Method::Kmy => kmy_sum(&w)?,
            };
            Ok(poly_out(&p, json))
        }
        Command::Schubert { w, method } => {
            let w = perm(&w)?;
            let p = match method {
                SchubertMethod::Dd => grothendieck_dd_with_limit(&w, poly_limit)?.schubert_specialize(),
                SchubertMethod::Bpd => {
                    pipes_with_limit(&w, enum_limit)?;
                    schubert_bpd(&w)?
                }
            };
            Ok(poly_out(&p, json))
        }
        Command::Pipes { w, reduced, marked, ascii_safe } => {
            let w = perm(&w)?;
            let all = pipes_with_limit(&w, enum_limit)?;
            if marked {
                let ms = mpipes(&w)?;
                if json {
                    return Ok(to_json(&ms));
                }
                let blocks: Vec<String> = ms
                    .iter()
                    .map(|m| {
                        let marks: Vec<String> = m.marks().iter().map(|(i, j)| format!("({i},{j})")).collect();
                        format!("{}marks: {}\n", m.base().render(ascii_safe), marks.join(" "))
                    })
                    .collect();
                return Ok(format!("{} marked pipe dreams\n\n{}", ms.len(), blocks.join("\n")).trim_end().to_string());
            }
            let chosen: Vec<Bpd> = all.into_iter().filter(|p| !reduced || p.is_reduced()).collect();
            if json {
                return Ok(to_json(&chosen));
            }
            let blocks: Vec<String> = chosen.iter().map(|p| p.render(ascii_safe)).collect();
            Ok(format!("{} pipe dreams\n\n{}", chosen.len(), blocks.join("\n")).trim_end().to_string())
        }
        Command::Convert { from, to, input } => {
            let text = read_input(&input)?;
            let asm = match from {
                Format::Asm => serde_json::from_str::<Asm>(&text)?,
                Format::Bpd => phi_inv(&serde_json::from_str::<Bpd>(&text)?),
                Format::Ice => IceConfig::from_letters(&serde_json::from_str::<Vec<String>>(&text)?)?.to_asm()?,
                Format::Csum => serde_json::from_str::<CornerSum>(&text)?.to_asm()?,
            };
            Ok(match to {
                Format::Asm => to_json(&asm),
                Format::Bpd => to_json(&phi(&asm)),
                Format::Ice => to_json(&asm.to_ice().to_letters()),
                Format::Csum => to_json(&asm.corner_sum()),
            })
        }
        Command::Key { asm } => {
            let k = parse_asm(&asm)?.key();
            Ok(if json { to_json(&k) } else { k.to_string() })
        }
        Command::Transition { w } => {
            let w = perm(&w)?;
            let terms = transition_expand(&w)?;
            if json {
                let v: Vec<_> = terms
                    .iter()
                    .map(|t| json!({"set": t.set, "coefficient": t.coefficient.to_terms(), "permutation": t.permutation}))
                    .collect();
                return Ok(to_json(&v));
            }
            Ok(Expansion(&w, &terms).to_string())
        }
        Command::Omega { bpd } => {
            let t = omega(&parse_bpd(&bpd)?)?;
            if json {
                return Ok(to_json(&t));
            }
            let rows: Vec<String> =
                t.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
            let word: Vec<String> = t.column_reading_word().0.iter().map(|x| x.to_string()).collect();
            Ok(format!("{}\nword: ({})", rows.join("\n"), word.join(",")))
        }
        Command::Tableaux { v, set_valued } => {
            let v = perm(&v)?;
            if set_valued {
                let ts = svt_of(&v)?;
                if json {
                    return Ok(to_json(&ts));
                }
                let blocks: Vec<String> = ts
                    .iter()
                    .map(|t| {
                        t.rows()
                            .iter()
                            .map(|r| {
                                r.iter()
                                    .map(|s| format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            })
                            .collect::<Vec<_>>()
                            .join("\n")
                    })
                    .collect();
                return Ok(format!("{} tableaux\n\n{}", ts.len(), blocks.join("\n\n")).trim_end().to_string());
            }
            let ts = fsyt_of(&v)?;
            if json {
                return Ok(to_json(&ts));
            }
            let blocks: Vec<String> = ts
                .iter()
                .map(|t| {
                    t.rows()
                        .iter()
                        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>()
                        .join("\n")
                })
                .collect();
            Ok(format!("{} tableaux\n\n{}", ts.len(), blocks.join("\n\n")).trim_end().to_string())
        }
        Command::Render { bpd, ascii_safe } => Ok(parse_bpd(&bpd)?.render(ascii_safe).trim_end().to_string()),
        Command::Verify { level, seed } => {
            let report = verify::run(level as usize, seed);
            let text = report.iter().map(|(name, ok)| format!("{} {name}", if *ok { "PASS" } else { "FAIL" })).collect::<Vec<_>>();
            emit(&text.join("\n"));
            if report.iter().all(|(_, ok)| *ok) {
                Ok(String::new())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

/// Print a line, ignoring a closed stdout.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            if !s.is_empty() {
                emit(&s);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}
