//! `rootforest`: counting, enumeration, bijection steps, sampling and
//! verification for labeled rooted forests.
//!
//! Exit status: 0 on success, 1 on bad input, 2 when a verification finds
//! a mismatch.

mod args;
mod io;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use num_bigint::BigUint;
use serde_json::json;

use args::{
    BijectionArgs, Cli, Command, ConvertArgs, CountArgs, Direction, EnumerateArgs, Formula,
    SampleArgs,
};
use io::{Format, InputKind};
use rootforest::bijection::{self, ChoiceIndex};
use rootforest::codec::{self, CodecFamily};
use rootforest::counting as cnt;
use rootforest::enumerate;
use rootforest::{AnyForest, DegreePartition, DegreeSequence};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, malformed input, a forest outside its family: exit 1.
    User(String),
    /// A formula, oracle or bijection disagreed: exit 2.
    Mismatch(String),
}

impl From<rootforest::Error> for Failure {
    fn from(e: rootforest::Error) -> Self {
        Failure::User(e.to_string())
    }
}

pub type Outcome<T = ()> = Result<T, Failure>;

pub fn user<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::User(msg.into()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!(
                "{}",
                text.lines().next().unwrap_or("error: invalid arguments")
            );
            return ExitCode::from(1);
        }
    };
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out)
        .and_then(|()| out.flush().map_err(|e| Failure::User(e.to_string())))
    {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Count(a) => count(&a, out),
        Command::Enumerate(a) => enumerate_cmd(&a, out),
        Command::Sample(a) => sample(&a, out),
        Command::Bijection { direction, args } => bijection_cmd(direction, &args, out),
        Command::Identity(a) => verify::identity(&a, out),
        Command::Verify(a) => verify::verify(&a, out),
        Command::Convert(a) => convert(&a, out),
    }
}

pub fn emit(out: &mut impl Write, text: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::User(e.to_string()))
}

fn count(a: &CountArgs, out: &mut impl Write) -> Outcome {
    if a.conditioned && !a.formula.takes_condition() {
        return user(format!(
            "--conditioned does not apply to {}",
            a.formula.name()
        ));
    }
    let p = a.params();
    let value = match a.formula {
        Formula::Cayley => cnt::cayley(p.get("n")?)?,
        Formula::RootedForests => {
            cnt::rooted_forest_count(p.get("n")?, p.get("k")?, a.conditioned)?
        }
        Formula::Forests => cnt::forests_k_trees(p.get("n")?, p.get("k")?)?,
        Formula::Riordan => cnt::riordan_t(p.get("n")?, p.get("k")?)?,
        Formula::Multipartite => cnt::multipartite_spanning_trees(p.list("parts", &a.parts)?)?,
        Formula::TripartiteBase => {
            cnt::tripartite_base_count(p.get("r")?, p.get("s")?, p.get("t")?)?
        }
        Formula::PlaneLabeled => cnt::plane_labeled(p.get("n")?)?,
        Formula::Catalan => cnt::catalan(p.get("n")?)?,
        Formula::Narayana => cnt::narayana(p.get("n")?, p.get("p")?)?,
        Formula::Compositions => {
            let (count, first) = cnt::composition_stats(p.get("n")?, p.get("m")?)?;
            p.finish()?;
            return match a.format {
                Format::Json => emit(
                    out,
                    json!({"formula": a.formula.name(), "value": count.to_string(), "first_part_sum": first.to_string()}),
                ),
                _ => emit(out, format!("{count}\n{first}")),
            };
        }
        Formula::Kary => cnt::kary_forest_count(p.get("arity")?, p.get("n")?, p.get("r")?)?,
        Formula::KaryShapes => cnt::kary_unlabeled(p.get("arity")?, p.get("n")?)?,
        Formula::DegseqPlane => cnt::degseq_plane_count(&DegreeSequence::new(
            p.list("degrees", &a.degrees)?.to_vec(),
        ))?,
        Formula::DegseqRooted => cnt::degseq_rooted_count(&DegreeSequence::new(
            p.list("degrees", &a.degrees)?.to_vec(),
        ))?,
        Formula::PartitionShapes => {
            let n = p.get("n")?;
            cnt::erdelyi_etherington(&DegreePartition::new(
                n,
                p.list("counts", &a.counts)?.to_vec(),
            )?)?
        }
        Formula::SpecialColored => {
            let (n, kc, r) = (p.get("n")?, p.get("kc")?, p.get("r")?);
            if a.conditioned {
                cnt::special_colored_conditioned(n, kc, r)?
            } else {
                cnt::special_colored_count(n, kc, r)?
            }
        }
        Formula::ColoredTrees => cnt::colored_tree_count(p.get("n")?, p.get("kc")?)?,
        Formula::ColoredRootDegree => {
            cnt::colored_root_degree_count(p.get("n")?, p.get("kc")?, p.get("r")?)?
        }
    };
    p.finish()?;
    match a.format {
        Format::Json => emit(
            out,
            json!({"formula": a.formula.name(), "value": value.to_string()}),
        ),
        Format::Text => emit(out, value),
        Format::Dot => user("dot output applies to forests, not counts"),
    }
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut impl Write) -> Outcome {
    let spec = a.family.spec()?;
    if a.count_only {
        // honor --limit by counting the stream instead of materializing it
        let n = match a.limit {
            Some(l) => BigUint::from(enumerate::enumerate(&spec)?.take(l).count()),
            None => enumerate::count_by_enumeration(&spec)?,
        };
        return match a.format {
            Format::Json => emit(out, json!({"count": n.to_string()})),
            _ => emit(out, n),
        };
    }
    let stream = enumerate::enumerate(&spec)?;
    io::write_forests(out, a.format, stream.take(a.limit.unwrap_or(usize::MAX)))
}

fn sample(a: &SampleArgs, out: &mut impl Write) -> Outcome {
    let family = a.codec_family()?;
    let mut rng = codec::rng_from_seed(a.seed);
    let mut forests = Vec::with_capacity(a.count);
    for _ in 0..a.count {
        forests.push(codec::sample_with(family, a.rooting.into(), &mut rng)?);
    }
    io::write_forests(out, a.format, forests)
}

fn bijection_cmd(direction: Direction, a: &BijectionArgs, out: &mut impl Write) -> Outcome {
    use args::StepFamily as F;
    if a.family != F::Partite && (a.parts.is_some() || a.chain.is_some()) {
        return user("--parts and --chain only apply to the partite family");
    }
    if a.family != F::Colored && a.kc.is_some() {
        return user("--kc only applies to the colored family");
    }
    if direction == Direction::Forward && a.choice.is_some() {
        return user("--choice is only used by the inverse direction");
    }
    let text = io::read_input(a.input.as_deref())?;
    let kind = match a.family {
        F::Plain | F::Partite => InputKind::Parents,
        F::Plane | F::Leafplane => InputKind::Plane,
        F::Colored => InputKind::Colored,
    };
    let forest = io::parse_one(&text, kind, a.kc)?;
    let k = a.k;
    let choice = a.choice.map(ChoiceIndex);
    let (result, recovered) = match direction {
        Direction::Forward => match (a.family, forest) {
            (F::Plain, AnyForest::Rooted(f)) => {
                let (g, c) = bijection::plain_forward(&f, k)?;
                (AnyForest::Rooted(g), Some(c))
            }
            (F::Partite, AnyForest::Rooted(f)) => {
                let (g, c) = bijection::partite_forward(&f, k, &a.parts()?, a.chain())?;
                (AnyForest::Rooted(g), Some(c))
            }
            (F::Plane, AnyForest::Plane(f)) => {
                let (g, c) = bijection::plane_forward(&f, k)?;
                (AnyForest::Plane(g), Some(c))
            }
            (F::Leafplane, AnyForest::Plane(f)) => {
                let (g, c) = bijection::leafplane_forward(&f, k)?;
                (AnyForest::Plane(g), Some(c))
            }
            (F::Colored, AnyForest::Colored(f)) => {
                let (g, c) = bijection::colored_forward(&f, k)?;
                (AnyForest::Colored(g), Some(c))
            }
            _ => unreachable!("input kind follows the family"),
        },
        Direction::Inverse => {
            let Some(c) = choice else {
                return user("the inverse direction needs --choice");
            };
            let g = match (a.family, forest) {
                (F::Plain, AnyForest::Rooted(f)) => {
                    AnyForest::Rooted(bijection::plain_inverse(&f, k, c)?)
                }
                (F::Partite, AnyForest::Rooted(f)) => AnyForest::Rooted(
                    bijection::partite_inverse(&f, k, &a.parts()?, a.chain(), c)?,
                ),
                (F::Plane, AnyForest::Plane(f)) => {
                    AnyForest::Plane(bijection::plane_inverse(&f, k, c)?)
                }
                (F::Leafplane, AnyForest::Plane(f)) => {
                    AnyForest::Plane(bijection::leafplane_inverse(&f, k, c)?)
                }
                (F::Colored, AnyForest::Colored(f)) => {
                    AnyForest::Colored(bijection::colored_inverse(&f, k, c)?)
                }
                _ => unreachable!("input kind follows the family"),
            };
            (g, None)
        }
    };
    match a.format {
        Format::Json => emit(
            out,
            json!({"forest": result, "choice": recovered.map(ChoiceIndex::get)}),
        ),
        Format::Text => {
            emit(out, &result)?;
            match recovered {
                Some(c) => emit(out, format!("choice {c}")),
                None => Ok(()),
            }
        }
        Format::Dot => emit(out, rootforest::format::to_dot(&result).trim_end()),
    }
}

fn convert(a: &ConvertArgs, out: &mut impl Write) -> Outcome {
    let text = io::read_input(a.input.as_deref())?;
    if a.kc.is_some() && a.from != InputKind::Colored {
        return user("--kc only applies to colored input");
    }
    let forests = io::records(&text, a.from)
        .iter()
        .map(|r| io::parse_one(r, a.from, a.kc))
        .collect::<Outcome<Vec<_>>>()?;
    if forests.is_empty() {
        return user("no input records");
    }
    if !a.trace {
        return io::write_forests(out, a.format, forests);
    }
    let traces = forests
        .iter()
        .map(|f| {
            let family = match f {
                AnyForest::Rooted(g) => CodecFamily::Plain { n: g.n() },
                AnyForest::Plane(g) => CodecFamily::Plane {
                    n: g.vertex_count(),
                },
                AnyForest::Colored(g) => CodecFamily::Colored {
                    n: g.n(),
                    colors: g.colors(),
                },
            };
            Ok(codec::encode(f, family)?)
        })
        .collect::<Outcome<Vec<_>>>()?;
    match a.format {
        Format::Json => emit(
            out,
            serde_json::to_string(&traces).map_err(|e| Failure::User(e.to_string()))?,
        ),
        Format::Text => traces.iter().try_for_each(|t| emit(out, t)),
        Format::Dot => user("traces have no dot form"),
    }
}
