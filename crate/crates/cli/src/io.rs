use std::io::{Read, Write};

use clap::ValueEnum;

use crate::{emit, user, Failure, Outcome};
use rootforest::codec::{decode, ChoiceTrace};
use rootforest::format::to_dot;
use rootforest::{AnyForest, EdgeColoredForest, PlaneForest, RootedForest};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    /// `n k p_1 ... p_n`, one forest per line.
    Parents,
    /// Nested terms such as `1(5,3(4));2`, one forest per line.
    Plane,
    /// A parent-array line followed by a color line.
    Colored,
    /// Choice traces such as `plain n=5 : 2 4 1`, one per line.
    Trace,
}

pub fn read_input(arg: Option<&str>) -> Outcome<String> {
    match arg {
        Some(s) => Ok(s.to_string()),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::User(format!("reading standard input: {e}")))?;
            Ok(s)
        }
    }
}

/// Splits input into one string per forest.
pub fn records(text: &str, kind: InputKind) -> Vec<String> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    match kind {
        InputKind::Colored => lines.chunks(2).map(|c| c.join("\n")).collect(),
        _ => lines.into_iter().map(String::from).collect(),
    }
}

/// Parses exactly one forest.
pub fn parse_one(text: &str, kind: InputKind, kc: Option<usize>) -> Outcome<AnyForest> {
    let recs = records(text, kind);
    let [rec] = &recs[..] else {
        return user(format!("expected one forest, found {} records", recs.len()));
    };
    Ok(match kind {
        InputKind::Parents => AnyForest::Rooted(RootedForest::parse_line(rec)?),
        InputKind::Plane => AnyForest::Plane(PlaneForest::parse_term(rec)?),
        InputKind::Colored => {
            let Some(kc) = kc else {
                return user("colored input needs --kc");
            };
            AnyForest::Colored(EdgeColoredForest::parse_text(rec, kc)?)
        }
        InputKind::Trace => decode(&ChoiceTrace::parse(rec)?)?,
    })
}

/// Text: one record per forest. JSON: a single array. DOT: one digraph
/// per forest.
pub fn write_forests(
    out: &mut impl Write,
    format: Format,
    forests: impl IntoIterator<Item = AnyForest>,
) -> Outcome {
    let mut first = true;
    for f in forests {
        match format {
            Format::Text => emit(out, &f)?,
            Format::Dot => emit(out, to_dot(&f).trim_end())?,
            Format::Json => {
                let item = serde_json::to_string(&f).map_err(|e| Failure::User(e.to_string()))?;
                let sep = if first { "[\n  " } else { ",\n  " };
                write!(out, "{sep}{item}").map_err(|e| Failure::User(e.to_string()))?;
            }
        }
        first = false;
    }
    if format == Format::Json {
        emit(out, if first { "[]" } else { "\n]" })?;
    }
    Ok(())
}
