//! Choice traces: the sequence of inverse-step choices that rebuilds a tree
//! from the unique forest with roots `1..n-1` and `n` a child of 1.
//!
//! Decoding runs the inverse steps for `k = n-1, ..., 2`; encoding runs the
//! forward steps for `k = 2, ..., n-1`. Every trace decodes to a distinct
//! tree, so drawing each choice uniformly gives an exactly uniform tree.
//!
//! Colored traces carry one extra leading choice `c_n`: the color of the
//! edge `1 -> n` in the starting forest, from `1..=kc-1`.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`; ranges are reduced
//! by rejection (values below `2^64 mod m` are redrawn).

use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bijection::{
    colored_forward, colored_inverse, plain_forward, plain_inverse, plane_forward, plane_inverse,
    ChoiceIndex,
};
use crate::colored::EdgeColoredForest;
use crate::error::{parse_err, Error, Result};
use crate::forest::RootedForest;
use crate::plane::{PlaneForest, PlaneNode};
use crate::AnyForest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CodecFamily {
    Plain { n: usize },
    Plane { n: usize },
    Colored { n: usize, colors: usize },
}

impl CodecFamily {
    pub fn n(self) -> usize {
        match self {
            Self::Plain { n } | Self::Plane { n } | Self::Colored { n, .. } => n,
        }
    }

    fn validate(self) -> Result<()> {
        if self.n() == 0 {
            return Err(Error::ParameterRange("need n >= 1".into()));
        }
        if let Self::Colored { n, colors } = self {
            if n >= 2 && colors < 2 {
                return Err(Error::ParameterRange(
                    "colored traces need at least two colors".into(),
                ));
            }
        }
        Ok(())
    }

    /// Range sizes of the trace entries, in trace order.
    pub fn multipliers(self) -> Vec<usize> {
        let n = self.n();
        let steps = (2..n).rev();
        match self {
            Self::Plain { .. } => steps.map(|_| n).collect(),
            Self::Plane { .. } => steps.map(|k| 2 * n - k).collect(),
            Self::Colored { colors, .. } => {
                let base = (n >= 2).then_some(colors - 1);
                base.into_iter()
                    .chain(steps.map(|k| colors * n + k - 2 * n))
                    .collect()
            }
        }
    }

    /// The forest with roots `1..n-1` and `n` below 1. For colored
    /// families the edge gets color `base_color`.
    fn start(self, base_color: usize) -> AnyForest {
        let n = self.n();
        let mut parent = vec![0; n];
        if n >= 2 {
            parent[n - 1] = 1;
        }
        let rooted = RootedForest::from_parents_unchecked(parent);
        match self {
            Self::Plain { .. } => AnyForest::Rooted(rooted),
            Self::Plane { .. } => {
                let mut trees: Vec<PlaneNode> =
                    (1..n.max(2)).map(|v| PlaneNode::leaf(Some(v))).collect();
                if n >= 2 {
                    trees[0].children.push(PlaneNode::leaf(Some(n)));
                }
                AnyForest::Plane(PlaneForest::new(trees).expect("distinct labels"))
            }
            Self::Colored { colors, .. } => {
                let mut color = vec![0; n];
                if n >= 2 {
                    color[n - 1] = base_color;
                }
                AnyForest::Colored(EdgeColoredForest::new_unchecked(rooted, colors, color))
            }
        }
    }

    fn name(self) -> &'static str {
        match self {
            Self::Plain { .. } => "plain",
            Self::Plane { .. } => "plane",
            Self::Colored { .. } => "colored",
        }
    }
}

impl fmt::Display for CodecFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Plain { n } | Self::Plane { n } => write!(f, "{} n={n}", self.name()),
            Self::Colored { n, colors } => write!(f, "colored n={n} kc={colors}"),
        }
    }
}

/// Trace text: `family key=value... : c_{n-1} ... c_2` (colored traces
/// start with `c_n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ChoiceTrace {
    pub family: CodecFamily,
    pub choices: Vec<usize>,
}

impl ChoiceTrace {
    pub fn new(family: CodecFamily, choices: Vec<usize>) -> Result<Self> {
        family.validate()?;
        let m = family.multipliers();
        if choices.len() != m.len() {
            return Err(Error::InvalidForest(format!(
                "trace for {family} needs {} choices, found {}",
                m.len(),
                choices.len()
            )));
        }
        for (&c, &count) in choices.iter().zip(&m) {
            if c == 0 || c > count {
                return Err(Error::ChoiceOutOfRange { choice: c, count });
            }
        }
        Ok(Self { family, choices })
    }

    /// The choice consumed when stepping from `k` roots to `k - 1`.
    pub fn choice_at(&self, k: usize) -> Option<usize> {
        let n = self.family.n();
        if !(2..n).contains(&k) {
            return None;
        }
        let offset = usize::from(matches!(self.family, CodecFamily::Colored { .. }));
        self.choices.get(offset + n - 1 - k).copied()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let colon = text
            .find(':')
            .ok_or_else(|| parse_err(text.len(), "expected ':'"))?;
        let mut head = Vec::new();
        let mut pos = 0;
        for tok in text[..colon].split_whitespace() {
            let at = text[pos..].find(tok).map_or(pos, |i| pos + i);
            pos = at + tok.len();
            head.push((at, tok));
        }
        let (&(_, name), params) = head
            .split_first()
            .ok_or_else(|| parse_err(0, "missing family name"))?;
        let mut n = None;
        let mut kc = None;
        for &(at, tok) in params {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| parse_err(at, format!("expected key=value, found {tok:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| parse_err(at + key.len() + 1, format!("bad number {value:?}")))?;
            match key {
                "n" => n = Some(value),
                "kc" => kc = Some(value),
                _ => return Err(parse_err(at, format!("unknown parameter {key:?}"))),
            }
        }
        let n = n.ok_or_else(|| parse_err(colon, "missing n=..."))?;
        let family = match (name, kc) {
            ("plain", None) => CodecFamily::Plain { n },
            ("plane", None) => CodecFamily::Plane { n },
            ("colored", Some(colors)) => CodecFamily::Colored { n, colors },
            ("colored", None) => return Err(parse_err(colon, "colored traces need kc=...")),
            ("plain" | "plane", Some(_)) => {
                return Err(parse_err(0, format!("{name} takes no kc")))
            }
            _ => return Err(parse_err(0, format!("unknown codec family {name:?}"))),
        };
        let choices = crate::forest::parse_numbers(&text[colon + 1..])
            .map_err(|e| match e {
                Error::Parse { pos, msg } => parse_err(colon + 1 + pos, msg),
                e => e,
            })?
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        Self::new(family, choices)
    }
}

impl fmt::Display for ChoiceTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :", self.family)?;
        for c in &self.choices {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// Rebuilds the one-root tree described by `trace`.
pub fn decode(trace: &ChoiceTrace) -> Result<AnyForest> {
    let trace = ChoiceTrace::new(trace.family, trace.choices.clone())?;
    let family = trace.family;
    let n = family.n();
    let (base_color, steps) = match family {
        CodecFamily::Colored { .. } if n >= 2 => (trace.choices[0], &trace.choices[1..]),
        _ => (0, &trace.choices[..]),
    };
    let mut forest = family.start(base_color);
    for (k, &c) in (2..n).rev().zip(steps) {
        let c = ChoiceIndex(c);
        forest = match forest {
            AnyForest::Rooted(f) => AnyForest::Rooted(plain_inverse(&f, k, c)?),
            AnyForest::Plane(f) => AnyForest::Plane(plane_inverse(&f, k, c)?),
            AnyForest::Colored(f) => AnyForest::Colored(colored_inverse(&f, k, c)?),
        };
    }
    Ok(forest)
}

/// Records the forward-step choices of a one-root tree rooted at 1.
pub fn encode(forest: &AnyForest, family: CodecFamily) -> Result<ChoiceTrace> {
    family.validate()?;
    let n = family.n();
    let mismatch = || Error::FamilyViolation(format!("forest does not belong to {family}"));
    let size = match forest {
        AnyForest::Rooted(f) => f.n(),
        AnyForest::Plane(f) => f.vertex_count(),
        AnyForest::Colored(f) => f.n(),
    };
    let kind_ok = matches!(
        (forest, family),
        (AnyForest::Rooted(_), CodecFamily::Plain { .. })
            | (AnyForest::Plane(_), CodecFamily::Plane { .. })
            | (AnyForest::Colored(_), CodecFamily::Colored { .. })
    );
    if !kind_ok || size != n {
        return Err(mismatch());
    }
    if let (AnyForest::Colored(f), CodecFamily::Colored { colors, .. }) = (forest, family) {
        if f.colors() != colors || !f.is_special() {
            return Err(mismatch());
        }
    }
    let one_root = match forest {
        AnyForest::Rooted(f) => f.has_first_roots(1),
        AnyForest::Plane(f) => f.is_fully_labeled() && f.has_first_roots(1),
        AnyForest::Colored(f) => f.base().has_first_roots(1),
    };
    if !one_root {
        return Err(Error::FamilyViolation(
            "expected a single tree rooted at 1".into(),
        ));
    }
    let mut current = forest.clone();
    let mut steps = Vec::new();
    for k in 2..n {
        let (next, c) = match &current {
            AnyForest::Rooted(f) => {
                let (g, c) = plain_forward(f, k)?;
                (AnyForest::Rooted(g), c)
            }
            AnyForest::Plane(f) => {
                let (g, c) = plane_forward(f, k)?;
                (AnyForest::Plane(g), c)
            }
            AnyForest::Colored(f) => {
                let (g, c) = colored_forward(f, k)?;
                (AnyForest::Colored(g), c)
            }
        };
        steps.push(c.get());
        current = next;
    }
    steps.reverse();
    let mut choices = Vec::with_capacity(steps.len() + 1);
    if let AnyForest::Colored(f) = &current {
        if n >= 2 {
            choices.push(f.color(n));
        }
    }
    choices.extend(steps);
    ChoiceTrace::new(family, choices)
}

/// Uniform integer in `0..m` by rejection.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, m: u64) -> u64 {
    assert!(m > 0, "empty range");
    let reject = m.wrapping_neg() % m;
    loop {
        let x = rng.next_u64();
        if x >= reject {
            return x % m;
        }
    }
}

/// A uniformly random trace drawn from `rng`.
pub fn random_trace<R: RngCore + ?Sized>(family: CodecFamily, rng: &mut R) -> Result<ChoiceTrace> {
    family.validate()?;
    let choices = family
        .multipliers()
        .into_iter()
        .map(|m| uniform_below(rng, m as u64) as usize + 1)
        .collect();
    ChoiceTrace::new(family, choices)
}

/// Where the sampled tree is rooted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rooting {
    /// At vertex 1.
    #[default]
    One,
    /// At a uniformly random vertex: the root label is swapped in after
    /// decoding.
    Anywhere,
}

/// Draws a uniform tree of `family` using `rng`.
pub fn sample_with<R: RngCore + ?Sized>(
    family: CodecFamily,
    rooting: Rooting,
    rng: &mut R,
) -> Result<AnyForest> {
    let tree = decode(&random_trace(family, rng)?)?;
    if rooting == Rooting::One {
        return Ok(tree);
    }
    let root = uniform_below(rng, family.n() as u64) as usize + 1;
    Ok(match tree {
        AnyForest::Rooted(f) => AnyForest::Rooted(f.swap_labels(1, root)?),
        AnyForest::Plane(f) => AnyForest::Plane(f.swap_labels(1, root)),
        AnyForest::Colored(f) => AnyForest::Colored(f.swap_labels(1, root)?),
    })
}

/// The generator used by [`sample_uniform`].
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One uniform tree from a fresh generator seeded with `seed`.
pub fn sample_uniform(family: CodecFamily, rooting: Rooting, seed: u64) -> Result<AnyForest> {
    sample_with(family, rooting, &mut rng_from_seed(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn all_traces(family: CodecFamily) -> Vec<ChoiceTrace> {
        let mut out = vec![Vec::new()];
        for m in family.multipliers() {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..=m).map(move |c| {
                        let mut t = t.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|c| ChoiceTrace::new(family, c).unwrap())
            .collect()
    }

    #[test]
    fn tiny_plain_traces() {
        let two = ChoiceTrace::parse("plain n=2 :").unwrap();
        assert_eq!(decode(&two).unwrap().to_text(), "2 1 0 1");
        let three: BTreeSet<String> = all_traces(CodecFamily::Plain { n: 3 })
            .iter()
            .map(|t| decode(t).unwrap().to_text())
            .collect();
        assert_eq!(three.len(), 3);
        let one = ChoiceTrace::parse("plain n=1 :").unwrap();
        assert_eq!(decode(&one).unwrap().to_text(), "1 1 0");
    }

    #[test]
    fn path_has_one_trace() {
        let path = AnyForest::Rooted(RootedForest::from_parents(vec![0, 1, 2]).unwrap());
        let t = encode(&path, CodecFamily::Plain { n: 3 }).unwrap();
        assert_eq!(decode(&t).unwrap(), path);
        assert_eq!(t.choices.len(), 1);
    }

    #[test]
    fn round_trips() {
        for family in [
            CodecFamily::Plain { n: 4 },
            CodecFamily::Plane { n: 4 },
            CodecFamily::Colored { n: 4, colors: 3 },
            CodecFamily::Colored { n: 3, colors: 2 },
        ] {
            let traces = all_traces(family);
            let mut seen = BTreeSet::new();
            for t in &traces {
                let f = decode(t).unwrap();
                assert_eq!(&encode(&f, family).unwrap(), t);
                assert!(seen.insert(f.to_text()));
            }
        }
        assert_eq!(
            all_traces(CodecFamily::Colored { n: 3, colors: 2 }).len(),
            2
        );
    }

    #[test]
    fn trace_text() {
        let t = ChoiceTrace::parse("colored n=4 kc=3 : 2 5 1").unwrap();
        assert_eq!(t.to_string(), "colored n=4 kc=3 : 2 5 1");
        assert_eq!(t.choice_at(3), Some(5));
        assert_eq!(t.choice_at(2), Some(1));
        assert!(matches!(
            ChoiceTrace::parse("plain n=4 : 5 1"),
            Err(Error::ChoiceOutOfRange { .. })
        ));
        assert!(matches!(
            ChoiceTrace::parse("plain n=4 : 1"),
            Err(Error::InvalidForest(_))
        ));
        assert!(matches!(
            ChoiceTrace::parse("tree n=4 : 1 1"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            ChoiceTrace::parse("plain n=x : 1"),
            Err(Error::Parse { pos: 8, .. })
        ));
    }

    #[test]
    fn seeded_samples_repeat() {
        let fam = CodecFamily::Plane { n: 7 };
        let a = sample_uniform(fam, Rooting::Anywhere, 42).unwrap();
        assert_eq!(a, sample_uniform(fam, Rooting::Anywhere, 42).unwrap());
    }

    #[test]
    fn rejection_stays_in_range() {
        let mut rng = rng_from_seed(7);
        for m in [1, 2, 3, 7, 1 << 40] {
            for _ in 0..100 {
                assert!(uniform_below(&mut rng, m) < m);
            }
        }
    }
}
