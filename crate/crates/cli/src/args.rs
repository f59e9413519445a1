use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::io::{Format, InputKind};
use crate::{user, Outcome};
use rootforest::bijection::PartiteChain;
use rootforest::codec::{CodecFamily, Rooting};
use rootforest::enumerate::{ChainFamily, Family, FamilySpec, Roots};
use rootforest::{DegreeSequence, PartAssignment};

#[derive(Parser, Debug)]
#[command(
    name = "rootforest",
    version,
    about = "Exact counting, enumeration and bijections for labeled rooted forests"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a closed-form count.
    Count(CountArgs),
    /// List the members of a family by brute force.
    Enumerate(EnumerateArgs),
    /// Draw uniform trees through the choice-trace decoder.
    Sample(SampleArgs),
    /// Apply one forward or inverse step of a bijection.
    Bijection {
        #[arg(value_enum)]
        direction: Direction,
        #[command(flatten)]
        args: BijectionArgs,
    },
    /// Check a summation identity on a parameter grid.
    Identity(IdentityArgs),
    /// Compare formulas, oracles and bijections.
    Verify(VerifyArgs),
    /// Translate between forest formats and choice traces.
    Convert(ConvertArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    Cayley,
    RootedForests,
    Forests,
    Riordan,
    Multipartite,
    TripartiteBase,
    PlaneLabeled,
    Catalan,
    Narayana,
    Compositions,
    Kary,
    KaryShapes,
    DegseqPlane,
    DegseqRooted,
    PartitionShapes,
    SpecialColored,
    ColoredTrees,
    ColoredRootDegree,
}

impl Formula {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    pub fn takes_condition(self) -> bool {
        matches!(self, Self::RootedForests | Self::SpecialColored)
    }
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub formula: Formula,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Palette size of a colored family.
    #[arg(long)]
    pub kc: Option<usize>,
    #[arg(long)]
    pub arity: Option<usize>,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Child counts d_1,...,d_n.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<usize>>,
    /// Multiplicities n_1,...,n_m of vertices with 1..m children.
    #[arg(long, value_delimiter = ',')]
    pub counts: Option<Vec<usize>>,
    /// Only members with vertex n in tree 1.
    #[arg(long)]
    pub conditioned: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl CountArgs {
    pub fn params(&self) -> Params {
        Params::new(
            self.formula.name(),
            vec![
                ("n", self.n),
                ("k", self.k),
                ("m", self.m),
                ("p", self.p),
                ("r", self.r),
                ("s", self.s),
                ("t", self.t),
                ("kc", self.kc),
                ("arity", self.arity),
            ],
            vec![
                ("parts", self.parts.is_some()),
                ("degrees", self.degrees.is_some()),
                ("counts", self.counts.is_some()),
            ],
        )
    }
}

/// Tracks which flags a command consumed so that leftovers are rejected.
pub struct Params {
    what: String,
    scalars: Vec<(&'static str, Option<usize>)>,
    lists: Vec<(&'static str, bool)>,
    used: RefCell<BTreeSet<&'static str>>,
}

impl Params {
    pub fn new(
        what: String,
        scalars: Vec<(&'static str, Option<usize>)>,
        lists: Vec<(&'static str, bool)>,
    ) -> Self {
        Self {
            what,
            scalars,
            lists,
            used: RefCell::default(),
        }
    }

    pub fn get(&self, name: &'static str) -> Outcome<usize> {
        self.used.borrow_mut().insert(name);
        match self.scalars.iter().find(|(k, _)| *k == name) {
            Some((_, Some(v))) => Ok(*v),
            _ => user(format!("{} needs --{name}", self.what)),
        }
    }

    pub fn list<'b>(
        &self,
        name: &'static str,
        value: &'b Option<Vec<usize>>,
    ) -> Outcome<&'b [usize]> {
        self.used.borrow_mut().insert(name);
        match value {
            Some(v) => Ok(v),
            None => user(format!("{} needs --{name}", self.what)),
        }
    }

    /// Fails if a flag was given that the command never looked at.
    pub fn finish(&self) -> Outcome {
        let used = self.used.borrow();
        let given = self
            .scalars
            .iter()
            .filter(|(_, v)| v.is_some())
            .map(|(k, _)| *k)
            .chain(self.lists.iter().filter(|(_, v)| *v).map(|(k, _)| *k));
        for name in given {
            if !used.contains(name) {
                return user(format!("--{name} does not apply to {}", self.what));
            }
        }
        Ok(())
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumFamily {
    Plain,
    Partite,
    Plane,
    Leafplane,
    Kary,
    Colored,
    SpecialColored,
}

/// A family of forests together with root and condition constraints.
#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: EnumFamily,
    /// Number of labeled vertices.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Labeled internal vertices (leafplane, kary).
    #[arg(long)]
    pub internal: Option<usize>,
    /// Unlabeled leaves (leafplane).
    #[arg(long)]
    pub leaves: Option<usize>,
    #[arg(long)]
    pub arity: Option<usize>,
    #[arg(long)]
    pub kc: Option<usize>,
    /// Number of trees; the roots are 1..=K unless --any-roots is given.
    #[arg(long, default_value_t = 1, conflicts_with = "root_set")]
    pub roots: usize,
    /// Let any K vertices be the roots.
    #[arg(long, conflicts_with = "root_set")]
    pub any_roots: bool,
    /// Exactly these roots, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub root_set: Option<Vec<usize>>,
    /// Require the family's usual vertex to lie below root 1.
    #[arg(long, conflicts_with = "precedes")]
    pub conditioned: bool,
    /// `V,A`: require vertex V to lie in the subtree of A.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub precedes: Option<Vec<usize>>,
    /// Required child counts d_1,...,d_n.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<usize>>,
    /// Distinct unlabeled shapes instead of labeled forests.
    #[arg(long)]
    pub shapes: bool,
}

impl FamilyArgs {
    pub fn spec(&self) -> Outcome<FamilySpec> {
        let p = Params::new(
            format!("family {}", EnumFamily::name(self.family)),
            vec![
                ("n", self.n),
                ("internal", self.internal),
                ("leaves", self.leaves),
                ("arity", self.arity),
                ("kc", self.kc),
            ],
            vec![("parts", self.parts.is_some())],
        );
        let family = match self.family {
            EnumFamily::Plain => Family::Plain { n: p.get("n")? },
            EnumFamily::Plane => Family::Plane { n: p.get("n")? },
            EnumFamily::Partite => Family::Partite {
                parts: PartAssignment::new(p.list("parts", &self.parts)?.to_vec())?,
            },
            EnumFamily::Leafplane => Family::LeafPlane {
                internal: p.get("internal")?,
                leaves: p.get("leaves")?,
            },
            EnumFamily::Kary => Family::Kary {
                arity: p.get("arity")?,
                internal: p.get("internal")?,
            },
            EnumFamily::Colored => Family::Colored {
                n: p.get("n")?,
                colors: p.get("kc")?,
            },
            EnumFamily::SpecialColored => Family::SpecialColored {
                n: p.get("n")?,
                colors: p.get("kc")?,
            },
        };
        p.finish()?;
        let roots = match (&self.root_set, self.any_roots) {
            (Some(set), _) => Roots::Exactly(set.clone()),
            (None, true) => Roots::Any(self.roots),
            (None, false) => Roots::First(self.roots),
        };
        let mut spec = FamilySpec::new(family, roots);
        if self.conditioned {
            spec = spec.conditioned();
        }
        if let Some(pv) = &self.precedes {
            let [v, a] = pv[..] else {
                return user("--precedes takes two vertices `V,A`");
            };
            spec = spec.precedes(v, a);
        }
        if let Some(d) = &self.degrees {
            spec = spec.with_degrees(DegreeSequence::new(d.clone()));
        }
        if self.shapes {
            spec = spec.shapes();
        }
        Ok(spec)
    }
}

impl EnumFamily {
    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Stop after this many members.
    #[arg(long)]
    pub limit: Option<usize>,
    /// Print only the number of members.
    #[arg(long)]
    pub count_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleFamily {
    Plain,
    Plane,
    Colored,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RootingArg {
    /// Trees rooted at vertex 1.
    #[default]
    One,
    /// Trees rooted at a uniform vertex.
    Anywhere,
}

impl From<RootingArg> for Rooting {
    fn from(r: RootingArg) -> Self {
        match r {
            RootingArg::One => Rooting::One,
            RootingArg::Anywhere => Rooting::Anywhere,
        }
    }
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub family: SampleFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub kc: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = RootingArg::One)]
    pub rooting: RootingArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl SampleArgs {
    pub fn codec_family(&self) -> Outcome<CodecFamily> {
        let n = self.n;
        match (self.family, self.kc) {
            (SampleFamily::Plain, None) => Ok(CodecFamily::Plain { n }),
            (SampleFamily::Plane, None) => Ok(CodecFamily::Plane { n }),
            (SampleFamily::Colored, Some(colors)) => Ok(CodecFamily::Colored { n, colors }),
            (SampleFamily::Colored, None) => user("the colored family needs --kc"),
            (_, Some(_)) => user("--kc only applies to the colored family"),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepFamily {
    Plain,
    Partite,
    Plane,
    Leafplane,
    Colored,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChainArg {
    #[default]
    Primary,
    Secondary,
}

impl From<ChainArg> for PartiteChain {
    fn from(c: ChainArg) -> Self {
        match c {
            ChainArg::Primary => PartiteChain::Primary,
            ChainArg::Secondary => PartiteChain::Secondary,
        }
    }
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    #[arg(long, value_enum)]
    pub family: StepFamily,
    /// Root count of the larger side of the step.
    #[arg(long)]
    pub k: usize,
    /// Inverse choice in 1..=M.
    #[arg(long)]
    pub choice: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    pub chain: Option<ChainArg>,
    #[arg(long)]
    pub kc: Option<usize>,
    /// Forest text; read from standard input when absent.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl BijectionArgs {
    pub fn parts(&self) -> Outcome<PartAssignment> {
        match &self.parts {
            Some(p) => Ok(PartAssignment::new(p.clone())?),
            None => user("the partite family needs --parts"),
        }
    }

    pub fn chain(&self) -> PartiteChain {
        self.chain.unwrap_or_default().into()
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityName {
    Bipartite,
    Kary,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(value_enum)]
    pub name: IdentityName,
    /// Parameter ranges such as `r=2..8,s=1..8`.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub what: VerifyWhat,
}

#[derive(Subcommand, Debug)]
pub enum VerifyWhat {
    /// Enumerate both sides of each step of a root chain.
    Recurrence(RecurrenceArgs),
    /// Run every check up to a size bound.
    All(AllArgs),
}

#[derive(Args, Debug)]
pub struct RecurrenceArgs {
    #[arg(long, value_enum)]
    pub family: StepFamily,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    pub chain: Option<ChainArg>,
    #[arg(long)]
    pub internal: Option<usize>,
    /// Leaf count with a single root (leafplane).
    #[arg(long)]
    pub leaves: Option<usize>,
    #[arg(long)]
    pub kc: Option<usize>,
    /// Steps to check: `K` or `A..B` (default: all).
    #[arg(long, value_parser = parse_range)]
    pub k: Option<RangeInclusive<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl RecurrenceArgs {
    pub fn chain_family(&self) -> Outcome<ChainFamily> {
        let what = format!("recurrence for {:?}", self.family).to_lowercase();
        let p = Params::new(
            what,
            vec![
                ("n", self.n),
                ("internal", self.internal),
                ("leaves", self.leaves),
                ("kc", self.kc),
            ],
            vec![("parts", self.parts.is_some())],
        );
        let fam = match self.family {
            StepFamily::Plain => ChainFamily::Plain { n: p.get("n")? },
            StepFamily::Plane => ChainFamily::Plane { n: p.get("n")? },
            StepFamily::Colored => ChainFamily::Colored {
                n: p.get("n")?,
                colors: p.get("kc")?,
            },
            StepFamily::Leafplane => ChainFamily::LeafPlane {
                internal: p.get("internal")?,
                leaves: p.get("leaves")?,
            },
            StepFamily::Partite => ChainFamily::Partite {
                parts: PartAssignment::new(p.list("parts", &self.parts)?.to_vec())?,
                chain: self.chain.unwrap_or_default().into(),
            },
        };
        p.finish()?;
        if self.chain.is_some() && self.family != StepFamily::Partite {
            return user("--chain only applies to the partite family");
        }
        Ok(fam)
    }
}

#[derive(Args, Debug)]
pub struct AllArgs {
    /// Largest vertex count used by the brute-force checks. Each check also
    /// has a fixed cap where its oracle stops being cheap (8 for plain
    /// chains, between 4 and 7 for the rest), so large values are safe.
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// Input format.
    #[arg(long, value_enum)]
    pub from: InputKind,
    /// Palette size, needed to read colored forests.
    #[arg(long)]
    pub kc: Option<usize>,
    /// Print the choice trace of each (one-root) tree instead of the tree.
    #[arg(long)]
    pub trace: bool,
    /// Input text; read from standard input when absent.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// `K` or `A..B` (inclusive).
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
        None => num(s).map(|k| k..=k),
    }
}
