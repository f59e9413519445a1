use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::io::Write;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use crate::args::{
    parse_range, AllArgs, IdentityArgs, IdentityName, RecurrenceArgs, VerifyArgs, VerifyWhat,
};
use crate::io::Format;
use crate::{emit, user, Failure, Outcome};
use rootforest::bijection::{self as bij, ChoiceIndex, PartiteChain};
use rootforest::codec::{decode, encode, ChoiceTrace, CodecFamily};
use rootforest::counting as cnt;
use rootforest::enumerate::{
    count_by_enumeration, enumerate, enumerate_degree_filtered, kary_shapes, plane_shapes,
    verify_recurrence, ChainFamily, Family, FamilySpec, Roots,
};
use rootforest::{AnyForest, DegreePartition, DegreeSequence, PartAssignment};

fn to_json(v: &impl Serialize) -> Outcome<String> {
    serde_json::to_string(v).map_err(|e| Failure::User(e.to_string()))
}

/// Prints the closing verdict and turns a failure into exit status 2.
fn verdict(
    out: &mut impl Write,
    format: Format,
    failed: usize,
    total: usize,
    what: &str,
) -> Outcome {
    if format == Format::Text {
        if failed == 0 {
            emit(out, format!("PASS ({total} {what})"))?;
        } else {
            emit(out, format!("FAIL ({failed} of {total} {what})"))?;
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{failed} of {total} {what} failed"
        )))
    }
}

fn no_dot(format: Format) -> Outcome {
    if format == Format::Dot {
        return user("dot output applies to forests, not tables");
    }
    Ok(())
}

/// Parses `a=2..8,b=1..3` into named inclusive ranges.
fn parse_grid(text: &str, names: &[&str]) -> Outcome<BTreeMap<String, RangeInclusive<usize>>> {
    let mut grid = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((name, range)) = item.split_once('=') else {
            return user(format!("grid entry `{item}` is not `name=A..B`"));
        };
        if !names.contains(&name.trim()) {
            return user(format!(
                "unknown grid parameter `{name}` (expected {})",
                names.join(", ")
            ));
        }
        let range = parse_range(range).map_err(Failure::User)?;
        grid.insert(name.trim().to_string(), range);
    }
    if let Some(missing) = names.iter().find(|n| !grid.contains_key(**n)) {
        return user(format!("grid is missing `{missing}`"));
    }
    Ok(grid)
}

#[derive(Serialize)]
struct IdentityPoint {
    params: BTreeMap<String, usize>,
    #[serde(serialize_with = "decimal")]
    lhs: BigUint,
    #[serde(serialize_with = "decimal")]
    rhs: BigUint,
    pass: bool,
}

fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn identity_points(name: IdentityName, grid: Option<&str>) -> Outcome<Vec<IdentityPoint>> {
    let (names, default): (&[&str], &str) = match name {
        IdentityName::Bipartite => (&["r", "s"], "r=2..8,s=1..8"),
        IdentityName::Kary => (&["k", "p", "q", "n"], "k=1..3,p=1..3,q=1..3,n=2..10"),
    };
    let grid = parse_grid(grid.unwrap_or(default), names)?;
    let g = |k: &str| grid[k].clone();
    let mut points = vec![];
    match name {
        IdentityName::Bipartite => {
            for r in g("r") {
                for s in g("s") {
                    let (lhs, rhs) = cnt::identity_bipartite(r, s)?;
                    let params = BTreeMap::from([("r".into(), r), ("s".into(), s)]);
                    points.push(IdentityPoint {
                        params,
                        pass: lhs == rhs,
                        lhs,
                        rhs,
                    });
                }
            }
        }
        IdentityName::Kary => {
            for k in g("k") {
                for p in g("p") {
                    for q in g("q") {
                        // the sum is empty below n = p + q
                        for n in g("n").filter(|&n| n >= p + q) {
                            let (lhs, rhs) = cnt::identity_kary(k, p, q, n)?;
                            let params = BTreeMap::from([
                                ("k".into(), k),
                                ("p".into(), p),
                                ("q".into(), q),
                                ("n".into(), n),
                            ]);
                            points.push(IdentityPoint {
                                params,
                                pass: lhs == rhs,
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(points)
}

pub fn identity(a: &IdentityArgs, out: &mut impl Write) -> Outcome {
    no_dot(a.format)?;
    let points = identity_points(a.name, a.grid.as_deref())?;
    if points.is_empty() {
        return user("the grid contains no admissible points");
    }
    let failed = points.iter().filter(|p| !p.pass).count();
    match a.format {
        Format::Json => {
            let name = format!("{:?}", a.name).to_lowercase();
            emit(
                out,
                json!({"identity": name, "points": points, "pass": failed == 0}),
            )?;
        }
        _ => {
            let keys: Vec<&String> = points[0].params.keys().collect();
            emit(
                out,
                format!(
                    "{} lhs rhs result",
                    keys.iter()
                        .map(|k| k.as_str())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            )?;
            for p in &points {
                let vals: Vec<String> = p.params.values().map(ToString::to_string).collect();
                let status = if p.pass { "PASS" } else { "FAIL" };
                emit(
                    out,
                    format!("{} {} {} {status}", vals.join(" "), p.lhs, p.rhs),
                )?;
            }
        }
    }
    verdict(out, a.format, failed, points.len(), "points")
}

pub fn verify(a: &VerifyArgs, out: &mut impl Write) -> Outcome {
    match &a.what {
        VerifyWhat::Recurrence(r) => recurrence(r, out),
        VerifyWhat::All(all) => verify_all(all, out),
    }
}

fn recurrence(a: &RecurrenceArgs, out: &mut impl Write) -> Outcome {
    no_dot(a.format)?;
    let family = a.chain_family()?;
    if family.steps().is_empty() {
        return user("the family has no steps at this size");
    }
    let rows = verify_recurrence(&family, a.k.clone())?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    match a.format {
        Format::Json => emit(
            out,
            json!({"family": family, "rows": rows, "pass": failed == 0}),
        )?,
        _ => {
            emit(out, "k lhs multiplier rhs result")?;
            for r in &rows {
                let status = if r.pass { "PASS" } else { "FAIL" };
                emit(
                    out,
                    format!("{} {} {} {} {status}", r.k, r.lhs, r.multiplier, r.rhs),
                )?;
            }
        }
    }
    verdict(out, a.format, failed, rows.len(), "steps")
}

// ---- the full suite ----

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

type Probe = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: rootforest::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn members(spec: &FamilySpec) -> Result<Vec<AnyForest>, String> {
    Ok(lib(enumerate(spec))?.collect())
}

fn count(spec: FamilySpec) -> Result<BigUint, String> {
    lib(count_by_enumeration(&spec))
}

fn eq<T: PartialEq + Display>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || {
        format!("{what}: enumerated {got}, formula {want}")
    })
}

/// Both directions of one step over the enumerated sides.
fn step_bijection<F: Clone + Eq + Hash + Debug>(
    lhs: &[F],
    rhs: &[F],
    m: usize,
    forward: impl Fn(&F) -> rootforest::Result<(F, ChoiceIndex)>,
    inverse: impl Fn(&F, ChoiceIndex) -> rootforest::Result<F>,
) -> Result<usize, String> {
    ensure(lhs.len() == m * rhs.len(), || {
        format!("{} != {m} * {}", lhs.len(), rhs.len())
    })?;
    let lset: HashSet<&F> = lhs.iter().collect();
    let rset: HashSet<&F> = rhs.iter().collect();
    for f in lhs {
        let (g, c) = lib(forward(f))?;
        ensure(rset.contains(&g), || {
            format!("forward image of {f:?} leaves the family")
        })?;
        ensure(lib(inverse(&g, c))? == *f, || {
            format!("inverse does not undo forward on {f:?}")
        })?;
    }
    for g in rhs {
        for c in (1..=m).map(ChoiceIndex) {
            let f = lib(inverse(g, c))?;
            ensure(lset.contains(&f), || {
                format!("inverse({g:?}, {c}) leaves the family")
            })?;
            ensure(lib(forward(&f))? == (g.clone(), c), || {
                format!("forward does not undo inverse({g:?}, {c})")
            })?;
        }
    }
    Ok(lhs.len() + m * rhs.len())
}

/// Enumerates every step of `family`, checks the bijection both ways, and
/// compares each `k`-root side with `formula(k)` when given.
fn chain_check(
    family: &ChainFamily,
    formula: Option<&dyn Fn(usize) -> rootforest::Result<BigUint>>,
) -> Probe {
    let mut sides: HashMap<usize, Vec<AnyForest>> = HashMap::new();
    let mut side = |k: usize| -> Result<Vec<AnyForest>, String> {
        if let std::collections::hash_map::Entry::Vacant(e) = sides.entry(k) {
            e.insert(members(&family.spec(k))?);
        }
        Ok(sides[&k].clone())
    };
    let mut checks = 0;
    for k in family.steps() {
        let (l, r) = (side(k - 1)?, side(k)?);
        if let Some(f) = formula {
            eq(&format!("k={k}"), BigUint::from(r.len()), lib(f(k))?)?;
        }
        let m = family.multiplier(k);
        checks += match family {
            ChainFamily::Plain { .. } => {
                let (l, r) = (rooted(l), rooted(r));
                step_bijection(
                    &l,
                    &r,
                    m,
                    |f| bij::plain_forward(f, k),
                    |g, c| bij::plain_inverse(g, k, c),
                )?
            }
            ChainFamily::Partite { parts, chain } => {
                let (l, r) = (rooted(l), rooted(r));
                step_bijection(
                    &l,
                    &r,
                    m,
                    |f| bij::partite_forward(f, k, parts, *chain),
                    |g, c| bij::partite_inverse(g, k, parts, *chain, c),
                )?
            }
            ChainFamily::Plane { .. } => {
                let (l, r) = (plane(l), plane(r));
                step_bijection(
                    &l,
                    &r,
                    m,
                    |f| bij::plane_forward(f, k),
                    |g, c| bij::plane_inverse(g, k, c),
                )?
            }
            ChainFamily::LeafPlane { .. } => {
                let (l, r) = (plane(l), plane(r));
                step_bijection(
                    &l,
                    &r,
                    m,
                    |f| bij::leafplane_forward(f, k),
                    |g, c| bij::leafplane_inverse(g, k, c),
                )?
            }
            ChainFamily::Colored { .. } => {
                let (l, r) = (colored(l), colored(r));
                step_bijection(
                    &l,
                    &r,
                    m,
                    |f| bij::colored_forward(f, k),
                    |g, c| bij::colored_inverse(g, k, c),
                )?
            }
        };
    }
    Ok(format!(
        "{} steps, {checks} round trips",
        family.steps().count()
    ))
}

fn rooted(v: Vec<AnyForest>) -> Vec<rootforest::RootedForest> {
    v.into_iter().filter_map(AnyForest::into_rooted).collect()
}

fn plane(v: Vec<AnyForest>) -> Vec<rootforest::PlaneForest> {
    v.into_iter().filter_map(AnyForest::into_plane).collect()
}

fn colored(v: Vec<AnyForest>) -> Vec<rootforest::EdgeColoredForest> {
    v.into_iter().filter_map(AnyForest::into_colored).collect()
}

const PARTS: [&[usize]; 8] = [
    &[2, 2],
    &[2, 3],
    &[3, 3],
    &[3, 4],
    &[2, 1, 1],
    &[1, 2, 2],
    &[2, 2, 2],
    &[3, 2, 2],
];

fn codec_check(family: CodecFamily, members: &[AnyForest]) -> Probe {
    let ms = family.multipliers();
    let mut cur = vec![1; ms.len()];
    let mut image = HashSet::new();
    loop {
        let t = lib(ChoiceTrace::new(family, cur.clone()))?;
        let f = lib(decode(&t))?;
        ensure(lib(encode(&f, family))? == t, || {
            format!("encode does not invert decode at {t}")
        })?;
        ensure(image.insert(f), || {
            format!("{t} decodes to a repeated tree")
        })?;
        let Some(i) = (0..cur.len()).rev().find(|&i| cur[i] < ms[i]) else {
            break;
        };
        cur[i] += 1;
        cur[i + 1..].iter_mut().for_each(|c| *c = 1);
    }
    let want: HashSet<AnyForest> = members.iter().cloned().collect();
    ensure(image == want, || {
        format!("image has {} trees, family has {}", image.len(), want.len())
    })?;
    Ok(format!("{} traces", image.len()))
}

fn suite(max_n: usize) -> Vec<(String, Box<dyn Fn() -> Probe>)> {
    let mut s: Vec<(String, Box<dyn Fn() -> Probe>)> = vec![];
    let mut add = |name: String, f: Box<dyn Fn() -> Probe>| s.push((name, f));

    for n in 3..=max_n.min(8) {
        add(
            format!("recurrence plain n={n}"),
            Box::new(move || {
                chain_check(
                    &ChainFamily::Plain { n },
                    Some(&|k| cnt::rooted_forest_count(n, k, true)),
                )
            }),
        );
    }
    for n in 3..=max_n.min(7) {
        add(
            format!("recurrence plane n={n}"),
            Box::new(move || chain_check(&ChainFamily::Plane { n }, None)),
        );
    }
    for internal in 3..=max_n.min(6) {
        for leaves in 1..=2 {
            add(
                format!("recurrence leafplane internal={internal} leaves={leaves}"),
                Box::new(move || chain_check(&ChainFamily::LeafPlane { internal, leaves }, None)),
            );
        }
    }
    for n in 3..=max_n.min(6) {
        for colors in 2..=3 {
            add(
                format!("recurrence colored n={n} kc={colors}"),
                Box::new(move || {
                    chain_check(
                        &ChainFamily::Colored { n, colors },
                        Some(&|k| cnt::special_colored_conditioned(n, colors, k)),
                    )
                }),
            );
        }
    }
    for sizes in PARTS
        .iter()
        .filter(|p| p.iter().sum::<usize>() <= max_n.min(7))
    {
        for chain in [PartiteChain::Primary, PartiteChain::Secondary] {
            let parts = PartAssignment::new(sizes.to_vec()).expect("fixed part sizes");
            if chain.step_range(&parts).is_empty() {
                continue;
            }
            add(
                format!("recurrence partite parts={sizes:?} chain={chain:?}").to_lowercase(),
                Box::new(move || {
                    chain_check(
                        &ChainFamily::Partite {
                            parts: parts.clone(),
                            chain,
                        },
                        None,
                    )
                }),
            );
        }
    }

    add(
        format!("formula trees and forests n<={}", max_n.min(7)),
        Box::new(move || {
            for n in 1..=max_n.min(7) {
                let plain = |roots| FamilySpec::new(Family::Plain { n }, roots);
                eq(
                    &format!("cayley({n})"),
                    count(plain(Roots::First(1)))?,
                    lib(cnt::cayley(n))?,
                )?;
                for k in 1..n {
                    let first = plain(Roots::First(k));
                    eq(
                        &format!("({n},{k})"),
                        count(first.clone())?,
                        lib(cnt::rooted_forest_count(n, k, false))?,
                    )?;
                    let cond = lib(cnt::rooted_forest_count(n, k, true))?;
                    eq(
                        &format!("conditioned ({n},{k})"),
                        count(first.conditioned())?,
                        cond,
                    )?;
                    eq(
                        &format!("any roots ({n},{k})"),
                        count(plain(Roots::Any(k)))?,
                        lib(cnt::forests_k_trees(n, k))?,
                    )?;
                }
            }
            Ok(String::new())
        }),
    );
    add(
        "formula multipartite spanning trees".into(),
        Box::new(move || {
            let mut done = 0;
            for sizes in [
                &[1, 1][..],
                &[1, 3],
                &[2, 2],
                &[2, 3],
                &[1, 1, 1],
                &[1, 2, 2],
                &[2, 2, 2],
                &[1, 1, 1, 1],
            ] {
                if sizes.iter().sum::<usize>() > max_n.min(6) {
                    continue;
                }
                let parts = lib(PartAssignment::new(sizes.to_vec()))?;
                let got = count(FamilySpec::new(Family::Partite { parts }, Roots::First(1)))?;
                eq(
                    &format!("{sizes:?}"),
                    got,
                    lib(cnt::multipartite_spanning_trees(sizes))?,
                )?;
                done += 1;
            }
            Ok(format!("{done} part lists"))
        }),
    );
    add(
        format!("formula plane trees n<={}", max_n.min(6)),
        Box::new(move || {
            for v in 1..=max_n.min(6) {
                let labeled = count(FamilySpec::new(Family::Plane { n: v }, Roots::Any(1)))?;
                eq(
                    &format!("labeled({v})"),
                    labeled,
                    lib(cnt::plane_labeled(v))?,
                )?;
                let shapes = lib(plane_shapes(v))?;
                eq(
                    &format!("shapes({v})"),
                    BigUint::from(shapes.len()),
                    lib(cnt::catalan(v - 1))?,
                )?;
                let mut by_leaves: BTreeMap<usize, usize> = BTreeMap::new();
                for s in &shapes {
                    *by_leaves.entry(s.leaf_count()).or_default() += 1;
                }
                for (p, c) in by_leaves.into_iter().filter(|_| v >= 2) {
                    eq(
                        &format!("narayana({},{p})", v - 1),
                        BigUint::from(c),
                        lib(cnt::narayana(v - 1, p))?,
                    )?;
                }
            }
            Ok(String::new())
        }),
    );
    add(
        format!("formula k-ary forests internal<={}", max_n.min(4)),
        Box::new(move || {
            for arity in 1..=3 {
                for internal in 1..=max_n.min(4) {
                    let shapes = BigUint::from(lib(kary_shapes(arity, internal))?.len());
                    eq(
                        &format!("shapes({arity},{internal})"),
                        shapes,
                        lib(cnt::kary_unlabeled(arity, internal))?,
                    )?;
                    for r in 1..=internal {
                        let got = count(FamilySpec::new(
                            Family::Kary { arity, internal },
                            Roots::First(r),
                        ))?;
                        let want = lib(cnt::kary_forest_count(arity, internal, r))?;
                        eq(&format!("forests({arity},{internal},{r})"), got, want)?;
                    }
                }
            }
            Ok(String::new())
        }),
    );
    add(
        format!("formula degree sequences n<={}", max_n.min(6)),
        Box::new(move || {
            let mut seqs = 0;
            for n in 1..=max_n.min(6) {
                for d in DegreeSequence::all_tree_sequences(n) {
                    let spec = |f| FamilySpec::new(f, Roots::Any(1));
                    let rooted = BigUint::from(
                        lib(enumerate_degree_filtered(
                            &spec(Family::Plain { n }),
                            d.clone(),
                        ))?
                        .count(),
                    );
                    eq(
                        &format!("rooted {d}"),
                        rooted,
                        lib(cnt::degseq_rooted_count(&d))?,
                    )?;
                    let plane = BigUint::from(
                        lib(enumerate_degree_filtered(
                            &spec(Family::Plane { n }),
                            d.clone(),
                        ))?
                        .count(),
                    );
                    eq(
                        &format!("plane {d}"),
                        plane,
                        lib(cnt::degseq_plane_count(&d))?,
                    )?;
                    seqs += 1;
                }
                let mut by_partition: HashMap<DegreePartition, usize> = HashMap::new();
                for s in lib(plane_shapes(n))? {
                    *by_partition
                        .entry(DegreePartition::of_degrees(&s.degrees_preorder()))
                        .or_default() += 1;
                }
                for part in DegreePartition::all(n) {
                    let got = BigUint::from(by_partition.get(&part).copied().unwrap_or(0));
                    eq(
                        &format!("shapes {:?}", part.counts()),
                        got,
                        lib(cnt::erdelyi_etherington(&part))?,
                    )?;
                }
            }
            Ok(format!("{seqs} sequences"))
        }),
    );
    add(
        format!("formula colored trees n<={}", max_n.min(5)),
        Box::new(move || {
            for n in 2..=max_n.min(5) {
                for kc in 1..=3 {
                    let trees = colored(members(&FamilySpec::new(
                        Family::Colored { n, colors: kc },
                        Roots::First(1),
                    ))?);
                    eq(
                        &format!("trees({n},{kc})"),
                        BigUint::from(trees.len()),
                        lib(cnt::colored_tree_count(n, kc))?,
                    )?;
                    let mut by_degree = vec![0usize; n];
                    for t in &trees {
                        by_degree[lib(t.base().degree(1))?] += 1;
                    }
                    for (r, &got) in by_degree.iter().enumerate().skip(1) {
                        let want = lib(cnt::colored_root_degree_count(n, kc, r))?;
                        eq(
                            &format!("root degree ({n},{kc},{r})"),
                            BigUint::from(got),
                            want,
                        )?;
                        let spec = FamilySpec::new(
                            Family::SpecialColored { n, colors: kc },
                            Roots::First(r),
                        );
                        eq(
                            &format!("special ({n},{kc},{r})"),
                            count(spec)?,
                            lib(cnt::special_colored_count(n, kc, r))?,
                        )?;
                    }
                }
            }
            Ok(String::new())
        }),
    );

    for name in [IdentityName::Bipartite, IdentityName::Kary] {
        add(
            format!("identity {name:?}").to_lowercase(),
            Box::new(move || {
                let points = identity_points(name, None).map_err(|e| format!("{e:?}"))?;
                match points.iter().find(|p| !p.pass) {
                    Some(p) => Err(format!("{:?}: {} != {}", p.params, p.lhs, p.rhs)),
                    None => Ok(format!("{} points", points.len())),
                }
            }),
        );
    }
    add(
        "identity riordan n<=40".into(),
        Box::new(|| {
            let table = cnt::RiordanTable::new(40);
            for n in 2..=40 {
                for k in 1..n {
                    let closed = lib(cnt::rooted_forest_count(n, k, false))?;
                    ensure(lib(table.get(n, k))? == &closed, || format!("T({n},{k})"))?;
                }
            }
            Ok(String::new())
        }),
    );

    for n in 1..=max_n.min(5) {
        add(
            format!("codec plain n={n}"),
            Box::new(move || {
                codec_check(
                    CodecFamily::Plain { n },
                    &members(&FamilySpec::new(Family::Plain { n }, Roots::First(1)))?,
                )
            }),
        );
        add(
            format!("codec plane n={n}"),
            Box::new(move || {
                codec_check(
                    CodecFamily::Plane { n },
                    &members(&FamilySpec::new(Family::Plane { n }, Roots::First(1)))?,
                )
            }),
        );
        for colors in (2..=3).filter(|_| n >= 2) {
            add(
                format!("codec colored n={n} kc={colors}"),
                Box::new(move || {
                    let spec =
                        FamilySpec::new(Family::SpecialColored { n, colors }, Roots::First(1));
                    codec_check(CodecFamily::Colored { n, colors }, &members(&spec)?)
                }),
            );
        }
    }
    s
}

fn verify_all(a: &AllArgs, out: &mut impl Write) -> Outcome {
    no_dot(a.format)?;
    if a.max_n < 3 {
        return user("--max-n must be at least 3");
    }
    let mut checks = vec![];
    for (name, probe) in suite(a.max_n) {
        let (pass, detail) = match probe() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if a.format == Format::Text {
            let status = if pass { "PASS" } else { "FAIL" };
            let line = if detail.is_empty() {
                format!("{status} {name}")
            } else {
                format!("{status} {name}: {detail}")
            };
            emit(out, line)?;
        }
        checks.push(Check { name, pass, detail });
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    if a.format == Format::Json {
        emit(
            out,
            to_json(&json!({"max_n": a.max_n, "checks": checks, "pass": failed == 0}))?,
        )?;
    }
    verdict(out, a.format, failed, checks.len(), "checks")
}
