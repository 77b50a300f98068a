use anyhow::{bail, Context, Result};
use serde::Serialize;

use covercensus::census::{
    default_bounded_queries, enum_actions, standard_model, verify_main_theorem, AdditiveSubgroup, CensusQuery, GroupKind,
};
use covercensus::elliptic::{verify_genus1_finiteness, verify_pointless_dichotomy, DichotomyReport, ECPoint, ECurve, Genus1Report};
use covercensus::gfq::gaussian_binomial;
use covercensus::groups::{
    close_generators, conjugate_brute_force, default_cap, is_conjugate, std_gamma_semidirect, Fingerprint,
    SubgroupPGL2, BRUTE_FORCE_CAP,
};
use covercensus::moebius::{poly_map_ramification, verify_p1fp, RamPointRecord};
use covercensus::report::{CensusRecord, SubgroupRecord, SUBGROUP_SCHEMA};
use covercensus::{Embedding, Field, Moebius, Poly, PP1};

use crate::output::Rendered;
use crate::Command;

pub fn run(command: Command, parallel: bool) -> Result<Rendered> {
    match command {
        Command::FieldInfo { field } => field_info(&field),
        Command::FixedPoints { field, map, ext } => fixed_points(&field, &map, ext),
        Command::BuildGroup { field, group, gamma, ext } => build_group(&field, &group, gamma.as_deref(), ext),
        Command::Locus { field, gens, ext } => locus(&field, &gens, ext),
        Command::Conjugate {
            field,
            a,
            b,
            ext,
            brute_force,
        } => conjugate(&field, &a, &b, ext, brute_force),
        Command::Census {
            field,
            group,
            locus,
            ext,
        } => census(&field, &group, &locus, ext, parallel),
        Command::AdditiveSubgroups { field, rank } => additive(&field, rank),
        Command::VerifyP1fp { field } => p1fp(&field),
        Command::VerifyMain { p, degrees, no_bounded } => main_theorem(p, &degrees, no_bounded, parallel),
        Command::VerifyGenus1 {
            curve,
            points,
            level,
            max_level,
        } => genus1(&curve, &points, level, max_level),
        Command::Ramification { field, poly, ext } => ramification(&field, &poly, ext),
    }
}

fn parse_field(s: &str) -> Result<Field> {
    Field::parse(s).with_context(|| format!("--field {s:?}"))
}

fn parse_maps(field: &Field, flag: &str, maps: &[String]) -> Result<Vec<Moebius>> {
    maps.iter()
        .map(|m| Moebius::parse(field, m).with_context(|| format!("{flag} {m:?}")))
        .collect()
}

fn close(field: &Field, gens: &[Moebius]) -> Result<SubgroupPGL2> {
    Ok(close_generators(gens, default_cap(field))?)
}

/// `n:count` pairs, space separated.
fn pairs(counts: &[(u32, u64)]) -> String {
    counts.iter().map(|(n, c)| format!("{n}:{c}")).collect::<Vec<_>>().join(" ")
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct FieldInfo {
    schema: &'static str,
    field: String,
    characteristic: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: String,
    primitive_element: String,
    subfield_degrees: Vec<u32>,
}

fn field_info(spec: &str) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let info = FieldInfo {
        schema: "covercensus.field/1",
        field: f.to_string(),
        characteristic: f.characteristic(),
        degree: f.degree(),
        order: f.order(),
        modulus: f.modulus().to_vec(),
        generator: f.generator().to_string(),
        primitive_element: f.primitive_element().to_string(),
        subfield_degrees: (1..=f.degree()).filter(|d| f.degree() % d == 0).collect(),
    };
    Ok(Rendered::new(&info)?
        .summary("field", &info.field)
        .summary("characteristic", info.characteristic)
        .summary("degree", info.degree)
        .summary("order", info.order)
        .summary("modulus", join(&info.modulus))
        .summary("generator", &info.generator)
        .summary("primitive element", &info.primitive_element)
        .summary("subfield degrees", join(&info.subfield_degrees)))
}

#[derive(Serialize)]
struct FixedPointsReport {
    schema: &'static str,
    field: String,
    map: String,
    order: u64,
    level: u32,
    fixed_points: Vec<String>,
}

fn fixed_points(spec: &str, map: &str, ext: u32) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let m = Moebius::parse(&f, map).with_context(|| format!("--map {map:?}"))?;
    let pts = m.fixed_points(ext).context("--map")?;
    let rep = FixedPointsReport {
        schema: "covercensus.fixed/1",
        field: f.to_string(),
        map: m.to_string(),
        order: m.order(),
        level: ext,
        fixed_points: pts.iter().map(|x| x.to_string()).collect(),
    };
    let rows = rep.fixed_points.iter().map(|x| vec![x.clone()]).collect();
    Ok(Rendered::new(&rep)?
        .summary("map", &rep.map)
        .summary("order", rep.order)
        .summary("level", rep.level)
        .table(&["fixed_point"], rows))
}

#[derive(Serialize)]
struct GroupReport {
    schema: &'static str,
    subgroup: SubgroupRecord,
    fingerprint: Fingerprint,
}

fn group_report(h: &SubgroupPGL2, ext: u32) -> Result<Rendered> {
    let e = Embedding::tower(h.field(), ext).context("--ext")?;
    let locus = h.stabilized_locus_in(&e)?;
    let rep = GroupReport {
        schema: SUBGROUP_SCHEMA,
        subgroup: SubgroupRecord::new(h, &locus, e.target()),
        fingerprint: h.fingerprint(),
    };
    let rows = rep
        .fingerprint
        .element_orders
        .iter()
        .map(|(o, c)| vec![o.to_string(), c.to_string()])
        .collect();
    Ok(Rendered::new(&rep)?
        .summary("tag", &rep.subgroup.tag)
        .summary("order", rep.subgroup.order)
        .summary("generators", rep.subgroup.generators.join(" "))
        .summary("abelian", rep.fingerprint.abelian)
        .summary("p-regular", rep.fingerprint.p_regular)
        .summary("locus field", &rep.subgroup.locus_field)
        .summary("locus size", locus.len())
        .summary("locus", rep.subgroup.locus.join(" "))
        .table(&["element_order", "count"], rows))
}

fn build_group(spec: &str, group: &str, gamma: Option<&str>, ext: u32) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let kind: GroupKind = group.parse().with_context(|| format!("--group {group:?}"))?;
    let gamma = |m: u32| -> Result<AdditiveSubgroup> {
        let Some(text) = gamma else {
            bail!("--gamma is required for {kind}");
        };
        let g = AdditiveSubgroup::parse_basis(&f, text).with_context(|| format!("--gamma {text:?}"))?;
        if g.rank() != m {
            bail!("--gamma {text:?} spans a subgroup of rank {}, {kind} needs rank {m}", g.rank());
        }
        Ok(g)
    };
    let h = match kind {
        GroupKind::ElemAbelian(m) => Ok(gamma(m)?.to_unipotent()),
        GroupKind::Semidirect { m, n } => std_gamma_semidirect(&gamma(m)?, n),
        _ => standard_model(&kind, &f),
    }
    .with_context(|| format!("--group {group:?} over {f}"))?;
    group_report(&h, ext)
}

fn locus(spec: &str, gens: &[String], ext: u32) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let gens = parse_maps(&f, "--gen", gens)?;
    let h = close(&f, &gens).context("--gen")?;
    group_report(&h, ext)
}

#[derive(Serialize)]
struct ConjugacyReport {
    schema: &'static str,
    field: String,
    level: u32,
    a: Vec<String>,
    b: Vec<String>,
    conjugate: bool,
    witness: Option<String>,
    brute_force: Option<bool>,
    agree: Option<bool>,
}

fn conjugate(spec: &str, a: &[String], b: &[String], ext: u32, brute: bool) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let ha = close(&f, &parse_maps(&f, "--a", a)?).context("--a")?;
    let hb = close(&f, &parse_maps(&f, "--b", b)?).context("--b")?;
    let w = is_conjugate(&ha, &hb, ext).context("--ext")?;
    let bf = if brute {
        let e = Embedding::tower(&f, ext)?;
        Some(conjugate_brute_force(&ha.lift(&e)?, &hb.lift(&e)?, BRUTE_FORCE_CAP)?.is_some())
    } else {
        None
    };
    let agree = bf.map(|b| b == w.is_some());
    let rep = ConjugacyReport {
        schema: "covercensus.conjugacy/1",
        field: f.to_string(),
        level: ext,
        a: ha.generators().iter().map(|g| g.to_string()).collect(),
        b: hb.generators().iter().map(|g| g.to_string()).collect(),
        conjugate: w.is_some(),
        witness: w.as_ref().map(|g| g.to_string()),
        brute_force: bf,
        agree,
    };
    let mut r = Rendered::new(&rep)?
        .summary("conjugate", rep.conjugate)
        .summary("witness", rep.witness.clone().unwrap_or_else(|| "-".into()));
    if let Some(b) = bf {
        r = r.summary("brute force", b);
    }
    let ok = agree != Some(false);
    let mismatch = if ok {
        vec![]
    } else {
        vec![format!("criterion says {}, brute force says {}", rep.conjugate, !rep.conjugate)]
    };
    Ok(r.verdict(ok, mismatch))
}

fn census(spec: &str, group: &str, locus: &str, ext: u32, parallel: bool) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let kind: GroupKind = group.parse().with_context(|| format!("--group {group:?}"))?;
    let work = f.extension(ext).context("--ext")?;
    let pts = PP1::parse_list(&work, locus).with_context(|| format!("--locus {locus:?} in {work}"))?;
    let query = CensusQuery::new(&f, ext, kind, pts).context("--locus")?;
    let report = enum_actions(&query, parallel)?;
    let rec = CensusRecord::new(&report)?;
    let rows = rec
        .csv_rows()
        .into_iter()
        .map(|r| vec![r.tag, r.order.to_string(), r.generators, r.locus])
        .collect();
    let verdict = match &rec.verdict {
        covercensus::report::VerdictRecord::Finite { bound } => format!("finite, at most {bound}"),
        covercensus::report::VerdictRecord::GrowsWithField { counts } => {
            let c: Vec<String> = counts.iter().map(|(d, c)| format!("{c} at degree {d}")).collect();
            format!("grows with the field: {}", c.join(", "))
        }
    };
    let mut r = Rendered::new(&rec)?
        .summary("working field", &rec.working_field)
        .summary("group", &rec.group)
        .summary("locus", rec.locus.join(" "))
        .summary("count", rec.count)
        .summary("verdict", verdict);
    for n in &rec.notes {
        r = r.summary("note", n);
    }
    Ok(r.table(&["tag", "order", "generators", "locus"], rows))
}

#[derive(Serialize)]
struct AdditiveReport {
    schema: &'static str,
    field: String,
    rank: u32,
    count: u64,
    gaussian_binomial: String,
    bases: Vec<String>,
}

fn additive(spec: &str, rank: u32) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let all = AdditiveSubgroup::enumerate(&f, rank).context("--rank")?;
    let rep = AdditiveReport {
        schema: "covercensus.additive/1",
        field: f.to_string(),
        rank,
        count: all.len() as u64,
        gaussian_binomial: gaussian_binomial(f.degree(), rank, f.characteristic() as u64).to_string(),
        bases: all.iter().map(|g| g.basis_string()).collect(),
    };
    let rows = rep.bases.iter().map(|b| vec![b.clone()]).collect();
    Ok(Rendered::new(&rep)?
        .summary("field", &rep.field)
        .summary("rank", rank)
        .summary("count", rep.count)
        .summary("gaussian binomial", &rep.gaussian_binomial)
        .table(&["basis"], rows))
}

fn p1fp(spec: &str) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let rep = verify_p1fp(&f)?;
    Ok(Rendered::new(&rep)?
        .summary("field", &rep.field)
        .summary("elements checked", rep.elements_checked)
        .summary("one fixed point", rep.one_fixed_point)
        .summary("two fixed points", rep.two_fixed_points)
        .summary("order p", rep.order_p)
        .summary("result", &rep.summary)
        .verdict(rep.ok, rep.exceptions.clone()))
}

fn main_theorem(p: u32, degrees: &[u32], no_bounded: bool, parallel: bool) -> Result<Rendered> {
    let bounded = if no_bounded {
        vec![]
    } else {
        default_bounded_queries(p).context("--p")?
    };
    let rep = verify_main_theorem(p, degrees, &bounded, parallel).context("--p/--degrees")?;
    let rows = rep
        .levels
        .iter()
        .map(|l| {
            vec![
                l.n.to_string(),
                l.m.to_string(),
                l.census.to_string(),
                l.additive.to_string(),
                l.gaussian.to_string(),
                l.oracle.map_or("-".into(), |o| o.to_string()),
                l.agree.to_string(),
            ]
        })
        .collect();
    let mut mismatches = Vec::new();
    for l in rep.levels.iter().filter(|l| !l.agree) {
        mismatches.push(format!(
            "n={} m={}: census {} additive {} gaussian {} oracle {:?}",
            l.n, l.m, l.census, l.additive, l.gaussian, l.oracle
        ));
    }
    for g in rep.growth.iter().filter(|g| !g.strictly_increasing) {
        mismatches.push(format!("m={}: counts {} do not increase", g.m, pairs(&g.counts)));
    }
    for b in rep.bounded.iter().filter(|b| !b.ok) {
        mismatches.push(format!("{} on {}: counts {} bound {:?}", b.group, b.locus.join(" "), pairs(&b.counts), b.bound));
    }
    for x in rep.extension.iter().filter(|x| x.image != x.source_count) {
        mismatches.push(format!("m={} from {} to {}: {} of {} lift", x.m, x.from, x.to, x.image, x.source_count));
    }
    let mut r = Rendered::new(&rep)?.summary("p", p).summary("degrees", join(&rep.degrees));
    for b in &rep.bounded {
        r = r.summary(
            "bounded",
            format!(
                "{} on {}: counts {}, bound {}",
                b.group,
                b.locus.join(" "),
                pairs(&b.counts),
                b.bound.map_or("-".into(), |x| x.to_string())
            ),
        );
    }
    for s in &rep.skipped {
        r = r.summary("skipped", s);
    }
    Ok(r.summary("ok", rep.ok)
        .table(&["n", "m", "census", "additive", "gaussian", "oracle", "agree"], rows)
        .verdict(rep.ok, mismatches))
}

#[derive(Serialize)]
struct Genus1Suite {
    schema: &'static str,
    curve: String,
    dichotomy: DichotomyReport,
    finiteness: Vec<Genus1Report>,
    ok: bool,
}

fn genus1(spec: &str, points: &[String], level: u32, max_level: u32) -> Result<Rendered> {
    let curve = ECurve::parse(spec).with_context(|| format!("--curve {spec:?}"))?;
    if max_level == 0 {
        bail!("--max-level must be at least 1");
    }
    let big = curve.at(level).context("--level")?;
    let sets: Vec<Vec<ECPoint>> = if points.is_empty() {
        curve.points().into_iter().map(|q| vec![q]).collect()
    } else {
        let s = points
            .iter()
            .map(|q| {
                let pt = ECPoint::parse(curve.field(), q)
                    .or_else(|_| ECPoint::parse(big.field(), q))
                    .with_context(|| format!("--point {q:?}"))?;
                if !curve.contains(&pt) && !big.contains(&pt) {
                    bail!("--point {q:?} is not on the curve");
                }
                Ok(pt)
            })
            .collect::<Result<Vec<_>>>()?;
        vec![s]
    };
    let dichotomy = verify_pointless_dichotomy(&curve, max_level).context("--max-level")?;
    let finiteness = sets
        .iter()
        .map(|s| verify_genus1_finiteness(&curve, s, level).context("--point"))
        .collect::<Result<Vec<_>>>()?;
    let ok = dichotomy.exceptions.is_empty()
        && dichotomy.fibre_exceptions.is_empty()
        && finiteness.iter().all(|r| r.finite);
    let mut mismatches: Vec<String> = dichotomy
        .exceptions
        .iter()
        .chain(&dichotomy.fibre_exceptions)
        .cloned()
        .collect();
    mismatches.extend(
        finiteness
            .iter()
            .filter(|r| !r.finite)
            .map(|r| format!("S = {}: bound {} above {}", r.s.join(" "), r.certified_bound, r.ceiling)),
    );
    let rows = finiteness
        .iter()
        .map(|r| {
            vec![
                r.s.join(" "),
                r.fixing.len().to_string(),
                r.admissible.len().to_string(),
                r.certified_bound.to_string(),
                r.ceiling.to_string(),
                r.finite.to_string(),
            ]
        })
        .collect();
    let suite = Genus1Suite {
        schema: "covercensus.genus1-suite/1",
        curve: curve.to_string(),
        dichotomy,
        finiteness,
        ok,
    };
    Ok(Rendered::new(&suite)?
        .summary("curve", &suite.curve)
        .summary("dichotomy levels", join(&suite.dichotomy.levels))
        .summary("automorphisms checked", suite.dichotomy.checked)
        .summary("ok", ok)
        .table(&["S", "fixing", "admissible", "certified_bound", "ceiling", "finite"], rows)
        .verdict(ok, mismatches))
}

#[derive(Serialize)]
struct RamificationReport {
    schema: &'static str,
    field: String,
    poly: Vec<String>,
    level: u32,
    points: Vec<RamPointRecord>,
}

fn ramification(spec: &str, poly: &str, ext: u32) -> Result<Rendered> {
    let f = parse_field(spec)?;
    let coeffs = poly
        .split(';')
        .map(|c| f.parse_elem(c.trim()).with_context(|| format!("--poly coefficient {c:?}")))
        .collect::<Result<Vec<_>>>()?;
    let g = Poly::new(&coeffs).context("--poly")?;
    let pts = poly_map_ramification(&g, ext).context("--poly")?;
    let rep = RamificationReport {
        schema: "covercensus.ramification/1",
        field: f.to_string(),
        poly: g.coeffs().iter().map(|c| c.to_string()).collect(),
        level: ext,
        points: pts.iter().map(RamPointRecord::from).collect(),
    };
    let rows = rep
        .points
        .iter()
        .map(|r| vec![r.point.clone(), r.index.to_string(), r.tame.to_string()])
        .collect();
    Ok(Rendered::new(&rep)?
        .summary("field", &rep.field)
        .summary("level", ext)
        .summary("ramified points", rep.points.len())
        .table(&["point", "index", "tame"], rows))
}
