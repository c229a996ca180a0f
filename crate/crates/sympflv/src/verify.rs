//! Orchestrated verification: named suites that bind the modules together
//! and emit machine-readable certificates.
//!
//! Each suite checks one structural claim end to end, from cone geometry
//! through Groebner degenerations, and reports a JSON witness.  Reports are
//! deterministic for a fixed seed; wall-clock timing is carried alongside
//! for display but never serialized, so equal seeds give byte-identical
//! JSON.

use std::time::{Duration, Instant};

use num::Zero;
use serde_json::{json, Map, Value};

use crate::chart::Chart;
use crate::cone::Position;
use crate::degree::{
    boundary_points, degree_cone, degree_of, degree_to_json, derived_rows, facet_combination,
    facet_rows, interior_points, lineality_basis, DegreePoint,
};
use crate::fflv::{lattice_points, minkowski_check, weyl_dim_u64};
use crate::groebner::{
    groebner_basis, initial_forms, same_ideal, standard_monomials, Caps, WeightOrder,
};
use crate::lie::pair_tuples;
use crate::linalg::{in_row_space, rank};
use crate::plucker::{IndexTuple, PlueckerRing};
use crate::poly::Poly;
use crate::rat::{format_rat, rat, sign, Rat};
use crate::tableaux::enumerate;
use crate::trop::{
    facet_certificate, facet_relation, image_equalities, image_inequalities, pull_back,
    tropical_cone, tropical_point, violating_point, weight_matrix, SignConvention,
};
use crate::{Error, Result};

/// Depth of the verification run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Result<Level> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::Parse(format!(
                "level must be quick or full, got {other}"
            ))),
        }
    }

    fn label(self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One suite's certificate.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: &'static str,
    pub claim: &'static str,
    pub status: Status,
    pub witness: Value,
    pub elapsed: Duration,
}

/// Parameters threaded through every suite.
#[derive(Clone, Copy)]
struct Ctx {
    n: usize,
    seed: u64,
    level: Level,
}

impl Ctx {
    fn pick(&self, quick: usize, full: usize) -> usize {
        match self.level {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

type Outcome = Result<(Status, Value)>;

fn pass(witness: Value) -> Outcome {
    Ok((Status::Pass, witness))
}

fn fail(witness: Value) -> Outcome {
    Ok((Status::Fail, witness))
}

fn skip(reason: &str) -> Outcome {
    Ok((Status::Skipped, json!({ "reason": reason })))
}

/// Registry entry: suite name, the claim it checks, and its runner.
type Suite = (&'static str, &'static str, fn(&Ctx) -> Outcome);

/// Run every suite in registry order.  Deterministic for fixed inputs.
pub fn verify(level: Level, n: usize, seed: u64) -> Result<Vec<Report>> {
    if !(2..=4).contains(&n) {
        return Err(Error::BadRank("2 <= n <= 4 for verification runs"));
    }
    let ctx = Ctx { n, seed, level };
    let suites: Vec<Suite> = vec![
        (
            "cone-geometry",
            "the degree cone is simplicial: n(n-1) irredundant facets, an \
             n-dimensional lineality space, and a strict interior point",
            cone_geometry,
        ),
        (
            "derived-inequalities",
            "every derived degree inequality holds strictly at sampled interior \
             points and is an exact nonnegative combination of facet rows",
            derived_inequalities,
        ),
        (
            "worked-generators",
            "the rank-2 defining ideal contains the six recorded generators \
             term for term",
            worked_generators,
        ),
        (
            "worked-chart",
            "the ten rank-2 chart polynomials and their degenerate images at \
             the recorded degree point match the recorded tables exactly",
            worked_chart,
        ),
        (
            "kernel",
            "the chart coordinate map annihilates every ideal generator, and \
             the rank-2 degenerate map annihilates the recorded degenerate \
             relations",
            kernel_checks,
        ),
        (
            "counting",
            "lattice point counts, semistandard filling counts, and the Weyl \
             dimension formula agree on all small weights",
            counting,
        ),
        (
            "minkowski",
            "lattice point sets of sums of weights are the Minkowski sums of \
             the summands' lattice point sets",
            minkowski,
        ),
        (
            "minimizers",
            "the anti-diagonal pairing point uniquely minimizes the degree over \
             the action set at interior degree points and still attains the \
             minimum on facet points",
            minimizers,
        ),
        (
            "tableau-bijection",
            "strips, standardization, and fillings biject onto lattice points, \
             and both bijection routes (chart valuation and pairing) agree",
            tableau_bijection,
        ),
        (
            "groebner",
            "weighted initial ideals at interior tropical points are generated \
             by binomials, annihilated by the degenerate map (hence \
             monomial-free), and have Weyl-sized standard monomial counts in \
             every small multidegree",
            groebner_degeneration,
        ),
        (
            "tropical-cone",
            "the tropical cone is exactly the image of the degree cone: kernel \
             equalities, transported facet inequalities, and the rank-2 worked \
             description with its one redundant row",
            tropical_image,
        ),
        (
            "maximality",
            "each transported facet owns an exchange relation that the \
             coordinate map kills and whose initial form turns monomial \
             exactly at points violating that facet image",
            maximality,
        ),
    ];
    let mut out = Vec::with_capacity(suites.len());
    for (suite, claim, run) in suites {
        let start = Instant::now();
        let (status, witness) = match run(&ctx) {
            Ok(done) => done,
            Err(Error::ResourceCap { what, limit }) => (
                Status::Skipped,
                json!({ "reason": format!("resource cap exceeded in {what} (limit {limit})") }),
            ),
            Err(other) => (Status::Fail, json!({ "error": other.to_string() })),
        };
        out.push(Report {
            suite,
            claim,
            status,
            witness,
            elapsed: start.elapsed(),
        });
    }
    Ok(out)
}

/// True when no suite failed (skips are allowed).
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

/// Deterministic JSON envelope for a run.  Timing is intentionally left
/// out so equal seeds serialize identically.
pub fn report_json(level: Level, n: usize, seed: u64, reports: &[Report]) -> Value {
    let items: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "suite": r.suite,
                "claim": r.claim,
                "status": r.status.label(),
                "witness": r.witness,
            })
        })
        .collect();
    json!({
        "schema": 1,
        "level": level.label(),
        "n": n,
        "seed": seed,
        "status": if all_passed(reports) { "pass" } else { "fail" },
        "reports": items,
    })
}

// ---------------------------------------------------------------------------
// Recorded rank-2 data shared by the suites, the CLI, and the acceptance
// tests: the worked degree point, generator catalogue, chart table,
// degenerate images, and degenerate relations.
// ---------------------------------------------------------------------------

/// The worked rank-2 degree point, in reading order
/// `a(1,1), a(1,2), a(1,-1), a(2,2)`.
pub fn recorded_degree_point() -> DegreePoint {
    vec![rat(3), rat(2), rat(1), rat(1)]
}

fn tuple2(ring: &PlueckerRing, signed: &[i64]) -> IndexTuple {
    IndexTuple::from_signed(signed, ring.n()).expect("recorded tuple")
}

fn require_rank_two(n: usize) -> Result<()> {
    if n == 2 {
        Ok(())
    } else {
        Err(Error::BadRank("recorded tables exist for n = 2 only"))
    }
}

/// The six recorded generators of the rank-2 defining ideal.
pub fn recorded_generators(ring: &PlueckerRing) -> Result<Vec<Poly>> {
    require_rank_two(ring.n())?;
    let x = |signed: &[i64]| ring.var(&tuple2(ring, signed));
    Ok(vec![
        x(&[1, 2])
            .mul(&x(&[-2]))?
            .add(&x(&[2, -2]).mul(&x(&[1]))?)?
            .sub(&x(&[1, -2]).mul(&x(&[2]))?)?,
        x(&[1, -2])
            .mul(&x(&[-1]))?
            .add(&x(&[-2, -1]).mul(&x(&[1]))?)?
            .sub(&x(&[1, -1]).mul(&x(&[-2]))?)?,
        x(&[2, -2])
            .mul(&x(&[-1]))?
            .add(&x(&[-2, -1]).mul(&x(&[2]))?)?
            .sub(&x(&[2, -1]).mul(&x(&[-2]))?)?,
        x(&[1, 2])
            .mul(&x(&[-1]))?
            .add(&x(&[2, -1]).mul(&x(&[1]))?)?
            .sub(&x(&[1, -1]).mul(&x(&[2]))?)?,
        x(&[1, 2])
            .mul(&x(&[-2, -1]))?
            .sub(&x(&[1, -2]).mul(&x(&[2, -1]))?)?
            .add(&x(&[1, -1]).mul(&x(&[2, -2]))?)?,
        x(&[1, -1]).add(&x(&[2, -2]))?,
    ])
}

/// The recorded table of all ten rank-2 chart polynomials, keyed by tuple.
pub fn recorded_chart_table(chart: &Chart) -> Result<Vec<(IndexTuple, Poly)>> {
    require_rank_two(chart.n())?;
    let ring = chart.ring();
    let t = |i: usize| chart.t_var(i);
    let one = Poly::one(chart.universe());
    let rows: Vec<(&[i64], Poly)> = vec![
        (&[1], one.clone()),
        (&[2], t(3)),
        (&[-2], t(2)),
        (&[-1], t(1).add(&t(2).mul(&t(3))?)?),
        (&[1, 2], one),
        (&[1, -2], t(4)),
        (&[1, -1], t(2).sub(&t(3).mul(&t(4))?)?),
        (&[2, -2], t(3).mul(&t(4))?.sub(&t(2))?),
        (&[2, -1], t(1).neg().sub(&t(3).mul(&t(3))?.mul(&t(4))?)?),
        (
            &[-2, -1],
            t(2)
                .mul(&t(2))?
                .sub(&t(1).mul(&t(4))?)?
                .sub(&t(2).mul(&t(3))?.mul(&t(4))?.scale(&rat(2)))?,
        ),
    ];
    Ok(rows
        .into_iter()
        .map(|(signed, p)| (tuple2(ring, signed), p))
        .collect())
}

/// The recorded degenerate images of the ten coordinates at the recorded
/// degree point, in ring order.
pub fn recorded_degenerate_images(chart: &Chart) -> Result<Vec<Poly>> {
    require_rank_two(chart.n())?;
    let t = |i: usize| chart.t_var(i);
    let z = |k: usize| chart.z_var(k);
    Ok(vec![
        z(1),
        t(3).mul(&z(1))?,
        t(2).mul(&z(1))?,
        t(1).mul(&z(1))?,
        z(2),
        t(4).mul(&z(2))?,
        t(2).mul(&z(2))?,
        t(2).mul(&z(2))?.neg(),
        t(1).mul(&z(2))?.neg(),
        t(1).mul(&t(4))?.mul(&z(2))?.neg(),
    ])
}

/// The six recorded relations of the degenerate (initial) ideal at the
/// recorded degree point.
pub fn recorded_degenerate_relations(ring: &PlueckerRing) -> Result<Vec<Poly>> {
    require_rank_two(ring.n())?;
    let x = |signed: &[i64]| ring.var(&tuple2(ring, signed));
    Ok(vec![
        x(&[1, 2]).mul(&x(&[-2]))?.add(&x(&[2, -2]).mul(&x(&[1]))?)?,
        x(&[1, -2]).mul(&x(&[-1]))?.add(&x(&[-2, -1]).mul(&x(&[1]))?)?,
        x(&[2, -2]).mul(&x(&[-1]))?.sub(&x(&[2, -1]).mul(&x(&[-2]))?)?,
        x(&[1, 2]).mul(&x(&[-1]))?.add(&x(&[2, -1]).mul(&x(&[1]))?)?,
        x(&[1, 2]).mul(&x(&[-2, -1]))?.sub(&x(&[1, -2]).mul(&x(&[2, -1]))?)?,
        x(&[1, -1]).add(&x(&[2, -2]))?,
    ])
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

fn cone_geometry(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let cone = degree_cone(n);
    let facets = facet_rows(n);
    if facets.len() != n * (n - 1) {
        return fail(json!({ "facets": facets.len(), "expected": n * (n - 1) }));
    }
    let interior = cone.strict_point()?;
    if cone.membership(&interior) != Position::Interior {
        return fail(json!({ "interior_point": "not strictly inside" }));
    }
    let lineality = lineality_basis(n);
    if lineality.len() != n || rank(&lineality) != n {
        return fail(json!({ "lineality": lineality.len(), "expected": n }));
    }
    for line in &lineality {
        let neg: Vec<Rat> = line.iter().map(|x| -x).collect();
        if !cone.contains(line) || !cone.contains(&neg) {
            return fail(json!({ "lineality": "basis vector leaves the cone" }));
        }
    }
    for (k, (facet_id, _)) in facets.iter().enumerate() {
        let witness = cone.irredundancy_witness(k)?;
        let row = &cone.rows[k];
        if row.holds(&witness) {
            return fail(json!({ "irredundant": facet_id.to_string() }));
        }
        for (other, r) in cone.rows.iter().enumerate() {
            if other != k && !r.holds(&witness) {
                return fail(json!({
                    "witness": facet_id.to_string(),
                    "also_violates": other,
                }));
            }
        }
    }
    pass(json!({
        "facets": facets.len(),
        "lineality_dim": n,
        "simplicial": facets.len() == n * n - n,
        "interior_point": degree_to_json(&interior, n),
    }))
}

fn derived_inequalities(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let samples = ctx.pick(25, 200);
    let rows = derived_rows(n);
    let mut certified = 0usize;
    for (id, row) in &rows {
        let Some(combo) = facet_combination(n, row) else {
            return fail(json!({ "family": id.to_string(), "certificate": "missing" }));
        };
        if combo.iter().any(|c| c < &rat(0)) {
            return fail(json!({ "family": id.to_string(), "certificate": "negative" }));
        }
        certified += 1;
    }
    let zero_row = |row: &crate::cone::Row| row.coeffs.iter().all(Rat::is_zero);
    for d in interior_points(n, samples, ctx.seed)? {
        for (id, row) in &rows {
            let v = row.eval(&d);
            if sign(&v) < 0 || (v.is_zero() && !zero_row(row)) {
                return fail(json!({
                    "family": id.to_string(),
                    "point": degree_to_json(&d, n),
                    "value": format_rat(&v),
                }));
            }
        }
    }
    pass(json!({
        "families": rows.len(),
        "certificates": certified,
        "interior_samples": samples,
    }))
}

fn worked_generators(ctx: &Ctx) -> Outcome {
    if ctx.n != 2 {
        return skip("recorded generator catalogue exists for n = 2 only");
    }
    let ring = PlueckerRing::new(2);
    let gens = ring.ideal_generators()?;
    let catalogue = recorded_generators(&ring)?;
    let mut matched = Vec::new();
    for (k, want) in catalogue.iter().enumerate() {
        let normalized = want.clone().primitive_normalized();
        if !gens.contains(&normalized) {
            return fail(json!({ "missing": k, "relation": want.to_string() }));
        }
        matched.push(want.to_string());
    }
    pass(json!({ "generators": gens.len(), "catalogue": matched }))
}

fn worked_chart(ctx: &Ctx) -> Outcome {
    if ctx.n != 2 {
        return skip("recorded chart tables exist for n = 2 only");
    }
    let chart = Chart::new(2)?;
    let mut table = Map::new();
    for (j, want) in recorded_chart_table(&chart)? {
        let got = chart.coordinate(&j);
        if got != want {
            return fail(json!({
                "tuple": j.name(2),
                "expected": want.to_string(),
                "computed": got.to_string(),
            }));
        }
        table.insert(j.name(2), json!(got.to_string()));
    }
    let d = recorded_degree_point();
    let images = chart.degenerate_images(&d)?;
    let mut degenerate = Map::new();
    for ((j, got), want) in chart
        .ring()
        .tuples()
        .iter()
        .zip(&images)
        .zip(recorded_degenerate_images(&chart)?)
    {
        if *got != want {
            return fail(json!({
                "tuple": j.name(2),
                "expected": want.to_string(),
                "computed": got.to_string(),
            }));
        }
        degenerate.insert(j.name(2), json!(got.to_string()));
    }
    pass(json!({
        "coordinates": Value::Object(table),
        "degenerate_images": Value::Object(degenerate),
        "degree_point": degree_to_json(&d, 2),
    }))
}

fn kernel_checks(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n > 3 {
        return Err(Error::ResourceCap { what: "kernel checks", limit: 3 });
    }
    let chart = Chart::new(n)?;
    let gens = chart.ring().ideal_generators()?;
    for g in &gens {
        let image = chart.coordinate_map(g)?;
        if !image.is_zero() {
            return fail(json!({ "generator": g.to_string(), "image": image.to_string() }));
        }
    }
    let degenerate = if n == 2 {
        let d = recorded_degree_point();
        let relations = recorded_degenerate_relations(chart.ring())?;
        for r in &relations {
            let image = chart.degenerate_map(r, &d)?;
            if !image.is_zero() {
                return fail(json!({
                    "relation": r.to_string(),
                    "image": image.to_string(),
                }));
            }
        }
        // sanity: the undegenerate map must NOT kill the degenerate-only ones
        let survives = chart.coordinate_map(&relations[0])?;
        if survives.is_zero() {
            return fail(json!({ "sanity": "degenerate relation already in the kernel" }));
        }
        json!(relations.len())
    } else {
        json!("recorded degenerate relations exist for n = 2 only")
    };
    pass(json!({
        "generators_annihilated": gens.len(),
        "degenerate_relations_annihilated": degenerate,
    }))
}

/// All multiplicity vectors of height (coordinate sum) at most `h`.
fn weights_up_to(n: usize, h: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for base in &out {
            let used: u32 = base.iter().sum();
            for m in 0..=(h - used) {
                let mut grown = base.clone();
                grown.push(m);
                next.push(grown);
            }
        }
        out = next;
    }
    out
}

fn mults_name(mults: &[u32]) -> String {
    mults
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn counting(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let height = if n <= 3 { ctx.pick(2, 3) } else { 1 };
    let mut counts = Map::new();
    for mults in weights_up_to(n, height as u32) {
        let points = lattice_points(n, &mults)?;
        let fillings = enumerate(n, &mults)?;
        let dim = weyl_dim_u64(n, &mults)?;
        if points.len() as u64 != dim || fillings.len() as u64 != dim {
            return fail(json!({
                "lambda": mults_name(&mults),
                "lattice_points": points.len(),
                "fillings": fillings.len(),
                "weyl_dim": dim,
            }));
        }
        counts.insert(mults_name(&mults), json!(dim));
    }
    pass(json!({ "max_height": height, "dimensions": Value::Object(counts) }))
}

fn minkowski(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n > 3 {
        return Err(Error::ResourceCap { what: "minkowski sums", limit: 3 });
    }
    let budget = 3u32;
    let mut checked = 0usize;
    for a in weights_up_to(n, budget - 1) {
        if a.iter().all(|&m| m == 0) {
            continue;
        }
        let ha: u32 = a.iter().sum();
        for b in weights_up_to(n, budget - ha) {
            if b.iter().all(|&m| m == 0) {
                continue;
            }
            if !minkowski_check(n, &a, &b)? {
                return fail(json!({
                    "lambda": mults_name(&a),
                    "mu": mults_name(&b),
                }));
            }
            checked += 1;
        }
    }
    pass(json!({ "pairs": checked, "height_budget": budget }))
}

fn minimizers(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n > 3 {
        return Err(Error::ResourceCap { what: "pairing minimizers", limit: 3 });
    }
    let chart = Chart::new(n)?;
    let ring = chart.ring();
    let mut pairs = Vec::new();
    for i in ring.tuples() {
        for j in ring.tuples() {
            if i.len() != j.len() {
                continue;
            }
            let Ok(pairing) = pair_tuples(i.letters(), j.letters(), n) else {
                continue;
            };
            let actions = chart.action_set(i.letters(), j.letters());
            if !actions.contains(&pairing) {
                return fail(json!({
                    "from": i.name(n),
                    "to": j.name(n),
                    "pairing": "acts trivially",
                }));
            }
            pairs.push((i.clone(), j.clone(), pairing, actions));
        }
    }
    let interior = interior_points(n, ctx.pick(10, 50), ctx.seed)?;
    for d in &interior {
        for (i, j, pairing, actions) in &pairs {
            let best = degree_of(d, pairing);
            let mut attained = 0usize;
            for s in actions {
                let v = degree_of(d, s);
                if v < best {
                    return fail(json!({
                        "from": i.name(n),
                        "to": j.name(n),
                        "beaten_by": format!("{s:?}"),
                    }));
                }
                if v == best {
                    attained += 1;
                }
            }
            if attained != 1 {
                return fail(json!({
                    "from": i.name(n),
                    "to": j.name(n),
                    "minimizers": attained,
                }));
            }
        }
    }
    let facet_count = facet_rows(n).len();
    let boundary_samples = ctx.pick(5, 20);
    let mut boundary_checked = 0usize;
    for k in 0..boundary_samples {
        let d = boundary_points(n, k % facet_count, 1, ctx.seed.wrapping_add(k as u64))?
            .pop()
            .expect("one boundary point requested");
        for (i, j, pairing, actions) in &pairs {
            let best = degree_of(d.as_slice(), pairing);
            if actions.iter().any(|s| degree_of(&d, s) < best) {
                return fail(json!({
                    "from": i.name(n),
                    "to": j.name(n),
                    "boundary": "pairing misses the minimum",
                }));
            }
        }
        boundary_checked += 1;
    }
    pass(json!({
        "pairs": pairs.len(),
        "interior_samples": interior.len(),
        "boundary_samples": boundary_checked,
    }))
}

fn tableau_bijection(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n > 3 {
        return Err(Error::ResourceCap { what: "tableau bijection", limit: 3 });
    }
    let chart = Chart::new(n)?;
    let ring = chart.ring();
    // per-strip: the chart valuation route equals the pairing route
    for k in 1..=n {
        for j in ring.tuples().iter().filter(|j| j.len() == k) {
            let strip = crate::tableaux::strip_of(j, n);
            let via_strip = strip.lattice_point()?;
            let via_chart = chart.valuation_point(j)?;
            if via_strip != via_chart {
                return fail(json!({
                    "tuple": j.name(n),
                    "strip_route": format!("{via_strip:?}"),
                    "chart_route": format!("{via_chart:?}"),
                }));
            }
            let fixed = strip.standardized();
            if fixed.standardized() != fixed || !fixed.is_pbw() {
                return fail(json!({ "tuple": j.name(n), "standardization": "not idempotent" }));
            }
        }
    }
    // per-shape: fillings biject onto lattice points, inverse included
    let height = if n == 2 { ctx.pick(2, 3) } else { 2 };
    let mut shapes = 0usize;
    for mults in weights_up_to(n, height as u32) {
        let fillings = enumerate(n, &mults)?;
        let mut images = std::collections::BTreeSet::new();
        for t in &fillings {
            let p = t.lattice_point()?;
            let back = crate::tableaux::from_point(n, &mults, &p)?;
            if back != *t {
                return fail(json!({
                    "lambda": mults_name(&mults),
                    "roundtrip": "inverse mismatch",
                }));
            }
            images.insert(p);
        }
        let points: std::collections::BTreeSet<_> =
            lattice_points(n, &mults)?.into_iter().collect();
        if images != points {
            return fail(json!({
                "lambda": mults_name(&mults),
                "images": images.len(),
                "points": points.len(),
            }));
        }
        shapes += 1;
    }
    pass(json!({ "strips_checked": true, "shapes": shapes, "max_height": height }))
}

fn groebner_degeneration(ctx: &Ctx) -> Outcome {
    if ctx.n != 2 {
        return Err(Error::ResourceCap { what: "groebner bases", limit: 2 });
    }
    let n = 2;
    let chart = Chart::new(n)?;
    let ring = chart.ring();
    let gens = ring.ideal_generators()?;
    let groups: Vec<usize> = ring.tuples().iter().map(IndexTuple::len).collect();
    let lambdas = weights_up_to(n, 3);
    let mut expected = Map::new();
    for mults in &lambdas {
        expected.insert(mults_name(mults), json!(weyl_dim_u64(n, mults)?));
    }
    let mut points = vec![recorded_degree_point()];
    points.extend(interior_points(n, ctx.pick(2, 10), ctx.seed)?);
    let caps = Caps::default();
    let mut basis_sizes = Vec::new();
    for (at, d) in points.iter().enumerate() {
        let weights = tropical_point(d, ring, SignConvention::Min)?;
        let order = WeightOrder::new(weights.clone());
        let basis = groebner_basis(&gens, &order, caps)?;
        let inits = initial_forms(&basis, &weights)?;
        for (g, init) in basis.iter().zip(&inits) {
            if init.num_terms() > 2 {
                return fail(json!({
                    "point": at,
                    "generator": g.to_string(),
                    "initial_form": init.to_string(),
                }));
            }
            let image = chart.degenerate_map(init, d)?;
            if !image.is_zero() {
                return fail(json!({
                    "point": at,
                    "initial_form": init.to_string(),
                    "image": image.to_string(),
                }));
            }
        }
        // the coordinate images are nonzero monomials, so the degenerate
        // kernel is toric and the initial ideal inside it has no monomial
        for img in chart.degenerate_images(d)? {
            if img.is_zero() || !img.is_monomial() {
                return fail(json!({ "point": at, "image": img.to_string() }));
            }
        }
        for mults in &lambdas {
            let count = standard_monomials(&basis, &order, &groups, mults).len();
            let dim = weyl_dim_u64(n, mults)?;
            if count as u64 != dim {
                return fail(json!({
                    "point": at,
                    "lambda": mults_name(mults),
                    "standard_monomials": count,
                    "weyl_dim": dim,
                }));
            }
        }
        if at == 0 {
            // at the recorded point the initial ideal is exactly the span
            // of the recorded degenerate relations
            let recorded = recorded_degenerate_relations(ring)?;
            if !same_ideal(&inits, &recorded, &order, caps)? {
                return fail(json!({ "recorded_initial_ideal": "mismatch" }));
            }
        }
        basis_sizes.push(basis.len());
    }
    pass(json!({
        "points": points.len(),
        "basis_sizes": basis_sizes,
        "standard_monomial_counts": Value::Object(expected),
        "recorded_initial_ideal": "matched",
    }))
}

fn tropical_image(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let ring = PlueckerRing::new(n);
    let w = weight_matrix(&ring);
    if rank(&w) != n * n {
        return fail(json!({ "weight_matrix_rank": rank(&w), "expected": n * n }));
    }
    let eqs = image_equalities(&ring);
    if eqs.len() != ring.tuples().len() - n * n {
        return fail(json!({ "equalities": eqs.len() }));
    }
    for (id, pushed) in image_inequalities(&ring, SignConvention::Min) {
        let back = pull_back(&pushed.coeffs, &ring);
        let original = facet_rows(n)
            .into_iter()
            .find(|(f, _)| *f == id)
            .expect("facet present")
            .1;
        if back != original.coeffs {
            return fail(json!({ "facet": id.to_string(), "pullback": "mismatch" }));
        }
    }
    for sign in [SignConvention::Min, SignConvention::Negated] {
        let cone = tropical_cone(&ring, sign);
        for d in interior_points(n, ctx.pick(5, 20), ctx.seed)? {
            let v = tropical_point(&d, &ring, sign)?;
            if !cone.contains(&v) {
                return fail(json!({ "image": "interior point escapes the cone" }));
            }
        }
        let facet_count = facet_rows(n).len();
        for facet in 0..facet_count {
            for d in boundary_points(n, facet, 2, ctx.seed)? {
                let v = tropical_point(&d, &ring, sign)?;
                if !cone.contains(&v) {
                    return fail(json!({ "image": "boundary point escapes the cone" }));
                }
            }
        }
    }
    let worked = if n == 2 {
        worked_tropical_description(&ring)?
    } else {
        json!("recorded description exists for n = 2 only")
    };
    pass(json!({
        "weight_matrix_rank": n * n,
        "equalities": eqs.len(),
        "inequalities": facet_rows(n).len(),
        "pullbacks": "exact",
        "worked_description": worked,
    }))
}

/// Check the recorded rank-2 description of the tropical cone: six
/// equalities spanning the image kernel, two transported facet rows, and
/// one redundant row explained by an exact facet combination.
fn worked_tropical_description(ring: &PlueckerRing) -> Result<Value> {
    let n = 2;
    let len = ring.tuples().len();
    let at = |signed: &[i64]| -> Result<usize> {
        Ok(ring.position(&IndexTuple::from_signed(signed, n)?))
    };
    let unit = |entries: &[(&[i64], i64)]| -> Result<Vec<Rat>> {
        let mut row = vec![rat(0); len];
        for (signed, c) in entries {
            row[at(signed)?] += rat(*c);
        }
        Ok(row)
    };
    let recorded_eqs = vec![
        unit(&[(&[1], 1)])?,
        unit(&[(&[1, 2], 1)])?,
        unit(&[(&[-2], 1), (&[1, -1], -1)])?,
        unit(&[(&[1, -1], 1), (&[2, -2], -1)])?,
        unit(&[(&[-1], 1), (&[2, -1], -1)])?,
        unit(&[(&[-2, -1], 1), (&[-1], -1), (&[1, -2], -1)])?,
    ];
    let eqs = image_equalities(ring);
    let eq_rows: Vec<Vec<Rat>> = eqs.iter().map(|r| r.coeffs.clone()).collect();
    for (k, row) in recorded_eqs.iter().enumerate() {
        if !in_row_space(&eq_rows, row) {
            return Err(Error::Parse(format!("recorded equality {k} escapes the image")));
        }
    }
    for (k, row) in eq_rows.iter().enumerate() {
        if !in_row_space(&recorded_eqs, row) {
            return Err(Error::Parse(format!("image equality {k} escapes the record")));
        }
    }
    let first = unit(&[(&[2], 1), (&[1, -2], 1), (&[-2], -1)])?;
    let middle = unit(&[(&[2], 1), (&[-2], 1), (&[-1], -1)])?;
    let third = unit(&[(&[-2], 2), (&[-1], -1), (&[1, -2], -1)])?;
    let mine = image_inequalities(ring, SignConvention::Min);
    let norm = |coeffs: Vec<Rat>| crate::cone::Row::geq(coeffs, rat(0)).normalized().coeffs;
    if mine.len() != 2
        || mine[0].1.normalized().coeffs != norm(first)
        || mine[1].1.normalized().coeffs != norm(third)
    {
        return Err(Error::Parse("recorded inequalities do not match".into()));
    }
    let pulled_row = crate::cone::Row::geq(pull_back(&middle, ring), rat(0));
    let combo = facet_combination(n, &pulled_row)
        .ok_or_else(|| Error::Parse("redundant row has no facet certificate".into()))?;
    Ok(json!({
        "equalities": "matched",
        "inequalities": "matched",
        "redundant_row": "s_2 + s_-2 >= s_-1",
        "facet_combination": combo.iter().map(format_rat).collect::<Vec<_>>(),
    }))
}

fn maximality(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n > 3 {
        return Err(Error::ResourceCap { what: "maximality certificates", limit: 3 });
    }
    let ring = PlueckerRing::new(n);
    let chart = Chart::new(n)?;
    let interior = tropical_point(
        &interior_points(n, 1, ctx.seed)?.remove(0),
        &ring,
        SignConvention::Min,
    )?;
    let mut certificates = Map::new();
    for (id, _) in facet_rows(n) {
        let relation = facet_relation(id, &ring)?;
        let image = chart.coordinate_map(&relation)?;
        if !image.is_zero() {
            return fail(json!({ "facet": id.to_string(), "relation": "not in the kernel" }));
        }
        let bad = violating_point(id, &ring, SignConvention::Min)?;
        let init = relation.initial_form(&bad)?;
        let expected = facet_certificate(id, &ring)?;
        if !init.is_monomial() || init != expected {
            return fail(json!({
                "facet": id.to_string(),
                "initial_form": init.to_string(),
                "expected": expected.to_string(),
            }));
        }
        let generic = relation.initial_form(&interior)?;
        if generic.num_terms() < 2 {
            return fail(json!({
                "facet": id.to_string(),
                "interior_initial_form": generic.to_string(),
            }));
        }
        certificates.insert(id.to_string(), json!(init.to_string()));
    }
    pass(json!({ "facets": certificates.len(), "certificates": Value::Object(certificates) }))
}
