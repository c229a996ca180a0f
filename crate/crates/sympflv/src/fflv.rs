//! FFLV-type polytopes for sp(2n): Dyck paths, lattice points, the
//! root poset and standard decompositions into fundamental points.
//!
//! A dominant weight is given by its multiplicities `mults = (m_1, ..., m_n)`
//! over the fundamental weights.  Lattice points live in the space spanned by
//! the positive roots, ordered as in [`crate::lie::positive_roots`].

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, ToPrimitive};
use serde_json::{json, Value};

use crate::cone::{ConeH, Row};
use crate::lie::{positive_roots, root_index, PositiveRoot};
use crate::rat::{rat, Rat};
use crate::{Error, Result};

/// A lattice point: multiplicities over the positive roots in reading order.
pub type LatticePoint = Vec<u32>;

/// A Dyck path: a chain of positive roots from a simple root to a simple or
/// long root, each step increasing the first index or the second index.
pub type DyckPath = Vec<PositiveRoot>;

/// All Dyck paths, ordered by starting root and then depth-first by steps
/// (increasing the second index before the first).
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for i in 1..=n {
        let start = PositiveRoot::short(i, i, n).expect("simple root");
        stack.push(start);
        extend_paths(&mut stack, n, &mut out);
        stack.pop();
    }
    out
}

fn extend_paths(stack: &mut Vec<PositiveRoot>, n: usize, out: &mut Vec<DyckPath>) {
    let last = *stack.last().expect("nonempty path");
    if last.is_simple() || last.is_long() {
        out.push(stack.clone());
    }
    for next in [last.incr_second(n), last.incr_first(n)].into_iter().flatten() {
        stack.push(next);
        extend_paths(stack, n, out);
        stack.pop();
    }
}

/// Upper bound of the path constraint for the weight `mults`.
///
/// A path starting at the `i`-th simple root contributes
/// `m_i + ... + m_j` when it ends at the `j`-th simple root and
/// `m_i + ... + m_n` when it ends at a long root.
pub fn path_bound(path: &DyckPath, mults: &[u32]) -> u32 {
    let i = path.first().expect("nonempty path").first();
    let end = *path.last().expect("nonempty path");
    let j = if end.is_long() { mults.len() } else { end.first() };
    mults[i - 1..j].iter().sum()
}

/// The polytope in H-form: nonnegativity plus one row per Dyck path.
pub fn fflv_polytope(n: usize, mults: &[u32]) -> Result<ConeH> {
    if mults.len() != n {
        return Err(Error::LengthMismatch(mults.len(), n));
    }
    let dim = n * n;
    let idx = root_index(n);
    let mut rows = Vec::new();
    for k in 0..dim {
        let mut c = vec![rat(0); dim];
        c[k] = rat(1);
        rows.push(Row::geq(c, rat(0)));
    }
    for path in dyck_paths(n) {
        let mut c = vec![rat(0); dim];
        for b in &path {
            c[idx[b]] = rat(-1);
        }
        rows.push(Row::geq(c, -rat(path_bound(&path, mults) as i64)));
    }
    Ok(ConeH::new(dim, rows))
}

/// Does the polytope for `mults` contain the lattice point?
pub fn polytope_contains(n: usize, mults: &[u32], point: &[u32]) -> Result<bool> {
    if point.len() != n * n {
        return Err(Error::DimMismatch { expected: n * n, got: point.len() });
    }
    let idx = root_index(n);
    for path in dyck_paths(n) {
        let sum: u32 = path.iter().map(|b| point[idx[b]]).sum();
        if sum > path_bound(&path, mults) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All lattice points of the polytope, in lexicographic order of their
/// coordinate vectors.
pub fn lattice_points(n: usize, mults: &[u32]) -> Result<Vec<LatticePoint>> {
    if mults.len() != n {
        return Err(Error::LengthMismatch(mults.len(), n));
    }
    let dim = n * n;
    let idx = root_index(n);
    // per-coordinate list of (path id, bound) so partial sums prune exactly
    let paths = dyck_paths(n);
    let bounds: Vec<u32> = paths.iter().map(|p| path_bound(p, mults)).collect();
    let mut coord_paths: Vec<Vec<usize>> = vec![Vec::new(); dim];
    for (pid, path) in paths.iter().enumerate() {
        for b in path {
            coord_paths[idx[b]].push(pid);
        }
    }
    let mut out = Vec::new();
    let mut point = vec![0u32; dim];
    let mut sums = vec![0u32; paths.len()];
    fn rec(
        k: usize,
        dim: usize,
        point: &mut Vec<u32>,
        sums: &mut Vec<u32>,
        coord_paths: &[Vec<usize>],
        bounds: &[u32],
        out: &mut Vec<LatticePoint>,
    ) {
        if k == dim {
            out.push(point.clone());
            return;
        }
        let cap = coord_paths[k]
            .iter()
            .map(|&p| bounds[p] - sums[p])
            .min()
            .unwrap_or(0);
        for v in 0..=cap {
            point[k] = v;
            for &p in &coord_paths[k] {
                sums[p] += v;
            }
            rec(k + 1, dim, point, sums, coord_paths, bounds, out, );
            for &p in &coord_paths[k] {
                sums[p] -= v;
            }
            point[k] = 0;
        }
    }
    rec(0, dim, &mut point, &mut sums, &coord_paths, &bounds, &mut out);
    Ok(out)
}

/// Weyl dimension of the irreducible sp(2n)-module with weight `mults`,
/// computed from the product formula over positive roots; serves as an
/// independent count for the lattice points.
pub fn weyl_dim(n: usize, mults: &[u32]) -> Result<BigInt> {
    if mults.len() != n {
        return Err(Error::LengthMismatch(mults.len(), n));
    }
    // epsilon coordinates of weight + half-sum of positive roots
    let lam = |i: usize| -> i64 { mults[i - 1..n].iter().map(|&m| m as i64).sum() };
    let a: Vec<BigInt> = (1..=n).map(|i| BigInt::from(lam(i) + (n - i + 1) as i64)).collect();
    let r: Vec<BigInt> = (1..=n).map(|i| BigInt::from((n - i + 1) as i64)).collect();
    let mut dim = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = (&a[i] - &a[j]) * (&a[i] + &a[j]);
            let den = (&r[i] - &r[j]) * (&r[i] + &r[j]);
            dim *= BigRational::new(num, den);
        }
        dim *= BigRational::new(a[i].clone(), r[i].clone());
    }
    if !dim.is_integer() {
        return Err(Error::BadRank("dimension formula must yield an integer"));
    }
    Ok(dim.to_integer())
}

/// `weyl_dim` as `u64` for cardinality comparisons.
pub fn weyl_dim_u64(n: usize, mults: &[u32]) -> Result<u64> {
    weyl_dim(n, mults)?
        .to_u64()
        .ok_or(Error::BadRank("dimension does not fit in u64"))
}

/// Extended position of the second index within
/// `1 < ... < n < barred(n-1) < ... < barred(1)`.
fn ext_second(b: PositiveRoot, n: usize) -> usize {
    match b {
        PositiveRoot::Short { j, .. } => j,
        PositiveRoot::Barred { j, .. } => 2 * n - j,
    }
}

/// Root poset order: `a <= b` when `b` is reachable from `a` by Dyck steps,
/// equivalently both the first index and the extended second index of `a`
/// are at most those of `b`.
pub fn root_leq(a: PositiveRoot, b: PositiveRoot, n: usize) -> bool {
    a.first() <= b.first() && ext_second(a, n) <= ext_second(b, n)
}

/// The roots whose interval covers the letter `k`: first index at most `k`,
/// extended second index at least `k`.
pub fn roots_through(k: usize, n: usize) -> Vec<PositiveRoot> {
    positive_roots(n)
        .into_iter()
        .filter(|b| b.first() <= k && ext_second(*b, n) >= k)
        .collect()
}

/// Is the set of roots an antichain for [`root_leq`]?
pub fn is_antichain(set: &[PositiveRoot], n: usize) -> bool {
    set.iter().enumerate().all(|(x, &a)| {
        set.iter()
            .enumerate()
            .all(|(y, &b)| x == y || !(root_leq(a, b, n) || root_leq(b, a, n)))
    })
}

/// All antichains contained in the given roots, as indicator lattice points.
pub fn antichain_indicators(set: &[PositiveRoot], n: usize) -> Vec<LatticePoint> {
    let idx = root_index(n);
    let mut out = Vec::new();
    let mut chosen: Vec<PositiveRoot> = Vec::new();
    fn rec(
        k: usize,
        set: &[PositiveRoot],
        chosen: &mut Vec<PositiveRoot>,
        n: usize,
        idx: &BTreeMap<PositiveRoot, usize>,
        out: &mut Vec<LatticePoint>,
    ) {
        if k == set.len() {
            let mut p = vec![0u32; n * n];
            for b in chosen.iter() {
                p[idx[b]] = 1;
            }
            out.push(p);
            return;
        }
        rec(k + 1, set, chosen, n, idx, out);
        if chosen
            .iter()
            .all(|&c| !(root_leq(c, set[k], n) || root_leq(set[k], c, n)))
        {
            chosen.push(set[k]);
            rec(k + 1, set, chosen, n, idx, out);
            chosen.pop();
        }
    }
    rec(0, set, &mut chosen, n, &idx, &mut out);
    out.sort();
    out.dedup();
    out
}

/// One peeling step: the indicator of the maximal support elements inside
/// the roots through `k`, which is subtracted as a fundamental lattice point.
fn peel(point: &[u32], k: usize, n: usize) -> LatticePoint {
    let idx = root_index(n);
    let through = roots_through(k, n);
    let supp: Vec<PositiveRoot> = through
        .iter()
        .copied()
        .filter(|b| point[idx[b]] > 0)
        .collect();
    let mut p = vec![0u32; n * n];
    for &b in &supp {
        let maximal = supp
            .iter()
            .all(|&c| c == b || !root_leq(b, c, n));
        if maximal {
            p[idx[&b]] = 1;
        }
    }
    p
}

/// Standard decomposition of a lattice point of the polytope for `mults`
/// into one lattice point per fundamental factor.
///
/// Peels repeatedly at the largest `k` with `m_k != 0`: the peel is the
/// indicator of the maximal support elements among the roots through `k`.
/// Returns the peels paired with their fundamental index, in peeling order;
/// every peel lies in the polytope of its fundamental weight and the peels
/// sum to the input point.
pub fn standard_decomposition(
    n: usize,
    mults: &[u32],
    point: &[u32],
) -> Result<Vec<(usize, LatticePoint)>> {
    if !polytope_contains(n, mults, point)? {
        return Err(Error::NotInPolytope(format!("{point:?} for weight {mults:?}")));
    }
    let mut rest = point.to_vec();
    let mut left = mults.to_vec();
    let mut out = Vec::new();
    while let Some(k) = (1..=n).rev().find(|&k| left[k - 1] > 0) {
        let p = peel(&rest, k, n);
        let mut fund = vec![0u32; n];
        fund[k - 1] = 1;
        if !polytope_contains(n, &fund, &p)? {
            return Err(Error::NotInPolytope(format!(
                "peel {p:?} is not a fundamental point for k = {k}"
            )));
        }
        for (r, q) in rest.iter_mut().zip(&p) {
            *r = r
                .checked_sub(*q)
                .ok_or_else(|| Error::NotInPolytope("peel exceeds the point".into()))?;
        }
        left[k - 1] -= 1;
        out.push((k, p));
    }
    if rest.iter().any(|&x| x != 0) {
        return Err(Error::NotInPolytope("nonzero remainder after peeling".into()));
    }
    Ok(out)
}

/// Minkowski-sum identity: pointwise sums of the two lattice point sets
/// equal the lattice points of the summed weight.
pub fn minkowski_check(n: usize, mults_a: &[u32], mults_b: &[u32]) -> Result<bool> {
    let sa = lattice_points(n, mults_a)?;
    let sb = lattice_points(n, mults_b)?;
    let sum_w: Vec<u32> = mults_a.iter().zip(mults_b).map(|(a, b)| a + b).collect();
    let expect: std::collections::BTreeSet<LatticePoint> =
        lattice_points(n, &sum_w)?.into_iter().collect();
    let mut got = std::collections::BTreeSet::new();
    for a in &sa {
        for b in &sb {
            got.insert(a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<u32>>());
        }
    }
    Ok(got == expect)
}

/// Sparse JSON form of a lattice point: `{root key: count}` for nonzeros.
pub fn point_to_json(point: &[u32], n: usize) -> Value {
    let mut map = serde_json::Map::new();
    for (b, k) in root_index(n) {
        if point[k] > 0 {
            map.insert(b.key(), json!(point[k]));
        }
    }
    Value::Object(map)
}

pub fn point_from_json(v: &Value, n: usize) -> Result<LatticePoint> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("lattice point must be an object, got {v}")))?;
    let idx = root_index(n);
    let mut point = vec![0u32; n * n];
    for (key, val) in obj {
        let b = PositiveRoot::from_key(key, n)?;
        let c = val
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("count for {key} must be a nonnegative integer")))?;
        point[idx[&b]] = c as u32;
    }
    Ok(point)
}

/// Multiplicities with a single fundamental weight.
pub fn fundamental(k: usize, n: usize) -> Vec<u32> {
    let mut m = vec![0; n];
    m[k - 1] = 1;
    m
}

/// Parse `"m1,m2,...,mn"` into multiplicities.
pub fn parse_mults(s: &str, n: usize) -> Result<Vec<u32>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(Error::LengthMismatch(parts.len(), n));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad multiplicity {p:?}")))
        })
        .collect()
}

/// Exact rational coordinates of a lattice point.
pub fn point_to_rat(point: &[u32]) -> Vec<Rat> {
    point.iter().map(|&x| rat(x as i64)).collect()
}
