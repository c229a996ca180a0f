//! The degree cone on the span of the positive roots: facet description,
//! derived inequalities with certificates, filtration degrees of monomials
//! in root vectors, degenerate brackets, and deterministic sampling.
//!
//! A degree point assigns a rational value `d_beta` to every positive root;
//! coordinates follow [`crate::lie::positive_roots`].  The cone is cut out
//! by `n(n-1)` facet inequalities and contains an `n`-dimensional lineality
//! space spanned by the simple-root multiplicity functionals.

use std::fmt;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};

use crate::cone::{ConeH, Rel, Row};
use crate::lie::{positive_roots, root_index, PositiveRoot};
use crate::linalg;
use crate::rat::{format_rat, parse_rat, rat, Rat};
use crate::{Error, Result};

/// A rational value per positive root, in reading order.
pub type DegreePoint = Vec<Rat>;

/// Identifier of a facet row of the degree cone.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FacetId {
    /// `d(i,i) + d(i+1,i+1) - d(i,i+1) >= 0` for `1 <= i <= n-1`.
    A(usize),
    /// `d(i,j) + d(i+1,j+1) - d(i,j+1) - d(i+1,j) >= 0` for `i < j <= n-1`.
    B(usize, usize),
    /// `d(i,-(j+1)) + d(i+1,-j) - d(i,-j) - d(i+1,-(j+1)) >= 0`
    /// for `i < j <= n-1`.
    C(usize, usize),
    /// `2 d(i,-(i+1)) - d(i,-i) - d(i+1,-(i+1)) >= 0` for `1 <= i <= n-1`.
    D(usize),
}

impl fmt::Display for FacetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetId::A(i) => write!(f, "A({i})"),
            FacetId::B(i, j) => write!(f, "B({i},{j})"),
            FacetId::C(i, j) => write!(f, "C({i},{j})"),
            FacetId::D(i) => write!(f, "D({i})"),
        }
    }
}

fn functional(terms: &[(PositiveRoot, i64)], n: usize) -> Row {
    let idx = root_index(n);
    let mut c = vec![rat(0); n * n];
    for &(b, w) in terms {
        c[idx[&b]] += rat(w);
    }
    Row::geq(c, rat(0))
}

fn short(i: usize, j: usize, n: usize) -> PositiveRoot {
    PositiveRoot::short(i, j, n).expect("index range is checked by the caller")
}

fn barred(i: usize, j: usize, n: usize) -> PositiveRoot {
    PositiveRoot::barred(i, j, n).expect("index range is checked by the caller")
}

/// The facet rows in canonical order: all `A`, then `B`, `C`, `D`.
pub fn facet_rows(n: usize) -> Vec<(FacetId, Row)> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push((
            FacetId::A(i),
            functional(
                &[(short(i, i, n), 1), (short(i + 1, i + 1, n), 1), (short(i, i + 1, n), -1)],
                n,
            ),
        ));
    }
    for i in 1..n {
        for j in i + 1..n {
            out.push((
                FacetId::B(i, j),
                functional(
                    &[
                        (short(i, j, n), 1),
                        (short(i + 1, j + 1, n), 1),
                        (short(i, j + 1, n), -1),
                        (short(i + 1, j, n), -1),
                    ],
                    n,
                ),
            ));
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            out.push((
                FacetId::C(i, j),
                functional(
                    &[
                        (barred(i, j + 1, n), 1),
                        (barred(i + 1, j, n), 1),
                        (barred(i, j, n), -1),
                        (barred(i + 1, j + 1, n), -1),
                    ],
                    n,
                ),
            ));
        }
    }
    for i in 1..n {
        out.push((
            FacetId::D(i),
            functional(
                &[
                    (barred(i, i + 1, n), 2),
                    (barred(i, i, n), -1),
                    (barred(i + 1, i + 1, n), -1),
                ],
                n,
            ),
        ));
    }
    out
}

/// The degree cone in H-form.
pub fn degree_cone(n: usize) -> ConeH {
    ConeH::new(n * n, facet_rows(n).into_iter().map(|(_, r)| r).collect())
}

/// Basis of the lineality space: for each simple root index `k`, the vector
/// assigning to every root its multiplicity of the `k`-th simple root.
pub fn lineality_basis(n: usize) -> Vec<Vec<Rat>> {
    (1..=n)
        .map(|k| {
            positive_roots(n)
                .iter()
                .map(|b| rat(b.simple_coords(n)[k - 1]))
                .collect()
        })
        .collect()
}

/// Identifier of a derived inequality valid on the degree cone.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum DerivedId {
    A(usize, usize, usize),
    B(usize, usize, usize, usize),
    C(usize, usize, usize, usize),
    D(usize, usize),
    E(usize, usize, usize),
    F(usize, usize, usize),
    G(usize, usize, usize, usize),
    H(usize, usize, usize, usize),
}

impl fmt::Display for DerivedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivedId::A(i, j, k) => write!(f, "A({i},{j},{k})"),
            DerivedId::B(i, j, k, l) => write!(f, "B({i},{j},{k},{l})"),
            DerivedId::C(i, j, k, l) => write!(f, "C({i},{j},{k},{l})"),
            DerivedId::D(i, j) => write!(f, "D({i},{j})"),
            DerivedId::E(i, j, k) => write!(f, "E({i},{j},{k})"),
            DerivedId::F(i, j, k) => write!(f, "F({i},{j},{k})"),
            DerivedId::G(i, j, k, l) => write!(f, "G({i},{j},{k},{l})"),
            DerivedId::H(i, j, k, l) => write!(f, "H({i},{j},{k},{l})"),
        }
    }
}

/// The eight families of derived inequalities with their exact index ranges.
pub fn derived_rows(n: usize) -> Vec<(DerivedId, Row)> {
    let mut out = Vec::new();
    // A(i,j,k): d(i,j) + d(j+1,k) >= d(i,k) for 1 <= i <= j < k <= n
    for i in 1..=n {
        for j in i..=n {
            for k in j + 1..=n {
                out.push((
                    DerivedId::A(i, j, k),
                    functional(
                        &[(short(i, j, n), 1), (short(j + 1, k, n), 1), (short(i, k, n), -1)],
                        n,
                    ),
                ));
            }
        }
    }
    // B(i,j,k,l): d(i,j) + d(k,l) >= d(i,l) + d(k,j) for 1 <= i < k <= j < l <= n
    for i in 1..=n {
        for k in i + 1..=n {
            for j in k..=n {
                for l in j + 1..=n {
                    out.push((
                        DerivedId::B(i, j, k, l),
                        functional(
                            &[
                                (short(i, j, n), 1),
                                (short(k, l, n), 1),
                                (short(i, l, n), -1),
                                (short(k, j, n), -1),
                            ],
                            n,
                        ),
                    ));
                }
            }
        }
    }
    // C(i,j,k,l): d(i,-l) + d(k,-j) >= d(i,-j) + d(k,-l), same range as B
    for i in 1..=n {
        for k in i + 1..=n {
            for j in k..=n {
                for l in j + 1..=n {
                    out.push((
                        DerivedId::C(i, j, k, l),
                        functional(
                            &[
                                (barred(i, l, n), 1),
                                (barred(k, j, n), 1),
                                (barred(i, j, n), -1),
                                (barred(k, l, n), -1),
                            ],
                            n,
                        ),
                    ));
                }
            }
        }
    }
    // D(i,j): 2 d(i,-j) >= d(i,-i) + d(j,-j) for 1 <= i < j <= n
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((
                DerivedId::D(i, j),
                functional(
                    &[(barred(i, j, n), 2), (barred(i, i, n), -1), (barred(j, j, n), -1)],
                    n,
                ),
            ));
        }
    }
    // E(i,j,k): d(i,j) + d(k,-(j+1)) >= d(i,-k) for 1 <= i <= j <= n-1, i <= k <= j+1
    for i in 1..=n {
        for j in i..n {
            for k in i..=j + 1 {
                out.push((
                    DerivedId::E(i, j, k),
                    functional(
                        &[(short(i, j, n), 1), (barred(k, j + 1, n), 1), (barred(i, k, n), -1)],
                        n,
                    ),
                ));
            }
        }
    }
    // F(i,j,k): d(i,j) + d(j+1,-k) >= d(i,-k) for 1 <= i <= j < k <= n
    for i in 1..=n {
        for j in i..=n {
            for k in j + 1..=n {
                out.push((
                    DerivedId::F(i, j, k),
                    functional(
                        &[(short(i, j, n), 1), (barred(j + 1, k, n), 1), (barred(i, k, n), -1)],
                        n,
                    ),
                ));
            }
        }
    }
    // G(i,j,k,l): d(i,-j) + d(k,-l) >= d(i,-k) + d(j,-l), range of B
    for i in 1..=n {
        for k in i + 1..=n {
            for j in k..=n {
                for l in j + 1..=n {
                    out.push((
                        DerivedId::G(i, j, k, l),
                        functional(
                            &[
                                (barred(i, j, n), 1),
                                (barred(k, l, n), 1),
                                (barred(i, k, n), -1),
                                (barred(j, l, n), -1),
                            ],
                            n,
                        ),
                    ));
                }
            }
        }
    }
    // H(i,j,k,l): d(i,-l) + d(k,-j) >= d(i,-k) + d(j,-l), range of B
    for i in 1..=n {
        for k in i + 1..=n {
            for j in k..=n {
                for l in j + 1..=n {
                    out.push((
                        DerivedId::H(i, j, k, l),
                        functional(
                            &[
                                (barred(i, l, n), 1),
                                (barred(k, j, n), 1),
                                (barred(i, k, n), -1),
                                (barred(j, l, n), -1),
                            ],
                            n,
                        ),
                    ));
                }
            }
        }
    }
    out
}

/// Expresses a row as a nonnegative combination of the facet rows.
///
/// The facet rows are linearly independent, so if the functional lies in
/// their span the representation is unique; returns its coefficients when
/// they are all nonnegative.
pub fn facet_combination(n: usize, row: &Row) -> Option<Vec<Rat>> {
    let facets = facet_rows(n);
    let dim = n * n;
    // columns = facets, rows = coordinates
    let a: Vec<Vec<Rat>> = (0..dim)
        .map(|c| facets.iter().map(|(_, f)| f.coeffs[c].clone()).collect())
        .collect();
    let sol = linalg::solve(&a, &row.coeffs, facets.len())?;
    if sol.iter().all(|c| c >= &rat(0)) {
        Some(sol)
    } else {
        None
    }
}

/// Filtration degree of a monomial in root vectors: the weighted sum of the
/// exponents against the degree point.
pub fn degree_of(d: &[Rat], point: &[u32]) -> Rat {
    d.iter()
        .zip(point)
        .map(|(w, &e)| w * rat(e as i64))
        .sum()
}

/// Does the bracket of the two root vectors vanish in the associated graded
/// algebra of the degree point?
///
/// It vanishes when the sum is not a root (the bracket is already zero) or
/// when the degrees drop strictly; it survives exactly when the degrees add.
pub fn degenerate_bracket_vanishes(
    d: &[Rat],
    b1: PositiveRoot,
    b2: PositiveRoot,
    n: usize,
) -> bool {
    let mut sum = b1.simple_coords(n);
    for (s, x) in sum.iter_mut().zip(b2.simple_coords(n)) {
        *s += x;
    }
    let Some(gamma) = crate::lie::root_with_coords(&sum, n) else {
        return true;
    };
    let idx = root_index(n);
    &d[idx[&b1]] + &d[idx[&b2]] > d[idx[&gamma]]
}

fn random_integer_vector(dim: usize, rng: &mut ChaCha20Rng) -> Vec<Rat> {
    (0..dim).map(|_| rat(rng.gen_range(-20i64..=20))).collect()
}

/// Deterministic interior samples: a random integer vector pushed into the
/// interior along an exact strictly-feasible direction.
pub fn interior_points(n: usize, count: usize, seed: u64) -> Result<Vec<DegreePoint>> {
    let cone = degree_cone(n);
    let s0 = cone.strict_point()?;
    let rows = facet_rows(n);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d0 = random_integer_vector(n * n, &mut rng);
        let mut t = rat(1);
        for (_, row) in &rows {
            let v0 = row.eval(&d0);
            let vs = row.eval(&s0);
            // need v0 + t vs > 0 with vs > 0
            let need = (-v0 / &vs) + rat(1);
            if need > t {
                t = need;
            }
        }
        let p: Vec<Rat> = d0
            .iter()
            .zip(&s0)
            .map(|(a, b)| a + &t * b)
            .collect();
        debug_assert!(rows.iter().all(|(_, r)| r.eval(&p) > rat(0)));
        out.push(p);
    }
    Ok(out)
}

/// Deterministic samples on a single facet: tight on the chosen row and
/// strictly inside every other one.
pub fn boundary_points(
    n: usize,
    facet: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<DegreePoint>> {
    let rows = facet_rows(n);
    if facet >= rows.len() {
        return Err(Error::BadRank("facet index out of range"));
    }
    // cone with the chosen row as an equality
    let relaxed = ConeH::new(
        n * n,
        rows.iter()
            .enumerate()
            .map(|(k, (_, r))| {
                let mut row = r.clone();
                if k == facet {
                    row.rel = Rel::Eq;
                }
                row
            })
            .collect(),
    );
    let sf = relaxed.strict_point()?;
    let target = &rows[facet].1;
    // unit-effect direction for the chosen functional
    let pivot = target
        .coeffs
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::BadRank("facet row must be nonzero"))?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut d0 = random_integer_vector(n * n, &mut rng);
        // cancel the target functional exactly
        let excess = target.eval(&d0) / &target.coeffs[pivot];
        d0[pivot] -= excess;
        let mut t = rat(1);
        for (k, (_, row)) in rows.iter().enumerate() {
            if k == facet {
                continue;
            }
            let need = (-row.eval(&d0) / row.eval(&sf)) + rat(1);
            if need > t {
                t = need;
            }
        }
        let p: Vec<Rat> = d0.iter().zip(&sf).map(|(a, b)| a + &t * b).collect();
        debug_assert!(target.eval(&p).is_zero());
        out.push(p);
    }
    Ok(out)
}

/// JSON object keyed by root keys with rational values as strings.
pub fn degree_to_json(d: &[Rat], n: usize) -> Value {
    let mut map = serde_json::Map::new();
    for (b, k) in root_index(n) {
        map.insert(b.key(), json!(format_rat(&d[k])));
    }
    Value::Object(map)
}

/// Accepts values as strings (`"3"`, `"1/2"`) or JSON integers; missing
/// roots default to zero, unknown keys are rejected.
pub fn degree_from_json(v: &Value, n: usize) -> Result<DegreePoint> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("degree point must be an object, got {v}")))?;
    let idx = root_index(n);
    let mut d = vec![rat(0); n * n];
    for (key, val) in obj {
        let b = PositiveRoot::from_key(key, n)?;
        let r = match val {
            Value::Number(x) => x
                .as_i64()
                .map(rat)
                .ok_or_else(|| Error::Parse(format!("value for {key} must be exact")))?,
            Value::String(s) => parse_rat(s)?,
            other => return Err(Error::Parse(format!("bad value for {key}: {other}"))),
        };
        d[idx[&b]] = r;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::Position;

    /// Interior point used throughout the rank-two walkthrough:
    /// `d(1,1) = 3, d(1,2) = 2, d(1,-1) = 1, d(2,2) = 1`.
    pub fn example_point_rank_two() -> DegreePoint {
        vec![rat(3), rat(2), rat(1), rat(1)]
    }

    #[test]
    fn facet_rows_rank_two() {
        let rows = facet_rows(2);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].0, FacetId::A(1));
        // coords in order a(1,1), a(1,2), a(1,-1), a(2,2)
        assert_eq!(rows[0].1.coeffs, vec![rat(1), rat(-1), rat(0), rat(1)]);
        assert_eq!(rows[1].0, FacetId::D(1));
        assert_eq!(rows[1].1.coeffs, vec![rat(0), rat(2), rat(-1), rat(-1)]);
    }

    #[test]
    fn facet_count_and_simpliciality() {
        for n in 2..=5 {
            let rows = facet_rows(n);
            assert_eq!(rows.len(), n * (n - 1));
            let coeffs: Vec<Vec<Rat>> = rows.iter().map(|(_, r)| r.coeffs.clone()).collect();
            assert_eq!(linalg::rank(&coeffs), n * (n - 1), "facets independent at n = {n}");
        }
    }

    #[test]
    fn lineality_is_annihilated_by_facets() {
        for n in 2..=4 {
            let lin = lineality_basis(n);
            assert_eq!(lin.len(), n);
            assert_eq!(linalg::rank(&lin), n);
            for (id, row) in facet_rows(n) {
                for v in &lin {
                    assert!(row.eval(v).is_zero(), "facet {id} at n = {n}");
                }
            }
        }
    }

    #[test]
    fn example_point_is_interior() {
        let cone = degree_cone(2);
        assert_eq!(cone.membership(&example_point_rank_two()), Position::Interior);
        // moving to the A(1) boundary: d(1,2) = 4 makes A(1) tight
        let boundary = vec![rat(3), rat(4), rat(1), rat(1)];
        assert_eq!(cone.membership(&boundary), Position::Boundary);
        let outside = vec![rat(3), rat(5), rat(1), rat(1)];
        assert_eq!(cone.membership(&outside), Position::Outside);
    }

    #[test]
    fn derived_rows_rank_two() {
        let rows = derived_rows(2);
        let ids: Vec<DerivedId> = rows.iter().map(|(id, _)| *id).collect();
        assert_eq!(
            ids,
            vec![
                DerivedId::A(1, 1, 2),
                DerivedId::D(1, 2),
                DerivedId::E(1, 1, 1),
                DerivedId::E(1, 1, 2),
                DerivedId::F(1, 1, 2),
            ]
        );
        // E(1,1,1) reads d(1,1) + d(1,2) >= d(1,-1)
        let e111 = &rows[2].1;
        assert_eq!(e111.coeffs, vec![rat(1), rat(1), rat(-1), rat(0)]);
    }

    #[test]
    fn derived_rows_have_nonnegative_certificates() {
        for n in 2..=4 {
            for (id, row) in derived_rows(n) {
                let cert = facet_combination(n, &row);
                assert!(cert.is_some(), "derived {id} at n = {n} has no certificate");
            }
        }
    }

    #[test]
    fn e111_certificate_is_a_plus_d() {
        let rows = derived_rows(2);
        let e111 = &rows[2].1;
        let cert = facet_combination(2, e111).unwrap();
        assert_eq!(cert, vec![rat(1), rat(1)]);
    }

    #[test]
    fn derived_rows_strict_on_sampled_interior() {
        // G with equal middle indices collapses to the zero functional; all
        // other derived rows are strict on the interior
        for n in 2..=3 {
            for d in interior_points(n, 10, 7).unwrap() {
                for (id, row) in derived_rows(n) {
                    if row.coeffs.iter().all(Zero::is_zero) {
                        assert!(matches!(id, DerivedId::G(_, j, k, _) if j == k));
                        continue;
                    }
                    assert!(row.eval(&d) > rat(0), "derived {id} at n = {n}");
                }
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_and_feasible() {
        let a = interior_points(3, 5, 42).unwrap();
        let b = interior_points(3, 5, 42).unwrap();
        assert_eq!(a, b);
        let c = interior_points(3, 5, 43).unwrap();
        assert_ne!(a, c);
        let cone = degree_cone(3);
        for d in &a {
            assert_eq!(cone.membership(d), Position::Interior);
        }
    }

    #[test]
    fn boundary_sampling_is_tight_on_one_facet() {
        for n in 2..=3 {
            let rows = facet_rows(n);
            for facet in 0..rows.len() {
                for d in boundary_points(n, facet, 3, 11).unwrap() {
                    for (k, (id, row)) in rows.iter().enumerate() {
                        let v = row.eval(&d);
                        if k == facet {
                            assert!(v.is_zero(), "row {id} should be tight");
                        } else {
                            assert!(v > rat(0), "row {id} should be strict");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn irredundancy_witnesses_exist() {
        for n in 2..=3 {
            let cone = degree_cone(n);
            for k in 0..cone.rows.len() {
                let w = cone.irredundancy_witness(k).unwrap();
                assert!(cone.rows[k].eval(&w) < rat(0));
            }
        }
    }

    #[test]
    fn degenerate_brackets_at_the_example_point() {
        let n = 2;
        let d = example_point_rank_two();
        let a11 = PositiveRoot::short(1, 1, n).unwrap();
        let a12 = PositiveRoot::short(1, 2, n).unwrap();
        let a22 = PositiveRoot::short(2, 2, n).unwrap();
        // E(1,1,1) is strict at the interior point: the bracket dies
        assert!(degenerate_bracket_vanishes(&d, a11, a12, n));
        // sum of a(1,2) and a(2,2) is not a root: nothing survives
        assert!(degenerate_bracket_vanishes(&d, a12, a22, n));
        // on the lineality space every degree adds exactly: brackets survive
        let lin = &lineality_basis(n)[0];
        assert!(!degenerate_bracket_vanishes(lin, a11, a12, n));
        assert!(!degenerate_bracket_vanishes(lin, a11, a22, n));
    }

    #[test]
    fn degree_of_weights_monomials() {
        let d = example_point_rank_two();
        // exponent 1 on a(1,1) and 2 on a(2,2)
        let point = vec![1u32, 0, 0, 2];
        assert_eq!(degree_of(&d, &point), rat(5));
    }

    #[test]
    fn degree_json_round_trip() {
        let n = 2;
        let d = example_point_rank_two();
        let v = degree_to_json(&d, n);
        assert_eq!(degree_from_json(&v, n).unwrap(), d);
        // numbers are accepted, and the short key for the root through n
        // canonicalizes
        let alt = json!({ "1,1": 3, "1,-2": "2", "1,-1": "1", "2,2": 1 });
        assert_eq!(degree_from_json(&alt, n).unwrap(), d);
        assert!(degree_from_json(&json!({ "1,1": 0.5 }), n).is_err());
    }
}
