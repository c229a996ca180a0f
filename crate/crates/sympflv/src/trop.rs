//! The tropical cone of the flag variety: the image of the degree cone
//! under the weight map into the space of tuple coordinates.
//!
//! The weight map is linear in the degree point: the coordinate at a tuple
//! is the signed degree of the pairing point of that tuple against the
//! initial tuple of the same size.  Its image is cut out by the left
//! kernel of the weight matrix; transporting each facet row of the degree
//! cone along the tuples `(1, ..., first-1, target)` of its roots yields
//! the inequality rows.  Each facet image carries an exchange-relation
//! certificate whose initial form degenerates to a single monomial exactly
//! when that facet image is violated.

use num::Zero;
use serde_json::{json, Value};

use crate::chart::initial_pairing;
use crate::cone::{ConeH, Row};
use crate::degree::{degree_cone, degree_of, facet_rows, DegreePoint, FacetId};
use crate::fflv::LatticePoint;
use crate::lie::{sigma_tuple, Letter};
use crate::linalg::kernel_basis;
use crate::plucker::{IndexTuple, PlueckerRing};
use crate::poly::Poly;
use crate::rat::{format_rat, parse_rat, rat, Rat};
use crate::{Error, Result};

/// Sign convention of the weight map and of the cone description.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SignConvention {
    /// Weights feed minimum-convention initial forms and the inequality
    /// rows read `>=`; the default.
    #[default]
    Min,
    /// The globally negated functional, for maximum-convention setups; the
    /// inequality rows flip accordingly.
    Negated,
}

impl SignConvention {
    fn factor(self) -> Rat {
        match self {
            SignConvention::Min => rat(1),
            SignConvention::Negated => rat(-1),
        }
    }
}

/// The pairing point of a tuple against the initial tuple of its size.
pub fn pairing_point(j: &IndexTuple, n: usize) -> LatticePoint {
    initial_pairing(j, n).expect("the initial tuple pairs with every tuple")
}

/// Matrix of the weight map: one row per ring tuple, one column per root;
/// the row of a tuple is its pairing point.
pub fn weight_matrix(ring: &PlueckerRing) -> Vec<Vec<Rat>> {
    ring.tuples()
        .iter()
        .map(|j| {
            pairing_point(j, ring.n())
                .iter()
                .map(|&x| rat(i64::from(x)))
                .collect()
        })
        .collect()
}

/// The weight map: coordinate at a tuple is the signed degree of its
/// pairing point.
pub fn tropical_point(
    d: &DegreePoint,
    ring: &PlueckerRing,
    sign: SignConvention,
) -> Result<Vec<Rat>> {
    let n = ring.n();
    if d.len() != n * n {
        return Err(Error::DimMismatch { expected: n * n, got: d.len() });
    }
    let f = sign.factor();
    Ok(ring
        .tuples()
        .iter()
        .map(|j| &f * degree_of(d, &pairing_point(j, n)))
        .collect())
}

/// Equality rows of the image of the weight map: a basis of the left
/// kernel of the weight matrix.
pub fn image_equalities(ring: &PlueckerRing) -> Vec<Row> {
    let w = weight_matrix(ring);
    let cols = ring.n() * ring.n();
    let transposed: Vec<Vec<Rat>> = (0..cols)
        .map(|c| w.iter().map(|row| row[c].clone()).collect())
        .collect();
    kernel_basis(&transposed, w.len())
        .into_iter()
        .map(|u| Row::eq(u, rat(0)))
        .collect()
}

/// The image of a facet row of the degree cone: each root coefficient is
/// transported to the coordinate of the tuple `(1, ..., first-1, target)`.
pub fn pushed_facet_row(row: &Row, ring: &PlueckerRing, sign: SignConvention) -> Row {
    let n = ring.n();
    let f = sign.factor();
    let mut coeffs = vec![rat(0); ring.tuples().len()];
    for (k, beta) in crate::lie::positive_roots(n).iter().enumerate() {
        if row.coeffs[k].is_zero() {
            continue;
        }
        let tuple = IndexTuple::new(sigma_tuple(*beta, n), n)
            .expect("letters of a transport tuple strictly increase");
        coeffs[ring.position(&tuple)] += &f * &row.coeffs[k];
    }
    Row::geq(coeffs, rat(0))
}

/// The inequality rows of the tropical cone: all facet rows transported.
pub fn image_inequalities(
    ring: &PlueckerRing,
    sign: SignConvention,
) -> Vec<(FacetId, Row)> {
    facet_rows(ring.n())
        .into_iter()
        .map(|(id, row)| (id, pushed_facet_row(&row, ring, sign)))
        .collect()
}

/// Pullback of a coordinate functional along the weight map: the row of
/// root coefficients whose degree functional it induces.
pub fn pull_back(coeffs: &[Rat], ring: &PlueckerRing) -> Vec<Rat> {
    let w = weight_matrix(ring);
    let dim = ring.n() * ring.n();
    (0..dim)
        .map(|c| {
            coeffs
                .iter()
                .zip(&w)
                .map(|(u, row)| u * &row[c])
                .sum()
        })
        .collect()
}

/// The tropical cone in H-form: image equalities plus transported facet
/// rows.
pub fn tropical_cone(ring: &PlueckerRing, sign: SignConvention) -> ConeH {
    let mut rows = image_equalities(ring);
    rows.extend(image_inequalities(ring, sign).into_iter().map(|(_, r)| r));
    ConeH::new(ring.tuples().len(), rows)
}

fn letter(code: usize, n: usize) -> Letter {
    Letter::from_code(code as u32, n).expect("code within the alphabet")
}

fn prefix(i: usize, n: usize) -> Vec<Letter> {
    (1..i).map(|v| letter(v, n)).collect()
}

fn var_with(ring: &PlueckerRing, base: &[Letter], extra: &[Letter]) -> Poly {
    let mut letters = base.to_vec();
    letters.extend_from_slice(extra);
    let tuple = IndexTuple::new(letters, ring.n())
        .expect("certificate tuples strictly increase");
    ring.var(&tuple)
}

/// The two letters beyond `i` and `i+1` entering the certificate of a
/// facet: consecutive codes determined by the family.
fn certificate_codes(id: FacetId, n: usize) -> (usize, usize, usize) {
    match id {
        FacetId::A(i) => (i, i + 2, 0),
        FacetId::B(i, j) => (i, j + 1, j + 2),
        FacetId::C(i, j) => (i, 2 * n - j, 2 * n + 1 - j),
        FacetId::D(i) => (i, 2 * n - i, 2 * n + 1 - i),
    }
}

/// The exchange relation certifying a facet image: a three-term relation
/// in the defining ideal whose initial form collapses to one monomial at
/// any image point violating exactly that facet image.
pub fn facet_relation(id: FacetId, ring: &PlueckerRing) -> Result<Poly> {
    let n = ring.n();
    let (i, c_code, d_code) = certificate_codes(id, n);
    if i + 1 > n {
        return Err(Error::BadRank("facet index out of range"));
    }
    let base = prefix(i, n);
    let a = letter(i, n);
    let b = letter(i + 1, n);
    let c = letter(c_code, n);
    if d_code == 0 {
        // sizes i and i+1: X_{A,a} X_{A,b,c} - X_{A,b} X_{A,a,c} + X_{A,c} X_{A,a,b}
        let t1 = var_with(ring, &base, &[a]).mul(&var_with(ring, &base, &[b, c]))?;
        let t2 = var_with(ring, &base, &[b]).mul(&var_with(ring, &base, &[a, c]))?;
        let t3 = var_with(ring, &base, &[c]).mul(&var_with(ring, &base, &[a, b]))?;
        t1.sub(&t2)?.add(&t3)
    } else {
        let d = letter(d_code, n);
        // X_{A,a,b} X_{A,c,d} - X_{A,a,c} X_{A,b,d} + X_{A,a,d} X_{A,b,c}
        let t1 = var_with(ring, &base, &[a, b]).mul(&var_with(ring, &base, &[c, d]))?;
        let t2 = var_with(ring, &base, &[a, c]).mul(&var_with(ring, &base, &[b, d]))?;
        let t3 = var_with(ring, &base, &[a, d]).mul(&var_with(ring, &base, &[b, c]))?;
        t1.sub(&t2)?.add(&t3)
    }
}

/// The single monomial surviving in the initial form of the facet relation
/// at a violating image point.
pub fn facet_certificate(id: FacetId, ring: &PlueckerRing) -> Result<Poly> {
    let n = ring.n();
    let (i, c_code, d_code) = certificate_codes(id, n);
    if i + 1 > n {
        return Err(Error::BadRank("facet index out of range"));
    }
    let base = prefix(i, n);
    let a = letter(i, n);
    let b = letter(i + 1, n);
    let c = letter(c_code, n);
    if d_code == 0 {
        Ok(var_with(ring, &base, &[b])
            .mul(&var_with(ring, &base, &[a, c]))?
            .neg())
    } else {
        let d = letter(d_code, n);
        var_with(ring, &base, &[a, d]).mul(&var_with(ring, &base, &[b, c]))
    }
}

/// An image point satisfying every row of the tropical cone except the
/// image of the named facet, which it violates strictly.
pub fn violating_point(
    id: FacetId,
    ring: &PlueckerRing,
    sign: SignConvention,
) -> Result<Vec<Rat>> {
    let n = ring.n();
    let rows = facet_rows(n);
    let at = rows
        .iter()
        .position(|(f, _)| *f == id)
        .ok_or(Error::BadRank("facet index out of range"))?;
    let witness = degree_cone(n).irredundancy_witness(at)?;
    tropical_point(&witness, ring, sign)
}

/// JSON object keyed by tuple names with rational values as strings.
pub fn trop_to_json(v: &[Rat], ring: &PlueckerRing) -> Value {
    let mut map = serde_json::Map::new();
    for (j, x) in ring.tuples().iter().zip(v) {
        map.insert(j.name(ring.n()), json!(format_rat(x)));
    }
    Value::Object(map)
}

pub fn trop_from_json(v: &Value, ring: &PlueckerRing) -> Result<Vec<Rat>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("tropical point must be an object, got {v}")))?;
    let mut out = vec![rat(0); ring.tuples().len()];
    for (key, val) in obj {
        let tuple = IndexTuple::from_name(key, ring.n())?;
        let s = val
            .as_str()
            .ok_or_else(|| Error::Parse(format!("value for {key} must be a string")))?;
        out[ring.position(&tuple)] = parse_rat(s)?;
    }
    Ok(out)
}
