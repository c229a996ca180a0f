//! The symplectic Lie algebra sp(2n): barred alphabet, positive roots,
//! root vectors, brackets and good orderings.
//!
//! Letters are `1 < 2 < ... < n < -n < ... < -1` where the negative sign is
//! the external form of a barred letter; internally a letter is its position
//! `1..=2n` in that order.  Rows and columns of all matrices are indexed by
//! letters in the same order.
//!
//! Positive roots come in two shapes: `Short(i, j)` is the interval root
//! `alpha_i + ... + alpha_j` for `1 <= i <= j <= n`, and `Barred(i, j)` for
//! `1 <= i <= j <= n-1` is the root whose support runs through `n` and back
//! to `j` (so `Barred(i, i)` is the long root `2 alpha_i + ... + alpha_n`
//! pattern).  A barred second index equal to `n` is identified with the
//! short root ending at `n`, and constructors canonicalize accordingly.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::{Error, Result};

/// One letter of the barred alphabet, stored as its position `1..=2n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u32);

impl Letter {
    pub fn from_code(code: u32, n: usize) -> Result<Letter> {
        if code >= 1 && code <= 2 * n as u32 {
            Ok(Letter(code))
        } else {
            Err(Error::BadLetter(code as i64, n))
        }
    }

    pub fn unbarred(i: usize, n: usize) -> Result<Letter> {
        if i >= 1 && i <= n {
            Ok(Letter(i as u32))
        } else {
            Err(Error::BadLetter(i as i64, n))
        }
    }

    pub fn barred(i: usize, n: usize) -> Result<Letter> {
        if i >= 1 && i <= n {
            Ok(Letter((2 * n + 1 - i) as u32))
        } else {
            Err(Error::BadLetter(-(i as i64), n))
        }
    }

    /// External form: `i` reads as the letter `i`, `-i` as the barred `i`.
    pub fn from_signed(v: i64, n: usize) -> Result<Letter> {
        if v > 0 && v <= n as i64 {
            Letter::unbarred(v as usize, n)
        } else if v < 0 && -v <= n as i64 {
            Letter::barred((-v) as usize, n)
        } else {
            Err(Error::BadLetter(v, n))
        }
    }

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_barred(self, n: usize) -> bool {
        self.0 > n as u32
    }

    /// The underlying value `i` of the letter `i` or barred `i`.
    pub fn value(self, n: usize) -> usize {
        if self.is_barred(n) {
            2 * n + 1 - self.0 as usize
        } else {
            self.0 as usize
        }
    }

    /// The bar involution.
    pub fn bar(self, n: usize) -> Letter {
        Letter((2 * n + 1) as u32 - self.0)
    }

    pub fn signed(self, n: usize) -> i64 {
        if self.is_barred(n) {
            -(self.value(n) as i64)
        } else {
            self.value(n) as i64
        }
    }

    /// Weight of the basis vector `e_letter` in epsilon coordinates.
    pub fn weight(self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        if self.is_barred(n) {
            w[self.value(n) - 1] = -1;
        } else {
            w[self.value(n) - 1] = 1;
        }
        w
    }
}

/// All `2n` letters in increasing order.
pub fn all_letters(n: usize) -> Vec<Letter> {
    (1..=2 * n as u32).map(Letter).collect()
}

/// A positive root of sp(2n).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PositiveRoot {
    /// `alpha_i + ... + alpha_j`, `1 <= i <= j <= n`.
    Short { i: usize, j: usize },
    /// The root through `n` ending at the barred `j`, `1 <= i <= j <= n-1`.
    Barred { i: usize, j: usize },
}

use PositiveRoot::{Barred, Short};

impl PositiveRoot {
    pub fn short(i: usize, j: usize, n: usize) -> Result<PositiveRoot> {
        if 1 <= i && i <= j && j <= n {
            Ok(Short { i, j })
        } else {
            Err(Error::BadRoot { i, j, barred: false, n })
        }
    }

    /// The root with a barred second index; `j = n` canonicalizes to the
    /// short root ending at `n`.
    pub fn barred(i: usize, j: usize, n: usize) -> Result<PositiveRoot> {
        if 1 <= i && i <= j && j <= n {
            if j == n {
                Ok(Short { i, j: n })
            } else {
                Ok(Barred { i, j })
            }
        } else {
            Err(Error::BadRoot { i, j, barred: true, n })
        }
    }

    pub fn first(self) -> usize {
        match self {
            Short { i, .. } | Barred { i, .. } => i,
        }
    }

    /// Second index as a letter (for barred roots the barred letter).
    pub fn second_letter(self, n: usize) -> Letter {
        match self {
            Short { j, .. } => Letter::unbarred(j, n).expect("valid root"),
            Barred { j, .. } => Letter::barred(j, n).expect("valid root"),
        }
    }

    /// Letter that `e_first` is mapped to by the root vector.
    pub fn target_letter(self, n: usize) -> Letter {
        match self {
            Short { j, .. } if j < n => Letter::unbarred(j + 1, n).expect("valid root"),
            Short { .. } => Letter::barred(n, n).expect("valid root"),
            Barred { j, .. } => Letter::barred(j, n).expect("valid root"),
        }
    }

    pub fn is_simple(self) -> bool {
        matches!(self, Short { i, j } if i == j)
    }

    /// Long roots other than the simple `alpha_n`: valid Dyck-path endpoints.
    pub fn is_long(self) -> bool {
        matches!(self, Barred { i, j } if i == j)
    }

    /// Coefficients over the simple roots `alpha_1, ..., alpha_n`.
    pub fn simple_coords(self, n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n];
        match self {
            Short { i, j } => {
                for k in i..=j {
                    c[k - 1] += 1;
                }
            }
            Barred { i, j } => {
                for k in i..=n {
                    c[k - 1] += 1;
                }
                for k in j..=n - 1 {
                    c[k - 1] += 1;
                }
            }
        }
        c
    }

    /// Coordinates in the epsilon basis.
    pub fn epsilon_coords(self, n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n];
        match self {
            Short { i, j } if j < n => {
                c[i - 1] += 1;
                c[j] -= 1;
            }
            Short { i, .. } => {
                c[i - 1] += 1;
                c[n - 1] += 1;
            }
            Barred { i, j } => {
                c[i - 1] += 1;
                c[j - 1] += 1;
            }
        }
        c
    }

    pub fn height(self, n: usize) -> i64 {
        self.simple_coords(n).iter().sum()
    }

    /// Dyck step increasing the second index within
    /// `1 < ... < n < barred(n-1) < ... < barred(1)`.
    pub fn incr_second(self, n: usize) -> Option<PositiveRoot> {
        match self {
            Short { i, j } if j < n => Some(Short { i, j: j + 1 }),
            Short { i, .. } => {
                if i < n {
                    Some(Barred { i, j: n - 1 })
                } else {
                    None
                }
            }
            Barred { i, j } if j > i => Some(Barred { i, j: j - 1 }),
            Barred { .. } => None,
        }
    }

    /// Dyck step increasing the first index.
    pub fn incr_first(self, _n: usize) -> Option<PositiveRoot> {
        match self {
            Short { i, j } if i < j => Some(Short { i: i + 1, j }),
            Barred { i, j } if i < j => Some(Barred { i: i + 1, j }),
            _ => None,
        }
    }

    /// Serialization key: `"i,j"` for short roots, `"i,-j"` for barred ones.
    pub fn key(self) -> String {
        match self {
            Short { i, j } => format!("{i},{j}"),
            Barred { i, j } => format!("{i},-{j}"),
        }
    }

    pub fn from_key(s: &str, n: usize) -> Result<PositiveRoot> {
        let bad = || Error::Parse(format!("bad root key {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let i: i64 = a.trim().parse().map_err(|_| bad())?;
        let j: i64 = b.trim().parse().map_err(|_| bad())?;
        if i <= 0 || j == 0 {
            return Err(bad());
        }
        if j > 0 {
            PositiveRoot::short(i as usize, j as usize, n)
        } else {
            PositiveRoot::barred(i as usize, (-j) as usize, n)
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            Short { i, j } => json!({ "i": i, "j": j, "barred": false }),
            Barred { i, j } => json!({ "i": i, "j": j, "barred": true }),
        }
    }

    pub fn from_json(v: &Value, n: usize) -> Result<PositiveRoot> {
        let bad = || Error::Parse(format!("bad root JSON {v}"));
        let i = v.get("i").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let j = v.get("j").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let barred = v.get("barred").and_then(Value::as_bool).ok_or_else(bad)?;
        if barred {
            PositiveRoot::barred(i, j, n)
        } else {
            PositiveRoot::short(i, j, n)
        }
    }
}

impl std::fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Short { i, j } => write!(f, "a({i},{j})"),
            Barred { i, j } => write!(f, "a({i},-{j})"),
        }
    }
}

/// All `n^2` positive roots in reading order: for each first index `i`, the
/// second index sweeps `i, ..., n, barred(n-1), ..., barred(i)`.
pub fn positive_roots(n: usize) -> Vec<PositiveRoot> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in i..=n {
            out.push(Short { i, j });
        }
        for j in (i..=n.saturating_sub(1)).rev() {
            out.push(Barred { i, j });
        }
    }
    out
}

/// Positions of the roots of [`positive_roots`] for vector indexing.
pub fn root_index(n: usize) -> BTreeMap<PositiveRoot, usize> {
    positive_roots(n)
        .into_iter()
        .enumerate()
        .map(|(k, b)| (b, k))
        .collect()
}

/// Root whose simple-root coordinates are `coords`, if any.
pub fn root_with_coords(coords: &[i64], n: usize) -> Option<PositiveRoot> {
    positive_roots(n)
        .into_iter()
        .find(|b| b.simple_coords(n) == coords)
}

/// Square integer matrices indexed by letters.
pub type IntMat = Vec<Vec<i64>>;

pub fn mat_zero(dim: usize) -> IntMat {
    vec![vec![0; dim]; dim]
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let dim = a.len();
    let mut out = mat_zero(dim);
    for r in 0..dim {
        for k in 0..dim {
            if a[r][k] == 0 {
                continue;
            }
            for c in 0..dim {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

pub fn mat_sub(a: &IntMat, b: &IntMat) -> IntMat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn commutator(a: &IntMat, b: &IntMat) -> IntMat {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

fn elem(dim: usize, row: Letter, col: Letter, val: i64) -> IntMat {
    let mut m = mat_zero(dim);
    m[(row.code() - 1) as usize][(col.code() - 1) as usize] = val;
    m
}

fn mat_add_into(a: &mut IntMat, b: &IntMat) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
}

/// The root vector `f_beta` as a `2n x 2n` matrix.
///
/// With `ub(i)`/`br(i)` the unbarred/barred letters, the table is:
/// short `(i, j)` with `j < n`: `E(ub(j+1), ub(i)) - E(br(i), br(j+1))`;
/// short `(i, n)` with `i < n`: `E(br(n), ub(i)) + E(br(i), ub(n))`;
/// the simple `(n, n)`: `E(br(n), ub(n))`;
/// long `Barred(i, i)`: `E(br(i), ub(i))`;
/// `Barred(i, j)` with `i < j`: `E(br(j), ub(i)) + E(br(i), ub(j))`.
pub fn root_vector(beta: PositiveRoot, n: usize) -> IntMat {
    let dim = 2 * n;
    let ub = |i: usize| Letter::unbarred(i, n).expect("valid letter");
    let br = |i: usize| Letter::barred(i, n).expect("valid letter");
    match beta {
        Short { i, j } if j < n => {
            let mut m = elem(dim, ub(j + 1), ub(i), 1);
            mat_add_into(&mut m, &elem(dim, br(i), br(j + 1), -1));
            m
        }
        Short { i, j: _ } if i < n => {
            let mut m = elem(dim, br(n), ub(i), 1);
            mat_add_into(&mut m, &elem(dim, br(i), ub(n), 1));
            m
        }
        Short { .. } => elem(dim, br(n), ub(n), 1),
        Barred { i, j } if i == j => elem(dim, br(i), ub(i), 1),
        Barred { i, j } => {
            let mut m = elem(dim, br(j), ub(i), 1);
            mat_add_into(&mut m, &elem(dim, br(i), ub(j), 1));
            m
        }
    }
}

/// The matrix of the symplectic form: antidiagonal `+1` in the upper right
/// block, `-1` in the lower left.
pub fn symplectic_form(n: usize) -> IntMat {
    let dim = 2 * n;
    let mut j = mat_zero(dim);
    for (r, row) in j.iter_mut().enumerate() {
        row[dim - 1 - r] = if r < n { 1 } else { -1 };
    }
    j
}

/// Membership test `X^t J + J X = 0`.
pub fn is_symplectic(x: &IntMat, n: usize) -> bool {
    let j = symplectic_form(n);
    let dim = 2 * n;
    let mut xt = mat_zero(dim);
    for r in 0..dim {
        for c in 0..dim {
            xt[c][r] = x[r][c];
        }
    }
    let lhs = mat_mul(&xt, &j);
    let rhs = mat_mul(&j, x);
    lhs.iter()
        .zip(&rhs)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(a, b)| a + b == 0))
}

/// Lie bracket of two root vectors.
///
/// Returns the scalar `c` and root `gamma` with
/// `[f_beta1, f_beta2] = c * f_gamma`, or `None` when the commutator
/// vanishes.  A nonzero commutator that is not proportional to a root vector
/// for `beta1 + beta2` signals a bug in the table and panics.
pub fn bracket(beta1: PositiveRoot, beta2: PositiveRoot, n: usize) -> Option<(i64, PositiveRoot)> {
    let c = commutator(&root_vector(beta1, n), &root_vector(beta2, n));
    if c.iter().all(|row| row.iter().all(|&x| x == 0)) {
        return None;
    }
    let mut sum = beta1.simple_coords(n);
    for (s, x) in sum.iter_mut().zip(beta2.simple_coords(n)) {
        *s += x;
    }
    let gamma = root_with_coords(&sum, n).unwrap_or_else(|| {
        panic!("nonzero commutator of {beta1} and {beta2} but their sum is not a root")
    });
    let fg = root_vector(gamma, n);
    let mut scalar = None;
    for r in 0..2 * n {
        for q in 0..2 * n {
            match (fg[r][q], c[r][q]) {
                (0, 0) => {}
                (0, _) | (_, 0) => {
                    panic!("commutator of {beta1} and {beta2} is not supported on f_{gamma}")
                }
                (g, x) => {
                    assert_eq!(x % g, 0, "non-integer proportionality");
                    let s = x / g;
                    match scalar {
                        None => scalar = Some(s),
                        Some(prev) => assert_eq!(
                            prev, s,
                            "commutator of {beta1} and {beta2} not proportional to f_{gamma}"
                        ),
                    }
                }
            }
        }
    }
    Some((scalar.expect("nonzero commutator"), gamma))
}

/// The structural pattern behind nonzero brackets.
///
/// Writing roots as pairs (first index, second letter), exactly two families
/// of pairs of positive roots have a nonzero bracket:
///
/// 1. the second letter of `a` is an unbarred `j < n` and `b` starts at
///    `j + 1`; the sum is the root (first of `a`, second letter of `b`);
/// 2. `a` ends at an unbarred `j < n` and `b` is the root ending at the
///    barred letter `j + 1` starting from some `k <= j + 1`; the sum is the
///    root through `n` joining the first indices of `a` and `b`.
///
/// Returns the sum root when `(a, b)` or `(b, a)` matches a family.
pub fn classify_bracket(a: PositiveRoot, b: PositiveRoot, n: usize) -> Option<PositiveRoot> {
    fn family(a: PositiveRoot, b: PositiveRoot, n: usize) -> Option<PositiveRoot> {
        let Short { i, j } = a else { return None };
        if j >= n {
            return None;
        }
        // family 1: b starts at j+1 (its second letter is then automatically
        // below the barred i, so the sum is a valid root)
        if b.first() == j + 1 {
            let res = match b {
                Short { j: l, .. } => PositiveRoot::short(i, l, n),
                Barred { j: m, .. } => PositiveRoot::barred(i, m, n),
            };
            return Some(res.expect("family-1 sum is a valid root"));
        }
        // family 2: b ends at the barred j+1, i.e. b = (k, barred(j+1))
        let k = b.first();
        if k <= j + 1 && b == PositiveRoot::barred(k, j + 1, n).expect("valid root") {
            let sum = PositiveRoot::barred(i.min(k), i.max(k), n);
            return Some(sum.expect("family-2 sum is a valid root"));
        }
        None
    }
    family(a, b, n).or_else(|| family(b, a, n))
}

/// Checks the defining property of a good ordering: whenever
/// `beta_a - beta_b` is a nonzero sum of positive roots, `a` comes first.
pub fn validate_good_sequence(seq: &[PositiveRoot], n: usize) -> Result<()> {
    let all: BTreeSet<_> = positive_roots(n).into_iter().collect();
    let got: BTreeSet<_> = seq.iter().copied().collect();
    if got != all || seq.len() != all.len() {
        return Err(Error::BadRank("sequence must enumerate every positive root once"));
    }
    let mut memo = BTreeMap::new();
    for (a, &ba) in seq.iter().enumerate() {
        for (b, &bb) in seq.iter().enumerate() {
            if a >= b {
                continue;
            }
            // a < b: beta_b - beta_a must not be a nonzero sum of positive roots
            let diff: Vec<i64> = bb
                .simple_coords(n)
                .iter()
                .zip(ba.simple_coords(n))
                .map(|(x, y)| x - y)
                .collect();
            if diff.iter().any(|&x| x != 0) && is_root_combination(&diff, n, &mut memo) {
                return Err(Error::NotGoodSequence { earlier: a + 1, later: b + 1 });
            }
        }
    }
    Ok(())
}

/// Can `v` be written as a sum of positive roots (the empty sum included)?
fn is_root_combination(v: &[i64], n: usize, memo: &mut BTreeMap<Vec<i64>, bool>) -> bool {
    if v.iter().any(|&x| x < 0) {
        return false;
    }
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&r) = memo.get(v) {
        return r;
    }
    let mut ok = false;
    for b in positive_roots(n) {
        let c = b.simple_coords(n);
        let rest: Vec<i64> = v.iter().zip(&c).map(|(x, y)| x - y).collect();
        if is_root_combination(&rest, n, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(v.to_vec(), ok);
    ok
}

/// The default good ordering: decreasing height, ties by `(i, j)`.
///
/// Heights strictly decrease along any positive-root difference, so this is
/// always a good ordering; at `n = 2` it reads
/// `(a(1,-1), a(1,2), a(1,1), a(2,2))`.
/// The positive root moving the smaller letter of a pair onto the larger
/// one in the vector representation; the pair must be strictly increasing
/// in the letter order.
pub fn pair_root(a: Letter, b: Letter, n: usize) -> Result<PositiveRoot> {
    if a.code() >= b.code() {
        return Err(Error::InvalidPairing(a.signed(n), b.signed(n)));
    }
    let (i, j) = (a.value(n), b.value(n));
    match (a.is_barred(n), b.is_barred(n)) {
        (false, false) => PositiveRoot::short(i, j - 1, n),
        (false, true) if j >= i => PositiveRoot::barred(i, j, n),
        (false, true) => PositiveRoot::barred(j, i, n),
        (true, true) => PositiveRoot::short(j, i - 1, n),
        (true, false) => unreachable!("barred letters follow unbarred ones"),
    }
}

/// Exponent vector (over the canonical root order) pairing two equal-size
/// letter tuples: entries common to both are dropped, the rest are matched
/// anti-diagonally.  Fails when some matched pair is not increasing.
pub fn pair_tuples(lhs: &[Letter], rhs: &[Letter], n: usize) -> Result<Vec<u32>> {
    if lhs.len() != rhs.len() {
        return Err(Error::LengthMismatch(lhs.len(), rhs.len()));
    }
    let left: Vec<Letter> = lhs
        .iter()
        .filter(|a| !rhs.contains(a))
        .copied()
        .collect();
    let right: Vec<Letter> = rhs
        .iter()
        .filter(|b| !lhs.contains(b))
        .copied()
        .collect();
    let index = root_index(n);
    let mut out = vec![0u32; n * n];
    let s = left.len();
    for (r, &p) in left.iter().enumerate() {
        let q = right[s - 1 - r];
        let root = pair_root(p, q, n)?;
        out[index[&root]] += 1;
    }
    Ok(out)
}

/// Tuple `(1, ..., first-1, target)` whose coordinate function pulls back
/// to evaluation at the root under the degree-to-tropical substitution.
pub fn sigma_tuple(beta: PositiveRoot, n: usize) -> Vec<Letter> {
    let mut out: Vec<Letter> = (1..beta.first())
        .map(|i| Letter::unbarred(i, n).expect("valid"))
        .collect();
    out.push(beta.target_letter(n));
    out
}

/// Simple-root coordinates of a weight given in epsilon coordinates;
/// `None` when the weight is not in the root lattice.
pub fn epsilon_to_simple(eps: &[i64], n: usize) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(n);
    let mut acc = 0i64;
    for (k, &e) in eps.iter().enumerate() {
        acc += e;
        if k + 1 < n {
            out.push(acc);
        } else if acc % 2 == 0 {
            out.push(acc / 2);
        } else {
            return None;
        }
    }
    Some(out)
}

pub fn default_good_sequence(n: usize) -> Vec<PositiveRoot> {
    let mut seq = positive_roots(n);
    seq.sort_by_key(|b| {
        let (i, j, barred) = match *b {
            Short { i, j } => (i, j, 0),
            Barred { i, j } => (i, j, 1),
        };
        (-b.height(n), i, barred, j)
    });
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_order_and_involution() {
        let n = 3;
        let ls = all_letters(n);
        assert_eq!(ls.len(), 6);
        let signed: Vec<i64> = ls.iter().map(|l| l.signed(n)).collect();
        assert_eq!(signed, vec![1, 2, 3, -3, -2, -1]);
        for l in ls {
            assert_eq!(l.bar(n).bar(n), l);
            assert_eq!(Letter::from_signed(l.signed(n), n).unwrap(), l);
        }
        assert!(Letter::from_signed(0, 3).is_err());
        assert!(Letter::from_signed(4, 3).is_err());
    }

    #[test]
    fn root_count_and_canonicalization() {
        for n in 2..=5 {
            let roots = positive_roots(n);
            assert_eq!(roots.len(), n * n);
            let set: BTreeSet<_> = roots.iter().copied().collect();
            assert_eq!(set.len(), n * n);
        }
        // barred second index n folds into the short root
        assert_eq!(
            PositiveRoot::barred(1, 2, 2).unwrap(),
            PositiveRoot::short(1, 2, 2).unwrap()
        );
        assert!(PositiveRoot::short(2, 1, 3).is_err());
        assert!(PositiveRoot::barred(3, 2, 3).is_err());
    }

    #[test]
    fn simple_coords_match_epsilon_coords() {
        // alpha_k = eps_k - eps_{k+1} for k < n, alpha_n = 2 eps_n
        for n in 2..=4 {
            for b in positive_roots(n) {
                let s = b.simple_coords(n);
                let mut eps = vec![0i64; n];
                for (k, &c) in s.iter().enumerate() {
                    if k + 1 < n {
                        eps[k] += c;
                        eps[k + 1] -= c;
                    } else {
                        eps[k] += 2 * c;
                    }
                }
                assert_eq!(eps, b.epsilon_coords(n), "root {b}");
            }
        }
    }

    #[test]
    fn root_vectors_are_symplectic_and_lower_triangular() {
        for n in 2..=4 {
            for b in positive_roots(n) {
                let m = root_vector(b, n);
                assert!(is_symplectic(&m, n), "f_{b} not in sp({})", 2 * n);
                for (r, row) in m.iter().enumerate() {
                    for &entry in &row[r..] {
                        assert_eq!(entry, 0, "f_{b} not strictly lower triangular");
                    }
                }
                assert!(m.iter().flatten().any(|&x| x != 0));
            }
        }
    }

    #[test]
    fn root_vectors_for_rank_two() {
        let n = 2;
        // f for a(1,-1) = E(row -1, col 1): codes row 4 col 1
        let f = root_vector(PositiveRoot::barred(1, 1, n).unwrap(), n);
        assert_eq!(f[3][0], 1);
        assert_eq!(f.iter().flatten().filter(|&&x| x != 0).count(), 1);
        // f for a(1,1) = E(2,1) - E(-1,-2): rows/cols (2,1) and (4,3)
        let f = root_vector(PositiveRoot::short(1, 1, n).unwrap(), n);
        assert_eq!(f[1][0], 1);
        assert_eq!(f[3][2], -1);
        // f for a(1,2) = E(-2,1) + E(-1,2): rows/cols (3,1) and (4,2)
        let f = root_vector(PositiveRoot::short(1, 2, n).unwrap(), n);
        assert_eq!(f[2][0], 1);
        assert_eq!(f[3][1], 1);
        // f for a(2,2) = E(-2,2)
        let f = root_vector(PositiveRoot::short(2, 2, n).unwrap(), n);
        assert_eq!(f[2][1], 1);
    }

    #[test]
    fn bracket_examples_rank_two() {
        let n = 2;
        let a11 = PositiveRoot::short(1, 1, n).unwrap();
        let a22 = PositiveRoot::short(2, 2, n).unwrap();
        let a12 = PositiveRoot::short(1, 2, n).unwrap();
        let a11bar = PositiveRoot::barred(1, 1, n).unwrap();

        let (c, g) = bracket(a11, a22, n).unwrap();
        assert_eq!(g, a12);
        assert_eq!(c, -1);

        // sum of a(1,2) and a(1,-1) is not a root
        assert!(bracket(a12, a11bar, n).is_none());

        let (c, g) = bracket(a11, a12, n).unwrap();
        assert_eq!(g, a11bar);
        assert_eq!(c, -2);
    }

    #[test]
    fn brackets_follow_the_two_family_pattern() {
        for n in 2..=4 {
            for a in positive_roots(n) {
                for b in positive_roots(n) {
                    if a == b {
                        continue;
                    }
                    let br = bracket(a, b, n);
                    let cl = classify_bracket(a, b, n);
                    match (br, cl) {
                        (None, None) => {}
                        (Some((_, g)), Some(h)) => assert_eq!(g, h, "[f_{a}, f_{b}]"),
                        (got, want) => {
                            panic!("[f_{a}, f_{b}]: bracket {got:?} vs classification {want:?}")
                        }
                    }
                    // bracket is nonzero iff the sum is a positive root
                    let mut sum = a.simple_coords(n);
                    for (s, x) in sum.iter_mut().zip(b.simple_coords(n)) {
                        *s += x;
                    }
                    assert_eq!(br.is_some(), root_with_coords(&sum, n).is_some());
                }
            }
        }
    }

    #[test]
    fn default_sequence_is_good_and_matches_rank_two_choice() {
        for n in 2..=4 {
            let seq = default_good_sequence(n);
            validate_good_sequence(&seq, n).unwrap();
        }
        let seq = default_good_sequence(2);
        assert_eq!(
            seq,
            vec![
                PositiveRoot::barred(1, 1, 2).unwrap(),
                PositiveRoot::short(1, 2, 2).unwrap(),
                PositiveRoot::short(1, 1, 2).unwrap(),
                PositiveRoot::short(2, 2, 2).unwrap(),
            ]
        );
    }

    #[test]
    fn reversed_sequence_is_rejected() {
        let mut seq = default_good_sequence(2);
        seq.reverse();
        assert!(matches!(
            validate_good_sequence(&seq, 2),
            Err(Error::NotGoodSequence { .. })
        ));
    }

    #[test]
    fn root_keys_round_trip() {
        for n in 2..=4 {
            for b in positive_roots(n) {
                assert_eq!(PositiveRoot::from_key(&b.key(), n).unwrap(), b);
                assert_eq!(PositiveRoot::from_json(&b.to_json(), n).unwrap(), b);
            }
        }
        // the key "1,-3" at n = 3 canonicalizes to the short root (1,3)
        assert_eq!(
            PositiveRoot::from_key("1,-3", 3).unwrap(),
            PositiveRoot::short(1, 3, 3).unwrap()
        );
    }

    #[test]
    fn pair_root_covers_all_four_letter_shapes() {
        let n = 3;
        let ub = |i| Letter::unbarred(i, n).unwrap();
        let br = |i| Letter::barred(i, n).unwrap();
        assert_eq!(
            pair_root(ub(1), ub(3), n).unwrap(),
            PositiveRoot::short(1, 2, n).unwrap()
        );
        assert_eq!(
            pair_root(ub(2), br(3), n).unwrap(),
            PositiveRoot::short(2, 3, n).unwrap()
        );
        assert_eq!(
            pair_root(ub(2), br(2), n).unwrap(),
            PositiveRoot::barred(2, 2, n).unwrap()
        );
        assert_eq!(
            pair_root(ub(3), br(1), n).unwrap(),
            PositiveRoot::barred(1, 3, n).unwrap()
        );
        assert_eq!(
            pair_root(br(3), br(1), n).unwrap(),
            PositiveRoot::short(1, 2, n).unwrap()
        );
        assert!(matches!(
            pair_root(br(1), ub(1), n),
            Err(Error::InvalidPairing(..))
        ));
    }

    #[test]
    fn pair_root_moves_the_smaller_letter_onto_the_larger() {
        // the paired root's vector action sends e_a to plus/minus e_b
        for n in 2..=3 {
            let letters = all_letters(n);
            for (ai, &a) in letters.iter().enumerate() {
                for &b in &letters[ai + 1..] {
                    let root = pair_root(a, b, n).unwrap();
                    let m = root_vector(root, n);
                    let col = (a.code() - 1) as usize;
                    let row = (b.code() - 1) as usize;
                    assert_ne!(
                        m[row][col],
                        0,
                        "n={n} {} -> {} via {root}",
                        a.signed(n),
                        b.signed(n)
                    );
                }
            }
        }
    }

    #[test]
    fn tuple_pairing_matches_hand_worked_cases() {
        let n = 2;
        let ub = |i| Letter::unbarred(i, n).unwrap();
        let br = |i| Letter::barred(i, n).unwrap();
        let index = root_index(n);
        // ([1,2], (2bar,1bar)) pairs (1,1bar) and (2,2bar)
        let s = pair_tuples(&[ub(1), ub(2)], &[br(2), br(1)], n).unwrap();
        let mut want = vec![0u32; 4];
        want[index[&PositiveRoot::barred(1, 1, n).unwrap()]] = 1;
        want[index[&PositiveRoot::short(2, 2, n).unwrap()]] = 1;
        assert_eq!(s, want);
        // common letters cancel before pairing
        let s = pair_tuples(&[ub(1), ub(2)], &[ub(1), br(2)], n).unwrap();
        let mut want = vec![0u32; 4];
        want[index[&PositiveRoot::short(2, 2, n).unwrap()]] = 1;
        assert_eq!(s, want);
        // anti-diagonal matching can demand a decreasing pair: an error
        assert!(pair_tuples(&[ub(1), br(2)], &[ub(2), br(1)], n).is_err());
    }

    #[test]
    fn sigma_tuples_follow_the_target_letter() {
        let n = 2;
        let sig = |r: PositiveRoot| -> Vec<i64> {
            sigma_tuple(r, n).iter().map(|l| l.signed(n)).collect()
        };
        assert_eq!(sig(PositiveRoot::short(1, 1, n).unwrap()), vec![2]);
        assert_eq!(sig(PositiveRoot::short(1, 2, n).unwrap()), vec![-2]);
        assert_eq!(sig(PositiveRoot::barred(1, 1, n).unwrap()), vec![-1]);
        assert_eq!(sig(PositiveRoot::short(2, 2, n).unwrap()), vec![1, -2]);
    }

    #[test]
    fn epsilon_simple_conversion_round_trips_roots() {
        for n in 2..=4 {
            for beta in positive_roots(n) {
                let eps = beta.epsilon_coords(n);
                assert_eq!(
                    epsilon_to_simple(&eps, n),
                    Some(beta.simple_coords(n)),
                    "{beta}"
                );
            }
        }
        // odd epsilon sums are outside the root lattice
        assert_eq!(epsilon_to_simple(&[1, 0], 2), None);
    }
}
