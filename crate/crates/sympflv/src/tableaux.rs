//! Symplectic PBW tableaux and their bijection with lattice points.
//!
//! A dominant weight becomes a partition, its Young diagram is filled
//! column by column with barred letters subject to the PBW conditions, and
//! each column is sent to a lattice point by pairing its content with the
//! initial tuple.  Column-wise summation turns this into a bijection
//! between semistandard fillings and the lattice points of the polytope of
//! the weight; the inverse peels a point into fundamental points and
//! rebuilds one strip per peel from the support antichain.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::fflv::{fundamental, polytope_contains, standard_decomposition, LatticePoint};
use crate::lie::{pair_tuples, positive_roots, Letter};
use crate::plucker::IndexTuple;
use crate::{Error, Result};

/// Column lengths of the Young diagram of a dominant weight, left to
/// right: one column of length `k` per unit of the `k`-th multiplicity,
/// longest columns first.
pub fn column_lengths(n: usize, mults: &[u32]) -> Result<Vec<usize>> {
    if mults.len() != n {
        return Err(Error::LengthMismatch(mults.len(), n));
    }
    let mut out = Vec::new();
    for k in (1..=n).rev() {
        for _ in 0..mults[k - 1] {
            out.push(k);
        }
    }
    Ok(out)
}

/// A filling of a Young diagram with barred letters, stored column-major
/// with columns of non-increasing length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Tableau {
    n: usize,
    columns: Vec<Vec<Letter>>,
}

impl Tableau {
    /// A filling from explicit columns; lengths must not increase from
    /// left to right and must stay within the rank.
    pub fn new(n: usize, columns: Vec<Vec<Letter>>) -> Result<Tableau> {
        for col in &columns {
            if col.is_empty() || col.len() > n {
                return Err(Error::BadTableau(format!(
                    "column length {} out of 1..={n}",
                    col.len()
                )));
            }
        }
        if columns.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::BadTableau("column lengths must not increase".into()));
        }
        Ok(Tableau { n, columns })
    }

    pub fn from_signed_columns(n: usize, columns: &[Vec<i64>]) -> Result<Tableau> {
        let cols = columns
            .iter()
            .map(|col| col.iter().map(|&v| Letter::from_signed(v, n)).collect())
            .collect::<Result<Vec<Vec<Letter>>>>()?;
        Tableau::new(n, cols)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Vec<Letter>] {
        &self.columns
    }

    /// Fundamental-weight multiplicities of the shape: the `k`-th entry
    /// counts the columns of length `k`.
    pub fn mults(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        for col in &self.columns {
            out[col.len() - 1] += 1;
        }
        out
    }

    /// Do all columns satisfy the three PBW column conditions?
    pub fn is_pbw(&self) -> bool {
        self.columns.iter().all(|col| column_is_pbw(col, self.n))
    }

    /// Is the filling PBW-semistandard: every column valid and every entry
    /// dominated by some entry of the previous column at the same depth or
    /// lower?
    pub fn is_semistandard(&self) -> bool {
        self.is_pbw()
            && self
                .columns
                .windows(2)
                .all(|w| neighbors_ok(&w[0], &w[1]))
    }

    /// Standardization applied to every column.
    pub fn standardized(&self) -> Tableau {
        Tableau {
            n: self.n,
            columns: self
                .columns
                .iter()
                .map(|col| standardized_column(col, self.n))
                .collect(),
        }
    }

    /// The lattice point of the filling: the sum of the strip points of
    /// its columns.
    pub fn lattice_point(&self) -> Result<LatticePoint> {
        let mut out = vec![0u32; self.n * self.n];
        for col in &self.columns {
            for (o, v) in out.iter_mut().zip(strip_point(col, self.n)?) {
                *o += v;
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let cols: Vec<Vec<i64>> = self
            .columns
            .iter()
            .map(|col| col.iter().map(|l| l.signed(self.n)).collect())
            .collect();
        json!({ "columns": cols })
    }

    pub fn from_json(v: &Value, n: usize) -> Result<Tableau> {
        let cols = v
            .get("columns")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("tableau must have a columns array, got {v}")))?;
        let signed = cols
            .iter()
            .map(|col| {
                col.as_array()
                    .ok_or_else(|| Error::Parse("column must be an array".into()))?
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .ok_or_else(|| Error::Parse(format!("bad letter {x} in column")))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        Tableau::from_signed_columns(n, &signed)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let depth = self.columns.first().map_or(0, Vec::len);
        for row in 0..depth {
            let cells: Vec<String> = self
                .columns
                .iter()
                .filter(|col| col.len() > row)
                .map(|col| format!("{:>3}", col[row].signed(self.n)))
                .collect();
            if row > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

/// The three column conditions: entries at most the column length sit in
/// their own box; everything below a non-trivial entry is strictly
/// smaller; a trivial entry forbids its barred partner below itself.
fn column_is_pbw(col: &[Letter], n: usize) -> bool {
    let mu = col.len();
    for (pos, l) in col.iter().enumerate() {
        if (l.code() as usize) <= mu && l.code() as usize != pos + 1 {
            return false;
        }
    }
    for upper in 0..mu {
        if col[upper].code() as usize == upper + 1 {
            continue;
        }
        for lower in upper + 1..mu {
            if col[upper] <= col[lower] {
                return false;
            }
        }
    }
    for (pos, l) in col.iter().enumerate() {
        if l.code() as usize == pos + 1 && col[pos + 1..].contains(&l.bar(n)) {
            return false;
        }
    }
    true
}

/// The semistandard condition between two neighboring columns: each entry
/// of the right column is at most some entry of the left column lying at
/// the same depth or deeper.
fn neighbors_ok(left: &[Letter], right: &[Letter]) -> bool {
    right
        .iter()
        .enumerate()
        .all(|(pos, r)| left[pos..].iter().any(|l| l >= r))
}

/// One column as a strictly increasing tuple: the content read in letter
/// order.  Fails when a letter repeats.
pub fn content_tuple(col: &[Letter], n: usize) -> Result<IndexTuple> {
    let mut letters = col.to_vec();
    letters.sort();
    IndexTuple::new(letters, n)
}

/// The strip of an index tuple: letters that fit inside the column go to
/// their own box, the remaining letters fill the free boxes from bottom to
/// top in increasing order.
pub fn strip_of(j: &IndexTuple, n: usize) -> Tableau {
    let d = j.len();
    let mut boxes: Vec<Option<Letter>> = vec![None; d];
    let mut rest = Vec::new();
    for &l in j.letters() {
        let c = l.code() as usize;
        if c <= d {
            boxes[c - 1] = Some(l);
        } else {
            rest.push(l);
        }
    }
    let mut next = rest.into_iter();
    for slot in boxes.iter_mut().rev() {
        if slot.is_none() {
            *slot = next.next();
        }
    }
    let column = boxes
        .into_iter()
        .map(|s| s.expect("every box is filled"))
        .collect();
    Tableau { n, columns: vec![column] }
}

/// Standardization of one column: while a trivial entry has its barred
/// partner strictly below, at box `p` say, replace the pair by the barred
/// letter of `p` on top and the letter `p` in its own box.
fn standardized_column(col: &[Letter], n: usize) -> Vec<Letter> {
    let mut out = col.to_vec();
    loop {
        let swap = (1..=out.len()).find_map(|i| {
            if out[i - 1].code() as usize != i {
                return None;
            }
            out[i..]
                .iter()
                .position(|&x| x == out[i - 1].bar(n))
                .map(|below| (i, i + 1 + below))
        });
        match swap {
            Some((i, p)) => {
                let entry = Letter::unbarred(p, n).expect("box index within rank");
                out[i - 1] = entry.bar(n);
                out[p - 1] = entry;
            }
            None => return out,
        }
    }
}

/// The lattice point of a strip: the pairing of the initial tuple of the
/// same size with the content of the strip.  This agrees with the
/// valuation point of the chart coordinate of that content.
pub fn strip_point(col: &[Letter], n: usize) -> Result<LatticePoint> {
    let j = content_tuple(col, n)?;
    let initial = IndexTuple::initial(col.len(), n)?;
    pair_tuples(initial.letters(), j.letters(), n)
}

/// The strip of a lattice point of a fundamental polytope: start from the
/// initial column and replace, for each support root, the box of its first
/// index by its target letter.
pub fn strip_from_point(k: usize, point: &[u32], n: usize) -> Result<Vec<Letter>> {
    if point.len() != n * n {
        return Err(Error::DimMismatch { expected: n * n, got: point.len() });
    }
    if !polytope_contains(n, &fundamental(k, n), point)? {
        return Err(Error::NotInPolytope(format!(
            "{point:?} for the fundamental weight {k}"
        )));
    }
    let mut col: Vec<Letter> = (1..=k)
        .map(|i| Letter::unbarred(i, n).expect("i <= n"))
        .collect();
    for (root, &count) in positive_roots(n).iter().zip(point) {
        if count == 0 {
            continue;
        }
        if count > 1 || root.first() > k {
            return Err(Error::NotInPolytope(format!(
                "{point:?} is not an antichain indicator through {k}"
            )));
        }
        col[root.first() - 1] = root.target_letter(n);
    }
    Ok(col)
}

/// The filling of a lattice point: peel the point into fundamental points
/// and rebuild one strip per peel, longest columns first.
pub fn from_point(n: usize, mults: &[u32], point: &[u32]) -> Result<Tableau> {
    let peels = standard_decomposition(n, mults, point)?;
    let columns = peels
        .iter()
        .map(|(k, p)| strip_from_point(*k, p, n))
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(n, columns)
}

/// All valid single columns of the given length, ordered by letter codes.
pub fn pbw_strips(n: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut acc: Vec<Letter> = Vec::new();
    fn rec(n: usize, len: usize, acc: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if acc.len() == len {
            if column_is_pbw(acc, n) {
                out.push(acc.clone());
            }
            return;
        }
        let own = Letter::unbarred(acc.len() + 1, n).expect("box index within rank");
        let mut options = vec![own];
        options.extend(
            crate::lie::all_letters(n)
                .into_iter()
                .filter(|l| l.code() as usize > len),
        );
        for l in options {
            acc.push(l);
            rec(n, len, acc, out);
            acc.pop();
        }
    }
    rec(n, len, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All semistandard fillings of the shape of a dominant weight, ordered by
/// their columns.
pub fn enumerate(n: usize, mults: &[u32]) -> Result<Vec<Tableau>> {
    let lengths = column_lengths(n, mults)?;
    let mut per_length: BTreeMap<usize, Vec<Vec<Letter>>> = BTreeMap::new();
    for &d in &lengths {
        per_length.entry(d).or_insert_with(|| pbw_strips(n, d));
    }
    let mut out = Vec::new();
    let mut acc: Vec<Vec<Letter>> = Vec::new();
    fn rec(
        n: usize,
        lengths: &[usize],
        per_length: &BTreeMap<usize, Vec<Vec<Letter>>>,
        acc: &mut Vec<Vec<Letter>>,
        out: &mut Vec<Tableau>,
    ) {
        if acc.len() == lengths.len() {
            out.push(Tableau { n, columns: acc.clone() });
            return;
        }
        for cand in &per_length[&lengths[acc.len()]] {
            if acc.last().is_none_or(|prev| neighbors_ok(prev, cand)) {
                acc.push(cand.clone());
                rec(n, lengths, per_length, acc, out);
                acc.pop();
            }
        }
    }
    rec(n, &lengths, &per_length, &mut acc, &mut out);
    Ok(out)
}
