//! The multihomogeneous coordinate ring of the product of exterior powers,
//! its Pluecker variables, quadratic exchange relations and the linear
//! relations cutting out the symplectic flag variety.
//!
//! A variable is indexed by a strictly increasing tuple of letters of length
//! `1..=n`; variables are ordered by length and then lexicographically by
//! letter codes.  Variables for arbitrary tuples are defined up to the sign
//! of the sorting permutation and vanish on repeated letters.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::lie::{all_letters, Letter};
use crate::poly::{Poly, Universe};
use crate::rat::rat;
use crate::{Error, Result};

/// A strictly increasing tuple of letters: the index of a Pluecker variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IndexTuple(Vec<Letter>);

impl IndexTuple {
    pub fn new(letters: Vec<Letter>, n: usize) -> Result<IndexTuple> {
        if letters.is_empty() || letters.len() > n {
            return Err(Error::BadIndexTuple(format!(
                "length {} out of 1..={n}",
                letters.len()
            )));
        }
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadIndexTuple(
                "letters must strictly increase".into(),
            ));
        }
        Ok(IndexTuple(letters))
    }

    /// Build from external signed letters, e.g. `[1, -2]`.
    pub fn from_signed(signed: &[i64], n: usize) -> Result<IndexTuple> {
        let letters = signed
            .iter()
            .map(|&v| Letter::from_signed(v, n))
            .collect::<Result<Vec<_>>>()?;
        IndexTuple::new(letters, n)
    }

    /// The tuple `(1, 2, ..., k)` of the first unbarred letters.
    pub fn initial(k: usize, n: usize) -> Result<IndexTuple> {
        IndexTuple::new(
            (1..=k)
                .map(|i| Letter::unbarred(i, n))
                .collect::<Result<Vec<_>>>()?,
            n,
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Name used for variables and JSON keys: signed letters joined by
    /// commas, e.g. `"1,-2"`.
    pub fn name(&self, n: usize) -> String {
        self.0
            .iter()
            .map(|l| l.signed(n).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_name(name: &str, n: usize) -> Result<IndexTuple> {
        let signed = name
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad letter {p:?} in tuple {name:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        IndexTuple::from_signed(&signed, n)
    }
}

/// Sorts letters, counting inversions; `None` when a letter repeats.
pub fn sort_letters(letters: &[Letter]) -> Option<(Vec<Letter>, i64)> {
    let mut v = letters.to_vec();
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut k = i;
        while k > 0 && v[k - 1] > v[k] {
            v.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// The coordinate ring with one variable per index tuple.
pub struct PlueckerRing {
    n: usize,
    universe: Arc<Universe>,
    tuples: Vec<IndexTuple>,
    index: BTreeMap<IndexTuple, usize>,
}

impl PlueckerRing {
    pub fn new(n: usize) -> PlueckerRing {
        let mut tuples = Vec::new();
        for len in 1..=n {
            let mut acc = Vec::new();
            collect_tuples(&all_letters(n), len, 0, &mut acc, &mut tuples);
        }
        let names: Vec<String> = tuples.iter().map(|t| t.name(n)).collect();
        let universe = Universe::new(format!("plucker-sp{}", 2 * n), names, true);
        let index = tuples
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, t)| (t, k))
            .collect();
        PlueckerRing { n, universe, tuples, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn tuples(&self) -> &[IndexTuple] {
        &self.tuples
    }

    pub fn position(&self, t: &IndexTuple) -> usize {
        self.index[t]
    }

    /// The variable of a sorted tuple.
    pub fn var(&self, t: &IndexTuple) -> Poly {
        Poly::var(&self.universe, self.index[t])
    }

    /// The variable of an arbitrary tuple: sign-normalized, zero on repeats.
    pub fn signed_var(&self, letters: &[Letter]) -> Poly {
        match sort_letters(letters) {
            None => Poly::zero(&self.universe),
            Some((sorted, sign)) => {
                let t = IndexTuple(sorted);
                self.var(&t).scale(&rat(sign))
            }
        }
    }

    /// Quadratic exchange polynomial for sorted tuples `l` (length `p`) and
    /// `j` (length `q <= p`) with `1 <= s <= q`: the product minus all
    /// `s`-fold exchanges of entries of `l` by the leading entries of `j`.
    pub fn quad_relation(&self, l: &IndexTuple, j: &IndexTuple, s: usize) -> Result<Poly> {
        let (p, q) = (l.len(), j.len());
        if q > p {
            return Err(Error::BadIndexTuple(format!(
                "second tuple longer than first: {q} > {p}"
            )));
        }
        if s == 0 || s > q {
            return Err(Error::BadIndexTuple(format!("exchange depth {s} out of 1..={q}")));
        }
        let mut out = self.var(l).mul(&self.var(j))?;
        let mut positions: Vec<usize> = (0..s).collect();
        loop {
            // exchange l[positions] with the first s letters of j
            let mut lw = l.letters().to_vec();
            let mut jw = Vec::with_capacity(q);
            for (t, &r) in positions.iter().enumerate() {
                jw.push(lw[r]);
                lw[r] = j.letters()[t];
            }
            jw.extend_from_slice(&j.letters()[s..]);
            let term = self.signed_var(&lw).mul(&self.signed_var(&jw))?;
            out = out.sub(&term)?;
            // next combination of positions
            let mut t = s;
            loop {
                if t == 0 {
                    return Ok(out);
                }
                t -= 1;
                if positions[t] + (s - t) < p {
                    positions[t] += 1;
                    for u in t + 1..s {
                        positions[u] = positions[u - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// The interleaved tuple of a pair of subsets of `1..=n`: common
    /// elements contribute a letter and its bar, the rest of the first set
    /// stays unbarred and the rest of the second set is barred in reverse.
    pub fn paired_tuple(&self, i1: &[usize], i2: &[usize]) -> Result<Vec<Letter>> {
        let n = self.n;
        check_subset(i1, n)?;
        check_subset(i2, n)?;
        if i1.len() + i2.len() > n {
            return Err(Error::BadIndexTuple(format!(
                "pair is too long: {} + {} > {n}",
                i1.len(),
                i2.len()
            )));
        }
        let gamma: Vec<usize> = i1.iter().copied().filter(|x| i2.contains(x)).collect();
        let rest1: Vec<usize> = i1.iter().copied().filter(|x| !gamma.contains(x)).collect();
        let rest2: Vec<usize> = i2.iter().copied().filter(|x| !gamma.contains(x)).collect();
        let mut letters = Vec::new();
        for &g in &gamma {
            letters.push(Letter::unbarred(g, n)?);
            letters.push(Letter::barred(g, n)?);
        }
        for &a in &rest1 {
            letters.push(Letter::unbarred(a, n)?);
        }
        for &b in rest2.iter().rev() {
            letters.push(Letter::barred(b, n)?);
        }
        Ok(letters)
    }

    /// A pair is reverse-admissible when some subset of the letters outside
    /// both sets dominates the intersection from below.
    pub fn is_reverse_admissible(&self, i1: &[usize], i2: &[usize]) -> Result<bool> {
        check_subset(i1, self.n)?;
        check_subset(i2, self.n)?;
        let gamma: Vec<usize> = i1.iter().copied().filter(|x| i2.contains(x)).collect();
        let complement = self.complement(i1, i2);
        Ok(greedy_dominated(&complement, &gamma).is_some())
    }

    fn complement(&self, i1: &[usize], i2: &[usize]) -> Vec<usize> {
        (1..=self.n)
            .filter(|x| !i1.contains(x) && !i2.contains(x))
            .collect()
    }

    /// Linear relation attached to a non-reverse-admissible pair; `None`
    /// when the pair is reverse-admissible and carries no relation.
    pub fn linear_relation(&self, i1: &[usize], i2: &[usize]) -> Result<Option<Poly>> {
        if self.is_reverse_admissible(i1, i2)? {
            return Ok(None);
        }
        let gamma: Vec<usize> = i1.iter().copied().filter(|x| i2.contains(x)).collect();
        let t = gamma.len();
        let complement = self.complement(i1, i2);
        // smallest h0 whose strictly-later suffix of the intersection is
        // dominated from below inside the complement
        let (h0, lam) = (1..=t)
            .find_map(|h| greedy_dominated(&complement, &gamma[h..]).map(|l| (h, l)))
            .expect("the empty suffix is always dominated");
        // longest prefix of the dominating tuple staying below the shifted
        // intersection
        let mut b = h0;
        while b < t && lam[b - h0] < gamma[b - 1] {
            b += 1;
        }
        let kept: Vec<usize> = gamma[..h0 - 1]
            .iter()
            .chain(&gamma[b..])
            .copied()
            .collect();
        let rest1: Vec<usize> = i1.iter().copied().filter(|x| !gamma.contains(x)).collect();
        let rest2: Vec<usize> = i2.iter().copied().filter(|x| !gamma.contains(x)).collect();
        let width = b - h0 + 1;
        let sign = if width % 2 == 0 { rat(-1) } else { rat(1) };
        let mut out = self.signed_var(&self.paired_tuple(i1, i2)?);
        for choice in slice_subsets(&complement, width) {
            let mut new1: Vec<usize> = rest1.iter().chain(&kept).chain(&choice).copied().collect();
            let mut new2: Vec<usize> = rest2.iter().chain(&kept).chain(&choice).copied().collect();
            new1.sort_unstable();
            new2.sort_unstable();
            let term = self.signed_var(&self.paired_tuple(&new1, &new2)?);
            out = out.add(&term.scale(&sign))?;
        }
        Ok(Some(out))
    }

    /// Generators of the defining ideal: all quadratic exchange relations
    /// and all linear relations, primitively normalized and deduplicated.
    pub fn ideal_generators(&self) -> Result<Vec<Poly>> {
        let mut set: BTreeMap<Vec<(Vec<u32>, String)>, Poly> = BTreeMap::new();
        let mut push = |p: Poly| {
            if p.is_zero() {
                return;
            }
            let p = p.primitive_normalized();
            let key: Vec<(Vec<u32>, String)> = p
                .terms()
                .map(|(m, c)| (m.clone(), crate::rat::format_rat(c)))
                .collect();
            set.entry(key).or_insert(p);
        };
        for l in &self.tuples {
            for j in &self.tuples {
                if j.len() > l.len() {
                    continue;
                }
                for s in 1..=j.len() {
                    push(self.quad_relation(l, j, s)?);
                }
            }
        }
        for k in 1..=self.n {
            for l in 0..=k {
                for i1 in subsets(self.n, l) {
                    for i2 in subsets(self.n, k - l) {
                        if let Some(p) = self.linear_relation(&i1, &i2)? {
                            push(p);
                        }
                    }
                }
            }
        }
        Ok(set.into_values().collect())
    }
}

fn check_subset(set: &[usize], n: usize) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadIndexTuple("subset must strictly increase".into()));
    }
    if set.iter().any(|&x| x < 1 || x > n) {
        return Err(Error::BadIndexTuple(format!("subset entries must lie in 1..={n}")));
    }
    Ok(())
}

/// Greedy dominance matching: the elementwise-largest increasing tuple in
/// `pool` lying strictly below `target` position by position, if any.
fn greedy_dominated(pool: &[usize], target: &[usize]) -> Option<Vec<usize>> {
    let mut out = vec![0usize; target.len()];
    let mut upper = usize::MAX;
    for (k, &g) in target.iter().enumerate().rev() {
        let pick = pool
            .iter()
            .copied()
            .filter(|&c| c < g && c < upper)
            .max()?;
        out[k] = pick;
        upper = pick;
    }
    Some(out)
}

/// All strictly increasing `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (1..=n).collect();
    slice_subsets(&pool, k)
}

/// All `k`-subsets of an ascending slice, in lexicographic order.
fn slice_subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..pool.len() {
            acc.push(pool[x]);
            rec(pool, k, x + 1, acc, out);
            acc.pop();
        }
    }
    rec(pool, k, 0, &mut acc, &mut out);
    out
}

fn collect_tuples(
    letters: &[Letter],
    len: usize,
    start: usize,
    acc: &mut Vec<Letter>,
    out: &mut Vec<IndexTuple>,
) {
    if acc.len() == len {
        out.push(IndexTuple(acc.clone()));
        return;
    }
    for k in start..letters.len() {
        acc.push(letters[k]);
        collect_tuples(letters, len, k + 1, acc, out);
        acc.pop();
    }
}
