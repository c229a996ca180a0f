//! Birational chart of the flag variety.
//!
//! A point of the chart is a product of exponentials of negative root
//! vectors, one parameter per root, taken in a good-sequence order.  The
//! chart coordinates are the minors of that matrix against the initial
//! column tuples; they assemble into the coordinate morphism that realizes
//! the homogeneous coordinate ring, and weighted initial forms of the
//! coordinates realize its degenerations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigInt, BigRational, One};

use crate::degree::DegreePoint;
use crate::lie::{
    default_good_sequence, epsilon_to_simple, mat_mul, pair_tuples, positive_roots, root_index,
    root_vector, validate_good_sequence, IntMat, Letter, PositiveRoot,
};
use crate::plucker::{IndexTuple, PlueckerRing};
use crate::poly::{Mono, Poly, Universe};
use crate::rat::{rat, Rat};
use crate::Result;

/// Chart data for a fixed rank and good sequence.
pub struct Chart {
    n: usize,
    sequence: Vec<PositiveRoot>,
    ring: PlueckerRing,
    universe: Arc<Universe>,
    matrix: Vec<Vec<Poly>>,
    images: Vec<Poly>,
}

impl Chart {
    /// Chart over the default good sequence.
    pub fn new(n: usize) -> Result<Chart> {
        Chart::with_sequence(n, default_good_sequence(n))
    }

    pub fn with_sequence(n: usize, sequence: Vec<PositiveRoot>) -> Result<Chart> {
        validate_good_sequence(&sequence, n)?;
        let nroots = n * n;
        let mut names: Vec<String> = (1..=nroots).map(|i| format!("t{i}")).collect();
        names.extend((1..=n).map(|k| format!("z{k}")));
        let universe = Universe::new(format!("chart-sp{}", 2 * n), names, false);
        let matrix = chart_matrix(n, &sequence, &universe);
        let ring = PlueckerRing::new(n);
        let mut chart = Chart { n, sequence, ring, universe, matrix, images: Vec::new() };
        chart.images = chart
            .ring
            .tuples()
            .iter()
            .map(|j| {
                let zk = chart.z_var(j.len());
                chart.coordinate(j).mul(&zk).expect("same universe")
            })
            .collect::<Vec<_>>();
        Ok(chart)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sequence(&self) -> &[PositiveRoot] {
        &self.sequence
    }

    pub fn ring(&self) -> &PlueckerRing {
        &self.ring
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Chart parameter of the `i`-th root in the sequence, 1-based.
    pub fn t_var(&self, i: usize) -> Poly {
        Poly::var(&self.universe, i - 1)
    }

    /// Homogenizing variable of the degree-`k` coordinates, 1-based.
    pub fn z_var(&self, k: usize) -> Poly {
        Poly::var(&self.universe, self.n * self.n + k - 1)
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.matrix
    }

    /// Chart coordinate of an index tuple: the minor of the chart matrix on
    /// the rows named by the tuple and the leading columns.
    pub fn coordinate(&self, j: &IndexTuple) -> Poly {
        let k = j.len();
        let rows: Vec<usize> = j.letters().iter().map(|l| (l.code() - 1) as usize).collect();
        let cols: Vec<usize> = (0..k).collect();
        self.minor(&rows, &cols)
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        if rows.is_empty() {
            return Poly::one(&self.universe);
        }
        let mut acc = Poly::zero(&self.universe);
        let rest: Vec<usize> = cols[1..].to_vec();
        for (pos, &r) in rows.iter().enumerate() {
            let entry = &self.matrix[r][cols[0]];
            if entry.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != pos)
                .map(|(_, &q)| q)
                .collect();
            let cofactor = self.minor(&sub_rows, &rest);
            let signed = if pos % 2 == 0 { cofactor } else { cofactor.neg() };
            acc = acc.add(&entry.mul(&signed).expect("same universe")).expect("same universe");
        }
        acc
    }

    /// Chart coordinate computed through the exterior-power action rather
    /// than through minors; the two routes must agree.
    pub fn coordinate_via_wedge(&self, j: &IndexTuple) -> Poly {
        let k = j.len();
        let start: Vec<u32> = (1..=k as u32).collect();
        let mut state: WedgeElt = BTreeMap::new();
        state.insert(start, Poly::one(&self.universe));
        for (idx, beta) in self.sequence.iter().enumerate().rev() {
            let f = root_vector(*beta, self.n);
            state = exp_derivation(&f, idx, &state, &self.universe);
        }
        let key: Vec<u32> = j.letters().iter().map(|l| l.code()).collect();
        state.remove(&key).unwrap_or_else(|| Poly::zero(&self.universe))
    }

    /// The coordinate morphism: each variable goes to its chart coordinate
    /// times the homogenizing variable of its size.
    pub fn coordinate_map(&self, p: &Poly) -> Result<Poly> {
        p.eval_hom(&self.universe, &self.images)
    }

    /// Weight vector on the chart universe induced by a degree point: the
    /// parameter of each sequence root carries the root's degree, the
    /// homogenizing variables are weightless.
    pub fn weights_for(&self, d: &DegreePoint) -> Vec<Rat> {
        let index = root_index(self.n);
        let mut w: Vec<Rat> = self
            .sequence
            .iter()
            .map(|beta| d[index[beta]].clone())
            .collect();
        w.extend(std::iter::repeat_n(rat(0), self.n));
        w
    }

    /// Initial form of a chart-universe polynomial for a degree point.
    pub fn initial_for(&self, p: &Poly, d: &DegreePoint) -> Result<Poly> {
        p.initial_form(&self.weights_for(d))
    }

    /// The degenerate coordinate morphism: variables map to initial forms
    /// of their chart coordinates.
    pub fn degenerate_map(&self, p: &Poly, d: &DegreePoint) -> Result<Poly> {
        let images = self.degenerate_images(d)?;
        p.eval_hom(&self.universe, &images)
    }

    /// Images of all ring variables under the degenerate morphism.
    pub fn degenerate_images(&self, d: &DegreePoint) -> Result<Vec<Poly>> {
        let w = self.weights_for(d);
        self.images.iter().map(|img| img.initial_form(&w)).collect()
    }

    /// Positions of the sequence roots in the canonical root order, used to
    /// translate between chart exponents and root exponent vectors.
    pub fn sequence_positions(&self) -> Vec<usize> {
        let index = root_index(self.n);
        self.sequence.iter().map(|beta| index[beta]).collect()
    }

    /// Root exponent vector (canonical order) of the minimal chart monomial
    /// of the image of a coordinate, dropping the homogenizing part.
    pub fn valuation_point(&self, j: &IndexTuple) -> Result<Vec<u32>> {
        let img = self.coordinate_map(&self.ring.var(j))?;
        let mono = minimal_exponent(&img).ok_or_else(|| {
            crate::Error::Parse(format!("coordinate image of {} is zero", j.name(self.n)))
        })?;
        let positions = self.sequence_positions();
        let mut out = vec![0u32; self.n * self.n];
        for (seq_idx, &reading_idx) in positions.iter().enumerate() {
            out[reading_idx] = mono[seq_idx];
        }
        Ok(out)
    }

    /// All root exponent vectors (canonical order) whose power monomial,
    /// applied in sequence order, moves the wedge of the first tuple onto
    /// the second with a nonzero coefficient.
    pub fn action_set(&self, from: &[Letter], to: &[Letter]) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut wt = vec![0i64; n];
        for l in from {
            for (w, delta) in wt.iter_mut().zip(l.weight(n)) {
                *w += delta;
            }
        }
        for l in to {
            for (w, delta) in wt.iter_mut().zip(l.weight(n)) {
                *w -= delta;
            }
        }
        let budget = match epsilon_to_simple(&wt, n) {
            Some(b) if b.iter().all(|&c| c >= 0) => b,
            _ => return Vec::new(),
        };
        let roots = positive_roots(n);
        let coords: Vec<Vec<i64>> = roots.iter().map(|b| b.simple_coords(n)).collect();
        let search = ActionSearch { chart: self, coords: &coords, from, to };
        let mut found = Vec::new();
        let mut current = vec![0u32; roots.len()];
        search.dfs(&budget, 0, &mut current, &mut found);
        found
    }

    /// Does the power monomial of the exponent vector (canonical order)
    /// carry the first wedge tuple onto the second with nonzero
    /// coefficient?  Powers are applied in sequence order, rightmost root
    /// first.
    pub fn applies_nontrivially(&self, s: &[u32], from: &[Letter], to: &[Letter]) -> bool {
        let index = root_index(self.n);
        let start: Vec<u32> = from.iter().map(|l| l.code()).collect();
        let target: Vec<u32> = to.iter().map(|l| l.code()).collect();
        let mut state: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        state.insert(start, 1);
        for beta in self.sequence.iter().rev() {
            let count = s[index[beta]];
            if count == 0 {
                continue;
            }
            let f = root_vector(*beta, self.n);
            for _ in 0..count {
                state = apply_derivation_int(&f, &state);
                if state.is_empty() {
                    return false;
                }
            }
        }
        state.get(&target).is_some_and(|&c| c != 0)
    }
}

/// Bounded enumeration context for [`Chart::action_set`]: the root
/// coordinates and the fixed source/target tuples of the search.
struct ActionSearch<'a> {
    chart: &'a Chart,
    coords: &'a [Vec<i64>],
    from: &'a [Letter],
    to: &'a [Letter],
}

impl ActionSearch<'_> {
    fn dfs(&self, remaining: &[i64], at: usize, current: &mut Vec<u32>, found: &mut Vec<Vec<u32>>) {
        if remaining.iter().all(|&c| c == 0) {
            if self.chart.applies_nontrivially(current, self.from, self.to) {
                found.push(current.clone());
            }
            // deeper roots can only add weight, so stop here
            return;
        }
        if at == self.coords.len() {
            return;
        }
        let cap = remaining
            .iter()
            .zip(&self.coords[at])
            .filter(|(_, &c)| c > 0)
            .map(|(&r, &c)| r / c)
            .min()
            .unwrap_or(0);
        for count in (0..=cap).rev() {
            current[at] = count as u32;
            let next: Vec<i64> = remaining
                .iter()
                .zip(&self.coords[at])
                .map(|(&r, &c)| r - c * count)
                .collect();
            if next.iter().all(|&c| c >= 0) {
                self.dfs(&next, at + 1, current, found);
            }
        }
        current[at] = 0;
    }
}

type WedgeElt = BTreeMap<Vec<u32>, Poly>;

/// The chart matrix: the ordered product of exponentials of the sequence
/// root vectors, entry `[r][c]` holding the coefficient of basis vector
/// `r+1` in the image of basis vector `c+1`.
fn chart_matrix(n: usize, sequence: &[PositiveRoot], universe: &Arc<Universe>) -> Vec<Vec<Poly>> {
    let dim = 2 * n;
    let mut acc = identity(dim, universe);
    for (idx, beta) in sequence.iter().enumerate() {
        let f = root_vector(*beta, n);
        let e = exp_matrix(&f, idx, universe);
        acc = poly_mat_mul(&acc, &e, universe);
    }
    acc
}

fn identity(dim: usize, universe: &Arc<Universe>) -> Vec<Vec<Poly>> {
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if r == c { Poly::one(universe) } else { Poly::zero(universe) })
                .collect()
        })
        .collect()
}

/// Exponential of `t * F` for a nilpotent integer matrix, with `t` the
/// variable at `var_idx`.
fn exp_matrix(f: &IntMat, var_idx: usize, universe: &Arc<Universe>) -> Vec<Vec<Poly>> {
    let dim = f.len();
    let mut acc = identity(dim, universe);
    let mut power = f.clone();
    let mut m = 1u32;
    let mut factorial = BigInt::one();
    loop {
        if power.iter().all(|row| row.iter().all(|&e| e == 0)) {
            break;
        }
        factorial *= BigInt::from(m);
        let mut mono = vec![0u32; universe.len()];
        mono[var_idx] = m;
        let coeff = BigRational::new(BigInt::one(), factorial.clone());
        for r in 0..dim {
            for c in 0..dim {
                if power[r][c] != 0 {
                    let term = Poly::monomial(
                        universe,
                        mono.clone(),
                        &coeff * rat(power[r][c]),
                    );
                    acc[r][c] = acc[r][c].add(&term).expect("same universe");
                }
            }
        }
        power = mat_mul(&power, f);
        m += 1;
    }
    acc
}

fn poly_mat_mul(
    a: &[Vec<Poly>],
    b: &[Vec<Poly>],
    universe: &Arc<Universe>,
) -> Vec<Vec<Poly>> {
    let dim = a.len();
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    let mut acc = Poly::zero(universe);
                    for k in 0..dim {
                        if a[r][k].is_zero() || b[k][c].is_zero() {
                            continue;
                        }
                        acc = acc
                            .add(&a[r][k].mul(&b[k][c]).expect("same universe"))
                            .expect("same universe");
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Sort a code tuple, counting the permutation sign; `None` on repeats.
fn sort_codes(mut codes: Vec<u32>) -> Option<(Vec<u32>, i64)> {
    let mut sign = 1i64;
    for i in 1..codes.len() {
        let mut j = i;
        while j > 0 && codes[j - 1] > codes[j] {
            codes.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in codes.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((codes, sign))
}

/// One application of a matrix as a derivation of the exterior power, over
/// integer coefficients.
fn apply_derivation_int(f: &IntMat, state: &BTreeMap<Vec<u32>, i64>) -> BTreeMap<Vec<u32>, i64> {
    let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (tuple, &coeff) in state {
        for pos in 0..tuple.len() {
            let src = (tuple[pos] - 1) as usize;
            for (row, frow) in f.iter().enumerate() {
                let entry = frow[src];
                if entry == 0 {
                    continue;
                }
                let mut next = tuple.clone();
                next[pos] = row as u32 + 1;
                if let Some((sorted, sign)) = sort_codes(next) {
                    let v = out.entry(sorted).or_insert(0);
                    *v += coeff * entry * sign;
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Polynomial-coefficient version of the derivation action.
fn apply_derivation(
    f: &IntMat,
    state: &WedgeElt,
    universe: &Arc<Universe>,
) -> WedgeElt {
    let mut out: WedgeElt = BTreeMap::new();
    for (tuple, coeff) in state {
        for pos in 0..tuple.len() {
            let src = (tuple[pos] - 1) as usize;
            for (row, frow) in f.iter().enumerate() {
                let entry = frow[src];
                if entry == 0 {
                    continue;
                }
                let mut next = tuple.clone();
                next[pos] = row as u32 + 1;
                if let Some((sorted, sign)) = sort_codes(next) {
                    let add = coeff.scale(&rat(entry * sign));
                    let slot = out.entry(sorted).or_insert_with(|| Poly::zero(universe));
                    *slot = slot.add(&add).expect("same universe");
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Exponential of `t_idx * D_f` applied to a wedge element.
fn exp_derivation(
    f: &IntMat,
    var_idx: usize,
    state: &WedgeElt,
    universe: &Arc<Universe>,
) -> WedgeElt {
    let mut acc = state.clone();
    let mut layer = state.clone();
    let mut m = 1u32;
    let mut factorial = BigInt::one();
    loop {
        layer = apply_derivation(f, &layer, universe);
        if layer.is_empty() {
            break;
        }
        factorial *= BigInt::from(m);
        let mut mono = vec![0u32; universe.len()];
        mono[var_idx] = m;
        let coeff = BigRational::new(BigInt::one(), factorial.clone());
        for (tuple, poly) in &layer {
            let add = poly.mul_mono(&mono, &coeff);
            let slot = acc.entry(tuple.clone()).or_insert_with(|| Poly::zero(universe));
            *slot = slot.add(&add).expect("same universe");
        }
        m += 1;
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

/// Valuation order on exponent vectors: of two monomials the smaller is
/// the one with the larger exponent at the first coordinate where they
/// differ, so minimal exponents are as front-loaded as possible.  Early
/// coordinates belong to the higher roots of the sequence, so the minimum
/// of a coordinate image is the most front-loaded splitting of the weight
/// gap that actually occurs among the monomials of that coordinate; more
/// front-loaded splittings of the same weight can exist but act trivially
/// on the wedge vectors and therefore never appear.
pub fn exponent_cmp(a: &Mono, b: &Mono) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// Minimal exponent of a polynomial under the valuation order; the
/// valuation underlying the tableau bijections.
pub fn minimal_exponent(p: &Poly) -> Option<Mono> {
    p.terms().map(|(m, _)| m).min_by(|a, b| exponent_cmp(a, b)).cloned()
}

/// Exponent vector of the anti-diagonal pairing of the initial tuple with
/// the given tuple, in the canonical root order.
pub fn initial_pairing(j: &IndexTuple, n: usize) -> Result<Vec<u32>> {
    let initial = IndexTuple::initial(j.len(), n)?;
    pair_tuples(initial.letters(), j.letters(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::interior_points;
    use crate::fflv::{lattice_points, weyl_dim_u64};
    use crate::lie::all_letters;

    fn chart2() -> Chart {
        Chart::new(2).unwrap()
    }

    fn tuple(signed: &[i64], n: usize) -> IndexTuple {
        IndexTuple::from_signed(signed, n).unwrap()
    }

    #[test]
    fn sequence_matches_the_worked_enumeration() {
        let chart = chart2();
        let keys: Vec<String> = chart.sequence().iter().map(|b| b.key()).collect();
        assert_eq!(keys, vec!["1,-1", "1,2", "1,1", "2,2"]);
    }

    #[test]
    fn first_column_of_the_chart_matrix() {
        let chart = chart2();
        let t = |i| chart.t_var(i);
        let col: Vec<Poly> = (0..4).map(|r| chart.matrix()[r][0].clone()).collect();
        assert_eq!(col[0], Poly::one(chart.universe()));
        assert_eq!(col[1], t(3));
        assert_eq!(col[2], t(2));
        assert_eq!(col[3], t(1).add(&t(2).mul(&t(3)).unwrap()).unwrap());
    }

    #[test]
    fn coordinates_match_the_worked_table() {
        let chart = chart2();
        let t = |i| chart.t_var(i);
        let p = |signed: &[i64]| chart.coordinate(&tuple(signed, 2));
        let one = Poly::one(chart.universe());
        assert_eq!(p(&[1]), one);
        assert_eq!(p(&[2]), t(3));
        assert_eq!(p(&[-2]), t(2));
        assert_eq!(p(&[-1]), t(1).add(&t(2).mul(&t(3)).unwrap()).unwrap());
        assert_eq!(p(&[1, 2]), Poly::one(chart.universe()));
        assert_eq!(p(&[1, -2]), t(4));
        assert_eq!(p(&[1, -1]), t(2).sub(&t(3).mul(&t(4)).unwrap()).unwrap());
        assert_eq!(p(&[2, -2]), t(3).mul(&t(4)).unwrap().sub(&t(2)).unwrap());
        assert_eq!(
            p(&[2, -1]),
            t(1).neg().sub(&t(3).mul(&t(3)).unwrap().mul(&t(4)).unwrap()).unwrap()
        );
        let expected = t(2)
            .mul(&t(2))
            .unwrap()
            .sub(&t(1).mul(&t(4)).unwrap())
            .unwrap()
            .sub(&t(2).mul(&t(3)).unwrap().mul(&t(4)).unwrap().scale(&rat(2)))
            .unwrap();
        assert_eq!(p(&[-2, -1]), expected);
    }

    #[test]
    fn wedge_route_agrees_with_minors() {
        for n in 2..=3 {
            let chart = Chart::new(n).unwrap();
            for j in chart.ring().tuples() {
                assert_eq!(
                    chart.coordinate(j),
                    chart.coordinate_via_wedge(j),
                    "n={n} J={}",
                    j.name(n)
                );
            }
        }
    }

    #[test]
    fn coordinate_map_kills_the_defining_ideal() {
        let chart = chart2();
        for g in chart.ring().ideal_generators().unwrap() {
            let img = chart.coordinate_map(&g).unwrap();
            assert!(img.is_zero(), "phi({g}) = {img}");
        }
    }

    #[test]
    fn degenerate_images_match_the_worked_example() {
        let chart = chart2();
        let d: DegreePoint = vec![rat(3), rat(2), rat(1), rat(1)];
        let images = chart.degenerate_images(&d).unwrap();
        let t = |i| chart.t_var(i);
        let z = |k| chart.z_var(k);
        let want = vec![
            z(1),
            t(3).mul(&z(1)).unwrap(),
            t(2).mul(&z(1)).unwrap(),
            t(1).mul(&z(1)).unwrap(),
            z(2),
            t(4).mul(&z(2)).unwrap(),
            t(2).mul(&z(2)).unwrap(),
            t(2).mul(&z(2)).unwrap().neg(),
            t(1).mul(&z(2)).unwrap().neg(),
            t(1).mul(&t(4)).unwrap().mul(&z(2)).unwrap().neg(),
        ];
        assert_eq!(images, want);
    }

    #[test]
    fn frozen_kernel_relations_vanish_under_the_degenerate_map() {
        let chart = chart2();
        let ring = chart.ring();
        let d: DegreePoint = vec![rat(3), rat(2), rat(1), rat(1)];
        let x = |signed: &[i64]| ring.var(&tuple(signed, 2));
        let relations = vec![
            x(&[1, 2]).mul(&x(&[-2])).unwrap().add(&x(&[2, -2]).mul(&x(&[1])).unwrap()).unwrap(),
            x(&[1, -2]).mul(&x(&[-1])).unwrap().add(&x(&[-2, -1]).mul(&x(&[1])).unwrap()).unwrap(),
            x(&[2, -2]).mul(&x(&[-1])).unwrap().sub(&x(&[2, -1]).mul(&x(&[-2])).unwrap()).unwrap(),
            x(&[1, 2]).mul(&x(&[-1])).unwrap().add(&x(&[2, -1]).mul(&x(&[1])).unwrap()).unwrap(),
            x(&[1, 2]).mul(&x(&[-2, -1])).unwrap().sub(&x(&[1, -2]).mul(&x(&[2, -1])).unwrap()).unwrap(),
            x(&[1, -1]).add(&x(&[2, -2])).unwrap(),
        ];
        for r in &relations {
            let img = chart.degenerate_map(r, &d).unwrap();
            assert!(img.is_zero(), "relation {r} maps to {img}");
        }
        // the undegenerate morphism does not kill all of them
        let survives = chart.coordinate_map(&relations[0]).unwrap();
        assert!(!survives.is_zero());
    }

    #[test]
    fn degenerate_images_are_monomial_at_interior_points(){
        for n in 2..=3 {
            let chart = Chart::new(n).unwrap();
            for d in interior_points(n, 2, 11).unwrap() {
                for (j, img) in chart.ring().tuples().iter().zip(chart.degenerate_images(&d).unwrap()) {
                    assert!(img.is_monomial(), "n={n} J={} image {img}", j.name(n));
                }
            }
        }
    }

    #[test]
    fn valuation_points_match_the_tuple_pairing() {
        for n in 2..=3 {
            let chart = Chart::new(n).unwrap();
            for j in chart.ring().tuples() {
                let via_valuation = chart.valuation_point(j).unwrap();
                let via_pairing = initial_pairing(j, n).unwrap();
                assert_eq!(via_valuation, via_pairing, "n={n} J={}", j.name(n));
            }
        }
    }

    #[test]
    fn chart_monomials_realize_the_action_set() {
        // the monomials of a chart coordinate are exactly the root power
        // monomials carrying the initial wedge vector onto the target one
        // with nonzero coefficient
        for n in 2..=3 {
            let chart = Chart::new(n).unwrap();
            let positions = chart.sequence_positions();
            for j in chart.ring().tuples() {
                let start = IndexTuple::initial(j.len(), n).unwrap();
                let mut from_poly = std::collections::BTreeSet::new();
                for (mono, _) in chart.coordinate(j).terms() {
                    let mut reading = vec![0u32; n * n];
                    for (seq_idx, &pos) in positions.iter().enumerate() {
                        reading[pos] = mono[seq_idx];
                    }
                    from_poly.insert(reading);
                }
                let from_action: std::collections::BTreeSet<Vec<u32>> =
                    chart.action_set(start.letters(), j.letters()).into_iter().collect();
                assert_eq!(from_poly, from_action, "n={n} J={}", j.name(n));
            }
        }
    }

    #[test]
    fn front_loaded_splittings_can_act_trivially() {
        // a splitting of the weight gap may precede every monomial of the
        // coordinate in the valuation order yet act trivially on the wedge
        // vectors, so the valuation minimum ranges over the action set only
        let n = 3;
        let chart = Chart::new(n).unwrap();
        let j = tuple(&[3, -3], n);
        let start = IndexTuple::initial(2, n).unwrap();
        let index = root_index(n);
        let mut skipped = vec![0u32; n * n];
        skipped[index[&PositiveRoot::barred(1, 2, n).unwrap()]] = 1;
        let mut expected = vec![0u32; n * n];
        expected[index[&PositiveRoot::short(1, 3, n).unwrap()]] = 1;
        expected[index[&PositiveRoot::short(2, 2, n).unwrap()]] = 1;
        // both exponent vectors split the same weight gap
        let weight = |s: &[u32]| -> Vec<i64> {
            let mut acc = vec![0i64; n];
            for (root, &count) in positive_roots(n).iter().zip(s) {
                for (a, c) in acc.iter_mut().zip(root.simple_coords(n)) {
                    *a += c * i64::from(count);
                }
            }
            acc
        };
        assert_eq!(weight(&skipped), weight(&expected));
        assert!(!chart.applies_nontrivially(&skipped, start.letters(), j.letters()));
        assert!(chart.applies_nontrivially(&expected, start.letters(), j.letters()));
        assert_eq!(chart.valuation_point(&j).unwrap(), expected);
        // in sequence coordinates the trivial splitting would come first
        let positions = chart.sequence_positions();
        let to_seq =
            |reading: &[u32]| -> Vec<u32> { positions.iter().map(|&p| reading[p]).collect() };
        assert_eq!(exponent_cmp(&to_seq(&skipped), &to_seq(&expected)), Ordering::Less);
    }

    #[test]
    fn valuation_points_of_a_level_cover_the_lattice_points() {
        // over all size-k tuples the valuation points form exactly the
        // lattice point set of the fundamental polytope; tuples whose strip
        // filling is not semistandard repeat the point of their
        // standardization, so the map is onto but not injective
        let n = 2;
        let chart = Chart::new(n).unwrap();
        let points: Vec<Vec<u32>> = chart
            .ring()
            .tuples()
            .iter()
            .filter(|j| j.len() == 2)
            .map(|j| chart.valuation_point(j).unwrap())
            .collect();
        assert_eq!(points.len(), 6);
        let distinct: std::collections::BTreeSet<Vec<u32>> = points.iter().cloned().collect();
        let expected: std::collections::BTreeSet<Vec<u32>> =
            lattice_points(n, &[0, 1]).unwrap().into_iter().collect();
        assert_eq!(distinct, expected);
        assert_eq!(distinct.len() as u64, weyl_dim_u64(n, &[0, 1]).unwrap());
        // the one collision: the coordinates of (1, -1) and (2, -2) agree up
        // to sign, hence share a valuation point
        assert_eq!(
            chart.valuation_point(&tuple(&[1, -1], n)).unwrap(),
            chart.valuation_point(&tuple(&[2, -2], n)).unwrap()
        );
    }

    #[test]
    fn action_set_of_the_extreme_vector_pair() {
        let n = 2;
        let chart = chart2();
        let letters = all_letters(n);
        let from = [letters[0]];
        let to = [letters[3]];
        let index = root_index(n);
        let mut direct = vec![0u32; 4];
        direct[index[&PositiveRoot::barred(1, 1, n).unwrap()]] = 1;
        let mut composite = vec![0u32; 4];
        composite[index[&PositiveRoot::short(1, 1, n).unwrap()]] = 1;
        composite[index[&PositiveRoot::short(1, 2, n).unwrap()]] = 1;
        let mut found = chart.action_set(&from, &to);
        found.sort();
        let mut want = vec![direct, composite];
        want.sort();
        assert_eq!(found, want);
    }

    #[test]
    fn pairing_exponent_minimizes_degree_on_action_sets() {
        // over every increasing letter pair, the pairing root is the unique
        // degree minimizer of the action set at an interior degree point
        let n = 2;
        let chart = chart2();
        let d = interior_points(n, 1, 5).unwrap().remove(0);
        let letters = all_letters(n);
        for (ai, &a) in letters.iter().enumerate() {
            for &b in &letters[ai + 1..] {
                let best = pair_tuples(&[a], &[b], n).unwrap();
                let best_deg = crate::degree::degree_of(&d, &best);
                for s in chart.action_set(&[a], &[b]) {
                    if s != best {
                        assert!(
                            crate::degree::degree_of(&d, &s) > best_deg,
                            "pair {} {} exponent {s:?}",
                            a.signed(n),
                            b.signed(n)
                        );
                    }
                }
            }
        }
    }
}
