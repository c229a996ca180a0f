//! Weighted Groebner machinery for multigraded ideals.
//!
//! Leading terms follow a weight vector in the min convention: the leading
//! monomial minimizes the weighted exponent sum, with ties broken towards
//! the graded-lexicographically larger monomial.  This is a shift-invariant
//! total order on monomials, which suffices for Buchberger's algorithm on
//! multihomogeneous inputs: every S-polynomial and reduction stays inside a
//! fixed finite-dimensional graded piece.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::poly::{Mono, Poly};
use crate::rat::{rat, Rat};
use crate::{Error, Result};

/// Min-convention weighted order with graded-lex refinement.
#[derive(Clone, Debug)]
pub struct WeightOrder {
    pub weights: Vec<Rat>,
}

impl WeightOrder {
    pub fn new(weights: Vec<Rat>) -> WeightOrder {
        WeightOrder { weights }
    }

    /// Zero weights: the order degenerates to graded-lex largest-first.
    pub fn trivial(nvars: usize) -> WeightOrder {
        WeightOrder { weights: vec![rat(0); nvars] }
    }

    fn weight(&self, m: &Mono) -> Rat {
        self.weights
            .iter()
            .zip(m)
            .map(|(w, &e)| w * rat(e as i64))
            .sum()
    }

    /// `Less` when `a` is more leading than `b` (smaller weight, then
    /// graded-lex larger).
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self.weight(a).cmp(&self.weight(b)) {
            Ordering::Equal => grlex(b, a),
            other => other,
        }
    }

    /// Leading monomial and coefficient of a nonzero polynomial.
    pub fn leading<'p>(&self, p: &'p Poly) -> Option<(&'p Mono, &'p Rat)> {
        p.terms().min_by(|(a, _), (b, _)| self.cmp(a, b))
    }
}

fn grlex(a: &Mono, b: &Mono) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn divides(d: &Mono, m: &Mono) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn mono_div(m: &Mono, d: &Mono) -> Mono {
    m.iter().zip(d).map(|(a, b)| a - b).collect()
}

fn mono_lcm(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Caps keeping Buchberger runs bounded; exceeding one is an error rather
/// than a silent wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { max_basis: 4000, max_pairs: 400_000 }
    }
}

/// Fully reduces `p` against the basis: no term of the result is divisible
/// by a leading monomial of the basis.
pub fn normal_form(p: &Poly, basis: &[Poly], order: &WeightOrder) -> Result<Poly> {
    let leads: Vec<(Mono, Rat)> = basis
        .iter()
        .map(|g| {
            let (m, c) = order.leading(g).expect("basis members are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = p.clone();
    let mut rest = Poly::zero(p.universe());
    while let Some((m, c)) = order.leading(&work) {
        let (m, c) = (m.clone(), c.clone());
        let hit = leads.iter().position(|(lm, _)| divides(lm, &m));
        match hit {
            Some(k) => {
                let factor = &c / &leads[k].1;
                let shift = mono_div(&m, &leads[k].0);
                let sub = basis[k].mul_mono(&shift, &factor);
                work = work.sub(&sub)?;
            }
            None => {
                rest = rest.add(&Poly::monomial(p.universe(), m.clone(), c.clone()))?;
                work = work.sub(&Poly::monomial(p.universe(), m, c))?;
            }
        }
    }
    Ok(rest)
}

/// Buchberger's algorithm with a FIFO pair queue and the coprimality
/// criterion; the result is autoreduced and primitively normalized.
pub fn groebner_basis(gens: &[Poly], order: &WeightOrder, caps: Caps) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.clone());
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    let universe = basis[0].universe().clone();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in 0..i {
            queue.push_back((j, i));
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = queue.pop_front() {
        processed += 1;
        if processed > caps.max_pairs {
            return Err(Error::ResourceCap { what: "S-pairs", limit: caps.max_pairs });
        }
        let (lm_i, lc_i) = {
            let (m, c) = order.leading(&basis[i]).expect("nonzero");
            (m.clone(), c.clone())
        };
        let (lm_j, lc_j) = {
            let (m, c) = order.leading(&basis[j]).expect("nonzero");
            (m.clone(), c.clone())
        };
        let lcm = mono_lcm(&lm_i, &lm_j);
        // coprime leading monomials reduce to zero
        let product: Mono = lm_i.iter().zip(&lm_j).map(|(a, b)| a + b).collect();
        if lcm == product {
            continue;
        }
        let left = basis[i].mul_mono(&mono_div(&lcm, &lm_i), &(rat(1) / &lc_i));
        let right = basis[j].mul_mono(&mono_div(&lcm, &lm_j), &(rat(1) / &lc_j));
        let s = left.sub(&right)?;
        let nf = normal_form(&s, &basis, order)?;
        if nf.is_zero() {
            continue;
        }
        for k in 0..basis.len() {
            queue.push_back((k, basis.len()));
        }
        basis.push(nf);
        if basis.len() > caps.max_basis {
            return Err(Error::ResourceCap { what: "basis elements", limit: caps.max_basis });
        }
    }
    autoreduce(basis, &universe, order)
}

fn autoreduce(
    mut basis: Vec<Poly>,
    universe: &std::sync::Arc<crate::poly::Universe>,
    order: &WeightOrder,
) -> Result<Vec<Poly>> {
    let _ = universe;
    loop {
        let mut changed = false;
        let mut next: Vec<Poly> = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<Poly> = next
                .iter()
                .chain(basis[k + 1..].iter())
                .cloned()
                .collect();
            let nf = if others.is_empty() {
                basis[k].clone()
            } else {
                normal_form(&basis[k], &others, order)?
            };
            if nf != basis[k] {
                changed = true;
            }
            if !nf.is_zero() {
                next.push(nf.primitive_normalized());
            }
        }
        basis = next;
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        let la = order.leading(a).expect("nonzero").0;
        let lb = order.leading(b).expect("nonzero").0;
        order.cmp(la, lb)
    });
    Ok(basis)
}

/// Is the polynomial in the ideal spanned by the (Groebner) basis?
pub fn reduces_to_zero(p: &Poly, basis: &[Poly], order: &WeightOrder) -> Result<bool> {
    Ok(normal_form(p, basis, order)?.is_zero())
}

/// Initial forms of the basis elements for the weight vector, primitively
/// normalized with duplicates removed; these generate the initial ideal
/// when the input is a Groebner basis for the same weights.
pub fn initial_forms(basis: &[Poly], weights: &[Rat]) -> Result<Vec<Poly>> {
    let mut out: Vec<Poly> = Vec::new();
    for g in basis {
        let f = g.initial_form(weights)?.primitive_normalized();
        if !f.is_zero() && !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Ideal equality via mutual reduction of generators.
pub fn same_ideal(
    gens_a: &[Poly],
    gens_b: &[Poly],
    order: &WeightOrder,
    caps: Caps,
) -> Result<bool> {
    let gb_a = groebner_basis(gens_a, order, caps)?;
    let gb_b = groebner_basis(gens_b, order, caps)?;
    for p in gens_b {
        if !reduces_to_zero(p, &gb_a, order)? {
            return Ok(false);
        }
    }
    for p in gens_a {
        if !reduces_to_zero(p, &gb_b, order)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All monomials whose degree within each variable group matches `mults`;
/// `groups[v]` is the 1-based group of variable `v` and `mults[k-1]` the
/// required total degree of group `k`.
pub fn graded_monomials(groups: &[usize], mults: &[u32]) -> Vec<Mono> {
    let nvars = groups.len();
    let mut out = vec![vec![0u32; nvars]];
    for (k, &m) in mults.iter().enumerate() {
        let vars: Vec<usize> = (0..nvars).filter(|&v| groups[v] == k + 1).collect();
        let mut next = Vec::new();
        for base in &out {
            let mut acc = base.clone();
            distribute(&vars, m, 0, &mut acc, &mut next);
        }
        out = next;
    }
    out
}

fn distribute(vars: &[usize], left: u32, at: usize, acc: &mut Mono, out: &mut Vec<Mono>) {
    if at == vars.len() {
        if left == 0 {
            out.push(acc.clone());
        }
        return;
    }
    if at + 1 == vars.len() {
        acc[vars[at]] += left;
        out.push(acc.clone());
        acc[vars[at]] -= left;
        return;
    }
    for v in 0..=left {
        acc[vars[at]] += v;
        distribute(vars, left - v, at + 1, acc, out);
        acc[vars[at]] -= v;
    }
}

/// Monomials of the given multidegree avoiding every leading monomial of
/// the basis: a vector-space basis of the graded piece of the quotient.
pub fn standard_monomials(
    basis: &[Poly],
    order: &WeightOrder,
    groups: &[usize],
    mults: &[u32],
) -> Vec<Mono> {
    let leads: Vec<Mono> = basis
        .iter()
        .map(|g| order.leading(g).expect("nonzero").0.clone())
        .collect();
    graded_monomials(groups, mults)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| divides(l, m)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Universe;
    use std::sync::Arc;

    fn uni3() -> Arc<Universe> {
        Universe::new(
            "t",
            vec!["x".into(), "y".into(), "z".into()],
            false,
        )
    }

    fn var(u: &Arc<Universe>, k: usize) -> Poly {
        Poly::var(u, k)
    }

    #[test]
    fn leading_terms_follow_min_weights_with_grlex_ties() {
        let u = uni3();
        // f = x^2 + x y + y^2
        let x = var(&u, 0);
        let y = var(&u, 1);
        let f = x
            .mul(&x)
            .unwrap()
            .add(&x.mul(&y).unwrap())
            .unwrap()
            .add(&y.mul(&y).unwrap())
            .unwrap();
        let order = WeightOrder::new(vec![rat(1), rat(2), rat(0)]);
        assert_eq!(order.leading(&f).unwrap().0, &vec![2, 0, 0]);
        // equal weights: graded-lex larger monomial wins, so x^2 beats xy
        let order = WeightOrder::trivial(3);
        assert_eq!(order.leading(&f).unwrap().0, &vec![2, 0, 0]);
    }

    #[test]
    fn normal_form_reduces_all_terms() {
        let u = uni3();
        let x = var(&u, 0);
        let y = var(&u, 1);
        let z = var(&u, 2);
        // basis x - z (leading x under weights that favour x)
        let order = WeightOrder::new(vec![rat(-1), rat(0), rat(0)]);
        let g = x.sub(&z).unwrap();
        // x y + x z reduces to y z + z^2
        let p = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        let nf = normal_form(&p, &[g], &order).unwrap();
        let want = y.mul(&z).unwrap().add(&z.mul(&z).unwrap()).unwrap();
        assert_eq!(nf, want);
    }

    #[test]
    fn groebner_closes_a_twisted_cubic_style_example() {
        // x z - y^2 and x - z: basis must contain z^2 - ... the closure
        let u = uni3();
        let x = var(&u, 0);
        let y = var(&u, 1);
        let z = var(&u, 2);
        let order = WeightOrder::new(vec![rat(-2), rat(0), rat(0)]);
        let f = x.mul(&z).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        let g = x.sub(&z).unwrap();
        let gb = groebner_basis(&[f.clone(), g.clone()], &order, Caps::default()).unwrap();
        // z^2 - y^2 lies in the ideal
        let target = z.mul(&z).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert!(reduces_to_zero(&target, &gb, &order).unwrap());
        assert!(!reduces_to_zero(&y, &gb, &order).unwrap());
        for p in [&f, &g] {
            assert!(reduces_to_zero(p, &gb, &order).unwrap());
        }
    }

    #[test]
    fn same_ideal_detects_equality_and_difference() {
        let u = uni3();
        let x = var(&u, 0);
        let y = var(&u, 1);
        let order = WeightOrder::trivial(3);
        let a = vec![x.clone(), y.clone()];
        let b = vec![x.add(&y).unwrap(), x.sub(&y).unwrap()];
        assert!(same_ideal(&a, &b, &order, Caps::default()).unwrap());
        let c = vec![x.clone()];
        assert!(!same_ideal(&a, &c, &order, Caps::default()).unwrap());
    }

    #[test]
    fn caps_abort_runaway_runs() {
        let u = uni3();
        let x = var(&u, 0);
        let y = var(&u, 1);
        let z = var(&u, 2);
        let order = WeightOrder::trivial(3);
        let f = x.mul(&z).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        let g = x.mul(&y).unwrap().sub(&z.mul(&z).unwrap()).unwrap();
        let caps = Caps { max_basis: 4000, max_pairs: 1 };
        let err = groebner_basis(&[f, g], &order, caps);
        assert!(matches!(err, Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn graded_monomial_enumeration_counts() {
        // two groups: vars x, y in group 1, z in group 2
        let groups = vec![1, 1, 2];
        let monos = graded_monomials(&groups, &[2, 1]);
        // monomials of bidegree (2,1): x^2 z, x y z, y^2 z
        assert_eq!(monos.len(), 3);
        for m in &monos {
            assert_eq!(m[0] + m[1], 2);
            assert_eq!(m[2], 1);
        }
    }

    #[test]
    fn standard_monomials_of_a_monomial_ideal() {
        let u = uni3();
        let x = var(&u, 0);
        let order = WeightOrder::trivial(3);
        // ideal (x^2): standard monomials of total degree 2 in x, y with
        // z-degree 0 are x y and y^2
        let basis = vec![x.mul(&x).unwrap()];
        let groups = vec![1, 1, 2];
        let std = standard_monomials(&basis, &order, &groups, &[2, 0]);
        assert_eq!(std, vec![vec![0, 2, 0], vec![1, 1, 0]]);
    }
}
