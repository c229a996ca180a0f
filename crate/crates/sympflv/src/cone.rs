//! Rational polyhedra in H-representation, Fourier-Motzkin elimination and
//! exact strict-feasibility certificates.
//!
//! A [`ConeH`] is a finite list of affine rows `coeffs . x REL rhs` with
//! `REL` either `=` or `>=`.  Despite the name it may describe any rational
//! polyhedron (the lattice polytopes in [`crate::fflv`] reuse it with
//! non-zero right-hand sides); for genuine cones every `rhs` is zero.
//!
//! Everything is exact: elimination and point searches never leave the
//! rationals, and all tie-breaking is by index, so results are deterministic.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::rat::{dot, primitive_scale, Rat};
use crate::{Error, Result};

/// Relation of a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rel {
    Eq,
    Geq,
}

/// One affine condition `coeffs . x REL rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Row {
    pub fn geq(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Row { coeffs, rel: Rel::Geq, rhs }
    }

    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Row { coeffs, rel: Rel::Eq, rhs }
    }

    /// `coeffs . x - rhs`.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        dot(&self.coeffs, x) - &self.rhs
    }

    pub fn holds(&self, x: &[Rat]) -> bool {
        let v = self.eval(x);
        match self.rel {
            Rel::Eq => v.is_zero(),
            Rel::Geq => !v.is_negative(),
        }
    }

    /// Scales to a primitive integer vector (jointly with the right-hand
    /// side).  Equality rows are additionally flipped so their first nonzero
    /// coefficient is positive; inequality rows only admit positive scaling.
    pub fn normalized(&self) -> Row {
        let mut joint = self.coeffs.clone();
        joint.push(self.rhs.clone());
        let mut joint = primitive_scale(&joint);
        if self.rel == Rel::Eq {
            let flip = joint
                .iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative());
            if flip {
                for x in joint.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        let rhs = joint.pop().expect("row has at least the rhs entry");
        Row { coeffs: joint, rel: self.rel, rhs }
    }
}

use num::Signed;

/// Where a point sits relative to the polyhedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    /// All equalities hold and every inequality is strict.
    Interior,
    /// All rows hold, at least one inequality with equality.
    Boundary,
    /// Some row fails.
    Outside,
}

/// Polyhedron in H-representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeH {
    pub dim: usize,
    pub rows: Vec<Row>,
}

impl ConeH {
    pub fn new(dim: usize, rows: Vec<Row>) -> Self {
        for r in &rows {
            assert_eq!(r.coeffs.len(), dim, "row width mismatch");
        }
        ConeH { dim, rows }
    }

    /// Normalizes every row and removes duplicates and trivial `0 >= 0`
    /// rows, keeping first-occurrence order.
    pub fn normalize(&self) -> ConeH {
        let mut seen = std::collections::BTreeSet::new();
        let mut rows = Vec::new();
        for r in &self.rows {
            let n = r.normalized();
            if n.coeffs.iter().all(Zero::is_zero) && n.rhs.is_zero() {
                continue;
            }
            if seen.insert((n.rel, n.coeffs.clone(), n.rhs.clone())) {
                rows.push(n);
            }
        }
        ConeH { dim: self.dim, rows }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.rows.iter().all(|r| r.holds(x))
    }

    pub fn membership(&self, x: &[Rat]) -> Position {
        assert_eq!(x.len(), self.dim, "point dimension mismatch");
        let mut boundary = false;
        for r in &self.rows {
            let v = r.eval(x);
            match r.rel {
                Rel::Eq => {
                    if !v.is_zero() {
                        return Position::Outside;
                    }
                }
                Rel::Geq => {
                    if v.is_negative() {
                        return Position::Outside;
                    }
                    if v.is_zero() {
                        boundary = true;
                    }
                }
            }
        }
        if boundary {
            Position::Boundary
        } else {
            Position::Interior
        }
    }

    /// Indices of inequality rows that hold with equality at `x`.
    pub fn tight_rows(&self, x: &[Rat]) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.rel == Rel::Geq && r.eval(x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Fourier-Motzkin projection eliminating coordinate `idx`.
    ///
    /// The result lives in `dim - 1` coordinates (index `idx` removed) and
    /// describes the image of the polyhedron under that projection.
    pub fn fm_eliminate(&self, idx: usize) -> Result<ConeH> {
        if idx >= self.dim {
            return Err(Error::DimMismatch { expected: self.dim, got: idx });
        }
        let mut sys = System::from_cone(self, false);
        sys.eliminate(idx)?;
        let mut rows: Vec<Row> = sys
            .finished_rows()
            .into_iter()
            .map(|r| {
                let mut coeffs = r.coeffs;
                coeffs.remove(idx);
                Row { coeffs, rel: r.rel, rhs: r.rhs }
            })
            .collect();
        rows.sort();
        Ok(ConeH { dim: self.dim - 1, rows }.normalize())
    }

    /// A rational point satisfying every equality exactly and every
    /// inequality strictly.
    ///
    /// Implemented by full Fourier-Motzkin elimination with strict-row
    /// bookkeeping and deterministic back-substitution; fails with
    /// [`Error::Infeasible`] when the relative interior in this sense is
    /// empty.
    pub fn strict_point(&self) -> Result<Vec<Rat>> {
        let mut sys = System::from_cone(self, true);
        sys.solve_all()
    }

    /// Witness that inequality row `drop` is irredundant: a point satisfying
    /// all other rows strictly (equalities exactly) while violating row
    /// `drop` strictly.
    pub fn irredundancy_witness(&self, drop: usize) -> Result<Vec<Rat>> {
        let mut rows = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            if i == drop {
                assert_eq!(r.rel, Rel::Geq, "can only drop inequality rows");
                let neg: Vec<Rat> = r.coeffs.iter().map(|c| -c.clone()).collect();
                // strictly violated: coeffs . x < rhs
                rows.push(Row::geq(neg, -r.rhs.clone()));
            } else {
                rows.push(r.clone());
            }
        }
        ConeH::new(self.dim, rows).strict_point()
    }
}

/// Strictness of an internal working row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Strict {
    Ge,
    Gt,
}

#[derive(Clone, Debug)]
struct IRow {
    coeffs: Vec<Rat>,
    rhs: Rat,
    strict: Strict,
}

#[derive(Clone, Debug)]
struct ERow {
    coeffs: Vec<Rat>,
    rhs: Rat,
}

enum ElimKind {
    /// Equality pivot row used to express the variable.
    Pivot(ERow),
    /// Inequality rows bounding the variable from below / above.
    Bounds { lowers: Vec<IRow>, uppers: Vec<IRow> },
}

struct Elim {
    var: usize,
    kind: ElimKind,
}

/// Working system for elimination.  Inequalities are kept in a map keyed by
/// their primitive functional so that parallel rows collapse to the
/// strongest representative.
struct System {
    dim: usize,
    eqs: Vec<ERow>,
    ineqs: BTreeMap<Vec<Rat>, (Rat, Strict)>,
    trail: Vec<Elim>,
    infeasible: bool,
}

impl System {
    fn from_cone(cone: &ConeH, strictly: bool) -> System {
        let mut sys = System {
            dim: cone.dim,
            eqs: Vec::new(),
            ineqs: BTreeMap::new(),
            trail: Vec::new(),
            infeasible: false,
        };
        for r in &cone.rows {
            match r.rel {
                Rel::Eq => sys.eqs.push(ERow { coeffs: r.coeffs.clone(), rhs: r.rhs.clone() }),
                Rel::Geq => {
                    let strict = if strictly { Strict::Gt } else { Strict::Ge };
                    sys.add_ineq(IRow { coeffs: r.coeffs.clone(), rhs: r.rhs.clone(), strict });
                }
            }
        }
        sys
    }

    fn add_ineq(&mut self, row: IRow) {
        if row.coeffs.iter().all(Zero::is_zero) {
            let bad = match row.strict {
                Strict::Ge => row.rhs.is_positive(),
                Strict::Gt => !row.rhs.is_negative(),
            };
            if bad {
                self.infeasible = true;
            }
            return;
        }
        let mut joint = row.coeffs;
        joint.push(row.rhs);
        let mut joint = primitive_scale(&joint);
        let rhs = joint.pop().unwrap();
        match self.ineqs.entry(joint) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((rhs, row.strict));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let (old_rhs, old_strict) = e.get().clone();
                // keep the stronger constraint
                let stronger = rhs > old_rhs
                    || (rhs == old_rhs && row.strict == Strict::Gt && old_strict == Strict::Ge);
                if stronger {
                    e.insert((rhs, row.strict));
                }
            }
        }
    }

    fn take_ineqs(&mut self) -> Vec<IRow> {
        std::mem::take(&mut self.ineqs)
            .into_iter()
            .map(|(coeffs, (rhs, strict))| IRow { coeffs, rhs, strict })
            .collect()
    }

    fn finished_rows(mut self) -> Vec<Row> {
        let mut rows: Vec<Row> = self
            .eqs
            .drain(..)
            .map(|e| Row { coeffs: e.coeffs, rel: Rel::Eq, rhs: e.rhs })
            .collect();
        for r in self.take_ineqs() {
            rows.push(Row { coeffs: r.coeffs, rel: Rel::Geq, rhs: r.rhs });
        }
        rows
    }

    /// Eliminates variable `var`, recording back-substitution data.
    fn eliminate(&mut self, var: usize) -> Result<()> {
        // Prefer an equality pivot: exact substitution, no row growth.
        if let Some(p) = self.eqs.iter().position(|e| !e.coeffs[var].is_zero()) {
            let pivot = self.eqs.remove(p);
            let c = pivot.coeffs[var].clone();
            for e in self.eqs.iter_mut() {
                if !e.coeffs[var].is_zero() {
                    let f = &e.coeffs[var] / &c;
                    for j in 0..self.dim {
                        let delta = &f * &pivot.coeffs[j];
                        e.coeffs[j] -= delta;
                    }
                    e.rhs -= &f * &pivot.rhs;
                    e.coeffs[var] = Rat::zero();
                }
            }
            let olds = self.take_ineqs();
            for mut r in olds {
                if !r.coeffs[var].is_zero() {
                    let f = &r.coeffs[var] / &c;
                    for j in 0..self.dim {
                        let delta = &f * &pivot.coeffs[j];
                        r.coeffs[j] -= delta;
                    }
                    r.rhs -= &f * &pivot.rhs;
                    r.coeffs[var] = Rat::zero();
                }
                self.add_ineq(r);
            }
            self.trail.push(Elim { var, kind: ElimKind::Pivot(pivot) });
            if self.infeasible {
                return Err(Error::Infeasible);
            }
            return Ok(());
        }

        // Fourier-Motzkin on the inequalities.
        let olds = self.take_ineqs();
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut keep = Vec::new();
        for r in olds {
            if r.coeffs[var].is_positive() {
                lowers.push(r);
            } else if r.coeffs[var].is_negative() {
                uppers.push(r);
            } else {
                keep.push(r);
            }
        }
        for r in keep {
            self.add_ineq(r);
        }
        for lo in &lowers {
            for up in &uppers {
                // lo: cl x + rest_l >= bl (cl > 0), up: cu x + rest_u >= bu (cu < 0)
                let cl = &lo.coeffs[var];
                let cu = &up.coeffs[var];
                // the combination cancels exactly at `var`, so no special case
                let coeffs: Vec<Rat> = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(l, u)| -(cu * l) + cl * u)
                    .collect();
                let rhs = -(cu * &lo.rhs) + cl * &up.rhs;
                let strict = if lo.strict == Strict::Gt || up.strict == Strict::Gt {
                    Strict::Gt
                } else {
                    Strict::Ge
                };
                self.add_ineq(IRow { coeffs, rhs, strict });
            }
        }
        self.trail.push(Elim { var, kind: ElimKind::Bounds { lowers, uppers } });
        if self.infeasible {
            return Err(Error::Infeasible);
        }
        Ok(())
    }

    /// Deterministic elimination order: variables not occurring at all
    /// first, then the variable minimizing the number of row products,
    /// ties broken by index.
    fn next_var(&self, remaining: &[bool]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None; // (cost, var)
        for v in 0..self.dim {
            if !remaining[v] {
                continue;
            }
            if self.eqs.iter().any(|e| !e.coeffs[v].is_zero()) {
                // equality pivots are free
                return Some(v);
            }
            let mut pos = 0usize;
            let mut neg = 0usize;
            for coeffs in self.ineqs.keys() {
                if coeffs[v].is_positive() {
                    pos += 1;
                } else if coeffs[v].is_negative() {
                    neg += 1;
                }
            }
            let cost = pos * neg;
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn solve_all(&mut self) -> Result<Vec<Rat>> {
        if self.infeasible {
            return Err(Error::Infeasible);
        }
        let mut remaining = vec![true; self.dim];
        while let Some(v) = self.next_var(&remaining) {
            remaining[v] = false;
            self.eliminate(v)?;
        }
        // all variables eliminated: remaining equality rows must read 0 = 0
        if self.eqs.iter().any(|e| !e.rhs.is_zero()) {
            return Err(Error::Infeasible);
        }
        // back-substitution
        let mut x = vec![Rat::zero(); self.dim];
        let half = Rat::new(1.into(), 2.into());
        let residual = |coeffs: &[Rat], rhs: &Rat, skip: usize, x: &[Rat]| {
            let mut rest = rhs.clone();
            for (j, (c, xj)) in coeffs.iter().zip(x).enumerate() {
                if j != skip && !c.is_zero() {
                    rest -= c * xj;
                }
            }
            rest
        };
        for elim in self.trail.iter().rev() {
            match &elim.kind {
                ElimKind::Pivot(p) => {
                    let rest = residual(&p.coeffs, &p.rhs, elim.var, &x);
                    x[elim.var] = rest / &p.coeffs[elim.var];
                }
                ElimKind::Bounds { lowers, uppers } => {
                    let mut lo: Option<(Rat, Strict)> = None;
                    for r in lowers {
                        let rest = residual(&r.coeffs, &r.rhs, elim.var, &x);
                        let bound = rest / &r.coeffs[elim.var];
                        let better = match &lo {
                            None => true,
                            Some((b, s)) => {
                                bound > *b || (bound == *b && r.strict == Strict::Gt && *s == Strict::Ge)
                            }
                        };
                        if better {
                            lo = Some((bound, r.strict));
                        }
                    }
                    let mut hi: Option<(Rat, Strict)> = None;
                    for r in uppers {
                        let rest = residual(&r.coeffs, &r.rhs, elim.var, &x);
                        let bound = rest / &r.coeffs[elim.var]; // negative coefficient: upper bound
                        let better = match &hi {
                            None => true,
                            Some((b, s)) => {
                                bound < *b || (bound == *b && r.strict == Strict::Gt && *s == Strict::Ge)
                            }
                        };
                        if better {
                            hi = Some((bound, r.strict));
                        }
                    }
                    x[elim.var] = match (lo, hi) {
                        (None, None) => Rat::zero(),
                        (Some((b, s)), None) => {
                            if s == Strict::Gt {
                                b + Rat::one()
                            } else {
                                b
                            }
                        }
                        (None, Some((b, s))) => {
                            if s == Strict::Gt {
                                b - Rat::one()
                            } else {
                                b
                            }
                        }
                        (Some((bl, sl)), Some((bh, sh))) => {
                            if bl < bh {
                                (&bl + &bh) * &half
                            } else if bl == bh && sl == Strict::Ge && sh == Strict::Ge {
                                bl
                            } else {
                                return Err(Error::Infeasible);
                            }
                        }
                    };
                }
            }
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn geq(c: &[i64], rhs: i64) -> Row {
        Row::geq(c.iter().map(|&x| rat(x)).collect(), rat(rhs))
    }

    fn eq(c: &[i64], rhs: i64) -> Row {
        Row::eq(c.iter().map(|&x| rat(x)).collect(), rat(rhs))
    }

    #[test]
    fn normalize_scales_and_dedupes() {
        let cone = ConeH::new(
            2,
            vec![
                geq(&[2, 4], 0),
                geq(&[1, 2], 0),
                Row::geq(vec![crate::rat::ratio(1, 3), crate::rat::ratio(2, 3)], rat(0)),
                geq(&[0, 0], 0),
            ],
        );
        let n = cone.normalize();
        assert_eq!(n.rows.len(), 1);
        assert_eq!(n.rows[0], geq(&[1, 2], 0));
    }

    #[test]
    fn normalize_flips_equalities_only() {
        let cone = ConeH::new(2, vec![eq(&[-2, 4], 0), geq(&[-2, 4], 0)]);
        let n = cone.normalize();
        assert_eq!(n.rows[0], eq(&[1, -2], 0));
        assert_eq!(n.rows[1], geq(&[-1, 2], 0));
    }

    #[test]
    fn membership_positions() {
        // x >= 0, y - x >= 0
        let cone = ConeH::new(2, vec![geq(&[1, 0], 0), geq(&[-1, 1], 0)]);
        assert_eq!(cone.membership(&[rat(1), rat(2)]), Position::Interior);
        assert_eq!(cone.membership(&[rat(0), rat(2)]), Position::Boundary);
        assert_eq!(cone.membership(&[rat(1), rat(0)]), Position::Outside);
    }

    #[test]
    fn fm_eliminate_combines_bounds() {
        // x >= 0 and y - x >= 0 project to y >= 0
        let cone = ConeH::new(2, vec![geq(&[1, 0], 0), geq(&[-1, 1], 0)]);
        let p = cone.fm_eliminate(0).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(p.rows, vec![geq(&[1], 0)]);
    }

    #[test]
    fn fm_eliminate_equality_pivot() {
        // x = 0 projects to an empty system
        let cone = ConeH::new(1, vec![eq(&[1], 0)]);
        let p = cone.fm_eliminate(0).unwrap();
        assert_eq!(p.dim, 0);
        assert!(p.rows.is_empty());
    }

    #[test]
    fn fm_eliminate_one_sided_drops_rows() {
        // only an upper bound on x: projection keeps just the unrelated row
        let cone = ConeH::new(2, vec![geq(&[-1, 2], 0), geq(&[0, 1], 0)]);
        let p = cone.fm_eliminate(0).unwrap();
        assert_eq!(p.rows, vec![geq(&[1], 0)]);
    }

    #[test]
    fn strict_point_simple() {
        let cone = ConeH::new(2, vec![geq(&[1, 0], 0), geq(&[-1, 1], 0)]);
        let x = cone.strict_point().unwrap();
        assert!(x[0].is_positive());
        assert!(x[1] > x[0]);
    }

    #[test]
    fn strict_point_with_equalities() {
        // x + y + z = 1, x,y,z >= 0 strictly
        let cone = ConeH::new(
            3,
            vec![
                eq(&[1, 1, 1], 1),
                geq(&[1, 0, 0], 0),
                geq(&[0, 1, 0], 0),
                geq(&[0, 0, 1], 0),
            ],
        );
        let x = cone.strict_point().unwrap();
        assert_eq!(&x[0] + &x[1] + &x[2], rat(1));
        assert!(x.iter().all(|v| v.is_positive()));
    }

    #[test]
    fn strict_point_infeasible() {
        // x >= 1 and -x >= 0 cannot both hold
        let cone = ConeH::new(1, vec![geq(&[1], 1), geq(&[-1], 0)]);
        assert!(matches!(cone.strict_point(), Err(Error::Infeasible)));
        // x >= 0 and -x >= 0 has no strict point either
        let cone = ConeH::new(1, vec![geq(&[1], 0), geq(&[-1], 0)]);
        assert!(matches!(cone.strict_point(), Err(Error::Infeasible)));
    }

    #[test]
    fn strict_point_bounded_box() {
        let cone = ConeH::new(1, vec![geq(&[1], 2), geq(&[-1], -3)]);
        let x = cone.strict_point().unwrap();
        assert!(x[0] > rat(2) && x[0] < rat(3));
    }

    #[test]
    fn irredundancy_witness_works() {
        // triangle-ish cone: x >= 0, y >= 0, x + y >= 0 (third is redundant)
        let cone = ConeH::new(2, vec![geq(&[1, 0], 0), geq(&[0, 1], 0), geq(&[1, 1], 0)]);
        let w = cone.irredundancy_witness(0).unwrap();
        assert!(w[0].is_negative());
        assert!(w[1].is_positive());
        // the redundant row has no witness
        assert!(cone.irredundancy_witness(2).is_err());
    }

    #[test]
    fn parallel_rows_keep_strongest() {
        let cone = ConeH::new(1, vec![geq(&[1], 0), geq(&[1], 5), geq(&[2], 4)]);
        let x = cone.strict_point().unwrap();
        assert!(x[0] > rat(5));
    }
}
