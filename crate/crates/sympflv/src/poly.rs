//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Poly`] lives in a fixed [`Universe`] (an ordered list of named
//! variables); mixing universes is an error.  Terms are kept in a `BTreeMap`
//! keyed by dense exponent vectors, so iteration order — and hence printing
//! and serialization — is canonical.
//!
//! Initial forms follow the *min* convention: `initial_form(f, w)` keeps the
//! terms whose exponent has minimal scalar product with the weight vector.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde_json::{json, Value};

use crate::rat::{format_rat, parse_rat, Rat};
use crate::{Error, Result};

/// Exponent vector, one entry per universe variable.
pub type Mono = Vec<u32>;

/// An ordered set of named variables.
///
/// `label` identifies the universe (two universes are compatible iff their
/// labels agree); `names` are the serialization keys of the variables; with
/// `wrap` set, display output wraps names as `X(name)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    pub label: String,
    pub names: Vec<String>,
    pub wrap: bool,
}

impl Universe {
    pub fn new(label: impl Into<String>, names: Vec<String>, wrap: bool) -> Arc<Universe> {
        Arc::new(Universe { label: label.into(), names, wrap })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn display_var(&self, idx: usize) -> String {
        if self.wrap {
            format!("X({})", self.names[idx])
        } else {
            self.names[idx].clone()
        }
    }

    fn compatible(&self, other: &Universe) -> bool {
        self.label == other.label
    }
}

/// Sparse polynomial over a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    universe: Arc<Universe>,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(u: &Arc<Universe>) -> Poly {
        Poly { universe: u.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(u: &Arc<Universe>, c: Rat) -> Poly {
        let mut p = Poly::zero(u);
        if !c.is_zero() {
            p.terms.insert(vec![0; u.len()], c);
        }
        p
    }

    pub fn one(u: &Arc<Universe>) -> Poly {
        Poly::constant(u, Rat::one())
    }

    pub fn var(u: &Arc<Universe>, idx: usize) -> Poly {
        assert!(idx < u.len(), "variable index out of range");
        let mut m = vec![0; u.len()];
        m[idx] = 1;
        Poly::monomial(u, m, Rat::one())
    }

    pub fn monomial(u: &Arc<Universe>, mono: Mono, coeff: Rat) -> Poly {
        assert_eq!(mono.len(), u.len(), "exponent width mismatch");
        let mut p = Poly::zero(u);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Mono) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_universe(&self, other: &Poly) -> Result<()> {
        if self.universe.compatible(&other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn add_term(&mut self, mono: Mono, coeff: Rat) {
        assert_eq!(mono.len(), self.universe.len(), "exponent width mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(&self.universe);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.universe);
        }
        let mut out = Poly::zero(&self.universe);
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_universe(other)?;
        let mut out = Poly::zero(&self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_mono(&self, mono: &Mono, coeff: &Rat) -> Poly {
        let mut out = Poly::zero(&self.universe);
        if coeff.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let mm: Mono = m.iter().zip(mono).map(|(a, b)| a + b).collect();
            out.terms.insert(mm, c * coeff);
        }
        out
    }

    /// Weight of a monomial under a rational weight vector.
    pub fn mono_weight(mono: &Mono, w: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, wi) in mono.iter().zip(w) {
            if *e != 0 && !wi.is_zero() {
                acc += wi * Rat::from_integer((*e).into());
            }
        }
        acc
    }

    /// Min-convention initial form: keeps the terms of minimal `w`-weight.
    pub fn initial_form(&self, w: &[Rat]) -> Result<Poly> {
        if w.len() != self.universe.len() {
            return Err(Error::WeightMismatch);
        }
        let mut best: Option<Rat> = None;
        for m in self.terms.keys() {
            let wt = Poly::mono_weight(m, w);
            if best.as_ref().is_none_or(|b| wt < *b) {
                best = Some(wt);
            }
        }
        let Some(best) = best else {
            return Ok(Poly::zero(&self.universe));
        };
        let mut out = Poly::zero(&self.universe);
        for (m, c) in &self.terms {
            if Poly::mono_weight(m, w) == best {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Algebra morphism determined by variable images.
    ///
    /// `images[i]` is the image of variable `i`; all images must live in one
    /// universe, which becomes the universe of the result.
    pub fn eval_hom(&self, target: &Arc<Universe>, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.universe.len() {
            return Err(Error::DimMismatch { expected: self.universe.len(), got: images.len() });
        }
        for img in images {
            if !img.universe.compatible(target) {
                return Err(Error::UniverseMismatch);
            }
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[v])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Total degree (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Scales so coefficients are coprime integers and the leading
    /// (first-in-map) coefficient is positive.
    pub fn primitive_normalized(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Rat> = self.terms.values().cloned().collect();
        let prim = crate::rat::primitive_scale(&coeffs);
        let flip = prim[0].is_negative();
        let mut out = Poly::zero(&self.universe);
        for ((m, _), c) in self.terms.iter().zip(prim) {
            out.terms.insert(m.clone(), if flip { -c } else { c });
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: Vec<Value> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(v, &e)| json!([self.universe.names[v], e]))
                    .collect();
                json!({ "coeff": format_rat(c), "exps": exps })
            })
            .collect();
        json!({ "universe": self.universe.label, "terms": terms })
    }

    pub fn from_json(value: &Value, u: &Arc<Universe>) -> Result<Poly> {
        let obj = value.as_object().ok_or_else(|| Error::Parse("poly: expected object".into()))?;
        if let Some(label) = obj.get("universe").and_then(Value::as_str) {
            if label != u.label {
                return Err(Error::UniverseMismatch);
            }
        }
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("poly: missing terms".into()))?;
        let mut out = Poly::zero(u);
        for t in terms {
            let c = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("poly: missing coeff".into()))?;
            let c = parse_rat(c)?;
            let mut m = vec![0u32; u.len()];
            for pair in t
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("poly: missing exps".into()))?
            {
                let arr = pair.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                    Error::Parse("poly: exps entries must be [variable, power]".into())
                })?;
                let name = arr[0]
                    .as_str()
                    .ok_or_else(|| Error::Parse("poly: variable must be a string".into()))?;
                let pow = arr[1]
                    .as_u64()
                    .ok_or_else(|| Error::Parse("poly: power must be a nonnegative integer".into()))?;
                let idx = u
                    .var_index(name)
                    .ok_or_else(|| Error::Parse(format!("poly: unknown variable {name:?}")))?;
                m[idx] += pow as u32;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }
}

use num::Signed;

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const {
                write!(f, "{}", format_rat(&mag))?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.universe.display_var(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
