//! Exact rational scalars: thin helpers around [`num::BigRational`].
//!
//! All coefficients in this crate are reduced fractions with positive
//! denominator, which is exactly the invariant `BigRational` maintains.
//! Serialization uses `"p/q"` strings (plain `"p"` when the denominator
//! is one).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Shorthand used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, q))
}

/// Scales a rational vector to a primitive integer vector.
///
/// The result is the unique positive multiple whose entries are coprime
/// integers; the zero vector is returned unchanged.  The scaling factor is
/// always positive, so inequalities keep their meaning.
pub fn primitive_scale(v: &[Rat]) -> Vec<Rat> {
    if v.iter().all(Zero::is_zero) {
        return v.to_vec();
    }
    let mut lcm_den = BigInt::one();
    for x in v {
        lcm_den = num::integer::lcm(lcm_den, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm_den / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = num::integer::gcd(gcd, n.clone());
    }
    ints.into_iter()
        .map(|n| BigRational::from_integer(n / &gcd))
        .collect()
}

/// True if every entry is an integer.
pub fn all_integer(v: &[Rat]) -> bool {
    v.iter().all(|x| x.denom().is_one())
}

/// Exact dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Sign as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-7", "3/4", "-22/7"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("-2/-4").unwrap()), "1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn primitive_scale_examples() {
        let v = vec![ratio(1, 2), ratio(-3, 4), rat(0)];
        let p = primitive_scale(&v);
        assert_eq!(p, vec![rat(2), rat(-3), rat(0)]);

        let v = vec![rat(4), rat(-6)];
        assert_eq!(primitive_scale(&v), vec![rat(2), rat(-3)]);

        let z = vec![rat(0), rat(0)];
        assert_eq!(primitive_scale(&z), z);

        // scaling factor is positive: an all-negative vector stays negative
        let v = vec![rat(-4), rat(-2)];
        assert_eq!(primitive_scale(&v), vec![rat(-2), rat(-1)]);
    }

    #[test]
    fn dot_product() {
        let a = vec![rat(1), rat(2), rat(-1)];
        let b = vec![rat(3), ratio(1, 2), rat(5)];
        assert_eq!(dot(&a, &b), rat(-1));
    }
}
