//! Exact coefficient rings.
//!
//! Everything in the crate is computed over [`Rational`] or over the
//! univariate polynomial ring `Q[t]` ([`QPoly`]) used for the formal slice
//! parameter. Both are commutative Q-algebras, which is what [`Ring`] models;
//! [`GcdDomain`] adds the gcd structure needed for squarefree tests.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{AtlasError, Result};

pub type Rational = num_rational::BigRational;

/// Univariate polynomials over the rationals, in the formal parameter `t`.
pub type QPoly = Poly<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || AtlasError::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AtlasError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// A commutative Q-algebra with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat(n))
    }

    /// `self += a * b`. Implementations may avoid the clones.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let acc = std::mem::replace(self, Self::zero());
        *self = acc + a.clone() * b.clone();
    }

    fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }
}

/// An integral domain with gcds, exact division and a choice of unit
/// normalisation.
pub trait GcdDomain: Ring {
    /// A normalised greatest common divisor; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;

    /// `Some(q)` with `self = q * other`, or `None` if `other` does not divide.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    /// The unit by which `self` is divided to normalise it. Equals one on zero.
    fn unit_part(&self) -> Self;

    fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_exact(&self.unit_part())
            .expect("unit part always divides")
    }

    fn is_unit(&self) -> bool {
        !self.is_zero() && self.normalized().is_one()
    }
}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_integer() && b.is_integer() && self.is_integer() {
            // Skip the gcd normalisation; integer inputs are the common case.
            *self = Rational::from_integer(self.numer() + a.numer() * b.numer());
        } else {
            *self += a * b;
        }
    }
}

impl GcdDomain for Rational {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            Rational::zero()
        } else {
            Rational::one()
        }
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }

    fn unit_part(&self) -> Self {
        if self.is_zero() {
            Rational::one()
        } else {
            self.clone()
        }
    }
}

/// Dense univariate polynomial, coefficients stored lowest degree first with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from coefficients listed highest degree first.
    pub fn from_leading_first(mut coeffs: Vec<R>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[R]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![-r.clone(), R::one()])
        })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * R::from_int(k as i64))
                .collect(),
        )
    }

    /// Division by a monic divisor; valid over any ring.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![R::zero(); n - d];
        for k in (d..n).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let neg = -c.clone();
            quot[k - d] = c;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k - d + i].add_mul(&neg, b);
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, computed without
    /// division.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lc = b.leading();
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let mut r = self.clone();
        let mut e = (da - db + 1) as u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = Self::monomial(r.leading(), dr - db);
            r = r.scale(&lc) - t * b.clone();
            e -= 1;
        }
        r.scale(&lc.pow(e))
    }

    /// Maps every coefficient through `f`.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: GcdDomain> Poly<R> {
    /// Normalised gcd of the coefficients.
    pub fn content(&self) -> R {
        self.coeffs
            .iter()
            .fold(R::zero(), |acc, c| acc.gcd(c))
            .normalized()
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(
            self.coeffs
                .iter()
                .map(|a| a.div_exact(&c).expect("content divides every coefficient"))
                .collect(),
        )
    }

    /// True when `gcd(p, p')` is a unit, i.e. `p` has no repeated factor over
    /// the fraction field of the coefficients.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
}

impl<R: GcdDomain> GcdDomain for Poly<R> {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let c = self.content().gcd(&other.content());
        let (mut p, mut r) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        loop {
            let rem = p.pseudo_rem(&r);
            if rem.is_zero() {
                break;
            }
            p = r;
            r = rem.primitive_part();
        }
        r.scale(&c).normalized()
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let lc = other.leading();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = rem.degree() {
            if dr < db {
                return None;
            }
            let c = rem.leading().div_exact(&lc)?;
            let t = Self::monomial(c, dr - db);
            rem = rem - t.clone() * other.clone();
            quot = quot + t;
        }
        Some(quot)
    }

    fn unit_part(&self) -> Self {
        if self.is_zero() {
            Self::one()
        } else {
            Self::constant(self.leading().unit_part())
        }
    }
}

/// Textual rendering of a coefficient inside a larger expression.
pub trait CoeffDisplay {
    /// Returns the rendering and whether it needs parentheses as a factor.
    fn render(&self) -> (String, bool);
}

impl CoeffDisplay for Rational {
    fn render(&self) -> (String, bool) {
        (self.to_string(), false)
    }
}

impl CoeffDisplay for QPoly {
    fn render(&self) -> (String, bool) {
        let nonzero = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        (self.display_in("t"), nonzero > 1)
    }
}

impl<R: Ring + CoeffDisplay> Poly<R> {
    /// Renders the polynomial in the named variable, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (mut body, compound) = c.render();
            let mut negative = false;
            if !compound {
                if let Some(stripped) = body.strip_prefix('-') {
                    negative = true;
                    body = stripped.to_string();
                }
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&if compound { format!("({body})") } else { body });
            } else if body == "1" {
                out.push_str(&monomial);
            } else if compound || (body.contains('/') && body.chars().all(|c| c.is_ascii_digit() || c == '/')) {
                // `(9/256)t^4`, not `9/256t^4`.
                out.push_str(&format!("({body}){monomial}"));
            } else {
                out.push_str(&format!("{body}{monomial}"));
            }
        }
        out
    }
}

impl<R: Ring + CoeffDisplay> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&k| rat(k)).collect())
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn gcd_over_rationals_is_monic() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = qp(&[-2, 1, 1]);
        let b = qp(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));
        assert_eq!(a.gcd(&qp(&[5])), qp(&[1]));
    }

    #[test]
    fn gcd_over_polynomial_coefficients() {
        // In Q[t][x]: (x - t)^2 (x + t) and its derivative share (x - t).
        let t = Poly::constant(QPoly::x());
        let x = Poly::<QPoly>::x();
        let p = (x.clone() - t.clone()) * (x.clone() - t.clone()) * (x.clone() + t.clone());
        let g = p.gcd(&p.derivative());
        assert_eq!(g, x - t);
        assert!(!p.is_squarefree());
    }

    #[test]
    fn pseudo_remainder_matches_division() {
        let a = qp(&[1, 2, 3, 4]);
        let b = qp(&[1, 0, 2]);
        let r = a.pseudo_rem(&b);
        // lc(b)^2 * a = q*b + r with deg r < 2
        assert!(r.degree().unwrap() < 2);
        let scaled = a.scale(&rat(4)) - r;
        assert!(scaled.div_exact(&b).is_some());
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(qp(&[0, -1, 0, 1]).display_in("t"), "t^3 - t");
        let lam = Poly::<QPoly>::from_leading_first(vec![
            QPoly::one(),
            QPoly::zero(),
            -qp(&[0, 0, 1]),
            QPoly::zero(),
            QPoly::zero(),
        ]);
        assert_eq!(lam.display_in("λ"), "λ^4 - t^2λ^2");
    }
}
