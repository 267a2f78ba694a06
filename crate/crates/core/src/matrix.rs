//! Square matrices over an exact [`Ring`], plus the rational linear algebra
//! (rank, inverse) that the Lie algebra layer needs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AtlasError, Result};
use crate::ring::{parse_rational, CoeffDisplay, QPoly, Rational, Ring};

/// A dense square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    dim: usize,
    data: Vec<R>,
}

pub type RationalMatrix = Matrix<Rational>;

/// Matrices whose entries are polynomials in the slice parameter `t`.
pub type PolyMatrix = Matrix<QPoly>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![R::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, R::one());
        }
        m
    }

    /// `E_{ij}`, zero-based.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.set(i, j, R::one());
        m
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(AtlasError::DimensionMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        Ok(Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> R {
        (0..self.dim).fold(R::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AtlasError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * n + j].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Commutator `ab - ba`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Restriction to the principal block on the given index range.
    pub fn block(&self, range: std::ops::Range<usize>) -> Self {
        let start = range.start;
        Self::from_fn(range.len(), |i, j| self.get(start + i, start + j).clone())
    }

    /// Conjugates by a permutation: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(perm[i], perm[j]).clone())
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;

    fn mul(self, rhs: Self) -> Matrix<R> {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;

    fn add(self, rhs: Self) -> Matrix<R> {
        self.try_add(rhs).expect("matrix dimensions agree")
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;

    fn sub(self, rhs: Self) -> Matrix<R> {
        self.try_sub(rhs).expect("matrix dimensions agree")
    }
}

impl<R: Ring> Neg for &Matrix<R> {
    type Output = Matrix<R>;

    fn neg(self) -> Matrix<R> {
        self.map(|x| -x.clone())
    }
}

impl RationalMatrix {
    /// Embeds into matrices over `Q[t]` as constant polynomials.
    pub fn to_poly(&self) -> PolyMatrix {
        self.map(|q| QPoly::constant(q.clone()))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = self.rows().map(|r| r.to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = Self::identity(n).rows().map(|r| r.to_vec()).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for k in 0..n {
                    let da = &f * &a[col][k];
                    a[r][k] -= da;
                    let di = &f * &inv[col][k];
                    inv[r][k] -= di;
                }
            }
        }
        Self::from_rows(inv).ok()
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = self.rows().map(|r| r.to_vec()).collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &p;
                for k in col..n {
                    let d = &f * &a[col][k];
                    a[r][k] -= d;
                }
            }
        }
        det
    }
}

/// Rank of a rational matrix given as column vectors, by fraction-free
/// elimination: each column is scaled to a primitive integer vector and rows
/// are combined with integer multipliers, then divided by their content.
pub fn rank_of_columns(columns: &[Vec<Rational>]) -> usize {
    // Work on the transpose: rank(columns) = rank of the row set.
    let mut rows: Vec<Vec<BigInt>> = columns
        .iter()
        .map(|c| primitive_integer_vector(c))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let width = columns.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let mp = p / &g;
            let mr = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(pivot_row).skip(col) {
                *x = &*x * &mp - &mr * y;
            }
            make_primitive(row);
        }
        rank += 1;
    }
    rank
}

fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Matrix entries that have a JSON form: rationals as `"p/q"` strings,
/// polynomials as ascending coefficient arrays of such strings.
pub trait JsonEntry: Sized {
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self>;
}

impl JsonEntry for Rational {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }

    fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => parse_rational(s),
            serde_json::Value::Number(n) if n.is_i64() => {
                Ok(Rational::from_integer(n.as_i64().unwrap().into()))
            }
            other => Err(AtlasError::Parse(format!("expected \"p/q\", got {other}"))),
        }
    }
}

/// `serialize_with` helper writing a rational as a `"p/q"` string.
pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// `serialize_with` helper for a list of rationals.
pub fn serialize_rationals<S: Serializer>(
    qs: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(ToString::to_string))
}

impl JsonEntry for QPoly {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs().iter().map(JsonEntry::to_json).collect())
    }

    fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| AtlasError::Parse(format!("expected coefficient array, got {v}")))?;
        Ok(QPoly::new(
            arr.iter().map(Rational::from_json).collect::<Result<_>>()?,
        ))
    }
}

impl<R: Ring + JsonEntry> Serialize for Matrix<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Value>> = self
            .rows()
            .map(|r| r.iter().map(JsonEntry::to_json).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de, R: Ring + JsonEntry> Deserialize<'de> for Matrix<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<serde_json::Value>>::deserialize(d)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(R::from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}

impl<R: Ring + CoeffDisplay> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(|x| x.render().0).collect())
            .collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = self.data.chunks(self.dim.max(1)).collect();
        f.debug_struct("Matrix").field("rows", &rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_ints(rows).unwrap()
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[5, -1]]);
        assert_eq!(a.bracket(&b).unwrap(), -&b.bracket(&a).unwrap());
        assert!(a.bracket(&a).unwrap().is_zero());
        assert!(a.bracket(&RationalMatrix::identity(3)).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1, 0], &[0, 1, 4], &[1, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RationalMatrix::identity(3));
        assert_eq!(a.determinant(), rat(6));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), rat(0));
    }

    #[test]
    fn rank_of_dependent_columns() {
        let cols = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank_of_columns(&cols), 2);
        assert_eq!(rank_of_columns(&[]), 0);
        assert_eq!(rank_of_columns(&[vec![rat(0), rat(0)]]), 0);
    }

    #[test]
    fn json_round_trip() {
        let a = RationalMatrix::from_rows(vec![
            vec![crate::ring::ratio(1, 2), rat(0)],
            vec![rat(-3), rat(1)],
        ])
        .unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"[["1/2","0"],["-3","1"]]"#);
        let back: RationalMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
