//! Spectral data for `GL_n` sheets.
//!
//! A point of the S-Hitchin base of the sheet with multiplicity profile
//! `l` is a tuple `(xi_1, ..., xi_s)` of monic polynomials with
//! `deg xi_i = l_i`. Its image in the ordinary Hitchin base is the
//! characteristic polynomial `prod xi_i^i`. Sections of line bundles are
//! modelled by elements of the coefficient ring: rationals, or polynomials
//! in one chart variable.

use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AtlasError, Result};
use crate::matrix::JsonEntry;
use crate::partitions::{MultiplicityProfile, Partition};
use crate::ring::{CoeffDisplay, GcdDomain, Poly, Rational, Ring};

/// A monic polynomial `lambda^d + a_1 lambda^{d-1} + ... + a_d`, where the
/// coefficient `a_k` has weight `k`. Degree 0 is the constant polynomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradedPolynomial<R> {
    a: Vec<R>,
}

impl<R: Ring> GradedPolynomial<R> {
    /// From `a_1..a_d`.
    pub fn from_coefficients(a: Vec<R>) -> Self {
        GradedPolynomial { a }
    }

    pub fn one() -> Self {
        GradedPolynomial { a: Vec::new() }
    }

    /// `lambda^d`.
    pub fn monomial(d: usize) -> Self {
        GradedPolynomial {
            a: vec![R::zero(); d],
        }
    }

    /// `prod (lambda - r)`.
    pub fn from_roots(roots: &[R]) -> Self {
        Self::from_poly(&Poly::from_roots(roots)).expect("product of monic factors is monic")
    }

    /// Fails unless `p` is monic.
    pub fn from_poly(p: &Poly<R>) -> Result<Self> {
        let Some(d) = p.degree() else {
            return Err(AtlasError::InvalidPoint("zero polynomial is not monic".into()));
        };
        if !p.leading().is_one() {
            return Err(AtlasError::InvalidPoint(format!(
                "polynomial of degree {d} is not monic"
            )));
        }
        Ok(GradedPolynomial {
            a: (1..=d).map(|k| p.coeff(d - k)).collect(),
        })
    }

    pub fn to_poly(&self) -> Poly<R> {
        let mut lead_first = Vec::with_capacity(self.a.len() + 1);
        lead_first.push(R::one());
        lead_first.extend(self.a.iter().cloned());
        Poly::from_leading_first(lead_first)
    }

    pub fn degree(&self) -> usize {
        self.a.len()
    }

    /// `a_1..a_d`.
    pub fn coefficients(&self) -> &[R] {
        &self.a
    }

    /// `a_k` for `1 <= k <= d`.
    pub fn coefficient(&self, k: usize) -> Option<&R> {
        k.checked_sub(1).and_then(|i| self.a.get(i))
    }

    /// Weight of `a_k`: the power of the canonical bundle it is a section of.
    pub fn weight(k: usize) -> usize {
        k
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_poly(&(self.to_poly() * other.to_poly())).expect("monic times monic")
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::from_poly(&Ring::pow(&self.to_poly(), k)).expect("power of a monic polynomial")
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GradedPolynomial<S> {
        GradedPolynomial {
            a: self.a.iter().map(f).collect(),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        let (_, rem) = other.to_poly().div_rem_monic(&self.to_poly());
        rem.is_zero()
    }
}

impl<R: GcdDomain> GradedPolynomial<R> {
    pub fn is_squarefree(&self) -> bool {
        self.to_poly().is_squarefree()
    }
}

impl<R: Ring + CoeffDisplay> fmt::Display for GradedPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().display_in("λ"))
    }
}

impl<R: Ring + JsonEntry> Serialize for GradedPolynomial<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "degree": self.degree(),
            "a": self.a.iter().map(JsonEntry::to_json).collect::<Vec<_>>(),
        })
        .serialize(s)
    }
}

impl<'de, R: Ring + JsonEntry> Deserialize<'de> for GradedPolynomial<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            a: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.a.len() != raw.degree {
            return Err(D::Error::custom(format!(
                "degree {} but {} coefficients",
                raw.degree,
                raw.a.len()
            )));
        }
        let a = raw
            .a
            .iter()
            .map(R::from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(GradedPolynomial { a })
    }
}

/// A point `(xi_1, ..., xi_s)` of the S-Hitchin base of a `GL_n` sheet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "R: Ring + JsonEntry",
    deserialize = "R: Ring + JsonEntry"
))]
pub struct SheetBasePoint<R> {
    profile: MultiplicityProfile,
    factors: Vec<GradedPolynomial<R>>,
}

impl<R: Ring> SheetBasePoint<R> {
    /// Checks `deg xi_i = l_i` for every `i = 1..=s`.
    pub fn new(profile: MultiplicityProfile, factors: Vec<GradedPolynomial<R>>) -> Result<Self> {
        if factors.len() != profile.s() {
            return Err(AtlasError::InvalidPoint(format!(
                "profile has s = {} but {} factors were given",
                profile.s(),
                factors.len()
            )));
        }
        for ((i, l), xi) in profile.iter().zip(&factors) {
            if xi.degree() != l {
                return Err(AtlasError::InvalidPoint(format!(
                    "factor {i} has degree {} but l_{i} = {l}",
                    xi.degree()
                )));
            }
        }
        Ok(SheetBasePoint { profile, factors })
    }

    /// Point for the sheet labelled by the Levi partition `m`.
    pub fn for_levi(m: &Partition, factors: Vec<GradedPolynomial<R>>) -> Result<Self> {
        Self::new(m.profile(), factors)
    }

    pub fn profile(&self) -> &MultiplicityProfile {
        &self.profile
    }

    pub fn factors(&self) -> &[GradedPolynomial<R>] {
        &self.factors
    }

    /// `n = sum i * l_i`.
    pub fn n(&self) -> usize {
        self.profile.n()
    }
}

/// The composition map: `(xi_1, ..., xi_s) -> prod xi_i^i`.
pub fn mu_s<R: Ring>(point: &SheetBasePoint<R>) -> GradedPolynomial<R> {
    let image = point
        .factors
        .iter()
        .enumerate()
        .fold(Poly::one(), |acc, (k, xi)| acc * Ring::pow(&xi.to_poly(), k as u32 + 1));
    GradedPolynomial::from_poly(&image).expect("product of monic factors is monic")
}

/// `prod xi_i`, each factor once. Annihilates the Higgs field of any point
/// in the sheet and divides [`mu_s`].
pub fn min_poly<R: Ring>(point: &SheetBasePoint<R>) -> GradedPolynomial<R> {
    let product = point.factors.iter().fold(Poly::one(), |acc, xi| acc * xi.to_poly());
    GradedPolynomial::from_poly(&product).expect("product of monic factors is monic")
}

/// Heart-locus test: every `xi_i` is squarefree (reduced spectral factor).
pub fn in_heart<R: GcdDomain>(point: &SheetBasePoint<R>) -> bool {
    point.factors.iter().all(GradedPolynomial::is_squarefree)
}

/// The two points `((λ-a)^2, λ+a)` and `((λ+a)^2, λ-a)` for the profile of
/// `(2,1,1)`. They are distinct for `a != 0` and share the image
/// `(λ-a)^2 (λ+a)^2`.
pub fn witness_noninjectivity(
    a: &Rational,
) -> Result<(SheetBasePoint<Rational>, SheetBasePoint<Rational>)> {
    if a.is_zero() {
        return Err(AtlasError::Degenerate(
            "a = 0 makes the two points coincide".into(),
        ));
    }
    let m = Partition::new(vec![2, 1, 1])?;
    let minus = -a.clone();
    let first = SheetBasePoint::for_levi(
        &m,
        vec![
            GradedPolynomial::from_roots(&[a.clone(), a.clone()]),
            GradedPolynomial::from_roots(&[minus.clone()]),
        ],
    )?;
    let second = SheetBasePoint::for_levi(
        &m,
        vec![
            GradedPolynomial::from_roots(&[minus.clone(), minus]),
            GradedPolynomial::from_roots(&[a.clone()]),
        ],
    )?;
    if mu_s(&first) != mu_s(&second) {
        return Err(AtlasError::Verification(
            "witness points have different images".into(),
        ));
    }
    if in_heart(&first) || in_heart(&second) {
        return Err(AtlasError::Verification(
            "witness points unexpectedly lie in the heart".into(),
        ));
    }
    Ok((first, second))
}

/// Spectral image of the distinguished component for the `Sp_4` Dixmier
/// sheet with Levi `G_m x Sp_2`: `λ^4 - b^2 λ^2`.
pub fn sp4_dix_image<R: Ring>(b: &R) -> GradedPolynomial<R> {
    GradedPolynomial::from_coefficients(vec![
        R::zero(),
        -(b.clone() * b.clone()),
        R::zero(),
        R::zero(),
    ])
}
