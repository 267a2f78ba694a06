//! Explicit `sl_2`-triples adapted to maximal Levi subgroups, and the
//! Katsylo slice of the `sp_4` Dixmier sheet with Levi `G_m x Sp_2`.
//!
//! For `GL_n` the triple lives on `C^{m_1} + C^{m_2}`. For `SO_n` and
//! `Sp_2m` it is built on a normalised Jordan basis `v_{i,j}` of the
//! induced nilpotent, with `e v_{i,j} = v_{i-1,j}` and the form pairing
//! `v_{i,j}` with `v_{i',beta(j)}` exactly when `i + i' = n_j + 1`. The
//! basis is then reordered so that the parabolic flag
//! `0 < V+ < V+ + W < V` is a flag of coordinate subspaces.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::liealg::{
    centralizer_dim, char_poly, in_algebra, ClassicalForm, FormSymmetry, LieAlgebraModel,
};
use crate::matrix::{Matrix, PolyMatrix, RationalMatrix};
use crate::partitions::Partition;
use crate::ring::{ratio, QPoly, Rational, Ring};
use crate::sheets::{
    classify_maximal_levi, maximal_levi_sheet, GroupKind, LeviLabel, RamificationType,
};
use crate::spectral::GradedPolynomial;

/// The linear functional on `l` whose kernel is `[l, l]` plus the
/// non-central part, used to test that `h` has nonzero image in the centre.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "map", rename_all = "snake_case")]
pub enum Abelianization {
    /// `(x_1, x_2) -> m_2 tr(x_1) - m_1 tr(x_2)` on `gl_{m_1} + gl_{m_2}`.
    GlPair { m1: usize, m2: usize },
    /// Trace on the first `a` coordinates (the `GL_a` factor acting on `V+`).
    TraceOnFirst { a: usize },
}

impl Abelianization {
    pub fn apply(&self, x: &RationalMatrix) -> Rational {
        let trace = |range: std::ops::Range<usize>| {
            range.fold(Rational::zero(), |acc, i| acc + x.get(i, i).clone())
        };
        match *self {
            Abelianization::GlPair { m1, m2 } => {
                trace(0..m1) * Rational::from_int(m2 as i64)
                    - trace(m1..m1 + m2) * Rational::from_int(m1 as i64)
            }
            Abelianization::TraceOnFirst { a } => trace(0..a),
        }
    }
}

/// Choice of Jordan basis for an orthogonal or symplectic nilpotent.
///
/// Indices are zero-based. `sign_choices[j]` is the pairing
/// `(v_{1,j}, v_{n_j,beta(j)})`; pairings further down a block alternate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanBasisPlan {
    pub orbit: Partition,
    pub beta: Vec<usize>,
    pub a: usize,
    pub symmetry: FormSymmetry,
    #[serde(serialize_with = "crate::matrix::serialize_rationals")]
    pub sign_choices: Vec<Rational>,
}

impl JordanBasisPlan {
    /// Plans the basis for the Dixmier sheet of a maximal Levi of `SO_n` or
    /// `Sp_2m`.
    pub fn for_levi(kind: GroupKind, levi: &LeviLabel) -> Result<Self> {
        let symmetry = match kind {
            GroupKind::B(_) | GroupKind::D(_) => FormSymmetry::Symmetric,
            GroupKind::C(_) => FormSymmetry::Antisymmetric,
            _ => {
                return Err(AtlasError::KindMismatch(format!(
                    "{kind} has no classical form"
                )))
            }
        };
        let LeviLabel::MaxLevi { a, .. } = *levi else {
            return Err(AtlasError::InvalidLevi(format!("{levi} is not a maximal Levi")));
        };
        let sheet = maximal_levi_sheet(kind, levi)?;
        let orbit = sheet
            .nilpotent_orbit
            .partition()
            .expect("classical orbit")
            .clone();
        let type1 = classify_maximal_levi(kind, levi)?.ramification_type()
            == RamificationType::Type1;
        Self::new(orbit, a, symmetry, type1)
    }

    /// Pairs blocks of equal size: `a-1` with `a` first for Type 1, then each
    /// block with itself when the alternating form on one block has the right
    /// symmetry, otherwise consecutive blocks with each other.
    pub fn new(orbit: Partition, a: usize, symmetry: FormSymmetry, type1: bool) -> Result<Self> {
        let parts = orbit.parts().to_vec();
        let s = parts.len();
        if a == 0 || a > s {
            return Err(AtlasError::InvalidLevi(format!(
                "a = {a} but the orbit {orbit} has {s} blocks"
            )));
        }
        let mut beta: Vec<Option<usize>> = vec![None; s];
        if type1 {
            if a >= s || parts[a - 1] != parts[a] {
                return Err(AtlasError::SignClash(format!(
                    "Type 1 needs blocks {a} and {} of equal size in {orbit}",
                    a + 1
                )));
            }
            beta[a - 1] = Some(a);
            beta[a] = Some(a - 1);
        }
        let eps = symmetry.sign();
        let mut j = 0;
        while j < s {
            let size = parts[j];
            let group: Vec<usize> = (j..s)
                .take_while(|&k| parts[k] == size)
                .filter(|&k| beta[k].is_none())
                .collect();
            j += (j..s).take_while(|&k| parts[k] == size).count();
            let self_dual = eps * if size % 2 == 1 { 1 } else { -1 } == 1;
            if self_dual {
                for k in group {
                    beta[k] = Some(k);
                }
            } else {
                if group.len() % 2 == 1 {
                    return Err(AtlasError::SignClash(format!(
                        "odd number of unpaired blocks of size {size} in {orbit}"
                    )));
                }
                for pair in group.chunks(2) {
                    beta[pair[0]] = Some(pair[1]);
                    beta[pair[1]] = Some(pair[0]);
                }
            }
        }
        let beta: Vec<usize> = beta.into_iter().map(|b| b.expect("all paired")).collect();
        let sign_choices = (0..s)
            .map(|j| {
                let partner = beta[j];
                if partner >= j {
                    Rational::one()
                } else {
                    // Forced by (v_{1,j}, v_{n,j'}) = eps (v_{n,j'}, v_{1,j}).
                    let n = parts[j];
                    let alternating = if (n - 1) % 2 == 0 { 1 } else { -1 };
                    Rational::from_int(eps * alternating)
                }
            })
            .collect();
        let plan = JordanBasisPlan {
            orbit,
            beta,
            a,
            symmetry,
            sign_choices,
        };
        plan.form()?;
        Ok(plan)
    }

    pub fn n(&self) -> usize {
        self.orbit.n()
    }

    /// Basis vectors `(i, j)` in the adapted order `V+, W, V-`.
    pub fn adapted_order(&self) -> Vec<(usize, usize)> {
        let parts = self.orbit.parts();
        let plus: Vec<(usize, usize)> = (0..self.a).map(|j| (1, j)).collect();
        let minus: Vec<(usize, usize)> =
            (0..self.a).map(|j| (parts[j], self.beta[j])).collect();
        let mut order = plus.clone();
        for (j, &nj) in parts.iter().enumerate() {
            for i in 1..=nj {
                if !plus.contains(&(i, j)) && !minus.contains(&(i, j)) {
                    order.push((i, j));
                }
            }
        }
        order.extend(minus);
        order
    }

    /// `(0, a, n - a, n)`.
    pub fn flag_dims(&self) -> Vec<usize> {
        vec![0, self.a, self.n() - self.a, self.n()]
    }

    /// Matrix of a map given on Jordan basis vectors, written in the adapted
    /// basis. `image(i, j)` lists `(coefficient, i', j')`.
    fn adapted_matrix(&self, image: impl Fn(usize, usize) -> Option<(Rational, usize, usize)>) -> RationalMatrix {
        let order = self.adapted_order();
        let position = |i: usize, j: usize| {
            order
                .iter()
                .position(|&v| v == (i, j))
                .expect("vector in basis")
        };
        let mut m = RationalMatrix::zeros(self.n());
        for (col, &(i, j)) in order.iter().enumerate() {
            if let Some((c, i2, j2)) = image(i, j) {
                m.set(position(i2, j2), col, c);
            }
        }
        m
    }

    /// The Gram matrix in the adapted basis.
    pub fn gram(&self) -> RationalMatrix {
        let parts = self.orbit.parts();
        let order = self.adapted_order();
        RationalMatrix::from_fn(self.n(), |r, c| {
            let (i, j) = order[r];
            let (i2, j2) = order[c];
            if j2 != self.beta[j] || i + i2 != parts[j] + 1 {
                return Rational::zero();
            }
            let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
            self.sign_choices[j].clone() * Rational::from_int(sign)
        })
    }

    pub fn form(&self) -> Result<ClassicalForm> {
        ClassicalForm::new(self.symmetry, self.gram()).map_err(|e| match e {
            AtlasError::SignClash(msg) => {
                AtlasError::SignClash(format!("{msg} for orbit {}", self.orbit))
            }
            other => other,
        })
    }

    /// `e v_{i,j} = v_{i-1,j}`.
    pub fn e(&self) -> RationalMatrix {
        self.adapted_matrix(|i, j| (i > 1).then(|| (Rational::one(), i - 1, j)))
    }

    /// `h v_{i,j} = (n_j - 2i + 1) v_{i,j}`.
    pub fn h(&self) -> RationalMatrix {
        let parts = self.orbit.parts();
        self.adapted_matrix(|i, j| {
            let w = parts[j] as i64 - 2 * i as i64 + 1;
            Some((Rational::from_int(w), i, j))
        })
    }

    /// `f v_{i,j} = i (n_j - i) v_{i+1,j}`.
    pub fn f(&self) -> RationalMatrix {
        let parts = self.orbit.parts();
        self.adapted_matrix(|i, j| {
            (i < parts[j]).then(|| (Rational::from_int((i * (parts[j] - i)) as i64), i + 1, j))
        })
    }

    /// `+1` on block `a-1`, `-1` on its partner block `a`.
    fn h_prime(&self) -> RationalMatrix {
        let (first, second) = (self.a - 1, self.a);
        self.adapted_matrix(|i, j| {
            if j == first {
                Some((Rational::one(), i, j))
            } else if j == second {
                Some((-Rational::one(), i, j))
            } else {
                None
            }
        })
    }
}

/// An `sl_2`-triple together with the Levi data it is adapted to.
#[derive(Clone, Debug, Serialize)]
pub struct Sl2Triple {
    pub e: RationalMatrix,
    pub h: RationalMatrix,
    pub f: RationalMatrix,
    #[serde(skip)]
    pub model: LieAlgebraModel,
    pub gram: Option<RationalMatrix>,
    pub flag_dims: Vec<usize>,
    pub abelianization: Abelianization,
    #[serde(serialize_with = "crate::matrix::serialize_rational")]
    pub abelianization_value: Rational,
    /// For Type 1: an element of `c_g(e) ∩ l` with nonzero abelianisation.
    pub h_prime: Option<RationalMatrix>,
    /// `dim L`, which the centraliser of `e` must match.
    pub levi_dim: usize,
    pub plan: Option<JordanBasisPlan>,
}

/// One named check of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn block_of(flag: &[usize], index: usize) -> usize {
    flag.windows(2)
        .position(|w| (w[0]..w[1]).contains(&index))
        .expect("index below n")
}

/// `x` maps each flag step into the previous one.
pub fn is_in_nilradical(x: &RationalMatrix, flag: &[usize]) -> bool {
    let n = x.dim();
    (0..n).all(|r| (0..n).all(|c| x.get(r, c).is_zero() || block_of(flag, r) < block_of(flag, c)))
}

/// `x` preserves every block of the flag's splitting.
pub fn is_block_diagonal(x: &RationalMatrix, flag: &[usize]) -> bool {
    let n = x.dim();
    (0..n).all(|r| (0..n).all(|c| x.get(r, c).is_zero() || block_of(flag, r) == block_of(flag, c)))
}

impl Sl2Triple {
    pub fn n(&self) -> usize {
        self.e.dim()
    }

    /// Evaluates every property of the triple. The centraliser check is
    /// the expensive one; it is included only when `with_centralizer`.
    pub fn verify(&self, with_centralizer: bool) -> Result<Report> {
        let two = Rational::from_int(2);
        let mut checks = Vec::new();
        let he = self.h.bracket(&self.e)?;
        checks.push(Check::new("[h,e] = 2e", he == self.e.scale(&two)));
        let hf = self.h.bracket(&self.f)?;
        checks.push(Check::new("[h,f] = -2f", hf == self.f.scale(&-two.clone())));
        let ef = self.e.bracket(&self.f)?;
        checks.push(Check::new("[e,f] = h", ef == self.h));
        for (name, x) in [("e", &self.e), ("h", &self.h), ("f", &self.f)] {
            checks.push(Check::new(format!("{name} in g"), in_algebra(x, &self.model)?));
        }
        checks.push(Check::new("e in n", is_in_nilradical(&self.e, &self.flag_dims)));
        checks.push(Check::new("h in l", is_block_diagonal(&self.h, &self.flag_dims)));
        let value = self.abelianization.apply(&self.h);
        checks.push(
            Check::new(
                "h has nonzero abelianisation",
                !value.is_zero() && value == self.abelianization_value,
            )
            .with_detail(format!("value {value}")),
        );
        if let Some(hp) = &self.h_prime {
            checks.push(Check::new("[h',e] = 0", hp.bracket(&self.e)?.is_zero()));
            checks.push(Check::new("h' in g", in_algebra(hp, &self.model)?));
            checks.push(Check::new("h' in l", is_block_diagonal(hp, &self.flag_dims)));
            let v = self.abelianization.apply(hp);
            checks.push(
                Check::new("h' has nonzero abelianisation", !v.is_zero())
                    .with_detail(format!("value {v}")),
            );
        }
        if with_centralizer {
            let d = centralizer_dim(&self.e, &self.model)?;
            checks.push(
                Check::new("dim c_g(e) = dim L", d == self.levi_dim)
                    .with_detail(format!("{d} vs {}", self.levi_dim)),
            );
        }
        Ok(Report {
            subject: format!("{} triple", self.model.kind()),
            checks,
        })
    }
}

/// The triple for the Levi `GL_{m1} x GL_{m2}` of `GL_{m1+m2}`.
pub fn build_gl_triple(m1: usize, m2: usize) -> Result<Sl2Triple> {
    if m2 == 0 || m1 < m2 {
        return Err(AtlasError::InvalidLevi(format!(
            "need m1 >= m2 >= 1, got ({m1},{m2})"
        )));
    }
    let n = m1 + m2;
    if n > 20 {
        return Err(AtlasError::OutOfRange {
            what: "n",
            detail: format!("{n} > 20"),
        });
    }
    let mut e = RationalMatrix::zeros(n);
    for j in m1..n {
        e.set(j - m1, j, Rational::one());
    }
    let mut f = RationalMatrix::zeros(n);
    for j in 0..m2 {
        f.set(j + m1, j, Rational::one());
    }
    let h = e.bracket(&f)?;
    let abelianization = Abelianization::GlPair { m1, m2 };
    let abelianization_value = abelianization.apply(&h);
    let h_prime = (m1 > m2).then(|| RationalMatrix::unit(n, m2, m2));
    Ok(Sl2Triple {
        e,
        h,
        f,
        model: LieAlgebraModel::gl(n),
        gram: None,
        flag_dims: vec![0, m1, n],
        abelianization,
        abelianization_value,
        h_prime,
        levi_dim: m1 * m1 + m2 * m2,
        plan: None,
    })
}

/// The triple for a maximal Levi of `SO_n` or `Sp_2m`, on a normalised
/// Jordan basis of the induced nilpotent.
pub fn build_bcd_triple(kind: GroupKind, levi: &LeviLabel) -> Result<Sl2Triple> {
    let n = kind.natural_dim().unwrap_or(0);
    if n > 16 {
        return Err(AtlasError::OutOfRange {
            what: "n",
            detail: format!("{n} > 16"),
        });
    }
    let plan = JordanBasisPlan::for_levi(kind, levi)?;
    let form = plan.form()?;
    let model = LieAlgebraModel::from_form(kind, form)?;
    let type1 = classify_maximal_levi(kind, levi)?.ramification_type() == RamificationType::Type1;
    let abelianization = Abelianization::TraceOnFirst { a: plan.a };
    let h = plan.h();
    let abelianization_value = abelianization.apply(&h);
    Ok(Sl2Triple {
        e: plan.e(),
        f: plan.f(),
        h,
        gram: Some(plan.gram()),
        model,
        flag_dims: plan.flag_dims(),
        abelianization,
        abelianization_value,
        h_prime: type1.then(|| plan.h_prime()),
        levi_dim: levi.dim(kind)?,
        plan: Some(plan),
    })
}

/// The triple `(e, h, f)` of the `sp_4` example, adapted to the Levi
/// `G_m x Sp_2` through the flag `<e_1> < <e_1, e_2, e_3>`.
pub fn sp4_triple() -> Sl2Triple {
    let m = |rows: &[&[i64]]| RationalMatrix::from_ints(rows).expect("square");
    let h = m(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
    let abelianization = Abelianization::TraceOnFirst { a: 1 };
    let abelianization_value = abelianization.apply(&h);
    Sl2Triple {
        e: sp4_e(),
        f: m(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]]),
        h,
        model: LieAlgebraModel::sp4(),
        gram: None,
        flag_dims: vec![0, 1, 3, 4],
        abelianization,
        abelianization_value,
        h_prime: Some(RationalMatrix::diagonal(
            [1, -1, 1, -1].iter().map(|&k| Rational::from_int(k)).collect(),
        )),
        levi_dim: 4,
        plan: None,
    }
}

fn sp4_e() -> RationalMatrix {
    let mut e = RationalMatrix::zeros(4);
    e.set(0, 2, Rational::one());
    e.set(1, 3, Rational::one());
    e
}

/// Which lower-left entry the slice matrix carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceVariant {
    /// `4t^2`: the slice lies in the Dixmier sheet.
    Corrected,
    /// `t^2`: regular semisimple for `t != 0`.
    AsPrinted,
}

/// `x_t = (1/4) [[2t,0,1,0],[0,-2t,0,1],[c,0,2t,0],[0,c,0,-2t]]`.
pub fn sp4_slice_with<R: Ring>(t: &R, variant: SliceVariant) -> Matrix<R> {
    let quarter = R::from_rational(&ratio(1, 4));
    let two_t = R::from_int(2) * t.clone();
    let c = match variant {
        SliceVariant::Corrected => R::from_int(4) * t.clone() * t.clone(),
        SliceVariant::AsPrinted => t.clone() * t.clone(),
    };
    let z = R::zero;
    let rows = vec![
        vec![two_t.clone(), z(), R::one(), z()],
        vec![z(), -two_t.clone(), z(), R::one()],
        vec![c.clone(), z(), two_t.clone(), z()],
        vec![z(), c, z(), -two_t],
    ];
    Matrix::from_rows(rows)
        .expect("4x4")
        .scale(&quarter)
}

/// The corrected slice at a rational point.
pub fn sp4_slice(t: &Rational) -> RationalMatrix {
    sp4_slice_with(t, SliceVariant::Corrected)
}

/// The slice with `t` a formal parameter.
pub fn sp4_slice_symbolic(variant: SliceVariant) -> PolyMatrix {
    sp4_slice_with(&QPoly::x(), variant)
}

/// The generator `s` of the component group: swaps `e_1, e_2` and `e_3, e_4`.
pub fn sp4_flip() -> RationalMatrix {
    RationalMatrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]])
        .expect("square")
}

/// `Ad_s(x_t)`, checked against `x_{-t}`.
pub fn sp4_flip_action<R: Ring>(t: &R, variant: SliceVariant) -> Result<Matrix<R>> {
    // s is an involution, so s^{-1} = s.
    let s = sp4_flip().map(R::from_rational);
    let conjugated = &(&s * &sp4_slice_with(t, variant)) * &s;
    if conjugated != sp4_slice_with(&-t.clone(), variant) {
        return Err(AtlasError::Verification("Ad_s(x_t) != x_{-t}".into()));
    }
    Ok(conjugated)
}

/// `a_2^2 - 4 a_4` for a polynomial `λ^4 + a_2 λ^2 + a_4` read as a
/// quadratic in `λ^2`.
pub fn discriminant_in_lambda_squared<R: Ring>(p: &GradedPolynomial<R>) -> Option<R> {
    let a = p.coefficients();
    if a.len() != 4 || !a[0].is_zero() || !a[2].is_zero() {
        return None;
    }
    Some(a[1].clone() * a[1].clone() - R::from_int(4) * a[3].clone())
}

/// Sample points used for the pointwise slice checks.
pub const SLICE_SAMPLES: [(i64, i64); 5] = [(1, 1), (-2, 1), (1, 3), (7, 2), (0, 1)];

/// All slice properties: membership in `sp_4`, characteristic polynomial
/// `λ^4 - t^2 λ^2` (symbolically and at sample points), `Ad_s(x_t) = x_{-t}`,
/// `x_0 = e/4`, and a discriminant vanishing only at `t = 0`.
pub fn verify_sp4_slice(variant: SliceVariant) -> Result<Report> {
    let model = LieAlgebraModel::sp4();
    let t = QPoly::x();
    let x = sp4_slice_symbolic(variant);
    let mut checks = Vec::new();
    checks.push(Check::new("x_t in sp4 (symbolic t)", in_algebra(&x, &model)?));
    let expected = crate::spectral::sp4_dix_image(&t);
    let cp = char_poly(&x);
    checks.push(
        Check::new("x_t in S_Dix: char poly = λ^4 - t^2 λ^2 (symbolic t)", cp == expected)
            .with_detail(format!("char poly {cp}")),
    );
    for (p, q) in SLICE_SAMPLES {
        let tv = ratio(p, q);
        let cp = char_poly(&sp4_slice_with(&tv, variant));
        let want = crate::spectral::sp4_dix_image(&tv);
        checks.push(
            Check::new(format!("char poly at t = {tv}"), cp == want)
                .with_detail(format!("{cp}")),
        );
    }
    let flip = sp4_flip_action(&t, variant);
    checks.push(Check::new("Ad_s(x_t) = x_{-t} (symbolic t)", flip.is_ok()));
    let x0 = sp4_slice_with(&Rational::zero(), variant);
    checks.push(Check::new("x_0 = e/4", x0 == sp4_e().scale(&ratio(1, 4))));
    let disc = discriminant_in_lambda_squared(&cp);
    let t4 = QPoly::monomial(Rational::one(), 4);
    checks.push(
        Check::new(
            "discriminant in λ^2 is t^4 (nonzero iff t != 0)",
            disc.as_ref() == Some(&t4),
        )
        .with_detail(match disc {
            Some(d) => format!("discriminant {}", d.display_in("t")),
            None => "char poly is not even in λ".to_string(),
        }),
    );
    Ok(Report {
        subject: format!("sp4 slice ({variant:?})"),
        checks,
    })
}
