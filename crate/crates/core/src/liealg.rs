//! Matrix models of the classical Lie algebras.
//!
//! A model is a spanning basis of `g` inside `gl_n`; for orthogonal and
//! symplectic types it is cut out by a Gram matrix `G` via `X^T G + G X = 0`.
//! Centraliser dimensions are computed exactly as the kernel dimension of
//! `ad x` restricted to the basis.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AtlasError, Result};
use crate::matrix::{rank_of_columns, Matrix, RationalMatrix};
use crate::ring::{Rational, Ring};
use crate::sheets::GroupKind;
use crate::spectral::GradedPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormSymmetry {
    Symmetric,
    Antisymmetric,
}

impl FormSymmetry {
    /// `epsilon` with `G^T = epsilon G`.
    pub fn sign(self) -> i64 {
        match self {
            FormSymmetry::Symmetric => 1,
            FormSymmetry::Antisymmetric => -1,
        }
    }
}

/// A non-degenerate symmetric or antisymmetric bilinear form `(v, w) = v^T G w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalForm {
    symmetry: FormSymmetry,
    gram: RationalMatrix,
}

impl ClassicalForm {
    pub fn new(symmetry: FormSymmetry, gram: RationalMatrix) -> Result<Self> {
        let expected = gram.scale(&Rational::from_int(symmetry.sign()));
        if gram.transpose() != expected {
            return Err(AtlasError::SignClash(format!(
                "Gram matrix is not {symmetry:?}"
            )));
        }
        if gram.determinant().is_zero() {
            return Err(AtlasError::Degenerate("Gram matrix is singular".into()));
        }
        Ok(ClassicalForm { symmetry, gram })
    }

    /// The antidiagonal form on `C^n`: ones for the symmetric case; for the
    /// antisymmetric case `+1` above the antidiagonal midpoint and `-1` below.
    /// For `n = 4` this is exactly the form used for the `sp_4` examples.
    pub fn antidiagonal(symmetry: FormSymmetry, n: usize) -> Result<Self> {
        let gram = RationalMatrix::from_fn(n, |i, j| {
            if i + j + 1 != n {
                Rational::zero()
            } else if symmetry == FormSymmetry::Antisymmetric && i >= n / 2 {
                -Rational::one()
            } else {
                Rational::one()
            }
        });
        Self::new(symmetry, gram)
    }

    pub fn symmetry(&self) -> FormSymmetry {
        self.symmetry
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// `(v, w)` for column vectors.
    pub fn pair(&self, v: &[Rational], w: &[Rational]) -> Rational {
        let n = self.gram.dim();
        let mut acc = Rational::zero();
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let g = self.gram.get(i, j);
                if !g.is_zero() && !w[j].is_zero() {
                    acc += &v[i] * g * &w[j];
                }
            }
        }
        acc
    }
}

/// A basis of `g` inside `gl_n`, with the form that defines it (absent for
/// type A).
#[derive(Clone, Debug)]
pub struct LieAlgebraModel {
    kind: GroupKind,
    form: Option<ClassicalForm>,
    basis: Vec<RationalMatrix>,
}

impl LieAlgebraModel {
    /// `gl_n` with the elementary basis.
    pub fn gl(n: usize) -> Self {
        let mut basis = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                basis.push(RationalMatrix::unit(n, i, j));
            }
        }
        LieAlgebraModel {
            kind: GroupKind::A(n),
            form: None,
            basis,
        }
    }

    /// The algebra of a classical form. Solving `X^T G + G X = 0` through
    /// `Y = G X` gives `Y^T = -epsilon Y`, so the basis is `G^{-1} Y` over a
    /// basis of antisymmetric (orthogonal case) or symmetric (symplectic case)
    /// matrices.
    pub fn from_form(kind: GroupKind, form: ClassicalForm) -> Result<Self> {
        let n = form.gram.dim();
        let expected_symmetry = match kind {
            GroupKind::B(_) | GroupKind::D(_) => FormSymmetry::Symmetric,
            GroupKind::C(_) => FormSymmetry::Antisymmetric,
            GroupKind::A(_) | GroupKind::F4 => {
                return Err(AtlasError::KindMismatch(format!(
                    "{kind} is not defined by a bilinear form"
                )))
            }
        };
        if kind.natural_dim() != Some(n) || form.symmetry != expected_symmetry {
            return Err(AtlasError::KindMismatch(format!(
                "{:?} form on C^{n} does not define {kind}",
                form.symmetry
            )));
        }
        let ginv = form.gram.inverse().expect("form is non-degenerate");
        let mut basis = Vec::new();
        for i in 0..n {
            for j in i..n {
                let y = match form.symmetry {
                    FormSymmetry::Symmetric if i == j => continue,
                    FormSymmetry::Symmetric => {
                        &RationalMatrix::unit(n, i, j) - &RationalMatrix::unit(n, j, i)
                    }
                    FormSymmetry::Antisymmetric if i == j => RationalMatrix::unit(n, i, i),
                    FormSymmetry::Antisymmetric => {
                        &RationalMatrix::unit(n, i, j) + &RationalMatrix::unit(n, j, i)
                    }
                };
                basis.push(&ginv * &y);
            }
        }
        Ok(LieAlgebraModel {
            kind,
            form: Some(form),
            basis,
        })
    }

    /// A model for any classical kind using the antidiagonal forms.
    pub fn standard(kind: GroupKind) -> Result<Self> {
        match kind {
            GroupKind::A(n) => Ok(Self::gl(n)),
            GroupKind::B(_) | GroupKind::D(_) => {
                let n = kind.natural_dim().unwrap();
                Self::from_form(kind, ClassicalForm::antidiagonal(FormSymmetry::Symmetric, n)?)
            }
            GroupKind::C(_) => {
                let n = kind.natural_dim().unwrap();
                Self::from_form(
                    kind,
                    ClassicalForm::antidiagonal(FormSymmetry::Antisymmetric, n)?,
                )
            }
            GroupKind::F4 => Err(AtlasError::OutOfScope(
                "no matrix model for F4".to_string(),
            )),
        }
    }

    /// `sp_4` with the antidiagonal form `J`.
    pub fn sp4() -> Self {
        Self::standard(GroupKind::C(2)).expect("sp4 model")
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn form(&self) -> Option<&ClassicalForm> {
        self.form.as_ref()
    }

    pub fn basis(&self) -> &[RationalMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of the matrices in the model.
    pub fn n(&self) -> usize {
        self.kind.natural_dim().expect("classical kind")
    }
}

pub fn bracket<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    a.bracket(b)
}

/// Membership in the model: `X^T G + G X = 0` for B/C/D, always true for A.
/// Works over any coefficient ring, so slice matrices can be checked
/// symbolically.
pub fn in_algebra<R: Ring>(x: &Matrix<R>, model: &LieAlgebraModel) -> Result<bool> {
    if x.dim() != model.n() {
        return Err(AtlasError::DimensionMismatch {
            left: x.dim(),
            right: model.n(),
        });
    }
    let Some(form) = &model.form else {
        return Ok(true);
    };
    let g = form.gram.map(R::from_rational);
    let lhs = &(&x.transpose() * &g) + &(&g * x);
    Ok(lhs.is_zero())
}

/// Dimension of the centraliser of `x` in `g`: the kernel of `y -> [x, y]` on
/// the model basis, computed by exact fraction-free elimination.
pub fn centralizer_dim(x: &RationalMatrix, model: &LieAlgebraModel) -> Result<usize> {
    if !in_algebra(x, model)? {
        return Err(AtlasError::NotInAlgebra(model.kind.to_string()));
    }
    let columns: Vec<Vec<Rational>> = model
        .basis
        .iter()
        .map(|b| x.bracket(b).map(|c| c.entries().to_vec()))
        .collect::<Result<_>>()?;
    Ok(model.dim() - rank_of_columns(&columns))
}

/// Characteristic polynomial `det(lambda - x)` by the division-free Berkowitz
/// recursion, so it is valid for entries in `Q[t]` as well as `Q`.
pub fn char_poly<R: Ring>(x: &Matrix<R>) -> GradedPolynomial<R> {
    let n = x.dim();
    // Coefficients highest degree first; starts as the polynomial 1.
    let mut v: Vec<R> = vec![R::one()];
    for r in 0..n {
        // A_{r+1} = [[A_r, c], [row, a_rr]]; Toeplitz column
        // (1, -a_rr, -row c, -row A_r c, ..., -row A_r^{r-1} c).
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(R::one());
        toeplitz.push(-x.get(r, r).clone());
        let mut power: Vec<R> = (0..r).map(|i| x.get(i, r).clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(R::zero(), |mut acc, j| {
                acc.add_mul(x.get(r, j), &power[j]);
                acc
            });
            toeplitz.push(-dot);
            power = (0..r)
                .map(|i| {
                    (0..r).fold(R::zero(), |mut acc, j| {
                        acc.add_mul(x.get(i, j), &power[j]);
                        acc
                    })
                })
                .collect();
        }
        let next: Vec<R> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(R::zero(), |mut acc, j| {
                    acc.add_mul(&toeplitz[i - j], &v[j]);
                    acc
                })
            })
            .collect();
        v = next;
    }
    GradedPolynomial::from_coefficients(v[1..].to_vec())
}
