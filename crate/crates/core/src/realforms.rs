//! Sheets attached to the real forms `SU(p,q)` and `SO*(2n)`.
//!
//! For a real form with Cartan decomposition `g = h + m`, the sheet `S_H`
//! is the unique sheet containing the regular elements of `m`. The form is
//! quasi-split exactly when `S_H` is the regular sheet.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::partitions::Partition;
use crate::ring::Rational;
use crate::sheets::{GroupKind, LeviLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "form")]
pub enum RealFormLabel {
    SU { p: usize, q: usize },
    /// `SO*(2n)`.
    SOStar { n: usize },
}

impl RealFormLabel {
    pub fn su(p: usize, q: usize) -> Result<Self> {
        if q == 0 || p < q {
            return Err(AtlasError::OutOfRange {
                what: "SU(p,q)",
                detail: format!("need p >= q >= 1, got ({p},{q})"),
            });
        }
        Ok(RealFormLabel::SU { p, q })
    }

    pub fn so_star(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(AtlasError::OutOfRange {
                what: "SO*(2n)",
                detail: format!("need n >= 3, got {n}"),
            });
        }
        Ok(RealFormLabel::SOStar { n })
    }

    /// Parses `SU:p,q` or `SOSTAR:n` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || AtlasError::Parse(format!("expected SU:p,q or SOSTAR:n, got {s:?}"));
        let (family, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (family.trim().to_ascii_uppercase().as_str(), &nums[..]) {
            ("SU", &[p, q]) => Self::su(p, q),
            ("SOSTAR" | "SO*", &[n]) => Self::so_star(n),
            _ => Err(bad()),
        }
    }

    /// The complexified group.
    pub fn complex_group(self) -> GroupKind {
        match self {
            RealFormLabel::SU { p, q } => GroupKind::A(p + q),
            RealFormLabel::SOStar { n } => GroupKind::D(n),
        }
    }
}

impl fmt::Display for RealFormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealFormLabel::SU { p, q } => write!(f, "SU({p},{q})"),
            RealFormLabel::SOStar { n } => write!(f, "SO*({})", 2 * n),
        }
    }
}

/// `c (g - 1)`: the genus dependence of every degree in the reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusMultiple {
    pub times_g_minus_1: i64,
}

impl GenusMultiple {
    pub fn evaluate(self, g: u64) -> Result<i64> {
        if g < 2 {
            return Err(AtlasError::OutOfRange {
                what: "genus",
                detail: format!("{g} < 2"),
            });
        }
        Ok(self.times_g_minus_1 * (g as i64 - 1))
    }
}

impl fmt::Display for GenusMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(g-1)", self.times_g_minus_1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealSheetReport {
    pub label: RealFormLabel,
    pub group: GroupKind,
    /// Levi of `S_H` when it is a `gl_n` sheet.
    pub levi: Option<LeviLabel>,
    pub levi_description: Option<String>,
    pub quasi_split: bool,
    pub abelianised_target: Option<String>,
    /// Rank of the group scheme `J^H`, known only up to finite index.
    pub j_h_rank: Option<usize>,
    pub extra: BTreeMap<String, GenusMultiple>,
    pub notes: Vec<String>,
}

impl RealSheetReport {
    /// The genus-dependent quantities at genus `g`.
    pub fn evaluate_extra(&self, g: u64) -> Result<BTreeMap<String, i64>> {
        self.extra
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.evaluate(g)?)))
            .collect()
    }

    /// The Levi partition of `S_H` for `SU(p,q)`.
    pub fn partition(&self) -> Option<&Partition> {
        match &self.levi {
            Some(LeviLabel::Gl { m }) => Some(m),
            _ => None,
        }
    }
}

/// `(p - q, 1^{2q})`, dropping the zero part when `p = q`.
pub fn su_sheet_partition(p: usize, q: usize) -> Result<Partition> {
    RealFormLabel::su(p, q)?;
    let mut parts = vec![1; 2 * q];
    if p > q {
        parts.push(p - q);
    }
    Partition::new(parts)
}

pub fn sheet_of_real_form(label: RealFormLabel) -> RealSheetReport {
    match label {
        RealFormLabel::SU { p, q } => {
            let m = su_sheet_partition(p, q).expect("validated label");
            let mut notes = Vec::new();
            if p - q == 1 {
                notes.push(
                    "p - q = 1: quasi-split, the abelianised description still applies".into(),
                );
            }
            let target = if p == q {
                "the U(q,q) Hitchin fibration itself".to_string()
            } else {
                "U(q,q) Hitchin fibration at maximal Toledo invariant".to_string()
            };
            RealSheetReport {
                label,
                group: label.complex_group(),
                quasi_split: m.parts().iter().all(|&k| k == 1),
                levi_description: Some(format!("gl sheet with Levi {m}")),
                levi: Some(LeviLabel::Gl { m }),
                abelianised_target: Some(target),
                j_h_rank: None,
                extra: BTreeMap::from([(
                    "toledo_max".to_string(),
                    GenusMultiple {
                        times_g_minus_1: 2 * q as i64,
                    },
                )]),
                notes,
            }
        }
        RealFormLabel::SOStar { n } if n % 2 == 1 => {
            let m = (n - 1) / 2;
            RealSheetReport {
                label,
                group: label.complex_group(),
                levi: None,
                levi_description: Some(format!("GL2^{m} x G_m")),
                quasi_split: false,
                abelianised_target: Some(format!("Pic(Σ) x A_K(SO*({}))", 2 * n)),
                j_h_rank: Some(1),
                extra: BTreeMap::from([(
                    "fixed_degree".to_string(),
                    GenusMultiple {
                        times_g_minus_1: 4 * m as i64,
                    },
                )]),
                notes: vec!["J^H is the constant group G_m up to finite index".into()],
            }
        }
        RealFormLabel::SOStar { .. } => RealSheetReport {
            label,
            group: label.complex_group(),
            levi: None,
            levi_description: None,
            quasi_split: false,
            abelianised_target: None,
            j_h_rank: None,
            extra: BTreeMap::new(),
            notes: vec![
                "quasi-split status from the classification of real forms; \
                 sheet data not computed for even n"
                    .into(),
            ],
        },
    }
}

/// `tau = 2 (q deg V - p deg W) / (p + q)`.
pub fn toledo(p: usize, q: usize, deg_v: i64, deg_w: i64) -> Result<Rational> {
    if p == 0 || q == 0 {
        return Err(AtlasError::OutOfRange {
            what: "U(p,q)",
            detail: format!("need p, q >= 1, got ({p},{q})"),
        });
    }
    let num = 2 * (q as i64 * deg_v - p as i64 * deg_w);
    Ok(Rational::new(num.into(), ((p + q) as i64).into()))
}

/// `tau_max = 2 q (g - 1)`.
pub fn toledo_max(q: usize, g: u64) -> Result<i64> {
    GenusMultiple {
        times_g_minus_1: 2 * q as i64,
    }
    .evaluate(g)
}

/// True for the non-quasi-split forms whose abelianised Hitchin map has
/// positive-dimensional fibres: `SU(p,q)` with `p - q > 1` and `SO*(4m+2)`.
pub fn abelianized_fiber_dim_is_positive(label: RealFormLabel) -> bool {
    match label {
        RealFormLabel::SU { p, q } => p - q > 1,
        RealFormLabel::SOStar { n } => n % 2 == 1,
    }
}
