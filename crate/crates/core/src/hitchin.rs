//! Dimensions of Hitchin bases and S-Hitchin bases for `K`-twisted Higgs
//! bundles on a curve of genus `g >= 2`.
//!
//! All dimensions are those of coarse spaces. The distinguished component
//! of the S-Hitchin base of a sheet is a finite quotient of
//! `sum_i H^0(K^{e_i})`, where the `e_i` are the weights of the contracting
//! action on the Katsylo slice.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::partitions::Partition;
use crate::sheets::{GroupKind, GroupOrder, LeviLabel, SheetDescriptor};

/// The twisting line bundle. Only the canonical bundle is implemented.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Twist {
    #[default]
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveParams {
    pub genus: u64,
    pub twist: Twist,
}

impl CurveParams {
    pub fn new(genus: u64) -> Result<Self> {
        check_genus(genus)?;
        Ok(CurveParams {
            genus,
            twist: Twist::Canonical,
        })
    }
}

fn check_genus(g: u64) -> Result<()> {
    if g < 2 {
        return Err(AtlasError::OutOfRange {
            what: "genus",
            detail: format!("{g} < 2"),
        });
    }
    Ok(())
}

/// `h^0(K^j)`: `g` for `j = 1`, else `(2j - 1)(g - 1)` by Riemann-Roch.
pub fn h0_canonical_power(g: u64, j: u64) -> Result<u64> {
    check_genus(g)?;
    match j {
        0 => Err(AtlasError::OutOfRange {
            what: "power",
            detail: "j must be positive".into(),
        }),
        1 => Ok(g),
        _ => Ok((2 * j - 1) * (g - 1)),
    }
}

/// Weights of the `G_m`-action on a Katsylo slice, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SliceWeights(Vec<u64>);

impl SliceWeights {
    pub fn new(mut weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(AtlasError::OutOfRange {
                what: "weight",
                detail: "weights are positive".into(),
            });
        }
        weights.sort_unstable();
        Ok(SliceWeights(weights))
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    /// `sum_i h^0(K^{e_i})`.
    pub fn base_dim(&self, g: u64) -> Result<u64> {
        self.0.iter().try_fold(0, |acc, &e| Ok(acc + h0_canonical_power(g, e)?))
    }
}

/// Slice weights where they are determined: all `gl_n` sheets (`1..=l_i` for
/// each multiplicity), the `sp_4` table, and sheets with one-dimensional
/// centre (weight 1 when `W_S` is trivial, 2 otherwise).
pub fn slice_weights(sheet: &SheetDescriptor) -> Result<SliceWeights> {
    let weights = match (&sheet.levi, sheet.kind) {
        (LeviLabel::Gl { m }, _) => m
            .profile()
            .iter()
            .flat_map(|(_, l)| 1..=l as u64)
            .collect(),
        (_, _) if sheet.dim_z == 0 => Vec::new(),
        (LeviLabel::Torus, kind) => kind.invariant_degrees().iter().map(|&d| d as u64).collect(),
        (_, _) if sheet.dim_z == 1 => {
            if sheet.w_s_order.is_one() {
                vec![1]
            } else if sheet.w_s_order == GroupOrder::new(2) {
                vec![2]
            } else {
                return Err(AtlasError::OutOfScope(format!(
                    "|W_S| = {} on a line",
                    sheet.w_s_order
                )));
            }
        }
        _ => {
            return Err(AtlasError::OutOfScope(format!(
                "slice weights of {}",
                sheet.id()
            )))
        }
    };
    SliceWeights::new(weights)
}

/// Dimension of the ordinary Hitchin base: `sum h^0(K^{d_i})` over the
/// invariant degrees.
pub fn dim_hitchin_base(kind: GroupKind, g: u64) -> Result<u64> {
    kind.validate()?;
    kind.invariant_degrees()
        .iter()
        .try_fold(0, |acc, &d| Ok(acc + h0_canonical_power(g, d as u64)?))
}

/// `sum_i sum_{j <= l_i} h^0(K^j)` for the `gl_n` sheet with Levi `m`.
pub fn dim_s_hitchin_base_gln(m: &Partition, g: u64) -> Result<u64> {
    check_genus(g)?;
    m.profile().iter().try_fold(0, |acc, (_, l)| {
        (1..=l as u64).try_fold(acc, |acc, j| Ok(acc + h0_canonical_power(g, j)?))
    })
}

/// `h^0(K^2) + h^0(K^4) = 10(g - 1)`.
pub fn dim_hitchin_base_sp4(g: u64) -> Result<u64> {
    dim_hitchin_base(GroupKind::C(2), g)
}

/// `h^0(K) = g`: the distinguished component is `H^0(K)/(Z/2)`.
pub fn dim_s_hitchin_base_sp4_dix(g: u64) -> Result<u64> {
    h0_canonical_power(g, 1)
}

/// Number of components, one per `F`-torsor: `|H^1(Σ, F)|`, which is
/// `2^{2g}` for `F = Z/2`.
pub fn component_count(katsylo_order: u64, g: u64) -> Result<BigUint> {
    check_genus(g)?;
    match katsylo_order {
        1 => Ok(BigUint::from(1u32)),
        2 => Ok(BigUint::from(2u32).pow((2 * g) as u32)),
        other => Err(AtlasError::UnsupportedKatsylo(other)),
    }
}

/// Degree of the S-cameral cover over the curve: `|W_S| |F| = |W_L|`.
pub fn s_cameral_degree(sheet: &SheetDescriptor) -> Result<GroupOrder> {
    if !sheet.dixmier {
        return Err(AtlasError::NonDixmier(sheet.id()));
    }
    Ok(sheet.w_l_order.clone())
}

/// Everything `hitchin-dim` reports for a sheet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HitchinReport {
    pub sheet: String,
    pub genus: u64,
    pub dim_base: u64,
    pub dim_s_base: u64,
    pub components: GroupOrder,
    pub cameral_degree: Option<GroupOrder>,
    pub weights: SliceWeights,
}

pub fn hitchin_report(sheet: &SheetDescriptor, g: u64) -> Result<HitchinReport> {
    let weights = slice_weights(sheet)?;
    let components = component_count(sheet.katsylo_order, g)?;
    Ok(HitchinReport {
        sheet: sheet.id(),
        genus: g,
        dim_base: dim_hitchin_base(sheet.kind, g)?,
        dim_s_base: weights.base_dim(g)?,
        components: GroupOrder::from_biguint(components),
        cameral_degree: sheet.dixmier.then(|| sheet.w_l_order.clone()),
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sheets::{gln_sheet, sp4_row};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn riemann_roch_values() {
        assert_eq!(h0_canonical_power(2, 1).unwrap(), 2);
        assert_eq!(h0_canonical_power(2, 2).unwrap(), 3);
        assert_eq!(h0_canonical_power(3, 4).unwrap(), 14);
        assert!(h0_canonical_power(1, 1).is_err());
    }

    #[test]
    fn gl_s_bases() {
        assert_eq!(dim_s_hitchin_base_gln(&p(&[2, 1, 1]), 2).unwrap(), 7);
        assert_eq!(dim_s_hitchin_base_gln(&p(&[2, 2]), 2).unwrap(), 5);
        for g in 2..5 {
            assert_eq!(
                dim_s_hitchin_base_gln(&p(&[1; 4]), g).unwrap(),
                dim_hitchin_base(GroupKind::A(4), g).unwrap()
            );
        }
    }

    #[test]
    fn sp4_bases() {
        for g in 2..=4 {
            assert_eq!(dim_hitchin_base_sp4(g).unwrap(), 10 * (g - 1));
        }
        assert_eq!(dim_s_hitchin_base_sp4_dix(3).unwrap(), 3);
        let dix = sp4_row("S_Dix").unwrap();
        assert_eq!(slice_weights(&dix).unwrap().weights(), &[1]);
        assert_eq!(slice_weights(&dix).unwrap().base_dim(2).unwrap(), 2);
        let reg = sp4_row("reg").unwrap();
        assert_eq!(slice_weights(&reg).unwrap().base_dim(3).unwrap(), 20);
    }

    #[test]
    fn components() {
        assert_eq!(component_count(1, 5).unwrap(), BigUint::from(1u32));
        assert_eq!(component_count(2, 2).unwrap(), BigUint::from(16u32));
        assert_eq!(component_count(2, 3).unwrap(), BigUint::from(64u32));
        assert!(component_count(3, 2).is_err());
    }

    #[test]
    fn cameral_degrees() {
        let dix = sp4_row("S_Dix").unwrap();
        assert_eq!(s_cameral_degree(&dix).unwrap(), GroupOrder::new(2));
        assert_eq!(
            s_cameral_degree(&gln_sheet(&p(&[2, 1, 1])).unwrap()).unwrap(),
            GroupOrder::new(2)
        );
        assert_eq!(
            s_cameral_degree(&gln_sheet(&p(&[1; 5])).unwrap()).unwrap(),
            GroupOrder::new(120)
        );
        assert!(s_cameral_degree(&sp4_row("O_min").unwrap()).is_err());
    }

    #[test]
    fn report_json() {
        let r = hitchin_report(&sp4_row("S_Dix").unwrap(), 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "sheet": "Sp4:S_Dix", "genus": 2, "dim_base": 10, "dim_s_base": 2,
                "components": 16, "cameral_degree": 2, "weights": [1]
            })
        );
    }
}
