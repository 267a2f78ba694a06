//! Orbit-method multiplicities `|F| / |F_x|` on Katsylo slices.
//!
//! The slice is identified with `z / W_S`. In every case in scope the
//! Katsylo group is trivial, or is `Z/2` acting on a line by `-1`; then the
//! inertia group at `z` is all of `F` at `z = 0` and trivial elsewhere.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::ring::Rational;
use crate::sheets::SheetDescriptor;

/// A point of the Katsylo slice of `sheet`, given by coordinates on `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePoint {
    sheet: SheetDescriptor,
    z: Vec<Rational>,
}

impl SlicePoint {
    pub fn new(sheet: SheetDescriptor, z: Vec<Rational>) -> Result<Self> {
        if z.len() != sheet.dim_z {
            return Err(AtlasError::DimensionMismatch {
                left: z.len(),
                right: sheet.dim_z,
            });
        }
        Ok(SlicePoint { sheet, z })
    }

    /// The point `z = 0`, lying over the nilpotent orbit.
    pub fn nilpotent(sheet: SheetDescriptor) -> Self {
        let z = vec![Rational::zero(); sheet.dim_z];
        SlicePoint { sheet, z }
    }

    pub fn sheet(&self) -> &SheetDescriptor {
        &self.sheet
    }

    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn is_nilpotent(&self) -> bool {
        self.z.iter().all(Zero::is_zero)
    }
}

/// `|Stab_F(z)|`.
pub fn inertia_order(p: &SlicePoint) -> Result<u64> {
    let s = &p.sheet;
    match s.katsylo_order {
        1 => Ok(1),
        2 if s.dim_z == 1 && s.w_s_order.is_one() => Ok(if p.is_nilpotent() { 2 } else { 1 }),
        2 => Err(AtlasError::OutOfScope(format!(
            "F-action on the slice of {} is not the sign action on a line",
            s.id()
        ))),
        other => Err(AtlasError::UnsupportedKatsylo(other)),
    }
}

/// `mu(I(O(x))) = |F| / |F_x|`.
pub fn orbit_method_multiplicity(p: &SlicePoint) -> Result<u64> {
    Ok(p.sheet.katsylo_order / inertia_order(p)?)
}

/// Size of the `C_G(e)`-orbit of polarisations, which equals `|F|`.
pub fn polarisation_orbit_count(sheet: &SheetDescriptor) -> Result<u64> {
    if !sheet.dixmier {
        return Err(AtlasError::NonDixmier(sheet.id()));
    }
    Ok(sheet.katsylo_order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub sheet: String,
    pub z: Vec<String>,
    pub multiplicity: u64,
    pub inertia_order: u64,
    pub katsylo_order: u64,
    pub polarisations: Option<u64>,
}

pub fn multiplicity_report(p: &SlicePoint) -> Result<MultiplicityReport> {
    Ok(MultiplicityReport {
        sheet: p.sheet.id(),
        z: p.z.iter().map(ToString::to_string).collect(),
        multiplicity: orbit_method_multiplicity(p)?,
        inertia_order: inertia_order(p)?,
        katsylo_order: p.sheet.katsylo_order,
        polarisations: polarisation_orbit_count(&p.sheet).ok(),
    })
}
