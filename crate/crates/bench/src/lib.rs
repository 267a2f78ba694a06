//! Deterministic inputs shared by the benchmarks.

use sheet_atlas::partitions::Partition;
use sheet_atlas::ring::rat;
use sheet_atlas::sheets::{all_maximal_levi_labels, GroupKind, LeviLabel};
use sheet_atlas::spectral::{GradedPolynomial, SheetBasePoint};

/// Maximal Levi labels of `SO_n`/`Sp_2m` with natural dimension at most `max_n`.
pub fn bcd_labels(max_n: usize) -> Vec<(GroupKind, LeviLabel)> {
    all_maximal_levi_labels(max_n)
        .into_iter()
        .filter(|(kind, _)| !matches!(kind, GroupKind::A(_)))
        .collect()
}

/// A heart point for the profile of `m` with distinct integer roots.
pub fn spread_point(m: &Partition) -> SheetBasePoint<sheet_atlas::Rational> {
    let mut next = 1i64;
    let factors = m
        .profile()
        .iter()
        .map(|(_, l)| {
            let roots: Vec<_> = (0..l)
                .map(|_| {
                    next += 1;
                    rat(next)
                })
                .collect();
            GradedPolynomial::from_roots(&roots)
        })
        .collect();
    SheetBasePoint::for_levi(m, factors).expect("degrees match the profile")
}
