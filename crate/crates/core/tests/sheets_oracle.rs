//! Maximal-Levi sheets against an independent Lusztig–Spaltenstein
//! induction, and `gl_n` sheet data against explicit Jordan matrices.

use sheet_atlas::liealg::{centralizer_dim, LieAlgebraModel};
use sheet_atlas::matrix::RationalMatrix;
use sheet_atlas::partitions::Partition;
use sheet_atlas::ring::rat;
use sheet_atlas::sheets::{
    all_maximal_levi_labels, classify_maximal_levi, enumerate_sheets_gln, maximal_levi_sheet, orbit_dimension,
    sheet_by_levi, sheets_sp4, GroupKind, LeviClass, LeviLabel, SheetDescriptor,
};

/// Sign of the form: `+1` orthogonal, `-1` symplectic.
fn epsilon(kind: GroupKind) -> i32 {
    match kind {
        GroupKind::C(_) => -1,
        _ => 1,
    }
}

/// Parts that must occur with even multiplicity: even parts for orthogonal
/// forms, odd parts for symplectic ones.
fn is_bad_part(part: usize, eps: i32) -> bool {
    part > 0 && (part % 2 == 0) == (eps == 1)
}

/// The largest `eps`-partition dominated by `parts`.
fn collapse(mut parts: Vec<usize>, eps: i32) -> Vec<usize> {
    loop {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let bad = parts
            .iter()
            .copied()
            .filter(|&q| is_bad_part(q, eps) && parts.iter().filter(|&&x| x == q).count() % 2 == 1)
            .max();
        let Some(q) = bad else {
            parts.retain(|&x| x > 0);
            return parts;
        };
        let last = parts.iter().rposition(|&x| x == q).unwrap();
        parts[last] -= 1;
        match parts[last + 1..].iter().position(|&x| x < q - 1) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
    }
}

/// Jordan type of the orbit induced from zero on `gl_a x g'`, where `g'`
/// acts on a space of dimension `residual_dim`.
fn induce_from_zero(kind: GroupKind, a: usize, residual_dim: usize) -> Vec<usize> {
    let mut parts = vec![1; residual_dim.max(a)];
    for (i, p) in parts.iter_mut().enumerate() {
        if i >= residual_dim {
            *p = 0;
        }
        if i < a {
            *p += 2;
        }
    }
    collapse(parts, epsilon(kind))
}

fn residual_dim(kind: GroupKind, residual: usize) -> usize {
    match kind {
        GroupKind::C(_) => 2 * residual,
        _ => residual,
    }
}

fn conjugate_of_sorted(mut sizes: Vec<usize>) -> Vec<usize> {
    sizes.retain(|&x| x > 0);
    Partition::new(sizes).unwrap().conjugate().parts().to_vec()
}

fn residual_algebra_dim(kind: GroupKind, residual: usize) -> usize {
    match kind {
        GroupKind::C(_) => residual * (2 * residual + 1),
        _ => residual * residual.saturating_sub(1) / 2,
    }
}

fn orbit(s: &SheetDescriptor) -> Vec<usize> {
    s.nilpotent_orbit.partition().unwrap().parts().to_vec()
}

#[test]
fn collapse_examples() {
    assert_eq!(collapse(vec![3, 2, 2, 2], 1), vec![3, 2, 2, 1, 1]);
    assert_eq!(collapse(vec![3, 1], -1), vec![2, 2]);
    assert_eq!(collapse(vec![2, 2], -1), vec![2, 2]);
    assert_eq!(collapse(vec![4], 1), vec![3, 1]);
}

#[test]
fn classical_maximal_levis_match_induction() {
    let labels = all_maximal_levi_labels(12);
    assert!(labels.len() > 40);
    for (kind, levi) in labels {
        let LeviLabel::MaxLevi { a, residual } = levi else {
            continue;
        };
        let s = maximal_levi_sheet(kind, &levi).unwrap();
        let ctx = format!("{kind} {levi}");
        let rdim = residual_dim(kind, residual);
        let induced = induce_from_zero(kind, a, rdim);
        assert_eq!(orbit(&s), induced, "{ctx}");

        let d = a * a + residual_algebra_dim(kind, residual);
        assert_eq!(s.d, d, "{ctx}");
        let p = Partition::new(induced.clone()).unwrap();
        assert_eq!(orbit_dimension(kind, &p).unwrap(), kind.dim_g() - d, "{ctx}");
        assert_eq!(s.dim_sheet, kind.dim_g() - d + 1, "{ctx}");

        // Swapping the two isotropic GL_a pieces is realised in G unless
        // the Levi is GL_n inside SO_2n with n odd.
        let w_l = if matches!(kind, GroupKind::D(_)) && residual == 0 && a % 2 == 1 { 1 } else { 2 };
        assert_eq!(s.w_l_order.to_u64(), Some(w_l), "{ctx}");

        // The generalised Springer map has degree 2 exactly when the
        // induction collapses and there is a Weyl element to realise it.
        let collapsed = induced != conjugate_of_sorted(vec![a, a, rdim]);
        let f = if collapsed && w_l == 2 { 2 } else { 1 };
        assert_eq!(s.katsylo_order, f, "{ctx}");

        let class = classify_maximal_levi(kind, &levi).unwrap();
        assert_eq!(s.class_tag, Some(class), "{ctx}");
        assert_eq!(class.katsylo_order(), f, "{ctx}");
        assert_eq!(
            s.conjugate_only_under_o,
            matches!(kind, GroupKind::D(_)) && residual == 0 && a % 2 == 0,
            "{ctx}"
        );
        s.check_invariants().unwrap();
    }
}

#[test]
fn every_class_is_realised() {
    let mut seen: Vec<LeviClass> = all_maximal_levi_labels(12)
        .into_iter()
        .map(|(kind, levi)| classify_maximal_levi(kind, &levi).unwrap())
        .collect();
    seen.sort_by_key(|c| c.number());
    seen.dedup();
    assert_eq!(seen, LeviClass::ALL.to_vec());
}

#[test]
fn two_part_gl_levis_match_induction() {
    for n in 2..=12 {
        for m2 in 1..=n / 2 {
            let m = Partition::new(vec![n - m2, m2]).unwrap();
            let s = sheet_by_levi(GroupKind::A(n), &LeviLabel::Gl { m: m.clone() }).unwrap();
            assert_eq!(orbit(&s), conjugate_of_sorted(vec![n - m2, m2]), "{m}");
            assert_eq!(s.katsylo_order, 1);
            assert_eq!(s.w_l_order.to_u64(), Some(if m2 * 2 == n { 2 } else { 1 }), "{m}");
        }
    }
}

/// Nilpotent Jordan matrix with blocks of the given sizes.
fn jordan_matrix(parts: &[usize]) -> RationalMatrix {
    let n: usize = parts.iter().sum();
    let mut x = RationalMatrix::zeros(n);
    let mut start = 0;
    for &k in parts {
        for i in start..start + k - 1 {
            x.set(i, i + 1, rat(1));
        }
        start += k;
    }
    x
}

#[test]
fn gl_sheets_match_jordan_centralisers() {
    for n in 1..=6 {
        let model = LieAlgebraModel::gl(n);
        let sheets = enumerate_sheets_gln(n).unwrap();
        assert_eq!(sheets.len(), Partition::all(n).len());
        for s in sheets {
            let LeviLabel::Gl { m } = &s.levi else { panic!("gl sheet without gl Levi") };
            let e = jordan_matrix(&orbit(&s));
            let c = centralizer_dim(&e, &model).unwrap();
            assert_eq!(c, m.sum_of_squares(), "{m}");
            assert_eq!(s.d, c, "{m}");
            assert_eq!(s.dim_z, m.len(), "{m}");
            assert_eq!(s.dim_sheet, n * n - c + m.len(), "{m}");
        }
    }
}

#[test]
fn sp4_agrees_with_so5() {
    // Sp4 and SO5 share a Lie algebra; their maximal Levis swap long and
    // short roots.
    let c2 = GroupKind::C(2);
    let b2 = GroupKind::B(2);
    let pairs = [
        (LeviLabel::MaxLevi { a: 1, residual: 1 }, LeviLabel::MaxLevi { a: 2, residual: 1 }),
        (LeviLabel::MaxLevi { a: 2, residual: 0 }, LeviLabel::MaxLevi { a: 1, residual: 3 }),
    ];
    for (sp, so) in pairs {
        let x = maximal_levi_sheet(c2, &sp).unwrap();
        let y = maximal_levi_sheet(b2, &so).unwrap();
        assert_eq!((x.d, x.dim_sheet, x.katsylo_order), (y.d, y.dim_sheet, y.katsylo_order), "{sp} vs {so}");
        assert_eq!(x.w_l_order, y.w_l_order);
        let (ox, oy) = (x.nilpotent_orbit.partition().unwrap(), y.nilpotent_orbit.partition().unwrap());
        assert_eq!(orbit_dimension(c2, ox).unwrap(), orbit_dimension(b2, oy).unwrap());
    }
}

#[test]
fn sp4_table_is_consistent() {
    let rows = sheets_sp4();
    assert_eq!(rows.len(), 5);
    for s in &rows {
        s.check_invariants().unwrap();
        let p = s.nilpotent_orbit.partition().unwrap();
        assert_eq!(orbit_dimension(GroupKind::C(2), p).unwrap() + s.dim_z, s.dim_sheet, "{}", s.id());
        if let LeviLabel::MaxLevi { a, residual } = s.levi {
            assert_eq!(orbit(s), induce_from_zero(GroupKind::C(2), a, 2 * residual));
        }
    }
    // Every Sp4 element lies in a sheet: the regular sheet is dense.
    assert_eq!(rows[0].dim_sheet, 10);
}
