use num_traits::Zero;
use sheet_atlas::matrix::{rank_of_columns, RationalMatrix};
use sheet_atlas::partitions::Partition;
use sheet_atlas::sheets::{all_maximal_levi_labels, classify_maximal_levi, sheet_by_levi, LeviLabel, RamificationType};
use sheet_atlas::triples::{build_bcd_triple, build_gl_triple, sp4_triple, Sl2Triple};

fn rank(x: &RationalMatrix) -> usize {
    let n = x.dim();
    let cols: Vec<_> = (0..n).map(|c| (0..n).map(|r| x.get(r, c).clone()).collect()).collect();
    rank_of_columns(&cols)
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
fn jordan_type(e: &RationalMatrix) -> Partition {
    let n = e.dim();
    let mut ranks = vec![n];
    let mut power = RationalMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        power = &power * e;
        ranks.push(rank(&power));
        assert!(ranks.len() <= n + 1, "not nilpotent");
    }
    // Number of blocks of size >= k is rank(e^{k-1}) - rank(e^k).
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(at_least).unwrap().conjugate()
}

fn assert_verified(t: &Sl2Triple, ctx: &str) {
    let report = t.verify(true).unwrap();
    let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
    assert!(failed.is_empty(), "{ctx}: {failed:?}");
}

#[test]
fn gl_triples_up_to_eight() {
    for n in 2..=8 {
        for m2 in 1..=n / 2 {
            let m1 = n - m2;
            let t = build_gl_triple(m1, m2).unwrap();
            let ctx = format!("GL({m1},{m2})");
            assert_verified(&t, &ctx);
            assert_eq!(jordan_type(&t.e), Partition::new(vec![m1, m2]).unwrap().conjugate(), "{ctx}");
            assert_eq!(t.h_prime.is_some(), m1 != m2, "{ctx}");
        }
    }
    assert!(build_gl_triple(2, 3).is_err());
    assert!(build_gl_triple(11, 10).is_err());
}

#[test]
fn classical_triples_up_to_twelve() {
    let mut count = 0;
    for (kind, levi) in all_maximal_levi_labels(12) {
        if matches!(levi, LeviLabel::Gl { .. }) {
            continue;
        }
        let ctx = format!("{kind} {levi}");
        let t = build_bcd_triple(kind, &levi).unwrap();
        assert_verified(&t, &ctx);

        let sheet = sheet_by_levi(kind, &levi).unwrap();
        assert_eq!(&jordan_type(&t.e), sheet.nilpotent_orbit.partition().unwrap(), "{ctx}");

        let type1 = classify_maximal_levi(kind, &levi).unwrap().ramification_type() == RamificationType::Type1;
        assert_eq!(t.h_prime.is_some(), type1, "{ctx}");

        // The first flag step is isotropic and orthogonal to the second.
        let g = t.gram.as_ref().unwrap();
        let flag = &t.flag_dims;
        let (a, second) = (flag[1], flag[flag.len() - 2]);
        for r in 0..a {
            for c in 0..second {
                assert!(g.get(r, c).is_zero(), "{ctx}: flag not isotropic at ({r},{c})");
            }
        }
        count += 1;
    }
    assert!(count > 40);
}

#[test]
fn sp4_printed_triple() {
    let t = sp4_triple();
    assert_verified(&t, "Sp4");
    assert_eq!(jordan_type(&t.e).parts(), &[2, 2]);
    assert_eq!(t.flag_dims, vec![0, 1, 3, 4]);
}
