use num_traits::{One, Zero};
use proptest::prelude::*;
use sheet_atlas::partitions::{MultiplicityProfile, Partition};
use sheet_atlas::ring::{rat, GcdDomain, QPoly, Rational};
use sheet_atlas::spectral::{in_heart, min_poly, mu_s, witness_noninjectivity, GradedPolynomial, SheetBasePoint};

/// Yun's square-free decomposition: `p = prod_i q_i^i` with the `q_i`
/// squarefree, monic and pairwise coprime.
fn yun(p: &QPoly) -> Vec<QPoly> {
    let dp = p.derivative();
    let a = p.gcd(&dp);
    let mut b = p.div_exact(&a).unwrap();
    let mut c = dp.div_exact(&a).unwrap();
    let mut d = c - b.derivative();
    let mut out = Vec::new();
    while b.degree().unwrap_or(0) > 0 {
        let q = b.gcd(&d);
        out.push(q.normalized());
        b = b.div_exact(&q).unwrap();
        c = d.div_exact(&q).unwrap();
        d = c - b.derivative();
    }
    out
}

/// Inverse of `mu_s` on the heart: the tuple `(xi_1, ..., xi_s)`.
fn recover_tuple(image: &GradedPolynomial<Rational>, s: usize) -> Vec<GradedPolynomial<Rational>> {
    let mut parts = yun(&image.to_poly());
    parts.resize(s, QPoly::one());
    parts.iter().map(|q| GradedPolynomial::from_poly(q).unwrap()).collect()
}

fn profile_strategy() -> impl Strategy<Value = Partition> {
    (1usize..=10).prop_flat_map(|n| prop::sample::select(Partition::all(n)))
}

/// A point of the given profile whose factors have distinct integer roots,
/// drawn from a shuffled pool.
fn heart_point(m: &Partition, pool: &[i64]) -> SheetBasePoint<Rational> {
    let profile = m.profile();
    let mut roots = pool.iter().copied();
    let factors = profile
        .iter()
        .map(|(_, l)| {
            let r: Vec<Rational> = (&mut roots).take(l).map(rat).collect();
            GradedPolynomial::from_roots(&r)
        })
        .collect();
    SheetBasePoint::new(profile, factors).unwrap()
}

fn any_point(m: &Partition, roots: &[i64]) -> SheetBasePoint<Rational> {
    let profile = m.profile();
    let mut it = roots.iter().copied().cycle();
    let factors = profile
        .iter()
        .map(|(_, l)| GradedPolynomial::from_roots(&(&mut it).take(l).map(rat).collect::<Vec<_>>()))
        .collect();
    SheetBasePoint::new(profile, factors).unwrap()
}

fn distinct_pool() -> impl Strategy<Value = Vec<i64>> {
    Just((-20i64..=20).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn image_has_degree_n_and_min_poly_divides(m in profile_strategy(), roots in prop::collection::vec(-3i64..=3, 1..12)) {
        let p = any_point(&m, &roots);
        let img = mu_s(&p);
        prop_assert_eq!(img.degree(), m.n());
        let min = min_poly(&p);
        prop_assert!(min.divides(&img));
        prop_assert_eq!(min.degree(), m.len());
    }

    #[test]
    fn heart_points_are_recovered(m in profile_strategy(), pool in distinct_pool()) {
        let p = heart_point(&m, &pool);
        prop_assert!(in_heart(&p));
        let img = mu_s(&p);
        prop_assert_eq!(recover_tuple(&img, p.profile().s()), p.factors().to_vec());
    }

    #[test]
    fn mu_is_injective_on_coprime_heart_points(m in profile_strategy(), a in distinct_pool(), b in distinct_pool()) {
        let (p, q) = (heart_point(&m, &a), heart_point(&m, &b));
        prop_assert_eq!(mu_s(&p) == mu_s(&q), p == q);
    }

    #[test]
    fn mu_is_multiplicative(m in profile_strategy(), x in prop::collection::vec(-4i64..=4, 1..12), y in prop::collection::vec(-4i64..=4, 1..12)) {
        let (p, q) = (any_point(&m, &x), any_point(&m, &y));
        let doubled = MultiplicityProfile::from_multiplicities(p.profile().iter().map(|(_, l)| 2 * l).collect());
        let factors = p.factors().iter().zip(q.factors()).map(|(u, v)| u.mul(v)).collect();
        let pq = SheetBasePoint::new(doubled, factors).unwrap();
        prop_assert_eq!(mu_s(&pq), mu_s(&p).mul(&mu_s(&q)));
    }

    #[test]
    fn witness_points_collide(num in -50i64..=50, den in 1i64..=9) {
        let a = Rational::new(num.into(), den.into());
        let w = witness_noninjectivity(&a);
        if a.is_zero() {
            prop_assert!(w.is_err());
        } else {
            let (p, q) = w.unwrap();
            prop_assert_ne!(&p, &q);
            prop_assert_eq!(mu_s(&p), mu_s(&q));
            prop_assert!(!in_heart(&p) && !in_heart(&q));
        }
    }
}

#[test]
fn yun_oracle_examples() {
    // (λ-1)(λ-2)^2(λ-3)^3
    let p = GradedPolynomial::from_roots(&[1, 2, 2, 3, 3, 3].map(rat));
    let parts = recover_tuple(&p, 3);
    assert_eq!(parts[0], GradedPolynomial::from_roots(&[rat(1)]));
    assert_eq!(parts[1], GradedPolynomial::from_roots(&[rat(2)]));
    assert_eq!(parts[2], GradedPolynomial::from_roots(&[rat(3)]));
}

#[test]
fn non_monic_polynomials_are_rejected() {
    let p = QPoly::new(vec![rat(1), rat(2)]);
    assert!(GradedPolynomial::from_poly(&p).is_err());
    assert!(GradedPolynomial::<Rational>::from_poly(&QPoly::zero()).is_err());
}
