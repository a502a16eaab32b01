mod common;

use std::sync::Arc;

use common::vf_table::vf_alg_lines;
use ha2kit::graded_geometry::{
    core_to_vf, fn_weight, vf_bracket, vf_project, vf_to_core, vf_weight, Chart, GradedFunctionWeight, VectorField,
};
use ha2kit::random::random_poly;
use ha2kit::symbolic::{parse, Poly};
use ha2kit::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `(x, y, z)` with weights `(0, 1, 2)`.
fn xyz() -> Arc<Chart> {
    Arc::new(Chart::new(vec![("x".into(), 0), ("y".into(), 1), ("z".into(), 2)]).unwrap())
}

fn q(chart: &Chart, expr: &str) -> Poly {
    parse(expr, chart.names()).unwrap()
}

fn field(chart: &Arc<Chart>, parts: &[(&str, &str)]) -> VectorField {
    VectorField::from_coeffs(chart, parts.iter().map(|(v, c)| (chart.index_of(v).unwrap(), q(chart, c))))
}

#[test]
fn fn_weight_examples() {
    let c = Chart::blocks(&[("x", 1, 0), ("y", 2, 1)], 1);
    assert_eq!(fn_weight(&q(&c, "y1"), &c), GradedFunctionWeight::Homogeneous(1));
    assert_eq!(fn_weight(&q(&c, "y1*y2"), &c), GradedFunctionWeight::Homogeneous(2));
    assert_eq!(fn_weight(&q(&c, "x1 + y1"), &c), GradedFunctionWeight::NotHomogeneous);
    assert_eq!(fn_weight(&Poly::zero(), &c), GradedFunctionWeight::Zero);
    assert_eq!(fn_weight(&q(&c, "x1^3 + 2"), &c), GradedFunctionWeight::Homogeneous(0));
}

#[test]
fn vf_bracket_examples() {
    let c = Arc::new(Chart::new(vec![("x".into(), 0), ("y".into(), 0)]).unwrap());
    let dx = field(&c, &[("x", "1")]);
    let dy = field(&c, &[("y", "1")]);
    assert_eq!(vf_bracket(&dx, &field(&c, &[("x", "x")])).unwrap(), dx);
    assert_eq!(
        vf_bracket(&field(&c, &[("y", "x")]), &field(&c, &[("x", "y")])).unwrap(),
        field(&c, &[("x", "x"), ("y", "-y")])
    );
    assert!(vf_bracket(&dx, &dy).unwrap().is_zero());
}

#[test]
fn vf_bracket_rejects_different_charts() {
    let a = field(&xyz(), &[("x", "1")]);
    let other = Arc::new(Chart::base(1));
    let b = VectorField::partial(&other, 0);
    assert!(matches!(vf_bracket(&a, &b), Err(Error::ChartMismatch)));
}

#[test]
fn vf_weight_examples() {
    let c = xyz();
    assert_eq!(vf_weight(&field(&c, &[("z", "1")]), &c), GradedFunctionWeight::Homogeneous(-2));
    assert_eq!(vf_weight(&field(&c, &[("z", "y")]), &c), GradedFunctionWeight::Homogeneous(-1));
    assert_eq!(vf_weight(&field(&c, &[("x", "x")]), &c), GradedFunctionWeight::Homogeneous(0));
    assert_eq!(vf_weight(&field(&c, &[("z", "1"), ("y", "1")]), &c), GradedFunctionWeight::NotHomogeneous);
}

#[test]
fn vf_project_examples() {
    let c = xyz();
    let xy = Arc::new(c.reduction(1));
    let x = Arc::new(c.reduction(0));
    assert_eq!(vf_project(&field(&c, &[("z", "y"), ("y", "1")]), &xy).unwrap(), field(&xy, &[("y", "1")]));
    assert_eq!(vf_project(&field(&c, &[("x", "x")]), &x).unwrap(), field(&x, &[("x", "x")]));
    match vf_project(&field(&c, &[("y", "z")]), &xy) {
        Err(Error::NotProjectable { variable }) => assert_eq!(variable, "y"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn core_to_vf_examples() {
    let c = Arc::new(Chart::new(vec![("x".into(), 0), ("z".into(), 2)]).unwrap());
    assert_eq!(core_to_vf(&[Poly::one()], &c).unwrap(), field(&c, &[("z", "1")]));
    let e2 = Arc::new(Chart::e2(1, 1, 2));
    let v = core_to_vf(&[Poly::var(0), Poly::zero()], &e2).unwrap();
    assert_eq!(v, VectorField::from_coeffs(&e2, [(e2.index_of("z1").unwrap(), Poly::var(0))]));
    assert_eq!(vf_weight(&v, &e2), GradedFunctionWeight::Homogeneous(-2));
    let dz1 = VectorField::partial(&e2, e2.index_of("z1").unwrap());
    assert_eq!(vf_to_core(&dz1).unwrap(), vec![Poly::one(), Poly::zero()]);
}

#[test]
fn core_to_vf_counts_components() {
    let e2 = Arc::new(Chart::e2(1, 1, 2));
    assert!(matches!(core_to_vf(&[Poly::one()], &e2), Err(Error::BadComponentCount { expected: 2, found: 1 })));
}

#[test]
fn point_bracket_table() {
    for (line, ok) in vf_alg_lines(2, 2) {
        assert!(ok, "{line}");
    }
}

#[test]
fn point_bracket_table_unequal_ranks() {
    for (line, ok) in vf_alg_lines(3, 1) {
        assert!(ok, "{line}");
    }
}

fn random_field(rng: &mut ChaCha8Rng, chart: &Arc<Chart>) -> VectorField {
    VectorField::from_coeffs(chart, (0..chart.len()).map(|v| (v, random_poly(rng, chart.len(), 2, 2))))
}

/// Keeps the monomials of each coefficient that give total weight `alpha`.
fn homogeneous_field(rng: &mut ChaCha8Rng, chart: &Arc<Chart>, alpha: i64) -> VectorField {
    let coeffs = (0..chart.len()).map(|v| {
        let p = random_poly(rng, chart.len(), 3, 2);
        let target = alpha + chart.weight(v) as i64;
        let kept = p.terms().filter(|(m, _)| {
            m.iter().map(|(u, e)| e as i64 * chart.weight(u) as i64).sum::<i64>() == target
        });
        (v, Poly::from_terms(kept.map(|(m, c)| (m.clone(), c.clone()))))
    });
    VectorField::from_coeffs(chart, coeffs.collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_satisfies_jacobi(seed in any::<u64>()) {
        let c = xyz();
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_field(&mut g, &c), random_field(&mut g, &c), random_field(&mut g, &c));
        let br = |a: &VectorField, b: &VectorField| vf_bracket(a, b).unwrap();
        let sum = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).unwrap().add(&br(&z, &br(&x, &y))).unwrap();
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric(seed in any::<u64>()) {
        let c = xyz();
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_field(&mut g, &c), random_field(&mut g, &c));
        prop_assert_eq!(vf_bracket(&x, &y).unwrap(), vf_bracket(&y, &x).unwrap().neg());
    }

    #[test]
    fn weights_add_under_bracket(seed in any::<u64>(), a in -2i64..=1, b in -2i64..=1) {
        let c = xyz();
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (homogeneous_field(&mut g, &c, a), homogeneous_field(&mut g, &c, b));
        prop_assert!(vf_weight(&x, &c).admits(a));
        prop_assert!(vf_weight(&y, &c).admits(b));
        let z = vf_bracket(&x, &y).unwrap();
        if !z.is_zero() {
            prop_assert_eq!(vf_weight(&z, &c), GradedFunctionWeight::Homogeneous(a + b));
        }
    }

    #[test]
    fn core_to_vf_is_linear_and_injective(seed in any::<u64>()) {
        let e2 = Arc::new(Chart::e2(2, 1, 2));
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let section = |g: &mut ChaCha8Rng| (0..2).map(|_| random_poly(g, 2, 2, 2)).collect::<Vec<_>>();
        let (u, v) = (section(&mut g), section(&mut g));
        let f = random_poly(&mut g, 2, 1, 2);
        let lhs: Vec<Poly> = u.iter().zip(&v).map(|(a, b)| &(&f * a) + b).collect();
        let rhs = core_to_vf(&u, &e2).unwrap().mul_fn(&f).add(&core_to_vf(&v, &e2).unwrap()).unwrap();
        prop_assert_eq!(core_to_vf(&lhs, &e2).unwrap(), rhs);
        prop_assert_eq!(vf_to_core(&core_to_vf(&u, &e2).unwrap()).unwrap(), u.clone());
        if u != v {
            prop_assert_ne!(core_to_vf(&u, &e2).unwrap(), core_to_vf(&v, &e2).unwrap());
        }
    }
}
