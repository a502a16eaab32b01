mod common;

use common::{p, rng};
use ha2kit::fixtures::{flipped_constants, non_jacobi_constants, so3_action, so3_point, tm, tm_twisted_frame};
use ha2kit::graded_geometry::{vf_bracket, VectorField};
use ha2kit::random::random_poly;
use ha2kit::symbolic::{rat, Poly};
use ha2kit::{Algebroid1Data, Error, Section};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

fn zeros3(a: usize, b: usize, c: usize) -> Vec<Vec<Vec<Poly>>> {
    vec![vec![vec![Poly::zero(); c]; b]; a]
}

fn section(parts: &[&str], n: usize) -> Section {
    Section::from_coeffs(parts.iter().map(|e| p(e, n)).collect())
}

fn base_field(a: &Algebroid1Data, parts: &[(usize, &str)]) -> VectorField {
    VectorField::from_coeffs(&a.base, parts.iter().map(|(v, e)| (*v, p(e, a.n))))
}

/// Sum over cyclic permutations of `c^l_{ij} c^m_{lk}` for constant structure constants.
fn constant_jacobiator(c: &[Vec<Vec<Poly>>], i: usize, j: usize, k: usize) -> Vec<Poly> {
    let r = c.len();
    (0..r)
        .map(|m| {
            [(i, j, k), (j, k, i), (k, i, j)]
                .iter()
                .map(|&(a, b, d)| (0..r).map(|l| &c[l][a][b] * &c[m][l][d]).sum::<Poly>())
                .sum()
        })
        .collect()
}

#[test]
fn anchor_examples() {
    let t = tm(2);
    assert_eq!(t.anchor_apply(&Section::frame(0, 2)).unwrap(), base_field(&t, &[(0, "1")]));
    let s = so3_action();
    assert_eq!(
        s.anchor_apply(&Section::frame(0, 3)).unwrap(),
        base_field(&s, &[(1, "x3"), (2, "-x2")])
    );
    assert!(s.anchor_apply(&Section::zero(3)).unwrap().is_zero());
    assert!(matches!(s.anchor_apply(&Section::zero(2)), Err(Error::RankMismatch { expected: 3, found: 2 })));
}

#[test]
fn so3_anchor_matches_levi_civita_expansion() {
    let s = so3_action();
    for i in 0..3 {
        for a in 0..3 {
            let expected: Poly = (0..3)
                .map(|b| {
                    let sign = match (i, a, b) {
                        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
                        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
                        _ => 0,
                    };
                    Poly::var(b).scale(&rat(sign))
                })
                .sum();
            assert_eq!(s.anchor[a][i], expected);
        }
    }
}

#[test]
fn bracket_examples() {
    let s = so3_action();
    assert_eq!(s.bracket_sections(&Section::frame(0, 3), &Section::frame(1, 3)).unwrap(), Section::frame(2, 3));
    let u = section(&["x1", "x2^2", "1"], 3);
    assert!(s.bracket_sections(&u, &u).unwrap().is_zero());
    let t = tm(2);
    let x1e1 = section(&["x1", "0"], 2);
    assert!(t.bracket_sections(&x1e1, &Section::frame(1, 2)).unwrap().is_zero());
    assert_eq!(t.bracket_sections(&Section::frame(0, 2), &x1e1).unwrap(), Section::frame(0, 2));
    assert!(matches!(
        s.bracket_sections(&Section::frame(0, 3), &Section::zero(1)),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn jacobi_examples() {
    assert!(so3_action().check_jacobi().passed());
    assert!(so3_point().check_jacobi().passed());
    let abelian = Algebroid1Data::new(0, 3, Vec::new(), zeros3(3, 3, 3)).unwrap();
    assert!(abelian.check_jacobi().passed());
    assert!(tm_twisted_frame().check_jacobi().passed());
}

#[test]
fn flipped_constants_follow_the_jacobiator_oracle() {
    let a = flipped_constants();
    let oracle = constant_jacobiator(&a.bracket, 0, 1, 2);
    assert!(oracle.iter().all(Poly::is_zero));
    assert_eq!(a.check_jacobi().passed(), oracle.iter().all(Poly::is_zero));
}

#[test]
fn non_jacobi_constants_fail() {
    let a = non_jacobi_constants();
    let oracle = constant_jacobiator(&a.bracket, 0, 1, 2);
    assert_eq!(oracle, vec![Poly::zero(), Poly::zero(), Poly::int(-1)]);
    let rep = a.check_jacobi();
    assert!(!rep.passed());
    let failing: Vec<_> = rep.checks.iter().filter(|c| !c.pass).map(|c| (c.equation_id.clone(), c.indices.clone(), c.residual.clone())).collect();
    assert_eq!(failing, vec![("e:coord_Jac".to_string(), vec![3, 1, 2, 3], "-1".to_string())]);
}

#[test]
fn al1_examples() {
    assert!(tm(3).check_al1().passed());
    assert!(so3_action().check_al1().passed());
    assert!(tm_twisted_frame().check_al1().passed());
    let mut c = zeros3(2, 2, 2);
    c[0][0][1] = Poly::one();
    c[0][1][0] = -Poly::one();
    let bad = Algebroid1Data::new(2, 2, tm(2).anchor, c).unwrap();
    let rep = bad.check_al1();
    assert!(!rep.passed());
    assert!(!rep.family_passes("e:QakQk_ij"));
}

#[test]
fn invalid_data_is_rejected() {
    let mut c = zeros3(2, 2, 2);
    c[0][0][1] = Poly::one();
    assert!(matches!(Algebroid1Data::new(2, 2, tm(2).anchor, c), Err(Error::InvalidData(_))));
    let anchor = vec![vec![Poly::var(2), Poly::zero()], vec![Poly::zero(), Poly::one()]];
    assert!(matches!(Algebroid1Data::new(2, 2, anchor, zeros3(2, 2, 2)), Err(Error::InvalidData(_))));
}

fn random_section(g: &mut ChaCha8Rng, n: usize, r: usize) -> Section {
    Section::from_coeffs((0..r).map(|_| random_poly(g, n, 2, 2)).collect())
}

fn lie_algebroids() -> Vec<Algebroid1Data> {
    vec![tm(2), so3_action(), tm_twisted_frame(), so3_point()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_obeys_leibniz(seed in any::<u64>(), which in 0usize..4) {
        let a = &lie_algebroids()[which];
        let mut g = rng(seed);
        let (s1, s2) = (random_section(&mut g, a.n, a.r), random_section(&mut g, a.n, a.r));
        let f = random_poly(&mut g, a.n, 2, 2);
        let lhs = a.bracket_sections(&s1, &s2.mul_fn(&f)).unwrap();
        let rhs = a.bracket_sections(&s1, &s2).unwrap().mul_fn(&f).add(&s2.mul_fn(&a.sharp_apply(&s1, &f)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_bilinear_and_skew(seed in any::<u64>(), which in 0usize..4, c in -3i64..=3) {
        let a = &lie_algebroids()[which];
        let mut g = rng(seed);
        let (s1, s2, s3) = (random_section(&mut g, a.n, a.r), random_section(&mut g, a.n, a.r), random_section(&mut g, a.n, a.r));
        let k = Poly::int(c);
        let lhs = a.bracket_sections(&s1.mul_fn(&k).add(&s2), &s3).unwrap();
        let rhs = a.bracket_sections(&s1, &s3).unwrap().mul_fn(&k).add(&a.bracket_sections(&s2, &s3).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.bracket_sections(&s1, &s2).unwrap(), a.bracket_sections(&s2, &s1).unwrap().neg());
    }

    #[test]
    fn al1_implies_anchor_preserves_brackets(seed in any::<u64>(), which in 0usize..3) {
        let a = &lie_algebroids()[which];
        prop_assert!(a.check_al1().passed());
        let mut g = rng(seed);
        let (s1, s2) = (random_section(&mut g, a.n, a.r), random_section(&mut g, a.n, a.r));
        let lhs = a.anchor_apply(&a.bracket_sections(&s1, &s2).unwrap()).unwrap();
        let rhs = vf_bracket(&a.anchor_apply(&s1).unwrap(), &a.anchor_apply(&s2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_holds_on_random_sections(seed in any::<u64>(), which in 0usize..3) {
        let a = &lie_algebroids()[which];
        let mut g = rng(seed);
        let s: Vec<Section> = (0..3).map(|_| random_section(&mut g, a.n, a.r)).collect();
        let br = |x: &Section, y: &Section| a.bracket_sections(x, y).unwrap();
        let jac = br(&br(&s[0], &s[1]), &s[2]).add(&br(&br(&s[1], &s[2]), &s[0])).add(&br(&br(&s[2], &s[0]), &s[1]));
        prop_assert!(jac.is_zero());
    }
}
