mod common;

use common::rng;
use ha2kit::fixtures::{so3_action, so3_point, t2m, tm, tm_twisted_frame};
use ha2kit::ha2::{check_al2, check_lie2, check_lie2_brackets, check_r2_morphism, r2_map, Lifter};
use ha2kit::prolong::prolong2;
use ha2kit::random::random_poly;
use ha2kit::symbolic::{rat, Poly};
use ha2kit::{Algebroid1Data, Section};
use proptest::prelude::*;

fn eps(i: usize, j: usize, k: usize) -> i64 {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    (j - i) * (k - i) * (k - j) / 2
}

fn lie_algebroids() -> Vec<(&'static str, Algebroid1Data)> {
    vec![
        ("TM(2)", tm(2)),
        ("so3 action", so3_action()),
        ("so3 point", so3_point()),
        ("twisted frame", tm_twisted_frame()),
    ]
}

#[test]
fn tangent_bundle_prolongs_to_t2m() {
    for n in 1..=3 {
        assert_eq!(prolong2(&tm(n)), t2m(n));
    }
}

#[test]
fn so3_second_order_anchor_matches_levi_civita_oracle() {
    let h = prolong2(&so3_action());
    for a in 0..3 {
        for i in 0..3 {
            for j in 0..3 {
                let mut expected = Poly::zero();
                for b in 0..3 {
                    for c in 0..3 {
                        let coeff = eps(a, i, b) * eps(b, j, c) + eps(a, j, b) * eps(b, i, c);
                        expected += Poly::var(c).scale(&rat(coeff));
                    }
                }
                assert_eq!(h.q_a_ij[a][i][j], expected, "a={a} i={i} j={j}");
            }
        }
    }
}

#[test]
fn point_algebroid_prolongation() {
    let a = so3_point();
    let h = prolong2(&a);
    assert_eq!((h.n, h.r, h.m), (0, 3, 3));
    for mu in 0..3 {
        for i in 0..3 {
            let delta = if mu == i { Poly::one() } else { Poly::zero() };
            assert_eq!(h.q_mu_i[mu][i], delta);
            for j in 0..3 {
                assert_eq!(h.q_mu_ij[mu][i][j], a.bracket[mu][i][j]);
                assert_eq!(h.q_mu_nui[mu][i][j], a.bracket[mu][i][j]);
                for k in 0..3 {
                    assert!(h.q_mu_ijk[mu][i][j][k].is_zero());
                }
            }
        }
    }
    assert!(h.q_a_ij.is_empty() && h.q_a_mu.is_empty());
}

#[test]
fn prolongations_of_lie_algebroids_are_lie() {
    for (name, a) in lie_algebroids() {
        let h = prolong2(&a);
        assert!(check_al2(&h).passed(), "{name}");
        assert!(check_lie2(&h).passed(), "{name}");
        assert!(check_lie2_brackets(&h).passed(), "{name}");
        assert!(check_r2_morphism(&h).passed(), "{name}");
    }
}

#[test]
fn prolongations_are_adapted_with_identity_r2() {
    for (name, a) in lie_algebroids() {
        let h = prolong2(&a);
        assert!(h.is_adapted(), "{name}");
        let (n, r) = (h.n, h.r);
        let yd: Vec<Poly> = (0..r).map(|i| Poly::var(n + r + i)).collect();
        assert_eq!(r2_map(&h).z, yd, "{name}");
    }
}

#[test]
fn structure_maps_of_prolongations() {
    for (name, a) in lie_algebroids() {
        let h = prolong2(&a);
        let lf = Lifter::new(&h);
        let r = h.r;
        let e = |i: usize| Section::frame(i, r);
        for i in 0..r {
            assert_eq!(lf.pa(&e(i)).unwrap(), e(i), "{name}");
            for j in 0..r {
                let br = a.bracket_sections(&e(i), &e(j)).unwrap();
                assert_eq!(lf.beta(&e(i), &e(j)).unwrap(), br, "{name}");
                assert_eq!(lf.box_(&e(i), &e(j)).unwrap(), br, "{name}");
                for k in 0..r {
                    assert!(lf.omega(&e(i), &e(j), &e(k)).unwrap().is_zero(), "{name}");
                    assert!(lf.omega_sym(&e(k), &e(i), &e(j)).unwrap().is_zero(), "{name}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn prolonged_box_is_the_bracket_on_sections(seed in any::<u64>(), which in 0usize..4) {
        let (_, a) = &lie_algebroids()[which];
        let h = prolong2(a);
        let lf = Lifter::new(&h);
        let mut g = rng(seed);
        let s = Section::from_coeffs((0..a.r).map(|_| random_poly(&mut g, a.n, 2, 2)).collect());
        let v = Section::from_coeffs((0..a.r).map(|_| random_poly(&mut g, a.n, 2, 2)).collect());
        prop_assert_eq!(lf.box_(&s, &v).unwrap(), a.bracket_sections(&s, &v).unwrap());
        prop_assert_eq!(lf.beta(&s, &v).unwrap(), a.bracket_sections(&s, &v).unwrap());
    }
}
