mod common;

use common::{lie_fixtures, non_lie_fixtures, p, sample_shift};
use ha2kit::fixtures::*;
use ha2kit::ha2::{
    a2_chart, check_al2, check_lie2, check_lie2_brackets, check_r2_morphism, r2_map, shift_core, to_adapted, Lifter,
};
use ha2kit::point_ha::point_to_ha2;
use ha2kit::prolong::prolong2;
use ha2kit::symbolic::{parse, Poly};
use ha2kit::{HA2Data, Section, VerificationReport};

const AL_FAMILIES: [&str; 6] = [
    "e:QamuQmu_i",
    "e:QamuQmu_ij_skew",
    "e:QamuQmu_ij_symm",
    "e:QakQk_ij",
    "e:QanuQnu_mui",
    "e:QamuQmu_ijk",
];

fn failing(rep: &VerificationReport) -> Vec<(String, Vec<usize>, String)> {
    rep.checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| (c.equation_id.clone(), c.indices.clone(), c.residual.clone()))
        .collect()
}

fn families(rep: &VerificationReport) -> Vec<String> {
    rep.failed_families().into_iter().collect()
}

fn a2(h: &HA2Data, expr: &str) -> Poly {
    parse(expr, a2_chart(h.n, h.r).names()).unwrap()
}

#[test]
fn al2_passes_on_t2m_with_every_family_present() {
    let rep = check_al2(&t2m(2));
    assert!(rep.passed());
    for fam in AL_FAMILIES {
        assert!(rep.checks.iter().any(|c| c.equation_id == fam), "{fam}");
        assert!(rep.family_passes(fam));
    }
}

#[test]
fn al2_passes_on_prolonged_so3() {
    assert!(check_al2(&prolong2(&so3_action())).passed());
}

#[test]
fn al2_detects_a_missing_core_anchor() {
    let rep = check_al2(&t2m_without_core_anchor(2));
    let fails: Vec<_> = failing(&rep).into_iter().filter(|f| f.0 == "e:QamuQmu_i").collect();
    assert_eq!(
        fails,
        vec![
            ("e:QamuQmu_i".to_string(), vec![1, 1], "-1".to_string()),
            ("e:QamuQmu_i".to_string(), vec![2, 2], "-1".to_string()),
        ]
    );
}

#[test]
fn lie2_examples() {
    assert!(check_lie2(&t2m(3)).passed());
    assert!(check_lie2(&prolong2(&so3_action())).passed());
    let rep = check_lie2(&point_to_ha2(&so3_omega_bar_point()));
    assert!(!rep.family_passes("e:coord_omega"));
    assert!(rep.family_passes("e:coord_Jac"));
    assert!(rep.family_passes("e:coord_pa"));
    assert!(rep.family_passes("e:coord_beta"));
}

#[test]
fn lie2_warns_when_almost_lie_fails() {
    let rep = check_lie2(&t2m_without_core_anchor(2));
    assert!(!rep.warnings.is_empty());
    assert!(rep.warnings.iter().any(|w| w.contains("almost Lie")));
}

#[test]
fn lie2_localizes_point_violations() {
    let cases = [
        (so3_beta_zero_point(), "e:coord_beta"),
        (so3_trivial_module_point(), "e:coord_pa"),
        (abelian_non_module_point(), "e:coord_A_on_F"),
        (non_jacobi_point(), "e:coord_Jac"),
    ];
    for (pt, fam) in cases {
        let rep = check_lie2(&point_to_ha2(&pt));
        assert!(families(&rep).contains(&fam.to_string()), "{fam}");
    }
}

#[test]
fn bracket_checks_examples() {
    assert!(check_lie2_brackets(&t2m(2)).passed());
    assert!(check_lie2_brackets(&prolong2(&so3_action())).passed());
    assert!(check_lie2_brackets(&prolong2(&flipped_constants())).passed());
    let rep = check_lie2_brackets(&prolong2(&non_jacobi_constants()));
    assert!(!rep.family_passes("r:Lie_axiom[0,0]"));
    assert!(!check_lie2_brackets(&point_to_ha2(&non_jacobi_point())).family_passes("r:Lie_axiom[0,0]"));
}

#[test]
fn r2_map_examples() {
    let h = t2m(2);
    assert_eq!(r2_map(&h).z, vec![a2(&h, "yd1"), a2(&h, "yd2")]);
    let mut b = t2m(2).blocks();
    b.q_mu_i = vec![vec![Poly::zero(); 2]; 2];
    b.q_mu_ij[0][0][1] = Poly::int(3);
    b.q_mu_ij[0][1][0] = Poly::int(1);
    b.q_mu_ij[1][0][0] = Poly::int(4);
    let g = HA2Data::new(h.algebroid.clone(), 2, b).unwrap();
    assert_eq!(r2_map(&g).z, vec![a2(&g, "2*y1*y2"), a2(&g, "2*y1^2")]);
    let pr = prolong2(&so3_action());
    assert_eq!(r2_map(&pr).z, vec![a2(&pr, "yd1"), a2(&pr, "yd2"), a2(&pr, "yd3")]);
}

#[test]
fn r2_map_of_adapted_data_is_linear_in_velocities() {
    for (name, h) in lie_fixtures().into_iter().chain(non_lie_fixtures()) {
        let h = to_adapted(&h);
        let (n, r) = (h.n, h.r);
        let expected: Vec<Poly> = (0..h.m)
            .map(|mu| (0..r).map(|i| &h.q_mu_i[mu][i] * &Poly::var(n + r + i)).sum())
            .collect();
        assert_eq!(r2_map(&h).z, expected, "{name}");
    }
}

#[test]
fn r2_morphism_examples() {
    assert!(check_r2_morphism(&t2m(2)).passed());
    assert!(check_r2_morphism(&prolong2(&so3_action())).passed());
    let rep = check_r2_morphism(&point_to_ha2(&abelian_beta_point()));
    assert_eq!(families(&rep), vec!["e:R-related_VF[-1]"]);
}

#[test]
fn lie_fixtures_pass_every_check() {
    for (name, h) in lie_fixtures() {
        assert!(h.algebroid.check_jacobi().passed(), "{name}");
        assert!(h.algebroid.check_al1().passed(), "{name}");
        assert!(check_al2(&h).passed(), "{name}");
        assert!(check_lie2(&h).passed(), "{name}");
        assert!(check_lie2_brackets(&h).passed(), "{name}");
        assert!(check_r2_morphism(&h).passed(), "{name}");
    }
}

#[test]
fn to_adapted_leaves_adapted_data_alone() {
    for h in [t2m(2), prolong2(&so3_action()), prolong2(&tm_twisted_frame())] {
        assert!(h.is_adapted());
        assert_eq!(to_adapted(&h), h);
    }
}

#[test]
fn to_adapted_on_symmetric_bracket_term() {
    let c = 3;
    let out = to_adapted(&t2m_symmetric_q(c));
    let mut b = t2m(2).blocks();
    for a in 0..2 {
        b.q_a_ij[a][0][1] = Poly::int(c);
        b.q_a_ij[a][1][0] = Poly::int(c);
    }
    let expected = HA2Data::new(tm(2), 2, b).unwrap();
    assert_eq!(out, expected);
    assert!(out.is_adapted());
}

#[test]
fn to_adapted_is_idempotent() {
    for (name, h) in lie_fixtures().into_iter().chain(non_lie_fixtures()) {
        let once = to_adapted(&h);
        assert!(once.is_adapted(), "{name}");
        assert_eq!(to_adapted(&once), once, "{name}");
    }
}

#[test]
fn to_adapted_preserves_verdicts() {
    for (name, h) in lie_fixtures().into_iter().chain(non_lie_fixtures()) {
        let g = to_adapted(&h);
        assert_eq!(check_al2(&g).passed(), check_al2(&h).passed(), "{name}");
        assert_eq!(check_lie2(&g).passed(), check_lie2(&h).passed(), "{name}");
        assert_eq!(check_lie2_brackets(&g).passed(), check_lie2_brackets(&h).passed(), "{name}");
    }
}

#[test]
fn core_shifts_leave_structure_maps_unchanged() {
    let bases = [t2m(2), prolong2(&so3_action()), prolong2(&tm_twisted_frame()), t2m_symmetric_q(2)];
    for h in bases {
        let g = shift_core(&h, &sample_shift(&h)).unwrap();
        let (lh, lg) = (Lifter::new(&h), Lifter::new(&g));
        let e = |i: usize| Section::frame(i, h.r);
        let c = |mu: usize| Section::frame(mu, h.m);
        for i in 0..h.r {
            assert_eq!(lh.pa(&e(i)).unwrap(), lg.pa(&e(i)).unwrap());
            for j in 0..h.r {
                assert_eq!(lh.beta(&e(i), &e(j)).unwrap(), lg.beta(&e(i), &e(j)).unwrap());
                assert_eq!(lh.psi(&e(i), &e(j)).unwrap(), lg.psi(&e(i), &e(j)).unwrap());
                for k in 0..h.r {
                    assert_eq!(lh.omega(&e(i), &e(j), &e(k)).unwrap(), lg.omega(&e(i), &e(j), &e(k)).unwrap());
                }
            }
            for mu in 0..h.m {
                assert_eq!(lh.box_(&e(i), &c(mu)).unwrap(), lg.box_(&e(i), &c(mu)).unwrap());
            }
        }
        for mu in 0..h.m {
            assert_eq!(lh.sharp_c(&c(mu)).unwrap(), lg.sharp_c(&c(mu)).unwrap());
        }
        let back: Vec<Vec<Vec<Poly>>> =
            sample_shift(&h).iter().map(|pl| pl.iter().map(|row| row.iter().map(|q| -q).collect()).collect()).collect();
        assert_eq!(shift_core(&g, &back).unwrap(), h);
    }
}

#[test]
fn shifted_lifts_read_off_explicitly() {
    let h = t2m(1);
    let s = vec![vec![vec![p("x1", 1)]]];
    let g = shift_core(&h, &s).unwrap();
    let lf = Lifter::new(&g);
    let names = g.chart.names();
    let f = |e: &str| parse(e, names).unwrap();
    let x0 = lf.frame(0, 0).unwrap();
    assert_eq!(x0.coeff(g.z(0)), f("-1/2*y1^2"));
    let x1 = lf.frame(0, -1).unwrap();
    assert_eq!(x1.coeff(g.z(0)), f("-x1*y1"));
    assert_eq!(g.q_a_ij[0][0][0], f("x1"));
}
