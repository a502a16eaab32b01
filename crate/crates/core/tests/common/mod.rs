#![allow(dead_code, clippy::needless_range_loop)]

pub mod vf_table;

use ha2kit::fixtures::*;
use ha2kit::ha2::{check_al2, check_lie2, check_lie2_brackets, shift_core, HA2Data};
use ha2kit::point_ha::point_to_ha2;
use ha2kit::prolong::prolong2;
use ha2kit::random::{perturb_ha2, random_ha2, random_point_ha};
use ha2kit::ruth2::Connection;
use ha2kit::symbolic::{parse, rat, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(expr: &str, n: usize) -> Poly {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    parse(expr, &names).expect("test expression parses")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A symmetric core shift with polynomial entries.
pub fn sample_shift(h: &HA2Data) -> Vec<Vec<Vec<Poly>>> {
    let (n, r, m) = (h.n, h.r, h.m);
    (0..m)
        .map(|mu| {
            (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| {
                            let c = Poly::int((mu + i + j) as i64 % 3 - 1);
                            if n > 0 && i == j {
                                c + Poly::var((mu + i) % n).scale(&rat(mu as i64 + 1))
                            } else {
                                c
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Lie algebroids of order two, some in non-adapted coordinates.
pub fn lie_fixtures() -> Vec<(String, HA2Data)> {
    let mut out = vec![
        ("T2M(1)".to_string(), t2m(1)),
        ("T2M(2)".to_string(), t2m(2)),
        ("T2M(3)".to_string(), t2m(3)),
        ("prolong(TM(2))".to_string(), prolong2(&tm(2))),
        ("prolong(so3 action)".to_string(), prolong2(&so3_action())),
        ("prolong(so3 point)".to_string(), prolong2(&so3_point())),
        ("prolong(twisted frame)".to_string(), prolong2(&tm_twisted_frame())),
        ("point so3 adjoint".to_string(), point_to_ha2(&so3_adjoint_point())),
    ];
    let shifted: Vec<(String, HA2Data)> = [("T2M(2)", t2m(2)), ("prolong(so3 action)", prolong2(&so3_action()))]
        .into_iter()
        .map(|(name, h)| {
            let s = sample_shift(&h);
            (format!("{name} shifted"), shift_core(&h, &s).expect("valid shift"))
        })
        .collect();
    out.extend(shifted);
    out
}

/// Inputs failing some axiom level.
pub fn non_lie_fixtures() -> Vec<(String, HA2Data)> {
    vec![
        ("T2M(2) without core anchor".to_string(), t2m_without_core_anchor(2)),
        ("T2M(2) symmetric Q".to_string(), t2m_symmetric_q(3)),
        ("point so3 omega_bar".to_string(), point_to_ha2(&so3_omega_bar_point())),
        ("point so3 beta zero".to_string(), point_to_ha2(&so3_beta_zero_point())),
        ("point so3 trivial module".to_string(), point_to_ha2(&so3_trivial_module_point())),
        ("point abelian non-module".to_string(), point_to_ha2(&abelian_non_module_point())),
        ("point non-Jacobi".to_string(), point_to_ha2(&non_jacobi_point())),
        ("point abelian beta".to_string(), point_to_ha2(&abelian_beta_point())),
        ("prolong(non-Jacobi)".to_string(), prolong2(&non_jacobi_constants())),
    ]
}

/// Fixtures, seeded random point algebroids and seeded perturbations of the Lie fixtures.
pub fn dual_corpus() -> Vec<(String, HA2Data)> {
    let mut out = lie_fixtures();
    out.extend(non_lie_fixtures());
    let mut g = rng(2024);
    for t in 0..24 {
        out.push((format!("random point {t}"), point_to_ha2(&random_point_ha(&mut g, 2))));
    }
    let base: Vec<HA2Data> = lie_fixtures().into_iter().map(|(_, h)| h).filter(|h| h.n <= 2).collect();
    for t in 0..12 {
        let h = &base[t % base.len()];
        out.push((format!("perturbation {t}"), perturb_ha2(&mut g, h)));
    }
    for t in 0..4 {
        out.push((format!("random skew {t}"), random_ha2(&mut g, 2, 2, 1, 1)));
    }
    out
}

pub fn equation_verdict(h: &HA2Data) -> bool {
    h.algebroid.check_jacobi().passed() && h.algebroid.check_al1().passed() && check_al2(h).passed() && check_lie2(h).passed()
}

pub fn bracket_verdict(h: &HA2Data) -> bool {
    check_lie2_brackets(h).passed()
}

/// A connection with polynomial Christoffel functions.
pub fn sample_connection(n: usize, r: usize) -> Connection {
    let gamma = (0..r)
        .map(|j| {
            (0..n)
                .map(|a| {
                    (0..r)
                        .map(|i| {
                            let c = Poly::int(((j + 2 * a + i) % 3) as i64 - 1);
                            if (i + j + a) % 2 == 0 {
                                c + Poly::var((a + j) % n)
                            } else {
                                c
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Connection::new(n, r, gamma).expect("valid connection")
}

/// Two distinct connections when the base is not a point.
pub fn connections(n: usize, r: usize) -> Vec<Connection> {
    if n == 0 {
        vec![Connection::trivial(0, r)]
    } else {
        vec![Connection::trivial(n, r), sample_connection(n, r)]
    }
}
