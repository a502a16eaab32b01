//! Seeded pseudo-random inputs for property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebroid1::Algebroid1Data;
use crate::ha2::{zeros3, HA2Data, Order2Blocks};
use crate::point_ha::PointHAData;
use crate::symbolic::{rat, Monomial, Poly, Rational};

/// All exponent vectors over `n` variables with total degree at most `d`.
fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![Monomial::one()];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            let last = m.iter().map(|(v, _)| v).max().unwrap_or(0);
            for v in last..n {
                next.push(m.mul(&Monomial::var(v)));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A polynomial in variables `0..n` of degree at most `d` with integer coefficients in `-b..=b`.
pub fn random_poly(rng: &mut impl Rng, n: usize, d: u32, b: i64) -> Poly {
    Poly::from_terms(monomials(n, d).into_iter().map(|m| (m, rat(rng.gen_range(-b..=b)))))
}

/// A sparse polynomial: each monomial is kept with probability `density`.
pub fn random_sparse_poly(rng: &mut impl Rng, n: usize, d: u32, b: i64, density: f64) -> Poly {
    Poly::from_terms(
        monomials(n, d)
            .into_iter()
            .filter_map(|m| rng.gen_bool(density).then(|| (m, rat(rng.gen_range(-b..=b))))),
    )
}

/// An arbitrary skew order-two algebroid with sparse polynomial structure functions of degree at most `d`.
pub fn random_ha2(rng: &mut impl Rng, n: usize, r: usize, m: usize, d: u32) -> HA2Data {
    let mut p = || random_sparse_poly(rng, n, d, 2, 0.3);
    let anchor: Vec<Vec<Poly>> = (0..n).map(|_| (0..r).map(|_| p()).collect()).collect();
    let mut bracket = zeros3(r, r, r);
    for k in 0..r {
        for i in 0..r {
            for j in i + 1..r {
                let c = p();
                bracket[k][j][i] = -&c;
                bracket[k][i][j] = c;
            }
        }
    }
    let mut b = Order2Blocks::zeros(n, r, m);
    for a in 0..n {
        for i in 0..r {
            for j in i..r {
                let c = p();
                b.q_a_ij[a][j][i] = c.clone();
                b.q_a_ij[a][i][j] = c;
            }
        }
        for mu in 0..m {
            b.q_a_mu[a][mu] = p();
        }
    }
    for mu in 0..m {
        for i in 0..r {
            b.q_mu_i[mu][i] = p();
            for j in 0..r {
                b.q_mu_ij[mu][i][j] = p();
                for k in 0..r {
                    if j >= i {
                        let c = p();
                        b.q_mu_ijk[mu][j][i][k] = c.clone();
                        b.q_mu_ijk[mu][i][j][k] = c;
                    }
                }
            }
        }
        for nu in 0..m {
            for i in 0..r {
                b.q_mu_nui[mu][nu][i] = p();
            }
        }
    }
    let alg = Algebroid1Data::new(n, r, anchor, bracket).expect("skew by construction");
    HA2Data::new(alg, m, b).expect("symmetric by construction")
}

/// Adds a small random polynomial to one randomly chosen structure function, keeping the symmetries.
pub fn perturb_ha2(rng: &mut impl Rng, h: &HA2Data) -> HA2Data {
    let (n, r, m) = (h.n, h.r, h.m);
    let mut delta = random_sparse_poly(rng, n, 1, 2, 0.6);
    if delta.is_zero() {
        delta = Poly::one();
    }
    let mut alg = h.algebroid.clone();
    let mut b = h.blocks();
    let mut choices = Vec::new();
    if n > 0 && r > 0 {
        choices.extend([0, 2]);
    }
    if r > 1 {
        choices.push(1);
    }
    if n > 0 && m > 0 {
        choices.push(3);
    }
    if m > 0 && r > 0 {
        choices.extend([4, 5, 6, 7]);
    }
    let Some(&which) = choices.choose(rng) else {
        return h.clone();
    };
    let a = if n > 0 { rng.gen_range(0..n) } else { 0 };
    let (i, j, k) = (rng.gen_range(0..r.max(1)), rng.gen_range(0..r.max(1)), rng.gen_range(0..r.max(1)));
    let (mu, nu) = (rng.gen_range(0..m.max(1)), rng.gen_range(0..m.max(1)));
    match which {
        0 => alg.anchor[a][i] += delta,
        1 => {
            let j = if i == j { (i + 1) % r } else { j };
            alg.bracket[k][i][j] += &delta;
            alg.bracket[k][j][i] -= delta;
        }
        2 => {
            b.q_a_ij[a][i][j] += &delta;
            if i != j {
                b.q_a_ij[a][j][i] += delta;
            }
        }
        3 => b.q_a_mu[a][mu] += delta,
        4 => b.q_mu_i[mu][i] += delta,
        5 => b.q_mu_ij[mu][i][j] += delta,
        6 => b.q_mu_nui[mu][nu][i] += delta,
        _ => {
            b.q_mu_ijk[mu][i][j][k] += &delta;
            if i != j {
                b.q_mu_ijk[mu][j][i][k] += delta;
            }
        }
    }
    let alg = Algebroid1Data::new(n, r, alg.anchor, alg.bracket).expect("symmetries kept");
    HA2Data::new(alg, m, b).expect("symmetries kept")
}

fn small(rng: &mut impl Rng, b: i64) -> Rational {
    rat(rng.gen_range(-b..=b))
}

/// Lie algebras used to seed structured point data: abelian, `[e1, e2] = e2`, Heisenberg, `so(3)`.
fn lie_catalog(r: usize, which: usize) -> Vec<Vec<Vec<Rational>>> {
    let mut c = vec![vec![vec![rat(0); r]; r]; r];
    let mut set = |k: usize, i: usize, j: usize, v: i64| {
        c[k][i][j] = rat(v);
        c[k][j][i] = rat(-v);
    };
    match (r, which % 3) {
        (2, 1) => set(1, 0, 1, 1),
        (3, 1) => set(2, 0, 1, 1),
        (3, 2) => {
            set(2, 0, 1, 1);
            set(0, 1, 2, 1);
            set(1, 2, 0, 1);
        }
        _ => {}
    }
    c
}

/// Point data with `r, m ≤ 3` and entries in `-b..=b`.
///
/// A third of the samples is fully random; the rest start from a Lie algebra acting
/// on itself or trivially, with forced `β` and `ω̄`, and half of those get one entry perturbed.
pub fn random_point_ha(rng: &mut impl Rng, b: i64) -> PointHAData {
    let mode = rng.gen_range(0..3);
    if mode == 0 {
        let r = rng.gen_range(1..=3);
        let m = rng.gen_range(0..=3);
        let mut p = PointHAData::zero(r, m);
        for k in 0..r {
            for i in 0..r {
                for j in i + 1..r {
                    let v = small(rng, b);
                    p.bracket[k][j][i] = -v.clone();
                    p.bracket[k][i][j] = v;
                }
            }
        }
        for mu in 0..m {
            for i in 0..r {
                p.pa[mu][i] = small(rng, b);
                for j in i + 1..r {
                    let v = small(rng, b);
                    p.beta[mu][j][i] = -v.clone();
                    p.beta[mu][i][j] = v;
                }
                for nu in 0..m {
                    p.box_[mu][i][nu] = small(rng, b);
                }
                for k in 0..r {
                    for j in i..r {
                        let v = if rng.gen_bool(0.8) { rat(0) } else { small(rng, b) };
                        p.omega_bar[mu][k][j][i] = v.clone();
                        p.omega_bar[mu][k][i][j] = v;
                    }
                }
            }
        }
        return p;
    }
    let r = rng.gen_range(1..=3);
    let c = lie_catalog(r, rng.gen_range(0..3));
    let adjoint = rng.gen_bool(0.5);
    let m = if adjoint { r } else { rng.gen_range(0..=3) };
    let mut p = PointHAData::zero(r, m);
    p.bracket = c.clone();
    if adjoint {
        let scale = small(rng, b);
        for mu in 0..m {
            p.pa[mu][mu] = scale.clone();
            for i in 0..r {
                for nu in 0..m {
                    p.box_[mu][i][nu] = c[mu][i][nu].clone();
                }
            }
        }
    } else {
        let derived: Vec<bool> = (0..r).map(|l| (0..r).any(|i| (0..r).any(|j| c[l][i][j] != rat(0)))).collect();
        for mu in 0..m {
            for i in 0..r {
                if !derived[i] {
                    p.pa[mu][i] = small(rng, b);
                }
            }
        }
    }
    let mut p = p.forced();
    if mode == 2 {
        perturb_point(rng, &mut p, b);
    }
    p
}

fn perturb_point(rng: &mut impl Rng, p: &mut PointHAData, b: i64) {
    let (r, m) = (p.r, p.m);
    let bump = loop {
        let v = small(rng, b);
        if v != rat(0) {
            break v;
        }
    };
    let i = rng.gen_range(0..r);
    let j = rng.gen_range(0..r);
    let k = rng.gen_range(0..r);
    let slot = if m == 0 { 0 } else { rng.gen_range(0..5) };
    match slot {
        0 if r > 1 => {
            let j = if i == j { (i + 1) % r } else { j };
            p.bracket[k][i][j] += &bump;
            p.bracket[k][j][i] -= bump;
        }
        0 => {}
        1 => p.pa[rng.gen_range(0..m)][i] += bump,
        2 if r > 1 => {
            let j = if i == j { (i + 1) % r } else { j };
            let mu = rng.gen_range(0..m);
            p.beta[mu][i][j] += &bump;
            p.beta[mu][j][i] -= bump;
        }
        2 => {}
        3 => p.box_[rng.gen_range(0..m)][i][rng.gen_range(0..m)] += bump,
        _ => {
            let mu = rng.gen_range(0..m);
            p.omega_bar[mu][k][i][j] += &bump;
            if i != j {
                p.omega_bar[mu][k][j][i] += bump;
            }
        }
    }
}

