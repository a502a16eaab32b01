//! Reading structure functions off lift fields, and adapted coordinates.

use std::collections::BTreeMap;

use super::lifts::Lifter;
use super::{zeros2, HA2Data, Order2Blocks};
use crate::algebroid1::{check_base_only, check_shape3, Algebroid1Data};
use crate::error::{Error, Result};
use crate::graded_geometry::{Chart, VectorField};
use crate::symbolic::{rat, ratio, Monomial, Poly};

/// Structure functions of the anchor `♯²: E² → T²M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Anchor2 {
    /// Base dimension.
    pub n: usize,
    /// Rank of `A`.
    pub r: usize,
    /// Rank of the core.
    pub m: usize,
    /// `Q^a_i`, indexed `[a][i]`.
    pub q_a_i: Vec<Vec<Poly>>,
    /// `Q^a_{ij}`, indexed `[a][i][j]`.
    pub q_a_ij: Vec<Vec<Vec<Poly>>>,
    /// `Q^a_μ`, indexed `[a][μ]`.
    pub q_a_mu: Vec<Vec<Poly>>,
}

impl Anchor2 {
    /// The anchor blocks of `h`.
    pub fn of(h: &HA2Data) -> Self {
        Anchor2 {
            n: h.n,
            r: h.r,
            m: h.m,
            q_a_i: h.algebroid.anchor.clone(),
            q_a_ij: h.q_a_ij.clone(),
            q_a_mu: h.q_a_mu.clone(),
        }
    }
}

fn mismatch(k: usize, alpha: i32, what: &str) -> Error {
    Error::ShapeMismatch(format!("lift of e{} at weight {alpha}: {what}", k + 1))
}

/// Splits `p` into fiber monomials with base-function coefficients.
fn fiber_terms(p: &Poly, n: usize) -> BTreeMap<Monomial, Poly> {
    p.collect(|v| v >= n)
}

/// Structure functions read off from lift fields `[X_{k,0}, X_{k,-1}, X_{k,-2}]` by coefficient matching.
pub fn ha_from_lifts(anchor: &Anchor2, lifts: &[[VectorField; 3]]) -> Result<HA2Data> {
    let (n, r, m) = (anchor.n, anchor.r, anchor.m);
    if lifts.len() != r {
        return Err(Error::ShapeMismatch(format!("expected {r} lift triples, found {}", lifts.len())));
    }
    let chart = Chart::e2(n, r, m);
    let (y0, z0) = (n, n + r);
    let mut bracket = vec![zeros2(r, r); r];
    let mut b = Order2Blocks::zeros(n, r, m);
    b.q_a_ij = anchor.q_a_ij.clone();
    b.q_a_mu = anchor.q_a_mu.clone();
    for (k, triple) in lifts.iter().enumerate() {
        for (slot, x) in triple.iter().enumerate() {
            if **x.chart() != chart {
                return Err(mismatch(k, -(slot as i32), "field is not on the chart (x, y, z)"));
            }
        }
        let [x0, x1, x2] = triple;
        for a in 0..n {
            if x0.coeff(a) != anchor.q_a_i[a][k] {
                return Err(mismatch(k, 0, "x-coefficient differs from the anchor"));
            }
            if !x1.coeff(a).is_zero() || !x2.coeff(a).is_zero() {
                return Err(mismatch(k, -1, "negative-weight lift moves the base"));
            }
        }
        for i in 0..r {
            for (mono, c) in fiber_terms(&x0.coeff(y0 + i), n) {
                match single_var(&mono) {
                    Some(j) if (y0..z0).contains(&j) => bracket[i][j - y0][k] = c,
                    _ => return Err(mismatch(k, 0, "y-coefficient is not linear in y")),
                }
            }
            let expected = if i == k { Poly::one() } else { Poly::zero() };
            if x1.coeff(y0 + i) != expected {
                return Err(mismatch(k, -1, "missing or extra ∂y terms"));
            }
            if !x2.coeff(y0 + i).is_zero() {
                return Err(mismatch(k, -2, "weight -2 lift has a ∂y term"));
            }
        }
        for mu in 0..m {
            for (mono, c) in fiber_terms(&x0.coeff(z0 + mu), n) {
                let pairs: Vec<(usize, u32)> = mono.iter().collect();
                match pairs.as_slice() {
                    [(v, 1)] if *v >= z0 => b.q_mu_nui[mu][v - z0][k] = c,
                    [(v, 2)] if (y0..z0).contains(v) => b.q_mu_ijk[mu][v - y0][v - y0][k] = c.scale(&rat(2)),
                    [(u, 1), (v, 1)] if (y0..z0).contains(u) && (y0..z0).contains(v) => {
                        b.q_mu_ijk[mu][u - y0][v - y0][k] = c.clone();
                        b.q_mu_ijk[mu][v - y0][u - y0][k] = c;
                    }
                    _ => return Err(mismatch(k, 0, "z-coefficient is not of the form Q z + ½ Q y y")),
                }
            }
            for (mono, c) in fiber_terms(&x1.coeff(z0 + mu), n) {
                match single_var(&mono) {
                    Some(i) if (y0..z0).contains(&i) => b.q_mu_ij[mu][i - y0][k] = c,
                    _ => return Err(mismatch(k, -1, "z-coefficient is not linear in y")),
                }
            }
            let c2 = x2.coeff(z0 + mu);
            if !c2.only_uses(|v| v < n) {
                return Err(mismatch(k, -2, "z-coefficient depends on fiber coordinates"));
            }
            b.q_mu_i[mu][k] = c2.scale(&ratio(1, 2));
        }
    }
    let alg = Algebroid1Data::new(n, r, anchor.q_a_i.clone(), bracket)?;
    HA2Data::new(alg, m, b)
}

fn single_var(mono: &Monomial) -> Option<usize> {
    let pairs: Vec<(usize, u32)> = mono.iter().collect();
    match pairs.as_slice() {
        [(v, 1)] => Some(*v),
        _ => None,
    }
}

/// The same algebroid in adapted coordinates `w^μ = z^μ - ½ Q^μ_{(ij)} y^i y^j`.
pub fn to_adapted(h: &HA2Data) -> HA2Data {
    if h.is_adapted() {
        return h.clone();
    }
    let sym: Vec<Vec<Vec<Poly>>> = (0..h.m)
        .map(|mu| (0..h.r).map(|i| (0..h.r).map(|j| h.q_mu_sym(mu, i, j)).collect()).collect())
        .collect();
    shift_core(h, &sym).expect("the symmetric part has the right shape")
}

/// The same algebroid in the coordinates `w^μ = z^μ - ½ S^μ_{ij}(x) y^i y^j` for a symmetric `S`.
pub fn shift_core(h: &HA2Data, s: &[Vec<Vec<Poly>>]) -> Result<HA2Data> {
    let (n, r, m) = (h.n, h.r, h.m);
    check_shape3("S", s, m, r, r)?;
    check_base_only("S", n, s.iter().flatten().flatten())?;
    if (0..m).any(|mu| (0..r).any(|i| (0..r).any(|j| s[mu][i][j] != s[mu][j][i]))) {
        return Err(Error::InvalidData("S must be symmetric in its lower indices".into()));
    }
    let y = |i: usize| Poly::var(h.y(i));
    let half_s: Vec<Poly> = (0..m)
        .map(|mu| {
            let mut acc = Poly::zero();
            for i in 0..r {
                for j in 0..r {
                    acc += &s[mu][i][j] * &(y(i) * y(j));
                }
            }
            acc.scale(&ratio(1, 2))
        })
        .collect();
    let back: BTreeMap<usize, Poly> = (0..m)
        .map(|mu| (h.z(mu), Poly::var(h.z(mu)) + &half_s[mu]))
        .collect();
    let lf = Lifter::new(h);
    let lifts: Vec<[VectorField; 3]> = (0..r)
        .map(|k| {
            lf.frame_lifts(k).clone().map(|x| {
                let coeffs = (0..h.chart.len()).map(|c| {
                    let mut p = x.coeff(c);
                    if c >= n + r {
                        p -= x.apply(&half_s[c - n - r]);
                    }
                    (c, p.subst(&back))
                });
                VectorField::from_coeffs(&h.chart, coeffs.collect::<Vec<_>>())
            })
        })
        .collect();
    let mut anchor = Anchor2::of(h);
    for a in 0..n {
        for i in 0..r {
            for j in 0..r {
                let shift: Poly = (0..m).map(|mu| &h.q_a_mu[a][mu] * &s[mu][i][j]).sum();
                anchor.q_a_ij[a][i][j] += shift;
            }
        }
    }
    ha_from_lifts(&anchor, &lifts)
}
