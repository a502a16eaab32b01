//! Standard examples: tangent bundles, `so(3)` data and algebroids over a point.

use crate::algebroid1::Algebroid1Data;
use crate::ha2::{zeros2, zeros3, HA2Data, Order2Blocks};
use crate::point_ha::PointHAData;
use crate::symbolic::{rat, Poly, Rational};

/// The Levi-Civita symbol `ε_{ijk}` on `{0, 1, 2}`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn delta2(a: usize, b: usize) -> Vec<Vec<Poly>> {
    (0..a)
        .map(|i| (0..b).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect())
        .collect()
}

/// `TM` over `ℝⁿ` in the coordinate frame: `Q^a_i = δ^a_i`, zero bracket.
pub fn tm(n: usize) -> Algebroid1Data {
    Algebroid1Data::new(n, n, delta2(n, n), zeros3(n, n, n)).expect("well shaped")
}

/// `T²M` over `ℝⁿ`: `Q^a_i = Q^μ_i = Q^a_μ = δ`, all other structure functions zero.
pub fn t2m(n: usize) -> HA2Data {
    let mut b = Order2Blocks::zeros(n, n, n);
    b.q_a_mu = delta2(n, n);
    b.q_mu_i = delta2(n, n);
    HA2Data::new(tm(n), n, b).expect("well shaped")
}

/// `so(3)` acting on `ℝ³`: `♯e_i = ε_{iab} x^b ∂_a`, `[e_i, e_j] = ε_{ijk} e_k`.
pub fn so3_action() -> Algebroid1Data {
    let anchor = (0..3)
        .map(|a| {
            (0..3)
                .map(|i| (0..3).map(|b| Poly::var(b).scale(&rat(levi_civita(i, a, b)))).sum())
                .collect()
        })
        .collect();
    Algebroid1Data::new(3, 3, anchor, so3_constants()).expect("well shaped")
}

fn so3_constants() -> Vec<Vec<Vec<Poly>>> {
    (0..3)
        .map(|k| (0..3).map(|i| (0..3).map(|j| Poly::int(levi_civita(i, j, k))).collect()).collect())
        .collect()
}

/// `Tℝ³` in the frame `e₁ = ∂₁`, `e₂ = ∂₂ + x₁²∂₃`, `e₃ = ∂₃`, so `[e₁, e₂] = 2x₁ e₃`.
pub fn tm_twisted_frame() -> Algebroid1Data {
    let x1 = Poly::var(0);
    let mut anchor = delta2(3, 3);
    anchor[2][1] = &x1 * &x1;
    let mut bracket = zeros3(3, 3, 3);
    bracket[2][0][1] = x1.scale(&rat(2));
    bracket[2][1][0] = x1.scale(&rat(-2));
    Algebroid1Data::new(3, 3, anchor, bracket).expect("well shaped")
}

/// `so(3)` as a Lie algebroid over a point.
pub fn so3_point() -> Algebroid1Data {
    Algebroid1Data::new(0, 3, Vec::new(), so3_constants()).expect("well shaped")
}

fn constants_over_point(entries: &[(usize, usize, usize, i64)]) -> Algebroid1Data {
    let mut c = zeros3(3, 3, 3);
    for &(k, i, j, v) in entries {
        c[k][i][j] = Poly::int(v);
        c[k][j][i] = Poly::int(-v);
    }
    Algebroid1Data::new(0, 3, Vec::new(), c).expect("well shaped")
}

/// `so(3)` constants with one sign flipped: `c³₁₂ = 1`, `c¹₂₃ = 1`, `c²₃₁ = -1`.
///
/// This is `so(2,1)`, so the Jacobi identity still holds.
pub fn flipped_constants() -> Algebroid1Data {
    constants_over_point(&[(2, 0, 1, 1), (0, 1, 2, 1), (1, 2, 0, -1)])
}

/// `[e₁, e₂] = e₃`, `[e₁, e₃] = e₁`: the Jacobiator of `(e₁, e₂, e₃)` is `-e₃`.
pub fn non_jacobi_constants() -> Algebroid1Data {
    constants_over_point(&[(2, 0, 1, 1), (0, 0, 2, 1)])
}

fn q(v: i64) -> Rational {
    rat(v)
}

fn eps3() -> Vec<Vec<Vec<Rational>>> {
    (0..3)
        .map(|k| (0..3).map(|i| (0..3).map(|j| q(levi_civita(i, j, k))).collect()).collect())
        .collect()
}

/// `g = so(3)`, `C = g` with `□ = ad`, `∂ = id`, `β = ∂∘[,]`, `ω̄ = 0`.
pub fn so3_adjoint_point() -> PointHAData {
    let mut p = PointHAData::zero(3, 3);
    let e = eps3();
    p.bracket = e.clone();
    for mu in 0..3 {
        p.pa[mu][mu] = q(1);
        for i in 0..3 {
            for nu in 0..3 {
                p.box_[mu][i][nu] = q(levi_civita(i, nu, mu));
            }
        }
    }
    p.beta = e;
    p
}

/// [`so3_adjoint_point`] with one nonzero entry of `ω̄`.
pub fn so3_omega_bar_point() -> PointHAData {
    let mut p = so3_adjoint_point();
    p.omega_bar[0][0][0][0] = q(1);
    p
}

/// [`so3_adjoint_point`] with `β = 0`.
pub fn so3_beta_zero_point() -> PointHAData {
    let mut p = so3_adjoint_point();
    p.beta = vec![vec![vec![q(0); 3]; 3]; 3];
    p
}

/// `so(3)` with `C = g` as the trivial module and `∂ = id`, `β = ∂∘[,]`: `∂` is not equivariant.
pub fn so3_trivial_module_point() -> PointHAData {
    let mut p = so3_adjoint_point();
    p.box_ = vec![vec![vec![q(0); 3]; 3]; 3];
    p
}

/// Abelian `g` of rank two acting on `C = ℝ²` by non-commuting matrices, `∂ = 0`.
pub fn abelian_non_module_point() -> PointHAData {
    let mut p = PointHAData::zero(2, 2);
    p.box_[0][0][1] = q(1);
    p.box_[1][1][0] = q(1);
    p
}

/// The constants of [`non_jacobi_constants`] with a zero core.
pub fn non_jacobi_point() -> PointHAData {
    let mut p = PointHAData::zero(3, 0);
    for (k, i, j, v) in [(2, 0, 1, 1), (0, 0, 2, 1)] {
        p.bracket[k][i][j] = q(v);
        p.bracket[k][j][i] = q(-v);
    }
    p
}

/// Abelian `g` of rank two, `C = ℝ`, `∂ = 0`, `β ≠ 0`: not Lie.
pub fn abelian_beta_point() -> PointHAData {
    let mut p = PointHAData::zero(2, 1);
    p.beta[0][0][1] = q(1);
    p.beta[0][1][0] = q(-1);
    p
}

/// `T²M` with `Q^a_μ` set to zero.
pub fn t2m_without_core_anchor(n: usize) -> HA2Data {
    let h = t2m(n);
    let mut b = h.blocks();
    b.q_a_mu = zeros2(n, n);
    HA2Data::new(h.algebroid.clone(), n, b).expect("well shaped")
}

/// `T²M` over `ℝ²` with `Q^μ_{12} = Q^μ_{21} = c` for every `μ`.
pub fn t2m_symmetric_q(c: i64) -> HA2Data {
    let h = t2m(2);
    let mut b = h.blocks();
    for mu in 0..2 {
        b.q_mu_ij[mu][0][1] = Poly::int(c);
        b.q_mu_ij[mu][1][0] = Poly::int(c);
    }
    HA2Data::new(h.algebroid.clone(), 2, b).expect("well shaped")
}
