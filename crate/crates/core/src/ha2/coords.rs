//! Structure maps from coordinate formulas on frames.
//!
//! These are computed directly from the structure functions, independently
//! of any vector-field bracket, and extended to arbitrary sections by the
//! tensor laws where that is needed.

use super::HA2Data;
use crate::algebroid1::Section;
use crate::symbolic::{ratio, Poly};

/// Coordinate evaluation of the structure maps of one algebroid.
pub struct CoordMaps<'a> {
    /// The algebroid.
    pub h: &'a HA2Data,
}

impl<'a> CoordMaps<'a> {
    /// Wraps `h`.
    pub fn new(h: &'a HA2Data) -> Self {
        CoordMaps { h }
    }

    /// `∂(e_i)^μ = Q^μ_i`.
    pub fn pa(&self, i: usize) -> Section {
        Section((0..self.h.m).map(|mu| self.h.q_mu_i[mu][i].clone()).collect())
    }

    /// `(♯^C c_μ)^a = Q^a_μ`.
    pub fn sharp_c(&self, mu: usize) -> Vec<Poly> {
        (0..self.h.n).map(|a| self.h.q_a_mu[a][mu].clone()).collect()
    }

    /// `β(e_i, e_j)^μ = Q^μ_{[ij]}`.
    pub fn beta(&self, i: usize, j: usize) -> Section {
        Section((0..self.h.m).map(|mu| self.h.q_mu_skew(mu, i, j)).collect())
    }

    /// `(□_{e_i} c_ν)^μ = -Q^μ_{νi}`.
    pub fn box_(&self, i: usize, nu: usize) -> Section {
        Section((0..self.h.m).map(|mu| -&self.h.q_mu_nui[mu][nu][i]).collect())
    }

    /// `Q̃^μ_{ijk} = Q^μ_{ij,k} - Q^l_{jk} Q^μ_{li} - Q^l_{ik} Q^μ_{lj} + Q^ν_{ij} Q^μ_{νk} - Q^a_k ∂_a Q^μ_{ij}`.
    pub fn q_tilde(&self, mu: usize, i: usize, j: usize, k: usize) -> Poly {
        let h = self.h;
        let mut acc = h.q_mu_ijk[mu][i][j][k].clone();
        for l in 0..h.r {
            acc -= h.q_k_ij(l, j, k) * &h.q_mu_ij[mu][l][i];
            acc -= h.q_k_ij(l, i, k) * &h.q_mu_ij[mu][l][j];
        }
        for nu in 0..h.m {
            acc += &h.q_mu_ij[nu][i][j] * &h.q_mu_nui[mu][nu][k];
        }
        acc - h.sharp_frame(k, &h.q_mu_ij[mu][i][j])
    }

    /// `δ(e_i, e_j, e_k) = ½ Q̃^μ_{ijk} c_μ`.
    pub fn delta(&self, i: usize, j: usize, k: usize) -> Section {
        Section(
            (0..self.h.m)
                .map(|mu| self.q_tilde(mu, i, j, k).scale(&ratio(1, 2)))
                .collect(),
        )
    }

    /// `ω̄^μ_{ij,k}` with `ω̄_{e_k}(e_i, e_j) = ½ ω̄^μ_{ij,k} c_μ`.
    ///
    /// `ω̄^μ_{ij,k} = Q^μ_{ij,k} + Q^l_{kj} Q^μ_{(il)} + Q^l_{ki} Q^μ_{(jl)} + Q^ν_{(ij)} Q^μ_{νk}
    /// - Q^a_k ∂_a Q^μ_{(ij)} - (Q^a_i ∂_a Q^l_{jk} + Q^a_j ∂_a Q^l_{ik}) Q^μ_l`.
    pub fn omega_bar_coeff(&self, mu: usize, i: usize, j: usize, k: usize) -> Poly {
        let h = self.h;
        let mut acc = h.q_mu_ijk[mu][i][j][k].clone();
        for l in 0..h.r {
            acc += h.q_k_ij(l, k, j) * &h.q_mu_sym(mu, i, l);
            acc += h.q_k_ij(l, k, i) * &h.q_mu_sym(mu, j, l);
            let d = h.sharp_frame(i, h.q_k_ij(l, j, k)) + h.sharp_frame(j, h.q_k_ij(l, i, k));
            acc -= &d * &h.q_mu_i[mu][l];
        }
        for nu in 0..h.m {
            acc += &h.q_mu_sym(nu, i, j) * &h.q_mu_nui[mu][nu][k];
        }
        acc - h.sharp_frame(k, &h.q_mu_sym(mu, i, j))
    }

    /// `ω̄_{e_k}(e_i, e_j)`.
    pub fn omega_sym(&self, k: usize, i: usize, j: usize) -> Section {
        Section(
            (0..self.h.m)
                .map(|mu| self.omega_bar_coeff(mu, i, j, k).scale(&ratio(1, 2)))
                .collect(),
        )
    }

    /// `ω(e_i, e_j, e_k) = ½ Q̃^μ_{ijk} - Q^l_{jk} Q^μ_{[il]} - Q^a_i ∂_a Q^l_{jk} Q^μ_l`.
    pub fn omega(&self, i: usize, j: usize, k: usize) -> Section {
        let h = self.h;
        Section(
            (0..h.m)
                .map(|mu| {
                    let mut acc = self.q_tilde(mu, i, j, k).scale(&ratio(1, 2));
                    for l in 0..h.r {
                        acc -= h.q_k_ij(l, j, k) * &h.q_mu_skew(mu, i, l);
                        acc -= &h.sharp_frame(i, h.q_k_ij(l, j, k)) * &h.q_mu_i[mu][l];
                    }
                    acc
                })
                .collect(),
        )
    }

    /// `ψ(e_i, e_j)^a = ½(Q^μ_{ij} Q^a_μ + Q^a_{ij} - 2 Q^b_i ∂_b Q^a_j)`.
    pub fn psi(&self, i: usize, j: usize) -> Vec<Poly> {
        let h = self.h;
        (0..h.n)
            .map(|a| {
                let mut acc = h.q_a_ij[a][i][j].clone();
                for mu in 0..h.m {
                    acc += &h.q_mu_ij[mu][i][j] * &h.q_a_mu[a][mu];
                }
                acc -= h.sharp_frame(i, h.q_a_i(a, j)).scale(&ratio(2, 1));
                acc.scale(&ratio(1, 2))
            })
            .collect()
    }

    /// `ε(e_i)^a = Q^a_μ Q^μ_i - Q^a_i`.
    pub fn eps(&self, i: usize) -> Vec<Poly> {
        let h = self.h;
        (0..h.n)
            .map(|a| {
                let s: Poly = (0..h.m).map(|mu| &h.q_a_mu[a][mu] * &h.q_mu_i[mu][i]).sum();
                s - h.q_a_i(a, i)
            })
            .collect()
    }

    /// `∂(s)` for an arbitrary section.
    pub fn pa_section(&self, s: &Section) -> Section {
        let h = self.h;
        Section(
            (0..h.m)
                .map(|mu| (0..h.r).map(|i| &h.q_mu_i[mu][i] * s.get(i)).sum())
                .collect(),
        )
    }

    /// `β(s₁, s₂) = s₁^i s₂^j β_{ij} + ∂((♯s₁)(s₂^j) e_j) - ∂((♯s₂)(s₁^i) e_i)`.
    pub fn beta_section(&self, s1: &Section, s2: &Section) -> Section {
        let h = self.h;
        let alg = &h.algebroid;
        let mut out = Section::zero(h.m);
        for i in 0..h.r {
            for j in 0..h.r {
                let f = s1.get(i) * s2.get(j);
                if !f.is_zero() {
                    out = out.add(&self.beta(i, j).mul_fn(&f));
                }
            }
        }
        let d12 = Section((0..h.r).map(|j| alg.sharp_apply(s1, s2.get(j))).collect());
        let d21 = Section((0..h.r).map(|i| alg.sharp_apply(s2, s1.get(i))).collect());
        out.add(&self.pa_section(&d12)).sub(&self.pa_section(&d21))
    }

    /// `(♯^C v)(f)` for an arbitrary core section.
    pub fn sharp_c_apply(&self, v: &Section, f: &Poly) -> Poly {
        (0..self.h.m).map(|mu| v.get(mu) * &self.h.sharp_c_frame(mu, f)).sum()
    }

    /// `□_s v = s^i v^ν □_{e_i} c_ν + s^i (♯e_i)(v^ν) c_ν - (♯^C v)(s^i) ∂ e_i`.
    pub fn box_section(&self, s: &Section, v: &Section) -> Section {
        let h = self.h;
        let mut out = Section::zero(h.m);
        for i in 0..h.r {
            if s.get(i).is_zero() {
                continue;
            }
            for nu in 0..h.m {
                let f = s.get(i) * v.get(nu);
                if !f.is_zero() {
                    out = out.add(&self.box_(i, nu).mul_fn(&f));
                }
            }
            let dv = Section((0..h.m).map(|nu| h.sharp_frame(i, v.get(nu))).collect());
            out = out.add(&dv.mul_fn(s.get(i)));
            out = out.sub(&self.pa(i).mul_fn(&self.sharp_c_apply(v, s.get(i))));
        }
        out
    }
}
