//! Encodings of the non-positive weight fields over a point.
//!
//! On a chart `(p, y, z)` with parameters `p` of weight 0, `y^i` of weight 1
//! and `z^μ` of weight 2 the weight `≤ 0` fields that do not move `p` split as
//! `End(g) ⊕ End(C) ⊕ Hom(S²g, C)` in weight 0, `g ⊕ Hom(g, C)` in weight -1
//! and `C` in weight -2. Matrices are indexed `[output][input]`.

use std::sync::Arc;

use super::{Chart, VectorField};
use crate::symbolic::{ratio, Poly};

/// Chart layout over a point with `params` constant symbols.
#[derive(Clone, Debug)]
pub struct PointFrame {
    /// The chart `(p1.., y1.., z1..)`.
    pub chart: Arc<Chart>,
    /// Number of parameters.
    pub params: usize,
    /// Dimension of `g`.
    pub r: usize,
    /// Dimension of `C`.
    pub m: usize,
}

impl PointFrame {
    /// Builds the frame with `params` parameters.
    pub fn new(params: usize, r: usize, m: usize) -> Self {
        PointFrame {
            chart: Arc::new(Chart::blocks(&[("p", params, 0), ("y", r, 1), ("z", m, 2)], 2)),
            params,
            r,
            m,
        }
    }

    /// Parameter `k` as a polynomial.
    pub fn param(&self, k: usize) -> Poly {
        Poly::var(k)
    }

    /// Index of `y^i`.
    pub fn y(&self, i: usize) -> usize {
        self.params + i
    }

    /// Index of `z^μ`.
    pub fn z(&self, mu: usize) -> usize {
        self.params + self.r + mu
    }

    /// `φ ∈ End(g)` as `φ^i_j y^j ∂_{y^i}`.
    pub fn endo_g(&self, phi: &[Vec<Poly>]) -> VectorField {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                terms.push((self.y(i), &phi[i][j] * &Poly::var(self.y(j))));
            }
        }
        VectorField::from_coeffs(&self.chart, terms)
    }

    /// `ψ ∈ End(C)` as `ψ^μ_ν z^ν ∂_{z^μ}`.
    pub fn endo_c(&self, psi: &[Vec<Poly>]) -> VectorField {
        let mut terms = Vec::new();
        for mu in 0..self.m {
            for nu in 0..self.m {
                terms.push((self.z(mu), &psi[mu][nu] * &Poly::var(self.z(nu))));
            }
        }
        VectorField::from_coeffs(&self.chart, terms)
    }

    /// `χ ∈ Hom(S²g, C)` with `χ(e_i, e_j) = χ^μ_{ij} c_μ` as `½ χ^μ_{ij} y^i y^j ∂_{z^μ}`.
    pub fn sym2(&self, chi: &[Vec<Vec<Poly>>]) -> VectorField {
        let half = ratio(1, 2);
        let mut terms = Vec::new();
        for mu in 0..self.m {
            for i in 0..self.r {
                for j in 0..self.r {
                    let yy = Poly::var(self.y(i)) * Poly::var(self.y(j));
                    terms.push((self.z(mu), (&chi[mu][i][j] * &yy).scale(&half)));
                }
            }
        }
        VectorField::from_coeffs(&self.chart, terms)
    }

    /// `x ∈ g` as `x^i ∂_{y^i}`.
    pub fn g_elem(&self, x: &[Poly]) -> VectorField {
        VectorField::from_coeffs(&self.chart, (0..self.r).map(|i| (self.y(i), x[i].clone())))
    }

    /// `f ∈ Hom(g, C)` as `f^μ_i y^i ∂_{z^μ}`.
    pub fn hom_gc(&self, f: &[Vec<Poly>]) -> VectorField {
        let mut terms = Vec::new();
        for mu in 0..self.m {
            for i in 0..self.r {
                terms.push((self.z(mu), &f[mu][i] * &Poly::var(self.y(i))));
            }
        }
        VectorField::from_coeffs(&self.chart, terms)
    }

    /// `v ∈ C` as `v^μ ∂_{z^μ}`.
    pub fn c_elem(&self, v: &[Poly]) -> VectorField {
        VectorField::from_coeffs(&self.chart, (0..self.m).map(|mu| (self.z(mu), v[mu].clone())))
    }
}
