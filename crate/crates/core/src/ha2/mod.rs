//! Order-two skew higher algebroids presented by structure functions.
//!
//! A chart `(x^a, y^i, z^μ)` of weights `(0, 1, 2)` carries the structure
//! functions of the relation `κ²` and of the anchor `♯²`. Everything else
//! (lifts, structure maps, axiom checks) is computed from them.

mod adapted;
mod checks;
mod coords;
mod laws;
mod lifts;
mod structure;

pub use structure::{
    struct_beta, struct_box, struct_delta, struct_eps, struct_eps0, struct_eps1, struct_omega, struct_omega_sym,
    struct_pa, struct_psi, struct_sharp_c,
};

use std::sync::Arc;

pub use adapted::{ha_from_lifts, shift_core, to_adapted, Anchor2};
pub use checks::{a2_chart, check_al2, check_lie2, check_lie2_brackets, check_r2_morphism, r2_map, R2Map};
pub use coords::CoordMaps;
pub use laws::{al_consequences, lie_consequences, tensor_law_suite};
pub use lifts::{anchor2_pullback, lift, Lifter};

use crate::algebroid1::{check_base_only, check_shape2, check_shape3, Algebroid1Data};
use crate::error::{Error, Result};
use crate::graded_geometry::Chart;
use crate::symbolic::Poly;

/// Structure functions of an order-two skew higher algebroid on one chart.
#[derive(Clone, Debug, PartialEq)]
pub struct HA2Data {
    /// Base dimension.
    pub n: usize,
    /// Rank of `A`.
    pub r: usize,
    /// Rank of the core `C`.
    pub m: usize,
    /// The order-one reduction (`Q^a_i`, `Q^k_{ij}`).
    pub algebroid: Algebroid1Data,
    /// `Q^a_{ij}`, indexed `[a][i][j]`, symmetric in `(i, j)`.
    pub q_a_ij: Vec<Vec<Vec<Poly>>>,
    /// `Q^a_μ`, indexed `[a][μ]`.
    pub q_a_mu: Vec<Vec<Poly>>,
    /// `Q^μ_i`, indexed `[μ][i]`.
    pub q_mu_i: Vec<Vec<Poly>>,
    /// `Q^μ_{ij}`, indexed `[μ][i][j]`.
    pub q_mu_ij: Vec<Vec<Vec<Poly>>>,
    /// `Q^μ_{νi}`, indexed `[μ][ν][i]`.
    pub q_mu_nui: Vec<Vec<Vec<Poly>>>,
    /// `Q^μ_{ij,k}`, indexed `[μ][i][j][k]`, symmetric in `(i, j)`.
    pub q_mu_ijk: Vec<Vec<Vec<Vec<Poly>>>>,
    /// The chart `(x, y, z)`.
    pub chart: Arc<Chart>,
}

/// The structure-function blocks of order two, excluding the order-one part.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Order2Blocks {
    /// `Q^a_{ij}`.
    pub q_a_ij: Vec<Vec<Vec<Poly>>>,
    /// `Q^a_μ`.
    pub q_a_mu: Vec<Vec<Poly>>,
    /// `Q^μ_i`.
    pub q_mu_i: Vec<Vec<Poly>>,
    /// `Q^μ_{ij}`.
    pub q_mu_ij: Vec<Vec<Vec<Poly>>>,
    /// `Q^μ_{νi}`.
    pub q_mu_nui: Vec<Vec<Vec<Poly>>>,
    /// `Q^μ_{ij,k}`.
    pub q_mu_ijk: Vec<Vec<Vec<Vec<Poly>>>>,
}

impl Order2Blocks {
    /// All-zero blocks for the given dimensions.
    pub fn zeros(n: usize, r: usize, m: usize) -> Self {
        Order2Blocks {
            q_a_ij: zeros3(n, r, r),
            q_a_mu: zeros2(n, m),
            q_mu_i: zeros2(m, r),
            q_mu_ij: zeros3(m, r, r),
            q_mu_nui: zeros3(m, m, r),
            q_mu_ijk: (0..m).map(|_| zeros3(r, r, r)).collect(),
        }
    }
}

pub(crate) fn zeros2(a: usize, b: usize) -> Vec<Vec<Poly>> {
    vec![vec![Poly::zero(); b]; a]
}

pub(crate) fn zeros3(a: usize, b: usize, c: usize) -> Vec<Vec<Vec<Poly>>> {
    vec![zeros2(b, c); a]
}

impl HA2Data {
    /// Validates shapes, base dependence and the skew symmetries.
    pub fn new(algebroid: Algebroid1Data, m: usize, blocks: Order2Blocks) -> Result<Self> {
        let (n, r) = (algebroid.n, algebroid.r);
        let b = blocks;
        check_shape3("Q_a_ij", &b.q_a_ij, n, r, r)?;
        check_shape2("Q_a_mu", &b.q_a_mu, n, m)?;
        check_shape2("Q_mu_i", &b.q_mu_i, m, r)?;
        check_shape3("Q_mu_ij", &b.q_mu_ij, m, r, r)?;
        check_shape3("Q_mu_nui", &b.q_mu_nui, m, m, r)?;
        if b.q_mu_ijk.len() != m {
            return Err(Error::InvalidData(format!("Q_mu_ijk must have shape {m}x{r}x{r}x{r}")));
        }
        for plane in &b.q_mu_ijk {
            check_shape3("Q_mu_ijk", plane, r, r, r)?;
        }
        check_base_only("Q_a_ij", n, b.q_a_ij.iter().flatten().flatten())?;
        check_base_only("Q_a_mu", n, b.q_a_mu.iter().flatten())?;
        check_base_only("Q_mu_i", n, b.q_mu_i.iter().flatten())?;
        check_base_only("Q_mu_ij", n, b.q_mu_ij.iter().flatten().flatten())?;
        check_base_only("Q_mu_nui", n, b.q_mu_nui.iter().flatten().flatten())?;
        check_base_only("Q_mu_ijk", n, b.q_mu_ijk.iter().flatten().flatten().flatten())?;
        for a in 0..n {
            for i in 0..r {
                for j in 0..i {
                    if b.q_a_ij[a][i][j] != b.q_a_ij[a][j][i] {
                        return Err(Error::InvalidData(format!(
                            "Q_a_ij must be symmetric in (i, j): fails at a={}, i={}, j={}",
                            a + 1,
                            j + 1,
                            i + 1
                        )));
                    }
                }
            }
        }
        for mu in 0..m {
            for i in 0..r {
                for j in 0..i {
                    for k in 0..r {
                        if b.q_mu_ijk[mu][i][j][k] != b.q_mu_ijk[mu][j][i][k] {
                            return Err(Error::InvalidData(format!(
                                "Q_mu_ijk must be symmetric in (i, j): fails at mu={}, i={}, j={}, k={}",
                                mu + 1,
                                j + 1,
                                i + 1,
                                k + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(HA2Data {
            n,
            r,
            m,
            algebroid,
            q_a_ij: b.q_a_ij,
            q_a_mu: b.q_a_mu,
            q_mu_i: b.q_mu_i,
            q_mu_ij: b.q_mu_ij,
            q_mu_nui: b.q_mu_nui,
            q_mu_ijk: b.q_mu_ijk,
            chart: Arc::new(Chart::e2(n, r, m)),
        })
    }

    /// The order-two blocks as a value.
    pub fn blocks(&self) -> Order2Blocks {
        Order2Blocks {
            q_a_ij: self.q_a_ij.clone(),
            q_a_mu: self.q_a_mu.clone(),
            q_mu_i: self.q_mu_i.clone(),
            q_mu_ij: self.q_mu_ij.clone(),
            q_mu_nui: self.q_mu_nui.clone(),
            q_mu_ijk: self.q_mu_ijk.clone(),
        }
    }

    /// Chart index of `x^a`.
    pub fn x(&self, a: usize) -> usize {
        a
    }

    /// Chart index of `y^i`.
    pub fn y(&self, i: usize) -> usize {
        self.n + i
    }

    /// Chart index of `z^μ`.
    pub fn z(&self, mu: usize) -> usize {
        self.n + self.r + mu
    }

    /// `Q^a_i`.
    pub fn q_a_i(&self, a: usize, i: usize) -> &Poly {
        &self.algebroid.anchor[a][i]
    }

    /// `Q^k_{ij}`.
    pub fn q_k_ij(&self, k: usize, i: usize, j: usize) -> &Poly {
        &self.algebroid.bracket[k][i][j]
    }

    /// `Q^μ_{(ij)} = ½(Q^μ_{ij} + Q^μ_{ji})`.
    pub fn q_mu_sym(&self, mu: usize, i: usize, j: usize) -> Poly {
        (&self.q_mu_ij[mu][i][j] + &self.q_mu_ij[mu][j][i]).scale(&crate::symbolic::ratio(1, 2))
    }

    /// `Q^μ_{[ij]} = ½(Q^μ_{ij} - Q^μ_{ji})`.
    pub fn q_mu_skew(&self, mu: usize, i: usize, j: usize) -> Poly {
        (&self.q_mu_ij[mu][i][j] - &self.q_mu_ij[mu][j][i]).scale(&crate::symbolic::ratio(1, 2))
    }

    /// Whether `Q^μ_{(ij)} = 0` for all indices.
    pub fn is_adapted(&self) -> bool {
        (0..self.m).all(|mu| {
            (0..self.r).all(|i| (0..self.r).all(|j| self.q_mu_sym(mu, i, j).is_zero()))
        })
    }

    /// `(♯e_i)(f)`.
    pub fn sharp_frame(&self, i: usize, f: &Poly) -> Poly {
        self.algebroid.sharp_frame(i, f)
    }

    /// `(♯^C c_μ)(f) = Q^a_μ ∂_a f`.
    pub fn sharp_c_frame(&self, mu: usize, f: &Poly) -> Poly {
        (0..self.n).map(|a| &self.q_a_mu[a][mu] * &f.diff(a)).sum()
    }
}
