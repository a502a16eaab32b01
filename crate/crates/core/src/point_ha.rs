//! Order-two algebroids over a point, presented by structure constants.

use crate::algebroid1::Algebroid1Data;
use crate::error::{Error, Result};
use crate::ha2::{check_al2, check_lie2, HA2Data, Order2Blocks};
use crate::report::{timed, VerificationReport};
use crate::symbolic::{rat, Poly, Rational};
use num_traits::Zero;

/// Structure constants `([,], ∂, β, □, ω̄)` of an order-two algebroid over a point.
#[derive(Clone, Debug, PartialEq)]
pub struct PointHAData {
    /// `dim g`.
    pub r: usize,
    /// `dim C`.
    pub m: usize,
    /// `c^k_{ij}`, indexed `[k][i][j]`, skew in `(i, j)`.
    pub bracket: Vec<Vec<Vec<Rational>>>,
    /// `∂`, indexed `[μ][i]`.
    pub pa: Vec<Vec<Rational>>,
    /// `β`, indexed `[μ][i][j]`, skew in `(i, j)`.
    pub beta: Vec<Vec<Vec<Rational>>>,
    /// `□_{e_i} c_ν = box[μ][i][ν] c_μ`.
    pub box_: Vec<Vec<Vec<Rational>>>,
    /// `ω̄_{e_k}(e_i, e_j) = omega_bar[μ][k][i][j] c_μ`, symmetric in `(i, j)`.
    pub omega_bar: Vec<Vec<Vec<Vec<Rational>>>>,
}

fn shape_ok<T>(v: &[Vec<T>], d0: usize, d1: usize) -> bool {
    v.len() == d0 && v.iter().all(|row| row.len() == d1)
}

fn shape3_ok<T>(v: &[Vec<Vec<T>>], d0: usize, d1: usize, d2: usize) -> bool {
    v.len() == d0 && v.iter().all(|p| shape_ok(p, d1, d2))
}

fn zeros3(a: usize, b: usize, c: usize) -> Vec<Vec<Vec<Rational>>> {
    vec![vec![vec![Rational::zero(); c]; b]; a]
}

impl PointHAData {
    /// Validates shapes and symmetries.
    pub fn new(
        r: usize,
        m: usize,
        bracket: Vec<Vec<Vec<Rational>>>,
        pa: Vec<Vec<Rational>>,
        beta: Vec<Vec<Vec<Rational>>>,
        box_: Vec<Vec<Vec<Rational>>>,
        omega_bar: Vec<Vec<Vec<Vec<Rational>>>>,
    ) -> Result<Self> {
        let bad = |what: &str| Err(Error::InvalidData(what.to_string()));
        if !shape3_ok(&bracket, r, r, r) {
            return bad("bracket must have shape r x r x r");
        }
        if !shape_ok(&pa, m, r) {
            return bad("pa must have shape m x r");
        }
        if !shape3_ok(&beta, m, r, r) {
            return bad("beta must have shape m x r x r");
        }
        if !shape3_ok(&box_, m, r, m) {
            return bad("box must have shape m x r x m");
        }
        if omega_bar.len() != m || !omega_bar.iter().all(|p| shape3_ok(p, r, r, r)) {
            return bad("omega_bar must have shape m x r x r x r");
        }
        for i in 0..r {
            for j in 0..r {
                if (0..r).any(|k| bracket[k][i][j] != -bracket[k][j][i].clone()) {
                    return bad("bracket must be skew");
                }
                if (0..m).any(|mu| beta[mu][i][j] != -beta[mu][j][i].clone()) {
                    return bad("beta must be skew");
                }
                if (0..m).any(|mu| (0..r).any(|k| omega_bar[mu][k][i][j] != omega_bar[mu][k][j][i])) {
                    return bad("omega_bar must be symmetric in its last two indices");
                }
            }
        }
        Ok(PointHAData {
            r,
            m,
            bracket,
            pa,
            beta,
            box_,
            omega_bar,
        })
    }

    /// All maps zero.
    pub fn zero(r: usize, m: usize) -> Self {
        PointHAData {
            r,
            m,
            bracket: zeros3(r, r, r),
            pa: vec![vec![Rational::zero(); r]; m],
            beta: zeros3(m, r, r),
            box_: zeros3(m, r, m),
            omega_bar: (0..m).map(|_| zeros3(r, r, r)).collect(),
        }
    }

    /// The same data with `β := ∂∘[,]` and `ω̄ := 0`.
    pub fn forced(&self) -> Self {
        let mut out = self.clone();
        for mu in 0..self.m {
            for i in 0..self.r {
                for j in 0..self.r {
                    out.beta[mu][i][j] = (0..self.r)
                        .map(|l| &self.pa[mu][l] * &self.bracket[l][i][j])
                        .fold(Rational::zero(), |a, b| a + b);
                    for k in 0..self.r {
                        out.omega_bar[mu][k][i][j] = Rational::zero();
                    }
                }
            }
        }
        out
    }
}

/// The algebroid over a point with lifts `e^{⟨0⟩} = [·, e] ⊕ □_{-e} ⊕ 2ω̄_e`, `e^{⟨-1⟩}`, `e^{⟨-2⟩} = 2∂(e)`.
pub fn point_to_ha2(p: &PointHAData) -> HA2Data {
    let (r, m) = (p.r, p.m);
    let c = |x: &Rational| Poly::constant(x.clone());
    let bracket = (0..r)
        .map(|k| (0..r).map(|i| (0..r).map(|j| c(&p.bracket[k][i][j])).collect()).collect())
        .collect();
    let alg = Algebroid1Data::new(0, r, Vec::new(), bracket).expect("validated point data");
    let mut b = Order2Blocks::zeros(0, r, m);
    for mu in 0..m {
        for i in 0..r {
            b.q_mu_i[mu][i] = c(&p.pa[mu][i]);
            for j in 0..r {
                b.q_mu_ij[mu][i][j] = c(&p.beta[mu][i][j]);
                for k in 0..r {
                    b.q_mu_ijk[mu][i][j][k] = c(&(&p.omega_bar[mu][k][i][j] * rat(2)));
                }
            }
        }
        for nu in 0..m {
            for i in 0..r {
                b.q_mu_nui[mu][nu][i] = -c(&p.box_[mu][i][nu]);
            }
        }
    }
    HA2Data::new(alg, m, b).expect("validated point data")
}

fn sum(it: impl Iterator<Item = Rational>) -> Rational {
    it.fold(Rational::zero(), |a, b| a + b)
}

fn push_rat(rep: &mut VerificationReport, id: &str, idx: &[usize], v: Rational) {
    let pass = v.is_zero();
    rep.push(id, idx, v.to_string(), pass);
}

/// The five conditions for a Lie algebroid over a point: `g` Lie, `C` a `g`-module,
/// `∂` equivariant, `ω̄ = 0`, `β = ∂∘[,]`.
pub fn check_point_lie(p: &PointHAData) -> VerificationReport {
    timed("Lie algebroid over a point", |rep| {
        let (r, m) = (p.r, p.m);
        let c = &p.bracket;
        let bx = &p.box_;
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    for t in 0..r {
                        let term = |i: usize, j: usize, k: usize| sum((0..r).map(|l| &c[l][i][j] * &c[t][l][k]));
                        push_rat(rep, "point:jacobi", &[t, i, j, k], term(i, j, k) + term(j, k, i) + term(k, i, j));
                    }
                }
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                for mu in 0..m {
                    for nu in 0..m {
                        let lhs = sum((0..r).map(|l| &c[l][i][j] * &bx[mu][l][nu]));
                        let comm = sum((0..m).map(|rho| &bx[mu][i][rho] * &bx[rho][j][nu] - &bx[mu][j][rho] * &bx[rho][i][nu]));
                        push_rat(rep, "point:module", &[mu, nu, i, j], lhs - comm);
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for mu in 0..m {
                    let lhs = sum((0..r).map(|l| &c[l][i][j] * &p.pa[mu][l]));
                    let rhs = sum((0..m).map(|nu| &bx[mu][i][nu] * &p.pa[nu][j]));
                    push_rat(rep, "point:equivariant", &[mu, i, j], lhs - rhs);
                }
            }
        }
        for mu in 0..m {
            for k in 0..r {
                for i in 0..r {
                    for j in i..r {
                        push_rat(rep, "point:omega_bar", &[mu, k, i, j], p.omega_bar[mu][k][i][j].clone());
                    }
                }
            }
        }
        for mu in 0..m {
            for i in 0..r {
                for j in i + 1..r {
                    let forced = sum((0..r).map(|l| &p.pa[mu][l] * &c[l][i][j]));
                    push_rat(rep, "point:beta", &[mu, i, j], &p.beta[mu][i][j] - forced);
                }
            }
        }
    })
}

/// Whether the classification over a point and the generic equations give the same verdict.
pub fn point_equivalence_test(p: &PointHAData) -> bool {
    let h = point_to_ha2(p);
    let generic = check_al2(&h).passed() && check_lie2(&h).passed();
    check_point_lie(p).passed() == generic
}
