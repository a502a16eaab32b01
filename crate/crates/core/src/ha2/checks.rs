//! Axiom checks: equation systems, lift brackets and `R²`-relatedness.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::coords::CoordMaps;
use super::lifts::Lifter;
use super::HA2Data;
use crate::algebroid1::Section;
use crate::fixtures::t2m;
use crate::graded_geometry::Chart;
use crate::prolong::prolong2;
use crate::report::{timed, VerificationReport};
use crate::symbolic::{ratio, Poly};

/// The almost Lie equations: `♯²` relates the lifts of `E²` to those of `T²M`.
pub fn check_al2(h: &HA2Data) -> VerificationReport {
    timed("almost Lie equations of an order-two algebroid", |rep| {
        let names = h.chart.names();
        let alg = &h.algebroid;
        let (n, r, m) = (h.n, h.r, h.m);
        let q_mu_sum = |a: usize, f: &dyn Fn(usize) -> Poly| -> Poly {
            (0..m).map(|mu| &h.q_a_mu[a][mu] * &f(mu)).sum()
        };
        for a in 0..n {
            for k in 0..r {
                let res = q_mu_sum(a, &|mu| h.q_mu_i[mu][k].clone()) - h.q_a_i(a, k);
                rep.push_poly("e:QamuQmu_i", &[a, k], &res, names);
            }
        }
        for a in 0..n {
            for i in 0..r {
                for j in i + 1..r {
                    let res = q_mu_sum(a, &|mu| h.q_mu_skew(mu, i, j)) - alg.check_q(a, i, j);
                    rep.push_poly("e:QamuQmu_ij_skew", &[a, i, j], &res, names);
                }
            }
        }
        for a in 0..n {
            for i in 0..r {
                for j in i..r {
                    let res = q_mu_sum(a, &|mu| h.q_mu_sym(mu, i, j)) + &h.q_a_ij[a][i][j] - alg.hat_q(a, i, j);
                    rep.push_poly("e:QamuQmu_ij_symm", &[a, i, j], &res, names);
                }
            }
        }
        rep.absorb(alg.check_al1());
        for a in 0..n {
            for mu in 0..m {
                for i in 0..r {
                    let res = q_mu_sum(a, &|nu| h.q_mu_nui[nu][mu][i].clone()) + h.sharp_frame(i, &h.q_a_mu[a][mu])
                        - h.sharp_c_frame(mu, h.q_a_i(a, i));
                    rep.push_poly("e:QanuQnu_mui", &[a, mu, i], &res, names);
                }
            }
        }
        for a in 0..n {
            for i in 0..r {
                for j in i..r {
                    for k in 0..r {
                        let mut res = q_mu_sum(a, &|mu| h.q_mu_ijk[mu][i][j][k].clone());
                        res += h.sharp_frame(k, &h.q_a_ij[a][i][j]);
                        for l in 0..r {
                            res += &h.q_a_ij[a][l][i] * h.q_k_ij(l, j, k);
                            res += &h.q_a_ij[a][l][j] * h.q_k_ij(l, i, k);
                        }
                        let dq = h.q_a_i(a, k);
                        for b in 0..n {
                            let db = dq.diff(b);
                            if db.is_zero() {
                                continue;
                            }
                            res -= &db * &h.q_a_ij[b][i][j];
                            for c in 0..n {
                                let dbc = db.diff(c);
                                if !dbc.is_zero() {
                                    res -= (&dbc * &(h.q_a_i(b, i) * h.q_a_i(c, j))).scale(&ratio(2, 1));
                                }
                            }
                        }
                        rep.push_poly("e:QamuQmu_ijk", &[a, i, j, k], &res, names);
                    }
                }
            }
        }
    })
}

/// The Lie equations of an almost Lie order-two algebroid.
pub fn check_lie2(h: &HA2Data) -> VerificationReport {
    let al = check_al2(h).passed();
    timed("Lie equations of an order-two algebroid", |rep| {
        if !al {
            rep.warn("the almost Lie equations fail; the Lie equations are checked regardless");
        }
        let names = h.chart.names();
        let (r, m) = (h.r, h.m);
        let cm = CoordMaps::new(h);
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    for mm in 0..r {
                        let term = |i: usize, j: usize, k: usize| -> Poly {
                            let s: Poly = (0..r).map(|l| h.q_k_ij(l, i, j) * h.q_k_ij(mm, l, k)).sum();
                            s - h.sharp_frame(k, h.q_k_ij(mm, i, j))
                        };
                        let res = term(i, j, k) + term(j, k, i) + term(k, i, j);
                        rep.push_poly("e:coord_Jac", &[mm, i, j, k], &res, names);
                    }
                }
            }
        }
        for mu in 0..m {
            for i in 0..r {
                for k in 0..r {
                    let lhs: Poly = (0..m).map(|nu| &h.q_mu_nui[mu][nu][k] * &h.q_mu_i[nu][i]).sum();
                    let rhs: Poly = (0..r).map(|l| &h.q_mu_i[mu][l] * h.q_k_ij(l, i, k)).sum();
                    let res = lhs - rhs - h.sharp_frame(k, &h.q_mu_i[mu][i]);
                    rep.push_poly("e:coord_pa", &[mu, i, k], &res, names);
                }
            }
        }
        for mu in 0..m {
            for i in 0..r {
                for k in i + 1..r {
                    let rhs: Poly = (0..r).map(|j| &h.q_mu_i[mu][j] * h.q_k_ij(j, i, k)).sum();
                    rep.push_poly("e:coord_beta", &[mu, i, k], &(h.q_mu_skew(mu, i, k) - rhs), names);
                }
            }
        }
        for mu in 0..m {
            for nu in 0..m {
                for k in 0..r {
                    for kp in k + 1..r {
                        let mut res = Poly::zero();
                        for j in 0..r {
                            let c = h.q_k_ij(j, k, kp);
                            res += c * &h.q_mu_nui[mu][nu][j];
                            res += &h.sharp_c_frame(nu, c) * &h.q_mu_i[mu][j];
                        }
                        res -= h.sharp_frame(k, &h.q_mu_nui[mu][nu][kp]);
                        res += h.sharp_frame(kp, &h.q_mu_nui[mu][nu][k]);
                        for rho in 0..m {
                            res += &h.q_mu_nui[rho][nu][kp] * &h.q_mu_nui[mu][rho][k];
                            res -= &h.q_mu_nui[rho][nu][k] * &h.q_mu_nui[mu][rho][kp];
                        }
                        rep.push_poly("e:coord_A_on_F", &[mu, nu, k, kp], &res, names);
                    }
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                for k in 0..r {
                    let w = cm.omega(a, b, k);
                    for mu in 0..m {
                        rep.push_poly("e:coord_omega", &[mu, a, b, k], w.get(mu), names);
                    }
                }
            }
        }
    })
}

/// The pairs `(α, β)` of lift weights checked by [`check_lie2_brackets`].
const LIFT_PAIRS: [(i32, i32); 4] = [(0, 0), (-1, 0), (-2, 0), (-1, -1)];

/// `[e_i^{⟨α⟩}, e_j^{⟨β⟩}] = [e_i, e_j]^{⟨α+β⟩}` for `α + β ≥ -2`, and `♯²`-relatedness of
/// every lift to the corresponding lift on `T²M`.
pub fn check_lie2_brackets(h: &HA2Data) -> VerificationReport {
    timed("Lie axioms through brackets of algebroid lifts", |rep| {
        let lf = Lifter::new(h);
        let r = h.r;
        for (alpha, beta) in LIFT_PAIRS {
            let id = format!("r:Lie_axiom[{alpha},{beta}]");
            for i in 0..r {
                let start = if alpha == beta { i + 1 } else { 0 };
                for j in start..r {
                    let lhs = lf
                        .frame(i, alpha)
                        .and_then(|x| x.bracket(lf.frame(j, beta)?))
                        .expect("lifts share the chart");
                    let br = h.algebroid.frame_bracket(i, j);
                    let rhs = lf.lift(&br, alpha + beta).expect("weight is admissible");
                    rep.push_field(&id, &[i, j], &lhs.sub(&rhs).expect("same chart"));
                }
            }
        }
        anchor_relatedness(h, &lf, rep);
    })
}

/// `e_k^{⟨α⟩}((♯²)*g) = (♯²)*((♯e_k)^{⟨α⟩} g)` for the coordinates `g` of `T²M`.
fn anchor_relatedness(h: &HA2Data, lf: &Lifter<'_>, rep: &mut VerificationReport) {
    let n = h.n;
    let tm = t2m(n);
    let tlf = Lifter::new(&tm);
    let mut pull = BTreeMap::new();
    for a in 0..n {
        pull.insert(tm.y(a), lf.xdot(a).clone());
        pull.insert(tm.z(a), lf.xddot(a).clone());
    }
    let names = h.chart.names();
    for alpha in [0, -1, -2] {
        let id = format!("th:HA_axioms_and_lifts[{alpha}]");
        for k in 0..h.r {
            let u = Section((0..n).map(|a| h.q_a_i(a, k).clone()).collect());
            let tl = tlf.lift(&u, alpha).expect("rank n section");
            let el = lf.frame(k, alpha).expect("weight is admissible");
            let res: Vec<Poly> = (0..tm.chart.len())
                .map(|g| {
                    let g_poly = Poly::var(g).subst(&pull);
                    el.apply(&g_poly) - tl.apply(&Poly::var(g)).subst(&pull)
                })
                .collect();
            rep.push_components(&id, &[k], &res, names);
        }
    }
}

/// The map `R²: A^[2] → E²`, `(x, y, ẏ) ↦ (x, y, z = Q^μ_i ẏ^i + ½ Q^μ_{(ij)} y^i y^j)`.
#[derive(Clone, Debug)]
pub struct R2Map {
    /// The chart `(x, y, ẏ)` of `A^[2]`.
    pub source: Arc<Chart>,
    /// The chart `(x, y, z)` of `E²`.
    pub target: Arc<Chart>,
    /// `(R²)*z^μ` on the source chart.
    pub z: Vec<Poly>,
}

impl R2Map {
    /// `(R²)*f` for a function on `E²`.
    pub fn pullback(&self, f: &Poly) -> Poly {
        let off = self.target.len() - self.z.len();
        let bindings: BTreeMap<usize, Poly> = self.z.iter().enumerate().map(|(mu, p)| (off + mu, p.clone())).collect();
        f.subst(&bindings)
    }
}

impl fmt::Display for R2Map {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let off = self.target.len() - self.z.len();
        for (mu, p) in self.z.iter().enumerate() {
            writeln!(f, "{} = {}", self.target.names()[off + mu], p.to_string_with(self.source.names()))?;
        }
        Ok(())
    }
}

/// The chart `(x, y, ẏ)` of `A^[2]`; `ẏ^i` prints as `yd<i>`.
pub fn a2_chart(n: usize, r: usize) -> Chart {
    Chart::blocks(&[("x", n, 0), ("y", r, 1), ("yd", r, 2)], 2)
}

/// Coordinate expression of `R²`.
pub fn r2_map(h: &HA2Data) -> R2Map {
    let (n, r) = (h.n, h.r);
    let source = Arc::new(a2_chart(n, r));
    let y = |i: usize| Poly::var(n + i);
    let yd = |i: usize| Poly::var(n + r + i);
    let z = (0..h.m)
        .map(|mu| {
            let mut acc: Poly = (0..r).map(|i| &h.q_mu_i[mu][i] * &yd(i)).sum();
            for i in 0..r {
                for j in 0..r {
                    let q = h.q_mu_sym(mu, i, j);
                    if !q.is_zero() {
                        acc += (&q * &(y(i) * y(j))).scale(&ratio(1, 2));
                    }
                }
            }
            acc
        })
        .collect();
    R2Map {
        source,
        target: h.chart.clone(),
        z,
    }
}

/// `R²` relates the lifts of `A^[2]` to the lifts of `E²` on every coordinate of `E²`.
pub fn check_r2_morphism(h: &HA2Data) -> VerificationReport {
    let al1 = h.algebroid.check_al1().passed();
    timed("R² relates the algebroid lifts", |rep| {
        if !al1 {
            rep.warn("the order-one anchor is not a bracket morphism; the prolongation lifts are still formed");
        }
        let a2 = prolong2(&h.algebroid);
        let la = Lifter::new(&a2);
        let le = Lifter::new(h);
        let map = r2_map(h);
        let names = a2.chart.names();
        for alpha in [0, -1, -2] {
            let id = format!("e:R-related_VF[{alpha}]");
            for k in 0..h.r {
                let xe = le.frame(k, alpha).expect("weight is admissible");
                let xa = la.frame(k, alpha).expect("weight is admissible");
                let res: Vec<Poly> = (0..h.chart.len())
                    .map(|c| {
                        let c_poly = Poly::var(c);
                        map.pullback(&xe.apply(&c_poly)) - xa.apply(&map.pullback(&c_poly))
                    })
                    .collect();
                rep.push_components(&id, &[k], &res, names);
            }
        }
    })
}
