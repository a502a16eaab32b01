//! Two-term representations up to homotopy of a trivialized Lie algebroid.
//!
//! Every matrix is stored `[output][input]`; `A`-connections are coefficient arrays
//! `Θ[i][p][q]` with `∇_{e_i} f_q = Θ[i][p][q] f_p` and the Leibniz rule applied on evaluation.

mod convert;

pub use convert::{adjoint_rep, connection_change, ha_to_ruth, ruth_to_ha};

use crate::algebroid1::{check_base_only, check_shape2, check_shape3, Algebroid1Data, Section};
use crate::error::{Error, Result};
use crate::report::{timed, VerificationReport};
use crate::symbolic::Poly;

/// A linear connection on `A`: `∇_{∂_a} e_i = Γ^j_{ai} e_j`, stored `gamma[j][a][i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    /// Base dimension.
    pub n: usize,
    /// Rank of `A`.
    pub r: usize,
    /// Christoffel functions `Γ^j_{ai}`.
    pub gamma: Vec<Vec<Vec<Poly>>>,
}

impl Connection {
    /// Validates shape and base dependence.
    pub fn new(n: usize, r: usize, gamma: Vec<Vec<Vec<Poly>>>) -> Result<Self> {
        check_shape3("Gamma", &gamma, r, n, r)?;
        check_base_only("Gamma", n, gamma.iter().flatten().flatten())?;
        Ok(Connection { n, r, gamma })
    }

    /// The flat connection of the frame.
    pub fn trivial(n: usize, r: usize) -> Self {
        Connection {
            n,
            r,
            gamma: vec![vec![vec![Poly::zero(); r]; n]; r],
        }
    }

    /// `∇_X s` for a base vector field `X` given by components.
    pub fn apply(&self, x: &[Poly], s: &Section) -> Section {
        Section(
            (0..self.r)
                .map(|j| {
                    let mut acc: Poly = x.iter().enumerate().map(|(a, c)| c * &s.get(j).diff(a)).sum();
                    for (a, xa) in x.iter().enumerate() {
                        if xa.is_zero() {
                            continue;
                        }
                        for i in 0..self.r {
                            let g = &self.gamma[j][a][i];
                            if !g.is_zero() && !s.get(i).is_zero() {
                                acc += &(xa * s.get(i)) * g;
                            }
                        }
                    }
                    acc
                })
                .collect(),
        )
    }
}

/// `∂: F₀ → F₁` with `A`-connections `∇⁰`, `∇¹` and `K ∈ Ω²(A; Hom(F₁, F₀))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ruth2Data {
    /// The Lie algebroid.
    pub algebroid: Algebroid1Data,
    /// Rank of `F₀`.
    pub f0: usize,
    /// Rank of `F₁`.
    pub f1: usize,
    /// `∂`, indexed `[F₁][F₀]`.
    pub partial: Vec<Vec<Poly>>,
    /// `∇⁰`, indexed `[i][F₀ out][F₀ in]`.
    pub conn0: Vec<Vec<Vec<Poly>>>,
    /// `∇¹`, indexed `[i][F₁ out][F₁ in]`.
    pub conn1: Vec<Vec<Vec<Poly>>>,
    /// `K(e_i, e_j)`, indexed `[i][j][F₀ out][F₁ in]`, skew in `(i, j)`.
    pub k: Vec<Vec<Vec<Vec<Poly>>>>,
}

/// `(Φ₀, Φ₁)` from a source representation `E` to a target `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct RuthMorphism {
    /// `Φ₀` in degree zero, indexed `[F₀][E₀]`.
    pub phi0_deg0: Vec<Vec<Poly>>,
    /// `Φ₀` in degree one, indexed `[F₁][E₁]`.
    pub phi0_deg1: Vec<Vec<Poly>>,
    /// `Φ₁(e_i)`, indexed `[i][F₀][E₁]`.
    pub phi1: Vec<Vec<Vec<Poly>>>,
}

pub(crate) fn identity(d: usize) -> Vec<Vec<Poly>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect())
        .collect()
}

pub(crate) fn matmul(a: &[Vec<Poly>], b: &[Vec<Poly>], inner: usize, cols: usize) -> Vec<Vec<Poly>> {
    a.iter()
        .map(|row| (0..cols).map(|c| (0..inner).map(|t| &row[t] * &b[t][c]).sum()).collect())
        .collect()
}

impl RuthMorphism {
    /// The identity morphism of `r`.
    pub fn identity(rep: &Ruth2Data) -> Self {
        RuthMorphism {
            phi0_deg0: identity(rep.f0),
            phi0_deg1: identity(rep.f1),
            phi1: vec![vec![vec![Poly::zero(); rep.f1]; rep.f0]; rep.algebroid.r],
        }
    }

    /// `Φ₁(s)` as a matrix.
    pub fn phi1_at(&self, s: &Section) -> Vec<Vec<Poly>> {
        combine(&self.phi1, s)
    }
}

/// `Σ s^i M_i` for a family of matrices.
fn combine(ms: &[Vec<Vec<Poly>>], s: &Section) -> Vec<Vec<Poly>> {
    let rows = ms.first().map_or(0, Vec::len);
    let cols = ms.first().and_then(|m| m.first()).map_or(0, Vec::len);
    (0..rows)
        .map(|p| (0..cols).map(|q| ms.iter().enumerate().map(|(i, m)| s.get(i) * &m[p][q]).sum()).collect())
        .collect()
}

impl Ruth2Data {
    /// Validates ranks, base dependence and skewness of `K`.
    pub fn new(
        algebroid: Algebroid1Data,
        partial: Vec<Vec<Poly>>,
        conn0: Vec<Vec<Vec<Poly>>>,
        conn1: Vec<Vec<Vec<Poly>>>,
        k: Vec<Vec<Vec<Vec<Poly>>>>,
    ) -> Result<Self> {
        let r = algebroid.r;
        let n = algebroid.n;
        let f1 = partial.len();
        let f0 = conn0.first().map_or_else(|| partial.first().map_or(0, Vec::len), Vec::len);
        check_shape2("partial", &partial, f1, f0)?;
        check_shape3("conn0", &conn0, r, f0, f0)?;
        check_shape3("conn1", &conn1, r, f1, f1)?;
        if k.len() != r || k.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidData(format!("K must have shape {r}x{r}x{f0}x{f1}")));
        }
        for row in &k {
            for m in row {
                check_shape2("K", m, f0, f1)?;
            }
        }
        check_base_only("partial", n, partial.iter().flatten())?;
        check_base_only("conn0", n, conn0.iter().flatten().flatten())?;
        check_base_only("conn1", n, conn1.iter().flatten().flatten())?;
        check_base_only("K", n, k.iter().flatten().flatten().flatten())?;
        for i in 0..r {
            for j in 0..r {
                for p in 0..f0 {
                    for q in 0..f1 {
                        if k[i][j][p][q] != -&k[j][i][p][q] {
                            return Err(Error::InvalidData("K must be skew in its form indices".into()));
                        }
                    }
                }
            }
        }
        Ok(Ruth2Data {
            algebroid,
            f0,
            f1,
            partial,
            conn0,
            conn1,
            k,
        })
    }

    fn conn(&self, level: u8) -> &[Vec<Vec<Poly>>] {
        if level == 0 {
            &self.conn0
        } else {
            &self.conn1
        }
    }

    /// `K(s₁, s₂)` as a matrix.
    pub fn k_at(&self, s1: &Section, s2: &Section) -> Vec<Vec<Poly>> {
        let rows: Vec<Vec<Vec<Poly>>> = self.k.iter().map(|row| combine(row, s2)).collect();
        combine(&rows, s1)
    }

    fn conn_unchecked(&self, level: u8, s: &Section, v: &Section) -> Section {
        let theta = combine(self.conn(level), s);
        let alg = &self.algebroid;
        Section::apply_matrix(&theta, v).add(&Section(v.0.iter().map(|c| alg.sharp_apply(s, c)).collect()))
    }
}

/// `∇^ℓ_s v` with the Leibniz rule in `v`.
pub fn a_connection_apply(rep: &Ruth2Data, level: u8, s: &Section, v: &Section) -> Result<Section> {
    let rank = if level == 0 { rep.f0 } else { rep.f1 };
    if level > 1 {
        return Err(Error::InvalidData(format!("connection level must be 0 or 1, found {level}")));
    }
    for (got, want) in [(s.rank(), rep.algebroid.r), (v.rank(), rank)] {
        if got != want {
            return Err(Error::RankMismatch {
                expected: want,
                found: got,
            });
        }
    }
    Ok(rep.conn_unchecked(level, s, v))
}

fn frames(r: usize) -> Vec<Section> {
    (0..r).map(|k| Section::frame(k, r)).collect()
}

fn names(rep: &Ruth2Data) -> &[String] {
    rep.algebroid.base.names()
}

/// `curv(s₁, s₂) v = ∇_{s₁}∇_{s₂} v - ∇_{s₂}∇_{s₁} v - ∇_{[s₁, s₂]} v`.
fn curvature(rep: &Ruth2Data, level: u8, s1: &Section, s2: &Section, v: &Section) -> Section {
    let c = |s: &Section, w: &Section| rep.conn_unchecked(level, s, w);
    let br = rep.algebroid.bracket_sections(s1, s2).expect("frame ranks");
    c(s1, &c(s2, v)).sub(&c(s2, &c(s1, v))).sub(&c(&br, v))
}

/// The compatibility conditions: `∇¹∘∂ = ∂∘∇⁰`, `curv ∇⁰ = -K∘∂`, `curv ∇¹ = -∂∘K`, `d_∇ K = 0`.
pub fn check_ruth(rep: &Ruth2Data) -> VerificationReport {
    timed("structure equations of a two-term representation up to homotopy", |out| {
        let r = rep.algebroid.r;
        let es = frames(r);
        let f0s = frames(rep.f0);
        let f1s = frames(rep.f1);
        let names = names(rep);
        let pa = |v: &Section| Section::apply_matrix(&rep.partial, v);
        for (i, s) in es.iter().enumerate() {
            for (q, v) in f0s.iter().enumerate() {
                let res = rep.conn_unchecked(1, s, &pa(v)).sub(&pa(&rep.conn_unchecked(0, s, v)));
                out.push_components("i:pa_nabla", &[i, q], &res.0, names);
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let kij = &rep.k[i][j];
                for (q, v) in f0s.iter().enumerate() {
                    let res = curvature(rep, 0, &es[i], &es[j], v).add(&Section::apply_matrix(kij, &pa(v)));
                    out.push_components("i:pa_K[0]", &[i, j, q], &res.0, names);
                }
                for (p, w) in f1s.iter().enumerate() {
                    let res = curvature(rep, 1, &es[i], &es[j], w).add(&pa(&Section::apply_matrix(kij, w)));
                    out.push_components("i:pa_K[1]", &[i, j, p], &res.0, names);
                }
            }
        }
        let alg = &rep.algebroid;
        let kmat = |a: &Section, b: &Section| rep.k_at(a, b);
        let nabla_hom = |s: &Section, a: &Section, b: &Section, w: &Section| {
            let t = kmat(a, b);
            rep.conn_unchecked(0, s, &Section::apply_matrix(&t, w))
                .sub(&Section::apply_matrix(&t, &rep.conn_unchecked(1, s, w)))
        };
        let br = |a: &Section, b: &Section| alg.bracket_sections(a, b).expect("frame ranks");
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    let (s1, s2, s3) = (&es[i], &es[j], &es[k]);
                    for (p, w) in f1s.iter().enumerate() {
                        let kw = |a: &Section, b: &Section| Section::apply_matrix(&kmat(a, b), w);
                        let res = nabla_hom(s1, s2, s3, w)
                            .sub(&nabla_hom(s2, s1, s3, w))
                            .add(&nabla_hom(s3, s1, s2, w))
                            .sub(&kw(&br(s1, s2), s3))
                            .add(&kw(&br(s1, s3), s2))
                            .sub(&kw(&br(s2, s3), s1));
                        out.push_components("i:d_K", &[i, j, k, p], &res.0, names);
                    }
                }
            }
        }
    })
}

/// The morphism equations for `(Φ₀, Φ₁): src → dst`.
pub fn check_morphism(phi: &RuthMorphism, src: &Ruth2Data, dst: &Ruth2Data) -> Result<VerificationReport> {
    let r = src.algebroid.r;
    if dst.algebroid.r != r || dst.algebroid.n != src.algebroid.n {
        return Err(Error::RankMismatch {
            expected: r,
            found: dst.algebroid.r,
        });
    }
    check_shape2("Phi0_deg0", &phi.phi0_deg0, dst.f0, src.f0).map_err(|_| Error::RankMismatch {
        expected: dst.f0,
        found: phi.phi0_deg0.len(),
    })?;
    check_shape2("Phi0_deg1", &phi.phi0_deg1, dst.f1, src.f1).map_err(|_| Error::RankMismatch {
        expected: dst.f1,
        found: phi.phi0_deg1.len(),
    })?;
    check_shape3("Phi1", &phi.phi1, r, dst.f0, src.f1).map_err(|_| Error::RankMismatch {
        expected: r,
        found: phi.phi1.len(),
    })?;
    Ok(timed("morphism of representations up to homotopy", |out| {
        let names = names(src);
        let es = frames(r);
        let mul = |m: &[Vec<Poly>], v: &Section| Section::apply_matrix(m, v);
        let lhs = matmul(&phi.phi0_deg1, &src.partial, src.f1, src.f0);
        let rhs = matmul(&dst.partial, &phi.phi0_deg0, dst.f0, src.f0);
        for p in 0..dst.f1 {
            for q in 0..src.f0 {
                out.push_poly("Phi0:chain_map", &[p, q], &(&lhs[p][q] - &rhs[p][q]), names);
            }
        }
        for (i, s) in es.iter().enumerate() {
            let p1 = phi.phi1_at(s);
            for (q, e) in frames(src.f0).iter().enumerate() {
                let res = mul(&p1, &mul(&src.partial, e))
                    .neg()
                    .sub(&mul(&phi.phi0_deg0, &src.conn_unchecked(0, s, e)))
                    .add(&dst.conn_unchecked(0, s, &mul(&phi.phi0_deg0, e)));
                out.push_components("i:Phi_0", &[i, q], &res.0, names);
            }
            for (q, v) in frames(src.f1).iter().enumerate() {
                let res = mul(&dst.partial, &mul(&p1, v))
                    .neg()
                    .sub(&mul(&phi.phi0_deg1, &src.conn_unchecked(1, s, v)))
                    .add(&dst.conn_unchecked(1, s, &mul(&phi.phi0_deg1, v)));
                out.push_components("i:Phi_1", &[i, q], &res.0, names);
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let (s1, s2) = (&es[i], &es[j]);
                let br = src.algebroid.bracket_sections(s1, s2).expect("frame ranks");
                let (p_1, p_2, p_br) = (phi.phi1_at(s1), phi.phi1_at(s2), phi.phi1_at(&br));
                for (q, v) in frames(src.f1).iter().enumerate() {
                    let res = mul(&dst.k_at(s1, s2), &mul(&phi.phi0_deg1, v))
                        .sub(&mul(&phi.phi0_deg0, &mul(&src.k_at(s1, s2), v)))
                        .sub(&mul(&p_br, v))
                        .sub(&mul(&p_2, &src.conn_unchecked(1, s1, v)))
                        .add(&dst.conn_unchecked(0, s1, &mul(&p_2, v)))
                        .add(&mul(&p_1, &src.conn_unchecked(1, s2, v)))
                        .sub(&dst.conn_unchecked(0, s2, &mul(&p_1, v)));
                    out.push_components("i:Phi_2", &[i, j, q], &res.0, names);
                }
            }
        }
    }))
}
