//! The adjoint representation and the two directions of the correspondence with order-two algebroids.

use super::{check_morphism, check_ruth, identity, Connection, Ruth2Data, RuthMorphism};
use crate::algebroid1::{Algebroid1Data, Section};
use crate::error::{Error, Result};
use crate::ha2::{zeros2, zeros3, CoordMaps, HA2Data, Order2Blocks};
use crate::symbolic::Poly;

fn check_connection(alg: &Algebroid1Data, nabla: &Connection) -> Result<()> {
    if nabla.r != alg.r {
        return Err(Error::RankMismatch {
            expected: alg.r,
            found: nabla.r,
        });
    }
    if nabla.n != alg.n {
        return Err(Error::RankMismatch {
            expected: alg.n,
            found: nabla.n,
        });
    }
    Ok(())
}

fn column(m: &[Vec<Poly>], p: usize) -> Vec<Poly> {
    m.iter().map(|row| row[p].clone()).collect()
}

/// `K(s₁, s₂)v = ∇_X[s₁,s₂] - [∇_X s₁, s₂] - [s₁, ∇_X s₂] - ∇_{σ(∇_{s₂}v)} s₁ + ∇_{σ(∇_{s₁}v)} s₂`
/// with `X = σ(v)` for an anchor-like map `σ` (`[a][p]`) and an `A`-connection `theta` on its source.
fn basic_curvature(
    alg: &Algebroid1Data,
    nabla: &Connection,
    sigma: &[Vec<Poly>],
    theta: &[Vec<Vec<Poly>>],
    f1: usize,
) -> Vec<Vec<Vec<Vec<Poly>>>> {
    let r = alg.r;
    let mut k = vec![vec![zeros2(r, f1); r]; r];
    let es: Vec<Section> = (0..r).map(|i| Section::frame(i, r)).collect();
    let br = |a: &Section, b: &Section| alg.bracket_sections(a, b).expect("frame ranks");
    let sigma_of = |w: &[Poly]| -> Vec<Poly> {
        sigma
            .iter()
            .map(|row| row.iter().zip(w).map(|(s, c)| s * c).sum())
            .collect()
    };
    for i in 0..r {
        for j in i + 1..r {
            let (s1, s2) = (&es[i], &es[j]);
            for p in 0..f1 {
                let x = column(sigma, p);
                let y1 = sigma_of(&column(&theta[i], p));
                let y2 = sigma_of(&column(&theta[j], p));
                let res = nabla
                    .apply(&x, &br(s1, s2))
                    .sub(&br(&nabla.apply(&x, s1), s2))
                    .sub(&br(s1, &nabla.apply(&x, s2)))
                    .sub(&nabla.apply(&y2, s1))
                    .add(&nabla.apply(&y1, s2));
                for (l, c) in res.0.into_iter().enumerate() {
                    k[j][i][l][p] = -&c;
                    k[i][j][l][p] = c;
                }
            }
        }
    }
    k
}

/// `∇^A_{e_i} e_j = ∇_{♯e_j} e_i + [e_i, e_j]`, indexed `[i][k][j]`.
fn adjoint_a_connection(alg: &Algebroid1Data, nabla: &Connection) -> Vec<Vec<Vec<Poly>>> {
    let (n, r) = (alg.n, alg.r);
    (0..r)
        .map(|i| {
            (0..r)
                .map(|k| {
                    (0..r)
                        .map(|j| {
                            let mut acc = alg.bracket[k][i][j].clone();
                            for a in 0..n {
                                acc += &alg.anchor[a][j] * &nabla.gamma[k][a][i];
                            }
                            acc
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `ad_∇`: `A → TM` with `∂ = ♯`, `∇^A`, `∇^{TM}_s X = ♯(∇_X s) + [♯s, X]` and `K` the basic curvature.
pub fn adjoint_rep(alg: &Algebroid1Data, nabla: &Connection) -> Result<Ruth2Data> {
    check_connection(alg, nabla)?;
    let (n, r) = (alg.n, alg.r);
    let conn0 = adjoint_a_connection(alg, nabla);
    let conn1: Vec<Vec<Vec<Poly>>> = (0..r)
        .map(|i| {
            (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| {
                            let mut acc = -alg.anchor[a][i].diff(b);
                            for k in 0..r {
                                acc += &nabla.gamma[k][b][i] * &alg.anchor[a][k];
                            }
                            acc
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let k = basic_curvature(alg, nabla, &identity(n), &conn1, n);
    Ruth2Data::new(alg.clone(), alg.anchor.clone(), conn0, conn1, k)
}

/// The representation of an order-two algebroid on `∂: A → C` together with the morphism
/// `(id ⊕ ♯^C, 0)` to [`adjoint_rep`].
pub fn ha_to_ruth(h: &HA2Data, nabla: &Connection) -> Result<(Ruth2Data, RuthMorphism)> {
    let alg = &h.algebroid;
    check_connection(alg, nabla)?;
    let (n, r, m) = (h.n, h.r, h.m);
    let cm = CoordMaps::new(h);
    let conn0 = adjoint_a_connection(alg, nabla);
    let partial: Vec<Vec<Poly>> = (0..m).map(|mu| (0..r).map(|i| cm.pa(i).get(mu).clone()).collect()).collect();
    let sharp_c: Vec<Vec<Poly>> = (0..n).map(|a| (0..m).map(|mu| cm.sharp_c(mu)[a].clone()).collect()).collect();
    let mut conn1 = zeros3(r, m, m);
    for (i, block) in conn1.iter_mut().enumerate() {
        for nu in 0..m {
            let x = column(&sharp_c, nu);
            let v = cm.box_(i, nu).add(&Section::apply_matrix(&partial, &nabla.apply(&x, &Section::frame(i, r))));
            for (mu, c) in v.0.into_iter().enumerate() {
                block[mu][nu] = c;
            }
        }
    }
    let k = basic_curvature(alg, nabla, &sharp_c, &conn1, m);
    let rep = Ruth2Data::new(alg.clone(), partial, conn0, conn1, k)?;
    let phi = RuthMorphism {
        phi0_deg0: identity(r),
        phi0_deg1: sharp_c,
        phi1: zeros3(r, r, m),
    };
    Ok((rep, phi))
}

/// The unique Lie algebroid of order two, in adapted coordinates, whose representation is `rep`
/// with anchor morphism `phi` to [`adjoint_rep`].
pub fn ruth_to_ha(rep: &Ruth2Data, phi: &RuthMorphism, nabla: &Connection) -> Result<HA2Data> {
    let alg = &rep.algebroid;
    check_connection(alg, nabla)?;
    let (n, r, m) = (alg.n, alg.r, rep.f1);
    if rep.f0 != r {
        return Err(Error::RankMismatch {
            expected: r,
            found: rep.f0,
        });
    }
    if phi.phi1.iter().flatten().flatten().any(|c| !c.is_zero()) {
        return Err(Error::ShapeViolation("Phi1 must vanish".into()));
    }
    if phi.phi0_deg0 != identity(r) {
        return Err(Error::ShapeViolation("Phi0 must be the identity on A".into()));
    }
    let adj = adjoint_rep(alg, nabla)?;
    let ruth = check_ruth(rep);
    if !ruth.passed() {
        return Err(Error::IncompatibleInput(format!(
            "structure equations fail: {:?}",
            ruth.failed_families()
        )));
    }
    let mor = check_morphism(phi, rep, &adj)?;
    if !mor.passed() {
        return Err(Error::IncompatibleInput(format!(
            "morphism to the adjoint representation fails: {:?}",
            mor.failed_families()
        )));
    }
    let sharp_c = &phi.phi0_deg1;
    let mut b = Order2Blocks::zeros(n, r, m);
    b.q_a_mu = sharp_c.clone();
    b.q_mu_i = rep.partial.clone();
    for a in 0..n {
        for i in 0..r {
            for j in 0..r {
                b.q_a_ij[a][i][j] = alg.hat_q(a, i, j);
            }
        }
    }
    for mu in 0..m {
        for i in 0..r {
            for j in 0..r {
                b.q_mu_ij[mu][i][j] = (0..r).map(|l| &rep.partial[mu][l] * &alg.bracket[l][i][j]).sum();
                for k in 0..r {
                    b.q_mu_ijk[mu][i][j][k] = (0..r).map(|l| &alg.hat_ql(l, i, j, k) * &rep.partial[mu][l]).sum();
                }
            }
        }
    }
    for i in 0..r {
        for nu in 0..m {
            let x = column(sharp_c, nu);
            let bx = Section(column(&rep.conn1[i], nu))
                .sub(&Section::apply_matrix(&rep.partial, &nabla.apply(&x, &Section::frame(i, r))));
            for (mu, c) in bx.0.into_iter().enumerate() {
                b.q_mu_nui[mu][nu][i] = -c;
            }
        }
    }
    HA2Data::new(alg.clone(), m, b)
}

/// `Φ = (id, Φ₁)` with `Φ₁(s)(v) = ∇_{♯^C v}s - ∇̃_{♯^C v}s`, from `ha_to_ruth(h, ∇̃)` to `ha_to_ruth(h, ∇)`.
pub fn connection_change(h: &HA2Data, nabla: &Connection, nabla_tilde: &Connection) -> Result<RuthMorphism> {
    check_connection(&h.algebroid, nabla)?;
    check_connection(&h.algebroid, nabla_tilde)?;
    let (n, r, m) = (h.n, h.r, h.m);
    let cm = CoordMaps::new(h);
    let mut phi1 = zeros3(r, r, m);
    for (i, block) in phi1.iter_mut().enumerate() {
        for nu in 0..m {
            let x = cm.sharp_c(nu);
            for (k, row) in block.iter_mut().enumerate() {
                row[nu] = (0..n).map(|a| &x[a] * &(&nabla.gamma[k][a][i] - &nabla_tilde.gamma[k][a][i])).sum();
            }
        }
    }
    Ok(RuthMorphism {
        phi0_deg0: identity(r),
        phi0_deg1: identity(m),
        phi1,
    })
}
