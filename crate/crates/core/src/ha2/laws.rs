//! Tensor laws of the structure maps and their almost Lie and Lie consequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lifts::Lifter;
use super::HA2Data;
use crate::algebroid1::Section;
use crate::random::random_poly;
use crate::report::{timed, VerificationReport};
use crate::symbolic::{ratio, Poly};

fn sub_all(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `[X, Y]` for base vector fields given by components.
fn base_bracket(x: &[Poly], y: &[Poly]) -> Vec<Poly> {
    let apply = |v: &[Poly], f: &Poly| -> Poly { v.iter().enumerate().map(|(a, c)| c * &f.diff(a)).sum() };
    (0..x.len()).map(|a| apply(x, &y[a]) - apply(y, &x[a])).collect()
}

/// Every tensor law on frame sections with `trials` pseudo-random functions `f` per law.
pub fn tensor_law_suite(h: &HA2Data, trials: usize, seed: u64) -> VerificationReport {
    timed("tensor laws of the structure maps", |rep| {
        let (n, r, m) = (h.n, h.r, h.m);
        if r == 0 {
            return;
        }
        let names = h.chart.names();
        let lf = Lifter::new(h);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = |k: usize| Section::frame(k, r);
        type Law = fn(&LawCtx<'_>) -> Vec<Poly>;
        let laws: [(&str, Law, bool); 9] = [
            ("Eq_beta", law_beta, false),
            ("Eq_box1", law_box1, true),
            ("Eq_box2", law_box2, true),
            ("Eq_omega_bar1", law_omega_bar1, false),
            ("Eq_omega_bar2", law_omega_bar2, false),
            ("Eq_delta1", law_delta1, false),
            ("Eq_delta2", law_delta2, false),
            ("Eq_delta3", law_delta3, false),
            ("Eq_psi", law_psi, false),
        ];
        for (id, law, needs_core) in laws {
            if needs_core && m == 0 {
                continue;
            }
            for t in 0..trials {
                let f = random_poly(&mut rng, n, 2, 3);
                let (i, j, k) = (rng.gen_range(0..r), rng.gen_range(0..r), rng.gen_range(0..r));
                let nu = if m > 0 { rng.gen_range(0..m) } else { 0 };
                let ctx = LawCtx {
                    lf: &lf,
                    f,
                    s1: e(i),
                    s2: e(j),
                    s: e(k),
                    v: if m > 0 { Section::frame(nu, m) } else { Section::zero(0) },
                };
                let res = law(&ctx);
                let idx: Vec<usize> = if needs_core { vec![t, k, nu] } else { vec![t, i, j, k] };
                rep.push_components(id, &idx, &res, names);
            }
        }
    })
}

/// Inputs of one tensor-law instance.
struct LawCtx<'a> {
    lf: &'a Lifter<'a>,
    f: Poly,
    s1: Section,
    s2: Section,
    s: Section,
    v: Section,
}

const OK: &str = "structure maps are defined on sections of matching rank";

impl LawCtx<'_> {
    fn sh(&self, s: &Section, f: &Poly) -> Poly {
        self.lf.h.algebroid.sharp_apply(s, f)
    }

    fn br(&self, a: &Section, b: &Section) -> Section {
        self.lf.bracket(a, b).expect(OK)
    }

    fn pa(&self, s: &Section) -> Section {
        self.lf.pa(s).expect(OK)
    }

    fn fs(&self, s: &Section) -> Section {
        s.mul_fn(&self.f)
    }

    fn psi_f(&self, a: &Section, b: &Section) -> Poly {
        self.lf.psi_apply(a, b, &self.f).expect(OK)
    }
}

/// `β(s₁, f s₂) = f β(s₁, s₂) + (♯s₁)(f) ∂(s₂)`.
fn law_beta(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.beta(&c.s1, &c.fs(&c.s2)).expect(OK);
    let rhs = c.lf.beta(&c.s1, &c.s2).expect(OK).mul_fn(&c.f).add(&c.pa(&c.s2).mul_fn(&c.sh(&c.s1, &c.f)));
    lhs.sub(&rhs).0
}

/// `□_{fs} v = f □_s v - (♯^C v)(f) ∂(s)`.
fn law_box1(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.box_(&c.fs(&c.s), &c.v).expect(OK);
    let scv = c.lf.sharp_c_apply(&c.v, &c.f).expect(OK);
    let rhs = c.lf.box_(&c.s, &c.v).expect(OK).mul_fn(&c.f).sub(&c.pa(&c.s).mul_fn(&scv));
    lhs.sub(&rhs).0
}

/// `□_s (f v) = f □_s v + (♯s)(f) v`.
fn law_box2(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.box_(&c.s, &c.v.mul_fn(&c.f)).expect(OK);
    let rhs = c.lf.box_(&c.s, &c.v).expect(OK).mul_fn(&c.f).add(&c.v.mul_fn(&c.sh(&c.s, &c.f)));
    lhs.sub(&rhs).0
}

/// `ω̄_s(f s₁, s₂) = f ω̄_s(s₁, s₂) - ¼ (♯s₂)(f) ε₀(s, s₁) + ½ (♯[s, s₂] - [♯s, ♯s₂])(f) ∂(s₁)`.
fn law_omega_bar1(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.omega_sym(&c.s, &c.fs(&c.s1), &c.s2).expect(OK);
    let sh_br = c.sh(&c.br(&c.s, &c.s2), &c.f);
    let comm = c.sh(&c.s, &c.sh(&c.s2, &c.f)) - c.sh(&c.s2, &c.sh(&c.s, &c.f));
    let rhs = c
        .lf
        .omega_sym(&c.s, &c.s1, &c.s2)
        .expect(OK)
        .mul_fn(&c.f)
        .sub(&c.lf.eps_k(0, &c.s, &c.s1).expect(OK).mul_fn(&c.sh(&c.s2, &c.f).scale(&ratio(1, 4))))
        .add(&c.pa(&c.s1).mul_fn(&(sh_br - comm).scale(&ratio(1, 2))));
    lhs.sub(&rhs).0
}

/// `ω̄_{fs}(s₁, s₂) = f ω̄_s(s₁, s₂) + ¼ ((♯s₂)(f) ε₁(s₁, s) + (♯s₁)(f) ε₁(s₂, s)) + ψ̄(s₁, s₂)(f) ∂(s)`
/// with `ψ̄` the symmetrization of `ψ`.
fn law_omega_bar2(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.omega_sym(&c.fs(&c.s), &c.s1, &c.s2).expect(OK);
    let e1 = |a: &Section| c.lf.eps_k(1, a, &c.s).expect(OK);
    let psi_bar = (c.psi_f(&c.s1, &c.s2) + c.psi_f(&c.s2, &c.s1)).scale(&ratio(1, 2));
    let rhs = c
        .lf
        .omega_sym(&c.s, &c.s1, &c.s2)
        .expect(OK)
        .mul_fn(&c.f)
        .add(
            &e1(&c.s1)
                .mul_fn(&c.sh(&c.s2, &c.f))
                .add(&e1(&c.s2).mul_fn(&c.sh(&c.s1, &c.f)))
                .mul_fn(&Poly::constant(ratio(1, 4))),
        )
        .add(&c.pa(&c.s).mul_fn(&psi_bar));
    lhs.sub(&rhs).0
}

/// `δ(f s₁, s₂, s) = f δ(s₁, s₂, s) + (♯[s, s₂])(f) ∂(s₁)`.
fn law_delta1(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.delta(&c.fs(&c.s1), &c.s2, &c.s).expect(OK);
    let rhs = c
        .lf
        .delta(&c.s1, &c.s2, &c.s)
        .expect(OK)
        .mul_fn(&c.f)
        .add(&c.pa(&c.s1).mul_fn(&c.sh(&c.br(&c.s, &c.s2), &c.f)));
    lhs.sub(&rhs).0
}

/// `δ(s₁, f s₂, s) = f δ(s₁, s₂, s) - (♯s)(f) β(s₁, s₂) - (♯s₁)(f) □_s ∂(s₂) - (♯[s₁, s] + ♯s ∘ ♯s₁)(f) ∂(s₂)`.
fn law_delta2(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.delta(&c.s1, &c.fs(&c.s2), &c.s).expect(OK);
    let pa2 = c.pa(&c.s2);
    let coeff = c.sh(&c.br(&c.s1, &c.s), &c.f) + c.sh(&c.s, &c.sh(&c.s1, &c.f));
    let rhs = c
        .lf
        .delta(&c.s1, &c.s2, &c.s)
        .expect(OK)
        .mul_fn(&c.f)
        .sub(&c.lf.beta(&c.s1, &c.s2).expect(OK).mul_fn(&c.sh(&c.s, &c.f)))
        .sub(&c.lf.box_(&c.s, &pa2).expect(OK).mul_fn(&c.sh(&c.s1, &c.f)))
        .sub(&pa2.mul_fn(&coeff));
    lhs.sub(&rhs).0
}

/// `δ(s₁, s₂, f s) = f δ(s₁, s₂, s) + (♯s₁)(f) β(s₂, s) + (♯s₂)(f) β(s₁, s) + (ψ(s₁, s₂) + ♯s₁ ∘ ♯s₂)(f) ∂(s)`.
fn law_delta3(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.delta(&c.s1, &c.s2, &c.fs(&c.s)).expect(OK);
    let coeff = c.psi_f(&c.s1, &c.s2) + c.sh(&c.s1, &c.sh(&c.s2, &c.f));
    let rhs = c
        .lf
        .delta(&c.s1, &c.s2, &c.s)
        .expect(OK)
        .mul_fn(&c.f)
        .add(&c.lf.beta(&c.s2, &c.s).expect(OK).mul_fn(&c.sh(&c.s1, &c.f)))
        .add(&c.lf.beta(&c.s1, &c.s).expect(OK).mul_fn(&c.sh(&c.s2, &c.f)))
        .add(&c.pa(&c.s).mul_fn(&coeff));
    lhs.sub(&rhs).0
}

/// `ψ(s₁, f s₂) = f ψ(s₁, s₂) + (♯s₁)(f) ε(s₂)`, as vector fields.
fn law_psi(c: &LawCtx<'_>) -> Vec<Poly> {
    let lhs = c.lf.psi(&c.s1, &c.fs(&c.s2)).expect(OK);
    let base = c.lf.psi(&c.s1, &c.s2).expect(OK);
    let eps = c.lf.eps(&c.s2).expect(OK);
    let g = c.sh(&c.s1, &c.f);
    let rhs: Vec<Poly> = base.iter().zip(&eps).map(|(p, e)| p * &c.f + e * &g).collect();
    sub_all(&lhs, &rhs)
}

/// Consequences of the almost Lie axioms on frames.
pub fn al_consequences(h: &HA2Data) -> VerificationReport {
    timed("consequences of the almost Lie axioms", |rep| {
        let (r, m) = (h.r, h.m);
        let names = h.chart.names();
        let lf = Lifter::new(h);
        let alg = &h.algebroid;
        let e = |k: usize| Section::frame(k, r);
        let c = |k: usize| Section::frame(k, m);
        let sharp = |s: &Section| alg.anchor_components(s);
        for i in 0..r {
            rep.push_components("AL:eps", &[i], &lf.eps(&e(i)).expect(OK), names);
        }
        for i in 0..r {
            for j in 0..r {
                rep.push_components("AL:psi", &[i, j], &lf.psi(&e(i), &e(j)).expect(OK), names);
            }
        }
        for i in 0..r {
            for nu in 0..m {
                let lhs = lf.sharp_c(&lf.box_(&e(i), &c(nu)).expect(OK)).expect(OK);
                let rhs = base_bracket(&sharp(&e(i)), &lf.sharp_c(&c(nu)).expect(OK));
                rep.push_components("AL:sharpC_box", &[i, nu], &sub_all(&lhs, &rhs), names);
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let w = lf.omega(&e(i), &e(j), &e(k)).expect(OK);
                    rep.push_components("AL:sharpC_omega", &[i, j, k], &lf.sharp_c(&w).expect(OK), names);
                }
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let lhs = lf.sharp_c(&lf.beta(&e(i), &e(j)).expect(OK)).expect(OK);
                let rhs = sharp(&alg.frame_bracket(i, j));
                rep.push_components("AL:sharpC_beta", &[i, j], &sub_all(&lhs, &rhs), names);
            }
        }
    })
}

/// Consequences of the Lie axioms on frames.
pub fn lie_consequences(h: &HA2Data) -> VerificationReport {
    timed("consequences of the Lie axioms", |rep| {
        let (r, m) = (h.r, h.m);
        let names = h.chart.names();
        let lf = Lifter::new(h);
        let e = |k: usize| Section::frame(k, r);
        let c = |k: usize| Section::frame(k, m);
        for i in 0..r {
            for j in 0..r {
                rep.push_components("Lie:eps0", &[i, j], &lf.eps_k(0, &e(i), &e(j)).expect(OK).0, names);
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                rep.push_components("Lie:eps1", &[i, j], &lf.eps_k(1, &e(i), &e(j)).expect(OK).0, names);
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let w = lf.omega(&e(i), &e(j), &e(k)).expect(OK);
                    rep.push_components("Lie:omega", &[i, j, k], &w.0, names);
                }
            }
        }
        let bx = |s: &Section, v: &Section| lf.box_(s, v).expect(OK);
        for i in 0..r {
            for j in i + 1..r {
                let br = h.algebroid.frame_bracket(i, j);
                for nu in 0..m {
                    let lhs = bx(&br, &c(nu));
                    let rhs = bx(&e(i), &bx(&e(j), &c(nu))).sub(&bx(&e(j), &bx(&e(i), &c(nu))));
                    rep.push_components("Lie:box_curvature", &[i, j, nu], &lhs.sub(&rhs).0, names);
                }
            }
        }
    })
}
