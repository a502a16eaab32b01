//! Algebroid lifts `s^{⟨α⟩}` and pullbacks along `♯²`.

use super::HA2Data;
use crate::algebroid1::Section;
use crate::error::{Error, Result};
use crate::graded_geometry::VectorField;
use crate::symbolic::{rat, ratio, Poly};

/// Position of `α ∈ {0, -1, -2}` in lift triples.
fn slot(alpha: i32) -> Result<usize> {
    match alpha {
        0 => Ok(0),
        -1 => Ok(1),
        -2 => Ok(2),
        other => Err(Error::BadAlpha(other)),
    }
}

/// Precomputed frame lifts and pullback data of one algebroid.
pub struct Lifter<'a> {
    /// The algebroid.
    pub h: &'a HA2Data,
    frames: Vec<[VectorField; 3]>,
    xdot: Vec<Poly>,
    xddot: Vec<Poly>,
}

impl<'a> Lifter<'a> {
    /// Computes the frame lifts of `h`.
    pub fn new(h: &'a HA2Data) -> Self {
        let chart = &h.chart;
        let half = ratio(1, 2);
        let y = |i: usize| Poly::var(h.y(i));
        let z = |mu: usize| Poly::var(h.z(mu));
        let mut frames = Vec::with_capacity(h.r);
        for k in 0..h.r {
            let mut c0 = Vec::new();
            for a in 0..h.n {
                c0.push((h.x(a), h.q_a_i(a, k).clone()));
            }
            for i in 0..h.r {
                let coeff: Poly = (0..h.r).map(|j| h.q_k_ij(i, j, k) * &y(j)).sum();
                c0.push((h.y(i), coeff));
            }
            for mu in 0..h.m {
                let mut coeff: Poly = (0..h.m).map(|nu| &h.q_mu_nui[mu][nu][k] * &z(nu)).sum();
                for i in 0..h.r {
                    for j in 0..h.r {
                        let q = &h.q_mu_ijk[mu][i][j][k];
                        if !q.is_zero() {
                            coeff += (q * &(y(i) * y(j))).scale(&half);
                        }
                    }
                }
                c0.push((h.z(mu), coeff));
            }
            let mut c1 = vec![(h.y(k), Poly::one())];
            for mu in 0..h.m {
                let coeff: Poly = (0..h.r).map(|i| &h.q_mu_ij[mu][i][k] * &y(i)).sum();
                c1.push((h.z(mu), coeff));
            }
            let c2 = (0..h.m).map(|mu| (h.z(mu), h.q_mu_i[mu][k].scale(&rat(2))));
            frames.push([
                VectorField::from_coeffs(chart, c0),
                VectorField::from_coeffs(chart, c1),
                VectorField::from_coeffs(chart, c2),
            ]);
        }
        let xdot = (0..h.n)
            .map(|a| (0..h.r).map(|i| h.q_a_i(a, i) * &y(i)).sum())
            .collect();
        let xddot = (0..h.n)
            .map(|a| {
                let mut acc: Poly = (0..h.m).map(|mu| &h.q_a_mu[a][mu] * &z(mu)).sum();
                for i in 0..h.r {
                    for j in 0..h.r {
                        let q = &h.q_a_ij[a][i][j];
                        if !q.is_zero() {
                            acc += (q * &(y(i) * y(j))).scale(&half);
                        }
                    }
                }
                acc
            })
            .collect();
        Lifter {
            h,
            frames,
            xdot,
            xddot,
        }
    }

    /// `e_k^{⟨α⟩}`.
    pub fn frame(&self, k: usize, alpha: i32) -> Result<&VectorField> {
        Ok(&self.frames[k][slot(alpha)?])
    }

    /// All three lifts of `e_k`, ordered `α = 0, -1, -2`.
    pub fn frame_lifts(&self, k: usize) -> &[VectorField; 3] {
        &self.frames[k]
    }

    /// `ẋ^a` pulled back along `♯²`: `Q^a_i y^i`.
    pub fn xdot(&self, a: usize) -> &Poly {
        &self.xdot[a]
    }

    /// `ẍ^a` pulled back along `♯²`: `Q^a_μ z^μ + ½ Q^a_{ij} y^i y^j`.
    pub fn xddot(&self, a: usize) -> &Poly {
        &self.xddot[a]
    }

    /// `(f, (♯)*ḟ, (♯²)*f̈)` for a base function `f`.
    pub fn pullback(&self, f: &Poly) -> (Poly, Poly, Poly) {
        let n = self.h.n;
        let grads: Vec<Poly> = (0..n).map(|a| f.diff(a)).collect();
        let mut fdot = Poly::zero();
        let mut fddot = Poly::zero();
        for a in 0..n {
            if grads[a].is_zero() {
                continue;
            }
            fdot += &grads[a] * &self.xdot[a];
            fddot += &grads[a] * &self.xddot[a];
            for b in 0..n {
                let d2 = grads[a].diff(b);
                if !d2.is_zero() {
                    fddot += &d2 * &(&self.xdot[a] * &self.xdot[b]);
                }
            }
        }
        (f.clone(), fdot, fddot)
    }

    /// Lifts of `f·s` from the lifts `[s⁰, s⁻¹, s⁻²]` of `s`.
    pub fn scaled_lifts(&self, f: &Poly, lifts: &[VectorField; 3]) -> [VectorField; 3] {
        let (_, fdot, fddot) = self.pullback(f);
        let l2 = lifts[2].mul_fn(f);
        let l1 = lifts[1].mul_fn(f).add(&lifts[2].mul_fn(&fdot)).expect("same chart");
        let l0 = lifts[0]
            .mul_fn(f)
            .add(&lifts[1].mul_fn(&fdot))
            .and_then(|v| v.add(&lifts[2].mul_fn(&fddot.scale(&ratio(1, 2)))))
            .expect("same chart");
        [l0, l1, l2]
    }

    fn rank_check(&self, s: &Section) -> Result<()> {
        if s.rank() != self.h.r {
            return Err(Error::RankMismatch {
                expected: self.h.r,
                found: s.rank(),
            });
        }
        Ok(())
    }

    /// All three lifts of `s`, assembled from the frame lifts.
    pub fn lifts(&self, s: &Section) -> Result<[VectorField; 3]> {
        self.rank_check(s)?;
        let zero = VectorField::zero(&self.h.chart);
        let mut acc = [zero.clone(), zero.clone(), zero];
        for (k, f) in s.components().iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let part = self.scaled_lifts(f, &self.frames[k]);
            for (a, p) in acc.iter_mut().zip(part.iter()) {
                *a = a.add(p)?;
            }
        }
        Ok(acc)
    }

    /// `s^{⟨α⟩}`.
    pub fn lift(&self, s: &Section, alpha: i32) -> Result<VectorField> {
        let k = slot(alpha)?;
        Ok(self.lifts(s)?[k].clone())
    }

    /// `(f·s)^{⟨α⟩}` from the lifts of `s` by the Leibniz expansion.
    pub fn lift_product(&self, f: &Poly, s: &Section, alpha: i32) -> Result<VectorField> {
        let k = slot(alpha)?;
        let base = self.lifts(s)?;
        Ok(self.scaled_lifts(f, &base)[k].clone())
    }
}

/// `s^{⟨α⟩}` for `α ∈ {0, -1, -2}`.
pub fn lift(h: &HA2Data, s: &Section, alpha: i32) -> Result<VectorField> {
    slot(alpha)?;
    Lifter::new(h).lift(s, alpha)
}

/// `(f, (♯)*ḟ, (♯²)*f̈)` on the chart of `h`.
pub fn anchor2_pullback(h: &HA2Data, f: &Poly) -> (Poly, Poly, Poly) {
    Lifter::new(h).pullback(f)
}
