//! Order-one skew algebroids presented by structure functions in a fixed frame.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded_geometry::{Chart, VectorField};
use crate::report::{timed, VerificationReport};
use crate::symbolic::Poly;

/// Section of a trivialized bundle: one polynomial per frame element.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Section(pub Vec<Poly>);

impl Section {
    /// The zero section of rank `r`.
    pub fn zero(r: usize) -> Self {
        Section(vec![Poly::zero(); r])
    }

    /// Frame element `e_k` of rank `r`.
    pub fn frame(k: usize, r: usize) -> Self {
        let mut s = Section::zero(r);
        s.0[k] = Poly::one();
        s
    }

    /// Number of components.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Component `k`.
    pub fn get(&self, k: usize) -> &Poly {
        &self.0[k]
    }

    /// Components.
    pub fn components(&self) -> &[Poly] {
        &self.0
    }

    /// Exact zero test.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    /// Multiplication by a function.
    pub fn mul_fn(&self, f: &Poly) -> Section {
        Section(self.0.iter().map(|c| c * f).collect())
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Section) -> Section {
        Section(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &Section) -> Section {
        Section(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Negation.
    pub fn neg(&self) -> Section {
        Section(self.0.iter().map(|c| -c).collect())
    }

    /// Applies a matrix `[output][input]` of functions.
    pub fn apply_matrix(matrix: &[Vec<Poly>], s: &Section) -> Section {
        Section(
            matrix
                .iter()
                .map(|row| row.iter().zip(&s.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Sum of `coeffs[k] * e_k`.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        Section(coeffs)
    }

    /// Printed with the given variable names, as `(c1, c2, ...)`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[]))
    }
}

/// Skew algebroid on a trivialized bundle of rank `r` over a chart `x1..xn`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebroid1Data {
    /// Base chart of weight-0 variables.
    pub base: Arc<Chart>,
    /// Base dimension.
    pub n: usize,
    /// Rank of the bundle.
    pub r: usize,
    /// Anchor `♯e_i = Q^a_i ∂_a`, indexed `[a][i]`.
    pub anchor: Vec<Vec<Poly>>,
    /// Bracket `[e_i, e_j] = Q^k_{ij} e_k`, indexed `[k][i][j]`.
    pub bracket: Vec<Vec<Vec<Poly>>>,
}

pub(crate) fn check_shape2(name: &str, a: &[Vec<Poly>], d0: usize, d1: usize) -> Result<()> {
    if a.len() != d0 || a.iter().any(|row| row.len() != d1) {
        return Err(Error::InvalidData(format!("{name} must have shape {d0}x{d1}")));
    }
    Ok(())
}

pub(crate) fn check_shape3(name: &str, a: &[Vec<Vec<Poly>>], d0: usize, d1: usize, d2: usize) -> Result<()> {
    if a.len() != d0 {
        return Err(Error::InvalidData(format!("{name} must have shape {d0}x{d1}x{d2}")));
    }
    for b in a {
        check_shape2(name, b, d1, d2).map_err(|_| {
            Error::InvalidData(format!("{name} must have shape {d0}x{d1}x{d2}"))
        })?;
    }
    Ok(())
}

pub(crate) fn check_base_only<'a>(name: &str, n: usize, polys: impl IntoIterator<Item = &'a Poly>) -> Result<()> {
    if polys.into_iter().all(|p| p.only_uses(|v| v < n)) {
        Ok(())
    } else {
        Err(Error::InvalidData(format!("{name} must depend on base variables only")))
    }
}

impl Algebroid1Data {
    /// Validates shapes, base dependence and skewness.
    pub fn new(n: usize, r: usize, anchor: Vec<Vec<Poly>>, bracket: Vec<Vec<Vec<Poly>>>) -> Result<Self> {
        check_shape2("Q_a_i", &anchor, n, r)?;
        check_shape3("Q_k_ij", &bracket, r, r, r)?;
        check_base_only("Q_a_i", n, anchor.iter().flatten())?;
        check_base_only("Q_k_ij", n, bracket.iter().flatten().flatten())?;
        for (k, plane) in bracket.iter().enumerate() {
            for i in 0..r {
                for j in 0..r {
                    if plane[i][j] != -&plane[j][i] {
                        return Err(Error::InvalidData(format!(
                            "Q_k_ij must be skew in (i, j): fails at k={}, i={}, j={}",
                            k + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(Algebroid1Data {
            base: Arc::new(Chart::base(n)),
            n,
            r,
            anchor,
            bracket,
        })
    }

    fn rank_check(&self, s: &Section) -> Result<()> {
        if s.rank() != self.r {
            return Err(Error::RankMismatch {
                expected: self.r,
                found: s.rank(),
            });
        }
        Ok(())
    }

    /// Components `(♯s)^a` of the anchor of `s`.
    pub fn anchor_components(&self, s: &Section) -> Vec<Poly> {
        (0..self.n)
            .map(|a| self.anchor[a].iter().zip(&s.0).map(|(q, c)| q * c).sum())
            .collect()
    }

    /// `(♯s)(f)` for a function `f` on the base.
    pub fn sharp_apply(&self, s: &Section, f: &Poly) -> Poly {
        self.anchor_components(s)
            .iter()
            .enumerate()
            .map(|(a, c)| c * &f.diff(a))
            .sum()
    }

    /// `(♯e_i)(f) = Q^a_i ∂_a f`.
    pub fn sharp_frame(&self, i: usize, f: &Poly) -> Poly {
        (0..self.n).map(|a| &self.anchor[a][i] * &f.diff(a)).sum()
    }

    /// The anchor of `s` as a vector field on the base.
    pub fn anchor_apply(&self, s: &Section) -> Result<VectorField> {
        self.rank_check(s)?;
        Ok(VectorField::from_coeffs(
            &self.base,
            self.anchor_components(s).into_iter().enumerate(),
        ))
    }

    /// Bracket of two sections by the Leibniz extension of the frame bracket.
    pub fn bracket_sections(&self, s1: &Section, s2: &Section) -> Result<Section> {
        self.rank_check(s1)?;
        self.rank_check(s2)?;
        let mut out = Vec::with_capacity(self.r);
        for k in 0..self.r {
            let mut acc = self.sharp_apply(s1, &s2.0[k]) - self.sharp_apply(s2, &s1.0[k]);
            for i in 0..self.r {
                if s1.0[i].is_zero() {
                    continue;
                }
                for j in 0..self.r {
                    let q = &self.bracket[k][i][j];
                    if !q.is_zero() && !s2.0[j].is_zero() {
                        acc += &(&s1.0[i] * &s2.0[j]) * q;
                    }
                }
            }
            out.push(acc);
        }
        Ok(Section(out))
    }

    /// `[e_i, e_j]`.
    pub fn frame_bracket(&self, i: usize, j: usize) -> Section {
        Section((0..self.r).map(|k| self.bracket[k][i][j].clone()).collect())
    }

    /// `Q̌^a_{ij} = Q^b_i ∂_b Q^a_j - Q^b_j ∂_b Q^a_i`, the anchor bracket `[♯e_i, ♯e_j]^a`.
    pub fn check_q(&self, a: usize, i: usize, j: usize) -> Poly {
        self.sharp_frame(i, &self.anchor[a][j]) - self.sharp_frame(j, &self.anchor[a][i])
    }

    /// `Q̂^a_{ij} = ∂_b Q^a_i Q^b_j + ∂_b Q^a_j Q^b_i`.
    pub fn hat_q(&self, a: usize, i: usize, j: usize) -> Poly {
        self.sharp_frame(j, &self.anchor[a][i]) + self.sharp_frame(i, &self.anchor[a][j])
    }

    /// `Q̂^l_{ij,k} = ∂_a Q^l_{ik} Q^a_j + ∂_a Q^l_{jk} Q^a_i`.
    pub fn hat_ql(&self, l: usize, i: usize, j: usize, k: usize) -> Poly {
        self.sharp_frame(j, &self.bracket[l][i][k]) + self.sharp_frame(i, &self.bracket[l][j][k])
    }

    /// Vanishing of the Jacobiator of the section bracket on frame triples.
    pub fn check_jacobi(&self) -> VerificationReport {
        timed("Jacobi identity of the order-one bracket", |rep| {
            let names = self.base.names();
            let frames: Vec<Section> = (0..self.r).map(|k| Section::frame(k, self.r)).collect();
            let br = |a: &Section, b: &Section| self.bracket_sections(a, b).expect("ranks agree");
            for i in 0..self.r {
                for j in i + 1..self.r {
                    for k in j + 1..self.r {
                        let (ei, ej, ek) = (&frames[i], &frames[j], &frames[k]);
                        let jac = br(&br(ei, ej), ek)
                            .add(&br(&br(ej, ek), ei))
                            .add(&br(&br(ek, ei), ej));
                        for m in 0..self.r {
                            rep.push_poly("e:coord_Jac", &[m, i, j, k], &jac.0[m], names);
                        }
                    }
                }
            }
        })
    }

    /// The anchor is a bracket morphism on frames: `Q^a_k Q^k_{ij} = Q̌^a_{ij}`.
    pub fn check_al1(&self) -> VerificationReport {
        timed("anchor is a bracket morphism", |rep| {
            let names = self.base.names();
            for a in 0..self.n {
                for i in 0..self.r {
                    for j in i + 1..self.r {
                        let lhs: Poly = (0..self.r)
                            .map(|k| &self.anchor[a][k] * &self.bracket[k][i][j])
                            .sum();
                        rep.push_poly("e:QakQk_ij", &[a, i, j], &(lhs - self.check_q(a, i, j)), names);
                    }
                }
            }
        })
    }
}
