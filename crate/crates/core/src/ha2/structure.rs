//! Structure maps defined through brackets of lifts.
//!
//! Core sections are identified with weight `-2` fields through
//! `c_μ ↦ ∂_{z^μ}`; base vector fields are returned as component lists.

use super::lifts::Lifter;
use crate::algebroid1::Section;
use crate::error::Result;
use crate::graded_geometry::{core_to_vf, vf_to_core, VectorField};
use crate::symbolic::{ratio, Poly};

fn half_core(x: &VectorField) -> Result<Section> {
    Ok(Section(vf_to_core(&x.scale(&ratio(1, 2)))?))
}

impl Lifter<'_> {
    /// The core section `v` as the field `v↑`.
    pub fn core_field(&self, v: &Section) -> Result<VectorField> {
        core_to_vf(v.components(), &self.h.chart)
    }

    /// `[s₁, s₂]`.
    pub fn bracket(&self, s1: &Section, s2: &Section) -> Result<Section> {
        self.h.algebroid.bracket_sections(s1, s2)
    }

    /// `∂(s) = ½ s^{⟨-2⟩}`.
    pub fn pa(&self, s: &Section) -> Result<Section> {
        half_core(&self.lift(s, -2)?)
    }

    /// `(♯^C v)(f) = v↑((♯²)*f̈)`.
    pub fn sharp_c_apply(&self, v: &Section, f: &Poly) -> Result<Poly> {
        let (_, _, fddot) = self.pullback(f);
        Ok(self.core_field(v)?.apply(&fddot))
    }

    /// Components of `♯^C v`.
    pub fn sharp_c(&self, v: &Section) -> Result<Vec<Poly>> {
        (0..self.h.n).map(|a| self.sharp_c_apply(v, &Poly::var(a))).collect()
    }

    /// `β(s₁, s₂) = ½[s₁^{⟨-1⟩}, s₂^{⟨-1⟩}]`.
    pub fn beta(&self, s1: &Section, s2: &Section) -> Result<Section> {
        half_core(&self.lift(s1, -1)?.bracket(&self.lift(s2, -1)?)?)
    }

    /// `□_s v = [s^{⟨0⟩}, v↑]`.
    pub fn box_(&self, s: &Section, v: &Section) -> Result<Section> {
        let x = self.lift(s, 0)?.bracket(&self.core_field(v)?)?;
        Ok(Section(vf_to_core(&x)?))
    }

    /// `δ(s₁, s₂, s) = ½[s₁^{⟨-1⟩}, [s₂^{⟨-1⟩}, s^{⟨0⟩}]]`.
    pub fn delta(&self, s1: &Section, s2: &Section, s: &Section) -> Result<Section> {
        let inner = self.lift(s2, -1)?.bracket(&self.lift(s, 0)?)?;
        half_core(&self.lift(s1, -1)?.bracket(&inner)?)
    }

    /// `ω(s₁, s₂, s) = δ(s₁, s₂, s) - β(s₁, [s₂, s])`.
    pub fn omega(&self, s1: &Section, s2: &Section, s: &Section) -> Result<Section> {
        let d = self.delta(s1, s2, s)?;
        let b = self.beta(s1, &self.bracket(s2, s)?)?;
        Ok(d.sub(&b))
    }

    /// `ω̄_s(s₁, s₂) = ½(ω(s₁, s₂, s) + ω(s₂, s₁, s))`.
    pub fn omega_sym(&self, s: &Section, s1: &Section, s2: &Section) -> Result<Section> {
        let w = self.omega(s1, s2, s)?.add(&self.omega(s2, s1, s)?);
        Ok(Section(w.0.iter().map(|c| c.scale(&ratio(1, 2))).collect()))
    }

    /// `ψ(s₁, s₂)(f) = ½ s₁^{⟨-1⟩} s₂^{⟨-1⟩} (♯²)*f̈ - (♯s₁)(♯s₂)(f)`.
    pub fn psi_apply(&self, s1: &Section, s2: &Section, f: &Poly) -> Result<Poly> {
        let (_, _, fddot) = self.pullback(f);
        let twice = self.lift(s1, -1)?.apply(&self.lift(s2, -1)?.apply(&fddot));
        let alg = &self.h.algebroid;
        Ok(twice.scale(&ratio(1, 2)) - alg.sharp_apply(s1, &alg.sharp_apply(s2, f)))
    }

    /// Components of the vector field `ψ(s₁, s₂)`.
    pub fn psi(&self, s1: &Section, s2: &Section) -> Result<Vec<Poly>> {
        (0..self.h.n).map(|a| self.psi_apply(s1, s2, &Poly::var(a))).collect()
    }

    /// Components of `ε(s) = ♯^C ∂ s - ♯ s`.
    pub fn eps(&self, s: &Section) -> Result<Vec<Poly>> {
        let sc = self.sharp_c(&self.pa(s)?)?;
        let sh = self.h.algebroid.anchor_components(s);
        Ok(sc.iter().zip(&sh).map(|(a, b)| a - b).collect())
    }

    /// `ε_k(s₁, s₂) = [s₁^{⟨-k⟩}, s₂^{⟨-2+k⟩}] - [s₁, s₂]^{⟨-2⟩}` for `k ∈ {0, 1}`, as a core section.
    pub fn eps_k(&self, k: u8, s1: &Section, s2: &Section) -> Result<Section> {
        let (a, b) = if k == 0 { (0, -2) } else { (-1, -1) };
        let x = self
            .lift(s1, a)?
            .bracket(&self.lift(s2, b)?)?
            .sub(&self.lift(&self.bracket(s1, s2)?, -2)?)?;
        Ok(Section(vf_to_core(&x)?))
    }
}

/// `∂(s)`.
pub fn struct_pa(h: &super::HA2Data, s: &Section) -> Result<Section> {
    Lifter::new(h).pa(s)
}

/// Components of `♯^C v`.
pub fn struct_sharp_c(h: &super::HA2Data, v: &Section) -> Result<Vec<Poly>> {
    Lifter::new(h).sharp_c(v)
}

/// `β(s₁, s₂)`.
pub fn struct_beta(h: &super::HA2Data, s1: &Section, s2: &Section) -> Result<Section> {
    Lifter::new(h).beta(s1, s2)
}

/// `□_s v`.
pub fn struct_box(h: &super::HA2Data, s: &Section, v: &Section) -> Result<Section> {
    Lifter::new(h).box_(s, v)
}

/// `δ(s₁, s₂, s)`.
pub fn struct_delta(h: &super::HA2Data, s1: &Section, s2: &Section, s: &Section) -> Result<Section> {
    Lifter::new(h).delta(s1, s2, s)
}

/// `ω(s₁, s₂, s)`.
pub fn struct_omega(h: &super::HA2Data, s1: &Section, s2: &Section, s: &Section) -> Result<Section> {
    Lifter::new(h).omega(s1, s2, s)
}

/// `ω̄_s(s₁, s₂)`.
pub fn struct_omega_sym(h: &super::HA2Data, s: &Section, s1: &Section, s2: &Section) -> Result<Section> {
    Lifter::new(h).omega_sym(s, s1, s2)
}

/// Components of `ψ(s₁, s₂)`.
pub fn struct_psi(h: &super::HA2Data, s1: &Section, s2: &Section) -> Result<Vec<Poly>> {
    Lifter::new(h).psi(s1, s2)
}

/// Components of `ε(s)`.
pub fn struct_eps(h: &super::HA2Data, s: &Section) -> Result<Vec<Poly>> {
    Lifter::new(h).eps(s)
}

/// `ε₀(s₁, s₂)`.
pub fn struct_eps0(h: &super::HA2Data, s1: &Section, s2: &Section) -> Result<Section> {
    Lifter::new(h).eps_k(0, s1, s2)
}

/// `ε₁(s₁, s₂)`.
pub fn struct_eps1(h: &super::HA2Data, s1: &Section, s2: &Section) -> Result<Section> {
    Lifter::new(h).eps_k(1, s1, s2)
}
