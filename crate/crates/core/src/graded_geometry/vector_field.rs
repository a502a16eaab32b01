//! Polynomial vector fields on a chart.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::chart::{Chart, GradedFunctionWeight};
use crate::error::{Error, Result};
use crate::symbolic::{Poly, Rational};

/// Polynomial vector field `Σ X^v ∂_v` on a chart.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    chart: Arc<Chart>,
    coeffs: BTreeMap<usize, Poly>,
}

impl VectorField {
    /// The zero field.
    pub fn zero(chart: &Arc<Chart>) -> Self {
        VectorField {
            chart: chart.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The coordinate field `∂_v`.
    pub fn partial(chart: &Arc<Chart>, v: usize) -> Self {
        VectorField::from_coeffs(chart, [(v, Poly::one())])
    }

    /// Builds a field from `(variable, coefficient)` pairs, summing repeats.
    pub fn from_coeffs(chart: &Arc<Chart>, coeffs: impl IntoIterator<Item = (usize, Poly)>) -> Self {
        let mut out = VectorField::zero(chart);
        for (v, c) in coeffs {
            assert!(v < chart.len(), "variable index {v} outside the chart");
            out.add_at(v, c);
        }
        out
    }

    fn add_at(&mut self, v: usize, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(v).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    /// The chart the field lives on.
    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    /// Coefficient at variable `v`.
    pub fn coeff(&self, v: usize) -> Poly {
        self.coeffs.get(&v).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in variable order.
    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.coeffs.iter().map(|(&v, c)| (v, c))
    }

    /// Exact zero test.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Applies the field as a derivation.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&v, c) in &self.coeffs {
            let d = f.diff(v);
            if !d.is_zero() {
                out += c * &d;
            }
        }
        out
    }

    fn same_chart(&self, other: &VectorField) -> Result<()> {
        if Arc::ptr_eq(&self.chart, &other.chart) || self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    /// Sum of two fields.
    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        self.same_chart(other)?;
        let mut out = self.clone();
        for (&v, c) in &other.coeffs {
            out.add_at(v, c.clone());
        }
        Ok(out)
    }

    /// Difference of two fields.
    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|(&v, c)| (v, -c)).collect(),
        }
    }

    /// Multiplication by a function.
    pub fn mul_fn(&self, f: &Poly) -> VectorField {
        let mut out = VectorField::zero(&self.chart);
        for (&v, c) in &self.coeffs {
            out.add_at(v, c * f);
        }
        out
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, c: &Rational) -> VectorField {
        let mut out = VectorField::zero(&self.chart);
        for (&v, p) in &self.coeffs {
            out.add_at(v, p.scale(c));
        }
        out
    }

    /// Lie bracket `[X, Y]^c = X(Y^c) - Y(X^c)`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        self.same_chart(other)?;
        let mut out = VectorField::zero(&self.chart);
        for (&c, yc) in &other.coeffs {
            out.add_at(c, self.apply(yc));
        }
        for (&c, xc) in &self.coeffs {
            out.add_at(c, -other.apply(xc));
        }
        Ok(out)
    }

    /// The weight `α` with `w(X^v) = w(v) + α` for every nonzero coefficient.
    pub fn weight(&self) -> GradedFunctionWeight {
        let mut acc = GradedFunctionWeight::Zero;
        for (&v, c) in &self.coeffs {
            let w = match self.chart.fn_weight(c) {
                GradedFunctionWeight::Homogeneous(w) => {
                    GradedFunctionWeight::Homogeneous(w - self.chart.weight(v) as i64)
                }
                other => other,
            };
            acc = Chart::merge_weights(acc, w);
        }
        acc
    }

    /// Projection onto a sub-chart whose variables are a subset of this chart's.
    pub fn project(&self, target: &Arc<Chart>) -> Result<VectorField> {
        let map: Vec<Option<usize>> = self
            .chart
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = VectorField::zero(target);
        for (&v, c) in &self.coeffs {
            let Some(tv) = map[v] else { continue };
            if !c.only_uses(|u| map[u].is_some()) {
                return Err(Error::NotProjectable {
                    variable: self.chart.names()[v].clone(),
                });
            }
            out.add_at(tv, c.rename(|u| map[u].expect("checked above")));
        }
        Ok(out)
    }

    /// Moves the field to an equal chart instance.
    pub fn with_chart(&self, chart: &Arc<Chart>) -> Result<VectorField> {
        if *self.chart != **chart {
            return Err(Error::ChartMismatch);
        }
        Ok(VectorField {
            chart: chart.clone(),
            coeffs: self.coeffs.clone(),
        })
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let names = self.chart.names();
        for (k, (&v, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.len() > 1 {
                write!(f, "({})", c.display(names))?;
            } else {
                write!(f, "{}", c.display(names))?;
            }
            write!(f, "*∂{}", names[v])?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

/// Lie bracket of two fields on the same chart.
pub fn vf_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    x.bracket(y)
}

/// Weight of a field on `chart`.
pub fn vf_weight(x: &VectorField, chart: &Chart) -> GradedFunctionWeight {
    if **x.chart() != *chart {
        return GradedFunctionWeight::NotHomogeneous;
    }
    x.weight()
}

/// Projection of `x` onto `target`.
pub fn vf_project(x: &VectorField, target: &Arc<Chart>) -> Result<VectorField> {
    x.project(target)
}

/// Core section `v` as the weight `-k` field `Σ v^μ ∂_{z^μ}`.
pub fn core_to_vf(v: &[Poly], chart: &Arc<Chart>) -> Result<VectorField> {
    let top = chart.vars_of_weight(chart.order());
    if top.len() != v.len() || chart.order() == 0 {
        return Err(Error::BadComponentCount {
            expected: if chart.order() == 0 { 0 } else { top.len() },
            found: v.len(),
        });
    }
    Ok(VectorField::from_coeffs(
        chart,
        top.into_iter().zip(v.iter().cloned()),
    ))
}

/// Inverse of [`core_to_vf`] on weight `-k` fields with base coefficients.
pub fn vf_to_core(x: &VectorField) -> Result<Vec<Poly>> {
    let chart = x.chart();
    let top = chart.vars_of_weight(chart.order());
    for (v, c) in x.coeffs() {
        if chart.weight(v) != chart.order() {
            return Err(Error::ShapeMismatch(format!(
                "field has a component along `{}`, not a core field",
                chart.names()[v]
            )));
        }
        if !c.only_uses(|u| chart.weight(u) == 0) {
            return Err(Error::ShapeMismatch(format!(
                "coefficient at `{}` depends on fiber variables",
                chart.names()[v]
            )));
        }
    }
    Ok(top.into_iter().map(|v| x.coeff(v)).collect())
}
