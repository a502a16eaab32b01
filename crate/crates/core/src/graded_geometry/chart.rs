//! Graded coordinate charts and weights of functions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbolic::{indexed_names, Poly};

/// Ordered graded coordinate system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart {
    names: Vec<String>,
    weights: Vec<u32>,
    order: u32,
}

/// Weight of a function with respect to the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GradedFunctionWeight {
    /// All monomials share this weight.
    Homogeneous(i64),
    /// The zero function, homogeneous of every weight.
    Zero,
    /// Monomials of different weights occur.
    NotHomogeneous,
}

impl GradedFunctionWeight {
    /// Whether the weight is compatible with `w`.
    pub fn admits(self, w: i64) -> bool {
        match self {
            GradedFunctionWeight::Homogeneous(v) => v == w,
            GradedFunctionWeight::Zero => true,
            GradedFunctionWeight::NotHomogeneous => false,
        }
    }

    fn merge(self, other: GradedFunctionWeight) -> GradedFunctionWeight {
        use GradedFunctionWeight::*;
        match (self, other) {
            (Zero, w) | (w, Zero) => w,
            (Homogeneous(a), Homogeneous(b)) if a == b => Homogeneous(a),
            _ => NotHomogeneous,
        }
    }
}

impl Chart {
    /// Builds a chart from `(name, weight)` pairs; the order is the largest weight.
    pub fn new(vars: Vec<(String, u32)>) -> Result<Chart> {
        let order = vars.iter().map(|(_, w)| *w).max().unwrap_or(0);
        Chart::with_order(vars, order)
    }

    /// Builds a chart with an explicit order, which may exceed every weight present.
    pub fn with_order(vars: Vec<(String, u32)>, order: u32) -> Result<Chart> {
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            if names.contains(&name) {
                return Err(Error::InvalidData(format!("duplicate variable `{name}`")));
            }
            if w > order {
                return Err(Error::InvalidData(format!(
                    "variable `{name}` has weight {w} above the order {order}"
                )));
            }
            names.push(name);
            weights.push(w);
        }
        Ok(Chart {
            names,
            weights,
            order,
        })
    }

    /// Chart made of indexed blocks `(prefix, count, weight)` in the given order.
    pub fn blocks(blocks: &[(&str, usize, u32)], order: u32) -> Chart {
        let vars = blocks
            .iter()
            .flat_map(|&(prefix, count, w)| indexed_names(prefix, count).into_iter().map(move |n| (n, w)))
            .collect();
        Chart::with_order(vars, order).expect("indexed block names are unique")
    }

    /// Base chart `x1..xn`.
    pub fn base(n: usize) -> Chart {
        Chart::blocks(&[("x", n, 0)], 0)
    }

    /// Order-one chart `(x, y)`.
    pub fn e1(n: usize, r: usize) -> Chart {
        Chart::blocks(&[("x", n, 0), ("y", r, 1)], 1)
    }

    /// Order-two chart `(x, y, z)` with weights `(0, 1, 2)`.
    pub fn e2(n: usize, r: usize, m: usize) -> Chart {
        Chart::blocks(&[("x", n, 0), ("y", r, 1), ("z", m, 2)], 2)
    }

    /// Variable names in order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Weight of variable `v`.
    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Whether the chart has no variables.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// The order `k`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Index of the variable called `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indices of the variables of weight `w`, in chart order.
    pub fn vars_of_weight(&self, w: u32) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.weights[v] == w).collect()
    }

    /// Sub-chart of the variables with weight at most `j`.
    pub fn reduction(&self, j: u32) -> Chart {
        let vars = self
            .names
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w <= j)
            .map(|(n, &w)| (n.clone(), w))
            .collect();
        Chart::with_order(vars, j.min(self.order)).expect("sub-chart of a valid chart")
    }

    /// Weight of a monomial-wise homogeneous polynomial.
    pub fn fn_weight(&self, p: &Poly) -> GradedFunctionWeight {
        let mut acc = GradedFunctionWeight::Zero;
        for (m, _) in p.terms() {
            let w: i64 = m.iter().map(|(v, e)| e as i64 * self.weights[v] as i64).sum();
            acc = acc.merge(GradedFunctionWeight::Homogeneous(w));
        }
        acc
    }

    pub(crate) fn merge_weights(a: GradedFunctionWeight, b: GradedFunctionWeight) -> GradedFunctionWeight {
        a.merge(b)
    }
}

/// Weight of `p` on `chart`.
pub fn fn_weight(p: &Poly, chart: &Chart) -> GradedFunctionWeight {
    chart.fn_weight(p)
}
