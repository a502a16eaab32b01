//! The second prolongation `A^[2]` of an almost Lie algebroid.

use crate::algebroid1::Algebroid1Data;
use crate::ha2::{HA2Data, Order2Blocks};

/// Structure functions of `A^[2]`, with the core frame identified with the frame of `A`.
///
/// `Q^a_{ij} = Q̂^a_{ij}`, `Q^a_μ = Q^a_μ`, `Q^μ_i = δ^μ_i`, `Q^μ_{ij} = Q^μ_{ij}`,
/// `Q^μ_{νi} = Q^μ_{νi}` and `Q^μ_{ij,k} = Q̂^μ_{ij,k}`.
pub fn prolong2(a: &Algebroid1Data) -> HA2Data {
    let (n, r) = (a.n, a.r);
    let mut b = Order2Blocks::zeros(n, r, r);
    for x in 0..n {
        for i in 0..r {
            for j in 0..r {
                b.q_a_ij[x][i][j] = a.hat_q(x, i, j);
            }
            b.q_a_mu[x][i] = a.anchor[x][i].clone();
        }
    }
    for mu in 0..r {
        b.q_mu_i[mu][mu] = crate::symbolic::Poly::one();
        for i in 0..r {
            for j in 0..r {
                b.q_mu_ij[mu][i][j] = a.bracket[mu][i][j].clone();
                b.q_mu_nui[mu][i][j] = a.bracket[mu][i][j].clone();
                for k in 0..r {
                    b.q_mu_ijk[mu][i][j][k] = a.hat_ql(mu, i, j, k);
                }
            }
        }
    }
    HA2Data::new(a.clone(), r, b).expect("prolongation data is well shaped")
}
