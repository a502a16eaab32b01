use ha2kit::graded_geometry::point_fields::PointFrame;
use ha2kit::graded_geometry::VectorField;
use ha2kit::symbolic::Poly;

type Mat = Vec<Vec<Poly>>;
type Sym = Vec<Vec<Vec<Poly>>>;

struct Params {
    next: usize,
}

impl Params {
    fn take(&mut self) -> Poly {
        self.next += 1;
        Poly::var(self.next - 1)
    }

    fn vec(&mut self, d: usize) -> Vec<Poly> {
        (0..d).map(|_| self.take()).collect()
    }

    fn mat(&mut self, rows: usize, cols: usize) -> Mat {
        (0..rows).map(|_| self.vec(cols)).collect()
    }

    fn sym(&mut self, m: usize, r: usize) -> Sym {
        let mut out = vec![vec![vec![Poly::zero(); r]; r]; m];
        for plane in out.iter_mut() {
            for i in 0..r {
                for j in i..r {
                    let p = self.take();
                    plane[i][j] = p.clone();
                    plane[j][i] = p;
                }
            }
        }
        out
    }
}

fn params_needed(r: usize, m: usize) -> usize {
    2 * (r * r + m * m + m * r * (r + 1) / 2 + r + m * r) + m
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    a.iter()
        .map(|row| (0..b[0].len()).map(|c| (0..inner).map(|t| &row[t] * &b[t][c]).sum()).collect())
        .collect()
}

fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

fn neg(a: &Mat) -> Mat {
    a.iter().map(|row| row.iter().map(|p| -p).collect()).collect()
}

fn apply(a: &Mat, x: &[Poly]) -> Vec<Poly> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

/// Every line of the bracket table of `VF_{≤0}(g × C)` on generic symbolic inputs.
pub fn vf_alg_lines(r: usize, m: usize) -> Vec<(&'static str, bool)> {
    let pf = PointFrame::new(params_needed(r, m), r, m);
    let mut ps = Params { next: 0 };
    let (phi1, phi2) = (ps.mat(r, r), ps.mat(r, r));
    let (psi1, psi2) = (ps.mat(m, m), ps.mat(m, m));
    let (chi1, chi2) = (ps.sym(m, r), ps.sym(m, r));
    let (x1, x2) = (ps.vec(r), ps.vec(r));
    let (f1, f2) = (ps.mat(m, r), ps.mat(m, r));
    let v = ps.vec(m);
    let zero = VectorField::zero(&pf.chart);
    let br = |a: &VectorField, b: &VectorField| a.bracket(b).expect("same chart");
    let chi_phi: Sym = (0..m)
        .map(|mu| {
            (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| (0..r).map(|k| &chi1[mu][k][j] * &phi1[k][i] + &chi1[mu][i][k] * &phi1[k][j]).sum())
                        .collect()
                })
                .collect()
        })
        .collect();
    let psi_chi: Sym = (0..m)
        .map(|mu| {
            (0..r)
                .map(|i| (0..r).map(|j| -(0..m).map(|nu| &psi1[mu][nu] * &chi1[nu][i][j]).sum::<Poly>()).collect())
                .collect()
        })
        .collect();
    let chi_x: Mat = (0..m)
        .map(|mu| (0..r).map(|j| -(0..r).map(|i| &chi1[mu][i][j] * &x1[i]).sum::<Poly>()).collect())
        .collect();
    let (g, c, s2) = (|a: &Mat| pf.endo_g(a), |a: &Mat| pf.endo_c(a), |a: &Sym| pf.sym2(a));
    let neg_v = |w: Vec<Poly>| w.into_iter().map(|p| -p).collect::<Vec<_>>();
    vec![
        ("[phi1, phi2] = phi2 phi1 - phi1 phi2", br(&g(&phi1), &g(&phi2)) == g(&sub(&mul(&phi2, &phi1), &mul(&phi1, &phi2)))),
        ("[psi1, psi2] = psi2 psi1 - psi1 psi2", br(&c(&psi1), &c(&psi2)) == c(&sub(&mul(&psi2, &psi1), &mul(&psi1, &psi2)))),
        ("[chi1, chi2] = 0", br(&s2(&chi1), &s2(&chi2)) == zero),
        ("[phi, chi] = chi(phi ., .) + chi(., phi .)", br(&g(&phi1), &s2(&chi1)) == s2(&chi_phi)),
        ("[psi, chi] = -psi chi", br(&c(&psi1), &s2(&chi1)) == s2(&psi_chi)),
        ("[phi, psi] = 0", br(&g(&phi1), &c(&psi1)) == zero),
        ("[phi, x] = -phi(x)", br(&g(&phi1), &pf.g_elem(&x1)) == pf.g_elem(&neg_v(apply(&phi1, &x1)))),
        ("[phi, f] = f phi", br(&g(&phi1), &pf.hom_gc(&f1)) == pf.hom_gc(&mul(&f1, &phi1))),
        ("[psi, x] = 0", br(&c(&psi1), &pf.g_elem(&x1)) == zero),
        ("[psi, f] = -psi f", br(&c(&psi1), &pf.hom_gc(&f1)) == pf.hom_gc(&neg(&mul(&psi1, &f1)))),
        ("[chi, x] = -chi(x, .)", br(&s2(&chi1), &pf.g_elem(&x1)) == pf.hom_gc(&chi_x)),
        ("[chi, f] = 0", br(&s2(&chi1), &pf.hom_gc(&f1)) == zero),
        ("[x1, x2] = 0", br(&pf.g_elem(&x1), &pf.g_elem(&x2)) == zero),
        ("[f1, f2] = 0", br(&pf.hom_gc(&f1), &pf.hom_gc(&f2)) == zero),
        ("[f, x] = -f(x)", br(&pf.hom_gc(&f1), &pf.g_elem(&x1)) == pf.c_elem(&neg_v(apply(&f1, &x1)))),
        ("[phi, v] = 0", br(&g(&phi1), &pf.c_elem(&v)) == zero),
        ("[psi, v] = -psi(v)", br(&c(&psi1), &pf.c_elem(&v)) == pf.c_elem(&neg_v(apply(&psi1, &v)))),
        ("[chi, v] = 0", br(&s2(&chi1), &pf.c_elem(&v)) == zero),
    ]
}
