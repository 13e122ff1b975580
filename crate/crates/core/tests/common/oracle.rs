//! A dense, self-contained Drinfeld double `D(H)` of an ordinary Hopf algebra,
//! written from the textbook formulas:
//!
//! - `(ξ#h)(ξ'#h') = ξ·ψ # h₂h'` with `ψ(c) = ξ'(S(h₁)ch₃)`
//! - dual product `(ξξ')(c) = ξ(c₂)ξ'(c₁)`
//! - `Δ(ξ#h) = (ξ₁#h₁)⊗(ξ₂#h₂)` with `ξ₁(a)ξ₂(b) = ξ(ab)`
//! - `ε(ξ#h) = ξ(1)ε(h)`
//! - `S(ξ#h) = (ε#S(h))(ξ∘S⁻¹#1)`
//! - `S̄(ξ#h) = (ε#S⁻¹(h))(ξ∘S#1)`
//! - `R = Σ_i (δ_i#1)⊗(ε#e_i)`
//!
//! Elements of `D(H)` are dense vectors indexed by `i·n + j` for `δ_i#e_j`.

use hopfgc::hopf::HopfGC;
use hopfgc::{Field, Scalar};

pub struct Classical {
    pub field: Field,
    pub n: usize,
    /// `mult[a][b][k]`: coefficient of `e_k` in `e_a e_b`.
    mult: Vec<Vec<Vec<Scalar>>>,
    /// `comult[a][p][q]`: coefficient of `e_p⊗e_q` in `Δ(e_a)`.
    comult: Vec<Vec<Vec<Scalar>>>,
    counit: Vec<Scalar>,
    unit: Vec<Scalar>,
    /// `s[a][k]`: coefficient of `e_k` in `S(e_a)`.
    s: Vec<Vec<Scalar>>,
    s_inv: Vec<Vec<Scalar>>,
}

fn invert(f: Field, m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("antipode is invertible");
        a.swap(col, piv);
        let inv = a[col][col].inv().unwrap();
        a[col] = a[col].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let k = a[r][col].clone();
                let pivot_row = a[col].clone();
                a[r] = a[r].iter().zip(&pivot_row).map(|(x, p)| x - &(&k * p)).collect();
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl Classical {
    /// Reads the structure constants of the single component of a family over `{e}`.
    pub fn new(h: &HopfGC) -> Classical {
        assert_eq!(h.order(), 1);
        let f = h.field();
        let n = h.dim(0);
        let mult = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).map(|k| h.alg(0).mult.image(&[a, b]).get(&[k])).collect())
                    .collect()
            })
            .collect();
        let comult = (0..n)
            .map(|a| {
                (0..n)
                    .map(|p| (0..n).map(|q| h.d(0, 0).image(&[a]).get(&[p, q])).collect())
                    .collect()
            })
            .collect();
        let counit = (0..n).map(|a| h.counit().image(&[a]).to_scalar()).collect();
        let unit = (0..n).map(|k| h.one(0).get(&[k])).collect();
        // S as a matrix acting on row vectors: row a is S(e_a)
        let s: Vec<Vec<Scalar>> = (0..n)
            .map(|a| (0..n).map(|k| h.s(0).image(&[a]).get(&[k])).collect())
            .collect();
        let s_inv = invert(f, &s);
        Classical {
            field: f,
            n,
            mult,
            comult,
            counit,
            unit,
            s,
            s_inv,
        }
    }

    fn zero_vec(&self, len: usize) -> Vec<Scalar> {
        vec![self.field.zero(); len]
    }

    /// Product of dense vectors in `H`.
    fn h_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                let c = &x[a] * &y[b];
                if c.is_zero() {
                    continue;
                }
                for k in 0..self.n {
                    out[k] += &(&c * &self.mult[a][b][k]);
                }
            }
        }
        out
    }

    fn e(&self, a: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec(self.n);
        v[a] = self.field.one();
        v
    }

    /// `x·M` for a row vector `x` and a matrix whose rows are images.
    fn apply_rows(&self, x: &[Scalar], m: &[Vec<Scalar>]) -> Vec<Scalar> {
        let mut out = self.zero_vec(self.n);
        for (a, c) in x.iter().enumerate() {
            for k in 0..self.n {
                out[k] += &(c * &m[a][k]);
            }
        }
        out
    }

    /// Product of `δ_i#e_j` and `δ_k#e_l`.
    fn basis_product(&self, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
        let n = self.n;
        let mut out = self.zero_vec(n * n);
        for p in 0..n {
            for q2 in 0..n {
                let c1 = &self.comult[j][p][q2];
                if c1.is_zero() {
                    continue;
                }
                for q in 0..n {
                    for r in 0..n {
                        let c = c1 * &self.comult[q2][q][r];
                        if c.is_zero() {
                            continue;
                        }
                        // ψ(e_t) = δ_k(S(e_p) e_t e_r)
                        let sp = self.apply_rows(&self.e(p), &self.s);
                        let psi: Vec<Scalar> = (0..n)
                            .map(|t| self.h_mul(&self.h_mul(&sp, &self.e(t)), &self.e(r))[k].clone())
                            .collect();
                        // (δ_i ψ)(e_t) = Σ_u Δ(e_t)[u][i] ψ(e_u)
                        let xi: Vec<Scalar> = (0..n)
                            .map(|t| {
                                let mut acc = self.field.zero();
                                for u in 0..n {
                                    acc += &(&self.comult[t][u][i] * &psi[u]);
                                }
                                acc
                            })
                            .collect();
                        let h = &self.mult[q][l];
                        for t in 0..n {
                            for s in 0..n {
                                out[t * n + s] += &(&(&c * &xi[t]) * &h[s]);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn product(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = self.zero_vec(n * n);
        for a in 0..n * n {
            if u[a].is_zero() {
                continue;
            }
            for b in 0..n * n {
                let c = &u[a] * &v[b];
                if c.is_zero() {
                    continue;
                }
                let p = self.basis_product(a / n, a % n, b / n, b % n);
                for (o, x) in out.iter_mut().zip(&p) {
                    *o += &(&c * x);
                }
            }
        }
        out
    }

    /// `Δ(δ_i#e_j)` as a dense `n²×n²` array flattened row-major.
    pub fn comult(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.n;
        let nn = n * n;
        let mut out = self.zero_vec(nn * nn);
        for a in 0..n {
            for b in 0..n {
                // ξ₁⊗ξ₂ = Σ δ_i(e_a e_b) δ_a⊗δ_b
                let c = &self.mult[a][b][i];
                if c.is_zero() {
                    continue;
                }
                for p in 0..n {
                    for q in 0..n {
                        let d = &self.comult[j][p][q];
                        out[(a * n + p) * nn + b * n + q] += &(c * d);
                    }
                }
            }
        }
        out
    }

    pub fn counit(&self, i: usize, j: usize) -> Scalar {
        &self.unit[i] * &self.counit[j]
    }

    fn eps_hash(&self, h: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = self.zero_vec(n * n);
        for t in 0..n {
            for s in 0..n {
                out[t * n + s] = &self.counit[t] * &h[s];
            }
        }
        out
    }

    /// `ξ∘M # 1` with `M` given by rows.
    fn dual_hash_one(&self, i: usize, m: &[Vec<Scalar>]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = self.zero_vec(n * n);
        for t in 0..n {
            for s in 0..n {
                out[t * n + s] = &m[t][i] * &self.unit[s];
            }
        }
        out
    }

    pub fn antipode(&self, i: usize, j: usize) -> Vec<Scalar> {
        let sh = self.apply_rows(&self.e(j), &self.s);
        self.product(&self.eps_hash(&sh), &self.dual_hash_one(i, &self.s_inv))
    }

    pub fn twisted_antipode(&self, i: usize, j: usize) -> Vec<Scalar> {
        let sh = self.apply_rows(&self.e(j), &self.s_inv);
        self.product(&self.eps_hash(&sh), &self.dual_hash_one(i, &self.s))
    }

    /// `R` as a dense `n²×n²` array flattened row-major.
    pub fn r_matrix(&self) -> Vec<Scalar> {
        let n = self.n;
        let nn = n * n;
        let mut out = self.zero_vec(nn * nn);
        for i in 0..n {
            let left = self.dual_hash_one(i, &(0..n).map(|t| self.e(t)).collect::<Vec<_>>());
            let right = self.eps_hash(&self.e(i));
            for a in 0..nn {
                for b in 0..nn {
                    out[a * nn + b] += &(&left[a] * &right[b]);
                }
            }
        }
        out
    }
}
