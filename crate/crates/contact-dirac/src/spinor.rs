//! The spinor module `Λ^{0,*}V*` of a metric contact frame, Clifford
//! multiplication, induced spinor connections and the Dirac operators they
//! define on invariant sections.
//!
//! Clifford multiplication comes from the cylinder `R × M`: on `Λ^{0,*}` of the
//! cylinder `ĉ(ε̄^k) = √2 ε̄^k∧` and `ĉ(ε^k) = -√2 ε^k⌟`, and on `M` we use
//! `c(α) = ĉ(dt) ĉ(α)` transported to the even part.

use nalgebra::{DMatrix, Schur, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;

use crate::connection::{bianchi_map, MetricConnection};
use crate::contact::{
    build_cylinder, chern_det_on_slice, lift_form, webster_connection, ContactData, ContactError,
};
use crate::frame::{
    curvature_from_matrices, exterior_d, hodge_star, levi_civita, scalar_curvature, Form, FrameSpec,
};
use crate::hermitian::ComplexFrame;
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Matrices acting on invariant sections in the subset basis.
pub type InvariantOperator = Mat;

/// Weight of the determinant line form in the spinor connection.
pub fn det_line_weight() -> Scalar {
    Scalar::from_ratio(1, 2)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinorError {
    #[error("connection is not nice")]
    NonNiceConnection,
    #[error("frame is not unimodular")]
    NonUnimodular,
    #[error("operation needs dimension 3, got {0}")]
    NeedsDimensionThree(usize),
    #[error("connection does not preserve Λ^{{0,*}}V*")]
    NotContact,
    #[error(transparent)]
    Contact(#[from] ContactError),
}

#[derive(Clone, Debug)]
pub struct SpinorModule {
    cd: ContactData,
    basis: Vec<Vec<usize>>,
    frame: ComplexFrame,
    cyl: ComplexFrame,
    // cylinder mask of each basis element
    tau: Vec<usize>,
    gens: Vec<Mat>,
}

fn bit_sign(mask: usize, k: usize) -> Scalar {
    if (mask & ((1 << k) - 1)).count_ones().is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// `ε̄^k ∧` on the mask basis of `Λ^{0,*}` with `r` pairs.
fn mask_wedge(r: usize, k: usize) -> Mat {
    let size = 1 << r;
    let mut m = Mat::zeros(size, size);
    for mask in 0..size {
        if mask & (1 << k) == 0 {
            m.set(mask | (1 << k), mask, bit_sign(mask, k));
        }
    }
    m
}

/// `ε^k ⌟` on the mask basis, the adjoint of [`mask_wedge`].
fn mask_contract(r: usize, k: usize) -> Mat {
    mask_wedge(r, k).transpose()
}

fn combine(mats: &[Mat], v: &[Scalar]) -> Mat {
    let n = mats[0].rows();
    let mut out = Mat::zeros(n, mats[0].cols());
    for (m, x) in mats.iter().zip(v) {
        if !x.is_zero() {
            out = &out + &m.scale(x);
        }
    }
    out
}

fn sum(mats: impl IntoIterator<Item = Mat>, size: usize) -> Mat {
    mats.into_iter()
        .fold(Mat::zeros(size, size), |acc, m| &acc + &m)
}

impl SpinorModule {
    pub fn new(cd: &ContactData) -> Self {
        let n = cd.n();
        let mut basis: Vec<Vec<usize>> = (0..1usize << n)
            .map(|mask| (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect())
            .collect();
        basis.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then(a.cmp(b)));
        let tau = basis
            .iter()
            .map(|s| {
                let m: usize = s.iter().map(|k| 1 << k).sum();
                if s.len() % 2 == 1 {
                    m | 1
                } else {
                    m
                }
            })
            .collect();
        let cyl = build_cylinder(cd).complex_frame().clone();
        let mut sm = SpinorModule {
            cd: cd.clone(),
            basis,
            frame: cd.complex_frame(),
            cyl,
            tau,
            gens: Vec::new(),
        };
        let d = cd.dim();
        sm.gens = (0..d)
            .map(|i| sm.clifford_one_form(&Form::basis(d, &[i])))
            .collect();
        sm
    }

    pub fn contact(&self) -> &ContactData {
        &self.cd
    }

    pub fn n(&self) -> usize {
        self.cd.n()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Subsets `S ⊆ {1..n}` labelling `ε̄^S`, ordered by size then lexicographically.
    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    /// `+1` on `Λ^{0,even}`, `-1` on `Λ^{0,odd}`.
    pub fn parity(&self, idx: usize) -> i32 {
        if self.basis[idx].len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `c(e^i)`.
    pub fn generator(&self, i: usize) -> &Mat {
        &self.gens[i]
    }

    fn cylinder_clifford(&self, alpha: &Form) -> Mat {
        let r = self.n() + 1;
        let size = 1 << r;
        let s2 = Scalar::sqrt2();
        let mut out = Mat::zeros(size, size);
        for k in 0..r {
            let ab = alpha.eval(&[self.cyl.antiholo[k].clone()]);
            let ah = alpha.eval(&[self.cyl.holo[k].clone()]);
            if !ab.is_zero() {
                out = &out + &mask_wedge(r, k).scale(&(&s2 * &ab));
            }
            if !ah.is_zero() {
                out = &out - &mask_contract(r, k).scale(&(&s2 * &ah));
            }
        }
        out
    }

    /// `c(α)` for a (complex) one-form on `M`.
    pub fn clifford_one_form(&self, alpha: &Form) -> InvariantOperator {
        assert_eq!(alpha.degree(), 1);
        assert_eq!(alpha.dim(), self.cd.dim());
        let dt = Form::basis(self.cd.dim() + 1, &[0]);
        let full = &self.cylinder_clifford(&dt) * &self.cylinder_clifford(&lift_form(alpha));
        let r = self.rank();
        Mat::from_fn(r, r, |a, b| full.get(self.tau[a], self.tau[b]).clone())
    }

    /// `c(e^{i_1} ∧ .. ∧ e^{i_p}) = c(e^{i_1}) ⋯ c(e^{i_p})`, extended linearly.
    pub fn clifford_form(&self, f: &Form) -> InvariantOperator {
        let r = self.rank();
        let mut out = Mat::zeros(r, r);
        for (idx, v) in f.terms() {
            let prod = idx
                .iter()
                .fold(Mat::identity(r), |acc, &i| &acc * &self.gens[i]);
            out = &out + &prod.scale(v);
        }
        out
    }

    pub fn c_eta(&self) -> InvariantOperator {
        self.gens[0].clone()
    }

    pub fn c_i_eta(&self) -> InvariantOperator {
        self.gens[0].scale(&Scalar::i())
    }

    /// `ε̄^S` as a form on `M`.
    pub fn basis_form(&self, idx: usize) -> Form {
        self.basis[idx]
            .iter()
            .fold(Form::constant(self.cd.dim(), Scalar::one()), |acc, &k| {
                acc.wedge(&self.frame.antiholo_dual[k - 1])
            })
    }

    /// Components of a form in `Λ^{0,*}V*`, or `None` if it has other parts.
    pub fn coordinates(&self, f: &Form) -> Option<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.rank()];
        let mut rebuilt = Form::zero(f.dim(), f.degree());
        for (t, s) in self.basis.iter().enumerate() {
            if s.len() != f.degree() {
                continue;
            }
            let vs: Vec<Vec<Scalar>> = s
                .iter()
                .map(|&k| self.frame.antiholo[k - 1].clone())
                .collect();
            let c = if s.is_empty() {
                f.get(&[])
            } else {
                f.eval(&vs)
            };
            rebuilt = rebuilt.add(&self.basis_form(t).scale(&c));
            out[t] = c;
        }
        (rebuilt == *f).then_some(out)
    }

    /// Matrix of a linear map on forms restricted to `Λ^{0,*}V*`.
    pub fn form_operator(&self, f: impl Fn(&Form) -> Form) -> Option<InvariantOperator> {
        let r = self.rank();
        let mut m = Mat::zeros(r, r);
        for c in 0..r {
            let col = self.coordinates(&f(&self.basis_form(c)))?;
            for (row, v) in col.into_iter().enumerate() {
                m.set(row, c, v);
            }
        }
        Some(m)
    }

    /// Action on `Λ^{0,*}V*` of a connection whose matrix along some
    /// direction is `m`.
    pub fn natural_action(&self, m: &Mat) -> Result<InvariantOperator, SpinorError> {
        self.form_operator(|phi| phi.covariant(m))
            .ok_or(SpinorError::NotContact)
    }

    /// `ε̄^k ∧` on `Λ^{0,*}V*`, `k = 1..n`.
    pub fn wedge_bar(&self, k: usize) -> InvariantOperator {
        let e = &self.frame.antiholo_dual[k - 1];
        self.form_operator(|phi| e.wedge(phi))
            .expect("ε̄^k preserves Λ^{0,*}V*")
    }

    /// `ω̂_k = -¼ Σ_{i,m} g(∇_k e_m, e_i) c(e^i) c(e^m)`.
    pub fn spin_connection(&self, conn: &MetricConnection) -> Vec<InvariantOperator> {
        let d = self.cd.dim();
        let r = self.rank();
        let q = Scalar::from_ratio(-1, 4);
        conn.matrices()
            .iter()
            .map(|m| {
                let mut out = Mat::zeros(r, r);
                for i in 0..d {
                    for j in 0..d {
                        let x = m.get(i, j);
                        if !x.is_zero() {
                            out = &out + &(&self.gens[i] * &self.gens[j]).scale(&(x * &q));
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// Spinor connection twisted by `κ a`: `ω̂_i + κ a_i`.
    pub fn twisted_connection(
        &self,
        conn: &MetricConnection,
        a: &Form,
        kappa: &Scalar,
    ) -> Vec<InvariantOperator> {
        let r = self.rank();
        let av = a.to_vec();
        self.spin_connection(conn)
            .into_iter()
            .zip(av)
            .map(|(w, x)| &w + &Mat::scalar_identity(r, &(&x * kappa)))
            .collect()
    }

    /// `Σ_i c(e^i)(ω̂_i + ½ a_i)` for an imaginary one-form `a`.
    pub fn dirac_matrix(&self, conn: &MetricConnection, a: &Form) -> InvariantOperator {
        self.dirac_matrix_weighted(conn, a, &det_line_weight())
    }

    pub fn dirac_matrix_weighted(
        &self,
        conn: &MetricConnection,
        a: &Form,
        kappa: &Scalar,
    ) -> InvariantOperator {
        let w = self.twisted_connection(conn, a, kappa);
        sum(
            w.iter().enumerate().map(|(i, wi)| &self.gens[i] * wi),
            self.rank(),
        )
    }

    /// `c(∇_k e^j)` for all `k, j`, the right side of the compatibility identity.
    pub fn compatibility_holds(&self, conn: &MetricConnection) -> bool {
        let d = self.cd.dim();
        let mats = conn.matrices();
        self.spin_connection(conn).iter().zip(&mats).all(|(w, m)| {
            (0..d).all(|j| {
                let rhs = Form::basis(d, &[j]).covariant(m);
                w.commutator(&self.gens[j]) == self.clifford_one_form(&rhs)
            })
        })
    }

    /// Blocks of the contact Hodge–Dolbeault operator built from `∇^w`.
    pub fn hodge_dolbeault_blocks(&self) -> Result<HodgeDolbeault, SpinorError> {
        let mats = webster_connection(&self.cd).matrices();
        let l = self.natural_action(&mats[0])?;
        let r = self.rank();
        let mut dbar = Mat::zeros(r, r);
        for k in 1..=self.n() {
            let along = combine(&mats, &self.frame.antiholo[k - 1]);
            dbar = &dbar + &(&self.wedge_bar(k) * &self.natural_action(&along)?);
        }
        let z = &self.c_eta() * &l;
        let t = (&dbar + &dbar.adjoint()).scale(&Scalar::sqrt2());
        let h = &z + &t;
        Ok(HodgeDolbeault {
            l,
            dbar_v: dbar,
            z,
            t,
            h,
        })
    }

    /// `φ ↦ (ξ⌟dφ)^{0,p}` on `Λ^{0,p}V*`.
    pub fn reeb_lie_projection(&self) -> InvariantOperator {
        let spec = self.cd.spec();
        let xi = self.cd.xi();
        let r = self.rank();
        let mut m = Mat::zeros(r, r);
        for c in 0..r {
            let phi = self.basis_form(c);
            let dphi = exterior_d(spec, &phi);
            let img = dphi.interior(&xi);
            for (row, s) in self.basis.iter().enumerate() {
                if s.len() != img.degree() {
                    continue;
                }
                let vs: Vec<Vec<Scalar>> = s
                    .iter()
                    .map(|&k| self.frame.antiholo[k - 1].clone())
                    .collect();
                let v = if s.is_empty() {
                    img.get(&[])
                } else {
                    img.eval(&vs)
                };
                m.set(row, c, v);
            }
        }
        m
    }

    /// Checks `∇^b_{ε̄_0} φ = (i/√2) ∇^w_ξ φ` on `Λ^{0,*}V*` lifted to the cylinder.
    pub fn dbar_zero_matches(&self, basic: &MetricConnection) -> Result<bool, SpinorError> {
        let l = self.hodge_dolbeault_blocks()?.l;
        let along = combine(&basic.matrices(), &self.cyl.antiholo[0]);
        let factor = Scalar::inv_sqrt2().scale_i();
        for c in 0..self.rank() {
            let phi = lift_form(&self.basis_form(c));
            let img = phi.covariant(&along);
            let col: Vec<Scalar> = l.column(c).iter().map(|x| x * &factor).collect();
            let expect = col
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .fold(Form::zero(phi.dim(), phi.degree()), |acc, (t, x)| {
                    acc.add(&lift_form(&self.basis_form(t)).scale(x))
                });
            if img != expect {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `𝔇(∇^w, det∇^c|_M)` with the default determinant-line weight.
    pub fn dirac_webster_chern(&self) -> InvariantOperator {
        self.dirac_matrix(&webster_connection(&self.cd), &chern_det_on_slice(&self.cd))
    }

    /// `F_w`: curvature of `∇^w` on the determinant line of `(V, J)`.
    pub fn webster_line_curvature(&self) -> Form {
        let spec = self.cd.spec();
        let f = curvature_from_matrices(spec, &webster_connection(&self.cd).matrices());
        let d = spec.dim();
        let mut out = Form::zero(d, 2);
        for i in 0..d {
            for j in i + 1..d {
                let v: Scalar = (0..self.n())
                    .map(|k| self.frame.holo_dual[k].eval(&[f[i][j].apply(&self.frame.holo[k])]))
                    .sum();
                out.set(&[i, j], v);
            }
        }
        out
    }

    /// Both sides of `{Z, T} = c(P_V ⋆F_w) + 2𝔗̃` on invariant sections, where
    /// `𝔗̃` vanishes because `∂_V` kills constant functions.
    pub fn commutator_check(&self) -> Result<CommutatorCheck, SpinorError> {
        let d = self.cd.dim();
        if d != 3 {
            return Err(SpinorError::NeedsDimensionThree(d));
        }
        let hd = self.hodge_dolbeault_blocks()?;
        let lhs = hd.z.anticommutator(&hd.t);
        let star = hodge_star(self.cd.spec(), &self.webster_line_curvature());
        let mut pv = star.clone();
        pv.set(&[0], Scalar::zero());
        let frak_t = Mat::zeros(self.rank(), self.rank());
        let rhs = &self.clifford_form(&pv) + &frak_t.scale(&Scalar::from_int(2));
        Ok(CommutatorCheck {
            holds: lhs == rhs,
            lhs,
            rhs,
            frak_t,
        })
    }

    /// `𝔇²` against `(∇^𝔴)^*∇^𝔴 + s/4 + c(dϖ) - 2‖ϖ‖² + κ c(da)` with
    /// `∇^𝔴_i = ω̂_i + κ a_i + ¼ Σ T_{ijk} c(e^j) c(e^k)` and `ϖ = ¼ 𝔟T`.
    pub fn weitzenbock_check(
        &self,
        conn: &MetricConnection,
        a: &Form,
    ) -> Result<WeitzenbockCheck, SpinorError> {
        let spec = self.cd.spec();
        if !conn.is_nice() {
            return Err(SpinorError::NonNiceConnection);
        }
        if !spec.is_unimodular() {
            return Err(SpinorError::NonUnimodular);
        }
        let kappa = det_line_weight();
        let r = self.rank();
        let d = spec.dim();
        let dir = self.dirac_matrix(conn, a);
        let lhs = &dir * &dir;
        let t = conn.torsion();
        let q = Scalar::from_ratio(1, 4);
        let base = self.twisted_connection(conn, a, &kappa);
        let w: Vec<Mat> = base
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut extra = Mat::zeros(r, r);
                for j in 0..d {
                    for k in 0..d {
                        let x = t.get(i, j, k);
                        if !x.is_zero() {
                            extra = &extra + &(&self.gens[j] * &self.gens[k]).scale(&(x * &q));
                        }
                    }
                }
                b + &extra
            })
            .collect();
        let rough = rough_laplacian(spec, &w);
        let varpi = bianchi_map(&t).scale(&q);
        let s = scalar_curvature(spec);
        let remainder = &(&Mat::scalar_identity(r, &(&s * &q))
            + &self.clifford_form(&exterior_d(spec, &varpi)))
            - &Mat::scalar_identity(r, &(&varpi.inner(&varpi) * &Scalar::from_int(2)));
        let twist = self.clifford_form(&exterior_d(spec, a)).scale(&kappa);
        let residual = &(&(&lhs - &rough) - &remainder) - &twist;
        Ok(WeitzenbockCheck {
            lhs,
            rough,
            remainder,
            twist,
            residual,
        })
    }

    /// Re-derives the Weitzenböck connection and remainder of `𝔇²` from
    /// `𝔇² = ∇̂^*∇̂ - α(T)∘∇̂ + c(R̂)` through [`weitzenbock_presentation`].
    pub fn square_check(
        &self,
        conn: &MetricConnection,
        a: &Form,
    ) -> Result<SquareCheck, SpinorError> {
        let spec = self.cd.spec();
        if !spec.is_unimodular() {
            return Err(SpinorError::NonUnimodular);
        }
        let r = self.rank();
        let d = spec.dim();
        let kappa = det_line_weight();
        let hat = self.twisted_connection(conn, a, &kappa);
        let t = conn.torsion();
        let half = Scalar::from_ratio(1, 2);
        // α(T)_j = ½ Σ_{i,k} T_{jik} c(e^i) c(e^k)
        let alpha: Vec<Mat> = (0..d)
            .map(|j| {
                let mut m = Mat::zeros(r, r);
                for i in 0..d {
                    for k in 0..d {
                        let x = t.get(j, i, k);
                        if !x.is_zero() {
                            m = &m + &(&self.gens[i] * &self.gens[k]).scale(&(x * &half));
                        }
                    }
                }
                m
            })
            .collect();
        let neg_alpha: Vec<Mat> = alpha.iter().map(|m| -m).collect();
        let curv = curvature_from_matrices(spec, &hat);
        let mut c_r = Mat::zeros(r, r);
        for i in 0..d {
            for j in i + 1..d {
                c_r = &c_r + &(&(&self.gens[i] * &self.gens[j]) * &curv[i][j]);
            }
        }
        let dir = self.dirac_matrix(conn, a);
        let assembled = &(&rough_laplacian(spec, &hat)
            + &sum(neg_alpha.iter().zip(&hat).map(|(x, h)| x * h), r))
            + &c_r;
        let square_residual = &(&dir * &dir) - &assembled;
        let pres = weitzenbock_presentation(spec, &hat, &neg_alpha, &c_r);
        let connection_matches = pres
            .c
            .iter()
            .zip(&alpha)
            .all(|(c, al)| *c == al.scale(&half));
        let quarter = Scalar::from_ratio(1, 4);
        let alpha_sq = sum(alpha.iter().map(|m| -&(m * m)), r);
        let closed = &(&c_r + &c_r.adjoint()).scale(&half) - &alpha_sq.scale(&quarter);
        let remainder_matches = pres.remainder == closed;
        Ok(SquareCheck {
            square_residual,
            connection_matches,
            remainder_matches,
            remainder: pres.remainder,
        })
    }
}

/// `-Σ_i (W_i² - Σ_k Γ_{iik} W_k)` with Levi-Civita `Γ`.
pub fn rough_laplacian(spec: &FrameSpec, w: &[Mat]) -> Mat {
    let g = levi_civita(spec);
    let d = spec.dim();
    let r = w[0].rows();
    let mut out = Mat::zeros(r, r);
    for i in 0..d {
        out = &out - &(&w[i] * &w[i]);
        for k in 0..d {
            let x = g.get(i, i, k);
            if !x.is_zero() {
                out = &out + &w[k].scale(x);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeitzenbockPresentation {
    /// `∇̃_i = ∇_i + C_i`
    pub connection: Vec<Mat>,
    pub c: Vec<Mat>,
    pub remainder: Mat,
}

/// Writes `L = ∇^*∇ + Σ_i A_i ∇_i + B` as `∇̃^*∇̃ + ℛ` with
/// `C = -½A` and `ℛ = B - ½ div A - ⟨C⟩²`, `⟨C⟩² = -Σ C_i²`.
pub fn weitzenbock_presentation(
    spec: &FrameSpec,
    base: &[Mat],
    a: &[Mat],
    b: &Mat,
) -> WeitzenbockPresentation {
    let g = levi_civita(spec);
    let d = spec.dim();
    let r = b.rows();
    let half = Scalar::from_ratio(1, 2);
    let c: Vec<Mat> = a.iter().map(|x| x.scale(&-&half)).collect();
    let mut div = Mat::zeros(r, r);
    for i in 0..d {
        div = &div + &base[i].commutator(&a[i]);
        for k in 0..d {
            let x = g.get(i, i, k);
            if !x.is_zero() {
                div = &div - &a[k].scale(x);
            }
        }
    }
    let c_sq = sum(c.iter().map(|m| -&(m * m)), r);
    let remainder = &(b - &div.scale(&half)) - &c_sq;
    let connection = base.iter().zip(&c).map(|(x, y)| x + y).collect();
    WeitzenbockPresentation {
        connection,
        c,
        remainder,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDolbeault {
    /// `∇^w_ξ` on `Λ^{0,*}V*`
    pub l: InvariantOperator,
    pub dbar_v: InvariantOperator,
    pub z: InvariantOperator,
    pub t: InvariantOperator,
    pub h: InvariantOperator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorCheck {
    pub lhs: InvariantOperator,
    pub rhs: InvariantOperator,
    pub frak_t: InvariantOperator,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeitzenbockCheck {
    pub lhs: InvariantOperator,
    pub rough: InvariantOperator,
    pub remainder: InvariantOperator,
    pub twist: InvariantOperator,
    pub residual: InvariantOperator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCheck {
    pub square_residual: InvariantOperator,
    pub connection_matches: bool,
    pub remainder_matches: bool,
    pub remainder: InvariantOperator,
}

/// Eigenvalues of the float image, sorted by real then imaginary part.
pub fn spectrum(m: &Mat) -> Vec<Complex64> {
    let f: DMatrix<Complex64> = m.to_float();
    let mut ev: Vec<Complex64> = if m.is_hermitian() {
        SymmetricEigen::new(f)
            .eigenvalues
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect()
    } else {
        let (_, t) = Schur::new(f).unpack();
        (0..t.nrows()).map(|i| t[(i, i)]).collect()
    };
    ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    ev
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relations_on_heisenberg() {
        for n in 1..=2 {
            let cd = ContactData::heisenberg(n);
            let sm = SpinorModule::new(&cd);
            let d = cd.dim();
            let r = sm.rank();
            for i in 0..d {
                assert!(sm.generator(i).is_skew_hermitian());
                for j in 0..d {
                    let ac = sm.generator(i).anticommutator(sm.generator(j));
                    let expect = if i == j { -2 } else { 0 };
                    assert_eq!(ac, Mat::scalar_identity(r, &Scalar::from_int(expect)));
                }
            }
        }
    }

    #[test]
    fn c_i_eta_is_the_grading() {
        let sm = SpinorModule::new(&ContactData::heisenberg(2));
        let g = sm.c_i_eta();
        for a in 0..sm.rank() {
            assert_eq!(g.get(a, a), &Scalar::from_int(sm.parity(a) as i64));
        }
    }
}
