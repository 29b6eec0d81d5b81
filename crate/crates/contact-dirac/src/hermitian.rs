//! Almost-hermitian frames: bidegree projections, `d^c ω`, the Lee form, the
//! Nijenhuis tensor and Gauduchon's family of hermitian connections.

use thiserror::Error;

use crate::connection::{
    bianchi_map, m_involution_unchecked, trace_map, ConnectionError, MetricConnection,
    TwoTensorForm,
};
use crate::frame::{combinations, exterior_d, unit, EndoField, Form, FrameSpec};
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HermitianError {
    #[error("almost-hermitian frames need even dimension, got {0}")]
    OddDimension(usize),
    #[error("J has the wrong size")]
    WrongSize,
    #[error("J does not square to -1")]
    NonComplexStructure,
    #[error("J is not skew-symmetric")]
    NotSkew,
    #[error("frame is not J-adapted at pair {0}")]
    NotAdapted(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("connection does not preserve J")]
    NonHermitianConnection,
    #[error(transparent)]
    Connection(#[from] ConnectionError),
}

/// Unitary frames `ε_k = (e_k - i f_k)/√2`, `ε^k = (e^k + i f^k)/√2` and their
/// conjugates, for adapted pairs `(e_k, f_k = J e_k)`.
#[derive(Clone, Debug)]
pub struct ComplexFrame {
    pub holo: Vec<Vec<Scalar>>,
    pub antiholo: Vec<Vec<Scalar>>,
    pub holo_dual: Vec<Form>,
    pub antiholo_dual: Vec<Form>,
}

impl ComplexFrame {
    /// `pairs[k] = (index of e_k, components of f_k)`.
    pub fn new(dim: usize, pairs: &[(usize, Vec<Scalar>)]) -> Self {
        let r = Scalar::inv_sqrt2();
        let ir = r.scale_i();
        let mut cf = ComplexFrame {
            holo: Vec::new(),
            antiholo: Vec::new(),
            holo_dual: Vec::new(),
            antiholo_dual: Vec::new(),
        };
        for (e, f) in pairs {
            let ev = unit(dim, *e);
            let hv: Vec<Scalar> = (0..dim).map(|a| &ev[a] * &r - &f[a] * &ir).collect();
            let av: Vec<Scalar> = hv.iter().map(Scalar::conj).collect();
            let ef = Form::basis(dim, &[*e]);
            let ff = Form::from_vec(f);
            let hd = ef.scale(&r).add(&ff.scale(&ir));
            cf.antiholo_dual.push(hd.conj());
            cf.holo_dual.push(hd);
            cf.holo.push(hv);
            cf.antiholo.push(av);
        }
        cf
    }

    pub fn rank(&self) -> usize {
        self.holo.len()
    }

    /// Components of `form` of type `(p, q)` relative to this frame; other
    /// directions (if any) are excluded.
    pub fn pq_part(&self, form: &Form, p: usize, q: usize) -> Form {
        let m = self.rank();
        let deg = form.degree();
        assert_eq!(p + q, deg);
        let mut out = Form::zero(form.dim(), deg);
        for sel in combinations(2 * m, deg) {
            if sel.iter().filter(|&&s| s < m).count() != p {
                continue;
            }
            let vs: Vec<Vec<Scalar>> = sel
                .iter()
                .map(|&s| {
                    if s < m {
                        self.holo[s].clone()
                    } else {
                        self.antiholo[s - m].clone()
                    }
                })
                .collect();
            let coeff = form.eval(&vs);
            if coeff.is_zero() {
                continue;
            }
            let mut term = Form::constant(form.dim(), coeff);
            for &s in &sel {
                let cv = if s < m {
                    &self.holo_dual[s]
                } else {
                    &self.antiholo_dual[s - m]
                };
                term = term.wedge(cv);
            }
            out = out.add(&term);
        }
        out
    }
}

/// Checks `J² = -1`, skewness, and that `J e_{2k} = ±e_{2k+1}`.
fn check_structure(dim: usize, j: &EndoField, offset: usize) -> Result<(), HermitianError> {
    if j.rows() != dim || j.cols() != dim {
        return Err(HermitianError::WrongSize);
    }
    if *j != -&j.transpose() {
        return Err(HermitianError::NotSkew);
    }
    let mut expect = Mat::identity(dim).scale(&Scalar::from_int(-1));
    for a in 0..offset {
        expect.set(a, a, Scalar::zero());
    }
    if (j * j) != expect && offset == 0 {
        return Err(HermitianError::NonComplexStructure);
    }
    for k in 0..(dim - offset) / 2 {
        let e = offset + 2 * k;
        let col = j.column(e);
        let ok = col.iter().enumerate().all(|(a, x)| {
            if a == e + 1 {
                x.is_one() || (-x).is_one()
            } else {
                x.is_zero()
            }
        });
        if !ok {
            return Err(HermitianError::NotAdapted(k));
        }
    }
    Ok(())
}

pub(crate) fn adapted_pairs(j: &EndoField, offset: usize) -> Vec<(usize, Vec<Scalar>)> {
    let n = j.rows();
    (0..(n - offset) / 2)
        .map(|k| (offset + 2 * k, j.column(offset + 2 * k)))
        .collect()
}

pub(crate) fn check_adapted(
    dim: usize,
    j: &EndoField,
    offset: usize,
) -> Result<(), HermitianError> {
    check_structure(dim, j, offset)
}

/// `(M^{2m}, g, J)` on an invariant frame with adapted pairs `(e_{2k}, e_{2k+1})`.
#[derive(Clone, Debug)]
pub struct AlmostHermitian {
    spec: FrameSpec,
    j: EndoField,
    frame: ComplexFrame,
}

impl AlmostHermitian {
    pub fn new(spec: FrameSpec, j: EndoField) -> Result<Self, HermitianError> {
        let n = spec.dim();
        if !n.is_multiple_of(2) {
            return Err(HermitianError::OddDimension(n));
        }
        check_structure(n, &j, 0)?;
        let frame = ComplexFrame::new(n, &adapted_pairs(&j, 0));
        Ok(AlmostHermitian { spec, j, frame })
    }

    /// Flat `R^{2m}` with `J e_{2k} = e_{2k+1}`.
    pub fn flat(m: usize) -> Self {
        let mut j = Mat::zeros(2 * m, 2 * m);
        for k in 0..m {
            j.set(2 * k + 1, 2 * k, Scalar::one());
            j.set(2 * k, 2 * k + 1, Scalar::from_int(-1));
        }
        AlmostHermitian::new(FrameSpec::abelian(2 * m), j).expect("standard structure")
    }

    pub fn spec(&self) -> &FrameSpec {
        &self.spec
    }

    pub fn j(&self) -> &EndoField {
        &self.j
    }

    pub fn complex_frame(&self) -> &ComplexFrame {
        &self.frame
    }

    pub fn half_dim(&self) -> usize {
        self.spec.dim() / 2
    }

    pub fn fundamental_form(&self) -> Form {
        let n = self.spec.dim();
        let mut w = Form::zero(n, 2);
        for a in 0..n {
            for b in a + 1..n {
                // ω(e_a, e_b) = g(J e_a, e_b)
                w.set(&[a, b], self.j.get(b, a).clone());
            }
        }
        w
    }

    /// `d^c α (X_0, ..) = dα(-J X_0, ..)`.
    pub fn dc(&self, alpha: &Form) -> Form {
        exterior_d(&self.spec, alpha).pullback(&-&self.j)
    }

    /// `((d^c ω)^+, (d^c ω)^-)`.
    pub fn dc_omega_parts(&self) -> (Form, Form) {
        let dcw = self.dc(&self.fundamental_form());
        let minus = self
            .frame
            .pq_part(&dcw, 3, 0)
            .add(&self.frame.pq_part(&dcw, 0, 3));
        (dcw.sub(&minus), minus)
    }

    /// Projection of a 3-form onto `Ω^+ = Ω^{2,1} ⊕ Ω^{1,2}`.
    pub fn plus_part(&self, psi: &Form) -> Form {
        self.frame
            .pq_part(psi, 2, 1)
            .add(&self.frame.pq_part(psi, 1, 2))
    }

    /// `Λ = (ω ∧)^*` for the component inner product.
    pub fn lambda(&self, beta: &Form) -> Form {
        let n = self.spec.dim();
        let w = self.fundamental_form();
        let deg = beta.degree();
        assert!(deg >= 2);
        let mut out = Form::zero(n, deg - 2);
        for k in combinations(n, deg - 2) {
            out.set(&k, beta.dot(&w.wedge(&Form::basis(n, &k))));
        }
        out
    }

    /// `(Jα)(X) = -α(JX)` on 1-forms.
    pub fn j_one_form(&self, alpha: &Form) -> Form {
        alpha.pullback(&self.j).neg()
    }

    /// `θ = Λ(dω)`.
    pub fn lee_form(&self) -> Form {
        self.lambda(&exterior_d(&self.spec, &self.fundamental_form()))
    }

    /// `-JΛ((d^c ω)^+)`, the second expression for the Lee form.
    pub fn lee_form_via_dc(&self) -> Form {
        self.j_one_form(&self.lambda(&self.dc_omega_parts().0))
            .neg()
    }

    /// `N(X,Y) = ¼([JX,JY] - [X,Y] - J[X,JY] - J[JX,Y])` as `N†`.
    pub fn nijenhuis(&self) -> TwoTensorForm {
        let n = self.spec.dim();
        let quarter = Scalar::from_ratio(1, 4);
        let cols: Vec<Vec<Scalar>> = (0..n).map(|a| self.j.column(a)).collect();
        TwoTensorForm::from_upper_vectors(n, |x, y| {
            let (ex, ey) = (unit(n, x), unit(n, y));
            let a = self.spec.bracket(&cols[x], &cols[y]);
            let b = self.spec.bracket(&ex, &ey);
            let c = self.j.apply(&self.spec.bracket(&ex, &cols[y]));
            let d = self.j.apply(&self.spec.bracket(&cols[x], &ey));
            (0..n)
                .map(|i| &(&a[i] - &b[i] - &c[i] - &d[i]) * &quarter)
                .collect()
        })
    }

    pub fn m_inv(&self, b: &TwoTensorForm) -> TwoTensorForm {
        m_involution_unchecked(b, &self.j)
    }

    /// Torsion of `∇(ψ⁺, B)`:
    /// `N† + ⅛P - ⅜𝔐P + (9/8)ψ⁺ - ⅜𝔐ψ⁺ + B` with `P = (d^c ω)^+`.
    pub fn gauduchon_torsion(&self, p: &GauduchonParams) -> Result<TwoTensorForm, HermitianError> {
        p.validate(self)?;
        let plus = TwoTensorForm::from_three_form(&self.dc_omega_parts().0);
        let psi = TwoTensorForm::from_three_form(&p.psi_plus);
        let r = |a, b| Scalar::from_ratio(a, b);
        Ok(self
            .nijenhuis()
            .add(&plus.scale(&r(1, 8)))
            .sub(&self.m_inv(&plus).scale(&r(3, 8)))
            .add(&psi.scale(&r(9, 8)))
            .sub(&self.m_inv(&psi).scale(&r(3, 8)))
            .add(&p.b))
    }

    pub fn first_canonical_params(&self) -> GauduchonParams {
        let plus = self.dc_omega_parts().0;
        GauduchonParams {
            psi_plus: plus.scale(&Scalar::from_ratio(-1, 3)),
            b: TwoTensorForm::zeros(self.spec.dim()),
        }
    }

    pub fn chern_params(&self) -> GauduchonParams {
        let plus = self.dc_omega_parts().0;
        GauduchonParams {
            psi_plus: plus.scale(&Scalar::from_ratio(1, 3)),
            b: TwoTensorForm::zeros(self.spec.dim()),
        }
    }

    pub fn connection(&self, p: &GauduchonParams) -> Result<MetricConnection, HermitianError> {
        Ok(MetricConnection::from_torsion(
            &self.spec,
            &self.gauduchon_torsion(p)?,
        )?)
    }

    pub fn first_canonical(&self) -> MetricConnection {
        self.connection(&self.first_canonical_params())
            .expect("admissible parameters")
    }

    pub fn chern(&self) -> MetricConnection {
        self.connection(&self.chern_params())
            .expect("admissible parameters")
    }

    pub fn in_omega11_s(&self, b: &TwoTensorForm) -> bool {
        self.m_inv(b) == *b && bianchi_map(b).is_zero()
    }

    /// Torsion `N† - ¼(P + 𝔐P) + B` of the basic connection.
    pub fn basic_torsion(&self, b: &TwoTensorForm) -> Result<TwoTensorForm, HermitianError> {
        if b.dim() != self.spec.dim() || !self.in_omega11_s(b) {
            return Err(HermitianError::InvalidParams(
                "B must lie in Ω^{1,1}_s".into(),
            ));
        }
        let half_theta = self.lee_form().scale(&Scalar::from_ratio(1, 2));
        if trace_map(b) != half_theta {
            return Err(HermitianError::InvalidParams("tr B must equal θ/2".into()));
        }
        let plus = TwoTensorForm::from_three_form(&self.dc_omega_parts().0);
        let q = plus
            .add(&self.m_inv(&plus))
            .scale(&Scalar::from_ratio(1, 4));
        Ok(self.nijenhuis().sub(&q).add(b))
    }

    pub fn basic_connection(&self, b: &TwoTensorForm) -> Result<MetricConnection, HermitianError> {
        Ok(MetricConnection::from_torsion(
            &self.spec,
            &self.basic_torsion(b)?,
        )?)
    }

    pub fn is_hermitian(&self, conn: &MetricConnection) -> bool {
        conn.covariant_endo(&self.j).iter().all(Mat::is_zero)
    }

    /// The imaginary 1-form `a` with `∇_X δ = a(X) δ`, `δ = ε_1 ∧ .. ∧ ε_m`,
    /// i.e. `a(X) = Σ_k ε^k(∇_X ε_k)`.
    pub fn det_connection(&self, conn: &MetricConnection) -> Result<Form, HermitianError> {
        if !self.is_hermitian(conn) {
            return Err(HermitianError::NonHermitianConnection);
        }
        Ok(det_line_form(&self.frame, &conn.matrices()))
    }

    /// `(dφ)^{0,p+1} = Σ_k ε̄^k ∧ ∇_{ε̄_k} φ` for every `φ = ε̄^S`.
    pub fn dbar_identity_holds(&self, conn: &MetricConnection) -> bool {
        let n = self.spec.dim();
        let m = self.half_dim();
        let mats = conn.matrices();
        let cf = &self.frame;
        let along: Vec<Mat> = (0..m)
            .map(|k| {
                mats.iter()
                    .zip(&cf.antiholo[k])
                    .fold(Mat::zeros(n, n), |acc, (a, x)| &acc + &a.scale(x))
            })
            .collect();
        (0..=m).all(|p| {
            combinations(m, p).into_iter().all(|s| {
                let phi = s.iter().fold(Form::constant(n, Scalar::one()), |acc, &k| {
                    acc.wedge(&cf.antiholo_dual[k])
                });
                let lhs = cf.pq_part(&exterior_d(&self.spec, &phi), 0, p + 1);
                let rhs = (0..m).fold(Form::zero(n, p + 1), |acc, k| {
                    acc.add(&cf.antiholo_dual[k].wedge(&phi.covariant(&along[k])))
                });
                lhs == rhs
            })
        })
    }

    /// Residual of `g((D_X J)Y, Z) = -½dω(X,JY,JZ) + ½dω(X,Y,Z) + 2g(N(Y,Z), JX)`
    /// over all frame triples; `true` if exact.
    pub fn kn_identity_holds(&self) -> bool {
        let n = self.spec.dim();
        let dj = MetricConnection::levi_civita(&self.spec).covariant_endo(&self.j);
        let dw = exterior_d(&self.spec, &self.fundamental_form());
        let nij = self.nijenhuis();
        let half = Scalar::from_ratio(1, 2);
        for x in 0..n {
            let jx = self.j.column(x);
            for y in 0..n {
                let jy = self.j.column(y);
                for z in 0..n {
                    let jz = self.j.column(z);
                    let lhs = dj[x].get(z, y).clone();
                    let ex = unit(n, x);
                    let t1 = dw.eval(&[ex.clone(), jy.clone(), jz]);
                    let t2 = dw.eval(&[ex, unit(n, y), unit(n, z)]);
                    let nyz = nij.vector(y, z);
                    let t3: Scalar = (0..n).map(|a| &nyz[a] * &jx[a]).sum();
                    let rhs = &(&(&t2 - &t1) * &half) + &(&t3 * &Scalar::from_int(2));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `Σ_k ε^k(M_i ε_k)` for each frame direction `i`.
pub(crate) fn det_line_form(frame: &ComplexFrame, mats: &[Mat]) -> Form {
    let v: Vec<Scalar> = mats
        .iter()
        .map(|m| {
            (0..frame.rank())
                .map(|k| frame.holo_dual[k].eval(&[m.apply(&frame.holo[k])]))
                .sum()
        })
        .collect();
    Form::from_vec(&v)
}

/// Parameters `(ψ⁺, B)` of Gauduchon's family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GauduchonParams {
    pub psi_plus: Form,
    pub b: TwoTensorForm,
}

impl GauduchonParams {
    pub fn validate(&self, ah: &AlmostHermitian) -> Result<(), HermitianError> {
        let n = ah.spec().dim();
        if self.psi_plus.dim() != n || self.psi_plus.degree() != 3 || self.b.dim() != n {
            return Err(HermitianError::InvalidParams("wrong shape".into()));
        }
        if !self.psi_plus.is_real() || ah.plus_part(&self.psi_plus) != self.psi_plus {
            return Err(HermitianError::InvalidParams(
                "ψ⁺ must be a real form in Ω⁺".into(),
            ));
        }
        if !ah.in_omega11_s(&self.b) {
            return Err(HermitianError::InvalidParams(
                "B must lie in Ω^{1,1}_s".into(),
            ));
        }
        Ok(())
    }
}

impl TwoTensorForm {
    /// `T†_{ijk}` from a vector-valued 2-form given on pairs `j < k`.
    pub fn from_upper_vectors(
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> TwoTensorForm {
        let mut cache = vec![Vec::new(); dim * dim];
        for j in 0..dim {
            for k in j + 1..dim {
                cache[j * dim + k] = f(j, k);
            }
        }
        TwoTensorForm::from_upper(dim, |i, j, k| cache[j * dim + k][i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_structure_is_kahler() {
        let ah = AlmostHermitian::flat(2);
        let (plus, minus) = ah.dc_omega_parts();
        assert!(plus.is_zero() && minus.is_zero());
        assert!(ah.lee_form().is_zero());
        assert!(ah.nijenhuis().is_zero());
        let t = ah
            .gauduchon_torsion(&GauduchonParams {
                psi_plus: Form::zero(4, 3),
                b: TwoTensorForm::zeros(4),
            })
            .unwrap();
        assert!(t.is_zero());
        let b = ah.basic_connection(&TwoTensorForm::zeros(4)).unwrap();
        assert_eq!(b, MetricConnection::levi_civita(ah.spec()));
        assert!(ah.det_connection(&b).unwrap().is_zero());
    }

    #[test]
    fn flat_fundamental_form() {
        let ah = AlmostHermitian::flat(2);
        let w = ah.fundamental_form();
        assert_eq!(w, Form::basis(4, &[0, 1]).add(&Form::basis(4, &[2, 3])));
        let cf = ah.complex_frame();
        let mut alt = Form::zero(4, 2);
        for k in 0..2 {
            alt = alt.add(
                &cf.holo_dual[k]
                    .wedge(&cf.antiholo_dual[k])
                    .scale(&Scalar::i()),
            );
        }
        assert_eq!(alt, w);
        let vol = ah.spec().volume_form();
        assert_eq!(w.wedge(&w), vol.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn rejects_bad_j() {
        let spec = FrameSpec::abelian(4);
        assert!(matches!(
            AlmostHermitian::new(spec.clone(), Mat::identity(4)),
            Err(HermitianError::NotSkew)
        ));
        assert!(matches!(
            AlmostHermitian::new(FrameSpec::abelian(3), Mat::zeros(3, 3)),
            Err(HermitianError::OddDimension(3))
        ));
    }
}
