//! Potentials, torsions, the trace and Bianchi maps, and metric connections
//! stored by their potential relative to Levi-Civita.

use thiserror::Error;

use crate::frame::{
    combinations, connection_matrices, curvature_from_matrices, levi_civita, EndoField, Form,
    FrameSpec, Tensor3,
};
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectionError {
    #[error("components are not antisymmetric in the last two slots at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("J does not square to -1")]
    NonComplexStructure,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("Ω² decomposition needs dimension at least 2")]
    DimensionTooSmall,
}

/// Element of Ω²(T*M): components `B_{ijk}` antisymmetric in `(j, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTensorForm {
    t: Tensor3,
}

impl TwoTensorForm {
    pub fn zeros(dim: usize) -> Self {
        TwoTensorForm {
            t: Tensor3::zeros(dim),
        }
    }

    pub fn from_tensor(t: Tensor3) -> Result<Self, ConnectionError> {
        let n = t.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if t.get(i, j, k) != &-t.get(i, k, j) {
                        return Err(ConnectionError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(TwoTensorForm { t })
    }

    /// Builds from a function evaluated on `j < k` and extended antisymmetrically.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = Tensor3::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in j + 1..dim {
                    let v = f(i, j, k);
                    t.set(i, k, j, -&v);
                    t.set(i, j, k, v);
                }
            }
        }
        TwoTensorForm { t }
    }

    /// A 3-form viewed inside Ω²(T*M).
    pub fn from_three_form(psi: &Form) -> Self {
        assert_eq!(psi.degree(), 3);
        TwoTensorForm::from_upper(psi.dim(), |i, j, k| psi.get(&[i, j, k]))
    }

    /// `α ⊗ β` for a 1-form `α` and a 2-form `β`.
    pub fn outer(alpha: &Form, beta: &Form) -> Self {
        assert_eq!((alpha.degree(), beta.degree()), (1, 2));
        TwoTensorForm::from_upper(alpha.dim(), |i, j, k| &alpha.get(&[i]) * &beta.get(&[j, k]))
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.t.get(i, j, k)
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let n = self.dim();
        TwoTensorForm {
            t: Tensor3::from_fn(n, |i, j, k| f(self.get(i, j, k))),
        }
    }

    pub fn add(&self, o: &TwoTensorForm) -> Self {
        assert_eq!(self.dim(), o.dim());
        TwoTensorForm {
            t: Tensor3::from_fn(self.dim(), |i, j, k| self.get(i, j, k) + o.get(i, j, k)),
        }
    }

    pub fn sub(&self, o: &TwoTensorForm) -> Self {
        assert_eq!(self.dim(), o.dim());
        TwoTensorForm {
            t: Tensor3::from_fn(self.dim(), |i, j, k| self.get(i, j, k) - o.get(i, j, k)),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|x| x * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    /// Component inner product `Σ B_{ijk} B'_{ijk}`.
    pub fn dot(&self, o: &TwoTensorForm) -> Scalar {
        self.t.iter().zip(o.t.iter()).map(|(a, b)| a * b).sum()
    }

    /// The vector `T(e_j, e_k) = Σ_i B_{ijk} e_i` when `B = T†`.
    pub fn vector(&self, j: usize, k: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.get(i, j, k).clone()).collect()
    }

    /// Components restricted to the index block `offset..offset+dim`.
    pub fn restrict(&self, offset: usize, dim: usize) -> Self {
        TwoTensorForm {
            t: Tensor3::from_fn(dim, |i, j, k| {
                self.get(i + offset, j + offset, k + offset).clone()
            }),
        }
    }

    /// Extension by zero into a frame with `offset` new leading indices.
    pub fn extend(&self, offset: usize) -> Self {
        let n = self.dim() + offset;
        TwoTensorForm {
            t: Tensor3::from_fn(n, |i, j, k| {
                if i < offset || j < offset || k < offset {
                    Scalar::zero()
                } else {
                    self.get(i - offset, j - offset, k - offset).clone()
                }
            }),
        }
    }

    /// Sparse entries `(i, j, k, value)` with `j < k`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in j + 1..n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// `(tr B)_k = Σ_i B_{iik}`.
pub fn trace_map(b: &TwoTensorForm) -> Form {
    let n = b.dim();
    let v: Vec<Scalar> = (0..n)
        .map(|k| (0..n).map(|i| b.get(i, i, k).clone()).sum())
        .collect();
    Form::from_vec(&v)
}

/// `(𝔟B)_{ijk} = B_{ijk} + B_{kij} + B_{jki}`.
pub fn bianchi_map(b: &TwoTensorForm) -> Form {
    let n = b.dim();
    let mut out = Form::zero(n, 3);
    for idx in combinations(n, 3) {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        out.set(&idx, b.get(i, j, k) + b.get(k, i, j) + b.get(j, k, i));
    }
    out
}

/// `(A∧α)(X;Y,Z) = ((AX)♭ ∧ α)(Y,Z)`, i.e. `A_{ji} α_k - A_{ki} α_j`.
pub fn wedge_endo(a: &EndoField, alpha: &Form) -> TwoTensorForm {
    let n = alpha.dim();
    assert_eq!(a.rows(), n);
    let al = alpha.to_vec();
    TwoTensorForm::from_upper(n, |i, j, k| a.get(j, i) * &al[k] - a.get(k, i) * &al[j])
}

/// `ω_A(X, Y) = g(AX, Y)` for the skew part of `A`.
pub fn skew_two_form(a: &EndoField) -> Form {
    let n = a.rows();
    let half = Scalar::from_ratio(1, 2);
    let mut out = Form::zero(n, 2);
    for x in 0..n {
        for y in x + 1..n {
            out.set(&[x, y], &(a.get(y, x) - a.get(x, y)) * &half);
        }
    }
    out
}

/// Whether `tr(A∧α) = (tr A)α - A^tα` and `𝔟(A∧α) = 2ω_{A_-}∧α`, with
/// `A^tα = α∘A*` for the metric adjoint `A*`.
pub fn wedge_endo_identities(a: &EndoField, alpha: &Form) -> (bool, bool) {
    let w = wedge_endo(a, alpha);
    let tr = alpha.scale(&a.trace()).sub(&alpha.pullback(&a.transpose()));
    let b = skew_two_form(a).wedge(alpha).scale(&Scalar::from_int(2));
    (trace_map(&w) == tr, bianchi_map(&w) == b)
}

/// `α ↦ (1/(dim-1)) (1 ∧ α)`, the right inverse of the trace.
pub fn embed_one_form(alpha: &Form) -> TwoTensorForm {
    let n = alpha.dim();
    wedge_endo(&Mat::identity(n), alpha).scale(&Scalar::from_ratio(1, n as i64 - 1))
}

/// `𝔐B(X;Y,Z) = B(X;JY,JZ)`.
pub fn m_involution(b: &TwoTensorForm, j: &EndoField) -> Result<TwoTensorForm, ConnectionError> {
    let n = b.dim();
    if j.rows() != n {
        return Err(ConnectionError::DimensionMismatch(j.rows(), n));
    }
    if (j * j) != Mat::identity(n).scale(&Scalar::from_int(-1)) {
        return Err(ConnectionError::NonComplexStructure);
    }
    Ok(m_involution_unchecked(b, j))
}

/// `B(X;JY,JZ)` without the `J² = -1` check.
pub fn m_involution_unchecked(b: &TwoTensorForm, j: &EndoField) -> TwoTensorForm {
    let n = b.dim();
    TwoTensorForm::from_upper(n, |i, y, z| {
        let mut acc = Scalar::zero();
        for a in 0..n {
            let ja = j.get(a, y);
            if ja.is_zero() {
                continue;
            }
            for c in 0..n {
                let jc = j.get(c, z);
                if !jc.is_zero() {
                    acc += &(&(ja * jc) * b.get(i, a, c));
                }
            }
        }
        acc
    })
}

/// `B = tr̃B + ⅓𝔟B + P₀B`; returns `(tr B, ⅓𝔟B, P₀B)`.
pub fn decompose_omega2(b: &TwoTensorForm) -> Result<(Form, Form, TwoTensorForm), ConnectionError> {
    if b.dim() < 2 {
        return Err(ConnectionError::DimensionTooSmall);
    }
    let alpha = trace_map(b);
    let psi = bianchi_map(b).scale(&Scalar::from_ratio(1, 3));
    let b0 = b
        .sub(&embed_one_form(&alpha))
        .sub(&TwoTensorForm::from_three_form(&psi));
    Ok((alpha, psi, b0))
}

/// `T† = -A† + 𝔟A†`.
pub fn torsion_from_potential(a: &TwoTensorForm) -> TwoTensorForm {
    a.neg()
        .add(&TwoTensorForm::from_three_form(&bianchi_map(a)))
}

/// `A† = -T† + ½𝔟T†`.
pub fn potential_from_torsion(t: &TwoTensorForm) -> TwoTensorForm {
    let half = bianchi_map(t).scale(&Scalar::from_ratio(1, 2));
    t.neg().add(&TwoTensorForm::from_three_form(&half))
}

/// A metric connection `∇ = D + A`, stored by the potential `A†_{ijk} = g(A_{e_i} e_j, e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricConnection {
    spec: FrameSpec,
    potential: TwoTensorForm,
}

impl MetricConnection {
    pub fn levi_civita(spec: &FrameSpec) -> Self {
        MetricConnection {
            spec: spec.clone(),
            potential: TwoTensorForm::zeros(spec.dim()),
        }
    }

    pub fn from_potential(spec: &FrameSpec, a: TwoTensorForm) -> Result<Self, ConnectionError> {
        if a.dim() != spec.dim() {
            return Err(ConnectionError::DimensionMismatch(a.dim(), spec.dim()));
        }
        Ok(MetricConnection {
            spec: spec.clone(),
            potential: a,
        })
    }

    pub fn from_torsion(spec: &FrameSpec, t: &TwoTensorForm) -> Result<Self, ConnectionError> {
        Self::from_potential(spec, potential_from_torsion(t))
    }

    pub fn spec(&self) -> &FrameSpec {
        &self.spec
    }

    pub fn potential(&self) -> &TwoTensorForm {
        &self.potential
    }

    pub fn torsion(&self) -> TwoTensorForm {
        torsion_from_potential(&self.potential)
    }

    /// `ω_{ijk} = g(∇_{e_i} e_j, e_k) = Γ_{ijk} + A†_{ijk}`.
    pub fn coefficients(&self) -> Tensor3 {
        let g = levi_civita(&self.spec);
        Tensor3::from_fn(self.spec.dim(), |i, j, k| {
            g.get(i, j, k) + self.potential.get(i, j, k)
        })
    }

    /// Total connection matrices `M_i`, entry `(k, j) = g(∇_{e_i} e_j, e_k)`.
    pub fn matrices(&self) -> Vec<Mat> {
        connection_matrices(&self.coefficients())
    }

    pub fn curvature(&self) -> Vec<Vec<Mat>> {
        curvature_from_matrices(&self.spec, &self.matrices())
    }

    /// `∇_{e_i} A = [M_i, A]` for an invariant endomorphism field.
    pub fn covariant_endo(&self, a: &EndoField) -> Vec<Mat> {
        self.matrices().iter().map(|m| m.commutator(a)).collect()
    }

    pub fn is_nice(&self) -> bool {
        trace_map(&self.torsion()).is_zero()
    }

    pub fn dirac_class(&self) -> Form {
        bianchi_map(&self.torsion())
    }
}

/// Torsion read directly from connection matrices:
/// `T(e_j, e_k) = ∇_j e_k - ∇_k e_j - [e_j, e_k]`.
pub fn torsion_from_matrices(spec: &FrameSpec, m: &[Mat]) -> TwoTensorForm {
    TwoTensorForm::from_upper(spec.dim(), |i, j, k| {
        m[j].get(i, k) - m[k].get(i, j) - spec.c(j, k, i)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis3() -> FrameSpec {
        FrameSpec::new(3, &[(1, 2, 0, Scalar::from_int(-1))], 1).unwrap()
    }

    fn eta_deta() -> (Form, Form) {
        (Form::basis(3, &[0]), Form::basis(3, &[1, 2]))
    }

    #[test]
    fn trace_examples() {
        let (eta, deta) = eta_deta();
        assert!(trace_map(&TwoTensorForm::outer(&eta, &deta)).is_zero());
        let vol = TwoTensorForm::from_three_form(&eta.wedge(&deta));
        assert!(trace_map(&vol).is_zero());
        assert_eq!(trace_map(&embed_one_form(&eta)), eta);
    }

    #[test]
    fn bianchi_examples() {
        let (eta, deta) = eta_deta();
        let vol = eta.wedge(&deta);
        assert_eq!(
            bianchi_map(&TwoTensorForm::from_three_form(&vol)),
            vol.scale(&Scalar::from_int(3))
        );
        assert_eq!(bianchi_map(&TwoTensorForm::outer(&eta, &deta)), vol);
    }

    #[test]
    fn wedge_endo_examples() {
        let (eta, deta) = eta_deta();
        let id = Mat::identity(3);
        assert_eq!(
            trace_map(&wedge_endo(&id, &eta)),
            eta.scale(&Scalar::from_int(2))
        );
        let mut j = Mat::zeros(3, 3);
        j.set(2, 1, Scalar::one());
        j.set(1, 2, Scalar::from_int(-1));
        let b = bianchi_map(&wedge_endo(&j, &eta));
        assert_eq!(b, deta.wedge(&eta).scale(&Scalar::from_int(2)));
    }

    #[test]
    fn decomposition_of_eta_deta() {
        let (eta, deta) = eta_deta();
        let b = TwoTensorForm::outer(&eta, &deta);
        let (a, psi, b0) = decompose_omega2(&b).unwrap();
        let third = eta.wedge(&deta).scale(&Scalar::from_ratio(1, 3));
        assert!(a.is_zero());
        assert_eq!(psi, third);
        assert_eq!(b0, b.sub(&TwoTensorForm::from_three_form(&third)));
        assert!(trace_map(&b0).is_zero());
        assert!(bianchi_map(&b0).is_zero());
    }

    #[test]
    fn potential_of_volume_torsion() {
        let (eta, deta) = eta_deta();
        let t = TwoTensorForm::from_three_form(&eta.wedge(&deta));
        let a = potential_from_torsion(&t);
        assert_eq!(a, t.scale(&Scalar::from_ratio(1, 2)));
        assert_eq!(torsion_from_potential(&a), t);
    }

    #[test]
    fn torsion_matches_matrices() {
        let spec = heis3();
        let (eta, deta) = eta_deta();
        let a = TwoTensorForm::outer(&eta, &deta);
        let conn = MetricConnection::from_potential(&spec, a).unwrap();
        assert_eq!(
            torsion_from_matrices(&spec, &conn.matrices()),
            conn.torsion()
        );
        let lc = MetricConnection::levi_civita(&spec);
        assert!(torsion_from_matrices(&spec, &lc.matrices()).is_zero());
        assert!(lc.is_nice());
        assert!(lc.dirac_class().is_zero());
    }

    #[test]
    fn embedded_trace_torsion_is_not_nice() {
        let spec = heis3();
        let t = embed_one_form(&Form::basis(3, &[0]));
        assert!(!MetricConnection::from_torsion(&spec, &t).unwrap().is_nice());
    }
}
