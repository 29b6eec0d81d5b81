//! Metric contact structures `(M^{2n+1}, η, g, J)` on invariant frames, with
//! `ξ = e_0`, `η = e^0` and `V` spanned by the adapted pairs
//! `(e_{2k-1}, e_{2k} = J e_{2k-1})`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::connection::{bianchi_map, trace_map, wedge_endo, MetricConnection, TwoTensorForm};
use crate::frame::{exterior_d, lie_derivative_endo, unit, EndoField, Form, FrameError, FrameSpec};
use crate::hermitian::{
    adapted_pairs, check_adapted, det_line_form, AlmostHermitian, ComplexFrame, HermitianError,
};
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContactError {
    #[error("contact frames need odd dimension at least 3, got {0}")]
    BadDimension(usize),
    #[error("J has the wrong size")]
    WrongSize,
    #[error("contact axioms violated: {0:?}")]
    Violations(Vec<ContactViolation>),
    #[error("connection is not a contact connection")]
    NotContact,
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Hermitian(#[from] HermitianError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ContactViolation {
    Reeb,
    DetaCompatibility,
    JSquare,
    VolumeAxiom,
    AdaptedFrame,
}

impl fmt::Display for ContactViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContactViolation::Reeb => "Reeb field",
            ContactViolation::DetaCompatibility => "dη-compatibility",
            ContactViolation::JSquare => "J² = -1 + η⊗ξ",
            ContactViolation::VolumeAxiom => "volume axiom",
            ContactViolation::AdaptedFrame => "adapted frame",
        })
    }
}

/// Contact data over a frame; not necessarily valid until checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactData {
    spec: FrameSpec,
    j: EndoField,
    n: usize,
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

impl ContactData {
    /// Accepts any shape-correct data; see [`validate_contact`].
    pub fn unchecked(spec: FrameSpec, j: EndoField) -> Result<Self, ContactError> {
        let d = spec.dim();
        if d < 3 || d.is_multiple_of(2) {
            return Err(ContactError::BadDimension(d));
        }
        if j.rows() != d || j.cols() != d {
            return Err(ContactError::WrongSize);
        }
        Ok(ContactData {
            spec,
            j,
            n: (d - 1) / 2,
        })
    }

    pub fn new(spec: FrameSpec, j: EndoField) -> Result<Self, ContactError> {
        let cd = ContactData::unchecked(spec, j)?;
        let v = validate_contact(&cd);
        if v.is_empty() {
            Ok(cd)
        } else {
            Err(ContactError::Violations(v))
        }
    }

    /// The standard structure on `H^{2n+1}`: `[e_{2k-1}, e_{2k}] = -ξ`.
    pub fn heisenberg(n: usize) -> Self {
        let d = 2 * n + 1;
        let entries: Vec<_> = (1..=n)
            .map(|k| (2 * k - 1, 2 * k, 0, Scalar::from_int(-1)))
            .collect();
        let spec = FrameSpec::new(d, &entries, 1).expect("Heisenberg brackets");
        ContactData::new(spec, standard_j(n)).expect("Heisenberg contact structure")
    }

    pub fn spec(&self) -> &FrameSpec {
        &self.spec
    }

    pub fn j(&self) -> &EndoField {
        &self.j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn eta(&self) -> Form {
        Form::basis(self.dim(), &[0])
    }

    pub fn xi(&self) -> Vec<Scalar> {
        unit(self.dim(), 0)
    }

    pub fn d_eta(&self) -> Form {
        exterior_d(&self.spec, &self.eta())
    }

    pub fn eta_d_eta(&self) -> Form {
        self.eta().wedge(&self.d_eta())
    }

    pub fn p_v(&self) -> EndoField {
        let mut p = Mat::identity(self.dim());
        p.set(0, 0, Scalar::zero());
        p
    }

    /// Unitary frame of `V^{1,0}`.
    pub fn complex_frame(&self) -> ComplexFrame {
        let pairs: Vec<_> = adapted_pairs(&self.j, 1);
        ComplexFrame::new(self.dim(), &pairs)
    }
}

/// `J e_{2k-1} = e_{2k}`, `J ξ = 0`.
pub fn standard_j(n: usize) -> EndoField {
    let d = 2 * n + 1;
    let mut j = Mat::zeros(d, d);
    for k in 1..=n {
        j.set(2 * k, 2 * k - 1, Scalar::one());
        j.set(2 * k - 1, 2 * k, Scalar::from_int(-1));
    }
    j
}

/// Every violated axiom, in a fixed order; empty means valid.
pub fn validate_contact(cd: &ContactData) -> Vec<ContactViolation> {
    let d = cd.dim();
    let mut out = Vec::new();
    let deta = cd.d_eta();
    if !deta.interior(&cd.xi()).is_zero() {
        out.push(ContactViolation::Reeb);
    }
    let compatible = (0..d).all(|x| (0..d).all(|y| deta.get(&[x, y]) == *cd.j.get(y, x)));
    if !compatible {
        out.push(ContactViolation::DetaCompatibility);
    }
    let mut want = Mat::identity(d).scale(&Scalar::from_int(-1));
    want.set(0, 0, Scalar::zero());
    if (&cd.j * &cd.j) != want {
        out.push(ContactViolation::JSquare);
    }
    let mut top = cd.eta();
    for _ in 0..cd.n {
        top = top.wedge(&deta);
    }
    let top = top.scale(&Scalar::from_ratio(1, factorial(cd.n)));
    if top != cd.spec.volume_form() {
        out.push(ContactViolation::VolumeAxiom);
    }
    if check_adapted(d, &cd.j, 1).is_err() || !cd.j.column(0).iter().all(Scalar::is_zero) {
        out.push(ContactViolation::AdaptedFrame);
    }
    out
}

/// `Φ = L_ξ J`.
pub fn phi_tensor(cd: &ContactData) -> EndoField {
    lie_derivative_endo(&cd.spec, 0, &cd.j)
}

/// `½[J,J]` with `[J,J](X,Y) = J²[X,Y] + [JX,JY] - J[X,JY] - J[JX,Y]`, as a
/// vector-valued 2-form `†`.
pub fn half_nijenhuis_bracket(cd: &ContactData) -> TwoTensorForm {
    let d = cd.dim();
    let j2 = &cd.j * &cd.j;
    let half = Scalar::from_ratio(1, 2);
    let cols: Vec<Vec<Scalar>> = (0..d).map(|a| cd.j.column(a)).collect();
    let br = |u: &[Scalar], v: &[Scalar]| cd.spec.bracket(u, v);
    TwoTensorForm::from_upper_vectors(d, |x, y| {
        let (ex, ey) = (unit(d, x), unit(d, y));
        let a = j2.apply(&br(&ex, &ey));
        let b = br(&cols[x], &cols[y]);
        let c = cd.j.apply(&br(&ex, &cols[y]));
        let e = cd.j.apply(&br(&cols[x], &ey));
        (0..d)
            .map(|i| &(&a[i] + &b[i] - &c[i] - &e[i]) * &half)
            .collect()
    })
}

/// The Nijenhuis tensor `N = ½([J,J] - dη⊗ξ)` of the contact structure, as `N†`.
///
/// With `dα(X,Y) = Xα(Y) - Yα(X) - α([X,Y])` this is the normalization for
/// which `N(ξ,X) = -½JΦX` and `N(X,Y) + ω(X,Y)ξ = -J²N(X,Y)` on `V`.
pub fn contact_nijenhuis(cd: &ContactData) -> TwoTensorForm {
    let d = cd.dim();
    let deta = cd.d_eta();
    let half = Scalar::from_ratio(1, 2);
    let corr = TwoTensorForm::from_upper(d, |i, j, k| {
        if i == 0 {
            &deta.get(&[j, k]) * &half
        } else {
            Scalar::zero()
        }
    });
    half_nijenhuis_bracket(cd).sub(&corr)
}

/// `N(X,Y) + ω(X,Y)ξ = 0` for all `X, Y ∈ V`.
pub fn is_cr(cd: &ContactData) -> bool {
    let d = cd.dim();
    let nij = contact_nijenhuis(cd);
    let deta = cd.d_eta();
    (1..d).all(|x| {
        (1..d).all(|y| {
            let mut v = nij.vector(x, y);
            v[0] += &deta.get(&[x, y]);
            v.iter().all(Scalar::is_zero)
        })
    })
}

/// The closed form `½JΦ∧η - η⊗dη` of `N†` on CR manifolds.
pub fn cr_nijenhuis_closed_form(cd: &ContactData) -> TwoTensorForm {
    let jphi = &cd.j * &phi_tensor(cd);
    wedge_endo(&jphi, &cd.eta())
        .scale(&Scalar::from_ratio(1, 2))
        .sub(&TwoTensorForm::outer(&cd.eta(), &cd.d_eta()))
}

/// Shifts a form on `M` to the cylinder `R × M` (index 0 becomes `∂_t`).
pub fn lift_form(f: &Form) -> Form {
    let mut out = Form::zero(f.dim() + 1, f.degree());
    for (idx, v) in f.terms() {
        let shifted: Vec<usize> = idx.iter().map(|i| i + 1).collect();
        out.set(&shifted, v.clone());
    }
    out
}

/// Drops the `dt` direction of a cylinder form and shifts back to `M`.
pub fn restrict_form(f: &Form) -> Form {
    let mut out = Form::zero(f.dim() - 1, f.degree());
    for (idx, v) in f.terms() {
        if idx.is_empty() || idx[0] > 0 {
            let shifted: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            out.set(&shifted, v.clone());
        }
    }
    out
}

/// Extends an endomorphism of `TM` by zero on `∂_t`.
pub fn lift_endo(a: &EndoField) -> EndoField {
    let d = a.rows() + 1;
    Mat::from_fn(d, d, |r, c| {
        if r == 0 || c == 0 {
            Scalar::zero()
        } else {
            a.get(r - 1, c - 1).clone()
        }
    })
}

pub fn restrict_endo(a: &EndoField) -> EndoField {
    let d = a.rows() - 1;
    Mat::from_fn(d, d, |r, c| a.get(r + 1, c + 1).clone())
}

/// `M̂ = R × M`, `ĝ = dt² + g`, `Ĵ∂_t = ξ`, `Ĵ|_V = J`.
pub fn build_cylinder(cd: &ContactData) -> AlmostHermitian {
    let d = cd.dim();
    let entries: Vec<_> = cd
        .spec
        .entries()
        .into_iter()
        .map(|(i, j, k, v)| (i + 1, j + 1, k + 1, v))
        .collect();
    let spec =
        FrameSpec::new(d + 1, &entries, cd.spec.orientation() as i64).expect("cylinder brackets");
    let mut jh = lift_endo(&cd.j);
    jh.set(1, 0, Scalar::one());
    jh.set(0, 1, Scalar::from_int(-1));
    AlmostHermitian::new(spec, jh).expect("cylinder structure")
}

/// `B = ¼(Φ∧dt + JΦ∧η) - ¼(P_V∧dt + JP_V∧η) + ½η⊗dη` on the cylinder.
pub fn b0_tensor(cd: &ContactData) -> TwoTensorForm {
    let (b0, b1, c) = b0_parts(cd);
    b0.add(&b1).add(&c)
}

/// The three summands of [`b0_tensor`].
pub fn b0_parts(cd: &ContactData) -> (TwoTensorForm, TwoTensorForm, TwoTensorForm) {
    let dt = Form::basis(cd.dim() + 1, &[0]);
    let eta = Form::basis(cd.dim() + 1, &[1]);
    let phi = lift_endo(&phi_tensor(cd));
    let j = lift_endo(&cd.j);
    let pv = lift_endo(&cd.p_v());
    let q = Scalar::from_ratio(1, 4);
    let b0 = wedge_endo(&phi, &dt)
        .add(&wedge_endo(&(&j * &phi), &eta))
        .scale(&q);
    let b1 = wedge_endo(&pv, &dt)
        .add(&wedge_endo(&(&j * &pv), &eta))
        .scale(&-q);
    let c = TwoTensorForm::outer(&eta, &lift_form(&cd.d_eta())).scale(&Scalar::from_ratio(1, 2));
    (b0, b1, c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B0Check {
    pub m_invariant: bool,
    pub bianchi_zero: bool,
    pub trace_ok: bool,
    pub b0a: bool,
    pub b0b: bool,
}

impl B0Check {
    pub fn all(&self) -> bool {
        self.m_invariant && self.bianchi_zero && self.trace_ok && self.b0a && self.b0b
    }
}

/// Checks `B ∈ Ω^{1,1}_s`, `tr B = -(n/2)dt`, `B(∂_t;·,·) = 0` and
/// `B(X;Y,∂_t) = ¼g(X,ΦY) - ¼g(X_V,Y_V)` for `X, Y ∈ V`.
pub fn check_b0(cd: &ContactData) -> B0Check {
    let b = b0_tensor(cd);
    let cyl = build_cylinder(cd);
    let d = cd.dim() + 1;
    let phi = phi_tensor(cd);
    let want_tr = Form::basis(d, &[0]).scale(&Scalar::from_ratio(-(cd.n as i64), 2));
    let q = Scalar::from_ratio(1, 4);
    let b0b = (2..d).all(|x| {
        (2..d).all(|y| {
            let gxy = if x == y {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            let want = &(phi.get(x - 1, y - 1) - &gxy) * &q;
            *b.get(x, y, 0) == want
        })
    });
    B0Check {
        m_invariant: cyl.m_inv(&b) == b,
        bianchi_zero: bianchi_map(&b).is_zero(),
        trace_ok: trace_map(&b) == want_tr,
        b0a: (0..d).all(|y| (0..d).all(|z| b.get(0, y, z).is_zero())),
        b0b,
    }
}

/// `T_w† = ½N† + (5/4)η⊗dη + ¼η∧dη + ¼(JΦ - J)∧η`.
pub fn webster_torsion(cd: &ContactData) -> TwoTensorForm {
    let eta = cd.eta();
    let r = |a, b| Scalar::from_ratio(a, b);
    let jphi = &cd.j * &phi_tensor(cd);
    contact_nijenhuis(cd)
        .scale(&r(1, 2))
        .add(&TwoTensorForm::outer(&eta, &cd.d_eta()).scale(&r(5, 4)))
        .add(&TwoTensorForm::from_three_form(&cd.eta_d_eta()).scale(&r(1, 4)))
        .add(&wedge_endo(&(&jphi - &cd.j), &eta).scale(&r(1, 4)))
}

pub fn webster_connection(cd: &ContactData) -> MetricConnection {
    MetricConnection::from_torsion(&cd.spec, &webster_torsion(cd)).expect("metric torsion")
}

/// The basic connection of the cylinder determined by [`b0_tensor`].
pub fn cylinder_basic_connection(cd: &ContactData) -> Result<MetricConnection, ContactError> {
    Ok(build_cylinder(cd).basic_connection(&b0_tensor(cd))?)
}

/// Slice of the cylinder basic connection, together with whether it
/// preserves the splitting `⟨∂_t⟩ ⊕ TM`.
pub fn webster_via_cylinder(cd: &ContactData) -> Result<(MetricConnection, bool), ContactError> {
    let b = cylinder_basic_connection(cd)?;
    let d = cd.dim() + 1;
    let a = b.potential();
    // ∇_t Z = 0 and ĝ(∇_X Y, ∂_t) = 0; Levi-Civita already has both.
    let split = (0..d).all(|y| (0..d).all(|z| a.get(0, y, z).is_zero()))
        && (1..d).all(|x| (1..d).all(|y| a.get(x, y, 0).is_zero()));
    let m = MetricConnection::from_potential(&cd.spec, a.restrict(1, cd.dim()))
        .expect("restricted potential is metric");
    Ok((m, split))
}

pub fn webster_slice_consistency(cd: &ContactData) -> bool {
    match webster_via_cylinder(cd) {
        Ok((m, split)) => split && m == webster_connection(cd),
        Err(_) => false,
    }
}

/// `½N† - ½η⊗dη + ½JP_V∧η + ¼JΦ∧η`, the closed form as usually printed.
/// Its `ξ`-torsion on `V` is `-dη`, so it never defines a contact connection.
pub fn sympl_torsion_printed(cd: &ContactData) -> TwoTensorForm {
    let eta = cd.eta();
    let r = |a, b| Scalar::from_ratio(a, b);
    let jphi = &cd.j * &phi_tensor(cd);
    contact_nijenhuis(cd)
        .scale(&r(1, 2))
        .sub(&TwoTensorForm::outer(&eta, &cd.d_eta()).scale(&r(1, 2)))
        .add(&wedge_endo(&(&cd.j * &cd.p_v()), &eta).scale(&r(1, 2)))
        .add(&wedge_endo(&jphi, &eta).scale(&r(1, 4)))
}

/// `T₁† = ½N† + (3/2)η⊗dη - ½JP_V∧η + ¼JΦ∧η`: the `t = 1` slice of the basic
/// connection on the symplectization `dt∧η + t dη`.
pub fn sympl_torsion(cd: &ContactData) -> TwoTensorForm {
    let eta = cd.eta();
    let r = |a, b| Scalar::from_ratio(a, b);
    let jphi = &cd.j * &phi_tensor(cd);
    contact_nijenhuis(cd)
        .scale(&r(1, 2))
        .add(&TwoTensorForm::outer(&eta, &cd.d_eta()).scale(&r(3, 2)))
        .sub(&wedge_endo(&(&cd.j * &cd.p_v()), &eta).scale(&r(1, 2)))
        .add(&wedge_endo(&jphi, &eta).scale(&r(1, 4)))
}

pub fn sympl_connection(cd: &ContactData) -> MetricConnection {
    MetricConnection::from_torsion(&cd.spec, &sympl_torsion(cd)).expect("metric torsion")
}

/// `∇J = 0` and `∇ξ = 0`.
pub fn is_contact_connection(cd: &ContactData, conn: &MetricConnection) -> bool {
    conn.matrices()
        .iter()
        .all(|m| m.commutator(&cd.j).is_zero() && m.column(0).iter().all(Scalar::is_zero))
}

/// `a` with `∇_X δ = a(X) δ` for `δ = ε_1 ∧ .. ∧ ε_n ∈ K_M^{-1}`.
pub fn det_line(cd: &ContactData, conn: &MetricConnection) -> Result<Form, ContactError> {
    if !is_contact_connection(cd, conn) {
        return Err(ContactError::NotContact);
    }
    Ok(det_line_form(&cd.complex_frame(), &conn.matrices()))
}

/// Chern connection of the cylinder and its determinant line form, restricted to `M`.
pub fn chern_det_on_slice(cd: &ContactData) -> Form {
    let cyl = build_cylinder(cd);
    let a = cyl
        .det_connection(&cyl.chern())
        .expect("Chern is hermitian");
    restrict_form(&a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetLineComparison {
    /// `det∇¹ - det∇^w`
    pub sympl_minus_webster: Form,
    /// `det∇¹ - det∇^c` with `det∇^c` restricted to the slice
    pub sympl_minus_chern: Form,
    /// `det∇^c - det∇^b` on the cylinder
    pub chern_minus_basic: Form,
    /// Same difference of curvatures `F = da`
    pub chern_minus_basic_curvature: Form,
}

pub fn det_line_compare(cd: &ContactData) -> Result<DetLineComparison, ContactError> {
    let w = det_line(cd, &webster_connection(cd))?;
    let one = det_line(cd, &sympl_connection(cd))?;
    let cyl = build_cylinder(cd);
    let c = cyl.det_connection(&cyl.chern())?;
    let b = cyl.det_connection(&cylinder_basic_connection(cd)?)?;
    let diff = c.sub(&b);
    Ok(DetLineComparison {
        sympl_minus_webster: one.sub(&w),
        sympl_minus_chern: one.sub(&restrict_form(&c)),
        chern_minus_basic_curvature: exterior_d(cyl.spec(), &diff),
        chern_minus_basic: diff,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionSummary {
    pub torsion: Vec<(usize, usize, usize, String)>,
    pub nice: bool,
    pub contact: bool,
    pub cr: bool,
    pub dirac_class: Vec<(Vec<usize>, String)>,
    pub det_line: Option<Vec<String>>,
}

/// `∇` is CR if contact and `T(X,Y) = 0` for `X, Y ∈ V^{1,0}`.
pub fn is_cr_connection(cd: &ContactData, conn: &MetricConnection) -> bool {
    if !is_contact_connection(cd, conn) {
        return false;
    }
    let t = conn.torsion();
    let cf = cd.complex_frame();
    let d = cd.dim();
    for a in 0..cf.rank() {
        for b in 0..cf.rank() {
            for i in 0..d {
                let mut acc = Scalar::zero();
                for j in 0..d {
                    for k in 0..d {
                        acc += &(&(&cf.holo[a][j] * &cf.holo[b][k]) * t.get(i, j, k));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

pub fn summarize_connection(cd: &ContactData, conn: &MetricConnection) -> ConnectionSummary {
    let t = conn.torsion();
    ConnectionSummary {
        torsion: t
            .entries()
            .into_iter()
            .map(|(i, j, k, v)| (i, j, k, v.to_string()))
            .collect(),
        nice: conn.is_nice(),
        contact: is_contact_connection(cd, conn),
        cr: is_cr_connection(cd, conn),
        dirac_class: conn
            .dirac_class()
            .terms()
            .map(|(i, v)| (i.clone(), v.to_string()))
            .collect(),
        det_line: det_line(cd, conn)
            .ok()
            .map(|f| f.to_vec().iter().map(Scalar::to_string).collect()),
    }
}

/// `∇_ξ` on `V` for a contact connection, against the candidate closed forms
/// built from `P_V D_ξ` and `J`. Returns `(label, matches)` pairs.
pub fn xi_derivative_forms(cd: &ContactData, conn: &MetricConnection) -> Vec<(String, bool)> {
    let pv = cd.p_v();
    let on_v = |m: &Mat| &(&pv * m) * &pv;
    let d_xi = on_v(&MetricConnection::levi_civita(&cd.spec).matrices()[0]);
    let target = on_v(&conn.matrices()[0]);
    let half = Scalar::from_ratio(1, 2);
    let cands = [
        ("P_V D_ξ - ½J", &d_xi - &cd.j.scale(&half)),
        ("P_V D_ξ + ½J", &d_xi + &cd.j.scale(&half)),
        ("P_V D_ξ + J", &d_xi + &cd.j),
        ("P_V D_ξ - J", &d_xi - &cd.j),
        (
            "P_V D_ξ - (3/2)J",
            &d_xi - &cd.j.scale(&Scalar::from_ratio(3, 2)),
        ),
        (
            "∇^w_ξ + J",
            &on_v(&webster_connection(cd).matrices()[0]) + &cd.j,
        ),
        (
            "∇^w_ξ - ½J",
            &on_v(&webster_connection(cd).matrices()[0]) - &cd.j.scale(&half),
        ),
    ];
    cands
        .into_iter()
        .map(|(l, m)| (l.to_string(), m == target))
        .collect()
}

/// `g((D_X J)Y, Z) = g(JX, N(Y,Z)) + ½(η∧dη)(JX,Y,Z)` on all frame triples.
pub fn dj_identity_holds(cd: &ContactData) -> bool {
    let d = cd.dim();
    let dj = MetricConnection::levi_civita(&cd.spec).covariant_endo(&cd.j);
    let nij = contact_nijenhuis(cd);
    let ed = cd.eta_d_eta();
    let half = Scalar::from_ratio(1, 2);
    (0..d).all(|x| {
        let jx = cd.j.column(x);
        (0..d).all(|y| {
            (0..d).all(|z| {
                let nyz = nij.vector(y, z);
                let g: Scalar = (0..d).map(|a| &jx[a] * &nyz[a]).sum();
                let rhs = &g + &(&ed.eval(&[jx.clone(), unit(d, y), unit(d, z)]) * &half);
                *dj[x].get(z, y) == rhs
            })
        })
    })
}

/// `g(X,Y) = η(X)η(Y) + dη(X, JY)` on all frame pairs.
pub fn metric_identity_holds(cd: &ContactData) -> bool {
    let d = cd.dim();
    let deta = cd.d_eta();
    (0..d).all(|x| {
        (0..d).all(|y| {
            let g = if x == y {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            let e = if x == 0 && y == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            g == &e + &deta.eval(&[unit(d, x), cd.j.column(y)])
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_is_valid_and_sasakian() {
        let cd = ContactData::heisenberg(1);
        assert!(validate_contact(&cd).is_empty());
        assert!(phi_tensor(&cd).is_zero());
        assert!(is_cr(&cd));
        assert_eq!(
            contact_nijenhuis(&cd),
            TwoTensorForm::outer(&cd.eta(), &cd.d_eta()).neg()
        );
        assert!(metric_identity_holds(&cd));
        assert!(dj_identity_holds(&cd));
    }

    #[test]
    fn flipped_j_breaks_compatibility_only() {
        let cd = ContactData::heisenberg(1);
        let bad =
            ContactData::unchecked(cd.spec().clone(), cd.j().scale(&Scalar::from_int(-1))).unwrap();
        assert_eq!(
            validate_contact(&bad),
            vec![ContactViolation::DetaCompatibility]
        );
    }

    #[test]
    fn cylinder_lee_form() {
        let cd = ContactData::heisenberg(2);
        let cyl = build_cylinder(&cd);
        assert_eq!(
            cyl.lee_form(),
            Form::basis(6, &[0]).scale(&Scalar::from_int(-2))
        );
        assert_eq!(cyl.dc_omega_parts().0, lift_form(&cd.eta_d_eta()).neg());
    }
}
