//! The verification battery run by the command-line tool, with text and JSON
//! renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use glob::Pattern;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::connection::{
    bianchi_map, decompose_omega2, embed_one_form, potential_from_torsion, torsion_from_potential,
    trace_map, wedge_endo_identities, MetricConnection, TwoTensorForm,
};
use crate::contact::{
    build_cylinder, check_b0, chern_det_on_slice, cylinder_basic_connection, det_line_compare,
    dj_identity_holds, is_contact_connection, is_cr, is_cr_connection, metric_identity_holds,
    phi_tensor, sympl_connection, sympl_torsion_printed, validate_contact, webster_connection,
    webster_slice_consistency, xi_derivative_forms, ContactData, ContactViolation,
};
use crate::fixture::Fixture;
use crate::frame::{scalar_curvature, Form};
use crate::linalg::Mat;
use crate::sample::Sampler;
use crate::scalar::Scalar;
use crate::spinor::{spectrum, SpinorModule};

pub const SCHEMA: u32 = 1;

/// Operators accepted by the `spectrum` command.
pub const OPERATOR_NAMES: [&str; 5] = ["H", "dirac_LC", "dirac_webster", "dirac_sympl", "c_ieta"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl IdentityResult {
    fn new(name: &str, anchor: &str, status: Status) -> Self {
        IdentityResult {
            name: name.into(),
            anchor: anchor.into(),
            status,
            expected: None,
            computed: None,
            residual: None,
            detail: Value::Null,
        }
    }

    fn check(name: &str, anchor: &str, ok: bool) -> Self {
        Self::new(name, anchor, Status::from_bool(ok))
    }

    fn detail(mut self, v: Value) -> Self {
        self.detail = v;
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SpectrumSummary {
    pub values: Vec<f64>,
    pub max_imag: f64,
}

/// Output of the `spectrum` command, also the baseline format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SpectrumTable {
    pub schema: u32,
    pub fixture: String,
    pub operator: String,
    /// `[re, im]` pairs
    pub eigenvalues: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub fixture: String,
    pub fixture_sha256: String,
    pub dim: usize,
    pub n: usize,
    pub axioms: Vec<AxiomResult>,
    pub identities: Vec<IdentityResult>,
    pub operators: BTreeMap<String, Vec<Vec<String>>>,
    pub spectra: BTreeMap<String, SpectrumSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.identities
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count()
    }
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub only: Option<Pattern>,
    pub baseline: Option<SpectrumTable>,
    pub tol: f64,
    pub samples: usize,
    pub seed: u64,
    pub timing: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            only: None,
            baseline: None,
            tol: 1e-9,
            samples: 100,
            seed: 7,
            timing: false,
        }
    }
}

/// Rounds to 12 significant digits; magnitudes below `1e-12` become zero.
pub fn round12(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float")
}

pub fn spectrum_table(fixture: &str, operator: &str, m: &Mat) -> SpectrumTable {
    SpectrumTable {
        schema: SCHEMA,
        fixture: fixture.into(),
        operator: operator.into(),
        eigenvalues: spectrum(m)
            .iter()
            .map(|z| [round12(z.re), round12(z.im)])
            .collect(),
    }
}

/// `None` if the tables agree entrywise within `tol`, else a description.
pub fn compare_spectra(got: &SpectrumTable, want: &SpectrumTable, tol: f64) -> Option<String> {
    if got.eigenvalues.len() != want.eigenvalues.len() {
        return Some(format!(
            "length {} differs from baseline length {}",
            got.eigenvalues.len(),
            want.eigenvalues.len()
        ));
    }
    let worst = got
        .eigenvalues
        .iter()
        .zip(&want.eigenvalues)
        .map(|(a, b)| (a[0] - b[0]).abs().max((a[1] - b[1]).abs()))
        .fold(0.0, f64::max);
    (worst > tol).then(|| format!("max deviation {worst:e} exceeds {tol:e}"))
}

/// The matrix of a named operator.
pub fn operator_by_name(sm: &SpinorModule, name: &str) -> Option<Mat> {
    let cd = sm.contact();
    let a = chern_det_on_slice(cd);
    Some(match name {
        "H" => sm.hodge_dolbeault_blocks().ok()?.h,
        "dirac_LC" => sm.dirac_matrix(&MetricConnection::levi_civita(cd.spec()), &a),
        "dirac_webster" => sm.dirac_matrix(&webster_connection(cd), &a),
        "dirac_sympl" => sm.dirac_matrix(&sympl_connection(cd), &a),
        "c_ieta" => sm.c_i_eta(),
        _ => return None,
    })
}

fn pretty_scalar(s: &Scalar) -> String {
    let [rr, rs, ir, is] = s.parts();
    let zero = |q: &num_rational::BigRational| num_traits::Zero::is_zero(q);
    if zero(rs) && zero(is) {
        if zero(ir) {
            return rr.to_string();
        }
        if zero(rr) {
            return match ir.to_string().as_str() {
                "1" => "i".into(),
                "-1" => "-i".into(),
                q => format!("{q}i"),
            };
        }
    }
    format!("({s})")
}

/// Human form of a frame form; cylinder forms name index 0 `dt`.
pub fn pretty_form(f: &Form, cylinder: bool) -> String {
    let name = |i: usize| -> String {
        let m = if cylinder {
            if i == 0 {
                return "dt".into();
            }
            i - 1
        } else {
            i
        };
        if m == 0 {
            "η".into()
        } else {
            format!("e^{m}")
        }
    };
    let mut parts = Vec::new();
    for (idx, v) in f.terms() {
        let basis: Vec<String> = idx.iter().map(|&i| name(i)).collect();
        let c = pretty_scalar(v);
        if basis.is_empty() {
            parts.push(c);
            continue;
        }
        let b = basis.join("∧");
        parts.push(match c.as_str() {
            "1" => b,
            "-1" => format!("-{b}"),
            _ => format!("{c}·{b}"),
        });
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

fn axiom_results(fx: &Fixture, cd: &ContactData) -> Vec<AxiomResult> {
    let v = validate_contact(cd);
    let mut out = vec![
        AxiomResult {
            name: "antisymmetry".into(),
            status: Status::Pass,
        },
        AxiomResult {
            name: "Jacobi".into(),
            status: Status::from_bool(fx.spec.jacobi_violations().is_empty()),
        },
    ];
    for ax in [
        ContactViolation::Reeb,
        ContactViolation::DetaCompatibility,
        ContactViolation::JSquare,
        ContactViolation::VolumeAxiom,
        ContactViolation::AdaptedFrame,
    ] {
        out.push(AxiomResult {
            name: ax.to_string(),
            status: Status::from_bool(!v.contains(&ax)),
        });
    }
    out
}

struct Ctx<'a> {
    cd: &'a ContactData,
    sm: SpinorModule,
    lc: MetricConnection,
    w: MetricConnection,
    one: MetricConnection,
    a_c: Form,
    opts: &'a ReportOptions,
    fixture: String,
}

type Check = fn(&Ctx) -> IdentityResult;

const CHECKS: &[(&str, Check)] = &[
    ("torsion_potential_round_trip", round_trip),
    ("omega2_decomposition", omega2),
    ("wedge_endo_identities", wedge_identities),
    ("gauduchon_traces", gauduchon_traces),
    ("lee_form", lee_form),
    ("b_tensor", b_tensor),
    ("webster_two_paths", webster_two_paths),
    ("sympl_connection", sympl),
    ("det_compare", det_compare),
    ("det_compare1", det_compare1),
    ("H_equals_Dirac_webster", h_equals_dirac),
    ("dirac_torsion_shift", dirac_shift),
    ("weitzenbock", weitzenbock),
    ("dj_kn_identities", dj_kn),
    ("nice_hermitian", nice_hermitian),
    ("spectrum_H", spectrum_h),
    ("commutator_check", commutator),
    ("clifford_relations", clifford),
    ("spin_compatibility", spin_compat),
    ("metric_from_structure", metric_structure),
    ("uniqueness_classes", uniqueness),
    ("dbar_basic", dbar_basic),
    ("dbar_zero", dbar_zero),
    ("reeb_lie_projection", reeb_lie),
    ("cr_structure", cr_structure),
    ("sympl_printed_formula", sympl_printed),
    ("sympl_xi_derivative", sympl_xi),
    ("webster_scalar_curvature", webster_rho),
];

/// Names of every identity in the battery, in report order.
pub fn identity_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

fn named_connections(c: &Ctx) -> Vec<(&'static str, MetricConnection)> {
    vec![
        ("levi_civita", c.lc.clone()),
        ("webster", c.w.clone()),
        ("sympl", c.one.clone()),
    ]
}

fn round_trip(c: &Ctx) -> IdentityResult {
    let d = c.cd.dim();
    let mut s = Sampler::new(c.opts.seed);
    let mut ok = (0..c.opts.samples).all(|_| {
        let a = s.two_tensor(d);
        potential_from_torsion(&torsion_from_potential(&a)) == a
    });
    ok &= named_connections(c).iter().all(|(_, m)| {
        let t = m.torsion();
        torsion_from_potential(&potential_from_torsion(&t)) == t
    });
    IdentityResult::check(
        "torsion_potential_round_trip",
        "A = -T + ½𝔟T inverts T = -A + 𝔟A",
        ok,
    )
    .detail(json!({ "samples": c.opts.samples }))
}

fn omega2(c: &Ctx) -> IdentityResult {
    let d = c.cd.dim();
    let mut s = Sampler::new(c.opts.seed + 1);
    let ok = (0..c.opts.samples).all(|_| {
        let b = s.two_tensor(d);
        let Ok((alpha, psi, b0)) = decompose_omega2(&b) else {
            return false;
        };
        let e = embed_one_form(&alpha);
        let p = TwoTensorForm::from_three_form(&psi);
        let third = Scalar::from_ratio(1, 3);
        e.add(&p).add(&b0) == b
            && e.dot(&p).is_zero()
            && e.dot(&b0).is_zero()
            && p.dot(&b0).is_zero()
            && trace_map(&b0).is_zero()
            && bianchi_map(&b0).is_zero()
            && alpha == trace_map(&b)
            && psi == bianchi_map(&b).scale(&third)
    });
    IdentityResult::check(
        "omega2_decomposition",
        "B = embed(tr B) + ⅓𝔟B + B₀, orthogonal",
        ok,
    )
    .detail(json!({ "samples": c.opts.samples }))
}

fn wedge_identities(c: &Ctx) -> IdentityResult {
    let d = c.cd.dim();
    let mut s = Sampler::new(c.opts.seed + 2);
    let ok = (0..c.opts.samples).all(|_| {
        let a = s.endo(d);
        let alpha = s.one_form(d);
        let (t, b) = wedge_endo_identities(&a, &alpha);
        t && b
    });
    IdentityResult::check(
        "wedge_endo_identities",
        "tr(A∧α) = (tr A)α - A^tα, 𝔟(A∧α) = 2ω_{A-}∧α",
        ok,
    )
    .detail(json!({ "samples": c.opts.samples }))
}

fn gauduchon_traces(c: &Ctx) -> IdentityResult {
    let cyl = build_cylinder(c.cd);
    let theta = cyl.lee_form();
    let t0 = trace_map(&cyl.first_canonical().torsion());
    let tc = trace_map(&cyl.chern().torsion());
    let ok = t0 == theta.scale(&Scalar::from_ratio(-1, 2)) && tc == theta.neg();
    IdentityResult::check("gauduchon_traces", "tr T₀ = -½θ, tr T_c = -θ", ok).detail(json!({
        "tr_T0": pretty_form(&t0, true),
        "tr_Tc": pretty_form(&tc, true),
    }))
}

fn lee_form(c: &Ctx) -> IdentityResult {
    let cyl = build_cylinder(c.cd);
    let theta = cyl.lee_form();
    let want = Form::basis(c.cd.dim() + 1, &[0]).scale(&Scalar::from_int(-(c.cd.n() as i64)));
    let mut r = IdentityResult::check(
        "lee_form",
        "θ = -n dt by both routes",
        theta == want && cyl.lee_form_via_dc() == theta,
    );
    r.expected = Some(pretty_form(&want, true));
    r.computed = Some(pretty_form(&theta, true));
    r
}

fn b_tensor(c: &Ctx) -> IdentityResult {
    let b = check_b0(c.cd);
    IdentityResult::check(
        "b_tensor",
        "B ∈ Ω^{1,1}_s, 𝔟B = 0, tr B = -(n/2)dt, B(∂_t;·) = 0, B(X;Y,∂_t)",
        b.all(),
    )
    .detail(serde_json::to_value(&b).expect("serializable"))
}

fn webster_two_paths(c: &Ctx) -> IdentityResult {
    let w = &c.w;
    let slice = webster_slice_consistency(c.cd);
    let contact = is_contact_connection(c.cd, w);
    let nice = w.is_nice();
    let class = w.dirac_class() == c.cd.eta_d_eta();
    IdentityResult::check(
        "webster_two_paths",
        "direct ∇^w = cylinder slice; ∇^wJ = 0 = ∇^wξ; tr T_w = 0; 𝔟T_w = η∧dη",
        slice && contact && nice && class,
    )
    .detail(json!({ "slice": slice, "contact": contact, "nice": nice, "dirac_class": class }))
}

fn sample_twists(c: &Ctx) -> Vec<Form> {
    let d = c.cd.dim();
    let mut s = Sampler::new(c.opts.seed + 3);
    let mut v = vec![Form::zero(d, 1), c.a_c.clone()];
    v.extend((0..10).map(|_| s.imaginary_one_form(d)));
    v
}

fn sympl(c: &Ctx) -> IdentityResult {
    let one = &c.one;
    let nice = one.is_nice();
    let contact = is_contact_connection(c.cd, one);
    let class = one.dirac_class().is_zero();
    let equiv = sample_twists(c)
        .iter()
        .all(|a| c.sm.dirac_matrix(one, a) == c.sm.dirac_matrix(&c.lc, a));
    IdentityResult::check(
        "sympl_connection",
        "∇¹ nice, contact, 𝔟T₁ = 0, 𝔇(∇¹, a) = 𝔇(D, a)",
        nice && contact && class && equiv,
    )
    .detail(json!({ "nice": nice, "contact": contact, "bianchi_zero": class, "dirac_equivalent": equiv }))
}

fn det_result(name: &str, anchor: &str, got: &Form, want: &Form, cylinder: bool) -> IdentityResult {
    let mut r = IdentityResult::check(name, anchor, got == want);
    r.expected = Some(pretty_form(want, cylinder));
    r.computed = Some(pretty_form(got, cylinder));
    r.residual = Some(pretty_form(&got.sub(want), cylinder));
    r
}

fn det_compare(c: &Ctx) -> IdentityResult {
    let n = c.cd.n() as i64;
    let want = Form::basis(c.cd.dim() + 1, &[1]).scale(&Scalar::from_ratio(n, 2).scale_i());
    match det_line_compare(c.cd) {
        Ok(cmp) => det_result(
            "det_compare",
            "det∇^c - det∇^b = (ni/2)η",
            &cmp.chern_minus_basic,
            &want,
            true,
        ),
        Err(e) => IdentityResult::check("det_compare", "det∇^c - det∇^b = (ni/2)η", false)
            .detail(json!({ "error": e.to_string() })),
    }
}

fn det_compare1(c: &Ctx) -> IdentityResult {
    let n = c.cd.n() as i64;
    let want = c.cd.eta().scale(&Scalar::from_int(3 * n).scale_i());
    match det_line_compare(c.cd) {
        Ok(cmp) => det_result(
            "det_compare1",
            "det∇¹ - det∇^w = 3ni·η",
            &cmp.sympl_minus_webster,
            &want,
            false,
        ),
        Err(e) => IdentityResult::check("det_compare1", "det∇¹ - det∇^w = 3ni·η", false)
            .detail(json!({ "error": e.to_string() })),
    }
}

fn block_pattern_ok(sm: &SpinorModule, m: &Mat, same_parity: bool) -> bool {
    (0..sm.rank()).all(|r| {
        (0..sm.rank()).all(|c| {
            let same = sm.parity(r) == sm.parity(c);
            same == same_parity || m.get(r, c).is_zero()
        })
    })
}

fn h_equals_dirac(c: &Ctx) -> IdentityResult {
    let name = "H_equals_Dirac_webster";
    let anchor = "H = 𝔇(∇^w, det∇^c) and H = 𝔇_c + ¼c(η∧dη)";
    let hd = match c.sm.hodge_dolbeault_blocks() {
        Ok(h) => h,
        Err(e) => {
            return IdentityResult::check(name, anchor, false)
                .detail(json!({ "error": e.to_string() }))
        }
    };
    let dw = c.sm.dirac_webster_chern();
    let equal = hd.h == dw;
    let dc = c.sm.dirac_matrix(&c.lc, &c.a_c);
    let shift =
        c.sm.clifford_form(&c.cd.eta_d_eta())
            .scale(&Scalar::from_ratio(1, 4));
    let lc_ok = hd.h == &dc + &shift;
    let blocks = block_pattern_ok(&c.sm, &hd.z, true) && block_pattern_ok(&c.sm, &hd.t, false);
    let herm = hd.h.is_hermitian();
    let weight_one = hd.h == c.sm.dirac_matrix_weighted(&c.w, &c.a_c, &Scalar::one());
    let mut detail = json!({
        "equal": equal,
        "dirac_chern_relation": lc_ok,
        "block_structure": blocks,
        "hermitian": herm,
        "weight_one_also_matches": weight_one,
    });
    if c.cd.dim() == 3 {
        let quarter = Mat::scalar_identity(c.sm.rank(), &Scalar::from_ratio(1, 4));
        detail["dirac_chern_minus_H_is_quarter"] = json!(&dc - &hd.h == quarter);
    }
    IdentityResult::check(name, anchor, equal && lc_ok && blocks && herm).detail(detail)
}

fn dirac_shift(c: &Ctx) -> IdentityResult {
    let d = c.cd.dim();
    let zero = Form::zero(d, 1);
    let d0 = c.sm.dirac_matrix(&c.lc, &zero);
    let quarter = Scalar::from_ratio(1, 4);
    let per: Vec<(&str, bool)> = [("webster", &c.w), ("sympl", &c.one)]
        .into_iter()
        .map(|(n, m)| {
            let lhs = &c.sm.dirac_matrix(m, &zero) - &d0;
            (
                n,
                lhs == c
                    .sm
                    .clifford_form(&bianchi_map(&m.torsion()))
                    .scale(&quarter),
            )
        })
        .collect();
    IdentityResult::check(
        "dirac_torsion_shift",
        "𝔇(∇) - 𝔇₀ = ¼c(𝔟T)",
        per.iter().all(|p| p.1),
    )
    .detail(json!(per.into_iter().collect::<BTreeMap<_, _>>()))
}

fn weitzenbock(c: &Ctx) -> IdentityResult {
    let d = c.cd.dim();
    let mut detail = BTreeMap::new();
    let mut ok = true;
    for (n, m) in named_connections(c) {
        for (an, a) in [("a=0", Form::zero(d, 1)), ("a=det_chern", c.a_c.clone())] {
            let res = c.sm.weitzenbock_check(&m, &a).map(|w| w.residual.is_zero());
            let sq = c.sm.square_check(&m, &a).map(|s| {
                s.square_residual.is_zero() && s.connection_matches && s.remainder_matches
            });
            let good = res == Ok(true) && sq == Ok(true);
            ok &= good;
            detail.insert(
                format!("{n} {an}"),
                json!({ "bismut_residual_zero": res.ok(), "square_presentation": sq.ok() }),
            );
        }
    }
    IdentityResult::check(
        "weitzenbock",
        "𝔇² = (∇^𝔴)*∇^𝔴 + s/4 + c(dϖ) - 2‖ϖ‖² + c(da)/2",
        ok,
    )
    .detail(
        json!({ "scalar_curvature": scalar_curvature(c.cd.spec()).to_string(), "cases": detail }),
    )
}

fn dj_kn(c: &Ctx) -> IdentityResult {
    let dj = dj_identity_holds(c.cd);
    let kn = build_cylinder(c.cd).kn_identity_holds();
    IdentityResult::check(
        "dj_kn_identities",
        "g((D_XJ)Y,Z) = g(JX,N(Y,Z)) + ½(η∧dη)(JX,Y,Z); cylinder D Ĵ",
        dj && kn,
    )
    .detail(json!({ "dj": dj, "kn": kn }))
}

fn nice_hermitian(c: &Ctx) -> IdentityResult {
    if !c.cd.spec().is_unimodular() {
        return IdentityResult::new(
            "nice_hermitian",
            "nice ⇔ hermitian Dirac matrix",
            Status::Reported,
        )
        .detail(json!({ "note": "frame is not unimodular" }));
    }
    let mut per = BTreeMap::new();
    let mut ok = true;
    for (n, m) in named_connections(c) {
        let h = m.is_nice() && c.sm.dirac_matrix(&m, &c.a_c).is_hermitian();
        ok &= h;
        per.insert(n.to_string(), h);
    }
    let bad = MetricConnection::from_torsion(c.cd.spec(), &embed_one_form(&c.cd.eta()))
        .expect("metric torsion");
    let counter = !bad.is_nice() && !c.sm.dirac_matrix(&bad, &c.a_c).is_hermitian();
    per.insert("trace_torsion_counterexample_non_hermitian".into(), counter);
    IdentityResult::check(
        "nice_hermitian",
        "nice ⇔ hermitian Dirac matrix",
        ok && counter,
    )
    .detail(json!(per))
}

fn spectrum_h(c: &Ctx) -> IdentityResult {
    let name = "spectrum_H";
    let anchor = "spec(H) real, matches baseline";
    let Some(h) = operator_by_name(&c.sm, "H") else {
        return IdentityResult::check(name, anchor, false);
    };
    let table = spectrum_table(&c.fixture, "H", &h);
    let raw = spectrum(&h);
    let max_im = raw.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    let real = max_im < 1e-10;
    let mut r = IdentityResult::check(name, anchor, real);
    r.computed = Some(format!(
        "{:?}",
        table.eigenvalues.iter().map(|z| z[0]).collect::<Vec<_>>()
    ));
    match &c.opts.baseline {
        Some(b) if b.operator == "H" && b.fixture == c.fixture => {
            let cmp = compare_spectra(&table, b, c.opts.tol);
            r.status = Status::from_bool(real && cmp.is_none());
            r.residual = cmp;
            r.detail = json!({ "max_imag": max_im, "baseline": "compared" });
        }
        _ => r.detail = json!({ "max_imag": max_im, "baseline": "none" }),
    }
    r
}

fn commutator(c: &Ctx) -> IdentityResult {
    let name = "commutator_check";
    let anchor = "{Z,T} = c(P_V ⋆F_w) + 2𝔗̃";
    let cc = match c.sm.commutator_check() {
        Ok(cc) => cc,
        Err(e) => {
            return IdentityResult::new(name, anchor, Status::Reported)
                .detail(json!({ "note": e.to_string() }))
        }
    };
    let sasakian = phi_tensor(c.cd).is_zero();
    let status = if sasakian {
        Status::from_bool(cc.holds)
    } else {
        Status::Reported
    };
    IdentityResult::new(name, anchor, status).detail(json!({
        "phi_zero": sasakian,
        "equal": cc.holds,
        "lhs": cc.lhs.to_strings(),
        "rhs": cc.rhs.to_strings(),
    }))
}

fn clifford(c: &Ctx) -> IdentityResult {
    let d = c.cd.dim();
    let r = c.sm.rank();
    let mut ok = (0..d).all(|i| {
        c.sm.generator(i).is_skew_hermitian()
            && (0..d).all(|j| {
                let want = if i == j { -2 } else { 0 };
                c.sm.generator(i).anticommutator(c.sm.generator(j))
                    == Mat::scalar_identity(r, &Scalar::from_int(want))
            })
    });
    let g = c.sm.c_i_eta();
    ok &= (0..r).all(|a| {
        (0..r).all(|b| {
            let want = if a == b {
                Scalar::from_int(c.sm.parity(a) as i64)
            } else {
                Scalar::zero()
            };
            *g.get(a, b) == want
        })
    });
    IdentityResult::check(
        "clifford_relations",
        "c(α)c(β) + c(β)c(α) = -2g(α,β); c(iη) = (-1)^p",
        ok,
    )
}

fn spin_compat(c: &Ctx) -> IdentityResult {
    let ok = named_connections(c)
        .iter()
        .all(|(_, m)| c.sm.compatibility_holds(m));
    IdentityResult::check("spin_compatibility", "[ω̂_k, c(α)] = c(∇_kα)", ok)
}

fn metric_structure(c: &Ctx) -> IdentityResult {
    IdentityResult::check(
        "metric_from_structure",
        "g = η⊗η + dη(·, J·)",
        metric_identity_holds(c.cd),
    )
}

fn uniqueness(c: &Ctx) -> IdentityResult {
    let distinct = c.w.dirac_class() != c.one.dirac_class();
    let cr = is_cr(c.cd);
    let both_cr = is_cr_connection(c.cd, &c.w) && is_cr_connection(c.cd, &c.one);
    let status = if cr {
        Status::from_bool(distinct && both_cr)
    } else {
        Status::from_bool(distinct)
    };
    IdentityResult::new(
        "uniqueness_classes",
        "∇^w and ∇¹ lie in distinct Dirac classes",
        status,
    )
    .detail(
        json!({ "cr_structure": cr, "both_cr_connections": both_cr, "distinct_classes": distinct }),
    )
}

fn dbar_basic(c: &Ctx) -> IdentityResult {
    let ok = cylinder_basic_connection(c.cd)
        .map(|b| build_cylinder(c.cd).dbar_identity_holds(&b))
        .unwrap_or(false);
    IdentityResult::check("dbar_basic", "∂̄φ = Σ ε̄^k ∧ ∇^b_{ε̄_k}φ on the cylinder", ok)
}

fn dbar_zero(c: &Ctx) -> IdentityResult {
    let ok = cylinder_basic_connection(c.cd)
        .ok()
        .and_then(|b| c.sm.dbar_zero_matches(&b).ok())
        .unwrap_or(false);
    IdentityResult::check("dbar_zero", "∇^b_{ε̄_0} = (i/√2)∇^w_ξ on Λ^{0,*}V*", ok)
}

fn reeb_lie(c: &Ctx) -> IdentityResult {
    let ok =
        c.sm.hodge_dolbeault_blocks()
            .map(|hd| hd.l == c.sm.reeb_lie_projection())
            .unwrap_or(false);
    IdentityResult::check(
        "reeb_lie_projection",
        "∇^w_ξ = (ξ⌟d·)^{0,p} on Λ^{0,p}V*",
        ok,
    )
}

fn cr_structure(c: &Ctx) -> IdentityResult {
    IdentityResult::new("cr_structure", "integrability of V^{1,0}", Status::Reported)
        .detail(json!({ "cr": is_cr(c.cd), "phi_zero": phi_tensor(c.cd).is_zero() }))
}

fn sympl_printed(c: &Ctx) -> IdentityResult {
    let t = sympl_torsion_printed(c.cd);
    let m = MetricConnection::from_torsion(c.cd.spec(), &t).expect("metric torsion");
    IdentityResult::new(
        "sympl_printed_formula",
        "½N - ½η⊗dη + ½JP_V∧η + ¼JΦ∧η",
        Status::Reported,
    )
    .detail(json!({
        "nice": m.is_nice(),
        "bianchi_zero": m.dirac_class().is_zero(),
        "contact": is_contact_connection(c.cd, &m),
    }))
}

fn sympl_xi(c: &Ctx) -> IdentityResult {
    let matches: Vec<String> = xi_derivative_forms(c.cd, &c.one)
        .into_iter()
        .filter(|(_, ok)| *ok)
        .map(|(l, _)| l)
        .collect();
    IdentityResult::new("sympl_xi_derivative", "∇¹_ξ on V", Status::Reported)
        .detail(json!({ "matching_forms": matches }))
}

fn webster_rho(c: &Ctx) -> IdentityResult {
    let f = c.sm.webster_line_curvature();
    let rho = &f.get(&[1, 2]) * &Scalar::i();
    let mut r = IdentityResult::new(
        "webster_scalar_curvature",
        "F_w = -iρ dη + η∧(ξ⌟F_w)",
        Status::Reported,
    );
    r.computed = Some(pretty_scalar(&rho));
    r.detail = json!({ "F_w": pretty_form(&f, false) });
    r
}

/// Runs the battery on a contact fixture.
pub fn build_report(
    fx: &Fixture,
    source: &[u8],
    opts: &ReportOptions,
) -> Result<VerificationReport, crate::fixture::FixtureError> {
    let start = Instant::now();
    let cd = fx.contact_unchecked()?;
    let axioms = axiom_results(fx, &cd);
    let cd = fx.contact()?;
    let ctx = Ctx {
        sm: SpinorModule::new(&cd),
        lc: MetricConnection::levi_civita(cd.spec()),
        w: webster_connection(&cd),
        one: sympl_connection(&cd),
        a_c: chern_det_on_slice(&cd),
        cd: &cd,
        opts,
        fixture: fx.name.clone(),
    };
    let selected = |n: &str| opts.only.as_ref().is_none_or(|p| p.matches(n));
    let identities: Vec<IdentityResult> = CHECKS
        .iter()
        .filter(|(n, _)| selected(n))
        .map(|(_, f)| f(&ctx))
        .collect();
    let mut operators = BTreeMap::new();
    let mut spectra = BTreeMap::new();
    for name in OPERATOR_NAMES {
        if let Some(m) = operator_by_name(&ctx.sm, name) {
            let ev = spectrum(&m);
            spectra.insert(
                name.to_string(),
                SpectrumSummary {
                    values: ev.iter().map(|z| round12(z.re)).collect(),
                    max_imag: round12(ev.iter().map(|z| z.im.abs()).fold(0.0, f64::max)),
                },
            );
            operators.insert(name.to_string(), m.to_strings());
        }
    }
    if let Ok(hd) = ctx.sm.hodge_dolbeault_blocks() {
        operators.insert("Z".into(), hd.z.to_strings());
        operators.insert("T".into(), hd.t.to_strings());
    }
    Ok(VerificationReport {
        schema: SCHEMA,
        fixture: fx.name.clone(),
        fixture_sha256: sha256_hex(source),
        dim: cd.dim(),
        n: cd.n(),
        axioms,
        identities,
        operators,
        spectra,
        timing_ms: opts.timing.then(|| start.elapsed().as_millis()),
    })
}

pub fn render_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn render_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "fixture {} (dim {}, n = {}, sha256 {})",
        r.fixture,
        r.dim,
        r.n,
        &r.fixture_sha256[..16]
    );
    let _ = writeln!(s, "axioms:");
    for a in &r.axioms {
        let _ = writeln!(s, "  [{}] {}", a.status.label(), a.name);
    }
    let _ = writeln!(s, "identities:");
    for id in &r.identities {
        let body = match (&id.expected, &id.computed) {
            (Some(e), Some(c)) if e != c => format!("{e} (computed: {c})"),
            (Some(e), _) => e.clone(),
            (None, Some(c)) => format!("{} = {c}", id.anchor),
            (None, None) => id.anchor.clone(),
        };
        let _ = writeln!(s, "  [{}] {}: {}", id.status.label(), id.name, body);
    }
    let _ = writeln!(s, "spectra:");
    for (name, sp) in &r.spectra {
        let vals: Vec<String> = sp.values.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "  {name}: [{}]", vals.join(", "));
    }
    if let Some(t) = r.timing_ms {
        let _ = writeln!(s, "timing: {t} ms");
    }
    let pass = r
        .identities
        .iter()
        .filter(|i| i.status == Status::Pass)
        .count();
    let rep = r
        .identities
        .iter()
        .filter(|i| i.status == Status::Reported)
        .count();
    let _ = writeln!(
        s,
        "summary: {pass} pass, {} fail, {rep} reported",
        r.failures()
    );
    s
}

pub fn render_spectrum_text(t: &SpectrumTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} on {}", t.operator, t.fixture);
    for (k, z) in t.eigenvalues.iter().enumerate() {
        let _ = writeln!(s, "{k:>4}  {:>20}  {:>20}", z[0], z[1]);
    }
    s
}
