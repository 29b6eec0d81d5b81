//! Independent floating-point recomputations: Koszul formula, Milnor's
//! curvature values for unimodular 3-dimensional groups, and a Pauli-matrix
//! spinor model.

#![allow(clippy::needless_range_loop)]

mod common;

use common::contact;
use contact_dirac::connection::MetricConnection;
use contact_dirac::contact::ContactData;
use contact_dirac::frame::scalar_curvature;
use contact_dirac::spinor::{spectrum, SpinorModule};
use contact_dirac::{Form, Mat, Scalar};
use nalgebra::{Complex, DMatrix};

type C = Complex<f64>;

fn brackets(cd: &ContactData) -> Vec<Vec<Vec<f64>>> {
    let n = cd.dim();
    let s = cd.spec();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| s.c(i, j, k).to_float().re).collect())
                .collect()
        })
        .collect()
}

/// `g(∇_{e_i} e_j, e_k)` by the Koszul formula.
fn koszul(c: &[Vec<Vec<f64>>]) -> Vec<Vec<Vec<f64>>> {
    let n = c.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| 0.5 * (c[i][j][k] - c[j][k][i] + c[k][i][j]))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `g(R(e_i, e_j) e_j, e_i)`.
fn sectional(c: &[Vec<Vec<f64>>], i: usize, j: usize) -> f64 {
    let g = koszul(c);
    let n = c.len();
    let nabla = |x: usize, v: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|k| (0..n).map(|l| v[l] * g[x][l][k]).sum())
            .collect()
    };
    let ej: Vec<f64> = (0..n).map(|k| if k == j { 1.0 } else { 0.0 }).collect();
    let a = nabla(i, &nabla(j, &ej));
    let b = nabla(j, &nabla(i, &ej));
    let mut r: Vec<f64> = (0..n).map(|k| a[k] - b[k]).collect();
    for m in 0..n {
        let d = nabla(m, &ej);
        for k in 0..n {
            r[k] -= c[i][j][m] * d[k];
        }
    }
    r[i]
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-12
}

#[test]
fn levi_civita_matches_koszul() {
    for (name, cd) in common::all_contact() {
        let g = koszul(&brackets(&cd));
        let m = MetricConnection::levi_civita(cd.spec()).matrices();
        for (i, mi) in m.iter().enumerate() {
            for j in 0..cd.dim() {
                for k in 0..cd.dim() {
                    assert!(
                        close(mi.get(k, j).to_float().re, g[i][j][k]),
                        "{name} {i}{j}{k}"
                    );
                }
            }
        }
    }
}

#[test]
fn milnor_sectional_curvatures() {
    // (fixture, K01, K02, K12, scalar curvature)
    let cases = [
        ("heis3", 0.25, 0.25, -0.75, -0.5),
        ("su2", 0.25, 0.25, 0.25, 1.5),
        ("e11", 1.0, -1.0, -1.0, -2.0),
    ];
    for (name, k01, k02, k12, s) in cases {
        let cd = contact(name);
        let c = brackets(&cd);
        assert!(close(sectional(&c, 0, 1), k01), "{name}");
        assert!(close(sectional(&c, 0, 2), k02), "{name}");
        assert!(close(sectional(&c, 1, 2), k12), "{name}");
        assert!(close(2.0 * (k01 + k02 + k12), s));
        assert!(
            close(scalar_curvature(cd.spec()).to_float().re, s),
            "{name}"
        );
        let f = MetricConnection::levi_civita(cd.spec()).curvature();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!(
                close(f[i][j].get(i, j).to_float().re, sectional(&c, i, j)),
                "{name}"
            );
        }
    }
}

fn pauli(orientation: f64) -> [DMatrix<C>; 3] {
    let z = C::new(0.0, 0.0);
    let one = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    let s = [
        DMatrix::from_row_slice(2, 2, &[z, one, one, z]),
        DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        DMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
    ];
    s.map(|m| m * C::new(0.0, orientation))
}

/// Dirac operator on constant spinors from Pauli matrices, with
/// `ω̂_i = ½ Σ_{j<k} g(∇_i e_j, e_k) c_j c_k`.
fn pauli_dirac(cd: &ContactData, orientation: f64, a: &[f64]) -> Vec<f64> {
    let g = koszul(&brackets(cd));
    let c = pauli(orientation);
    let mut d = DMatrix::<C>::zeros(2, 2);
    for i in 0..3 {
        let mut w = DMatrix::<C>::identity(2, 2) * C::new(0.0, 0.5 * a[i]);
        for j in 0..3 {
            for k in j + 1..3 {
                w += &c[j] * &c[k] * C::new(0.5 * g[i][j][k], 0.0);
            }
        }
        d += &c[i] * w;
    }
    let mut ev: Vec<f64> = d.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn engine_orientation(sm: &SpinorModule) -> f64 {
    let vol = &(sm.generator(0) * sm.generator(1)) * sm.generator(2);
    vol.get(0, 0).to_float().re
}

#[test]
fn dirac_spectra_match_pauli_model() {
    for name in ["heis3", "su2", "e11"] {
        let cd = contact(name);
        let sm = SpinorModule::new(&cd);
        let o = engine_orientation(&sm);
        assert!(close(o.abs(), 1.0));
        let lc = MetricConnection::levi_civita(cd.spec());
        for a in [[0.0, 0.0, 0.0], [0.5, -1.0, 0.25]] {
            let form = Form::from_vec(
                &a.iter()
                    .map(|&x| Scalar::from_ratio((x * 4.0) as i64, 4).scale_i())
                    .collect::<Vec<_>>(),
            );
            let got: Vec<f64> = spectrum(&sm.dirac_matrix(&lc, &form))
                .iter()
                .map(|z| z.re)
                .collect();
            let want = pauli_dirac(&cd, o, &a);
            for (x, y) in got.iter().zip(&want) {
                assert!((x - y).abs() < 1e-10, "{name}: {got:?} vs {want:?}");
            }
        }
    }
}

#[test]
fn heisenberg_dirac_is_a_quarter_volume() {
    // Milnor parameters (0, 0, -1): on constants D = ±¼c(vol), so D² = 1/16.
    let cd = contact("heis3");
    let sm = SpinorModule::new(&cd);
    let d = sm.dirac_matrix(&MetricConnection::levi_civita(cd.spec()), &Form::zero(3, 1));
    let vol = &(sm.generator(0) * sm.generator(1)) * sm.generator(2);
    let quarter = Scalar::from_ratio(1, 4);
    assert!(d == vol.scale(&quarter) || d == vol.scale(&-quarter));
    assert_eq!(&d * &d, Mat::scalar_identity(2, &Scalar::from_ratio(1, 16)));
}
