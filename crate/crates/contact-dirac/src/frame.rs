//! Invariant orthonormal frames: structure constants, exterior algebra,
//! Levi-Civita connection and curvature.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::linalg::Mat;
use crate::scalar::Scalar;

/// An endomorphism of the tangent bundle written in the frame; entry `(k, j)`
/// is the `e_k` component of `A e_j`.
pub type EndoField = Mat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },
    #[error("structure constant entry must have i < j, got ({i},{j})")]
    UnorderedEntry { i: usize, j: usize },
    #[error("structure constant c^{k}_{{{i}{j}}} listed twice")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("structure constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("structure constant c^{k}_{{{i}{j}}} is not real")]
    NotReal { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails at (i,j,k,l) = ({i},{j},{k},{l})")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("orientation must be +1 or -1, got {0}")]
    BadOrientation(i64),
}

/// Sorts `idx`, returning the permutation sign, or `None` on a repeated index.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for a in 1..v.len() {
        let mut b = a;
        while b > 0 && v[b - 1] > v[b] {
            v.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// Strictly increasing `p`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

fn signed(s: &Scalar, sign: i32) -> Scalar {
    if sign < 0 {
        -s
    } else {
        s.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSpec {
    dim: usize,
    /// `c[(k * dim + i) * dim + j] = c^k_{ij}`
    c: Vec<Scalar>,
    orientation: i32,
    unimodular: bool,
}

impl FrameSpec {
    /// Builds a frame from the nonzero `c^k_{ij}` with `i < j`.
    pub fn new(
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
        orientation: i64,
    ) -> Result<Self, FrameError> {
        if dim == 0 {
            return Err(FrameError::ZeroDimension);
        }
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(FrameError::IndexOutOfRange { i, j, k, dim });
            }
            if i >= j {
                return Err(FrameError::UnorderedEntry { i, j });
            }
            if !seen.insert((i, j, k)) {
                return Err(FrameError::DuplicateEntry { i, j, k });
            }
            if !v.is_real() {
                return Err(FrameError::NotReal { i, j, k });
            }
            c[(k * dim + i) * dim + j] = v.clone();
            c[(k * dim + j) * dim + i] = -v;
        }
        Self::from_full(dim, c, orientation)
    }

    /// Builds a frame from a dense `c^k_{ij}` array, checking every invariant.
    pub fn from_full(dim: usize, c: Vec<Scalar>, orientation: i64) -> Result<Self, FrameError> {
        if dim == 0 {
            return Err(FrameError::ZeroDimension);
        }
        if orientation != 1 && orientation != -1 {
            return Err(FrameError::BadOrientation(orientation));
        }
        assert_eq!(c.len(), dim * dim * dim);
        let mut spec = FrameSpec {
            dim,
            c,
            orientation: orientation as i32,
            unimodular: false,
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if spec.c(i, j, k) != &-spec.c(j, i, k) {
                        return Err(FrameError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        if let Some((i, j, k, l)) = spec.jacobi_violations().into_iter().next() {
            return Err(FrameError::Jacobi { i, j, k, l });
        }
        spec.unimodular = (0..dim).all(|i| {
            (0..dim)
                .map(|k| spec.c(k, i, k).clone())
                .sum::<Scalar>()
                .is_zero()
        });
        Ok(spec)
    }

    pub fn abelian(dim: usize) -> Self {
        FrameSpec::new(dim, &[], 1).expect("abelian frame is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c^k_{ij}`, the `e_k` component of `[e_i, e_j]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    pub fn orientation(&self) -> i32 {
        self.orientation
    }

    pub fn is_unimodular(&self) -> bool {
        self.unimodular
    }

    pub fn with_orientation(&self, orientation: i64) -> Result<Self, FrameError> {
        FrameSpec::from_full(self.dim, self.c.clone(), orientation)
    }

    /// Nonzero entries `(i, j, k, c^k_{ij})` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    if !self.c(i, j, k).is_zero() {
                        out.push((i, j, k, self.c(i, j, k).clone()));
                    }
                }
            }
        }
        out
    }

    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize, usize)> {
        let n = self.dim;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut acc = Scalar::zero();
                        for m in 0..n {
                            acc += &(self.c(i, j, m) * self.c(m, k, l));
                            acc += &(self.c(j, k, m) * self.c(m, i, l));
                            acc += &(self.c(k, i, m) * self.c(m, j, l));
                        }
                        if !acc.is_zero() {
                            bad.push((i, j, k, l));
                        }
                    }
                }
            }
        }
        bad
    }

    /// `[u, v]` for invariant vector fields with constant components.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &(&uv * c);
                    }
                }
            }
        }
        out
    }

    /// `ad_{e_x}` as a matrix: entry `(k, j)` is `c^k_{xj}`.
    pub fn ad(&self, x: usize) -> Mat {
        Mat::from_fn(self.dim, self.dim, |k, j| self.c(x, j, k).clone())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit(self.dim, i)
    }

    pub fn volume_form(&self) -> Form {
        let all: Vec<usize> = (0..self.dim).collect();
        Form::basis(self.dim, &all).scale(&Scalar::from_int(self.orientation as i64))
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|k| {
            if k == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

/// A dense array `t[i][j][k]` over a frame of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let d = self.dim;
        self.data[(i * d + j) * d + k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }
}

/// An invariant differential form stored by strictly increasing multi-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Scalar>,
}

impl Form {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Form {
            dim,
            degree,
            comps: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, s: Scalar) -> Self {
        let mut f = Form::zero(dim, 0);
        f.set(&[], s);
        f
    }

    /// `e^{i_1} ^ ... ^ e^{i_p}` for indices in any order.
    pub fn basis(dim: usize, idx: &[usize]) -> Self {
        let mut f = Form::zero(dim, idx.len());
        f.set(idx, Scalar::one());
        f
    }

    /// Degree-one form from its component vector.
    pub fn from_vec(v: &[Scalar]) -> Self {
        let mut f = Form::zero(v.len(), 1);
        for (i, x) in v.iter().enumerate() {
            f.set(&[i], x.clone());
        }
        f
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        assert_eq!(self.degree, 1);
        (0..self.dim).map(|i| self.get(&[i])).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Component on an arbitrary index tuple, antisymmetry applied.
    pub fn get(&self, idx: &[usize]) -> Scalar {
        assert_eq!(idx.len(), self.degree, "form degree mismatch");
        match sort_with_sign(idx) {
            None => Scalar::zero(),
            Some((k, s)) => self
                .comps
                .get(&k)
                .map_or_else(Scalar::zero, |v| signed(v, s)),
        }
    }

    /// Sets the component on `idx` (any order); zero components are pruned.
    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        assert_eq!(idx.len(), self.degree, "form degree mismatch");
        assert!(idx.iter().all(|&i| i < self.dim), "form index out of range");
        let Some((k, s)) = sort_with_sign(idx) else {
            assert!(v.is_zero(), "nonzero value on repeated index");
            return;
        };
        if v.is_zero() {
            self.comps.remove(&k);
        } else {
            self.comps.insert(k, signed(&v, s));
        }
    }

    /// Adds `v e^{idx}`; repeated indices give the zero form.
    pub fn add_at(&mut self, idx: &[usize], v: &Scalar) {
        if v.is_zero() || sort_with_sign(idx).is_none() {
            return;
        }
        let cur = self.get(idx);
        self.set(idx, &cur + v);
    }

    /// Nonzero components with strictly increasing keys.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.comps.values().all(Scalar::is_real)
    }

    pub fn is_imaginary(&self) -> bool {
        self.comps.values().all(Scalar::is_imaginary)
    }

    fn check_same(&self, o: &Form) {
        assert_eq!(
            (self.dim, self.degree),
            (o.dim, o.degree),
            "form shape mismatch"
        );
    }

    pub fn add(&self, o: &Form) -> Form {
        self.check_same(o);
        let mut out = self.clone();
        for (k, v) in &o.comps {
            out.add_at(k, v);
        }
        out
    }

    pub fn sub(&self, o: &Form) -> Form {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Form {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        let mut out = Form::zero(self.dim, self.degree);
        for (k, v) in &self.comps {
            out.set(k, v * s);
        }
        out
    }

    pub fn conj(&self) -> Form {
        let mut out = Form::zero(self.dim, self.degree);
        for (k, v) in &self.comps {
            out.set(k, v.conj());
        }
        out
    }

    /// Wedge product with the convention `e^1 ^ e^2 (e_1, e_2) = 1`.
    pub fn wedge(&self, o: &Form) -> Form {
        assert_eq!(self.dim, o.dim);
        let mut out = Form::zero(self.dim, self.degree + o.degree);
        for (a, x) in &self.comps {
            for (b, y) in &o.comps {
                let idx: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                if let Some((k, s)) = sort_with_sign(&idx) {
                    out.add_at(&k, &signed(&(x * y), s));
                }
            }
        }
        out
    }

    /// Contraction `v ⌟ self` with a vector of frame components.
    pub fn interior(&self, v: &[Scalar]) -> Form {
        assert!(self.degree > 0);
        let mut out = Form::zero(self.dim, self.degree - 1);
        for (k, x) in &self.comps {
            for (pos, &i) in k.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = k
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != pos)
                    .map(|(_, &j)| j)
                    .collect();
                let val = &(x * &v[i]) * &Scalar::from_int(if pos % 2 == 0 { 1 } else { -1 });
                out.add_at(&rest, &val);
            }
        }
        out
    }

    /// Multilinear evaluation on `degree` vectors given by frame components.
    pub fn eval(&self, vs: &[Vec<Scalar>]) -> Scalar {
        assert_eq!(vs.len(), self.degree);
        let mut acc = Scalar::zero();
        for (k, x) in &self.comps {
            let m = Mat::from_fn(self.degree, self.degree, |r, c| vs[c][k[r]].clone());
            acc += &(x * &det(&m));
        }
        acc
    }

    /// Bilinear component inner product `sum_I a_I b_I` (no `p!`).
    pub fn dot(&self, o: &Form) -> Scalar {
        self.check_same(o);
        self.comps
            .iter()
            .filter_map(|(k, v)| o.comps.get(k).map(|w| v * w))
            .sum()
    }

    /// Hermitian component inner product `sum_I a_I conj(b_I)`.
    pub fn inner(&self, o: &Form) -> Scalar {
        self.dot(&o.conj())
    }

    /// Pull-back by an endomorphism: `(A^* f)(X_1,...) = f(A X_1, ...)`.
    pub fn pullback(&self, a: &EndoField) -> Form {
        let mut out = Form::zero(self.dim, self.degree);
        for idx in combinations(self.dim, self.degree) {
            let vs: Vec<Vec<Scalar>> = idx.iter().map(|&i| a.column(i)).collect();
            out.set(&idx, self.eval(&vs));
        }
        out
    }
}

impl Form {
    /// Natural action of a connection with matrix `m` (entry `(k, j)` the
    /// `e_k` component of `∇ e_j`): `(∇α)(Y_1,..) = -Σ α(.., ∇Y_a, ..)`.
    pub fn covariant(&self, m: &Mat) -> Form {
        let n = self.dim;
        let mut out = Form::zero(n, self.degree);
        for (idx, x) in &self.comps {
            // e^j picks up -Σ_k m_{jk} e^k
            for pos in 0..idx.len() {
                let j = idx[pos];
                for k in 0..n {
                    let c = m.get(j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let mut nidx = idx.clone();
                    nidx[pos] = k;
                    out.add_at(&nidx, &-(x * c));
                }
            }
        }
        out
    }
}

/// Exact determinant by cofactor expansion (matrices here are tiny).
pub fn det(m: &Mat) -> Scalar {
    let n = m.rows();
    match n {
        0 => Scalar::one(),
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0),
        _ => {
            let mut acc = Scalar::zero();
            for c in 0..n {
                let a = m.get(0, c);
                if a.is_zero() {
                    continue;
                }
                let minor = Mat::from_fn(n - 1, n - 1, |r, cc| {
                    m.get(r + 1, if cc < c { cc } else { cc + 1 }).clone()
                });
                let t = a * &det(&minor);
                if c % 2 == 0 {
                    acc += &t;
                } else {
                    acc -= &t;
                }
            }
            acc
        }
    }
}

/// Exterior derivative of an invariant form:
/// `dα(X_0..X_p) = Σ_{a<b} (-1)^{a+b} α([X_a,X_b], X_0..^a..^b..X_p)`.
pub fn exterior_d(spec: &FrameSpec, f: &Form) -> Form {
    let n = spec.dim();
    assert_eq!(f.dim(), n);
    let p = f.degree();
    let mut out = Form::zero(n, p + 1);
    if p >= n {
        return out;
    }
    for idx in combinations(n, p + 1) {
        let mut acc = Scalar::zero();
        for a in 0..=p {
            for b in a + 1..=p {
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != a && *q != b)
                    .map(|(_, &i)| i)
                    .collect();
                let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                for m in 0..n {
                    let c = spec.c(idx[a], idx[b], m);
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = vec![m];
                    args.extend_from_slice(&rest);
                    let v = f.get(&args);
                    if !v.is_zero() {
                        acc += &signed(&(c * &v), sign);
                    }
                }
            }
        }
        out.set(&idx, acc);
    }
    out
}

/// Hodge star with `α ∧ ⋆β = <α,β> dv` (complex linear).
pub fn hodge_star(spec: &FrameSpec, f: &Form) -> Form {
    let n = spec.dim();
    let mut out = Form::zero(n, n - f.degree());
    for (k, v) in f.terms() {
        let comp: Vec<usize> = (0..n).filter(|i| !k.contains(i)).collect();
        let full: Vec<usize> = k.iter().chain(comp.iter()).copied().collect();
        let (_, s) = sort_with_sign(&full).expect("disjoint indices");
        out.add_at(&comp, &signed(v, s * spec.orientation()));
    }
    out
}

/// Levi-Civita coefficients `Γ_{ijk} = g(D_{e_i} e_j, e_k)`.
pub fn levi_civita(spec: &FrameSpec) -> Tensor3 {
    let half = Scalar::from_ratio(1, 2);
    Tensor3::from_fn(spec.dim(), |i, j, k| {
        let v = spec.c(i, j, k) - spec.c(j, k, i) + spec.c(k, i, j);
        &v * &half
    })
}

/// Matrices `M_i` with entry `(k, j)` equal to `g(∇_{e_i} e_j, e_k)`, read from
/// coefficients `t[i][j][k]`.
pub fn connection_matrices(t: &Tensor3) -> Vec<Mat> {
    let n = t.dim();
    (0..n)
        .map(|i| Mat::from_fn(n, n, |k, j| t.get(i, j, k).clone()))
        .collect()
}

/// `F(e_i, e_j) = [M_i, M_j] - Σ_k c^k_{ij} M_k` on invariant sections.
pub fn curvature_from_matrices(spec: &FrameSpec, m: &[Mat]) -> Vec<Vec<Mat>> {
    let n = spec.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut f = m[i].commutator(&m[j]);
                    for (k, mk) in m.iter().enumerate() {
                        let c = spec.c(i, j, k);
                        if !c.is_zero() {
                            f = &f - &mk.scale(c);
                        }
                    }
                    f
                })
                .collect()
        })
        .collect()
}

/// `s = Σ_{i,j} g(R(e_i,e_j)e_j, e_i)` for a curvature array.
pub fn scalar_from_curvature(f: &[Vec<Mat>]) -> Scalar {
    let n = f.len();
    let mut s = Scalar::zero();
    for i in 0..n {
        for j in 0..n {
            s += f[i][j].get(i, j);
        }
    }
    s
}

pub fn scalar_curvature(spec: &FrameSpec) -> Scalar {
    let m = connection_matrices(&levi_civita(spec));
    scalar_from_curvature(&curvature_from_matrices(spec, &m))
}

/// `(L_X J) Y = [X, JY] - J[X, Y]` for `X = e_x`.
pub fn lie_derivative_endo(spec: &FrameSpec, x: usize, j: &EndoField) -> EndoField {
    let ad = spec.ad(x);
    &(&ad * j) - &(j * &ad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis3() -> FrameSpec {
        FrameSpec::new(3, &[(1, 2, 0, Scalar::from_int(-1))], 1).unwrap()
    }

    #[test]
    fn heisenberg_d_eta() {
        let spec = heis3();
        let de0 = exterior_d(&spec, &Form::basis(3, &[0]));
        assert_eq!(de0, Form::basis(3, &[1, 2]));
        assert!(exterior_d(&spec, &Form::basis(3, &[1, 2])).is_zero());
        assert!(exterior_d(&spec, &Form::constant(3, Scalar::from_int(5))).is_zero());
        assert!(exterior_d(&spec, &spec.volume_form()).is_zero());
    }

    #[test]
    fn heisenberg_christoffels() {
        let g = levi_civita(&heis3());
        assert_eq!(g.get(1, 2, 0), &Scalar::from_ratio(-1, 2));
        assert_eq!(g.get(0, 1, 2), &Scalar::from_ratio(1, 2));
        assert!(levi_civita(&FrameSpec::abelian(3)).is_zero());
    }

    #[test]
    fn heisenberg_scalar_curvature() {
        assert_eq!(scalar_curvature(&heis3()), Scalar::from_ratio(-1, 2));
        assert!(scalar_curvature(&FrameSpec::abelian(4)).is_zero());
    }

    #[test]
    fn star_in_dimension_three() {
        let spec = heis3();
        assert_eq!(
            hodge_star(&spec, &Form::basis(3, &[0])),
            Form::basis(3, &[1, 2])
        );
        assert_eq!(
            hodge_star(&spec, &Form::constant(3, Scalar::one())),
            Form::basis(3, &[0, 1, 2])
        );
        assert_eq!(
            hodge_star(&spec, &Form::basis(3, &[1, 2])),
            Form::basis(3, &[0])
        );
    }

    #[test]
    fn jacobi_is_enforced() {
        // [e0,e1] = e2, [e1,e2] = e0, [e0,e2] = e0 fails Jacobi
        let bad = FrameSpec::new(
            3,
            &[
                (0, 1, 2, Scalar::one()),
                (1, 2, 0, Scalar::one()),
                (0, 2, 0, Scalar::one()),
            ],
            1,
        );
        assert!(matches!(bad, Err(FrameError::Jacobi { .. })));
    }

    #[test]
    fn sign_sorting() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn wedge_and_interior() {
        let a = Form::basis(3, &[0]);
        let b = Form::basis(3, &[1]);
        assert_eq!(a.wedge(&b), Form::basis(3, &[0, 1]));
        assert_eq!(b.wedge(&a), Form::basis(3, &[0, 1]).neg());
        let w = Form::basis(3, &[0, 1]);
        assert_eq!(w.interior(&unit(3, 1)), Form::basis(3, &[0]).neg());
        assert_eq!(w.eval(&[unit(3, 0), unit(3, 1)]), Scalar::one());
    }
}
