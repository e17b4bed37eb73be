//! Lie superalgebras assembled from coordinate data, and the reverse
//! direction: recovering coordinates from a graded algebra.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check::Check;
use crate::coordalg::AssocSuperalgebra;
use crate::error::{Error, Result};
use crate::homspaces::{hom_basis, GModule};
use crate::lie::{homogeneous_parity, Embedding, GradedAlgebra, LieSuperalgebra};
use crate::linalg::{axpy, is_zero_vec, rref_coordinates, Field, Matrix};
use crate::roots::LeftInverse;
use crate::superclassical::{casimir_matrix, star_product, BlockShape, ClassicalAlgebra, ClassicalKind};

/// The data `(A, D, φ, ⟨·|·⟩)` from which `L = (g ⊗ A) ⊕ D` is built.
///
/// `action[t]` is the matrix of `d_t` acting on `A`; `form[i * dim A + j]`
/// holds the `D`-coordinates of `⟨a_i | a_j⟩`.
#[derive(Clone, Debug)]
pub struct CoordinateData<F> {
    m: usize,
    n: usize,
    a: AssocSuperalgebra<F>,
    d: LieSuperalgebra<F>,
    action: Vec<Matrix<F>>,
    form: Vec<Vec<F>>,
}

impl<F: Field> CoordinateData<F> {
    /// Validates `d 1 = 0`, parity of the action and of the form, and super
    /// skew symmetry of the form.
    pub fn new(
        m: usize,
        n: usize,
        a: AssocSuperalgebra<F>,
        d: LieSuperalgebra<F>,
        action: Vec<Matrix<F>>,
        form: Vec<Vec<F>>,
    ) -> Result<Self> {
        let (na, nd) = (a.dim(), d.dim());
        if action.len() != nd {
            return Err(Error::DimensionMismatch {
                expected: nd,
                found: action.len(),
            });
        }
        for (t, phi) in action.iter().enumerate() {
            if phi.rows() != na || phi.cols() != na {
                return Err(Error::Shape(format!("action of d{t} is not {na} x {na}")));
            }
            if !phi.is_zero() && a.map_parity(phi) != Some(d.parity()[t]) {
                return Err(Error::Invariant(format!("action of d{t} does not have the parity of d{t}")));
            }
            if !is_zero_vec(&phi.mul_vec(a.unit())?) {
                return Err(Error::Invariant(format!("d{t} does not annihilate the unit")));
            }
        }
        if form.len() != na * na {
            return Err(Error::DimensionMismatch {
                expected: na * na,
                found: form.len(),
            });
        }
        let pa = a.parity();
        for i in 0..na {
            for j in 0..na {
                let v = &form[i * na + j];
                if v.len() != nd {
                    return Err(Error::DimensionMismatch {
                        expected: nd,
                        found: v.len(),
                    });
                }
                for (t, c) in v.iter().enumerate() {
                    if !c.is_zero() && d.parity()[t] != (pa[i] + pa[j]) % 2 {
                        return Err(Error::ParityViolation { i, j, k: t });
                    }
                }
                let s = F::sign_of(pa[i] * pa[j]);
                let w = &form[j * na + i];
                if v.iter().zip(w).any(|(x, y)| *x != -(s.clone() * y.clone())) {
                    return Err(Error::Invariant(format!("form is not super skew symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self {
            m,
            n,
            a,
            d,
            action,
            form,
        })
    }

    /// `A` with `D = 0`.
    pub fn without_d(m: usize, n: usize, a: AssocSuperalgebra<F>) -> Result<Self> {
        let na = a.dim();
        let d = LieSuperalgebra::from_fn(Vec::new(), |_, _| Vec::new())?;
        Self::new(m, n, a, d, Vec::new(), vec![Vec::new(); na * na])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coord_algebra(&self) -> &AssocSuperalgebra<F> {
        &self.a
    }

    pub fn d_algebra(&self) -> &LieSuperalgebra<F> {
        &self.d
    }

    pub fn action(&self) -> &[Matrix<F>] {
        &self.action
    }

    pub fn form(&self) -> &[Vec<F>] {
        &self.form
    }

    pub fn form_basis(&self, i: usize, j: usize) -> &[F] {
        &self.form[i * self.a.dim() + j]
    }

    /// `⟨u | v⟩` for coordinate vectors.
    pub fn form_value(&self, u: &[F], v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.d.dim()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    axpy(&mut out, &(ui.clone() * vj.clone()), self.form_basis(i, j));
                }
            }
        }
        out
    }

    /// Matrix of the action of a coordinate vector of `D`.
    pub fn action_of(&self, d: &[F]) -> Matrix<F> {
        let na = self.a.dim();
        let mut out = Matrix::zeros(na, na);
        for (t, c) in d.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.action[t]).expect("square");
            }
        }
        out
    }

    /// Whether `d ↦ φ(d)` is injective.
    pub fn action_is_faithful(&self) -> bool {
        let flat: Vec<Vec<F>> = self.action.iter().map(|m| m.entries().to_vec()).collect();
        let na = self.a.dim();
        flat.is_empty() || Matrix::from_rows(na * na, &flat).expect("uniform").rank() == flat.len()
    }

    /// Rebases `D` onto the RREF of the flattened action matrices when the
    /// action is faithful; otherwise returns the data unchanged. Two faithful
    /// data sets related by a change of basis of `D` canonicalize equally.
    pub fn canonicalize(&self) -> Result<Self> {
        if self.d.dim() == 0 || !self.action_is_faithful() {
            return Ok(self.clone());
        }
        let na = self.a.dim();
        let flat: Vec<Vec<F>> = self.action.iter().map(|m| m.entries().to_vec()).collect();
        let (r, piv) = Matrix::from_rows(na * na, &flat)?.row_space_basis();
        // old d_t = sum_u s[t][u] d'_u
        let s: Vec<Vec<F>> = flat
            .iter()
            .map(|f| rref_coordinates(&r, &piv, f).expect("row space"))
            .collect();
        let nd = r.rows();
        let action: Vec<Matrix<F>> = (0..nd)
            .map(|u| Matrix::from_vec(na, na, r.row_vec(u)))
            .collect::<Result<_>>()?;
        let parity: Vec<u8> = action
            .iter()
            .map(|m| self.a.map_parity(m).ok_or_else(|| Error::Invariant("inhomogeneous derivation".into())))
            .collect::<Result<_>>()?;
        let d = derivation_algebra(&action, &parity, &r, &piv)?;
        let form = self
            .form
            .iter()
            .map(|v| {
                let mut w = vec![F::zero(); nd];
                for (t, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        axpy(&mut w, c, &s[t]);
                    }
                }
                w
            })
            .collect();
        Self::new(self.m, self.n, self.a.clone(), d, action, form)
    }

    /// Equality of all structure constants, ignoring labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.m == other.m
            && self.n == other.n
            && self.a.parity() == other.a.parity()
            && self.a.unit() == other.a.unit()
            && self.a.quadruples() == other.a.quadruples()
            && self.d.parity() == other.d.parity()
            && self.d.quadruples() == other.d.quadruples()
            && self.action == other.action
            && self.form == other.form
    }
}

/// The Lie superalgebra of derivations spanned by `action`, whose flattened
/// matrices are the rows of the RREF basis `(r, piv)`.
fn derivation_algebra<F: Field>(
    action: &[Matrix<F>],
    parity: &[u8],
    r: &Matrix<F>,
    piv: &[usize],
) -> Result<LieSuperalgebra<F>> {
    let mut err = None;
    let d = LieSuperalgebra::from_fn(parity.to_vec(), |s, t| {
        let st = action[s].mul(&action[t]).expect("square");
        let ts = action[t].mul(&action[s]).expect("square");
        let c = st.sub(&ts.scale(&F::sign_of(parity[s] * parity[t]))).expect("square");
        rref_coordinates(r, piv, c.entries()).unwrap_or_else(|| {
            err = Some(Error::Invariant("derivations are not closed under the bracket".into()));
            vec![F::zero(); parity.len()]
        })
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(d),
    }
}

fn tensor_labels<F: Field>(g: &ClassicalAlgebra<F>, a: &AssocSuperalgebra<F>) -> Vec<String> {
    g.labels()
        .iter()
        .flat_map(|x| (0..a.dim()).map(move |k| format!("{x}⊗{}", a.label(k))))
        .collect()
}

/// Images of `x ⊗ 1` for the basis of `g`, in a space whose first
/// `dim g * dim A` coordinates are `x_b ⊗ a_k` at `b * dim A + k`.
fn unit_embedding<F: Field>(g: &Arc<ClassicalAlgebra<F>>, a: &AssocSuperalgebra<F>, total: usize) -> Result<Embedding<F>> {
    let na = a.dim();
    let images = (0..g.dim())
        .map(|b| {
            let mut v = vec![F::zero(); total];
            for (k, u) in a.unit().iter().enumerate() {
                v[b * na + k] = u.clone();
            }
            v
        })
        .collect();
    Embedding::new(g.clone(), images)
}

/// `L = (sl(m+1|n+1) ⊗ A) ⊕ D` with the bracket
///
/// ```text
/// [f⊗a, g⊗a'] = (-1)^{āḡ} ([f,g] ⊗ ½ a∘a' + f∗g ⊗ ½ [a,a'] + str(fg) ⟨a|a'⟩)
/// [d, f⊗a]    = (-1)^{d̄f̄} f ⊗ da
/// ```
///
/// and `[d, d']` from `D`. The basis is `x_b ⊗ a_k` at `b * dim A + k`
/// followed by the basis of `D`. Fails if the result is not
/// super-anticommutative or not graded.
pub fn assemble_mn<F: Field>(cd: &CoordinateData<F>) -> Result<GradedAlgebra<F>> {
    let (m, n) = (cd.m, cd.n);
    if m <= n {
        return Err(Error::Shape(format!("assembly needs m > n, got ({m}, {n})")));
    }
    let g = Arc::new(ClassicalAlgebra::type_a(m, n)?);
    let (gd, na, nd) = (g.dim(), cd.a.dim(), cd.d.dim());
    let base = gd * na;
    let total = base + nd;
    let gp = g.parity();
    let pa = cd.a.parity();

    let brackets: Vec<Vec<F>> = (0..gd * gd).map(|x| g.bracket_coords(x / gd, x % gd)).collect();
    let stars: Vec<Vec<F>> = (0..gd * gd)
        .map(|x| {
            let s = star_product(&g.basis()[x / gd], &g.basis()[x % gd], m, n)?;
            g.coords(&s)
        })
        .collect::<Result<_>>()?;
    let strs: Vec<F> = (0..gd * gd).map(|x| g.form(x / gd, x % gd)).collect();
    let half = F::from_ratio(1, 2);
    let circles: Vec<Vec<F>> = (0..na * na).map(|x| cd.a.circle_basis(x / na, x % na)).collect();
    let abrackets: Vec<Vec<F>> = (0..na * na).map(|x| cd.a.bracket_basis(x / na, x % na)).collect();

    let mut parity = Vec::with_capacity(total);
    for &p in gp {
        for &q in pa {
            parity.push((p + q) % 2);
        }
    }
    parity.extend_from_slice(cd.d.parity());

    // [d_t, x_c ⊗ a_j]
    let d_on = |t: usize, c: usize, j: usize, out: &mut Vec<F>| {
        let s = F::sign_of(cd.d.parity()[t] * gp[c]);
        for k in 0..na {
            let v = &cd.action[t][(k, j)];
            if !v.is_zero() {
                out[c * na + k] = out[c * na + k].clone() + s.clone() * v.clone();
            }
        }
    };

    let alg = LieSuperalgebra::from_fn(parity.clone(), |x, y| {
        let mut out = vec![F::zero(); total];
        match (x < base, y < base) {
            (true, true) => {
                let (b, i, c, j) = (x / na, x % na, y / na, y % na);
                let s = F::sign_of(pa[i] * gp[c]);
                let bc = b * gd + c;
                let ij = i * na + j;
                for (e, coef) in brackets[bc].iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    for (k, v) in circles[ij].iter().enumerate() {
                        if !v.is_zero() {
                            let idx = e * na + k;
                            out[idx] = out[idx].clone() + s.clone() * half.clone() * coef.clone() * v.clone();
                        }
                    }
                }
                for (e, coef) in stars[bc].iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    for (k, v) in abrackets[ij].iter().enumerate() {
                        if !v.is_zero() {
                            let idx = e * na + k;
                            out[idx] = out[idx].clone() + s.clone() * half.clone() * coef.clone() * v.clone();
                        }
                    }
                }
                if !strs[bc].is_zero() {
                    for (t, v) in cd.form_basis(i, j).iter().enumerate() {
                        if !v.is_zero() {
                            out[base + t] = out[base + t].clone() + s.clone() * strs[bc].clone() * v.clone();
                        }
                    }
                }
            }
            (false, true) => d_on(x - base, y / na, y % na, &mut out),
            (true, false) => {
                d_on(y - base, x / na, x % na, &mut out);
                let s = -F::sign_of(parity[x] * parity[y]);
                for v in out.iter_mut() {
                    *v = s.clone() * v.clone();
                }
            }
            (false, false) => {
                for (u, v) in cd.d.bracket_basis(x - base, y - base) {
                    out[base + u] = v.clone();
                }
            }
        }
        out
    })?;
    let mut labels = tensor_labels(&g, &cd.a);
    labels.extend((0..nd).map(|t| cd.d.label(t)));
    let algebra = alg.with_labels(labels)?;
    let embedding = unit_embedding(&g, &cd.a, total)?;
    Ok(GradedAlgebra { algebra, embedding })
}

/// `L = (psl(n+1|n+1) ⊗ A) ⊕ D` with `D` central and
/// `[f⊗a, g⊗a'] = (-1)^{āḡ} ([f,g] ⊗ aa' + str(fg) ⟨a|a'⟩)`, where `str` is
/// evaluated on the canonical representatives. `form[i * dim A + j]` gives
/// `⟨a_i | a_j⟩` in `D`-coordinates.
///
/// When `A` is not supercommutative the formula is not super-anticommutative
/// and an error is returned.
pub fn assemble_nn<F: Field>(
    n: usize,
    a: &AssocSuperalgebra<F>,
    d_parity: Vec<u8>,
    form: &[Vec<F>],
) -> Result<GradedAlgebra<F>> {
    let g = Arc::new(ClassicalAlgebra::type_a(n, n)?);
    let (gd, na, nd) = (g.dim(), a.dim(), d_parity.len());
    if form.len() != na * na || form.iter().any(|v| v.len() != nd) {
        return Err(Error::Shape(format!("form must be {na} x {na} vectors of length {nd}")));
    }
    let base = gd * na;
    let total = base + nd;
    let gp = g.parity();
    let pa = a.parity();
    let brackets: Vec<Vec<F>> = (0..gd * gd).map(|x| g.bracket_coords(x / gd, x % gd)).collect();
    let strs: Vec<F> = (0..gd * gd).map(|x| g.form(x / gd, x % gd)).collect();
    let mut parity = Vec::with_capacity(total);
    for &p in gp {
        for &q in pa {
            parity.push((p + q) % 2);
        }
    }
    parity.extend_from_slice(&d_parity);
    let alg = LieSuperalgebra::from_fn(parity, |x, y| {
        let mut out = vec![F::zero(); total];
        if x >= base || y >= base {
            return out;
        }
        let (b, i, c, j) = (x / na, x % na, y / na, y % na);
        let s = F::sign_of(pa[i] * gp[c]);
        let bc = b * gd + c;
        let prod = a.product_basis(i, j);
        for (e, coef) in brackets[bc].iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (k, v) in prod {
                let idx = e * na + k;
                out[idx] = out[idx].clone() + s.clone() * coef.clone() * v.clone();
            }
        }
        if !strs[bc].is_zero() {
            for (t, v) in form[i * na + j].iter().enumerate() {
                if !v.is_zero() {
                    out[base + t] = out[base + t].clone() + s.clone() * strs[bc].clone() * v.clone();
                }
            }
        }
        out
    })?;
    let mut labels = tensor_labels(&g, a);
    labels.extend((0..nd).map(|t| format!("c{t}")));
    let algebra = alg.with_labels(labels)?;
    let embedding = unit_embedding(&g, a, total)?;
    Ok(GradedAlgebra { algebra, embedding })
}

/// The data of `𝔏(A)`: `D = ad [A, A]` acting naturally, with
/// `⟨a | a'⟩ = ad [a, a'] / (m - n)`.
///
/// The basis of `D` is the RREF of the flattened matrices `ad c` for
/// `c ∈ [A, A]`.
pub fn model_la_data<F: Field>(a: &AssocSuperalgebra<F>, m: usize, n: usize) -> Result<CoordinateData<F>> {
    if m <= n {
        return Err(Error::Shape(format!("𝔏(A) needs m > n, got ({m}, {n})")));
    }
    let na = a.dim();
    let cs = a.commutator_subspace();
    let (r, piv) = (cs.ad_image, cs.ad_pivots);
    let nd = r.rows();
    let action: Vec<Matrix<F>> = (0..nd)
        .map(|u| Matrix::from_vec(na, na, r.row_vec(u)))
        .collect::<Result<_>>()?;
    let parity: Vec<u8> = action
        .iter()
        .map(|m| a.map_parity(m).ok_or_else(|| Error::Invariant("inhomogeneous inner derivation".into())))
        .collect::<Result<_>>()?;
    let d = derivation_algebra(&action, &parity, &r, &piv)?;
    let d = d.with_labels((0..nd).map(|t| format!("d{t}")).collect())?;
    let scale = F::one() / F::from_i64(m as i64 - n as i64);
    let mut form = Vec::with_capacity(na * na);
    for i in 0..na {
        for j in 0..na {
            let ad = a.ad_matrix(&a.bracket_basis(i, j));
            let c = rref_coordinates(&r, &piv, ad.entries())
                .ok_or_else(|| Error::Invariant("ad [a, a'] outside ad [A, A]".into()))?;
            form.push(c.into_iter().map(|x| x * scale.clone()).collect());
        }
    }
    CoordinateData::new(m, n, a.clone(), d, action, form)
}

/// `𝔏(A) = (sl(m+1|n+1) ⊗ A) ⊕ ad [A, A]`.
pub fn build_model_la<F: Field>(a: &AssocSuperalgebra<F>, m: usize, n: usize) -> Result<GradedAlgebra<F>> {
    assemble_mn(&model_la_data(a, m, n)?)
}

/// `sl(p|q)(A) = [gl(p|q)(A), gl(p|q)(A)]`, where `gl(p|q)(A) = M(p|q) ⊗ A`
/// carries the supercommutator of `(E_ij⊗a)(E_kl⊗b) = δ_jk (-1)^{ā|E_kl|} E_il⊗ab`.
///
/// The basis is the RREF basis of the derived subalgebra in the coordinates
/// `E_ij ⊗ a_k` at `(i * (p+q) + j) * dim A + k`; `sl(p|q)` is embedded as
/// `x ↦ x ⊗ 1`.
pub fn matrix_sl_a<F: Field>(p: usize, q: usize, a: &AssocSuperalgebra<F>) -> Result<GradedAlgebra<F>> {
    let shape = BlockShape::new(p, q)?;
    let big_n = shape.size();
    let na = a.dim();
    let total = big_n * big_n * na;
    let pa = a.parity();
    let unit_par = |i: usize, j: usize| shape.unit_parity(i, j);
    let mut parity = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    for i in 0..big_n {
        for j in 0..big_n {
            for k in 0..na {
                parity.push((unit_par(i, j) + pa[k]) % 2);
                labels.push(format!("E{},{}⊗{}", i + 1, j + 1, a.label(k)));
            }
        }
    }
    let gl = LieSuperalgebra::from_fn(parity.clone(), |x, y| {
        let (ij, ka) = (x / na, x % na);
        let (kl, kb) = (y / na, y % na);
        let (i, j) = (ij / big_n, ij % big_n);
        let (k, l) = (kl / big_n, kl % big_n);
        let mut out = vec![F::zero(); total];
        if j == k {
            let s = F::sign_of(pa[ka] * unit_par(k, l));
            for (c, v) in a.product_basis(ka, kb) {
                let idx = (i * big_n + l) * na + c;
                out[idx] = out[idx].clone() + s.clone() * v.clone();
            }
        }
        if l == i {
            let s = -F::sign_of(pa[kb] * unit_par(i, j)) * F::sign_of(parity[x] * parity[y]);
            for (c, v) in a.product_basis(kb, ka) {
                let idx = (k * big_n + j) * na + c;
                out[idx] = out[idx].clone() + s.clone() * v.clone();
            }
        }
        out
    })?
    .with_labels(labels)?;
    let (basis, pivots) = gl.derived_span();
    let sl = gl.subalgebra(&basis, &pivots)?;
    let sl_labels: Vec<String> = pivots.iter().map(|&c| gl.label(c)).collect();
    let algebra = sl.with_labels(sl_labels)?;
    let g = Arc::new(ClassicalAlgebra::new(ClassicalKind::Sl, shape)?);
    let images = g
        .basis()
        .iter()
        .map(|x| {
            let mut v = vec![F::zero(); total];
            for i in 0..big_n {
                for j in 0..big_n {
                    let e: &F = x.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    for (k, u) in a.unit().iter().enumerate() {
                        v[(i * big_n + j) * na + k] = e.clone() * u.clone();
                    }
                }
            }
            rref_coordinates(&basis, &pivots, &v).ok_or_else(|| Error::Invariant("sl ⊗ 1 outside the derived algebra".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let embedding = Embedding::new(g, images)?;
    Ok(GradedAlgebra { algebra, embedding })
}

/// The conditions under which the assembled bracket satisfies the Jacobi
/// identity, each with a witness on failure.
#[derive(Clone, Debug)]
pub struct Theorem310Report {
    /// `A` is associative (the unit is enforced on construction).
    pub associative: Check<String>,
    /// `D` is a Lie superalgebra acting on `A` by superderivations.
    pub derivations: Check<String>,
    /// `[d, ⟨a|a'⟩] = ⟨da|a'⟩ + (-1)^{d̄ā} ⟨a|da'⟩`.
    pub form_invariant: Check<String>,
    /// `Σ_cyc (-1)^{ā1ā3} ⟨a1 | a2a3⟩ = 0`.
    pub cyclic: Check<String>,
    /// `⟨a1|a2⟩ a3 = [[a1, a2], a3] / (m - n)`.
    pub form_action: Check<String>,
    /// `D = ⟨A | A⟩`.
    pub form_spans_d: bool,
}

impl Theorem310Report {
    pub fn conditions(&self) -> [(&'static str, &Check<String>); 5] {
        [
            ("associative", &self.associative),
            ("derivations", &self.derivations),
            ("form_invariant", &self.form_invariant),
            ("cyclic", &self.cyclic),
            ("form_action", &self.form_action),
        ]
    }

    /// All five conditions hold (the spanning flag is reported separately).
    pub fn all_hold(&self) -> bool {
        self.conditions().iter().all(|(_, c)| c.holds())
    }
}

pub fn theorem310_check<F: Field>(cd: &CoordinateData<F>) -> Result<Theorem310Report> {
    if cd.m <= cd.n {
        return Err(Error::Shape(format!("the conditions need m > n, got ({}, {})", cd.m, cd.n)));
    }
    let a = &cd.a;
    let d = &cd.d;
    let (na, nd) = (a.dim(), d.dim());
    let pa = a.parity();
    let pd = d.parity();
    let e = |i: usize| a.basis_vector(i);
    let de = |t: usize| {
        let mut v = vec![F::zero(); nd];
        v[t] = F::one();
        v
    };

    let associative = match a.check_associative() {
        Check::Holds => Check::Holds,
        Check::Fails(w) => Check::Fails(format!("associator of {:?} is nonzero", w.triple)),
    };

    let derivations = (|| {
        if let Check::Fails(w) = d.jacobi_check(&Default::default()) {
            return Check::Fails(format!("D violates Jacobi at {:?}", w.triple));
        }
        for t in 0..nd {
            if let Check::Fails((i, j)) = a.check_superderivation(&cd.action[t], pd[t]) {
                return Check::Fails(format!("d{t} is not a superderivation on ({i}, {j})"));
            }
        }
        for s in 0..nd {
            for t in 0..nd {
                let lhs = cd.action_of(&d.bracket(&de(s), &de(t)));
                let st = cd.action[s].mul(&cd.action[t]).expect("square");
                let ts = cd.action[t].mul(&cd.action[s]).expect("square");
                let rhs = st.sub(&ts.scale(&F::sign_of(pd[s] * pd[t]))).expect("square");
                if lhs != rhs {
                    return Check::Fails(format!("action is not a representation on (d{s}, d{t})"));
                }
            }
        }
        Check::Holds
    })();

    let form_invariant = (|| {
        for t in 0..nd {
            for i in 0..na {
                for j in 0..na {
                    let lhs = d.bracket(&de(t), cd.form_basis(i, j));
                    let dai = cd.action[t].column(i);
                    let daj = cd.action[t].column(j);
                    let mut rhs = cd.form_value(&dai, &e(j));
                    axpy(&mut rhs, &F::sign_of(pd[t] * pa[i]), &cd.form_value(&e(i), &daj));
                    if lhs != rhs {
                        return Check::Fails(format!("form is not invariant under d{t} on ({i}, {j})"));
                    }
                }
            }
        }
        Check::Holds
    })();

    let cyclic = (|| {
        for i in 0..na {
            for j in 0..na {
                for k in 0..na {
                    let mut v = cd.form_value(&e(i), &a.product_basis_dense(j, k));
                    for x in v.iter_mut() {
                        *x = F::sign_of(pa[i] * pa[k]) * x.clone();
                    }
                    axpy(&mut v, &F::sign_of(pa[j] * pa[i]), &cd.form_value(&e(j), &a.product_basis_dense(k, i)));
                    axpy(&mut v, &F::sign_of(pa[k] * pa[j]), &cd.form_value(&e(k), &a.product_basis_dense(i, j)));
                    if !is_zero_vec(&v) {
                        return Check::Fails(format!("cyclic sum is nonzero on ({i}, {j}, {k})"));
                    }
                }
            }
        }
        Check::Holds
    })();

    let scale = F::one() / F::from_i64(cd.m as i64 - cd.n as i64);
    let form_action = (|| {
        for i in 0..na {
            for j in 0..na {
                let act = cd.action_of(cd.form_basis(i, j));
                let br = a.bracket_basis(i, j);
                for k in 0..na {
                    let lhs = act.column(k);
                    let rhs: Vec<F> = a.bracket(&br, &e(k)).into_iter().map(|x| x * scale.clone()).collect();
                    if lhs != rhs {
                        return Check::Fails(format!("⟨a{i}|a{j}⟩ a{k} != [[a{i}, a{j}], a{k}] / (m - n)"));
                    }
                }
            }
        }
        Check::Holds
    })();

    let form_spans_d = nd == 0 || {
        let rows: Vec<Vec<F>> = cd.form.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
        !rows.is_empty() && Matrix::from_rows(nd, &rows)?.rank() == nd
    };

    Ok(Theorem310Report {
        associative,
        derivations,
        form_invariant,
        cyclic,
        form_action,
        form_spans_d,
    })
}

/// Recovers `(A, D, φ, ⟨·|·⟩)` from `L` graded by an embedded
/// `sl(m+1|n+1)`, `m > n`.
///
/// `A` is the multiplicity space of the adjoint isotype, with basis read off
/// from the RREF of the `E_{1,2}`-components; products come from
/// `[E_{1,2} ⊗ a, E_{2,1} ⊗ a']` split along `[E_{1,2}, E_{2,1}]`,
/// `E_{1,2} ∗ E_{2,1}` and `D = ker C`. The result is canonicalized.
pub fn coordinatize<F: Field>(l: &LieSuperalgebra<F>, emb: &Embedding<F>) -> Result<CoordinateData<F>> {
    if let Check::Fails(msg) = emb.verify(l) {
        return Err(Error::Invariant(format!("invalid embedding: {msg}")));
    }
    let g = emb.algebra();
    let shape = g.shape();
    if g.kind() != ClassicalKind::Sl || shape.p() <= shape.q() {
        return Err(Error::Shape(format!("coordinatization needs sl(p|q) with p > q, got {} {}", g.kind(), shape)));
    }
    let (m, n) = (shape.p() - 1, shape.q() - 1);
    let dl = l.dim();
    let gd = g.dim();
    let module = emb.module(l)?;
    let c = casimir_matrix(g, &module)?;
    let shift = c.sub(&Matrix::identity(dl).scale(&F::from_i64(m as i64 - n as i64)))?;
    if !c.mul(&shift)?.is_zero() {
        return Err(Error::Decomposition(
            "the Casimir operator does not split L into adjoint and trivial parts".into(),
        ));
    }
    let kernel = c.kernel_basis();
    let nd = kernel.len();
    let (k, kpiv) = if nd == 0 {
        (Matrix::zeros(0, dl), Vec::new())
    } else {
        Matrix::from_rows(dl, &kernel)?.row_space_basis()
    };

    let homs = hom_basis(&GModule::adjoint(g.clone()), &module)?;
    let na = homs.len();
    if na == 0 || dl != gd * na + nd {
        return Err(Error::Decomposition(format!(
            "dim L = {dl} is not dim g * {na} + {nd}; L has other isotypic components"
        )));
    }
    let gp = g.parity();
    let plain: Vec<Matrix<F>> = homs
        .iter()
        .map(|h| Matrix::from_fn(dl, gd, |r, b| F::sign_of(gp[b] * h.parity) * h.matrix[(r, b)].clone()))
        .collect();
    let e12 = g.unit_index(0, 1);
    let e21 = g.unit_index(1, 0);
    let tops: Vec<Vec<F>> = plain.iter().map(|p| p.column(e12)).collect();
    let (w, wpiv) = Matrix::from_rows(dl, &tops)?.row_space_basis();
    if w.rows() != na {
        return Err(Error::Decomposition("equivariant maps are not determined by E1,2".into()));
    }
    let tops_inv = LeftInverse::new(&Matrix::from_columns(dl, &tops)?)?;
    let psi: Vec<Matrix<F>> = (0..na)
        .map(|r| {
            let coef = tops_inv.apply(w.row(r)).expect("row space");
            let mut out = Matrix::zeros(dl, gd);
            for (l_, c) in coef.iter().enumerate() {
                if !c.is_zero() {
                    out.add_scaled(c, &plain[l_]).expect("same size");
                }
            }
            out
        })
        .collect();
    let a_parity = (0..na)
        .map(|r| homogeneous_parity(w.row(r), l.parity()))
        .collect::<Result<Vec<u8>>>()?;
    let unit = rref_coordinates(&w, &wpiv, emb.image(e12))
        .ok_or_else(|| Error::Decomposition("E1,2 ⊗ 1 is outside the adjoint isotype".into()))?;

    let h1 = g.bracket_coords(e12, e21);
    let s = g.coords(&star_product(&g.basis()[e12], &g.basis()[e21], m, n)?)?;
    let mut cols: Vec<Vec<F>> = psi.iter().map(|p| p.mul_vec(&h1).expect("size")).collect();
    cols.extend(psi.iter().map(|p| p.mul_vec(&s).expect("size")));
    cols.extend((0..nd).map(|t| k.row_vec(t)));
    let split = LeftInverse::new(&Matrix::from_columns(dl, &cols)?)?;
    let mut products = Vec::with_capacity(na * na);
    let mut form = Vec::with_capacity(na * na);
    for i in 0..na {
        for j in 0..na {
            let v = l.bracket(w.row(i), &psi[j].column(e21));
            let x = split
                .apply(&v)
                .ok_or_else(|| Error::Decomposition(format!("[E1,2⊗a{i}, E2,1⊗a{j}] does not split")))?;
            products.push((0..na).map(|r| x[r].clone() + x[na + r].clone()).collect::<Vec<F>>());
            form.push(x[2 * na..].to_vec());
        }
    }
    let mut products = products.into_iter();
    let a = AssocSuperalgebra::from_fn(a_parity, unit, |_, _| products.next().expect("na * na products"))?;
    let d = l.subalgebra(&k, &kpiv)?;
    let action = (0..nd)
        .map(|t| {
            let cols = (0..na)
                .map(|r| {
                    rref_coordinates(&w, &wpiv, &l.bracket(k.row(t), w.row(r)))
                        .ok_or_else(|| Error::Decomposition("D does not preserve E1,2 ⊗ A".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_columns(na, &cols)
        })
        .collect::<Result<Vec<_>>>()?;
    CoordinateData::new(m, n, a, d, action, form)?.canonicalize()
}

/// A single `+1` perturbation of coordinate data. Form and `D`-bracket
/// entries are changed together with their super-skew partner so that the
/// perturbed data still satisfies the type invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// `c_ij^k += 1` in `A`.
    Product { i: usize, j: usize, k: usize },
    /// Entry `(r, c)` of the action matrix of `d_t`.
    Action { t: usize, r: usize, c: usize },
    /// Component `t` of `⟨a_i | a_j⟩`.
    Form { i: usize, j: usize, t: usize },
    /// `b_st^u += 1` in `D`.
    DBracket { s: usize, t: usize, u: usize },
}

impl std::fmt::Display for Mutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mutation::Product { i, j, k } => write!(f, "product c[{i},{j}][{k}] += 1"),
            Mutation::Action { t, r, c } => write!(f, "action d{t}[{r},{c}] += 1"),
            Mutation::Form { i, j, t } => write!(f, "form <a{i}|a{j}>[{t}] += 1"),
            Mutation::DBracket { s, t, u } => write!(f, "D bracket b[{s},{t}][{u}] += 1"),
        }
    }
}

impl Mutation {
    /// Applies the perturbation; fails when the result breaks a type
    /// invariant (unit axiom, `d1 = 0`, parity).
    pub fn apply<F: Field>(&self, cd: &CoordinateData<F>) -> Result<CoordinateData<F>> {
        let one = F::one();
        let a = &cd.a;
        let na = a.dim();
        let d = &cd.d;
        match *self {
            Mutation::Product { i, j, k } => {
                let mut quads = a.quadruples();
                quads.push((i, j, k, one));
                let a2 = AssocSuperalgebra::from_quadruples(a.parity().to_vec(), &quads, a.unit().to_vec())?;
                CoordinateData::new(cd.m, cd.n, a2, d.clone(), cd.action.clone(), cd.form.clone())
            }
            Mutation::Action { t, r, c } => {
                let mut action = cd.action.clone();
                let e = &mut action[t][(r, c)];
                *e = e.clone() + one;
                CoordinateData::new(cd.m, cd.n, a.clone(), d.clone(), action, cd.form.clone())
            }
            Mutation::Form { i, j, t } => {
                let p = a.parity();
                let mut form = cd.form.clone();
                form[i * na + j][t] = form[i * na + j][t].clone() + one.clone();
                if i != j {
                    let s = F::sign_of(p[i] * p[j]);
                    form[j * na + i][t] = form[j * na + i][t].clone() - s;
                }
                CoordinateData::new(cd.m, cd.n, a.clone(), d.clone(), cd.action.clone(), form)
            }
            Mutation::DBracket { s, t, u } => {
                let p = d.parity();
                let mut quads = d.quadruples();
                quads.push((s, t, u, one.clone()));
                if s != t {
                    quads.push((t, s, u, -F::sign_of(p[s] * p[t])));
                }
                let d2 = LieSuperalgebra::from_quadruples(p.to_vec(), &quads)?;
                CoordinateData::new(cd.m, cd.n, a.clone(), d2, cd.action.clone(), cd.form.clone())
            }
        }
    }
}

/// Every parity-consistent perturbation that yields valid coordinate data.
pub fn mutation_candidates<F: Field>(cd: &CoordinateData<F>) -> Vec<Mutation> {
    let pa = cd.a.parity();
    let pd = cd.d.parity();
    let (na, nd) = (pa.len(), pd.len());
    let mut out = Vec::new();
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                if pa[k] == (pa[i] + pa[j]) % 2 {
                    out.push(Mutation::Product { i, j, k });
                }
            }
        }
    }
    for t in 0..nd {
        for r in 0..na {
            for c in 0..na {
                if (pa[r] + pa[c]) % 2 == pd[t] {
                    out.push(Mutation::Action { t, r, c });
                }
            }
        }
    }
    for i in 0..na {
        for j in i..na {
            if i == j && pa[i] == 0 {
                continue;
            }
            for t in 0..nd {
                if pd[t] == (pa[i] + pa[j]) % 2 {
                    out.push(Mutation::Form { i, j, t });
                }
            }
        }
    }
    for s in 0..nd {
        for t in s..nd {
            if s == t && pd[s] == 0 {
                continue;
            }
            for u in 0..nd {
                if pd[u] == (pd[s] + pd[t]) % 2 {
                    out.push(Mutation::DBracket { s, t, u });
                }
            }
        }
    }
    out.retain(|mu| mu.apply(cd).is_ok());
    out
}

/// Up to `count` distinct valid mutations, chosen by a seeded shuffle.
pub fn seeded_mutations<F: Field>(cd: &CoordinateData<F>, count: usize, seed: u64) -> Vec<(Mutation, CoordinateData<F>)> {
    let mut cands = mutation_candidates(cd);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    cands.shuffle(&mut rng);
    cands
        .into_iter()
        .take(count)
        .map(|mu| {
            let data = mu.apply(cd).expect("candidates apply");
            (mu, data)
        })
        .collect()
}
