//! Supermatrices and the classical superalgebras `gl(p|q)`, `sl(p|q)` and
//! `psl(p|p)`.
//!
//! Indices are 0-based throughout; labels use the 1-based `E{i},{j}`
//! convention so that reports read like matrix units.

use std::fmt;

use crate::error::{Error, Result};
use crate::homspaces::GModule;
use crate::linalg::{Field, Matrix};

/// Block sizes of a `(p|q)` supermatrix.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockShape {
    p: usize,
    q: usize,
}

impl BlockShape {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Shape(format!("block sizes must be positive, got ({p}|{q})")));
        }
        Ok(Self { p, q })
    }

    /// Shape `(m+1 | n+1)` of the algebra of type `A(m,n)`.
    pub fn for_type_a(m: usize, n: usize) -> Self {
        Self { p: m + 1, q: n + 1 }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    /// Parity of the matrix unit `E_{i,j}`: even iff both indices lie in the
    /// same diagonal block.
    pub fn unit_parity(&self, i: usize, j: usize) -> u8 {
        u8::from((i < self.p) != (j < self.p))
    }

    /// Sign of row/column `i` in the supertrace.
    fn diag_sign(&self, i: usize) -> bool {
        i < self.p
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.p, self.q)
    }
}

/// A `(p+q) x (p+q)` matrix with the `Z/2` grading of its block shape.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMatrix<F> {
    shape: BlockShape,
    mat: Matrix<F>,
}

impl<F: Field> SuperMatrix<F> {
    pub fn zero(shape: BlockShape) -> Self {
        let n = shape.size();
        Self {
            shape,
            mat: Matrix::zeros(n, n),
        }
    }

    pub fn identity(shape: BlockShape) -> Self {
        Self {
            shape,
            mat: Matrix::identity(shape.size()),
        }
    }

    /// Matrix unit `E_{i,j}` (0-based).
    pub fn unit(shape: BlockShape, i: usize, j: usize) -> Self {
        let mut m = Self::zero(shape);
        m.mat[(i, j)] = F::one();
        m
    }

    pub fn from_matrix(shape: BlockShape, mat: Matrix<F>) -> Result<Self> {
        let n = shape.size();
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: mat.rows() * mat.cols(),
            });
        }
        Ok(Self { shape, mat })
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.mat
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.mat[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.mat[(i, j)] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Parity if homogeneous; the zero matrix counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut seen = None;
        let n = self.shape.size();
        for i in 0..n {
            for j in 0..n {
                if !self.mat[(i, j)].is_zero() {
                    let par = self.shape.unit_parity(i, j);
                    match seen {
                        None => seen = Some(par),
                        Some(s) if s != par => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(seen.unwrap_or(0))
    }

    /// Splits into (even, odd) components.
    pub fn homogeneous_parts(&self) -> [Self; 2] {
        let mut even = Self::zero(self.shape);
        let mut odd = Self::zero(self.shape);
        let n = self.shape.size();
        for i in 0..n {
            for j in 0..n {
                let v = &self.mat[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if self.shape.unit_parity(i, j) == 0 {
                    even.mat[(i, j)] = v.clone();
                } else {
                    odd.mat[(i, j)] = v.clone();
                }
            }
        }
        [even, odd]
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::Shape(format!(
                "shape mismatch {} vs {}",
                self.shape, other.shape
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            shape: self.shape,
            mat: self.mat.mul(&other.mat)?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            shape: self.shape,
            mat: self.mat.add(&other.mat)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            shape: self.shape,
            mat: self.mat.sub(&other.mat)?,
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        Self {
            shape: self.shape,
            mat: self.mat.scale(s),
        }
    }

    /// Upper-block trace minus lower-block trace.
    pub fn supertrace(&self) -> F {
        (0..self.shape.size()).fold(F::zero(), |acc, i| {
            if self.shape.diag_sign(i) {
                acc + self.mat[(i, i)].clone()
            } else {
                acc - self.mat[(i, i)].clone()
            }
        })
    }
}

/// Supertrace of `x`.
pub fn supertrace<F: Field>(x: &SuperMatrix<F>) -> F {
    x.supertrace()
}

/// Super commutator `xy - (-1)^{|x||y|} yx`, extended bilinearly to
/// inhomogeneous arguments.
pub fn bracket<F: Field>(x: &SuperMatrix<F>, y: &SuperMatrix<F>) -> Result<SuperMatrix<F>> {
    x.same_shape(y)?;
    let xs = x.homogeneous_parts();
    let ys = y.homogeneous_parts();
    let mut out = SuperMatrix::zero(x.shape);
    for (a, xa) in xs.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in ys.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let xy = xa.mul(yb)?;
            let yx = yb.mul(xa)?;
            let term = if a * b == 1 { xy.add(&yx)? } else { xy.sub(&yx)? };
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// Supertrace-corrected super-symmetrised product
/// `xy + (-1)^{|x||y|} yx - (2/(m-n)) str(xy) I` on `sl(m+1|n+1)`.
///
/// The sign on `yx` makes the product super-commutative and lands it in the
/// supertrace-zero matrices. Defined only for `m != n`.
pub fn star_product<F: Field>(
    x: &SuperMatrix<F>,
    y: &SuperMatrix<F>,
    m: usize,
    n: usize,
) -> Result<SuperMatrix<F>> {
    if m == n {
        return Err(Error::DivisionForbidden);
    }
    x.same_shape(y)?;
    if x.shape != BlockShape::for_type_a(m, n) {
        return Err(Error::Shape(format!(
            "star product for A({m},{n}) needs shape ({}|{}), got {}",
            m + 1,
            n + 1,
            x.shape
        )));
    }
    let coef = F::from_i64(2) / (F::from_i64(m as i64) - F::from_i64(n as i64));
    let xs = x.homogeneous_parts();
    let ys = y.homogeneous_parts();
    let mut out = SuperMatrix::zero(x.shape);
    for (a, xa) in xs.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in ys.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let xy = xa.mul(yb)?;
            let yx = yb.mul(xa)?;
            let sym = if a * b == 1 { xy.sub(&yx)? } else { xy.add(&yx)? };
            let corr = SuperMatrix::identity(x.shape).scale(&(coef.clone() * xy.supertrace()));
            out = out.add(&sym.sub(&corr)?)?;
        }
    }
    Ok(out)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    Gl,
    Sl,
    Psl,
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalKind::Gl => "gl",
            ClassicalKind::Sl => "sl",
            ClassicalKind::Psl => "psl",
        })
    }
}

/// `gl`, `sl` or `psl` of a block shape with its canonical basis.
///
/// Basis order: the off-diagonal units `E_{i,j}` in lexicographic order, then
/// the diagonal part. For `gl` the diagonal part is `E_{k,k}`; for `sl` it is
/// `h_k = E_{k,k} - E_{k+1,k+1}` except `h_p = E_{p,p} + E_{p+1,p+1}` at the
/// block boundary (1-based). `psl(p|p)` keeps the first `2p - 2` of the `h_k`,
/// which are exactly the coset representatives with vanishing last diagonal
/// entry.
#[derive(Clone, Debug)]
pub struct ClassicalAlgebra<F> {
    kind: ClassicalKind,
    shape: BlockShape,
    basis: Vec<SuperMatrix<F>>,
    parity: Vec<u8>,
    labels: Vec<String>,
    n_offdiag: usize,
}

impl<F: Field> PartialEq for ClassicalAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.shape == other.shape
    }
}

impl<F: Field> ClassicalAlgebra<F> {
    pub fn new(kind: ClassicalKind, shape: BlockShape) -> Result<Self> {
        let (p, n) = (shape.p, shape.size());
        if kind == ClassicalKind::Psl && shape.p != shape.q {
            return Err(Error::Shape(format!("psl requires p = q, got {shape}")));
        }
        let mut basis = Vec::new();
        let mut parity = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(SuperMatrix::unit(shape, i, j));
                    parity.push(shape.unit_parity(i, j));
                    labels.push(format!("E{},{}", i + 1, j + 1));
                }
            }
        }
        let n_offdiag = basis.len();
        let n_diag = match kind {
            ClassicalKind::Gl => n,
            ClassicalKind::Sl => n - 1,
            ClassicalKind::Psl => n - 2,
        };
        for k in 0..n_diag {
            let m = match kind {
                ClassicalKind::Gl => SuperMatrix::unit(shape, k, k),
                _ => {
                    let mut h = SuperMatrix::unit(shape, k, k);
                    let s = if k + 1 == p { F::one() } else { -F::one() };
                    h.set(k + 1, k + 1, s);
                    h
                }
            };
            basis.push(m);
            parity.push(0);
            labels.push(match kind {
                ClassicalKind::Gl => format!("E{},{}", k + 1, k + 1),
                _ => format!("h{}", k + 1),
            });
        }
        Ok(Self {
            kind,
            shape,
            basis,
            parity,
            labels,
            n_offdiag,
        })
    }

    /// `sl(m+1|n+1)` for `m != n`, `psl(n+1|n+1)` for `m = n`: the simple
    /// algebra of type `A(m,n)`.
    pub fn type_a(m: usize, n: usize) -> Result<Self> {
        let shape = BlockShape::for_type_a(m, n);
        if m == n {
            Self::new(ClassicalKind::Psl, shape)
        } else {
            Self::new(ClassicalKind::Sl, shape)
        }
    }

    pub fn kind(&self) -> ClassicalKind {
        self.kind
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SuperMatrix<F>] {
        &self.basis
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Basis indices of the diagonal (Cartan) elements.
    pub fn cartan_indices(&self) -> Vec<usize> {
        (self.n_offdiag..self.dim()).collect()
    }

    /// Basis index of the off-diagonal unit `E_{i,j}` (0-based, `i != j`).
    pub fn unit_index(&self, i: usize, j: usize) -> usize {
        assert!(i != j, "diagonal units are not basis elements");
        let n = self.shape.size();
        i * (n - 1) + if j > i { j - 1 } else { j }
    }

    /// Index pairs `(e_i, f_i)` of the Chevalley generators, one per simple
    /// root `ε_1 - ε_2, ..., ε_p - δ_1, ..., δ_{q-1} - δ_q`.
    pub fn chevalley_generators(&self) -> Vec<(usize, usize)> {
        (0..self.shape.size() - 1)
            .map(|i| (self.unit_index(i, i + 1), self.unit_index(i + 1, i)))
            .collect()
    }

    /// Canonical representative of a matrix in this algebra. For `psl` this
    /// is the supertrace-zero representative with last diagonal entry 0.
    pub fn representative(&self, x: &SuperMatrix<F>) -> SuperMatrix<F> {
        match self.kind {
            ClassicalKind::Psl => {
                let n = self.shape.size();
                let c = x.get(n - 1, n - 1).clone();
                x.sub(&SuperMatrix::identity(self.shape).scale(&c))
                    .expect("same shape")
            }
            _ => x.clone(),
        }
    }

    /// Coordinates of `x` in the canonical basis; errors when `x` does not lie
    /// in the algebra (for `psl`, when `x` does not lie in `sl(p|p)`).
    pub fn coords(&self, x: &SuperMatrix<F>) -> Result<Vec<F>> {
        if x.shape != self.shape {
            return Err(Error::Shape(format!("shape mismatch {} vs {}", x.shape, self.shape)));
        }
        let x = self.representative(x);
        let n = self.shape.size();
        let p = self.shape.p;
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.push(x.get(i, j).clone());
                }
            }
        }
        let d: Vec<F> = (0..n).map(|k| x.get(k, k).clone()).collect();
        match self.kind {
            ClassicalKind::Gl => out.extend(d),
            _ => {
                let n_diag = self.dim() - self.n_offdiag;
                let mut c: Vec<F> = Vec::with_capacity(n_diag);
                for k in 0..n_diag {
                    let prev = if k == 0 { F::zero() } else { c[k - 1].clone() };
                    // diagonal entry k receives +c_k, and from h_{k-1} either
                    // -c_{k-1} or, across the block boundary, +c_{k-1}
                    let v = if k == p { d[k].clone() - prev } else { d[k].clone() + prev };
                    c.push(v);
                }
                let mut rebuilt = vec![F::zero(); n];
                for (k, ck) in c.iter().enumerate() {
                    rebuilt[k] = rebuilt[k].clone() + ck.clone();
                    if k + 1 == p {
                        rebuilt[k + 1] = rebuilt[k + 1].clone() + ck.clone();
                    } else {
                        rebuilt[k + 1] = rebuilt[k + 1].clone() - ck.clone();
                    }
                }
                if rebuilt != d {
                    return Err(Error::Invariant(format!(
                        "matrix does not lie in {}{}",
                        self.kind, self.shape
                    )));
                }
                out.extend(c);
            }
        }
        Ok(out)
    }

    pub fn element(&self, coords: &[F]) -> SuperMatrix<F> {
        let mut out = SuperMatrix::zero(self.shape);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same shape");
            }
        }
        out
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket_coords(&self, i: usize, j: usize) -> Vec<F> {
        let b = bracket(&self.basis[i], &self.basis[j]).expect("same shape");
        self.coords(&b).expect("algebra closed under bracket")
    }

    /// `str(x_i x_j)` on representatives; for `psl` this is the induced form.
    pub fn form(&self, i: usize, j: usize) -> F {
        self.basis[i].mul(&self.basis[j]).expect("same shape").supertrace()
    }

    pub fn gram_matrix(&self) -> Matrix<F> {
        let d = self.dim();
        Matrix::from_fn(d, d, |i, j| self.form(i, j))
    }

    /// Matrix of `ad x_i` in the canonical basis.
    pub fn ad_matrix(&self, i: usize) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.bracket_coords(i, j)).collect();
        Matrix::from_columns(self.dim(), &cols).expect("square")
    }
}

/// Casimir operator on `V` for the invariant form `scale * str(xy)`:
/// `C = (1/scale) * sum_{ij} (G^{-1})_{ij} rho(x_i) rho(x_j)` with `G` the
/// Gram matrix of `str` on the basis.
pub fn casimir_matrix_for_form<F: Field>(
    g: &ClassicalAlgebra<F>,
    v: &GModule<F>,
    scale: &F,
) -> Result<Matrix<F>> {
    if **v.algebra() != *g {
        return Err(Error::MismatchedAlgebra);
    }
    let ginv = g.gram_matrix().inverse().ok_or(Error::DegenerateForm)?;
    let d = g.dim();
    let mut c = Matrix::zeros(v.dim(), v.dim());
    for i in 0..d {
        // sum_j G^{-1}_{ij} rho(x_j), the dual-basis element paired with x_i
        let mut dual = Matrix::zeros(v.dim(), v.dim());
        for j in 0..d {
            let w = &ginv[(i, j)];
            if !w.is_zero() {
                dual.add_scaled(w, v.action(j))?;
            }
        }
        let term = v.action(i).mul(&dual)?;
        c.add_scaled(&F::one(), &term)?;
    }
    Ok(c.scale(&(F::one() / scale.clone())))
}

/// Casimir operator normalised to act as the scalar `m - n` on the adjoint
/// module of `sl(m+1|n+1)`. This is the Casimir of the form `2 str(xy)`; the
/// Casimir of `str(xy)` itself is twice as large.
pub fn casimir_matrix<F: Field>(g: &ClassicalAlgebra<F>, v: &GModule<F>) -> Result<Matrix<F>> {
    casimir_matrix_for_form(g, v, &F::from_i64(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn shape(p: usize, q: usize) -> BlockShape {
        BlockShape::new(p, q).unwrap()
    }

    fn e(s: BlockShape, i: usize, j: usize) -> SuperMatrix<Rational> {
        SuperMatrix::unit(s, i - 1, j - 1)
    }

    fn diag(s: BlockShape, d: &[i64]) -> SuperMatrix<Rational> {
        let mut m = SuperMatrix::zero(s);
        for (k, &v) in d.iter().enumerate() {
            m.set(k, k, q(v));
        }
        m
    }

    #[test]
    fn dimensions() {
        let sl21 = ClassicalAlgebra::<Rational>::new(ClassicalKind::Sl, shape(2, 1)).unwrap();
        assert_eq!(sl21.dim(), 8);
        let psl22 = ClassicalAlgebra::<Rational>::new(ClassicalKind::Psl, shape(2, 2)).unwrap();
        assert_eq!(psl22.dim(), 14);
        let gl11 = ClassicalAlgebra::<Rational>::new(ClassicalKind::Gl, shape(1, 1)).unwrap();
        assert_eq!(gl11.dim(), 4);
        assert!(matches!(
            ClassicalAlgebra::<Rational>::new(ClassicalKind::Psl, shape(2, 1)),
            Err(Error::Shape(_))
        ));
        assert!(BlockShape::new(0, 1).is_err());
    }

    #[test]
    fn sl_basis_is_supertrace_free_and_psl_reps_end_in_zero() {
        for (p, qq) in [(2, 1), (3, 2), (2, 2)] {
            let g = ClassicalAlgebra::<Rational>::new(ClassicalKind::Sl, shape(p, qq)).unwrap();
            assert!(g.basis().iter().all(|b| b.supertrace().is_zero()));
        }
        let psl = ClassicalAlgebra::<Rational>::new(ClassicalKind::Psl, shape(3, 3)).unwrap();
        assert!(psl.basis().iter().all(|b| b.get(5, 5).is_zero() && b.supertrace().is_zero()));
    }

    #[test]
    fn supertrace_examples() {
        let s = shape(2, 1);
        assert_eq!(SuperMatrix::<Rational>::identity(s).supertrace(), q(1));
        assert_eq!(SuperMatrix::<Rational>::identity(shape(2, 3)).supertrace(), q(-1));
        assert_eq!(e(s, 1, 1).supertrace(), q(1));
        assert_eq!(e(s, 3, 3).supertrace(), q(-1));
        assert_eq!(e(s, 1, 2).mul(&e(s, 2, 1)).unwrap().supertrace(), q(1));
    }

    #[test]
    fn bracket_examples() {
        let s = shape(2, 1);
        let h = e(s, 1, 1).sub(&e(s, 2, 2)).unwrap();
        assert!(bracket(&h, &h).unwrap().is_zero());
        assert_eq!(bracket(&e(s, 1, 3), &e(s, 3, 1)).unwrap(), e(s, 1, 1).add(&e(s, 3, 3)).unwrap());
        assert_eq!(bracket(&e(s, 1, 2), &e(s, 2, 1)).unwrap(), h);
        assert!(bracket(&e(s, 1, 2), &e(shape(1, 2), 1, 2)).is_err());
    }

    #[test]
    fn star_examples() {
        let s = shape(2, 1);
        assert_eq!(star_product(&e(s, 1, 2), &e(s, 2, 1), 1, 0).unwrap(), diag(s, &[-1, -1, -2]));
        assert_eq!(star_product(&e(s, 1, 3), &e(s, 3, 1), 1, 0).unwrap(), diag(s, &[-1, -2, -3]));
        assert_eq!(
            star_product(&e(shape(2, 2), 1, 2), &e(shape(2, 2), 2, 1), 1, 1),
            Err(Error::DivisionForbidden)
        );
    }

    #[test]
    fn coords_round_trip() {
        for (kind, p, qq) in [
            (ClassicalKind::Sl, 2, 1),
            (ClassicalKind::Sl, 3, 2),
            (ClassicalKind::Gl, 2, 2),
            (ClassicalKind::Psl, 2, 2),
        ] {
            let g = ClassicalAlgebra::<Rational>::new(kind, shape(p, qq)).unwrap();
            for (i, b) in g.basis().iter().enumerate() {
                let mut expect = vec![q(0); g.dim()];
                expect[i] = q(1);
                assert_eq!(g.coords(b).unwrap(), expect, "{kind} {i}");
            }
        }
        let sl = ClassicalAlgebra::<Rational>::new(ClassicalKind::Sl, shape(2, 1)).unwrap();
        assert!(sl.coords(&e(shape(2, 1), 1, 1)).is_err());
        let psl = ClassicalAlgebra::<Rational>::new(ClassicalKind::Psl, shape(2, 2)).unwrap();
        assert!(psl.coords(&SuperMatrix::identity(shape(2, 2))).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn unit_indices_match_labels() {
        let g = ClassicalAlgebra::<Rational>::new(ClassicalKind::Sl, shape(3, 2)).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert_eq!(g.labels()[g.unit_index(i, j)], format!("E{},{}", i + 1, j + 1));
                }
            }
        }
    }
}
