//! Finite-dimensional Lie superalgebras given by structure constants.

use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::homspaces::GModule;
use crate::linalg::{axpy, is_zero_vec, rref_coordinates, Field, Matrix, SparseRow};
use crate::superclassical::ClassicalAlgebra;

/// A Lie superalgebra on a homogeneous basis: `[e_i, e_j] = sum_k b_ij^k e_k`.
///
/// Construction rejects tables that break the parity grading or
/// super-anticommutativity, so every value of this type satisfies both.
#[derive(Clone, Debug, PartialEq)]
pub struct LieSuperalgebra<F> {
    parity: Vec<u8>,
    table: Vec<SparseRow<F>>,
    labels: Option<Vec<String>>,
}

/// A violated Jacobi identity: the basis triple and the value of the cyclic sum.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiWitness<F> {
    pub triple: (usize, usize, usize),
    pub value: Vec<F>,
}

/// Exhaustive versus sampled Jacobi verification.
#[derive(Clone, Debug)]
pub struct JacobiOptions {
    /// Largest dimension checked on every basis triple.
    pub max_exhaustive_dim: usize,
    /// Number of random triples above the threshold.
    pub samples: usize,
    pub seed: u64,
    /// Basis indices whose triples are always checked in sampled mode.
    pub priority: Vec<usize>,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self {
            max_exhaustive_dim: 64,
            samples: 1_000_000,
            seed: 0,
            priority: Vec::new(),
        }
    }
}

impl<F: Field> LieSuperalgebra<F> {
    /// Builds from sparse quadruples `(i, j, k, b_ij^k)`; entries for `(j, i)`
    /// must be present and consistent.
    pub fn from_quadruples(parity: Vec<u8>, quads: &[(usize, usize, usize, F)]) -> Result<Self> {
        let dim = parity.len();
        let mut dense: Vec<Vec<F>> = vec![Vec::new(); dim * dim];
        for (i, j, k, v) in quads {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Invariant(format!("index ({i}, {j}, {k}) out of range {dim}")));
            }
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                *slot = vec![F::zero(); dim];
            }
            slot[k] = slot[k].clone() + v.clone();
        }
        Self::from_fn(parity, |i, j| {
            let v = &dense[i * dim + j];
            if v.is_empty() {
                vec![F::zero(); dim]
            } else {
                v.clone()
            }
        })
    }

    /// Builds from a function returning the dense coordinates of `[e_i, e_j]`.
    pub fn from_fn(parity: Vec<u8>, mut f: impl FnMut(usize, usize) -> Vec<F>) -> Result<Self> {
        let dim = parity.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                let row: SparseRow<F> = v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                for (k, _) in &row {
                    if parity[*k] != (parity[i] + parity[j]) % 2 {
                        return Err(Error::ParityViolation { i, j, k: *k });
                    }
                }
                table.push(row);
            }
        }
        let alg = Self {
            parity,
            table,
            labels: None,
        };
        alg.check_super_anticommutative()?;
        Ok(alg)
    }

    fn check_super_anticommutative(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                let s = F::sign_of(self.parity[i] * self.parity[j]);
                let a = self.bracket_basis_dense(i, j);
                let b = self.bracket_basis_dense(j, i);
                let ok = a.iter().zip(&b).all(|(x, y)| *x == -(s.clone() * y.clone()));
                if !ok {
                    return Err(Error::Invariant(format!(
                        "super-anticommutativity fails for basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn from_classical(g: &ClassicalAlgebra<F>) -> Self {
        let mut alg = Self::from_fn(g.parity().to_vec(), |i, j| g.bracket_coords(i, j))
            .expect("classical brackets are graded and super-anticommutative");
        alg.labels = Some(g.labels().to_vec());
        alg
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels
            .as_ref()
            .map(|l| l[i].clone())
            .unwrap_or_else(|| format!("e{i}"))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseRow<F> {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_basis_dense(&self, i: usize, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for (k, c) in self.bracket_basis(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// All nonzero structure constants in `(i, j, k)` order.
    pub fn quadruples(&self) -> Vec<(usize, usize, usize, F)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, v) in self.bracket_basis(i, j) {
                    out.push((i, j, *k, v.clone()));
                }
            }
        }
        out
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let d = self.dim();
        let mut out = vec![F::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (k, v) in self.bracket_basis(i, j) {
                    out[*k] = out[*k].clone() + c.clone() * v.clone();
                }
            }
        }
        out
    }

    /// Matrix of `ad x`.
    pub fn ad_matrix(&self, x: &[F]) -> Matrix<F> {
        let d = self.dim();
        let mut m: Matrix<F> = Matrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, v) in self.bracket_basis(i, j) {
                    m[(*k, j)] = m[(*k, j)].clone() + xi.clone() * v.clone();
                }
            }
        }
        m
    }

    /// Cyclic super Jacobi sum
    /// `(-1)^{|z1||z3|}[[z1,z2],z3] + (-1)^{|z2||z1|}[[z2,z3],z1] + (-1)^{|z3||z2|}[[z3,z1],z2]`
    /// on basis elements.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<F> {
        let p = &self.parity;
        let mut out = vec![F::zero(); self.dim()];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let s = F::sign_of(p[a] * p[c]);
            for (l, v) in self.bracket_basis(a, b) {
                let inner = self.bracket_basis(*l, c);
                let coef = s.clone() * v.clone();
                for (t, w) in inner {
                    out[*t] = out[*t].clone() + coef.clone() * w.clone();
                }
            }
        }
        out
    }

    /// Verifies the super Jacobi identity, exhaustively up to
    /// `opts.max_exhaustive_dim` and by seeded sampling above it. Returns the
    /// first violating triple.
    pub fn jacobi_check(&self, opts: &JacobiOptions) -> Check<JacobiWitness<F>> {
        let d = self.dim();
        let test = |i: usize, j: usize, k: usize| -> Option<JacobiWitness<F>> {
            let v = self.jacobi_sum(i, j, k);
            (!is_zero_vec(&v)).then(|| JacobiWitness {
                triple: (i, j, k),
                value: v,
            })
        };
        if d <= opts.max_exhaustive_dim {
            // the cyclic sum is graded-antisymmetric in its arguments, so
            // sorted triples suffice
            for i in 0..d {
                for j in i..d {
                    for k in j..d {
                        if let Some(w) = test(i, j, k) {
                            return Check::Fails(w);
                        }
                    }
                }
            }
            return Check::Holds;
        }
        for &u in &opts.priority {
            for j in 0..d {
                for k in j..d {
                    if let Some(w) = test(u, j, k) {
                        return Check::Fails(w);
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let (i, j, k) = (rng.random_range(0..d), rng.random_range(0..d), rng.random_range(0..d));
            if let Some(w) = test(i, j, k) {
                return Check::Fails(w);
            }
        }
        Check::Holds
    }

    pub fn jacobi_holds(&self) -> bool {
        self.jacobi_check(&JacobiOptions::default()).holds()
    }

    /// RREF basis (rows) of the center, the joint kernel of all `ad e_j`.
    pub fn center(&self) -> Matrix<F> {
        let d = self.dim();
        // row (j, k): sum_i z_i b_ij^k = 0
        let mut m = Matrix::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, v) in self.bracket_basis(i, j) {
                    m[(j * d + k, i)] = v.clone();
                }
            }
        }
        let kernel = m.kernel_basis();
        Matrix::from_rows(d, &kernel)
            .map(|k| k.row_space_basis().0)
            .unwrap_or_else(|_| Matrix::zeros(0, d))
    }

    /// RREF basis of `[L, L]` with its pivot columns.
    pub fn derived_span(&self) -> (Matrix<F>, Vec<usize>) {
        let d = self.dim();
        let rows: Vec<Vec<F>> = (0..d)
            .flat_map(|i| (i..d).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_basis_dense(i, j))
            .filter(|v| !is_zero_vec(v))
            .collect();
        if rows.is_empty() {
            return (Matrix::zeros(0, d), Vec::new());
        }
        Matrix::from_rows(d, &rows).expect("uniform rows").row_space_basis()
    }

    /// `[L, L] = L`.
    pub fn is_perfect(&self) -> bool {
        self.derived_span().1.len() == self.dim()
    }

    /// Restricts to the subalgebra spanned by the rows of an RREF basis;
    /// errors if the span is not closed under the bracket.
    pub fn subalgebra(&self, basis: &Matrix<F>, pivots: &[usize]) -> Result<LieSuperalgebra<F>> {
        let k = basis.rows();
        let parity = (0..k)
            .map(|r| homogeneous_parity(basis.row(r), &self.parity))
            .collect::<Result<Vec<u8>>>()?;
        let mut err = None;
        let alg = LieSuperalgebra::from_fn(parity, |a, b| {
            let v = self.bracket(basis.row(a), basis.row(b));
            rref_coordinates(basis, pivots, &v).unwrap_or_else(|| {
                err = Some(Error::Invariant("subspace is not a subalgebra".into()));
                vec![F::zero(); k]
            })
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        Ok(alg)
    }

    /// `L / Z(L)` on the complement spanned by the basis vectors outside the
    /// pivot columns of the center.
    pub fn central_quotient(&self) -> Quotient<F> {
        // pivot on the last nonzero coordinate so that the complement keeps
        // the earliest basis vectors
        let (z, zpiv) = rref_from_right(&self.center());
        let keep: Vec<usize> = (0..self.dim()).filter(|c| !zpiv.contains(c)).collect();
        let reduce = |v: &[F]| -> Vec<F> {
            let mut v = v.to_vec();
            for (r, &p) in zpiv.iter().enumerate() {
                let c = v[p].clone();
                if !c.is_zero() {
                    axpy(&mut v, &(-c), z.row(r));
                }
            }
            keep.iter().map(|&c| v[c].clone()).collect()
        };
        let parity: Vec<u8> = keep.iter().map(|&c| self.parity[c]).collect();
        let mut algebra = LieSuperalgebra::from_fn(parity, |a, b| {
            reduce(&self.bracket_basis_dense(keep[a], keep[b]))
        })
        .expect("quotient of a Lie superalgebra by an ideal");
        if let Some(l) = &self.labels {
            algebra.labels = Some(keep.iter().map(|&c| l[c].clone()).collect());
        }
        let projection = Matrix::from_columns(
            keep.len(),
            &(0..self.dim())
                .map(|c| {
                    let mut e = vec![F::zero(); self.dim()];
                    e[c] = F::one();
                    reduce(&e)
                })
                .collect::<Vec<_>>(),
        )
        .expect("consistent sizes");
        Quotient { algebra, projection }
    }
}

/// Row-echelon basis whose pivots are the last nonzero columns.
pub(crate) fn rref_from_right<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let c = m.cols();
    let rev: Vec<usize> = (0..c).rev().collect();
    let (r, piv) = m.select_columns(&rev).row_space_basis();
    (r.select_columns(&rev), piv.iter().map(|&p| c - 1 - p).collect())
}

/// Parity of a vector supported on basis elements of one parity (zero is even).
pub(crate) fn homogeneous_parity<F: Field>(v: &[F], parity: &[u8]) -> Result<u8> {
    let mut seen = None;
    for (x, &p) in v.iter().zip(parity) {
        if x.is_zero() {
            continue;
        }
        match seen {
            None => seen = Some(p),
            Some(s) if s != p => {
                return Err(Error::Invariant("vector is not parity-homogeneous".into()))
            }
            _ => {}
        }
    }
    Ok(seen.unwrap_or(0))
}

/// A quotient algebra together with the projection from the original basis.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: LieSuperalgebra<F>,
    /// `dim(quotient) x dim(original)`.
    pub projection: Matrix<F>,
}

/// An even injective homomorphism from a classical algebra `g` into `L`,
/// recorded as the images of the basis of `g`.
#[derive(Clone, Debug)]
pub struct Embedding<F> {
    g: Arc<ClassicalAlgebra<F>>,
    images: Vec<Vec<F>>,
}

impl<F: Field> Embedding<F> {
    pub fn new(g: Arc<ClassicalAlgebra<F>>, images: Vec<Vec<F>>) -> Result<Self> {
        if images.len() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                found: images.len(),
            });
        }
        Ok(Self { g, images })
    }

    /// `g` embedded in itself.
    pub fn identity(g: Arc<ClassicalAlgebra<F>>) -> Self {
        let d = g.dim();
        let images = (0..d)
            .map(|i| {
                let mut e = vec![F::zero(); d];
                e[i] = F::one();
                e
            })
            .collect();
        Self { g, images }
    }

    pub fn algebra(&self) -> &Arc<ClassicalAlgebra<F>> {
        &self.g
    }

    pub fn images(&self) -> &[Vec<F>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &[F] {
        &self.images[i]
    }

    /// Composes with a linear map on `L` (e.g. a quotient projection).
    pub fn mapped(&self, m: &Matrix<F>) -> Result<Self> {
        let images = self
            .images
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            g: self.g.clone(),
            images,
        })
    }

    /// Checks that the map is even, injective and bracket-preserving.
    pub fn verify(&self, l: &LieSuperalgebra<F>) -> Check<String> {
        for (i, v) in self.images.iter().enumerate() {
            if v.len() != l.dim() {
                return Check::Fails(format!("image of {} has wrong length", self.g.labels()[i]));
            }
            match homogeneous_parity(v, l.parity()) {
                Ok(p) if p == self.g.parity()[i] => {}
                _ => return Check::Fails(format!("image of {} has wrong parity", self.g.labels()[i])),
            }
        }
        let m = match Matrix::from_rows(l.dim(), &self.images) {
            Ok(m) => m,
            Err(e) => return Check::Fails(e.to_string()),
        };
        if m.rank() != self.g.dim() {
            return Check::Fails("embedding is not injective".into());
        }
        for i in 0..self.g.dim() {
            for j in i..self.g.dim() {
                let lhs = l.bracket(&self.images[i], &self.images[j]);
                let mut rhs = vec![F::zero(); l.dim()];
                for (k, c) in self.g.bracket_coords(i, j).iter().enumerate() {
                    axpy(&mut rhs, c, &self.images[k]);
                }
                if lhs != rhs {
                    return Check::Fails(format!(
                        "bracket of {} and {} is not preserved",
                        self.g.labels()[i],
                        self.g.labels()[j]
                    ));
                }
            }
        }
        Check::Holds
    }

    /// `L` as a `g`-module under `ad` of the embedded basis.
    pub fn module(&self, l: &LieSuperalgebra<F>) -> Result<GModule<F>> {
        let actions = self.images.iter().map(|v| l.ad_matrix(v)).collect();
        GModule::new(self.g.clone(), l.parity().to_vec(), actions)
    }
}

/// A Lie superalgebra with a distinguished grading subalgebra.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F> {
    pub algebra: LieSuperalgebra<F>,
    pub embedding: Embedding<F>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn central_quotient(&self) -> Result<GradedAlgebra<F>> {
        let q = self.algebra.central_quotient();
        Ok(GradedAlgebra {
            embedding: self.embedding.mapped(&q.projection)?,
            algebra: q.algebra,
        })
    }

    /// `g` itself, graded by the identity embedding.
    pub fn classical(g: Arc<ClassicalAlgebra<F>>) -> Self {
        Self {
            algebra: LieSuperalgebra::from_classical(&g),
            embedding: Embedding::identity(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superclassical::{BlockShape, ClassicalKind};
    use crate::Rational;

    fn classical(kind: ClassicalKind, p: usize, q: usize) -> ClassicalAlgebra<Rational> {
        ClassicalAlgebra::new(kind, BlockShape::new(p, q).unwrap()).unwrap()
    }

    #[test]
    fn classical_algebras_satisfy_jacobi() {
        for (kind, p, q) in [
            (ClassicalKind::Sl, 2, 1),
            (ClassicalKind::Sl, 3, 2),
            (ClassicalKind::Gl, 2, 1),
            (ClassicalKind::Psl, 2, 2),
        ] {
            let l = LieSuperalgebra::from_classical(&classical(kind, p, q));
            assert!(l.jacobi_holds(), "{kind}({p}|{q})");
        }
    }

    #[test]
    fn centers() {
        let gl21 = classical(ClassicalKind::Gl, 2, 1);
        let z = LieSuperalgebra::from_classical(&gl21).center();
        assert_eq!(z.rows(), 1);
        let ident = gl21.coords(&crate::superclassical::SuperMatrix::identity(gl21.shape())).unwrap();
        assert_eq!(z.row_vec(0), ident);

        let sl22 = classical(ClassicalKind::Sl, 2, 2);
        let l = LieSuperalgebra::from_classical(&sl22);
        let z = l.center();
        assert_eq!(z.rows(), 1);
        let q = l.central_quotient();
        assert_eq!(q.algebra.dim(), 14);
        assert!(q.algebra.jacobi_holds());
        let psl = LieSuperalgebra::from_classical(&classical(ClassicalKind::Psl, 2, 2));
        // same structure constants: the quotient keeps the off-diagonal units
        // and h1, h2, while psl uses the same representatives
        assert_eq!(q.algebra.quadruples(), psl.quadruples());

        assert_eq!(LieSuperalgebra::from_classical(&classical(ClassicalKind::Sl, 2, 1)).center().rows(), 0);
    }

    #[test]
    fn perfectness() {
        assert!(LieSuperalgebra::from_classical(&classical(ClassicalKind::Sl, 2, 1)).is_perfect());
        assert!(!LieSuperalgebra::from_classical(&classical(ClassicalKind::Gl, 2, 1)).is_perfect());
    }

    #[test]
    fn rejects_bad_tables() {
        // [e0, e1] = e1 with e1 odd and e0 even is fine only with the mirrored entry
        let bad = LieSuperalgebra::<Rational>::from_quadruples(vec![0, 1], &[(0, 1, 1, Rational::from_i64(1))]);
        assert!(matches!(bad, Err(Error::Invariant(_))));
        let par = LieSuperalgebra::<Rational>::from_quadruples(vec![0, 1], &[(0, 1, 0, Rational::from_i64(1))]);
        assert_eq!(par, Err(Error::ParityViolation { i: 0, j: 1, k: 0 }));
    }

    #[test]
    fn jacobi_failure_has_witness() {
        // three even elements with [a,b] = c, [b,c] = a, [c,a] = a: not Lie
        let one = Rational::from_i64(1);
        let quads = vec![
            (0, 1, 2, one.clone()),
            (1, 0, 2, -one.clone()),
            (1, 2, 0, one.clone()),
            (2, 1, 0, -one.clone()),
            (2, 0, 0, one.clone()),
            (0, 2, 0, -one.clone()),
        ];
        let l = LieSuperalgebra::from_quadruples(vec![0, 0, 0], &quads).unwrap();
        let c = l.jacobi_check(&JacobiOptions::default());
        assert!(!c.holds());
        let w = c.witness().unwrap();
        assert!(!is_zero_vec(&l.jacobi_sum(w.triple.0, w.triple.1, w.triple.2)));
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let l = LieSuperalgebra::from_classical(&classical(ClassicalKind::Sl, 2, 1));
        let opts = JacobiOptions {
            max_exhaustive_dim: 4,
            samples: 500,
            seed: 7,
            priority: vec![0],
        };
        assert!(l.jacobi_check(&opts).holds());
    }

    #[test]
    fn embedding_checks() {
        let g = Arc::new(classical(ClassicalKind::Sl, 2, 1));
        let graded = GradedAlgebra::classical(g.clone());
        assert!(graded.embedding.verify(&graded.algebra).holds());
        let mut images = graded.embedding.images().to_vec();
        images.swap(0, 1);
        let bad = Embedding::new(g, images).unwrap();
        assert!(!bad.verify(&graded.algebra).holds());
    }
}
