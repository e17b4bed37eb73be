//! Unital associative superalgebras given by structure constants.

use std::fmt;
use std::str::FromStr;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, Field, Matrix, SparseRow};

/// An associative superalgebra on a homogeneous basis with a unit:
/// `e_i e_j = sum_k c_ij^k e_k`.
///
/// Construction rejects parity violations and a `unit` that is not a
/// two-sided unit. Associativity is not enforced (see
/// [`AssocSuperalgebra::check_associative`]) so that broken examples can be
/// represented.
#[derive(Clone, Debug, PartialEq)]
pub struct AssocSuperalgebra<F> {
    parity: Vec<u8>,
    table: Vec<SparseRow<F>>,
    unit: Vec<F>,
    labels: Option<Vec<String>>,
}

/// An associator `(e_i e_j) e_k - e_i (e_j e_k)` that does not vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct AssociatorWitness<F> {
    pub triple: (usize, usize, usize),
    pub value: Vec<F>,
}

/// `[A, A]` together with the inner derivations it induces.
#[derive(Clone, Debug)]
pub struct CommutatorSubspace<F> {
    /// RREF basis of `span{[a, a']}`, one vector per row.
    pub basis: Matrix<F>,
    pub pivots: Vec<usize>,
    /// `ad` of each basis row, as a `dim A x dim A` matrix.
    pub ad_maps: Vec<Matrix<F>>,
    /// RREF basis of the span of the flattened `ad` maps.
    pub ad_image: Matrix<F>,
    pub ad_pivots: Vec<usize>,
}

impl<F: Field> CommutatorSubspace<F> {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ad_dim(&self) -> usize {
        self.ad_image.rows()
    }
}

impl<F: Field> AssocSuperalgebra<F> {
    /// Builds from a dense product function `(i, j) -> e_i e_j`.
    pub fn from_fn(parity: Vec<u8>, unit: Vec<F>, mut f: impl FnMut(usize, usize) -> Vec<F>) -> Result<Self> {
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
                table.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        Self::from_table(parity, table, unit)
    }

    /// Builds from sparse quadruples `(i, j, k, c_ij^k)`; repeated entries add.
    pub fn from_quadruples(parity: Vec<u8>, quads: &[(usize, usize, usize, F)], unit: Vec<F>) -> Result<Self> {
        let dim = parity.len();
        let mut dense = vec![vec![F::zero(); dim]; dim * dim];
        for (i, j, k, c) in quads {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Schema(format!("index ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            let e = &mut dense[i * dim + j][*k];
            *e = e.clone() + c.clone();
        }
        Self::from_fn(parity, unit, |i, j| std::mem::take(&mut dense[i * dim + j]))
    }

    fn from_table(parity: Vec<u8>, table: Vec<SparseRow<F>>, unit: Vec<F>) -> Result<Self> {
        let dim = parity.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("a unital algebra has positive dimension".into()));
        }
        if let Some(&p) = parity.iter().find(|&&p| p > 1) {
            return Err(Error::Schema(format!("parity entries must be 0 or 1, found {p}")));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        for i in 0..dim {
            for j in 0..dim {
                for (k, _) in &table[i * dim + j] {
                    if parity[*k] != (parity[i] + parity[j]) % 2 {
                        return Err(Error::ParityViolation { i, j, k: *k });
                    }
                }
            }
        }
        let a = Self {
            parity,
            table,
            unit,
            labels: None,
        };
        if let Check::Fails(msg) = a.check_unit() {
            return Err(Error::UnitAxiom(msg));
        }
        Ok(a)
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

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("a{i}"),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut e = vec![F::zero(); self.dim()];
        e[i] = F::one();
        e
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &SparseRow<F> {
        &self.table[i * self.dim() + j]
    }

    pub fn product_basis_dense(&self, i: usize, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for (k, c) in self.product_basis(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn quadruples(&self) -> Vec<(usize, usize, usize, F)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product_basis(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Bilinear product of coordinate vectors.
    pub fn product(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.clone() * bj.clone();
                for (k, v) in self.product_basis(i, j) {
                    out[*k] = out[*k].clone() + c.clone() * v.clone();
                }
            }
        }
        out
    }

    /// `e_i ∘ e_j = e_i e_j + (-1)^{īj̄} e_j e_i`.
    pub fn circle_basis(&self, i: usize, j: usize) -> Vec<F> {
        self.signed_sum(i, j, F::sign_of(self.parity[i] * self.parity[j]))
    }

    /// `[e_i, e_j] = e_i e_j - (-1)^{īj̄} e_j e_i`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F> {
        self.signed_sum(i, j, -F::sign_of(self.parity[i] * self.parity[j]))
    }

    fn signed_sum(&self, i: usize, j: usize, s: F) -> Vec<F> {
        let mut v = self.product_basis_dense(i, j);
        for (k, c) in self.product_basis(j, i) {
            v[*k] = v[*k].clone() + s.clone() * c.clone();
        }
        v
    }

    /// Bilinear extension of `[·,·]` to coordinate vectors.
    pub fn bracket(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.bilinear(a, b, |i, j| self.bracket_basis(i, j))
    }

    /// Bilinear extension of `∘` to coordinate vectors.
    pub fn circle(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.bilinear(a, b, |i, j| self.circle_basis(i, j))
    }

    fn bilinear(&self, a: &[F], b: &[F], f: impl Fn(usize, usize) -> Vec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    axpy(&mut out, &(ai.clone() * bj.clone()), &f(i, j));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult(&self, a: &[F]) -> Matrix<F> {
        let d = self.dim();
        let cols: Vec<Vec<F>> = (0..d).map(|j| self.product(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(d, &cols).expect("square")
    }

    /// Matrix of `ad x = [x, ·]`.
    pub fn ad_matrix(&self, x: &[F]) -> Matrix<F> {
        let d = self.dim();
        let cols: Vec<Vec<F>> = (0..d).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(d, &cols).expect("square")
    }

    /// Checks `1 a = a 1 = a` on the basis and that the unit is even.
    pub fn check_unit(&self) -> Check<String> {
        if self.unit.iter().zip(&self.parity).any(|(u, &p)| p == 1 && !u.is_zero()) {
            return Check::Fails("unit has an odd component".into());
        }
        for i in 0..self.dim() {
            let e = self.basis_vector(i);
            if self.product(&self.unit, &e) != e {
                return Check::Fails(format!("1 * e{i} != e{i}"));
            }
            if self.product(&e, &self.unit) != e {
                return Check::Fails(format!("e{i} * 1 != e{i}"));
            }
        }
        Check::Holds
    }

    /// `(e_i e_j) e_k - e_i (e_j e_k)`.
    pub fn associator(&self, i: usize, j: usize, k: usize) -> Vec<F> {
        let ij = self.product_basis_dense(i, j);
        let jk = self.product_basis_dense(j, k);
        let mut v = self.product(&ij, &self.basis_vector(k));
        let r = self.product(&self.basis_vector(i), &jk);
        axpy(&mut v, &-F::one(), &r);
        v
    }

    pub fn check_associative(&self) -> Check<AssociatorWitness<F>> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.associator(i, j, k);
                    if !is_zero_vec(&v) {
                        return Check::Fails(AssociatorWitness {
                            triple: (i, j, k),
                            value: v,
                        });
                    }
                }
            }
        }
        Check::Holds
    }

    /// `e_i e_j = (-1)^{īj̄} e_j e_i` for all pairs; the witness is the first
    /// failing pair.
    pub fn check_supercommutative(&self) -> Check<(usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                if !is_zero_vec(&self.bracket_basis(i, j)) {
                    return Check::Fails((i, j));
                }
            }
        }
        Check::Holds
    }

    /// Basis of `[A, A]` and the maps `ad_{[a, a']}`.
    pub fn commutator_subspace(&self) -> CommutatorSubspace<F> {
        let d = self.dim();
        let mut rows = Vec::new();
        for i in 0..d {
            for j in i..d {
                let b = self.bracket_basis(i, j);
                if !is_zero_vec(&b) {
                    rows.push(b);
                }
            }
        }
        let (basis, pivots) = if rows.is_empty() {
            (Matrix::zeros(0, d), Vec::new())
        } else {
            Matrix::from_rows(d, &rows).expect("rows have length d").row_space_basis()
        };
        let ad_maps: Vec<Matrix<F>> = (0..basis.rows()).map(|r| self.ad_matrix(basis.row(r))).collect();
        let flat: Vec<Vec<F>> = ad_maps.iter().map(|m| m.entries().to_vec()).collect();
        let (ad_image, ad_pivots) = if flat.is_empty() {
            (Matrix::zeros(0, d * d), Vec::new())
        } else {
            Matrix::from_rows(d * d, &flat).expect("square maps").row_space_basis()
        };
        CommutatorSubspace {
            basis,
            pivots,
            ad_maps,
            ad_image,
            ad_pivots,
        }
    }

    /// Checks `d(ab) = d(a) b + (-1)^{d̄ā} a d(b)` on all basis pairs, for a
    /// map `d` of parity `parity`. The witness is the first failing pair.
    pub fn check_superderivation(&self, d: &Matrix<F>, parity: u8) -> Check<(usize, usize)> {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return Check::Fails((n, n));
        }
        let images: Vec<Vec<F>> = d.columns();
        for i in 0..n {
            for j in 0..n {
                let lhs = d.mul_vec(&self.product_basis_dense(i, j)).expect("square");
                let mut rhs = self.product(&images[i], &self.basis_vector(j));
                let s = F::sign_of(parity * self.parity[i]);
                axpy(&mut rhs, &s, &self.product(&self.basis_vector(i), &images[j]));
                if lhs != rhs {
                    return Check::Fails((i, j));
                }
            }
        }
        Check::Holds
    }

    /// Parity of a homogeneous linear map, `None` if it mixes parities.
    pub fn map_parity(&self, d: &Matrix<F>) -> Option<u8> {
        let mut found: Option<u8> = None;
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if !d[(r, c)].is_zero() {
                    let p = (self.parity[r] + self.parity[c]) % 2;
                    match found {
                        None => found = Some(p),
                        Some(q) if q != p => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(found.unwrap_or(0))
    }
}

/// The built-in coordinate algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    GroundField,
    DualNumbers,
    /// Group algebra of `Z/k`, all even.
    GroupAlgebra(usize),
    /// Exterior algebra on `k` odd generators.
    Grassmann(usize),
    /// The full `(r|s)` matrix superalgebra.
    MatrixSuper(usize, usize),
    /// `F[x]/(x^k)`.
    TruncatedPoly(usize),
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::GroundField => write!(f, "ground_field"),
            Builtin::DualNumbers => write!(f, "dual_numbers"),
            Builtin::GroupAlgebra(k) => write!(f, "group_algebra:{k}"),
            Builtin::Grassmann(k) => write!(f, "grassmann:{k}"),
            Builtin::MatrixSuper(r, s) => write!(f, "matrix_super:{r},{s}"),
            Builtin::TruncatedPoly(k) => write!(f, "truncated_poly:{k}"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Parses `kind` or `kind:params`, e.g. `matrix_super:1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k.trim(), Some(p.trim())),
            None => (s.trim(), None),
        };
        let nums = |expected: usize| -> Result<Vec<usize>> {
            let p = params.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs {expected} parameter(s)")))?;
            let v = p
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidParameter(format!("{kind}: {e}")))?;
            if v.len() != expected {
                return Err(Error::InvalidParameter(format!("{kind} needs {expected} parameter(s)")));
            }
            Ok(v)
        };
        let no_params = |b: Builtin| match params {
            None => Ok(b),
            Some(_) => Err(Error::InvalidParameter(format!("{kind} takes no parameters"))),
        };
        match kind {
            "ground_field" | "field" => no_params(Builtin::GroundField),
            "dual_numbers" | "dual" => no_params(Builtin::DualNumbers),
            "group_algebra" => Ok(Builtin::GroupAlgebra(nums(1)?[0])),
            "grassmann" => Ok(Builtin::Grassmann(nums(1)?[0])),
            "matrix_super" => {
                let v = nums(2)?;
                Ok(Builtin::MatrixSuper(v[0], v[1]))
            }
            "truncated_poly" => Ok(Builtin::TruncatedPoly(nums(1)?[0])),
            other => Err(Error::InvalidParameter(format!("unknown algebra kind '{other}'"))),
        }
    }
}

impl Builtin {
    pub fn build<F: Field>(self) -> Result<AssocSuperalgebra<F>> {
        match self {
            Builtin::GroundField => ground_field(),
            Builtin::DualNumbers => dual_numbers(),
            Builtin::GroupAlgebra(k) => group_algebra(k),
            Builtin::Grassmann(k) => grassmann(k),
            Builtin::MatrixSuper(r, s) => matrix_super(r, s),
            Builtin::TruncatedPoly(k) => truncated_poly(k),
        }
    }
}

fn unit_at_zero<F: Field>(dim: usize) -> Vec<F> {
    let mut u = vec![F::zero(); dim];
    u[0] = F::one();
    u
}

pub fn ground_field<F: Field>() -> Result<AssocSuperalgebra<F>> {
    AssocSuperalgebra::from_fn(vec![0], vec![F::one()], |_, _| vec![F::one()])?.with_labels(vec!["1".into()])
}

/// `F[ε]/(ε²)`, basis `1, ε`.
pub fn dual_numbers<F: Field>() -> Result<AssocSuperalgebra<F>> {
    truncated_poly(2)?.with_labels(vec!["1".into(), "eps".into()])
}

/// `F[x]/(x^k)`, basis `1, x, ..., x^{k-1}`.
pub fn truncated_poly<F: Field>(k: usize) -> Result<AssocSuperalgebra<F>> {
    if k == 0 {
        return Err(Error::InvalidParameter("truncated_poly needs k >= 1".into()));
    }
    let a = AssocSuperalgebra::from_fn(vec![0; k], unit_at_zero(k), |i, j| {
        let mut v = vec![F::zero(); k];
        if i + j < k {
            v[i + j] = F::one();
        }
        v
    })?;
    let labels = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    a.with_labels(labels)
}

/// Group algebra of `Z/k`, basis `g^0, ..., g^{k-1}`.
pub fn group_algebra<F: Field>(k: usize) -> Result<AssocSuperalgebra<F>> {
    if k == 0 {
        return Err(Error::InvalidParameter("group_algebra needs k >= 1".into()));
    }
    let a = AssocSuperalgebra::from_fn(vec![0; k], unit_at_zero(k), |i, j| {
        let mut v = vec![F::zero(); k];
        v[(i + j) % k] = F::one();
        v
    })?;
    a.with_labels((0..k).map(|i| format!("g{i}")).collect())
}

/// Exterior algebra on odd generators `θ_1..θ_k`; basis monomials indexed by
/// bitmask, so `θ_S` sits at index `sum_{i in S} 2^{i-1}`.
pub fn grassmann<F: Field>(k: usize) -> Result<AssocSuperalgebra<F>> {
    if k > 10 {
        return Err(Error::InvalidParameter("grassmann rank is limited to 10".into()));
    }
    let n = 1usize << k;
    let parity = (0..n).map(|m| (m.count_ones() % 2) as u8).collect();
    let a = AssocSuperalgebra::from_fn(parity, unit_at_zero(n), |s, t| {
        let mut v = vec![F::zero(); n];
        if s & t == 0 {
            // sign of moving each generator of t past the larger ones of s
            let swaps: u32 = (0..k).filter(|b| t & (1 << b) != 0).map(|b| (s >> (b + 1)).count_ones()).sum();
            v[s | t] = F::sign_of((swaps % 2) as u8);
        }
        v
    })?;
    let labels = (0..n)
        .map(|m| {
            if m == 0 {
                "1".to_string()
            } else {
                (0..k).filter(|b| m & (1 << b) != 0).map(|b| format!("t{}", b + 1)).collect()
            }
        })
        .collect();
    a.with_labels(labels)
}

/// The `(r|s)` matrix superalgebra, basis `E_{ij}` in lexicographic order.
pub fn matrix_super<F: Field>(r: usize, s: usize) -> Result<AssocSuperalgebra<F>> {
    let n = r + s;
    if n == 0 {
        return Err(Error::InvalidParameter("matrix_super needs r + s >= 1".into()));
    }
    let block = |i: usize| (i >= r) as u8;
    let parity = (0..n * n).map(|x| (block(x / n) + block(x % n)) % 2).collect();
    let mut unit = vec![F::zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = F::one();
    }
    let a = AssocSuperalgebra::from_fn(parity, unit, |x, y| {
        let mut v = vec![F::zero(); n * n];
        let (i, j, k, l) = (x / n, x % n, y / n, y % n);
        if j == k {
            v[i * n + l] = F::one();
        }
        v
    })?;
    a.with_labels((0..n * n).map(|x| format!("E{}{}", x / n + 1, x % n + 1)).collect())
}
