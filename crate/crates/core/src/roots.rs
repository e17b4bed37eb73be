//! Root data of `A(m,n)`, weight-space decompositions, the root-grading
//! checker and the Kac-module weight closure test.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homspaces::GModule;
use crate::lie::{Embedding, LieSuperalgebra};
use crate::linalg::{is_zero_vec, Field, Matrix};
use crate::superclassical::{BlockShape, ClassicalAlgebra, ClassicalKind, SuperMatrix};

/// Integral weight `sum eps_i ε_i + sum del_r δ_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub eps: Vec<i64>,
    pub del: Vec<i64>,
}

impl Weight {
    pub fn zero(shape: BlockShape) -> Self {
        Self {
            eps: vec![0; shape.p()],
            del: vec![0; shape.q()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().chain(&self.del).all(|&x| x == 0)
    }

    /// `ε_i` (0-based).
    pub fn epsilon(shape: BlockShape, i: usize) -> Self {
        let mut w = Self::zero(shape);
        w.eps[i] = 1;
        w
    }

    /// `δ_r` (0-based).
    pub fn delta(shape: BlockShape, r: usize) -> Self {
        let mut w = Self::zero(shape);
        w.del[r] = 1;
        w
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            eps: self.eps.iter().zip(&o.eps).map(|(a, b)| a + b).collect(),
            del: self.del.iter().zip(&o.del).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            eps: self.eps.iter().map(|a| a * k).collect(),
            del: self.del.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Value on a diagonal matrix `diag(a_1..a_p, b_1..b_q)`.
    pub fn eval<F: Field>(&self, h: &SuperMatrix<F>) -> F {
        let p = self.eps.len();
        let a = self.eps.iter().enumerate().map(|(i, &c)| F::from_i64(c) * h.get(i, i).clone());
        let b = self.del.iter().enumerate().map(|(r, &c)| F::from_i64(c) * h.get(p + r, p + r).clone());
        a.chain(b).fold(F::zero(), |acc, x| acc + x)
    }

    /// Standard pairing `(ε_i, ε_j) = δ_ij`, `(δ_r, δ_s) = -δ_rs`, `(ε, δ) = 0`.
    pub fn pairing(&self, o: &Self) -> i64 {
        let e: i64 = self.eps.iter().zip(&o.eps).map(|(a, b)| a * b).sum();
        let d: i64 = self.del.iter().zip(&o.del).map(|(a, b)| a * b).sum();
        e - d
    }

    /// Shift by a multiple of `sum ε_i - sum δ_r` (which vanishes on the
    /// Cartan subalgebra of `sl`) so that the last `δ` coefficient is zero.
    pub fn normalized(&self) -> Self {
        let k = *self.del.last().unwrap_or(&0);
        Self {
            eps: self.eps.iter().map(|a| a + k).collect(),
            del: self.del.iter().map(|a| a - k).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (sym, coeffs) in [("e", &self.eps), ("d", &self.del)] {
            for (i, &c) in coeffs.iter().enumerate() {
                match c {
                    0 => {}
                    1 => terms.push(format!("+{sym}{}", i + 1)),
                    -1 => terms.push(format!("-{sym}{}", i + 1)),
                    c if c > 0 => terms.push(format!("+{c}{sym}{}", i + 1)),
                    c => terms.push(format!("{c}{sym}{}", i + 1)),
                }
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let s = terms.concat();
        f.write_str(s.strip_prefix('+').unwrap_or(&s))
    }
}

/// Roots of `sl(p|q)`: even `ε_i - ε_j`, `δ_r - δ_s`; odd `±(ε_i - δ_r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    pub shape: BlockShape,
    pub even_roots: Vec<Weight>,
    pub odd_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
}

pub fn root_system(shape: BlockShape) -> RootSystem {
    let (p, q) = (shape.p(), shape.q());
    let e = |i| Weight::epsilon(shape, i);
    let d = |r| Weight::delta(shape, r);
    let mut even = Vec::new();
    for i in 0..p {
        for j in 0..p {
            if i != j {
                even.push(e(i).sub(&e(j)));
            }
        }
    }
    for r in 0..q {
        for s in 0..q {
            if r != s {
                even.push(d(r).sub(&d(s)));
            }
        }
    }
    let mut odd = Vec::new();
    for i in 0..p {
        for r in 0..q {
            odd.push(e(i).sub(&d(r)));
            odd.push(d(r).sub(&e(i)));
        }
    }
    let mut simple: Vec<Weight> = (0..p - 1).map(|i| e(i).sub(&e(i + 1))).collect();
    simple.push(e(p - 1).sub(&d(0)));
    simple.extend((0..q - 1).map(|r| d(r).sub(&d(r + 1))));
    RootSystem {
        shape,
        even_roots: even,
        odd_roots: odd,
        simple_roots: simple,
    }
}

impl RootSystem {
    /// Normalised roots together with their parities.
    fn normalized_roots(&self) -> BTreeMap<Weight, BTreeSet<u8>> {
        let mut out: BTreeMap<Weight, BTreeSet<u8>> = BTreeMap::new();
        for (par, roots) in [(0u8, &self.even_roots), (1u8, &self.odd_roots)] {
            for r in roots {
                out.entry(r.normalized()).or_default().insert(par);
            }
        }
        out
    }

    /// Whether `w` is a root (as a functional on the Cartan subalgebra of `sl`).
    pub fn contains(&self, w: &Weight) -> bool {
        self.normalized_roots().contains_key(&w.normalized())
    }

    pub fn contains_or_zero(&self, w: &Weight) -> bool {
        w.normalized().is_zero() || self.contains(w)
    }
}

/// Gram matrix `(α_i, α_j)` of the simple roots under the standard pairing.
pub fn cartan_matrix<F: Field>(rs: &RootSystem) -> Matrix<F> {
    let s = &rs.simple_roots;
    Matrix::from_fn(s.len(), s.len(), |i, j| F::from_i64(s[i].pairing(&s[j])))
}

/// One joint eigenspace of a commuting family, inside one parity sector.
#[derive(Clone, Debug)]
pub struct EigenBlock<F> {
    pub eigenvalues: Vec<F>,
    pub parity: u8,
    /// Basis vectors (coordinates in the module basis).
    pub vectors: Vec<Vec<F>>,
}

/// Joint eigenspace decomposition of commuting, parity-preserving operators.
///
/// When every operator is diagonal the basis vectors are grouped directly.
/// Otherwise each operator is restricted to the current blocks and split
/// along its integer eigenvalues (bounded by the Gershgorin radius); a
/// shortfall in the eigenspace dimensions means the action is not
/// diagonalisable with integral eigenvalues.
pub fn joint_eigenspaces<F: Field>(ops: &[Matrix<F>], parity: &[u8]) -> Result<Vec<EigenBlock<F>>> {
    let n = parity.len();
    for op in ops {
        if op.rows() != n || op.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: op.rows(),
            });
        }
    }
    if ops.iter().all(|m| m.is_diagonal()) {
        let mut groups: Vec<EigenBlock<F>> = Vec::new();
        for (i, &par) in parity.iter().enumerate() {
            let eig: Vec<F> = ops.iter().map(|m| m[(i, i)].clone()).collect();
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            match groups.iter_mut().find(|g| g.parity == par && g.eigenvalues == eig) {
                Some(g) => g.vectors.push(e),
                None => groups.push(EigenBlock {
                    eigenvalues: eig,
                    parity: par,
                    vectors: vec![e],
                }),
            }
        }
        return Ok(groups);
    }

    let mut blocks: Vec<EigenBlock<F>> = Vec::new();
    for par in [0u8, 1] {
        let vectors: Vec<Vec<F>> = (0..n)
            .filter(|&i| parity[i] == par)
            .map(|i| {
                let mut e = vec![F::zero(); n];
                e[i] = F::one();
                e
            })
            .collect();
        if !vectors.is_empty() {
            blocks.push(EigenBlock {
                eigenvalues: Vec::new(),
                parity: par,
                vectors,
            });
        }
    }
    for op in ops {
        let mut next = Vec::new();
        for b in blocks {
            let k = b.vectors.len();
            let basis = Matrix::from_columns(n, &b.vectors)?;
            let restricted = restrict(op, &basis)?;
            let radius = (0..k)
                .map(|r| restricted.row(r).iter().fold(F::zero(), |a, x| a + x.abs()))
                .fold(F::zero(), |a, x| if x > a { x } else { a });
            let bound = radius.floor_i64().ok_or_else(|| {
                Error::NonSemisimpleAction("eigenvalue bound out of range".into())
            })?;
            let mut found = 0;
            for lambda in -bound..=bound {
                let shifted = restricted.sub(&Matrix::identity(k).scale(&F::from_i64(lambda)))?;
                let ker = shifted.kernel_basis();
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let mut eig = b.eigenvalues.clone();
                eig.push(F::from_i64(lambda));
                next.push(EigenBlock {
                    eigenvalues: eig,
                    parity: b.parity,
                    vectors: ker.iter().map(|c| basis.mul_vec(c)).collect::<Result<_>>()?,
                });
                if found == k {
                    break;
                }
            }
            if found != k {
                return Err(Error::NonSemisimpleAction(format!(
                    "operator splits only {found} of {k} dimensions into integral eigenspaces"
                )));
            }
        }
        blocks = next;
    }
    Ok(blocks)
}

/// Matrix of `op` restricted to the column span of `basis` (full column
/// rank); errors if the span is not invariant.
pub(crate) fn restrict<F: Field>(op: &Matrix<F>, basis: &Matrix<F>) -> Result<Matrix<F>> {
    let image = op.mul(basis)?;
    let coords = LeftInverse::new(basis)?;
    let cols = image
        .columns()
        .iter()
        .map(|c| coords.apply(c).ok_or(Error::NonInvariantSubmodule))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(basis.cols(), &cols)
}

/// Coordinates with respect to a full-column-rank basis matrix, via an
/// invertible square submatrix on a set of pivot rows.
pub(crate) struct LeftInverse<F> {
    basis: Matrix<F>,
    rows: Vec<usize>,
    inv: Matrix<F>,
}

impl<F: Field> LeftInverse<F> {
    pub fn new(basis: &Matrix<F>) -> Result<Self> {
        let (_, rows) = basis.transpose().rref();
        if rows.len() != basis.cols() {
            return Err(Error::Invariant("basis vectors are linearly dependent".into()));
        }
        let inv = basis
            .select_rows(&rows)
            .inverse()
            .expect("pivot rows give an invertible block");
        Ok(Self {
            basis: basis.clone(),
            rows,
            inv,
        })
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn apply(&self, v: &[F]) -> Option<Vec<F>> {
        let sub: Vec<F> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&sub).ok()?;
        let back = self.basis.mul_vec(&c).ok()?;
        (back.as_slice() == v).then_some(c)
    }
}

/// Converts eigenvalues of the Cartan basis of `g` into a normalised weight.
pub fn weight_from_eigenvalues<F: Field>(g: &ClassicalAlgebra<F>, eig: &[F]) -> Result<Weight> {
    let shape = g.shape();
    let (p, q) = (shape.p(), shape.q());
    let n = p + q;
    let cartan = g.cartan_indices();
    if eig.len() != cartan.len() {
        return Err(Error::DimensionMismatch {
            expected: cartan.len(),
            found: eig.len(),
        });
    }
    let mut rows: Vec<Vec<F>> = cartan
        .iter()
        .map(|&c| {
            let h = &g.basis()[c];
            (0..n).map(|i| h.get(i, i).clone()).collect()
        })
        .collect();
    let mut rhs = eig.to_vec();
    if g.kind() != ClassicalKind::Gl {
        let mut r = vec![F::zero(); n];
        r[n - 1] = F::one();
        rows.push(r);
        rhs.push(F::zero());
    }
    if g.kind() == ClassicalKind::Psl {
        rows.push(vec![F::one(); n]);
        rhs.push(F::zero());
    }
    let m = Matrix::from_rows(n, &rows)?;
    if m.rank() != n {
        return Err(Error::Invariant("weight frame is not determined".into()));
    }
    let x = m
        .solve(&rhs)?
        .ok_or_else(|| Error::NonIntegralWeight("inconsistent eigenvalues".into()))?;
    let ints = x
        .iter()
        .map(|v| v.to_i64_exact())
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| Error::NonIntegralWeight(format!("{x:?}")))?;
    let w = Weight {
        eps: ints[..p].to_vec(),
        del: ints[p..].to_vec(),
    };
    Ok(if g.kind() == ClassicalKind::Gl { w } else { w.normalized() })
}

/// Weight spaces of a module.
#[derive(Clone, Debug)]
pub struct WeightSpace<F> {
    pub weight: Weight,
    pub parity: u8,
    pub vectors: Vec<Vec<F>>,
}

/// Joint eigenspaces of the Cartan basis of `g` acting on `v`, labelled by
/// normalised weights, split by parity.
pub fn weight_decompose<F: Field>(v: &GModule<F>) -> Result<Vec<WeightSpace<F>>> {
    let g = v.algebra();
    let ops: Vec<Matrix<F>> = g.cartan_indices().iter().map(|&c| v.action(c).clone()).collect();
    let blocks = joint_eigenspaces(&ops, v.parity())?;
    blocks
        .into_iter()
        .map(|b| {
            Ok(WeightSpace {
                weight: weight_from_eigenvalues(g, &b.eigenvalues)?,
                parity: b.parity,
                vectors: b.vectors,
            })
        })
        .collect()
}

/// Sums weight spaces with equal weight across parities.
pub fn weight_dimensions<F>(spaces: &[WeightSpace<F>]) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for s in spaces {
        *out.entry(s.weight.clone()).or_insert(0) += s.vectors.len();
    }
    out
}

/// Result of the root-grading check.
#[derive(Clone, Debug, PartialEq)]
pub struct GradingReport {
    /// The embedding is an injective even homomorphism.
    pub embedding_valid: bool,
    /// Every weight of `L` is a root or zero.
    pub weights_in_roots: bool,
    /// `L_0 = sum_μ [L_μ, L_{-μ}]`.
    pub zero_space_generated: bool,
    pub offending_weights: Vec<Weight>,
    pub embedding_failure: Option<String>,
    /// `(dim L_0, dim sum [L_μ, L_{-μ}])`.
    pub zero_space_dims: (usize, usize),
}

impl GradingReport {
    pub fn passes(&self) -> bool {
        self.embedding_valid && self.weights_in_roots && self.zero_space_generated
    }
}

/// Checks that `L` is graded by the root system of the embedded `g`.
pub fn check_root_graded<F: Field>(l: &LieSuperalgebra<F>, emb: &Embedding<F>) -> Result<GradingReport> {
    let g = emb.algebra();
    let ev = emb.verify(l);
    let embedding_valid = ev.holds();
    let module = emb.module(l)?;
    let spaces = weight_decompose(&module)?;
    let rs = root_system(g.shape());
    let mut offending: BTreeSet<Weight> = BTreeSet::new();
    for s in &spaces {
        if !rs.contains_or_zero(&s.weight) {
            offending.insert(s.weight.clone());
        }
    }
    let mut by_weight: BTreeMap<Weight, Vec<Vec<F>>> = BTreeMap::new();
    for s in &spaces {
        by_weight.entry(s.weight.clone()).or_default().extend(s.vectors.iter().cloned());
    }
    let zero = Weight::zero(g.shape());
    let l0_dim = by_weight.get(&zero).map_or(0, |v| v.len());
    let mut generated: Vec<Vec<F>> = Vec::new();
    for (w, vs) in &by_weight {
        if w.is_zero() {
            continue;
        }
        if let Some(us) = by_weight.get(&w.neg().normalized()) {
            for x in vs {
                for y in us {
                    let b = l.bracket(x, y);
                    if !is_zero_vec(&b) {
                        generated.push(b);
                    }
                }
            }
        }
    }
    let gen_dim = if generated.is_empty() {
        0
    } else {
        Matrix::from_rows(l.dim(), &generated)?.rank()
    };
    Ok(GradingReport {
        embedding_valid,
        weights_in_roots: offending.is_empty(),
        zero_space_generated: gen_dim == l0_dim,
        offending_weights: offending.into_iter().collect(),
        embedding_failure: ev.witness().cloned(),
        zero_space_dims: (l0_dim, gen_dim),
    })
}

/// Largest `p + q` accepted by [`kac_weight_closure`].
pub const KAC_RANK_LIMIT: usize = 6;

/// Weights of the irreducible module of the even part `gl(p) + gl(q)` with
/// highest weight `lambda`: the saturated set generated by `lambda` under
/// the simple-root strings.
pub fn even_part_weights(shape: BlockShape, lambda: &Weight) -> Result<BTreeSet<Weight>> {
    let (p, q) = (shape.p(), shape.q());
    let dominant = lambda.eps.windows(2).all(|w| w[0] >= w[1]) && lambda.del.windows(2).all(|w| w[0] >= w[1]);
    if lambda.eps.len() != p || lambda.del.len() != q {
        return Err(Error::InvalidParameter(format!("weight {lambda} does not match shape {shape}")));
    }
    if !dominant {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    // simple roots of the even part; <μ, α^∨> is a coefficient difference
    // for both blocks
    let mut simple: Vec<(Weight, Box<dyn Fn(&Weight) -> i64>)> = Vec::new();
    for i in 0..p.saturating_sub(1) {
        simple.push((
            Weight::epsilon(shape, i).sub(&Weight::epsilon(shape, i + 1)),
            Box::new(move |w: &Weight| w.eps[i] - w.eps[i + 1]),
        ));
    }
    for r in 0..q.saturating_sub(1) {
        simple.push((
            Weight::delta(shape, r).sub(&Weight::delta(shape, r + 1)),
            Box::new(move |w: &Weight| w.del[r] - w.del[r + 1]),
        ));
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    seen.insert(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for (alpha, coroot) in &simple {
            let c = coroot(&mu);
            let step = if c > 0 { alpha.neg() } else { alpha.clone() };
            let mut cur = mu.clone();
            for _ in 0..c.abs() {
                cur = cur.add(&step);
                if seen.insert(cur.clone()) {
                    queue.push_back(cur.clone());
                }
            }
        }
    }
    Ok(seen)
}

/// Whether every weight `ω + ν` of the Kac module induced from the even-part
/// irreducible of highest weight `lambda` (ω a weight of that module, ν a sum
/// of distinct roots `δ_r - ε_i`) is a root or zero.
///
/// For `lambda = 0` the irreducible module is trivial and only `ν = 0`
/// occurs, so the answer is `true`.
pub fn kac_weight_closure(shape: BlockShape, lambda: &Weight) -> Result<bool> {
    let rank = shape.size();
    if rank > KAC_RANK_LIMIT {
        return Err(Error::RankTooLarge {
            rank,
            limit: KAC_RANK_LIMIT,
        });
    }
    let omegas = even_part_weights(shape, lambda)?;
    // the irreducible quotient of highest weight 0 is trivial: g_{-1} acts by 0
    if lambda.normalized().is_zero() {
        return Ok(true);
    }
    let lowering: Vec<Weight> = (0..shape.p())
        .flat_map(|i| (0..shape.q()).map(move |r| (i, r)))
        .map(|(i, r)| Weight::delta(shape, r).sub(&Weight::epsilon(shape, i)))
        .collect();
    let mut nus = BTreeSet::new();
    for mask in 0u32..(1 << lowering.len()) {
        let nu = lowering
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .fold(Weight::zero(shape), |acc, (_, w)| acc.add(w));
        nus.insert(nu);
    }
    let rs = root_system(shape);
    Ok(omegas
        .iter()
        .all(|w| nus.iter().all(|nu| rs.contains_or_zero(&w.add(nu)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;
    use std::sync::Arc;

    fn shape(p: usize, q: usize) -> BlockShape {
        BlockShape::new(p, q).unwrap()
    }

    #[test]
    fn root_counts() {
        let rs = root_system(shape(2, 1));
        assert_eq!((rs.even_roots.len(), rs.odd_roots.len(), rs.simple_roots.len()), (2, 4, 2));
        let rs = root_system(shape(3, 2));
        assert_eq!((rs.even_roots.len(), rs.odd_roots.len()), (8, 12));
        assert_eq!(2 + 4 + 2, 8);
    }

    #[test]
    fn cartan_matrices() {
        let c = cartan_matrix::<Rational>(&root_system(shape(2, 1)));
        let q = |v| Rational::from_i64(v);
        assert_eq!(c, Matrix::from_rows(2, &[vec![q(2), q(-1)], vec![q(-1), q(0)]]).unwrap());
        let c = cartan_matrix::<Rational>(&root_system(shape(3, 1)));
        assert_eq!(c.rows(), 3);
        assert_eq!(c[(0, 0)], q(2));
        assert_eq!(c[(0, 1)], q(-1));
        assert_eq!(c[(1, 1)], q(2));
        assert_eq!(c[(2, 2)], q(0));
        for (p, qq) in [(2, 1), (3, 2), (4, 1), (2, 2)] {
            let c = cartan_matrix::<Rational>(&root_system(shape(p, qq)));
            assert!(c[(p - 1, p - 1)].is_zero());
        }
    }

    #[test]
    fn adjoint_weights_of_sl21() {
        let g = Arc::new(ClassicalAlgebra::<Rational>::new(ClassicalKind::Sl, shape(2, 1)).unwrap());
        let adj = GModule::adjoint(g.clone());
        let spaces = weight_decompose(&adj).unwrap();
        let dims = weight_dimensions(&spaces);
        let target = Weight::epsilon(shape(2, 1), 0).sub(&Weight::delta(shape(2, 1), 0)).normalized();
        assert_eq!(dims[&target], 1);
        let e13 = spaces.iter().find(|s| s.weight == target).unwrap();
        let mut expect = vec![Rational::from_i64(0); 8];
        expect[g.unit_index(0, 2)] = Rational::from_i64(1);
        assert_eq!(e13.vectors, vec![expect]);
        assert_eq!(e13.parity, 1);
        assert_eq!(dims[&Weight::zero(shape(2, 1))], 2);
        let triv = GModule::trivial(g, 3, 0);
        let spaces = weight_decompose(&triv).unwrap();
        assert_eq!(spaces.len(), 1);
        assert!(spaces[0].weight.is_zero());
    }

    #[test]
    fn non_diagonal_action_is_split() {
        // h acts as [[1, 1], [0, -1]]: eigenvalues 1 and -1
        let q = |v| Rational::from_i64(v);
        let op = Matrix::from_rows(2, &[vec![q(1), q(1)], vec![q(0), q(-1)]]).unwrap();
        let blocks = joint_eigenspaces(&[op.clone()], &[0, 0]).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            for v in &b.vectors {
                let img = op.mul_vec(v).unwrap();
                let expect: Vec<_> = v.iter().map(|x| x.clone() * b.eigenvalues[0].clone()).collect();
                assert_eq!(img, expect);
            }
        }
        let nilpotent = Matrix::from_rows(2, &[vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        assert!(matches!(
            joint_eigenspaces(&[nilpotent], &[0, 0]),
            Err(Error::NonSemisimpleAction(_))
        ));
    }

    #[test]
    fn kac_closure_examples() {
        let s = shape(2, 1);
        let adj = Weight::epsilon(s, 0).sub(&Weight::delta(s, 0));
        assert!(kac_weight_closure(s, &adj).unwrap());
        let two = Weight::epsilon(s, 0).sub(&Weight::epsilon(s, 1)).scale(2);
        assert!(!kac_weight_closure(s, &two).unwrap());
        assert!(kac_weight_closure(s, &Weight::zero(s)).unwrap());
        let big = shape(4, 3);
        assert!(matches!(
            kac_weight_closure(big, &Weight::zero(big)),
            Err(Error::RankTooLarge { .. })
        ));
        let not_dom = Weight::epsilon(s, 1);
        assert!(matches!(kac_weight_closure(s, &not_dom), Err(Error::NotDominant(_))));
    }

    #[test]
    fn even_part_weights_of_adjoint_sl3() {
        let s = shape(3, 1);
        let theta = Weight::epsilon(s, 0).sub(&Weight::epsilon(s, 2));
        let w = even_part_weights(s, &theta).unwrap();
        // 6 roots of sl3 plus 0
        assert_eq!(w.len(), 7);
    }

    #[test]
    fn weight_display() {
        let s = shape(2, 1);
        let w = Weight::epsilon(s, 0).sub(&Weight::delta(s, 0)).scale(2);
        assert_eq!(w.to_string(), "2e1-2d1");
        assert_eq!(Weight::zero(s).to_string(), "0");
    }
}
