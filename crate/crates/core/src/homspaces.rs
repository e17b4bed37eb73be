//! Modules over the classical algebras, equivariant Hom spaces, the
//! Casimir splitting and invariant complements.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::lie::homogeneous_parity;
use crate::linalg::{Field, Matrix, SparseEchelon, SparseRow};
use crate::roots::{restrict, weight_decompose, LeftInverse, Weight};
use crate::superclassical::{casimir_matrix, star_product, ClassicalAlgebra, ClassicalKind};

/// A finite-dimensional module over a classical algebra `g`, given by one
/// action matrix per basis element of `g`.
#[derive(Clone, Debug)]
pub struct GModule<F> {
    g: Arc<ClassicalAlgebra<F>>,
    parity: Vec<u8>,
    actions: Vec<Matrix<F>>,
}

impl<F: Field> GModule<F> {
    /// Validates shapes and that `ρ(x)` shifts parity by the parity of `x`.
    /// The representation law itself is checked by
    /// [`GModule::verify_representation`].
    pub fn new(g: Arc<ClassicalAlgebra<F>>, parity: Vec<u8>, actions: Vec<Matrix<F>>) -> Result<Self> {
        if actions.len() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                found: actions.len(),
            });
        }
        let n = parity.len();
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: a.rows(),
                });
            }
            for r in 0..n {
                for c in 0..n {
                    if !a[(r, c)].is_zero() && parity[r] != (parity[c] + g.parity()[i]) % 2 {
                        return Err(Error::Invariant(format!(
                            "action of {} breaks the parity grading at ({r}, {c})",
                            g.labels()[i]
                        )));
                    }
                }
            }
        }
        Ok(Self { g, parity, actions })
    }

    pub fn adjoint(g: Arc<ClassicalAlgebra<F>>) -> Self {
        let actions = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
        let parity = g.parity().to_vec();
        Self { g, parity, actions }
    }

    /// `dim` copies of the trivial module, all of parity `parity`.
    pub fn trivial(g: Arc<ClassicalAlgebra<F>>, dim: usize, parity: u8) -> Self {
        let actions = vec![Matrix::zeros(dim, dim); g.dim()];
        Self {
            g,
            parity: vec![parity % 2; dim],
            actions,
        }
    }

    /// A larger classical algebra `target` (e.g. `sl(p|p)` over `psl(p|p)`)
    /// under the bracket with the representatives of `g`.
    pub fn bracket_action(g: Arc<ClassicalAlgebra<F>>, target: &ClassicalAlgebra<F>) -> Result<Self> {
        if g.shape() != target.shape() {
            return Err(Error::MismatchedAlgebra);
        }
        let mut actions = Vec::with_capacity(g.dim());
        for x in g.basis() {
            let cols = target
                .basis()
                .iter()
                .map(|y| target.coords(&crate::superclassical::bracket(x, y)?))
                .collect::<Result<Vec<_>>>()?;
            actions.push(Matrix::from_columns(target.dim(), &cols)?);
        }
        Self::new(g, target.parity().to_vec(), actions)
    }

    pub fn algebra(&self) -> &Arc<ClassicalAlgebra<F>> {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    /// The same module with every basis parity flipped.
    pub fn parity_shifted(&self) -> Self {
        Self {
            g: self.g.clone(),
            parity: self.parity.iter().map(|p| 1 - p).collect(),
            actions: self.actions.clone(),
        }
    }

    /// Checks `ρ([x,y]) = ρ(x)ρ(y) - (-1)^{x̄ȳ} ρ(y)ρ(x)` on all basis pairs.
    pub fn verify_representation(&self) -> Check<(usize, usize)> {
        let d = self.g.dim();
        for i in 0..d {
            for j in i..d {
                let s = F::sign_of(self.g.parity()[i] * self.g.parity()[j]);
                let lhs = {
                    let mut acc = Matrix::zeros(self.dim(), self.dim());
                    for (k, c) in self.g.bracket_coords(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            acc.add_scaled(c, &self.actions[k]).expect("square");
                        }
                    }
                    acc
                };
                let xy = self.actions[i].mul(&self.actions[j]).expect("square");
                let yx = self.actions[j].mul(&self.actions[i]).expect("square");
                let mut rhs = xy;
                rhs.add_scaled(&-s, &yx).expect("square");
                if lhs != rhs {
                    return Check::Fails((i, j));
                }
            }
        }
        Check::Holds
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if *self.g == *other.g {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra)
        }
    }

    /// `V ⊗ W` with basis `v_a ⊗ w_b` at index `a * dim W + b` and action
    /// `x(v ⊗ w) = xv ⊗ w + (-1)^{x̄v̄} v ⊗ xw`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let (dv, dw) = (self.dim(), other.dim());
        let n = dv * dw;
        let parity = (0..n).map(|k| (self.parity[k / dw] + other.parity[k % dw]) % 2).collect();
        let mut actions = Vec::with_capacity(self.g.dim());
        for (i, (rv, rw)) in self.actions.iter().zip(&other.actions).enumerate() {
            let xp = self.g.parity()[i];
            let mut m = Matrix::zeros(n, n);
            for a in 0..dv {
                let sign = F::sign_of(xp * self.parity[a]);
                for b in 0..dw {
                    let col = a * dw + b;
                    for a2 in 0..dv {
                        let c = &rv[(a2, a)];
                        if !c.is_zero() {
                            let e: &mut F = &mut m[(a2 * dw + b, col)];
                            *e = e.clone() + c.clone();
                        }
                    }
                    for b2 in 0..dw {
                        let c = &rw[(b2, b)];
                        if !c.is_zero() {
                            let e: &mut F = &mut m[(a * dw + b2, col)];
                            *e = e.clone() + sign.clone() * c.clone();
                        }
                    }
                }
            }
            actions.push(m);
        }
        Ok(Self {
            g: self.g.clone(),
            parity,
            actions,
        })
    }

    /// `V ⊕ W` with the basis of `V` first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let (dv, dw) = (self.dim(), other.dim());
        let mut parity = self.parity.clone();
        parity.extend(&other.parity);
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                Matrix::from_fn(dv + dw, dv + dw, |r, c| match (r < dv, c < dv) {
                    (true, true) => a[(r, c)].clone(),
                    (false, false) => b[(r - dv, c - dv)].clone(),
                    _ => F::zero(),
                })
            })
            .collect();
        Ok(Self {
            g: self.g.clone(),
            parity,
            actions,
        })
    }

    /// The graded subspace spanned by `vectors`, with its induced module
    /// structure. Fails unless the span is graded and invariant.
    pub fn submodule(&self, vectors: &[Vec<F>]) -> Result<Submodule<F>> {
        let n = self.dim();
        let mut parts: [Vec<Vec<F>>; 2] = [Vec::new(), Vec::new()];
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            for (par, part) in parts.iter_mut().enumerate() {
                let proj: Vec<F> = v
                    .iter()
                    .zip(&self.parity)
                    .map(|(x, &p)| if p as usize == par { x.clone() } else { F::zero() })
                    .collect();
                part.push(proj);
            }
        }
        let total_rank = if vectors.is_empty() {
            0
        } else {
            Matrix::from_rows(n, vectors)?.rank()
        };
        let mut basis_vecs = Vec::new();
        let mut parity = Vec::new();
        for (par, part) in parts.iter().enumerate() {
            if part.is_empty() {
                continue;
            }
            let (rows, piv) = Matrix::from_rows(n, part)?.row_space_basis();
            for r in 0..piv.len() {
                basis_vecs.push(rows.row_vec(r));
                parity.push(par as u8);
            }
        }
        if basis_vecs.len() != total_rank {
            return Err(Error::Invariant("subspace is not graded".into()));
        }
        let basis = Matrix::from_columns(n, &basis_vecs)?;
        let actions = if basis_vecs.is_empty() {
            vec![Matrix::zeros(0, 0); self.g.dim()]
        } else {
            self.actions
                .iter()
                .map(|a| restrict(a, &basis))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Submodule {
            basis,
            module: Self {
                g: self.g.clone(),
                parity,
                actions,
            },
        })
    }
}

/// A submodule: basis columns in the ambient module and the induced action.
#[derive(Clone, Debug)]
pub struct Submodule<F> {
    /// `dim V x dim U`, columns are the basis of `U`.
    pub basis: Matrix<F>,
    pub module: GModule<F>,
}

impl<F: Field> Submodule<F> {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        self.basis.columns()
    }
}

/// A homogeneous equivariant linear map `V -> X`, as a `dim X x dim V`
/// matrix, satisfying `φ(x v) = (-1)^{x̄ φ̄} x φ(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomMap<F> {
    pub parity: u8,
    pub matrix: Matrix<F>,
}

/// A module rewritten in a basis of weight vectors.
struct WeightFrame<F> {
    weights: Vec<Weight>,
    parity: Vec<u8>,
    /// Columns are the weight vectors in the original basis.
    to_orig: Matrix<F>,
    /// Inverse of `to_orig`; `None` when `to_orig` is the identity.
    from_orig: Option<Matrix<F>>,
}

impl<F: Field> WeightFrame<F> {
    fn new(v: &GModule<F>) -> Result<Self> {
        let spaces = weight_decompose(v)?;
        let n = v.dim();
        let mut weights = Vec::with_capacity(n);
        let mut parity = Vec::with_capacity(n);
        let mut vecs = Vec::with_capacity(n);
        for s in spaces {
            for vec in s.vectors {
                weights.push(s.weight.clone());
                parity.push(s.parity);
                vecs.push(vec);
            }
        }
        if vecs.len() != n {
            return Err(Error::Decomposition(format!(
                "weight spaces cover {} of {n} dimensions",
                vecs.len()
            )));
        }
        // keep the original basis when every weight vector is a unit vector
        let unit_pos: Option<Vec<usize>> = vecs
            .iter()
            .map(|v| {
                let nz: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
                (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
            })
            .collect();
        if let Some(pos) = unit_pos {
            let mut w = vec![weights[0].clone(); n];
            let mut p = vec![0; n];
            for (k, &i) in pos.iter().enumerate() {
                w[i] = weights[k].clone();
                p[i] = parity[k];
            }
            return Ok(Self {
                weights: w,
                parity: p,
                to_orig: Matrix::identity(n),
                from_orig: None,
            });
        }
        let to_orig = Matrix::from_columns(n, &vecs)?;
        let from_orig = to_orig
            .inverse()
            .ok_or_else(|| Error::Decomposition("weight vectors are dependent".into()))?;
        Ok(Self {
            weights,
            parity,
            to_orig,
            from_orig: Some(from_orig),
        })
    }

    fn transform(&self, m: &Matrix<F>) -> Result<Matrix<F>> {
        match &self.from_orig {
            None => Ok(m.clone()),
            Some(inv) => inv.mul(&m.mul(&self.to_orig)?),
        }
    }
}

fn sparse_columns<F: Field>(m: &Matrix<F>) -> Vec<Vec<(usize, F)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for r in 0..m.rows() {
        for (c, v) in m.row(r).iter().enumerate() {
            if !v.is_zero() {
                cols[c].push((r, v.clone()));
            }
        }
    }
    cols
}

fn sparse_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<(usize, F)>> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect()
        })
        .collect()
}

/// Checks `ρ_X(x) Φ = (-1)^{x̄s} Φ ρ_V(x)` for every basis element of `g`.
pub fn is_equivariant<F: Field>(v: &GModule<F>, x: &GModule<F>, phi: &HomMap<F>) -> Result<bool> {
    let g = v.algebra();
    for i in 0..g.dim() {
        let lhs = x.action(i).mul(&phi.matrix)?;
        let rhs = phi.matrix.mul(v.action(i))?.scale(&F::sign_of(g.parity()[i] * phi.parity));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of `Hom_g(V, X)`, even maps first, then odd maps.
///
/// Both modules are rewritten in weight bases, so only entries between
/// vectors of equal weight are unknowns. The equivariance equations are
/// imposed for the Chevalley generators (plus the Cartan basis for `gl`),
/// solved by sparse elimination, and every solution is then checked
/// against the full basis of `g`.
pub fn hom_basis<F: Field>(v: &GModule<F>, x: &GModule<F>) -> Result<Vec<HomMap<F>>> {
    if **v.algebra() != **x.algebra() {
        return Err(Error::MismatchedAlgebra);
    }
    let g = v.algebra().clone();
    let fv = WeightFrame::new(v)?;
    let fx = WeightFrame::new(x)?;
    let mut gens: Vec<usize> = g
        .chevalley_generators()
        .into_iter()
        .flat_map(|(e, f)| [e, f])
        .collect();
    if g.kind() == ClassicalKind::Gl {
        gens.extend(g.cartan_indices());
    }
    let rho_v: Vec<Vec<Vec<(usize, F)>>> = gens
        .iter()
        .map(|&i| fv.transform(v.action(i)).map(|m| sparse_rows(&m)))
        .collect::<Result<_>>()?;
    let rho_x: Vec<Vec<Vec<(usize, F)>>> = gens
        .iter()
        .map(|&i| fx.transform(x.action(i)).map(|m| sparse_columns(&m)))
        .collect::<Result<_>>()?;

    let mut by_weight: HashMap<&Weight, Vec<usize>> = HashMap::new();
    for (b, w) in fx.weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(b);
    }

    let mut out = Vec::new();
    for s in [0u8, 1] {
        let mut unknowns: Vec<(usize, usize)> = Vec::new();
        for (a, w) in fv.weights.iter().enumerate() {
            for &b in by_weight.get(w).map(Vec::as_slice).unwrap_or(&[]) {
                if fx.parity[b] == (fv.parity[a] + s) % 2 {
                    unknowns.push((b, a));
                }
            }
        }
        if unknowns.is_empty() {
            continue;
        }
        let mut solver = SparseEchelon::new(unknowns.len());
        for (gi, &i) in gens.iter().enumerate() {
            let sign = F::sign_of(g.parity()[i] * s);
            let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, F>> = BTreeMap::new();
            for (u, &(b, a)) in unknowns.iter().enumerate() {
                // (ρ_X Φ)_{r,a} gets ρ_X[r,b] Φ[b,a]
                for (r, c) in &rho_x[gi][b] {
                    let e = eqs.entry((*r, a)).or_default().entry(u).or_insert_with(F::zero);
                    *e = e.clone() + c.clone();
                }
                // (Φ ρ_V)_{b,c} gets Φ[b,a] ρ_V[a,c]
                for (c, val) in &rho_v[gi][a] {
                    let e = eqs.entry((b, *c)).or_default().entry(u).or_insert_with(F::zero);
                    *e = e.clone() - sign.clone() * val.clone();
                }
            }
            for (_, row) in eqs {
                let row: SparseRow<F> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    solver.push(row);
                }
            }
        }
        for sol in solver.kernel_basis() {
            let mut phi = Matrix::zeros(x.dim(), v.dim());
            for (u, &(b, a)) in unknowns.iter().enumerate() {
                phi[(b, a)] = sol[u].clone();
            }
            let phi = match (&fx.from_orig, &fv.from_orig) {
                (None, None) => phi,
                _ => {
                    let left = fx.to_orig.mul(&phi)?;
                    match &fv.from_orig {
                        Some(inv) => left.mul(inv)?,
                        None => left,
                    }
                }
            };
            let map = HomMap { parity: s, matrix: phi };
            if !is_equivariant(v, x, &map)? {
                return Err(Error::Invariant(
                    "generator equations admit a non-equivariant solution".into(),
                ));
            }
            out.push(map);
        }
    }
    Ok(out)
}

/// `V = ker C ⊕ im C` for the Casimir operator `C`.
pub fn casimir_split<F: Field>(v: &GModule<F>) -> Result<(Submodule<F>, Submodule<F>)> {
    let c = casimir_matrix(v.algebra(), v)?;
    let ker = c.kernel_basis();
    let (im_rows, _) = c.transpose().row_space_basis();
    let im: Vec<Vec<F>> = (0..im_rows.rows()).map(|r| im_rows.row_vec(r)).collect();
    let mut all = ker.clone();
    all.extend(im.iter().cloned());
    let rank = if all.is_empty() {
        0
    } else {
        Matrix::from_rows(v.dim(), &all)?.rank()
    };
    if rank != v.dim() {
        return Err(Error::Decomposition(
            "kernel and image of the Casimir operator do not span the module".into(),
        ));
    }
    Ok((v.submodule(&ker)?, v.submodule(&im)?))
}

/// A `g`-invariant complement of the submodule `u` in `v`, found as the
/// kernel of an even equivariant projection `v -> u` fixing `u`; `None`
/// when no such projection exists.
pub fn invariant_complement<F: Field>(v: &GModule<F>, u: &Submodule<F>) -> Result<Option<Submodule<F>>> {
    let (n, k) = (v.dim(), u.dim());
    if u.basis.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.basis.rows(),
        });
    }
    for a in v.actions() {
        restrict(a, &u.basis)?;
    }
    if k == 0 {
        let all: Vec<Vec<F>> = Matrix::<F>::identity(n).columns();
        return Ok(Some(v.submodule(&all)?));
    }
    // unknown π[r][c] with parity(u_r) = parity(v_c)
    let mut index = HashMap::new();
    for r in 0..k {
        for c in 0..n {
            if u.module.parity()[r] == v.parity()[c] {
                let next = index.len();
                index.insert((r, c), next);
            }
        }
    }
    let mut solver = SparseEchelon::new(index.len());
    let g = v.algebra();
    for i in 0..g.dim() {
        let rv = v.action(i);
        let ru = u.module.action(i);
        // (π ρ_V - ρ_U π)[r][c] = 0
        for r in 0..k {
            for c in 0..n {
                let mut row: BTreeMap<usize, F> = BTreeMap::new();
                for a in 0..n {
                    let val = &rv[(a, c)];
                    if !val.is_zero() {
                        if let Some(&idx) = index.get(&(r, a)) {
                            let e = row.entry(idx).or_insert_with(F::zero);
                            *e = e.clone() + val.clone();
                        }
                    }
                }
                for t in 0..k {
                    let val = &ru[(r, t)];
                    if !val.is_zero() {
                        if let Some(&idx) = index.get(&(t, c)) {
                            let e = row.entry(idx).or_insert_with(F::zero);
                            *e = e.clone() - val.clone();
                        }
                    }
                }
                let row: SparseRow<F> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    solver.push(row);
                }
            }
        }
    }
    // π u_j = e_j
    for j in 0..k {
        for r in 0..k {
            let row: SparseRow<F> = (0..n)
                .filter_map(|c| {
                    let val = u.basis[(c, j)].clone();
                    if val.is_zero() {
                        return None;
                    }
                    index.get(&(r, c)).map(|&idx| (idx, val))
                })
                .collect::<BTreeMap<_, _>>()
                .into_iter()
                .collect();
            let rhs = if r == j { F::one() } else { F::zero() };
            solver.push_with_rhs(row, rhs);
        }
    }
    let sol = match solver.solution() {
        Some(s) => s,
        None => return Ok(None),
    };
    let mut pi = Matrix::zeros(k, n);
    for (&(r, c), &idx) in &index {
        pi[(r, c)] = sol[idx].clone();
    }
    let w = v.submodule(&pi.kernel_basis())?;
    Ok(Some(w))
}

/// Coordinates in the column span of a submodule basis.
pub fn submodule_coordinates<F: Field>(u: &Submodule<F>, vector: &[F]) -> Result<Option<Vec<F>>> {
    Ok(LeftInverse::new(&u.basis)?.apply(vector))
}

/// Parity of a homogeneous vector of `v`.
pub fn vector_parity<F: Field>(v: &GModule<F>, vector: &[F]) -> Result<u8> {
    homogeneous_parity(vector, v.parity())
}

/// The bracket `g ⊗ g -> g` as an even map.
pub fn bracket_hom<F: Field>(g: &ClassicalAlgebra<F>) -> HomMap<F> {
    let d = g.dim();
    let cols: Vec<Vec<F>> = (0..d * d).map(|k| g.bracket_coords(k / d, k % d)).collect();
    HomMap {
        parity: 0,
        matrix: Matrix::from_columns(d, &cols).expect("uniform columns"),
    }
}

/// The star product `g ⊗ g -> g` of `sl(m+1|n+1)`, `m != n`.
pub fn star_hom<F: Field>(g: &ClassicalAlgebra<F>) -> Result<HomMap<F>> {
    let shape = g.shape();
    let (m, n) = (shape.p() - 1, shape.q() - 1);
    let d = g.dim();
    let cols = (0..d * d)
        .map(|k| g.coords(&star_product(&g.basis()[k / d], &g.basis()[k % d], m, n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomMap {
        parity: 0,
        matrix: Matrix::from_columns(d, &cols)?,
    })
}

/// `x ⊗ y ↦ str(xy)` as an even map `g ⊗ g -> F`.
pub fn supertrace_hom<F: Field>(g: &ClassicalAlgebra<F>) -> HomMap<F> {
    let d = g.dim();
    let row: Vec<F> = (0..d * d).map(|k| g.form(k / d, k % d)).collect();
    HomMap {
        parity: 0,
        matrix: Matrix::from_vec(1, d * d, row).expect("sized"),
    }
}

/// Whether `phi` lies in the span of `basis`.
pub fn in_hom_span<F: Field>(basis: &[HomMap<F>], phi: &HomMap<F>) -> bool {
    let len = phi.matrix.entries().len();
    if basis.iter().any(|h| h.matrix.entries().len() != len) {
        return false;
    }
    let mut rows: Vec<Vec<F>> = basis.iter().map(|h| h.matrix.entries().to_vec()).collect();
    let r = if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(len, &rows).expect("uniform").rank()
    };
    rows.push(phi.matrix.entries().to_vec());
    Matrix::from_rows(len, &rows).expect("uniform").rank() == r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superclassical::{supertrace, BlockShape, SuperMatrix};
    use crate::Rational;

    fn sl(p: usize, q: usize) -> Arc<ClassicalAlgebra<Rational>> {
        Arc::new(ClassicalAlgebra::new(ClassicalKind::Sl, BlockShape::new(p, q).unwrap()).unwrap())
    }

    #[test]
    fn tensor_dimensions_and_trivial_factor() {
        let g = sl(2, 1);
        let adj = GModule::adjoint(g.clone());
        let t = adj.tensor(&adj).unwrap();
        assert_eq!(t.dim(), 64);
        assert!(t.verify_representation().holds());
        let triv = GModule::trivial(g.clone(), 1, 0);
        let tv = triv.tensor(&adj).unwrap();
        assert_eq!(tv.actions(), adj.actions());
        let other = GModule::adjoint(sl(3, 1));
        assert!(matches!(adj.tensor(&other), Err(Error::MismatchedAlgebra)));
    }

    #[test]
    fn adjoint_is_a_representation() {
        for (p, q) in [(2, 1), (2, 2)] {
            let g = Arc::new(
                ClassicalAlgebra::<Rational>::type_a(p - 1, q - 1).unwrap(),
            );
            assert!(GModule::adjoint(g).verify_representation().holds());
        }
    }

    #[test]
    fn hom_adjoint_square_to_adjoint_sl21() {
        let g = sl(2, 1);
        let adj = GModule::adjoint(g.clone());
        let sq = adj.tensor(&adj).unwrap();
        let homs = hom_basis(&sq, &adj).unwrap();
        assert_eq!(homs.len(), 2);
        assert!(homs.iter().all(|h| h.parity == 0));
        let d = g.dim();
        let bracket_cols: Vec<Vec<Rational>> = (0..d * d).map(|k| g.bracket_coords(k / d, k % d)).collect();
        let star_cols: Vec<Vec<Rational>> = (0..d * d)
            .map(|k| {
                let s = star_product(&g.basis()[k / d], &g.basis()[k % d], 1, 0).unwrap();
                g.coords(&s).unwrap()
            })
            .collect();
        let span = Matrix::from_rows(d * d * d, &homs.iter().map(|h| h.matrix.entries().to_vec()).collect::<Vec<_>>())
            .unwrap();
        for cols in [bracket_cols, star_cols] {
            let m = Matrix::from_columns(d, &cols).unwrap();
            let stacked = span.vstack(&Matrix::from_rows(d * d * d, &[m.entries().to_vec()]).unwrap()).unwrap();
            assert_eq!(stacked.rank(), 2);
        }
    }

    #[test]
    fn hom_to_trivial_is_supertrace() {
        let g = sl(2, 1);
        let adj = GModule::adjoint(g.clone());
        let sq = adj.tensor(&adj).unwrap();
        let homs = hom_basis(&sq, &GModule::trivial(g.clone(), 1, 0)).unwrap();
        assert_eq!(homs.len(), 1);
        let d = g.dim();
        let str_row: Vec<Rational> = (0..d * d)
            .map(|k| supertrace(&g.basis()[k / d].mul(&g.basis()[k % d]).unwrap()))
            .collect();
        let m = Matrix::from_rows(d * d, &[homs[0].matrix.entries().to_vec(), str_row]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn odd_homs_into_parity_shift() {
        let g = sl(2, 1);
        let adj = GModule::adjoint(g.clone());
        let homs = hom_basis(&adj, &adj.parity_shifted()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].parity, 1);
    }

    #[test]
    fn casimir_split_adjoint_plus_trivial() {
        let g = sl(2, 1);
        let v = GModule::adjoint(g.clone()).direct_sum(&GModule::trivial(g.clone(), 1, 0)).unwrap();
        let (ker, im) = casimir_split(&v).unwrap();
        assert_eq!((ker.dim(), im.dim()), (1, 8));
        let mut e = vec![Rational::from_i64(0); 9];
        e[8] = Rational::from_i64(1);
        assert_eq!(ker.vectors(), vec![e]);
        let (ker, im) = casimir_split(&GModule::adjoint(sl(3, 2))).unwrap();
        assert_eq!((ker.dim(), im.dim()), (0, 24));
        let (ker, im) = casimir_split(&GModule::trivial(g, 2, 1)).unwrap();
        assert_eq!((ker.dim(), im.dim()), (2, 0));
    }

    #[test]
    fn complements() {
        let g = sl(2, 1);
        let v = GModule::adjoint(g.clone()).direct_sum(&GModule::trivial(g.clone(), 1, 0)).unwrap();
        let mut e = vec![Rational::from_i64(0); 9];
        e[8] = Rational::from_i64(1);
        let u = v.submodule(&[e]).unwrap();
        let w = invariant_complement(&v, &u).unwrap().unwrap();
        assert_eq!(w.dim(), 8);
        let all = v.submodule(&Matrix::<Rational>::identity(9).columns()).unwrap();
        assert_eq!(invariant_complement(&v, &all).unwrap().unwrap().dim(), 0);

        let shape = BlockShape::new(2, 2).unwrap();
        let psl = Arc::new(ClassicalAlgebra::<Rational>::new(ClassicalKind::Psl, shape).unwrap());
        let sl22 = ClassicalAlgebra::<Rational>::new(ClassicalKind::Sl, shape).unwrap();
        let v = GModule::bracket_action(psl, &sl22).unwrap();
        assert!(v.verify_representation().holds());
        let ident = sl22.coords(&SuperMatrix::identity(shape)).unwrap();
        let u = v.submodule(&[ident]).unwrap();
        assert!(invariant_complement(&v, &u).unwrap().is_none());
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let g = sl(2, 1);
        let adj = GModule::adjoint(g.clone());
        let mut e = vec![Rational::from_i64(0); 8];
        e[g.unit_index(0, 1)] = Rational::from_i64(1);
        assert!(matches!(adj.submodule(&[e]), Err(Error::NonInvariantSubmodule)));
    }
}
