use std::collections::BTreeMap;

use super::Field;

/// Sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseRow<F> = Vec<(usize, F)>;

/// Incremental row reducer for large, very sparse linear systems.
///
/// Rows are reduced against the stored pivots as they arrive, so redundant
/// equations cost one reduction and are dropped. Column `ncols` (one past
/// the unknowns) is reserved for the right-hand side of inhomogeneous systems.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
    inconsistent: bool,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
            inconsistent: false,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Adds the homogeneous equation `row . x = 0`.
    pub fn push(&mut self, row: SparseRow<F>) {
        self.push_with_rhs(row, F::zero());
    }

    /// Adds the equation `row . x = rhs`.
    pub fn push_with_rhs(&mut self, mut row: SparseRow<F>, rhs: F) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        if !rhs.is_zero() {
            row.push((self.ncols, rhs));
        }
        while let Some((lead, coef)) = row.first().cloned() {
            if lead == self.ncols {
                self.inconsistent = true;
                return;
            }
            match self.pivots.get(&lead) {
                Some(p) => row = sub_scaled(&row, &coef, p),
                None => {
                    let inv = F::one() / coef;
                    for (_, v) in row.iter_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Back-substitutes so that every pivot column is zero in all other rows.
    fn reduce_fully(&mut self) {
        let keys: Vec<usize> = self.pivots.keys().rev().cloned().collect();
        for (idx, &k) in keys.iter().enumerate() {
            let mut row = self.pivots.remove(&k).expect("pivot present");
            // pivots with larger columns are already fully reduced
            for &later in keys[..idx].iter().rev() {
                if let Ok(pos) = row.binary_search_by_key(&later, |(c, _)| *c) {
                    let coef = row[pos].1.clone();
                    row = sub_scaled(&row, &coef, &self.pivots[&later]);
                }
            }
            self.pivots.insert(k, row);
        }
    }

    /// Basis of the solution space of the homogeneous system.
    pub fn kernel_basis(mut self) -> Vec<Vec<F>> {
        self.reduce_fully();
        let n = self.ncols;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut basis: Vec<Vec<F>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); n];
                v[f] = F::one();
                v
            })
            .collect();
        let free_pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        for (&p, row) in &self.pivots {
            for (c, v) in row.iter().skip(1) {
                if let Some(&i) = free_pos.get(c) {
                    basis[i][p] = -v.clone();
                }
            }
        }
        basis
    }

    /// A particular solution (free variables set to zero), or `None`.
    pub fn solution(mut self) -> Option<Vec<F>> {
        if self.inconsistent {
            return None;
        }
        self.reduce_fully();
        let mut x = vec![F::zero(); self.ncols];
        for (&p, row) in &self.pivots {
            if let Some((c, v)) = row.last() {
                if *c == self.ncols {
                    x[p] = v.clone();
                }
            }
        }
        Some(x)
    }
}

/// `a - s * b` on sorted sparse rows.
fn sub_scaled<F: Field>(a: &[(usize, F)], s: &F, b: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(s.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - s.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn matches_dense_kernel() {
        let rows = vec![
            vec![q(1), q(2), q(0), q(-1)],
            vec![q(2), q(4), q(1), q(0)],
            vec![q(3), q(6), q(1), q(-1)],
        ];
        let dense = Matrix::from_rows(4, &rows).unwrap();
        let mut sp = SparseEchelon::new(4);
        for r in &rows {
            sp.push(r.iter().cloned().enumerate().collect());
        }
        assert_eq!(sp.rank(), 2);
        let k = sp.kernel_basis();
        assert_eq!(k, dense.kernel_basis());
    }

    #[test]
    fn inhomogeneous() {
        let mut sp = SparseEchelon::new(2);
        sp.push_with_rhs(vec![(0, q(1)), (1, q(1))], q(3));
        sp.push_with_rhs(vec![(0, q(1)), (1, q(-1))], q(1));
        assert_eq!(sp.solution(), Some(vec![q(2), q(1)]));

        let mut bad = SparseEchelon::new(1);
        bad.push_with_rhs(vec![(0, q(1))], q(0));
        bad.push_with_rhs(vec![(0, q(1))], q(1));
        assert!(bad.is_inconsistent());
        assert_eq!(bad.solution(), None);
    }
}
