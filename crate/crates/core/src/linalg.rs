//! Dense exact linear algebra over finite fields.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Embedding, FieldCtx, FieldElem};
use crate::poly::FPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&c| self.field.format_elem(c)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Output of [`FMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: FMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    /// `particular` solves the system; adding any combination of `kernel`
    /// gives every other solution.
    Solved {
        particular: Vec<FieldElem>,
        kernel: Vec<Vec<FieldElem>>,
    },
}

/// `dst += factor * src`
#[inline]
fn axpy(f: &FieldCtx, dst: &mut [FieldElem], src: &[FieldElem], factor: FieldElem) {
    if factor == FieldElem::ONE {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = f.add(*d, s);
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d = f.add(*d, f.mul(factor, s));
            }
        }
    }
}

impl FMatrix {
    pub fn zeros(field: &Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        FMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Arc<FieldCtx>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElem::ONE;
        }
        m
    }

    pub fn from_vec(field: &Arc<FieldCtx>, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(FMatrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Arc<FieldCtx>, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".to_string()));
        }
        Self::from_vec(field, rows.len(), cols, rows.concat())
    }

    /// Small integer entries mapped into the prime subfield.
    pub fn from_ints(field: &Arc<FieldCtx>, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<FieldElem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        Self::from_rows(field, &rows)
    }

    pub fn from_fn(
        field: &Arc<FieldCtx>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        FMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> FMatrix {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    axpy(f, dst, other.row(k), a);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.rows {
            return Err(Error::Shape(format!("vector of length {} for {} rows", v.len(), self.rows)));
        }
        let mut out = vec![FieldElem::ZERO; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if !a.is_zero() {
                axpy(&self.field, &mut out, self.row(r), a);
            }
        }
        Ok(out)
    }

    /// Vertical concatenation; all blocks must share field and column count.
    pub fn vstack(blocks: &[FMatrix]) -> Result<FMatrix> {
        let first = blocks.first().ok_or_else(|| Error::Shape("nothing to stack".to_string()))?;
        let mut data = Vec::with_capacity(blocks.iter().map(|b| b.data.len()).sum());
        for b in blocks {
            if b.field != first.field {
                return Err(Error::FieldMismatch);
            }
            if b.cols != first.cols {
                return Err(Error::Shape("blocks differ in column count".to_string()));
            }
            data.extend_from_slice(&b.data);
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        Ok(FMatrix { field: first.field.clone(), rows, cols: first.cols, data })
    }

    /// Entrywise image under a field embedding.
    pub fn map_embedding(&self, emb: &Embedding) -> FMatrix {
        FMatrix {
            field: emb.target().clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&c| emb.apply(c)).collect(),
        }
    }

    /// Reduced row-echelon form, pivoting on the first nonzero entry of each
    /// column.
    pub fn rref(&self) -> Rref {
        let f = &*self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(r) = (pr..rows).find(|&r| !a[r * cols + c].is_zero()) else {
                continue;
            };
            if r != pr {
                for k in c..cols {
                    a.swap(r * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv_nonzero(a[pr * cols + c]);
            if inv != FieldElem::ONE {
                for v in &mut a[pr * cols + c..(pr + 1) * cols] {
                    *v = f.mul(*v, inv);
                }
            }
            let (before, rest) = a.split_at_mut(pr * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let src = &pivot_row[c..];
            for row in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
                let factor = row[c];
                if !factor.is_zero() {
                    axpy(f, &mut row[c..], src, f.neg(factor));
                }
            }
            pivots.push(c);
            pr += 1;
        }
        Rref {
            matrix: FMatrix { field: self.field.clone(), rows, cols, data: a },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FieldElem::ZERO; self.cols];
                v[free] = FieldElem::ONE;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(matrix.get(r, free));
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &[FieldElem]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let cols = self.cols;
        let aug = Self::from_fn(&self.field, self.rows, cols + 1, |r, c| {
            if c < cols {
                self.get(r, c)
            } else {
                b[r]
            }
        });
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut particular = vec![FieldElem::ZERO; cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = matrix.get(r, cols);
        }
        Ok(Solution::Solved { particular, kernel: self.kernel_basis() })
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let f = &*self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = FieldElem::ONE;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Ok(FieldElem::ZERO);
            };
            if r != c {
                for k in 0..n {
                    a.swap(r * n + k, c * n + k);
                }
                det = f.neg(det);
            }
            let piv = a[c * n + c];
            det = f.mul(det, piv);
            let inv = f.inv_nonzero(piv);
            for r2 in c + 1..n {
                let factor = f.mul(a[r2 * n + c], inv);
                if factor.is_zero() {
                    continue;
                }
                for k in c..n {
                    let t = f.mul(factor, a[c * n + k]);
                    a[r2 * n + k] = f.sub(a[r2 * n + k], t);
                }
            }
        }
        Ok(det)
    }

    /// Monic `det(zI - self)`.
    pub fn charpoly(&self) -> Result<FPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let c = charpoly_dense(&self.field, self.rows, self.data.clone());
        Ok(FPoly::new(&self.field, c))
    }

    /// Characteristic polynomial of `X * self` with `X = diag(1, x, ..., x^{s-1})`
    /// and `x` an indeterminate.
    ///
    /// Every `z`-coefficient is a polynomial in `x` of degree at most
    /// `D = s(s-1)/2`. Each is recovered by evaluating at the first `D + 1`
    /// elements of the smallest extension with at least `D + 2` elements and
    /// interpolating.
    pub fn charpoly_xm(&self) -> Result<XCharPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let s = self.rows;
        let bound = s * s.saturating_sub(1) / 2;
        let ext = FieldCtx::extension_with_order(&self.field, bound as u128 + 2)?;
        let emb = Embedding::new(&self.field, &ext)?;
        let lifted = self.map_embedding(&emb);
        let nodes: Vec<FieldElem> = ext.elements().take(bound + 1).collect();
        // evaluations[i][j] = z^j coefficient at x = nodes[i]
        let evaluations: Vec<Vec<FieldElem>> = nodes
            .par_iter()
            .map(|&x| charpoly_dense(&ext, s, lifted.scaled_by_powers(x)))
            .collect();
        let columns: Vec<Vec<FieldElem>> = (0..=s)
            .map(|j| evaluations.iter().map(|e| e[j]).collect())
            .collect();
        let lifted_polys = interpolate_many(&ext, &nodes, &columns)?;
        let zcoeffs = lifted_polys
            .into_iter()
            .map(|p| {
                let c = p
                    .coeffs()
                    .iter()
                    .map(|&c| emb.preimage(c).ok_or(Error::NoEmbedding))
                    .collect::<Result<Vec<_>>>()?;
                Ok(FPoly::new(&self.field, c))
            })
            .collect::<Result<Vec<_>>>()?;
        let k = zcoeffs.iter().position(|p| !p.is_zero()).unwrap_or(s);
        Ok(XCharPoly { k, zcoeffs })
    }

    /// Row `i` multiplied by `x^i`, i.e. the data of `diag(1, x, ...) * self`.
    pub(crate) fn scaled_by_powers(&self, x: FieldElem) -> Vec<FieldElem> {
        let f = &self.field;
        let mut data = self.data.clone();
        let mut w = FieldElem::ONE;
        for row in data.chunks_exact_mut(self.cols) {
            if w != FieldElem::ONE {
                for v in row.iter_mut() {
                    *v = f.mul(*v, w);
                }
            }
            w = f.mul(w, x);
        }
        data
    }

    /// Matrix text format: `rows cols`, then one line of entries per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&c| self.field.format_elem(c)).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse(field: &Arc<FieldCtx>, text: &str) -> Result<FMatrix> {
        let mut tokens = text.split_whitespace();
        let mut dim = || -> Result<usize> {
            tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Shape("matrix header must be `rows cols`".to_string()))
        };
        let (rows, cols) = (dim()?, dim()?);
        let data = tokens.map(|t| field.parse_elem(t)).collect::<Result<Vec<_>>>()?;
        Self::from_vec(field, rows, cols, data)
    }
}

/// Hessenberg reduction followed by the recurrence on leading principal
/// minors. Returns `n + 1` coefficients, low to high.
pub(crate) fn charpoly_dense(f: &FieldCtx, n: usize, mut h: Vec<FieldElem>) -> Vec<FieldElem> {
    let at = |r: usize, c: usize| r * n + c;
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| !h[at(i, c)].is_zero()) else {
            continue;
        };
        let p = c + 1;
        if i != p {
            for k in 0..n {
                h.swap(at(i, k), at(p, k));
            }
            for k in 0..n {
                h.swap(at(k, i), at(k, p));
            }
        }
        let t_inv = f.inv_nonzero(h[at(p, c)]);
        for i in p + 1..n {
            let u = f.mul(h[at(i, c)], t_inv);
            if u.is_zero() {
                continue;
            }
            // row_i -= u * row_p
            let neg_u = f.neg(u);
            let (head, tail) = h.split_at_mut(at(i, 0));
            axpy(f, &mut tail[c..n], &head[at(p, c)..at(p, n)], neg_u);
            // col_p += u * col_i
            for k in 0..n {
                let v = h[at(k, i)];
                if !v.is_zero() {
                    h[at(k, p)] = f.add(h[at(k, p)], f.mul(u, v));
                }
            }
        }
    }
    // polys[m] = charpoly of the leading m x m block
    let mut polys: Vec<Vec<FieldElem>> = Vec::with_capacity(n + 1);
    polys.push(vec![FieldElem::ONE]);
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![FieldElem::ZERO; m + 1];
        let d = h[at(m - 1, m - 1)];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = f.add(next[k + 1], c);
            next[k] = f.sub(next[k], f.mul(d, c));
        }
        let mut t = FieldElem::ONE;
        for i in 1..m {
            t = f.mul(t, h[at(m - i, m - i - 1)]);
            if t.is_zero() {
                break;
            }
            let coef = f.mul(t, h[at(m - i - 1, m - 1)]);
            if coef.is_zero() {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = f.sub(next[k], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 entries")
}

/// Characteristic polynomial of `X M` with symbolic `x`, as
/// `sum_j zcoeffs[j](x) z^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XCharPoly {
    /// Multiplicity of the factor `z`.
    pub k: usize,
    pub zcoeffs: Vec<FPoly>,
}

impl XCharPoly {
    /// Matrix size.
    pub fn size(&self) -> usize {
        self.zcoeffs.len() - 1
    }

    /// `deg_z g(z, x)` where the characteristic polynomial is `z^k g(z, x)`.
    pub fn g_degree(&self) -> usize {
        self.size() - self.k
    }

    /// Substitutes a value for `x`, giving a polynomial in `z`.
    pub fn specialize(&self, x: FieldElem) -> FPoly {
        let field = self.zcoeffs[0].field();
        FPoly::new(field, self.zcoeffs.iter().map(|p| p.eval(x)).collect())
    }

    /// One `c0 c1 ...` line per power of `z` (lowest first), then `k=<int>`.
    pub fn to_text(&self) -> String {
        let mut s: String = self.zcoeffs.iter().map(|p| format!("{}\n", p.to_text())).collect();
        s.push_str(&format!("k={}\n", self.k));
        s
    }
}

/// The polynomial of degree below `points.len()` through all points.
pub fn lagrange_interpolate(field: &Arc<FieldCtx>, points: &[(FieldElem, FieldElem)]) -> Result<FPoly> {
    if points.is_empty() {
        return Err(Error::Shape("interpolation needs at least one point".to_string()));
    }
    let nodes: Vec<FieldElem> = points.iter().map(|p| p.0).collect();
    let values: Vec<FieldElem> = points.iter().map(|p| p.1).collect();
    Ok(interpolate_many(field, &nodes, &[values])?.remove(0))
}

/// Interpolates several value columns over one node set, sharing the
/// barycentric weights and the node quotients `P(x) / (x - node)`.
fn interpolate_many(field: &Arc<FieldCtx>, nodes: &[FieldElem], columns: &[Vec<FieldElem>]) -> Result<Vec<FPoly>> {
    let f = &**field;
    let n = nodes.len();
    let mut sorted: Vec<u64> = nodes.iter().map(|x| x.index()).collect();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateNode);
    }
    // master polynomial prod (x - node), low to high, degree n
    let mut master = vec![FieldElem::ONE];
    for &x in nodes {
        let mut next = vec![FieldElem::ZERO; master.len() + 1];
        for (k, &c) in master.iter().enumerate() {
            next[k + 1] = f.add(next[k + 1], c);
            next[k] = f.sub(next[k], f.mul(x, c));
        }
        master = next;
    }
    let mut out = vec![vec![FieldElem::ZERO; n]; columns.len()];
    let mut quot = vec![FieldElem::ZERO; n];
    for (i, &x) in nodes.iter().enumerate() {
        // synthetic division of master by (x - node)
        let mut carry = FieldElem::ZERO;
        for k in (0..n).rev() {
            carry = f.add(master[k + 1], f.mul(carry, x));
            quot[k] = carry;
        }
        let denom = quot.iter().rev().fold(FieldElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c));
        let w = f.inv_nonzero(denom);
        for (col, acc) in columns.iter().zip(out.iter_mut()) {
            let scale = f.mul(col[i], w);
            if !scale.is_zero() {
                axpy(f, acc, &quot, scale);
            }
        }
    }
    Ok(out.into_iter().map(|c| FPoly::new(field, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Arc<FieldCtx>, r: usize, c: usize, rng: &mut ChaCha8Rng) -> FMatrix {
        FMatrix::from_fn(f, r, c, |_, _| f.random(rng))
    }

    #[test]
    fn identity_and_zero() {
        let f = FieldCtx::prime(5).unwrap();
        let i4 = FMatrix::identity(&f, 4);
        let r = i4.rref();
        assert_eq!(r.matrix, i4);
        assert_eq!(r.rank, 4);
        assert!(i4.kernel_basis().is_empty());
        let z = FMatrix::zeros(&f, 3, 3);
        assert_eq!(z.rref().rank, 0);
        assert_eq!(z.kernel_basis().len(), 3);
        assert_eq!(z.charpoly().unwrap(), FPoly::monomial(&f, 3));
    }

    #[test]
    fn solve_cases() {
        let f = FieldCtx::prime(7).unwrap();
        let i3 = FMatrix::identity(&f, 3);
        let b = vec![f.from_int(1), f.from_int(5), f.from_int(3)];
        assert_eq!(
            i3.solve(&b).unwrap(),
            Solution::Solved { particular: b.clone(), kernel: vec![] }
        );
        assert_eq!(FMatrix::zeros(&f, 3, 3).solve(&b).unwrap(), Solution::Inconsistent);
        assert!(i3.solve(&b[..2]).is_err());
    }

    #[test]
    fn random_rank_and_kernel_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in ["gf:2", "gf:3", "gf:2^3", "gf:5^2"] {
            let f = FieldCtx::from_spec(spec).unwrap();
            for _ in 0..30 {
                let (r, c) = (1 + rng.gen_range(0..7), 1 + rng.gen_range(0..7));
                // low-rank products exercise nontrivial kernels
                let k = 1 + rng.gen_range(0..r.min(c));
                let m = random_matrix(&f, r, k, &mut rng).mul(&random_matrix(&f, k, c, &mut rng)).unwrap();
                assert_eq!(m.rank(), m.transpose().rank());
                let ker = m.kernel_basis();
                assert_eq!(ker.len(), c - m.rank());
                for v in &ker {
                    assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
                }
            }
        }
    }

    use rand::Rng;

    #[test]
    fn charpoly_matches_determinant_at_every_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for spec in ["gf:2", "gf:7", "gf:2^2", "gf:3^2"] {
            let f = FieldCtx::from_spec(spec).unwrap();
            for n in 1..7 {
                let m = random_matrix(&f, n, n, &mut rng);
                let cp = m.charpoly().unwrap();
                assert_eq!(cp.degree(), Some(n));
                for lam in f.elements() {
                    let shifted = FMatrix::from_fn(&f, n, n, |r, c| {
                        let d = if r == c { lam } else { FieldElem::ZERO };
                        f.sub(d, m.get(r, c))
                    });
                    assert_eq!(cp.eval(lam), shifted.det().unwrap(), "{spec} n={n}");
                }
            }
        }
    }

    #[test]
    fn charpoly_of_sparse_hessenberg_edge_cases() {
        let f = FieldCtx::prime(3).unwrap();
        // strictly lower entries below the subdiagonal only, forcing swaps
        let m = FMatrix::from_ints(&f, &[&[0, 0, 0, 1], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 1, 0]]).unwrap();
        let cp = m.charpoly().unwrap();
        for lam in f.elements() {
            let shifted = FMatrix::from_fn(&f, 4, 4, |r, c| {
                let d = if r == c { lam } else { FieldElem::ZERO };
                f.sub(d, m.get(r, c))
            });
            assert_eq!(cp.eval(lam), shifted.det().unwrap());
        }
    }

    #[test]
    fn idempotent_matrices_have_split_charpoly() {
        let f = FieldCtx::prime(5).unwrap();
        // e = 3(1 + (12)) in the coset ordering: three blocks [[3,3],[3,3]]
        let m = FMatrix::from_fn(&f, 6, 6, |r, c| if r / 2 == c / 2 { f.from_int(3) } else { FieldElem::ZERO });
        assert_eq!(m.mul(&m).unwrap(), m);
        let cp = m.charpoly().unwrap();
        let want = FPoly::monomial(&f, 3).mul(&FPoly::from_roots(&f, &[FieldElem::ONE; 3]));
        assert_eq!(cp, want);
        assert_eq!(m.rank(), 6 - cp.valuation().unwrap());
    }

    #[test]
    fn interpolation() {
        let f = FieldCtx::prime(7).unwrap();
        let q = FPoly::new(&f, vec![f.from_int(3), f.from_int(0), f.from_int(5)]);
        let pts: Vec<_> = [1, 4, 6].iter().map(|&x| (f.from_int(x), q.eval(f.from_int(x)))).collect();
        assert_eq!(lagrange_interpolate(&f, &pts).unwrap(), q);
        let single = lagrange_interpolate(&f, &[(f.from_int(2), f.from_int(6))]).unwrap();
        assert_eq!(single, FPoly::constant(&f, f.from_int(6)));
        let zeros = lagrange_interpolate(&f, &[(f.from_int(0), FieldElem::ZERO), (f.from_int(1), FieldElem::ZERO)]).unwrap();
        assert!(zeros.is_zero());
        assert!(matches!(
            lagrange_interpolate(&f, &[(f.from_int(1), FieldElem::ONE), (f.from_int(1), FieldElem::ZERO)]),
            Err(Error::DuplicateNode)
        ));
    }

    #[test]
    fn xm_charpoly_of_identity_and_zero() {
        let f = FieldCtx::prime(2).unwrap();
        let id = FMatrix::identity(&f, 3);
        let x = id.charpoly_xm().unwrap();
        assert_eq!(x.k, 0);
        // (z - 1)(z - x)(z - x^2) over F_2: constant term x^3
        assert_eq!(x.zcoeffs[0], FPoly::monomial(&f, 3));
        assert_eq!(x.zcoeffs[3], FPoly::constant(&f, FieldElem::ONE));
        let z = FMatrix::zeros(&f, 4, 4).charpoly_xm().unwrap();
        assert_eq!(z.k, 4);
        assert_eq!(z.g_degree(), 0);
    }

    #[test]
    fn xm_charpoly_cyclic_three() {
        // rho(1 + g) over C_3: row i has ones at columns i and i+1
        let f = FieldCtx::prime(2).unwrap();
        let m = FMatrix::from_ints(&f, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        let x = m.charpoly_xm().unwrap();
        let p = |c: &[i64]| FPoly::new(&f, c.iter().map(|&v| f.from_int(v)).collect());
        // z^3 + (1 + x + x^2) z^2 + (x + x^2 + x^3) z, from cofactor expansion
        assert_eq!(x.zcoeffs, vec![p(&[]), p(&[0, 1, 1, 1]), p(&[1, 1, 1]), p(&[1])]);
        assert_eq!(x.k, 1);
        assert_eq!(x.g_degree(), 2);
    }

    #[test]
    fn xm_charpoly_specializes_to_charpoly() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for spec in ["gf:2", "gf:3", "gf:2^2"] {
            let f = FieldCtx::from_spec(spec).unwrap();
            for n in 1..6 {
                let m = random_matrix(&f, n, n, &mut rng);
                let x = m.charpoly_xm().unwrap();
                assert_eq!(x.specialize(FieldElem::ONE), m.charpoly().unwrap());
                assert_eq!(m.charpoly_xm().unwrap(), x);
            }
        }
    }

    #[test]
    fn non_square_rejected() {
        let f = FieldCtx::prime(2).unwrap();
        let m = FMatrix::zeros(&f, 2, 3);
        assert!(matches!(m.charpoly(), Err(Error::NotSquare(2, 3))));
        assert!(matches!(m.charpoly_xm(), Err(Error::NotSquare(2, 3))));
        assert!(m.det().is_err());
    }

    #[test]
    fn text_roundtrip() {
        let f = FieldCtx::from_spec("gf:3^2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&f, 3, 4, &mut rng);
        assert_eq!(FMatrix::parse(&f, &m.to_text()).unwrap(), m);
    }
}
