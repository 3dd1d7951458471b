//! Group codes: an ideal of `F_q[G]` read as a linear code of length `|G|`
//! through the coordinate map `g_i -> e_i`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::AlgebraElem;
use crate::dimension::IdealSpec;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linalg::FMatrix;

/// Default cap on the number of codewords `min_distance` will enumerate.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct GroupCode {
    pub n: usize,
    pub k: usize,
    pub field: Arc<FieldCtx>,
    /// `k x n`, in reduced row-echelon form.
    pub genmat: FMatrix,
    /// `(n - k) x n`, with `genmat * paritymat^T = 0`.
    pub paritymat: FMatrix,
    pub source: IdealSpec,
}

impl GroupCode {
    pub fn build(spec: &IdealSpec) -> Result<GroupCode> {
        let rref = spec.matrix()?.rref();
        if rref.rank == 0 {
            return Err(Error::ZeroCode);
        }
        let n = spec.n();
        let field = spec.field().clone();
        let rows: Vec<Vec<FieldElem>> = (0..rref.rank).map(|r| rref.matrix.row(r).to_vec()).collect();
        let genmat = FMatrix::from_rows(&field, &rows)?;
        let kernel = genmat.kernel_basis();
        let paritymat = if kernel.is_empty() {
            FMatrix::zeros(&field, 0, n)
        } else {
            FMatrix::from_rows(&field, &kernel)?
        };
        Ok(GroupCode {
            n,
            k: rref.rank,
            field,
            genmat,
            paritymat,
            source: spec.clone(),
        })
    }

    /// `message * genmat`.
    pub fn encode(&self, message: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if message.len() != self.k {
            return Err(Error::Shape(format!("message of length {} for k = {}", message.len(), self.k)));
        }
        self.genmat.vec_mul(message)
    }

    pub fn is_codeword(&self, word: &[FieldElem]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::Shape(format!("word of length {} for n = {}", word.len(), self.n)));
        }
        Ok(self.paritymat.mul_vec(word)?.iter().all(|c| c.is_zero()))
    }

    /// Syndrome `paritymat * word`.
    pub fn syndrome(&self, word: &[FieldElem]) -> Result<Vec<FieldElem>> {
        self.paritymat.mul_vec(word)
    }

    /// Element of the algebra with the codeword's coordinates.
    pub fn to_element(&self, word: &[FieldElem]) -> Result<AlgebraElem> {
        let g = &self.source.generators[0];
        AlgebraElem::new(g.field().clone(), g.group().clone(), word.to_vec())
    }

    /// Minimum Hamming weight over all nonzero codewords, by exhaustive
    /// enumeration. Refuses when `q^k` exceeds `budget`.
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        let q = self.field.order() as u128;
        let total = q.checked_pow(self.k as u32).filter(|&t| t <= budget);
        let Some(total) = total else {
            let needed = q.checked_pow(self.k as u32).unwrap_or(u128::MAX);
            return Err(Error::BudgetExceeded { needed, budget });
        };
        let total = total as u64;
        let chunks = 256u64.min(total - 1).max(1);
        let step = (total - 1).div_ceil(chunks);
        let best = (0..chunks)
            .into_par_iter()
            .filter_map(|c| {
                let start = 1 + c * step;
                let end = (start + step).min(total);
                (start < end).then(|| self.min_weight_range(start, end))
            })
            .min()
            .expect("the code has a nonzero codeword");
        Ok(best)
    }

    /// Minimum weight over messages with indices in `start..end`, where a
    /// message index lists field-element indices as base-`q` digits.
    fn min_weight_range(&self, start: u64, end: u64) -> usize {
        let f = &*self.field;
        let q = f.order();
        let mut digits = vec![0u64; self.k];
        let mut rest = start;
        for d in digits.iter_mut() {
            *d = rest % q;
            rest /= q;
        }
        let message: Vec<FieldElem> = digits.iter().map(|&d| f.elem(d).expect("digit below q")).collect();
        let mut word = self.genmat.vec_mul(&message).expect("message length is k");
        let weight = |w: &[FieldElem]| w.iter().filter(|c| !c.is_zero()).count();
        let mut best = weight(&word);
        for _ in start + 1..end {
            // odometer step, updating the codeword by (new - old) * row
            let mut i = 0;
            loop {
                let old = f.elem(digits[i]).expect("digit below q");
                digits[i] = (digits[i] + 1) % q;
                let new = f.elem(digits[i]).expect("digit below q");
                let delta = f.sub(new, old);
                for (w, &g) in word.iter_mut().zip(self.genmat.row(i)) {
                    *w = f.add(*w, f.mul(delta, g));
                }
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
            best = best.min(weight(&word));
        }
        best
    }

    /// Export format: `n k q`, then the generator and parity-check matrices
    /// in matrix text format.
    pub fn to_text(&self) -> String {
        format!(
            "{} {} {}\n{}{}",
            self.n,
            self.k,
            self.field.order(),
            self.genmat.to_text(),
            self.paritymat.to_text()
        )
    }
}
