//! Elements of the group algebra `F[G]`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::group::Group;

/// `sum_i coeffs[i] * g_i`.
#[derive(Clone)]
pub struct AlgebraElem {
    field: Arc<FieldCtx>,
    group: Arc<Group>,
    coeffs: Vec<FieldElem>,
}

impl PartialEq for AlgebraElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field && self.group == other.group
    }
}

impl Eq for AlgebraElem {}

impl fmt::Debug for AlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElem[{}]", self.to_inline())
    }
}

impl fmt::Display for AlgebraElem {
    /// Human-readable sum such as `3*1 + 3*(12)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .map(|(i, c)| {
                let c = self.field.format_elem(c);
                let c = if c.contains(',') { format!("[{c}]") } else { c };
                format!("{c}*{}", self.group.label(i))
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl AlgebraElem {
    pub fn new(field: Arc<FieldCtx>, group: Arc<Group>, coeffs: Vec<FieldElem>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Shape(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::ForeignElement(c.index()));
        }
        Ok(AlgebraElem { field, group, coeffs })
    }

    pub(crate) fn from_parts(field: Arc<FieldCtx>, group: Arc<Group>, coeffs: Vec<FieldElem>) -> Self {
        debug_assert_eq!(coeffs.len(), group.order());
        AlgebraElem { field, group, coeffs }
    }

    pub fn zero(field: &Arc<FieldCtx>, group: &Arc<Group>) -> Self {
        let coeffs = vec![FieldElem::ZERO; group.order()];
        Self::from_parts(field.clone(), group.clone(), coeffs)
    }

    pub fn one(field: &Arc<FieldCtx>, group: &Arc<Group>) -> Self {
        Self::basis(field, group, 0)
    }

    /// The group element `g_i` itself.
    pub fn basis(field: &Arc<FieldCtx>, group: &Arc<Group>, i: usize) -> Self {
        let mut e = Self::zero(field, group);
        e.coeffs[i] = FieldElem::ONE;
        e
    }

    /// Builds an element from `(index, integer coefficient)` pairs with
    /// 0-based indices; repeated indices accumulate.
    pub fn from_terms(field: &Arc<FieldCtx>, group: &Arc<Group>, terms: &[(usize, i64)]) -> Result<Self> {
        let mut e = Self::zero(field, group);
        for &(i, c) in terms {
            if i >= group.order() {
                return Err(Error::ElementSyntax(
                    format!("{}:{c}", i + 1),
                    format!("index outside 1..={}", group.order()),
                ));
            }
            e.coeffs[i] = field.add(e.coeffs[i], field.from_int(c));
        }
        Ok(e)
    }

    /// Like [`from_terms`](Self::from_terms) but addressing elements by label.
    pub fn from_labels(field: &Arc<FieldCtx>, group: &Arc<Group>, terms: &[(&str, i64)]) -> Result<Self> {
        let idx = terms
            .iter()
            .map(|&(l, c)| {
                group
                    .index_of(l)
                    .map(|i| (i, c))
                    .ok_or_else(|| Error::ElementSyntax(l.to_string(), "unknown group label".to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(field, group, &idx)
    }

    pub fn random<R: Rng + ?Sized>(field: &Arc<FieldCtx>, group: &Arc<Group>, rng: &mut R) -> Self {
        let coeffs = (0..group.order()).map(|_| field.random(rng)).collect();
        Self::from_parts(field.clone(), group.clone(), coeffs)
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero `(index, coefficient)` pairs in index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, FieldElem)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn same_algebra(&self, other: &AlgebraElem) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if !Arc::ptr_eq(&self.group, &other.group) && self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElem) -> Result<AlgebraElem> {
        self.same_algebra(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Self::from_parts(self.field.clone(), self.group.clone(), coeffs))
    }

    pub fn sub(&self, other: &AlgebraElem) -> Result<AlgebraElem> {
        self.same_algebra(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Self::from_parts(self.field.clone(), self.group.clone(), coeffs))
    }

    pub fn scale(&self, s: FieldElem) -> AlgebraElem {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(s, a)).collect();
        Self::from_parts(self.field.clone(), self.group.clone(), coeffs)
    }

    /// Group convolution: the coefficient of `g_k` in `a * b` is the sum of
    /// `a_i b_j` over `g_i g_j = g_k`.
    pub fn mul(&self, other: &AlgebraElem) -> Result<AlgebraElem> {
        self.same_algebra(other)?;
        let f = &self.field;
        let g = &self.group;
        let mut out = vec![FieldElem::ZERO; g.order()];
        for (i, a) in self.support() {
            for (j, b) in other.support() {
                let k = g.mul(i, j);
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        Ok(Self::from_parts(self.field.clone(), self.group.clone(), out))
    }

    /// `f* = sum a_i g_i^{-1}`.
    pub fn star(&self) -> AlgebraElem {
        let mut out = vec![FieldElem::ZERO; self.group.order()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[self.group.inv(i)] = c;
        }
        Self::from_parts(self.field.clone(), self.group.clone(), out)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Element text format: one `index:coeff` line per nonzero coefficient,
    /// 1-based indices.
    pub fn to_text(&self) -> String {
        self.support()
            .map(|(i, c)| format!("{}:{}\n", i + 1, self.field.format_elem(c)))
            .collect()
    }

    /// Single-line form: terms joined by `,` for prime fields and `;` for
    /// extension fields.
    pub fn to_inline(&self) -> String {
        let sep = if self.field.degree() == 1 { "," } else { ";" };
        let terms: Vec<String> = self
            .support()
            .map(|(i, c)| format!("{}:{}", i + 1, self.field.format_elem(c)))
            .collect();
        terms.join(sep)
    }

    /// Parses the element text format. Terms are separated by newlines or
    /// `;`; for prime fields `,` also separates terms. Omitted indices are
    /// zero and repeated indices accumulate.
    pub fn parse(field: &Arc<FieldCtx>, group: &Arc<Group>, text: &str) -> Result<AlgebraElem> {
        let mut e = Self::zero(field, group);
        let prime = field.degree() == 1;
        let terms = text
            .split(|c: char| c == '\n' || c == ';' || (prime && c == ','))
            .map(str::trim)
            .filter(|t| !t.is_empty() && !t.starts_with('#'));
        for term in terms {
            let bad = |msg: String| Error::ElementSyntax(term.to_string(), msg);
            let (idx, coeff) = term
                .split_once(':')
                .ok_or_else(|| bad("expected `index:coeff`".to_string()))?;
            let i: usize = idx.trim().parse().map_err(|_| bad("bad index".to_string()))?;
            if i == 0 || i > group.order() {
                return Err(bad(format!("index outside 1..={}", group.order())));
            }
            let c = field.parse_elem(coeff)?;
            e.coeffs[i - 1] = field.add(e.coeffs[i - 1], c);
        }
        Ok(e)
    }
}
