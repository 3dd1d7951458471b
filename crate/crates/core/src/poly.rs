//! Univariate polynomials over a [`FieldCtx`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// Coefficients low to high with no trailing zeros; the zero polynomial has
/// no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FPoly {
    field: Arc<FieldCtx>,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FPoly[{}]", self.to_text())
    }
}

impl fmt::Display for FPoly {
    /// Writes e.g. `z^6 + 4*z^3` using `z` as the variable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty("z"))
    }
}

impl FPoly {
    pub fn new(field: &Arc<FieldCtx>, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Arc<FieldCtx>) -> Self {
        FPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Arc<FieldCtx>, c: FieldElem) -> Self {
        Self::new(field, vec![c])
    }

    /// `z^k`.
    pub fn monomial(field: &Arc<FieldCtx>, k: usize) -> Self {
        let mut c = vec![FieldElem::ZERO; k + 1];
        c[k] = FieldElem::ONE;
        FPoly { field: field.clone(), coeffs: c }
    }

    /// `prod (z - r)` over the given roots.
    pub fn from_roots(field: &Arc<FieldCtx>, roots: &[FieldElem]) -> Self {
        roots.iter().fold(Self::constant(field, FieldElem::ONE), |acc, &r| {
            acc.mul(&Self::new(field, vec![field.neg(r), FieldElem::ONE]))
        })
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplicity of the root 0, i.e. the index of the lowest nonzero
    /// coefficient. `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(FieldElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, c)
    }

    pub fn sub(&self, other: &FPoly) -> FPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, c)
    }

    pub fn scale(&self, s: FieldElem) -> FPoly {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&c| f.mul(s, c)).collect())
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, e: u32) -> FPoly {
        (0..e).fold(Self::constant(&self.field, FieldElem::ONE), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, d: &FPoly) -> Result<(FPoly, FPoly)> {
        let f = &self.field;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(d.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let t = top - dd + i;
                rem[t] = f.sub(rem[t], f.mul(c, dc));
            }
        }
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &FPoly) -> FPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("divisor is nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> FPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => self.scale(self.field.inv_nonzero(lead)),
        }
    }

    /// Polynomial text format: `c0 c1 ... cd`, low to high; `0` for the zero
    /// polynomial.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.field.format_elem(c)).collect();
        parts.join(" ")
    }

    pub fn parse(field: &Arc<FieldCtx>, text: &str) -> Result<FPoly> {
        let c = text
            .split_whitespace()
            .map(|t| field.parse_elem(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(field, c))
    }

    /// Readable form in the given variable, highest power first.
    pub fn pretty(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = self.field.format_elem(c);
            let cs = if cs.contains(',') { format!("[{cs}]") } else { cs };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (i, c == FieldElem::ONE) {
                (0, _) => cs,
                (_, true) => mono,
                (_, false) => format!("{cs}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_gcd() {
        let f = FieldCtx::prime(7).unwrap();
        let a = FPoly::from_roots(&f, &[f.from_int(1), f.from_int(2)]);
        let b = FPoly::from_roots(&f, &[f.from_int(2), f.from_int(3)]);
        assert_eq!(a.gcd(&b), FPoly::from_roots(&f, &[f.from_int(2)]));
        let (q, r) = a.mul(&b).div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(a.eval(f.from_int(1)), FieldElem::ZERO);
        assert_eq!(FPoly::monomial(&f, 3).valuation(), Some(3));
        assert_eq!(FPoly::zero(&f).degree(), None);
        assert!(FPoly::zero(&f).div_rem(&FPoly::zero(&f)).is_err());
    }

    #[test]
    fn text() {
        let f = FieldCtx::prime(5).unwrap();
        let p = FPoly::parse(&f, "0 0 0 2 0 0 1").unwrap();
        assert_eq!(p.to_text(), "0 0 0 2 0 0 1");
        assert_eq!(p.to_string(), "z^6 + 2*z^3");
        assert_eq!(FPoly::parse(&f, "0 0").unwrap().to_text(), "0");
    }
}
