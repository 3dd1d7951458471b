//! Matrices of the regular representations of `F[G]`.
//!
//! `rho(f)` has row `i` equal to the coefficients of `g_i f`, so its `(i, j)`
//! entry is the coefficient of `f` at `g_i^{-1} g_j`: substitute coefficients
//! into the modified Cayley table. `lambda(f)` has row `i` equal to the
//! coefficients of `f g_i`. The row space of `rho(f)` is the left ideal `Af`
//! and that of `lambda(f)` is the right ideal `fA`.

use crate::algebra::AlgebraElem;
use crate::error::{Error, Result};
use crate::linalg::FMatrix;

/// Which one-sided ideal a generator list describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `Af_1 + ... + Af_t`, represented through `rho`.
    Left,
    /// `f_1A + ... + f_tA`, represented through `lambda`.
    Right,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("side must be `left` or `right`, got `{s}`")),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

pub fn rho_matrix(f: &AlgebraElem) -> FMatrix {
    let g = f.group();
    let n = g.order();
    let table = g.modified_cayley();
    FMatrix::from_fn(f.field(), n, n, |i, j| f.coeff(table[i * n + j] as usize))
}

pub fn lambda_matrix(f: &AlgebraElem) -> FMatrix {
    let g = f.group();
    let n = g.order();
    // row i, column j: coefficient of f at g_j g_i^{-1}
    FMatrix::from_fn(f.field(), n, n, |i, j| f.coeff(g.mul(j, g.inv(i))))
}

/// The representation matrix that spans the ideal generated on `side`.
pub fn side_matrix(f: &AlgebraElem, side: Side) -> FMatrix {
    match side {
        Side::Left => rho_matrix(f),
        Side::Right => lambda_matrix(f),
    }
}

/// `[D(f_1); ...; D(f_t)]` with `D = rho` for left ideals and `lambda` for
/// right ideals.
pub fn stack(fs: &[AlgebraElem], side: Side) -> Result<FMatrix> {
    let first = fs.first().ok_or(Error::NoGenerators)?;
    for f in &fs[1..] {
        first.same_algebra(f)?;
    }
    let blocks: Vec<FMatrix> = fs.iter().map(|f| side_matrix(f, side)).collect();
    FMatrix::vstack(&blocks)
}
