//! Ideal dimensions: the rank route, the characteristic-polynomial bound,
//! idempotent generators, and the exact and randomized routes through the
//! characteristic polynomial of `diag(1, x, x^2, ...) * M`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::AlgebraElem;
use crate::error::{Error, Result};
use crate::field::{Embedding, FieldCtx, FieldElem};
use crate::linalg::{charpoly_dense, FMatrix, Solution, XCharPoly};
use crate::poly::FPoly;
use crate::representation::{lambda_matrix, rho_matrix, side_matrix, stack, Side};

/// A one-sided ideal given by generators.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub side: Side,
    pub generators: Vec<AlgebraElem>,
}

impl IdealSpec {
    pub fn new(side: Side, generators: Vec<AlgebraElem>) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        for g in &generators[1..] {
            first.same_algebra(g)?;
        }
        Ok(IdealSpec { side, generators })
    }

    pub fn principal(side: Side, f: AlgebraElem) -> Self {
        IdealSpec { side, generators: vec![f] }
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        self.generators[0].field()
    }

    /// Order of the group, i.e. the dimension of the whole algebra.
    pub fn n(&self) -> usize {
        self.generators[0].group().order()
    }

    pub fn matrix(&self) -> Result<FMatrix> {
        stack(&self.generators, self.side)
    }
}

/// Bounds on `dim Af` (or `dim fA`) read off the characteristic polynomial
/// `z^k g(z)` of the generator's representation matrix.
#[derive(Clone, Debug)]
pub struct DimBound {
    /// `n - k`.
    pub lower: usize,
    /// `n - 1` for a proper ideal, `n` when the ideal is the whole algebra.
    pub upper: usize,
    /// The generator is idempotent, so `lower` is the dimension.
    pub exact: bool,
    pub k: usize,
    pub charpoly: FPoly,
    /// False when the generator is a unit; the bound is then vacuous.
    pub proper: bool,
    /// The dimension itself, from the rank.
    pub dim: usize,
}

/// Which matrix the characteristic-polynomial routes work with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Shortcut {
    /// Same as `Symmetrize`.
    #[default]
    Auto,
    /// `[0 F; F^T 0]`, whose rank is twice that of `F`.
    Symmetrize,
    /// `F` itself; only for commutative groups and not guaranteed by theory.
    Commutative,
}

impl std::str::FromStr for Shortcut {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Shortcut::Auto),
            "symmetrize" => Ok(Shortcut::Symmetrize),
            "commutative" => Ok(Shortcut::Commutative),
            _ => Err(format!("unknown shortcut `{s}`")),
        }
    }
}

/// `dim_F` of the ideal: the rank of the stacked representation matrices.
pub fn dim_ideal(spec: &IdealSpec) -> Result<usize> {
    Ok(spec.matrix()?.rank())
}

pub fn dim_bound_charpoly(f: &AlgebraElem, side: Side) -> Result<DimBound> {
    let n = f.group().order();
    let m = side_matrix(f, side);
    let charpoly = m.charpoly()?;
    let k = charpoly.valuation().expect("characteristic polynomials are monic");
    let dim = m.rank();
    let proper = dim < n;
    Ok(DimBound {
        lower: n - k,
        upper: if proper { n - 1 } else { n },
        exact: f.is_idempotent(),
        k,
        charpoly,
        proper,
        dim,
    })
}

/// Right annihilators `{a : f a = 0}` for `Side::Right`, left annihilators
/// `{a : a f = 0}` for `Side::Left`.
///
/// `rho(f) v = 0` says exactly that `f * star(v) = 0`, and likewise
/// `lambda(f) v = 0` says `star(v) * f = 0`, so the kernels of the
/// representation matrices give the annihilators after applying `star`.
pub fn annihilator_basis(f: &AlgebraElem, side: Side) -> Vec<AlgebraElem> {
    let m = match side {
        Side::Right => rho_matrix(f),
        Side::Left => lambda_matrix(f),
    };
    m.kernel_basis()
        .into_iter()
        .map(|v| AlgebraElem::from_parts(f.field().clone(), f.group().clone(), v).star())
        .collect()
}

/// An idempotent `e` with `Ae = Af` (left) or `eA = fA` (right), or `None`
/// when the ideal has no idempotent generator.
///
/// For a left ideal, writes `e = sum c_i g_i f` and solves the linear system
/// `f e = f`. Any solution works: every `a = b f` in the ideal then satisfies
/// `a e = a`, so `e^2 = e` and `f = f e` lies in `Ae`. The solution is not
/// unique in general; the solver first asks in addition for `e f = f`, which
/// pins down `e = 3(1 + (12))` for `f = 1 + (12)` in `F_5[S_3]`, and drops
/// that extra condition when it makes the system inconsistent. Right ideals
/// are handled symmetrically.
pub fn idempotent_generator(f: &AlgebraElem, side: Side) -> Result<Option<AlgebraElem>> {
    if f.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    // rows of `span` span the ideal; `outer` multiplies by f from the side
    // opposite to the ideal's, `inner` from the same side
    let span = side_matrix(f, side);
    let (outer, inner) = match side {
        Side::Left => (lambda_matrix(f), rho_matrix(f)),
        Side::Right => (rho_matrix(f), lambda_matrix(f)),
    };
    // coefficient vector of f*e (left) is c^T span lambda(f)
    let primary = span.mul(&outer)?.transpose();
    let secondary = span.mul(&inner)?.transpose();
    let target = f.coeffs().to_vec();

    let both = FMatrix::vstack(&[primary.clone(), secondary])?;
    let both_rhs: Vec<FieldElem> = target.iter().chain(target.iter()).copied().collect();
    let coeffs = match both.solve(&both_rhs)? {
        Solution::Solved { particular, .. } => particular,
        Solution::Inconsistent => match primary.solve(&target)? {
            Solution::Solved { particular, .. } => particular,
            Solution::Inconsistent => return Ok(None),
        },
    };
    let e_vec = span.vec_mul(&coeffs)?;
    let e = AlgebraElem::from_parts(f.field().clone(), f.group().clone(), e_vec);

    let keeps_f = match side {
        Side::Left => f.mul(&e)?,
        Side::Right => e.mul(f)?,
    };
    let same_ideal = side_matrix(&e, side).rank() == span.rank();
    if keeps_f == *f && e.is_idempotent() && same_ideal {
        Ok(Some(e))
    } else {
        Ok(None)
    }
}

/// `[0 F; F^T 0]`.
pub fn symmetrize(m: &FMatrix) -> FMatrix {
    let n = m.rows();
    FMatrix::from_fn(m.field(), 2 * n, 2 * n, |r, c| match (r < n, c < n) {
        (true, false) => m.get(r, c - n),
        (false, true) => m.get(c, r - n),
        _ => FieldElem::ZERO,
    })
}

fn mulmuley_matrix(f: &AlgebraElem, side: Side, shortcut: Shortcut) -> Result<(FMatrix, bool)> {
    let m = side_matrix(f, side);
    match shortcut {
        Shortcut::Commutative => {
            if !f.group().is_commutative() {
                return Err(Error::NotCommutative);
            }
            Ok((m, false))
        }
        Shortcut::Auto | Shortcut::Symmetrize => Ok((symmetrize(&m), true)),
    }
}

/// Exact dimension from `z^k g(z, x) = det(zI - X M)`; also returns the
/// symbolic characteristic polynomial.
pub fn mulmuley_exact_detail(f: &AlgebraElem, side: Side, shortcut: Shortcut) -> Result<(usize, XCharPoly)> {
    let (m, halve) = mulmuley_matrix(f, side, shortcut)?;
    let xcp = m.charpoly_xm()?;
    let deg = xcp.g_degree();
    Ok((if halve { deg / 2 } else { deg }, xcp))
}

pub fn dim_mulmuley_exact(f: &AlgebraElem, side: Side, shortcut: Shortcut) -> Result<usize> {
    mulmuley_exact_detail(f, side, shortcut).map(|(d, _)| d)
}

/// Randomized dimension: substitutes a random `x` drawn from an extension with
/// more than `2D` elements (`D = s(s-1)/2` for the symmetrized size `s`) and
/// keeps the largest candidate over `trials` draws.
///
/// A specialization can only raise the multiplicity of `z`, so every
/// candidate is a lower bound; all `trials` draws fail with probability at
/// most `(D / |ext|)^trials < 2^-trials`. Trial `t` uses stream `t` of a
/// ChaCha generator seeded with `seed`, so the result does not depend on
/// scheduling.
pub fn dim_mulmuley_random(f: &AlgebraElem, side: Side, trials: usize, seed: u64) -> Result<usize> {
    if trials < 1 {
        return Err(Error::NoTrials);
    }
    let m = symmetrize(&side_matrix(f, side));
    let s = m.rows();
    let bound = (s * (s - 1) / 2) as u128;
    let ext = FieldCtx::extension_with_order(f.field(), 2 * bound + 1)?;
    let emb = Embedding::new(f.field(), &ext)?;
    let lifted = m.map_embedding(&emb);
    let best = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let x = ext.random(&mut rng);
            let cp = charpoly_dense(&ext, s, lifted.scaled_by_powers(x));
            let k = cp.iter().position(|c| !c.is_zero()).unwrap_or(s);
            (s - k) / 2
        })
        .max()
        .expect("at least one trial");
    Ok(best)
}

/// Whether `h` lies in the ideal.
pub fn ideal_membership(h: &AlgebraElem, spec: &IdealSpec) -> Result<bool> {
    spec.generators[0].same_algebra(h)?;
    let base = spec.matrix()?;
    let extended = FMatrix::vstack(&[base.clone(), side_matrix(h, spec.side)])?;
    Ok(base.rank() == extended.rank())
}
