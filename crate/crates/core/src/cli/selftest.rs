//! Worked examples shipped as self-checking fixtures.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::algebra::AlgebraElem;
use crate::dimension::{dim_bound_charpoly, dim_ideal, ideal_membership, idempotent_generator, IdealSpec};
use crate::field::{FieldCtx, FieldElem};
use crate::group::Group;
use crate::linalg::FMatrix;
use crate::poly::FPoly;
use crate::representation::{rho_matrix, Side};

#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub name: &'static str,
    /// `None` when the fixture passed.
    pub error: Option<String>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.error.is_none()
    }
}

type Check = Result<(), String>;
type Fixture = (&'static str, fn(&Path) -> Check);

const FIXTURES: &[Fixture] = &[
    ("klein-char2", klein_char2),
    ("klein-odd", klein_odd),
    ("s3-gf5-matrix", s3_gf5_matrix),
    ("s3-gf5-idempotent", s3_gf5_idempotent),
    ("s3-gf5-ideals", s3_gf5_ideals),
    ("s3-gf2-ideals", s3_gf2_ideals),
    ("s3-gf3-ideals", s3_gf3_ideals),
    ("cyclic-block", cyclic_block),
];

pub fn default_fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Runs every fixture whose name contains `filter`, in a fixed order.
pub fn run_selftest(dir: &Path, filter: Option<&str>) -> Vec<FixtureResult> {
    FIXTURES
        .iter()
        .filter(|(name, _)| filter.is_none_or(|f| name.contains(f)))
        .map(|&(name, check)| FixtureResult { name, error: check(dir).err() })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn prime(p: u64) -> Arc<FieldCtx> {
    FieldCtx::prime(p).expect("small prime")
}

/// `symmetric:3` re-indexed by a shipped Cayley file.
fn s3(dir: &Path, file: &str) -> Result<Arc<Group>, String> {
    let path = dir.join(file);
    let order = Group::read_cayley(&path).map_err(s)?;
    let g = Group::symmetric(3).map_err(s)?.reindexed(&order).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Arc::new(g))
}

fn klein() -> Arc<Group> {
    Group::from_spec("product:cyclic:2,cyclic:2").expect("built-in spec")
}

fn elem(f: &Arc<FieldCtx>, g: &Arc<Group>, terms: &[(&str, i64)]) -> Result<AlgebraElem, String> {
    AlgebraElem::from_labels(f, g, terms).map_err(s)
}

fn dim(side: Side, gens: &[&AlgebraElem]) -> Result<usize, String> {
    let spec = IdealSpec::new(side, gens.iter().map(|&g| g.clone()).collect()).map_err(s)?;
    dim_ideal(&spec).map_err(s)
}

fn contains(outer: &[&AlgebraElem], h: &AlgebraElem) -> Result<bool, String> {
    let spec = IdealSpec::new(Side::Left, outer.iter().map(|&g| g.clone()).collect()).map_err(s)?;
    ideal_membership(h, &spec).map_err(s)
}

/// All elements `a e + b alpha + c beta + d alpha beta` of `F[K_4]`.
fn klein_elements(f: &Arc<FieldCtx>) -> Vec<[FieldElem; 4]> {
    let q = f.order();
    (0..q.pow(4))
        .map(|i| std::array::from_fn(|k| f.elem(i / q.pow(k as u32) % q).expect("digit below q")))
        .collect()
}

fn klein_char2(_: &Path) -> Check {
    let g = klein();
    for field in [prime(2), FieldCtx::new(2, 2, None).map_err(s)?] {
        let f = &field;
        for c in klein_elements(f) {
            let x = AlgebraElem::new(f.clone(), g.clone(), c.to_vec()).map_err(s)?;
            let rho = rho_matrix(&x);
            let sum = c.iter().fold(FieldElem::ZERO, |acc, &v| f.add(acc, v));
            let want = FPoly::from_roots(f, &[sum; 4]);
            let cp = rho.charpoly().map_err(s)?;
            ensure(cp == want, || format!("{x} over {f}: charpoly {cp}, expected {want}"))?;
            if !sum.is_zero() {
                continue;
            }
            let rank = rho.rank();
            let expect = if x.is_zero() {
                0
            } else if c.iter().all(|&v| v == c[0]) {
                1
            } else {
                2
            };
            ensure(rank == expect, || format!("{x} over {f}: rank {rank}, expected {expect}"))?;
        }
    }
    let f = prime(2);
    let radical = AlgebraElem::from_terms(&f, &g, &[(0, 1), (1, 1)]).map_err(s)?;
    let e = idempotent_generator(&radical, Side::Left).map_err(s)?;
    ensure(e.is_none(), || "e + alpha over gf:2 has an idempotent generator".into())
}

fn klein_odd(_: &Path) -> Check {
    let g = klein();
    for f in [prime(3), prime(5)] {
        let f = &f;
        for [a, b, c, d] in klein_elements(f) {
            let x = AlgebraElem::new(f.clone(), g.clone(), vec![a, b, c, d]).map_err(s)?;
            let sum = |v: [FieldElem; 4], signs: [bool; 3]| {
                let mut acc = v[0];
                for (k, &neg) in signs.iter().enumerate() {
                    acc = if neg { f.sub(acc, v[k + 1]) } else { f.add(acc, v[k + 1]) };
                }
                acc
            };
            let v = [a, b, c, d];
            let forms = [
                sum(v, [false, false, false]),
                sum(v, [true, true, false]),
                sum(v, [false, true, true]),
                sum(v, [true, false, true]),
            ];
            let want_cp = FPoly::from_roots(f, &forms);
            let rho = rho_matrix(&x);
            let cp = rho.charpoly().map_err(s)?;
            ensure(cp == want_cp, || format!("{x} over {f}: charpoly {cp}, expected {want_cp}"))?;
            let nonzero = forms.iter().filter(|v| !v.is_zero()).count();
            let d = dim(Side::Left, &[&x])?;
            ensure(d == nonzero, || format!("{x} over {f}: dim {d}, expected {nonzero}"))?;
        }
    }
    Ok(())
}

/// The printed matrix of a generic element: row `i` lists which of the
/// letters a..f (elements in the printed order) sits in each column.
const S3_LETTERS: [&str; 6] = ["abcdef", "baefcd", "cfaedb", "defabc", "fcdbae", "edbcfa"];

const S3_BLOCKS: [[i64; 6]; 6] = [
    [1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 1],
];

fn s3_gf5_matrix(dir: &Path) -> Check {
    let printed = s3(dir, "s3_printed.cayley")?;
    let cosets = s3(dir, "s3_cosets.cayley")?;
    let table = printed.modified_cayley();
    for (i, row) in S3_LETTERS.iter().enumerate() {
        for (j, letter) in row.bytes().enumerate() {
            let want = (letter - b'a') as u32;
            ensure(table[i * 6 + j] == want, || {
                format!("modified table entry ({}, {}) is {}, expected {}", i + 1, j + 1, table[i * 6 + j] + 1, want + 1)
            })?;
        }
    }
    let f = prime(5);
    let x = elem(&f, &printed, &[("1", 1), ("(12)", 1)])?;
    let y = elem(&f, &cosets, &[("1", 1), ("(12)", 1)])?;
    let block_rows: Vec<&[i64]> = S3_BLOCKS.iter().map(|r| r.as_slice()).collect();
    let block = FMatrix::from_ints(&f, &block_rows).map_err(s)?;
    let rho_y = rho_matrix(&y);
    ensure(rho_y == block, || "rho(1 + (12)) in coset order is not block diagonal".into())?;
    // the printed-order matrix is the same matrix up to relabelling
    let rho_x = rho_matrix(&x);
    let to_coset: Vec<usize> = printed.labels().iter().map(|l| cosets.index_of(l).expect("same labels")).collect();
    for i in 0..6 {
        for j in 0..6 {
            ensure(rho_x.get(i, j) == block.get(to_coset[i], to_coset[j]), || {
                format!("rho(1 + (12)) entry ({}, {}) disagrees with the block matrix", i + 1, j + 1)
            })?;
        }
    }
    let z3_z2 = FPoly::from_roots(&f, &[f.zero(), f.zero(), f.zero(), f.from_int(2), f.from_int(2), f.from_int(2)]);
    let cp = rho_x.charpoly().map_err(s)?;
    ensure(cp == z3_z2, || format!("charpoly {cp}, expected {z3_z2}"))?;
    let d = dim(Side::Left, &[&x])?;
    ensure(d == 3, || format!("dim A(1 + (12)) = {d}, expected 3"))?;
    let p2 = rho_x.mul(&rho_x).map_err(s)?;
    let p4 = p2.mul(&p2).map_err(s)?;
    let three_rho = FMatrix::from_fn(&f, 6, 6, |i, j| f.mul(f.from_int(3), rho_x.get(i, j)));
    ensure(p4 == three_rho, || "rho(f)^4 != 3 rho(f)".into())?;
    let z3_z1 = FPoly::from_roots(&f, &[f.zero(), f.zero(), f.zero(), f.one(), f.one(), f.one()]);
    let cp4 = p4.charpoly().map_err(s)?;
    ensure(cp4 == z3_z1, || format!("charpoly of rho(f)^4 is {cp4}, expected {z3_z1}"))
}

fn s3_gf5_idempotent(dir: &Path) -> Check {
    let g = s3(dir, "s3_printed.cayley")?;
    let f = prime(5);
    let x = elem(&f, &g, &[("1", 1), ("(12)", 1)])?;
    let sq = x.mul(&x).map_err(s)?;
    ensure(sq == x.scale(f.from_int(2)), || format!("f^2 = {sq}, expected 2f"))?;
    ensure(!x.is_idempotent(), || "f is idempotent".into())?;
    let three_f = x.scale(f.from_int(3));
    ensure(three_f.is_idempotent(), || "3f is not idempotent".into())?;
    let e = idempotent_generator(&x, Side::Left).map_err(s)?.ok_or("no idempotent generator found")?;
    ensure(e == three_f, || format!("idempotent generator {e}, expected 3f"))?;
    ensure(contains(&[&x], &e)? && contains(&[&e], &x)?, || "Af != A(3f)".into())?;
    let b = dim_bound_charpoly(&three_f, Side::Left).map_err(s)?;
    ensure(b.exact && b.lower == 3 && b.upper == 5, || {
        format!("bound for 3f: {} <= dim <= {}, exact = {}", b.lower, b.upper, b.exact)
    })
}

struct S3Ideals {
    i1: AlgebraElem,
    i2: AlgebraElem,
    i3: [AlgebraElem; 4],
    i3_principal: AlgebraElem,
    j1: AlgebraElem,
    j2: AlgebraElem,
}

fn s3_ideals(dir: &Path, p: u64) -> Result<S3Ideals, String> {
    let g = s3(dir, "s3_printed.cayley")?;
    let f = prime(p);
    let e = |t: &[(&str, i64)]| elem(&f, &g, t);
    Ok(S3Ideals {
        i1: e(&[("1", 1), ("(12)", 1), ("(13)", 1), ("(23)", 1), ("(123)", 1), ("(132)", 1)])?,
        i2: e(&[("1", 1), ("(12)", -1), ("(13)", -1), ("(23)", -1), ("(123)", 1), ("(132)", 1)])?,
        i3: [
            e(&[("1", 1), ("(123)", -1)])?,
            e(&[("(12)", 1), ("(23)", -1)])?,
            e(&[("(13)", 1), ("(23)", -1)])?,
            e(&[("(123)", 1), ("(132)", -1)])?,
        ],
        i3_principal: e(&[("1", 2), ("(123)", -1), ("(132)", -1)])?,
        j1: e(&[("1", 1), ("(12)", 1), ("(23)", -1), ("(123)", -1)])?,
        j2: e(&[("1", 1), ("(12)", -1), ("(23)", 1), ("(132)", -1)])?,
    })
}

fn expect_dim(name: &str, got: usize, want: usize) -> Check {
    ensure(got == want, || format!("dim {name} = {got}, expected {want}"))
}

fn s3_gf5_ideals(dir: &Path) -> Check {
    let t = s3_ideals(dir, 5)?;
    let i3: Vec<&AlgebraElem> = t.i3.iter().collect();
    expect_dim("I_1", dim(Side::Left, &[&t.i1])?, 1)?;
    expect_dim("I_2", dim(Side::Left, &[&t.i2])?, 1)?;
    expect_dim("I_3", dim(Side::Left, &i3)?, 4)?;
    expect_dim("J_1", dim(Side::Left, &[&t.j1])?, 2)?;
    expect_dim("J_2", dim(Side::Left, &[&t.j2])?, 2)?;
    expect_dim("A(2 - (123) - (132))", dim(Side::Left, &[&t.i3_principal])?, 4)?;
    ensure(contains(&i3, &t.i3_principal)? && contains(&[&t.i3_principal], &t.i3[0])?, || {
        "I_3 differs from A(2 - (123) - (132))".into()
    })?;
    let mut all = vec![&t.i1, &t.i2];
    all.extend(i3.iter().copied());
    expect_dim("I_1 + I_2 + I_3", dim(Side::Left, &all)?, 6)?;
    expect_dim("J_1 + J_2", dim(Side::Left, &[&t.j1, &t.j2])?, 4)?;
    for j in [&t.j1, &t.j2] {
        ensure(contains(&i3, j)?, || format!("{j} is not in I_3"))?;
    }
    Ok(())
}

fn s3_gf2_ideals(dir: &Path) -> Check {
    let t = s3_ideals(dir, 2)?;
    let i3: Vec<&AlgebraElem> = t.i3.iter().collect();
    expect_dim("I_1", dim(Side::Left, &[&t.i1])?, 1)?;
    ensure(contains(&[&t.i1], &t.i2)? && contains(&[&t.i2], &t.i1)?, || "I_1 != I_2".into())?;
    expect_dim("I_3", dim(Side::Left, &i3)?, 4)?;
    expect_dim("J_1", dim(Side::Left, &[&t.j1])?, 2)?;
    expect_dim("J_2", dim(Side::Left, &[&t.j2])?, 2)
}

/// In characteristic 3 the ideal `I_3` is taken in its principal form
/// `A(1 + (123) + (132))`; the four-generator sum is strictly larger there.
fn s3_gf3_ideals(dir: &Path) -> Check {
    let t = s3_ideals(dir, 3)?;
    let g = t.i1.group().clone();
    let i3 = elem(t.i1.field(), &g, &[("1", 1), ("(123)", 1), ("(132)", 1)])?;
    expect_dim("I_1", dim(Side::Left, &[&t.i1])?, 1)?;
    expect_dim("I_2", dim(Side::Left, &[&t.i2])?, 1)?;
    expect_dim("I_3", dim(Side::Left, &[&i3])?, 2)?;
    ensure(contains(&[&i3], &t.i1)?, || "I_1 is not in I_3".into())?;
    ensure(contains(&[&i3], &t.i2)?, || "I_2 is not in I_3".into())?;
    let four: Vec<&AlgebraElem> = t.i3.iter().collect();
    expect_dim("four-generator sum", dim(Side::Left, &four)?, 4)?;
    ensure(contains(&four, &i3)?, || "A(1 + (123) + (132)) is not in the four-generator sum".into())
}

/// `f = sum of H` for the subgroup `H` of order `m` in `C_n`, `n = l m`:
/// charpoly `z^(n-l) (z-m)^l` and dimension `l`.
fn cyclic_case(n: usize, m: usize, p: u64) -> Check {
    let f = prime(p);
    let g = Arc::new(Group::cyclic(n).map_err(s)?);
    let l = n / m;
    let terms: Vec<(usize, i64)> = (0..m).map(|i| (i * l, 1)).collect();
    let x = AlgebraElem::from_terms(&f, &g, &terms).map_err(s)?;
    let mut roots = vec![f.zero(); n - l];
    roots.extend(std::iter::repeat_n(f.from_int(m as i64), l));
    let want = FPoly::from_roots(&f, &roots);
    let b = dim_bound_charpoly(&x, Side::Left).map_err(s)?;
    let tag = format!("C_{n}, |H| = {m}, gf:{p}");
    ensure(b.charpoly == want, || format!("{tag}: charpoly {}, expected {want}", b.charpoly))?;
    let k = if (m as u64).is_multiple_of(p) { n } else { n - l };
    ensure(b.k == k && b.lower == n - k, || format!("{tag}: k = {}, expected {k}", b.k))?;
    expect_dim(&tag, dim(Side::Left, &[&x])?, l)
}

fn cyclic_block(_: &Path) -> Check {
    cyclic_case(6, 2, 2)?;
    cyclic_case(6, 2, 3)?;
    cyclic_case(12, 3, 3)?;
    cyclic_case(12, 2, 5)
}
