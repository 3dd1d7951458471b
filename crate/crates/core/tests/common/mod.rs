//! Helpers shared by the integration tests, including small oracles that do
//! not go through the library's arithmetic.
#![allow(dead_code)]

use std::sync::Arc;

use gadim::{AlgebraElem, FieldCtx, FieldElem, Group};
use rand::Rng;

pub fn field(spec: &str) -> Arc<FieldCtx> {
    FieldCtx::from_spec(spec).unwrap()
}

pub fn group(spec: &str) -> Arc<Group> {
    Group::from_spec(spec).unwrap()
}

pub fn fixtures() -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// `symmetric:3` in the printed order 1, (12), (13), (23), (123), (132).
pub fn s3_printed() -> Arc<Group> {
    let order = Group::read_cayley(&fixtures().join("s3_printed.cayley")).unwrap();
    Arc::new(Group::symmetric(3).unwrap().reindexed(&order).unwrap())
}

pub fn s3_cosets() -> Arc<Group> {
    let order = Group::read_cayley(&fixtures().join("s3_cosets.cayley")).unwrap();
    Arc::new(Group::symmetric(3).unwrap().reindexed(&order).unwrap())
}

pub fn elem(f: &Arc<FieldCtx>, g: &Arc<Group>, terms: &[(&str, i64)]) -> AlgebraElem {
    AlgebraElem::from_labels(f, g, terms).unwrap()
}

/// A random element that is often a zero divisor: `r (1 + g)` for a random
/// `r` and a random non-identity `g`, or a plain random element.
pub fn random_elem<R: Rng>(f: &Arc<FieldCtx>, g: &Arc<Group>, rng: &mut R) -> AlgebraElem {
    let r = AlgebraElem::random(f, g, rng);
    if g.order() > 1 && rng.gen_bool(0.5) {
        let h = AlgebraElem::basis(f, g, rng.gen_range(1..g.order()));
        r.mul(&AlgebraElem::one(f, g).add(&h).unwrap()).unwrap()
    } else {
        r
    }
}

/// Arithmetic in `F_q`, `q in {2, 3, 4, 5, 7}`, written out independently of
/// the library. Elements are the library's indices: for `q = 4` the index
/// `c0 + 2 c1` stands for `c0 + c1 x` with `x^2 = x + 1`.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub q: u64,
}

const GF4_MUL: [[u64; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Oracle {
    pub fn add(self, a: u64, b: u64) -> u64 {
        if self.q == 4 { a ^ b } else { (a + b) % self.q }
    }

    pub fn neg(self, a: u64) -> u64 {
        if self.q == 4 { a } else { (self.q - a) % self.q }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        if self.q == 4 { GF4_MUL[a as usize][b as usize] } else { a * b % self.q }
    }

    pub fn inv(self, a: u64) -> u64 {
        assert_ne!(a, 0);
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    fn trim(mut p: Vec<u64>) -> Vec<u64> {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    /// Remainder of `a` modulo nonzero `b`, coefficients low to high.
    pub fn rem(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let b = Self::trim(b.to_vec());
        let mut r = Self::trim(a.to_vec());
        let lead = self.inv(*b.last().unwrap());
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), lead);
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(c, bi));
            }
            r = Self::trim(r);
        }
        r
    }

    /// Degree of `gcd(a, b)`, or `None` when both are zero.
    pub fn gcd_degree(self, a: &[u64], b: &[u64]) -> Option<usize> {
        let (mut a, mut b) = (Self::trim(a.to_vec()), Self::trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a.len().checked_sub(1)
    }

    /// `a * b mod (y^n - 1)` for length-`n` coefficient vectors.
    pub fn cyclic_mul(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len();
        let mut out = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                out[(i + j) % n] = self.add(out[(i + j) % n], self.mul(a[i], b[j]));
            }
        }
        out
    }
}

/// `y^n - 1` as coefficients.
pub fn y_n_minus_1(o: Oracle, n: usize) -> Vec<u64> {
    let mut p = vec![0; n + 1];
    p[0] = o.neg(1);
    p[n] = 1;
    p
}

pub fn indices(v: &[FieldElem]) -> Vec<u64> {
    v.iter().map(|c| c.index()).collect()
}
