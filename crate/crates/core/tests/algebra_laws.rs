mod common;

use common::*;
use gadim::{AlgebraElem, FieldCtx};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GROUPS: [&str; 5] = ["cyclic:6", "product:cyclic:2,cyclic:2", "symmetric:3", "dihedral:4", "cyclic:1"];
const FIELDS: [&str; 5] = ["gf:2", "gf:3", "gf:2^3", "gf:5", "gf:3^2"];

fn triple(seed: u64, gi: usize, fi: usize) -> (AlgebraElem, AlgebraElem, AlgebraElem) {
    let f = field(FIELDS[fi]);
    let g = group(GROUPS[gi]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (
        AlgebraElem::random(&f, &g, &mut rng),
        AlgebraElem::random(&f, &g, &mut rng),
        AlgebraElem::random(&f, &g, &mut rng),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len()) {
        let (a, b, c) = triple(seed, gi, fi);
        let (f, g) = (a.field().clone(), a.group().clone());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().mul(&c).unwrap(), a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap());
        let one = AlgebraElem::one(&f, &g);
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert_eq!(one.mul(&a).unwrap(), a.clone());
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert!(a.mul(&AlgebraElem::zero(&f, &g)).unwrap().is_zero());
    }

    #[test]
    fn star_is_an_involutive_anti_automorphism(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len()) {
        let (a, b, _) = triple(seed, gi, fi);
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().star(), b.star().mul(&a.star()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().star(), a.star().add(&b.star()).unwrap());
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len()) {
        let (a, _, _) = triple(seed, gi, fi);
        let (f, g) = (a.field().clone(), a.group().clone());
        prop_assert_eq!(AlgebraElem::parse(&f, &g, &a.to_text()).unwrap(), a.clone());
        prop_assert_eq!(AlgebraElem::parse(&f, &g, &a.to_inline()).unwrap(), a.clone());
    }

    #[test]
    fn field_axioms(seed in any::<u64>(), fi in 0..FIELDS.len()) {
        let f = field(FIELDS[fi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, f.order() - 1), f.one());
        }
        prop_assert_eq!(f.parse_elem(&f.format_elem(a)).unwrap(), a);
    }
}

#[test]
fn gf4_matches_independent_tables() {
    let f = FieldCtx::from_spec("gf:2^2").unwrap();
    let o = Oracle { q: 4 };
    for a in f.elements() {
        for b in f.elements() {
            assert_eq!(f.mul(a, b).index(), o.mul(a.index(), b.index()));
            assert_eq!(f.add(a, b).index(), o.add(a.index(), b.index()));
        }
    }
}

#[test]
fn one_plus_transposition_squares_to_twice_itself() {
    let f = field("gf:5");
    let g = s3_printed();
    let x = elem(&f, &g, &[("1", 1), ("(12)", 1)]);
    assert_eq!(x.mul(&x).unwrap(), x.scale(f.from_int(2)));
    assert!(!x.is_idempotent());
    assert!(x.scale(f.from_int(3)).is_idempotent());
}

#[test]
fn mixing_algebras_is_an_error() {
    let g = group("cyclic:3");
    let a = AlgebraElem::one(&field("gf:2"), &g);
    let b = AlgebraElem::one(&field("gf:3"), &g);
    assert!(a.mul(&b).is_err());
    let c = AlgebraElem::one(&field("gf:2"), &group("cyclic:4"));
    assert!(a.add(&c).is_err());
}
