mod common;

use common::*;
use gadim::dimension::mulmuley_exact_detail;
use gadim::{
    annihilator_basis, dim_bound_charpoly, dim_ideal, dim_mulmuley_exact, dim_mulmuley_random, idempotent_generator,
    AlgebraElem, Error, IdealSpec, Shortcut, Side,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GROUPS: [&str; 5] = ["cyclic:6", "product:cyclic:2,cyclic:2", "symmetric:3", "dihedral:4", "cyclic:9"];
const FIELDS: [&str; 4] = ["gf:2", "gf:3", "gf:2^2", "gf:5"];

fn setup(seed: u64, gi: usize, fi: usize) -> AlgebraElem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_elem(&field(FIELDS[fi]), &group(GROUPS[gi]), &mut rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bound_brackets_the_rank(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len(), right in any::<bool>()) {
        let x = setup(seed, gi, fi);
        let side = if right { Side::Right } else { Side::Left };
        let d = dim_ideal(&IdealSpec::principal(side, x.clone())).unwrap();
        let b = dim_bound_charpoly(&x, side).unwrap();
        prop_assert_eq!(b.dim, d);
        prop_assert!(b.lower <= d && d <= b.upper);
        if b.exact {
            prop_assert_eq!(b.lower, d);
        }
    }

    #[test]
    fn paths_agree(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len(), right in any::<bool>()) {
        let x = setup(seed, gi, fi);
        let side = if right { Side::Right } else { Side::Left };
        let d = dim_ideal(&IdealSpec::principal(side, x.clone())).unwrap();
        prop_assert_eq!(dim_mulmuley_exact(&x, side, Shortcut::Auto).unwrap(), d);
        prop_assert!(dim_mulmuley_random(&x, side, 1, seed).unwrap() <= d);
        prop_assert_eq!(dim_mulmuley_random(&x, side, 6, seed).unwrap(), d);
    }

    #[test]
    fn annihilators_multiply_to_zero(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len()) {
        let x = setup(seed, gi, fi);
        let n = x.group().order();
        let d = dim_ideal(&IdealSpec::principal(Side::Left, x.clone())).unwrap();
        let right = annihilator_basis(&x, Side::Right);
        let left = annihilator_basis(&x, Side::Left);
        prop_assert_eq!(right.len(), n - d);
        prop_assert_eq!(left.len(), n - d);
        for a in &right {
            prop_assert!(x.mul(a).unwrap().is_zero());
        }
        for a in &left {
            prop_assert!(a.mul(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn idempotent_generators_when_they_exist(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len(), right in any::<bool>()) {
        let x = setup(seed, gi, fi);
        prop_assume!(!x.is_zero());
        let side = if right { Side::Right } else { Side::Left };
        let d = dim_ideal(&IdealSpec::principal(side, x.clone())).unwrap();
        let semisimple = !(x.group().order() as u64).is_multiple_of(x.field().characteristic());
        match idempotent_generator(&x, side).unwrap() {
            Some(e) => {
                prop_assert!(e.is_idempotent());
                let back = match side { Side::Left => x.mul(&e).unwrap(), Side::Right => e.mul(&x).unwrap() };
                prop_assert_eq!(back, x.clone());
                prop_assert_eq!(dim_ideal(&IdealSpec::principal(side, e)).unwrap(), d);
            }
            None => prop_assert!(!semisimple),
        }
    }
}

#[test]
fn commutative_shortcut() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = field("gf:3");
    let g = group("cyclic:6");
    for _ in 0..10 {
        let x = random_elem(&f, &g, &mut rng);
        let d = dim_ideal(&IdealSpec::principal(Side::Left, x.clone())).unwrap();
        let (dc, xcp) = mulmuley_exact_detail(&x, Side::Left, Shortcut::Commutative).unwrap();
        assert_eq!(xcp.size(), 6);
        assert_eq!(dc, d, "{x}");
    }
    let s3 = group("symmetric:3");
    let y = AlgebraElem::one(&f, &s3);
    assert!(matches!(dim_mulmuley_exact(&y, Side::Left, Shortcut::Commutative), Err(Error::NotCommutative)));
}

#[test]
fn symbolic_charpoly_of_cyclic_three() {
    // char(X rho(1 + g)) over F_2 = z^3 + (1 + x + x^2) z^2 + (x + x^2 + x^3) z
    let f = field("gf:2");
    let g = group("cyclic:3");
    let x = AlgebraElem::from_terms(&f, &g, &[(0, 1), (1, 1)]).unwrap();
    let (d, xcp) = mulmuley_exact_detail(&x, Side::Left, Shortcut::Commutative).unwrap();
    assert_eq!((d, xcp.k), (2, 1));
    let text: Vec<String> = xcp.zcoeffs.iter().map(|p| p.to_text()).collect();
    assert_eq!(text, ["0", "0 1 1 1", "1 1 1", "1"]);
}

#[test]
fn radical_of_klein_over_f2() {
    let f = field("gf:2");
    let g = group("product:cyclic:2,cyclic:2");
    for i in 1..4 {
        let x = AlgebraElem::from_terms(&f, &g, &[(0, 1), (i, 1)]).unwrap();
        assert!(idempotent_generator(&x, Side::Left).unwrap().is_none());
        assert!(x.mul(&x).unwrap().is_zero());
    }
}

#[test]
fn errors() {
    let f = field("gf:2");
    let g = group("cyclic:4");
    let z = AlgebraElem::zero(&f, &g);
    assert!(matches!(idempotent_generator(&z, Side::Left), Err(Error::ZeroGenerator)));
    assert!(matches!(dim_mulmuley_random(&z, Side::Left, 0, 1), Err(Error::NoTrials)));
    assert!(matches!(IdealSpec::new(Side::Left, vec![]), Err(Error::NoGenerators)));
    assert_eq!(dim_mulmuley_random(&z, Side::Left, 2, 1).unwrap(), 0);
}
