mod common;

use common::*;
use gadim::{lambda_matrix, rho_matrix, stack, AlgebraElem, FMatrix, Side};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GROUPS: [&str; 5] = ["cyclic:5", "product:cyclic:2,cyclic:2", "symmetric:3", "dihedral:5", "product:cyclic:3,symmetric:3"];
const FIELDS: [&str; 3] = ["gf:2", "gf:7", "gf:2^2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homomorphism_laws(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len()) {
        let f = field(FIELDS[fi]);
        let g = group(GROUPS[gi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = AlgebraElem::random(&f, &g, &mut rng);
        let b = AlgebraElem::random(&f, &g, &mut rng);
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(rho_matrix(&ab), rho_matrix(&a).mul(&rho_matrix(&b)).unwrap());
        prop_assert_eq!(lambda_matrix(&ab), lambda_matrix(&b).mul(&lambda_matrix(&a)).unwrap());
        prop_assert_eq!(rho_matrix(&a).transpose(), rho_matrix(&a.star()));
        prop_assert_eq!(lambda_matrix(&a).transpose(), lambda_matrix(&a.star()));
        let sum = a.add(&b).unwrap();
        let rs = rho_matrix(&sum);
        let (ra, rb) = (rho_matrix(&a), rho_matrix(&b));
        for i in 0..g.order() {
            for j in 0..g.order() {
                prop_assert_eq!(rs.get(i, j), f.add(ra.get(i, j), rb.get(i, j)));
            }
        }
    }

    #[test]
    fn left_and_right_ranks_agree(seed in any::<u64>(), gi in 0..GROUPS.len(), fi in 0..FIELDS.len()) {
        // dim Af = dim f*A, and rho(f)^T = rho(f*)
        let f = field(FIELDS[fi]);
        let g = group(GROUPS[gi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_elem(&f, &g, &mut rng);
        prop_assert_eq!(rho_matrix(&a).rank(), lambda_matrix(&a.star()).rank());
    }
}

#[test]
fn printed_s3_table_substitution() {
    let f = field("gf:7");
    let g = s3_printed();
    // a..f = 1..6
    let x = AlgebraElem::from_terms(&f, &g, &(0..6).map(|i| (i, i as i64 + 1)).collect::<Vec<_>>()).unwrap();
    let want = FMatrix::from_ints(
        &f,
        &[
            &[1, 2, 3, 4, 5, 6],
            &[2, 1, 5, 6, 3, 4],
            &[3, 6, 1, 5, 4, 2],
            &[4, 5, 6, 1, 2, 3],
            &[6, 3, 4, 2, 1, 5],
            &[5, 4, 2, 3, 6, 1],
        ],
    )
    .unwrap();
    assert_eq!(rho_matrix(&x), want);
}

#[test]
fn klein_matrix() {
    let f = field("gf:7");
    let g = group("product:cyclic:2,cyclic:2");
    assert_eq!(g.labels(), ["(1,1)", "(g,1)", "(1,g)", "(g,g)"]);
    let x = AlgebraElem::from_terms(&f, &g, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let want = FMatrix::from_ints(&f, &[&[1, 2, 3, 4], &[2, 1, 4, 3], &[3, 4, 1, 2], &[4, 3, 2, 1]]).unwrap();
    assert_eq!(rho_matrix(&x), want);
    assert_eq!(lambda_matrix(&x), want);
}

#[test]
fn stacking_needs_generators() {
    assert!(stack(&[], Side::Left).is_err());
}
