use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orthocodes::code::{macwilliams_transform, DEFAULT_ENUMERATION_CAP};
use orthocodes::construct;
use orthocodes::extend::{self, ExtensionPattern};
use orthocodes::group;
use orthocodes::harness::{Construction, SearchSpec};
use orthocodes::{BinaryVector4, FqMatrix, LinearCode, PrimeField, WeightEnumerator};

const ODD: [u32; 5] = [3, 5, 7, 11, 13];

fn gf(q: u32) -> PrimeField {
    PrimeField::new(q as u64).unwrap()
}

fn odd_prime() -> impl Strategy<Value = u32> {
    prop::sample::select(&ODD[..])
}

fn uniform(m: usize, f: PrimeField, seed: u64) -> FqMatrix {
    group::random_orthogonal_uniform(m, f, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn self_dual(q: u32, k: usize, seed: u64) -> LinearCode {
    let f = gf(q);
    let l = uniform(k, f, seed);
    let w = if q % 4 == 1 {
        construct::build_eq1(&l, f)
    } else {
        construct::build_eq2(&l, f)
    };
    construct::from_witness(&w.unwrap()).unwrap()
}

/// Dimensions for which a self-dual `[2k, k]` code exists over GF(q).
fn code_shape() -> impl Strategy<Value = (u32, usize)> {
    odd_prime().prop_flat_map(|q| {
        let k = if q % 4 == 1 {
            (1usize..=4).boxed()
        } else {
            prop::sample::select(vec![2usize, 4]).boxed()
        };
        (Just(q), k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_inverse(q in odd_prime(), x in 1u32..13) {
        let f = gf(q);
        let x = x % q;
        prop_assume!(x != 0);
        prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
    }

    #[test]
    fn legendre_matches_squares(q in odd_prime(), x in 1u32..13) {
        let f = gf(q);
        let x = x % q;
        prop_assume!(x != 0);
        let square = f.elements().any(|y| f.mul(y, y) == x);
        prop_assert_eq!(f.legendre_symbol(x).unwrap(), if square { 1 } else { -1 });
    }

    #[test]
    fn transvection_is_orthogonal_involution(
        q in prop::sample::select(vec![2u32, 3, 5, 7, 13]),
        n in 4usize..=6,
        picks in prop::collection::btree_set(0usize..6, 4),
    ) {
        let s: Vec<usize> = picks.into_iter().collect();
        prop_assume!(s[3] < n);
        let u = BinaryVector4::new(n, [s[0], s[1], s[2], s[3]]).unwrap();
        let t = FqMatrix::transvection(&u, gf(q)).unwrap();
        prop_assert!(t.mul(&t).unwrap().is_identity());
        prop_assert!(t.is_orthogonal().unwrap());
    }

    #[test]
    fn uniform_samples_are_orthogonal(q in odd_prime(), m in 1usize..=6, seed: u64) {
        prop_assert!(uniform(m, gf(q), seed).is_orthogonal().unwrap());
    }

    #[test]
    fn witnesses_give_self_dual_codes(q in odd_prime(), m in 1usize..=4, seed: u64) {
        let f = gf(q);
        let l = uniform(m, f, seed);
        let r = uniform(m, f, seed ^ 1);
        let mut built = vec![construct::build_eq3(&l, f).unwrap()];
        if q % 4 == 1 {
            built.push(construct::build_eq1(&l, f).unwrap());
        }
        if m % 2 == 0 {
            built.push(construct::build_eq2(&l, f).unwrap());
        }
        for w in &built {
            prop_assert!(w.matrix().is_neg_orthogonal().unwrap());
            prop_assert!(construct::from_witness(w).unwrap().is_self_dual());
        }
        if q % 4 == 1 {
            let w = construct::diffuse_eq4(&built[1], &[r]).unwrap();
            prop_assert!(construct::from_witness(&w).unwrap().is_self_dual());
        }
    }

    #[test]
    fn enumerator_is_macwilliams_fixed_point((q, k) in code_shape(), seed: u64) {
        let c = self_dual(q, k, seed);
        let w = c.weight_enumerator(DEFAULT_ENUMERATION_CAP).unwrap();
        prop_assert_eq!(macwilliams_transform(&w, q, k).unwrap(), w.clone());
        let d = w.min_distance().unwrap();
        prop_assert!(d <= k + 1);
        prop_assert_eq!(c.min_distance_bz().unwrap(), d);
        prop_assert_eq!(c.is_mds_systematic(), d == k + 1);
    }

    #[test]
    fn four_column_stage_is_self_orthogonal((q, k) in code_shape(), seed: u64) {
        let c = self_dual(q, k, seed);
        let p = ExtensionPattern::default_four(gf(q), k).unwrap();
        let stage = extend::extend_four_rows(&c, &p).unwrap();
        prop_assert_eq!((stage.length(), stage.dimension()), (2 * k + 4, k));
        prop_assert!(stage.is_self_orthogonal());
        let full = extend::complete_to_self_dual(&stage, 1, seed).unwrap();
        prop_assert!(full.is_self_dual());
        prop_assert!(full.contains_code(&stage));
    }

    #[test]
    fn two_column_extension(k in 1usize..=4, q in prop::sample::select(vec![5u32, 13]), seed: u64) {
        let c = self_dual(q, k, seed);
        let p = ExtensionPattern::default_two(gf(q), k).unwrap();
        let stage = extend::extend_two(&c, &p).unwrap();
        prop_assert!(stage.is_self_orthogonal());
        let full = extend::complete_to_self_dual(&stage, 1, seed).unwrap();
        prop_assert_eq!(full.dimension(), k + 1);
        prop_assert!(full.is_self_dual());
    }

    #[test]
    fn two_plus_two_extension(k in 1usize..=3, q in prop::sample::select(vec![5u32, 13]), seed: u64) {
        let f = gf(q);
        let c = self_dual(q, k, seed);
        let p = ExtensionPattern::default_two_plus_two(f, k + 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = extend::random_two_plus_two_vector(&c, &p, &mut rng).unwrap();
        let stage = extend::extend_two_plus_two(&c, &p, &x).unwrap();
        prop_assert_eq!((stage.length(), stage.dimension()), (2 * k + 4, k + 1));
        prop_assert!(stage.is_self_orthogonal());
    }

    #[test]
    fn matrix_text_round_trip(q in odd_prime(), rows in 1usize..5, cols in 1usize..6, seed: u64) {
        let f = gf(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = (0..rows * cols).map(|_| rand::Rng::gen_range(&mut rng, 0..q)).collect();
        let m = FqMatrix::from_vec(f, rows, cols, data).unwrap();
        prop_assert_eq!(m.to_text().parse::<FqMatrix>().unwrap(), m);
    }

    #[test]
    fn enumerator_text_round_trip(counts in prop::collection::vec(0u64..1000, 1..10), q in odd_prime()) {
        let w = WeightEnumerator::from_counts(&counts);
        let (q2, k, back) = WeightEnumerator::from_text(&w.to_text(q, 3)).unwrap();
        prop_assert_eq!((q2, k), (q, 3));
        prop_assert_eq!(back, w);
    }

    #[test]
    fn construction_names_round_trip(i in 0usize..Construction::ALL.len()) {
        let c = Construction::ALL[i];
        prop_assert_eq!(c.to_string().parse::<Construction>().unwrap(), c);
    }

    #[test]
    fn search_is_reproducible(q in prop::sample::select(vec![5u32, 7, 13]), seed in 0u64..1000) {
        let n = if q % 4 == 1 { 3 } else { 2 };
        let c = if q % 4 == 1 { Construction::Eq1 } else { Construction::Eq2 };
        let mut spec = SearchSpec::new(q, n, c);
        spec.iterations = 8;
        spec.seed = seed;
        let a = orthocodes::harness::run_search(&spec).unwrap();
        let b = orthocodes::harness::run_search(&spec).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.to_code().unwrap().is_self_dual());
    }
}
