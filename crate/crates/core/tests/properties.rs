use charconj::characters::normalized_character;
use charconj::combinatorics::{partitions_of, Partition};
use charconj::conjecture::{
    conjectured_f, f_numeric, interpolate_f, shape_to_partition, RectangleUnionShape,
};
use charconj::polyalg::formula9_fk;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Shapes with `m` rectangles, heights and widths in `0..=max`.
fn shape_strategy(m: usize, max: usize) -> impl Strategy<Value = RectangleUnionShape> {
    (
        prop::collection::vec(0..=max, m),
        prop::collection::vec(0..=max, m),
    )
        .prop_filter_map("q must be weakly decreasing", |(p, mut q)| {
            q.sort_unstable_by(|a, b| b.cmp(a));
            RectangleUnionShape::new(p, q).ok()
        })
}

fn one_cycle(k: usize) -> Partition {
    Partition::new(vec![k]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The x^-1 extraction, evaluated at a shape, equals the normalized
    /// character whenever the shape has at least k boxes.
    #[test]
    fn extraction_matches_characters(k in 1usize..=4, shape in shape_strategy(2, 3)) {
        let lambda = shape_to_partition(&shape);
        prop_assume!(lambda.size() >= k);
        let fk = formula9_fk(k, 2).unwrap();
        let value = fk.eval_int(&shape.point()).unwrap();
        prop_assert_eq!(value, normalized_character(&lambda, &one_cycle(k)).unwrap());
    }

    /// The signed pair sum agrees with the characters on random shapes.
    #[test]
    fn pair_sum_matches_characters(
        mu_index in 0usize..5,
        k in 1usize..=4,
        shape in shape_strategy(2, 3),
    ) {
        let classes = partitions_of(k);
        let mu = &classes[mu_index % classes.len()];
        let numeric = match f_numeric(&shape, mu) {
            Ok(v) => v,
            Err(_) => return Ok(()),
        };
        let f = conjectured_f(mu, 2);
        prop_assert_eq!(f.eval_int(&shape.point()).unwrap(), numeric);
    }
}

#[test]
fn interpolation_reproduces_pair_sum() {
    for k in 1..=3 {
        for mu in partitions_of(k) {
            for m in 1..=2 {
                assert_eq!(
                    interpolate_f(&mu, m).unwrap(),
                    conjectured_f(&mu, m),
                    "mu={mu} m={m}"
                );
            }
        }
    }
}

#[test]
fn empty_rectangles_collapse() {
    // a zero-height rectangle contributes nothing to the partition
    let shape = RectangleUnionShape::new(vec![0, 2], vec![5, 2]).unwrap();
    assert_eq!(
        shape_to_partition(&shape),
        Partition::new(vec![2, 2]).unwrap()
    );
    let mu = one_cycle(2);
    let expected = BigRational::from_integer(BigInt::from(0));
    assert_eq!(f_numeric(&shape, &mu).unwrap(), expected);
}
