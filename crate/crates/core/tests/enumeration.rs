use semihyp::semigroup::enumerate_semigroups;

// OEIS A027851: semigroups up to isomorphism.
#[test]
fn order_four_and_five_counts() {
    assert_eq!(enumerate_semigroups(4, |_| {}).unwrap(), 188);
    assert_eq!(enumerate_semigroups(5, |_| {}).unwrap(), 1915);
}
