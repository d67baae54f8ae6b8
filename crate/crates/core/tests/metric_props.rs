use proptest::prelude::*;
use qdiam::{Field, Subspace};

fn subspace(q: u64, n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(0..q as u8, n), 0..=n).prop_map(move |rows| {
        Subspace::from_generators(Field::new(q).unwrap(), n, &rows).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (prop::sample::select(vec![2u64, 3, 4, 5]), 1usize..=7).prop_flat_map(|(q, n)| (subspace(q, n), subspace(q, n), subspace(q, n)))
}

proptest! {
    #[test]
    fn distance_is_a_metric((a, b, c) in triple()) {
        let d = a.distance(&b);
        prop_assert_eq!(d, b.distance(&a));
        prop_assert_eq!(d == 0, a == b);
        prop_assert!(d <= a.distance(&c) + c.distance(&b));
    }

    #[test]
    fn perp_is_an_involutive_isometry((a, b, _c) in triple()) {
        prop_assert_eq!(a.perp().perp(), a.clone());
        prop_assert_eq!(a.perp().dim(), a.ambient_dim() - a.dim());
        prop_assert_eq!(a.perp().distance(&b.perp()), a.distance(&b));
    }

    #[test]
    fn sum_and_intersection((a, b, _c) in triple()) {
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains(&a).unwrap() && a.contains(&i).unwrap());
        prop_assert_eq!(s.distance(&a), s.dim() - a.dim());
        prop_assert_eq!(a.distance(&b), s.dim() - i.dim());
    }

    #[test]
    fn text_form_round_trips((a, _b, _c) in triple()) {
        let back: Subspace = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}
