use proptest::prelude::*;
use trisquare::census::brute_solutions;
use trisquare::param::{self, Quad};
use trisquare::quaternion::{conjugate_vector, PureVector};

proptest! {
    #[test]
    fn forward_images_solve_the_equation(
        x in -50i64..=50,
        y in -50i64..=50,
        z in -50i64..=50,
        t in -50i64..=50,
    ) {
        prop_assume!((x, y, z, t) != (0, 0, 0, 0));
        let q = Quad::new(x, y, z, t);
        let (raw, sol) = param::forward(&q).unwrap();
        prop_assert_eq!(raw.d, q.norm().unwrap());
        prop_assert_eq!(
            raw.a * raw.a + raw.b * raw.b + raw.c * raw.c,
            3 * raw.d * raw.d
        );
        // A nonzero quad always yields a valid canonical solution: no raw
        // component can vanish.
        let s = sol.unwrap();
        let mut sorted = [raw.a.abs(), raw.b.abs(), raw.c.abs()];
        sorted.sort_unstable();
        prop_assert_eq!(sorted, s.components());
        prop_assert_eq!(s.d(), raw.d);

        // The raw triple is the sandwich image of i + j + k.
        let image = conjugate_vector(q.as_quaternion(), PureVector::ijk());
        prop_assert_eq!(
            image.integer_coords(),
            Some([raw.a, raw.b, raw.c])
        );
    }
}

#[test]
fn primitive_solutions_have_unit_components_mod_six() {
    let mut d = 1;
    while d <= 101 {
        for s in brute_solutions(d).unwrap() {
            let [a, b, c] = s.components();
            assert!(s.is_primitive());
            for v in [a, b, c] {
                assert!(v % 6 == 1 || v % 6 == 5, "component {v} of {s}");
            }
            assert_eq!(s.d() % 2, 1, "{s}");
            assert!(c >= s.d(), "{s}");
            if s.d() > 1 {
                assert!(a < s.d(), "{s}");
            }
        }
        d += 2;
    }
    for even in [2, 4, 50] {
        assert_eq!(brute_solutions(even).unwrap(), vec![]);
    }
}

#[test]
fn inversion_round_trips_below_51() {
    let mut d = 1;
    while d <= 51 {
        for s in brute_solutions(d).unwrap() {
            let trace = param::invert(&s).unwrap();
            trace.verify(&s).unwrap();
            let (_, round) = param::forward(&trace.quad).unwrap();
            assert_eq!(round, Some(s), "round trip at {s}");
        }
        d += 2;
    }
}
