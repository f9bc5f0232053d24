use trisquare::gaussian::two_square_decompositions;
use trisquare::intarith;

/// Reference double loop: every `(b, c)` with `0 < b ≤ c`, `gcd(b, c) = 1`,
/// `b² + c² = m`.
fn brute(m: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut b = 1;
    while 2 * b * b <= m {
        let rest = m - b * b;
        let c = rest.isqrt();
        if c * c == rest && num_integer::gcd(b, c) == 1 {
            out.push((b, c));
        }
        b += 1;
    }
    out
}

#[test]
fn recombination_matches_brute_force_up_to_1e5() {
    for m in 1..=100_000 {
        let via_primes = two_square_decompositions(m).unwrap();
        assert_eq!(via_primes, brute(m), "m = {m}");
        let empty_by_criterion = m == 1
            || intarith::factorize(m)
                .unwrap()
                .factors
                .iter()
                .any(|&(p, e)| if p == 2 { e >= 2 } else { p % 4 == 3 });
        assert_eq!(via_primes.is_empty(), empty_by_criterion, "m = {m}");
    }
}
