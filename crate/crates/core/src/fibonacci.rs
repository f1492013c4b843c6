//! Arbitrary-precision Fibonacci numbers, their powers, and the cube-sum
//! closed forms the cubed-family solutions are built from.
//!
//! All values are exact. Single lookups use fast doubling; consumers that
//! walk a contiguous index range should advance a [`FibPairs`] iterator
//! instead, which costs one addition per step.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// Returns (F_n, F_{n+1}) in O(log n) big-integer multiplications by fast
/// doubling: F_2k = F_k (2 F_{k+1} - F_k) and F_2k+1 = F_k^2 + F_{k+1}^2.
pub fn fib_pair(n: u64) -> (BigUint, BigUint) {
    let mut f = BigUint::zero(); // F_k
    let mut g = BigUint::one(); // F_{k+1}
    let bits = 64 - n.leading_zeros();
    for bit in (0..bits).rev() {
        let doubled = (&g << 1u32) - &f;
        let even = &f * doubled; // F_2k
        let odd = &f * &f + &g * &g; // F_2k+1
        if (n >> bit) & 1 == 0 {
            f = even;
            g = odd;
        } else {
            g = &even + &odd;
            f = odd;
        }
    }
    (f, g)
}

/// Returns F_n.
pub fn fib(n: u64) -> BigUint {
    fib_pair(n).0
}

/// Returns F_n^k.
///
/// # Panics
/// Panics if k == 0.
pub fn fib_pow(n: u64, k: u32) -> BigUint {
    assert!(k >= 1, "exponent must be at least 1");
    fib(n).pow(k)
}

/// Parity of F_n. Decided by the index alone: F_n is even exactly when
/// n is a multiple of 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of F_n via the index rule n = 0 (mod 3).
pub fn fib_parity(n: u64) -> Parity {
    if n % 3 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Returns F_{n-1} F_{n+1} - F_n^2, which equals (-1)^n.
///
/// # Panics
/// Panics if n == 0.
pub fn cassini(n: u64) -> BigInt {
    assert!(n >= 1, "index must be at least 1");
    let (prev, mid) = fib_pair(n - 1);
    let next = &prev + &mid;
    BigInt::from(prev * next) - BigInt::from(&mid * &mid)
}

/// Returns the pair (F_3n, 5 F_n^3 + 3 (-1)^n F_n); the two components must
/// be equal.
///
/// # Panics
/// Panics if n == 0.
pub fn fib_triple_identity(n: u64) -> (BigUint, BigUint) {
    assert!(n >= 1, "index must be at least 1");
    let triple = n.checked_mul(3).expect("index overflow");
    let lhs = fib(triple);
    let f = fib(n);
    let five_cubes = BigUint::from(5u32) * (&f).pow(3u32);
    let correction = BigUint::from(3u32) * &f;
    let rhs = if n % 2 == 0 {
        five_cubes + correction
    } else {
        five_cubes - correction
    };
    (lhs, rhs)
}

/// Exact division by 4, reported as an internal contradiction on failure.
fn exact_quarter(num: BigInt) -> Result<BigInt> {
    if (&num % 4u32).is_zero() {
        Ok(num / 4u32)
    } else {
        Err(Error::InexactDivision {
            num: num.to_string(),
            den: 4,
        })
    }
}

/// Sum of the first n Fibonacci cubes, evaluated by the closed form
/// (F_3n+3 + F_3n + 2)/4 - F_n+1^3 - F_n^3 rather than a loop.
///
/// The divisibility by 4 always holds; a remainder is reported as an
/// internal contradiction and must never occur.
pub fn sum_cubes(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::BelowMinimum {
            what: "n",
            min: 1,
            got: n,
        });
    }
    let triple = n.checked_mul(3).expect("index overflow");
    let (f3n, f3n1) = fib_pair(triple);
    let f3n3 = (&f3n1 << 1u32) + &f3n; // F_3n+3 = 2 F_3n+1 + F_3n
    let quarter = exact_quarter(BigInt::from(f3n3 + f3n + 2u32))?;
    let (fn0, fn1) = fib_pair(n);
    let cubes = fn0.pow(3u32) + fn1.pow(3u32);
    (quarter - BigInt::from(cubes))
        .to_biguint()
        .ok_or_else(|| Error::IdentityViolated {
            detail: "cube-sum closed form produced a negative total".into(),
        })
}

/// Alternating sum of the first n Fibonacci cubes (terms signed by
/// (-1)^k), evaluated by the closed form
/// ((-1)^n (F_3n+3 - F_3n) + 2)/4 - (-1)^n (F_n+1^3 - F_n^3).
///
/// Divisibility by 4 is checked exactly as in [`sum_cubes`].
pub fn alt_sum_cubes(n: u64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::BelowMinimum {
            what: "n",
            min: 1,
            got: n,
        });
    }
    let triple = n.checked_mul(3).expect("index overflow");
    let (f3n, f3n1) = fib_pair(triple);
    let f3n3 = BigInt::from((&f3n1 << 1u32) + &f3n);
    let spread = f3n3 - BigInt::from(f3n); // F_3n+3 - F_3n
    let (fn0, fn1) = fib_pair(n);
    let cube_spread = BigInt::from(fn1.pow(3u32)) - BigInt::from(fn0.pow(3u32));
    if n % 2 == 0 {
        Ok(exact_quarter(spread + 2)? - cube_spread)
    } else {
        Ok(exact_quarter(-spread + 2)? + cube_spread)
    }
}

/// Iterator of (n, F_n, F_{n+1}) that advances by the recurrence, one
/// big-integer addition per step. Never terminates on its own.
pub struct FibPairs {
    n: u64,
    f: BigUint,
    g: BigUint,
}

/// Starts a [`FibPairs`] iterator at index `start`.
pub fn fib_pairs_from(start: u64) -> FibPairs {
    let (f, g) = fib_pair(start);
    FibPairs { n: start, f, g }
}

impl Iterator for FibPairs {
    type Item = (u64, BigUint, BigUint);

    fn next(&mut self) -> Option<Self::Item> {
        let item = (self.n, self.f.clone(), self.g.clone());
        let next = &self.f + &self.g;
        self.f = std::mem::replace(&mut self.g, next);
        self.n += 1;
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_recurrence(n: u64) -> BigUint {
        let (mut a, mut b) = (BigUint::zero(), BigUint::one());
        for _ in 0..n {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn seed_values() {
        assert_eq!(fib(0), big(0));
        assert_eq!(fib(1), big(1));
        assert_eq!(fib(2), big(1));
    }

    #[test]
    fn small_values() {
        assert_eq!(fib(7), big(13));
        assert_eq!(fib(12), big(144));
    }

    #[test]
    fn hundredth_value() {
        assert_eq!(fib(100), "354224848179261915075".parse().unwrap());
    }

    #[test]
    fn doubling_matches_recurrence() {
        for n in 0..=300 {
            assert_eq!(fib(n), fib_recurrence(n), "n = {n}");
        }
    }

    #[test]
    fn pair_components_are_consecutive() {
        for n in [0, 1, 2, 17, 64, 255] {
            let (f, g) = fib_pair(n);
            assert_eq!(f, fib(n));
            assert_eq!(g, fib(n + 1));
        }
    }

    #[test]
    fn powers_match_plain_values() {
        assert_eq!(fib_pow(10, 2), big(3025));
        assert_eq!(fib_pow(8, 3), big(9261));
        assert_eq!(fib_pow(11, 4), big(62742241));
        for n in 0..=40 {
            assert_eq!(fib_pow(n, 1), fib(n));
        }
    }

    #[test]
    #[should_panic(expected = "exponent")]
    fn zero_exponent_panics() {
        fib_pow(5, 0);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(fib_parity(0), Parity::Even);
        assert_eq!(fib_parity(6), Parity::Even);
        assert_eq!(fib_parity(7), Parity::Odd);
    }

    #[test]
    fn parity_rule_matches_actual_evenness() {
        for n in 0..=300u64 {
            let even = (fib(n) % 2u32).is_zero();
            assert_eq!(fib_parity(n) == Parity::Even, even, "n = {n}");
        }
    }

    #[test]
    fn cassini_examples() {
        assert_eq!(cassini(1), BigInt::from(-1));
        assert_eq!(cassini(2), BigInt::from(1));
        assert_eq!(cassini(9), BigInt::from(-1));
    }

    #[test]
    fn cassini_alternates_sign() {
        for n in 1..=100u64 {
            let want = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(cassini(n), BigInt::from(want), "n = {n}");
        }
    }

    #[test]
    fn triple_index_identity_holds() {
        assert_eq!(fib_triple_identity(2), (big(8), big(8)));
        assert_eq!(fib_triple_identity(3), (big(34), big(34)));
        for n in 1..=100u64 {
            let (lhs, rhs) = fib_triple_identity(n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn cube_sum_examples() {
        assert_eq!(sum_cubes(1).unwrap(), big(1));
        assert_eq!(sum_cubes(4).unwrap(), big(37));
        assert_eq!(
            sum_cubes(300).unwrap(),
            "14367013614608593758393119085902136148903960934548935960896147901619817146083434812672709949844594989588775686258197868980673979776904598203969907129607680021045128257049983208833423264700"
                .parse()
                .unwrap()
        );
    }

    #[test]
    fn alternating_cube_sum_examples() {
        assert_eq!(alt_sum_cubes(1).unwrap(), BigInt::from(-1));
        assert_eq!(alt_sum_cubes(3).unwrap(), BigInt::from(-8));
        assert_eq!(
            alt_sum_cubes(200).unwrap(),
            "17868446166905255231141069281280570624961584421727804470349683791408668354376327390556250242415909572819539125773448221283950"
                .parse()
                .unwrap()
        );
    }

    #[test]
    fn cube_sums_match_direct_summation() {
        let mut plain = BigUint::zero();
        let mut alternating = BigInt::zero();
        for (n, f, _) in fib_pairs_from(1).take(200) {
            let cube = (&f).pow(3u32);
            plain += &cube;
            if n % 2 == 0 {
                alternating += BigInt::from(cube);
            } else {
                alternating -= BigInt::from(cube);
            }
            assert_eq!(sum_cubes(n).unwrap(), plain, "n = {n}");
            assert_eq!(alt_sum_cubes(n).unwrap(), alternating, "n = {n}");
        }
    }

    #[test]
    fn cube_sums_reject_zero_index() {
        assert!(matches!(
            sum_cubes(0),
            Err(Error::BelowMinimum { min: 1, .. })
        ));
        assert!(matches!(
            alt_sum_cubes(0),
            Err(Error::BelowMinimum { min: 1, .. })
        ));
    }

    #[test]
    fn pair_iterator_slides_by_recurrence() {
        let rows: Vec<_> = fib_pairs_from(5).take(4).collect();
        assert_eq!(rows[0], (5, big(5), big(8)));
        assert_eq!(rows[1], (6, big(8), big(13)));
        assert_eq!(rows[2], (7, big(13), big(21)));
        assert_eq!(rows[3], (8, big(21), big(34)));
    }
}
