//! Exact classification and solving of two-target coprime pairs.
//!
//! For coprime positive (a, b) with T = (a-1)(b-1)/2, exactly one of
//! a x + b y = T and a x + b y = T - 1 has a nonnegative integral solution,
//! and that solution is unique. The solver finds it by canonical residues
//! (x = t a^-1 mod b) rather than enumeration, so it stays exact at any
//! magnitude; a brute-force oracle is kept alongside for independent
//! verification at small scale.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which of the two targets admits the solution: `One` for t = T,
/// `Two` for t = T - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gamma {
    One,
    Two,
}

impl Gamma {
    /// Numeric value of the classifier, 1 or 2.
    pub fn value(self) -> u8 {
        match self {
            Gamma::One => 1,
            Gamma::Two => 2,
        }
    }

    /// The other classifier value.
    pub fn flip(self) -> Gamma {
        match self {
            Gamma::One => Gamma::Two,
            Gamma::Two => Gamma::One,
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Validated ordered pair of coprime positive integers together with its
/// target T = (a-1)(b-1)/2. x always multiplies a and y multiplies b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimePair {
    a: BigUint,
    b: BigUint,
    target: BigUint,
}

impl CoprimePair {
    /// Validates positivity and coprimality, then fixes the target.
    pub fn new(a: BigUint, b: BigUint) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let gcd = a.gcd(&b);
        if !gcd.is_one() {
            return Err(Error::NotCoprime { a, b, gcd });
        }
        // Coprimality rules out both members being even, so the product
        // (a-1)(b-1) is always even; a remainder would be a logic error.
        let product = (&a - 1u32) * (&b - 1u32);
        if (&product % 2u32).is_zero() {
            let target = product >> 1u32;
            Ok(CoprimePair { a, b, target })
        } else {
            Err(Error::InexactDivision {
                num: product.to_string(),
                den: 2,
            })
        }
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    /// T = (a-1)(b-1)/2.
    pub fn target(&self) -> &BigUint {
        &self.target
    }
}

/// Unique nonnegative solution of whichever target equation is solvable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSolution {
    pub gamma: Gamma,
    pub x: BigUint,
    pub y: BigUint,
}

/// Which positive-solution equation holds: `Plus` for a x + b y = k + 1,
/// `Minus` for a x + b y = k - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationTag {
    Plus,
    Minus,
}

impl fmt::Display for EquationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquationTag::Plus => write!(f, "plus"),
            EquationTag::Minus => write!(f, "minus"),
        }
    }
}

/// Unique positive solution of whichever equation a x + b y = k +- 1 is
/// solvable, where k = (a+1)b/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivePairSolution {
    pub equation: EquationTag,
    pub x: BigUint,
    pub y: BigUint,
    pub k: BigUint,
}

/// Extended Euclid: returns (g, u, v) with g = gcd(a, b) and u a + v b = g.
///
/// # Panics
/// Panics if either argument is zero.
pub fn ext_gcd(a: &BigUint, b: &BigUint) -> (BigUint, BigInt, BigInt) {
    assert!(!a.is_zero() && !b.is_zero(), "operands must be positive");
    let mut r0 = BigInt::from(a.clone());
    let mut r1 = BigInt::from(b.clone());
    let (mut u0, mut u1) = (BigInt::one(), BigInt::zero());
    let (mut v0, mut v1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let u = &u0 - &q * &u1;
        u0 = std::mem::replace(&mut u1, u);
        let v = &v0 - &q * &v1;
        v0 = std::mem::replace(&mut v1, v);
    }
    let g = r0.to_biguint().expect("gcd of positive operands is positive");
    (g, u0, v0)
}

/// Inverse of a modulo m, in [0, m). `None` when gcd(a, m) > 1.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let r = a % m;
    if r.is_zero() {
        return None;
    }
    let (g, u, _) = ext_gcd(&r, m);
    if !g.is_one() {
        return None;
    }
    let m_int = BigInt::from(m.clone());
    u.mod_floor(&m_int).to_biguint()
}

/// Unique nonnegative solution of a x + b y = t with 0 <= x < b, if one
/// exists. The canonical residue x = t a^-1 (mod b) minimises a x, so the
/// sign of the resulting y decides solvability exactly. For b = 1 the
/// canonical solution is (0, t).
pub fn solve_target(pair: &CoprimePair, t: &BigUint) -> Option<(BigUint, BigUint)> {
    let (a, b) = (pair.a(), pair.b());
    if b.is_one() {
        return Some((BigUint::zero(), t.clone()));
    }
    let inv = mod_inverse(a, b).expect("pair members are coprime");
    let x = (t % b) * inv % b;
    let used = a * &x;
    if &used > t {
        return None;
    }
    let (y, rem) = (t - used).div_rem(b);
    debug_assert!(rem.is_zero(), "residue construction must divide exactly");
    Some((x, y))
}

/// Solves the pair: gamma = 1 with a x + b y = T when that equation is
/// solvable in nonnegative integers, otherwise gamma = 2 with
/// a x + b y = T - 1. Exactly one branch can succeed; anything else is
/// reported as an internal contradiction and must never occur.
pub fn solve_pair(pair: &CoprimePair) -> Result<PairSolution> {
    let t = pair.target();
    let plain = solve_target(pair, t);
    let reduced = if t.is_zero() {
        None
    } else {
        solve_target(pair, &(t - 1u32))
    };
    match (plain, reduced) {
        (Some((x, y)), None) => Ok(PairSolution {
            gamma: Gamma::One,
            x,
            y,
        }),
        (None, Some((x, y))) => Ok(PairSolution {
            gamma: Gamma::Two,
            x,
            y,
        }),
        (Some(_), Some(_)) => Err(Error::DichotomyViolated {
            a: pair.a().clone(),
            b: pair.b().clone(),
            detail: "both targets solvable",
        }),
        (None, None) => Err(Error::DichotomyViolated {
            a: pair.a().clone(),
            b: pair.b().clone(),
            detail: "neither target solvable",
        }),
    }
}

/// Classifier component of [`solve_pair`].
pub fn gamma(pair: &CoprimePair) -> Result<Gamma> {
    solve_pair(pair).map(|s| s.gamma)
}

/// Solves the pair against the shifted target T + (a + b): the solution is
/// the base solution moved to (x + 1, y + 1) with the same gamma.
pub fn solve_shifted_pair(pair: &CoprimePair) -> Result<PairSolution> {
    let base = solve_pair(pair)?;
    let shifted = PairSolution {
        gamma: base.gamma,
        x: base.x + 1u32,
        y: base.y + 1u32,
    };
    debug_assert_eq!(
        pair.a() * &shifted.x + pair.b() * &shifted.y + (shifted.gamma.value() - 1),
        pair.target() + pair.a() + pair.b(),
    );
    Ok(shifted)
}

/// For odd a coprime to b >= 2, exactly one of a x + b y = k + 1 and
/// a x + b y = k - 1 (k = (a+1)b/2) has a positive integral solution, and
/// it is unique with x in [1, b-1]. Returns that solution.
///
/// The construction takes r_1 = (k+1) a^-1 mod b and r_2 = (k-1) a^-1
/// mod b with the matching quotients s_i = (k +- 1 - a r_i)/b, then keeps
/// the branch whose s_i is positive. The internal identities r_1 + r_2 = b
/// and s_1 + s_2 = 1 are checked on every call.
pub fn solve_positive_pair(a: &BigUint, b: &BigUint) -> Result<PositivePairSolution> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    if (a % 2u32).is_zero() {
        return Err(Error::EvenOperand { a: a.clone() });
    }
    if b < &BigUint::from(2u32) {
        return Err(Error::BelowMinimum {
            what: "b",
            min: 2,
            got: b.to_u64().unwrap_or(u64::MAX),
        });
    }
    let gcd = a.gcd(b);
    if !gcd.is_one() {
        return Err(Error::NotCoprime {
            a: a.clone(),
            b: b.clone(),
            gcd,
        });
    }

    let product = (a + 1u32) * b;
    if !(&product % 2u32).is_zero() {
        return Err(Error::InexactDivision {
            num: product.to_string(),
            den: 2,
        });
    }
    let k = product >> 1u32;
    if !(&k % b).is_zero() {
        return Err(Error::IdentityViolated {
            detail: format!("k = {k} is not a multiple of b = {b}"),
        });
    }

    let inv = mod_inverse(a, b).expect("operands are coprime");
    let a_int = BigInt::from(a.clone());
    let b_int = BigInt::from(b.clone());
    let k_int = BigInt::from(k.clone());

    let branch = |target: BigInt, residue: &BigUint| -> Result<(BigUint, BigInt)> {
        let r = residue * &inv % b;
        let (s, rem) = (&target - &a_int * BigInt::from(r.clone())).div_rem(&b_int);
        if !rem.is_zero() {
            return Err(Error::IdentityViolated {
                detail: format!("a r = {r} does not reduce target {target} modulo b"),
            });
        }
        Ok((r, s))
    };
    let (r1, s1) = branch(&k_int + 1, &((&k + 1u32) % b))?;
    let (r2, s2) = branch(&k_int - 1, &((&k - 1u32) % b))?;

    if &r1 + &r2 != *b {
        return Err(Error::IdentityViolated {
            detail: format!("residues {r1} + {r2} do not sum to b = {b}"),
        });
    }
    if &s1 + &s2 != BigInt::one() {
        return Err(Error::IdentityViolated {
            detail: format!("quotients {s1} + {s2} do not sum to 1"),
        });
    }

    match (s1.is_positive(), s2.is_positive()) {
        (true, false) => Ok(PositivePairSolution {
            equation: EquationTag::Plus,
            x: r1,
            y: s1.to_biguint().expect("checked positive"),
            k,
        }),
        (false, true) => Ok(PositivePairSolution {
            equation: EquationTag::Minus,
            x: r2,
            y: s2.to_biguint().expect("checked positive"),
            k,
        }),
        _ => Err(Error::DichotomyViolated {
            a: a.clone(),
            b: b.clone(),
            detail: "positive solutions must land in exactly one equation",
        }),
    }
}

/// Which solutions [`brute_force_oracle`] should admit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    NonNegative,
    Positive,
}

const ORACLE_BOUND: u64 = 100_000_000;

/// Independent enumeration oracle: every (x, y) meeting the positivity
/// flag with a x + b y = t, ordered by x. Refuses instances whose product
/// a b or step count t/a exceeds the test-scale bound of 10^8.
pub fn brute_force_oracle(
    a: &BigUint,
    b: &BigUint,
    t: &BigUint,
    positivity: Positivity,
) -> Result<Vec<(BigUint, BigUint)>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let bound = BigUint::from(ORACLE_BOUND);
    if a * b > bound {
        return Err(Error::EnumerationTooLarge {
            what: "operand product",
        });
    }
    if t / a > bound {
        return Err(Error::EnumerationTooLarge { what: "step count" });
    }
    let a = a.to_u64().expect("bounded by product check");
    let b = b.to_u64().expect("bounded by product check");
    let t = t.to_u64().expect("bounded by step-count check");

    let x_start = match positivity {
        Positivity::NonNegative => 0,
        Positivity::Positive => 1,
    };
    let mut found = Vec::new();
    for x in x_start..=t / a {
        let rest = t - a * x;
        if rest % b == 0 {
            let y = rest / b;
            if positivity == Positivity::Positive && y == 0 {
                continue;
            }
            found.push((BigUint::from(x), BigUint::from(y)));
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn pair(a: u64, b: u64) -> CoprimePair {
        CoprimePair::new(big(a), big(b)).unwrap()
    }

    #[test]
    fn pair_validation() {
        assert!(matches!(
            CoprimePair::new(big(0), big(5)),
            Err(Error::ZeroOperand)
        ));
        assert!(matches!(
            CoprimePair::new(big(6), big(9)),
            Err(Error::NotCoprime { .. })
        ));
        assert_eq!(pair(9, 25).target(), &big(96));
        assert_eq!(pair(1, 4).target(), &big(0));
    }

    #[test]
    fn extended_euclid_examples() {
        assert_eq!(
            ext_gcd(&big(1), &big(4)),
            (big(1), BigInt::one(), BigInt::zero())
        );
        for (a, b) in [(9u64, 25u64), (169, 441), (240, 46)] {
            let (g, u, v) = ext_gcd(&big(a), &big(b));
            assert_eq!(
                u * BigInt::from(a) + v * BigInt::from(b),
                BigInt::from(g.clone())
            );
            if a == 9 || a == 169 {
                assert!(g.is_one());
            }
        }
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(mod_inverse(&big(9), &big(25)), Some(big(14)));
        assert_eq!(mod_inverse(&big(7), &big(1)), Some(big(0)));
        assert_eq!(mod_inverse(&big(6), &big(9)), None);
        assert_eq!(mod_inverse(&big(25), &big(5)), None);
        for a in 1u64..=60 {
            for m in 2u64..=60 {
                if a.gcd(&m) == 1 {
                    let inv = mod_inverse(&big(a), &big(m)).unwrap();
                    assert_eq!((big(a) * inv) % big(m), big(1) % big(m));
                }
            }
        }
    }

    #[test]
    fn canonical_target_solutions() {
        assert_eq!(solve_target(&pair(9, 25), &big(95)), Some((big(5), big(2))));
        assert_eq!(solve_target(&pair(4, 9), &big(12)), Some((big(3), big(0))));
        assert_eq!(solve_target(&pair(2, 3), &big(1)), None);
        assert_eq!(solve_target(&pair(5, 1), &big(17)), Some((big(0), big(17))));
    }

    #[test]
    fn pair_solutions_match_published_rows() {
        let cases = [
            (1u64, 4u64, Gamma::One, 0u64, 0u64),
            (8, 27, Gamma::One, 8, 1),
            (27, 125, Gamma::Two, 18, 9),
            (3025, 7921, Gamma::Two, 1513, 934),
        ];
        for (a, b, g, x, y) in cases {
            let sol = solve_pair(&pair(a, b)).unwrap();
            assert_eq!((sol.gamma, sol.x, sol.y), (g, big(x), big(y)), "({a}, {b})");
        }
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(gamma(&pair(169, 441)).unwrap(), Gamma::Two);
        assert_eq!(gamma(&pair(1156, 3025)).unwrap(), Gamma::One);
        assert_eq!(gamma(&pair(16, 81)).unwrap(), Gamma::Two);
    }

    #[test]
    fn gamma_value_and_flip() {
        assert_eq!(Gamma::One.value(), 1);
        assert_eq!(Gamma::Two.value(), 2);
        assert_eq!(Gamma::One.flip(), Gamma::Two);
        assert_eq!(Gamma::Two.flip(), Gamma::One);
        assert_eq!(Gamma::One.to_string(), "1");
        assert_eq!(Gamma::Two.to_string(), "2");
    }

    #[test]
    fn shifted_solutions() {
        let cases = [
            (9u64, 25u64, Gamma::Two, 6u64, 3u64),
            (1, 4, Gamma::One, 1, 1),
            (4, 9, Gamma::One, 4, 1),
        ];
        for (a, b, g, x, y) in cases {
            let sol = solve_shifted_pair(&pair(a, b)).unwrap();
            assert_eq!((sol.gamma, sol.x, sol.y), (g, big(x), big(y)), "({a}, {b})");
        }
    }

    #[test]
    fn positive_solutions() {
        let cases = [
            (1u64, 4u64, EquationTag::Plus, 1u64, 1u64),
            (3, 4, EquationTag::Minus, 1, 1),
            (3, 5, EquationTag::Plus, 2, 1),
            (3, 2, EquationTag::Plus, 1, 1),
        ];
        for (a, b, tag, x, y) in cases {
            let sol = solve_positive_pair(&big(a), &big(b)).unwrap();
            assert_eq!(
                (sol.equation, sol.x, sol.y),
                (tag, big(x), big(y)),
                "({a}, {b})"
            );
            assert_eq!(sol.k, big((a + 1) * b / 2));
        }
        assert_eq!(EquationTag::Plus.to_string(), "plus");
        assert_eq!(EquationTag::Minus.to_string(), "minus");
    }

    #[test]
    fn positive_solver_rejects_bad_input() {
        assert!(matches!(
            solve_positive_pair(&big(2), &big(3)),
            Err(Error::EvenOperand { .. })
        ));
        assert!(matches!(
            solve_positive_pair(&big(3), &big(1)),
            Err(Error::BelowMinimum { min: 2, .. })
        ));
        assert!(matches!(
            solve_positive_pair(&big(3), &big(9)),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            solve_positive_pair(&big(0), &big(4)),
            Err(Error::ZeroOperand)
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            brute_force_oracle(&big(2), &big(3), &big(0), Positivity::NonNegative).unwrap(),
            vec![(big(0), big(0))]
        );
        assert_eq!(
            brute_force_oracle(&big(9), &big(25), &big(96), Positivity::NonNegative).unwrap(),
            vec![]
        );
        assert_eq!(
            brute_force_oracle(&big(3), &big(4), &big(7), Positivity::Positive).unwrap(),
            vec![(big(1), big(1))]
        );
    }

    #[test]
    fn oracle_refuses_oversized_instances() {
        assert!(matches!(
            brute_force_oracle(
                &big(100_000),
                &big(10_000),
                &big(5),
                Positivity::NonNegative
            ),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(matches!(
            brute_force_oracle(
                &big(1),
                &big(1),
                &big(10_000_000_000),
                Positivity::NonNegative
            ),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn dichotomy_and_canonicality_small_sweep() {
        for a in 1u64..=40 {
            for b in 1u64..=40 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let p = pair(a, b);
                let sol = solve_pair(&p).unwrap();
                let t = p.target();

                let at_t =
                    brute_force_oracle(&big(a), &big(b), t, Positivity::NonNegative).unwrap();
                let below = if t.is_zero() {
                    vec![]
                } else {
                    brute_force_oracle(&big(a), &big(b), &(t - 1u32), Positivity::NonNegative)
                        .unwrap()
                };
                let (expected_gamma, solutions) = if at_t.is_empty() {
                    (Gamma::Two, &below)
                } else {
                    (Gamma::One, &at_t)
                };
                if b >= 2 {
                    assert_eq!(
                        solutions.len(),
                        1,
                        "({a}, {b}) must have a unique solution"
                    );
                    assert!(at_t.is_empty() != below.is_empty() || t.is_zero());
                    assert!(sol.x < big(b), "canonical x must stay below b");
                    assert_eq!((sol.x.clone(), sol.y.clone()), solutions[0]);
                }
                assert_eq!(sol.gamma, expected_gamma, "({a}, {b})");

                let shifted = solve_shifted_pair(&p).unwrap();
                assert_eq!(shifted.gamma, sol.gamma);
                assert_eq!(shifted.x, sol.x + 1u32);
                assert_eq!(shifted.y, sol.y + 1u32);
            }
        }
    }

    #[test]
    fn positive_sweep_matches_oracle() {
        for a in (1u64..=30).step_by(2) {
            for b in 2u64..=30 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let sol = solve_positive_pair(&big(a), &big(b)).unwrap();
                let k = (a + 1) * b / 2;
                let plus =
                    brute_force_oracle(&big(a), &big(b), &big(k + 1), Positivity::Positive)
                        .unwrap();
                let minus =
                    brute_force_oracle(&big(a), &big(b), &big(k - 1), Positivity::Positive)
                        .unwrap();
                let (tag, expected) = match (plus.len(), minus.len()) {
                    (1, 0) => (EquationTag::Plus, &plus[0]),
                    (0, 1) => (EquationTag::Minus, &minus[0]),
                    other => panic!("({a}, {b}): expected one positive solution, got {other:?}"),
                };
                assert_eq!(sol.equation, tag, "({a}, {b})");
                assert_eq!((sol.x, sol.y), expected.clone(), "({a}, {b})");
            }
        }
    }
}
