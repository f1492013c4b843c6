//! Identity suites runnable from the command line. Each suite checks a
//! block of exact statements over a caller-chosen range and reports the
//! case count, or the first counterexample as an error string.

use num_bigint::{BigInt, BigUint};

use fibgamma_core::closed_forms::{
    closed_solution_cubed, closed_solution_squared, cubed_recurrence_step,
};
use fibgamma_core::fibonacci::{
    alt_sum_cubes, cassini, fib_pairs_from, fib_parity, fib_triple_identity, sum_cubes, Parity,
};
use fibgamma_core::solver::{
    brute_force_oracle, solve_pair, solve_positive_pair, CoprimePair, EquationTag, Positivity,
};

/// The available verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// F_{n-1} F_{n+1} - F_n^2 alternates between -1 and 1
    Cassini,
    /// F_n is even exactly when the index is a multiple of 3
    Parity,
    /// F_3n = 5 F_n^3 + 3 (-1)^n F_n
    Triple,
    /// Cube-sum closed forms against direct summation
    Sums,
    /// Squared-family identities and solver equivalence
    Thm12,
    /// Cubed-family identities, solver equivalence, and the recurrence
    Thm15,
    /// Positive-pair solver against exhaustive enumeration
    Thm42,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Cassini => "cassini",
            Suite::Parity => "parity",
            Suite::Triple => "triple",
            Suite::Sums => "sums",
            Suite::Thm12 => "thm12",
            Suite::Thm15 => "thm15",
            Suite::Thm42 => "thm42",
        }
    }
}

/// Runs one suite up to `max`; returns the number of verified cases or a
/// description of the first counterexample.
pub fn run_suite(suite: Suite, max: u64) -> Result<u64, String> {
    match suite {
        Suite::Cassini => run_cassini(max),
        Suite::Parity => run_parity(max),
        Suite::Triple => run_triple(max),
        Suite::Sums => run_sums(max),
        Suite::Thm12 => run_squared_suite(max),
        Suite::Thm15 => run_cubed_suite(max),
        Suite::Thm42 => run_positive_suite(max),
    }
}

fn run_cassini(max: u64) -> Result<u64, String> {
    for n in 1..=max {
        let expected = BigInt::from(if n % 2 == 0 { 1 } else { -1 });
        let got = cassini(n);
        if got != expected {
            return Err(format!("cassini failed at n = {n}: got {got}"));
        }
    }
    Ok(max)
}

fn run_parity(max: u64) -> Result<u64, String> {
    for (n, f, _) in fib_pairs_from(0).take(max as usize + 1) {
        let by_rule = fib_parity(n) == Parity::Even;
        let by_value = (f % 2u32) == BigUint::from(0u32);
        if by_rule != by_value {
            return Err(format!("parity rule failed at n = {n}"));
        }
    }
    Ok(max + 1)
}

fn run_triple(max: u64) -> Result<u64, String> {
    for n in 1..=max {
        let (lhs, rhs) = fib_triple_identity(n);
        if lhs != rhs {
            return Err(format!("triple-index identity failed at n = {n}: {lhs} vs {rhs}"));
        }
    }
    Ok(max)
}

fn run_sums(max: u64) -> Result<u64, String> {
    let mut plain = BigUint::from(0u32);
    let mut alternating = BigInt::from(0);
    for (n, f, _) in fib_pairs_from(1).take(max as usize) {
        let cube = f.pow(3);
        plain += &cube;
        if n % 2 == 0 {
            alternating += BigInt::from(cube);
        } else {
            alternating -= BigInt::from(cube);
        }
        let closed = sum_cubes(n).map_err(|e| e.to_string())?;
        if closed != plain {
            return Err(format!("cube sum failed at n = {n}: {closed} vs {plain}"));
        }
        let closed_alt = alt_sum_cubes(n).map_err(|e| e.to_string())?;
        if closed_alt != alternating {
            return Err(format!(
                "alternating cube sum failed at n = {n}: {closed_alt} vs {alternating}"
            ));
        }
    }
    Ok(max)
}

/// The three squared-family identities in doubled (integer) form, plus
/// agreement between the closed form and the generic solver.
fn run_squared_suite(max: u64) -> Result<u64, String> {
    let mut count = 0;
    for n in 2..=max {
        let (f_prev, f_n) = fibgamma_core::fibonacci::fib_pair(n - 1);
        let f_next = &f_prev + &f_n;
        let p2 = BigInt::from(&f_prev * &f_prev);
        let n2 = BigInt::from(&f_n * &f_n);
        let m2 = BigInt::from(&f_next * &f_next);
        let rhs = (&n2 - 1) * (&m2 - 1);

        let always = (2 * &n2 - &p2 - 1) * &n2 + (&p2 - 1) * &m2;
        if always != rhs {
            return Err(format!("squared identity (both parities) failed at n = {n}"));
        }
        let parity_specific = if n % 2 == 1 {
            2 + (&n2 - 3) * &n2 + (&n2 - &p2 - 1) * &m2
        } else {
            2 + (&n2 + 1) * &n2 + (&n2 - &p2 - 1) * &m2
        };
        if parity_specific != rhs {
            return Err(format!("squared identity (parity form) failed at n = {n}"));
        }

        let closed = closed_solution_squared(n).map_err(|e| e.to_string())?;
        let pair = CoprimePair::new(f_n.pow(2), f_next.pow(2)).map_err(|e| e.to_string())?;
        let solved = solve_pair(&pair).map_err(|e| e.to_string())?;
        if (closed.gamma, &closed.x, &closed.y) != (solved.gamma, &solved.x, &solved.y) {
            return Err(format!("squared closed form disagrees with solver at n = {n}"));
        }
        count += 1;
    }
    Ok(count)
}

/// The two cubed-family identities in doubled form for each half-index m,
/// agreement with the solver at both covered indices, and the step
/// recurrence walked across the whole range.
fn run_cubed_suite(max: u64) -> Result<u64, String> {
    let mut count = 0;
    for m in 2..=max {
        let odd = 2 * m - 1;
        let even = 2 * m;
        let (f_odd, f_even) = fibgamma_core::fibonacci::fib_pair(odd);
        let f_after = &f_odd + &f_even;
        let a = BigInt::from(f_odd.pow(3));
        let b = BigInt::from(f_even.pow(3));
        let c = BigInt::from(f_after.pow(3));

        let lead = -alt_sum_cubes(odd).map_err(|e| e.to_string())?;
        let inner = BigInt::from(sum_cubes(even - 2).map_err(|e| e.to_string())?) - 1;
        if 2 * (&lead * &a + &inner * &b) != (&a - 1) * (&b - 1) {
            return Err(format!("cubed identity failed at odd index {odd}"));
        }

        let lead = alt_sum_cubes(even).map_err(|e| e.to_string())? - 1;
        let inner = BigInt::from(sum_cubes(even - 1).map_err(|e| e.to_string())?) - 1;
        if 2 + 2 * (&lead * &b + &inner * &c) != (&b - 1) * (&c - 1) {
            return Err(format!("cubed identity failed at even index {even}"));
        }

        for n in [odd, even] {
            let closed = closed_solution_cubed(n).map_err(|e| e.to_string())?;
            let (f_n, f_next) = fibgamma_core::fibonacci::fib_pair(n);
            let pair = CoprimePair::new(f_n.pow(3), f_next.pow(3)).map_err(|e| e.to_string())?;
            let solved = solve_pair(&pair).map_err(|e| e.to_string())?;
            if (closed.gamma, &closed.x, &closed.y) != (solved.gamma, &solved.x, &solved.y) {
                return Err(format!("cubed closed form disagrees with solver at n = {n}"));
            }
        }
        count += 1;
    }

    if max >= 2 {
        let mut walking = closed_solution_cubed(3).map_err(|e| e.to_string())?;
        for n in 4..=2 * max {
            walking = cubed_recurrence_step(&walking).map_err(|e| e.to_string())?;
            let direct = closed_solution_cubed(n).map_err(|e| e.to_string())?;
            if walking != direct {
                return Err(format!("cubed recurrence diverged from the formula at n = {n}"));
            }
        }
    }
    Ok(count)
}

/// Positive-pair solver over every odd a and coprime b up to `max`,
/// cross-checked against exhaustive enumeration of both candidate targets.
fn run_positive_suite(max: u64) -> Result<u64, String> {
    let mut count = 0;
    for a in (1..=max).step_by(2) {
        for b in 2..=max {
            if gcd(a, b) != 1 {
                continue;
            }
            let big_a = BigUint::from(a);
            let big_b = BigUint::from(b);
            let sol = solve_positive_pair(&big_a, &big_b).map_err(|e| e.to_string())?;
            let k = (a + 1) / 2 * b;
            let plus = brute_force_oracle(
                &big_a,
                &big_b,
                &BigUint::from(k + 1),
                Positivity::Positive,
            )
            .map_err(|e| e.to_string())?;
            let minus = brute_force_oracle(
                &big_a,
                &big_b,
                &BigUint::from(k - 1),
                Positivity::Positive,
            )
            .map_err(|e| e.to_string())?;
            let (tag, found) = match (plus.len(), minus.len()) {
                (1, 0) => (EquationTag::Plus, &plus[0]),
                (0, 1) => (EquationTag::Minus, &minus[0]),
                other => {
                    return Err(format!(
                        "positive pair ({a}, {b}): expected exactly one solution, found {other:?}"
                    ));
                }
            };
            if sol.equation != tag || (&sol.x, &sol.y) != (&found.0, &found.1) {
                return Err(format!("positive solver disagrees with enumeration at ({a}, {b})"));
            }
            count += 1;
        }
    }
    Ok(count)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
