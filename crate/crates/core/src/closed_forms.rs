//! Explicit solution formulas for the three Fibonacci-power families:
//! pairs (F_n, F_{n+1}), (F_n^2, F_{n+1}^2), and (F_n^3, F_{n+1}^3).
//!
//! Each family selects its formula from the index residue alone, so a
//! solution costs O(log n) big-integer work; every result can be
//! cross-checked against the generic solver.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, Pow, Zero};

use crate::error::{Error, Result};
use crate::fibonacci::{alt_sum_cubes, fib_pair, fib_pow, sum_cubes};
use crate::solver::Gamma;

/// Which power family a closed-form result belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Linear,
    Squared,
    Cubed,
}

impl Family {
    /// The exponent applied to both Fibonacci members.
    pub fn exponent(self) -> u32 {
        match self {
            Family::Linear => 1,
            Family::Squared => 2,
            Family::Cubed => 3,
        }
    }

    /// Smallest index the family's formula covers.
    pub fn min_index(self) -> u64 {
        match self {
            Family::Linear => 3,
            Family::Squared => 2,
            Family::Cubed => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Linear => write!(f, "linear"),
            Family::Squared => write!(f, "squared"),
            Family::Cubed => write!(f, "cubed"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Family::Linear),
            "squared" => Ok(Family::Squared),
            "cubed" => Ok(Family::Cubed),
            other => Err(format!(
                "unknown family `{other}`; expected linear, squared, or cubed"
            )),
        }
    }
}

/// Closed-form solution for one family member pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub family: Family,
    pub n: u64,
    pub gamma: Gamma,
    pub x: BigUint,
    pub y: BigUint,
}

impl ClosedFormResult {
    /// Re-substitutes the solution into its defining equation
    /// a x + b y + (gamma - 1) = (a - 1)(b - 1)/2 with a = F_n^i,
    /// b = F_{n+1}^i.
    pub fn satisfies_equation(&self) -> bool {
        let i = self.family.exponent();
        let a = fib_pow(self.n, i);
        let b = fib_pow(self.n + 1, i);
        let product = (&a - 1u32) * (&b - 1u32);
        if !(&product % 2u32).is_zero() {
            return false;
        }
        a * &self.x + b * &self.y + self.gamma.value() - 1u32 == product >> 1u32
    }
}

/// Exact halving, reported as an internal contradiction on failure.
fn exact_half(num: BigUint) -> Result<BigUint> {
    if (&num % 2u32).is_zero() {
        Ok(num >> 1u32)
    } else {
        Err(Error::InexactDivision {
            num: num.to_string(),
            den: 2,
        })
    }
}

fn require_at_least(n: u64, min: u64) -> Result<()> {
    if n < min {
        Err(Error::BelowMinimum { what: "n", min, got: n })
    } else {
        Ok(())
    }
}

fn nonnegative(v: BigInt, role: &str) -> Result<BigUint> {
    let detail = format!("{role} came out negative: {v}");
    v.to_biguint()
        .ok_or(Error::IdentityViolated { detail })
}

/// Solution of the pair (F_n, F_{n+1}) for n >= 3, read off the six
/// identities indexed by n mod 6. Writing h(v) = (v - 1)/2:
/// residues 0, 2, 3, 5 give x = y = h(F_{n-1}); residues 1 and 4 give
/// x = h(F_n), y = h(F_{n-2}). Gamma is 1 for residues 0, 1, 2 and 2 for
/// residues 3, 4, 5.
pub fn closed_solution_linear(n: u64) -> Result<ClosedFormResult> {
    require_at_least(n, 3)?;
    let (f_prev2, f_prev) = fib_pair(n - 2);
    let gamma = if n % 6 < 3 { Gamma::One } else { Gamma::Two };
    let (x, y) = match n % 6 {
        1 | 4 => {
            let f_n = &f_prev2 + &f_prev;
            (exact_half(f_n - 1u32)?, exact_half(f_prev2 - 1u32)?)
        }
        _ => {
            let h = exact_half(f_prev - 1u32)?;
            (h.clone(), h)
        }
    };
    Ok(ClosedFormResult {
        family: Family::Linear,
        n,
        gamma,
        x,
        y,
    })
}

/// Solution of the pair (F_n^2, F_{n+1}^2) for n >= 2, by n mod 6:
/// residues 0, 2, 3, 5 give gamma 1 with x = F_n^2 - (F_{n-1}^2 + 1)/2 and
/// y = (F_{n-1}^2 - 1)/2; residue 1 gives gamma 2 with x = (F_n^2 - 3)/2;
/// residue 4 gives gamma 2 with x = (F_n^2 + 1)/2; both gamma-2 cases take
/// y = (F_n^2 - F_{n-1}^2 - 1)/2.
pub fn closed_solution_squared(n: u64) -> Result<ClosedFormResult> {
    require_at_least(n, 2)?;
    let (f_prev, f_n) = fib_pair(n - 1);
    let prev_sq = (&f_prev).pow(2u32);
    let n_sq = (&f_n).pow(2u32);
    let (gamma, x, y) = match n % 6 {
        1 => (
            Gamma::Two,
            exact_half(&n_sq - 3u32)?,
            exact_half(&n_sq - &prev_sq - 1u32)?,
        ),
        4 => (
            Gamma::Two,
            exact_half(&n_sq + 1u32)?,
            exact_half(&n_sq - &prev_sq - 1u32)?,
        ),
        _ => {
            let half_up = exact_half(&prev_sq + 1u32)?;
            let x = n_sq.checked_sub(&half_up).ok_or(Error::IdentityViolated {
                detail: format!("F_{n}^2 fell below (F_{}^2 + 1)/2", n - 1),
            })?;
            (Gamma::One, x, exact_half(&prev_sq - 1u32)?)
        }
    };
    Ok(ClosedFormResult {
        family: Family::Squared,
        n,
        gamma,
        x,
        y,
    })
}

/// Solution of the pair (F_n^3, F_{n+1}^3) for n >= 3, via the cube-sum
/// closed forms: odd n gives gamma 1 with x equal to the alternating sum
/// of the first n cubes negated; even n gives gamma 2 with x equal to that
/// alternating sum (opposite signing) minus 1. Both parities take y equal
/// to the plain sum of cubes from index 2 through n - 1.
pub fn closed_solution_cubed(n: u64) -> Result<ClosedFormResult> {
    require_at_least(n, 3)?;
    let alternating = alt_sum_cubes(n)?;
    let x = if n % 2 == 1 {
        nonnegative(-alternating, "alternating cube sum for odd index")?
    } else {
        nonnegative(alternating - 1, "alternating cube sum for even index")?
    };
    let inner = BigInt::from(sum_cubes(n - 1)?) - 1;
    let y = nonnegative(inner, "inner cube sum")?;
    Ok(ClosedFormResult {
        family: Family::Cubed,
        n,
        gamma: if n % 2 == 1 { Gamma::One } else { Gamma::Two },
        x,
        y,
    })
}

/// Dispatches to the family's formula.
pub fn closed_solution(family: Family, n: u64) -> Result<ClosedFormResult> {
    match family {
        Family::Linear => closed_solution_linear(n),
        Family::Squared => closed_solution_squared(n),
        Family::Cubed => closed_solution_cubed(n),
    }
}

/// Advances a cubed-family solution from index n to n + 1 by the
/// recurrence x' = F_{n+1}^3 - x - 1, y' = y + F_n^3, flipping gamma.
pub fn cubed_recurrence_step(prev: &ClosedFormResult) -> Result<ClosedFormResult> {
    if prev.family != Family::Cubed {
        return Err(Error::WrongFamily);
    }
    require_at_least(prev.n, 3)?;
    let n = prev.n + 1;
    let (f_prev, f_n) = fib_pair(prev.n);
    let cube_n = f_n.pow(3u32);
    let x = cube_n
        .checked_sub(&(&prev.x + 1u32))
        .ok_or(Error::IdentityViolated {
            detail: format!("recurrence x at index {n} came out negative"),
        })?;
    Ok(ClosedFormResult {
        family: Family::Cubed,
        n,
        gamma: prev.gamma.flip(),
        x,
        y: &prev.y + f_prev.pow(3u32),
    })
}
