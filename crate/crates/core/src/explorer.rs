//! Scanning the classifier over (F_n^i, F_{n+1}^j) ranges, regenerating
//! the reference tables, detecting eventual periodicity in the resulting
//! gamma sequences, and probing cross-differences between consecutive
//! rows.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fibonacci::fib_pair;
use crate::solver::{solve_pair, CoprimePair, Gamma};

/// One scanned row: the pair (a, b) = (F_n^i, F_{n+1}^j), its unique
/// solution, and its classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub n: u64,
    pub i: u32,
    pub j: u32,
    pub a: BigUint,
    pub b: BigUint,
    pub x: BigUint,
    pub y: BigUint,
    pub gamma: Gamma,
}

impl ScanRecord {
    /// Re-substitutes the row into a x + b y + (gamma - 1) = (a-1)(b-1)/2.
    pub fn satisfies_equation(&self) -> bool {
        let product = (&self.a - 1u32) * (&self.b - 1u32);
        if !(&product % 2u32).is_zero() {
            return false;
        }
        &self.a * &self.x + &self.b * &self.y + self.gamma.value() - 1u32 == product >> 1u32
    }
}

/// Streaming scan iterator; Fibonacci members advance by the recurrence,
/// so each row costs O(1) big-integer multiplications. Every record is
/// re-substituted into its equation before being yielded.
pub struct Scan {
    i: u32,
    j: u32,
    n: u64,
    n_to: u64,
    f: BigUint,
    g: BigUint,
    failed: bool,
}

impl Iterator for Scan {
    type Item = Result<ScanRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.n > self.n_to {
            return None;
        }
        let item = self.compute();
        if item.is_err() {
            self.failed = true;
        } else {
            let next = &self.f + &self.g;
            self.f = std::mem::replace(&mut self.g, next);
            self.n += 1;
        }
        Some(item)
    }
}

impl Scan {
    fn compute(&self) -> Result<ScanRecord> {
        let a = (&self.f).pow(self.i);
        let b = (&self.g).pow(self.j);
        let pair = CoprimePair::new(a, b)?;
        let sol = solve_pair(&pair)?;
        let record = ScanRecord {
            n: self.n,
            i: self.i,
            j: self.j,
            a: pair.a().clone(),
            b: pair.b().clone(),
            x: sol.x,
            y: sol.y,
            gamma: sol.gamma,
        };
        if record.satisfies_equation() {
            Ok(record)
        } else {
            Err(Error::IdentityViolated {
                detail: format!("scan row n = {} failed re-substitution", self.n),
            })
        }
    }
}

/// Starts a streaming scan of (F_n^i, F_{n+1}^j) for n in [n_from, n_to].
pub fn scan_iter(i: u32, j: u32, n_from: u64, n_to: u64) -> Result<Scan> {
    if i < 1 {
        return Err(Error::BelowMinimum { what: "i", min: 1, got: i as u64 });
    }
    if j < 1 {
        return Err(Error::BelowMinimum { what: "j", min: 1, got: j as u64 });
    }
    if n_from < 2 {
        return Err(Error::BelowMinimum { what: "n_from", min: 2, got: n_from });
    }
    if n_to < n_from {
        return Err(Error::InvalidRange { from: n_from, to: n_to });
    }
    let (f, g) = fib_pair(n_from);
    Ok(Scan {
        i,
        j,
        n: n_from,
        n_to,
        f,
        g,
        failed: false,
    })
}

/// Collects a full scan into memory.
pub fn scan(i: u32, j: u32, n_from: u64, n_to: u64) -> Result<Vec<ScanRecord>> {
    scan_iter(i, j, n_from, n_to)?.collect()
}

/// Outcome of a periodicity search over a gamma sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodStatus {
    Found {
        /// Index (in the caller's numbering) where the periodic tail starts.
        offset: u64,
        period: usize,
        pattern: Vec<Gamma>,
    },
    NoneFound,
}

/// Period-search report over a scanned window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub status: PeriodStatus,
    /// Last index (in the caller's numbering) covered by the search.
    pub verified_upto: u64,
}

/// Searches for the smallest (offset, period), ordered lexicographically,
/// such that the sequence tail from the offset onward repeats exactly with
/// at least 3 full repetitions. `first_index` names the caller's index of
/// the first element (defaults to 0) so the report speaks the caller's
/// numbering. Sequences shorter than 9 cannot hold 3 repetitions of any
/// period at any offset worth reporting and are rejected.
pub fn detect_period(gammas: &[Gamma], first_index: Option<u64>) -> Result<PeriodReport> {
    let len = gammas.len();
    if len < 9 {
        return Err(Error::BelowMinimum {
            what: "sequence length",
            min: 9,
            got: len as u64,
        });
    }
    let base = first_index.unwrap_or(0);
    let verified_upto = base + (len as u64 - 1);
    let mut best: Option<(usize, usize)> = None;
    for period in 1..=len / 3 {
        // The tail is periodic from exactly one position onward: one past
        // the last index where the sequence disagrees with its own shift.
        let mut start = 0;
        for idx in (0..len - period).rev() {
            if gammas[idx] != gammas[idx + period] {
                start = idx + 1;
                break;
            }
        }
        if len - start < 3 * period {
            continue;
        }
        match best {
            Some((s, p)) if (s, p) <= (start, period) => {}
            _ => best = Some((start, period)),
        }
    }
    let status = match best {
        Some((start, period)) => PeriodStatus::Found {
            offset: base + start as u64,
            period,
            pattern: gammas[start..start + period].to_vec(),
        },
        None => PeriodStatus::NoneFound,
    };
    Ok(PeriodReport {
        status,
        verified_upto,
    })
}

/// Cross-differences y_{n+1} - x_n between consecutive records, keyed by
/// the earlier index n. Records must be contiguous in n and share (i, j).
pub fn difference_probe(records: &[ScanRecord]) -> Result<Vec<(u64, BigInt)>> {
    records
        .windows(2)
        .map(|w| {
            let (prev, next) = (&w[0], &w[1]);
            if next.n != prev.n + 1 || next.i != prev.i || next.j != prev.j {
                return Err(Error::NonContiguousRecords);
            }
            let diff = BigInt::from(next.y.clone()) - BigInt::from(prev.x.clone());
            Ok((prev.n, diff))
        })
        .collect()
}

/// Output encodings for scanned records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

/// Renders records deterministically. CSV carries the header
/// `n,a,b,x,y,gamma` and one newline-terminated row per record; JSON is a
/// single-line array of objects with those six keys as exact decimal
/// numbers.
pub fn emit_table(records: &[ScanRecord], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::from("n,a,b,x,y,gamma\n");
            for r in records {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.n, r.a, r.b, r.x, r.y, r.gamma
                ));
            }
            out
        }
        TableFormat::Json => {
            let rows: Vec<String> = records
                .iter()
                .map(|r| {
                    format!(
                        "{{\"n\":{},\"a\":{},\"b\":{},\"x\":{},\"y\":{},\"gamma\":{}}}",
                        r.n, r.a, r.b, r.x, r.y, r.gamma
                    )
                })
                .collect();
            format!("[{}]", rows.join(","))
        }
    }
}
