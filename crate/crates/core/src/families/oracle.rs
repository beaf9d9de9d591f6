//! Brute-force enumeration oracles. These share no code with the recurrences
//! they cross-check.

use itertools::Itertools;

use super::Multiset;
use crate::error::{Error, Result};
use crate::{rat, BiPoly, UniPoly};

/// Largest `n` for which permutations of `[n]` are enumerated.
pub const PERMUTATION_LIMIT: usize = 9;
/// Largest multiset size for composition enumeration.
pub const COMPOSITION_LIMIT: usize = 10;

fn check_perm_bound(n: usize) -> Result<()> {
    if n > PERMUTATION_LIMIT {
        Err(Error::TooLarge { size: n, limit: PERMUTATION_LIMIT })
    } else {
        Ok(())
    }
}

/// Number of `i` with `perm[i] > i` (positions and values both 0-based).
pub fn excedances(perm: &[usize]) -> usize {
    perm.iter().enumerate().filter(|&(i, &a)| a > i).count()
}

pub fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// Alternating runs: one more than the number of interior positions where
/// the permutation changes direction; zero for a single element.
pub fn alternating_runs(perm: &[usize]) -> usize {
    if perm.len() < 2 {
        return 0;
    }
    let turns = perm
        .windows(3)
        .filter(|w| (w[0] < w[1]) != (w[1] < w[2]))
        .count();
    turns + 1
}

/// `sum over S_n of x^exc q^cycles`.
pub fn q_eulerian_oracle(n: usize) -> Result<BiPoly> {
    check_perm_bound(n)?;
    let mut table = vec![vec![0i64; n + 1]; n + 1];
    for perm in (0..n).permutations(n) {
        table[excedances(&perm)][cycle_count(&perm)] += 1;
    }
    Ok(BiPoly::new(table.iter().map(|row| UniPoly::from_ints(row)).collect()))
}

/// `sum over S_n of x^runs`.
pub fn alt_runs_oracle(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::NotApplicable("alternating runs need n >= 1".into()));
    }
    check_perm_bound(n)?;
    let mut counts = vec![0i64; n + 1];
    for perm in (0..n).permutations(n) {
        counts[alternating_runs(&perm)] += 1;
    }
    Ok(UniPoly::from_ints(&counts))
}

/// Counts ordered sequences of nonempty sub-multisets whose union is `m`,
/// by number of parts.
pub fn composition_oracle(m: &Multiset) -> Result<UniPoly> {
    if m.size() > COMPOSITION_LIMIT {
        return Err(Error::TooLarge { size: m.size(), limit: COMPOSITION_LIMIT });
    }
    fn walk(remaining: &mut [usize], parts: usize, counts: &mut [i64]) {
        if remaining.iter().all(|&c| c == 0) {
            counts[parts] += 1;
            return;
        }
        // Odometer over sub-multisets 0 <= s <= remaining.
        let mut take = vec![0usize; remaining.len()];
        loop {
            let mut i = 0;
            while i < take.len() {
                if take[i] < remaining[i] {
                    take[i] += 1;
                    break;
                }
                take[i] = 0;
                i += 1;
            }
            if i == take.len() {
                return;
            }
            for (r, t) in remaining.iter_mut().zip(&take) {
                *r -= t;
            }
            walk(remaining, parts + 1, counts);
            for (r, t) in remaining.iter_mut().zip(&take) {
                *r += t;
            }
        }
    }
    let mut counts = vec![0i64; m.size() + 1];
    walk(&mut m.counts().to_vec(), 0, &mut counts);
    Ok(UniPoly::new(counts.into_iter().map(rat).collect()))
}
