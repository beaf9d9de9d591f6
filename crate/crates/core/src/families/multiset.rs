use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Multiset type `(n_1, n_2, ...)`: `n_i` copies of the `i`-th element type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    counts: Vec<usize>,
}

impl Multiset {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidMultiset("at least one element type is required".into()));
        }
        if counts.contains(&0) {
            return Err(Error::InvalidMultiset("every count must be at least 1".into()));
        }
        Ok(Multiset { counts })
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn distinct(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn max_count(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Adjoins one copy of type `j`; `j == counts.len()` opens a new type.
    pub fn add_copy(&self, j: usize) -> Result<Self> {
        let mut counts = self.counts.clone();
        match j.cmp(&counts.len()) {
            std::cmp::Ordering::Less => counts[j] += 1,
            std::cmp::Ordering::Equal => counts.push(1),
            std::cmp::Ordering::Greater => {
                return Err(Error::InvalidMultiset(format!("type index {j} out of range")))
            }
        }
        Ok(Multiset { counts })
    }

    /// Every count vector with total size between 1 and `max_size`, in
    /// lexicographic order of size then counts.
    pub fn all_up_to(max_size: usize) -> Vec<Multiset> {
        fn compositions(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(prefix.clone());
                return;
            }
            for first in 1..=n {
                prefix.push(first);
                compositions(n - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for n in 1..=max_size {
            let mut all = Vec::new();
            compositions(n, &mut Vec::new(), &mut all);
            out.extend(all.into_iter().map(|counts| Multiset { counts }));
        }
        out
    }
}

impl FromStr for Multiset {
    type Err = Error;

    /// Comma-separated counts, e.g. `2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|c| c.trim().parse::<usize>().map_err(|e| Error::InvalidMultiset(format!("{c:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(counts)
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let m: Multiset = "2,3,1".parse().unwrap();
        assert_eq!(m.counts(), &[2, 3, 1]);
        assert_eq!(m.size(), 6);
        assert_eq!(m.to_string(), "2,3,1");
        assert!("2,0".parse::<Multiset>().is_err());
        assert!("".parse::<Multiset>().is_err());
        assert!("a".parse::<Multiset>().is_err());
    }

    #[test]
    fn adjoining_copies() {
        let m = Multiset::new(vec![2]).unwrap();
        assert_eq!(m.add_copy(0).unwrap().counts(), &[3]);
        assert_eq!(m.add_copy(1).unwrap().counts(), &[2, 1]);
        assert!(m.add_copy(2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // 2^(n-1) count vectors of each size n
        assert_eq!(Multiset::all_up_to(8).len(), 255);
        assert_eq!(Multiset::all_up_to(1), vec![Multiset::new(vec![1]).unwrap()]);
    }
}
