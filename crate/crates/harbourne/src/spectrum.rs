//! Singularity spectra.
//!
//! The spectrum of an arrangement records, for each multiplicity `k >= 2`,
//! the number `t_k` of ordinary k-fold points. The moments
//!
//! ```text
//! f0 = sum t_k,    f1 = sum k t_k,    f2 = sum k^2 t_k
//! ```
//!
//! drive every formula downstream: Euler numbers, self-intersections, the
//! cover invariants, and all the inequalities.

use std::collections::BTreeMap;

use num::bigint::BigInt;

use crate::error::Error;
use crate::Result;

/// Sparse map multiplicity -> count. Keys are `>= 2`, zero counts are not
/// stored, so two spectra with the same points compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Spectrum {
    counts: BTreeMap<u64, u64>,
}

/// The first three moments of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moments {
    pub f0: BigInt,
    pub f1: BigInt,
    pub f2: BigInt,
}

impl Spectrum {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a spectrum from `(multiplicity, count)` pairs.
    ///
    /// Counts for a repeated multiplicity accumulate; zero counts are
    /// dropped. Fails with `BadMultiplicity` on any key below 2.
    pub fn from_counts<I>(counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut map = BTreeMap::new();
        for (k, t) in counts {
            if k < 2 {
                return Err(Error::BadMultiplicity(k));
            }
            if t > 0 {
                *map.entry(k).or_insert(0u64) += t;
            }
        }
        Ok(Self { counts: map })
    }

    /// Number of k-points, zero for absent keys.
    pub fn t(&self, k: u64) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Iterate `(multiplicity, count)` in increasing multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&k, &t)| (k, t))
    }

    /// Total number of singular points, `f0`, as a machine integer.
    pub fn point_count(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Largest multiplicity present, if any.
    pub fn max_multiplicity(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    /// True when every singular point is a 4-point (vacuously for the
    /// empty spectrum).
    pub fn only_four_points(&self) -> bool {
        self.counts.keys().all(|&k| k == 4)
    }

    /// The moments `(f0, f1, f2)`.
    pub fn moments(&self) -> Moments {
        let mut f0 = BigInt::from(0);
        let mut f1 = BigInt::from(0);
        let mut f2 = BigInt::from(0);
        for (&k, &t) in &self.counts {
            let k = BigInt::from(k);
            let t = BigInt::from(t);
            f0 += &t;
            f1 += &k * &t;
            f2 += &k * &k * &t;
        }
        Moments { f0, f1, f2 }
    }

    /// `sum_{k >= 5} (2k - 9) t_k`, the right-hand side of the spectrum
    /// inequalities.
    pub fn weighted_tail_2k9(&self) -> BigInt {
        self.counts
            .iter()
            .filter(|(&k, _)| k >= 5)
            .map(|(&k, &t)| BigInt::from(2 * k - 9) * BigInt::from(t))
            .sum()
    }

    /// `sum_{k >= 5} (k - 4) t_k`.
    pub fn weighted_tail_k4(&self) -> BigInt {
        self.counts
            .iter()
            .filter(|(&k, _)| k >= 5)
            .map(|(&k, &t)| BigInt::from(k - 4) * BigInt::from(t))
            .sum()
    }

    /// Multiplies every count by `factor`, as pullback along a finite map
    /// does. `factor = 0` empties the spectrum.
    pub fn scaled(&self, factor: u64) -> Self {
        let counts = if factor == 0 {
            BTreeMap::new()
        } else {
            self.counts.iter().map(|(&k, &t)| (k, t * factor)).collect()
        };
        Self { counts }
    }
}

impl<'a> IntoIterator for &'a Spectrum {
    type Item = (u64, u64);
    type IntoIter = std::vec::IntoIter<(u64, u64)>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter().collect::<Vec<_>>().into_iter()
    }
}
