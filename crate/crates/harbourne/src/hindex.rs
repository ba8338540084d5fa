//! Harbourne indices: exact fractional subset minimization.
//!
//! For a point set `P` of size `s` on the arrangement `C`, blowing up at `P`
//! gives the strict transform `C'` with `(C')² = C² − Σ_{p∈P} m_p²`, and
//! `H(C, P) = (C')²/s`. The index `H(C)` is the minimum of `H(C, P)` over
//! nonempty subsets of the singular points of `C`.
//!
//! Restricting candidates to singular points is what makes the minimum well
//! defined: adding a smooth point (`m = 1`) moves `N/s` to `(N−1)/(s+1)`,
//! which only helps when `H > −1`, and an off-curve point (`m = 0`) only
//! helps when `H > 0`; every configuration of interest sits at `H ≤ −1`.
//!
//! For fixed `s` the best subset takes the `s` points of largest
//! multiplicity (that maximizes the subtracted `Σ m²`), so the search is a
//! single scan over `s = 1..f₀` along multiplicities sorted descending.
//! Points of equal multiplicity are interchangeable, hence the witness is a
//! count per multiplicity rather than a set of point identities.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;

use crate::arrangement::Arrangement;
use crate::error::Error;
use crate::rat::Rat;
use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Minimum size of the search range before [`h_index`] switches to the
/// parallel scan.
#[cfg(feature = "parallel")]
const PARALLEL_CUTOFF: u64 = 4096;

/// `H(C, P) = (c² − Σ m²)/s` for an explicit multiset of multiplicities.
pub fn h_at_points(c_square: &BigInt, multiplicities: &[u64]) -> Result<Rat> {
    if multiplicities.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let sum_sq: BigInt = multiplicities
        .iter()
        .map(|&m| BigInt::from(m) * BigInt::from(m))
        .sum();
    Ok(Rat::new(
        c_square - sum_sq,
        BigInt::from(multiplicities.len()),
    ))
}

/// `H(C, Sing C) = (C² − f₂)/f₀`.
pub fn h_at_sing(arr: &Arrangement) -> Result<Rat> {
    if !arr.ordinary {
        return Err(Error::NotOrdinary);
    }
    let m = arr.moments();
    if m.f0 == BigInt::from(0) {
        return Err(Error::NoSingularities);
    }
    Ok(Rat::new(arr.c_square()? - m.f2, m.f0))
}

/// How many points the minimizing subset takes at each multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    taken: BTreeMap<u64, u64>,
}

impl Witness {
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.taken
    }

    /// Total number of points taken, the minimizing `s`.
    pub fn size(&self) -> u64 {
        self.taken.values().sum()
    }
}

/// Renders highest multiplicity first, e.g. `4x21+3x28`.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&m, &t) in self.taken.iter().rev() {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{m}x{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// The exact minimum with its witness subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HIndex {
    pub value: Rat,
    pub witness: Witness,
}

/// Full report for one arrangement, assembled by callers that also run the
/// bound battery: both H values, the witness, and `(name, bound, holds)`
/// for every applicable bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HReport {
    pub h_at_sing: Rat,
    pub h_index: Rat,
    pub witness: Witness,
    pub bounds: Vec<(String, Rat, bool)>,
}

/// A value `num/s` at subset size `s`, kept unreduced so comparison is two
/// big-integer multiplications.
#[derive(Debug, Clone)]
struct Candidate {
    num: BigInt,
    s: u64,
}

impl Candidate {
    /// Orders by value, then by `s` ascending, so the minimum is the
    /// smallest subset attaining the minimal value.
    fn cmp(&self, other: &Candidate) -> Ordering {
        let lhs = &self.num * BigInt::from(other.s);
        let rhs = &other.num * BigInt::from(self.s);
        lhs.cmp(&rhs).then(self.s.cmp(&other.s))
    }
}

/// Multiplicities grouped and sorted descending, with cumulative counts and
/// cumulative squared-multiplicity sums for random access into the greedy
/// prefix.
struct Scan {
    c_square: BigInt,
    /// `(multiplicity, count, points up to and including this group,
    /// Σ m² up to and including this group)`.
    groups: Vec<(u64, u64, u64, BigInt)>,
    f0: u64,
}

impl Scan {
    fn new(arr: &Arrangement) -> Result<Scan> {
        if !arr.ordinary {
            return Err(Error::NotOrdinary);
        }
        let mut groups = Vec::new();
        let mut points = 0u64;
        let mut sum_sq = BigInt::from(0);
        for (m, t) in arr.spectrum.iter().collect::<Vec<_>>().into_iter().rev() {
            points += t;
            sum_sq += BigInt::from(m) * BigInt::from(m) * BigInt::from(t);
            groups.push((m, t, points, sum_sq.clone()));
        }
        if points == 0 {
            return Err(Error::NoSingularities);
        }
        Ok(Scan {
            c_square: arr.c_square()?,
            groups,
            f0: points,
        })
    }

    /// Numerator `c² − Σ (top-s multiplicities)²` for `1 ≤ s ≤ f₀`.
    fn numerator_at(&self, s: u64) -> BigInt {
        let idx = self.groups.partition_point(|&(_, _, cum, _)| cum < s);
        let (m, _, cum, ref sq) = self.groups[idx];
        let overshoot = BigInt::from(cum - s) * BigInt::from(m) * BigInt::from(m);
        &self.c_square - (sq - overshoot)
    }

    /// Greedy witness for subset size `s`: top-`s` points by multiplicity.
    fn witness_at(&self, s: u64) -> Witness {
        let mut taken = BTreeMap::new();
        let mut remaining = s;
        for &(m, t, _, _) in &self.groups {
            if remaining == 0 {
                break;
            }
            let take = t.min(remaining);
            taken.insert(m, take);
            remaining -= take;
        }
        Witness { taken }
    }

    fn best_seq(&self) -> Candidate {
        let mut best: Option<Candidate> = None;
        let mut s = 0u64;
        let mut sum_sq = BigInt::from(0);
        for &(m, t, _, _) in &self.groups {
            let m_sq = BigInt::from(m) * BigInt::from(m);
            for _ in 0..t {
                s += 1;
                sum_sq += &m_sq;
                let cand = Candidate {
                    num: &self.c_square - &sum_sq,
                    s,
                };
                match &best {
                    Some(b) if b.cmp(&cand) != Ordering::Greater => {}
                    _ => best = Some(cand),
                }
            }
        }
        best.expect("nonempty scan")
    }

    #[cfg(feature = "parallel")]
    fn best_par(&self) -> Candidate {
        (1..=self.f0)
            .into_par_iter()
            .map(|s| Candidate {
                num: self.numerator_at(s),
                s,
            })
            .min_by(|a, b| a.cmp(b))
            .expect("nonempty scan")
    }
}

fn finish(scan: &Scan, best: Candidate) -> HIndex {
    HIndex {
        value: Rat::new(best.num, BigInt::from(best.s)),
        witness: scan.witness_at(best.s),
    }
}

/// Exact `H(C)` over nonempty subsets of singular points, sequential scan.
pub fn h_index_seq(arr: &Arrangement) -> Result<HIndex> {
    let scan = Scan::new(arr)?;
    let best = scan.best_seq();
    Ok(finish(&scan, best))
}

/// Exact `H(C)`, scanning subset sizes in parallel.
#[cfg(feature = "parallel")]
pub fn h_index_par(arr: &Arrangement) -> Result<HIndex> {
    let scan = Scan::new(arr)?;
    let best = scan.best_par();
    Ok(finish(&scan, best))
}

/// Exact `H(C)` with witness; picks the parallel scan for large point
/// counts when the `parallel` feature is enabled.
pub fn h_index(arr: &Arrangement) -> Result<HIndex> {
    #[cfg(feature = "parallel")]
    {
        let scan = Scan::new(arr)?;
        let best = if scan.f0 >= PARALLEL_CUTOFF {
            scan.best_par()
        } else {
            scan.best_seq()
        };
        return Ok(finish(&scan, best));
    }
    #[cfg(not(feature = "parallel"))]
    h_index_seq(arr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{ComponentClass, Surface};
    use crate::rat::{rat, ratio};
    use crate::spectrum::Spectrum;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn abelian_elliptic(count: u64, spectrum: Spectrum) -> Arrangement {
        Arrangement::new(
            "test",
            Surface::AbelianSurface,
            true,
            vec![ComponentClass::new(1, 0, count)],
            spectrum,
        )
    }

    fn lines(d: u64, spectrum: Spectrum) -> Arrangement {
        Arrangement::new(
            "lines",
            Surface::ProjectivePlane,
            true,
            vec![ComponentClass::new(0, 1, d)],
            spectrum,
        )
    }

    #[test]
    fn h_at_points_examples() {
        assert_eq!(h_at_points(&big(12), &[4]).unwrap(), rat(-4));

        let mut klein_points = vec![3u64; 28];
        klein_points.extend([4u64; 21]);
        assert_eq!(h_at_points(&big(441), &klein_points).unwrap(), rat(-3));

        assert_eq!(h_at_points(&big(0), &[1]).unwrap(), rat(-1));
        assert_eq!(
            h_at_points(&big(0), &[]).unwrap_err(),
            Error::EmptyPointSet
        );
    }

    #[test]
    fn h_at_sing_examples() {
        let holzapfel = abelian_elliptic(6, Spectrum::from_counts([(4, 3)]).unwrap());
        assert_eq!(h_at_sing(&holzapfel).unwrap(), rat(-4));

        let product23 = abelian_elliptic(5, Spectrum::from_counts([(2, 6)]).unwrap());
        assert_eq!(h_at_sing(&product23).unwrap(), rat(-2));

        let fermat = lines(18, Spectrum::from_counts([(3, 36), (6, 3)]).unwrap());
        assert_eq!(h_at_sing(&fermat).unwrap(), ratio(-36, 13));
    }

    #[test]
    fn h_at_sing_gates() {
        let smooth = abelian_elliptic(2, Spectrum::empty());
        assert_eq!(h_at_sing(&smooth).unwrap_err(), Error::NoSingularities);

        let mut tangent = abelian_elliptic(2, Spectrum::from_counts([(2, 1)]).unwrap());
        tangent.ordinary = false;
        assert_eq!(h_at_sing(&tangent).unwrap_err(), Error::NotOrdinary);
        assert_eq!(h_index(&tangent).unwrap_err(), Error::NotOrdinary);
    }

    #[test]
    fn h_index_single_four_point() {
        let hg = abelian_elliptic(4, Spectrum::from_counts([(4, 1)]).unwrap());
        let h = h_index(&hg).unwrap();
        assert_eq!(h.value, rat(-4));
        assert_eq!(h.witness.counts(), &BTreeMap::from([(4, 1)]));
        assert_eq!(h.witness.to_string(), "4x1");
    }

    #[test]
    fn h_index_klein_takes_everything() {
        let klein = lines(21, Spectrum::from_counts([(3, 28), (4, 21)]).unwrap());
        // the greedy value at s = 21 (all 4-points) is positive ...
        assert_eq!(h_at_points(&big(441), &[4; 21]).unwrap(), rat(5));
        // ... and the minimum sits at s = 49
        let h = h_index(&klein).unwrap();
        assert_eq!(h.value, rat(-3));
        assert_eq!(h.witness.size(), 49);
        assert_eq!(h.witness.to_string(), "4x21+3x28");
    }

    #[test]
    fn h_index_diagonal_and_product() {
        let diagonal = abelian_elliptic(3, Spectrum::from_counts([(3, 1)]).unwrap());
        let h = h_index(&diagonal).unwrap();
        assert_eq!(h.value, rat(-3));
        assert_eq!(h.witness.counts(), &BTreeMap::from([(3, 1)]));

        let product11 = abelian_elliptic(2, Spectrum::from_counts([(2, 1)]).unwrap());
        assert_eq!(h_index(&product11).unwrap().value, rat(-2));
    }

    #[test]
    fn h_index_tie_breaks_to_smallest_subset() {
        // C² = −4 + (8 − 4) = 0, so s = 1 and s = 2 both give −4
        let arr = Arrangement::new(
            "tie",
            Surface::AbelianSurface,
            true,
            vec![ComponentClass::new(0, -2, 2)],
            Spectrum::from_counts([(2, 2)]).unwrap(),
        );
        let h = h_index(&arr).unwrap();
        assert_eq!(h.value, rat(-4));
        assert_eq!(h.witness.size(), 1);
    }

    #[test]
    fn h_index_at_most_h_at_sing() {
        for spectrum in [
            Spectrum::from_counts([(2, 3), (5, 1)]).unwrap(),
            Spectrum::from_counts([(3, 4)]).unwrap(),
            Spectrum::from_counts([(2, 1), (3, 1), (4, 1)]).unwrap(),
        ] {
            let arr = abelian_elliptic(4, spectrum);
            assert!(h_index(&arr).unwrap().value <= h_at_sing(&arr).unwrap());
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_scan_matches_sequential() {
        let arr = abelian_elliptic(
            9,
            Spectrum::from_counts([(2, 500), (3, 300), (4, 100), (7, 11)]).unwrap(),
        );
        let seq = h_index_seq(&arr).unwrap();
        let par = h_index_par(&arr).unwrap();
        assert_eq!(seq.value, par.value);
        assert_eq!(seq.witness, par.witness);
    }

    #[test]
    fn random_access_numerator_matches_running_sum() {
        let arr = abelian_elliptic(
            5,
            Spectrum::from_counts([(2, 4), (3, 2), (6, 3)]).unwrap(),
        );
        let scan = Scan::new(&arr).unwrap();
        let mut sorted: Vec<u64> = arr
            .spectrum
            .iter()
            .flat_map(|(m, t)| std::iter::repeat(m).take(t as usize))
            .collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut sum_sq = big(0);
        for (i, &m) in sorted.iter().enumerate() {
            sum_sq += big(m as i64) * big(m as i64);
            assert_eq!(
                scan.numerator_at(i as u64 + 1),
                &scan.c_square - &sum_sq
            );
        }
    }
}
