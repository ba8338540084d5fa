//! The negativity inequalities, each evaluated as an exact predicate.
//!
//! Every bound reports both sides as exact rationals together with a
//! `holds` flag for `lhs ≥ rhs`. Bounds are evaluated even when their
//! hypotheses fail — the engine doubles as a feasibility filter on
//! hypothetical spectra, where a failing inequality is the interesting
//! outcome — so each result carries a separate `applicable` flag with the
//! hypothesis check.

use num::bigint::BigInt;
use num::Zero;

use crate::arrangement::{Arrangement, Surface};
use crate::error::Error;
use crate::rat::{rat, ratio, Rat};
use crate::spectrum::Spectrum;
use crate::Result;

/// One evaluated inequality of the form `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub name: String,
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
    pub applicable: bool,
    pub note: String,
}

fn bound(name: &str, lhs: Rat, rhs: Rat, applicable: bool, note: impl Into<String>) -> BoundResult {
    BoundResult {
        name: name.to_string(),
        holds: lhs >= rhs,
        lhs,
        rhs,
        applicable,
        note: note.into(),
    }
}

fn big_rat(n: &BigInt) -> Rat {
    Rat::from(n.clone())
}

/// For arrangements of genus-g curves on an abelian surface:
/// `−f₁/f₀ ≥ (t₂ + t₃/4 − 7g + 7)/f₀ − 4`.
///
/// At `g = 1` the right-hand side is itself `≥ −4`, which the note records.
pub fn elliptic_bound(spectrum: &Spectrum, g: i64) -> Result<BoundResult> {
    let m = spectrum.moments();
    if m.f0.is_zero() {
        return Err(Error::NoSingularities);
    }
    let f0 = big_rat(&m.f0);
    let lhs = -big_rat(&m.f1) / &f0;
    let numer = rat(spectrum.t(2) as i64)
        + ratio(1, 4) * rat(spectrum.t(3) as i64)
        - rat(7) * rat(g - 1);
    let rhs = numer / &f0 - rat(4);
    let note = if g == 1 {
        format!("rhs >= -4: {}", rhs >= rat(-4))
    } else {
        String::new()
    };
    Ok(bound("elliptic", lhs, rhs, true, note))
}

/// For ordinary arrangements on an abelian surface:
/// `(2g−2−f₁)/f₀ ≥ (2t₂ + (9/8)t₃ + (1/2)t₄ + 8 − 8g)/f₀ − 9/2`.
///
/// The left side is `H(C, Sing C)` whenever the components are elliptic.
pub fn genus_bound(arr: &Arrangement) -> Result<BoundResult> {
    if arr.surface != Surface::AbelianSurface {
        return Err(Error::WrongSurface {
            expected: "abelian",
        });
    }
    if !arr.ordinary {
        return Err(Error::NotOrdinary);
    }
    let m = arr.moments();
    if m.f0.is_zero() {
        return Err(Error::NoSingularities);
    }
    let f0 = big_rat(&m.f0);
    let gm1 = arr.genus_minus_one();
    let lhs = (rat(2) * big_rat(&gm1) - big_rat(&m.f1)) / &f0;
    let numer = rat(2) * rat(arr.spectrum.t(2) as i64)
        + ratio(9, 8) * rat(arr.spectrum.t(3) as i64)
        + ratio(1, 2) * rat(arr.spectrum.t(4) as i64)
        - rat(8) * big_rat(&gm1);
    let rhs = numer / &f0 - ratio(9, 2);
    Ok(bound("genus", lhs, rhs, true, ""))
}

/// The spectrum inequality `10g − 10 + t₂ + (3/4)t₃ ≥ Σ_{k≥5} (2k−9) t_k`.
///
/// A failure means no genus-g arrangement on an abelian surface can have
/// this spectrum.
pub fn abelian_spectrum_ineq(spectrum: &Spectrum, g: i64) -> BoundResult {
    let lhs = rat(10) * rat(g - 1)
        + rat(spectrum.t(2) as i64)
        + ratio(3, 4) * rat(spectrum.t(3) as i64);
    let rhs = big_rat(&spectrum.weighted_tail_2k9());
    bound("spectrum", lhs, rhs, true, "")
}

/// `H(C, Sing C)` of a line arrangement against the two lower bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBounds {
    pub h_sing: Rat,
    pub b1: BoundResult,
    pub b2: BoundResult,
    pub b2_ge_b1: bool,
}

/// For `d` lines in the plane: `h_sing = (d − f₁)/f₀` compared against
/// `B₁ = −4 + (2d + t₂ + t₃/4)/f₀` and
/// `B₂ = (3d/2 + 2t₂ + (9/8)t₃ + (1/2)t₄)/f₀ − 9/2`.
pub fn line_bounds(d: u64, spectrum: &Spectrum) -> Result<LineBounds> {
    if d < 2 {
        return Err(Error::TooFewComponents);
    }
    let m = spectrum.moments();
    if m.f0.is_zero() {
        return Err(Error::NoSingularities);
    }
    let f0 = big_rat(&m.f0);
    let d_rat = rat(d as i64);
    let h_sing = (&d_rat - big_rat(&m.f1)) / &f0;

    let b1_value = rat(-4)
        + (rat(2) * &d_rat
            + rat(spectrum.t(2) as i64)
            + ratio(1, 4) * rat(spectrum.t(3) as i64))
            / &f0;
    let b2_value = (ratio(3, 2) * &d_rat
        + rat(2) * rat(spectrum.t(2) as i64)
        + ratio(9, 8) * rat(spectrum.t(3) as i64)
        + ratio(1, 2) * rat(spectrum.t(4) as i64))
        / &f0
        - ratio(9, 2);

    let b2_ge_b1 = b2_value >= b1_value;
    Ok(LineBounds {
        h_sing: h_sing.clone(),
        b1: bound("B1", h_sing.clone(), b1_value, true, ""),
        b2: bound("B2", h_sing, b2_value, true, ""),
        b2_ge_b1,
    })
}

/// The two classical line-arrangement inequalities, both with left side
/// `t₂ + (3/4)t₃`:
///
/// * `bauer`: `≥ d + Σ_{k≥5} (k−4) t_k`, needing `d ≥ 6` and
///   `t_d = t_{d−1} = t_{d−2} = t_{d−3} = 0`;
/// * `hirzebruch`: `≥ d + Σ_{k≥5} (2k−9) t_k`, needing `d ≥ 6` and
///   `t_d = t_{d−1} = t_{d−2} = 0`.
pub fn hirzebruch_line_checks(d: u64, spectrum: &Spectrum) -> (BoundResult, BoundResult) {
    let lhs =
        rat(spectrum.t(2) as i64) + ratio(3, 4) * rat(spectrum.t(3) as i64);
    let d_rat = rat(d as i64);

    let top_free = |depth: u64| d >= 6 && (0..depth).all(|i| spectrum.t(d - i) == 0);

    let bauer_rhs = &d_rat + big_rat(&spectrum.weighted_tail_k4());
    let bauer = bound(
        "bauer",
        lhs.clone(),
        bauer_rhs,
        top_free(4),
        "needs d >= 6 and t_d = t_{d-1} = t_{d-2} = t_{d-3} = 0",
    );

    let hirz_rhs = d_rat + big_rat(&spectrum.weighted_tail_2k9());
    let hirzebruch = bound(
        "hirzebruch",
        lhs,
        hirz_rhs,
        top_free(3),
        "needs d >= 6 and t_d = t_{d-1} = t_{d-2} = 0",
    );

    (bauer, hirzebruch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::ComponentClass;

    fn spec(counts: &[(u64, u64)]) -> Spectrum {
        Spectrum::from_counts(counts.iter().copied()).unwrap()
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

    #[test]
    fn elliptic_bound_examples() {
        let b = elliptic_bound(&spec(&[(4, 1)]), 1).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(-4), rat(-4), true));

        let b = elliptic_bound(&spec(&[(2, 1)]), 1).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(-2), rat(-3), true));

        let b = elliptic_bound(&spec(&[(3, 1)]), 1).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(-3), ratio(-15, 4), true));

        assert_eq!(
            elliptic_bound(&Spectrum::empty(), 1).unwrap_err(),
            Error::NoSingularities
        );
    }

    #[test]
    fn elliptic_bound_notes_the_chain_at_genus_one() {
        let b = elliptic_bound(&spec(&[(2, 3)]), 1).unwrap();
        assert_eq!(b.note, "rhs >= -4: true");
        let b = elliptic_bound(&spec(&[(2, 3)]), 2).unwrap();
        assert_eq!(b.note, "");
    }

    #[test]
    fn genus_bound_examples() {
        let hg = abelian_elliptic(4, spec(&[(4, 1)]));
        let b = genus_bound(&hg).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(-4), rat(-4), true));

        let holz = abelian_elliptic(6, spec(&[(4, 3)]));
        let b = genus_bound(&holz).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(-4), rat(-4), true));

        let diag = abelian_elliptic(3, spec(&[(3, 1)]));
        let b = genus_bound(&diag).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(-3), ratio(-27, 8), true));
    }

    #[test]
    fn genus_bound_gates() {
        let plane = Arrangement::new(
            "lines",
            Surface::ProjectivePlane,
            true,
            vec![ComponentClass::new(0, 1, 3)],
            spec(&[(2, 3)]),
        );
        assert!(matches!(
            genus_bound(&plane),
            Err(Error::WrongSurface { .. })
        ));
        assert_eq!(
            genus_bound(&abelian_elliptic(2, Spectrum::empty())).unwrap_err(),
            Error::NoSingularities
        );
    }

    #[test]
    fn spectrum_ineq_examples() {
        let b = abelian_spectrum_ineq(&spec(&[(4, 1)]), 1);
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(0), rat(0), true));

        let b = abelian_spectrum_ineq(&spec(&[(5, 1)]), 1);
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(0), rat(1), false));

        let b = abelian_spectrum_ineq(&spec(&[(2, 4), (5, 2)]), 1);
        assert_eq!((b.lhs, b.rhs, b.holds), (rat(4), rat(2), true));
    }

    #[test]
    fn line_bounds_klein() {
        let lb = line_bounds(21, &spec(&[(3, 28), (4, 21)])).unwrap();
        assert_eq!(lb.h_sing, rat(-3));
        assert_eq!(lb.b1.rhs, rat(-3));
        assert_eq!(lb.b2.rhs, rat(-3));
        assert!(lb.b1.holds && lb.b2.holds && lb.b2_ge_b1);
    }

    #[test]
    fn line_bounds_fermat18() {
        let lb = line_bounds(18, &spec(&[(3, 36), (6, 3)])).unwrap();
        assert_eq!(lb.h_sing, ratio(-36, 13));
        assert_eq!(lb.b1.rhs, ratio(-37, 13));
        assert_eq!(lb.b2.rhs, ratio(-36, 13));
        assert!(lb.b2_ge_b1);
    }

    #[test]
    fn line_bounds_generic_six() {
        let lb = line_bounds(6, &spec(&[(2, 15)])).unwrap();
        assert_eq!(lb.h_sing, ratio(-8, 5));
        assert_eq!(lb.b1.rhs, ratio(-11, 5));
        assert_eq!(lb.b2.rhs, ratio(-19, 10));
        assert!(lb.b2_ge_b1);
    }

    #[test]
    fn hirzebruch_checks_examples() {
        let (_, hirz) = hirzebruch_line_checks(21, &spec(&[(3, 28), (4, 21)]));
        assert_eq!((hirz.lhs.clone(), hirz.rhs.clone()), (rat(21), rat(21)));
        assert!(hirz.holds && hirz.applicable);

        let (bauer, hirz) = hirzebruch_line_checks(18, &spec(&[(3, 36), (6, 3)]));
        assert_eq!((hirz.lhs, hirz.rhs), (rat(27), rat(27)));
        assert_eq!((bauer.lhs, bauer.rhs), (rat(27), rat(24)));
        assert!(bauer.applicable);

        let (bauer, _) = hirzebruch_line_checks(6, &spec(&[(2, 15)]));
        assert_eq!((bauer.lhs, bauer.rhs, bauer.holds), (rat(15), rat(6), true));
        assert!(bauer.applicable);
    }

    #[test]
    fn hirzebruch_applicability_hypotheses() {
        // a d-point (all lines concurrent) breaks both hypotheses
        let (bauer, hirz) = hirzebruch_line_checks(7, &spec(&[(7, 1)]));
        assert!(!bauer.applicable && !hirz.applicable);

        // t_{d-3} > 0 breaks (bauer) but not (hirzebruch)
        let (bauer, hirz) = hirzebruch_line_checks(8, &spec(&[(2, 18), (5, 2)]));
        assert!(!bauer.applicable && hirz.applicable);

        // d < 6 is never applicable
        let (bauer, hirz) = hirzebruch_line_checks(4, &spec(&[(2, 6)]));
        assert!(!bauer.applicable && !hirz.applicable);
    }

    #[test]
    fn b2_minus_b1_closed_form() {
        // B2 - B1 = (-d/2 + t2/2 + 3 t3/8 - sum_{k>=5} t_k/2) / f0
        for (d, counts) in [
            (21u64, vec![(3u64, 28u64), (4, 21)]),
            (18, vec![(3, 36), (6, 3)]),
            (9, vec![(2, 10), (5, 2), (7, 1)]),
        ] {
            let s = spec(&counts);
            let lb = line_bounds(d, &s).unwrap();
            let tail: i64 = counts
                .iter()
                .filter(|&&(k, _)| k >= 5)
                .map(|&(_, t)| t as i64)
                .sum();
            let expected = (ratio(-(d as i64), 2)
                + ratio(s.t(2) as i64, 2)
                + ratio(3 * s.t(3) as i64, 8)
                - ratio(tail, 2))
                / big_rat(&s.moments().f0);
            assert_eq!(lb.b2.rhs.clone() - lb.b1.rhs.clone(), expected);
        }
    }
}
