//! Named generators for the standard configurations.
//!
//! Each generator returns the combinatorial data of a classical
//! arrangement: the dual Hesse and Klein and Fermat line configurations in
//! the plane, the elliptic configurations on abelian surfaces (Gaussian and
//! Eisenstein lattices, fiber products, the diagonal), and the cubic family
//! `C_n` together with its exact H-value formulas. The line-configuration
//! spectra are stored constants, certified two ways in the test suite: the
//! pair-count identity `Σ k(k−1) t_k = d(d−1)` and the equality of
//! `H(C, Sing C)` with the bound `B₂`.

use num::bigint::BigInt;

use crate::arrangement::{Arrangement, ComponentClass, Surface};
use crate::error::Error;
use crate::rat::{rat, Rat};
use crate::spectrum::Spectrum;
use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A named arrangement plus the exact values it is claimed to produce,
/// as `(quantity, value)` pairs in display order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub arrangement: Arrangement,
    pub expected: Vec<(String, String)>,
}

fn lines(label: &str, d: u64, spectrum: Spectrum) -> Arrangement {
    Arrangement::new(
        label,
        Surface::ProjectivePlane,
        true,
        vec![ComponentClass::new(0, 1, d)],
        spectrum,
    )
}

fn elliptic(label: &str, d: u64, spectrum: Spectrum) -> Arrangement {
    Arrangement::new(
        label,
        Surface::AbelianSurface,
        true,
        vec![ComponentClass::new(1, 0, d)],
        spectrum,
    )
}

/// Nine lines with twelve triple points.
pub fn dual_hesse() -> Arrangement {
    lines(
        "dual-hesse",
        9,
        Spectrum::from_counts([(3, 12)]).expect("constant spectrum"),
    )
}

/// Four elliptic curves through one 4-point, on the square-lattice abelian
/// surface.
pub fn hirzebruch_gauss() -> Arrangement {
    elliptic(
        "hirzebruch-gauss",
        4,
        Spectrum::from_counts([(4, 1)]).expect("constant spectrum"),
    )
}

/// Six elliptic curves with three 4-points, on the triangular-lattice
/// abelian surface.
pub fn holzapfel_eisenstein() -> Arrangement {
    elliptic(
        "holzapfel-eisenstein",
        6,
        Spectrum::from_counts([(4, 3)]).expect("constant spectrum"),
    )
}

/// `m` horizontal and `n` vertical fibers on a product of elliptic curves,
/// meeting in `m·n` nodes.
pub fn product_fibers(m: u64, n: u64) -> Result<Arrangement> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter(
            "product fibers need m >= 1 and n >= 1".into(),
        ));
    }
    Ok(elliptic(
        &format!("product-{m}-{n}"),
        m + n,
        Spectrum::from_counts([(2, m * n)])?,
    ))
}

/// Diagonal plus a horizontal and a vertical fiber on E × E: one 3-point.
pub fn diagonal_config() -> Arrangement {
    elliptic(
        "diagonal",
        3,
        Spectrum::from_counts([(3, 1)]).expect("constant spectrum"),
    )
}

/// The 21-line Klein configuration: 28 triple and 21 quadruple points.
pub fn klein() -> Arrangement {
    lines(
        "klein",
        21,
        Spectrum::from_counts([(3, 28), (4, 21)]).expect("constant spectrum"),
    )
}

/// The Fermat configuration of 18 lines: 36 triple and 3 six-fold points.
pub fn fermat18() -> Arrangement {
    lines(
        "fermat18",
        18,
        Spectrum::from_counts([(3, 36), (6, 3)]).expect("constant spectrum"),
    )
}

fn cn_check(n: u64) -> Result<u64> {
    if n == 0 || n % 3 != 0 {
        return Err(Error::BadParameter(format!(
            "the cubic family is indexed by positive multiples of 3, got {n}"
        )));
    }
    Ok(n)
}

fn checked_u64(value: u128, what: &str) -> Result<u64> {
    u64::try_from(value)
        .map_err(|_| Error::BadParameter(format!("{what} overflows for this n")))
}

/// The cubic configuration `C_n` and its associated triple-point
/// configuration on the blown-up plane.
///
/// `C_n` consists of `(4/3)(n²−3)` smooth cubics with `(1/3)(n²−3)(n²−9)`
/// ordinary 4-points and twelve points of multiplicity `n²−3` that carry
/// infinitely-near tangencies; it is stored non-ordinary with its exact
/// `C²`, since the generic pairwise bookkeeping does not apply there. The
/// companion arrangement has the twelve big points replaced by `4(n²−3)`
/// triple points and is ordinary.
pub fn cn_family(n: u64) -> Result<(Arrangement, Arrangement)> {
    cn_check(n)?;
    let n2 = (n as u128) * (n as u128);
    let d = checked_u64(4 * (n2 - 3) / 3, "component count")?;
    let big_mult = checked_u64(n2 - 3, "multiplicity")?;
    let t4 = checked_u64((n2 - 3) * (n2 - 9) / 3, "4-point count")?;
    let t3 = checked_u64(4 * (n2 - 3), "3-point count")?;

    let mut plane = Arrangement::new(
        format!("cn-{n}"),
        Surface::ProjectivePlane,
        false,
        vec![ComponentClass::new(1, 9, d)],
        Spectrum::from_counts([(4, t4), (big_mult, 12)])?,
    );
    let n2 = BigInt::from(n) * BigInt::from(n);
    plane.c_square_override = Some(
        BigInt::from(16) * (&n2 - BigInt::from(3)) * (&n2 - BigInt::from(4)),
    );

    let on_z = Arrangement::new(
        format!("cn-{n}-on-z"),
        Surface::ProjectivePlane,
        true,
        vec![ComponentClass::new(1, 0, d)],
        Spectrum::from_counts([(3, t3), (4, t4)])?,
    );
    Ok((plane, on_z))
}

/// Exact H-data of `C_n` at its singular points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnValue {
    pub h: Rat,
    pub c_bar_square: BigInt,
    pub s: BigInt,
}

/// `C̄² = −(4/3)(n²−3)(n²−15)`, `s = 12 + (1/3)(n²−3)(n²−9)`, `h = C̄²/s`.
pub fn cn_h_value(n: u64) -> Result<CnValue> {
    cn_check(n)?;
    let n2 = BigInt::from(n) * BigInt::from(n);
    let c_bar_square: BigInt = BigInt::from(-4) * (&n2 - BigInt::from(3)) * (&n2 - BigInt::from(15))
        / BigInt::from(3);
    let s = BigInt::from(12)
        + (&n2 - BigInt::from(3)) * (&n2 - BigInt::from(9)) / BigInt::from(3);
    Ok(CnValue {
        h: Rat::new(c_bar_square.clone(), s.clone()),
        c_bar_square,
        s,
    })
}

/// One row of the `C_n` convergence sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnRow {
    pub n: u64,
    pub c_bar_square: BigInt,
    pub s: BigInt,
    pub h: Rat,
    /// `h + 4`, the distance to the limit.
    pub gap: Rat,
}

fn cn_row(n: u64) -> Result<CnRow> {
    let value = cn_h_value(n)?;
    let gap = &value.h + rat(4);
    Ok(CnRow {
        n,
        c_bar_square: value.c_bar_square,
        s: value.s,
        h: value.h,
        gap,
    })
}

fn sweep_range(from: u64, to: u64, step: u64) -> Result<Vec<u64>> {
    cn_check(from)?;
    cn_check(to)?;
    cn_check(step)?;
    if from > to {
        return Err(Error::BadParameter(format!(
            "empty sweep range {from}..{to}"
        )));
    }
    Ok((from..=to).step_by(step as usize).collect())
}

/// Sweep rows for `n = from, from+step, ..., ≤ to`, sequential.
pub fn cn_sweep_seq(from: u64, to: u64, step: u64) -> Result<Vec<CnRow>> {
    sweep_range(from, to, step)?
        .into_iter()
        .map(cn_row)
        .collect()
}

/// Sweep rows computed in parallel, merged in input order.
#[cfg(feature = "parallel")]
pub fn cn_sweep_par(from: u64, to: u64, step: u64) -> Result<Vec<CnRow>> {
    sweep_range(from, to, step)?
        .into_par_iter()
        .map(cn_row)
        .collect()
}

/// Sweep rows; parallel for long sweeps when the feature is on.
pub fn cn_sweep(from: u64, to: u64, step: u64) -> Result<Vec<CnRow>> {
    #[cfg(feature = "parallel")]
    if to.saturating_sub(from) / step >= 64 {
        return cn_sweep_par(from, to, step);
    }
    cn_sweep_seq(from, to, step)
}

fn entry(name: &str, arrangement: Arrangement, expected: &[(&str, &str)]) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        arrangement,
        expected: expected
            .iter()
            .map(|&(k, v)| (k.to_string(), v.to_string()))
            .collect(),
    }
}

/// The fixed catalog, in display order.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        entry(
            "dual-hesse",
            dual_hesse(),
            &[("h_sing", "-9/4"), ("b1", "-9/4"), ("b2", "-9/4")],
        ),
        entry(
            "hirzebruch-gauss",
            hirzebruch_gauss(),
            &[
                ("h_index", "-4"),
                ("ball_quotient", "true"),
                ("euler_n3", "13"),
                ("k2_n3", "39"),
                ("defect_n3", "0"),
            ],
        ),
        entry(
            "holzapfel-eisenstein",
            holzapfel_eisenstein(),
            &[
                ("h_index", "-4"),
                ("ball_quotient", "true"),
                ("e_c", "-9"),
                ("defect_n4", "3"),
            ],
        ),
        entry(
            "product-1-1",
            product_fibers(1, 1).expect("constant parameters"),
            &[("h_index", "-2"), ("defect_n3", "4")],
        ),
        entry(
            "product-2-3",
            product_fibers(2, 3).expect("constant parameters"),
            &[("h_index", "-2"), ("h_sing", "-2")],
        ),
        entry(
            "diagonal",
            diagonal_config(),
            &[("h_index", "-3"), ("c_square", "6")],
        ),
        entry(
            "klein",
            klein(),
            &[
                ("h_sing", "-3"),
                ("h_index", "-3"),
                ("b1", "-3"),
                ("b2", "-3"),
            ],
        ),
        entry(
            "fermat18",
            fermat18(),
            &[("h_sing", "-36/13"), ("b1", "-37/13"), ("b2", "-36/13")],
        ),
        entry(
            "cn-9",
            cn_family(9).expect("constant parameters").0,
            &[("h_sing", "-572/157"), ("c_square", "96096")],
        ),
    ]
}

/// Looks up a catalog name, including the parametrized families
/// `product-M-N` and `cn-N`.
pub fn resolve(name: &str) -> Result<CatalogEntry> {
    if let Some(found) = entries().into_iter().find(|e| e.name == name) {
        return Ok(found);
    }
    if let Some(rest) = name.strip_prefix("product-") {
        let parts: Vec<&str> = rest.split('-').collect();
        if let [m, n] = parts[..] {
            if let (Ok(m), Ok(n)) = (m.parse::<u64>(), n.parse::<u64>()) {
                return Ok(entry(name, product_fibers(m, n)?, &[("h_index", "-2")]));
            }
        }
        return Err(Error::UnknownCatalogName(name.to_string()));
    }
    if let Some(rest) = name.strip_prefix("cn-") {
        if let Ok(n) = rest.parse::<u64>() {
            let h = cn_h_value(n)?.h.to_string();
            return Ok(entry(name, cn_family(n)?.0, &[("h_sing", h.as_str())]));
        }
        return Err(Error::UnknownCatalogName(name.to_string()));
    }
    Err(Error::UnknownCatalogName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::line_bounds;
    use crate::hindex::{h_at_sing, h_index};
    use crate::rat::ratio;

    #[test]
    fn every_entry_validates_cleanly() {
        for e in entries() {
            assert_eq!(
                e.arrangement.validate().unwrap(),
                vec![],
                "warnings for {}",
                e.name
            );
        }
        for n in [3, 6, 9, 12] {
            let (plane, on_z) = cn_family(n).unwrap();
            assert_eq!(plane.validate().unwrap(), vec![]);
            assert_eq!(on_z.validate().unwrap(), vec![]);
        }
    }

    #[test]
    fn dual_hesse_values() {
        let arr = dual_hesse();
        assert_eq!(h_at_sing(&arr).unwrap(), ratio(-9, 4));
        let lb = line_bounds(arr.d(), &arr.spectrum).unwrap();
        assert_eq!(lb.b2.rhs, ratio(-9, 4));
        assert_eq!(lb.h_sing, lb.b2.rhs);
    }

    #[test]
    fn cn_family_small_cases() {
        let (c3, h3) = cn_family(3).unwrap();
        assert_eq!(c3.d(), 8);
        assert_eq!(c3.spectrum, Spectrum::from_counts([(6, 12)]).unwrap());
        assert_eq!(c3.c_square_override, Some(BigInt::from(480)));
        assert!(!c3.ordinary);
        assert_eq!(h3.spectrum, Spectrum::from_counts([(3, 24)]).unwrap());

        let (c6, _) = cn_family(6).unwrap();
        assert_eq!(c6.d(), 44);
        assert_eq!(c6.spectrum.t(4), 297);
        assert_eq!(c6.spectrum.t(33), 12);

        let (c9, h9) = cn_family(9).unwrap();
        assert_eq!(c9.spectrum.t(4), 1872);
        assert_eq!(c9.spectrum.t(78), 12);
        assert_eq!(h9.spectrum.t(3), 312);

        assert!(matches!(cn_family(7), Err(Error::BadParameter(_))));
        assert!(matches!(cn_family(0), Err(Error::BadParameter(_))));
    }

    #[test]
    fn cn_h_values() {
        let v3 = cn_h_value(3).unwrap();
        assert_eq!(v3.c_bar_square, BigInt::from(48));
        assert_eq!(v3.s, BigInt::from(12));
        assert_eq!(v3.h, rat(4));

        let v9 = cn_h_value(9).unwrap();
        assert_eq!(v9.c_bar_square, BigInt::from(-6864));
        assert_eq!(v9.s, BigInt::from(1884));
        assert_eq!(v9.h, ratio(-572, 157));

        assert_eq!(cn_h_value(21).unwrap().h, ratio(-20732, 5257));
    }

    #[test]
    fn cn_override_reproduces_h_value() {
        // (C² − f₂)/f₀ computed from the stored override must equal the
        // direct formula C̄²/s for every n
        for n in [3u64, 9, 12, 21, 33] {
            let (plane, _) = cn_family(n).unwrap();
            let m = plane.moments();
            let direct = cn_h_value(n).unwrap();
            let via_override = Rat::new(plane.c_square().unwrap() - &m.f2, m.f0.clone());
            assert_eq!(via_override, direct.h);
            assert_eq!(direct.s, m.f0);
        }
    }

    #[test]
    fn cn_gap_closed_form() {
        // h + 4 = (24n² + 72)/((n²−3)(n²−9) + 36)
        for n in [3u64, 9, 21, 99] {
            let n2 = BigInt::from(n * n);
            let numer = BigInt::from(24) * &n2 + BigInt::from(72);
            let denom =
                (&n2 - BigInt::from(3)) * (&n2 - BigInt::from(9)) + BigInt::from(36);
            let gap = cn_h_value(n).unwrap().h + rat(4);
            assert_eq!(gap, Rat::new(numer, denom));
        }
    }

    #[test]
    fn cn_sweep_is_strictly_decreasing() {
        let rows = cn_sweep(9, 99, 3).unwrap();
        assert_eq!(rows.len(), 31);
        for pair in rows.windows(2) {
            assert!(pair[1].h < pair[0].h);
        }
        assert_eq!(rows[0].h, ratio(-572, 157));
    }

    #[test]
    fn cn_gap_envelope_holds_from_21_up() {
        // 25/n² bounds the gap exactly from n = 21 on; at 9..=18 the gap
        // is still above it (n⁴ − 372n² + 1575 changes sign between 18²
        // and 21²)
        for row in cn_sweep(21, 201, 3).unwrap() {
            assert!(row.gap < ratio(25u64, row.n * row.n), "n = {}", row.n);
        }
        for row in cn_sweep(9, 18, 3).unwrap() {
            assert!(row.gap > ratio(25u64, row.n * row.n), "n = {}", row.n);
        }
    }

    #[test]
    fn sweep_rejects_bad_ranges() {
        assert!(matches!(cn_sweep(7, 21, 3), Err(Error::BadParameter(_))));
        assert!(matches!(cn_sweep(9, 21, 2), Err(Error::BadParameter(_))));
        assert!(matches!(cn_sweep(21, 9, 3), Err(Error::BadParameter(_))));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn sweep_parallel_matches_sequential() {
        assert_eq!(
            cn_sweep_seq(9, 600, 3).unwrap(),
            cn_sweep_par(9, 600, 3).unwrap()
        );
    }

    #[test]
    fn resolve_fixed_and_parametrized_names() {
        assert_eq!(resolve("klein").unwrap().arrangement, klein());
        assert_eq!(resolve("product-4-5").unwrap().arrangement.d(), 9);
        assert_eq!(
            resolve("cn-12").unwrap().arrangement.spectrum.t(141),
            12
        );
        assert!(matches!(
            resolve("nonesuch"),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(resolve("cn-8"), Err(Error::BadParameter(_))));
        assert!(matches!(
            resolve("product-0-1"),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            resolve("cn-x"),
            Err(Error::UnknownCatalogName(_))
        ));
    }

    #[test]
    fn elliptic_entries_have_h_index_minus_f1_over_f0() {
        for e in entries() {
            let arr = &e.arrangement;
            if arr.surface == Surface::AbelianSurface && arr.is_elliptic() && arr.ordinary {
                let m = arr.moments();
                let expected = Rat::new(-m.f1.clone(), m.f0.clone());
                assert_eq!(h_index(arr).unwrap().value, expected, "{}", e.name);
                assert_eq!(h_at_sing(arr).unwrap(), expected, "{}", e.name);
            }
        }
    }
}
