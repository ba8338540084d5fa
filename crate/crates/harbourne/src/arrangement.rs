//! The arrangement data model.
//!
//! An [`Arrangement`] is a purely combinatorial stand-in for a reduced curve
//! on a surface: component classes `(genus, self-intersection, count)`, a
//! singularity [`Spectrum`], an `ordinary` flag, and an optional
//! self-intersection override for the non-ordinary configurations whose
//! tangency data the generic formula cannot see. Identical components are
//! grouped under one class with a count; no formula here ever distinguishes
//! them.

use std::fmt;

use num::bigint::BigInt;
use num::Zero;

use crate::error::Error;
use crate::spectrum::{Moments, Spectrum};
use crate::Result;

/// Ambient surface. Only these two appear; everything abelian-specific
/// (adjunction with trivial canonical class, vanishing Euler number) is
/// keyed off this tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    ProjectivePlane,
    AbelianSurface,
}

impl Surface {
    pub fn as_str(self) -> &'static str {
        match self {
            Surface::ProjectivePlane => "P2",
            Surface::AbelianSurface => "abelian",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A class of `count` mutually indistinguishable irreducible components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentClass {
    pub genus: u32,
    pub self_intersection: i64,
    pub count: u64,
}

impl ComponentClass {
    pub fn new(genus: u32, self_intersection: i64, count: u64) -> Self {
        Self {
            genus,
            self_intersection,
            count,
        }
    }
}

/// A curve arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pub label: String,
    pub surface: Surface,
    pub ordinary: bool,
    pub components: Vec<ComponentClass>,
    pub spectrum: Spectrum,
    /// Exact `C²` for non-ordinary arrangements, where tangencies break the
    /// pairwise-intersection bookkeeping.
    pub c_square_override: Option<BigInt>,
}

/// Advisory findings from [`Arrangement::validate`]: the data is usable but
/// fails a consistency identity that holds for honest geometric input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// For a line arrangement in the plane, `Σ k(k−1) t_k` must equal
    /// `d(d−1)`; these are the two sides that disagreed.
    LinePairCount { expected: BigInt, actual: BigInt },
    /// `f₂ − f₁` of an ordinary arrangement must be even.
    OddPairCount { value: BigInt },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::LinePairCount { expected, actual } => write!(
                f,
                "line pair count mismatch: spectrum gives {actual}, d(d-1) = {expected}"
            ),
            Warning::OddPairCount { value } => {
                write!(f, "f2 - f1 = {value} is odd for an ordinary arrangement")
            }
        }
    }
}

impl Arrangement {
    pub fn new(
        label: impl Into<String>,
        surface: Surface,
        ordinary: bool,
        components: Vec<ComponentClass>,
        spectrum: Spectrum,
    ) -> Self {
        Self {
            label: label.into(),
            surface,
            ordinary,
            components,
            spectrum,
            c_square_override: None,
        }
    }

    /// Number of irreducible components, `d`.
    pub fn d(&self) -> u64 {
        self.components.iter().map(|c| c.count).sum()
    }

    /// `g − 1 = Σ count·(gᵢ − 1)`, the arrangement-level genus convention.
    pub fn genus_minus_one(&self) -> BigInt {
        self.components
            .iter()
            .map(|c| BigInt::from(c.count) * BigInt::from(i64::from(c.genus) - 1))
            .sum()
    }

    /// `Σ Cᵢ²` over all components, counted with multiplicity.
    pub fn sum_self(&self) -> BigInt {
        self.components
            .iter()
            .map(|c| BigInt::from(c.count) * BigInt::from(c.self_intersection))
            .sum()
    }

    pub fn moments(&self) -> Moments {
        self.spectrum.moments()
    }

    /// True when every component has genus 1.
    pub fn is_elliptic(&self) -> bool {
        self.components.iter().all(|c| c.genus == 1)
    }

    /// True when every component is a line in the plane.
    pub fn is_line_arrangement(&self) -> bool {
        self.surface == Surface::ProjectivePlane
            && self
                .components
                .iter()
                .all(|c| c.genus == 0 && c.self_intersection == 1)
    }

    /// `C² = Σ Cᵢ² + f₂ − f₁`, or the stored override for non-ordinary
    /// data. Without either, the pairwise intersections are undetermined.
    pub fn c_square(&self) -> Result<BigInt> {
        if let Some(c2) = &self.c_square_override {
            return Ok(c2.clone());
        }
        if !self.ordinary {
            return Err(Error::NotOrdinary);
        }
        let m = self.moments();
        Ok(self.sum_self() + m.f2 - m.f1)
    }

    /// The three Euler numbers of an ordinary arrangement on an abelian
    /// surface: e(C), e(C ∖ Sing C), and e(A ∖ C).
    pub fn euler_numbers(&self) -> Result<EulerNumbers> {
        if self.surface != Surface::AbelianSurface {
            return Err(Error::WrongSurface {
                expected: "abelian",
            });
        }
        if !self.ordinary {
            return Err(Error::NotOrdinary);
        }
        let m = self.moments();
        let two_g_minus_two = BigInt::from(2) * self.genus_minus_one();
        let curve = -&two_g_minus_two + &m.f0 - &m.f1;
        let curve_minus_sing = -&two_g_minus_two - &m.f1;
        let complement = -curve.clone();
        Ok(EulerNumbers {
            curve,
            curve_minus_sing,
            complement,
        })
    }

    /// Checks the structural invariants. Violations of hard invariants are
    /// errors; identities that honest geometric data would satisfy but
    /// stored data may not produce warnings.
    pub fn validate(&self) -> Result<Vec<Warning>> {
        if self.components.is_empty() {
            return Err(Error::BadInput(
                "arrangement must have at least one component".into(),
            ));
        }
        for c in &self.components {
            if c.count == 0 {
                return Err(Error::BadInput(
                    "component class has count 0".into(),
                ));
            }
            if self.surface == Surface::AbelianSurface {
                let adjunction = 2 * i64::from(c.genus) - 2;
                if c.self_intersection != adjunction {
                    return Err(Error::BadInput(format!(
                        "on an abelian surface a genus-{} component must have \
                         self-intersection {}, got {}",
                        c.genus, adjunction, c.self_intersection
                    )));
                }
            }
        }
        if self.c_square_override.is_some() && self.ordinary {
            return Err(Error::BadInput(
                "c_square_override is only meaningful when ordinary = false".into(),
            ));
        }

        let mut warnings = Vec::new();
        if self.ordinary {
            let m = self.moments();
            let pair_sum = &m.f2 - &m.f1;
            if (&pair_sum % BigInt::from(2)) != BigInt::zero() {
                warnings.push(Warning::OddPairCount { value: pair_sum });
            } else if self.is_line_arrangement() {
                let d = BigInt::from(self.d());
                let expected = &d * (&d - BigInt::from(1));
                if pair_sum != expected {
                    warnings.push(Warning::LinePairCount {
                        expected,
                        actual: pair_sum,
                    });
                }
            }
        }
        Ok(warnings)
    }

    /// Pullback along a finite surjective map of the stated degree: all
    /// linear data (point counts, component counts, `C²`) scales by the
    /// degree. The label is preserved so that degree 1 is the identity.
    pub fn pullback(&self, degree: u64) -> Result<Arrangement> {
        if degree == 0 {
            return Err(Error::BadParameter("pullback degree must be >= 1".into()));
        }
        let components = self
            .components
            .iter()
            .map(|c| ComponentClass {
                count: c.count * degree,
                ..*c
            })
            .collect();
        Ok(Arrangement {
            label: self.label.clone(),
            surface: self.surface,
            ordinary: self.ordinary,
            components,
            spectrum: self.spectrum.scaled(degree),
            c_square_override: self
                .c_square_override
                .as_ref()
                .map(|c2| c2 * BigInt::from(degree)),
        })
    }

    /// The same data transformation as [`pullback`](Self::pullback) but
    /// restricted to abelian surfaces, where it is realized by an isogeny.
    pub fn isogeny_scale(&self, m: u64) -> Result<Arrangement> {
        if self.surface != Surface::AbelianSurface {
            return Err(Error::WrongSurface {
                expected: "abelian",
            });
        }
        self.pullback(m)
    }
}

/// Euler numbers of the curve, its smooth locus, and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerNumbers {
    pub curve: BigInt,
    pub curve_minus_sing: BigInt,
    pub complement: BigInt,
}
