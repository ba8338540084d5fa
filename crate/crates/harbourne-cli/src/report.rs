//! Command implementations: analyze, catalog, sweep-cn, cover, check.
//!
//! Every command resolves its target (a `catalog:NAME` reference or a
//! document path), computes exact quantities through the core crate, and
//! renders through [`crate::format`]. The analyze record has one fixed
//! field order for all targets; fields whose hypotheses fail hold `-`, so
//! CSV columns line up across arrangements.

use num::bigint::BigInt;
use num::ToPrimitive;

use harbourne::arrangement::{EulerNumbers, Warning};
use harbourne::rat::decimal4;
use harbourne::{bounds, catalog, cover, hindex};
use harbourne::{Arrangement, BoundResult, Error, Rat, Surface};

use crate::document::{self, DocumentError};
use crate::format::{record, table, Field, Format};

/// CLI-level failure, split by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Exit code 2: bad usage, unresolvable target, malformed document.
    Usage(String),
    /// Exit code 1: valid request whose data fails validation or checks.
    Failure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCatalogName(_) | Error::BadParameter(_) | Error::BadOrder(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Parse(_) => CliError::Usage(e.to_string()),
            DocumentError::Validation(_) => CliError::Failure(e.to_string()),
        }
    }
}

/// A resolved target: the arrangement, its catalog claims if any, and the
/// soft validation warnings.
pub struct Target {
    pub arrangement: Arrangement,
    pub expected: Option<Vec<(String, String)>>,
    pub warnings: Vec<Warning>,
}

/// Resolves `catalog:NAME` or a document path.
pub fn resolve_target(spec: &str) -> Result<Target, CliError> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let entry = catalog::resolve(name)?;
        let warnings = entry.arrangement.validate().map_err(CliError::from)?;
        return Ok(Target {
            arrangement: entry.arrangement,
            expected: Some(entry.expected),
            warnings,
        });
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Usage(format!("cannot read {spec}: {e}")))?;
    let (arrangement, warnings) = document::parse(&text)?;
    Ok(Target {
        arrangement,
        expected: None,
        warnings,
    })
}

/// `H(C, Sing C)` through the ordinary pipeline, or from the stored exact
/// `C²` when the arrangement is non-ordinary but carries an override (the
/// blow-up bookkeeping `C̄² = C² − Σ m²` needs nothing else).
fn h_sing_value(arr: &Arrangement) -> harbourne::Result<Rat> {
    if arr.ordinary {
        return hindex::h_at_sing(arr);
    }
    if arr.c_square_override.is_none() {
        return Err(Error::NotOrdinary);
    }
    let m = arr.moments();
    if m.f0 == BigInt::from(0) {
        return Err(Error::NoSingularities);
    }
    Ok(Rat::new(arr.c_square()? - m.f2, m.f0))
}

/// Summed arrangement genus `g = 1 + Σ count·(gᵢ − 1)`.
fn arrangement_genus(arr: &Arrangement) -> BigInt {
    arr.genus_minus_one() + BigInt::from(1)
}

/// Evaluates a named quantity to its exact display string. These keys are
/// the vocabulary of the catalog's expected-value claims.
pub fn quantity(arr: &Arrangement, key: &str) -> harbourne::Result<String> {
    if let Some(n) = key.strip_prefix("defect_n") {
        let n: u32 = n
            .parse()
            .map_err(|_| Error::BadInput(format!("bad quantity key {key}")))?;
        return Ok(cover::my_defect(arr, n)?.to_string());
    }
    if let Some(n) = key.strip_prefix("euler_n") {
        let n: u32 = n
            .parse()
            .map_err(|_| Error::BadInput(format!("bad quantity key {key}")))?;
        return Ok(cover::euler_cover(arr, n)?.to_string());
    }
    if let Some(n) = key.strip_prefix("k2_n") {
        let n: u32 = n
            .parse()
            .map_err(|_| Error::BadInput(format!("bad quantity key {key}")))?;
        return Ok(cover::canonical_square_cover(arr, n)?.to_string());
    }
    match key {
        "h_sing" => Ok(h_sing_value(arr)?.to_string()),
        "h_index" => Ok(hindex::h_index(arr)?.value.to_string()),
        "c_square" => Ok(arr.c_square()?.to_string()),
        "e_c" => Ok(arr.euler_numbers()?.curve.to_string()),
        "e_c_minus_sing" => Ok(arr.euler_numbers()?.curve_minus_sing.to_string()),
        "e_complement" => Ok(arr.euler_numbers()?.complement.to_string()),
        "ball_quotient" => Ok(cover::ball_quotient_check(arr)?
            .is_ball_quotient
            .to_string()),
        "b1" | "b2" => {
            if !arr.is_line_arrangement() {
                return Err(Error::BadInput(
                    "B1/B2 are bounds for line arrangements".into(),
                ));
            }
            let lb = bounds::line_bounds(arr.d(), &arr.spectrum)?;
            Ok(if key == "b1" { lb.b1.rhs } else { lb.b2.rhs }.to_string())
        }
        _ => Err(Error::BadInput(format!("unknown quantity {key}"))),
    }
}

const ABSENT: &str = "-";

fn exact_field(key: &'static str, value: Option<String>) -> Field {
    Field::plain(key, value.unwrap_or_else(|| ABSENT.to_string()))
}

fn rat_field(key: &'static str, value: Option<&Rat>) -> Field {
    match value {
        Some(v) => Field::with_decimal(key, v.to_string(), decimal4(v)),
        None => Field::plain(key, ABSENT),
    }
}

fn bound_fields(
    prefix: &'static str,
    keys: (&'static str, &'static str, &'static str),
    b: Option<&BoundResult>,
) -> Vec<Field> {
    let _ = prefix;
    match b {
        Some(b) => vec![
            rat_field(keys.0, Some(&b.lhs)),
            rat_field(keys.1, Some(&b.rhs)),
            Field::plain(keys.2, b.holds.to_string()),
        ],
        None => vec![
            Field::plain(keys.0, ABSENT),
            Field::plain(keys.1, ABSENT),
            Field::plain(keys.2, ABSENT),
        ],
    }
}

/// Assembles the analyze record for one arrangement.
pub fn analyze_fields(arr: &Arrangement, warnings: &[Warning]) -> Vec<Field> {
    let m = arr.moments();
    let c_square = arr.c_square().ok();
    let euler: Option<EulerNumbers> = arr.euler_numbers().ok();
    let h_sing = h_sing_value(arr).ok();
    let h_index = hindex::h_index(arr).ok();

    let g_i64 = arrangement_genus(arr).to_i64();
    let is_abelian = arr.surface == Surface::AbelianSurface;
    let elliptic = match (is_abelian, g_i64) {
        (true, Some(g)) => bounds::elliptic_bound(&arr.spectrum, g).ok(),
        _ => None,
    };
    let genus_b = if is_abelian {
        bounds::genus_bound(arr).ok()
    } else {
        None
    };
    let spectrum_b = match (is_abelian, g_i64) {
        (true, Some(g)) => Some(bounds::abelian_spectrum_ineq(&arr.spectrum, g)),
        _ => None,
    };

    let line = if arr.is_line_arrangement() {
        bounds::line_bounds(arr.d(), &arr.spectrum).ok()
    } else {
        None
    };
    let hirz_pair = if arr.is_line_arrangement() {
        Some(bounds::hirzebruch_line_checks(arr.d(), &arr.spectrum))
    } else {
        None
    };
    let bq = cover::ball_quotient_check(arr).ok();

    let mut fields = vec![
        Field::plain("label", arr.label.clone()),
        Field::plain("surface", arr.surface.as_str()),
        Field::plain("d", arr.d().to_string()),
        Field::plain("genus", arrangement_genus(arr).to_string()),
        Field::plain("f0", m.f0.to_string()),
        Field::plain("f1", m.f1.to_string()),
        Field::plain("f2", m.f2.to_string()),
        exact_field("c_square", c_square.map(|v| v.to_string())),
        exact_field("e_curve", euler.as_ref().map(|e| e.curve.to_string())),
        exact_field(
            "e_curve_minus_sing",
            euler.as_ref().map(|e| e.curve_minus_sing.to_string()),
        ),
        exact_field(
            "e_complement",
            euler.as_ref().map(|e| e.complement.to_string()),
        ),
        rat_field("h_sing", h_sing.as_ref()),
        rat_field("h_index", h_index.as_ref().map(|h| &h.value)),
        exact_field(
            "witness",
            h_index.as_ref().map(|h| h.witness.to_string()),
        ),
        exact_field("s", h_index.as_ref().map(|h| h.witness.size().to_string())),
    ];

    fields.extend(bound_fields(
        "elliptic",
        ("elliptic_lhs", "elliptic_rhs", "elliptic_holds"),
        elliptic.as_ref(),
    ));
    fields.extend(bound_fields(
        "genus",
        ("genus_lhs", "genus_rhs", "genus_holds"),
        genus_b.as_ref(),
    ));
    fields.extend(bound_fields(
        "spectrum",
        ("spectrum_lhs", "spectrum_rhs", "spectrum_holds"),
        spectrum_b.as_ref(),
    ));

    fields.push(rat_field("b1", line.as_ref().map(|l| &l.b1.rhs)));
    fields.push(exact_field(
        "b1_holds",
        line.as_ref().map(|l| l.b1.holds.to_string()),
    ));
    fields.push(rat_field("b2", line.as_ref().map(|l| &l.b2.rhs)));
    fields.push(exact_field(
        "b2_holds",
        line.as_ref().map(|l| l.b2.holds.to_string()),
    ));

    let (bauer, hirz) = match &hirz_pair {
        Some((b, h)) => (Some(b), Some(h)),
        None => (None, None),
    };
    fields.push(rat_field("bauer_lhs", bauer.map(|b| &b.lhs)));
    fields.push(rat_field("bauer_rhs", bauer.map(|b| &b.rhs)));
    fields.push(exact_field(
        "bauer_holds",
        bauer.map(|b| b.holds.to_string()),
    ));
    fields.push(exact_field(
        "bauer_applicable",
        bauer.map(|b| b.applicable.to_string()),
    ));
    fields.push(rat_field("hirzebruch_lhs", hirz.map(|b| &b.lhs)));
    fields.push(rat_field("hirzebruch_rhs", hirz.map(|b| &b.rhs)));
    fields.push(exact_field(
        "hirzebruch_holds",
        hirz.map(|b| b.holds.to_string()),
    ));
    fields.push(exact_field(
        "hirzebruch_applicable",
        hirz.map(|b| b.applicable.to_string()),
    ));

    fields.push(exact_field(
        "ball_quotient",
        bq.as_ref().map(|r| r.is_ball_quotient.to_string()),
    ));
    fields.push(exact_field(
        "log_ck_square",
        bq.as_ref().map(|r| r.log_ck_square.to_string()),
    ));
    fields.push(exact_field(
        "log_euler",
        bq.as_ref().map(|r| r.log_euler.to_string()),
    ));

    let warning_text = if warnings.is_empty() {
        ABSENT.to_string()
    } else {
        warnings
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    };
    fields.push(Field::plain("warnings", warning_text));
    fields
}

pub fn analyze_command(target: &str, format: Format) -> Result<String, CliError> {
    let t = resolve_target(target)?;
    Ok(record(format, &analyze_fields(&t.arrangement, &t.warnings)))
}

pub fn catalog_command(format: Format) -> Result<String, CliError> {
    let rows: Vec<Vec<String>> = catalog::entries()
        .into_iter()
        .map(|e| {
            let m = e.arrangement.moments();
            vec![
                e.name,
                e.arrangement.surface.as_str().to_string(),
                e.arrangement.d().to_string(),
                m.f0.to_string(),
            ]
        })
        .collect();
    Ok(table(format, &["name", "surface", "d", "f0"], &rows))
}

pub fn sweep_command(from: u64, to: u64, step: u64, format: Format) -> Result<String, CliError> {
    let rows = catalog::cn_sweep(from, to, step)?;
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.c_bar_square.to_string(),
                r.s.to_string(),
                r.h.to_string(),
                decimal4(&r.h),
                r.gap.to_string(),
                decimal4(&r.gap),
            ]
        })
        .collect();
    Ok(table(
        format,
        &["n", "c_bar_square", "s", "h", "h_decimal", "gap", "gap_decimal"],
        &cells,
    ))
}

pub fn cover_command(
    target: &str,
    n_min: u32,
    n_max: u32,
    format: Format,
) -> Result<String, CliError> {
    if !(2..=50).contains(&n_min) || !(2..=50).contains(&n_max) || n_min > n_max {
        return Err(CliError::Usage(format!(
            "cover orders must satisfy 2 <= n_min <= n_max <= 50, got {n_min}..{n_max}"
        )));
    }
    let t = resolve_target(target)?;
    let rows = cover::cover_rows(&t.arrangement, n_min, n_max)?;
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.invariants.n.to_string(),
                r.invariants.euler_norm.to_string(),
                r.invariants.k2_norm.to_string(),
                r.invariants.defect_norm.to_string(),
                r.bq_defect
                    .as_ref()
                    .map_or(ABSENT.to_string(), |v| v.to_string()),
            ]
        })
        .collect();
    Ok(table(
        format,
        &["n", "euler", "k2", "defect", "bq_defect"],
        &cells,
    ))
}

/// One line of check output.
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckLine {
    CheckLine {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

/// Runs every invariant applicable to the arrangement, plus the expected
/// claims when the target came from the catalog.
pub fn run_checks(
    arr: &Arrangement,
    warnings: &[Warning],
    expected: Option<&[(String, String)]>,
) -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let m = arr.moments();
    let has_points = m.f0 > BigInt::from(0);
    let is_abelian = arr.surface == Surface::AbelianSurface;
    let covers_apply = is_abelian && arr.ordinary && arr.d() >= 2;
    let is_catalog = expected.is_some();

    if arr.ordinary && arr.is_line_arrangement() {
        lines.push(check(
            "pair-count",
            warnings.is_empty(),
            if warnings.is_empty() {
                "spectrum pair count matches d(d-1)".to_string()
            } else {
                warnings
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join("; ")
            },
        ));
    }

    let h_sing = h_sing_value(arr).ok();
    let h_index = if arr.ordinary && has_points {
        hindex::h_index(arr).ok()
    } else {
        None
    };

    if let (Some(hs), Some(hi)) = (&h_sing, &h_index) {
        lines.push(check(
            "h-index-vs-h-sing",
            hi.value <= *hs,
            format!("h_index {} <= h_sing {}", hi.value, hs),
        ));
    }

    if h_sing.is_some() || h_index.is_some() {
        let mut pass = true;
        let mut detail = String::from("h values invariant for degrees 2..7");
        for degree in 2..=7u64 {
            let pulled = match arr.pullback(degree) {
                Ok(p) => p,
                Err(e) => {
                    pass = false;
                    detail = e.to_string();
                    break;
                }
            };
            if let Some(hs) = &h_sing {
                if h_sing_value(&pulled).ok().as_ref() != Some(hs) {
                    pass = false;
                    detail = format!("h_sing changed under pullback of degree {degree}");
                    break;
                }
            }
            if let Some(hi) = &h_index {
                if hindex::h_index(&pulled).ok().map(|h| h.value) != Some(hi.value.clone()) {
                    pass = false;
                    detail = format!("h_index changed under pullback of degree {degree}");
                    break;
                }
            }
        }
        lines.push(check("pullback-invariance", pass, detail));
    }

    if let Ok(e) = arr.euler_numbers() {
        let sum = &e.curve + &e.complement;
        lines.push(check(
            "euler-consistency",
            sum == BigInt::from(0),
            format!("e_c {} + e_complement {} = {}", e.curve, e.complement, sum),
        ));
    }

    if covers_apply {
        let mut pass = true;
        let mut detail = String::from("defect = 3*euler - k2 for n = 2..10");
        for n in 2..=10 {
            let lhs = cover::my_defect(arr, n).expect("gated above");
            let rhs = harbourne::rat::rat(3) * cover::euler_cover(arr, n).expect("gated above")
                - cover::canonical_square_cover(arr, n).expect("gated above");
            if lhs != rhs {
                pass = false;
                detail = format!("defect {} != 3*euler - k2 {} at n = {n}", lhs, rhs);
                break;
            }
        }
        lines.push(check("defect-identity", pass, detail));

        if is_catalog {
            let mut pass = true;
            let mut detail = String::from("defect >= 0 for n = 2..10");
            for n in 2..=10 {
                let v = cover::my_defect(arr, n).expect("gated above");
                if v < harbourne::rat::rat(0) {
                    pass = false;
                    detail = format!("defect {} < 0 at n = {n}", v);
                    break;
                }
            }
            lines.push(check("defect-nonnegative", pass, detail));
        }

        for n in [2u32, 3] {
            let r = cover::refined_defect_check(arr, n).expect("gated above");
            lines.push(check(
                format!("refined-defect-n{n}"),
                r.holds,
                format!("defect {} >= rhs {}", r.defect, r.rhs),
            ));
        }
    }

    if is_abelian && arr.ordinary && arr.is_elliptic() && has_points {
        let expected_h = Rat::new(-m.f1.clone(), m.f0.clone());
        if let Some(hi) = &h_index {
            lines.push(check(
                "elliptic-h-identity",
                hi.value == expected_h,
                format!("h_index {} = -f1/f0 {}", hi.value, expected_h),
            ));
        }
        let b = bounds::elliptic_bound(&arr.spectrum, 1).expect("f0 > 0");
        lines.push(check(
            "elliptic-bound",
            b.holds,
            format!("{} >= {}", b.lhs, b.rhs),
        ));
    }

    if is_abelian && arr.ordinary && has_points {
        if let Some(g) = arrangement_genus(arr).to_i64() {
            let b = bounds::genus_bound(arr).expect("gates checked");
            lines.push(check(
                "genus-bound",
                b.holds,
                format!("{} >= {}", b.lhs, b.rhs),
            ));
            let s = bounds::abelian_spectrum_ineq(&arr.spectrum, g);
            lines.push(check(
                "spectrum-inequality",
                s.holds,
                format!("{} >= {}", s.lhs, s.rhs),
            ));
        }
    }

    if let Ok(bq) = cover::ball_quotient_check(arr) {
        let pass = bq.defect_violations.is_empty();
        lines.push(check(
            "ball-quotient-defect",
            pass,
            if bq.is_ball_quotient {
                format!(
                    "defect agrees with f0*(n-3)^2 for n = 2..10 (f0 = {})",
                    bq.log_euler
                )
            } else {
                "not a ball-quotient spectrum; nothing to verify".to_string()
            },
        ));
    }

    if arr.is_line_arrangement() && has_points {
        let lb = bounds::line_bounds(arr.d(), &arr.spectrum).expect("f0 > 0");
        lines.push(check(
            "line-bounds",
            lb.b1.holds && lb.b2.holds,
            format!(
                "h_sing {} >= B2 {} >= B1 {}: {}",
                lb.h_sing, lb.b2.rhs, lb.b1.rhs, lb.b2_ge_b1
            ),
        ));
        let (bauer, hirz) = bounds::hirzebruch_line_checks(arr.d(), &arr.spectrum);
        if hirz.applicable {
            lines.push(check(
                "hirzebruch",
                hirz.holds,
                format!("{} >= {}", hirz.lhs, hirz.rhs),
            ));
            if hirz.holds {
                lines.push(check(
                    "b2-sharper",
                    lb.b2_ge_b1,
                    format!("B2 {} >= B1 {}", lb.b2.rhs, lb.b1.rhs),
                ));
            }
        }
        if bauer.applicable {
            lines.push(check(
                "bauer",
                bauer.holds,
                format!("{} >= {}", bauer.lhs, bauer.rhs),
            ));
        }
    }

    if let Some(claims) = expected {
        for (key, claimed) in claims {
            match quantity(arr, key) {
                Ok(computed) => lines.push(check(
                    format!("expected:{key}"),
                    &computed == claimed,
                    format!("computed {computed}, claimed {claimed}"),
                )),
                Err(e) => lines.push(check(
                    format!("expected:{key}"),
                    false,
                    format!("cannot evaluate: {e}"),
                )),
            }
        }
    }

    lines
}

pub fn check_command(target: &str, format: Format) -> Result<(String, bool), CliError> {
    let t = resolve_target(target)?;
    let lines = run_checks(&t.arrangement, &t.warnings, t.expected.as_deref());
    let failed = lines.iter().filter(|l| !l.pass).count();
    let rows: Vec<Vec<String>> = lines
        .iter()
        .map(|l| {
            vec![
                l.name.clone(),
                if l.pass { "PASS" } else { "FAIL" }.to_string(),
                l.detail.clone(),
            ]
        })
        .collect();
    let mut out = table(format, &["check", "result", "detail"], &rows);
    if format == Format::Human {
        out.push_str(&format!(
            "summary: {} checks, {} failed\n",
            lines.len(),
            failed
        ));
    }
    Ok((out, failed == 0))
}
