//! Catalogue of worked example matrices, embedded at compile time.
//!
//! Each record names a matrix file, a function `φ`, the expected good-pair
//! verdict and, optionally, the expected universality and Newton order.

use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactalg::RMatrix;
use crate::goodpair::{
    float_good_pair_check, is_good_pair_log, is_good_pair_monomial, CMatrix, Phi,
};
use crate::invert::{newton_order, NewtonOptions};
use crate::universal::is_universal;

const CATALOG: &str = include_str!("../fixtures/catalog.toml");

macro_rules! files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name)))),*]
    };
}

const FILES: &[(&str, &str)] = files![
    "all_homogeneities_dim4_deg3.mat",
    "complex_u_matrix.mat",
    "cross_support_deg2.mat",
    "cross_support_deg3.mat",
    "idempotent_centrosymmetric_dim4.mat",
    "identity_dim2.mat",
    "log_dim2_circulant.mat",
    "log_dim2_rows.mat",
    "log_dim3_circulant.mat",
    "log_dim3_circulant_squared.mat",
    "log_dim4_circulant_a.cmat",
    "log_dim4_circulant_b.cmat",
    "log_dim4_family.mat",
    "log_dim5_circulant_long.cmat",
    "log_dim5_circulant_sqrt5.cmat",
    "log_kronecker_negative.mat",
    "numeric_universal_ordered.mat",
    "numeric_universal_unordered.mat",
    "rank2_family_dim6_deg3.mat",
    "rank2_family_dim8_deg5.mat",
    "rational_parametrization_dim4_deg2.mat",
    "universal_dim2_equal_rows.mat",
    "universal_dim2_lower.mat",
    "universal_dim2_upper.mat",
    "universal_dim3_block.mat",
    "universal_dim3_equal_rows.mat",
    "universal_dim3_full.mat",
    "universal_dim3_triangular.mat",
    "universal_dim4_equal_rows.mat",
    "universal_dim5.mat",
];

/// Tolerance on `|J − 1|` for the floating checks.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRecord {
    pub name: String,
    pub file: String,
    pub phi: Phi,
    /// Expected good-pair verdict for `phi`.
    pub good: bool,
    pub universal: Option<bool>,
    pub newton_order: Option<usize>,
}

#[derive(Deserialize)]
struct RawCatalog {
    fixture: Vec<RawRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    name: String,
    file: String,
    phi: String,
    good: bool,
    universal: Option<bool>,
    newton_order: Option<usize>,
}

/// A fixture matrix: rational, or complex for the irrational circulants.
#[derive(Debug, Clone, PartialEq)]
pub enum FixtureMatrix {
    Rational(RMatrix),
    Complex(CMatrix),
}

/// Contents of an embedded fixture file.
pub fn fixture_text(file: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == file).map(|(_, t)| *t)
}

/// Parses a catalogue, checking that every `phi` parses and every file exists.
pub fn parse_catalog(text: &str) -> Result<Vec<FixtureRecord>> {
    let raw: RawCatalog = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.fixture
        .into_iter()
        .map(|r| {
            if fixture_text(&r.file).is_none() {
                return Err(Error::Parse(format!(
                    "fixture {}: unknown file {}",
                    r.name, r.file
                )));
            }
            Ok(FixtureRecord {
                phi: Phi::from_str(&r.phi)?,
                name: r.name,
                file: r.file,
                good: r.good,
                universal: r.universal,
                newton_order: r.newton_order,
            })
        })
        .collect()
}

/// The embedded catalogue.
pub fn catalog() -> Result<Vec<FixtureRecord>> {
    parse_catalog(CATALOG)
}

/// Looks a record up by name.
pub fn find(name: &str) -> Result<FixtureRecord> {
    catalog()?
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::Invariant(format!("no fixture named {name}")))
}

pub fn load(record: &FixtureRecord) -> Result<FixtureMatrix> {
    let text = fixture_text(&record.file)
        .ok_or_else(|| Error::Parse(format!("unknown file {}", record.file)))?;
    if record.file.ends_with(".cmat") {
        Ok(FixtureMatrix::Complex(text.parse()?))
    } else {
        Ok(FixtureMatrix::Rational(text.parse()?))
    }
}

/// Loads a rational fixture by name.
pub fn matrix(name: &str) -> Result<RMatrix> {
    match load(&find(name)?)? {
        FixtureMatrix::Rational(a) => Ok(a),
        FixtureMatrix::Complex(_) => Err(Error::Invariant(format!("fixture {name} is complex"))),
    }
}

/// Whether a filter selects a record: a substring of the name, or the kind
/// of `φ` (`pow`, `log`, `exp`).
pub fn matches(record: &FixtureRecord, filter: &str) -> bool {
    let kind = match record.phi {
        Phi::Pow(_) => "pow",
        Phi::Log => "log",
        Phi::Exp => "exp",
    };
    filter == kind || record.name.contains(filter)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureOutcome {
    pub name: String,
    /// `(check, expected, observed)` for every check performed.
    pub checks: Vec<(String, String, String)>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, e, o)| e == o)
    }
}

fn float_good(a: &CMatrix, phi: Phi, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(float_good_pair_check(a, phi, 10, &mut rng)? < FLOAT_TOLERANCE)
}

/// Runs every check a record asks for. Errors are reported as observed values.
pub fn run_fixture(record: &FixtureRecord) -> FixtureOutcome {
    let mut checks = Vec::new();
    let mut push = |what: &str, expected: String, observed: Result<String>| {
        checks.push((
            what.to_string(),
            expected,
            observed.unwrap_or_else(|e| format!("error: {e}")),
        ));
    };
    let yes_no = |b: bool| {
        if b {
            "yes".to_string()
        } else {
            "no".to_string()
        }
    };
    match load(record) {
        Err(e) => push("load", "ok".into(), Err(e)),
        Ok(FixtureMatrix::Complex(c)) => {
            push(
                &format!("good-pair({})", record.phi),
                yes_no(record.good),
                float_good(&c, record.phi, 1).map(yes_no),
            );
        }
        Ok(FixtureMatrix::Rational(a)) => {
            let good = match record.phi {
                Phi::Pow(d) => is_good_pair_monomial(&a, d),
                Phi::Log => is_good_pair_log(&a),
                Phi::Exp => float_good(&CMatrix::from_rational(&a), Phi::Exp, 1),
            };
            push(
                &format!("good-pair({})", record.phi),
                yes_no(record.good),
                good.map(yes_no),
            );
            if let Some(u) = record.universal {
                push("universal", yes_no(u), Ok(yes_no(is_universal(&a))));
            }
            if let (Some(k), Phi::Pow(d)) = (record.newton_order, record.phi) {
                let observed = newton_order(&a, d, NewtonOptions::default(), 3, 1).and_then(|ev| {
                    if ev.verified() {
                        Ok(ev.order().to_string())
                    } else {
                        Err(Error::Invariant("Newton iterate fails to invert".into()))
                    }
                });
                push("newton order", k.to_string(), observed);
            }
        }
    }
    FixtureOutcome {
        name: record.name.clone(),
        checks,
    }
}

/// Runs the selected records in parallel; outcomes keep catalogue order.
pub fn run_catalog(records: &[FixtureRecord]) -> Vec<FixtureOutcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = records
            .iter()
            .map(|r| s.spawn(move || run_fixture(r)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fixture thread panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_parses_and_every_file_is_listed() {
        let records = catalog().unwrap();
        assert!(records.len() >= 30);
        for (file, _) in FILES {
            assert!(records.iter().any(|r| &r.file == file), "{file} unused");
        }
        for r in &records {
            load(r).unwrap();
        }
    }

    #[test]
    fn filters() {
        let records = catalog().unwrap();
        let logs: Vec<_> = records.iter().filter(|r| matches(r, "log")).collect();
        assert!(logs
            .iter()
            .all(|r| r.phi == Phi::Log || r.name.contains("log")));
        assert!(!records.iter().any(|r| matches(r, "no-such-fixture")));
    }

    #[test]
    fn bad_catalogue_entries_are_rejected() {
        let missing =
            "[[fixture]]\nname = \"x\"\nfile = \"nope.mat\"\nphi = \"log\"\ngood = true\n";
        assert!(parse_catalog(missing).is_err());
        let bad_phi =
            "[[fixture]]\nname = \"x\"\nfile = \"identity_dim2.mat\"\nphi = \"sin\"\ngood = true\n";
        assert!(parse_catalog(bad_phi).is_err());
    }
}
