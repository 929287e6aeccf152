//! Ring-spec files: a flat TOML subset with keys `p`, `vars`, `frobenius`,
//! `ideal`, `orientation`, `flavor`, `semigroup`, `shift`. Polynomials are
//! strings in the expression grammar; `p` inside them expands to the prime.

use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;

use prismforge_core::coeff::CoefficientDomain;
use prismforge_core::context::RingContext;
use prismforge_core::delta::FrobeniusLiftSpec;
use prismforge_core::groebner::Ideal;
use prismforge_core::parse_poly;
use prismforge_core::poly::Polynomial;
use prismforge_core::prism::{PrismFlavor, PrismSpec, SemigroupSpec};
use prismforge_core::Error as CoreError;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum FrobeniusField {
    Name(String),
    Images(BTreeMap<String, String>),
}

impl Default for FrobeniusField {
    fn default() -> Self {
        FrobeniusField::Name("monomial".to_string())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecFile {
    pub p: u64,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub frobenius: FrobeniusField,
    #[serde(default)]
    pub ideal: Vec<String>,
    pub orientation: Option<String>,
    pub flavor: Option<String>,
    pub semigroup: Option<Vec<Vec<u64>>>,
    #[serde(default)]
    pub shift: BTreeMap<String, String>,
}

/// Everything a command needs, decoded and validated.
pub struct LoadedSpec {
    pub prime: u64,
    pub ctx: RingContext,
    pub ideal: Ideal,
    pub lift: FrobeniusLiftSpec,
    pub orientation: Option<Polynomial>,
    pub flavor: PrismFlavor,
    pub semigroup: Option<SemigroupSpec>,
    pub shift: HashMap<String, Polynomial>,
}

impl RingSpecFile {
    pub fn parse(text: &str) -> anyhow::Result<RingSpecFile> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(&self) -> Result<LoadedSpec, CoreError> {
        let ctx = RingContext::new(self.vars.clone(), CoefficientDomain::IntegerZ, self.p)?;
        let gens = self
            .ideal
            .iter()
            .map(|s| parse_poly(s, &ctx))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = Ideal::new(&ctx, gens)?;
        let lift = match &self.frobenius {
            FrobeniusField::Name(name) if name == "monomial" => FrobeniusLiftSpec::monomial(self.p),
            FrobeniusField::Name(other) => {
                return Err(CoreError::Domain(format!(
                    "unknown frobenius kind `{other}` (expected \"monomial\" or an images table)"
                )))
            }
            FrobeniusField::Images(images) => {
                let mut parsed = BTreeMap::new();
                for (v, s) in images {
                    parsed.insert(v.clone(), parse_poly(s, &ctx)?);
                }
                FrobeniusLiftSpec::custom(self.p, parsed)
            }
        };
        lift.validate(&ctx)?;
        let orientation = self
            .orientation
            .as_ref()
            .map(|s| parse_poly(s, &ctx))
            .transpose()?;
        let flavor = match self.flavor.as_deref() {
            Some("zariskian") => PrismFlavor::Zariskian,
            Some("crystalline") => PrismFlavor::Crystalline,
            Some(other) => {
                return Err(CoreError::Domain(format!(
                    "unknown flavor `{other}` (expected \"zariskian\" or \"crystalline\")"
                )))
            }
            None => match &orientation {
                Some(d) if *d == Polynomial::constant_i64(&ctx, self.p as i64) => {
                    PrismFlavor::Crystalline
                }
                _ => PrismFlavor::Zariskian,
            },
        };
        let semigroup = self
            .semigroup
            .as_ref()
            .map(|m| SemigroupSpec::new(m.clone()))
            .transpose()?;
        let mut shift = HashMap::new();
        for (v, s) in &self.shift {
            if ctx.var_index(v).is_none() {
                return Err(CoreError::UnknownVariable(v.clone()));
            }
            shift.insert(v.clone(), parse_poly(s, &ctx)?);
        }
        Ok(LoadedSpec {
            prime: self.p,
            ctx,
            ideal,
            lift,
            orientation,
            flavor,
            semigroup,
            shift,
        })
    }
}

impl LoadedSpec {
    /// Assemble a prism spec; the orientation must be present.
    pub fn prism_spec(&self) -> Result<PrismSpec, CoreError> {
        let d = self
            .orientation
            .clone()
            .ok_or_else(|| CoreError::Domain("spec file has no orientation".into()))?;
        Ok(PrismSpec::new(
            self.prime,
            self.ctx.clone(),
            self.ideal.clone(),
            self.lift.clone(),
            d,
            self.flavor,
        )?
        .with_shift(self.shift.clone()))
    }
}

/// FNV-1a over the raw input, as a stable digest for reports.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_square_free_prism_file() {
        let text = r#"
p = 2
vars = ["X", "Y", "Z", "W"]
frobenius = "monomial"
ideal = ["X*Y"]
orientation = "p - Z*W"
flavor = "zariskian"
"#;
        let file = RingSpecFile::parse(text).unwrap();
        let spec = file.load().unwrap();
        assert_eq!(spec.prime, 2);
        assert_eq!(spec.ideal.generators().len(), 1);
        let prism = spec.prism_spec().unwrap();
        assert_eq!(prism.flavor, PrismFlavor::Zariskian);
    }

    #[test]
    fn images_table_and_shift() {
        let text = r#"
p = 2
vars = ["q"]
frobenius = { q = "q^2" }
ideal = []
orientation = "1 + q"
shift = { q = "1 + q" }
"#;
        let spec = RingSpecFile::parse(text).unwrap().load().unwrap();
        assert_eq!(spec.shift.len(), 1);
        assert!(spec.orientation.is_some());
    }

    #[test]
    fn crystalline_inferred_from_orientation_p() {
        let text = r#"
p = 3
vars = ["X"]
ideal = []
orientation = "p"
"#;
        let spec = RingSpecFile::parse(text).unwrap().load().unwrap();
        assert_eq!(spec.flavor, PrismFlavor::Crystalline);
    }

    #[test]
    fn rejects_bad_lift() {
        let text = r#"
p = 2
vars = ["X", "Y"]
frobenius = { X = "X^2 + Y" }
ideal = []
"#;
        let err = RingSpecFile::parse(text).unwrap().load();
        assert!(matches!(err, Err(CoreError::InvalidLift { .. })));
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b""), "cbf29ce484222325");
        assert_eq!(digest(b"abc"), digest(b"abc"));
        assert_ne!(digest(b"abc"), digest(b"abd"));
    }
}
