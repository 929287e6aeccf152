//! Ring contexts: an ordered variable list, a coefficient domain, the ambient
//! prime, and a presentation level for fractional-exponent displays.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{is_prime_u64, CoefficientDomain};
use crate::error::{Error, Result};

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ContextData {
    variables: Vec<String>,
    domain: CoefficientDomain,
    prime: u64,
    /// Exponents carry an implicit denominator `prime^level`.
    level: u32,
}

/// Shared, immutable ring context. Cloning is cheap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    data: Arc<ContextData>,
}

impl RingContext {
    pub fn new(
        variables: Vec<String>,
        domain: CoefficientDomain,
        prime: u64,
    ) -> Result<RingContext> {
        Self::with_level(variables, domain, prime, 0)
    }

    pub fn with_level(
        variables: Vec<String>,
        domain: CoefficientDomain,
        prime: u64,
        level: u32,
    ) -> Result<RingContext> {
        if !is_prime_u64(prime) {
            return Err(Error::Domain(format!("context prime {prime} is not prime")));
        }
        // exponent scaling by p must stay inside u32 arithmetic
        if prime > u32::MAX as u64 {
            return Err(Error::Domain(format!("context prime {prime} is too large")));
        }
        if let Some(q) = domain.characteristic_prime() {
            if q != prime {
                return Err(Error::Domain(format!(
                    "domain prime {q} disagrees with context prime {prime}"
                )));
            }
        }
        for (i, v) in variables.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::Domain(format!("invalid variable name `{v}`")));
            }
            if v == "p" {
                return Err(Error::Domain("`p` is reserved for the context prime".into()));
            }
            if variables[..i].contains(v) {
                return Err(Error::Domain(format!("duplicate variable `{v}`")));
            }
        }
        Ok(RingContext {
            data: Arc::new(ContextData {
                variables,
                domain,
                prime,
                level,
            }),
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.data.variables
    }

    pub fn num_vars(&self) -> usize {
        self.data.variables.len()
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.data.domain
    }

    pub fn prime(&self) -> u64 {
        self.data.prime
    }

    pub fn level(&self) -> u32 {
        self.data.level
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.data.variables.iter().position(|v| v == name)
    }

    /// Same variables and prime, different coefficient domain.
    pub fn with_domain(&self, domain: CoefficientDomain) -> Result<RingContext> {
        RingContext::with_level(
            self.data.variables.clone(),
            domain,
            self.data.prime,
            self.data.level,
        )
    }

    /// Same domain and prime, shifted presentation level.
    pub fn shifted_level(&self, delta: i64) -> Result<RingContext> {
        let new = self.data.level as i64 + delta;
        if new < 0 {
            return Err(Error::Domain(format!(
                "presentation level would become negative ({new})"
            )));
        }
        RingContext::with_level(
            self.data.variables.clone(),
            self.data.domain.clone(),
            self.data.prime,
            new as u32,
        )
    }

    /// Extend with fresh variables appended after the current ones.
    pub fn extended(&self, extra: &[String]) -> Result<RingContext> {
        let mut vars = self.data.variables.clone();
        vars.extend_from_slice(extra);
        RingContext::with_level(vars, self.data.domain.clone(), self.data.prime, self.data.level)
    }

    /// Same prime and domain over a different variable list.
    pub fn renamed(&self, variables: Vec<String>) -> Result<RingContext> {
        RingContext::with_level(variables, self.data.domain.clone(), self.data.prime, self.data.level)
    }

    pub fn same_ring(&self, other: &RingContext) -> bool {
        self.data == other.data
    }

    pub fn check_compatible(&self, other: &RingContext) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data.domain)?;
        if self.data.variables.is_empty() {
            return Ok(());
        }
        write!(f, "[")?;
        for (i, v) in self.data.variables.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
            if self.data.level > 0 {
                write!(f, "^(1/{}^{})", self.data.prime, self.data.level)?;
            }
        }
        write!(f, "]")
    }
}
