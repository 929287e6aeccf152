//! Delta-ring calculus on polynomial rings over Z: Frobenius lifts and their
//! validation, the delta-operator, phi-iteration, phi-monomial
//! decompositions, delta-stabilization of ideals, and the closed-form beta
//! polynomial.
//!
//! On a p-torsion-free ring a delta-structure and a Frobenius lift determine
//! each other through `phi(a) = a^p + p*delta(a)`; everything here computes
//! with the lift and recovers delta by exact division.

mod beta;
mod stabilize;

pub use beta::beta_poly;
pub use stabilize::{
    delta_height_bound, delta_stabilize, is_delta_stable, HeightBound, IterationRecord,
    StabilizationResult,
};

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::coeff::{Coeff, CoefficientDomain};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// A delta-structure given by per-variable Frobenius-lift images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftKind {
    /// `delta(X_i) = 0`, i.e. `phi(X_i) = X_i^p`.
    Monomial,
    /// Explicit images for some variables; unlisted variables get `X^p`.
    Custom(BTreeMap<String, Polynomial>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusLiftSpec {
    pub kind: LiftKind,
    pub prime: u64,
}

impl FrobeniusLiftSpec {
    pub fn monomial(prime: u64) -> FrobeniusLiftSpec {
        FrobeniusLiftSpec {
            kind: LiftKind::Monomial,
            prime,
        }
    }

    pub fn custom(prime: u64, images: BTreeMap<String, Polynomial>) -> FrobeniusLiftSpec {
        FrobeniusLiftSpec {
            kind: LiftKind::Custom(images),
            prime,
        }
    }

    pub fn is_monomial(&self) -> bool {
        match &self.kind {
            LiftKind::Monomial => true,
            LiftKind::Custom(images) => images.is_empty(),
        }
    }

    /// Check `phi(X_i) ≡ X_i^p (mod p)` for every variable image.
    pub fn validate(&self, ctx: &RingContext) -> Result<()> {
        if ctx.prime() != self.prime {
            return Err(Error::Domain(format!(
                "lift prime {} disagrees with context prime {}",
                self.prime,
                ctx.prime()
            )));
        }
        let LiftKind::Custom(images) = &self.kind else {
            return Ok(());
        };
        if *ctx.domain() != CoefficientDomain::IntegerZ {
            return Err(Error::Domain(
                "custom Frobenius lifts are validated over ZZ".into(),
            ));
        }
        let p = BigInt::from(self.prime);
        for (name, img) in images {
            let xi = Polynomial::variable(ctx, name)?;
            ctx.check_compatible(img.context())?;
            let diff = img.sub(&xi.pow(self.prime as u32))?;
            if diff.exact_div_int(&p).is_err() {
                let witness = diff
                    .terms()
                    .iter()
                    .find(|(_, c)| {
                        ctx.domain()
                            .div_exact(c, &Coeff::Int(p.clone()))
                            .is_err()
                    })
                    .map(|(m, c)| {
                        format!("{c}*{}", Polynomial::term(ctx, m.clone(), ctx.domain().one()))
                    })
                    .unwrap_or_else(|| diff.to_string());
                return Err(Error::InvalidLift {
                    variable: name.clone(),
                    witness,
                });
            }
        }
        Ok(())
    }

    /// Apply the lift endomorphism once.
    pub fn phi(&self, f: &Polynomial) -> Result<Polynomial> {
        let ctx = f.context();
        match &self.kind {
            LiftKind::Monomial => Ok(scale_exponents(f, self.prime as u32)?),
            LiftKind::Custom(images) => {
                if images.is_empty() {
                    return scale_exponents(f, self.prime as u32);
                }
                let mut full: HashMap<String, Polynomial> = HashMap::new();
                for v in ctx.variables() {
                    let img = images
                        .get(v)
                        .cloned()
                        .unwrap_or(Polynomial::variable(ctx, v)?.pow(self.prime as u32));
                    full.insert(v.clone(), img);
                }
                f.substitute(&full)
            }
        }
    }

    /// `phi^i`, with `phi^0` the identity.
    pub fn phi_pow(&self, f: &Polynomial, i: u32) -> Result<Polynomial> {
        if self.is_monomial() {
            let mut factor: u64 = 1;
            for _ in 0..i {
                factor = factor
                    .checked_mul(self.prime)
                    .ok_or_else(|| Error::Domain("phi-power exponent overflow".into()))?;
            }
            let factor: u32 = factor
                .try_into()
                .map_err(|_| Error::Domain("phi-power exponent overflow".into()))?;
            return scale_exponents(f, factor);
        }
        let mut acc = f.clone();
        for _ in 0..i {
            acc = self.phi(&acc)?;
        }
        Ok(acc)
    }

    /// `delta(f) = (phi(f) - f^p) / p`, exact over Z for a validated lift.
    pub fn delta(&self, f: &Polynomial) -> Result<Polynomial> {
        if *f.context().domain() != CoefficientDomain::IntegerZ {
            return Err(Error::Domain("delta is computed over ZZ".into()));
        }
        let num = self.phi(f)?.sub(&f.pow(self.prime as u32))?;
        num.exact_div_int(&BigInt::from(self.prime))
    }
}

fn scale_exponents(f: &Polynomial, factor: u32) -> Result<Polynomial> {
    let pairs = f
        .terms()
        .iter()
        .map(|(m, c)| {
            for &e in m.exponents() {
                if (e as u64) * (factor as u64) > u32::MAX as u64 {
                    return Err(Error::Domain("exponent overflow in phi".into()));
                }
            }
            Ok((m.pow(factor), c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_terms(f.context(), pairs))
}

/// A sum `f = sum_i k_i * M_i` with integer `k_i` and phi-monomials `M_i`
/// (elements with `phi(M) = M^p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiMonomialDecomposition {
    pub parts: Vec<(BigInt, Monomial)>,
}

impl PhiMonomialDecomposition {
    /// Rebuild the decomposed polynomial.
    pub fn reconstruct(&self, ctx: &RingContext) -> Polynomial {
        let pairs = self
            .parts
            .iter()
            .map(|(k, m)| (m.clone(), Coeff::Int(k.clone())))
            .collect();
        Polynomial::from_terms(ctx, pairs)
    }
}

/// Term-by-term split of `f` into phi-monomials. Under the monomial lift
/// every monomial qualifies; under a custom lift each monomial is verified.
pub fn phi_monomial_decomposition(
    f: &Polynomial,
    spec: &FrobeniusLiftSpec,
) -> Result<PhiMonomialDecomposition> {
    let ctx = f.context();
    if *ctx.domain() != CoefficientDomain::IntegerZ {
        return Err(Error::Domain(
            "phi-monomial decompositions are taken over ZZ".into(),
        ));
    }
    let mut parts = Vec::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        if !spec.is_monomial() {
            let mono = Polynomial::term(ctx, m.clone(), ctx.domain().one());
            let lhs = spec.phi(&mono)?;
            let rhs = mono.pow(spec.prime as u32);
            if lhs != rhs {
                return Err(Error::NotPhiMonomial(mono.to_string()));
            }
        }
        parts.push((c.as_int().expect("ZZ coefficient").clone(), m.clone()));
    }
    Ok(PhiMonomialDecomposition { parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn zctx(names: &[&str], p: u64) -> RingContext {
        RingContext::new(
            names.iter().map(|s| s.to_string()).collect(),
            CoefficientDomain::IntegerZ,
            p,
        )
        .unwrap()
    }

    #[test]
    fn monomial_lift_always_valid() {
        let ctx = zctx(&["X", "Y"], 2);
        assert!(FrobeniusLiftSpec::monomial(2).validate(&ctx).is_ok());
    }

    #[test]
    fn custom_lift_validation() {
        let ctx = zctx(&["X", "Y"], 2);
        let good = FrobeniusLiftSpec::custom(
            2,
            BTreeMap::from([("X".to_string(), parse_poly("X^2 + 2*Y", &ctx).unwrap())]),
        );
        assert!(good.validate(&ctx).is_ok());
        let bad = FrobeniusLiftSpec::custom(
            2,
            BTreeMap::from([("X".to_string(), parse_poly("X^2 + Y", &ctx).unwrap())]),
        );
        assert!(matches!(
            bad.validate(&ctx),
            Err(Error::InvalidLift { variable, .. }) if variable == "X"
        ));
    }

    #[test]
    fn delta_of_sum_of_variables() {
        // delta(X + Y) = -XY at p = 2 under the monomial lift
        let ctx = zctx(&["X", "Y"], 2);
        let spec = FrobeniusLiftSpec::monomial(2);
        let f = parse_poly("X + Y", &ctx).unwrap();
        assert_eq!(spec.delta(&f).unwrap(), parse_poly("-X*Y", &ctx).unwrap());
    }

    #[test]
    fn delta_of_monomial_vanishes() {
        for p in [2u64, 3, 5] {
            let ctx = zctx(&["X", "Y"], p);
            let spec = FrobeniusLiftSpec::monomial(p);
            let f = parse_poly("X*Y", &ctx).unwrap();
            assert!(spec.delta(&f).unwrap().is_zero());
        }
    }

    #[test]
    fn delta_of_two_minus_t() {
        // delta(2 - T) = ((2 - T^2) - (2 - T)^2) / 2 = -1 + 2T - T^2
        let ctx = zctx(&["T"], 2);
        let spec = FrobeniusLiftSpec::monomial(2);
        let d = spec.delta(&parse_poly("2 - T", &ctx).unwrap()).unwrap();
        assert_eq!(d, parse_poly("-1 + 2*T - T^2", &ctx).unwrap());
    }

    #[test]
    fn phi_pow_of_orientation() {
        // phi^i(p - T) = p - T^(p^i)
        let ctx = zctx(&["T"], 2);
        let spec = FrobeniusLiftSpec::monomial(2);
        let d = parse_poly("2 - T", &ctx).unwrap();
        for i in 0..5u32 {
            let expect = parse_poly(&format!("2 - T^{}", 1u64 << i), &ctx).unwrap();
            assert_eq!(spec.phi_pow(&d, i).unwrap(), expect);
        }
        // constants are fixed
        let c = parse_poly("2", &ctx).unwrap();
        assert_eq!(spec.phi_pow(&c, 3).unwrap(), c);
    }

    #[test]
    fn phi_composes() {
        let ctx = zctx(&["X", "Y"], 3);
        let spec = FrobeniusLiftSpec::custom(
            3,
            BTreeMap::from([("X".to_string(), parse_poly("X^3 + 3*Y", &ctx).unwrap())]),
        );
        let d = parse_poly("X^2 - Y + 1", &ctx).unwrap();
        let twice = spec.phi(&spec.phi(&d).unwrap()).unwrap();
        assert_eq!(spec.phi_pow(&d, 2).unwrap(), twice);
    }

    #[test]
    fn decomposition_splits_terms() {
        let ctx = zctx(&["X", "Y", "Z", "W"], 2);
        let spec = FrobeniusLiftSpec::monomial(2);
        let f = parse_poly("X^2*Y + 3*Z - W", &ctx).unwrap();
        let d = phi_monomial_decomposition(&f, &spec).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert_eq!(d.reconstruct(&ctx), f);
    }

    #[test]
    fn custom_lift_rejects_non_phi_monomial() {
        let ctx = zctx(&["X", "Y"], 2);
        let spec = FrobeniusLiftSpec::custom(
            2,
            BTreeMap::from([("X".to_string(), parse_poly("X^2 + 2*Y", &ctx).unwrap())]),
        );
        // Y is still a phi-monomial, X is not
        assert!(phi_monomial_decomposition(&parse_poly("Y", &ctx).unwrap(), &spec).is_ok());
        assert!(matches!(
            phi_monomial_decomposition(&parse_poly("X + Y", &ctx).unwrap(), &spec),
            Err(Error::NotPhiMonomial(_))
        ));
    }
}
