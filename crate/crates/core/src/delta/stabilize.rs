//! Delta-stabilization: adjoin delta-iterates of the generators until every
//! new image is certified to lie in the ideal generated so far.
//!
//! The loop works generator-by-generator; delta-stability of the final ideal
//! is what `is_delta_stable` certifies independently, so the two readings of
//! the iterated-image definition converge on the same stabilized ideal.

use crate::coeff::CoefficientDomain;
use crate::error::{Error, Result};
use crate::groebner::{membership, EngineLimits, Ideal, MembershipMode, MembershipTier};
use crate::poly::Polynomial;

use super::FrobeniusLiftSpec;

/// One membership verdict from the stabilization loop.
#[derive(Debug, Clone)]
pub struct IterationRecord {
    pub iteration: u32,
    /// The delta-image that was tested.
    pub element: Polynomial,
    pub member: bool,
    pub tier: Option<MembershipTier>,
}

#[derive(Debug, Clone)]
pub struct StabilizationResult {
    /// Original generators plus every adjoined delta-iterate.
    pub ideal: Ideal,
    /// First iteration at which all delta-images were members.
    pub delta_height: u32,
    pub trace: Vec<IterationRecord>,
}

/// Iteratively adjoin `delta` of each newly added generator. Stops at the
/// first stage where every delta-image of a frontier element is a certified
/// member (tier Z, or Zp-local on fallback) of the current ideal.
pub fn delta_stabilize(
    ideal: &Ideal,
    spec: &FrobeniusLiftSpec,
    max_iter: u32,
    limits: &EngineLimits,
) -> Result<StabilizationResult> {
    let ctx = ideal.context();
    if *ctx.domain() != CoefficientDomain::IntegerZ {
        return Err(Error::Domain("delta-stabilization runs over ZZ".into()));
    }
    spec.validate(ctx)?;
    let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
    let mut frontier = gens.clone();
    let mut trace = Vec::new();
    for k in 0..=max_iter {
        let current = Ideal::new(ctx, gens.clone())?;
        let mut fresh = Vec::new();
        for g in &frontier {
            let d = spec.delta(g)?;
            if d.is_zero() {
                trace.push(IterationRecord {
                    iteration: k,
                    element: d,
                    member: true,
                    tier: None,
                });
                continue;
            }
            let cert = membership(&d, &current, MembershipMode::ZpLocal, limits)?;
            trace.push(IterationRecord {
                iteration: k,
                element: d.clone(),
                member: cert.member,
                tier: Some(cert.tier),
            });
            if !cert.member {
                fresh.push(d);
            }
        }
        if fresh.is_empty() {
            return Ok(StabilizationResult {
                ideal: current,
                delta_height: k,
                trace,
            });
        }
        gens.extend(fresh.clone());
        frontier = fresh;
    }
    Err(Error::NotStabilized { max_iter })
}

/// True iff `delta(g)` is a certified member of `J` for every generator `g`.
/// Generator-wise stability implies stability of the whole ideal, since both
/// delta-identities only ever produce terms featuring a generator or its
/// delta-image.
pub fn is_delta_stable(
    ideal: &Ideal,
    spec: &FrobeniusLiftSpec,
    limits: &EngineLimits,
) -> Result<bool> {
    let ctx = ideal.context();
    spec.validate(ctx)?;
    for g in ideal.generators() {
        let d = spec.delta(g)?;
        if d.is_zero() {
            continue;
        }
        let cert = membership(&d, ideal, MembershipMode::ZpLocal, limits)?;
        if !cert.member {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightBound {
    pub bound: u32,
    /// Number of parts in the phi-monomial decomposition.
    pub parts: usize,
}

/// Upper bound on the delta-height of `(f)` via a phi-monomial decomposition
/// `f = sum k_i M_i`: the height of `k_1 t_1 + ... + k_m t_m` is computed in
/// the template ring `Z[t_1..t_m]` with `delta(t_i) = 0` and bounds the
/// height of `f`, because `t_i -> M_i` is a map of delta-rings.
pub fn delta_height_bound(
    f: &Polynomial,
    spec: &FrobeniusLiftSpec,
    max_iter: u32,
    limits: &EngineLimits,
) -> Result<HeightBound> {
    let decomp = super::phi_monomial_decomposition(f, spec)?;
    let m = decomp.parts.len();
    let names: Vec<String> = (1..=m).map(|i| format!("t{i}")).collect();
    let tctx = crate::context::RingContext::new(
        names,
        CoefficientDomain::IntegerZ,
        spec.prime,
    )?;
    let mut template = Polynomial::zero(&tctx);
    for (i, (k, _)) in decomp.parts.iter().enumerate() {
        let ti = Polynomial::variable(&tctx, &format!("t{}", i + 1))?;
        template = template.add(&ti.scale(&tctx.domain().from_int(k.clone())))?;
    }
    let tspec = FrobeniusLiftSpec::monomial(spec.prime);
    let ideal = Ideal::new(&tctx, vec![template])?;
    let result = delta_stabilize(&ideal, &tspec, max_iter, limits)?;
    Ok(HeightBound {
        bound: result.delta_height,
        parts: m,
    })
}
