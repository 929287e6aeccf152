//! Characteristic-p verification primitives: Frobenius preimages of ideals,
//! reducedness, injectivity of p-th-power maps between quotients, level-wise
//! p-root-closedness certificates, and non-zero-divisor checks.

use std::fmt;

use crate::coeff::CoefficientDomain;
use crate::error::{Error, Result};
use crate::groebner::{
    colon, contract_to_pth_powers, ideal_equal, membership, EngineLimits, Ideal, MembershipMode,
};
use crate::poly::Polynomial;

/// `{x : x^p in I}`, computed as the p-th-root relabel of the contraction
/// `I ∩ F_p[X_1^p, ..., X_n^p]`. Always contains `I`.
pub fn frobenius_preimage(ideal: &Ideal, limits: &EngineLimits) -> Result<Ideal> {
    contract_to_pth_powers(ideal, limits)
}

/// In characteristic p every nilpotent has p-power nilpotency order, so the
/// quotient is reduced iff the Frobenius preimage adds nothing.
pub fn is_reduced(ideal: &Ideal, limits: &EngineLimits) -> Result<bool> {
    let pre = frobenius_preimage(ideal, limits)?;
    for g in pre.generators() {
        if !membership(g, ideal, MembershipMode::Fp, limits)?.member {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict of the injectivity test for `R/I1 -> R/I2, x -> x^p`, with a
/// witness generator on failure.
#[derive(Debug, Clone)]
pub struct InjectivityVerdict {
    pub injective: bool,
    /// An `x` with `x^p in I2` but `x` not in `I1`.
    pub witness: Option<Polynomial>,
}

/// Injectivity of the p-th-power map between two quotients.
///
/// Well-definedness (`g^p in I2` for every generator `g` of `I1`) is
/// validated first; the map is injective iff the Frobenius preimage of `I2`
/// is contained in `I1`.
pub fn pth_power_injective(
    i1: &Ideal,
    i2: &Ideal,
    limits: &EngineLimits,
) -> Result<InjectivityVerdict> {
    i1.context().check_compatible(i2.context())?;
    let p = match i1.context().domain() {
        CoefficientDomain::PrimeField(p) => *p as u32,
        d => {
            return Err(Error::Domain(format!(
                "p-th power maps live in characteristic p, got {d}"
            )))
        }
    };
    for g in i1.generators() {
        let gp = g.pow(p);
        if !membership(&gp, i2, MembershipMode::Fp, limits)?.member {
            return Err(Error::Domain(format!(
                "p-th power map is not well defined: {g}^{p} does not lie in the target ideal"
            )));
        }
    }
    let pre = frobenius_preimage(i2, limits)?;
    for g in pre.generators() {
        if !membership(g, i1, MembershipMode::Fp, limits)?.member {
            return Ok(InjectivityVerdict {
                injective: false,
                witness: Some(g.clone()),
            });
        }
    }
    Ok(InjectivityVerdict {
        injective: true,
        witness: None,
    })
}

/// `f` is a non-zero-divisor modulo `I` iff `(I : f) = I`.
pub fn is_nonzerodivisor(f: &Polynomial, ideal: &Ideal, limits: &EngineLimits) -> Result<bool> {
    if f.is_zero() {
        return Ok(false);
    }
    let quot = colon(ideal, f, limits)?;
    ideal_equal(&quot, ideal, limits)
}

#[derive(Debug, Clone)]
pub struct LevelVerdict {
    pub level: u32,
    pub injective: bool,
    pub witness: Option<Polynomial>,
}

#[derive(Debug, Clone)]
pub enum RootClosureVerdict {
    CertifiedUpTo(u32),
    FailedAt(u32, Polynomial),
}

/// Finite-level approximation of p-root closedness: injectivity of
/// `(J, d^{p^i}) -> (J, d^{p^{i+1}})` under the p-th-power map for
/// `i = 0..=k`. A failure witness `x` satisfies `x^p in (J, d^{p^{i+1}})`
/// and `x` not in `(J, d^{p^i})`, both re-verified by membership.
#[derive(Debug, Clone)]
pub struct RootClosureCertificate {
    pub levels_checked: u32,
    pub per_level: Vec<LevelVerdict>,
    pub verdict: RootClosureVerdict,
}

impl RootClosureCertificate {
    pub fn holds(&self) -> bool {
        matches!(self.verdict, RootClosureVerdict::CertifiedUpTo(_))
    }
}

impl fmt::Display for RootClosureCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            RootClosureVerdict::CertifiedUpTo(k) => {
                write!(f, "p-root closed (polynomial-level, levels 0..{k})")
            }
            RootClosureVerdict::FailedAt(i, w) => {
                write!(f, "p-root closedness fails at level {i} with witness {w}")
            }
        }
    }
}

/// Level-by-level p-root-closedness certificate for `A/pA` presented as the
/// quotient by `jbar`, localized at `d`.
///
/// Preconditions (reported, not panicked): `d` nonzero mod `jbar` and a
/// non-zero-divisor mod `jbar`.
pub fn p_root_closed_certificate(
    jbar: &Ideal,
    d: &Polynomial,
    k: u32,
    limits: &EngineLimits,
) -> Result<RootClosureCertificate> {
    let ctx = jbar.context();
    ctx.check_compatible(d.context())?;
    let p = match ctx.domain() {
        CoefficientDomain::PrimeField(p) => *p as u32,
        dom => {
            return Err(Error::Domain(format!(
                "p-root closedness is checked in characteristic p, got {dom}"
            )))
        }
    };
    if membership(d, jbar, MembershipMode::Fp, limits)?.member {
        return Err(Error::Domain(
            "orientation vanishes modulo the relations; localization is degenerate".into(),
        ));
    }
    if !is_nonzerodivisor(d, jbar, limits)? {
        return Err(Error::Domain(
            "orientation is a zero-divisor modulo the relations".into(),
        ));
    }
    let mut per_level = Vec::with_capacity(k as usize + 1);
    for i in 0..=k {
        let lo = jbar.with_extra(&[d.pow(p.pow(i))])?;
        let hi = jbar.with_extra(&[d.pow(p.pow(i + 1))])?;
        let verdict = pth_power_injective(&lo, &hi, limits)?;
        per_level.push(LevelVerdict {
            level: i,
            injective: verdict.injective,
            witness: verdict.witness.clone(),
        });
        if !verdict.injective {
            let witness = verdict.witness.expect("failure carries a witness");
            debug_assert!(
                membership(&witness.pow(p), &hi, MembershipMode::Fp, limits)?.member
                    && !membership(&witness, &lo, MembershipMode::Fp, limits)?.member
            );
            return Ok(RootClosureCertificate {
                levels_checked: i,
                per_level,
                verdict: RootClosureVerdict::FailedAt(i, witness),
            });
        }
    }
    Ok(RootClosureCertificate {
        levels_checked: k,
        per_level,
        verdict: RootClosureVerdict::CertifiedUpTo(k),
    })
}
