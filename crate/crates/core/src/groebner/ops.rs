//! Ideal operations derived from the Groebner engines: membership with
//! certificates, elimination, colon ideals, initial ideals, ideal equality,
//! and contraction to the subring of p-th powers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coeff::{Coeff, CoefficientDomain};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

use super::{EngineLimits, Ideal};

/// Which ring the membership question is asked over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipMode {
    Fp,
    Q,
    Z,
    /// Z localized at p: tier Z first, then Q with denominator analysis.
    ZpLocal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipTier {
    Z,
    Q,
    ZpLocal,
    Field,
}

impl fmt::Display for MembershipTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipTier::Z => write!(f, "Z"),
            MembershipTier::Q => write!(f, "Q"),
            MembershipTier::ZpLocal => write!(f, "Zp-local"),
            MembershipTier::Field => write!(f, "field"),
        }
    }
}

/// Outcome of a membership test. When `member` holds and cofactors are
/// present, `denominator * f = sum_i cofactors[i] * generators[i]` re-verifies
/// by exact arithmetic.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub member: bool,
    pub tier: MembershipTier,
    pub denominator: BigInt,
    pub cofactors: Option<Vec<Polynomial>>,
}

impl MembershipCertificate {
    fn non_member(tier: MembershipTier) -> Self {
        MembershipCertificate {
            member: false,
            tier,
            denominator: BigInt::one(),
            cofactors: None,
        }
    }

    /// Re-verify the certified identity against the ideal generators.
    pub fn verify(&self, f: &Polynomial, ideal: &Ideal) -> Result<bool> {
        if !self.member {
            return Ok(true);
        }
        let Some(cof) = &self.cofactors else {
            return Ok(true);
        };
        let scaled = f.scale(&f.context().domain().from_int(self.denominator.clone()));
        let mut acc = Polynomial::zero(f.context());
        for (q, g) in cof.iter().zip(ideal.generators()) {
            acc = acc.add(&q.mul(g)?)?;
        }
        Ok(acc == scaled)
    }
}

/// Ideal membership with a certificate.
///
/// `ZpLocal` is tiered: a strong Z-basis first; on failure, Q-membership with
/// cofactors, whose denominators are cleared to `c`. Membership over the
/// localization is accepted iff the prime-to-p part of `c` already certifies
/// over Z; otherwise the test is inconclusive, never false.
pub fn membership(
    f: &Polynomial,
    ideal: &Ideal,
    mode: MembershipMode,
    limits: &EngineLimits,
) -> Result<MembershipCertificate> {
    ideal.context().check_compatible(f.context())?;
    let dom = ideal.context().domain().clone();
    match mode {
        MembershipMode::Fp => {
            if !matches!(dom, CoefficientDomain::PrimeField(_)) {
                return Err(Error::Domain(format!("Fp membership over {dom}")));
            }
            field_membership(f, ideal, limits, MembershipTier::Field)
        }
        MembershipMode::Q => {
            if dom != CoefficientDomain::RationalQ {
                return Err(Error::Domain(format!("Q membership over {dom}")));
            }
            field_membership(f, ideal, limits, MembershipTier::Q)
        }
        MembershipMode::Z => {
            if dom != CoefficientDomain::IntegerZ {
                return Err(Error::Domain(format!("Z membership over {dom}")));
            }
            z_membership(f, ideal, limits)
        }
        MembershipMode::ZpLocal => {
            if dom != CoefficientDomain::IntegerZ {
                return Err(Error::Domain(format!("Zp-local membership over {dom}")));
            }
            let z = z_membership(f, ideal, limits)?;
            if z.member {
                return Ok(z);
            }
            zp_local_fallback(f, ideal, limits)
        }
    }
}

fn field_membership(
    f: &Polynomial,
    ideal: &Ideal,
    limits: &EngineLimits,
    tier: MembershipTier,
) -> Result<MembershipCertificate> {
    if ideal.is_zero_ideal() {
        return Ok(MembershipCertificate {
            member: f.is_zero(),
            tier,
            denominator: BigInt::one(),
            cofactors: f.is_zero().then(Vec::new),
        });
    }
    let basis = ideal.basis(MonomialOrder::GrevLex, limits, true)?;
    let (rem, q) = basis.normal_form_with_cofactors(f)?;
    if !rem.is_zero() {
        return Ok(MembershipCertificate::non_member(tier));
    }
    let cof = basis.express_in_generators(&q)?;
    Ok(MembershipCertificate {
        member: true,
        tier,
        denominator: BigInt::one(),
        cofactors: Some(cof),
    })
}

fn z_membership(
    f: &Polynomial,
    ideal: &Ideal,
    limits: &EngineLimits,
) -> Result<MembershipCertificate> {
    if ideal.is_zero_ideal() {
        return Ok(MembershipCertificate {
            member: f.is_zero(),
            tier: MembershipTier::Z,
            denominator: BigInt::one(),
            cofactors: f.is_zero().then(Vec::new),
        });
    }
    let basis = ideal.basis(MonomialOrder::GrevLex, limits, true)?;
    let (rem, q) = basis.normal_form_with_cofactors(f)?;
    if !rem.is_zero() {
        return Ok(MembershipCertificate::non_member(MembershipTier::Z));
    }
    let cof = basis.express_in_generators(&q)?;
    Ok(MembershipCertificate {
        member: true,
        tier: MembershipTier::Z,
        denominator: BigInt::one(),
        cofactors: Some(cof),
    })
}

/// Q-membership of a Z-polynomial with denominator analysis at p.
fn zp_local_fallback(
    f: &Polynomial,
    ideal: &Ideal,
    limits: &EngineLimits,
) -> Result<MembershipCertificate> {
    let p = BigInt::from(ideal.context().prime());
    let q_ideal = lift_ideal_to_q(ideal)?;
    let fq = f.reduce_mod(&CoefficientDomain::RationalQ)?;
    let cert = field_membership(&fq, &q_ideal, limits, MembershipTier::Q)?;
    if !cert.member {
        // not a member even over Q, hence not over the localization
        return Ok(MembershipCertificate::non_member(MembershipTier::ZpLocal));
    }
    let mut denom = BigInt::one();
    for qpoly in cert.cofactors.as_deref().unwrap_or(&[]) {
        for (_, c) in qpoly.terms() {
            let r = c.as_rat().expect("rational cofactor");
            denom = denom.lcm(r.denom());
        }
    }
    // strip the p-part and re-derive over Z with the scaled element
    let mut p_free = denom.clone();
    while p_free.mod_floor(&p).is_zero() {
        p_free /= &p;
    }
    let scaled = f.scale(&Coeff::Int(p_free.clone()));
    let z = z_membership(&scaled, ideal, limits)?;
    if z.member {
        return Ok(MembershipCertificate {
            member: true,
            tier: MembershipTier::ZpLocal,
            denominator: p_free,
            cofactors: z.cofactors,
        });
    }
    Err(Error::Inconclusive {
        element: f.to_string(),
        denominator: denom.to_string(),
    })
}

fn lift_ideal_to_q(ideal: &Ideal) -> Result<Ideal> {
    let qctx = ideal.context().with_domain(CoefficientDomain::RationalQ)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.reduce_mod(&CoefficientDomain::RationalQ))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&qctx, gens)
}

/// Generators of `I` intersected with the subring on the variables not in
/// `drop`, computed from a basis in a block elimination order.
pub fn eliminate(ideal: &Ideal, drop: &[String], limits: &EngineLimits) -> Result<Ideal> {
    let ctx = ideal.context();
    let mut drop_idx = Vec::with_capacity(drop.len());
    for name in drop {
        let i = ctx
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        if !drop_idx.contains(&i) {
            drop_idx.push(i);
        }
    }
    let keep_idx: Vec<usize> = (0..ctx.num_vars())
        .filter(|i| !drop_idx.contains(i))
        .collect();

    // permute so the dropped block leads
    let mut perm_names: Vec<String> = drop_idx
        .iter()
        .chain(keep_idx.iter())
        .map(|&i| ctx.variables()[i].clone())
        .collect();
    let permuted = ctx.renamed(std::mem::take(&mut perm_names))?;
    let mut map = vec![0usize; ctx.num_vars()];
    for (newpos, &old) in drop_idx.iter().chain(keep_idx.iter()).enumerate() {
        map[old] = newpos;
    }
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&permuted, &map))
        .collect();
    let pideal = Ideal::new(&permuted, gens)?;
    let basis = pideal.basis(MonomialOrder::Elimination(drop_idx.len()), limits, false)?;

    let keep_ctx = ctx.renamed(keep_idx.iter().map(|&i| ctx.variables()[i].clone()).collect())?;
    let kept_positions: Vec<usize> = (drop_idx.len()..ctx.num_vars()).collect();
    let mut out = Vec::new();
    for g in basis.elements() {
        let uses_dropped = g
            .terms()
            .iter()
            .any(|(m, _)| m.exponents()[..drop_idx.len()].iter().any(|&e| e > 0));
        if uses_dropped {
            continue;
        }
        let pairs = g
            .terms()
            .iter()
            .map(|(m, c)| (m.project(&kept_positions), c.clone()))
            .collect();
        out.push(Polynomial::from_terms(&keep_ctx, pairs));
    }
    Ideal::new(&keep_ctx, out)
}

/// Exact division `g / f`, valid when `g` lies in `(f)`.
fn divide_exact(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let ctx = g.context().clone();
    let dom = ctx.domain().clone();
    let order = MonomialOrder::Lex;
    let (fm, fc) = f
        .leading_term(order)
        .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
    let (fm, fc) = (fm.clone(), fc.clone());
    let mut rest = g.clone();
    let mut quotient = Polynomial::zero(&ctx);
    while !rest.is_zero() {
        let (m, c) = rest.leading_term(order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if !fm.divides(&m) {
            return Err(Error::Domain(format!("{g} is not divisible by {f}")));
        }
        let qc = dom.div_exact(&c, &fc).map_err(|_| {
            Error::Domain(format!("{g} is not divisible by {f} over {dom}"))
        })?;
        let qm = fm.div(&m);
        let t = Polynomial::term(&ctx, qm, qc);
        quotient = quotient.add(&t)?;
        rest = rest.sub(&t.mul(f)?)?;
    }
    Ok(quotient)
}

/// The colon ideal `(I : f)`, via intersection with `(f)` by the
/// auxiliary-variable trick followed by exact division.
pub fn colon(ideal: &Ideal, f: &Polynomial, limits: &EngineLimits) -> Result<Ideal> {
    let ctx = ideal.context();
    ctx.check_compatible(f.context())?;
    if f.is_zero() {
        return Err(Error::Domain("colon by the zero polynomial".into()));
    }
    if ideal.is_zero_ideal() {
        return Ok(Ideal::zero(ctx));
    }
    // fresh auxiliary variable in front
    let mut aux = "t".to_string();
    while ctx.var_index(&aux).is_some() {
        aux.push('_');
    }
    let mut names = vec![aux.clone()];
    names.extend_from_slice(ctx.variables());
    let ext = ctx.renamed(names)?;
    let map: Vec<usize> = (1..=ctx.num_vars()).collect();
    let t = Polynomial::variable(&ext, &aux)?;
    let one_minus_t = Polynomial::one(&ext).sub(&t)?;
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| t.mul(&g.embed(&ext, &map)).expect("same context"))
        .collect();
    gens.push(one_minus_t.mul(&f.embed(&ext, &map))?);
    let graph = Ideal::new(&ext, gens)?;
    let intersection = eliminate(&graph, &[aux], limits)?;
    let mut out = Vec::new();
    for g in intersection.generators() {
        let back = back_to(ctx, g);
        out.push(divide_exact(&back, f)?);
    }
    Ideal::new(ctx, out)
}

fn back_to(ctx: &RingContext, g: &Polynomial) -> Polynomial {
    let map: Vec<usize> = (0..ctx.num_vars()).collect();
    g.embed(ctx, &map)
}

/// Monomial ideal of leading terms of the reduced basis.
pub fn initial_ideal(
    ideal: &Ideal,
    order: MonomialOrder,
    limits: &EngineLimits,
) -> Result<Ideal> {
    let ctx = ideal.context();
    if !ctx.domain().is_field() {
        return Err(Error::Domain("initial_ideal requires a field domain".into()));
    }
    let basis = ideal.basis(order, limits, false)?;
    let gens = basis
        .elements()
        .iter()
        .map(|g| {
            let (m, _) = g.leading_term(order).expect("nonzero basis element");
            Polynomial::term(ctx, m.clone(), ctx.domain().one())
        })
        .collect();
    Ideal::new(ctx, gens)
}

/// Mutual membership of all generators. Z-coefficient contexts model the
/// p-local ring, so their equality test runs at the Zp-local tier.
pub fn ideal_equal(a: &Ideal, b: &Ideal, limits: &EngineLimits) -> Result<bool> {
    a.context().check_compatible(b.context())?;
    let mode = match a.context().domain() {
        CoefficientDomain::IntegerZ => MembershipMode::ZpLocal,
        CoefficientDomain::RationalQ => MembershipMode::Q,
        CoefficientDomain::PrimeField(_) => MembershipMode::Fp,
        d => return Err(Error::Domain(format!("ideal_equal over {d}"))),
    };
    for g in a.generators() {
        if !membership(g, b, mode, limits)?.member {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !membership(g, a, mode, limits)?.member {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I ∩ F_p[X_1^p, ..., X_n^p]`, relabeled back to the original variables:
/// fresh variables `Y_i` are adjoined with relations `Y_i - X_i^p`, the
/// original block is eliminated, and `Y_i` is renamed to `X_i`. Over F_p the
/// result is exactly the Frobenius preimage `{x : x^p in I}`.
pub fn contract_to_pth_powers(ideal: &Ideal, limits: &EngineLimits) -> Result<Ideal> {
    let ctx = ideal.context();
    let p = match ctx.domain() {
        CoefficientDomain::PrimeField(p) => *p as u32,
        d => {
            return Err(Error::Domain(format!(
                "contraction to p-th powers requires a prime field, got {d}"
            )))
        }
    };
    let n = ctx.num_vars();
    if n == 0 {
        return Ok(ideal.clone());
    }
    let mut names: Vec<String> = ctx.variables().to_vec();
    let fresh: Vec<String> = ctx
        .variables()
        .iter()
        .map(|v| {
            let mut cand = format!("{v}_p");
            while ctx.var_index(&cand).is_some() || names.contains(&cand) {
                cand.push('_');
            }
            names.push(cand.clone());
            cand
        })
        .collect();
    let ext = ctx.renamed(names)?;
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.embed(&ext, &map)).collect();
    for (i, y) in fresh.iter().enumerate() {
        let xi = Polynomial::variable(&ext, &ctx.variables()[i])?;
        let yi = Polynomial::variable(&ext, y)?;
        gens.push(yi.sub(&xi.pow(p))?);
    }
    let graph = Ideal::new(&ext, gens)?;
    let contracted = eliminate(&graph, ctx.variables(), limits)?;
    // relabel Y_i -> X_i
    let relabel: Vec<usize> = (0..n).collect();
    let out = contracted
        .generators()
        .iter()
        .map(|g| g.embed(ctx, &relabel))
        .collect();
    Ideal::new(ctx, out)
}
