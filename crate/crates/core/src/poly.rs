//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored sorted descending in the lexicographic order with no zero
//! coefficients, so structural equality is ring equality. All operations are
//! pure; contexts are validated on entry.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::{Coeff, CoefficientDomain};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

const STORAGE_ORDER: MonomialOrder = MonomialOrder::Lex;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: RingContext,
    /// Sorted descending in lex; coefficients nonzero.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ctx: &RingContext) -> Polynomial {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &RingContext) -> Polynomial {
        Polynomial::constant(ctx, ctx.domain().one())
    }

    pub fn constant(ctx: &RingContext, c: Coeff) -> Polynomial {
        let c = ctx.domain().canon(c);
        if ctx.domain().is_zero_el(&c) {
            return Polynomial::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::one(ctx.num_vars()), c)],
        }
    }

    pub fn constant_i64(ctx: &RingContext, n: i64) -> Polynomial {
        Polynomial::constant(ctx, ctx.domain().from_i64(n))
    }

    pub fn variable(ctx: &RingContext, name: &str) -> Result<Polynomial> {
        let idx = ctx
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::term(
            ctx,
            Monomial::var(idx, ctx.num_vars()),
            ctx.domain().one(),
        ))
    }

    pub fn term(ctx: &RingContext, m: Monomial, c: Coeff) -> Polynomial {
        assert_eq!(m.num_vars(), ctx.num_vars(), "monomial width mismatch");
        let c = ctx.domain().canon(c);
        if ctx.domain().is_zero_el(&c) {
            return Polynomial::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Build from unsorted (monomial, coefficient) pairs, combining duplicates.
    pub fn from_terms(ctx: &RingContext, pairs: Vec<(Monomial, Coeff)>) -> Polynomial {
        let dom = ctx.domain().clone();
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(pairs.len());
        for (m, c) in pairs {
            assert_eq!(m.num_vars(), ctx.num_vars(), "monomial width mismatch");
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = dom.add(e.get(), &c);
                    if dom.is_zero_el(&s) {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    let c = dom.canon(c);
                    if !dom.is_zero_el(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0.is_one()
            && self.ctx.domain().is_one_el(&self.terms[0].1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ctx.domain().zero())
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff_of(&Monomial::one(self.ctx.num_vars()))
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        if order == STORAGE_ORDER {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_compatible(&other.ctx)?;
        let dom = self.ctx.domain();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match STORAGE_ORDER.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = dom.add(&self.terms[i].1, &other.terms[j].1);
                    if !dom.is_zero_el(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let dom = self.ctx.domain();
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), dom.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_compatible(&other.ctx)?;
        let dom = self.ctx.domain().clone();
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let mut map: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = dom.mul(ca, cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = dom.add(e.get(), &c);
                        if dom.is_zero_el(&s) {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !dom.is_zero_el(&c) {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same context");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same context");
            }
        }
        acc
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let dom = self.ctx.domain();
        let c = dom.canon(c.clone());
        if dom.is_zero_el(&c) {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), dom.mul(a, &c)))
                .filter(|(_, a)| !dom.is_zero_el(a))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let scaled = self.scale(c);
        Polynomial {
            ctx: scaled.ctx,
            terms: scaled
                .terms
                .into_iter()
                .map(|(t, a)| (t.mul(m), a))
                .collect(),
        }
    }

    pub fn mul_i64(&self, n: i64) -> Polynomial {
        self.scale(&self.ctx.domain().from_i64(n))
    }

    /// Apply a ring endomorphism given by per-variable images.
    ///
    /// Every variable occurring in `self` must have an image; images must all
    /// live in the same context as `self`.
    pub fn substitute(&self, images: &HashMap<String, Polynomial>) -> Result<Polynomial> {
        for img in images.values() {
            self.ctx.check_compatible(img.context())?;
        }
        // image powers are shared across terms
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&self.ctx, c.clone());
            for (idx, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.ctx.variables()[idx];
                let img = images
                    .get(name)
                    .ok_or_else(|| Error::MissingImage(name.clone()))?;
                let pw = match powers.entry((idx, e)) {
                    std::collections::hash_map::Entry::Occupied(en) => en.get().clone(),
                    std::collections::hash_map::Entry::Vacant(en) => {
                        en.insert(img.pow(e)).clone()
                    }
                };
                prod = prod.mul(&pw)?;
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// Exact division by a nonzero integer; over Z every coefficient must be
    /// divisible, otherwise the offending term is reported.
    pub fn exact_div_int(&self, n: &BigInt) -> Result<Polynomial> {
        if n.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let dom = self.ctx.domain();
        match dom {
            CoefficientDomain::IntegerZ | CoefficientDomain::RationalQ => {}
            _ => {
                return Err(Error::Domain(format!(
                    "exact_div_int requires ZZ or QQ coefficients, got {dom}"
                )))
            }
        }
        let divisor = dom.from_int(n.clone());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let q = dom.div_exact(c, &divisor).map_err(|_| Error::NotDivisible {
                coeff: c.to_string(),
                monomial: self.display_monomial(m),
                divisor: n.to_string(),
            })?;
            terms.push((m.clone(), q));
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Coefficient-wise passage into `target`, re-canonicalized.
    pub fn reduce_mod(&self, target: &CoefficientDomain) -> Result<Polynomial> {
        let tctx = self.ctx.with_domain(target.clone())?;
        let src = self.ctx.domain();
        let mut pairs = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            pairs.push((m.clone(), src.reduce_into(c, target)?));
        }
        Ok(Polynomial::from_terms(&tctx, pairs))
    }

    /// Lift/lower the presentation level; exponent data is unchanged, only
    /// the implicit denominator `p^level` moves. Round trips are exact.
    pub fn fractional_relabel(&self, delta_level: i64) -> Result<Polynomial> {
        let ctx = self.ctx.shifted_level(delta_level)?;
        Ok(Polynomial {
            ctx,
            terms: self.terms.clone(),
        })
    }

    /// Widen to a context that has the same variables as a prefix (or a
    /// superset in the same order given by `map`: `map[i]` is the index of
    /// old variable `i` in the new context).
    pub fn embed(&self, new_ctx: &RingContext, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ctx.num_vars());
        let pairs = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; new_ctx.num_vars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[map[i]] = e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(new_ctx, pairs)
    }

    fn display_monomial(&self, m: &Monomial) -> String {
        let mut out = String::new();
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&self.ctx.variables()[i]);
            // reduce e / p^level by common powers of p
            let p = self.ctx.prime();
            let mut num = e as u64;
            let mut denom_pow = self.ctx.level();
            while denom_pow > 0 && num.is_multiple_of(p) {
                num /= p;
                denom_pow -= 1;
            }
            if denom_pow > 0 {
                out.push_str(&format!("^{{{}/{}}}", num, pow_str(p, denom_pow)));
            } else if num > 1 {
                out.push_str(&format!("^{num}"));
            }
        }
        if first {
            out.push('1');
        }
        out
    }
}

fn pow_str(p: u64, e: u32) -> String {
    match e {
        0 => "1".to_string(),
        1 => p.to_string(),
        _ => {
            let mut v: u128 = 1;
            for _ in 0..e {
                v = v.saturating_mul(p as u128);
            }
            v.to_string()
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical grammar form at level 0 (`parse` round-trips it); at higher
    /// levels exponents are printed with their fractional denominators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let dom = self.ctx.domain();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { dom.neg(c) } else { c.clone() };
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if dom.is_one_el(&abs) {
                write!(f, "{}", self.display_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.display_monomial(m))?;
            }
        }
        Ok(())
    }
}
