//! Buchberger loops: the field engine and the strong engine over Z.
//!
//! Working polynomials are kept sorted descending in the active order so the
//! leading term is O(1). Pair selection is the normal strategy (smallest lcm
//! degree first, ties broken by the lcm and the indices), which makes every
//! run deterministic.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::coeff::{Coeff, CoefficientDomain};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

use super::{EngineLimits, GroebnerBasis};

/// Terms sorted descending in the active order.
#[derive(Debug, Clone)]
struct OrdPoly {
    terms: Vec<(Monomial, Coeff)>,
}

impl OrdPoly {
    fn zero() -> OrdPoly {
        OrdPoly { terms: Vec::new() }
    }

    fn from_poly(p: &Polynomial, order: MonomialOrder) -> OrdPoly {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        OrdPoly { terms }
    }

    fn to_poly(&self, ctx: &RingContext) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lt(&self) -> (&Monomial, &Coeff) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// self - c * X^m * g, merged in the active order.
    fn sub_mul(&self, c: &Coeff, m: &Monomial, g: &OrdPoly, order: MonomialOrder, dom: &CoefficientDomain) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match order.cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let gc = dom.neg(&dom.mul(c, &g.terms[j].1));
                    if !dom.is_zero_el(&gc) {
                        out.push((gm, gc));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = dom.sub(&self.terms[i].1, &dom.mul(c, &g.terms[j].1));
                    if !dom.is_zero_el(&s) {
                        out.push((gm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            let gc = dom.neg(&dom.mul(c, &g.terms[j].1));
            if !dom.is_zero_el(&gc) {
                out.push((gm, gc));
            }
            j += 1;
        }
        OrdPoly { terms: out }
    }

    fn scale(&self, c: &Coeff, dom: &CoefficientDomain) -> OrdPoly {
        OrdPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), dom.mul(a, c)))
                .filter(|(_, a)| !dom.is_zero_el(a))
                .collect(),
        }
    }
}

/// One working element, optionally with its expression in the generators.
#[derive(Debug, Clone)]
struct Elem {
    poly: OrdPoly,
    cof: Option<Vec<Polynomial>>,
}

impl Elem {
    fn sub_mul(&self, c: &Coeff, m: &Monomial, other: &Elem, order: MonomialOrder, dom: &CoefficientDomain, ctx: &RingContext) -> Result<Elem> {
        let poly = self.poly.sub_mul(c, m, &other.poly, order, dom);
        let cof = match (&self.cof, &other.cof) {
            (Some(a), Some(b)) => {
                let mut out = Vec::with_capacity(a.len());
                for (x, y) in a.iter().zip(b) {
                    out.push(x.sub(&y.mul_term(m, c))?);
                }
                Some(out)
            }
            _ => None,
        };
        let _ = ctx;
        Ok(Elem { poly, cof })
    }

    fn scale(&self, c: &Coeff, dom: &CoefficientDomain) -> Elem {
        Elem {
            poly: self.poly.scale(c, dom),
            cof: self
                .cof
                .as_ref()
                .map(|row| row.iter().map(|q| q.scale(c)).collect()),
        }
    }
}

/// Strong divisibility test for a reducer: the monomial divides, and over Z
/// the leading coefficient divides as well.
fn reduces(dom: &CoefficientDomain, lt_g: (&Monomial, &Coeff), m: &Monomial, c: &Coeff) -> bool {
    lt_g.0.divides(m) && dom.divides(lt_g.1, c)
}

/// Full normal form of `f` against `basis`, with optional cofactor rows.
fn reduce_elem(
    f: &Elem,
    basis: &[Elem],
    order: MonomialOrder,
    dom: &CoefficientDomain,
    ctx: &RingContext,
) -> Result<Elem> {
    let mut work = f.clone();
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    'outer: while !work.poly.is_zero() {
        let (m, c) = {
            let (m, c) = work.poly.lt();
            (m.clone(), c.clone())
        };
        for g in basis {
            if g.poly.is_zero() {
                continue;
            }
            let (gm, gc) = g.poly.lt();
            if reduces(dom, (gm, gc), &m, &c) {
                let q = dom.div_exact(&c, gc)?;
                let shift = gm.div(&m);
                work = work.sub_mul(&q, &shift, g, order, dom, ctx)?;
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the remainder
        rem.push((m, c));
        work.poly.terms.remove(0);
    }
    work.poly.terms = rem;
    Ok(work)
}

type PairKey = (u64, Monomial, u8, usize, usize);

fn spair_key(i: usize, j: usize, basis: &[Elem], kind: u8) -> PairKey {
    let (mi, _) = basis[i].poly.lt();
    let (mj, _) = basis[j].poly.lt();
    let l = mi.lcm(mj);
    (l.total_degree(), l.clone(), kind, i, j)
}

const KIND_G: u8 = 0;
const KIND_S: u8 = 1;

struct Loop<'a> {
    ctx: &'a RingContext,
    dom: CoefficientDomain,
    order: MonomialOrder,
    limits: &'a EngineLimits,
    basis: Vec<Elem>,
    pairs: BTreeSet<PairKey>,
    processed: usize,
    over_z: bool,
}

impl<'a> Loop<'a> {
    fn push_pairs_for(&mut self, j: usize) {
        for i in 0..j {
            if self.basis[i].poly.is_zero() {
                continue;
            }
            let (mi, ci) = self.basis[i].poly.lt();
            let (mj, cj) = self.basis[j].poly.lt();
            if self.over_z {
                let a = ci.as_int().unwrap();
                let b = cj.as_int().unwrap();
                if !(a.mod_floor(b).is_zero() || b.mod_floor(a).is_zero()) {
                    self.pairs.insert(spair_key(i, j, &self.basis, KIND_G));
                }
                self.pairs.insert(spair_key(i, j, &self.basis, KIND_S));
            } else {
                // product criterion
                if !mi.is_coprime(mj) {
                    self.pairs.insert(spair_key(i, j, &self.basis, KIND_S));
                }
            }
        }
    }

    fn combination(&self, i: usize, j: usize, kind: u8) -> Result<Elem> {
        let (mi, ci) = {
            let (m, c) = self.basis[i].poly.lt();
            (m.clone(), c.clone())
        };
        let (mj, cj) = {
            let (m, c) = self.basis[j].poly.lt();
            (m.clone(), c.clone())
        };
        let l = mi.lcm(&mj);
        let si = mi.div(&l);
        let sj = mj.div(&l);
        let zero = Elem {
            poly: OrdPoly::zero(),
            cof: self.basis[i]
                .cof
                .as_ref()
                .map(|row| vec![Polynomial::zero(self.ctx); row.len()]),
        };
        if kind == KIND_S {
            if self.over_z {
                let a = ci.as_int().unwrap().clone();
                let b = cj.as_int().unwrap().clone();
                let g = a.gcd(&b);
                let u = Coeff::Int(&b / &g);
                let v = Coeff::Int(&a / &g);
                // u*X^si*f_i - v*X^sj*f_j
                let lhs = zero.sub_mul(&self.dom.neg(&u), &si, &self.basis[i], self.order, &self.dom, self.ctx)?;
                lhs.sub_mul(&v, &sj, &self.basis[j], self.order, &self.dom, self.ctx)
            } else {
                let inv_i = self.dom.inv(&ci)?;
                let inv_j = self.dom.inv(&cj)?;
                let lhs = zero.sub_mul(&self.dom.neg(&inv_i), &si, &self.basis[i], self.order, &self.dom, self.ctx)?;
                lhs.sub_mul(&inv_j, &sj, &self.basis[j], self.order, &self.dom, self.ctx)
            }
        } else {
            // G-polynomial: Bezout combination with leading coefficient gcd(a, b)
            let a = ci.as_int().unwrap().clone();
            let b = cj.as_int().unwrap().clone();
            let e = a.extended_gcd(&b);
            let lhs = zero.sub_mul(
                &self.dom.neg(&Coeff::Int(e.x)),
                &si,
                &self.basis[i],
                self.order,
                &self.dom,
                self.ctx,
            )?;
            lhs.sub_mul(
                &self.dom.neg(&Coeff::Int(e.y)),
                &sj,
                &self.basis[j],
                self.order,
                &self.dom,
                self.ctx,
            )
        }
    }

    fn insert_normalized(&mut self, mut e: Elem) {
        if self.over_z {
            if e.poly.lt().1.is_negative() {
                e = e.scale(&Coeff::Int(BigInt::from(-1)), &self.dom);
            }
        } else {
            let lc = e.poly.lt().1.clone();
            let inv = self.dom.inv(&lc).expect("nonzero leading coefficient");
            e = e.scale(&inv, &self.dom);
        }
        self.basis.push(e);
        self.push_pairs_for(self.basis.len() - 1);
    }

    fn run(&mut self) -> Result<()> {
        while let Some(key) = self.pairs.iter().next().cloned() {
            self.pairs.remove(&key);
            let (_, _, kind, i, j) = key;
            self.processed += 1;
            if self.processed > self.limits.max_pairs {
                return Err(Error::ResourceExceeded(format!(
                    "pair limit {} reached",
                    self.limits.max_pairs
                )));
            }
            let comb = self.combination(i, j, kind)?;
            let red = reduce_elem(&comb, &self.basis, self.order, &self.dom, self.ctx)?;
            if red.poly.is_zero() {
                continue;
            }
            if red.poly.total_degree() > self.limits.max_degree {
                return Err(Error::ResourceExceeded(format!(
                    "degree limit {} exceeded (element of degree {})",
                    self.limits.max_degree,
                    red.poly.total_degree()
                )));
            }
            self.insert_normalized(red);
        }
        Ok(())
    }

    /// Drop elements whose leading term is (strongly) divisible by another's,
    /// then fully reduce every tail. Over Z tails are Euclidean-reduced so
    /// coefficients take their canonical representative.
    fn minimize_and_reduce(&mut self) -> Result<()> {
        let n = self.basis.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            if !keep[i] {
                continue;
            }
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                let (mi, ci) = self.basis[i].poly.lt();
                let (mj, cj) = self.basis[j].poly.lt();
                let dominates = mj.divides(mi) && self.dom.divides(cj, ci);
                let tie = mi == mj && ci == cj;
                // on exact ties keep the earlier element
                if dominates && (!tie || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let survivors: Vec<Elem> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(i, _)| keep[*i])
            .map(|(_, e)| e.clone())
            .collect();
        let mut reduced: Vec<Elem> = survivors.clone();
        for i in 0..survivors.len() {
            let others: Vec<Elem> = reduced
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, e)| e.clone())
                .collect();
            let r = if self.over_z {
                tail_reduce_z(&reduced[i], &others, self.order, &self.dom, self.ctx)?
            } else {
                reduce_elem(&reduced[i], &others, self.order, &self.dom, self.ctx)?
            };
            debug_assert!(!r.poly.is_zero(), "minimal element reduced to zero");
            reduced[i] = r;
        }
        reduced.sort_by(|a, b| self.order.cmp(b.poly.lt().0, a.poly.lt().0));
        self.basis = reduced;
        Ok(())
    }
}

/// Tail reduction over Z: the leading term is kept; tail coefficients are
/// Euclidean-reduced modulo every applicable reducer, leaving remainders in
/// `[0, lc)`.
fn tail_reduce_z(
    f: &Elem,
    basis: &[Elem],
    order: MonomialOrder,
    dom: &CoefficientDomain,
    ctx: &RingContext,
) -> Result<Elem> {
    let mut work = f.clone();
    let mut done: Vec<(Monomial, Coeff)> = vec![work.poly.terms[0].clone()];
    loop {
        // first not-yet-finalized term
        let next = work
            .poly
            .terms
            .iter()
            .find(|(m, _)| !done.iter().any(|(d, _)| d == m))
            .cloned();
        let Some((m, c)) = next else { break };
        let mut progressed = false;
        for g in basis {
            let (gm, gc) = g.poly.lt();
            if !gm.divides(&m) {
                continue;
            }
            let lc = gc.as_int().unwrap();
            let cv = c.as_int().unwrap();
            let q = cv.div_floor(lc);
            if q.is_zero() {
                continue;
            }
            let shift = gm.div(&m);
            work = work.sub_mul(&Coeff::Int(q), &shift, g, order, dom, ctx)?;
            progressed = true;
            break;
        }
        if !progressed {
            done.push((m, c));
        }
    }
    Ok(work)
}

fn initial_elems(
    ctx: &RingContext,
    gens: &[Polynomial],
    order: MonomialOrder,
    track: bool,
) -> Vec<Elem> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| Elem {
            poly: OrdPoly::from_poly(g, order),
            cof: track.then(|| {
                (0..gens.len())
                    .map(|j| {
                        if i == j {
                            Polynomial::one(ctx)
                        } else {
                            Polynomial::zero(ctx)
                        }
                    })
                    .collect()
            }),
        })
        .collect()
}

fn finish(mut lp: Loop<'_>, reduced: bool, strong: bool) -> Result<GroebnerBasis> {
    super::stats::record_basis(lp.processed);
    lp.minimize_and_reduce()?;
    let elements = lp.basis.iter().map(|e| e.poly.to_poly(lp.ctx)).collect();
    let cofactors = if !lp.basis.is_empty() && lp.basis.iter().all(|e| e.cof.is_some()) {
        Some(lp.basis.iter().map(|e| e.cof.clone().unwrap()).collect())
    } else {
        None
    };
    Ok(GroebnerBasis {
        ctx: lp.ctx.clone(),
        elements,
        order: lp.order,
        reduced,
        strong,
        cofactors,
        pairs_processed: lp.processed,
    })
}

pub(super) fn buchberger_field(
    ctx: &RingContext,
    gens: &[Polynomial],
    order: MonomialOrder,
    limits: &EngineLimits,
    track: bool,
) -> Result<GroebnerBasis> {
    debug_assert!(ctx.domain().is_field());
    let mut lp = Loop {
        ctx,
        dom: ctx.domain().clone(),
        order,
        limits,
        basis: Vec::new(),
        pairs: BTreeSet::new(),
        processed: 0,
        over_z: false,
    };
    for e in initial_elems(ctx, gens, order, track) {
        // interreduce inputs as they come in
        let r = reduce_elem(&e, &lp.basis, order, &lp.dom, ctx)?;
        if !r.poly.is_zero() {
            lp.insert_normalized(r);
        }
    }
    lp.run()?;
    finish(lp, true, false)
}

pub(super) fn strong_buchberger_z(
    ctx: &RingContext,
    gens: &[Polynomial],
    order: MonomialOrder,
    limits: &EngineLimits,
    track: bool,
) -> Result<GroebnerBasis> {
    if *ctx.domain() != CoefficientDomain::IntegerZ {
        return Err(Error::Domain(format!(
            "strong bases require ZZ coefficients, got {}",
            ctx.domain()
        )));
    }
    let mut lp = Loop {
        ctx,
        dom: CoefficientDomain::IntegerZ,
        order,
        limits,
        basis: Vec::new(),
        pairs: BTreeSet::new(),
        processed: 0,
        over_z: true,
    };
    for e in initial_elems(ctx, gens, order, track) {
        let r = reduce_elem(&e, &lp.basis, order, &lp.dom, ctx)?;
        if !r.poly.is_zero() {
            lp.insert_normalized(r);
        }
    }
    lp.run()?;
    finish(lp, true, true)
}

pub(super) fn normal_form(basis: &GroebnerBasis, f: &Polynomial) -> Result<Polynomial> {
    basis.ctx.check_compatible(f.context())?;
    let elems: Vec<Elem> = basis
        .elements
        .iter()
        .map(|g| Elem {
            poly: OrdPoly::from_poly(g, basis.order),
            cof: None,
        })
        .collect();
    let start = Elem {
        poly: OrdPoly::from_poly(f, basis.order),
        cof: None,
    };
    let r = reduce_elem(&start, &elems, basis.order, basis.ctx.domain(), &basis.ctx)?;
    Ok(r.poly.to_poly(&basis.ctx))
}

pub(super) fn normal_form_with_cofactors(
    basis: &GroebnerBasis,
    f: &Polynomial,
) -> Result<(Polynomial, Vec<Polynomial>)> {
    basis.ctx.check_compatible(f.context())?;
    let n = basis.elements.len();
    let elems: Vec<Elem> = basis
        .elements
        .iter()
        .enumerate()
        .map(|(i, g)| Elem {
            poly: OrdPoly::from_poly(g, basis.order),
            cof: Some(
                (0..n)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(&basis.ctx)
                        } else {
                            Polynomial::zero(&basis.ctx)
                        }
                    })
                    .collect(),
            ),
        })
        .collect();
    let start = Elem {
        poly: OrdPoly::from_poly(f, basis.order),
        cof: Some(vec![Polynomial::zero(&basis.ctx); n]),
    };
    let r = reduce_elem(&start, &elems, basis.order, basis.ctx.domain(), &basis.ctx)?;
    // f reduced to r by subtracting sum q_i g_i, so f = sum (-cof_i) g_i + r
    let q = r
        .cof
        .unwrap()
        .into_iter()
        .map(|c| c.neg())
        .collect();
    Ok((r.poly.to_poly(&basis.ctx), q))
}

pub(super) fn verify_basis(basis: &GroebnerBasis, generators: &[Polynomial]) -> Result<()> {
    let over_z = *basis.ctx.domain() == CoefficientDomain::IntegerZ;
    for g in generators {
        let nf = normal_form(basis, g)?;
        if !nf.is_zero() {
            return Err(Error::Domain(format!(
                "generator {g} does not reduce to zero against the basis"
            )));
        }
    }
    let elems: Vec<Elem> = basis
        .elements
        .iter()
        .map(|g| Elem {
            poly: OrdPoly::from_poly(g, basis.order),
            cof: None,
        })
        .collect();
    let dom = basis.ctx.domain().clone();
    let limits = EngineLimits {
        max_pairs: usize::MAX,
        max_degree: u64::MAX,
    };
    let lp = Loop {
        ctx: &basis.ctx,
        dom,
        order: basis.order,
        limits: &limits,
        basis: elems,
        pairs: BTreeSet::new(),
        processed: 0,
        over_z,
    };
    for j in 0..lp.basis.len() {
        for i in 0..j {
            for kind in [KIND_S, KIND_G] {
                if kind == KIND_G && !over_z {
                    continue;
                }
                let comb = lp.combination(i, j, kind)?;
                let red = reduce_elem(&comb, &lp.basis, lp.order, &lp.dom, lp.ctx)?;
                if !red.poly.is_zero() {
                    return Err(Error::Domain(format!(
                        "pair ({i}, {j}) fails the Buchberger criterion"
                    )));
                }
            }
        }
    }
    Ok(())
}
