//! Test-only oracles, independent of the Groebner engine: row reduction of
//! the span of generator multiples over F_p decides low-degree membership
//! and pins leading-term ideals by pivot monomials.

#![allow(dead_code)]

use prismforge_core::coeff::{Coeff, CoefficientDomain};
use prismforge_core::context::RingContext;
use prismforge_core::groebner::Ideal;
use prismforge_core::monomial::{Monomial, MonomialOrder};
use prismforge_core::poly::Polynomial;

/// Row space of `{m * g : g generator, deg(m * g) <= gen_degree}` over F_p,
/// with columns indexed by monomials sorted descending in `order`.
pub struct FpRowSpace {
    p: u64,
    order: MonomialOrder,
    /// Columns, descending in `order`.
    monomials: Vec<Monomial>,
    index: std::collections::HashMap<Monomial, usize>,
    /// Reduced rows keyed by pivot column.
    rows: std::collections::BTreeMap<usize, Vec<u64>>,
    gen_degree: u64,
}

impl FpRowSpace {
    pub fn build(ideal: &Ideal, gen_degree: u64, order: MonomialOrder) -> FpRowSpace {
        let ctx = ideal.context();
        let p = match ctx.domain() {
            CoefficientDomain::PrimeField(p) => *p,
            d => panic!("oracle needs a prime field, got {d}"),
        };
        let mut monomials = enumerate_monomials(ctx.num_vars(), gen_degree);
        monomials.sort_by(|a, b| order.cmp(b, a));
        let index: std::collections::HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut oracle = FpRowSpace {
            p,
            order,
            monomials,
            index,
            rows: std::collections::BTreeMap::new(),
            gen_degree,
        };
        for g in ideal.generators() {
            let gdeg = g.total_degree();
            if gdeg > gen_degree {
                continue;
            }
            for m in enumerate_monomials(ctx.num_vars(), gen_degree - gdeg) {
                let shifted = g.mul_term(&m, &ctx.domain().one());
                let vec = oracle.to_vector(&shifted);
                oracle.insert(vec);
            }
        }
        oracle
    }

    fn to_vector(&self, f: &Polynomial) -> Vec<u64> {
        let mut v = vec![0u64; self.monomials.len()];
        for (m, c) in f.terms() {
            let idx = *self
                .index
                .get(m)
                .unwrap_or_else(|| panic!("monomial beyond oracle degree bound"));
            let val = match c {
                Coeff::Int(n) => {
                    use num_integer::Integer;
                    let r = n.mod_floor(&num_bigint::BigInt::from(self.p));
                    let (_, digits) = r.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                }
                Coeff::Rat(_) => panic!("oracle expects F_p coefficients"),
            };
            v[idx] = val % self.p;
        }
        v
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        loop {
            let Some(pivot) = v.iter().position(|&x| x != 0) else {
                return;
            };
            match self.rows.get(&pivot) {
                Some(row) => {
                    let factor = (v[pivot] * mod_inv(row[pivot], self.p)) % self.p;
                    for (a, b) in v.iter_mut().zip(row) {
                        *a = (*a + (self.p - factor % self.p) * b) % self.p;
                    }
                }
                None => {
                    // normalize to pivot 1
                    let inv = mod_inv(v[pivot], self.p);
                    for a in v.iter_mut() {
                        *a = (*a * inv) % self.p;
                    }
                    self.rows.insert(pivot, v);
                    return;
                }
            }
        }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let mut start = 0;
        loop {
            let Some(off) = v[start..].iter().position(|&x| x != 0) else {
                return v;
            };
            let pivot = start + off;
            match self.rows.get(&pivot) {
                Some(row) => {
                    let factor = v[pivot] % self.p;
                    for (a, b) in v.iter_mut().zip(row) {
                        *a = (*a + (self.p - factor) * b) % self.p;
                    }
                }
                None => {
                    start = pivot + 1;
                    if start >= v.len() {
                        return v;
                    }
                }
            }
        }
    }

    /// Membership of `f` in the generated span. A `true` answer is a proof;
    /// `false` only rules out certificates of degree up to the build bound,
    /// so callers should build with generous slack.
    pub fn contains(&self, f: &Polynomial) -> bool {
        let v = self.to_vector(f);
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Pivot monomials: the leading monomials (in the build order) of ideal
    /// elements of degree up to the build bound.
    pub fn pivot_monomials(&self) -> Vec<Monomial> {
        self.rows
            .keys()
            .map(|&i| self.monomials[i].clone())
            .collect()
    }

    /// For every monomial of total degree at most `degree`: is it divisible
    /// by some claimed initial-ideal generator iff it is a pivot? This pins
    /// the initial ideal up to that degree.
    pub fn initial_ideal_matches(
        &self,
        claimed: &[Monomial],
        degree: u64,
        num_vars: usize,
    ) -> bool {
        let pivots: std::collections::HashSet<Monomial> =
            self.pivot_monomials().into_iter().collect();
        for m in enumerate_monomials(num_vars, degree) {
            let in_claimed = claimed.iter().any(|g| g.divides(&m));
            let is_pivot = pivots.contains(&m);
            if in_claimed != is_pivot {
                return false;
            }
        }
        true
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// All exponent vectors in `num_vars` variables of total degree <= `degree`.
pub fn enumerate_monomials(num_vars: usize, degree: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    fn rec(exps: &mut Vec<u32>, pos: usize, left: u64, out: &mut Vec<Monomial>) {
        if pos == exps.len() {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for v in 0..=left {
            exps[pos] = v as u32;
            rec(exps, pos + 1, left - v, out);
        }
        exps[pos] = 0;
    }
    rec(&mut exps, 0, degree, &mut out);
    out
}

pub fn fp_ctx(names: &[&str], p: u64) -> RingContext {
    RingContext::new(
        names.iter().map(|s| s.to_string()).collect(),
        CoefficientDomain::prime_field(p).unwrap(),
        p,
    )
    .unwrap()
}

pub fn z_ctx(names: &[&str], p: u64) -> RingContext {
    RingContext::new(
        names.iter().map(|s| s.to_string()).collect(),
        CoefficientDomain::IntegerZ,
        p,
    )
    .unwrap()
}

pub fn ideal_of(ctx: &RingContext, gens: &[&str]) -> Ideal {
    Ideal::new(
        ctx,
        gens.iter()
            .map(|s| prismforge_core::parse_poly(s, ctx).unwrap())
            .collect(),
    )
    .unwrap()
}
