//! Groebner engines and the ideal operations built on them.
//!
//! Over fields this is Buchberger with the product criterion and full
//! auto-reduction; over the integers the classical S-pair/G-pair extension
//! computes strong bases, whose normal forms decide Z-membership. Both
//! engines can track cofactor expressions of every basis element in terms of
//! the input generators, which is what membership certificates re-verify.

mod engine;
mod ops;

pub use ops::{
    colon, contract_to_pth_powers, eliminate, ideal_equal, initial_ideal, membership,
    MembershipCertificate, MembershipMode, MembershipTier,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::coeff::CoefficientDomain;
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

type BasisCache = Arc<Mutex<HashMap<(MonomialOrder, bool), Arc<GroebnerBasis>>>>;

/// Process-wide counters for resource reporting. Values are deterministic
/// for a deterministic computation.
pub mod stats {
    use std::sync::atomic::{AtomicUsize, Ordering};

    static PAIRS: AtomicUsize = AtomicUsize::new(0);
    static BASES: AtomicUsize = AtomicUsize::new(0);

    pub(crate) fn record_basis(pairs: usize) {
        PAIRS.fetch_add(pairs, Ordering::Relaxed);
        BASES.fetch_add(1, Ordering::Relaxed);
    }

    pub fn pairs_processed() -> usize {
        PAIRS.load(Ordering::Relaxed)
    }

    pub fn bases_computed() -> usize {
        BASES.load(Ordering::Relaxed)
    }

    pub fn reset() {
        PAIRS.store(0, Ordering::Relaxed);
        BASES.store(0, Ordering::Relaxed);
    }
}

/// Caps on the Buchberger loop. Exceeding a cap is an error, never a wrong
/// answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineLimits {
    pub max_pairs: usize,
    pub max_degree: u64,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            max_pairs: 50_000,
            max_degree: 64,
        }
    }
}

/// A finitely generated ideal. Zero generators are pruned; the empty list is
/// the zero ideal. Computed bases are cached per (domain, order).
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: RingContext,
    gens: Vec<Polynomial>,
    cache: BasisCache,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.gens == other.gens
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn new(ctx: &RingContext, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut pruned = Vec::with_capacity(gens.len());
        for g in gens {
            ctx.check_compatible(g.context())?;
            if !g.is_zero() {
                pruned.push(g);
            }
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            gens: pruned,
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn zero(ctx: &RingContext) -> Ideal {
        Ideal {
            ctx: ctx.clone(),
            gens: Vec::new(),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Append extra generators, returning a new ideal (cache not shared).
    pub fn with_extra(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ctx, gens)
    }

    /// Reduced basis in `order`, computed once and cached. `track` requests
    /// cofactor bookkeeping; a tracked basis also serves untracked calls.
    pub fn basis(
        &self,
        order: MonomialOrder,
        limits: &EngineLimits,
        track: bool,
    ) -> Result<Arc<GroebnerBasis>> {
        order.validate_for(self.ctx.num_vars())?;
        if self.ctx.level() != 0 {
            return Err(Error::Domain(
                "Groebner computations run at level 0; fractional levels are presentation-only"
                    .into(),
            ));
        }
        {
            let cache = self.cache.lock().unwrap();
            if let Some(b) = cache.get(&(order, true)) {
                return Ok(b.clone());
            }
            if !track {
                if let Some(b) = cache.get(&(order, false)) {
                    return Ok(b.clone());
                }
            }
        }
        let basis = match self.ctx.domain() {
            CoefficientDomain::IntegerZ => {
                engine::strong_buchberger_z(&self.ctx, &self.gens, order, limits, track)?
            }
            d if d.is_field() => {
                engine::buchberger_field(&self.ctx, &self.gens, order, limits, track)?
            }
            d => {
                return Err(Error::Unsupported(format!(
                    "no Groebner engine over {d}"
                )))
            }
        };
        let basis = Arc::new(basis);
        self.cache
            .lock()
            .unwrap()
            .insert((order, track), basis.clone());
        Ok(basis)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// A computed Groebner basis together with its provenance.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: RingContext,
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    /// Strong basis property over Z (leading coefficients divide).
    strong: bool,
    /// `cofactors[i][j]` with `elements[i] = sum_j cofactors[i][j] * gen[j]`.
    cofactors: Option<Vec<Vec<Polynomial>>>,
    pairs_processed: usize,
}

impl GroebnerBasis {
    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    /// Remainder of `f` on division by this basis. Over a field the result
    /// is zero iff `f` lies in the ideal; over Z the same holds because the
    /// basis is strong.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        engine::normal_form(self, f)
    }

    /// Normal form together with cofactors against the basis elements:
    /// `f = sum_i q_i * elements[i] + remainder`.
    pub fn normal_form_with_cofactors(
        &self,
        f: &Polynomial,
    ) -> Result<(Polynomial, Vec<Polynomial>)> {
        engine::normal_form_with_cofactors(self, f)
    }

    /// Rewrite basis-element cofactors as cofactors over the original
    /// generators. Requires the basis to have been computed with tracking.
    pub fn express_in_generators(&self, q: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let cof = self
            .cofactors
            .as_ref()
            .ok_or_else(|| Error::Unsupported("basis computed without cofactor tracking".into()))?;
        let ngens = cof.first().map(|row| row.len()).unwrap_or(0);
        let mut out = vec![Polynomial::zero(&self.ctx); ngens];
        for (qi, row) in q.iter().zip(cof) {
            if qi.is_zero() {
                continue;
            }
            for (j, t) in row.iter().enumerate() {
                if !t.is_zero() {
                    out[j] = out[j].add(&qi.mul(t)?)?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// Post-hoc Buchberger check: every S-polynomial (and over Z every
/// G-polynomial) of the basis must normal-form to zero, and every input
/// generator must reduce to zero. Used by the test suites on every basis
/// they produce.
pub fn verify_basis(basis: &GroebnerBasis, generators: &[Polynomial]) -> Result<()> {
    engine::verify_basis(basis, generators)
}
