//! Prism specifications and the hypothesis checkers behind the main
//! theorems, plus affine-semigroup (toric) constructors and monomial-lift
//! generic degrees.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::charp::{is_nonzerodivisor, p_root_closed_certificate, RootClosureCertificate};
use crate::coeff::{Coeff, CoefficientDomain};
use crate::context::RingContext;
use crate::delta::{is_delta_stable, FrobeniusLiftSpec};
use crate::error::{Error, Result};
use crate::groebner::{colon, eliminate, ideal_equal, membership, EngineLimits, Ideal, MembershipMode};
use crate::poly::Polynomial;

/// Zariskian-local at `(p, variables)`, or crystalline with `d = p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrismFlavor {
    Zariskian,
    Crystalline,
}

impl fmt::Display for PrismFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrismFlavor::Zariskian => write!(f, "zariskian"),
            PrismFlavor::Crystalline => write!(f, "crystalline"),
        }
    }
}

/// Ambient ring, delta-stable relations `J`, orientation `d`, and prime.
/// The input to all theorem checkers.
#[derive(Debug, Clone)]
pub struct PrismSpec {
    pub prime: u64,
    pub ctx: RingContext,
    pub relations: Ideal,
    pub lift: FrobeniusLiftSpec,
    pub orientation: Polynomial,
    pub flavor: PrismFlavor,
    /// Variable substitutions applied before residue-field unit checks, for
    /// specs whose maximal ideal is not `(p, variables)` as written.
    pub shift: HashMap<String, Polynomial>,
}

impl PrismSpec {
    pub fn new(
        prime: u64,
        ctx: RingContext,
        relations: Ideal,
        lift: FrobeniusLiftSpec,
        orientation: Polynomial,
        flavor: PrismFlavor,
    ) -> Result<PrismSpec> {
        if *ctx.domain() != CoefficientDomain::IntegerZ {
            return Err(Error::Domain("prism specs are presented over ZZ".into()));
        }
        ctx.check_compatible(relations.context())?;
        ctx.check_compatible(orientation.context())?;
        if flavor == PrismFlavor::Crystalline {
            let p = Polynomial::constant_i64(&ctx, prime as i64);
            if orientation != p {
                return Err(Error::Domain(
                    "crystalline flavor requires the orientation d = p".into(),
                ));
            }
        }
        Ok(PrismSpec {
            prime,
            ctx,
            relations,
            lift,
            orientation,
            flavor,
            shift: HashMap::new(),
        })
    }

    pub fn with_shift(mut self, shift: HashMap<String, Polynomial>) -> PrismSpec {
        self.shift = shift;
        self
    }

    /// Relations reduced modulo p.
    pub fn relations_mod_p(&self) -> Result<Ideal> {
        reduce_ideal_mod_p(&self.relations, self.prime)
    }

    pub fn orientation_mod_p(&self) -> Result<Polynomial> {
        let fp = CoefficientDomain::prime_field(self.prime)?;
        self.orientation.reduce_mod(&fp)
    }
}

fn reduce_ideal_mod_p(ideal: &Ideal, p: u64) -> Result<Ideal> {
    let fp = CoefficientDomain::prime_field(p)?;
    let ctx = ideal.context().with_domain(fp.clone())?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.reduce_mod(&fp))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ctx, gens)
}

/// One named check with its outcome and a human-readable detail line.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Verdict {
        Verdict {
            pass: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Verdict {
        Verdict {
            pass: false,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", if self.pass { "pass" } else { "FAIL" }, self.detail)
    }
}

/// Aggregated hypothesis report for the tower theorem.
#[derive(Debug, Clone)]
pub struct HypothesisCertificate {
    pub delta_stable: Verdict,
    pub distinguished: Verdict,
    pub p_torsion_free: Verdict,
    pub d_nzd_mod_p: Verdict,
    pub root_closed: Option<RootClosureCertificate>,
    /// Crystalline branch: reducedness of `A/(p, J)` replaces the level
    /// chain, since the p-th power maps are the Frobenius itself.
    pub mod_p_reduced: Option<Verdict>,
    pub overall: bool,
    pub notes: Vec<String>,
}

impl HypothesisCertificate {
    pub fn root_closed_verdict(&self) -> Verdict {
        if let Some(v) = &self.mod_p_reduced {
            return v.clone();
        }
        match &self.root_closed {
            None => Verdict::fail("p-root closedness could not be checked"),
            Some(c) if c.holds() => Verdict::pass(c.to_string()),
            Some(c) => Verdict::fail(c.to_string()),
        }
    }
}

/// Preprism validation: delta-stability of the relations and a
/// non-degenerate orientation.
pub fn validate_preprism(spec: &PrismSpec, limits: &EngineLimits) -> Result<(Verdict, Verdict)> {
    spec.lift.validate(&spec.ctx)?;
    let stable = if is_delta_stable(&spec.relations, &spec.lift, limits)? {
        Verdict::pass("delta(J) is contained in J (certified per generator)")
    } else {
        Verdict::fail("some delta(generator) is not a member of J")
    };
    let orientation = if spec.orientation.is_zero() {
        Verdict::fail("orientation is zero")
    } else if spec.relations.is_zero_ideal() {
        Verdict::pass("orientation is nonzero, relations are zero")
    } else {
        match membership(
            &spec.orientation,
            &spec.relations,
            MembershipMode::ZpLocal,
            limits,
        ) {
            Ok(c) if c.member => Verdict::fail("orientation lies in the relation ideal"),
            Ok(_) => Verdict::pass("orientation does not lie in the relation ideal"),
            Err(Error::Inconclusive { .. }) => {
                Verdict::pass("orientation not found in the relation ideal (Q-tier inconclusive)")
            }
            Err(e) => return Err(e),
        }
    };
    Ok((stable, orientation))
}

/// Distinguishedness of the orientation: the residue of `delta(d)` at the
/// maximal ideal `(p, variables)` must be a unit of `F_p`. The declared
/// shift is applied first so q-de-Rham-style specs evaluate at their
/// intended maximal ideal.
pub fn distinguished_unit_check(spec: &PrismSpec, _limits: &EngineLimits) -> Result<Verdict> {
    let delta_d = spec.lift.delta(&spec.orientation)?;
    let shifted = if spec.shift.is_empty() {
        delta_d
    } else {
        let mut images = HashMap::new();
        for v in spec.ctx.variables() {
            let img = match spec.shift.get(v) {
                Some(s) => s.clone(),
                None => Polynomial::variable(&spec.ctx, v)?,
            };
            images.insert(v.clone(), img);
        }
        delta_d.substitute(&images)?
    };
    let residue = shifted.constant_term();
    let unit = match residue.as_int() {
        Some(n) => !n.mod_floor_u64(spec.prime).is_zero(),
        None => false,
    };
    if unit {
        Ok(Verdict::pass(format!(
            "delta(d) has unit residue {} mod p at the maximal ideal",
            residue
        )))
    } else {
        Ok(Verdict::fail(format!(
            "delta(d) residue {} vanishes mod p: d is not distinguished",
            residue
        )))
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, m: u64) -> BigInt;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> BigInt {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m))
    }
}

/// Transversality: (i) p-torsion-freeness of `Z[X]/J` via `(J : p) = J`;
/// (ii) the orientation is a non-zero-divisor mod `(p, J)`. Crystalline
/// specs reduce to (i) only.
pub fn transversal_check(spec: &PrismSpec, limits: &EngineLimits) -> Result<(Verdict, Verdict)> {
    let torsion_free = if spec.relations.is_zero_ideal() {
        Verdict::pass("zero relations: the polynomial ring is p-torsion-free")
    } else {
        let quot = colon(&spec.relations, &Polynomial::constant_i64(&spec.ctx, spec.prime as i64), limits)?;
        let equal = match ideal_equal(&quot, &spec.relations, limits) {
            Ok(b) => b,
            // an uncertifiable membership cannot pass a hypothesis gate
            Err(Error::Inconclusive { .. }) => false,
            Err(e) => return Err(e),
        };
        if equal {
            Verdict::pass("(J : p) = J, quotient is p-torsion-free")
        } else {
            let extra = quot
                .generators()
                .iter()
                .find_map(|g| {
                    match membership(g, &spec.relations, MembershipMode::ZpLocal, limits) {
                        Ok(c) if !c.member => Some(g.to_string()),
                        Err(Error::Inconclusive { .. }) => Some(g.to_string()),
                        _ => None,
                    }
                })
                .unwrap_or_default();
            Verdict::fail(format!("(J : p) exceeds J, witness {extra}"))
        }
    };
    let nzd = if spec.flavor == PrismFlavor::Crystalline {
        Verdict::pass("crystalline: d = p vanishes mod p, check reduces to p-torsion-freeness")
    } else {
        let jbar = spec.relations_mod_p()?;
        let dbar = spec.orientation_mod_p()?;
        if dbar.is_zero() {
            Verdict::fail("orientation vanishes mod p but the spec is not crystalline")
        } else if is_nonzerodivisor(&dbar, &jbar, limits)? {
            Verdict::pass("d is a non-zero-divisor mod (p, J)")
        } else {
            let witness = colon(&jbar, &dbar, limits)?
                .generators()
                .iter()
                .find_map(|g| {
                    membership(g, &jbar, MembershipMode::Fp, limits)
                        .ok()
                        .filter(|c| !c.member)
                        .map(|_| g.to_string())
                })
                .unwrap_or_default();
            Verdict::fail(format!("d is a zero-divisor mod (p, J), witness {witness}"))
        }
    };
    Ok((torsion_free, nzd))
}

/// Full hypothesis certificate for the tower theorem: preprism validation,
/// distinguishedness, transversality, and the level-wise p-root-closedness
/// certificate up to level `k`.
pub fn theorem_hypotheses(
    spec: &PrismSpec,
    k: u32,
    limits: &EngineLimits,
) -> Result<HypothesisCertificate> {
    let (delta_stable, orientation) = validate_preprism(spec, limits)?;
    let distinguished = distinguished_unit_check(spec, limits)?;
    let (p_torsion_free, d_nzd_mod_p) = transversal_check(spec, limits)?;
    let mut notes = vec![
        "regular sequence p, d is checked in the stated order; permutability is not assumed absent derived completeness".to_string(),
        "certificates are polynomial-level; they transfer to the completed ring by flatness of completion".to_string(),
    ];
    if !orientation.pass {
        notes.push(format!("orientation check: {}", orientation.detail));
    }
    let mut mod_p_reduced = None;
    let root_closed = if spec.flavor == PrismFlavor::Crystalline {
        // d = p: the level quotients coincide and the p-th power maps are
        // the Frobenius, injective iff A/(p, J) is reduced
        let jbar = spec.relations_mod_p()?;
        mod_p_reduced = Some(if crate::charp::is_reduced(&jbar, limits)? {
            Verdict::pass("crystalline: A/(p, J) is reduced, Frobenius is injective")
        } else {
            let witness = crate::charp::frobenius_preimage(&jbar, limits)?
                .generators()
                .iter()
                .find(|g| {
                    matches!(
                        membership(g, &jbar, MembershipMode::Fp, limits),
                        Ok(c) if !c.member
                    )
                })
                .map(|g| g.to_string())
                .unwrap_or_default();
            Verdict::fail(format!(
                "crystalline: A/(p, J) is not reduced, witness {witness}"
            ))
        });
        None
    } else if d_nzd_mod_p.pass {
        let jbar = spec.relations_mod_p()?;
        let dbar = spec.orientation_mod_p()?;
        Some(p_root_closed_certificate(&jbar, &dbar, k, limits)?)
    } else {
        notes.push("p-root closedness skipped: orientation is a zero-divisor mod (p, J)".into());
        None
    };
    let root_ok = match (&root_closed, &mod_p_reduced) {
        (_, Some(v)) => v.pass,
        (Some(c), None) => c.holds(),
        (None, None) => false,
    };
    let overall = delta_stable.pass
        && orientation.pass
        && distinguished.pass
        && p_torsion_free.pass
        && d_nzd_mod_p.pass
        && root_ok;
    Ok(HypothesisCertificate {
        delta_stable,
        distinguished,
        p_torsion_free,
        d_nzd_mod_p,
        root_closed,
        mod_p_reduced,
        overall,
        notes,
    })
}

/// A finitely generated submonoid of `N^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupSpec {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<u64>>,
}

impl SemigroupSpec {
    pub fn new(generators: Vec<Vec<u64>>) -> Result<SemigroupSpec> {
        if generators.is_empty() {
            return Err(Error::Domain("semigroup needs at least one generator".into()));
        }
        let ambient_dim = generators[0].len();
        if ambient_dim == 0 {
            return Err(Error::Domain("semigroup vectors must be nonempty".into()));
        }
        for v in &generators {
            if v.len() != ambient_dim {
                return Err(Error::Domain("semigroup vectors have mixed lengths".into()));
            }
            if v.iter().all(|&e| e == 0) {
                return Err(Error::Domain("semigroup vectors must be nonzero".into()));
            }
        }
        Ok(SemigroupSpec {
            ambient_dim,
            generators,
        })
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }
}

/// Kernel of `u_j -> t^{a_j}` with the monomial lift attached; the lift on
/// `u_j -> u_j^p` matches `t^h -> t^{ph}` downstairs.
pub fn toric_ideal(
    sg: &SemigroupSpec,
    domain: &CoefficientDomain,
    prime: u64,
    limits: &EngineLimits,
) -> Result<(RingContext, Ideal, FrobeniusLiftSpec)> {
    if !domain.is_field() {
        return Err(Error::Domain(
            "toric kernels are eliminated over a field".into(),
        ));
    }
    let n = sg.ambient_dim;
    let r = sg.num_generators();
    let mut names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    names.extend((1..=r).map(|j| format!("u{j}")));
    let work = RingContext::new(names, domain.clone(), prime)?;
    let mut gens = Vec::with_capacity(r);
    for (j, a) in sg.generators.iter().enumerate() {
        let uj = Polynomial::variable(&work, &format!("u{}", j + 1))?;
        let mut mono = Polynomial::one(&work);
        for (i, &e) in a.iter().enumerate() {
            let ti = Polynomial::variable(&work, &format!("t{}", i + 1))?;
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::Domain("semigroup exponent too large".into()))?;
            mono = mono.mul(&ti.pow(e))?;
        }
        gens.push(uj.sub(&mono)?);
    }
    let graph = Ideal::new(&work, gens)?;
    let tvars: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let kernel = eliminate(&graph, &tvars, limits)?;
    let uctx = kernel.context().clone();
    Ok((uctx, kernel, FrobeniusLiftSpec::monomial(prime)))
}

/// Check that every kernel generator vanishes under `u_j -> t^{a_j}`.
pub fn toric_substitution_check(
    sg: &SemigroupSpec,
    kernel: &Ideal,
    prime: u64,
) -> Result<bool> {
    let n = sg.ambient_dim;
    let domain = kernel.context().domain().clone();
    let tnames: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let tctx = RingContext::new(tnames, domain, prime)?;
    for g in kernel.generators() {
        let mut value = Polynomial::zero(&tctx);
        for (m, c) in g.terms() {
            let mut term = Polynomial::constant(&tctx, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut image = Polynomial::one(&tctx);
                for (i, &a) in sg.generators[j].iter().enumerate() {
                    let ti = Polynomial::variable(&tctx, &format!("t{}", i + 1))?;
                    image = image.mul(&ti.pow(a as u32))?;
                }
                term = term.mul(&image.pow(e))?;
            }
            value = value.add(&term)?;
        }
        if !value.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer lift of field-coefficient generators: balanced representatives
/// for F_p, cleared denominators and content for Q.
pub fn lift_generators_to_z(ideal: &Ideal, prime: u64) -> Result<Ideal> {
    let src = ideal.context().domain().clone();
    let zctx = ideal.context().with_domain(CoefficientDomain::IntegerZ)?;
    let mut out = Vec::new();
    for g in ideal.generators() {
        let pairs: Vec<_> = match &src {
            CoefficientDomain::PrimeField(p) => g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let v = c.as_int().expect("field rep").clone();
                    let half = BigInt::from(*p / 2);
                    let lifted = if v > half { v - BigInt::from(*p) } else { v };
                    (m.clone(), Coeff::Int(lifted))
                })
                .collect(),
            CoefficientDomain::RationalQ => {
                use num_integer::Integer;
                let mut denom_lcm = BigInt::one();
                for (_, c) in g.terms() {
                    denom_lcm = denom_lcm.lcm(c.as_rat().expect("rational").denom());
                }
                let mut nums: Vec<(crate::monomial::Monomial, BigInt)> = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        let r = c.as_rat().unwrap() * BigRational::from_integer(denom_lcm.clone());
                        debug_assert!(r.is_integer());
                        (m.clone(), r.to_integer())
                    })
                    .collect();
                let mut content = BigInt::zero();
                for (_, v) in &nums {
                    content = content.gcd(v);
                }
                if !content.is_one() && !content.is_zero() {
                    for (_, v) in &mut nums {
                        *v /= &content;
                    }
                }
                nums.into_iter().map(|(m, v)| (m, Coeff::Int(v))).collect()
            }
            _ => {
                return Err(Error::Domain(format!(
                    "no integer lift from {src}"
                )))
            }
        };
        out.push(Polynomial::from_terms(&zctx, pairs));
    }
    let _ = prime;
    Ideal::new(&zctx, out)
}

/// Rank over Q of the generator matrix and a simpliciality witness: a
/// rank-sized subset of generators whose cone contains every generator with
/// nonnegative rational coordinates. Exact arithmetic throughout; subsets
/// are enumerated, which caps the generator count.
pub fn simplicial_rank(sg: &SemigroupSpec) -> Result<(u32, bool)> {
    const MAX_GENS: usize = 8;
    if sg.num_generators() > MAX_GENS {
        return Err(Error::ResourceExceeded(format!(
            "simplicial test enumerates subsets of at most {MAX_GENS} generators"
        )));
    }
    let rows: Vec<Vec<BigRational>> = sg
        .generators
        .iter()
        .map(|v| {
            v.iter()
                .map(|&e| BigRational::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let rank = matrix_rank(&rows);
    let mut subset = vec![0usize; rank as usize];
    let simplicial = search_subsets(&rows, rank as usize, 0, 0, &mut subset);
    Ok((rank, simplicial))
}

fn matrix_rank(rows: &[Vec<BigRational>]) -> u32 {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (row..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        let lead = m[row][col].clone();
        let pivot_row = m[row].clone();
        for (i, line) in m.iter_mut().enumerate() {
            if i != row && !line[col].is_zero() {
                let factor = &line[col] / &lead;
                for (x, pv) in line[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = &*x - &factor * pv;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == nrows {
            break;
        }
    }
    rank as u32
}

fn search_subsets(
    rows: &[Vec<BigRational>],
    want: usize,
    start: usize,
    chosen: usize,
    subset: &mut Vec<usize>,
) -> bool {
    if chosen == want {
        return subset_spans_nonneg(rows, subset);
    }
    for i in start..rows.len() {
        subset[chosen] = i;
        if search_subsets(rows, want, i + 1, chosen + 1, subset) {
            return true;
        }
    }
    false
}

/// Does every generator decompose over the subset with coordinates >= 0?
fn subset_spans_nonneg(rows: &[Vec<BigRational>], subset: &[usize]) -> bool {
    for (gi, target) in rows.iter().enumerate() {
        if subset.contains(&gi) {
            continue;
        }
        match solve_exact(rows, subset, target) {
            Some(coords) => {
                if coords.iter().any(|c| c.is_negative()) {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

/// Solve `sum_j x_j * rows[subset[j]] = target` exactly; `None` when
/// inconsistent or underdetermined with dependent columns.
fn solve_exact(
    rows: &[Vec<BigRational>],
    subset: &[usize],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let k = subset.len();
    let n = target.len();
    // augmented system: n equations, k unknowns
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|row| {
            let mut line: Vec<BigRational> = subset
                .iter()
                .map(|&j| rows[j][row].clone())
                .collect();
            line.push(target[row].clone());
            line
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..k {
        let Some(p) = (row..n).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let lead = aug[row][col].clone();
        let pivot_row = aug[row].clone();
        for (i, line) in aug.iter_mut().enumerate() {
            if i != row && !line[col].is_zero() {
                let factor = &line[col] / &lead;
                for (x, pv) in line[col..=k].iter_mut().zip(&pivot_row[col..=k]) {
                    *x = &*x - &factor * pv;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == n {
            break;
        }
    }
    // inconsistent rows
    if aug[row..n].iter().any(|line| !line[k].is_zero()) {
        return None;
    }
    if pivots.len() < k {
        // dependent subset: reject, another subset will be independent
        return None;
    }
    let mut coords = vec![BigRational::zero(); k];
    for &(r, c) in &pivots {
        coords[c] = &aug[r][k] / &aug[r][c];
    }
    Some(coords)
}

/// Generic degree of the lift on a monomial-lifted ring of lattice rank
/// `rank`: `deg phi = p^rank`, and the tower-transition degree is
/// `p * deg phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericDegree {
    pub rank: u32,
    pub phi_degree: BigInt,
    pub transition_degree: BigInt,
}

pub fn generic_degree_for_rank(prime: u64, rank: u32) -> GenericDegree {
    let p = BigInt::from(prime);
    let phi_degree = p.pow(rank);
    GenericDegree {
        rank,
        transition_degree: &phi_degree * &p,
        phi_degree,
    }
}

/// Generic degree for a prism spec with the monomial lift: the lattice is
/// the full exponent lattice, so `deg phi = p^(number of variables)`.
pub fn generic_degree_prism(spec: &PrismSpec) -> Result<GenericDegree> {
    if !spec.lift.is_monomial() {
        return Err(Error::Unsupported(
            "generic degrees are computed for monomial lifts only".into(),
        ));
    }
    Ok(generic_degree_for_rank(spec.prime, spec.ctx.num_vars() as u32))
}

pub fn generic_degree_semigroup(sg: &SemigroupSpec, prime: u64) -> Result<GenericDegree> {
    let (rank, _) = simplicial_rank(sg)?;
    Ok(generic_degree_for_rank(prime, rank))
}
