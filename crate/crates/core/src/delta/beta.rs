//! The closed-form polynomial congruent to `delta(X_1^{n_1} + ... + X_m^{n_m})`
//! modulo the sum itself.
//!
//! Writing `alpha = X_2^{n_2} + ... + X_m^{n_m}`, reduction of
//! `delta(f) = -(sum over exponent tuples)` modulo `f` replaces `X_1^{n_1}`
//! by `-alpha`, and expanding `alpha^{e_1}` multinomially yields a double
//! sum over tuples `(f_2..f_m, e_2..e_m)` bounded by `p-1` entrywise with
//! `sum f + sum e = p` and `sum f <= p-1`. The coefficient of each tuple is
//! `-(p-1)!/(prod f_i! prod e_i!) * (-1)^{sum f}` and the monomial is
//! `prod X_i^{n_i (e_i + f_i)}`.

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::Coeff;
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// `beta^(m)` for `m = exponents.len() + 1 >= 3`, evaluated on the context
/// variables `vars[0], ..., vars[m-2]` with exponents `n_2, ..., n_m`.
///
/// The coefficient of `X_2^{n_2 p}` is `(1 + (-1)^p)/p`: 1 for `p = 2`,
/// 0 for odd p.
pub fn beta_poly(ctx: &RingContext, vars: &[usize], exponents: &[u32]) -> Result<Polynomial> {
    if vars.len() != exponents.len() {
        return Err(Error::Domain(
            "one exponent per beta variable is required".into(),
        ));
    }
    let k = vars.len();
    if k < 2 {
        return Err(Error::Domain("beta is defined for m >= 3".into()));
    }
    if exponents.contains(&0) {
        return Err(Error::Domain("beta exponents must be >= 1".into()));
    }
    for &v in vars {
        if v >= ctx.num_vars() {
            return Err(Error::Domain(format!("variable index {v} out of range")));
        }
    }
    let p = ctx.prime() as usize;
    let fact: Vec<BigInt> = {
        let mut f = vec![BigInt::one()];
        for i in 1..=p {
            let prev = f[i - 1].clone();
            f.push(prev * i);
        }
        f
    };

    let mut pairs: Vec<(Monomial, Coeff)> = Vec::new();
    // tuple = (f_2..f_m, e_2..e_m), entries in [0, p-1], total p, sum f <= p-1
    let mut tuple = vec![0usize; 2 * k];
    enumerate(&mut tuple, 0, p, p - 1, &mut |t| {
        let sum_f: usize = t[..k].iter().sum();
        if sum_f > p - 1 {
            return;
        }
        let mut denom = BigInt::one();
        for &e in t {
            denom *= &fact[e];
        }
        let mut coeff = &fact[p - 1] / &denom;
        debug_assert_eq!(&coeff * &denom, fact[p - 1], "multinomial not integral");
        // overall minus sign times (-1)^{sum f}
        if sum_f.is_multiple_of(2) {
            coeff = -coeff;
        }
        let mut exps = vec![0u32; ctx.num_vars()];
        for i in 0..k {
            exps[vars[i]] = exponents[i] * (t[i] + t[k + i]) as u32;
        }
        pairs.push((Monomial::new(exps), Coeff::Int(coeff)));
    });
    Ok(Polynomial::from_terms(ctx, pairs))
}

/// All vectors with entries in `[0, cap]` summing to `remaining`.
fn enumerate(
    tuple: &mut Vec<usize>,
    pos: usize,
    remaining: usize,
    cap: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if pos == tuple.len() {
        if remaining == 0 {
            emit(tuple);
        }
        return;
    }
    for v in 0..=remaining.min(cap) {
        tuple[pos] = v;
        enumerate(tuple, pos + 1, remaining - v, cap, emit);
    }
    tuple[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoefficientDomain;
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
    fn beta_p2_trinomial() {
        // beta^(3) = X2^(2 n2) + X2^n2 X3^n3 + X3^(2 n3)
        let ctx = zctx(&["X2", "X3"], 2);
        for n2 in 1..=4u32 {
            for n3 in 1..=4u32 {
                let b = beta_poly(&ctx, &[0, 1], &[n2, n3]).unwrap();
                let expect = parse_poly(
                    &format!("X2^{} + X2^{}*X3^{} + X3^{}", 2 * n2, n2, n3, 2 * n3),
                    &ctx,
                )
                .unwrap();
                assert_eq!(b, expect, "n2={n2} n3={n3}");
            }
        }
    }

    #[test]
    fn beta_p3_triple_product() {
        // The p = 3 value is the triple product up to the global unit -1:
        // delta(f) mod f carries the (-1)^p factors of the general formula,
        // so beta^(4) = -(X2^n2 + X3^n3)(X3^n3 + X4^n4)(X4^n4 + X2^n2).
        let ctx = zctx(&["X2", "X3", "X4"], 3);
        for n2 in 1..=3u32 {
            for n3 in 1..=3u32 {
                for n4 in 1..=3u32 {
                    let b = beta_poly(&ctx, &[0, 1, 2], &[n2, n3, n4]).unwrap();
                    let product = parse_poly(
                        &format!(
                            "(X2^{n2} + X3^{n3})*(X3^{n3} + X4^{n4})*(X4^{n4} + X2^{n2})"
                        ),
                        &ctx,
                    )
                    .unwrap();
                    assert_eq!(b, product.neg(), "n=({n2},{n3},{n4})");
                }
            }
        }
    }

    #[test]
    fn top_coefficient_depends_on_parity_of_p() {
        // coefficient of X2^(n2 p) is 1 for p = 2 and 0 for p = 3, 5
        for (p, expect) in [(2u64, 1i64), (3, 0), (5, 0)] {
            let ctx = zctx(&["X2", "X3", "X4"], p);
            let b = beta_poly(&ctx, &[0, 1, 2], &[2, 1, 1]).unwrap();
            let mono = Monomial::new(vec![2 * p as u32, 0, 0]);
            assert_eq!(
                b.coeff_of(&mono),
                ctx.domain().from_i64(expect),
                "p = {p}"
            );
        }
    }
}
