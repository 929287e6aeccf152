//! Property suites: ring axioms, homomorphism laws, parser round trips,
//! delta-ring identities, Buchberger post-checks on every basis produced,
//! and brute-force oracle agreement on small F_2 instances.

mod common;

use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{enumerate_monomials, fp_ctx, ideal_of, z_ctx, FpRowSpace};
use prismforge_core::coeff::CoefficientDomain;
use prismforge_core::context::RingContext;
use prismforge_core::delta::{beta_poly, FrobeniusLiftSpec};
use prismforge_core::groebner::{
    contract_to_pth_powers, membership, verify_basis, EngineLimits, Ideal, MembershipMode,
};
use prismforge_core::monomial::{Monomial, MonomialOrder};
use prismforge_core::parse_poly;
use prismforge_core::poly::Polynomial;

fn lim() -> EngineLimits {
    EngineLimits::default()
}

/// Random polynomial in the given context: up to `max_terms` terms of
/// degree at most `max_deg` per variable, coefficients in [-9, 9].
fn arb_poly(ctx: RingContext, max_terms: usize, max_deg: u32) -> BoxedStrategy<Polynomial> {
    let n = ctx.num_vars();
    proptest::collection::vec(
        (
            proptest::collection::vec(0..=max_deg, n),
            -9i64..=9,
        ),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let pairs = terms
            .into_iter()
            .map(|(exps, c)| (Monomial::new(exps), ctx.domain().from_i64(c)))
            .collect();
        Polynomial::from_terms(&ctx, pairs)
    })
    .boxed()
}

fn all_domains() -> Vec<RingContext> {
    vec![
        z_ctx(&["X", "Y", "Z", "W"], 2),
        RingContext::new(
            vec!["X".into(), "Y".into(), "Z".into(), "W".into()],
            CoefficientDomain::RationalQ,
            2,
        )
        .unwrap(),
        fp_ctx(&["X", "Y", "Z", "W"], 2),
        fp_ctx(&["X", "Y", "Z", "W"], 5),
        RingContext::new(
            vec!["X".into(), "Y".into(), "Z".into(), "W".into()],
            CoefficientDomain::truncated_padic(3, 2).unwrap(),
            3,
        )
        .unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms_hold_in_every_domain(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for ctx in all_domains() {
            let rand_poly = |rng: &mut StdRng| {
                let pairs = (0..rng.gen_range(0..5))
                    .map(|_| {
                        let exps: Vec<u32> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                        (Monomial::new(exps), ctx.domain().from_i64(rng.gen_range(-9..=9)))
                    })
                    .collect();
                Polynomial::from_terms(&ctx, pairs)
            };
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            let h = rand_poly(&mut rng);
            // commutativity, associativity, distributivity
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(
                f.add(&g).unwrap().add(&h).unwrap(),
                f.add(&g.add(&h).unwrap()).unwrap()
            );
            prop_assert_eq!(
                f.mul(&g).unwrap().mul(&h).unwrap(),
                f.mul(&g.mul(&h).unwrap()).unwrap()
            );
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        f in arb_poly(z_ctx(&["X", "Y", "Z"], 2), 4, 3),
        g in arb_poly(z_ctx(&["X", "Y", "Z"], 2), 4, 3),
        ix in arb_poly(z_ctx(&["X", "Y", "Z"], 2), 3, 2),
        iy in arb_poly(z_ctx(&["X", "Y", "Z"], 2), 3, 2),
        iz in arb_poly(z_ctx(&["X", "Y", "Z"], 2), 3, 2),
    ) {
        let images = HashMap::from([
            ("X".to_string(), ix),
            ("Y".to_string(), iy),
            ("Z".to_string(), iz),
        ]);
        let sum = f.add(&g).unwrap().substitute(&images).unwrap();
        prop_assert_eq!(
            sum,
            f.substitute(&images).unwrap().add(&g.substitute(&images).unwrap()).unwrap()
        );
        let prod = f.mul(&g).unwrap().substitute(&images).unwrap();
        prop_assert_eq!(
            prod,
            f.substitute(&images).unwrap().mul(&g.substitute(&images).unwrap()).unwrap()
        );
    }

    #[test]
    fn reduce_mod_commutes_with_arithmetic(
        f in arb_poly(z_ctx(&["X", "Y"], 3), 5, 4),
        g in arb_poly(z_ctx(&["X", "Y"], 3), 5, 4),
    ) {
        let f3 = CoefficientDomain::prime_field(3).unwrap();
        let lhs = f.mul(&g).unwrap().reduce_mod(&f3).unwrap();
        let rhs = f.reduce_mod(&f3).unwrap().mul(&g.reduce_mod(&f3).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs_sum = f.add(&g).unwrap().reduce_mod(&f3).unwrap();
        let rhs_sum = f.reduce_mod(&f3).unwrap().add(&g.reduce_mod(&f3).unwrap()).unwrap();
        prop_assert_eq!(lhs_sum, rhs_sum);
    }

    #[test]
    fn parse_format_round_trip(f in arb_poly(z_ctx(&["X", "Y", "Z"], 2), 6, 5)) {
        let printed = f.to_string();
        let back = parse_poly(&printed, f.context()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rational_parse_format_round_trip(
        f in arb_poly(
            RingContext::new(vec!["X".into(), "Y".into()], CoefficientDomain::RationalQ, 2).unwrap(),
            5, 4,
        )
    ) {
        // scale by 1/6 so denominators appear
        let sixth = f.context().domain().div_exact(
            &f.context().domain().one(),
            &f.context().domain().from_i64(6),
        ).unwrap();
        let scaled = f.scale(&sixth);
        let back = parse_poly(&scaled.to_string(), f.context());
        // fractional coefficients print as a/b, which the grammar does not
        // cover; integer-coefficient polynomials must round-trip exactly
        if scaled.terms().iter().all(|(_, c)| c.as_rat().unwrap().is_integer()) {
            prop_assert_eq!(back.unwrap(), scaled);
        }
    }

    #[test]
    fn exact_division_inverts_scaling(
        f in arb_poly(z_ctx(&["X", "Y"], 2), 5, 4),
        n in prop_oneof![1i64..=20, -20i64..=-1],
    ) {
        let scaled = f.mul_i64(n);
        prop_assert_eq!(scaled.exact_div_int(&BigInt::from(n)).unwrap(), f);
    }

    #[test]
    fn monomial_orders_are_total_multiplicative_and_respect_one(
        a in proptest::collection::vec(0u32..6, 3),
        b in proptest::collection::vec(0u32..6, 3),
        c in proptest::collection::vec(0u32..6, 3),
    ) {
        use std::cmp::Ordering;
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Elimination(1)] {
            // totality and antisymmetry
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
            // multiplicativity
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), order.cmp(&a, &b));
            // 1 is minimal (well-foundedness for monomial orders)
            let one = Monomial::one(3);
            prop_assert_ne!(order.cmp(&a, &one), Ordering::Less);
            // transitivity spot check
            if order.cmp(&a, &b) == Ordering::Less && order.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(order.cmp(&a, &c), Ordering::Less);
            }
        }
    }
}

#[test]
fn delta_ring_laws_hold_exactly() {
    // 500 random cases split across p in {2, 3, 5}
    let mut rng = StdRng::seed_from_u64(0xde17a);
    let mut cases = 0;
    while cases < 500 {
        for &p in &[2u64, 3, 5] {
            let ctx = z_ctx(&["X", "Y", "Z"], p);
            let spec = FrobeniusLiftSpec::monomial(p);
            let rand_poly = |rng: &mut StdRng| {
                let pairs = (0..rng.gen_range(1..4))
                    .map(|_| {
                        let exps: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                        (
                            Monomial::new(exps),
                            ctx.domain().from_i64(rng.gen_range(-6..=6)),
                        )
                    })
                    .collect();
                Polynomial::from_terms(&ctx, pairs)
            };
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            let df = spec.delta(&f).unwrap();
            let dg = spec.delta(&g).unwrap();
            // phi(f) = f^p + p delta(f)
            let phi_f = spec.phi(&f).unwrap();
            assert_eq!(
                phi_f,
                f.pow(p as u32).add(&df.mul_i64(p as i64)).unwrap(),
                "phi law fails at p={p} for {f}"
            );
            // delta(f + g) = delta f + delta g + (f^p + g^p - (f+g)^p)/p
            let mix = f
                .pow(p as u32)
                .add(&g.pow(p as u32))
                .unwrap()
                .sub(&f.add(&g).unwrap().pow(p as u32))
                .unwrap()
                .exact_div_int(&BigInt::from(p))
                .unwrap();
            assert_eq!(
                spec.delta(&f.add(&g).unwrap()).unwrap(),
                df.add(&dg).unwrap().add(&mix).unwrap(),
                "additive law fails at p={p}"
            );
            // delta(fg) = f^p delta g + g^p delta f + p delta f delta g
            let rhs = f
                .pow(p as u32)
                .mul(&dg)
                .unwrap()
                .add(&g.pow(p as u32).mul(&df).unwrap())
                .unwrap()
                .add(&df.mul(&dg).unwrap().mul_i64(p as i64))
                .unwrap();
            assert_eq!(
                spec.delta(&f.mul(&g).unwrap()).unwrap(),
                rhs,
                "product law fails at p={p}"
            );
            cases += 1;
        }
    }
}

#[test]
fn bases_satisfy_buchberger_and_preserve_their_ideal() {
    // random small ideals over F_2, Q, and Z; every produced basis is
    // post-checked: S-pairs (and G-pairs over Z) reduce to zero, generators
    // reduce to zero, and each basis element is a member of the input ideal
    let mut rng = StdRng::seed_from_u64(0xbeefcafe);
    let contexts = [fp_ctx(&["X", "Y"], 2),
        RingContext::new(
            vec!["X".into(), "Y".into()],
            CoefficientDomain::RationalQ,
            2,
        )
        .unwrap(),
        z_ctx(&["X", "Y"], 2)];
    for round in 0..30 {
        let ctx = &contexts[round % contexts.len()];
        let rand_poly = |rng: &mut StdRng| {
            let pairs = (0..rng.gen_range(1..4))
                .map(|_| {
                    let exps: Vec<u32> = (0..2).map(|_| rng.gen_range(0..4)).collect();
                    (
                        Monomial::new(exps),
                        ctx.domain().from_i64(rng.gen_range(-4..=4)),
                    )
                })
                .collect();
            Polynomial::from_terms(ctx, pairs)
        };
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..4)).map(|_| rand_poly(&mut rng)).collect();
        let ideal = Ideal::new(ctx, gens.clone()).unwrap();
        if ideal.is_zero_ideal() {
            continue;
        }
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let basis = ideal.basis(order, &lim(), true).unwrap();
            verify_basis(&basis, ideal.generators()).unwrap();
            // each basis element must certify against the input generators
            let mode = match ctx.domain() {
                CoefficientDomain::PrimeField(_) => MembershipMode::Fp,
                CoefficientDomain::RationalQ => MembershipMode::Q,
                _ => MembershipMode::Z,
            };
            for b in basis.elements() {
                let cert = membership(b, &ideal, mode, &lim()).unwrap();
                assert!(cert.member, "basis element {b} not certified in {ideal}");
                assert!(cert.verify(b, &ideal).unwrap(), "cofactor identity fails");
            }
        }
    }
}

#[test]
fn strong_z_membership_on_random_combinations() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let ctx = z_ctx(&["X", "Y", "Z"], 2);
    for _ in 0..20 {
        let rand_poly = |rng: &mut StdRng| {
            let pairs = (0..rng.gen_range(1..3))
                .map(|_| {
                    let exps: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                    (
                        Monomial::new(exps),
                        ctx.domain().from_i64(rng.gen_range(-5..=5)),
                    )
                })
                .collect();
            Polynomial::from_terms(&ctx, pairs)
        };
        let gens: Vec<Polynomial> = (0..2).map(|_| rand_poly(&mut rng)).collect();
        let ideal = match Ideal::new(&ctx, gens.clone()) {
            Ok(i) if !i.is_zero_ideal() => i,
            _ => continue,
        };
        // random Z-linear combination with polynomial cofactors
        let mut combo = Polynomial::zero(&ctx);
        for g in ideal.generators() {
            let cof = rand_poly(&mut rng);
            combo = combo.add(&cof.mul(g).unwrap()).unwrap();
        }
        let cert = membership(&combo, &ideal, MembershipMode::Z, &lim()).unwrap();
        assert!(cert.member, "combination {combo} not recognized in {ideal}");
        assert!(cert.verify(&combo, &ideal).unwrap());
    }
}

#[test]
fn f2_membership_agrees_with_row_space_oracle() {
    let mut rng = StdRng::seed_from_u64(0x02ac1e);
    let ctx = fp_ctx(&["X", "Y"], 2);
    for _ in 0..25 {
        let rand_poly = |rng: &mut StdRng| {
            let pairs = (0..rng.gen_range(1..4))
                .map(|_| {
                    let exps: Vec<u32> = (0..2).map(|_| rng.gen_range(0..5)).collect();
                    (
                        Monomial::new(exps),
                        ctx.domain().from_i64(rng.gen_range(0..2)),
                    )
                })
                .collect();
            Polynomial::from_terms(&ctx, pairs)
        };
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..3)).map(|_| rand_poly(&mut rng)).collect();
        let ideal = match Ideal::new(&ctx, gens) {
            Ok(i) if !i.is_zero_ideal() => i,
            _ => continue,
        };
        let oracle = FpRowSpace::build(&ideal, 12, MonomialOrder::Lex);
        for _ in 0..10 {
            let f = rand_poly(&mut rng);
            let engine = membership(&f, &ideal, MembershipMode::Fp, &lim())
                .unwrap()
                .member;
            let brute = oracle.contains(&f);
            assert_eq!(
                engine, brute,
                "membership disagreement for {f} in {ideal}"
            );
        }
    }
}

#[test]
fn contraction_to_pth_powers_invariants() {
    let cases: Vec<(RingContext, Vec<&str>)> = vec![
        (fp_ctx(&["X"], 2), vec!["X^2"]),
        (fp_ctx(&["X"], 2), vec!["X"]),
        (fp_ctx(&["X", "Y"], 2), vec!["X^2 + X*Y + Y^2"]),
        (fp_ctx(&["X", "Y"], 2), vec!["X^2*Y^2", "X^4"]),
        (fp_ctx(&["X", "Y"], 3), vec!["X^3 + Y^3", "X*Y"]),
    ];
    for (ctx, gens) in cases {
        let p = ctx.prime() as u32;
        let ideal = ideal_of(&ctx, &gens);
        let k = contract_to_pth_powers(&ideal, &lim()).unwrap();
        // every returned generator, with variables raised to the p-th power,
        // lies in the original ideal
        for g in k.generators() {
            let substituted = Polynomial::from_terms(
                &ctx,
                g.terms()
                    .iter()
                    .map(|(m, c)| (m.pow(p), c.clone()))
                    .collect(),
            );
            assert!(
                membership(&substituted, &ideal, MembershipMode::Fp, &lim())
                    .unwrap()
                    .member,
                "contraction generator {g} fails the p-th power check"
            );
        }
        // generators whose p-th power lies in I are contained in the result
        for g in ideal.generators() {
            if membership(&g.pow(p), &ideal, MembershipMode::Fp, &lim())
                .unwrap()
                .member
            {
                assert!(
                    membership(g, &k, MembershipMode::Fp, &lim()).unwrap().member,
                    "{g} has p-th power in the ideal but is missing from the contraction"
                );
            }
        }
    }
}

#[test]
fn frobenius_preimage_brute_force_on_small_f2_instances() {
    use prismforge_core::charp::frobenius_preimage;
    // exhaustive: all 2-variable candidates x of degree <= 2 satisfy
    // x in K iff x^2 in I
    let ctx = fp_ctx(&["X", "Y"], 2);
    let instances = vec![
        vec!["X^2"],
        vec!["X^2 + X*Y + Y^2"],
        vec!["X^2*Y^2"],
        vec!["X^3", "Y^2"],
        vec!["X^4 + Y^4"],
    ];
    let candidates = enumerate_monomials(2, 2);
    for gens in instances {
        let ideal = ideal_of(&ctx, &gens);
        let k = frobenius_preimage(&ideal, &lim()).unwrap();
        let oracle = FpRowSpace::build(&ideal, 14, MonomialOrder::Lex);
        // all 2^6 subsets of the degree-<=2 monomials
        for mask in 0u32..(1 << candidates.len()) {
            let pairs = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, m)| (m.clone(), ctx.domain().one()))
                .collect();
            let x = Polynomial::from_terms(&ctx, pairs);
            let brute = oracle.contains(&x.pow(2));
            let via_preimage = membership(&x, &k, MembershipMode::Fp, &lim())
                .unwrap()
                .member;
            assert_eq!(
                via_preimage, brute,
                "preimage disagreement for {x} in {ideal}"
            );
        }
    }
}

#[test]
fn is_reduced_matches_square_free_criterion_on_monomial_ideals() {
    use prismforge_core::charp::{is_reduced, pth_power_injective};
    let mut rng = StdRng::seed_from_u64(0x5af2ee);
    let ctx = fp_ctx(&["X", "Y", "Z", "W"], 2);
    for _ in 0..20 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..4))
            .map(|_| {
                let exps: Vec<u32> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                let exps = if exps.iter().all(|&e| e == 0) {
                    vec![1, 0, 0, 0]
                } else {
                    exps
                };
                Polynomial::term(&ctx, Monomial::new(exps), ctx.domain().one())
            })
            .collect();
        let ideal = Ideal::new(&ctx, gens.clone()).unwrap();
        // a monomial ideal is radical iff, after minimalization, every
        // generator is square-free; equivalently each generator's radical
        // (exponents clamped to 1) lies back in the ideal
        let square_free_criterion = gens.iter().all(|g| {
            let (m, _) = &g.terms()[0];
            let radical = Monomial::new(
                m.exponents().iter().map(|&e| e.min(1)).collect(),
            );
            let rad_poly = Polynomial::term(&ctx, radical, ctx.domain().one());
            membership(&rad_poly, &ideal, MembershipMode::Fp, &lim())
                .unwrap()
                .member
        });
        let reduced = is_reduced(&ideal, &lim()).unwrap();
        assert_eq!(reduced, square_free_criterion, "mismatch for {ideal}");
        // the self-map injectivity is exactly reducedness
        let inj = pth_power_injective(&ideal, &ideal, &lim()).unwrap();
        assert_eq!(inj.injective, reduced);
    }
}

#[test]
fn frobenius_preimage_is_monotone_and_inflationary() {
    use prismforge_core::charp::frobenius_preimage;
    let ctx = fp_ctx(&["X", "Y"], 2);
    let pairs = vec![
        (vec!["X^2"], vec!["X^2", "Y^2"]),
        (vec!["X^2*Y^2"], vec!["X^2*Y^2", "X^4"]),
        (vec!["X^4"], vec!["X^2"]),
    ];
    for (small, big) in pairs {
        let i = ideal_of(&ctx, &small);
        let j = ideal_of(&ctx, &big);
        // only test monotonicity when the inclusion actually holds
        let included = i.generators().iter().all(|g| {
            membership(g, &j, MembershipMode::Fp, &lim()).unwrap().member
        });
        let ki = frobenius_preimage(&i, &lim()).unwrap();
        let kj = frobenius_preimage(&j, &lim()).unwrap();
        if included {
            for g in ki.generators() {
                assert!(
                    membership(g, &kj, MembershipMode::Fp, &lim()).unwrap().member,
                    "monotonicity fails for {g}"
                );
            }
        }
        // inflationary: I is contained in its preimage
        for g in i.generators() {
            assert!(membership(g, &ki, MembershipMode::Fp, &lim()).unwrap().member);
        }
    }
}

#[test]
fn beta_is_delta_mod_f_for_random_exponents() {
    let mut rng = StdRng::seed_from_u64(0xbe7a);
    for &p in &[2u64, 3] {
        let m = p as usize + 1;
        let names: Vec<String> = (1..=m).map(|i| format!("X{i}")).collect();
        let ctx = RingContext::new(names.clone(), CoefficientDomain::IntegerZ, p).unwrap();
        let spec = FrobeniusLiftSpec::monomial(p);
        for _ in 0..6 {
            let exps: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=5)).collect();
            let mut f = Polynomial::zero(&ctx);
            for (i, &n) in exps.iter().enumerate() {
                f = f
                    .add(&Polynomial::variable(&ctx, &names[i]).unwrap().pow(n))
                    .unwrap();
            }
            let delta_f = spec.delta(&f).unwrap();
            let beta = beta_poly(&ctx, &(1..m).collect::<Vec<_>>(), &exps[1..]).unwrap();
            // delta(f) ≡ beta mod (f): the difference reduces to 0 against
            // the (principal, hence strong) basis {f}
            let diff = delta_f.sub(&beta).unwrap();
            let fideal = Ideal::new(&ctx, vec![f.clone()]).unwrap();
            let basis = fideal.basis(MonomialOrder::Lex, &lim(), false).unwrap();
            assert!(
                basis.normal_form(&diff).unwrap().is_zero(),
                "beta does not match delta mod f for p={p}, n={exps:?}"
            );
        }
    }
}
