mod common;

use common::{lengths, p, poly_below, valid_spec, CASES};
use proptest::prelude::*;
use tricyclic::catalog;
use tricyclic::dualpair::{
    double_cyclic_dual, dual_spec, orthogonal_all_shifts, psi, separable_dual, DualMethod, DualResult,
};
use tricyclic::gf2poly::gcd;
use tricyclic::linoracle::{dual_oracle, extract_spec, is_triple_cyclic};
use tricyclic::triplecode::{cardinality, encode, generator_matrix, is_separable, validate};
use tricyclic::{BinMatrix, BitRow, BlockLengths, Codeword, Gf2Poly, TripleSpec};

fn deg(f: &Gf2Poly) -> usize {
    f.degree().unwrap()
}

fn xn1(n: usize) -> Gf2Poly {
    Gf2Poly::x_n_minus_one(n)
}

fn div(f: &Gf2Poly, g: &Gf2Poly) -> Gf2Poly {
    f.exact_div(g).unwrap()
}

fn big_b(spec: &TripleSpec) -> Gf2Poly {
    gcd(&[spec.b.clone(), spec.l.clone(), spec.g1.clone()])
}

fn big_a(spec: &TripleSpec) -> Gf2Poly {
    gcd(&[spec.a.clone(), spec.g2.clone()])
}

/// First-block generator of the projection onto blocks `r, s`, by linear algebra.
fn projected_b(spec: &TripleSpec) -> Gf2Poly {
    let l = spec.lengths;
    let shape = lengths(l.r, l.s, 1);
    let g = generator_matrix(spec).unwrap();
    let rows = g
        .rows()
        .iter()
        .map(|row| {
            let mut out = BitRow::zeros(shape.total());
            for j in row.ones().filter(|&j| j < l.r + l.s) {
                out.set(j);
            }
            out
        })
        .collect();
    extract_spec(&BinMatrix::new(shape, rows)).unwrap().b
}

fn random_word(l: BlockLengths, w: (u64, u64, u64)) -> Codeword {
    Codeword::new(
        l,
        &Gf2Poly::from_u64(w.0),
        &Gf2Poly::from_u64(w.1),
        &Gf2Poly::from_u64(w.2),
    )
}

fn message(k: usize, bits: u64) -> Vec<bool> {
    (0..k).map(|i| bits >> (i % 64) & 1 == 1).collect()
}

/// Pairs `(u, v)`: either both random, or `u` in a code and `v` in its dual.
fn word_pair() -> impl Strategy<Value = (Codeword, Codeword)> {
    (
        valid_spec(1, 7),
        any::<bool>(),
        any::<(u64, u64, u64)>(),
        any::<(u64, u64, u64)>(),
    )
        .prop_map(|(spec, from_code, wu, wv)| {
            let l = spec.lengths;
            if from_code {
                let dual = dual_oracle(&spec).unwrap();
                let u = encode(&spec, &message(cardinality(&spec).unwrap(), wu.0)).unwrap();
                let v = encode(&dual, &message(cardinality(&dual).unwrap(), wv.0)).unwrap();
                (u, v)
            } else {
                (random_word(l, wu), random_word(l, wv))
            }
        })
}

fn checked_dual(spec: &TripleSpec) -> DualResult {
    dual_spec(spec).unwrap()
}

/// Asserts the dual degree formulas under the hypotheses they need; returns
/// whether the `â` and `ĝ3` formulas were applicable.
fn check_degree_formulas(spec: &TripleSpec) -> (bool, bool) {
    let dual = checked_dual(spec).dual;
    let l = spec.lengths;
    let (bb, aa) = (big_b(spec), big_a(spec));
    assert_eq!(deg(&dual.b), l.r - deg(&bb));
    let e = &(&div(&spec.a, &aa) * &spec.g1) + &(&div(&spec.g2, &aa) * &spec.l);
    let same_projection = projected_b(spec) == spec.b;
    let tight = same_projection && gcd(&[spec.b.clone(), e]) == bb;
    if same_projection {
        assert_eq!(deg(&dual.a) + deg(&aa) + deg(&spec.b), l.s + deg(&bb), "{spec}");
    }
    if tight {
        assert_eq!(
            deg(&dual.g3) + deg(&spec.g3) + deg(&spec.a) + deg(&spec.b),
            l.t + deg(&bb) + deg(&aa),
            "{spec}"
        );
    }
    (same_projection, tight)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn psi_vanishes_iff_orthogonal_to_all_shifts((u, v) in word_pair()) {
        prop_assert_eq!(psi(&u, &v).is_zero(), orthogonal_all_shifts(&u, &v));
    }

    #[test]
    fn annihilation_on_a_single_block(
        l in common::block_lengths(1, 7),
        block in 0usize..3,
        d in any::<u64>(),
        fu in poly_below(8),
        fv in poly_below(8),
        structured in any::<bool>(),
    ) {
        let n = l.as_array()[block];
        let (cu, cv) = if structured {
            // u a multiple of a divisor of x^n - 1, v a multiple of the reciprocal cofactor.
            let divisors = tricyclic::search::divisors(n).unwrap();
            let g = &divisors[(d as usize) % divisors.len()];
            let h = div(&xn1(n), g).reciprocal();
            (&fu * g, &fv * &h)
        } else {
            (fu, fv)
        };
        let z = Gf2Poly::zero();
        let place = |c: &Gf2Poly| {
            let mut blocks = [z.clone(), z.clone(), z.clone()];
            blocks[block] = c.clone();
            Codeword::new(l, &blocks[0], &blocks[1], &blocks[2])
        };
        let (u, v) = (place(&cu), place(&cv));
        let annihilates = (u.block(block) * &v.block(block).reciprocal()).rem_xn1(n).is_zero();
        prop_assert_eq!(psi(&u, &v).is_zero(), annihilates);
    }

    #[test]
    fn dual_matches_oracle_and_complements(spec in valid_spec(1, 7)) {
        let res = checked_dual(&spec);
        let dual = &res.dual;
        prop_assert!(validate(dual).is_valid());
        prop_assert_eq!(dual, &dual_oracle(&spec).unwrap());
        prop_assert_eq!(cardinality(&spec).unwrap() + cardinality(dual).unwrap(), spec.lengths.total());
        prop_assert!(is_triple_cyclic(&generator_matrix(dual).unwrap()));
        prop_assert_eq!(res.method, DualMethod::ClosedForm);
    }

    #[test]
    fn dual_of_dual_is_the_code(spec in valid_spec(1, 7)) {
        let dual = checked_dual(&spec).dual;
        prop_assert_eq!(&checked_dual(&dual).dual, &spec);
        prop_assert_eq!(dual_oracle(&dual_oracle(&spec).unwrap()).unwrap(), spec);
    }

    #[test]
    fn multipliers_satisfy_their_relations(spec in valid_spec(1, 7)) {
        let res = checked_dual(&spec);
        let xr = xn1(spec.lengths.r);
        let bs = spec.b.reciprocal();
        prop_assert_eq!(&res.dual.g1 * &bs, &res.lambda1 * &xr);
        prop_assert_eq!(&res.dual.l * &bs, &res.beta * &xr);
        prop_assert!(res.g2_relation.plain);
    }

    #[test]
    fn degree_formulas(spec in valid_spec(1, 7)) {
        check_degree_formulas(&spec);
    }

    #[test]
    fn lambda1_and_beta_representatives_do_not_matter(spec in valid_spec(1, 7), c in poly_below(6)) {
        let res = checked_dual(&spec);
        let l = spec.lengths;
        let (xr, bs) = (xn1(l.r), spec.b.reciprocal());
        let modulus = div(&bs, &big_b(&spec).reciprocal());
        let b_hat = &res.dual.b;
        let rebuild = |lambda: &Gf2Poly| div(&(lambda * &xr), &bs).rem(b_hat).unwrap();
        prop_assert_eq!(rebuild(&(&res.lambda1 + &(&c * &modulus))), res.dual.g1.clone());
        prop_assert_eq!(rebuild(&(&res.beta + &(&c * &modulus))), res.dual.l.clone());
    }

    #[test]
    fn lambda2_representative_matters_only_through_l_hat(spec in valid_spec(1, 7), c in poly_below(6)) {
        let res = checked_dual(&spec);
        let dual = &res.dual;
        let l = spec.lengths;
        let (a_s, b_s) = (spec.a.reciprocal(), spec.b.reciprocal());
        let bb_s = big_b(&spec).reciprocal();
        let modulus = div(&(&a_s * &b_s), &(&big_a(&spec).reciprocal() * &projected_b(&spec).reciprocal()));
        let lambda2 = &res.lambda2 + &(&c * &modulus);
        let g2 = div(&(&(&lambda2 * &xn1(l.s)) * &bb_s), &(&a_s * &b_s));
        // Reduce the third generator by multiples of the second, then the first block by b̂.
        let (q, g2_red) = g2.divrem(&dual.a).unwrap();
        let g1_red = (&dual.g1 + &(&q * &dual.l)).rem_xn1(l.r).rem(&dual.b).unwrap();
        prop_assert_eq!(&g2_red, &dual.g2);
        let carry_vanishes = (&q * &dual.l).rem_xn1(l.r).rem(&dual.b).unwrap().is_zero();
        prop_assert_eq!(g1_red == dual.g1, carry_vanishes);
        if dual.l.is_zero() {
            prop_assert_eq!(&g1_red, &dual.g1);
        }
    }

    #[test]
    fn separable_dual_agrees_with_dual_spec(spec in valid_spec(1, 7)) {
        let sep = TripleSpec::separable(spec.lengths, spec.b.clone(), spec.a.clone(), spec.g3.clone());
        prop_assert!(is_separable(&sep).unwrap());
        prop_assert_eq!(separable_dual(&sep).unwrap().dual, checked_dual(&sep).dual);
    }

    #[test]
    fn double_cyclic_dual_agrees_with_embedding(spec in valid_spec(1, 7)) {
        let l = spec.lengths;
        let embedded = TripleSpec::new(
            lengths(l.r, l.s, 1), spec.b.clone(), spec.l.clone(), spec.a.clone(),
            Gf2Poly::zero(), Gf2Poly::zero(), xn1(1),
        );
        prop_assume!(validate(&embedded).is_valid());
        let (b_hat, l_hat, a_hat) = double_cyclic_dual(l.r, l.s, &spec.b, &spec.l, &spec.a).unwrap();
        let oracle = dual_oracle(&embedded).unwrap();
        prop_assert_eq!((b_hat, l_hat, a_hat), (oracle.b, oracle.l, oracle.a));
    }
}

#[test]
fn lambda2_shift_changes_the_dual_when_l_hat_is_nonzero() {
    let spec = catalog::example_10_12_15();
    let res = checked_dual(&spec);
    let dual = &res.dual;
    assert!(!dual.l.is_zero());
    // Adding one modulus to lambda2 adds â to ĝ2; reducing it back carries l̂ into ĝ1.
    let g1_red = (&dual.g1 + &dual.l).rem(&dual.b).unwrap();
    assert_ne!(g1_red, dual.g1);
    let word = Codeword::new(spec.lengths, &g1_red, &dual.g2, &dual.g3);
    let primal = tricyclic::triplecode::spanning_set(&spec).unwrap();
    assert!(primal.iter().any(|c| !orthogonal_all_shifts(c, &word)));
}

#[test]
fn double_cyclic_small_cases() {
    let (x1, x2) = (p("x+1"), p("x^2+1"));
    assert_eq!(
        double_cyclic_dual(2, 2, &x2, &Gf2Poly::zero(), &x2).unwrap(),
        (p("1"), p("0"), p("1"))
    );
    let (b_hat, l_hat, a_hat) = double_cyclic_dual(2, 2, &x1, &p("1"), &x1).unwrap();
    let embedded = TripleSpec::new(lengths(2, 2, 1), x1.clone(), p("1"), x1, p("0"), p("0"), p("x+1"));
    let oracle = dual_oracle(&embedded).unwrap();
    assert_eq!((b_hat, l_hat, a_hat), (oracle.b, oracle.l, oracle.a));
}

#[test]
fn degree_formula_hypotheses_are_exercised() {
    let (mut total, mut a_cases, mut g3_cases) = (0, 0, 0);
    for (r, s, t) in [(3, 3, 3), (2, 4, 6), (4, 4, 2), (6, 3, 3), (7, 1, 7)] {
        for spec in common::all_valid_specs(lengths(r, s, t)) {
            let (a_ok, g3_ok) = check_degree_formulas(&spec);
            total += 1;
            a_cases += a_ok as usize;
            g3_cases += g3_ok as usize;
        }
    }
    assert!(
        g3_cases > 0 && a_cases > g3_cases && a_cases < total,
        "{total} {a_cases} {g3_cases}"
    );
}
