//! Duals of triple cyclic codes: the pairing `psi`, closed-form dual
//! generators with their multipliers, and the double cyclic and separable
//! special cases.
//!
//! For a canonical spec `(b, l, a, g1, g2, g3)` write `B = gcd(b, l, g1)`,
//! `A = gcd(a, g2)`, and let `(b', l')` be the canonical first-block
//! generators of the projection onto blocks `r, s` (whose second generator is
//! `A`). The dual is
//!
//! - `b̂ = (x^r - 1) / B*`,
//! - `â = (x^s - 1) B* / (A* b'*)`,
//! - `ĝ3 = (x^t - 1) / g3'*`, where `(0|0|g3')` generates the subcode of `C`
//!   supported on the third block,
//! - `l̂` from the double cyclic dual of the projection onto blocks `r, s`,
//! - `ĝ2` from the double cyclic dual of the subcode of `C` vanishing on the
//!   first block, punctured to blocks `s, t`,
//! - `ĝ1` by back-substituting `ĝ2, ĝ3` into the orthogonality relations.
//!
//! The multipliers satisfy `ĝ1 b* = lambda1 (x^r - 1)`, `l̂ b* = beta (x^r - 1)`
//! and `ĝ2 a* b* = lambda2 (x^s - 1) B*`.
//!
//! Every dual returned here has been checked against the primal code by
//! shift-orthogonality and dimension count. If a quotient is inexact, an
//! inverse is missing, or the check fails, the dual comes from
//! [`linoracle::dual_oracle`] instead and is tagged
//! [`DualMethod::OracleFallback`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2poly::{ext_gcd, gcd, mod_inverse, Gf2Poly};
use crate::linoracle;
use crate::specfile::format_spec;
use crate::triplecode::{cardinality, shift_sigma, spanning_set, validate, BlockLengths, Codeword, TripleSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMethod {
    ClosedForm,
    OracleFallback,
}

impl fmt::Display for DualMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualMethod::ClosedForm => "closed-form",
            DualMethod::OracleFallback => "oracle-fallback",
        })
    }
}

/// Which of two candidate relations the returned `ĝ2` satisfies:
/// `(x^s-1) B*` divides `ĝ2 a* b*` (`plain`), and the same with the extra
/// factor `A*` (`with_gcd_a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct G2Relation {
    pub plain: bool,
    pub with_gcd_a: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualResult {
    pub dual: TripleSpec,
    /// `ĝ1 b* / (x^r - 1)`, reduced modulo `b*/B*`.
    pub lambda1: Gf2Poly,
    /// `ĝ2 a* b* / ((x^s - 1) B*)`, reduced modulo `a* b* / (A* b'*)`; zero
    /// if that division is not exact.
    pub lambda2: Gf2Poly,
    /// `l̂ b* / (x^r - 1)`, reduced modulo `b*/B*`.
    pub beta: Gf2Poly,
    pub method: DualMethod,
    pub g2_relation: G2Relation,
    /// `gcd(b, g1*)` differs from `gcd(b, g1)*`.
    pub lambda1_modulus_ambiguous: bool,
    /// Whether the literal multiplier formulas (see [`literal_dual`])
    /// reproduce this dual; `None` when one of them is undefined.
    pub literal_formulas_agree: Option<bool>,
    /// Closed-form steps that were undefined or failed verification.
    pub diagnostics: Vec<String>,
}

impl DualResult {
    /// Spec-file text followed by the multipliers and the method tag.
    pub fn to_text(&self) -> String {
        format!(
            "{}lambda1={}\nlambda2={}\nbeta={}\nmethod={}\n",
            format_spec(&self.dual),
            self.lambda1,
            self.lambda2,
            self.beta,
            self.method
        )
    }
}

fn xn1(n: usize) -> Gf2Poly {
    Gf2Poly::x_n_minus_one(n)
}

fn deg(f: &Gf2Poly) -> usize {
    f.degree().expect("nonzero polynomial")
}

fn div(num: &Gf2Poly, den: &Gf2Poly) -> Gf2Poly {
    num.exact_div(den).expect("exact division")
}

/// `v(x^{-1})` in `Z2[x]/(x^n - 1)`.
fn conjugate(v: &Gf2Poly, n: usize) -> Gf2Poly {
    Gf2Poly::from_exponents(v.exponents().map(|e| (n - e % n) % n))
}

/// `sum_i u_i theta_{m/n_i}(x^{n_i}) x^{m - deg v_i - 1} v_i*  mod x^m - 1`,
/// with `m = lcm(r, s, t)`. A block where `v_i = 0` contributes nothing.
pub fn psi(u: &Codeword, v: &Codeword) -> Gf2Poly {
    let lengths = u.lengths();
    let m = lengths.lcm();
    let mut acc = Gf2Poly::zero();
    for (i, n) in lengths.as_array().into_iter().enumerate() {
        let vi = v.block(i);
        let Some(dv) = vi.degree() else { continue };
        let term = &(u.block(i) * &Gf2Poly::theta(m / n, n)) * &vi.reciprocal().shl(m - dv - 1);
        acc = &acc + &term;
    }
    acc.rem_xn1(m)
}

/// `u . sigma^i(v) = 0` for every `i` in `0..lcm(r, s, t)`, by direct inner products.
pub fn orthogonal_all_shifts(u: &Codeword, v: &Codeword) -> bool {
    let m = u.lengths().lcm();
    let ur = u.to_row();
    let mut w = v.clone();
    for _ in 0..m {
        if ur.dot(&w.to_row()) {
            return false;
        }
        w = shift_sigma(&w);
    }
    true
}

fn require_valid(spec: &TripleSpec) -> Result<()> {
    validate(spec).into_result()
}

/// Reduces cross terms into canonical range: `l, g1 mod b`, `g2 mod a` with
/// the quotient carried into `g1`.
fn reduce_cross_terms(lengths: BlockLengths, [b, l, a, g1, g2, g3]: [Gf2Poly; 6]) -> Result<TripleSpec> {
    let BlockLengths { r, s, .. } = lengths;
    let l = l.rem_xn1(r).rem(&b)?;
    let (q, g2) = g2.rem_xn1(s).divrem(&a)?;
    let g1 = (&g1 + &(&q * &l)).rem_xn1(r).rem(&b)?;
    Ok(TripleSpec::new(lengths, b, l, a, g1, g2, g3))
}

/// `true` when `dual` is a valid spec of dimension `n - k` whose every
/// spanning row is orthogonal to every shift of every primal spanning row.
fn verify_dual(primal: &TripleSpec, k: usize, dual: &TripleSpec) -> bool {
    if !validate(dual).is_valid() {
        return false;
    }
    if cardinality(dual).ok() != Some(primal.lengths.total() - k) {
        return false;
    }
    let (Ok(ps), Ok(ds)) = (spanning_set(primal), spanning_set(dual)) else {
        return false;
    };
    ds.iter().all(|d| ps.iter().all(|p| orthogonal_all_shifts(p, d)))
}

/// Dual `(b̂, l̂, â)` of the double cyclic code `<(b|0), (l|a)>` on blocks of
/// lengths `r` and `s`, with `l̂` reduced modulo `b̂`:
/// `b̂ = (x^r-1)/(b,l)*`, `â = (x^s-1)(b,l)*/(a* b*)`, `l̂ = beta (x^r-1)/b*`
/// with `beta = (l*/(b,l)*)^{-1} x^{m - deg a + deg l} mod b*/(b,l)*`.
///
/// `m` may be any common multiple of `r` and `s`.
fn double_dual_closed(
    m: usize,
    r: usize,
    s: usize,
    b: &Gf2Poly,
    l: &Gf2Poly,
    a: &Gf2Poly,
) -> std::result::Result<(Gf2Poly, Gf2Poly, Gf2Poly), String> {
    let bl = gcd(&[b.clone(), l.clone()]).reciprocal();
    let bs = b.reciprocal();
    let b_hat = div(&xn1(r), &bl);
    let a_hat = (&xn1(s) * &bl)
        .exact_div(&(&a.reciprocal() * &bs))
        .ok_or_else(|| format!("a* b* = {} does not divide (x^{s}-1) (b,l)*", &a.reciprocal() * &bs))?;
    let modulus = div(&bs, &bl);
    let beta = match (modulus.degree(), l.degree()) {
        (Some(0), _) => Gf2Poly::zero(),
        (_, Some(dl)) => {
            let unit = div(&l.reciprocal(), &bl);
            let inv = mod_inverse(&unit, &modulus).map_err(|e| format!("beta: {e}"))?;
            let shift = (m + dl - deg(a)) % m;
            inv.mul_mod(&Gf2Poly::monomial(shift), &modulus)
                .expect("nonzero modulus")
        }
        (_, None) => return Err(format!("beta: l = 0 but b*/(b,l)* = {modulus} is not constant")),
    };
    let l_hat = (&beta * &div(&xn1(r), &bs)).rem_xn1(r).rem(&b_hat).expect("nonzero");
    Ok((b_hat, l_hat, a_hat))
}

/// Canonical `(b', l')` of the projection of `C` onto the first two blocks.
/// Its second generator is `A = gcd(a, g2) = u a + v g2`, attained by
/// `u (l|a) + v (g1|g2)`; `b'` collects the first blocks of the codewords that
/// vanish on the second block.
fn two_block_projection(spec: &TripleSpec) -> (Gf2Poly, Gf2Poly) {
    let BlockLengths { r, s, .. } = spec.lengths;
    let (big_a, u, v) = ext_gcd(&spec.a, &spec.g2).expect("a is nonzero");
    let w = (&(&u * &spec.l) + &(&v * &spec.g1)).rem_xn1(r);
    let a_q = div(&spec.a, &big_a);
    let g2_q = div(&spec.g2, &big_a);
    let h = div(&xn1(s), &big_a);
    let b_prime = gcd(&[
        spec.b.clone(),
        (&(&a_q * &w) + &spec.l).rem_xn1(r),
        (&(&g2_q * &w) + &spec.g1).rem_xn1(r),
        (&h * &w).rem_xn1(r),
        xn1(r),
    ]);
    let l_prime = w.rem(&b_prime).expect("nonzero");
    (b_prime, l_prime)
}

/// Generator `g3'` of the subcode `{(0|0|c3)}` of `C`. A multiple
/// `c (g1|g2|g3)` reduces to the third block exactly when
/// `c` is a multiple of `(a/A) b / gcd(b, E)`, `E = (a/A) g1 + (g2/A) l`.
fn third_block_subcode(spec: &TripleSpec) -> Gf2Poly {
    let big_a = spec.gcd_a_g2();
    let a_q = div(&spec.a, &big_a);
    let g2_q = div(&spec.g2, &big_a);
    let e = &(&a_q * &spec.g1) + &(&g2_q * &spec.l);
    let b_q = div(&spec.b, &gcd(&[spec.b.clone(), e]));
    gcd(&[&(&a_q * &b_q) * &spec.g3, xn1(spec.lengths.t)])
}

/// Canonical `(a'', l'', g3'')` of `{(c2|c3) : (0|c2|c3) in C}` on blocks `s, t`.
fn shortened_on_last_two(spec: &TripleSpec) -> (Gf2Poly, Gf2Poly, Gf2Poly) {
    let BlockLengths { s, t, .. } = spec.lengths;
    // G = gcd(b, l) = sigma b + tau l; w (g1|g2|g3) can be cleared on the
    // first block by (b|0|0), (l|a|0) iff w is a multiple of w0 = G/gcd(G, g1).
    let (g, _, tau) = ext_gcd(&spec.b, &spec.l).expect("b is nonzero");
    let gg1 = gcd(&[g.clone(), spec.g1.clone()]);
    let w0 = div(&g, &gg1);
    let g1_q = div(&spec.g1, &gg1);
    let c2 = (&(&w0 * &spec.g2) + &(&(&tau * &g1_q) * &spec.a)).rem_xn1(s);
    let c3 = (&w0 * &spec.g3).rem_xn1(t);
    let h3 = div(&xn1(t), &spec.g3);
    let z0 = div(&h3, &gcd(&[h3.clone(), w0.clone()]));
    let a2 = gcd(&[&spec.a * &div(&spec.b, &g), (&z0 * &c2).rem_xn1(s), xn1(s)]);
    if c3.is_zero() {
        return (a2, Gf2Poly::zero(), xn1(t));
    }
    let (g3_2, rho, _) = ext_gcd(&c3, &xn1(t)).expect("nonzero");
    let l2 = (&rho * &c2).rem_xn1(s).rem(&a2).expect("nonzero");
    (a2, l2, g3_2)
}

/// `ĝ1` from `ĝ2, ĝ3`. With `v̄ = conjugate(v)` and `theta_i = theta_{m/n_i}(x^{n_i})`,
/// orthogonality to `(b|0|0)`, `(l|a|0)`, `(g1|g2|g3)` reads
/// `b v̄1 = 0`, `theta_r l v̄1 = theta_s a v̄2`,
/// `theta_r g1 v̄1 = theta_s g2 v̄2 + theta_t g3 v̄3` modulo `x^m - 1`;
/// a Bezout relation for `B` then isolates `B v̄1`.
fn back_substitute_g1(spec: &TripleSpec, g2_hat: &Gf2Poly, g3_hat: &Gf2Poly, b_hat: &Gf2Poly) -> Option<Gf2Poly> {
    let BlockLengths { r, s, t } = spec.lengths;
    let m = spec.lengths.lcm();
    let big_m = xn1(m);
    let theta = |n: usize| Gf2Poly::theta(m / n, n);
    let v2 = conjugate(g2_hat, s);
    let v3 = conjugate(g3_hat, t);
    let lift = |f: Gf2Poly| f.rem(&big_m).ok()?.exact_div(&theta(r));
    let rl = lift(&(&theta(s) * &spec.a) * &v2)?;
    let rg1 = lift(&(&(&theta(s) * &spec.g2) * &v2) + &(&(&theta(t) * &spec.g3) * &v3))?;
    let (g, _, tau) = ext_gcd(&spec.b, &spec.l).ok()?;
    let (big_b, phi, chi) = ext_gcd(&g, &spec.g1).ok()?;
    let rhs = (&(&(&phi * &tau) * &rl) + &(&chi * &rg1)).rem_xn1(r);
    let v1 = rhs.exact_div(&big_b)?;
    conjugate(&v1, r).rem(b_hat).ok()
}

struct ClosedForm {
    dual: TripleSpec,
    lambda1: Gf2Poly,
    lambda2: Gf2Poly,
    beta: Gf2Poly,
}

fn closed_form(spec: &TripleSpec, k: usize) -> std::result::Result<ClosedForm, String> {
    let BlockLengths { r, s, t } = spec.lengths;
    let m = spec.lengths.lcm();
    let big_b = spec.gcd_bl_g1().reciprocal();
    let big_a = spec.gcd_a_g2().reciprocal();
    let bs = spec.b.reciprocal();
    let as_ = spec.a.reciprocal();

    let (b_prime, l_prime) = two_block_projection(spec);
    let (b_hat, l_hat, a_hat) = double_dual_closed(m, r, s, &b_prime, &l_prime, &spec.gcd_a_g2())
        .map_err(|e| format!("first two blocks: {e}"))?;
    let g3_hat = div(&xn1(t), &third_block_subcode(spec).reciprocal());

    let (a2, l2, g3_2) = shortened_on_last_two(spec);
    let (_, g2_hat, _) = double_dual_closed(m, s, t, &a2, &l2, &g3_2).map_err(|e| format!("last two blocks: {e}"))?;
    let g2_hat = g2_hat.rem(&a_hat).expect("nonzero");
    let g1_hat = back_substitute_g1(spec, &g2_hat, &g3_hat, &b_hat)
        .ok_or_else(|| "g1: back-substitution has no solution".to_string())?;

    let dual = TripleSpec::new(spec.lengths, b_hat, l_hat, a_hat, g1_hat, g2_hat, g3_hat);
    if !verify_dual(spec, k, &dual) {
        return Err(format!("assembled spec {dual} is not the dual"));
    }

    let xr_over_bs = div(&xn1(r), &bs);
    let first_modulus = div(&bs, &big_b);
    let lambda1 = div(&dual.g1, &xr_over_bs).rem(&first_modulus).expect("nonzero");
    let beta = div(&dual.l, &xr_over_bs).rem(&first_modulus).expect("nonzero");
    let lambda2_modulus = (&as_ * &bs).exact_div(&(&big_a * &b_prime.reciprocal()));
    let lambda2 = (&(&dual.g2 * &as_) * &bs)
        .exact_div(&(&xn1(s) * &big_b))
        .zip(lambda2_modulus)
        .map_or_else(Gf2Poly::zero, |(l2, md)| l2.rem(&md).expect("nonzero"));
    Ok(ClosedForm {
        dual,
        lambda1,
        lambda2,
        beta,
    })
}

/// Multipliers from the literal inverse formulas, with `A = gcd(a, g2)`,
/// `B = gcd(b, l, g1)`, `M1 = gcd((b,g1)*/B*, a*/A*)`:
///
/// - `lambda2 = (g2*/A*)^{-1} x^{2m + deg g2 - deg g3} mod a*/A*`,
/// - `lambda1 = (l*/B*)^{-1} (g2*/A*)^{-1} g2* x^{2m + deg l - deg a + deg g2 - deg g3} mod M1`,
/// - `beta = (l*/B*)^{-1} (a*/A*) x^{m + deg l - deg a} mod (b,g1)*/B*`.
///
/// A constant modulus gives a zero multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralMultipliers {
    pub lambda1: Gf2Poly,
    pub lambda2: Gf2Poly,
    pub beta: Gf2Poly,
    /// Moduli of `lambda1`, `lambda2`, `beta`.
    pub moduli: [Gf2Poly; 3],
}

/// `inv(unit) * rest mod modulus`, or zero when the modulus is a constant.
fn reduced_multiplier(unit: &Gf2Poly, rest: &Gf2Poly, modulus: &Gf2Poly) -> Option<Gf2Poly> {
    if modulus.degree() == Some(0) {
        return Some(Gf2Poly::zero());
    }
    let inv = mod_inverse(unit, modulus).ok()?;
    Some(inv.mul_mod(rest, modulus).expect("nonzero modulus"))
}

/// `None` when a required inverse does not exist.
pub fn literal_multipliers(spec: &TripleSpec) -> Option<LiteralMultipliers> {
    let m = spec.lengths.lcm();
    let big_b = spec.gcd_bl_g1().reciprocal();
    let big_a = spec.gcd_a_g2().reciprocal();
    let bg1 = gcd(&[spec.b.clone(), spec.g1.clone()]).reciprocal();
    let (da, dg3) = (deg(&spec.a), deg(&spec.g3));

    let mod2 = div(&spec.a.reciprocal(), &big_a);
    let modb = div(&bg1, &big_b);
    let mod1 = gcd(&[modb.clone(), mod2.clone()]);
    let l_unit = div(&spec.l.reciprocal(), &big_b);
    let g2_unit = div(&spec.g2.reciprocal(), &big_a);

    let lambda2 = match spec.g2.degree() {
        Some(dg2) => reduced_multiplier(&g2_unit, &Gf2Poly::monomial(2 * m + dg2 - dg3), &mod2),
        None => reduced_multiplier(&g2_unit, &Gf2Poly::zero(), &mod2),
    }?;
    let beta = match spec.l.degree() {
        Some(dl) => reduced_multiplier(&l_unit, &(&mod2 * &Gf2Poly::monomial(m + dl - da)), &modb),
        None => reduced_multiplier(&l_unit, &Gf2Poly::zero(), &modb),
    }?;
    let lambda1 = if mod1.degree() == Some(0) {
        Gf2Poly::zero()
    } else {
        let (dl, dg2) = (spec.l.degree()?, spec.g2.degree()?);
        let rest = &spec.g2.reciprocal() * &Gf2Poly::monomial(2 * m + dl + dg2 - da - dg3);
        let x = reduced_multiplier(&l_unit, &Gf2Poly::one(), &mod1)?;
        let y = reduced_multiplier(&g2_unit, &rest, &mod1)?;
        x.mul_mod(&y, &mod1).expect("nonzero modulus")
    };
    Some(LiteralMultipliers {
        lambda1,
        lambda2,
        beta,
        moduli: [mod1, mod2, modb],
    })
}

/// The dual as assembled from the literal quotients
/// `b̂ = (x^r-1)/B*`, `â = (x^s-1)B*/(A* b*)`, `ĝ3 = (x^t-1)B* A*/(a* b* g3*)`,
/// `ĝ1 = lambda1 (x^r-1)/b*`, `l̂ = beta (x^r-1)/b*`, `ĝ2 = lambda2 (x^s-1) B*/(a* b*)`,
/// reduced into canonical range. `None` if a multiplier or quotient is
/// undefined. The result is not checked against the code.
pub fn literal_dual(spec: &TripleSpec) -> Option<TripleSpec> {
    let BlockLengths { r, s, t } = spec.lengths;
    let mult = literal_multipliers(spec)?;
    let big_b = spec.gcd_bl_g1().reciprocal();
    let big_a = spec.gcd_a_g2().reciprocal();
    let bs = spec.b.reciprocal();
    let as_ = spec.a.reciprocal();
    let b_hat = div(&xn1(r), &big_b);
    let a_hat = (&xn1(s) * &big_b).exact_div(&(&big_a * &bs))?;
    let g3_hat = (&(&xn1(t) * &big_b) * &big_a).exact_div(&(&(&as_ * &bs) * &spec.g3.reciprocal()))?;
    let xr_over_bs = div(&xn1(r), &bs);
    let g1_hat = &mult.lambda1 * &xr_over_bs;
    let l_hat = &mult.beta * &xr_over_bs;
    let g2_hat = (&(&mult.lambda2 * &xn1(s)) * &big_b).exact_div(&(&as_ * &bs))?;
    reduce_cross_terms(spec.lengths, [b_hat, l_hat, a_hat, g1_hat, g2_hat, g3_hat]).ok()
}

fn g2_relation(spec: &TripleSpec, dual: &TripleSpec) -> G2Relation {
    let lhs = &(&dual.g2 * &spec.a.reciprocal()) * &spec.b.reciprocal();
    let plain = &xn1(spec.lengths.s) * &spec.gcd_bl_g1().reciprocal();
    let with_gcd_a = &plain * &spec.gcd_a_g2().reciprocal();
    G2Relation {
        plain: plain.divides(&lhs),
        with_gcd_a: with_gcd_a.divides(&lhs),
    }
}

fn lambda1_modulus_ambiguous(spec: &TripleSpec) -> bool {
    gcd(&[spec.b.clone(), spec.g1.reciprocal()]) != gcd(&[spec.b.clone(), spec.g1.clone()]).reciprocal()
}

/// Canonical spec of the dual code.
pub fn dual_spec(spec: &TripleSpec) -> Result<DualResult> {
    require_valid(spec)?;
    let k = cardinality(spec)?;
    let literal = literal_dual(spec);
    let (dual, lambda1, lambda2, beta, method, diagnostics) = match closed_form(spec, k) {
        Ok(cf) => (
            cf.dual,
            cf.lambda1,
            cf.lambda2,
            cf.beta,
            DualMethod::ClosedForm,
            Vec::new(),
        ),
        Err(why) => {
            let dual = linoracle::dual_oracle(spec)?;
            if !verify_dual(spec, k, &dual) {
                return Err(Error::NotTripleCyclic);
            }
            let z = Gf2Poly::zero;
            (dual, z(), z(), z(), DualMethod::OracleFallback, vec![why])
        }
    };
    Ok(DualResult {
        literal_formulas_agree: literal.map(|d| d == dual),
        g2_relation: g2_relation(spec, &dual),
        lambda1_modulus_ambiguous: lambda1_modulus_ambiguous(spec),
        dual,
        lambda1,
        lambda2,
        beta,
        method,
        diagnostics,
    })
}

/// [`dual_spec`] followed by a comparison with the oracle dual.
pub fn dual_spec_cross_checked(spec: &TripleSpec) -> Result<DualResult> {
    let result = dual_spec(spec)?;
    let oracle = linoracle::dual_oracle(spec)?;
    if oracle != result.dual {
        return Err(Error::DualMismatch {
            closed: Box::new(result.dual),
            oracle: Box::new(oracle),
        });
    }
    Ok(result)
}

/// Dual of a separable code: `((x^r-1)/b*, (x^s-1)/a*, (x^t-1)/g3*)`, no cross terms.
pub fn separable_dual(spec: &TripleSpec) -> Result<DualResult> {
    require_valid(spec)?;
    if !(spec.l.is_zero() && spec.g1.is_zero() && spec.g2.is_zero()) {
        return Err(Error::NotSeparable);
    }
    let BlockLengths { r, s, t } = spec.lengths;
    let diag = |n: usize, f: &Gf2Poly| div(&xn1(n), &f.reciprocal());
    let dual = TripleSpec::separable(spec.lengths, diag(r, &spec.b), diag(s, &spec.a), diag(t, &spec.g3));
    if !verify_dual(spec, cardinality(spec)?, &dual) {
        return Err(Error::DualMismatch {
            closed: Box::new(dual),
            oracle: Box::new(linoracle::dual_oracle(spec)?),
        });
    }
    let z = Gf2Poly::zero;
    Ok(DualResult {
        literal_formulas_agree: literal_dual(spec).map(|d| d == dual),
        g2_relation: g2_relation(spec, &dual),
        lambda1_modulus_ambiguous: false,
        dual,
        lambda1: z(),
        lambda2: z(),
        beta: z(),
        method: DualMethod::ClosedForm,
        diagnostics: Vec::new(),
    })
}

/// The triple code with a zero third block of length 1 that carries a double
/// cyclic code.
fn embed_double(r: usize, s: usize, b: &Gf2Poly, l: &Gf2Poly, a: &Gf2Poly) -> Result<TripleSpec> {
    let lengths = BlockLengths::new(r, s, 1)?;
    let z = Gf2Poly::zero;
    Ok(TripleSpec::new(
        lengths,
        b.clone(),
        l.clone(),
        a.clone(),
        z(),
        z(),
        xn1(1),
    ))
}

/// Dual generators `(b̂, l̂, â)` of the double cyclic code generated by
/// `(b|0)` and `(l|a)` on blocks of lengths `r` and `s`, with
/// `b̂ = (x^r-1)/(b,l)*`, `â a* b* = (x^s-1)(b,l)*` and
/// `l̂ b* = beta (x^r-1)`, `beta = (l*/(b,l)*)^{-1} x^{m - deg a + deg l} mod b*/(b,l)*`.
///
/// The result is checked by orthogonality; if the closed form does not apply
/// the dual is computed by linear algebra.
pub fn double_cyclic_dual(
    r: usize,
    s: usize,
    b: &Gf2Poly,
    l: &Gf2Poly,
    a: &Gf2Poly,
) -> Result<(Gf2Poly, Gf2Poly, Gf2Poly)> {
    let embedded = embed_double(r, s, b, l, a)?;
    require_valid(&embedded)?;
    let k = cardinality(&embedded)?;
    let m = embedded.lengths.lcm();
    let closed = double_dual_closed(m, r, s, b, l, a)
        .ok()
        .and_then(|(b_hat, l_hat, a_hat)| {
            let z = Gf2Poly::zero;
            let dual = TripleSpec::new(embedded.lengths, b_hat, l_hat, a_hat, z(), z(), Gf2Poly::one());
            verify_dual(&embedded, k, &dual).then_some(dual)
        });
    let dual = match closed {
        Some(d) => d,
        None => linoracle::dual_oracle(&embedded)?,
    };
    Ok((dual.b, dual.l, dual.a))
}
