//! Polynomials over GF(2).
//!
//! Coefficients are packed least-significant-degree first into `u64` words, so
//! ring addition is a word-wise XOR. Values are kept trimmed (no trailing zero
//! words), which makes structural equality coincide with polynomial equality.
//! The zero polynomial has no degree; `degree()` returns `None` for it and every
//! caller has to branch on that explicitly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

fn xor_shifted(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
    let (ws, bs) = (shift / WORD, shift % WORD);
    let need = ws + src.len() + 1;
    if acc.len() < need {
        acc.resize(need, 0);
    }
    if bs == 0 {
        for (i, w) in src.iter().enumerate() {
            acc[ws + i] ^= w;
        }
    } else {
        for (i, w) in src.iter().enumerate() {
            acc[ws + i] ^= w << bs;
            acc[ws + i + 1] ^= w >> (WORD - bs);
        }
    }
}

fn bit(words: &[u64], i: usize) -> bool {
    words.get(i / WORD).is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
}

impl Gf2Poly {
    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2Poly { words }
    }

    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { words: vec![1] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / WORD + 1];
        words[k / WORD] = 1 << (k % WORD);
        Gf2Poly { words }
    }

    /// `x^n - 1`, which over GF(2) is `x^n + 1`.
    pub fn x_n_minus_one(n: usize) -> Self {
        &Self::monomial(n) + &Self::one()
    }

    /// Polynomial whose bit `i` is the coefficient of `x^i`.
    pub fn from_u128(bits: u128) -> Self {
        Self::from_words(vec![bits as u64, (bits >> 64) as u64])
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut words = Vec::new();
        for e in exps {
            if words.len() <= e / WORD {
                words.resize(e / WORD + 1, 0);
            }
            words[e / WORD] ^= 1 << (e % WORD);
        }
        Self::from_words(words)
    }

    /// Builds a polynomial from coefficient bits, index `i` being the coefficient of `x^i`.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Self::from_exponents(bits.into_iter().enumerate().filter_map(|(i, b)| b.then_some(i)))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low 128 coefficients as an integer; `None` if the degree is 128 or more.
    pub fn to_u128(&self) -> Option<u128> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0] as u128),
            2 => Some(self.words[0] as u128 | (self.words[1] as u128) << 64),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.words
            .last()
            .map(|w| (self.words.len() - 1) * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        bit(&self.words, i)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut acc = Vec::new();
        xor_shifted(&mut acc, &self.words, k);
        Self::from_words(acc)
    }

    pub fn divrem(&self, d: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(df) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if df < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.words.clone();
        let mut quot = vec![0u64; (df - dd) / WORD + 1];
        let mut top = df;
        loop {
            while top >= dd && !bit(&rem, top) {
                if top == 0 {
                    break;
                }
                top -= 1;
            }
            if top < dd || !bit(&rem, top) {
                break;
            }
            let sh = top - dd;
            quot[sh / WORD] |= 1 << (sh % WORD);
            xor_shifted(&mut rem, &d.words, sh);
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, d: &Gf2Poly) -> Result<Gf2Poly> {
        Ok(self.divrem(d)?.1)
    }

    /// Quotient `self / d` when the division is exact.
    pub fn exact_div(&self, d: &Gf2Poly) -> Option<Gf2Poly> {
        match self.divrem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// `true` when `self` divides `f`. The zero polynomial divides only zero.
    pub fn divides(&self, f: &Gf2Poly) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Reduction modulo `x^n - 1`: coefficient `i` folds onto `i mod n`.
    pub fn rem_xn1(&self, n: usize) -> Gf2Poly {
        assert!(n > 0, "x^0 - 1 is the zero polynomial");
        match self.degree() {
            Some(d) if d >= n => Self::from_exponents(self.exponents().map(|e| e % n)),
            _ => self.clone(),
        }
    }

    /// `x * self` in `Z2[x]/(x^n - 1)`, i.e. a right rotation of the length-`n` coefficient vector.
    pub fn rotate(&self, n: usize, k: usize) -> Gf2Poly {
        Self::from_exponents(self.exponents().map(|e| (e % n + k) % n))
    }

    pub fn mul_mod(&self, other: &Gf2Poly, m: &Gf2Poly) -> Result<Gf2Poly> {
        (self * other).rem(m)
    }

    /// `x^e mod m` by square-and-multiply.
    pub fn x_pow_mod(e: usize, m: &Gf2Poly) -> Result<Gf2Poly> {
        let mut result = Self::one().rem(m)?;
        let mut base = Self::monomial(1).rem(m)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_mod(&base, m)?;
            }
            base = base.mul_mod(&base, m)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// `x^deg(f) f(1/x)`: the coefficient vector reversed over `0..=deg f`.
    /// The reciprocal of zero is zero.
    pub fn reciprocal(&self) -> Gf2Poly {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self::from_exponents(self.exponents().map(|e| d - e)),
        }
    }

    /// `1 + x^step + x^{2 step} + ... + x^{(k-1) step}`.
    pub fn theta(k: usize, step: usize) -> Gf2Poly {
        Self::from_exponents((0..k).map(|i| i * step))
    }

    pub fn to_bitstring(&self) -> String {
        match self.degree() {
            None => "0".to_string(),
            Some(d) => self.to_bitstring_width(d + 1),
        }
    }

    /// LSB-first bits padded (or truncated) to `width`.
    pub fn to_bitstring_width(&self, width: usize) -> String {
        (0..width).map(|i| if self.coeff(i) { '1' } else { '0' }).collect()
    }

    pub fn parse(text: &str) -> Result<Gf2Poly> {
        let text = text.trim();
        let err = |message: String| Error::Parse { line: None, message };
        if text.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        if text.bytes().all(|c| c == b'0' || c == b'1') {
            return Ok(Self::from_bits(text.bytes().map(|c| c == b'1')));
        }
        let mut seen = std::collections::BTreeSet::new();
        for term in text.split('+') {
            let term = term.trim();
            let exp = if term == "1" {
                0
            } else if term == "x" {
                1
            } else if let Some(e) = term.strip_prefix("x^") {
                e.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad exponent in term '{term}'")))?
            } else {
                return Err(err(format!("bad term '{term}' in '{text}'")));
            };
            if !seen.insert(exp) {
                return Err(err(format!("duplicate term '{term}' in '{text}'")));
            }
        }
        Ok(Self::from_exponents(seen))
    }
}

/// Gcd of two polynomials by Euclid; `gcd(0, 0) = 0`.
pub fn gcd2(f: &Gf2Poly, g: &Gf2Poly) -> Gf2Poly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a
}

/// Gcd of a sequence, folded left to right; zero entries are skipped and the
/// gcd of an all-zero sequence is zero.
pub fn gcd(fs: &[Gf2Poly]) -> Gf2Poly {
    fs.iter()
        .filter(|f| !f.is_zero())
        .fold(Gf2Poly::zero(), |acc, f| gcd2(&acc, f))
}

/// Returns `(d, u, v)` with `d = gcd(f, g) = u f + v g`.
pub fn ext_gcd(f: &Gf2Poly, g: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly, Gf2Poly)> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Gf2Poly::one(), Gf2Poly::zero());
    let (mut t0, mut t1) = (Gf2Poly::zero(), Gf2Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = &s0 + &(&q * &s1);
        let t = &t0 + &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    Ok((r0, s0, t0))
}

/// `w` with `w f = 1 (mod modulus)`.
pub fn mod_inverse(f: &Gf2Poly, modulus: &Gf2Poly) -> Result<Gf2Poly> {
    match modulus.degree() {
        None => return Err(Error::DivisionByZero),
        Some(0) => return Err(Error::TrivialModulus),
        _ => {}
    }
    let reduced = f.rem(modulus)?;
    let (d, u, _) = ext_gcd(&reduced, modulus)?;
    if !d.is_one() {
        return Err(Error::NotInvertible { gcd: d });
    }
    u.rem(modulus)
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Gf2Poly::from_words(words)
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (sparse, dense) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if sparse.is_zero() {
            return Gf2Poly::zero();
        }
        let mut acc = Vec::with_capacity(self.words.len() + rhs.words.len() + 1);
        for e in sparse.exponents() {
            xor_shifted(&mut acc, &dense.words, e);
        }
        Gf2Poly::from_words(acc)
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}

/// Orders by degree first (zero smallest), then by coefficients from the top.
impl Ord for Gf2Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Gf2Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        let terms: Vec<String> = exps
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gf2Poly::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("1+x") + &p("x+x^2"), p("1+x^2"));
        let f = p("x^5+x^2+1");
        assert_eq!(&f + &Gf2Poly::zero(), f);
        assert!((&f + &f).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x+1") * &p("x^3+x^2+1"), p("x^4+x^2+x+1"));
        assert_eq!(&p("x+1") * &p("x^3+x+1"), p("x^4+x^3+x^2+1"));
        assert!((&p("x^3+x") * &Gf2Poly::zero()).is_zero());
        // spanning row "1 1 1 0 1 0 0"
        assert_eq!((&p("x+1") * &p("x^3+x^2+1")).to_bitstring_width(7), "1110100");
    }

    #[test]
    fn mul_crosses_word_boundary() {
        let f = Gf2Poly::monomial(63);
        let g = &Gf2Poly::monomial(70) + &Gf2Poly::one();
        assert_eq!(&f * &g, &Gf2Poly::monomial(133) + &Gf2Poly::monomial(63));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = Gf2Poly::x_n_minus_one(7).divrem(&(&p("x+1") * &p("x^3+x+1"))).unwrap();
        assert_eq!(q, p("x^3+x^2+1"));
        assert!(r.is_zero());

        let f = p("x^9+x^4+1");
        assert_eq!(f.divrem(&Gf2Poly::one()).unwrap(), (f.clone(), Gf2Poly::zero()));
        assert_eq!(p("x^2+1").divrem(&p("x^3+1")).unwrap(), (Gf2Poly::zero(), p("x^2+1")));
    }

    #[test]
    fn divrem_by_zero_is_an_error() {
        assert_eq!(p("x").divrem(&Gf2Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let g = gcd(&[p("x^4+x^2+x+1"), p("x^2+1"), p("x+1")]);
        assert_eq!(g, p("x+1"));
        let g = gcd(&[p("x^6+1"), p("x^5+x^4+x^2+x")]);
        assert_eq!(g, p("x^4+x^3+x+1"));
        assert_eq!(g, &(&p("x+1") * &p("x+1")) * &p("x^2+x+1"));
        let f = p("x^3+x+1");
        assert_eq!(gcd(&[Gf2Poly::zero(), f.clone()]), f);
        assert!(gcd(&[Gf2Poly::zero(), Gf2Poly::zero()]).is_zero());
    }

    #[test]
    fn ext_gcd_examples() {
        assert_eq!(
            ext_gcd(&p("x"), &p("x+1")).unwrap(),
            (Gf2Poly::one(), Gf2Poly::one(), Gf2Poly::one())
        );

        let f = p("x^4+x+1");
        let (d, u, v) = ext_gcd(&f, &f).unwrap();
        assert_eq!(d, f);
        assert_eq!(&(&u * &f) + &(&v * &f), f);

        let f = p("x^3+x+1");
        let g = Gf2Poly::x_n_minus_one(7);
        let (d, u, v) = ext_gcd(&f, &g).unwrap();
        assert_eq!(
            (d.clone(), u.clone(), v.clone()),
            (f.clone(), Gf2Poly::one(), Gf2Poly::zero())
        );
        assert_eq!(&(&u * &f) + &(&v * &g), d);

        assert_eq!(ext_gcd(&Gf2Poly::zero(), &Gf2Poly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("x^3+x+1").reciprocal(), p("x^3+x^2+1"));
        assert_eq!(p("x^6+x^5+x+1").reciprocal(), p("x^6+x^5+x+1"));
        assert!(Gf2Poly::zero().reciprocal().is_zero());
        // x | f loses degree
        assert_eq!(p("x^3+x").reciprocal(), p("x^2+1"));
    }

    #[test]
    fn theta_examples() {
        let th = Gf2Poly::theta(3, 2);
        assert_eq!(th, p("1+x^2+x^4"));
        assert_eq!(&th * &p("x^2+1"), Gf2Poly::x_n_minus_one(6));
        assert_eq!(Gf2Poly::theta(1, 5), Gf2Poly::one());
        assert_eq!(Gf2Poly::theta(7, 1), p("x^6+x^5+x^4+x^3+x^2+x+1"));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(&p("x"), &p("x+1")).unwrap(), Gf2Poly::one());
        let w = mod_inverse(&p("x"), &p("x^2+x+1")).unwrap();
        assert_eq!(w, p("x+1"));
        assert!(p("x").mul_mod(&w, &p("x^2+x+1")).unwrap().is_one());
        assert_eq!(
            mod_inverse(&p("x+1"), &p("x^2+1")),
            Err(Error::NotInvertible { gcd: p("x+1") })
        );
        assert_eq!(mod_inverse(&p("x"), &Gf2Poly::one()), Err(Error::TrivialModulus));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("11101"), p("x^4+x^2+x+1"));
        assert_eq!(p("1 + x^2 + x").to_string(), "x^2+x+1");
        assert_eq!(p("0").to_string(), "0");
        assert!(p("0").is_zero());
        assert_eq!(p("x^4+x^2+x+1").to_bitstring(), "11101");
        assert!(Gf2Poly::parse("x+x").is_err());
        assert!(Gf2Poly::parse("x^a").is_err());
        assert!(Gf2Poly::parse("").is_err());
        assert!(Gf2Poly::parse("2x").is_err());
    }

    #[test]
    fn degree_of_zero_is_undefined() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(Gf2Poly::one().degree(), Some(0));
        assert_eq!(Gf2Poly::monomial(64).degree(), Some(64));
    }

    #[test]
    fn rem_xn1_folds_exponents() {
        assert_eq!(p("x^7+x^2").rem_xn1(7), p("x^2+1"));
        assert_eq!(p("x^3+x").rotate(4, 1), p("x^4+x^2").rem_xn1(4));
        assert_eq!(p("x^3").rotate(4, 1), Gf2Poly::one());
    }

    #[test]
    fn x_pow_mod_matches_direct_reduction() {
        let m = p("x^5+x^2+1");
        for e in 0..40 {
            assert_eq!(
                Gf2Poly::x_pow_mod(e, &m).unwrap(),
                Gf2Poly::monomial(e).rem(&m).unwrap()
            );
        }
    }

    #[test]
    fn ordering_is_degree_first() {
        let mut v = vec![p("x^2"), p("1"), Gf2Poly::zero(), p("x+1"), p("x^2+1")];
        v.sort();
        assert_eq!(v, vec![Gf2Poly::zero(), p("1"), p("x+1"), p("x^2"), p("x^2+1")]);
    }
}
