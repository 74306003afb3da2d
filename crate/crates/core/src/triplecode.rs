//! The code model: a Z2-triple cyclic code of block length `(r, s, t)` given by
//! its canonical generators `(b|0|0), (l|a|0), (g1|g2|g3)`.
//!
//! A spec is canonical when `b | x^r-1`, `a | x^s-1`, `g3 | x^t-1`, the cross
//! terms are reduced (`deg l, deg g1 < deg b` and `deg g2 < deg a`) and the three
//! divisibility conditions tying the blocks together hold. Under those
//! conditions the shifts `x^i (b|0|0)`, `x^i (l|a|0)`, `x^i (g1|g2|g3)` form a
//! basis of the code, and the spec is the unique canonical description of it.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2poly::{gcd, Gf2Poly};
use crate::linoracle;
use crate::matrix::{BinMatrix, BitRow};

/// Block lengths `(r, s, t)`, all positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BlockLengths {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

fn lcm(a: usize, b: usize) -> usize {
    fn g(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            g(b, a % b)
        }
    }
    a / g(a, b) * b
}

impl BlockLengths {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        if r == 0 || s == 0 || t == 0 {
            return Err(Error::ZeroLength { r, s, t });
        }
        Ok(BlockLengths { r, s, t })
    }

    pub fn total(&self) -> usize {
        self.r + self.s + self.t
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.r, self.s, self.t]
    }

    /// Column offset of block `i`.
    pub fn offset(&self, i: usize) -> usize {
        match i {
            0 => 0,
            1 => self.r,
            2 => self.r + self.s,
            _ => panic!("block index {i} out of range"),
        }
    }

    /// `lcm(r, s, t)`, the order of the simultaneous shift on generic words.
    pub fn lcm(&self) -> usize {
        lcm(lcm(self.r, self.s), self.t)
    }

    pub(crate) fn format_row(&self, row: &BitRow) -> String {
        let bits = row.to_bitstring();
        let (r, s) = (self.r, self.s);
        format!("{} | {} | {}", &bits[..r], &bits[r..r + s], &bits[r + s..])
    }
}

impl fmt::Display for BlockLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

/// Canonical generator tuple of a Z2-triple cyclic code.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TripleSpec {
    pub lengths: BlockLengths,
    pub b: Gf2Poly,
    pub l: Gf2Poly,
    pub a: Gf2Poly,
    pub g1: Gf2Poly,
    pub g2: Gf2Poly,
    pub g3: Gf2Poly,
}

impl TripleSpec {
    pub fn new(
        lengths: BlockLengths,
        b: Gf2Poly,
        l: Gf2Poly,
        a: Gf2Poly,
        g1: Gf2Poly,
        g2: Gf2Poly,
        g3: Gf2Poly,
    ) -> Self {
        TripleSpec {
            lengths,
            b,
            l,
            a,
            g1,
            g2,
            g3,
        }
    }

    /// `C_r x C_s x C_t` with the given block generators.
    pub fn separable(lengths: BlockLengths, b: Gf2Poly, a: Gf2Poly, g3: Gf2Poly) -> Self {
        Self::new(lengths, b, Gf2Poly::zero(), a, Gf2Poly::zero(), Gf2Poly::zero(), g3)
    }

    /// The code `{0}`: every block generator is `x^n - 1`.
    pub fn zero_code(lengths: BlockLengths) -> Self {
        Self::separable(
            lengths,
            Gf2Poly::x_n_minus_one(lengths.r),
            Gf2Poly::x_n_minus_one(lengths.s),
            Gf2Poly::x_n_minus_one(lengths.t),
        )
    }

    /// The whole space: every block generator is `1`.
    pub fn full_space(lengths: BlockLengths) -> Self {
        Self::separable(lengths, Gf2Poly::one(), Gf2Poly::one(), Gf2Poly::one())
    }

    pub fn h1(&self) -> Option<Gf2Poly> {
        Gf2Poly::x_n_minus_one(self.lengths.r).exact_div(&self.b)
    }

    pub fn h2(&self) -> Option<Gf2Poly> {
        Gf2Poly::x_n_minus_one(self.lengths.s).exact_div(&self.a)
    }

    pub fn h3(&self) -> Option<Gf2Poly> {
        Gf2Poly::x_n_minus_one(self.lengths.t).exact_div(&self.g3)
    }

    /// `gcd(b, l, g1)`, the generator of the projection onto the first block.
    pub fn gcd_bl_g1(&self) -> Gf2Poly {
        gcd(&[self.b.clone(), self.l.clone(), self.g1.clone()])
    }

    /// `gcd(a, g2)`.
    pub fn gcd_a_g2(&self) -> Gf2Poly {
        gcd(&[self.a.clone(), self.g2.clone()])
    }

    /// `deg b - deg gcd(b, l, g1)`; `None` if `b = 0`.
    pub fn k1(&self) -> Option<usize> {
        Some(self.b.degree()? - self.gcd_bl_g1().degree()?)
    }

    /// `deg a + deg b - deg gcd(b, l, g1) - deg gcd(a, g2)`; `None` if `a` or `b` is zero.
    pub fn k2(&self) -> Option<usize> {
        Some(self.a.degree()? + self.k1()? - self.gcd_a_g2().degree()?)
    }

    /// The three generator triples in spanning-set order.
    pub fn generators(&self) -> [[Gf2Poly; 3]; 3] {
        let z = Gf2Poly::zero();
        [
            [self.b.clone(), z.clone(), z.clone()],
            [self.l.clone(), self.a.clone(), z],
            [self.g1.clone(), self.g2.clone(), self.g3.clone()],
        ]
    }
}

impl fmt::Display for TripleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} b={} l={} a={} g1={} g2={} g3={}",
            self.lengths, self.b, self.l, self.a, self.g1, self.g2, self.g3
        )
    }
}

/// One failed condition of a spec.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Violation {
    /// A block generator does not divide `x^n - 1`.
    NotDivisor { name: &'static str, n: usize },
    /// A cross term is not reduced below its bounding generator.
    DegreeBound { name: &'static str, bound: &'static str },
    /// `b` does not divide `((x^s-1)/a) l`.
    FirstBlockFromSecond,
    /// `a` does not divide `((x^t-1)/g3) g2`.
    SecondBlockFromThird,
    /// `b` does not divide `k l + ((x^t-1)/g3) g1` with `k = ((x^t-1)/g3) g2 / a`.
    FirstBlockFromThird,
}

impl Violation {
    /// Short tag naming the family of the failed condition.
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::NotDivisor { .. } => "generator",
            Violation::DegreeBound { .. } => "degree",
            Violation::FirstBlockFromSecond => "divisibility-1",
            Violation::SecondBlockFromThird => "divisibility-2",
            Violation::FirstBlockFromThird => "divisibility-3",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.condition())?;
        match self {
            Violation::NotDivisor { name, n } => write!(f, "{name} does not divide x^{n}-1"),
            Violation::DegreeBound { name, bound } => {
                write!(f, "{name} is not reduced: deg {name} >= deg {bound}")
            }
            Violation::FirstBlockFromSecond => f.write_str("b does not divide ((x^s-1)/a)*l"),
            Violation::SecondBlockFromThird => f.write_str("a does not divide ((x^t-1)/g3)*g2"),
            Violation::FirstBlockFromThird => {
                f.write_str("b does not divide k*l + ((x^t-1)/g3)*g1 where k = ((x^t-1)/g3)*g2/a")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidSpec {
                violations: self.violations,
            })
        }
    }
}

/// `deg f < deg bound`, with the zero polynomial below everything.
fn reduced_below(f: &Gf2Poly, bound: &Gf2Poly) -> bool {
    match (f.degree(), bound.degree()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(df), Some(db)) => df < db,
    }
}

/// Checks every canonical-form condition and reports all that fail.
pub fn validate(spec: &TripleSpec) -> ValidationReport {
    let BlockLengths { r, s, t } = spec.lengths;
    let mut violations = Vec::new();
    let b_ok = spec.b.divides(&Gf2Poly::x_n_minus_one(r)) && !spec.b.is_zero();
    let a_ok = spec.a.divides(&Gf2Poly::x_n_minus_one(s)) && !spec.a.is_zero();
    let g3_ok = spec.g3.divides(&Gf2Poly::x_n_minus_one(t)) && !spec.g3.is_zero();
    if !b_ok {
        violations.push(Violation::NotDivisor { name: "b", n: r });
    }
    if !a_ok {
        violations.push(Violation::NotDivisor { name: "a", n: s });
    }
    if !g3_ok {
        violations.push(Violation::NotDivisor { name: "g3", n: t });
    }
    for (name, f, bound, bname) in [
        ("l", &spec.l, &spec.b, "b"),
        ("g1", &spec.g1, &spec.b, "b"),
        ("g2", &spec.g2, &spec.a, "a"),
    ] {
        if !reduced_below(f, bound) {
            violations.push(Violation::DegreeBound { name, bound: bname });
        }
    }
    if let Some(h2) = spec.h2().filter(|_| a_ok) {
        if !spec.b.divides(&(&h2 * &spec.l)) {
            violations.push(Violation::FirstBlockFromSecond);
        }
    }
    if let Some(h3) = spec.h3().filter(|_| g3_ok && a_ok) {
        match (&h3 * &spec.g2).exact_div(&spec.a) {
            None => violations.push(Violation::SecondBlockFromThird),
            Some(k) => {
                let combo = &(&k * &spec.l) + &(&h3 * &spec.g1);
                if !spec.b.divides(&combo) {
                    violations.push(Violation::FirstBlockFromThird);
                }
            }
        }
    }
    ValidationReport { violations }
}

fn require_valid(spec: &TripleSpec) -> Result<()> {
    validate(spec).into_result()
}

/// A word `(c1 | c2 | c3)` viewed as three residues modulo `x^r-1`, `x^s-1`, `x^t-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Codeword {
    lengths: BlockLengths,
    blocks: [Gf2Poly; 3],
}

impl Codeword {
    /// Reduces each block into its residue ring.
    pub fn new(lengths: BlockLengths, c1: &Gf2Poly, c2: &Gf2Poly, c3: &Gf2Poly) -> Self {
        Codeword {
            lengths,
            blocks: [c1.rem_xn1(lengths.r), c2.rem_xn1(lengths.s), c3.rem_xn1(lengths.t)],
        }
    }

    pub fn zero(lengths: BlockLengths) -> Self {
        let z = Gf2Poly::zero();
        Self::new(lengths, &z, &z, &z)
    }

    pub fn from_row(lengths: BlockLengths, row: &BitRow) -> Self {
        assert_eq!(row.len(), lengths.total());
        let block = |i: usize, n: usize| {
            let off = lengths.offset(i);
            Gf2Poly::from_exponents((0..n).filter(|&j| row.get(off + j)))
        };
        Codeword {
            lengths,
            blocks: [block(0, lengths.r), block(1, lengths.s), block(2, lengths.t)],
        }
    }

    pub fn to_row(&self) -> BitRow {
        let mut row = BitRow::zeros(self.lengths.total());
        for (i, blk) in self.blocks.iter().enumerate() {
            let off = self.lengths.offset(i);
            for e in blk.exponents() {
                row.set(off + e);
            }
        }
        row
    }

    pub fn lengths(&self) -> BlockLengths {
        self.lengths
    }

    pub fn blocks(&self) -> &[Gf2Poly; 3] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Gf2Poly {
        &self.blocks[i]
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(Gf2Poly::weight).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Gf2Poly::is_zero)
    }

    /// `f * c`, each block multiplied in its residue ring.
    pub fn scale(&self, f: &Gf2Poly) -> Codeword {
        let [c1, c2, c3] = &self.blocks;
        Codeword::new(self.lengths, &(f * c1), &(f * c2), &(f * c3))
    }

    pub fn add(&self, other: &Codeword) -> Codeword {
        assert_eq!(self.lengths, other.lengths);
        let [a1, a2, a3] = &self.blocks;
        let [b1, b2, b3] = &other.blocks;
        Codeword::new(self.lengths, &(a1 + b1), &(a2 + b2), &(a3 + b3))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.lengths.format_row(&self.to_row()))
    }
}

/// Simultaneous right rotation of each block, i.e. multiplication by `x`.
pub fn shift_sigma(c: &Codeword) -> Codeword {
    let l = c.lengths;
    Codeword {
        lengths: l,
        blocks: [
            c.blocks[0].rotate(l.r, 1),
            c.blocks[1].rotate(l.s, 1),
            c.blocks[2].rotate(l.t, 1),
        ],
    }
}

/// Minimal spanning set: shifts of `(b|0|0)`, then `(l|a|0)`, then `(g1|g2|g3)`.
pub fn spanning_set(spec: &TripleSpec) -> Result<Vec<Codeword>> {
    require_valid(spec)?;
    Ok(spanning_rows_unchecked(spec))
}

pub(crate) fn spanning_rows_unchecked(spec: &TripleSpec) -> Vec<Codeword> {
    let BlockLengths { r, s, t } = spec.lengths;
    let deg = |f: &Gf2Poly| f.degree().expect("nonzero generator");
    let mut out = Vec::new();
    let z = Gf2Poly::zero();
    let groups = [
        (r - deg(&spec.b).min(r), Codeword::new(spec.lengths, &spec.b, &z, &z)),
        (
            s - deg(&spec.a).min(s),
            Codeword::new(spec.lengths, &spec.l, &spec.a, &z),
        ),
        (
            t - deg(&spec.g3).min(t),
            Codeword::new(spec.lengths, &spec.g1, &spec.g2, &spec.g3),
        ),
    ];
    for (count, generator) in groups {
        let mut c = generator;
        for _ in 0..count {
            let next = shift_sigma(&c);
            out.push(c);
            c = next;
        }
    }
    out
}

pub fn generator_matrix(spec: &TripleSpec) -> Result<BinMatrix> {
    let rows = spanning_set(spec)?.iter().map(Codeword::to_row).collect();
    Ok(BinMatrix::new(spec.lengths, rows))
}

/// Dimension `k = r + s + t - deg b - deg a - deg g3`, so that `|C| = 2^k`.
pub fn cardinality(spec: &TripleSpec) -> Result<usize> {
    require_valid(spec)?;
    let deg = |f: &Gf2Poly| f.degree().expect("validated generator");
    Ok(spec.lengths.total() - deg(&spec.b) - deg(&spec.a) - deg(&spec.g3))
}

/// XOR of the spanning rows selected by `message`.
pub fn encode(spec: &TripleSpec, message: &[bool]) -> Result<Codeword> {
    let rows = spanning_set(spec)?;
    if message.len() != rows.len() {
        return Err(Error::MessageLength {
            expected: rows.len(),
            got: message.len(),
        });
    }
    let mut acc = BitRow::zeros(spec.lengths.total());
    for (row, _) in rows.iter().zip(message).filter(|(_, &m)| m) {
        acc.xor_assign(&row.to_row());
    }
    Ok(Codeword::from_row(spec.lengths, &acc))
}

/// Generator polynomials of the block projections `C_r`, `C_s`, `C_t`.
pub fn projections(spec: &TripleSpec) -> Result<(Gf2Poly, Gf2Poly, Gf2Poly)> {
    require_valid(spec)?;
    let BlockLengths { r, s, t } = spec.lengths;
    Ok((
        gcd(&[
            spec.b.clone(),
            spec.l.clone(),
            spec.g1.clone(),
            Gf2Poly::x_n_minus_one(r),
        ]),
        gcd(&[spec.a.clone(), spec.g2.clone(), Gf2Poly::x_n_minus_one(s)]),
        gcd(&[spec.g3.clone(), Gf2Poly::x_n_minus_one(t)]),
    ))
}

/// `true` iff the code is `C_r x C_s x C_t`, which for a canonical spec means
/// all cross terms vanish.
pub fn is_separable(spec: &TripleSpec) -> Result<bool> {
    require_valid(spec)?;
    Ok(spec.l.is_zero() && spec.g1.is_zero() && spec.g2.is_zero())
}

/// Canonical spec of the module generated by arbitrary generator triples.
pub fn canonicalize(lengths: BlockLengths, gens: &[[Gf2Poly; 3]]) -> Result<TripleSpec> {
    let rows: Vec<BitRow> = gens
        .iter()
        .map(|[c1, c2, c3]| Codeword::new(lengths, c1, c2, c3).to_row())
        .collect();
    let closed = linoracle::sigma_closure(&BinMatrix::new(lengths, rows));
    linoracle::extract_spec(&closed)
}
