#![allow(dead_code)]

use proptest::prelude::*;
use tricyclic::search::CandidateLattice;
use tricyclic::triplecode::{canonicalize, validate};
use tricyclic::{BlockLengths, Gf2Poly, TripleSpec};

pub const CASES: u32 = 10_000;

pub fn p(s: &str) -> Gf2Poly {
    s.parse().unwrap()
}

pub fn lengths(r: usize, s: usize, t: usize) -> BlockLengths {
    BlockLengths::new(r, s, t).unwrap()
}

/// Polynomial of degree below `bits`.
pub fn poly_below(bits: u32) -> impl Strategy<Value = Gf2Poly> {
    any::<u64>().prop_map(move |w| {
        let mask = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
        Gf2Poly::from_u64(w & mask)
    })
}

/// Random block lengths with every component in `lo..=hi`.
pub fn block_lengths(lo: usize, hi: usize) -> impl Strategy<Value = BlockLengths> {
    (lo..=hi, lo..=hi, lo..=hi).prop_map(|(r, s, t)| lengths(r, s, t))
}

/// Canonical spec of the code generated by one to three random words.
pub fn valid_spec(lo: usize, hi: usize) -> impl Strategy<Value = TripleSpec> {
    (
        block_lengths(lo, hi),
        prop::collection::vec(any::<(u64, u64, u64)>(), 1..=3),
    )
        .prop_map(|(l, words)| {
            let gens: Vec<[Gf2Poly; 3]> = words
                .into_iter()
                .map(|(x, y, z)| [Gf2Poly::from_u64(x), Gf2Poly::from_u64(y), Gf2Poly::from_u64(z)])
                .map(|[x, y, z]| [x.rem_xn1(l.r), y.rem_xn1(l.s), z.rem_xn1(l.t)])
                .collect();
            canonicalize(l, &gens).unwrap()
        })
}

/// Every valid spec in the complete candidate lattice at `l`.
pub fn all_valid_specs(l: BlockLengths) -> Vec<TripleSpec> {
    let lattice = CandidateLattice::new(l, false).unwrap();
    (0..lattice.total())
        .map(|i| lattice.candidate(i))
        .filter(|spec| validate(spec).is_valid())
        .collect()
}
