//! Factorization of `x^n - 1`, divisor lattices, and a best-distance search
//! over canonical generator tuples.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::linoracle;
use crate::specfile::{parse_pairs, Fields};
use crate::triplecode::{generator_matrix, validate, BlockLengths, TripleSpec};

pub const MAX_LENGTH: usize = 64;

fn deg128(p: u128) -> u32 {
    127 - p.leading_zeros()
}

fn divrem128(mut num: u128, den: u128) -> (u128, u128) {
    let dd = deg128(den);
    let mut q = 0u128;
    while num != 0 && deg128(num) >= dd {
        let sh = deg128(num) - dd;
        q |= 1 << sh;
        num ^= den << sh;
    }
    (q, num)
}

/// Sizes of the 2-cyclotomic cosets modulo an odd `n`, i.e. the degrees of
/// the irreducible factors of `x^n - 1`.
fn coset_sizes(n: usize) -> Vec<u32> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            size += 1;
            j = 2 * j % n;
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

/// Irreducible factors of `x^n - 1` over GF(2), with multiplicity, sorted.
///
/// Writing `n = 2^e n'` with `n'` odd, `x^n - 1 = (x^{n'} - 1)^{2^e}`. The odd
/// part is split by trial division in increasing degree, trying only degrees
/// that occur as cyclotomic coset sizes, and only candidates with constant
/// term 1 and odd weight. A remainder with no divisor of degree at most half
/// its own is irreducible.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<Gf2Poly>> {
    if !(1..=MAX_LENGTH).contains(&n) {
        return Err(Error::OutOfRange { n });
    }
    let e = n.trailing_zeros();
    let odd = n >> e;
    let mut rem: u128 = (1u128 << odd) | 1;
    let mut factors: Vec<u128> = Vec::new();
    'degrees: for d in coset_sizes(odd) {
        loop {
            let dr = deg128(rem);
            if dr == 0 {
                break 'degrees;
            }
            if d > dr / 2 {
                factors.push(rem);
                break 'degrees;
            }
            let mut found = None;
            if d == 1 {
                if divrem128(rem, 0b11).1 == 0 {
                    found = Some(0b11);
                }
            } else {
                for mid in 0u128..(1 << (d - 1)) {
                    let cand = (1u128 << d) | (mid << 1) | 1;
                    if cand.count_ones().is_multiple_of(2) {
                        continue;
                    }
                    if divrem128(rem, cand).1 == 0 {
                        found = Some(cand);
                        break;
                    }
                }
            }
            match found {
                Some(f) => {
                    factors.push(f);
                    rem = divrem128(rem, f).0;
                }
                None => break,
            }
        }
    }
    if deg128(rem) > 0 && !factors.contains(&rem) {
        factors.push(rem);
    }
    let mut out: Vec<Gf2Poly> = factors
        .iter()
        .flat_map(|&f| std::iter::repeat_n(Gf2Poly::from_u128(f), 1 << e))
        .collect();
    out.sort();
    Ok(out)
}

/// All monic divisors of `x^n - 1`, sorted by degree then coefficients.
pub fn divisors(n: usize) -> Result<Vec<Gf2Poly>> {
    let factors = factor_xn_minus_1(n)?;
    let mut grouped: Vec<(Gf2Poly, usize)> = Vec::new();
    for f in factors {
        match grouped.last_mut() {
            Some((g, count)) if *g == f => *count += 1,
            _ => grouped.push((f, 1)),
        }
    }
    let mut out = vec![Gf2Poly::one()];
    for (f, mult) in grouped {
        let mut next = Vec::with_capacity(out.len() * (mult + 1));
        for d in &out {
            let mut p = d.clone();
            next.push(p.clone());
            for _ in 0..mult {
                p = &p * &f;
                next.push(p.clone());
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// One search result: a canonical spec with its parameters `[n, k, d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeRecord {
    pub spec: TripleSpec,
    pub n: usize,
    pub k: usize,
    /// `None` for the zero code.
    pub d: Option<usize>,
    /// Wall-clock note; never written to results files.
    pub timestamp: Option<String>,
}

impl CodeRecord {
    /// Builds a record, computing `k` and `d` with the linear-algebra oracle.
    pub fn measure(spec: TripleSpec, cap: usize) -> Result<CodeRecord> {
        let g = generator_matrix(&spec)?;
        let dist = linoracle::weight_distribution(&g, cap)?;
        Ok(CodeRecord {
            n: spec.lengths.total(),
            k: dist.k,
            d: dist.d,
            spec,
            timestamp: None,
        })
    }

    pub fn to_line(&self) -> String {
        let s = &self.spec;
        let l = s.lengths;
        let d = self.d.map_or("-".to_string(), |d| d.to_string());
        format!(
            "r={} s={} t={} b={} l={} a={} g1={} g2={} g3={} n={} k={} d={}",
            l.r, l.s, l.t, s.b, s.l, s.a, s.g1, s.g2, s.g3, self.n, self.k, d
        )
    }

    pub fn parse_line(line_no: usize, line: &str) -> Result<CodeRecord> {
        let mut fields = Fields::default();
        for (k, v) in parse_pairs(line_no, line.split_whitespace())? {
            fields.insert(line_no, k, v)?;
        }
        let spec = fields.spec(line_no)?;
        let err = |message: String| Error::Parse {
            line: Some(line_no),
            message,
        };
        let d = match fields.get("d") {
            Some((_, "-")) => None,
            Some(_) => Some(fields.usize("d", line_no)?),
            None => return Err(err("missing required key 'd'".into())),
        };
        Ok(CodeRecord {
            n: fields.usize("n", line_no)?,
            k: fields.usize("k", line_no)?,
            d,
            spec,
            timestamp: None,
        })
    }
}

impl fmt::Display for CodeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64 },
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchMode::Exhaustive => f.write_str("exhaustive"),
            SearchMode::Random { seed } => write!(f, "random seed={seed}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Maximum number of candidate tuples to visit.
    pub budget: u64,
    pub mode: SearchMode,
    /// Only tuples with `l = g1 = g2 = 0`.
    pub separable_only: bool,
    /// Enumeration cap on the dimension of visited codes.
    pub cap: usize,
}

impl SearchConfig {
    pub fn exhaustive(budget: u64) -> Self {
        SearchConfig {
            budget,
            mode: SearchMode::Exhaustive,
            separable_only: false,
            cap: linoracle::DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub lengths: BlockLengths,
    /// Best record per `(n, k)`, in increasing `k`.
    pub records: Vec<CodeRecord>,
    /// Candidate tuples examined.
    pub visited: u64,
    /// Candidates that passed validation.
    pub valid: u64,
    /// Exhaustive search stopped before covering the lattice, random mode, or zero budget.
    pub truncated: bool,
}

/// Candidate tuples at fixed lengths: every `(b, a, g3)` divisor triple with
/// every `l, g1` of degree below `deg b` and `g2` below `deg a`. Candidates
/// are numbered triple by triple; most fail validation.
pub struct CandidateLattice {
    lengths: BlockLengths,
    triples: Vec<[Gf2Poly; 3]>,
    /// `offsets[i]` is the index of the first candidate of triple `i`.
    offsets: Vec<u128>,
    total: u128,
    separable_only: bool,
}

fn pow2_saturating(e: usize) -> u128 {
    if e >= 120 {
        1 << 120
    } else {
        1 << e
    }
}

impl CandidateLattice {
    pub fn new(lengths: BlockLengths, separable_only: bool) -> Result<Self> {
        let (db, da, dg) = (divisors(lengths.r)?, divisors(lengths.s)?, divisors(lengths.t)?);
        let mut triples = Vec::with_capacity(db.len() * da.len() * dg.len());
        let mut offsets = Vec::with_capacity(triples.capacity());
        let mut total: u128 = 0;
        for b in &db {
            for a in &da {
                for g3 in &dg {
                    offsets.push(total);
                    let count = if separable_only {
                        1
                    } else {
                        pow2_saturating(2 * b.degree().unwrap_or(0) + a.degree().unwrap_or(0))
                    };
                    total = total.saturating_add(count);
                    triples.push([b.clone(), a.clone(), g3.clone()]);
                }
            }
        }
        Ok(CandidateLattice {
            lengths,
            triples,
            offsets,
            total,
            separable_only,
        })
    }

    /// Number of candidate tuples, saturating near `2^120`.
    pub fn total(&self) -> u128 {
        self.total
    }

    fn cross_bits(&self, idx: usize) -> (usize, usize) {
        let [b, a, _] = &self.triples[idx];
        (b.degree().unwrap_or(0), a.degree().unwrap_or(0))
    }

    /// Candidate number `i`: `l`, `g1`, `g2` are read from the bits of the
    /// offset within the triple.
    pub fn candidate(&self, i: u128) -> TripleSpec {
        let idx = self.offsets.partition_point(|&o| o <= i) - 1;
        let local = i - self.offsets[idx];
        let (db, _) = self.cross_bits(idx);
        let mask = |bits: usize| (1u128 << bits) - 1;
        let l = local & mask(db);
        let g1 = (local >> db) & mask(db);
        let g2 = local.checked_shr(2 * db as u32).unwrap_or(0);
        self.build(idx, l, g1, g2)
    }

    /// A uniformly chosen divisor triple with uniform cross terms.
    pub fn random_candidate<R: Rng>(&self, rng: &mut R) -> TripleSpec {
        let idx = rng.gen_range(0..self.triples.len());
        if self.separable_only {
            return self.build(idx, 0, 0, 0);
        }
        let (db, da) = self.cross_bits(idx);
        let mut draw = |bits: usize| rng.gen::<u128>() & ((1u128 << bits) - 1);
        let l = draw(db);
        let g1 = draw(db);
        let g2 = draw(da);
        self.build(idx, l, g1, g2)
    }

    fn build(&self, idx: usize, l: u128, g1: u128, g2: u128) -> TripleSpec {
        let [b, a, g3] = self.triples[idx].clone();
        TripleSpec::new(
            self.lengths,
            b,
            Gf2Poly::from_u128(l),
            a,
            Gf2Poly::from_u128(g1),
            Gf2Poly::from_u128(g2),
            g3,
        )
    }
}

/// Best records keyed by `(n, k)`, with the candidate index for tie-breaking.
type Best = BTreeMap<(usize, usize), (u64, CodeRecord)>;

fn better(new: &(u64, CodeRecord), old: &(u64, CodeRecord)) -> bool {
    (new.1.d, std::cmp::Reverse(new.0)) > (old.1.d, std::cmp::Reverse(old.0))
}

fn merge(mut acc: (Best, u64), other: (Best, u64)) -> (Best, u64) {
    for (key, entry) in other.0 {
        match acc.0.get(&key) {
            Some(old) if !better(&entry, old) => {}
            _ => {
                acc.0.insert(key, entry);
            }
        }
    }
    (acc.0, acc.1 + other.1)
}

fn evaluate(index: u64, spec: TripleSpec, cap: usize) -> Result<(Best, u64)> {
    let mut best = Best::new();
    if !validate(&spec).is_valid() {
        return Ok((best, 0));
    }
    let rec = CodeRecord::measure(spec, cap)?;
    best.insert((rec.n, rec.k), (index, rec));
    Ok((best, 1))
}

/// Searches canonical tuples at lengths `(r, s, t)` and keeps, for every
/// dimension reached, the valid spec of largest minimum distance (earliest
/// candidate on ties). Valid tuples are already canonical and generate
/// pairwise distinct codes, so no further deduplication is needed.
pub fn best_code_search(lengths: BlockLengths, config: &SearchConfig) -> Result<SearchOutcome> {
    let lattice = CandidateLattice::new(lengths, config.separable_only)?;
    let cap = config.cap;
    let (visited, best, valid) = match config.mode {
        SearchMode::Exhaustive => {
            let visited = lattice.total.min(config.budget as u128) as u64;
            let (best, valid) = (0..visited)
                .into_par_iter()
                .map(|i| evaluate(i, lattice.candidate(i as u128), cap))
                .try_reduce(|| (Best::new(), 0), |a, b| Ok(merge(a, b)))?;
            (visited, best, valid)
        }
        SearchMode::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let specs: Vec<TripleSpec> = (0..config.budget).map(|_| lattice.random_candidate(&mut rng)).collect();
            let (best, valid) = specs
                .into_par_iter()
                .enumerate()
                .map(|(i, spec)| evaluate(i as u64, spec, cap))
                .try_reduce(|| (Best::new(), 0), |a, b| Ok(merge(a, b)))?;
            (config.budget, best, valid)
        }
    };
    let truncated = config.budget == 0
        || match config.mode {
            SearchMode::Exhaustive => (visited as u128) < lattice.total,
            SearchMode::Random { .. } => true,
        };
    Ok(SearchOutcome {
        lengths,
        records: best.into_values().map(|(_, rec)| rec).collect(),
        visited,
        valid,
        truncated,
    })
}

/// Results-file text: `#` header lines, then one record per line.
pub fn format_records(outcome: &SearchOutcome, config: &SearchConfig) -> String {
    let l = outcome.lengths;
    let mut out = format!(
        "# search r={} s={} t={} mode={} budget={} separable_only={}\n# visited={} valid={} truncated={}\n",
        l.r,
        l.s,
        l.t,
        config.mode,
        config.budget,
        config.separable_only,
        outcome.visited,
        outcome.valid,
        outcome.truncated
    );
    for rec in &outcome.records {
        out.push_str(&rec.to_line());
        out.push('\n');
    }
    out
}

/// Parses results-file text, skipping blank and `#` lines.
pub fn parse_records(text: &str) -> Result<Vec<CodeRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, line)| CodeRecord::parse_line(i + 1, line))
        .collect()
}
