//! Ground truth by plain GF(2) linear algebra.
//!
//! Nothing here uses the polynomial structure of the generators beyond gcds of
//! raw codeword blocks, so the results serve as an independent check on the
//! closed-form machinery in [`crate::dualpair`].

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2poly::{gcd, Gf2Poly};
use crate::matrix::{BinMatrix, BitRow, RowSpace};
use crate::triplecode::{generator_matrix, BlockLengths, TripleSpec};

/// Default bound on `log2` of the number of enumerated codewords.
pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BinMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form, pivots taken at the lowest column index.
pub fn rref(m: &BinMatrix) -> Rref {
    let mut space = RowSpace::new(m.width());
    for row in m.rows() {
        space.insert(row);
    }
    let (rows, pivots) = space.into_sorted();
    Rref {
        rank: rows.len(),
        matrix: BinMatrix::new(m.lengths(), rows),
        pivots,
    }
}

/// Basis of `{v : m v^T = 0}`, one row per non-pivot column.
pub fn null_space(m: &BinMatrix) -> BinMatrix {
    let Rref { matrix, pivots, .. } = rref(m);
    let width = m.width();
    let mut is_pivot = vec![false; width];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let rows = (0..width)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitRow::zeros(width);
            v.set(f);
            for (row, &p) in matrix.rows().iter().zip(&pivots) {
                if row.get(f) {
                    v.set(p);
                }
            }
            v
        })
        .collect();
    BinMatrix::new(m.lengths(), rows)
}

/// `sigma` acting on a flat row.
pub fn sigma_row(lengths: BlockLengths, row: &BitRow) -> BitRow {
    let mut out = BitRow::zeros(row.len());
    for (i, n) in lengths.as_array().into_iter().enumerate() {
        let off = lengths.offset(i);
        for j in 0..n {
            if row.get(off + j) {
                out.set(off + (j + 1) % n);
            }
        }
    }
    out
}

/// `true` iff the row space of `m` is closed under `sigma`.
pub fn is_triple_cyclic(m: &BinMatrix) -> bool {
    let mut space = RowSpace::new(m.width());
    for row in m.rows() {
        space.insert(row);
    }
    m.rows().iter().all(|row| space.contains(&sigma_row(m.lengths(), row)))
}

/// Basis of the smallest `sigma`-closed space containing the rows of `m`.
pub fn sigma_closure(m: &BinMatrix) -> BinMatrix {
    let mut space = RowSpace::new(m.width());
    let mut queue: Vec<BitRow> = m.rows().to_vec();
    while let Some(v) = queue.pop() {
        if space.insert(&v) {
            queue.push(sigma_row(m.lengths(), &v));
        }
    }
    BinMatrix::new(m.lengths(), space.into_sorted().0)
}

fn check_cap(rank: usize, cap: usize) -> Result<()> {
    if rank > cap {
        Err(Error::CapExceeded { rank, cap })
    } else {
        Ok(())
    }
}

/// All codewords of the row space in Gray-code order.
pub struct Codewords {
    basis: Vec<BitRow>,
    current: BitRow,
    next_index: u64,
    total: u64,
}

impl Iterator for Codewords {
    type Item = BitRow;

    fn next(&mut self) -> Option<BitRow> {
        if self.next_index >= self.total {
            return None;
        }
        if self.next_index > 0 {
            let flip = self.next_index.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        self.next_index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next_index) as usize;
        (left, Some(left))
    }
}

pub fn enumerate(m: &BinMatrix, cap: usize) -> Result<Codewords> {
    let Rref { matrix, rank, .. } = rref(m);
    check_cap(rank, cap)?;
    Ok(Codewords {
        current: BitRow::zeros(m.width()),
        basis: matrix.into_rows(),
        next_index: 0,
        total: 1u64 << rank,
    })
}

/// Weight census of a linear code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDist {
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<usize, u64>,
    /// Least nonzero weight; `None` for the zero code.
    pub d: Option<usize>,
}

impl WeightDist {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `"n=.. k=.. d=.."` with `d=-` for the zero code.
    pub fn parameters(&self) -> String {
        let d = self.d.map_or("-".to_string(), |d| d.to_string());
        format!("n={} k={} d={}", self.n, self.k, d)
    }
}

fn census(basis: &[BitRow], start: &BitRow, counts: &mut [u64]) {
    let mut cur = start.clone();
    counts[cur.weight()] += 1;
    for i in 1u64..(1u64 << basis.len()) {
        cur.xor_assign(&basis[i.trailing_zeros() as usize]);
        counts[cur.weight()] += 1;
    }
}

/// Full weight distribution by enumeration; large codes are split by message
/// prefix across threads, and the merged counts do not depend on the split.
pub fn weight_distribution(m: &BinMatrix, cap: usize) -> Result<WeightDist> {
    let Rref { matrix, rank, .. } = rref(m);
    check_cap(rank, cap)?;
    let n = m.width();
    let basis = matrix.into_rows();
    let prefix_bits = rank.saturating_sub(14).min(8);
    let (low, high) = basis.split_at(rank - prefix_bits);
    let counts = (0u64..(1u64 << prefix_bits))
        .into_par_iter()
        .map(|prefix| {
            let mut start = BitRow::zeros(n);
            for (j, row) in high.iter().enumerate() {
                if prefix >> j & 1 == 1 {
                    start.xor_assign(row);
                }
            }
            let mut local = vec![0u64; n + 1];
            census(low, &start, &mut local);
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let counts: BTreeMap<usize, u64> = counts.into_iter().enumerate().filter(|&(_, c)| c > 0).collect();
    let d = counts.keys().copied().find(|&w| w > 0);
    Ok(WeightDist { n, k: rank, counts, d })
}

pub fn min_distance(m: &BinMatrix, cap: usize) -> Result<Option<usize>> {
    Ok(weight_distribution(m, cap)?.d)
}

fn block_poly(row: &BitRow, offset: usize, len: usize) -> Gf2Poly {
    Gf2Poly::from_exponents((0..len).filter(|&j| row.get(offset + j)))
}

/// Canonical generators of a `sigma`-closed row space.
///
/// Rows are echeloned with third-block columns first, so the basis splits into
/// rows reaching the third block, rows of the subcode `K` with zero third
/// block, and rows supported on the first block alone. Each block generator is
/// the gcd of the corresponding blocks with `x^n - 1`, and a codeword attaining
/// it is read off the echelon basis.
pub fn extract_spec(m: &BinMatrix) -> Result<TripleSpec> {
    if !is_triple_cyclic(m) {
        return Err(Error::NotTripleCyclic);
    }
    let lengths = m.lengths();
    let BlockLengths { r, s, t } = lengths;
    let n = lengths.total();
    // Column layout t | s | r.
    let permute = |row: &BitRow| {
        let mut out = BitRow::zeros(n);
        for j in row.ones() {
            let k = if j < r {
                t + s + j
            } else if j < r + s {
                t + j - r
            } else {
                j - r - s
            };
            out.set(k);
        }
        out
    };
    let mut space = RowSpace::new(n);
    for row in m.rows() {
        space.insert(&permute(row));
    }
    let (rows, pivots) = space.into_sorted();
    let parts = |row: &BitRow| (block_poly(row, t + s, r), block_poly(row, t, s), block_poly(row, 0, t));

    // Codeword of the selected group whose block (at `offset`, width `len`)
    // equals `target`, built from the rows whose pivots lie in that block.
    let attain = |lo: usize, hi: usize, target: &Gf2Poly| -> Result<BitRow> {
        let mut acc = BitRow::zeros(n);
        for (row, &p) in rows.iter().zip(&pivots) {
            if (lo..hi).contains(&p) && target.coeff(p - lo) {
                acc.xor_assign(row);
            }
        }
        if block_poly(&acc, lo, hi - lo) != *target {
            return Err(Error::NotTripleCyclic);
        }
        Ok(acc)
    };

    let group = |lo: usize, hi: usize| {
        rows.iter()
            .zip(&pivots)
            .filter(move |(_, &p)| (lo..hi).contains(&p))
            .map(|(row, _)| row)
    };

    let mut third: Vec<Gf2Poly> = group(0, t).map(|row| parts(row).2).collect();
    third.push(Gf2Poly::x_n_minus_one(t));
    let g3 = gcd(&third);
    let (mut g1, mut g2) = if g3.degree() == Some(t) {
        (Gf2Poly::zero(), Gf2Poly::zero())
    } else {
        let (c1, c2, _) = parts(&attain(0, t, &g3)?);
        (c1, c2)
    };

    let mut second: Vec<Gf2Poly> = group(t, t + s).map(|row| parts(row).1).collect();
    second.push(Gf2Poly::x_n_minus_one(s));
    let a = gcd(&second);
    let mut l = if a.degree() == Some(s) {
        Gf2Poly::zero()
    } else {
        parts(&attain(t, t + s, &a)?).0
    };

    let mut first: Vec<Gf2Poly> = group(t + s, n).map(|row| parts(row).0).collect();
    first.push(Gf2Poly::x_n_minus_one(r));
    let b = gcd(&first);

    l = l.rem(&b)?;
    let (q, g2_reduced) = g2.divrem(&a)?;
    g1 = (&g1 + &(&q * &l)).rem_xn1(r).rem(&b)?;
    g2 = g2_reduced;

    Ok(TripleSpec::new(lengths, b, l, a, g1, g2, g3))
}

/// Canonical spec of the dual code: generator matrix, null space, extraction.
pub fn dual_oracle(spec: &TripleSpec) -> Result<TripleSpec> {
    let g = generator_matrix(spec)?;
    extract_spec(&null_space(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::triplecode::validate;

    fn lengths(r: usize, s: usize, t: usize) -> BlockLengths {
        BlockLengths::new(r, s, t).unwrap()
    }

    fn matrix(l: BlockLengths, rows: &[&str]) -> BinMatrix {
        BinMatrix::new(
            l,
            rows.iter()
                .map(|r| BitRow::from_bitstring(&r.replace([' ', '|'], "")).unwrap())
                .collect(),
        )
    }

    #[test]
    fn rref_examples() {
        let l = lengths(1, 1, 1);
        let id = matrix(l, &["100", "010", "001"]);
        let r = rref(&id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, id);
        assert_eq!(rref(&matrix(l, &["110", "110"])).rank, 1);
        let g = generator_matrix(&catalog::example_777()).unwrap();
        assert_eq!(rref(&g).rank, 9);
    }

    #[test]
    fn null_space_examples() {
        let l = lengths(1, 1, 1);
        assert_eq!(null_space(&matrix(l, &["100", "010", "001"])).nrows(), 0);
        assert_eq!(null_space(&BinMatrix::empty(l)).nrows(), 3);
        let g = generator_matrix(&catalog::example_6_4_5()).unwrap();
        let h = null_space(&g);
        assert_eq!(h.nrows(), 12);
        for u in h.rows() {
            for v in g.rows() {
                assert!(!u.dot(v));
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let l = lengths(1, 1, 1);
        let words: Vec<_> = enumerate(&BinMatrix::empty(l), DEFAULT_CAP).unwrap().collect();
        assert_eq!(words, vec![BitRow::zeros(3)]);
        let words: Vec<_> = enumerate(&matrix(l, &["110", "011", "101"]), DEFAULT_CAP)
            .unwrap()
            .collect();
        assert_eq!(words.len(), 4);
        let g = generator_matrix(&catalog::example_777()).unwrap();
        let all: std::collections::HashSet<_> = enumerate(&g, DEFAULT_CAP).unwrap().collect();
        assert_eq!(all.len(), 512);
        assert_eq!(enumerate(&g, 8).err(), Some(Error::CapExceeded { rank: 9, cap: 8 }));
    }

    #[test]
    fn weight_distribution_examples() {
        let g = generator_matrix(&catalog::example_777()).unwrap();
        let wd = weight_distribution(&g, DEFAULT_CAP).unwrap();
        let expected: BTreeMap<usize, u64> = [
            (0, 1),
            (4, 7),
            (6, 21),
            (8, 98),
            (10, 154),
            (12, 175),
            (14, 49),
            (16, 7),
        ]
        .into_iter()
        .collect();
        assert_eq!(wd.counts, expected);
        assert_eq!(wd.d, Some(4));
        assert_eq!(wd.total(), 512);

        let z = generator_matrix(&TripleSpec::zero_code(lengths(2, 3, 4))).unwrap();
        let wd = weight_distribution(&z, DEFAULT_CAP).unwrap();
        assert_eq!(wd.counts, [(0, 1)].into_iter().collect());
        assert_eq!(wd.d, None);
        assert_eq!(wd.parameters(), "n=9 k=0 d=-");
    }

    #[test]
    fn parallel_split_matches_single_pass() {
        // rank 18 forces a 4-bit prefix split
        let l = lengths(7, 7, 7);
        let spec = TripleSpec::separable(
            l,
            "x+1".parse().unwrap(),
            "x^3+x+1".parse().unwrap(),
            "x^3+x^2+1".parse().unwrap(),
        );
        let g = generator_matrix(&spec).unwrap();
        let wd = weight_distribution(&g, DEFAULT_CAP).unwrap();
        let mut counts = BTreeMap::new();
        for w in enumerate(&g, DEFAULT_CAP).unwrap() {
            *counts.entry(w.weight()).or_insert(0u64) += 1;
        }
        assert_eq!(wd.counts, counts);
        assert_eq!(wd.k, 14);
    }

    #[test]
    fn is_triple_cyclic_examples() {
        let g = generator_matrix(&catalog::example_777()).unwrap();
        assert!(is_triple_cyclic(&g));
        assert!(!is_triple_cyclic(&matrix(lengths(2, 1, 1), &["10|0|0"])));
        assert!(is_triple_cyclic(&null_space(&g)));
    }

    #[test]
    fn extract_spec_examples() {
        let spec = catalog::example_777();
        assert_eq!(extract_spec(&generator_matrix(&spec).unwrap()).unwrap(), spec);

        let l = lengths(3, 4, 5);
        assert_eq!(extract_spec(&BinMatrix::empty(l)).unwrap(), TripleSpec::zero_code(l));

        let h = null_space(&generator_matrix(&catalog::example_6_4_5()).unwrap());
        let dual = extract_spec(&h).unwrap();
        let x1: Gf2Poly = "x+1".parse().unwrap();
        assert_eq!(dual, TripleSpec::separable(l_645(), x1.clone(), x1.clone(), x1));
        assert!(validate(&dual).is_valid());

        assert_eq!(
            extract_spec(&matrix(lengths(2, 1, 1), &["10|0|0"])),
            Err(Error::NotTripleCyclic)
        );
    }

    fn l_645() -> BlockLengths {
        lengths(6, 4, 5)
    }

    #[test]
    fn dual_oracle_examples() {
        let x1: Gf2Poly = "x+1".parse().unwrap();
        assert_eq!(
            dual_oracle(&catalog::example_6_4_5()).unwrap(),
            TripleSpec::separable(l_645(), x1.clone(), x1.clone(), x1)
        );
        let l = lengths(3, 2, 4);
        assert_eq!(
            dual_oracle(&TripleSpec::full_space(l)).unwrap(),
            TripleSpec::zero_code(l)
        );
        let dual = dual_oracle(&catalog::example_777()).unwrap();
        assert_eq!(crate::triplecode::cardinality(&dual).unwrap(), 12);
    }

    #[test]
    fn sigma_closure_of_single_word() {
        let l = lengths(3, 1, 1);
        let closed = sigma_closure(&matrix(l, &["100|0|0"]));
        assert_eq!(closed.nrows(), 3);
        assert!(is_triple_cyclic(&closed));
    }
}
