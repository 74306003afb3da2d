//! Dense GF(2) row vectors and matrices with an `(r | s | t)` block layout.

use std::fmt;

use crate::triplecode::BlockLengths;

const WORD: usize = 64;

/// A fixed-width bit vector, bit `i` stored in word `i / 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut row = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                row.set(i);
            }
        }
        row
    }

    /// Parses a space-free `0`/`1` string, index 0 first.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(|b| Self::from_bools(&b))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({})", self.to_bitstring())
    }
}

/// Incremental echelon basis: every stored row has a distinct leading bit and
/// no stored row has a 1 at another row's leading position.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    rows: Vec<BitRow>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn reduce(&self, row: &BitRow) -> BitRow {
        let mut v = row.clone();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(r);
            }
        }
        v
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        self.reduce(row).is_zero()
    }

    /// Adds `row` to the space; returns `false` if it was already in the span.
    pub fn insert(&mut self, row: &BitRow) -> bool {
        let v = self.reduce(row);
        let Some(p) = v.leading() else {
            return false;
        };
        for r in &mut self.rows {
            if r.get(p) {
                r.xor_assign(&v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Basis rows sorted by pivot column.
    pub fn into_sorted(self) -> (Vec<BitRow>, Vec<usize>) {
        let mut pairs: Vec<(usize, BitRow)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        pairs.into_iter().map(|(p, r)| (r, p)).unzip()
    }
}

/// A binary matrix whose columns split into blocks of widths `(r, s, t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinMatrix {
    lengths: BlockLengths,
    rows: Vec<BitRow>,
}

impl BinMatrix {
    pub fn new(lengths: BlockLengths, rows: Vec<BitRow>) -> Self {
        let width = lengths.total();
        assert!(
            rows.iter().all(|r| r.len() == width),
            "every row must have width {width}"
        );
        BinMatrix { lengths, rows }
    }

    pub fn empty(lengths: BlockLengths) -> Self {
        BinMatrix {
            lengths,
            rows: Vec::new(),
        }
    }

    pub fn lengths(&self) -> BlockLengths {
        self.lengths
    }

    pub fn width(&self) -> usize {
        self.lengths.total()
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn into_rows(self) -> Vec<BitRow> {
        self.rows
    }

    /// One row per line, blocks separated by `" | "`.
    pub fn to_block_string(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&self.lengths.format_row(row));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_block_string())
    }
}
