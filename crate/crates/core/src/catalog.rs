//! Worked codes used by tests, the CLI and the README.

use crate::gf2poly::Gf2Poly;
use crate::triplecode::{BlockLengths, TripleSpec};

fn p(s: &str) -> Gf2Poly {
    s.parse().expect("catalog polynomial")
}

/// The `[21, 9, 4]` code of block length `(7, 7, 7)`.
pub fn example_777() -> TripleSpec {
    TripleSpec::new(
        BlockLengths { r: 7, s: 7, t: 7 },
        p("x^4+x^2+x+1"),
        p("x^2+1"),
        p("x^4+x^3+x^2+1"),
        p("x+1"),
        p("x^2+x"),
        p("x^4+x^2+x+1"),
    )
}

/// Separable `[15, 3, 4]` code of block length `(6, 4, 5)` whose blocks are the
/// repetition codes.
pub fn example_6_4_5() -> TripleSpec {
    TripleSpec::separable(
        BlockLengths { r: 6, s: 4, t: 5 },
        Gf2Poly::theta(6, 1),
        Gf2Poly::theta(4, 1),
        Gf2Poly::theta(5, 1),
    )
}

/// The `(10, 12, 15)` generators with the third-block generator as commonly
/// printed, `x^12+x^9+x^6+x^5+x^4+x^2+x+1`, which does not divide `x^15-1`.
pub fn example_10_12_15_printed() -> TripleSpec {
    TripleSpec {
        g3: p("x^12+x^9+x^6+x^5+x^4+x^2+x+1"),
        ..example_10_12_15()
    }
}

/// The `(10, 12, 15)` code with `g3 = x^12+x^9+x^6+x^3+1`, the only degree-12
/// divisor of `x^15-1`.
pub fn example_10_12_15() -> TripleSpec {
    TripleSpec::new(
        BlockLengths { r: 10, s: 12, t: 15 },
        p("x^6+x^5+x+1"),
        p("x^5+1"),
        p("x^6+1"),
        p("x^5+1"),
        p("x^5+x^4+x^2+x"),
        p("x^12+x^9+x^6+x^3+1"),
    )
}

/// The rows of the `9 x 21` generator matrix of [`example_777`], block format.
pub const EXAMPLE_777_MATRIX: [&str; 9] = [
    "1110100 | 0000000 | 0000000",
    "0111010 | 0000000 | 0000000",
    "0011101 | 0000000 | 0000000",
    "1010000 | 1011100 | 0000000",
    "0101000 | 0101110 | 0000000",
    "0010100 | 0010111 | 0000000",
    "1100000 | 0110000 | 1110100",
    "0110000 | 0011000 | 0111010",
    "0011000 | 0001100 | 0011101",
];
