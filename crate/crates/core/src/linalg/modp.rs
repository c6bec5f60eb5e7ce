//! Rank over a large prime field, used as a certificate for full rank.
//!
//! Reduction modulo `P` is a ring map from the `P`-integral rationals, so a
//! nonzero minor mod `P` lifts to a nonzero minor over Q. The rank mod `P`
//! is therefore a lower bound for the rational rank, and equals it whenever
//! it is already maximal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// The Mersenne prime 2^61 - 1.
pub const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().unwrap()
}

/// Image of a rational number, `None` if `P` divides the denominator.
pub fn reduce(c: &BigRational) -> Option<u64> {
    let d = reduce_int(c.denom());
    if d == 0 {
        return None;
    }
    Some(mulmod(reduce_int(c.numer()), inv(d)))
}

/// Row-echelon basis over F_P that accepts rows one at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    /// (pivot column, normalized row)
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis; adds it if independent.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        for (pc, basis_row) in &self.rows {
            let f = row[*pc];
            if f != 0 {
                let nf = P - f;
                for (x, b) in row.iter_mut().zip(basis_row).skip(*pc) {
                    if *b != 0 {
                        *x = (*x + mulmod(nf, *b)) % P;
                    }
                }
            }
        }
        match row.iter().position(|&x| x != 0) {
            None => false,
            Some(pc) => {
                let s = inv(row[pc]);
                for x in row.iter_mut().skip(pc) {
                    *x = mulmod(*x, s);
                }
                self.rows.push((pc, row));
                true
            }
        }
    }
}

/// Rank mod `P` of a rational matrix, `None` if some denominator vanishes.
pub fn rank_mod_p(rows: &[Vec<BigRational>], cols: usize) -> Option<usize> {
    let mut e = Echelon::new(cols);
    for r in rows {
        let red: Vec<u64> = r.iter().map(reduce).collect::<Option<_>>()?;
        e.insert(red);
        if e.rank() == cols {
            break;
        }
    }
    Some(e.rank())
}
