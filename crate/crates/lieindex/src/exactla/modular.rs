use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::Rational;

/// 2^61 − 1.
pub const PRIME: u64 = (1u64 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let mut r = n % &p;
    if r < BigInt::from(0) {
        r += &p;
    }
    r.to_u64().unwrap()
}

/// Image of `r` in ℤ/p, or `None` when p divides the denominator.
pub fn to_mod(r: &Rational) -> Option<u64> {
    let n = reduce(&r.numer());
    let d = reduce(&r.denom());
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, PRIME - 2)))
}

/// Determinant modulo p of a square matrix already reduced mod p.
pub fn det_mod(mut a: Vec<Vec<u64>>) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            det = (PRIME - det) % PRIME;
        }
        det = mulmod(det, a[c][c]);
        let inv = powmod(a[c][c], PRIME - 2);
        let (top, rest) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in rest {
            if row[c] == 0 {
                continue;
            }
            let f = mulmod(row[c], inv);
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x + PRIME - mulmod(f, y)) % PRIME;
            }
        }
    }
    det
}

pub fn neg_mod(a: u64) -> u64 {
    (PRIME - a) % PRIME
}

pub fn add_mod(a: u64, b: u64) -> u64 {
    ((a as u128 + b as u128) % PRIME as u128) as u64
}

pub fn int_mod(v: i64) -> u64 {
    if v >= 0 {
        v as u64 % PRIME
    } else {
        neg_mod(v.unsigned_abs() % PRIME)
    }
}

pub fn mul_mod(a: u64, b: u64) -> u64 {
    mulmod(a, b)
}

pub fn inv_mod(a: u64) -> u64 {
    powmod(a, PRIME - 2)
}

/// Row echelon form over ℤ/p, grown one row at a time.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    cols: usize,
    // pivot column and the row, normalized to 1 at the pivot
    rows: Vec<(usize, Vec<u64>)>,
    pivot_of: Vec<Option<usize>>,
}

impl ModEchelon {
    pub fn new(cols: usize) -> Self {
        ModEchelon { cols, rows: Vec::new(), pivot_of: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the stored rows; keeps it when independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for c in 0..self.cols {
            if v[c] == 0 {
                continue;
            }
            match self.pivot_of[c] {
                Some(r) => {
                    let f = v[c];
                    let row = &self.rows[r].1;
                    for j in c..self.cols {
                        if row[j] != 0 {
                            v[j] = add_mod(v[j], neg_mod(mulmod(f, row[j])));
                        }
                    }
                }
                None => {
                    let inv = inv_mod(v[c]);
                    for x in v[c..].iter_mut() {
                        *x = mulmod(*x, inv);
                    }
                    self.pivot_of[c] = Some(self.rows.len());
                    self.rows.push((c, v));
                    return true;
                }
            }
        }
        false
    }
}

pub fn rank_mod(rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut e = ModEchelon::new(cols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_det_agrees_with_exact() {
        let rows = [[2i64, 1, 0], [7, 4, 3], [1, -5, 9]];
        let exact = crate::exactla::QMatrix::from_i64(&[&rows[0], &rows[1], &rows[2]]).det();
        let m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| int_mod(v)).collect()).collect();
        assert_eq!(det_mod(m), to_mod(&exact).unwrap());
        assert_eq!(to_mod(&Rational::new(1, 2)).map(|h| mulmod(h, 2)), Some(1));
    }

    #[test]
    fn modular_rank() {
        let r = |v: &[i64]| v.iter().map(|&x| int_mod(x)).collect::<Vec<u64>>();
        assert_eq!(rank_mod(vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[0, 1, -1])], 3), 2);
        assert_eq!(rank_mod(vec![r(&[1, 0]), r(&[0, 5])], 2), 2);
    }
}
