//! Builders for dihedral, Alexander, permutational and `Q_m(e)` quandles.

use crate::algebra::{AlgebraError, MultiplicationTable, Permutation};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Errors from the ring builders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    /// Coefficient modulus below 2.
    #[error("coefficient modulus must be at least 2")]
    Modulus,
    /// Modulus polynomial must be monic of degree at least 1.
    #[error("modulus polynomial must be monic of positive degree")]
    NotMonic,
    /// `t` has no inverse in the quotient.
    #[error("t is not invertible: constant term {0} is not a unit")]
    TNotInvertible(u32),
    /// Ring too large to tabulate.
    #[error("ring of size {0} is too large")]
    TooLarge(usize),
}

/// `Z_n[t]/(f)` with elements stored as coefficient vectors of degree `< deg f`.
///
/// Element `i` has coefficients given by the base-`n` digits of `i`, lowest
/// degree first. Over `Z_2[t]/(t^2+t+1)` this lists `0, 1, t, 1+t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    modulus_n: u32,
    modulus_poly: Vec<u32>,
}

impl QuotientRing {
    /// `modulus_poly` lists coefficients from the constant term up.
    pub fn new(modulus_n: u32, modulus_poly: Vec<u32>) -> Result<Self, RingError> {
        if modulus_n < 2 {
            return Err(RingError::Modulus);
        }
        let poly: Vec<u32> = modulus_poly.into_iter().map(|c| c % modulus_n).collect();
        if poly.len() < 2 || *poly.last().unwrap() != 1 {
            return Err(RingError::NotMonic);
        }
        if gcd(poly[0], modulus_n) != 1 {
            return Err(RingError::TNotInvertible(poly[0]));
        }
        let size = (modulus_n as usize).checked_pow(poly.len() as u32 - 1).ok_or(RingError::TooLarge(usize::MAX))?;
        if size > 1 << 16 {
            return Err(RingError::TooLarge(size));
        }
        Ok(Self { modulus_n, modulus_poly: poly })
    }

    /// Degree of the modulus.
    pub fn degree(&self) -> usize {
        self.modulus_poly.len() - 1
    }

    /// Number of elements, `n^deg f`.
    pub fn size(&self) -> usize {
        (self.modulus_n as usize).pow(self.degree() as u32)
    }

    /// Coefficients of element `i`.
    pub fn coefficients(&self, i: usize) -> Vec<u32> {
        let n = self.modulus_n as usize;
        let mut x = i;
        (0..self.degree())
            .map(|_| {
                let c = (x % n) as u32;
                x /= n;
                c
            })
            .collect()
    }

    /// Index of a coefficient vector.
    pub fn index(&self, coeffs: &[u32]) -> usize {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.modulus_n as usize + c as usize)
    }

    /// Sum.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(p, q)| (p + q) % self.modulus_n).collect();
        self.index(&s)
    }

    /// Additive inverse.
    pub fn neg(&self, a: usize) -> usize {
        let s: Vec<u32> = self.coefficients(a).iter().map(|&c| (self.modulus_n - c) % self.modulus_n).collect();
        self.index(&s)
    }

    /// Product reduced modulo `f`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let d = self.degree();
        let n = self.modulus_n as u64;
        let mut prod = vec![0u64; 2 * d];
        for (i, &p) in x.iter().enumerate() {
            for (j, &q) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + p as u64 * q as u64) % n;
            }
        }
        for k in (d..2 * d).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &f) in self.modulus_poly.iter().enumerate() {
                prod[k - d + i] = (prod[k - d + i] + n * n - c * f as u64 % n) % n;
            }
        }
        let r: Vec<u32> = prod[..d].iter().map(|&c| c as u32).collect();
        self.index(&r)
    }

    /// The element `t`, or `t mod f` when `deg f = 1`.
    pub fn t(&self) -> usize {
        if self.degree() > 1 {
            self.modulus_n as usize
        } else {
            self.neg(self.modulus_poly[0] as usize)
        }
    }

    /// The element 1.
    pub fn one(&self) -> usize {
        1
    }

    /// Multiplicative inverse, if any.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.mul(a, b) == self.one())
    }

    /// Polynomial label such as `1+t^2`.
    pub fn label(&self, i: usize) -> String {
        let c = self.coefficients(i);
        let mut parts = Vec::new();
        for (k, &v) in c.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            parts.push(match (v, k) {
                (v, 0) => v.to_string(),
                (1, _) => mono,
                (v, _) => format!("{v}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `x * y = 2y - x mod n`.
pub fn dihedral_quandle(n: usize) -> MultiplicationTable {
    MultiplicationTable::from_fn(n, |x, y| (2 * y + n - x) % n).expect("n >= 1")
}

/// `x * y = x`.
pub fn projection_quandle(n: usize) -> MultiplicationTable {
    MultiplicationTable::from_fn(n, |x, _| x).expect("n >= 1")
}

/// `x * y = f(x)`.
pub fn permutational_rack(f: &Permutation) -> MultiplicationTable {
    MultiplicationTable::from_fn(f.degree(), |x, _| f.apply(x)).expect("degree >= 1")
}

/// `a * b = t a + (1 - t) b`, labelled by polynomials.
pub fn alexander_quandle(ring: &QuotientRing) -> MultiplicationTable {
    let t = ring.t();
    let one_minus_t = ring.add(ring.one(), ring.neg(t));
    let labels = (0..ring.size()).map(|i| ring.label(i)).collect();
    MultiplicationTable::from_fn(ring.size(), |a, b| ring.add(ring.mul(t, a), ring.mul(one_minus_t, b)))
        .and_then(|q| q.with_labels(labels))
        .expect("ring is nonempty")
}

/// The Alexander quandle on `Z_2[t]/(t^2+t+1)`, elements `0, 1, t, t^-1`.
pub fn q4() -> MultiplicationTable {
    let ring = QuotientRing::new(2, vec![1, 1, 1]).expect("valid ring");
    let labels = ["0", "1", "t", "t^-1"].iter().map(|s| s.to_string()).collect();
    alexander_quandle(&ring).with_labels(labels).expect("four labels")
}

/// The Alexander quandle on `Z_2[t]/(t^4+t^3+t^2+t+1)`, order 16.
pub fn alexander_16() -> MultiplicationTable {
    alexander_quandle(&QuotientRing::new(2, vec![1, 1, 1, 1, 1]).expect("valid ring"))
}

/// Bit vector `e` in `Z_2^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeVector {
    bits: Vec<bool>,
}

impl TypeVector {
    /// From explicit bits; `m = bits.len() >= 1`.
    pub fn new(bits: Vec<bool>) -> Option<Self> {
        (!bits.is_empty()).then_some(Self { bits })
    }

    /// All `2^m` vectors of length `m`, bit 0 first.
    pub fn all(m: usize) -> Vec<Self> {
        (0..1usize << m).map(|v| Self { bits: (0..m).map(|k| v >> k & 1 == 1).collect() }).collect()
    }

    /// Length `m`.
    pub fn m(&self) -> usize {
        self.bits.len()
    }

    /// As an integer, bit `k` from entry `k`.
    pub fn value(&self) -> usize {
        self.bits.iter().enumerate().map(|(k, &b)| (b as usize) << k).sum()
    }
}

/// `Q_m(e)` on `Z_3 x Z_2^m`; element `(i, a)` has index `i * 2^m + a`.
///
/// `(i,a) * (j,b) = (-i-j, c)` with `c = a`, `a+b` or `a+b+e` as `i-j` is
/// 0, 1 or 2 mod 3.
pub fn qme(e: &TypeVector) -> MultiplicationTable {
    let m = e.m();
    let size = 1usize << m;
    let ev = e.value();
    let labels = (0..3 * size)
        .map(|x| {
            let (i, a) = (x / size, x % size);
            let bits: String = (0..m).map(|k| if a >> k & 1 == 1 { '1' } else { '0' }).collect();
            format!("({i},{bits})")
        })
        .collect();
    MultiplicationTable::from_fn(3 * size, |x, y| {
        let (i, a) = (x / size, x % size);
        let (j, b) = (y / size, y % size);
        let c = match (i + 3 - j) % 3 {
            0 => a,
            1 => a ^ b,
            _ => a ^ b ^ ev,
        };
        ((6 - i - j) % 3) * size + c
    })
    .and_then(|q| q.with_labels(labels))
    .expect("nonempty")
}

/// Index of `(i, a)` in `Q_m(e)`.
pub fn qme_index(m: usize, i: usize, a: usize) -> usize {
    i * (1 << m) + a
}

/// Checks the table is a quandle, for builders taking raw rows.
pub fn quandle_from_rows(rows: Vec<Vec<usize>>) -> Result<MultiplicationTable, AlgebraError> {
    let t = MultiplicationTable::new(rows)?;
    if !t.is_quandle() {
        return Err(AlgebraError::NotRack);
    }
    Ok(t)
}
