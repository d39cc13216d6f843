//! Typing schemes as restricted growth strings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A restricted growth string `a_1 .. a_k`, `a_1 = 1`, `a_{i+1} <= max + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypingScheme(Vec<usize>);

impl TypingScheme {
    /// Checked constructor.
    pub fn new(rgs: Vec<usize>) -> Option<Self> {
        let mut max = 0;
        for &a in &rgs {
            if a == 0 || a > max + 1 {
                return None;
            }
            max = max.max(a);
        }
        Some(Self(rgs))
    }

    /// Entries, 1-based.
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Number of blocks.
    pub fn blocks(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// Digits concatenated, with commas once a block exceeds 9.
impl fmt::Display for TypingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.blocks() > 9;
        for (i, a) in self.0.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Bell number `B_k` by the Bell triangle.
pub fn bell_number(k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..k {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = *next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// All restricted growth strings of length `k` in lexicographic order.
pub fn enumerate_typings(k: usize) -> Vec<TypingScheme> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<TypingScheme>) {
        if cur.len() == k {
            out.push(TypingScheme(cur.clone()));
            return;
        }
        for a in 1..=max + 1 {
            cur.push(a);
            rec(k, max.max(a), cur, out);
            cur.pop();
        }
    }
    rec(k, 0, &mut cur, &mut out);
    out
}

/// Halves of all restricted growth strings of length `2k`, first appearance order.
///
/// Each half assigns one of `2k` operator slots to each of `k` types. For
/// `k = 2` this is `(1,1),(1,2),(2,1),(2,2),(2,3),(1,3),(3,1),(3,2),(3,3),(3,4)`.
pub fn scheme_pairs(k: usize) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in enumerate_typings(2 * k) {
        for half in [&s.0[..k], &s.0[k..]] {
            if seen.insert(half.to_vec()) {
                out.push(half.to_vec());
            }
        }
    }
    out
}
