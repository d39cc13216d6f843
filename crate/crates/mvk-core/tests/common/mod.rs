#![allow(dead_code)]

use mvk_core::algebra::{MultiplicationTable, Permutation};
use mvk_core::constructions::q4;

pub fn cq_5_2() -> MultiplicationTable {
    MultiplicationTable::new(vec![vec![0, 4, 3, 2, 1], vec![2, 1, 0, 4, 3], vec![4, 3, 2, 1, 0], vec![1, 0, 4, 3, 2], vec![3, 2, 1, 0, 4]])
        .unwrap()
}

pub fn cq_10_1() -> MultiplicationTable {
    MultiplicationTable::new(vec![
        vec![0, 0, 5, 9, 6, 2, 4, 0, 0, 3],
        vec![1, 1, 6, 1, 5, 4, 2, 8, 7, 1],
        vec![5, 6, 2, 2, 2, 0, 1, 9, 2, 7],
        vec![9, 3, 3, 3, 8, 7, 3, 5, 4, 0],
        vec![6, 5, 4, 8, 4, 1, 0, 4, 3, 4],
        vec![2, 4, 0, 7, 1, 5, 5, 3, 5, 5],
        vec![4, 2, 1, 6, 0, 6, 6, 6, 9, 8],
        vec![7, 8, 9, 5, 7, 3, 7, 7, 1, 2],
        vec![8, 7, 8, 4, 3, 8, 9, 1, 8, 6],
        vec![3, 9, 7, 0, 9, 9, 8, 2, 6, 9],
    ])
    .unwrap()
}

/// `ω = (2,4,5,3)` on the labels 1..5.
pub fn omega() -> Permutation {
    Permutation::from_cycles(5, &[&[1, 3, 4, 2]]).unwrap()
}

/// `θ = (1, t, t^-1)`.
pub fn theta() -> Permutation {
    Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap()
}

pub fn q4_table() -> MultiplicationTable {
    q4()
}

/// Ring element written as `1+t+t^3` to its bit index.
pub fn poly_index(s: &str) -> usize {
    s.split('+')
        .map(|m| match m {
            "1" => 1,
            "t" => 2,
            m => 1 << m.trim_start_matches("t^").parse::<usize>().unwrap(),
        })
        .sum()
}

fn cycles16(cs: &[&[&str]]) -> Permutation {
    let v: Vec<Vec<usize>> = cs.iter().map(|c| c.iter().map(|s| poly_index(s)).collect()).collect();
    let r: Vec<&[usize]> = v.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(16, &r).unwrap()
}

pub fn sigma() -> Permutation {
    cycles16(&[&[
        "t^3",
        "t^2+t^3",
        "t+t^3",
        "1+t+t^2+t^3",
        "1+t+t^2",
        "1+t+t^3",
        "1",
        "t+t^2+t^3",
        "1+t^3",
        "t",
        "1+t",
        "1+t^2+t^3",
        "t^2",
        "t+t^2",
        "1+t^2",
    ]])
}

pub fn tau() -> Permutation {
    cycles16(&[
        &["t^3", "t", "1+t+t^2+t^3", "t^2", "1"],
        &["t^2+t^3", "1+t", "1+t+t^2", "t+t^2", "t+t^2+t^3"],
        &["t+t^3", "1+t^2+t^3", "1+t+t^3", "1+t^2", "1+t^3"],
    ])
}

/// Conjugation quandle `x*y = y^-1 x y` on a list of group elements.
pub fn conjugation_quandle<T: PartialEq + Clone>(elems: &[T], mul: impl Fn(&T, &T) -> T, inv: impl Fn(&T) -> T) -> MultiplicationTable {
    let n = elems.len();
    MultiplicationTable::from_fn(n, |x, y| {
        let z = mul(&mul(&inv(&elems[y]), &elems[x]), &elems[y]);
        elems.iter().position(|e| *e == z).unwrap()
    })
    .unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Composition in S_n, `p` after `q`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut r = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        r[x] = i;
    }
    r
}

/// Brute-force automorphisms, lexicographic.
pub fn brute_automorphisms(t: &MultiplicationTable) -> Vec<Vec<usize>> {
    let n = t.order();
    all_perms(n).into_iter().filter(|f| (0..n).all(|x| (0..n).all(|y| f[t.op(x, y)] == t.op(f[x], f[y])))).collect()
}

pub fn brute_isomorphic(a: &MultiplicationTable, b: &MultiplicationTable) -> bool {
    let n = a.order();
    n == b.order() && all_perms(n).into_iter().any(|f| (0..n).all(|x| (0..n).all(|y| f[a.op(x, y)] == b.op(f[x], f[y]))))
}

/// Symmetric group on 4 points.
pub fn s4() -> Vec<Vec<usize>> {
    all_perms(4)
}

pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut t = vec![];
    for i in 0..p.len() {
        let mut l = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            l += 1;
        }
        if l > 0 {
            t.push(l);
        }
    }
    t.sort();
    t
}

pub fn cq_6_1() -> MultiplicationTable {
    let e: Vec<_> = s4().into_iter().filter(|p| cycle_type(p) == [1, 1, 2]).collect();
    conjugation_quandle(&e, |a, b| compose(a, b), |a| invert(a))
}

pub fn cq_6_2() -> MultiplicationTable {
    let e: Vec<_> = s4().into_iter().filter(|p| cycle_type(p) == [4]).collect();
    conjugation_quandle(&e, |a, b| compose(a, b), |a| invert(a))
}

// Z2^2 x| S4 with S4 acting on the nonzero vectors through the three
// pair partitions of {0,1,2,3}.
type Affine = (usize, Vec<usize>);

fn partition_action(p: &[usize], v: usize) -> usize {
    if v == 0 {
        return 0;
    }
    let parts = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];
    let norm = |pp: [[usize; 2]; 2]| {
        let mut a = pp.map(|mut x| {
            x.sort();
            x
        });
        a.sort();
        a
    };
    let img = norm(parts[v - 1].map(|pair| pair.map(|x| p[x])));
    1 + parts.iter().position(|q| norm(*q) == img).unwrap()
}

fn affine_mul(a: &Affine, b: &Affine) -> Affine {
    (a.0 ^ partition_action(&a.1, b.0), compose(&a.1, &b.1))
}

fn affine_inv(a: &Affine) -> Affine {
    let p = invert(&a.1);
    (partition_action(&p, a.0), p)
}

/// The 12-element involution class containing `(0, (2 3))`, sorted.
pub fn cq_12_8() -> MultiplicationTable {
    let g: Vec<Affine> = (0..4).flat_map(|v| s4().into_iter().map(move |p| (v, p))).collect();
    let x: Affine = (0, vec![0, 1, 3, 2]);
    let mut class: Vec<Affine> = g.iter().map(|h| affine_mul(&affine_mul(h, &x), &affine_inv(h))).collect();
    class.sort();
    class.dedup();
    assert_eq!(class.len(), 12);
    conjugation_quandle(&class, affine_mul, affine_inv)
}
