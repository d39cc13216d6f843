//! The nine generating moves as rewrites of Gauss codes.
//!
//! Planarity is not checked. A gap `(c, g)` is the slot after symbol `g` of
//! component `c`; an empty component has the single gap `(c, 0)`.
//!
//! The three-strand moves use one braid template with strands A, B, C:
//! forward order A:(AB,AC), B:(AB,BC), C:(AC,BC); backward reverses each pair.
//! At every crossing the strand with the earlier letter runs left to right.
//! A classical crossing is positive iff that strand is over; at a virtual
//! crossing that strand has chirality `-`.

use super::{Diagram, Position, Role, Sign, Symbol};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The generating moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Kink, over passage first.
    Omega1a,
    /// Kink, under passage first.
    Omega1b,
    /// Two classical crossings between parallel strands.
    Omega2a,
    /// Classical triangle.
    Omega3a,
    /// Virtual kink, `-` passage first.
    V1a,
    /// Virtual kink, `+` passage first.
    V1b,
    /// Two virtual crossings of one type between parallel strands.
    V2a,
    /// A virtual strand past a classical crossing.
    Cv3a,
    /// A strand of one type past a virtual crossing of any type.
    Mv3a,
}

impl MoveKind {
    /// All kinds.
    pub const ALL: [MoveKind; 9] = [
        MoveKind::Omega1a,
        MoveKind::Omega1b,
        MoveKind::Omega2a,
        MoveKind::Omega3a,
        MoveKind::V1a,
        MoveKind::V1b,
        MoveKind::V2a,
        MoveKind::Cv3a,
        MoveKind::Mv3a,
    ];

    /// ASCII name.
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Omega1a => "omega1a",
            MoveKind::Omega1b => "omega1b",
            MoveKind::Omega2a => "omega2a",
            MoveKind::Omega3a => "omega3a",
            MoveKind::V1a => "v1a",
            MoveKind::V1b => "v1b",
            MoveKind::V2a => "v2a",
            MoveKind::Cv3a => "cv3a",
            MoveKind::Mv3a => "mv3a",
        }
    }

    /// Inverse of [`MoveKind::name`].
    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    fn is_triangle(self) -> bool {
        matches!(self, MoveKind::Omega3a | MoveKind::Cv3a | MoveKind::Mv3a)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Forward inserts crossings or turns the forward triangle into the backward one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// Insertion, or forward to backward triangle.
    Forward,
    /// Deletion, or backward to forward triangle.
    Backward,
}

/// Where a move applies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Locus {
    /// Insert new crossings at gaps. Two-strand moves list the over (or first)
    /// strand's gap first. `sign` is the kink sign, the sign of the first
    /// inserted crossing, or the first strand's chirality at the first
    /// virtual crossing. `label` is set for virtual moves.
    Insert {
        /// Gaps `(component, g)`.
        slots: Vec<(usize, usize)>,
        /// See the variant docs.
        sign: Sign,
        /// Type of the inserted virtual crossings.
        label: Option<String>,
    },
    /// Delete the listed crossings.
    Remove {
        /// Ids in strand order.
        ids: Vec<u32>,
    },
    /// Swap the adjacent pairs starting at these positions, strands A, B, C.
    Triangle {
        /// `(component, index)` of each pair's first symbol.
        pairs: [Position; 3],
    },
}

/// A kind, a direction and a locus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSite {
    /// Move kind.
    pub kind: MoveKind,
    /// Direction.
    pub direction: Direction,
    /// Location.
    pub locus: Locus,
}

/// Failure to apply a move.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    /// The locus does not match the move pattern.
    #[error("invalid site for {kind}: {reason}")]
    InvalidSite {
        /// Move kind.
        kind: MoveKind,
        /// What failed.
        reason: &'static str,
    },
}

fn invalid(kind: MoveKind, reason: &'static str) -> MoveError {
    MoveError::InvalidSite { kind, reason }
}

fn gaps(d: &Diagram) -> Vec<(usize, usize)> {
    d.components().iter().enumerate().flat_map(|(c, comp)| (0..comp.len().max(1)).map(move |g| (c, g))).collect()
}

fn next(d: &Diagram, p: Position) -> Position {
    (p.0, (p.1 + 1) % d.components()[p.0].len())
}

fn prev(d: &Diagram, p: Position) -> Position {
    let l = d.components()[p.0].len();
    (p.0, (p.1 + l - 1) % l)
}

fn other(passages: &BTreeMap<u32, [Position; 2]>, id: u32, p: Position) -> Position {
    let [a, b] = passages[&id];
    if a == p {
        b
    } else {
        a
    }
}

/// Adjacent pairs `(p, next(p))` of distinct crossings.
fn adjacent_pairs(d: &Diagram) -> Vec<Position> {
    let mut out = Vec::new();
    for (c, comp) in d.components().iter().enumerate() {
        if comp.len() < 2 {
            continue;
        }
        for i in 0..comp.len() {
            out.push((c, i));
        }
    }
    out
}

/// Every place where `kind` applies, in both directions.
pub fn enumerate_move_sites(d: &Diagram, kind: MoveKind) -> Vec<MoveSite> {
    let mut out = Vec::new();
    let mut push = |direction, locus| out.push(MoveSite { kind, direction, locus });
    let labels: Vec<String> = d.types().to_vec();
    match kind {
        MoveKind::Omega1a | MoveKind::Omega1b => {
            for g in gaps(d) {
                for sign in [Sign::Pos, Sign::Neg] {
                    push(Direction::Forward, Locus::Insert { slots: vec![g], sign, label: None });
                }
            }
            let first = if kind == MoveKind::Omega1a { Role::Over } else { Role::Under };
            for p in adjacent_pairs(d) {
                if let (Symbol::Classical { id: a, role, .. }, Symbol::Classical { id: b, .. }) = (d.symbol(p), d.symbol(next(d, p))) {
                    if a == b && *role == first {
                        push(Direction::Backward, Locus::Remove { ids: vec![*a] });
                    }
                }
            }
        }
        MoveKind::V1a | MoveKind::V1b => {
            for g in gaps(d) {
                for l in &labels {
                    push(Direction::Forward, Locus::Insert { slots: vec![g], sign: Sign::Pos, label: Some(l.clone()) });
                }
            }
            let first = if kind == MoveKind::V1a { Sign::Neg } else { Sign::Pos };
            for p in adjacent_pairs(d) {
                if let (Symbol::Virtual { id: a, chirality, .. }, Symbol::Virtual { id: b, .. }) = (d.symbol(p), d.symbol(next(d, p))) {
                    if a == b && *chirality == first {
                        push(Direction::Backward, Locus::Remove { ids: vec![*a] });
                    }
                }
            }
        }
        MoveKind::Omega2a | MoveKind::V2a => {
            let gs = gaps(d);
            for &g1 in &gs {
                for &g2 in &gs {
                    for sign in [Sign::Pos, Sign::Neg] {
                        if kind == MoveKind::Omega2a {
                            push(Direction::Forward, Locus::Insert { slots: vec![g1, g2], sign, label: None });
                        } else {
                            for l in &labels {
                                let locus = Locus::Insert { slots: vec![g1, g2], sign, label: Some(l.clone()) };
                                push(Direction::Forward, locus);
                            }
                        }
                    }
                }
            }
            let mut seen = BTreeSet::new();
            for ids in bigons(d, kind) {
                let key: BTreeSet<u32> = ids.iter().copied().collect();
                if seen.insert(key) {
                    push(Direction::Backward, Locus::Remove { ids });
                }
            }
        }
        MoveKind::Omega3a | MoveKind::Cv3a | MoveKind::Mv3a => {
            let mut seen = BTreeSet::new();
            for (direction, pairs) in triangles(d) {
                if classify_triangle(d, &pairs, direction) == Some(kind) && seen.insert((direction, pairs)) {
                    push(direction, Locus::Triangle { pairs });
                }
            }
        }
    }
    out
}

// Pairs (k1, k2) whose passages are adjacent in the same order on two strands.
fn bigons(d: &Diagram, kind: MoveKind) -> Vec<Vec<u32>> {
    let passages = d.passages();
    let mut out = Vec::new();
    for p in adjacent_pairs(d) {
        let (s1, s2) = (d.symbol(p), d.symbol(next(d, p)));
        let (k1, k2) = (s1.id(), s2.id());
        if k1 == k2 {
            continue;
        }
        let q = other(&passages, k1, p);
        let q2 = other(&passages, k2, next(d, p));
        if d.components()[q.0].len() < 2 || next(d, q) != q2 {
            continue;
        }
        let ok = match (s1, s2, d.symbol(q)) {
            (
                Symbol::Classical { role: Role::Over, sign: a, .. },
                Symbol::Classical { role: Role::Over, sign: b, .. },
                Symbol::Classical { .. },
            ) => kind == MoveKind::Omega2a && a != b,
            (
                Symbol::Virtual { label: l1, chirality: c1, .. },
                Symbol::Virtual { label: l2, chirality: c2, .. },
                Symbol::Virtual { .. },
            ) => kind == MoveKind::V2a && l1 == l2 && c1 != c2,
            _ => false,
        };
        if ok {
            out.push(vec![k1, k2]);
        }
    }
    out
}

// Every placement of the braid template, forward and backward.
fn triangles(d: &Diagram) -> Vec<(Direction, [Position; 3])> {
    let passages = d.passages();
    let mut out = Vec::new();
    for a in adjacent_pairs(d) {
        let a2 = next(d, a);
        let (x, y) = (d.symbol(a).id(), d.symbol(a2).id());
        if x == y {
            continue;
        }
        let xo = other(&passages, x, a);
        let yo = other(&passages, y, a2);
        if d.components()[xo.0].len() < 2 || d.components()[yo.0].len() < 2 {
            continue;
        }
        // Forward: A = (AB, AC) with AB = x, AC = y.
        let (n1, n2) = (next(d, xo), next(d, yo));
        let bc = d.symbol(n1).id();
        if bc != x && bc != y && d.symbol(n2).id() == bc && n1 != n2 {
            out.push((Direction::Forward, [a, xo, yo]));
        }
        // Backward: A = (AC, AB) with AC = x, AB = y.
        let (p1, p2) = (prev(d, yo), prev(d, xo));
        let bc = d.symbol(p1).id();
        if bc != x && bc != y && d.symbol(p2).id() == bc && p1 != p2 {
            out.push((Direction::Backward, [a, p1, p2]));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strand {
    A,
    B,
    C,
}

// Which kind of three-strand move the triangle is, if any.
fn classify_triangle(d: &Diagram, pairs: &[Position; 3], direction: Direction) -> Option<MoveKind> {
    use Strand::*;
    let [a, b, c] = *pairs;
    let head = |p: Position| d.symbol(p);
    let tail = |p: Position| d.symbol(next(d, p));
    // Passages (earlier strand, later strand) at AB, AC and BC.
    let (ab, ac, bc) = match direction {
        Direction::Forward => ((head(a), head(b)), (tail(a), head(c)), (tail(b), tail(c))),
        Direction::Backward => ((tail(a), tail(b)), (head(a), tail(c)), (head(b), head(c))),
    };
    let crossings = [(A, B, ab), (A, C, ac), (B, C, bc)];
    let mut over: Vec<(Strand, Strand)> = Vec::new();
    let mut virtuals: Vec<(Strand, Strand, &String)> = Vec::new();
    for (x, y, (px, py)) in crossings {
        match (px, py) {
            (Symbol::Classical { role: rx, sign, .. }, Symbol::Classical { .. }) => {
                let x_over = *rx == Role::Over;
                if (*sign == Sign::Pos) != x_over {
                    return None;
                }
                over.push(if x_over { (x, y) } else { (y, x) });
            }
            (Symbol::Virtual { label, chirality: cx, .. }, Symbol::Virtual { .. }) => {
                if *cx != Sign::Neg {
                    return None;
                }
                virtuals.push((x, y, label));
            }
            _ => return None,
        }
    }
    match virtuals.len() {
        0 => {
            let beats = |p: Strand, q: Strand| over.contains(&(p, q));
            let cyclic = (beats(A, B) && beats(B, C) && beats(C, A)) || (beats(B, A) && beats(C, B) && beats(A, C));
            (!cyclic).then_some(MoveKind::Omega3a)
        }
        2 => {
            // Any two crossings of the triangle share a strand.
            (virtuals[0].2 == virtuals[1].2).then_some(MoveKind::Cv3a)
        }
        3 => {
            let label = |p: Strand, q: Strand| virtuals.iter().find(|v| (v.0, v.1) == (p, q)).map(|v| v.2);
            let (lab, lac, lbc) = (label(A, B), label(A, C), label(B, C));
            let some_strand = lab == lac || lab == lbc || lac == lbc;
            some_strand.then_some(MoveKind::Mv3a)
        }
        _ => None,
    }
}

/// Applies a move; `direction` must match the site.
pub fn apply_move(d: &Diagram, kind: MoveKind, locus: &Locus, direction: Direction) -> Result<Diagram, MoveError> {
    match locus {
        Locus::Insert { slots, sign, label } => {
            if direction != Direction::Forward {
                return Err(invalid(kind, "insertion runs forward"));
            }
            insert(d, kind, slots, *sign, label.as_deref())
        }
        Locus::Remove { ids } => {
            if direction != Direction::Backward {
                return Err(invalid(kind, "deletion runs backward"));
            }
            let ok = enumerate_move_sites(d, kind).iter().any(|s| match &s.locus {
                Locus::Remove { ids: other } => {
                    let a: BTreeSet<_> = other.iter().collect();
                    let b: BTreeSet<_> = ids.iter().collect();
                    a == b
                }
                _ => false,
            });
            if !ok {
                return Err(invalid(kind, "crossings do not form the pattern"));
            }
            let components = d.components().iter().map(|c| c.iter().filter(|s| !ids.contains(&s.id())).cloned().collect()).collect();
            Ok(Diagram::from_parts_unchecked(d.types().to_vec(), components))
        }
        Locus::Triangle { pairs } => {
            if !kind.is_triangle() {
                return Err(invalid(kind, "not a three-strand move"));
            }
            let found = triangles(d).into_iter().any(|(dir, p)| dir == direction && p == *pairs);
            if !found || classify_triangle(d, pairs, direction) != Some(kind) {
                return Err(invalid(kind, "pairs do not form the template"));
            }
            let mut comps = d.components().to_vec();
            for &(c, i) in pairs {
                let j = (i + 1) % comps[c].len();
                comps[c].swap(i, j);
            }
            Ok(Diagram::from_parts_unchecked(d.types().to_vec(), comps))
        }
    }
}

fn insert(d: &Diagram, kind: MoveKind, slots: &[(usize, usize)], sign: Sign, label: Option<&str>) -> Result<Diagram, MoveError> {
    for &(c, g) in slots {
        if c >= d.components().len() || g >= d.components()[c].len().max(1) {
            return Err(invalid(kind, "gap out of range"));
        }
    }
    let k = d.fresh_id();
    let virtual_label = || -> Result<&str, MoveError> {
        let l = label.ok_or(invalid(kind, "missing type label"))?;
        if !d.types().iter().any(|t| t == l) {
            return Err(invalid(kind, "type label not declared"));
        }
        Ok(l)
    };
    let blocks: Vec<Vec<Symbol>> = match (kind, slots.len()) {
        (MoveKind::Omega1a, 1) => vec![vec![Symbol::over(k, sign), Symbol::under(k, sign)]],
        (MoveKind::Omega1b, 1) => vec![vec![Symbol::under(k, sign), Symbol::over(k, sign)]],
        (MoveKind::V1a, 1) => {
            let l = virtual_label()?;
            vec![vec![Symbol::virt(k, l, Sign::Neg), Symbol::virt(k, l, Sign::Pos)]]
        }
        (MoveKind::V1b, 1) => {
            let l = virtual_label()?;
            vec![vec![Symbol::virt(k, l, Sign::Pos), Symbol::virt(k, l, Sign::Neg)]]
        }
        (MoveKind::Omega2a, 2) => vec![
            vec![Symbol::over(k, sign), Symbol::over(k + 1, sign.flip())],
            vec![Symbol::under(k, sign), Symbol::under(k + 1, sign.flip())],
        ],
        (MoveKind::V2a, 2) => {
            let l = virtual_label()?;
            vec![
                vec![Symbol::virt(k, l, sign), Symbol::virt(k + 1, l, sign.flip())],
                vec![Symbol::virt(k, l, sign.flip()), Symbol::virt(k + 1, l, sign)],
            ]
        }
        _ => return Err(invalid(kind, "wrong number of gaps for this move")),
    };
    // Group blocks by insertion index, keep slot order within a gap.
    let mut at: BTreeMap<(usize, usize), Vec<Symbol>> = BTreeMap::new();
    for (&(c, g), block) in slots.iter().zip(blocks) {
        let idx = if d.components()[c].is_empty() { 0 } else { g + 1 };
        at.entry((c, idx)).or_default().extend(block);
    }
    let mut comps = d.components().to_vec();
    for ((c, idx), block) in at.into_iter().rev() {
        comps[c].splice(idx..idx, block);
    }
    Ok(Diagram::from_parts_unchecked(d.types().to_vec(), comps))
}
