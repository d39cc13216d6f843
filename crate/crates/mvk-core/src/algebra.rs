//! Finite magmas, racks and quandles.
//!
//! Tables are stored row-major with `cells[x][y] = x * y`. The right
//! translation `R_y` is column `y`. Division `x / y` is the unique `z` with
//! `z * y = x`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default cap on the size of an enumerated permutation group.
pub const DEFAULT_GROUP_LIMIT: usize = 1_000_000;

/// Errors raised by table and group operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    /// Order zero.
    #[error("table has order zero")]
    Empty,
    /// Wrong number of rows or columns.
    #[error("expected {expected} entries in row {row}, found {found}")]
    Dimension {
        /// Offending row.
        row: usize,
        /// Expected length.
        expected: usize,
        /// Actual length.
        found: usize,
    },
    /// A cell outside `0..n`.
    #[error("cell ({row},{col}) holds {value}, outside 0..{n}")]
    OutOfRange {
        /// Row.
        row: usize,
        /// Column.
        col: usize,
        /// Value found.
        value: usize,
        /// Order.
        n: usize,
    },
    /// Some column is not a permutation.
    #[error("column {0} is not a permutation; table is not a right quasigroup")]
    NotRightQuasigroup(usize),
    /// Right self-distributivity fails.
    #[error("table is not a rack")]
    NotRack,
    /// Element index outside the table.
    #[error("element {0} outside the table")]
    NoSuchElement(usize),
    /// Image array is not a bijection.
    #[error("image array is not a bijection")]
    NotBijection,
    /// Permutations of different degree were mixed.
    #[error("permutation degree {found}, expected {expected}")]
    DegreeMismatch {
        /// Expected degree.
        expected: usize,
        /// Degree found.
        found: usize,
    },
    /// Group enumeration hit its cap.
    #[error("group exceeds the element limit {0}")]
    GroupTooLarge(usize),
    /// Label table length differs from the order.
    #[error("{found} labels for a table of order {n}")]
    LabelCount {
        /// Order.
        n: usize,
        /// Labels supplied.
        found: usize,
    },
}

/// A finite magma on `{0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicationTable {
    n: usize,
    cells: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl MultiplicationTable {
    /// Builds a table from rows, `rows[x][y] = x * y`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(AlgebraError::Dimension { row, expected: n, found: r.len() });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(AlgebraError::OutOfRange { row, col, value, n });
                }
            }
            cells.extend(r);
        }
        Ok(Self { n, cells, labels: None })
    }

    /// Builds a table from a product function.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, AlgebraError> {
        let rows = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Self::new(rows)
    }

    /// Attaches display names.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.n {
            return Err(AlgebraError::LabelCount { n: self.n, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Drops display names.
    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Order of the magma.
    pub fn order(&self) -> usize {
        self.n
    }

    /// `x * y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    /// Row `x`: `x * 0, .., x * (n-1)`.
    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    /// All rows as vectors.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    /// Display names, if any.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Element with the given display name or decimal index.
    pub fn element_named(&self, name: &str) -> Option<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|s| s == name) {
                return Some(i);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i < self.n)
    }

    /// True iff every column is a permutation.
    pub fn is_right_quasigroup(&self) -> bool {
        (0..self.n).all(|y| column_is_bijective(self, y))
    }

    fn first_bad_column(&self) -> Option<usize> {
        (0..self.n).find(|&y| !column_is_bijective(self, y))
    }

    /// True iff right quasigroup with `(x*y)*z = (x*z)*(y*z)`.
    pub fn is_rack(&self) -> bool {
        self.is_right_quasigroup() && self.right_distributive()
    }

    /// True iff rack with `x*x = x`.
    pub fn is_quandle(&self) -> bool {
        self.is_rack() && (0..self.n).all(|x| self.op(x, x) == x)
    }

    fn right_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.op(self.op(x, y), z) == self.op(self.op(x, z), self.op(y, z)))))
    }

    /// The division table, `div[x][y] = x / y`.
    pub fn division_table(&self) -> Result<Vec<Vec<usize>>, AlgebraError> {
        if let Some(c) = self.first_bad_column() {
            return Err(AlgebraError::NotRightQuasigroup(c));
        }
        let n = self.n;
        let mut div = vec![vec![0; n]; n];
        for y in 0..n {
            for z in 0..n {
                div[self.op(z, y)][y] = z;
            }
        }
        Ok(div)
    }

    fn check(&self, x: usize) -> Result<(), AlgebraError> {
        if x < self.n {
            Ok(())
        } else {
            Err(AlgebraError::NoSuchElement(x))
        }
    }
}

fn column_is_bijective(t: &MultiplicationTable, y: usize) -> bool {
    let mut seen = vec![false; t.n];
    for x in 0..t.n {
        let v = t.op(x, y);
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// A permutation of `{0..n-1}` stored by images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity of degree `n`.
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Checked constructor.
    pub fn from_images(images: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(AlgebraError::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, AlgebraError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n || moved[x] {
                    return Err(AlgebraError::NotBijection);
                }
                moved[x] = true;
                images[x] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    /// Degree.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image array.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Self { images: inv }
    }

    /// True iff identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// True iff `self ∘ other = other ∘ self`.
    pub fn commutes_with(&self, other: &Self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| other.images[y] == self.images[other.images[x]])
    }

    /// Integer power, negative exponents allowed.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Nontrivial cycles, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.images[s] == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    /// True iff `f(x*y) = f(x)*f(y)` for all `x, y`.
    pub fn is_automorphism_of(&self, t: &MultiplicationTable) -> bool {
        self.degree() == t.order()
            && (0..t.order()).all(|x| (0..t.order()).all(|y| self.apply(t.op(x, y)) == t.op(self.apply(x), self.apply(y))))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// An explicitly enumerated permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Generators as supplied.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements, sorted by image array.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Membership test.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// True iff all elements commute.
    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

/// Breadth-first closure of `gens` under composition.
///
/// `degree` is used when `gens` is empty.
pub fn generate_group(degree: usize, gens: &[Permutation], limit: usize) -> Result<PermGroup, AlgebraError> {
    for g in gens {
        if g.degree() != degree {
            return Err(AlgebraError::DegreeMismatch { expected: degree, found: g.degree() });
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for g in gens {
                let q = g.compose(p);
                if !seen.contains(&q) {
                    if seen.len() >= limit {
                        return Err(AlgebraError::GroupTooLarge(limit));
                    }
                    seen.insert(q.clone());
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    Ok(PermGroup { generators: gens.to_vec(), elements: seen.into_iter().collect() })
}

/// `x / y`, the unique `z` with `z * y = x`.
pub fn right_divide(t: &MultiplicationTable, x: usize, y: usize) -> Result<usize, AlgebraError> {
    t.check(x)?;
    t.check(y)?;
    if !column_is_bijective(t, y) {
        return Err(AlgebraError::NotRightQuasigroup(y));
    }
    Ok((0..t.order()).find(|&z| t.op(z, y) == x).expect("bijective column"))
}

/// `R_x : y ↦ y * x`.
pub fn right_translation(t: &MultiplicationTable, x: usize) -> Result<Permutation, AlgebraError> {
    t.check(x)?;
    Permutation::from_images((0..t.order()).map(|y| t.op(y, x)).collect()).map_err(|_| AlgebraError::NotRightQuasigroup(x))
}

/// All right translations `R_0 .. R_{n-1}`.
pub fn right_translations(t: &MultiplicationTable) -> Result<Vec<Permutation>, AlgebraError> {
    (0..t.order()).map(|x| right_translation(t, x)).collect()
}

/// `Rmlt(Q)`, generated by the right translations.
pub fn right_multiplication_group(t: &MultiplicationTable, limit: usize) -> Result<PermGroup, AlgebraError> {
    generate_group(t.order(), &right_translations(t)?, limit)
}

/// `Rdis(Q)`, generated by all `R_x^{-1} R_y`.
pub fn displacement_group(t: &MultiplicationTable, limit: usize) -> Result<PermGroup, AlgebraError> {
    if !t.is_rack() {
        return Err(AlgebraError::NotRack);
    }
    let rs = right_translations(t)?;
    let mut gens = BTreeSet::new();
    for a in &rs {
        let ai = a.inverse();
        for b in &rs {
            let g = ai.compose(b);
            if !g.is_identity() {
                gens.insert(g);
            }
        }
    }
    let gens: Vec<_> = gens.into_iter().collect();
    generate_group(t.order(), &gens, limit)
}

/// True iff `Rmlt(Q)` is transitive.
pub fn is_connected(t: &MultiplicationTable) -> Result<bool, AlgebraError> {
    if !t.is_rack() {
        return Err(AlgebraError::NotRack);
    }
    Ok(orbit(t, 0).len() == t.order())
}

fn orbit(t: &MultiplicationTable, start: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in 0..t.order() {
            let z = t.op(x, y);
            if seen.insert(z) {
                stack.push(z);
            }
        }
    }
    seen
}

/// Which identities a table satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IdentityProfile {
    /// Every column is a permutation.
    pub right_quasigroup: bool,
    /// Right quasigroup and right self-distributive.
    pub rack: bool,
    /// Idempotent rack.
    pub quandle: bool,
    /// `(xu)(vy) = (xv)(uy)`.
    pub medial: bool,
    /// `(xy)x = xy`.
    pub graphic: bool,
    /// `x(yx) = xy`.
    pub paragraphic: bool,
    /// `x(yx) = (xy)x`.
    pub flexible: bool,
    /// Right translations are permutations that pairwise commute.
    pub rmlt_abelian: bool,
    /// Rack with transitive `Rmlt`; false when not a rack.
    pub connected: bool,
}

impl IdentityProfile {
    /// Flag names and values, in declaration order.
    pub fn flags(&self) -> [(&'static str, bool); 9] {
        [
            ("right_quasigroup", self.right_quasigroup),
            ("rack", self.rack),
            ("quandle", self.quandle),
            ("medial", self.medial),
            ("graphic", self.graphic),
            ("paragraphic", self.paragraphic),
            ("flexible", self.flexible),
            ("rmlt_abelian", self.rmlt_abelian),
            ("connected", self.connected),
        ]
    }
}

/// Exhaustive identity check.
pub fn classify_magma(t: &MultiplicationTable) -> IdentityProfile {
    let n = t.order();
    let m = |x, y| t.op(x, y);
    let right_quasigroup = t.is_right_quasigroup();
    let rack = right_quasigroup && t.right_distributive();
    let quandle = rack && (0..n).all(|x| m(x, x) == x);
    let medial = (0..n).all(|x| (0..n).all(|u| (0..n).all(|v| (0..n).all(|y| m(m(x, u), m(v, y)) == m(m(x, v), m(u, y))))));
    let graphic = (0..n).all(|x| (0..n).all(|y| m(m(x, y), x) == m(x, y)));
    let paragraphic = (0..n).all(|x| (0..n).all(|y| m(x, m(y, x)) == m(x, y)));
    let flexible = (0..n).all(|x| (0..n).all(|y| m(x, m(y, x)) == m(m(x, y), x)));
    let rmlt_abelian = right_quasigroup && (0..n).all(|a| (0..n).all(|b| (0..n).all(|x| m(m(x, a), b) == m(m(x, b), a))));
    let connected = rack && orbit(t, 0).len() == n;
    IdentityProfile { right_quasigroup, rack, quandle, medial, graphic, paragraphic, flexible, rmlt_abelian, connected }
}

/// Classes of equal right translations, each sorted, ordered by least member.
pub fn cayley_kernel(t: &MultiplicationTable) -> Result<Vec<Vec<usize>>, AlgebraError> {
    if !t.is_rack() {
        return Err(AlgebraError::NotRack);
    }
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for a in 0..t.order() {
        let col: Vec<usize> = (0..t.order()).map(|x| t.op(x, a)).collect();
        classes.entry(col).or_default().push(a);
    }
    let mut out: Vec<_> = classes.into_values().collect();
    out.sort();
    Ok(out)
}

// Partial homomorphism search shared by automorphisms and isomorphisms.
struct HomSearch<'a> {
    a: &'a MultiplicationTable,
    b: &'a MultiplicationTable,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl HomSearch<'_> {
    // Extends the map by closure under products; returns the newly set
    // elements so the caller can undo, or None on conflict.
    fn assign(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut set = Vec::new();
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match self.map[x] {
                Some(v) if v == y => continue,
                Some(_) => return self.fail(set),
                None if self.used[y] => return self.fail(set),
                None => {}
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            set.push(x);
            for &u in &set.clone() {
                let fu = self.map[u].unwrap();
                for w in 0..self.a.order() {
                    if let Some(fw) = self.map[w] {
                        queue.push((self.a.op(u, w), self.b.op(fu, fw)));
                        queue.push((self.a.op(w, u), self.b.op(fw, fu)));
                    }
                }
            }
        }
        Some(set)
    }

    fn fail(&mut self, set: Vec<usize>) -> Option<Vec<usize>> {
        self.undo(&set);
        None
    }

    fn undo(&mut self, set: &[usize]) {
        for &x in set {
            let y = self.map[x].take().unwrap();
            self.used[y] = false;
        }
    }

    fn run(&mut self, out: &mut Vec<Permutation>, first_only: bool) {
        let Some(x) = self.map.iter().position(|m| m.is_none()) else {
            let images = self.map.iter().map(|m| m.unwrap()).collect();
            out.push(Permutation { images });
            return;
        };
        for y in 0..self.b.order() {
            if self.used[y] {
                continue;
            }
            if let Some(set) = self.assign(x, y) {
                self.run(out, first_only);
                self.undo(&set);
                if first_only && !out.is_empty() {
                    return;
                }
            }
        }
    }
}

fn homomorphism_search(a: &MultiplicationTable, b: &MultiplicationTable, first_only: bool) -> Vec<Permutation> {
    if a.order() != b.order() {
        return Vec::new();
    }
    let mut s = HomSearch { a, b, map: vec![None; a.order()], used: vec![false; b.order()] };
    let mut out = Vec::new();
    s.run(&mut out, first_only);
    out.sort();
    out
}

/// All automorphisms, in lexicographic order of image arrays.
pub fn automorphism_group(t: &MultiplicationTable) -> Vec<Permutation> {
    homomorphism_search(t, t, false)
}

/// An isomorphism `f` with `f(x*y) = f(x)*f(y)`, if one exists.
pub fn find_isomorphism(a: &MultiplicationTable, b: &MultiplicationTable) -> Option<Permutation> {
    if a.order() != b.order() || classify_magma(a) != classify_magma(b) {
        return None;
    }
    homomorphism_search(a, b, true).into_iter().next()
}

/// Ordered `k`-tuples of pairwise commuting members of `auts`, as indices.
///
/// With `require_distinct` the members are pairwise different.
pub fn commuting_automorphism_tuples(auts: &[Permutation], k: usize, require_distinct: bool) -> Vec<Vec<usize>> {
    let m = auts.len();
    let commute: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| auts[i].commutes_with(&auts[j])).collect()).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, m: usize, distinct: bool, commute: &[Vec<bool>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..m {
            if cur.iter().all(|&j| commute[i][j] && (!distinct || i != j)) {
                cur.push(i);
                rec(k, m, distinct, commute, cur, out);
                cur.pop();
            }
        }
    }
    rec(k, m, require_distinct, &commute, &mut cur, &mut out);
    out
}

/// Every rack table of order `n`, built column by column from permutations
/// and pruned on partial self-distributivity. Intended for `n <= 4`.
pub fn enumerate_racks(n: usize) -> Vec<MultiplicationTable> {
    let perms = all_permutations(n);
    let mut cols: Vec<usize> = Vec::with_capacity(n);
    let mut out = Vec::new();
    // cell(x, y) = perms[cols[y]][x]
    fn consistent(perms: &[Vec<usize>], cols: &[usize]) -> bool {
        let k = cols.len();
        let n = perms.first().map_or(0, Vec::len);
        let cell = |x: usize, y: usize| perms[cols[y]][x];
        (0..k).all(|y| {
            (0..k).all(|z| {
                let yz = cell(y, z);
                yz >= k || (0..n).all(|x| cell(cell(x, y), z) == cell(cell(x, z), yz))
            })
        })
    }
    fn rec(n: usize, perms: &[Vec<usize>], cols: &mut Vec<usize>, out: &mut Vec<MultiplicationTable>) {
        if cols.len() == n {
            let rows = (0..n).map(|x| (0..n).map(|y| perms[cols[y]][x]).collect()).collect();
            out.push(MultiplicationTable::new(rows).expect("cells in range"));
            return;
        }
        for p in 0..perms.len() {
            cols.push(p);
            if consistent(perms, cols) {
                rec(n, perms, cols, out);
            }
            cols.pop();
        }
    }
    if n > 0 {
        rec(n, &perms, &mut cols, &mut out);
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, &mut cur, &mut out);
    out
}
