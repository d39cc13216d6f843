//! Oriented multi-virtual link diagrams as typed signed Gauss codes.
//!
//! Each component is a cyclic list of passages. A classical crossing appears
//! once as over and once as under with the same sign. A virtual crossing
//! appears twice with the same type label and opposite chirality.
//!
//! Text form of a symbol: `O+3`, `U-3`, `Vα+7`.

mod builtin;
mod moves;
mod typing;

pub use builtin::{builtin_diagram, builtin_names, builtin_with_labels, k_family, l_family};
pub use moves::{apply_move, enumerate_move_sites, Direction, Locus, MoveError, MoveKind, MoveSite};
pub use typing::{bell_number, enumerate_typings, scheme_pairs, TypingScheme};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Crossing sign or virtual chirality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `+`
    Pos,
    /// `-`
    Neg,
}

impl Sign {
    /// The other sign.
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    fn as_char(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// Over or under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Over passage.
    Over,
    /// Under passage.
    Under,
}

/// One passage through a crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// Passage through a classical crossing.
    Classical {
        /// Crossing id.
        id: u32,
        /// Over or under.
        role: Role,
        /// Crossing sign.
        sign: Sign,
    },
    /// Passage through a virtual crossing.
    Virtual {
        /// Crossing id.
        id: u32,
        /// Type label.
        label: String,
        /// `+` means the color rule `a ↦ α(a)`.
        chirality: Sign,
    },
}

impl Symbol {
    /// Over passage.
    pub fn over(id: u32, sign: Sign) -> Self {
        Symbol::Classical { id, role: Role::Over, sign }
    }

    /// Under passage.
    pub fn under(id: u32, sign: Sign) -> Self {
        Symbol::Classical { id, role: Role::Under, sign }
    }

    /// Virtual passage.
    pub fn virt(id: u32, label: &str, chirality: Sign) -> Self {
        Symbol::Virtual { id, label: label.to_string(), chirality }
    }

    /// Crossing id.
    pub fn id(&self) -> u32 {
        match self {
            Symbol::Classical { id, .. } | Symbol::Virtual { id, .. } => *id,
        }
    }

    /// True for classical passages.
    pub fn is_classical(&self) -> bool {
        matches!(self, Symbol::Classical { .. })
    }

    fn with_id(&self, new: u32) -> Self {
        let mut s = self.clone();
        match &mut s {
            Symbol::Classical { id, .. } | Symbol::Virtual { id, .. } => *id = new,
        }
        s
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Classical { id, role, sign } => {
                let r = if *role == Role::Over { 'O' } else { 'U' };
                write!(f, "{r}{}{id}", sign.as_char())
            }
            Symbol::Virtual { id, label, chirality } => write!(f, "V{label}{}{id}", chirality.as_char()),
        }
    }
}

/// Reasons a symbol token is rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    /// Token does not start with `O`, `U` or `V`.
    #[error("symbol must start with O, U or V")]
    Kind,
    /// Missing `+` or `-`.
    #[error("missing sign")]
    Sign,
    /// Virtual symbol without a type label.
    #[error("missing type label")]
    Label,
    /// Id is not a number.
    #[error("bad crossing id")]
    Id,
}

impl FromStr for Symbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let kind = chars.next().ok_or(SymbolError::Kind)?;
        let rest = chars.as_str();
        let pos = rest.rfind(['+', '-']).ok_or(SymbolError::Sign)?;
        let sign = if rest.as_bytes()[pos] == b'+' { Sign::Pos } else { Sign::Neg };
        let head = &rest[..pos];
        let id: u32 = rest[pos + 1..].parse().map_err(|_| SymbolError::Id)?;
        match kind {
            'O' | 'U' if head.is_empty() => {
                let role = if kind == 'O' { Role::Over } else { Role::Under };
                Ok(Symbol::Classical { id, role, sign })
            }
            'O' | 'U' => Err(SymbolError::Sign),
            'V' if head.is_empty() => Err(SymbolError::Label),
            'V' if head.contains(['+', '-']) => Err(SymbolError::Sign),
            'V' => Ok(Symbol::Virtual { id, label: head.to_string(), chirality: sign }),
            _ => Err(SymbolError::Kind),
        }
    }
}

/// Violated diagram invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    /// No components.
    #[error("diagram has no components")]
    NoComponents,
    /// A crossing id does not appear exactly twice.
    #[error("crossing {0} appears {1} times, expected 2")]
    Multiplicity(u32, usize),
    /// Classical crossing without one over and one under passage.
    #[error("classical crossing {0} needs one over and one under passage")]
    Roles(u32),
    /// Classical passages with different signs.
    #[error("classical crossing {0} has passages of different sign")]
    Signs(u32),
    /// Virtual passages with different labels.
    #[error("virtual crossing {0} has passages of different type")]
    Labels(u32),
    /// Virtual passages with equal chirality.
    #[error("virtual crossing {0} needs opposite chiralities")]
    Chirality(u32),
    /// One id used for a classical and a virtual passage.
    #[error("crossing {0} mixes classical and virtual passages")]
    Mixed(u32),
    /// Label missing from the declared alphabet.
    #[error("type {0} is not declared")]
    Undeclared(String),
    /// Label declared twice.
    #[error("type {0} declared twice")]
    DuplicateType(String),
    /// Label contains a character reserved by the grammar.
    #[error("type {0:?} is not a valid label")]
    BadLabel(String),
    /// Label renaming is not injective.
    #[error("relabeling is not injective")]
    NotInjective,
}

/// Position of a passage: component index and index in that component.
pub type Position = (usize, usize);

/// An oriented multi-virtual link diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    types: Vec<String>,
    components: Vec<Vec<Symbol>>,
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && !l.contains(['+', '-', '#']) && !l.chars().any(char::is_whitespace)
}

impl Diagram {
    /// Validated constructor.
    pub fn new(types: Vec<String>, components: Vec<Vec<Symbol>>) -> Result<Self, DiagramError> {
        let d = Self { types, components };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        if self.components.is_empty() {
            return Err(DiagramError::NoComponents);
        }
        let mut declared = BTreeSet::new();
        for t in &self.types {
            if !valid_label(t) {
                return Err(DiagramError::BadLabel(t.clone()));
            }
            if !declared.insert(t.as_str()) {
                return Err(DiagramError::DuplicateType(t.clone()));
            }
        }
        let mut by_id: BTreeMap<u32, Vec<&Symbol>> = BTreeMap::new();
        for s in self.components.iter().flatten() {
            by_id.entry(s.id()).or_default().push(s);
        }
        for (&id, v) in &by_id {
            if v.len() != 2 {
                return Err(DiagramError::Multiplicity(id, v.len()));
            }
            match (v[0], v[1]) {
                (Symbol::Classical { role: r1, sign: s1, .. }, Symbol::Classical { role: r2, sign: s2, .. }) => {
                    if r1 == r2 {
                        return Err(DiagramError::Roles(id));
                    }
                    if s1 != s2 {
                        return Err(DiagramError::Signs(id));
                    }
                }
                (Symbol::Virtual { label: l1, chirality: c1, .. }, Symbol::Virtual { label: l2, chirality: c2, .. }) => {
                    if l1 != l2 {
                        return Err(DiagramError::Labels(id));
                    }
                    if c1 == c2 {
                        return Err(DiagramError::Chirality(id));
                    }
                    if !declared.contains(l1.as_str()) {
                        return Err(DiagramError::Undeclared(l1.clone()));
                    }
                }
                _ => return Err(DiagramError::Mixed(id)),
            }
        }
        Ok(())
    }

    /// Declared type alphabet, in declaration order.
    pub fn types(&self) -> &[String] {
        &self.types
    }

    /// Components.
    pub fn components(&self) -> &[Vec<Symbol>] {
        &self.components
    }

    /// Number of classical crossings.
    pub fn classical_count(&self) -> usize {
        self.components.iter().flatten().filter(|s| s.is_classical()).count() / 2
    }

    /// Number of virtual crossings.
    pub fn virtual_count(&self) -> usize {
        self.components.iter().flatten().filter(|s| !s.is_classical()).count() / 2
    }

    /// Number of semiarcs; an empty component is one closed semiarc.
    pub fn semiarc_count(&self) -> usize {
        self.components.iter().map(|c| c.len().max(1)).sum()
    }

    /// Labels that occur on some virtual crossing, in declaration order.
    pub fn labels_in_use(&self) -> Vec<String> {
        let used: BTreeSet<&str> = self
            .components
            .iter()
            .flatten()
            .filter_map(|s| match s {
                Symbol::Virtual { label, .. } => Some(label.as_str()),
                _ => None,
            })
            .collect();
        self.types.iter().filter(|t| used.contains(t.as_str())).cloned().collect()
    }

    /// Positions of both passages of each crossing, keyed by id.
    pub fn passages(&self) -> BTreeMap<u32, [Position; 2]> {
        let mut m: BTreeMap<u32, Vec<Position>> = BTreeMap::new();
        for (c, comp) in self.components.iter().enumerate() {
            for (i, s) in comp.iter().enumerate() {
                m.entry(s.id()).or_default().push((c, i));
            }
        }
        m.into_iter().map(|(k, v)| (k, [v[0], v[1]])).collect()
    }

    /// Symbol at a position.
    pub fn symbol(&self, p: Position) -> &Symbol {
        &self.components[p.0][p.1]
    }

    /// Smallest id above every id in use.
    pub fn fresh_id(&self) -> u32 {
        self.components.iter().flatten().map(|s| s.id() + 1).max().unwrap_or(1)
    }

    /// All virtual labels replaced by `v`.
    pub fn virtual_projection(&self) -> Self {
        self.project_to("v")
    }

    /// All virtual labels replaced by `label`.
    pub fn project_to(&self, label: &str) -> Self {
        if self.virtual_count() == 0 {
            return self.clone();
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|s| match s {
                        Symbol::Virtual { id, chirality, .. } => Symbol::virt(*id, label, *chirality),
                        other => other.clone(),
                    })
                    .collect()
            })
            .collect();
        let types = alloc::vec![label.to_string()];
        Self { types, components }
    }

    /// Renames labels by `f`; unmapped labels keep their name.
    pub fn retype(&self, f: &BTreeMap<String, String>) -> Result<Self, DiagramError> {
        let map = |l: &String| f.get(l).cloned().unwrap_or_else(|| l.clone());
        let types: Vec<String> = self.types.iter().map(map).collect();
        let distinct: BTreeSet<&String> = types.iter().collect();
        if distinct.len() != types.len() {
            return Err(DiagramError::NotInjective);
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|s| match s {
                        Symbol::Virtual { id, label, chirality } => Symbol::virt(*id, &map(label), *chirality),
                        other => other.clone(),
                    })
                    .collect()
            })
            .collect();
        Self::new(types, components)
    }

    /// Same diagram with a different declared alphabet containing the labels in use.
    pub fn with_types(&self, types: Vec<String>) -> Result<Self, DiagramError> {
        Self::new(types, self.components.clone())
    }

    /// Ids renumbered `1, 2, ..` in order of first appearance.
    pub fn canonical_ids(&self) -> Self {
        let mut map = BTreeMap::new();
        let mut next = 1;
        for s in self.components.iter().flatten() {
            map.entry(s.id()).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        let components = self.components.iter().map(|c| c.iter().map(|s| s.with_id(map[&s.id()])).collect()).collect();
        Self { types: self.types.clone(), components }
    }

    /// Equality up to renaming crossing ids.
    pub fn same_up_to_ids(&self, other: &Self) -> bool {
        self.canonical_ids() == other.canonical_ids()
    }

    pub(crate) fn from_parts_unchecked(types: Vec<String>, components: Vec<Vec<Symbol>>) -> Self {
        Self { types, components }
    }
}

/// Canonical text form: a `types:` header and one `component:` line each.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("types:")?;
        for t in &self.types {
            write!(f, " {t}")?;
        }
        f.write_str("\n")?;
        for c in &self.components {
            f.write_str("component:")?;
            for s in c {
                write!(f, " {s}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Parses a whitespace-separated symbol list.
pub fn parse_symbols(s: &str) -> Result<Vec<Symbol>, SymbolError> {
    s.split_whitespace().map(str::parse).collect()
}
