//! Built-in diagrams: the virtual knots with up to three classical crossings
//! used in the worked examples, the `K(n)` family, the `L(i,j)` chains and a
//! pair of two-component links.
//!
//! Type labels default to `α` and `β`. Over passages are placed on the arc
//! that carries their color; their order within an arc does not affect any
//! invariant computed here.

use super::{parse_symbols, Diagram, Sign, Symbol};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Unknown builtin name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown builtin diagram {0:?}")]
pub struct UnknownDiagram(pub String);

const TABLE: &[(&str, &[&str])] = &[
    ("unknot", &[""]),
    ("2_1", &["Vα-3 O-2 U-1 Vα+3 U-2 O-1"]),
    ("3_1", &["Vβ-5 O-1 Vα-4 O-2 U-1 Vβ+5 O-3 Vα+4 U-2 U-3"]),
    ("3_2", &["O-1 Vα+4 O+2 U-1 O-3 U+2 Vα-4 U-3"]),
    ("3_3", &["O-2 Vβ-5 O-1 Vα-4 O-3 U-1 Vβ+5 U-2 Vα+4 U-3"]),
    ("3_4", &["Vα-4 O-2 Vβ-5 O-1 O+3 Vα+4 U-1 Vβ+5 U-2 U+3"]),
    ("3_5", &["O-1 Vβ-5 O-2 Vα-4 O-3 U-1 Vβ+5 U-2 Vα+4 U-3"]),
    ("3_6", &["O-2 U-1 O-3 U-2 O-1 U-3"]),
    ("3_7", &["Vα+4 O+1 Vβ+5 U-2 O-3 Vα-4 U+1 Vβ-5 O-2 U-3"]),
    ("special_pair_left", &["Vα+3 O+1 Vβ+5 U-2", "Vβ-5 Vβ-6 Vα+4 O-2 Vβ+6 Vα-3 Vα-4 U+1"]),
];

/// Names accepted by [`builtin_diagram`], with `K(n)` and `L(i,j)` as patterns.
pub fn builtin_names() -> Vec<String> {
    let mut v: Vec<String> = TABLE.iter().map(|(n, _)| n.to_string()).collect();
    v.push("special_pair_right".into());
    v.push("K(n)".into());
    v.push("L(i,j)".into());
    v
}

/// A builtin with default labels `α`, `β`.
pub fn builtin_diagram(name: &str) -> Result<Diagram, UnknownDiagram> {
    builtin_with_labels(name, "α", "β")
}

/// A builtin with the first and second virtual type renamed.
///
/// `L(i,j)` ignores the labels and uses `node`, `box` and `circle`.
pub fn builtin_with_labels(name: &str, alpha: &str, beta: &str) -> Result<Diagram, UnknownDiagram> {
    let unknown = || UnknownDiagram(name.to_string());
    if let Some(arg) = name.strip_prefix("K(").and_then(|s| s.strip_suffix(')')) {
        let n: usize = arg.trim().parse().map_err(|_| unknown())?;
        return Ok(k_family(n, alpha, beta));
    }
    if let Some(args) = name.strip_prefix("L(").and_then(|s| s.strip_suffix(')')) {
        let mut it = args.split(',').map(|s| s.trim().parse::<usize>());
        return match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) => Ok(l_family(i, j)),
            _ => Err(unknown()),
        };
    }
    let (key, swap) = match name {
        "special_pair_right" => ("special_pair_left", true),
        other => (other, false),
    };
    let (_, comps) = TABLE.iter().find(|(n, _)| *n == key).ok_or_else(unknown)?;
    let (a, b) = if swap { (beta, alpha) } else { (alpha, beta) };
    let components: Vec<Vec<Symbol>> = comps
        .iter()
        .map(|c| {
            let text = c.replace("Vα", "V\u{1}").replace("Vβ", &format!("V{b}")).replace("V\u{1}", &format!("V{a}"));
            parse_symbols(&text).expect("builtin symbols parse")
        })
        .collect();
    let types = if swap { vec![beta.to_string(), alpha.to_string()] } else { vec![alpha.to_string(), beta.to_string()] };
    let d = Diagram::new(types, components).expect("builtin diagrams are valid");
    // Declare only the labels the diagram uses, in α, β order.
    let used = d.labels_in_use();
    let mut types: Vec<String> = [alpha, beta].iter().map(|s| s.to_string()).filter(|t| used.contains(t)).collect();
    if types.is_empty() && d.virtual_count() == 0 {
        types = Vec::new();
    }
    Ok(d.with_types(types).expect("labels in use are declared"))
}

/// `K(n)`: `2n` virtual crossings alternating `α, β` from the left and one
/// positive classical crossing closing the two strands.
///
/// Both strands run right to left through the twist region; the first
/// applies `β` and `α^-1` alternately, the second the inverses.
pub fn k_family(n: usize, alpha: &str, beta: &str) -> Diagram {
    let m = 2 * n;
    // Crossing i counted from the right; the rightmost has type β.
    let label = |i: usize| if i.is_multiple_of(2) { beta } else { alpha };
    let first = |i: usize| if i.is_multiple_of(2) { Sign::Pos } else { Sign::Neg };
    let classical = m as u32 + 1;
    let mut comp = Vec::new();
    for i in 0..m {
        comp.push(Symbol::virt(i as u32 + 1, label(i), first(i)));
    }
    comp.push(Symbol::over(classical, Sign::Pos));
    for i in 0..m {
        comp.push(Symbol::virt(i as u32 + 1, label(i), first(i).flip()));
    }
    comp.push(Symbol::under(classical, Sign::Pos));
    let types = if n == 0 { vec![] } else { vec![alpha.to_string(), beta.to_string()] };
    Diagram::new(types, vec![comp]).expect("K(n) is valid")
}

/// `L(i,j)`: a chain of `i+j+1` loops; consecutive loops meet twice. The
/// first `i` meetings are two `node` crossings, the next `j` a `box` and a
/// `circle` crossing.
pub fn l_family(i: usize, j: usize) -> Diagram {
    let loops = i + j + 1;
    let mut comps: Vec<Vec<Symbol>> = vec![Vec::new(); loops];
    let mut id = 1;
    for k in 0..loops - 1 {
        let (l1, l2) = if k < i { ("node", "node") } else { ("box", "circle") };
        let (p, q) = (id, id + 1);
        id += 2;
        // Loop k passes p then q; loop k+1 passes q then p.
        comps[k].push(Symbol::virt(p, l1, Sign::Pos));
        comps[k].push(Symbol::virt(q, l2, Sign::Neg));
        comps[k + 1].insert(0, Symbol::virt(p, l1, Sign::Neg));
        comps[k + 1].insert(0, Symbol::virt(q, l2, Sign::Pos));
    }
    let mut types = Vec::new();
    if i > 0 {
        types.push("node".to_string());
    }
    if j > 0 {
        types.push("box".to_string());
        types.push("circle".to_string());
    }
    Diagram::new(types, comps).expect("L(i,j) is valid")
}
