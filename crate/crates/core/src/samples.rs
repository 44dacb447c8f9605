//! Small example algebras used across tests, docs and the CLI fixtures.
//!
//! Arrow names are ASCII stand-ins: `a`, `b`, `g`, `d` for alpha, beta,
//! gamma, delta. Relations are written in composition order, so
//! `["b", "a"]` kills "apply a, then b".

use crate::exactlin::Field;
use crate::quiver::{MonomialRelation, PathAlgebra, Quiver};

fn build(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[&[&str]],
    field: Field,
) -> PathAlgebra {
    let quiver = Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(n, f, t)| (n.to_string(), f.to_string(), t.to_string()))
            .collect(),
    )
    .expect("well formed sample quiver");
    let relations = relations
        .iter()
        .map(|w| {
            let word: Vec<String> = w.iter().map(|s| s.to_string()).collect();
            MonomialRelation::from_names(&quiver, &word).expect("well formed sample relation")
        })
        .collect();
    let bound = 2 * arrows.len().max(1) * vertices.len();
    PathAlgebra::build(quiver, relations, field, bound).expect("sample algebra is finite dimensional")
}

/// 3-cycle `1 -a-> 2 -b-> 3 -g-> 1` modulo `b*a`. Dimension 9.
pub fn three_cycle_ba(field: Field) -> PathAlgebra {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("g", "3", "1")],
        &[&["b", "a"]],
        field,
    )
}

/// 3-cycle modulo all length-two compositions. Dimension 6.
pub fn three_cycle_radical_square_zero(field: Field) -> PathAlgebra {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("g", "3", "1")],
        &[&["b", "a"], &["g", "b"], &["a", "g"]],
        field,
    )
}

/// 4-cycle `1 -a-> 2 -b-> 3 -g-> 4 -d-> 1` modulo `b*a` and `d*g`.
/// Dimension 10.
pub fn four_cycle_ba_dg(field: Field) -> PathAlgebra {
    build(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("g", "3", "4"), ("d", "4", "1")],
        &[&["b", "a"], &["d", "g"]],
        field,
    )
}

/// The same 4-cycle modulo the single cubic relation `g*b*a`.
pub fn four_cycle_gba(field: Field) -> PathAlgebra {
    build(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("g", "3", "4"), ("d", "4", "1")],
        &[&["g", "b", "a"]],
        field,
    )
}

/// Triangle quiver `1 -a-> 2 -b-> 3` with a shortcut `g: 1 -> 3`,
/// modulo `b*a`. Dimension 6.
pub fn triangle_ba(field: Field) -> PathAlgebra {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("g", "1", "3")],
        &[&["b", "a"]],
        field,
    )
}

/// Linear quiver `1 -a-> 2 -b-> 3` with no relations; hereditary.
pub fn a3(field: Field) -> PathAlgebra {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3")],
        &[],
        field,
    )
}
