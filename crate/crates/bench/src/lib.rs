//! Fixtures shared by the benchmarks.

use ncsym::{Composition, SkewDiagram};

/// The ribbon with row lengths `parts`.
pub fn ribbon(parts: &[usize]) -> SkewDiagram {
    let alpha = Composition::new(parts.to_vec()).expect("positive parts");
    SkewDiagram::ribbon_from_composition(&alpha).expect("nonempty")
}

/// The `rows × cols` rectangle, the densest Jacobi–Trudi matrix for its size.
pub fn rectangle(rows: usize, cols: usize) -> SkewDiagram {
    vec![cols.to_string(); rows]
        .join(",")
        .parse()
        .expect("valid rectangle")
}
