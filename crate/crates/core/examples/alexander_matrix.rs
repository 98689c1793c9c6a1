//! Fox calculus: the Alexander matrix of a two-component presentation and
//! its deletion.

use charvar::fox::{alexander_matrix, delete_component};
use charvar::words::parse_presentation;

pub fn main() {
    let p = parse_presentation("gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2")
        .expect("valid presentation");
    let a = alexander_matrix(&p);
    let names = a.variable_names();
    let show = |m: &charvar::algebra::PolyMatrix, vars: &[String]| {
        for i in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).format_with(vars)).collect();
            println!("  {:>8} | {}", m.row_labels()[i], row.join(" ; "));
        }
    };
    println!("variables {names:?}");
    show(a.matrix(), &names);
    println!("fundamental identity: {}", a.fundamental_identity_holds());
    let d = delete_component(&a, 1).expect("quartic has a meridian");
    println!("after deleting the quartic:");
    show(d.matrix(), &d.variable_names());
}
