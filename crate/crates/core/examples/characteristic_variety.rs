//! Char*_1 of both curves of the pair over several fields.

use charvar::algebra::GaloisField;
use charvar::charvar::{enumerate_char, torsion_scan, DEFAULT_BUDGET};
use charvar::fox::alexander_matrix;
use charvar::words::parse_presentation;

pub fn main() {
    let base = "gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2";
    let curves = [("C1", format!("{base}\nrel: [e1,e2^2]")), ("C2", base.to_string())];
    for (name, text) in &curves {
        let a = alexander_matrix(&parse_presentation(text).unwrap());
        for q in [2, 3, 4, 5, 7] {
            let f = GaloisField::new(q).unwrap();
            let s = enumerate_char(&f, &a, 1, DEFAULT_BUDGET).unwrap();
            println!("{name} over F{q}: {:?}", s.formatted(&f));
        }
        let (f, s) = torsion_scan(&a, 6, 1, DEFAULT_BUDGET).unwrap();
        println!("{name} 6-torsion: {:?}", s.formatted(&f));
    }
}
