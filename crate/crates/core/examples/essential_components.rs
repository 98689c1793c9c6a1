//! Coordinate and essential labels through deletion.

use charvar::algebra::GaloisField;
use charvar::charvar::{classify, enumerate_char, has_essential_coordinate, DEFAULT_BUDGET};
use charvar::fox::alexander_matrix;
use charvar::words::parse_presentation;

pub fn main() {
    let p = parse_presentation("gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2").unwrap();
    let a = alexander_matrix(&p);
    let f = GaloisField::new(5).unwrap();
    let slice = enumerate_char(&f, &a, 1, DEFAULT_BUDGET).unwrap();
    for c in classify(&f, &a, &slice).unwrap() {
        println!(
            "{:?}: coordinate {} (trivial on {:?}), essential {}",
            c.point.format(&f),
            c.is_coordinate,
            c.vanishing,
            c.is_essential
        );
    }
    for (i, comp) in p.components().iter().enumerate() {
        let (has, w) = has_essential_coordinate(&f, &a, i, 1, DEFAULT_BUDGET).unwrap();
        let pts: Vec<_> = w.iter().map(|x| x.format(&f)).collect();
        println!("{comp}: essential coordinate points {has} {pts:?}");
    }
}
