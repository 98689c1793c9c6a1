//! Parse a presentation, abelianize it, and print it back.

use charvar::words::{abelianize, parse_presentation};

const TEXT: &str = "gens: a1@quartic a3@conic
rel: [a3,a1^2]
rel: (a1 a3)^2 = (a3 a1)^2
rel: a3 a1 a3 a1^3";

pub fn main() {
    let p = parse_presentation(TEXT).expect("valid presentation");
    let ab = abelianize(&p);
    println!("{}", p.to_dsl());
    println!("H1: Z^{} + torsion {:?}", ab.rank, ab.torsion);
    for (g, r) in p.generators().iter().zip(0..) {
        println!("{} -> {:?}", g.name, ab.image(&charvar::words::FreeWord::gen(r)));
    }
}
