//! First Betti numbers of abelian covers, by Sakuma's formula and by
//! Reidemeister-Schreier.

use charvar::covers::{abelianization_invariants, b1_branched, b1_unbranched, rs_subgroup, CoverSpec, Transversal};
use charvar::words::parse_presentation;

pub fn main() {
    let base = "gens: e1@conic e2@quartic\nrel: [e2,e1^2]\nrel: (e1 e2)^2 = (e2 e1)^2";
    let curves = [("C1", format!("{base}\nrel: [e1,e2^2]")), ("C2", base.to_string())];
    let covers = ["conic:Z/2", "cover: Z/2 x Z/2 ; map: conic -> (1,0), quartic -> (0,1)", "quartic:Z/4"];
    for (name, text) in &curves {
        let p = parse_presentation(text).unwrap();
        for c in covers {
            let spec: CoverSpec = c.parse().unwrap();
            let formula = b1_unbranched(&p, &spec).unwrap();
            let branched = b1_branched(&p, &spec).unwrap();
            let sp = rs_subgroup(&p, &spec, Transversal::BreadthFirst, 64).unwrap();
            let (b1, torsion) = abelianization_invariants(&sp);
            println!(
                "{name} {spec}: formula {}, RS {b1} torsion {torsion:?}, branched {}",
                formula.b1, branched.b1
            );
        }
    }
}
