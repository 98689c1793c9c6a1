//! A presentation from braid monodromy, compared with a hand-simplified one.

use charvar::braid::{parse_monodromy, zvk_presentation, ArtinConvention, BraidWord, braid_act};
use charvar::words::{abelianize, FreeWord};

const MONODROMY: &str = "strands: 3
labels: a1=quartic a2=quartic a3=conic
braid: s2^12
braid: s2^6 * s1
braid: (s2^5 s1) * (s1 s2^2 s1)^-1
braid: s2^2 * s1^2
asymptote 3: conj = a3^(a2 a3 a2 a3 a2 a1)
infinity: 3";

pub fn main() {
    let s1 = BraidWord::parse("s1", 3).unwrap();
    let names: Vec<String> = ["a1", "a2", "a3"].iter().map(|s| s.to_string()).collect();
    for g in 0..3 {
        let img = braid_act(&s1, &FreeWord::gen(g), ArtinConvention::Standard);
        println!("{} -> {}", names[g], img.format_with(&names));
    }
    let m = parse_monodromy(MONODROMY).unwrap();
    let p = zvk_presentation(&m, ArtinConvention::Standard).unwrap();
    let ab = abelianize(&p);
    println!("{} generators, {} relators", p.n_gens(), p.n_rels());
    println!("components {:?}, H1 = Z^{} + {:?}", p.components(), ab.rank, ab.torsion);
}
