//! Monomial sets: coordinate pieces and images under a change of basis of
//! H1.

use charvar::algebra::GaloisField;
use charvar::torus::{coordinate_pieces, parse_map, parse_map_matrix, parse_set};

fn data(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    std::fs::read_to_string(path).unwrap()
}

pub fn main() {
    let t = parse_set(&data("ceva_T.set")).unwrap();
    for r in coordinate_pieces(&t) {
        println!("piece {}: dim {}, coordinate {}", r.piece, r.dimension, r.is_coordinate());
    }
    let text = data("cremona.map");
    match parse_map(&text) {
        Ok(phi) => println!("{}", t.image(&phi).unwrap().to_dsl()),
        Err(e) => {
            println!("as an automorphism: {e}");
            let (_, target, m) = parse_map_matrix(&text).unwrap();
            let pushed = t.substitute(&m, &target);
            print!("{}", pushed.to_dsl());
            let f = GaloisField::new(7).unwrap();
            println!("{} points over F7", pushed.enumerate(&f, 1 << 24).unwrap().len());
        }
    }
}
