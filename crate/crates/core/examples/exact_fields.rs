//! Exact arithmetic: finite fields, cyclotomic fields and Smith forms over
//! the integers and over K[t, t^-1].

use charvar::algebra::{
    smith_normal_form, CyclotomicField, Field, GaloisField, Integers, LaurentPoly, LaurentRing, Mat,
};
use num_bigint::BigInt;

pub fn main() {
    let f9 = GaloisField::new(9).unwrap();
    let g = f9.generator();
    println!("F9 generator {} of order {:?}", f9.format(&g), f9.multiplicative_order(&g, 8));
    let q6 = CyclotomicField::new(6).unwrap();
    let z = q6.zeta();
    let w = q6.add(&z, &q6.one());
    println!("1/(1+zeta6) = {}", q6.format(&q6.inv(&w).unwrap()));

    let m = Mat::from_rows(4, [[1, 3, 1, 1], [1, 1, 3, 1]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
    println!("integer invariant factors {:?}", smith_normal_form(&Integers, &m).diagonal);

    let ring = LaurentRing::new(CyclotomicField::rationals());
    let t = LaurentPoly::var(1, 0);
    let one = LaurentPoly::one(1);
    let a = &(&t - &one) * &(&t + &one);
    let b = &(&t - &one) * &(&(&t * &t) + &one);
    let lm = Mat::from_rows(2, vec![vec![ring.from_laurent(&a), ring.from_laurent(&b)]]);
    let d = smith_normal_form(&ring, &lm).diagonal;
    println!("Laurent invariant factors {:?}", d.iter().map(|x| ring.format(x)).collect::<Vec<_>>());
}
