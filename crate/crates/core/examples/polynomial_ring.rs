//! Exact arithmetic in Z[q,t][x1..xn]: products, permutations, division
//! by x_i - x_j, specialization of q and t.

use hlgt::{Param, Polynomial};

fn main() {
    let n = 3;
    let x = |i| Polynomial::var(n, i);
    let q = Polynomial::param(n, Param::Q);
    let t = Polynomial::param(n, Param::T);

    let f = (&x(1) - &(&q * &x(2))) * (&x(1) + &(&t * &x(3)));
    println!("f           = {f}");
    println!("f(x2,x1,x3) = {}", f.apply_permutation(&[2, 1, 3]).unwrap());
    println!("f|q=1       = {}", f.substitute_param(Param::Q, 1));

    let g = &f * &(&x(1) - &x(3));
    let back = g.exact_divide_binomial(1, 3).unwrap();
    assert_eq!(back, f);
    println!("(f*(x1-x3))/(x1-x3) == f");

    match f.exact_divide_binomial(1, 2) {
        Ok(_) => unreachable!(),
        Err(e) => println!("f/(x1-x2): {e}"),
    }

    let json = f.to_json();
    println!("json        = {json}");
    assert_eq!(Polynomial::from_json(&json).unwrap(), f);
}
