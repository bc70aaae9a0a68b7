//! Raising operators, the closure set Omega(alpha), and the shift identity
//! HL_{phi(lambda)} = t^{l(phi)} HL_lambda.

use hlgt::oracle;
use hlgt::raising;
use hlgt::{Param, Partition, Polynomial};

fn main() {
    let alpha = Partition::from([6, 4, 3, 1]);
    let om = raising::omega_set(&alpha).unwrap();
    println!("Omega{alpha}:");
    for r in &om {
        println!("  {}  length {}", r.result, r.length);
    }

    let lambda = Partition::from([2, 1, 0]);
    let alpha = lambda.plus_rho();
    let hl = oracle::hall_littlewood(&lambda).unwrap();
    for r in &raising::omega_set(&alpha).unwrap() {
        let image = r.result.minus_rho().expect("raised tuple stays nonnegative");
        let lhs = oracle::hall_littlewood(&image).unwrap();
        let rhs = Polynomial::param(3, Param::T).pow(r.length) * &hl;
        assert_eq!(lhs, rhs);
        println!("HL{image} = t^{} * HL{lambda}", r.length);
    }
}
