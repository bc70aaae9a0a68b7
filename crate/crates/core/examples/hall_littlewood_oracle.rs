//! Brute-force symmetrization: Schur, Hall-Littlewood and monomial symmetric
//! polynomials, and the specializations linking them.

use hlgt::oracle;
use hlgt::{Param, Partition};

fn main() {
    for lambda in [Partition::from([2, 1]), Partition::from([1, 1, 0]), Partition::from([2, 0, 0])] {
        let hl = oracle::hall_littlewood(&lambda).unwrap();
        let s = oracle::schur(&lambda).unwrap();
        let m = oracle::monomial_symmetric(&lambda).unwrap();
        println!("HL{lambda} = {hl}");
        println!("  s  = {s}");
        println!("  m  = {m}");
        assert_eq!(hl.substitute_param(Param::T, 0), s);
        assert_eq!(hl.substitute_param(Param::T, 1), m);
    }
    // non-monotone tuples are allowed
    println!("HL(0,1) = {}", oracle::hall_littlewood(&Partition::from([0, 1])).unwrap());
}
