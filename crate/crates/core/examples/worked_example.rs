//! The closed form for lambda = (1,0,0), pattern by pattern, and its match
//! with v_3(x;q) * HL_lambda.

use hlgt::oracle::{self, Deform};
use hlgt::tokuyama;
use hlgt::{Partition, Polynomial};

fn main() {
    let lambda = Partition::from([1, 0, 0]);
    let terms = tokuyama::closed_pattern_terms(&lambda).unwrap();
    let mut total = Polynomial::zero(3);
    for pt in &terms {
        let rows: Vec<String> = pt.row_coefficients.iter().map(|c| format!("({c})")).collect();
        println!(
            "{}  x^{:?}: {}",
            pt.pattern.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join("/"),
            pt.weight,
            rows.join(" * ")
        );
        total = total + pt.to_polynomial();
    }

    let alpha = Partition::from([3, 1, 0]);
    let mu = Partition::from([2, 0]);
    println!("\nM({alpha};{mu}) = {}", tokuyama::det_m(&alpha, &mu).unwrap());
    println!("row coefficient = {}", tokuyama::row_coefficient(&alpha, &mu).unwrap());
    println!("[x1^2 x2 x3] = {}", total.coefficient_of(&[2, 1, 1]).unwrap());

    let expected = oracle::weyl_denominator(3, Deform::Q) * oracle::hall_littlewood(&lambda).unwrap();
    assert_eq!(total, expected);
    println!("sum over {} strict patterns == v_3(x;q) * HL{lambda}", terms.len());
}
