//! Times the n! symmetrization against the pattern sum and prints CSV.

use hlgt::cli::bench;

fn main() {
    let rows = bench::run_bench(&[2, 3, 4], 2, 1).unwrap();
    print!("{}", bench::render_table(&rows));
    bench::write_csv(&rows, std::io::stdout()).unwrap();
}
