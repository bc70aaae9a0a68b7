//! Runs every identity over all lambda with n <= 3 and lambda_1 <= 2.

use hlgt::cli::verify::{self, Suite};

fn main() {
    let report = verify::run_verify(3, 2, Suite::All);
    print!("{}", report.render_text());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
