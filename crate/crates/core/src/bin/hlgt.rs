fn main() {
    std::process::exit(hlgt::cli::run(std::env::args_os()));
}
