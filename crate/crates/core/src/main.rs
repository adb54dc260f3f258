fn main() {
    std::process::exit(aql::cli::run(std::env::args()));
}
