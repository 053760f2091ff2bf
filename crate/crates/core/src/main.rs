fn main() {
    std::process::exit(simplicial_measure::cli::run());
}
