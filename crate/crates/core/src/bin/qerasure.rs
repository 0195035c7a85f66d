fn main() {
    std::process::exit(qudit_erasure::cli::run());
}
