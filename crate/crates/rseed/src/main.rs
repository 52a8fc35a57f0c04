fn main() {
    std::process::exit(rseed::cli::main());
}
