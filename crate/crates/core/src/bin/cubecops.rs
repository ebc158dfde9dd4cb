fn main() {
    std::process::exit(cubecops::cli::main());
}
