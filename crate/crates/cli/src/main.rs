fn main() {
    std::process::exit(moser_cli::main_with_stdio());
}
