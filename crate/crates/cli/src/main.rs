fn main() {
    std::process::exit(tricurves_cli::main_with_env());
}
