fn main() {
    std::process::exit(hallcpi::cli::main_with_args(std::env::args_os()));
}
