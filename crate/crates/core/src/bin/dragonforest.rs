fn main() {
    std::process::exit(dragonforest::cli::main_with_args(std::env::args_os()));
}
