fn main() {
    std::process::exit(fibkit_cli::main_impl(std::env::args_os()));
}
