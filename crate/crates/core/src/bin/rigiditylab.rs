fn main() {
    std::process::exit(rigiditylab::cli::main_with_args(std::env::args_os()));
}
