fn main() {
    std::process::exit(wallcount::cli::main_with_args(std::env::args_os()));
}
