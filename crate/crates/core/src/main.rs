fn main() {
    std::process::exit(vardle::cli::run(std::env::args_os()));
}
