fn main() {
    std::process::exit(trichain::cli::run(std::env::args_os()));
}
