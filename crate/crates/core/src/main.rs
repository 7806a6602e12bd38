fn main() {
    std::process::exit(growthlab::cli::run(std::env::args_os()));
}
