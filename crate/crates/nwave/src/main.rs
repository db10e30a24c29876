fn main() {
    std::process::exit(nwave::cli::run(std::env::args_os()));
}
