fn main() {
    std::process::exit(grunsky_bounds::cli::run(std::env::args_os()));
}
