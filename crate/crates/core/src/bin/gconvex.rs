fn main() {
    std::process::exit(gconvex::cli::run(std::env::args_os()));
}
