fn main() {
    std::process::exit(skeinkit::cli::run(std::env::args_os()));
}
