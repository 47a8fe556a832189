fn main() {
    std::process::exit(zsfree::cli::run(std::env::args_os()));
}
