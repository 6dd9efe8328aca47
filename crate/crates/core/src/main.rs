fn main() {
    std::process::exit(bilinear_hopf::cli::run(std::env::args_os()));
}
