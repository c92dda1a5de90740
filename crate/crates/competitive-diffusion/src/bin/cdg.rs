fn main() {
    std::process::exit(competitive_diffusion::cli::run(std::env::args_os()));
}
