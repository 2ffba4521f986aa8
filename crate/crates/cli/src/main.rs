fn main() {
    std::process::exit(disco_cli::run(std::env::args_os()));
}
