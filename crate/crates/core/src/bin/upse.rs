fn main() {
    std::process::exit(upse::cli::run(std::env::args_os()));
}
