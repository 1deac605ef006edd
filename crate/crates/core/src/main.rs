fn main() {
    std::process::exit(burnt_pancake::cli::run(std::env::args_os()));
}
