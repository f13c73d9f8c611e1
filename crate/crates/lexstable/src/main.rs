fn main() {
    std::process::exit(lexstable::cli::main(std::env::args_os()));
}
