fn main() {
    std::process::exit(borel_cli::cli::main_with(std::env::args_os()));
}
