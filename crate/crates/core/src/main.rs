fn main() {
    std::process::exit(strand::cli::main_exit_code());
}
