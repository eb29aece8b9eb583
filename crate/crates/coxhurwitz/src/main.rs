fn main() {
    std::process::exit(coxhurwitz::cli::run());
}
