fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(maminda::cli::run(&argv));
}
