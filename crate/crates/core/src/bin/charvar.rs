fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(charvar::cli::run(&argv));
}
