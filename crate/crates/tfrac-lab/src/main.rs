fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(tfrac_lab::cli::run(&argv));
}
