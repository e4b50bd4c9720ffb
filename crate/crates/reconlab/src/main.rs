fn main() {
    let (code, report) = reconlab::cli::run_command(std::env::args());
    print!("{report}");
    std::process::exit(code);
}
