fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let (code, report) = sing_cli::execute(&argv);
    if sing_cli::wants_json(&argv) && !report.text.starts_with("Usage") {
        println!("{}", report.to_json());
    } else if code == 0 {
        print!("{}", report.text);
    } else {
        eprint!("{}", report.text);
    }
    std::process::exit(code);
}
