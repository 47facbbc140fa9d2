use clap::Parser;

use detgb::cli::{self, Cli};

fn main() {
    let args = Cli::parse();
    let code = match cli::execute(&args) {
        Ok(report) => {
            let out = report.render(args.format);
            if !out.is_empty() {
                println!("{out}");
            }
            report.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            cli::exit_code(&e)
        }
    };
    std::process::exit(code);
}
