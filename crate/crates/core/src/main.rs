use certiplot::cli::{self, CliError};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match cli::run(&args) {
        Ok(output) => print!("{output}"),
        Err(CliError::Help(text)) => println!("{text}"),
        Err(err) => {
            eprintln!("{}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
