fn main() {
    let out = ffd_cli::run_args(std::env::args_os());
    if out.to_stderr {
        eprint!("{}", out.text);
    } else {
        println!("{}", out.text.trim_end());
    }
    std::process::exit(out.exit_code);
}
