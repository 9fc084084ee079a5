use gsp4_transfer::cli;

fn main() {
    if let Some(n) = std::env::var(cli::WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    std::process::exit(cli::run(std::env::args_os()));
}
