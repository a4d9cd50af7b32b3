use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wqo_lab::config::BIT_BUDGET_ENV;
use wqo_lab::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var(BIT_BUDGET_ENV).ok();
    let outcome = cli.global.resolve(env.as_deref()).and_then(|cfg| Ok((run(&cli.command, &cfg)?, cfg)));
    match outcome {
        Ok((report, cfg)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cfg.format).as_bytes());
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("wqo: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}
