use std::process::ExitCode;

use tauweave::verify::{run_all, VerifyConfig};

fn main() -> ExitCode {
    let results = run_all(&VerifyConfig::default());
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 && results.len() == 9 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
