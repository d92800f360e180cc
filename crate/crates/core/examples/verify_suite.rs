//! Run the verification suite and print one line per check.
//!
//! Usage: `cargo run --release --example verify_suite [--mutate] [D] [check ...]`
//! Without check names every check runs; without `D` each check uses its
//! default bound. `--mutate` perturbs every asserted identity, so the
//! identity checks are expected to fail.

use std::time::Instant;

use qonsager::verify::{CheckName, Verifier};

fn main() {
    let mut args = std::env::args().skip(1).peekable();
    let mutate = args.peek().is_some_and(|a| a == "--mutate");
    if mutate {
        args.next();
    }
    let degree = args.peek().and_then(|a| a.parse::<u32>().ok());
    if degree.is_some() {
        args.next();
    }
    let names: Vec<CheckName> = {
        let given: Vec<String> = args.collect();
        if given.is_empty() {
            CheckName::ALL.to_vec()
        } else {
            given.iter().map(|s| s.parse().expect("known check name")).collect()
        }
    };
    let start = Instant::now();
    let reports = Verifier::new().mutate(mutate).run_suite(&names, degree);
    for r in &reports {
        println!(
            "{:<28} {:<6} D={} H={} {:>7} ms  {}",
            r.check,
            r.status.to_string(),
            r.degree,
            r.headroom,
            r.millis,
            r.presentation
        );
        for w in r.witnesses.iter().take(3) {
            println!("    witness: {} -> {}", w.description, w.normal_form);
        }
        for d in r.details.iter().take(5) {
            println!("    {d}");
        }
    }
    println!("total {:.1} s", start.elapsed().as_secs_f64());
}
