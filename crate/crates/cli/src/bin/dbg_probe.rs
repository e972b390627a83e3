// scratch: probe benchmark cells for timing
use std::time::Instant;

use loopinv::*;

fn run_cell(name: &str, src: &str, d: u32, timeout: u64) {
    let spec = parse_loop(src).unwrap();
    let cfg = Config::with_timeout_secs(timeout);
    let t0 = Instant::now();
    match truncated_invariant_ideal(&spec, d, None, &cfg) {
        Ok(basis) => println!(
            "{name} d={d}: dim={} rows={} batch={} prov={:?}  [{:?}]",
            basis.dimension,
            basis.stats.orbit_rows_used,
            basis.stats.batch_verified,
            basis.provenance,
            t0.elapsed()
        ),
        Err(Error::Resource(e)) => println!(
            "{name} d={d}: RESOURCE {:?} in {} ({} partial)  [{:?}]",
            e.kind,
            e.phase,
            e.partial.len(),
            t0.elapsed()
        ),
        Err(e) => println!("{name} d={d}: ERROR {e}  [{:?}]", t0.elapsed()),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("fast");
    let fib1 = "vars: x1, x2, x3\ninit: 2, 1, 1\nguard: true\nbody: x1 <- x2; x2 <- x3; x3 <- 2*x2*x3 - x1";
    let fib2 = "vars: x1, x2, x3\ninit: 3, -2, 1\nguard: true\nbody: x1 <- x2; x2 <- 2*x1*x3 - x2; x3 <- 4*x1*x2*x3 - 2*x1^2 - 2*x2^2 + 1";
    let fib3 = "vars: x1, x2, x3\ninit: 2, -1, 1\nguard: true\nbody: x1 <- 1 + x1 + x2 + x1*x2 - x3; x2 <- x1; x3 <- x2";
    let squares = "vars: x1, x2, x3\ninit: -1, -1, 1\nguard: true\nbody: x1 <- 2*x1 + x2^2 + x3; x2 <- 2*x2 - x2^2 + 2*x3; x3 <- 1 - x3";
    let nagata = "vars: x1, x2, x3\ninit: 3, -2, 5\nguard: true\nbody: x1 <- x1 - 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3; x2 <- x2 + (x1*x3 + x2^2)*x3; x3 <- x3";
    let ex9 = "vars: x1, x2, x3\ninit: 3, -1, 2\nguard: true\nbody: x1 <- x1 + x3^2 + 1; x2 <- x2 - x3^2; x3 <- x3 + (x1 + x2)^2";
    let ex10 = "vars: x1, x2, x3\ninit: -1, 2, 1\nguard: true\nbody: x1 <- 10*x1 - 8*x3 + (x1 + x2)^2; x2 <- 2*x2 - (x1 + x2)^2; x3 <- 6*x1 - 4*x3 + (x1 + x2)^2";
    let yag9 = "vars: x1, x2, x3, x4, x5, x6, x7, x8, x9\ninit: 2, -3, 1, 4, -1, 7, -4, 3, 2\nguard: true\nbody: x1 <- x1 + x1*x7*x9 + x2*x9^2; x2 <- x2 - x1*x7^2 - x2*x7*x9; x3 <- x3 + x3*x7*x9 + x4*x9^2; x4 <- x4 - x3*x7^2 - x4*x7*x9; x5 <- x5 + x5*x7*x9 + x6*x9^2; x6 <- x6 - x5*x7^2 - x6*x7*x9; x7 <- x7 + (x1*x4 - x2*x3)*x9; x8 <- x8 + (x3*x6 - x4*x5)*x9; x9 <- x9 + (x1*x4 - x2*x3)*x8 - (x3*x6 + x4*x5)*x7";
    let yag11 = "vars: x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11\ninit: 3, -1, 2, 1, -5, -1, 3, 4, -1, 3, 2\nguard: true\nbody: x1 <- x1 - x3*x10^2; x2 <- x2 - x3*x11^2; x3 <- x3 + x1*x11^2 - x2*x10^2; x4 <- x4 - x6*x10^2; x5 <- x5 - x6*x11^2; x6 <- x6 + x4*x11^2 - x5*x10^2; x7 <- x7 - x9*x10^2; x8 <- x8 - x9*x11^2; x9 <- x9 + x7*x11^2 - x8*x10^2; x10 <- x10 - (x1*x5*x9 - x1*x6*x8 - x2*x4*x9 + x2*x6*x7 + x3*x4*x8 - x3*x5*x7); x11 <- x11 - x10^3";

    match which {
        "fast" => {
            for d in 1..=4 {
                run_cell("nagata", nagata, d, 60);
            }
            for d in 1..=4 {
                run_cell("ex9", ex9, d, 60);
            }
            for d in 1..=4 {
                run_cell("ex10", ex10, d, 60);
            }
            for d in 1..=4 {
                run_cell("squares", squares, d, 120);
            }
        }
        "fib" => {
            for d in 1..=3 {
                run_cell("fib1", fib1, d, 60);
                run_cell("fib2", fib2, d, 600);
                run_cell("fib3", fib3, d, 60);
            }
        }
        "fib4" => {
            run_cell("fib1", fib1, 4, 600);
            run_cell("fib3", fib3, 4, 600);
        }
        "yag" => {
            run_cell("yag9", yag9, 1, 600);
            run_cell("yag11", yag11, 1, 600);
            run_cell("yag11", yag11, 2, 600);
        }
        "tl" => {
            run_cell("fib2", fib2, 4, 30);
            run_cell("yag9", yag9, 2, 30);
            run_cell("yag11", yag11, 3, 30);
        }
        _ => eprintln!("unknown probe set"),
    }
}
