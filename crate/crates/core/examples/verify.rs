//! Run the invariant suite for a few moduli and print one line per check.

use monosurf::io::run_verification;

fn main() -> monosurf::Result<()> {
    let report = run_verification(&[0.3, 0.5, 0.8])?;
    for r in &report.records {
        let status = match (r.pass, r.informational) {
            (true, _) => "pass",
            (false, true) => "note",
            (false, false) => "FAIL",
        };
        println!("{status}  {:<34} k = {:<20} residual {:.2e} (tol {:.0e})", r.name, r.k, r.residual, r.tolerance);
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
